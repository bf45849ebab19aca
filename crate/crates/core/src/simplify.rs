//! Structural simplifications that preserve or bound the outcome: twin
//! removal, dominated moves and greedy moves.

use crate::game::{Game, Player};
use crate::vertex_set::VertexSet;

/// For every vertex, the set of edges (blue then red) that contain it.
struct Incidence {
    words: usize,
    rows: Vec<u64>,
    units: VertexSet,
}

impl Incidence {
    fn of(game: &Game) -> Incidence {
        let edges: Vec<VertexSet> = game.blue().iter().chain(game.red()).copied().collect();
        let words = edges.len().div_ceil(64).max(1);
        let n = game.num_vertices();
        let mut rows = vec![0u64; n * words];
        let mut units = VertexSet::EMPTY;
        for (i, e) in edges.iter().enumerate() {
            if e.len() == 1 {
                units = units.union(*e);
            }
            for v in e.iter() {
                rows[v * words + i / 64] |= 1 << (i % 64);
            }
        }
        Incidence { words, rows, units }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Every edge containing `u` also contains `v`.
    fn implies(&self, u: usize, v: usize) -> bool {
        self.row(u).iter().zip(self.row(v)).all(|(a, b)| a & !b == 0)
    }

    fn same(&self, u: usize, v: usize) -> bool {
        self.row(u) == self.row(v)
    }
}

/// One removed twin pair: Left was credited with the first vertex and Right
/// with the second.
pub type TwinStep = (String, String);

/// Repeatedly removes twin pairs (vertices with identical edge membership,
/// neither a unit edge) by crediting one to each player. Vertices in no edge
/// are mutual twins, so they disappear in pairs; an odd one is kept.
pub fn twin_reduce(game: &Game) -> (Game, Vec<TwinStep>) {
    let mut g = game.clone();
    let mut log = Vec::new();
    while let Some((u, v)) = find_twins(&g) {
        log.push((g.name(u).to_string(), g.name(v).to_string()));
        g = g
            .update(VertexSet::singleton(u), VertexSet::singleton(v))
            .expect("twins are never unit edges, so no edge is filled");
    }
    (g, log)
}

/// Lowest pair `u < v` of twins, if any.
pub fn find_twins(game: &Game) -> Option<(usize, usize)> {
    let inc = Incidence::of(game);
    let n = game.num_vertices();
    for u in 0..n {
        if inc.units.contains(u) {
            continue;
        }
        for v in u + 1..n {
            if !inc.units.contains(v) && inc.same(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Vertices `u` for which some other `v` (neither in a unit edge) lies in
/// every edge containing `u`. For either mover, picking `v` is at least as
/// good as picking `u`. Twins dominate each other, so both are reported;
/// see [`undominated_moves`] for a safe pruning set.
pub fn dominated_moves(game: &Game, _mover: Player) -> VertexSet {
    let inc = Incidence::of(game);
    let n = game.num_vertices();
    let mut out = VertexSet::EMPTY;
    for u in 0..n {
        if inc.units.contains(u) {
            continue;
        }
        if (0..n).any(|v| v != u && !inc.units.contains(v) && inc.implies(u, v)) {
            out.insert(u);
        }
    }
    out
}

/// Vertices that survive dominance pruning: a vertex is dropped when a
/// strictly dominating vertex exists, or a twin with a lower index.
pub fn undominated_moves(game: &Game) -> VertexSet {
    let inc = Incidence::of(game);
    let n = game.num_vertices();
    let mut keep = VertexSet::full(n);
    for u in 0..n {
        if inc.units.contains(u) {
            continue;
        }
        let pruned =
            (0..n).any(|v| v != u && !inc.units.contains(v) && inc.implies(u, v) && (!inc.implies(v, u) || v < u));
        if pruned {
            keep.remove(u);
        }
    }
    keep
}

/// All greedy openings `(v, u)` for `player`: an edge `{u, v}` of the
/// player's color such that every edge containing `u` contains `v`. Picking
/// `v` forces the opponent to answer `u`. Empty when any unit edge exists.
pub fn greedy_moves(game: &Game, player: Player) -> Vec<(usize, usize)> {
    if game.blue().iter().chain(game.red()).any(|e| e.len() == 1) {
        return Vec::new();
    }
    let inc = Incidence::of(game);
    let mut out = Vec::new();
    for e in game.edges(player).iter().filter(|e| e.len() == 2) {
        let a = e.first().expect("size 2");
        let b = e.without(a).first().expect("size 2");
        for (u, v) in [(a, b), (b, a)] {
            if inc.implies(u, v) {
                out.push((v, u));
            }
        }
    }
    out
}

/// First greedy opening for `player`, if any.
pub fn greedy_move(game: &Game, player: Player) -> Option<(usize, usize)> {
    greedy_moves(game, player).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: &[&str], blue: &[&[&str]], red: &[&[&str]]) -> Game {
        Game::from_names(v, blue, red).unwrap()
    }

    #[test]
    fn dead_vertices_vanish_in_pairs() {
        let game = g(&["a", "b", "c", "d"], &[&["a", "b"]], &[]);
        let (reduced, log) = twin_reduce(&game);
        // a and b are twins too, so everything goes
        assert_eq!(log[0], ("a".to_string(), "b".to_string()));
        assert_eq!(log.len(), 2);
        assert_eq!(reduced.num_vertices(), 0);

        let odd = g(&["a", "b", "c"], &[&["a"]], &[]);
        let (reduced, log) = twin_reduce(&odd);
        assert_eq!(log, vec![("b".to_string(), "c".to_string())]);
        assert_eq!(reduced, g(&["a"], &[&["a"]], &[]));

        let lone = g(&["a", "b", "c", "d", "e"], &[&["a"]], &[&["b"]]);
        let (reduced, _) = twin_reduce(&lone);
        assert_eq!(reduced.num_vertices(), 3);
    }

    #[test]
    fn shared_pair_of_two_edges_is_removed() {
        let game = g(&["a", "b", "x", "y"], &[&["a", "b", "x"], &["a", "b", "y"]], &[]);
        let (reduced, log) = twin_reduce(&game);
        assert_eq!(log[0], ("a".to_string(), "b".to_string()));
        // removing a,b kills both blue edges, leaving x,y dead twins
        assert_eq!(reduced.num_vertices(), 0);
    }

    #[test]
    fn dominance_examples() {
        let game = g(&["a", "b", "c"], &[&["a", "b"]], &[]);
        assert!(dominated_moves(&game, Player::Left).contains(2));

        let game = g(&["a", "b", "c"], &[&["a", "b"], &["a", "c"]], &[]);
        let d = dominated_moves(&game, Player::Left);
        assert!(d.contains(1) && d.contains(2) && !d.contains(0));
        assert_eq!(undominated_moves(&game), VertexSet::singleton(0));

        let bf = g(
            &["alpha", "beta1", "beta2", "gamma1", "gamma2", "gamma3", "gamma4"],
            &[
                &["alpha", "beta1", "gamma1"],
                &["alpha", "beta1", "gamma2"],
                &["alpha", "beta2", "gamma3"],
                &["alpha", "beta2", "gamma4"],
            ],
            &[],
        );
        let d = dominated_moves(&bf, Player::Right);
        assert!(d.contains(1));
        assert!(!d.contains(0));
        assert_eq!(undominated_moves(&bf), VertexSet::singleton(0));
    }

    #[test]
    fn unit_edge_vertices_are_never_dominated() {
        let game = g(&["a", "b"], &[&["a"], &["a", "b"]], &[]);
        let d = dominated_moves(&game, Player::Left);
        assert!(!d.contains(0));
        assert!(undominated_moves(&game).contains(0));
    }

    #[test]
    fn greedy_examples() {
        let game = g(&["u", "v"], &[&["u", "v"]], &[]);
        // both orientations qualify; the first scanned is (v, u)
        assert_eq!(greedy_move(&game, Player::Left), Some((1, 0)));
        let game = g(&["u", "v", "w"], &[&["u", "v"]], &[&["u", "w"]]);
        assert_eq!(greedy_moves(&game, Player::Left), vec![(0, 1)]);
        assert!(!greedy_moves(&game, Player::Left).contains(&(1, 0)));
        let unit = g(&["u", "v"], &[&["u", "v"], &["u"]], &[]);
        assert_eq!(greedy_move(&unit, Player::Left), None);
    }
}
