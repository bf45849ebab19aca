//! Named example games and the search for disjoint-union witnesses.
//!
//! In a union of one-color gadgets the players take turns destroying each
//! other's gadget. With `W_2` for Left and `W_3` for Right and Right to
//! move, Right must spend the first move on Left's hub, since Left would
//! otherwise open two threats at once; Left then kills Right's hub and the
//! game is drawn.
//!
//! ```
//! use apg_core::gadgets::w_k;
//! use apg_core::{disjoint_union, GameResult, Player, Solver};
//!
//! let (g, renames) = disjoint_union(&w_k(2, Player::Left)?, &w_k(3, Player::Right)?)?;
//! assert_eq!(renames[0], ("u".to_string(), "u#2".to_string()));
//! let trace = Solver::default().self_play(&g, Player::Right)?;
//! assert_eq!(trace.steps[0].name, "u");
//! assert_eq!(trace.steps[1].name, "u#2");
//! assert_eq!(trace.result(), GameResult::Draw);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

use rayon::prelude::*;
use thiserror::Error;

use crate::game::{disjoint_union, Game, Player};
use crate::outcome::Outcome;
use crate::random::{random_game, rng_for, GameShape};
use crate::solver::Solver;
use crate::vertex_set::VertexSet;

/// Largest `k` accepted by [`w_k`]; the edge count is `C(2k-2, k-1)`.
pub const MAX_K: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("k must be at least 1")]
    KZero,
    #[error("k = {0} exceeds the limit of {MAX_K}")]
    KTooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    Butterfly,
    Wk,
    OutcomeExemplar,
}

/// Description of a generated gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetSpec {
    pub kind: GadgetKind,
    /// Owner of the edges (Left means blue).
    pub color: Player,
    pub k: usize,
    pub target: Outcome,
}

impl GadgetSpec {
    pub fn build(&self) -> Result<Game, GadgetError> {
        match self.kind {
            GadgetKind::Butterfly => Ok(butterfly(self.color)),
            GadgetKind::Wk => w_k(self.k, self.color),
            GadgetKind::OutcomeExemplar => Ok(outcome_exemplar(self.target)),
        }
    }
}

fn one_color(names: Vec<String>, edges: Vec<VertexSet>, color: Player) -> Game {
    let (blue, red) = match color {
        Player::Left => (edges, Vec::new()),
        Player::Right => (Vec::new(), edges),
    };
    Game::from_sets(names, blue, red).expect("gadget edges are valid")
}

/// Vertex names of the butterfly, hub first.
pub const BUTTERFLY_NAMES: [&str; 7] = ["alpha", "beta1", "beta2", "gamma1", "gamma2", "gamma3", "gamma4"];

/// Four triples through a hub `alpha`, two per wing `beta1`/`beta2`. The
/// owner wins in three moves going first; one opposing pick at `alpha`
/// destroys it.
pub fn butterfly(color: Player) -> Game {
    let names = BUTTERFLY_NAMES.iter().map(|s| s.to_string()).collect();
    let set = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
    let edges = vec![set(&[0, 1, 3]), set(&[0, 1, 4]), set(&[0, 2, 5]), set(&[0, 2, 6])];
    one_color(names, edges, color)
}

/// Hub `u` plus `2k-2` vertices; the edges are `u` with every
/// `(k-1)`-subset of the others. The owner needs exactly `k` moves.
pub fn w_k(k: usize, color: Player) -> Result<Game, GadgetError> {
    if k == 0 {
        return Err(GadgetError::KZero);
    }
    if k > MAX_K {
        return Err(GadgetError::KTooLarge(k));
    }
    let m = 2 * k - 2;
    let mut names = vec!["u".to_string()];
    names.extend((1..=m).map(|i| format!("v{i}")));
    let edges = (0u32..1 << m)
        .filter(|s| s.count_ones() as usize == k - 1)
        .map(|s| VertexSet((s as u128) << 1).with(0))
        .collect();
    Ok(one_color(names, edges, color))
}

/// A fixed small game with the given outcome.
pub fn outcome_exemplar(target: Outcome) -> Game {
    let g = |v: &[&str], blue: &[&[&str]], red: &[&[&str]]| Game::from_names(v, blue, red).expect("valid");
    match target {
        Outcome::L => g(&["a", "b"], &[&["a"], &["b"]], &[]),
        Outcome::LMinus => g(&["a"], &[&["a"]], &[]),
        Outcome::N => g(&["a"], &[&["a"]], &[&["a"]]),
        Outcome::D => g(&["a"], &[], &[]),
        Outcome::RMinus => outcome_exemplar(Outcome::LMinus).swap_colors(),
        Outcome::R => outcome_exemplar(Outcome::L).swap_colors(),
    }
}

/// Looks for games `G`, `G'` with outcomes `o`, `o_prime` whose disjoint
/// union has outcome `target`. Candidates are the exemplars, butterflies,
/// small `W_k`, and `budget` seeded random games on at most 6 vertices.
pub fn union_witness_search(
    o: Outcome,
    o_prime: Outcome,
    target: Outcome,
    budget: usize,
    seed: u64,
) -> Option<(Game, Game)> {
    let mut pool: Vec<Game> = Outcome::ALL.iter().map(|&t| outcome_exemplar(t)).collect();
    for color in [Player::Left, Player::Right] {
        pool.push(butterfly(color));
        for k in 1..=4 {
            pool.push(w_k(k, color).expect("k in range"));
        }
    }
    let shape = GameShape::new(6, 3).max_edges(6);
    pool.extend((0..budget as u64).map(|i| random_game(&mut rng_for(seed, i), &shape)));

    let outcomes: Vec<Option<Outcome>> = pool.par_iter().map_init(Solver::default, |s, g| s.outcome(g).ok()).collect();
    let of = |want: Outcome| -> Vec<&Game> {
        pool.iter().zip(&outcomes).filter(|(_, &got)| got == Some(want)).map(|(g, _)| g).collect()
    };
    let (left, right) = (of(o), of(o_prime));
    let pairs: Vec<(&Game, &Game)> =
        left.iter().flat_map(|&a| right.iter().map(move |&b| (a, b))).take(budget.max(64) * 16).collect();
    pairs
        .par_iter()
        .map_init(Solver::default, |s, &(a, b)| {
            let (u, _) = disjoint_union(a, b).ok()?;
            (s.outcome(&u).ok()? == target).then(|| (a.clone(), b.clone()))
        })
        .find_first(|hit| hit.is_some())
        .flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outcome::verify_union_cell;

    #[test]
    fn w_k_sizes() {
        for k in 1..=5 {
            let g = w_k(k, Player::Left).unwrap();
            assert_eq!(g.num_vertices(), 2 * k - 1);
            assert!(g.blue().iter().all(|e| e.len() == k && e.contains(0)));
        }
        assert_eq!(w_k(2, Player::Left).unwrap().blue().len(), 2);
        assert_eq!(w_k(3, Player::Left).unwrap().blue().len(), 6);
        assert_eq!(w_k(0, Player::Left), Err(GadgetError::KZero));
        assert_eq!(w_k(9, Player::Left), Err(GadgetError::KTooLarge(9)));
    }

    #[test]
    fn exemplars_have_their_outcomes() {
        let mut s = Solver::default();
        for o in Outcome::ALL {
            assert_eq!(s.outcome(&outcome_exemplar(o)).unwrap(), o);
        }
        assert_eq!(s.outcome(&butterfly(Player::Left)).unwrap(), Outcome::LMinus);
        assert_eq!(s.outcome(&butterfly(Player::Right)).unwrap(), Outcome::RMinus);
        assert_eq!(s.outcome(&w_k(2, Player::Left).unwrap()).unwrap(), Outcome::LMinus);
    }

    #[test]
    fn witnesses_for_small_cells() {
        let (a, b) = union_witness_search(Outcome::L, Outcome::D, Outcome::L, 0, 1).unwrap();
        let mut s = Solver::default();
        assert_eq!(s.outcome(&a).unwrap(), Outcome::L);
        assert_eq!(s.outcome(&b).unwrap(), Outcome::D);
        let (a, b) = union_witness_search(Outcome::L, Outcome::R, Outcome::N, 0, 1).unwrap();
        let (u, _) = disjoint_union(&a, &b).unwrap();
        assert!(verify_union_cell(Outcome::L, Outcome::R, s.outcome(&u).unwrap()));
    }
}
