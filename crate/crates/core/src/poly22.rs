//! Polynomial decision procedure for games whose edges all have at most two
//! vertices. Each question "does Left win when X moves first" is settled by
//! forced-move preprocessing of unit edges followed by a structural test on
//! the blue and red graphs; the full value comes from asking it for both
//! colors.

use thiserror::Error;

use crate::game::{Game, Player};
use crate::outcome::GameResult;
use crate::solver::iter_bits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Poly22Error {
    #[error("{player} has an edge of size {size}; every edge must have at most 2 vertices")]
    EdgeTooLarge { player: Player, size: usize },
    #[error("invalid type-3 path: {0}")]
    InvalidPath(String),
}

#[inline]
fn bit(v: usize) -> u128 {
    1u128 << v
}

/// Blue and red graphs over the live vertices, as adjacency masks indexed by
/// the original vertex numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph2 {
    alive: u128,
    blue: Vec<u128>,
    red: Vec<u128>,
}

impl Graph2 {
    /// Graph of a unit-free game whose edges all have exactly two vertices.
    pub(crate) fn from_edges(n: usize, alive: u128, blue: &[u128], red: &[u128]) -> Graph2 {
        let adj = |edges: &[u128]| {
            let mut out = vec![0u128; n];
            for &e in edges {
                debug_assert_eq!(e.count_ones(), 2);
                let a = e.trailing_zeros() as usize;
                let b = (e & !bit(a)).trailing_zeros() as usize;
                out[a] |= bit(b);
                out[b] |= bit(a);
            }
            out
        };
        Graph2 { alive, blue: adj(blue), red: adj(red) }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        iter_bits(self.alive)
    }

    pub fn is_empty(&self) -> bool {
        self.alive == 0
    }

    pub fn blue_neighbors(&self, v: usize) -> u128 {
        self.blue[v] & self.alive
    }

    pub fn red_neighbors(&self, v: usize) -> u128 {
        self.red[v] & self.alive
    }

    /// Two blue edges share a vertex.
    pub fn has_blue_p3(&self) -> bool {
        self.vertices().any(|v| self.blue_neighbors(v).count_ones() >= 2)
    }

    pub fn has_red_p3(&self) -> bool {
        self.vertices().any(|v| self.red_neighbors(v).count_ones() >= 2)
    }

    /// Blue P3 avoiding every vertex of `removed`.
    pub fn has_blue_p3_without(&self, removed: u128) -> bool {
        let alive = self.alive & !removed;
        iter_bits(alive).any(|v| (self.blue[v] & alive).count_ones() >= 2)
    }

    /// Deletes vertices together with every edge touching them.
    pub fn remove(&self, set: u128) -> Graph2 {
        Graph2 { alive: self.alive & !set, blue: self.blue.clone(), red: self.red.clone() }
    }

    /// Same graph with the colors exchanged.
    pub fn swapped(&self) -> Graph2 {
        Graph2 { alive: self.alive, blue: self.red.clone(), red: self.blue.clone() }
    }
}

/// Result of unit-edge preprocessing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preprocessed {
    Decided(GameResult),
    /// No unit edges remain; `to_move` plays next on `graph`.
    Reduced {
        graph: Graph2,
        to_move: Player,
    },
}

fn check_sizes(game: &Game) -> Result<(), Poly22Error> {
    for player in [Player::Left, Player::Right] {
        let size = game.max_edge(player);
        if size > 2 {
            return Err(Poly22Error::EdgeTooLarge { player, size });
        }
    }
    Ok(())
}

/// Plays out unit-edge consequences: a unit edge of the mover wins, two
/// opposing unit edges lose, a single opposing one forces the block.
pub fn preprocess_units(game: &Game, first: Player) -> Result<Preprocessed, Poly22Error> {
    check_sizes(game)?;
    let mut blue: Vec<u128> = game.blue().iter().map(|e| e.bits()).collect();
    let mut red: Vec<u128> = game.red().iter().map(|e| e.bits()).collect();
    let mut free = game.vertex_set().bits();
    let mut mover = first;
    loop {
        let (own, opp) = match mover {
            Player::Left => (&blue, &red),
            Player::Right => (&red, &blue),
        };
        if own.iter().any(|e| e.count_ones() == 1) {
            return Ok(Preprocessed::Decided(GameResult::win_for(mover)));
        }
        let threats = opp.iter().filter(|e| e.count_ones() == 1).fold(0u128, |a, e| a | e);
        if threats.count_ones() >= 2 {
            return Ok(Preprocessed::Decided(GameResult::win_for(mover.opponent())));
        }
        if free == 0 {
            return Ok(Preprocessed::Decided(GameResult::Draw));
        }
        if threats == 0 {
            break;
        }
        let b = threats;
        let (own, opp) = match mover {
            Player::Left => (&mut blue, &mut red),
            Player::Right => (&mut red, &mut blue),
        };
        for e in own.iter_mut() {
            *e &= !b;
        }
        opp.retain(|e| e & b == 0);
        free &= !b;
        mover = mover.opponent();
    }
    Ok(Preprocessed::Reduced { graph: Graph2::from_edges(game.num_vertices(), free, &blue, &red), to_move: mover })
}

/// Left to move on a unit-free graph: Left wins exactly when some blue P3
/// exists; otherwise Right holds a pairing on the blue matching.
pub fn left_to_move_rule(g: &Graph2) -> bool {
    g.has_blue_p3()
}

/// What Right's first pick triggers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexType {
    /// The forced sequence along `path` ends with Left threatening both the
    /// last path vertex and `extra`.
    Type1 { path: Vec<usize>, extra: usize },
    /// The maximal alternating path has odd length; Right picks its end.
    Type2 { path: Vec<usize> },
    /// The maximal alternating path has even length; Left picks its end.
    Type3 { path: Vec<usize> },
}

impl VertexType {
    pub fn path(&self) -> &[usize] {
        match self {
            VertexType::Type1 { path, .. } | VertexType::Type2 { path } | VertexType::Type3 { path } => path,
        }
    }
}

/// Walks the alternating path from `u`: red matching edges from odd
/// positions, the unique off-path blue edge from even positions. Requires a
/// unit-free graph whose red edges form a matching.
pub fn classify(g: &Graph2, u: usize) -> VertexType {
    debug_assert!(!g.has_red_p3());
    let mut path = vec![u];
    let mut on = bit(u);
    loop {
        let last = *path.last().expect("nonempty");
        if path.len() % 2 == 1 {
            let partner = g.red_neighbors(last) & !on;
            if partner == 0 {
                return VertexType::Type2 { path };
            }
            let next = partner.trailing_zeros() as usize;
            path.push(next);
            on |= bit(next);
        } else {
            let off = g.blue_neighbors(last) & !on;
            match off.count_ones() {
                0 => return VertexType::Type3 { path },
                1 => {
                    let next = off.trailing_zeros() as usize;
                    path.push(next);
                    on |= bit(next);
                }
                _ => {
                    let next = off.trailing_zeros() as usize;
                    let extra = (off & !bit(next)).trailing_zeros() as usize;
                    path.push(next);
                    return VertexType::Type1 { path, extra };
                }
            }
        }
    }
}

/// Deletes a type-3 path: Right's picks at odd positions kill every blue
/// edge it touches, and every red edge it touches lies on it.
pub fn reduce_type3(g: &Graph2, path: &[usize]) -> Result<Graph2, Poly22Error> {
    if path.is_empty() || path.len() % 2 == 1 {
        return Err(Poly22Error::InvalidPath(format!("length {} is not even", path.len())));
    }
    let all: u128 = path.iter().fold(0, |a, &v| a | bit(v));
    let odd: u128 = path.iter().step_by(2).fold(0, |a, &v| a | bit(v));
    for (i, &v) in path.iter().enumerate() {
        if g.alive & bit(v) == 0 {
            return Err(Poly22Error::InvalidPath(format!("vertex {v} is not present")));
        }
        if g.red_neighbors(v) & !all != 0 {
            return Err(Poly22Error::InvalidPath(format!("red edge leaves the path at vertex {v}")));
        }
        if i % 2 == 1 {
            for w in iter_bits(g.blue_neighbors(v)) {
                if odd & bit(w) == 0 {
                    return Err(Poly22Error::InvalidPath(format!("blue edge {{{v},{w}}} survives the picks")));
                }
            }
        }
    }
    Ok(g.remove(all))
}

/// Right to move on a unit-free graph: does Left win as second player?
pub fn right_to_move_rule(g: &Graph2) -> Result<bool, Poly22Error> {
    if g.has_red_p3() {
        return Ok(false);
    }
    let mut g = g.clone();
    'reduce: loop {
        for u in g.vertices() {
            if let VertexType::Type3 { path } = classify(&g, u) {
                g = reduce_type3(&g, &path)?;
                debug_assert!(!g.has_red_p3());
                continue 'reduce;
            }
        }
        break;
    }
    if g.is_empty() {
        return Ok(false);
    }
    for u in g.vertices() {
        if let VertexType::Type2 { path } = classify(&g, u) {
            let removed = path.iter().fold(0u128, |a, &v| a | bit(v));
            if !g.has_blue_p3_without(removed) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Does Left win when `first` moves first?
pub fn left_wins(game: &Game, first: Player) -> Result<bool, Poly22Error> {
    match preprocess_units(game, first)? {
        Preprocessed::Decided(r) => Ok(r == GameResult::LeftWin),
        Preprocessed::Reduced { graph, to_move: Player::Left } => Ok(left_to_move_rule(&graph)),
        Preprocessed::Reduced { graph, to_move: Player::Right } => right_to_move_rule(&graph),
    }
}

/// Full value from the Left-win question for both colors.
pub fn solve22(game: &Game, first: Player) -> Result<GameResult, Poly22Error> {
    let left = left_wins(game, first)?;
    let right = left_wins(&game.swap_colors(), first.opponent())?;
    assert!(!(left && right), "both players cannot have a winning strategy");
    Ok(if left {
        GameResult::LeftWin
    } else if right {
        GameResult::RightWin
    } else {
        GameResult::Draw
    })
}
