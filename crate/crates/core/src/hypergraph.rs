//! Single-color hypergraphs: pairings, minimal transversals and the two
//! Maker-Breaker embeddings.

use thiserror::Error;

use crate::error::GameError;
use crate::game::{Game, Player};
use crate::vertex_set::VertexSet;

/// Default vertex bound for brute-force transversal enumeration.
pub const TRANSVERSAL_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("{vertices} vertices exceed the brute-force bound of {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("invalid pairing: {0}")]
    BadPairing(String),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// A hypergraph on `0..n` with set-semantics edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Hypergraph, HypergraphError> {
        let all = VertexSet::full(n);
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(GameError::EmptyEdge(i).into());
            }
            if !e.is_subset(all) {
                return Err(GameError::VertexOutOfRange(e.difference(all).first().unwrap_or(0)).into());
            }
        }
        let mut edges = edges;
        edges.sort_unstable();
        edges.dedup();
        Ok(Hypergraph { n, edges })
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// Rank (largest edge size).
    pub fn rank(&self) -> usize {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    /// The inclusion-minimal edges.
    pub fn antichain(&self) -> Vec<VertexSet> {
        antichain(&self.edges)
    }
}

/// Keeps only inclusion-minimal sets, sorted.
pub fn antichain(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> =
        sets.iter().copied().filter(|&e| !sets.iter().any(|&f| f != e && f.is_subset(e))).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn is_transversal(t: VertexSet, edges: &[VertexSet]) -> bool {
    edges.iter().all(|e| e.intersects(t))
}

/// All inclusion-minimal vertex sets meeting every edge, by exhaustive
/// enumeration over the `2^n` subsets. An edgeless hypergraph yields the
/// single empty transversal.
pub fn minimal_transversals(n: usize, edges: &[VertexSet], limit: usize) -> Result<Vec<VertexSet>, HypergraphError> {
    if n > limit {
        return Err(HypergraphError::TooLarge { vertices: n, limit });
    }
    let mut out = Vec::new();
    for bits in 0u128..(1u128 << n) {
        let t = VertexSet(bits);
        if is_transversal(t, edges) && t.iter().all(|v| !is_transversal(t.without(v), edges)) {
            out.push(t);
        }
    }
    out.sort_unstable();
    Ok(out)
}

impl Hypergraph {
    pub fn minimal_transversals(&self) -> Result<Vec<VertexSet>, HypergraphError> {
        minimal_transversals(self.n, &self.edges, TRANSVERSAL_LIMIT)
    }
}

/// How Breaker's goal is represented in the embedded game.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MakerBreakerMode {
    /// No red edges; a Breaker win reads as a draw.
    EmptyRed,
    /// Red edges are the minimal transversals of the blue edges.
    TransversalRed,
}

/// Embeds a Maker-Breaker hypergraph as a game with Maker as Left.
pub fn embed_maker_breaker(h: &Hypergraph, mode: MakerBreakerMode) -> Result<Game, HypergraphError> {
    let red = match mode {
        MakerBreakerMode::EmptyRed => Vec::new(),
        MakerBreakerMode::TransversalRed => h.minimal_transversals()?,
    };
    Ok(Game::anonymous(h.n, h.edges.clone(), red)?)
}

/// A set of pairwise disjoint vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pairs: Vec<(usize, usize)>,
}

impl Pairing {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Pairing, HypergraphError> {
        let mut seen = VertexSet::EMPTY;
        for &(a, b) in &pairs {
            if a == b {
                return Err(HypergraphError::BadPairing(format!("pair ({a}, {b}) repeats a vertex")));
            }
            if a >= crate::MAX_VERTICES || b >= crate::MAX_VERTICES {
                return Err(GameError::VertexOutOfRange(a.max(b)).into());
            }
            if seen.contains(a) || seen.contains(b) {
                return Err(HypergraphError::BadPairing(format!("pair ({a}, {b}) overlaps another pair")));
            }
            seen.insert(a);
            seen.insert(b);
        }
        Ok(Pairing { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    fn sets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.pairs.iter().map(|&(a, b)| VertexSet::singleton(a).with(b))
    }

    /// Every edge contains some pair.
    pub fn is_complete_for(&self, edges: &[VertexSet]) -> bool {
        edges.iter().all(|e| self.sets().any(|p| p.is_subset(*e)))
    }
}

/// Whether `pairing` is a complete pairing of the attacker's edges, which
/// gives `defender` a non-losing strategy as first or second player.
pub fn check_pairing(game: &Game, pairing: &Pairing, defender: Player) -> bool {
    let all = game.vertex_set();
    if pairing.sets().any(|p| !p.is_subset(all)) {
        return false;
    }
    pairing.is_complete_for(game.edges(defender.opponent()))
}
