//! Maker-Maker embedding: a game with edges of size ≤ 3 becomes a rank-4
//! hypergraph in which one opening round recreates the game.

use super::ReductionError;
use crate::game::{Game, Player};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;
use crate::MAX_VERTICES;

/// The hypergraph `H` with vertices `V ∪ {u_L, u_R}` and edges
/// `e ∪ {u_L}` for blue `e` and `e ∪ {u_R}` for red `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MakerMakerEmbedding {
    pub hypergraph: Hypergraph,
    pub names: Vec<String>,
    pub u_left: usize,
    pub u_right: usize,
}

fn fresh(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    let mut k = 2;
    while taken.contains(&name) {
        name = format!("{base}#{k}");
        k += 1;
    }
    name
}

pub fn mm_rank4_embed(game: &Game) -> Result<MakerMakerEmbedding, ReductionError> {
    for player in [Player::Left, Player::Right] {
        let size = game.max_edge(player);
        if size > 3 {
            return Err(ReductionError::EdgeTooLarge { player, size, limit: 3 });
        }
    }
    let n = game.num_vertices();
    if n + 2 > MAX_VERTICES {
        return Err(crate::error::GameError::TooManyVertices(n + 2).into());
    }
    let mut names = game.names().to_vec();
    let ul = fresh("u_L", &names);
    names.push(ul);
    let ur = fresh("u_R", &names);
    names.push(ur);
    let (u_left, u_right) = (n, n + 1);
    let edges: Vec<VertexSet> =
        game.blue().iter().map(|e| e.with(u_left)).chain(game.red().iter().map(|e| e.with(u_right))).collect();
    let hypergraph = Hypergraph::new(n + 2, edges).map_err(|e| match e {
        crate::hypergraph::HypergraphError::Game(g) => ReductionError::Game(g),
        other => unreachable!("{other}"),
    })?;
    Ok(MakerMakerEmbedding { hypergraph, names, u_left, u_right })
}

impl MakerMakerEmbedding {
    /// The Maker-Maker game on `H`: both players race for the same edges.
    pub fn symmetric_game(&self) -> Game {
        let e = self.hypergraph.edges().to_vec();
        Game::from_sets(self.names.clone(), e.clone(), e).expect("valid hypergraph")
    }

    /// The symmetric game after the first player takes `u_L` and the second
    /// takes `u_R`.
    pub fn after_opening(&self) -> Game {
        self.symmetric_game()
            .update(VertexSet::singleton(self.u_left), VertexSet::singleton(self.u_right))
            .expect("no edge is filled by one vertex of each side")
    }
}
