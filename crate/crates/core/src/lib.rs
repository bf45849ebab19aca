//! Achievement positional games: two players pick vertices of a shared
//! board, Left racing to fill a blue edge and Right a red one.
//!
//! The crate provides the game algebra, an exact solver, a polynomial
//! decision procedure for games whose edges have at most two vertices,
//! gadget generators, and compilers from 3-SAT and 3-QBF into games.

pub mod error;
pub mod format;
pub mod gadgets;
pub mod game;
pub mod hypergraph;
pub mod outcome;
pub mod poly22;
pub mod random;
pub mod reductions;
pub mod simplify;
pub mod solver;
pub mod verify;
pub mod vertex_set;

pub use error::GameError;
pub use format::{parse_apg, write_apg, FormatError};
pub use game::{disjoint_union, updated_edges, Game, Player, Position, Status};
pub use outcome::{leq_l, union_cell, verify_union_cell, GameResult, Outcome};
pub use solver::{Delay, SolveError, SolveStats, Solver, SolverConfig, StrategyTrace};
pub use vertex_set::{VertexSet, MAX_VERTICES};
