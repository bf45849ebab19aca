use thiserror::Error;

use crate::game::Player;

/// Errors raised while building or updating games.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("edge {0} is empty")]
    EmptyEdge(usize),
    #[error("edge mentions undeclared vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("vertex name `{0}` is empty or contains whitespace")]
    InvalidName(String),
    #[error("{0} vertices exceed the supported maximum of 128")]
    TooManyVertices(usize),
    #[error("vertex index {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("{0} has already filled an edge")]
    AlreadyWon(Player),
    #[error("both players have filled an edge")]
    BothFilled,
    #[error("left and right picks overlap")]
    OverlappingPicks,
    #[error("vertex {0} has already been picked")]
    VertexTaken(usize),
    #[error("the game is over")]
    GameOver,
    #[error("pick counts are inconsistent with the player to move")]
    TurnMismatch,
}
