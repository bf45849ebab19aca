use std::fmt;

use super::board::{units, Board};
use crate::game::{Player, Position, Status};
use crate::outcome::GameResult;

/// Why a self-play move was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    /// The mover is winning and the move keeps the win.
    Winning,
    /// The move blocks the opponent's one-move threat.
    Forced,
    /// The opponent's edges are covered by disjoint size-2 edges, so the
    /// mover only has to answer inside a pair.
    Pairing,
    Arbitrary,
}

impl Justification {
    pub fn as_str(self) -> &'static str {
        match self {
            Justification::Winning => "winning",
            Justification::Forced => "forced",
            Justification::Pairing => "pairing",
            Justification::Arbitrary => "arbitrary",
        }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub mover: Player,
    pub vertex: usize,
    pub name: String,
    /// Value of the position before the move.
    pub value: GameResult,
    pub tag: Justification,
    /// Picks so far, e.g. `left={alpha} right={beta1}`.
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyTrace {
    pub first: Player,
    pub steps: Vec<TraceStep>,
    pub status: Status,
}

impl StrategyTrace {
    pub fn moves_by(&self, player: Player) -> usize {
        self.steps.iter().filter(|s| s.mover == player).count()
    }

    pub fn result(&self) -> GameResult {
        match self.status {
            Status::Won(p) => GameResult::win_for(p),
            _ => GameResult::Draw,
        }
    }

    /// One line per move: `move: <n> <player> <vertex> <tag> (<summary>)`.
    pub fn report(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.steps.iter().enumerate() {
            out.push_str(&format!("move: {} {} {} {} ({})\n", i + 1, s.mover, s.name, s.tag, s.summary));
        }
        let status = match self.status {
            Status::Won(p) => format!("won by {p}"),
            Status::Draw => "draw".to_string(),
            Status::Ongoing => "ongoing".to_string(),
        };
        out.push_str(&format!("final: {status}\n"));
        out
    }
}

pub(crate) fn summary(pos: &Position) -> String {
    let g = pos.game();
    let list = |p: Player| g.names_of(pos.picked(p)).join(",");
    format!("left={{{}}} right={{{}}}", list(Player::Left), list(Player::Right))
}

pub(crate) fn justify(pos: &Position, v: usize, value: GameResult) -> Justification {
    let mover = pos.to_move();
    if value.is_win_for(mover) {
        return Justification::Winning;
    }
    let b = Board::from_position(pos);
    let opp_edges = b.own(mover.opponent());
    if units(opp_edges) >> v & 1 == 1 {
        return Justification::Forced;
    }
    let pairs: Vec<u128> = opp_edges.iter().copied().filter(|e| e.count_ones() == 2).collect();
    let disjoint = pairs.iter().enumerate().all(|(i, p)| pairs[i + 1..].iter().all(|q| p & q == 0 || p == q));
    let covered = opp_edges.iter().all(|e| pairs.iter().any(|p| p & !e == 0));
    if value == GameResult::Draw && !pairs.is_empty() && disjoint && covered {
        return Justification::Pairing;
    }
    Justification::Arbitrary
}
