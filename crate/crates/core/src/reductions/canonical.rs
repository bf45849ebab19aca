//! A fixed Right strategy that wins as second player whenever any Right
//! strategy does, on games with blue edges of size ≤ 3 and red edges of
//! size ≤ 2. Exploring Left's moves against it decides whether Left has a
//! non-losing first-player strategy.

use rustc_hash::FxHashMap;

use super::ReductionError;
use crate::game::{Game, Player, Position, Status};
use crate::solver::{double_threat_vertex, has_unit, iter_bits, units, Board, SolveError, DEFAULT_NODE_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalVerdict {
    LeftNonLosing,
    RightWins,
}

impl CanonicalVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            CanonicalVerdict::LeftNonLosing => "LeftNonLosing",
            CanonicalVerdict::RightWins => "RightWins",
        }
    }
}

fn canonical(b: &Board) -> usize {
    let lowest = |x: u128| x.trailing_zeros() as usize;
    let win = units(&b.red);
    if win != 0 {
        return lowest(win);
    }
    let block = units(&b.blue);
    if block != 0 {
        return lowest(block);
    }
    if let Some(center) = double_threat_vertex(&b.red) {
        // the lowest center, not just the first found
        let mut best = center;
        for v in iter_bits(b.free) {
            let bit = 1u128 << v;
            if b.red.iter().filter(|&&e| e.count_ones() == 2 && e & bit != 0).count() >= 2 {
                best = v;
                break;
            }
        }
        return best;
    }
    lowest(b.free)
}

/// Right's move: complete a red edge; else block Left's one-move win; else
/// take the center of an intact red P3; else the lowest free vertex.
pub fn canonical_right_strategy(pos: &Position) -> Option<usize> {
    if pos.status() != Status::Ongoing {
        return None;
    }
    Some(canonical(&Board::from_position(pos)))
}

struct Explorer {
    memo: FxHashMap<Box<[u128]>, bool>,
    nodes: u64,
    limit: u64,
}

impl Explorer {
    fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(SolveError::ResourceLimit { limit: self.limit });
        }
        Ok(())
    }

    /// Left to move: can Left avoid losing against the fixed strategy?
    fn left(&mut self, b: &Board) -> Result<bool, SolveError> {
        self.tick()?;
        if has_unit(&b.blue) {
            return Ok(true);
        }
        let threats = units(&b.red);
        if threats.count_ones() >= 2 {
            return Ok(false);
        }
        if b.free == 0 {
            return Ok(true);
        }
        let mut sorted = b.clone();
        sorted.sort();
        let key = sorted.exact_key(Player::Left);
        if let Some(&r) = self.memo.get(&key) {
            return Ok(r);
        }
        let moves = if threats != 0 { threats } else { b.free };
        let mut ok = false;
        for v in iter_bits(moves) {
            let child = b.play(v, Player::Left);
            if self.right(&child)? {
                ok = true;
                break;
            }
        }
        self.memo.insert(key, ok);
        Ok(ok)
    }

    fn right(&mut self, b: &Board) -> Result<bool, SolveError> {
        self.tick()?;
        if b.free == 0 {
            return Ok(true);
        }
        let v = canonical(b);
        if b.completes(v, Player::Right) {
            return Ok(false);
        }
        self.left(&b.play(v, Player::Right))
    }
}

/// Explores every Left line, Left moving first, with Right fixed to
/// [`canonical_right_strategy`].
pub fn solve_vs_canonical_right(game: &Game, node_limit: Option<u64>) -> Result<CanonicalVerdict, ReductionError> {
    for (player, limit) in [(Player::Left, 3), (Player::Right, 2)] {
        let size = game.max_edge(player);
        if size > limit {
            return Err(ReductionError::EdgeTooLarge { player, size, limit });
        }
    }
    let mut ex = Explorer { memo: FxHashMap::default(), nodes: 0, limit: node_limit.unwrap_or(DEFAULT_NODE_LIMIT) };
    match ex.left(&Board::from_game(game)) {
        Ok(true) => Ok(CanonicalVerdict::LeftNonLosing),
        Ok(false) => Ok(CanonicalVerdict::RightWins),
        Err(SolveError::ResourceLimit { limit }) => Err(ReductionError::NodeLimit(limit)),
        Err(e) => unreachable!("{e}"),
    }
}
