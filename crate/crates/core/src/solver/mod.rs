//! Exact game-tree search: results, outcomes, optimal moves, self-play
//! traces and delay values.

mod board;
mod delay;
mod trace;

use std::time::{Duration, Instant};

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::error::GameError;
use crate::game::{Game, Player, Position, Status};
use crate::outcome::{GameResult, IllegalOutcome, Outcome};

pub(crate) use board::{double_threat_vertex, has_unit, iter_bits, units, Board};
pub use delay::Delay;
pub use trace::{Justification, StrategyTrace, TraceStep};

/// Default node budget per query.
pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("node budget of {limit} exceeded")]
    ResourceLimit { limit: u64 },
    #[error(transparent)]
    IllegalOutcome(#[from] IllegalOutcome),
    #[error("position is already decided")]
    NotOngoing,
    #[error(transparent)]
    Game(#[from] GameError),
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Nodes one query may expand before giving up.
    pub node_limit: u64,
    /// Twin reduction, superset removal, dominance pruning, threat cutoffs.
    /// When off, the search is plain memoized minimax over every move.
    pub pruning: bool,
    /// Memo entries kept before the table is flushed.
    pub memo_capacity: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { node_limit: DEFAULT_NODE_LIMIT, pruning: true, memo_capacity: 1 << 22 }
    }
}

impl SolverConfig {
    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = limit;
        self
    }

    pub fn without_pruning(mut self) -> Self {
        self.pruning = false;
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes_expanded: u64,
    pub memo_hits: u64,
    pub max_depth: u32,
    pub elapsed: Duration,
}

impl SolveStats {
    /// Flat `key: value` block.
    pub fn report(&self) -> String {
        format!(
            "nodes_expanded: {}\nmemo_hits: {}\nmax_depth: {}\nelapsed_ms: {}\n",
            self.nodes_expanded,
            self.memo_hits,
            self.max_depth,
            self.elapsed.as_millis()
        )
    }
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    lo: i8,
    hi: i8,
}

/// A search engine with its own transposition tables. Reuse one solver for
/// many queries to share the tables; use one solver per thread.
pub struct Solver {
    config: SolverConfig,
    memo: FxHashMap<Box<[u128]>, Bounds>,
    exact: FxHashMap<Box<[u128]>, i8>,
    delay_memo: FxHashMap<Box<[u128]>, u32>,
    stats: SolveStats,
    query_nodes: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new(SolverConfig::default())
    }
}

fn to_result(value: i8, mover: Player) -> GameResult {
    match value {
        1 => GameResult::win_for(mover),
        0 => GameResult::Draw,
        _ => GameResult::win_for(mover.opponent()),
    }
}

/// Move-ordering weight of a vertex: small edges of either color count most.
fn weight(v: usize, own: &[u128], opp: &[u128]) -> u64 {
    let bit = 1u128 << v;
    own.iter().chain(opp.iter()).filter(|&&e| e & bit != 0).map(|e| 1u64 << (2 * (10 - e.count_ones().min(10)))).sum()
}

impl Solver {
    pub fn new(config: SolverConfig) -> Solver {
        Solver {
            config,
            memo: FxHashMap::default(),
            exact: FxHashMap::default(),
            delay_memo: FxHashMap::default(),
            stats: SolveStats::default(),
            query_nodes: 0,
        }
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    /// Cumulative statistics over every query so far.
    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    pub fn clear(&mut self) {
        self.memo.clear();
        self.exact.clear();
        self.delay_memo.clear();
    }

    fn begin(&mut self) -> Instant {
        self.query_nodes = 0;
        if self.memo.len() > self.config.memo_capacity {
            self.memo.clear();
        }
        if self.exact.len() > self.config.memo_capacity {
            self.exact.clear();
        }
        if self.delay_memo.len() > self.config.memo_capacity {
            self.delay_memo.clear();
        }
        Instant::now()
    }

    fn end(&mut self, start: Instant) {
        self.stats.elapsed += start.elapsed();
    }

    #[inline]
    fn tick(&mut self, depth: u32) -> Result<(), SolveError> {
        self.query_nodes += 1;
        self.stats.nodes_expanded += 1;
        if depth > self.stats.max_depth {
            self.stats.max_depth = depth;
        }
        if self.query_nodes > self.config.node_limit {
            return Err(SolveError::ResourceLimit { limit: self.config.node_limit });
        }
        Ok(())
    }

    /// Value of the game when `first` moves first.
    pub fn solve(&mut self, game: &Game, first: Player) -> Result<GameResult, SolveError> {
        let start = self.begin();
        let value = self.value(&Board::from_game(game), first);
        self.end(start);
        Ok(to_result(value?, first))
    }

    /// Both first-player results, checked against the legal outcome table.
    pub fn outcome(&mut self, game: &Game) -> Result<Outcome, SolveError> {
        let l = self.solve(game, Player::Left)?;
        let r = self.solve(game, Player::Right)?;
        Ok(Outcome::from_results(l, r)?)
    }

    /// Value of a position with optimal play from here on.
    pub fn position_value(&mut self, pos: &Position) -> Result<GameResult, SolveError> {
        match pos.status() {
            Status::Won(p) => Ok(GameResult::win_for(p)),
            Status::Draw => Ok(GameResult::Draw),
            Status::Ongoing => {
                let start = self.begin();
                let value = self.value(&Board::from_position(pos), pos.to_move());
                self.end(start);
                Ok(to_result(value?, pos.to_move()))
            }
        }
    }

    fn value(&mut self, b: &Board, mover: Player) -> Result<i8, SolveError> {
        if self.config.pruning {
            self.search(b, mover, -1, 1, 0)
        } else {
            self.plain(b, mover, 0)
        }
    }

    /// Fail-soft alpha-beta over values in {-1, 0, 1} from the mover's side.
    fn search(&mut self, b: &Board, mover: Player, mut alpha: i8, mut beta: i8, depth: u32) -> Result<i8, SolveError> {
        self.tick(depth)?;
        let opp = mover.opponent();
        if has_unit(b.own(mover)) {
            return Ok(1);
        }
        let threats = units(b.own(opp));
        if threats.count_ones() >= 2 {
            return Ok(-1);
        }
        if b.free == 0 {
            return Ok(0);
        }
        if threats != 0 {
            let child = b.play(threats.trailing_zeros() as usize, mover);
            return Ok(-self.search(&child, opp, -beta, -alpha, depth + 1)?);
        }

        let mut b = b.clone();
        b.normalize();
        b.reduce_twins();
        let own_empty = b.own(mover).is_empty();
        let opp_empty = b.own(opp).is_empty();
        if b.free == 0 || (own_empty && opp_empty) {
            return Ok(0);
        }
        if double_threat_vertex(b.own(mover)).is_some() {
            return Ok(1);
        }
        // value range from who still has edges
        let floor = if opp_empty { 0 } else { -1 };
        let ceil = if own_empty { 0 } else { 1 };
        if floor >= beta {
            return Ok(floor);
        }
        if ceil <= alpha {
            return Ok(ceil);
        }

        let key = b.key(mover);
        let (mut lo, mut hi) = (floor, ceil);
        if let Some(bounds) = self.memo.get(&key) {
            self.stats.memo_hits += 1;
            lo = lo.max(bounds.lo);
            hi = hi.min(bounds.hi);
        }
        if lo >= hi || lo >= beta {
            return Ok(lo);
        }
        if hi <= alpha {
            return Ok(hi);
        }
        // the window stays nonempty, so every result is a bound on one side
        alpha = alpha.max(lo);
        beta = beta.min(hi);
        let (a0, b0) = (alpha, beta);

        let mut moves: Vec<(u64, usize)> =
            iter_bits(b.undominated()).map(|v| (weight(v, b.own(mover), b.own(opp)), v)).collect();
        moves.sort_unstable_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));

        let mut best = -2i8;
        for &(_, v) in &moves {
            let child = b.play(v, mover);
            let val = -self.search(&child, opp, -beta, -alpha, depth + 1)?;
            if val > best {
                best = val;
            }
            if best > alpha {
                alpha = best;
            }
            if alpha >= beta {
                break;
            }
        }
        let best = best.clamp(floor, ceil);

        let entry = self.memo.entry(key).or_insert(Bounds { lo: -1, hi: 1 });
        if best <= a0 {
            entry.hi = entry.hi.min(best);
        } else if best >= b0 {
            entry.lo = entry.lo.max(best);
        } else {
            *entry = Bounds { lo: best, hi: best };
        }
        Ok(best)
    }

    /// Plain memoized minimax over every free vertex, no shortcuts beyond
    /// the rules themselves.
    fn plain(&mut self, b: &Board, mover: Player, depth: u32) -> Result<i8, SolveError> {
        self.tick(depth)?;
        if b.free == 0 {
            return Ok(0);
        }
        let mut b = b.clone();
        b.sort();
        let key = b.exact_key(mover);
        if let Some(&v) = self.exact.get(&key) {
            self.stats.memo_hits += 1;
            return Ok(v);
        }
        let mut best = -1i8;
        for v in iter_bits(b.free) {
            if b.completes(v, mover) {
                best = 1;
                break;
            }
            let child = b.play(v, mover);
            let val = -self.plain(&child, mover.opponent(), depth + 1)?;
            best = best.max(val);
            if best == 1 {
                break;
            }
        }
        self.exact.insert(key, best);
        Ok(best)
    }

    /// Mover-side value of every legal move from an ongoing position, in
    /// ascending vertex order.
    fn move_values(&mut self, pos: &Position) -> Result<Vec<(usize, i8)>, SolveError> {
        if pos.status() != Status::Ongoing {
            return Err(SolveError::NotOngoing);
        }
        let b = Board::from_position(pos);
        let mover = pos.to_move();
        let start = self.begin();
        let mut out = Vec::new();
        for v in iter_bits(b.free) {
            if b.completes(v, mover) {
                out.push((v, 1));
                continue;
            }
            let child = b.play(v, mover);
            match self.value(&child, mover.opponent()) {
                Ok(val) => out.push((v, -val)),
                Err(e) => {
                    self.end(start);
                    return Err(e);
                }
            }
        }
        self.end(start);
        Ok(out)
    }

    /// A move achieving the position's value. Among such moves: an
    /// immediate win, then a double threat, then (when not winning) a block
    /// of an opposing threat, then the lowest index.
    pub fn best_move(&mut self, pos: &Position) -> Result<(usize, GameResult), SolveError> {
        let mover = pos.to_move();
        let values = self.move_values(pos)?;
        let best = values.iter().map(|&(_, v)| v).max().expect("ongoing position has a free vertex");
        let b = Board::from_position(pos);
        let threats = units(b.own(mover.opponent()));
        let rank = |v: usize| -> u8 {
            if b.completes(v, mover) {
                return 0;
            }
            let child = b.play(v, mover);
            if best == 1 && units(child.own(mover)).count_ones() >= 2 {
                return 1;
            }
            if best < 1 && threats >> v & 1 == 1 {
                return 2;
            }
            3
        };
        let chosen = values
            .iter()
            .filter(|&&(_, val)| val == best)
            .map(|&(v, _)| (rank(v), v))
            .min()
            .expect("some move attains the maximum")
            .1;
        Ok((chosen, to_result(best, mover)))
    }

    /// Plays best moves for both sides until the game ends.
    pub fn self_play(&mut self, game: &Game, first: Player) -> Result<StrategyTrace, SolveError> {
        let expected = self.solve(game, first)?;
        let mut pos = Position::start(game.clone(), first);
        let mut steps = Vec::new();
        while pos.status() == Status::Ongoing {
            let mover = pos.to_move();
            let (v, result) = self.best_move(&pos)?;
            let tag = trace::justify(&pos, v, result);
            steps.push(TraceStep {
                mover,
                vertex: v,
                name: game.name(v).to_string(),
                value: result,
                tag,
                summary: trace::summary(&pos),
            });
            pos.play(v)?;
        }
        let trace = StrategyTrace { first, steps, status: pos.status() };
        debug_assert_eq!(trace.result(), expected);
        Ok(trace)
    }

    /// Value of the delay scoring game for `protagonist`.
    pub fn delay(&mut self, game: &Game, protagonist: Player) -> Result<Delay, SolveError> {
        let start = self.begin();
        let d = self.delay_search(&Board::from_game(game), protagonist, true, 0);
        self.end(start);
        Ok(Delay::from_raw(d?))
    }

    fn delay_search(&mut self, b: &Board, prot: Player, prot_to_move: bool, depth: u32) -> Result<u32, SolveError> {
        self.tick(depth)?;
        let ant = prot.opponent();
        if prot_to_move {
            if has_unit(b.own(prot)) {
                return Ok(0);
            }
        } else if has_unit(b.own(ant)) {
            return Ok(delay::INF);
        }
        if b.free == 0 || b.own(prot).is_empty() {
            return Ok(delay::INF);
        }
        let mut b = b.clone();
        b.normalize();
        let mut key = b.key(if prot_to_move { prot } else { ant }).into_vec();
        key.push(prot as u128 | 1 << 8);
        let key = key.into_boxed_slice();
        if let Some(&d) = self.delay_memo.get(&key) {
            self.stats.memo_hits += 1;
            return Ok(d);
        }
        let d = if prot_to_move {
            let mut best = delay::INF;
            for v in iter_bits(b.free) {
                if b.completes(v, prot) {
                    best = 0;
                    break;
                }
                let child = b.play(v, prot);
                best = best.min(self.delay_search(&child, prot, false, depth + 1)?);
                if best == 0 {
                    break;
                }
            }
            best
        } else {
            let pass = self.delay_search(&b, prot, true, depth + 1)?;
            let mut best = pass.saturating_add(1);
            for w in iter_bits(b.free) {
                if best == delay::INF {
                    break;
                }
                let child = b.play(w, ant);
                best = best.max(self.delay_search(&child, prot, true, depth + 1)?);
            }
            best
        };
        self.delay_memo.insert(key, d);
        Ok(d)
    }
}

/// One-shot solve with the default configuration.
pub fn solve(game: &Game, first: Player) -> Result<GameResult, SolveError> {
    Solver::default().solve(game, first)
}

/// One-shot outcome with the default configuration.
pub fn outcome(game: &Game) -> Result<Outcome, SolveError> {
    Solver::default().outcome(game)
}

/// One-shot delay with the default configuration.
pub fn delay(game: &Game, protagonist: Player) -> Result<Delay, SolveError> {
    Solver::default().delay(game, protagonist)
}
