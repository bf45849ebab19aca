//! Seeded verification batteries. Trials fan out over worker threads, each
//! with its own solver, and results are gathered in trial order, so a seed
//! fixes the report byte for byte.

mod exhaustive;
mod lemmas;
mod reductions;
mod union;

use rayon::prelude::*;

use crate::error::GameError;
use crate::reductions::ReductionError;
use crate::solver::{SolveError, Solver};

pub use exhaustive::{outcome_legality, poly22_exhaustive, poly22_random};
pub use lemmas::{
    domination, edge_monotonicity, greedy_move, lemmas, pairing_strategy, pick_monotonicity, strategy_stealing,
    twin_removal,
};
pub use reductions::{
    maker_maker_embedding, qbf_battery, qbf_scripts, reductions, sat23_battery, sat32_battery, transversal_embedding,
};
pub use union::{delay_battery, union_batteries, union_law};

/// The outcome of one battery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub trials: usize,
    /// Individual assertions evaluated across all trials.
    pub assertions: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
    pub notes: Vec<(String, String)>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn note(mut self, key: &str, value: impl ToString) -> Check {
        self.notes.push((key.to_string(), value.to_string()));
        self
    }

    /// `key: value` lines.
    pub fn report(&self) -> String {
        let mut out = format!(
            "check: {}\ntrials: {}\nassertions: {}\nfailures: {}\nstatus: {}\n",
            self.name,
            self.trials,
            self.assertions,
            self.failures,
            if self.passed() { "pass" } else { "fail" }
        );
        for (k, v) in &self.notes {
            out.push_str(&format!("{k}: {v}\n"));
        }
        if let Some(f) = &self.first_failure {
            out.push_str(&format!("first_failure: {f}\n"));
        }
        out
    }
}

/// Why a trial failed.
#[derive(Debug, Clone)]
pub(crate) struct Fail(pub String);

impl From<SolveError> for Fail {
    fn from(e: SolveError) -> Fail {
        Fail(format!("solver: {e}"))
    }
}

impl From<GameError> for Fail {
    fn from(e: GameError) -> Fail {
        Fail(format!("game: {e}"))
    }
}

impl From<ReductionError> for Fail {
    fn from(e: ReductionError) -> Fail {
        Fail(format!("reduction: {e}"))
    }
}

/// Assertions checked by one trial, or the first one that failed.
pub(crate) type Trial = Result<u64, Fail>;

pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), Fail> {
    if cond {
        Ok(())
    } else {
        Err(Fail(msg()))
    }
}

/// Stream index for trial `i` of battery `battery`.
pub(crate) fn stream(battery: u64, i: usize) -> u64 {
    battery << 40 | i as u64
}

/// Runs `trial` for each index in parallel and folds the results in order.
pub(crate) fn run<F>(name: &str, trials: usize, trial: F) -> Check
where
    F: Fn(&mut Solver, usize) -> Trial + Sync + Send,
{
    let results: Vec<Trial> = (0..trials).into_par_iter().map_init(Solver::default, |s, i| trial(s, i)).collect();
    tally(name, results)
}

pub(crate) fn tally(name: &str, results: Vec<Trial>) -> Check {
    let mut check = Check {
        name: name.to_string(),
        trials: results.len(),
        assertions: 0,
        failures: 0,
        first_failure: None,
        notes: Vec::new(),
    };
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(n) => check.assertions += n,
            Err(Fail(msg)) => {
                check.assertions += 1;
                check.failures += 1;
                if check.first_failure.is_none() {
                    check.first_failure = Some(format!("trial {i}: {msg}"));
                }
            }
        }
    }
    check
}
