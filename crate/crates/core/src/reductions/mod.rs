//! Compilers from 3-CNF and 3-QBF formulas into games, the Maker-Maker
//! rank-4 embedding, brute-force logic oracles, and the canonical Right
//! strategy for games with blue edges of size ≤ 3 and red edges of size ≤ 2.

mod canonical;
mod dimacs;
mod embed;
mod qbf;
mod sat;

use std::fmt;

use thiserror::Error;

use crate::error::GameError;
use crate::game::Game;

pub use canonical::{canonical_right_strategy, solve_vs_canonical_right, CanonicalVerdict};
pub use dimacs::{parse_dimacs, parse_qdimacs, write_dimacs, DimacsError};
pub use embed::{mm_rank4_embed, MakerMakerEmbedding};
pub use qbf::{forced_script_check, qbf_to_33, ScriptViolation};
pub use sat::{sat_to_23, sat_to_32};

/// Most variables [`sat_brute`] will enumerate.
pub const SAT_BRUTE_LIMIT: usize = 24;
/// Most variables [`qbf_brute`] will enumerate.
pub const QBF_BRUTE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("clause {clause} has {size} literals; exactly 3 are required")]
    BadClauseSize { clause: usize, size: usize },
    #[error("literal {literal} in clause {clause} refers to no declared variable")]
    UnknownVariable { clause: usize, literal: i32 },
    #[error("the formula has no clauses")]
    NoClauses,
    #[error("a QBF needs an even, positive number of variables, got {0}")]
    OddVarCount(usize),
    #[error("{vars} variables exceed the brute-force limit of {limit}")]
    TooLarge { vars: usize, limit: usize },
    #[error("{player} has an edge of size {size}, above the limit of {limit}")]
    EdgeTooLarge { player: crate::game::Player, size: usize, limit: usize },
    #[error("node budget of {0} exceeded")]
    NodeLimit(u64),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// A literal: variable index (1-based) with sign.
pub type Literal = i32;

/// A 3-CNF formula; literals are signed 1-based variable indices and may
/// repeat inside a clause.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<CnfFormula, ReductionError> {
        if clauses.is_empty() {
            return Err(ReductionError::NoClauses);
        }
        let mut out = Vec::with_capacity(clauses.len());
        for (i, c) in clauses.iter().enumerate() {
            if c.len() != 3 {
                return Err(ReductionError::BadClauseSize { clause: i, size: c.len() });
            }
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > num_vars {
                    return Err(ReductionError::UnknownVariable { clause: i, literal: l });
                }
            }
            out.push([c[0], c[1], c[2]]);
        }
        Ok(CnfFormula { num_vars, clauses: out })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Whether the assignment (bit `i-1` is variable `i`) satisfies every
    /// clause.
    pub fn satisfied_by(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| literal_value(l, assignment)))
    }
}

fn literal_value(l: Literal, assignment: u64) -> bool {
    let v = assignment >> (l.unsigned_abs() - 1) & 1 == 1;
    if l > 0 {
        v
    } else {
        !v
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lit = |l: Literal| if l > 0 { format!("x{l}") } else { format!("¬x{}", -l) };
        let parts: Vec<String> = self.clauses.iter().map(|c| format!("({})", c.map(lit).join(" ∨ "))).collect();
        f.write_str(&parts.join(" ∧ "))
    }
}

/// A 3-QBF: variables `x1..x2n` are set in index order, odd ones by
/// Satisfier and even ones by Falsifier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QbfFormula {
    matrix: CnfFormula,
}

impl QbfFormula {
    pub fn new(matrix: CnfFormula) -> Result<QbfFormula, ReductionError> {
        let n = matrix.num_vars();
        if n == 0 || n % 2 == 1 {
            return Err(ReductionError::OddVarCount(n));
        }
        Ok(QbfFormula { matrix })
    }

    pub fn matrix(&self) -> &CnfFormula {
        &self.matrix
    }

    pub fn num_vars(&self) -> usize {
        self.matrix.num_vars()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QbfWinner {
    Satisfier,
    Falsifier,
}

impl QbfWinner {
    pub fn as_str(self) -> &'static str {
        match self {
            QbfWinner::Satisfier => "Satisfier",
            QbfWinner::Falsifier => "Falsifier",
        }
    }
}

/// A compiled game with a map from formula symbols to vertex names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub game: Game,
    /// `(symbol, vertex name)` pairs, one per vertex.
    pub provenance: Vec<(String, String)>,
}

impl ReductionOutput {
    /// Vertex index of a symbol.
    pub fn vertex(&self, symbol: &str) -> Option<usize> {
        let name = self.provenance.iter().find(|(s, _)| s == symbol).map(|(_, n)| n)?;
        self.game.index_of(name)
    }

    /// `symbol -> vertex` lines.
    pub fn provenance_report(&self) -> String {
        self.provenance.iter().map(|(s, n)| format!("{s} -> {n}\n")).collect()
    }
}

/// Satisfiability by scanning every assignment.
pub fn sat_brute(phi: &CnfFormula) -> Result<bool, ReductionError> {
    if phi.num_vars() > SAT_BRUTE_LIMIT {
        return Err(ReductionError::TooLarge { vars: phi.num_vars(), limit: SAT_BRUTE_LIMIT });
    }
    Ok((0u64..1 << phi.num_vars()).any(|a| phi.satisfied_by(a)))
}

/// Winner of the QBF game by minimax over the variables in index order.
pub fn qbf_brute(psi: &QbfFormula) -> Result<QbfWinner, ReductionError> {
    let n = psi.num_vars();
    if n > QBF_BRUTE_LIMIT {
        return Err(ReductionError::TooLarge { vars: n, limit: QBF_BRUTE_LIMIT });
    }
    fn satisfier_wins(m: &CnfFormula, i: usize, assignment: u64) -> bool {
        if i == m.num_vars() {
            return m.satisfied_by(assignment);
        }
        let mut options = [assignment, assignment | 1 << i].into_iter().map(|a| satisfier_wins(m, i + 1, a));
        // variable i+1 is odd (Satisfier's) when i is even
        if i.is_multiple_of(2) {
            options.any(|w| w)
        } else {
            options.all(|w| w)
        }
    }
    Ok(if satisfier_wins(psi.matrix(), 0, 0) { QbfWinner::Satisfier } else { QbfWinner::Falsifier })
}

/// All clauses of three literals over `num_vars` variables, as multisets
/// (literals in non-decreasing order of their code).
pub fn all_clauses(num_vars: usize) -> Vec<Vec<Literal>> {
    let lits: Vec<Literal> = (1..=num_vars as i32).flat_map(|v| [v, -v]).collect();
    let mut out = Vec::new();
    for i in 0..lits.len() {
        for j in i..lits.len() {
            for k in j..lits.len() {
                out.push(vec![lits[i], lits[j], lits[k]]);
            }
        }
    }
    out
}

/// Every formula with one clause or two (possibly equal) clauses over
/// `num_vars` variables.
pub fn small_formulas(num_vars: usize) -> Vec<CnfFormula> {
    let clauses = all_clauses(num_vars);
    let mut out = Vec::new();
    for (i, c) in clauses.iter().enumerate() {
        out.push(CnfFormula::new(num_vars, vec![c.clone()]).expect("valid"));
        for d in &clauses[i..] {
            out.push(CnfFormula::new(num_vars, vec![c.clone(), d.clone()]).expect("valid"));
        }
    }
    out
}

/// The eight clauses over `x1..x3` with every sign pattern.
pub fn all_sign_patterns() -> CnfFormula {
    let clauses = (0..8).map(|m| (1..=3).map(|v| if m >> (v - 1) & 1 == 1 { -v } else { v }).collect()).collect();
    CnfFormula::new(3, clauses).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_sat_examples() {
        let one = CnfFormula::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert!(sat_brute(&one).unwrap());
        assert!(!sat_brute(&all_sign_patterns()).unwrap());
        let contradiction = CnfFormula::new(1, vec![vec![1, 1, 1], vec![-1, -1, -1]]).unwrap();
        assert!(!sat_brute(&contradiction).unwrap());
    }

    #[test]
    fn brute_qbf_examples() {
        let psi = QbfFormula::new(CnfFormula::new(2, vec![vec![1, 1, 1]]).unwrap()).unwrap();
        assert_eq!(qbf_brute(&psi).unwrap(), QbfWinner::Satisfier);
        let psi = QbfFormula::new(CnfFormula::new(2, vec![vec![1, 1, 1], vec![-1, -1, -1]]).unwrap()).unwrap();
        assert_eq!(qbf_brute(&psi).unwrap(), QbfWinner::Falsifier);
        // Falsifier picks x2 after Satisfier: (x1 ∨ x2) ∧ (¬x1 ∨ ¬x2) lets
        // Falsifier copy x1 and break one clause
        let psi = QbfFormula::new(CnfFormula::new(2, vec![vec![1, 2, 2], vec![-1, -2, -2]]).unwrap()).unwrap();
        assert_eq!(qbf_brute(&psi).unwrap(), QbfWinner::Falsifier);
        // (x1 ∨ x2) ∧ (x1 ∨ ¬x2): Satisfier sets x1
        let psi = QbfFormula::new(CnfFormula::new(2, vec![vec![1, 2, 2], vec![1, -2, -2]]).unwrap()).unwrap();
        assert_eq!(qbf_brute(&psi).unwrap(), QbfWinner::Satisfier);
        assert_eq!(
            QbfFormula::new(CnfFormula::new(3, vec![vec![1, 2, 3]]).unwrap()),
            Err(ReductionError::OddVarCount(3))
        );
    }

    #[test]
    fn validation() {
        assert_eq!(CnfFormula::new(3, vec![vec![1, 2]]), Err(ReductionError::BadClauseSize { clause: 0, size: 2 }));
        assert_eq!(
            CnfFormula::new(2, vec![vec![1, 2, 3]]),
            Err(ReductionError::UnknownVariable { clause: 0, literal: 3 })
        );
        assert_eq!(CnfFormula::new(2, vec![]), Err(ReductionError::NoClauses));
    }

    #[test]
    fn battery_sizes() {
        assert_eq!(all_clauses(3).len(), 56);
        assert_eq!(all_clauses(2).len(), 20);
        assert_eq!(small_formulas(2).len(), 20 + 210);
        assert_eq!(small_formulas(3).len(), 56 + 56 * 57 / 2);
    }
}
