//! DIMACS CNF input and output. A QBF uses the same body; the alternation
//! is implied by variable order (odd variables belong to Satisfier).

use thiserror::Error;

use super::{CnfFormula, QbfFormula, ReductionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Formula(#[from] ReductionError),
}

fn syntax(line: usize, message: impl Into<String>) -> DimacsError {
    DimacsError::Syntax { line, message: message.into() }
}

/// Parses `p cnf V C` followed by clauses of exactly three literals, each
/// terminated by `0`. Clauses may span lines; `c` lines are comments.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut current_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        if t.starts_with('%') {
            break;
        }
        if t.starts_with('p') {
            if header.is_some() {
                return Err(syntax(line, "second header line"));
            }
            let parts: Vec<&str> = t.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(syntax(line, "expected `p cnf <variables> <clauses>`"));
            }
            let v = parts[2].parse().map_err(|_| syntax(line, format!("bad variable count `{}`", parts[2])))?;
            let c = parts[3].parse().map_err(|_| syntax(line, format!("bad clause count `{}`", parts[3])))?;
            header = Some((v, c));
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(syntax(line, "clause before the `p cnf` header"));
        };
        for tok in t.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| syntax(line, format!("bad literal `{tok}`")))?;
            if lit == 0 {
                if current.len() != 3 {
                    return Err(syntax(line, format!("clause has {} literals; exactly 3 are required", current.len())));
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            if lit.unsigned_abs() as usize > num_vars {
                return Err(syntax(line, format!("literal {lit} exceeds the {num_vars} declared variables")));
            }
            if current.is_empty() {
                current_line = line;
            }
            current.push(lit);
        }
    }
    let Some((num_vars, count)) = header else {
        return Err(syntax(1, "missing `p cnf` header"));
    };
    if !current.is_empty() {
        return Err(syntax(current_line, "clause not terminated by 0"));
    }
    if clauses.len() != count {
        return Err(syntax(
            text.lines().count().max(1),
            format!("header declares {count} clauses, found {}", clauses.len()),
        ));
    }
    Ok(CnfFormula::new(num_vars, clauses)?)
}

/// Parses a DIMACS body as a QBF with implicit alternation.
pub fn parse_qdimacs(text: &str) -> Result<QbfFormula, DimacsError> {
    Ok(QbfFormula::new(parse_dimacs(text)?)?)
}

pub fn write_dimacs(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.num_vars(), phi.clauses().len());
    for c in phi.clauses() {
        out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
    }
    out
}
