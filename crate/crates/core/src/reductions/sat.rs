//! 3-SAT gadgets: blue edges of size ≤ 3, red edges of size ≤ 2, with two
//! optional blue butterflies that turn Left's draws into wins.

use super::{CnfFormula, Literal, ReductionError, ReductionOutput};
use crate::gadgets::{butterfly, BUTTERFLY_NAMES};
use crate::game::{Game, Player};

fn literal_vertex(l: Literal) -> String {
    if l > 0 {
        format!("x{l}")
    } else {
        format!("nx{}", -l)
    }
}

fn literal_symbol(l: Literal) -> String {
    if l > 0 {
        format!("x{l}")
    } else {
        format!("¬x{}", -l)
    }
}

struct Builder {
    names: Vec<String>,
    provenance: Vec<(String, String)>,
    blue: Vec<Vec<String>>,
    red: Vec<Vec<String>>,
}

impl Builder {
    fn new() -> Builder {
        Builder { names: Vec::new(), provenance: Vec::new(), blue: Vec::new(), red: Vec::new() }
    }

    fn vertex(&mut self, symbol: String, name: String) -> String {
        self.names.push(name.clone());
        self.provenance.push((symbol, name.clone()));
        name
    }

    fn finish(self) -> Result<ReductionOutput, ReductionError> {
        let game = Game::new(self.names, self.blue, self.red)?;
        Ok(ReductionOutput { game, provenance: self.provenance })
    }
}

/// One literal vertex per sign of each variable, six vertices per clause
/// (a pair for each literal slot) and three vertices `w`, `w_check`,
/// `w_hat`. Blue: `{x, ¬x}` and `{ℓ, c_ℓ, c'_ℓ}` per slot. Red: the clause
/// triangle on the `c_ℓ` and the pair `{w, w_check}`, `{w, w_hat}`. Left
/// has a non-losing first-player strategy iff the formula is satisfiable.
pub fn sat_to_23(phi: &CnfFormula) -> Result<ReductionOutput, ReductionError> {
    let mut b = Builder::new();
    build_23(phi, &mut b);
    b.finish()
}

fn build_23(phi: &CnfFormula, b: &mut Builder) {
    for v in 1..=phi.num_vars() as i32 {
        let pos = b.vertex(literal_symbol(v), literal_vertex(v));
        let neg = b.vertex(literal_symbol(-v), literal_vertex(-v));
        b.blue.push(vec![pos, neg]);
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        let j = j + 1;
        let mut slots = Vec::new();
        for (k, &l) in clause.iter().enumerate() {
            let k = k + 1;
            let c = b.vertex(format!("c{j}[{}]#{k}", literal_symbol(l)), format!("c{j}_l{k}"));
            let cp = b.vertex(format!("c{j}[{}]#{k}'", literal_symbol(l)), format!("c{j}_l{k}p"));
            b.blue.push(vec![literal_vertex(l), c.clone(), cp]);
            slots.push(c);
        }
        for k in 0..3 {
            b.red.push(vec![slots[k].clone(), slots[(k + 1) % 3].clone()]);
        }
    }
    let w = b.vertex("omega".into(), "w".into());
    let wc = b.vertex("omega_check".into(), "w_check".into());
    let wh = b.vertex("omega_hat".into(), "w_hat".into());
    b.red.push(vec![w.clone(), wc]);
    b.red.push(vec![w, wh]);
}

/// The same gadget plus two disjoint blue butterflies (vertices prefixed
/// `b1_` and `b2_`). Left wins as first player iff the formula is
/// satisfiable.
pub fn sat_to_32(phi: &CnfFormula) -> Result<ReductionOutput, ReductionError> {
    let mut b = Builder::new();
    build_23(phi, &mut b);
    let fly = butterfly(Player::Left);
    for copy in 1..=2 {
        let rename = |v: &str| format!("b{copy}_{v}");
        for name in BUTTERFLY_NAMES {
            b.vertex(format!("butterfly{copy}.{name}"), rename(name));
        }
        for e in fly.blue() {
            b.blue.push(fly.names_of(*e).into_iter().map(rename).collect());
        }
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_clause_counts() {
        let phi = CnfFormula::new(3, vec![vec![1, 2, 3]]).unwrap();
        let out = sat_to_23(&phi).unwrap();
        assert_eq!(out.game.num_vertices(), 15);
        assert_eq!(out.game.blue().len(), 6);
        assert_eq!(out.game.red().len(), 5);
        assert!(out.game.max_edge(Player::Left) <= 3 && out.game.max_edge(Player::Right) <= 2);
        assert_eq!(out.provenance.len(), 15);
        let out = sat_to_32(&phi).unwrap();
        assert_eq!(out.game.num_vertices(), 29);
        assert_eq!(out.game.blue().len(), 14);
    }

    #[test]
    fn two_clause_shape() {
        // c = ¬x ∨ y ∨ z, d = ¬y ∨ z ∨ t
        let phi = CnfFormula::new(4, vec![vec![-1, 2, 3], vec![-2, 3, 4]]).unwrap();
        let out = sat_to_23(&phi).unwrap();
        assert_eq!(out.game.num_vertices(), 23);
        let g = &out.game;
        let e = g.set_of(&["nx1", "c1_l1", "c1_l1p"]).unwrap();
        assert!(g.blue().contains(&e));
        assert_eq!(out.vertex("omega"), g.index_of("w"));
    }

    #[test]
    fn repeated_literals_keep_six_clause_vertices() {
        let phi = CnfFormula::new(1, vec![vec![1, 1, 1]]).unwrap();
        let out = sat_to_23(&phi).unwrap();
        assert_eq!(out.game.num_vertices(), 2 + 6 + 3);
    }
}
