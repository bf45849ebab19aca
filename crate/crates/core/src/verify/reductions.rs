//! Batteries for the formula compilers and the two embeddings.

use rayon::prelude::*;

use super::{ensure, run, stream, tally, Check, Fail, Trial};
use crate::game::Player;
use crate::hypergraph::{embed_maker_breaker, minimal_transversals, Hypergraph, MakerBreakerMode, TRANSVERSAL_LIMIT};
use crate::outcome::GameResult;
use crate::random::{random_game, rng_for, GameShape};
use crate::reductions::{
    all_sign_patterns, forced_script_check, mm_rank4_embed, qbf_brute, qbf_to_33, sat_brute, sat_to_23, sat_to_32,
    small_formulas, solve_vs_canonical_right, CanonicalVerdict, CnfFormula, QbfFormula, QbfWinner,
};
use crate::solver::Solver;
use crate::vertex_set::VertexSet;

/// Largest compiled game the full solver is asked about in the 3-SAT
/// batteries.
pub const FULL_SOLVER_VERTICES: usize = 21;

/// Every formula battery: both 3-SAT gadgets and the 3-QBF gadget.
pub fn reductions() -> Vec<Check> {
    vec![sat23_battery(), sat32_battery(), qbf_battery(), qbf_scripts()]
}

/// One- and two-clause formulas over three variables, then the eight
/// clauses with every sign pattern.
fn sat_formulas() -> Vec<CnfFormula> {
    let mut all = small_formulas(3);
    all.push(all_sign_patterns());
    all
}

fn over<T: Sync, F>(name: &str, items: &[T], f: F) -> Check
where
    F: Fn(&mut Solver, &T) -> Trial + Sync + Send,
{
    tally(name, items.par_iter().map_init(Solver::default, |s, x| f(s, x)).collect())
}

/// Left survives the canonical Right strategy as first player exactly when
/// the formula is satisfiable; where the game is small enough the full
/// solver agrees and never finds a Left win.
pub fn sat23_battery() -> Check {
    let formulas = sat_formulas();
    over("sat_to_23", &formulas, |s, phi| {
        let out = sat_to_23(phi)?;
        let g = &out.game;
        ensure(g.max_edge(Player::Left) <= 3 && g.max_edge(Player::Right) <= 2, || format!("edge sizes for {phi}"))?;
        let sat = sat_brute(phi)?;
        let verdict = solve_vs_canonical_right(g, None)?;
        ensure((verdict == CanonicalVerdict::LeftNonLosing) == sat, || {
            format!("{phi}: satisfiable={sat}, canonical exploration {}", verdict.as_str())
        })?;
        if g.num_vertices() > FULL_SOLVER_VERTICES {
            return Ok(2);
        }
        let r = s.solve(g, Player::Left)?;
        ensure((r != GameResult::RightWin) == sat, || format!("{phi}: satisfiable={sat}, solver {r}"))?;
        ensure(r != GameResult::LeftWin, || format!("{phi}: Left wins outright"))?;
        Ok(4)
    })
}

/// With two butterflies added, Left wins as first player exactly when the
/// formula is satisfiable. The canonical exploration screens each game
/// first; an unsatisfiable verdict from it already fixes the value.
pub fn sat32_battery() -> Check {
    let formulas = sat_formulas();
    over("sat_to_32", &formulas, |s, phi| {
        let out = sat_to_32(phi)?;
        let g = &out.game;
        ensure(g.max_edge(Player::Left) <= 3 && g.max_edge(Player::Right) <= 2, || format!("edge sizes for {phi}"))?;
        let sat = sat_brute(phi)?;
        let verdict = solve_vs_canonical_right(g, None)?;
        ensure((verdict == CanonicalVerdict::LeftNonLosing) == sat, || {
            format!("{phi}: satisfiable={sat}, canonical exploration {}", verdict.as_str())
        })?;
        let r = s.solve(g, Player::Left)?;
        ensure((r == GameResult::LeftWin) == sat, || format!("{phi}: satisfiable={sat}, solver {r}"))?;
        Ok(3)
    })
}

fn qbf_formulas() -> Vec<QbfFormula> {
    small_formulas(2).into_iter().map(|m| QbfFormula::new(m).expect("two variables")).collect()
}

/// Every two-variable QBF with one or two clauses: Left, moving second,
/// wins exactly when Falsifier wins.
pub fn qbf_battery() -> Check {
    over("qbf_to_33", &qbf_formulas(), |s, psi| {
        let out = qbf_to_33(psi)?;
        let g = &out.game;
        let m = psi.matrix();
        ensure(g.max_edge(Player::Left) <= 3 && g.max_edge(Player::Right) <= 3, || format!("edge sizes for {m}"))?;
        let falsifier = qbf_brute(psi)? == QbfWinner::Falsifier;
        let r = s.solve(g, Player::Right)?;
        ensure((r == GameResult::LeftWin) == falsifier, || format!("{m}: Falsifier wins={falsifier}, solver {r}"))?;
        Ok(2)
    })
}

/// The scripted opening holds for every choice sequence on every
/// two-variable gadget. A clause repeating one literal three times becomes
/// a one-vertex blue edge, which forces the chooser's hand; such gadgets are
/// counted separately under `unit_clause_gadgets`.
pub fn qbf_scripts() -> Check {
    let formulas = qbf_formulas();
    let results: Vec<(bool, Trial)> = formulas
        .par_iter()
        .map(|psi| {
            let unit_clause = psi.matrix().clauses().iter().any(|c| c[0] == c[1] && c[1] == c[2]);
            let trial = qbf_to_33(psi).map_err(Fail::from).and_then(|out| {
                let vars = psi.num_vars();
                for c in 0..1u32 << vars {
                    let choices: Vec<bool> = (0..vars).map(|i| c >> i & 1 == 1).collect();
                    forced_script_check(&out, &choices)
                        .map_err(|e| Fail(format!("{} {choices:?}: {e}", psi.matrix())))?;
                }
                Ok(1u64 << vars)
            });
            (unit_clause, trial)
        })
        .collect();
    let unit_total = results.iter().filter(|(u, _)| *u).count();
    let unit_failing = results.iter().filter(|(u, t)| *u && t.is_err()).count();
    tally("qbf_scripts", results.into_iter().map(|(_, t)| t).collect())
        .note("unit_clause_gadgets", unit_total)
        .note("unit_clause_gadgets_failing", unit_failing)
}

/// After the opening round on `u_L` and `u_R`, the symmetric rank-4 game is
/// the original game with Left to move.
pub fn maker_maker_embedding(seed: u64, trials: usize) -> Check {
    run("maker_maker_embedding", trials, |s, i| {
        let g = random_game(&mut rng_for(seed, stream(30, i)), &GameShape::new(6, 3));
        let m = mm_rank4_embed(&g)?;
        ensure(m.hypergraph.rank() <= 4, || format!("rank {} for {g:?}", m.hypergraph.rank()))?;
        let after = m.after_opening();
        let (a, b) = (s.solve(&after, Player::Left)?, s.solve(&g, Player::Left)?);
        ensure(a == b, || format!("embedded {a}, original {b} for {g:?}"))?;
        Ok(2)
    })
}

/// On every hypergraph with at most four vertices and at least one edge,
/// Maker's first-player result is the same in both embeddings, with a
/// Breaker draw read as a Right win; the transversal map is an involution
/// up to removing non-minimal edges.
pub fn transversal_embedding() -> Check {
    let mut hypergraphs = Vec::new();
    for n in 0..=4usize {
        let subsets: Vec<VertexSet> = (1u128..1 << n).map(VertexSet).collect();
        for code in 0u64..1 << subsets.len() {
            let edges = (0..subsets.len()).filter(|i| code >> i & 1 == 1).map(|i| subsets[i]).collect();
            hypergraphs.push(Hypergraph::new(n, edges).expect("valid"));
        }
    }
    over("transversal_embedding", &hypergraphs, |s, h| {
        let n = h.num_vertices();
        let tr = minimal_transversals(n, h.edges(), TRANSVERSAL_LIMIT).map_err(|e| Fail(e.to_string()))?;
        let back = minimal_transversals(n, &tr, TRANSVERSAL_LIMIT).map_err(|e| Fail(e.to_string()))?;
        ensure(back == h.antichain(), || format!("Tr(Tr(H)) != min(H) for {h:?}"))?;
        ensure(tr.iter().all(|t| h.edges().iter().all(|e| e.intersects(*t))), || format!("bad transversal for {h:?}"))?;
        if h.edges().is_empty() {
            return Ok(2);
        }
        let plain = embed_maker_breaker(h, MakerBreakerMode::EmptyRed).map_err(|e| Fail(e.to_string()))?;
        let dual = embed_maker_breaker(h, MakerBreakerMode::TransversalRed).map_err(|e| Fail(e.to_string()))?;
        let (a, b) = (s.solve(&plain, Player::Left)?, s.solve(&dual, Player::Left)?);
        let expected = match a {
            GameResult::Draw => GameResult::RightWin,
            other => other,
        };
        ensure(a != GameResult::RightWin && b == expected, || format!("empty red {a}, transversal red {b} for {h:?}"))?;
        Ok(3)
    })
}
