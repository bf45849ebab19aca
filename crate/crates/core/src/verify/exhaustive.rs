//! Outcome legality and the (2,2) decision procedure against the solver,
//! over exhaustive small families and seeded random games.

use rayon::prelude::*;

use super::{ensure, run, stream, tally, Check, Fail, Trial};
use crate::game::{Game, Player};
use crate::outcome::Outcome;
use crate::poly22::solve22;
use crate::random::{random_game, rng_for, GameShape, SmallGameClasses};
use crate::solver::Solver;
use crate::vertex_set::VertexSet;

/// All games on `n` vertices with edges of size ≤ `max_edge`, by code.
struct Labeled {
    n: usize,
    candidates: Vec<VertexSet>,
}

impl Labeled {
    fn new(n: usize, max_edge: usize) -> Labeled {
        let candidates = (1u128..(1 << n)).map(VertexSet).filter(|s| s.len() <= max_edge).collect();
        Labeled { n, candidates }
    }

    fn count(&self) -> usize {
        1 << (2 * self.candidates.len())
    }

    fn game(&self, code: usize) -> Game {
        let m = self.candidates.len();
        let pick = |bits: usize| (0..m).filter(|i| bits >> i & 1 == 1).map(|i| self.candidates[i]).collect();
        Game::anonymous(self.n, pick(code & ((1 << m) - 1)), pick(code >> m)).expect("valid")
    }
}

/// Runs `f` over every labeled game with at most `max_n` vertices.
fn over_labeled<F>(name: &str, max_n: usize, max_edge: usize, f: F) -> Check
where
    F: Fn(&mut Solver, &Game) -> Trial + Sync + Send,
{
    let mut results = Vec::new();
    for n in 0..=max_n {
        let family = Labeled::new(n, max_edge);
        let chunk: Vec<Trial> =
            (0..family.count()).into_par_iter().map_init(Solver::default, |s, c| f(s, &family.game(c))).collect();
        results.extend(chunk);
    }
    tally(name, results)
}

fn legal(s: &mut Solver, g: &Game) -> Trial {
    let (a, b) = (s.solve(g, Player::Left)?, s.solve(g, Player::Right)?);
    Outcome::from_results(a, b).map_err(|e| Fail(format!("{e} for {g:?}")))?;
    Ok(1)
}

/// Both solves of every game form one of the six legal outcomes: all games
/// on ≤ 4 vertices with edges of size ≤ 2, then seeded random games on ≤ 7
/// vertices with edges of size ≤ 3.
pub fn outcome_legality(seed: u64, trials: usize) -> Vec<Check> {
    vec![
        over_labeled("outcome_legality_exhaustive", 4, 2, legal),
        run("outcome_legality_random", trials, |s, i| {
            legal(s, &random_game(&mut rng_for(seed, stream(20, i)), &GameShape::new(7, 3)))
        }),
    ]
}

fn agree(s: &mut Solver, g: &Game) -> Trial {
    for first in [Player::Left, Player::Right] {
        let want = s.solve(g, first)?;
        let got = solve22(g, first).map_err(|e| Fail(format!("{e} for {g:?}")))?;
        ensure(got == want, || format!("{first} first: poly22 {got}, search {want} for {g:?}"))?;
    }
    Ok(2)
}

/// The (2,2) procedure against the solver: every labeled game on ≤ 4
/// vertices and one game per isomorphism class on 5 vertices.
pub fn poly22_exhaustive() -> Vec<Check> {
    let labeled = over_labeled("poly22_labeled", 4, 2, agree);
    let classes = SmallGameClasses::new(5);
    let codes = classes.pair_codes();
    let results: Vec<(usize, Trial)> = codes
        .par_iter()
        .map_init(Solver::default, |s, &p| {
            let units = classes.unit_codes(p);
            let mut n = 0;
            for &u in &units {
                match agree(s, &classes.game(p, u)) {
                    Ok(k) => n += k,
                    Err(e) => return (units.len(), Err(e)),
                }
            }
            (units.len(), Ok(n))
        })
        .collect();
    let games: usize = results.iter().map(|(k, _)| k).sum();
    let five = tally("poly22_classes_5", results.into_iter().map(|(_, r)| r).collect()).note("classes", games);
    vec![labeled, five]
}

/// The (2,2) procedure against the solver on seeded random games with at
/// most 14 vertices.
pub fn poly22_random(seed: u64, trials: usize) -> Check {
    let check = run("poly22_random", trials, |s, i| {
        let shape = GameShape::new(14, 2).unit_chance(0.08);
        agree(s, &random_game(&mut rng_for(seed, stream(21, i)), &shape))
    });
    let agreed = check.trials as u64 - check.failures;
    check.note("agreement", format!("{agreed}/{trials}"))
}
