//! Batteries for disjoint unions and the delay scoring games.

use super::{ensure, run, stream, Check, Fail};
use crate::gadgets::w_k;
use crate::game::{disjoint_union, Game, Player};
use crate::outcome::{verify_union_cell, GameResult, Outcome};
use crate::random::{random_game, rng_for, GameShape};
use crate::solver::{Delay, Solver};

/// Union-law batteries.
pub fn union_batteries(seed: u64, trials: usize) -> Vec<Check> {
    vec![union_law(seed, trials)]
}

/// For random pairs, the outcome of the union lies in the table cell of
/// the two component outcomes, and a drawn component leaves the other
/// component's outcome unchanged.
pub fn union_law(seed: u64, trials: usize) -> Check {
    run("union_law", trials, |s, i| {
        let mut rng = rng_for(seed, stream(10, i));
        let shape = GameShape::new(7, 3);
        let (g, h) = (random_game(&mut rng, &shape), random_game(&mut rng, &shape));
        let (o, o2) = (s.outcome(&g)?, s.outcome(&h)?);
        let (u, _) = disjoint_union(&g, &h)?;
        let ou = s.outcome(&u)?;
        ensure(verify_union_cell(o, o2, ou), || format!("{o} with {o2} gave {ou}: {g:?} | {h:?}"))?;
        let mut n = 1;
        if o == Outcome::D || o2 == Outcome::D {
            let other = if o == Outcome::D { o2 } else { o };
            ensure(ou == other, || format!("drawn component changed {other} to {ou}: {g:?} | {h:?}"))?;
            n += 1;
        }
        Ok(n)
    })
}

/// Delay batteries: the `W_k` values, finiteness against the solver, and
/// the comparison rule for unions of a Left win with a Right win.
pub fn delay_battery(seed: u64, trials: usize) -> Vec<Check> {
    vec![delay_wk(), delay_finiteness(seed, trials), delay_union(seed, trials)]
}

fn delay_wk() -> Check {
    run("delay_wk", 5, |s, i| {
        let k = i + 1;
        let want = Delay::Finite(k as u32 - 1);
        for color in [Player::Left, Player::Right] {
            let g = w_k(k, color).map_err(|e| Fail(e.to_string()))?;
            let d = s.delay(&g, color)?;
            ensure(d == want, || format!("W_{k} for {color}: delay {d}, expected {want}"))?;
        }
        Ok(2)
    })
}

fn delay_finiteness(seed: u64, trials: usize) -> Check {
    run("delay_finiteness", trials, |s, i| {
        let g = random_game(&mut rng_for(seed, stream(11, i)), &GameShape::new(6, 3));
        for p in [Player::Left, Player::Right] {
            let d = s.delay(&g, p)?;
            let wins = s.solve(&g, p)?.is_win_for(p);
            ensure(d.is_finite() == wins, || format!("{p}: delay {d} but first-player win is {wins} in {g:?}"))?;
        }
        Ok(2)
    })
}

/// Draws random games until one is won by `player` moving first.
fn sample_win(s: &mut Solver, seed: u64, battery: u64, i: usize, player: Player) -> Result<Game, Fail> {
    let mut rng = rng_for(seed, stream(battery, i));
    let shape = GameShape::new(6, 3).min_vertices(1);
    for _ in 0..10_000 {
        let g = random_game(&mut rng, &shape);
        if s.solve(&g, player)?.is_win_for(player) {
            return Ok(g);
        }
    }
    Err(Fail(format!("no {player} win found")))
}

fn delay_union(seed: u64, trials: usize) -> Check {
    run("delay_union", trials, |s, i| {
        let g = sample_win(s, seed, 12, i, Player::Left)?;
        let h = sample_win(s, seed, 13, i, Player::Right)?;
        let (d, d2) = (s.delay(&g, Player::Left)?, s.delay(&h, Player::Right)?);
        let (u, _) = disjoint_union(&g, &h)?;
        let mut n = 0;
        if d <= d2 {
            let r = s.solve(&u, Player::Left)?;
            ensure(r == GameResult::LeftWin, || format!("d={d} <= d'={d2} but Left first gets {r}: {g:?} | {h:?}"))?;
            n += 1;
        }
        if d >= d2 {
            let r = s.solve(&u, Player::Right)?;
            ensure(r == GameResult::RightWin, || format!("d={d} >= d'={d2} but Right first gets {r}: {g:?} | {h:?}"))?;
            n += 1;
        }
        Ok(n)
    })
}
