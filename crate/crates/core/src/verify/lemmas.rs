//! Batteries for the structural facts about single games: extra picks,
//! symmetric games, edge changes, pairings, dominated and twin vertices,
//! and greedy moves.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{ensure, run, stream, Check, Fail};
use crate::game::{Game, Player, Position};
use crate::hypergraph::{check_pairing, Pairing};
use crate::outcome::{leq_l, Outcome};
use crate::random::{random_edge, random_edges, random_game, rng_for, GameShape};
use crate::simplify::{greedy_move as find_greedy, twin_reduce};
use crate::solver::Solver;
use crate::vertex_set::VertexSet;

const PLAYERS: [Player; 2] = [Player::Left, Player::Right];

fn picks(left: &[usize], right: &[usize]) -> (VertexSet, VertexSet) {
    (left.iter().copied().collect(), right.iter().copied().collect())
}

fn is_unit(g: &Game, v: usize) -> bool {
    let u = VertexSet::singleton(v);
    g.blue().contains(&u) || g.red().contains(&u)
}

/// Every battery in this module.
pub fn lemmas(seed: u64, trials: usize) -> Vec<Check> {
    vec![
        pick_monotonicity(seed, trials),
        strategy_stealing(seed, trials),
        edge_monotonicity(seed, trials),
        pairing_strategy(seed, trials),
        domination(seed, trials),
        twin_removal(seed, trials),
        greedy_move(seed, trials),
    ]
}

/// Handing Left an extra vertex never makes either first player's result
/// worse for Left.
pub fn pick_monotonicity(seed: u64, trials: usize) -> Check {
    run("pick_monotonicity", trials, |s, i| {
        let g = random_game(&mut rng_for(seed, stream(1, i)), &GameShape::new(6, 3));
        let base = [s.solve(&g, Player::Left)?, s.solve(&g, Player::Right)?];
        let mut n = 0;
        for u in 0..g.num_vertices() {
            if g.blue().contains(&VertexSet::singleton(u)) {
                continue;
            }
            let gu = g.update(VertexSet::singleton(u), VertexSet::EMPTY)?;
            for (k, first) in PLAYERS.into_iter().enumerate() {
                let r = s.solve(&gu, first)?;
                ensure(r >= base[k], || format!("{first} first: {} -> {r} after Left takes {u} in {g:?}", base[k]))?;
                n += 1;
            }
        }
        Ok(n)
    })
}

/// In a game where both players race for the same edges, the first player
/// never loses.
pub fn strategy_stealing(seed: u64, trials: usize) -> Check {
    run("strategy_stealing", trials, |s, i| {
        let mut rng = rng_for(seed, stream(2, i));
        let n = rng.gen_range(1..=7);
        let edges = random_edges(&mut rng, n, 3, n + 2, 0.05);
        let g = Game::anonymous(n, edges.clone(), edges)?;
        let r = s.solve(&g, Player::Left)?;
        ensure(r != crate::GameResult::RightWin, || format!("Left first loses {g:?}"))?;
        Ok(1)
    })
}

/// Adding a blue edge, removing a red edge, or shrinking a blue edge never
/// lowers the outcome in Left's order.
pub fn edge_monotonicity(seed: u64, trials: usize) -> Check {
    run("edge_monotonicity", trials, |s, i| {
        let mut rng = rng_for(seed, stream(3, i));
        let g = random_game(&mut rng, &GameShape::new(6, 3).min_vertices(2));
        let o = s.outcome(&g)?;
        let n = g.num_vertices();
        let mut variants: Vec<(&str, Game)> = Vec::new();
        let mut blue = g.blue().to_vec();
        blue.push(random_edge(&mut rng, n, 3, 0.1));
        variants.push(("add blue", Game::from_sets(g.names().to_vec(), blue, g.red().to_vec())?));
        if !g.red().is_empty() {
            let mut red = g.red().to_vec();
            red.remove(rng.gen_range(0..red.len()));
            variants.push(("remove red", Game::from_sets(g.names().to_vec(), g.blue().to_vec(), red)?));
        }
        let shrinkable: Vec<usize> = (0..g.blue().len()).filter(|&k| g.blue()[k].len() >= 2).collect();
        if let Some(&k) = shrinkable.choose(&mut rng) {
            let mut blue = g.blue().to_vec();
            let members: Vec<usize> = blue[k].iter().collect();
            blue[k].remove(*members.choose(&mut rng).expect("edge has two vertices"));
            variants.push(("shrink blue", Game::from_sets(g.names().to_vec(), blue, g.red().to_vec())?));
        }
        for (what, h) in &variants {
            let oh = s.outcome(h)?;
            ensure(leq_l(o, oh), || format!("{what}: {o} -> {oh} for {g:?} -> {h:?}"))?;
        }
        Ok(variants.len() as u64)
    })
}

/// A complete pairing of the blue edges means Left never wins.
pub fn pairing_strategy(seed: u64, trials: usize) -> Check {
    run("pairing_strategy", trials, |s, i| {
        let mut rng = rng_for(seed, stream(4, i));
        let n = rng.gen_range(2..=8);
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(&mut rng);
        let k = rng.gen_range(1..=n / 2);
        let pairs: Vec<(usize, usize)> = (0..k).map(|j| (verts[2 * j], verts[2 * j + 1])).collect();
        let pairing = Pairing::new(pairs.clone()).map_err(|e| Fail(e.to_string()))?;
        let blue: Vec<VertexSet> = (0..rng.gen_range(1..=4))
            .map(|_| {
                let (a, b) = pairs[rng.gen_range(0..k)];
                let extra = random_edge(&mut rng, n, 2, 0.0);
                extra.with(a).with(b)
            })
            .collect();
        let red = random_edges(&mut rng, n, 3, 3, 0.1);
        let g = Game::anonymous(n, blue, red)?;
        ensure(check_pairing(&g, &pairing, Player::Right), || format!("pairing {pairs:?} rejected for {g:?}"))?;
        let o = s.outcome(&g)?;
        ensure(matches!(o, Outcome::D | Outcome::RMinus | Outcome::R), || format!("outcome {o} for {g:?}"))?;
        Ok(2)
    })
}

/// If every edge through `u` also contains `v`, taking `v` is at least as
/// good as taking `u` for either player.
pub fn domination(seed: u64, trials: usize) -> Check {
    run("domination", trials, |s, i| {
        let g = random_game(&mut rng_for(seed, stream(5, i)), &GameShape::new(6, 3).min_vertices(2));
        let n = g.num_vertices();
        let o = s.outcome(&g)?;
        let mut count = 0;
        for u in 0..n {
            for v in 0..n {
                let dominated = g.blue().iter().chain(g.red()).all(|e| !e.contains(u) || e.contains(v));
                if u == v || is_unit(&g, u) || is_unit(&g, v) || !dominated {
                    continue;
                }
                let oc = |s: &mut Solver, l: &[usize], r: &[usize]| -> Result<Outcome, Fail> {
                    let (a, b) = picks(l, r);
                    Ok(s.outcome(&g.update(a, b)?)?)
                };
                let (g_u, g_v) = (oc(s, &[u], &[])?, oc(s, &[v], &[])?);
                let (gr_u, gr_v) = (oc(s, &[], &[u])?, oc(s, &[], &[v])?);
                let (uv, vu) = (oc(s, &[u], &[v])?, oc(s, &[v], &[u])?);
                let ctx = || format!("u={u} v={v} in {g:?}");
                ensure(leq_l(g_u, g_v), || format!("Left taking u beats v: {g_u} vs {g_v}, {}", ctx()))?;
                ensure(leq_l(gr_v, gr_u), || format!("Right taking u beats v: {gr_u} vs {gr_v}, {}", ctx()))?;
                ensure(leq_l(uv, o), || format!("Left u / Right v gains: {uv} vs {o}, {}", ctx()))?;
                ensure(leq_l(o, vu), || format!("Left v / Right u loses: {vu} vs {o}, {}", ctx()))?;
                count += 4;
            }
        }
        Ok(count)
    })
}

/// Removing a twin pair, one vertex to each player, keeps the outcome.
pub fn twin_removal(seed: u64, trials: usize) -> Check {
    run("twin_removal", trials, |s, i| {
        let mut rng = rng_for(seed, stream(6, i));
        let base = random_game(&mut rng, &GameShape::new(6, 3));
        let n = base.num_vertices();
        // plant a twin of a random vertex so most trials have one
        let a = rng.gen_range(0..n);
        let twin = |e: &VertexSet| if e.contains(a) && e.len() > 1 { e.with(n) } else { *e };
        let blue: Vec<VertexSet> = base.blue().iter().map(twin).collect();
        let red: Vec<VertexSet> = base.red().iter().map(twin).collect();
        let g = Game::anonymous(n + 1, blue, red)?;
        let (_, log) = twin_reduce(&g);
        let mut cur = g.clone();
        let mut o = s.outcome(&cur)?;
        for (l, r) in &log {
            let next = cur.update_named(&[l.as_str()], &[r.as_str()])?;
            let on = s.outcome(&next)?;
            ensure(on == o, || format!("removing twins {l},{r} changes {o} to {on} in {cur:?}"))?;
            cur = next;
            o = on;
        }
        Ok(log.len() as u64 + 1)
    })
}

/// A greedy move is an optimal first move, and the game after it and its
/// forced answer has the same value.
pub fn greedy_move(seed: u64, trials: usize) -> Check {
    run("greedy_move", trials, |s, i| {
        let mut rng = rng_for(seed, stream(7, i));
        let n = rng.gen_range(2..=7);
        let player = PLAYERS[rng.gen_range(0..2)];
        let (u, v) = {
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(&mut rng);
            (vs[0], vs[1])
        };
        // every edge through u also contains v, and {u, v} is the player's
        let fix = |e: VertexSet| if e.contains(u) { e.with(v) } else { e };
        let mut own: Vec<VertexSet> = random_edges(&mut rng, n, 3, n, 0.0).into_iter().map(fix).collect();
        let other: Vec<VertexSet> = random_edges(&mut rng, n, 3, n, 0.0).into_iter().map(fix).collect();
        own.push(VertexSet::singleton(u).with(v));
        let g = match player {
            Player::Left => Game::anonymous(n, own, other)?,
            Player::Right => Game::anonymous(n, other, own)?,
        };
        if g.blue().iter().chain(g.red()).any(|e| e.len() < 2) {
            return Ok(0);
        }
        let Some((pick, answer)) = find_greedy(&g, player) else {
            return Err(Fail(format!("no greedy move for {player} in {g:?}")));
        };
        let value = s.solve(&g, player)?;
        let mut pos = Position::start(g.clone(), player);
        pos.play(pick)?;
        let after = s.position_value(&pos)?;
        ensure(after == value, || format!("greedy {pick} gives {after}, optimum {value} in {g:?}"))?;
        let (l, r) = match player {
            Player::Left => picks(&[pick], &[answer]),
            Player::Right => picks(&[answer], &[pick]),
        };
        let reduced = s.solve(&g.update(l, r)?, player)?;
        ensure(reduced == value, || format!("after the forced pair {reduced}, optimum {value} in {g:?}"))?;
        Ok(2)
    })
}
