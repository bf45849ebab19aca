//! 3-QBF gadget with edges of size ≤ 3. Left plays Falsifier as second
//! player, Right plays Satisfier; Left wins iff Falsifier wins.

use thiserror::Error;

use super::{QbfFormula, ReductionError, ReductionOutput};
use crate::game::{Game, Player, Position, Status};
use crate::solver::{has_unit, units, Board};

fn t_r(i: usize) -> String {
    format!("t_{i}_R")
}
fn f_r(i: usize) -> String {
    format!("f_{i}_R")
}
fn t_l(i: usize) -> String {
    format!("t_{i}_L")
}
fn f_l(i: usize) -> String {
    format!("f_{i}_L")
}
fn u(i: usize) -> String {
    format!("u_{i}")
}
fn v(i: usize) -> String {
    format!("v_{i}")
}

/// Expands `e*`: `e` itself for the first variable, otherwise `e` plus
/// each of the two previous-variable vertices of the given side.
fn star(e: &[String], i: usize, side: Player) -> Vec<Vec<String>> {
    if i == 1 {
        return vec![e.to_vec()];
    }
    let (t, f) = match side {
        Player::Right => (t_r(i - 1), f_r(i - 1)),
        Player::Left => (t_l(i - 1), f_l(i - 1)),
    };
    [t, f]
        .into_iter()
        .map(|x| {
            let mut edge = e.to_vec();
            edge.push(x);
            edge
        })
        .collect()
}

/// Builds the game for `psi`: six variable vertices and five butterfly
/// vertices per variable, plus `w`. Tautological clauses get no edge.
pub fn qbf_to_33(psi: &QbfFormula) -> Result<ReductionOutput, ReductionError> {
    let n2 = psi.num_vars();
    let mut names = Vec::new();
    let mut provenance = Vec::new();
    let mut blue: Vec<Vec<String>> = Vec::new();
    let mut red: Vec<Vec<String>> = Vec::new();
    let mut add = |symbol: String, name: String| {
        names.push(name.clone());
        provenance.push((symbol, name));
    };
    for i in 1..=n2 {
        for (sym, name) in [
            (format!("t_{{{i},R}}"), t_r(i)),
            (format!("f_{{{i},R}}"), f_r(i)),
            (format!("t_{{{i},L}}"), t_l(i)),
            (format!("f_{{{i},L}}"), f_l(i)),
            (format!("u_{i}"), u(i)),
            (format!("v_{i}"), v(i)),
            (format!("a_{i}"), format!("a_{i}")),
            (format!("b_{i}"), format!("b_{i}")),
            (format!("b'_{i}"), format!("bp_{i}")),
            (format!("c_{i}"), format!("c_{i}")),
            (format!("c'_{i}"), format!("cp_{i}")),
        ] {
            add(sym, name);
        }
    }
    add("w".into(), "w".into());

    for i in 1..=n2 {
        let e = |a: String, b: String| vec![a, b];
        if i % 2 == 1 {
            red.extend(star(&e(t_r(i), f_l(i)), i, Player::Right));
            red.extend(star(&e(f_r(i), t_l(i)), i, Player::Right));
            red.push(vec![f_r(i), f_l(i), u(i)]);
            red.push(vec![t_r(i), t_l(i), v(i)]);
            blue.extend(star(&e(t_r(i), f_r(i)), i, Player::Left));
            blue.extend(star(&e(t_r(i), u(i)), i, Player::Left));
            blue.extend(star(&e(f_r(i), v(i)), i, Player::Left));
            blue.extend(star(&e(t_l(i), u(i)), i, Player::Left));
            blue.extend(star(&e(f_l(i), v(i)), i, Player::Left));
        } else {
            blue.extend(star(&e(t_r(i), f_l(i)), i, Player::Left));
            blue.extend(star(&e(f_r(i), t_l(i)), i, Player::Left));
            blue.push(vec![t_l(i), f_l(i), u(i)]);
            blue.push(vec![t_l(i), f_l(i), v(i)]);
            red.extend(star(&e(t_l(i), f_l(i)), i, Player::Right));
            red.extend(star(&e(t_l(i), u(i)), i, Player::Right));
            red.extend(star(&e(f_l(i), v(i)), i, Player::Right));
            red.extend(star(&e(t_r(i), u(i)), i, Player::Right));
            red.extend(star(&e(f_r(i), v(i)), i, Player::Right));
            red.push(vec![t_r(i), t_l(i), v(i)]);
            red.push(vec![f_r(i), f_l(i), u(i)]);
        }
        let (a, b, bp, c, cp) =
            (format!("a_{i}"), format!("b_{i}"), format!("bp_{i}"), format!("c_{i}"), format!("cp_{i}"));
        blue.push(vec![t_r(i), a.clone(), b]);
        blue.push(vec![t_r(i), a.clone(), c]);
        blue.push(vec![f_r(i), a.clone(), bp]);
        blue.push(vec![f_r(i), a, cp]);
    }
    blue.push(vec![u(n2), v(n2), "w".into()]);
    // literal x_i sits on t_{i,R} for odd i and on f_{i,R} for even i
    let literal_vertex = |l: i32| {
        let i = l.unsigned_abs() as usize;
        if (l > 0) == (i % 2 == 1) {
            t_r(i)
        } else {
            f_r(i)
        }
    };
    // a clause with x and ¬x always holds; as an edge it could collapse to
    // {t_{i,R}, f_{i,R}} and hand Left a threat the gadget never blocks
    for clause in psi.matrix().clauses().iter().filter(|c| !c.iter().any(|l| c.contains(&-l))) {
        blue.push(clause.iter().map(|&l| literal_vertex(l)).collect());
    }
    let game = Game::new(names, blue, red)?;
    Ok(ReductionOutput { game, provenance })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("scripted move {step} ({vertex} by {mover}): {reason}")]
pub struct ScriptViolation {
    /// 1-based move number.
    pub step: usize,
    pub mover: Player,
    pub vertex: String,
    pub reason: String,
}

/// Plays the first phase of a compiled QBF gadget for the given choices
/// (`true` picks the `t` vertex) and checks every step: choice moves must
/// face no threat, every other move must be the opponent's single
/// one-move threat, and the phase ends with Right forced onto `w` and Left
/// to move. Returns the number of moves played.
pub fn forced_script_check(out: &ReductionOutput, choices: &[bool]) -> Result<usize, ScriptViolation> {
    let game = &out.game;
    let mut pos = Position::start(game.clone(), Player::Right);
    let mut script: Vec<(Player, String, bool)> = Vec::new();
    for (idx, &t) in choices.iter().enumerate() {
        let i = idx + 1;
        let moves: [(Player, String); 5] = match (i % 2 == 1, t) {
            (true, true) => [
                (Player::Right, t_r(i)),
                (Player::Left, f_l(i)),
                (Player::Right, v(i)),
                (Player::Left, t_l(i)),
                (Player::Right, u(i)),
            ],
            (true, false) => [
                (Player::Right, f_r(i)),
                (Player::Left, t_l(i)),
                (Player::Right, u(i)),
                (Player::Left, f_l(i)),
                (Player::Right, v(i)),
            ],
            (false, true) => [
                (Player::Left, t_l(i)),
                (Player::Right, f_r(i)),
                (Player::Left, v(i)),
                (Player::Right, f_l(i)),
                (Player::Left, u(i)),
            ],
            (false, false) => [
                (Player::Left, f_l(i)),
                (Player::Right, t_r(i)),
                (Player::Left, u(i)),
                (Player::Right, t_l(i)),
                (Player::Left, v(i)),
            ],
        };
        for (k, (p, name)) in moves.into_iter().enumerate() {
            script.push((p, name, k == 0));
        }
    }
    script.push((Player::Right, "w".into(), false));

    for (step0, (mover, name, is_choice)) in script.into_iter().enumerate() {
        let step = step0 + 1;
        let fail = |reason: String| ScriptViolation { step, mover, vertex: name.clone(), reason };
        if pos.to_move() != mover {
            return Err(fail(format!("it is {}'s turn", pos.to_move())));
        }
        if pos.status() != Status::Ongoing {
            return Err(fail(format!("game already over: {:?}", pos.status())));
        }
        let vtx = game.index_of(&name).ok_or_else(|| fail("no such vertex".into()))?;
        let b = Board::from_position(&pos);
        if has_unit(b.own(mover)) {
            return Err(fail("mover could win immediately instead".into()));
        }
        let threats = units(b.own(mover.opponent()));
        if is_choice {
            if threats != 0 {
                return Err(fail("a choice move faces a one-move threat".into()));
            }
        } else if threats != 1u128 << vtx {
            let got: Vec<&str> = game.names_of(crate::vertex_set::VertexSet(threats));
            return Err(fail(format!("expected the opponent's single threat here, threats are {got:?}")));
        }
        pos.play(vtx).map_err(|e| fail(e.to_string()))?;
    }
    let steps = 5 * choices.len() + 1;
    if pos.status() != Status::Ongoing || pos.to_move() != Player::Left {
        return Err(ScriptViolation {
            step: steps,
            mover: Player::Right,
            vertex: "w".into(),
            reason: "phase one should end with Left to move".into(),
        });
    }
    Ok(steps)
}
