//! Reference values computed by exhaustive play over the public
//! `Position` API, with no pruning and no game normalization.

#![allow(dead_code)]

use std::collections::HashMap;

use apg_core::{Game, GameResult, Outcome, Player, Position, Status};

fn score(status: Status) -> Option<i8> {
    match status {
        Status::Won(Player::Left) => Some(1),
        Status::Won(Player::Right) => Some(-1),
        Status::Draw => Some(0),
        Status::Ongoing => None,
    }
}

fn minimax(pos: &Position, memo: &mut HashMap<(u128, u128), i8>) -> i8 {
    if let Some(s) = score(pos.status()) {
        return s;
    }
    let key = (pos.picked(Player::Left).bits(), pos.picked(Player::Right).bits());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let children = pos.free().iter().map(|v| {
        let mut next = pos.clone();
        next.play(v).expect("free vertex");
        minimax(&next, memo)
    });
    let v = match pos.to_move() {
        Player::Left => children.max(),
        Player::Right => children.min(),
    }
    .expect("ongoing position has a move");
    memo.insert(key, v);
    v
}

/// Value of the game from the opening position with `first` to move.
pub fn naive_value(game: &Game, first: Player) -> GameResult {
    match minimax(&Position::start(game.clone(), first), &mut HashMap::new()) {
        1 => GameResult::LeftWin,
        -1 => GameResult::RightWin,
        _ => GameResult::Draw,
    }
}

/// Value of an arbitrary position.
pub fn naive_position_value(pos: &Position) -> GameResult {
    match minimax(pos, &mut HashMap::new()) {
        1 => GameResult::LeftWin,
        -1 => GameResult::RightWin,
        _ => GameResult::Draw,
    }
}

pub fn naive_outcome(game: &Game) -> Outcome {
    Outcome::from_results(naive_value(game, Player::Left), naive_value(game, Player::Right))
        .expect("exhaustive play yields a legal outcome")
}
