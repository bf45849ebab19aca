mod common;

use apg_core::poly22::{solve22, Poly22Error};
use apg_core::random::all_games;
use apg_core::{Game, GameResult, Player};

#[test]
fn matches_exhaustive_play_on_three_vertices() {
    for n in 0..=3 {
        for g in all_games(n, 2) {
            for first in [Player::Left, Player::Right] {
                assert_eq!(solve22(&g, first).unwrap(), common::naive_value(&g, first), "{first} {g:?}");
            }
        }
    }
}

#[test]
fn red_path_wins_for_right() {
    let g = Game::from_names(&["u", "v", "w"], &[], &[&["u", "v"], &["v", "w"]]).unwrap();
    assert_eq!(solve22(&g, Player::Right).unwrap(), GameResult::RightWin);
    assert_eq!(solve22(&g, Player::Left).unwrap(), GameResult::Draw);
}

#[test]
fn rejects_larger_edges() {
    let g = Game::from_names(&["a", "b", "c"], &[&["a", "b", "c"]], &[]).unwrap();
    assert!(matches!(solve22(&g, Player::Left), Err(Poly22Error::EdgeTooLarge { size: 3, .. })));
}
