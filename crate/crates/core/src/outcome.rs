//! Results, outcomes, the Left-preference order and the disjoint-union table.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::game::Player;

/// Result of optimal play for a fixed first player. Declaration order is
/// Left's preference: `RightWin < Draw < LeftWin`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GameResult {
    RightWin,
    Draw,
    LeftWin,
}

impl GameResult {
    pub fn win_for(player: Player) -> GameResult {
        match player {
            Player::Left => GameResult::LeftWin,
            Player::Right => GameResult::RightWin,
        }
    }

    pub fn is_win_for(self, player: Player) -> bool {
        self == GameResult::win_for(player)
    }

    /// The result of the color-swapped game.
    pub fn swapped(self) -> GameResult {
        match self {
            GameResult::LeftWin => GameResult::RightWin,
            GameResult::Draw => GameResult::Draw,
            GameResult::RightWin => GameResult::LeftWin,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GameResult::LeftWin => "LeftWin",
            GameResult::Draw => "Draw",
            GameResult::RightWin => "RightWin",
        }
    }
}

impl fmt::Display for GameResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The pair (result when Left starts, result when Right starts).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    L,
    LMinus,
    N,
    D,
    RMinus,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no outcome has {when_left_starts} when Left starts and {when_right_starts} when Right starts")]
pub struct IllegalOutcome {
    pub when_left_starts: GameResult,
    pub when_right_starts: GameResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown outcome `{0}` (expected one of L, L-, N, D, R-, R)")]
pub struct ParseOutcomeError(pub String);

impl Outcome {
    pub const ALL: [Outcome; 6] = [Outcome::L, Outcome::LMinus, Outcome::N, Outcome::D, Outcome::RMinus, Outcome::R];

    /// Rejects the three combinations where going second is strictly
    /// better than going first for one of the players.
    pub fn from_results(
        when_left_starts: GameResult,
        when_right_starts: GameResult,
    ) -> Result<Outcome, IllegalOutcome> {
        use GameResult::*;
        match (when_left_starts, when_right_starts) {
            (LeftWin, LeftWin) => Ok(Outcome::L),
            (LeftWin, Draw) => Ok(Outcome::LMinus),
            (LeftWin, RightWin) => Ok(Outcome::N),
            (Draw, Draw) => Ok(Outcome::D),
            (Draw, RightWin) => Ok(Outcome::RMinus),
            (RightWin, RightWin) => Ok(Outcome::R),
            _ => Err(IllegalOutcome { when_left_starts, when_right_starts }),
        }
    }

    pub fn when_left_starts(self) -> GameResult {
        match self {
            Outcome::L | Outcome::LMinus | Outcome::N => GameResult::LeftWin,
            Outcome::D | Outcome::RMinus => GameResult::Draw,
            Outcome::R => GameResult::RightWin,
        }
    }

    pub fn when_right_starts(self) -> GameResult {
        match self {
            Outcome::L => GameResult::LeftWin,
            Outcome::LMinus | Outcome::D => GameResult::Draw,
            Outcome::N | Outcome::RMinus | Outcome::R => GameResult::RightWin,
        }
    }

    pub fn when_starts(self, first: Player) -> GameResult {
        match first {
            Player::Left => self.when_left_starts(),
            Player::Right => self.when_right_starts(),
        }
    }

    /// Outcome of the color-swapped game.
    pub fn swapped(self) -> Outcome {
        match self {
            Outcome::L => Outcome::R,
            Outcome::LMinus => Outcome::RMinus,
            Outcome::N => Outcome::N,
            Outcome::D => Outcome::D,
            Outcome::RMinus => Outcome::LMinus,
            Outcome::R => Outcome::L,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Outcome::L => "L",
            Outcome::LMinus => "L-",
            Outcome::N => "N",
            Outcome::D => "D",
            Outcome::RMinus => "R-",
            Outcome::R => "R",
        }
    }

    fn index(self) -> usize {
        Outcome::ALL.iter().position(|&o| o == self).expect("listed")
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Outcome {
    type Err = ParseOutcomeError;

    fn from_str(s: &str) -> Result<Outcome, ParseOutcomeError> {
        match s {
            "L" => Ok(Outcome::L),
            "L-" | "L⁻" | "Lminus" => Ok(Outcome::LMinus),
            "N" => Ok(Outcome::N),
            "D" => Ok(Outcome::D),
            "R-" | "R⁻" | "Rminus" => Ok(Outcome::RMinus),
            "R" => Ok(Outcome::R),
            _ => Err(ParseOutcomeError(s.to_string())),
        }
    }
}

/// `a ≤_L b`: componentwise comparison from Left's point of view.
pub fn leq_l(a: Outcome, b: Outcome) -> bool {
    a.when_left_starts() <= b.when_left_starts() && a.when_right_starts() <= b.when_right_starts()
}

use Outcome::{LMinus as Lm, RMinus as Rm, D, L, N, R};

/// Possible outcomes of `G ∪ G'`, indexed `[o(G')][o(G)]` in the order of
/// [`Outcome::ALL`].
const UNION_TABLE: [[&[Outcome]; 6]; 6] = [
    // G' = L
    [&[L], &[L], &[L, Lm, N], &[L], &[L, Lm, N], &[L, Lm, N, Rm, R]],
    // G' = L-
    [&[L], &[L, Lm], &[L, Lm, N], &[Lm], &[Lm, N, Rm], &[N, Rm, R]],
    // G' = N
    [&[L, Lm, N], &[L, Lm, N], &[L, Lm, N, Rm, R], &[N], &[N, Rm, R], &[N, Rm, R]],
    // G' = D
    [&[L], &[Lm], &[N], &[D], &[Rm], &[R]],
    // G' = R-
    [&[L, Lm, N], &[Lm, N, Rm], &[N, Rm, R], &[Rm], &[Rm, R], &[R]],
    // G' = R
    [&[L, Lm, N, Rm, R], &[N, Rm, R], &[N, Rm, R], &[R], &[R], &[R]],
];

/// The outcomes a disjoint union can have given its components' outcomes.
pub fn union_cell(o: Outcome, o_prime: Outcome) -> &'static [Outcome] {
    UNION_TABLE[o_prime.index()][o.index()]
}

/// Whether `observed` is allowed for `G ∪ G'` with `o(G) = o` and
/// `o(G') = o_prime`.
pub fn verify_union_cell(o: Outcome, o_prime: Outcome, observed: Outcome) -> bool {
    union_cell(o, o_prime).contains(&observed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use GameResult::*;

    #[test]
    fn table_one_has_six_rows() {
        let mut legal = 0;
        for a in [LeftWin, Draw, RightWin] {
            for b in [LeftWin, Draw, RightWin] {
                if let Ok(o) = Outcome::from_results(a, b) {
                    legal += 1;
                    assert_eq!((o.when_left_starts(), o.when_right_starts()), (a, b));
                }
            }
        }
        assert_eq!(legal, 6);
        assert!(Outcome::from_results(RightWin, LeftWin).is_err());
        assert!(Outcome::from_results(Draw, LeftWin).is_err());
        assert!(Outcome::from_results(RightWin, Draw).is_err());
    }

    #[test]
    fn partial_order_examples() {
        assert!(leq_l(R, L));
        assert!(!leq_l(N, D));
        assert!(!leq_l(D, N));
        assert!(leq_l(Lm, L));
        let chain = [R, Rm, D, Lm, L];
        for w in chain.windows(2) {
            assert!(leq_l(w[0], w[1]));
            assert!(!leq_l(w[1], w[0]));
        }
        assert!(leq_l(Rm, N) && leq_l(N, Lm));
    }

    #[test]
    fn order_is_reflexive_antisymmetric_transitive() {
        for a in Outcome::ALL {
            assert!(leq_l(a, a));
            for b in Outcome::ALL {
                if leq_l(a, b) && leq_l(b, a) {
                    assert_eq!(a, b);
                }
                for c in Outcome::ALL {
                    if leq_l(a, b) && leq_l(b, c) {
                        assert!(leq_l(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn union_table_spot_checks() {
        assert!(verify_union_cell(L, D, L));
        assert_eq!(union_cell(L, D), &[L]);
        assert!(!verify_union_cell(L, R, D));
        assert!(verify_union_cell(D, D, D));
    }

    #[test]
    fn union_table_is_commutative_and_color_symmetric() {
        for a in Outcome::ALL {
            for b in Outcome::ALL {
                let mut ab = union_cell(a, b).to_vec();
                let mut ba = union_cell(b, a).to_vec();
                ab.sort_by_key(|o| o.index());
                ba.sort_by_key(|o| o.index());
                assert_eq!(ab, ba, "cell ({a},{b})");
                let mut swapped: Vec<_> = union_cell(a.swapped(), b.swapped()).iter().map(|o| o.swapped()).collect();
                swapped.sort_by_key(|o| o.index());
                assert_eq!(ab, swapped, "swap of ({a},{b})");
            }
        }
    }

    #[test]
    fn draw_component_is_neutral() {
        for o in Outcome::ALL {
            assert_eq!(union_cell(D, o), &[o]);
        }
    }

    #[test]
    fn parses_symbols() {
        for o in Outcome::ALL {
            assert_eq!(o.symbol().parse::<Outcome>().unwrap(), o);
        }
        assert!("X".parse::<Outcome>().is_err());
    }
}
