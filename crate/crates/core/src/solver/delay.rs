use std::fmt;

pub(crate) const INF: u32 = u32::MAX;

/// Value of the delay scoring game: how many passes the antagonist can
/// collect before the protagonist fills an edge, or infinity when the
/// protagonist cannot force a fill at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Delay {
    Finite(u32),
    Infinite,
}

impl Delay {
    pub(crate) fn from_raw(d: u32) -> Delay {
        if d == INF {
            Delay::Infinite
        } else {
            Delay::Finite(d)
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Delay::Finite(_))
    }
}

impl fmt::Display for Delay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delay::Finite(d) => write!(f, "{d}"),
            Delay::Infinite => f.write_str("inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_largest() {
        assert!(Delay::Finite(u32::MAX - 1) < Delay::Infinite);
        assert_eq!(Delay::Infinite.to_string(), "inf");
        assert_eq!(Delay::from_raw(3), Delay::Finite(3));
    }
}
