use std::fmt;
use std::ops::Mul;

/// Natural number or infinity; infinity is the distance of the zero code.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Infinite => None,
        }
    }

    /// Parses a decimal number or `inf`.
    pub fn parse(s: &str) -> Option<ExtNat> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            Some(ExtNat::Infinite)
        } else {
            s.parse().ok().map(ExtNat::Finite)
        }
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Finite(v)
    }
}

impl From<usize> for ExtNat {
    fn from(v: usize) -> Self {
        ExtNat::Finite(v as u64)
    }
}

impl Mul for ExtNat {
    type Output = ExtNat;

    fn mul(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => ExtNat::Finite(a * b),
            _ => ExtNat::Infinite,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinite => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::ExtNat::{self, *};

    #[test]
    fn order_and_products() {
        assert!(Finite(1000) < Infinite);
        assert_eq!(Finite(3) * Finite(4), Finite(12));
        assert_eq!(Finite(3) * Infinite, Infinite);
        assert_eq!(Infinite.to_string(), "inf");
        assert_eq!(ExtNat::parse("inf"), Some(Infinite));
        assert_eq!(ExtNat::parse(" 7"), Some(Finite(7)));
        assert_eq!(
            [Finite(2), Infinite, Finite(1)].iter().min(),
            Some(&Finite(1))
        );
    }
}
