//! Exact rational angle units and turn fractions.
//!
//! Internally every angle is a [`TurnFraction`]: the fraction of a full
//! circle it spans. An [`AngleUnit`] carries the positive rational measure
//! of the full circle in some external convention (1 for turns, 360 for
//! degrees) and converts at the boundary.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

pub type Rational = Ratio<BigInt>;

/// Positive rational measure of the full circle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngleUnit {
    circle: Rational,
}

impl AngleUnit {
    /// Full circle measures 1.
    pub fn turns() -> AngleUnit {
        AngleUnit {
            circle: Rational::one(),
        }
    }

    /// Full circle measures 360.
    pub fn degrees() -> AngleUnit {
        AngleUnit {
            circle: Rational::from_integer(BigInt::from(360)),
        }
    }

    /// Full circle measures 400.
    pub fn gradians() -> AngleUnit {
        AngleUnit {
            circle: Rational::from_integer(BigInt::from(400)),
        }
    }

    pub fn custom(circle: Rational) -> Result<AngleUnit> {
        if !circle.is_positive() {
            return Err(Error::Parameter(format!(
                "angle unit must be positive, got {circle}"
            )));
        }
        Ok(AngleUnit { circle })
    }

    /// The measure of the full circle in this unit.
    pub fn circle(&self) -> &Rational {
        &self.circle
    }

    /// Converts an angle given in this unit into a turn fraction.
    pub fn to_turns(&self, angle: &Rational) -> TurnFraction {
        TurnFraction::from_ratio(angle / &self.circle)
    }
}

impl fmt::Display for AngleUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c={}", self.circle)
    }
}

/// Angle expressed as an exact fraction of the full circle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TurnFraction {
    turns: Rational,
}

impl TurnFraction {
    pub fn new(numer: i64, denom: i64) -> Result<TurnFraction> {
        if denom == 0 {
            return Err(Error::Parameter("zero denominator".to_string()));
        }
        Ok(TurnFraction {
            turns: Rational::new(BigInt::from(numer), BigInt::from(denom)),
        })
    }

    pub fn from_ratio(turns: Rational) -> TurnFraction {
        TurnFraction { turns }
    }

    pub fn zero() -> TurnFraction {
        TurnFraction {
            turns: Rational::zero(),
        }
    }

    pub fn quarter() -> TurnFraction {
        TurnFraction::new(1, 4).unwrap()
    }

    pub fn as_ratio(&self) -> &Rational {
        &self.turns
    }

    pub fn is_zero(&self) -> bool {
        self.turns.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.turns.is_negative()
    }

    /// `Some(k)` when the reduced denominator equals `2^k`; such angles are
    /// reachable exactly by half-angle extraction and double-and-add.
    pub fn dyadic_exponent(&self) -> Option<u32> {
        let d = self.turns.denom().magnitude();
        if d.count_ones() != 1 {
            return None;
        }
        (d.bits() - 1).to_u32()
    }

    pub fn is_dyadic(&self) -> bool {
        self.dyadic_exponent().is_some()
    }

    /// Exact dyadic value of the fraction, when the denominator allows it.
    pub fn to_dyadic(&self) -> Option<Dyadic> {
        let k = self.dyadic_exponent()?;
        Dyadic::new(self.turns.numer().clone(), -(k as i64)).ok()
    }

    /// Shifted by whole turns into `[0, 1)`.
    pub fn reduce_mod_one(&self) -> TurnFraction {
        let floor = self.turns.floor();
        TurnFraction {
            turns: &self.turns - floor,
        }
    }

    /// Shifted by whole turns into `(-1/2, 1/2]`. Symmetric around zero, so
    /// reducing `-t` gives the negation of reducing `t` (except at the
    /// half-turn point itself, where sine is exactly zero anyway).
    pub fn reduce_signed(&self) -> TurnFraction {
        let u = self.reduce_mod_one();
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        if u.turns > half {
            TurnFraction {
                turns: &u.turns - Rational::one(),
            }
        } else {
            u
        }
    }

    pub fn add(&self, other: &TurnFraction) -> TurnFraction {
        TurnFraction {
            turns: &self.turns + &other.turns,
        }
    }

    pub fn sub(&self, other: &TurnFraction) -> TurnFraction {
        TurnFraction {
            turns: &self.turns - &other.turns,
        }
    }

    pub fn neg(&self) -> TurnFraction {
        TurnFraction {
            turns: -&self.turns,
        }
    }

    pub fn halve(&self) -> TurnFraction {
        TurnFraction {
            turns: &self.turns / BigInt::from(2),
        }
    }

    pub fn scale(&self, n: u32) -> TurnFraction {
        TurnFraction {
            turns: &self.turns * BigInt::from(n),
        }
    }
}

impl fmt::Display for TurnFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.turns.denom().is_one() {
            write!(f, "{}", self.turns.numer())
        } else {
            write!(f, "{}/{}", self.turns.numer(), self.turns.denom())
        }
    }
}

/// Parses an exact rational literal: optional sign, integer, or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::Parameter(format!("{msg}: {text:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let numer: BigInt = n
                .trim()
                .parse()
                .map_err(|_| bad("bad rational numerator"))?;
            let denom: BigInt = d
                .trim()
                .parse()
                .map_err(|_| bad("bad rational denominator"))?;
            if denom.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        }
        None => {
            let n: BigInt = text.trim().parse().map_err(|_| bad("bad integer"))?;
            Ok(Rational::from_integer(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tf(n: i64, d: i64) -> TurnFraction {
        TurnFraction::new(n, d).unwrap()
    }

    #[test]
    fn dyadic_detection() {
        assert_eq!(tf(3, 8).dyadic_exponent(), Some(3));
        assert_eq!(tf(1, 1).dyadic_exponent(), Some(0));
        assert_eq!(tf(1, 12).dyadic_exponent(), None);
        assert_eq!(tf(2, 8).dyadic_exponent(), Some(2)); // reduced to 1/4
        assert_eq!(
            tf(3, 8).to_dyadic().unwrap(),
            Dyadic::new(3.into(), -3).unwrap()
        );
    }

    #[test]
    fn reductions() {
        assert_eq!(tf(9, 8).reduce_mod_one(), tf(1, 8));
        assert_eq!(tf(-1, 8).reduce_mod_one(), tf(7, 8));
        assert_eq!(tf(7, 8).reduce_signed(), tf(-1, 8));
        assert_eq!(tf(1, 2).reduce_signed(), tf(1, 2));
        // symmetry: reduce(-t) = -reduce(t) away from the half turn
        for (n, d) in [(1i64, 8i64), (3, 8), (5, 12), (7, 16)] {
            let t = tf(n, d);
            assert_eq!(t.neg().reduce_signed(), t.reduce_signed().neg());
        }
    }

    #[test]
    fn unit_conversion_to_turns() {
        let deg = AngleUnit::degrees();
        assert_eq!(deg.to_turns(&Rational::from_integer(90.into())), tf(1, 4));
        assert_eq!(deg.to_turns(&Rational::from_integer(30.into())), tf(1, 12));
        let grad = AngleUnit::gradians();
        assert_eq!(grad.to_turns(&Rational::from_integer(100.into())), tf(1, 4));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(
            parse_rational("3/4").unwrap(),
            Rational::new(3.into(), 4.into())
        );
        assert_eq!(
            parse_rational("-7").unwrap(),
            Rational::from_integer((-7).into())
        );
        assert_eq!(
            parse_rational("-6/8").unwrap(),
            Rational::new((-3).into(), 4.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(AngleUnit::custom(Rational::zero()).is_err());
    }
}
