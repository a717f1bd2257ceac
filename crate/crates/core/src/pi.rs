//! Two-sided pi brackets from regular polygon areas.
//!
//! The inscribed regular n-gon has area `(n/2) sin(c/n)` and the
//! circumscribed one `n tan(c/(2n))`; both converge to pi and squeeze it
//! from below and above. Only `n = 2^k` is used, because those are exactly
//! the polygons whose defining angles are reachable by half-angle
//! extraction; the chord-slope chain makes the inscribed areas increase and
//! the circumscribed ones decrease along the doubling sequence, so every
//! depth yields a certified bracket.
//!
//! Digit extraction refuses to print anything both bounds do not agree on:
//! the output is a certificate, not an estimate.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::One;

use crate::angle::TurnFraction;
use crate::dyadic::{Dyadic, Precision, Rounding};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::trig::pair_at_dyadic;

/// Certified bracket `lower <= pi <= upper` from the `2^k`-gon pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiEnclosure {
    pub lower: Dyadic,
    pub upper: Dyadic,
    /// Halving depth: the polygons have `2^depth` vertices.
    pub depth: u32,
    pub precision: Precision,
}

impl PiEnclosure {
    pub fn width(&self) -> Result<Dyadic> {
        self.upper.sub(&self.lower)
    }

    pub fn contains_ratio(&self, x: &Ratio<BigInt>) -> bool {
        self.lower.to_ratio() <= *x && *x <= self.upper.to_ratio()
    }
}

fn check_depth(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::Domain(
            "polygon depth must be at least 2 (the square)",
        ));
    }
    Ok(())
}

/// Enclosure of the inscribed `2^k`-gon area `2^(k-1) sin(1/2^k turn)`.
pub fn inscribed_area(k: u32, p: Precision) -> Result<Interval> {
    check_depth(k)?;
    let t = TurnFraction::from_ratio(Ratio::new(BigInt::one(), BigInt::one() << k));
    let pair = pair_at_dyadic(&t, p.plus(k + 4))?;
    pair.sin().mul_pow2(k as i64 - 1)
}

/// Enclosure of the circumscribed `2^k`-gon area `2^k tan(1/2^(k+1) turn)`.
pub fn circumscribed_area(k: u32, p: Precision) -> Result<Interval> {
    check_depth(k)?;
    let t = TurnFraction::from_ratio(Ratio::new(BigInt::one(), BigInt::one() << (k + 1)));
    let q = p.plus(k + 6);
    let pair = pair_at_dyadic(&t, q)?;
    pair.tan(q)?.mul_pow2(k as i64)
}

/// Certified bracket around pi at depth `k`: the rounded-down inscribed
/// lower bound and the rounded-up circumscribed upper bound.
pub fn pi_enclosure(k: u32, p: Precision) -> Result<PiEnclosure> {
    let lower = inscribed_area(k, p)?.lo().round(p, Rounding::Down);
    let upper = circumscribed_area(k, p)?.hi().round(p, Rounding::Up);
    debug_assert!(lower < upper);
    Ok(PiEnclosure {
        lower,
        upper,
        depth: k,
        precision: p,
    })
}

/// Certified digit string plus the bracket that produced it.
#[derive(Debug, Clone)]
pub struct PiDigits {
    /// `"3."` followed by `digits` certified decimal digits.
    pub text: String,
    pub enclosure: PiEnclosure,
}

/// Computes `digits + 1` significant decimal digits of pi, certified by a
/// bracket whose bounds agree on every printed digit and whose width is
/// below `10^-digits / 2`.
///
/// The bracket width shrinks by nearly a factor of four per depth
/// increment, so the starting depth is about `digits * log2(10) / 2`; the
/// loop widens from there and gives up with a capacity error once the
/// precision cap is reached.
pub fn pi_to_digits(digits: u32, max_bits: u32) -> Result<PiDigits> {
    if digits < 1 {
        return Err(Error::Parameter(
            "digit count must be at least 1".to_string(),
        ));
    }
    // log2(10) = 3.3219...; integer ceilings with a little slack
    let mut k = ((digits as u64 * 33220).div_ceil(20000) + 4) as u32;
    let mut bits = ((digits as u64 * 33220).div_ceil(10000) + 32) as u32;
    let target = Ratio::new(
        BigInt::one(),
        BigInt::from(2) * BigInt::from(10u32).pow(digits),
    );
    loop {
        if bits > max_bits {
            return Err(Error::Capacity(
                "requested digits exceed the configured precision cap",
            ));
        }
        let enclosure = pi_enclosure(k, Precision::new(bits))?;
        if enclosure.width()?.to_ratio() < target {
            let lo_text = enclosure.lower.to_decimal_string(digits, Rounding::Down);
            let hi_text = enclosure.upper.to_decimal_string(digits, Rounding::Down);
            if lo_text == hi_text {
                return Ok(PiDigits {
                    text: lo_text,
                    enclosure,
                });
            }
        }
        k += 3;
        bits = bits.saturating_add(32);
    }
}
