//! Joint sine/cosine enclosures built from the quarter-turn normalization,
//! the addition formulas, and half-angle extraction.
//!
//! Angles live in turn units internally: the full circle is 1, the right
//! angle is 1/4, and every dyadic fraction of a turn is reachable exactly by
//! halving the quarter turn and recombining with the addition formulas.
//! Angles with non-dyadic denominators are handled by evaluating at a nearby
//! dyadic fraction and widening with a derived continuity bound: on
//! `(0, 1/8]` of a turn the chord-slope chain pins `sin(t) <= 8t` (the
//! constant 8 is `tan` at the eighth turn divided by the eighth turn), which
//! gives `|sin(a) - sin(b)| <= 8|a - b|` and the same for cosine.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::angle::{AngleUnit, Rational, TurnFraction};
use crate::dyadic::{Dyadic, Precision, Rounding};
use crate::error::{Error, Result};
use crate::interval::Interval;

/// Joint enclosure of sine and cosine at one exact angle.
///
/// Both components are guaranteed enclosures of the true values at
/// `angle` turns. Pairs are only constructed by operations that preserve
/// that guarantee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigPair {
    sin: Interval,
    cos: Interval,
    angle: TurnFraction,
}

impl TrigPair {
    /// The normalization point: `sin(1/4) = 1`, `cos(1/4) = 0`, exactly.
    pub fn at_quarter() -> TrigPair {
        TrigPair {
            sin: Interval::point(Dyadic::one()),
            cos: Interval::point(Dyadic::zero()),
            angle: TurnFraction::quarter(),
        }
    }

    /// `sin(0) = 0`, `cos(0) = 1`, exactly.
    pub fn at_zero() -> TrigPair {
        TrigPair {
            sin: Interval::point(Dyadic::zero()),
            cos: Interval::point(Dyadic::one()),
            angle: TurnFraction::zero(),
        }
    }

    pub fn sin(&self) -> &Interval {
        &self.sin
    }

    pub fn cos(&self) -> &Interval {
        &self.cos
    }

    pub fn angle(&self) -> &TurnFraction {
        &self.angle
    }

    /// Pair at the sum of the two angles via the addition formulas
    /// `sin(x+y) = sin x cos y + cos x sin y` and
    /// `cos(x+y) = cos x cos y - sin x sin y`.
    pub fn add(&self, other: &TrigPair, p: Precision) -> Result<TrigPair> {
        let sin = self
            .sin
            .mul(&other.cos, p)?
            .add(&self.cos.mul(&other.sin, p)?, p)?;
        let cos = self
            .cos
            .mul(&other.cos, p)?
            .sub(&self.sin.mul(&other.sin, p)?, p)?;
        Ok(TrigPair {
            sin,
            cos,
            angle: self.angle.add(&other.angle),
        })
    }

    /// Pair at the negated angle; exact (`sin` is odd, `cos` is even).
    pub fn negate(&self) -> TrigPair {
        TrigPair {
            sin: self.sin.neg(),
            cos: self.cos.clone(),
            angle: self.angle.neg(),
        }
    }

    /// Half-angle extraction: `cos(t/2) = sqrt((1 + cos t)/2)` and
    /// `sin(t/2) = sqrt((1 - cos t)/2)`, valid because the half angle lies
    /// in `[0, 1/4]` where both functions are nonnegative.
    ///
    /// Requires `0 <= angle <= 1/2` turns.
    pub fn halve(&self, p: Precision) -> Result<TrigPair> {
        let t = self.angle.as_ratio();
        if t.is_negative() || *t > Rational::new(BigInt::one(), BigInt::from(2)) {
            return Err(Error::Domain(
                "half-angle extraction requires an angle in [0, 1/2] turns",
            ));
        }
        let unit = unit_interval();
        let one = Interval::point(Dyadic::one());
        let cos_sq = clamp(one.add(&self.cos, p)?.mul_pow2(-1)?, &unit)?;
        let sin_sq = clamp(one.sub(&self.cos, p)?.mul_pow2(-1)?, &unit)?;
        Ok(TrigPair {
            sin: clamp(sin_sq.sqrt(p)?, &unit)?,
            cos: clamp(cos_sq.sqrt(p)?, &unit)?,
            angle: self.angle.halve(),
        })
    }

    /// Outward enclosure of `sin/cos`; errors when the cosine enclosure
    /// contains zero.
    pub fn tan(&self, p: Precision) -> Result<Interval> {
        if self.cos.contains(&Dyadic::zero()) {
            return Err(Error::Domain(
                "tangent undefined: cosine enclosure contains zero",
            ));
        }
        self.sin.div(&self.cos, p)
    }

    /// Enclosure of `sin^2 + cos^2`, which must contain 1 for every pair.
    pub fn pythagorean_sum(&self, p: Precision) -> Result<Interval> {
        self.sin
            .mul(&self.sin, p)?
            .add(&self.cos.mul(&self.cos, p)?, p)
    }
}

fn unit_interval() -> Interval {
    Interval::from_ints(0, 1)
}

fn symmetric_unit_interval() -> Interval {
    Interval::from_ints(-1, 1)
}

fn clamp(iv: Interval, bounds: &Interval) -> Result<Interval> {
    iv.intersect(bounds)
        .ok_or(Error::Domain("trigonometric enclosure left its range"))
}

/// Working precision for a dyadic evaluation at halving depth `depth`.
///
/// Each doubling step at most doubles component widths and the square roots
/// near small angles trade one cancelled bit per level, so `3 * depth` guard
/// bits absorb the worst case with room to spare.
fn working_precision(p: Precision, depth: u32) -> Result<Precision> {
    let bits = p.bits() as u64 + 3 * depth as u64 + 16;
    u32::try_from(bits)
        .map(Precision::new)
        .map_err(|_| Error::Capacity("working precision out of range"))
}

/// Pair at `numer / 2^depth` turns, built by halving the quarter pair down
/// to the base angle `1/2^depth` and then double-and-add over the numerator
/// bits.
fn pair_at_nonneg_dyadic(numer: &BigUint, depth: u32, q: Precision) -> Result<TrigPair> {
    if numer.is_zero() {
        return Ok(TrigPair::at_zero());
    }
    let mut base = TrigPair::at_quarter();
    for _ in 2..depth {
        base = base.halve(q)?;
    }
    let mut acc = base.clone();
    let top = numer.bits() - 1;
    for i in (0..top).rev() {
        acc = acc.add(&acc, q)?;
        if numer.bit(i) {
            acc = acc.add(&base, q)?;
        }
    }
    Ok(acc)
}

/// Certified pair at a dyadic turn fraction.
///
/// The fraction is reduced by whole turns first (the full-turn pair is the
/// exact point (0, 1), so the reduction is sound) and negative angles route
/// through the exact parity of the pair. The enclosure widths satisfy
/// `width <= 2^(4 - p.bits())`.
pub fn pair_at_dyadic(t: &TurnFraction, p: Precision) -> Result<TrigPair> {
    if t.dyadic_exponent().is_none() {
        return Err(Error::Domain(
            "turn fraction denominator is not a power of two",
        ));
    }
    let reduced = t.reduce_signed();
    let negative = reduced.is_negative();
    let magnitude = if negative { reduced.neg() } else { reduced };

    let k = magnitude
        .dyadic_exponent()
        .expect("reduction preserves dyadic denominators");
    let depth = k.max(2);
    let q = working_precision(p, depth)?;
    let numer = magnitude.as_ratio().numer().magnitude() << (depth - k);
    let raw = pair_at_nonneg_dyadic(&numer, depth, q)?;

    let range = symmetric_unit_interval();
    let sin = clamp(raw.sin, &range)?;
    let cos = clamp(raw.cos, &range)?;
    Ok(TrigPair {
        sin: if negative { sin.neg() } else { sin },
        cos,
        angle: t.clone(),
    })
}

/// Upper dyadic bound on `8 * dt`, a uniform modulus of continuity for both
/// sine and cosine in turn units.
pub fn continuity_bound(dt: &Rational) -> Result<Dyadic> {
    if dt.is_negative() {
        return Err(Error::Domain("continuity bound needs a nonnegative width"));
    }
    let t = TurnFraction::from_ratio(dt * BigInt::from(8));
    match t.to_dyadic() {
        Some(d) => Ok(d),
        None => Dyadic::from_ratio(t.as_ratio(), Precision::new(64), Rounding::Up),
    }
}

/// Truncation of a nonnegative rational to `bits` fractional binary digits.
fn truncate_to_dyadic(x: &Rational, bits: u32) -> TurnFraction {
    let scaled = (x.numer() << bits).div_floor(x.denom());
    TurnFraction::from_ratio(Rational::new(scaled, BigInt::one() << bits))
}

/// Certified pair at an exact rational angle in an arbitrary unit.
///
/// Dyadic-reachable turn fractions evaluate directly; other rationals are
/// truncated to a nearby dyadic fraction and widened by the continuity
/// bound, keeping the total width within `2^(4 - p.bits())`.
pub fn eval(unit: &AngleUnit, angle: &Rational, p: Precision) -> Result<TrigPair> {
    let t = unit.to_turns(angle);
    if t.is_dyadic() {
        return pair_at_dyadic(&t, p);
    }
    let reduced = t.reduce_signed();
    let negative = reduced.is_negative();
    let magnitude = if negative { reduced.neg() } else { reduced };

    let cutoff = p.bits() + 2;
    let approx = truncate_to_dyadic(magnitude.as_ratio(), cutoff);
    let delta = magnitude.as_ratio() - approx.as_ratio();
    let slack = continuity_bound(&delta)?;

    let pair = pair_at_dyadic(&approx, p.plus(2))?;
    let range = symmetric_unit_interval();
    let sin = clamp(pair.sin.widen(&slack)?, &range)?;
    let cos = clamp(pair.cos.widen(&slack)?, &range)?;
    Ok(TrigPair {
        sin: if negative { sin.neg() } else { sin },
        cos,
        angle: t,
    })
}

/// Sine and cosine enclosures valid simultaneously for every angle in
/// `[lo, hi]` turns. This is the entry point for interval angles, e.g.
/// radian inputs whose turn fraction is only known inside a pi bracket.
pub fn sin_cos_over(lo: &Rational, hi: &Rational, p: Precision) -> Result<(Interval, Interval)> {
    if lo > hi {
        return Err(Error::Parameter(format!(
            "angle interval out of order: [{lo}, {hi}]"
        )));
    }
    let mid = (lo + hi) / BigInt::from(2);
    let shift = mid.floor();
    let lo_r = lo - &shift;
    let hi_r = hi - &shift;
    let mid_r = &mid - &shift;

    let cutoff = p.bits() + 2;
    let center = truncate_to_dyadic(&mid_r, cutoff);
    let delta_hi = &hi_r - center.as_ratio();
    let delta_lo = center.as_ratio() - &lo_r;
    let delta = delta_hi.max(delta_lo).max(Rational::zero());
    let slack = continuity_bound(&delta)?;

    let pair = pair_at_dyadic(&center, p.plus(2))?;
    let range = symmetric_unit_interval();
    let sin = clamp(pair.sin.widen(&slack)?, &range)?;
    let cos = clamp(pair.cos.widen(&slack)?, &range)?;
    Ok((sin, cos))
}
