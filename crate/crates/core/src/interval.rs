//! Outward-rounded interval arithmetic over dyadic endpoints.
//!
//! Every operation here preserves containment soundness: for any points
//! inside the argument intervals, the exact mathematical result lies inside
//! the returned interval. Lower endpoints round down, upper endpoints round
//! up, at the precision handed in.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::dyadic::{Dyadic, Precision, Rounding};
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` of dyadic numbers with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Dyadic,
    hi: Dyadic,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Result<Interval> {
        if lo > hi {
            return Err(Error::Parameter(format!(
                "interval endpoints out of order: [{lo}, {hi}]"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: Dyadic) -> Interval {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    /// Test helper; panics when out of order.
    pub fn from_ints(lo: i64, hi: i64) -> Interval {
        Interval::new(Dyadic::from_int(lo), Dyadic::from_int(hi)).unwrap()
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Exact width `hi - lo`.
    pub fn width(&self) -> Result<Dyadic> {
        self.hi.sub(&self.lo)
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_ratio(&self, x: &Ratio<BigInt>) -> bool {
        self.lo.to_ratio() <= *x && *x <= self.hi.to_ratio()
    }

    pub fn contains_int(&self, x: i64) -> bool {
        self.contains(&Dyadic::from_int(x))
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        if !self.intersects(other) {
            return None;
        }
        Some(Interval {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().min(other.hi.clone()),
        })
    }

    /// `other` lies entirely inside `self`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// A dyadic inside the interval, near its center, with a short mantissa.
    pub fn midpoint(&self, p: Precision) -> Result<Dyadic> {
        let mid = self.lo.add(&self.hi)?.halve()?.round(p, Rounding::Down);
        Ok(if mid < self.lo { self.lo.clone() } else { mid })
    }

    /// Exact negation `[-hi, -lo]`.
    pub fn neg(&self) -> Interval {
        Interval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    /// Outward rounding of both endpoints at precision `p`.
    pub fn round_out(&self, p: Precision) -> Interval {
        Interval {
            lo: self.lo.round(p, Rounding::Down),
            hi: self.hi.round(p, Rounding::Up),
        }
    }

    pub fn add(&self, other: &Interval, p: Precision) -> Result<Interval> {
        Ok(Interval {
            lo: self.lo.add(&other.lo)?.round(p, Rounding::Down),
            hi: self.hi.add(&other.hi)?.round(p, Rounding::Up),
        })
    }

    pub fn sub(&self, other: &Interval, p: Precision) -> Result<Interval> {
        self.add(&other.neg(), p)
    }

    pub fn mul(&self, other: &Interval, p: Precision) -> Result<Interval> {
        let products = [
            self.lo.mul(&other.lo)?,
            self.lo.mul(&other.hi)?,
            self.hi.mul(&other.lo)?,
            self.hi.mul(&other.hi)?,
        ];
        let lo = products.iter().min().unwrap().round(p, Rounding::Down);
        let hi = products.iter().max().unwrap().round(p, Rounding::Up);
        Ok(Interval { lo, hi })
    }

    /// Quotient; `other` must not contain zero.
    pub fn div(&self, other: &Interval, p: Precision) -> Result<Interval> {
        if other.contains(&Dyadic::zero()) {
            return Err(Error::Domain(
                "interval division by a range containing zero",
            ));
        }
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&other.lo, &other.hi] {
                let down = a.div(b, p, Rounding::Down)?;
                let up = a.div(b, p, Rounding::Up)?;
                lo = Some(match lo {
                    Some(cur) => cur.min(down),
                    None => down,
                });
                hi = Some(match hi {
                    Some(cur) => cur.max(up),
                    None => up,
                });
            }
        }
        Ok(Interval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
        })
    }

    /// Square root; requires `lo >= 0`.
    pub fn sqrt(&self, p: Precision) -> Result<Interval> {
        if self.lo.is_negative() {
            return Err(Error::Domain("square root of an interval below zero"));
        }
        Ok(Interval {
            lo: self.lo.sqrt(p, Rounding::Down)?,
            hi: self.hi.sqrt(p, Rounding::Up)?,
        })
    }

    /// Exact scaling by a dyadic constant (endpoints swap for negative `k`).
    pub fn scale_exact(&self, k: &Dyadic) -> Result<Interval> {
        let a = self.lo.mul(k)?;
        let b = self.hi.mul(k)?;
        Ok(if k.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        })
    }

    /// Exact scaling by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Result<Interval> {
        Ok(Interval {
            lo: self.lo.mul_pow2(k)?,
            hi: self.hi.mul_pow2(k)?,
        })
    }

    /// Symmetric enlargement by `delta >= 0` on both sides; exact.
    pub fn widen(&self, delta: &Dyadic) -> Result<Interval> {
        debug_assert!(!delta.is_negative());
        Ok(Interval {
            lo: self.lo.sub(delta)?,
            hi: self.hi.add(delta)?,
        })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dy(m: i64, e: i64) -> Dyadic {
        Dyadic::new(BigInt::from(m), e).unwrap()
    }

    fn p(bits: u32) -> Precision {
        Precision::new(bits)
    }

    #[test]
    fn add_exact_endpoints() {
        let a = Interval::from_ints(1, 2);
        let b = Interval::from_ints(3, 4);
        assert_eq!(a.add(&b, p(8)).unwrap(), Interval::from_ints(4, 6));
    }

    #[test]
    fn mul_sign_cases() {
        let a = Interval::from_ints(-1, 2);
        let b = Interval::from_ints(3, 4);
        assert_eq!(a.mul(&b, p(8)).unwrap(), Interval::from_ints(-4, 8));
        let c = Interval::from_ints(-3, -2);
        assert_eq!(c.mul(&c, p(8)).unwrap(), Interval::from_ints(4, 9));
    }

    #[test]
    fn sqrt_of_two_width_bound() {
        for bits in [8u32, 16, 32, 64] {
            let two = Interval::point(dy(2, 0));
            let r = two.sqrt(p(bits)).unwrap();
            // contains sqrt(2): lo^2 <= 2 <= hi^2
            assert!(r.lo().mul(r.lo()).unwrap() <= dy(2, 0));
            assert!(r.hi().mul(r.hi()).unwrap() >= dy(2, 0));
            let width = r.width().unwrap();
            assert!(width < Dyadic::pow2(2 - bits as i64).unwrap());
        }
    }

    #[test]
    fn div_requires_nonzero_range() {
        let a = Interval::from_ints(1, 2);
        let b = Interval::from_ints(-1, 1);
        assert!(matches!(a.div(&b, p(8)), Err(Error::Domain(_))));
        let c = Interval::from_ints(-4, -2);
        let q = a.div(&c, p(16)).unwrap();
        // [1,2]/[-4,-2] = [-1, -1/4]
        assert_eq!(q.lo(), &dy(-1, 0));
        assert_eq!(q.hi(), &dy(-1, -2));
    }

    #[test]
    fn width_contains_midpoint() {
        let a = Interval::new(dy(1, 0), dy(3, -1).add(&dy(1, 0)).unwrap()).unwrap();
        assert_eq!(a.width().unwrap(), dy(3, -1));
        assert!(Interval::from_ints(0, 1).contains(&Dyadic::one()));
        let m = Interval::from_ints(0, 1).midpoint(p(8)).unwrap();
        assert_eq!(m, dy(1, -1));
        let pt = Interval::point(dy(7, -3));
        assert_eq!(pt.midpoint(p(4)).unwrap(), dy(7, -3));
    }

    #[test]
    fn neg_and_widen_are_exact() {
        let a = Interval::from_ints(-1, 3);
        assert_eq!(a.neg(), Interval::from_ints(-3, 1));
        let w = a.widen(&dy(1, -1)).unwrap();
        assert_eq!(w.lo(), &dy(-3, -1));
        assert_eq!(w.hi(), &dy(7, -1));
    }

    #[test]
    fn rejects_reversed_endpoints() {
        assert!(Interval::new(dy(1, 0), dy(0, 0)).is_err());
    }
}
