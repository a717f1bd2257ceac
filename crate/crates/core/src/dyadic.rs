//! Exact dyadic scalars with directed rounding.
//!
//! A [`Dyadic`] is `mantissa * 2^exponent` with an arbitrary-size signed
//! mantissa and a bounded machine exponent. Addition, subtraction, and
//! multiplication are exact and never round. Division and square root are
//! inexact in general and therefore take a [`Precision`] and a [`Rounding`]
//! direction, returning a one-sided bound of the true value with relative
//! error below `2^(1 - bits)`.
//!
//! Canonical form: the mantissa is odd, or the value is zero and both fields
//! are zero. Structural equality therefore coincides with value equality.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Smallest admissible precision.
pub const MIN_PRECISION_BITS: u32 = 4;

/// Exponents are confined to this symmetric range; leaving it signals a
/// capacity error rather than silently wrapping.
pub const EXPONENT_LIMIT: i64 = 1 << 48;

/// Largest bit shift accepted when aligning operands; beyond this the exact
/// result would not fit in memory anyway.
const MAX_SHIFT: i64 = 1 << 32;

/// Requested number of significant binary digits for inexact operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision {
    bits: u32,
}

impl Precision {
    /// Panics if `bits < 4`; use [`Precision::try_new`] for fallible input.
    pub fn new(bits: u32) -> Self {
        assert!(
            bits >= MIN_PRECISION_BITS,
            "precision must be at least {MIN_PRECISION_BITS} bits"
        );
        Precision { bits }
    }

    pub fn try_new(bits: u32) -> Result<Self> {
        if bits < MIN_PRECISION_BITS {
            return Err(Error::Parameter(format!(
                "precision must be at least {MIN_PRECISION_BITS} bits, got {bits}"
            )));
        }
        Ok(Precision { bits })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Widened precision for internal slack; saturates at `u32::MAX`.
    pub(crate) fn plus(self, extra: u32) -> Precision {
        Precision {
            bits: self.bits.saturating_add(extra),
        }
    }
}

/// Rounding direction: `Down` toward negative infinity, `Up` toward
/// positive infinity. No other modes exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Down,
    Up,
}

impl Rounding {
    pub fn flip(self) -> Rounding {
        match self {
            Rounding::Down => Rounding::Up,
            Rounding::Up => Rounding::Down,
        }
    }
}

/// Exact dyadic number `mantissa * 2^exponent` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

fn check_exponent(e: i64) -> Result<i64> {
    if e.abs() > EXPONENT_LIMIT {
        Err(Error::Capacity("dyadic exponent out of range"))
    } else {
        Ok(e)
    }
}

fn check_shift(s: i64) -> Result<u64> {
    if !(0..=MAX_SHIFT).contains(&s) {
        Err(Error::Capacity("alignment shift out of range"))
    } else {
        Ok(s as u64)
    }
}

fn directed_div(n: &BigInt, d: &BigInt, dir: Rounding) -> BigInt {
    match dir {
        Rounding::Down => n.div_floor(d),
        Rounding::Up => n.div_ceil(d),
    }
}

impl Dyadic {
    /// Canonicalize without range checks; callers validate the exponent.
    fn canonical(mantissa: BigInt, exponent: i64) -> Dyadic {
        if mantissa.is_zero() {
            return Dyadic {
                mantissa,
                exponent: 0,
            };
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        Dyadic {
            mantissa: mantissa >> tz,
            exponent: exponent + tz as i64,
        }
    }

    pub fn new(mantissa: BigInt, exponent: i64) -> Result<Dyadic> {
        if !mantissa.is_zero() {
            check_exponent(exponent)?;
        }
        let d = Dyadic::canonical(mantissa, exponent);
        if !d.is_zero() {
            check_exponent(d.exponent)?;
        }
        Ok(d)
    }

    pub fn zero() -> Dyadic {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Dyadic {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: 0,
        }
    }

    pub fn from_int(v: i64) -> Dyadic {
        Dyadic::canonical(BigInt::from(v), 0)
    }

    /// `2^e` as a dyadic.
    pub fn pow2(e: i64) -> Result<Dyadic> {
        check_exponent(e)?;
        Ok(Dyadic {
            mantissa: BigInt::one(),
            exponent: e,
        })
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    /// Number of significant bits in the mantissa (0 for zero).
    pub fn bit_length(&self) -> u64 {
        self.mantissa.bits()
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: if self.mantissa.is_zero() {
                0
            } else {
                self.exponent
            },
        }
    }

    pub fn abs(&self) -> Dyadic {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact sum; only alignment capacity can fail, never accuracy.
    pub fn add(&self, rhs: &Dyadic) -> Result<Dyadic> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        let e = self.exponent.min(rhs.exponent);
        let sa = check_shift(self.exponent - e)?;
        let sb = check_shift(rhs.exponent - e)?;
        let sum = (&self.mantissa << sa) + (&rhs.mantissa << sb);
        Dyadic::new(sum, e)
    }

    pub fn sub(&self, rhs: &Dyadic) -> Result<Dyadic> {
        self.add(&rhs.neg())
    }

    /// Exact product.
    pub fn mul(&self, rhs: &Dyadic) -> Result<Dyadic> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Dyadic::zero());
        }
        let e = self
            .exponent
            .checked_add(rhs.exponent)
            .ok_or(Error::Capacity("dyadic exponent out of range"))?;
        check_exponent(e)?;
        // odd * odd stays odd, so the product is already canonical
        Ok(Dyadic {
            mantissa: &self.mantissa * &rhs.mantissa,
            exponent: e,
        })
    }

    /// Exact scaling by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Result<Dyadic> {
        if self.is_zero() {
            return Ok(Dyadic::zero());
        }
        let e = self
            .exponent
            .checked_add(k)
            .ok_or(Error::Capacity("dyadic exponent out of range"))?;
        check_exponent(e)?;
        Ok(Dyadic {
            mantissa: self.mantissa.clone(),
            exponent: e,
        })
    }

    /// Exact halving.
    pub fn halve(&self) -> Result<Dyadic> {
        self.mul_pow2(-1)
    }

    /// Nearest dyadic with at most `p.bits()` mantissa bits on the chosen
    /// side of `self`; returns `self` unchanged when it already fits.
    pub fn round(&self, p: Precision, dir: Rounding) -> Dyadic {
        let bits = self.bit_length();
        if bits <= p.bits() as u64 {
            return self.clone();
        }
        let drop = bits - p.bits() as u64;
        let scale = BigInt::one() << drop;
        let q = directed_div(&self.mantissa, &scale, dir);
        Dyadic::canonical(q, self.exponent + drop as i64)
    }

    /// Directed quotient: the result `r` satisfies `r <= a/b` (`Down`) or
    /// `r >= a/b` (`Up`) with relative error below `2^(1 - p.bits())`.
    /// Exact dyadic quotients are returned exactly whenever they fit.
    pub fn div(&self, rhs: &Dyadic, p: Precision, dir: Rounding) -> Result<Dyadic> {
        if rhs.is_zero() {
            return Err(Error::Domain("division by zero"));
        }
        if self.is_zero() {
            return Ok(Dyadic::zero());
        }
        let na = self.bit_length() as i64;
        let nb = rhs.bit_length() as i64;
        // scale so the integer quotient carries at least p + 2 bits; the
        // composed directed roundings then equal a single rounding at p bits
        let s = (p.bits() as i64 + 2 + nb - na).max(0) + 1;
        let shift = check_shift(s)?;
        let scaled = &self.mantissa << shift;
        let q = directed_div(&scaled, &rhs.mantissa, dir);
        let e = self
            .exponent
            .checked_sub(rhs.exponent)
            .and_then(|x| x.checked_sub(s))
            .ok_or(Error::Capacity("dyadic exponent out of range"))?;
        let full = Dyadic::canonical(q, e);
        let out = full.round(p, dir);
        if !out.is_zero() {
            check_exponent(out.exponent)?;
        }
        Ok(out)
    }

    /// Directed square root with relative error below `2^(1 - p.bits())`.
    /// Perfect dyadic squares come back exactly; zero maps to zero.
    pub fn sqrt(&self, p: Precision, dir: Rounding) -> Result<Dyadic> {
        if self.is_negative() {
            return Err(Error::Domain("square root of a negative number"));
        }
        if self.is_zero() {
            return Ok(Dyadic::zero());
        }
        let nm = self.bit_length() as i64;
        let mut j = (2 * (p.bits() as i64 + 2) - nm).max(0);
        if (self.exponent - j).rem_euclid(2) != 0 {
            j += 1;
        }
        let shift = check_shift(j)?;
        let scaled: BigInt = &self.mantissa << shift;
        let mut root = scaled.sqrt();
        // adjust so that root = floor(sqrt(scaled)) holds unconditionally
        while &root * &root > scaled {
            root -= 1;
        }
        while (&root + 1u32) * (&root + 1u32) <= scaled {
            root += 1;
        }
        let exact = &root * &root == scaled;
        if !exact && dir == Rounding::Up {
            root += 1;
        }
        let e = (self.exponent - j) / 2;
        let full = Dyadic::canonical(root, e);
        let out = if exact { full } else { full.round(p, dir) };
        if !out.is_zero() {
            check_exponent(out.exponent)?;
        }
        Ok(out)
    }

    pub fn to_ratio(&self) -> Ratio<BigInt> {
        if self.exponent >= 0 {
            Ratio::from_integer(&self.mantissa << self.exponent as u64)
        } else {
            Ratio::new(
                self.mantissa.clone(),
                BigInt::one() << (-self.exponent) as u64,
            )
        }
    }

    /// Directed rounding of an arbitrary rational into a dyadic with
    /// `p.bits()` significant bits.
    pub fn from_ratio(r: &Ratio<BigInt>, p: Precision, dir: Rounding) -> Result<Dyadic> {
        let n = Dyadic::canonical(r.numer().clone(), 0);
        let d = Dyadic::canonical(r.denom().clone(), 0);
        n.div(&d, p, dir)
    }

    /// Fixed-point decimal rendering with `frac_digits` fractional digits,
    /// rounded in the given direction.
    pub fn to_decimal_string(&self, frac_digits: u32, dir: Rounding) -> String {
        let pow10 = BigInt::from(10u32).pow(frac_digits);
        let scaled = &self.mantissa * &pow10;
        let n = if self.exponent >= 0 {
            if self.exponent > MAX_SHIFT {
                // magnitude beyond anything renderable; exponent invariant
                // keeps us from getting here through public constructors
                panic!("dyadic exponent too large to render");
            }
            scaled << self.exponent as u64
        } else {
            let down = -self.exponent;
            if down > MAX_SHIFT {
                // |value| * 10^f < 1: the directed result is -1, 0, or 1
                return tiny_decimal_string(self.is_negative(), frac_digits, dir);
            }
            directed_div(&scaled, &(BigInt::one() << down as u64), dir)
        };
        render_scaled_decimal(&n, frac_digits)
    }

    /// Scientific-notation rendering with `sig` significant digits, mantissa
    /// truncated toward zero. Intended for report output.
    pub fn to_sci_string(&self, sig: u32) -> String {
        debug_assert!(sig >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.is_negative();
        let mag = self.abs().to_ratio();
        // first estimate of floor(log10 |x|) from the bit length
        let log2 = self.bit_length() as i64 - 1 + self.exponent;
        let mut e10 = (log2 as i128 * 30103 / 100000) as i64;
        let ten = BigInt::from(10u32);
        let lo_limit = ten.pow(sig - 1);
        let hi_limit = ten.pow(sig);
        let digits = loop {
            let shift = sig as i64 - 1 - e10;
            let scaled = &mag * power_of_ten(shift);
            let d = scaled.to_integer();
            if d < lo_limit {
                e10 -= 1;
            } else if d >= hi_limit {
                e10 += 1;
            } else {
                break d;
            }
        };
        let s = digits.to_string();
        let (head, tail) = s.split_at(1);
        let sign = if neg { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{e10}")
        } else {
            format!("{sign}{head}.{tail}e{e10}")
        }
    }
}

fn power_of_ten(e: i64) -> Ratio<BigInt> {
    let p = BigInt::from(10u32).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Ratio::from_integer(p)
    } else {
        Ratio::new(BigInt::one(), p)
    }
}

fn tiny_decimal_string(negative: bool, frac_digits: u32, dir: Rounding) -> String {
    let unit = match (negative, dir) {
        (false, Rounding::Down) | (true, Rounding::Up) => BigInt::zero(),
        (false, Rounding::Up) => BigInt::one(),
        (true, Rounding::Down) => -BigInt::one(),
    };
    render_scaled_decimal(&unit, frac_digits)
}

/// Renders `n / 10^frac_digits` as a plain decimal string.
fn render_scaled_decimal(n: &BigInt, frac_digits: u32) -> String {
    let sign = if n.is_negative() { "-" } else { "" };
    let mag = n.magnitude();
    if frac_digits == 0 {
        return format!("{sign}{mag}");
    }
    let pow10 = BigInt::from(10u32).pow(frac_digits);
    let (int_part, frac_part) = BigInt::from(mag.clone()).div_rem(&pow10);
    format!(
        "{sign}{int_part}.{frac:0>width$}",
        frac = frac_part.magnitude(),
        width = frac_digits as usize
    )
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Dyadic) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Dyadic) -> Ordering {
        let sa = self.mantissa.sign();
        let sb = other.mantissa.sign();
        if sa != sb {
            return sa.cmp(&sb);
        }
        if self.is_zero() {
            return Ordering::Equal;
        }
        // log2 |m * 2^e| lies in [bits - 1 + e, bits + e); disjoint windows
        // decide without allocating
        let wa = self.bit_length() as i64 + self.exponent;
        let wb = other.bit_length() as i64 + other.exponent;
        if wa != wb {
            let mag = wa.cmp(&wb);
            return if self.is_negative() {
                mag.reverse()
            } else {
                mag
            };
        }
        // windows coincide, so the alignment shift is bounded by the operand
        // widths and the exact difference is affordable
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as u64;
        let b = &other.mantissa << (other.exponent - e) as u64;
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}*2^{}", self.mantissa, self.exponent)
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Dyadic> {
        let (m, e) = match s.split_once("*2^") {
            Some((m, e)) => {
                let exponent: i64 = e
                    .parse()
                    .map_err(|_| Error::Parameter(format!("bad dyadic exponent in {s:?}")))?;
                (m, exponent)
            }
            None => (s, 0),
        };
        let mantissa = BigInt::from_str(m)
            .map_err(|_| Error::Parameter(format!("bad dyadic mantissa in {s:?}")))?;
        Dyadic::new(mantissa, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dy(m: i64, e: i64) -> Dyadic {
        Dyadic::new(BigInt::from(m), e).unwrap()
    }

    /// Independent floor square root by bisection, used as the oracle for
    /// the directed sqrt tests.
    fn isqrt_oracle(n: &BigInt) -> BigInt {
        assert!(!n.is_negative());
        if n.is_zero() {
            return BigInt::zero();
        }
        let mut lo = BigInt::zero();
        let mut hi = BigInt::one() << (n.bits() / 2 + 1);
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) >> 1;
            if &mid * &mid <= *n {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    #[test]
    fn add_is_exact_and_canonical() {
        // 3*2^-1 + 1*2^-1 = 2 = 1*2^1
        assert_eq!(dy(3, -1).add(&dy(1, -1)).unwrap(), dy(1, 1));
        // x + 0 = x
        let x = dy(-73, 5);
        assert_eq!(x.add(&Dyadic::zero()).unwrap(), x);
        // exactness regardless of magnitude gap
        let tiny = dy(1, -53);
        let sum = tiny.add(&Dyadic::one()).unwrap();
        let expected = Dyadic::new(BigInt::from((1i64 << 53) + 1), -53).unwrap();
        assert_eq!(sum, expected);
    }

    #[test]
    fn mul_is_exact() {
        assert_eq!(dy(3, -1).mul(&dy(1, 1)).unwrap(), dy(3, 0));
        let x = dy(1234567, -12);
        assert_eq!(x.mul(&Dyadic::one()).unwrap(), x);
        assert_eq!(dy(1, -3).mul(&dy(1, -3)).unwrap(), dy(1, -6));
    }

    #[test]
    fn round_directed() {
        let x = dy(7, -2); // 1.75
        assert_eq!(x.round(Precision::new(4), Rounding::Down), x);
        // at 2 bits: down -> 1.5, up -> 2
        let p2 = Precision { bits: 2 };
        assert_eq!(x.round(p2, Rounding::Down), dy(3, -1));
        assert_eq!(x.round(p2, Rounding::Up), dy(1, 1));
        // negative operand: down moves away from zero
        let y = dy(-7, -2);
        assert_eq!(y.round(p2, Rounding::Down), dy(-1, 1));
        assert_eq!(y.round(p2, Rounding::Up), dy(-3, -1));
    }

    #[test]
    fn div_exact_quotients_pass_through() {
        let p = Precision::new(8);
        assert_eq!(
            Dyadic::one()
                .div(&Dyadic::one(), p, Rounding::Down)
                .unwrap(),
            Dyadic::one()
        );
        for bits in [2u32, 8, 53] {
            let p = Precision::new(bits.max(4));
            assert_eq!(dy(3, 0).div(&dy(2, 0), p, Rounding::Up).unwrap(), dy(3, -1));
        }
    }

    #[test]
    fn div_one_third_frozen() {
        // long-division oracle at 8 bits: floor(1*2^9 / 3) = 170 -> 85*2^-8,
        // ceil -> 171*2^-9; frozen below and re-derived here
        let oracle: BigInt = BigInt::from(1) << 9;
        assert_eq!(oracle.div_floor(&BigInt::from(3)), BigInt::from(170));
        assert_eq!(oracle.div_ceil(&BigInt::from(3)), BigInt::from(171));

        let p = Precision::new(8);
        let lo = Dyadic::one().div(&dy(3, 0), p, Rounding::Down).unwrap();
        let hi = Dyadic::one().div(&dy(3, 0), p, Rounding::Up).unwrap();
        assert_eq!(lo, dy(85, -8));
        assert_eq!(hi, dy(171, -9));

        let third = Ratio::new(BigInt::from(1), BigInt::from(3));
        assert!(lo.to_ratio() <= third && third <= hi.to_ratio());
        // relative error below 2^-7
        let bound = &third * Ratio::new(BigInt::from(1), BigInt::from(1) << 7);
        assert!(&third - lo.to_ratio() < bound);
        assert!(hi.to_ratio() - &third < bound);
    }

    #[test]
    fn sqrt_perfect_squares_exact() {
        let p = Precision::new(4);
        assert_eq!(dy(4, 0).sqrt(p, Rounding::Down).unwrap(), dy(2, 0));
        assert_eq!(dy(4, 0).sqrt(p, Rounding::Up).unwrap(), dy(2, 0));
        assert_eq!(dy(9, -4).sqrt(p, Rounding::Up).unwrap(), dy(3, -2));
        assert_eq!(
            Dyadic::zero().sqrt(p, Rounding::Down).unwrap(),
            Dyadic::zero()
        );
    }

    #[test]
    fn sqrt_two_frozen_against_isqrt_oracle() {
        // oracle bracket from floor sqrt of 2*2^40: sqrt(2) lies in
        // [1482910, 1482911] * 2^-20; the 20-bit directed roundings are
        // 741455*2^-19 below and 741456*2^-19 = 46341*2^-15 above
        let oracle = isqrt_oracle(&(BigInt::one() << 41));
        assert_eq!(oracle, BigInt::from(1482910));

        let p = Precision::new(20);
        let lo = dy(2, 0).sqrt(p, Rounding::Down).unwrap();
        let hi = dy(2, 0).sqrt(p, Rounding::Up).unwrap();
        assert_eq!(lo, dy(741455, -19));
        assert_eq!(hi, dy(46341, -15));
        // the directed results straddle the oracle bracket
        assert!(lo <= dy(1482911, -20));
        assert!(hi >= dy(1482910, -20));
        // lo^2 <= 2 <= hi^2
        assert!(lo.mul(&lo).unwrap() <= dy(2, 0));
        assert!(hi.mul(&hi).unwrap() >= dy(2, 0));
    }

    #[test]
    fn sqrt_negative_rejected() {
        let err = dy(-1, 0).sqrt(Precision::new(8), Rounding::Down);
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn div_by_zero_rejected() {
        let err = Dyadic::one().div(&Dyadic::zero(), Precision::new(8), Rounding::Down);
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn exponent_capacity_signaled() {
        let big = Dyadic::pow2(EXPONENT_LIMIT - 1).unwrap();
        assert!(matches!(big.mul(&big), Err(Error::Capacity(_))));
        assert!(Dyadic::pow2(EXPONENT_LIMIT + 1).is_err());
    }

    #[test]
    fn ordering_matches_rationals() {
        let samples = [
            dy(0, 0),
            dy(1, -3),
            dy(-1, -3),
            dy(5, 2),
            dy(-7, 10),
            dy(1025, -10),
            dy(1, 10),
            dy(1023, 0),
        ];
        for a in &samples {
            for b in &samples {
                assert_eq!(a.cmp(b), a.to_ratio().cmp(&b.to_ratio()), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(dy(3, -1).to_decimal_string(2, Rounding::Down), "1.50");
        assert_eq!(dy(1, -2).to_decimal_string(1, Rounding::Down), "0.2");
        assert_eq!(dy(1, -2).to_decimal_string(1, Rounding::Up), "0.3");
        assert_eq!(dy(-1, -2).to_decimal_string(1, Rounding::Down), "-0.3");
        assert_eq!(dy(-1, -2).to_decimal_string(1, Rounding::Up), "-0.2");
        assert_eq!(dy(42, 0).to_decimal_string(0, Rounding::Up), "42");
    }

    #[test]
    fn sci_rendering() {
        assert_eq!(Dyadic::zero().to_sci_string(6), "0");
        assert_eq!(dy(1, -10).to_sci_string(3), "9.76e-4");
        assert_eq!(dy(3, 7).to_sci_string(2), "3.8e2");
        assert_eq!(dy(-3, 7).to_sci_string(2), "-3.8e2");
        assert_eq!(dy(1, 0).to_sci_string(1), "1e0");
    }

    #[test]
    fn display_round_trips() {
        for d in [dy(0, 0), dy(3, -1), dy(-5, 7), dy(1, -53)] {
            let s = d.to_string();
            assert_eq!(s.parse::<Dyadic>().unwrap(), d);
        }
        assert_eq!("7".parse::<Dyadic>().unwrap(), dy(7, 0));
        assert!("x*2^1".parse::<Dyadic>().is_err());
    }
}
