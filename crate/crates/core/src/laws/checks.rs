//! The certified checks themselves.
//!
//! Every check validates its preconditions on exact rationals first, then
//! certifies the claim with interval enclosures under the adaptive precision
//! schedule in [`CheckOptions`]. Claims whose two sides are the same
//! expression (equal multipliers, equal angles) are certified reflexively
//! with margin exactly zero: interval separation cannot see through the
//! dependency, but `x <= x` needs no arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{CheckOptions, CheckResult, Verdict};
use crate::angle::{AngleUnit, Rational, TurnFraction};
use crate::dyadic::{Dyadic, Precision};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::trig::{eval, pair_at_dyadic};

/// Which function a chord-slope check targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordFunction {
    Sin,
    Tan,
}

/// Outcome of one comparison attempt at a fixed precision.
enum Attempt {
    Certified(Dyadic),
    Refuted(Dyadic),
    Overlap(Dyadic),
}

fn reflexive_true(opts: &CheckOptions) -> CheckResult {
    CheckResult {
        verdict: Verdict::CertifiedTrue,
        precision_used: opts.initial,
        margin: Dyadic::zero(),
    }
}

/// Separation test for the claim `lhs <= rhs` on point values.
fn compare_le(lhs: &Interval, rhs: &Interval) -> Result<Attempt> {
    if lhs.hi() <= rhs.lo() {
        Ok(Attempt::Certified(rhs.lo().sub(lhs.hi())?))
    } else if lhs.lo() > rhs.hi() {
        Ok(Attempt::Refuted(lhs.lo().sub(rhs.hi())?))
    } else {
        Ok(Attempt::Overlap(rhs.lo().sub(lhs.hi())?))
    }
}

/// Drives one comparison through the doubling precision schedule.
///
/// A domain error inside an attempt (a cosine enclosure grazing zero, a
/// tangent product grazing one) is treated like an overlap: the
/// preconditions already guarantee the true values stay clear, so only
/// precision can be at fault.
fn refine<F>(opts: &CheckOptions, mut attempt: F) -> Result<CheckResult>
where
    F: FnMut(Precision) -> Result<Attempt>,
{
    let mut p = opts.initial;
    loop {
        let outcome = match attempt(p) {
            Err(Error::Domain(_)) => Attempt::Overlap(Dyadic::zero().sub(&Dyadic::one())?),
            other => other?,
        };
        match outcome {
            Attempt::Certified(margin) => {
                return Ok(CheckResult {
                    verdict: Verdict::CertifiedTrue,
                    precision_used: p,
                    margin,
                })
            }
            Attempt::Refuted(margin) => {
                return Ok(CheckResult {
                    verdict: Verdict::CertifiedFalse,
                    precision_used: p,
                    margin,
                })
            }
            Attempt::Overlap(margin) => {
                if p.bits() >= opts.max_bits {
                    return Ok(CheckResult {
                        verdict: Verdict::Inconclusive,
                        precision_used: p,
                        margin,
                    });
                }
                p = Precision::new(p.bits().saturating_mul(2).min(opts.max_bits));
            }
        }
    }
}

/// Worst verdict wins; margins combine by minimum, precision by maximum.
fn combine(parts: Vec<CheckResult>) -> CheckResult {
    debug_assert!(!parts.is_empty());
    let mut combined: Option<CheckResult> = None;
    for part in parts {
        combined = Some(match combined {
            None => part,
            Some(acc) => {
                let verdict = match (acc.verdict, part.verdict) {
                    (Verdict::CertifiedFalse, _) | (_, Verdict::CertifiedFalse) => {
                        Verdict::CertifiedFalse
                    }
                    (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => {
                        Verdict::Inconclusive
                    }
                    _ => Verdict::CertifiedTrue,
                };
                CheckResult {
                    verdict,
                    precision_used: acc.precision_used.max(part.precision_used),
                    margin: acc.margin.min(part.margin),
                }
            }
        });
    }
    combined.unwrap()
}

fn require_dyadic(t: &TurnFraction) -> Result<()> {
    if t.is_dyadic() {
        Ok(())
    } else {
        Err(Error::Domain("check angles must be dyadic turn fractions"))
    }
}

fn eighth() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(8))
}

fn in_open_interval(t: &Rational, hi: &Rational) -> bool {
    t.is_positive() && t < hi
}

fn sin_at(t: &TurnFraction, p: Precision) -> Result<Interval> {
    Ok(pair_at_dyadic(t, p)?.sin().clone())
}

fn tan_at(t: &TurnFraction, p: Precision) -> Result<Interval> {
    pair_at_dyadic(t, p)?.tan(p)
}

fn scale_int(iv: &Interval, n: u32) -> Result<Interval> {
    iv.scale_exact(&Dyadic::from_int(n as i64))
}

fn div_int(iv: &Interval, n: u32, p: Precision) -> Result<Interval> {
    iv.div(&Interval::point(Dyadic::from_int(n as i64)), p)
}

fn div_turn(iv: &Interval, t: &TurnFraction, p: Precision) -> Result<Interval> {
    let d = t
        .to_dyadic()
        .ok_or(Error::Domain("check angles must be dyadic turn fractions"))?;
    iv.div(&Interval::point(d), p)
}

/// Certifies `1` inside the enclosure of `sin^2 + cos^2` at `t`, with the
/// enclosure width pushed below `2^(8 - bits)`.
pub fn check_pythagorean(t: &TurnFraction, opts: &CheckOptions) -> Result<CheckResult> {
    require_dyadic(t)?;
    let one = Dyadic::one();
    refine(opts, |p| {
        let sum = pair_at_dyadic(t, p)?.pythagorean_sum(p)?;
        if !sum.contains(&one) {
            let below = one.sub(sum.hi())?;
            let above = sum.lo().sub(&one)?;
            return Ok(Attempt::Refuted(below.max(above)));
        }
        let tolerance = Dyadic::pow2(8 - p.bits() as i64)?;
        if sum.width()? < tolerance {
            let margin = one.sub(sum.lo())?.min(sum.hi().sub(&one)?);
            Ok(Attempt::Certified(margin))
        } else {
            Ok(Attempt::Overlap(sum.width()?.neg()))
        }
    })
}

/// `sin(n t) <= n sin(t)` for `0 < t < 1/(8n)`.
pub fn check_sin_multiple(n: u32, t: &TurnFraction, opts: &CheckOptions) -> Result<CheckResult> {
    require_dyadic(t)?;
    if n < 1 {
        return Err(Error::Parameter("multiplier must be at least 1".into()));
    }
    let bound = eighth() / BigInt::from(n);
    if !in_open_interval(t.as_ratio(), &bound) {
        return Err(Error::Domain("angle outside (0, 1/(8n)) turns"));
    }
    if n == 1 {
        return Ok(reflexive_true(opts));
    }
    refine(opts, |p| {
        let lhs = sin_at(&t.scale(n), p)?;
        let rhs = scale_int(&sin_at(t, p)?, n)?;
        compare_le(&lhs, &rhs)
    })
}

/// `tan(n t) >= n tan(t)` for `0 < t < 1/(8n)`.
pub fn check_tan_multiple(n: u32, t: &TurnFraction, opts: &CheckOptions) -> Result<CheckResult> {
    require_dyadic(t)?;
    if n < 1 {
        return Err(Error::Parameter("multiplier must be at least 1".into()));
    }
    let bound = eighth() / BigInt::from(n);
    if !in_open_interval(t.as_ratio(), &bound) {
        return Err(Error::Domain("angle outside (0, 1/(8n)) turns"));
    }
    if n == 1 {
        return Ok(reflexive_true(opts));
    }
    refine(opts, |p| {
        let lhs = scale_int(&tan_at(t, p)?, n)?;
        let rhs = tan_at(&t.scale(n), p)?;
        compare_le(&lhs, &rhs)
    })
}

/// `n sin((n+1) t) <= (n+1) sin(n t)` for `0 < t < 1/(8(n+1))`.
pub fn check_sin_ratio_step(n: u32, t: &TurnFraction, opts: &CheckOptions) -> Result<CheckResult> {
    require_dyadic(t)?;
    if n < 1 {
        return Err(Error::Parameter("multiplier must be at least 1".into()));
    }
    let bound = eighth() / BigInt::from(n + 1);
    if !in_open_interval(t.as_ratio(), &bound) {
        return Err(Error::Domain("angle outside (0, 1/(8(n+1))) turns"));
    }
    refine(opts, |p| {
        let lhs = scale_int(&sin_at(&t.scale(n + 1), p)?, n)?;
        let rhs = scale_int(&sin_at(&t.scale(n), p)?, n + 1)?;
        compare_le(&lhs, &rhs)
    })
}

/// `n tan((n+1) t) >= (n+1) tan(n t)` for `0 < t < 1/(8(n+1))`.
pub fn check_tan_ratio_step(n: u32, t: &TurnFraction, opts: &CheckOptions) -> Result<CheckResult> {
    require_dyadic(t)?;
    if n < 1 {
        return Err(Error::Parameter("multiplier must be at least 1".into()));
    }
    let bound = eighth() / BigInt::from(n + 1);
    if !in_open_interval(t.as_ratio(), &bound) {
        return Err(Error::Domain("angle outside (0, 1/(8(n+1))) turns"));
    }
    refine(opts, |p| {
        let lhs = scale_int(&tan_at(&t.scale(n), p)?, n + 1)?;
        let rhs = scale_int(&tan_at(&t.scale(n + 1), p)?, n)?;
        compare_le(&lhs, &rhs)
    })
}

/// The three comparisons of the chain
/// `sin(m t)/m <= sin(n t)/n <= tan(n t)/n <= tan(m t)/m` for `m >= n >= 1`
/// and `0 < m t <= 1/8`, reported separately.
pub fn check_ratio_monotone_parts(
    m: u32,
    n: u32,
    t: &TurnFraction,
    opts: &CheckOptions,
) -> Result<Vec<CheckResult>> {
    require_dyadic(t)?;
    if n < 1 || m < n {
        return Err(Error::Parameter(
            "multipliers must satisfy m >= n >= 1".into(),
        ));
    }
    let scaled = t.as_ratio() * BigInt::from(m);
    if !t.as_ratio().is_positive() || scaled > eighth() {
        return Err(Error::Domain("m*t outside (0, 1/8] turns"));
    }

    let sin_over =
        |k: u32, p: Precision| -> Result<Interval> { div_int(&sin_at(&t.scale(k), p)?, k, p) };
    let tan_over =
        |k: u32, p: Precision| -> Result<Interval> { div_int(&tan_at(&t.scale(k), p)?, k, p) };

    let outer_sin = if m == n {
        reflexive_true(opts)
    } else {
        refine(opts, |p| compare_le(&sin_over(m, p)?, &sin_over(n, p)?))?
    };
    let middle = refine(opts, |p| compare_le(&sin_over(n, p)?, &tan_over(n, p)?))?;
    let outer_tan = if m == n {
        reflexive_true(opts)
    } else {
        refine(opts, |p| compare_le(&tan_over(n, p)?, &tan_over(m, p)?))?
    };
    Ok(vec![outer_sin, middle, outer_tan])
}

/// Combined verdict over the full four-term chain.
pub fn check_ratio_monotone(
    m: u32,
    n: u32,
    t: &TurnFraction,
    opts: &CheckOptions,
) -> Result<CheckResult> {
    Ok(combine(check_ratio_monotone_parts(m, n, t, opts)?))
}

/// `sin(t2)/t2 <= sin(t1)/t1 <= tan(t1)/t1 <= tan(t2)/t2` for
/// `0 < t1 <= t2 <= 1/8`.
pub fn check_monotone_chain(
    t1: &TurnFraction,
    t2: &TurnFraction,
    opts: &CheckOptions,
) -> Result<CheckResult> {
    require_dyadic(t1)?;
    require_dyadic(t2)?;
    if !t1.as_ratio().is_positive() || t1 > t2 || *t2.as_ratio() > eighth() {
        return Err(Error::Domain("angles outside 0 < t1 <= t2 <= 1/8 turns"));
    }

    let sin_over =
        |t: &TurnFraction, p: Precision| -> Result<Interval> { div_turn(&sin_at(t, p)?, t, p) };
    let tan_over =
        |t: &TurnFraction, p: Precision| -> Result<Interval> { div_turn(&tan_at(t, p)?, t, p) };

    let equal = t1 == t2;
    let outer_sin = if equal {
        reflexive_true(opts)
    } else {
        refine(opts, |p| compare_le(&sin_over(t2, p)?, &sin_over(t1, p)?))?
    };
    let middle = refine(opts, |p| compare_le(&sin_over(t1, p)?, &tan_over(t1, p)?))?;
    let outer_tan = if equal {
        reflexive_true(opts)
    } else {
        refine(opts, |p| compare_le(&tan_over(t1, p)?, &tan_over(t2, p)?))?
    };
    Ok(combine(vec![outer_sin, middle, outer_tan]))
}

/// Midpoint concavity of sine: `sin t1 + sin t2 <= 2 sin((t1 + t2)/2)` for
/// `0 <= t1, t2 <= 1/8`.
pub fn check_midpoint_concave_sin(
    t1: &TurnFraction,
    t2: &TurnFraction,
    opts: &CheckOptions,
) -> Result<CheckResult> {
    require_dyadic(t1)?;
    require_dyadic(t2)?;
    let in_range = |t: &TurnFraction| !t.as_ratio().is_negative() && *t.as_ratio() <= eighth();
    if !in_range(t1) || !in_range(t2) {
        return Err(Error::Domain("angles outside [0, 1/8] turns"));
    }
    if t1 == t2 {
        return Ok(reflexive_true(opts));
    }
    let mid = t1.add(t2).halve();
    refine(opts, |p| {
        let lhs = sin_at(t1, p)?.add(&sin_at(t2, p)?, p)?;
        let rhs = sin_at(&mid, p)?.mul_pow2(1)?;
        compare_le(&lhs, &rhs)
    })
}

/// Midpoint convexity of tangent:
/// `(tan(2 t1) + tan(2 t2))/2 >= tan(t1 + t2)` for `0 <= t1, t2 <= 1/16`.
pub fn check_midpoint_convex_tan(
    t1: &TurnFraction,
    t2: &TurnFraction,
    opts: &CheckOptions,
) -> Result<CheckResult> {
    require_dyadic(t1)?;
    require_dyadic(t2)?;
    let sixteenth = Rational::new(BigInt::one(), BigInt::from(16));
    let in_range = |t: &TurnFraction| !t.as_ratio().is_negative() && *t.as_ratio() <= sixteenth;
    if !in_range(t1) || !in_range(t2) {
        return Err(Error::Domain("angles outside [0, 1/16] turns"));
    }
    if t1 == t2 {
        return Ok(reflexive_true(opts));
    }
    let sum = t1.add(t2);
    refine(opts, |p| {
        let lhs = tan_at(&sum, p)?;
        let rhs = tan_at(&t1.scale(2), p)?
            .add(&tan_at(&t2.scale(2), p)?, p)?
            .mul_pow2(-1)?;
        compare_le(&lhs, &rhs)
    })
}

/// Chord-slope monotonicity for `0 < t1 <= t2 <= 1/8`: increasing for the
/// convex tangent, reversed for the concave sine.
pub fn check_chord_slope(
    f: ChordFunction,
    t1: &TurnFraction,
    t2: &TurnFraction,
    opts: &CheckOptions,
) -> Result<CheckResult> {
    require_dyadic(t1)?;
    require_dyadic(t2)?;
    if !t1.as_ratio().is_positive() || t1 > t2 || *t2.as_ratio() > eighth() {
        return Err(Error::Domain("angles outside 0 < t1 <= t2 <= 1/8 turns"));
    }
    if t1 == t2 {
        return Ok(reflexive_true(opts));
    }
    refine(opts, |p| {
        let slope = |t: &TurnFraction| -> Result<Interval> {
            let value = match f {
                ChordFunction::Sin => sin_at(t, p)?,
                ChordFunction::Tan => tan_at(t, p)?,
            };
            div_turn(&value, t, p)
        };
        match f {
            ChordFunction::Sin => compare_le(&slope(t2)?, &slope(t1)?),
            ChordFunction::Tan => compare_le(&slope(t1)?, &slope(t2)?),
        }
    })
}

/// Tangent addition: the enclosure of `tan(t1 + t2)` must fall inside the
/// enclosure of `(tan t1 + tan t2) / (1 - tan t1 tan t2)`.
pub fn check_tan_addition(
    t1: &TurnFraction,
    t2: &TurnFraction,
    opts: &CheckOptions,
) -> Result<CheckResult> {
    require_dyadic(t1)?;
    require_dyadic(t2)?;
    let quarter = Rational::new(BigInt::one(), BigInt::from(4));
    let sum = t1.add(t2);
    for t in [t1, t2, &sum] {
        if t.as_ratio().abs() >= quarter {
            return Err(Error::Domain("angles outside (-1/4, 1/4) turns"));
        }
    }
    refine(opts, |p| {
        let a = tan_at(t1, p)?;
        let b = tan_at(t2, p)?;
        let product = a.mul(&b, p)?;
        if product.contains(&Dyadic::one()) {
            return Err(Error::Domain("tangent product enclosure contains one"));
        }
        let denom = Interval::point(Dyadic::one()).sub(&product, p)?;
        let rhs = a.add(&b, p)?.div(&denom, p)?;
        let lhs = tan_at(&sum, p)?;
        if rhs.encloses(&lhs) {
            let margin = lhs.lo().sub(rhs.lo())?.min(rhs.hi().sub(lhs.hi())?);
            Ok(Attempt::Certified(margin))
        } else if !rhs.intersects(&lhs) {
            let gap = lhs.lo().sub(rhs.hi())?.max(rhs.lo().sub(lhs.hi())?);
            Ok(Attempt::Refuted(gap))
        } else {
            let margin = lhs.lo().sub(rhs.lo())?.min(rhs.hi().sub(lhs.hi())?);
            Ok(Attempt::Overlap(margin))
        }
    })
}

/// Both unit routes must enclose the same point value, so their sine and
/// cosine enclosures must intersect.
pub fn check_unit_conversion(
    c1: &AngleUnit,
    c2: &AngleUnit,
    x: &Rational,
    opts: &CheckOptions,
) -> Result<CheckResult> {
    let p = opts.initial;
    let via_c1 = eval(c1, x, p)?;
    let converted = x * (c2.circle() / c1.circle());
    let via_c2 = eval(c2, &converted, p)?;

    let overlap = |a: &Interval, b: &Interval| -> Result<Dyadic> {
        a.hi().min(b.hi()).sub(&a.lo().clone().max(b.lo().clone()))
    };
    let sin_ok = via_c1.sin().intersects(via_c2.sin());
    let cos_ok = via_c1.cos().intersects(via_c2.cos());
    if sin_ok && cos_ok {
        let margin = overlap(via_c1.sin(), via_c2.sin())?.min(overlap(via_c1.cos(), via_c2.cos())?);
        Ok(CheckResult {
            verdict: Verdict::CertifiedTrue,
            precision_used: p,
            margin,
        })
    } else {
        let sin_gap = gap(via_c1.sin(), via_c2.sin())?;
        let cos_gap = gap(via_c1.cos(), via_c2.cos())?;
        Ok(CheckResult {
            verdict: Verdict::CertifiedFalse,
            precision_used: p,
            margin: sin_gap.max(cos_gap),
        })
    }
}

fn gap(a: &Interval, b: &Interval) -> Result<Dyadic> {
    let left = a.lo().sub(b.hi())?;
    let right = b.lo().sub(a.hi())?;
    Ok(left.max(right).max(Dyadic::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tf(n: i64, d: i64) -> TurnFraction {
        TurnFraction::new(n, d).unwrap()
    }

    fn opts() -> CheckOptions {
        CheckOptions::new(Precision::new(64), 4096).unwrap()
    }

    fn assert_certified(r: &CheckResult) {
        assert_eq!(r.verdict, Verdict::CertifiedTrue, "margin {}", r.margin);
    }

    #[test]
    fn pythagorean_at_named_points() {
        let r = check_pythagorean(&tf(1, 4), &opts()).unwrap();
        assert_certified(&r);
        assert_eq!(r.margin, Dyadic::zero());
        assert_certified(&check_pythagorean(&tf(1, 8), &opts()).unwrap());
        assert_certified(&check_pythagorean(&tf(5, 16), &opts()).unwrap());
    }

    #[test]
    fn strict_domains_yield_strictly_positive_margins() {
        let cases = [
            check_sin_multiple(3, &tf(1, 64), &opts()).unwrap(),
            check_tan_multiple(2, &tf(1, 32), &opts()).unwrap(),
            check_monotone_chain(&tf(1, 64), &tf(1, 16), &opts()).unwrap(),
            check_midpoint_concave_sin(&tf(1, 32), &tf(3, 32), &opts()).unwrap(),
            check_chord_slope(ChordFunction::Tan, &tf(1, 64), &tf(1, 8), &opts()).unwrap(),
        ];
        for r in cases {
            assert_certified(&r);
            assert!(r.margin.is_positive(), "margin {} not positive", r.margin);
        }
    }

    #[test]
    fn sin_multiple_examples() {
        let r = check_sin_multiple(1, &tf(1, 64), &opts()).unwrap();
        assert_certified(&r);
        assert_eq!(r.margin, Dyadic::zero());
        assert_certified(&check_sin_multiple(3, &tf(1, 64), &opts()).unwrap());
        assert_certified(&check_sin_multiple(8, &tf(1, 128), &opts()).unwrap());
        // boundary and outside inputs are rejected, not guessed
        assert!(check_sin_multiple(8, &tf(1, 64), &opts()).is_err());
        assert!(check_sin_multiple(2, &tf(0, 1), &opts()).is_err());
        assert!(check_sin_multiple(2, &tf(1, 12), &opts()).is_err());
    }

    #[test]
    fn tan_multiple_examples() {
        let r = check_tan_multiple(1, &tf(1, 32), &opts()).unwrap();
        assert_eq!(r.margin, Dyadic::zero());
        assert_certified(&check_tan_multiple(2, &tf(1, 32), &opts()).unwrap());
        assert_certified(&check_tan_multiple(5, &tf(1, 64), &opts()).unwrap());
    }

    #[test]
    fn ratio_step_examples() {
        assert_certified(&check_sin_ratio_step(1, &tf(1, 32), &opts()).unwrap());
        assert_certified(&check_sin_ratio_step(3, &tf(1, 64), &opts()).unwrap());
        assert_certified(&check_sin_ratio_step(10, &tf(1, 256), &opts()).unwrap());
        assert_certified(&check_tan_ratio_step(1, &tf(1, 32), &opts()).unwrap());
        assert_certified(&check_tan_ratio_step(4, &tf(1, 128), &opts()).unwrap());
    }

    #[test]
    fn tan_ratio_margin_shrinks_toward_zero() {
        let margins: Vec<Dyadic> = [32i64, 64, 128]
            .iter()
            .map(|d| {
                let r = check_tan_ratio_step(2, &tf(1, *d), &opts()).unwrap();
                assert_certified(&r);
                r.margin
            })
            .collect();
        assert!(margins[0] > margins[1]);
        assert!(margins[1] > margins[2]);
    }

    #[test]
    fn ratio_monotone_examples() {
        let parts = check_ratio_monotone_parts(4, 4, &tf(1, 64), &opts()).unwrap();
        assert_eq!(parts[0].margin, Dyadic::zero());
        assert!(parts[1].margin.is_positive());
        assert_eq!(parts[2].margin, Dyadic::zero());
        assert_certified(&check_ratio_monotone(6, 2, &tf(1, 64), &opts()).unwrap());
        assert_certified(&check_ratio_monotone(16, 1, &tf(1, 256), &opts()).unwrap());
        assert!(check_ratio_monotone(2, 3, &tf(1, 64), &opts()).is_err());
    }

    #[test]
    fn monotone_chain_examples() {
        let equal = check_monotone_chain(&tf(1, 16), &tf(1, 16), &opts()).unwrap();
        assert_certified(&equal);
        assert_eq!(equal.margin, Dyadic::zero());
        assert_certified(&check_monotone_chain(&tf(1, 64), &tf(1, 16), &opts()).unwrap());
        assert_certified(&check_monotone_chain(&tf(1, 1024), &tf(1, 8), &opts()).unwrap());
        assert!(check_monotone_chain(&tf(1, 8), &tf(1, 16), &opts()).is_err());
    }

    #[test]
    fn midpoint_concavity_examples() {
        let equal = check_midpoint_concave_sin(&tf(1, 32), &tf(1, 32), &opts()).unwrap();
        assert_eq!(equal.margin, Dyadic::zero());
        assert_certified(&check_midpoint_concave_sin(&tf(0, 1), &tf(1, 8), &opts()).unwrap());
        assert_certified(&check_midpoint_concave_sin(&tf(1, 32), &tf(3, 32), &opts()).unwrap());
    }

    #[test]
    fn midpoint_convexity_examples() {
        let equal = check_midpoint_convex_tan(&tf(1, 64), &tf(1, 64), &opts()).unwrap();
        assert_eq!(equal.margin, Dyadic::zero());
        assert_certified(&check_midpoint_convex_tan(&tf(0, 1), &tf(1, 16), &opts()).unwrap());
        assert_certified(&check_midpoint_convex_tan(&tf(1, 64), &tf(3, 64), &opts()).unwrap());
    }

    #[test]
    fn chord_slope_examples() {
        let equal = check_chord_slope(ChordFunction::Sin, &tf(1, 16), &tf(1, 16), &opts()).unwrap();
        assert_eq!(equal.margin, Dyadic::zero());
        assert_certified(
            &check_chord_slope(ChordFunction::Sin, &tf(1, 64), &tf(1, 8), &opts()).unwrap(),
        );
        assert_certified(
            &check_chord_slope(ChordFunction::Tan, &tf(1, 64), &tf(1, 8), &opts()).unwrap(),
        );
    }

    #[test]
    fn tan_addition_examples() {
        assert_certified(&check_tan_addition(&tf(1, 16), &tf(0, 1), &opts()).unwrap());
        let both = check_tan_addition(&tf(1, 16), &tf(1, 16), &opts()).unwrap();
        assert_certified(&both);
        assert_certified(&check_tan_addition(&tf(1, 32), &tf(1, 16), &opts()).unwrap());
        assert!(check_tan_addition(&tf(1, 8), &tf(1, 8), &opts()).is_err());
    }

    #[test]
    fn unit_conversion_examples() {
        let deg = AngleUnit::degrees();
        let turns = AngleUnit::turns();
        let grad = AngleUnit::gradians();
        assert_certified(
            &check_unit_conversion(&deg, &turns, &Rational::from_integer(45.into()), &opts())
                .unwrap(),
        );
        assert_certified(
            &check_unit_conversion(&deg, &deg, &Rational::from_integer(33.into()), &opts())
                .unwrap(),
        );
        // a right angle in gradians encloses sin = 1 through both routes
        let r = check_unit_conversion(&grad, &deg, &Rational::from_integer(100.into()), &opts())
            .unwrap();
        assert_certified(&r);
    }
}
