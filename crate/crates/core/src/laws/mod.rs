//! Machine certification of the trigonometric identities and inequalities.
//!
//! Each law lives behind the [`LawCheck`] trait: it can draw admissible
//! random inputs for itself and certify one instance at a requested
//! precision, retrying with doubled precision up to a cap when the interval
//! comparison is still inconclusive. The built-in laws are registered by
//! name in [`registry`] and selected at runtime by the suite runner and the
//! command-line front end.
//!
//! Verdicts are three-valued on purpose. Interval arithmetic cannot tell
//! "false" from "not enough precision", so a failed separation first refines
//! and only reports `certified-false` when the enclosures separate in the
//! violating order - which, for proved theorems, indicates an
//! implementation bug and fails the whole suite.

mod checks;
mod suite;

use std::fmt;

use rand_chacha::rand_core::RngCore;
use rand_chacha::ChaCha8Rng;

pub use checks::{
    check_chord_slope, check_midpoint_concave_sin, check_midpoint_convex_tan, check_monotone_chain,
    check_pythagorean, check_ratio_monotone, check_ratio_monotone_parts, check_sin_multiple,
    check_sin_ratio_step, check_tan_addition, check_tan_multiple, check_tan_ratio_step,
    check_unit_conversion, ChordFunction,
};
pub use suite::{run_suite, CaseRecord, CheckSummary, SuiteConfig, SuiteReport};

use crate::angle::{AngleUnit, Rational, TurnFraction};
use crate::dyadic::{Dyadic, Precision};
use crate::error::{Error, Result};

/// Outcome of one certified comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The enclosures separate in the claimed order.
    CertifiedTrue,
    /// Still overlapping at the precision cap.
    Inconclusive,
    /// The enclosures separate in the violating order: a counterexample.
    CertifiedFalse,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::CertifiedTrue => "certified-true",
            Verdict::Inconclusive => "inconclusive",
            Verdict::CertifiedFalse => "certified-false",
        };
        f.write_str(s)
    }
}

/// Result of one check instance.
///
/// `margin` is the distance between the separating endpoints: nonnegative
/// for a certified verdict, negative (the residual overlap) when
/// inconclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub verdict: Verdict,
    pub precision_used: Precision,
    pub margin: Dyadic,
}

/// Precision schedule for a check: start at `initial`, double on an
/// inconclusive comparison, stop at `max_bits`.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub initial: Precision,
    pub max_bits: u32,
}

impl CheckOptions {
    pub fn new(initial: Precision, max_bits: u32) -> Result<CheckOptions> {
        if max_bits < initial.bits() {
            return Err(Error::Parameter(format!(
                "precision cap {max_bits} below initial precision {}",
                initial.bits()
            )));
        }
        Ok(CheckOptions { initial, max_bits })
    }
}

/// Inputs to one check instance, carried uniformly so every strategy can be
/// sampled, run, and reported through the same interface.
#[derive(Debug, Clone)]
pub enum CaseInputs {
    /// A single dyadic turn fraction.
    Angle { t: TurnFraction },
    /// A multiplier and a dyadic turn fraction.
    Multiple { n: u32, t: TurnFraction },
    /// Two multipliers `m >= n` and a dyadic turn fraction.
    RatioPair { m: u32, n: u32, t: TurnFraction },
    /// An ordered pair of dyadic turn fractions.
    AnglePair { t1: TurnFraction, t2: TurnFraction },
    /// Two angle units and an exact angle in the first unit.
    Conversion {
        c1: AngleUnit,
        c2: AngleUnit,
        x: Rational,
    },
}

impl fmt::Display for CaseInputs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseInputs::Angle { t } => write!(f, "t={t}"),
            CaseInputs::Multiple { n, t } => write!(f, "n={n} t={t}"),
            CaseInputs::RatioPair { m, n, t } => write!(f, "m={m} n={n} t={t}"),
            CaseInputs::AnglePair { t1, t2 } => write!(f, "t1={t1} t2={t2}"),
            CaseInputs::Conversion { c1, c2, x } => write!(f, "{c1} {c2} x={x}"),
        }
    }
}

/// One certified law: names itself, draws admissible inputs, and certifies
/// a single instance.
pub trait LawCheck: Send + Sync {
    /// Registry name, also the CLI selector.
    fn name(&self) -> &'static str;

    /// Draws one input tuple inside the law's validity domain.
    fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs;

    /// Certifies one instance at the given precision schedule.
    fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult>;
}

/// All built-in laws in canonical order.
pub fn registry() -> Vec<Box<dyn LawCheck>> {
    vec![
        Box::new(strategies::Pythagorean),
        Box::new(strategies::SinMultiple),
        Box::new(strategies::TanMultiple),
        Box::new(strategies::SinRatioStep),
        Box::new(strategies::TanRatioStep),
        Box::new(strategies::RatioMonotone),
        Box::new(strategies::MonotoneChain),
        Box::new(strategies::MidpointConcaveSin),
        Box::new(strategies::MidpointConvexTan),
        Box::new(strategies::ChordSlopeSin),
        Box::new(strategies::ChordSlopeTan),
        Box::new(strategies::TanAddition),
        Box::new(strategies::UnitConversion),
    ]
}

/// Looks a law up by its registry name.
pub fn find(name: &str) -> Option<Box<dyn LawCheck>> {
    registry().into_iter().find(|c| c.name() == name)
}

/// Registry names in canonical order.
pub fn names() -> Vec<&'static str> {
    registry().iter().map(|c| c.name()).collect()
}

fn wrong_inputs(check: &'static str) -> Error {
    Error::Parameter(format!("input shape does not match check {check}"))
}

/// Uniform draw from `lo..=hi` (`hi >= lo`).
fn draw(rng: &mut ChaCha8Rng, lo: u64, hi: u64) -> u64 {
    lo + rng.next_u64() % (hi - lo + 1)
}

/// Random dyadic turn fraction `a / 2^12` with `1 <= a <= cap`.
fn draw_angle(rng: &mut ChaCha8Rng, cap: u64) -> TurnFraction {
    let a = draw(rng, 1, cap);
    TurnFraction::new(a as i64, 1 << 12).unwrap()
}

mod strategies {
    use super::*;

    /// Sampled multipliers stay small so halving depth stays bounded; the
    /// angle grid is a / 2^12 per the sampling plan for the suite.
    const GRID: u64 = 1 << 12;

    pub(super) struct Pythagorean;

    impl LawCheck for Pythagorean {
        fn name(&self) -> &'static str {
            "pythagorean"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            let a = draw(rng, 0, GRID - 1);
            CaseInputs::Angle {
                t: TurnFraction::new(a as i64, GRID as i64).unwrap(),
            }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::Angle { t } => check_pythagorean(t, opts),
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }

    pub(super) struct SinMultiple;

    impl LawCheck for SinMultiple {
        fn name(&self) -> &'static str {
            "sin-multiple"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            let n = draw(rng, 1, 16) as u32;
            // keep 8 * n * a < 2^12 so t < 1/(8n)
            let cap = (GRID - 1) / (8 * n as u64);
            CaseInputs::Multiple {
                n,
                t: draw_angle(rng, cap),
            }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::Multiple { n, t } => check_sin_multiple(*n, t, opts),
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }

    pub(super) struct TanMultiple;

    impl LawCheck for TanMultiple {
        fn name(&self) -> &'static str {
            "tan-multiple"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            let n = draw(rng, 1, 16) as u32;
            let cap = (GRID - 1) / (8 * n as u64);
            CaseInputs::Multiple {
                n,
                t: draw_angle(rng, cap),
            }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::Multiple { n, t } => check_tan_multiple(*n, t, opts),
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }

    pub(super) struct SinRatioStep;

    impl LawCheck for SinRatioStep {
        fn name(&self) -> &'static str {
            "sin-ratio-step"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            let n = draw(rng, 1, 15) as u32;
            let cap = (GRID - 1) / (8 * (n as u64 + 1));
            CaseInputs::Multiple {
                n,
                t: draw_angle(rng, cap),
            }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::Multiple { n, t } => check_sin_ratio_step(*n, t, opts),
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }

    pub(super) struct TanRatioStep;

    impl LawCheck for TanRatioStep {
        fn name(&self) -> &'static str {
            "tan-ratio-step"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            let n = draw(rng, 1, 15) as u32;
            let cap = (GRID - 1) / (8 * (n as u64 + 1));
            CaseInputs::Multiple {
                n,
                t: draw_angle(rng, cap),
            }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::Multiple { n, t } => check_tan_ratio_step(*n, t, opts),
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }

    pub(super) struct RatioMonotone;

    impl LawCheck for RatioMonotone {
        fn name(&self) -> &'static str {
            "ratio-monotone"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            let n = draw(rng, 1, 8) as u32;
            let m = n + draw(rng, 0, 8) as u32;
            // 8 * m * a <= 2^12 keeps m*t within the eighth turn
            let cap = GRID / (8 * m as u64);
            CaseInputs::RatioPair {
                m,
                n,
                t: draw_angle(rng, cap),
            }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::RatioPair { m, n, t } => check_ratio_monotone(*m, *n, t, opts),
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }

    pub(super) struct MonotoneChain;

    impl LawCheck for MonotoneChain {
        fn name(&self) -> &'static str {
            "monotone-chain"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            let a = draw_angle(rng, GRID / 8);
            let b = draw_angle(rng, GRID / 8);
            let (t1, t2) = if a <= b { (a, b) } else { (b, a) };
            CaseInputs::AnglePair { t1, t2 }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::AnglePair { t1, t2 } => check_monotone_chain(t1, t2, opts),
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }

    pub(super) struct MidpointConcaveSin;

    impl LawCheck for MidpointConcaveSin {
        fn name(&self) -> &'static str {
            "midpoint-concave-sin"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            let mut angle = || {
                let a = draw(rng, 0, GRID / 8);
                TurnFraction::new(a as i64, GRID as i64).unwrap()
            };
            CaseInputs::AnglePair {
                t1: angle(),
                t2: angle(),
            }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::AnglePair { t1, t2 } => check_midpoint_concave_sin(t1, t2, opts),
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }

    pub(super) struct MidpointConvexTan;

    impl LawCheck for MidpointConvexTan {
        fn name(&self) -> &'static str {
            "midpoint-convex-tan"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            let mut angle = || {
                let a = draw(rng, 0, GRID / 16);
                TurnFraction::new(a as i64, GRID as i64).unwrap()
            };
            CaseInputs::AnglePair {
                t1: angle(),
                t2: angle(),
            }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::AnglePair { t1, t2 } => check_midpoint_convex_tan(t1, t2, opts),
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }

    pub(super) struct ChordSlopeSin;

    impl LawCheck for ChordSlopeSin {
        fn name(&self) -> &'static str {
            "chord-slope-sin"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            let a = draw_angle(rng, GRID / 8);
            let b = draw_angle(rng, GRID / 8);
            let (t1, t2) = if a <= b { (a, b) } else { (b, a) };
            CaseInputs::AnglePair { t1, t2 }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::AnglePair { t1, t2 } => {
                    check_chord_slope(ChordFunction::Sin, t1, t2, opts)
                }
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }

    pub(super) struct ChordSlopeTan;

    impl LawCheck for ChordSlopeTan {
        fn name(&self) -> &'static str {
            "chord-slope-tan"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            let a = draw_angle(rng, GRID / 8);
            let b = draw_angle(rng, GRID / 8);
            let (t1, t2) = if a <= b { (a, b) } else { (b, a) };
            CaseInputs::AnglePair { t1, t2 }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::AnglePair { t1, t2 } => {
                    check_chord_slope(ChordFunction::Tan, t1, t2, opts)
                }
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }

    pub(super) struct TanAddition;

    impl LawCheck for TanAddition {
        fn name(&self) -> &'static str {
            "tan-addition"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            // |t| <= 3/32 keeps tangents below 0.67, the product below 1/2,
            // and the sum inside (-1/4, 1/4)
            let mut angle = || {
                let a = draw(rng, 0, 3 * (GRID / 32)) as i64;
                let sign = if draw(rng, 0, 1) == 1 { -1 } else { 1 };
                TurnFraction::new(sign * a, GRID as i64).unwrap()
            };
            CaseInputs::AnglePair {
                t1: angle(),
                t2: angle(),
            }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::AnglePair { t1, t2 } => check_tan_addition(t1, t2, opts),
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }

    pub(super) struct UnitConversion;

    impl LawCheck for UnitConversion {
        fn name(&self) -> &'static str {
            "unit-conversion"
        }

        fn sample(&self, rng: &mut ChaCha8Rng) -> CaseInputs {
            let units = [
                AngleUnit::turns(),
                AngleUnit::degrees(),
                AngleUnit::gradians(),
                AngleUnit::custom(Rational::new(7.into(), 3.into())).unwrap(),
            ];
            let c1 = units[draw(rng, 0, units.len() as u64 - 1) as usize].clone();
            let c2 = units[draw(rng, 0, units.len() as u64 - 1) as usize].clone();
            // angle as a fraction a/b of the first unit's full circle
            let a = draw(rng, 0, 255) as i64;
            let b = draw(rng, 1, 64) as i64;
            let x = c1.circle() * Rational::new(a.into(), b.into());
            CaseInputs::Conversion { c1, c2, x }
        }

        fn run(&self, inputs: &CaseInputs, opts: &CheckOptions) -> Result<CheckResult> {
            match inputs {
                CaseInputs::Conversion { c1, c2, x } => check_unit_conversion(c1, c2, x, opts),
                _ => Err(wrong_inputs(self.name())),
            }
        }
    }
}
