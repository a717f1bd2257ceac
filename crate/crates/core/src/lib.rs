//! Certified trigonometry from the addition laws alone.
//!
//! This crate builds guaranteed enclosures of sine, cosine, and tangent
//! without ever touching a floating-point unit or a power series. The only
//! ingredients are the addition formulas, the quarter-turn normalization
//! `sin(c/4) = 1`, `cos(c/4) = 0`, half-angle extraction by square roots,
//! and a derived Lipschitz-style continuity bound. Everything is computed
//! in exact dyadic arithmetic with directed rounding, so every interval
//! that comes out is a mathematical certificate, not an estimate.
//!
//! The crate is organized in layers:
//!
//! - [`dyadic`] / [`interval`]: arbitrary-precision dyadic scalars with
//!   directed rounding, and outward-rounded interval arithmetic on them.
//! - [`angle`]: exact rational angle units and turn fractions.
//! - [`trig`]: joint (sin, cos) enclosures at arbitrary rational angles.
//! - [`laws`]: machine certification of the classical trigonometric
//!   identities and inequalities, with adaptive precision refinement.
//! - [`pi`]: two-sided brackets of pi from inscribed and circumscribed
//!   regular polygon areas, with certified digit extraction.

pub mod angle;
pub mod dyadic;
pub mod error;
pub mod interval;
pub mod laws;
pub mod pi;
pub mod trig;

pub use angle::{AngleUnit, Rational, TurnFraction};
pub use dyadic::{Dyadic, Precision, Rounding};
pub use error::{Error, Result};
pub use interval::Interval;
pub use trig::TrigPair;
