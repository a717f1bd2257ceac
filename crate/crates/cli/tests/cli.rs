//! Black-box tests of the command-line interface: exit codes, output
//! formats, determinism, and the bit-exact JSON round-trip.

use std::process::{Command, Output};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use serde_json::Value;

use certrig::trig::eval;
use certrig::{AngleUnit, Dyadic, Precision, Rational};

fn certrig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_certrig"))
        .args(args)
        .env_remove("CERTRIG_MAX_BITS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn pi_digits_plain_and_json() {
    let out = certrig(&["pi", "--digits", "12"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).trim(), "3.141592653589");

    let out = certrig(&["pi", "--digits", "12", "--output", "json"]);
    let doc: Value = serde_json::from_str(stdout(&out).trim()).expect("valid json");
    assert_eq!(doc["command"], "pi");
    assert_eq!(doc["digits"], "3.141592653589");
    assert_eq!(doc["inputs"]["digits"], 12);
    assert!(doc["k"].as_u64().unwrap() >= 2);
    assert!(doc["precision_bits"].as_u64().unwrap() >= 4);
    // the emitted dyadic bounds parse back and straddle the digit string
    let lo = Dyadic::from_str(doc["result"]["lo"].as_str().unwrap()).unwrap();
    let hi = Dyadic::from_str(doc["result"]["hi"].as_str().unwrap()).unwrap();
    assert!(lo < hi);
}

#[test]
fn eval_json_round_trips_bit_exactly() {
    let out = certrig(&[
        "eval",
        "sin",
        "--angle",
        "3/16",
        "--unit",
        "turns",
        "--precision-bits",
        "80",
        "--output",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc: Value = serde_json::from_str(stdout(&out).trim()).expect("valid json");
    let lo = Dyadic::from_str(doc["result"]["lo"].as_str().unwrap()).unwrap();
    let hi = Dyadic::from_str(doc["result"]["hi"].as_str().unwrap()).unwrap();

    // recompute through the library: the same inputs give the same bits
    let pair = eval(
        &AngleUnit::turns(),
        &Rational::new(BigInt::from(3), BigInt::from(16)),
        Precision::new(80),
    )
    .unwrap();
    assert_eq!(&lo, pair.sin().lo());
    assert_eq!(&hi, pair.sin().hi());
}

#[test]
fn eval_unit_equivalence_at_cli_level() {
    let deg = certrig(&["eval", "sin", "--angle", "45", "--unit", "degrees"]);
    let turn = certrig(&["eval", "sin", "--angle", "1/8", "--unit", "turns"]);
    assert_eq!(exit_code(&deg), 0);
    assert_eq!(stdout(&deg), stdout(&turn));
}

#[test]
fn eval_accepts_negative_angle_literals() {
    let neg = certrig(&["eval", "sin", "--angle", "-1/8", "--unit", "turns"]);
    assert_eq!(exit_code(&neg), 0);
    let pos = certrig(&["eval", "sin", "--angle", "1/8", "--unit", "turns"]);
    // sin is odd: the printed endpoints mirror exactly
    let text = stdout(&pos);
    let mut ends: Vec<&str> = text
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(", ")
        .collect();
    ends.reverse();
    let flipped = ends
        .iter()
        .map(|s| format!("-{s}"))
        .collect::<Vec<_>>()
        .join(", ");
    assert_eq!(stdout(&neg).trim(), format!("[{flipped}]"));
}

#[test]
fn eval_known_values() {
    let out = certrig(&["eval", "sin", "--angle", "90", "--unit", "degrees"]);
    assert_eq!(stdout(&out).trim(), "[1, 1]");
    let out = certrig(&["eval", "cos", "--angle", "1/2", "--unit", "turns"]);
    assert_eq!(stdout(&out).trim(), "[-1, -1]");
    let out = certrig(&["eval", "tan", "--angle", "1/8", "--unit", "turns"]);
    let text = stdout(&out);
    let body = text.trim().trim_start_matches('[').trim_end_matches(']');
    let (lo, hi) = body.split_once(", ").expect("two endpoints");
    assert!(lo.parse::<f64>().unwrap() <= 1.0);
    assert!(hi.parse::<f64>().unwrap() >= 1.0);
}

#[test]
fn radians_route_contains_taylor_bracket() {
    // alternating Taylor partial sums for sin(1/2) bracket the true value
    let x = Ratio::new(BigInt::from(1), BigInt::from(2));
    let mut term = x.clone();
    let mut sum = x.clone();
    let mut bounds = Vec::new();
    for i in 1..12u32 {
        let k = 2 * i;
        term = -term * &x * &x / BigInt::from(k * (k + 1));
        sum += &term;
        bounds.push(sum.clone());
    }
    let mut last_two = bounds[bounds.len() - 2..].to_vec();
    last_two.sort();
    let (taylor_lo, taylor_hi) = (last_two[0].clone(), last_two[1].clone());

    let out = certrig(&[
        "eval",
        "sin",
        "--angle",
        "1/2",
        "--unit",
        "radians",
        "--precision-bits",
        "64",
        "--output",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc: Value = serde_json::from_str(stdout(&out).trim()).expect("valid json");
    let lo = Dyadic::from_str(doc["result"]["lo"].as_str().unwrap()).unwrap();
    let hi = Dyadic::from_str(doc["result"]["hi"].as_str().unwrap()).unwrap();
    // both enclose sin(1/2), so they must overlap, and the CLI interval
    // must stay within its width contract
    assert!(lo.to_ratio() <= taylor_hi);
    assert!(hi.to_ratio() >= taylor_lo);
    let width = hi.to_ratio() - lo.to_ratio();
    assert!(width <= Ratio::new(BigInt::from(1), BigInt::from(1) << 60));
}

#[test]
fn laws_runs_are_deterministic() {
    let a = certrig(&["laws", "--samples", "10", "--seed", "7"]);
    let b = certrig(&["laws", "--samples", "10", "--seed", "7"]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = certrig(&["laws", "--samples", "10", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn laws_check_selection() {
    let out = certrig(&[
        "laws",
        "--samples",
        "3",
        "--seed",
        "1",
        "--check",
        "pythagorean",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("check pythagorean:"));
    assert!(!text.contains("check tan-addition:"));

    let out = certrig(&["laws", "--samples", "3", "--check", "not-a-law"]);
    assert_eq!(exit_code(&out), 64);
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["pi", "--digits", "0"][..],
        &["laws", "--samples", "0"][..],
        &["eval", "sin", "--angle", "1/0", "--unit", "turns"][..],
        &["eval", "sin", "--angle", "x", "--unit", "turns"][..],
        &["eval", "sin", "--angle", "1", "--unit", "-2"][..],
        &["eval", "sin", "--angle", "1", "--precision-bits", "2"][..],
    ] {
        let out = certrig(args);
        assert_eq!(exit_code(&out), 64, "args {args:?}");
    }
}

#[test]
fn laws_accepts_a_tiny_precision_cap() {
    // the internal precision floor outruns the shrinking margins, so even
    // a 4-bit cap still certifies the sampled instances
    let out = certrig(&[
        "laws",
        "--samples",
        "2",
        "--seed",
        "3",
        "--max-bits",
        "4",
        "--check",
        "sin-ratio-step",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("certified=2"));
}

#[test]
fn undefined_tangent_exits_3() {
    let out = certrig(&["eval", "tan", "--angle", "1/4", "--unit", "turns"]);
    assert_eq!(exit_code(&out), 3);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("undefined"));
}

#[test]
fn precision_cap_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_certrig"))
        .args(["eval", "sin", "--angle", "1/8", "--precision-bits", "512"])
        .env("CERTRIG_MAX_BITS", "128")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 64);

    let out = Command::new(env!("CARGO_BIN_EXE_certrig"))
        .args(["pi", "--digits", "500"])
        .env("CERTRIG_MAX_BITS", "64")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 2);

    let out = Command::new(env!("CARGO_BIN_EXE_certrig"))
        .args(["pi", "--digits", "5"])
        .env("CERTRIG_MAX_BITS", "garbage")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 64);
}

#[test]
fn help_exits_zero() {
    let out = certrig(&["--help"]);
    assert_eq!(exit_code(&out), 0);
    let out = certrig(&["eval", "--help"]);
    assert_eq!(exit_code(&out), 0);
}
