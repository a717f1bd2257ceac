//! Command-line front end: certified pi digits, certified trig evaluation
//! in arbitrary angle units, and the law verification suite.
//!
//! Exit codes: 0 success, 1 inconclusive law checks at the precision cap,
//! 2 capacity exceeded, 3 domain-undefined (tangent across a cosine zero),
//! 64 usage errors.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use certrig::angle::parse_rational;
use certrig::laws::{self, SuiteConfig};
use certrig::pi::{pi_enclosure, pi_to_digits};
use certrig::trig::{eval, sin_cos_over};
use certrig::{AngleUnit, Dyadic, Error, Interval, Precision, Rational, Rounding};

const EXIT_OK: u8 = 0;
const EXIT_INCONCLUSIVE: u8 = 1;
const EXIT_CAPACITY: u8 = 2;
const EXIT_UNDEFINED: u8 = 3;
const EXIT_USAGE: u8 = 64;

/// Environment variable overriding the internal precision cap in bits.
const PRECISION_CAP_ENV: &str = "CERTRIG_MAX_BITS";
const DEFAULT_PRECISION_CAP: u32 = 1 << 20;

#[derive(Parser)]
#[command(
    name = "certrig",
    about = "Certified trigonometry and pi brackets from exact dyadic interval arithmetic",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print certified decimal digits of pi.
    Pi(PiArgs),
    /// Evaluate sin, cos, or tan as a certified enclosure.
    Eval(EvalArgs),
    /// Run the law verification suite.
    Laws(LawsArgs),
}

#[derive(Args)]
struct PiArgs {
    /// Number of certified decimal digits after "3."
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    digits: u32,
    #[arg(long, value_enum, default_value_t = Output::Plain)]
    output: Output,
}

#[derive(Args)]
struct EvalArgs {
    /// Function to evaluate.
    #[arg(value_enum)]
    function: Function,
    /// Exact rational angle: optionally signed integer or "p/q".
    #[arg(long, allow_hyphen_values = true)]
    angle: String,
    /// Angle unit: turns, degrees, gradians, radians, or a positive
    /// rational full-circle measure such as "400" or "7/3".
    #[arg(long, default_value = "turns")]
    unit: String,
    /// Requested enclosure precision in bits.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(4..))]
    precision_bits: u32,
    #[arg(long, value_enum, default_value_t = Output::Plain)]
    output: Output,
}

#[derive(Args)]
struct LawsArgs {
    /// Random samples per check.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
    samples: u32,
    /// Seed for the deterministic sampler.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Precision cap for adaptive refinement.
    #[arg(long, default_value_t = 4096, value_parser = clap::value_parser!(u32).range(4..))]
    max_bits: u32,
    /// Restrict the run to named checks (repeatable).
    #[arg(long)]
    check: Vec<String>,
    #[arg(long, value_enum, default_value_t = Output::Plain)]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    Sin,
    Cos,
    Tan,
}

impl Function {
    fn name(self) -> &'static str {
        match self {
            Function::Sin => "sin",
            Function::Cos => "cos",
            Function::Tan => "tan",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Plain,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    let cap = match precision_cap() {
        Ok(cap) => cap,
        Err(msg) => return usage_error(&msg),
    };

    let outcome = match cli.command {
        Command::Pi(args) => cmd_pi(args, cap),
        Command::Eval(args) => cmd_eval(args, cap),
        Command::Laws(args) => cmd_laws(args, cap),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::Capacity(_) => EXIT_CAPACITY,
                Error::Domain(_) => EXIT_UNDEFINED,
                Error::Parameter(_) => EXIT_USAGE,
            })
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn precision_cap() -> Result<u32, String> {
    match std::env::var(PRECISION_CAP_ENV) {
        Ok(raw) => raw.parse::<u32>().ok().filter(|v| *v >= 4).ok_or(format!(
            "{PRECISION_CAP_ENV} must be an integer >= 4, got {raw:?}"
        )),
        Err(_) => Ok(DEFAULT_PRECISION_CAP),
    }
}

fn bounds_json(lower: &Dyadic, upper: &Dyadic, digits: u32) -> serde_json::Value {
    json!({
        "lo": lower.to_string(),
        "hi": upper.to_string(),
        "decimal_lo": lower.to_decimal_string(digits, Rounding::Down),
        "decimal_hi": upper.to_decimal_string(digits, Rounding::Up),
    })
}

fn cmd_pi(args: PiArgs, cap: u32) -> Result<u8, Error> {
    let result = pi_to_digits(args.digits, cap)?;
    match args.output {
        Output::Plain => println!("{}", result.text),
        Output::Json => {
            let enc = &result.enclosure;
            let doc = json!({
                "command": "pi",
                "inputs": { "digits": args.digits },
                "result": bounds_json(&enc.lower, &enc.upper, args.digits + 2),
                "precision_bits": enc.precision.bits(),
                "k": enc.depth,
                "digits": result.text,
            });
            println!("{doc}");
        }
    }
    Ok(EXIT_OK)
}

fn cmd_eval(args: EvalArgs, cap: u32) -> Result<u8, Error> {
    if args.precision_bits > cap {
        return Err(Error::Parameter(format!(
            "precision {} exceeds the cap of {cap} bits (set {PRECISION_CAP_ENV} to raise it)",
            args.precision_bits
        )));
    }
    let p = Precision::try_new(args.precision_bits)?;
    let angle = parse_rational(&args.angle)?;
    let enclosure = match parse_unit(&args.unit)? {
        Unit::Exact(unit) => {
            let pair = eval(&unit, &angle, p)?;
            match args.function {
                Function::Sin => pair.sin().clone(),
                Function::Cos => pair.cos().clone(),
                Function::Tan => pair.tan(p)?,
            }
        }
        Unit::Radians => eval_radians(args.function, &angle, p, cap)?,
    };

    let digits = distinguishing_digits(&enclosure)?;
    let lo_text = enclosure.lo().to_decimal_string(digits, Rounding::Down);
    let hi_text = enclosure.hi().to_decimal_string(digits, Rounding::Up);
    match args.output {
        Output::Plain => println!("[{lo_text}, {hi_text}]"),
        Output::Json => {
            let doc = json!({
                "command": "eval",
                "inputs": {
                    "function": args.function.name(),
                    "angle": args.angle,
                    "unit": args.unit,
                },
                "result": {
                    "lo": enclosure.lo().to_string(),
                    "hi": enclosure.hi().to_string(),
                    "decimal_lo": lo_text,
                    "decimal_hi": hi_text,
                },
                "precision_bits": args.precision_bits,
            });
            println!("{doc}");
        }
    }
    Ok(EXIT_OK)
}

fn cmd_laws(args: LawsArgs, cap: u32) -> Result<u8, Error> {
    if args.max_bits > cap {
        return Err(Error::Parameter(format!(
            "--max-bits {} exceeds the cap of {cap} bits (set {PRECISION_CAP_ENV} to raise it)",
            args.max_bits
        )));
    }
    let mut config = SuiteConfig::new(args.seed, args.samples, args.max_bits);
    config.selection = args.check;
    let report = laws::run_suite(&config)?;
    match args.output {
        Output::Plain => print!("{}", report.render_text()),
        Output::Json => {
            let doc = json!({
                "command": "laws",
                "inputs": {
                    "samples": args.samples,
                    "seed": args.seed,
                    "max_bits": args.max_bits,
                },
                "result": report.to_json(),
            });
            println!("{doc}");
        }
    }
    Ok(if report.total_failed() > 0 {
        EXIT_CAPACITY
    } else if report.total_inconclusive() > 0 {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    })
}

enum Unit {
    Exact(AngleUnit),
    Radians,
}

fn parse_unit(text: &str) -> Result<Unit, Error> {
    match text {
        "turns" => Ok(Unit::Exact(AngleUnit::turns())),
        "degrees" => Ok(Unit::Exact(AngleUnit::degrees())),
        "gradians" => Ok(Unit::Exact(AngleUnit::gradians())),
        "radians" => Ok(Unit::Radians),
        other => Ok(Unit::Exact(AngleUnit::custom(parse_rational(other)?)?)),
    }
}

/// Radians route: the full circle measures 2 pi, which is not rational, so
/// the turn fraction is only known inside a bracket. The pi bracket is
/// refined until its share of the output width budget is below a quarter,
/// then the angle interval is evaluated with continuity widening.
fn eval_radians(
    function: Function,
    angle: &Rational,
    p: Precision,
    cap: u32,
) -> Result<Interval, Error> {
    if angle == &Rational::from_integer(BigInt::from(0)) {
        let pair = eval(&AngleUnit::turns(), angle, p)?;
        return match function {
            Function::Sin => Ok(pair.sin().clone()),
            Function::Cos => Ok(pair.cos().clone()),
            Function::Tan => pair.tan(p),
        };
    }

    // want 8 * width(t) <= 2^-(p+1), with width(t) <= |x| * width(pi) / 18
    let abs_angle = if angle < &Rational::from_integer(BigInt::from(0)) {
        -angle.clone()
    } else {
        angle.clone()
    };
    let budget = Rational::new(BigInt::from(18), BigInt::from(16) << p.bits() as u64) / &abs_angle;

    let mut depth = (p.bits() + angle_magnitude_bits(&abs_angle) + 12) / 2 + 2;
    let work = Precision::try_new((p.bits() + 64).min(cap))?;
    let bracket = loop {
        let enc = pi_enclosure(depth, work)?;
        if enc.width()?.to_ratio() <= budget {
            break enc;
        }
        if depth as u64 * 2 > cap as u64 {
            return Err(Error::Capacity(
                "pi bracket for radian conversion exceeds the precision cap",
            ));
        }
        depth += 2;
    };

    // t = x / (2 pi) as an exact rational interval
    let two_lo = bracket.lower.to_ratio() * BigInt::from(2);
    let two_hi = bracket.upper.to_ratio() * BigInt::from(2);
    let (t_lo, t_hi) = {
        let a = angle / &two_hi;
        let b = angle / &two_lo;
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    };
    let (sin, cos) = sin_cos_over(&t_lo, &t_hi, p)?;
    match function {
        Function::Sin => Ok(sin),
        Function::Cos => Ok(cos),
        Function::Tan => {
            if cos.contains(&Dyadic::zero()) {
                return Err(Error::Domain(
                    "tangent undefined: cosine enclosure contains zero",
                ));
            }
            sin.div(&cos, p)
        }
    }
}

fn angle_magnitude_bits(x: &Rational) -> u32 {
    let n = x.numer().bits();
    let d = x.denom().bits();
    n.saturating_sub(d).min(64) as u32 + 1
}

/// Enough fractional digits that the printed endpoints differ (or the exact
/// expansion for a point interval).
fn distinguishing_digits(iv: &Interval) -> Result<u32, Error> {
    let width = iv.width()?;
    if width.is_zero() {
        let frac = (-iv.lo().exponent()).max(0) as u32;
        // a dyadic with e fractional bits has at most e fractional digits
        return Ok(frac.min(72));
    }
    // smallest d with 10^-d below the width, plus one digit of margin
    let log2 = width.bit_length() as i64 - 1 + width.exponent();
    let digits = if log2 >= 0 {
        1
    } else {
        ((-log2) as u64 * 30103 / 100000 + 2) as u32
    };
    Ok(digits.clamp(1, 100_000))
}
