//! The `fejer` command line.
//!
//! Data goes to the output stream, diagnostics to the error stream. Exit
//! status is 0 on success, 1 for usage errors and 2 when a numerical
//! contract fails or output cannot be written.

use std::f64::consts::PI;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::certify::build_certificate;
use crate::error::Error;
use crate::format::format_g;
use crate::selftest;
use crate::series::{evaluate, EvalPoint, SumKind};
use crate::spike::{jump_prediction, measure_jump, spike_height};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fejer", about = "Fejer-type trigonometric sums and their positivity certificate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SumArg {
    #[value(name = "s")]
    Sine,
    #[value(name = "c")]
    Cosine,
    #[value(name = "1")]
    CosCos,
    #[value(name = "2")]
    CosSin,
    #[value(name = "3")]
    SinCos,
    #[value(name = "4")]
    SinSin,
}

impl From<SumArg> for SumKind {
    fn from(arg: SumArg) -> Self {
        match arg {
            SumArg::Sine => SumKind::SineBasic,
            SumArg::Cosine => SumKind::CosineBasic,
            SumArg::CosCos => SumKind::CosCos,
            SumArg::CosSin => SumKind::CosSin,
            SumArg::SinCos => SumKind::SinCos,
            SumArg::SinSin => SumKind::SinSin,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpikeArg {
    #[value(name = "1")]
    CosCos,
    #[value(name = "2")]
    CosSin,
    #[value(name = "3")]
    SinCos,
}

impl From<SpikeArg> for SumKind {
    fn from(arg: SpikeArg) -> Self {
        match arg {
            SpikeArg::CosCos => SumKind::CosCos,
            SpikeArg::CosSin => SumKind::CosSin,
            SpikeArg::SinCos => SumKind::SinCos,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one sum at one point.
    Eval {
        #[arg(long)]
        sum: SumArg,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        /// Interpret angles in units of π.
        #[arg(long)]
        pi_units: bool,
    },
    /// Tabulate a sum on an evenly spaced grid.
    Scan {
        #[arg(long)]
        sum: SumArg,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long)]
        points: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: ScanFormat,
        #[arg(long)]
        pi_units: bool,
    },
    /// Build the positivity certificate for Σ sin(sin kx)/k.
    Certify {
        #[arg(long, default_value_t = 10)]
        m_max: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Spike height of S^(1), S^(2) (at π/2) or S^(3) (at 2π/3).
    Spike {
        #[arg(long)]
        sum: SpikeArg,
        #[arg(long)]
        n: u64,
    },
    /// Measure the jump of Σ sin(sin kx)/k across 2π/3.
    Jump {
        #[arg(long)]
        n: u64,
    },
    /// Tail bounds B_m and roots x_m^± for m = 1..=m_max.
    Table1 {
        #[arg(long, default_value_t = 10)]
        m_max: u32,
    },
    /// Run the invariant suites.
    Selftest,
}

/// A tabulated sum.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    pub kind: SumKind,
    pub n: u64,
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

impl ScanResult {
    /// `points` evenly spaced abscissae from `from` to `to` inclusive.
    pub fn compute(kind: SumKind, n: u64, from: f64, to: f64, points: usize) -> Result<Self, Error> {
        EvalPoint::new(n, from)?;
        EvalPoint::new(n, to)?;
        if points == 0 {
            return Err(Error::Domain("scan needs at least one point".into()));
        }
        if points > 1 && !(from < to) {
            return Err(Error::Domain("scan range must satisfy from < to".into()));
        }
        let xs: Vec<f64> = if points == 1 {
            vec![from]
        } else {
            let step = (to - from) / (points - 1) as f64;
            (0..points)
                .map(|i| if i + 1 == points { to } else { from + step * i as f64 })
                .collect()
        };
        let ys = xs.iter().map(|&x| evaluate(kind, n, x)).collect();
        Ok(Self { kind, n, xs, ys })
    }
}

#[derive(Serialize)]
struct ScanJson<'a> {
    kind: &'a str,
    n: u64,
    points: Vec<[f64; 2]>,
}

/// Writes a scan as CSV (`x,value` header, `%.17g` fields, LF endings) or
/// as a JSON object `{"kind", "n", "points": [[x, y], …]}`.
pub fn export_scan(result: &ScanResult, format: ScanFormat, sink: &mut dyn Write) -> io::Result<()> {
    match format {
        ScanFormat::Csv => {
            let mut text = String::from("x,value\n");
            for (x, y) in result.xs.iter().zip(&result.ys) {
                text.push_str(&format_g(*x, 17));
                text.push(',');
                text.push_str(&format_g(*y, 17));
                text.push('\n');
            }
            sink.write_all(text.as_bytes())
        }
        ScanFormat::Json => {
            let doc = ScanJson {
                kind: result.kind.name(),
                n: result.n,
                points: result.xs.iter().zip(&result.ys).map(|(&x, &y)| [x, y]).collect(),
            };
            serde_json::to_writer(&mut *sink, &doc)?;
            sink.write_all(b"\n")
        }
    }
}

#[derive(Serialize)]
struct JumpReport {
    n: u64,
    window_half_width: f64,
    left_level: f64,
    right_level: f64,
    jump: f64,
    prediction: f64,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) | Error::Unsupported { .. } | Error::Contract(_) => EXIT_USAGE,
        Error::BracketFailure { .. } | Error::Consistency(_) => EXIT_FAILURE,
    }
}

enum Failure {
    Numeric(Error),
    Io(io::Error),
    Contract(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Numeric(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn to_json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn table1(m_max: u32, out: &mut dyn Write) -> Result<(), Failure> {
    let cert = build_certificate(m_max)?;
    writeln!(out, "{:>3}  {:>17}  {:>17}  {:>12}", "m", "B_m", "x_m^-/pi", "x_m^+/pi")?;
    for s in &cert.stages {
        writeln!(
            out,
            "{:>3}  {:>17.10e}  {:>17.10e}  {:>12.10}",
            s.m,
            s.b_m,
            s.roots.x_minus_over_pi(),
            s.roots.x_plus_over_pi()
        )?;
    }
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let angle = |v: f64, pi_units: bool| if pi_units { v * PI } else { v };
    match command {
        Command::Eval { sum, n, x, pi_units } => {
            let point = EvalPoint::new(n, angle(x, pi_units))?;
            writeln!(out, "{}", format_g(point.evaluate(sum.into()), 17))?;
        }
        Command::Scan { sum, n, from, to, points, format, pi_units } => {
            let scan = ScanResult::compute(
                sum.into(),
                n,
                angle(from, pi_units),
                angle(to, pi_units),
                points,
            )?;
            export_scan(&scan, format, out)?;
        }
        Command::Certify { m_max, format } => {
            let cert = build_certificate(m_max)?;
            let report = cert.report();
            match format {
                ReportFormat::Json => to_json_line(out, &report)?,
                ReportFormat::Text => {
                    for s in &report.stages {
                        writeln!(
                            out,
                            "m={} B_m={:e} x-/pi={:e} x+/pi={} lemma1={} lemma3={} overlap={}",
                            s.m,
                            s.b_m,
                            s.x_minus_over_pi,
                            s.x_plus_over_pi,
                            s.lemma1_ok,
                            s.lemma3_ok,
                            s.overlap_ok
                        )?;
                    }
                    writeln!(out, "all_verified={}", report.all_verified)?;
                }
            }
            if !cert.all_verified {
                return Err(Failure::Contract(format!(
                    "certificate failed at stage {:?}",
                    cert.failed_stage
                )));
            }
        }
        Command::Spike { sum, n } => to_json_line(out, &spike_height(sum.into(), n)?)?,
        Command::Jump { n } => {
            let m = measure_jump(n)?;
            let report = JumpReport {
                n: m.n,
                window_half_width: m.window_half_width,
                left_level: m.left_level,
                right_level: m.right_level,
                jump: m.jump,
                prediction: jump_prediction(),
            };
            to_json_line(out, &report)?;
        }
        Command::Table1 { m_max } => table1(m_max, out)?,
        Command::Selftest => {
            let checks = selftest::run_all();
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{tag}  {}  ({})", c.name, c.detail)?;
            }
            if let Some(failed) = checks.iter().find(|c| !c.passed) {
                writeln!(err, "selftest failed: {}", failed.name)?;
                return Err(Failure::Contract(format!(
                    "{} of {} checks failed",
                    checks.iter().filter(|c| !c.passed).count(),
                    checks.len()
                )));
            }
        }
    }
    Ok(())
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Numeric(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: write failed: {e}");
            EXIT_FAILURE
        }
        Err(Failure::Contract(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}
