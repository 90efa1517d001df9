//! `hosoya` command line: build, z, cf, seq, verify.
//!
//! Exit codes: 0 ok, 2 input error, 3 capability error, 4 verification
//! mismatch.

use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::contfrac::{self, CfSpec};
use crate::families::{self, RingParams};
use crate::family_spec::FamilySpec;
use crate::multigraph::Multigraph;
use crate::oracle;
use crate::verify::{self, Lemma1Config, Lemma2Config, Report, RingRanges, TransformRanges};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "hosoya", version, about = "Hosoya indices by matching enumeration and continued fractions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a family graph as an hgraph file.
    Build {
        /// Family spec, e.g. `ring:n=3,m=1,r=2,s=1`.
        family: String,
        /// Output path; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the Hosoya index of a family spec or an hgraph file.
    Z {
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        /// Print the derivation outline (oracle only, small graphs).
        #[arg(long)]
        trace: bool,
    },
    /// Evaluate a continued-fraction JSON spec.
    Cf {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = CfMode::Auto)]
        mode: CfMode,
    },
    /// Print u_0 .. u_{count-1} of a ring family.
    Seq {
        #[arg(long, default_value = "ring")]
        family: String,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
        #[arg(long, default_value_t = 0)]
        m: u64,
        #[arg(long, default_value_t = 11)]
        count: usize,
    },
    /// Run a verification suite and print one row per case.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value = "1..5")]
        n: Span,
        #[arg(long, default_value = "0..3")]
        m: Span,
        #[arg(long, default_value = "1..4")]
        r: Span,
        #[arg(long, default_value = "1..4")]
        s: Span,
        #[arg(long, default_value_t = 6)]
        max_spine: usize,
        #[arg(long, default_value_t = 4)]
        max_x: u64,
        #[arg(long, default_value_t = 4)]
        max_y: u64,
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
        #[arg(long, default_value_t = 18)]
        max_mult: u64,
        /// Random cases; defaults to 500 for lemma1, 200 for lemma2, 0 for radial.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "3..15")]
        cycle_n: Span,
        #[arg(long)]
        comb_n: Option<Span>,
        #[arg(long, default_value = "0..3")]
        comb_a: Span,
        #[arg(long, default_value = "1..3")]
        comb_b: Span,
        /// Radial part counts (radial suite).
        #[arg(long, default_value = "1..10")]
        parts: Span,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Cf,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CfMode {
    Auto,
    General,
    Negative,
    Tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemma1,
    Lemma2,
    Theorem1,
    Remark2,
    Radial,
    Transforms,
}

/// Inclusive integer range written `a..b` or `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span(pub u64, pub u64);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad range bound `{t}`"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(Span(lo, hi))
    }
}

impl Span {
    fn range(self) -> RangeInclusive<u64> {
        self.0..=self.1
    }

    fn range_usize(self) -> RangeInclusive<usize> {
        self.0 as usize..=self.1 as usize
    }
}

/// Failure carrying an exit code and a message for standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn input_err(e: impl std::fmt::Display) -> Failure {
    fail(EXIT_INPUT, e.to_string())
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut stdout = String::new();
    let result = execute(cli.command, &mut stdout);
    let _ = out.write_all(stdout.as_bytes());
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut String) -> Result<i32, Failure> {
    match command {
        Command::Build { family, output } => cmd_build(&family, output, out),
        Command::Z { input, method, trace } => cmd_z(&input, method, trace, out),
        Command::Cf { file, mode } => cmd_cf(&file, mode, out),
        Command::Seq { family, r, s, m, count } => cmd_seq(&family, r, s, m, count, out),
        Command::Verify {
            suite,
            n,
            m,
            r,
            s,
            max_spine,
            max_x,
            max_y,
            max_vertices,
            max_mult,
            samples,
            seed,
            cycle_n,
            comb_n,
            comb_a,
            comb_b,
            parts,
        } => {
            let ring = RingRanges { n: n.range(), m: m.range(), r: r.range(), s: s.range() };
            let report = match suite {
                Suite::Lemma1 => {
                    verify::lemma1(&Lemma1Config { max_spine, max_x, max_y, samples: samples.unwrap_or(500), seed })
                }
                Suite::Lemma2 => {
                    verify::lemma2(&Lemma2Config { max_vertices, max_mult, samples: samples.unwrap_or(200), seed })
                }
                Suite::Theorem1 => verify::theorem1(&ring),
                Suite::Remark2 => verify::remark2(&ring),
                Suite::Radial => verify::radial(parts.range(), samples.unwrap_or(0), seed),
                Suite::Transforms => verify::transforms(&TransformRanges {
                    cycle_n: cycle_n.range_usize(),
                    comb_n: comb_n.map(Span::range_usize),
                    comb_a: comb_a.range(),
                    comb_b: comb_b.range(),
                }),
            }
            .map_err(input_err)?;
            cmd_verify_output(&report, out)
        }
    }
}

fn cmd_build(family: &str, output: Option<PathBuf>, out: &mut String) -> Result<i32, Failure> {
    let graph = FamilySpec::parse(family).map_err(input_err)?.graph().map_err(input_err)?;
    let text = graph.to_hgraph();
    match output {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| fail(EXIT_INPUT, format!("cannot write {}: {e}", path.display())))?,
        None => out.push_str(&text),
    }
    Ok(EXIT_OK)
}

enum Input {
    Family(FamilySpec),
    File(Multigraph),
}

fn load_input(input: &str) -> Result<Input, Failure> {
    let path = std::path::Path::new(input);
    let looks_like_family =
        input == "naphthalene" || input.split_once(':').is_some_and(|(f, _)| !f.contains(['/', '.']));
    if looks_like_family && !path.is_file() {
        return FamilySpec::parse(input).map(Input::Family).map_err(input_err);
    }
    let text = std::fs::read_to_string(path).map_err(|e| fail(EXIT_INPUT, format!("cannot read {input}: {e}")))?;
    Multigraph::from_hgraph(&text).map(Input::File).map_err(input_err)
}

fn cmd_z(input: &str, method: Method, trace: bool, out: &mut String) -> Result<i32, Failure> {
    let loaded = load_input(input)?;
    let graph = match &loaded {
        Input::Family(f) => f.graph().map_err(input_err)?,
        Input::File(g) => g.clone(),
    };
    let cf_value = || -> Result<num_bigint::BigInt, Failure> {
        let spec = match &loaded {
            Input::Family(f) => f,
            Input::File(_) => {
                return Err(fail(
                    EXIT_CAPABILITY,
                    "the cf method needs a family spec; hgraph files support --method oracle only",
                ))
            }
        };
        spec.cf_hosoya()
            .map_err(input_err)?
            .ok_or_else(|| fail(EXIT_CAPABILITY, format!("no continued fraction is known for `{input}`")))
    };
    match method {
        Method::Oracle => {
            if trace {
                let (z, t) = oracle::hosoya_trace(&graph).map_err(|e| fail(EXIT_CAPABILITY, e.to_string()))?;
                let _ = writeln!(out, "{z}");
                out.push_str(&t.outline());
            } else {
                let _ = writeln!(out, "{}", oracle::hosoya(&graph));
            }
            Ok(EXIT_OK)
        }
        Method::Cf => {
            let _ = writeln!(out, "{}", cf_value()?);
            Ok(EXIT_OK)
        }
        Method::Both => {
            let z = oracle::hosoya(&graph);
            let c = cf_value()?;
            let _ = writeln!(out, "{z} {c}");
            if z == c {
                Ok(EXIT_OK)
            } else {
                Err(fail(EXIT_MISMATCH, format!("oracle {z} != continued fraction {c}")))
            }
        }
    }
}

fn cmd_cf(file: &std::path::Path, mode: CfMode, out: &mut String) -> Result<i32, Failure> {
    let text =
        std::fs::read_to_string(file).map_err(|e| fail(EXIT_INPUT, format!("cannot read {}: {e}", file.display())))?;
    let spec = CfSpec::from_json(&text).map_err(input_err)?;
    let matches = matches!(
        (mode, &spec),
        (CfMode::Auto, _)
            | (CfMode::General, CfSpec::General(_))
            | (CfMode::Negative, CfSpec::Negative(_))
            | (CfMode::Tree, CfSpec::Tree(_))
    );
    if !matches {
        return Err(fail(EXIT_INPUT, format!("{} does not hold a {mode:?} continued fraction", file.display())));
    }
    let value = spec.evaluate().map_err(input_err)?;
    let _ = writeln!(out, "{value}");
    if let CfSpec::General(g) = &spec {
        let _ = writeln!(out, "k\tp_k\tq_k");
        for (k, c) in contfrac::convergents(g).iter().enumerate() {
            let _ = writeln!(out, "{k}\t{}\t{}", c.p, c.q);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_seq(family: &str, r: u64, s: u64, m: u64, count: usize, out: &mut String) -> Result<i32, Failure> {
    if family != "ring" {
        return Err(fail(EXIT_INPUT, format!("unknown sequence family `{family}` (only `ring`)")));
    }
    if count < 1 {
        return Err(fail(EXIT_INPUT, "count must be at least 1"));
    }
    let params = RingParams::new(1, m, r, s).map_err(input_err)?;
    for u in families::ring_sequence(&params, count) {
        let _ = writeln!(out, "{u}");
    }
    Ok(EXIT_OK)
}

fn cmd_verify_output(report: &Report, out: &mut String) -> Result<i32, Failure> {
    out.push_str(&report.table());
    if report.all_pass() {
        Ok(EXIT_OK)
    } else {
        Err(fail(EXIT_MISMATCH, format!("{}: {} failing rows", report.suite, report.failures())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_parsing() {
        assert_eq!("1..4".parse::<Span>().unwrap(), Span(1, 4));
        assert_eq!("1..=4".parse::<Span>().unwrap(), Span(1, 4));
        assert_eq!("3".parse::<Span>().unwrap(), Span(3, 3));
        assert!("4..1".parse::<Span>().is_err());
        assert!("a..1".parse::<Span>().is_err());
    }
}
