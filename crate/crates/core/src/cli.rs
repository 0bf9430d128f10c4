//! Command implementations behind the `demazure` binary.
//!
//! Every command returns its output text and an exit code: 0 pass, 1
//! verification mismatch, 2 invalid configuration, 3 resource cap.

use std::ffi::OsString;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::crystal::DEFAULT_NODE_CAP;
use crate::demazure::{
    demazure_paths, homogeneous_character, verify_inhom, verify_iso, verify_kostka, DemazureSetup,
    InhomSetup,
};
use crate::error::{Error, Result};
use crate::symfunc::{kostka_foulkes, Partition};
use crate::weyl::Word;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Environment variable consulted when `--cap` is absent.
pub const CAP_ENV: &str = "CRYSTAL_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Iso,
    Kostka,
    Inhom,
}

/// Demazure crystals of affine sl_n: graphs, characters, Kostka-Foulkes
/// polynomials, and verification suites.
#[derive(Debug, Parser)]
#[command(name = "demazure", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Maximum number of nodes any closure or product may reach.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Crystal graph of the Demazure closure along a word.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        l: u32,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Space-separated reflection indices, leftmost applied last.
        #[arg(long, default_value = "")]
        word: String,
        /// Path length (default: ceil(|word|/d) + 1).
        #[arg(long)]
        truncate: Option<usize>,
    },
    /// Schur expansion of a homogeneous (`--L`) or inhomogeneous (`--mu`) character.
    Character {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        l: u32,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long = "L")]
        big_l: Option<usize>,
        #[arg(long)]
        mu: Option<Partition>,
    },
    /// Kostka-Foulkes polynomial from the charge statistic.
    Kostka {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Run a verification grid.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        l: u32,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Steps `K`, e.g. `1..6` (inclusive).
        #[arg(long = "K")]
        steps: Option<String>,
        /// Tensor lengths `L`, e.g. `2..3` (inclusive).
        #[arg(long = "L")]
        big_l: Option<String>,
        #[arg(long)]
        mu: Option<Partition>,
        #[arg(long)]
        truncate: Option<usize>,
    },
}

/// Text printed on stdout and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            code: EXIT_PASS,
        }
    }
}

/// Exit code for a failed command.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CapExceeded(_) => EXIT_CAP,
        Error::FrozenBoundary
        | Error::Conflict(_)
        | Error::Disconnected(_)
        | Error::NonDominantHighest(_)
        | Error::Perfectness(_) => EXIT_MISMATCH,
        _ => EXIT_INVALID,
    }
}

/// Parses an inclusive range `a..b`, `a..=b`, or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("range {s:?}: {e}")))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

/// `--cap`, else `CRYSTAL_CAP`, else the library default.
pub fn resolve_cap(flag: Option<usize>, env: Option<&str>) -> Result<usize> {
    let cap = match (flag, env) {
        (Some(c), _) => c,
        (None, Some(v)) => v
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("{CAP_ENV}={v:?}: {e}")))?,
        (None, None) => DEFAULT_NODE_CAP,
    };
    if cap == 0 {
        return Err(Error::Parse("cap must be positive".into()));
    }
    Ok(cap)
}

fn setup_for(n: usize, l: u32, k: usize) -> Result<DemazureSetup> {
    match (k, l) {
        (1, _) => DemazureSetup::row(n, l),
        (_, 1) => DemazureSetup::column(n, k),
        _ => Err(Error::Unsupported(format!(
            "B^{{{k},{l}}}: only k = 1 or l = 1 is implemented"
        ))),
    }
}

fn pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn cmd_graph(
    n: usize,
    l: u32,
    k: usize,
    word: &str,
    truncate: Option<usize>,
    format: Format,
    cap: usize,
) -> Result<Outcome> {
    let setup = setup_for(n, l, k)?;
    let word = Word::parse(word, n)?;
    let big_j = truncate.unwrap_or_else(|| setup.default_truncation(word.len()));
    let graph = demazure_paths(&setup, &word, big_j, cap)?.graph();
    let output = match format {
        Format::Dot => graph.to_dot("demazure"),
        Format::Json => pretty(&graph.to_json()),
        Format::Text => {
            let mut s = String::new();
            for p in graph.nodes() {
                s.push_str(&format!("{p}\n"));
            }
            s
        }
    };
    Ok(Outcome::ok(output))
}

pub fn cmd_character(
    n: usize,
    l: u32,
    k: usize,
    big_l: Option<usize>,
    mu: Option<&Partition>,
    format: Format,
    cap: usize,
) -> Result<Outcome> {
    let expansion = match (big_l, mu) {
        (Some(big_l), None) => homogeneous_character(&setup_for(n, l, k)?, big_l, cap)?,
        (None, Some(mu)) => InhomSetup::new(n, mu)?.character(cap)?,
        _ => {
            return Err(Error::Parse(
                "character needs exactly one of --L and --mu".into(),
            ))
        }
    };
    let output = match format {
        Format::Text => format!("{expansion}\n"),
        _ => pretty(&expansion.to_text_map()),
    };
    Ok(Outcome::ok(output))
}

pub fn cmd_kostka(lambda: &Partition, mu: &Partition, format: Format) -> Result<Outcome> {
    let poly = kostka_foulkes(lambda, mu)?;
    let output = match format {
        Format::Json => pretty(
            &json!({ "lambda": lambda.to_string(), "mu": mu.to_string(), "poly": poly.to_string() }),
        ),
        _ => format!("{poly}\n"),
    };
    Ok(Outcome::ok(output))
}

#[derive(Serialize)]
struct VerifyOutput<T: Serialize> {
    suite: &'static str,
    passed: bool,
    cases: Vec<T>,
}

fn verify_output<T: Serialize>(suite: &'static str, cases: Vec<T>, passed: bool) -> Outcome {
    let code = if passed { EXIT_PASS } else { EXIT_MISMATCH };
    Outcome {
        output: pretty(&VerifyOutput {
            suite,
            passed,
            cases,
        }),
        code,
    }
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_verify(
    suite: Suite,
    n: usize,
    l: u32,
    k: usize,
    steps: Option<&str>,
    big_l: Option<&str>,
    mu: Option<&Partition>,
    truncate: Option<usize>,
    cap: usize,
) -> Result<Outcome> {
    match suite {
        Suite::Iso => {
            let setup = setup_for(n, l, k)?;
            let ks: Vec<usize> = match (steps, big_l) {
                (Some(r), None) => parse_range(r)?.collect(),
                (None, Some(r)) => parse_range(r)?.map(|big_l| big_l * setup.d()).collect(),
                _ => {
                    return Err(Error::Parse(
                        "verify iso needs exactly one of --K and --L".into(),
                    ))
                }
            };
            let cases = ks
                .into_iter()
                .map(|s| verify_iso(&setup, s, truncate, cap))
                .collect::<Result<Vec<_>>>()?;
            let passed = cases.iter().all(|c| c.passed);
            Ok(verify_output("iso", cases, passed))
        }
        Suite::Kostka => {
            if k != 1 {
                return Err(Error::Unsupported("verify kostka is for k = 1".into()));
            }
            let range =
                parse_range(big_l.ok_or_else(|| Error::Parse("verify kostka needs --L".into()))?)?;
            let cases = range
                .map(|big_l| verify_kostka(n, l, big_l, cap))
                .collect::<Result<Vec<_>>>()?;
            let passed = cases.iter().all(|c| c.passed);
            Ok(verify_output("kostka", cases, passed))
        }
        Suite::Inhom => {
            let mu = mu.ok_or_else(|| Error::Parse("verify inhom needs --mu".into()))?;
            let report = verify_inhom(n, mu, cap)?;
            let passed = report.passed;
            Ok(verify_output("inhom", vec![report], passed))
        }
    }
}

/// Runs a parsed command line with the given cap environment value.
pub fn run(cli: &Cli, env_cap: Option<&str>) -> Outcome {
    let result = resolve_cap(cli.cap, env_cap).and_then(|cap| match &cli.command {
        Command::Graph {
            n,
            l,
            k,
            word,
            truncate,
        } => cmd_graph(
            *n,
            *l,
            *k,
            word,
            *truncate,
            cli.format.unwrap_or(Format::Dot),
            cap,
        ),
        Command::Character { n, l, k, big_l, mu } => cmd_character(
            *n,
            *l,
            *k,
            *big_l,
            mu.as_ref(),
            cli.format.unwrap_or(Format::Json),
            cap,
        ),
        Command::Kostka { lambda, mu } => {
            cmd_kostka(lambda, mu, cli.format.unwrap_or(Format::Text))
        }
        Command::Verify {
            suite,
            n,
            l,
            k,
            steps,
            big_l,
            mu,
            truncate,
        } => cmd_verify(
            *suite,
            *n,
            *l,
            *k,
            steps.as_deref(),
            big_l.as_deref(),
            mu.as_ref(),
            *truncate,
            cap,
        ),
    });
    result.unwrap_or_else(|e| Outcome {
        output: format!("error: {e}\n"),
        code: exit_code(&e),
    })
}

/// Parses `args` (program name first) and runs. Usage errors exit with 2.
pub fn run_args<I, T>(args: I, env_cap: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, env_cap),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_PASS
            };
            Outcome {
                output: e.render().to_string(),
                code,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run_args(
            std::iter::once("demazure").chain(args.iter().copied()),
            None,
        )
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..6").unwrap(), 1..=6);
        assert_eq!(parse_range("2..=3").unwrap(), 2..=3);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn caps() {
        assert_eq!(resolve_cap(Some(5), Some("7")).unwrap(), 5);
        assert_eq!(resolve_cap(None, Some("7")).unwrap(), 7);
        assert_eq!(resolve_cap(None, None).unwrap(), DEFAULT_NODE_CAP);
        assert!(resolve_cap(Some(0), None).is_err());
        assert!(resolve_cap(None, Some("lots")).is_err());
    }

    #[test]
    fn graph_sizes() {
        let out = go(&[
            "graph", "--n", "2", "--l", "1", "--word", "0 1 0", "--format", "json",
        ]);
        assert_eq!(out.code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 8);
        let out = go(&["graph", "--n", "2"]);
        assert_eq!(out.output.matches("label=").count(), 1);
        let out = go(&[
            "graph", "--n", "3", "--l", "2", "--word", "0", "--format", "json",
        ]);
        let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn character_json() {
        let out = go(&["character", "--n", "2", "--l", "1", "--L", "3"]);
        assert_eq!(out.code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
        assert_eq!(v, json!({"2,1": "1+q", "3": "q^2"}));
        let out = go(&["character", "--n", "3", "--l", "2", "--k", "2", "--L", "1"]);
        assert_eq!(out.code, EXIT_INVALID);
    }

    #[test]
    fn kostka_text() {
        let out = go(&["kostka", "--lambda", "2,1", "--mu", "1,1,1"]);
        assert_eq!(out.output, "q+q^2\n");
        let out = go(&["kostka", "--lambda", "2,1", "--mu", "1,1"]);
        assert_eq!(out.code, EXIT_INVALID);
    }

    #[test]
    fn verify_codes() {
        assert_eq!(
            go(&["verify", "iso", "--n", "2", "--l", "1", "--K", "1..3"]).code,
            EXIT_PASS
        );
        assert_eq!(
            go(&["verify", "kostka", "--n", "2", "--l", "1", "--L", "3"]).code,
            EXIT_PASS
        );
        assert_eq!(
            go(&["verify", "iso", "--n", "2", "--K", "1..6", "--cap", "3"]).code,
            EXIT_CAP
        );
        assert_eq!(
            go(&["verify", "iso", "--n", "1", "--K", "1"]).code,
            EXIT_INVALID
        );
        assert_eq!(go(&["bogus"]).code, EXIT_INVALID);
    }
}
