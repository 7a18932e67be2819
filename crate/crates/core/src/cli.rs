//! Command-line front end. Every command prints JSON; experiment commands
//! print JSON lines (trials, then a summary line).
//!
//! Exit codes: 0 success, 2 usage or configuration error, 3 I/O error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::alphabet::{Alphabet, Text, Word};
use crate::dfree::{run_df, run_df_special, Constants, DfEstimate};
use crate::distribution::{parse_distribution, rational_to_f64, ExactDistribution};
use crate::error::{Error, Result};
use crate::exact::{copy_count, exact_weighted_distance, uniform_distance};
use crate::harness::{concentration_experiment, error_sweep, event_experiment, Ensemble, Estimator, TextKind, WeightKind};
use crate::sample::{UniformOracle, WeightedOracle};
use crate::uniform::{estimate_uniform, UniformEstimate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "subfree", version, about = "Distance to subsequence-freeness: exact values and sample-based estimates")]
struct Cli {
    /// Master seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Off-spec: multiply the distribution-free constant c_z by X.
    #[arg(long, global = true, value_name = "X")]
    relaxed_constants: Option<f64>,
    /// Record per-trial wall time (makes output machine-dependent).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Text file: whitespace-separated tokens (or characters with --chars).
    #[arg(long, value_name = "FILE")]
    text: PathBuf,
    /// Word file, same format as the text.
    #[arg(long, value_name = "FILE")]
    word: PathBuf,
    /// Treat every non-whitespace character as one symbol.
    #[arg(long)]
    chars: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact distance (uniform, or weighted with --dist).
    Exact {
        #[command(flatten)]
        input: Input,
        /// Distribution file: one weight per line, decimal or a/b.
        #[arg(long, value_name = "FILE")]
        dist: Option<PathBuf>,
    },
    /// Sample-based estimate under the uniform distribution.
    EstimateUniform {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        delta: f64,
    },
    /// Distribution-free estimate (samples drawn from --dist, uniform by default).
    EstimateDf {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        dist: Option<PathBuf>,
        #[arg(long)]
        delta: f64,
    },
    /// Distribution-free estimate for words without equal neighbours.
    EstimateDfWc {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        dist: Option<PathBuf>,
        #[arg(long)]
        delta: f64,
    },
    /// Success rate of an estimator over generated instances.
    Sweep {
        #[arg(long, value_enum)]
        estimator: Estimator,
        #[arg(long, value_enum, default_value = "random-text")]
        text_kind: TextKind,
        #[arg(long, value_enum, default_value = "uniform")]
        weights: WeightKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        /// Comma-separated list.
        #[arg(long, value_delimiter = ',', required = true)]
        deltas: Vec<f64>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
    },
    /// Concentration of R on the two hard ensembles.
    Lowerbound {
        #[arg(long)]
        kd: usize,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
    },
    /// Frequencies of the good-sample events against a known distribution.
    DiagnoseEvents {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        dist: Option<PathBuf>,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 20)]
        trials: u64,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<(Alphabet, Word, Text)> {
    let (w_src, t_src) = (read(&input.word)?, read(&input.text)?);
    let mut alphabet = Alphabet::new();
    let mut intern = |s: &str| {
        if input.chars {
            alphabet.intern_chars(&s.split_whitespace().collect::<String>())
        } else {
            alphabet.intern_tokens(s)
        }
    };
    let w = intern(&w_src);
    let t = intern(&t_src);
    Ok((alphabet, Word::new(w)?, Text::new(t)?))
}

fn load_dist(path: Option<&PathBuf>, n: usize) -> Result<ExactDistribution> {
    let p = match path {
        Some(path) => parse_distribution(&read(path)?)?,
        None => ExactDistribution::uniform(n),
    };
    if p.len() != n {
        return Err(Error::InvalidInput(format!("text has {n} positions but distribution has {}", p.len())));
    }
    Ok(p)
}

#[derive(Serialize)]
struct ExactOut {
    n: usize,
    k: usize,
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    r: Option<u64>,
    delta: String,
    delta_float: f64,
}

#[derive(Serialize)]
struct UniformOut {
    n: usize,
    k: usize,
    delta: f64,
    seed: u64,
    #[serde(flatten)]
    estimate: UniformEstimate,
}

#[derive(Serialize)]
struct DfOut {
    n: usize,
    k: usize,
    delta: f64,
    seed: u64,
    standard_constants: bool,
    #[serde(flatten)]
    estimate: DfEstimate,
}

fn line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("output serialises");
    s.push('\n');
    s
}

fn df(input: &Input, dist: Option<&PathBuf>, delta: f64, seed: u64, constants: &Constants, special: bool) -> Result<String> {
    let (_, w, t) = load(input)?;
    let p = load_dist(dist, t.len())?;
    let oracle = WeightedOracle::from_exact(&t, &p)?;
    let run = if special {
        run_df_special(&oracle, &w, delta, seed, constants)?
    } else {
        run_df(&oracle, &w, delta, seed, constants)?
    };
    Ok(line(&DfOut {
        n: t.len(),
        k: w.len(),
        delta,
        seed,
        standard_constants: constants.is_standard(),
        estimate: run.estimate,
    }))
}

fn execute(cli: Cli) -> Result<String> {
    let constants = match cli.relaxed_constants {
        Some(x) => Constants::relaxed(x)?,
        None => Constants::standard(),
    };
    let seed = cli.seed;
    match cli.command {
        Command::Exact { input, dist } => {
            let (_, w, t) = load(&input)?;
            let (r, d) = match dist {
                None => (Some(copy_count(&t, &w)), uniform_distance(&t, &w)?),
                Some(path) => {
                    let p = load_dist(Some(&path), t.len())?;
                    (None, exact_weighted_distance(&t, &w, &p)?)
                }
            };
            Ok(line(&ExactOut {
                n: t.len(),
                k: w.len(),
                r,
                delta: format!("{}/{}", d.numer(), d.denom()),
                delta_float: rational_to_f64(&d),
            }))
        }
        Command::EstimateUniform { input, delta } => {
            let (_, w, t) = load(&input)?;
            let estimate = estimate_uniform(&UniformOracle::new(&t), &w, delta, seed)?;
            Ok(line(&UniformOut {
                n: t.len(),
                k: w.len(),
                delta,
                seed,
                estimate,
            }))
        }
        Command::EstimateDf { input, dist, delta } => df(&input, dist.as_ref(), delta, seed, &constants, false),
        Command::EstimateDfWc { input, dist, delta } => df(&input, dist.as_ref(), delta, seed, &constants, true),
        Command::Sweep {
            estimator,
            text_kind,
            weights,
            n,
            k,
            alphabet,
            deltas,
            trials,
        } => {
            let ensemble = Ensemble {
                text: text_kind,
                weights,
                n,
                k,
                alphabet,
            };
            let report = error_sweep(estimator, &ensemble, &deltas, trials, seed, &constants, cli.timing)?;
            Ok(report.to_json_lines())
        }
        Command::Lowerbound { kd, delta, n, trials } => {
            Ok(concentration_experiment(kd, delta, n, trials, seed)?.to_json_lines())
        }
        Command::DiagnoseEvents {
            input,
            dist,
            delta,
            trials,
        } => {
            let (_, w, t) = load(&input)?;
            let p = load_dist(dist.as_ref(), t.len())?;
            Ok(event_experiment(&t, &w, &p, delta, trials, seed, &constants)?.to_json_lines())
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let out = cli.out.clone();
    let result = execute(cli).and_then(|text| match out {
        Some(path) => fs::write(&path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::Io(e.to_string())),
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) => EXIT_IO,
                _ => EXIT_CONFIG,
            }
        }
    }
}
