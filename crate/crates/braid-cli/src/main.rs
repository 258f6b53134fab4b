//! Command-line front end: classification, conjugacy solving, ultra summit
//! set counting, and the benchmark harness.
//!
//! Exit codes: 0 on success, 1 when the inputs are not conjugate (or a
//! solve target does not match), 2 on usage errors, 3 on internal
//! verification failures.

mod config;

use anyhow::Context;
use braid_core::error::Error as CoreError;
use braid_core::garside::classical::{ultra_summit_set, UssBudget};
use braid_core::harness::{bench_run, write_csv, BenchConfig};
use braid_core::periodic::{classify, PeriodicClass};
use braid_core::solver::{
    solve_conjugacy, solve_delta_power, solve_epsilon_power, ConjugacyOutcome,
};
use braid_core::uss::{enumerate_uss, RotationFamily};
use braid_core::word::ArtinWord;
use clap::{Parser, Subcommand};
use std::process::ExitCode;
use std::time::Duration;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "braid",
    version,
    about = "Conjugacy tools for periodic braids",
    long_about = "Braid words are whitespace-separated signed integers: `1 -2 1` \
                  means s1 s2^-1 s1 in Artin generators."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a braid is periodic and name its rotation class.
    Classify {
        /// Number of strands.
        #[arg(long)]
        n: usize,
        /// Braid word, e.g. "2 1".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Find a conjugator carrying the braid to delta^k or epsilon^k.
    Solve {
        #[arg(long)]
        n: usize,
        /// Target class: delta^k or epsilon^k (k defaults to 1).
        #[arg(long)]
        target: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Decide conjugacy of two periodic braids and print a conjugator.
    Conjugate {
        #[arg(long)]
        n: usize,
        /// First braid word.
        #[arg(allow_hyphen_values = true)]
        wx: String,
        /// Second braid word.
        #[arg(allow_hyphen_values = true)]
        wy: String,
    },
    /// Count (and optionally list) the ultra summit set of delta or epsilon.
    #[command(name = "uss-count")]
    UssCount {
        /// Number of strands.
        n: usize,
        /// Family: delta or epsilon.
        family: String,
        /// Also print every member as a one-line permutation.
        #[arg(long)]
        full: bool,
        /// Cross-check the count against the orbit-closure engine
        /// (slow; desk scale only).
        #[arg(long)]
        closure: bool,
    },
    /// Run the timing harness over a parameter grid and emit CSV.
    Bench {
        /// Optional key=value config file; flags override it.
        #[arg(long)]
        config: Option<String>,
        /// Strand counts, comma separated (e.g. 5,7,10).
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        /// Target powers, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        k: Vec<i64>,
        /// Number of random simple factors per instance.
        #[arg(long)]
        c: Option<usize>,
        /// Instances per sample.
        #[arg(long)]
        samples: Option<usize>,
        /// Base seed for the deterministic generator.
        #[arg(long)]
        seed: Option<u64>,
        /// Per-instance time budget in milliseconds.
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Disable timing: statuses ignore the clock and the CSV is
        /// byte-identical across runs.
        #[arg(long)]
        no_time: bool,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
}

fn parse_word(text: &str, n: usize) -> Result<ArtinWord, ExitCode> {
    ArtinWord::parse(text, n).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn parse_target(text: &str) -> Option<PeriodicClass> {
    let (family, power) = match text.split_once('^') {
        Some((f, p)) => (f, p.parse::<i64>().ok()?),
        None => (text, 1),
    };
    match family {
        "delta" => Some(PeriodicClass::DeltaPower(power)),
        "epsilon" => Some(PeriodicClass::EpsilonPower(power)),
        _ => None,
    }
}

fn run_classify(n: usize, word: &str) -> Result<ExitCode, ExitCode> {
    let w = parse_word(word, n)?;
    println!("{}", classify(&w));
    Ok(ExitCode::from(EXIT_OK))
}

fn run_solve(n: usize, target: &str, word: &str) -> Result<ExitCode, ExitCode> {
    let w = parse_word(word, n)?;
    let Some(target_class) = parse_target(target) else {
        eprintln!("error: target must be delta^k or epsilon^k, got `{target}`");
        return Err(ExitCode::from(EXIT_USAGE));
    };
    // Compare conjugacy classes through the classifier so that central
    // targets are recognized under either name.
    let target_word = target_class
        .target_word(n)
        .expect("periodic classes have target words");
    if classify(&w) != classify(&target_word) {
        println!("FAIL");
        return Ok(ExitCode::from(EXIT_FAIL));
    }
    let solved = match target_class {
        PeriodicClass::DeltaPower(k) => solve_delta_power(&w, k),
        PeriodicClass::EpsilonPower(k) => solve_epsilon_power(&w, k),
        PeriodicClass::NonPeriodic => unreachable!("parse_target"),
    };
    match solved {
        Ok(cert) => {
            println!("{}", cert.conjugator);
            println!("VERIFIED");
            Ok(ExitCode::from(EXIT_OK))
        }
        Err(CoreError::VerificationFailed { what }) => {
            eprintln!("error: {what}");
            Err(ExitCode::from(EXIT_INTERNAL))
        }
        Err(e) => {
            eprintln!("error: {e}");
            println!("FAIL");
            Ok(ExitCode::from(EXIT_FAIL))
        }
    }
}

fn run_conjugate(n: usize, wx: &str, wy: &str) -> Result<ExitCode, ExitCode> {
    let x = parse_word(wx, n)?;
    let y = parse_word(wy, n)?;
    match solve_conjugacy(&x, &y) {
        Ok(ConjugacyOutcome::Conjugate(cert)) => {
            println!("{}", cert.conjugator);
            Ok(ExitCode::from(EXIT_OK))
        }
        Ok(ConjugacyOutcome::Fail(reason)) => {
            eprintln!("not conjugate: {reason}");
            println!("FAIL");
            Ok(ExitCode::from(EXIT_FAIL))
        }
        Err(CoreError::VerificationFailed { what }) => {
            eprintln!("error: {what}");
            Err(ExitCode::from(EXIT_INTERNAL))
        }
        Err(e) => {
            eprintln!("error: {e}");
            Err(ExitCode::from(EXIT_USAGE))
        }
    }
}

fn run_uss_count(n: usize, family: &str, full: bool, closure: bool) -> Result<ExitCode, ExitCode> {
    let family: RotationFamily = family.parse().map_err(|_| {
        eprintln!("error: family must be `delta` or `epsilon`");
        ExitCode::from(EXIT_USAGE)
    })?;
    let members = enumerate_uss(n, family).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE)
    })?;
    println!("{}", members.len());
    if full {
        for m in &members {
            println!("{}", m.permutation());
        }
    }
    if closure {
        let word = match family {
            RotationFamily::Delta => ArtinWord::delta(n),
            RotationFamily::Epsilon => ArtinWord::epsilon(n),
        };
        let uss = ultra_summit_set(&word, &UssBudget::default()).map_err(|e| {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        })?;
        if uss.len() != members.len() {
            eprintln!(
                "error: closure found {} members, enumeration {}",
                uss.len(),
                members.len()
            );
            return Err(ExitCode::from(EXIT_INTERNAL));
        }
        println!("closure agrees");
    }
    Ok(ExitCode::from(EXIT_OK))
}

#[allow(clippy::too_many_arguments)]
fn run_bench(
    config: Option<String>,
    n: Vec<usize>,
    k: Vec<i64>,
    c: Option<usize>,
    samples: Option<usize>,
    seed: Option<u64>,
    budget_ms: Option<u64>,
    no_time: bool,
    out: Option<String>,
) -> anyhow::Result<ExitCode> {
    let mut grid = config::BenchGrid::default();
    if let Some(path) = config {
        let text = std::fs::read_to_string(&path)
            .with_context(|| format!("reading config file {path}"))?;
        grid.apply_config(&text)?;
    }
    if !n.is_empty() {
        grid.n = n;
    }
    if !k.is_empty() {
        grid.k = k;
    }
    if let Some(c) = c {
        grid.c = c;
    }
    if let Some(s) = samples {
        grid.samples = s;
    }
    if let Some(s) = seed {
        grid.seed = s;
    }
    if let Some(b) = budget_ms {
        grid.budget_ms = Some(b);
    }
    if no_time {
        grid.budget_ms = None;
    }

    let mut records = Vec::new();
    for &n in &grid.n {
        if n < 3 {
            anyhow::bail!("bench needs n >= 3, got {n}");
        }
        for &k in &grid.k {
            let cfg = BenchConfig {
                n,
                k,
                c: grid.c,
                samples: grid.samples,
                seed: grid.seed,
                budget: grid.budget_ms.map(Duration::from_millis),
                ..BenchConfig::default()
            };
            records.extend(bench_run(&cfg));
        }
    }
    let csv = write_csv(&records);
    match out {
        Some(path) => std::fs::write(&path, csv).with_context(|| format!("writing {path}"))?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::from(EXIT_OK))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { n, word } => run_classify(n, &word),
        Command::Solve { n, target, word } => run_solve(n, &target, &word),
        Command::Conjugate { n, wx, wy } => run_conjugate(n, &wx, &wy),
        Command::UssCount {
            n,
            family,
            full,
            closure,
        } => run_uss_count(n, &family, full, closure),
        Command::Bench {
            config,
            n,
            k,
            c,
            samples,
            seed,
            budget_ms,
            no_time,
            out,
        } => {
            return match run_bench(config, n, k, c, samples, seed, budget_ms, no_time, out) {
                Ok(code) => code,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(EXIT_USAGE)
                }
            };
        }
    };
    match result {
        Ok(code) => code,
        Err(code) => code,
    }
}
