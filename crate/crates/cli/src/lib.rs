//! `quiverfin` subcommands as a library so they can be driven from tests.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use quiverfin::algebra::{
    algebra_to_setting, check_or_conditions, finitely_many_orbits, is_distributive, ConditionResult,
};
use quiverfin::classify::{cross_check_suite, SuiteBounds};
use quiverfin::format::{
    parse_algebra, parse_euclidean, parse_setting, render_euclidean, render_subroot, render_witness,
};
use quiverfin::witness::SubrootWitness;
use quiverfin::{
    classify, count_orbits, find_euclidean_witness, find_subroot, is_minimal_infinite, Budget, Error, Mode,
    QuiverSetting, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_INFINITE: i32 = 10;

#[derive(Parser, Debug)]
#[command(name = "quiverfin", version, about = "Finite/infinite classification of quiver settings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print FINITE or INFINITE with a witness (exit 0 / 10).
    Classify {
        file: PathBuf,
        /// Also run the Tits-form route and re-validate both witnesses.
        #[arg(long)]
        checked: bool,
    },
    /// Print a Euclidean subquiver whose radical vector fits under d, or NONE.
    Witness { file: PathBuf },
    /// Print a nonzero d' <= d with q(d') <= 0, or NONE.
    Subroot { file: PathBuf },
    /// Print the Tits form q(d).
    Tits { file: PathBuf },
    /// Print MINIMAL-INFINITE, NOT-MINIMAL or FINITE.
    Minimal { file: PathBuf },
    /// Decide whether a radical-square-zero algebra has finitely many orbits.
    Algebra {
        file: PathBuf,
        #[arg(long)]
        or_check: bool,
        #[arg(long)]
        distributive: bool,
    },
    /// Count GL(d)-orbits over the prime field F_P.
    Orbits {
        file: PathBuf,
        #[arg(long = "q", value_name = "P")]
        q: u64,
        /// Largest representation space to sweep.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Compare both decision routes on every small setting (exit 1 on mismatch).
    Selfcheck {
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        #[arg(long, default_value_t = 2)]
        max_dim: u64,
    },
    /// Re-check a witness report against a setting file (exit 1 if rejected).
    VerifyWitness { file: PathBuf, witness: PathBuf },
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }
}

/// Runs one command line (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.use_stderr() {
                true => Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: text },
                false => Outcome::ok(EXIT_OK, text),
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<QuiverSetting, Error> {
    parse_setting(&read(path)?).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse { line, message: format!("{}: {message}", path.display()) },
        other => other,
    })
}

fn verdict_report(setting: &QuiverSetting, verdict: &Verdict) -> (i32, String) {
    match verdict {
        Verdict::Finite => (EXIT_OK, "FINITE\n".into()),
        Verdict::Infinite(w) => (EXIT_INFINITE, format!("INFINITE\n{}", render_witness(setting, w))),
    }
}

fn condition_line(out: &mut String, name: &str, c: &ConditionResult) {
    if c.passed {
        let _ = writeln!(out, "{name} pass");
    }
    for v in &c.violations {
        let _ = writeln!(out, "{name} FAIL {v}");
    }
}

fn execute(command: Command) -> Result<Outcome, Error> {
    let budget = Budget::from_env()?;
    let out = match command {
        Command::Classify { file, checked } => {
            let s = load(&file)?;
            let mode = if checked { Mode::Checked } else { Mode::Fast };
            let (code, text) = verdict_report(&s, &classify(&s, mode, &budget)?);
            Outcome::ok(code, text)
        }
        Command::Witness { file } => {
            let s = load(&file)?;
            let text = match find_euclidean_witness(&s, &budget)? {
                Some(w) => render_euclidean(&s, &w),
                None => "NONE\n".into(),
            };
            Outcome::ok(EXIT_OK, text)
        }
        Command::Subroot { file } => {
            let s = load(&file)?;
            let text = match find_subroot(&s, &budget)? {
                Some(v) => {
                    let q = s.quiver().tits_form(&v.to_signed())?;
                    render_subroot(&s, &SubrootWitness { vector: v, q })
                }
                None => "NONE\n".into(),
            };
            Outcome::ok(EXIT_OK, text)
        }
        Command::Tits { file } => Outcome::ok(EXIT_OK, format!("{}\n", load(&file)?.tits_form()?)),
        Command::Minimal { file } => {
            let s = load(&file)?;
            let text = if !classify(&s, Mode::Fast, &budget)?.is_infinite() {
                "FINITE"
            } else if is_minimal_infinite(&s, Mode::Fast, &budget)? {
                "MINIMAL-INFINITE"
            } else {
                "NOT-MINIMAL"
            };
            Outcome::ok(EXIT_OK, format!("{text}\n"))
        }
        Command::Algebra { file, or_check, distributive } => {
            let spec = parse_algebra(&read(&file)?)?;
            let bs = algebra_to_setting(&spec);
            let verdict = finitely_many_orbits(&spec, Mode::Fast, &budget)?;
            let (code, mut text) = verdict_report(bs.setting(), &verdict);
            if or_check {
                let r = check_or_conditions(&bs);
                condition_line(&mut text, "c1", &r.c1);
                condition_line(&mut text, "c2", &r.c2);
                condition_line(&mut text, "c3", &r.c3);
            }
            if distributive {
                let _ = writeln!(text, "distributive {}", if is_distributive(&spec) { "yes" } else { "no" });
            }
            Outcome::ok(code, text)
        }
        Command::Orbits { file, q, budget: points } => {
            let s = load(&file)?;
            let b = Budget { orbit_points: points.unwrap_or(budget.orbit_points), ..budget };
            Outcome::ok(EXIT_OK, format!("{}\n", count_orbits(&s, q, &b)?))
        }
        Command::Selfcheck { max_vertices, max_dim } => {
            let report = cross_check_suite(&SuiteBounds::new(max_vertices, max_dim), &budget)?;
            let mut text = format!(
                "settings {} finite {} infinite {} mismatches {}\n",
                report.settings,
                report.finite,
                report.infinite,
                report.mismatches.len()
            );
            for m in &report.mismatches {
                let _ =
                    writeln!(text, "MISMATCH {} d={:?}: {}", m.setting.quiver(), m.setting.dim().entries(), m.detail);
            }
            Outcome::ok(if report.is_clean() { EXIT_OK } else { EXIT_MISMATCH }, text)
        }
        Command::VerifyWitness { file, witness } => {
            let s = load(&file)?;
            let checked = parse_euclidean(&s, &read(&witness)?).and_then(|w| w.validate(&s));
            match checked {
                Ok(()) => Outcome::ok(EXIT_OK, "VALID\n".into()),
                Err(e) => Outcome::ok(EXIT_MISMATCH, format!("INVALID {e}\n")),
            }
        }
    };
    Ok(out)
}
