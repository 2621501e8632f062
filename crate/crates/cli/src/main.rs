//! `qappell`: generate Al-Salam-Carlitz and quasi-orthogonal q-Appell
//! families and verify their identities with exact rational arithmetic.
//!
//! Exit codes: 0 when everything passes, 1 when a verification check fails,
//! 2 for usage or validation problems. The verdict depends only on the
//! report contents, never on the output format.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use qappell::{
    appell_report, connection_report, moments_from_recurrence, quasi_report, recurrence_report,
    ttrr_coeffs, MomentFunctional, Rational, VerifyReport,
};

mod config;
mod output;

use config::{validate, Action, Check, Cli, Command, FamilySelection, RunConfig};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => err.exit(),
    };
    let outcome = match cli.command {
        Command::Gen(task) => validate(Action::Gen, task).and_then(run),
        Command::Verify(args) => validate(Action::Verify(args.theorem), args.task).and_then(run),
        Command::Moments(task) => validate(Action::Moments, task).and_then(run),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            fs::write(path, text).map_err(|err| format!("cannot write {}: {err}", path.display()))
        }
    }
}

/// Moment table of the related orthogonal family, long enough for every
/// `L[x^m Q_n]` with m < n <= max_degree.
fn functional_for(family: &FamilySelection, max_degree: usize) -> MomentFunctional {
    let (alpha, beta) = family.related_parameters();
    let tables = ttrr_coeffs(
        &alpha,
        &beta,
        family.q(),
        (2 * max_degree).saturating_sub(2),
    )
    .expect("parameters were validated");
    moments_from_recurrence(&tables)
}

/// Executes a validated configuration. `Ok(false)` means a verification
/// check failed (exit code 1); `Err` is a diagnostic (exit code 2).
fn run(config: RunConfig) -> Result<bool, String> {
    match config.action {
        Action::Gen => {
            let family = config.family.build(config.max_degree);
            let text = output::render_family(&family, config.family.symbol(), config.format)?;
            emit(&text, &config.out)?;
            Ok(true)
        }
        Action::Moments => {
            let functional = functional_for(&config.family, config.max_degree);
            let keep = (2 * config.max_degree).max(1);
            let moments: Vec<Rational> = functional.moments()[..keep].to_vec();
            let provenance = config.family.build(0).provenance().clone();
            let text = output::render_moments(&provenance, &moments, config.format)?;
            emit(&text, &config.out)?;
            Ok(true)
        }
        Action::Verify(filter) => {
            let family = config.family.build(config.max_degree);
            let q = config.family.q();
            let mut reports: Vec<VerifyReport> = Vec::new();
            for check in filter.checks() {
                let report = match check {
                    Check::Appell => appell_report(&family, q),
                    Check::Quasi => {
                        let functional = functional_for(&config.family, config.max_degree);
                        quasi_report(&family, &functional)
                    }
                    Check::Rec31 => recurrence_report(&family, &config.family.lambda(), q),
                    Check::RieszChihara => {
                        let related = config.family.related_family(config.max_degree);
                        connection_report(&family, &related, &config.family.quasi_params())
                    }
                }
                .map_err(|err| err.to_string())?;
                reports.push(report);
            }
            let all_pass = reports.iter().all(|report| report.pass);
            let text = output::render_reports(&reports, config.format)?;
            emit(&text, &config.out)?;
            Ok(all_pass)
        }
    }
}
