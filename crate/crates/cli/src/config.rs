//! Flag definitions and their validation into a typed run configuration.
//!
//! Validation enforces the per-family flag matrix (`asc` takes `--a`,
//! `scaled` takes `--alpha --beta`, `quasi` adds `--lambda`), the `q` guard,
//! and the degree cap, producing one-line diagnostics that name the
//! offending flag. Everything past this point works with constructor-checked
//! types.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qappell::{
    asc_recurrence, build_family, scaled_family, AscParams, Error, PolyFamily, QParam, QuasiParams,
    Rational,
};

/// Largest member degree a single invocation will construct. Exact
/// coefficients grow quickly with the degree; 64 keeps every documented run
/// fast while far exceeding the degrees the checks need.
pub const MAX_DEGREE_CAP: usize = 64;

#[derive(Parser)]
#[command(
    name = "qappell",
    version,
    about = "Generate and verify Al-Salam-Carlitz and quasi-orthogonal q-Appell \
             polynomial families with exact rational arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Construct a polynomial family and print its members
    Gen(TaskArgs),
    /// Run verification checks against a family and report pass/fail
    Verify(VerifyArgs),
    /// Print the moment table mu_0 .. mu_(2N-1) of the related orthogonal family
    Moments(TaskArgs),
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Which check to run
    #[arg(long, value_enum)]
    pub theorem: TheoremFilter,

    #[command(flatten)]
    pub task: TaskArgs,
}

#[derive(Args)]
pub struct TaskArgs {
    /// Family constructor to use
    #[arg(long, value_enum)]
    pub family: FamilyKind,

    /// Parameter a of the asc family (nonzero rational, e.g. 1 or -3/2)
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<Rational>,

    /// Parameter alpha of the scaled and quasi families (nonzero rational)
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,

    /// Parameter beta of the scaled and quasi families (nonzero rational)
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<Rational>,

    /// Connection parameter lambda of the quasi family (nonzero rational)
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<Rational>,

    /// Base q: any rational except 0, 1 and -1
    #[arg(long, allow_hyphen_values = true)]
    pub q: Rational,

    /// Largest member degree N to construct (at most 64)
    #[arg(long)]
    pub max_degree: usize,

    /// Output format
    #[arg(long, value_enum, env = "QAPPELL_FORMAT", default_value = "json")]
    pub format: OutputFormat,

    /// Write the output to FILE instead of stdout
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    #[value(name = "asc")]
    Asc,
    #[value(name = "scaled")]
    Scaled,
    #[value(name = "quasi")]
    Quasi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[value(name = "json")]
    Json,
    #[value(name = "csv")]
    Csv,
    #[value(name = "latex")]
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremFilter {
    #[value(name = "appell")]
    Appell,
    #[value(name = "quasi")]
    Quasi,
    #[value(name = "rec31")]
    Rec31,
    #[value(name = "rieszchihara")]
    RieszChihara,
    #[value(name = "all")]
    All,
}

/// One verification step; `TheoremFilter::All` expands to all four in this
/// order.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Appell,
    Quasi,
    Rec31,
    RieszChihara,
}

impl TheoremFilter {
    pub fn checks(self) -> Vec<Check> {
        match self {
            TheoremFilter::Appell => vec![Check::Appell],
            TheoremFilter::Quasi => vec![Check::Quasi],
            TheoremFilter::Rec31 => vec![Check::Rec31],
            TheoremFilter::RieszChihara => vec![Check::RieszChihara],
            TheoremFilter::All => vec![
                Check::Appell,
                Check::Quasi,
                Check::Rec31,
                Check::RieszChihara,
            ],
        }
    }
}

pub enum Action {
    Gen,
    Verify(TheoremFilter),
    Moments,
}

/// Family choice with constructor-validated parameters.
pub enum FamilySelection {
    Asc(AscParams),
    Scaled {
        alpha: Rational,
        beta: Rational,
        q: QParam,
    },
    Quasi(QuasiParams),
}

impl FamilySelection {
    pub fn q(&self) -> &QParam {
        match self {
            FamilySelection::Asc(params) => params.q(),
            FamilySelection::Scaled { q, .. } => q,
            FamilySelection::Quasi(params) => params.q(),
        }
    }

    /// `(alpha, beta)` of the related orthogonal family; the base family is
    /// the `beta = 1` specialization.
    pub fn related_parameters(&self) -> (Rational, Rational) {
        match self {
            FamilySelection::Asc(params) => (params.a().clone(), Rational::one()),
            FamilySelection::Scaled { alpha, beta, .. } => (alpha.clone(), beta.clone()),
            FamilySelection::Quasi(params) => (params.alpha().clone(), params.beta().clone()),
        }
    }

    /// The connection parameter: lambda for the quasi family, 1 otherwise
    /// (the orthogonal families have no tail, so the verdicts of the checks
    /// that use lambda do not depend on this value).
    pub fn lambda(&self) -> Rational {
        match self {
            FamilySelection::Quasi(params) => params.lambda().clone(),
            _ => Rational::one(),
        }
    }

    /// Quasi parameters matching [`FamilySelection::related_parameters`] and
    /// [`FamilySelection::lambda`].
    pub fn quasi_params(&self) -> QuasiParams {
        match self {
            FamilySelection::Quasi(params) => params.clone(),
            _ => {
                let (alpha, beta) = self.related_parameters();
                QuasiParams::new(alpha, beta, Rational::one(), self.q().clone())
                    .expect("parameters were validated")
            }
        }
    }

    pub fn build(&self, max_degree: usize) -> PolyFamily {
        match self {
            FamilySelection::Asc(params) => asc_recurrence(params, max_degree),
            FamilySelection::Scaled { alpha, beta, q } => {
                scaled_family(alpha, beta, q, max_degree).expect("parameters were validated")
            }
            FamilySelection::Quasi(params) => build_family(params, max_degree),
        }
    }

    pub fn related_family(&self, max_degree: usize) -> PolyFamily {
        let (alpha, beta) = self.related_parameters();
        scaled_family(&alpha, &beta, self.q(), max_degree).expect("parameters were validated")
    }

    /// Member symbol used by the human-facing renderings.
    pub fn symbol(&self) -> &'static str {
        match self {
            FamilySelection::Asc(_) => "U",
            FamilySelection::Scaled { .. } => "P",
            FamilySelection::Quasi(_) => "Q",
        }
    }
}

pub struct RunConfig {
    pub action: Action,
    pub family: FamilySelection,
    pub max_degree: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

fn flag_error(err: Error) -> String {
    match err {
        Error::ZeroParameter(name) => format!("--{name} must be nonzero"),
        Error::InvalidQ(q) => format!("--q must be a rational other than 0, 1 and -1 (got {q})"),
        other => other.to_string(),
    }
}

fn require(flag: &'static str, value: Option<Rational>, family: &str) -> Result<Rational, String> {
    value.ok_or_else(|| format!("--{flag} is required when --family {family}"))
}

fn forbid(flag: &'static str, value: &Option<Rational>, family: &str) -> Result<(), String> {
    if value.is_some() {
        return Err(format!("--{flag} does not apply to --family {family}"));
    }
    Ok(())
}

/// Checks the flag matrix and builds the typed configuration. Every failure
/// is a one-line message naming the flag; callers map it to exit code 2.
pub fn validate(action: Action, task: TaskArgs) -> Result<RunConfig, String> {
    if task.max_degree > MAX_DEGREE_CAP {
        return Err(format!(
            "--max-degree must be at most {MAX_DEGREE_CAP} (got {})",
            task.max_degree
        ));
    }
    if let Action::Verify(filter) = &action {
        let needs_rows = matches!(filter, TheoremFilter::Rec31 | TheoremFilter::All);
        if needs_rows && task.max_degree < 3 {
            return Err(
                "--theorem rec31 needs --max-degree at least 3 to read off the recurrence \
                 constants"
                    .to_string(),
            );
        }
    }

    let q = QParam::new(task.q).map_err(flag_error)?;
    let family = match task.family {
        FamilyKind::Asc => {
            forbid("alpha", &task.alpha, "asc")?;
            forbid("beta", &task.beta, "asc")?;
            forbid("lambda", &task.lambda, "asc")?;
            let a = require("a", task.a, "asc")?;
            FamilySelection::Asc(AscParams::new(a, q).map_err(flag_error)?)
        }
        FamilyKind::Scaled => {
            forbid("a", &task.a, "scaled")?;
            forbid("lambda", &task.lambda, "scaled")?;
            let alpha = require("alpha", task.alpha, "scaled")?;
            let beta = require("beta", task.beta, "scaled")?;
            if alpha.is_zero() {
                return Err(flag_error(Error::ZeroParameter("alpha")));
            }
            if beta.is_zero() {
                return Err(flag_error(Error::ZeroParameter("beta")));
            }
            FamilySelection::Scaled { alpha, beta, q }
        }
        FamilyKind::Quasi => {
            forbid("a", &task.a, "quasi")?;
            let alpha = require("alpha", task.alpha, "quasi")?;
            let beta = require("beta", task.beta, "quasi")?;
            let lambda = require("lambda", task.lambda, "quasi")?;
            FamilySelection::Quasi(QuasiParams::new(alpha, beta, lambda, q).map_err(flag_error)?)
        }
    };

    Ok(RunConfig {
        action,
        family,
        max_degree: task.max_degree,
        format: task.format,
        out: task.out,
    })
}
