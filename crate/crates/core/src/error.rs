use thiserror::Error;

use crate::exactnum::Rational;
use crate::qpoly::QPoly;

/// Errors reported by constructors and checkers across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The base q would make a q-number or a q-shifted factorial degenerate.
    #[error("q must be a rational other than 0, 1 and -1 (got {0})")]
    InvalidQ(Rational),

    /// A family or functional parameter that must be nonzero was zero.
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),

    /// Input text is not an integer or a `p/q` fraction in lowest syntax.
    #[error(
        "cannot parse {0:?} as a rational (expected an integer or p/q with a nonzero denominator)"
    )]
    ParseRational(String),

    /// A family operation was asked of a family with no members.
    #[error("family has no members; the degree-0 member is required")]
    EmptyFamily,

    /// Member `index` does not have the degree its position promises.
    #[error(
        "family member {index} must have degree {expected}, found {}",
        degree_str(found)
    )]
    MalformedFamily {
        index: usize,
        expected: usize,
        found: Option<usize>,
    },

    /// A single polynomial argument had the wrong degree.
    #[error(
        "expected a polynomial of degree {expected}, found {}",
        degree_str(found)
    )]
    DegreeMismatch {
        expected: usize,
        found: Option<usize>,
    },

    /// A family or coefficient table is too short for the requested range.
    #[error("{what} has {have} entries but {needed} are required")]
    InsufficientLength {
        what: &'static str,
        needed: usize,
        have: usize,
    },

    /// The polynomial at `index` is not a combination of the two related
    /// members of degrees `index` and `index - 1`.
    #[error("member {index} is not in the two-term span of the related members of degrees {index} and {} (remainder {remainder})", index.saturating_sub(1))]
    NotInTwoTermSpan { index: usize, remainder: QPoly },

    /// The moment table does not reach the degree a functional needs.
    #[error(
        "moment functional covers degrees up to {available} but degree {needed} was requested"
    )]
    MomentOverflow { needed: usize, available: usize },

    /// A moment table was offered whose mu_0 is not 1.
    #[error(
        "moment functional must be normalized with mu_0 = 1 (got {})",
        moment_str(found)
    )]
    UnnormalizedMoments { found: Option<Rational> },

    /// The family does not satisfy the extended recurrence at row `index`.
    #[error("family does not satisfy the extended recurrence at row {index}: residual {residual}")]
    RecurrenceMismatch { index: usize, residual: QPoly },
}

fn degree_str(found: &Option<usize>) -> String {
    match found {
        Some(d) => format!("degree {d}"),
        None => "the zero polynomial".to_string(),
    }
}

fn moment_str(found: &Option<Rational>) -> String {
    match found {
        Some(m) => m.to_string(),
        None => "an empty table".to_string(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
