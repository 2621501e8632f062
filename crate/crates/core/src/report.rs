//! Verification reports in the wire format shared by the CLI and tests.
//!
//! Every check is summarized as a [`VerifyReport`]:
//! `{"theorem": ..., "params": ..., "pass": ..., "first_failure": ...}`.
//! The `theorem` tag is one of `"appell"`, `"quasi"`, `"3.1"` (the extended
//! recurrence) and `"3.2"` (the two-term connection); the last two tags are
//! fixed identifiers of the output contract. `params` carries the
//! provenance of the family that was checked, so a report is reproducible
//! on its own.

use serde::{Deserialize, Serialize};

use crate::alsalamcarlitz::{PolyFamily, Provenance};
use crate::appell::check_appell;
use crate::error::{Error, Result};
use crate::exactnum::{qnum, QParam, Rational};
use crate::qpoly::QPoly;
use crate::quasi::{
    check_quasi_orthogonality, extract_recurrence_params, reconstruct_related_family,
    riesz_decompose, verify_extended_recurrence, MomentFunctional, QuasiParams,
};

/// Which check a report describes. Serialized as `"appell"`, `"quasi"`,
/// `"3.1"` or `"3.2"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremLabel {
    #[serde(rename = "appell")]
    Appell,
    #[serde(rename = "quasi")]
    Quasi,
    #[serde(rename = "3.1")]
    ExtendedRecurrence,
    #[serde(rename = "3.2")]
    Connection,
}

impl TheoremLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremLabel::Appell => "appell",
            TheoremLabel::Quasi => "quasi",
            TheoremLabel::ExtendedRecurrence => "3.1",
            TheoremLabel::Connection => "3.2",
        }
    }
}

/// Location and witness of the first failing step of a check. Fields that
/// do not apply to a given check are omitted from the JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, Default)]
pub struct FailureDetail {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<QPoly>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

/// One verification outcome. `first_failure` is always present in the JSON,
/// `null` on a pass.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: TheoremLabel,
    pub params: Provenance,
    pub pass: bool,
    pub first_failure: Option<FailureDetail>,
}

impl VerifyReport {
    fn passing(theorem: TheoremLabel, family: &PolyFamily) -> Self {
        VerifyReport {
            theorem,
            params: family.provenance().clone(),
            pass: true,
            first_failure: None,
        }
    }

    fn failing(theorem: TheoremLabel, family: &PolyFamily, failure: FailureDetail) -> Self {
        VerifyReport {
            theorem,
            params: family.provenance().clone(),
            pass: false,
            first_failure: Some(failure),
        }
    }
}

/// Runs the q-Appell check `D_q P_n = [n]_q P_{n-1}` over the family.
pub fn appell_report(family: &PolyFamily, q: &QParam) -> Result<VerifyReport> {
    let outcome = check_appell(family, q)?;
    Ok(match outcome.defect {
        None => VerifyReport::passing(TheoremLabel::Appell, family),
        Some(defect) => VerifyReport::failing(
            TheoremLabel::Appell,
            family,
            FailureDetail {
                n: Some(defect.n),
                residual: Some(defect.residual),
                detail: Some("hahn derivative does not step down to the previous member".into()),
                ..FailureDetail::default()
            },
        ),
    })
}

/// Runs the quasi-orthogonality clauses against an exact moment table.
pub fn quasi_report(family: &PolyFamily, functional: &MomentFunctional) -> Result<VerifyReport> {
    let outcome = check_quasi_orthogonality(family, functional)?;
    Ok(match outcome.defect {
        None => VerifyReport::passing(TheoremLabel::Quasi, family),
        Some(defect) => {
            let expectation = if defect.expected_zero {
                "expected zero"
            } else {
                "expected nonzero"
            };
            VerifyReport::failing(
                TheoremLabel::Quasi,
                family,
                FailureDetail {
                    n: Some(defect.n),
                    m: Some(defect.m),
                    value: Some(defect.value),
                    detail: Some(format!("L[x^m Q_n] {expectation}")),
                    ..FailureDetail::default()
                },
            )
        }
    })
}

/// Extracts `(b, c, d2)` from the first rows and replays the extended
/// recurrence over every row the family can support.
///
/// A row that does not close is a failing report, not an error; structural
/// problems (too few members, wrong degrees, zero lambda) stay errors.
pub fn recurrence_report(
    family: &PolyFamily,
    lambda: &Rational,
    q: &QParam,
) -> Result<VerifyReport> {
    let params = match extract_recurrence_params(family, lambda, q) {
        Ok(params) => params,
        Err(Error::RecurrenceMismatch { index, residual }) => {
            return Ok(VerifyReport::failing(
                TheoremLabel::ExtendedRecurrence,
                family,
                FailureDetail {
                    n: Some(index),
                    residual: Some(residual),
                    detail: Some("row does not close during coefficient extraction".into()),
                    ..FailureDetail::default()
                },
            ));
        }
        Err(other) => return Err(other),
    };
    let max_row = family.max_index().expect("validated during extraction") - 1;
    match verify_extended_recurrence(family, &params, q, max_row) {
        Ok(()) => Ok(VerifyReport::passing(
            TheoremLabel::ExtendedRecurrence,
            family,
        )),
        Err(Error::RecurrenceMismatch { index, residual }) => Ok(VerifyReport::failing(
            TheoremLabel::ExtendedRecurrence,
            family,
            FailureDetail {
                n: Some(index),
                residual: Some(residual),
                detail: Some(format!(
                    "row does not close for extracted b={}, c={}, d2={}",
                    params.b, params.c, params.d2
                )),
                ..FailureDetail::default()
            },
        )),
        Err(other) => Err(other),
    }
}

/// Checks the two-term connection between a quasi-orthogonal family and its
/// related orthogonal family:
///
/// - every `Q_n` decomposes as `1 * P_n - ([n]_q / lambda) * P_{n-1}`
/// - resumming the members reconstructs `P_n` exactly
pub fn connection_report(
    family: &PolyFamily,
    related: &PolyFamily,
    params: &QuasiParams,
) -> Result<VerifyReport> {
    family.validate_degrees()?;
    related.validate_degrees()?;
    let max = family
        .max_index()
        .expect("validated family is nonempty")
        .min(related.max_index().expect("validated family is nonempty"));

    for n in 1..=max {
        let pair = match riesz_decompose(family.member(n), related) {
            Ok(pair) => pair,
            Err(Error::NotInTwoTermSpan { index, remainder }) => {
                return Ok(VerifyReport::failing(
                    TheoremLabel::Connection,
                    family,
                    FailureDetail {
                        n: Some(index),
                        residual: Some(remainder),
                        detail: Some("member is not in the two-term span".into()),
                        ..FailureDetail::default()
                    },
                ));
            }
            Err(other) => return Err(other),
        };
        let expected = (Rational::one(), -(qnum(n, params.q()) / params.lambda()));
        if pair != expected {
            return Ok(VerifyReport::failing(
                TheoremLabel::Connection,
                family,
                FailureDetail {
                    n: Some(n),
                    detail: Some(format!(
                        "riesz pair ({}, {}) differs from expected ({}, {})",
                        pair.0, pair.1, expected.0, expected.1
                    )),
                    ..FailureDetail::default()
                },
            ));
        }
    }

    let rebuilt = reconstruct_related_family(family, params)?;
    for n in 0..=max {
        let residual = rebuilt.member(n) - related.member(n);
        if !residual.is_zero() {
            return Ok(VerifyReport::failing(
                TheoremLabel::Connection,
                family,
                FailureDetail {
                    n: Some(n),
                    residual: Some(residual),
                    detail: Some("reconstructed related member differs".into()),
                    ..FailureDetail::default()
                },
            ));
        }
    }

    Ok(VerifyReport::passing(TheoremLabel::Connection, family))
}
