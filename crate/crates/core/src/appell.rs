//! The q-Appell property: `D_q P_n = [n]_q P_{n-1}` along a family.
//!
//! [`check_appell`] walks a degree-validated family and reports how far the
//! property holds together with the first defect polynomial, if any;
//! [`appell_defects`] keeps going past the first defect and collects all of
//! them.

use serde::{Deserialize, Serialize};

use crate::alsalamcarlitz::PolyFamily;
use crate::error::Result;
use crate::exactnum::{qnum, QParam};
use crate::qpoly::QPoly;

/// One violation: at index `n`, `D_q P_n - [n]_q P_{n-1}` was `residual`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AppellDefect {
    pub n: usize,
    pub residual: QPoly,
}

/// Outcome of an Appell check. `holds_up_to` is the largest index m such
/// that the property holds for every n <= m; `defect` is the first
/// violation, `None` when the whole family passes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AppellReport {
    pub holds_up_to: usize,
    pub defect: Option<AppellDefect>,
}

impl AppellReport {
    pub fn pass(&self) -> bool {
        self.defect.is_none()
    }
}

fn defect_at(family: &PolyFamily, n: usize, q: &QParam) -> Option<AppellDefect> {
    let residual = family.member(n).hahn_derivative(q) - family.member(n - 1).scale(&qnum(n, q));
    if residual.is_zero() {
        None
    } else {
        Some(AppellDefect { n, residual })
    }
}

/// Checks `D_q P_n = [n]_q P_{n-1}` for n = 1 ..= max index, stopping at the
/// first defect.
///
/// The family's degrees are validated first; a malformed family is an error,
/// not a defect, so a report always describes a family that at least has the
/// right shape.
pub fn check_appell(family: &PolyFamily, q: &QParam) -> Result<AppellReport> {
    family.validate_degrees()?;
    let max = family.max_index().expect("validated family is nonempty");
    for n in 1..=max {
        if let Some(defect) = defect_at(family, n, q) {
            return Ok(AppellReport {
                holds_up_to: n - 1,
                defect: Some(defect),
            });
        }
    }
    Ok(AppellReport {
        holds_up_to: max,
        defect: None,
    })
}

/// Like [`check_appell`] but continues past failures and returns every
/// defect in index order. An empty vector means the family passes.
pub fn appell_defects(family: &PolyFamily, q: &QParam) -> Result<Vec<AppellDefect>> {
    family.validate_degrees()?;
    let max = family.max_index().expect("validated family is nonempty");
    Ok((1..=max).filter_map(|n| defect_at(family, n, q)).collect())
}
