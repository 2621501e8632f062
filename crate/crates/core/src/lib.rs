//! Exact construction and verification of Al-Salam-Carlitz I polynomial
//! families and the quasi-orthogonal q-Appell families connected to them.
//!
//! All arithmetic is over arbitrary-precision rationals; every identity
//! checked by this crate is checked with exact equality, never with a
//! tolerance. The layers, bottom to top:
//!
//! - [`exactnum`]: canonical rationals, the guarded base [`QParam`], and the
//!   scalar primitives `[n]_q`, `[n]_q!`, `(z; q)_k`
//! - [`qpoly`]: dense polynomials with the Hahn derivative and argument
//!   scaling
//! - [`alsalamcarlitz`]: the base families by recurrence and by terminating
//!   hypergeometric sum, their rescaling, and recurrence coefficient tables
//! - [`appell`]: the q-Appell property checker
//! - [`quasi`]: quasi-orthogonal families, moment functionals, the extended
//!   recurrence (extraction and replay), and the two-term connection
//! - [`report`]: wire-format verification reports

pub mod alsalamcarlitz;
pub mod appell;
pub mod error;
pub mod exactnum;
pub mod qpoly;
pub mod quasi;
pub mod report;

pub use alsalamcarlitz::{
    asc_hypergeom, asc_hypergeom_family, asc_recurrence, scaled_family, ttrr_coeffs, AscParams,
    PolyFamily, Provenance, TtrrCoeffs,
};
pub use appell::{appell_defects, check_appell, AppellDefect, AppellReport};
pub use error::{Error, Result};
pub use exactnum::{qfact, qnum, qpochhammer, QParam, Rational};
pub use qpoly::{qproduct_basis, QPoly};
pub use quasi::{
    build_family, check_quasi_orthogonality, connection_coeffs, extract_recurrence_params,
    moments_from_recurrence, reconstruct_related_family, riesz_decompose,
    verify_extended_recurrence, MomentFunctional, QuasiOrthDefect, QuasiOrthReport, QuasiParams,
    RecurrenceParams,
};
pub use report::{
    appell_report, connection_report, quasi_report, recurrence_report, FailureDetail, TheoremLabel,
    VerifyReport,
};
