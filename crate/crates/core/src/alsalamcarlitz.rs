//! Al-Salam-Carlitz I polynomial families over exact rationals.
//!
//! Two independent constructions of the same monic family are provided so
//! each can check the other:
//!
//! - [`asc_recurrence`]: the three-term recurrence
//!   `U_{n+1} = (x - (a + 1) q^n) U_n + a q^(n-1) (1 - q^n) U_{n-1}`
//! - [`asc_hypergeom`]: the terminating basic hypergeometric sum, expanded
//!   over the product basis `(x - 1)(x - q)...`
//!
//! [`scaled_family`] rescales `U_n` into the two-parameter monic family
//! `P_n(x) = beta^n U_n^(alpha/beta)(x / beta; q)`, and [`ttrr_coeffs`]
//! tabulates that family's recurrence coefficients
//! `B_n = (alpha + beta) q^n` and `C_n = -alpha beta q^(n-1) (1 - q^n)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{qpochhammer, QParam, Rational};
use crate::qpoly::{qproduct_basis, QPoly};

/// Parameters of an Al-Salam-Carlitz I family: a nonzero `a` and the base q.
#[derive(Clone, Debug, PartialEq)]
pub struct AscParams {
    a: Rational,
    q: QParam,
}

impl AscParams {
    pub fn new(a: Rational, q: QParam) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroParameter("a"));
        }
        Ok(AscParams { a, q })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn q(&self) -> &QParam {
        &self.q
    }
}

/// How a family was built and with which parameters.
///
/// Serialized under the tag `route`, next to the parameter values, so a
/// family on disk is self-describing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum Provenance {
    AscRecurrence {
        a: Rational,
        q: Rational,
    },
    AscHypergeometric {
        a: Rational,
        q: Rational,
    },
    Scaled {
        alpha: Rational,
        beta: Rational,
        q: Rational,
    },
    QuasiAppell {
        alpha: Rational,
        beta: Rational,
        lambda: Rational,
        q: Rational,
    },
    Reconstructed {
        alpha: Rational,
        beta: Rational,
        lambda: Rational,
        q: Rational,
    },
    Adhoc {
        label: String,
    },
}

/// A finite list of polynomials indexed by degree, plus its provenance.
///
/// Position `n` is meant to hold the degree-`n` member; that is a promise of
/// the constructors in this crate, not of the container, so checkers call
/// [`PolyFamily::validate_degrees`] before trusting it. Serialized shape:
/// `{"params": {...}, "members": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyFamily {
    #[serde(rename = "params")]
    provenance: Provenance,
    members: Vec<QPoly>,
}

impl PolyFamily {
    pub fn new(provenance: Provenance, members: Vec<QPoly>) -> Self {
        PolyFamily {
            provenance,
            members,
        }
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn members(&self) -> &[QPoly] {
        &self.members
    }

    pub fn into_members(self) -> Vec<QPoly> {
        self.members
    }

    /// Member of degree `n`. Panics when the family does not extend that far.
    pub fn member(&self, n: usize) -> &QPoly {
        &self.members[n]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Largest degree present, `None` for an empty family.
    pub fn max_index(&self) -> Option<usize> {
        self.members.len().checked_sub(1)
    }

    /// Confirms member `n` has degree exactly `n` for every member.
    pub fn validate_degrees(&self) -> Result<()> {
        if self.members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for (index, member) in self.members.iter().enumerate() {
            if member.degree() != Some(index) {
                return Err(Error::MalformedFamily {
                    index,
                    expected: index,
                    found: member.degree(),
                });
            }
        }
        Ok(())
    }

    pub(crate) fn require_members(&self, needed: usize, what: &'static str) -> Result<()> {
        if self.members.len() < needed {
            return Err(Error::InsufficientLength {
                what,
                needed,
                have: self.members.len(),
            });
        }
        Ok(())
    }
}

/// Recurrence coefficient tables for a monic orthogonal family:
/// `P_{n+1} = (x - B_n) P_n - C_n P_{n-1}`.
///
/// `b(n)` is defined for `0 <= n <= max_index()`; `c(n)` for
/// `1 <= n <= max_index()` and guaranteed nonzero there (slot 0 holds an
/// unused zero placeholder).
#[derive(Clone, Debug, PartialEq)]
pub struct TtrrCoeffs {
    b: Vec<Rational>,
    c: Vec<Rational>,
}

impl TtrrCoeffs {
    pub fn max_index(&self) -> usize {
        self.b.len() - 1
    }

    pub fn b(&self, n: usize) -> &Rational {
        &self.b[n]
    }

    pub fn c(&self, n: usize) -> &Rational {
        &self.c[n]
    }
}

/// Builds `U_0 .. U_max_degree` by the three-term recurrence.
///
/// The two-term tail is absent at n = 0 because its factor `1 - q^0`
/// vanishes, so `U_1 = x - (a + 1)` needs no `U_{-1}`.
pub fn asc_recurrence(params: &AscParams, max_degree: usize) -> PolyFamily {
    let (a, q) = (params.a(), params.q());
    let one = Rational::one();
    let mut members = Vec::with_capacity(max_degree + 1);
    members.push(QPoly::one());
    for n in 0..max_degree {
        let shift = (a + &one) * q.pow(n as i64);
        let linear = QPoly::from_coeffs(vec![-shift, one.clone()]);
        let mut next = &linear * &members[n];
        if n >= 1 {
            let tail = a * q.pow(n as i64 - 1) * (&one - q.pow(n as i64));
            next = next + members[n - 1].scale(&tail);
        }
        members.push(next);
    }
    PolyFamily::new(
        Provenance::AscRecurrence {
            a: a.clone(),
            q: q.value().clone(),
        },
        members,
    )
}

/// Builds the degree-`n` member from its terminating hypergeometric sum:
///
/// `U_n = (-a)^n q^(n(n-1)/2) sum_{k=0}^{n} [(q^(-n); q)_k / (q; q)_k]
///        (q/a)^k (x - 1)(x - q)...(x - q^(k-1))`
///
/// The sum stops at k = n on its own because `(q^(-n); q)_k` vanishes for
/// every k > n.
pub fn asc_hypergeom(params: &AscParams, n: usize) -> QPoly {
    let (a, q) = (params.a(), params.q());
    let z = q.pow(-(n as i64));
    let q_over_a = q.value() / a;
    let mut sum = QPoly::zero();
    for k in 0..=n {
        let coeff = qpochhammer(&z, q, k) / qpochhammer(q.value(), q, k) * q_over_a.pow(k as i64);
        sum = sum + qproduct_basis(k, q).scale(&coeff);
    }
    let triangle = (n * n.saturating_sub(1) / 2) as i64;
    let front = (-a).pow(n as i64) * q.pow(triangle);
    sum.scale(&front)
}

/// Builds `U_0 .. U_max_degree` via [`asc_hypergeom`], keeping the route in
/// the provenance so families from the two constructions stay
/// distinguishable.
pub fn asc_hypergeom_family(params: &AscParams, max_degree: usize) -> PolyFamily {
    let members = (0..=max_degree).map(|n| asc_hypergeom(params, n)).collect();
    PolyFamily::new(
        Provenance::AscHypergeometric {
            a: params.a().clone(),
            q: params.q().value().clone(),
        },
        members,
    )
}

/// Builds the rescaled monic family `P_n(x) = beta^n U_n^(alpha/beta)(x / beta; q)`
/// for nonzero `alpha`, `beta`.
pub fn scaled_family(
    alpha: &Rational,
    beta: &Rational,
    q: &QParam,
    max_degree: usize,
) -> Result<PolyFamily> {
    if alpha.is_zero() {
        return Err(Error::ZeroParameter("alpha"));
    }
    if beta.is_zero() {
        return Err(Error::ZeroParameter("beta"));
    }
    let inner = AscParams::new(alpha / beta, q.clone())?;
    let base = asc_recurrence(&inner, max_degree);
    let inv_beta = beta.recip();
    let members = base
        .into_members()
        .into_iter()
        .enumerate()
        .map(|(n, u)| u.scale_arg(&inv_beta).scale(&beta.pow(n as i64)))
        .collect();
    Ok(PolyFamily::new(
        Provenance::Scaled {
            alpha: alpha.clone(),
            beta: beta.clone(),
            q: q.value().clone(),
        },
        members,
    ))
}

/// Tabulates the recurrence coefficients of the rescaled family through
/// index `max_degree`:
///
/// `B_n = (alpha + beta) q^n`, `C_n = -alpha beta q^(n-1) (1 - q^n)`
///
/// Every `C_n` with n >= 1 is a product of nonzero rationals, which is the
/// nonvanishing guarantee [`TtrrCoeffs`] advertises.
pub fn ttrr_coeffs(
    alpha: &Rational,
    beta: &Rational,
    q: &QParam,
    max_degree: usize,
) -> Result<TtrrCoeffs> {
    if alpha.is_zero() {
        return Err(Error::ZeroParameter("alpha"));
    }
    if beta.is_zero() {
        return Err(Error::ZeroParameter("beta"));
    }
    let one = Rational::one();
    let sum = alpha + beta;
    let product = alpha * beta;
    let mut b = Vec::with_capacity(max_degree + 1);
    let mut c = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        b.push(&sum * q.pow(n as i64));
        if n == 0 {
            c.push(Rational::zero());
        } else {
            c.push(-(&product) * q.pow(n as i64 - 1) * (&one - q.pow(n as i64)));
        }
    }
    Ok(TtrrCoeffs { b, c })
}
