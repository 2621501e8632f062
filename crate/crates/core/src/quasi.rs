//! Quasi-orthogonal q-Appell families and their characterization.
//!
//! Starting from the rescaled orthogonal family `P_n` (see
//! [`crate::alsalamcarlitz`]), [`build_family`] forms the monic q-Appell
//! family
//!
//! `Q_0 = 1,  Q_n = P_n - ([n]_q / lambda) P_{n-1}`
//!
//! which is quasi-orthogonal of order one for the moment functional of `P`.
//! The rest of the module provides both directions of the characterization:
//!
//! - [`moments_from_recurrence`] and [`check_quasi_orthogonality`] test the
//!   defining conditions `L[x^m Q_n] = 0` for m <= n-2 together with
//!   `L[x^(n-1) Q_n] != 0` against exact moments.
//! - [`extract_recurrence_params`] reads the constants `(b, c, d_2)` of the
//!   extended recurrence off the first three rows, and
//!   [`verify_extended_recurrence`] replays
//!
//!   `Q_{n+1} = (x + q^n b) Q_n - q^(n-1) [n]_q c Q_{n-1}
//!              + d_n sum_{k=0}^{n-2} (lambda^k / [k]_q!) Q_k`
//!
//!   with `d_n = (q [n]_q / lambda) d_{n-1}` against the whole family.
//! - [`riesz_decompose`] writes a polynomial as `a P_n + b P_{n-1}`, and
//!   [`reconstruct_related_family`] inverts the connection
//!   `P_n = ([n]_q! / lambda^n) sum_{k=0}^{n} (lambda^k / [k]_q!) Q_k`.

use serde::{Deserialize, Serialize};

use crate::alsalamcarlitz::{scaled_family, PolyFamily, Provenance, TtrrCoeffs};
use crate::error::{Error, Result};
use crate::exactnum::{qnum, QParam, Rational};
use crate::qpoly::QPoly;

/// Parameters of a quasi-orthogonal family: nonzero `alpha`, `beta` for the
/// related orthogonal family, nonzero `lambda` for the connection, and the
/// base q.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiParams {
    alpha: Rational,
    beta: Rational,
    lambda: Rational,
    q: QParam,
}

impl QuasiParams {
    pub fn new(alpha: Rational, beta: Rational, lambda: Rational, q: QParam) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::ZeroParameter("alpha"));
        }
        if beta.is_zero() {
            return Err(Error::ZeroParameter("beta"));
        }
        if lambda.is_zero() {
            return Err(Error::ZeroParameter("lambda"));
        }
        Ok(QuasiParams {
            alpha,
            beta,
            lambda,
            q,
        })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn q(&self) -> &QParam {
        &self.q
    }
}

/// Constants of the extended recurrence, as extracted from or fed into a
/// family check: row n uses `b_n = q^n b`, `c_n = q^(n-1) [n]_q c` and the
/// tail weight `d_n` seeded by `d2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceParams {
    pub b: Rational,
    pub c: Rational,
    pub d2: Rational,
    pub lambda: Rational,
}

/// Exact moment table `mu_0 .. mu_max` of a linear functional with
/// `mu_0 = 1`, applied to polynomials coefficientwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentFunctional {
    moments: Vec<Rational>,
}

impl MomentFunctional {
    /// Wraps a moment table, insisting on the normalization `mu_0 = 1`.
    pub fn new(moments: Vec<Rational>) -> Result<Self> {
        match moments.first() {
            None => Err(Error::UnnormalizedMoments { found: None }),
            Some(m) if !m.is_one() => Err(Error::UnnormalizedMoments {
                found: Some(m.clone()),
            }),
            _ => Ok(MomentFunctional { moments }),
        }
    }

    pub fn moments(&self) -> &[Rational] {
        &self.moments
    }

    /// Largest degree the table covers.
    pub fn max_degree(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn moment(&self, k: usize) -> Result<&Rational> {
        self.moments.get(k).ok_or(Error::MomentOverflow {
            needed: k,
            available: self.max_degree(),
        })
    }

    /// `L[p] = sum_k p_k mu_k`; errors when `p` outranges the table.
    pub fn apply(&self, p: &QPoly) -> Result<Rational> {
        if let Some(d) = p.degree() {
            if d > self.max_degree() {
                return Err(Error::MomentOverflow {
                    needed: d,
                    available: self.max_degree(),
                });
            }
        }
        let mut acc = Rational::zero();
        for (c, mu) in p.coeffs().iter().zip(&self.moments) {
            acc += c * mu;
        }
        Ok(acc)
    }
}

/// The connection coefficients `T_k = lambda^k / [k]_q!` for k = 0 ..= max_index.
pub fn connection_coeffs(lambda: &Rational, q: &QParam, max_index: usize) -> Vec<Rational> {
    let mut tees = Vec::with_capacity(max_index + 1);
    tees.push(Rational::one());
    for k in 1..=max_index {
        let next = &tees[k - 1] * lambda / qnum(k, q);
        tees.push(next);
    }
    tees
}

/// Builds the quasi-orthogonal family `Q_0 = 1`,
/// `Q_n = P_n - ([n]_q / lambda) P_{n-1}` through degree `max_degree`.
pub fn build_family(params: &QuasiParams, max_degree: usize) -> PolyFamily {
    let related = scaled_family(params.alpha(), params.beta(), params.q(), max_degree)
        .expect("parameters were validated at construction");
    let mut members = Vec::with_capacity(max_degree + 1);
    members.push(QPoly::one());
    for n in 1..=max_degree {
        let shift = qnum(n, params.q()) / params.lambda();
        members.push(related.member(n) - related.member(n - 1).scale(&shift));
    }
    PolyFamily::new(
        Provenance::QuasiAppell {
            alpha: params.alpha().clone(),
            beta: params.beta().clone(),
            lambda: params.lambda().clone(),
            q: params.q().value().clone(),
        },
        members,
    )
}

/// Writes `p` as `a P_n + b P_{n-1}` where n = deg p, reading the members
/// off `family`.
///
/// Matches the top two coefficients and then demands a zero remainder; a
/// nonzero remainder means `p` is not in that two-term span and is returned
/// inside the error. Degree-0 inputs decompose as `(a, 0)`.
pub fn riesz_decompose(p: &QPoly, family: &PolyFamily) -> Result<(Rational, Rational)> {
    family.validate_degrees()?;
    let n = p.degree().ok_or(Error::DegreeMismatch {
        expected: 0,
        found: None,
    })?;
    family.require_members(n + 1, "related family")?;

    let a = p.leading().expect("p is nonzero") / family.member(n).leading().expect("validated");
    let mut remainder = p - family.member(n).scale(&a);
    let b = if n == 0 {
        Rational::zero()
    } else {
        let b = remainder.coeff(n - 1)
            / family
                .member(n - 1)
                .leading()
                .expect("validated family has nonzero members");
        remainder = remainder - family.member(n - 1).scale(&b);
        b
    };
    if !remainder.is_zero() {
        return Err(Error::NotInTwoTermSpan {
            index: n,
            remainder,
        });
    }
    Ok((a, b))
}

/// Moments of the functional that is 1 on `P_0` and 0 on every higher
/// member, computed by expanding `x^k` through the recurrence tables:
/// `x P_j = P_{j+1} + B_j P_j + C_j P_{j-1}`.
///
/// Tables through index M yield `mu_0 .. mu_(M+1)`.
pub fn moments_from_recurrence(tables: &TtrrCoeffs) -> MomentFunctional {
    let mut coords = vec![Rational::one()];
    let mut moments = vec![Rational::one()];
    for _ in 0..=tables.max_index() {
        let mut next = vec![Rational::zero(); coords.len() + 1];
        for (j, t) in coords.iter().enumerate() {
            if t.is_zero() {
                continue;
            }
            next[j + 1] += t;
            next[j] += t * tables.b(j);
            if j >= 1 {
                next[j - 1] += t * tables.c(j);
            }
        }
        moments.push(next[0].clone());
        coords = next;
    }
    MomentFunctional { moments }
}

/// One failed quasi-orthogonality clause: `L[x^m Q_n]` came out as `value`
/// when it was expected to be zero (`expected_zero`) or nonzero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuasiOrthDefect {
    pub n: usize,
    pub m: usize,
    pub value: Rational,
    pub expected_zero: bool,
}

/// Outcome of a quasi-orthogonality test. `checked_up_to` is the largest
/// index whose clauses all passed; `defect` is the first failing clause.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuasiOrthReport {
    pub checked_up_to: usize,
    pub defect: Option<QuasiOrthDefect>,
}

impl QuasiOrthReport {
    pub fn pass(&self) -> bool {
        self.defect.is_none()
    }
}

/// Tests quasi-orthogonality of order one: for every member,
/// `L[x^m Q_n] = 0` for 0 <= m <= n-2 and `L[x^(n-1) Q_n] != 0` (with
/// `L[Q_0] != 0` as the n = 0 clause). Stops at the first failing clause.
///
/// The functional must cover degrees through `2 max_index - 1`; a shorter
/// table is an error rather than a defect.
pub fn check_quasi_orthogonality(
    family: &PolyFamily,
    functional: &MomentFunctional,
) -> Result<QuasiOrthReport> {
    family.validate_degrees()?;
    let max = family.max_index().expect("validated family is nonempty");
    for n in 0..=max {
        let member = family.member(n);
        for m in 0..n.saturating_sub(1) {
            let value = functional.apply(&(QPoly::monomial(m, Rational::one()) * member))?;
            if !value.is_zero() {
                return Ok(QuasiOrthReport {
                    checked_up_to: n.saturating_sub(1),
                    defect: Some(QuasiOrthDefect {
                        n,
                        m,
                        value,
                        expected_zero: true,
                    }),
                });
            }
        }
        let m = n.saturating_sub(1);
        let value = functional.apply(&(QPoly::monomial(m, Rational::one()) * member))?;
        if value.is_zero() {
            return Ok(QuasiOrthReport {
                checked_up_to: n.saturating_sub(1),
                defect: Some(QuasiOrthDefect {
                    n,
                    m,
                    value,
                    expected_zero: false,
                }),
            });
        }
    }
    Ok(QuasiOrthReport {
        checked_up_to: max,
        defect: None,
    })
}

fn constant_projection(t: QPoly, member0: &QPoly, index: usize) -> Result<Rational> {
    let coeff = t.coeff(0) / member0.coeff(0);
    let residual = t - member0.scale(&coeff);
    if residual.is_zero() {
        Ok(coeff)
    } else {
        Err(Error::RecurrenceMismatch { index, residual })
    }
}

/// Reads the constants of the extended recurrence off the first three rows
/// of a family:
///
/// - row 0: `Q_1 = (x + b) Q_0`
/// - row 1: `Q_2 = (x + q b) Q_1 - c Q_0`
/// - row 2: `Q_3 = (x + q^2 b) Q_2 - q [2]_q c Q_1 + d_2 Q_0`
///
/// Each row must close exactly in the span its shape allows; a nonzero
/// residual is a [`Error::RecurrenceMismatch`] at that row. `lambda` scales
/// the tail in later rows, so it is carried into the result unchanged.
pub fn extract_recurrence_params(
    family: &PolyFamily,
    lambda: &Rational,
    q: &QParam,
) -> Result<RecurrenceParams> {
    if lambda.is_zero() {
        return Err(Error::ZeroParameter("lambda"));
    }
    family.validate_degrees()?;
    family.require_members(4, "family")?;
    let x = QPoly::x();
    let member0 = family.member(0);

    let b = constant_projection(family.member(1) - &x * member0, member0, 0)?;

    let linear1 = &x + &QPoly::constant(q.value() * &b);
    let c = constant_projection(&linear1 * family.member(1) - family.member(2), member0, 1)?;

    let linear2 = &x + &QPoly::constant(q.pow(2) * &b);
    let c2 = &c * q.value() * qnum(2, q);
    let row2 = family.member(3) - &linear2 * family.member(2) + family.member(1).scale(&c2);
    let d2 = constant_projection(row2, member0, 2)?;

    Ok(RecurrenceParams {
        b,
        c,
        d2,
        lambda: lambda.clone(),
    })
}

/// Replays the extended recurrence against `family` for rows
/// n = 0 ..= max_row, so the family must extend through `max_row + 1`:
///
/// `Q_{n+1} = (x + q^n b) Q_n - q^(n-1) [n]_q c Q_{n-1}
///            + d_n sum_{k=0}^{n-2} T_k Q_k`
///
/// with `T_k = lambda^k / [k]_q!`, `d_0 = d_1 = 0`, `d_2` from `params` and
/// `d_n = (q [n]_q / lambda) d_{n-1}` beyond. The first row with a nonzero
/// residual is reported as [`Error::RecurrenceMismatch`].
pub fn verify_extended_recurrence(
    family: &PolyFamily,
    params: &RecurrenceParams,
    q: &QParam,
    max_row: usize,
) -> Result<()> {
    if params.lambda.is_zero() {
        return Err(Error::ZeroParameter("lambda"));
    }
    family.validate_degrees()?;
    family.require_members(max_row + 2, "family")?;

    let x = QPoly::x();
    let tees = connection_coeffs(&params.lambda, q, max_row.saturating_sub(2));
    let mut tail = QPoly::zero();
    let mut d = Rational::zero();
    for n in 0..=max_row {
        if n >= 2 {
            tail = tail + family.member(n - 2).scale(&tees[n - 2]);
            d = if n == 2 {
                params.d2.clone()
            } else {
                d * q.value() * qnum(n, q) / &params.lambda
            };
        }
        let linear = &x + &QPoly::constant(q.pow(n as i64) * &params.b);
        let mut rhs = &linear * family.member(n);
        if n >= 1 {
            let cn = &params.c * q.pow(n as i64 - 1) * qnum(n, q);
            rhs = rhs - family.member(n - 1).scale(&cn);
        }
        if n >= 2 && !d.is_zero() {
            rhs = rhs + tail.scale(&d);
        }
        let residual = family.member(n + 1) - rhs;
        if !residual.is_zero() {
            return Err(Error::RecurrenceMismatch { index: n, residual });
        }
    }
    Ok(())
}

/// Inverts the connection: from the quasi-orthogonal members recovers
///
/// `P_n = ([n]_q! / lambda^n) sum_{k=0}^{n} T_k Q_k`
///
/// which telescopes back to the related orthogonal family exactly.
pub fn reconstruct_related_family(family: &PolyFamily, params: &QuasiParams) -> Result<PolyFamily> {
    family.validate_degrees()?;
    let max = family.max_index().expect("validated family is nonempty");
    let tees = connection_coeffs(params.lambda(), params.q(), max);
    let mut prefix = QPoly::zero();
    let mut members = Vec::with_capacity(max + 1);
    for (n, t) in tees.iter().enumerate() {
        prefix = prefix + family.member(n).scale(t);
        members.push(prefix.scale(&t.recip()));
    }
    Ok(PolyFamily::new(
        Provenance::Reconstructed {
            alpha: params.alpha().clone(),
            beta: params.beta().clone(),
            lambda: params.lambda().clone(),
            q: params.q().value().clone(),
        },
        members,
    ))
}
