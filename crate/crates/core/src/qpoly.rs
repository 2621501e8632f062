//! Dense exact polynomials in one variable and the operator layer on them.
//!
//! [`QPoly`] stores coefficients lowest degree first with no trailing zeros;
//! the zero polynomial is the empty list and has no degree. On top of the
//! ring operations this module provides the two q-calculus operators the rest
//! of the crate is built from:
//!
//! - [`QPoly::hahn_derivative`]: `D_q f(x) = (f(x) - f(qx)) / ((1 - q) x)`,
//!   computed on the basis as `x^n -> [n]_q x^(n-1)` so no division happens
//! - [`QPoly::scale_arg`]: `f(x) -> f(cx)`
//! - [`qproduct_basis`]: the falling products `(x - 1)(x - q)...(x - q^(k-1))`

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::{qnum, QParam, Rational};

/// Dense univariate polynomial with [`Rational`] coefficients.
///
/// `coeffs()[i]` is the coefficient of `x^i`. The representation never holds
/// trailing zeros, so two values are structurally equal exactly when they are
/// the same polynomial. Serialized form is the coefficient list lowest degree
/// first, each coefficient in rational text form: `x^2 - 1` is
/// `["-1", "0", "1"]`.
#[derive(Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Rational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        QPoly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// `coeff * x^degree`; the zero polynomial when `coeff` is zero.
    pub fn monomial(degree: usize, coeff: Rational) -> Self {
        if coeff.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = coeff;
        QPoly { coeffs }
    }

    /// Builds a polynomial from coefficients lowest degree first, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rational::is_one)
    }

    /// Multiplies every coefficient by `s`.
    pub fn scale(&self, s: &Rational) -> QPoly {
        if s.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Evaluates at `x0` by Horner's rule.
    pub fn eval(&self, x0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        acc
    }

    /// Argument scaling `f(x) -> f(cx)`: coefficient `i` picks up `c^i`.
    pub fn scale_arg(&self, c: &Rational) -> QPoly {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|coeff| {
                let scaled = coeff * &power;
                power *= c;
                scaled
            })
            .collect();
        QPoly::from_coeffs(coeffs)
    }

    /// The Hahn derivative `D_q f(x) = (f(x) - f(qx)) / ((1 - q) x)`.
    ///
    /// Acts on the monomial basis as `x^n -> [n]_q x^(n-1)`, which agrees
    /// with the quotient everywhere the quotient is defined and never
    /// divides, so the result is exact for all inputs.
    pub fn hahn_derivative(&self, q: &QParam) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * qnum(i, q))
            .collect();
        // [i]_q is nonzero for i >= 1, so the leading term survives.
        QPoly { coeffs }
    }

    /// Renders for LaTeX math mode, highest degree first.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = if c.is_negative() { -c } else { c.clone() };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = if magnitude.is_integer() {
                magnitude.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", magnitude.numer(), magnitude.denom())
            };
            if i == 0 {
                out.push_str(&mag);
            } else {
                if !magnitude.is_one() {
                    out.push_str(&mag);
                }
                if i == 1 {
                    out.push('x');
                } else {
                    out.push_str(&format!("x^{{{i}}}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    /// Human form, highest degree first: `x^2 - 6x + 7`, `(3/2)x - 1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = if c.is_negative() { -c } else { c.clone() };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    if magnitude.is_integer() {
                        write!(f, "{magnitude}")?;
                    } else {
                        write!(f, "({magnitude})")?;
                    }
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(QPoly::from_coeffs(Vec::deserialize(deserializer)?))
    }
}

fn add_impl(a: &QPoly, b: &QPoly) -> QPoly {
    let len = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..len).map(|i| a.coeff(i) + b.coeff(i)).collect();
    QPoly::from_coeffs(coeffs)
}

fn sub_impl(a: &QPoly, b: &QPoly) -> QPoly {
    let len = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..len).map(|i| a.coeff(i) - b.coeff(i)).collect();
    QPoly::from_coeffs(coeffs)
}

fn mul_impl(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() || b.is_zero() {
        return QPoly::zero();
    }
    let mut coeffs = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ca) in a.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.coeffs.iter().enumerate() {
            coeffs[i + j] += ca * cb;
        }
    }
    // The leading coefficient is a product of nonzero rationals.
    QPoly { coeffs }
}

macro_rules! qpoly_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                $impl_fn(self, rhs)
            }
        }

        impl $trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                $impl_fn(self, &rhs)
            }
        }

        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                $impl_fn(&self, rhs)
            }
        }

        impl $trait<QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                $impl_fn(&self, &rhs)
            }
        }
    };
}

qpoly_binop!(Add, add, add_impl);
qpoly_binop!(Sub, sub, sub_impl);
qpoly_binop!(Mul, mul, mul_impl);

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

/// The product basis `prod_{j=0}^{k-1} (x - q^j)`, with the empty product 1.
///
/// Its roots are `1, q, ..., q^(k-1)`, which makes it the natural basis for
/// the terminating hypergeometric sums: `(1/x; q)_k x^k` expands to exactly
/// this product.
pub fn qproduct_basis(k: usize, q: &QParam) -> QPoly {
    let mut acc = QPoly::one();
    for j in 0..k {
        let factor = QPoly::from_coeffs(vec![-q.pow(j as i64), Rational::one()]);
        acc = acc * factor;
    }
    acc
}
