//! Exact rational scalars and the scalar q-calculus primitives.
//!
//! Everything downstream computes over [`Rational`]: arbitrary-precision
//! fractions kept in canonical form (lowest terms, positive denominator).
//! The base of the calculus lives in [`QParam`], which rejects q in
//! {0, 1, -1} so that `[n]_q` is nonzero for every n >= 1 and quotients by
//! `1 - q` are well defined.
//!
//! Scalar primitives:
//! - [`qnum`]: the q-number `[n]_q = 1 + q + ... + q^(n-1)`
//! - [`qfact`]: the q-factorial `[n]_q! = [1]_q [2]_q ... [n]_q`
//! - [`qpochhammer`]: the q-shifted factorial `(z; q)_k`

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
///
/// The representation is always reduced to lowest terms with a positive
/// denominator, so structural equality is numeric equality. The text form is
/// `p/q` for non-integers and a bare integer otherwise; [`Rational::from_str`]
/// accepts exactly that shape (optional sign on the numerator only, no
/// decimals, nonzero denominator) and serde uses the same strings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom` in canonical form.
    ///
    /// Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "denominator must be nonzero");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "denominator must be nonzero");
        Rational(BigRational::new(numer, denom))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Numerator of the canonical form; carries the sign.
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the canonical form; always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "zero has no reciprocal");
        Rational(self.0.recip())
    }

    /// Integer power, with negative exponents inverting. Panics when raising
    /// zero to a negative power.
    pub fn pow(&self, exp: i64) -> Self {
        if exp < 0 {
            assert!(!self.is_zero(), "zero has no negative power");
        }
        let e = i32::try_from(exp).expect("exponent magnitude out of range");
        Rational(self.0.pow(e))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from(BigInt::from(n)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn integer(text: &str, allow_sign: bool) -> Option<BigInt> {
            let digits = if allow_sign {
                text.strip_prefix(['+', '-']).unwrap_or(text)
            } else {
                text
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            text.parse().ok()
        }

        let err = || Error::ParseRational(s.to_string());
        match s.split_once('/') {
            None => {
                let numer = integer(s, true).ok_or_else(err)?;
                Ok(Rational(BigRational::from(numer)))
            }
            Some((n, d)) => {
                let numer = integer(n, true).ok_or_else(err)?;
                let denom = integer(d, false).ok_or_else(err)?;
                if denom.is_zero() {
                    return Err(err());
                }
                Ok(Rational(BigRational::new(numer, denom)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }

        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

macro_rules! rational_assign {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for Rational {
            fn $method(&mut self, rhs: &Rational) {
                self.0.$method(&rhs.0);
            }
        }

        impl $trait<Rational> for Rational {
            fn $method(&mut self, rhs: Rational) {
                self.0.$method(rhs.0);
            }
        }
    };
}

rational_assign!(AddAssign, add_assign);
rational_assign!(SubAssign, sub_assign);
rational_assign!(MulAssign, mul_assign);
rational_assign!(DivAssign, div_assign);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// The base of the calculus: a rational q with q not in {0, 1, -1}.
///
/// Those three values are excluded up front because they would zero out some
/// `[n]_q` and break every quotient the calculus relies on; any other
/// rational is admissible (a rational of absolute value other than 0 and 1 is
/// never a nontrivial root of unity).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QParam {
    q: Rational,
}

impl QParam {
    pub fn new(q: Rational) -> Result<Self> {
        if q.is_zero() || q.is_one() || q == Rational::from(-1) {
            return Err(Error::InvalidQ(q));
        }
        Ok(QParam { q })
    }

    pub fn value(&self) -> &Rational {
        &self.q
    }

    /// q^exp as a scalar; negative exponents invert.
    pub fn pow(&self, exp: i64) -> Rational {
        self.q.pow(exp)
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.q.fmt(f)
    }
}

impl fmt::Debug for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.q.fmt(f)
    }
}

impl FromStr for QParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        QParam::new(s.parse()?)
    }
}

/// The q-number `[n]_q = (1 - q^n) / (1 - q) = 1 + q + ... + q^(n-1)`.
///
/// `[0]_q = 0`, and `[n]_q` is nonzero for n >= 1 because `QParam` excludes
/// 0, 1 and -1.
pub fn qnum(n: usize, q: &QParam) -> Rational {
    let one = Rational::one();
    (&one - q.pow(n as i64)) / (one - q.value())
}

/// The q-factorial `[n]_q! = [1]_q [2]_q ... [n]_q`, with `[0]_q! = 1`.
pub fn qfact(n: usize, q: &QParam) -> Rational {
    let mut acc = Rational::one();
    for k in 1..=n {
        acc *= qnum(k, q);
    }
    acc
}

/// The q-shifted factorial `(z; q)_k = (1 - z)(1 - zq) ... (1 - zq^(k-1))`,
/// with `(z; q)_0 = 1`.
///
/// For z = q^(-n) this vanishes exactly when k > n, which is what makes the
/// hypergeometric sums in this crate terminate.
pub fn qpochhammer(z: &Rational, q: &QParam, k: usize) -> Rational {
    let one = Rational::one();
    let mut acc = Rational::one();
    let mut shifted = z.clone();
    for _ in 0..k {
        acc *= &one - &shifted;
        shifted *= q.value();
    }
    acc
}
