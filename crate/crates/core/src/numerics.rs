//! Scalar field contract and its two instantiations.
//!
//! Everything downstream is generic over [`Scalar`]. [`Rational`] is the exact
//! field (arbitrary precision, canonical form) used as the verification
//! oracle; `f64` is the fast path used by the contour quadrature.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Relative/absolute tolerance for the float instantiation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Tolerance {
    pub fn new(rel: f64, abs: f64) -> Result<Self> {
        if !(rel >= 0.0 && abs >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "tolerance must be nonnegative, got rel={rel} abs={abs}"
            )));
        }
        Ok(Tolerance { rel, abs })
    }

    pub const fn exact() -> Self {
        Tolerance { rel: 0.0, abs: 0.0 }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel: 1e-9,
            abs: 1e-12,
        }
    }
}

/// An element of a field.
///
/// Division is only reachable through [`Scalar::checked_div`] so a zero
/// divisor is always an error, never an infinity or a panic.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_ratio(numerator: i64, denominator: i64) -> Result<Self>;
    fn is_zero(&self) -> bool;
    fn checked_div(&self, rhs: &Self) -> Result<Self>;
    /// Exact equality for [`Rational`]; tolerance comparison for `f64`.
    fn approx_eq(&self, other: &Self, tol: &Tolerance) -> bool;
    fn to_f64(&self) -> f64;
    fn parse_scalar(s: &str) -> Result<Self>;

    fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

pub fn scalar_from_ratio<S: Scalar>(numerator: i64, denominator: i64) -> Result<S> {
    S::from_ratio(numerator, denominator)
}

pub fn approx_equal<S: Scalar>(x: &S, y: &S, tol: &Tolerance) -> bool {
    x.approx_eq(y, tol)
}

/// Exact rational with arbitrary-precision components, always reduced with
/// a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numerator, denominator)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn factorial(n: u32) -> Self {
        let mut acc = BigInt::one();
        for k in 2..=n {
            acc *= k;
        }
        Rational(BigRational::from_integer(acc))
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty integer".into()));
    }
    BigInt::from_str(t).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

/// Accepts "p", "p/q" and plain decimals such as "-0.25" (read exactly).
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some((p, q)) = t.split_once('/') {
            return Rational::new(parse_bigint(p)?, parse_bigint(q)?);
        }
        if let Some((int, frac)) = t.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("malformed decimal {s:?}")));
            }
            let negative = int.trim_start().starts_with('-');
            let int_part = match int.trim_start_matches(['-', '+']) {
                "" => BigInt::zero(),
                digits => parse_bigint(digits)?,
            };
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let magnitude = int_part * &scale + parse_bigint(frac)?;
            let numer = if negative { -magnitude } else { magnitude };
            return Rational::new(numer, scale);
        }
        Ok(Rational(BigRational::from_integer(parse_bigint(t)?)))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn from_int(n: i64) -> Self {
        Rational::integer(n)
    }

    fn from_ratio(numerator: i64, denominator: i64) -> Result<Self> {
        Rational::new(BigInt::from(numerator), BigInt::from(denominator))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    fn approx_eq(&self, other: &Self, _tol: &Tolerance) -> bool {
        self == other
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::ZeroDenominator);
        }
        Rational::from_ratio(numerator, denominator).map(|r| r.to_f64())
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if *rhs == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }

    fn approx_eq(&self, other: &Self, tol: &Tolerance) -> bool {
        (self - other).abs() <= tol.abs + tol.rel * self.abs().max(other.abs())
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.contains('/') {
            return Rational::parse_scalar(t).map(|r| r.to_f64());
        }
        let x: f64 = t
            .parse()
            .map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        if !x.is_finite() {
            return Err(Error::Parse(format!("{s:?} is not finite")));
        }
        Ok(x)
    }
}
