//! Dense univariate polynomials, interpolation grids and nodal polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{self, Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::numerics::{Scalar, Tolerance};

/// Polynomial in the monomial basis; `coeffs[i]` multiplies `z^i`.
///
/// The highest stored coefficient is never zero, so the zero polynomial is
/// the empty sequence.
#[derive(Clone, PartialEq)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `z - root`
    pub fn linear_factor(root: S) -> Self {
        Self::new(vec![-root, S::one()])
    }

    /// `c * z^k`
    pub fn monomial(c: S, k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| *c == S::one())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Divides every coefficient by `c`.
    pub fn div_scalar(&self, c: &S) -> Result<Self> {
        let inv = c.recip()?;
        Ok(self.scale(&inv))
    }

    /// Divides by the leading coefficient.
    pub fn to_monic(&self) -> Result<Self> {
        match self.leading_coeff() {
            Some(lc) => self.div_scalar(lc),
            None => Err(Error::DivisionByZero),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * S::from_int(i as i64))
                .collect(),
        )
    }

    /// Synthetic division by `z - root`; returns `(quotient, remainder)`.
    pub fn div_linear(&self, root: &S) -> (Self, S) {
        if self.coeffs.is_empty() {
            return (Self::zero(), S::zero());
        }
        let n = self.coeffs.len();
        let mut quotient = vec![S::zero(); n - 1];
        let mut carry = S::zero();
        for i in (0..n).rev() {
            let next = self.coeffs[i].clone() + carry * root.clone();
            if i == 0 {
                return (Self::new(quotient), next);
            }
            quotient[i - 1] = next.clone();
            carry = next;
        }
        unreachable!()
    }

    /// Coefficient-wise comparison under `tol` (exact for rationals).
    pub fn approx_eq(&self, other: &Self, tol: &Tolerance) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i).approx_eq(&other.coeff(i), tol))
    }

    /// Applies `f` to every coefficient; used to move between scalar fields.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<S: Scalar> Add for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: &Polynomial<S>) -> Polynomial<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<S: Scalar> Sub for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: &Polynomial<S>) -> Polynomial<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<S: Scalar> Mul for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: &Polynomial<S>) -> Polynomial<S> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<S: Scalar> Neg for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<S: Scalar> $tr for Polynomial<S> {
            type Output = Polynomial<S>;
            fn $m(self, rhs: Polynomial<S>) -> Polynomial<S> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Binary operation selector for [`poly_arith`].
#[derive(Debug, Clone)]
pub enum PolyOp<S> {
    Add,
    Sub,
    Mul,
    /// Multiplies the first operand by the scalar; the second is ignored.
    Scale(S),
}

pub fn poly_arith<S: Scalar>(a: &Polynomial<S>, b: &Polynomial<S>, op: PolyOp<S>) -> Polynomial<S> {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
        PolyOp::Scale(c) => a.scale(&c),
    }
}

pub fn poly_eval<S: Scalar>(p: &Polynomial<S>, x: &S) -> S {
    p.eval(x)
}

impl<S: fmt::Debug> fmt::Debug for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{i}")?,
            }
        }
        Ok(())
    }
}

/// JSON array of scalar strings, constant term first.
impl<S: Scalar> Serialize for Polynomial<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Polynomial<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| S::parse_scalar(s).map_err(de::Error::custom))
            .collect::<std::result::Result<Vec<S>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

/// Ordered, pairwise-distinct interpolation nodes `a_0..a_N`.
#[derive(Clone, PartialEq)]
pub struct Grid<S> {
    nodes: Vec<S>,
}

impl<S: Scalar> Grid<S> {
    pub fn new(nodes: Vec<S>) -> Result<Self> {
        for j in 1..nodes.len() {
            for i in 0..j {
                if nodes[i] == nodes[j] {
                    return Err(Error::DuplicateNode { first: i, second: j });
                }
            }
        }
        Ok(Grid { nodes })
    }

    /// Nodes `0, 1, ..., count - 1`.
    pub fn integers(count: usize) -> Self {
        Grid {
            nodes: (0..count as i64).map(S::from_int).collect(),
        }
    }

    pub fn nodes(&self) -> &[S] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> Result<&S> {
        self.nodes.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            limit: self.nodes.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The first `count` nodes.
    pub fn prefix(&self, count: usize) -> Result<Self> {
        if count > self.nodes.len() {
            return Err(Error::InsufficientNodes {
                needed: count,
                available: self.nodes.len(),
            });
        }
        Ok(Grid {
            nodes: self.nodes[..count].to_vec(),
        })
    }

    /// Appends a node, keeping the grid distinct.
    pub fn push(&self, node: S) -> Result<Self> {
        let mut nodes = self.nodes.clone();
        nodes.push(node);
        Grid::new(nodes)
    }
}

impl<S: fmt::Debug> fmt::Debug for Grid<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.nodes).finish()
    }
}

/// `omega_k(z) = (z - a_0)...(z - a_{k-1})`, with `omega_0 = 1`.
pub fn nodal_polynomial<S: Scalar>(grid: &Grid<S>, k: usize) -> Result<Polynomial<S>> {
    if k > grid.len() {
        return Err(Error::InsufficientNodes {
            needed: k,
            available: grid.len(),
        });
    }
    Ok(grid.nodes[..k]
        .iter()
        .fold(Polynomial::one(), |acc, a| &acc * &Polynomial::linear_factor(a.clone())))
}

/// `omega_k(x)` evaluated directly as a product, without expanding.
pub fn nodal_value<S: Scalar>(grid: &Grid<S>, k: usize, x: &S) -> Result<S> {
    if k > grid.len() {
        return Err(Error::InsufficientNodes {
            needed: k,
            available: grid.len(),
        });
    }
    Ok(grid.nodes[..k]
        .iter()
        .fold(S::one(), |acc, a| acc * (x.clone() - a.clone())))
}

/// `omega'_{k+1}(a_s) = prod_{i <= k, i != s} (a_s - a_i)`.
///
/// `count` is the number of nodes `k + 1` entering the product.
pub fn nodal_derivative_at<S: Scalar>(grid: &Grid<S>, count: usize, s: usize) -> Result<S> {
    if count > grid.len() {
        return Err(Error::IndexOutOfRange {
            index: count,
            limit: grid.len(),
        });
    }
    if s >= count {
        return Err(Error::IndexOutOfRange { index: s, limit: count });
    }
    let a_s = &grid.nodes[s];
    Ok(grid.nodes[..count]
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != s)
        .fold(S::one(), |acc, (_, a)| acc * (a_s.clone() - a.clone())))
}
