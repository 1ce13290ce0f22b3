//! Closed forms for `F(z) = e^{hz}` on the integer grid `a_k = k`.
//!
//! Everything is rational in `q = e^h`, so the problem is parameterized by
//! `q` directly and checked exactly against the generic machinery.

use crate::divided::Samples;
use crate::error::{Error, Result};
use crate::numerics::Scalar;
use crate::polynomial::{Grid, Polynomial};

/// Samples `A_k = q^k` at `a_k = k` for `k = 0..=n_max + 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpGridProblem<S> {
    q: S,
    n_max: usize,
    samples: Samples<S>,
}

impl<S: Scalar> ExpGridProblem<S> {
    /// `q` must differ from 0 and 1; negative `q` is allowed.
    pub fn new(q: S, n_max: usize) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidParameter("q = 0".into()));
        }
        if q == S::one() {
            return Err(Error::InvalidParameter("q = 1 makes every alpha_n vanish".into()));
        }
        let grid = Grid::integers(n_max + 3);
        let values = (0..n_max as u32 + 3).map(|k| q.pow(k)).collect();
        let samples = Samples::new(grid, values)?;
        Ok(ExpGridProblem { q, n_max, samples })
    }

    pub fn q(&self) -> &S {
        &self.q
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn samples(&self) -> &Samples<S> {
        &self.samples
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.n_max {
            return Err(Error::IndexOutOfRange {
                index: n,
                limit: self.n_max + 1,
            });
        }
        Ok(())
    }
}

fn factorial<S: Scalar>(n: usize) -> S {
    (2..=n as i64).fold(S::one(), |acc, k| acc * S::from_int(k))
}

/// Rising factorial `(b)_k = b (b+1) ... (b+k-1)`.
pub fn pochhammer<S: Scalar>(b: &S, k: usize) -> S {
    (0..k as i64).fold(S::one(), |acc, j| acc * (b.clone() + S::from_int(j)))
}

/// `(-z)_k = (-z)(1-z)...(k-1-z)` as a polynomial in `z`.
fn pochhammer_neg_z<S: Scalar>(k: usize) -> Polynomial<S> {
    (0..k as i64).fold(Polynomial::one(), |acc, j| {
        &acc * &Polynomial::new(vec![S::from_int(j), -S::one()])
    })
}

/// Terminating `2F1(-n, b; c; x) = sum_{k<=n} (-n)_k (b)_k / ((c)_k k!) x^k`.
///
/// Terms are built by their ratio; once the numerator factor hits zero the
/// series has ended, so a later vanishing `(c)_k` is harmless.
pub fn terminating_2f1<S: Scalar>(n: usize, b: &S, c: &S, x: &S) -> Result<S> {
    let mut term = S::one();
    let mut sum = S::one();
    for k in 1..=n {
        let j = S::from_int(k as i64 - 1);
        let num = (S::from_int(-(n as i64)) + j.clone()) * (b.clone() + j.clone());
        if num.is_zero() {
            break;
        }
        let den = (c.clone() + j) * S::from_int(k as i64);
        if den.is_zero() {
            return Err(Error::LowerParameterPole(k));
        }
        term = (term * num * x.clone()).checked_div(&den)?;
        sum = sum + term.clone();
    }
    Ok(sum)
}

/// `2F1(-n, -z; c; x)` as a polynomial in `z` for fixed `c` and `x`.
fn terminating_2f1_in_z<S: Scalar>(n: usize, c: &S, x: &S) -> Result<Polynomial<S>> {
    let mut acc = Polynomial::zero();
    let mut weight = S::one();
    for k in 0..=n {
        if k > 0 {
            let j = S::from_int(k as i64 - 1);
            let den = (c.clone() + j.clone()) * S::from_int(k as i64);
            if den.is_zero() {
                return Err(Error::LowerParameterPole(k));
            }
            weight = (weight * (S::from_int(-(n as i64)) + j) * x.clone()).checked_div(&den)?;
        }
        acc = &acc + &pochhammer_neg_z::<S>(k).scale(&weight);
    }
    Ok(acc)
}

/// `P_n(z) = sum_{k<=n} (-z)_k / k! (1-q)^k`.
pub fn exp_interpolant_closed<S: Scalar>(problem: &ExpGridProblem<S>, n: usize) -> Result<Polynomial<S>> {
    problem.check_degree(n)?;
    let x = S::one() - problem.q.clone();
    let mut acc = Polynomial::zero();
    for k in 0..=n {
        let c = x.pow(k as u32).checked_div(&factorial(k))?;
        acc = &acc + &pochhammer_neg_z::<S>(k).scale(&c);
    }
    Ok(acc)
}

/// `alpha_n = (q-1)^n / n!`.
pub fn exp_alpha_closed<S: Scalar>(problem: &ExpGridProblem<S>, n: usize) -> Result<S> {
    (problem.q.clone() - S::one()).pow(n as u32).checked_div(&factorial(n))
}

/// `nu_n = q / (q-1)`, the same for every `n`.
pub fn exp_nu_closed<S: Scalar>(problem: &ExpGridProblem<S>) -> Result<S> {
    problem.q.checked_div(&(problem.q.clone() - S::one()))
}

/// Monic `T̂_n(z) = (n+1)! / (q-1)^n * 2F1(-n, -z; -1-n; 1-q)`.
pub fn exp_t_closed<S: Scalar>(problem: &ExpGridProblem<S>, n: usize) -> Result<Polynomial<S>> {
    problem.check_degree(n)?;
    let q = &problem.q;
    let series = terminating_2f1_in_z(n, &S::from_int(-1 - n as i64), &(S::one() - q.clone()))?;
    let scale = factorial::<S>(n + 1).checked_div(&(q.clone() - S::one()).pow(n as u32))?;
    Ok(series.scale(&scale))
}

fn check_pole<S: Scalar>(n: usize, z: &S) -> Result<()> {
    if (0..=n as i64 + 1).any(|k| *z == S::from_int(k)) {
        return Err(Error::PoleEvaluation);
    }
    Ok(())
}

/// `V_n(z) = (n+1)! / ((1-q)^n (-z)_{n+2}) * 2F1(-n, -z; -1-n; 1-q)`.
pub fn exp_v_eval<S: Scalar>(problem: &ExpGridProblem<S>, n: usize, z: &S) -> Result<S> {
    problem.check_degree(n)?;
    check_pole(n, z)?;
    let q = &problem.q;
    let hyper = terminating_2f1(n, &-z.clone(), &S::from_int(-1 - n as i64), &(S::one() - q.clone()))?;
    let den = (S::one() - q.clone()).pow(n as u32) * pochhammer(&-z.clone(), n + 2);
    (factorial::<S>(n + 1) * hyper).checked_div(&den)
}

/// `V_n(z) = 1 / ((1-q)^n z (z-1)) * 2F1(-n, -z; 2-z; q)`.
pub fn exp_v_alt_eval<S: Scalar>(problem: &ExpGridProblem<S>, n: usize, z: &S) -> Result<S> {
    problem.check_degree(n)?;
    check_pole(n, z)?;
    let q = &problem.q;
    let hyper = terminating_2f1(n, &-z.clone(), &(S::from_int(2) - z.clone()), q)?;
    let den = (S::one() - q.clone()).pow(n as u32) * z.clone() * (z.clone() - S::one());
    hyper.checked_div(&den)
}
