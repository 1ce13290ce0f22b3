//! Rational functions biorthogonal to the monic interpolants.
//!
//! From a monic family build `T_n = P̂_{n+1} - (z - a_{n+1}) P̂_n`, whose
//! degree-`n` coefficient is `nu_n`, normalize `T̂_n = T_n / nu_n`, and set
//! `V_n = T̂_n / omega_{n+2}`. `V_n` has simple poles exactly at
//! `a_0..a_{n+1}`.
//!
//! The pairing of a polynomial `p` with `V_m` is the residue sum of
//! `p(z) V_m(z) / F(z)` over those poles, i.e. the `(2 pi i)^{-1}`-normalized
//! contour integral around them:
//!
//! ```text
//! <p, V_m> = sum_{s=0}^{m+1} p(a_s) T̂_m(a_s) / (A_s omega'_{m+2}(a_s))
//! ```
//!
//! `<P̂_n, V_m>` vanishes for `n != m` and equals `-1 / (nu_n alpha_n)` on the
//! diagonal. The often-quoted diagonal value `1 / alpha_n` is off by the
//! factor `-1/nu_n`: splitting `T_n` gives `<P̂_n, P̂_{n+1}/omega_{n+2}> = 0`
//! and `<P̂_n, P̂_n/omega_{n+1}> = 1/alpha_n`, and the second term enters
//! with a minus sign before the `1/nu_n` normalization.

use crate::divided::Samples;
use crate::error::{Error, Result};
use crate::interpolation::MonicInterpolantFamily;
use crate::numerics::Scalar;
use crate::polynomial::{nodal_derivative_at, nodal_polynomial, Grid, Polynomial};

/// `V_n = T̂_n / omega_{n+2}`, kept as numerator plus pole nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalInterpolant<S> {
    index: usize,
    numerator: Polynomial<S>,
    pole_nodes: Grid<S>,
}

impl<S: Scalar> RationalInterpolant<S> {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn numerator(&self) -> &Polynomial<S> {
        &self.numerator
    }

    pub fn pole_nodes(&self) -> &Grid<S> {
        &self.pole_nodes
    }

    pub fn denominator(&self) -> Polynomial<S> {
        nodal_polynomial(&self.pole_nodes, self.pole_nodes.len()).expect("full grid")
    }

    pub fn eval(&self, z: &S) -> Result<S> {
        let den = self
            .pole_nodes
            .nodes()
            .iter()
            .fold(S::one(), |acc, a| acc * (z.clone() - a.clone()));
        if den.is_zero() {
            return Err(Error::PoleEvaluation);
        }
        self.numerator.eval(z).checked_div(&den)
    }

    /// Residue of `V_n` at its pole `a_s`: `T̂_n(a_s) / omega'_{n+2}(a_s)`.
    pub fn residue(&self, s: usize) -> Result<S> {
        let w = nodal_derivative_at(&self.pole_nodes, self.pole_nodes.len(), s)?;
        self.numerator.eval(&self.pole_nodes.nodes()[s]).checked_div(&w)
    }
}

/// `T_n = P̂_{n+1} - (z - a_{n+1}) P̂_n`.
pub fn t_polynomial<S: Scalar>(family: &MonicInterpolantFamily<S>, n: usize) -> Result<Polynomial<S>> {
    let next = family.phat(n + 1)?;
    let a = family.grid().node(n + 1)?;
    Ok(next - &(&Polynomial::linear_factor(a.clone()) * family.phat(n)?))
}

/// `nu_n = a_{n+1} - a_n + alpha_n/alpha_{n+1} - alpha_{n-1}/alpha_n`.
pub fn leading_nu<S: Scalar>(family: &MonicInterpolantFamily<S>, n: usize) -> Result<S> {
    let grid = family.grid();
    let spacing = grid.node(n + 1)?.clone() - grid.node(n)?.clone();
    Ok(spacing + family.ratio(n)? - family.ratio_prev(n)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BiorthogonalSystem<S> {
    family: MonicInterpolantFamily<S>,
    ts: Vec<Polynomial<S>>,
    nus: Vec<S>,
    vs: Vec<RationalInterpolant<S>>,
    diagonal: Vec<S>,
}

impl<S: Scalar> BiorthogonalSystem<S> {
    pub fn family(&self) -> &MonicInterpolantFamily<S> {
        &self.family
    }

    /// Monic `T̂_n`.
    pub fn ts(&self) -> &[Polynomial<S>] {
        &self.ts
    }

    pub fn nus(&self) -> &[S] {
        &self.nus
    }

    pub fn vs(&self) -> &[RationalInterpolant<S>] {
        &self.vs
    }

    /// `<P̂_n, V_n>` computed as residue sums at construction.
    pub fn diagonal(&self) -> &[S] {
        &self.diagonal
    }

    pub fn n_max(&self) -> usize {
        self.vs.len() - 1
    }

    pub fn v(&self, m: usize) -> Result<&RationalInterpolant<S>> {
        self.vs.get(m).ok_or(Error::IndexOutOfRange {
            index: m,
            limit: self.vs.len(),
        })
    }

    /// Closed form of the diagonal, `-1 / (nu_n alpha_n)`.
    pub fn diagonal_formula(&self, n: usize) -> Result<S> {
        let nu = self.nus.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            limit: self.nus.len(),
        })?;
        let prod = nu.clone() * self.family.alpha(n)?.clone();
        Ok(-prod.recip()?)
    }
}

/// Builds `T̂_n`, `nu_n` and `V_n` for `n = 0..=n_max`.
///
/// Needs `P̂_{n_max+1}`, so the family must reach degree `n_max + 1`.
pub fn build_system<S: Scalar>(family: &MonicInterpolantFamily<S>, n_max: usize) -> Result<BiorthogonalSystem<S>> {
    if n_max + 1 > family.n_max() {
        return Err(Error::IndexOutOfRange {
            index: n_max + 1,
            limit: family.n_max() + 1,
        });
    }
    let samples = family.samples();
    let mut ts = Vec::with_capacity(n_max + 1);
    let mut nus = Vec::with_capacity(n_max + 1);
    let mut vs = Vec::with_capacity(n_max + 1);
    let mut diagonal = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let t = t_polynomial(family, n)?;
        let nu = t.coeff(n);
        if nu.is_zero() {
            return Err(Error::NuVanishes(n));
        }
        let that = t.div_scalar(&nu)?;
        let v = RationalInterpolant {
            index: n,
            numerator: that.clone(),
            pole_nodes: family.grid().prefix(n + 2)?,
        };
        diagonal.push(pairing(family.phat(n)?, &v, &samples)?);
        ts.push(that);
        nus.push(nu);
        vs.push(v);
    }
    Ok(BiorthogonalSystem {
        family: family.clone(),
        ts,
        nus,
        vs,
        diagonal,
    })
}

/// Residue-sum pairing `<p, V_m>` weighted by `1/F`.
///
/// Only the samples at the poles `a_0..a_{m+1}` enter; extra samples are
/// ignored.
pub fn pairing<S: Scalar>(p: &Polynomial<S>, v: &RationalInterpolant<S>, samples: &Samples<S>) -> Result<S> {
    let poles = v.pole_nodes.nodes();
    if samples.len() < poles.len() || samples.nodes()[..poles.len()] != *poles {
        return Err(Error::InconsistentSamples(v.index));
    }
    let mut acc = S::zero();
    for (s, (a, value)) in poles.iter().zip(samples.values()).enumerate() {
        if value.is_zero() {
            return Err(Error::ZeroSampleValue(s));
        }
        let term = (p.eval(a) * v.residue(s)?).checked_div(value)?;
        acc = acc + term;
    }
    Ok(acc)
}

/// `I_{nj} = sum_{s<=n} a_s^j P̂_n(a_s) / (A_s omega'_{n+1}(a_s))`, which
/// equals `delta_{nj} / alpha_n` for `j <= n`.
pub fn orthogonality_moment<S: Scalar>(family: &MonicInterpolantFamily<S>, n: usize, j: usize) -> Result<S> {
    if j > n {
        return Err(Error::IndexOutOfRange { index: j, limit: n + 1 });
    }
    let phat = family.phat(n)?;
    let grid = family.grid();
    let mut acc = S::zero();
    for (s, (a, value)) in grid.nodes()[..=n].iter().zip(family.values()).enumerate() {
        if value.is_zero() {
            return Err(Error::ZeroSampleValue(s));
        }
        let den = value.clone() * nodal_derivative_at(grid, n + 1, s)?;
        acc = acc + (a.pow(j as u32) * phat.eval(a)).checked_div(&den)?;
    }
    Ok(acc)
}

/// Matrix of `<P̂_n, V_m>` for `n, m <= n_max`; row index `n`.
pub fn biorthogonality_matrix<S: Scalar>(
    system: &BiorthogonalSystem<S>,
    samples: &Samples<S>,
    n_max: usize,
) -> Result<Vec<Vec<S>>> {
    if n_max > system.n_max() {
        return Err(Error::IndexOutOfRange {
            index: n_max,
            limit: system.n_max() + 1,
        });
    }
    let family = system.family();
    (0..=n_max)
        .map(|n| {
            let p = family.phat(n)?;
            (0..=n_max).map(|m| pairing(p, &system.vs[m], samples)).collect()
        })
        .collect()
}

/// Coefficients `xi_k` with `q = sum_k xi_k P̂_k`, from
/// `xi_k = <q, V_k> / <P̂_k, V_k>`.
pub fn expand_in_interpolants<S: Scalar>(
    q: &Polynomial<S>,
    system: &BiorthogonalSystem<S>,
    samples: &Samples<S>,
) -> Result<Vec<S>> {
    let Some(n) = q.degree() else {
        return Ok(Vec::new());
    };
    if n > system.n_max() {
        return Err(Error::IndexOutOfRange {
            index: n,
            limit: system.n_max() + 1,
        });
    }
    (0..=n)
        .map(|k| pairing(q, &system.vs[k], samples)?.checked_div(&system.diagonal[k]))
        .collect()
}

/// `sum_k xi_k P̂_k`.
pub fn reconstruct<S: Scalar>(xi: &[S], family: &MonicInterpolantFamily<S>) -> Result<Polynomial<S>> {
    xi.iter().enumerate().try_fold(Polynomial::zero(), |acc, (k, x)| {
        Ok(&acc + &family.phat(k)?.scale(x))
    })
}

/// `alpha_k` times the residue sum of `q V_k` with no `1/F` weight.
///
/// This is the unweighted coefficient formula that is sometimes quoted for
/// the expansion; it does not reconstruct `q` in general and is kept only so
/// reports can show the discrepancy.
pub fn unweighted_expansion<S: Scalar>(q: &Polynomial<S>, system: &BiorthogonalSystem<S>) -> Result<Vec<S>> {
    let Some(n) = q.degree() else {
        return Ok(Vec::new());
    };
    if n > system.n_max() {
        return Err(Error::IndexOutOfRange {
            index: n,
            limit: system.n_max() + 1,
        });
    }
    (0..=n)
        .map(|k| {
            let v = &system.vs[k];
            let mut acc = S::zero();
            for (s, a) in v.pole_nodes.nodes().iter().enumerate() {
                acc = acc + q.eval(a) * v.residue(s)?;
            }
            Ok(system.family.alpha(k)?.clone() * acc)
        })
        .collect()
}
