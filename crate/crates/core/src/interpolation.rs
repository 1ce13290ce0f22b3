//! Lagrange-form interpolants, monic interpolants and the R_I-type
//! three-term recurrence that generates them.
//!
//! With `alpha_n = [a_0..a_n]` and `P̂_n = P_n / alpha_n`,
//!
//! ```text
//! P̂_{n+1} = (z - a_n + alpha_n/alpha_{n+1}) P̂_n - (alpha_{n-1}/alpha_n)(z - a_n) P̂_{n-1}
//! ```
//!
//! starting from `P̂_{-1} = 0`, `P̂_0 = 1` (with `alpha_{-1}/alpha_0 := 0`).
//! Conversely any nonzero `alpha` sequence fed through the recurrence yields
//! the monic interpolants of the data `A_n = sum_{s<=n} alpha_s omega_s(a_n)`.

use crate::divided::{divided_differences_recursive, Samples};
use crate::error::{Error, Result};
use crate::numerics::Scalar;
use crate::polynomial::{nodal_derivative_at, nodal_polynomial, nodal_value, Grid, Polynomial};

/// `P_n(z) = omega_{n+1}(z) sum_k A_k / ((z - a_k) omega'_{n+1}(a_k))`.
///
/// Each `omega_{n+1} / (z - a_k)` is formed by exact synthetic division, so
/// the result is a coefficient sequence comparable with the Newton route.
pub fn lagrange_interpolant<S: Scalar>(samples: &Samples<S>, n: usize) -> Result<Polynomial<S>> {
    if n >= samples.len() {
        return Err(Error::IndexOutOfRange {
            index: n,
            limit: samples.len(),
        });
    }
    let grid = samples.grid();
    let omega = nodal_polynomial(grid, n + 1)?;
    let mut acc = Polynomial::zero();
    for (k, value) in samples.values()[..=n].iter().enumerate() {
        let (basis, remainder) = omega.div_linear(&grid.nodes()[k]);
        debug_assert!(remainder.is_zero());
        let weight = value.checked_div(&nodal_derivative_at(grid, n + 1, k)?)?;
        acc = &acc + &basis.scale(&weight);
    }
    Ok(acc)
}

/// Monic interpolants `P̂_0..P̂_N` together with their normalizers `alpha_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonicInterpolantFamily<S> {
    grid: Grid<S>,
    values: Vec<S>,
    alphas: Vec<S>,
    phats: Vec<Polynomial<S>>,
}

impl<S: Scalar> MonicInterpolantFamily<S> {
    pub fn grid(&self) -> &Grid<S> {
        &self.grid
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn alphas(&self) -> &[S] {
        &self.alphas
    }

    pub fn phats(&self) -> &[Polynomial<S>] {
        &self.phats
    }

    /// Highest degree `N` in the family.
    pub fn n_max(&self) -> usize {
        self.phats.len() - 1
    }

    pub fn samples(&self) -> Samples<S> {
        Samples::new(self.grid.clone(), self.values.clone()).expect("family lengths agree")
    }

    pub fn alpha(&self, n: usize) -> Result<&S> {
        self.alphas.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            limit: self.alphas.len(),
        })
    }

    pub fn phat(&self, n: usize) -> Result<&Polynomial<S>> {
        self.phats.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            limit: self.phats.len(),
        })
    }

    /// `alpha_n / alpha_{n+1}`.
    pub fn ratio(&self, n: usize) -> Result<S> {
        self.alpha(n)?.checked_div(self.alpha(n + 1)?)
    }

    /// `alpha_{n-1} / alpha_n`, zero at `n = 0`.
    pub fn ratio_prev(&self, n: usize) -> Result<S> {
        match n {
            0 => Ok(S::zero()),
            _ => self.alpha(n - 1)?.checked_div(self.alpha(n)?),
        }
    }

    /// `P_n = alpha_n P̂_n`.
    pub fn interpolant(&self, n: usize) -> Result<Polynomial<S>> {
        Ok(self.phat(n)?.scale(self.alpha(n)?))
    }
}

/// Builds `P̂_n = P_n / alpha_n` for `n = 0..=n_max`.
pub fn monic_family<S: Scalar>(samples: &Samples<S>, n_max: usize) -> Result<MonicInterpolantFamily<S>> {
    if n_max >= samples.len() {
        return Err(Error::IndexOutOfRange {
            index: n_max,
            limit: samples.len(),
        });
    }
    let samples = samples.prefix(n_max + 1)?;
    let alphas = divided_differences_recursive(&samples)?.into_vec();
    if let Some(n) = alphas.iter().position(|a| a.is_zero()) {
        return Err(Error::DegenerateInterpolant(n));
    }
    let grid = samples.grid();
    // P_n = P_{n-1} + alpha_n omega_n, so accumulate the Newton sum once.
    let mut phats = Vec::with_capacity(n_max + 1);
    let mut newton = Polynomial::zero();
    for (n, alpha) in alphas.iter().enumerate() {
        newton = &newton + &nodal_polynomial(grid, n)?.scale(alpha);
        phats.push(newton.div_scalar(alpha)?);
    }
    Ok(MonicInterpolantFamily {
        grid: grid.clone(),
        values: samples.values().to_vec(),
        alphas,
        phats,
    })
}

/// One step of the recurrence:
/// `P̂_{n+1} = (z - a_n + ratio_n) P̂_n - ratio_nm1 (z - a_n) P̂_{n-1}`
/// with `ratio_n = alpha_n/alpha_{n+1}` and `ratio_nm1 = alpha_{n-1}/alpha_n`.
pub fn recurrence_step<S: Scalar>(
    phat_n: &Polynomial<S>,
    phat_nm1: &Polynomial<S>,
    a_n: &S,
    ratio_n: &S,
    ratio_nm1: &S,
) -> Polynomial<S> {
    let shifted = Polynomial::linear_factor(a_n.clone());
    let lead = &shifted + &Polynomial::constant(ratio_n.clone());
    let first = &lead * phat_n;
    let second = (&shifted * phat_nm1).scale(ratio_nm1);
    &first - &second
}

/// Generates `P̂_0..P̂_{n_max}` from the recurrence with arbitrary nonzero
/// `alphas` and recovers the data they interpolate,
/// `A_n = sum_{s<=n} alpha_s omega_s(a_n)`.
pub fn family_from_recurrence<S: Scalar>(
    grid: &Grid<S>,
    alphas: &[S],
    n_max: usize,
) -> Result<MonicInterpolantFamily<S>> {
    if alphas.len() <= n_max {
        return Err(Error::IndexOutOfRange {
            index: n_max,
            limit: alphas.len(),
        });
    }
    let grid = grid.prefix(n_max + 1)?;
    let alphas = alphas[..=n_max].to_vec();
    if let Some(n) = alphas.iter().position(|a| a.is_zero()) {
        return Err(Error::DegenerateInput(n));
    }

    let mut phats = Vec::with_capacity(n_max + 1);
    phats.push(Polynomial::one());
    let mut prev = Polynomial::zero();
    for n in 0..n_max {
        let ratio_n = alphas[n].checked_div(&alphas[n + 1])?;
        let ratio_nm1 = match n {
            0 => S::zero(),
            _ => alphas[n - 1].checked_div(&alphas[n])?,
        };
        let next = recurrence_step(&phats[n], &prev, &grid.nodes()[n], &ratio_n, &ratio_nm1);
        prev = phats[n].clone();
        phats.push(next);
    }

    let mut values = Vec::with_capacity(n_max + 1);
    for (n, a_n) in grid.nodes().iter().enumerate() {
        let mut acc = S::zero();
        for (s, alpha) in alphas[..=n].iter().enumerate() {
            acc = acc + alpha.clone() * nodal_value(&grid, s, a_n)?;
        }
        values.push(acc);
    }

    Ok(MonicInterpolantFamily {
        grid,
        values,
        alphas,
        phats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divided::newton_interpolant;
    use crate::numerics::Rational;

    fn q(p: i64, d: i64) -> Rational {
        Rational::from_ratio(p, d).unwrap()
    }

    fn poly(c: &[Rational]) -> Polynomial<Rational> {
        Polynomial::new(c.to_vec())
    }

    fn samples(nodes: &[i64], values: &[i64]) -> Samples<Rational> {
        Samples::from_pairs(
            nodes.iter().map(|&x| Rational::from(x)).collect(),
            values.iter().map(|&x| Rational::from(x)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn lagrange_examples() {
        let s = samples(&[0, 1, 2], &[1, 2, 5]);
        assert_eq!(lagrange_interpolant(&s, 2).unwrap(), poly(&[q(1, 1), q(0, 1), q(1, 1)]));
        let s = samples(&[0, 1], &[0, 1]);
        assert_eq!(lagrange_interpolant(&s, 1).unwrap(), poly(&[q(0, 1), q(1, 1)]));
        // 2^z data: 1 + 5z/6 + z^3/6
        let s = samples(&[0, 1, 2, 3], &[1, 2, 4, 8]);
        let expected = poly(&[q(1, 1), q(5, 6), q(0, 1), q(1, 6)]);
        assert_eq!(lagrange_interpolant(&s, 3).unwrap(), expected);
        assert_eq!(newton_interpolant(&s, 3).unwrap(), expected);
        assert!(lagrange_interpolant(&s, 4).is_err());
    }

    #[test]
    fn monic_family_examples() {
        let fam = monic_family(&samples(&[0, 1, 2], &[1, 2, 5]), 2).unwrap();
        assert_eq!(fam.alphas(), &[q(1, 1), q(1, 1), q(1, 1)]);
        assert_eq!(fam.phats()[0], Polynomial::one());
        assert_eq!(fam.phats()[1], poly(&[q(1, 1), q(1, 1)]));
        assert_eq!(fam.phats()[2], poly(&[q(1, 1), q(0, 1), q(1, 1)]));

        assert_eq!(
            monic_family(&samples(&[0, 1], &[1, 1]), 1),
            Err(Error::DegenerateInterpolant(1))
        );

        let s = samples(&[0, 1, 2, 3], &[1, 2, 4, 8]);
        let fam = monic_family(&s, 3).unwrap();
        assert_eq!(fam.alphas(), &[q(1, 1), q(1, 1), q(1, 2), q(1, 6)]);
        for n in 0..=3 {
            assert!(fam.phats()[n].is_monic());
            assert_eq!(fam.phats()[n].degree(), Some(n));
            for k in 0..=n {
                let a_k = Rational::from(k as i64);
                assert_eq!(fam.alphas()[n].clone() * fam.phats()[n].eval(&a_k), s.values()[k]);
            }
        }
    }

    #[test]
    fn zero_first_value_is_degenerate() {
        assert_eq!(
            monic_family(&samples(&[0, 1], &[0, 1]), 1),
            Err(Error::DegenerateInterpolant(0))
        );
    }

    #[test]
    fn recurrence_step_examples() {
        let one = Polynomial::<Rational>::one();
        let z_plus_1 = poly(&[q(1, 1), q(1, 1)]);
        let step0 = recurrence_step(&one, &Polynomial::zero(), &q(0, 1), &q(1, 1), &q(0, 1));
        assert_eq!(step0, z_plus_1);
        let step1 = recurrence_step(&z_plus_1, &one, &q(1, 1), &q(1, 1), &q(1, 1));
        assert_eq!(step1, poly(&[q(1, 1), q(0, 1), q(1, 1)]));
        // vanishing second term
        let p = poly(&[q(2, 1), q(-1, 3), q(1, 1)]);
        let got = recurrence_step(&p, &Polynomial::zero(), &q(5, 1), &q(7, 2), &q(0, 1));
        let lead = poly(&[q(-5, 1) + q(7, 2), q(1, 1)]);
        assert_eq!(got, &lead * &p);
    }

    #[test]
    fn family_from_recurrence_examples() {
        let grid = Grid::integers(3);
        let fam = family_from_recurrence(&grid, &[q(1, 1), q(1, 1), q(1, 1)], 2).unwrap();
        assert_eq!(fam.values(), &[q(1, 1), q(2, 1), q(5, 1)]);
        assert_eq!(fam.phats()[2], poly(&[q(1, 1), q(0, 1), q(1, 1)]));

        let (c, d) = (q(-3, 4), q(5, 2));
        let fam = family_from_recurrence(&Grid::integers(2), &[c.clone(), d.clone()], 1).unwrap();
        assert_eq!(fam.values(), &[c.clone(), c + d]);

        let fam =
            family_from_recurrence(&Grid::integers(4), &[q(1, 1), q(1, 1), q(1, 2), q(1, 6)], 3)
                .unwrap();
        assert_eq!(fam.values(), &[q(1, 1), q(2, 1), q(4, 1), q(8, 1)]);
    }

    #[test]
    fn family_from_recurrence_rejects_zero_alpha() {
        let grid = Grid::<Rational>::integers(3);
        assert_eq!(
            family_from_recurrence(&grid, &[q(1, 1), q(0, 1), q(1, 1)], 2),
            Err(Error::DegenerateInput(1))
        );
        assert!(matches!(
            family_from_recurrence(&grid, &[q(1, 1), q(1, 1)], 2),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            family_from_recurrence(&Grid::integers(2), &[q(1, 1), q(1, 1), q(1, 1)], 2),
            Err(Error::InsufficientNodes { .. })
        ));
    }

    #[test]
    fn float_family_matches_exact() {
        let exact = monic_family(&samples(&[0, 1, 2, 3], &[1, 2, 4, 8]), 3).unwrap();
        let floats = Samples::from_pairs(vec![0.0, 1.0, 2.0, 3.0], vec![1.0, 2.0, 4.0, 8.0]).unwrap();
        let fam = monic_family(&floats, 3).unwrap();
        let tol = crate::numerics::Tolerance::default();
        for n in 0..=3 {
            let as_float = exact.phats()[n].map(|c| c.to_f64());
            assert!(fam.phats()[n].approx_eq(&as_float, &tol));
        }
    }
}
