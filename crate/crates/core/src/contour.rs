//! Trapezoidal quadrature of `(2 pi i)^{-1} ∮ f(ζ) dζ` over circles.
//!
//! With `ζ_j = c + r e^{2 pi i j / M}` the rule reduces to
//! `(1/M) sum_j f(ζ_j) (ζ_j - c)`, which converges geometrically when `f` is
//! analytic in an annulus around the circle. Used only in `f64` to connect
//! residue sums with their contour-integral form.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::biortho::build_system;
use crate::divided::Samples;
use crate::error::{Error, Result};
use crate::interpolation::monic_family;
use crate::polynomial::{Grid, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexSample {
    pub re: f64,
    pub im: f64,
}

impl ComplexSample {
    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Distance to a real number.
    pub fn distance_to(&self, x: f64) -> f64 {
        (self.re - x).hypot(self.im)
    }
}

impl From<Complex64> for ComplexSample {
    fn from(c: Complex64) -> Self {
        ComplexSample { re: c.re, im: c.im }
    }
}

impl From<ComplexSample> for Complex64 {
    fn from(c: ComplexSample) -> Self {
        Complex64::new(c.re, c.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Circle {
    center_re: f64,
    center_im: f64,
    radius: f64,
    sample_count: usize,
}

impl Circle {
    pub const MIN_SAMPLES: usize = 16;
    pub const DEFAULT_SAMPLES: usize = 2048;

    pub fn new(center: (f64, f64), radius: f64, sample_count: usize) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidCircle(format!("radius {radius}")));
        }
        if !(center.0.is_finite() && center.1.is_finite()) {
            return Err(Error::InvalidCircle("non-finite center".into()));
        }
        if sample_count < Self::MIN_SAMPLES || !sample_count.is_power_of_two() {
            return Err(Error::InvalidCircle(format!(
                "sample count {sample_count} must be a power of two >= {}",
                Self::MIN_SAMPLES
            )));
        }
        Ok(Circle {
            center_re: center.0,
            center_im: center.1,
            radius,
            sample_count,
        })
    }

    /// Centered on the midpoint of `[lo, hi]` with radius `(hi - lo) + 5`.
    pub fn enclosing(lo: f64, hi: f64, sample_count: usize) -> Result<Self> {
        Circle::new(((lo + hi) / 2.0, 0.0), (hi - lo) + 5.0, sample_count)
    }

    pub fn center(&self) -> (f64, f64) {
        (self.center_re, self.center_im)
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn sample_count(&self) -> usize {
        self.sample_count
    }

    pub fn with_radius(&self, radius: f64) -> Result<Self> {
        Circle::new(self.center(), radius, self.sample_count)
    }

    pub fn with_samples(&self, sample_count: usize) -> Result<Self> {
        Circle::new(self.center(), self.radius, sample_count)
    }

    /// Whether every point lies strictly inside.
    pub fn encloses(&self, points: &[f64]) -> bool {
        points
            .iter()
            .all(|&x| (x - self.center_re).hypot(self.center_im) < self.radius)
    }

    fn center_c(&self) -> Complex64 {
        Complex64::new(self.center_re, self.center_im)
    }
}

/// Sums in a fixed binary tree so results do not depend on how evaluation
/// is partitioned.
fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    match values.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => values[0],
        n => {
            let (lo, hi) = values.split_at(n / 2);
            pairwise_sum(lo) + pairwise_sum(hi)
        }
    }
}

/// `(2 pi i)^{-1} ∮ f(ζ) dζ` by the trapezoid rule.
pub fn contour_integral<F>(integrand: F, circle: &Circle) -> Result<ComplexSample>
where
    F: Fn(Complex64) -> Complex64,
{
    let m = circle.sample_count;
    let c = circle.center_c();
    let terms = (0..m)
        .map(|j| {
            let offset = Complex64::from_polar(circle.radius, TAU * j as f64 / m as f64);
            let value = integrand(c + offset) * offset;
            if value.re.is_finite() && value.im.is_finite() {
                Ok(value)
            } else {
                Err(Error::NonFiniteSample(j))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((pairwise_sum(&terms) / m as f64).into())
}

fn eval_complex(p: &Polynomial<f64>, z: Complex64) -> Complex64 {
    p.coeffs()
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// `prod_{i<k} (z - i)`.
fn integer_nodal(k: usize, z: Complex64) -> Complex64 {
    (0..k).fold(Complex64::new(1.0, 0.0), |acc, i| acc * (z - i as f64))
}

/// Hermite's contour form of `[0, 1, ..., k]` for `F(ζ) = e^{hζ}`:
/// `(2 pi i)^{-1} ∮ e^{hζ} / omega_{k+1}(ζ) dζ`.
pub fn hermite_divided_difference(h: f64, k: usize, circle: &Circle) -> Result<ComplexSample> {
    check_enclosed(circle, k)?;
    contour_integral(|z| (z * h).exp() / integer_nodal(k + 1, z), circle)
}

/// `(2 pi i)^{-1} ∮ P̂_n(ζ) V_m(ζ) e^{-hζ} dζ` for `F(ζ) = e^{hζ}` on the
/// integer grid, with `P̂_n` and `V_m` built in `f64` by the generic code.
pub fn contour_biortho_check(h: f64, n: usize, m: usize, circle: &Circle) -> Result<ComplexSample> {
    let top = n.max(m + 1);
    check_enclosed(circle, top)?;
    let samples = exp_samples_f64(h, top + 1)?;
    let family = monic_family(&samples, top)?;
    let system = build_system(&family, m)?;
    let phat = family.phat(n)?.clone();
    let that = system.ts()[m].clone();
    contour_integral(
        |z| eval_complex(&phat, z) * eval_complex(&that, z) / integer_nodal(m + 2, z) * (-z * h).exp(),
        circle,
    )
}

/// `A_k = e^{hk}` at `a_k = k` for `k < count`.
pub fn exp_samples_f64(h: f64, count: usize) -> Result<Samples<f64>> {
    let grid = Grid::integers(count);
    Ok(Samples::from_fn(grid, |x| (h * x).exp()))
}

fn check_enclosed(circle: &Circle, top: usize) -> Result<()> {
    let nodes: Vec<f64> = (0..=top).map(|k| k as f64).collect();
    if !circle.encloses(&nodes) {
        return Err(Error::InvalidCircle(format!("does not enclose 0..={top}")));
    }
    Ok(())
}
