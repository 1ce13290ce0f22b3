#![allow(dead_code)]

use lagrange_biortho::{build_system, monic_family, BiorthogonalSystem, Error, MonicInterpolantFamily, Polynomial, Rational, Samples, Scalar};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn r(p: i64, q: i64) -> Rational {
    Rational::from_ratio(p, q).unwrap()
}

pub fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| Rational::from(x)).collect()
}

pub fn worked_example() -> Samples<Rational> {
    Samples::from_pairs(ints(&[0, 1, 2]), ints(&[1, 2, 5])).unwrap()
}

/// Random samples with `N <= 8`, distinct nodes from -5..=5, nonzero values
/// from -9..=9 and every `alpha_n` nonzero.
pub fn corpus(seed: u64, count: usize) -> Vec<Samples<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<i64> = (-5..=5).collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=8usize);
        let nodes: Vec<i64> = pool.choose_multiple(&mut rng, n + 1).copied().collect();
        let values: Vec<i64> = (0..=n)
            .map(|_| {
                let v = rng.gen_range(1..=9i64);
                if rng.gen_bool(0.5) {
                    v
                } else {
                    -v
                }
            })
            .collect();
        let samples = Samples::from_pairs(ints(&nodes), ints(&values)).unwrap();
        if monic_family(&samples, n).is_ok() {
            out.push(samples);
        }
    }
    out
}

/// Largest system (up to `cap`) the samples support: stops before the first
/// vanishing `nu_n`.
pub fn largest_system(
    samples: &Samples<Rational>,
    cap: usize,
) -> Option<(MonicInterpolantFamily<Rational>, BiorthogonalSystem<Rational>)> {
    let n_top = samples.len() - 1;
    if n_top == 0 {
        return None;
    }
    let family = monic_family(samples, n_top).ok()?;
    let mut n_max = cap.min(n_top - 1);
    loop {
        match build_system(&family, n_max) {
            Ok(system) => return Some((family, system)),
            Err(Error::NuVanishes(k)) if k > 0 => n_max = k - 1,
            Err(_) => return None,
        }
    }
}

/// Coefficients of `q` in the monic basis `phats` by back substitution on
/// the leading coefficients. Independent of any pairing.
pub fn triangular_solve<S: Scalar>(q: &Polynomial<S>, phats: &[Polynomial<S>]) -> Vec<S> {
    let Some(n) = q.degree() else {
        return Vec::new();
    };
    let mut rest = q.clone();
    let mut xi = vec![S::zero(); n + 1];
    for k in (0..=n).rev() {
        let c = rest.coeff(k);
        rest = &rest - &phats[k].scale(&c);
        xi[k] = c;
    }
    assert!(rest.is_zero());
    xi
}

/// Residue sum straight from the definition of V_m: partial fractions of
/// `p(z) T̂_m(z) / omega_{m+2}(z)` weighted by `1/A_s`. Uses only
/// polynomial evaluation and products over the nodes.
pub fn brute_pairing(
    p: &Polynomial<Rational>,
    t_hat: &Polynomial<Rational>,
    m: usize,
    samples: &Samples<Rational>,
) -> Rational {
    let nodes = samples.nodes();
    let mut acc = Rational::from(0);
    for s in 0..m + 2 {
        let mut w = Rational::from(1);
        for i in 0..m + 2 {
            if i != s {
                w = w * (nodes[s].clone() - nodes[i].clone());
            }
        }
        let num = p.eval(&nodes[s]) * t_hat.eval(&nodes[s]);
        acc = acc + num.checked_div(&(w * samples.values()[s].clone())).unwrap();
    }
    acc
}

pub fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> Polynomial<Rational> {
    let mut coeffs: Vec<Rational> = (0..=degree)
        .map(|_| r(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
        .collect();
    if coeffs[degree] == Rational::from(0) {
        coeffs[degree] = Rational::from(1);
    }
    Polynomial::new(coeffs)
}
