//! Newton divided differences by two independent routes, and the Newton-form
//! interpolant.

use crate::error::{Error, Result};
use crate::numerics::Scalar;
use crate::polynomial::{nodal_derivative_at, Grid, Polynomial};

/// Grid plus sampled values `A_k = F(a_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Samples<S> {
    grid: Grid<S>,
    values: Vec<S>,
}

impl<S: Scalar> Samples<S> {
    pub fn new(grid: Grid<S>, values: Vec<S>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::LengthMismatch {
                nodes: grid.len(),
                values: values.len(),
            });
        }
        Ok(Samples { grid, values })
    }

    pub fn from_pairs(nodes: Vec<S>, values: Vec<S>) -> Result<Self> {
        Samples::new(Grid::new(nodes)?, values)
    }

    /// Samples `f` on the given grid.
    pub fn from_fn(grid: Grid<S>, f: impl Fn(&S) -> S) -> Self {
        let values = grid.nodes().iter().map(f).collect();
        Samples { grid, values }
    }

    pub fn grid(&self) -> &Grid<S> {
        &self.grid
    }

    pub fn nodes(&self) -> &[S] {
        self.grid.nodes()
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The first `count` samples.
    pub fn prefix(&self, count: usize) -> Result<Self> {
        Ok(Samples {
            grid: self.grid.prefix(count)?,
            values: self.values[..count].to_vec(),
        })
    }

    pub fn push(&self, node: S, value: S) -> Result<Self> {
        let mut values = self.values.clone();
        values.push(value);
        Ok(Samples {
            grid: self.grid.push(node)?,
            values,
        })
    }

    /// Every value multiplied by `c`.
    pub fn scaled(&self, c: &S) -> Self {
        Samples {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                limit: self.len(),
            });
        }
        Ok(())
    }
}

/// Leading divided differences `[a_0], [a_0,a_1], ..., [a_0..a_N]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DividedDifferenceTable<S> {
    diffs: Vec<S>,
}

impl<S: Scalar> DividedDifferenceTable<S> {
    pub fn get(&self, k: usize) -> Option<&S> {
        self.diffs.get(k)
    }

    pub fn as_slice(&self) -> &[S] {
        &self.diffs
    }

    pub fn into_vec(self) -> Vec<S> {
        self.diffs
    }

    pub fn len(&self) -> usize {
        self.diffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diffs.is_empty()
    }
}

/// Divided-difference triangle, keeping the top edge.
///
/// Column `j` holds `[a_i..a_{i+j}]`; the column is updated in place from the
/// bottom so each step needs only the previous column.
pub fn divided_differences_recursive<S: Scalar>(samples: &Samples<S>) -> Result<DividedDifferenceTable<S>> {
    let nodes = samples.nodes();
    let n = samples.len();
    let mut column = samples.values().to_vec();
    let mut diffs = Vec::with_capacity(n);
    for j in 0..n {
        diffs.push(column[0].clone());
        for i in 0..n.saturating_sub(j + 1) {
            let num = column[i + 1].clone() - column[i].clone();
            let den = nodes[i + j + 1].clone() - nodes[i].clone();
            column[i] = num.checked_div(&den)?;
        }
    }
    Ok(DividedDifferenceTable { diffs })
}

/// `[a_0..a_k] = sum_{s<=k} A_s / omega'_{k+1}(a_s)`.
pub fn divided_difference_sum<S: Scalar>(samples: &Samples<S>, k: usize) -> Result<S> {
    samples.check_index(k)?;
    let mut acc = S::zero();
    for (s, value) in samples.values()[..=k].iter().enumerate() {
        let w = nodal_derivative_at(samples.grid(), k + 1, s)?;
        acc = acc + value.checked_div(&w)?;
    }
    Ok(acc)
}

/// `P_n(z) = sum_{k<=n} [a_0..a_k] omega_k(z)`, expanded in the monomial basis.
pub fn newton_interpolant<S: Scalar>(samples: &Samples<S>, n: usize) -> Result<Polynomial<S>> {
    samples.check_index(n)?;
    let table = divided_differences_recursive(&samples.prefix(n + 1)?)?;
    newton_from_table(samples.grid(), table.as_slice())
}

/// Expands `sum_k diffs[k] * omega_k(z)` in nested (Horner-like) form.
pub(crate) fn newton_from_table<S: Scalar>(grid: &Grid<S>, diffs: &[S]) -> Result<Polynomial<S>> {
    if diffs.len() > grid.len() {
        return Err(Error::InsufficientNodes {
            needed: diffs.len(),
            available: grid.len(),
        });
    }
    let mut acc = Polynomial::zero();
    for (k, d) in diffs.iter().enumerate().rev() {
        let factor = Polynomial::linear_factor(grid.nodes()[k].clone());
        acc = &(&acc * &factor) + &Polynomial::constant(d.clone());
    }
    Ok(acc)
}

/// Direct expansion `sum_k diffs[k] * omega_k`, used to cross-check
/// [`newton_from_table`] in tests.
#[cfg(test)]
fn newton_from_table_direct<S: Scalar>(grid: &Grid<S>, diffs: &[S]) -> Polynomial<S> {
    diffs.iter().enumerate().fold(Polynomial::zero(), |acc, (k, d)| {
        &acc + &crate::polynomial::nodal_polynomial(grid, k).unwrap().scale(d)
    })
}

/// `[a_0..a_m]` of an arbitrary polynomial sampled at the grid.
pub fn divided_difference_of<S: Scalar>(p: &Polynomial<S>, grid: &Grid<S>, m: usize) -> Result<S> {
    let samples = Samples::from_fn(grid.prefix(m + 1)?, |x| p.eval(x));
    divided_difference_sum(&samples, m)
}
