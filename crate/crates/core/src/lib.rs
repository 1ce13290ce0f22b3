//! Newton and Lagrange interpolation, the R_I-type recurrence satisfied by
//! monic interpolants, and the rational functions `V_n = T̂_n / omega_{n+2}`
//! that are biorthogonal to them under the residue pairing.
//!
//! All constructions are generic over [`Scalar`]: run them over [`Rational`]
//! for exact verification or over `f64` for speed. The [`contour`] module
//! cross-checks residue sums against trapezoidal contour quadrature.
//!
//! ```
//! use lagrange_biortho::{biorthogonality_matrix, build_system, monic_family, Rational, Samples};
//!
//! let samples = Samples::from_pairs(
//!     vec![Rational::from(0), Rational::from(1), Rational::from(2)],
//!     vec![Rational::from(1), Rational::from(2), Rational::from(5)],
//! )
//! .unwrap();
//! let family = monic_family(&samples, 2).unwrap();
//! let system = build_system(&family, 1).unwrap();
//! let matrix = biorthogonality_matrix(&system, &samples, 1).unwrap();
//! assert_eq!(matrix[0][0].to_string(), "-1/2");
//! assert_eq!(matrix[1][1].to_string(), "-1");
//! assert_eq!(matrix[0][1].to_string(), "0");
//! ```

pub mod biortho;
pub mod cli;
pub mod contour;
pub mod divided;
pub mod error;
pub mod exponential;
pub mod interpolation;
pub mod numerics;
pub mod polynomial;

pub use biortho::{
    biorthogonality_matrix, build_system, expand_in_interpolants, leading_nu, orthogonality_moment,
    pairing, reconstruct, t_polynomial, BiorthogonalSystem, RationalInterpolant,
};
pub use divided::{
    divided_difference_sum, divided_differences_recursive, newton_interpolant,
    DividedDifferenceTable, Samples,
};
pub use error::{Error, Result};
pub use interpolation::{
    family_from_recurrence, lagrange_interpolant, monic_family, recurrence_step,
    MonicInterpolantFamily,
};
pub use numerics::{approx_equal, scalar_from_ratio, Rational, Scalar, Tolerance};
pub use polynomial::{nodal_derivative_at, nodal_polynomial, poly_arith, poly_eval, Grid, PolyOp, Polynomial};
