//! Determinants of cubic matrices (order-n arrays indexed by three subscripts
//! with equal extents), together with the plane transforms needed to state and
//! check their algebraic laws.
//!
//! Three evaluation engines are provided and must always agree:
//!
//! * [`det2_explicit`] / [`det3_explicit`] — the hard-coded 4-term and 36-term
//!   signed sums for orders 2 and 3;
//! * [`det_cofactor`] — recursive expansion along the first horizontal layer
//!   with sign `(-1)^(2+j+k)`;
//! * [`det_permutation`] — the permutation-pair expansion
//!   `sum over (sigma, tau) of sgn(sigma) sgn(tau) prod_i a[i, sigma(i), tau(i)]`,
//!   which reproduces the explicit formulas term for term and extends them to
//!   any order.
//!
//! All engines are generic over a [`Scalar`] tower: checked `i64`, normalized
//! [`Rational`], or `f64`. Exact towers never wrap silently; overflow is a
//! hard error.
//!
//! With the `parallel` feature (on by default) the permutation engine splits
//! the outer permutation loop across threads via rayon. Results are identical
//! to the sequential build: partial sums are combined in a fixed order, so
//! even the float tower is independent of thread count.

mod matrix;
mod perm;
mod scalar;

pub mod det;
pub mod io;
pub mod props;
pub mod transforms;

pub use matrix::{Axis, CubicMatrix, MatrixError, PlaneSelector};
pub use perm::Permutation;
pub use scalar::{ArithmeticError, LiteralError, Rational, Scalar};

pub use det::{
    det, det2_explicit, det3_explicit, det_cofactor, det_permutation, det_permutation_counted,
    det_permutation_with_limit, minor_first_layer, DetError, DetMethod, DetOptions,
    DEFAULT_MAX_ORDER,
};
pub use transforms::{is_zero_plane, permute_planes, scale_plane, swap_planes, TransformError};
