//! Plane-level rewrites: scaling, interchange, zero-plane queries and general
//! plane permutations.
//!
//! All transforms are persistent: the input matrix is left untouched and a
//! new matrix is returned. The determinant laws they support:
//!
//! * scaling one plane by `alpha` scales the determinant by `alpha`;
//! * interchanging two horizontal layers leaves the determinant unchanged;
//! * interchanging two vertical pages or two vertical layers negates it;
//! * an all-zero plane forces a zero determinant.

use std::fmt;

use crate::matrix::{Axis, CubicMatrix, PlaneSelector};
use crate::perm::Permutation;
use crate::scalar::{ArithmeticError, Scalar};

/// Failures of plane transforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransformError {
    IndexOutOfRange {
        index: usize,
        order: usize,
    },
    /// Swap endpoints must differ.
    SameIndex {
        index: usize,
    },
    /// Permutation length does not match the matrix order.
    BadPermutation {
        expected: usize,
        actual: usize,
    },
    /// Exact arithmetic overflowed while scaling.
    Overflow,
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformError::IndexOutOfRange { index, order } => {
                write!(f, "plane index {index} out of range for order {order}")
            }
            TransformError::SameIndex { index } => {
                write!(f, "cannot swap plane {index} with itself")
            }
            TransformError::BadPermutation { expected, actual } => {
                write!(
                    f,
                    "permutation of length {actual} applied to order {expected}"
                )
            }
            TransformError::Overflow => write!(f, "integer overflow while scaling a plane"),
        }
    }
}

impl std::error::Error for TransformError {}

impl From<ArithmeticError> for TransformError {
    fn from(_: ArithmeticError) -> Self {
        TransformError::Overflow
    }
}

fn check_index(index: usize, order: usize) -> Result<(), TransformError> {
    if index == 0 || index > order {
        Err(TransformError::IndexOutOfRange { index, order })
    } else {
        Ok(())
    }
}

/// Multiplies every entry on plane `p` by `alpha`, leaving the rest unchanged.
pub fn scale_plane<S: Scalar>(
    a: &CubicMatrix<S>,
    p: PlaneSelector,
    alpha: S,
) -> Result<CubicMatrix<S>, TransformError> {
    check_index(p.index, a.order())?;
    a.try_rebuild(|i, j, k| {
        let v = a.entry(i, j, k);
        if p.contains(i, j, k) {
            v.checked_mul(alpha).map_err(TransformError::from)
        } else {
            Ok(v)
        }
    })
}

/// Interchanges planes `p` and `q` (1-based, distinct) on the given axis.
pub fn swap_planes<S: Scalar>(
    a: &CubicMatrix<S>,
    axis: Axis,
    p: usize,
    q: usize,
) -> Result<CubicMatrix<S>, TransformError> {
    let n = a.order();
    check_index(p, n)?;
    check_index(q, n)?;
    if p == q {
        return Err(TransformError::SameIndex { index: p });
    }
    let remap = |t: usize| {
        if t == p {
            q
        } else if t == q {
            p
        } else {
            t
        }
    };
    Ok(match axis {
        Axis::I => a.rebuild(|i, j, k| a.entry(remap(i), j, k)),
        Axis::J => a.rebuild(|i, j, k| a.entry(i, remap(j), k)),
        Axis::K => a.rebuild(|i, j, k| a.entry(i, j, remap(k))),
    })
}

/// True iff every entry on plane `p` is zero.
pub fn is_zero_plane<S: Scalar>(
    a: &CubicMatrix<S>,
    p: PlaneSelector,
) -> Result<bool, TransformError> {
    let n = a.order();
    check_index(p.index, n)?;
    for u in 1..=n {
        for v in 1..=n {
            let (i, j, k) = match p.axis {
                Axis::I => (p.index, u, v),
                Axis::J => (u, p.index, v),
                Axis::K => (u, v, p.index),
            };
            if !a.entry(i, j, k).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rearranges planes along an axis: the plane at position `t` moves to
/// position `pi(t)`.
pub fn permute_planes<S: Scalar>(
    a: &CubicMatrix<S>,
    axis: Axis,
    pi: &Permutation,
) -> Result<CubicMatrix<S>, TransformError> {
    let n = a.order();
    if pi.len() != n {
        return Err(TransformError::BadPermutation {
            expected: n,
            actual: pi.len(),
        });
    }
    // destination s receives the plane that moves there
    let inv = pi.inverse();
    Ok(match axis {
        Axis::I => a.rebuild(|i, j, k| a.entry(inv.image(i), j, k)),
        Axis::J => a.rebuild(|i, j, k| a.entry(i, inv.image(j), k)),
        Axis::K => a.rebuild(|i, j, k| a.entry(i, j, inv.image(k))),
    })
}
