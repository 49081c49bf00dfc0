//! First-layer cofactor recursion.
//!
//! Expansion runs along the first horizontal layer: for every vertical page
//! `j` and vertical layer `k`,
//!
//! ```text
//! det(A) = sum over j,k of (-1)^(2+j+k) * a[1,j,k] * det(minor(A, j, k))
//! ```
//!
//! where the minor deletes horizontal layer 1, vertical page `j` and vertical
//! layer `k`. An order-1 matrix is its own determinant.

use crate::matrix::CubicMatrix;
use crate::scalar::Scalar;

use super::DetError;

/// The `(n-1)`-order minor obtained by deleting horizontal layer 1, vertical
/// page `j` and vertical layer `k` (both 1-based). Surviving indices keep
/// their relative order.
pub fn minor_first_layer<S: Scalar>(
    a: &CubicMatrix<S>,
    j: usize,
    k: usize,
) -> Result<CubicMatrix<S>, DetError> {
    let n = a.order();
    if n < 2 {
        return Err(DetError::WrongOrder {
            expected: "at least 2",
            actual: n,
        });
    }
    for index in [j, k] {
        if index == 0 || index > n {
            return Err(DetError::IndexOutOfRange { index, order: n });
        }
    }
    let keep = |t: usize, deleted: usize| if t < deleted { t } else { t + 1 };
    let minor = CubicMatrix::from_fn(n - 1, |i2, j2, k2| {
        a.entry(i2 + 1, keep(j2, j), keep(k2, k))
    })
    .expect("order n-1 >= 1");
    Ok(minor)
}

/// Determinant by recursive first-layer expansion. Works at any order, but
/// note the cost is the same `(n!)^2` leaf products as the permutation
/// engine.
pub fn det_cofactor<S: Scalar>(a: &CubicMatrix<S>) -> Result<S, DetError> {
    let n = a.order();
    if n == 1 {
        return Ok(a.entry(1, 1, 1));
    }
    let mut d = S::zero();
    for j in 1..=n {
        for k in 1..=n {
            let minor = minor_first_layer(a, j, k)?;
            let term = a.entry(1, j, k).checked_mul(det_cofactor(&minor)?)?;
            // (-1)^(2+j+k) == +1 iff j+k is even
            d = if (j + k) % 2 == 0 {
                d.checked_add(term)?
            } else {
                d.checked_sub(term)?
            };
        }
    }
    Ok(d)
}
