//! Permutation-pair expansion.
//!
//! For an order-n matrix the determinant is
//!
//! ```text
//! det(A) = sum over all pairs (sigma, tau) of permutations of {1..n}
//!          of sgn(sigma) * sgn(tau) * prod_{i=1..n} a[i, sigma(i), tau(i)]
//! ```
//!
//! This reproduces the hard-coded order-2 and order-3 formulas term for term
//! (4 and 36 products) and extends them to any order. Every one of the
//! `(n!)^2` products is evaluated; nothing is skipped, so the reported term
//! count is exact.
//!
//! Evaluation order is pinned: pairs are visited with both permutations in
//! lexicographic order, each product multiplied left to right, partial sums
//! accumulated per outer permutation and combined in that fixed order. The
//! parallel build distributes the outer loop but keeps the same grouping, so
//! results are bitwise identical to the sequential build in every tower,
//! floats included.

use crate::matrix::CubicMatrix;
use crate::perm::Permutation;
use crate::scalar::Scalar;

use super::{DetError, DEFAULT_MAX_ORDER};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this order the parallel build still runs sequentially.
#[cfg(feature = "parallel")]
const PARALLEL_MIN_ORDER: usize = 5;

/// One signed product of the expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTerm<S> {
    /// 1-based images of the vertical-page permutation (sigma).
    pub pages: Vec<usize>,
    /// 1-based images of the vertical-layer permutation (tau).
    pub layers: Vec<usize>,
    /// `sgn(sigma) * sgn(tau)`.
    pub sign: i8,
    /// `prod_i a[i, sigma(i), tau(i)]`, without the sign.
    pub value: S,
}

fn pair_product<S: Scalar>(
    a: &CubicMatrix<S>,
    sigma: &Permutation,
    tau: &Permutation,
) -> Result<S, DetError> {
    let mut p = a.entry(1, sigma.image(1), tau.image(1));
    for i in 2..=a.order() {
        p = p.checked_mul(a.entry(i, sigma.image(i), tau.image(i)))?;
    }
    Ok(p)
}

/// Sum over all tau for one fixed sigma, in lexicographic tau order.
fn inner_sum<S: Scalar>(
    a: &CubicMatrix<S>,
    sigma: &Permutation,
    taus: &[Permutation],
) -> Result<(S, u64), DetError> {
    let sigma_sign = sigma.sign();
    let mut partial = S::zero();
    let mut terms = 0u64;
    for tau in taus {
        let product = pair_product(a, sigma, tau)?;
        partial = if sigma_sign * tau.sign() > 0 {
            partial.checked_add(product)?
        } else {
            partial.checked_sub(product)?
        };
        terms += 1;
    }
    Ok((partial, terms))
}

fn expand_counted<S: Scalar>(a: &CubicMatrix<S>) -> Result<(S, u64), DetError> {
    let perms = Permutation::all(a.order());

    #[cfg(feature = "parallel")]
    if a.order() >= PARALLEL_MIN_ORDER {
        let partials: Vec<Result<(S, u64), DetError>> = perms
            .par_iter()
            .map(|sigma| inner_sum(a, sigma, &perms))
            .collect();
        let mut total = S::zero();
        let mut terms = 0u64;
        for partial in partials {
            let (value, count) = partial?;
            total = total.checked_add(value)?;
            terms += count;
        }
        return Ok((total, terms));
    }

    let mut total = S::zero();
    let mut terms = 0u64;
    for sigma in &perms {
        let (value, count) = inner_sum(a, sigma, &perms)?;
        total = total.checked_add(value)?;
        terms += count;
    }
    Ok((total, terms))
}

/// Permutation-pair determinant with the default order cap of
/// [`DEFAULT_MAX_ORDER`].
pub fn det_permutation<S: Scalar>(a: &CubicMatrix<S>) -> Result<S, DetError> {
    det_permutation_with_limit(a, DEFAULT_MAX_ORDER)
}

/// Permutation-pair determinant with a caller-chosen order cap.
pub fn det_permutation_with_limit<S: Scalar>(
    a: &CubicMatrix<S>,
    max_order: usize,
) -> Result<S, DetError> {
    guard(a.order(), max_order)?;
    Ok(expand_counted(a)?.0)
}

/// Like [`det_permutation`], also reporting how many products were evaluated.
/// The count is always exactly `(n!)^2`.
pub fn det_permutation_counted<S: Scalar>(a: &CubicMatrix<S>) -> Result<(S, u64), DetError> {
    guard(a.order(), DEFAULT_MAX_ORDER)?;
    expand_counted(a)
}

/// Forced-sequential expansion, regardless of features. Exposed so the bench
/// suite can compare it against the parallel build.
pub fn det_permutation_serial<S: Scalar>(a: &CubicMatrix<S>) -> Result<S, DetError> {
    guard(a.order(), DEFAULT_MAX_ORDER)?;
    let perms = Permutation::all(a.order());
    let mut total = S::zero();
    for sigma in &perms {
        total = total.checked_add(inner_sum(a, sigma, &perms)?.0)?;
    }
    Ok(total)
}

/// Forced-parallel expansion with no minimum-order cutoff. Bitwise equal to
/// [`det_permutation_serial`] by construction.
#[cfg(feature = "parallel")]
pub fn det_permutation_parallel<S: Scalar>(a: &CubicMatrix<S>) -> Result<S, DetError> {
    guard(a.order(), DEFAULT_MAX_ORDER)?;
    let perms = Permutation::all(a.order());
    let partials: Vec<Result<(S, u64), DetError>> = perms
        .par_iter()
        .map(|sigma| inner_sum(a, sigma, &perms))
        .collect();
    let mut total = S::zero();
    for partial in partials {
        total = total.checked_add(partial?.0)?;
    }
    Ok(total)
}

/// Every signed product of the expansion, pairs enumerated with both
/// permutations in lexicographic order.
pub fn terms<S: Scalar>(a: &CubicMatrix<S>) -> Result<Vec<ExpansionTerm<S>>, DetError> {
    guard(a.order(), DEFAULT_MAX_ORDER)?;
    let perms = Permutation::all(a.order());
    let mut out = Vec::with_capacity(perms.len() * perms.len());
    for sigma in &perms {
        for tau in &perms {
            out.push(ExpansionTerm {
                pages: sigma.to_one_based(),
                layers: tau.to_one_based(),
                sign: sigma.sign() * tau.sign(),
                value: pair_product(a, sigma, tau)?,
            });
        }
    }
    Ok(out)
}

fn guard(order: usize, max_order: usize) -> Result<(), DetError> {
    if order > max_order {
        Err(DetError::OrderTooLarge { order, max_order })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_values_with_exact_term_counts() {
        let a2: CubicMatrix<i64> = CubicMatrix::new(2, vec![2, 1, 3, 5, 4, 7, 3, 2]).unwrap();
        assert_eq!(det_permutation_counted(&a2), Ok((2, 4)));

        let a3: CubicMatrix<i64> = CubicMatrix::new(
            3,
            vec![
                1, 4, 2, 2, 0, 0, 0, 4, 2, 3, 1, 3, 5, 1, 3, 3, 2, 0, 2, 1, 0, 0, 1, 0, 2, 1, 0,
            ],
        )
        .unwrap();
        assert_eq!(det_permutation_counted(&a3), Ok((63, 36)));
    }

    #[test]
    fn term_count_is_factorial_squared() {
        for n in 1..=4usize {
            let a: CubicMatrix<i64> = CubicMatrix::random(n, 3, -9, 9).unwrap();
            let (_, count) = det_permutation_counted(&a).unwrap();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(count, fact * fact, "order {n}");
        }
    }

    #[test]
    fn identity_survives_only_the_identity_pair() {
        for n in 1..=4usize {
            let id: CubicMatrix<i64> = CubicMatrix::identity(n).unwrap();
            assert_eq!(det_permutation(&id), Ok(1), "order {n}");
        }
    }

    #[test]
    fn order_cap_is_enforced() {
        let a: CubicMatrix<i64> = CubicMatrix::random(4, 1, -1, 1).unwrap();
        assert!(matches!(
            det_permutation_with_limit(&a, 3),
            Err(DetError::OrderTooLarge {
                order: 4,
                max_order: 3
            })
        ));
    }

    #[test]
    fn agrees_with_cofactor_on_random_matrices() {
        for seed in 0..20 {
            for n in 2..=4usize {
                let a: CubicMatrix<i64> = CubicMatrix::random(n, seed, -9, 9).unwrap();
                assert_eq!(
                    det_permutation(&a),
                    super::super::det_cofactor(&a),
                    "order {n} seed {seed}"
                );
            }
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_equals_serial_in_every_tower() {
        for seed in 0..5 {
            let a: CubicMatrix<i64> = CubicMatrix::random(5, seed, -9, 9).unwrap();
            assert_eq!(det_permutation_parallel(&a), det_permutation_serial(&a));

            let f: CubicMatrix<f64> = CubicMatrix::random(5, seed, -9, 9).unwrap();
            let lhs = det_permutation_parallel(&f).unwrap();
            let rhs = det_permutation_serial(&f).unwrap();
            assert_eq!(
                lhs.to_bits(),
                rhs.to_bits(),
                "float reduction must be bitwise stable"
            );
        }
    }
}
