//! Executable determinant laws.
//!
//! [`verify_matrix`] runs the full battery on one matrix: engine agreement,
//! zero-plane annihilation, the plane-scaling law, the three swap sign laws,
//! swap involution, plane-permutation sign laws and additivity in each plane.
//! Every law is a theorem, so a failure signals an implementation bug, never
//! bad input.
//!
//! [`run_trials`] repeats the battery over seeded random integer matrices and
//! tallies failures; it backs both the randomized test suites and the CLI.

use std::fmt;

use crate::det::{
    det2_explicit, det3_explicit, det_cofactor, det_permutation_with_limit, DetError,
};
use crate::matrix::{Axis, CubicMatrix, MatrixError, PlaneSelector, SplitMix64};
use crate::perm::Permutation;
use crate::scalar::Scalar;
use crate::transforms::{is_zero_plane, permute_planes, scale_plane, swap_planes, TransformError};

/// An error while *running* the battery (overflow, bad construction); law
/// violations are reported in [`PropertyResult`], not here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropsError {
    Det(DetError),
    Transform(TransformError),
    Matrix(MatrixError),
}

impl fmt::Display for PropsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropsError::Det(e) => write!(f, "determinant evaluation failed: {e}"),
            PropsError::Transform(e) => write!(f, "plane transform failed: {e}"),
            PropsError::Matrix(e) => write!(f, "matrix construction failed: {e}"),
        }
    }
}

impl std::error::Error for PropsError {}

impl From<DetError> for PropsError {
    fn from(e: DetError) -> Self {
        PropsError::Det(e)
    }
}

impl From<TransformError> for PropsError {
    fn from(e: TransformError) -> Self {
        PropsError::Transform(e)
    }
}

impl From<MatrixError> for PropsError {
    fn from(e: MatrixError) -> Self {
        PropsError::Matrix(e)
    }
}

impl From<crate::scalar::ArithmeticError> for PropsError {
    fn from(e: crate::scalar::ArithmeticError) -> Self {
        PropsError::Det(e.into())
    }
}

/// Outcome of one law checked against one matrix.
#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl PropertyResult {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        PropertyResult {
            name: name.into(),
            passed: true,
            detail: detail.into(),
        }
    }

    fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        PropertyResult {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Scaling factors exercised by the battery. Zero is included on purpose: it
/// degenerates into the zero-plane law.
pub const SCALE_FACTORS: [i64; 6] = [-3, -1, 0, 1, 2, 3];

fn reference_det<S: Scalar>(a: &CubicMatrix<S>) -> Result<S, DetError> {
    det_cofactor(a)
}

/// Deterministic companion entries for the additivity check.
fn pattern<S: Scalar>(i: usize, j: usize, k: usize) -> S {
    S::from_int(((i * 7 + j * 5 + k * 3) % 11) as i64 - 5)
}

/// Runs the full law battery against one matrix. Uses exact equality in the
/// exact towers and the documented tolerance for floats.
pub fn verify_matrix<S: Scalar>(a: &CubicMatrix<S>) -> Result<Vec<PropertyResult>, PropsError> {
    let n = a.order();
    let det_a = reference_det(a)?;
    let mut results = Vec::new();

    // engine agreement
    {
        let perm = det_permutation_with_limit(a, n)?;
        let mut ok = det_a.det_eq(perm);
        let mut detail = format!("cofactor={det_a} permutation={perm}");
        match n {
            1 => {
                let e = a.get(1, 1, 1)?;
                ok &= det_a.det_eq(e);
                detail = format!("{detail} explicit={e}");
            }
            2 => {
                let e = det2_explicit(a)?;
                ok &= det_a.det_eq(e);
                detail = format!("{detail} explicit={e}");
            }
            3 => {
                let e = det3_explicit(a)?;
                ok &= det_a.det_eq(e);
                detail = format!("{detail} explicit={e}");
            }
            _ => {}
        }
        results.push(PropertyResult::check("engine-agreement", ok, detail));
    }

    // zero-plane annihilation, every axis and index
    for axis in Axis::ALL {
        for index in 1..=n {
            let p = PlaneSelector::new(axis, index);
            let zeroed = scale_plane(a, p, S::zero())?;
            debug_assert!(is_zero_plane(&zeroed, p)?);
            let d = reference_det(&zeroed)?;
            results.push(PropertyResult::check(
                format!("zero-plane {axis}={index}"),
                d.is_zero(),
                format!("det={d}"),
            ));
        }
    }

    // plane scaling law
    for axis in Axis::ALL {
        for index in 1..=n {
            let p = PlaneSelector::new(axis, index);
            for factor in SCALE_FACTORS {
                let alpha = S::from_int(factor);
                let scaled = scale_plane(a, p, alpha)?;
                let lhs = reference_det(&scaled)?;
                let rhs = alpha.checked_mul(det_a)?;
                results.push(PropertyResult::check(
                    format!("scale {axis}={index} by {factor}"),
                    lhs.det_eq(rhs),
                    format!("det(scaled)={lhs} alpha*det={rhs}"),
                ));
            }
        }
    }

    // swap sign laws, every index pair, plus involution
    for axis in Axis::ALL {
        for p in 1..=n {
            for q in p + 1..=n {
                let swapped = swap_planes(a, axis, p, q)?;
                let d = reference_det(&swapped)?;
                let expected = match axis {
                    Axis::I => det_a,
                    Axis::J | Axis::K => S::zero().checked_sub(det_a)?,
                };
                results.push(PropertyResult::check(
                    format!("swap {axis} {p}<->{q}"),
                    d.det_eq(expected),
                    format!("det(swapped)={d} expected={expected}"),
                ));
                let restored = swap_planes(&swapped, axis, p, q)?;
                results.push(PropertyResult::check(
                    format!("swap-involution {axis} {p}<->{q}"),
                    restored == *a,
                    String::new(),
                ));
            }
        }
    }

    // general plane-permutation sign law (rotation by one position)
    if n >= 2 {
        let mut images: Vec<usize> = (2..=n).collect();
        images.push(1);
        let rho = Permutation::from_one_based(images)?;
        let sgn = rho.sign();
        for axis in Axis::ALL {
            let permuted = permute_planes(a, axis, &rho)?;
            let d = reference_det(&permuted)?;
            let expected = match axis {
                Axis::I => det_a,
                Axis::J | Axis::K => {
                    if sgn > 0 {
                        det_a
                    } else {
                        S::zero().checked_sub(det_a)?
                    }
                }
            };
            results.push(PropertyResult::check(
                format!("permute-planes {axis} rotation"),
                d.det_eq(expected),
                format!("det={d} expected={expected} sgn={sgn}"),
            ));
        }
    }

    // additivity in each plane: split A's plane P as (pattern) + (A - pattern)
    for axis in Axis::ALL {
        for index in 1..=n {
            let p = PlaneSelector::new(axis, index);
            let b = a.try_rebuild(|i, j, k| {
                if p.contains(i, j, k) {
                    Ok::<S, PropsError>(pattern::<S>(i, j, k))
                } else {
                    Ok(a.entry(i, j, k))
                }
            })?;
            let c = a.try_rebuild(|i, j, k| {
                if p.contains(i, j, k) {
                    a.entry(i, j, k)
                        .checked_add(pattern::<S>(i, j, k))
                        .map_err(|_| PropsError::Det(DetError::Overflow))
                } else {
                    Ok(a.entry(i, j, k))
                }
            })?;
            let det_b = reference_det(&b)?;
            let det_c = reference_det(&c)?;
            let sum = det_a.checked_add(det_b)?;
            results.push(PropertyResult::check(
                format!("plane-additivity {axis}={index}"),
                det_c.det_eq(sum),
                format!("det(sum-plane)={det_c} det(a)+det(b)={sum}"),
            ));
        }
    }

    results.push(PropertyResult::pass("det", format!("det={det_a}")));
    Ok(results)
}

/// Summary of a randomized battery run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialSummary {
    pub trials: usize,
    pub checks: u64,
    pub failures: u64,
    /// Names of the first few failed checks, for diagnostics.
    pub failed: Vec<String>,
}

/// Runs [`verify_matrix`] over `trials` seeded random integer matrices with
/// entries in `lo..=hi`. Deterministic in `(order, trials, seed, lo, hi)`.
pub fn run_trials(
    order: usize,
    trials: usize,
    seed: u64,
    lo: i64,
    hi: i64,
) -> Result<TrialSummary, PropsError> {
    let mut sub_seeds = SplitMix64::new(seed);
    let mut summary = TrialSummary {
        trials,
        checks: 0,
        failures: 0,
        failed: Vec::new(),
    };
    for trial in 0..trials {
        let a: CubicMatrix<i64> = CubicMatrix::random(order, sub_seeds.next_u64(), lo, hi)?;
        for result in verify_matrix(&a)? {
            summary.checks += 1;
            if !result.passed {
                summary.failures += 1;
                if summary.failed.len() < 10 {
                    summary.failed.push(format!(
                        "trial {trial}: {} ({})",
                        result.name, result.detail
                    ));
                }
            }
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_battery_passes_on_the_worked_examples() {
        let a2: CubicMatrix<i64> = CubicMatrix::new(2, vec![2, 1, 3, 5, 4, 7, 3, 2]).unwrap();
        for r in verify_matrix(&a2).unwrap() {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
        let a3: CubicMatrix<i64> = CubicMatrix::new(
            3,
            vec![
                1, 4, 2, 2, 0, 0, 0, 4, 2, 3, 1, 3, 5, 1, 3, 3, 2, 0, 2, 1, 0, 0, 1, 0, 2, 1, 0,
            ],
        )
        .unwrap();
        for r in verify_matrix(&a3).unwrap() {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn the_battery_reports_the_identity_determinant() {
        let id: CubicMatrix<i64> = CubicMatrix::identity(2).unwrap();
        let results = verify_matrix(&id).unwrap();
        assert!(results.iter().all(|r| r.passed));
        let det_line = results.iter().find(|r| r.name == "det").unwrap();
        assert_eq!(det_line.detail, "det=1");
    }

    #[test]
    fn seeded_trials_are_deterministic_and_clean() {
        let a = run_trials(2, 25, 99, -9, 9).unwrap();
        let b = run_trials(2, 25, 99, -9, 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.failures, 0, "failed: {:?}", a.failed);
        assert!(a.checks > 0);
    }

    #[test]
    fn the_battery_also_holds_in_the_float_tower() {
        let a: CubicMatrix<f64> = CubicMatrix::random(3, 5, -9, 9).unwrap();
        for r in verify_matrix(&a).unwrap() {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }
}
