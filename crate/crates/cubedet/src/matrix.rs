//! The cubic-matrix value type and its canonical constructors.
//!
//! A cubic matrix of order `n` holds `n^3` scalars addressed by three 1-based
//! indices `(i, j, k)`:
//!
//! * `i` selects a *horizontal layer* (the row analogue),
//! * `j` selects a *vertical page* (the column analogue),
//! * `k` selects a *vertical layer* (drawn as side-by-side blocks).
//!
//! Storage is dense and layer-major: `k` outermost, then `i`, then `j`. That
//! is exactly the order in which the block notation reads, so a matrix can be
//! keyed in by sight from its printed form.

use std::fmt;

use crate::scalar::Scalar;

/// Construction and indexing failures for [`CubicMatrix`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    /// Order must be at least 1.
    ZeroOrder,
    /// Entry count does not equal order^3.
    CountMismatch { expected: usize, actual: usize },
    /// A 1-based index fell outside `1..=order`.
    IndexOutOfRange { index: usize, order: usize },
    /// Random-entry range with `lo > hi`.
    BadRange { lo: i64, hi: i64 },
    /// A mapping that is not a bijection of `1..=n`.
    BadPermutation { detail: String },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::ZeroOrder => write!(f, "cubic matrix order must be at least 1"),
            MatrixError::CountMismatch { expected, actual } => {
                write!(f, "expected {expected} entries, got {actual}")
            }
            MatrixError::IndexOutOfRange { index, order } => {
                write!(f, "index {index} out of range for order {order}")
            }
            MatrixError::BadRange { lo, hi } => {
                write!(f, "empty entry range: lo {lo} > hi {hi}")
            }
            MatrixError::BadPermutation { detail } => write!(f, "bad permutation: {detail}"),
        }
    }
}

impl std::error::Error for MatrixError {}

/// The three plane families of a cubic matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Horizontal layers: fixed first index `i`.
    I,
    /// Vertical pages: fixed second index `j`.
    J,
    /// Vertical layers: fixed third index `k`.
    K,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::I, Axis::J, Axis::K];

    /// Human name used in reports and error messages.
    pub fn label(self) -> &'static str {
        match self {
            Axis::I => "horizontal layer",
            Axis::J => "vertical page",
            Axis::K => "vertical layer",
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::I => write!(f, "i"),
            Axis::J => write!(f, "j"),
            Axis::K => write!(f, "k"),
        }
    }
}

/// Names one plane: an axis plus a 1-based index along it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneSelector {
    pub axis: Axis,
    pub index: usize,
}

impl PlaneSelector {
    pub fn new(axis: Axis, index: usize) -> Self {
        PlaneSelector { axis, index }
    }

    /// True when the cell `(i, j, k)` lies on this plane.
    pub fn contains(&self, i: usize, j: usize, k: usize) -> bool {
        match self.axis {
            Axis::I => i == self.index,
            Axis::J => j == self.index,
            Axis::K => k == self.index,
        }
    }
}

/// Dense order-n cubic matrix with value semantics.
///
/// Immutable after construction; all transforms return new matrices. Two
/// matrices are equal iff their orders match and all `n^3` entries are
/// pairwise equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicMatrix<S> {
    order: usize,
    entries: Vec<S>,
}

impl<S: Copy> CubicMatrix<S> {
    /// Builds a matrix from `order^3` entries in layer-major order
    /// (`k` outermost, then row `i`, then column `j`).
    pub fn new(order: usize, entries: Vec<S>) -> Result<Self, MatrixError> {
        if order == 0 {
            return Err(MatrixError::ZeroOrder);
        }
        let expected = order * order * order;
        if entries.len() != expected {
            return Err(MatrixError::CountMismatch {
                expected,
                actual: entries.len(),
            });
        }
        Ok(CubicMatrix { order, entries })
    }

    /// Builds a matrix by evaluating `f(i, j, k)` over all 1-based coordinates.
    pub fn from_fn(
        order: usize,
        mut f: impl FnMut(usize, usize, usize) -> S,
    ) -> Result<Self, MatrixError> {
        if order == 0 {
            return Err(MatrixError::ZeroOrder);
        }
        let mut entries = Vec::with_capacity(order * order * order);
        for k in 1..=order {
            for i in 1..=order {
                for j in 1..=order {
                    entries.push(f(i, j, k));
                }
            }
        }
        Ok(CubicMatrix { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entries in layer-major order, as supplied to [`CubicMatrix::new`].
    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    /// The entry `a[i, j, k]`, all indices 1-based.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Result<S, MatrixError> {
        for index in [i, j, k] {
            if index == 0 || index > self.order {
                return Err(MatrixError::IndexOutOfRange {
                    index,
                    order: self.order,
                });
            }
        }
        Ok(self.entry(i, j, k))
    }

    /// Unchecked 1-based access for internal hot paths.
    pub(crate) fn entry(&self, i: usize, j: usize, k: usize) -> S {
        debug_assert!((1..=self.order).contains(&i));
        debug_assert!((1..=self.order).contains(&j));
        debug_assert!((1..=self.order).contains(&k));
        let n = self.order;
        self.entries[(k - 1) * n * n + (i - 1) * n + (j - 1)]
    }

    /// Same-order rebuild; the closure sees 1-based coordinates.
    pub(crate) fn rebuild(&self, mut f: impl FnMut(usize, usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for k in 1..=self.order {
            for i in 1..=self.order {
                for j in 1..=self.order {
                    entries.push(f(i, j, k));
                }
            }
        }
        CubicMatrix {
            order: self.order,
            entries,
        }
    }

    /// Fallible same-order rebuild.
    pub(crate) fn try_rebuild<E>(
        &self,
        mut f: impl FnMut(usize, usize, usize) -> Result<S, E>,
    ) -> Result<Self, E> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for k in 1..=self.order {
            for i in 1..=self.order {
                for j in 1..=self.order {
                    entries.push(f(i, j, k)?);
                }
            }
        }
        Ok(CubicMatrix {
            order: self.order,
            entries,
        })
    }
}

impl<S: Scalar> CubicMatrix<S> {
    /// The unit cubic matrix: 1 on the space diagonal `i = j = k`, 0 elsewhere.
    pub fn identity(order: usize) -> Result<Self, MatrixError> {
        Self::from_fn(order, |i, j, k| {
            if i == j && j == k {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    /// The all-zero matrix of the given order.
    pub fn zero(order: usize) -> Result<Self, MatrixError> {
        Self::from_fn(order, |_, _, _| S::zero())
    }

    /// Deterministic pseudo-random matrix with integer entries uniform in
    /// `lo..=hi`.
    ///
    /// The generator is SplitMix64 seeded with `seed`, one draw per entry in
    /// layer-major order, mapped into the range by rejection sampling. The
    /// same `(order, seed, lo, hi)` always produces the same matrix.
    pub fn random(order: usize, seed: u64, lo: i64, hi: i64) -> Result<Self, MatrixError> {
        if lo > hi {
            return Err(MatrixError::BadRange { lo, hi });
        }
        let mut rng = SplitMix64::new(seed);
        let span = hi.wrapping_sub(lo) as u64 + 1; // lo <= hi, so this never wraps to 0 at desk scale
        Self::from_fn(order, |_, _, _| {
            S::from_int(lo.wrapping_add(rng.below(span) as i64))
        })
    }
}

/// SplitMix64: the 64-bit mixing generator of Steele, Lea and Flood.
/// Stable across platforms and runs; good enough for test-matrix entropy.
pub(crate) struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `0..n` with rejection sampling (no modulo bias).
    pub(crate) fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        let threshold = n.wrapping_neg() % n; // 2^64 mod n
        loop {
            let v = self.next_u64();
            if v >= threshold {
                return v % n;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_then_get_round_trips() {
        let m: CubicMatrix<i64> = CubicMatrix::new(2, vec![2, 1, 3, 5, 4, 7, 3, 2]).unwrap();
        assert_eq!(m.get(1, 1, 1), Ok(2));
        assert_eq!(m.get(1, 2, 1), Ok(1));
        assert_eq!(m.get(2, 1, 1), Ok(3));
        assert_eq!(m.get(2, 2, 1), Ok(5));
        assert_eq!(m.get(1, 1, 2), Ok(4));
        assert_eq!(m.get(1, 2, 2), Ok(7));
        assert_eq!(m.get(2, 2, 2), Ok(2));
    }

    #[test]
    fn wrong_entry_count_is_rejected() {
        let err = CubicMatrix::<i64>::new(2, vec![0; 7]).unwrap_err();
        assert_eq!(
            err,
            MatrixError::CountMismatch {
                expected: 8,
                actual: 7
            }
        );
        assert_eq!(
            CubicMatrix::<i64>::new(0, vec![]).unwrap_err(),
            MatrixError::ZeroOrder
        );
    }

    #[test]
    fn order_one_holds_a_single_entry() {
        let m: CubicMatrix<i64> = CubicMatrix::new(1, vec![5]).unwrap();
        assert_eq!(m.get(1, 1, 1), Ok(5));
    }

    #[test]
    fn identity_has_ones_exactly_on_the_space_diagonal() {
        let id: CubicMatrix<i64> = CubicMatrix::identity(3).unwrap();
        let mut ones = 0;
        for i in 1..=3 {
            for j in 1..=3 {
                for k in 1..=3 {
                    let v = id.get(i, j, k).unwrap();
                    if i == j && j == k {
                        assert_eq!(v, 1);
                        ones += 1;
                    } else {
                        assert_eq!(v, 0);
                    }
                }
            }
        }
        assert_eq!(ones, 3);
        assert_eq!(id.get(2, 2, 2), Ok(1));
        assert_eq!(id.get(1, 2, 3), Ok(0));
    }

    #[test]
    fn get_rejects_out_of_range_indices() {
        let id: CubicMatrix<i64> = CubicMatrix::identity(2).unwrap();
        assert_eq!(
            id.get(3, 1, 1),
            Err(MatrixError::IndexOutOfRange { index: 3, order: 2 })
        );
        assert_eq!(
            id.get(1, 0, 1),
            Err(MatrixError::IndexOutOfRange { index: 0, order: 2 })
        );
    }

    #[test]
    fn random_is_deterministic_for_a_fixed_seed() {
        let a: CubicMatrix<i64> = CubicMatrix::random(2, 42, -9, 9).unwrap();
        let b: CubicMatrix<i64> = CubicMatrix::random(2, 42, -9, 9).unwrap();
        assert_eq!(a, b);
        let c: CubicMatrix<i64> = CubicMatrix::random(2, 43, -9, 9).unwrap();
        assert_ne!(a, c);
        for &v in a.entries() {
            assert!((-9..=9).contains(&v));
        }
    }

    #[test]
    fn random_degenerate_range_gives_the_zero_matrix() {
        let a: CubicMatrix<i64> = CubicMatrix::random(3, 1, 0, 0).unwrap();
        assert_eq!(a, CubicMatrix::zero(3).unwrap());
    }

    #[test]
    fn random_rejects_inverted_range() {
        assert_eq!(
            CubicMatrix::<i64>::random(2, 1, 3, -3).unwrap_err(),
            MatrixError::BadRange { lo: 3, hi: -3 }
        );
    }

    #[test]
    fn equality_is_sensitive_to_a_single_entry() {
        let a: CubicMatrix<i64> = CubicMatrix::random(3, 7, -9, 9).unwrap();
        for pos in 0..a.entries().len() {
            let mut entries = a.entries().to_vec();
            entries[pos] += 1;
            let b = CubicMatrix::new(3, entries).unwrap();
            assert_ne!(a, b);
        }
    }
}
