//! Permutations of `{1..n}` with parity, as the expansion engine consumes
//! them.

use std::fmt;

use crate::matrix::MatrixError;

/// A bijection of `{1..n}`. Stored 0-based internally; the public API speaks
/// the same 1-based language as matrix indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>, // images[t] = pi(t+1) - 1
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its 1-based image list `[pi(1), ..., pi(n)]`.
    pub fn from_one_based(images: Vec<usize>) -> Result<Self, MatrixError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(MatrixError::BadPermutation {
                    detail: format!("image {v} outside 1..={n}"),
                });
            }
            if seen[v - 1] {
                return Err(MatrixError::BadPermutation {
                    detail: format!("image {v} repeated"),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|v| v - 1).collect(),
        })
    }

    /// The transposition exchanging `p` and `q` (1-based) in `{1..n}`.
    pub fn transposition(n: usize, p: usize, q: usize) -> Result<Self, MatrixError> {
        for idx in [p, q] {
            if idx == 0 || idx > n {
                return Err(MatrixError::BadPermutation {
                    detail: format!("index {idx} outside 1..={n}"),
                });
            }
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(p - 1, q - 1);
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `pi(t)` with both sides 1-based.
    pub fn image(&self, t: usize) -> usize {
        self.images[t - 1] + 1
    }

    /// The 1-based image list.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// Parity as `(-1)^inversions`: `+1` for even, `-1` for odd.
    pub fn sign(&self) -> i8 {
        let mut inversions = 0usize;
        for s in 0..self.images.len() {
            for t in s + 1..self.images.len() {
                if self.images[s] > self.images[t] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0usize; self.images.len()];
        for (t, &s) in self.images.iter().enumerate() {
            inv[s] = t;
        }
        Permutation { images: inv }
    }

    /// All permutations of `{1..n}` in lexicographic order of their image
    /// lists. The order is fixed so expansion traces are reproducible.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // advance to the next lexicographic arrangement
            let Some(pivot) = (0..n.saturating_sub(1))
                .rev()
                .find(|&t| cur[t] < cur[t + 1])
            else {
                break;
            };
            let swap_with = (pivot + 1..n).rev().find(|&t| cur[t] > cur[pivot]).unwrap();
            cur.swap(pivot, swap_with);
            cur[pivot + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (pos, &v) in self.images.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, ")")
    }
}
