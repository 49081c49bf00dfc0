//! The three determinant engines and the dispatching front door.
//!
//! * [`det2_explicit`] / [`det3_explicit`] — hard-coded signed sums (4 and 36
//!   terms) for orders 2 and 3;
//! * [`det_cofactor`] — recursive expansion along the first horizontal layer;
//! * [`det_permutation`] — the permutation-pair expansion, valid at any order
//!   and used as the oracle the other engines are checked against.
//!
//! All three agree exactly on orders 1..=3; cofactor and permutation agree at
//! every order (both expand to the same `(n!)^2` signed products).

mod cofactor;
mod explicit;
pub mod permutation;

use std::fmt;

use crate::matrix::CubicMatrix;
use crate::scalar::{ArithmeticError, Scalar};

pub use cofactor::{det_cofactor, minor_first_layer};
pub use explicit::{det2_explicit, det3_explicit};
pub use permutation::{det_permutation, det_permutation_counted, det_permutation_with_limit};

/// Default cap on the order accepted by the factorial-cost engines;
/// `(6!)^2 = 518_400` terms stays comfortably sub-second.
pub const DEFAULT_MAX_ORDER: usize = 6;

/// Which evaluation engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetMethod {
    /// Hard-coded formulas; orders 1, 2 and 3 only.
    Explicit,
    /// First-layer cofactor recursion.
    Cofactor,
    /// Permutation-pair expansion.
    Permutation,
}

impl fmt::Display for DetMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetMethod::Explicit => write!(f, "explicit"),
            DetMethod::Cofactor => write!(f, "cofactor"),
            DetMethod::Permutation => write!(f, "permutation"),
        }
    }
}

/// Options for the [`det`] front door.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetOptions {
    pub method: DetMethod,
    /// Refuse orders above 3 outright, the way the original order-guarded
    /// procedures do.
    pub paper_strict: bool,
    /// Cap for the factorial-cost engines (cofactor and permutation).
    pub max_order: usize,
}

impl Default for DetOptions {
    fn default() -> Self {
        DetOptions {
            method: DetMethod::Cofactor,
            paper_strict: false,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl DetOptions {
    pub fn method(method: DetMethod) -> Self {
        DetOptions {
            method,
            ..Default::default()
        }
    }
}

/// Determinant evaluation failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DetError {
    /// The engine does not support this order.
    WrongOrder {
        expected: &'static str,
        actual: usize,
    },
    /// A 1-based index fell outside `1..=order`.
    IndexOutOfRange { index: usize, order: usize },
    /// Order exceeds the configured cap for factorial-cost engines.
    OrderTooLarge { order: usize, max_order: usize },
    /// Strict mode: orders above 3 cannot be calculated.
    PaperStrictOrderExceeded { order: usize },
    /// Exact arithmetic overflowed.
    Overflow,
}

impl fmt::Display for DetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetError::WrongOrder { expected, actual } => {
                write!(f, "engine requires order {expected}, got {actual}")
            }
            DetError::IndexOutOfRange { index, order } => {
                write!(f, "index {index} out of range for order {order}")
            }
            DetError::OrderTooLarge { order, max_order } => {
                write!(
                    f,
                    "order {order} exceeds the configured maximum {max_order} \
                     for factorial-cost engines"
                )
            }
            DetError::PaperStrictOrderExceeded { order } => {
                write!(
                    f,
                    "strict mode: matrix of order {order} is higher than third order \
                     and cannot be calculated"
                )
            }
            DetError::Overflow => write!(f, "integer overflow while accumulating determinant"),
        }
    }
}

impl std::error::Error for DetError {}

impl From<ArithmeticError> for DetError {
    fn from(_: ArithmeticError) -> Self {
        DetError::Overflow
    }
}

/// Computes the determinant with the engine and guards selected in `opts`.
///
/// With `paper_strict` set, any order above 3 is rejected before the engine
/// runs, matching the original procedures' order guard.
pub fn det<S: Scalar>(a: &CubicMatrix<S>, opts: &DetOptions) -> Result<S, DetError> {
    let n = a.order();
    if opts.paper_strict && n > 3 {
        return Err(DetError::PaperStrictOrderExceeded { order: n });
    }
    match opts.method {
        DetMethod::Explicit => match n {
            1 => Ok(a.entry(1, 1, 1)),
            2 => det2_explicit(a),
            3 => det3_explicit(a),
            _ => Err(DetError::WrongOrder {
                expected: "1, 2 or 3",
                actual: n,
            }),
        },
        DetMethod::Cofactor => {
            if n > opts.max_order {
                return Err(DetError::OrderTooLarge {
                    order: n,
                    max_order: opts.max_order,
                });
            }
            det_cofactor(a)
        }
        DetMethod::Permutation => det_permutation_with_limit(a, opts.max_order),
    }
}
