//! Scalar towers the determinant engines are generic over.
//!
//! Three towers are supported:
//!
//! * `i64` — exact integers with checked arithmetic; overflow is an error,
//!   never a wrap;
//! * [`Rational`] — exact fractions kept in lowest terms with positive
//!   denominator;
//! * `f64` — IEEE doubles for benchmarking and CLI convenience.
//!
//! Exact towers compare bit-exactly. The float tower compares with relative
//! tolerance 1e-9 and absolute tolerance 1e-12 near zero.

use std::fmt;

/// Failure of a checked arithmetic operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithmeticError {
    /// The exact result does not fit the scalar representation.
    Overflow,
    /// A rational with denominator zero was requested.
    ZeroDenominator,
}

impl fmt::Display for ArithmeticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithmeticError::Overflow => write!(f, "integer overflow in exact arithmetic"),
            ArithmeticError::ZeroDenominator => write!(f, "rational denominator is zero"),
        }
    }
}

impl std::error::Error for ArithmeticError {}

/// Why a scalar literal was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiteralError {
    /// The token is not a number in any supported syntax.
    Malformed,
    /// The token is numeric but not representable in the active tower
    /// (for example `2.5` in exact-int mode).
    TowerMismatch,
}

/// A field-like value the cubic-matrix machinery can compute over.
///
/// Arithmetic is checked: the exact towers must report overflow instead of
/// wrapping. `Send + Sync` is required so the permutation engine may fan the
/// expansion out across threads.
pub trait Scalar: Copy + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Short tower name used in diagnostics ("int", "rational", "f64").
    const TOWER: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn checked_add(self, rhs: Self) -> Result<Self, ArithmeticError>;
    fn checked_sub(self, rhs: Self) -> Result<Self, ArithmeticError>;
    fn checked_mul(self, rhs: Self) -> Result<Self, ArithmeticError>;
    fn checked_neg(self) -> Result<Self, ArithmeticError>;

    /// Embeds a small integer (plane-scaling factors, random entries).
    fn from_int(v: i64) -> Self;

    /// Parses one scalar token in this tower's accepted syntax.
    fn parse_literal(s: &str) -> Result<Self, LiteralError>;

    /// Reads one scalar out of a JSON value in this tower's accepted encoding.
    fn from_json_value(v: &serde_json::Value) -> Result<Self, LiteralError>;

    /// Encodes this scalar as a JSON value; must round-trip through
    /// [`Scalar::from_json_value`].
    fn to_json_value(&self) -> serde_json::Value;

    /// Equality as the determinant laws use it: bit-exact for exact towers,
    /// tolerance-based for floats.
    fn det_eq(self, rhs: Self) -> bool {
        self == rhs
    }
}

fn looks_numeric(s: &str) -> bool {
    let body = s.strip_prefix(['+', '-']).unwrap_or(s);
    !body.is_empty()
        && body
            .chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | '/' | 'e' | 'E' | '+' | '-'))
}

impl Scalar for i64 {
    const TOWER: &'static str = "int";

    fn zero() -> Self {
        0
    }

    fn one() -> Self {
        1
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn checked_add(self, rhs: Self) -> Result<Self, ArithmeticError> {
        i64::checked_add(self, rhs).ok_or(ArithmeticError::Overflow)
    }

    fn checked_sub(self, rhs: Self) -> Result<Self, ArithmeticError> {
        i64::checked_sub(self, rhs).ok_or(ArithmeticError::Overflow)
    }

    fn checked_mul(self, rhs: Self) -> Result<Self, ArithmeticError> {
        i64::checked_mul(self, rhs).ok_or(ArithmeticError::Overflow)
    }

    fn checked_neg(self) -> Result<Self, ArithmeticError> {
        i64::checked_neg(self).ok_or(ArithmeticError::Overflow)
    }

    fn from_int(v: i64) -> Self {
        v
    }

    fn parse_literal(s: &str) -> Result<Self, LiteralError> {
        if let Ok(v) = s.parse::<i64>() {
            return Ok(v);
        }
        if looks_numeric(s) {
            Err(LiteralError::TowerMismatch)
        } else {
            Err(LiteralError::Malformed)
        }
    }

    fn from_json_value(v: &serde_json::Value) -> Result<Self, LiteralError> {
        match v {
            serde_json::Value::Number(n) => n.as_i64().ok_or(LiteralError::TowerMismatch),
            serde_json::Value::String(_) => Err(LiteralError::TowerMismatch),
            _ => Err(LiteralError::Malformed),
        }
    }

    fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::from(*self)
    }
}

impl Scalar for f64 {
    const TOWER: &'static str = "f64";

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn checked_add(self, rhs: Self) -> Result<Self, ArithmeticError> {
        Ok(self + rhs)
    }

    fn checked_sub(self, rhs: Self) -> Result<Self, ArithmeticError> {
        Ok(self - rhs)
    }

    fn checked_mul(self, rhs: Self) -> Result<Self, ArithmeticError> {
        Ok(self * rhs)
    }

    fn checked_neg(self) -> Result<Self, ArithmeticError> {
        Ok(-self)
    }

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn parse_literal(s: &str) -> Result<Self, LiteralError> {
        match s.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            Ok(_) => Err(LiteralError::Malformed),
            Err(_) => {
                if looks_numeric(s) {
                    // e.g. a rational "3/4" offered to the float tower
                    Err(LiteralError::TowerMismatch)
                } else {
                    Err(LiteralError::Malformed)
                }
            }
        }
    }

    fn from_json_value(v: &serde_json::Value) -> Result<Self, LiteralError> {
        match v {
            serde_json::Value::Number(n) => n.as_f64().ok_or(LiteralError::Malformed),
            serde_json::Value::String(_) => Err(LiteralError::TowerMismatch),
            _ => Err(LiteralError::Malformed),
        }
    }

    fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::from(*self)
    }

    fn det_eq(self, rhs: Self) -> bool {
        let diff = (self - rhs).abs();
        if diff <= 1e-12 {
            return true;
        }
        diff <= 1e-9 * self.abs().max(rhs.abs())
    }
}

/// An exact fraction, always in lowest terms with a positive denominator.
///
/// Intermediate products run through `i128`, so additions and multiplications
/// only fail when the *reduced* result leaves the `i64` range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    /// Builds `num / den`, normalizing sign and common factors.
    pub fn new(num: i64, den: i64) -> Result<Self, ArithmeticError> {
        Self::from_i128(num as i128, den as i128)
    }

    /// Exact integer as a rational.
    pub const fn integer(v: i64) -> Self {
        Rational { num: v, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    fn from_i128(num: i128, den: i128) -> Result<Self, ArithmeticError> {
        if den == 0 {
            return Err(ArithmeticError::ZeroDenominator);
        }
        if num == 0 {
            return Ok(Rational { num: 0, den: 1 });
        }
        let sign: i128 = if (num < 0) != (den < 0) { -1 } else { 1 };
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs());
        let n = num.unsigned_abs() / g;
        let d = den.unsigned_abs() / g;
        if n > i64::MAX as u128 || d > i64::MAX as u128 {
            return Err(ArithmeticError::Overflow);
        }
        Ok(Rational {
            num: (sign * n as i128) as i64,
            den: d as i64,
        })
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Scalar for Rational {
    const TOWER: &'static str = "rational";

    fn zero() -> Self {
        Rational { num: 0, den: 1 }
    }

    fn one() -> Self {
        Rational { num: 1, den: 1 }
    }

    fn is_zero(&self) -> bool {
        self.num == 0
    }

    fn checked_add(self, rhs: Self) -> Result<Self, ArithmeticError> {
        let num = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        let den = self.den as i128 * rhs.den as i128;
        Rational::from_i128(num, den)
    }

    fn checked_sub(self, rhs: Self) -> Result<Self, ArithmeticError> {
        self.checked_add(rhs.checked_neg()?)
    }

    fn checked_mul(self, rhs: Self) -> Result<Self, ArithmeticError> {
        Rational::from_i128(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }

    fn checked_neg(self) -> Result<Self, ArithmeticError> {
        Ok(Rational {
            num: self.num.checked_neg().ok_or(ArithmeticError::Overflow)?,
            den: self.den,
        })
    }

    fn from_int(v: i64) -> Self {
        Rational::integer(v)
    }

    fn parse_literal(s: &str) -> Result<Self, LiteralError> {
        if let Some((p, q)) = s.split_once('/') {
            let num = p.parse::<i64>().map_err(|_| classify(s))?;
            let den = q.parse::<i64>().map_err(|_| classify(s))?;
            return Rational::new(num, den).map_err(|_| LiteralError::Malformed);
        }
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Rational::integer(v));
        }
        Err(classify(s))
    }

    fn from_json_value(v: &serde_json::Value) -> Result<Self, LiteralError> {
        match v {
            serde_json::Value::Number(n) => match n.as_i64() {
                Some(i) => Ok(Rational::integer(i)),
                None => Err(LiteralError::TowerMismatch),
            },
            serde_json::Value::String(s) => Self::parse_literal(s),
            _ => Err(LiteralError::Malformed),
        }
    }

    fn to_json_value(&self) -> serde_json::Value {
        if self.den == 1 {
            serde_json::Value::from(self.num)
        } else {
            serde_json::Value::from(self.to_string())
        }
    }
}

fn classify(s: &str) -> LiteralError {
    if looks_numeric(s) {
        LiteralError::TowerMismatch
    } else {
        LiteralError::Malformed
    }
}
