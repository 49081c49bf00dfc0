//! Hard-coded determinant formulas for orders 2 and 3.

use crate::matrix::CubicMatrix;
use crate::scalar::Scalar;

use super::DetError;

/// Order-2 determinant:
///
/// ```text
/// a111*a222 - a112*a221 - a121*a212 + a122*a211
/// ```
pub fn det2_explicit<S: Scalar>(m: &CubicMatrix<S>) -> Result<S, DetError> {
    if m.order() != 2 {
        return Err(DetError::WrongOrder {
            expected: "2",
            actual: m.order(),
        });
    }
    let a = |i, j, k| m.entry(i, j, k);
    let d = a(1, 1, 1)
        .checked_mul(a(2, 2, 2))?
        .checked_sub(a(1, 1, 2).checked_mul(a(2, 2, 1))?)?
        .checked_sub(a(1, 2, 1).checked_mul(a(2, 1, 2))?)?
        .checked_add(a(1, 2, 2).checked_mul(a(2, 1, 1))?)?;
    Ok(d)
}

/// Order-3 determinant: the full 36-term signed sum, written out in the same
/// grouping as the defining formula (four terms per leading `a[1, j, k]`
/// factor).
pub fn det3_explicit<S: Scalar>(m: &CubicMatrix<S>) -> Result<S, DetError> {
    if m.order() != 3 {
        return Err(DetError::WrongOrder {
            expected: "3",
            actual: m.order(),
        });
    }
    // t(j1,k1, j2,k2, j3,k3) = a[1,j1,k1] * a[2,j2,k2] * a[3,j3,k3]
    let t = |j1, k1, j2, k2, j3, k3| -> Result<S, DetError> {
        Ok(m.entry(1, j1, k1)
            .checked_mul(m.entry(2, j2, k2))?
            .checked_mul(m.entry(3, j3, k3))?)
    };

    let mut d = t(1, 1, 2, 2, 3, 3)?;
    d = d.checked_sub(t(1, 1, 3, 2, 2, 3)?)?;
    d = d.checked_sub(t(1, 1, 2, 3, 3, 2)?)?;
    d = d.checked_add(t(1, 1, 3, 3, 2, 2)?)?;

    d = d.checked_sub(t(1, 2, 2, 1, 3, 3)?)?;
    d = d.checked_add(t(1, 2, 2, 3, 3, 1)?)?;
    d = d.checked_add(t(1, 2, 3, 1, 2, 3)?)?;
    d = d.checked_sub(t(1, 2, 3, 3, 2, 1)?)?;

    d = d.checked_add(t(1, 3, 2, 1, 3, 2)?)?;
    d = d.checked_sub(t(1, 3, 2, 2, 3, 1)?)?;
    d = d.checked_sub(t(1, 3, 3, 1, 2, 2)?)?;
    d = d.checked_add(t(1, 3, 3, 2, 2, 1)?)?;

    d = d.checked_sub(t(2, 1, 1, 2, 3, 3)?)?;
    d = d.checked_add(t(2, 1, 1, 3, 3, 2)?)?;
    d = d.checked_add(t(2, 1, 3, 2, 1, 3)?)?;
    d = d.checked_sub(t(2, 1, 3, 3, 1, 2)?)?;

    d = d.checked_add(t(2, 2, 1, 1, 3, 3)?)?;
    d = d.checked_sub(t(2, 2, 1, 3, 3, 1)?)?;
    d = d.checked_sub(t(2, 2, 3, 1, 1, 3)?)?;
    d = d.checked_add(t(2, 2, 3, 3, 1, 1)?)?;

    d = d.checked_sub(t(2, 3, 1, 1, 3, 2)?)?;
    d = d.checked_add(t(2, 3, 1, 2, 3, 1)?)?;
    d = d.checked_add(t(2, 3, 3, 1, 1, 2)?)?;
    d = d.checked_sub(t(2, 3, 3, 2, 1, 1)?)?;

    d = d.checked_add(t(3, 1, 1, 2, 2, 3)?)?;
    d = d.checked_sub(t(3, 1, 1, 3, 2, 2)?)?;
    d = d.checked_sub(t(3, 1, 2, 2, 1, 3)?)?;
    d = d.checked_add(t(3, 1, 2, 3, 1, 2)?)?;

    d = d.checked_sub(t(3, 2, 1, 1, 2, 3)?)?;
    d = d.checked_add(t(3, 2, 1, 3, 2, 1)?)?;
    d = d.checked_add(t(3, 2, 2, 1, 1, 3)?)?;
    d = d.checked_sub(t(3, 2, 2, 3, 1, 1)?)?;

    d = d.checked_add(t(3, 3, 1, 1, 2, 2)?)?;
    d = d.checked_sub(t(3, 3, 1, 2, 2, 1)?)?;
    d = d.checked_sub(t(3, 3, 2, 1, 1, 2)?)?;
    d = d.checked_add(t(3, 3, 2, 2, 1, 1)?)?;

    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order2_golden_value() {
        // blocks  [2 1 / 3 5] | [4 7 / 3 2]  ->  2*2 - 4*5 - 1*3 + 7*3 = 2
        let a: CubicMatrix<i64> = CubicMatrix::new(2, vec![2, 1, 3, 5, 4, 7, 3, 2]).unwrap();
        assert_eq!(det2_explicit(&a), Ok(2));
    }

    #[test]
    fn order2_identity_is_one() {
        let id: CubicMatrix<i64> = CubicMatrix::identity(2).unwrap();
        assert_eq!(det2_explicit(&id), Ok(1));
    }

    #[test]
    fn order2_duplicate_horizontal_layers_need_not_vanish() {
        // both i-layers equal to [1 0 / 0 1]: det = 1*1 - 0 - 0 + 1*1 = 2
        let a: CubicMatrix<i64> =
            CubicMatrix::from_fn(2, |_, j, k| if j == k { 1 } else { 0 }).unwrap();
        assert_eq!(det2_explicit(&a), Ok(2));
    }

    #[test]
    fn order3_golden_value() {
        let a: CubicMatrix<i64> = CubicMatrix::new(
            3,
            vec![
                1, 4, 2, 2, 0, 0, 0, 4, 2, // k = 1
                3, 1, 3, 5, 1, 3, 3, 2, 0, // k = 2
                2, 1, 0, 0, 1, 0, 2, 1, 0, // k = 3
            ],
        )
        .unwrap();
        assert_eq!(det3_explicit(&a), Ok(63));
    }

    #[test]
    fn order3_identity_is_one() {
        let id: CubicMatrix<i64> = CubicMatrix::identity(3).unwrap();
        assert_eq!(det3_explicit(&id), Ok(1));
    }

    #[test]
    fn wrong_orders_are_rejected() {
        let a: CubicMatrix<i64> = CubicMatrix::identity(3).unwrap();
        assert!(matches!(
            det2_explicit(&a),
            Err(DetError::WrongOrder { .. })
        ));
        let b: CubicMatrix<i64> = CubicMatrix::identity(2).unwrap();
        assert!(matches!(
            det3_explicit(&b),
            Err(DetError::WrongOrder { .. })
        ));
    }

    #[test]
    fn overflow_is_reported_not_wrapped() {
        let big = 4_000_000_000_000_000_000i64;
        let a = CubicMatrix::new(2, vec![big, 0, 0, 0, 0, 0, 0, big]).unwrap();
        assert_eq!(det2_explicit(&a), Err(DetError::Overflow));
    }
}
