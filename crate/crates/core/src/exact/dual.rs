use std::fmt;

use super::{Rational, Scalar};
use crate::linalg::{Mat, Matrix};

/// `value + deriv·ε` with `ε² = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DualScalar {
    pub value: Rational,
    pub deriv: Rational,
}

impl DualScalar {
    pub fn new(value: Rational, deriv: Rational) -> Self {
        DualScalar { value, deriv }
    }

    pub fn constant(value: Rational) -> Self {
        DualScalar { value, deriv: Rational::zero() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = <DualScalar as Scalar>::one();
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }
}

impl fmt::Debug for DualScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.value, self.deriv)
    }
}

impl Scalar for DualScalar {
    fn zero() -> Self {
        DualScalar::constant(Rational::zero())
    }
    fn one() -> Self {
        DualScalar::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.deriv.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        DualScalar::new(&self.value + &o.value, &self.deriv + &o.deriv)
    }
    fn minus(&self, o: &Self) -> Self {
        DualScalar::new(&self.value - &o.value, &self.deriv - &o.deriv)
    }
    fn times(&self, o: &Self) -> Self {
        DualScalar::new(
            &self.value * &o.value,
            &(&self.value * &o.deriv) + &(&self.deriv * &o.value),
        )
    }
    fn negated(&self) -> Self {
        DualScalar::new(-&self.value, -&self.deriv)
    }
    fn from_rational(r: &Rational) -> Self {
        DualScalar::constant(r.clone())
    }
}

/// Derivative at the identity of `t ↦ f(I + tA)` in direction `A`.
///
/// `f` is evaluated once at `I + εA`; the ε-part of the result is returned.
pub fn dual_apply<F>(f: F, direction: &Mat) -> Mat
where
    F: Fn(&Matrix<DualScalar>) -> Matrix<DualScalar>,
{
    assert!(direction.is_square(), "direction must be square");
    let n = direction.rows();
    let point = Matrix::from_fn(n, n, |i, j| {
        DualScalar::new(
            if i == j { Rational::one() } else { Rational::zero() },
            direction[(i, j)].clone(),
        )
    });
    f(&point).map(|d| d.deriv.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;
    use crate::linalg::determinant;
    use proptest::prelude::*;

    #[test]
    fn squaring_has_derivative_two_a() {
        let a = Mat::from_i64(2, 2, &[1, 2, -3, 4]);
        let d = dual_apply(|x| x.mul(x), &a);
        assert_eq!(d, a.scale(&qi(2)));
    }

    #[test]
    fn identity_map_returns_direction() {
        let a = Mat::from_i64(3, 3, &[1, 0, 2, 0, -1, 5, 7, 7, 7]);
        assert_eq!(dual_apply(|x| x.clone(), &a), a);
    }

    #[test]
    fn determinant_derivative_is_trace() {
        let a = Mat::from_i64(2, 2, &[3, 0, 0, -8]);
        let d = dual_apply(|x| Matrix::from_vec(1, 1, vec![determinant(x)]), &a);
        // det(I + εA) = (1+3ε)(1−8ε) = 1 − 5ε
        assert_eq!(d[(0, 0)], qi(-5));
    }

    proptest! {
        #[test]
        fn power_rule(x in -20i64..20, y in -20i64..20, n in 0u32..=6) {
            let d = DualScalar::new(qi(x), qi(y)).pow(n);
            let expect = if n == 0 { qi(0) } else { qi(n as i64) * qi(x).pow(n as i32 - 1) * qi(y) };
            prop_assert_eq!(d.deriv, expect);
            prop_assert_eq!(d.value, qi(x).pow(n as i32));
        }
    }
}
