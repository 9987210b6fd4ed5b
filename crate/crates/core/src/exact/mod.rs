//! Exact scalars: rationals, dual numbers and univariate polynomials over ℚ.

mod dual;
mod factor;
mod poly;
mod rational;

pub use dual::{dual_apply, DualScalar};
pub use factor::factor_rational;
pub use poly::{poly_gcd, Poly};
pub use rational::{q, qi, BigRational, ParseRationalError, Rational};

/// The commutative ring interface the generic matrix code needs.
///
/// Method names avoid the `std::ops` names so that both owned and borrowed
/// arithmetic stays unambiguous in generic code.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
}

impl Scalar for Rational {
    #[inline]
    fn zero() -> Self {
        Rational::zero()
    }
    #[inline]
    fn one() -> Self {
        Rational::one()
    }
    #[inline]
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    #[inline]
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    #[inline]
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    #[inline]
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    #[inline]
    fn negated(&self) -> Self {
        -self
    }
    #[inline]
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}
