//! Scalar rings: exact rationals, the cyclotomic group ring and complex
//! floats, unified by a small set of traits.

mod complex;
mod cyclo;
mod rational;

use std::fmt::Debug;

pub use complex::ComplexF;
pub use cyclo::{cyclotomic_polynomial, CycloElem};
pub use rational::Rational;

/// Default absolute tolerance for zero tests on floating point values.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Commutative ring of coefficients. `n` is the order of the cyclic group and
/// is only used by types whose shape depends on it.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero(n: usize) -> Self;
    fn one(n: usize) -> Self;
    fn from_rational(r: &Rational, n: usize) -> Self;

    fn from_i64(v: i64, n: usize) -> Self {
        Self::from_rational(&Rational::from(v), n)
    }

    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;

    /// Structural zero, used to prune stored coefficients.
    fn is_exact_zero(&self) -> bool;

    /// Zero as an element of the field the ring maps to. Exact types ignore
    /// `tol`.
    fn vanishes(&self, tol: f64) -> bool;
}

/// Scalars that contain the `n`-th roots of unity.
pub trait HasRoots: Scalar {
    /// `exp(2πik/n)`.
    fn root_of_unity(n: usize, k: i64) -> Self;
}

/// Scalars forming a field.
pub trait Field: Scalar {
    fn inverse(&self) -> Option<Self>;

    fn divide(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.times(&inv))
    }
}

/// Types that can hold the parameters `c_i`.
pub trait ParamScalar: Field + serde::Serialize + FromParam<Self> {
    fn to_complex(&self) -> ComplexF;

    /// `m` with `self = n·m` for an integer `m`, within `tol` for inexact
    /// types.
    fn integer_multiple_of(&self, n: i64, tol: f64) -> Option<i64>;

    /// Whether the value is exactly representable as a rational.
    fn as_rational(&self) -> Option<Rational>;
}

/// Coercion from a parameter type into a coefficient type.
pub trait FromParam<P> {
    fn from_param(p: &P, n: usize) -> Self;
}

impl<S: Scalar> FromParam<Rational> for S {
    fn from_param(p: &Rational, n: usize) -> Self {
        S::from_rational(p, n)
    }
}

impl FromParam<ComplexF> for ComplexF {
    fn from_param(p: &ComplexF, _n: usize) -> Self {
        *p
    }
}

impl Scalar for Rational {
    fn zero(_n: usize) -> Self {
        Rational::zero()
    }
    fn one(_n: usize) -> Self {
        Rational::one()
    }
    fn from_rational(r: &Rational, _n: usize) -> Self {
        r.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }
    fn vanishes(&self, _tol: f64) -> bool {
        self.is_zero()
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        self.recip()
    }
}

impl ParamScalar for Rational {
    fn to_complex(&self) -> ComplexF {
        ComplexF::from(self)
    }
    fn integer_multiple_of(&self, n: i64, _tol: f64) -> Option<i64> {
        self.integer_quotient(n)
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Scalar for CycloElem {
    fn zero(n: usize) -> Self {
        CycloElem::zero(n)
    }
    fn one(n: usize) -> Self {
        CycloElem::one(n)
    }
    fn from_rational(r: &Rational, n: usize) -> Self {
        CycloElem::from_rational(r.clone(), n)
    }
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(other).expect("cyclotomic length mismatch")
    }
    fn minus(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("cyclotomic length mismatch")
    }
    fn times(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("cyclotomic length mismatch")
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }
    fn vanishes(&self, _tol: f64) -> bool {
        CycloElem::vanishes(self)
    }
}

impl HasRoots for CycloElem {
    fn root_of_unity(n: usize, k: i64) -> Self {
        CycloElem::zeta_pow(n, k)
    }
}

impl Scalar for ComplexF {
    fn zero(_n: usize) -> Self {
        ComplexF::ZERO
    }
    fn one(_n: usize) -> Self {
        ComplexF::ONE
    }
    fn from_rational(r: &Rational, _n: usize) -> Self {
        ComplexF::from(r)
    }
    fn plus(&self, other: &Self) -> Self {
        ComplexF(self.0 + other.0)
    }
    fn minus(&self, other: &Self) -> Self {
        ComplexF(self.0 - other.0)
    }
    fn times(&self, other: &Self) -> Self {
        ComplexF(self.0 * other.0)
    }
    fn negate(&self) -> Self {
        ComplexF(-self.0)
    }
    fn is_exact_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }
    fn vanishes(&self, tol: f64) -> bool {
        self.norm() < tol
    }
}

impl HasRoots for ComplexF {
    fn root_of_unity(n: usize, k: i64) -> Self {
        let k = k.rem_euclid(n as i64);
        ComplexF::turn(k as f64 / n as f64)
    }
}

impl Field for ComplexF {
    fn inverse(&self) -> Option<Self> {
        if self.is_exact_zero() {
            None
        } else {
            Some(ComplexF(self.0.inv()))
        }
    }
}

impl ParamScalar for ComplexF {
    fn to_complex(&self) -> ComplexF {
        *self
    }
    fn integer_multiple_of(&self, n: i64, tol: f64) -> Option<i64> {
        let m = (self.re() / n as f64).round();
        if !m.is_finite() || m.abs() > i64::MAX as f64 / 2.0 {
            return None;
        }
        let r = ComplexF::new(self.re() - n as f64 * m, self.im());
        (r.norm() < tol).then_some(m as i64)
    }
    fn as_rational(&self) -> Option<Rational> {
        None
    }
}
