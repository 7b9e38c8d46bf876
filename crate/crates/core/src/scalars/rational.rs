use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in an `i64` are kept inline and
/// operated on with `i128` intermediates; anything larger falls back to
/// [`BigRational`]. The representation is canonical, so derived equality
/// and hashing agree with numeric equality.
#[derive(Clone)]
pub struct Rational(Repr);

#[derive(Clone)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
}

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self::from_i128(numer as i128, denom as i128)
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Self::from_ratio(BigRational::new(numer, denom))
    }

    /// Reduces `n/d` (`d ≠ 0`) and picks the inline form when it fits.
    fn from_i128(n: i128, d: i128) -> Self {
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(BigRational::new(n.into(), d.into()))),
        }
    }

    /// Wraps an already reduced ratio, demoting it when it fits.
    fn from_ratio(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(a), Some(b)) => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(r)),
        }
    }

    fn to_ratio(&self) -> BigRational {
        match &self.0 {
            Repr::Small(a, b) => BigRational::new_raw((*a).into(), (*b).into()),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(a, _) => (*a).into(),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, b) => (*b).into(),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, b) => *b == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(a, _) => *a < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    /// The value as an `i64` if it is an integer small enough to fit.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(a, 1) => Some(*a),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(a, b) => *a as f64 / *b as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(a, b) => Some(Self::from_i128(*b as i128, *a as i128)),
            Repr::Big(r) => Some(Self::from_ratio(r.recip())),
        }
    }

    pub fn floor(&self) -> BigInt {
        match &self.0 {
            Repr::Small(a, b) => a.div_floor(b).into(),
            Repr::Big(r) => r.floor().to_integer(),
        }
    }

    /// `m` such that `self = n * m` with `m` an integer, if one exists.
    pub fn integer_quotient(&self, n: i64) -> Option<i64> {
        let q = self / &Rational::from(n);
        q.to_i64()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Self::from_i128(a + c, b);
            }
            if let Some(num) = (a * d).checked_add(c * b) {
                return Self::from_i128(num, b * d);
            }
        }
        Self::from_ratio(self.to_ratio() + rhs.to_ratio())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            return Self::from_i128(a * c, b * d);
        }
        Self::from_ratio(self.to_ratio() * rhs.to_ratio())
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&-rhs)
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self.mul_ref(&rhs.recip().expect("division by zero rational"))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(a, b) => {
                0u8.hash(state);
                a.hash(state);
                b.hash(state);
            }
            Repr::Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_ratio().cmp(&other.to_ratio()),
        }
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(Repr::Small(v, 1))
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational::from(v as i64)
    }
}

impl From<usize> for Rational {
    fn from(v: usize) -> Self {
        Rational::from(BigInt::from(v))
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Self::from_ratio(BigRational::from_integer(v))
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Self::from_ratio(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` with optional sign on `p`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rational::from_big(num, den))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                self.$imp(rhs)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$imp(&rhs)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                self.$imp(rhs)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$imp(&rhs)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);
binop!(Div, div, div_ref);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = self.mul_ref(rhs);
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(a, b) => match a.checked_neg() {
                Some(m) => Rational(Repr::Small(m, *b)),
                None => Rational::from_ratio(-self.to_ratio()),
            },
            Repr::Big(r) => Rational::from_ratio(-r),
        }
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from(7));
        assert_eq!("-3/6".parse::<Rational>().unwrap(), Rational::new(-1, 2));
        assert_eq!(" 4/-8 ".parse::<Rational>().unwrap(), Rational::new(-1, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = Rational::new(6, -4);
        assert_eq!(r.numer(), BigInt::from(-3));
        assert_eq!(r.denom(), BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn integer_quotient() {
        assert_eq!(Rational::from(-6).integer_quotient(3), Some(-2));
        assert_eq!(Rational::from(5).integer_quotient(3), None);
        assert_eq!(Rational::new(3, 2).integer_quotient(1), None);
    }

    #[test]
    fn serde_as_string() {
        let r = Rational::new(-5, 3);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, "\"-5/3\"");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    fn big(r: &Rational) -> BigRational {
        BigRational::new(r.numer(), r.denom())
    }

    fn edge() -> impl proptest::strategy::Strategy<Value = i64> {
        use proptest::prelude::*;
        prop_oneof![-20i64..20, any::<i64>(), Just(i64::MIN), Just(i64::MAX), (i64::MAX - 3)..=i64::MAX]
    }

    proptest::proptest! {
        #[test]
        fn arithmetic_matches_bigrational(a in edge(), b in edge(), c in edge(), d in edge()) {
            proptest::prop_assume!(b != 0 && d != 0);
            let (x, y) = (Rational::new(a, b), Rational::new(c, d));
            let (bx, by) = (BigRational::new(a.into(), b.into()), BigRational::new(c.into(), d.into()));
            proptest::prop_assert_eq!(big(&(&x + &y)), &bx + &by);
            proptest::prop_assert_eq!(big(&(&x - &y)), &bx - &by);
            proptest::prop_assert_eq!(big(&(&x * &y)), &bx * &by);
            proptest::prop_assert_eq!(big(&(-&x)), -&bx);
            proptest::prop_assert_eq!(x.cmp(&y), bx.cmp(&by));
            if c != 0 {
                proptest::prop_assert_eq!(big(&(&x / &y)), &bx / &by);
                // Results that come back into range compare equal to the inline form.
                let round = &(&x * &y) / &y;
                proptest::prop_assert_eq!(&round, &x);
            }
            proptest::prop_assert_eq!(x.floor(), bx.floor().to_integer());
        }
    }
}
