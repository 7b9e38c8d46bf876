use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{ComplexF, Rational};
use crate::error::Error;

/// Element of the group ring `Q[ζ]/(ζ^n − 1)` with `ζ = exp(2πi/n)`.
///
/// `coeffs[k]` is the coefficient of `ζ^k`. Two elements are equal as group
/// ring elements iff their coefficient vectors agree; use
/// [`CycloElem::vanishes`] to test whether the complex number they embed to is
/// zero.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycloElem {
    coeffs: Vec<Rational>,
}

impl CycloElem {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "group ring of Z/0");
        CycloElem { coeffs: vec![Rational::zero(); n] }
    }

    pub fn one(n: usize) -> Self {
        Self::from_rational(Rational::one(), n)
    }

    pub fn from_rational(r: Rational, n: usize) -> Self {
        let mut e = Self::zero(n);
        e.coeffs[0] = r;
        e
    }

    /// `ζ^k`, with `k` reduced mod `n`.
    pub fn zeta_pow(n: usize, k: i64) -> Self {
        let mut e = Self::zero(n);
        e.coeffs[k.rem_euclid(n as i64) as usize] = Rational::one();
        e
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::Structural("cyclotomic element with no coefficients".into()));
        }
        Ok(CycloElem { coeffs })
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check_len(&self, other: &Self) -> Result<(), Error> {
        if self.n() != other.n() {
            return Err(Error::Structural(format!(
                "cyclotomic length mismatch: {} vs {}",
                self.n(),
                other.n()
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.check_len(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycloElem { coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_len(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycloElem { coeffs })
    }

    /// Convolution product with exponents reduced mod `n`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_len(other)?;
        let n = self.n();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[(i + j) % n] += &(a * b);
            }
        }
        Ok(CycloElem { coeffs: out })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloElem { coeffs: self.coeffs.iter().map(|a| a * r).collect() }
    }

    pub fn neg(&self) -> Self {
        CycloElem { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    /// Zero as a group ring element.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Evaluate at `ζ = exp(2πi/n)` in double precision.
    pub fn embed(&self) -> ComplexF {
        let n = self.n() as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let theta = 2.0 * PI * k as f64 / n;
            let a = a.to_f64();
            re += a * theta.cos();
            im += a * theta.sin();
        }
        ComplexF::new(re, im)
    }

    /// Canonical representative in `Q(ζ_n)`: the remainder modulo the
    /// cyclotomic polynomial `Φ_n`, of length `φ(n)`.
    pub fn reduce(&self) -> Vec<Rational> {
        let phi = cyclotomic_polynomial(self.n());
        let deg = phi.len() - 1;
        let mut rem: Vec<Rational> = self.coeffs.clone();
        // Φ_n is monic, so long division stays in Q.
        for top in (deg..rem.len()).rev() {
            let lead = rem[top].clone();
            if lead.is_zero() {
                continue;
            }
            let shift = top - deg;
            for (k, p) in phi.iter().enumerate() {
                if !p.is_zero() {
                    rem[shift + k] -= &(&lead * &Rational::from(p.clone()));
                }
            }
        }
        rem.truncate(deg);
        rem
    }

    /// Zero as a complex number, decided exactly by reduction mod `Φ_n`.
    pub fn vanishes(&self) -> bool {
        self.reduce().iter().all(Rational::is_zero)
    }

    /// The rational value of this element when it lies in `Q ⊂ Q(ζ_n)`.
    pub fn to_rational(&self) -> Option<Rational> {
        let r = self.reduce();
        if r.iter().skip(1).all(Rational::is_zero) {
            Some(r.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}·ζ")?,
                _ => write!(f, "{a}·ζ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Integer coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n − 1 = ∏_{d | n} Φ_d; divide out every proper divisor.
    let mut poly = vec![BigInt::zero(); n + 1];
    poly[0] = -BigInt::one();
    poly[n] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = exact_div(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for top in (dd..num.len()).rev() {
        let lead = rem[top].clone();
        quot[top - dd] = lead.clone();
        for (k, p) in den.iter().enumerate() {
            rem[top - dd + k] -= &lead * p;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}
