use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{ComplexF, ParamScalar, Rational};

/// The cyclic group order `n` and parameters `c_1, …, c_n` with `c_n = 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CyclicParams<P> {
    n: usize,
    c: Vec<P>,
}

pub type ExactParams = CyclicParams<Rational>;
pub type FloatParams = CyclicParams<ComplexF>;

impl<P: ParamScalar> CyclicParams<P> {
    /// `c` lists `c_1, …, c_n`; the last entry must be zero.
    pub fn new(n: usize, c: Vec<P>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Structural("the cyclic group order must be positive".into()));
        }
        if c.len() != n {
            return Err(Error::Structural(format!("expected {n} parameters, got {}", c.len())));
        }
        if !c[n - 1].is_exact_zero() {
            return Err(Error::Structural("the last parameter must satisfy c_n = 0".into()));
        }
        Ok(CyclicParams { n, c })
    }

    /// All parameters zero.
    pub fn zero(n: usize) -> Self {
        CyclicParams { n, c: vec![P::zero(n); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `c_1, …, c_n` in order.
    pub fn values(&self) -> &[P] {
        &self.c
    }

    /// `c_i` with `i` reduced mod `n` into `1..=n`.
    pub fn c(&self, i: i64) -> &P {
        let n = self.n as i64;
        let idx = (i - 1).rem_euclid(n) as usize;
        &self.c[idx]
    }

    /// `Δ_{i,j} = c_i − c_j`.
    pub fn delta(&self, i: i64, j: i64) -> P {
        self.c(i).minus(self.c(j))
    }

    /// The same parameters as complex floats.
    pub fn to_float(&self) -> FloatParams {
        CyclicParams { n: self.n, c: self.c.iter().map(ParamScalar::to_complex).collect() }
    }

    /// The same parameters as exact rationals, when they are rational.
    pub fn to_exact(&self) -> Result<ExactParams> {
        let c = self
            .c
            .iter()
            .map(|v| v.as_rational())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Mode("exact arithmetic needs rational parameters".into()))?;
        Ok(CyclicParams { n: self.n, c })
    }
}

impl ExactParams {
    pub fn from_integers(c: &[i64]) -> Result<Self> {
        Self::new(c.len(), c.iter().map(|&v| Rational::from(v)).collect())
    }

    /// Parses a comma separated list such as `"1/2,-3,0"`.
    pub fn parse(n: usize, list: &str) -> Result<Self> {
        let c = list.split(',').map(str::parse).collect::<Result<Vec<Rational>>>()?;
        Self::new(n, c)
    }
}

impl FloatParams {
    pub fn parse(n: usize, list: &str) -> Result<Self> {
        let c = list.split(',').map(str::parse).collect::<Result<Vec<ComplexF>>>()?;
        Self::new(n, c)
    }
}

/// `(n−1)!` as a rational.
pub fn factorial(m: usize) -> Rational {
    (1..=m).map(Rational::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_reduction() {
        let p = ExactParams::parse(3, "5,-1/2,0").unwrap();
        assert_eq!(p.c(1), &Rational::from(5));
        assert_eq!(p.c(4), &Rational::from(5));
        assert_eq!(p.c(0), &Rational::zero());
        assert_eq!(p.c(-1), &Rational::new(-1, 2));
        assert_eq!(p.delta(1, 2), Rational::new(11, 2));
    }

    #[test]
    fn rejects_bad_parameter_lists() {
        assert!(matches!(ExactParams::parse(2, "1,1"), Err(Error::Structural(_))));
        assert!(matches!(ExactParams::parse(3, "1,0"), Err(Error::Structural(_))));
        assert!(matches!(ExactParams::parse(2, "x,0"), Err(Error::Parse(_))));
        assert!(ExactParams::new(0, vec![]).is_err());
    }

    #[test]
    fn float_to_exact_mode_error() {
        let p = FloatParams::parse(2, "0.5+1i,0").unwrap();
        assert!(matches!(p.to_exact(), Err(Error::Mode(_))));
        let q = ExactParams::parse(2, "1/2,0").unwrap();
        assert_eq!(q.to_float().c(1), &ComplexF::new(0.5, 0.0));
    }
}
