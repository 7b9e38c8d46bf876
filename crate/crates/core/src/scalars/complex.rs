use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::Error;

/// Double-precision complex number.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct ComplexF(pub Complex64);

impl ComplexF {
    pub const ZERO: ComplexF = ComplexF(Complex64 { re: 0.0, im: 0.0 });
    pub const ONE: ComplexF = ComplexF(Complex64 { re: 1.0, im: 0.0 });

    pub fn new(re: f64, im: f64) -> Self {
        ComplexF(Complex64::new(re, im))
    }

    pub fn real(re: f64) -> Self {
        ComplexF::new(re, 0.0)
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn is_finite(&self) -> bool {
        self.0.re.is_finite() && self.0.im.is_finite()
    }

    /// `exp(2πi·t)`.
    pub fn turn(t: f64) -> Self {
        ComplexF(Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t))
    }

    pub fn exp(&self) -> Self {
        ComplexF(self.0.exp())
    }

    pub fn inner(&self) -> Complex64 {
        self.0
    }
}

impl From<Complex64> for ComplexF {
    fn from(z: Complex64) -> Self {
        ComplexF(z)
    }
}

impl From<&Rational> for ComplexF {
    fn from(r: &Rational) -> Self {
        ComplexF::real(r.to_f64())
    }
}

impl fmt::Debug for ComplexF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ComplexF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.im == 0.0 {
            write!(f, "{}", self.0.re)
        } else if self.0.im < 0.0 {
            write!(f, "{}-{}i", self.0.re, -self.0.im)
        } else {
            write!(f, "{}+{}i", self.0.re, self.0.im)
        }
    }
}

fn parse_real(s: &str) -> Option<f64> {
    if s.contains('/') {
        s.parse::<Rational>().ok().map(|r| r.to_f64())
    } else {
        s.parse::<f64>().ok().filter(|v| v.is_finite())
    }
}

impl FromStr for ComplexF {
    type Err = Error;

    /// Accepts `"a"`, `"bi"`, `"a+bi"`, `"a-bi"` with decimal or `p/q` parts.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("not a complex number: {s:?}"));
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return parse_real(&t).map(ComplexF::real).ok_or_else(bad);
        };
        // Split at the last sign that is not the leading one and not part of
        // an exponent such as `1e-3`.
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => Some(1.0),
            "-" => Some(-1.0),
            other => parse_real(other),
        };
        match (parse_real(re), im) {
            (Some(a), Some(b)) => Ok(ComplexF::new(a, b)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for ComplexF {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.0.re, self.0.im].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexF {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(deserializer)?;
        Ok(ComplexF::new(re, im))
    }
}
