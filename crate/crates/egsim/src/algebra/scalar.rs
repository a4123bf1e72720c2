//! Exact global phases: zero, or `2^(-a/2) * w^b` with w = exp(i*pi/4).
//!
//! Every scalar that arises when simulating Clifford circuits on graph
//! states has this shape, so the type is closed under multiplication and
//! needs no addition.

use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct PhaseScalar {
    zero: bool,
    /// Negative half-exponent of 2: magnitude is 2^(-a/2).
    a: u32,
    /// Power of w, reduced mod 8.
    b: u8,
}

impl PhaseScalar {
    pub const ONE: PhaseScalar = PhaseScalar {
        zero: false,
        a: 0,
        b: 0,
    };
    pub const ZERO: PhaseScalar = PhaseScalar {
        zero: true,
        a: 0,
        b: 0,
    };

    pub fn new(a: u32, b: i64) -> PhaseScalar {
        PhaseScalar {
            zero: false,
            a,
            b: b.rem_euclid(8) as u8,
        }
    }

    /// w^b (unit magnitude).
    pub fn omega(b: i64) -> PhaseScalar {
        PhaseScalar::new(0, b)
    }

    /// i^k.
    pub fn i_pow(k: i64) -> PhaseScalar {
        PhaseScalar::new(0, 2 * k)
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    /// Negative half-exponent of 2; meaningless for the zero scalar.
    pub fn half_exponent(&self) -> u32 {
        self.a
    }

    /// Power of w mod 8; meaningless for the zero scalar.
    pub fn omega_exponent(&self) -> u8 {
        self.b
    }

    pub fn is_unit(&self) -> bool {
        !self.zero && self.a == 0
    }

    #[must_use]
    pub fn mul(&self, o: &PhaseScalar) -> PhaseScalar {
        if self.zero || o.zero {
            return PhaseScalar::ZERO;
        }
        PhaseScalar::new(self.a + o.a, self.b as i64 + o.b as i64)
    }

    #[must_use]
    pub fn conj(&self) -> PhaseScalar {
        if self.zero {
            return PhaseScalar::ZERO;
        }
        PhaseScalar::new(self.a, -(self.b as i64))
    }

    pub fn to_complex(&self) -> Complex64 {
        if self.zero {
            return Complex64::new(0.0, 0.0);
        }
        let mag = (2f64).powf(-(self.a as f64) / 2.0);
        let ang = std::f64::consts::FRAC_PI_4 * self.b as f64;
        Complex64::from_polar(mag, ang)
    }
}

impl fmt::Display for PhaseScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            return write!(f, "0");
        }
        write!(f, "2^(-{}/2)·w^{}", self.a, self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed phase scalar literal: {0}")]
pub struct ParsePhaseError(String);

impl FromStr for PhaseScalar {
    type Err = ParsePhaseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(PhaseScalar::ZERO);
        }
        // Accept both the ASCII and the middle-dot separator.
        let norm = s.replace('·', "*");
        let (mag, ph) = norm
            .split_once('*')
            .ok_or_else(|| ParsePhaseError(s.into()))?;
        let a = mag
            .strip_prefix("2^(-")
            .and_then(|r| r.strip_suffix("/2)"))
            .and_then(|r| r.parse::<u32>().ok())
            .ok_or_else(|| ParsePhaseError(s.into()))?;
        let b = ph
            .strip_prefix("w^")
            .and_then(|r| r.parse::<u8>().ok())
            .filter(|b| *b < 8)
            .ok_or_else(|| ParsePhaseError(s.into()))?;
        Ok(PhaseScalar::new(a, b as i64))
    }
}
