use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Rational exponent for powers and roots.
pub type Exponent = Ratio<i64>;

/// An element of the max-times semifield, stored as its natural logarithm.
///
/// `+` is tropical addition (maximum) and `*` is tropical multiplication
/// (ordinary product, i.e. a sum of logarithms). The semifield zero is kept
/// as `-∞`. An explicit top element `+∞` stands for an absent upper bound; it
/// is absorbed by zero under multiplication (`0 ⊗ ⊤ = 0`).
#[derive(Clone, Copy, PartialEq, PartialOrd)]
pub struct Scalar(f64);

impl Scalar {
    pub const ZERO: Scalar = Scalar(f64::NEG_INFINITY);
    pub const ONE: Scalar = Scalar(0.0);
    pub const TOP: Scalar = Scalar(f64::INFINITY);

    /// Builds a scalar from its logarithm. `NaN` is not an element.
    pub fn from_log(log: f64) -> Self {
        assert!(!log.is_nan(), "NaN is not a semifield element");
        Scalar(log)
    }

    /// Builds a scalar from an ordinary nonnegative value.
    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value < 0.0 {
            return Err(Error::Domain(format!(
                "{value} is not a nonnegative number"
            )));
        }
        Ok(Scalar(value.ln()))
    }

    /// `num / den` computed as a difference of logarithms.
    pub fn ratio(num: f64, den: f64) -> Result<Self> {
        if den.is_nan() || den <= 0.0 || den.is_infinite() {
            return Err(Error::Domain(format!("invalid denominator {den}")));
        }
        Ok(Scalar(Scalar::new(num)?.0 - den.ln()))
    }

    #[inline]
    pub fn log(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0.exp()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    #[inline]
    pub fn is_top(self) -> bool {
        self.0 == f64::INFINITY
    }

    /// Neither zero nor top.
    #[inline]
    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    /// Multiplicative inverse. The inverse of top is zero.
    pub fn inv(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        Ok(Scalar(-self.0))
    }

    /// Rational power `self^q`. Exact in the log domain: the logarithm is
    /// multiplied by `q`.
    pub fn pow(self, q: Exponent) -> Result<Self> {
        if q.is_zero() {
            if self.is_zero() {
                return Err(Error::Domain("zero raised to power 0".into()));
            }
            return Ok(Scalar::ONE);
        }
        if self.is_zero() {
            if q < Exponent::zero() {
                return Err(Error::Domain(format!("zero raised to power {q}")));
            }
            return Ok(Scalar::ZERO);
        }
        let q = q.to_f64().expect("finite rational");
        Ok(Scalar(self.0 * q))
    }

    /// `self^(1/k)`, defined for every element including zero.
    pub fn root(self, k: usize) -> Self {
        assert!(k > 0, "root of order zero");
        if self.is_zero() || self.is_top() {
            return self;
        }
        Scalar(self.0 / k as f64)
    }

    /// Integer power `self^k` for `k ≥ 1`.
    pub fn powi(self, k: usize) -> Self {
        assert!(k > 0, "use Scalar::ONE for the zeroth power");
        if self.is_zero() || self.is_top() {
            return self;
        }
        Scalar(self.0 * k as f64)
    }

    pub fn max(self, other: Self) -> Self {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other.0 < self.0 {
            other
        } else {
            self
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;

    #[inline]
    fn add(self, rhs: Scalar) -> Scalar {
        self.max(rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    #[inline]
    fn mul(self, rhs: Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            Scalar::ZERO
        } else {
            Scalar(self.0 + rhs.0)
        }
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, Add::add)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ONE, Mul::mul)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::ZERO
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("0")
        } else if self.is_top() {
            f.write_str("inf")
        } else {
            fmt::Display::fmt(&self.value(), f)
        }
    }
}

/// Parses an ordinary-scale numeral: a decimal (`0.25`, `3`), an exact
/// fraction (`1/6`), or `inf`/`top` for the unbounded element.
pub fn parse_numeral(text: &str) -> Result<Scalar> {
    let text = text.trim();
    match text.to_ascii_lowercase().as_str() {
        "inf" | "+inf" | "infinity" | "top" | "∞" => return Ok(Scalar::TOP),
        _ => {}
    }
    let number = |s: &str| -> Result<f64> {
        let v: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("malformed number {s:?}")))?;
        if !v.is_finite() || v < 0.0 {
            return Err(Error::Parse(format!(
                "{s:?} is not a finite nonnegative number"
            )));
        }
        Ok(v)
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let (num, den) = (number(num)?, number(den)?);
            if den == 0.0 {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Scalar::ratio(num, den)
        }
        None => Scalar::new(number(text)?),
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_numeral(s)
    }
}
