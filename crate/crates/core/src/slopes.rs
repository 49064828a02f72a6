//! Slopes on the boundary torus and their intersection distance.
//!
//! A slope is a primitive peripheral class written p/q in meridian-longitude
//! coordinates, with the meridian at 1/0. Every slope is stored reduced with
//! q >= 0 and the sign carried on p, so equality is structural. The distance
//! between two slopes a/b and c/d is the minimal geometric intersection
//! number |ad - bc|.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A slope p/q in lowest terms with q >= 0; the meridian is 1/0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    /// Builds the reduced canonical representative of p/q.
    ///
    /// Divides by gcd(|p|, |q|), normalizes q >= 0, and canonicalizes any
    /// p/0 to the meridian 1/0. Rejects (0, 0).
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let mut p: BigInt = p.into();
        let mut q: BigInt = q.into();
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroSlope);
        }
        let g = p.gcd(&q);
        p /= &g;
        q /= &g;
        if q.is_negative() {
            p = -p;
            q = -q;
        } else if q.is_zero() {
            p = BigInt::one();
        }
        Ok(Slope { p, q })
    }

    /// The meridian 1/0.
    pub fn meridian() -> Self {
        Slope {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    /// The integral slope k/1.
    pub fn integral(k: impl Into<BigInt>) -> Self {
        Slope {
            p: k.into(),
            q: BigInt::one(),
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.p
    }

    pub fn denominator(&self) -> &BigInt {
        &self.q
    }

    pub fn is_meridian(&self) -> bool {
        self.q.is_zero()
    }

    /// True when q = 1.
    pub fn is_integral(&self) -> bool {
        self.q.is_one()
    }

    /// The primitive class (p, q) representing this slope.
    pub fn class(&self) -> PeripheralClass {
        PeripheralClass::new(self.p.clone(), self.q.clone())
    }

    /// Minimal geometric intersection number |ad - bc| with another slope.
    pub fn distance(&self, other: &Slope) -> BigInt {
        (&self.p * &other.q - &self.q * &other.p).abs()
    }
}

/// Slopes order by (q, p); this is the output order used in tables.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.q.cmp(&other.q).then_with(|| self.p.cmp(&other.p))
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::SlopeParse(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (
                BigInt::from_str(p.trim()).map_err(|_| err())?,
                BigInt::from_str(q.trim()).map_err(|_| err())?,
            ),
            None => (
                BigInt::from_str(s.trim()).map_err(|_| err())?,
                BigInt::one(),
            ),
        };
        if p.is_zero() && q.is_zero() {
            return Err(err());
        }
        Slope::new(p, q)
    }
}

/// A class x·mu + y·lambda in H_1 of the boundary torus; not necessarily
/// primitive. Norms are evaluated on these.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeripheralClass {
    pub x: BigInt,
    pub y: BigInt,
}

impl PeripheralClass {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        PeripheralClass {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// |x·d - y·c| against the slope c/d; agrees with `Slope::distance` on
    /// primitive classes and is linear under scaling of the class.
    pub fn distance_to_slope(&self, slope: &Slope) -> BigInt {
        (&self.x * &slope.q - &self.y * &slope.p).abs()
    }
}
