use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Exact ratio of integers in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, Error> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    /// `num / den` for machine integers; `den` must be nonzero.
    pub fn from_u64(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.denom().is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl std::ops::Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl std::ops::Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidParameter(format!("not a rational: {s}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Rational::new(n, d)
    }
}

/// Compares `a/b` with `c/d` for positive denominators without division.
pub(crate) fn cmp_fractions(a: u64, b: u64, c: u64, d: u64) -> Ordering {
    (u128::from(a) * u128::from(d)).cmp(&(u128::from(c) * u128::from(b)))
}

fn int_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &int_to_json(self.numer()))?;
        st.serialize_field("den", &int_to_json(self.denom()))?;
        st.end()
    }
}

#[derive(Deserialize)]
struct RawRational {
    num: serde_json::Value,
    den: serde_json::Value,
}

fn json_to_int<E: de::Error>(v: &serde_json::Value) -> Result<BigInt, E> {
    match v {
        serde_json::Value::Number(n) => n.to_string().parse().map_err(E::custom),
        serde_json::Value::String(s) => s.parse().map_err(E::custom),
        other => Err(E::custom(format!("expected integer, got {other}"))),
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawRational::deserialize(deserializer)?;
        let num = json_to_int(&raw.num)?;
        let den = json_to_int(&raw.den)?;
        Rational::new(num, den).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_display() {
        assert_eq!(Rational::from_u64(6, 4).to_string(), "3/2");
        assert_eq!(Rational::from_u64(8, 2).to_string(), "4");
        assert_eq!(
            "25/6".parse::<Rational>().unwrap(),
            Rational::from_u64(50, 12)
        );
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn order_is_exact() {
        assert!(Rational::from_u64(1, 3) < Rational::from_u64(333_333_333_333, 999_999_999_998));
        assert_eq!(cmp_fractions(1, 3, 2, 6), Ordering::Equal);
        assert_eq!(cmp_fractions(u64::MAX, 3, u64::MAX, 2), Ordering::Less);
    }

    #[test]
    fn json_shape() {
        let r = Rational::from_u64(3, 2);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"num":3,"den":2}"#);
        assert_eq!(serde_json::from_str::<Rational>(&s).unwrap(), r);
        let big: Rational =
            serde_json::from_str(r#"{"num":"123456789012345678901234567890","den":"2"}"#).unwrap();
        assert_eq!(
            serde_json::from_str::<Rational>(&serde_json::to_string(&big).unwrap()).unwrap(),
            big
        );
    }
}
