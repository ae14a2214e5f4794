//! Integers extended by −∞ and +∞, used for degrees, a-invariants and Betti bounds.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
    PosInf,
}

pub use ExtInt::{Fin, NegInf, PosInf};

impl ExtInt {
    pub fn is_finite(self) -> bool {
        matches!(self, Fin(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Fin(v) => Some(v),
            _ => None,
        }
    }

    /// Multiplication by an ordinary integer; `0·(±∞) = 0`.
    pub fn scale(self, k: i64) -> ExtInt {
        match (self, k) {
            (_, 0) => Fin(0),
            (Fin(v), k) => Fin(v * k),
            (NegInf, k) if k > 0 => NegInf,
            (NegInf, _) => PosInf,
            (PosInf, k) if k > 0 => PosInf,
            (PosInf, _) => NegInf,
        }
    }

    /// Maximum of an iterator, −∞ when empty.
    pub fn max_of<I: IntoIterator<Item = ExtInt>>(it: I) -> ExtInt {
        it.into_iter().fold(NegInf, ExtInt::max)
    }

    /// Minimum of an iterator, +∞ when empty.
    pub fn min_of<I: IntoIterator<Item = ExtInt>>(it: I) -> ExtInt {
        it.into_iter().fold(PosInf, ExtInt::min)
    }

    pub fn floor_div(self, k: i64) -> ExtInt {
        assert!(k > 0);
        match self {
            Fin(v) => Fin(v.div_euclid(k)),
            other => other,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        Fin(v)
    }
}

impl Add for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (NegInf, _) | (_, NegInf) => NegInf,
            (PosInf, _) | (_, PosInf) => PosInf,
            (Fin(a), Fin(b)) => Fin(a + b),
        }
    }
}

impl Add<i64> for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: i64) -> ExtInt {
        self + Fin(rhs)
    }
}

impl Sub<i64> for ExtInt {
    type Output = ExtInt;
    fn sub(self, rhs: i64) -> ExtInt {
        self + Fin(-rhs)
    }
}

/// `a − b = a + (−b)`, so a −∞ left operand stays −∞.
impl Sub for ExtInt {
    type Output = ExtInt;
    fn sub(self, rhs: ExtInt) -> ExtInt {
        self + (-rhs)
    }
}

impl Neg for ExtInt {
    type Output = ExtInt;
    fn neg(self) -> ExtInt {
        match self {
            NegInf => PosInf,
            PosInf => NegInf,
            Fin(v) => Fin(-v),
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegInf => write!(f, "-inf"),
            PosInf => write!(f, "+inf"),
            Fin(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Fin(v) => s.serialize_i64(*v),
            NegInf => s.serialize_str("-inf"),
            PosInf => s.serialize_str("+inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(Fin)
                .ok_or_else(|| serde::de::Error::custom("integer out of range")),
            serde_json::Value::String(s) if s == "-inf" => Ok(NegInf),
            serde_json::Value::String(s) if s == "+inf" => Ok(PosInf),
            other => Err(serde::de::Error::custom(format!(
                "expected integer or ±inf, got {other}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_conventions() {
        assert_eq!(NegInf + Fin(5), NegInf);
        assert_eq!(Fin(2) + Fin(3), Fin(5));
        assert_eq!(NegInf.scale(0), Fin(0));
        assert_eq!(NegInf.scale(-2), PosInf);
        assert!(NegInf < Fin(i64::MIN) && Fin(i64::MAX) < PosInf);
        assert_eq!(ExtInt::max_of(vec![]), NegInf);
        assert_eq!(Fin(-3).floor_div(2), Fin(-2));
    }

    #[test]
    fn json_round_trip() {
        let v = vec![NegInf, Fin(-4), PosInf];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["-inf",-4,"+inf"]"#);
        let back: Vec<ExtInt> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
