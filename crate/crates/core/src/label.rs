//! Vertex labels.
//!
//! Labels are normalized on entry: surrounding whitespace is dropped and
//! all-digit strings become numbers, so `"7"` and `7` name the same vertex.
//! Numbers sort before names; numbers compare numerically, names bytewise.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    Num(u64),
    Name(String),
}

impl VertexLabel {
    pub fn parse(raw: &str) -> Self {
        let s = raw.trim();
        if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
            if let Ok(n) = s.parse::<u64>() {
                return VertexLabel::Num(n);
            }
        }
        VertexLabel::Name(s.to_string())
    }
}

impl From<u64> for VertexLabel {
    fn from(n: u64) -> Self {
        VertexLabel::Num(n)
    }
}

impl From<usize> for VertexLabel {
    fn from(n: usize) -> Self {
        VertexLabel::Num(n as u64)
    }
}

impl From<i32> for VertexLabel {
    fn from(n: i32) -> Self {
        if n >= 0 {
            VertexLabel::Num(n as u64)
        } else {
            VertexLabel::Name(n.to_string())
        }
    }
}

impl From<&str> for VertexLabel {
    fn from(s: &str) -> Self {
        VertexLabel::parse(s)
    }
}

impl From<String> for VertexLabel {
    fn from(s: String) -> Self {
        VertexLabel::parse(&s)
    }
}

impl FromStr for VertexLabel {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(VertexLabel::parse(s))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Num(n) => write!(f, "{n}"),
            VertexLabel::Name(s) => f.write_str(s),
        }
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            VertexLabel::Num(n) => serializer.serialize_u64(*n),
            VertexLabel::Name(s) => serializer.serialize_str(s),
        }
    }
}

struct LabelVisitor;

impl Visitor<'_> for LabelVisitor {
    type Value = VertexLabel;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a vertex label (string or non-negative integer)")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<VertexLabel, E> {
        Ok(VertexLabel::Num(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<VertexLabel, E> {
        if v >= 0 {
            Ok(VertexLabel::Num(v as u64))
        } else {
            Err(E::custom(format!("negative vertex label {v}")))
        }
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<VertexLabel, E> {
        Ok(VertexLabel::parse(v))
    }
}

impl<'de> Deserialize<'de> for VertexLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(LabelVisitor)
    }
}
