//! Integers in JSON: a number when it fits in `i64`, a decimal string
//! otherwise, so that reports survive arbitrary sizes and still read
//! naturally for the common case.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Int(pub BigInt);

impl From<BigInt> for Int {
    fn from(x: BigInt) -> Self {
        Int(x)
    }
}

impl From<&BigInt> for Int {
    fn from(x: &BigInt) -> Self {
        Int(x.clone())
    }
}

impl From<i64> for Int {
    fn from(x: i64) -> Self {
        Int(BigInt::from(x))
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct IntVisitor;

impl Visitor<'_> for IntVisitor {
    type Value = Int;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
        Ok(Int(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
        Ok(Int(v.into()))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
        v.parse()
            .map(Int)
            .map_err(|_| E::custom(format!("not an integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        d.deserialize_any(IntVisitor)
    }
}

pub fn ints(xs: &[BigInt]) -> Vec<Int> {
    xs.iter().map(Int::from).collect()
}
