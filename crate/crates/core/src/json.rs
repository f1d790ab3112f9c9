//! JSON encoding of arbitrary-precision integers.
//!
//! Integers inside the IEEE-754 safe range (`|x| <= 2^53 - 1`) are written as
//! JSON numbers; anything larger is written as a decimal string so that no
//! consumer silently rounds it. Both forms are accepted when reading.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Int(i64),
    UInt(u64),
    Str(String),
}

fn to_repr(x: &BigInt) -> Repr {
    match x.to_i64() {
        Some(v) if v.abs() <= MAX_SAFE_INTEGER => Repr::Int(v),
        _ => Repr::Str(x.to_string()),
    }
}

fn from_repr<E: serde::de::Error>(r: Repr) -> Result<BigInt, E> {
    match r {
        Repr::Int(v) => Ok(v.into()),
        Repr::UInt(v) => Ok(v.into()),
        Repr::Str(s) => s.parse().map_err(|_| E::custom(format!("not an integer: {s:?}"))),
    }
}

/// Converts to a `serde_json::Value` under the same rule.
pub fn to_value(x: &BigInt) -> serde_json::Value {
    serde_json::to_value(to_repr(x)).expect("integer repr serializes")
}

pub fn is_safe(x: &BigInt) -> bool {
    x.abs() <= BigInt::from(MAX_SAFE_INTEGER)
}

pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_repr(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_repr(Repr::deserialize(d)?)
    }
}

pub mod bigint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(to_repr))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Repr>::deserialize(d)?.into_iter().map(from_repr).collect()
    }
}

pub mod bigint_matrix {
    use super::*;

    pub fn serialize<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(rows.iter().map(|r| r.iter().map(to_repr).collect::<Vec<_>>()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        Vec::<Vec<Repr>>::deserialize(d)?.into_iter().map(|r| r.into_iter().map(from_repr).collect()).collect()
    }
}
