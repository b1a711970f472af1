//! Big integers in JSON: a plain number when it fits in `i64`, a decimal
//! string otherwise. Both forms are accepted on input.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Small(i64),
    Big(String),
}

fn to_repr(v: &BigInt) -> Repr {
    match v.to_i64() {
        Some(x) => Repr::Small(x),
        None => Repr::Big(v.to_string()),
    }
}

fn from_repr<E: serde::de::Error>(r: Repr) -> Result<BigInt, E> {
    match r {
        Repr::Small(x) => Ok(BigInt::from(x)),
        Repr::Big(s) => BigInt::from_str(&s).map_err(|e| E::custom(format!("bad integer {s:?}: {e}"))),
    }
}

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    to_repr(v).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    from_repr(Repr::deserialize(d)?)
}

pub mod map {
    use super::*;

    pub fn serialize<S: Serializer>(m: &BTreeMap<usize, BigInt>, s: S) -> Result<S::Ok, S::Error> {
        m.iter()
            .map(|(k, v)| (k.to_string(), to_repr(v)))
            .collect::<BTreeMap<_, _>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, BigInt>, D::Error> {
        BTreeMap::<String, Repr>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| {
                let key = k
                    .parse::<usize>()
                    .map_err(|_| D::Error::custom(format!("bad degree {k:?}")))?;
                Ok((key, from_repr(v)?))
            })
            .collect()
    }
}
