// SPDX-License-Identifier: Apache-2.0

//! Big integers as decimal strings in structured output.

use num_bigint::BigInt;
use serde::{de, Deserialize, Deserializer, Serializer};

const MAX_DIGITS: usize = 4096;

pub fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    let text = String::deserialize(d)?;
    parse(&text).map_err(de::Error::custom)
}

fn parse(text: &str) -> Result<BigInt, String> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || digits.len() > MAX_DIGITS || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("invalid decimal integer {text:?}"));
    }
    text.parse().map_err(|_| format!("invalid decimal integer {text:?}"))
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.collect_str(v),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| parse(&t).map_err(de::Error::custom))
            .transpose()
    }
}
