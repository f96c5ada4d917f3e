//! Big integers travel as decimal strings in JSON.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serializer};
use std::collections::BTreeMap;

pub fn ser_map<S: Serializer>(map: &BTreeMap<u64, BigInt>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(map.iter().map(|(k, v)| (k.to_string(), v.to_string())))
}

pub fn de_map<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u64, BigInt>, D::Error> {
    let raw: BTreeMap<String, String> = BTreeMap::deserialize(d)?;
    raw.into_iter()
        .map(|(k, v)| {
            let key = k.parse::<u64>().map_err(serde::de::Error::custom)?;
            let val = v.parse::<BigInt>().map_err(serde::de::Error::custom)?;
            Ok((key, val))
        })
        .collect()
}
