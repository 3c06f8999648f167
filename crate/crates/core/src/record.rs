//! Versioned JSON envelope for everything written to disk.
//!
//! ```json
//! { "role": "secret-key", "version": 1, "payload": "01..." }
//! ```
//!
//! `payload` is the hex of the canonical binary encoding of the object.
//! Optional fields: `seed` (the `--seed` a record was created under) and
//! `dem` (the symmetric part of a hybrid ciphertext).

use serde::{Deserialize, Serialize};

use crate::error::{decode_err, Result};

pub const RECORD_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    PublicParams,
    MasterKey,
    SecretKey,
    SketchPar,
    Ciphertext,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::PublicParams => "public-params",
            Role::MasterKey => "master-key",
            Role::SecretKey => "secret-key",
            Role::SketchPar => "sketch-par",
            Role::Ciphertext => "ciphertext",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KeyStoreRecord {
    pub role: Role,
    pub version: u32,
    #[serde(with = "hex_bytes")]
    pub payload: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "opt_hex_bytes"
    )]
    pub dem: Option<Vec<u8>>,
}

impl KeyStoreRecord {
    pub fn new(role: Role, payload: Vec<u8>) -> Self {
        Self {
            role,
            version: RECORD_VERSION,
            payload,
            seed: None,
            dem: None,
        }
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_dem(mut self, dem: Vec<u8>) -> Self {
        self.dem = Some(dem);
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("record serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rec: Self = serde_json::from_str(s).map_err(|e| decode_err(e.to_string()))?;
        if rec.version != RECORD_VERSION {
            return Err(decode_err(format!(
                "unsupported record version {}",
                rec.version
            )));
        }
        Ok(rec)
    }

    /// Parses and checks the role in one step.
    pub fn from_json_expecting(s: &str, role: Role) -> Result<Self> {
        let rec = Self::from_json(s)?;
        if rec.role != role {
            return Err(decode_err(format!(
                "expected a {} record, found {}",
                role.as_str(),
                rec.role.as_str()
            )));
        }
        Ok(rec)
    }
}

mod hex_bytes {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(bytes: &[u8], s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&hex::encode(bytes))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u8>, D::Error> {
        let s = String::deserialize(d)?;
        hex::decode(s).map_err(serde::de::Error::custom)
    }
}

mod opt_hex_bytes {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(bytes: &Option<Vec<u8>>, s: S) -> Result<S::Ok, S::Error> {
        match bytes {
            Some(b) => s.serialize_str(&hex::encode(b)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<u8>>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| hex::decode(s).map_err(serde::de::Error::custom))
            .transpose()
    }
}
