//! The self-describing output envelope: every command emits its payload
//! together with the configuration echo and the conventions in force, so
//! results can be reproduced and reinterpreted byte-for-byte.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Run configuration echoed into every envelope.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RunConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    /// Cap on brute-force group orders.
    pub group_order_cap: u64,
    /// Fourth root of unity assigned to non-principal blocks:
    /// "symbolic" keeps the factor separate; otherwise one of
    /// "1", "-1", "i", "-i".
    pub zeta: String,
    /// Sign convention for the assembled scalar (+1 by default).
    pub sign: i8,
    /// Output format.
    pub format: String,
    /// Always true; recorded so consumers can rely on byte-stable output.
    pub deterministic: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: None,
            q: None,
            p: None,
            group_order_cap: charsheaf::DEFAULT_GROUP_ORDER_CAP,
            zeta: "symbolic".into(),
            sign: 1,
            format: "json".into(),
            deterministic: true,
        }
    }
}

/// Conventions in force, echoed verbatim so outputs are self-describing.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Notes {
    /// Which character labels the regular orbit in each block.
    pub springer_orientation: String,
    /// The model used for extensions of repeated characters.
    pub extension_model: String,
    /// Default handling of the block fourth root of unity.
    pub zeta_default: String,
    /// Default sign of the assembled scalar.
    pub sign_default: i8,
}

impl Default for Notes {
    fn default() -> Self {
        Notes {
            springer_orientation: "trivial-character-to-regular-orbit".into(),
            extension_model: "cyclic-product (trace of the coset is the character of the cycle product)".into(),
            zeta_default: "symbolic".into(),
            sign_default: 1,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TableEnvelope {
    pub command: String,
    pub schema_version: u32,
    pub config: RunConfig,
    pub notes: Notes,
    pub payload: serde_json::Value,
}

impl TableEnvelope {
    pub fn new(command: &str, config: RunConfig, payload: serde_json::Value) -> Self {
        TableEnvelope {
            command: command.into(),
            schema_version: SCHEMA_VERSION,
            config,
            notes: Notes::default(),
            payload,
        }
    }

    pub fn emit(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serialization cannot fail")
    }

    pub fn parse(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_round_trip() {
        let cfg = RunConfig {
            n: Some(2),
            q: Some(3),
            ..RunConfig::default()
        };
        let env = TableEnvelope::new(
            "springer",
            cfg,
            serde_json::json!({"blocks": [{"d": 1}, {"d": 2}]}),
        );
        let text = env.emit();
        let back = TableEnvelope::parse(&text).unwrap();
        assert_eq!(back, env);
        // byte determinism across repeated emission
        assert_eq!(env.emit(), text);
    }
}
