//! The versioned engine configuration shipped with the binary.

use std::path::Path;

use lefschetz_core::braid::BlockPassConvention;
use lefschetz_core::invariants::MeyerConvention;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const BUILTIN: &str = include_str!("../config/engine.toml");
pub const CONFIG_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnchorValue {
    pub label: String,
    pub sigma: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeyerSection {
    pub global_sign: i8,
    pub separating_local: i8,
    #[serde(default)]
    pub anchors: Vec<AnchorValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    pub version: u32,
    pub block_pass: BlockPassConvention,
    pub meyer: MeyerSection,
}

impl EngineConfig {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("shipped configuration parses")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let cfg: EngineConfig = toml::from_str(text)?;
        if cfg.version != CONFIG_VERSION {
            return Err(Error::Config(format!(
                "unsupported version {} (expected {CONFIG_VERSION})",
                cfg.version
            )));
        }
        for v in [cfg.meyer.global_sign, cfg.meyer.separating_local] {
            if !(-1..=1).contains(&v) {
                return Err(Error::Config(format!(
                    "Meyer convention entry {v} not in {{-1, 0, 1}}"
                )));
            }
        }
        if cfg.meyer.global_sign == 0 {
            return Err(Error::Config("global_sign must be ±1".into()));
        }
        Ok(cfg)
    }

    /// The file at `path`, or the shipped configuration.
    pub fn load(path: Option<&Path>) -> Result<Self> {
        match path {
            None => Ok(Self::builtin()),
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
                Self::parse(&text)
            }
        }
    }

    pub fn meyer_convention(&self) -> MeyerConvention {
        MeyerConvention {
            global_sign: self.meyer.global_sign,
            separating_local: self.meyer.separating_local,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_matches_frozen_core_values() {
        let cfg = EngineConfig::builtin();
        assert_eq!(cfg.block_pass, BlockPassConvention::FROZEN);
        assert_eq!(cfg.meyer_convention(), MeyerConvention::FROZEN);
        assert_eq!(cfg.meyer.anchors.len(), 3);
    }

    #[test]
    fn rejects_bad_sign() {
        let text = BUILTIN.replace("global_sign = -1", "global_sign = 0");
        assert!(EngineConfig::parse(&text).is_err());
        let text = BUILTIN.replace("version = 1", "version = 7");
        assert!(EngineConfig::parse(&text).is_err());
    }
}
