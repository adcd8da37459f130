//! TOML move lists for replaying cover scripts.
//!
//! ```toml
//! [[move]]
//! kind = "handle_slide"
//! handle = "section"
//! over = "fiber"
//!
//! [[move]]
//! kind = "blow_down"
//! ```

use lefschetz_core::cover::Move;
use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveScript {
    #[serde(rename = "move", default)]
    pub moves: Vec<Move>,
}

impl MoveScript {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn to_toml(&self) -> Result<String> {
        Ok(toml::to_string(self)?)
    }
}
