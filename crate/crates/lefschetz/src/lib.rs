//! File formats, certificates, grid reports and the `lefschetz` command-line
//! tool built on [`lefschetz_core`].

pub mod certificate;
pub mod config;
pub mod error;
pub mod formats;
pub mod grid;
pub mod script;
pub mod verify;

pub use lefschetz_core as core;

pub use certificate::Certificate;
pub use config::EngineConfig;
pub use error::{Error, Result};
