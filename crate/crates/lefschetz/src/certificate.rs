//! Verification certificates.

use std::time::{SystemTime, UNIX_EPOCH};

use lefschetz_core::braid::BraidWord;
use lefschetz_core::invariants::SpElement;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::formats::{canonical_json, sha256_hex, NormalFormCertificate};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// `word_digest` names the normal form of the checked side and
/// `normal_form_digest` that of the expected side; `verified` is set when the
/// two normal forms agree factor by factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    /// `None` for claims about symplectic matrices.
    pub strands: Option<usize>,
    pub word_digest: String,
    pub normal_form_digest: String,
    pub verified: bool,
    /// Seconds since the epoch; `SOURCE_DATE_EPOCH` overrides the clock.
    pub timestamp: u64,
    pub engine_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word_normal_form: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_normal_form: Option<serde_json::Value>,
}

pub fn timestamp() -> u64 {
    if let Some(t) = std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.parse().ok())
    {
        return t;
    }
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

impl Certificate {
    /// Compares `word` with `target` by Garside normal form.
    pub fn braid(
        claim: impl Into<String>,
        word: &BraidWord,
        target: &BraidWord,
        full: bool,
    ) -> Result<Self> {
        let lhs = NormalFormCertificate::new(&word.normal_form());
        let rhs = NormalFormCertificate::new(&target.normal_form());
        let verified = word.strands() == target.strands()
            && lhs.infimum == rhs.infimum
            && lhs.factors == rhs.factors;
        Ok(Certificate {
            claim: claim.into(),
            strands: Some(word.strands()),
            word_digest: lhs.digest.clone(),
            normal_form_digest: rhs.digest.clone(),
            verified,
            timestamp: timestamp(),
            engine_version: ENGINE_VERSION.into(),
            word_normal_form: full.then(|| serde_json::to_value(&lhs)).transpose()?,
            target_normal_form: full.then(|| serde_json::to_value(&rhs)).transpose()?,
        })
    }

    /// Compares two integer matrices entrywise; digests cover their row lists.
    pub fn matrices(
        claim: impl Into<String>,
        lhs: &SpElement,
        rhs: &SpElement,
        full: bool,
    ) -> Result<Self> {
        let (l, r) = (lhs.rows(), rhs.rows());
        Ok(Certificate {
            claim: claim.into(),
            strands: None,
            word_digest: sha256_hex(canonical_json(&l)?.as_bytes()),
            normal_form_digest: sha256_hex(canonical_json(&r)?.as_bytes()),
            verified: l == r,
            timestamp: timestamp(),
            engine_version: ENGINE_VERSION.into(),
            word_normal_form: full.then(|| serde_json::to_value(&l)).transpose()?,
            target_normal_form: full.then(|| serde_json::to_value(&r)).transpose()?,
        })
    }

    /// Everything except the timestamp, for reproducibility checks.
    pub fn body(&self) -> Certificate {
        Certificate {
            timestamp: 0,
            ..self.clone()
        }
    }
}
