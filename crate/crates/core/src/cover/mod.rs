//! Branched double covers of blown-up Hirzebruch surfaces, tracked by counts
//! and replayed move by move with an `(e, σ)` audit.

mod moves;
mod script;
mod state;

use alloc::string::String;

pub use moves::{apply_move, Move};
pub use script::{
    branch_class_solve, proof_script, reference_state, run_proof_script, run_script, AuditRecord,
    Replay,
};
pub use state::{Audit, BaseSurface, BranchSurface, CoverState, Handle, HandleRole};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("step {step}: {mv} does not apply: {reason}")]
    Inapplicable {
        step: usize,
        mv: String,
        reason: String,
    },
    #[error(
        "step {step}: {mv} audit mismatch: carried (e, σ) = ({}, {}), recomputed ({}, {})",
        expected.e_cover, expected.sigma_cover, found.e_cover, found.sigma_cover
    )]
    AuditMismatch {
        step: usize,
        mv: String,
        expected: Audit,
        found: Audit,
    },
    #[error("B² = {b_square} is odd")]
    NonIntegral { b_square: i64 },
    #[error("endpoint is not {target}: {detail}")]
    Endpoint { target: String, detail: String },
}

impl CoverError {
    pub fn step(&self) -> Option<usize> {
        match self {
            CoverError::Inapplicable { step, .. } | CoverError::AuditMismatch { step, .. } => {
                Some(*step)
            }
            _ => None,
        }
    }

    pub(crate) fn at_step(self, at: usize) -> Self {
        match self {
            CoverError::Inapplicable { mv, reason, .. } => CoverError::Inapplicable {
                step: at,
                mv,
                reason,
            },
            CoverError::AuditMismatch {
                mv,
                expected,
                found,
                ..
            } => CoverError::AuditMismatch {
                step: at,
                mv,
                expected,
                found,
            },
            other => other,
        }
    }
}
