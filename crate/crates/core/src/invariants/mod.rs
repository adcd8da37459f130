//! Euler characteristic, signature, spin and classification of the pencils.

mod classify;
mod endo;
mod family;
mod inertia;
mod meyer;
mod sp;

pub use classify::{
    classify, closed_form_invariants, euler_from_word, fiber_sum_invariants, h_invariants,
    rokhlin_audit, spin_predicate, z_invariants, Classification, DiffeoType, EulerSignature,
    InvariantRecord, RokhlinAudit,
};
pub use endo::{sigma_endo_hyperelliptic, sigma_endo_rational};
pub use family::{degree_double, family_params, FamilyMember};
pub use inertia::{inertia, Inertia};
pub use meyer::{
    calibrate, meyer_cocycle, meyer_terms, sigma_meyer, sigma_meyer_with, Anchor, Calibration,
    CalibrationRow, MeyerConvention, MeyerTerms, ANCHORS,
};
pub use sp::{letter_matrices, sp_image, SpElement};

use alloc::string::String;

use thiserror::Error;

use crate::factorization::FactorizationError;
use crate::params::ParamError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Factorization(#[from] FactorizationError),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("form is not symmetric")]
    NotSymmetric,
    #[error("curve '{curve}' has no homology class")]
    UnknownHomology { curve: String },
    #[error("curve '{curve}' is not annotated as separating or nonseparating")]
    MissingSeparatingType { curve: String },
    #[error("letter '{curve}' is not a single right-handed twist")]
    NegativeLetter { curve: String },
    #[error("word does not act trivially on homology")]
    NotRelator,
    #[error("local signature sum {numer}/{denom} is not an integer; separating types are inconsistent with a hyperelliptic fibration")]
    NonIntegral { numer: i64, denom: i64 },
    #[error("base point count must be nonnegative (got {0})")]
    NegativeBasePoints(i64),
    #[error("spin criterion requires i < 2p−1 or r ≠ 0 ({0} is a product Σ_h × S²)")]
    SpinHypothesis(String),
}
