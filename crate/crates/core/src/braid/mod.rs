//! Braid groups `B_n`: words, left-greedy normal forms, standard words,
//! strand forgetting, Hurwitz moves and the block-pass braids.

pub mod block_pass;
pub mod forget;
pub mod garside;
pub mod hurwitz;
pub mod perm;
pub mod standard;
pub mod word;

pub use block_pass::{
    block_pass_braids, block_pass_braids_with, block_pass_relation_word, master_identity_word,
    search_convention, BlockPass, BlockPassCondition, BlockPassConvention,
};
pub use forget::forget_strands;
pub use garside::NormalForm;
pub use hurwitz::{FactoredBraid, HurwitzDirection};
pub use perm::Permutation;
pub use standard::{delta, full_twist, StandardWord};
pub use word::BraidWord;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator {letter} out of range for {strands} strands")]
    GeneratorOutOfRange { letter: i32, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("block of {k} strands starting at {first} does not fit in {strands} strands")]
    BlockOutOfRange {
        first: usize,
        k: usize,
        strands: usize,
    },
    #[error("cannot keep an empty set of strands")]
    EmptyStrandSet,
    #[error("strand {strand} out of range for {strands} strands")]
    StrandOutOfRange { strand: usize, strands: usize },
    #[error("Hurwitz move position {position} out of range for {len} factors")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("invalid parameters g={g}, h={h}: requires 1 ≤ h < g")]
    InvalidGenus { g: u32, h: u32 },
    #[error("block-pass braids for g={g}, h={h} fail condition {condition}")]
    BlockPassFailed {
        g: u32,
        h: u32,
        condition: BlockPassCondition,
    },
}
