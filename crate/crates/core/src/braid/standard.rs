//! Named braid words: half twist, full twist, chain powers and block twists.

use alloc::vec::Vec;

use super::garside::positive_letters;
use super::perm::Permutation;
use super::word::BraidWord;
use super::BraidError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardWord {
    /// The half twist `Δ`.
    Delta,
    /// `Δ²`, the generator of the center.
    FullTwist,
    /// `(σ_first ⋯ σ_{first+k-2})^count` on the `k` consecutive strands
    /// starting at strand `first`, or its reverse `(σ_{first+k-2} ⋯ σ_first)^count`.
    Chain {
        first: usize,
        k: usize,
        count: usize,
        reversed: bool,
    },
    /// `Δ_k²` on the `k` consecutive strands starting at `first`, spelled as
    /// the square of the block's half twist.
    BlockFullTwist { first: usize, k: usize },
}

impl StandardWord {
    pub fn chain(k: usize, count: usize) -> Self {
        StandardWord::Chain {
            first: 1,
            k,
            count,
            reversed: false,
        }
    }

    pub fn reversed_chain(k: usize, count: usize) -> Self {
        StandardWord::Chain {
            first: 1,
            k,
            count,
            reversed: true,
        }
    }

    pub fn block_full_twist(k: usize) -> Self {
        StandardWord::BlockFullTwist { first: 1, k }
    }

    pub fn word(&self, strands: usize) -> Result<BraidWord, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        match *self {
            StandardWord::Delta => Ok(delta(strands)),
            StandardWord::FullTwist => Ok(delta(strands).pow(2)),
            StandardWord::Chain {
                first,
                k,
                count,
                reversed,
            } => {
                check_block(first, k, strands)?;
                let mut one: Vec<i32> = (first..first + k - 1).map(|i| i as i32).collect();
                if reversed {
                    one.reverse();
                }
                let mut letters = Vec::with_capacity(one.len() * count);
                for _ in 0..count {
                    letters.extend_from_slice(&one);
                }
                BraidWord::new(strands, letters)
            }
            StandardWord::BlockFullTwist { first, k } => {
                check_block(first, k, strands)?;
                delta(k).pow(2).embed(strands, first - 1)
            }
        }
    }
}

fn check_block(first: usize, k: usize, strands: usize) -> Result<(), BraidError> {
    if first == 0 || k == 0 || first + k - 1 > strands {
        Err(BraidError::BlockOutOfRange { first, k, strands })
    } else {
        Ok(())
    }
}

/// The positive half twist `Δ` in `B_n`.
pub fn delta(strands: usize) -> BraidWord {
    BraidWord::from_letters_unchecked(strands, positive_letters(&Permutation::reversal(strands)))
}

/// `Δ²` in `B_n`.
pub fn full_twist(strands: usize) -> BraidWord {
    delta(strands).pow(2)
}
