//! The block-pass braids `T` and `U` and the full-twist identity they satisfy.
//!
//! With `n = 2g+2`, `k = 2h+2` and `m = 2g−2h`, `T` passes the first `k` strands
//! across the last `m` while braiding the `k`-block internally, and `U` passes
//! them back. The exact letters are not fixed by hand: the internal word, the
//! positions it acts on and its placement are chosen from a small convention
//! space by [`search_convention`], which keeps the conventions for which
//!
//! 1. `T·U·(σ1⋯σ_{k−1})^m (σ_{k−1}⋯σ1)^n (σ_{k+1}⋯σ_{n−1})^m = Δ²`,
//! 2. `T` and `U` factor as `m` pieces of exponent sum one, each a transposition,
//! 3. `exponent_sum(T) = exponent_sum(U) = m`,
//! 4. forgetting the `m`-block leaves the internal word on the `k`-block and
//!    forgetting the `k`-block leaves the trivial braid,
//!
//! hold for `(g, h) ∈ {(2,1), (3,1), (3,2)}`. The selected convention is
//! [`BlockPassConvention::FROZEN`]; [`block_pass_braids`] re-checks all four
//! conditions for every `(g, h)` it builds.

use alloc::vec::Vec;
use core::fmt;

use super::forget::{block, forget_strands};
use super::hurwitz::FactoredBraid;
use super::standard::{full_twist, StandardWord};
use super::word::BraidWord;
use super::BraidError;
use crate::params::pencil_params;

/// The per-pass internal word on the `k`-block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum InternalWord {
    /// `σ1 σ2 ⋯ σ_{k−1}`
    Ascending,
    /// `σ_{k−1} ⋯ σ1`
    Descending,
    /// `(σ1 ⋯ σ_{k−1})⁻¹ = σ_{k−1}⁻¹ ⋯ σ1⁻¹`
    InverseAscending,
    /// `(σ_{k−1} ⋯ σ1)⁻¹ = σ1⁻¹ ⋯ σ_{k−1}⁻¹`
    InverseDescending,
}

/// Whether the internal word acts on the block's positions before or after the pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum BlockPosition {
    Initial,
    Final,
}

/// Whether the internal word is multiplied before (left) or after (right) the pass word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Placement {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HalfConvention {
    pub internal: InternalWord,
    pub block: BlockPosition,
    pub placement: Placement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BlockPassConvention {
    pub t: HalfConvention,
    pub u: HalfConvention,
}

impl BlockPassConvention {
    /// The convention selected by [`search_convention`].
    pub const FROZEN: BlockPassConvention = BlockPassConvention {
        t: HalfConvention {
            internal: InternalWord::InverseDescending,
            block: BlockPosition::Initial,
            placement: Placement::Left,
        },
        u: HalfConvention {
            internal: InternalWord::InverseAscending,
            block: BlockPosition::Initial,
            placement: Placement::Left,
        },
    };

    /// Every point of the convention space, in a fixed order.
    pub fn all() -> Vec<BlockPassConvention> {
        let halves = HalfConvention::all();
        let mut out = Vec::with_capacity(halves.len() * halves.len());
        for &t in &halves {
            for &u in &halves {
                out.push(BlockPassConvention { t, u });
            }
        }
        out
    }
}

impl Default for BlockPassConvention {
    fn default() -> Self {
        Self::FROZEN
    }
}

impl HalfConvention {
    pub fn all() -> Vec<HalfConvention> {
        let mut out = Vec::new();
        for internal in [
            InternalWord::InverseDescending,
            InternalWord::InverseAscending,
            InternalWord::Descending,
            InternalWord::Ascending,
        ] {
            for block in [BlockPosition::Initial, BlockPosition::Final] {
                for placement in [Placement::Left, Placement::Right] {
                    out.push(HalfConvention {
                        internal,
                        block,
                        placement,
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for HalfConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}/{:?}/{:?}",
            self.internal, self.block, self.placement
        )
    }
}

/// Dimensions of one instance: `n = 2g+2`, `k = 2h+2`, `m = 2g−2h`.
#[derive(Clone, Copy, Debug)]
struct Dims {
    n: usize,
    k: usize,
    m: usize,
}

impl Dims {
    fn new(g: u32, h: u32) -> Result<Self, BraidError> {
        if h < 1 || h >= g {
            return Err(BraidError::InvalidGenus { g, h });
        }
        let (g, h) = (g as usize, h as usize);
        Ok(Dims {
            n: 2 * g + 2,
            k: 2 * h + 2,
            m: 2 * g - 2 * h,
        })
    }
}

/// One copy of the internal word on the `k` consecutive strands starting at `first`.
fn internal_copy(n: usize, k: usize, first: usize, internal: InternalWord) -> BraidWord {
    let reversed = matches!(
        internal,
        InternalWord::Descending | InternalWord::InverseDescending
    );
    let w = StandardWord::Chain {
        first,
        k,
        count: 1,
        reversed,
    }
    .word(n)
    .expect("block inside range");
    match internal {
        InternalWord::Ascending | InternalWord::Descending => w,
        InternalWord::InverseAscending | InternalWord::InverseDescending => w.invert(),
    }
}

/// Pass pieces of `T`: `p_i = σ_{k+i−1} ⋯ σ_i` for `i = 1..m`.
fn t_pass_pieces(d: Dims) -> Vec<BraidWord> {
    (1..=d.m)
        .map(|i| {
            let letters = (i..i + d.k).rev().map(|j| j as i32).collect();
            BraidWord::from_letters_unchecked(d.n, letters)
        })
        .collect()
}

/// Pass pieces of `U` in product order: `v_j = σ_j σ_{j+1} ⋯ σ_{j+k−1}` for `j = m..1`.
fn u_pass_pieces(d: Dims) -> Vec<BraidWord> {
    (1..=d.m)
        .rev()
        .map(|j| {
            let letters = (j..j + d.k).map(|x| x as i32).collect();
            BraidWord::from_letters_unchecked(d.n, letters)
        })
        .collect()
}

fn assemble(
    pass: &[BraidWord],
    d: Dims,
    half: HalfConvention,
    initial: usize,
    final_: usize,
) -> BraidWord {
    let first = match half.block {
        BlockPosition::Initial => initial,
        BlockPosition::Final => final_,
    };
    let internal = internal_copy(d.n, d.k, first, half.internal).pow(d.m as i64);
    let pass = BraidWord::product(d.n, pass).expect("same strands");
    match half.placement {
        Placement::Left => internal.compose(&pass),
        Placement::Right => pass.compose(&internal),
    }
    .expect("same strands")
}

/// The braids `T`, `U` together with their factorizations into pass pieces.
#[derive(Clone, Debug)]
pub struct BlockPass {
    pub g: u32,
    pub h: u32,
    pub t: BraidWord,
    pub u: BraidWord,
    /// `τ_1, …, τ_m` with `T = τ_1 ⋯ τ_m`.
    pub t_factors: FactoredBraid,
    /// `υ_m, …, υ_1` with `U = υ_m ⋯ υ_1`.
    pub u_factors: FactoredBraid,
    pub convention: BlockPassConvention,
}

impl BlockPass {
    /// `τ_j`, 1-based.
    pub fn tau(&self, j: usize) -> &BraidWord {
        &self.t_factors.factors()[j - 1]
    }

    /// `υ_j`, 1-based.
    pub fn upsilon(&self, j: usize) -> &BraidWord {
        let m = self.u_factors.len();
        &self.u_factors.factors()[m - j]
    }
}

fn build_unchecked(g: u32, h: u32, conv: BlockPassConvention) -> Result<BlockPass, BraidError> {
    let d = Dims::new(g, h)?;
    let t_pass = t_pass_pieces(d);
    let u_pass = u_pass_pieces(d);
    let t = assemble(&t_pass, d, conv.t, 1, d.m + 1);
    let u = assemble(&u_pass, d, conv.u, d.m + 1, 1);

    // interleaved pieces: after p_i the k-block sits at i+1..i+k, after v_j at j..j+k−1
    let taus = t_pass
        .iter()
        .enumerate()
        .map(|(idx, p)| {
            p.compose(&internal_copy(d.n, d.k, idx + 2, conv.t.internal))
                .expect("same strands")
        })
        .collect();
    let upsilons = u_pass
        .iter()
        .zip((1..=d.m).rev())
        .map(|(v, j)| {
            v.compose(&internal_copy(d.n, d.k, j, conv.u.internal))
                .expect("same strands")
        })
        .collect();
    Ok(BlockPass {
        g,
        h,
        t,
        u,
        t_factors: FactoredBraid::new(d.n, taus)?,
        u_factors: FactoredBraid::new(d.n, upsilons)?,
        convention: conv,
    })
}

/// `T·U·(σ1⋯σ_{k−1})^m (σ_{k−1}⋯σ1)^n (σ_{k+1}⋯σ_{n−1})^m`.
pub fn master_identity_word(bp: &BlockPass) -> BraidWord {
    let d = Dims::new(bp.g, bp.h).expect("validated");
    let words = [
        bp.t.clone(),
        bp.u.clone(),
        StandardWord::chain(d.k, d.m).word(d.n).expect("in range"),
        StandardWord::reversed_chain(d.k, d.n)
            .word(d.n)
            .expect("in range"),
        StandardWord::Chain {
            first: d.k + 1,
            k: d.m,
            count: d.m,
            reversed: false,
        }
        .word(d.n)
        .expect("in range"),
    ];
    BraidWord::product(d.n, &words).expect("same strands")
}

/// The rewritten relation
/// `T·U·(σ1⋯σ_{k−1})^{k(2p−1)} (σ_{k+1}⋯σ_{n−1})^m (σ1⋯σ_{k−1})^{2r} (σ_{k−1}⋯σ1)^{2r}`.
pub fn block_pass_relation_word(bp: &BlockPass) -> BraidWord {
    let d = Dims::new(bp.g, bp.h).expect("validated");
    let (p, r) = pencil_params(bp.g, bp.h).expect("validated");
    let (p, r) = (p as usize, r as usize);
    let words = [
        bp.t.clone(),
        bp.u.clone(),
        StandardWord::chain(d.k, d.k * (2 * p - 1))
            .word(d.n)
            .expect("in range"),
        StandardWord::Chain {
            first: d.k + 1,
            k: d.m,
            count: d.m,
            reversed: false,
        }
        .word(d.n)
        .expect("in range"),
        StandardWord::chain(d.k, 2 * r).word(d.n).expect("in range"),
        StandardWord::reversed_chain(d.k, 2 * r)
            .word(d.n)
            .expect("in range"),
    ];
    BraidWord::product(d.n, &words).expect("same strands")
}

/// Which of the four block-pass conditions failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockPassCondition {
    MasterIdentity,
    Factorization,
    ExponentSum,
    ForgetStrands,
}

impl fmt::Display for BlockPassCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockPassCondition::MasterIdentity => "(i) master identity T·U·… = Δ²",
            BlockPassCondition::Factorization => "(ii) factorization into m unit pieces",
            BlockPassCondition::ExponentSum => "(iii) exponent sums of T and U equal 2g−2h",
            BlockPassCondition::ForgetStrands => "(iv) induced braids on the two blocks",
        })
    }
}

fn check_factors(f: &FactoredBraid, whole: &BraidWord, m: usize) -> bool {
    f.len() == m
        && f.factors()
            .iter()
            .all(|w| w.exponent_sum() == 1 && w.permutation().is_transposition())
        && f.product().equals(whole).unwrap_or(false)
}

fn check_half_forget(
    w: &BraidWord,
    d: Dims,
    k_block: &[usize],
    m_block: &[usize],
    internal: InternalWord,
) -> bool {
    let expected = internal_copy(d.k, d.k, 1, internal).pow(d.m as i64);
    let Ok(on_k) = forget_strands(w, k_block) else {
        return false;
    };
    let Ok(on_m) = forget_strands(w, m_block) else {
        return false;
    };
    on_k.exponent_sum() == -((d.m * (d.k - 1)) as i64)
        && on_k.equals(&expected).unwrap_or(false)
        && on_m.normal_form().is_identity()
}

/// Checks conditions (i)–(iv) and reports the first failure.
pub fn verify(bp: &BlockPass) -> Result<(), BlockPassCondition> {
    let d = Dims::new(bp.g, bp.h).map_err(|_| BlockPassCondition::MasterIdentity)?;
    let m = d.m as i64;
    if bp.t.exponent_sum() != m || bp.u.exponent_sum() != m {
        return Err(BlockPassCondition::ExponentSum);
    }
    let k_t = block(1, d.k);
    let m_t = block(d.k + 1, d.m);
    let k_u = block(d.m + 1, d.k);
    let m_u = block(1, d.m);
    if !check_half_forget(&bp.t, d, &k_t, &m_t, bp.convention.t.internal)
        || !check_half_forget(&bp.u, d, &k_u, &m_u, bp.convention.u.internal)
    {
        return Err(BlockPassCondition::ForgetStrands);
    }
    if !check_factors(&bp.t_factors, &bp.t, d.m) || !check_factors(&bp.u_factors, &bp.u, d.m) {
        return Err(BlockPassCondition::Factorization);
    }
    let master = master_identity_word(bp);
    if !master.equals(&full_twist(d.n)).unwrap_or(false) {
        return Err(BlockPassCondition::MasterIdentity);
    }
    Ok(())
}

/// Builds `T` and `U` for `1 <= h < g` with the frozen convention and verifies them.
pub fn block_pass_braids(g: u32, h: u32) -> Result<BlockPass, BraidError> {
    block_pass_braids_with(g, h, BlockPassConvention::FROZEN)
}

pub fn block_pass_braids_with(
    g: u32,
    h: u32,
    conv: BlockPassConvention,
) -> Result<BlockPass, BraidError> {
    let bp = build_unchecked(g, h, conv)?;
    verify(&bp).map_err(|condition| BraidError::BlockPassFailed { g, h, condition })?;
    Ok(bp)
}

/// Cases on which the convention search is run.
pub const CALIBRATION_CASES: [(u32, u32); 3] = [(2, 1), (3, 1), (3, 2)];

#[derive(Clone, Debug)]
pub struct ConventionSearch {
    /// Conventions passing every condition on every calibration case, in search order.
    pub survivors: Vec<BlockPassConvention>,
    /// True when all survivors produce the same braids `T` and `U`.
    pub survivors_agree: bool,
}

impl ConventionSearch {
    pub fn chosen(&self) -> Option<BlockPassConvention> {
        self.survivors.first().copied()
    }
}

/// Exhausts the convention space against [`CALIBRATION_CASES`].
pub fn search_convention() -> ConventionSearch {
    let mut survivors = Vec::new();
    for conv in BlockPassConvention::all() {
        let ok = CALIBRATION_CASES.iter().all(|&(g, h)| {
            build_unchecked(g, h, conv)
                .map(|bp| verify(&bp).is_ok())
                .unwrap_or(false)
        });
        if ok {
            survivors.push(conv);
        }
    }
    let survivors_agree = survivors.split_first().is_none_or(|(first, rest)| {
        CALIBRATION_CASES.iter().all(|&(g, h)| {
            let a = build_unchecked(g, h, *first).expect("valid");
            rest.iter().all(|c| {
                let b = build_unchecked(g, h, *c).expect("valid");
                a.t.equals(&b.t).unwrap_or(false) && a.u.equals(&b.u).unwrap_or(false)
            })
        })
    });
    ConventionSearch {
        survivors,
        survivors_agree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_convention_is_first_survivor() {
        let search = search_convention();
        assert!(!search.survivors.is_empty());
        assert!(search.survivors_agree);
        assert_eq!(search.chosen(), Some(BlockPassConvention::FROZEN));
    }

    #[test]
    fn master_identity_g2_h1() {
        let bp = block_pass_braids(2, 1).unwrap();
        assert!(master_identity_word(&bp).equals(&full_twist(6)).unwrap());
    }

    #[test]
    fn exponent_sum_g3_h1() {
        let bp = block_pass_braids(3, 1).unwrap();
        assert_eq!(bp.t.exponent_sum(), 4);
        assert_eq!(bp.u.exponent_sum(), 4);
        // 8 + 12 + 24 + 12 = 56
        assert_eq!(master_identity_word(&bp).exponent_sum(), 56);
        assert_eq!(
            master_identity_word(&bp).permutation(),
            full_twist(8).permutation()
        );
    }

    #[test]
    fn relation_word_g3_h2() {
        let bp = block_pass_braids(3, 2).unwrap();
        let w = block_pass_relation_word(&bp);
        assert_eq!(w.exponent_sum(), 56);
        assert!(w.equals(&full_twist(8)).unwrap());
    }

    #[test]
    fn lower_strands_of_t_are_parallel() {
        let bp = block_pass_braids(2, 1).unwrap();
        let lower = forget_strands(&bp.t, &[5, 6]).unwrap();
        assert!(lower.normal_form().is_identity());
    }

    #[test]
    fn wrong_convention_is_rejected() {
        let mut conv = BlockPassConvention::FROZEN;
        conv.t.internal = InternalWord::Ascending;
        assert!(matches!(
            block_pass_braids_with(3, 1, conv),
            Err(BraidError::BlockPassFailed { .. })
        ));
        assert!(block_pass_braids(2, 2).is_err());
    }
}
