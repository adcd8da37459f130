//! The identities behind `lefschetz verify`.

use lefschetz_core::braid::{
    block_pass_braids_with, block_pass_relation_word, full_twist, BraidWord, StandardWord,
};
use lefschetz_core::factorization::{
    build_block_pass_relation, build_pencil_word, cap_boundary, project_to_braid,
    split_identity_sides, unchain_substitute,
};
use lefschetz_core::invariants::sp_image;
use lefschetz_core::PencilSpec;

use crate::certificate::Certificate;
use crate::config::EngineConfig;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyTarget {
    /// The block-pass relation projects to `Δ²` in `B_{2g+2}`.
    BlockPassRelation { g: u32, h: u32 },
    /// The capped pencil word projects to `Δ²`.
    PencilProjection { g: u32, h: u32, i: u32 },
    /// `(σ_1⋯σ_m)^{m+1} = (σ_m⋯σ_1)^{m+1}` in `B_{m+1}`.
    Reversing { m: u32 },
    /// Replacing the lower chain power by its block loops keeps the projection.
    Unchain { g: u32, h: u32 },
    /// The two sides of the hyperelliptic splitting identity act equally on `H_1`.
    SplitSp { h: u32, n: u32 },
}

pub fn reversing_sides(m: u32) -> Result<(BraidWord, BraidWord)> {
    if m < 1 {
        return Err(Error::Usage("reversing needs m ≥ 1".into()));
    }
    let k = m as usize + 1;
    Ok((
        StandardWord::chain(k, k).word(k)?,
        StandardWord::reversed_chain(k, k).word(k)?,
    ))
}

/// The relation word with its lower chain power unchained, and the original.
pub fn unchain_pair(g: u32, h: u32) -> Result<(BraidWord, BraidWord)> {
    let spec = PencilSpec::new(g, h, 0)?;
    let f = build_block_pass_relation(g, h)?;
    let (k, m) = (spec.block(), spec.complement());
    let at = 2 * m + k * (k - 1) * (2 * spec.p as usize - 1);
    let lower_h = (m / 2 - 1) as u32;
    let out = unchain_substitute(&f, at, lower_h)?;
    Ok((project_to_braid(&out)?, project_to_braid(&f)?))
}

pub fn run(target: VerifyTarget, config: &EngineConfig, full: bool) -> Result<Certificate> {
    match target {
        VerifyTarget::BlockPassRelation { g, h } => {
            PencilSpec::new(g, h, 0)?;
            let bp = block_pass_braids_with(g, h, config.block_pass)?;
            let w = block_pass_relation_word(&bp);
            Certificate::braid(
                format!("block-pass-relation g={g} h={h}"),
                &w,
                &full_twist(w.strands()),
                full,
            )
        }
        VerifyTarget::PencilProjection { g, h, i } => {
            let f = cap_boundary(&build_pencil_word(g, h, i)?)?;
            let w = project_to_braid(&f)?;
            Certificate::braid(
                format!("pencil-projection g={g} h={h} i={i}"),
                &w,
                &full_twist(w.strands()),
                full,
            )
        }
        VerifyTarget::Reversing { m } => {
            let (a, b) = reversing_sides(m)?;
            Certificate::braid(format!("reversing m={m}"), &a, &b, full)
        }
        VerifyTarget::Unchain { g, h } => {
            let (after, before) = unchain_pair(g, h)?;
            Certificate::braid(format!("unchain g={g} h={h}"), &after, &before, full)
        }
        VerifyTarget::SplitSp { h, n } => {
            let (lhs, rhs) = split_identity_sides(h, n)?;
            Certificate::matrices(
                format!("split-identity-sp h={h} n={n}"),
                &sp_image(&lhs)?,
                &sp_image(&rhs)?,
                full,
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_targets_verify() {
        let cfg = EngineConfig::builtin();
        for t in [
            VerifyTarget::BlockPassRelation { g: 2, h: 1 },
            VerifyTarget::PencilProjection { g: 3, h: 1, i: 2 },
            VerifyTarget::Reversing { m: 5 },
            VerifyTarget::Unchain { g: 3, h: 1 },
            VerifyTarget::Unchain { g: 4, h: 2 },
            VerifyTarget::SplitSp { h: 2, n: 3 },
        ] {
            let c = run(t, &cfg, false).unwrap();
            assert!(c.verified, "{t:?}");
            assert_eq!(c.word_digest, c.normal_form_digest);
        }
    }

    #[test]
    fn certificates_are_reproducible() {
        let cfg = EngineConfig::builtin();
        let a = run(VerifyTarget::BlockPassRelation { g: 3, h: 2 }, &cfg, true).unwrap();
        let b = run(VerifyTarget::BlockPassRelation { g: 3, h: 2 }, &cfg, true).unwrap();
        assert_eq!(a.body(), b.body());
    }

    #[test]
    fn wrong_identity_is_not_verified() {
        let a = StandardWord::chain(4, 3).word(4).unwrap();
        let c = Certificate::braid("x", &a, &full_twist(4), false).unwrap();
        assert!(!c.verified);
    }
}
