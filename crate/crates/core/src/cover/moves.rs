use alloc::string::String;
use core::fmt;

use super::state::{Audit, CoverState, HandleRole};
use super::CoverError;

/// One step of the replay. Each move names the change it makes to the counts
/// and the shift it is expected to cause in the cover's `(e, σ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Move {
    /// A band passes through a disk in the 4-handle.
    BandDive,
    /// A band passes over the framed 2-handle; its linking count goes up by one.
    TwoHandleBandDive,
    BandSlide,
    HandleSlide {
        handle: HandleRole,
        over: HandleRole,
    },
    /// `Σ(R, S, T) → Σ(R − k, S + 1, T + k)` with `k = 2h + 2`, needs `R ≥ 2k`.
    IsotopyLemmaStep,
    /// A disk cancels against two long bands, leaving one trivial band.
    CancelDisk,
    /// Blows down the last exceptional sphere of the base; it lifts to two
    /// `(−1)`-sections of the cover.
    BlowDown,
    /// Trivial bands cancel against cap disks.
    CancelTrivialBands,
}

impl Move {
    pub fn name(&self) -> &'static str {
        match self {
            Move::BandDive => "band_dive",
            Move::TwoHandleBandDive => "two_handle_band_dive",
            Move::BandSlide => "band_slide",
            Move::HandleSlide { .. } => "handle_slide",
            Move::IsotopyLemmaStep => "isotopy_lemma_step",
            Move::CancelDisk => "cancel_disk",
            Move::BlowDown => "blow_down",
            Move::CancelTrivialBands => "cancel_trivial_bands",
        }
    }

    /// Declared shift of the cover's `(e, σ)`.
    pub fn expected_delta(&self) -> (i64, i64) {
        match self {
            Move::BlowDown => (-2, 2),
            _ => (0, 0),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::HandleSlide { handle, over } => write!(f, "handle_slide({handle} over {over})"),
            other => f.write_str(other.name()),
        }
    }
}

fn guard(ok: bool, mv: Move, reason: &str) -> Result<(), CoverError> {
    if ok {
        Ok(())
    } else {
        Err(CoverError::Inapplicable {
            step: 0,
            mv: String::from(mv.name()),
            reason: String::from(reason),
        })
    }
}

fn cancel_disk(s: &mut CoverState) -> Result<(), CoverError> {
    let b = &mut s.branch;
    guard(b.disks >= 1, Move::CancelDisk, "no disk left")?;
    guard(
        b.long_bands >= 2,
        Move::CancelDisk,
        "fewer than two long bands",
    )?;
    b.disks -= 1;
    b.long_bands -= 2;
    b.trivial += 1;
    Ok(())
}

/// Applies the move's effect on the counts, without auditing.
fn effect(s: &mut CoverState, mv: Move) -> Result<(), CoverError> {
    match mv {
        Move::BandDive | Move::BandSlide => Ok(()),
        Move::TwoHandleBandDive => {
            s.branch.linking += 1;
            Ok(())
        }
        Move::HandleSlide { handle, over } => {
            guard(handle != over, mv, "a handle cannot slide over itself")?;
            guard(s.handle(over).is_some(), mv, "target handle is absent")?;
            let over_framing = s.handle(over).map(|h| h.framing).unwrap_or(0);
            let Some(h) = s.handle_mut(handle) else {
                return Err(CoverError::Inapplicable {
                    step: 0,
                    mv: String::from(mv.name()),
                    reason: String::from("sliding handle is absent"),
                });
            };
            if handle == HandleRole::Section && over == HandleRole::Fiber {
                // n + 0 − 2·lk with linking number one
                h.framing += over_framing - 2;
                s.base.hirzebruch = s
                    .handle(HandleRole::Section)
                    .map(|h| h.framing.unsigned_abs() as u32)
                    .unwrap_or(0);
            }
            Ok(())
        }
        Move::IsotopyLemmaStep => {
            let k = s.branch.block_len;
            guard(s.branch.disks >= 2 * k, mv, "needs R ≥ 2k")?;
            effect(s, Move::TwoHandleBandDive)?;
            for _ in 0..k {
                cancel_disk(s)?;
            }
            Ok(())
        }
        Move::CancelDisk => cancel_disk(s),
        Move::BlowDown => {
            let j = s.base.blowups;
            guard(j >= 1, mv, "no exceptional sphere left")?;
            s.handles.retain(|h| h.role != HandleRole::Exceptional(j));
            s.base.blowups -= 1;
            let section = s
                .handle_mut(HandleRole::Section)
                .expect("the section handle is never removed");
            section.framing += 1;
            s.base.hirzebruch = section.framing.unsigned_abs() as u32;
            Ok(())
        }
        Move::CancelTrivialBands => {
            let t = s.branch.trivial;
            guard(s.branch.caps >= t, mv, "more trivial bands than caps")?;
            s.branch.caps -= t;
            s.branch.trivial = 0;
            Ok(())
        }
    }
}

/// Applies `mv`, checking that the recomputed `(e, σ)` moved by exactly the
/// declared delta and agrees with the carried audit values.
pub fn apply_move(s: &CoverState, mv: Move) -> Result<CoverState, CoverError> {
    let before = s.computed()?;
    let mut next = s.clone();
    effect(&mut next, mv)?;
    let after = next.computed()?;
    let (de, ds) = mv.expected_delta();
    next.audited = Audit {
        e_cover: s.audited.e_cover + de,
        sigma_cover: s.audited.sigma_cover + ds,
    };
    let moved = Audit {
        e_cover: before.e_cover + de,
        sigma_cover: before.sigma_cover + ds,
    };
    if after != moved || after != next.audited {
        return Err(CoverError::AuditMismatch {
            step: 0,
            mv: String::from(mv.name()),
            expected: next.audited,
            found: after,
        });
    }
    Ok(next)
}
