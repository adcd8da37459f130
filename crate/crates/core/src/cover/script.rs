use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::moves::{apply_move, Move};
use super::state::{Audit, CoverState, HandleRole};
use super::CoverError;
use crate::invariants::{classify, EulerSignature};
use crate::params::PencilSpec;

/// The move list replaying the identification of `X'_{g,h}[i]`:
/// handle slides to the standard picture, blow-downs of the exceptional spheres,
/// `p − 1` isotopy-lemma steps, the remainder phase, cancellation of trivial
/// bands, and `p` slides of the section over the fiber.
pub fn proof_script(spec: &PencilSpec) -> Vec<Move> {
    let mut script = Vec::new();
    for j in 2..=spec.i + 1 {
        script.push(Move::HandleSlide {
            handle: HandleRole::Exceptional(j),
            over: HandleRole::Exceptional(1),
        });
        script.push(Move::BandSlide);
        script.push(Move::BandDive);
    }
    script.push(Move::HandleSlide {
        handle: HandleRole::Exceptional(1),
        over: HandleRole::Section,
    });
    script.push(Move::BandDive);
    for _ in 0..spec.i + 1 {
        script.push(Move::BlowDown);
    }
    for _ in 1..spec.p {
        script.push(Move::IsotopyLemmaStep);
    }
    if spec.r > 0 {
        script.push(Move::TwoHandleBandDive);
        for _ in 0..2 * spec.r {
            script.push(Move::CancelDisk);
        }
    }
    script.push(Move::CancelTrivialBands);
    for _ in 0..spec.p {
        script.push(Move::HandleSlide {
            handle: HandleRole::Section,
            over: HandleRole::Fiber,
        });
    }
    script
}

/// One line of the audit log.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AuditRecord {
    pub step: usize,
    #[cfg_attr(feature = "serde", serde(rename = "move"))]
    pub mv: String,
    #[cfg_attr(feature = "serde", serde(rename = "R"))]
    pub disks: u32,
    #[cfg_attr(feature = "serde", serde(rename = "S"))]
    pub linking: u32,
    #[cfg_attr(feature = "serde", serde(rename = "T"))]
    pub trivial: u32,
    pub base: String,
    pub e_cover: i64,
    pub sigma_cover: i64,
    pub ok: bool,
}

fn record(step: usize, mv: String, s: &CoverState, ok: bool) -> AuditRecord {
    AuditRecord {
        step,
        mv,
        disks: s.branch.disks,
        linking: s.branch.linking,
        trivial: s.branch.trivial,
        base: format!("{}", s.base),
        e_cover: s.audited.e_cover,
        sigma_cover: s.audited.sigma_cover,
        ok,
    }
}

/// The state a successful replay must end in: `Z_h(q) #_f H_h(r)` as the
/// cover of `F_q` branched over `2h+2` disks, `2h+2` caps, `q` chain blocks and
/// the `E_{2r}` block.
pub fn reference_state(spec: &PencilSpec) -> CoverState {
    let mut s = CoverState::init(*spec);
    let q = spec.z_copies();
    let k = spec.block() as u32;
    s.base.hirzebruch = q;
    s.base.blowups = 0;
    s.handles
        .retain(|h| !matches!(h.role, HandleRole::Exceptional(_)));
    if let Some(sec) = s.handle_mut(HandleRole::Section) {
        sec.framing = -(q as i64);
    }
    s.branch.disks = k;
    s.branch.caps = k;
    s.branch.long_bands = 0;
    s.branch.trivial = 0;
    s.branch.linking = spec.p - 1 + (spec.r > 0) as u32;
    let inv = classify(spec).raw.invariants();
    s.audited = Audit {
        e_cover: inv.e,
        sigma_cover: inv.sigma,
    };
    s
}

#[derive(Clone, Debug)]
pub struct Replay {
    pub records: Vec<AuditRecord>,
    pub last: CoverState,
    pub failure: Option<CoverError>,
}

impl Replay {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn into_result(self) -> Result<Replay, CoverError> {
        match &self.failure {
            Some(e) => Err(e.clone()),
            None => Ok(self),
        }
    }
}

fn endpoint_mismatch(s: &CoverState, reference: &CoverState) -> Option<String> {
    let b = &s.branch;
    let r = &reference.branch;
    let checks = [
        ("disks", b.disks as i64, r.disks as i64),
        ("caps", b.caps as i64, r.caps as i64),
        ("long bands", b.long_bands as i64, r.long_bands as i64),
        ("trivial bands", b.trivial as i64, r.trivial as i64),
        ("chain blocks", b.c_blocks as i64, r.c_blocks as i64),
        ("E block", b.e_block as i64, r.e_block as i64),
        ("linking", b.linking as i64, r.linking as i64),
        (
            "base index",
            s.base.hirzebruch as i64,
            reference.base.hirzebruch as i64,
        ),
        (
            "blowups",
            s.base.blowups as i64,
            reference.base.blowups as i64,
        ),
        ("e", s.audited.e_cover, reference.audited.e_cover),
        ("σ", s.audited.sigma_cover, reference.audited.sigma_cover),
    ];
    checks
        .iter()
        .find(|(_, a, b)| a != b)
        .map(|(what, a, b)| format!("{what}: reached {a}, expected {b}"))
}

/// Replays `script` from the initial state, auditing every move, then compares
/// the final state with [`reference_state`].
pub fn run_script(spec: &PencilSpec, script: &[Move]) -> Replay {
    let mut s = CoverState::init(*spec);
    let mut records = Vec::with_capacity(script.len() + 2);
    let init_ok = s.computed().map(|c| c == s.audited);
    let init_failure = match init_ok {
        Ok(true) => None,
        Ok(false) => Some(CoverError::AuditMismatch {
            step: 0,
            mv: String::from("init"),
            expected: s.audited,
            found: s.computed().expect("checked above"),
        }),
        Err(e) => Some(e),
    };
    records.push(record(0, String::from("init"), &s, init_failure.is_none()));
    if let Some(failure) = init_failure {
        return Replay {
            records,
            last: s,
            failure: Some(failure),
        };
    }
    for (idx, mv) in script.iter().enumerate() {
        let step = idx + 1;
        match apply_move(&s, *mv) {
            Ok(next) => {
                s = next;
                records.push(record(step, format!("{mv}"), &s, true));
            }
            Err(e) => {
                records.push(record(step, format!("{mv}"), &s, false));
                return Replay {
                    records,
                    last: s,
                    failure: Some(e.at_step(step)),
                };
            }
        }
    }
    let reference = reference_state(spec);
    let mismatch = endpoint_mismatch(&s, &reference);
    records.push(record(
        script.len() + 1,
        String::from("endpoint"),
        &s,
        mismatch.is_none(),
    ));
    Replay {
        records,
        last: s,
        failure: mismatch.map(|detail| CoverError::Endpoint {
            target: format!("{}", classify(spec).canonical),
            detail,
        }),
    }
}

pub fn run_proof_script(spec: &PencilSpec) -> Replay {
    run_script(spec, &proof_script(spec))
}

/// `(B², e(B))` for a double cover with invariants `cover` over a base with
/// invariants `base`: `B² = 4σ(base) − 2σ(cover)`, `e(B) = 2e(base) − e(cover)`.
pub fn branch_class_solve(
    cover: EulerSignature,
    base: EulerSignature,
) -> Result<(i64, i64), CoverError> {
    let b_square = 4 * base.sigma - 2 * cover.sigma;
    let e_branch = 2 * base.e - cover.e;
    if b_square % 2 != 0 || e_branch % 2 != 0 {
        return Err(CoverError::NonIntegral { b_square });
    }
    Ok((b_square, e_branch))
}
