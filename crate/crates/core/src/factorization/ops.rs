use alloc::string::String;
use alloc::vec::Vec;

use super::{
    CurveKind, CurveSymbol, FactorizationError, SurfaceSignature, Target, TwistFactorization,
};
use crate::braid::StandardWord;

/// Replaces the chain power `(t_{c_s} ⋯ t_{c_{s+2h}})^{2h+2}` that starts at
/// letter `at` (0-based) by the pair `t_a t_{a'}` (when `s = 1`) or `t_b t_{b'}`.
///
/// The substitution is only made after checking that both subwords project to
/// the same braid.
pub fn unchain_substitute(
    f: &TwistFactorization,
    at: usize,
    h: u32,
) -> Result<TwistFactorization, FactorizationError> {
    let len = 2 * h as usize + 1;
    let total = len * (len + 1);
    let mismatch = FactorizationError::SubwordMismatch { at, len };
    if at + total > f.len() {
        return Err(mismatch);
    }
    let CurveKind::Chain(start) = f.letter_curve(at).kind else {
        return Err(mismatch);
    };
    for k in 0..total {
        let letter = f.letters[at + k];
        match f.curves[letter.curve].kind {
            CurveKind::Chain(j) if j == start + k % len && letter.power == 1 => {}
            _ => return Err(mismatch),
        }
    }
    let n = 2 * f.ambient.genus as usize + 2;
    let old = StandardWord::Chain {
        first: start,
        k: len + 1,
        count: len + 1,
        reversed: false,
    }
    .word(n)?;
    let new = StandardWord::BlockFullTwist {
        first: start,
        k: len + 1,
    }
    .word(n)?;
    if !old.equals(&new)? {
        return Err(FactorizationError::ProjectionChanged);
    }

    let base = if start == 1 { "a" } else { "b" };
    let mut out = TwistFactorization {
        ambient: f.ambient,
        curves: f.curves.clone(),
        letters: f.letters[..at].to_vec(),
        target: f.target,
    };
    for (primary, suffix) in [(true, ""), (false, "'")] {
        let curve = CurveSymbol::new(
            alloc::format!("{base}{suffix}"),
            CurveKind::BlockLoop {
                first: start,
                count: len + 1,
                primary,
            },
        );
        let idx = out.add_curve(curve)?;
        out.push(idx, 1);
    }
    out.letters.extend_from_slice(&f.letters[at + total..]);
    Ok(out.compact())
}

/// Concatenation of two closed words on the same surface.
pub fn fiber_sum(
    f1: &TwistFactorization,
    f2: &TwistFactorization,
) -> Result<TwistFactorization, FactorizationError> {
    if f1.ambient != f2.ambient {
        return Err(FactorizationError::AmbientMismatch {
            left: f1.ambient,
            right: f2.ambient,
        });
    }
    if !f1.ambient.is_closed() {
        return Err(FactorizationError::NotClosed);
    }
    let mut out = f1.clone();
    let remap: Vec<usize> = f2
        .curves
        .iter()
        .map(|c| out.add_curve(c.clone()))
        .collect::<Result<_, _>>()?;
    for l in &f2.letters {
        out.push(remap[l.curve], l.power);
    }
    out.target = if f1.target == Target::Identity && f2.target == Target::Identity {
        Target::Identity
    } else {
        Target::Unconstrained
    };
    Ok(out)
}

/// The fiber sum of `r` copies of `f`.
pub fn repeat(f: &TwistFactorization, r: u32) -> Result<TwistFactorization, FactorizationError> {
    if !f.ambient.is_closed() {
        return Err(FactorizationError::NotClosed);
    }
    let mut out = TwistFactorization::new(f.ambient, f.target);
    out.curves = f.curves.clone();
    for _ in 0..r {
        out.letters.extend_from_slice(&f.letters);
    }
    Ok(out)
}

/// Image under the capping map to the closed surface: curves with a cap alias
/// are renamed to it, boundary-parallel curves disappear and a boundary
/// multitwist target becomes the identity.
pub fn cap_boundary(f: &TwistFactorization) -> Result<TwistFactorization, FactorizationError> {
    if f.ambient.is_closed() {
        return Ok(f.clone());
    }
    let target = match f.target {
        Target::BoundaryMultitwist | Target::Identity => Target::Identity,
        Target::Unconstrained => Target::Unconstrained,
    };
    let mut out = TwistFactorization::new(SurfaceSignature::closed(f.ambient.genus), target);
    let mut remap: Vec<Option<usize>> = Vec::with_capacity(f.curves.len());
    for c in &f.curves {
        if matches!(c.kind, CurveKind::BoundaryParallel(_)) {
            remap.push(None);
            continue;
        }
        let mut capped = c.clone();
        if let Some(alias) = capped.cap_alias.take() {
            capped.name = alias;
        }
        remap.push(Some(out.add_curve(capped)?));
    }
    for l in &f.letters {
        let idx = remap[l.curve].ok_or_else(|| FactorizationError::MissingProjection {
            name: String::from(f.curves[l.curve].name.as_str()),
        })?;
        out.push(idx, l.power);
    }
    Ok(out)
}
