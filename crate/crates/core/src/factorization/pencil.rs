use alloc::format;

use super::relations::push_chain;
use super::{
    CurveKind, CurveSymbol, FactorizationError, SurfaceSignature, Target, TwistFactorization,
};
use crate::braid::block_pass::{block_pass_braids, BlockPass};
use crate::params::PencilSpec;

/// Appends `D = t_{d_1} ⋯ t_{d_m}` and `E = t_{e_m} ⋯ t_{e_1}`, each curve
/// carrying the block-pass piece it lifts.
fn push_block_pass(f: &mut TwistFactorization, bp: &BlockPass) {
    let m = bp.t_factors.len();
    for j in 1..=m {
        f.push_curve(CurveSymbol::new(
            format!("d{j}"),
            CurveKind::DerivedBand(bp.tau(j).clone()),
        ));
    }
    for j in (1..=m).rev() {
        f.push_curve(CurveSymbol::new(
            format!("e{j}"),
            CurveKind::DerivedBand(bp.upsilon(j).clone()),
        ));
    }
}

fn add_boundary(f: &mut TwistFactorization, names: &[&str]) {
    for (k, name) in names.iter().enumerate() {
        f.add_curve(CurveSymbol::new(
            *name,
            CurveKind::BoundaryParallel(k as u32 + 1),
        ))
        .expect("fresh names");
    }
}

/// `t_δ t_δ' = D E (t_{c1}⋯t_{c_{2h+1}})^{(2h+2)(2p−1)} (t_{c_{2h+3}}⋯t_{c_{2g+1}})^{2g−2h}
/// (t_{c1}⋯t_{c_{2h+1}})^{2r} (t_{c_{2h+1}}⋯t_{c1})^{2r}` on `Σ_g^2`.
pub fn build_block_pass_relation(g: u32, h: u32) -> Result<TwistFactorization, FactorizationError> {
    let spec = PencilSpec::new(g, h, 0)?;
    let bp = block_pass_braids(g, h)?;
    let (k, m) = (spec.block(), spec.complement());
    let (p, r) = (spec.p as usize, spec.r as usize);
    let mut f =
        TwistFactorization::new(SurfaceSignature::bordered(g, 2), Target::BoundaryMultitwist);
    add_boundary(&mut f, &["delta", "delta'"]);
    push_block_pass(&mut f, &bp);
    push_chain(&mut f, 1, k - 1, false, k * (2 * p - 1));
    push_chain(&mut f, k + 1, k + m - 1, false, m);
    push_chain(&mut f, 1, k - 1, false, 2 * r);
    push_chain(&mut f, 1, k - 1, true, 2 * r);
    Ok(f)
}

/// The pencil monodromy on `Σ_g^{2(i+1)}`:
/// `D E (t_{x_{i+1}}⋯t_{x_1})(t_{x'_{i+1}}⋯t_{x'_1}) (t_{c1}⋯t_{c_{2h+1}})^{(2h+2)(2p−1−i)}
/// (t_{c1}⋯t_{c_{2h+1}})^{2r} (t_{c_{2h+1}}⋯t_{c1})^{2r}`.
///
/// `x_1, x'_1` come from unchaining the lower chain and sit over the last
/// `2g−2h` strands; the other `x_k, x'_k` come from the upper chain and sit over
/// the first `2h+2`. On capping they become `b, b'` and `a, a'` respectively.
pub fn build_pencil_word(g: u32, h: u32, i: u32) -> Result<TwistFactorization, FactorizationError> {
    let spec = PencilSpec::new(g, h, i)?;
    let bp = block_pass_braids(g, h)?;
    let (k, m) = (spec.block(), spec.complement());
    let b = spec.base_points();
    let mut f =
        TwistFactorization::new(SurfaceSignature::bordered(g, b), Target::BoundaryMultitwist);
    for j in 1..=b {
        f.add_curve(CurveSymbol::new(
            format!("delta{j}"),
            CurveKind::BoundaryParallel(j),
        ))?;
    }
    push_block_pass(&mut f, &bp);
    for primary in [true, false] {
        for idx in (1..=i as usize + 1).rev() {
            let (first, count, alias) = if idx == 1 {
                (k + 1, m, "b")
            } else {
                (1, k, "a")
            };
            let prime = if primary { "" } else { "'" };
            let mut c = CurveSymbol::new(
                format!("x{idx}{prime}"),
                CurveKind::BlockLoop {
                    first,
                    count,
                    primary,
                },
            );
            c.cap_alias = Some(format!("{alias}{prime}"));
            f.push_curve(c);
        }
    }
    push_chain(&mut f, 1, k - 1, false, k * spec.z_copies() as usize);
    push_chain(&mut f, 1, k - 1, false, 2 * spec.r as usize);
    push_chain(&mut f, 1, k - 1, true, 2 * spec.r as usize);
    Ok(f)
}
