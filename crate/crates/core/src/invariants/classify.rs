use alloc::format;
use alloc::string::String;
use core::fmt;

use super::InvariantError;
use crate::factorization::TwistFactorization;
use crate::params::{PencilSpec, SpecCase};

/// `(e, σ)` of a closed 4-manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EulerSignature {
    pub e: i64,
    pub sigma: i64,
}

/// `e(X'_{g,h}[i]) = 4 − 4h + 2(2h+1)(2g+2) − (i+1)(2h+1)(2h+2)` and
/// `σ(X'_{g,h}[i]) = −(2h+2)(2g+2) + 2(i+1)(h+1)²`.
pub fn closed_form_invariants(spec: &PencilSpec) -> EulerSignature {
    let (g, h, i) = (spec.g as i64, spec.h as i64, spec.i as i64);
    EulerSignature {
        e: 4 - 4 * h + 2 * (2 * h + 1) * (2 * g + 2) - (i + 1) * (2 * h + 1) * (2 * h + 2),
        sigma: -(2 * h + 2) * (2 * g + 2) + 2 * (i + 1) * (h + 1) * (h + 1),
    }
}

/// `e(Z_h) = 2(2h² + h + 3)`, `σ(Z_h) = −2(h+1)²`.
pub fn z_invariants(h: u32) -> EulerSignature {
    let h = h as i64;
    EulerSignature {
        e: 2 * (2 * h * h + h + 3),
        sigma: -2 * (h + 1) * (h + 1),
    }
}

/// `e(H_h) = 4(h+2)`, `σ(H_h) = −4(h+1)`.
pub fn h_invariants(h: u32) -> EulerSignature {
    let h = h as i64;
    EulerSignature {
        e: 4 * (h + 2),
        sigma: -4 * (h + 1),
    }
}

/// Invariants of a fiber sum of two genus-`h` fibrations.
pub fn fiber_sum_invariants(h: u32, a: EulerSignature, b: EulerSignature) -> EulerSignature {
    EulerSignature {
        e: a.e + b.e - 2 * (2 - 2 * h as i64),
        sigma: a.sigma + b.sigma,
    }
}

/// `e = 4 − 4g + N − b` for a genus-`g` word with `N` letters and `b` base points.
pub fn euler_from_word(f: &TwistFactorization, base_points: i64) -> Result<i64, InvariantError> {
    if base_points < 0 {
        return Err(InvariantError::NegativeBasePoints(base_points));
    }
    Ok(4 - 4 * f.ambient.genus as i64 + f.len() as i64 - base_points)
}

/// A diffeomorphism type named by the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "type", rename_all = "kebab-case"))]
pub enum DiffeoType {
    /// `Z_h(z) #_f H_h(hyp)`, at least one summand.
    FiberSum { h: u32, z: u32, hyp: u32 },
    /// `Σ_h × S²`.
    Product { h: u32 },
}

impl DiffeoType {
    pub fn invariants(&self) -> EulerSignature {
        match *self {
            DiffeoType::FiberSum { h, z, hyp } => {
                let mut acc: Option<EulerSignature> = None;
                let summands = core::iter::repeat_n(z_invariants(h), z as usize)
                    .chain(core::iter::repeat_n(h_invariants(h), hyp as usize));
                for s in summands {
                    acc = Some(match acc {
                        None => s,
                        Some(a) => fiber_sum_invariants(h, a, s),
                    });
                }
                acc.expect("a fiber sum has at least one summand")
            }
            DiffeoType::Product { h } => EulerSignature {
                e: 2 * (2 - 2 * h as i64),
                sigma: 0,
            },
        }
    }

    /// Reduces `Z_h(2)` to `H_h(h+1)` until at most one `Z_h` summand is left.
    pub fn canonical(&self) -> DiffeoType {
        match *self {
            DiffeoType::FiberSum { h, z, hyp } => DiffeoType::FiberSum {
                h,
                z: z % 2,
                hyp: (z / 2) * (h + 1) + hyp,
            },
            other => other,
        }
    }
}

impl fmt::Display for DiffeoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DiffeoType::FiberSum { h, z, hyp } => match (z, hyp) {
                (0, _) => write!(f, "H_{h}({hyp})"),
                (_, 0) => write!(f, "Z_{h}({z})"),
                _ => write!(f, "Z_{h}({z}) #_f H_{h}({hyp})"),
            },
            DiffeoType::Product { h } => write!(f, "Σ_{h} × S²"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub case: SpecCase,
    /// `Z_h(2p−1−i) #_f H_h(r)`, `H_h(r)` or `Σ_h × S²`.
    pub raw: DiffeoType,
    pub canonical: DiffeoType,
}

pub fn classify(spec: &PencilSpec) -> Classification {
    let h = spec.h;
    let case = spec.case();
    let raw = match case {
        SpecCase::Generic => DiffeoType::FiberSum {
            h,
            z: spec.z_copies(),
            hyp: spec.r,
        },
        SpecCase::LastWithRemainder => DiffeoType::FiberSum {
            h,
            z: 0,
            hyp: spec.r,
        },
        SpecCase::LastExact => DiffeoType::Product { h },
    };
    Classification {
        case,
        raw,
        canonical: raw.canonical(),
    }
}

/// Spin criterion: `h` odd and `g ≡ i (mod 2)`; undefined for `Σ_h × S²`.
pub fn spin_predicate(spec: &PencilSpec) -> Result<bool, InvariantError> {
    if spec.case() == SpecCase::LastExact {
        return Err(InvariantError::SpinHypothesis(format!("{spec}")));
    }
    Ok(spec.h % 2 == 1 && spec.g % 2 == spec.i % 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RokhlinAudit {
    pub spin: bool,
    pub sigma: i64,
    /// `spin ⇒ σ ≡ 0 (mod 16)`.
    pub ok: bool,
}

pub fn rokhlin_audit(spec: &PencilSpec) -> Result<RokhlinAudit, InvariantError> {
    let spin = spin_predicate(spec)?;
    let sigma = closed_form_invariants(spec).sigma;
    Ok(RokhlinAudit {
        spin,
        sigma,
        ok: !spin || sigma.rem_euclid(16) == 0,
    })
}

/// The per-pencil summary written by reports.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InvariantRecord {
    pub g: u32,
    pub h: u32,
    pub i: u32,
    pub p: u32,
    pub r: u32,
    pub e: i64,
    pub sigma: i64,
    pub base_points: u32,
    pub nodal_fibers: u64,
    pub spin: bool,
    pub diffeo_type: String,
}

impl InvariantRecord {
    pub fn new(spec: &PencilSpec) -> Self {
        let inv = closed_form_invariants(spec);
        let class = classify(spec);
        // Σ_h × S² is a product of spin manifolds
        let spin = spin_predicate(spec).unwrap_or(true);
        InvariantRecord {
            g: spec.g,
            h: spec.h,
            i: spec.i,
            p: spec.p,
            r: spec.r,
            e: inv.e,
            sigma: inv.sigma,
            base_points: spec.base_points(),
            nodal_fibers: spec.nodal_fibers(),
            spin,
            diffeo_type: format!("{}", class.canonical),
        }
    }
}
