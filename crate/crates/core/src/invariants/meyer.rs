use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::inertia::inertia;
use super::sp::{letter_matrices, SpElement};
use super::InvariantError;
use crate::factorization::{SeparatingType, TwistFactorization};

type Q = Ratio<i128>;

/// Integer basis of the kernel of the integer matrix `k` (`rows × cols`).
fn integer_kernel(rows: usize, cols: usize, k: &[i128]) -> Vec<Vec<i128>> {
    let mut m: Vec<Vec<Q>> = (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| Q::from_integer(k[r * cols + c]))
                .collect()
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(sel) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        let inv = m[row][col].recip();
        for c in col..cols {
            m[row][c] *= inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col];
                for c in col..cols {
                    let delta = factor * m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![Q::zero(); cols];
        v[free] = Q::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free];
        }
        let lcm = v.iter().fold(1i128, |acc, q| acc.lcm(q.denom()));
        let ints: Vec<i128> = v
            .iter()
            .map(|q| (*q * Q::from_integer(lcm)).to_integer())
            .collect();
        let content = ints.iter().fold(0i128, |acc, x| acc.gcd(x)).max(1);
        basis.push(ints.into_iter().map(|x| x / content).collect());
    }
    basis
}

/// The Meyer cocycle `τ(A, B)`: the signature of the form
/// `⟨(x₁, y₁), (x₂, y₂)⟩ = (x₁ + y₁)ᵀ J (I − B) y₂` on
/// `V = {(x, y) : (A⁻¹ − I)x + (B − I)y = 0}`.
pub fn meyer_cocycle(a: &SpElement, b: &SpElement) -> Result<i64, InvariantError> {
    let n = a.dim();
    if n == 0 {
        return Ok(0);
    }
    let a_inv = a.symplectic_inverse()?;
    let mut k = alloc::vec![0i128; n * 2 * n];
    for r in 0..n {
        for c in 0..n {
            let id = (r == c) as i128;
            k[r * 2 * n + c] = a_inv.get(r, c) as i128 - id;
            k[r * 2 * n + n + c] = b.get(r, c) as i128 - id;
        }
    }
    let basis = integer_kernel(n, 2 * n, &k);
    let d = basis.len();
    if d == 0 {
        return Ok(0);
    }
    let j = SpElement::form(n);
    // (I − B) y for each basis vector, then J applied on the left
    let j_iby: Vec<Vec<i128>> = basis
        .iter()
        .map(|v| {
            let y = &v[n..];
            let iby: Vec<i128> = (0..n)
                .map(|r| y[r] - (0..n).map(|c| b.get(r, c) as i128 * y[c]).sum::<i128>())
                .collect();
            (0..n)
                .map(|r| (0..n).map(|c| j.get(r, c) as i128 * iby[c]).sum())
                .collect()
        })
        .collect();
    let mut gram = alloc::vec![0i128; d * d];
    for (p, v) in basis.iter().enumerate() {
        for q in 0..d {
            gram[p * d + q] = (0..n).map(|r| (v[r] + v[n + r]) * j_iby[q][r]).sum();
        }
    }
    Ok(inertia(d, &gram)?.signature())
}

/// Sign and separating-letter conventions for the Meyer signature formula
/// `σ = Σ local(v_k) − s · Σ_k τ(M_1⋯M_{k−1}, M_k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MeyerConvention {
    pub global_sign: i8,
    pub separating_local: i8,
}

impl MeyerConvention {
    /// The convention selected by [`calibrate`]: the global sign is forced by
    /// the anchors, the separating term is a tie-break.
    pub const FROZEN: MeyerConvention = MeyerConvention {
        global_sign: -1,
        separating_local: -1,
    };

    pub fn all() -> Vec<MeyerConvention> {
        let mut out = Vec::new();
        for global_sign in [1, -1] {
            for separating_local in [0, -1, 1] {
                out.push(MeyerConvention {
                    global_sign,
                    separating_local,
                });
            }
        }
        out
    }
}

impl Default for MeyerConvention {
    fn default() -> Self {
        Self::FROZEN
    }
}

/// Local terms and cocycle sum, kept apart so conventions can be compared cheaply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeyerTerms {
    pub nonseparating: usize,
    pub separating: usize,
    pub cocycle_sum: i64,
}

impl MeyerTerms {
    pub fn sigma(&self, conv: MeyerConvention) -> i64 {
        conv.separating_local as i64 * self.separating as i64
            - conv.global_sign as i64 * self.cocycle_sum
    }
}

pub fn meyer_terms(f: &TwistFactorization) -> Result<MeyerTerms, InvariantError> {
    let mut terms = MeyerTerms {
        nonseparating: 0,
        separating: 0,
        cocycle_sum: 0,
    };
    for l in &f.letters {
        let c = &f.curves[l.curve];
        if l.power != 1 {
            return Err(InvariantError::NegativeLetter {
                curve: c.name.clone(),
            });
        }
        match c.separating {
            Some(SeparatingType::Nonseparating) => terms.nonseparating += 1,
            Some(SeparatingType::Separating(_)) => terms.separating += 1,
            None => {
                return Err(InvariantError::MissingSeparatingType {
                    curve: c.name.clone(),
                })
            }
        }
    }
    let mats = letter_matrices(f)?;
    let dim = 2 * f.ambient.genus as usize;
    let mut prefix = SpElement::identity(dim);
    for m in &mats {
        terms.cocycle_sum += meyer_cocycle(&prefix, m)?;
        prefix = prefix.mul(m)?;
    }
    if !prefix.is_identity() {
        return Err(InvariantError::NotRelator);
    }
    Ok(terms)
}

/// Signature of the fibration with monodromy `f` under the frozen convention.
pub fn sigma_meyer(f: &TwistFactorization) -> Result<i64, InvariantError> {
    sigma_meyer_with(f, MeyerConvention::FROZEN)
}

pub fn sigma_meyer_with(
    f: &TwistFactorization,
    conv: MeyerConvention,
) -> Result<i64, InvariantError> {
    Ok(meyer_terms(f)?.sigma(conv))
}

/// One calibration anchor: a relator and the signature it must produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Anchor {
    pub label: &'static str,
    pub kind: crate::factorization::RelationKind,
    pub h: u32,
    pub sigma: i64,
}

pub const ANCHORS: [Anchor; 3] = [
    Anchor {
        label: "H_1",
        kind: crate::factorization::RelationKind::Hyperelliptic,
        h: 1,
        sigma: -8,
    },
    Anchor {
        label: "Z_1",
        kind: crate::factorization::RelationKind::OddChain,
        h: 1,
        sigma: -8,
    },
    Anchor {
        label: "Z_2",
        kind: crate::factorization::RelationKind::OddChain,
        h: 2,
        sigma: -18,
    },
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalibrationRow {
    pub convention: MeyerConvention,
    pub values: Vec<i64>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibration {
    pub anchor_terms: Vec<MeyerTerms>,
    pub rows: Vec<CalibrationRow>,
    /// The frozen convention, if it is among the matching rows.
    pub chosen: Option<MeyerConvention>,
    /// True when the anchors leave more than one convention standing.
    pub tie: bool,
}

/// Evaluates every convention on [`ANCHORS`].
pub fn calibrate() -> Result<Calibration, InvariantError> {
    let anchor_terms: Vec<MeyerTerms> = ANCHORS
        .iter()
        .map(|a| {
            let f = crate::factorization::build_relation(a.kind, a.h)?;
            meyer_terms(&f)
        })
        .collect::<Result<_, _>>()?;
    let rows: Vec<CalibrationRow> = MeyerConvention::all()
        .into_iter()
        .map(|convention| {
            let values: Vec<i64> = anchor_terms.iter().map(|t| t.sigma(convention)).collect();
            let matches = values
                .iter()
                .zip(ANCHORS.iter())
                .all(|(v, a)| *v == a.sigma);
            CalibrationRow {
                convention,
                values,
                matches,
            }
        })
        .collect();
    let matching: Vec<MeyerConvention> = rows
        .iter()
        .filter(|r| r.matches)
        .map(|r| r.convention)
        .collect();
    let chosen = matching
        .contains(&MeyerConvention::FROZEN)
        .then_some(MeyerConvention::FROZEN);
    Ok(Calibration {
        anchor_terms,
        tie: matching.len() > 1,
        rows,
        chosen,
    })
}
