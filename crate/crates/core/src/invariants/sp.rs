use alloc::vec::Vec;
use core::fmt;

use super::InvariantError;
use crate::factorization::TwistFactorization;

/// An integer `2g × 2g` matrix acting on `H_1(Σ_g)` in the basis
/// `a_1, b_1, …, a_g, b_g`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpElement {
    dim: usize,
    entries: Vec<i64>,
}

impl SpElement {
    pub fn identity(dim: usize) -> Self {
        let mut entries = alloc::vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        SpElement { dim, entries }
    }

    /// The standard form `J = ⊕ [[0, 1], [−1, 0]]`.
    pub fn form(dim: usize) -> Self {
        let mut entries = alloc::vec![0; dim * dim];
        for k in 0..dim / 2 {
            entries[2 * k * dim + 2 * k + 1] = 1;
            entries[(2 * k + 1) * dim + 2 * k] = -1;
        }
        SpElement { dim, entries }
    }

    pub fn from_rows(dim: usize, entries: Vec<i64>) -> Option<Self> {
        (entries.len() == dim * dim).then_some(SpElement { dim, entries })
    }

    /// `T_γ^power` where `T_γ = I − γ γᵀ J`, i.e. `x ↦ x + ⟨x, γ⟩ γ`.
    pub fn twist(gamma: &[i64], power: i64) -> Result<Self, InvariantError> {
        let dim = gamma.len();
        let j = SpElement::form(dim);
        let mut m = SpElement::identity(dim);
        for r in 0..dim {
            for c in 0..dim {
                // (γ γᵀ J)_{rc} = γ_r Σ_k γ_k J_{kc}
                let mut s = 0i64;
                for k in 0..dim {
                    s = add(s, mul(gamma[k], j.get(k, c))?)?;
                }
                let v = mul(mul(gamma[r], s)?, power)?;
                m.entries[r * dim + c] = sub(m.entries[r * dim + c], v)?;
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.dim + c]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == SpElement::identity(self.dim)
    }

    pub fn transpose(&self) -> SpElement {
        let n = self.dim;
        let mut entries = alloc::vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[c * n + r] = self.get(r, c);
            }
        }
        SpElement { dim: n, entries }
    }

    pub fn mul(&self, other: &SpElement) -> Result<SpElement, InvariantError> {
        let n = self.dim;
        let mut entries = alloc::vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                let mut s = 0i64;
                for k in 0..n {
                    s = add(s, mul(self.get(r, k), other.get(k, c))?)?;
                }
                entries[r * n + c] = s;
            }
        }
        Ok(SpElement { dim: n, entries })
    }

    /// `M⁻¹ = −J Mᵀ J`, valid for symplectic `M`.
    pub fn symplectic_inverse(&self) -> Result<SpElement, InvariantError> {
        let j = SpElement::form(self.dim);
        let mut out = j.mul(&self.transpose())?.mul(&j)?;
        for e in &mut out.entries {
            *e = e.checked_neg().ok_or(InvariantError::Overflow)?;
        }
        Ok(out)
    }

    /// `Mᵀ J M = J`.
    pub fn preserves_form(&self) -> bool {
        let j = SpElement::form(self.dim);
        self.transpose()
            .mul(&j)
            .and_then(|x| x.mul(self))
            .map(|x| x == j)
            .unwrap_or(false)
    }
}

impl fmt::Debug for SpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

fn add(a: i64, b: i64) -> Result<i64, InvariantError> {
    a.checked_add(b).ok_or(InvariantError::Overflow)
}

fn sub(a: i64, b: i64) -> Result<i64, InvariantError> {
    a.checked_sub(b).ok_or(InvariantError::Overflow)
}

fn mul(a: i64, b: i64) -> Result<i64, InvariantError> {
    a.checked_mul(b).ok_or(InvariantError::Overflow)
}

/// The matrix of each letter, in word order.
pub fn letter_matrices(f: &TwistFactorization) -> Result<Vec<SpElement>, InvariantError> {
    let dim = 2 * f.ambient.genus as usize;
    f.letters
        .iter()
        .map(|l| {
            let c = &f.curves[l.curve];
            let class = c
                .homology
                .as_ref()
                .ok_or_else(|| InvariantError::UnknownHomology {
                    curve: c.name.clone(),
                })?;
            if class.len() != dim {
                return Err(InvariantError::UnknownHomology {
                    curve: c.name.clone(),
                });
            }
            SpElement::twist(class, l.power as i64)
        })
        .collect()
}

/// The action on homology of the ordered product, `M_1 M_2 ⋯ M_N`.
pub fn sp_image(f: &TwistFactorization) -> Result<SpElement, InvariantError> {
    let dim = 2 * f.ambient.genus as usize;
    letter_matrices(f)?
        .iter()
        .try_fold(SpElement::identity(dim), |acc, m| acc.mul(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::{build_relation, chain_class, RelationKind};

    #[test]
    fn twists_are_symplectic_transvections() {
        for idx in 1..=7 {
            let t = SpElement::twist(&chain_class(idx, 3).unwrap(), 1).unwrap();
            assert!(t.preserves_form());
            let inv = SpElement::twist(&chain_class(idx, 3).unwrap(), -1).unwrap();
            assert!(t.mul(&inv).unwrap().is_identity());
            assert_eq!(t.symplectic_inverse().unwrap(), inv);
        }
    }

    #[test]
    fn involution_acts_as_minus_identity() {
        // t_{c1}⋯t_{c5} t_{c5}⋯t_{c1} is the hyperelliptic involution of Σ_2
        let (lhs, _) = crate::factorization::split_identity_sides(2, 1).unwrap();
        let mut minus = SpElement::identity(4);
        minus.entries.iter_mut().for_each(|e| *e = -*e);
        assert_eq!(sp_image(&lhs).unwrap(), minus);
        let f = build_relation(RelationKind::OddChain, 2).unwrap();
        assert!(sp_image(&f).unwrap().is_identity());
    }
}
