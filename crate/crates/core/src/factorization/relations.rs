use alloc::vec::Vec;
use core::fmt;

use super::{
    CurveKind, CurveSymbol, FactorizationError, SeparatingType, SurfaceSignature, Target,
    TwistFactorization,
};

/// Homology class of `c_index` on a closed genus-`genus` surface in the basis
/// `a_1, b_1, …, a_g, b_g`: `c_1 = a_1`, `c_{2j} = b_j`,
/// `c_{2j+1} = a_{j+1} − a_j`, `c_{2g+1} = −a_g`.
pub fn chain_class(index: usize, genus: u32) -> Option<Vec<i64>> {
    let g = genus as usize;
    if g == 0 || index == 0 || index > 2 * g + 1 {
        return None;
    }
    let mut v = alloc::vec![0i64; 2 * g];
    let a = |j: usize| 2 * (j - 1);
    if index == 1 {
        v[a(1)] = 1;
    } else if index % 2 == 0 {
        v[a(index / 2) + 1] = 1;
    } else if index == 2 * g + 1 {
        v[a(g)] = -1;
    } else {
        let j = (index - 1) / 2;
        v[a(j + 1)] = 1;
        v[a(j)] = -1;
    }
    Some(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum RelationKind {
    /// `(t_{c1} ⋯ t_{c_{2h+1}})^{2h+2} = 1` on `Σ_h`.
    OddChain,
    /// `(t_{c1} ⋯ t_{c_{2h+1}} t_{c_{2h+1}} ⋯ t_{c1})² = 1` on `Σ_h`.
    Hyperelliptic,
    /// `(t_{c1} ⋯ t_{c_{2h+1}})^{2r} (t_{c_{2h+1}} ⋯ t_{c1})^{2r} = 1` on `Σ_h`.
    HyperellipticSplit(u32),
    /// `(t_{c1} ⋯ t_{c_{2h}})^{4h+2} = t_δ` on `Σ_h^1`.
    EvenChain,
    /// `t_x t_y t_z = t_{δ1} t_{δ2} t_{δ3} t_{δ4}` on the four-holed sphere.
    Lantern,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationKind::OddChain => f.write_str("odd-chain"),
            RelationKind::Hyperelliptic => f.write_str("hyperelliptic"),
            RelationKind::HyperellipticSplit(r) => write!(f, "hyperelliptic-split({r})"),
            RelationKind::EvenChain => f.write_str("even-chain"),
            RelationKind::Lantern => f.write_str("lantern"),
        }
    }
}

/// Appends `(t_{c_first} ⋯ t_{c_last})^count`, or the reversed chain.
pub(crate) fn push_chain(
    f: &mut TwistFactorization,
    first: usize,
    last: usize,
    reversed: bool,
    count: usize,
) {
    let genus = f.ambient.genus;
    let ids: Vec<usize> = (first..=last)
        .map(|j| {
            f.add_curve(CurveSymbol::chain(j, genus))
                .expect("chain curves agree")
        })
        .collect();
    for _ in 0..count {
        if reversed {
            ids.iter().rev().for_each(|&c| f.push(c, 1));
        } else {
            ids.iter().for_each(|&c| f.push(c, 1));
        }
    }
}

pub fn build_relation(
    kind: RelationKind,
    h: u32,
) -> Result<TwistFactorization, FactorizationError> {
    let name = match kind {
        RelationKind::OddChain => "odd-chain",
        RelationKind::Hyperelliptic => "hyperelliptic",
        RelationKind::HyperellipticSplit(_) => "hyperelliptic-split",
        RelationKind::EvenChain => "even-chain",
        RelationKind::Lantern => "lantern",
    };
    if h == 0 && kind != RelationKind::Lantern {
        return Err(FactorizationError::InvalidRelation { kind: name, h });
    }
    let top = 2 * h as usize + 1;
    let f = match kind {
        RelationKind::OddChain => {
            let mut f = TwistFactorization::new(SurfaceSignature::closed(h), Target::Identity);
            push_chain(&mut f, 1, top, false, top + 1);
            f
        }
        RelationKind::Hyperelliptic => {
            let mut f = TwistFactorization::new(SurfaceSignature::closed(h), Target::Identity);
            for _ in 0..2 {
                push_chain(&mut f, 1, top, false, 1);
                push_chain(&mut f, 1, top, true, 1);
            }
            f
        }
        RelationKind::HyperellipticSplit(r) => {
            let mut f = TwistFactorization::new(SurfaceSignature::closed(h), Target::Identity);
            push_chain(&mut f, 1, top, false, 2 * r as usize);
            push_chain(&mut f, 1, top, true, 2 * r as usize);
            f
        }
        RelationKind::EvenChain => {
            let mut f = TwistFactorization::new(
                SurfaceSignature::bordered(h, 1),
                Target::BoundaryMultitwist,
            );
            push_chain(&mut f, 1, top - 1, false, 2 * top);
            f.add_curve(CurveSymbol::new("delta", CurveKind::BoundaryParallel(1)))?;
            f
        }
        RelationKind::Lantern => {
            let mut f = TwistFactorization::new(
                SurfaceSignature::bordered(0, 4),
                Target::BoundaryMultitwist,
            );
            for j in 1..=4 {
                f.add_curve(CurveSymbol::new(
                    alloc::format!("delta{j}"),
                    CurveKind::BoundaryParallel(j),
                ))?;
            }
            for name in ["x", "y", "z"] {
                let mut c = CurveSymbol::new(name, CurveKind::Abstract);
                c.homology = Some(Vec::new());
                c.separating = Some(SeparatingType::Separating(0));
                f.push_curve(c);
            }
            f
        }
    };
    Ok(f)
}

/// Both sides of the hyperelliptic splitting identity for exponent `n`:
/// `(t_{c1}⋯t_{c_{2h+1}} t_{c_{2h+1}}⋯t_{c1})^n` and
/// `(t_{c1}⋯t_{c_{2h+1}})^n (t_{c_{2h+1}}⋯t_{c1})^n`.
pub fn split_identity_sides(
    h: u32,
    n: u32,
) -> Result<(TwistFactorization, TwistFactorization), FactorizationError> {
    if h == 0 {
        return Err(FactorizationError::InvalidRelation {
            kind: "hyperelliptic-split",
            h,
        });
    }
    let top = 2 * h as usize + 1;
    let mut lhs = TwistFactorization::new(SurfaceSignature::closed(h), Target::Unconstrained);
    for _ in 0..n {
        push_chain(&mut lhs, 1, top, false, 1);
        push_chain(&mut lhs, 1, top, true, 1);
    }
    let mut rhs = TwistFactorization::new(SurfaceSignature::closed(h), Target::Unconstrained);
    push_chain(&mut rhs, 1, top, false, n as usize);
    push_chain(&mut rhs, 1, top, true, n as usize);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_classes_genus_two() {
        assert_eq!(chain_class(1, 2).unwrap(), [1, 0, 0, 0]);
        assert_eq!(chain_class(2, 2).unwrap(), [0, 1, 0, 0]);
        assert_eq!(chain_class(3, 2).unwrap(), [-1, 0, 1, 0]);
        assert_eq!(chain_class(4, 2).unwrap(), [0, 0, 0, 1]);
        assert_eq!(chain_class(5, 2).unwrap(), [0, 0, -1, 0]);
        assert!(chain_class(6, 2).is_none());
    }

    #[test]
    fn letter_counts() {
        assert_eq!(build_relation(RelationKind::OddChain, 1).unwrap().len(), 12);
        assert_eq!(
            build_relation(RelationKind::Hyperelliptic, 2)
                .unwrap()
                .len(),
            20
        );
        assert_eq!(
            build_relation(RelationKind::HyperellipticSplit(1), 1)
                .unwrap()
                .len(),
            12
        );
        assert_eq!(
            build_relation(RelationKind::EvenChain, 2).unwrap().len(),
            40
        );
        assert_eq!(build_relation(RelationKind::Lantern, 0).unwrap().len(), 3);
        assert!(build_relation(RelationKind::OddChain, 0).is_err());
    }

    #[test]
    fn split_form_has_hyperelliptic_multiset() {
        let a = build_relation(RelationKind::HyperellipticSplit(1), 2).unwrap();
        let b = build_relation(RelationKind::Hyperelliptic, 2).unwrap();
        let mut x = a.letter_names();
        let mut y = b.letter_names();
        x.sort();
        y.sort();
        assert_eq!(x, y);
    }
}
