use super::InvariantError;
use crate::params::{ParamError, PencilSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FamilyMember {
    pub p: u32,
    pub g: u32,
    pub i: u32,
}

impl FamilyMember {
    pub fn spec(&self, h: u32) -> PencilSpec {
        PencilSpec::new(self.g, h, self.i).expect("family members are valid")
    }
}

/// The pencils `X'_{g(p),h}[i(p)]` on `Z_h(q) #_f H_h(r)`, with
/// `g(p) = p(h+1) + r − 1`, `i(p) = 2p − 1 − q` and `p ≥ max(⌈(q+1)/2⌉, 2)`.
pub fn family_params(
    h: u32,
    q: u32,
    r: u32,
) -> Result<impl Iterator<Item = FamilyMember>, InvariantError> {
    if h == 0 {
        return Err(ParamError::GenusOrder { g: 0, h }.into());
    }
    if r > h {
        return Err(ParamError::RemainderOutOfRange { h, r }.into());
    }
    let start = q.div_ceil(2).max(2);
    Ok((start..).map(move |p| FamilyMember {
        p,
        g: p * (h + 1) + r - 1,
        i: 2 * p - 1 - q,
    }))
}

/// Degree doubling: a genus-`g` pencil with `b` base points gives genus
/// `2g + b − 1` with `4b` base points.
pub fn degree_double(g: u64, b: u64) -> Result<(u64, u64), InvariantError> {
    if b == 0 {
        return Err(ParamError::NoBasePoints.into());
    }
    let g2 = g
        .checked_mul(2)
        .and_then(|x| x.checked_add(b - 1))
        .ok_or(InvariantError::Overflow)?;
    let b2 = b.checked_mul(4).ok_or(InvariantError::Overflow)?;
    Ok((g2, b2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::classify;
    use alloc::string::ToString;

    #[test]
    fn z2_single_family() {
        let members: alloc::vec::Vec<_> = family_params(2, 1, 0).unwrap().take(3).collect();
        let gi: alloc::vec::Vec<_> = members.iter().map(|m| (m.g, m.i)).collect();
        assert_eq!(gi, [(5, 2), (8, 4), (11, 6)]);
        for m in &members {
            assert_eq!(classify(&m.spec(2)).canonical.to_string(), "Z_2(1)");
        }
    }

    #[test]
    fn doubling() {
        assert_eq!(degree_double(2, 4).unwrap(), (7, 16));
        assert_eq!(degree_double(7, 16).unwrap(), (29, 64));
        assert!(degree_double(2, 0).is_err());
        assert!(family_params(2, 1, 3).is_err());
    }
}
