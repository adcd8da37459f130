use alloc::vec::Vec;

use super::word::BraidWord;
use super::BraidError;

/// The braid induced on a subset of strands.
///
/// `keep` lists starting positions (1-based). Each crossing between two kept
/// strands survives, renumbered by the rank of its position among the kept
/// strands; crossings involving a forgotten strand are dropped.
pub fn forget_strands(w: &BraidWord, keep: &[usize]) -> Result<BraidWord, BraidError> {
    let n = w.strands();
    if keep.is_empty() {
        return Err(BraidError::EmptyStrandSet);
    }
    let mut kept = alloc::vec![false; n];
    for &s in keep {
        if s == 0 || s > n {
            return Err(BraidError::StrandOutOfRange {
                strand: s,
                strands: n,
            });
        }
        kept[s - 1] = true;
    }
    let m = kept.iter().filter(|&&k| k).count();
    // kept_at[pos]: whether the strand now at pos is kept
    let mut kept_at = kept;
    let mut out: Vec<i32> = Vec::new();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        if kept_at[i] && kept_at[i + 1] {
            let rank = kept_at[..i].iter().filter(|&&k| k).count() as i32 + 1;
            out.push(if l > 0 { rank } else { -rank });
        }
        kept_at.swap(i, i + 1);
    }
    BraidWord::new(m, out)
}

/// Strands `first..first+count` (1-based, consecutive).
pub fn block(first: usize, count: usize) -> Vec<usize> {
    (first..first + count).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::standard::full_twist;

    #[test]
    fn sub_full_twist() {
        let f = forget_strands(&full_twist(4), &[1, 2]).unwrap();
        assert!(f.equals(&full_twist(2)).unwrap());
        assert_eq!(f.strands(), 2);
    }

    #[test]
    fn keep_all_is_identity_operation() {
        let w = BraidWord::new(4, alloc::vec![1, -3, 2, 2, -1]).unwrap();
        assert_eq!(forget_strands(&w, &[1, 2, 3, 4]).unwrap(), w);
    }

    #[test]
    fn empty_subset_is_rejected() {
        let w = BraidWord::identity(3);
        assert!(matches!(
            forget_strands(&w, &[]),
            Err(BraidError::EmptyStrandSet)
        ));
        assert!(forget_strands(&w, &[4]).is_err());
    }

    #[test]
    fn forgetting_the_crossing_strand() {
        // σ1σ2: strand 1 passes two positions; forgetting it leaves the others uncrossed
        let w = BraidWord::new(3, alloc::vec![1, 2]).unwrap();
        assert!(forget_strands(&w, &[2, 3]).unwrap().is_empty());
        assert_eq!(forget_strands(&w, &[1, 3]).unwrap().letters(), &[1]);
    }
}
