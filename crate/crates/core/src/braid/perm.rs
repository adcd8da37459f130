//! Permutations of strand positions.
//!
//! A [`Permutation`] stores, for every starting position `j` (0-based), the
//! position where the strand starting at `j` ends. Products are taken in word
//! order: `a.then(&b)` is "first `a`, then `b`".

use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u32).collect())
    }

    /// The reversal `j -> n-1-j`, i.e. the permutation of the half twist.
    pub fn reversal(n: usize) -> Self {
        Permutation((0..n as u32).rev().collect())
    }

    /// Builds a permutation from its image array; `None` if it is not a bijection.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_some());
        Permutation(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, j: usize) -> usize {
        self.0[j] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &x)| j as u32 == x)
    }

    pub fn is_reversal(&self) -> bool {
        let n = self.0.len() as u32;
        self.0
            .iter()
            .enumerate()
            .all(|(j, &x)| x == n - 1 - j as u32)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u32; self.0.len()];
        for (j, &x) in self.0.iter().enumerate() {
            inv[x as usize] = j as u32;
        }
        Permutation(inv)
    }

    /// Word-order product: apply `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Self {
        assert_eq!(self.len(), next.len(), "permutation size mismatch");
        Permutation(self.0.iter().map(|&x| next.0[x as usize]).collect())
    }

    /// Number of inversions, the length of the corresponding positive permutation braid.
    pub fn inversions(&self) -> usize {
        let n = self.0.len();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.0[a] > self.0[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// True when the permutation swaps exactly two points.
    pub fn is_transposition(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .filter(|(j, &x)| *j as u32 != x)
            .count()
            == 2
    }

    /// Swaps the images of positions `i` and `i + 1`. For a simple braid this
    /// strips (or prepends) the generator `σ_{i+1}` on the left.
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.0.swap(i, i + 1);
    }

    /// Conjugation by the half twist, `j -> n-1-π(n-1-j)`.
    pub fn flip(&self) -> Self {
        let n = self.0.len() as u32;
        Permutation(
            (0..n)
                .map(|j| n - 1 - self.0[(n - 1 - j) as usize])
                .collect(),
        )
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn inverse_and_product() {
        let p = Permutation::from_images(vec![0, 2, 1, 4, 3]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.inversions(), 2);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_none());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_none());
    }

    #[test]
    fn flip_of_reversal_is_reversal() {
        let r = Permutation::reversal(6);
        assert!(r.flip().is_reversal());
        assert_eq!(r.inversions(), 15);
    }
}
