use alloc::vec::Vec;
use core::fmt;

use super::garside::NormalForm;
use super::perm::Permutation;
use super::BraidError;

/// An element of the braid group `B_n` written as a signed word in the Artin
/// generators: `+i` is `σ_i`, `-i` is `σ_i⁻¹`, with `1 <= i < n`.
///
/// Words are read left to right, the leftmost letter acting first. Adjacent
/// cancelling letters are removed on construction, so a stored word is always
/// freely reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &l in &letters {
            let i = l.unsigned_abs() as usize;
            if l == 0 || i >= strands {
                return Err(BraidError::GeneratorOutOfRange { letter: l, strands });
            }
        }
        Ok(Self::from_letters_unchecked(strands, letters))
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        let mut reduced: Vec<i32> = Vec::with_capacity(letters.len());
        for l in letters {
            debug_assert!(l != 0 && (l.unsigned_abs() as usize) < strands);
            if reduced.last() == Some(&-l) {
                reduced.pop();
            } else {
                reduced.push(l);
            }
        }
        BraidWord {
            strands,
            letters: reduced,
        }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// The single letter `σ_i^{±1}`.
    pub fn generator(strands: usize, index: usize, positive: bool) -> Result<Self, BraidError> {
        let l = index as i32;
        Self::new(strands, alloc::vec![if positive { l } else { -l }])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self::from_letters_unchecked(self.strands, letters))
    }

    /// Concatenates any number of words on the same strand count.
    pub fn product<'a, I>(strands: usize, words: I) -> Result<BraidWord, BraidError>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut letters = Vec::new();
        for w in words {
            if w.strands != strands {
                return Err(BraidError::StrandMismatch {
                    left: strands,
                    right: w.strands,
                });
            }
            letters.extend_from_slice(&w.letters);
        }
        Ok(Self::from_letters_unchecked(strands, letters))
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self^k`; negative powers use the inverse.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self::from_letters_unchecked(self.strands, letters)
    }

    /// Re-indexes the word into `B_strands`, shifting every generator by `offset`.
    pub fn embed(&self, strands: usize, offset: usize) -> Result<BraidWord, BraidError> {
        let shift = offset as i32;
        let letters = self
            .letters
            .iter()
            .map(|&l| if l > 0 { l + shift } else { l - shift })
            .collect();
        BraidWord::new(strands, letters)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Image in the symmetric group: entry `j` is the final position of the
    /// strand that starts at position `j` (0-based).
    pub fn permutation(&self) -> Permutation {
        // at[pos] = strand currently at pos
        let mut at: Vec<u32> = (0..self.strands as u32).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        Permutation::from_images_unchecked(at).inverse()
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::of_word(self)
    }

    /// Equality in `B_n`, decided by comparing normal forms.
    pub fn equals(&self, other: &BraidWord) -> Result<bool, BraidError> {
        self.check_same(other)?;
        if self.letters == other.letters {
            return Ok(true);
        }
        if self.exponent_sum() != other.exponent_sum() || self.permutation() != other.permutation()
        {
            return Ok(false);
        }
        Ok(self.normal_form() == other.normal_form())
    }

    fn check_same(&self, other: &BraidWord) -> Result<(), BraidError> {
        if self.strands != other.strands {
            Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}{:?}", self.strands, self.letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for (k, &l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if l > 0 {
                write!(f, "s{}", l)?;
            } else {
                write!(f, "s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn invert_reverses_and_flips() {
        let w = BraidWord::new(3, vec![1, 2]).unwrap();
        assert_eq!(w.invert().letters(), &[-2, -1]);
    }

    #[test]
    fn compose_with_identity() {
        let w = BraidWord::new(3, vec![1, 2, 1]).unwrap();
        let e = BraidWord::identity(3);
        assert_eq!(w.compose(&e).unwrap(), w);
    }

    #[test]
    fn free_reduction_is_eager() {
        let w = BraidWord::new(4, vec![1, 2, -2, 3, -3, -1, 2]).unwrap();
        assert_eq!(w.letters(), &[2]);
        assert_eq!(w.exponent_sum(), 1);
    }

    #[test]
    fn rejects_out_of_range_generators() {
        assert!(matches!(
            BraidWord::new(3, vec![3]),
            Err(BraidError::GeneratorOutOfRange { .. })
        ));
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
    }

    #[test]
    fn compose_rejects_strand_mismatch() {
        let a = BraidWord::identity(3);
        let b = BraidWord::identity(4);
        assert!(matches!(
            a.compose(&b),
            Err(BraidError::StrandMismatch { left: 3, right: 4 })
        ));
        assert!(a.equals(&b).is_err());
    }

    #[test]
    fn permutation_of_generator() {
        let w = BraidWord::new(3, vec![1]).unwrap();
        assert_eq!(w.permutation().images(), &[1, 0, 2]);
        let w = BraidWord::new(3, vec![1, 2]).unwrap();
        // strand 0 ends at 2, strand 1 at 0, strand 2 at 1
        assert_eq!(w.permutation().images(), &[2, 0, 1]);
    }
}
