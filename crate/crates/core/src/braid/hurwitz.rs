use alloc::vec::Vec;

use super::word::BraidWord;
use super::BraidError;

/// An ordered factorization `w_1 · w_2 ⋯ w_k` in `B_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredBraid {
    strands: usize,
    factors: Vec<BraidWord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HurwitzDirection {
    /// `(a, b) -> (a b a⁻¹, a)`
    Right,
    /// `(a, b) -> (b, b⁻¹ a b)`
    Left,
}

impl FactoredBraid {
    pub fn new(strands: usize, factors: Vec<BraidWord>) -> Result<Self, BraidError> {
        for f in &factors {
            if f.strands() != strands {
                return Err(BraidError::StrandMismatch {
                    left: strands,
                    right: f.strands(),
                });
            }
        }
        Ok(FactoredBraid { strands, factors })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[BraidWord] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> BraidWord {
        BraidWord::product(self.strands, &self.factors)
            .expect("strand counts checked on construction")
    }

    /// Elementary transformation on the factors at `position` and `position + 1`
    /// (`position` is 1-based).
    pub fn hurwitz_move(
        &self,
        position: usize,
        direction: HurwitzDirection,
    ) -> Result<FactoredBraid, BraidError> {
        if position == 0 || position >= self.factors.len() {
            return Err(BraidError::PositionOutOfRange {
                position,
                len: self.factors.len(),
            });
        }
        let a = &self.factors[position - 1];
        let b = &self.factors[position];
        let (na, nb) = match direction {
            HurwitzDirection::Right => (
                BraidWord::product(self.strands, [a, b, &a.invert()])?,
                a.clone(),
            ),
            HurwitzDirection::Left => (
                b.clone(),
                BraidWord::product(self.strands, [&b.invert(), a, b])?,
            ),
        };
        let mut factors = self.factors.clone();
        factors[position - 1] = na;
        factors[position] = nb;
        Ok(FactoredBraid {
            strands: self.strands,
            factors,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn g(n: usize, i: i32) -> BraidWord {
        BraidWord::new(n, vec![i]).unwrap()
    }

    #[test]
    fn right_move_definition() {
        let f = FactoredBraid::new(3, vec![g(3, 1), g(3, 2)]).unwrap();
        let moved = f.hurwitz_move(1, HurwitzDirection::Right).unwrap();
        assert_eq!(moved.factors()[0].letters(), &[1, 2, -1]);
        assert_eq!(moved.factors()[1].letters(), &[1]);
    }

    #[test]
    fn left_then_right_restores() {
        let f = FactoredBraid::new(4, vec![g(4, 1), g(4, -3), g(4, 2)]).unwrap();
        for pos in 1..3 {
            let back = f
                .hurwitz_move(pos, HurwitzDirection::Left)
                .unwrap()
                .hurwitz_move(pos, HurwitzDirection::Right)
                .unwrap();
            assert_eq!(back, f);
        }
    }

    #[test]
    fn position_out_of_range() {
        let f = FactoredBraid::new(3, vec![g(3, 1), g(3, 2)]).unwrap();
        assert!(f.hurwitz_move(0, HurwitzDirection::Right).is_err());
        assert!(f.hurwitz_move(2, HurwitzDirection::Right).is_err());
    }
}
