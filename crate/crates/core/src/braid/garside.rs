//! Left-greedy Garside normal form in `B_n`.
//!
//! Every braid is written uniquely as `Δ^inf · A_1 ⋯ A_r` where each `A_j` is a
//! positive permutation braid (neither trivial nor `Δ`) and every adjacent pair
//! `(A_j, A_{j+1})` is left-weighted: each generator that can start `A_{j+1}`
//! already ends `A_j`. Simple elements are stored as [`Permutation`]s.
//!
//! Cost: a word with `L` letters is split into at most `L` simple factors; each
//! factor is multiplied into the running normal form by one right-to-left sweep
//! of `O(n²)` meets, so the whole computation is `O(L² n²)` in the worst case and
//! close to `O(L n²)` for the words that occur in practice.

use alloc::vec::Vec;

use super::perm::Permutation;
use super::word::BraidWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Permutation>,
    exponent_sum: i64,
    permutation: Permutation,
}

impl NormalForm {
    pub fn of_word(w: &BraidWord) -> NormalForm {
        let n = w.strands();
        let mut builder = Builder::new(n);
        let tokens = tokenize(w);
        let total_neg = tokens
            .iter()
            .filter(|t| matches!(t, Token::DeltaInv))
            .count();
        builder.infimum = -(total_neg as i64);
        let mut seen_neg = 0usize;
        for t in tokens {
            match t {
                Token::DeltaInv => seen_neg += 1,
                Token::Simple(p) => {
                    // moving the remaining Δ⁻¹ letters to the front conjugates by Δ once each
                    let after = total_neg - seen_neg;
                    let p = if after % 2 == 1 { p.flip() } else { p };
                    builder.push(p);
                }
            }
        }
        builder.finish()
    }

    /// Reassembles a normal form from its parts, validating every condition of
    /// the left-greedy form.
    pub fn from_parts(
        strands: usize,
        infimum: i64,
        factors: Vec<Permutation>,
    ) -> Option<NormalForm> {
        if strands == 0 || factors.iter().any(|f| f.len() != strands) {
            return None;
        }
        let nf = NormalForm::assemble(strands, infimum, factors);
        nf.is_left_greedy().then_some(nf)
    }

    fn assemble(strands: usize, infimum: i64, factors: Vec<Permutation>) -> NormalForm {
        let half = (strands * (strands - 1) / 2) as i64;
        let exponent_sum =
            infimum * half + factors.iter().map(|f| f.inversions() as i64).sum::<i64>();
        let mut permutation = if infimum.rem_euclid(2) == 1 {
            Permutation::reversal(strands)
        } else {
            Permutation::identity(strands)
        };
        for f in &factors {
            permutation = permutation.then(f);
        }
        NormalForm {
            strands,
            infimum,
            factors,
            exponent_sum,
            permutation,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn exponent_sum(&self) -> i64 {
        self.exponent_sum
    }

    pub fn permutation(&self) -> &Permutation {
        &self.permutation
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// A word spelling this normal form: `Δ^inf` followed by each factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = positive_letters(&Permutation::reversal(n));
        let mut letters = Vec::new();
        for _ in 0..self.infimum.unsigned_abs() {
            if self.infimum > 0 {
                letters.extend_from_slice(&delta);
            } else {
                letters.extend(delta.iter().rev().map(|l| -l));
            }
        }
        for f in &self.factors {
            letters.extend(positive_letters(f));
        }
        BraidWord::from_letters_unchecked(n, letters)
    }

    /// Checks the defining conditions: no trivial or `Δ` factor, every pair left-weighted.
    pub fn is_left_greedy(&self) -> bool {
        if self
            .factors
            .iter()
            .any(|f| f.is_identity() || f.is_reversal())
        {
            return false;
        }
        self.factors
            .windows(2)
            .all(|pair| meet(&right_complement(&pair[0]), &pair[1]).0.is_identity())
    }
}

enum Token {
    Simple(Permutation),
    DeltaInv,
}

/// Splits a word into `Δ⁻¹` markers and simple factors. Maximal positive runs
/// are packed greedily into permutation braids; a negative run `x⁻¹` becomes
/// `Δ⁻¹ · ∂'(A)` for each simple `A` of the reversed positive run.
fn tokenize(w: &BraidWord) -> Vec<Token> {
    let n = w.strands();
    let letters = w.letters();
    let mut tokens = Vec::new();
    let mut k = 0;
    while k < letters.len() {
        let positive = letters[k] > 0;
        let start = k;
        while k < letters.len() && (letters[k] > 0) == positive {
            k += 1;
        }
        let run = &letters[start..k];
        if positive {
            for s in pack_simples(n, run.iter().map(|&l| l as usize - 1)) {
                tokens.push(Token::Simple(s));
            }
        } else {
            let simples = pack_simples(n, run.iter().rev().map(|&l| (-l) as usize - 1));
            for s in simples.iter().rev() {
                tokens.push(Token::DeltaInv);
                tokens.push(Token::Simple(left_complement(s)));
            }
        }
    }
    tokens
}

/// Greedily groups a positive word (0-based generator indices) into simple factors.
fn pack_simples<I: Iterator<Item = usize>>(n: usize, gens: I) -> Vec<Permutation> {
    let mut out = Vec::new();
    // strand_at[pos] = starting position of the strand now at pos
    let mut strand_at: Vec<u32> = (0..n as u32).collect();
    let mut empty = true;
    for g in gens {
        if strand_at[g] > strand_at[g + 1] {
            out.push(
                Permutation::from_images_unchecked(core::mem::replace(
                    &mut strand_at,
                    (0..n as u32).collect(),
                ))
                .inverse(),
            );
        }
        strand_at.swap(g, g + 1);
        empty = false;
    }
    if !empty {
        out.push(Permutation::from_images_unchecked(strand_at).inverse());
    }
    out
}

struct Builder {
    strands: usize,
    infimum: i64,
    factors: Vec<Permutation>,
}

impl Builder {
    fn new(strands: usize) -> Self {
        Builder {
            strands,
            infimum: 0,
            factors: Vec::new(),
        }
    }

    /// Right-multiplies the current normal form by a simple element.
    fn push(&mut self, x: Permutation) {
        if x.is_identity() {
            return;
        }
        if x.is_reversal() {
            // A·Δ = Δ·flip(A)
            self.infimum += 1;
            for f in self.factors.iter_mut() {
                *f = f.flip();
            }
            return;
        }
        self.factors.push(x);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !make_left_weighted(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        while self.factors.first().is_some_and(|f| f.is_reversal()) {
            self.factors.remove(0);
            self.infimum += 1;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        debug_assert!(self.factors.iter().all(|f| !f.is_identity()));
    }

    fn finish(self) -> NormalForm {
        NormalForm::assemble(self.strands, self.infimum, self.factors)
    }
}

/// Replaces `(a, b)` by `(a·c, c⁻¹·b)` with `c = ∂a ∧ b`. Returns false when
/// the pair was already left-weighted.
fn make_left_weighted(a: &mut Permutation, b: &mut Permutation) -> bool {
    let (c, b_rest) = meet(&right_complement(a), b);
    if c.is_identity() {
        return false;
    }
    *a = a.then(&c);
    *b = b_rest;
    true
}

/// `∂a = a⁻¹Δ`, so that `a · ∂a = Δ`.
pub(crate) fn right_complement(a: &Permutation) -> Permutation {
    let n = a.len() as u32;
    let inv = a.inverse();
    Permutation::from_images_unchecked(inv.images().iter().map(|&x| n - 1 - x).collect())
}

/// `Δa⁻¹`, so that `left_complement(a) · a = Δ`.
pub(crate) fn left_complement(a: &Permutation) -> Permutation {
    let n = a.len();
    let inv = a.inverse();
    Permutation::from_images_unchecked((0..n).map(|j| inv.images()[n - 1 - j]).collect())
}

/// Left meet of two simple elements in the prefix order. Returns the meet `c`
/// and the remainder `c⁻¹·b`.
pub(crate) fn meet(a: &Permutation, b: &Permutation) -> (Permutation, Permutation) {
    let n = a.len();
    let mut x = a.clone();
    let mut y = b.clone();
    // strand_at[pos] for the running common prefix
    let mut prefix_at: Vec<u32> = (0..n as u32).collect();
    let xi = |p: &Permutation, i: usize| p.images()[i] > p.images()[i + 1];
    let mut i = 0;
    while i + 1 < n {
        if xi(&x, i) && xi(&y, i) {
            x.swap_positions(i);
            y.swap_positions(i);
            prefix_at.swap(i, i + 1);
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
    (Permutation::from_images_unchecked(prefix_at).inverse(), y)
}

/// A positive word (1-based letters) spelling the simple element `p`.
pub(crate) fn positive_letters(p: &Permutation) -> Vec<i32> {
    let n = p.len();
    let mut x = p.clone();
    let mut out = Vec::with_capacity(x.inversions());
    let mut i = 0;
    while i + 1 < n {
        if x.images()[i] > x.images()[i + 1] {
            out.push(i as i32 + 1);
            x.swap_positions(i);
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
    out
}
