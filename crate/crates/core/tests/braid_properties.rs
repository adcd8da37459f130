use lefschetz_core::braid::{full_twist, BraidWord, FactoredBraid, HurwitzDirection};
use proptest::prelude::*;

/// Reduced words in the free group `F_n`, letters `±k` for `x_k^{±1}`.
fn reduce(word: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn invert(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|l| -l).collect()
}

/// Image of `x_k` under the Artin automorphism of `σ_i^{±1}`.
fn artin_image(i: i32, k: i32) -> Vec<i32> {
    let gen = i.abs();
    if i > 0 {
        if k == gen {
            vec![gen, gen + 1, -gen]
        } else if k == gen + 1 {
            vec![gen]
        } else {
            vec![k]
        }
    } else if k == gen {
        vec![gen + 1]
    } else if k == gen + 1 {
        vec![-(gen + 1), gen, gen + 1]
    } else {
        vec![k]
    }
}

/// The action of a braid word on the generators of `F_n`. Artin's
/// representation is faithful, so two words are equal braids iff these agree.
fn artin_action(w: &BraidWord) -> Vec<Vec<i32>> {
    let n = w.strands() as i32;
    let mut images: Vec<Vec<i32>> = (1..=n).map(|k| vec![k]).collect();
    for &letter in w.letters() {
        for img in images.iter_mut() {
            let mut next = Vec::new();
            for &x in img.iter() {
                let sub = artin_image(letter, x.abs());
                if x > 0 {
                    next.extend(sub);
                } else {
                    next.extend(invert(&sub));
                }
            }
            *img = reduce(next);
        }
    }
    images
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = (n - 1) as i32;
    prop::collection::vec((1..=g, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        let letters = ls
            .into_iter()
            .map(|(i, pos)| if pos { i } else { -i })
            .collect();
        BraidWord::new(n, letters).unwrap()
    })
}

fn sized_word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| word(n, max_len))
}

fn pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| (word(n, max_len), word(n, max_len)))
}

fn factored() -> impl Strategy<Value = (FactoredBraid, Vec<(usize, bool)>)> {
    (3usize..=6).prop_flat_map(|n| {
        (
            prop::collection::vec(word(n, 6), 2..=5),
            prop::collection::vec((1usize..5, any::<bool>()), 1..=8),
        )
            .prop_map(move |(fs, moves)| (FactoredBraid::new(n, fs).unwrap(), moves))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn hurwitz_moves_keep_the_product((f, moves) in factored()) {
        let original = f.product();
        let mut cur = f;
        for (pos, right) in moves {
            let pos = 1 + pos % (cur.len() - 1);
            let dir = if right { HurwitzDirection::Right } else { HurwitzDirection::Left };
            cur = cur.hurwitz_move(pos, dir).unwrap();
            prop_assert!(cur.product().equals(&original).unwrap());
        }
    }

    #[test]
    fn hurwitz_moves_are_mutually_inverse((f, moves) in factored()) {
        let pos = 1 + moves[0].0 % (f.len() - 1);
        let back = f
            .hurwitz_move(pos, HurwitzDirection::Right)
            .unwrap()
            .hurwitz_move(pos, HurwitzDirection::Left)
            .unwrap();
        for (a, b) in back.factors().iter().zip(f.factors()) {
            prop_assert!(a.equals(b).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn normal_form_is_idempotent(w in sized_word(7, 30)) {
        let nf = w.normal_form();
        prop_assert!(nf.is_left_greedy());
        prop_assert_eq!(nf.to_word().normal_form(), nf.clone());
        prop_assert_eq!(nf.exponent_sum(), w.exponent_sum());
        prop_assert_eq!(nf.permutation(), &w.permutation());
    }

    #[test]
    fn full_twist_is_central(w in sized_word(7, 25)) {
        let d2 = full_twist(w.strands());
        prop_assert!(w.compose(&d2).unwrap().equals(&d2.compose(&w).unwrap()).unwrap());
    }

    #[test]
    fn compose_and_invert((a, b) in pair(6, 15)) {
        prop_assert!(a.compose(&a.invert()).unwrap().normal_form().is_identity());
        let ab_inv = a.compose(&b).unwrap().invert();
        prop_assert!(ab_inv.equals(&b.invert().compose(&a.invert()).unwrap()).unwrap());
    }

    #[test]
    fn normal_form_word_has_same_artin_action(w in sized_word(5, 12)) {
        prop_assert_eq!(artin_action(&w.normal_form().to_word()), artin_action(&w));
    }

    #[test]
    fn equality_agrees_with_artin_action((a, b) in pair(4, 8)) {
        prop_assert_eq!(a.equals(&b).unwrap(), artin_action(&a) == artin_action(&b));
    }

    #[test]
    fn conjugates_of_equal_words_agree((a, c) in pair(4, 6)) {
        // a and its normal-form spelling are equal; so are their conjugates by c
        let x = c.compose(&a).unwrap().compose(&c.invert()).unwrap();
        let y = c.compose(&a.normal_form().to_word()).unwrap().compose(&c.invert()).unwrap();
        prop_assert!(x.equals(&y).unwrap());
        prop_assert_eq!(artin_action(&x), artin_action(&y));
    }
}

#[test]
fn artin_oracle_sanity() {
    let s1s2s1 = BraidWord::new(3, vec![1, 2, 1]).unwrap();
    let s2s1s2 = BraidWord::new(3, vec![2, 1, 2]).unwrap();
    assert_eq!(artin_action(&s1s2s1), artin_action(&s2s1s2));
    let s1 = BraidWord::new(3, vec![1]).unwrap();
    let s2 = BraidWord::new(3, vec![2]).unwrap();
    assert_ne!(artin_action(&s1), artin_action(&s2));
    // Δ² acts as an inner automorphism, conjugation by one fixed element
    let d2 = artin_action(&full_twist(3));
    let half = (d2[0].len() - 1) / 2;
    let u = &d2[0][..half];
    for (k, img) in d2.iter().enumerate() {
        let mut expected = u.to_vec();
        expected.push(k as i32 + 1);
        expected.extend(invert(u));
        assert_eq!(img, &reduce(expected));
    }
    assert!(!u.is_empty());
}
