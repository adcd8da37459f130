use lefschetz_core::factorization::{
    build_pencil_word, build_relation, cap_boundary, fiber_sum, split_identity_sides, RelationKind,
};
use lefschetz_core::invariants::{
    classify, closed_form_invariants, euler_from_word, rokhlin_audit, sigma_endo_hyperelliptic,
    sigma_meyer, sp_image, spin_predicate, DiffeoType,
};
use lefschetz_core::{PencilSpec, SpecCase};
use proptest::prelude::*;

/// Letter count of the pencil word, assembled block by block.
fn letters_oracle(s: &PencilSpec) -> i64 {
    let (g, h, i) = (s.g as i64, s.h as i64, s.i as i64);
    let (p, r) = (s.p as i64, s.r as i64);
    let chain = 2 * h + 1;
    let q = 2 * p - 1 - i;
    2 * (2 * g - 2 * h) + 2 * (i + 1) + chain * (chain + 1) * q + 4 * r * chain
}

#[test]
fn word_length_and_euler_match_oracle() {
    for s in PencilSpec::grid(12) {
        let f = cap_boundary(&build_pencil_word(s.g, s.h, s.i).unwrap()).unwrap();
        assert_eq!(f.len() as i64, letters_oracle(&s), "{s}");
        let b = 2 * (s.i as i64 + 1);
        let e = 4 - 4 * s.g as i64 + letters_oracle(&s) - b;
        assert_eq!(euler_from_word(&f, b).unwrap(), e, "{s}");
        assert_eq!(closed_form_invariants(&s).e, e, "{s}");
    }
}

#[test]
fn signature_is_additive_over_summands() {
    for s in PencilSpec::grid(12) {
        let h = s.h as i64 + 1;
        let q = 2 * s.p as i64 - 1 - s.i as i64;
        let expected = -2 * h * h * q - 4 * h * s.r as i64;
        assert_eq!(closed_form_invariants(&s).sigma, expected, "{s}");
    }
}

#[test]
fn spin_oracle() {
    // with h odd, g ≡ i (mod 2) is the same as q ≡ r (mod 2)
    for s in PencilSpec::grid(12) {
        if s.case() == SpecCase::LastExact {
            assert!(spin_predicate(&s).is_err());
            continue;
        }
        let q = 2 * s.p - 1 - s.i;
        let oracle = s.h % 2 == 1 && (q + s.r) % 2 == 0;
        assert_eq!(spin_predicate(&s).unwrap(), oracle, "{s}");
        let audit = rokhlin_audit(&s).unwrap();
        assert!(audit.ok, "{s}");
        if oracle {
            assert_eq!(audit.sigma % 16, 0, "{s}");
        }
    }
}

#[test]
fn classification_target_matches_closed_forms() {
    for s in PencilSpec::grid(12) {
        let c = classify(&s);
        assert_eq!(c.raw.invariants(), closed_form_invariants(&s), "{s}");
        assert_eq!(c.canonical.invariants(), closed_form_invariants(&s), "{s}");
    }
}

#[test]
fn z_two_copies_match_h_h_plus_one() {
    for h in 1..=4 {
        let z = DiffeoType::FiberSum { h, z: 2, hyp: 0 };
        let y = DiffeoType::FiberSum {
            h,
            z: 0,
            hyp: h + 1,
        };
        assert_eq!(z.invariants(), y.invariants());
    }
}

#[test]
fn relators_act_trivially_on_homology() {
    for h in 1..=3 {
        for kind in [
            RelationKind::OddChain,
            RelationKind::Hyperelliptic,
            RelationKind::EvenChain,
            RelationKind::HyperellipticSplit(1),
            RelationKind::HyperellipticSplit(h),
        ] {
            let f = build_relation(kind, h).unwrap();
            assert!(sp_image(&f).unwrap().is_identity(), "{kind:?} h={h}");
        }
    }
    let lantern = build_relation(RelationKind::Lantern, 1).unwrap();
    assert!(sp_image(&lantern).unwrap().is_identity());
}

#[test]
fn split_identity_on_homology() {
    for h in 1..=3 {
        for n in 1..=4 {
            let (l, r) = split_identity_sides(h, n).unwrap();
            assert_eq!(sp_image(&l).unwrap(), sp_image(&r).unwrap(), "h={h} n={n}");
        }
    }
}

#[test]
fn signature_engines_on_relators() {
    for h in 1..=3u32 {
        let hh = h as i64 + 1;
        let z = build_relation(RelationKind::OddChain, h).unwrap();
        let y = build_relation(RelationKind::Hyperelliptic, h).unwrap();
        assert_eq!(sigma_meyer(&z).unwrap(), -2 * hh * hh);
        assert_eq!(sigma_endo_hyperelliptic(&z).unwrap(), -2 * hh * hh);
        assert_eq!(sigma_meyer(&y).unwrap(), -4 * hh);
        assert_eq!(sigma_endo_hyperelliptic(&y).unwrap(), -4 * hh);
    }
}

fn relator() -> impl Strategy<Value = RelationKind> {
    prop_oneof![
        Just(RelationKind::OddChain),
        Just(RelationKind::Hyperelliptic)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn meyer_is_additive_on_fiber_sums(h in 1u32..=2, a in relator(), b in relator(), c in relator()) {
        let fa = build_relation(a, h).unwrap();
        let fb = build_relation(b, h).unwrap();
        let fc = build_relation(c, h).unwrap();
        let sum = fiber_sum(&fiber_sum(&fa, &fb).unwrap(), &fc).unwrap();
        let parts = sigma_meyer(&fa).unwrap() + sigma_meyer(&fb).unwrap() + sigma_meyer(&fc).unwrap();
        prop_assert_eq!(sigma_meyer(&sum).unwrap(), parts);
        prop_assert_eq!(sigma_endo_hyperelliptic(&sum).unwrap(), parts);
    }
}
