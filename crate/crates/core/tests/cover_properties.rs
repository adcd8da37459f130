use lefschetz_core::cover::{apply_move, branch_class_solve, proof_script, CoverState, Move};
use lefschetz_core::invariants::EulerSignature;
use lefschetz_core::PencilSpec;

#[test]
fn every_reachable_state_is_consistent() {
    for spec in PencilSpec::grid(6) {
        let mut s = CoverState::init(spec);
        for mv in proof_script(&spec) {
            let next = apply_move(&s, mv).unwrap();
            let de = next.audited.e_cover - s.audited.e_cover;
            let ds = next.audited.sigma_cover - s.audited.sigma_cover;
            match mv {
                Move::BlowDown => assert_eq!((de, ds), (-2, 2), "{spec}"),
                _ => assert_eq!((de, ds), (0, 0), "{spec} {mv}"),
            }
            s = next;
            let cover = EulerSignature {
                e: s.audited.e_cover,
                sigma: s.audited.sigma_cover,
            };
            let base = EulerSignature {
                e: s.base.euler(),
                sigma: s.base.signature(),
            };
            let (b_square, e_branch) = branch_class_solve(cover, base).unwrap();
            assert_eq!(b_square, s.b_square, "{spec}");
            assert_eq!(e_branch, s.branch.euler(), "{spec}");
            assert_eq!(b_square % 2, 0);
            assert_eq!(e_branch % 2, 0);
        }
    }
}

#[test]
fn blow_downs_total_two_per_exceptional_sphere() {
    // each exceptional sphere of the base lifts to two (−1)-sections
    for spec in PencilSpec::grid(6) {
        let start = CoverState::init(spec).audited;
        let mut s = CoverState::init(spec);
        for mv in proof_script(&spec)
            .into_iter()
            .filter(|m| *m != Move::IsotopyLemmaStep)
        {
            if matches!(
                mv,
                Move::BlowDown | Move::HandleSlide { .. } | Move::BandDive | Move::BandSlide
            ) {
                s = apply_move(&s, mv).unwrap();
            }
        }
        let sections = 2 * (spec.i as i64 + 1);
        assert_eq!(s.audited.e_cover, start.e_cover - sections);
        assert_eq!(s.audited.sigma_cover, start.sigma_cover + sections);
    }
}
