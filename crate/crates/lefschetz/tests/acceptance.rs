//! One pass/fail line per acceptance criterion; exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use lefschetz::core::braid::{
    block_pass_braids, block_pass_relation_word, full_twist, BraidWord, FactoredBraid,
    HurwitzDirection, StandardWord,
};
use lefschetz::core::cover::run_proof_script;
use lefschetz::core::factorization::{
    build_pencil_word, build_relation, cap_boundary, fiber_sum, project_to_braid,
    split_identity_sides, RelationKind,
};
use lefschetz::core::invariants::{
    calibrate, classify, closed_form_invariants, degree_double, euler_from_word, family_params,
    rokhlin_audit, sigma_endo_hyperelliptic, sigma_meyer, sp_image, DiffeoType, InvariantRecord,
    MeyerConvention,
};
use lefschetz::core::{PencilSpec, SpecCase};
use lefschetz::verify::reversing_sides;
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grid(g_max: u32) -> Vec<PencilSpec> {
    PencilSpec::grid(g_max).collect()
}

fn c1_block_pass_relation() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for g in 2..=6 {
        for h in 1..g {
            let bp = block_pass_braids(g, h).map_err(|e| format!("({g},{h}): {e}"))?;
            let w = block_pass_relation_word(&bp);
            ensure(w.equals(&full_twist(2 * g as usize + 2)).unwrap(), || {
                format!("({g},{h}) is not Δ²")
            })?;
            n += 1;
        }
    }
    let t = start.elapsed().as_secs_f64();
    ensure(t < 60.0, || format!("took {t:.1}s"))?;
    Ok(format!("{n} pairs (g,h), 1 ≤ h < g ≤ 6, in {t:.2}s"))
}

fn c2_pencil_projection() -> Outcome {
    let specs = grid(6);
    for s in &specs {
        let f = cap_boundary(&build_pencil_word(s.g, s.h, s.i).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let w = project_to_braid(&f).map_err(|e| format!("{s}: {e}"))?;
        ensure(w.equals(&full_twist(s.strands())).unwrap(), || {
            format!("{s} is not Δ²")
        })?;
    }
    Ok(format!(
        "{} capped words, h < g ≤ 6, all valid i",
        specs.len()
    ))
}

fn c3_reversing_and_block_twist() -> Outcome {
    for m in 2..=7 {
        let (a, b) = reversing_sides(m).map_err(|e| e.to_string())?;
        ensure(a.equals(&b).unwrap(), || {
            format!("reversing fails for m={m}")
        })?;
    }
    for k in 2..=8 {
        let chain = StandardWord::chain(k, k).word(k).unwrap();
        let twist = StandardWord::block_full_twist(k).word(k).unwrap();
        ensure(chain.equals(&twist).unwrap(), || {
            format!("block twist fails for k={k}")
        })?;
    }
    Ok("reversing 2 ≤ m ≤ 7, block twist 2 ≤ k ≤ 8".into())
}

fn c4_euler() -> Outcome {
    let specs = grid(12);
    for s in &specs {
        let f = cap_boundary(&build_pencil_word(s.g, s.h, s.i).unwrap()).unwrap();
        let e = euler_from_word(&f, s.base_points() as i64).unwrap();
        let closed = closed_form_invariants(s).e;
        ensure(e == closed, || {
            format!("{s}: word gives {e}, closed form {closed}")
        })?;
    }
    Ok(format!("{} pencils, h < g ≤ 12", specs.len()))
}

fn c5_classification() -> Outcome {
    let specs = grid(12);
    for s in &specs {
        let c = classify(s);
        let closed = closed_form_invariants(s);
        ensure(c.raw.invariants() == closed, || {
            format!("{s}: {} vs {closed:?}", c.raw)
        })?;
        ensure(c.canonical.invariants() == closed, || {
            format!("{s}: {}", c.canonical)
        })?;
    }
    Ok(format!("{} pencils, h < g ≤ 12", specs.len()))
}

fn c6_signature_engines() -> Outcome {
    let cal = calibrate().map_err(|e| e.to_string())?;
    ensure(cal.chosen == Some(MeyerConvention::FROZEN), || {
        format!("calibration chose {:?}", cal.chosen)
    })?;
    for h in 1..=3u32 {
        let hh = h as i64 + 1;
        for (kind, expected) in [
            (RelationKind::OddChain, -2 * hh * hh),
            (RelationKind::Hyperelliptic, -4 * hh),
        ] {
            let f = build_relation(kind, h).unwrap();
            let m = sigma_meyer(&f).map_err(|e| e.to_string())?;
            let e = sigma_endo_hyperelliptic(&f).map_err(|e| e.to_string())?;
            ensure(m == expected && e == expected, || {
                format!("{kind} h={h}: meyer {m}, endo {e}, expected {expected}")
            })?;
        }
    }
    let z3 = sigma_meyer(&build_relation(RelationKind::OddChain, 3).unwrap()).unwrap();
    ensure(z3 == -32, || format!("σ(Z_3) = {z3}"))?;

    let mut runner = TestRunner::deterministic();
    let strategy = (
        1u32..=2,
        prop::collection::vec(
            prop_oneof![
                Just(RelationKind::OddChain),
                Just(RelationKind::Hyperelliptic)
            ],
            2..=3,
        ),
    );
    let mut sums = Vec::new();
    for _ in 0..3 {
        let (h, kinds) = strategy.new_tree(&mut runner).unwrap().current();
        let parts: Vec<_> = kinds
            .iter()
            .map(|&k| build_relation(k, h).unwrap())
            .collect();
        let mut sum = parts[0].clone();
        for p in &parts[1..] {
            sum = fiber_sum(&sum, p).unwrap();
        }
        let expected: i64 = parts.iter().map(|p| sigma_meyer(p).unwrap()).sum();
        let got = sigma_meyer(&sum).unwrap();
        ensure(got == expected, || {
            format!("sum {kinds:?} h={h}: {got} vs {expected}")
        })?;
        sums.push(format!("{}×h={h}", kinds.len()));
    }
    Ok(format!(
        "Z_h, H_h for h ≤ 3; σ(Z_3) = −32; additive on sums [{}]",
        sums.join(", ")
    ))
}

fn c7_numbers() -> Outcome {
    let s = PencilSpec::new(17, 2, 7).unwrap();
    let rec = InvariantRecord::new(&s);
    let f = build_pencil_word(17, 2, 7).unwrap();
    ensure(rec.nodal_fibers == 196 && f.len() == 196, || {
        format!("{} nodal fibers", rec.nodal_fibers)
    })?;
    ensure(rec.base_points == 16, || {
        format!("{} base points", rec.base_points)
    })?;
    ensure((rec.e, rec.sigma) == (116, -72), || {
        format!("(e, σ) = ({}, {})", rec.e, rec.sigma)
    })?;
    ensure(rec.diffeo_type == "H_2(6)", || rec.diffeo_type.clone())?;
    Ok("196 nodal fibers, 16 base points, e = 116, σ = −72, H_2(6)".into())
}

fn c8_family_and_doubling() -> Outcome {
    for m in family_params(2, 1, 0).unwrap().take_while(|m| m.p <= 50) {
        let s = m.spec(2);
        let b = s.base_points();
        ensure(b == 4 * m.p - 2 && b % 4 != 0, || {
            format!("p={}: {b} base points", m.p)
        })?;
        ensure(
            classify(&s).canonical == DiffeoType::FiberSum { h: 2, z: 1, hyp: 0 },
            || format!("p={}: {}", m.p, classify(&s).canonical),
        )?;
    }
    for g in 0..30u64 {
        for b in 1..30u64 {
            ensure(
                degree_double(g, b).unwrap() == (2 * g + b - 1, 4 * b),
                || format!("({g},{b})"),
            )?;
        }
    }
    let mut gb = (2, 4);
    let mut orbit = Vec::new();
    for _ in 0..3 {
        gb = degree_double(gb.0, gb.1).unwrap();
        orbit.push(gb);
    }
    ensure(orbit == [(7, 16), (29, 64), (121, 256)], || {
        format!("{orbit:?}")
    })?;
    Ok("4p−2 ≢ 0 mod 4 for p = 2..50; (2,4) ↦ (7,16) ↦ (29,64) ↦ (121,256)".into())
}

fn c9_rokhlin() -> Outcome {
    let mut spin = 0;
    for s in grid(12) {
        if s.case() == SpecCase::LastExact {
            continue;
        }
        let a = rokhlin_audit(&s).unwrap();
        ensure(a.ok, || format!("{s}: spin with σ = {}", a.sigma))?;
        spin += a.spin as usize;
    }
    Ok(format!("{spin} spin pencils, all σ ≡ 0 mod 16"))
}

fn c10_cover() -> Outcome {
    let specs = grid(6);
    let (mut with_r, mut product) = (0, 0);
    for s in &specs {
        let replay = run_proof_script(s);
        if let Some(e) = replay.failure {
            return Err(format!("{s}: {e}"));
        }
        match s.case() {
            SpecCase::LastWithRemainder => with_r += 1,
            SpecCase::LastExact => product += 1,
            SpecCase::Generic => {}
        }
    }
    ensure(with_r > 0 && product > 0, || {
        "special branches not exercised".into()
    })?;
    Ok(format!(
        "{} replays, including {with_r} with i = 2p−1, r ≠ 0 and {product} with i = 2p−1, r = 0",
        specs.len()
    ))
}

fn word(n: usize, len: usize) -> impl Strategy<Value = BraidWord> {
    let g = n as i32 - 1;
    prop::collection::vec(
        (1..=g).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]),
        0..=len,
    )
    .prop_map(move |ls| BraidWord::new(n, ls).unwrap())
}

fn c11_properties() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    let factored = (3usize..=6).prop_flat_map(|n| {
        (
            prop::collection::vec(word(n, 5), 2..=5),
            prop::collection::vec((0usize..8, any::<bool>()), 1..=6),
        )
            .prop_map(move |(fs, mv)| (FactoredBraid::new(n, fs).unwrap(), mv))
    });
    runner
        .run(&factored, |(f, moves)| {
            let whole = f.product();
            let mut cur = f;
            for (pos, right) in moves {
                let pos = 1 + pos % (cur.len() - 1);
                let dir = if right {
                    HurwitzDirection::Right
                } else {
                    HurwitzDirection::Left
                };
                cur = cur.hurwitz_move(pos, dir).unwrap();
            }
            prop_assert!(cur.product().equals(&whole).unwrap());
            Ok(())
        })
        .map_err(|e| format!("Hurwitz invariance: {e}"))?;

    let mut runner = TestRunner::new(Config {
        cases: 300,
        failure_persistence: None,
        ..Config::default()
    });
    let words = (2usize..=7).prop_flat_map(|n| word(n, 25));
    runner
        .run(&words, |w| {
            let nf = w.normal_form();
            prop_assert_eq!(nf.to_word().normal_form(), nf.clone());
            let d2 = full_twist(w.strands());
            prop_assert!(w
                .compose(&d2)
                .unwrap()
                .equals(&d2.compose(&w).unwrap())
                .unwrap());
            Ok(())
        })
        .map_err(|e| format!("idempotence/centrality: {e}"))?;

    let mut relators = 0;
    for h in 1..=3 {
        for kind in [
            RelationKind::OddChain,
            RelationKind::Hyperelliptic,
            RelationKind::EvenChain,
            RelationKind::HyperellipticSplit(1),
            RelationKind::Lantern,
        ] {
            let f = build_relation(kind, h).unwrap();
            ensure(sp_image(&f).unwrap().is_identity(), || {
                format!("{kind} h={h}")
            })?;
            relators += 1;
        }
        for n in 1..=4 {
            let (l, r) = split_identity_sides(h, n).unwrap();
            ensure(sp_image(&l).unwrap() == sp_image(&r).unwrap(), || {
                format!("split identity h={h} n={n}")
            })?;
        }
    }
    Ok(format!(
        "1000 Hurwitz trials, 300 idempotence/centrality trials, {relators} relators trivial on H_1, split identity h ≤ 3, n ≤ 4"
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("block-pass relation equals Δ²", c1_block_pass_relation),
        ("capped pencil word projects to Δ²", c2_pencil_projection),
        (
            "reversing and block-twist identities",
            c3_reversing_and_block_twist,
        ),
        ("Euler characteristic from twist count", c4_euler),
        (
            "classification invariants match closed forms",
            c5_classification,
        ),
        ("signature engines", c6_signature_engines),
        ("genus 17 example", c7_numbers),
        (
            "base points along the Z_2(1) family and degree doubling",
            c8_family_and_doubling,
        ),
        ("Rokhlin audit", c9_rokhlin),
        ("branched-cover replay", c10_cover),
        ("property suites", c11_properties),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
