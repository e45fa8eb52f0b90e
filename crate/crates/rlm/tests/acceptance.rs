//! End-to-end acceptance gate: one test per shipped guarantee, each ending
//! in a single pass/fail line from the harness.

use std::process::Command;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rl_core::constructions::{
    deinterleave, indicator_census, interleave, k_set, pairing, schroder_bernstein,
    unpairing, Word,
};
use rl_core::logic::{check_laws, refute_classical_laws};
use rl_core::orders::{
    build_order, compare, grid_orders, well_order_check, zigzag_order, Comparison,
    GridKind, OrderKind, WellOrderMode,
};
use rl_core::pluralities::{
    check_group, is_filter, make_family, taxonomy, verify_upper_edge_equivalence,
    FamilyParams, Plurality,
};
use rl_core::relation::{check_relation_laws, factorize, random_equivalence, random_relation};
use rl_core::sets::check_set_laws;
use rl_core::{PointId, PointSet, Relation, Universe};

use rlm::exec::run_script;
use rlm::parser::parse;

#[test]
fn corpus_reproduces_worked_examples() {
    let script = parse(rlm::EXAMPLES).expect("bundled script parses");
    let reports = run_script(&script, 1).expect("bundled script runs");
    assert!(reports.len() >= 20, "only {} checks", reports.len());
    for r in &reports {
        assert!(r.ok, "{} {}: {}", r.command, r.target, r.summary);
    }
}

#[test]
fn law_battery_and_classical_refutations() {
    for size in [3, 5, 8, 12] {
        let u = Universe::range(1, size).unwrap();
        let report = check_laws(&u, 2000, 42);
        assert!(
            report.passed(),
            "size {size}: {:?}",
            report.failures().iter().map(|c| &c.law).collect::<Vec<_>>()
        );
        for check in &report.checks {
            assert!(check.trials >= 2000, "{}: {} trials", check.law, check.trials);
        }
    }
    let u = Universe::range(1, 12).unwrap();
    let refutation = refute_classical_laws(&u, 42);
    assert!(
        refutation.passed(),
        "unrefuted: {:?}",
        refutation.failures().iter().map(|c| &c.law).collect::<Vec<_>>()
    );
    assert_eq!(refutation.checks.len(), 5);
}

#[test]
fn set_and_relation_algebra_identities() {
    let u = Universe::range(1, 12).unwrap();
    assert!(check_set_laws(&u, 1000, 7).passed());
    assert!(check_relation_laws(&u, 1000, 7).passed());

    // The image of an intersection can fall strictly inside the
    // intersection of the images: two points sharing one target.
    let v = Universe::new(["a", "b", "c"]).unwrap();
    let r = Relation::from_pairs(&v, [(PointId(0), PointId(2)), (PointId(1), PointId(2))]);
    let x = PointSet::from_points(&v, [PointId(0)]);
    let y = PointSet::from_points(&v, [PointId(1)]);
    let small = r.image_of_set(&x.intersection(&y).unwrap());
    let big = r
        .image_of_set(&x)
        .intersection(&r.image_of_set(&y))
        .unwrap();
    assert!(small.strict_subset_of(&big), "inclusion was not strict");
}

#[test]
fn equivalence_partitions_and_minimum_uniqueness() {
    let u = Universe::range(1, 10).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..500 {
        let e = random_equivalence(&u, &mut rng);
        let partition = factorize(&e).expect("equivalence factorizes");
        let mut seen = vec![false; u.size()];
        for class in &partition.classes {
            assert!(!class.is_empty());
            for p in class.iter() {
                assert!(!seen[p.0], "classes overlap at {}", u.label(p));
                seen[p.0] = true;
            }
        }
        assert!(seen.iter().all(|&s| s), "classes do not cover the universe");
    }

    // Random preorders via reflexive-transitive closure; after quotienting,
    // at most one point can see the whole universe above it.
    for trial in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(trial);
        let seedrel = random_relation(&u, &mut rng, 0.12);
        let mut s = seedrel.union(&Relation::identity(&u)).unwrap();
        loop {
            let next = s.compose_after(&s).unwrap().union(&s).unwrap();
            if next == s {
                break;
            }
            s = next;
        }
        let o = build_order(&u, &s).expect("closure is transitive-reflexive");
        let q = o.universe();
        let full: Vec<PointId> = q
            .points()
            .filter(|&p| o.relation().image(p).len() == q.size())
            .collect();
        assert!(full.len() <= 1, "two distinct minima: {full:?}");
        assert_eq!(o.minimal.is_some(), full.len() == 1);
    }
}

#[test]
fn order_structures_and_well_order_exhaustion() {
    let zz = zigzag_order(8);
    assert_eq!(zz.kind, OrderKind::Linear);
    assert_eq!(
        zz.chain_labels().unwrap(),
        ["0", "2", "4", "6", "7", "5", "3", "1"]
    );
    let wo = well_order_check(&zz, WellOrderMode::Exhaustive);
    assert!(wo.verdict && wo.uniqueness_ok);
    assert_eq!(wo.subsets_checked, 255);

    let u = Universe::new(["x1", "x2", "x3", "x4"]).unwrap();
    let pairs = [
        (0, 0),
        (0, 2),
        (0, 3),
        (1, 1),
        (1, 2),
        (1, 3),
        (2, 2),
        (3, 3),
    ];
    let s = Relation::from_pairs(&u, pairs.map(|(a, b)| (PointId(a), PointId(b))));
    let o = build_order(&u, &s).unwrap();
    assert_eq!(o.kind, OrderKind::Partial);
    assert!(o.minimal.is_none());
    assert_eq!(o.maximals.labels(), ["x3", "x4"]);
    assert_eq!(o.roots.labels(), ["x1", "x2"]);
    let x1 = o.universe().lookup("x1").unwrap();
    let x2 = o.universe().lookup("x2").unwrap();
    assert_eq!(compare(&o, x1, x2), Comparison::Incomparable);

    let pg = grid_orders(3, GridKind::Product);
    assert_eq!(pg.kind, OrderKind::Normal);

    let lg = grid_orders(3, GridKind::Lexicographic);
    assert_eq!(lg.kind, OrderKind::Linear);
    let wo = well_order_check(&lg, WellOrderMode::Exhaustive);
    assert_eq!(wo.subsets_checked, 511);
    assert!(wo.verdict, "witness: {:?}", wo.witness);
    assert!(wo.uniqueness_ok);
}

#[test]
fn plurality_taxonomy_filters_and_upper_edges() {
    let u = Universe::range(0, 9).unwrap();
    let balls = make_family(
        &u,
        FamilyParams::MetricBalls {
            radii: vec![1, 2, 4, 8, 16],
        },
    )
    .unwrap();
    let f = is_filter(&balls);
    assert_eq!(f.code.code_string(), "R_344");
    assert!(f.minimal && !f.verdict);

    let open = make_family(&u, FamilyParams::MetricBallsSymbolic).unwrap();
    let f = is_filter(&open);
    assert!(f.verdict && !f.minimal);

    let t = Universe::range(0, 2).unwrap();
    let s3 = make_family(
        &t,
        FamilyParams::TransformationGroup {
            generators: vec![vec![1, 2, 0], vec![1, 0, 2]],
        },
    )
    .unwrap();
    assert_eq!(s3.len(), 6);
    assert!(check_group(&s3).is_group);
    assert!(is_filter(&s3).verdict);

    // Families {e, complete} with e a random equivalence dominate R_112;
    // their upper edge must come out an equivalence.
    let v = Universe::range(1, 8).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let e = random_equivalence(&v, &mut rng);
        let p = Plurality::from_members(
            &v,
            vec![
                ("e".to_string(), e),
                ("all".to_string(), Relation::complete(&v)),
            ],
        )
        .unwrap();
        assert!(taxonomy(&p).dominates(1, 1, 2));
        let edge = verify_upper_edge_equivalence(&p);
        assert!(edge.code_dominates_111 && edge.consistent);
    }
}

#[test]
fn constructive_toolkit_round_trips() {
    // Matched random injections between equal halves of a universe.
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for trial in 0..1000 {
        let k = if trial == 0 { 100 } else { rng.gen_range(1..=50) };
        let u = Universe::range(0, (2 * k - 1) as i64).unwrap();
        let xs = PointSet::from_points(&u, (0..k).map(PointId));
        let ys = PointSet::from_points(&u, (k..2 * k).map(PointId));
        let mut targets: Vec<usize> = (k..2 * k).collect();
        targets.shuffle(&mut rng);
        let p = Relation::from_pairs(&u, (0..k).map(|i| (PointId(i), PointId(targets[i]))));
        let mut back: Vec<usize> = (0..k).collect();
        back.shuffle(&mut rng);
        let q = Relation::from_pairs(
            &u,
            (0..k).map(|i| (PointId(k + i), PointId(back[i]))),
        );
        let out = schroder_bernstein(&xs, &ys, &p, &q).expect("injections pair off");
        assert!(out.fixpoint_ok && out.complement_ok);
    }

    // Anti-diagonal enumeration: listed head and exhaustive round trip.
    let head: Vec<(u64, u64)> = (1..=6).map(unpairing).collect();
    assert_eq!(head, [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)]);
    for n in 1..=100 {
        for k in 1..=100 {
            assert_eq!(unpairing(pairing(n, k)), (n, k));
        }
    }

    // Interleaving preserves both digit streams.
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..500 {
        let base = *[2u32, 3, 10].choose(&mut rng).unwrap();
        let word = |rng: &mut ChaCha8Rng| {
            let prefix: Vec<u32> = (0..rng.gen_range(0..4))
                .map(|_| rng.gen_range(0..base))
                .collect();
            let period: Vec<u32> = (0..rng.gen_range(1..4))
                .map(|_| rng.gen_range(0..base))
                .collect();
            Word::new(base, prefix, period).unwrap()
        };
        let a = word(&mut rng);
        let b = word(&mut rng);
        let joined = interleave(&a, &b).unwrap();
        let split = deinterleave(&joined);
        assert_eq!(split.first.value(), a.value());
        assert_eq!(split.second.value(), b.value());
    }
    let alive = Word::new(2, vec![1, 1], vec![0, 1]).unwrap();
    assert!(alive.is_alive());
    assert!(deinterleave(&alive).not_alive_splittable);

    // The adversarial diagonal over the engineered base-3 table ends in
    // zeros: the escape candidate is a dead word.
    let rows: Vec<Word> = (0..4)
        .map(|i| {
            let mut prefix = vec![0; i];
            prefix.push(if i == 0 { 0 } else { 2 });
            Word::new(3, prefix, vec![1]).unwrap()
        })
        .collect();
    let d = rl_core::constructions::diagonal(
        &rows,
        3,
        rl_core::constructions::DiagonalRule::Adversarial,
    )
    .unwrap();
    assert!(d.differs_at_all && d.dead_hazard);

    // Doubled {0,1}-words land in the middle-thirds set.
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..200 {
        let prefix: Vec<u32> = (0..rng.gen_range(0..6)).map(|_| rng.gen_range(0..2)).collect();
        let period: Vec<u32> = (0..rng.gen_range(1..5)).map(|_| rng.gen_range(0..2)).collect();
        let w = Word::new(3, prefix, period).unwrap();
        let v = k_set(&w, 2, 3).unwrap();
        assert!(
            rl_core::constructions::cantor_membership(&v, 10),
            "value {v} escaped the interval oracle"
        );
    }

    // Every indexed family of indicator functions is escaped.
    for n in 1..=10 {
        let u: Arc<Universe> = Universe::range(0, n - 1).unwrap();
        let e = PointSet::whole(&u);
        let census = indicator_census(&e, 4000, 31);
        assert!(census.injection_ok && census.all_escaped);
    }
}

#[test]
fn selftest_output_is_deterministic() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_rlm"))
            .args(["selftest", "--seed", "7"])
            .output()
            .expect("selftest runs")
    };
    let a = run();
    let b = run();
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout, "selftest output varies between runs");
}
