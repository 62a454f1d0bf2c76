mod common;

use common::ACCEPTANCE_FAMILY;
use modgraph::harness::{
    build_instances, list_checks, replay, run_check, run_on_instances, run_suite, Fact, Instance,
    Mode, SuiteOptions, Verdict,
};
use modgraph::{parse_descriptor, Error, Extended, GraphKind, SizeGuard};

fn instance(text: &str) -> Instance {
    let (_, m) = parse_descriptor(text, None).unwrap();
    Instance::new(&m, SizeGuard::default()).unwrap()
}

#[test]
fn registry_is_stable() {
    let ids: Vec<&str> = list_checks().iter().map(|c| c.id).collect();
    let expected: Vec<String> = (1..=15)
        .map(|i| format!("C{i}"))
        .chain((1..=15).map(|i| format!("D{i}")))
        .collect();
    assert_eq!(ids, expected);
    let names: std::collections::BTreeSet<&str> = list_checks().iter().map(|c| c.name).collect();
    assert_eq!(names.len(), 30);
}

#[test]
fn documented_single_instance_outcomes() {
    let z6 = instance("Z6");
    assert_eq!(run_check("C4", &z6).unwrap().verdict, Verdict::Pass);

    let z12 = instance("Z12");
    assert_eq!(run_check("C10", &z12).unwrap().verdict, Verdict::Pass);

    let z16 = instance("Z16");
    let c6 = run_check("C6", &z16).unwrap();
    assert!(c6.is_finding());
    let d6 = run_check("D6", &z16).unwrap();
    assert!(d6.is_finding());
    assert!(d6.witness.unwrap().facts.contains(&Fact::Edge {
        graph: GraphKind::Pss,
        a: "4M".into(),
        b: "8M".into(),
        present: false,
    }));

    assert_eq!(
        run_check("Q1", &z6).unwrap_err(),
        Error::UnknownCheck("Q1".into())
    );
}

#[test]
fn every_failure_replays_against_raw_definitions() {
    let instances = build_instances(ACCEPTANCE_FAMILY, SizeGuard::default()).unwrap();
    let report = run_on_instances(
        ACCEPTANCE_FAMILY,
        "all",
        &instances,
        SuiteOptions::default(),
    )
    .unwrap();
    let mut replayed = 0;
    for r in report.results.iter().filter(|r| r.verdict == Verdict::Fail) {
        let witness = r.witness.as_ref().expect("failures carry witnesses");
        assert!(!witness.facts.is_empty());
        let inst = instances
            .iter()
            .find(|i| i.descriptor() == r.instance)
            .unwrap();
        replay(witness, inst).unwrap_or_else(|e| panic!("{} on {}: {e}", r.check, r.instance));
        replayed += 1;
    }
    assert!(replayed > 0);
}

#[test]
fn replay_rejects_false_facts() {
    let z12 = instance("Z12");
    let bogus = modgraph::harness::Witness::new(
        "2M and 3M are not adjacent",
        vec![Fact::Edge {
            graph: GraphKind::Ssi,
            a: "2M".into(),
            b: "3M".into(),
            present: false,
        }],
    );
    assert!(replay(&bogus, &z12).is_err());
    let unknown = modgraph::harness::Witness::new(
        "no such vertex",
        vec![Fact::Girth {
            graph: GraphKind::Ssi,
            value: Extended::Finite(4),
        }],
    );
    assert!(replay(&unknown, &z12).is_err());
}

#[test]
fn diameter_and_girth_bounds_over_the_family() {
    let instances = build_instances(ACCEPTANCE_FAMILY, SizeGuard::default()).unwrap();
    for inst in &instances {
        for (kind, special) in [
            (GraphKind::Ssi, inst.lattice.seconds().len()),
            (GraphKind::Pss, inst.lattice.primes().len()),
        ] {
            let m = &inst.graph(kind).metrics;
            if m.is_connected {
                assert!(
                    m.diameter <= Extended::Finite(2),
                    "{kind} {}",
                    inst.descriptor()
                );
            }
            if let Extended::Finite(g) = m.girth {
                assert!(special >= g / 2);
            }
        }
    }
}

#[test]
fn extremal_submodules_minimally_dominate() {
    let instances = build_instances(ACCEPTANCE_FAMILY, SizeGuard::default()).unwrap();
    for inst in &instances {
        for (kind, extremals) in [
            (GraphKind::Ssi, inst.minimals()),
            (GraphKind::Pss, inst.maximals()),
        ] {
            let g = inst.graph(kind);
            if g.graph.vertex_count() == 0 {
                continue;
            }
            let positions: Vec<usize> = extremals.iter().map(|&i| g.position(i).unwrap()).collect();
            let adj = &g.graph.adjacency;
            assert!(common::dominates(adj, &positions));
            for skip in 0..positions.len() {
                let mut fewer = positions.clone();
                fewer.remove(skip);
                assert!(fewer.is_empty() || !common::dominates(adj, &fewer));
            }
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let options = SuiteOptions::default();
    let a = run_suite("cyclic:2..40;product:ab<=24", "all", options).unwrap();
    let b = run_suite("cyclic:2..40;product:ab<=24", "all", options).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.results.iter().all(|r| r.millis == 0));
}

#[test]
fn strict_run_on_prime_powers_and_squarefree_moduli() {
    let report = run_suite(
        "cyclic:2..11;zmod:Z13;zmod:Z15;zmod:Z16;zmod:Z27;zmod:Z30",
        "strict",
        SuiteOptions::default(),
    )
    .unwrap();
    assert!(report.passed(), "{}", report.to_json());
    assert!(report.results.iter().all(|r| r.mode == Mode::Strict));
}

#[test]
fn family_errors_propagate() {
    assert!(matches!(
        run_suite("cyclic:9000..9000", "all", SuiteOptions::default()),
        Err(Error::OrderGuard { .. })
    ));
    assert!(matches!(
        run_suite("cyclic:2..3", "C99", SuiteOptions::default()),
        Err(Error::UnknownCheck(_))
    ));
}
