use ringlab_core::dsl::{parse_catalog, Config};
use ringlab_core::predicates::Predicate;
use ringlab_core::verifier::{default_catalog, registry, theorem_ids, Status, TheoremReport, Verifier};

fn statuses(report: &TheoremReport) -> Vec<(String, Status)> {
    report.results.iter().map(|r| (r.ring.clone(), r.status)).collect()
}

fn status_of(report: &TheoremReport, ring: &str) -> Status {
    report
        .results
        .iter()
        .find(|r| r.ring == ring)
        .unwrap_or_else(|| panic!("{ring} missing from {}", report.theorem))
        .status
}

#[test]
fn full_run_has_no_failures() {
    let v = Verifier::new(Config::default());
    let reports = v.run_all(&default_catalog());
    assert_eq!(reports.len(), registry().len());
    let mut failures = Vec::new();
    for r in &reports {
        eprintln!(
            "{:<20} {:<5} pass {:>3} skip {:>3} fail {:>2} {:>6}ms",
            r.theorem,
            r.aggregate.as_str(),
            r.count(Status::Pass),
            r.count(Status::Skip),
            r.count(Status::Fail),
            r.ms.unwrap_or(0)
        );
        assert_eq!(r.aggregate == Status::Fail, r.count(Status::Fail) > 0);
        for res in &r.results {
            if res.status == Status::Fail {
                failures.push(format!("{} on {}: {:?} {:?}", r.theorem, res.ring, res.note, res.witness));
            }
            if res.status == Status::Skip {
                assert!(res.note.is_some(), "skip without reason: {} on {}", r.theorem, res.ring);
            }
            if let Some(w) = &res.witness {
                if let Err(e) = v.revalidate(w) {
                    failures.push(format!("{} on {}: witness does not revalidate: {e}", r.theorem, res.ring));
                }
            }
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn registry_ids_are_stable() {
    let ids = theorem_ids();
    for id in [
        "prop-3.1",
        "prop-3.3",
        "prop-3.5-iii",
        "prop-3.8",
        "thm-3.13",
        "lemma-sum-two-unit",
        "prop-corfive-v",
        "cor-4.10",
        "thm-T2",
        "thm-exp2",
        "implication-lattice",
    ] {
        assert!(ids.contains(&id), "{id}");
    }
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
}

#[test]
fn anchors_are_verbatim_quotes() {
    let source = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../paper.md"))
        .expect("source text is present in the workspace root");
    let squash = |s: &str| s.split_whitespace().collect::<Vec<_>>().join(" ");
    let text = squash(&source);
    for check in registry() {
        assert!(!check.anchor.is_empty(), "{}", check.id);
        assert!(text.contains(&squash(check.anchor)), "{}: {:?}", check.id, check.anchor);
    }
}

#[test]
fn named_theorem_examples() {
    let v = Verifier::new(Config::default());
    let catalog = default_catalog();

    let r = v.run_theorem("prop-3.8", &catalog).unwrap();
    assert_eq!(r.aggregate, Status::Pass);
    for ring in ["M(2, Z2)", "M(2, Z3)"] {
        assert_eq!(status_of(&r, ring), Status::Pass);
        let res = r.results.iter().find(|x| x.ring == ring).unwrap();
        let w = res.witness.as_ref().expect("failing unit is stored");
        assert_eq!(w.predicate, Some(Predicate::TwoUNJ));
        v.revalidate(w).unwrap();
    }

    let r = v.run_theorem("prop-3.3", &catalog).unwrap();
    assert_eq!(r.aggregate, Status::Pass);
    for ring in ["Z2", "Z3", "GF(4)", "GF(5)", "GF(7)", "GF(8)", "GF(9)"] {
        assert_eq!(status_of(&r, ring), Status::Pass, "{ring}");
    }

    let r = v.run_theorem("thm-T2", &catalog).unwrap();
    assert_eq!(r.aggregate, Status::Pass);
    for ring in ["GroupRing(Z2, C2)", "GroupRing(Z2, C4)", "GroupRing(Z2, C2xC2)", "GroupRing(Z4, C2)"] {
        assert_eq!(status_of(&r, ring), Status::Pass, "{ring}");
    }

    let lattice = v.implication_lattice(&catalog);
    assert_eq!(lattice.theorem, "implication-lattice");
    assert_eq!(lattice.count(Status::Fail), 0);
    for ring in ["Z3", "Z4", "Z6"] {
        assert_eq!(status_of(&lattice, ring), Status::Pass);
    }

    assert!(v.run_theorem("no-such-id", &catalog).is_err());
}

#[test]
fn inapplicable_checks_skip_with_reasons() {
    let v = Verifier::new(Config::default());
    let catalog = parse_catalog("Z2\nZ4\n").unwrap();
    let r = v.run_theorem("thm-2-group-ring", &catalog).unwrap();
    for res in r.results.iter().filter(|x| x.ring == "Z2" || x.ring == "Z4") {
        assert_eq!(res.status, Status::Skip);
        assert!(res.note.as_deref().is_some_and(|n| !n.is_empty()));
    }
}

#[test]
fn over_budget_entries_become_skips() {
    let v = Verifier::new(Config::default());
    let catalog = parse_catalog("M(3, Z3)\nZ3\n").unwrap();
    let r = v.run_theorem("prop-3.8", &catalog).unwrap();
    let res = &r.results[0];
    assert_eq!(res.ring, "M(3, Z3)");
    assert_eq!(res.status, Status::Skip);
    assert!(res.note.as_deref().unwrap().contains("budget"));
}

#[test]
fn reports_are_reproducible_without_timing() {
    let catalog = parse_catalog("Z2\nZ3\nZ4\nZ6\nM(2, Z2)\nT(2, Z2)\nGroupRing(Z2, C2)\n").unwrap();
    let a = Verifier::new(Config::default()).without_timing();
    let b = Verifier::new(Config::default()).without_timing();
    for id in ["prop-3.5-iii", "thm-3.13", "lemma-5.1", "cor-3.26-ii"] {
        let ra = a.run_theorem(id, &catalog).unwrap();
        let rb = b.run_theorem(id, &catalog).unwrap();
        assert_eq!(ra.ms, None);
        assert_eq!(statuses(&ra), statuses(&rb));
        assert_eq!(
            serde_json::to_string(&ra).unwrap(),
            serde_json::to_string(&rb).unwrap()
        );
    }
}

#[test]
fn report_json_shape() {
    let v = Verifier::new(Config::default());
    let catalog = parse_catalog("M(2, Z2)\n").unwrap();
    let r = v.run_theorem("prop-3.8", &catalog).unwrap();
    let json: serde_json::Value = serde_json::to_value(&r).unwrap();
    for key in ["theorem", "anchor", "results", "aggregate", "ms"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    let first = &json["results"][0];
    assert_eq!(first["ring"], "M(2, Z2)");
    assert_eq!(first["status"], "pass");
    assert!(first["witness"]["elements"].is_array());
}
