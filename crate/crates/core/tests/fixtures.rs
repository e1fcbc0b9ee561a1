mod common;

use std::collections::BTreeSet;

use common::{drawn_labelings, load, load_labeled};
use diffgraph::verify::{classify_edges, corollary_diagnostics};
use diffgraph::{verify, LabeledGraph};

fn label_set(lg: &LabeledGraph) -> BTreeSet<u64> {
    lg.labels().iter().copied().collect()
}

#[test]
fn drawn_labelings_verify() {
    for (file, _) in drawn_labelings() {
        let report = verify(&load_labeled(file));
        assert!(report.valid, "{file}: {:?}", report.violations);
    }
}

#[test]
fn constructors_reproduce_drawn_labelings() {
    for (file, built) in drawn_labelings() {
        let drawn = load_labeled(file);
        assert_eq!(label_set(&drawn), label_set(&built), "{file}");
        assert_eq!(drawn.labeled_edges(), built.labeled_edges(), "{file}");
    }
}

#[test]
fn drawn_labelings_satisfy_diagnostics() {
    for (file, _) in drawn_labelings() {
        let lg = load_labeled(file);
        let classes = classify_edges(&lg).unwrap();
        assert_eq!(classes.edges.len(), lg.graph().edge_count(), "{file}");
        assert!(corollary_diagnostics(&lg).unwrap().holds(), "{file}");
    }
}

#[test]
fn invalid_triangle_is_rejected() {
    let report = verify(&load_labeled("k3_invalid.json"));
    assert!(!report.valid);
    assert_eq!(report.violations.len(), 1);
    assert_eq!(report.violations[0].difference, 3);
}

#[test]
fn k24_fixture_is_unlabeled() {
    let (g, labeled) = load("k2_4.json");
    assert!(labeled.is_none());
    assert_eq!(g.order(), 6);
    assert_eq!(g.edge_count(), 8);
    assert_eq!(g.names().unwrap()[0], "a1");
}
