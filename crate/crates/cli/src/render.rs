use diffgraph::search::{K3Uniqueness, PruneCounts};
use diffgraph::verify::{CorollaryDiagnostics, EdgeClassification, EdgeType, MemberForms, Violation};
use diffgraph::{Graph, SearchReport, VerificationReport};
use serde_json::{json, Value};

pub fn vertex(g: &Graph, v: usize) -> String {
    g.name(v).map_or_else(|| v.to_string(), str::to_string)
}

pub fn violation(g: &Graph, v: &Violation) -> Value {
    json!({
        "kind": v.kind.as_str(),
        "u": vertex(g, v.u),
        "v": vertex(g, v.v),
        "difference": v.difference,
    })
}

pub fn verification(g: &Graph, report: &VerificationReport) -> Value {
    json!({
        "valid": report.valid,
        "signature": report.signature.as_ref().map(|s| s.values().to_vec()),
        "violations": report.violations.iter().map(|v| violation(g, v)).collect::<Vec<_>>(),
    })
}

pub fn edge_classes(g: &Graph, classes: &EdgeClassification) -> Value {
    let edges: Vec<Value> = classes
        .edges
        .iter()
        .map(|e| match e.edge_type {
            EdgeType::FirstType => json!({"u": vertex(g, e.u), "v": vertex(g, e.v), "type": "first"}),
            EdgeType::SecondType { r, t } => {
                json!({"u": vertex(g, e.u), "v": vertex(g, e.v), "type": "second", "r": r, "t": t})
            }
        })
        .collect();
    json!({
        "first_type": classes.first_type_count(),
        "second_type": classes.second_type_count(),
        "edges": edges,
    })
}

fn forms(f: &MemberForms) -> Value {
    json!({"double": f.double, "half": f.half, "sum": f.sum, "difference": f.difference})
}

pub fn corollary(d: &CorollaryDiagnostics) -> Value {
    json!({
        "holds": d.holds(),
        "min_label": d.min_label,
        "min_label_forms": forms(&d.min_label_forms),
        "min_form_ok": d.min_form_ok(),
        "max_label": d.max_label,
        "max_label_forms": forms(&d.max_label_forms),
        "max_form_ok": d.max_form_ok(),
        "max_vertex_degree": d.max_vertex_degree,
        "max_has_half_neighbor": d.max_has_half_neighbor,
        "parity_check": d.parity_check,
        "membership_ok": d.membership_ok(),
    })
}

fn pruned(p: &PruneCounts) -> Value {
    json!({
        "non_primitive": p.non_primitive,
        "corollary_min_max": p.corollary_min_max,
        "edge_count": p.edge_count,
        "degree_sequence": p.degree_sequence,
        "total": p.total(),
    })
}

pub fn search(g: &Graph, report: &SearchReport) -> Value {
    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|w| {
            let labels: serde_json::Map<String, Value> =
                (0..g.order()).map(|v| (vertex(g, v), json!(w.labels[v]))).collect();
            json!({"signature": w.signature.values(), "labels": labels})
        })
        .collect();
    json!({
        "order": report.order,
        "max_label": report.max_label,
        "space_size": report.space_size.to_string(),
        "exhausted": report.exhausted,
        "candidates_examined": report.candidates_examined,
        "pruned": pruned(&report.pruned),
        "witness_count": witnesses.len(),
        "witnesses": witnesses,
    })
}

pub fn k3(max_label: u64, result: &K3Uniqueness) -> Value {
    let values = |sigs: &[diffgraph::Signature]| sigs.iter().map(|s| s.values().to_vec()).collect::<Vec<_>>();
    json!({
        "max_label": max_label,
        "holds": result.holds,
        "candidates_examined": result.candidates_examined,
        "witnesses": values(&result.witnesses),
        "offenders": values(&result.offenders),
    })
}
