//! Difference-labeling predicate, edge typing and signature diagnostics.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// Adjacent, but the label difference is not in the signature.
    MissingEdge,
    /// Non-adjacent, but the label difference is in the signature.
    ExtraEdge,
}

impl ViolationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ViolationKind::MissingEdge => "missing-edge",
            ViolationKind::ExtraEdge => "extra-edge",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub kind: ViolationKind,
    pub u: usize,
    pub v: usize,
    pub difference: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    /// Image of the labeling; `None` only for the order-0 graph.
    pub signature: Option<Signature>,
}

fn label_set(lg: &LabeledGraph) -> HashSet<u64> {
    lg.labels().iter().copied().collect()
}

/// Checks every unordered vertex pair once and reports all violations.
pub fn verify(lg: &LabeledGraph) -> VerificationReport {
    let set = label_set(lg);
    let g = lg.graph();
    let mut violations = Vec::new();
    for u in 0..lg.order() {
        for v in u + 1..lg.order() {
            let difference = lg.label(u).abs_diff(lg.label(v));
            let member = set.contains(&difference);
            let adjacent = g.has_edge(u, v);
            if adjacent != member {
                let kind = if adjacent {
                    ViolationKind::MissingEdge
                } else {
                    ViolationKind::ExtraEdge
                };
                violations.push(Violation { kind, u, v, difference });
            }
        }
    }
    VerificationReport {
        valid: violations.is_empty(),
        violations,
        signature: lg.signature(),
    }
}

/// Short-circuiting form of [`verify`].
pub fn is_difference_labeling(lg: &LabeledGraph) -> bool {
    let set = label_set(lg);
    let g = lg.graph();
    (0..lg.order())
        .all(|u| (u + 1..lg.order()).all(|v| g.has_edge(u, v) == set.contains(&lg.label(u).abs_diff(lg.label(v)))))
}

fn require_valid(lg: &LabeledGraph, what: &str) -> Result<()> {
    if is_difference_labeling(lg) {
        Ok(())
    } else {
        Err(Error::PreconditionViolation(format!(
            "{what} needs a valid difference labeling"
        )))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeType {
    /// Endpoint labels `s` and `2s`.
    FirstType,
    /// Endpoint labels `r` and `r + t` where `t != r` is a member.
    SecondType { r: u64, t: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifiedEdge {
    pub u: usize,
    pub v: usize,
    pub edge_type: EdgeType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    pub edges: Vec<ClassifiedEdge>,
}

impl EdgeClassification {
    pub fn first_type_count(&self) -> usize {
        self.edges.iter().filter(|e| e.edge_type == EdgeType::FirstType).count()
    }

    pub fn second_type_count(&self) -> usize {
        self.edges.len() - self.first_type_count()
    }
}

pub fn classify_edges(lg: &LabeledGraph) -> Result<EdgeClassification> {
    require_valid(lg, "edge classification")?;
    let edges = lg
        .graph()
        .edges()
        .map(|(u, v)| {
            let (small, large) = {
                let (a, b) = (lg.label(u), lg.label(v));
                (a.min(b), a.max(b))
            };
            let edge_type = if large == small * 2 {
                EdgeType::FirstType
            } else {
                EdgeType::SecondType {
                    r: small,
                    t: large - small,
                }
            };
            ClassifiedEdge { u, v, edge_type }
        })
        .collect();
    Ok(EdgeClassification { edges })
}

/// Ways a member `s` can be written from members of the signature.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct MemberForms {
    /// `s = 2a`
    pub double: bool,
    /// `s = a / 2`
    pub half: bool,
    /// `s = a + b`, `a != b`
    pub sum: bool,
    /// `s = a - b`, `b != s`
    pub difference: bool,
}

impl MemberForms {
    pub fn any(&self) -> bool {
        self.double || self.half || self.sum || self.difference
    }

    /// Forms admissible for the minimum label.
    pub fn min_admissible(&self) -> bool {
        self.half || self.difference
    }

    /// Forms admissible for the maximum label.
    pub fn max_admissible(&self) -> bool {
        self.double || self.sum
    }
}

impl fmt::Display for MemberForms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [
            (self.double, "2a"),
            (self.half, "a/2"),
            (self.sum, "a+b"),
            (self.difference, "|a-b|"),
        ]
        .iter()
        .filter(|(on, _)| *on)
        .map(|(_, name)| *name)
        .collect();
        if names.is_empty() {
            write!(f, "none")
        } else {
            write!(f, "{}", names.join(" "))
        }
    }
}

/// Forms of `s` over the members of `sig`.
pub fn member_forms(sig: &Signature, s: u64) -> MemberForms {
    forms_in_sorted(sig.values(), s)
}

/// [`member_forms`] over a strictly increasing slice.
pub(crate) fn forms_in_sorted(values: &[u64], s: u64) -> MemberForms {
    let contains = |x: u64| values.binary_search(&x).is_ok();
    let double = s.is_multiple_of(2) && contains(s / 2);
    let half = s.checked_mul(2).is_some_and(contains);
    let sum = values
        .iter()
        .take_while(|&&a| a < s)
        .any(|&a| s - a != a && contains(s - a));
    let difference = values.iter().any(|&b| b != s && b.checked_add(s).is_some_and(contains));
    MemberForms {
        double,
        half,
        sum,
        difference,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryDiagnostics {
    pub min_label: u64,
    pub max_label: u64,
    pub min_label_forms: MemberForms,
    pub max_label_forms: MemberForms,
    /// Whether the min-label vertex has a neighbour (the min clause applies).
    pub min_clause_applies: bool,
    /// Whether the max-label vertex has a neighbour (the max clause applies).
    pub max_clause_applies: bool,
    pub max_vertex_degree: usize,
    pub max_has_half_neighbor: bool,
    /// Odd degree of the max-label vertex iff it neighbours a vertex labeled max/2.
    pub parity_check: bool,
    /// Per member, in increasing order.
    pub membership_forms: Vec<(u64, MemberForms)>,
    /// The graph has no isolated vertex, so every member must have some form.
    pub membership_clause_applies: bool,
}

impl CorollaryDiagnostics {
    pub fn min_form_ok(&self) -> bool {
        !self.min_clause_applies || self.min_label_forms.min_admissible()
    }

    pub fn max_form_ok(&self) -> bool {
        !self.max_clause_applies || self.max_label_forms.max_admissible()
    }

    pub fn membership_ok(&self) -> bool {
        !self.membership_clause_applies || self.membership_forms.iter().all(|(_, f)| f.any())
    }

    /// All applicable clauses hold.
    pub fn holds(&self) -> bool {
        self.min_form_ok() && self.max_form_ok() && self.parity_check && self.membership_ok()
    }
}

pub fn corollary_diagnostics(lg: &LabeledGraph) -> Result<CorollaryDiagnostics> {
    require_valid(lg, "corollary diagnostics")?;
    let sig = lg
        .signature()
        .ok_or_else(|| Error::PreconditionViolation("graph has no vertices".into()))?;
    let g = lg.graph();
    let (min_label, max_label) = (sig.min_value(), sig.max_value());
    let min_v = lg.vertex_with_label(min_label).expect("min is a label");
    let max_v = lg.vertex_with_label(max_label).expect("max is a label");
    let max_vertex_degree = g.degree(max_v);
    let max_has_half_neighbor = max_label % 2 == 0 && g.neighbors(max_v).any(|w| lg.label(w) == max_label / 2);
    let parity_check = (max_vertex_degree % 2 == 1) == max_has_half_neighbor;
    let membership_forms = sig.values().iter().map(|&s| (s, member_forms(&sig, s))).collect();
    Ok(CorollaryDiagnostics {
        min_label,
        max_label,
        min_label_forms: member_forms(&sig, min_label),
        max_label_forms: member_forms(&sig, max_label),
        min_clause_applies: g.degree(min_v) > 0,
        max_clause_applies: max_vertex_degree > 0,
        max_vertex_degree,
        max_has_half_neighbor,
        parity_check,
        membership_forms,
        membership_clause_applies: g.min_degree().is_some_and(|d| d > 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::induced_difference_graph;

    fn star_center_16() -> LabeledGraph {
        let mut labels = vec![16];
        labels.extend([1, 3, 5, 7, 9, 11, 13, 15]);
        LabeledGraph::from_parts(9, &(1..9).map(|i| (0, i)).collect::<Vec<_>>(), labels).unwrap()
    }

    #[test]
    fn star_fixture_is_valid() {
        let report = verify(&star_center_16());
        assert!(report.valid);
        assert!(report.violations.is_empty());
        assert_eq!(report.signature.unwrap().max_value(), 16);
    }

    #[test]
    fn triangle_with_one_two_four_misses_an_edge() {
        let lg = LabeledGraph::from_parts(3, &[(0, 1), (1, 2), (0, 2)], vec![1, 2, 4]).unwrap();
        let report = verify(&lg);
        assert!(!report.valid);
        assert_eq!(
            report.violations,
            vec![Violation {
                kind: ViolationKind::MissingEdge,
                u: 0,
                v: 2,
                difference: 3
            }]
        );
        assert!(!is_difference_labeling(&lg));
    }

    #[test]
    fn path_labeled_in_order_has_an_extra_edge() {
        let lg = LabeledGraph::from_parts(3, &[(0, 1), (1, 2)], vec![1, 2, 3]).unwrap();
        let report = verify(&lg);
        assert_eq!(
            report.violations,
            vec![Violation {
                kind: ViolationKind::ExtraEdge,
                u: 0,
                v: 2,
                difference: 2
            }]
        );
    }

    #[test]
    fn all_violations_are_reported() {
        // empty graph on {1,2,3}: every pair difference is a member
        let lg = LabeledGraph::from_parts(3, &[], vec![1, 2, 3]).unwrap();
        assert_eq!(verify(&lg).violations.len(), 3);
    }

    #[test]
    fn butterfly_edge_types() {
        let lg = induced_difference_graph(&Signature::new(vec![2, 3, 4, 6, 10]).unwrap());
        let classes = classify_edges(&lg).unwrap();
        let find = |a: u64, b: u64| {
            classes
                .edges
                .iter()
                .find(|e| {
                    let (x, y) = (lg.label(e.u), lg.label(e.v));
                    (x.min(y), x.max(y)) == (a, b)
                })
                .unwrap()
                .edge_type
        };
        assert_eq!(find(3, 6), EdgeType::FirstType);
        assert_eq!(find(6, 10), EdgeType::SecondType { r: 6, t: 4 });
    }

    #[test]
    fn doubling_pair_is_first_type() {
        let lg = induced_difference_graph(&Signature::new(vec![5, 10]).unwrap());
        let classes = classify_edges(&lg).unwrap();
        assert_eq!(classes.edges.len(), 1);
        assert_eq!(classes.edges[0].edge_type, EdgeType::FirstType);
        assert_eq!(classes.first_type_count(), 1);
    }

    #[test]
    fn classification_needs_a_valid_labeling() {
        let lg = LabeledGraph::from_parts(3, &[(0, 1), (1, 2)], vec![1, 2, 3]).unwrap();
        assert!(matches!(classify_edges(&lg), Err(Error::PreconditionViolation(_))));
        assert!(matches!(
            corollary_diagnostics(&lg),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn star_parity() {
        let d = corollary_diagnostics(&star_center_16()).unwrap();
        assert_eq!(d.max_vertex_degree, 8);
        assert!(!d.max_has_half_neighbor);
        assert!(d.parity_check);
        assert!(d.holds());

        let mut labels = vec![14];
        labels.extend([28, 13, 11, 9, 7, 5, 3, 1]);
        let right = LabeledGraph::from_parts(9, &(1..9).map(|i| (0, i)).collect::<Vec<_>>(), labels).unwrap();
        let d = corollary_diagnostics(&right).unwrap();
        assert_eq!(d.max_label, 28);
        assert_eq!(d.max_vertex_degree, 1);
        assert!(d.max_has_half_neighbor);
        assert!(d.parity_check);
    }

    #[test]
    fn triangle_min_and_max_forms() {
        // brute force over S = {1,2,3}: 1 = 3-2, 1 = 2/2; 3 = 1+2
        let lg = induced_difference_graph(&Signature::new(vec![1, 2, 3]).unwrap());
        let d = corollary_diagnostics(&lg).unwrap();
        assert!(d.min_label_forms.difference);
        assert!(d.min_label_forms.half);
        assert!(d.max_label_forms.sum);
        assert!(!d.max_label_forms.double);
        assert!(d.holds());
        assert_eq!(d.max_label_forms.to_string(), "a+b");
    }

    #[test]
    fn isolated_vertices_switch_clauses_off() {
        // {1, 5, 11}: no pair difference is a member
        let lg = induced_difference_graph(&Signature::new(vec![1, 5, 11]).unwrap());
        let d = corollary_diagnostics(&lg).unwrap();
        assert!(!d.min_clause_applies && !d.max_clause_applies && !d.membership_clause_applies);
        assert!(d.holds());
    }
}
