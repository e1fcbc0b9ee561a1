//! Difference graphs: labelings in which two vertices are adjacent exactly
//! when the difference of their labels is itself a label.
//!
//! The crate checks that predicate on labeled graphs, builds labeled
//! families that satisfy it, and searches bounded label ranges for every
//! label set (signature) that realizes a given graph.

pub mod canon;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod search;
pub mod verify;

pub use canon::{canonical_form, canonical_labeling, find_isomorphism, isomorphic, CanonicalForm, MAX_CANON_ORDER};
pub use error::{Error, Result};
pub use families::{FamilyParams, FamilySpec, StarVariant};
pub use graph::{degree_sequence, induced_difference_graph, scale_labeling, Graph, LabeledGraph, Labeling, Signature};
pub use search::{
    check_k3_uniqueness, classify_star_signatures, enumerate_difference_graphs, find_signatures, prove_absent_up_to,
    CatalogEntry, Pruning, SearchConfig, SearchMode, SearchReport, Witness,
};
pub use verify::{classify_edges, corollary_diagnostics, is_difference_labeling, verify, VerificationReport};
