//! Graphs, labelings and signatures.
//!
//! All values here are immutable once built. A [`Graph`] keeps one adjacency
//! bitset per vertex over dense indices `0..n`; vertex names are carried along
//! for presentation only and play no part in adjacency.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Finite simple undirected graph over vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Graph {
            n,
            words,
            adj: vec![0; words * n],
            names: None,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, repeated edges
    /// and endpoints outside `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("repeated edge ({u}, {v})")));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Attaches vertex names. Names must be pairwise distinct and one per vertex.
    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "{} names given for {} vertices",
                names.len(),
                self.n
            )));
        }
        let mut seen = HashSet::with_capacity(names.len());
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex name '{name}'")));
            }
        }
        self.names = Some(names);
        Ok(self)
    }

    /// Same graph without vertex names.
    pub fn without_names(&self) -> Self {
        Graph {
            names: None,
            ..self.clone()
        }
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.adj[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + bit)
            })
        })
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names.as_ref().map(|names| names[v].as_str())
    }

    /// Copy of the graph with vertex `v` moved to position `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        if let Some(names) = &self.names {
            let mut moved = vec![String::new(); self.n];
            for (v, name) in names.iter().enumerate() {
                moved[perm[v]] = name.clone();
            }
            g.names = Some(moved);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Vertex degrees sorted in descending order.
pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees
}

/// Injective assignment of positive integers to vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling(Vec<u64>);

impl Labeling {
    pub fn new(labels: Vec<u64>) -> Result<Self> {
        if let Some(v) = labels.iter().position(|&l| l == 0) {
            return Err(Error::InvalidLabeling(format!(
                "vertex {v} has label 0; labels must be positive"
            )));
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for &l in &labels {
            if !seen.insert(l) {
                return Err(Error::InvalidLabeling(format!("label {l} is used more than once")));
            }
        }
        Ok(Labeling(labels))
    }

    pub fn get(&self, v: usize) -> u64 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

/// A label set: strictly increasing, nonempty, positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<u64>);

impl Signature {
    /// Accepts a strictly increasing sequence of positive integers.
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("signature must be nonempty".into()));
        }
        if values[0] == 0 {
            return Err(Error::InvalidArgument("signature values must be positive".into()));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "signature values must be strictly increasing".into(),
            ));
        }
        Ok(Signature(values))
    }

    /// Sorts the values; duplicates are rejected.
    pub fn from_unsorted(values: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut values: Vec<u64> = values.into_iter().collect();
        values.sort_unstable();
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("signature values must be distinct".into()));
        }
        Signature::new(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min_value(&self) -> u64 {
        self.0[0]
    }

    pub fn max_value(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0, |g, &x| g.gcd(&x))
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd() == 1
    }

    /// Divides out the gcd.
    pub fn primitive(&self) -> Signature {
        let g = self.gcd();
        Signature(self.0.iter().map(|&x| x / g).collect())
    }

    pub fn scaled(&self, c: u64) -> Result<Signature> {
        if c == 0 {
            return Err(Error::InvalidArgument("scale factor must be at least 1".into()));
        }
        let values = self
            .0
            .iter()
            .map(|&x| x.checked_mul(c).ok_or_else(|| Error::Overflow(format!("{x} * {c}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Signature(values))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// A graph together with a total labeling of its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    graph: Graph,
    labeling: Labeling,
}

impl LabeledGraph {
    pub fn new(graph: Graph, labeling: Labeling) -> Result<Self> {
        if labeling.len() != graph.order() {
            return Err(Error::InvalidLabeling(format!(
                "{} labels for {} vertices",
                labeling.len(),
                graph.order()
            )));
        }
        Ok(LabeledGraph { graph, labeling })
    }

    /// Convenience constructor from raw parts.
    pub fn from_parts(n: usize, edges: &[(usize, usize)], labels: Vec<u64>) -> Result<Self> {
        LabeledGraph::new(Graph::from_edges(n, edges.iter().copied())?, Labeling::new(labels)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labeling.get(v)
    }

    pub fn labels(&self) -> &[u64] {
        self.labeling.as_slice()
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// The image of the labeling. `None` only for the order-0 graph.
    pub fn signature(&self) -> Option<Signature> {
        if self.labeling.is_empty() {
            None
        } else {
            Some(Signature::from_unsorted(self.labels().iter().copied()).expect("labels are distinct"))
        }
    }

    pub fn vertex_with_label(&self, label: u64) -> Option<usize> {
        self.labels().iter().position(|&l| l == label)
    }

    /// Edge set expressed through endpoint labels, each pair as (smaller, larger), sorted.
    pub fn labeled_edges(&self) -> Vec<(u64, u64)> {
        let mut edges: Vec<(u64, u64)> = self
            .graph
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.label(u), self.label(v));
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges
    }
}

/// The graph on the values of `s`, joining `x < y` whenever `y - x` is itself in `s`.
/// Vertex `i` carries label `s.values()[i]`.
pub fn induced_difference_graph(s: &Signature) -> LabeledGraph {
    let values = s.values();
    let mut g = Graph::empty(values.len());
    for j in 0..values.len() {
        for i in 0..j {
            if s.contains(values[j] - values[i]) {
                g.link(i, j);
            }
        }
    }
    LabeledGraph {
        graph: g,
        labeling: Labeling(values.to_vec()),
    }
}

/// Multiplies every label by `c`.
pub fn scale_labeling(lg: &LabeledGraph, c: u64) -> Result<LabeledGraph> {
    if c == 0 {
        return Err(Error::InvalidArgument("scale factor must be at least 1".into()));
    }
    let labels = lg
        .labels()
        .iter()
        .map(|&l| l.checked_mul(c).ok_or_else(|| Error::Overflow(format!("{l} * {c}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(LabeledGraph {
        graph: lg.graph.clone(),
        labeling: Labeling(labels),
    })
}
