//! Bounded exhaustive search over signatures.
//!
//! Candidate signatures are the `n`-subsets of `{1..M}`, visited in
//! lexicographic order. Because every difference `y - x` is smaller than `y`,
//! the edges incident to a newly added (largest) element are fixed as soon as
//! it is added: the difference graph of a prefix is an induced subgraph of the
//! difference graph of every extension. Edge counts and degrees therefore only
//! grow along a branch, which is what makes the prefix filters sound.
//!
//! The space is split into chunks by first element. Chunks are independent
//! and merged in order, so results do not depend on the worker count.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_integer::Integer;
use rayon::prelude::*;

use crate::canon::{canonize_rows, compose_through_canon, rows_of, CanonicalForm, Rows, MAX_CANON_ORDER};
use crate::error::{Error, Result};
use crate::families::{star, StarVariant};
use crate::graph::{Graph, Signature};
use crate::verify::forms_in_sorted;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    First,
    All,
}

/// Which sound filters run before the isomorphism test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pruning {
    pub degree_sequence: bool,
    pub edge_count: bool,
    pub corollary_min_max: bool,
}

impl Pruning {
    pub const ALL: Pruning = Pruning {
        degree_sequence: true,
        edge_count: true,
        corollary_min_max: true,
    };
    pub const NONE: Pruning = Pruning {
        degree_sequence: false,
        edge_count: false,
        corollary_min_max: false,
    };
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_label: u64,
    pub mode: SearchMode,
    /// Only signatures with gcd 1.
    pub primitive_only: bool,
    pub pruning: Pruning,
    /// Worker threads; 0 and 1 both mean sequential.
    pub jobs: usize,
}

impl SearchConfig {
    /// All witnesses, every filter on, sequential.
    pub fn new(max_label: u64) -> Self {
        SearchConfig {
            max_label,
            mode: SearchMode::All,
            primitive_only: false,
            pruning: Pruning::ALL,
            jobs: 1,
        }
    }

    pub fn mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn primitive_only(mut self, on: bool) -> Self {
        self.primitive_only = on;
        self
    }

    pub fn pruning(mut self, pruning: Pruning) -> Self {
        self.pruning = pruning;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }
}

/// A signature realizing the target, with the label of each target vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub signature: Signature,
    /// `labels[v]` is the label given to target vertex `v`.
    pub labels: Vec<u64>,
}

/// Candidates discarded by each filter. Prefix-level cuts count every subset in the cut subtree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PruneCounts {
    pub non_primitive: u64,
    pub corollary_min_max: u64,
    pub edge_count: u64,
    pub degree_sequence: u64,
}

impl PruneCounts {
    pub fn total(&self) -> u64 {
        self.non_primitive + self.corollary_min_max + self.edge_count + self.degree_sequence
    }

    fn absorb(&mut self, other: &PruneCounts) {
        self.non_primitive += other.non_primitive;
        self.corollary_min_max += other.corollary_min_max;
        self.edge_count += other.edge_count;
        self.degree_sequence += other.degree_sequence;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub order: usize,
    pub max_label: u64,
    /// `C(max_label, order)`.
    pub space_size: u128,
    pub witnesses: Vec<Witness>,
    /// Candidates that reached the isomorphism test.
    pub candidates_examined: u64,
    pub pruned: PruneCounts,
    /// The whole candidate space was covered.
    pub exhausted: bool,
}

impl SearchReport {
    /// No signature up to `max_label` realizes the target.
    pub fn is_absent(&self) -> bool {
        self.exhausted && self.witnesses.is_empty()
    }

    /// Candidates accounted for: examined plus pruned.
    pub fn candidates_covered(&self) -> u128 {
        u128::from(self.candidates_examined) + u128::from(self.pruned.total())
    }
}

/// Live counters for progress display. Updated once per finished chunk;
/// never read by the search itself.
#[derive(Debug, Default)]
pub struct Progress {
    pub candidates: AtomicU64,
    pub pruned: AtomicU64,
    pub witnesses: AtomicU64,
    pub chunks_done: AtomicU64,
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul(u128::from(n - i)) {
            Some(x) => x / u128::from(i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn saturate(x: u128) -> u64 {
    u64::try_from(x).unwrap_or(u64::MAX)
}

/// Sorted prefix `s_0 < ... < s_{len-1}` with the adjacency of its difference graph.
struct Prefix {
    len: usize,
    vals: [u64; MAX_CANON_ORDER],
    rows: Rows,
    deg: [u8; MAX_CANON_ORDER],
    edges: usize,
}

impl Prefix {
    fn new() -> Self {
        Prefix {
            len: 0,
            vals: [0; MAX_CANON_ORDER],
            rows: [0; MAX_CANON_ORDER],
            deg: [0; MAX_CANON_ORDER],
            edges: 0,
        }
    }

    fn values(&self) -> &[u64] {
        &self.vals[..self.len]
    }

    fn push(&mut self, x: u64) {
        let k = self.len;
        let mut row = 0u16;
        for i in 0..k {
            if self.vals[..k].binary_search(&(x - self.vals[i])).is_ok() {
                row |= 1 << i;
                self.rows[i] |= 1 << k;
                self.deg[i] += 1;
            }
        }
        self.vals[k] = x;
        self.rows[k] = row;
        self.deg[k] = row.count_ones() as u8;
        self.edges += row.count_ones() as usize;
        self.len += 1;
    }

    fn pop(&mut self) {
        self.len -= 1;
        let k = self.len;
        let mut row = self.rows[k];
        self.edges -= row.count_ones() as usize;
        while row != 0 {
            let i = row.trailing_zeros() as usize;
            row &= row - 1;
            self.rows[i] &= !(1 << k);
            self.deg[i] -= 1;
        }
        self.rows[k] = 0;
        self.deg[k] = 0;
    }

    fn signature(&self) -> Signature {
        Signature::new(self.values().to_vec()).expect("prefix is strictly increasing")
    }

    fn gcd(&self) -> u64 {
        self.values().iter().fold(0, |g, &x| g.gcd(&x))
    }
}

trait Visitor {
    /// A proper prefix was extended; `subtree` subsets complete it.
    /// Returning false skips them all.
    fn enter(&mut self, _prefix: &Prefix, _subtree: u64) -> bool {
        true
    }

    /// A full subset. Returning false ends the walk.
    fn leaf(&mut self, prefix: &Prefix) -> bool;
}

/// Visits every `n`-subset of `{1..m}` whose least element is `first`.
fn walk_chunk<V: Visitor>(n: usize, m: u64, first: u64, visitor: &mut V) {
    let mut prefix = Prefix::new();
    prefix.push(first);
    if n == 1 {
        visitor.leaf(&prefix);
        return;
    }
    if visitor.enter(&prefix, saturate(binomial(m - first, n as u64 - 1))) {
        descend(n, m, first + 1, &mut prefix, visitor);
    }
}

fn descend<V: Visitor>(n: usize, m: u64, start: u64, prefix: &mut Prefix, visitor: &mut V) -> bool {
    let need = (n - prefix.len) as u64;
    let end = m - (need - 1);
    let mut x = start;
    while x <= end {
        prefix.push(x);
        let go = if prefix.len == n {
            visitor.leaf(prefix)
        } else if visitor.enter(prefix, saturate(binomial(m - x, need - 1))) {
            descend(n, m, x + 1, prefix, visitor)
        } else {
            true
        };
        prefix.pop();
        if !go {
            return false;
        }
        x += 1;
    }
    true
}

/// Runs `chunk` for each first element, in parallel when `jobs > 1`, returning results in order.
fn run_chunks<T, F>(n: usize, m: u64, jobs: usize, chunk: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    let last = m - (n as u64 - 1);
    if jobs <= 1 {
        return (1..=last).map(chunk).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| (1..=last).into_par_iter().map(chunk).collect())
}

fn check_bounds(order: usize, max_label: u64) -> Result<()> {
    if order == 0 {
        return Err(Error::InvalidArgument("target graph has no vertices".into()));
    }
    if order > MAX_CANON_ORDER {
        return Err(Error::UnsupportedOrder {
            order,
            limit: MAX_CANON_ORDER,
        });
    }
    if max_label < order as u64 {
        return Err(Error::InvalidArgument(format!(
            "max label {max_label} is smaller than the order {order}"
        )));
    }
    if max_label > u64::MAX / 2 {
        return Err(Error::InvalidArgument(format!("max label {max_label} is too large")));
    }
    Ok(())
}

struct Target {
    edges: usize,
    /// Descending.
    degrees: Vec<u8>,
    min_degree: u8,
    form: CanonicalForm,
    perm: Vec<usize>,
}

impl Target {
    fn new(g: &Graph) -> Result<Self> {
        let rows = rows_of(g)?;
        let n = g.order();
        let (form, perm) = canonize_rows(&rows, n);
        let mut degrees: Vec<u8> = (0..n).map(|v| rows[v].count_ones() as u8).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Target {
            edges: g.edge_count(),
            min_degree: degrees.last().copied().unwrap_or(0),
            degrees,
            form,
            perm,
        })
    }

    /// Sorted prefix degrees are bounded termwise by the target's.
    fn dominates(&self, prefix: &Prefix) -> bool {
        let mut deg = prefix.deg;
        let d = &mut deg[..prefix.len];
        d.sort_unstable_by(|a, b| b.cmp(a));
        d.iter().zip(&self.degrees).all(|(p, t)| p <= t)
    }

    fn same_degrees(&self, prefix: &Prefix) -> bool {
        let mut deg = prefix.deg;
        let d = &mut deg[..prefix.len];
        d.sort_unstable_by(|a, b| b.cmp(a));
        d == self.degrees.as_slice()
    }
}

/// Minimum is `a/2` or `a-b`, maximum is `2a` or `a+b`, over members.
fn corollary_min_max_ok(values: &[u64]) -> bool {
    let min = values[0];
    let max = values[values.len() - 1];
    forms_in_sorted(values, min).min_admissible() && forms_in_sorted(values, max).max_admissible()
}

struct SignatureVisitor<'a> {
    target: &'a Target,
    cfg: &'a SearchConfig,
    use_corollary: bool,
    pruned: PruneCounts,
    examined: u64,
    witnesses: Vec<Witness>,
    /// Lowest chunk known to hold a witness (first-witness mode).
    found_in: Option<(&'a AtomicU64, u64)>,
    aborted: bool,
}

impl Visitor for SignatureVisitor<'_> {
    fn enter(&mut self, prefix: &Prefix, subtree: u64) -> bool {
        let p = &self.cfg.pruning;
        if p.edge_count && prefix.edges > self.target.edges {
            self.pruned.edge_count += subtree;
            return false;
        }
        if p.degree_sequence && !self.target.dominates(prefix) {
            self.pruned.degree_sequence += subtree;
            return false;
        }
        true
    }

    fn leaf(&mut self, prefix: &Prefix) -> bool {
        if let Some((found, chunk)) = self.found_in {
            if found.load(Ordering::Relaxed) < chunk {
                self.aborted = true;
                return false;
            }
        }
        let p = &self.cfg.pruning;
        if self.cfg.primitive_only && prefix.gcd() != 1 {
            self.pruned.non_primitive += 1;
            return true;
        }
        if self.use_corollary && !corollary_min_max_ok(prefix.values()) {
            self.pruned.corollary_min_max += 1;
            return true;
        }
        if p.edge_count && prefix.edges != self.target.edges {
            self.pruned.edge_count += 1;
            return true;
        }
        if p.degree_sequence && !self.target.same_degrees(prefix) {
            self.pruned.degree_sequence += 1;
            return true;
        }
        self.examined += 1;
        let (form, perm) = canonize_rows(&prefix.rows, prefix.len);
        if form != self.target.form {
            return true;
        }
        let map = compose_through_canon(&self.target.perm, &perm);
        self.witnesses.push(Witness {
            signature: prefix.signature(),
            labels: map.iter().map(|&i| prefix.vals[i]).collect(),
        });
        self.cfg.mode == SearchMode::All
    }
}

struct ChunkResult {
    witnesses: Vec<Witness>,
    examined: u64,
    pruned: PruneCounts,
}

pub fn find_signatures(target: &Graph, cfg: &SearchConfig) -> Result<SearchReport> {
    find_signatures_with_progress(target, cfg, None)
}

/// [`find_signatures`] that also publishes running totals to `progress`.
pub fn find_signatures_with_progress(
    target: &Graph,
    cfg: &SearchConfig,
    progress: Option<&Progress>,
) -> Result<SearchReport> {
    let n = target.order();
    check_bounds(n, cfg.max_label)?;
    let info = Target::new(target)?;
    let m = cfg.max_label;
    let use_corollary = cfg.pruning.corollary_min_max && info.min_degree >= 1;
    let found = AtomicU64::new(u64::MAX);
    let first_mode = cfg.mode == SearchMode::First;

    let results = run_chunks(n, m, cfg.jobs, |first| {
        let mut visitor = SignatureVisitor {
            target: &info,
            cfg,
            use_corollary,
            pruned: PruneCounts::default(),
            examined: 0,
            witnesses: Vec::new(),
            found_in: first_mode.then_some((&found, first)),
            aborted: false,
        };
        if !(first_mode && found.load(Ordering::Relaxed) < first) {
            walk_chunk(n, m, first, &mut visitor);
        }
        if first_mode && !visitor.witnesses.is_empty() {
            found.fetch_min(first, Ordering::Relaxed);
        }
        if let Some(progress) = progress {
            progress.candidates.fetch_add(visitor.examined, Ordering::Relaxed);
            progress.pruned.fetch_add(visitor.pruned.total(), Ordering::Relaxed);
            progress
                .witnesses
                .fetch_add(visitor.witnesses.len() as u64, Ordering::Relaxed);
            progress.chunks_done.fetch_add(1, Ordering::Relaxed);
        }
        ChunkResult {
            witnesses: visitor.witnesses,
            examined: visitor.examined,
            pruned: visitor.pruned,
        }
    });

    let mut report = SearchReport {
        order: n,
        max_label: m,
        space_size: binomial(m, n as u64),
        witnesses: Vec::new(),
        candidates_examined: 0,
        pruned: PruneCounts::default(),
        exhausted: true,
    };
    for chunk in results {
        report.candidates_examined += chunk.examined;
        report.pruned.absorb(&chunk.pruned);
        let hit = !chunk.witnesses.is_empty();
        report.witnesses.extend(chunk.witnesses);
        if first_mode && hit {
            report.exhausted = false;
            break;
        }
    }
    Ok(report)
}

/// Exhaustive search with every sound filter; absence holds iff
/// `report.is_absent()`.
pub fn prove_absent_up_to(target: &Graph, max_label: u64, jobs: usize) -> Result<SearchReport> {
    find_signatures(target, &SearchConfig::new(max_label).jobs(jobs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K3Uniqueness {
    /// Every triangle signature up to the bound is `{a, 2a, 3a}`.
    pub holds: bool,
    pub witnesses: Vec<Signature>,
    pub offenders: Vec<Signature>,
    pub candidates_examined: u64,
}

fn triangle() -> Graph {
    Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).expect("triangle")
}

pub fn check_k3_uniqueness(max_label: u64, jobs: usize) -> Result<K3Uniqueness> {
    if max_label < 3 {
        return Ok(K3Uniqueness {
            holds: true,
            witnesses: Vec::new(),
            offenders: Vec::new(),
            candidates_examined: 0,
        });
    }
    let report = find_signatures(&triangle(), &SearchConfig::new(max_label).jobs(jobs))?;
    let witnesses: Vec<Signature> = report.witnesses.into_iter().map(|w| w.signature).collect();
    let offenders: Vec<Signature> = witnesses
        .iter()
        .filter(|s| {
            let v = s.values();
            !(v[1] == 2 * v[0] && v[2] == 3 * v[0])
        })
        .cloned()
        .collect();
    Ok(K3Uniqueness {
        holds: offenders.is_empty(),
        witnesses,
        offenders,
        candidates_examined: report.candidates_examined,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StarShape {
    /// A multiple of the variant-A construction.
    VariantA,
    /// A multiple of the variant-B construction.
    VariantB,
    Unclassified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSignatureInfo {
    pub signature: Signature,
    pub center_label: u64,
    pub max_on_center: bool,
    /// The maximum-label vertex neighbours a vertex labeled max/2.
    pub max_has_half_neighbor: bool,
    /// Odd degree at the maximum iff it has a max/2 neighbour.
    pub parity_holds: bool,
    pub shape: StarShape,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarClassification {
    pub leaves: usize,
    pub max_label: u64,
    pub entries: Vec<StarSignatureInfo>,
    pub exhausted: bool,
}

impl StarClassification {
    pub fn count(&self, shape: StarShape) -> usize {
        self.entries.iter().filter(|e| e.shape == shape).count()
    }
}

pub fn classify_star_signatures(n: usize, max_label: u64, jobs: usize) -> Result<StarClassification> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("star needs at least 2 leaves, got {n}")));
    }
    let target = Graph::from_edges(n + 1, (1..=n).map(|i| (0, i)))?;
    let mut out = StarClassification {
        leaves: n,
        max_label,
        entries: Vec::new(),
        exhausted: true,
    };
    if max_label < (n + 1) as u64 {
        return Ok(out);
    }
    let report = find_signatures(&target, &SearchConfig::new(max_label).jobs(jobs))?;
    out.exhausted = report.exhausted;

    let shape_of = |variant: StarVariant| -> Option<(Signature, u64)> {
        let lg = star(n, variant).ok()?;
        Some((lg.signature()?, lg.label(0)))
    };
    let a = shape_of(StarVariant::A);
    let b = if n.is_multiple_of(2) {
        shape_of(StarVariant::B)
    } else {
        None
    };

    for w in report.witnesses {
        let sig = w.signature;
        let center = w.labels[0];
        let max = sig.max_value();
        let max_on_center = center == max;
        let max_degree = if max_on_center { n } else { 1 };
        let max_has_half_neighbor = if max_on_center {
            max % 2 == 0 && w.labels[1..].contains(&(max / 2))
        } else {
            max == 2 * center
        };
        let g = sig.gcd();
        let reduced = (sig.primitive(), center / g);
        let shape = if a.as_ref() == Some(&reduced) {
            StarShape::VariantA
        } else if b.as_ref() == Some(&reduced) {
            StarShape::VariantB
        } else {
            StarShape::Unclassified
        };
        out.entries.push(StarSignatureInfo {
            signature: sig,
            center_label: center,
            max_on_center,
            max_has_half_neighbor,
            parity_holds: (max_degree % 2 == 1) == max_has_half_neighbor,
            shape,
        });
    }
    Ok(out)
}

/// One isomorphism class of difference graphs of a given order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub order: usize,
    pub form: CanonicalForm,
    /// Lexicographically least signature inducing this class.
    pub witness: Signature,
    pub edge_count: usize,
}

struct CatalogVisitor {
    classes: HashMap<CanonicalForm, Signature>,
}

impl Visitor for CatalogVisitor {
    fn leaf(&mut self, prefix: &Prefix) -> bool {
        let (form, _) = canonize_rows(&prefix.rows, prefix.len);
        // chunks are walked in lexicographic order, so the first hit is the least
        self.classes.entry(form).or_insert_with(|| prefix.signature());
        true
    }
}

/// All isomorphism classes `G(S)` for `n`-subsets `S` of `{1..max_label}`,
/// sorted by edge count and then canonical form.
pub fn enumerate_difference_graphs(order: usize, max_label: u64, jobs: usize) -> Result<Vec<CatalogEntry>> {
    check_bounds(order, max_label)?;
    let chunks = run_chunks(order, max_label, jobs, |first| {
        let mut visitor = CatalogVisitor {
            classes: HashMap::new(),
        };
        walk_chunk(order, max_label, first, &mut visitor);
        let mut classes: Vec<(CanonicalForm, Signature)> = visitor.classes.into_iter().collect();
        classes.sort();
        classes
    });
    let mut merged: HashMap<CanonicalForm, Signature> = HashMap::new();
    for chunk in chunks {
        for (form, sig) in chunk {
            merged.entry(form).or_insert(sig);
        }
    }
    let mut entries: Vec<CatalogEntry> = merged
        .into_iter()
        .map(|(form, witness)| CatalogEntry {
            order,
            edge_count: form.edge_count(),
            form,
            witness,
        })
        .collect();
    entries.sort_by_key(|x| (x.edge_count, x.form));
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigs(report: &SearchReport) -> Vec<Vec<u64>> {
        report.witnesses.iter().map(|w| w.signature.values().to_vec()).collect()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(40, 6), 3_838_380);
        assert_eq!(binomial(30, 3), 4060);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(5, 0), 1);
    }

    #[test]
    fn prefix_push_pop_round_trip() {
        let mut p = Prefix::new();
        for x in [1, 2, 3, 4] {
            p.push(x);
        }
        // {1,2,3,4}: every difference 1..3 is a member, so it is K4
        assert_eq!(p.edges, 6);
        p.pop();
        assert_eq!(p.edges, 3);
        assert_eq!(p.rows[3], 0);
        assert_eq!(&p.deg[..3], &[2, 2, 2]);
    }

    #[test]
    fn triangle_witnesses_up_to_twelve() {
        let report = find_signatures(&triangle(), &SearchConfig::new(12)).unwrap();
        assert_eq!(
            sigs(&report),
            vec![vec![1, 2, 3], vec![2, 4, 6], vec![3, 6, 9], vec![4, 8, 12]]
        );
        assert!(report.exhausted);
        assert_eq!(report.candidates_covered(), report.space_size);
    }

    #[test]
    fn first_path_signature() {
        let report = find_signatures(&path(3), &SearchConfig::new(4).mode(SearchMode::First)).unwrap();
        assert_eq!(sigs(&report), vec![vec![1, 2, 4]]);
        let w = &report.witnesses[0];
        // middle vertex of the path gets the label adjacent to both others
        assert_eq!(w.labels[1], 2);
        assert!(!report.exhausted);
    }

    #[test]
    fn single_vertex() {
        let report = find_signatures(&Graph::empty(1), &SearchConfig::new(1)).unwrap();
        assert_eq!(sigs(&report), vec![vec![1]]);
    }

    #[test]
    fn bounds_are_checked() {
        assert!(matches!(
            find_signatures(&path(3), &SearchConfig::new(2)),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            find_signatures(&Graph::empty(0), &SearchConfig::new(2)),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            find_signatures(&Graph::empty(17), &SearchConfig::new(40)),
            Err(Error::UnsupportedOrder { .. })
        ));
    }

    #[test]
    fn cycle_four_is_found() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let report = prove_absent_up_to(&c4, 10, 1).unwrap();
        assert!(!report.is_absent());
        assert!(!report.witnesses.is_empty());
    }

    #[test]
    fn k3_uniqueness_small_bounds() {
        let r = check_k3_uniqueness(3, 1).unwrap();
        assert!(r.holds);
        assert_eq!(r.witnesses, vec![Signature::new(vec![1, 2, 3]).unwrap()]);
        let r = check_k3_uniqueness(2, 1).unwrap();
        assert!(r.holds && r.witnesses.is_empty());
    }

    #[test]
    fn star_classification_small() {
        let c = classify_star_signatures(2, 8, 1).unwrap();
        let find = |v: &[u64]| c.entries.iter().find(|e| e.signature.values() == v).cloned();
        let base = find(&[1, 2, 4]).unwrap();
        assert_eq!(base.shape, StarShape::VariantB);
        assert_eq!(base.center_label, 2);
        assert!(!base.max_on_center);
        assert_eq!(find(&[2, 4, 8]).unwrap().shape, StarShape::VariantB);
        assert!(c.entries.iter().all(|e| e.parity_holds));
        assert!(classify_star_signatures(3, 2, 1).unwrap().entries.is_empty());
        assert!(classify_star_signatures(1, 10, 1).is_err());
    }

    #[test]
    fn order_three_catalog() {
        let catalog = enumerate_difference_graphs(3, 12, 1).unwrap();
        let witnesses: Vec<Vec<u64>> = catalog.iter().map(|e| e.witness.values().to_vec()).collect();
        assert_eq!(
            catalog.iter().map(|e| e.edge_count).collect::<Vec<_>>(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            witnesses,
            vec![vec![1, 3, 5], vec![1, 2, 5], vec![1, 2, 4], vec![1, 2, 3]]
        );
        let single = enumerate_difference_graphs(1, 1, 1).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].witness.values(), &[1]);
    }
}
