//! Canonical forms and isomorphism for small graphs.
//!
//! Vertices are first partitioned by iterated degree refinement (each vertex
//! coloured by its current colour plus the multiset of its neighbours'
//! colours). Non-singleton cells are then split by individualising each of
//! their vertices in turn and refining again. Every leaf of that tree is a
//! vertex ordering; the canonical form is the smallest upper-triangle
//! adjacency code over all leaves. Vertices of a cell with identical
//! neighbourhoods are interchangeable, so only one of them is individualised.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{degree_sequence, Graph};

/// Largest order accepted by the canonical-form routines.
pub const MAX_CANON_ORDER: usize = 16;

/// Isomorphism-invariant encoding of a graph of order at most [`MAX_CANON_ORDER`].
///
/// `bits` holds the upper triangle of the canonically ordered adjacency matrix,
/// row by row, with pair `(0, 1)` in the most significant position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: usize,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn edge_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    fn pair_count(order: usize) -> usize {
        order * order.saturating_sub(1) / 2
    }

    fn hex_width(order: usize) -> usize {
        Self::pair_count(order).div_ceil(4).max(1)
    }

    /// Fixed-width lowercase hex of the adjacency code.
    pub fn to_hex(&self) -> String {
        format!("{:0width$x}", self.bits, width = Self::hex_width(self.order))
    }

    pub fn from_hex(order: usize, hex: &str) -> Result<Self> {
        if order > MAX_CANON_ORDER {
            return Err(Error::UnsupportedOrder {
                order,
                limit: MAX_CANON_ORDER,
            });
        }
        let bits = u128::from_str_radix(hex, 16)
            .map_err(|e| Error::InvalidArgument(format!("bad canonical form '{hex}': {e}")))?;
        let pairs = Self::pair_count(order);
        if pairs < 128 && bits >> pairs != 0 {
            return Err(Error::InvalidArgument(format!(
                "canonical form '{hex}' has more than {pairs} bits"
            )));
        }
        Ok(CanonicalForm { order, bits })
    }

    /// The graph in canonical vertex order.
    pub fn to_graph(&self) -> Graph {
        let n = self.order;
        let pairs = Self::pair_count(n);
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.bits >> (pairs - 1 - k) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, edges).expect("decoded edges are simple")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({}:{})", self.order, self.to_hex())
    }
}

/// Adjacency rows of a graph with at most 16 vertices.
pub(crate) type Rows = [u16; MAX_CANON_ORDER];

pub(crate) fn rows_of(g: &Graph) -> Result<Rows> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::UnsupportedOrder {
            order: n,
            limit: MAX_CANON_ORDER,
        });
    }
    let mut rows = [0u16; MAX_CANON_ORDER];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    Ok(rows)
}

type Colors = [u8; MAX_CANON_ORDER];

struct Canonizer<'a> {
    rows: &'a Rows,
    n: usize,
    best: Option<(u128, Colors)>,
}

impl Canonizer<'_> {
    fn distinct(&self, colors: &Colors) -> usize {
        colors[..self.n].iter().map(|&c| c as usize + 1).max().unwrap_or(0)
    }

    /// Replaces colours by ranks of their sorted distinct keys.
    fn rank<K: Ord + Clone>(&self, keys: &[K], colors: &mut Colors) {
        let mut sorted: Vec<K> = keys.to_vec();
        sorted.sort();
        sorted.dedup();
        for v in 0..self.n {
            colors[v] = sorted.binary_search(&keys[v]).expect("key present") as u8;
        }
    }

    fn refine(&self, colors: &mut Colors) {
        let n = self.n;
        let mut k = self.distinct(colors);
        while k < n {
            let keys: Vec<(u8, [u8; MAX_CANON_ORDER])> = (0..n)
                .map(|v| {
                    let mut counts = [0u8; MAX_CANON_ORDER];
                    let mut row = self.rows[v];
                    while row != 0 {
                        let w = row.trailing_zeros() as usize;
                        row &= row - 1;
                        counts[colors[w] as usize] += 1;
                    }
                    (colors[v], counts)
                })
                .collect();
            self.rank(&keys, colors);
            let next = self.distinct(colors);
            if next == k {
                break;
            }
            k = next;
        }
    }

    fn code(&self, colors: &Colors) -> u128 {
        let n = self.n;
        let mut inv = [0usize; MAX_CANON_ORDER];
        for v in 0..n {
            inv[colors[v] as usize] = v;
        }
        let mut code = 0u128;
        for i in 0..n {
            for j in i + 1..n {
                code = code << 1 | u128::from(self.rows[inv[i]] >> inv[j] & 1);
            }
        }
        code
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.rows[u] & !(1 << v) == self.rows[v] & !(1 << u)
    }

    fn explore(&mut self, mut colors: Colors) {
        self.refine(&mut colors);
        let n = self.n;
        if self.distinct(&colors) == n {
            let code = self.code(&colors);
            if self.best.as_ref().is_none_or(|(best, _)| code < *best) {
                self.best = Some((code, colors));
            }
            return;
        }
        let mut size = [0usize; MAX_CANON_ORDER];
        for v in 0..n {
            size[colors[v] as usize] += 1;
        }
        let target = (0..n).find(|&c| size[c] > 1).expect("some cell is not a singleton") as u8;
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::with_capacity(cell.len());
        for &v in &cell {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let keys: Vec<u16> = (0..n)
                .map(|w| 2 * colors[w] as u16 + u16::from(colors[w] == target && w != v))
                .collect();
            let mut next = colors;
            self.rank(&keys, &mut next);
            self.explore(next);
        }
    }
}

/// Canonical code plus the ordering achieving it (`perm[v]` is v's canonical position).
pub(crate) fn canonize_rows(rows: &Rows, n: usize) -> (CanonicalForm, Vec<usize>) {
    let mut canon = Canonizer { rows, n, best: None };
    let mut colors = [0u8; MAX_CANON_ORDER];
    // initial partition by degree
    let degrees: Vec<u32> = (0..n).map(|v| rows[v].count_ones()).collect();
    canon.rank(&degrees, &mut colors);
    canon.explore(colors);
    let (bits, colors) = canon.best.unwrap_or((0, [0; MAX_CANON_ORDER]));
    let perm = colors[..n].iter().map(|&c| c as usize).collect();
    (CanonicalForm { order: n, bits }, perm)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form together with the vertex ordering that produces it:
/// `g.permuted(&perm)` has adjacency code `form`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let rows = rows_of(g)?;
    Ok(canonize_rows(&rows, g.order()))
}

fn cheap_mismatch(g1: &Graph, g2: &Graph) -> bool {
    g1.order() != g2.order() || g1.edge_count() != g2.edge_count() || degree_sequence(g1) != degree_sequence(g2)
}

pub fn isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    rows_of(g1)?;
    rows_of(g2)?;
    if cheap_mismatch(g1, g2) {
        return Ok(false);
    }
    Ok(canonical_form(g1)? == canonical_form(g2)?)
}

/// A vertex map `m` with `g1.has_edge(u, v) == g2.has_edge(m[u], m[v])`, if one exists.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    rows_of(g1)?;
    rows_of(g2)?;
    if cheap_mismatch(g1, g2) {
        return Ok(None);
    }
    let (f1, p1) = canonical_labeling(g1)?;
    let (f2, p2) = canonical_labeling(g2)?;
    if f1 != f2 {
        return Ok(None);
    }
    Ok(Some(compose_through_canon(&p1, &p2)))
}

/// Maps vertices of the first graph onto the second through their shared canonical order.
pub(crate) fn compose_through_canon(p1: &[usize], p2: &[usize]) -> Vec<usize> {
    let mut inv2 = vec![0; p2.len()];
    for (v, &pos) in p2.iter().enumerate() {
        inv2[pos] = v;
    }
    p1.iter().map(|&pos| inv2[pos]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{induced_difference_graph, Signature};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn reordered_cycle_has_the_same_form() {
        let c4 = cycle(4);
        let other = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c4).unwrap(), canonical_form(&other).unwrap());
        assert!(isomorphic(&c4, &other).unwrap());
    }

    #[test]
    fn path_and_claw_differ() {
        let p4 = path(4);
        let claw = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&claw).unwrap());
        assert!(!isomorphic(&p4, &claw).unwrap());
        assert!(!isomorphic(&cycle(4), &p4).unwrap());
    }

    #[test]
    fn induced_triangle_matches_k3() {
        let g = induced_difference_graph(&Signature::new(vec![1, 2, 3]).unwrap());
        let k3 = cycle(3);
        assert_eq!(canonical_form(g.graph()).unwrap(), canonical_form(&k3).unwrap());
        let p = induced_difference_graph(&Signature::new(vec![1, 2, 4]).unwrap());
        assert!(isomorphic(p.graph(), &path(3)).unwrap());
    }

    #[test]
    fn order_limit() {
        let g = Graph::empty(MAX_CANON_ORDER + 1);
        assert!(matches!(
            canonical_form(&g),
            Err(Error::UnsupportedOrder { order: 17, limit: 16 })
        ));
        assert!(canonical_form(&Graph::empty(MAX_CANON_ORDER)).is_ok());
    }

    #[test]
    fn labeling_reproduces_the_code() {
        let g = Graph::from_edges(5, [(0, 3), (3, 4), (4, 1), (1, 2)]).unwrap();
        let (form, perm) = canonical_labeling(&g).unwrap();
        let relabeled = g.permuted(&perm);
        let decoded = form.to_graph();
        assert_eq!(
            relabeled.edges().collect::<Vec<_>>(),
            decoded.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn isomorphism_map_preserves_adjacency() {
        let g1 = cycle(6);
        let g2 = g1.permuted(&[3, 5, 0, 2, 4, 1]);
        let m = find_isomorphism(&g1, &g2).unwrap().unwrap();
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(g1.has_edge(u, v), g2.has_edge(m[u], m[v]));
            }
        }
        assert!(find_isomorphism(&cycle(6), &path(6)).unwrap().is_none());
    }

    #[test]
    fn regular_graphs_with_equal_degrees_are_separated() {
        // C6 and two disjoint triangles: both 2-regular on 6 vertices
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!isomorphic(&cycle(6), &two_triangles).unwrap());
    }

    #[test]
    fn dense_symmetric_graphs_finish() {
        let k = Graph::from_edges(16, (0..16).flat_map(|i| (i + 1..16).map(move |j| (i, j)))).unwrap();
        let form = canonical_form(&k).unwrap();
        assert_eq!(form.edge_count(), 120);
        assert_eq!(form.to_hex().len(), 30);
        let c = cycle(16);
        assert_eq!(
            canonical_form(&c).unwrap(),
            canonical_form(&c.permuted(&(0..16).rev().collect::<Vec<_>>())).unwrap()
        );
    }

    #[test]
    fn hex_round_trip() {
        let form = canonical_form(&path(5)).unwrap();
        assert_eq!(CanonicalForm::from_hex(5, &form.to_hex()).unwrap(), form);
        assert!(CanonicalForm::from_hex(3, "ff").is_err());
        assert_eq!(canonical_form(&Graph::empty(1)).unwrap().to_hex(), "0");
    }
}
