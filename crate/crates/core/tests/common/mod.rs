#![allow(dead_code)]

use std::path::PathBuf;

use diffgraph::families::{
    alternate_cn_snake, bistar, butterfly, cn_snake, double_triangular_snake, irregular_triangular_snake, olive_tree,
    star, umbrella,
};
use diffgraph::io::parse_graph_document;
use diffgraph::{scale_labeling, Graph, LabeledGraph, StarVariant};

pub fn fixture_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(file)
}

pub fn load(file: &str) -> (Graph, Option<LabeledGraph>) {
    let text = std::fs::read_to_string(fixture_path(file)).unwrap();
    let doc = parse_graph_document(&text).unwrap_or_else(|e| panic!("{file}: {e}"));
    (doc.graph.clone(), doc.labeled())
}

pub fn load_labeled(file: &str) -> LabeledGraph {
    load(file).1.unwrap_or_else(|| panic!("{file} has no labels"))
}

/// Each drawn labeling together with the constructor call that should reproduce it.
pub fn drawn_labelings() -> Vec<(&'static str, LabeledGraph)> {
    vec![
        ("star_s8_center_max.json", star(8, StarVariant::A).unwrap()),
        ("star_s8_leaf_max.json", star(8, StarVariant::B).unwrap()),
        ("butterfly.json", butterfly(3, 4).unwrap()),
        ("bistar_5_5.json", bistar(5, 5).unwrap()),
        ("umbrella_5_3.json", umbrella(5, 3).unwrap()),
        (
            "double_triangular_snake.json",
            scale_labeling(&double_triangular_snake(4).unwrap(), 2).unwrap(),
        ),
        (
            "irregular_triangular_snake_8.json",
            irregular_triangular_snake(8).unwrap(),
        ),
        ("c6_snake.json", cn_snake(6, 3).unwrap()),
        ("alternate_c5_snake.json", alternate_cn_snake(5, 4).unwrap()),
        ("olive_tree_5.json", olive_tree(5).unwrap()),
    ]
}

fn edges(pairs: &[(usize, usize)], n: usize) -> Graph {
    Graph::from_edges(n, pairs.iter().copied()).unwrap()
}

/// One representative of every isomorphism class of graphs on 1 to 4 vertices.
pub fn small_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("K1", edges(&[], 1)),
        ("2K1", edges(&[], 2)),
        ("K2", edges(&[(0, 1)], 2)),
        ("3K1", edges(&[], 3)),
        ("K2+K1", edges(&[(0, 1)], 3)),
        ("P3", edges(&[(0, 1), (1, 2)], 3)),
        ("K3", edges(&[(0, 1), (1, 2), (0, 2)], 3)),
        ("4K1", edges(&[], 4)),
        ("K2+2K1", edges(&[(0, 1)], 4)),
        ("2K2", edges(&[(0, 1), (2, 3)], 4)),
        ("P3+K1", edges(&[(0, 1), (1, 2)], 4)),
        ("K3+K1", edges(&[(0, 1), (1, 2), (0, 2)], 4)),
        ("P4", edges(&[(0, 1), (1, 2), (2, 3)], 4)),
        ("K1,3", edges(&[(0, 1), (0, 2), (0, 3)], 4)),
        ("C4", edges(&[(0, 1), (1, 2), (2, 3), (3, 0)], 4)),
        ("paw", edges(&[(0, 1), (1, 2), (0, 2), (2, 3)], 4)),
        ("diamond", edges(&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], 4)),
        ("K4", edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 4)),
    ]
}

/// Brute-force isomorphism: tries every bijection.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == a.order() {
            return true;
        }
        for w in 0..b.order() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                map.push(w);
                used[w] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                used[w] = false;
                map.pop();
            }
        }
        false
    }
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && extend(a, b, &mut Vec::new(), &mut vec![false; b.order()])
}

/// Every k-subset of `1..=m` in lexicographic order.
pub fn subsets(m: u64, k: usize) -> Vec<Vec<u64>> {
    fn go(start: u64, m: u64, k: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=m {
            cur.push(x);
            go(x + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, m, k, &mut Vec::new(), &mut out);
    out
}

/// The difference graph of a label set, built directly from the definition.
pub fn graph_of_set(set: &[u64]) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            if set.contains(&set[i].abs_diff(set[j])) {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edges(set.len(), pairs).unwrap()
}

/// Signatures up to `m` realizing `target`, by exhaustive enumeration.
pub fn brute_signatures(target: &Graph, m: u64) -> Vec<Vec<u64>> {
    subsets(m, target.order())
        .into_iter()
        .filter(|s| brute_isomorphic(&graph_of_set(s), target))
        .collect()
}
