//! Labeled graph families with closed-form difference labelings.
//!
//! Every constructor returns the graph together with its labeling; vertex
//! names follow the usual drawing of each family (`u0`, `v1`, `w2`, ...).
//! Label arithmetic is checked and overflow is reported as an error.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, LabeledGraph, Labeling};

#[derive(Default)]
struct Builder {
    names: Vec<String>,
    labels: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, name: impl Into<String>, label: u64) -> usize {
        self.names.push(name.into());
        self.labels.push(label);
        self.labels.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn path(&mut self, vertices: &[usize]) {
        for w in vertices.windows(2) {
            self.edge(w[0], w[1]);
        }
    }

    fn finish(self) -> Result<LabeledGraph> {
        let graph = Graph::from_edges(self.names.len(), self.edges)?.with_names(self.names)?;
        LabeledGraph::new(graph, Labeling::new(self.labels)?)
    }
}

fn overflow(what: &str) -> Error {
    Error::Overflow(what.to_string())
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or_else(|| overflow(&format!("{a} * {b}")))
}

fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or_else(|| overflow(&format!("{a} + {b}")))
}

fn pow(base: u64, exp: usize) -> Result<u64> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or_else(|| overflow(&format!("{base}^{exp}")))
}

fn to_u64(x: usize) -> u64 {
    x as u64
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(msg()))
    }
}

/// Triangle labeled `a, 2a, 3a`.
pub fn k3(a: u64) -> Result<LabeledGraph> {
    require(a >= 1, || "k3 needs a >= 1".into())?;
    let mut b = Builder::default();
    let x = b.vertex("u1", a);
    let y = b.vertex("u2", mul(2, a)?);
    let z = b.vertex("u3", mul(3, a)?);
    b.path(&[x, y, z, x]);
    b.finish()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StarVariant {
    /// Maximum label on the center: center `2n`, leaves the first `n` odd numbers.
    A,
    /// Maximum label on a leaf: with `a = n - 1`, center `2a`, leaves `4a`, `a`
    /// and the pairs `(2j - 1, 2a - (2j - 1))`.
    B,
}

impl FromStr for StarVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(StarVariant::A),
            "B" | "b" => Ok(StarVariant::B),
            other => Err(Error::InvalidArgument(format!("unknown star variant '{other}'"))),
        }
    }
}

impl fmt::Display for StarVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StarVariant::A => "A",
            StarVariant::B => "B",
        })
    }
}

/// Star with `n` leaves; center is vertex 0.
pub fn star(n: usize, variant: StarVariant) -> Result<LabeledGraph> {
    require(n >= 2, || format!("star needs at least 2 leaves, got {n}"))?;
    let leaf_labels: Vec<u64>;
    let center: u64;
    match variant {
        StarVariant::A => {
            center = mul(2, to_u64(n))?;
            leaf_labels = (1..=to_u64(n)).map(|i| 2 * i - 1).collect();
        }
        StarVariant::B => {
            require(n.is_multiple_of(2), || {
                format!("star variant B needs an even leaf count, got {n}")
            })?;
            let a = to_u64(n - 1);
            center = 2 * a;
            let mut leaves = vec![mul(4, a)?, a];
            for j in 1..=to_u64((n - 2) / 2) {
                leaves.push(2 * j - 1);
                leaves.push(2 * a - (2 * j - 1));
            }
            leaf_labels = leaves;
        }
    }
    let mut b = Builder::default();
    let c = b.vertex("u0", center);
    for (i, label) in leaf_labels.into_iter().enumerate() {
        let leaf = b.vertex(format!("u{}", i + 1), label);
        b.edge(c, leaf);
    }
    b.finish()
}

/// Two fans sharing the apex `w0`: top path `w1, u0..u_n`, bottom path `v0..v_m`.
pub fn butterfly(n: usize, m: usize) -> Result<LabeledGraph> {
    let mut b = Builder::default();
    let apex = b.vertex("w0", 6);
    let mut top = vec![b.vertex("w1", 2)];
    for i in 0..=n {
        top.push(b.vertex(format!("u{i}"), add(4, mul(6, to_u64(i))?)?));
    }
    let mut bottom = Vec::with_capacity(m + 1);
    for j in 0..=m {
        bottom.push(b.vertex(format!("v{j}"), add(3, mul(6, to_u64(j))?)?));
    }
    for &v in top.iter().chain(&bottom) {
        b.edge(apex, v);
    }
    b.path(&top);
    b.path(&bottom);
    b.finish()
}

/// Centers `u0`, `v0` joined by an edge, with `n` and `m` leaves respectively.
pub fn bistar(n: usize, m: usize) -> Result<LabeledGraph> {
    require(n >= 1 && m >= 1, || format!("bistar needs n, m >= 1, got ({n}, {m})"))?;
    let (nn, mm) = (to_u64(n), to_u64(m));
    let mut b = Builder::default();
    let u0 = b.vertex("u0", mul(2, nn)?);
    for i in 1..=nn {
        let leaf = b.vertex(format!("u{i}"), 2 * i - 1);
        b.edge(u0, leaf);
    }
    let step = add(mul(2, nn)?, 2)?;
    let v0_label = add(mul(4, nn)?, mul(mul(2, mm)?, add(nn, 1)?)?)?;
    let v0 = b.vertex("v0", v0_label);
    b.edge(u0, v0);
    for j in 1..=mm {
        let leaf = b.vertex(format!("v{j}"), add(mul(2, nn)?, mul(j, step)?)?);
        b.edge(v0, leaf);
    }
    b.finish()
}

/// Fan on `u1..u_n` with hub `u0`, plus the tail `u0 - v0 - v1 - ... - v_m`.
pub fn umbrella(n: usize, m: usize) -> Result<LabeledGraph> {
    require(n >= 2 && m >= 1, || {
        format!("umbrella needs n >= 2 and m >= 1, got ({n}, {m})")
    })?;
    let nn = to_u64(n);
    let mut b = Builder::default();
    let hub = b.vertex("u0", 2);
    let fan: Vec<usize> = (1..=nn).map(|i| b.vertex(format!("u{i}"), 2 * i - 1)).collect();
    for &f in &fan {
        b.edge(hub, f);
    }
    b.path(&fan);
    let mut tail = vec![hub, b.vertex("v0", add(mul(4, nn)?, 2)?)];
    for j in 1..=m {
        tail.push(b.vertex(format!("v{j}"), mul(pow(2, j - 1)?, mul(4, nn)?)?));
    }
    b.path(&tail);
    b.finish()
}

/// Path `u1..u_{t+1}` with a top apex `v_i` and a bottom apex `w_i` on every path edge.
pub fn double_triangular_snake(t: usize) -> Result<LabeledGraph> {
    require(t >= 1, || "double triangular snake needs t >= 1".into())?;
    let mut b = Builder::default();
    let mut path = Vec::with_capacity(t + 1);
    for i in 1..=t + 1 {
        path.push(b.vertex(format!("u{i}"), mul(pow(3, i - 1)?, pow(2, t - (i - 1))?)?));
    }
    b.path(&path);
    for i in 1..=t {
        let base = mul(pow(3, i - 1)?, pow(2, t - i)?)?;
        let v = b.vertex(format!("v{i}"), mul(5, base)?);
        b.edge(path[i - 1], v);
        b.edge(path[i], v);
    }
    for i in 1..=t {
        let w = b.vertex(format!("w{i}"), mul(pow(3, i - 1)?, pow(2, t - i)?)?);
        b.edge(path[i - 1], w);
        b.edge(path[i], w);
    }
    b.finish()
}

/// Path `u1..u_n` (`n` even) with apexes `v_j` over `u_j, u_{j+2}` for odd `j`,
/// and a second tier `w_k` over `v_k, v_{k+2}`; the last `w` closes on `u_n`.
pub fn irregular_triangular_snake(n: usize) -> Result<LabeledGraph> {
    require(n >= 4 && n.is_multiple_of(2), || {
        format!("irregular triangular snake needs an even n >= 4, got {n}")
    })?;
    let mut b = Builder::default();
    // index 0 unused so that u[i] is u_i
    let mut u = vec![usize::MAX];
    for i in 1..=n {
        u.push(b.vertex(format!("u{i}"), pow(2, i)?));
    }
    b.path(&u[1..]);
    let mut v = vec![usize::MAX; n + 1];
    for j in (1..=n - 3).step_by(2) {
        v[j] = b.vertex(format!("v{j}"), mul(5, pow(2, j)?)?);
        b.edge(u[j], v[j]);
        b.edge(v[j], u[j + 2]);
    }
    for k in (1..=n - 3).step_by(2) {
        if k + 2 <= n - 3 {
            let w = b.vertex(format!("w{k}"), mul(25, pow(2, k)?)?);
            b.edge(v[k], w);
            b.edge(w, v[k + 2]);
        } else {
            let w = b.vertex(format!("w{k}"), add(mul(5, pow(2, n - 3)?)?, pow(2, n)?)?);
            b.edge(v[k], w);
            b.edge(w, u[n]);
        }
    }
    b.finish()
}

/// `k` copies of `C_n` glued in a chain through cut vertices `u_{b(n-1)}`.
pub fn cn_snake(n: usize, k: usize) -> Result<LabeledGraph> {
    require(n >= 3, || format!("C_n snake needs n >= 3, got {n}"))?;
    require(k >= 1, || "C_n snake needs at least one block".into())?;
    let ratio = add(1, pow(2, n - 2)?)?;
    let last = mul_usize(k, n - 1)?;
    let mut b = Builder::default();
    let mut u = Vec::with_capacity(last + 1);
    for i in 0..=last {
        let label = mul(pow(2, i % (n - 1))?, pow(ratio, i / (n - 1))?)?;
        u.push(b.vertex(format!("u{i}"), label));
    }
    b.path(&u);
    for block in 0..k {
        b.edge(u[block * (n - 1)], u[(block + 1) * (n - 1)]);
    }
    b.finish()
}

/// Path `u_0..u_{kn}` in which every other edge is replaced by a `C_n`.
pub fn alternate_cn_snake(n: usize, k: usize) -> Result<LabeledGraph> {
    require(n >= 3, || format!("alternate C_n snake needs n >= 3, got {n}"))?;
    require(k >= 1, || "alternate C_n snake needs at least one cycle".into())?;
    let ratio = add(1, pow(2, n - 2)?)?;
    let last = mul_usize(k, n)?;
    let mut b = Builder::default();
    let mut u = Vec::with_capacity(last + 1);
    for i in 0..=last {
        let (q, j) = (i / n, i % n);
        let label = mul(pow(2, j + q)?, pow(ratio, q)?)?;
        u.push(b.vertex(format!("u{i}"), label));
    }
    for block in 1..=k {
        let start = (block - 1) * n;
        b.edge(u[start], u[start + 1]);
        b.path(&u[start + 1..=block * n]);
        b.edge(u[start + 1], u[block * n]);
    }
    b.finish()
}

fn mul_usize(a: usize, b: usize) -> Result<usize> {
    a.checked_mul(b).ok_or_else(|| overflow(&format!("{a} * {b}")))
}

/// Rooted tree whose `i`-th branch is a path of length `i`.
///
/// The labeling is only a difference labeling for `k <= 5`: from `k = 6` on,
/// `2 * 10^(i-1) + 8 * 10^(i-1) = 10^i` puts non-adjacent branch vertices at a
/// difference that is itself a label. The construction is returned as-is.
pub fn olive_tree(k: usize) -> Result<LabeledGraph> {
    require(k >= 1, || "olive tree needs at least one branch".into())?;
    let mut b = Builder::default();
    let root = b.vertex("root", 3);
    let first = b.vertex("v1", 6);
    b.edge(root, first);
    for i in 2..=k {
        let scale = pow(10, i - 1)?;
        let mut branch = vec![root, b.vertex(format!("v{i}"), add(3, scale)?)];
        for j in 1..i {
            branch.push(b.vertex(format!("v{i}_{j}"), mul(pow(2, j - 1)?, scale)?));
        }
        b.path(&branch);
    }
    b.finish()
}

/// Family names as used on the command line.
pub const FAMILY_NAMES: [&str; 10] = [
    "k3",
    "star",
    "butterfly",
    "bistar",
    "umbrella",
    "double_triangular_snake",
    "irregular_triangular_snake",
    "cn_snake",
    "alternate_cn_snake",
    "olive_tree",
];

/// A family together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    K3 { a: u64 },
    Star { n: usize, variant: StarVariant },
    Butterfly { n: usize, m: usize },
    Bistar { n: usize, m: usize },
    Umbrella { n: usize, m: usize },
    DoubleTriangularSnake { t: usize },
    IrregularTriangularSnake { n: usize },
    CnSnake { n: usize, k: usize },
    AlternateCnSnake { n: usize, k: usize },
    OliveTree { k: usize },
}

/// Loose parameter bag, filled from user input.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub a: Option<u64>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub t: Option<usize>,
    pub k: Option<usize>,
    pub variant: Option<StarVariant>,
}

fn need<T>(value: Option<T>, family: &str, param: &str) -> Result<T> {
    value.ok_or_else(|| Error::InvalidArgument(format!("family '{family}' needs --{param}")))
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::K3 { .. } => "k3",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Butterfly { .. } => "butterfly",
            FamilySpec::Bistar { .. } => "bistar",
            FamilySpec::Umbrella { .. } => "umbrella",
            FamilySpec::DoubleTriangularSnake { .. } => "double_triangular_snake",
            FamilySpec::IrregularTriangularSnake { .. } => "irregular_triangular_snake",
            FamilySpec::CnSnake { .. } => "cn_snake",
            FamilySpec::AlternateCnSnake { .. } => "alternate_cn_snake",
            FamilySpec::OliveTree { .. } => "olive_tree",
        }
    }

    pub fn build(&self) -> Result<LabeledGraph> {
        match *self {
            FamilySpec::K3 { a } => k3(a),
            FamilySpec::Star { n, variant } => star(n, variant),
            FamilySpec::Butterfly { n, m } => butterfly(n, m),
            FamilySpec::Bistar { n, m } => bistar(n, m),
            FamilySpec::Umbrella { n, m } => umbrella(n, m),
            FamilySpec::DoubleTriangularSnake { t } => double_triangular_snake(t),
            FamilySpec::IrregularTriangularSnake { n } => irregular_triangular_snake(n),
            FamilySpec::CnSnake { n, k } => cn_snake(n, k),
            FamilySpec::AlternateCnSnake { n, k } => alternate_cn_snake(n, k),
            FamilySpec::OliveTree { k } => olive_tree(k),
        }
    }

    /// Resolves a family name and its required parameters. Star variant defaults to A.
    pub fn from_params(name: &str, p: &FamilyParams) -> Result<Self> {
        Ok(match name {
            "k3" => FamilySpec::K3 {
                a: need(p.a, name, "a")?,
            },
            "star" => FamilySpec::Star {
                n: need(p.n, name, "n")?,
                variant: p.variant.unwrap_or(StarVariant::A),
            },
            "butterfly" => FamilySpec::Butterfly {
                n: need(p.n, name, "n")?,
                m: need(p.m, name, "m")?,
            },
            "bistar" => FamilySpec::Bistar {
                n: need(p.n, name, "n")?,
                m: need(p.m, name, "m")?,
            },
            "umbrella" => FamilySpec::Umbrella {
                n: need(p.n, name, "n")?,
                m: need(p.m, name, "m")?,
            },
            "double_triangular_snake" => FamilySpec::DoubleTriangularSnake {
                t: need(p.t, name, "t")?,
            },
            "irregular_triangular_snake" => FamilySpec::IrregularTriangularSnake {
                n: need(p.n, name, "n")?,
            },
            "cn_snake" => FamilySpec::CnSnake {
                n: need(p.n, name, "n")?,
                k: need(p.k, name, "k")?,
            },
            "alternate_cn_snake" => FamilySpec::AlternateCnSnake {
                n: need(p.n, name, "n")?,
                k: need(p.k, name, "k")?,
            },
            "olive_tree" => FamilySpec::OliveTree {
                k: need(p.k, name, "k")?,
            },
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown family '{other}' (expected one of {})",
                    FAMILY_NAMES.join(", ")
                )))
            }
        })
    }

    /// The parameter sweep every constructor is checked over.
    pub fn documented_grid() -> Vec<FamilySpec> {
        let mut grid = Vec::new();
        grid.extend((1..=10).map(|a| FamilySpec::K3 { a }));
        grid.extend((2..=20).map(|n| FamilySpec::Star {
            n,
            variant: StarVariant::A,
        }));
        grid.extend((2..=20).step_by(2).map(|n| FamilySpec::Star {
            n,
            variant: StarVariant::B,
        }));
        for n in 0..=10 {
            grid.extend((0..=10).map(|m| FamilySpec::Butterfly { n, m }));
        }
        for n in 1..=10 {
            grid.extend((1..=10).map(|m| FamilySpec::Bistar { n, m }));
        }
        for n in 2..=10 {
            grid.extend((1..=8).map(|m| FamilySpec::Umbrella { n, m }));
        }
        grid.extend((1..=8).map(|t| FamilySpec::DoubleTriangularSnake { t }));
        grid.extend((4..=12).step_by(2).map(|n| FamilySpec::IrregularTriangularSnake { n }));
        for n in 3..=8 {
            grid.extend((1..=4).map(|k| FamilySpec::CnSnake { n, k }));
        }
        for n in 3..=6 {
            grid.extend((1..=4).map(|k| FamilySpec::AlternateCnSnake { n, k }));
        }
        grid.extend((1..=8).map(|k| FamilySpec::OliveTree { k }));
        grid
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::K3 { a } => write!(f, "k3(a={a})"),
            FamilySpec::Star { n, variant } => write!(f, "star(n={n}, variant={variant})"),
            FamilySpec::Butterfly { n, m } => write!(f, "butterfly(n={n}, m={m})"),
            FamilySpec::Bistar { n, m } => write!(f, "bistar(n={n}, m={m})"),
            FamilySpec::Umbrella { n, m } => write!(f, "umbrella(n={n}, m={m})"),
            FamilySpec::DoubleTriangularSnake { t } => write!(f, "double_triangular_snake(t={t})"),
            FamilySpec::IrregularTriangularSnake { n } => write!(f, "irregular_triangular_snake(n={n})"),
            FamilySpec::CnSnake { n, k } => write!(f, "cn_snake(n={n}, k={k})"),
            FamilySpec::AlternateCnSnake { n, k } => write!(f, "alternate_cn_snake(n={n}, k={k})"),
            FamilySpec::OliveTree { k } => write!(f, "olive_tree(k={k})"),
        }
    }
}
