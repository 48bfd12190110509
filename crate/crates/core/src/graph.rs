//! Finite simple graphs on 1-indexed vertices, and vertex labelings.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::blade::{Blade, MAX_GENERATORS};
use crate::error::{Result, ZeonError};

/// Simple undirected graph with vertices `1..=m`, `m ≤ 64`. Adjacency is
/// stored as one neighbor mask per vertex in [`Blade`] bit layout.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    m: usize,
    adj: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    m: usize,
    edges: Vec<[usize; 2]>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            m: g.m,
            edges: g.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = ZeonError;
    fn try_from(r: GraphRepr) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = r.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(r.m, &edges)
    }
}

impl Graph {
    /// Edgeless graph on `m` vertices.
    pub fn empty(m: usize) -> Result<Graph> {
        if m > MAX_GENERATORS {
            return Err(ZeonError::TooLarge {
                what: "vertex count",
                value: m,
                limit: MAX_GENERATORS,
            });
        }
        Ok(Graph { m, adj: vec![0; m] })
    }

    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(m)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn complete(m: usize) -> Graph {
        let mut g = Graph::empty(m).expect("m <= 64");
        for i in 1..=m {
            for j in i + 1..=m {
                g.insert(i, j);
            }
        }
        g
    }

    pub fn path(m: usize) -> Graph {
        let mut g = Graph::empty(m).expect("m <= 64");
        for i in 1..m {
            g.insert(i, i + 1);
        }
        g
    }

    pub fn cycle(m: usize) -> Graph {
        let mut g = Graph::path(m);
        if m >= 3 {
            g.insert(1, m);
        }
        g
    }

    pub fn star(m: usize) -> Graph {
        let mut g = Graph::empty(m).expect("m <= 64");
        for i in 2..=m {
            g.insert(1, i);
        }
        g
    }

    fn insert(&mut self, i: usize, j: usize) {
        self.adj[i - 1] |= 1 << (j - 1);
        self.adj[j - 1] |= 1 << (i - 1);
    }

    /// Rejects loops, out-of-range vertices and repeated edges.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v == 0 || v > self.m {
                return Err(ZeonError::InvalidGraph(format!(
                    "vertex {v} outside 1..={}",
                    self.m
                )));
            }
        }
        if i == j {
            return Err(ZeonError::InvalidGraph(format!("loop at vertex {i}")));
        }
        if self.has_edge(i, j) {
            return Err(ZeonError::InvalidGraph(format!("duplicate edge {{{i},{j}}}")));
        }
        self.insert(i, j);
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i - 1] & (1 << (j - 1)) != 0
    }

    /// Neighbor set of `v` as a blade mask.
    pub fn neighborhood(&self, v: usize) -> Blade {
        Blade(self.adj[v - 1])
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        self.neighborhood(v).indices()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (1..=self.m).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.m)
            .flat_map(|i| self.neighbors(i).filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    /// Vertex `v` of the result is vertex `perm[v − 1]` of `self`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut inv = vec![0; self.m];
        for (new, &old) in perm.iter().enumerate() {
            inv[old - 1] = new + 1;
        }
        let mut g = Graph::empty(self.m).expect("same size");
        for (i, j) in self.edges() {
            g.insert(inv[i - 1], inv[j - 1]);
        }
        g
    }

    /// Edge mask over the pairs `(i, j)`, `i < j`, in [`edges`](Self::edges)
    /// enumeration order.
    fn pair_mask(&self) -> u64 {
        let mut mask = 0u64;
        let mut bit = 0;
        for i in 1..=self.m {
            for j in i + 1..=self.m {
                if self.has_edge(i, j) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    /// Minimal pair mask over all vertex relabelings; equal exactly for
    /// isomorphic graphs. Intended for `m ≤ 8`.
    pub fn canonical_form(&self) -> u64 {
        let mut perm: Vec<usize> = (1..=self.m).collect();
        let mut best = u64::MAX;
        permute(&mut perm, 0, &mut |p| best = best.min(self.relabel(p).pair_mask()));
        best
    }

    /// Every graph on vertex set `1..=m` (`2^{m(m−1)/2}` of them).
    pub fn all_labeled(m: usize) -> impl Iterator<Item = Graph> {
        assert!(m <= 8, "labeled enumeration limited to m <= 8");
        let pairs: Vec<(usize, usize)> = (1..=m)
            .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
            .collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let mut g = Graph::empty(m).expect("m <= 8");
            for (bit, &(i, j)) in pairs.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    g.insert(i, j);
                }
            }
            g
        })
    }

    /// One representative per isomorphism class on `m` vertices.
    pub fn non_isomorphic(m: usize) -> Vec<Graph> {
        let mut seen = std::collections::BTreeMap::new();
        for g in Graph::all_labeled(m) {
            seen.entry(g.canonical_form()).or_insert(g);
        }
        seen.into_values().collect()
    }

    /// Erdős–Rényi `G(m, p)` from a seed.
    pub fn random(m: usize, p: f64, seed: u64) -> Result<Graph> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::empty(m)?;
        for i in 1..=m {
            for j in i + 1..=m {
                if rng.gen_bool(p) {
                    g.insert(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Parses the edge-list text format: `#` comments, an optional `p m`
    /// header, then one `i j` pair per line.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut declared: Option<usize> = None;
        let mut edges = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| ZeonError::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields[0] == "p" {
                if declared.is_some() || !edges.is_empty() {
                    return Err(err("header must come first".into()));
                }
                let [_, m] = fields[..] else {
                    return Err(err("expected `p m`".into()));
                };
                declared = Some(m.parse().map_err(|_| err(format!("bad vertex count `{m}`")))?);
                continue;
            }
            let [a, b] = fields[..] else {
                return Err(err(format!("expected `i j`, found `{line}`")));
            };
            let parse_vertex = |s: &str| -> Result<usize> {
                match s.parse::<usize>() {
                    Ok(0) => Err(err("vertices are numbered from 1".into())),
                    Ok(v) => Ok(v),
                    Err(_) => Err(err(format!("bad vertex `{s}`"))),
                }
            };
            edges.push((line_no, parse_vertex(a)?, parse_vertex(b)?));
        }
        let implied = edges.iter().map(|&(_, i, j)| i.max(j)).max().unwrap_or(0);
        let m = declared.unwrap_or(implied);
        let mut g = Graph::empty(m)?;
        for (line, i, j) in edges {
            g.add_edge(i, j).map_err(|e| ZeonError::Parse {
                line,
                message: e.to_string(),
            })?;
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p {}\n", self.m);
        for (i, j) in self.edges() {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(m={}, edges={:?})", self.m, self.edges())
    }
}

impl FromStr for Graph {
    type Err = ZeonError;
    fn from_str(s: &str) -> Result<Graph> {
        Graph::parse(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Degree,
    F,
    Q,
}

/// Diagonal entries of a Laplacian: vertex degrees, an `f`-labeling by
/// distinct positive integers, or a `q`-labeling by distinct positive
/// rationals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Labeling {
    pub kind: LabelKind,
    pub values: Vec<f64>,
}

impl Labeling {
    pub fn degree(g: &Graph) -> Labeling {
        Labeling {
            kind: LabelKind::Degree,
            values: g.degrees().into_iter().map(|d| d as f64).collect(),
        }
    }

    /// `fᵢ = i`.
    pub fn identity_f(m: usize) -> Labeling {
        Labeling {
            kind: LabelKind::F,
            values: (1..=m).map(|i| i as f64).collect(),
        }
    }

    /// `qᵢ = i`.
    pub fn identity_q(m: usize) -> Labeling {
        Labeling {
            kind: LabelKind::Q,
            values: (1..=m).map(|i| i as f64).collect(),
        }
    }

    pub fn f(values: Vec<f64>) -> Result<Labeling> {
        if let Some(v) = values.iter().find(|v| v.fract() != 0.0 || **v < 1.0) {
            return Err(ZeonError::DuplicateLabels(format!(
                "f-label {v} is not a positive integer"
            )));
        }
        Labeling::distinct(LabelKind::F, values)
    }

    pub fn q(values: Vec<f64>) -> Result<Labeling> {
        if let Some(v) = values.iter().find(|v| v.is_nan() || **v <= 0.0 || v.is_infinite()) {
            return Err(ZeonError::DuplicateLabels(format!("q-label {v} is not positive")));
        }
        Labeling::distinct(LabelKind::Q, values)
    }

    fn distinct(kind: LabelKind, values: Vec<f64>) -> Result<Labeling> {
        for (a, x) in values.iter().enumerate() {
            if let Some(b) = values[a + 1..].iter().position(|y| y == x) {
                return Err(ZeonError::DuplicateLabels(format!(
                    "vertices {} and {} share label {x}",
                    a + 1,
                    a + b + 2
                )));
            }
        }
        Ok(Labeling { kind, values })
    }

    /// Parses `degree`, `auto`, `f:1,2,…` or `q:…` against `g`.
    pub fn parse(spec: &str, g: &Graph) -> Result<Labeling> {
        let list = |body: &str| -> Result<Vec<f64>> {
            let values = body
                .split(',')
                .map(|s| {
                    let s = s.trim();
                    parse_rational(s).ok_or_else(|| ZeonError::Parse {
                        line: 0,
                        message: format!("bad label `{s}`"),
                    })
                })
                .collect::<Result<Vec<f64>>>()?;
            if values.len() != g.m() {
                return Err(ZeonError::DimMismatch {
                    expected: g.m(),
                    found: values.len(),
                });
            }
            Ok(values)
        };
        match spec.trim() {
            "degree" => Ok(Labeling::degree(g)),
            "auto" => Ok(Labeling::identity_f(g.m())),
            s if s.starts_with("f:") => Labeling::f(list(&s[2..])?),
            s if s.starts_with("q:") => Labeling::q(list(&s[2..])?),
            s => Err(ZeonError::Parse {
                line: 0,
                message: format!("unknown labeling `{s}`"),
            }),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Label of vertex `v` (1-indexed).
    pub fn value(&self, v: usize) -> f64 {
        self.values[v - 1]
    }

    pub fn is_unique(&self, v: usize) -> bool {
        let x = self.value(v);
        self.values.iter().filter(|&&y| y == x).count() == 1
    }

    pub fn require_unique(&self, v: usize) -> Result<()> {
        if self.is_unique(v) {
            Ok(())
        } else {
            Err(ZeonError::NotUniqueLabel(v))
        }
    }
}

fn parse_rational(s: &str) -> Option<f64> {
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (f64, f64) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
            (b != 0.0).then_some(a / b)
        }
        None => s.parse().ok(),
    }
}
