//! Undirected simple graphs over vertex set `{0..n-1}`, with edge-list I/O
//! and the generators used throughout the crate.
//!
//! Adjacency is stored as one packed bit row per vertex so clique enumeration
//! can intersect neighborhoods word by word.

use std::io::{BufRead, Write};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Immutable undirected simple graph.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    rows: Vec<BitSet>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![BitSet::new(n); n],
            edge_count: 0,
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Builds a graph from an edge iterator. Duplicate edges collapse;
    /// self-loops panic (use [`parse_edge_list`] for fallible input).
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            assert!(u != v, "self-loop ({u},{u})");
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n = {n}");
            g.insert_edge(u, v);
        }
        g
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        if !self.rows[u].contains(v) {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
            self.edge_count += 1;
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && self.rows[u].contains(v)
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones()
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter_ones()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.rows[u]
                .iter_ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Searches for a clique on `k` vertices, returning the lexicographically
    /// first one found. Depth-first ordered extension with early exit.
    pub fn find_clique(&self, k: usize) -> Option<Vec<usize>> {
        if k == 0 {
            return Some(Vec::new());
        }
        if k == 1 {
            return (self.n > 0).then(|| vec![0]);
        }
        if k > self.n {
            return None;
        }
        let mut prefix = Vec::with_capacity(k);
        let mut bufs: Vec<BitSet> = vec![BitSet::new(self.n); k];
        for v in 0..self.n {
            bufs[0].copy_from(&self.rows[v]);
            bufs[0].truncate_through(v);
            prefix.push(v);
            if self.extend_clique(k, &mut prefix, &mut bufs, 0) {
                return Some(prefix);
            }
            prefix.pop();
        }
        None
    }

    fn extend_clique(
        &self,
        k: usize,
        prefix: &mut Vec<usize>,
        bufs: &mut [BitSet],
        depth: usize,
    ) -> bool {
        let need = k - prefix.len();
        if need == 0 {
            return true;
        }
        if bufs[depth].count_ones() < need {
            return false;
        }
        if need == 1 {
            let u = bufs[depth].iter_ones().next().expect("nonempty candidates");
            prefix.push(u);
            return true;
        }
        let cand: Vec<usize> = bufs[depth].iter_ones().collect();
        for u in cand {
            let (head, tail) = bufs.split_at_mut(depth + 1);
            tail[0].assign_and(&head[depth], &self.rows[u]);
            tail[0].truncate_through(u);
            prefix.push(u);
            if self.extend_clique(k, prefix, bufs, depth + 1) {
                return true;
            }
            prefix.pop();
        }
        false
    }
}

/// True iff `g` contains no clique on `k` vertices.
pub fn is_clique_free(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "k must be positive");
    g.find_clique(k).is_none()
}

/// Part sizes of a complete multipartite graph, kept sorted nondecreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartiteSpec {
    sizes: Vec<usize>,
}

impl PartiteSpec {
    pub fn new(mut sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidPartiteSpec("no parts".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidPartiteSpec("part size 0".into()));
        }
        sizes.sort_unstable();
        Ok(PartiteSpec { sizes })
    }

    /// Turán part sizes: `floor((n+s)/r)` for `s = 0..r-1`. They differ by at
    /// most one and sum to `n`.
    pub fn turan(n: usize, r: usize) -> Result<Self> {
        if r == 0 || r > n {
            return Err(Error::RExceedsN { r, n });
        }
        Ok(PartiteSpec {
            sizes: (0..r).map(|s| (n + s) / r).collect(),
        })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn r(&self) -> usize {
        self.sizes.len()
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }
}

/// Complete multipartite graph: vertices in consecutive blocks of the given
/// sizes, an edge between every pair of vertices in different blocks.
pub fn complete_multipartite(spec: &PartiteSpec) -> Graph {
    let n = spec.total();
    let mut block = vec![0usize; n];
    let mut v = 0;
    for (b, &size) in spec.sizes().iter().enumerate() {
        for _ in 0..size {
            block[v] = b;
            v += 1;
        }
    }
    Graph::from_edges(
        n,
        (0..n).flat_map(|u| {
            let block = &block;
            (u + 1..n).filter_map(move |w| (block[u] != block[w]).then_some((u, w)))
        }),
    )
}

/// The r-partite Turán graph T_r(n).
pub fn turan_graph(n: usize, r: usize) -> Result<Graph> {
    Ok(complete_multipartite(&PartiteSpec::turan(n, r)?))
}

/// G(n, p) with a counter-based generator: each unordered pair draws its own
/// uniform value from (seed, i, j), so the result does not depend on
/// iteration order.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "p must lie in [0, 1]");
    Graph::from_edges(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(
            |&(u, v)| pair_uniform(seed, u as u64, v as u64) < p,
        ),
    )
}

/// splitmix64 finalizer; full-period mixing of a 64-bit counter.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn pair_uniform(seed: u64, i: u64, j: u64) -> f64 {
    let h = splitmix64(splitmix64(seed ^ splitmix64(i.wrapping_add(1))) ^ splitmix64(j.wrapping_add(0x517c_c1b7_2722_0a95)));
    (h >> 11) as f64 / (1u64 << 53) as f64
}

/// Parses the edge-list format: `#` comments, optional leading `n <N>`
/// header, then one `<u> <v>` pair per non-empty line. Duplicate edges
/// collapse silently; the vertex count is the larger of the header value and
/// `1 + max vertex id`.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut header_n: usize = 0;
    let mut saw_content = false;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_vertex: Option<usize> = None;

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: lineno,
            msg: e.to_string(),
        })?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !saw_content && tokens[0] == "n" {
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "header must be \"n <N>\"".into(),
                });
            }
            header_n = parse_token(tokens[1], lineno)?;
            saw_content = true;
            continue;
        }
        saw_content = true;
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected two vertex ids, got {} tokens", tokens.len()),
            });
        }
        let u: usize = parse_token(tokens[0], lineno)?;
        let v: usize = parse_token(tokens[1], lineno)?;
        if u == v {
            return Err(Error::SelfLoop { line: lineno });
        }
        max_vertex = Some(max_vertex.map_or(u.max(v), |m| m.max(u.max(v))));
        edges.push((u, v));
    }

    let n = header_n.max(max_vertex.map_or(0, |m| m + 1));
    Ok(Graph::from_edges(n, edges))
}

fn parse_token(tok: &str, lineno: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line: lineno,
        msg: format!("non-integer token {tok:?}"),
    })
}

/// Writes the edge-list format: `n <N>` header, then edges with `u < v`
/// sorted lexicographically. Inverse of [`parse_edge_list`] on the edge set.
pub fn emit_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "n {}", g.n())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

/// Edge list as a string; handy for error reports and tests.
pub fn edge_list_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    emit_edge_list(g, &mut buf).expect("write to Vec cannot fail");
    String::from_utf8(buf).expect("edge list is ASCII")
}
