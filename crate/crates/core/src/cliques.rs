//! Enumeration of all r-cliques of a graph in lexicographic order.
//!
//! The sorted clique list is the implicit r-clique tensor: the tensor value
//! 1/(r-1)! at each index permutation of a clique cancels against the
//! (r-1)! permutations, so downstream formulas weight each clique once per
//! incident vertex and the tensor itself is never materialized.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::unionfind::UnionFind;

/// All r-cliques of a graph, canonically ordered, plus a per-vertex index.
#[derive(Clone, Debug)]
pub struct CliqueSet {
    r: usize,
    n: usize,
    /// Flat tuple storage, `r` vertex ids per clique, each tuple strictly
    /// increasing, tuples in lexicographic order.
    flat: Vec<u32>,
    /// `per_vertex[v]` lists the indices of the cliques containing `v`.
    per_vertex: Vec<Vec<u32>>,
}

impl CliqueSet {
    pub(crate) fn from_flat(n: usize, r: usize, flat: Vec<u32>) -> Self {
        debug_assert_eq!(flat.len() % r, 0);
        let mut per_vertex = vec![Vec::new(); n];
        for (idx, tuple) in flat.chunks_exact(r).enumerate() {
            debug_assert!(tuple.windows(2).all(|w| w[0] < w[1]));
            for &v in tuple {
                per_vertex[v as usize].push(idx as u32);
            }
        }
        CliqueSet {
            r,
            n,
            flat,
            per_vertex,
        }
    }

    /// Builds a CliqueSet from explicit tuples, canonicalizing the order.
    /// Each tuple must be strictly increasing and within range; duplicates
    /// are rejected. Callers are responsible for the tuples actually being
    /// cliques of whatever graph they have in mind.
    pub fn from_tuples(n: usize, r: usize, tuples: &[Vec<u32>]) -> Result<Self> {
        assert!(r >= 2, "clique size must be at least 2");
        let mut sorted: Vec<&Vec<u32>> = tuples.iter().collect();
        for t in &sorted {
            if t.len() != r {
                return Err(Error::Unsupported(format!(
                    "tuple of length {} in a {r}-clique set",
                    t.len()
                )));
            }
            if !t.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::Unsupported(format!(
                    "tuple {t:?} is not strictly increasing"
                )));
            }
            if let Some(&v) = t.iter().find(|&&v| v as usize >= n) {
                return Err(Error::VertexOutOfRange { v: v as usize, n });
            }
        }
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Unsupported("duplicate clique tuple".into()));
        }
        let mut flat = Vec::with_capacity(sorted.len() * r);
        for t in sorted {
            flat.extend_from_slice(t);
        }
        Ok(Self::from_flat(n, r, flat))
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of cliques, c_r(G).
    #[inline]
    pub fn count(&self) -> usize {
        self.flat.len() / self.r
    }

    #[inline]
    pub fn clique(&self, idx: usize) -> &[u32] {
        &self.flat[idx * self.r..(idx + 1) * self.r]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.flat.chunks_exact(self.r)
    }

    /// Number of r-cliques containing `v`: the v-th row sum of the r-clique
    /// tensor.
    pub fn clique_degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(self.per_vertex[v].len())
    }

    /// Clique indices containing `v`.
    pub fn cliques_of(&self, v: usize) -> &[u32] {
        &self.per_vertex[v]
    }

    /// Minimum and maximum clique degree over all vertices (Yang row-sum
    /// bounds on the spectral radius). `(0, 0)` for an empty set on n = 0.
    pub fn degree_range(&self) -> (usize, usize) {
        let mut lo = usize::MAX;
        let mut hi = 0;
        for v in 0..self.n {
            let d = self.per_vertex[v].len();
            lo = lo.min(d);
            hi = hi.max(d);
        }
        if lo == usize::MAX {
            (0, 0)
        } else {
            (lo, hi)
        }
    }

    /// True iff every vertex lies in the same number of r-cliques.
    pub fn is_clique_regular(&self) -> bool {
        let (lo, hi) = self.degree_range();
        lo == hi
    }
}

/// Enumerates all r-cliques by ordered extension: each vertex `v` is extended
/// only within its neighborhood restricted to higher-numbered vertices, so
/// every clique is emitted exactly once, in lexicographic order.
pub fn enumerate_cliques(g: &Graph, r: usize) -> CliqueSet {
    assert!(r >= 2, "clique size must be at least 2");
    let n = g.n();
    if r > n {
        return CliqueSet::from_flat(n, r, Vec::new());
    }
    let mut flat: Vec<u32> = Vec::new();
    if r == 2 {
        for (u, v) in g.edges() {
            flat.push(u as u32);
            flat.push(v as u32);
        }
        return CliqueSet::from_flat(n, r, flat);
    }
    let mut prefix: Vec<u32> = Vec::with_capacity(r);
    let mut bufs: Vec<BitSet> = vec![BitSet::new(n); r - 1];
    for v in 0..n {
        bufs[0].copy_from(g.row(v));
        bufs[0].truncate_through(v);
        prefix.push(v as u32);
        extend(g, r, &mut prefix, &mut bufs, 0, &mut flat);
        prefix.pop();
    }
    CliqueSet::from_flat(n, r, flat)
}

fn extend(
    g: &Graph,
    r: usize,
    prefix: &mut Vec<u32>,
    bufs: &mut [BitSet],
    depth: usize,
    flat: &mut Vec<u32>,
) {
    let need = r - prefix.len();
    if bufs[depth].count_ones() < need {
        return;
    }
    if need == 1 {
        for u in bufs[depth].iter_ones() {
            flat.extend_from_slice(prefix);
            flat.push(u as u32);
        }
        return;
    }
    let cand: Vec<usize> = bufs[depth].iter_ones().collect();
    for u in cand {
        let (head, tail) = bufs.split_at_mut(depth + 1);
        tail[0].assign_and(&head[depth], g.row(u));
        tail[0].truncate_through(u);
        prefix.push(u as u32);
        extend(g, r, prefix, bufs, depth + 1, flat);
        prefix.pop();
    }
}

/// Vertex classes of the r-clique walk relation, plus the vertices lying in
/// no r-clique. The graph is r-clique connected iff there is exactly one
/// class and no clique-isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueComponents {
    /// Each class sorted ascending; classes ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    /// Vertices in no r-clique, ascending.
    pub isolated: Vec<usize>,
}

impl CliqueComponents {
    pub fn is_clique_connected(&self) -> bool {
        self.classes.len() == 1 && self.isolated.is_empty()
    }
}

/// Union-find over vertices where every clique merges all its members.
pub fn clique_components(cs: &CliqueSet) -> CliqueComponents {
    let n = cs.n();
    let mut uf = UnionFind::new(n);
    for tuple in cs.iter() {
        let first = tuple[0] as usize;
        for &v in &tuple[1..] {
            uf.union(first, v as usize);
        }
    }
    let mut class_of_root: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut isolated = Vec::new();
    for v in 0..n {
        if cs.cliques_of(v).is_empty() {
            isolated.push(v);
            continue;
        }
        let root = uf.find(v);
        match class_of_root[root] {
            Some(c) => classes[c].push(v),
            None => {
                class_of_root[root] = Some(classes.len());
                classes.push(vec![v]);
            }
        }
    }
    CliqueComponents { classes, isolated }
}
