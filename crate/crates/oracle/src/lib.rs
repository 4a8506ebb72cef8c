//! Brute-force reference implementations, used only from test code.
//!
//! Everything here is written index-by-index from the defining formulas with
//! no shortcuts: the dense clique tensor with its 1/(r−1)! entries, the
//! literal tensor-vector product over all (r−1)-tuples, clique enumeration
//! by testing every r-subset, and an adjacency-matrix power iteration for
//! the r = 2 case. Deliberately slow, obviously correct, and independent of
//! the optimized paths it validates (only the graph and clique-set types are
//! shared).

use cliquetensor_core::{CliqueSet, Graph};

/// Fully materialized order-r tensor with n^r entries.
pub struct DenseTensor {
    pub r: usize,
    pub n: usize,
    /// Row-major over index tuples (i_1, …, i_r).
    pub entries: Vec<f64>,
}

impl DenseTensor {
    pub fn get(&self, idx: &[usize]) -> f64 {
        self.entries[self.offset(idx)]
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.r);
        idx.iter().fold(0, |acc, &i| {
            assert!(i < self.n);
            acc * self.n + i
        })
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0.0).count()
    }
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|v| v as f64).product()
}

/// Materializes the r-clique tensor: entry 1/(r−1)! at every index tuple
/// whose entries are distinct and pairwise adjacent, 0 elsewhere.
pub fn dense_clique_tensor(g: &Graph, r: usize) -> DenseTensor {
    let n = g.n();
    assert!(r >= 2);
    let size = n.checked_pow(r as u32).expect("n^r fits usize");
    assert!(size <= 10_000_000, "n^r guard exceeded: {n}^{r}");
    let value = 1.0 / factorial(r - 1);
    let mut entries = vec![0.0; size];
    let mut idx = vec![0usize; r];
    for (flat, e) in entries.iter_mut().enumerate() {
        let mut rem = flat;
        for k in (0..r).rev() {
            idx[k] = rem % n;
            rem /= n;
        }
        if is_clique_tuple(g, &idx) {
            *e = value;
        }
    }
    DenseTensor { r, n, entries }
}

fn is_clique_tuple(g: &Graph, idx: &[usize]) -> bool {
    for a in 0..idx.len() {
        for b in (a + 1)..idx.len() {
            if idx[a] == idx[b] || !g.has_edge(idx[a], idx[b]) {
                return false;
            }
        }
    }
    true
}

/// Literal tensor-vector product: `y_i = Σ_{i_2,…,i_r} a_{i i_2 ⋯ i_r}
/// x_{i_2} ⋯ x_{i_r}`, summing over every (r−1)-tuple.
pub fn dense_apply(t: &DenseTensor, x: &[f64]) -> Vec<f64> {
    assert_eq!(x.len(), t.n);
    let n = t.n;
    let r = t.r;
    let mut y = vec![0.0; n];
    let tuples = n.pow((r - 1) as u32);
    let mut idx = vec![0usize; r];
    for (i, yi) in y.iter_mut().enumerate() {
        idx[0] = i;
        for flat in 0..tuples {
            let mut rem = flat;
            let mut weight = 1.0;
            for k in (1..r).rev() {
                idx[k] = rem % n;
                rem /= n;
                weight *= x[idx[k]];
            }
            *yi += t.get(&idx) * weight;
        }
    }
    y
}

/// Enumerates r-cliques by testing every r-subset of the vertices.
pub fn brute_cliques(g: &Graph, r: usize) -> CliqueSet {
    let n = g.n();
    assert!(r >= 2);
    assert!(n <= 16 && r <= 5, "brute-force guard exceeded: n={n} r={r}");
    let mut tuples: Vec<Vec<u32>> = Vec::new();
    let mut subset: Vec<usize> = Vec::with_capacity(r);
    collect_subsets(g, r, 0, &mut subset, &mut tuples);
    CliqueSet::from_tuples(n, r, &tuples).expect("brute tuples are canonical")
}

fn collect_subsets(
    g: &Graph,
    r: usize,
    from: usize,
    subset: &mut Vec<usize>,
    out: &mut Vec<Vec<u32>>,
) {
    if subset.len() == r {
        if subset
            .iter()
            .enumerate()
            .all(|(a, &u)| subset[a + 1..].iter().all(|&v| g.has_edge(u, v)))
        {
            out.push(subset.iter().map(|&v| v as u32).collect());
        }
        return;
    }
    for v in from..g.n() {
        subset.push(v);
        collect_subsets(g, r, v + 1, subset, out);
        subset.pop();
    }
}

/// Spectral radius of the ordinary adjacency matrix, by matrix power
/// iteration per connected component with the same bracket convergence rule
/// as the tensor engine. Validates the r = 2 path.
pub fn matrix_power_radius(g: &Graph) -> f64 {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut best = 0.0f64;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // collect the connected component by breadth-first search
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        if comp.len() > 1 {
            best = best.max(component_matrix_radius(g, &comp));
        }
    }
    best
}

fn component_matrix_radius(g: &Graph, comp: &[usize]) -> f64 {
    let m = comp.len();
    let mut local = vec![vec![0.0f64; m]; m];
    for (a, &u) in comp.iter().enumerate() {
        for (b, &v) in comp.iter().enumerate() {
            if g.has_edge(u, v) {
                local[a][b] = 1.0;
            }
        }
    }
    let shift = 1.0;
    let mut x = vec![(m as f64).sqrt().recip(); m];
    for _ in 0..100_000 {
        let mut y = vec![0.0f64; m];
        for a in 0..m {
            for b in 0..m {
                y[a] += local[a][b] * x[b];
            }
            y[a] += shift * x[a];
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for a in 0..m {
            let ratio = y[a] / x[a];
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        if hi - lo <= 1e-12 * hi {
            return 0.5 * (lo + hi) - shift;
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for v in &mut y {
            *v /= norm;
        }
        x = y;
    }
    panic!("matrix power iteration failed to converge on {m} vertices");
}

#[cfg(test)]
mod tests {
    use super::*;
    use cliquetensor_core::{turan_graph, Graph};

    #[test]
    fn dense_k3_triangle_tensor() {
        let t = dense_clique_tensor(&Graph::complete(3), 3);
        assert_eq!(t.nonzero_count(), 6);
        assert_eq!(t.get(&[0, 1, 2]), 0.5);
        assert_eq!(t.get(&[2, 0, 1]), 0.5);
        assert_eq!(t.get(&[0, 0, 1]), 0.0);
    }

    #[test]
    fn dense_k2_is_adjacency_matrix() {
        let t = dense_clique_tensor(&Graph::complete(2), 2);
        assert_eq!(t.nonzero_count(), 2);
        assert_eq!(t.get(&[0, 1]), 1.0);
        assert_eq!(t.get(&[1, 0]), 1.0);
        let y = dense_apply(&t, &[3.0, 5.0]);
        assert_eq!(y, vec![5.0, 3.0]);
    }

    #[test]
    fn dense_path_has_no_triangles() {
        let p3 = Graph::from_edges(3, vec![(0, 1), (1, 2)]);
        let t = dense_clique_tensor(&p3, 3);
        assert_eq!(t.nonzero_count(), 0);
        assert_eq!(dense_apply(&t, &[1.0, 2.0, 3.0]), vec![0.0; 3]);
    }

    #[test]
    fn brute_cliques_examples() {
        assert_eq!(brute_cliques(&Graph::complete(6), 4).count(), 15);
        let petersen = Graph::from_edges(
            10,
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        );
        assert_eq!(brute_cliques(&petersen, 3).count(), 0);
    }

    #[test]
    fn matrix_radius_examples() {
        let k23 = turan_graph(5, 2).unwrap();
        assert!((matrix_power_radius(&k23) - 6f64.sqrt()).abs() < 1e-10);
        let c5 = Graph::from_edges(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!((matrix_power_radius(&c5) - 2.0).abs() < 1e-10);
        assert_eq!(matrix_power_radius(&Graph::empty(1)), 0.0);
    }
}
