//! Turán-type bounds for the r-clique spectral radius: the clique-count
//! bound `c_r(G) ≤ (n/r)·ρ_r(G)`, the comparison against the Turán graph for
//! K_{r+1}-free graphs, the Erdős clique count `c_r(T_r(n))`, and the scan
//! harness that verifies both over exhaustive or sampled graph families.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::cliques::{enumerate_cliques, CliqueSet};
use crate::error::{Error, Result};
use crate::graph::{edge_list_string, is_clique_free, random_graph, turan_graph, Graph};
use crate::spectral::{spectral_radius_of, SolverOptions, SpectralResult};

/// Absolute tolerance for flagging equality between `c_r` and the real
/// counting bound; solver error is ~1e-10 amplified by n/r at desk scale.
pub const EQ_TOL: f64 = 1e-6;

/// Slack allowed when asserting the Turán comparison on computed radii.
pub const MANTEL_TOL: f64 = 1e-8;

/// Counting-bound fragment: everything derived from `c_r` and `ρ_r` alone.
#[derive(Clone, Debug)]
pub struct CountBound {
    pub n: usize,
    pub r: usize,
    pub c_r: u64,
    pub rho_r: f64,
    /// `(n/r) · rho_r`.
    pub bound_real: f64,
    /// Tolerance-aware floor of `bound_real`, so solver error below the
    /// theorem slack cannot drop an exact integer bound.
    pub bound_floor: u64,
    /// `|c_r − bound_real| ≤ EQ_TOL`.
    pub equality: bool,
    pub clique_regular: bool,
    pub yang_lo: u64,
    pub yang_hi: u64,
    pub is_clique_connected: bool,
}

/// Turán-comparison fragment.
#[derive(Clone, Debug)]
pub struct MantelCheck {
    pub n: usize,
    pub r: usize,
    /// The theorem hypothesis: G is K_{r+1}-free (and T_r(n) exists).
    pub applicable: bool,
    pub rho_r: f64,
    pub turan_rho: Option<f64>,
    /// `rho_r ≤ turan_rho + MANTEL_TOL`; None when not applicable.
    pub satisfied: Option<bool>,
    /// `turan_rho − rho_r`; None when not applicable.
    pub gap: Option<f64>,
}

/// All bounds evaluated for one (graph, r) pair.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub n: usize,
    pub r: usize,
    pub c_r: u64,
    pub rho_r: f64,
    pub count_bound_real: f64,
    pub count_bound_floor: u64,
    pub count_equality: bool,
    pub clique_regular: bool,
    pub yang_lo: u64,
    pub yang_hi: u64,
    pub is_clique_connected: bool,
    pub is_kr1_free: bool,
    pub turan_rho: Option<f64>,
    pub mantel_satisfied: Option<bool>,
    pub mantel_gap: Option<f64>,
    pub erdos_bound: u64,
}

fn count_bound_of(cs: &CliqueSet, res: &SpectralResult) -> CountBound {
    let n = cs.n();
    let r = cs.r();
    let c_r = cs.count() as u64;
    let rho_r = res.rho;
    let bound_real = n as f64 / r as f64 * rho_r;
    let slack = 1e-9 * rho_r.max(1.0);
    let bound_floor = (bound_real + slack).floor().max(0.0) as u64;
    let (yang_lo, yang_hi) = cs.degree_range();
    CountBound {
        n,
        r,
        c_r,
        rho_r,
        bound_real,
        bound_floor,
        equality: (c_r as f64 - bound_real).abs() <= EQ_TOL,
        clique_regular: cs.is_clique_regular(),
        yang_lo: yang_lo as u64,
        yang_hi: yang_hi as u64,
        is_clique_connected: res.is_clique_connected,
    }
}

fn mantel_check_of(g: &Graph, cs: &CliqueSet, res: &SpectralResult) -> MantelCheck {
    let n = cs.n();
    let r = cs.r();
    let free = is_clique_free(g, r + 1);
    let turan = (r <= n).then(|| crate::spectral::turan_rho(n, r).expect("r <= n"));
    let applicable = free && turan.is_some();
    MantelCheck {
        n,
        r,
        applicable,
        rho_r: res.rho,
        turan_rho: turan,
        satisfied: applicable.then(|| res.rho <= turan.unwrap() + MANTEL_TOL),
        gap: applicable.then(|| turan.unwrap() - res.rho),
    }
}

/// Evaluates the counting bound `c_r(G) ≤ (n/r)·ρ_r(G)` on `g`.
pub fn count_bound(g: &Graph, r: usize, opts: &SolverOptions) -> CountBound {
    let cs = enumerate_cliques(g, r);
    let res = spectral_radius_of(&cs, opts);
    count_bound_of(&cs, &res)
}

/// Tests the Turán comparison `ρ_r(G) ≤ ρ_r(T_r(n))` when G is K_{r+1}-free.
pub fn mantel_check(g: &Graph, r: usize, opts: &SolverOptions) -> MantelCheck {
    let cs = enumerate_cliques(g, r);
    let res = spectral_radius_of(&cs, opts);
    mantel_check_of(g, &cs, &res)
}

/// Full bound report; enumerates and solves once.
pub fn bound_report(g: &Graph, r: usize, opts: &SolverOptions) -> BoundReport {
    let cs = enumerate_cliques(g, r);
    let res = spectral_radius_of(&cs, opts);
    let cb = count_bound_of(&cs, &res);
    let mc = mantel_check_of(g, &cs, &res);
    BoundReport {
        n: cb.n,
        r: cb.r,
        c_r: cb.c_r,
        rho_r: cb.rho_r,
        count_bound_real: cb.bound_real,
        count_bound_floor: cb.bound_floor,
        count_equality: cb.equality,
        clique_regular: cb.clique_regular,
        yang_lo: cb.yang_lo,
        yang_hi: cb.yang_hi,
        is_clique_connected: cb.is_clique_connected,
        is_kr1_free: mc.applicable || is_clique_free(g, r + 1),
        turan_rho: mc.turan_rho,
        mantel_satisfied: mc.satisfied,
        mantel_gap: mc.gap,
        erdos_bound: erdos_count(cb.n as u64, cb.r as u64),
    }
}

/// Number of r-cliques of the Turán graph: `Π_{s=0}^{r−1} ⌊(n+s)/r⌋` when
/// `r ≤ n`, else 0. Each r-clique of T_r(n) picks one vertex per part.
pub fn erdos_count(n: u64, r: u64) -> u64 {
    assert!(r >= 1, "r must be positive");
    if r > n {
        return 0;
    }
    (0..r)
        .map(|s| (n + s) / r)
        .try_fold(1u64, |acc, f| acc.checked_mul(f))
        .expect("clique count overflows u64")
}

/// The two ends of the implication chain at (n, r): the floored spectral
/// bound and the Erdős count, with their equality flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImplicationGap {
    /// `⌊(n/r) · ρ_r(T_r(n))⌋`, computed exactly in integers.
    pub floor_bound: u64,
    /// `c_r(T_r(n))`.
    pub erdos: u64,
    /// Guaranteed true when r divides n.
    pub exact: bool,
}

/// Computes `⌊(n/r)·(Π parts)^{(r−1)/r}⌋` exactly: the floor is the largest
/// k with `(k·r)^r ≤ n^r · P^{r−1}`, checked in big integers so floating
/// point can never misplace an integer-valued bound.
pub fn implication_gap(n: u64, r: u64) -> Result<ImplicationGap> {
    if r < 1 || r > n {
        return Err(Error::RExceedsN {
            r: r as usize,
            n: n as usize,
        });
    }
    let p = erdos_count(n, r);
    let rhs = BigUint::from(n).pow(r as u32) * BigUint::from(p).pow(r as u32 - 1);
    let below = |k: u64| (BigUint::from(k) * BigUint::from(r)).pow(r as u32) <= rhs;

    let guess = n as f64 / r as f64 * (p as f64).powf((r as f64 - 1.0) / r as f64);
    let mut k = guess.floor().max(0.0) as u64;
    while k > 0 && !below(k) {
        k -= 1;
    }
    while below(k + 1) {
        k += 1;
    }
    Ok(ImplicationGap {
        floor_bound: k,
        erdos: p,
        exact: k == p,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub n: usize,
    pub r: usize,
    pub mode: ScanMode,
    /// Number of samples in random mode; ignored in exhaustive mode.
    pub budget: u64,
    pub seed: u64,
    pub solver: SolverOptions,
    pub bound_tol: f64,
    pub eq_tol: f64,
    pub threads: usize,
}

impl ScanConfig {
    pub fn new(n: usize, r: usize, mode: ScanMode) -> Self {
        ScanConfig {
            n,
            r,
            mode,
            budget: 100,
            seed: 0,
            solver: SolverOptions::default(),
            bound_tol: MANTEL_TOL,
            eq_tol: EQ_TOL,
            threads: 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanViolation {
    /// Offending graph, verbatim edge list.
    pub edge_list: String,
    pub rho: f64,
    pub limit: f64,
}

#[derive(Clone, Debug)]
pub struct ScanWitness {
    pub degree_sequence: Vec<usize>,
    pub matches_turan_degrees: bool,
}

/// Solve-quality aggregates across every tested graph.
#[derive(Clone, Copy, Debug)]
pub struct SolveCerts {
    pub solves: u64,
    pub all_converged: bool,
    pub max_residual_inf: f64,
    /// Smallest eigenvector entry seen on any component; positive means the
    /// Perron positivity held everywhere.
    pub min_eigvec_entry: f64,
    /// Most negative slack of any component radius against its clique-degree
    /// sandwich; must stay above −1e-9.
    pub min_yang_slack: f64,
}

impl SolveCerts {
    fn empty() -> Self {
        SolveCerts {
            solves: 0,
            all_converged: true,
            max_residual_inf: 0.0,
            min_eigvec_entry: f64::INFINITY,
            min_yang_slack: f64::INFINITY,
        }
    }

    fn merge(self, other: Self) -> Self {
        SolveCerts {
            solves: self.solves + other.solves,
            all_converged: self.all_converged && other.all_converged,
            max_residual_inf: self.max_residual_inf.max(other.max_residual_inf),
            min_eigvec_entry: self.min_eigvec_entry.min(other.min_eigvec_entry),
            min_yang_slack: self.min_yang_slack.min(other.min_yang_slack),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub n: usize,
    pub r: usize,
    pub mode: ScanMode,
    pub turan_rho: f64,
    /// Graphs enumerated or drawn before the K_{r+1}-free filter/repair.
    pub enumerated: u64,
    /// K_{r+1}-free graphs actually checked.
    pub tested: u64,
    pub max_rho: f64,
    pub violations: Vec<ScanViolation>,
    pub witnesses: Vec<ScanWitness>,
    pub certs: SolveCerts,
}

struct Agg {
    tested: u64,
    max_rho: f64,
    violations: Vec<(u64, ScanViolation)>,
    witnesses: Vec<(u64, ScanWitness)>,
    certs: SolveCerts,
}

impl Agg {
    fn empty() -> Self {
        Agg {
            tested: 0,
            max_rho: 0.0,
            violations: Vec::new(),
            witnesses: Vec::new(),
            certs: SolveCerts::empty(),
        }
    }

    fn merge(mut self, mut other: Self) -> Self {
        self.tested += other.tested;
        self.max_rho = self.max_rho.max(other.max_rho);
        self.violations.append(&mut other.violations);
        self.witnesses.append(&mut other.witnesses);
        self.certs = self.certs.merge(other.certs);
        self
    }
}

/// Verifies the Turán comparison over a graph family and collects equality
/// witnesses. Exhaustive mode enumerates every graph on n ≤ 8 vertices by
/// edge bitmask; random mode draws `budget` samples from G(n, p) with p
/// cycling over {0.3, 0.5, 0.7}, repairing each sample to K_{r+1}-free by
/// vertex deletion.
pub fn scan_extremal(cfg: &ScanConfig) -> Result<ScanReport> {
    let (n, r) = (cfg.n, cfg.r);
    if r < 2 {
        return Err(Error::Unsupported("scan requires r >= 2".into()));
    }
    if r > n {
        return Err(Error::RExceedsN { r, n });
    }
    let limit = crate::spectral::turan_rho(n, r)?;
    let turan_degrees = turan_graph(n, r)?.degree_sequence();

    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();

    let total: u64 = match cfg.mode {
        ScanMode::Exhaustive => {
            if n > 8 {
                return Err(Error::Unsupported(format!(
                    "exhaustive scan supports n <= 8, got {n}"
                )));
            }
            1u64 << pairs.len()
        }
        ScanMode::Random => cfg.budget,
    };

    let build = |idx: u64| -> Option<Graph> {
        match cfg.mode {
            ScanMode::Exhaustive => {
                let g = Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| idx >> k & 1 == 1)
                        .map(|(_, &e)| e),
                );
                is_clique_free(&g, r + 1).then_some(g)
            }
            ScanMode::Random => {
                let p = [0.3, 0.5, 0.7][(idx % 3) as usize];
                let g = random_graph(n, p, cfg.seed ^ (idx.wrapping_mul(0x9e3779b97f4a7c15)));
                Some(repair_to_clique_free(g, r + 1))
            }
        }
    };

    let examine = |idx: u64| -> Option<Agg> {
        let g = build(idx)?;
        let cs = enumerate_cliques(&g, r);
        let res = spectral_radius_of(&cs, &cfg.solver);
        let mut agg = Agg::empty();
        agg.tested = 1;
        agg.max_rho = res.rho;
        agg.certs = certs_of(&cs, &res);
        if res.rho > limit + cfg.bound_tol {
            agg.violations.push((
                idx,
                ScanViolation {
                    edge_list: edge_list_string(&g),
                    rho: res.rho,
                    limit,
                },
            ));
        } else if (res.rho - limit).abs() <= cfg.eq_tol {
            let degree_sequence = g.degree_sequence();
            let matches = degree_sequence == turan_degrees;
            agg.witnesses.push((
                idx,
                ScanWitness {
                    degree_sequence,
                    matches_turan_degrees: matches,
                },
            ));
        }
        Some(agg)
    };

    let mut agg = if cfg.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .map_err(|e| Error::Unsupported(e.to_string()))?;
        pool.install(|| {
            (0..total)
                .into_par_iter()
                .filter_map(examine)
                .reduce(Agg::empty, Agg::merge)
        })
    } else {
        (0..total).filter_map(examine).fold(Agg::empty(), Agg::merge)
    };

    agg.violations.sort_by_key(|(idx, _)| *idx);
    agg.witnesses.sort_by_key(|(idx, _)| *idx);

    Ok(ScanReport {
        n,
        r,
        mode: cfg.mode,
        turan_rho: limit,
        enumerated: total,
        tested: agg.tested,
        max_rho: agg.max_rho,
        violations: agg.violations.into_iter().map(|(_, v)| v).collect(),
        witnesses: agg.witnesses.into_iter().map(|(_, w)| w).collect(),
        certs: agg.certs,
    })
}

/// Per-solve certificates: convergence, residual, eigenvector positivity,
/// and the clique-degree sandwich evaluated per component.
pub fn certs_of(cs: &CliqueSet, res: &SpectralResult) -> SolveCerts {
    let mut certs = SolveCerts::empty();
    certs.solves = 1;
    certs.all_converged = res.all_converged();
    certs.max_residual_inf = res.max_residual_inf();
    certs.min_eigvec_entry = res.min_eigenvector_entry();
    for comp in &res.components {
        let mut lo = usize::MAX;
        let mut hi = 0usize;
        for &v in &comp.vertices {
            let d = cs.clique_degree(v).expect("component vertex in range");
            lo = lo.min(d);
            hi = hi.max(d);
        }
        certs.min_yang_slack = certs
            .min_yang_slack
            .min(comp.rho - lo as f64)
            .min(hi as f64 - comp.rho);
    }
    certs
}

/// Deletes one vertex (all its edges) of each found k-clique until none
/// remains. Deterministic: always the highest-numbered vertex of the
/// lexicographically first clique.
pub fn repair_to_clique_free(mut g: Graph, k: usize) -> Graph {
    while let Some(clique) = g.find_clique(k) {
        let del = *clique.last().expect("nonempty clique");
        let n = g.n();
        g = Graph::from_edges(n, g.edges().filter(|&(u, v)| u != del && v != del));
    }
    g
}
