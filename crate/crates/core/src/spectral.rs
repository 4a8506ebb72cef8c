//! Spectral radius of the r-clique tensor.
//!
//! The tensor of a graph that is not r-clique connected is block diagonal
//! over the clique components, so the radius is computed per component and
//! the maximum taken. Each component tensor is weakly irreducible, which
//! makes the shifted higher-order power iteration converge and gives a
//! unique positive eigenvector to certify against.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cliques::{clique_components, enumerate_cliques, CliqueSet};
use crate::error::Result;
use crate::graph::{Graph, PartiteSpec};
use crate::tensor::{apply, lr_norm, rayleigh, residual};

/// Knobs for the power iteration; `seed` drives only the Rayleigh-ascent
/// oracle.
#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    /// Relative Collatz bracket gap at which a component counts as converged.
    pub tol: f64,
    pub max_iter: u64,
    /// Diagonal shift; any positive value makes the iteration convergent for
    /// weakly irreducible tensors that are not primitive.
    pub shift: f64,
    pub seed: u64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tol: 1e-10,
            max_iter: 100_000,
            shift: 1.0,
            seed: 0,
        }
    }
}

/// A candidate H-eigenpair with its independently computed certificate.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub lambda: f64,
    /// Unit ℓ_r norm, nonnegative.
    pub vector: Vec<f64>,
    /// `max_i |apply(vector)_i − lambda · vector_i^{r−1}|`.
    pub residual_inf: f64,
}

/// Outcome of one component solve.
#[derive(Clone, Debug)]
pub struct PowerIteration {
    pub pair: EigenPair,
    pub iterations: u64,
    pub converged: bool,
    /// Final Collatz bracket `[min ratio, max ratio]` with the shift removed;
    /// rigorous bounds on the component radius even without convergence.
    pub bracket: (f64, f64),
}

/// Per-component record inside a [`SpectralResult`].
#[derive(Clone, Debug)]
pub struct ComponentSolve {
    /// Global vertex ids of the component, ascending; `pair.vector` is
    /// indexed by position in this list.
    pub vertices: Vec<usize>,
    pub rho: f64,
    pub pair: EigenPair,
    pub iterations: u64,
    pub converged: bool,
    pub bracket: (f64, f64),
}

/// Spectral radius of the r-clique tensor with per-component breakdown.
#[derive(Clone, Debug)]
pub struct SpectralResult {
    /// Max component radius; 0 when the graph has no r-cliques.
    pub rho: f64,
    /// Eigenvector of the winning component embedded over all n vertices,
    /// zeros elsewhere; all zero when there are no r-cliques.
    pub global_vector: Vec<f64>,
    pub components: Vec<ComponentSolve>,
    pub tolerance_used: f64,
    pub is_clique_connected: bool,
}

impl SpectralResult {
    pub fn all_converged(&self) -> bool {
        self.components.iter().all(|c| c.converged)
    }

    pub fn max_residual_inf(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.pair.residual_inf)
            .fold(0.0, f64::max)
    }

    /// Smallest eigenvector entry across components; infinity when there are
    /// no components. Positive for converged weakly irreducible blocks.
    pub fn min_eigenvector_entry(&self) -> f64 {
        self.components
            .iter()
            .flat_map(|c| c.pair.vector.iter().copied())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Shifted higher-order power iteration on one clique component.
///
/// Iterates `y = apply(x) + shift · x^{[r−1]}`, tracks the Collatz ratios
/// `y_i / x_i^{r−1}`, and stops when the relative bracket gap drops below
/// `opts.tol`. The reported eigenvalue is the bracket midpoint minus the
/// shift; the residual is recomputed against the unshifted tensor.
pub fn power_iterate(cs: &CliqueSet, opts: &SolverOptions) -> PowerIteration {
    assert!(cs.count() >= 1, "component must contain at least one clique");
    assert!(opts.max_iter >= 1, "max_iter must be at least 1");
    debug_assert!(
        clique_components(cs).is_clique_connected(),
        "power_iterate expects a single clique component"
    );
    let n = cs.n();
    let r = cs.r();
    let rm1 = (r - 1) as i32;
    let mut x = vec![(n as f64).powf(-1.0 / r as f64); n];
    let mut iterations = 0;
    let mut converged = false;
    let mut lo = 0.0;
    let mut hi = f64::INFINITY;

    while iterations < opts.max_iter {
        iterations += 1;
        let y = apply(cs, &x).expect("component vector is well-formed");
        lo = f64::INFINITY;
        hi = f64::NEG_INFINITY;
        let mut shifted = y;
        for i in 0..n {
            let xp = x[i].powi(rm1);
            shifted[i] += opts.shift * xp;
            let ratio = shifted[i] / xp;
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        if hi - lo <= opts.tol * hi {
            converged = true;
            break;
        }
        for v in &mut shifted {
            if rm1 > 1 {
                *v = v.powf(1.0 / rm1 as f64);
            }
        }
        let norm = lr_norm(&shifted, r);
        for v in &mut shifted {
            *v /= norm;
        }
        x = shifted;
    }

    let lambda = 0.5 * (lo + hi) - opts.shift;
    let residual_inf = residual(cs, lambda, &x).expect("residual on solved vector");
    PowerIteration {
        pair: EigenPair {
            lambda,
            vector: x,
            residual_inf,
        },
        iterations,
        converged,
        bracket: (lo - opts.shift, hi - opts.shift),
    }
}

/// Spectral radius from a precomputed clique set.
pub fn spectral_radius_of(cs: &CliqueSet, opts: &SolverOptions) -> SpectralResult {
    let n = cs.n();
    let r = cs.r();
    let comps = clique_components(cs);

    // Bucket cliques per component and relabel vertices locally. The
    // relabeling is monotone, so each local list stays canonical.
    let mut class_of = vec![usize::MAX; n];
    let mut local_id = vec![0u32; n];
    for (ci, class) in comps.classes.iter().enumerate() {
        for (loc, &v) in class.iter().enumerate() {
            class_of[v] = ci;
            local_id[v] = loc as u32;
        }
    }
    let mut flats: Vec<Vec<u32>> = vec![Vec::new(); comps.classes.len()];
    for tuple in cs.iter() {
        let ci = class_of[tuple[0] as usize];
        flats[ci].extend(tuple.iter().map(|&v| local_id[v as usize]));
    }

    let mut components = Vec::with_capacity(comps.classes.len());
    for (class, flat) in comps.classes.iter().zip(flats) {
        let local = CliqueSet::from_flat(class.len(), r, flat);
        let out = power_iterate(&local, opts);
        components.push(ComponentSolve {
            vertices: class.clone(),
            rho: out.pair.lambda,
            pair: out.pair,
            iterations: out.iterations,
            converged: out.converged,
            bracket: out.bracket,
        });
    }

    let mut rho = 0.0;
    let mut winner = None;
    for (ci, comp) in components.iter().enumerate() {
        if comp.rho > rho {
            rho = comp.rho;
            winner = Some(ci);
        }
    }
    // A nonempty component always has radius >= 1 (min clique degree), but
    // keep the max rule literal.
    if winner.is_none() && !components.is_empty() {
        winner = Some(0);
        rho = components[0].rho;
    }

    let mut global_vector = vec![0.0; n];
    if let Some(w) = winner {
        for (loc, &v) in components[w].vertices.iter().enumerate() {
            global_vector[v] = components[w].pair.vector[loc];
        }
    }

    SpectralResult {
        rho,
        global_vector,
        components,
        tolerance_used: opts.tol,
        is_clique_connected: comps.is_clique_connected(),
    }
}

/// Spectral radius of the r-clique tensor of `g`.
pub fn spectral_radius(g: &Graph, r: usize, opts: &SolverOptions) -> SpectralResult {
    spectral_radius_of(&enumerate_cliques(g, r), opts)
}

/// Closed form for a complete multipartite graph with parts n_1, …, n_r:
/// `(n_1 n_2 ⋯ n_r)^{(r−1)/r}`.
pub fn multipartite_rho_closed_form(spec: &PartiteSpec) -> f64 {
    let r = spec.r() as f64;
    let product: f64 = spec.sizes().iter().map(|&s| s as f64).product();
    product.powf((r - 1.0) / r)
}

/// Closed form for the Turán graph T_r(n).
pub fn turan_rho(n: usize, r: usize) -> Result<f64> {
    Ok(multipartite_rho_closed_form(&PartiteSpec::turan(n, r)?))
}

/// Projected-ascent maximization of the Rayleigh form over the nonnegative
/// unit ℓ_r sphere; an independent lower bound on the spectral radius.
///
/// Every iterate is feasible, so the best value seen is always a valid lower
/// bound, and on small connected instances the ascent reaches the radius
/// itself.
pub fn rayleigh_maximize_oracle(cs: &CliqueSet, restarts: u32, seed: u64) -> f64 {
    if cs.count() == 0 {
        return 0.0;
    }
    let n = cs.n();
    let r = cs.r();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0.0f64;

    for _ in 0..restarts.max(1) {
        let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..1.0)).collect();
        normalize(&mut x, r);
        let mut fx = rayleigh(cs, &x).expect("feasible point");
        best = best.max(fx);
        let mut step = 0.5;
        let mut stalls = 0;
        for _ in 0..4000 {
            let grad = apply(cs, &x).expect("feasible point");
            // evaluate a few step sizes around the current one, take the best
            let mut chosen: Option<(f64, Vec<f64>, f64)> = None;
            let mut trial = step * 4.0;
            for _ in 0..40 {
                let mut cand: Vec<f64> = x
                    .iter()
                    .zip(&grad)
                    .map(|(&xi, &gi)| xi + trial * gi)
                    .collect();
                normalize(&mut cand, r);
                let fc = rayleigh(cs, &cand).expect("feasible point");
                match chosen {
                    Some((fb, _, _)) if fc <= fb => {
                        if fb > fx {
                            break;
                        }
                    }
                    _ => {
                        if fc > fx {
                            chosen = Some((fc, cand, trial));
                        }
                    }
                }
                trial *= 0.5;
            }
            let Some((fc, cand, used)) = chosen else { break };
            let gain = fc - fx;
            x = cand;
            fx = fc;
            step = used;
            best = best.max(fx);
            if gain <= 1e-14 * fx.max(1.0) {
                stalls += 1;
                if stalls >= 3 {
                    break;
                }
            } else {
                stalls = 0;
            }
        }
    }
    best
}

fn normalize(x: &mut [f64], r: usize) {
    let norm = lr_norm(x, r);
    if norm > 0.0 {
        for v in x {
            *v /= norm;
        }
    }
}
