//! Implicit clique-tensor arithmetic: tensor-vector apply, the Rayleigh form,
//! and the eigenpair residual.
//!
//! For an r-clique set the tensor action reduces to per-clique products:
//!
//! * `apply(cs, x)_i = Σ_{C ∋ i} Π_{j ∈ C, j ≠ i} x_j`
//! * `rayleigh(cs, x) = r · Σ_C Π_{j ∈ C} x_j = ⟨x, apply(cs, x)⟩`
//!
//! `apply(cs, x)_v` is also the weighted clique sum of a vertex `v` under `x`
//! that drives the symmetrization arguments; no separate operation is needed.

use crate::cliques::CliqueSet;
use crate::error::{Error, Result};

fn check_vector(cs: &CliqueSet, x: &[f64]) -> Result<()> {
    if x.len() != cs.n() {
        return Err(Error::LengthMismatch {
            got: x.len(),
            expected: cs.n(),
        });
    }
    if let Some(i) = x.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteEntry { index: i });
    }
    Ok(())
}

/// Tensor-vector product of the implicit r-clique tensor with `x`:
/// `y_i = Σ_{C ∋ i} Π_{j ∈ C, j ≠ i} x_j`.
///
/// Leave-one-out products are formed from prefix and suffix partial products
/// rather than division, so zero entries in `x` are handled exactly.
pub fn apply(cs: &CliqueSet, x: &[f64]) -> Result<Vec<f64>> {
    check_vector(cs, x)?;
    let r = cs.r();
    let mut y = vec![0.0; cs.n()];
    let mut prefix = vec![1.0; r + 1];
    let mut suffix = vec![1.0; r + 1];
    for tuple in cs.iter() {
        prefix[0] = 1.0;
        for (k, &j) in tuple.iter().enumerate() {
            prefix[k + 1] = prefix[k] * x[j as usize];
        }
        suffix[r] = 1.0;
        for (k, &j) in tuple.iter().enumerate().rev() {
            suffix[k] = suffix[k + 1] * x[j as usize];
        }
        for (k, &j) in tuple.iter().enumerate() {
            y[j as usize] += prefix[k] * suffix[k + 1];
        }
    }
    Ok(y)
}

/// The Rayleigh form `r · Σ_C Π_{j ∈ C} x_j` over a nonnegative vector.
/// Callers normalize; a zero vector simply evaluates to 0.
pub fn rayleigh(cs: &CliqueSet, x: &[f64]) -> Result<f64> {
    check_vector(cs, x)?;
    if let Some(i) = x.iter().position(|&v| v < 0.0) {
        return Err(Error::NegativeEntry {
            index: i,
            value: format!("{}", x[i]),
        });
    }
    let mut total = 0.0;
    for tuple in cs.iter() {
        let mut prod = 1.0;
        for &j in tuple {
            prod *= x[j as usize];
        }
        total += prod;
    }
    Ok(cs.r() as f64 * total)
}

/// ℓ_∞ norm of `apply(cs, x) − λ · x^{[r−1]}`; zero iff `(λ, x)` is an exact
/// eigenpair of the clique tensor.
pub fn residual(cs: &CliqueSet, lambda: f64, x: &[f64]) -> Result<f64> {
    let y = apply(cs, x)?;
    let rm1 = (cs.r() - 1) as i32;
    Ok(y
        .iter()
        .zip(x)
        .map(|(&yi, &xi)| (yi - lambda * xi.powi(rm1)).abs())
        .fold(0.0, f64::max))
}

/// ℓ_r norm `(Σ |x_i|^r)^{1/r}`.
pub fn lr_norm(x: &[f64], r: usize) -> f64 {
    x.iter()
        .map(|v| v.abs().powi(r as i32))
        .sum::<f64>()
        .powf(1.0 / r as f64)
}
