//! Solver vs closed form across the complete multipartite family.
//!
//! Sweeps every nondecreasing part-size vector with 2..=5 parts, parts up to
//! 12, and part product at most 4000; the solved radius must match
//! `(Π n_i)^{(r−1)/r}` to 1e-8.

use cliquetensor_core::{
    complete_multipartite, multipartite_rho_closed_form, spectral_radius, PartiteSpec,
    SolverOptions,
};

fn sweep(r: usize, max_part: usize, max_product: usize, out: &mut Vec<Vec<usize>>) {
    let mut sizes = vec![1usize; r];
    loop {
        if sizes.iter().product::<usize>() <= max_product {
            out.push(sizes.clone());
        }
        // next nondecreasing tuple
        let mut k = r;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if sizes[k] < max_part {
                sizes[k] += 1;
                for j in k + 1..r {
                    sizes[j] = sizes[k];
                }
                break;
            }
        }
    }
}

#[test]
fn closed_form_matches_solver_across_the_family() {
    // the bracket midpoint carries error ~ tol * rho, and rho reaches ~500
    // here, so drive the solver tighter than the 1e-8 comparison
    let opts = SolverOptions {
        tol: 1e-12,
        ..SolverOptions::default()
    };
    let mut specs = Vec::new();
    for r in 2..=5 {
        sweep(r, 12, 4000, &mut specs);
    }
    assert!(specs.len() > 1000);
    for sizes in specs {
        let spec = PartiteSpec::new(sizes).unwrap();
        let r = spec.r();
        let g = complete_multipartite(&spec);
        let res = spectral_radius(&g, r, &opts);
        let closed = multipartite_rho_closed_form(&spec);
        assert!(
            (res.rho - closed).abs() < 1e-8,
            "parts {:?}: solver {} vs closed form {}",
            spec.sizes(),
            res.rho,
            closed
        );
        assert!(res.all_converged());
    }
}
