//! Clique tensors of undirected simple graphs.
//!
//! The r-clique tensor of a graph G is the order-r symmetric tensor whose
//! nonzero entries mark the r-cliques of G; its spectral radius ρ_r(G)
//! generalizes the adjacency spectral radius (the r = 2 case). This crate
//! enumerates the cliques, computes ρ_r(G) by shifted power iteration with
//! Collatz-style brackets, and evaluates the Turán-type bounds that ρ_r
//! satisfies:
//!
//! * counting bound: `c_r(G) ≤ (n/r)·ρ_r(G)`, with equality when every
//!   vertex lies in the same number of r-cliques;
//! * Turán comparison: `ρ_r(G) ≤ ρ_r(T_r(n))` for K_{r+1}-free G;
//! * closed form `ρ_r = (n_1⋯n_r)^{(r−1)/r}` for complete multipartite
//!   graphs, hence `ρ_r(T_r(n))`;
//! * row-sum sandwich: min/max clique degree bracket ρ_r.
//!
//! The tensor is never materialized: all operations run over the sorted
//! clique list ([`CliqueSet`]).

mod bitset;
mod unionfind;

pub mod bounds;
pub mod cliques;
pub mod error;
pub mod graph;
pub mod spectral;
pub mod tensor;

pub use bounds::{
    bound_report, certs_of, count_bound, erdos_count, implication_gap, mantel_check,
    repair_to_clique_free, scan_extremal, BoundReport, CountBound, ImplicationGap, MantelCheck,
    ScanConfig, ScanMode, ScanReport, ScanViolation, ScanWitness, SolveCerts,
};
pub use cliques::{clique_components, enumerate_cliques, CliqueComponents, CliqueSet};
pub use error::{Error, Result};
pub use graph::{
    complete_multipartite, edge_list_string, emit_edge_list, is_clique_free, parse_edge_list,
    random_graph, turan_graph, Graph, PartiteSpec,
};
pub use spectral::{
    multipartite_rho_closed_form, power_iterate, rayleigh_maximize_oracle, spectral_radius,
    spectral_radius_of, turan_rho, ComponentSolve, EigenPair, PowerIteration, SolverOptions,
    SpectralResult,
};
pub use tensor::{apply, lr_norm, rayleigh, residual};
