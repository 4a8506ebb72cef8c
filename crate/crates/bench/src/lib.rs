//! Benchmark-only crate; see benches/clique_tensor.rs.
