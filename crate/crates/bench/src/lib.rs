//! Benchmarks for the analysis kernels live in `benches/`.
