//! Criterion benchmarks for the `cherednik` kernels; see `benches/kernels.rs`.
