//! Benchmark-only crate; see `benches/composition.rs`.
