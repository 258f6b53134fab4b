//! Benchmark-only crate; see `benches/conjugacy.rs`.
