//! Criterion benchmarks for `braidmon`; see `benches/`.
