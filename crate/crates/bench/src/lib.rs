//! Criterion benchmarks for `llvkit`; see `benches/`.
