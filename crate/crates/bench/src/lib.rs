//! Criterion benchmarks for the engine; run them with `cargo bench -p numgame-bench`.
