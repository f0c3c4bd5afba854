//! Workloads shared by the criterion benchmarks.

use hankel_core::{hankel_matrix, ExactMatrix, HankelSpec};

/// The `n × n` Catalan Hankel matrix with shift `r`.
pub fn catalan_hankel(n: usize, r: usize) -> ExactMatrix {
    hankel_matrix(&HankelSpec::catalan(n, r)).expect("Catalan source is unbounded")
}
