//! Exact Hankel determinants of integer sequences, with a focus on shifted
//! Catalan sequences.
//!
//! Three independent routes compute `det(C_{i+j+r})_{i,j<n}`:
//!
//! * direct fraction-free elimination on the `n × n` Hankel matrix
//!   ([`linalg::det_bareiss`]),
//! * Cigler's `r × r` binomial determinant ([`hankel::cigler_matrix`]),
//! * a product formula in `n` ([`closed_form::eval_general`]).
//!
//! [`closed_form::check_point`] and [`closed_form::sweep`] compare all three.

pub mod closed_form;
pub mod error;
pub mod hankel;
pub mod linalg;
pub mod sequences;

pub use closed_form::{
    check_point, check_point_with_source, eval_general, eval_shift, eval_shift4, eval_shift5,
    eval_shift6, eval_shift7, polynomial_identity_check, sweep, sweep_with_source,
    ClosedFormParams,
};
pub use error::{Error, Result};
pub use hankel::{cigler_matrix, hankel_matrix, hankel_transform, ConsistencyRecord, HankelSpec};
pub use linalg::{det, det_bareiss, det_laplace, DetMethod, ExactMatrix, LAPLACE_MAX_DIM};
pub use num_bigint::BigInt;
pub use sequences::{
    binomial, catalan, catalan_prefix, load_sequence, CatalanCache, SequenceDescriptor,
    SequenceSource,
};
