//! Shifted Hankel matrices, Cigler's binomial matrices and Hankel transforms.

use num_bigint::BigInt;

use crate::error::Result;
use crate::linalg::{det_bareiss, ExactMatrix};
use crate::sequences::{binomial, SequenceSource};

/// One Hankel determinant instance `det(a_{i+j+r})_{i,j<n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelSpec {
    pub source: SequenceSource,
    pub order_n: usize,
    pub shift_r: usize,
}

impl HankelSpec {
    pub fn new(source: SequenceSource, order_n: usize, shift_r: usize) -> Self {
        HankelSpec {
            source,
            order_n,
            shift_r,
        }
    }

    pub fn catalan(order_n: usize, shift_r: usize) -> Self {
        Self::new(SequenceSource::BuiltinCatalan, order_n, shift_r)
    }

    /// Number of leading terms `a_0 …` the matrix touches.
    pub fn terms_needed(&self) -> usize {
        if self.order_n == 0 {
            0
        } else {
            2 * self.order_n - 1 + self.shift_r
        }
    }
}

/// The three values computed for one `(n, r)` point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyRecord {
    pub order_n: usize,
    pub shift_r: usize,
    pub direct_value: BigInt,
    pub cigler_value: BigInt,
    pub closed_form_value: BigInt,
    pub agree: bool,
}

impl ConsistencyRecord {
    pub fn new(
        order_n: usize,
        shift_r: usize,
        direct_value: BigInt,
        cigler_value: BigInt,
        closed_form_value: BigInt,
    ) -> Self {
        let agree = direct_value == cigler_value && cigler_value == closed_form_value;
        ConsistencyRecord {
            order_n,
            shift_r,
            direct_value,
            cigler_value,
            closed_form_value,
            agree,
        }
    }
}

/// The `n × n` matrix with entry `(i, j) = a_{i+j+r}`.
pub fn hankel_matrix(spec: &HankelSpec) -> Result<ExactMatrix> {
    let n = spec.order_n;
    if n == 0 {
        return Ok(ExactMatrix::empty());
    }
    let terms = spec.source.prefix(spec.terms_needed())?;
    let r = spec.shift_r;
    Ok(ExactMatrix::from_fn(n, n, |i, j| terms[i + j + r].clone()))
}

/// The `r × r` matrix with entry `(i, j) = binom(i+j+n, i-j+n)`.
pub fn cigler_matrix(order_n: usize, shift_r: usize) -> ExactMatrix {
    let n = order_n as i64;
    ExactMatrix::from_fn(shift_r, shift_r, |i, j| {
        let (i, j) = (i as i64, j as i64);
        binomial((i + j + n) as u64, i - j + n)
    })
}

/// `[det H(0, r), det H(1, r), …, det H(max_n, r)]` by Bareiss elimination.
pub fn hankel_transform(
    source: &SequenceSource,
    shift_r: usize,
    max_n: usize,
) -> Result<Vec<BigInt>> {
    // fail before doing any work if the largest instance is out of reach
    let largest = HankelSpec::new(source.clone(), max_n, shift_r);
    source.prefix(largest.terms_needed())?;
    (0..=max_n)
        .map(|n| {
            let spec = HankelSpec::new(source.clone(), n, shift_r);
            det_bareiss(&hankel_matrix(&spec)?)
        })
        .collect()
}
