//! Product formulas for `det(C_{i+j+r})_{i,j<n}` and the three-way
//! consistency check against elimination and the binomial reduction.
//!
//! For general `r` the determinant is
//!
//! ```text
//!            (n+1)(n+2)…(n+r-1)       r-3            r-3-j
//! H(n, r) = ------------------- ·  ∏  (r-2-j)! ·  ∏  (2n+3+j+2i)
//!           3!·5!·7!…(2r-3)!         j=0             i=0
//! ```
//!
//! with empty products equal to 1. Row `j = 0` is `(2n+3)(2n+5)…(2n+2r-3)·(r-2)!`
//! and the last row `j = r-3` is `(2n+r)·1!`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::hankel::{cigler_matrix, hankel_matrix, ConsistencyRecord, HankelSpec};
use crate::linalg::{det_bareiss, exact_div};
use crate::sequences::SequenceSource;

/// The `(n, r)` pair the formulas are evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClosedFormParams {
    pub order_n: usize,
    pub shift_r: usize,
}

impl ClosedFormParams {
    pub fn eval(&self) -> Result<BigInt> {
        eval_general(self.order_n, self.shift_r)
    }
}

fn factorial(k: usize) -> BigInt {
    (2..=k as u64).fold(BigInt::one(), |acc, i| acc * i)
}

/// `coefficient · ∏ (a·n + b)^e / denominator`, divided once at the end.
fn product_formula(
    n: usize,
    coefficient: u64,
    denominator: &BigInt,
    factors: &[(u64, u64, u32)],
) -> Result<BigInt> {
    let n = n as u64;
    let mut numerator = BigInt::from(coefficient);
    for &(a, b, e) in factors {
        numerator *= num_traits::pow(BigInt::from(a * n + b), e as usize);
    }
    exact_div(numerator, denominator, "specialized product formula")
}

/// `4/(3!·5!) · (n+1)(n+2)²(n+3)(2n+3)(2n+5)`.
pub fn eval_shift4(n: usize) -> Result<BigInt> {
    let den = factorial(3) * factorial(5);
    product_formula(
        n,
        4,
        &den,
        &[(1, 1, 1), (1, 2, 2), (1, 3, 1), (2, 3, 1), (2, 5, 1)],
    )
}

/// `8/(5!·7!) · (n+1)(n+2)²(n+3)²(n+4)(2n+3)(2n+5)²(2n+7)`.
pub fn eval_shift5(n: usize) -> Result<BigInt> {
    let den = factorial(5) * factorial(7);
    product_formula(
        n,
        8,
        &den,
        &[
            (1, 1, 1),
            (1, 2, 2),
            (1, 3, 2),
            (1, 4, 1),
            (2, 3, 1),
            (2, 5, 2),
            (2, 7, 1),
        ],
    )
}

/// `2⁵/(5·7!·9!) · (n+1)(n+2)²(n+3)³(n+4)²(n+5)(2n+3)(2n+5)²(2n+7)²(2n+9)`.
pub fn eval_shift6(n: usize) -> Result<BigInt> {
    let den = BigInt::from(5) * factorial(7) * factorial(9);
    product_formula(
        n,
        1 << 5,
        &den,
        &[
            (1, 1, 1),
            (1, 2, 2),
            (1, 3, 3),
            (1, 4, 2),
            (1, 5, 1),
            (2, 3, 1),
            (2, 5, 2),
            (2, 7, 2),
            (2, 9, 1),
        ],
    )
}

/// `3·2¹⁰/(7!·9!·11!) · (n+1)(n+2)²(n+3)³(n+4)³(n+5)²(n+6)
///  · (2n+3)(2n+5)²(2n+7)³(2n+9)²(2n+11)`.
pub fn eval_shift7(n: usize) -> Result<BigInt> {
    let den = factorial(7) * factorial(9) * factorial(11);
    product_formula(
        n,
        3 << 10,
        &den,
        &[
            (1, 1, 1),
            (1, 2, 2),
            (1, 3, 3),
            (1, 4, 3),
            (1, 5, 2),
            (1, 6, 1),
            (2, 3, 1),
            (2, 5, 2),
            (2, 7, 3),
            (2, 9, 2),
            (2, 11, 1),
        ],
    )
}

/// Specialized formula for `r ∈ 4..=7`.
pub fn eval_shift(r: usize, n: usize) -> Result<BigInt> {
    match r {
        4 => eval_shift4(n),
        5 => eval_shift5(n),
        6 => eval_shift6(n),
        7 => eval_shift7(n),
        _ => Err(Error::UnsupportedShift(r)),
    }
}

/// General product formula (see the module docs).
///
/// The whole numerator is assembled before the single division by
/// `∏_{k=2}^{r-1} (2k-1)!`; a remainder is reported, never rounded.
pub fn eval_general(n: usize, r: usize) -> Result<BigInt> {
    let n = n as u64;
    let mut numerator = BigInt::one();
    for k in 1..r as u64 {
        numerator *= n + k;
    }
    for j in 0..r.saturating_sub(2) {
        numerator *= factorial(r - 2 - j);
        for i in 0..(r - 2 - j) as u64 {
            numerator *= 2 * n + 3 + j as u64 + 2 * i;
        }
    }
    let denominator = (2..r).fold(BigInt::one(), |acc, k| acc * factorial(2 * k - 1));
    exact_div(numerator, &denominator, "general product formula")
}

/// Direct, Cigler and closed-form values for the Catalan point `(n, r)`.
pub fn check_point(n: usize, r: usize) -> Result<ConsistencyRecord> {
    check_point_with_source(&SequenceSource::BuiltinCatalan, n, r)
}

/// Like [`check_point`], but the direct elimination runs on `source`.
///
/// The Cigler and closed-form values always describe the Catalan sequence,
/// so any non-Catalan term inside the `n × n` window shows up as a
/// disagreement.
pub fn check_point_with_source(
    source: &SequenceSource,
    n: usize,
    r: usize,
) -> Result<ConsistencyRecord> {
    let direct = det_bareiss(&hankel_matrix(&HankelSpec::new(source.clone(), n, r))?)?;
    let cigler = det_bareiss(&cigler_matrix(n, r))?;
    let closed = eval_general(n, r)?;
    Ok(ConsistencyRecord::new(n, r, direct, cigler, closed))
}

/// Records for `0 ≤ n ≤ max_n`, `0 ≤ r ≤ max_r`, ordered by `(r, n)`.
pub fn sweep(max_n: usize, max_r: usize) -> Result<Vec<ConsistencyRecord>> {
    sweep_with_source(&SequenceSource::BuiltinCatalan, max_n, max_r)
}

pub fn sweep_with_source(
    source: &SequenceSource,
    max_n: usize,
    max_r: usize,
) -> Result<Vec<ConsistencyRecord>> {
    let mut records = Vec::with_capacity((max_n + 1) * (max_r + 1));
    for r in 0..=max_r {
        for n in 0..=max_n {
            records.push(check_point_with_source(source, n, r)?);
        }
    }
    Ok(records)
}

/// Number of sample points used by [`polynomial_identity_check`].
pub const IDENTITY_SAMPLES: usize = 41;

/// Compares the specialized formula for `r ∈ 4..=7` with [`eval_general`]
/// at `n = 0..=40`.
///
/// Both sides are polynomials in `n` of degree at most `r(r-1)/2 ≤ 21`, so
/// agreement at 41 points is agreement as polynomials.
pub fn polynomial_identity_check(r: usize) -> Result<bool> {
    if !(4..=7).contains(&r) {
        return Err(Error::UnsupportedShift(r));
    }
    for n in 0..IDENTITY_SAMPLES {
        if eval_shift(r, n)? != eval_general(n, r)? {
            return Ok(false);
        }
    }
    Ok(true)
}
