//! Dense integer matrices and exact determinants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest dimension accepted by [`det_laplace`].
pub const LAPLACE_MAX_DIM: usize = 8;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> BigInt,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from nested rows. Panics on ragged input.
    pub fn from_rows<T, R>(rows: &[R]) -> Self
    where
        T: Into<BigInt> + Clone,
        R: AsRef<[T]>,
    {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row.iter().cloned().map(Into::into));
        }
        ExactMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    /// The 0×0 matrix.
    pub fn empty() -> Self {
        Self::from_fn(0, 0, |_, _| unreachable!())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.rows {
            list.entry(
                &self
                    .row(i)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>(),
            );
        }
        list.finish()
    }
}

/// Determinant algorithm selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DetMethod {
    /// Cofactor expansion up to 4×4, Bareiss above.
    #[default]
    Auto,
    Laplace,
    Bareiss,
}

/// Determinant by cofactor expansion along the first row.
///
/// O(n!) and capped at [`LAPLACE_MAX_DIM`]; meant as a trusted oracle.
pub fn det_laplace(m: &ExactMatrix) -> Result<BigInt> {
    let n = m.require_square()?;
    if n > LAPLACE_MAX_DIM {
        return Err(Error::DimensionCapExceeded {
            rows: n,
            cap: LAPLACE_MAX_DIM,
        });
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(laplace_minor(m, 0, &cols))
}

// Determinant of the submatrix made of rows `row..` and the given columns.
fn laplace_minor(m: &ExactMatrix, row: usize, cols: &[usize]) -> BigInt {
    if cols.is_empty() {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    let mut rest = Vec::with_capacity(cols.len() - 1);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = m.get(row, c);
        if entry.is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(cols.iter().copied().filter(|&k| k != c));
        let term = entry * laplace_minor(m, row + 1, &rest);
        if pos % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Determinant by single-step fraction-free (Bareiss) elimination.
///
/// Every division by the previous pivot is checked for a zero remainder;
/// a nonzero remainder is reported as [`Error::InexactDivision`].
pub fn det_bareiss(m: &ExactMatrix) -> Result<BigInt> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.entries.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                Some(p) => {
                    for j in k..n {
                        a.swap(k * n + j, p * n + j);
                    }
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (head, tail) = a.split_at_mut((k + 1) * n);
        let pivot_row = &head[k * n..];
        let pivot = &pivot_row[k];
        for row in tail.chunks_exact_mut(n) {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let numerator = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = exact_div(numerator, &prev, "Bareiss elimination")?;
            }
        }
        prev = a[k * n + k].clone();
    }
    let det = a.pop().expect("n >= 1");
    Ok(if negate { -det } else { det })
}

pub(crate) fn exact_div(
    dividend: BigInt,
    divisor: &BigInt,
    context: &'static str,
) -> Result<BigInt> {
    let (q, r) = dividend.div_rem(divisor);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision {
            context,
            dividend: dividend.to_string(),
            divisor: divisor.to_string(),
        })
    }
}

pub fn det(m: &ExactMatrix, method: DetMethod) -> Result<BigInt> {
    match method {
        DetMethod::Laplace => det_laplace(m),
        DetMethod::Bareiss => det_bareiss(m),
        DetMethod::Auto if m.rows() <= 4 => det_laplace(m),
        DetMethod::Auto => det_bareiss(m),
    }
}

#[cfg(test)]
pub(crate) fn multiply(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    assert_eq!(a.cols, b.rows);
    ExactMatrix::from_fn(a.rows, b.cols, |i, j| {
        (0..a.cols).map(|k| a.get(i, k) * b.get(k, j)).sum()
    })
}
