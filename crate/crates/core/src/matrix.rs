//! The Hessenberg matrix of Stirling cycle numbers and its exact
//! determinant.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{padded_compositions, stirling_cycle};
use crate::error::{Error, Result};

/// The `kn x kn` matrix built from `k` copies of each of rows `2..=n+1` of
/// the Stirling cycle triangle, shifted so the first nonzero entry of every
/// row past the first sits on the infra-diagonal and equals 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HessenbergMatrix {
    k: usize,
    n: usize,
    entries: Vec<BigUint>, // row-major, dim x dim
}

impl HessenbergMatrix {
    pub fn build(k: usize, n: usize) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "matrix parameters must be positive, got k={k}, n={n}"
            )));
        }
        let dim = k * n;
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            let q = r / k; // row block index
            for c in 0..dim {
                let j = (q + 1 + r) as isize - c as isize;
                entries.push(stirling_cycle(q + 2, j));
            }
        }
        Ok(Self { k, n, entries })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k * self.n
    }

    /// Entry at `row`, `col` (0-based).
    pub fn entry(&self, row: usize, col: usize) -> &BigUint {
        &self.entries[row * self.dim() + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> {
        self.entries.chunks(self.dim())
    }

    /// Exact determinant via the leading-principal-minor recurrence
    /// `d_m = sum_{i=1}^{m} (-1)^(m-i) entry(i, m) d_{i-1}`, valid because
    /// every infra-diagonal entry is 1 and everything below it vanishes.
    pub fn determinant(&self) -> BigInt {
        let dim = self.dim();
        let mut minors: Vec<BigInt> = Vec::with_capacity(dim + 1);
        minors.push(BigInt::one());
        for m in 1..=dim {
            let mut sum = BigInt::zero();
            for i in 1..=m {
                let e = self.entry(i - 1, m - 1);
                if e.is_zero() {
                    continue;
                }
                let term = BigInt::from(e.clone()) * &minors[i - 1];
                if (m - i).is_multiple_of(2) {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            minors.push(sum);
        }
        minors.pop().unwrap()
    }

    /// The determinant as a signed sum over restricted padded compositions:
    /// `sum_c (-1)^(#0s in c) prod_i [i+1 choose-cycles i+1-c_i]`.
    /// Stated for `k = 1` only; larger alphabets are rejected.
    pub fn determinant_via_permutation_sum(&self) -> Result<BigInt> {
        if self.k != 1 {
            return Err(Error::InvalidParameter(format!(
                "the permutation-sum expansion applies to k = 1 only, got k={}",
                self.k
            )));
        }
        let mut sum = BigInt::zero();
        for code in padded_compositions(self.n, true) {
            let mut prod = BigUint::one();
            for (i, &c) in code.parts().iter().enumerate() {
                let rows = i + 2; // triangle row i+1 in 1-based terms
                prod *= stirling_cycle(rows, (rows - c) as isize);
            }
            let term = BigInt::from(prod);
            if code.zero_count().is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        Ok(sum)
    }
}
