//! Square matrices over cyclotomic fields.
//!
//! Just enough linear algebra for representation checks: products, powers,
//! traces, characteristic polynomials (Faddeev-LeVerrier, exact), and
//! root-of-unity eigenvalue counts by repeated synthetic division.

use num::BigRational;

use super::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloMatrix {
    rows: Vec<Vec<CyclotomicNumber>>,
}

impl CycloMatrix {
    /// Builds from rows; must be square and non-empty.
    pub fn new(rows: Vec<Vec<CyclotomicNumber>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Inconsistent(format!(
                "matrix rows must form a non-empty square, got {} rows of lengths {:?}",
                n,
                rows.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
        Ok(CycloMatrix { rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            CyclotomicNumber::one()
                        } else {
                            CyclotomicNumber::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        CycloMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &CyclotomicNumber {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<CyclotomicNumber>] {
        &self.rows
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::Inconsistent(format!(
                "matrix dimension mismatch: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        let n = self.dim();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let mut acc = CyclotomicNumber::zero();
                for k in 0..n {
                    if self.rows[i][k].is_zero() || other.rows[k][j].is_zero() {
                        continue;
                    }
                    let t = self.rows[i][k].checked_mul(&other.rows[k][j])?;
                    acc = acc.checked_add(&t)?;
                }
                row.push(acc);
            }
            rows.push(row);
        }
        Ok(CycloMatrix { rows })
    }

    pub fn pow(&self, e: u64) -> Result<Self> {
        let mut acc = Self::identity(self.dim());
        let mut sq = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&sq)?;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.checked_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    pub fn scaled(&self, c: &CyclotomicNumber) -> Result<Self> {
        let mut rows = Vec::with_capacity(self.dim());
        for r in &self.rows {
            let mut row = Vec::with_capacity(self.dim());
            for x in r {
                row.push(x.checked_mul(c)?);
            }
            rows.push(row);
        }
        Ok(CycloMatrix { rows })
    }

    pub fn trace(&self) -> Result<CyclotomicNumber> {
        let mut acc = CyclotomicNumber::zero();
        for i in 0..self.dim() {
            acc = acc.checked_add(&self.rows[i][i])?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        let id = Self::identity(self.dim());
        *self == id
    }

    fn checked_add(&self, other: &Self) -> Result<Self> {
        let n = self.dim();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(self.rows[i][j].checked_add(&other.rows[i][j])?);
            }
            rows.push(row);
        }
        Ok(CycloMatrix { rows })
    }

    /// Characteristic polynomial `det(xI - A)`, little-endian, monic, by the
    /// Faddeev-LeVerrier recurrence. Exact; the divisions are by integers.
    pub fn char_poly(&self) -> Result<Vec<CyclotomicNumber>> {
        let n = self.dim();
        let mut coeffs = vec![CyclotomicNumber::zero(); n + 1];
        coeffs[n] = CyclotomicNumber::one();
        let mut m = self.clone();
        let mut c_prev;
        for k in 1..=n {
            if k > 1 {
                // M_k = A (M_{k-1} + c_{k-1} I)
                c_prev = coeffs[n - (k - 1)].clone();
                let shifted = m.checked_add(&Self::identity(n).scaled(&c_prev)?)?;
                m = self.checked_mul(&shifted)?;
            }
            let tr = m.trace()?;
            let ck = tr.scaled(&BigRational::new((-1).into(), (k as i64).into()));
            coeffs[n - k] = ck;
        }
        Ok(coeffs)
    }

    /// Counts eigenvalues among `zeta_order^k`, `k = 0..order`, with
    /// multiplicity, by repeated synthetic division of the characteristic
    /// polynomial.
    ///
    /// # Errors
    /// [`Error::Inconsistent`] when the multiplicities do not exhaust the
    /// dimension, i.e. some eigenvalue is not an `order`-th root of unity.
    pub fn eigenvalue_counts(&self, order: u64) -> Result<Vec<u64>> {
        let mut p = self.char_poly()?;
        let mut counts = vec![0u64; order as usize];
        for k in 0..order {
            let root = CyclotomicNumber::root_of_unity(order, k as i64)?;
            while let Some(q) = synthetic_divide(&p, &root)? {
                counts[k as usize] += 1;
                p = q;
            }
            if p.len() == 1 {
                break;
            }
        }
        let total: u64 = counts.iter().sum();
        if total != self.dim() as u64 {
            return Err(Error::Inconsistent(format!(
                "only {total} of {} eigenvalues are order-{order} roots of unity",
                self.dim()
            )));
        }
        Ok(counts)
    }
}

/// Divides `p` by `(x - r)` if `r` is a root; returns the quotient, or `None`
/// when the remainder is non-zero.
fn synthetic_divide(
    p: &[CyclotomicNumber],
    r: &CyclotomicNumber,
) -> Result<Option<Vec<CyclotomicNumber>>> {
    let d = p.len() - 1;
    if d == 0 {
        return Ok(None);
    }
    let mut q = vec![CyclotomicNumber::zero(); d];
    q[d - 1] = p[d].clone();
    for i in (1..d).rev() {
        q[i - 1] = p[i].checked_add(&r.checked_mul(&q[i])?)?;
    }
    let rem = p[0].checked_add(&r.checked_mul(&q[0])?)?;
    if rem.is_zero() {
        Ok(Some(q))
    } else {
        Ok(None)
    }
}
