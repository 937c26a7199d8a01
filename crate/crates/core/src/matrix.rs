//! Small exact square matrices, determinants and characteristic polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

pub const MAX_DIM: usize = 12;

/// Square `n × n` rational matrix stored row-major, `1 ≤ n ≤ 12`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        check_dim(n)?;
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NonSquare {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(BigInt::from(v))).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_dim(n)?;
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        Ok(m)
    }

    /// Adjacency matrix of the path graph on `n` vertices: ones on the
    /// super- and sub-diagonal, zeros elsewhere.
    pub fn path_adjacency(n: usize) -> Result<Self> {
        check_dim(n)?;
        let mut m = Self::zeros(n);
        for i in 0..n.saturating_sub(1) {
            m.entries[i * n + i + 1] = Rational::one();
            m.entries[(i + 1) * n + i] = Rational::one();
        }
        Ok(m)
    }

    fn zeros(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n)
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// Determinant by Bareiss fraction-free elimination with row pivoting.
    pub fn det(&self) -> Rational {
        let n = self.n;
        let mut m: Vec<Vec<Rational>> = self.rows().map(<[Rational]>::to_vec).collect();
        let mut prev = Rational::one();
        let mut negate = false;
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return Rational::zero();
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Monic characteristic polynomial `det(λI − M)` by the
    /// Faddeev–LeVerrier trace recursion.
    ///
    /// `det(M − λI)` differs from this by `(−1)ⁿ`, so the two agree for even `n`.
    pub fn charpoly(&self) -> Polynomial {
        let n = self.n;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        // M_0 = 0; M_k = A·M_{k−1} + c_{n−k+1}·I; c_{n−k} = −tr(A·M_k)/k
        let mut mk = Self::zeros(n);
        for k in 1..=n {
            let mut next = self.mul(&mk);
            for i in 0..n {
                next.entries[i * n + i] += &coeffs[n - k + 1];
            }
            let am = self.mul(&next);
            coeffs[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
            mk = next;
        }
        Polynomial::new(coeffs)
    }
}

fn check_dim(n: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&n) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange(n))
    }
}

impl fmt::Display for Matrix {
    /// Rows separated by `; `, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}
