//! Exact rational scalars and dense linear algebra over ℚ.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `[+-]digits[/digits]` with a nonzero denominator.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse {
        line: 0,
        msg: format!("invalid rational `{s}`"),
    };
    let (neg, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let digits = |t: &str| -> Result<BigInt, Error> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (digits(n)?, digits(d)?),
        None => (digits(body)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(bad());
    }
    let q = Rational::new(num, den);
    Ok(if neg { -q } else { q })
}

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Result of [`Matrix::solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Consistent {
        particular: Vec<Rational>,
        kernel: Vec<Vec<Rational>>,
    },
    Inconsistent,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &self[(i, j)] - &f * &self[(r, j)];
                    self[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        kernel_from_rref(&m, &pivots)
    }

    pub fn solve(&self, b: &[Rational]) -> Result<Solution, Error> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(Solution::Inconsistent);
        }
        let mut particular = vec![Rational::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            particular[c] = aug[(r, self.cols)].clone();
        }
        let mut coeffs = Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                coeffs[(i, j)] = aug[(i, j)].clone();
            }
        }
        Ok(Solution::Consistent {
            particular,
            kernel: kernel_from_rref(&coeffs, &pivots),
        })
    }
}

fn kernel_from_rref(m: &Matrix, pivots: &[usize]) -> Vec<Vec<Rational>> {
    let mut is_pivot = vec![false; m.cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); m.cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, f)].clone();
            }
            v
        })
        .collect()
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Formats a rational vector as `a, b, c`.
pub fn fmt_vec(v: &[Rational]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub(crate) fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_canonical_forms() {
        assert_eq!(parse_rational("-5/3").unwrap(), rat(-5, 3));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("0").unwrap(), int(0));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("+2").unwrap(), int(2));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "-", "1/0", "1/-3", "1.5", "a", "1/", "/2", "--1"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn identity_rank_and_kernel() {
        let m = Matrix::identity(6);
        assert_eq!(m.rank(), 6);
        assert!(m.kernel_basis().is_empty());
        let b: Vec<_> = (1..=6).map(int).collect();
        match m.solve(&b).unwrap() {
            Solution::Consistent { particular, kernel } => {
                assert_eq!(particular, b);
                assert!(kernel.is_empty());
            }
            Solution::Inconsistent => panic!(),
        }
    }

    #[test]
    fn inconsistent_system() {
        let m = Matrix::from_rows(vec![vec![int(1), int(1)], vec![int(2), int(2)]]);
        assert_eq!(m.solve(&[int(1), int(3)]).unwrap(), Solution::Inconsistent);
        assert_eq!(m.kernel_basis(), vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn solve_rejects_wrong_length() {
        let m = Matrix::identity(2);
        assert!(matches!(
            m.solve(&[int(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
