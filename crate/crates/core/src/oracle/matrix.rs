use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.cols + j] = value;
    }

    /// Clears denominators row by row.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = &self.entries[i * self.cols..(i + 1) * self.cols];
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }

    /// The unique `x` with `A x = rhs`, or `None` if there is no solution
    /// or more than one.
    pub fn solve(&self, rhs: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length");
        let w = self.cols + 1;
        let mut a: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| {
                let mut row = self.entries[i * self.cols..(i + 1) * self.cols].to_vec();
                row.push(rhs[i].clone());
                row
            })
            .collect();
        let mut r = 0;
        for c in 0..self.cols {
            let p = (r..self.rows).find(|&i| !a[i][c].is_zero())?;
            a.swap(r, p);
            let pivot = a[r][c].clone();
            for x in a[r].iter_mut() {
                *x /= &pivot;
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, y) in row[c..w].iter_mut().zip(&pivot_row[c..w]) {
                        *x -= &f * y;
                    }
                }
            }
            r += 1;
        }
        if a[r..].iter().any(|row| !row[self.cols].is_zero()) {
            return None;
        }
        Some(a[..self.cols].iter().map(|row| row[self.cols].clone()).collect())
    }

    /// Rank by Bareiss fraction-free elimination. Pivots are taken column by
    /// column, from the first row below the current one with a nonzero entry.
    pub fn rank(&self) -> usize {
        let mut a = self.integer_rows();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                    a[i][j] = v / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            r += 1;
            if r == self.rows {
                break;
            }
        }
        r
    }
}
