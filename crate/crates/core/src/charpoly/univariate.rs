use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partition::factorial;

/// An exact rational polynomial in one variable `n`, stored on powers `n^k`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `C(n, k)` expanded on powers of `n`.
    pub fn binomial(k: usize) -> Self {
        let mut coeffs = vec![BigRational::one()];
        for j in 0..k {
            // Multiply by (n - j).
            let mut next = vec![BigRational::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * BigRational::from_integer(j.into());
            }
            coeffs = next;
        }
        let denom = BigRational::from_integer(factorial(k));
        Self::new(coeffs.into_iter().map(|c| c / &denom).collect())
    }

    /// Coefficients of `1, n, n^2, ...`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn evaluate(&self, n: usize) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(n));
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// Coefficients on `C(n, 0), C(n, 1), ...`, recovered by finite
    /// differences at `n = 0, 1, ..., deg`.
    pub fn to_binomial_basis(&self) -> Vec<BigRational> {
        let len = self.coeffs.len();
        let mut diffs: Vec<BigRational> = (0..len).map(|n| self.evaluate(n)).collect();
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push(diffs[0].clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..len)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                    let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &rhs.scale(&-BigRational::one())
    }
}

impl fmt::Display for UniPoly {
    /// Binomial basis, e.g. `2*C(n,3) + 3*C(n,4)`; constant term last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.to_binomial_basis();
        let mut terms: Vec<(BigRational, String)> = basis
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let name = if k == 1 {
                    "n".to_string()
                } else {
                    format!("C(n,{k})")
                };
                (c.clone(), name)
            })
            .collect();
        if let Some(c0) = basis.first().filter(|c| !c.is_zero()) {
            terms.push((c0.clone(), String::new()));
        }
        f.write_str(&super::text::join_terms(&terms))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn binomials_and_rendering() {
        let p = &UniPoly::binomial(3).scale(&q(2)) + &UniPoly::binomial(4).scale(&q(3));
        assert_eq!(p.to_string(), "2*C(n,3) + 3*C(n,4)");
        assert_eq!(p.evaluate(5), q(2 * 10 + 3 * 5));
        assert_eq!(UniPoly::constant(q(1)).to_string(), "1");
        assert_eq!(UniPoly::binomial(1).to_string(), "n");
        assert_eq!((&UniPoly::binomial(1) - &UniPoly::constant(q(1))).to_string(), "n - 1");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(UniPoly::binomial(4).degree(), Some(4));
    }
}
