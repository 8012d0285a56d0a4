//! Character polynomials: polynomials in the cycle-count functions
//! `X_i(σ) = #{i-cycles of σ}`, graded by `deg X_i = i`.
//!
//! Coefficients are stored on ordinary monomials. The binomial basis
//! `∏ C(X_i, k_i)` is a conversion layer used for rendering and parsing.

mod text;
mod univariate;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use univariate::UniPoly;

use crate::characters::SnRep;
use crate::partition::{factorial, is_horizontal_strip, pad, partitions_up_to, Partition};

/// Exponent vector: entry `i` is the exponent of `X_{i+1}`; no trailing zeros.
pub type Exponents = Vec<u32>;

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct CharPolynomial {
    terms: BTreeMap<Exponents, BigRational>,
}

impl CharPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    /// The variable `X_i`, for `i >= 1`.
    pub fn variable(i: usize) -> Self {
        assert!(i >= 1, "cycle-count variables are indexed from 1");
        let mut e = vec![0; i];
        e[i - 1] = 1;
        let mut p = Self::zero();
        p.add_term(e, BigRational::one());
        p
    }

    /// `C(X_i, k) = X_i (X_i - 1) ... (X_i - k + 1) / k!`.
    pub fn binomial_variable(i: usize, k: usize) -> Self {
        let x = Self::variable(i);
        let mut acc = Self::one();
        for j in 0..k {
            acc = &acc * &(&x - &Self::constant(BigRational::from_integer(j.into())));
        }
        acc.scale(&BigRational::new(BigInt::one(), factorial(k)))
    }

    /// Monomial terms as `(exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weighted degree with `deg X_i = i`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().enumerate().map(|(i, &k)| (i + 1) * k as usize).sum())
            .max()
    }

    fn add_term(&mut self, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(trim(e)) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        CharPolynomial {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Substitutes `X_i = counts[i-1]` (missing entries are zero).
    pub fn evaluate_counts(&self, counts: &[usize]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let x = counts.get(i).copied().unwrap_or(0);
                term *= BigRational::from_integer(BigInt::from(x).pow(k));
            }
            acc += term;
        }
        acc
    }

    /// Value at a permutation of cycle type `rho`.
    pub fn evaluate(&self, rho: &Partition) -> BigRational {
        let m = rho.multiplicities();
        self.evaluate_counts(&m[1..])
    }

    /// The dimension polynomial `P(n, 0, 0, ...)`.
    pub fn dimension_polynomial(&self) -> UniPoly {
        let mut coeffs = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().skip(1).any(|&k| k > 0) {
                continue;
            }
            let k = e.first().copied().unwrap_or(0) as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigRational::zero());
            }
            coeffs[k] += c;
        }
        UniPoly::new(coeffs)
    }

    /// Coefficients in the basis `∏ C(X_i, k_i)`, keyed by `(k_1, k_2, ...)`.
    pub fn to_binomial_basis(&self) -> BTreeMap<Exponents, BigRational> {
        let mut out: BTreeMap<Exponents, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            // X^k = Σ_j S(k, j) j! C(X, j), applied to each variable.
            let mut partial: Vec<(Exponents, BigRational)> = vec![(Vec::new(), c.clone())];
            for &k in e {
                let expansion = falling_expansion(k as usize);
                let mut next = Vec::new();
                for (key, coef) in &partial {
                    for (j, s) in expansion.iter().enumerate() {
                        if s.is_zero() {
                            continue;
                        }
                        let mut key = key.clone();
                        key.push(j as u32);
                        next.push((key, coef * BigRational::from_integer(s.clone())));
                    }
                }
                partial = next;
            }
            for (key, coef) in partial {
                let key = trim(key);
                *out.entry(key).or_insert_with(BigRational::zero) += coef;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Inverse of [`to_binomial_basis`](Self::to_binomial_basis).
    pub fn from_binomial_basis<'a>(
        entries: impl IntoIterator<Item = (&'a Exponents, &'a BigRational)>,
    ) -> Self {
        let mut acc = Self::zero();
        for (key, c) in entries {
            let mut term = Self::constant(c.clone());
            for (i, &k) in key.iter().enumerate() {
                if k > 0 {
                    term = &term * &Self::binomial_variable(i + 1, k as usize);
                }
            }
            acc = &acc + &term;
        }
        acc
    }
}

/// `[S(k, j) j!]_{j=0..=k}`: the coefficients of `X^k` on `C(X, j)`.
fn falling_expansion(k: usize) -> Vec<BigInt> {
    // Stirling numbers of the second kind, row k.
    let mut row = vec![BigInt::one()];
    for r in 1..=k {
        let mut next = vec![BigInt::zero(); r + 1];
        for j in 1..=r {
            let carry = if j < row.len() { &row[j] * j } else { BigInt::zero() };
            next[j] = carry + &row[j - 1];
        }
        row = next;
    }
    row.iter()
        .enumerate()
        .map(|(j, s)| s * factorial(j))
        .collect()
}

impl Add for &CharPolynomial {
    type Output = CharPolynomial;

    fn add(self, rhs: &CharPolynomial) -> CharPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &CharPolynomial {
    type Output = CharPolynomial;

    fn sub(self, rhs: &CharPolynomial) -> CharPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &CharPolynomial {
    type Output = CharPolynomial;

    fn neg(self) -> CharPolynomial {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &CharPolynomial {
    type Output = CharPolynomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &CharPolynomial) -> CharPolynomial {
        let mut out = CharPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let len = e1.len().max(e2.len());
                let e = (0..len)
                    .map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for CharPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPolynomial({self})")
    }
}

/// `C(X_•, λ) = ∏_i C(X_i, m_i(λ))`, of degree `|λ|`.
pub fn binomial_monomial(lambda: &Partition) -> CharPolynomial {
    let m = lambda.multiplicities();
    let key: Exponents = m[1..].iter().map(|&k| k as u32).collect();
    CharPolynomial::from_binomial_basis([(&trim(key), &BigRational::one())])
}

/// The character polynomial of the free module `M(W)` for `W` a
/// representation of `S_d`: `Σ_{ρ ⊢ d} χ_W(ρ) C(X_•, ρ)`. Exact for every n.
pub fn mw_charpoly(w: &SnRep) -> CharPolynomial {
    let chi = w.character();
    let mut acc = CharPolynomial::zero();
    for (rho, value) in chi.iter() {
        if !value.is_zero() {
            acc = &acc + &binomial_monomial(&rho).scale(value);
        }
    }
    acc
}

/// Stable multiplicity of `V(κ)_n` in `M(μ)_n` (Pieri), read off at an `n`
/// large enough for both padded shapes to exist.
fn stable_pieri(mu: &Partition, kappa: &Partition) -> bool {
    let n = mu.size() + kappa.size() + mu.first().max(kappa.first());
    let padded = pad(kappa, n).expect("n is past the padding threshold");
    is_horizontal_strip(mu, &padded)
}

/// The polynomial `P_λ` with `P_λ(σ) = χ_{λ[n]}(σ)` for all `n >= |λ| + λ_1`.
pub fn irreducible_charpoly(lambda: &Partition) -> CharPolynomial {
    static CACHE: OnceLock<RwLock<HashMap<Partition, CharPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(lambda) {
        return p.clone();
    }
    // M(λ)_n = Σ_κ m[λ][κ] V(κ)_n with m unitriangular; peel off the
    // lower-order terms.
    let mut p = mw_charpoly(&SnRep::irreducible(lambda));
    for kappa in partitions_up_to(lambda.size()) {
        if &kappa == lambda || !stable_pieri(lambda, &kappa) {
            continue;
        }
        debug_assert!(kappa.size() < lambda.size(), "Pieri matrix is unitriangular");
        p = &p - &irreducible_charpoly(&kappa);
    }
    cache
        .write()
        .unwrap()
        .entry(lambda.clone())
        .or_insert(p)
        .clone()
}
