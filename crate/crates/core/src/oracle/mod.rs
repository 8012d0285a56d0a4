//! Brute-force linear algebra at small `n`: diagonal coinvariant algebras
//! and the cohomology of the pure braid group, as explicit `S_n`-modules.
//!
//! These computations share nothing with the symbolic side beyond the
//! class-function type, so they serve as an independent check on it.

mod arnold;
mod coinvariant;
mod echelon;
mod matrix;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

pub use arnold::{arnold_cohomology, MAX_ARNOLD_GRADE};
pub use coinvariant::{coinvariant_piece, coinvariant_total_dim, CoinvariantTotal};
pub use echelon::{Echelon, SparseVec};
pub use matrix::RationalMatrix;

use crate::characters::{class_table, ClassFunction};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default ceiling on the ambient basis size.
pub const DEFAULT_BUDGET: usize = 200_000;

/// `S_n` acting on a finite basis by signed permutations.
pub trait SignedAction: Sync {
    fn n(&self) -> usize;
    fn dim(&self) -> usize;
    /// Image of basis vector `b` under the permutation `sigma` of `0..n`:
    /// `sigma · e_b = sign · e_{image}`.
    fn act(&self, sigma: &[usize], b: usize) -> (usize, i8);
}

/// The permutation with cycle type `rho` whose cycles are consecutive runs
/// of labels, longest first.
pub fn class_representative(rho: &Partition) -> Vec<usize> {
    let mut sigma = Vec::with_capacity(rho.size());
    let mut start = 0;
    for &c in rho.parts() {
        for k in 0..c {
            sigma.push(start + (k + 1) % c);
        }
        start += c;
    }
    sigma
}

fn generators(n: usize) -> Vec<Vec<usize>> {
    if n < 2 {
        return Vec::new();
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    vec![swap, cycle]
}

fn apply(action: &dyn SignedAction, sigma: &[usize], v: &SparseVec) -> SparseVec {
    let mut out: SparseVec = v
        .iter()
        .map(|(b, x)| {
            let (image, sign) = action.act(sigma, *b);
            (image, if sign < 0 { -x } else { x.clone() })
        })
        .collect();
    out.sort_by_key(|e| e.0);
    out
}

/// Row-reduces a spanning set, stopping early once it fills the ambient space.
pub fn span(dim: usize, spanning: impl IntoIterator<Item = SparseVec>) -> Echelon {
    let mut e = Echelon::new();
    for v in spanning {
        if e.rank() == dim {
            break;
        }
        e.insert(v);
    }
    e
}

/// Character of `ambient / subspace` for an `S_n`-stable subspace.
///
/// The trace on the subspace is read from the echelon rows: if `b_i` has
/// pivot `p_i` with entry `d_i`, the trace of `σ` is `Σ (σ b_i)[p_i] / d_i`.
pub fn quotient_character(action: &dyn SignedAction, subspace: &Echelon) -> Result<ClassFunction> {
    let n = action.n();
    let dim = action.dim();
    if subspace.rank() < dim {
        for sigma in generators(n) {
            for (i, (_, row)) in subspace.rows().enumerate() {
                if !subspace.reduce(apply(action, &sigma, row)).is_empty() {
                    return Err(Error::Instability { vector: i });
                }
            }
        }
    }
    let table = class_table(n);
    let values: Vec<BigRational> = table
        .classes
        .par_iter()
        .map(|rho| {
            let sigma = class_representative(rho);
            let mut ambient = 0i64;
            for b in 0..dim {
                let (image, sign) = action.act(&sigma, b);
                if image == b {
                    ambient += i64::from(sign);
                }
            }
            let mut sub = BigRational::zero();
            for (p, row) in subspace.rows() {
                let d = &row[0].1;
                for (b, x) in row {
                    let (image, sign) = action.act(&sigma, *b);
                    if image == p {
                        let x = if sign < 0 { -x } else { x.clone() };
                        sub += BigRational::new(x, d.clone());
                    }
                }
            }
            BigRational::from_integer(BigInt::from(ambient)) - sub
        })
        .collect();
    ClassFunction::from_values(n, values)
}

/// A graded piece of one of the oracle algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedPieceReport {
    pub n: usize,
    /// The multidegree `J`, or the single cohomological grade `[i]`.
    pub grading: Vec<usize>,
    pub dimension: usize,
    pub character: ClassFunction,
}

impl GradedPieceReport {
    fn new(n: usize, grading: Vec<usize>, character: ClassFunction) -> Result<Self> {
        let dimension = crate::characters::as_multiplicity(character.degree())
            .map_err(|e| Error::Internal(format!("quotient dimension: {e}")))?;
        Ok(GradedPieceReport {
            n,
            grading,
            dimension: usize::try_from(dimension).map_err(|_| Error::Overflow)?,
            character,
        })
    }
}

fn check_budget(count: usize, budget: usize) -> Result<()> {
    if count > budget {
        return Err(Error::BudgetExceeded { count, budget });
    }
    Ok(())
}
