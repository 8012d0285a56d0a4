use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::{check_budget, quotient_character, Echelon, GradedPieceReport, SignedAction, SparseVec};
use crate::error::{Error, Result};
use crate::partition::binomial;

/// Monomials of one multidegree `J` in the variables `x^(t)_i`,
/// `t < r`, `i < n`, with `S_n` permuting the lower index.
struct MonomialSpace {
    n: usize,
    r: usize,
    monomials: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<u8>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first as u8);
            out.push(rest);
        }
    }
    out
}

fn monomial_count(j: &[usize], n: usize) -> usize {
    let count: BigInt = j
        .iter()
        .map(|&jt| {
            if n == 0 {
                BigInt::from(u8::from(jt == 0))
            } else {
                binomial(jt + n - 1, n - 1)
            }
        })
        .product();
    usize::try_from(count).unwrap_or(usize::MAX)
}

impl MonomialSpace {
    fn new(j: &[usize], n: usize) -> Self {
        let mut monomials = vec![Vec::new()];
        for &jt in j {
            let blocks = compositions(jt, n);
            monomials = monomials
                .iter()
                .flat_map(|prefix| {
                    blocks.iter().map(move |b| {
                        let mut m = prefix.clone();
                        m.extend_from_slice(b);
                        m
                    })
                })
                .collect();
        }
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialSpace {
            n,
            r: j.len(),
            monomials,
            index,
        }
    }

    fn permute(&self, sigma: &[usize], m: &[u8]) -> Vec<u8> {
        let mut out = vec![0; m.len()];
        for t in 0..self.r {
            for i in 0..self.n {
                out[t * self.n + sigma[i]] = m[t * self.n + i];
            }
        }
        out
    }

    /// Orbit sums, each as the list of monomials in the orbit.
    fn orbits(&self) -> Vec<Vec<usize>> {
        let gens = super::generators(self.n);
        let mut seen = vec![false; self.monomials.len()];
        let mut out = Vec::new();
        for start in 0..self.monomials.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut k = 0;
            while k < orbit.len() {
                let b = orbit[k];
                for g in &gens {
                    let image = self.act(g, b).0;
                    if !seen[image] {
                        seen[image] = true;
                        orbit.push(image);
                    }
                }
                k += 1;
            }
            out.push(orbit);
        }
        out
    }
}

impl SignedAction for MonomialSpace {
    fn n(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        self.monomials.len()
    }

    fn act(&self, sigma: &[usize], b: usize) -> (usize, i8) {
        (self.index[&self.permute(sigma, &self.monomials[b])], 1)
    }
}

/// All `J'` with `0 < J' <= J`, by total degree.
fn sub_degrees(j: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for &jt in j {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=jt).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.retain(|q| q.iter().any(|&x| x > 0));
    out.sort_by_key(|q| (q.iter().sum::<usize>(), q.clone()));
    out
}

/// The degree-`J` part of the ideal generated by invariants without
/// constant term, spanned by (orbit sum of degree `J'`) × (monomial of
/// degree `J - J'`).
fn ideal_piece(space: &MonomialSpace, j: &[usize], n: usize) -> Echelon {
    let dim = space.dim();
    let mut e = Echelon::new();
    'outer: for jp in sub_degrees(j) {
        let rest: Vec<usize> = j.iter().zip(&jp).map(|(a, b)| a - b).collect();
        let low = MonomialSpace::new(&jp, n);
        let high = MonomialSpace::new(&rest, n);
        for orbit in low.orbits() {
            for m in &high.monomials {
                let mut v: SparseVec = orbit
                    .iter()
                    .map(|&u| {
                        let prod: Vec<u8> = low.monomials[u].iter().zip(m).map(|(a, b)| a + b).collect();
                        (space.index[&prod], BigInt::from(1))
                    })
                    .collect();
                v.sort_by_key(|e| e.0);
                e.insert(v);
                if e.rank() == dim {
                    break 'outer;
                }
            }
        }
    }
    e
}

fn checked_space(r: usize, j: &[usize], n: usize, budget: usize) -> Result<MonomialSpace> {
    if r == 0 || j.len() != r {
        return Err(Error::Parse(format!(
            "multidegree {j:?} must have exactly r = {r} >= 1 entries"
        )));
    }
    if j.iter().any(|&x| x > u8::MAX as usize / 2) {
        return Err(Error::Range {
            what: "multidegree entry",
            value: j.iter().copied().max().unwrap_or(0),
            limit: u8::MAX as usize / 2,
        });
    }
    check_budget(monomial_count(j, n), budget)?;
    Ok(MonomialSpace::new(j, n))
}

/// The multidegree-`J` piece of the diagonal coinvariant algebra
/// `k[x^(1), ..., x^(r)] / (invariants without constant term)` on `n` points.
pub fn coinvariant_piece(r: usize, j: &[usize], n: usize, budget: usize) -> Result<GradedPieceReport> {
    let space = checked_space(r, j, n, budget)?;
    let ideal = ideal_piece(&space, j, n);
    let character = quotient_character(&space, &ideal)?;
    GradedPieceReport::new(n, j.to_vec(), character)
}

/// Total dimension of the diagonal coinvariant algebra, shell by shell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoinvariantTotal {
    pub r: usize,
    pub n: usize,
    pub total: usize,
    /// Dimension of each total-degree shell, starting at degree 0.
    pub shells: Vec<usize>,
    /// The first total degree whose shell vanishes. Summation stops there.
    pub zero_shell: usize,
    pub termination: &'static str,
}

const TERMINATION: &str = "stopped at the first vanishing total-degree shell; \
every monomial of higher degree is a multiple of one in that shell, so all later shells vanish too";

/// Sums the piece dimensions over all multidegrees until a whole
/// total-degree shell vanishes. Only `r` in `{1, 2}` is supported.
pub fn coinvariant_total_dim(r: usize, n: usize, budget: usize) -> Result<CoinvariantTotal> {
    if !(1..=2).contains(&r) {
        return Err(Error::Range {
            what: "number of variable sets",
            value: r,
            limit: 2,
        });
    }
    let mut shells = Vec::new();
    for degree in 0.. {
        let mut shell = 0;
        for a in 0..=degree {
            let j = if r == 1 {
                if a < degree {
                    continue;
                }
                vec![degree]
            } else {
                vec![a, degree - a]
            };
            let space = checked_space(r, &j, n, budget)?;
            shell += space.dim() - ideal_piece(&space, &j, n).rank();
        }
        shells.push(shell);
        if shell == 0 {
            break;
        }
    }
    Ok(CoinvariantTotal {
        r,
        n,
        total: shells.iter().sum(),
        zero_shell: shells.len() - 1,
        shells,
        termination: TERMINATION,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::CharPolynomial;
    use crate::characters::ClassFunction;
    use crate::oracle::DEFAULT_BUDGET;

    fn expect(poly: &str, report: &GradedPieceReport) {
        let p: CharPolynomial = poly.parse().unwrap();
        for (rho, value) in report.character.iter() {
            assert_eq!(&p.evaluate(&rho), value, "{poly} at {rho}");
        }
    }

    #[test]
    fn small_pieces() {
        let r = coinvariant_piece(1, &[1], 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.dimension, 3);
        expect("X1 - 1", &r);
        let r = coinvariant_piece(2, &[1, 1], 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.dimension, 3);
        expect("2*C(X1,2) - X1", &r);
        for n in 0..=4 {
            for rr in 1..=2 {
                let r = coinvariant_piece(rr, &vec![0; rr], n, DEFAULT_BUDGET).unwrap();
                assert_eq!(r.character, ClassFunction::trivial(n));
            }
        }
        let r = coinvariant_piece(1, &[2], 5, DEFAULT_BUDGET).unwrap();
        expect("C(X1,2) + X2 - 1", &r);
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(coinvariant_piece(1, &[1, 1], 3, 100), Err(Error::Parse(_))));
        assert!(matches!(coinvariant_piece(0, &[], 3, 100), Err(Error::Parse(_))));
        assert_eq!(
            coinvariant_piece(1, &[3], 5, 20),
            Err(Error::BudgetExceeded { count: 35, budget: 20 })
        );
        assert!(matches!(coinvariant_total_dim(3, 2, 100), Err(Error::Range { .. })));
    }

    #[test]
    fn small_totals() {
        assert_eq!(coinvariant_total_dim(1, 1, DEFAULT_BUDGET).unwrap().total, 1);
        assert_eq!(coinvariant_total_dim(1, 3, DEFAULT_BUDGET).unwrap().total, 6);
        let r = coinvariant_total_dim(2, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.total, 16);
        assert_eq!(&r.shells[..2], &[1, 4]);
        assert_eq!(r.shells.last(), Some(&0));
    }

    #[test]
    fn monomial_spaces() {
        assert_eq!(compositions(2, 3).len(), 6);
        assert_eq!(monomial_count(&[2, 1], 3), 18);
        assert_eq!(MonomialSpace::new(&[2, 1], 3).dim(), 18);
        assert_eq!(monomial_count(&[1], 0), 0);
        assert_eq!(sub_degrees(&[1, 1]), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
