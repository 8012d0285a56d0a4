use std::collections::HashMap;

use num_bigint::BigInt;

use super::{check_budget, quotient_character, span, GradedPieceReport, SignedAction, SparseVec};
use crate::error::{Error, Result};
use crate::partition::binomial;

pub const MAX_ARNOLD_GRADE: usize = 3;

/// Grade `i` of the exterior algebra on `w_{jk} = w_{kj}`, `j < k < n`.
struct ExteriorGrade {
    n: usize,
    pairs: Vec<(usize, usize)>,
    pair_index: HashMap<(usize, usize), usize>,
    basis: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

fn subsets(g: usize, i: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, g: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == i {
            out.push(cur.clone());
            return;
        }
        for x in start..g {
            cur.push(x);
            go(x + 1, g, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, g, i, &mut Vec::new(), &mut out);
    out
}

/// Sorts `word` in place; returns the sign of the sort, or 0 on a repeat.
fn sort_sign(word: &mut [usize]) -> i8 {
    let mut sign = 1;
    for a in 1..word.len() {
        let mut b = a;
        while b > 0 && word[b - 1] > word[b] {
            word.swap(b - 1, b);
            sign = -sign;
            b -= 1;
        }
    }
    if word.windows(2).any(|w| w[0] == w[1]) {
        0
    } else {
        sign
    }
}

impl ExteriorGrade {
    fn new(n: usize, i: usize) -> Self {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|j| (j + 1..n).map(move |k| (j, k))).collect();
        let pair_index = pairs.iter().enumerate().map(|(x, &p)| (p, x)).collect();
        let basis = subsets(pairs.len(), i);
        let index = basis.iter().cloned().enumerate().map(|(x, s)| (s, x)).collect();
        ExteriorGrade {
            n,
            pairs,
            pair_index,
            basis,
            index,
        }
    }

    fn w(&self, j: usize, k: usize) -> usize {
        self.pair_index[&(j.min(k), j.max(k))]
    }

    /// `e_S ∧ w_x ∧ w_y`, as a signed basis vector.
    fn extend(&self, s: &[usize], x: usize, y: usize) -> Option<(usize, i8)> {
        let mut word = s.to_vec();
        word.push(x);
        word.push(y);
        match sort_sign(&mut word) {
            0 => None,
            sign => Some((self.index[&word], sign)),
        }
    }
}

impl SignedAction for ExteriorGrade {
    fn n(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn act(&self, sigma: &[usize], b: usize) -> (usize, i8) {
        let mut word: Vec<usize> = self.basis[b]
            .iter()
            .map(|&x| {
                let (j, k) = self.pairs[x];
                self.w(sigma[j], sigma[k])
            })
            .collect();
        let sign = sort_sign(&mut word);
        (self.index[&word], sign)
    }
}

/// `H^i` of the pure braid group `P_n`: grade `i` of the exterior algebra
/// on the `w_{jk}` modulo the ideal of the Arnol'd relations
/// `w_{jk} w_{kl} + w_{kl} w_{lj} + w_{lj} w_{jk}`.
pub fn arnold_cohomology(i: usize, n: usize, budget: usize) -> Result<GradedPieceReport> {
    if i > MAX_ARNOLD_GRADE {
        return Err(Error::UnsupportedGrade {
            grade: i,
            max: MAX_ARNOLD_GRADE,
        });
    }
    let generators = n * n.saturating_sub(1) / 2;
    let count = usize::try_from(binomial(generators, i)).unwrap_or(usize::MAX);
    check_budget(count, budget)?;
    let top = ExteriorGrade::new(n, i);
    let ideal = if i >= 2 {
        let lower = subsets(generators, i - 2);
        let mut relations = Vec::new();
        for s in &lower {
            for j in 0..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        let (a, b, c) = (top.w(j, k), top.w(k, l), top.w(j, l));
                        let mut v: SparseVec = [(a, b), (b, c), (c, a)]
                            .iter()
                            .filter_map(|&(x, y)| top.extend(s, x, y))
                            .map(|(col, sign)| (col, BigInt::from(sign)))
                            .collect();
                        v.sort_by_key(|e| e.0);
                        let mut merged: SparseVec = Vec::with_capacity(v.len());
                        for (col, x) in v {
                            match merged.last_mut() {
                                Some((last, y)) if *last == col => *y += x,
                                _ => merged.push((col, x)),
                            }
                        }
                        merged.retain(|(_, x)| x != &BigInt::from(0));
                        relations.push(merged);
                    }
                }
            }
        }
        span(top.dim(), relations)
    } else {
        span(top.dim(), [])
    };
    let character = quotient_character(&top, &ideal)?;
    GradedPieceReport::new(n, vec![i], character)
}
