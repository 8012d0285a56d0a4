use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer vector, sorted by column, no stored zeros.
pub type SparseVec = Vec<(usize, BigInt)>;

/// `ca * a + cb * b`.
fn combine(ca: &BigInt, a: &[(usize, BigInt)], cb: &BigInt, b: &[(usize, BigInt)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, ca * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, cb * &b[j].1));
            j += 1;
        } else {
            let v = ca * &a[i].1 + cb * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Divides out the content and makes the leading entry positive.
fn normalize(v: &mut SparseVec) {
    let Some((_, lead)) = v.first() else { return };
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if lead.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, x) in v.iter_mut() {
            *x /= &g;
        }
    }
}

pub(crate) fn entry(v: &[(usize, BigInt)], col: usize) -> Option<&BigInt> {
    v.binary_search_by_key(&col, |e| e.0).ok().map(|i| &v[i].1)
}

/// Row space of a set of integer vectors, kept in reduced echelon form.
///
/// Each row is primitive with a positive pivot at its leading column, and
/// every other row vanishes in that column. Those conditions pin the rows
/// down uniquely, so the result does not depend on insertion order.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows with their pivot columns, in insertion order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.rows.iter().map(|r| (r[0].0, r))
    }

    /// Reduces `v` modulo the row space; zero iff `v` lies in it.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let hits: Vec<usize> = v
            .iter()
            .filter_map(|(c, _)| self.pivots.get(c).copied())
            .collect();
        for r in hits {
            let row = &self.rows[r];
            let (p, d) = (&row[0].0, &row[0].1);
            let Some(x) = entry(&v, *p).cloned() else { continue };
            v = combine(d, &v, &(-x), row);
            normalize(&mut v);
        }
        v
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(v);
        if v.is_empty() {
            return false;
        }
        normalize(&mut v);
        let (p, d) = (v[0].0, v[0].1.clone());
        for row in self.rows.iter_mut() {
            if let Some(x) = entry(row, p).cloned() {
                *row = combine(&d, row, &(-x), &v);
                normalize(row);
            }
        }
        self.pivots.insert(p, self.rows.len());
        self.rows.push(v);
        true
    }
}
