//! Irreducible character values by border-strip removal.
//!
//! Shapes are handled as beta-sets: removing a border strip of length `k`
//! moves one bead from position `b` to the empty position `b - k`, with sign
//! `(-1)^(beads strictly between)`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::Partition;

type Key = (Partition, Partition);

fn memo() -> &'static RwLock<HashMap<Key, BigInt>> {
    static MEMO: OnceLock<RwLock<HashMap<Key, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `χ_λ(ρ)` for `|λ| = |ρ|`. Returns zero when the sizes differ.
pub fn character_value(lambda: &Partition, rho: &Partition) -> BigInt {
    if lambda.size() != rho.size() {
        return BigInt::zero();
    }
    if rho.is_empty() {
        return BigInt::one();
    }
    // Only the trivial and sign characters need no recursion.
    if lambda.len() == 1 {
        return BigInt::one();
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(v) = memo().read().unwrap().get(&key) {
        return v.clone();
    }
    let k = rho.first();
    let rest = rho.tail();
    let mut total = BigInt::zero();
    for (shape, sign) in remove_border_strips(lambda, k) {
        let v = character_value(&shape, &rest);
        if sign {
            total -= v;
        } else {
            total += v;
        }
    }
    memo().write().unwrap().insert(key, total.clone());
    total
}

/// All shapes obtained from `lambda` by removing a border strip of length
/// `k`, paired with `true` when the strip has odd height (negative sign).
fn remove_border_strips(lambda: &Partition, k: usize) -> Vec<(Partition, bool)> {
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .collect();
        out.push((Partition::from_unsorted(parts), between % 2 == 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn strips_of_two_one() {
        let mut s = remove_border_strips(&p(&[2, 1]), 1);
        s.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(s, vec![(p(&[2]), false), (p(&[1, 1]), false)]);
        let s = remove_border_strips(&p(&[2, 1]), 3);
        assert_eq!(s, vec![(Partition::empty(), true)]);
        assert!(remove_border_strips(&p(&[2, 1]), 2).is_empty());
    }

    #[test]
    fn s3_table() {
        let l = p(&[2, 1]);
        assert_eq!(character_value(&l, &p(&[1, 1, 1])), BigInt::from(2));
        assert_eq!(character_value(&l, &p(&[2, 1])), BigInt::from(0));
        assert_eq!(character_value(&l, &p(&[3])), BigInt::from(-1));
        let sign = p(&[1, 1, 1]);
        assert_eq!(character_value(&sign, &p(&[2, 1])), BigInt::from(-1));
        assert_eq!(character_value(&sign, &p(&[3])), BigInt::from(1));
    }
}
