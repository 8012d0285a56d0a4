//! Integer partitions: the index set for irreducible representations and
//! conjugacy classes of the symmetric groups.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The same type is used for Young diagrams (indexing irreducibles) and for
/// cycle types (indexing conjugacy classes).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros. Useful when the parts come from arithmetic.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of the first row, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), with zeros past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// `m[i]` is the number of parts equal to `i`; index 0 is unused.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Cell-wise containment of Young diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Removes the first row: the inverse of [`pad`] on its legal domain.
    pub fn tail(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// All partitions obtained by deleting one corner cell.
    pub fn remove_corners(&self) -> Vec<Partition> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                Partition { parts }
            })
            .collect()
    }

    /// All partitions obtained by adding one cell.
    pub fn add_cells(&self) -> Vec<Partition> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
            .map(|i| {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                Partition { parts }
            })
            .collect()
    }

    /// Hook length of the cell in row `i`, column `j` (both 0-based).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.parts[i] - j - 1;
        let leg = self.parts[i + 1..].iter().take_while(|&&p| p > j).count();
        arm + leg + 1
    }
}

impl Ord for Partition {
    /// Canonical order: by size, then reverse-lexicographic on parts, so that
    /// `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected `[a,b,...]`, got `{s}`")))?;
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in canonical (reverse-lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn extend(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            extend(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `|λ|!` divided by the product of the hook lengths: the degree of `V_λ`.
pub fn hook_dimension(lambda: &Partition) -> BigInt {
    let mut hooks = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= lambda.hook(i, j);
        }
    }
    factorial(lambda.size()) / hooks
}

/// `z_ρ = ∏ i^{m_i} m_i!`, the order of the centralizer of a permutation
/// of cycle type `ρ`.
pub fn centralizer_order(rho: &Partition) -> BigInt {
    rho.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigInt::one(), |acc, (i, &m)| {
            acc * BigInt::from(i).pow(m as u32) * factorial(m)
        })
}

/// The padded partition `λ[n] = (n - |λ|, λ_1, ..., λ_ℓ)`.
pub fn pad(lambda: &Partition, n: usize) -> Result<Partition> {
    let min = lambda.size() + lambda.first();
    if n < min {
        return Err(Error::PaddingRange {
            partition: lambda.clone(),
            n,
            min,
        });
    }
    let mut parts = Vec::with_capacity(lambda.len() + 1);
    parts.push(n - lambda.size());
    parts.extend_from_slice(lambda.parts());
    Ok(Partition::from_unsorted(parts))
}

/// True iff `inner ⊆ outer` and the skew shape has at most one cell per column.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    if !outer.contains(inner) {
        return false;
    }
    // No column holds two skew cells iff outer interlaces inner.
    (1..outer.len()).all(|i| outer.part(i) <= inner.part(i - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Euler's pentagonal-number recurrence, independent of the generator.
    fn pentagonal_counts(max: usize) -> Vec<i64> {
        let mut table = vec![0i64; max + 1];
        table[0] = 1;
        for i in 1..=max {
            let mut sum = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * table[i - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= i {
                    sum += sign * table[i - g2];
                }
            }
            table[i] = sum;
        }
        table
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(1), vec![p(&[1])]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn counts_follow_pentagonal_recurrence() {
        let expected = pentagonal_counts(30);
        for n in 0..=30 {
            let all = partitions_of(n);
            assert_eq!(all.len() as i64, expected[n], "n = {n}");
            assert!(all.windows(2).all(|w| w[0] < w[1]), "order at n = {n}");
        }
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(hook_dimension(&p(&[5])), BigInt::from(1));
        assert_eq!(hook_dimension(&Partition::column(5)), BigInt::from(1));
        assert_eq!(hook_dimension(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(hook_dimension(&Partition::empty()), BigInt::from(1));
        for n in 0..=8 {
            let sum: BigInt = partitions_of(n)
                .iter()
                .map(|l| hook_dimension(l).pow(2))
                .sum();
            assert_eq!(sum, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer_order(&Partition::column(5)), factorial(5));
        assert_eq!(centralizer_order(&p(&[6])), BigInt::from(6));
        assert_eq!(centralizer_order(&p(&[2, 2])), BigInt::from(8));
        for n in 0..=8 {
            let total: BigInt = partitions_of(n)
                .iter()
                .map(|r| factorial(n) / centralizer_order(r))
                .sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn padding() {
        assert_eq!(pad(&Partition::empty(), 5).unwrap(), p(&[5]));
        assert_eq!(pad(&p(&[1]), 3).unwrap(), p(&[2, 1]));
        assert_eq!(pad(&p(&[2, 1]), 6).unwrap(), p(&[3, 2, 1]));
        assert!(matches!(
            pad(&p(&[2, 1]), 4),
            Err(Error::PaddingRange { min: 5, .. })
        ));
    }

    #[test]
    fn padding_is_injective_and_canonical() {
        for n in 0..=10 {
            let padded: Vec<_> = partitions_up_to(n)
                .iter()
                .filter_map(|l| pad(l, n).ok().map(|q| (l.clone(), q)))
                .collect();
            for (l, q) in &padded {
                assert!(q.part(0) >= q.part(1));
                assert_eq!(&q.tail(), l);
            }
            let mut images: Vec<_> = padded.iter().map(|(_, q)| q.clone()).collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), padded.len());
        }
    }

    #[test]
    fn horizontal_strips() {
        assert!(is_horizontal_strip(&p(&[2]), &p(&[3])));
        assert!(!is_horizontal_strip(&p(&[1]), &p(&[1, 1, 1])));
        assert!(is_horizontal_strip(&p(&[2, 1]), &p(&[4, 2])));
        assert!(!is_horizontal_strip(&p(&[2, 1]), &p(&[1, 1, 1])));
        assert!(is_horizontal_strip(&Partition::empty(), &p(&[3])));
        assert!(!is_horizontal_strip(&Partition::empty(), &p(&[2, 1])));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(" [ 3 , 1 ] ".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,3]".parse::<Partition>().is_err());
        assert!("[2,0]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
    }

    #[test]
    fn conjugates_and_corners() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1]).remove_corners(), vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(
            p(&[2, 1]).add_cells(),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
    }
}
