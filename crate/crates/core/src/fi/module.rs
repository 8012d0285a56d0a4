use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::characters::{parse_sum, render_sum, SnRep};
use crate::error::{Error, Result};
use crate::partition::{hook_dimension, partitions_of, Partition};

/// An FI♯-module in normal form `⊕ c_λ M(λ)`, where `M(λ) = M(V_λ)` is the
/// free FI♯-module on the irreducible `V_λ`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FiSharpModule {
    summands: BTreeMap<Partition, u64>,
}

impl FiSharpModule {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `M(λ)`.
    pub fn free(lambda: &Partition) -> Self {
        let mut v = Self::zero();
        v.summands.insert(lambda.clone(), 1);
        v
    }

    /// `M(W)` for a representation `W` of some `S_d`.
    pub fn from_rep(w: &SnRep) -> Self {
        let mut v = Self::zero();
        for (lambda, m) in w.components() {
            v.summands.insert(lambda.clone(), m);
        }
        v
    }

    /// `M(m) = M(k[S_m])`: each `M(λ)`, `λ ⊢ m`, with multiplicity `dim V_λ`.
    pub fn free_regular(m: usize) -> Self {
        let mut v = Self::zero();
        for lambda in partitions_of(m) {
            let dim = u64::try_from(hook_dimension(&lambda)).expect("small dimension");
            v.summands.insert(lambda, dim);
        }
        v
    }

    pub fn from_summands(entries: impl IntoIterator<Item = (Partition, u64)>) -> Result<Self> {
        let mut v = Self::zero();
        for (lambda, m) in entries {
            v.add(&lambda, m)?;
        }
        Ok(v)
    }

    pub fn add(&mut self, lambda: &Partition, m: u64) -> Result<()> {
        if m > 0 {
            let slot = self.summands.entry(lambda.clone()).or_insert(0);
            *slot = slot.checked_add(m).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    /// Direct sum.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (lambda, m) in other.summands() {
            out.add(lambda, m)?;
        }
        Ok(out)
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.summands.get(lambda).copied().unwrap_or(0)
    }

    pub fn summands(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.summands.iter().map(|(p, &m)| (p, m))
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Largest `|λ|` in the support (0 for the zero module).
    pub fn generation_degree(&self) -> usize {
        self.summands.keys().map(Partition::size).max().unwrap_or(0)
    }

    /// The generators in degree `d`: `H_0(V)_d = ⊕_{|λ| = d} c_λ V_λ`.
    pub fn generators_in_degree(&self, d: usize) -> SnRep {
        SnRep::from_multiplicities(
            d,
            self.summands()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, m)| (l.clone(), m)),
        )
        .expect("sizes match by construction")
    }

    /// Closed-form stability degree: `max λ_1` over the support.
    pub fn stability_degree_bound(&self) -> usize {
        self.summands.keys().map(Partition::first).max().unwrap_or(0)
    }
}

impl fmt::Display for FiSharpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sum("M", self.summands()))
    }
}

impl fmt::Debug for FiSharpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiSharpModule({self})")
    }
}

impl FromStr for FiSharpModule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_summands(parse_sum('M', s)?)
    }
}

#[derive(Serialize, Deserialize)]
struct SummandJson {
    partition: Partition,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct ModuleJson {
    summands: Vec<SummandJson>,
}

impl Serialize for FiSharpModule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ModuleJson {
            summands: self
                .summands()
                .map(|(p, m)| SummandJson {
                    partition: p.clone(),
                    mult: m,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiSharpModule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ModuleJson::deserialize(d)?;
        Self::from_summands(raw.summands.into_iter().map(|s| (s.partition, s.mult)))
            .map_err(D::Error::custom)
    }
}
