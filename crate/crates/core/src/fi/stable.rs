//! Stable decompositions in the padded coordinates `V(λ)_n = V_{λ[n]}`.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use super::CharSequence;
use crate::characters::{decompose, irreducible_character, SnRep};
use crate::error::{Error, Result};
use crate::partition::{pad, partitions_up_to, Partition};

#[derive(Serialize)]
struct Entry<'a> {
    partition: &'a Partition,
    mult: u64,
}

fn table_json<S: Serializer>(
    table: &BTreeMap<Partition, u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(table.iter().map(|(partition, &mult)| Entry { partition, mult }))
}

/// Stable coefficients `g^ν_{λμ}` of `V(λ)_n ⊗ V(μ)_n = ⊕ g^ν V(ν)_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MurnaghanReport {
    #[serde(serialize_with = "table_json")]
    pub table: BTreeMap<Partition, u64>,
    /// First `n` of the run of `window` identical tables. Observed, not proved.
    pub observed_onset: usize,
    pub final_n: usize,
    pub window: usize,
    /// No effective bound is known, so this is always `None`.
    pub certified_bound: Option<usize>,
}

fn padded_table(r: &SnRep) -> BTreeMap<Partition, u64> {
    r.components().map(|(nu, m)| (nu.tail(), m)).collect()
}

/// Decomposes `χ_{λ[n]} χ_{μ[n]}` for `n = |λ|+λ_1+|μ|+μ_1, ...` until the
/// table in padded coordinates repeats for `window` consecutive `n`.
pub fn murnaghan(lambda: &Partition, mu: &Partition, window: usize) -> Result<MurnaghanReport> {
    if window == 0 {
        return Err(Error::Range {
            what: "window",
            value: 0,
            limit: 1,
        });
    }
    let n0 = lambda.size() + lambda.first() + mu.size() + mu.first();
    let cap = n0 + 50;
    let mut run_start = n0;
    let mut previous: Option<BTreeMap<Partition, u64>> = None;
    for n in n0..=cap {
        let chi = irreducible_character(&pad(lambda, n)?)
            .try_mul(&irreducible_character(&pad(mu, n)?))?;
        let table = padded_table(&decompose(&chi)?);
        if previous.as_ref() != Some(&table) {
            run_start = n;
        }
        if n + 1 - run_start >= window {
            return Ok(MurnaghanReport {
                table,
                observed_onset: run_start,
                final_n: n,
                window,
                certified_bound: None,
            });
        }
        previous = Some(table);
    }
    Err(Error::Internal(format!(
        "Murnaghan table for {lambda} x {mu} not constant by n = {cap}"
    )))
}

/// Multiplicities `c_λ(n) = <χ_n, χ_{λ[n]}>` of a weight-`d` sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableReport {
    pub d: usize,
    pub max_n: usize,
    pub window: usize,
    /// Whether the table is constant on the last `window` declared `n`.
    pub stable: bool,
    /// Table at `max_n`, zero entries omitted.
    #[serde(serialize_with = "table_json")]
    pub table: BTreeMap<Partition, u64>,
    /// First `n` from which every `c_λ(n)` equals its value at `max_n`.
    pub observed_onset: usize,
    /// Set only when the caller knows a stable range for the input.
    pub certified_bound: Option<usize>,
    /// The `λ` whose `c_λ(n)` still change inside the final window.
    pub varying: Vec<Partition>,
}

impl StableReport {
    pub fn with_certified_bound(mut self, bound: usize) -> Self {
        self.certified_bound = Some(bound);
        self
    }
}

/// Reads a character sequence in padded coordinates.
///
/// The onset is the first `n` from which `seq(n) = ⊕ c_λ V(λ)_n` holds with
/// every `V(λ)_n` in the final table defined. A constituent `V_ν` with
/// `n - ν_1 > d` is a weight violation.
pub fn stable_decompose(seq: &CharSequence<'_>, d: usize, window: usize) -> Result<StableReport> {
    let max_n = seq.max_n();
    if max_n < 2 * d + 2 {
        return Err(Error::Range {
            what: "2d + 2",
            value: 2 * d + 2,
            limit: max_n,
        });
    }
    if window == 0 || window > max_n + 1 {
        return Err(Error::Range {
            what: "window",
            value: window,
            limit: max_n + 1,
        });
    }
    let mut rows: Vec<BTreeMap<Partition, u64>> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let r = decompose(&seq.at(n)?)?;
        for (nu, _) in r.components() {
            if n - nu.first() > d {
                return Err(Error::WeightViolation {
                    padded: nu.clone(),
                    n,
                    d,
                });
            }
        }
        rows.push(padded_table(&r));
    }

    let domain = partitions_up_to(d);
    let value = |n: usize, lambda: &Partition| rows[n].get(lambda).copied().unwrap_or(0);
    // Where λ[n] does not exist, c_λ(n) reads as 0, so a stable summand
    // V(λ) only counts as present once its padded shape exists.
    let agrees = |n: usize, lambda: &Partition| value(n, lambda) == value(max_n, lambda);

    let observed_onset = (0..max_n)
        .rev()
        .find(|&n| domain.iter().any(|l| !agrees(n, l)))
        .map_or(0, |n| n + 1);
    let first = max_n + 1 - window;
    let varying: Vec<Partition> = domain
        .iter()
        .filter(|l| (first..max_n).any(|n| !agrees(n, l)))
        .cloned()
        .collect();
    Ok(StableReport {
        d,
        max_n,
        window,
        stable: varying.is_empty(),
        table: rows.pop().expect("max_n + 1 rows"),
        observed_onset,
        certified_bound: None,
        varying,
    })
}
