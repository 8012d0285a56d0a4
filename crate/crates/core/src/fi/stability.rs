//! Stability degree of an FI♯-module, observed through the coinvariant
//! sequences `Φ_a(V)_n = (V_{n+a})_{S_n}`.

use serde::Serialize;

use super::{phi, FiSharpModule};
use crate::characters::SnRep;
use crate::error::{Error, Result};
use crate::partition::partitions_of;

/// The sequence `Φ_a(V)_0, ..., Φ_a(V)_{n_max}` for one `a`, with the
/// onsets read off from it.
#[derive(Debug, Clone, Serialize)]
pub struct PhiSeries {
    pub a: usize,
    pub values: Vec<SnRep>,
    /// First `n` from which every step `n -> n+1` admits an embedding
    /// (multiplicities never drop).
    pub injectivity_onset: usize,
    /// First `n` from which the `S_a`-representation no longer changes.
    pub surjectivity_onset: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilityProfile {
    pub a_max: usize,
    pub n_max: usize,
    pub series: Vec<PhiSeries>,
    pub observed_injectivity: usize,
    pub observed_surjectivity: usize,
    /// `max(observed_injectivity, observed_surjectivity)` over the window.
    pub observed_onset: usize,
    /// `max λ_1` over the summands.
    pub certified_bound: usize,
}

fn embeds(small: &SnRep, big: &SnRep) -> bool {
    partitions_of(small.n()).iter().all(|l| small.multiplicity(l) <= big.multiplicity(l))
}

fn series(v: &FiSharpModule, a: usize, n_max: usize) -> PhiSeries {
    let values: Vec<SnRep> = (0..=n_max).map(|n| phi(v, a, n)).collect();
    let last = values.len() - 1;
    let injectivity_onset = (0..last)
        .rev()
        .find(|&n| !embeds(&values[n], &values[n + 1]))
        .map_or(0, |n| n + 1);
    let surjectivity_onset = (0..last)
        .rev()
        .find(|&n| values[n] != values[n + 1])
        .map_or(0, |n| n + 1);
    PhiSeries {
        a,
        values,
        injectivity_onset,
        surjectivity_onset,
    }
}

/// Computes `Φ_a(V)_n` for `a <= a_max`, `n <= n_max` and reports where the
/// maps `Φ_a(V)_n -> Φ_a(V)_{n+1}` become injective and surjective.
pub fn stability_profile(
    v: &FiSharpModule,
    a_max: usize,
    n_max: usize,
) -> Result<StabilityProfile> {
    let gen = v.generation_degree();
    if n_max < gen + 1 {
        return Err(Error::Range {
            what: "generation degree + 1",
            value: gen + 1,
            limit: n_max,
        });
    }
    // λ_1 <= |λ| <= gen < n_max, so the window always reaches past the bound.
    let certified_bound = v.stability_degree_bound();
    let series: Vec<PhiSeries> = (0..=a_max).map(|a| series(v, a, n_max)).collect();
    let observed_injectivity = series.iter().map(|s| s.injectivity_onset).max().unwrap_or(0);
    let observed_surjectivity = series.iter().map(|s| s.surjectivity_onset).max().unwrap_or(0);
    let observed_onset = observed_injectivity.max(observed_surjectivity);
    if observed_onset > certified_bound {
        return Err(Error::WindowTooSmall {
            bound: certified_bound,
            observed: observed_onset,
            n_max,
        });
    }
    Ok(StabilityProfile {
        a_max,
        n_max,
        series,
        observed_injectivity,
        observed_surjectivity,
        observed_onset,
        certified_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    #[test]
    fn trivial_module() {
        let prof = stability_profile(&FiSharpModule::free(&Partition::empty()), 3, 5).unwrap();
        assert_eq!(prof.observed_onset, 0);
        assert_eq!(prof.certified_bound, 0);
    }

    #[test]
    fn free_regular_modules() {
        for m in 1..=3 {
            let prof = stability_profile(&FiSharpModule::free_regular(m), 2, 7).unwrap();
            assert_eq!(prof.observed_injectivity, 0);
            assert_eq!(prof.observed_surjectivity, m);
        }
    }

    #[test]
    fn two_one() {
        let v: FiSharpModule = "M[2,1]".parse().unwrap();
        let prof = stability_profile(&v, 3, 8).unwrap();
        assert_eq!(prof.certified_bound, 2);
        assert_eq!(prof.observed_onset, 2);
    }

    #[test]
    fn observed_degree_is_first_row() {
        for lambda in crate::partition::partitions_up_to(4) {
            let prof = stability_profile(&FiSharpModule::free(&lambda), 3, 9).unwrap();
            assert_eq!(prof.observed_onset, lambda.first(), "{lambda}");
        }
    }

    #[test]
    fn window_checks() {
        let v: FiSharpModule = "M[3]".parse().unwrap();
        assert!(matches!(stability_profile(&v, 1, 3), Err(Error::Range { .. })));
        let v: FiSharpModule = "M[4]".parse().unwrap();
        assert!(matches!(
            stability_profile(&v, 1, 4),
            Err(Error::Range { .. })
        ));
    }
}
