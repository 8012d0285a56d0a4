//! The FI♯-module calculus at the level of characters.
//!
//! Every FI♯-module is a direct sum of free pieces `M(W)`, so a module is
//! stored as its multiset of `M(λ)` summands. Characters, character
//! polynomials and dimensions follow from the free pieces; the inverse
//! direction (reading off the summands from characters) is [`peel_off`].

mod module;
mod sequence;
mod stability;
mod stable;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

pub use module::FiSharpModule;
pub use sequence::CharSequence;
pub use stability::{stability_profile, PhiSeries, StabilityProfile};
pub use stable::{murnaghan, stable_decompose, MurnaghanReport, StableReport};

use crate::characters::{
    class_table, decompose, induction_product, irreducible_character, young_coinvariants,
    ClassFunction, SnRep,
};
use crate::charpoly::{mw_charpoly, CharPolynomial, UniPoly};
use crate::error::{Error, Result};
use crate::partition::{hook_dimension, Partition};

/// Character of `M(λ)_n = Ind_{S_{|λ|} × S_{n-|λ|}}^{S_n} (V_λ ⊠ k)`.
pub fn free_character(lambda: &Partition, n: usize) -> Arc<ClassFunction> {
    type Cache = RwLock<HashMap<(Partition, usize), Arc<ClassFunction>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), n);
    if let Some(chi) = cache.read().unwrap().get(&key) {
        return Arc::clone(chi);
    }
    let chi = if lambda.size() > n {
        ClassFunction::zero(n)
    } else {
        induction_product(
            &irreducible_character(lambda),
            &ClassFunction::trivial(n - lambda.size()),
        )
    };
    Arc::clone(cache.write().unwrap().entry(key).or_insert(Arc::new(chi)))
}

/// The character of `V_n`.
pub fn character_at(v: &FiSharpModule, n: usize) -> ClassFunction {
    let mut acc = ClassFunction::zero(n);
    for (lambda, m) in v.summands() {
        if lambda.size() > n {
            continue;
        }
        let chi = free_character(lambda, n);
        acc = &acc + &chi.scale(&BigRational::from_integer(m.into()));
    }
    acc
}

/// The character sequence of `V`, declared on `0..=max_n`.
pub fn module_sequence(v: &FiSharpModule, max_n: usize) -> CharSequence<'_> {
    CharSequence::new(max_n, move |n| Ok(character_at(v, n)))
}

/// The character polynomial of `V`, valid for every `n >= 0`.
pub fn charpoly_of(v: &FiSharpModule) -> CharPolynomial {
    let mut acc = CharPolynomial::zero();
    for (lambda, m) in v.summands() {
        let p = mw_charpoly(&SnRep::irreducible(lambda));
        acc = &acc + &p.scale(&BigRational::from_integer(m.into()));
    }
    acc
}

/// `dim V_n = Σ c_λ dim V_λ C(n, |λ|)`.
pub fn dim_poly(v: &FiSharpModule) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (lambda, m) in v.summands() {
        let c = BigRational::from_integer(hook_dimension(lambda) * m);
        acc = &acc + &UniPoly::binomial(lambda.size()).scale(&c);
    }
    acc
}

/// Recovers the normal form `⊕ c_λ M(λ)` from a character sequence by
/// peeling off, degree by degree, the free module generated so far.
///
/// Degrees `0..=bound` are peeled. Every declared degree past `bound` is
/// then checked to be reproduced exactly; a nonzero residual there means
/// the generators extend past `bound`.
pub fn peel_off(seq: &CharSequence<'_>, bound: usize) -> Result<FiSharpModule> {
    if seq.max_n() < bound {
        return Err(Error::Range {
            what: "peel-off bound",
            value: bound,
            limit: seq.max_n(),
        });
    }
    let mut module = FiSharpModule::zero();
    for n in 0..=bound {
        let residual = seq.at(n)?.try_sub(&character_at(&module, n))?;
        let generators = decompose(&residual).map_err(|e| match e {
            Error::NotACharacter {
                partition,
                multiplicity,
            } => Error::NotFiSharp {
                n,
                partition,
                multiplicity,
            },
            other => other,
        })?;
        for (lambda, m) in generators.components() {
            module.add(lambda, m)?;
        }
    }
    for n in bound + 1..=seq.max_n() {
        let residual = seq.at(n)?.try_sub(&character_at(&module, n))?;
        if !residual.is_zero() {
            return Err(Error::BoundExceeded { bound, n });
        }
    }
    Ok(module)
}

fn internal(context: &str) -> impl FnOnce(Error) -> Error + '_ {
    move |e| Error::Internal(format!("{context}: {e}"))
}

/// `V ⊗ W`, degreewise. Generated in degree at most `gen(V) + gen(W)`.
pub fn tensor(v: &FiSharpModule, w: &FiSharpModule) -> Result<FiSharpModule> {
    let bound = v.generation_degree() + w.generation_degree();
    let seq = CharSequence::new(bound + 1, |n| {
        character_at(v, n).try_mul(&character_at(w, n))
    });
    peel_off(&seq, bound).map_err(internal("tensor product peel-off"))
}

/// Cycle type of `σ^k` for `σ` of cycle type `rho`.
pub fn power_cycle_type(rho: &Partition, k: usize) -> Partition {
    let mut parts = Vec::new();
    for &c in rho.parts() {
        let g = c.gcd(&k);
        parts.extend(std::iter::repeat_n(c / g, g));
    }
    Partition::from_unsorted(parts)
}

/// Character of `S_μ(U)` from the character of `U`:
/// `σ ↦ Σ_{ρ ⊢ |μ|} χ_μ(ρ) / z_ρ ∏_i χ_U(σ^{ρ_i})`.
pub fn schur_character(mu: &Partition, chi: &ClassFunction) -> ClassFunction {
    let k = mu.size();
    let table = class_table(k);
    let chi_mu = irreducible_character(mu);
    ClassFunction::from_fn(chi.n(), |sigma| {
        let mut acc = BigRational::zero();
        for (i, rho) in table.classes.iter().enumerate() {
            let coeff = &chi_mu.values()[i];
            if coeff.is_zero() {
                continue;
            }
            let mut prod = coeff / BigRational::from_integer(table.centralizers[i].clone());
            for &r in rho.parts() {
                let tau = power_cycle_type(sigma, r);
                prod *= chi.get(&tau).expect("power of a class is a class");
            }
            acc += prod;
        }
        acc
    })
}

/// The Schur functor `S_μ` applied degreewise. Generated in degree at most
/// `gen(V) |μ|`.
pub fn schur_apply(mu: &Partition, v: &FiSharpModule) -> Result<FiSharpModule> {
    if mu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let bound = v.generation_degree() * mu.size();
    let seq = CharSequence::new(bound + 1, |n| {
        Ok(schur_character(mu, &character_at(v, n)))
    });
    peel_off(&seq, bound).map_err(internal("Schur functor peel-off"))
}

/// `Φ_a(V)_n = (V_{n+a})_{S_n}` as an `S_a`-representation.
pub fn phi(v: &FiSharpModule, a: usize, n: usize) -> SnRep {
    young_coinvariants(&character_at(v, n + a), a)
        .expect("coinvariants of a genuine character are a representation")
}

/// Keeps the components `V(κ)_n` with `|κ| >= d`.
pub fn tau_geq(r: &SnRep, d: usize) -> SnRep {
    let n = r.n();
    SnRep::from_multiplicities(
        n,
        r.components()
            .filter(|(nu, _)| n - nu.first() >= d)
            .map(|(nu, m)| (nu.clone(), m)),
    )
    .expect("subset of a valid representation")
}

/// The irreducible names `V(κ)_n` occurring in `R`, as `(κ, multiplicity)`.
pub fn stable_names(r: &SnRep) -> Vec<(Partition, u64)> {
    r.components().map(|(nu, m)| (nu.tail(), m)).collect()
}
