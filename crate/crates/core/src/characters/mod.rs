//! Exact character theory of the symmetric groups.

mod class_function;
mod littlewood_richardson;
mod murnaghan_nakayama;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub(crate) use class_function::{as_multiplicity, parse_sum, render_sum};
pub use class_function::{class_table, parse_rational, ClassFunction, ClassTable, SnRep};
pub use littlewood_richardson::lr_coefficient;
pub use murnaghan_nakayama::character_value;

use crate::error::{Error, Result};
use crate::partition::{binomial, partitions_of, Partition};

/// The irreducible character `χ_λ` of `S_{|λ|}`.
pub fn irreducible_character(lambda: &Partition) -> Arc<ClassFunction> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<ClassFunction>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(chi) = cache.read().unwrap().get(lambda) {
        return Arc::clone(chi);
    }
    let chi = Arc::new(ClassFunction::from_fn(lambda.size(), |rho| {
        BigRational::from_integer(character_value(lambda, rho))
    }));
    Arc::clone(
        cache
            .write()
            .unwrap()
            .entry(lambda.clone())
            .or_insert(chi),
    )
}

/// `⟨f, g⟩ = Σ_ρ f(ρ) g(ρ) / z_ρ`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    if f.n() != g.n() {
        return Err(Error::DegreeMismatch {
            left: f.n(),
            right: g.n(),
        });
    }
    let table = class_table(f.n());
    let mut acc = BigRational::zero();
    for ((a, b), z) in f.values().iter().zip(g.values()).zip(&table.centralizers) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        acc += a * b / BigRational::from_integer(z.clone());
    }
    Ok(acc)
}

/// Decomposes `f` into irreducibles, failing unless every multiplicity is a
/// nonnegative integer.
pub fn decompose(f: &ClassFunction) -> Result<SnRep> {
    let mut rep = SnRep::zero(f.n());
    if f.is_zero() {
        return Ok(rep);
    }
    for lambda in partitions_of(f.n()) {
        let m = inner_product(f, &irreducible_character(&lambda))?;
        let m = as_multiplicity(&m).map_err(|multiplicity| Error::NotACharacter {
            partition: lambda.clone(),
            multiplicity,
        })?;
        rep.add(&lambda, m)?;
    }
    Ok(rep)
}

/// `Ind_{S_a × S_b}^{S_{a+b}} (f ⊠ g)`.
pub fn induction_product(f: &ClassFunction, g: &ClassFunction) -> ClassFunction {
    let (a, b) = (f.n(), g.n());
    ClassFunction::from_fn(a + b, |rho| {
        let mult = rho.multiplicities();
        let mut acc = BigRational::zero();
        // Split each block of equal parts between the two factors.
        let mut take = vec![0usize; mult.len()];
        loop {
            let alpha_size: usize = take.iter().enumerate().map(|(i, k)| i * k).sum();
            if alpha_size == a {
                let mut alpha = Vec::new();
                let mut beta = Vec::new();
                let mut weight = BigInt::from(1);
                for (i, (&k, &m)) in take.iter().zip(&mult).enumerate().skip(1) {
                    alpha.extend(std::iter::repeat_n(i, k));
                    beta.extend(std::iter::repeat_n(i, m - k));
                    weight *= binomial(m, k);
                }
                let alpha = Partition::from_unsorted(alpha);
                let beta = Partition::from_unsorted(beta);
                let fa = f.get(&alpha).expect("alpha is a partition of a");
                let gb = g.get(&beta).expect("beta is a partition of b");
                if !fa.is_zero() && !gb.is_zero() {
                    acc += fa * gb * BigRational::from_integer(weight);
                }
            }
            // Odometer over 0 <= take[i] <= mult[i].
            let mut i = 1;
            while i < mult.len() && take[i] == mult[i] {
                take[i] = 0;
                i += 1;
            }
            if i >= mult.len() {
                break;
            }
            take[i] += 1;
        }
        acc
    })
}

/// Restriction of `V_λ` to `S_{|λ|-1}`: one copy of each corner removal.
pub fn branch(lambda: &Partition) -> Result<SnRep> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    SnRep::from_multiplicities(
        lambda.size() - 1,
        lambda.remove_corners().into_iter().map(|mu| (mu, 1)),
    )
}

/// Multiplicity of `V_ν` in `V_λ ⊗ V_μ`.
pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let sizes = [lambda.size(), mu.size(), nu.size()];
    if sizes.iter().any(|&s| s != sizes[0]) {
        return Err(Error::SizeMismatch {
            sizes: sizes.to_vec(),
        });
    }
    let product = irreducible_character(lambda).try_mul(&irreducible_character(mu))?;
    let g = inner_product(&product, &irreducible_character(nu))?;
    as_multiplicity(&g).map_err(|m| Error::Internal(format!("Kronecker coefficient {m}")))
}

/// The `S_a`-representation `(V)_{S_{n-a}}` of coinvariants of a
/// representation `V` of `S_n` with character `f`.
pub fn young_coinvariants(f: &ClassFunction, a: usize) -> Result<SnRep> {
    let n = f.n();
    if a > n {
        return Err(Error::Range {
            what: "coinvariant degree",
            value: a,
            limit: n,
        });
    }
    let trivial = ClassFunction::trivial(n - a);
    let mut rep = SnRep::zero(a);
    for nu in partitions_of(a) {
        let induced = induction_product(&irreducible_character(&nu), &trivial);
        let m = inner_product(f, &induced)?;
        let m = as_multiplicity(&m).map_err(|multiplicity| Error::NotACharacter {
            partition: nu.clone(),
            multiplicity,
        })?;
        rep.add(&nu, m)?;
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{hook_dimension, is_horizontal_strip};
    use num_traits::One;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn rep(n: usize, entries: &[(&[usize], u64)]) -> SnRep {
        SnRep::from_multiplicities(n, entries.iter().map(|(l, m)| (p(l), *m))).unwrap()
    }

    /// Traces of S_3 on the 2-dimensional quotient of its permutation
    /// module: trace on C^3 minus trace on the invariant line.
    #[test]
    fn standard_character_of_s3_matches_permutation_quotient() {
        let perm = ClassFunction::fixed_points(3);
        let brute = &perm - &ClassFunction::trivial(3);
        assert_eq!(*irreducible_character(&p(&[2, 1])), brute);
        let chi = irreducible_character(&p(&[2, 1]));
        assert_eq!(chi.get(&p(&[1, 1, 1])), Some(&q(2)));
        assert_eq!(chi.get(&p(&[2, 1])), Some(&q(0)));
        assert_eq!(chi.get(&p(&[3])), Some(&q(-1)));
    }

    #[test]
    fn trivial_and_sign() {
        for n in 0..=6 {
            assert_eq!(*irreducible_character(&Partition::row(n)), ClassFunction::trivial(n));
        }
        let sign = irreducible_character(&p(&[1, 1]));
        assert_eq!(sign.get(&p(&[1, 1])), Some(&q(1)));
        assert_eq!(sign.get(&p(&[2])), Some(&q(-1)));
    }

    #[test]
    fn inner_products() {
        for n in 2..=6 {
            let ip = inner_product(
                &irreducible_character(&Partition::row(n)),
                &irreducible_character(&Partition::column(n)),
            )
            .unwrap();
            assert!(ip.is_zero());
        }
        let chi = irreducible_character(&p(&[2, 1]));
        assert_eq!(inner_product(&chi, &chi).unwrap(), BigRational::one());
        assert_eq!(
            inner_product(&ClassFunction::regular(3), &chi).unwrap(),
            q(2)
        );
        assert!(matches!(
            inner_product(&chi, &ClassFunction::trivial(4)),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn orthonormality_and_degrees() {
        for n in 0..=8 {
            let parts = partitions_of(n);
            for l in &parts {
                let chl = irreducible_character(l);
                assert_eq!(chl.degree(), &BigRational::from_integer(hook_dimension(l)));
                for m in &parts {
                    let ip = inner_product(&chl, &irreducible_character(m)).unwrap();
                    let expected = if l == m { 1 } else { 0 };
                    assert_eq!(ip, q(expected), "<{l}, {m}>");
                }
            }
        }
        for n in 9..=10 {
            for l in partitions_of(n) {
                assert_eq!(
                    irreducible_character(&l).degree(),
                    &BigRational::from_integer(hook_dimension(&l))
                );
            }
        }
    }

    #[test]
    fn decompositions() {
        assert!(decompose(&ClassFunction::zero(4)).unwrap().is_zero());
        assert_eq!(
            decompose(&ClassFunction::fixed_points(3)).unwrap(),
            rep(3, &[(&[3], 1), (&[2, 1], 1)])
        );
        assert_eq!(
            decompose(&ClassFunction::regular(3)).unwrap(),
            rep(3, &[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)])
        );
        let half = ClassFunction::trivial(3).scale(&BigRational::new(1.into(), 2.into()));
        match decompose(&half) {
            Err(Error::NotACharacter {
                partition,
                multiplicity,
            }) => {
                assert_eq!(partition, p(&[3]));
                assert_eq!(multiplicity, "1/2");
            }
            other => panic!("{other:?}"),
        }
        let negative = -&ClassFunction::trivial(2);
        assert!(matches!(
            decompose(&negative),
            Err(Error::NotACharacter { .. })
        ));
    }

    #[test]
    fn induction_products() {
        let t1 = ClassFunction::trivial(1);
        assert_eq!(induction_product(&t1, &t1), ClassFunction::regular(2));
        let prod = induction_product(&irreducible_character(&p(&[2])), &t1);
        assert_eq!(decompose(&prod).unwrap(), rep(3, &[(&[3], 1), (&[2, 1], 1)]));
        let sign2 = irreducible_character(&p(&[1, 1]));
        assert_eq!(
            decompose(&induction_product(&sign2, &sign2)).unwrap(),
            rep(4, &[(&[2, 2], 1), (&[2, 1, 1], 1), (&[1, 1, 1, 1], 1)])
        );
        // Inducing from S_0 x S_b is the identity.
        let chi = irreducible_character(&p(&[2, 1]));
        assert_eq!(induction_product(&ClassFunction::trivial(0), &chi), *chi);
    }

    #[test]
    fn pieri_support() {
        for total in 0..=8 {
            for size in 0..=total {
                let b = total - size;
                for lambda in partitions_of(size) {
                    let prod = induction_product(
                        &irreducible_character(&lambda),
                        &ClassFunction::trivial(b),
                    );
                    let d = decompose(&prod).unwrap();
                    for nu in partitions_of(total) {
                        let expected = u64::from(is_horizontal_strip(&lambda, &nu));
                        assert_eq!(d.multiplicity(&nu), expected, "{lambda} * triv_{b} at {nu}");
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_reciprocity_matches_tableaux() {
        for total in 0..=7 {
            for a in 0..=total {
                for lambda in partitions_of(a) {
                    for mu in partitions_of(total - a) {
                        let prod = induction_product(
                            &irreducible_character(&lambda),
                            &irreducible_character(&mu),
                        );
                        for nu in partitions_of(total) {
                            let ip = inner_product(&prod, &irreducible_character(&nu)).unwrap();
                            let lr = lr_coefficient(&lambda, &mu, &nu);
                            assert_eq!(ip, q(lr as i64), "c^{nu}_{lambda},{mu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn branching() {
        assert_eq!(branch(&p(&[4])).unwrap(), rep(3, &[(&[3], 1)]));
        assert_eq!(branch(&Partition::column(4)).unwrap(), rep(3, &[(&[1, 1, 1], 1)]));
        assert_eq!(
            branch(&p(&[2, 1])).unwrap(),
            rep(2, &[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(branch(&Partition::empty()), Err(Error::EmptyPartition));
        for n in 1..=8 {
            let total: BigInt = partitions_of(n)
                .iter()
                .map(|l| hook_dimension(l) * branch(l).unwrap().dimension())
                .sum();
            assert_eq!(total, crate::partition::factorial(n));
        }
    }

    #[test]
    fn kronecker_coefficients() {
        for n in 1..=5 {
            let row = Partition::row(n);
            assert_eq!(kronecker_coefficient(&row, &row, &row).unwrap(), 1);
            let col = Partition::column(n);
            for l in partitions_of(n) {
                for nu in partitions_of(n) {
                    let expected = u64::from(nu == l.conjugate());
                    assert_eq!(kronecker_coefficient(&l, &col, &nu).unwrap(), expected);
                }
            }
        }
        let l = p(&[2, 1]);
        assert_eq!(kronecker_coefficient(&l, &l, &l).unwrap(), 1);
        assert!(matches!(
            kronecker_coefficient(&l, &p(&[2]), &l),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn kronecker_symmetry() {
        for n in 0..=6 {
            let parts = partitions_of(n);
            for a in &parts {
                for b in &parts {
                    for c in &parts {
                        let g = kronecker_coefficient(a, b, c).unwrap();
                        for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                            assert_eq!(kronecker_coefficient(x, y, z).unwrap(), g);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coinvariants() {
        for n in 0..=5 {
            let t = young_coinvariants(&ClassFunction::trivial(n), 0).unwrap();
            assert_eq!(t, rep(0, &[(&[], 1)]));
        }
        for n in 2..=6 {
            let standard = irreducible_character(&pad_unchecked(&[1], n));
            assert!(young_coinvariants(&standard, 0).unwrap().is_zero());
            assert_eq!(
                young_coinvariants(&standard, 1).unwrap(),
                rep(1, &[(&[1], 1)])
            );
        }
        assert!(matches!(
            young_coinvariants(&ClassFunction::trivial(2), 3),
            Err(Error::Range { .. })
        ));
        let half = ClassFunction::trivial(2).scale(&BigRational::new(1.into(), 2.into()));
        assert!(matches!(
            young_coinvariants(&half, 0),
            Err(Error::NotACharacter { .. })
        ));
    }

    fn pad_unchecked(lambda: &[usize], n: usize) -> Partition {
        crate::partition::pad(&p(lambda), n).unwrap()
    }

    #[test]
    fn snrep_text_round_trip() {
        let r = rep(3, &[(&[3], 1), (&[2, 1], 2)]);
        assert_eq!(r.to_string(), "V[3] + 2*V[2,1]");
        assert_eq!(SnRep::parse(&r.to_string(), 0).unwrap(), r);
        assert_eq!(SnRep::zero(4).to_string(), "0");
        assert!(SnRep::parse("V[2] + V[1]", 0).is_err());
    }

    #[test]
    fn class_function_json() {
        let chi = irreducible_character(&p(&[2, 1]));
        let json = serde_json::to_string(&*chi).unwrap();
        assert_eq!(
            json,
            r#"{"n":3,"values":[{"class":[3],"value":"-1"},{"class":[2,1],"value":"0"},{"class":[1,1,1],"value":"2"}]}"#
        );
        let back: ClassFunction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, *chi);
        let half = r#"{"n":1,"values":[{"class":[1],"value":"2/4"}]}"#;
        let f: ClassFunction = serde_json::from_str(half).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"n":1,"values":[{"class":[1],"value":"1/2"}]}"#);
        assert!(serde_json::from_str::<ClassFunction>(r#"{"n":2,"values":[{"class":[2],"value":"1"}]}"#).is_err());
    }
}
