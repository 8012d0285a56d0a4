//! The regression suite behind `fistab verify`: each check recomputes a
//! published value or law from scratch and compares exactly.

use std::collections::BTreeMap;
use std::time::Duration;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::characters::{
    character_value, decompose, induction_product, inner_product, irreducible_character,
    kronecker_coefficient, lr_coefficient, ClassFunction,
};
use crate::charpoly::{irreducible_charpoly, CharPolynomial};
use crate::fi::{
    character_at, charpoly_of, dim_poly, murnaghan, peel_off, schur_apply, stability_profile,
    stable_decompose, tensor, CharSequence, FiSharpModule,
};
use crate::oracle::{arnold_cohomology, coinvariant_piece, coinvariant_total_dim, DEFAULT_BUDGET};
use crate::partition::{factorial, hook_dimension, pad, partitions_of, partitions_up_to, Partition};

pub type Outcome = std::result::Result<String, String>;

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub limit: Duration,
    pub run: fn() -> Outcome,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fail(e: crate::error::Error) -> String {
    format!("{}: {e}", e.kind())
}

fn module(s: &str) -> FiSharpModule {
    s.parse().expect("valid module literal")
}

fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

pub fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion { id: 1, name: "tensor-table", limit: secs(1), run: tensor_table },
        Criterion { id: 2, name: "wedge-square", limit: secs(1), run: wedge_square },
        Criterion { id: 3, name: "pure-braid-h2", limit: secs(30), run: pure_braid_h2 },
        Criterion { id: 4, name: "stable-onset", limit: secs(30), run: stable_onset },
        Criterion { id: 5, name: "coinvariant-characters", limit: secs(60), run: coinvariant_characters },
        Criterion { id: 6, name: "coinvariant-dimensions", limit: secs(300), run: coinvariant_dimensions },
        Criterion { id: 7, name: "charpoly-exactness", limit: secs(60), run: charpoly_exactness },
        Criterion { id: 8, name: "irreducible-charpolys", limit: secs(60), run: irreducible_charpolys },
        Criterion { id: 9, name: "stability-degrees", limit: secs(60), run: stability_degrees },
        Criterion { id: 10, name: "boundary-laws", limit: secs(60), run: boundary_laws },
        Criterion { id: 11, name: "character-core", limit: secs(60), run: character_core },
        Criterion { id: 12, name: "murnaghan-stabilization", limit: secs(120), run: murnaghan_stabilization },
    ]
}

pub fn tensor_table() -> Outcome {
    let cases = [
        ("M[1]", "M[1]", "M[2] + M[1,1] + M[1]"),
        ("M[1]", "M[2]", "M[3] + M[2,1] + M[2] + M[1,1]"),
        ("M[2]", "M[2]", "M[4] + M[3,1] + M[2,2] + M[3] + 2*M[2,1] + M[1,1,1] + M[2]"),
    ];
    for (a, b, expected) in cases {
        let got = tensor(&module(a), &module(b)).map_err(fail)?;
        ensure!(got == module(expected), "{a} x {b} = {got}, expected {expected}");
    }
    Ok("3 products".into())
}

pub fn wedge_square() -> Outcome {
    let got = schur_apply(&part(&[1, 1]), &module("M[2]")).map_err(fail)?;
    ensure!(got == module("M[1,1,1] + M[2,1] + M[3,1]"), "got {got}");
    Ok(got.to_string())
}

fn h2_sequence(max_n: usize) -> std::result::Result<Vec<ClassFunction>, String> {
    (0..=max_n)
        .map(|n| arnold_cohomology(2, n, DEFAULT_BUDGET).map(|r| r.character).map_err(fail))
        .collect()
}

pub fn pure_braid_h2() -> Outcome {
    let chars = h2_sequence(8)?;
    let seq = CharSequence::new(8, |n| Ok(chars[n].clone()));
    let v = peel_off(&seq, 4).map_err(fail)?;
    ensure!(v == module("M[2,1] + M[3,1]"), "peel-off gave {v}");
    let poly = charpoly_of(&v);
    for (n, chi) in chars.iter().enumerate() {
        for (rho, value) in chi.iter() {
            ensure!(&poly.evaluate(&rho) == value, "character polynomial differs at {rho}");
        }
        ensure!(n == chi.n(), "sequence misaligned at {n}");
    }
    Ok(format!("{v}; {poly}"))
}

pub fn stable_onset() -> Outcome {
    let d = 4;
    let chars = h2_sequence(2 * d + 2)?;
    let seq = CharSequence::new(2 * d + 2, |n| Ok(chars[n].clone()));
    let report = stable_decompose(&seq, d, 3).map_err(fail)?;
    let expected: BTreeMap<Partition, u64> = [
        (part(&[1]), 2),
        (part(&[1, 1]), 2),
        (part(&[2]), 2),
        (part(&[2, 1]), 2),
        (part(&[3]), 1),
        (part(&[3, 1]), 1),
    ]
    .into_iter()
    .collect();
    ensure!(report.stable, "not stable: {:?}", report.varying);
    ensure!(report.table == expected, "table {:?}", report.table);
    ensure!(report.observed_onset == 7, "onset {}", report.observed_onset);
    Ok("onset 7".into())
}

fn matches_poly(poly: &str, chi: &ClassFunction) -> bool {
    let p: CharPolynomial = poly.parse().expect("valid polynomial literal");
    chi.iter().all(|(rho, value)| &p.evaluate(&rho) == value)
}

pub fn coinvariant_characters() -> Outcome {
    let cases: [(usize, &[usize], &str, std::ops::RangeInclusive<usize>); 3] = [
        (1, &[1], "X1 - 1", 1..=7),
        (1, &[2], "C(X1,2) + X2 - 1", 2..=7),
        (2, &[1, 1], "2*C(X1,2) - X1", 2..=6),
    ];
    let mut count = 0;
    for (r, j, poly, range) in cases {
        for n in range {
            let report = coinvariant_piece(r, j, n, DEFAULT_BUDGET).map_err(fail)?;
            ensure!(matches_poly(poly, &report.character), "r={r} J={j:?} n={n} is not {poly}");
            count += 1;
        }
    }
    Ok(format!("{count} pieces"))
}

pub fn coinvariant_dimensions() -> Outcome {
    for n in 1..=5 {
        let total = coinvariant_total_dim(1, n, DEFAULT_BUDGET).map_err(fail)?.total;
        ensure!(BigInt::from(total) == factorial(n), "r=1 n={n}: {total}");
    }
    for n in 1..=4 {
        let total = coinvariant_total_dim(2, n, DEFAULT_BUDGET).map_err(fail)?.total;
        ensure!(total == (n + 1).pow(n as u32 - 1), "r=2 n={n}: {total}");
    }
    Ok("n! for n <= 5, (n+1)^(n-1) for n <= 4".into())
}

pub fn charpoly_exactness() -> Outcome {
    for lambda in partitions_up_to(4) {
        let v = FiSharpModule::free(&lambda);
        let poly = charpoly_of(&v);
        let dims = dim_poly(&v);
        for n in 0..=9 {
            let chi = character_at(&v, n);
            for (rho, value) in chi.iter() {
                ensure!(&poly.evaluate(&rho) == value, "M{lambda} at {rho}");
            }
            ensure!(&dims.evaluate(n) == chi.degree(), "dim M{lambda} at n={n}");
        }
    }
    Ok("gen <= 4, n <= 9".into())
}

pub fn irreducible_charpolys() -> Outcome {
    let p1 = irreducible_charpoly(&part(&[1]));
    ensure!(p1.to_string() == "X1 - 1", "P_(1) = {p1}");
    for lambda in partitions_up_to(4) {
        let poly = irreducible_charpoly(&lambda);
        for n in lambda.size() + lambda.first()..=9 {
            let padded = pad(&lambda, n).map_err(fail)?;
            for rho in partitions_of(n) {
                let exact = BigRational::from_integer(character_value(&padded, &rho));
                ensure!(poly.evaluate(&rho) == exact, "P{lambda} at {rho}");
            }
        }
    }
    Ok("|λ| <= 4, n <= 9".into())
}

pub fn stability_degrees() -> Outcome {
    for m in 1..=4 {
        let prof = stability_profile(&FiSharpModule::free_regular(m), 3, 9).map_err(fail)?;
        ensure!(prof.observed_injectivity == 0, "M({m}) injectivity {}", prof.observed_injectivity);
        ensure!(prof.observed_surjectivity == m, "M({m}) surjectivity {}", prof.observed_surjectivity);
    }
    for lambda in partitions_up_to(4) {
        let prof = stability_profile(&FiSharpModule::free(&lambda), 3, 9).map_err(fail)?;
        ensure!(
            prof.observed_onset == lambda.first() && prof.certified_bound == lambda.first(),
            "M{lambda}: observed {} certified {}",
            prof.observed_onset,
            prof.certified_bound
        );
    }
    Ok("M(m), m <= 4; M(λ), |λ| <= 4".into())
}

pub fn boundary_laws() -> Outcome {
    let shapes = partitions_up_to(3);
    for l in &shapes {
        for mu in &shapes {
            let prod = tensor(&FiSharpModule::free(l), &FiSharpModule::free(mu)).map_err(fail)?;
            let top = l.size() + mu.size();
            let induced = induction_product(&irreducible_character(l), &irreducible_character(mu));
            for nu in partitions_of(top) {
                let lr = lr_coefficient(l, mu, &nu);
                let via_induction = inner_product(&induced, &irreducible_character(&nu)).map_err(fail)?;
                ensure!(
                    via_induction == BigRational::from_integer(lr.into()),
                    "c^{nu}_({l},{mu}) = {lr}, induction gives {via_induction}"
                );
                ensure!(prod.multiplicity(&nu) == lr, "top coefficient of M{nu} in M{l} x M{mu}");
            }
            if l.size() == mu.size() {
                for nu in partitions_of(l.size()) {
                    let g = kronecker_coefficient(l, mu, &nu).map_err(fail)?;
                    ensure!(prod.multiplicity(&nu) == g, "bottom coefficient of M{nu} in M{l} x M{mu}");
                }
            }
        }
    }
    Ok("|λ|, |μ| <= 3".into())
}

pub fn character_core() -> Outcome {
    for n in 0..=8 {
        let shapes = partitions_of(n);
        let mut sum_sq = BigInt::zero();
        for (i, l) in shapes.iter().enumerate() {
            let chi = irreducible_character(l);
            for m in &shapes[i..] {
                let ip = inner_product(&chi, &irreducible_character(m)).map_err(fail)?;
                let expected = if l == m { BigRational::one() } else { BigRational::zero() };
                ensure!(ip == expected, "<χ{l}, χ{m}> = {ip}");
            }
            let dim = hook_dimension(l);
            ensure!(
                chi.degree() == &BigRational::from_integer(dim.clone()),
                "χ{l}(1) = {} but the hook formula gives {dim}",
                chi.degree()
            );
            sum_sq += &dim * &dim;
            if n > 0 {
                let restricted = ClassFunction::from_fn(n - 1, |rho| {
                    let mut parts = rho.parts().to_vec();
                    parts.push(1);
                    BigRational::from_integer(character_value(l, &Partition::from_unsorted(parts)))
                });
                for mu in partitions_of(n - 1) {
                    let chi_mu = irreducible_character(&mu);
                    let up = induction_product(&chi_mu, &ClassFunction::trivial(1));
                    let lhs = inner_product(&up, &chi).map_err(fail)?;
                    let rhs = inner_product(&chi_mu, &restricted).map_err(fail)?;
                    ensure!(lhs == rhs, "Frobenius reciprocity fails for {mu} and {l}");
                }
            }
        }
        ensure!(sum_sq == factorial(n), "Σ dim² = {sum_sq} at n={n}");
        let regular = decompose(&ClassFunction::regular(n)).map_err(fail)?;
        for l in &shapes {
            ensure!(BigInt::from(regular.multiplicity(l)) == hook_dimension(l), "regular rep at {l}");
        }
    }
    Ok("n <= 8".into())
}

pub fn murnaghan_stabilization() -> Outcome {
    let shapes = partitions_up_to(3);
    for l in &shapes {
        for mu in &shapes {
            let report = murnaghan(l, mu, 3).map_err(fail)?;
            let n = report.final_n;
            let dim = |x: &Partition| pad(x, n).map(|p| hook_dimension(&p));
            let mut lhs = BigInt::zero();
            for (nu, &g) in &report.table {
                lhs += dim(nu).map_err(fail)? * g;
            }
            let rhs = dim(l).map_err(fail)? * dim(mu).map_err(fail)?;
            ensure!(lhs == rhs, "{l} x {mu} at n={n}: {lhs} != {rhs}");
            ensure!(n + 1 - report.observed_onset >= 3, "{l} x {mu}: window not reached");
        }
    }
    Ok(format!("{} pairs", shapes.len() * shapes.len()))
}
