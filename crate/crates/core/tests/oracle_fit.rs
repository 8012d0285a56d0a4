//! Recovers the character polynomial of `H^2(P_n)` from oracle samples
//! alone, by solving for coefficients in the binomial basis.

use fistab::charpoly::CharPolynomial;
use fistab::fi::{charpoly_of, FiSharpModule};
use fistab::oracle::{arnold_cohomology, RationalMatrix, DEFAULT_BUDGET};
use fistab::partition::{binomial, partitions_of, partitions_up_to, Partition};
use num_rational::BigRational;

/// `∏_i C(m_i(ρ), m_i(λ))`, computed straight from the cycle counts.
fn binomial_monomial_at(lambda: &Partition, rho: &Partition) -> BigRational {
    let ml = lambda.multiplicities();
    let mr = rho.multiplicities();
    let mut acc = num_bigint::BigInt::from(1);
    for i in 1..ml.len() {
        let have = mr.get(i).copied().unwrap_or(0);
        if have < ml[i] {
            return BigRational::from_integer(0.into());
        }
        acc *= binomial(have, ml[i]);
    }
    BigRational::from_integer(acc)
}

fn samples(max_n: usize) -> Vec<(usize, Partition)> {
    (0..=max_n)
        .flat_map(|n| partitions_of(n).into_iter().map(move |rho| (n, rho)))
        .collect()
}

fn design(basis: &[Partition], points: &[(usize, Partition)]) -> RationalMatrix {
    RationalMatrix::from_rows(
        points
            .iter()
            .map(|(_, rho)| basis.iter().map(|l| binomial_monomial_at(l, rho)).collect())
            .collect(),
    )
    .unwrap()
}

#[test]
fn binomial_monomials_are_independent_on_small_classes() {
    for d in 0..=4 {
        let basis = partitions_up_to(d);
        let m = design(&basis, &samples(d));
        assert_eq!(m.rank(), basis.len(), "degree {d}");
    }
}

#[test]
fn h2_polynomial_from_samples() {
    let basis = partitions_up_to(4);
    let points = samples(8);
    let chars: Vec<_> = (0..=8)
        .map(|n| arnold_cohomology(2, n, DEFAULT_BUDGET).unwrap().character)
        .collect();
    let rhs: Vec<BigRational> = points
        .iter()
        .map(|(n, rho)| chars[*n].get(rho).unwrap().clone())
        .collect();
    let coeffs = design(&basis, &points).solve(&rhs).expect("consistent, unique fit");

    let mut fitted = CharPolynomial::zero();
    for (lambda, c) in basis.iter().zip(&coeffs) {
        fitted = &fitted + &fistab::charpoly::binomial_monomial(lambda).scale(c);
    }
    let h2: FiSharpModule = "M[2,1] + M[3,1]".parse().unwrap();
    assert_eq!(fitted, charpoly_of(&h2));
    assert_eq!(
        fitted.to_string(),
        "2*C(X1,3) + 3*C(X1,4) + C(X1,2)*X2 - C(X2,2) - X3 - X4"
    );
}
