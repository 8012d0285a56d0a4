use std::collections::BTreeMap;
use std::fmt::Write;

use fistab::charpoly::{CharPolynomial, UniPoly};
use fistab::fi::{MurnaghanReport, StabilityProfile, StableReport};
use fistab::oracle::{CoinvariantTotal, GradedPieceReport};
use fistab::regression::Outcome;
use fistab::Partition;
use serde_json::{json, Value};

/// `V(2,1)` for the padded irreducible `V(λ)_n`.
fn stable_name(lambda: &Partition) -> String {
    let parts: Vec<String> = lambda.parts().iter().map(ToString::to_string).collect();
    format!("V({})", parts.join(","))
}

fn table_text(table: &BTreeMap<Partition, u64>) -> String {
    let mut s = String::new();
    for (lambda, m) in table {
        let _ = writeln!(s, "{}: {m}", stable_name(lambda));
    }
    s
}

pub fn charpoly_json(p: &CharPolynomial) -> Value {
    let terms: Vec<Value> = p
        .to_binomial_basis()
        .iter()
        .map(|(k, c)| json!({ "binomial": k, "coefficient": c.to_string() }))
        .collect();
    json!({ "polynomial": p.to_string(), "terms": terms })
}

pub fn dimpoly_json(p: &UniPoly) -> Value {
    let coeffs: Vec<String> = p.to_binomial_basis().iter().map(ToString::to_string).collect();
    json!({ "polynomial": p.to_string(), "binomial_coefficients": coeffs })
}

pub fn stability_text(p: &StabilityProfile) -> String {
    let mut s = String::new();
    for series in &p.series {
        let _ = writeln!(
            s,
            "a = {}: injective from n = {}, surjective from n = {}",
            series.a, series.injectivity_onset, series.surjectivity_onset
        );
    }
    let _ = write!(
        s,
        "observed onset: {} (n <= {})\ncertified bound: {}",
        p.observed_onset, p.n_max, p.certified_bound
    );
    s
}

pub fn murnaghan_text(r: &MurnaghanReport) -> String {
    format!(
        "{}observed onset: {} (constant through n = {}, window {})",
        table_text(&r.table),
        r.observed_onset,
        r.final_n,
        r.window
    )
}

pub fn stable_text(r: &StableReport) -> String {
    let mut s = table_text(&r.table);
    if r.stable {
        let _ = write!(s, "observed onset: {} (n <= {})", r.observed_onset, r.max_n);
    } else {
        let names: Vec<String> = r.varying.iter().map(stable_name).collect();
        let _ = write!(
            s,
            "not yet stable at n = {}: still varying {}",
            r.max_n,
            names.join(", ")
        );
    }
    if let Some(b) = r.certified_bound {
        let _ = write!(s, "\ncertified bound: {b}");
    }
    s
}

pub fn piece_text(r: &GradedPieceReport) -> String {
    format!("dimension: {}\n{}", r.dimension, r.character)
}

pub fn total_text(r: &CoinvariantTotal) -> String {
    let shells: Vec<String> = r.shells.iter().map(ToString::to_string).collect();
    format!(
        "total dimension: {}\nshells: {}\n{}",
        r.total,
        shells.join(" "),
        r.termination
    )
}

pub fn verify_text(results: &[(usize, &str, Outcome)]) -> String {
    let mut s = String::new();
    for (id, name, outcome) in results {
        let (verdict, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        let _ = writeln!(s, "{id:>2}  {name:<24} {verdict}  {detail}");
    }
    let failed = results.iter().filter(|r| r.2.is_err()).count();
    let _ = write!(s, "{} passed, {failed} failed", results.len() - failed);
    s
}
