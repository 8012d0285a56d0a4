use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{centralizer_order, partitions_of, Partition};

/// Conjugacy classes of `S_n` in canonical order, with centralizer orders.
#[derive(Debug)]
pub struct ClassTable {
    pub n: usize,
    pub classes: Vec<Partition>,
    pub centralizers: Vec<BigInt>,
    index: HashMap<Partition, usize>,
}

impl ClassTable {
    pub fn index_of(&self, rho: &Partition) -> Option<usize> {
        self.index.get(rho).copied()
    }
}

/// Shared class table for `S_n`.
pub fn class_table(n: usize) -> Arc<ClassTable> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<ClassTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let classes = partitions_of(n);
    let centralizers = classes.iter().map(centralizer_order).collect();
    let index = classes
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let table = Arc::new(ClassTable {
        n,
        classes,
        centralizers,
        index,
    });
    Arc::clone(tables.write().unwrap().entry(n).or_insert(table))
}

/// An exact rational-valued class function on `S_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<BigRational>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        let len = class_table(n).classes.len();
        ClassFunction {
            n,
            values: vec![BigRational::zero(); len],
        }
    }

    pub fn constant(n: usize, value: BigRational) -> Self {
        let len = class_table(n).classes.len();
        ClassFunction {
            n,
            values: vec![value; len],
        }
    }

    /// The trivial character of `S_n`.
    pub fn trivial(n: usize) -> Self {
        Self::constant(n, BigRational::one())
    }

    /// The regular character: `n!` at the identity, zero elsewhere.
    pub fn regular(n: usize) -> Self {
        Self::from_fn(n, |rho| {
            if rho.parts().iter().all(|&p| p == 1) {
                BigRational::from_integer(crate::partition::factorial(n))
            } else {
                BigRational::zero()
            }
        })
    }

    /// The number of fixed points, i.e. the permutation character `X_1`.
    pub fn fixed_points(n: usize) -> Self {
        Self::from_fn(n, |rho| {
            BigRational::from_integer(rho.parts().iter().filter(|&&p| p == 1).count().into())
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> BigRational) -> Self {
        let table = class_table(n);
        ClassFunction {
            n,
            values: table.classes.iter().map(&mut f).collect(),
        }
    }

    /// Builds from values listed in canonical class order.
    pub fn from_values(n: usize, values: Vec<BigRational>) -> Result<Self> {
        let len = class_table(n).classes.len();
        if values.len() != len {
            return Err(Error::Parse(format!(
                "S_{n} has {len} classes, got {} values",
                values.len()
            )));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Value on the class with cycle type `rho`; `None` if `rho` is not a
    /// partition of `n`.
    pub fn get(&self, rho: &Partition) -> Option<&BigRational> {
        class_table(self.n)
            .index_of(rho)
            .map(|i| &self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Partition, &BigRational)> + '_ {
        let table = class_table(self.n);
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (table.classes[i].clone(), v))
    }

    /// Value at the identity class; the dimension for a genuine character.
    pub fn degree(&self) -> &BigRational {
        // The identity class (1^n) is last in canonical order.
        self.values.last().expect("every S_n has an identity class")
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        ClassFunction {
            n: self.n,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product (the character of the inner tensor product).
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }
}

macro_rules! pointwise_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &ClassFunction {
            type Output = ClassFunction;

            /// Panics if the degrees differ; use the `try_` form otherwise.
            fn $method(self, rhs: &ClassFunction) -> ClassFunction {
                self.$checked(rhs).expect("class functions on the same S_n")
            }
        }
    };
}

pointwise_op!(Add, add, try_add);
pointwise_op!(Sub, sub, try_sub);
pointwise_op!(Mul, mul, try_mul);

impl Neg for &ClassFunction {
    type Output = ClassFunction;

    fn neg(self) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassFunction(S_{}; ", self.n)?;
        for (i, (rho, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{rho}: {v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for ClassFunction {
    /// One `class: value` line per conjugacy class.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (rho, v)) in self.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{rho}: {v}")?;
        }
        Ok(())
    }
}

/// Parses `p` or `p/q`, the serialized form of exact rationals.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ClassValueJson {
    class: Partition,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct ClassFunctionJson {
    n: usize,
    values: Vec<ClassValueJson>,
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClassFunctionJson {
            n: self.n,
            values: self
                .iter()
                .map(|(class, v)| ClassValueJson {
                    class,
                    value: v.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ClassFunctionJson::deserialize(d)?;
        let table = class_table(raw.n);
        let mut values: Vec<Option<BigRational>> = vec![None; table.classes.len()];
        for entry in raw.values {
            let idx = table.index_of(&entry.class).ok_or_else(|| {
                D::Error::custom(format!("{} is not a class of S_{}", entry.class, raw.n))
            })?;
            if values[idx].is_some() {
                return Err(D::Error::custom(format!("class {} repeated", entry.class)));
            }
            values[idx] = Some(parse_rational(&entry.value).map_err(D::Error::custom)?);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| D::Error::custom(format!("missing class {}", table.classes[i])))
            })
            .collect::<std::result::Result<_, _>>()?;
        Ok(ClassFunction { n: raw.n, values })
    }
}

/// A finite formal sum of irreducible `S_n`-representations.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SnRep {
    n: usize,
    mult: BTreeMap<Partition, u64>,
}

impl SnRep {
    pub fn zero(n: usize) -> Self {
        SnRep {
            n,
            mult: BTreeMap::new(),
        }
    }

    /// The irreducible `V_λ` with multiplicity one.
    pub fn irreducible(lambda: &Partition) -> Self {
        let mut rep = SnRep::zero(lambda.size());
        rep.mult.insert(lambda.clone(), 1);
        rep
    }

    pub fn from_multiplicities(
        n: usize,
        entries: impl IntoIterator<Item = (Partition, u64)>,
    ) -> Result<Self> {
        let mut rep = SnRep::zero(n);
        for (p, m) in entries {
            rep.add(&p, m)?;
        }
        Ok(rep)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `m` copies of `V_λ`.
    pub fn add(&mut self, lambda: &Partition, m: u64) -> Result<()> {
        if lambda.size() != self.n {
            return Err(Error::SizeMismatch {
                sizes: vec![lambda.size(), self.n],
            });
        }
        if m > 0 {
            let slot = self.mult.entry(lambda.clone()).or_insert(0);
            *slot = slot.checked_add(m).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.mult.get(lambda).copied().unwrap_or(0)
    }

    /// Nonzero components in canonical order.
    pub fn components(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.mult.iter().map(|(p, &m)| (p, m))
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn character(&self) -> ClassFunction {
        let mut acc = ClassFunction::zero(self.n);
        for (lambda, m) in self.components() {
            let chi = super::irreducible_character(lambda);
            acc = &acc + &chi.scale(&BigRational::from_integer(m.into()));
        }
        acc
    }

    pub fn dimension(&self) -> BigInt {
        self.components()
            .map(|(l, m)| crate::partition::hook_dimension(l) * m)
            .sum()
    }
}

/// Renders summands largest first: by size, then lexicographically.
pub(crate) fn render_sum<'a>(
    symbol: &str,
    terms: impl Iterator<Item = (&'a Partition, u64)>,
) -> String {
    let mut terms: Vec<_> = terms.collect();
    terms.sort_by(|a, b| {
        b.0.size()
            .cmp(&a.0.size())
            .then_with(|| b.0.parts().cmp(a.0.parts()))
    });
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|(p, m)| {
            if *m == 1 {
                format!("{symbol}{p}")
            } else {
                format!("{m}*{symbol}{p}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Parses `c1*S[..] + c2*S[..] + ...` (or `0`) for a one-letter symbol `S`.
pub(crate) fn parse_sum(symbol: char, s: &str) -> Result<Vec<(Partition, u64)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "0" {
        return Ok(Vec::new());
    }
    if compact.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut out = Vec::new();
    for term in compact.split('+') {
        let (coef, body) = match term.split_once('*') {
            Some((c, b)) => (
                c.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad multiplicity `{c}` in `{s}`")))?,
                b,
            ),
            None => (1, term),
        };
        let body = body
            .strip_prefix(symbol)
            .ok_or_else(|| Error::Parse(format!("expected `{symbol}[...]`, got `{term}`")))?;
        out.push((body.parse::<Partition>()?, coef));
    }
    Ok(out)
}

impl fmt::Display for SnRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sum("V", self.components()))
    }
}

impl fmt::Debug for SnRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SnRep(S_{}; {self})", self.n)
    }
}

impl SnRep {
    /// Parses `V[2,1] + 2*V[1,1,1]`. The degree is taken from the summands;
    /// `0` needs it supplied.
    pub fn parse(s: &str, n_if_zero: usize) -> Result<Self> {
        let terms = parse_sum('V', s)?;
        let n = terms.first().map(|(p, _)| p.size()).unwrap_or(n_if_zero);
        SnRep::from_multiplicities(n, terms)
    }
}

#[derive(Serialize, Deserialize)]
struct RepComponentJson {
    partition: Partition,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct SnRepJson {
    n: usize,
    components: Vec<RepComponentJson>,
}

impl Serialize for SnRep {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SnRepJson {
            n: self.n,
            components: self
                .components()
                .map(|(p, m)| RepComponentJson {
                    partition: p.clone(),
                    mult: m,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SnRep {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SnRepJson::deserialize(d)?;
        SnRep::from_multiplicities(
            raw.n,
            raw.components.into_iter().map(|c| (c.partition, c.mult)),
        )
        .map_err(D::Error::custom)
    }
}

/// Converts an exact rational multiplicity into a count, or reports why not.
pub(crate) fn as_multiplicity(q: &BigRational) -> std::result::Result<u64, String> {
    if !q.is_integer() || q.is_negative() {
        return Err(q.to_string());
    }
    q.to_integer().to_u64().ok_or_else(|| q.to_string())
}
