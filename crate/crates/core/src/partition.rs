//! Partitions, multidegrees and extended partitions.
//!
//! All partitions carry an explicit length `n` (the number of variables) and are
//! zero-padded to it. Moving between different variable counts goes through
//! [`Partition::padded`] and [`Partition::without_last`]; nothing is implicit.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Componentwise `a >= b`.
pub fn dominates(a: &[u32], b: &[u32]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), found: b.len() });
    }
    Ok(a.iter().zip(b).all(|(x, y)| x >= y))
}

fn is_weakly_decreasing<T: PartialOrd>(v: &[T]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

fn fmt_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (k, x) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// A weakly decreasing tuple of `n` non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if !is_weakly_decreasing(&parts) {
            return Err(Error::NotDecreasing(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// `part(a)`: the decreasing rearrangement of an arbitrary exponent vector.
    pub fn sorted_from(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn zero(n: usize) -> Self {
        Partition(vec![0; n])
    }

    /// The rectangle `(value^len, 0^(n-len))`.
    pub fn rectangle(n: usize, value: u32, len: usize) -> Self {
        let mut parts = vec![0; n];
        for x in parts.iter_mut().take(len) {
            *x = value;
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|μ|`.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn max_entry(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        dominates(&self.0, &other.0)
    }

    /// Extends by trailing zeros to length `m >= n`.
    pub fn padded(&self, m: usize) -> Result<Partition> {
        if m < self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: m });
        }
        let mut parts = self.0.clone();
        parts.resize(m, 0);
        Ok(Partition(parts))
    }

    /// Appends one entry; it must not exceed the current last entry.
    pub fn pushed(&self, value: u32) -> Result<Partition> {
        let mut parts = self.0.clone();
        parts.push(value);
        Partition::new(parts)
    }

    /// Drops the last entry: `(μ_1,…,μ_{n+1}) ↦ (μ_1,…,μ_n)`.
    pub fn without_last(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.pop();
        Partition(parts)
    }

    pub fn shape_data(&self) -> ShapeData {
        let mut distinct = Vec::new();
        let mut multiplicities = Vec::new();
        let mut zero_count = 0;
        for &x in &self.0 {
            if x == 0 {
                zero_count += 1;
            } else if distinct.last() == Some(&x) {
                *multiplicities.last_mut().unwrap() += 1;
            } else {
                distinct.push(x);
                multiplicities.push(1);
            }
        }
        ShapeData { distinct, multiplicities, zero_count }
    }

    /// `s(μ)`, the number of distinct positive parts.
    pub fn distinct_positive_parts(&self) -> usize {
        self.shape_data().s()
    }

    /// `p(μ) = (p_1 - 1, …, p_s - 1)`.
    pub fn p_vector(&self) -> Vec<usize> {
        self.shape_data().multiplicities.iter().map(|p| p - 1).collect()
    }

    /// `μ ∖ c`: within the `k`-th block of equal positive parts, the last `c_k`
    /// entries drop by one. Requires `0 <= c_k <= p_k`.
    pub fn remove_columns(&self, c: &[usize]) -> Result<Partition> {
        let shape = self.shape_data();
        if c.len() != shape.s() || c.iter().zip(&shape.multiplicities).any(|(ck, pk)| ck > pk) {
            return Err(Error::ColumnsOutOfRange {
                c: c.to_vec(),
                bound: shape.multiplicities.clone(),
            });
        }
        let mut parts = self.0.clone();
        let mut start = 0;
        for (&pk, &ck) in shape.multiplicities.iter().zip(c) {
            let end = start + pk;
            for x in &mut parts[end - ck..end] {
                *x -= 1;
            }
            start = end;
        }
        Ok(Partition(parts))
    }

    /// Every integer vector `c` with `0 <= c <= p(μ)`, in lexicographic order.
    pub fn admissible_columns(&self) -> Vec<Vec<usize>> {
        box_vectors(&self.p_vector())
    }

    /// Size of the orbit of `μ` under coordinate permutations:
    /// `n! / (p_1! ⋯ p_s! p_{s+1}!)`.
    pub fn rearrangement_count(&self) -> u64 {
        let shape = self.shape_data();
        let mut remaining = self.len() as u64;
        let mut count = 1u64;
        for &p in shape.multiplicities.iter().chain(std::iter::once(&shape.zero_count)) {
            count *= crate::specht::binomial(remaining, p as u64);
            remaining -= p as u64;
        }
        count
    }
}

/// All vectors `v` with `0 <= v <= bound` componentwise, lexicographically ordered.
pub fn box_vectors(bound: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(bound.len())];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Every partition of length `bound.len()` lying componentwise below `bound`.
pub fn partitions_below(bound: &Partition) -> Vec<Partition> {
    fn rec(bound: &[u32], prefix: &mut Vec<u32>, cap: u32, out: &mut Vec<Partition>) {
        match bound.split_first() {
            None => out.push(Partition(prefix.clone())),
            Some((&b, rest)) => {
                for x in 0..=cap.min(b) {
                    prefix.push(x);
                    rec(rest, prefix, x, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(bound.parts(), &mut Vec::with_capacity(bound.len()), u32::MAX, &mut out);
    out
}

/// Run-length data of `μ = (d_1^{p_1}, …, d_s^{p_s}, 0^{p_{s+1}})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeData {
    /// `d_1 > … > d_s > 0`
    pub distinct: Vec<u32>,
    /// `p_1, …, p_s`
    pub multiplicities: Vec<usize>,
    /// `p_{s+1}`
    pub zero_count: usize,
}

impl ShapeData {
    pub fn s(&self) -> usize {
        self.distinct.len()
    }
}

/// An unsorted exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multidegree(Vec<u32>);

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

impl From<Vec<u32>> for Multidegree {
    fn from(v: Vec<u32>) -> Self {
        Multidegree(v)
    }
}

impl From<&Partition> for Multidegree {
    fn from(p: &Partition) -> Self {
        Multidegree(p.0.clone())
    }
}

impl Multidegree {
    pub fn new(exponents: Vec<u32>) -> Self {
        Multidegree(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn part(&self) -> Partition {
        Partition::sorted_from(self.0.clone())
    }

    pub fn dominates(&self, other: &Multidegree) -> Result<bool> {
        dominates(&self.0, &other.0)
    }
}

/// An entry of an extended partition: a non-negative integer or `∞`.
///
/// The derived order places `Infinite` above every `Finite` value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Finite(u32),
    Infinite,
}

impl Entry {
    pub fn finite(self) -> Option<u32> {
        match self {
            Entry::Finite(x) => Some(x),
            Entry::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Entry::Infinite)
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Finite(x) => write!(f, "{x}"),
            Entry::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Entry::Finite(x) => s.serialize_u32(*x),
            Entry::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(x) => Ok(Entry::Finite(x)),
            Raw::Text(t) if t == "inf" => Ok(Entry::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("expected integer or \"inf\", got {t:?}"))),
        }
    }
}

/// A weakly decreasing tuple over `ℤ_{≥0} ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Entry>", into = "Vec<Entry>")]
pub struct ExtendedPartition(Vec<Entry>);

impl TryFrom<Vec<Entry>> for ExtendedPartition {
    type Error = Error;

    fn try_from(v: Vec<Entry>) -> Result<Self> {
        ExtendedPartition::new(v)
    }
}

impl From<ExtendedPartition> for Vec<Entry> {
    fn from(p: ExtendedPartition) -> Self {
        p.0
    }
}

impl fmt::Display for ExtendedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

impl From<&Partition> for ExtendedPartition {
    fn from(p: &Partition) -> Self {
        ExtendedPartition(p.parts().iter().map(|&x| Entry::Finite(x)).collect())
    }
}

impl ExtendedPartition {
    pub fn new(entries: Vec<Entry>) -> Result<Self> {
        if !is_weakly_decreasing(&entries) {
            let shown: Vec<String> = entries.iter().map(Entry::to_string).collect();
            return Err(Error::NotDecreasing(shown.join(",")));
        }
        Ok(ExtendedPartition(entries))
    }

    /// `ℓ(ρ)` infinite entries followed by the given finite tail.
    pub fn with_infinite_prefix(ell: usize, tail: &[u32]) -> Result<Self> {
        let entries = std::iter::repeat_n(Entry::Infinite, ell)
            .chain(tail.iter().map(|&x| Entry::Finite(x)))
            .collect();
        ExtendedPartition::new(entries)
    }

    pub fn entries(&self) -> &[Entry] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `ℓ(ρ)`, the number of `∞` entries.
    pub fn ell(&self) -> usize {
        self.0.iter().take_while(|e| e.is_infinite()).count()
    }

    pub fn finite_tail(&self) -> Vec<u32> {
        self.0.iter().filter_map(|e| e.finite()).collect()
    }

    pub fn largest_finite(&self) -> Option<u32> {
        self.0.iter().find_map(|e| e.finite())
    }

    /// `ρ⁺`: each `∞` replaced by the largest finite entry plus one.
    pub fn plus(&self) -> Result<Partition> {
        let top = self.largest_finite().ok_or(Error::NoFiniteEntry)?;
        Ok(Partition(
            self.0.iter().map(|e| e.finite().unwrap_or(top + 1)).collect(),
        ))
    }

    /// `ρ̃ = ((d_1+1)^{p_0+p_1}, (d_2+1)^{p_2}, …)`: every finite entry raised
    /// by one, every `∞` replaced by `d_1 + 1`.
    pub fn tilde(&self) -> Result<Partition> {
        let top = self.largest_finite().ok_or(Error::NoFiniteEntry)?;
        Ok(Partition(
            self.0.iter().map(|e| e.finite().unwrap_or(top) + 1).collect(),
        ))
    }

    /// Truncation `min(entry, cap)` per entry.
    pub fn cap(&self, cap: u32) -> Partition {
        Partition(
            self.0
                .iter()
                .map(|e| e.finite().map_or(cap, |x| x.min(cap)))
                .collect(),
        )
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &ExtendedPartition) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `λ ∈ O_ρ`, i.e. `λ <= ρ` componentwise.
    pub fn covers(&self, lambda: &Partition) -> bool {
        self.len() == lambda.len()
            && self
                .0
                .iter()
                .zip(lambda.parts())
                .all(|(e, &x)| *e >= Entry::Finite(x))
    }

    /// Componentwise comparison as a partial order.
    pub fn partial_cmp_componentwise(&self, other: &ExtendedPartition) -> Option<Ordering> {
        match (self.le(other), other.le(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}
