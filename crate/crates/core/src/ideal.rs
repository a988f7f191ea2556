//! Symmetric (Sₙ-invariant) and plain monomial ideals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{dominates, Multidegree, Partition};

/// Keeps the componentwise-minimal elements, dropping duplicates.
fn minimalize<T: Clone + Ord>(mut gens: Vec<T>, le: impl Fn(&T, &T) -> bool) -> Vec<T> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| !gens.iter().enumerate().any(|(j, h)| j != i && le(h, g)))
        .collect();
    gens.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect()
}

/// An Sₙ-invariant monomial ideal, stored as its minimal generating partitions `Λ(I)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymIdeal {
    n: usize,
    min_gens: Vec<Partition>,
}

impl fmt::Display for SymIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.min_gens.is_empty() {
            return write!(f, "<0>_S{}", self.n);
        }
        f.write_str("<")?;
        for (k, g) in self.min_gens.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">_S{}", self.n)
    }
}

impl SymIdeal {
    /// Builds `⟨λ¹,…,λʳ⟩`; redundant generators are discarded.
    pub fn new(n: usize, gens: Vec<Partition>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::LengthMismatch { expected: n, found: bad.len() });
        }
        let min_gens = minimalize(gens, |a, b| b.parts().iter().zip(a.parts()).all(|(x, y)| x >= y));
        Ok(SymIdeal { n, min_gens })
    }

    pub fn zero(n: usize) -> Self {
        SymIdeal { n, min_gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        SymIdeal { n, min_gens: vec![Partition::zero(n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Λ(I)`, sorted.
    pub fn generators(&self) -> &[Partition] {
        &self.min_gens
    }

    pub fn is_zero(&self) -> bool {
        self.min_gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.min_gens.iter().any(Partition::is_zero)
    }

    pub fn max_entry(&self) -> u32 {
        self.min_gens.iter().map(Partition::max_entry).max().unwrap_or(0)
    }

    /// `λ ∈ P(I)`.
    pub fn contains(&self, lambda: &Partition) -> Result<bool> {
        if lambda.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: lambda.len() });
        }
        Ok(self.contains_unchecked(lambda.parts()))
    }

    pub(crate) fn contains_unchecked(&self, lambda: &[u32]) -> bool {
        self.min_gens
            .iter()
            .any(|g| lambda.iter().zip(g.parts()).all(|(x, y)| x >= y))
    }

    /// `x^a ∈ I`, decided through `part(a)`.
    pub fn contains_multidegree(&self, a: &Multidegree) -> Result<bool> {
        self.contains(&a.part())
    }

    /// The same generators in `m >= n` variables (`I_m`).
    pub fn with_variables(&self, m: usize) -> Result<SymIdeal> {
        let gens = self.min_gens.iter().map(|g| g.padded(m)).collect::<Result<Vec<_>>>()?;
        SymIdeal::new(m, gens)
    }

    /// The plain ideal `J = (x^λ | λ ∈ Λ(I))`.
    pub fn unsymmetrize(&self) -> PlainIdeal {
        PlainIdeal::unsymmetrize(self.n, &self.min_gens)
            .expect("generator lengths are checked on construction")
    }
}

/// A monomial ideal given by exponent vectors, with no symmetry assumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlainIdeal {
    n: usize,
    gens: Vec<Multidegree>,
}

impl PlainIdeal {
    pub fn new(n: usize, gens: Vec<Multidegree>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::LengthMismatch { expected: n, found: bad.len() });
        }
        let gens = minimalize(gens, |a, b| {
            b.exponents().iter().zip(a.exponents()).all(|(x, y)| x >= y)
        });
        Ok(PlainIdeal { n, gens })
    }

    /// One monomial `x^λ` per partition, exponents taken verbatim.
    pub fn unsymmetrize(n: usize, gens: &[Partition]) -> Result<Self> {
        PlainIdeal::new(n, gens.iter().map(Multidegree::from).collect())
    }

    pub fn zero(n: usize) -> Self {
        PlainIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        PlainIdeal { n, gens: vec![Multidegree::new(vec![0; n])] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Multidegree] {
        &self.gens
    }

    /// `x^a ∈ J`: some generator divides `x^a`.
    pub fn contains(&self, a: &Multidegree) -> Result<bool> {
        if a.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: a.len() });
        }
        for g in &self.gens {
            if dominates(a.exponents(), g.exponents())? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub(crate) fn contains_unchecked(&self, a: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| a.iter().zip(g.exponents()).all(|(x, y)| x >= y))
    }
}
