//! Brute-force Tor dimensions from the multidegree-local description
//! `Tor_i(J)_a ≅ H̃_{i-1}(Δ^J_a)`.
//!
//! Nothing here goes through the block formula: symmetric ideals are expanded
//! into their full orbit generator list and treated as plain monomial ideals.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{koszul_lower_complex, FieldSpec, HomologyProfile};
use crate::ideal::{PlainIdeal, SymIdeal};
use crate::partition::{Multidegree, Partition};

/// Orbit expansion needs up to `n!` generators per orbit; refuse beyond this.
pub const MAX_ORBIT_VARIABLES: usize = 8;

/// Distinct permutations of `v`, in lexicographic order.
fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        // standard next-permutation step
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// The plain ideal generated by every `x^{σ(λ)}`, `λ ∈ Λ(I)`, `σ ∈ Sₙ`.
pub fn orbit_ideal(ideal: &SymIdeal) -> Result<PlainIdeal> {
    if ideal.n() > MAX_ORBIT_VARIABLES {
        return Err(Error::OracleTooLarge(ideal.n()));
    }
    let gens = ideal
        .generators()
        .iter()
        .flat_map(|g| distinct_permutations(g.parts()))
        .map(Multidegree::new)
        .collect();
    PlainIdeal::new(ideal.n(), gens)
}

/// All `dim Tor_i(J)_a`, indexed by `i`.
pub fn tor_profile(ideal: &PlainIdeal, a: &Multidegree, field: FieldSpec) -> Result<HomologyProfile> {
    Ok(koszul_lower_complex(ideal, a)?.reduced_homology(field))
}

/// `dim Tor_i(J)_a = dim H̃_{i-1}(Δ^J_a)`.
pub fn tor_dims_multidegree(ideal: &PlainIdeal, i: usize, a: &Multidegree, field: FieldSpec) -> Result<usize> {
    Ok(tor_profile(ideal, a, field)?.gamma(i))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OracleRecord {
    pub i: usize,
    pub a: Multidegree,
    pub dim: usize,
}

/// Non-zero multigraded Tor dimensions, sorted by `(i, a)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OracleResult {
    records: Vec<OracleRecord>,
}

impl OracleResult {
    pub fn records(&self) -> &[OracleRecord] {
        &self.records
    }

    pub fn get(&self, i: usize, a: &Multidegree) -> usize {
        self.records
            .binary_search_by(|r| (r.i, &r.a).cmp(&(i, a)))
            .map_or(0, |k| self.records[k].dim)
    }
}

/// The lcm lattice of the generators (lcms of all non-empty subsets).
fn lcm_closure(gens: &[Multidegree]) -> BTreeSet<Multidegree> {
    let mut seen: BTreeSet<Multidegree> = gens.iter().cloned().collect();
    let mut frontier: Vec<Multidegree> = seen.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let l = Multidegree::new(
                x.exponents().iter().zip(g.exponents()).map(|(a, b)| *a.max(b)).collect(),
            );
            if seen.insert(l.clone()) {
                frontier.push(l);
            }
        }
    }
    seen
}

/// Tor of a plain ideal at every lcm of a non-empty generator subset.
pub fn tor_dims_plain(ideal: &PlainIdeal, field: FieldSpec) -> Result<OracleResult> {
    let degrees: Vec<Multidegree> = lcm_closure(ideal.generators()).into_iter().collect();
    let profiles = degrees
        .par_iter()
        .map(|a| tor_profile(ideal, a, field))
        .collect::<Result<Vec<_>>>()?;
    let mut records: Vec<OracleRecord> = degrees
        .into_iter()
        .zip(profiles)
        .flat_map(|(a, prof)| {
            prof.nonzero()
                .map(|(i, dim)| OracleRecord { i, a: a.clone(), dim })
                .collect::<Vec<_>>()
        })
        .collect();
    records.sort();
    Ok(OracleResult { records })
}

/// Brute-force orbit Tor for a symmetric ideal, with the orbit ideal built once.
#[derive(Clone, Debug)]
pub struct OrbitOracle {
    ideal: PlainIdeal,
    field: FieldSpec,
}

impl OrbitOracle {
    pub fn new(ideal: &SymIdeal, field: FieldSpec) -> Result<Self> {
        Ok(OrbitOracle { ideal: orbit_ideal(ideal)?, field })
    }

    pub fn orbit_ideal(&self) -> &PlainIdeal {
        &self.ideal
    }

    /// `Σ_{a : part(a) = μ} dim Tor_i(I)_a`, for every `i`.
    pub fn orbit_dims(&self, mu: &Partition) -> Result<Vec<u64>> {
        let mut total: Vec<u64> = Vec::new();
        for a in distinct_permutations(mu.parts()) {
            let prof = tor_profile(&self.ideal, &Multidegree::new(a), self.field)?;
            if total.len() < prof.dims().len() {
                total.resize(prof.dims().len(), 0);
            }
            for (slot, &d) in total.iter_mut().zip(prof.dims()) {
                *slot += d as u64;
            }
        }
        Ok(total)
    }

    pub fn orbit_dim(&self, i: usize, mu: &Partition) -> Result<u64> {
        Ok(self.orbit_dims(mu)?.get(i).copied().unwrap_or(0))
    }

    /// The profile at each rearrangement of `μ`, for symmetry checks.
    pub fn profiles_over_orbit(&self, mu: &Partition) -> Result<Vec<(Multidegree, HomologyProfile)>> {
        distinct_permutations(mu.parts())
            .into_iter()
            .map(|a| {
                let a = Multidegree::new(a);
                tor_profile(&self.ideal, &a, self.field).map(|p| (a, p))
            })
            .collect()
    }
}

/// `Σ_{a : part(a) = μ} dim Tor_i(I)_a` computed on the orbit ideal.
pub fn tor_dims_orbit_bruteforce(ideal: &SymIdeal, i: usize, mu: &Partition, field: FieldSpec) -> Result<u64> {
    OrbitOracle::new(ideal, field)?.orbit_dim(i, mu)
}
