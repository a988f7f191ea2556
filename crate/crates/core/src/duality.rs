//! Dual generators `Λ*(I)`, the order `≼`, extremal Betti numbers,
//! regularity and projective dimension of `R/I`.
//!
//! # Finding `Λ*(I)`
//!
//! `O(I) = P_n ∖ P(I)` is the union of the down-sets `O_ρ = {λ : λ <= ρ}`
//! over `ρ ∈ Λ*(I)`, and that union is irredundant, so `Λ*(I)` is the set of
//! maximal `ρ ∈ P_n^∞` (finite part nonempty) with `O_ρ ⊆ O(I)`.
//!
//! Let `D = 1 + max generator entry`. For such `ρ`, `O_ρ ⊆ O(I)` holds iff
//! `cap(ρ, D) ∉ P(I)`: the capped partition lies in `O_ρ`, giving one
//! direction; conversely, if some `λ <= ρ` were in `P(I)` then so would be
//! `min(λ, D) <= cap(ρ, D)`, since truncating at `D` keeps every generator
//! below, and `P(I)` is upward closed.
//!
//! A maximal `ρ` never has a finite entry `>= D`: raising every such entry
//! to `∞` keeps both the order and the capped partition unchanged. So the
//! search runs over entries in `{0,…,D-1,∞}`. The set `S` of admissible `ρ` is a down-set, and
//! `ρ ∈ S` is maximal iff none of its single-step raises (one entry `d → d+1`,
//! or `D-1 → ∞`, keeping the sequence weakly decreasing) stays in `S`.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::SymIdeal;
use crate::partition::{partitions_below, Entry, ExtendedPartition, Partition};
use crate::specht::binomial;

/// `Λ*(I)` together with its `≼`-maximal part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGeneratorSet {
    pub all: Vec<ExtendedPartition>,
    pub maximal: Vec<ExtendedPartition>,
    pub cap_value: u32,
}

fn in_complement(ideal: &SymIdeal, rho: &ExtendedPartition, cap: u32) -> bool {
    !ideal.contains_unchecked(rho.cap(cap).parts())
}

/// Single-step raises of `ρ` that stay weakly decreasing.
fn raises(rho: &ExtendedPartition, cap: u32) -> Vec<ExtendedPartition> {
    let entries = rho.entries();
    (0..entries.len())
        .filter_map(|k| {
            let next = match entries[k] {
                Entry::Infinite => return None,
                Entry::Finite(d) if d + 1 >= cap => Entry::Infinite,
                Entry::Finite(d) => Entry::Finite(d + 1),
            };
            if k > 0 && entries[k - 1] <= entries[k] {
                return None;
            }
            let mut raised = entries.to_vec();
            raised[k] = next;
            Some(ExtendedPartition::new(raised).expect("raise keeps the order"))
        })
        .collect()
}

/// `Λ*(I)` with the default cap `D = 1 + max generator entry`.
pub fn dual_generators(ideal: &SymIdeal) -> Result<DualGeneratorSet> {
    dual_generators_with_cap(ideal, ideal.max_entry() + 1)
}

/// `Λ*(I)` searching entries up to `cap - 1`; any `cap >= D` gives the same set.
pub fn dual_generators_with_cap(ideal: &SymIdeal, cap: u32) -> Result<DualGeneratorSet> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let required = ideal.max_entry() + 1;
    if cap < required {
        return Err(Error::CapTooSmall { cap, required });
    }
    let n = ideal.n();
    let mut search: Vec<ExtendedPartition> = Vec::new();
    for ell in 0..n {
        let len = n - ell;
        for tail in partitions_below(&Partition::rectangle(len, cap - 1, len)) {
            search.push(ExtendedPartition::with_infinite_prefix(ell, tail.parts())?);
        }
    }
    let mut all: Vec<ExtendedPartition> = search
        .into_par_iter()
        .filter(|rho| {
            in_complement(ideal, rho, cap) && raises(rho, cap).iter().all(|r| !in_complement(ideal, r, cap))
        })
        .collect();
    all.sort_by(display_order);
    let maximal = maximal_among(&all)?;
    Ok(DualGeneratorSet { all, maximal, cap_value: cap })
}

/// Finite entries first (lexicographically), then by number of `∞` entries.
fn display_order(a: &ExtendedPartition, b: &ExtendedPartition) -> Ordering {
    (a.ell(), a.entries()).cmp(&(b.ell(), b.entries()))
}

/// `μ ≼ ρ`: `μ̃ <= ρ̃` componentwise and `|μ⁺| <= |ρ⁺|`.
pub fn preceq(mu: &ExtendedPartition, rho: &ExtendedPartition) -> Result<bool> {
    let (mt, rt) = (mu.tilde()?, rho.tilde()?);
    Ok(rt.dominates(&mt)? && mu.plus()?.size() <= rho.plus()?.size())
}

fn maximal_among(all: &[ExtendedPartition]) -> Result<Vec<ExtendedPartition>> {
    let mut out = Vec::new();
    for rho in all {
        let mut dominated = false;
        for sigma in all {
            if sigma != rho && preceq(rho, sigma)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            out.push(rho.clone());
        }
    }
    Ok(out)
}

/// The `≼`-maximal dual generators.
pub fn maximal_dual_generators(ideal: &SymIdeal) -> Result<Vec<ExtendedPartition>> {
    Ok(dual_generators(ideal)?.maximal)
}

/// A non-zero `β_{i,λ}(R/I)` that is extremal in the Betti table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtremalPair {
    /// Homological index for `R/I`.
    pub index: usize,
    pub partition: Partition,
    pub value: u64,
}

impl ExtremalPair {
    pub fn degree(&self) -> u64 {
        self.partition.size()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub pairs: Vec<ExtremalPair>,
}

/// The extremal pair contributed by one maximal dual generator
/// `ρ = (∞^{p_0}, d_1^{p_1}, …)`: `(n - ℓ(ρ), ρ̃)` with value `C(p_0+p_1-1, p_0)`.
pub fn extremal_pair(rho: &ExtendedPartition) -> Result<ExtremalPair> {
    let top = rho.largest_finite().ok_or(Error::NoFiniteEntry)?;
    let p0 = rho.ell() as u64;
    let p1 = rho.entries().iter().filter(|&&e| e == Entry::Finite(top)).count() as u64;
    Ok(ExtremalPair {
        index: rho.len() - rho.ell(),
        partition: rho.tilde()?,
        value: binomial(p0 + p1 - 1, p0),
    })
}

pub fn extremal_report(ideal: &SymIdeal) -> Result<ExtremalReport> {
    let mut pairs = maximal_dual_generators(ideal)?
        .iter()
        .map(extremal_pair)
        .collect::<Result<Vec<_>>>()?;
    pairs.sort();
    Ok(ExtremalReport { pairs })
}

fn nonunit_dual(ideal: &SymIdeal) -> Result<DualGeneratorSet> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    dual_generators(ideal)
}

/// `reg(R/I) = max |ρ⁺|` over `ρ ∈ Λ*(I)`.
pub fn regularity(ideal: &SymIdeal) -> Result<u64> {
    let dual = nonunit_dual(ideal)?;
    let mut best = 0;
    for rho in &dual.all {
        best = best.max(rho.plus()?.size());
    }
    Ok(best)
}

/// `pd(R/I) = max (n - ℓ(ρ))` over `ρ ∈ Λ*(I)`.
pub fn projective_dimension(ideal: &SymIdeal) -> Result<usize> {
    let dual = nonunit_dual(ideal)?;
    Ok(dual.all.iter().map(|rho| rho.len() - rho.ell()).max().unwrap_or(0))
}

/// `Q_ρ`, generated by the rectangles `((d_j+1)^{p_0+…+p_{j-1}+1})`.
pub fn primary_component(rho: &ExtendedPartition) -> Result<SymIdeal> {
    let n = rho.len();
    let tail = rho.finite_tail();
    if tail.is_empty() {
        return Err(Error::NoFiniteEntry);
    }
    let mut gens = Vec::new();
    let mut before = rho.ell();
    let mut k = 0;
    while k < tail.len() {
        let d = tail[k];
        gens.push(Partition::rectangle(n, d + 1, before + 1));
        let run = tail[k..].iter().take_while(|&&x| x == d).count();
        before += run;
        k += run;
    }
    SymIdeal::new(n, gens)
}
