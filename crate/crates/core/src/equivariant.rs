//! Orbit components of `Tor_i(I)` as sums of induced hook modules, and the
//! Betti tables derived from them.
//!
//! For `μ = (d_1^{p_1}, …, d_s^{p_s}, 0^{p_{s+1}})`,
//!
//! ```text
//! Tor_i(I)_⟨μ⟩ ≅ ⊕_{0 <= c <= p(μ)} (𝒮^{π(c)})^{γ_{i-|c|}^{μ,c}}
//! ```
//!
//! with `π(c)` from [`BlockSignature::block_for`] and `γ` from
//! [`crate::homology::gamma`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::duality::maximal_dual_generators;
use crate::error::{Error, Result};
use crate::homology::{gamma, FieldSpec, HomologyProfile};
use crate::ideal::SymIdeal;
use crate::partition::{partitions_below, Multidegree, Partition};
use crate::specht::BlockSignature;

/// Which module the homological indices refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TorModule {
    /// `Tor_i(I, k)`.
    Ideal,
    /// `Tor_i(R/I, k) = Tor_{i-1}(I, k)` for `i >= 1`.
    Quotient,
}

/// Tensor bounds of the orbit degrees that can carry Tor: every `μ` below
/// `ρ̃` for some maximal dual generator `ρ`.
pub fn candidate_partitions(ideal: &SymIdeal) -> Result<Vec<Partition>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Ok(vec![Partition::zero(ideal.n())]);
    }
    let mut out = BTreeSet::new();
    for rho in maximal_dual_generators(ideal)? {
        out.extend(partitions_below(&rho.tilde()?));
    }
    Ok(out.into_iter().collect())
}

/// Partitions below `ρ̃ + (1^n)` for some maximal `ρ` that are not candidates.
pub fn beyond_candidates(ideal: &SymIdeal) -> Result<Vec<Partition>> {
    let inside: BTreeSet<Partition> = candidate_partitions(ideal)?.into_iter().collect();
    let n = ideal.n();
    let bounds: Vec<Partition> = if ideal.is_unit() {
        vec![Partition::rectangle(n, 1, n)]
    } else {
        maximal_dual_generators(ideal)?
            .iter()
            .map(|rho| {
                rho.tilde()
                    .map(|t| Partition::sorted_from(t.parts().iter().map(|x| x + 1).collect()))
            })
            .collect::<Result<_>>()?
    };
    let mut out = BTreeSet::new();
    for b in bounds {
        out.extend(partitions_below(&b).into_iter().filter(|mu| !inside.contains(mu)));
    }
    Ok(out.into_iter().collect())
}

/// `(μ, c, γ^{μ,c})` for every candidate `μ` and every `0 <= c <= p(μ)`.
pub(crate) fn gamma_profiles(
    ideal: &SymIdeal,
    field: FieldSpec,
) -> Result<Vec<(Partition, Vec<usize>, HomologyProfile)>> {
    let jobs: Vec<(Partition, Vec<usize>)> = candidate_partitions(ideal)?
        .into_iter()
        .flat_map(|mu| mu.admissible_columns().into_iter().map(move |c| (mu.clone(), c)))
        .collect();
    jobs.into_par_iter()
        .map(|(mu, c)| {
            let prof = gamma(ideal, &mu, &c, field)?;
            Ok((mu, c, prof))
        })
        .collect()
}

/// One summand `(𝒮^{π(c)})^{multiplicity}` of an orbit component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitComponent {
    pub c: Vec<usize>,
    pub block: BlockSignature,
    pub multiplicity: u64,
}

impl OrbitComponent {
    pub fn dim(&self) -> u64 {
        self.block.dim() * self.multiplicity
    }
}

/// The summands of `Tor_i(I)_⟨μ⟩`, one per `c` with non-zero `γ_{i-|c|}^{μ,c}`.
pub fn tor_orbit(ideal: &SymIdeal, i: usize, mu: &Partition, field: FieldSpec) -> Result<Vec<OrbitComponent>> {
    let mut out = Vec::new();
    for c in mu.admissible_columns() {
        let shift: usize = c.iter().sum();
        if shift > i {
            continue;
        }
        let mult = gamma(ideal, mu, &c, field)?.gamma(i - shift) as u64;
        if mult > 0 {
            out.push(OrbitComponent { block: BlockSignature::block_for(mu, &c)?, c, multiplicity: mult });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct TorRecord {
    i: usize,
    mu: Partition,
    components: Vec<OrbitComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct TorRepr {
    n: usize,
    field: FieldSpec,
    module: TorModule,
    associated_graded: bool,
    entries: Vec<TorRecord>,
}

/// `Tor_i(·)_⟨μ⟩` for all `(i, μ)`, as lists of induced blocks.
///
/// When `0 < char k <= n` the block list describes an associated graded
/// module only; `associated_graded` records this.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TorRepr", from = "TorRepr")]
pub struct EquivariantTor {
    n: usize,
    field: FieldSpec,
    module: TorModule,
    associated_graded: bool,
    entries: BTreeMap<(usize, Partition), Vec<OrbitComponent>>,
}

impl From<EquivariantTor> for TorRepr {
    fn from(t: EquivariantTor) -> Self {
        TorRepr {
            n: t.n,
            field: t.field,
            module: t.module,
            associated_graded: t.associated_graded,
            entries: t
                .entries
                .into_iter()
                .map(|((i, mu), components)| TorRecord { i, mu, components })
                .collect(),
        }
    }
}

impl From<TorRepr> for EquivariantTor {
    fn from(r: TorRepr) -> Self {
        EquivariantTor {
            n: r.n,
            field: r.field,
            module: r.module,
            associated_graded: r.associated_graded,
            entries: r.entries.into_iter().map(|e| ((e.i, e.mu), e.components)).collect(),
        }
    }
}

/// `Tor_•(I)` over all candidate degrees.
pub fn equivariant_tor(ideal: &SymIdeal, field: FieldSpec) -> Result<EquivariantTor> {
    let gammas = gamma_profiles(ideal, field)?;
    EquivariantTor::from_gammas(
        ideal.n(),
        field,
        gammas.iter().flat_map(|(mu, c, prof)| prof.nonzero().map(move |(j, g)| (mu, c.as_slice(), j, g as u64))),
    )
}

impl EquivariantTor {
    /// Assembles Tor from `(μ, c, j, γ_j^{μ,c})` with `γ > 0`.
    pub fn from_gammas<'a>(
        n: usize,
        field: FieldSpec,
        gammas: impl IntoIterator<Item = (&'a Partition, &'a [usize], usize, u64)>,
    ) -> Result<Self> {
        let mut entries: BTreeMap<(usize, Partition), Vec<OrbitComponent>> = BTreeMap::new();
        for (mu, c, j, g) in gammas {
            if g == 0 {
                continue;
            }
            if mu.len() != n {
                return Err(Error::LengthMismatch { expected: n, found: mu.len() });
            }
            let i = j + c.iter().sum::<usize>();
            entries.entry((i, mu.clone())).or_default().push(OrbitComponent {
                c: c.to_vec(),
                block: BlockSignature::block_for(mu, c)?,
                multiplicity: g,
            });
        }
        for comps in entries.values_mut() {
            comps.sort();
        }
        Ok(EquivariantTor {
            n,
            field,
            module: TorModule::Ideal,
            associated_graded: field.is_modular_for(n),
            entries,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn module(&self) -> TorModule {
        self.module
    }

    pub fn is_associated_graded(&self) -> bool {
        self.associated_graded
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The summands of `Tor_i⟨μ⟩`; empty when it vanishes.
    pub fn components(&self, i: usize, mu: &Partition) -> &[OrbitComponent] {
        self.entries.get(&(i, mu.clone())).map_or(&[], Vec::as_slice)
    }

    /// Non-zero orbit components ordered by `(i, μ)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Partition, &[OrbitComponent])> {
        self.entries.iter().map(|((i, mu), comps)| (*i, mu, comps.as_slice()))
    }

    /// `dim Tor_i⟨μ⟩`.
    pub fn orbit_dim(&self, i: usize, mu: &Partition) -> u64 {
        self.components(i, mu).iter().map(OrbitComponent::dim).sum()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// The `(i, μ)` with non-zero Tor.
    pub fn support(&self) -> BTreeSet<(usize, Partition)> {
        self.entries.keys().cloned().collect()
    }

    /// `β_{i,j} = Σ_{|μ| = j} dim Tor_i⟨μ⟩`.
    pub fn graded_betti(&self) -> BettiTable {
        let mut table = BTreeMap::new();
        for ((i, mu), comps) in &self.entries {
            let dim: u64 = comps.iter().map(OrbitComponent::dim).sum();
            *table.entry((*i, mu.size())).or_insert(0) += dim;
        }
        BettiTable { entries: table }
    }

    /// `dim Tor_i(·)_a`: the orbit dimension spread evenly over the
    /// rearrangements of `a`.
    pub fn multigraded_betti(&self, i: usize, a: &Multidegree) -> Result<u64> {
        if a.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: a.len() });
        }
        let mu = a.part();
        let total = self.orbit_dim(i, &mu);
        let orbit = mu.rearrangement_count();
        if !total.is_multiple_of(orbit) {
            return Err(Error::NonIntegralOrbit { total, orbit });
        }
        Ok(total / orbit)
    }

    /// `Tor_•(R/I)` from `Tor_•(I)`: indices shift up by one and `Tor_0(R/I)`
    /// is the trivial module in degree 0, except for `I = R` where everything vanishes.
    pub fn quotient(&self) -> EquivariantTor {
        if self.module == TorModule::Quotient {
            return self.clone();
        }
        let zero = Partition::zero(self.n);
        let unit = self.entries.contains_key(&(0, zero.clone()));
        let mut entries = BTreeMap::new();
        if !unit {
            for ((i, mu), comps) in &self.entries {
                entries.insert((i + 1, mu.clone()), comps.clone());
            }
            let trivial = OrbitComponent {
                c: Vec::new(),
                block: BlockSignature::block_for(&zero, &[]).expect("zero partition has no blocks"),
                multiplicity: 1,
            };
            entries.insert((0, zero), vec![trivial]);
        }
        EquivariantTor { module: TorModule::Quotient, entries, ..self.clone() }
    }

    /// Lines such as `Tor_2<(5,5,1)>: 1 x Ind[(1,1),(1)]`.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for ((i, mu), comps) in &self.entries {
            let parts: Vec<String> = comps.iter().map(|c| format!("{} x {}", c.multiplicity, c.block)).collect();
            let _ = writeln!(out, "Tor_{i}<{mu}>: {}", parts.join(" + "));
        }
        out
    }
}

/// `dim Tor_i(I)_a` for every `a` with `part(a) = μ` taken together.
pub fn multigraded_betti(tor: &EquivariantTor, i: usize, a: &Multidegree) -> Result<u64> {
    tor.multigraded_betti(i, a)
}

pub fn graded_betti(tor: &EquivariantTor) -> BettiTable {
    tor.graded_betti()
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BettiRecord {
    pub i: usize,
    pub j: u64,
    pub value: u64,
}

/// Graded Betti numbers `β_{i,j}`, finitely supported.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<BettiRecord>", from = "Vec<BettiRecord>")]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), u64>,
}

impl From<BettiTable> for Vec<BettiRecord> {
    fn from(t: BettiTable) -> Self {
        t.records()
    }
}

impl From<Vec<BettiRecord>> for BettiTable {
    fn from(records: Vec<BettiRecord>) -> Self {
        BettiTable::from_entries(records.into_iter().map(|r| ((r.i, r.j), r.value)))
    }
}

impl BettiTable {
    /// Zero values are dropped.
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, u64), u64)>) -> Self {
        BettiTable { entries: entries.into_iter().filter(|&(_, v)| v > 0).collect() }
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sorted by `(i, j)`.
    pub fn records(&self) -> Vec<BettiRecord> {
        self.entries.iter().map(|(&(i, j), &value)| BettiRecord { i, j, value }).collect()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// `max {j - i}` over non-zero entries.
    pub fn max_row(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    fn min_row(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min()
    }

    /// `Σ_j β_{i,j}` for `i = 0..=max_index`.
    pub fn totals(&self) -> Vec<u64> {
        let Some(top) = self.max_index() else {
            return Vec::new();
        };
        let mut out = vec![0; top + 1];
        for (&(i, _), &v) in &self.entries {
            out[i] += v;
        }
        out
    }

    /// Macaulay2 layout: row `d`, column `i` holds `β_{i,i+d}`, zeros as `.`.
    pub fn render(&self) -> String {
        let totals = self.totals();
        let (Some(lo), Some(hi)) = (self.min_row(), self.max_row()) else {
            return "total:\n".to_string();
        };
        let mut rows: Vec<(String, Vec<String>)> = vec![(
            "total:".to_string(),
            totals.iter().map(u64::to_string).collect(),
        )];
        for d in lo..=hi {
            let cells = (0..totals.len())
                .map(|i| {
                    let j = i as i64 + d;
                    let v = if j < 0 { 0 } else { self.get(i, j as u64) };
                    if v == 0 { ".".to_string() } else { v.to_string() }
                })
                .collect();
            rows.push((format!("{d}:"), cells));
        }
        let label_width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..totals.len())
            .map(|i| rows.iter().map(|(_, c)| c[i].len()).max().unwrap_or(1).max(i.to_string().len()))
            .collect();
        let mut out = String::new();
        out.push_str(&" ".repeat(label_width));
        for (i, w) in widths.iter().enumerate() {
            let _ = write!(out, " {i:>w$}");
        }
        out.push('\n');
        for (label, cells) in rows {
            let _ = write!(out, "{label:>label_width$}");
            for (cell, w) in cells.iter().zip(&widths) {
                let _ = write!(out, " {cell:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub i: usize,
    pub mu: Partition,
    pub value: u64,
}

/// `dim Tor_i(I)^{Sₙ}_⟨μ⟩`, read off as the trivial-isotypic multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBetti {
    pub field: FieldSpec,
    pub records: Vec<InvariantRecord>,
    pub warning: Option<String>,
}

impl InvariantBetti {
    pub fn get(&self, i: usize, mu: &Partition) -> u64 {
        self.records
            .iter()
            .find(|r| r.i == i && &r.mu == mu)
            .map_or(0, |r| r.value)
    }
}

pub const MODULAR_WARNING: &str =
    "characteristic divides |S_n|: block lists describe an associated graded module only";

pub fn invariant_betti(ideal: &SymIdeal, field: FieldSpec) -> Result<InvariantBetti> {
    Ok(invariant_part(&equivariant_tor(ideal, field)?))
}

/// Sums `trivial_multiplicity × multiplicity` per orbit component.
pub fn invariant_part(tor: &EquivariantTor) -> InvariantBetti {
    let records = tor
        .iter()
        .filter_map(|(i, mu, comps)| {
            let value: u64 = comps.iter().map(|c| c.block.trivial_multiplicity() * c.multiplicity).sum();
            (value > 0).then(|| InvariantRecord { i, mu: mu.clone(), value })
        })
        .collect();
    InvariantBetti {
        field: tor.field(),
        records,
        warning: tor.is_associated_graded().then(|| MODULAR_WARNING.to_string()),
    }
}
