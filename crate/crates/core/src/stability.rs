//! How the numbers `γ_i^{μ,c}` of `I_m = ⟨λ^1,…,λ^r⟩_{S_m}` change as the
//! number of variables grows.
//!
//! Going from `n` to `n+1` variables, write `μ = (μ̂, μ_{n+1})`:
//! if `μ_{n+1} = 0` the complex is unchanged; if `μ_{n+1} > 0` it is a cone
//! (so `γ = 0`) when `c_s = 0`, and otherwise equals the complex of
//! `(μ̂, c - e_s)`. Read forwards, every level-`n` entry `(μ̂, c, i)` yields
//! `((μ̂,0), c, i)` and, when `μ̂_n > 0`, `((μ̂,μ̂_n), c + e_s, i)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::equivariant::{gamma_profiles, EquivariantTor};
use crate::error::{Error, Result};
use crate::homology::FieldSpec;
use crate::ideal::SymIdeal;
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaRecord {
    pub mu: Partition,
    pub c: Vec<usize>,
    pub i: usize,
    pub gamma: u64,
}

/// Positive `γ_i^{μ,c}(I_n)` keyed by `(μ, c, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaTable {
    n: usize,
    field: FieldSpec,
    #[serde(with = "records")]
    entries: BTreeMap<(Partition, Vec<usize>, usize), u64>,
}

mod records {
    use super::*;
    use serde::{Deserializer, Serializer};

    type Map = BTreeMap<(Partition, Vec<usize>, usize), u64>;

    pub fn serialize<S: Serializer>(map: &Map, s: S) -> std::result::Result<S::Ok, S::Error> {
        let recs: Vec<GammaRecord> = map
            .iter()
            .map(|((mu, c, i), &gamma)| GammaRecord { mu: mu.clone(), c: c.clone(), i: *i, gamma })
            .collect();
        recs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Map, D::Error> {
        let recs = Vec::<GammaRecord>::deserialize(d)?;
        Ok(recs.into_iter().map(|r| ((r.mu, r.c, r.i), r.gamma)).collect())
    }
}

impl GammaTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, mu: &Partition, c: &[usize], i: usize) -> u64 {
        self.entries.get(&(mu.clone(), c.to_vec(), i)).copied().unwrap_or(0)
    }

    /// Sorted by `(μ, c, i)`.
    pub fn records(&self) -> Vec<GammaRecord> {
        self.entries
            .iter()
            .map(|((mu, c, i), &gamma)| GammaRecord { mu: mu.clone(), c: c.clone(), i: *i, gamma })
            .collect()
    }

    /// The partitions appearing as keys.
    pub fn partitions(&self) -> BTreeSet<Partition> {
        self.entries.keys().map(|(mu, _, _)| mu.clone()).collect()
    }

    /// One step `n → n+1`.
    pub fn step(&self) -> GammaTable {
        let mut entries = BTreeMap::new();
        for ((mu, c, i), &g) in &self.entries {
            let widened = mu.pushed(0).expect("appending 0 keeps the order");
            entries.insert((widened, c.clone(), *i), g);
            if let Some(&last) = mu.parts().last().filter(|&&x| x > 0) {
                let repeated = mu.pushed(last).expect("repeating the last part keeps the order");
                let mut shifted = c.clone();
                *shifted.last_mut().expect("a positive part gives s >= 1") += 1;
                entries.insert((repeated, shifted, *i), g);
            }
        }
        GammaTable { n: self.n + 1, field: self.field, entries }
    }

    /// `γ(I_m)` for `m >= n`.
    pub fn propagate(&self, m: usize) -> Result<GammaTable> {
        if m < self.n {
            return Err(Error::PropagateBackwards { from: self.n, to: m });
        }
        let mut t = self.clone();
        while t.n < m {
            t = t.step();
        }
        Ok(t)
    }

    pub fn to_equivariant_tor(&self) -> Result<EquivariantTor> {
        EquivariantTor::from_gammas(
            self.n,
            self.field,
            self.entries.iter().map(|((mu, c, i), &g)| (mu, c.as_slice(), *i, g)),
        )
    }

    /// The `(i, μ)` with `Tor_i(I_n)_⟨μ⟩ ≠ 0`.
    pub fn tor_support(&self) -> BTreeSet<(usize, Partition)> {
        self.entries
            .keys()
            .map(|(mu, c, i)| (i + c.iter().sum::<usize>(), mu.clone()))
            .collect()
    }
}

/// All positive `γ_i^{μ,c}(I)` over candidate `μ` and admissible `c`.
pub fn base_gamma_table(ideal: &SymIdeal, field: FieldSpec) -> Result<GammaTable> {
    let mut entries = BTreeMap::new();
    for (mu, c, prof) in gamma_profiles(ideal, field)? {
        for (i, g) in prof.nonzero() {
            entries.insert((mu.clone(), c.clone(), i), g as u64);
        }
    }
    Ok(GammaTable { n: ideal.n(), field, entries })
}

pub fn propagate(table: &GammaTable, m: usize) -> Result<GammaTable> {
    table.propagate(m)
}

/// Checks the support rules between consecutive levels, for `μ ∈ P_{n+1}`:
/// (i) `μ_{n+1} = 0`: `Tor_i⟨μ⟩ ≠ 0` iff `Tor_i⟨μ̂⟩ ≠ 0` one level down;
/// (ii) `0 < μ_{n+1} < μ_n`: `Tor_i⟨μ⟩ = 0`;
/// (iii) `μ_{n+1} = μ_n > 0`: `Tor_i⟨μ⟩ ≠ 0` iff `Tor_{i-1}⟨μ̂⟩ ≠ 0`.
pub fn nonvanishing_check(lower: &GammaTable, upper: &GammaTable) -> Result<bool> {
    lower.field.ensure_same(upper.field)?;
    if upper.n != lower.n + 1 {
        return Err(Error::LengthMismatch { expected: lower.n + 1, found: upper.n });
    }
    let below = lower.tor_support();
    let above = upper.tor_support();
    for (i, mu) in &above {
        let hat = mu.without_last();
        let (last, prev) = (mu.parts()[lower.n], hat.parts().last().copied().unwrap_or(0));
        let ok = if last == 0 {
            below.contains(&(*i, hat))
        } else if last < prev {
            false
        } else {
            *i >= 1 && below.contains(&(i - 1, hat))
        };
        if !ok {
            return Ok(false);
        }
    }
    for (i, lambda) in &below {
        if !above.contains(&(*i, lambda.pushed(0)?)) {
            return Ok(false);
        }
        if let Some(&last) = lambda.parts().last().filter(|&&x| x > 0) {
            if !above.contains(&(i + 1, lambda.pushed(last)?)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
