//! Simplicial complexes attached to a symmetric ideal and their reduced
//! homology over ℚ or 𝔽_p.

mod complex;
mod field;
mod rank;

pub use complex::{HomologyProfile, SimplicialComplex, MAX_VERTICES};
pub use field::FieldSpec;
pub use rank::IntMatrix;

use crate::error::{Error, Result};
use crate::ideal::{PlainIdeal, SymIdeal};
use crate::partition::{Multidegree, Partition};

fn check_columns(mu: &Partition, c: &[usize]) -> Result<Vec<usize>> {
    let p = mu.p_vector();
    if c.len() != p.len() || c.iter().zip(&p).any(|(ck, pk)| ck > pk) {
        return Err(Error::ColumnsOutOfRange { c: c.to_vec(), bound: p });
    }
    Ok(p)
}

/// `c + e_F` for a face bitmask `F`.
fn shifted(c: &[usize], face: u64) -> Vec<usize> {
    c.iter()
        .enumerate()
        .map(|(k, &ck)| ck + (face >> k & 1) as usize)
        .collect()
}

/// `Δ^{μ,c}(I)`: faces `F ⊆ [s]` with `μ ∖ (c + e_F) ∈ P(I)`.
///
/// Requires `0 <= c <= p(μ)`. Downward closure follows from `P(I)` being
/// upward closed, and is re-checked on construction.
pub fn delta_complex(ideal: &SymIdeal, mu: &Partition, c: &[usize]) -> Result<SimplicialComplex> {
    if mu.len() != ideal.n() {
        return Err(Error::LengthMismatch { expected: ideal.n(), found: mu.len() });
    }
    check_columns(mu, c)?;
    let s = c.len();
    SimplicialComplex::from_predicate(s, |face| {
        let smaller = mu
            .remove_columns(&shifted(c, face))
            .expect("c + e_F stays within the block sizes");
        ideal.contains_unchecked(smaller.parts())
    })
}

/// `Γ^{μ,c}(I)`: faces `F` with `μ ∖ (c + e_{[s]∖F}) ∉ P(I)`. This is the
/// Alexander dual of `Δ^{μ,c}(I)`, built directly from its own definition.
pub fn gamma_complex(ideal: &SymIdeal, mu: &Partition, c: &[usize]) -> Result<SimplicialComplex> {
    if mu.len() != ideal.n() {
        return Err(Error::LengthMismatch { expected: ideal.n(), found: mu.len() });
    }
    check_columns(mu, c)?;
    let s = c.len();
    let full = (1u64 << s) - 1;
    SimplicialComplex::from_predicate(s, |face| {
        let smaller = mu
            .remove_columns(&shifted(c, full & !face))
            .expect("c + e_F stays within the block sizes");
        !ideal.contains_unchecked(smaller.parts())
    })
}

/// `γ_i^{μ,c}(I) = dim H̃_{i-1}(Δ^{μ,c}(I))` for all `i`.
pub fn gamma(ideal: &SymIdeal, mu: &Partition, c: &[usize], field: FieldSpec) -> Result<HomologyProfile> {
    Ok(delta_complex(ideal, mu, c)?.reduced_homology(field))
}

/// `Δ^J_a = {F ⊆ [n] : a - e_F >= 0, x^{a-e_F} ∈ J}`.
pub fn koszul_lower_complex(ideal: &PlainIdeal, a: &Multidegree) -> Result<SimplicialComplex> {
    let n = ideal.n();
    if a.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: a.len() });
    }
    let exps = a.exponents();
    let mut scratch = exps.to_vec();
    SimplicialComplex::from_predicate(n, |face| {
        for (k, slot) in scratch.iter_mut().enumerate() {
            let drop = (face >> k & 1) as u32;
            if exps[k] < drop {
                return false;
            }
            *slot = exps[k] - drop;
        }
        ideal.contains_unchecked(&scratch)
    })
}
