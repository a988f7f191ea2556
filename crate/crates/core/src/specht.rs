//! Dimensions of hook Specht modules and of the induced blocks `𝒮^π`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// `C(n, k)`, exact; panics on `u64` overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * u128::from(n - j) / u128::from(j + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// `n! / (k_1! ⋯ k_r!)` where `n = Σ k_j`.
pub fn multinomial(parts: &[u64]) -> u64 {
    let mut remaining: u64 = parts.iter().sum();
    let mut acc = 1u64;
    for &k in parts {
        acc = acc.checked_mul(binomial(remaining, k)).expect("multinomial overflows u64");
        remaining -= k;
    }
    acc
}

/// The hook partition `(arm, 1^leg)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Hook {
    arm: usize,
    leg: usize,
}

impl Hook {
    pub fn new(arm: usize, leg: usize) -> Result<Self> {
        if arm == 0 {
            return Err(Error::Job("a hook needs arm >= 1".into()));
        }
        Ok(Hook { arm, leg })
    }

    /// The one-row shape `(len)`.
    pub fn row(len: usize) -> Self {
        Hook { arm: len, leg: 0 }
    }

    pub fn arm(self) -> usize {
        self.arm
    }

    pub fn leg(self) -> usize {
        self.leg
    }

    pub fn size(self) -> usize {
        self.arm + self.leg
    }

    pub fn is_row(self) -> bool {
        self.leg == 0
    }

    /// Number of standard tableaux of shape `(p,1^q)`, i.e. `C(p+q-1, q)`.
    pub fn dim(self) -> u64 {
        binomial((self.arm + self.leg - 1) as u64, self.leg as u64)
    }
}

impl From<Hook> for [usize; 2] {
    fn from(h: Hook) -> Self {
        [h.arm, h.leg]
    }
}

impl TryFrom<[usize; 2]> for Hook {
    type Error = Error;

    fn try_from([arm, leg]: [usize; 2]) -> Result<Self> {
        Hook::new(arm, leg)
    }
}

impl fmt::Display for Hook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.arm)?;
        for _ in 0..self.leg {
            f.write_str(",1")?;
        }
        f.write_str(")")
    }
}

pub fn hook_dim(h: Hook) -> u64 {
    h.dim()
}

/// The shape list `π` of an induced module `Ind(S^{π_1} ⊠ ⋯ ⊠ S^{π_r})`.
///
/// One hook per distinct positive part, followed by the row `(p_{s+1})` of
/// zero entries when that row is non-empty. Since a row is a hook with no
/// leg, the trailing row is stored as the last factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlockSignature {
    factors: Vec<Hook>,
}

impl BlockSignature {
    pub fn new(factors: Vec<Hook>) -> Self {
        BlockSignature { factors }
    }

    /// `π(c) = ((p_1-c_1,1^{c_1}), …, (p_s-c_s,1^{c_s}), (p_{s+1}))`, an empty
    /// trailing row omitted.
    pub fn block_for(mu: &Partition, c: &[usize]) -> Result<Self> {
        let shape = mu.shape_data();
        let bound: Vec<usize> = shape.multiplicities.iter().map(|p| p - 1).collect();
        if c.len() != bound.len() || c.iter().zip(&bound).any(|(ck, b)| ck > b) {
            return Err(Error::ColumnsOutOfRange { c: c.to_vec(), bound });
        }
        let mut factors: Vec<Hook> = shape
            .multiplicities
            .iter()
            .zip(c)
            .map(|(&p, &ck)| Hook { arm: p - ck, leg: ck })
            .collect();
        if shape.zero_count > 0 {
            factors.push(Hook::row(shape.zero_count));
        }
        Ok(BlockSignature { factors })
    }

    pub fn factors(&self) -> &[Hook] {
        &self.factors
    }

    /// `n = Σ |π_k|`.
    pub fn n(&self) -> usize {
        self.factors.iter().map(|h| h.size()).sum()
    }

    /// `[Sₙ : Young subgroup] · Π dim S^{π_k}`.
    pub fn dim(&self) -> u64 {
        let sizes: Vec<u64> = self.factors.iter().map(|h| h.size() as u64).collect();
        self.factors
            .iter()
            .fold(multinomial(&sizes), |acc, h| acc.checked_mul(h.dim()).expect("block dimension overflows u64"))
    }

    /// Multiplicity of the trivial module in `𝒮^π` (characteristic 0):
    /// 1 when every factor is a single row, else 0.
    pub fn trivial_multiplicity(&self) -> u64 {
        u64::from(self.factors.iter().all(|h| h.is_row()))
    }
}

pub fn block_dim(pi: &BlockSignature) -> u64 {
    pi.dim()
}

pub fn trivial_multiplicity(pi: &BlockSignature) -> u64 {
    pi.trivial_multiplicity()
}

impl fmt::Display for BlockSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Ind[")?;
        for (k, h) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn h(arm: usize, leg: usize) -> Hook {
        Hook::new(arm, leg).unwrap()
    }

    /// Standard Young tableaux of a hook, by brute force: choose which of the
    /// entries `2..=p+q` go in the leg.
    fn tableaux_by_enumeration(arm: usize, leg: usize) -> u64 {
        let rest = arm + leg - 1;
        (0u32..1 << rest).filter(|m| m.count_ones() as usize == leg).count() as u64
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
        assert_eq!(multinomial(&[1, 1, 1]), 6);
        assert_eq!(multinomial(&[2, 1]), 3);
        assert_eq!(multinomial(&[]), 1);
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(h(1, 0).dim(), 1);
        assert_eq!(h(2, 2).dim(), 3);
        assert_eq!(h(2, 2).dim(), tableaux_by_enumeration(2, 2));
        assert_eq!(h(1, 3).dim(), 1);
        // (p0+1, 1^{p1-1}) has C(p0+p1-1, p0) tableaux
        for p0 in 0..4 {
            for p1 in 1..4 {
                assert_eq!(h(p0 + 1, p1 - 1).dim(), binomial((p0 + p1 - 1) as u64, p0 as u64));
            }
        }
        assert!(Hook::new(0, 1).is_err());
        assert_eq!(h(2, 2).to_string(), "(2,1,1)");
    }

    #[test]
    fn blocks_from_partitions() {
        let b = BlockSignature::block_for(&p(&[4, 4, 1]), &[1, 0]).unwrap();
        assert_eq!(b.factors(), &[h(1, 1), h(1, 0)]);
        assert_eq!(b.to_string(), "Ind[(1,1),(1)]");
        assert_eq!(serde_json::to_string(&b).unwrap(), "[[1,1],[1,0]]");
        assert_eq!(b.dim(), 3);
        assert_eq!(b.trivial_multiplicity(), 0);

        let b = BlockSignature::block_for(&p(&[4, 4, 4]), &[2]).unwrap();
        assert_eq!(b.factors(), &[h(1, 2)]);
        assert_eq!(b.dim(), 1);

        let b = BlockSignature::block_for(&p(&[5, 2, 1]), &[0, 0, 0]).unwrap();
        assert_eq!(b.dim(), 6);
        assert_eq!(b.trivial_multiplicity(), 1);

        let b = BlockSignature::block_for(&p(&[2, 2, 0]), &[0]).unwrap();
        assert_eq!(b.factors(), &[h(2, 0), h(1, 0)]);
        assert_eq!(b.dim(), 3);
        assert_eq!(b.trivial_multiplicity(), 1);

        let b = BlockSignature::block_for(&p(&[0, 0, 0]), &[]).unwrap();
        assert_eq!(b.factors(), &[h(3, 0)]);
        assert_eq!(b.dim(), 1);

        assert!(BlockSignature::block_for(&p(&[4, 4, 1]), &[2, 0]).is_err());
        let back: BlockSignature = serde_json::from_str("[[1,1],[1,0]]").unwrap();
        assert_eq!(back, BlockSignature::block_for(&p(&[4, 4, 1]), &[1, 0]).unwrap());
    }

    /// Σ_c dim 𝒮^{π(c)} · 2^s equals the number of pairs (a, F) with
    /// part(a) = μ and F a subset of the support blocks, counted as
    /// `rearrangements(μ) · 2^{#positive entries}`.
    #[test]
    fn block_dimensions_fill_the_exterior_level() {
        for mu in crate::partition::partitions_below(&p(&[3, 3, 3, 3, 3])) {
            let shape = mu.shape_data();
            let total: u64 = mu
                .admissible_columns()
                .iter()
                .map(|c| BlockSignature::block_for(&mu, c).unwrap().dim())
                .sum();
            let positive = (mu.len() - shape.zero_count) as u32;
            assert_eq!(
                total << shape.s(),
                mu.rearrangement_count() << positive,
                "{mu}"
            );
        }
    }

    proptest::proptest! {
        #[test]
        fn hook_transpose_symmetry(arm in 1usize..8, leg in 0usize..8) {
            proptest::prop_assert_eq!(h(arm, leg).dim(), h(leg + 1, arm - 1).dim());
            proptest::prop_assert_eq!(h(arm, leg).dim(), tableaux_by_enumeration(arm, leg));
        }

        #[test]
        fn block_dim_ignores_factor_order(raw in proptest::collection::vec((1usize..4, 0usize..3), 1..4), rot in 0usize..4) {
            let factors: Vec<Hook> = raw.iter().map(|&(a, l)| h(a, l)).collect();
            let mut rotated = factors.clone();
            let len = rotated.len();
            rotated.rotate_left(rot % len);
            proptest::prop_assert_eq!(BlockSignature::new(factors).dim(), BlockSignature::new(rotated).dim());
        }
    }
}
