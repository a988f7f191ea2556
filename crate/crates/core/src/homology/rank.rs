//! Exact matrix rank: fraction-free (Bareiss) elimination over ℤ for
//! characteristic 0, plain Gaussian elimination over 𝔽_p otherwise.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::FieldSpec;

/// A dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.data[r * self.cols + c] = value;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[i64]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `self · other`; panics on a dimension mismatch.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] += a * other.get(k, c);
                }
            }
        }
        out
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        match field.characteristic() {
            0 => self.rank_rational(),
            p => self.rank_mod_p(u64::from(p)),
        }
    }

    /// Rank over ℚ. Runs Bareiss in checked `i128`; if an intermediate minor
    /// overflows, the elimination restarts with arbitrary-precision integers.
    pub fn rank_rational(&self) -> usize {
        let narrow: Vec<Vec<i128>> = self.to_rows_as(i128::from);
        match bareiss_rank(narrow) {
            Some(r) => r,
            None => bareiss_rank(self.to_rows_as(BigInt::from)).expect("bigint elimination cannot overflow"),
        }
    }

    pub fn rank_mod_p(&self, p: u64) -> usize {
        let mut m: Vec<Vec<u64>> = self.to_rows_as(|x| x.rem_euclid(p as i64) as u64);
        let cols = self.cols;
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = pow_mod(m[rank][col], p - 2, p);
            for x in m[rank][col..].iter_mut() {
                *x = *x * inv % p;
            }
            let (head, tail) = m.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            for row in tail.iter_mut() {
                let f = row[col];
                if f == 0 {
                    continue;
                }
                for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
            rank += 1;
        }
        rank
    }

    fn to_rows_as<T>(&self, f: impl Fn(i64) -> T) -> Vec<Vec<T>> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].iter().map(|&x| f(x)).collect())
            .collect()
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Integer scalars usable in fraction-free elimination.
trait BareissScalar: Clone {
    fn is_zero(&self) -> bool;
    fn one() -> Self;
    /// `(pivot·x − lead·y) / prev`, exact by Sylvester's identity; `None` on overflow.
    fn step(pivot: &Self, x: &Self, lead: &Self, y: &Self, prev: &Self) -> Option<Self>;
}

impl BareissScalar for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn one() -> Self {
        1
    }

    fn step(pivot: &i128, x: &i128, lead: &i128, y: &i128, prev: &i128) -> Option<i128> {
        let num = pivot.checked_mul(*x)?.checked_sub(lead.checked_mul(*y)?)?;
        debug_assert_eq!(num % prev, 0);
        Some(num / prev)
    }
}

impl BareissScalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn one() -> Self {
        BigInt::from(1)
    }

    fn step(pivot: &BigInt, x: &BigInt, lead: &BigInt, y: &BigInt, prev: &BigInt) -> Option<BigInt> {
        Some((pivot * x - lead * y) / prev)
    }
}

fn bareiss_rank<T: BareissScalar>(mut m: Vec<Vec<T>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let p = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..cols {
                row[j] = T::step(&p, &row[j], &lead, &pivot_row[j], &prev)?;
            }
            row[col] = T::step(&p, &row[col], &lead, &pivot_row[col], &prev)?;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rank as the largest order of a non-vanishing minor, determinants by
    /// Laplace expansion. Independent of both elimination routines.
    fn rank_by_minors(m: &IntMatrix) -> usize {
        fn det(rows: &[Vec<i64>]) -> i128 {
            match rows.len() {
                0 => 1,
                n => (0..n)
                    .map(|j| {
                        let minor: Vec<Vec<i64>> = rows[1..]
                            .iter()
                            .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &x)| x).collect())
                            .collect();
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        sign * i128::from(rows[0][j]) * det(&minor)
                    })
                    .sum(),
            }
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            (0u32..(1 << n))
                .filter(|m| m.count_ones() as usize == k)
                .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
                .collect()
        }
        let rows = m.to_rows();
        (1..=m.rows().min(m.cols()))
            .rev()
            .find(|&k| {
                subsets(m.rows(), k).iter().any(|rs| {
                    subsets(m.cols(), k).iter().any(|cs| {
                        let sub: Vec<Vec<i64>> =
                            rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c]).collect()).collect();
                        det(&sub) != 0
                    })
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn small_ranks() {
        let m = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank_rational(), 2);
        // mod 2 the rows are (1,0,1), 0, (1,0,1)
        assert_eq!(m.rank_mod_p(2), 1);
        assert_eq!(m.rank_mod_p(3), 2);
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(m.rank_rational(), 2);
        assert_eq!(m.rank_mod_p(2), 0);
        assert_eq!(m.rank_mod_p(3), 2);
        assert_eq!(IntMatrix::zeros(0, 0).rank_rational(), 0);
        assert_eq!(IntMatrix::zeros(3, 0).rank_mod_p(5), 0);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // generic 12-digit entries: 4x4 minors already exceed i128
        let n = 6;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let h = ((i * 7 + j * 13 + 1) as i64).pow(3) % 997 + 1;
                        h * 1_000_000_000_000 + (i * j) as i64
                    })
                    .collect()
            })
            .collect();
        let m = IntMatrix::from_rows(rows.clone());
        let narrow: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
        assert!(bareiss_rank(narrow).is_none(), "example should overflow i128");
        assert_eq!(m.rank_rational(), n);
    }

    proptest::proptest! {
        #[test]
        fn elimination_matches_minor_oracle(
            rows in 1usize..5,
            cols in 1usize..5,
            entries in proptest::collection::vec(-2i64..=2, 16),
        ) {
            let m = IntMatrix::from_rows((0..rows).map(|r| entries[r * cols..(r + 1) * cols].to_vec()).collect());
            let expected = rank_by_minors(&m);
            proptest::prop_assert_eq!(m.rank_rational(), expected);
            proptest::prop_assert!(m.rank_mod_p(2) <= expected);
            proptest::prop_assert_eq!(m.rank_mod_p(1_000_003), expected);
        }
    }
}
