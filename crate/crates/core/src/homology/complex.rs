use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::rank::IntMatrix;
use super::FieldSpec;
use crate::error::{Error, Result};

/// Largest vertex count for which faces fit the bitset representation.
pub const MAX_VERTICES: usize = 63;

/// A finite simplicial complex on the vertex set `{1,…,s}`, faces stored as
/// bitsets (bit `v-1` set when vertex `v` belongs to the face).
///
/// The empty complex (no faces at all) and `{∅}` are different values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: BTreeSet<u64>,
}

/// `dims[i] = dim H̃_{i-1}`, so entry `i` lines up with `γ_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyProfile {
    dims: Vec<usize>,
}

impl HomologyProfile {
    pub fn from_dims(mut dims: Vec<usize>) -> Self {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        HomologyProfile { dims }
    }

    /// `dim H̃_{i-1}`.
    pub fn gamma(&self, i: usize) -> usize {
        self.dims.get(i).copied().unwrap_or(0)
    }

    /// `dim H̃_k`; zero for `k < -1`.
    pub fn reduced(&self, k: isize) -> usize {
        if k < -1 {
            0
        } else {
            self.gamma((k + 1) as usize)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Non-zero entries as `(i, dim H̃_{i-1})`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.dims.iter().copied().enumerate().filter(|&(_, d)| d > 0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `Σ_k (-1)^k dim H̃_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

fn mask_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

impl SimplicialComplex {
    fn check_size(vertex_count: usize) -> Result<()> {
        if vertex_count > MAX_VERTICES {
            Err(Error::TooManyVertices(vertex_count))
        } else {
            Ok(())
        }
    }

    /// No faces at all.
    pub fn empty(vertex_count: usize) -> Result<Self> {
        Self::check_size(vertex_count)?;
        Ok(SimplicialComplex { vertex_count, faces: BTreeSet::new() })
    }

    /// `{∅}`.
    pub fn irrelevant(vertex_count: usize) -> Result<Self> {
        Self::check_size(vertex_count)?;
        Ok(SimplicialComplex { vertex_count, faces: BTreeSet::from([0]) })
    }

    /// All subsets of `{1,…,s}`.
    pub fn simplex(vertex_count: usize) -> Result<Self> {
        Self::from_predicate(vertex_count, |_| true)
    }

    /// Faces are exactly the subsets satisfying `is_face`; the result must be
    /// closed under taking subsets.
    pub fn from_predicate(vertex_count: usize, mut is_face: impl FnMut(u64) -> bool) -> Result<Self> {
        if vertex_count > 24 {
            return Err(Error::TooManyVertices(vertex_count));
        }
        let faces: BTreeSet<u64> = (0..1u64 << vertex_count).filter(|&m| is_face(m)).collect();
        let complex = SimplicialComplex { vertex_count, faces };
        if !complex.is_downward_closed() {
            return Err(Error::NotDownwardClosed);
        }
        Ok(complex)
    }

    /// The complex generated by the given facets (vertices numbered from 1).
    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>]) -> Result<Self> {
        Self::check_size(vertex_count)?;
        let mut faces = BTreeSet::new();
        for facet in facets {
            let mut mask = 0u64;
            for &v in facet {
                if v == 0 || v > vertex_count {
                    return Err(Error::LengthMismatch { expected: vertex_count, found: v });
                }
                mask |= 1 << (v - 1);
            }
            // enumerate submasks
            let mut sub = mask;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        Ok(SimplicialComplex { vertex_count, faces })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.faces.contains(&mask)
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let mask = face.iter().fold(0u64, |m, &v| if (1..=64).contains(&v) { m | 1 << (v - 1) } else { m });
        face.iter().all(|&v| v >= 1 && v <= self.vertex_count) && self.contains_mask(mask)
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|&f| {
            (0..self.vertex_count).all(|b| f >> b & 1 == 0 || self.faces.contains(&(f & !(1 << b))))
        })
    }

    /// Faces with `size` vertices, each as an increasing vertex list, in
    /// lexicographic order. This is the basis order of the chain groups.
    pub fn faces_of_size(&self, size: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .faces
            .iter()
            .filter(|f| f.count_ones() as usize == size)
            .map(|&f| mask_vertices(f))
            .collect();
        out.sort();
        out
    }

    /// Every face, ordered by size and then lexicographically.
    pub fn face_lists(&self) -> Vec<Vec<usize>> {
        (0..=self.dimension_bound()).flat_map(|k| self.faces_of_size(k)).collect()
    }

    /// Faces not strictly contained in another face.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .faces
            .iter()
            .filter(|&&f| !self.faces.iter().any(|&g| g != f && g & f == f))
            .map(|&f| mask_vertices(f))
            .collect();
        out.sort();
        out
    }

    fn dimension_bound(&self) -> usize {
        self.faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0)
    }

    /// `F ∈ Δ^∨` iff `[s] ∖ F ∉ Δ`.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let full = if self.vertex_count == 64 { u64::MAX } else { (1u64 << self.vertex_count) - 1 };
        let faces = (0..=full).filter(|&f| !self.faces.contains(&(full & !f))).collect();
        SimplicialComplex { vertex_count: self.vertex_count, faces }
    }

    /// `F ∪ {apex} ∈ Δ` for every face `F`.
    pub fn is_cone_with_apex(&self, apex: usize) -> bool {
        apex >= 1
            && apex <= self.vertex_count
            && self.faces.iter().all(|&f| self.faces.contains(&(f | 1 << (apex - 1))))
    }

    /// `Σ_F (-1)^{|F|-1}` over all faces including `∅`.
    pub fn face_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .map(|f| if f.count_ones() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// `∂_k : C_k → C_{k-1}` where `C_k` is spanned by faces with `k+1`
    /// vertices. Rows index `(k)`-vertex faces and columns `(k+1)`-vertex
    /// faces, both in [`faces_of_size`](Self::faces_of_size) order. The
    /// coefficient of `F ∖ {v}` in `∂F` is `(-1)^{|{u ∈ F : u <= v}|}`.
    pub fn boundary_matrix(&self, k: usize) -> IntMatrix {
        let targets = self.faces_of_size(k);
        let sources = self.faces_of_size(k + 1);
        let index: HashMap<&[usize], usize> =
            targets.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        let mut m = IntMatrix::zeros(targets.len(), sources.len());
        for (col, face) in sources.iter().enumerate() {
            for (pos, _) in face.iter().enumerate() {
                let mut smaller = face.clone();
                smaller.remove(pos);
                let row = index[smaller.as_slice()];
                // |{u ∈ F | u <= v}| = pos + 1
                let sign = if (pos + 1) % 2 == 0 { 1 } else { -1 };
                m.set(row, col, sign);
            }
        }
        m
    }

    /// `dim H̃_i = f_i − rank ∂_i − rank ∂_{i+1}` for every `i >= -1`.
    pub fn reduced_homology(&self, field: FieldSpec) -> HomologyProfile {
        if self.faces.is_empty() {
            return HomologyProfile::default();
        }
        let top = self.dimension_bound();
        let counts: Vec<usize> = (0..=top + 1)
            .map(|size| self.faces.iter().filter(|f| f.count_ones() as usize == size).count())
            .collect();
        // ranks[size] = rank of the map out of faces with `size` vertices
        let mut ranks = vec![0usize; top + 2];
        for (size, r) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
            *r = self.boundary_matrix(size - 1).rank(field);
        }
        let dims = (0..=top)
            .map(|size| counts[size] - ranks[size] - ranks[size + 1])
            .collect();
        HomologyProfile::from_dims(dims)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            vertex_count: usize,
            faces: Vec<Vec<usize>>,
        }
        Repr { vertex_count: self.vertex_count, faces: self.face_lists() }.serialize(s)
    }
}
