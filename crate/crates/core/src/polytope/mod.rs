//! Full-dimensional lattice polytopes with the origin in the interior.
//!
//! A [`Polytope`] is built from its vertex list by [`Polytope::new`], which
//! computes the complete irredundant facet description and the vertex–facet
//! incidence. Vertices are kept in lexicographic order.

mod hull;

use num_rational::Ratio;
use thiserror::Error;

use crate::lattice_core::rank_of;
pub(crate) use hull::Mask;

pub type LatticeVector = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("no points given")]
    Empty,
    #[error("points have inconsistent dimensions (expected {expected}, found {found})")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("points do not span a full-dimensional polytope")]
    NotFullDimensional,
    #[error("origin is not in the interior")]
    OriginNotInterior,
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(LatticeVector),
    #[error("point {0:?} is not a vertex of the convex hull")]
    RedundantPoint(LatticeVector),
    #[error("too many points ({0}); at most 128 are supported")]
    TooManyPoints(usize),
    #[error("integer overflow in hull computation")]
    Overflow,
}

/// A facet `{x : ⟨normal, x⟩ = level}`; the polytope lies on the side `≤ level`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: LatticeVector,
    pub level: i64,
    /// Indices of the vertices on the facet, increasing.
    pub vertices: Vec<usize>,
}

/// A face, given by its vertex indices. `dim` is the dimension of the cone
/// over the face, so the empty face (the zero cone) has `dim == 0` and a
/// vertex has `dim == 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub dim: usize,
}

impl Face {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<LatticeVector>,
    facets: Vec<Facet>,
    facet_masks: Vec<Mask>,
}

impl Polytope {
    /// Builds the polytope with the given vertices (any order).
    ///
    /// Fails if a point repeats, if some point is not a vertex of the hull,
    /// if the points are not full-dimensional or if the origin is not
    /// strictly inside.
    pub fn new(points: Vec<LatticeVector>) -> Result<Self, PolytopeError> {
        let dim = points.first().ok_or(PolytopeError::Empty)?.len();
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(PolytopeError::DimensionMismatch {
                expected: dim,
                found: p.len(),
            });
        }
        if dim == 0 {
            return Err(PolytopeError::NotFullDimensional);
        }
        let mut vertices = points;
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(PolytopeError::DuplicateVertex(w[0].clone()));
        }
        let raw = hull::facets_of(&vertices, dim)?;
        if raw.iter().any(|f| f.level <= 0) {
            return Err(PolytopeError::OriginNotInterior);
        }
        // a point is a vertex iff the normals of its facets have full rank
        for (i, v) in vertices.iter().enumerate() {
            let normals: Vec<LatticeVector> = raw
                .iter()
                .filter(|f| f.zero_set & (1 << i) != 0)
                .map(|f| f.normal.clone())
                .collect();
            if normals.len() < dim || rank_of(&normals) < dim {
                return Err(PolytopeError::RedundantPoint(v.clone()));
            }
        }
        let mut facets: Vec<(Facet, Mask)> = raw
            .into_iter()
            .map(|f| {
                let idx = (0..vertices.len())
                    .filter(|&i| f.zero_set & (1 << i) != 0)
                    .collect();
                (
                    Facet {
                        normal: f.normal,
                        level: f.level,
                        vertices: idx,
                    },
                    f.zero_set,
                )
            })
            .collect();
        facets.sort_by(|a, b| a.0.normal.cmp(&b.0.normal));
        let (facets, facet_masks) = facets.into_iter().unzip();
        Ok(Self {
            dim,
            vertices,
            facets,
            facet_masks,
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> &[i64] {
        &self.vertices[i]
    }

    #[inline]
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn vertex_index(&self, v: &[i64]) -> Option<usize> {
        self.vertices.binary_search_by(|x| x.as_slice().cmp(v)).ok()
    }

    pub fn incidence(&self, vertex: usize, facet: usize) -> bool {
        self.facet_masks[facet] & (1 << vertex) != 0
    }

    pub(crate) fn facet_masks(&self) -> &[Mask] {
        &self.facet_masks
    }

    /// `⟨normal_F, v⟩` for every facet `F` (rows) and vertex `v` (columns).
    pub fn pairing_matrix(&self) -> Vec<Vec<i64>> {
        self.facets
            .iter()
            .map(|f| self.vertices.iter().map(|v| dot(&f.normal, v)).collect())
            .collect()
    }

    pub(crate) fn mask_of(indices: &[usize]) -> Mask {
        indices.iter().fold(0, |m, &i| m | (1 << i))
    }

    /// Whether the vertex set lies on a common proper face.
    pub fn on_common_face(&self, indices: &[usize]) -> bool {
        self.mask_on_common_face(Self::mask_of(indices))
    }

    pub(crate) fn mask_on_common_face(&self, mask: Mask) -> bool {
        self.facet_masks.iter().any(|&f| f & mask == mask)
    }

    /// The smallest face whose cone contains `point`; the empty face for 0.
    pub fn minimal_face_containing(&self, point: &[i64]) -> Face {
        assert_eq!(point.len(), self.dim);
        if point.iter().all(|&x| x == 0) {
            return Face {
                vertices: Vec::new(),
                dim: 0,
            };
        }
        // The ray through `point` leaves the polytope through the facets
        // maximizing ⟨u, p⟩ / level; the face they cut out is minimal.
        let mut best: Option<Ratio<i128>> = None;
        let mut mask: Mask = 0;
        for (f, &fm) in self.facets.iter().zip(&self.facet_masks) {
            let value = Ratio::new(dot(&f.normal, point) as i128, f.level as i128);
            match best {
                Some(b) if value < b => {}
                Some(b) if value == b => mask &= fm,
                _ => {
                    best = Some(value);
                    mask = fm;
                }
            }
        }
        let vertices: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| mask & (1 << i) != 0)
            .collect();
        let dim = rank_of(
            &vertices
                .iter()
                .map(|&i| self.vertices[i].clone())
                .collect::<Vec<_>>(),
        );
        Face { vertices, dim }
    }

    /// Lattice points of the polytope in lexicographic order.
    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        let lo: Vec<i64> = (0..self.dim)
            .map(|j| self.vertices.iter().map(|v| v[j]).min().unwrap())
            .collect();
        let hi: Vec<i64> = (0..self.dim)
            .map(|j| self.vertices.iter().map(|v| v[j]).max().unwrap())
            .collect();
        let mut out = Vec::new();
        let mut x = lo.clone();
        loop {
            if self.facets.iter().all(|f| dot(&f.normal, &x) <= f.level) {
                out.push(x.clone());
            }
            // odometer, last coordinate fastest
            let mut j = self.dim;
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                if x[j] < hi[j] {
                    x[j] += 1;
                    break;
                }
                x[j] = lo[j];
            }
        }
    }

    /// Vertices of the dual polytope `{y : ⟨y, x⟩ ≤ 1 on the polytope}`, one per
    /// facet (normal divided by level), in facet order.
    pub fn dual_vertices(&self) -> Vec<Vec<Ratio<i64>>> {
        self.facets
            .iter()
            .map(|f| f.normal.iter().map(|&u| Ratio::new(u, f.level)).collect())
            .collect()
    }

    pub fn is_simplicial(&self) -> bool {
        self.facets.iter().all(|f| f.vertices.len() == self.dim)
    }
}

#[inline]
pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
