//! Primitive collections and relations of smooth Fano polytopes, their
//! degrees and extremality, and the type of the associated contraction.
//!
//! For a simplicial polytope a set of vertices spans a cone of the face fan
//! exactly when it lies on a common facet, so all face tests here are facet
//! containment tests on vertex bitmasks.
//!
//! Extremality is decided in `A_1 ⊗ Q`, assuming (as is standard for smooth
//! projective toric varieties) that the Mori cone is generated by the classes
//! of the primitive relations.

pub mod lp;

use std::collections::HashSet;

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::lattice_core::{positive_integer_combination, rank_of, to_rational};
use crate::polytope::{Face, Mask, Polytope};
use crate::toric::is_smooth;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoriError {
    #[error("polytope is not smooth")]
    NotSmooth,
    #[error("vertex sum of {0:?} has no positive integral expression on its focus")]
    NonIntegralRelation(Vec<usize>),
    #[error("relation list does not contain the relation of {0:?}")]
    IncompleteRelationList(Vec<usize>),
}

/// A minimal set of vertices not lying on a common face.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimitiveCollection {
    /// increasing vertex indices
    pub vertices: Vec<usize>,
}

impl PrimitiveCollection {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// `Σ_{x∈P} x = Σ b_i y_i` with `y_i` the generators of the focus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveRelation {
    pub collection: PrimitiveCollection,
    pub focus: Face,
    /// `b_i`, aligned with `focus.vertices`
    pub coefficients: Vec<i64>,
    pub degree: i64,
    /// +1 on the collection, −b_i on the focus, as a vector on the vertices
    pub class: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ContractionKind {
    MoriFibration,
    Divisorial,
    Flipping,
}

fn require_smooth(p: &Polytope) -> Result<(), MoriError> {
    if is_smooth(p) {
        Ok(())
    } else {
        Err(MoriError::NotSmooth)
    }
}

fn bits(mask: Mask) -> Vec<usize> {
    (0..128).filter(|&i| mask & (1 << i) != 0).collect()
}

/// All vertex sets lying on a common facet (the cones of the fan).
fn face_masks(p: &Polytope) -> HashSet<Mask> {
    let mut out = HashSet::new();
    for &f in p.facet_masks() {
        let mut sub = f;
        loop {
            out.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f;
        }
    }
    out
}

/// All primitive collections, ordered by size, then by vertex indices.
pub fn primitive_collections(p: &Polytope) -> Result<Vec<PrimitiveCollection>, MoriError> {
    require_smooth(p)?;
    let faces = face_masks(p);
    let m = p.num_vertices();
    let mut out = Vec::new();
    for &s in &faces {
        let top = if s == 0 {
            0
        } else {
            128 - s.leading_zeros() as usize
        };
        for x in top..m {
            let c = s | (1 << x);
            if c.count_ones() < 2 || faces.contains(&c) {
                continue;
            }
            // s = c \ {x} is a face by construction
            if bits(s)
                .into_iter()
                .all(|y| faces.contains(&(c & !(1 << y))))
            {
                out.push(PrimitiveCollection { vertices: bits(c) });
            }
        }
    }
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    Ok(out)
}

pub fn primitive_relation(
    p: &Polytope,
    c: &PrimitiveCollection,
) -> Result<PrimitiveRelation, MoriError> {
    require_smooth(p)?;
    relation_unchecked(p, c)
}

fn relation_unchecked(
    p: &Polytope,
    c: &PrimitiveCollection,
) -> Result<PrimitiveRelation, MoriError> {
    let d = p.dim();
    let mut sum = vec![0i64; d];
    for &x in &c.vertices {
        for (s, v) in sum.iter_mut().zip(p.vertex(x)) {
            *s += v;
        }
    }
    let focus = p.minimal_face_containing(&sum);
    let coefficients = if focus.is_empty() {
        Vec::new()
    } else {
        let gens: Vec<Vec<i64>> = focus
            .vertices
            .iter()
            .map(|&y| p.vertex(y).to_vec())
            .collect();
        match positive_integer_combination(&sum, &gens) {
            Ok(Some(b)) => b,
            _ => return Err(MoriError::NonIntegralRelation(c.vertices.clone())),
        }
    };
    let mut class = vec![0i64; p.num_vertices()];
    for &x in &c.vertices {
        class[x] += 1;
    }
    for (&y, &b) in focus.vertices.iter().zip(&coefficients) {
        class[y] -= b;
    }
    let degree = c.len() as i64 - coefficients.iter().sum::<i64>();
    Ok(PrimitiveRelation {
        collection: c.clone(),
        focus,
        coefficients,
        degree,
        class,
    })
}

/// The relations of all primitive collections, in collection order.
pub fn primitive_relations(p: &Polytope) -> Result<Vec<PrimitiveRelation>, MoriError> {
    primitive_collections(p)?
        .iter()
        .map(|c| relation_unchecked(p, c))
        .collect()
}

/// Coordinates on `A_1 ⊗ Q`: a class (a vector on the vertices with
/// `Σ c_x·x = 0`) is determined by its entries off a basis of vertices.
struct CycleProjection {
    kept: Vec<usize>,
}

impl CycleProjection {
    fn new(p: &Polytope) -> Self {
        let mut basis: Vec<Vec<i64>> = Vec::new();
        let mut in_basis = vec![false; p.num_vertices()];
        for (i, v) in p.vertices().iter().enumerate() {
            basis.push(v.clone());
            if rank_of(&basis) == basis.len() {
                in_basis[i] = true;
            } else {
                basis.pop();
            }
        }
        Self {
            kept: (0..p.num_vertices()).filter(|&i| !in_basis[i]).collect(),
        }
    }

    fn project(&self, class: &[i64]) -> Vec<BigRational> {
        to_rational(&self.kept.iter().map(|&i| class[i]).collect::<Vec<_>>())
    }
}

fn positively_proportional(a: &[i64], b: &[i64]) -> bool {
    let Some(i) = b.iter().position(|&x| x != 0) else {
        return a.iter().all(|&x| x == 0);
    };
    if a[i] == 0 || (a[i] > 0) != (b[i] > 0) {
        return false;
    }
    a.iter()
        .zip(b)
        .all(|(&x, &y)| x as i128 * b[i] as i128 == y as i128 * a[i] as i128)
}

/// Whether the class of `r` spans an extremal ray of the cone generated by the
/// classes of `all`, which must be the complete relation list of `p`.
pub fn is_extremal(
    p: &Polytope,
    r: &PrimitiveRelation,
    all: &[PrimitiveRelation],
) -> Result<bool, MoriError> {
    if !all.iter().any(|x| x.collection == r.collection) {
        return Err(MoriError::IncompleteRelationList(
            r.collection.vertices.clone(),
        ));
    }
    let proj = CycleProjection::new(p);
    Ok(extremal_with(&proj, r, all))
}

fn extremal_with(proj: &CycleProjection, r: &PrimitiveRelation, all: &[PrimitiveRelation]) -> bool {
    let others: Vec<Vec<BigRational>> = all
        .iter()
        .filter(|x| !positively_proportional(&x.class, &r.class))
        .map(|x| proj.project(&x.class))
        .collect();
    !lp::cone_contains(&others, &proj.project(&r.class))
}

/// Extremality of every relation in `all` (the complete list for `p`).
pub fn extremality(p: &Polytope, all: &[PrimitiveRelation]) -> Vec<bool> {
    let proj = CycleProjection::new(p);
    all.iter().map(|r| extremal_with(&proj, r, all)).collect()
}

pub fn classify_contraction(r: &PrimitiveRelation) -> ContractionKind {
    match r.focus.vertices.len() {
        0 => ContractionKind::MoriFibration,
        1 => ContractionKind::Divisorial,
        _ => ContractionKind::Flipping,
    }
}

/// Whether every `k` vertices lie on a common proper face.
pub fn is_k_neighbourly(p: &Polytope, k: usize) -> bool {
    fn rec(p: &Polytope, start: usize, left: usize, mask: Mask) -> bool {
        if !p.mask_on_common_face(mask) {
            return false;
        }
        if left == 0 {
            return true;
        }
        (start..p.num_vertices()).all(|v| rec(p, v + 1, left - 1, mask | (1 << v)))
    }
    if k > p.num_vertices() {
        return true;
    }
    rec(p, 0, k, 0)
}
