//! Toric predicates of a Fano polytope, read off the face fan over its proper
//! faces: smoothness, reflexivity, terminality, Picard rank and Fano index.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::lattice_core::{snf_decompose, IntMatrix};
use crate::polytope::Polytope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("polytope is not simplicial")]
    NotSimplicial,
    #[error("polytope is not smooth")]
    NotSmooth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FanoFlags {
    pub smooth: bool,
    pub reflexive: bool,
    pub terminal: bool,
    pub simplicial: bool,
    pub picard_rank: Option<usize>,
    pub index: Option<u64>,
}

/// Every facet is a `d`-simplex whose vertices form a lattice basis.
pub fn is_smooth(p: &Polytope) -> bool {
    p.facets().iter().all(|f| {
        f.vertices.len() == p.dim() && {
            let rows: Vec<&[i64]> = f.vertices.iter().map(|&i| p.vertex(i)).collect();
            IntMatrix::from_rows(&rows).determinant().abs().is_one()
        }
    })
}

pub fn is_reflexive(p: &Polytope) -> bool {
    p.facets().iter().all(|f| f.level == 1)
}

/// The only lattice points are the vertices and the origin.
pub fn is_terminal(p: &Polytope) -> bool {
    let points = p.lattice_points();
    points.len() == p.num_vertices() + 1
        && points
            .iter()
            .all(|x| x.iter().all(|&c| c == 0) || p.vertex_index(x).is_some())
}

/// `m − d`, the rank of the group of 1-cycles.
pub fn picard_rank(p: &Polytope) -> Result<usize, ToricError> {
    if !p.is_simplicial() {
        return Err(ToricError::NotSimplicial);
    }
    Ok(p.num_vertices() - p.dim())
}

/// Largest `i` dividing the anticanonical class, the image of the all-ones
/// vector in `coker(M → Z^V)`.
pub fn fano_index(p: &Polytope) -> Result<u64, ToricError> {
    if !is_smooth(p) {
        return Err(ToricError::NotSmooth);
    }
    let a = IntMatrix::from_rows(p.vertices());
    let snf = snf_decompose(&a);
    let rank = snf.rank();
    debug_assert!(snf.invariant_factors().iter().all(One::is_one));
    let ones = vec![BigInt::one(); p.num_vertices()];
    let class = snf.u.mul_vec(&ones);
    let g = class[rank..].iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    Ok(g.to_u64().expect("index fits in u64"))
}

pub fn fano_flags(p: &Polytope) -> FanoFlags {
    let smooth = is_smooth(p);
    FanoFlags {
        smooth,
        reflexive: is_reflexive(p),
        terminal: is_terminal(p),
        simplicial: p.is_simplicial(),
        picard_rank: picard_rank(p).ok(),
        index: fano_index(p).ok(),
    }
}
