//! Fibre-likeness, central symmetry, prime (free-sum) decomposition and
//! recognition of the named families.

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::constructions::{klyachko, simplex, t_del_pezzo};
use crate::lattice_core::{rank_of, saturated_row_basis, solve_rational, to_rational, IntMatrix};
use crate::polytope::{LatticeVector, Polytope};
use crate::symmetry::{lattice_isomorphism, symmetry_report};
use crate::toric::is_smooth;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibreLikeError {
    #[error("polytope is not smooth")]
    NotSmooth,
    #[error("matroid components do not split the lattice as a direct sum")]
    NotDirectSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FibreLikeVerdict {
    pub fibre_like: bool,
    pub t: usize,
    pub k: usize,
}

/// `t − k = 1`, with `t` the number of vertex orbits and `k` the dimension of
/// the invariant subspace.
pub fn is_fibre_like(p: &Polytope) -> Result<FibreLikeVerdict, FibreLikeError> {
    if !is_smooth(p) {
        return Err(FibreLikeError::NotSmooth);
    }
    let r = symmetry_report(p);
    Ok(FibreLikeVerdict {
        fibre_like: r.t == r.k + 1,
        t: r.t,
        k: r.k,
    })
}

pub fn is_centrally_symmetric(p: &Polytope) -> bool {
    p.vertices().iter().all(|v| {
        let w: LatticeVector = v.iter().map(|x| -x).collect();
        p.vertex_index(&w).is_some()
    })
}

/// One copy of a prime factor inside the input polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    /// indices of the input vertices belonging to this copy
    pub vertices: Vec<usize>,
    /// Z-basis (rows) of the saturated sublattice spanned by those vertices
    pub basis: Vec<Vec<i64>>,
}

#[derive(Debug, Clone)]
pub struct PrimeFactor {
    /// the factor in the coordinates of the first embedding's basis
    pub polytope: Polytope,
    pub multiplicity: usize,
    pub embeddings: Vec<Embedding>,
}

#[derive(Debug, Clone)]
pub struct PrimeDecomposition {
    pub factors: Vec<PrimeFactor>,
}

impl PrimeDecomposition {
    /// Each factor copy in order, as polytopes in their own lattices.
    pub fn copies(&self) -> impl Iterator<Item = &Polytope> {
        self.factors
            .iter()
            .flat_map(|f| std::iter::repeat_n(&f.polytope, f.multiplicity))
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Connected components of the linear matroid of the vertex vectors, via the
/// fundamental circuits of a greedy basis. Components are listed by their
/// smallest vertex index.
fn matroid_components(p: &Polytope) -> Vec<Vec<usize>> {
    let m = p.num_vertices();
    let mut basis: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut others = Vec::new();
    for i in 0..m {
        rows.push(p.vertex(i).to_vec());
        if rank_of(&rows) == rows.len() {
            basis.push(i);
        } else {
            rows.pop();
            others.push(i);
        }
    }
    let cols: Vec<_> = basis.iter().map(|&b| to_rational(p.vertex(b))).collect();
    let mut uf = UnionFind((0..m).collect());
    for v in others {
        let coeffs =
            solve_rational(&cols, &to_rational(p.vertex(v))).expect("basis spans every vertex");
        for (&b, c) in basis.iter().zip(&coeffs) {
            if !c.is_zero() {
                uf.union(v, b);
            }
        }
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut root_slot = vec![usize::MAX; m];
    for i in 0..m {
        let r = uf.find(i);
        if root_slot[r] == usize::MAX {
            root_slot[r] = comps.len();
            comps.push(Vec::new());
        }
        comps[root_slot[r]].push(i);
    }
    comps
}

/// Coordinates of a component's vertices in the HNF basis of its saturated span.
fn recoordinatize(p: &Polytope, comp: &[usize]) -> (Vec<Vec<i64>>, Vec<LatticeVector>) {
    let rows: Vec<&[i64]> = comp.iter().map(|&i| p.vertex(i)).collect();
    let basis = saturated_row_basis(&IntMatrix::from_rows(&rows))
        .to_i64_rows()
        .expect("saturated basis fits in i64");
    let cols: Vec<_> = basis.iter().map(|b| to_rational(b)).collect();
    let coords = comp
        .iter()
        .map(|&i| {
            solve_rational(&cols, &to_rational(p.vertex(i)))
                .expect("vertex lies in its span")
                .iter()
                .map(|c| {
                    assert!(c.is_integer(), "saturated basis gives integral coordinates");
                    c.to_integer().to_i64().expect("coordinate fits in i64")
                })
                .collect()
        })
        .collect();
    (basis, coords)
}

/// Splits `p` into irreducible free summands, grouping lattice-equivalent ones.
pub fn decompose_prime(p: &Polytope) -> Result<PrimeDecomposition, FibreLikeError> {
    let comps = matroid_components(p);
    let mut stacked: Vec<Vec<i64>> = Vec::with_capacity(p.dim());
    let mut pieces = Vec::with_capacity(comps.len());
    for comp in comps {
        let (basis, coords) = recoordinatize(p, &comp);
        stacked.extend(basis.iter().cloned());
        let q = Polytope::new(coords).map_err(|_| FibreLikeError::NotDirectSum)?;
        pieces.push((
            q,
            Embedding {
                vertices: comp,
                basis,
            },
        ));
    }
    if stacked.len() != p.dim()
        || IntMatrix::from_rows(&stacked)
            .determinant()
            .magnitude()
            .to_u64()
            != Some(1)
    {
        return Err(FibreLikeError::NotDirectSum);
    }
    let mut factors: Vec<PrimeFactor> = Vec::new();
    for (q, e) in pieces {
        let slot = factors.iter_mut().find(|f| {
            f.polytope.dim() == q.dim()
                && matches!(lattice_isomorphism(&f.polytope, &q), Ok(Some(_)))
        });
        match slot {
            Some(f) => {
                f.multiplicity += 1;
                f.embeddings.push(e);
            }
            None => factors.push(PrimeFactor {
                polytope: q,
                multiplicity: 1,
                embeddings: vec![e],
            }),
        }
    }
    factors.sort_by_key(|f| {
        (
            f.polytope.dim(),
            f.polytope.num_vertices(),
            f.embeddings[0].vertices[0],
        )
    });
    Ok(PrimeDecomposition { factors })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RecognizedFamily {
    Segment,
    ProjectiveSpace(usize),
    TDelPezzo(usize),
    Klyachko { k: usize, d: usize },
    Unknown { dim: usize, vertices: usize },
}

impl fmt::Display for RecognizedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Segment => write!(f, "P^1"),
            Self::ProjectiveSpace(n) => write!(f, "P^{n}"),
            Self::TDelPezzo(d) => write!(f, "V_{d}"),
            Self::Klyachko { k, d } => write!(f, "W_{d}^{k}"),
            Self::Unknown { dim, vertices } => write!(f, "?(dim {dim}, {vertices} vertices)"),
        }
    }
}

fn equivalent(p: &Polytope, q: &Polytope) -> bool {
    p.num_vertices() == q.num_vertices() && matches!(lattice_isomorphism(p, q), Ok(Some(_)))
}

/// Names a single (irreducible) polytope from the known families.
pub fn recognize_irreducible(p: &Polytope) -> RecognizedFamily {
    let (d, m) = (p.dim(), p.num_vertices());
    if m == d + 1 && equivalent(p, &simplex(d).expect("d ≥ 1")) {
        return if d == 1 {
            RecognizedFamily::Segment
        } else {
            RecognizedFamily::ProjectiveSpace(d)
        };
    }
    if d % 2 == 0 && m == 2 * d + 2 && equivalent(p, &t_del_pezzo(d).expect("even d ≥ 2")) {
        return RecognizedFamily::TDelPezzo(d);
    }
    for k in 2..=d + 1 {
        if d < 2 || d % (k - 1) != 0 || (k == 2 && d % 2 == 0) {
            continue;
        }
        if m == d + 1 + d / (k - 1) + (k - 1) && equivalent(p, &klyachko(k, d).expect("divisible"))
        {
            return RecognizedFamily::Klyachko { k, d };
        }
    }
    RecognizedFamily::Unknown {
        dim: d,
        vertices: m,
    }
}

/// Family of each distinct prime factor, in decomposition order. A polytope
/// whose components do not split the lattice is treated as one factor.
pub fn recognize(p: &Polytope) -> Vec<RecognizedFamily> {
    match decompose_prime(p) {
        Ok(dec) => dec
            .factors
            .iter()
            .map(|f| recognize_irreducible(&f.polytope))
            .collect(),
        Err(_) => vec![recognize_irreducible(p)],
    }
}

/// Product description such as `P^1 x P^2` or `(V_2)^3`.
pub fn describe(p: &Polytope) -> String {
    let parts: Vec<(RecognizedFamily, usize)> = match decompose_prime(p) {
        Ok(dec) => dec
            .factors
            .iter()
            .map(|f| (recognize_irreducible(&f.polytope), f.multiplicity))
            .collect(),
        Err(_) => vec![(recognize_irreducible(p), 1)],
    };
    parts
        .iter()
        .map(|(f, n)| {
            if *n == 1 {
                f.to_string()
            } else {
                format!("({f})^{n}")
            }
        })
        .collect::<Vec<_>>()
        .join(" x ")
}
