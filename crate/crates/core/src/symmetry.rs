//! Lattice automorphisms and lattice equivalence of polytopes.
//!
//! A lattice-linear map preserving a full-dimensional polytope is determined
//! by the images of `d` linearly independent vertices (the *base*). Both the
//! group computation and the equivalence test backtrack over base images,
//! pruned by invariants of the vertex–facet pairing matrix `⟨u_F, v⟩` (which
//! lattice maps preserve) and by linear consistency: once the first `l` base
//! images are fixed, every vertex in the span of those base vertices has a
//! determined image, which must again be a vertex.
//!
//! The full group is stored as a stabilizer chain along the base: level `j`
//! holds coset representatives for the stabilizer of the first `j` base
//! vertices modulo the stabilizer of the first `j + 1`. The group order is the
//! product of the level sizes and [`AutomorphismGroup::elements`] enumerates
//! every element exactly once.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::lattice_core::{inverse_unimodular, IntMatrix};
use crate::polytope::{LatticeVector, Mask, Polytope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

type Perm = Vec<usize>;

/// A unimodular matrix together with the vertex permutation it induces
/// (`permutation[i]` is the index of the image of vertex `i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeMap {
    pub matrix: Vec<Vec<i64>>,
    pub permutation: Vec<usize>,
}

impl LatticeMap {
    pub fn apply(&self, x: &[i64]) -> LatticeVector {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn determinant(&self) -> i64 {
        IntMatrix::from_rows(&self.matrix)
            .determinant()
            .to_i64()
            .expect("determinant fits in i64")
    }
}

#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    dim: usize,
    frame: Frame,
    generators: Vec<LatticeMap>,
    /// `transversals[j]` maps each orbit point (sorted) to a representative.
    transversals: Vec<Vec<(usize, Perm)>>,
    order: u64,
    orbits: Vec<Vec<usize>>,
    fixed_dim: usize,
    dual_fixed_dim: usize,
}

impl AutomorphismGroup {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// A generating set (empty for the trivial group).
    pub fn generators(&self) -> &[LatticeMap] {
        &self.generators
    }

    /// Orbits of the action on vertex indices, each sorted, ordered by their
    /// smallest element.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Dimension of the subspace of `N_Q` fixed by every element.
    pub fn fixed_dim(&self) -> usize {
        self.fixed_dim
    }

    /// Dimension of the subspace of `M_Q` fixed by the contragredient action.
    pub fn dual_fixed_dim(&self) -> usize {
        self.dual_fixed_dim
    }

    /// Base vertices of the stabilizer chain.
    pub fn base(&self) -> &[usize] {
        &self.frame.base
    }

    /// Sizes of the basic orbits along the base; their product is the order.
    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.transversals.iter().map(Vec::len).collect()
    }

    /// Every element exactly once, in a fixed order (identity first).
    pub fn elements(&self) -> impl Iterator<Item = LatticeMap> + '_ {
        let levels = self.transversals.len();
        let mut counter = vec![0usize; levels];
        let mut done = self.transversals.iter().any(Vec::is_empty);
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let m = self.frame.vertices.len();
            let mut perm: Perm = (0..m).collect();
            for j in (0..levels).rev() {
                let t = &self.transversals[j][counter[j]].1;
                perm = perm.iter().map(|&v| t[v]).collect();
            }
            // advance the odometer, deepest level fastest
            let mut j = levels;
            loop {
                if j == 0 {
                    done = true;
                    break;
                }
                j -= 1;
                counter[j] += 1;
                if counter[j] < self.transversals[j].len() {
                    break;
                }
                counter[j] = 0;
            }
            Some(self.frame.lattice_map(&self.frame.vertices, perm))
        })
    }
}

/// Symmetry data of a polytope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryReport {
    /// number of vertex orbits
    pub t: usize,
    /// dimension of the fixed subspace
    pub k: usize,
    pub vertex_transitive: bool,
}

pub fn symmetry_report(p: &Polytope) -> SymmetryReport {
    report_of(&automorphism_group(p))
}

pub fn report_of(g: &AutomorphismGroup) -> SymmetryReport {
    SymmetryReport {
        t: g.orbits().len(),
        k: g.fixed_dim(),
        vertex_transitive: g.orbits().len() == 1,
    }
}

fn hash_of<T: Hash>(x: &T) -> u64 {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    h.finish()
}

/// Pairing-matrix invariants of the vertices of one polytope.
#[derive(Debug, Clone)]
struct Signatures {
    vertices: Vec<LatticeVector>,
    lookup: HashMap<LatticeVector, usize>,
    vertex: Vec<u64>,
    /// row-major `m × m`
    pair: Vec<u64>,
}

impl Signatures {
    fn new(p: &Polytope) -> Self {
        let m = p.num_vertices();
        let pairing = p.pairing_matrix();
        let vertex = (0..m)
            .map(|v| {
                let mut col: Vec<i64> = pairing.iter().map(|row| row[v]).collect();
                col.sort_unstable();
                hash_of(&col)
            })
            .collect();
        let mut pair = vec![0u64; m * m];
        let mut buf: Vec<(i64, i64)> = Vec::with_capacity(pairing.len());
        for a in 0..m {
            for b in 0..m {
                buf.clear();
                buf.extend(pairing.iter().map(|row| (row[a], row[b])));
                buf.sort_unstable();
                pair[a * m + b] = hash_of(&buf);
            }
        }
        Self {
            vertices: p.vertices().to_vec(),
            lookup: p.vertices().iter().cloned().zip(0..).collect(),
            vertex,
            pair,
        }
    }

    fn m(&self) -> usize {
        self.vertices.len()
    }

    fn pair(&self, a: usize, b: usize) -> u64 {
        self.pair[a * self.m() + b]
    }
}

/// A vertex whose image is determined once a base prefix is mapped:
/// `vertex = Σ numerators[i] · base[i] / denominator`.
#[derive(Debug, Clone)]
struct Derived {
    vertex: usize,
    numerators: Vec<i64>,
    denominator: i64,
}

/// Base of a polytope plus what is needed to turn base images into matrices.
#[derive(Debug, Clone)]
struct Frame {
    dim: usize,
    vertices: Vec<LatticeVector>,
    base: Vec<usize>,
    /// `derived[l]`: non-base vertices first spanned at level `l`
    derived: Vec<Vec<Derived>>,
    /// `B⁻¹ = adjugate / det` for the base matrix `B` (base vertices as columns)
    adjugate: Vec<Vec<i128>>,
    det: i128,
}

/// Incremental row echelon form over the integers, for span membership.
#[derive(Clone, Default)]
struct Echelon {
    rows: Vec<(usize, Vec<i128>)>,
}

impl Echelon {
    fn reduce(&self, v: &[i64]) -> Vec<i128> {
        let mut x: Vec<i128> = v.iter().map(|&a| a as i128).collect();
        for (p, r) in &self.rows {
            if x[*p] != 0 {
                let (a, b) = (r[*p], x[*p]);
                for j in 0..x.len() {
                    x[j] = x[j] * a - r[j] * b;
                }
                let g = x.iter().fold(0i128, |g, &y| g.gcd(&y));
                if g > 1 {
                    x.iter_mut().for_each(|y| *y /= g);
                }
            }
        }
        x
    }

    fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    fn push(&mut self, v: &[i64]) -> bool {
        let x = self.reduce(v);
        match x.iter().position(|&a| a != 0) {
            Some(p) => {
                self.rows.push((p, x));
                true
            }
            None => false,
        }
    }
}

impl Frame {
    fn new(p: &Polytope) -> Self {
        let d = p.dim();
        let m = p.num_vertices();
        let verts = p.vertices();
        // greedy base: each step adds the vertex whose span captures most vertices
        let mut base: Vec<usize> = Vec::with_capacity(d);
        let mut ech = Echelon::default();
        while base.len() < d {
            let mut best: Option<(usize, usize)> = None;
            for v in 0..m {
                if ech.contains(&verts[v]) {
                    continue;
                }
                let mut trial = ech.clone();
                trial.push(&verts[v]);
                let captured = (0..m).filter(|&u| trial.contains(&verts[u])).count();
                if best.is_none_or(|(_, c)| captured > c) {
                    best = Some((v, captured));
                }
            }
            let (v, _) = best.expect("vertices span the lattice");
            ech.push(&verts[v]);
            base.push(v);
        }

        let base_cols = |upto: usize| -> Vec<Vec<num_rational::BigRational>> {
            base[..upto]
                .iter()
                .map(|&b| crate::lattice_core::to_rational(&verts[b]))
                .collect()
        };
        let mut derived: Vec<Vec<Derived>> = vec![Vec::new(); d];
        for u in 0..m {
            if base.contains(&u) {
                continue;
            }
            let target = crate::lattice_core::to_rational(&verts[u]);
            for l in 0..d {
                if let Some(c) = crate::lattice_core::solve_rational(&base_cols(l + 1), &target) {
                    let den = c
                        .iter()
                        .fold(num_bigint::BigInt::one(), |acc, q| acc.lcm(q.denom()));
                    let numerators = c
                        .iter()
                        .map(|q| {
                            (q.numer() * (&den / q.denom()))
                                .to_i64()
                                .expect("small coefficients")
                        })
                        .collect();
                    derived[l].push(Derived {
                        vertex: u,
                        numerators,
                        denominator: den.to_i64().expect("small denominator"),
                    });
                    break;
                }
            }
        }

        // adjugate of B via B⁻¹ computed exactly
        let b = IntMatrix::from_fn(d, d, |i, j| verts[base[j]][i].into());
        let det = b.determinant();
        let cols: Vec<Vec<num_rational::BigRational>> = (0..d)
            .map(|j| crate::lattice_core::to_rational(&verts[base[j]]))
            .collect();
        let mut adjugate = vec![vec![0i128; d]; d];
        for k in 0..d {
            // column k of B⁻¹ solves B·x = e_k
            let mut e = vec![0i64; d];
            e[k] = 1;
            let x =
                crate::lattice_core::solve_rational(&cols, &crate::lattice_core::to_rational(&e))
                    .expect("base is nonsingular");
            for i in 0..d {
                let val = &x[i] * num_rational::BigRational::from_integer(det.clone());
                adjugate[i][k] = val.to_integer().to_i128().expect("small adjugate");
            }
        }
        Self {
            dim: d,
            vertices: verts.to_vec(),
            base,
            derived,
            adjugate,
            det: det.to_i128().expect("small determinant"),
        }
    }

    /// Matrix sending each base vertex to the vertex `images[i]` of `target`,
    /// if it is integral and unimodular.
    fn matrix_for(&self, target: &[LatticeVector], images: &[usize]) -> Option<Vec<Vec<i64>>> {
        let d = self.dim;
        let mut m = vec![vec![0i64; d]; d];
        for r in 0..d {
            for c in 0..d {
                let num: i128 = (0..d)
                    .map(|i| target[images[i]][r] as i128 * self.adjugate[i][c])
                    .sum();
                if num % self.det != 0 {
                    return None;
                }
                m[r][c] = i64::try_from(num / self.det).ok()?;
            }
        }
        IntMatrix::from_rows(&m)
            .determinant()
            .abs()
            .is_one()
            .then_some(m)
    }

    fn lattice_map(&self, target: &[LatticeVector], permutation: Perm) -> LatticeMap {
        let images: Vec<usize> = self.base.iter().map(|&b| permutation[b]).collect();
        let matrix = self
            .matrix_for(target, &images)
            .expect("group element is unimodular");
        LatticeMap {
            matrix,
            permutation,
        }
    }
}

/// Backtracking search for lattice maps from a source polytope to a target.
struct Search<'a> {
    frame: &'a Frame,
    source: &'a Signatures,
    target: &'a Signatures,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    /// First map (in lexicographic order of base images) whose base images
    /// start with `forced`.
    fn find(&self, forced: &[usize]) -> Option<(Perm, Vec<Vec<i64>>)> {
        let m = self.source.m();
        let mut perm = vec![UNSET; m];
        self.descend(0, forced, &mut perm, 0)
    }

    fn descend(
        &self,
        level: usize,
        forced: &[usize],
        perm: &mut Perm,
        used: Mask,
    ) -> Option<(Perm, Vec<Vec<i64>>)> {
        let frame = self.frame;
        if level == frame.dim {
            let images: Vec<usize> = frame.base.iter().map(|&b| perm[b]).collect();
            let matrix = frame.matrix_for(&self.target.vertices, &images)?;
            return Some((perm.clone(), matrix));
        }
        let b = frame.base[level];
        let candidates: Vec<usize> = match forced.get(level) {
            Some(&w) => vec![w],
            None => (0..self.target.m()).collect(),
        };
        for w in candidates {
            if used & (1 << w) != 0 || self.target.vertex[w] != self.source.vertex[b] {
                continue;
            }
            let pairs_ok = frame.base[..level]
                .iter()
                .all(|&a| self.target.pair(perm[a], w) == self.source.pair(a, b));
            if !pairs_ok {
                continue;
            }
            perm[b] = w;
            let mut new_used = used | (1 << w);
            let mut assigned = vec![b];
            let mut consistent = true;
            for der in &frame.derived[level] {
                match self.image_of(der, perm) {
                    Some(img)
                        if new_used & (1 << img) == 0
                            && self.target.vertex[img] == self.source.vertex[der.vertex] =>
                    {
                        perm[der.vertex] = img;
                        new_used |= 1 << img;
                        assigned.push(der.vertex);
                    }
                    _ => {
                        consistent = false;
                        break;
                    }
                }
            }
            if consistent {
                if let Some(found) = self.descend(level + 1, forced, perm, new_used) {
                    return Some(found);
                }
            }
            for v in assigned {
                perm[v] = UNSET;
            }
        }
        None
    }

    fn image_of(&self, der: &Derived, perm: &Perm) -> Option<usize> {
        let d = self.frame.dim;
        let mut acc = vec![0i128; d];
        for (i, &c) in der.numerators.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let w = &self.target.vertices[perm[self.frame.base[i]]];
            for r in 0..d {
                acc[r] += c as i128 * w[r] as i128;
            }
        }
        let den = der.denominator as i128;
        let mut img = Vec::with_capacity(d);
        for x in acc {
            if x % den != 0 {
                return None;
            }
            img.push(i64::try_from(x / den).ok()?);
        }
        self.target.lookup.get(&img).copied()
    }
}

fn orbit_tree(generators: &[Perm], root: usize, m: usize) -> Vec<(usize, Perm)> {
    let identity: Perm = (0..m).collect();
    let mut reps: Vec<Option<Perm>> = vec![None; m];
    reps[root] = Some(identity);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g[x];
            if reps[y].is_none() {
                // g ∘ rep(x) sends root to y
                let rx = reps[x].as_ref().unwrap();
                reps[y] = Some(rx.iter().map(|&v| g[v]).collect());
                queue.push_back(y);
            }
        }
    }
    reps.into_iter()
        .enumerate()
        .filter_map(|(i, r)| r.map(|r| (i, r)))
        .collect()
}

fn fixed_dimension(dim: usize, matrices: &[IntMatrix]) -> usize {
    if matrices.is_empty() {
        return dim;
    }
    let id = IntMatrix::identity(dim);
    let mut rows: Vec<Vec<num_bigint::BigInt>> = Vec::new();
    for g in matrices {
        for i in 0..dim {
            rows.push((0..dim).map(|j| g.get(i, j) - id.get(i, j)).collect());
        }
    }
    let stacked = IntMatrix::from_fn(rows.len(), dim, |i, j| rows[i][j].clone());
    dim - stacked.rank()
}

/// The full group of lattice-linear maps preserving `p`.
pub fn automorphism_group(p: &Polytope) -> AutomorphismGroup {
    let frame = Frame::new(p);
    let sig = Signatures::new(p);
    let search = Search {
        frame: &frame,
        source: &sig,
        target: &sig,
    };
    let d = p.dim();
    let m = p.num_vertices();
    let mut gens: Vec<(Perm, Vec<Vec<i64>>)> = Vec::new();
    let mut transversals: Vec<Vec<(usize, Perm)>> = vec![Vec::new(); d];
    for j in (0..d).rev() {
        let b = frame.base[j];
        let perms: Vec<Perm> = gens.iter().map(|(g, _)| g.clone()).collect();
        let mut orbit = orbit_tree(&perms, b, m);
        let mut forced: Vec<usize> = frame.base[..j].to_vec();
        forced.push(UNSET);
        for w in 0..m {
            if orbit.iter().any(|(x, _)| *x == w) || sig.vertex[w] != sig.vertex[b] {
                continue;
            }
            forced[j] = w;
            if let Some(found) = search.find(&forced) {
                gens.push(found);
                let perms: Vec<Perm> = gens.iter().map(|(g, _)| g.clone()).collect();
                orbit = orbit_tree(&perms, b, m);
            }
        }
        transversals[j] = orbit;
    }

    let order = transversals.iter().map(|t| t.len() as u64).product();

    // vertex orbits under all generators
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for (g, _) in &gens {
        for (v, &w) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbit_map: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..m {
        let r = find(&mut parent, v);
        orbit_map.entry(r).or_default().push(v);
    }
    let orbits: Vec<Vec<usize>> = orbit_map.into_values().collect();

    let matrices: Vec<IntMatrix> = gens
        .iter()
        .map(|(_, mat)| IntMatrix::from_rows(mat))
        .collect();
    let fixed_dim = fixed_dimension(d, &matrices);
    let duals: Vec<IntMatrix> = matrices
        .iter()
        .map(|g| {
            inverse_unimodular(g)
                .expect("automorphisms are unimodular")
                .transpose()
        })
        .collect();
    let dual_fixed_dim = fixed_dimension(d, &duals);

    let generators = gens
        .into_iter()
        .map(|(permutation, matrix)| LatticeMap {
            matrix,
            permutation,
        })
        .collect();
    AutomorphismGroup {
        dim: d,
        frame,
        generators,
        transversals,
        order,
        orbits,
        fixed_dim,
        dual_fixed_dim,
    }
}

/// A unimodular map carrying the vertices of `p` onto those of `q`, if any.
pub fn lattice_isomorphism(
    p: &Polytope,
    q: &Polytope,
) -> Result<Option<LatticeMap>, SymmetryError> {
    if p.dim() != q.dim() {
        return Err(SymmetryError::DimensionMismatch(p.dim(), q.dim()));
    }
    if p.num_vertices() != q.num_vertices() || p.facets().len() != q.facets().len() {
        return Ok(None);
    }
    let (sp, sq) = (Signatures::new(p), Signatures::new(q));
    let mut a = sp.vertex.clone();
    let mut b = sq.vertex.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(None);
    }
    let frame = Frame::new(p);
    let search = Search {
        frame: &frame,
        source: &sp,
        target: &sq,
    };
    Ok(search.find(&[]).map(|(permutation, matrix)| LatticeMap {
        matrix,
        permutation,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{free_sum, klyachko, power, simplex, t_del_pezzo};

    /// Counts vertex permutations realized by a unimodular map, trying all m!
    /// permutations and solving for the map on a basis of vertices.
    fn brute_force_order(p: &Polytope) -> usize {
        use crate::lattice_core::{rank_of, solve_rational, to_rational};
        use num_rational::BigRational;
        let d = p.dim();
        let m = p.num_vertices();
        let mut basis: Vec<usize> = Vec::new();
        for v in 0..m {
            let mut trial: Vec<Vec<i64>> = basis.iter().map(|&b| p.vertex(b).to_vec()).collect();
            trial.push(p.vertex(v).to_vec());
            if rank_of(&trial) == trial.len() {
                basis.push(v);
            }
        }
        let columns: Vec<Vec<BigRational>> = (0..d)
            .map(|k| to_rational(&basis.iter().map(|&b| p.vertex(b)[k]).collect::<Vec<_>>()))
            .collect();
        let mut count = 0;
        let mut perm: Vec<usize> = (0..m).collect();
        fn each(perm: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
            if k == perm.len() {
                return f(perm);
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                each(perm, k + 1, f);
                perm.swap(k, i);
            }
        }
        each(&mut perm, 0, &mut |perm| {
            let mut rows = Vec::new();
            for r in 0..d {
                let target: Vec<i64> = basis.iter().map(|&b| p.vertex(perm[b])[r]).collect();
                let x = solve_rational(&columns, &to_rational(&target)).unwrap();
                if !x.iter().all(|q| q.is_integer()) {
                    return;
                }
                rows.push(
                    x.iter()
                        .map(|q| q.to_integer().try_into().unwrap())
                        .collect::<Vec<i64>>(),
                );
            }
            if IntMatrix::from_rows(&rows).determinant().abs() != num_bigint::BigInt::from(1) {
                return;
            }
            let ok = (0..m).all(|v| {
                let img: Vec<i64> = rows
                    .iter()
                    .map(|row| row.iter().zip(p.vertex(v)).map(|(a, b)| a * b).sum())
                    .collect();
                img == p.vertex(perm[v])
            });
            if ok {
                count += 1;
            }
        });
        count
    }

    fn dp8() -> Polytope {
        Polytope::new(vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![-1, -1]]).unwrap()
    }

    fn check_group(p: &Polytope, g: &AutomorphismGroup) {
        let elements: Vec<LatticeMap> = g.elements().collect();
        assert_eq!(elements.len() as u64, g.order());
        assert!(elements[0].is_identity());
        let distinct: std::collections::HashSet<_> =
            elements.iter().map(|e| e.permutation.clone()).collect();
        assert_eq!(distinct.len(), elements.len());
        for e in &elements {
            assert_eq!(e.determinant().abs(), 1);
            for v in 0..p.num_vertices() {
                assert_eq!(e.apply(p.vertex(v)), p.vertex(e.permutation[v]));
            }
        }
        // closed under composition
        for a in elements.iter().take(8) {
            for b in elements.iter().take(8) {
                let c: Perm = b.permutation.iter().map(|&v| a.permutation[v]).collect();
                assert!(distinct.contains(&c));
            }
        }
    }

    #[test]
    fn small_group_orders_match_brute_force() {
        let square = power(&simplex(1).unwrap(), 2).unwrap();
        for (p, order) in [
            (simplex(2).unwrap(), 6),
            (square, 8),
            (t_del_pezzo(2).unwrap(), 12),
            (dp8(), 2),
        ] {
            let g = automorphism_group(&p);
            assert_eq!(g.order(), order);
            assert_eq!(brute_force_order(&p) as u64, order);
            check_group(&p, &g);
        }
    }

    #[test]
    fn reports() {
        assert_eq!(
            symmetry_report(&simplex(2).unwrap()),
            SymmetryReport {
                t: 1,
                k: 0,
                vertex_transitive: true
            }
        );
        let p1p2 = free_sum(&simplex(1).unwrap(), &simplex(2).unwrap());
        assert_eq!(
            symmetry_report(&p1p2),
            SymmetryReport {
                t: 2,
                k: 0,
                vertex_transitive: false
            }
        );
        assert_eq!(
            symmetry_report(&dp8()),
            SymmetryReport {
                t: 3,
                k: 1,
                vertex_transitive: false
            }
        );
    }

    #[test]
    fn large_group_orders() {
        // hyperoctahedral group of (P¹)⁴ and S_{d+1} × Z/2 for V_4
        let g = automorphism_group(&power(&simplex(1).unwrap(), 4).unwrap());
        assert_eq!(g.order(), 16 * 24);
        let g = automorphism_group(&t_del_pezzo(4).unwrap());
        assert_eq!(g.order(), 2 * 120);
        assert_eq!(g.orbits().len(), 1);
    }

    #[test]
    fn fixed_dims_agree_with_dual() {
        for p in [dp8(), simplex(3).unwrap(), klyachko(3, 4).unwrap()] {
            let g = automorphism_group(&p);
            assert_eq!(g.fixed_dim(), g.dual_fixed_dim());
        }
    }

    #[test]
    fn isomorphisms() {
        let p = klyachko(3, 6).unwrap();
        let id = lattice_isomorphism(&p, &p).unwrap().unwrap();
        assert!(id.is_identity());
        let q = klyachko(4, 6).unwrap();
        let map = lattice_isomorphism(&q, &p).unwrap().unwrap();
        for v in 0..q.num_vertices() {
            assert_eq!(map.apply(q.vertex(v)), p.vertex(map.permutation[v]));
        }
        let square = power(&simplex(1).unwrap(), 2).unwrap();
        assert_eq!(
            lattice_isomorphism(&square, &simplex(2).unwrap()).unwrap(),
            None
        );
        assert_eq!(
            lattice_isomorphism(&square, &simplex(3).unwrap()),
            Err(SymmetryError::DimensionMismatch(2, 3))
        );
        // same combinatorics, different lattice: the square and conv{±(1,1), ±(1,−1)}
        let big = Polytope::new(vec![vec![1, 1], vec![-1, -1], vec![1, -1], vec![-1, 1]]).unwrap();
        assert_eq!(lattice_isomorphism(&square, &big).unwrap(), None);
    }
}
