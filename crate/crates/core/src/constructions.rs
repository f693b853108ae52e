//! Named polytope families: projective spaces, t-del Pezzo and Klyachko
//! polytopes, free sums and powers.

use thiserror::Error;

use crate::polytope::{LatticeVector, Polytope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("dimension must be at least {min}, got {got}")]
    DimensionTooSmall { min: usize, got: usize },
    #[error("t-del Pezzo polytopes need an even dimension, got {0}")]
    OddDimension(usize),
    #[error("order k = {k} needs k - 1 to divide d = {d}")]
    DivisibilityViolated { k: usize, d: usize },
    #[error("linear form index {index} outside 1..={d}")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("power exponent must be at least 1")]
    ZeroPower,
}

fn unit(d: usize, i: usize) -> LatticeVector {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

fn neg(v: &[i64]) -> LatticeVector {
    v.iter().map(|x| -x).collect()
}

fn build(vertices: Vec<LatticeVector>) -> Polytope {
    Polytope::new(vertices).expect("family vertex sets are valid polytopes")
}

/// `conv{e_1, …, e_n, −(e_1 + … + e_n)}`, the polytope of `P^n`.
pub fn simplex(n: usize) -> Result<Polytope, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::DimensionTooSmall { min: 1, got: n });
    }
    let mut v: Vec<LatticeVector> = (0..n).map(|i| unit(n, i)).collect();
    v.push(vec![-1; n]);
    Ok(build(v))
}

/// `conv{±e_1, …, ±e_d, ±(e_1 + … + e_d)}` for even `d`.
pub fn t_del_pezzo(d: usize) -> Result<Polytope, ConstructionError> {
    if d < 2 {
        return Err(ConstructionError::DimensionTooSmall { min: 2, got: d });
    }
    if !d.is_multiple_of(2) {
        return Err(ConstructionError::OddDimension(d));
    }
    let mut v = Vec::with_capacity(2 * d + 2);
    for i in 0..d {
        v.push(unit(d, i));
        v.push(neg(&unit(d, i)));
    }
    v.push(vec![1; d]);
    v.push(vec![-1; d]);
    Ok(build(v))
}

/// Vertex list of the Klyachko polytope of order `k` in dimension `d`, in
/// construction order: the basis vectors, their sum, the negated consecutive
/// blocks of length `k − 1`, then the negated strided sums with stride `k − 1`.
pub fn klyachko_vertices(k: usize, d: usize) -> Result<Vec<LatticeVector>, ConstructionError> {
    if d < 2 {
        return Err(ConstructionError::DimensionTooSmall { min: 2, got: d });
    }
    if k < 2 || !d.is_multiple_of(k - 1) {
        return Err(ConstructionError::DivisibilityViolated { k, d });
    }
    let step = k - 1;
    let blocks = d / step;
    let mut v: Vec<LatticeVector> = (0..d).map(|i| unit(d, i)).collect();
    v.push(vec![1; d]);
    for j in 0..blocks {
        let mut w = vec![0; d];
        w[j * step..(j + 1) * step].iter_mut().for_each(|x| *x = -1);
        v.push(w);
    }
    for j in 0..step {
        let mut w = vec![0; d];
        (j..d).step_by(step).for_each(|i| w[i] = -1);
        v.push(w);
    }
    Ok(v)
}

pub fn klyachko(k: usize, d: usize) -> Result<Polytope, ConstructionError> {
    Ok(build(klyachko_vertices(k, d)?))
}

/// Integer covector on `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub coefficients: Vec<i64>,
}

impl LinearForm {
    pub fn evaluate(&self, x: &[i64]) -> i64 {
        assert_eq!(x.len(), self.coefficients.len());
        self.coefficients.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// `L_{k,h} = Σ_{i=0}^{k−3} (x_{h+ik} + … + x_{h+ik+k−2} − (k−1)·x_{h+ik+k−1})`,
/// with 1-based coordinate indices.
pub fn klyachko_facet_form(k: usize, h: usize, d: usize) -> Result<LinearForm, ConstructionError> {
    if h < 1 {
        return Err(ConstructionError::IndexOutOfRange { index: h, d });
    }
    let mut c = vec![0i64; d];
    for i in 0..k.saturating_sub(2) {
        let start = h + i * k;
        for idx in start..=start + k - 1 {
            if idx > d {
                return Err(ConstructionError::IndexOutOfRange { index: idx, d });
            }
            c[idx - 1] += if idx == start + k - 1 {
                -(k as i64 - 1)
            } else {
                1
            };
        }
    }
    Ok(LinearForm { coefficients: c })
}

/// `conv(V(P) × {0} ∪ {0} × V(Q))`.
pub fn free_sum(p: &Polytope, q: &Polytope) -> Polytope {
    let (dp, dq) = (p.dim(), q.dim());
    let mut v: Vec<LatticeVector> = Vec::with_capacity(p.num_vertices() + q.num_vertices());
    for x in p.vertices() {
        let mut w = x.clone();
        w.resize(dp + dq, 0);
        v.push(w);
    }
    for y in q.vertices() {
        let mut w = vec![0; dp];
        w.extend_from_slice(y);
        v.push(w);
    }
    build(v)
}

pub fn power(p: &Polytope, n: usize) -> Result<Polytope, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::ZeroPower);
    }
    let mut acc = p.clone();
    for _ in 1..n {
        acc = free_sum(&acc, p);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_counts() {
        assert_eq!(simplex(1).unwrap().vertices(), &[vec![-1], vec![1]]);
        assert_eq!(simplex(2).unwrap().num_vertices(), 3);
        assert_eq!(simplex(8).unwrap().num_vertices(), 9);
        assert!(simplex(0).is_err());
    }

    #[test]
    fn del_pezzo_counts() {
        assert_eq!(t_del_pezzo(2).unwrap().num_vertices(), 6);
        assert_eq!(t_del_pezzo(4).unwrap().num_vertices(), 10);
        assert_eq!(t_del_pezzo(8).unwrap().num_vertices(), 18);
        assert_eq!(t_del_pezzo(3), Err(ConstructionError::OddDimension(3)));
    }

    #[test]
    fn klyachko_counts() {
        assert_eq!(klyachko(3, 6).unwrap().num_vertices(), 12);
        assert_eq!(klyachko(3, 8).unwrap().num_vertices(), 15);
        assert_eq!(klyachko(2, 4).unwrap().num_vertices(), 10);
        assert_eq!(
            klyachko(3, 5),
            Err(ConstructionError::DivisibilityViolated { k: 3, d: 5 })
        );
    }

    #[test]
    fn klyachko_layout_matches_display() {
        // (k, d) = (3, 6): blocks (1,2), (3,4), (5,6); strides 1,3,5 and 2,4,6
        let v = klyachko_vertices(3, 6).unwrap();
        assert_eq!(v[6], vec![1; 6]);
        assert_eq!(v[7], vec![-1, -1, 0, 0, 0, 0]);
        assert_eq!(v[9], vec![0, 0, 0, 0, -1, -1]);
        assert_eq!(v[10], vec![-1, 0, -1, 0, -1, 0]);
        assert_eq!(v[11], vec![0, -1, 0, -1, 0, -1]);
        // k = 2 reproduces the t-del Pezzo vertex set
        let mut w = klyachko_vertices(2, 4).unwrap();
        w.sort();
        assert_eq!(w, t_del_pezzo(4).unwrap().vertices());
    }

    #[test]
    fn facet_form_expansion() {
        // k = 3, h = 1: the single i = 0 term is x1 + x2 − 2·x3
        let l = klyachko_facet_form(3, 1, 4).unwrap();
        assert_eq!(l.coefficients, vec![1, 1, -2, 0]);
        assert_eq!(l.evaluate(&[0, 0, 0, 0]), 0);
        assert!(klyachko_facet_form(3, 3, 4).is_err());
        assert_eq!(
            klyachko_facet_form(2, 1, 3).unwrap().coefficients,
            vec![0, 0, 0]
        );
    }

    #[test]
    fn facet_form_supports_large_facet() {
        // {L_{3,1} + x_4 = 1} supports a facet of Δ^3_4 with k(k − 1) = 6 vertices
        let p = klyachko(3, 4).unwrap();
        let mut form = klyachko_facet_form(3, 1, 4).unwrap().coefficients;
        form[3] += 1;
        let facet = p
            .facets()
            .iter()
            .find(|f| f.normal == form)
            .expect("facet present");
        assert_eq!(facet.level, 1);
        assert_eq!(facet.vertices.len(), 6);
    }

    #[test]
    fn free_sums_and_powers() {
        let seg = simplex(1).unwrap();
        let sq = free_sum(&seg, &seg);
        assert_eq!(
            sq.vertices(),
            &[vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0]]
        );
        assert_eq!(power(&seg, 8).unwrap().num_vertices(), 16);
        assert_eq!(
            power(&t_del_pezzo(2).unwrap(), 4).unwrap().num_vertices(),
            24
        );
        assert_eq!(power(&seg, 0), Err(ConstructionError::ZeroPower));
    }
}
