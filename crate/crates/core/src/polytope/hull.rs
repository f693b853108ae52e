//! Facet enumeration by the double-description method.
//!
//! A facet `⟨u, x⟩ ≤ b` is an extreme ray `(b, u)` of the cone of valid
//! inequalities `{(b, u) : b − ⟨u, p⟩ ≥ 0 for every input point p}`. The rays
//! are found by inserting one point constraint at a time, with the
//! combinatorial adjacency test on zero sets. All arithmetic is exact.

use super::PolytopeError;
use crate::lattice_core::gcd_of;

pub(crate) type Mask = u128;
pub(crate) const MAX_POINTS: usize = 128;

#[derive(Clone, Debug)]
pub(crate) struct RawFacet {
    pub normal: Vec<i64>,
    pub level: i64,
    pub zero_set: Mask,
}

#[derive(Clone)]
struct Ray {
    coords: Vec<i64>,
    zeros: Mask,
}

fn normalize(v: &mut [i64]) {
    let g = gcd_of(v);
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

fn dot(a: &[i64], b: &[i64]) -> Result<i64, PolytopeError> {
    let mut acc: i64 = 0;
    for (x, y) in a.iter().zip(b) {
        let p = x.checked_mul(*y).ok_or(PolytopeError::Overflow)?;
        acc = acc.checked_add(p).ok_or(PolytopeError::Overflow)?;
    }
    Ok(acc)
}

/// Constraint row `(1, −p)` so that `row · (b, u) = b − ⟨u, p⟩`.
fn constraint_row(p: &[i64]) -> Vec<i64> {
    std::iter::once(1).chain(p.iter().map(|&x| -x)).collect()
}

/// Indices of a maximal linearly independent prefix-greedy subset of `rows`.
fn independent_rows(rows: &[Vec<i64>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<i128>> = Vec::new();
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots: Vec<usize> = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut v: Vec<i128> = row.iter().map(|&x| x as i128).collect();
        for (b, &p) in basis.iter().zip(&pivots) {
            if v[p] != 0 {
                let (bp, vp) = (b[p], v[p]);
                for j in 0..width {
                    v[j] = v[j] * bp - b[j] * vp;
                }
                let g = v.iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
                if g > 1 {
                    v.iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        if let Some(p) = v.iter().position(|&x| x != 0) {
            chosen.push(idx);
            basis.push(v);
            pivots.push(p);
            if chosen.len() == width {
                break;
            }
        }
    }
    chosen
}

/// Adjugate-based inverse columns of a nonsingular square integer matrix,
/// returned as integer rays with `rows[i] · ray_j` = `δ_ij · c_j`, `c_j > 0`.
fn initial_rays(rows: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, PolytopeError> {
    let n = rows.len();
    // Solve rows · x = e_j via fraction-free Gauss–Jordan on [A | I] in i128.
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<i128> = r.iter().map(|&x| x as i128).collect();
            row.extend((0..n).map(|j| i128::from(i == j)));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| m[i][c] != 0)
            .ok_or(PolytopeError::NotFullDimensional)?;
        m.swap(p, c);
        for i in 0..n {
            if i != c && m[i][c] != 0 {
                let (a, b) = (m[c][c], m[i][c]);
                for j in 0..2 * n {
                    m[i][j] = m[i][j] * a - m[c][j] * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
    }
    // Row i now reads m[i][i] * x_i = (right block) for each unit target, so
    // column j of the inverse is (m[i][n + j] / m[i][i])_i.
    let mut rays = Vec::with_capacity(n);
    for j in 0..n {
        let denom = (0..n).fold(1i128, |l, i| num_integer::lcm(l, m[i][i].abs()));
        let mut ray: Vec<i64> = Vec::with_capacity(n);
        for i in 0..n {
            let v = m[i][n + j] * (denom / m[i][i]);
            ray.push(i64::try_from(v).map_err(|_| PolytopeError::Overflow)?);
        }
        normalize(&mut ray);
        // orient so that rows[j] · ray > 0
        if dot(&rows[j], &ray)? < 0 {
            ray.iter_mut().for_each(|x| *x = -*x);
        }
        rays.push(ray);
    }
    Ok(rays)
}

/// Computes all facets of `conv(points)`. Points must be full-dimensional;
/// the caller checks interiority of the origin and redundancy.
pub(crate) fn facets_of(points: &[Vec<i64>], dim: usize) -> Result<Vec<RawFacet>, PolytopeError> {
    if points.len() > MAX_POINTS {
        return Err(PolytopeError::TooManyPoints(points.len()));
    }
    let rows: Vec<Vec<i64>> = points.iter().map(|p| constraint_row(p)).collect();
    let width = dim + 1;
    let init = independent_rows(&rows);
    if init.len() < width {
        return Err(PolytopeError::NotFullDimensional);
    }
    let init_rows: Vec<Vec<i64>> = init.iter().map(|&i| rows[i].clone()).collect();
    let init_mask: Mask = init.iter().fold(0, |m, &i| m | (1 << i));
    let mut rays: Vec<Ray> = initial_rays(&init_rows)?
        .into_iter()
        .enumerate()
        .map(|(j, coords)| Ray {
            coords,
            zeros: init_mask & !(1 << init[j]),
        })
        .collect();

    for (idx, row) in rows.iter().enumerate() {
        if init_mask & (1 << idx) != 0 {
            continue;
        }
        let bit: Mask = 1 << idx;
        let values: Vec<i64> = rays
            .iter()
            .map(|r| dot(row, &r.coords))
            .collect::<Result<_, _>>()?;
        let negatives: Vec<usize> = (0..rays.len()).filter(|&i| values[i] < 0).collect();
        if negatives.is_empty() {
            for (r, &v) in rays.iter_mut().zip(&values) {
                if v == 0 {
                    r.zeros |= bit;
                }
            }
            continue;
        }
        let positives: Vec<usize> = (0..rays.len()).filter(|&i| values[i] > 0).collect();
        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &positives {
            for &n in &negatives {
                let common = rays[p].zeros & rays[n].zeros;
                if (common.count_ones() as usize) + 2 < width {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == n || r.zeros & common != common);
                if !adjacent {
                    continue;
                }
                let (vp, vn) = (values[p], -values[n]);
                let mut coords = Vec::with_capacity(width);
                for (a, b) in rays[p].coords.iter().zip(&rays[n].coords) {
                    let x = vn
                        .checked_mul(*a)
                        .and_then(|x| vp.checked_mul(*b).and_then(|y| x.checked_add(y)))
                        .ok_or(PolytopeError::Overflow)?;
                    coords.push(x);
                }
                normalize(&mut coords);
                fresh.push(Ray {
                    coords,
                    zeros: common | bit,
                });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (mut r, &v) in rays.into_iter().zip(&values) {
            if v > 0 {
                next.push(r);
            } else if v == 0 {
                r.zeros |= bit;
                next.push(r);
            }
        }
        next.extend(fresh);
        rays = next;
    }

    let mut facets = Vec::with_capacity(rays.len());
    for r in rays {
        let level = r.coords[0];
        let mut normal = r.coords[1..].to_vec();
        let g = gcd_of(&normal);
        if g == 0 {
            // the trivial inequality 0 ≤ b survives only for degenerate input
            return Err(PolytopeError::NotFullDimensional);
        }
        normal.iter_mut().for_each(|x| *x /= g);
        facets.push(RawFacet {
            normal,
            level: level / g,
            zero_set: r.zeros,
        });
    }
    Ok(facets)
}
