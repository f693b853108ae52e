//! Exact rational cone membership by phase-one simplex with Bland's rule.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Whether `target` is a nonnegative combination of `generators`.
pub fn cone_contains(generators: &[Vec<BigRational>], target: &[BigRational]) -> bool {
    let rows = target.len();
    let n = generators.len();
    if target.iter().all(Zero::is_zero) {
        return true;
    }
    if n == 0 {
        return false;
    }
    let width = n + rows + 1;
    let rhs = width - 1;
    // [A | I | b] with b ≥ 0
    let mut t: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let flip = target[i].is_negative();
            let mut row = Vec::with_capacity(width);
            for g in generators {
                row.push(if flip { -g[i].clone() } else { g[i].clone() });
            }
            for k in 0..rows {
                row.push(if k == i {
                    BigRational::from_integer(1.into())
                } else {
                    BigRational::zero()
                });
            }
            row.push(target[i].abs());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + rows).collect();
    // reduced costs of "minimize the sum of artificials"
    let mut cost: Vec<BigRational> = (0..width)
        .map(|j| {
            if (n..n + rows).contains(&j) {
                BigRational::zero()
            } else {
                -t.iter().map(|row| row[j].clone()).sum::<BigRational>()
            }
        })
        .collect();

    loop {
        let Some(enter) = (0..rhs).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..rows {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // phase one is bounded below by zero, so a pivot row always exists
        let (r, _) = leave.expect("phase-one objective is bounded");
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, p) in cost.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        basis[r] = enter;
    }
    cost[rhs].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<BigRational> {
        crate::lattice_core::to_rational(v)
    }

    #[test]
    fn membership() {
        let gens = vec![q(&[1, 0]), q(&[0, 1])];
        assert!(cone_contains(&gens, &q(&[2, 3])));
        assert!(!cone_contains(&gens, &q(&[-1, 3])));
        assert!(cone_contains(&gens, &q(&[0, 0])));
        assert!(!cone_contains(&[], &q(&[1, 0])));
        // ray on the boundary of a 2d cone in 3d
        let gens = vec![q(&[1, 0, 1]), q(&[0, 1, 1]), q(&[1, 1, 1])];
        assert!(cone_contains(&gens, &q(&[2, 0, 2])));
        assert!(!cone_contains(&gens, &q(&[2, 0, 1])));
    }

    #[test]
    fn degenerate_and_redundant() {
        // repeated and dependent generators, zero pivots on the way
        let gens = vec![q(&[1, 1]), q(&[1, 1]), q(&[2, 2]), q(&[1, -1]), q(&[0, 0])];
        assert!(cone_contains(&gens, &q(&[3, 1])));
        assert!(!cone_contains(&gens, &q(&[1, 3])));
    }
}
