#![allow(dead_code)]

use fanofiber::io::{read_path, PolytopeRecord};
use fanofiber::Polytope;

pub fn fixture_records() -> Vec<PolytopeRecord> {
    read_path(fanofiber::io::fixtures_dir()).expect("fixture corpus reads")
}

pub fn fixtures() -> Vec<(PolytopeRecord, Polytope)> {
    fixture_records()
        .into_iter()
        .map(|r| {
            let p = r.polytope().expect("fixture is a valid polytope");
            (r, p)
        })
        .collect()
}

pub fn smooth_fixtures() -> Vec<(PolytopeRecord, Polytope)> {
    fixtures()
        .into_iter()
        .filter(|(_, p)| fanofiber::toric::is_smooth(p))
        .collect()
}

/// Applies the integer matrix `m` (rows) to every vertex.
pub fn transform(p: &Polytope, m: &[Vec<i64>]) -> Polytope {
    let v = p
        .vertices()
        .iter()
        .map(|x| {
            m.iter()
                .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect();
    Polytope::new(v).expect("unimodular image is valid")
}

/// Product of elementary shears `row[i] += c·row[j]` and swaps, from a
/// stream of choices.
pub fn unimodular(d: usize, ops: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect();
    for &(i, j, c) in ops {
        let (i, j) = (i % d, j % d);
        if i == j {
            m.swap(i, (i + 1) % d);
        } else {
            let src = m[j].clone();
            for (a, b) in m[i].iter_mut().zip(src) {
                *a += c * b;
            }
        }
    }
    m
}
