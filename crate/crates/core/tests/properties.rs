//! Randomized laws: invariance under lattice automorphisms of `Z^d` and
//! behaviour under free sums.

mod common;

use num_integer::Integer;
use proptest::prelude::*;

use fanofiber::constructions::{free_sum, klyachko, simplex, t_del_pezzo};
use fanofiber::fibrelike::{decompose_prime, describe, is_centrally_symmetric};
use fanofiber::symmetry::{automorphism_group, lattice_isomorphism, symmetry_report};
use fanofiber::toric::{fano_flags, fano_index, picard_rank};
use fanofiber::Polytope;

use common::{transform, unimodular};

/// Small irreducible smooth Fano polytopes, pairwise inequivalent.
fn irreducible(i: usize) -> Polytope {
    match i {
        0 => simplex(1).unwrap(),
        1 => simplex(2).unwrap(),
        2 => t_del_pezzo(2).unwrap(),
        3 => Polytope::new(vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![-1, -1]]).unwrap(),
        4 => simplex(3).unwrap(),
        _ => klyachko(3, 6).unwrap(),
    }
}

fn ops() -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    prop::collection::vec(
        (0usize..8, 0usize..8, prop_oneof![Just(1i64), Just(-1)]),
        0..6,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn invariants_survive_unimodular_maps(i in 0usize..6, ops in ops()) {
        let p = irreducible(i);
        let q = transform(&p, &unimodular(p.dim(), &ops));
        prop_assert_eq!(fano_flags(&p), fano_flags(&q));
        prop_assert_eq!(symmetry_report(&p), symmetry_report(&q));
        prop_assert_eq!(automorphism_group(&p).order(), automorphism_group(&q).order());
        prop_assert_eq!(describe(&p), describe(&q));
        let map = lattice_isomorphism(&p, &q).unwrap().expect("equivalent");
        for v in p.vertices() {
            prop_assert!(q.vertex_index(&map.apply(v)).is_some());
        }
    }

    #[test]
    fn free_sum_laws(a in 0usize..5, b in 0usize..5) {
        let (p, q) = (irreducible(a), irreducible(b));
        let s = free_sum(&p, &q);
        prop_assert_eq!(
            picard_rank(&s).unwrap(),
            picard_rank(&p).unwrap() + picard_rank(&q).unwrap()
        );
        prop_assert_eq!(
            fano_index(&s).unwrap(),
            fano_index(&p).unwrap().gcd(&fano_index(&q).unwrap())
        );
        let (gp, gq) = (automorphism_group(&p).order(), automorphism_group(&q).order());
        let expected = if a == b { gp * gq * 2 } else { gp * gq };
        prop_assert_eq!(automorphism_group(&s).order(), expected);
        prop_assert_eq!(
            is_centrally_symmetric(&s),
            is_centrally_symmetric(&p) && is_centrally_symmetric(&q)
        );
        let copies: usize = decompose_prime(&s).unwrap().factors.iter().map(|f| f.multiplicity).sum();
        prop_assert_eq!(copies, 2);
    }
}
