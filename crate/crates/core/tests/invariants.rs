//! Structural laws checked over the shipped fixture corpus.

mod common;

use std::collections::BTreeSet;

use fanofiber::constructions::{free_sum, klyachko, power, simplex};
use fanofiber::fibrelike::{
    decompose_prime, is_centrally_symmetric, is_fibre_like, recognize, recognize_irreducible,
    RecognizedFamily,
};
use fanofiber::lattice_core::rank_of;
use fanofiber::mori::{
    classify_contraction, extremality, is_k_neighbourly, primitive_collections,
    primitive_relations, ContractionKind, PrimitiveRelation,
};
use fanofiber::symmetry::{automorphism_group, lattice_isomorphism, report_of};
use fanofiber::toric::{fano_index, is_reflexive, is_terminal};
use fanofiber::Polytope;

use common::{fixtures, smooth_fixtures};

#[test]
fn facets_and_vertices_are_nondegenerate() {
    for (rec, p) in fixtures() {
        let d = p.dim();
        for i in 0..p.num_vertices() {
            let n = (0..p.facets().len()).filter(|&f| p.incidence(i, f)).count();
            assert!(n >= d, "{:?}: vertex {i} on {n} facets", rec.name);
            assert_eq!(p.minimal_face_containing(p.vertex(i)).vertices, vec![i]);
        }
        for f in p.facets() {
            let rows: Vec<Vec<i64>> = f.vertices.iter().map(|&i| p.vertex(i).to_vec()).collect();
            assert_eq!(rank_of(&rows), d, "{:?}: facet {:?}", rec.name, f.normal);
        }
    }
}

#[test]
fn reflexive_duals_are_involutive() {
    for (_, p) in fixtures() {
        if !is_reflexive(&p) || p.facets().len() > 128 {
            continue;
        }
        let dual: Vec<Vec<i64>> = p.facets().iter().map(|f| f.normal.clone()).collect();
        let q = Polytope::new(dual).unwrap();
        let back: BTreeSet<Vec<i64>> = q.facets().iter().map(|f| f.normal.clone()).collect();
        assert!(q.facets().iter().all(|f| f.level == 1));
        assert_eq!(back, p.vertices().iter().cloned().collect());
    }
}

#[test]
fn lattice_points_of_symmetric_polytopes_are_symmetric() {
    for (_, p) in fixtures() {
        if !is_centrally_symmetric(&p) || p.dim() > 6 {
            continue;
        }
        let pts: BTreeSet<Vec<i64>> = p.lattice_points().into_iter().collect();
        assert!(pts
            .iter()
            .all(|x| pts.contains(&x.iter().map(|c| -c).collect::<Vec<_>>())));
    }
}

#[test]
fn smooth_fixtures_are_reflexive_terminal_simplicial() {
    for (rec, p) in smooth_fixtures() {
        assert!(
            is_reflexive(&p) && is_terminal(&p) && p.is_simplicial(),
            "{:?}",
            rec.name
        );
        let i = fano_index(&p).unwrap();
        assert!(1 <= i && i <= p.dim() as u64 + 1);
        let is_projective_space = matches!(
            recognize(&p).as_slice(),
            [RecognizedFamily::ProjectiveSpace(_)] | [RecognizedFamily::Segment]
        ) && p.num_vertices() == p.dim() + 1;
        assert_eq!(
            i == p.dim() as u64 + 1,
            is_projective_space,
            "{:?}",
            rec.name
        );
    }
}

#[test]
fn group_laws() {
    for (rec, p) in fixtures() {
        let g = automorphism_group(&p);
        let s = report_of(&g);
        for h in g.generators() {
            let image: BTreeSet<Vec<i64>> = p.vertices().iter().map(|v| h.apply(v)).collect();
            assert_eq!(image, p.vertices().iter().cloned().collect());
        }
        let m = p.num_vertices() as u128;
        let factorial: u128 = (1..=m).product();
        assert_eq!(factorial % g.order() as u128, 0);
        assert_eq!(g.fixed_dim(), g.dual_fixed_dim(), "{:?}", rec.name);
        if s.vertex_transitive {
            assert_eq!(s.k, 0);
        }
    }
}

fn is_face(p: &Polytope, set: &BTreeSet<usize>) -> bool {
    p.on_common_face(&set.iter().copied().collect::<Vec<_>>())
}

/// For an extremal relation `Σx = Σb·y` and every face `G ⊇ Y` missing the
/// `x`'s, each `(P \ {x}) ∪ G` is a face. Maximal such `G` are `F \ P`.
fn check_sum_closure(p: &Polytope, r: &PrimitiveRelation) {
    let coll: BTreeSet<usize> = r.collection.vertices.iter().copied().collect();
    let focus: BTreeSet<usize> = r.focus.vertices.iter().copied().collect();
    for f in p.facets() {
        let fs: BTreeSet<usize> = f.vertices.iter().copied().collect();
        if !focus.is_subset(&fs) {
            continue;
        }
        let g: BTreeSet<usize> = fs.difference(&coll).copied().collect();
        for &x in &coll {
            let mut s = g.clone();
            s.extend(coll.iter().copied().filter(|&y| y != x));
            assert!(
                is_face(p, &s),
                "closure fails for {:?}",
                r.collection.vertices
            );
        }
    }
}

#[test]
fn primitive_relation_laws() {
    for (rec, p) in smooth_fixtures() {
        if p.num_vertices() > 20 {
            continue;
        }
        let rels = primitive_relations(&p).unwrap();
        let ext = extremality(&p, &rels);
        for (r, &e) in rels.iter().zip(&ext) {
            assert!(r.degree > 0, "{:?}", rec.name);
            if r.degree == 1 {
                assert!(e, "{:?}: degree-1 relation not extremal", rec.name);
            }
            // the left-hand side of a relation with Σa ≥ Σb spans no cone
            if r.coefficients.iter().sum::<i64>() <= r.collection.len() as i64 {
                assert!(!p.on_common_face(&r.collection.vertices));
            }
            if e {
                check_sum_closure(&p, r);
                let pset: BTreeSet<usize> = r.collection.vertices.iter().copied().collect();
                for q in &rels {
                    let qset: BTreeSet<usize> = q.collection.vertices.iter().copied().collect();
                    if q.collection == r.collection || pset.is_disjoint(&qset) {
                        continue;
                    }
                    let mut s: BTreeSet<usize> = qset.difference(&pset).copied().collect();
                    s.extend(r.focus.vertices.iter().copied());
                    assert!(!is_face(&p, &s), "{:?}: difference law fails", rec.name);
                }
            }
        }
    }
}

/// Vertex-transitive 2-neighbourly fixtures: the zero-focus collections
/// partition the vertices into blocks of one size `k ≥ 3`; extremal ones force
/// `(P^{k-1})^r`; and no divisorial relation is extremal.
#[test]
fn two_neighbourly_vertex_transitive_structure() {
    let mut seen = 0;
    let mut candidates: Vec<Polytope> = smooth_fixtures().into_iter().map(|(_, p)| p).collect();
    candidates.push(power(&simplex(2).unwrap(), 3).unwrap());
    for p in candidates {
        if p.num_vertices() > 20
            || !is_k_neighbourly(&p, 2)
            || !report_of(&automorphism_group(&p)).vertex_transitive
        {
            continue;
        }
        seen += 1;
        let rels = primitive_relations(&p).unwrap();
        let ext = extremality(&p, &rels);
        let zero: Vec<(&PrimitiveRelation, bool)> = rels
            .iter()
            .zip(ext.iter().copied())
            .filter(|(r, _)| r.focus.is_empty())
            .collect();
        let k = zero[0].0.collection.len();
        assert!(k >= 3);
        assert_eq!(zero.len() * k, p.num_vertices());
        let mut union = BTreeSet::new();
        for (r, _) in &zero {
            assert_eq!(r.collection.len(), k);
            for &v in &r.collection.vertices {
                assert!(union.insert(v), "zero-focus collections overlap");
            }
        }
        if zero.iter().any(|(_, e)| *e) {
            let expect = if k == 2 {
                RecognizedFamily::Segment
            } else {
                RecognizedFamily::ProjectiveSpace(k - 1)
            };
            assert_eq!(recognize(&p), vec![expect]);
            assert_eq!(
                decompose_prime(&p).unwrap().factors[0].multiplicity,
                zero.len()
            );
        } else {
            for (r, &e) in rels.iter().zip(&ext) {
                assert!(!(e && classify_contraction(r) == ContractionKind::MoriFibration));
            }
        }
        for (r, &e) in rels.iter().zip(&ext) {
            assert!(!(e && classify_contraction(r) == ContractionKind::Divisorial));
        }
    }
    // P^n for n ≤ 8, W_6^3, W_8^3, (P^2)^3, (P^2)^4, (P^3)^2, (P^4)^2
    assert!(seen >= 10, "only {seen} fixtures exercised");
}

#[test]
fn w38_has_no_extremal_divisorial_relation() {
    let p = klyachko(3, 8).unwrap();
    let rels = primitive_relations(&p).unwrap();
    let ext = extremality(&p, &rels);
    assert!(!rels
        .iter()
        .zip(&ext)
        .any(|(r, &e)| e && classify_contraction(r) == ContractionKind::Divisorial));
    assert!(!primitive_collections(&p)
        .unwrap()
        .iter()
        .any(|c| c.len() == 2));
}

#[test]
fn fibre_like_laws() {
    for (rec, p) in smooth_fixtures() {
        let g = automorphism_group(&p);
        let s = report_of(&g);
        let v = is_fibre_like(&p).unwrap();
        assert_eq!(v.fibre_like, s.t as i64 - s.k as i64 == 1);
        if s.vertex_transitive {
            assert!(v.fibre_like, "{:?}", rec.name);
        }
        let families = recognize(&p);
        let product_of_lines_and_del_pezzos = families.iter().all(|f| {
            matches!(
                f,
                RecognizedFamily::Segment | RecognizedFamily::TDelPezzo(_)
            )
        });
        if is_centrally_symmetric(&p) {
            assert!(product_of_lines_and_del_pezzos, "{:?}", rec.name);
        }
        if s.vertex_transitive && !is_k_neighbourly(&p, 2) {
            assert!(product_of_lines_and_del_pezzos, "{:?}", rec.name);
        }
        if s.vertex_transitive && p.dim() <= 7 {
            assert_eq!(families.len(), 1, "{:?}", rec.name);
            assert!(matches!(
                families[0],
                RecognizedFamily::Segment
                    | RecognizedFamily::ProjectiveSpace(_)
                    | RecognizedFamily::TDelPezzo(_)
                    | RecognizedFamily::Klyachko { .. }
            ));
        }
    }
}

#[test]
fn decompositions_round_trip() {
    for (rec, p) in smooth_fixtures() {
        let dec = decompose_prime(&p).unwrap();
        let mut copies = dec.copies();
        let first = copies.next().unwrap().clone();
        let rebuilt = copies.fold(first, |acc, c| free_sum(&acc, c));
        assert!(
            lattice_isomorphism(&rebuilt, &p).unwrap().is_some(),
            "{:?}",
            rec.name
        );
        for f in &dec.factors {
            assert_eq!(recognize(&f.polytope).len(), 1);
            assert_eq!(
                recognize_irreducible(&f.polytope),
                recognize(&f.polytope)[0]
            );
        }
    }
}
