mod common;

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use quandle_core::diagram::{
    catalog, connected_sum, parse_pd_code, parse_relations_file, reidemeister_r1, reidemeister_r2,
    CatalogEntry,
};
use quandle_core::solver::{
    brute_force_colorings, brute_force_count, build_system, count_solutions, enumerate_solutions,
};
use quandle_core::{
    compare, counting_invariant, phi_polynomial, AlexanderParams, ArcId, FiniteQuandle,
    LinkDiagram, QuandlePresentation, Sign, TPolicy,
};

use common::{exhaustive_colorings, exhaustive_count, small_catalog, units};

fn presentation(d: &LinkDiagram) -> QuandlePresentation {
    QuandlePresentation::extract(d)
}

fn alexander_count(d: &LinkDiagram, n: u64, t: u64) -> BigUint {
    counting_invariant(
        &presentation(d),
        &FiniteQuandle::alexander(n, t as i64).unwrap(),
    )
}

fn arc(label: usize) -> ArcId {
    ArcId::from_label(label).unwrap()
}

#[test]
fn search_and_linear_route_agree_with_enumeration() {
    for (name, d) in small_catalog() {
        let p = presentation(&d);
        for n in 2..=5u64 {
            for t in units(n) {
                let q = FiniteQuandle::alexander(n, t as i64).unwrap();
                let params = q.alexander_params().unwrap();
                let oracle = exhaustive_colorings(&p, &q);
                let brute: BTreeSet<_> = brute_force_colorings(&p, &q, 1_000_000)
                    .unwrap()
                    .into_iter()
                    .map(|c| c.assignment)
                    .collect();
                let linear: BTreeSet<_> =
                    enumerate_solutions(&build_system(&p, params), n, 1_000_000)
                        .unwrap()
                        .into_iter()
                        .map(|c| c.assignment)
                        .collect();
                assert_eq!(brute, oracle, "{name} n={n} t={t}");
                assert_eq!(linear, oracle, "{name} n={n} t={t}");
            }
        }
    }
}

#[test]
fn smith_counts_match_exhaustive_counts() {
    for (name, d) in small_catalog() {
        let p = presentation(&d);
        for n in 2..=6u64 {
            for t in units(n) {
                let sys = build_system(&p, AlexanderParams::new(n, t as i64).unwrap());
                let rows: Vec<Vec<i64>> = sys
                    .matrix()
                    .to_rows()
                    .into_iter()
                    .map(|r| r.iter().map(|v| v.to_i64().unwrap()).collect())
                    .collect();
                let expected = exhaustive_count(&rows, sys.cols(), n);
                assert_eq!(
                    count_solutions(&sys, n),
                    BigUint::from(expected),
                    "{name} n={n} t={t}"
                );
            }
        }
    }
}

#[test]
fn count_matches_enumeration_length_everywhere() {
    for entry in CatalogEntry::all() {
        let p = presentation(&entry.diagram);
        for n in [2u64, 3, 4, 5, 7, 8, 9] {
            for t in units(n) {
                let sys = build_system(&p, AlexanderParams::new(n, t as i64).unwrap());
                let count = count_solutions(&sys, n);
                if count > BigUint::from(100_000u32) {
                    continue;
                }
                let listed = enumerate_solutions(&sys, n, 100_000).unwrap();
                assert_eq!(
                    BigUint::from(listed.len()),
                    count,
                    "{} n={n} t={t}",
                    entry.name
                );
                let distinct: BTreeSet<_> = listed.iter().map(|c| &c.assignment).collect();
                assert_eq!(distinct.len(), listed.len());
                let q = FiniteQuandle::alexander(n, t as i64).unwrap();
                assert!(listed.iter().all(|c| c.satisfies(&p, &q)));
            }
        }
    }
}

#[test]
fn constant_colorings_solve_every_system() {
    for entry in CatalogEntry::all() {
        let p = presentation(&entry.diagram);
        for n in [2u64, 3, 5, 7, 8] {
            for t in units(n) {
                let sys = build_system(&p, AlexanderParams::new(n, t as i64).unwrap());
                for c in 0..n {
                    for r in 0..sys.rows() {
                        let dot: BigInt = sys
                            .matrix()
                            .row(r)
                            .iter()
                            .map(|a| a * BigInt::from(c))
                            .sum();
                        assert_eq!(dot % BigInt::from(n), BigInt::from(0));
                    }
                }
            }
        }
    }
}

#[test]
fn smith_forms_of_catalog_systems_verify() {
    for entry in CatalogEntry::all() {
        let p = presentation(&entry.diagram);
        for (n, t) in [(3u64, 2u64), (5, 2), (5, 3), (7, 3), (4, 3), (9, 4), (2, 1)] {
            let sys = build_system(&p, AlexanderParams::new(n, t as i64).unwrap());
            assert!(
                sys.smith().verify(sys.matrix()),
                "{} n={n} t={t}",
                entry.name
            );
        }
    }
}

#[test]
fn trivial_quandle_counts_are_powers_of_class_count() {
    for entry in CatalogEntry::all() {
        let p = presentation(&entry.diagram);
        let classes = p.trivial_t_classes().len() as u32;
        assert_eq!(classes as usize, entry.diagram.component_count());
        for n in 2..=7u64 {
            let expected = BigUint::from(n).pow(classes);
            assert_eq!(
                alexander_count(&entry.diagram, n, 1),
                expected,
                "{} n={n}",
                entry.name
            );
            if entry.diagram.arc_count() <= 6 {
                let q = FiniteQuandle::trivial(n as usize);
                assert_eq!(brute_force_count(&p, &q), expected, "{} n={n}", entry.name);
            }
        }
    }
}

#[test]
fn connected_sum_of_hopf_links_matches_the_catalog_entry() {
    let hopf = catalog("hopf").unwrap();
    let hopf_sum = catalog("hopf_sum").unwrap();
    for (a1, a2) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let sum = connected_sum(&hopf, &hopf, arc(a1), arc(a2)).unwrap();
        assert_eq!((sum.crossing_count(), sum.component_count()), (4, 3));
        let p = presentation(&sum);
        for n in 2..=5u64 {
            for t in units(n) {
                let q = FiniteQuandle::alexander(n, t as i64).unwrap();
                let expected = exhaustive_colorings(&presentation(&hopf_sum), &q).len();
                assert_eq!(exhaustive_colorings(&p, &q).len(), expected, "n={n} t={t}");
                assert_eq!(alexander_count(&sum, n, t), BigUint::from(expected));
            }
        }
    }
}

#[test]
fn connected_sum_with_a_kinked_unknot() {
    let kink = reidemeister_r1(&LinkDiagram::unknot(), arc(1), Sign::Positive).unwrap();
    let trefoil = catalog("trefoil").unwrap();
    for a2 in 1..=3 {
        let sum = connected_sum(&kink, &trefoil, arc(1), arc(a2)).unwrap();
        assert_eq!(sum.component_count(), 1);
        for n in 2..=5u64 {
            for t in units(n) {
                let q = FiniteQuandle::alexander(n, t as i64).unwrap();
                let expected = exhaustive_colorings(&presentation(&trefoil), &q).len();
                assert_eq!(
                    exhaustive_colorings(&presentation(&sum), &q).len(),
                    expected
                );
            }
        }
    }
}

#[test]
fn connected_sum_with_unknot_keeps_counts() {
    for (name, d) in small_catalog() {
        for a in d.arcs() {
            let sum = connected_sum(&d, &LinkDiagram::unknot(), a, arc(1)).unwrap();
            for (n, t) in [(3, 2), (5, 2), (4, 3)] {
                assert_eq!(
                    alexander_count(&sum, n, t),
                    alexander_count(&d, n, t),
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn pd_trefoil_matches_the_catalog_up_to_relabeling() {
    let pd = parse_pd_code("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
    let catalog_trefoil = catalog("trefoil").unwrap();
    // swap x2 and x3
    let relabeled = pd
        .to_relations_text()
        .replace("x2", "xB")
        .replace("x3", "x2")
        .replace("xB", "x3");
    let got: BTreeSet<String> = relabeled.lines().map(str::to_string).collect();
    let want: BTreeSet<String> = catalog_trefoil
        .to_relations_text()
        .lines()
        .map(str::to_string)
        .collect();
    assert_eq!(got, want);
    let back = parse_relations_file(&pd.to_relations_text()).unwrap();
    assert_eq!(back, pd);
}

#[test]
fn pd_hopf_link_counts_match_hand_drawn_hopf() {
    let pd = parse_pd_code("X(4,1,3,2) X(2,3,1,4)").unwrap();
    let drawn = catalog("hopf").unwrap();
    for n in 2..=5u64 {
        for t in units(n) {
            let q = FiniteQuandle::alexander(n, t as i64).unwrap();
            let expected = exhaustive_colorings(&presentation(&drawn), &q).len();
            assert_eq!(exhaustive_colorings(&presentation(&pd), &q).len(), expected);
        }
    }
}

#[test]
fn reidemeister_examples() {
    let unlink = catalog("unlink2").unwrap();
    let poked = reidemeister_r2(&unlink, arc(1), arc(2)).unwrap();
    let q = FiniteQuandle::alexander(3, 2).unwrap();
    assert_eq!(exhaustive_colorings(&presentation(&poked), &q).len(), 9);

    let hopf_sum = catalog("hopf_sum").unwrap();
    for a in hopf_sum.arcs() {
        for b in hopf_sum.arcs() {
            let d = reidemeister_r2(&hopf_sum, a, b).unwrap();
            assert_eq!(d.crossing_count(), 6);
            for n in [3u64, 5, 7] {
                assert_eq!(alexander_count(&d, n, 2), BigUint::from(n));
            }
        }
    }

    let trefoil = catalog("trefoil").unwrap();
    for a in trefoil.arcs() {
        let d = reidemeister_r1(&trefoil, a, Sign::Positive).unwrap();
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(alexander_count(&d, 3, 2), BigUint::from(9u32));
    }
}

#[test]
fn phi_polynomial_invariants() {
    for (name, d) in small_catalog() {
        let p = presentation(&d);
        for n in 2..=7u64 {
            for t in units(n) {
                let q = FiniteQuandle::alexander(n, t as i64).unwrap();
                let phi = phi_polynomial(&p, &q, 1_000_000).unwrap();
                assert_eq!(
                    phi.total(),
                    counting_invariant(&p, &q),
                    "{name} n={n} t={t}"
                );
                assert!(phi.coefficient(1) >= BigUint::from(n));
                assert!(phi.degree().unwrap() <= d.arc_count().min(n as usize));
                assert!(phi.terms().keys().all(|&e| e >= 1));
            }
        }
    }
}

#[test]
fn comparison_is_symmetric() {
    let names = ["unknot", "hopf", "trefoil", "hopf_sum", "allen_swenberg"];
    for a in names {
        for b in names {
            let (pa, pb) = (
                presentation(&catalog(a).unwrap()),
                presentation(&catalog(b).unwrap()),
            );
            let ab = compare((a, &pa), (b, &pb), &[3, 4, 5], TPolicy::AllUnits, 10_000).unwrap();
            let ba = compare((b, &pb), (a, &pa), &[3, 4, 5], TPolicy::AllUnits, 10_000).unwrap();
            assert_eq!(ab.verdict, ba.verdict, "{a} vs {b}");
        }
    }
}

#[test]
fn alexander_dual_is_the_inverse_operation() {
    for n in 2..=12u64 {
        for t in units(n) {
            let q = FiniteQuandle::alexander(n, t as i64).unwrap();
            let m = q.order();
            for x in 0..m {
                for y in 0..m {
                    assert_eq!(q.dual(q.op(x, y), y), x);
                    assert_eq!(q.op(q.dual(x, y), y), x);
                }
            }
            let validated = FiniteQuandle::validate(&q.rows()).unwrap();
            for x in 0..m {
                for y in 0..m {
                    assert_eq!(validated.dual(x, y), q.dual(x, y));
                }
            }
        }
    }
}

#[test]
fn takasaki_is_involutory() {
    for n in 2..=30u64 {
        assert!(FiniteQuandle::takasaki(n).unwrap().is_involutory(), "n={n}");
    }
    let q = FiniteQuandle::alexander(5, 2).unwrap();
    let (x, y) = q.involution_witness().unwrap();
    assert_ne!(q.op(q.op(x, y), y), x);
}
