mod common;

use bck_core::constructions::{bck_union, family, iseki_extension, pi, Family, FamilySpec};
use bck_core::degree::{cd, dnd, pid, DegreeKind};
use bck_core::enumeration::{enumerate, enumerate_labelled, possible_degrees, EnumerateOptions};
use bck_core::BckAlgebra;
use common::{brute_force, frac};

// self-derived baselines, confirmed for n <= 4 by brute force below
const COUNTS: [(usize, usize); 5] = [(1, 1), (2, 1), (3, 3), (4, 14), (5, 88)];

#[test]
fn catalog_sizes() {
    for (n, count) in COUNTS {
        assert_eq!(enumerate(n).unwrap().len(), count, "order {n}");
    }
}

#[test]
#[ignore = "about 20 s with optimizations"]
fn catalog_size_six() {
    assert_eq!(enumerate(6).unwrap().len(), 775);
}

#[test]
fn unpruned_search_agrees() {
    for n in 1..=4 {
        let (labelled, classes) = brute_force(n);
        let catalog = enumerate(n).unwrap();
        let got: Vec<Vec<usize>> = catalog.algebras().map(|a| a.table().to_vec()).collect();
        assert_eq!(got, classes.into_iter().collect::<Vec<_>>(), "order {n}");
        let pruned = enumerate_labelled(n, EnumerateOptions::default()).unwrap();
        assert_eq!(pruned.len(), labelled, "labelled tables of order {n}");
    }
}

#[test]
fn labelled_counts_match_automorphisms() {
    // orbit-stabilizer: (n-1)! / |Aut(A)| labellings per class
    for n in 3..=5 {
        let labelled = enumerate_labelled(
            n,
            EnumerateOptions {
                jobs: 2,
                node_limit: None,
            },
        )
        .unwrap();
        let fact: usize = (1..n).product();
        let expected: usize = enumerate(n).unwrap().algebras().map(|a| fact / automorphisms(a)).sum();
        assert_eq!(labelled.len(), expected);
    }
}

fn automorphisms(a: &BckAlgebra) -> usize {
    use itertools::Itertools;
    let n = a.order();
    (1..n)
        .permutations(n - 1)
        .filter(|p| {
            let perm: Vec<usize> = std::iter::once(0).chain(p.iter().copied()).collect();
            a.relabel(&perm).unwrap() == *a
        })
        .count()
}

#[test]
fn isomorphism_agrees_with_canonical_forms() {
    for n in 3..=5 {
        let c = enumerate(n).unwrap();
        let all: Vec<&BckAlgebra> = c.algebras().collect();
        for a in &all {
            let shuffled = a.relabel(&rotated(n)).unwrap();
            assert!(a.is_isomorphic(&shuffled));
            assert_eq!(shuffled.canonical_form(), a.rows());
            for b in &all {
                assert_eq!(a.is_isomorphic(b), a.canonical_form() == b.canonical_form());
            }
        }
    }
}

fn rotated(n: usize) -> Vec<usize> {
    std::iter::once(0).chain((1..n).map(|i| i % (n - 1) + 1)).collect()
}

#[test]
fn every_entry_is_valid_and_canonical() {
    for n in 1..=5 {
        for a in enumerate(n).unwrap().algebras() {
            assert!(common::is_bck(n, a.table()));
            assert_eq!(common::canonical(n, a.table()), a.table());
        }
    }
}

#[test]
fn structural_laws_over_catalog() {
    for n in 1..=5 {
        for e in enumerate(n).unwrap().entries {
            let a = &e.algebra;
            let p = &e.properties;
            assert_eq!(p.implicative, p.commutative && p.positive_implicative);
            if let (true, Some(_)) = (p.commutative, p.bound) {
                // bounded commutative: involutive negation and a distributive lattice
                assert!(e.degrees.dnd.unwrap().is_one());
                for x in a.elements() {
                    for y in a.elements() {
                        for z in a.elements() {
                            let j = |u, v| a.join(u, v).unwrap();
                            assert_eq!(a.meet(x, j(y, z)), j(a.meet(x, y), a.meet(x, z)));
                        }
                    }
                }
            }
            if p.linear && !p.positive_implicative {
                assert!(e.degrees.pid > frac(1, 2));
            }
            for kind in DegreeKind::ALL {
                if let Some(d) = e.degrees.get(kind) {
                    if kind != DegreeKind::Emd || p.commutative {
                        assert!(possible_degrees(n, kind).contains(&d), "{kind} = {d} at order {n}");
                    }
                }
            }
        }
    }
}

#[test]
fn iseki_extension_has_minimal_dnd() {
    for n in 2..=4 {
        for a in enumerate(n).unwrap().algebras() {
            let ext = iseki_extension(a);
            assert_eq!(dnd(&ext).unwrap(), frac(2, n + 1));
        }
    }
}

#[test]
fn commutative_unions_stay_commutative() {
    let cats: Vec<_> = (1..=3).map(|n| enumerate(n).unwrap()).collect();
    for c1 in &cats {
        for c2 in &cats {
            for a in c1.algebras() {
                for b in c2.algebras() {
                    let u = bck_union(a, b);
                    assert_eq!(u.is_commutative(), a.is_commutative() && b.is_commutative());
                    assert_eq!(
                        u.is_positive_implicative(),
                        a.is_positive_implicative() && b.is_positive_implicative()
                    );
                }
            }
        }
    }
}

#[test]
fn involutive_negation_does_not_force_commutativity() {
    let rows = vec![vec![0, 0, 0, 0], vec![1, 0, 0, 0], vec![2, 2, 0, 0], vec![3, 2, 1, 0]];
    let a = BckAlgebra::from_table(4, &rows).unwrap();
    assert!(a.is_bounded().is_some());
    assert!(!a.is_commutative());
    assert!(dnd(&a).unwrap().is_one());
    assert!(enumerate(4).unwrap().find(&a).is_some());
}

#[test]
fn unbounded_commutative_algebras_can_have_high_pid() {
    let p4 = family(FamilySpec::new(Family::P, 4)).unwrap();
    assert!(p4.is_commutative());
    assert!(p4.is_bounded().is_none());
    assert_eq!(pid(&p4), frac(15, 16));
    // bounded commutative members of the catalog never go above 8/9 when not positive implicative
    for n in 3..=5 {
        for e in enumerate(n).unwrap().entries {
            if e.properties.commutative && e.properties.bound.is_some() && !e.properties.positive_implicative {
                assert!(e.degrees.pid <= frac(8, 9));
            }
        }
    }
}

#[test]
fn union_with_two_raises_cd_of_pi() {
    let b4 = bck_union(&pi(), &bck_core::constructions::two());
    assert_eq!(cd(&b4), frac(14, 16));
}
