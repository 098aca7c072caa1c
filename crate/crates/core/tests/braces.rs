use std::collections::BTreeSet;

use hgs_core::catalog::{self, by_name};
use hgs_core::constructions;
use hgs_core::hg::{self, EnumConfig};
use hgs_core::{Error, FiniteGroup, GroupMap, SkewBrace, SubgroupSet};
use proptest::prelude::*;

fn bijections_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0]];
    for _ in 1..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..n)
                    .filter(|x| !p.contains(x))
                    .map(|x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

// Direct O(n³) law check, independent of the library's validator.
fn law_holds(dot: &FiniteGroup, circ: &FiniteGroup) -> bool {
    let n = dot.order();
    (0..n).all(|s| {
        (0..n).all(|t| {
            (0..n).all(|k| {
                circ.mul(s, dot.mul(t, k)) == dot.mul(dot.mul(circ.mul(s, t), dot.inv(s)), circ.mul(s, k))
            })
        })
    })
}

#[test]
fn trivial_and_almost_trivial() {
    for name in ["C1", "C6", "D3", "Q8", "A4", "D5"] {
        let g = by_name(name).unwrap();
        let t = SkewBrace::trivial(&g);
        let a = SkewBrace::almost_trivial(&g);
        assert!(law_holds(t.dot(), t.circ()) && law_holds(a.dot(), a.circ()));
        let gamma = t.gamma();
        assert!(gamma.maps().iter().all(|m| *m == GroupMap::identity(g.order())));
        let gamma = a.gamma();
        for s in 0..g.order() {
            for x in 0..g.order() {
                assert_eq!(gamma.apply(s, x), g.conj(s, x));
            }
        }
    }
}

fn labelling_census(dot: &FiniteGroup, circ: &FiniteGroup) -> (usize, usize) {
    let oracle: BTreeSet<Vec<u8>> = hg::oracle_operations(circ, 8)
        .unwrap()
        .iter()
        .map(|g| g.flat_table().to_vec())
        .collect();
    let mut tables = std::collections::BTreeMap::new();
    for p in bijections_fixing_zero(dot.order()) {
        let t = dot.relabel(&GroupMap::new(p)).unwrap();
        tables.insert(t.flat_table().to_vec(), t);
    }
    let (mut valid, mut violated) = (0, 0);
    for t in tables.into_values() {
        match SkewBrace::new(t.clone(), circ.clone()) {
            Ok(_) => {
                valid += 1;
                assert!(oracle.contains(t.flat_table()));
            }
            Err(Error::BraceLawViolated(..)) => {
                violated += 1;
                assert!(!oracle.contains(t.flat_table()));
            }
            Err(e) => panic!("{e}"),
        }
    }
    (valid, violated)
}

#[test]
fn c4_labellings() {
    let klein = by_name("C2^2").unwrap();
    let c4 = by_name("C4").unwrap();
    // Every one of the three C4 tables on four labels is a brace over the
    // Klein group: they are its three structures of cyclic type.
    assert_eq!(labelling_census(&c4, &klein), (3, 0));
    // Over C4 itself only the group's own table survives.
    assert_eq!(labelling_census(&c4, &c4), (1, 2));
}

#[test]
fn semidirect_example_gamma_and_fix() {
    // A = C7, B = C3 acting by x -> 2x.
    let a = by_name("C7").unwrap();
    let b = by_name("C3").unwrap();
    let times = |k: usize| GroupMap::new((0..7).map(|x| x * k % 7).collect());
    let alpha = vec![GroupMap::identity(7), times(2), times(4)];
    let brace = constructions::semidirect_to_brace(&a, &b, &alpha).unwrap();
    let gamma = brace.gamma();
    for s in 0..21 {
        for t in 0..21 {
            let (x, y) = (t / 3, t % 3);
            assert_eq!(gamma.apply(s, t), alpha[s % 3].apply(x) * 3 + y);
        }
    }
    let fixed_a: Vec<usize> = (0..7).filter(|&x| alpha.iter().all(|m| m.apply(x) == x)).collect();
    let expect = SubgroupSet::from_elements(fixed_a.iter().flat_map(|&x| (0..3).map(move |y| x * 3 + y)));
    assert_eq!(brace.fix(), expect);
    assert!(!brace.circ().is_abelian() && brace.dot().is_cyclic());
}

#[test]
fn opposite_brace() {
    for name in ["D3", "Q8", "C4xC2"] {
        let g = by_name(name).unwrap();
        for b in hg::enumerate_operations(&g, &EnumConfig::default()).unwrap().into_iter().take(6) {
            assert_eq!(b.opposite().opposite(), b);
        }
    }
    let c6 = by_name("C6").unwrap();
    assert_eq!(SkewBrace::trivial(&c6).opposite(), SkewBrace::trivial(&c6));
    let q8 = by_name("Q8").unwrap();
    assert_eq!(SkewBrace::trivial(&q8).opposite(), SkewBrace::almost_trivial(&q8));
}

#[test]
fn ideals_of_trivial_and_almost_trivial() {
    for name in ["D3", "D4", "A4", "Dic3"] {
        let g = by_name(name).unwrap();
        let normal: Vec<SubgroupSet> = g.subgroups().iter().filter(|s| g.is_normal(s)).cloned().collect();
        let t = SkewBrace::trivial(&g);
        assert_eq!(t.left_ideals(), g.subgroups());
        assert_eq!(t.ideals(), normal);
        let a = SkewBrace::almost_trivial(&g);
        assert_eq!(a.left_ideals(), normal);
        assert_eq!(t.fix(), g.whole());
        assert_eq!(a.fix(), g.center());
    }
}

#[test]
fn bi_skew_examples() {
    for name in ["D3", "Q8", "C4"] {
        let g = by_name(name).unwrap();
        assert!(SkewBrace::trivial(&g).is_bi_skew());
        assert!(SkewBrace::almost_trivial(&g).is_bi_skew());
    }
    for name in ["C3", "C5", "C4xC2", "C3^2"] {
        assert!(constructions::inversion_construction(&by_name(name).unwrap()).unwrap().is_bi_skew());
    }
    // Direct test: every γ(σ) preserves the circle operation.
    let b = constructions::cpr_cps_brace(2, 2, 1).unwrap();
    let gamma = b.gamma();
    let direct = gamma.maps().iter().all(|m| m.is_homomorphism(b.circ(), b.circ()));
    assert_eq!(b.is_bi_skew(), direct);
    assert!(b.is_bi_skew());
}

#[test]
fn brace_isomorphisms() {
    let q8 = by_name("Q8").unwrap();
    let braces = hg::enumerate_operations(&q8, &EnumConfig::default()).unwrap();
    for b in &braces {
        let f = b.isomorphism(b).unwrap();
        assert!(f.is_automorphism_of(b.dot()) && f.is_automorphism_of(b.circ()));
        assert!(b.automorphism_count() >= 1);
    }
    for name in ["D4", "C2^3", "C6"] {
        let g = by_name(name).unwrap();
        assert_eq!(SkewBrace::trivial(&g).automorphism_count(), g.automorphisms().len());
    }
    let cyclic = braces.iter().find(|b| b.dot().is_cyclic()).unwrap();
    assert!(cyclic.isomorphism(&SkewBrace::trivial(&q8)).is_none());
}

#[test]
fn quotients_and_sub_braces() {
    let q8 = by_name("Q8").unwrap();
    let a = SkewBrace::almost_trivial(&q8);
    assert_eq!(a.quotient(&q8.whole()).unwrap().order(), 1);
    assert_eq!(a.sub_brace(&q8.identity_subgroup()).unwrap().order(), 1);
    let q = a.quotient(&q8.center()).unwrap();
    assert_eq!(q.order(), 4);
    assert!(q.is_trivial());
    assert!(q.circ().is_isomorphic(&by_name("C2^2").unwrap()));

    let c4 = by_name("C4").unwrap();
    let nontrivial = hg::enumerate_operations(&c4, &EnumConfig::default())
        .unwrap()
        .into_iter()
        .find(|b| !b.is_trivial())
        .unwrap();
    let not_left: Vec<SubgroupSet> = nontrivial
        .dot()
        .subgroups()
        .iter()
        .filter(|s| !nontrivial.is_left_ideal(s))
        .cloned()
        .collect();
    for s in not_left {
        assert_eq!(nontrivial.sub_brace(&s).unwrap_err(), Error::NotALeftIdeal);
    }
}

#[test]
fn direct_and_semidirect_products() {
    let c3 = by_name("C3").unwrap();
    let c2 = by_name("C2").unwrap();
    let (t3, t2) = (SkewBrace::trivial(&c3), SkewBrace::trivial(&c2));
    let p = SkewBrace::product(&t3, &t2, None).unwrap();
    assert!(p.is_trivial());
    assert_eq!(*p.circ(), FiniteGroup::direct_product(&c3, &c2).unwrap());

    // Componentwise gamma.
    let q8 = by_name("Q8").unwrap();
    let b1 = hg::enumerate_operations(&q8, &EnumConfig::default())
        .unwrap()
        .into_iter()
        .find(|b| !b.is_trivial())
        .unwrap();
    let b2 = SkewBrace::almost_trivial(&by_name("D3").unwrap());
    let p = SkewBrace::product(&b1, &b2, None).unwrap();
    let (g, g1, g2) = (p.gamma(), b1.gamma(), b2.gamma());
    for s in 0..48 {
        for t in 0..48 {
            let expect = g1.apply(s / 6, t / 6) * 6 + g2.apply(s % 6, t % 6);
            assert_eq!(g.apply(s, t), expect);
        }
    }

    let inversion = vec![GroupMap::identity(3), GroupMap::new(vec![0, 2, 1])];
    let p = SkewBrace::product(&t3, &t2, Some(&inversion)).unwrap();
    let second = SubgroupSet::from_elements([0, 1]);
    assert!(p.strong_left_ideals().contains(&second));
    assert!(!p.is_ideal(&second));

    let bad = vec![GroupMap::identity(3), GroupMap::new(vec![0, 0, 0])];
    assert!(matches!(
        SkewBrace::product(&t3, &t2, Some(&bad)),
        Err(Error::NotBraceAutomorphismAction(_))
    ));
}

#[test]
fn metatriviality() {
    let q8 = by_name("Q8").unwrap();
    // Smallest witness first; the whole group is a witness as well.
    let t = SkewBrace::trivial(&q8);
    assert_eq!(t.metatrivial_witness(), Some(q8.identity_subgroup()));
    assert!(t.sub_brace(&q8.whole()).unwrap().is_trivial() && t.quotient(&q8.whole()).unwrap().is_trivial());
    for (_, b) in constructions::all_psi_braces(&q8).unwrap() {
        assert!(b.metatrivial_witness().is_some());
    }
    for (_, b) in constructions::all_psi_braces(&by_name("C9:C3").unwrap()).unwrap() {
        assert!(b.metatrivial_witness().is_some());
    }
    // Almost trivial on Q8: the exhaustive search over ideals finds the
    // centre (sub-brace on C2, quotient trivial on C2 x C2).
    let a = SkewBrace::almost_trivial(&q8);
    let brute: Vec<SubgroupSet> = a
        .ideals()
        .into_iter()
        .filter(|i| a.sub_brace(i).unwrap().is_trivial() && a.quotient(i).unwrap().is_trivial())
        .collect();
    assert!(!brute.is_empty());
    assert!(brute.contains(&a.metatrivial_witness().unwrap()));
}

#[test]
fn errors() {
    assert_eq!(
        SkewBrace::new(by_name("C2").unwrap(), by_name("C3").unwrap()).unwrap_err(),
        Error::IdentityMismatch
    );
    let d3 = by_name("D3").unwrap();
    let a = SkewBrace::almost_trivial(&d3);
    assert_eq!(a.quotient(&d3.generated([1])).unwrap_err(), Error::NotAnIdeal);
}

fn enumerated_brace() -> impl Strategy<Value = SkewBrace> {
    let names = ["C4", "C2^2", "C6", "D3", "C8", "Q8", "D4", "C4xC2", "C9", "C3^2", "D5", "A4", "Dic3"];
    let all: Vec<SkewBrace> = names
        .iter()
        .flat_map(|n| hg::enumerate_operations(&by_name(n).unwrap(), &EnumConfig::default()).unwrap())
        .collect();
    prop::sample::select(all)
}

fn relabel_brace(b: &SkewBrace, rest: Vec<usize>) -> SkewBrace {
    let perm = GroupMap::new(std::iter::once(0).chain(rest).collect());
    SkewBrace::new(b.dot().relabel(&perm).unwrap(), b.circ().relabel(&perm).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_identities(b in enumerated_brace()) {
        let n = b.order();
        let gamma = b.gamma();
        for s in 0..n {
            prop_assert!(gamma.map(s).is_automorphism_of(b.dot()));
            for t in 0..n {
                prop_assert_eq!(gamma.apply(s, t), b.dot().mul(b.dot().inv(s), b.circ().mul(s, t)));
                prop_assert_eq!(gamma.map(b.circ().mul(s, t)), &gamma.map(s).compose(gamma.map(t)));
            }
        }
    }

    #[test]
    fn strong_left_ideals_are_an_intersection(b in enumerated_brace()) {
        let left: BTreeSet<_> = b.left_ideals().into_iter().collect();
        let opp: BTreeSet<_> = b.opposite().left_ideals().into_iter().collect();
        let strong: BTreeSet<_> = b.strong_left_ideals().into_iter().collect();
        prop_assert_eq!(strong, left.intersection(&opp).cloned().collect::<BTreeSet<_>>());
    }

    #[test]
    fn ideals_give_quotient_braces(b in enumerated_brace()) {
        for i in b.ideals() {
            let q = b.quotient(&i).unwrap();
            prop_assert_eq!(q.order() * i.len(), b.order());
            let s = b.sub_brace(&i).unwrap();
            prop_assert_eq!(s.order(), i.len());
        }
    }

    #[test]
    fn bi_skew_swap_shares_left_ideals(b in enumerated_brace()) {
        prop_assert_eq!(b.is_bi_skew(), b.swap().is_ok());
        if b.is_bi_skew() {
            prop_assert_eq!(b.swap().unwrap().left_ideals(), b.left_ideals());
            prop_assert!(hg::surjective_iff_power_auto(&b).is_ok());
        }
    }

    #[test]
    fn relabelling_preserves_brace_data(
        (b, rest) in enumerated_brace().prop_flat_map(|b| {
            let n = b.order();
            (Just(b), Just((1..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let r = relabel_brace(&b, rest);
        prop_assert!(law_holds(r.dot(), r.circ()));
        prop_assert_eq!(r.left_ideals().len(), b.left_ideals().len());
        prop_assert_eq!(r.ideals().len(), b.ideals().len());
        prop_assert_eq!(r.fix().len(), b.fix().len());
        prop_assert_eq!(r.is_bi_skew(), b.is_bi_skew());
        prop_assert_eq!(r.automorphism_count(), b.automorphism_count());
        prop_assert!(r.isomorphism(&b).is_some());
    }
}

#[test]
fn every_catalog_group_up_to_twelve_gives_valid_enumeration() {
    for order in 1..=12 {
        for e in catalog::catalog(order).unwrap() {
            for b in hg::enumerate_operations(&e.group, &EnumConfig::default()).unwrap() {
                assert!(law_holds(b.dot(), b.circ()), "{}", e.name);
            }
        }
    }
}
