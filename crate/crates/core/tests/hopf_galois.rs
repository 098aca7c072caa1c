use std::collections::BTreeSet;

use hgs_core::catalog::{self, by_name};
use hgs_core::constructions;
use hgs_core::hg::{self, EnumConfig};
use hgs_core::{Error, SkewBrace};
use num_rational::Ratio;

fn cfg() -> EnumConfig {
    EnumConfig::default()
}

// (circ, structures, cyclic type, surjective, brace classes). Operation
// counts up to order 8 agree with the permutation oracle (see tests/perm.rs);
// class counts sum to the known numbers of skew braces of each order
// (4: 4, 6: 6, 8: 47, 9: 4, 10: 6, 12: 38).
const CENSUS: &[(&str, usize, usize, usize, usize)] = &[
    ("C1", 1, 1, 1, 1),
    ("C2", 1, 1, 1, 1),
    ("C3", 1, 1, 1, 1),
    ("C4", 2, 1, 2, 2),
    ("C2^2", 4, 3, 1, 2),
    ("C5", 1, 1, 1, 1),
    ("C6", 3, 1, 2, 3),
    ("D3", 5, 3, 1, 3),
    ("C7", 1, 1, 1, 1),
    ("C8", 6, 2, 6, 6),
    ("C4xC2", 26, 4, 4, 14),
    ("C2^3", 106, 0, 1, 6),
    ("D4", 30, 2, 1, 14),
    ("Q8", 22, 6, 16, 7),
    ("C9", 3, 3, 3, 2),
    ("C3^2", 9, 0, 1, 2),
    ("C10", 3, 1, 2, 3),
    ("D5", 7, 5, 1, 3),
    ("C11", 1, 1, 1, 1),
    ("C12", 6, 1, 4, 6),
    ("C6xC2", 20, 3, 4, 8),
    ("A4", 14, 0, 1, 5),
    ("D6", 40, 9, 1, 11),
    ("Dic3", 22, 3, 2, 8),
    ("C15", 1, 1, 1, 1),
];

#[test]
fn census() {
    for &(name, total, cyclic, surjective, classes) in CENSUS {
        let g = by_name(name).unwrap();
        let reports = hg::enumerate_reports(&g, &cfg()).unwrap();
        assert_eq!(reports.len(), total, "{name}");
        assert_eq!(reports.iter().filter(|r| r.operation.is_cyclic()).count(), cyclic, "{name}");
        assert_eq!(reports.iter().filter(|r| r.is_surjective).count(), surjective, "{name}");
        let ids: BTreeSet<usize> = reports.iter().map(|r| r.iso_class_id).collect();
        assert_eq!(ids.len(), classes, "{name}");
        assert_eq!(hg::enumerate_classes(&g, &cfg()).unwrap().len(), classes, "{name}");
    }
    let mut by_order = std::collections::BTreeMap::new();
    for &(name, _, _, _, classes) in CENSUS {
        *by_order.entry(by_name(name).unwrap().order()).or_insert(0) += classes;
    }
    for (order, expect) in [(4, 4), (6, 6), (8, 47), (9, 4), (10, 6), (12, 38)] {
        assert_eq!(by_order[&order], expect, "order {order}");
    }
}

#[test]
fn c2_has_only_the_trivial_structure() {
    let c2 = by_name("C2").unwrap();
    let ops = hg::enumerate_operations(&c2, &cfg()).unwrap();
    assert_eq!(ops, vec![SkewBrace::trivial(&c2)]);
}

#[test]
fn c6_agrees_with_oracle() {
    assert!(hg::bijection_check(&by_name("C6").unwrap(), &cfg()).unwrap());
}

#[test]
fn enumeration_is_sorted_and_duplicate_free() {
    let ops = hg::enumerate_operations(&by_name("D4").unwrap(), &cfg()).unwrap();
    for w in ops.windows(2) {
        assert!(w[0].dot().flat_table() < w[1].dot().flat_table());
    }
}

#[test]
fn orbit_sizes() {
    for name in ["D4", "Q8", "A4", "D6"] {
        let g = by_name(name).unwrap();
        let aut = g.automorphisms().len();
        let classes = hg::enumerate_classes(&g, &cfg()).unwrap();
        let total: usize = classes.iter().map(|c| aut / c.automorphism_count).sum();
        assert_eq!(total, hg::enumerate_operations(&g, &cfg()).unwrap().len());
        for c in &classes {
            assert_eq!(c.orbit.len(), aut / c.representative.automorphism_count());
        }
    }
}

#[test]
fn analyze_examples() {
    let d4 = by_name("D4").unwrap();
    let r = hg::analyze(&SkewBrace::trivial(&d4));
    assert!(r.is_surjective);
    assert_eq!(r.gc_ratio, Ratio::from_integer(1));
    assert_eq!(r.grouplikes, d4.whole());
    for name in ["D3", "D4", "A4", "Dic3"] {
        let g = by_name(name).unwrap();
        let r = hg::analyze(&SkewBrace::almost_trivial(&g));
        let normal: Vec<_> = g.subgroups().iter().filter(|s| g.is_normal(s)).cloned().collect();
        assert_eq!(r.image, normal);
        assert!(!r.is_surjective);
    }
    let q8 = by_name("Q8").unwrap();
    let r = hg::analyze(&SkewBrace::almost_trivial(&q8));
    assert!(r.is_surjective && r.image.len() == 6);
}

#[test]
fn ratio_pairs() {
    let trivial = SkewBrace::trivial(&by_name("D3").unwrap());
    assert_eq!(hg::biskew_pair_report(&trivial).unwrap().quotient, Ratio::from_integer(1));
    let r = hg::biskew_pair_report(&constructions::inversion_construction(&by_name("C5").unwrap()).unwrap()).unwrap();
    assert_eq!(r.ratio_fwd, Ratio::from_integer(1));
    assert_eq!(r.ratio_swapped, Ratio::new(4, 8));
    assert_eq!(r.quotient, Ratio::new(5 + 3, 4));
    let r = hg::biskew_pair_report(&constructions::inversion_construction(&by_name("C7").unwrap()).unwrap()).unwrap();
    assert_eq!(r.subgroup_counts, (10, 4));
    assert_eq!(r.quotient, Ratio::new(10, 4));

    let not_bi = hg::enumerate_operations(&by_name("C4xC2").unwrap(), &cfg())
        .unwrap()
        .into_iter()
        .find(|b| !b.is_bi_skew())
        .unwrap();
    assert_eq!(hg::biskew_pair_report(&not_bi).unwrap_err(), Error::NotBiSkew);
}

#[test]
fn byott_counts() {
    let c2 = by_name("C2").unwrap();
    assert_eq!(hg::e_count(&c2, &c2, &cfg()).unwrap(), 1);
    assert_eq!(hg::f_count(&c2, &c2, &cfg()).unwrap(), 1);
    let q8 = by_name("Q8").unwrap();
    let c8 = by_name("C8").unwrap();
    assert_eq!(hg::e_count(&q8, &c8, &cfg()).unwrap(), 6);
    // 6 · |Aut C8| = 6 · 4 = 24 = 1 · |Aut Q8|.
    assert_eq!(hg::f_count(&q8, &c8, &cfg()).unwrap(), 1);
    assert!(hg::byott_check(&q8, &c8, &cfg()).unwrap());
}

#[test]
fn childs_examples() {
    let c15 = by_name("C15").unwrap();
    assert!(hg::childs_criterion(&c15));
    assert!(hg::all_surjective(&c15, &cfg()).unwrap());
    let c6 = by_name("C6").unwrap();
    assert!(!hg::childs_criterion(&c6));
    assert!(!hg::all_surjective(&c6, &cfg()).unwrap());
    let q8 = by_name("Q8").unwrap();
    assert!(!hg::childs_criterion(&q8));
    let failing: Vec<_> = hg::enumerate_reports(&q8, &cfg())
        .unwrap()
        .into_iter()
        .filter(|r| !r.is_surjective)
        .collect();
    assert_eq!(failing.len(), 6);
    assert!(failing.iter().all(|r| r.type_name == "C8"));
}

#[test]
fn kohl_examples() {
    for name in ["D4", "Q8", "A4"] {
        let g = by_name(name).unwrap();
        assert_eq!(hg::kohl_obstruction(&g, &g, &cfg()).unwrap(), None);
    }
    let (q8, c8) = (by_name("Q8").unwrap(), by_name("C8").unwrap());
    assert_eq!(hg::kohl_obstruction(&q8, &c8, &cfg()).unwrap(), None);
    // C8 has one characteristic subgroup of each order; C2^3 has subgroups
    // of every order, so there is no witness.
    assert_eq!(hg::kohl_obstruction(&by_name("C2^3").unwrap(), &c8, &cfg()).unwrap(), None);
    // A4 has no subgroup of order 6, C12 a characteristic one.
    let (a4, c12) = (by_name("A4").unwrap(), by_name("C12").unwrap());
    assert_eq!(hg::kohl_obstruction(&a4, &c12, &cfg()).unwrap(), Some(6));
    assert_eq!(hg::e_count(&a4, &c12, &cfg()).unwrap(), 0);
    assert!(matches!(hg::kohl_obstruction(&a4, &q8, &cfg()), Err(Error::BadParameters(_))));
}

#[test]
fn power_automorphism_agreement() {
    let d4 = by_name("D4").unwrap();
    assert!(hg::surjective_iff_power_auto(&SkewBrace::trivial(&d4)).unwrap());
    let inv = constructions::inversion_construction(&by_name("C5").unwrap()).unwrap();
    assert!(hg::surjective_iff_power_auto(&inv).unwrap());
    let q8 = by_name("Q8").unwrap();
    let cyclic = hg::enumerate_operations(&q8, &cfg())
        .unwrap()
        .into_iter()
        .find(|b| b.dot().is_cyclic())
        .unwrap();
    assert!(cyclic.is_bi_skew());
    assert!(!hg::surjective_iff_power_auto(&cyclic).unwrap());
}

#[test]
fn grouplikes_form_a_left_ideal() {
    for b in hg::enumerate_operations(&by_name("D4").unwrap(), &cfg()).unwrap() {
        let r = hg::analyze(&b);
        assert!(r.image.contains(&r.grouplikes));
    }
}

#[test]
fn bounds_and_unsupported_orders() {
    let c8 = by_name("C8").unwrap();
    let small = EnumConfig { max_order: 6, ..cfg() };
    assert!(matches!(hg::enumerate_operations(&c8, &small), Err(Error::OrderTooLarge { .. })));
    assert!(matches!(
        hg::enumerate_operations(&by_name("C3^3").unwrap(), &cfg()),
        Err(Error::OrderTooLarge { .. })
    ));
    for name in ["C16", "C2^4"] {
        let heavy = EnumConfig { enable_heavy: true, ..cfg() };
        assert_eq!(
            hg::enumerate_operations(&by_name(name).unwrap(), &heavy).unwrap_err(),
            Error::CatalogIncompleteForOrder(16)
        );
    }
    assert_eq!(
        hg::enumerate_operations(&by_name("C17").unwrap(), &cfg()).unwrap_err(),
        Error::CatalogIncompleteForOrder(17)
    );
    assert!(hg::type_name(&by_name("C17").unwrap()).starts_with("unknown-order-17-#"));
    assert_eq!(catalog::identify(&by_name("C2xC2").unwrap()).as_deref(), Some("C2^2"));
}
