mod common;

use std::collections::BTreeMap;

use comaximal::catalog::{bundled_catalog, parse_catalog, parse_catalog_after, Catalog};
use comaximal::{Error, SubgroupLattice};
use proptest::prelude::*;

#[test]
fn bundled_groups_are_pairwise_non_isomorphic_within_an_order() {
    let groups = common::bundled_groups();
    let mut seen: BTreeMap<_, String> = BTreeMap::new();
    for g in &groups {
        let l = SubgroupLattice::enumerate(g).unwrap();
        let key = (g.order(), common::fingerprint(g, &l));
        if let Some(prev) = seen.insert(key, g.name().to_string()) {
            panic!("{} and {} look isomorphic", prev, g.name());
        }
    }
}

#[test]
fn complete_orders_hold_the_right_number_of_groups() {
    // Number of groups of each order up to isomorphism.
    let known: BTreeMap<usize, usize> = [
        (1, 1),
        (2, 1),
        (3, 1),
        (4, 2),
        (5, 1),
        (6, 2),
        (7, 1),
        (8, 5),
        (9, 2),
        (10, 2),
        (11, 1),
        (12, 5),
        (13, 1),
        (14, 2),
        (15, 1),
        (16, 14),
        (17, 1),
        (18, 5),
        (19, 1),
        (20, 5),
        (21, 2),
        (22, 2),
        (23, 1),
        (24, 15),
        (29, 1),
        (31, 1),
        (33, 1),
        (35, 1),
        (37, 1),
        (41, 1),
        (43, 1),
        (47, 1),
        (51, 1),
        (53, 1),
        (59, 1),
        (61, 1),
    ]
    .into_iter()
    .collect();
    let c = bundled_catalog();
    let groups = c.build_all().unwrap();
    for &n in c.complete_orders() {
        let have = groups.iter().filter(|g| g.order() == n).count();
        assert_eq!(Some(&have), known.get(&n), "order {n}");
    }
}

#[test]
fn exceptional_names_are_present() {
    let c = bundled_catalog();
    for name in [
        "A4", "SL23", "Z2^2:Z9", "S3", "D5", "Z3:Z4", "Z3:Z8", "Dic5", "A5", "PSL27", "A4xZ5",
        "A4xZ7", "S3xZ5",
    ] {
        assert!(c.get(name).is_some(), "{name}");
    }
}

#[test]
fn user_catalog_cannot_redefine_bundled_names() {
    let mut c = bundled_catalog();
    let extra = parse_catalog_after("group A4xZ2\nproduct A4 Z2\nend\n", &c).unwrap();
    c.extend(extra).unwrap();
    assert_eq!(c.build("A4xZ2").unwrap().order(), 24);
    let dup = parse_catalog("group A4\nfamily alternating 4\nend\n").unwrap();
    assert!(matches!(c.extend(dup), Err(Error::DuplicateName(n)) if n == "A4"));
}

#[test]
fn unknown_group() {
    assert!(matches!(
        bundled_catalog().build("Nope"),
        Err(Error::UnknownGroup(_))
    ));
}

fn entry_text() -> impl Strategy<Value = String> {
    prop_oneof![
        (1usize..30).prop_map(|n| format!("family cyclic {n}")),
        (2usize..12).prop_map(|n| format!("family dihedral {n}")),
        (2usize..6).prop_map(|n| format!("family dicyclic {n}")),
        (1usize..5).prop_map(|n| format!("family symmetric {n}")),
        Just("perm 4\ngen 1 2 3 0\ngen 1 0 2 3".to_string()),
        Just("table 2\n0 1\n1 0".to_string()),
    ]
}

proptest! {
    #[test]
    fn text_round_trip(bodies in prop::collection::vec(entry_text(), 1..8),
                       tags in prop::collection::vec("[a-z:]{1,8}", 0..3),
                       complete in prop::collection::btree_set(1usize..40, 0..4)) {
        let mut text = String::new();
        for n in &complete {
            text.push_str(&format!("# complete-order {n}\n"));
        }
        for (i, b) in bodies.iter().enumerate() {
            text.push_str(&format!("group G{i}\n{b}\n"));
            for t in &tags {
                text.push_str(&format!("tag {t}\n"));
            }
            text.push_str("end\n");
        }
        if bodies.len() > 1 {
            text.push_str("group P\nproduct G0 G1\nend\n");
        }
        let c: Catalog = parse_catalog(&text).unwrap();
        let again = parse_catalog(&c.to_text()).unwrap();
        prop_assert_eq!(&again, &c);
        let a = c.build_all().unwrap();
        let b = again.build_all().unwrap();
        prop_assert_eq!(a.iter().map(|g| g.to_rows()).collect::<Vec<_>>(), b.iter().map(|g| g.to_rows()).collect::<Vec<_>>());
    }
}
