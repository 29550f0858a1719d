use proptest::prelude::*;
use ringlab_core::groups::GROUP_NAMES;
use ringlab_core::{group_catalog, RingError};

#[test]
fn catalog_orders() {
    let expected = [
        ("C1", 1),
        ("C2", 2),
        ("C3", 3),
        ("C4", 4),
        ("C8", 8),
        ("C9", 9),
        ("C2xC2", 4),
        ("C2xC2xC2", 8),
        ("C3xC3", 9),
        ("S3", 6),
        ("D4", 8),
        ("Q8", 8),
    ];
    assert_eq!(GROUP_NAMES.len(), expected.len());
    for (name, order) in expected {
        let g = group_catalog(name).unwrap();
        assert_eq!(g.order(), order, "{name}");
        assert_eq!(g.label(), name);
    }
    assert_eq!(group_catalog("C5").unwrap_err(), RingError::UnknownGroup("C5".into()));
}

#[test]
fn named_group_facts() {
    let q8 = group_catalog("Q8").unwrap();
    assert_eq!(q8.exponent(), 4);
    assert!(!q8.is_abelian());
    assert!(q8.is_p_group(2));
    let s3 = group_catalog("S3").unwrap();
    assert!(!s3.is_p_group(2) && !s3.is_p_group(3));
    assert!(!s3.is_abelian());
    assert_eq!(s3.exponent(), 6);
    assert_eq!(group_catalog("D4").unwrap().exponent(), 4);
    assert_eq!(group_catalog("C2xC2xC2").unwrap().exponent(), 2);
    assert!(group_catalog("C3xC3").unwrap().is_p_group(3));
    assert!(group_catalog("C1").unwrap().is_p_group(2));
}

#[test]
fn cyclic_subgroups() {
    let c8 = group_catalog("C8").unwrap();
    let g = (0..8).find(|&g| c8.element_order(g) == 4).unwrap();
    let (h, emb) = c8.cyclic_subgroup(g);
    assert_eq!(h.order(), 4);
    assert_eq!(emb[0], c8.identity());
    assert_eq!(emb[1], g);
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(emb[h.op(i, j)], c8.op(emb[i], emb[j]));
        }
    }
}

fn names() -> impl Strategy<Value = &'static str> {
    (0..GROUP_NAMES.len()).prop_map(|i| GROUP_NAMES[i])
}

proptest! {
    #[test]
    fn exponent_divides_order(name in names()) {
        let g = group_catalog(name).unwrap();
        prop_assert_eq!(g.order() % g.exponent(), 0);
        for x in g.elements() {
            prop_assert_eq!(g.exponent() % g.element_order(x), 0);
        }
    }

    #[test]
    fn group_axioms(name in names()) {
        let g = group_catalog(name).unwrap();
        let e = g.identity();
        for a in g.elements() {
            prop_assert_eq!(g.op(a, e), a);
            prop_assert_eq!(g.op(e, a), a);
            prop_assert_eq!(g.op(a, g.inv(a)), e);
            for b in g.elements() {
                for c in g.elements() {
                    prop_assert_eq!(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
                }
            }
        }
    }

    #[test]
    fn abelian_by_definition(name in names()) {
        let g = group_catalog(name).unwrap();
        let commute = g.elements().all(|a| g.elements().all(|b| g.op(a, b) == g.op(b, a)));
        prop_assert_eq!(g.is_abelian(), commute);
    }
}
