#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use ringlab_core::dsl::{parse, Config, EndoName, Evaluator, RingExpr};
use ringlab_core::FiniteRing;

/// Shared evaluator so repeated rings are built once per test binary.
pub fn evaluator() -> &'static Evaluator {
    static EV: OnceLock<Evaluator> = OnceLock::new();
    EV.get_or_init(|| Evaluator::new(Config::default()))
}

pub fn ring(text: &str) -> Arc<FiniteRing> {
    let expr = parse(text).unwrap_or_else(|e| panic!("{text}: {e}"));
    evaluator().eval(&expr).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// Small rings with order at most 64, each built by a different route.
pub const SMALL: &[&str] = &[
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z6",
    "Z7",
    "Z8",
    "Z9",
    "Z12",
    "GF(4)",
    "GF(8)",
    "GF(9)",
    "GF(16)",
    "GF(25)",
    "Prod(Z2, Z3)",
    "Prod(Z2, Z2, Z3)",
    "Prod(Z3, Z3)",
    "Prod(Z4, Z2)",
    "M(2, Z2)",
    "T(2, Z2)",
    "T(2, Z3)",
    "T(3, Z2)",
    "Tskew(2, GF(4), alpha=frobenius)",
    "PolyMod(Z2, 2)",
    "PolyMod(Z2, 3)",
    "PolyMod(Z3, 2)",
    "PolyMod(Z4, 2)",
    "SkewPolyMod(GF(4), 2, alpha=frobenius)",
    "TrivExt(Z2)",
    "TrivExt(Z3)",
    "TrivExt(Z4)",
    "TrivExt(Z6)",
    "TrivExt(Z2, 2)",
    "DT(Z2)",
    "Ks(Z2, s=0)",
    "Ks(Z2, s=1)",
    "MoritaTriv(Z2)",
    "MoritaTriv(Z2, GF(4))",
    "MoritaTriv(Z2, Z3)",
    "GroupRing(Z2, C2)",
    "GroupRing(Z2, C3)",
    "GroupRing(Z2, C4)",
    "GroupRing(Z2, C2xC2)",
    "GroupRing(Z3, C2)",
    "GroupRing(Z3, C3)",
    "GroupRing(Z4, C2)",
    "GroupRing(Z2, S3)",
];

pub fn small_ring() -> impl Strategy<Value = Arc<FiniteRing>> {
    (0..SMALL.len()).prop_map(|i| ring(SMALL[i]))
}

const GROUPS: &[&str] = &[
    "C1", "C2", "C3", "C4", "C8", "C9", "C2xC2", "C2xC2xC2", "C3xC3", "S3", "D4", "Q8",
];
const PRIMES: &[u64] = &[2, 3, 5, 7, 11, 13];

fn endo() -> impl Strategy<Value = EndoName> {
    prop_oneof![Just(EndoName::Id), Just(EndoName::Frobenius)]
}

/// Syntactically valid expressions of every node kind; they need not build.
pub fn any_expr() -> impl Strategy<Value = RingExpr> {
    let leaf = prop_oneof![
        (2u64..100).prop_map(RingExpr::ZMod),
        (0..PRIMES.len(), 1u32..4).prop_map(|(i, k)| RingExpr::GF { p: PRIMES[i], k }),
        (4u64..40, 1u32..4).prop_map(|(p, k)| RingExpr::GF { p, k }),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        let b = inner.clone().prop_map(Box::new);
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..4).prop_map(RingExpr::Prod),
            (1usize..5, b.clone()).prop_map(|(n, base)| RingExpr::M { n, base }),
            (1usize..5, b.clone()).prop_map(|(n, base)| RingExpr::T { n, base }),
            (1usize..5, b.clone(), endo()).prop_map(|(n, base, alpha)| RingExpr::Tskew { n, base, alpha }),
            (b.clone(), 2usize..6).prop_map(|(base, n)| RingExpr::PolyMod { base, n }),
            (b.clone(), 2usize..6, endo()).prop_map(|(base, n, alpha)| RingExpr::SkewPolyMod { base, n, alpha }),
            (b.clone(), 1usize..4).prop_map(|(base, k)| RingExpr::TrivExt { base, k }),
            b.clone().prop_map(|base| RingExpr::DT { base }),
            (b.clone(), 0usize..50).prop_map(|(base, s)| RingExpr::Ks { base, s }),
            (2usize..5, b.clone(), 0usize..50).prop_map(|(n, base, s)| RingExpr::FM { n, base, s }),
            (b.clone(), prop::option::of(b.clone())).prop_map(|(a, b)| RingExpr::MoritaTriv { a, b }),
            (b, 0..GROUPS.len()).prop_map(|(base, g)| RingExpr::GroupRing {
                base,
                group: GROUPS[g].to_string()
            }),
        ]
    })
}
