//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Every criterion recomputes the sets it relies on with the brute-force
//! oracles below instead of trusting the library's own answers.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config as RunnerConfig, RngAlgorithm, TestRng, TestRunner};
use ringlab_core::constructions::{
    augmentation, augmentation_ideal, product, trivial_extension, trivial_morita, Bimodule, Budget,
};
use ringlab_core::dsl::{format, parse, Config, EndoName, RingExpr};
use ringlab_core::predicates::{check_witness, evaluate, holds, predicate_table, Predicate};
use ringlab_core::verifier::{default_catalog, Status, TheoremReport, Verifier};
use ringlab_core::FiniteRing;
use serde_json::Value;

type Outcome = Result<String, String>;

fn verifier() -> &'static Verifier {
    static V: OnceLock<Verifier> = OnceLock::new();
    V.get_or_init(|| Verifier::new(Config::default()))
}

fn build(text: &str) -> Result<Arc<FiniteRing>, String> {
    let expr = parse(text).map_err(|e| format!("{text}: {e}"))?;
    verifier().evaluator().eval(&expr).map_err(|e| format!("{text}: {e}"))
}

fn catalog_rings() -> Result<Vec<(String, Arc<FiniteRing>)>, String> {
    default_catalog()
        .iter()
        .map(|e| Ok((e.text(), build(&e.text())?)))
        .collect()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

/// Structural sets recomputed from the tables alone.
struct Oracle<'r> {
    r: &'r FiniteRing,
    units: Vec<bool>,
    nil: Vec<bool>,
    jac: Vec<bool>,
    center: Vec<bool>,
}

impl<'r> Oracle<'r> {
    fn new(r: &'r FiniteRing) -> Self {
        let n = r.order();
        let (zero, one) = (r.zero(), r.one());
        let units: Vec<bool> = (0..n)
            .map(|a| (0..n).any(|b| r.mul(a, b) == one && r.mul(b, a) == one))
            .collect();
        let nil = (0..n)
            .map(|a| {
                let mut x = a;
                for _ in 0..=n {
                    if x == zero {
                        return true;
                    }
                    x = r.mul(x, a);
                }
                false
            })
            .collect();
        let jac = (0..n)
            .map(|a| (0..n).all(|x| units[r.sub(one, r.mul(x, a))]))
            .collect();
        let center = (0..n)
            .map(|a| (0..n).all(|x| r.mul(a, x) == r.mul(x, a)))
            .collect();
        Oracle { r, units, nil, jac, center }
    }

    fn members(flags: &[bool]) -> Vec<usize> {
        flags.iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| i).collect()
    }

    fn nil_plus_jac(&self) -> Vec<bool> {
        let mut out = vec![false; self.r.order()];
        let jac = Self::members(&self.jac);
        for q in Self::members(&self.nil) {
            for &j in &jac {
                out[self.r.add(q, j)] = true;
            }
        }
        out
    }

    /// The first unit whose square is outside 1 + Nil + J.
    fn two_unj_failure(&self) -> Option<usize> {
        let nj = self.nil_plus_jac();
        let one = self.r.one();
        Self::members(&self.units)
            .into_iter()
            .find(|&u| !nj[self.r.sub(self.r.mul(u, u), one)])
    }

    fn two_unj(&self) -> bool {
        self.two_unj_failure().is_none()
    }

    /// `a` with some power in J.
    fn sqrt_jac(&self) -> Vec<bool> {
        let n = self.r.order();
        (0..n)
            .map(|a| {
                let mut x = a;
                for _ in 0..=n {
                    if self.jac[x] {
                        return true;
                    }
                    x = self.r.mul(x, a);
                }
                false
            })
            .collect()
    }

    fn regular(&self) -> bool {
        let r = self.r;
        r.elements().all(|a| r.elements().any(|x| r.mul(r.mul(a, x), a) == a))
    }

    fn unit_regular(&self) -> bool {
        let r = self.r;
        let units = Self::members(&self.units);
        r.elements().all(|a| units.iter().any(|&u| r.mul(r.mul(a, u), a) == a))
    }

    fn strongly_regular(&self) -> bool {
        let r = self.r;
        r.elements().all(|a| {
            let sq = r.mul(a, a);
            r.elements().any(|x| r.mul(sq, x) == a)
        })
    }

    fn tripotent(&self) -> bool {
        let r = self.r;
        r.elements().all(|a| r.mul(r.mul(a, a), a) == a)
    }
}

fn no_failures(report: &TheoremReport) -> Result<(), String> {
    for res in &report.results {
        ensure!(res.status != Status::Fail, "{} fails on {}: {:?}", report.theorem, res.ring, res.witness);
        ensure!(
            res.status != Status::Skip || res.note.as_deref().is_some_and(|n| !n.is_empty()),
            "{} skips {} without a reason",
            report.theorem,
            res.ring
        );
        if let Some(w) = &res.witness {
            verifier().revalidate(w).map_err(|e| format!("{} on {}: {e}", report.theorem, res.ring))?;
        }
    }
    Ok(())
}

fn run_theorem(id: &str) -> Result<TheoremReport, String> {
    let report = verifier().run_theorem(id, &default_catalog()).map_err(|e| e.to_string())?;
    no_failures(&report)?;
    Ok(report)
}

fn criterion_1() -> Outcome {
    let mut worst = Duration::ZERO;
    let mut timed = |text: &str, p: Predicate| -> Result<bool, String> {
        let start = Instant::now();
        let r = build(text)?;
        let v = evaluate(&r, p);
        worst = worst.max(start.elapsed());
        check_witness(&r, &v)?;
        ensure!(Oracle::new(&r).two_unj() == holds(&r, Predicate::TwoUNJ), "{text}: 2UNJ disagrees with the oracle");
        Ok(v.holds)
    };
    ensure!(timed("Z3", Predicate::TwoUNJ)?, "Z3 is not 2UNJ");
    ensure!(!timed("Z3", Predicate::UNJ)?, "Z3 is UNJ");
    ensure!(!timed("Z7", Predicate::TwoUNJ)?, "Z7 is 2UNJ");
    ensure!(worst < Duration::from_millis(1), "slowest decision took {worst:?}");
    Ok(format!("Z3 2UNJ and not UNJ, Z7 not 2UNJ; slowest {worst:?}"))
}

fn criterion_2() -> Outcome {
    let mut yes = Vec::new();
    for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
        let r = build(&format!("GF({q})"))?;
        let v = evaluate(&r, Predicate::TwoUNJ);
        check_witness(&r, &v)?;
        ensure!(v.holds == Oracle::new(&r).two_unj(), "GF({q}): verdict disagrees with the oracle");
        ensure!(v.holds == (q == 2 || q == 3), "GF({q}): 2UNJ = {}", v.holds);
        if v.holds {
            yes.push(q);
        }
    }
    Ok(format!("2UNJ fields: {yes:?}"))
}

fn criterion_3() -> Outcome {
    let report = run_theorem("prop-3.8")?;
    let mut seen = Vec::new();
    for text in ["M(2, Z2)", "M(2, Z3)"] {
        let r = build(text)?;
        let v = evaluate(&r, Predicate::TwoUNJ);
        ensure!(!v.holds, "{text} is 2UNJ");
        check_witness(&r, &v)?;
        let u = v.counterexample().ok_or("no counterexample stored")?.element;
        let oracle = Oracle::new(&r);
        ensure!(oracle.units[u], "{text}: witness {u} is not a unit");
        ensure!(
            !oracle.nil_plus_jac()[r.sub(r.mul(u, u), r.one())],
            "{text}: u^2 - 1 lies in Nil + J for witness {u}"
        );
        let stored = report
            .results
            .iter()
            .find(|x| x.ring == text)
            .and_then(|x| x.witness.as_ref())
            .ok_or_else(|| format!("{text}: verifier stored no witness"))?;
        verifier().revalidate(stored)?;
        seen.push(format!("{text} fails at {}", r.element_label(u)));
    }
    Ok(seen.join(", "))
}

fn criterion_4() -> Outcome {
    const FACTORS: [&str; 4] = ["Z2", "Z3", "GF(4)", "GF(5)"];
    let mut lists: Vec<Vec<usize>> = vec![vec![]];
    let mut all = Vec::new();
    for _ in 0..3 {
        lists = lists
            .iter()
            .flat_map(|l| (0..4).map(move |i| [l.as_slice(), &[i]].concat()))
            .collect();
        all.extend(lists.iter().cloned());
    }
    let mut positive = 0;
    for l in &all {
        let names: Vec<&str> = l.iter().map(|&i| FACTORS[i]).collect();
        let text = format!("Prod({})", names.join(", "));
        let r = build(&text)?;
        let expected = l.iter().all(|&i| i < 2);
        let got = holds(&r, Predicate::TwoUNJ);
        ensure!(got == expected, "{text}: 2UNJ = {got}");
        ensure!(Oracle::new(&r).two_unj() == expected, "{text}: oracle disagrees");
        positive += usize::from(got);
    }
    run_theorem("cor-3.26-ii")?;
    Ok(format!("{} products, {positive} of them 2UNJ", all.len()))
}

fn criterion_5() -> Outcome {
    let rings = catalog_rings()?;
    let mut tripotent = 0;
    for (text, r) in &rings {
        let o = Oracle::new(r);
        let two = o.two_unj();
        let statements = [
            o.regular() && two,
            o.tripotent(),
            o.strongly_regular() && two,
            o.unit_regular() && two,
        ];
        ensure!(statements.iter().all(|&s| s == statements[0]), "{text}: {statements:?}");
        let lib = [
            holds(r, Predicate::Regular) && holds(r, Predicate::TwoUNJ),
            holds(r, Predicate::Tripotent),
            holds(r, Predicate::StronglyRegular) && holds(r, Predicate::TwoUNJ),
            holds(r, Predicate::UnitRegular) && holds(r, Predicate::TwoUNJ),
        ];
        ensure!(lib == statements, "{text}: library {lib:?} vs oracle {statements:?}");
        tripotent += usize::from(statements[0]);
    }
    run_theorem("thm-3.13")?;
    Ok(format!("{} rings, {tripotent} tripotent, zero violations", rings.len()))
}

fn criterion_6() -> Outcome {
    let mut pairs = Vec::new();
    for base in ["Z2", "Z3", "Z4", "Z9", "GF(4)", "Z6"] {
        for n in [2, 3] {
            for text in [
                format!("T({n}, {base})"),
                format!("TrivExt({base})"),
                format!("DT({base})"),
                format!("PolyMod({base}, {n})"),
            ] {
                if !pairs.iter().any(|(t, _): &(String, &str)| *t == text) {
                    pairs.push((text, base));
                }
            }
        }
    }
    pairs.push(("Ks(Z4, s=2)".into(), "Z4"));
    pairs.push(("FM(2, Z4, s=2)".into(), "Z4"));
    let mut checked = 0;
    let mut skipped = Vec::new();
    for (text, base) in &pairs {
        let expr = parse(text).map_err(|e| e.to_string())?;
        let r = match verifier().evaluator().eval(&expr) {
            Ok(r) => r,
            Err(e) if e.is_budget() => {
                skipped.push(text.clone());
                continue;
            }
            Err(e) => return Err(e.to_string()),
        };
        let b = build(base)?;
        let want = Oracle::new(&b).two_unj();
        ensure!(holds(&b, Predicate::TwoUNJ) == want, "{base}: library disagrees with oracle");
        ensure!(holds(&r, Predicate::TwoUNJ) == want, "{text}: 2UNJ differs from {base}");
        ensure!(Oracle::new(&r).two_unj() == want, "{text}: oracle 2UNJ differs from {base}");
        checked += 1;
    }
    Ok(format!(
        "{checked} rings agree with their base; over the order budget, skipped: {}",
        skipped.join(", ")
    ))
}

fn criterion_7() -> Outcome {
    let cases = [
        ("GroupRing(Z2, C2)", true),
        ("GroupRing(Z2, C4)", true),
        ("GroupRing(Z2, C2xC2)", true),
        ("GroupRing(Z2, C8)", true),
        ("GroupRing(Z4, C2)", true),
        ("GroupRing(Z3, C2)", true),
        ("GroupRing(Z3, C3)", true),
        ("GroupRing(Z2, C3)", false),
    ];
    for (text, expected) in cases {
        let rg = build(text)?;
        ensure!(holds(&rg, Predicate::TwoUNJ) == expected, "{text}: 2UNJ != {expected}");
        ensure!(Oracle::new(&rg).two_unj() == expected, "{text}: oracle 2UNJ != {expected}");
        let eps = augmentation(&rg).map_err(|e| e.to_string())?;
        eps.verify().map_err(|e| format!("{text}: augmentation: {e}"))?;
        ensure!(eps.is_surjective(), "{text}: augmentation is not onto");
        let delta = augmentation_ideal(&rg).map_err(|e| e.to_string())?;
        let members = delta.members().to_vec();
        let mut kernel = eps.kernel();
        kernel.sort_unstable();
        ensure!(members == kernel, "{text}: augmentation ideal differs from the kernel");
        let inside = |x: usize| members.binary_search(&x).is_ok();
        for &a in &members {
            for &b in &members {
                ensure!(inside(rg.sub(a, b)), "{text}: not closed under subtraction");
            }
            for x in rg.elements() {
                ensure!(inside(rg.mul(x, a)) && inside(rg.mul(a, x)), "{text}: not absorbing");
            }
        }
    }
    for id in ["thm-T2", "thm-T2-3group", "thm-exp2", "thm-2-group-ring"] {
        run_theorem(id)?;
    }
    Ok(format!("{} group rings; augmentation onto, its kernel an ideal", cases.len()))
}

fn criterion_8() -> Outcome {
    let rings = catalog_rings()?;
    for (text, r) in &rings {
        let o = Oracle::new(r);
        let sqrt = o.sqrt_jac();
        let nj = o.nil_plus_jac();
        ensure!(r.elements().all(|a| !nj[a] || sqrt[a]), "{text}: Nil + J not inside the radical of J");
        ensure!(
            r.elements().all(|a| !(sqrt[a] && o.center[a]) || o.jac[a]),
            "{text}: a central element of the radical of J lies outside J"
        );
        let lib = r.radical_of_ideal(&r.jacobson()).map_err(|e| e.to_string())?;
        ensure!(lib.members() == Oracle::members(&sqrt).as_slice(), "{text}: library radical of J differs");
    }
    run_theorem("lemma-5.1")?;
    Ok(format!("{} rings, zero violations", rings.len()))
}

fn criterion_9() -> Outcome {
    let lattice = verifier().implication_lattice(&default_catalog());
    no_failures(&lattice)?;
    run_theorem("lemma-sum-two-unit")?;
    let rings = catalog_rings()?;
    let mut pairs = 0usize;
    for (text, r) in &rings {
        let o = Oracle::new(r);
        if !o.two_unj() {
            continue;
        }
        let units = Oracle::members(&o.units);
        for &u in &units {
            let sq = r.mul(u, u);
            for &v in &units {
                ensure!(r.add(sq, v) != r.one(), "{text}: u^2 + v = 1 at u={u}, v={v}");
                pairs += 1;
            }
        }
    }
    Ok(format!("lattice holds on {} rings; {pairs} unit pairs checked", lattice.results.len()))
}

fn criterion_10() -> Outcome {
    const EXTRA: &[&str] = &[
        "Z5", "Z7", "Z12", "GF(16)", "GF(25)", "GF(27)", "Prod(Z4, Z2)", "PolyMod(Z4, 2)", "TrivExt(Z6)",
        "MoritaTriv(Z2, Z3)", "GroupRing(Z2, S3)", "Ks(Z3, s=1)", "FM(2, Z2, s=0)", "SkewPolyMod(GF(4), 3, alpha=id)",
    ];
    let mut texts: Vec<String> = default_catalog().iter().map(|e| e.text()).collect();
    texts.extend(EXTRA.iter().map(|s| s.to_string()));
    let mut small = 0;
    for text in &texts {
        let r = build(text)?;
        if r.order() > 64 {
            continue;
        }
        let oracle = Oracle::members(&Oracle::new(&r).units);
        ensure!(r.units().members() == oracle.as_slice(), "{text}: units differ from the oracle");
        ensure!(r.units_by_inverse_search().members() == oracle.as_slice(), "{text}: inverse search differs");
        small += 1;
    }

    let mut pairs = 0;
    for base in ["Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "GF(4)", "PolyMod(Z2, 2)"] {
        for s in build(base)?.center().iter() {
            let fm = build(&format!("FM(2, {base}, s={s})"))?;
            let ks = build(&format!("Ks({base}, s={s})"))?;
            ensure!(predicate_table(&fm) == predicate_table(&ks), "{base}, s={s}: tables differ");
            pairs += 1;
        }
    }

    let budget = Budget::default();
    let mut morita = 0;
    for (a, c, regular) in [
        ("Z2", "Z2", true),
        ("Z3", "Z3", true),
        ("Z2", "GF(4)", false),
        ("Z2", "Z3", false),
        ("Z4", "Z2", false),
    ] {
        let (a, c) = (build(a)?, build(c)?);
        let (m, n) = if regular {
            (Bimodule::regular(&a), Bimodule::regular(&c))
        } else {
            (Bimodule::zero(&a, &c), Bimodule::zero(&c, &a))
        };
        let mt = trivial_morita(&m, &n, &budget).map_err(|e| e.to_string())?;
        let ab = Arc::new(product(&[&a, &c], &budget).map_err(|e| e.to_string())?);
        let sum = Bimodule::pair_sum(&m, &n, &ab).map_err(|e| e.to_string())?;
        let ext = trivial_extension(&sum, &budget).map_err(|e| e.to_string())?;
        ensure!(predicate_table(&mt) == predicate_table(&ext), "{} vs {}", mt.label(), ext.label());
        morita += 1;
    }
    Ok(format!(
        "units agree on {small} rings; {pairs} FM/Ks pairs and {morita} Morita pairs share predicate tables"
    ))
}

const GROUPS: &[&str] = &[
    "C1", "C2", "C3", "C4", "C8", "C9", "C2xC2", "C2xC2xC2", "C3xC3", "S3", "D4", "Q8",
];
const PRIMES: &[u64] = &[2, 3, 5, 7, 11, 13];

fn endo() -> impl Strategy<Value = EndoName> {
    prop_oneof![Just(EndoName::Id), Just(EndoName::Frobenius)]
}

fn any_expr() -> impl Strategy<Value = RingExpr> {
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

/// Canonical text with blanks and tabs scattered around the punctuation.
fn respace(text: &str, gaps: &[u8]) -> String {
    let mut out = String::new();
    let mut k = 0;
    let mut gap = |out: &mut String| {
        let g = gaps.get(k).copied().unwrap_or(0);
        k += 1;
        for _ in 0..g % 3 {
            out.push(if g % 2 == 0 { ' ' } else { '\t' });
        }
    };
    gap(&mut out);
    for c in text.chars() {
        match c {
            ' ' => {}
            '(' | ')' | ',' | '=' => {
                gap(&mut out);
                out.push(c);
                gap(&mut out);
            }
            _ => out.push(c),
        }
    }
    gap(&mut out);
    out
}

fn criterion_11() -> Outcome {
    let catalog = default_catalog();
    for e in &catalog {
        let text = format(&e.expr);
        let back = parse(&text).map_err(|err| format!("{text}: {err}"))?;
        ensure!(back == e.expr, "{text}: reparse differs");
        ensure!(format(&back) == text, "{text}: format is not stable");
    }
    let config = RunnerConfig {
        cases: 1000,
        failure_persistence: None,
        ..RunnerConfig::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let strategy = (any_expr(), prop::collection::vec(any::<u8>(), 0..200));
    runner
        .run(&strategy, |(e, gaps)| {
            let text = format(&e);
            let back = parse(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
            prop_assert_eq!(&back, &e);
            let spaced = respace(&text, &gaps);
            let again = parse(&spaced).map_err(|err| TestCaseError::fail(format!("{spaced:?}: {err}")))?;
            prop_assert_eq!(again, e);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    let rings = catalog_rings()?;
    Ok(format!("{} catalog entries round-trip and evaluate; 1000 fuzz cases", rings.len()))
}

fn criterion_12() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(["verify", "--all", "--json"])
        .env_remove("RINGLAB_MAX_ORDER")
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.code() == Some(0), "exit status {:?}", out.status.code());
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let (mut theorems, mut results, mut skips) = (0, 0, 0);
    for line in text.lines() {
        let report: Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        theorems += 1;
        for res in report["results"].as_array().ok_or("results missing")? {
            results += 1;
            let name = format!("{} on {}", report["theorem"], res["ring"]);
            ensure!(res["status"] != "fail", "{name} fails");
            if res["status"] == "skip" {
                skips += 1;
                ensure!(res["note"].as_str().is_some_and(|n| !n.is_empty()), "{name} skipped without a reason");
            }
        }
    }
    ensure!(theorems > 0, "no reports printed");
    Ok(format!("{theorems} theorems, {results} outcomes, 0 fail, {skips} skips with reasons"))
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 12] = [
        ("Z3 and Z7 analysis", criterion_1, secs(1)),
        ("field scan", criterion_2, secs(1)),
        ("2x2 matrix rings fail with a revalidated witness", criterion_3, secs(5)),
        ("semisimple products", criterion_4, secs(10)),
        ("regular / tripotent equivalences", criterion_5, secs(30)),
        ("construction biconditionals", criterion_6, secs(120)),
        ("group rings", criterion_7, secs(120)),
        ("Nil + J inside the radical of J", criterion_8, secs(30)),
        ("implication lattice and u^2 + v != 1", criterion_9, secs(60)),
        ("oracle equivalences", criterion_10, secs(60)),
        ("DSL round trip", criterion_11, secs(30)),
        ("ringlab verify --all", criterion_12, secs(300)),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut passed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if took < *limit {
                Ok(detail)
            } else {
                Err(format!("{detail}; took {took:.1?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(detail) => {
                passed += 1;
                println!("[PASS] criterion {}: {name}: {detail} ({took:.2?})", i + 1);
            }
            Err(why) => println!("[FAIL] criterion {}: {name}: {why} ({took:.2?})", i + 1),
        }
    }
    println!("{passed}/{} criteria passed", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
