use std::sync::Arc;

use super::{fresh_verdict, Evidence, Outcome, Verifier};
use crate::dsl::{parse, RingExpr};
use crate::groups::FiniteGroup;
use crate::predicates::{central_primitive_idempotents, Predicate};
use crate::ring::{ElementSet, FiniteRing, Provenance};

/// Ideal enumeration is attempted only up to this ring order and ideal count.
pub(crate) const IDEAL_ORDER_LIMIT: usize = 256;
pub(crate) const IDEAL_COUNT_LIMIT: usize = 256;

/// Cached predicate check whose failure is reported inside `name`.
pub(crate) fn pred(v: &Verifier, ring: &FiniteRing, name: &str, p: Predicate) -> Result<(), Evidence> {
    v.verdict(ring, p)
        .map_err(|c| Evidence::counterexample(ring, name, p, &c))
}

/// Uncached variant for rings whose labels are not unique.
pub(crate) fn pred_fresh(ring: &FiniteRing, name: &str, p: Predicate) -> Result<(), Evidence> {
    fresh_verdict(ring, p).map_err(|c| Evidence::counterexample(ring, name, p, &c))
}

pub(crate) fn quotient_name(text: &str) -> String {
    format!("{text}/J")
}

/// `R/J(R)` of a subject ring.
pub(crate) fn radical_quotient(ring: &FiniteRing) -> Arc<FiniteRing> {
    ring.jacobson_quotient().ring.clone()
}

/// A catalog ring by text.
pub(crate) fn named(v: &Verifier, text: &str) -> (RingExpr, Arc<FiniteRing>) {
    let expr = parse(text).expect("fixed expressions parse");
    let ring = v.eval(&expr).expect("fixed rings build within any budget");
    (expr, ring)
}

/// Orders of the indecomposable blocks `eR` for the central primitive
/// idempotents `e`, smallest first.
pub(crate) fn block_orders(ring: &FiniteRing) -> Vec<usize> {
    let mut out: Vec<usize> = central_primitive_idempotents(ring)
        .into_iter()
        .map(|e| {
            let mut block: Vec<usize> = ring.elements().map(|r| ring.mul(e, r)).collect();
            block.sort_unstable();
            block.dedup();
            block.len()
        })
        .collect();
    out.sort_unstable();
    out
}

pub(crate) fn join_orders(orders: &[usize]) -> String {
    orders
        .iter()
        .map(|o| o.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// The integer `k·1` lies in `J(R)`.
pub(crate) fn integer_in_radical(ring: &FiniteRing, k: i64) -> bool {
    ring.jacobson().contains(ring.integer(k))
}

/// Central nilpotent elements, in index order.
pub(crate) fn central_nilpotents(ring: &FiniteRing) -> Vec<usize> {
    ring.nilpotents()
        .iter()
        .filter(|&a| ring.is_central(a))
        .collect()
}

/// Base ring and group of a group-ring subject.
pub(crate) fn group_ring_parts(ring: &FiniteRing) -> Option<(Arc<FiniteRing>, Arc<FiniteGroup>)> {
    match ring.provenance() {
        Provenance::GroupRing(info) => Some((info.base.clone(), info.group.clone())),
        _ => None,
    }
}

/// Index in `RG` of the element with coefficient `coeffs[h]` at group
/// element `embedding[h]` and zero elsewhere.
pub(crate) fn group_ring_index(base_order: usize, coeffs: &[usize], embedding: &[usize]) -> usize {
    coeffs
        .iter()
        .zip(embedding)
        .map(|(&c, &g)| c * base_order.pow(g as u32))
        .sum()
}

/// Every two-sided ideal, or a skip outcome explaining why enumeration was
/// not attempted.
pub(crate) fn ideals(ring: &FiniteRing) -> Result<Vec<ElementSet<'_>>, Outcome> {
    if ring.order() > IDEAL_ORDER_LIMIT {
        return Err(Outcome::skip(format!(
            "ideal enumeration is limited to rings of order at most {IDEAL_ORDER_LIMIT}"
        )));
    }
    ring.all_ideals(IDEAL_COUNT_LIMIT).ok_or_else(|| {
        Outcome::skip(format!("more than {IDEAL_COUNT_LIMIT} ideals; enumeration abandoned"))
    })
}

pub(crate) fn describe_ideal(ring: &FiniteRing, ideal: &ElementSet<'_>) -> String {
    let labels: Vec<String> = ideal.iter().map(|x| ring.element_label(x)).collect();
    if labels.len() <= 8 {
        format!("I = {{{}}}", labels.join(", "))
    } else {
        format!("I of order {}", labels.len())
    }
}

/// Where a derived ring comes from.
pub(crate) enum Source {
    /// Built through the evaluator; its 2-UNJ verdict is memoized by text.
    Expr(RingExpr),
    /// Built directly, or the reason it could not be.
    Built(Result<Arc<FiniteRing>, String>),
}

/// A derived ring with the truth value 2-UNJ must take on it.
pub(crate) struct Case {
    pub text: String,
    pub source: Source,
    /// `Err` carries the witness that makes the expected value false.
    pub expected: Result<(), Evidence>,
}

impl Case {
    pub(crate) fn dsl(expr: RingExpr, expected: Result<(), Evidence>) -> Self {
        Case {
            text: expr.to_string(),
            source: Source::Expr(expr),
            expected,
        }
    }
}

/// Compares 2-UNJ of every derived ring with its expected value.
pub(crate) fn agree_on_2unj(v: &Verifier, cases: Vec<Case>, lead: &str) -> Outcome {
    let mut checked = Vec::new();
    let mut skipped = Vec::new();
    for case in cases {
        let actual = match case.source {
            Source::Expr(expr) => v.derived_2unj(&expr),
            Source::Built(ring) => ring.map(|r| pred(v, &r, &case.text, Predicate::TwoUNJ)),
        };
        let actual = match actual {
            Ok(a) => a,
            Err(reason) => {
                skipped.push(format!("{} ({reason})", case.text));
                continue;
            }
        };
        match (actual, case.expected) {
            (Ok(()), Ok(())) | (Err(_), Err(_)) => checked.push(case.text),
            (Err(ev), Ok(())) => {
                return Outcome::fail(ev).note(format!("{} is not 2UNJ although {lead} predicts it", case.text))
            }
            (Ok(()), Err(ev)) => {
                return Outcome::fail(ev).note(format!("{} is 2UNJ although {lead} predicts it is not", case.text))
            }
        }
    }
    if checked.is_empty() {
        return Outcome::skip(format!("no derived ring could be built: {}", skipped.join(", ")));
    }
    let mut note = format!("2UNJ agrees with {lead} on {}", checked.join(", "));
    if !skipped.is_empty() {
        note.push_str(&format!("; skipped {}", skipped.join(", ")));
    }
    Outcome::pass().note(note)
}

/// One side of an equivalence: a conjunction of facts.
pub(crate) enum Conjunct<'a> {
    Holds(&'a FiniteRing, String, Predicate),
    Fact(&'static str, bool),
}

pub(crate) struct Statement<'a> {
    pub name: &'static str,
    pub parts: Vec<Conjunct<'a>>,
}

impl Statement<'_> {
    /// `Ok` when every conjunct holds, else the first failing one.
    fn evaluate(&self, v: &Verifier) -> Result<(), (String, Option<Evidence>)> {
        for part in &self.parts {
            match part {
                Conjunct::Holds(ring, name, p) => {
                    if let Err(ev) = pred(v, ring, name, *p) {
                        return Err((format!("{p} fails in {name}"), Some(ev)));
                    }
                }
                Conjunct::Fact(what, false) => return Err((format!("{what} fails"), None)),
                Conjunct::Fact(_, true) => {}
            }
        }
        Ok(())
    }
}

/// Passes when all statements have the same truth value.
pub(crate) fn all_equivalent(v: &Verifier, statements: &[Statement<'_>]) -> Outcome {
    let values: Vec<_> = statements.iter().map(|s| s.evaluate(v)).collect();
    let truth: Vec<bool> = values.iter().map(|r| r.is_ok()).collect();
    if truth.iter().all(|&t| t == truth[0]) {
        let all = if truth[0] { "all hold" } else { "all fail" };
        let names: Vec<&str> = statements.iter().map(|s| s.name).collect();
        return Outcome::pass().note(format!("{} {all}", names.join(", ")));
    }
    let yes = statements[truth.iter().position(|&t| t).expect("some statement holds")].name;
    let no_at = truth.iter().position(|&t| !t).expect("some statement fails");
    let (why, ev) = values[no_at].clone().expect_err("statement fails");
    let note = format!("{yes} holds but {} does not: {why}", statements[no_at].name);
    match ev {
        Some(ev) => Outcome::fail(ev).note(note),
        None => Outcome {
            status: super::Status::Fail,
            witness: None,
            note: Some(note),
        },
    }
}

/// Passes when `conclusion` holds or `hypothesis` does not.
pub(crate) fn implication(
    hypothesis: Result<(), String>,
    conclusion: impl FnOnce() -> Result<(), Evidence>,
    ok_note: &str,
) -> Outcome {
    match hypothesis {
        Err(reason) => Outcome::skip(format!("hypothesis unmet: {reason}")),
        Ok(()) => match conclusion() {
            Ok(()) => Outcome::pass().note(ok_note),
            Err(ev) => Outcome::fail(ev),
        },
    }
}
