//! Executable checks of ring-theoretic claims over catalogs of rings.
//!
//! Every check runs once per catalog entry (plus a few fixed extra rings per
//! claim) and reports pass, fail with a witness, or skip with a reason.

mod catalog;
mod support;
mod theorems;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dsl::{parse, CatalogEntry, Config, EvalError, Evaluator, RingExpr};
use crate::predicates::{check_witness, evaluate, Certificate, Predicate, PredicateVerdict, Witness};
use crate::ring::FiniteRing;

pub use catalog::{default_catalog, DEFAULT_CATALOG};
pub use theorems::{registry, theorem_ids, TheoremCheck};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

/// An element named in a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementRef {
    pub role: String,
    pub index: usize,
    pub label: String,
}

/// Elements of a named ring that demonstrate (or refute) a claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    /// Expression text, or a derived name such as `R/J`, of the ring the
    /// elements live in.
    pub ring: String,
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicate: Option<Predicate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub elements: Vec<ElementRef>,
}

impl Evidence {
    pub(crate) fn new(name: impl Into<String>, claim: impl Into<String>) -> Self {
        Evidence {
            ring: name.into(),
            claim: claim.into(),
            predicate: None,
            certificate: None,
            elements: Vec::new(),
        }
    }

    pub(crate) fn element(mut self, ring: &FiniteRing, role: &str, index: usize) -> Self {
        self.elements.push(ElementRef {
            role: role.to_string(),
            index,
            label: ring.element_label(index),
        });
        self
    }

    /// The failing element of predicate `p` in `ring`.
    pub(crate) fn counterexample(ring: &FiniteRing, name: impl Into<String>, p: Predicate, cert: &Certificate) -> Self {
        let mut ev = Evidence::new(name, format!("{p} fails")).element(ring, "element", cert.element);
        for (i, &x) in cert.parts.iter().enumerate() {
            ev = ev.element(ring, &format!("part {}", i + 1), x);
        }
        ev.predicate = Some(p);
        ev.certificate = Some(cert.clone());
        ev
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingResult {
    pub ring: String,
    pub status: Status,
    pub witness: Option<Evidence>,
    /// Always present for skips.
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: &'static str,
    pub anchor: &'static str,
    pub results: Vec<RingResult>,
    pub aggregate: Status,
    /// Wall time in milliseconds; `None` when timing is disabled.
    pub ms: Option<u64>,
}

impl TheoremReport {
    pub fn count(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem `{0}`")]
pub struct UnknownTheorem(pub String);

/// Per-ring outcome produced by a check.
#[derive(Debug, Clone)]
pub(crate) struct Outcome {
    status: Status,
    witness: Option<Evidence>,
    note: Option<String>,
}

impl Outcome {
    pub(crate) fn pass() -> Self {
        Outcome {
            status: Status::Pass,
            witness: None,
            note: None,
        }
    }

    pub(crate) fn skip(reason: impl Into<String>) -> Self {
        Outcome {
            status: Status::Skip,
            witness: None,
            note: Some(reason.into()),
        }
    }

    pub(crate) fn fail(witness: Evidence) -> Self {
        Outcome {
            status: Status::Fail,
            witness: Some(witness),
            note: None,
        }
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub(crate) fn witness(mut self, witness: Option<Evidence>) -> Self {
        self.witness = witness;
        self
    }

    pub(crate) fn note_text(&self) -> Option<String> {
        self.note.clone()
    }

    pub(crate) fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// A catalog ring handed to a check.
pub(crate) struct Subject<'a> {
    pub text: &'a str,
    pub expr: &'a RingExpr,
    pub ring: &'a Arc<FiniteRing>,
}

type Verdict = Result<(), Certificate>;

/// 2-UNJ of a derived expression with its witness, or why it was not built.
type DerivedVerdict = Result<Result<(), Evidence>, String>;

/// Runs checks, sharing constructed rings and predicate verdicts between
/// them.
pub struct Verifier {
    evaluator: Evaluator,
    verdicts: Mutex<HashMap<(String, Predicate), Verdict>>,
    derived: Mutex<HashMap<String, DerivedVerdict>>,
    timing: bool,
}

impl Verifier {
    pub fn new(config: Config) -> Self {
        Verifier {
            evaluator: Evaluator::new(config),
            verdicts: Mutex::new(HashMap::new()),
            derived: Mutex::new(HashMap::new()),
            timing: true,
        }
    }

    /// Disables wall-time measurement so reports are byte-for-byte
    /// reproducible.
    pub fn without_timing(mut self) -> Self {
        self.timing = false;
        self
    }

    pub fn evaluator(&self) -> &Evaluator {
        &self.evaluator
    }

    pub fn run_theorem(&self, id: &str, catalog: &[CatalogEntry]) -> Result<TheoremReport, UnknownTheorem> {
        let check = registry()
            .iter()
            .find(|t| t.id == id)
            .ok_or_else(|| UnknownTheorem(id.to_string()))?;
        Ok(self.run_check(check, catalog))
    }

    /// One report per registered check, in registry order.
    pub fn run_all(&self, catalog: &[CatalogEntry]) -> Vec<TheoremReport> {
        registry()
            .par_iter()
            .map(|check| self.run_check(check, catalog))
            .collect()
    }

    /// Every edge of the UU/UJ/UNJ/2-UU/2-UJ/2-UNJ diagram as a material
    /// implication on each catalog ring.
    pub fn implication_lattice(&self, catalog: &[CatalogEntry]) -> TheoremReport {
        self.run_theorem("implication-lattice", catalog)
            .expect("the lattice check is registered")
    }

    fn run_check(&self, check: &TheoremCheck, catalog: &[CatalogEntry]) -> TheoremReport {
        let start = Instant::now();
        let mut subjects: Vec<RingExpr> = catalog.iter().map(|e| e.expr.clone()).collect();
        for extra in (check.extras)() {
            let expr = parse(&extra).expect("extra rings are valid expressions");
            if !subjects.contains(&expr) {
                subjects.push(expr);
            }
        }
        let results: Vec<RingResult> = subjects
            .par_iter()
            .map(|expr| {
                let text = expr.to_string();
                let outcome = match self.evaluator.eval(expr) {
                    Ok(ring) => (check.run)(
                        self,
                        &Subject {
                            text: &text,
                            expr,
                            ring: &ring,
                        },
                    ),
                    Err(e) => Outcome::skip(eval_skip_reason(&e)),
                };
                RingResult {
                    ring: text,
                    status: outcome.status,
                    witness: outcome.witness,
                    note: outcome.note,
                }
            })
            .collect();
        let aggregate = if results.iter().any(|r| r.status == Status::Fail) {
            Status::Fail
        } else if results.iter().any(|r| r.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Skip
        };
        TheoremReport {
            theorem: check.id,
            anchor: check.anchor,
            results,
            aggregate,
            ms: self.timing.then(|| start.elapsed().as_millis() as u64),
        }
    }

    pub(crate) fn eval(&self, expr: &RingExpr) -> Result<Arc<FiniteRing>, EvalError> {
        self.evaluator.eval(expr)
    }

    /// Memoized verdict, keyed by the ring's label. Only rings with unique
    /// labels (expression rings and their `R/J`) go through here.
    pub(crate) fn verdict(&self, ring: &FiniteRing, p: Predicate) -> Verdict {
        let key = (ring.label().to_string(), p);
        if let Some(v) = self.verdicts.lock().expect("verdict lock").get(&key) {
            return v.clone();
        }
        let v = fresh_verdict(ring, p);
        self.verdicts
            .lock()
            .expect("verdict lock")
            .insert(key, v.clone());
        v
    }

    /// 2-UNJ of a derived expression, memoized by canonical text so large
    /// constructions shared between checks are built once.
    pub(crate) fn derived_2unj(&self, expr: &RingExpr) -> DerivedVerdict {
        let text = expr.to_string();
        if let Some(v) = self.derived.lock().expect("derived lock").get(&text) {
            return v.clone();
        }
        let v = match self.evaluator.eval(expr) {
            Ok(ring) => Ok(self
                .verdict(&ring, Predicate::TwoUNJ)
                .map_err(|c| Evidence::counterexample(&ring, text.as_str(), Predicate::TwoUNJ, &c))),
            Err(e) if e.is_budget() => Err("over budget".to_string()),
            Err(e) => Err(e.source.to_string()),
        };
        self.derived
            .lock()
            .expect("derived lock")
            .insert(text, v.clone());
        v
    }

    pub(crate) fn holds(&self, ring: &FiniteRing, p: Predicate) -> bool {
        self.verdict(ring, p).is_ok()
    }

    /// Re-checks a witness inside the ring it names. Predicate witnesses are
    /// replayed through the predicate checker; element witnesses are
    /// checked for range and label.
    pub fn revalidate(&self, evidence: &Evidence) -> Result<(), String> {
        let base = evidence.ring.strip_suffix("/J");
        let expr = parse(base.unwrap_or(&evidence.ring)).map_err(|e| e.to_string())?;
        let mut ring = self.evaluator.eval(&expr).map_err(|e| e.to_string())?;
        if base.is_some() {
            ring = ring.jacobson_quotient().ring.clone();
        }
        for e in &evidence.elements {
            ring.check_element(e.index).map_err(|e| e.to_string())?;
            if ring.element_label(e.index) != e.label {
                return Err(format!("label of element {} does not match", e.index));
            }
        }
        if let (Some(p), Some(cert)) = (evidence.predicate, &evidence.certificate) {
            let verdict = PredicateVerdict {
                predicate: p,
                holds: false,
                witness: Witness::Counterexample {
                    counterexample: cert.clone(),
                },
                note: p.note(),
            };
            check_witness(&ring, &verdict)?;
        }
        Ok(())
    }
}

pub(crate) fn fresh_verdict(ring: &FiniteRing, p: Predicate) -> Verdict {
    let v = evaluate(ring, p);
    match v.counterexample() {
        Some(c) => Err(c.clone()),
        None => Ok(()),
    }
}

pub(crate) fn eval_skip_reason(e: &EvalError) -> String {
    if e.is_budget() {
        format!("over budget: {e}")
    } else {
        format!("construction failed: {e}")
    }
}
