//! Serializable analysis output.

use serde::Serialize;

use ringlab_core::predicates::{evaluate_all, Certificate, Predicate, PredicateVerdict};
use ringlab_core::{ElementSet, FiniteRing};

/// Member lists longer than this are cut short in reports.
pub const DISPLAY_LIMIT: usize = 32;

#[derive(Debug, Clone, Serialize)]
pub struct Element {
    pub index: usize,
    pub label: String,
}

impl Element {
    pub fn new(ring: &FiniteRing, index: usize) -> Self {
        Element {
            index,
            label: ring.element_label(index),
        }
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.label == self.index.to_string() {
            write!(f, "{}", self.index)
        } else {
            write!(f, "{} = {}", self.index, self.label)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SetSummary {
    pub size: usize,
    pub members: Vec<Element>,
    pub truncated: bool,
}

impl SetSummary {
    fn new(ring: &FiniteRing, set: &ElementSet<'_>) -> Self {
        SetSummary {
            size: set.len(),
            members: set.iter().take(DISPLAY_LIMIT).map(|x| Element::new(ring, x)).collect(),
            truncated: set.len() > DISPLAY_LIMIT,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Sets {
    pub units: SetSummary,
    pub jacobson: SetSummary,
    pub nilpotents: SetSummary,
    pub idempotents: SetSummary,
    pub center: SetSummary,
}

/// The failing element of a negative verdict, with its parts.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub element: Element,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<Element>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tag: Option<&'static str>,
}

impl Counterexample {
    pub fn new(ring: &FiniteRing, c: &Certificate) -> Self {
        Counterexample {
            element: Element::new(ring, c.element),
            parts: c.parts.iter().map(|&x| Element::new(ring, x)).collect(),
            exponent: c.exponent,
            tag: c.tag,
        }
    }
}

impl std::fmt::Display for Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.element)?;
        if !self.parts.is_empty() {
            let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, " (parts: {})", parts.join(", "))?;
        }
        if let Some(tag) = self.tag {
            write!(f, " [{tag}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PredicateEntry {
    pub id: Predicate,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// Per-element certificates of a positive verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Vec<Certificate>>,
}

impl PredicateEntry {
    pub fn new(ring: &FiniteRing, v: &PredicateVerdict, witnesses: bool) -> Self {
        PredicateEntry {
            id: v.predicate,
            holds: v.holds,
            note: v.note,
            counterexample: witnesses
                .then(|| v.counterexample().map(|c| Counterexample::new(ring, c)))
                .flatten(),
            certificates: (witnesses && v.holds).then(|| v.certificates().to_vec()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub ring: String,
    pub order: usize,
    pub commutative: bool,
    pub sets: Sets,
    pub predicates: Vec<PredicateEntry>,
}

impl AnalysisReport {
    pub fn new(ring: &FiniteRing, witnesses: bool) -> Self {
        let verdicts = evaluate_all(ring);
        AnalysisReport {
            ring: ring.label().to_string(),
            order: ring.order(),
            commutative: ring.is_commutative(),
            sets: Sets {
                units: SetSummary::new(ring, &ring.units()),
                jacobson: SetSummary::new(ring, &ring.jacobson()),
                nilpotents: SetSummary::new(ring, &ring.nilpotents()),
                idempotents: SetSummary::new(ring, &ring.idempotents()),
                center: SetSummary::new(ring, &ring.center()),
            },
            predicates: verdicts
                .iter()
                .map(|v| PredicateEntry::new(ring, v, witnesses))
                .collect(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("ring         {}\n", self.ring));
        out.push_str(&format!("order        {}\n", self.order));
        out.push_str(&format!("commutative  {}\n", self.commutative));
        let sets = [
            ("U", &self.sets.units),
            ("J", &self.sets.jacobson),
            ("Nil", &self.sets.nilpotents),
            ("Id", &self.sets.idempotents),
            ("C", &self.sets.center),
        ];
        for (name, s) in sets {
            let labels: Vec<String> = s.members.iter().map(|e| e.label.clone()).collect();
            let more = if s.truncated { ", ..." } else { "" };
            out.push_str(&format!("{:<6} {:<5} {{{}{more}}}\n", format!("|{name}|"), s.size, labels.join(", ")));
        }
        out.push_str("predicates\n");
        for p in &self.predicates {
            out.push_str(&format!("  {:<22} {}", p.id.id(), p.holds));
            if let Some(c) = &p.counterexample {
                out.push_str(&format!("   fails at {c}"));
            }
            out.push('\n');
        }
        let notes: Vec<_> = self.predicates.iter().filter_map(|p| p.note.map(|n| (p.id, n))).collect();
        if !notes.is_empty() {
            out.push_str("notes\n");
            for (id, n) in notes {
                out.push_str(&format!("  {id}: {n}\n"));
            }
        }
        out
    }
}
