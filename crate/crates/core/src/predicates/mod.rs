//! Ring-class predicates with checkable witnesses.
//!
//! A positive verdict carries one certificate per quantified element (for
//! example the decomposition `u² = 1 + q + j` of every unit); a negative
//! verdict carries the element on which the defining condition fails.
//! Searches run in index order, so every certificate is the least one.

mod check;
mod decide;
mod structure;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::ring::FiniteRing;

pub use check::check_witness;
pub use structure::{
    central_primitive_idempotents, find_matrix_units, idempotents_lift_mod, unit_square_decompose,
    LiftingVerdict, MatrixUnits,
};

macro_rules! predicates {
    ($($variant:ident => $id:literal,)*) => {
        /// A ring class with a stable identifier.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Predicate {
            $($variant,)*
        }

        impl Predicate {
            pub const ALL: &'static [Predicate] = &[$(Predicate::$variant,)*];

            pub fn id(self) -> &'static str {
                match self {
                    $(Predicate::$variant => $id,)*
                }
            }
        }

        impl FromStr for Predicate {
            type Err = UnknownPredicate;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($id => Ok(Predicate::$variant),)*
                    _ => Err(UnknownPredicate(s.to_string())),
                }
            }
        }
    };
}

predicates! {
    UJ => "UJ",
    UU => "UU",
    UNJ => "UNJ",
    TwoUJ => "2UJ",
    TwoUU => "2UU",
    TwoUNJ => "2UNJ",
    Boolean => "boolean",
    Tripotent => "tripotent",
    Potent => "potent",
    Reduced => "reduced",
    Abelian => "abelian",
    Regular => "regular",
    StronglyRegular => "strongly-regular",
    UnitRegular => "unit-regular",
    PiRegular => "pi-regular",
    StronglyPiRegular => "strongly-pi-regular",
    Clean => "clean",
    JClean => "J-clean",
    SemiTripotent => "semi-tripotent",
    StronglyTwoNilClean => "strongly-2-nil-clean",
    Exchange => "exchange",
    Semiregular => "semiregular",
    Semipotent => "semipotent",
    DedekindFinite => "dedekind-finite",
    Local => "local",
    Semisimple => "semisimple",
    TwoPrimal => "2-primal",
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown predicate `{0}`")]
pub struct UnknownPredicate(pub String);

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Predicate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

impl Predicate {
    /// Remarks attached to every verdict of this predicate.
    pub fn note(self) -> Option<&'static str> {
        match self {
            Predicate::Potent => Some("definition adopted: every a has a^n = a for some n >= 2"),
            Predicate::StronglyTwoNilClean => Some(
                "definition adopted: a = e + f + b with e, f idempotent, b nilpotent, pairwise commuting",
            ),
            Predicate::DedekindFinite => Some("automatic for finite rings; checked by exhaustive pair scan"),
            Predicate::TwoPrimal => Some("prime radical taken as J(R), which is exact for finite rings"),
            Predicate::Semipotent => Some("checked on principal right and left ideals aR, Ra for a outside J(R)"),
            _ => None,
        }
    }
}

/// Evidence for one quantified element, or the failing element itself.
///
/// `parts` and `exponent` are interpreted per predicate; see
/// [`check_witness`] for the exact identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub element: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tag: Option<&'static str>,
}

impl Certificate {
    pub fn new(element: usize, parts: Vec<usize>) -> Self {
        Certificate {
            element,
            parts,
            exponent: None,
            tag: None,
        }
    }

    pub fn element(element: usize) -> Self {
        Certificate::new(element, Vec::new())
    }

    pub fn with_exponent(mut self, n: u64) -> Self {
        self.exponent = Some(n);
        self
    }

    pub fn with_tag(mut self, tag: &'static str) -> Self {
        self.tag = Some(tag);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// One certificate per quantified element.
    Certificates { certificates: Vec<Certificate> },
    /// The element on which the condition fails.
    Counterexample { counterexample: Certificate },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateVerdict {
    pub predicate: Predicate,
    pub holds: bool,
    pub witness: Witness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl PredicateVerdict {
    fn positive(predicate: Predicate, certificates: Vec<Certificate>) -> Self {
        PredicateVerdict {
            predicate,
            holds: true,
            witness: Witness::Certificates { certificates },
            note: predicate.note(),
        }
    }

    fn negative(predicate: Predicate, counterexample: Certificate) -> Self {
        PredicateVerdict {
            predicate,
            holds: false,
            witness: Witness::Counterexample { counterexample },
            note: predicate.note(),
        }
    }

    /// The failing element of a negative verdict.
    pub fn counterexample(&self) -> Option<&Certificate> {
        match &self.witness {
            Witness::Counterexample { counterexample } => Some(counterexample),
            Witness::Certificates { .. } => None,
        }
    }

    pub fn certificates(&self) -> &[Certificate] {
        match &self.witness {
            Witness::Certificates { certificates } => certificates,
            Witness::Counterexample { .. } => &[],
        }
    }
}

/// Decides `predicate` on `ring`.
pub fn evaluate(ring: &FiniteRing, predicate: Predicate) -> PredicateVerdict {
    decide::decide(ring, predicate)
}

/// Verdicts for every predicate, in [`Predicate::ALL`] order.
pub fn evaluate_all(ring: &FiniteRing) -> Vec<PredicateVerdict> {
    // Shared caches are filled up front so parallel workers do not race to
    // compute them.
    let _ = (ring.units(), ring.jacobson(), ring.nilpotents(), ring.idempotents(), ring.center());
    let _ = ring.jacobson_quotient();
    Predicate::ALL
        .par_iter()
        .map(|&p| evaluate(ring, p))
        .collect()
}

/// The truth value of every predicate, in [`Predicate::ALL`] order.
pub type PredicateTable = Vec<(Predicate, bool)>;

pub fn predicate_table(ring: &FiniteRing) -> PredicateTable {
    evaluate_all(ring)
        .into_iter()
        .map(|v| (v.predicate, v.holds))
        .collect()
}

/// Shorthand for the truth value alone.
pub fn holds(ring: &FiniteRing, predicate: Predicate) -> bool {
    evaluate(ring, predicate).holds
}
