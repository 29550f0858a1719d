use serde::Serialize;

use super::FiniteRing;

/// Outcome of an exhaustive axiom scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Validation {
    Ok,
    /// Too large to scan, but built structurally.
    OkByConstruction,
    /// Too large to scan and given by raw tables.
    BudgetExceeded { work: u128, budget: u128 },
    Violation { axiom: String, witness: Vec<usize> },
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        matches!(self, Validation::Ok | Validation::OkByConstruction)
    }
}

fn violation(axiom: &str, witness: &[usize]) -> Validation {
    Validation::Violation {
        axiom: axiom.to_string(),
        witness: witness.to_vec(),
    }
}

impl FiniteRing {
    /// Scans every ring axiom when `order³ ≤ budget`, returning the first
    /// violated axiom with its witnessing elements.
    pub fn validate(&self, budget: u128) -> Validation {
        let n = self.order();
        let work = (n as u128).pow(3);
        if work > budget {
            return if self.is_structured() {
                Validation::OkByConstruction
            } else {
                Validation::BudgetExceeded { work, budget }
            };
        }
        let (zero, one) = (self.zero(), self.one());
        if n > 1 && zero == one {
            return violation("identity differs from zero", &[one]);
        }
        for a in self.elements() {
            if self.add(a, zero) != a || self.add(zero, a) != a {
                return violation("additive identity", &[a]);
            }
            if self.add(a, self.neg(a)) != zero || self.add(self.neg(a), a) != zero {
                return violation("additive inverse", &[a]);
            }
            if self.mul(a, one) != a || self.mul(one, a) != a {
                return violation("multiplicative identity", &[a]);
            }
            for b in self.elements() {
                if self.add(a, b) != self.add(b, a) {
                    return violation("additive commutativity", &[a, b]);
                }
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return violation("additive associativity", &[a, b, c]);
                    }
                }
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    let bc = self.add(b, c);
                    if self.mul(a, bc) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return violation("left distributivity", &[a, b, c]);
                    }
                    if self.mul(bc, a) != self.add(self.mul(b, a), self.mul(c, a)) {
                        return violation("right distributivity", &[a, b, c]);
                    }
                }
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return violation("multiplicative associativity", &[a, b, c]);
                    }
                }
            }
        }
        Validation::Ok
    }
}
