use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::FiniteRing;
use crate::error::{Result, RingError};

/// What a subset of a ring stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SetRole {
    Units,
    Jacobson,
    Nil,
    Idempotents,
    Center,
    Ideal,
    RadicalOfIdeal,
    PrimeRadical,
    Generic,
}

/// Sorted member list plus a membership mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Subset {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Subset {
    pub(crate) fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subset { members, mask }
    }

    pub(crate) fn from_members(order: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = vec![false; order];
        for m in members {
            mask[m] = true;
        }
        Subset::from_mask(mask)
    }

    fn filter(order: usize, pred: impl FnMut(usize) -> bool) -> Self {
        Subset::from_mask((0..order).map(pred).collect())
    }
}

/// A subset of a ring's elements tagged with the role it plays.
#[derive(Clone)]
pub struct ElementSet<'r> {
    ring: &'r FiniteRing,
    subset: Arc<Subset>,
    role: SetRole,
}

impl fmt::Debug for ElementSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ElementSet")
            .field("ring", &self.ring.label())
            .field("role", &self.role)
            .field("members", &self.subset.members)
            .finish()
    }
}

impl PartialEq for ElementSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.subset.members == other.subset.members
    }
}

impl<'r> ElementSet<'r> {
    pub(crate) fn new(ring: &'r FiniteRing, subset: Arc<Subset>, role: SetRole) -> Self {
        ElementSet { ring, subset, role }
    }

    /// A set with the given members; out-of-range indices are rejected.
    pub fn from_members(
        ring: &'r FiniteRing,
        members: impl IntoIterator<Item = usize>,
        role: SetRole,
    ) -> Result<Self> {
        let members: Vec<usize> = members.into_iter().collect();
        for &m in &members {
            ring.check_element(m)?;
        }
        Ok(ElementSet::new(
            ring,
            Arc::new(Subset::from_members(ring.order(), members)),
            role,
        ))
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn role(&self) -> SetRole {
        self.role
    }

    pub fn with_role(mut self, role: SetRole) -> Self {
        self.role = role;
        self
    }

    pub fn members(&self) -> &[usize] {
        &self.subset.members
    }

    pub fn len(&self) -> usize {
        self.subset.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subset.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.subset.mask.get(a).copied().unwrap_or(false)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.subset.members.iter().copied()
    }

    pub fn is_subset_of(&self, other: &ElementSet<'_>) -> bool {
        self.iter().all(|a| other.contains(a))
    }

    /// Closed under addition and negation, and absorbing multiplication by
    /// every ring element on both sides.
    pub fn is_ideal(&self) -> bool {
        self.ideal_violation().is_none()
    }

    pub(crate) fn ideal_violation(&self) -> Option<String> {
        let r = self.ring;
        if !self.contains(r.zero()) {
            return Some("does not contain zero".into());
        }
        for a in self.iter() {
            if !self.contains(r.neg(a)) {
                return Some(format!("not closed under negation at {a}"));
            }
            for b in self.iter() {
                if !self.contains(r.add(a, b)) {
                    return Some(format!("not closed under addition at ({a}, {b})"));
                }
            }
            for x in r.elements() {
                if !self.contains(r.mul(x, a)) || !self.contains(r.mul(a, x)) {
                    return Some(format!("does not absorb multiplication at ({x}, {a})"));
                }
            }
        }
        None
    }
}

impl FiniteRing {
    fn cached<'r>(
        &'r self,
        cell: &std::sync::OnceLock<Arc<Subset>>,
        role: SetRole,
        compute: impl FnOnce() -> Subset,
    ) -> ElementSet<'r> {
        let subset = cell.get_or_init(|| Arc::new(compute())).clone();
        ElementSet::new(self, subset, role)
    }

    /// `u` is a unit iff left multiplication by `u` is injective. In a finite
    /// ring that already forces a two-sided inverse.
    pub fn units(&self) -> ElementSet<'_> {
        self.cached(&self.cache.units, SetRole::Units, || {
            let n = self.order();
            let mut stamp = vec![usize::MAX; n];
            Subset::filter(n, |u| {
                self.mul_row(u).iter().all(|&v| {
                    let v = v as usize;
                    if stamp[v] == u {
                        false
                    } else {
                        stamp[v] = u;
                        true
                    }
                })
            })
        })
    }

    /// Units by exhaustive search for a two-sided inverse. Kept as an
    /// independent check on [`FiniteRing::units`].
    pub fn units_by_inverse_search(&self) -> ElementSet<'_> {
        let one = self.one();
        let subset = Subset::filter(self.order(), |u| {
            self.elements()
                .any(|v| self.mul(u, v) == one && self.mul(v, u) == one)
        });
        ElementSet::new(self, Arc::new(subset), SetRole::Units)
    }

    pub fn is_unit(&self, u: usize) -> bool {
        self.units().contains(u)
    }

    pub fn inverse(&self, u: usize) -> Result<usize> {
        self.check_element(u)?;
        let one = self.one();
        self.mul_row(u)
            .iter()
            .position(|&v| v as usize == one)
            .filter(|&v| self.mul(v, u) == one)
            .ok_or(RingError::NotAUnit(u))
    }

    /// Elements whose power sequence reaches zero.
    pub fn nilpotents(&self) -> ElementSet<'_> {
        self.cached(&self.cache.nilpotents, SetRole::Nil, || {
            let zero = self.zero();
            Subset::filter(self.order(), |a| {
                self.power_orbit(a).powers.contains(&zero)
            })
        })
    }

    pub fn idempotents(&self) -> ElementSet<'_> {
        self.cached(&self.cache.idempotents, SetRole::Idempotents, || {
            Subset::filter(self.order(), |a| self.mul(a, a) == a)
        })
    }

    pub fn center(&self) -> ElementSet<'_> {
        self.cached(&self.cache.center, SetRole::Center, || {
            Subset::filter(self.order(), |a| {
                self.elements().all(|r| self.mul(a, r) == self.mul(r, a))
            })
        })
    }

    /// `a ∈ J(R)` iff `1 - ra` is a unit for every `r`.
    pub fn jacobson(&self) -> ElementSet<'_> {
        let units = self.units();
        self.cached(&self.cache.jacobson, SetRole::Jacobson, || {
            let one = self.one();
            Subset::filter(self.order(), |a| {
                self.elements()
                    .all(|r| units.contains(self.sub(one, self.mul(r, a))))
            })
        })
    }

    /// For finite rings the prime radical coincides with the Jacobson
    /// radical: J(R) is a nilpotent ideal and every prime ideal contains it.
    pub fn prime_radical(&self) -> ElementSet<'_> {
        self.jacobson().with_role(SetRole::PrimeRadical)
    }

    pub fn is_central(&self, a: usize) -> bool {
        self.center().contains(a)
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        self.nilpotents().contains(a)
    }
}
