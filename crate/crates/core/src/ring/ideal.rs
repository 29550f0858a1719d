use std::sync::Arc;

use super::{ElementSet, FiniteRing, RingHom, SetRole, Subset};
use crate::error::{Result, RingError};

/// A quotient ring `R/I` together with the projection on indices.
pub struct Quotient {
    pub ring: Arc<FiniteRing>,
    /// `projection[a]` is the index of the coset `a + I`.
    pub projection: Vec<usize>,
    /// `representatives[c]` is the least index in coset `c`.
    pub representatives: Vec<usize>,
}

impl FiniteRing {
    /// The smallest two-sided ideal containing `gens`, by worklist closure.
    pub fn ideal_generated(&self, gens: &[usize]) -> Result<ElementSet<'_>> {
        for &g in gens {
            self.check_element(g)?;
        }
        let n = self.order();
        let mut mask = vec![false; n];
        let mut members = Vec::new();
        let mut work = vec![self.zero()];
        work.extend_from_slice(gens);
        while let Some(x) = work.pop() {
            if mask[x] {
                continue;
            }
            mask[x] = true;
            members.push(x);
            work.push(self.neg(x));
            for &y in &members {
                let s = self.add(x, y);
                if !mask[s] {
                    work.push(s);
                }
            }
            for r in self.elements() {
                let (left, right) = (self.mul(r, x), self.mul(x, r));
                if !mask[left] {
                    work.push(left);
                }
                if !mask[right] {
                    work.push(right);
                }
            }
        }
        Ok(ElementSet::new(
            self,
            Arc::new(Subset::from_mask(mask)),
            SetRole::Ideal,
        ))
    }

    /// Every two-sided ideal, smallest first, or `None` when there are more
    /// than `limit`. Each ideal is a sum of principal ideals, so the lattice
    /// is closed from the principal ones.
    pub fn all_ideals(&self, limit: usize) -> Option<Vec<ElementSet<'_>>> {
        let mut seen: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
        let mut principal: Vec<Vec<usize>> = Vec::new();
        for a in self.elements() {
            let members = self.ideal_generated(&[a]).ok()?.members().to_vec();
            if seen.insert(members.clone()) {
                principal.push(members);
                if principal.len() > limit {
                    return None;
                }
            }
        }
        let mut all = principal.clone();
        let mut i = 0;
        while i < all.len() {
            for p in &principal {
                let mut mask = vec![false; self.order()];
                for &x in &all[i] {
                    for &y in p {
                        mask[self.add(x, y)] = true;
                    }
                }
                let members: Vec<usize> = (0..mask.len()).filter(|&k| mask[k]).collect();
                if seen.insert(members.clone()) {
                    all.push(members);
                    if all.len() > limit {
                        return None;
                    }
                }
            }
            i += 1;
        }
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Some(
            all.into_iter()
                .map(|m| ElementSet::new(self, Arc::new(Subset::from_members(self.order(), m)), SetRole::Ideal))
                .collect(),
        )
    }

    /// `√I = { a : a^n ∈ I for some n ≥ 1 }`.
    pub fn radical_of_ideal(&self, ideal: &ElementSet<'_>) -> Result<ElementSet<'_>> {
        self.ensure_ideal(ideal)?;
        let mask = self
            .elements()
            .map(|a| self.power_orbit(a).powers.iter().any(|&p| ideal.contains(p)))
            .collect();
        Ok(ElementSet::new(
            self,
            Arc::new(Subset::from_mask(mask)),
            SetRole::RadicalOfIdeal,
        ))
    }

    fn ensure_ideal(&self, ideal: &ElementSet<'_>) -> Result<()> {
        if ideal.ring().order() != self.order() {
            return Err(RingError::NotAnIdeal("set belongs to a different ring".into()));
        }
        match ideal.ideal_violation() {
            Some(why) => Err(RingError::NotAnIdeal(why)),
            None => Ok(()),
        }
    }

    /// Coset ring with canonical representatives (least index per coset).
    /// Coset indices follow the order of their representatives.
    pub(crate) fn quotient_parts(&self, ideal: &ElementSet<'_>) -> Result<Quotient> {
        self.ensure_ideal(ideal)?;
        let n = self.order();
        let mut rep = vec![usize::MAX; n];
        for a in self.elements() {
            if rep[a] != usize::MAX {
                continue;
            }
            // a is the least index of its coset since all smaller indices are assigned
            for i in ideal.iter() {
                rep[self.add(a, i)] = a;
            }
        }
        let mut representatives: Vec<usize> = rep.clone();
        representatives.sort_unstable();
        representatives.dedup();
        let mut coset_of_rep = vec![usize::MAX; n];
        for (c, &r) in representatives.iter().enumerate() {
            coset_of_rep[r] = c;
        }
        let projection: Vec<usize> = rep.iter().map(|&r| coset_of_rep[r]).collect();
        let m = representatives.len();
        let reps = representatives.clone();
        let ring = FiniteRing::build(
            m,
            projection[self.zero()],
            projection[self.one()],
            format!("{}/I", self.label()),
            |x, y| projection[self.add(reps[x], reps[y])],
            |x, y| projection[self.mul(reps[x], reps[y])],
        )?;
        let parent = self.namer();
        let reps_for_label = representatives.clone();
        let ring = ring.with_namer(Arc::new(move |c| format!("[{}]", parent(reps_for_label[c]))));
        Ok(Quotient {
            ring: Arc::new(ring),
            projection,
            representatives,
        })
    }

    /// The quotient `R/I` and its projection homomorphism.
    pub fn quotient(
        self: &Arc<Self>,
        ideal: &ElementSet<'_>,
    ) -> Result<(Arc<FiniteRing>, RingHom)> {
        let q = self.quotient_parts(ideal)?;
        let hom = RingHom::new_unchecked(self.clone(), q.ring.clone(), q.projection);
        Ok((q.ring, hom))
    }

    /// `R/J(R)`, computed once.
    pub fn jacobson_quotient(&self) -> Arc<Quotient> {
        self.cache
            .jacobson_quotient
            .get_or_init(|| {
                let j = self.jacobson();
                let mut q = self
                    .quotient_parts(&j)
                    .expect("the Jacobson radical is a two-sided ideal");
                let label = format!("{}/J", self.label());
                let ring = q.ring.relabeled(label);
                q.ring = Arc::new(ring);
                Arc::new(q)
            })
            .clone()
    }

    /// The corner ring `eRe` with identity `e`. Elements are the members of
    /// `eRe` in increasing index order.
    pub fn corner_ring(&self, e: usize) -> Result<FiniteRing> {
        self.check_element(e)?;
        if !self.is_idempotent(e) || e == self.zero() {
            return Err(RingError::NotIdempotent(e));
        }
        let mut members: Vec<usize> = self
            .elements()
            .map(|r| self.mul(self.mul(e, r), e))
            .collect();
        members.sort_unstable();
        members.dedup();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let ring = FiniteRing::build(
            members.len(),
            pos[self.zero()],
            pos[e],
            format!("{} corner at {}", self.label(), e),
            |x, y| pos[self.add(members[x], members[y])],
            |x, y| pos[self.mul(members[x], members[y])],
        )?;
        let parent = self.namer();
        Ok(ring.with_namer(Arc::new(move |i| parent(members[i]))))
    }
}
