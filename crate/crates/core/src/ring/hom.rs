use std::fmt;
use std::sync::Arc;

use super::FiniteRing;
use crate::error::{Result, RingError};

/// A unital ring homomorphism given on element indices.
#[derive(Clone)]
pub struct RingHom {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    map: Vec<usize>,
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingHom")
            .field("source", &self.source.label())
            .field("target", &self.target.label())
            .field("map", &self.map)
            .finish()
    }
}

/// First failure of the homomorphism laws, if any.
pub(crate) fn hom_violation(source: &FiniteRing, target: &FiniteRing, map: &[usize]) -> Option<String> {
    if map.len() != source.order() {
        return Some(format!(
            "map has {} entries, source has order {}",
            map.len(),
            source.order()
        ));
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= target.order()) {
        return Some(format!("image {bad} out of range"));
    }
    if map[source.zero()] != target.zero() {
        return Some("zero is not preserved".into());
    }
    if map[source.one()] != target.one() {
        return Some("identity is not preserved".into());
    }
    for a in source.elements() {
        for b in source.elements() {
            if map[source.add(a, b)] != target.add(map[a], map[b]) {
                return Some(format!("addition is not preserved at ({a}, {b})"));
            }
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                return Some(format!("multiplication is not preserved at ({a}, {b})"));
            }
        }
    }
    None
}

impl RingHom {
    /// Checks the homomorphism laws exhaustively.
    pub fn new(source: Arc<FiniteRing>, target: Arc<FiniteRing>, map: Vec<usize>) -> Result<Self> {
        if let Some(why) = hom_violation(&source, &target, &map) {
            return Err(RingError::NotAHomomorphism(why));
        }
        Ok(RingHom { source, target, map })
    }

    pub(crate) fn new_unchecked(
        source: Arc<FiniteRing>,
        target: Arc<FiniteRing>,
        map: Vec<usize>,
    ) -> Self {
        RingHom { source, target, map }
    }

    /// The unique unital map `Z_n -> R`, defined when `n·1 = 0` in `R`.
    pub fn from_integers(zn: Arc<FiniteRing>, target: Arc<FiniteRing>) -> Result<Self> {
        let map = (0..zn.order()).map(|k| target.integer(k as i64)).collect();
        RingHom::new(zn, target, map)
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// Re-checks the homomorphism laws.
    pub fn verify(&self) -> Result<()> {
        match hom_violation(&self.source, &self.target, &self.map) {
            Some(why) => Err(RingError::NotAHomomorphism(why)),
            None => Ok(()),
        }
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Indices mapping to zero.
    pub fn kernel(&self) -> Vec<usize> {
        let zero = self.target.zero();
        (0..self.map.len()).filter(|&a| self.map[a] == zero).collect()
    }
}

/// A ring endomorphism `α: R -> R`.
#[derive(Clone)]
pub struct Endomorphism {
    ring: Arc<FiniteRing>,
    map: Vec<usize>,
    name: String,
}

impl fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Endomorphism")
            .field("ring", &self.ring.label())
            .field("name", &self.name)
            .field("map", &self.map)
            .finish()
    }
}

impl Endomorphism {
    /// Verifies the map is a unital ring endomorphism of `ring`.
    pub fn new(ring: Arc<FiniteRing>, map: Vec<usize>, name: impl Into<String>) -> Result<Self> {
        if let Some(why) = hom_violation(&ring, &ring, &map) {
            return Err(RingError::NotAnEndomorphism(why));
        }
        Ok(Endomorphism {
            ring,
            map,
            name: name.into(),
        })
    }

    pub fn identity(ring: Arc<FiniteRing>) -> Self {
        let map = ring.elements().collect();
        Endomorphism {
            ring,
            map,
            name: "id".into(),
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `α^k` as an index table.
    pub fn power_table(&self, k: usize) -> Vec<usize> {
        let mut table: Vec<usize> = self.ring.elements().collect();
        for _ in 0..k {
            for v in table.iter_mut() {
                *v = self.map[*v];
            }
        }
        table
    }
}
