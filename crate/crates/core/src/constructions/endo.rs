use std::sync::Arc;

use serde::Serialize;

use crate::error::{Result, RingError};
use crate::groups::is_prime;
use crate::ring::{Endomorphism, FiniteRing};

pub fn identity_endo(ring: &Arc<FiniteRing>) -> Endomorphism {
    Endomorphism::identity(ring.clone())
}

/// The additive order of 1.
fn characteristic(ring: &FiniteRing) -> usize {
    let mut k = 1;
    let mut x = ring.one();
    while x != ring.zero() {
        x = ring.add(x, ring.one());
        k += 1;
    }
    k
}

/// `x ↦ x^p` where `p` is the characteristic. Defined whenever `p` is prime
/// and the map is an endomorphism, which covers every finite field and every
/// commutative ring of prime characteristic.
pub fn frobenius_endo(ring: &Arc<FiniteRing>) -> Result<Endomorphism> {
    let p = characteristic(ring);
    if !is_prime(p as u64) {
        return Err(RingError::NotAnEndomorphism(format!(
            "{} has characteristic {p}, which is not prime",
            ring.label()
        )));
    }
    let map = ring.elements().map(|a| ring.pow(a, p as u64)).collect();
    Endomorphism::new(ring.clone(), map, "frobenius")
}

/// Checks that `map` is a unital ring endomorphism of `ring`.
pub fn check_endomorphism(ring: &Arc<FiniteRing>, map: &[usize]) -> Result<Endomorphism> {
    Endomorphism::new(ring.clone(), map.to_vec(), "custom")
}

/// Outcome of the α-compatibility scan: `ab = 0 ⟺ aα(b) = 0` for all pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Compatibility {
    pub compatible: bool,
    /// First pair `(a, b)` on which the equivalence fails.
    pub witness: Option<(usize, usize)>,
}

pub fn is_alpha_compatible(alpha: &Endomorphism) -> Compatibility {
    let r = alpha.ring();
    let zero = r.zero();
    for a in r.elements() {
        for b in r.elements() {
            if (r.mul(a, b) == zero) != (r.mul(a, alpha.apply(b)) == zero) {
                return Compatibility {
                    compatible: false,
                    witness: Some((a, b)),
                };
            }
        }
    }
    Compatibility {
        compatible: true,
        witness: None,
    }
}
