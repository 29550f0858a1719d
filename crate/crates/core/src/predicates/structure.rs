use serde::Serialize;

use super::decide::nil_plus_radical;
use crate::error::{Result, RingError};
use crate::ring::{ElementSet, FiniteRing};

/// The least `(q, j)` (by `q`, then `j`) with `u² = 1 + q + j`, `q`
/// nilpotent and `j ∈ J(R)`, or `None` when no decomposition exists.
pub fn unit_square_decompose(ring: &FiniteRing, u: usize) -> Result<Option<(usize, usize)>> {
    ring.check_element(u)?;
    if !ring.is_unit(u) {
        return Err(RingError::NotAUnit(u));
    }
    Ok(nil_plus_radical(ring, ring.sub(ring.mul(u, u), ring.one())))
}

/// Whether every idempotent of `R/I` is the image of an idempotent of `R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftingVerdict {
    pub holds: bool,
    /// `(coset representative, idempotent lift)` for every idempotent coset.
    pub lifts: Vec<(usize, usize)>,
    /// Representative of an idempotent coset without an idempotent lift.
    pub failing: Option<usize>,
}

pub fn idempotents_lift_mod(ring: &FiniteRing, ideal: &ElementSet<'_>) -> Result<LiftingVerdict> {
    let q = ring.quotient_parts(ideal)?;
    let mut lifts = Vec::new();
    for c in q.ring.idempotents().iter() {
        let rep = q.representatives[c];
        match ring.idempotents().iter().find(|&e| q.projection[e] == c) {
            Some(e) => lifts.push((rep, e)),
            None => {
                return Ok(LiftingVerdict {
                    holds: false,
                    lifts,
                    failing: Some(rep),
                })
            }
        }
    }
    Ok(LiftingVerdict {
        holds: true,
        lifts,
        failing: None,
    })
}

/// The central idempotents that are minimal among nonzero central
/// idempotents. They are pairwise orthogonal, sum to 1, and `R` is the
/// product of the blocks `eR`.
pub fn central_primitive_idempotents(ring: &FiniteRing) -> Vec<usize> {
    let zero = ring.zero();
    let central: Vec<usize> = ring
        .idempotents()
        .iter()
        .filter(|&e| e != zero && ring.is_central(e))
        .collect();
    central
        .iter()
        .copied()
        .filter(|&e| {
            central
                .iter()
                .all(|&f| f == e || ring.mul(e, f) != f)
        })
        .collect()
}

/// A system of 2×2 matrix units: `e_ij e_kl = δ_jk e_il`, all nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatrixUnits {
    pub e11: usize,
    pub e12: usize,
    pub e21: usize,
    pub e22: usize,
}

impl MatrixUnits {
    pub fn verify(&self, r: &FiniteRing) -> bool {
        let e = [[self.e11, self.e12], [self.e21, self.e22]];
        let zero = r.zero();
        e.iter().flatten().all(|&x| x != zero)
            && (0..2).all(|i| {
                (0..2).all(|j| {
                    (0..2).all(|k| {
                        (0..2).all(|l| {
                            let expected = if j == k { e[i][l] } else { zero };
                            r.mul(e[i][j], e[k][l]) == expected
                        })
                    })
                })
            })
    }
}

/// Searches for 2×2 matrix units whose diagonal sums to `target` (any sum
/// when `target` is `None`).
pub fn find_matrix_units(ring: &FiniteRing, target: Option<usize>) -> Option<MatrixUnits> {
    let zero = ring.zero();
    let ids: Vec<usize> = ring.idempotents().iter().filter(|&e| e != zero).collect();
    for &e11 in &ids {
        for &e22 in &ids {
            if ring.mul(e11, e22) != zero || ring.mul(e22, e11) != zero {
                continue;
            }
            if target.is_some_and(|t| ring.add(e11, e22) != t) {
                continue;
            }
            let corner = |x: usize, y: usize| -> Vec<usize> {
                let mut v: Vec<usize> = ring
                    .elements()
                    .map(|r| ring.mul(ring.mul(x, r), y))
                    .filter(|&z| z != zero)
                    .collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            let (top, bottom) = (corner(e11, e22), corner(e22, e11));
            for &e12 in &top {
                for &e21 in &bottom {
                    let units = MatrixUnits { e11, e12, e21, e22 };
                    if ring.mul(e12, e21) == e11 && ring.mul(e21, e12) == e22 && units.verify(ring) {
                        return Some(units);
                    }
                }
            }
        }
    }
    None
}
