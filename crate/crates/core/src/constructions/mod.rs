//! Ring constructions.
//!
//! Every construction fixes a reproducible enumeration of its elements.
//! Tuple-shaped rings use little-endian mixed radix: component 0 is the least
//! significant digit, so the element with components `(c_0, .., c_{k-1})` over
//! components of orders `n_0, .., n_{k-1}` has index
//! `c_0 + n_0 (c_1 + n_1 (c_2 + ...))`.
//!
//! | construction | components in digit order |
//! |---|---|
//! | `Z_n` | the residue itself |
//! | `GF(p^k)` | coefficients of `1, x, .., x^{k-1}` |
//! | products | factors in the given order |
//! | `M_n(R)`, `M_n(R;s)` | entries row-major |
//! | `T_n(R)` | upper-triangular entries row-major |
//! | `T_n(R, α)`, `R[x; α]/(x^n)` | coefficients `a_0, .., a_{n-1}` |
//! | `T(R, M)` | `(r, m)` |
//! | `DT(R, M)` | `(a, m, b, n)` |
//! | `K_s(R)`, Morita contexts | `(a, m, n, b)` for `[[a, m], [n, b]]` |
//! | formal triangular | `(a, m, b)` for `[[a, m], [0, b]]` |
//! | `RG` | coefficient of each group element in group order |

mod basic;
mod bimodule;
mod endo;
mod group_ring;
mod matrix;
mod poly;
pub(crate) mod tuple;

pub use basic::{first_irreducible, product, ring_gf, ring_zn};
pub use bimodule::{
    dt_extension, formal_triangular, trivial_extension, trivial_morita, Bimodule,
};
pub use endo::{
    check_endomorphism, frobenius_endo, identity_endo, is_alpha_compatible, Compatibility,
};
pub use group_ring::{augmentation, augmentation_ideal, group_ring};
pub use matrix::{formal_matrix, formal_matrix_exponent, ks_ring, matrix_ring, upper_triangular};
pub use poly::{poly_mod, skew_poly_mod, skew_triangular};

use crate::error::{Result, RingError};
use crate::ring::{DEFAULT_MAX_ORDER, HARD_MAX_ORDER};

/// Upper bound on the order of constructed rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_order: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl Budget {
    pub fn new(max_order: usize) -> Self {
        Budget { max_order }
    }

    /// The largest budget the table representation supports.
    pub fn unlimited() -> Self {
        Budget {
            max_order: HARD_MAX_ORDER,
        }
    }

    pub fn check(&self, order: u128) -> Result<()> {
        let limit = self.max_order.min(HARD_MAX_ORDER);
        if order > limit as u128 {
            Err(RingError::BudgetExceeded {
                order,
                budget: limit,
            })
        } else {
            Ok(())
        }
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn order_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
