//! Element-indexed finite rings.
//!
//! Every ring stores its elements as indices `0..order` together with full
//! addition and multiplication tables. Constructions fix a canonical
//! enumeration of elements (see [`crate::constructions`]); raw tables can be
//! supplied directly through [`FiniteRing::from_tables`].

mod hom;
mod ideal;
mod sets;
mod validate;

use std::fmt;
use std::ops::Range;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::error::{Result, RingError};
use crate::groups::FiniteGroup;

pub use hom::{Endomorphism, RingHom};
pub use ideal::Quotient;
pub use sets::{ElementSet, SetRole};
pub use validate::Validation;

pub(crate) use sets::Subset;

/// Default upper bound on the order of any constructed ring.
pub const DEFAULT_MAX_ORDER: usize = 4096;

/// Tables are stored with 16-bit entries, which caps the order of any ring.
pub const HARD_MAX_ORDER: usize = 1 << 16;

/// Renders an element index as a construction-aware label.
pub type Namer = Arc<dyn Fn(usize) -> String + Send + Sync>;

/// Where a ring came from. Structured rings are correct by construction and
/// skip exhaustive axiom checks unless validation is forced.
#[derive(Clone)]
pub enum Provenance {
    Raw,
    Structured,
    GroupRing(Arc<GroupRingInfo>),
}

/// Data kept alongside a group ring so its augmentation can be recovered.
pub struct GroupRingInfo {
    pub base: Arc<FiniteRing>,
    pub group: Arc<FiniteGroup>,
}

#[derive(Default)]
struct Cache {
    units: OnceLock<Arc<Subset>>,
    jacobson: OnceLock<Arc<Subset>>,
    nilpotents: OnceLock<Arc<Subset>>,
    idempotents: OnceLock<Arc<Subset>>,
    center: OnceLock<Arc<Subset>>,
    jacobson_quotient: OnceLock<Arc<Quotient>>,
}

/// A finite unital ring given by its operation tables.
pub struct FiniteRing {
    order: usize,
    zero: usize,
    one: usize,
    add: Box<[u16]>,
    neg: Box<[u16]>,
    mul: Box<[u16]>,
    label: String,
    provenance: Provenance,
    namer: Option<Namer>,
    cache: Cache,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}

impl Clone for FiniteRing {
    fn clone(&self) -> Self {
        FiniteRing {
            order: self.order,
            zero: self.zero,
            one: self.one,
            add: self.add.clone(),
            neg: self.neg.clone(),
            mul: self.mul.clone(),
            label: self.label.clone(),
            provenance: self.provenance.clone(),
            namer: self.namer.clone(),
            cache: Cache::default(),
        }
    }
}

fn narrow(v: usize, order: usize, what: &str) -> Result<u16> {
    if v >= order {
        return Err(RingError::InvalidTable(format!(
            "{what} entry {v} out of range for order {order}"
        )));
    }
    Ok(v as u16)
}

pub(crate) fn fill_table(order: usize, op: impl Fn(usize, usize) -> usize + Sync) -> Box<[u16]> {
    let mut table = vec![0u16; order * order];
    table
        .par_chunks_mut(order)
        .enumerate()
        .for_each(|(a, row)| {
            for (b, slot) in row.iter_mut().enumerate() {
                *slot = op(a, b) as u16;
            }
        });
    table.into_boxed_slice()
}

impl FiniteRing {
    /// Builds a ring from raw tables. Only shapes and index ranges are checked;
    /// use [`FiniteRing::validate`] to check the ring axioms.
    pub fn from_tables(
        zero: usize,
        one: usize,
        add: &[usize],
        neg: &[usize],
        mul: &[usize],
        label: impl Into<String>,
    ) -> Result<Self> {
        let order = neg.len();
        if order == 0 || order > HARD_MAX_ORDER {
            return Err(RingError::InvalidTable(format!("unsupported order {order}")));
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(RingError::InvalidTable(format!(
                "expected {} table entries for order {order}",
                order * order
            )));
        }
        narrow(zero, order, "zero")?;
        narrow(one, order, "one")?;
        let conv = |t: &[usize], what: &str| -> Result<Box<[u16]>> {
            t.iter().map(|&v| narrow(v, order, what)).collect()
        };
        Ok(FiniteRing {
            order,
            zero,
            one,
            add: conv(add, "add")?,
            neg: conv(neg, "neg")?,
            mul: conv(mul, "mul")?,
            label: label.into(),
            provenance: Provenance::Raw,
            namer: None,
            cache: Cache::default(),
        })
    }

    /// Fills the tables of a structurally defined ring from the given
    /// operations. Negation is read off the addition table.
    pub(crate) fn build<A, M>(
        order: usize,
        zero: usize,
        one: usize,
        label: impl Into<String>,
        add: A,
        mul: M,
    ) -> Result<Self>
    where
        A: Fn(usize, usize) -> usize + Sync,
        M: Fn(usize, usize) -> usize + Sync,
    {
        if order == 0 || order > HARD_MAX_ORDER {
            return Err(RingError::BudgetExceeded {
                order: order as u128,
                budget: HARD_MAX_ORDER,
            });
        }
        let add_table = fill_table(order, add);
        let mul_table = fill_table(order, mul);
        FiniteRing::from_parts(order, zero, one, label, add_table, mul_table)
    }

    /// A structured ring from finished tables; negation is read off the
    /// addition table.
    pub(crate) fn from_parts(
        order: usize,
        zero: usize,
        one: usize,
        label: impl Into<String>,
        add_table: Box<[u16]>,
        mul_table: Box<[u16]>,
    ) -> Result<Self> {
        let mut neg = vec![0u16; order];
        for (a, slot) in neg.iter_mut().enumerate() {
            let row = &add_table[a * order..(a + 1) * order];
            let b = row.iter().position(|&s| s as usize == zero).ok_or_else(|| {
                RingError::InvalidTable(format!("element {a} has no additive inverse"))
            })?;
            *slot = b as u16;
        }
        Ok(FiniteRing {
            order,
            zero,
            one,
            add: add_table,
            neg: neg.into_boxed_slice(),
            mul: mul_table,
            label: label.into(),
            provenance: Provenance::Structured,
            namer: None,
            cache: Cache::default(),
        })
    }

    pub(crate) fn with_namer(mut self, namer: Namer) -> Self {
        self.namer = Some(namer);
        self
    }

    pub(crate) fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// Returns a copy of this ring under a different label.
    pub fn relabeled(&self, label: impl Into<String>) -> Self {
        let mut r = self.clone();
        r.label = label.into();
        r
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn is_structured(&self) -> bool {
        !matches!(self.provenance, Provenance::Raw)
    }

    pub fn elements(&self) -> Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    /// Row `a` of the multiplication table, i.e. left multiplication by `a`.
    #[inline]
    pub(crate) fn mul_row(&self, a: usize) -> &[u16] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    /// `a^k` by repeated squaring; `a^0 = 1`.
    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = self.one;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// The image of the integer `k` under `Z -> R`.
    pub fn integer(&self, k: i64) -> usize {
        let mut acc = self.zero;
        for _ in 0..k.unsigned_abs() {
            acc = self.add(acc, self.one);
        }
        if k < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Construction-aware rendering of an element.
    pub fn element_label(&self, a: usize) -> String {
        match &self.namer {
            Some(namer) => namer(a),
            None => a.to_string(),
        }
    }

    pub(crate) fn namer(&self) -> Namer {
        match &self.namer {
            Some(n) => n.clone(),
            None => Arc::new(|a: usize| a.to_string()),
        }
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(RingError::ElementOutOfRange {
                index: a,
                order: self.order,
            })
        }
    }

    /// Orbit of `a` under repeated multiplication: the distinct powers
    /// `a, a^2, ...` in order, and the position where the sequence re-enters
    /// itself. `orbit[cycle_start..]` is the periodic part.
    pub fn power_orbit(&self, a: usize) -> PowerOrbit {
        let mut seen = std::collections::HashMap::new();
        let mut powers = Vec::new();
        let mut x = a;
        loop {
            if let Some(&pos) = seen.get(&x) {
                return PowerOrbit {
                    powers,
                    cycle_start: pos,
                };
            }
            seen.insert(x, powers.len());
            powers.push(x);
            x = self.mul(x, a);
        }
    }

    /// True when both rings have identical tables and distinguished elements.
    pub fn same_tables(&self, other: &FiniteRing) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

/// The distinct powers of an element; see [`FiniteRing::power_orbit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerOrbit {
    /// `powers[i] = a^(i+1)`.
    pub powers: Vec<usize>,
    pub cycle_start: usize,
}

impl PowerOrbit {
    /// Exponents paired with their powers, `(n, a^n)` for every distinct power.
    pub fn exponents(&self) -> impl Iterator<Item = (u64, usize)> + '_ {
        self.powers
            .iter()
            .enumerate()
            .map(|(i, &p)| (i as u64 + 1, p))
    }
}
