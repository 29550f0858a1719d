use std::fmt;
use std::sync::Arc;

use super::tuple::{build_tuple_ring, matrix_join, paren_join, tuple_namer, Additive, Layout};
use super::Budget;
use crate::error::{Result, RingError};
use crate::ring::{FiniteRing, Namer, RingHom};

/// A finite `(A, B)`-bimodule given by tables on carrier indices.
#[derive(Clone)]
pub struct Bimodule {
    left: Arc<FiniteRing>,
    right: Arc<FiniteRing>,
    order: usize,
    zero: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    /// `left_act[a * order + m] = a·m`
    left_act: Vec<usize>,
    /// `right_act[m * |B| + b] = m·b`
    right_act: Vec<usize>,
    label: String,
    /// `Some(k)` when this is the regular bimodule `R^k`.
    regular_rank: Option<usize>,
    namer: Namer,
}

impl fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Bimodule")
            .field("left", &self.left.label())
            .field("right", &self.right.label())
            .field("order", &self.order)
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

fn bad(msg: impl Into<String>) -> RingError {
    RingError::InvalidBimodule(msg.into())
}

impl Bimodule {
    /// Builds a bimodule from explicit tables and checks every module axiom
    /// exhaustively.
    pub fn new(
        left: Arc<FiniteRing>,
        right: Arc<FiniteRing>,
        zero: usize,
        add: Vec<usize>,
        left_act: Vec<usize>,
        right_act: Vec<usize>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let order = (add.len() as f64).sqrt().round() as usize;
        if order == 0 || order * order != add.len() {
            return Err(bad("addition table is not square"));
        }
        if zero >= order {
            return Err(bad("zero out of range"));
        }
        if left_act.len() != left.order() * order || right_act.len() != order * right.order() {
            return Err(bad("action tables have the wrong size"));
        }
        if add.iter().chain(&left_act).chain(&right_act).any(|&v| v >= order) {
            return Err(bad("table entry out of range"));
        }
        let mut neg = Vec::with_capacity(order);
        for m in 0..order {
            match (0..order).find(|&x| add[m * order + x] == zero) {
                Some(x) => neg.push(x),
                None => return Err(bad(format!("element {m} has no additive inverse"))),
            }
        }
        let module = Bimodule {
            left,
            right,
            order,
            zero,
            add,
            neg,
            left_act,
            right_act,
            label: label.into(),
            regular_rank: None,
            namer: Arc::new(|m: usize| m.to_string()),
        };
        module.validate()?;
        Ok(module)
    }

    fn validate(&self) -> Result<()> {
        let (a_ring, b_ring) = (self.left.as_ref(), self.right.as_ref());
        let n = self.order;
        for x in 0..n {
            if self.add(x, self.zero) != x {
                return Err(bad(format!("zero is not an identity at {x}")));
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return Err(bad(format!("addition not commutative at ({x}, {y})")));
                }
                for z in 0..n {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return Err(bad(format!("addition not associative at ({x}, {y}, {z})")));
                    }
                }
            }
            if self.act_left(a_ring.one(), x) != x {
                return Err(bad(format!("left action not unital at {x}")));
            }
            if self.act_right(x, b_ring.one()) != x {
                return Err(bad(format!("right action not unital at {x}")));
            }
        }
        for a in a_ring.elements() {
            for x in 0..n {
                for y in 0..n {
                    if self.act_left(a, self.add(x, y)) != self.add(self.act_left(a, x), self.act_left(a, y)) {
                        return Err(bad(format!("left action not additive in the module at ({a}, {x}, {y})")));
                    }
                }
                for a2 in a_ring.elements() {
                    if self.act_left(a_ring.add(a, a2), x) != self.add(self.act_left(a, x), self.act_left(a2, x)) {
                        return Err(bad(format!("left action not additive in the ring at ({a}, {a2}, {x})")));
                    }
                    if self.act_left(a_ring.mul(a, a2), x) != self.act_left(a, self.act_left(a2, x)) {
                        return Err(bad(format!("left action not associative at ({a}, {a2}, {x})")));
                    }
                }
                for b in b_ring.elements() {
                    if self.act_right(self.act_left(a, x), b) != self.act_left(a, self.act_right(x, b)) {
                        return Err(bad(format!("actions do not commute at ({a}, {x}, {b})")));
                    }
                }
            }
        }
        for b in b_ring.elements() {
            for x in 0..n {
                for y in 0..n {
                    if self.act_right(self.add(x, y), b) != self.add(self.act_right(x, b), self.act_right(y, b)) {
                        return Err(bad(format!("right action not additive in the module at ({x}, {y}, {b})")));
                    }
                }
                for b2 in b_ring.elements() {
                    if self.act_right(x, b_ring.add(b, b2)) != self.add(self.act_right(x, b), self.act_right(x, b2)) {
                        return Err(bad(format!("right action not additive in the ring at ({x}, {b}, {b2})")));
                    }
                    if self.act_right(x, b_ring.mul(b, b2)) != self.act_right(self.act_right(x, b), b2) {
                        return Err(bad(format!("right action not associative at ({x}, {b}, {b2})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// `R` as a bimodule over itself.
    pub fn regular(ring: &Arc<FiniteRing>) -> Self {
        let n = ring.order();
        let table: Vec<usize> = (0..n * n).map(|i| ring.add(i / n, i % n)).collect();
        let act: Vec<usize> = (0..n * n).map(|i| ring.mul(i / n, i % n)).collect();
        Bimodule {
            left: ring.clone(),
            right: ring.clone(),
            order: n,
            zero: ring.zero(),
            add: table,
            neg: ring.elements().map(|a| ring.neg(a)).collect(),
            left_act: act.clone(),
            right_act: act,
            label: ring.label().to_string(),
            regular_rank: Some(1),
            namer: ring.namer(),
        }
    }

    /// The direct sum `R^k` of regular bimodules.
    pub fn regular_sum(ring: &Arc<FiniteRing>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(bad("rank must be at least 1"));
        }
        let one = Bimodule::regular(ring);
        let mut acc = one.clone();
        for _ in 1..k {
            acc = acc.direct_sum(&one)?;
        }
        acc.regular_rank = Some(k);
        if k > 1 {
            acc.label = format!("{}^{k}", ring.label());
        }
        Ok(acc)
    }

    /// The zero `(A, B)`-bimodule.
    pub fn zero(left: &Arc<FiniteRing>, right: &Arc<FiniteRing>) -> Self {
        Bimodule {
            left: left.clone(),
            right: right.clone(),
            order: 1,
            zero: 0,
            add: vec![0],
            neg: vec![0],
            left_act: vec![0; left.order()],
            right_act: vec![0; right.order()],
            label: "0".into(),
            regular_rank: None,
            namer: Arc::new(|_| "0".to_string()),
        }
    }

    /// The ring `R` as an `(A, B)`-bimodule through `f: A -> R` and
    /// `g: B -> R`, with `a·m = f(a) m` and `m·b = m g(b)`.
    pub fn via_homs(f: &RingHom, g: &RingHom) -> Result<Self> {
        let r = f.target();
        if !r.same_tables(g.target()) {
            return Err(bad("the two homomorphisms have different targets"));
        }
        let n = r.order();
        let (a_ord, b_ord) = (f.source().order(), g.source().order());
        let add: Vec<usize> = (0..n * n).map(|i| r.add(i / n, i % n)).collect();
        let left_act: Vec<usize> = (0..a_ord * n).map(|i| r.mul(f.apply(i / n), i % n)).collect();
        let right_act: Vec<usize> = (0..n * b_ord)
            .map(|i| r.mul(i / b_ord, g.apply(i % b_ord)))
            .collect();
        let mut m = Bimodule::new(
            f.source().clone(),
            g.source().clone(),
            r.zero(),
            add,
            left_act,
            right_act,
            r.label(),
        )?;
        m.namer = r.namer();
        Ok(m)
    }

    /// `self ⊕ other` over the same pair of rings; `self` is the low digit.
    pub fn direct_sum(&self, other: &Bimodule) -> Result<Self> {
        if !self.left.same_tables(&other.left) || !self.right.same_tables(&other.right) {
            return Err(bad("summands are modules over different rings"));
        }
        let layout = Layout::new(vec![self.order, other.order]);
        let n = layout.order();
        let split = |x: usize| (x % self.order, x / self.order);
        let join = |p: usize, q: usize| p + self.order * q;
        let add: Vec<usize> = (0..n * n)
            .map(|i| {
                let ((x1, y1), (x2, y2)) = (split(i / n), split(i % n));
                join(self.add(x1, x2), other.add(y1, y2))
            })
            .collect();
        let (a_ord, b_ord) = (self.left.order(), self.right.order());
        let left_act: Vec<usize> = (0..a_ord * n)
            .map(|i| {
                let (a, (x, y)) = (i / n, split(i % n));
                join(self.act_left(a, x), other.act_left(a, y))
            })
            .collect();
        let right_act: Vec<usize> = (0..n * b_ord)
            .map(|i| {
                let ((x, y), b) = (split(i / b_ord), i % b_ord);
                join(self.act_right(x, b), other.act_right(y, b))
            })
            .collect();
        let neg = (0..n)
            .map(|i| {
                let (x, y) = split(i);
                join(self.neg[x], other.neg[y])
            })
            .collect();
        let namer = tuple_namer(&layout, vec![self.namer.clone(), other.namer.clone()], paren_join);
        Ok(Bimodule {
            left: self.left.clone(),
            right: self.right.clone(),
            order: n,
            zero: join(self.zero, other.zero),
            add,
            neg,
            left_act,
            right_act,
            label: format!("{} + {}", self.label, other.label),
            regular_rank: None,
            namer,
        })
    }

    /// For an `(A, B)`-bimodule `M` and a `(B, A)`-bimodule `N`, the
    /// `A × B`-bimodule `M ⊕ N` with `(a, b)(m, n) = (am, bn)` and
    /// `(m, n)(a, b) = (mb, na)`. `ab` must be the product ring with `A` as
    /// its first factor.
    pub fn pair_sum(m: &Bimodule, n: &Bimodule, ab: &Arc<FiniteRing>) -> Result<Self> {
        let (a, b) = (&m.left, &m.right);
        if !n.left.same_tables(b) || !n.right.same_tables(a) {
            return Err(bad("the second module must be a (B, A)-bimodule"));
        }
        if ab.order() != a.order() * b.order() {
            return Err(bad("the ring is not the product A × B"));
        }
        let split_ring = |r: usize| (r % a.order(), r / a.order());
        let split = |x: usize| (x % m.order, x / m.order);
        let join = |p: usize, q: usize| p + m.order * q;
        let size = m.order * n.order;
        let add: Vec<usize> = (0..size * size)
            .map(|i| {
                let ((x1, y1), (x2, y2)) = (split(i / size), split(i % size));
                join(m.add(x1, x2), n.add(y1, y2))
            })
            .collect();
        let left_act: Vec<usize> = (0..ab.order() * size)
            .map(|i| {
                let ((ra, rb), (x, y)) = (split_ring(i / size), split(i % size));
                join(m.act_left(ra, x), n.act_left(rb, y))
            })
            .collect();
        let right_act: Vec<usize> = (0..size * ab.order())
            .map(|i| {
                let ((x, y), (ra, rb)) = (split(i / ab.order()), split_ring(i % ab.order()));
                join(m.act_right(x, rb), n.act_right(y, ra))
            })
            .collect();
        let mut sum = Bimodule::new(
            ab.clone(),
            ab.clone(),
            join(m.zero, n.zero),
            add,
            left_act,
            right_act,
            format!("{} + {}", m.label, n.label),
        )?;
        let layout = Layout::new(vec![m.order, n.order]);
        sum.namer = tuple_namer(&layout, vec![m.namer.clone(), n.namer.clone()], paren_join);
        Ok(sum)
    }

    pub fn left_ring(&self) -> &Arc<FiniteRing> {
        &self.left
    }

    pub fn right_ring(&self) -> &Arc<FiniteRing> {
        &self.right
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero_element(&self) -> usize {
        self.zero
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn regular_rank(&self) -> Option<usize> {
        self.regular_rank
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y]
    }

    #[inline]
    pub fn act_left(&self, a: usize, x: usize) -> usize {
        self.left_act[a * self.order + x]
    }

    #[inline]
    pub fn act_right(&self, x: usize, b: usize) -> usize {
        self.right_act[x * self.right.order() + b]
    }

    pub fn element_label(&self, x: usize) -> String {
        (self.namer)(x)
    }

    fn is_zero_module(&self) -> bool {
        self.order == 1
    }
}

impl Additive for Bimodule {
    fn order(&self) -> usize {
        self.order
    }
    fn zero(&self) -> usize {
        self.zero
    }
    fn add(&self, a: usize, b: usize) -> usize {
        Bimodule::add(self, a, b)
    }
}

fn same_base(m: &Bimodule) -> Result<&FiniteRing> {
    if !m.left.same_tables(&m.right) {
        return Err(bad("expected a bimodule over a single ring"));
    }
    Ok(m.left.as_ref())
}

/// Name of an extension of `R` by `M`: just `R` for `M = R`, `R, k` for
/// `M = R^k`, otherwise both labels.
fn extension_args(r: &FiniteRing, m: &Bimodule) -> String {
    match m.regular_rank {
        Some(1) => r.label().to_string(),
        Some(k) => format!("{}, {k}", r.label()),
        None => format!("{}, {}", r.label(), m.label),
    }
}

/// The trivial extension `T(R, M)`: pairs `(r, m)` with
/// `(r, m)(s, n) = (rs, rn + ms)`.
pub fn trivial_extension(m: &Bimodule, budget: &Budget) -> Result<FiniteRing> {
    let r = same_base(m)?;
    budget.check(r.order() as u128 * m.order as u128)?;
    let label = format!("TrivExt({})", extension_args(r, m));
    let comps: [&dyn Additive; 2] = [r, m];
    let (ring, layout) = build_tuple_ring(&comps, &[r.one(), m.zero], label, |p, q, out| {
        out[0] = r.mul(p[0], q[0]);
        out[1] = m.add(m.act_left(p[0], q[1]), m.act_right(p[1], q[0]));
    })?;
    let namer = tuple_namer(&layout, vec![r.namer(), m.namer.clone()], paren_join);
    Ok(ring.with_namer(namer))
}

/// `DT(R, M)`: quadruples `(a, m, b, n)` with product
/// `(a1a2, a1m2 + m1a2, a1b2 + b1a2, a1n2 + m1b2 + b1m2 + n1a2)`.
pub fn dt_extension(m: &Bimodule, budget: &Budget) -> Result<FiniteRing> {
    let r = same_base(m)?;
    let (ro, mo) = (r.order() as u128, m.order as u128);
    budget.check(ro.saturating_mul(ro).saturating_mul(mo).saturating_mul(mo))?;
    let label = format!("DT({})", extension_args(r, m));
    let comps: [&dyn Additive; 4] = [r, m, r, m];
    let one = [r.one(), m.zero, r.zero(), m.zero];
    let (ring, layout) = build_tuple_ring(&comps, &one, label, |p, q, out| {
        let (a1, m1, b1, n1) = (p[0], p[1], p[2], p[3]);
        let (a2, m2, b2, n2) = (q[0], q[1], q[2], q[3]);
        out[0] = r.mul(a1, a2);
        out[1] = m.add(m.act_left(a1, m2), m.act_right(m1, a2));
        out[2] = r.add(r.mul(a1, b2), r.mul(b1, a2));
        let s = m.add(m.act_left(a1, n2), m.act_right(m1, b2));
        let t = m.add(m.act_left(b1, m2), m.act_right(n1, a2));
        out[3] = m.add(s, t);
    })?;
    let namers = vec![r.namer(), m.namer.clone(), r.namer(), m.namer.clone()];
    Ok(ring.with_namer(tuple_namer(&layout, namers, paren_join)))
}

/// The formal triangular matrix ring `[[A, M], [0, B]]` of an
/// `(A, B)`-bimodule, digits `(a, m, b)`.
pub fn formal_triangular(m: &Bimodule, budget: &Budget) -> Result<FiniteRing> {
    let (a, b) = (m.left.as_ref(), m.right.as_ref());
    budget.check(a.order() as u128 * m.order as u128 * b.order() as u128)?;
    let label = format!("FT({}, {}, {})", a.label(), b.label(), m.label);
    let comps: [&dyn Additive; 3] = [a, m, b];
    let (ring, layout) = build_tuple_ring(&comps, &[a.one(), m.zero, b.one()], label, |p, q, out| {
        out[0] = a.mul(p[0], q[0]);
        out[1] = m.add(m.act_left(p[0], q[1]), m.act_right(p[1], q[2]));
        out[2] = b.mul(p[2], q[2]);
    })?;
    let namers = vec![a.namer(), m.namer.clone(), b.namer()];
    Ok(ring.with_namer(tuple_namer(&layout, namers, paren_join)))
}

/// The Morita context `[[A, M], [N, B]]` with both context products zero,
/// digits `(a, m, n, b)`. `M` is an `(A, B)`-bimodule and `N` a
/// `(B, A)`-bimodule.
pub fn trivial_morita(m: &Bimodule, n: &Bimodule, budget: &Budget) -> Result<FiniteRing> {
    let (a, b) = (m.left.as_ref(), m.right.as_ref());
    if !n.left.same_tables(b) || !n.right.same_tables(a) {
        return Err(bad("N must be a (B, A)-bimodule"));
    }
    budget.check(
        (a.order() as u128)
            .saturating_mul(m.order as u128)
            .saturating_mul(n.order as u128)
            .saturating_mul(b.order() as u128),
    )?;
    let regular_square = m.regular_rank == Some(1)
        && n.regular_rank == Some(1)
        && a.same_tables(b)
        && a.label() == b.label();
    let label = if regular_square {
        format!("MoritaTriv({})", a.label())
    } else if m.is_zero_module() && n.is_zero_module() {
        format!("MoritaTriv({}, {})", a.label(), b.label())
    } else {
        format!("MoritaTriv({}, {}, {}, {})", a.label(), b.label(), m.label, n.label)
    };
    let comps: [&dyn Additive; 4] = [a, m, n, b];
    let one = [a.one(), m.zero, n.zero, b.one()];
    let (ring, layout) = build_tuple_ring(&comps, &one, label, |p, q, out| {
        let (a1, m1, n1, b1) = (p[0], p[1], p[2], p[3]);
        let (a2, m2, n2, b2) = (q[0], q[1], q[2], q[3]);
        out[0] = a.mul(a1, a2);
        out[1] = m.add(m.act_left(a1, m2), m.act_right(m1, b2));
        out[2] = n.add(n.act_left(b1, n2), n.act_right(n1, a2));
        out[3] = b.mul(b1, b2);
    })?;
    let namers = vec![a.namer(), m.namer.clone(), n.namer.clone(), b.namer()];
    Ok(ring.with_namer(tuple_namer(&layout, namers, matrix_join(2))))
}
