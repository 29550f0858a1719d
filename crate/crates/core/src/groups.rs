//! Finite groups as Cayley tables, and the named groups used to build group
//! rings.
//!
//! Canonical element orders:
//! - `Cn`: index `i` is `g^i`.
//! - products `CaxCb...`: little-endian mixed radix, `(x0, x1, ...) -> x0 + a*x1 + ...`.
//! - `S3`, `D4`: index `i + n*j` is `r^i s^j` with `s r s = r^-1` (`n = 3, 4`).
//! - `Q8`: `1, i, j, k, -1, -i, -j, -k`.

use std::fmt;

use crate::error::{Result, RingError};

/// Names accepted by [`group_catalog`].
pub const GROUP_NAMES: &[&str] = &[
    "C1", "C2", "C3", "C4", "C8", "C9", "C2xC2", "C2xC2xC2", "C3xC3", "S3", "D4", "Q8",
];

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    identity: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    label: String,
    element_labels: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from its Cayley table (`table[a * n + b] = ab`),
    /// checking closure, associativity, identity and inverses exhaustively.
    pub fn from_table(
        table: Vec<usize>,
        element_labels: Vec<String>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let n = element_labels.len();
        let bad = |why: String| Err(RingError::InvalidGroup(why));
        if n == 0 || table.len() != n * n {
            return bad(format!("table of {} entries for {n} elements", table.len()));
        }
        if table.iter().any(|&x| x >= n) {
            return bad("table entry out of range".into());
        }
        let op = |a: usize, b: usize| table[a * n + b];
        let Some(identity) = (0..n).find(|&e| (0..n).all(|a| op(e, a) == a && op(a, e) == a))
        else {
            return bad("no identity element".into());
        };
        let mut inv = vec![0; n];
        for a in 0..n {
            match (0..n).find(|&b| op(a, b) == identity && op(b, a) == identity) {
                Some(b) => inv[a] = b,
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        return bad(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            identity,
            table,
            inv,
            label: label.into(),
            element_labels,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        FiniteGroup::from_table(table, labels, format!("C{n}")).expect("cyclic group table")
    }

    /// Direct product with `self` as the low-order coordinate.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.order, other.order);
        let split = |x: usize| (x % n, x / n);
        let total = n * m;
        let table = (0..total * total)
            .map(|i| {
                let (a, b) = (split(i / total), split(i % total));
                self.op(a.0, b.0) + n * other.op(a.1, b.1)
            })
            .collect();
        let labels = (0..total)
            .map(|x| {
                let (a, b) = split(x);
                format!("({},{})", self.element_labels[a], other.element_labels[b])
            })
            .collect();
        FiniteGroup::from_table(table, labels, format!("{}x{}", self.label, other.label))
            .expect("direct product table")
    }

    /// Dihedral group of order `2n`, elements `r^i s^j` at index `i + n*j`.
    pub fn dihedral(n: usize, label: &str) -> Self {
        let total = 2 * n;
        let table = (0..total * total)
            .map(|idx| {
                let (x, y) = (idx / total, idx % total);
                let (a, b) = (x % n, x / n);
                let (c, d) = (y % n, y / n);
                // r^a s^b r^c s^d = r^(a ± c) s^(b+d)
                let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
                rot + n * ((b + d) % 2)
            })
            .collect();
        let labels = (0..total)
            .map(|x| {
                let (i, j) = (x % n, x / n);
                let r = match i {
                    0 => String::new(),
                    1 => "r".to_string(),
                    _ => format!("r^{i}"),
                };
                let s = if j == 1 { "s" } else { "" };
                let l = format!("{r}{s}");
                if l.is_empty() {
                    "e".to_string()
                } else {
                    l
                }
            })
            .collect();
        FiniteGroup::from_table(table, labels, label).expect("dihedral table")
    }

    pub fn quaternion() -> Self {
        // unit part: 0 = 1, 1 = i, 2 = j, 3 = k; sign bit at 4
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let table = (0..64)
            .map(|idx| {
                let (x, y) = (idx / 8, idx % 8);
                let (u, neg) = unit_mul(x % 4, y % 4);
                let sign = (x >= 4) ^ (y >= 4) ^ neg;
                u + if sign { 4 } else { 0 }
            })
            .collect();
        let labels = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        FiniteGroup::from_table(table, labels, "Q8").expect("quaternion table")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn element_label(&self, g: usize) -> &str {
        &self.element_labels[g]
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, g);
            k += 1;
        }
        k
    }

    /// Least `m ≥ 1` with `g^m = e` for every `g`.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|g| self.element_order(g))
            .fold(1, lcm)
    }

    /// Every element order is a power of `p`. The equivalent condition that
    /// `|G|` is a power of `p` is checked alongside and must agree.
    pub fn is_p_group(&self, p: usize) -> bool {
        assert!(is_prime(p as u64), "{p} is not prime");
        let by_elements = self
            .elements()
            .all(|g| is_power_of(self.element_order(g), p));
        let by_order = is_power_of(self.order, p);
        assert_eq!(
            by_elements, by_order,
            "element-order and group-order p-group tests disagree on {}",
            self.label
        );
        by_elements
    }

    /// The subgroup generated by `g`, with its embedding into `self`
    /// (`embedding[i] = g^i`).
    pub fn cyclic_subgroup(&self, g: usize) -> (FiniteGroup, Vec<usize>) {
        let k = self.element_order(g);
        let mut embedding = Vec::with_capacity(k);
        let mut x = self.identity;
        for _ in 0..k {
            embedding.push(x);
            x = self.op(x, g);
        }
        let mut sub = FiniteGroup::cyclic(k);
        sub.label = format!("<{}> in {}", self.element_labels[g], self.label);
        sub.element_labels = embedding
            .iter()
            .map(|&h| self.element_labels[h].clone())
            .collect();
        (sub, embedding)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n > 1 && n % p == 0 {
        n /= p;
    }
    n == 1
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// The named catalog group.
pub fn group_catalog(name: &str) -> Result<FiniteGroup> {
    let g = match name {
        "C1" => FiniteGroup::cyclic(1),
        "C2" => FiniteGroup::cyclic(2),
        "C3" => FiniteGroup::cyclic(3),
        "C4" => FiniteGroup::cyclic(4),
        "C8" => FiniteGroup::cyclic(8),
        "C9" => FiniteGroup::cyclic(9),
        "C2xC2" => FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)),
        "C2xC2xC2" => FiniteGroup::cyclic(2)
            .direct_product(&FiniteGroup::cyclic(2))
            .direct_product(&FiniteGroup::cyclic(2)),
        "C3xC3" => FiniteGroup::cyclic(3).direct_product(&FiniteGroup::cyclic(3)),
        "S3" => FiniteGroup::dihedral(3, "S3"),
        "D4" => FiniteGroup::dihedral(4, "D4"),
        "Q8" => FiniteGroup::quaternion(),
        other => return Err(RingError::UnknownGroup(other.to_string())),
    };
    Ok(g)
}
