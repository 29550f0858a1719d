//! Rings whose elements are tuples over additive components, enumerated as
//! little-endian mixed-radix digit vectors: component 0 is the least
//! significant digit.

use std::sync::Arc;

use crate::error::Result;
use crate::ring::{fill_table, FiniteRing, Namer};

/// Components never exceed this count: each has at least two elements and
/// orders are capped at 2^16.
pub(crate) const MAX_COMPONENTS: usize = 16;

pub(crate) type Digits = [usize; MAX_COMPONENTS];

/// An additive group contributing one coordinate.
pub(crate) trait Additive: Sync {
    fn order(&self) -> usize;
    fn zero(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
}

impl Additive for FiniteRing {
    fn order(&self) -> usize {
        FiniteRing::order(self)
    }
    fn zero(&self) -> usize {
        FiniteRing::zero(self)
    }
    fn add(&self, a: usize, b: usize) -> usize {
        FiniteRing::add(self, a, b)
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Layout {
    radices: Vec<usize>,
    weights: Vec<usize>,
    order: usize,
}

impl Layout {
    pub(crate) fn new(radices: Vec<usize>) -> Self {
        assert!(radices.len() <= MAX_COMPONENTS);
        let mut weights = Vec::with_capacity(radices.len());
        let mut w = 1usize;
        for &r in &radices {
            weights.push(w);
            w *= r;
        }
        Layout {
            radices,
            weights,
            order: w,
        }
    }

    pub(crate) fn order(&self) -> usize {
        self.order
    }

    pub(crate) fn len(&self) -> usize {
        self.radices.len()
    }

    pub(crate) fn decode(&self, mut idx: usize) -> Digits {
        let mut d = [0; MAX_COMPONENTS];
        for (slot, &r) in d.iter_mut().zip(&self.radices) {
            *slot = idx % r;
            idx /= r;
        }
        d
    }

    pub(crate) fn encode(&self, d: &[usize]) -> usize {
        d.iter().zip(&self.weights).map(|(x, w)| x * w).sum()
    }
}

/// Builds a ring on the product of `comps` with componentwise addition and the
/// given multiplication on digit vectors.
pub(crate) fn build_tuple_ring<M>(
    comps: &[&dyn Additive],
    one: &[usize],
    label: String,
    mul: M,
) -> Result<(FiniteRing, Layout)>
where
    M: Fn(&Digits, &Digits, &mut Digits) + Sync,
{
    let layout = Layout::new(comps.iter().map(|c| c.order()).collect());
    let k = layout.len();
    let n = layout.order();
    let digits: Vec<Digits> = (0..n).map(|i| layout.decode(i)).collect();
    let zero_digits: Vec<usize> = comps.iter().map(|c| c.zero()).collect();
    // Per-component addition with the place weight folded in.
    let sums: Vec<Vec<usize>> = comps
        .iter()
        .zip(&layout.weights)
        .map(|(c, &w)| {
            let r = c.order();
            (0..r * r).map(|i| c.add(i / r, i % r) * w).collect()
        })
        .collect();
    let add = |a: usize, b: usize| -> usize {
        let (da, db) = (&digits[a], &digits[b]);
        (0..k)
            .map(|i| sums[i][da[i] * layout.radices[i] + db[i]])
            .sum()
    };
    let mul = |a: usize, b: usize| -> usize {
        let mut out = [0; MAX_COMPONENTS];
        mul(&digits[a], &digits[b], &mut out);
        layout.encode(&out[..k])
    };
    let (zero, one) = (layout.encode(&zero_digits), layout.encode(one));
    let ring = if n > DIRECT_LIMIT {
        let add_table = fill_table(n, add);
        let mul_table = mul_by_distributivity(&layout, &digits, &zero_digits, &add_table, mul);
        FiniteRing::from_parts(n, zero, one, label, add_table, mul_table)?
    } else {
        FiniteRing::build(n, zero, one, label, add, mul)?
    };
    Ok((ring, layout))
}

/// Above this order only products of single-coordinate elements are
/// computed directly; every other row follows from left distributivity.
pub(crate) const DIRECT_LIMIT: usize = 512;

/// The multiplication table from rows of single-coordinate elements, using
/// `(x + y)b = xb + yb`. Rows are filled in order of the number of nonzero
/// coordinates, so both summands of a split are always ready.
pub(crate) fn mul_by_distributivity(
    layout: &Layout,
    digits: &[Digits],
    zero_digits: &[usize],
    add_table: &[u16],
    mul: impl Fn(usize, usize) -> usize,
) -> Box<[u16]> {
    let n = layout.order();
    let k = layout.len();
    let support = |a: usize| (0..k).filter(|&i| digits[a][i] != zero_digits[i]).count();
    let mut rows: Vec<usize> = (0..n).collect();
    rows.sort_by_key(|&a| support(a));
    let mut table = vec![0u16; n * n];
    let mut buf = vec![0u16; n];
    for a in rows {
        let d = &digits[a];
        let first = (0..k).find(|&i| d[i] != zero_digits[i]);
        match first {
            Some(i) if support(a) > 1 => {
                let w = layout.weights[i];
                let lo = layout.encode(&zero_digits[..k]) - zero_digits[i] * w + d[i] * w;
                let hi = a - d[i] * w + zero_digits[i] * w;
                for (b, slot) in buf.iter_mut().enumerate() {
                    let x = table[hi * n + b] as usize;
                    let y = table[lo * n + b] as usize;
                    *slot = add_table[x * n + y];
                }
            }
            _ => {
                for (b, slot) in buf.iter_mut().enumerate() {
                    *slot = mul(a, b) as u16;
                }
            }
        }
        table[a * n..(a + 1) * n].copy_from_slice(&buf);
    }
    table.into_boxed_slice()
}

/// A namer rendering each coordinate with its component's namer and joining
/// them with `join`.
pub(crate) fn tuple_namer(
    layout: &Layout,
    namers: Vec<Namer>,
    join: impl Fn(&[String]) -> String + Send + Sync + 'static,
) -> Namer {
    let layout = layout.clone();
    Arc::new(move |idx| {
        let d = layout.decode(idx);
        let parts: Vec<String> = namers
            .iter()
            .enumerate()
            .map(|(i, name)| name(d[i]))
            .collect();
        join(&parts)
    })
}

pub(crate) fn paren_join(parts: &[String]) -> String {
    format!("({})", parts.join(", "))
}

/// Renders `rows x cols` entries given row-major.
pub(crate) fn matrix_join(cols: usize) -> impl Fn(&[String]) -> String + Send + Sync + 'static {
    move |parts: &[String]| {
        let rows: Vec<String> = parts
            .chunks(cols)
            .map(|row| format!("[{}]", row.join(", ")))
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, ring_zn, upper_triangular, Budget};

    #[test]
    fn distributive_fill_matches_direct_products() {
        let z3 = ring_zn(3).unwrap();
        let z4 = ring_zn(4).unwrap();
        let budget = Budget::default();
        for ring in [
            matrix_ring(2, &z3, &budget).unwrap(),
            upper_triangular(3, &ring_zn(2).unwrap(), &budget).unwrap(),
            upper_triangular(2, &z4, &budget).unwrap(),
        ] {
            let n = ring.order();
            let radices = match n {
                81 => vec![3; 4],
                8 => vec![2; 3],
                _ => vec![4; 3],
            };
            let layout = Layout::new(radices);
            let digits: Vec<Digits> = (0..n).map(|i| layout.decode(i)).collect();
            let add: Vec<u16> = (0..n * n).map(|i| ring.add(i / n, i % n) as u16).collect();
            let table = mul_by_distributivity(&layout, &digits, &vec![0; layout.len()], &add, |a, b| ring.mul(a, b));
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(table[a * n + b] as usize, ring.mul(a, b), "{} at ({a}, {b})", ring.label());
                }
            }
        }
    }
}
