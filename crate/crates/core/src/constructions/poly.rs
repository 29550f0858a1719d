use std::sync::Arc;

use super::tuple::{build_tuple_ring, paren_join, tuple_namer, Additive};
use super::{order_pow, Budget};
use crate::error::{Result, RingError};
use crate::ring::{Endomorphism, FiniteRing, Namer};

/// Tuples `(a_0, .., a_{n-1})` over `R` with the skew convolution
/// `c_i = Σ_{k ≤ i} a_k α^k(b_{i−k})`.
fn skew_convolution(
    n: usize,
    alpha: &Endomorphism,
    budget: &Budget,
    label: String,
) -> Result<(FiniteRing, super::tuple::Layout)> {
    if n == 0 {
        return Err(RingError::InvalidArgument("length must be at least 1".into()));
    }
    let base = alpha.ring().as_ref();
    budget.check(order_pow(base.order(), n))?;
    let powers: Vec<Vec<usize>> = (0..n).map(|k| alpha.power_table(k)).collect();
    let comps: Vec<&dyn Additive> = vec![base; n];
    let mut one = vec![base.zero(); n];
    one[0] = base.one();
    let r = base;
    build_tuple_ring(&comps, &one, label, |a, b, out| {
        for i in 0..n {
            let mut acc = r.zero();
            for k in 0..=i {
                acc = r.add(acc, r.mul(a[k], powers[k][b[i - k]]));
            }
            out[i] = acc;
        }
    })
}

/// The skew triangular ring `T_n(R, α)`: elements `(a_0, .., a_{n-1})`
/// standing for the upper triangular Toeplitz matrix whose k-th
/// superdiagonal is `a_k`.
pub fn skew_triangular(n: usize, alpha: &Endomorphism, budget: &Budget) -> Result<FiniteRing> {
    let label = format!("Tskew({n}, {}, alpha={})", alpha.ring().label(), alpha.name());
    let (ring, layout) = skew_convolution(n, alpha, budget, label)?;
    let namers = vec![alpha.ring().namer(); n];
    Ok(ring.with_namer(tuple_namer(&layout, namers, paren_join)))
}

fn poly_namer(layout: super::tuple::Layout, n: usize, inner: Namer, zero: usize, one: usize) -> Namer {
    Arc::new(move |idx| {
        let d = layout.decode(idx);
        let terms: Vec<String> = (0..n)
            .filter(|&i| d[i] != zero)
            .map(|i| {
                let c = inner(d[i]);
                let c = if c.contains(['+', '-', ' ']) { format!("({c})") } else { c };
                match i {
                    0 => inner(d[0]),
                    _ => {
                        let x = if i == 1 { "x".to_string() } else { format!("x^{i}") };
                        if d[i] == one {
                            x
                        } else {
                            format!("{c}{x}")
                        }
                    }
                }
            })
            .collect();
        if terms.is_empty() {
            inner(zero)
        } else {
            terms.join("+")
        }
    })
}

/// `R[x; α]/(x^n)`, the same ring as `T_n(R, α)` with polynomial labels.
/// Multiplication obeys `x r = α(r) x`.
pub fn skew_poly_mod(alpha: &Endomorphism, n: usize, budget: &Budget) -> Result<FiniteRing> {
    if n < 2 {
        return Err(RingError::InvalidArgument(
            "truncation degree must be at least 2".into(),
        ));
    }
    let base = alpha.ring();
    let label = format!("SkewPolyMod({}, {n}, alpha={})", base.label(), alpha.name());
    let (ring, layout) = skew_convolution(n, alpha, budget, label)?;
    let namer = poly_namer(layout, n, base.namer(), base.zero(), base.one());
    Ok(ring.with_namer(namer))
}

/// The truncated polynomial ring `R[x]/(x^n)`.
pub fn poly_mod(base: &Arc<FiniteRing>, n: usize, budget: &Budget) -> Result<FiniteRing> {
    if n < 2 {
        return Err(RingError::InvalidArgument(
            "truncation degree must be at least 2".into(),
        ));
    }
    let alpha = Endomorphism::identity(base.clone());
    let label = format!("PolyMod({}, {n})", base.label());
    let (ring, layout) = skew_convolution(n, &alpha, budget, label)?;
    let namer = poly_namer(layout, n, base.namer(), base.zero(), base.one());
    Ok(ring.with_namer(namer))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::ring_zn;

    #[test]
    fn polynomial_labels() {
        let z3 = Arc::new(ring_zn(3).unwrap());
        let r = poly_mod(&z3, 2, &Budget::default()).unwrap();
        let labels: Vec<String> = r.elements().map(|a| r.element_label(a)).collect();
        assert_eq!(labels, vec!["0", "1", "2", "x", "1+x", "2+x", "2x", "1+2x", "2+2x"]);
    }

    #[test]
    fn one_plus_x_squared_over_z3() {
        let z3 = Arc::new(ring_zn(3).unwrap());
        let r = poly_mod(&z3, 2, &Budget::default()).unwrap();
        // 1 + x has digits (1, 1) and index 4; 1 + 2x has index 7
        assert_eq!(r.mul(4, 4), 7);
        assert!(r.is_nilpotent(6));
    }
}
