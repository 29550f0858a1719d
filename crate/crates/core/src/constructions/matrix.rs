use std::sync::Arc;

use super::tuple::{build_tuple_ring, matrix_join, tuple_namer, Additive};
use super::{order_pow, Budget};
use crate::error::{Result, RingError};
use crate::ring::FiniteRing;

/// `n x n` matrices over `R`, entries row-major.
pub fn matrix_ring(n: usize, base: &FiniteRing, budget: &Budget) -> Result<FiniteRing> {
    if n == 0 {
        return Err(RingError::InvalidArgument("matrix size must be at least 1".into()));
    }
    let label = format!("M({n}, {})", base.label());
    if n == 1 {
        return Ok(base.relabeled(label));
    }
    budget.check(order_pow(base.order(), n * n))?;
    let comps: Vec<&dyn Additive> = vec![base; n * n];
    let one: Vec<usize> = (0..n * n)
        .map(|k| if k / n == k % n { base.one() } else { base.zero() })
        .collect();
    let (ring, layout) = build_tuple_ring(&comps, &one, label, |a, b, out| {
        for i in 0..n {
            for j in 0..n {
                let mut acc = base.zero();
                for k in 0..n {
                    acc = base.add(acc, base.mul(a[i * n + k], b[k * n + j]));
                }
                out[i * n + j] = acc;
            }
        }
    })?;
    let namers = vec![base.namer(); n * n];
    Ok(ring.with_namer(tuple_namer(&layout, namers, matrix_join(n))))
}

/// Positions `(i, j)` with `i <= j`, row-major.
fn upper_positions(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// Upper triangular `n x n` matrices over `R`; the stored entries are the
/// positions on or above the diagonal, row-major.
pub fn upper_triangular(n: usize, base: &FiniteRing, budget: &Budget) -> Result<FiniteRing> {
    if n == 0 {
        return Err(RingError::InvalidArgument("matrix size must be at least 1".into()));
    }
    let label = format!("T({n}, {})", base.label());
    if n == 1 {
        return Ok(base.relabeled(label));
    }
    let pos = upper_positions(n);
    let m = pos.len();
    budget.check(order_pow(base.order(), m))?;
    let mut slot = vec![usize::MAX; n * n];
    for (k, &(i, j)) in pos.iter().enumerate() {
        slot[i * n + j] = k;
    }
    let comps: Vec<&dyn Additive> = vec![base; m];
    let one: Vec<usize> = pos
        .iter()
        .map(|&(i, j)| if i == j { base.one() } else { base.zero() })
        .collect();
    let (ring, layout) = build_tuple_ring(&comps, &one, label, |a, b, out| {
        for (k, &(i, j)) in pos.iter().enumerate() {
            let mut acc = base.zero();
            for t in i..=j {
                acc = base.add(acc, base.mul(a[slot[i * n + t]], b[slot[t * n + j]]));
            }
            out[k] = acc;
        }
    })?;
    let inner = base.namer();
    let zero_label = base.element_label(base.zero());
    let namer = Arc::new(move |idx: usize| {
        let d = layout.decode(idx);
        let rows: Vec<String> = (0..n)
            .map(|i| {
                let cells: Vec<String> = (0..n)
                    .map(|j| {
                        if j < i {
                            zero_label.clone()
                        } else {
                            inner(d[slot[i * n + j]])
                        }
                    })
                    .collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    });
    Ok(ring.with_namer(namer))
}

fn central(base: &FiniteRing, s: usize) -> Result<()> {
    base.check_element(s)?;
    if !base.is_central(s) {
        return Err(RingError::NotCentral(s));
    }
    Ok(())
}

/// The generalized matrix ring `K_s(R)`: formal matrices `[[a, x], [y, b]]`
/// with
/// `[[a1 a2 + s x1 y2, a1 x2 + x1 b2], [y1 a2 + b1 y2, s y1 x2 + b1 b2]]`.
/// Digits are row-major `(a, x, y, b)`.
pub fn ks_ring(base: &FiniteRing, s: usize, budget: &Budget) -> Result<FiniteRing> {
    central(base, s)?;
    budget.check(order_pow(base.order(), 4))?;
    let label = format!("Ks({}, s={s})", base.label());
    let comps: Vec<&dyn Additive> = vec![base; 4];
    let (o, z) = (base.one(), base.zero());
    let r = base;
    let (ring, layout) = build_tuple_ring(&comps, &[o, z, z, o], label, |p, q, out| {
        let (a1, x1, y1, b1) = (p[0], p[1], p[2], p[3]);
        let (a2, x2, y2, b2) = (q[0], q[1], q[2], q[3]);
        out[0] = r.add(r.mul(a1, a2), r.mul(s, r.mul(x1, y2)));
        out[1] = r.add(r.mul(a1, x2), r.mul(x1, b2));
        out[2] = r.add(r.mul(y1, a2), r.mul(b1, y2));
        out[3] = r.add(r.mul(s, r.mul(y1, x2)), r.mul(b1, b2));
    })?;
    let namers = vec![base.namer(); 4];
    Ok(ring.with_namer(tuple_namer(&layout, namers, matrix_join(2))))
}

/// The exponent of `s` attached to `a_ik b_kj` in `M_n(R;s)`: the symbol
/// `1 + δ_ik − δ_ij − δ_jk` evaluated at the index triple `(i, k, j)`.
/// Indices are 1-based as in the usual notation but any base works.
pub fn formal_matrix_exponent(i: usize, j: usize, k: usize) -> u32 {
    // δ_{ijk} = 1 + δ_ik - δ_ij - δ_jk
    let d = |x: usize, y: usize| i64::from(x == y);
    (1 + d(i, k) - d(i, j) - d(j, k)) as u32
}

/// The formal matrix ring `M_n(R;s)` with product
/// `c_ij = Σ_k s^{δ_ikj} a_ik b_kj`, entries row-major.
pub fn formal_matrix(n: usize, base: &FiniteRing, s: usize, budget: &Budget) -> Result<FiniteRing> {
    if n < 2 {
        return Err(RingError::InvalidArgument(
            "formal matrix rings need size at least 2".into(),
        ));
    }
    central(base, s)?;
    budget.check(order_pow(base.order(), n * n))?;
    let label = format!("FM({n}, {}, s={s})", base.label());
    let s_pow: Vec<usize> = (0..3).map(|e| base.pow(s, e)).collect();
    let mut coeff = vec![0usize; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                coeff[(i * n + j) * n + k] = s_pow[formal_matrix_exponent(i, k, j) as usize];
            }
        }
    }
    let comps: Vec<&dyn Additive> = vec![base; n * n];
    let one: Vec<usize> = (0..n * n)
        .map(|k| if k / n == k % n { base.one() } else { base.zero() })
        .collect();
    let r = base;
    let (ring, layout) = build_tuple_ring(&comps, &one, label, |a, b, out| {
        for i in 0..n {
            for j in 0..n {
                let mut acc = r.zero();
                for k in 0..n {
                    let term = r.mul(a[i * n + k], b[k * n + j]);
                    acc = r.add(acc, r.mul(coeff[(i * n + j) * n + k], term));
                }
                out[i * n + j] = acc;
            }
        }
    })?;
    let namers = vec![base.namer(); n * n];
    Ok(ring.with_namer(tuple_namer(&layout, namers, matrix_join(n))))
}
