use std::sync::Arc;

use super::tuple::{build_tuple_ring, paren_join, tuple_namer, Additive};
use super::Budget;
use crate::error::{Result, RingError};
use crate::groups::is_prime;
use crate::ring::FiniteRing;

/// The residue ring `Z/nZ`; element `i` is the residue `i`.
pub fn ring_zn(n: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(RingError::InvalidArgument(format!(
            "Z{n} is not a unital ring with 1 != 0"
        )));
    }
    let ring = FiniteRing::build(n, 0, 1 % n, format!("Z{n}"), |a, b| (a + b) % n, |a, b| {
        (a * b) % n
    })?;
    Ok(ring.with_namer(Arc::new(|i| i.to_string())))
}

/// Polynomials over `Z_p` as little-endian coefficient vectors.
mod poly {
    pub(super) fn trim(mut f: Vec<usize>) -> Vec<usize> {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    pub(super) fn rem(f: &[usize], g: &[usize], p: usize) -> Vec<usize> {
        let mut r = trim(f.to_vec());
        let g = trim(g.to_vec());
        let dg = g.len() - 1;
        let lead_inv = inverse_mod(g[dg], p);
        while r.len() > dg {
            let top = r.len() - 1;
            let c = r[top] * lead_inv % p;
            let shift = top - dg;
            for (i, &gi) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - c * gi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub(super) fn inverse_mod(a: usize, p: usize) -> usize {
        (1..p).find(|&x| a * x % p == 1).expect("nonzero residue mod a prime")
    }

    /// All monic polynomials of the given degree, in increasing order of
    /// their little-endian base-p value.
    pub(super) fn monic(degree: usize, p: usize) -> impl Iterator<Item = Vec<usize>> {
        let count = p.pow(degree as u32);
        (0..count).map(move |mut v| {
            let mut f = Vec::with_capacity(degree + 1);
            for _ in 0..degree {
                f.push(v % p);
                v /= p;
            }
            f.push(1);
            f
        })
    }

    /// No monic factor of degree `1..=deg/2`.
    pub(super) fn is_irreducible(f: &[usize], p: usize) -> bool {
        let deg = f.len() - 1;
        (1..=deg / 2).all(|d| monic(d, p).all(|g| !rem(f, &g, p).is_empty()))
    }
}

/// The first monic irreducible polynomial of degree `k` over `Z_p`, ordered
/// by the base-p value of its coefficient vector (constant term least
/// significant). Returned little-endian with the leading 1.
pub fn first_irreducible(p: usize, k: usize) -> Vec<usize> {
    poly::monic(k, p)
        .find(|f| poly::is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

fn poly_label(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "a".to_string(),
            (1, c) => format!("{c}a"),
            (i, 1) => format!("a^{i}"),
            (i, c) => format!("{c}a^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// The field with `p^k` elements as `Z_p[a]/(f)` for the first monic
/// irreducible `f` of degree `k`. Element index `Σ c_i p^i` is the residue
/// `Σ c_i a^i`; labels use `a` for the generator so they stay distinct from
/// polynomial variables built on top.
pub fn ring_gf(p: u64, k: u32, budget: &Budget) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    if k == 0 {
        return Err(RingError::InvalidArgument("GF degree must be at least 1".into()));
    }
    let q = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
    budget.check(q)?;
    let (p, k) = (p as usize, k as usize);
    let zp = ring_zn(p)?;
    let modulus = first_irreducible(p, k);
    let comps: Vec<&dyn Additive> = vec![&zp; k];
    let mut one = vec![0; k];
    one[0] = 1;
    let label = format!("GF({})", p.pow(k as u32));
    let (ring, layout) = build_tuple_ring(&comps, &one, label, |a, b, out| {
        let mut prod = vec![0usize; 2 * k - 1];
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
            }
        }
        let r = poly::rem(&prod, &modulus, p);
        for i in 0..k {
            out[i] = r.get(i).copied().unwrap_or(0);
        }
    })?;
    let layout_for_names = layout.clone();
    Ok(ring.with_namer(Arc::new(move |idx| {
        let d = layout_for_names.decode(idx);
        poly_label(&d[..k])
    })))
}

/// Direct product with componentwise operations. Element tuples are
/// little-endian: the first factor is the least significant digit.
pub fn product(factors: &[&FiniteRing], budget: &Budget) -> Result<FiniteRing> {
    if factors.is_empty() {
        return Err(RingError::InvalidArgument(
            "a product needs at least one factor".into(),
        ));
    }
    let order = factors
        .iter()
        .try_fold(1u128, |acc, f| acc.checked_mul(f.order() as u128))
        .unwrap_or(u128::MAX);
    budget.check(order)?;
    let label = format!(
        "Prod({})",
        factors.iter().map(|f| f.label()).collect::<Vec<_>>().join(", ")
    );
    let comps: Vec<&dyn Additive> = factors.iter().map(|f| *f as &dyn Additive).collect();
    let one: Vec<usize> = factors.iter().map(|f| f.one()).collect();
    let k = factors.len();
    let (ring, layout) = build_tuple_ring(&comps, &one, label, |a, b, out| {
        for i in 0..k {
            out[i] = factors[i].mul(a[i], b[i]);
        }
    })?;
    let namers = factors.iter().map(|f| f.namer()).collect();
    Ok(ring.with_namer(tuple_namer(&layout, namers, paren_join)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zn_rejects_trivial_ring() {
        assert!(ring_zn(1).is_err());
        assert!(ring_zn(0).is_err());
    }

    #[test]
    fn first_irreducibles() {
        assert_eq!(first_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(first_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(first_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(first_irreducible(2, 4), vec![1, 1, 0, 0, 1]);
        assert_eq!(first_irreducible(5, 2), vec![2, 0, 1]);
    }

    #[test]
    fn gf_requires_prime() {
        assert_eq!(
            ring_gf(4, 1, &Budget::default()).unwrap_err(),
            RingError::NotPrime(4)
        );
    }

    #[test]
    fn gf_labels() {
        let f = ring_gf(2, 2, &Budget::default()).unwrap();
        let labels: Vec<String> = f.elements().map(|a| f.element_label(a)).collect();
        assert_eq!(labels, vec!["0", "1", "a", "a+1"]);
        // a * a = a + 1 modulo a^2 + a + 1
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn product_labels_are_tuples() {
        let z2 = ring_zn(2).unwrap();
        let z3 = ring_zn(3).unwrap();
        let p = product(&[&z2, &z3], &Budget::default()).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.label(), "Prod(Z2, Z3)");
        assert_eq!(p.element_label(p.one()), "(1, 1)");
    }
}
