use std::sync::Arc;

use super::tuple::{build_tuple_ring, Additive, Layout};
use super::{order_pow, Budget};
use crate::error::{Result, RingError};
use crate::groups::FiniteGroup;
use crate::ring::{ElementSet, FiniteRing, GroupRingInfo, Provenance, RingHom, SetRole};

/// The group ring `RG`. Digit `g` holds the coefficient of the group element
/// with index `g`, so the identity's coefficient is the least significant.
pub fn group_ring(base: &Arc<FiniteRing>, group: &Arc<FiniteGroup>, budget: &Budget) -> Result<FiniteRing> {
    let n = group.order();
    budget.check(order_pow(base.order(), n))?;
    let label = format!("GroupRing({}, {})", base.label(), group.label());
    let comps: Vec<&dyn Additive> = vec![base.as_ref(); n];
    let mut one = vec![base.zero(); n];
    one[group.identity()] = base.one();
    let r = base.as_ref();
    let g = group.as_ref();
    let (ring, layout) = build_tuple_ring(&comps, &one, label, |a, b, out| {
        out[..n].fill(r.zero());
        for x in 0..n {
            if a[x] == r.zero() {
                continue;
            }
            for y in 0..n {
                let xy = g.op(x, y);
                out[xy] = r.add(out[xy], r.mul(a[x], b[y]));
            }
        }
    })?;
    let info = GroupRingInfo {
        base: base.clone(),
        group: group.clone(),
    };
    let namer = group_ring_namer(layout, base, group);
    Ok(ring
        .with_namer(namer)
        .with_provenance(Provenance::GroupRing(Arc::new(info))))
}

fn group_ring_namer(layout: Layout, base: &Arc<FiniteRing>, group: &Arc<FiniteGroup>) -> crate::ring::Namer {
    let base = base.clone();
    let group = group.clone();
    Arc::new(move |idx| {
        let d = layout.decode(idx);
        let terms: Vec<String> = group
            .elements()
            .filter(|&g| d[g] != base.zero())
            .map(|g| {
                let name = group.element_label(g);
                if d[g] == base.one() {
                    name.to_string()
                } else {
                    format!("{}*{}", base.element_label(d[g]), name)
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    })
}

fn info(rg: &FiniteRing) -> Result<&GroupRingInfo> {
    match rg.provenance() {
        Provenance::GroupRing(info) => Ok(info),
        _ => Err(RingError::NotAGroupRing),
    }
}

fn augmentation_map(rg: &FiniteRing) -> Result<(Arc<FiniteRing>, Vec<usize>)> {
    let info = info(rg)?;
    let base = &info.base;
    let layout = Layout::new(vec![base.order(); info.group.order()]);
    let map = rg
        .elements()
        .map(|x| {
            let d = layout.decode(x);
            d[..layout.len()].iter().fold(base.zero(), |acc, &c| base.add(acc, c))
        })
        .collect();
    Ok((base.clone(), map))
}

/// The augmentation `ε(Σ a_g g) = Σ a_g` onto the coefficient ring.
pub fn augmentation(rg: &Arc<FiniteRing>) -> Result<RingHom> {
    let (base, map) = augmentation_map(rg)?;
    RingHom::new(rg.clone(), base, map)
}

/// The augmentation ideal `Δ(RG) = ker ε`.
pub fn augmentation_ideal(rg: &FiniteRing) -> Result<ElementSet<'_>> {
    let (base, map) = augmentation_map(rg)?;
    let members = rg.elements().filter(|&x| map[x] == base.zero());
    ElementSet::from_members(rg, members, SetRole::Ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::ring_zn;
    use crate::groups::group_catalog;

    fn z2c2() -> Arc<FiniteRing> {
        let z2 = Arc::new(ring_zn(2).unwrap());
        let c2 = Arc::new(group_catalog("C2").unwrap());
        Arc::new(group_ring(&z2, &c2, &Budget::default()).unwrap())
    }

    #[test]
    fn labels_and_augmentation() {
        let rg = z2c2();
        let labels: Vec<String> = rg.elements().map(|a| rg.element_label(a)).collect();
        assert_eq!(labels, vec!["0", "e", "g", "e+g"]);
        let eps = augmentation(&rg).unwrap();
        assert_eq!(eps.apply(3), 0);
        assert_eq!(eps.apply(2), 1);
        assert!(eps.is_surjective());
        assert_eq!(augmentation_ideal(&rg).unwrap().members(), &[0, 3]);
    }

    #[test]
    fn not_a_group_ring() {
        let z2 = Arc::new(ring_zn(2).unwrap());
        assert_eq!(augmentation(&z2).unwrap_err(), RingError::NotAGroupRing);
        assert!(augmentation_ideal(&z2).is_err());
    }
}
