use super::decide::{domain, search};
use super::{Certificate, Predicate, PredicateVerdict, Witness};
use crate::ring::FiniteRing;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn parts<const N: usize>(c: &Certificate) -> Result<[usize; N], String> {
    c.parts
        .as_slice()
        .try_into()
        .map_err(|_| format!("certificate for {} has {} parts, expected {N}", c.element, c.parts.len()))
}

fn nonzero_idempotent(r: &FiniteRing, e: usize) -> bool {
    e != r.zero() && r.mul(e, e) == e
}

/// Re-derives the identity a positive certificate claims, using only ring
/// arithmetic and the structural subsets.
fn certificate_holds(r: &FiniteRing, p: Predicate, c: &Certificate) -> Result<(), String> {
    let a = c.element;
    r.check_element(a).map_err(|e| e.to_string())?;
    for &x in &c.parts {
        r.check_element(x).map_err(|e| e.to_string())?;
    }
    let one = r.one();
    let in_j = |x: usize| r.jacobson().contains(x);
    let nil = |x: usize| r.is_nilpotent(x);
    let idem = |x: usize| r.mul(x, x) == x;
    let bad = || format!("certificate for {a} does not satisfy the {p} identity");
    match p {
        Predicate::UJ | Predicate::TwoUJ => {
            let [j] = parts(c)?;
            let lhs = if p == Predicate::UJ { a } else { r.mul(a, a) };
            ensure(in_j(j) && lhs == r.add(one, j), bad)
        }
        Predicate::UU | Predicate::TwoUU => {
            let [q] = parts(c)?;
            let lhs = if p == Predicate::UU { a } else { r.mul(a, a) };
            ensure(nil(q) && lhs == r.add(one, q), bad)
        }
        Predicate::UNJ | Predicate::TwoUNJ => {
            let [q, j] = parts(c)?;
            let lhs = if p == Predicate::UNJ { a } else { r.mul(a, a) };
            ensure(nil(q) && in_j(j) && lhs == r.add(r.add(one, q), j), bad)
        }
        Predicate::Boolean | Predicate::Tripotent | Predicate::Potent => {
            let n = c.exponent.ok_or_else(|| format!("certificate for {a} lacks an exponent"))?;
            let expected = match p {
                Predicate::Boolean => n == 2,
                Predicate::Tripotent => n == 3,
                _ => n >= 2,
            };
            ensure(expected && r.pow(a, n) == a, bad)
        }
        Predicate::Reduced | Predicate::Semisimple => ensure(a == r.zero(), bad),
        Predicate::Abelian => ensure(idem(a) && r.is_central(a), bad),
        Predicate::Regular => {
            let [x] = parts(c)?;
            ensure(r.mul(r.mul(a, x), a) == a, bad)
        }
        Predicate::StronglyRegular => {
            let [x] = parts(c)?;
            ensure(r.mul(r.mul(a, a), x) == a, bad)
        }
        Predicate::UnitRegular => {
            let [u] = parts(c)?;
            ensure(r.is_unit(u) && r.mul(r.mul(a, u), a) == a, bad)
        }
        Predicate::PiRegular | Predicate::StronglyPiRegular => {
            let [x] = parts(c)?;
            let n = c.exponent.ok_or_else(|| format!("certificate for {a} lacks an exponent"))?;
            let an = r.pow(a, n);
            let ok = if p == Predicate::PiRegular {
                r.mul(r.mul(an, x), an) == an
            } else {
                r.mul(r.mul(an, a), x) == an
            };
            ensure(n >= 1 && ok, bad)
        }
        Predicate::Clean => {
            let [e, u] = parts(c)?;
            ensure(idem(e) && r.is_unit(u) && r.add(e, u) == a, bad)
        }
        Predicate::JClean => {
            let [e, j] = parts(c)?;
            ensure(idem(e) && in_j(j) && r.add(e, j) == a, bad)
        }
        Predicate::SemiTripotent => {
            let [e, j] = parts(c)?;
            ensure(r.pow(e, 3) == e && in_j(j) && r.add(e, j) == a, bad)
        }
        Predicate::StronglyTwoNilClean => {
            let [e, f, b] = parts(c)?;
            let commute = |x: usize, y: usize| r.mul(x, y) == r.mul(y, x);
            ensure(
                idem(e)
                    && idem(f)
                    && nil(b)
                    && commute(e, f)
                    && commute(e, b)
                    && commute(f, b)
                    && r.add(r.add(e, f), b) == a,
                bad,
            )
        }
        Predicate::Exchange => {
            let [e, x, y] = parts(c)?;
            let one_minus = |z: usize| r.sub(one, z);
            ensure(
                idem(e) && r.mul(a, x) == e && r.mul(one_minus(a), y) == one_minus(e),
                bad,
            )
        }
        Predicate::Semiregular => match c.tag {
            Some("lift") => {
                let [e] = parts(c)?;
                ensure(idem(e) && in_j(r.sub(e, a)), bad)
            }
            Some("regular") => {
                let [x] = parts(c)?;
                ensure(in_j(r.sub(r.mul(r.mul(a, x), a), a)), bad)
            }
            _ => Err(format!("certificate for {a} has no clause tag")),
        },
        Predicate::Semipotent => {
            let [x, y] = parts(c)?;
            ensure(
                !in_j(a) && nonzero_idempotent(r, r.mul(a, x)) && nonzero_idempotent(r, r.mul(y, a)),
                bad,
            )
        }
        Predicate::DedekindFinite => match c.parts.as_slice() {
            [] => ensure(r.elements().all(|b| r.mul(a, b) != one), bad),
            [b] => ensure(r.mul(a, *b) == one && r.mul(*b, a) == one, bad),
            _ => Err(bad()),
        },
        Predicate::Local => {
            let [b] = parts(c)?;
            ensure(r.mul(a, b) == one && r.mul(b, a) == one, bad)
        }
        Predicate::TwoPrimal => ensure(nil(a) && in_j(a), bad),
    }
}

/// Checks that no certificate exists for `a`, by plain exhaustive search
/// over the defining condition.
fn counterexample_holds(r: &FiniteRing, p: Predicate, c: &Certificate) -> Result<(), String> {
    let a = c.element;
    r.check_element(a).map_err(|e| e.to_string())?;
    let one = r.one();
    let all = || r.elements();
    let in_j = |x: usize| r.jacobson().contains(x);
    let nil = |x: usize| r.is_nilpotent(x);
    let idem = |x: usize| r.mul(x, x) == x;
    let unit = |x: usize| r.is_unit(x);
    let not_bad = || format!("{a} is not a counterexample for {p}");
    let fails = match p {
        Predicate::UJ => unit(a) && !in_j(r.sub(a, one)),
        Predicate::UU => unit(a) && !nil(r.sub(a, one)),
        Predicate::UNJ => unit(a) && !all().any(|q| nil(q) && in_j(r.sub(r.sub(a, one), q))),
        Predicate::TwoUJ => unit(a) && !in_j(r.sub(r.mul(a, a), one)),
        Predicate::TwoUU => unit(a) && !nil(r.sub(r.mul(a, a), one)),
        Predicate::TwoUNJ => {
            let t = r.sub(r.mul(a, a), one);
            unit(a) && !all().any(|q| nil(q) && in_j(r.sub(t, q)))
        }
        Predicate::Boolean => r.mul(a, a) != a,
        Predicate::Tripotent => r.pow(a, 3) != a,
        Predicate::Potent => (2..=r.order() as u64 + 1).all(|n| r.pow(a, n) != a),
        Predicate::Reduced => a != r.zero() && nil(a),
        Predicate::Semisimple => a != r.zero() && in_j(a),
        Predicate::Abelian => {
            let [x] = parts(c)?;
            idem(a) && r.mul(a, x) != r.mul(x, a)
        }
        Predicate::Regular => !all().any(|x| r.mul(r.mul(a, x), a) == a),
        Predicate::StronglyRegular => !all().any(|x| r.mul(r.mul(a, a), x) == a),
        Predicate::UnitRegular => !all().any(|u| unit(u) && r.mul(r.mul(a, u), a) == a),
        Predicate::PiRegular => (1..=r.order() as u64 + 1).all(|n| {
            let an = r.pow(a, n);
            !all().any(|x| r.mul(r.mul(an, x), an) == an)
        }),
        Predicate::StronglyPiRegular => (1..=r.order() as u64 + 1).all(|n| {
            let an = r.pow(a, n);
            let next = r.mul(an, a);
            !all().any(|x| r.mul(next, x) == an)
        }),
        Predicate::Clean => !all().any(|e| idem(e) && unit(r.sub(a, e))),
        Predicate::JClean => !all().any(|e| idem(e) && in_j(r.sub(a, e))),
        Predicate::SemiTripotent => !all().any(|e| r.pow(e, 3) == e && in_j(r.sub(a, e))),
        Predicate::StronglyTwoNilClean => !all().any(|e| {
            idem(e)
                && all().any(|f| {
                    let b = r.sub(r.sub(a, e), f);
                    let commute = |x: usize, y: usize| r.mul(x, y) == r.mul(y, x);
                    idem(f) && nil(b) && commute(e, f) && commute(e, b) && commute(f, b)
                })
        }),
        Predicate::Exchange => !all().any(|e| {
            idem(e)
                && all().any(|x| r.mul(a, x) == e)
                && all().any(|y| r.mul(r.sub(one, a), y) == r.sub(one, e))
        }),
        Predicate::Semiregular => match c.tag {
            Some("lift") => {
                let cos = |x: usize| in_j(r.sub(x, a));
                idem_mod_j(r, a) && !all().any(|e| idem(e) && cos(e))
            }
            Some("regular") => !all().any(|x| in_j(r.sub(r.mul(r.mul(a, x), a), a))),
            _ => return Err(format!("counterexample {a} has no clause tag")),
        },
        Predicate::Semipotent => {
            let nz = |e: usize| nonzero_idempotent(r, e);
            !in_j(a)
                && match c.tag {
                    Some("right") => !all().any(|x| nz(r.mul(a, x))),
                    Some("left") => !all().any(|y| nz(r.mul(y, a))),
                    _ => return Err(format!("counterexample {a} has no side tag")),
                }
        }
        Predicate::DedekindFinite => {
            let [b] = parts(c)?;
            r.mul(a, b) == one && r.mul(b, a) != one
        }
        Predicate::Local => !in_j(a) && !unit(a),
        Predicate::TwoPrimal => nil(a) != in_j(a),
    };
    ensure(fails, not_bad)
}

/// `a² − a ∈ J(R)`: the coset of `a` is idempotent in `R/J(R)`.
fn idem_mod_j(r: &FiniteRing, a: usize) -> bool {
    r.jacobson().contains(r.sub(r.mul(a, a), a))
}

/// Re-validates a verdict inside `ring`: every certificate of a positive
/// verdict satisfies its identity and the certificates cover every
/// quantified element; a negative verdict's element admits no certificate.
pub fn check_witness(ring: &FiniteRing, verdict: &PredicateVerdict) -> Result<(), String> {
    let p = verdict.predicate;
    match (&verdict.witness, verdict.holds) {
        (Witness::Certificates { certificates }, true) => {
            let expected = domain(ring, p);
            ensure(certificates.len() == expected.len(), || {
                format!(
                    "{p}: {} certificates for {} quantified elements",
                    certificates.len(),
                    expected.len()
                )
            })?;
            for (c, (a, tag)) in certificates.iter().zip(&expected) {
                ensure(c.element == *a && c.tag == *tag, || {
                    format!("{p}: certificate for {} where {a} was expected", c.element)
                })?;
                certificate_holds(ring, p, c)?;
            }
            Ok(())
        }
        (Witness::Counterexample { counterexample }, false) => {
            counterexample_holds(ring, p, counterexample)?;
            // The search must agree that no certificate exists.
            ensure(
                search(ring, p, counterexample.element, counterexample_tag(p, counterexample)).is_err(),
                || format!("{p}: search finds a certificate for the counterexample"),
            )
        }
        _ => Err(format!("{p}: witness kind does not match the verdict")),
    }
}

fn counterexample_tag(p: Predicate, c: &Certificate) -> Option<&'static str> {
    match p {
        Predicate::Semiregular => c.tag,
        _ => None,
    }
}
