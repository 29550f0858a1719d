use super::{Certificate, Predicate, PredicateVerdict};
use crate::ring::FiniteRing;

/// The elements a predicate quantifies over, with the clause each one is
/// checked against when a predicate has more than one.
pub(super) fn domain(ring: &FiniteRing, p: Predicate) -> Vec<(usize, Option<&'static str>)> {
    let plain = |v: Vec<usize>| v.into_iter().map(|a| (a, None)).collect();
    match p {
        Predicate::UJ
        | Predicate::UU
        | Predicate::UNJ
        | Predicate::TwoUJ
        | Predicate::TwoUU
        | Predicate::TwoUNJ => plain(ring.units().members().to_vec()),
        Predicate::Reduced => plain(ring.nilpotents().members().to_vec()),
        Predicate::Abelian => plain(ring.idempotents().members().to_vec()),
        Predicate::Semisimple => plain(ring.jacobson().members().to_vec()),
        Predicate::TwoPrimal => {
            let (nil, j) = (ring.nilpotents(), ring.jacobson());
            plain(ring.elements().filter(|&a| nil.contains(a) || j.contains(a)).collect())
        }
        Predicate::Semipotent | Predicate::Local => {
            let j = ring.jacobson();
            plain(ring.elements().filter(|&a| !j.contains(a)).collect())
        }
        Predicate::Semiregular => {
            let q = ring.jacobson_quotient();
            let mut d: Vec<_> = q.representatives.iter().map(|&r| (r, Some("regular"))).collect();
            d.extend(
                q.ring
                    .idempotents()
                    .iter()
                    .map(|c| (q.representatives[c], Some("lift"))),
            );
            d
        }
        _ => plain(ring.elements().collect()),
    }
}

/// Least `q ∈ Nil(R)` with `target − q ∈ J(R)`, paired with that difference.
pub(super) fn nil_plus_radical(ring: &FiniteRing, target: usize) -> Option<(usize, usize)> {
    let j = ring.jacobson();
    ring.nilpotents()
        .iter()
        .map(|q| (q, ring.sub(target, q)))
        .find(|&(_, r)| j.contains(r))
}

/// Least `x` with `row(x) = y`, where `row` is the left-multiplication row of
/// some element.
fn solve_left(ring: &FiniteRing, a: usize, y: usize) -> Option<usize> {
    ring.mul_row(a).iter().position(|&v| v as usize == y)
}

type Outcome = Result<Certificate, Certificate>;

fn require(ok: Option<Certificate>, a: usize) -> Outcome {
    ok.ok_or_else(|| Certificate::element(a))
}

/// Searches for the least certificate for `a` under `p`.
pub(super) fn search(ring: &FiniteRing, p: Predicate, a: usize, tag: Option<&'static str>) -> Outcome {
    let one = ring.one();
    let zero = ring.zero();
    let cert = |parts: Vec<usize>| Certificate::new(a, parts);
    match p {
        Predicate::UJ => {
            let j = ring.sub(a, one);
            require(ring.jacobson().contains(j).then(|| cert(vec![j])), a)
        }
        Predicate::UU => {
            let q = ring.sub(a, one);
            require(ring.nilpotents().contains(q).then(|| cert(vec![q])), a)
        }
        Predicate::UNJ => require(
            nil_plus_radical(ring, ring.sub(a, one)).map(|(q, j)| cert(vec![q, j])),
            a,
        ),
        Predicate::TwoUJ => {
            let j = ring.sub(ring.mul(a, a), one);
            require(ring.jacobson().contains(j).then(|| cert(vec![j])), a)
        }
        Predicate::TwoUU => {
            let q = ring.sub(ring.mul(a, a), one);
            require(ring.nilpotents().contains(q).then(|| cert(vec![q])), a)
        }
        Predicate::TwoUNJ => require(
            nil_plus_radical(ring, ring.sub(ring.mul(a, a), one)).map(|(q, j)| cert(vec![q, j])),
            a,
        ),
        Predicate::Boolean => require(
            (ring.mul(a, a) == a).then(|| cert(vec![]).with_exponent(2)),
            a,
        ),
        Predicate::Tripotent => require(
            (ring.pow(a, 3) == a).then(|| cert(vec![]).with_exponent(3)),
            a,
        ),
        Predicate::Potent => {
            let orbit = ring.power_orbit(a);
            let n = orbit.powers.len() as u64 + 1;
            require((orbit.cycle_start == 0).then(|| cert(vec![]).with_exponent(n)), a)
        }
        Predicate::Reduced | Predicate::Semisimple => require((a == zero).then(|| cert(vec![])), a),
        Predicate::Abelian => match ring.elements().find(|&r| ring.mul(a, r) != ring.mul(r, a)) {
            None => Ok(cert(vec![])),
            Some(r) => Err(cert(vec![r])),
        },
        Predicate::Regular => require(
            ring.elements()
                .find(|&x| ring.mul(ring.mul(a, x), a) == a)
                .map(|x| cert(vec![x])),
            a,
        ),
        Predicate::StronglyRegular => require(
            solve_left(ring, ring.mul(a, a), a).map(|x| cert(vec![x])),
            a,
        ),
        Predicate::UnitRegular => require(
            ring.units()
                .iter()
                .find(|&u| ring.mul(ring.mul(a, u), a) == a)
                .map(|u| cert(vec![u])),
            a,
        ),
        Predicate::PiRegular => {
            let found = ring.power_orbit(a).exponents().find_map(|(n, an)| {
                ring.elements()
                    .find(|&x| ring.mul(ring.mul(an, x), an) == an)
                    .map(|x| cert(vec![x]).with_exponent(n))
            });
            require(found, a)
        }
        Predicate::StronglyPiRegular => {
            let found = ring.power_orbit(a).exponents().find_map(|(n, an)| {
                solve_left(ring, ring.mul(an, a), an).map(|x| cert(vec![x]).with_exponent(n))
            });
            require(found, a)
        }
        Predicate::Clean => {
            let units = ring.units();
            require(
                ring.idempotents()
                    .iter()
                    .map(|e| (e, ring.sub(a, e)))
                    .find(|&(_, u)| units.contains(u))
                    .map(|(e, u)| cert(vec![e, u])),
                a,
            )
        }
        Predicate::JClean => {
            let j = ring.jacobson();
            require(
                ring.idempotents()
                    .iter()
                    .map(|e| (e, ring.sub(a, e)))
                    .find(|&(_, r)| j.contains(r))
                    .map(|(e, r)| cert(vec![e, r])),
                a,
            )
        }
        Predicate::SemiTripotent => {
            let j = ring.jacobson();
            require(
                ring.elements()
                    .filter(|&e| ring.pow(e, 3) == e)
                    .map(|e| (e, ring.sub(a, e)))
                    .find(|&(_, r)| j.contains(r))
                    .map(|(e, r)| cert(vec![e, r])),
                a,
            )
        }
        Predicate::StronglyTwoNilClean => {
            let ids = ring.idempotents();
            let nil = ring.nilpotents();
            let commute = |x: usize, y: usize| ring.mul(x, y) == ring.mul(y, x);
            let found = ids.iter().find_map(|e| {
                ids.iter().find_map(|f| {
                    let b = ring.sub(ring.sub(a, e), f);
                    (nil.contains(b) && commute(e, f) && commute(e, b) && commute(f, b))
                        .then(|| cert(vec![e, f, b]))
                })
            });
            require(found, a)
        }
        Predicate::Exchange => {
            let c = ring.sub(one, a);
            let found = ring.idempotents().iter().find_map(|e| {
                let x = solve_left(ring, a, e)?;
                let y = solve_left(ring, c, ring.sub(one, e))?;
                Some(cert(vec![e, x, y]))
            });
            require(found, a)
        }
        Predicate::Semiregular => {
            let j = ring.jacobson();
            let q = ring.jacobson_quotient();
            match tag {
                Some("lift") => {
                    let c = q.projection[a];
                    let found = ring
                        .idempotents()
                        .iter()
                        .find(|&e| q.projection[e] == c)
                        .map(|e| cert(vec![e]).with_tag("lift"));
                    found.ok_or_else(|| Certificate::element(a).with_tag("lift"))
                }
                _ => ring
                    .elements()
                    .find(|&x| j.contains(ring.sub(ring.mul(ring.mul(a, x), a), a)))
                    .map(|x| cert(vec![x]).with_tag("regular"))
                    .ok_or_else(|| Certificate::element(a).with_tag("regular")),
            }
        }
        Predicate::Semipotent => {
            let nonzero_idempotent = |e: usize| e != zero && ring.mul(e, e) == e;
            let right = ring
                .mul_row(a)
                .iter()
                .position(|&e| nonzero_idempotent(e as usize));
            let left = ring.elements().find(|&y| nonzero_idempotent(ring.mul(y, a)));
            match (right, left) {
                (Some(x), Some(y)) => Ok(cert(vec![x, y])),
                (None, _) => Err(Certificate::element(a).with_tag("right")),
                (_, None) => Err(Certificate::element(a).with_tag("left")),
            }
        }
        Predicate::DedekindFinite => {
            let right_inverses: Vec<usize> =
                ring.elements().filter(|&b| ring.mul(a, b) == one).collect();
            match right_inverses.iter().find(|&&b| ring.mul(b, a) != one) {
                Some(&b) => Err(cert(vec![b])),
                None => Ok(cert(right_inverses.first().copied().into_iter().collect())),
            }
        }
        Predicate::Local => require(
            solve_left(ring, a, one)
                .filter(|&b| ring.mul(b, a) == one)
                .map(|b| cert(vec![b])),
            a,
        ),
        Predicate::TwoPrimal => {
            let both = ring.nilpotents().contains(a) && ring.jacobson().contains(a);
            require(both.then(|| cert(vec![])), a)
        }
    }
}

pub(super) fn decide(ring: &FiniteRing, p: Predicate) -> PredicateVerdict {
    let mut certs = Vec::new();
    for (a, tag) in domain(ring, p) {
        match search(ring, p, a, tag) {
            Ok(c) => certs.push(c),
            Err(c) => return PredicateVerdict::negative(p, c),
        }
    }
    PredicateVerdict::positive(p, certs)
}
