use std::collections::HashSet;
use std::sync::Arc;

use super::support::*;
use super::{Evidence, Outcome, Subject, Verifier};
use crate::constructions::{formal_triangular, frobenius_endo, group_ring, ring_zn, Bimodule};
use crate::dsl::{EndoName, RingExpr};
use crate::groups::is_prime;
use crate::predicates::{find_matrix_units, Predicate};
use crate::ring::{ElementSet, FiniteRing, RingHom};

use Predicate::*;

/// A claim checked ring by ring.
pub struct TheoremCheck {
    pub id: &'static str,
    /// Verbatim statement fragment the check is anchored to.
    pub anchor: &'static str,
    pub(crate) extras: fn() -> Vec<String>,
    pub(crate) run: fn(&Verifier, &Subject<'_>) -> Outcome,
}

impl std::fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCheck")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .finish_non_exhaustive()
    }
}

macro_rules! checks {
    ($($id:literal, $anchor:literal, $extras:expr, $run:expr;)*) => {
        static REGISTRY: &[TheoremCheck] = &[
            $(TheoremCheck { id: $id, anchor: $anchor, extras: $extras, run: $run },)*
        ];
    };
}

checks! {
    "implication-lattice", "which generalize the well-known 2-UJ, 2-UU and UNJ rings", none, lattice;
    "example-2.3", "2-$UNJ$, but is {\\it not} $UNJ$", || texts(&["Z3"]), example_2_3;
    "remark-3.3", "$\\mathbb{Z}_7$ is {\\it not} 2-$UNJ$", || texts(&["Z7"]), remark_3_3;
    "prop-3.1", "Every finite direct product of 2-UNJ rings", none, prop_3_1;
    "prop-3.2", "all units of \\(T\\) lift to units of \\(R\\), then \\(T\\) is 2-UNJ too", none, prop_3_2;
    "prop-3.5-i", "\\( R/I \\) is also a 2-UNJ ring", none, prop_3_5_i;
    "prop-3.5-ii", "If \\( R/I \\) is a 2-UNJ-ring, then \\( R \\)", none, prop_3_5_ii;
    "prop-3.5-iii", "R/J(R) \\) is a 2-UU ring", none, prop_3_5_iii;
    "prop-3.5-iv", "then \\( R \\) is a 2-UJ ring", none, prop_3_5_iv;
    "prop-3.3", "either \\(R \\cong \\mathbb{Z}_2\\) or \\(R \\cong \\mathbb{Z}_3\\)", field_extras, prop_3_3;
    "prop-3.8", "the ring \\( M_n(R) \\) is not a 2-UNJ ring", || texts(&["M(2, Z4)", "M(2, GF(4))", "M(3, Z2)"]), prop_3_8;
    "prop-3.28", "Every 2-UNJ ring is Dedekind-finite", none, |v, s| dedekind(v, s, TwoUNJ);
    "prop-3.29", "Every 2-UU ring is Dedekind-finite", none, |v, s| dedekind(v, s, TwoUU);
    "cor-3.26-i", "A ring \\( R \\) is both local and 2-UNJ if, and only if", none, cor_3_26_i;
    "cor-3.26-ii", "$R \\cong \\bigoplus_{i=1}^n R_i$, where $R_i\\cong \\mathbb{Z}_2 \\text{ or } R_i\\cong \\mathbb{Z}_3$", semisimple_extras, cor_3_26_ii;
    "cor-3.26-iii", "A ring \\( R \\) is both semi-local and 2-UNJ if, and only if", none, cor_3_26_iii;
    "lemma-3.12", "then \\(R\\) is reduced", none, lemma_3_12;
    "lemma-sum-two-unit", "$u^2 + v \\neq 1$", none, sum_two_unit;
    "lemma-exe", "Let $R$ be a potent 2-UNJ ring", none, lemma_exe;
    "thm-semipotent", "(iii) $R/J(R)$ is a tripotent ring", none, thm_semipotent;
    "thm-3.13", "\\(R\\) is a \\(\\pi\\)-regular reduced 2-UNJ ring", none, thm_3_13;
    "cor-3.14", "\\(R\\) is a unit-regular 2-UNJ ring", none, cor_3_14;
    "cor-3.16", "\\(R\\) is a semi-tripotent ring", none, cor_3_16;
    "cor-3.17", "\\( R \\) is a clean ring", none, cor_3_17;
    "cor-3.18", "strongly $2$-nil-clean ring", none, cor_3_18;
    "lemma-nil-trivext", "Nil(T(R, M)) = T(Nil(R), M)", none, nil_trivext;
    "prop-corfive-i", "The trivial extension $T(R,M)$ is 2-UNJ if, and only if, $R$ is 2-UNJ", none, corfive_i;
    "prop-corfive-ii", "is 2-UNJ if, and only if, both $R$ and $S$ are 2-UNJ", none, corfive_ii;
    "prop-corfive-iii", "the triangular matrix ring $T_n(R)$ is 2-UNJ if, and only if, $R$ is 2-UNJ", none, corfive_iii;
    "prop-corfive-iv", "The power series ring $R[[x; \\alpha]]$ is 2-UNJ if, and only if, $R$ is 2-UNJ", none, corfive_iv;
    "prop-corfive-v", "The power series ring $R[[x]]$ is 2-UNJ if, and only if, $R$ is 2-UNJ", none, corfive_v;
    "cor-DT", "$DT(R, M)$ is a 2-UNJ ring", none, cor_dt;
    "cor-Tskew", "$T_{n}(R,\\alpha )$ is a 2-UNJ ring", none, cor_tskew;
    "cor-polyquot", "the quotient-ring $R[x]/(x^n)$", none, cor_polyquot;
    "prop-4.7", "$MN$ and $NM$ are nilpotent ideals", none, prop_4_7;
    "cor-4.9", "$K_s(R)$ is a $2$-UNJ ring", none, cor_4_9;
    "cor-4.10", "$M_{n}(R;s)$ is a 2-UNJ ring", none, cor_4_10;
    "cor-4.11", "is a 2-UNJ ring if, and only if, $A$ and $B$ are both 2-UNJ rings", none, cor_4_11;
    "lemma-5.1", "$\\text{Nil}(R) + J(R) \\subseteq \\sqrt{J(R)}$", none, lemma_5_1;
    "lemma-ext-le", "$J(R) = J(RG) \\cap R$", none, lemma_ext_le;
    "lemma-RG-to-R", "Then, $R$ is also a 2-UNJ ring", none, lemma_rg_to_r;
    "lemma-torsion", "Then, $G$ is a torsion group", none, lemma_torsion;
    "thm-2-group-ring", "Then, $G$ is a 2-group", || texts(&["GroupRing(Z2, S3)", "GroupRing(Z4, C3)", "GroupRing(Z2, C9)", "GroupRing(Z2, Q8)", "GroupRing(Z2, D4)"]), thm_2_group_ring;
    "thm-3-or-exp2", "either $G$ is a $3$-group or $G$ is a group of exponent $2$", || texts(&["GroupRing(Z3, C4)", "GroupRing(Z3, C2xC2)", "GroupRing(Z9, C2)"]), thm_3_or_exp2;
    "thm-T2", "$G$ a locally finite $2$-group. Then, $RG$ is a $2$-UNJ ring", || texts(&["GroupRing(Z2, Q8)", "GroupRing(Z2, D4)", "GroupRing(Z2, C2xC2xC2)"]), thm_t2;
    "thm-T2-3group", "$G$ a locally finite $3$-group", || texts(&["GroupRing(Z9, C3)"]), thm_t2_3group;
    "thm-exp2", "$G$ a locally finite group of exponent $2$", || texts(&["GroupRing(Z3, C2xC2)", "GroupRing(Z9, C2)"]), thm_exp2;
}

/// Every registered check, in report order.
pub fn registry() -> &'static [TheoremCheck] {
    REGISTRY
}

pub fn theorem_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|t| t.id).collect()
}

fn none() -> Vec<String> {
    Vec::new()
}

fn texts(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn field_extras() -> Vec<String> {
    (2u64..=32)
        .filter(|&q| (2..=q).any(|p| is_prime(p) && is_power(q, p)))
        .map(|q| format!("GF({q})"))
        .collect()
}

fn is_power(mut q: u64, p: u64) -> bool {
    while q % p == 0 {
        q /= p;
    }
    q == 1
}

/// Products of one to three factors from `{Z2, Z3, GF(4), GF(5)}`, as
/// multisets.
fn semisimple_extras() -> Vec<String> {
    const F: [&str; 4] = ["Z2", "Z3", "GF(4)", "GF(5)"];
    let mut out: Vec<String> = F.iter().map(|f| f.to_string()).collect();
    for i in 0..4 {
        for j in i..4 {
            out.push(format!("Prod({}, {})", F[i], F[j]));
            for k in j..4 {
                out.push(format!("Prod({}, {}, {})", F[i], F[j], F[k]));
            }
        }
    }
    out
}

fn two_unj(v: &Verifier, s: &Subject<'_>) -> Result<(), Evidence> {
    pred(v, s.ring, s.text, TwoUNJ)
}

fn unmet(what: &str) -> Outcome {
    Outcome::skip(format!("hypothesis unmet: {what}"))
}

fn is_prime_field(expr: &RingExpr, q: u64) -> bool {
    matches!(expr, RingExpr::ZMod(n) if *n == q) || matches!(expr, RingExpr::GF { p, k: 1 } if *p == q)
}

fn truth(r: &Result<(), Evidence>) -> &'static str {
    if r.is_ok() {
        "holds"
    } else {
        "fails"
    }
}

const EDGES: [(Predicate, Predicate); 7] = [
    (UU, UNJ),
    (UJ, UNJ),
    (UU, TwoUU),
    (UJ, TwoUJ),
    (UNJ, TwoUNJ),
    (TwoUU, TwoUNJ),
    (TwoUJ, TwoUNJ),
];

fn lattice(v: &Verifier, s: &Subject<'_>) -> Outcome {
    for (a, b) in EDGES {
        if v.holds(s.ring, a) {
            if let Err(ev) = pred(v, s.ring, s.text, b) {
                return Outcome::fail(ev).note(format!("{a} holds but {b} fails"));
            }
        }
    }
    let held: Vec<&str> = [UJ, UU, UNJ, TwoUJ, TwoUU, TwoUNJ]
        .into_iter()
        .filter(|&p| v.holds(s.ring, p))
        .map(|p| p.id())
        .collect();
    let held = if held.is_empty() { "none".to_string() } else { held.join(", ") };
    Outcome::pass().note(format!("all {} edges hold; true: {held}", EDGES.len()))
}

fn example_2_3(v: &Verifier, s: &Subject<'_>) -> Outcome {
    if !is_prime_field(s.expr, 3) {
        return Outcome::skip("the claim concerns Z3 only");
    }
    if let Err(ev) = two_unj(v, s) {
        return Outcome::fail(ev);
    }
    match pred(v, s.ring, s.text, UNJ) {
        Ok(()) => Outcome::fail(Evidence::new(s.text, "UNJ holds")),
        Err(ev) => Outcome::pass()
            .witness(Some(ev))
            .note("2UNJ holds and UNJ fails at the witness unit"),
    }
}

fn remark_3_3(v: &Verifier, s: &Subject<'_>) -> Outcome {
    if !is_prime_field(s.expr, 7) {
        return Outcome::skip("the claim concerns Z7 only");
    }
    match two_unj(v, s) {
        Ok(()) => Outcome::fail(Evidence::new(s.text, "2UNJ holds")),
        Err(ev) => Outcome::pass().witness(Some(ev)).note("2UNJ fails at the witness unit"),
    }
}

fn prop_3_1(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let base = two_unj(v, s);
    let cases = ["Z2", "Z3", "Z4", "GF(4)"]
        .iter()
        .map(|t| {
            let (expr, ring) = named(v, t);
            let expected = base.clone().and(pred(v, &ring, t, TwoUNJ));
            Case::dsl(RingExpr::Prod(vec![s.expr.clone(), expr]), expected)
        })
        .collect();
    agree_on_2unj(v, cases, "2UNJ of both factors")
}

/// Proper quotients `R/I` over the ideals selected by `keep`, paired with
/// a display name.
fn quotients<'r>(
    s: &Subject<'r>,
    ideals: &'r [ElementSet<'r>],
    keep: impl Fn(&ElementSet<'_>) -> bool,
) -> Vec<(String, &'r ElementSet<'r>, crate::ring::Quotient)> {
    let ring: &FiniteRing = s.ring;
    ideals
        .iter()
        .filter(|i| i.len() < ring.order() && keep(i))
        .map(|i| {
            let q = ring.quotient_parts(i).expect("members of the lattice are ideals");
            (format!("{} mod {}", s.text, describe_ideal(ring, i)), i, q)
        })
        .collect()
}

fn prop_3_2(v: &Verifier, s: &Subject<'_>) -> Outcome {
    if two_unj(v, s).is_err() {
        return unmet("R is not 2UNJ");
    }
    let ring: &FiniteRing = s.ring;
    let ideals = match ideals(ring) {
        Ok(i) => i,
        Err(skip) => return skip,
    };
    let (mut checked, mut no_lift) = (0, 0);
    for (name, _, q) in quotients(s, &ideals, |_| true) {
        let mut reached = vec![false; q.ring.order()];
        for u in ring.units().iter() {
            reached[q.projection[u]] = true;
        }
        if !q.ring.units().iter().all(|c| reached[c]) {
            no_lift += 1;
            continue;
        }
        if let Err(ev) = pred_fresh(&q.ring, &name, TwoUNJ) {
            return Outcome::fail(ev).note("units lift but the quotient is not 2UNJ");
        }
        checked += 1;
    }
    Outcome::pass().note(format!(
        "R/I is 2UNJ for all {checked} proper ideals with unit lifting; {no_lift} without unit lifting"
    ))
}

fn prop_3_5_i(v: &Verifier, s: &Subject<'_>) -> Outcome {
    if two_unj(v, s).is_err() {
        return unmet("R is not 2UNJ");
    }
    let ring: &FiniteRing = s.ring;
    if ring.jacobson().len() == 1 {
        return unmet("J(R) = 0, so no nonzero ideal lies in J(R)");
    }
    let ideals = match ideals(ring) {
        Ok(i) => i,
        Err(skip) => return skip,
    };
    let j = ring.jacobson();
    let qs = quotients(s, &ideals, |i| i.len() > 1 && i.is_subset_of(&j));
    for (name, _, q) in &qs {
        if let Err(ev) = pred_fresh(&q.ring, name, TwoUNJ) {
            return Outcome::fail(ev);
        }
    }
    Outcome::pass().note(format!("R/I is 2UNJ for all {} nonzero ideals I in J(R)", qs.len()))
}

fn prop_3_5_ii(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let ring: &FiniteRing = s.ring;
    let ideals = match ideals(ring) {
        Ok(i) => i,
        Err(skip) => return skip,
    };
    let nil = ring.nilpotents();
    let qs = quotients(s, &ideals, |i| i.len() > 1 && i.is_subset_of(&nil));
    if qs.is_empty() {
        return unmet("R has no nonzero proper nil ideal");
    }
    let base = two_unj(v, s);
    let mut lifted = 0;
    for (name, _, q) in &qs {
        if pred_fresh(&q.ring, name, TwoUNJ).is_ok() {
            if let Err(ev) = base {
                return Outcome::fail(ev).note(format!("{name} is 2UNJ"));
            }
            lifted += 1;
        }
    }
    Outcome::pass().note(format!(
        "{} nonzero nil ideals; {lifted} quotients are 2UNJ and R {} 2UNJ",
        qs.len(),
        if base.is_ok() { "is" } else { "is not" }
    ))
}

fn prop_3_5_iii(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let rbar = radical_quotient(s.ring);
    implication(
        two_unj(v, s).map_err(|_| "R is not 2UNJ".to_string()),
        || pred(v, &rbar, &quotient_name(s.text), TwoUU),
        "R/J is 2UU",
    )
}

fn prop_3_5_iv(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let hyp = match (v.holds(s.ring, TwoPrimal), v.holds(s.ring, TwoUNJ)) {
        (true, true) => Ok(()),
        (false, _) => Err("R is not 2-primal".to_string()),
        (true, false) => Err("R is not 2UNJ".to_string()),
    };
    implication(hyp, || pred(v, s.ring, s.text, TwoUJ), "R is 2UJ")
}

fn prop_3_3(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let ring: &FiniteRing = s.ring;
    let q = ring.order();
    if ring.units().len() != q - 1 {
        return unmet("R is not a division ring");
    }
    let expected = q == 2 || q == 3;
    match (two_unj(v, s), expected) {
        (Ok(()), true) => Outcome::pass().note(format!("field of order {q}; 2UNJ holds")),
        (Err(ev), false) => Outcome::pass()
            .witness(Some(ev))
            .note(format!("field of order {q}; 2UNJ fails at the witness unit")),
        (Ok(()), false) => Outcome::fail(Evidence::new(s.text, format!("2UNJ holds in a field of order {q}"))),
        (Err(ev), true) => Outcome::fail(ev),
    }
}

/// Matrix-unit search is attempted up to this order.
const MATRIX_UNIT_LIMIT: usize = 256;

fn prop_3_8(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let ring: &FiniteRing = s.ring;
    let by_expr = matches!(s.expr, RingExpr::M { n, .. } if *n >= 2);
    let units = if by_expr {
        None
    } else if ring.order() > MATRIX_UNIT_LIMIT {
        return Outcome::skip(format!(
            "not built as M(n, R) and too large (order > {MATRIX_UNIT_LIMIT}) for a matrix-unit search"
        ));
    } else {
        match find_matrix_units(ring, Some(ring.one())) {
            Some(u) => Some(u),
            None => return unmet("no system of 2x2 matrix units sums to 1, so R is not a matrix ring"),
        }
    };
    let why = match units {
        None => "R is a full matrix ring of size at least 2".to_string(),
        Some(_) => "2x2 matrix units sum to 1, so R is isomorphic to M2(e11 R e11)".to_string(),
    };
    match two_unj(v, s) {
        Err(ev) => Outcome::pass()
            .witness(Some(ev))
            .note(format!("{why}; 2UNJ fails at the witness unit")),
        Ok(()) => {
            let mut ev = Evidence::new(s.text, "2UNJ holds in a matrix ring");
            if let Some(u) = units {
                for (role, x) in [("e11", u.e11), ("e12", u.e12), ("e21", u.e21), ("e22", u.e22)] {
                    ev = ev.element(ring, role, x);
                }
            }
            Outcome::fail(ev).note(why)
        }
    }
}

fn dedekind(v: &Verifier, s: &Subject<'_>, hyp: Predicate) -> Outcome {
    implication(
        pred(v, s.ring, s.text, hyp).map_err(|_| format!("R is not {hyp}")),
        || pred(v, s.ring, s.text, DedekindFinite),
        "vacuous at finite scale: every finite ring is Dedekind-finite; the exhaustive ab = 1 scan agrees",
    )
}

/// Compares 2-UNJ with a structural prediction.
fn predicted(v: &Verifier, s: &Subject<'_>, expected: bool, why: String) -> Outcome {
    match (two_unj(v, s), expected) {
        (Ok(()), true) => Outcome::pass().note(format!("{why}; 2UNJ holds")),
        (Err(ev), false) => Outcome::pass().witness(Some(ev)).note(format!("{why}; 2UNJ fails")),
        (Ok(()), false) => Outcome::fail(Evidence::new(s.text, "2UNJ holds")).note(why),
        (Err(ev), true) => Outcome::fail(ev).note(why),
    }
}

fn small_blocks(orders: &[usize]) -> bool {
    orders.iter().all(|&o| o == 2 || o == 3)
}

fn cor_3_26_i(v: &Verifier, s: &Subject<'_>) -> Outcome {
    if !v.holds(s.ring, Local) {
        return unmet("R is not local");
    }
    let n = radical_quotient(s.ring).order();
    predicted(v, s, n == 2 || n == 3, format!("|R/J| = {n}"))
}

fn cor_3_26_ii(v: &Verifier, s: &Subject<'_>) -> Outcome {
    if s.ring.jacobson().len() != 1 {
        return unmet("J(R) is nonzero, so R is not semisimple");
    }
    let blocks = block_orders(s.ring);
    let why = format!("simple blocks of orders {}", join_orders(&blocks));
    predicted(v, s, small_blocks(&blocks), why)
}

fn cor_3_26_iii(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let blocks = block_orders(&radical_quotient(s.ring));
    let why = format!(
        "R is finite, hence semi-local; R/J has simple blocks of orders {}",
        join_orders(&blocks)
    );
    predicted(v, s, small_blocks(&blocks), why)
}

fn lemma_3_12(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let ring: &FiniteRing = s.ring;
    let hyp = if two_unj(v, s).is_err() {
        Err("R is not 2UNJ".to_string())
    } else if ring.jacobson().len() != 1 {
        Err("J(R) is nonzero".to_string())
    } else {
        let zero = ring.zero();
        let bad = ring.elements().filter(|&a| a != zero).find(|&a| {
            !ring
                .elements()
                .map(|r| ring.mul(a, r))
                .any(|x| x != zero && ring.is_idempotent(x))
        });
        match bad {
            Some(a) => Err(format!("{}R contains no nonzero idempotent", ring.element_label(a))),
            None => Ok(()),
        }
    };
    implication(hyp, || pred(v, ring, s.text, Reduced), "R is reduced")
}

/// A unit `u` with `e - u²` a unit of the corner `eRe`, where `units` are
/// the units of that corner.
fn square_plus_unit(ring: &FiniteRing, e: usize, units: &[usize]) -> Option<(usize, usize)> {
    let mut is_unit = vec![false; ring.order()];
    for &u in units {
        is_unit[u] = true;
    }
    units.iter().find_map(|&u| {
        let w = ring.sub(e, ring.mul(u, u));
        is_unit[w].then_some((u, w))
    })
}

fn sum_two_unit(v: &Verifier, s: &Subject<'_>) -> Outcome {
    if two_unj(v, s).is_err() {
        return unmet("R is not 2UNJ");
    }
    let rbar = radical_quotient(s.ring);
    let qname = quotient_name(s.text);
    for (ring, name) in [(s.ring.as_ref(), s.text), (rbar.as_ref(), qname.as_str())] {
        let units: Vec<usize> = ring.units().iter().collect();
        if let Some((u, w)) = square_plus_unit(ring, ring.one(), &units) {
            let ev = Evidence::new(name, "u^2 + v = 1 with u and v units")
                .element(ring, "u", u)
                .element(ring, "v", w);
            return Outcome::fail(ev);
        }
    }
    Outcome::pass().note("no unit u has 1 - u^2 a unit, in R or in R/J")
}

fn lemma_exe(v: &Verifier, s: &Subject<'_>) -> Outcome {
    if !v.holds(s.ring, Potent) {
        return unmet("R is not potent");
    }
    if two_unj(v, s).is_err() {
        return unmet("R is not 2UNJ");
    }
    let rbar = radical_quotient(s.ring);
    let qname = quotient_name(s.text);
    let zero = rbar.zero();
    let mut corners = 0;
    for e in rbar.idempotents().iter().filter(|&e| e != zero) {
        let mut members: Vec<usize> = rbar.elements().map(|r| rbar.mul(rbar.mul(e, r), e)).collect();
        members.sort_unstable();
        members.dedup();
        let units: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&u| members.iter().any(|&w| rbar.mul(u, w) == e && rbar.mul(w, u) == e))
            .collect();
        if let Some((u, w)) = square_plus_unit(&rbar, e, &units) {
            let ev = Evidence::new(&qname, "u^2 + v = e with u and v units of the corner eRe")
                .element(&rbar, "e", e)
                .element(&rbar, "u", u)
                .element(&rbar, "v", w);
            return Outcome::fail(ev);
        }
        if rbar.order() <= MATRIX_UNIT_LIMIT {
            let corner = rbar.corner_ring(e).expect("nonzero idempotent");
            if let Some(mu) = find_matrix_units(&corner, Some(corner.one())) {
                let mut ev = Evidence::new(&qname, "the corner eRe contains 2x2 matrix units summing to e")
                    .element(&rbar, "e", e);
                for (role, x) in [("e11", mu.e11), ("e12", mu.e12), ("e21", mu.e21), ("e22", mu.e22)] {
                    ev = ev.element(&rbar, role, members[x]);
                }
                return Outcome::fail(ev);
            }
        }
        corners += 1;
    }
    let mut note = format!(
        "checked {corners} corners of R/J; matrix-ring corners are detected only through 2x2 matrix units, full isomorphism testing is not attempted"
    );
    if rbar.order() > MATRIX_UNIT_LIMIT {
        note.push_str(&format!("; matrix-unit search skipped above order {MATRIX_UNIT_LIMIT}"));
    }
    Outcome::pass().note(note)
}

fn holds<'a>(ring: &'a FiniteRing, name: &str, p: Predicate) -> Conjunct<'a> {
    Conjunct::Holds(ring, name.to_string(), p)
}

fn thm_semipotent(v: &Verifier, s: &Subject<'_>) -> Outcome {
    if !v.holds(s.ring, Semipotent) {
        return unmet("R is not semipotent");
    }
    let rbar = radical_quotient(s.ring);
    let q = quotient_name(s.text);
    let r: &FiniteRing = s.ring;
    all_equivalent(
        v,
        &[
            Statement { name: "(i) R is 2UNJ", parts: vec![holds(r, s.text, TwoUNJ)] },
            Statement { name: "(ii) R/J is 2UNJ", parts: vec![holds(&rbar, &q, TwoUNJ)] },
            Statement { name: "(iii) R/J is tripotent", parts: vec![holds(&rbar, &q, Tripotent)] },
            Statement { name: "(iv) R is 2UJ", parts: vec![holds(r, s.text, TwoUJ)] },
            Statement { name: "(v) R/J is 2UU", parts: vec![holds(&rbar, &q, TwoUU)] },
        ],
    )
}

fn thm_3_13(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let (r, t) = (s.ring.as_ref(), s.text);
    all_equivalent(
        v,
        &[
            Statement { name: "regular 2UNJ", parts: vec![holds(r, t, Regular), holds(r, t, TwoUNJ)] },
            Statement {
                name: "pi-regular reduced 2UNJ",
                parts: vec![holds(r, t, PiRegular), holds(r, t, Reduced), holds(r, t, TwoUNJ)],
            },
            Statement { name: "tripotent", parts: vec![holds(r, t, Tripotent)] },
        ],
    )
}

fn cor_3_14(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let (r, t) = (s.ring.as_ref(), s.text);
    all_equivalent(
        v,
        &[
            Statement { name: "regular 2UNJ", parts: vec![holds(r, t, Regular), holds(r, t, TwoUNJ)] },
            Statement {
                name: "strongly regular 2UNJ",
                parts: vec![holds(r, t, StronglyRegular), holds(r, t, TwoUNJ)],
            },
            Statement {
                name: "unit-regular 2UNJ",
                parts: vec![holds(r, t, UnitRegular), holds(r, t, TwoUNJ)],
            },
            Statement { name: "tripotent", parts: vec![holds(r, t, Tripotent)] },
        ],
    )
}

fn cor_3_16(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let (r, t) = (s.ring.as_ref(), s.text);
    all_equivalent(
        v,
        &[
            Statement { name: "semiregular 2UNJ", parts: vec![holds(r, t, Semiregular), holds(r, t, TwoUNJ)] },
            Statement { name: "exchange 2UNJ", parts: vec![holds(r, t, Exchange), holds(r, t, TwoUNJ)] },
            Statement { name: "semi-tripotent", parts: vec![holds(r, t, SemiTripotent)] },
        ],
    )
}

fn cor_3_17(v: &Verifier, s: &Subject<'_>) -> Outcome {
    if two_unj(v, s).is_err() {
        return unmet("R is not 2UNJ");
    }
    let (r, t) = (s.ring.as_ref(), s.text);
    all_equivalent(
        v,
        &[
            Statement { name: "semiregular", parts: vec![holds(r, t, Semiregular)] },
            Statement { name: "exchange", parts: vec![holds(r, t, Exchange)] },
            Statement { name: "clean", parts: vec![holds(r, t, Clean)] },
        ],
    )
}

fn cor_3_18(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let (r, t) = (s.ring.as_ref(), s.text);
    let nil_radical = r.jacobson().is_subset_of(&r.nilpotents());
    all_equivalent(
        v,
        &[
            Statement {
                name: "exchange 2UNJ with J(R) nil",
                parts: vec![
                    holds(r, t, Exchange),
                    holds(r, t, TwoUNJ),
                    Conjunct::Fact("J(R) is nil", nil_radical),
                ],
            },
            Statement { name: "strongly 2-nil-clean", parts: vec![holds(r, t, StronglyTwoNilClean)] },
        ],
    )
}

fn nil_trivext(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let base: &FiniteRing = s.ring;
    let n = base.order();
    let mut checked = Vec::new();
    let mut skipped = Vec::new();
    for k in 1..=2 {
        let expr = RingExpr::TrivExt { base: Box::new(s.expr.clone()), k };
        let text = expr.to_string();
        let t = match v.eval(&expr) {
            Ok(t) => t,
            Err(e) => {
                skipped.push(format!("{text} ({})", super::eval_skip_reason(&e)));
                continue;
            }
        };
        let nil = t.nilpotents();
        let base_nil = base.nilpotents();
        if let Some(x) = t.elements().find(|&x| nil.contains(x) != base_nil.contains(x % n)) {
            let ev = Evidence::new(&text, "nilpotency differs from that of the R-component").element(&t, "x", x);
            return Outcome::fail(ev);
        }
        checked.push(text);
    }
    if checked.is_empty() {
        return Outcome::skip(format!("no extension could be built: {}", skipped.join(", ")));
    }
    let mut note = format!("Nil(T) = T(Nil(R), M) in {}", checked.join(", "));
    if !skipped.is_empty() {
        note.push_str(&format!("; skipped {}", skipped.join(", ")));
    }
    Outcome::pass().note(note)
}

fn boxed(s: &Subject<'_>) -> Box<RingExpr> {
    Box::new(s.expr.clone())
}

/// Every construction in `exprs` must be 2-UNJ exactly when the subject is.
fn same_as_base(v: &Verifier, s: &Subject<'_>, exprs: Vec<RingExpr>, note: Option<&str>) -> Outcome {
    let base = two_unj(v, s);
    let cases = exprs
        .into_iter()
        .map(|e| Case::dsl(e, base.clone()))
        .collect();
    let out = agree_on_2unj(v, cases, &format!("2UNJ of R, which {}", truth(&base)));
    match (note, out.is_fail()) {
        (Some(extra), false) => {
            let prior = out.note_text().unwrap_or_default();
            out.note(format!("{extra}; {prior}"))
        }
        _ => out,
    }
}

fn corfive_i(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let exprs = (1..=2).map(|k| RingExpr::TrivExt { base: boxed(s), k }).collect();
    same_as_base(v, s, exprs, None)
}

fn characteristic(ring: &FiniteRing) -> usize {
    (1..=ring.order())
        .find(|&c| ring.integer(c as i64) == ring.zero())
        .expect("the additive order of 1 divides the ring order")
}

fn corfive_ii(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let r = s.ring;
    let budget = v.evaluator().config().budget();
    let base = two_unj(v, s);
    let mut cases = Vec::new();
    let mut push = |m: Result<Bimodule, String>, other: Result<(), Evidence>| {
        let built = m.and_then(|m| {
            formal_triangular(&m, &budget)
                .map(Arc::new)
                .map_err(|e| e.to_string())
        });
        let text = match &built {
            Ok(ring) => ring.label().to_string(),
            Err(_) => format!("FT over {}", s.text),
        };
        cases.push(Case {
            text,
            source: Source::Built(built),
            expected: base.clone().and(other),
        });
    };
    push(Ok(Bimodule::regular(r)), base.clone());
    for t in ["Z2", "Z3"] {
        let (_, other) = named(v, t);
        let expected = pred(v, &other, t, TwoUNJ);
        push(Ok(Bimodule::zero(r, &other)), expected);
    }
    // R as an (R, Z_c)-bimodule, c the characteristic of R.
    let c = characteristic(r);
    if c >= 2 {
        let zc = Arc::new(ring_zn(c).expect("c >= 2"));
        let zc = Arc::new(zc.relabeled(format!("Z{c}")));
        let expected = pred(v, &zc, &format!("Z{c}"), TwoUNJ);
        let id = RingHom::new(r.clone(), r.clone(), r.elements().collect()).expect("identity map");
        let m = RingHom::from_integers(zc, r.clone())
            .and_then(|g| Bimodule::via_homs(&id, &g))
            .map_err(|e| e.to_string());
        push(m, expected);
    }
    agree_on_2unj(v, cases, "2UNJ of both diagonal rings")
}

fn corfive_iii(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let exprs = (2..=3).map(|n| RingExpr::T { n, base: boxed(s) }).collect();
    same_as_base(v, s, exprs, None)
}

/// Endomorphisms available on the subject: the identity, and Frobenius
/// when it is one.
fn alphas(s: &Subject<'_>) -> Vec<EndoName> {
    let mut out = vec![EndoName::Id];
    if frobenius_endo(s.ring).is_ok_and(|f| !f.is_identity()) {
        out.push(EndoName::Frobenius);
    }
    out
}

const TRUNCATED: &str = "truncated verification at n = 2, 3";

fn corfive_iv(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let mut exprs = Vec::new();
    for alpha in alphas(s) {
        for n in 2..=3 {
            exprs.push(RingExpr::SkewPolyMod { base: boxed(s), n, alpha });
        }
    }
    same_as_base(v, s, exprs, Some(TRUNCATED))
}

fn corfive_v(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let exprs = (2..=3).map(|n| RingExpr::PolyMod { base: boxed(s), n }).collect();
    same_as_base(v, s, exprs, Some(TRUNCATED))
}

fn cor_dt(v: &Verifier, s: &Subject<'_>) -> Outcome {
    same_as_base(v, s, vec![RingExpr::DT { base: boxed(s) }], None)
}

fn cor_tskew(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let mut exprs = Vec::new();
    for alpha in alphas(s) {
        for n in 2..=3 {
            exprs.push(RingExpr::Tskew { n, base: boxed(s), alpha });
        }
    }
    same_as_base(v, s, exprs, None)
}

fn cor_polyquot(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let exprs = (2..=4).map(|n| RingExpr::PolyMod { base: boxed(s), n }).collect();
    same_as_base(v, s, exprs, None)
}

/// Twisting elements tried for `K_s` and `M_n(R; s)`.
const TWIST_LIMIT: usize = 4;

fn twists(s: &Subject<'_>) -> Vec<usize> {
    central_nilpotents(s.ring).into_iter().take(TWIST_LIMIT).collect()
}

fn prop_4_7(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let mut exprs: Vec<RingExpr> = twists(s)
        .into_iter()
        .map(|t| RingExpr::Ks { base: boxed(s), s: t })
        .collect();
    exprs.push(RingExpr::MoritaTriv { a: boxed(s), b: None });
    same_as_base(
        v,
        s,
        exprs,
        Some("A = B = R with MN = NM = sR for central nilpotent s"),
    )
}

fn cor_4_9(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let exprs = twists(s)
        .into_iter()
        .map(|t| RingExpr::Ks { base: boxed(s), s: t })
        .collect();
    same_as_base(v, s, exprs, None)
}

fn cor_4_10(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let mut exprs = Vec::new();
    for t in twists(s) {
        for n in 2..=3 {
            exprs.push(RingExpr::FM { n, base: boxed(s), s: t });
        }
    }
    same_as_base(v, s, exprs, None)
}

fn cor_4_11(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let base = two_unj(v, s);
    let mut cases = vec![Case::dsl(RingExpr::MoritaTriv { a: boxed(s), b: None }, base.clone())];
    for t in ["Z2", "Z3"] {
        let (expr, other) = named(v, t);
        let expected = base.clone().and(pred(v, &other, t, TwoUNJ));
        let m = RingExpr::MoritaTriv {
            a: boxed(s),
            b: Some(Box::new(expr)),
        };
        cases.push(Case::dsl(m, expected));
    }
    agree_on_2unj(v, cases, "2UNJ of both corner rings")
}

/// `a ∈ √J(R)`: some power of `a` lies in `J(R)`.
fn in_root_of_radical(ring: &FiniteRing, j: &ElementSet<'_>, a: usize) -> bool {
    let mut x = a;
    for _ in 0..=ring.order() {
        if j.contains(x) {
            return true;
        }
        x = ring.mul(x, a);
    }
    false
}

fn lemma_5_1(_v: &Verifier, s: &Subject<'_>) -> Outcome {
    let ring: &FiniteRing = s.ring;
    let j = ring.jacobson();
    let root: Vec<bool> = ring.elements().map(|a| in_root_of_radical(ring, &j, a)).collect();
    for q in ring.nilpotents().iter() {
        for x in j.iter() {
            let sum = ring.add(q, x);
            if !root[sum] {
                let ev = Evidence::new(s.text, "q + j is not in the root of J(R)")
                    .element(ring, "q", q)
                    .element(ring, "j", x);
                return Outcome::fail(ev);
            }
        }
    }
    for a in ring.elements().filter(|&a| root[a] && ring.is_central(a)) {
        if !j.contains(a) {
            let ev = Evidence::new(s.text, "central element of the root of J(R) outside J(R)").element(ring, "a", a);
            return Outcome::fail(ev);
        }
    }
    let size = root.iter().filter(|&&b| b).count();
    Outcome::pass().note(format!(
        "|Nil| = {}, |J| = {}, root of J has {size} elements",
        ring.nilpotents().len(),
        j.len()
    ))
}

fn not_group_ring() -> Outcome {
    Outcome::skip("not a group ring")
}

fn lemma_ext_le(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let ring: &FiniteRing = s.ring;
    let Some((base, group)) = group_ring_parts(ring) else {
        return not_group_ring();
    };
    let n = base.order();
    let (jr, jrg) = (base.jacobson(), ring.jacobson());
    let id = group.identity();
    for r in base.elements() {
        let x = group_ring_index(n, &[r], &[id]);
        if jr.contains(r) != jrg.contains(x) {
            let ev = Evidence::new(s.text, "J(R) differs from J(RG) ∩ R").element(ring, "r", x);
            return Outcome::fail(ev);
        }
    }
    let budget = v.evaluator().config().budget();
    let mut seen = HashSet::new();
    for g in group.elements() {
        let (h, embedding) = group.cyclic_subgroup(g);
        let mut key = embedding.clone();
        key.sort_unstable();
        if !seen.insert(key) {
            continue;
        }
        let rh = group_ring(&base, &Arc::new(h), &budget).expect("RH is no larger than RG");
        let jrh = rh.jacobson();
        let k = embedding.len();
        for x in rh.elements() {
            let coeffs: Vec<usize> = (0..k).map(|i| x / n.pow(i as u32) % n).collect();
            let y = group_ring_index(n, &coeffs, &embedding);
            if jrg.contains(y) && !jrh.contains(x) {
                let ev = Evidence::new(s.text, format!("element of J(RG) ∩ RH outside J(RH), H = <{}>", group.element_label(g)))
                    .element(ring, "x", y);
                return Outcome::fail(ev);
            }
        }
    }
    Outcome::pass().note(format!(
        "J(R) = J(RG) ∩ R; J(RG) ∩ RH lies in J(RH) for all {} cyclic subgroups H",
        seen.len()
    ))
}

fn lemma_rg_to_r(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let Some((base, _)) = group_ring_parts(s.ring) else {
        return not_group_ring();
    };
    implication(
        two_unj(v, s).map_err(|_| "RG is not 2UNJ".to_string()),
        || pred(v, &base, base.label(), TwoUNJ),
        "R is 2UNJ",
    )
}

fn lemma_torsion(_v: &Verifier, s: &Subject<'_>) -> Outcome {
    match group_ring_parts(s.ring) {
        None => not_group_ring(),
        Some((_, g)) => Outcome::pass().note(format!(
            "vacuous at finite scale: G has order {} and every finite group is torsion",
            g.order()
        )),
    }
}

fn thm_2_group_ring(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let Some((base, group)) = group_ring_parts(s.ring) else {
        return not_group_ring();
    };
    if !integer_in_radical(&base, 2) {
        return unmet("2 is not in J(R)");
    }
    let two_group = group.is_p_group(2);
    match (two_unj(v, s), two_group) {
        (Ok(()), true) => Outcome::pass().note("RG is 2UNJ and G is a 2-group"),
        (Err(ev), true) => Outcome::pass()
            .witness(Some(ev))
            .note("G is a 2-group; RG is not 2UNJ"),
        (Err(ev), false) => Outcome::pass()
            .witness(Some(ev))
            .note("G is not a 2-group and RG is not 2UNJ, as the contrapositive requires"),
        (Ok(()), false) => Outcome::fail(Evidence::new(s.text, "2UNJ holds although G is not a 2-group")),
    }
}

fn prime_of_p_group(group: &crate::groups::FiniteGroup) -> Option<usize> {
    (2..=group.order()).find(|&p| is_prime(p as u64) && group.order() % p == 0 && group.is_p_group(p))
}

fn thm_3_or_exp2(v: &Verifier, s: &Subject<'_>) -> Outcome {
    let Some((base, group)) = group_ring_parts(s.ring) else {
        return not_group_ring();
    };
    if !integer_in_radical(&base, 3) {
        return unmet("3 is not in J(R)");
    }
    let Some(p) = prime_of_p_group(&group) else {
        return unmet("G is not a p-group");
    };
    let allowed = p == 3 || group.exponent() == 2;
    let why = format!("G is a {p}-group of exponent {}", group.exponent());
    match (two_unj(v, s), allowed) {
        (Ok(()), false) => Outcome::fail(Evidence::new(s.text, "2UNJ holds")).note(why),
        (Ok(()), true) => Outcome::pass().note(format!("{why}; RG is 2UNJ")),
        (Err(ev), _) => Outcome::pass().witness(Some(ev)).note(format!("{why}; RG is not 2UNJ")),
    }
}

/// `R` is 2-UNJ with `k ∈ J(R)` and `G` satisfies `group_ok`; then `RG`
/// must be 2-UNJ.
fn group_ring_is_2unj(
    v: &Verifier,
    s: &Subject<'_>,
    k: i64,
    group_ok: fn(&crate::groups::FiniteGroup) -> bool,
    group_desc: &str,
) -> Outcome {
    let Some((base, group)) = group_ring_parts(s.ring) else {
        return not_group_ring();
    };
    let hyp = if pred(v, &base, base.label(), TwoUNJ).is_err() {
        Err("R is not 2UNJ".to_string())
    } else if !integer_in_radical(&base, k) {
        Err(format!("{k} is not in J(R)"))
    } else if !group_ok(&group) {
        Err(format!("G is not {group_desc}"))
    } else {
        Ok(())
    };
    implication(hyp, || two_unj(v, s), "RG is 2UNJ")
}

fn thm_t2(v: &Verifier, s: &Subject<'_>) -> Outcome {
    group_ring_is_2unj(v, s, 2, |g| g.is_p_group(2), "a 2-group")
}

fn thm_t2_3group(v: &Verifier, s: &Subject<'_>) -> Outcome {
    group_ring_is_2unj(v, s, 3, |g| g.is_p_group(3), "a 3-group")
}

fn thm_exp2(v: &Verifier, s: &Subject<'_>) -> Outcome {
    group_ring_is_2unj(v, s, 3, |g| g.exponent() == 2, "of exponent 2")
}
