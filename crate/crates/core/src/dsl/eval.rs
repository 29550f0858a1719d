use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{EndoName, RingExpr};
use crate::constructions::{
    dt_extension, formal_matrix, frobenius_endo, group_ring, identity_endo, ks_ring, matrix_ring,
    poly_mod, product, ring_gf, ring_zn, skew_poly_mod, skew_triangular, trivial_extension,
    trivial_morita, upper_triangular, Bimodule, Budget,
};
use crate::error::RingError;
use crate::groups::group_catalog;
use crate::ring::{Endomorphism, FiniteRing, Validation, DEFAULT_MAX_ORDER};

/// Evaluation settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub max_order: usize,
    /// Run the exhaustive axiom scan on every constructed ring whose
    /// `order³` fits `validation_budget`.
    pub validate: bool,
    pub validation_budget: u128,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_order: DEFAULT_MAX_ORDER,
            validate: false,
            validation_budget: 1 << 24,
        }
    }
}

impl Config {
    pub fn with_max_order(max_order: usize) -> Self {
        Config {
            max_order,
            ..Config::default()
        }
    }

    pub fn budget(&self) -> Budget {
        Budget::new(self.max_order)
    }
}

/// A construction failure, tagged with the sub-expression that failed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{expr}: {source}")]
pub struct EvalError {
    pub expr: String,
    pub source: RingError,
}

impl EvalError {
    pub fn is_budget(&self) -> bool {
        matches!(self.source, RingError::BudgetExceeded { .. })
    }
}

/// Rings above this order are rebuilt on demand instead of memoized.
pub const CACHE_LIMIT: usize = 1024;

/// Evaluates expressions bottom-up, memoizing every sub-result of order at
/// most [`CACHE_LIMIT`] by its canonical text.
pub struct Evaluator {
    config: Config,
    cache: Mutex<HashMap<String, Arc<FiniteRing>>>,
}

impl Evaluator {
    pub fn new(config: Config) -> Self {
        Evaluator {
            config,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn eval(&self, expr: &RingExpr) -> Result<Arc<FiniteRing>, EvalError> {
        let key = expr.to_string();
        if let Some(r) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(r.clone());
        }
        let ring = Arc::new(self.build(expr).map_err(|source| match source {
            Wrapped::Inner(e) => e,
            Wrapped::Here(source) => EvalError {
                expr: key.clone(),
                source,
            },
        })?);
        if self.config.validate {
            if let Validation::Violation { axiom, witness } = ring.validate(self.config.validation_budget) {
                return Err(EvalError {
                    expr: key,
                    source: RingError::InvalidTable(format!("{axiom} fails at {witness:?}")),
                });
            }
        }
        if ring.order() <= CACHE_LIMIT {
            self.cache
                .lock()
                .expect("cache lock")
                .entry(key)
                .or_insert_with(|| ring.clone());
        }
        Ok(ring)
    }

    fn child(&self, e: &RingExpr) -> Result<Arc<FiniteRing>, Wrapped> {
        self.eval(e).map_err(Wrapped::Inner)
    }

    fn alpha(&self, base: &Arc<FiniteRing>, name: EndoName) -> Result<Endomorphism, RingError> {
        match name {
            EndoName::Id => Ok(identity_endo(base)),
            EndoName::Frobenius => frobenius_endo(base),
        }
    }

    fn build(&self, expr: &RingExpr) -> Result<FiniteRing, Wrapped> {
        let budget = self.config.budget();
        let here = Wrapped::Here;
        let ring = match expr {
            RingExpr::ZMod(n) => {
                budget.check(*n as u128).map_err(here)?;
                ring_zn(*n as usize).map_err(here)?
            }
            RingExpr::GF { p, k } => ring_gf(*p, *k, &budget).map_err(here)?,
            RingExpr::Prod(fs) => {
                let rings = fs.iter().map(|f| self.child(f)).collect::<Result<Vec<_>, _>>()?;
                let refs: Vec<&FiniteRing> = rings.iter().map(|r| r.as_ref()).collect();
                product(&refs, &budget).map_err(here)?
            }
            RingExpr::M { n, base } => matrix_ring(*n, &*self.child(base)?, &budget).map_err(here)?,
            RingExpr::T { n, base } => upper_triangular(*n, &*self.child(base)?, &budget).map_err(here)?,
            RingExpr::Tskew { n, base, alpha } => {
                let b = self.child(base)?;
                let a = self.alpha(&b, *alpha).map_err(here)?;
                skew_triangular(*n, &a, &budget).map_err(here)?
            }
            RingExpr::PolyMod { base, n } => poly_mod(&self.child(base)?, *n, &budget).map_err(here)?,
            RingExpr::SkewPolyMod { base, n, alpha } => {
                let b = self.child(base)?;
                let a = self.alpha(&b, *alpha).map_err(here)?;
                skew_poly_mod(&a, *n, &budget).map_err(here)?
            }
            RingExpr::TrivExt { base, k } => {
                let b = self.child(base)?;
                budget
                    .check((b.order() as u128).saturating_pow(*k as u32 + 1))
                    .map_err(here)?;
                let m = Bimodule::regular_sum(&b, *k).map_err(here)?;
                trivial_extension(&m, &budget).map_err(here)?
            }
            RingExpr::DT { base } => {
                let b = self.child(base)?;
                dt_extension(&Bimodule::regular(&b), &budget).map_err(here)?
            }
            RingExpr::Ks { base, s } => ks_ring(&*self.child(base)?, *s, &budget).map_err(here)?,
            RingExpr::FM { n, base, s } => formal_matrix(*n, &*self.child(base)?, *s, &budget).map_err(here)?,
            RingExpr::MoritaTriv { a, b } => {
                let ra = self.child(a)?;
                match b {
                    None => {
                        let m = Bimodule::regular(&ra);
                        trivial_morita(&m, &m, &budget).map_err(here)?
                    }
                    Some(b) => {
                        let rb = self.child(b)?;
                        let m = Bimodule::zero(&ra, &rb);
                        let n = Bimodule::zero(&rb, &ra);
                        trivial_morita(&m, &n, &budget).map_err(here)?
                    }
                }
            }
            RingExpr::GroupRing { base, group } => {
                let b = self.child(base)?;
                let g = Arc::new(group_catalog(group).map_err(here)?);
                group_ring(&b, &g, &budget).map_err(here)?
            }
        };
        Ok(ring)
    }
}

/// Distinguishes failures of a child (already tagged) from failures of the
/// node itself.
enum Wrapped {
    Inner(EvalError),
    Here(RingError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    fn eval(text: &str) -> Result<Arc<FiniteRing>, EvalError> {
        Evaluator::new(Config::default()).eval(&parse(text).unwrap())
    }

    #[test]
    fn orders() {
        assert_eq!(eval("Prod(Z2, Z3)").unwrap().order(), 6);
        assert_eq!(eval("FM(2, Z4, s=2)").unwrap().order(), 256);
        assert_eq!(eval("TrivExt(Z2, 2)").unwrap().order(), 8);
        assert_eq!(eval("MoritaTriv(Z2, GF(4))").unwrap().order(), 8);
    }

    #[test]
    fn errors() {
        let e = eval("M(3, Z3)").unwrap_err();
        assert!(e.is_budget());
        assert_eq!(e.expr, "M(3, Z3)");
        assert_eq!(eval("GF(6)").unwrap_err().source, RingError::NotPrime(6));
        assert_eq!(
            eval("GroupRing(Z2, C5)").unwrap_err().source,
            RingError::UnknownGroup("C5".into())
        );
        assert!(matches!(
            eval("Ks(M(2, Z2), s=2)").unwrap_err().source,
            RingError::NotCentral(2)
        ));
        assert!(matches!(
            eval("Tskew(2, Z4, alpha=frobenius)").unwrap_err().source,
            RingError::NotAnEndomorphism(_)
        ));
    }

    #[test]
    fn labels_are_canonical_text() {
        for text in [
            "Prod(Z2, Z3)",
            "M(2, Z2)",
            "T(2, Z3)",
            "Tskew(2, GF(4), alpha=frobenius)",
            "PolyMod(Z2, 3)",
            "SkewPolyMod(GF(4), 2, alpha=frobenius)",
            "TrivExt(Z3)",
            "TrivExt(Z2, 2)",
            "DT(Z2)",
            "Ks(Z4, s=2)",
            "FM(2, Z4, s=2)",
            "MoritaTriv(Z2)",
            "MoritaTriv(Z2, GF(4))",
            "GroupRing(Z2, C2xC2)",
        ] {
            assert_eq!(eval(text).unwrap().label(), text);
        }
    }

    #[test]
    fn memoized_evaluation_is_shared() {
        let ev = Evaluator::new(Config::default());
        let a = ev.eval(&parse("M(2, Z2)").unwrap()).unwrap();
        let b = ev.eval(&parse("M( 2 ,Z2 )").unwrap()).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
