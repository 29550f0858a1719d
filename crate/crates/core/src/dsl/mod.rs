//! The ring construction language.
//!
//! ```text
//! expr := "Z" INT | "GF" "(" INT ["," INT] ")" | NAME "(" arg {"," arg} ")"
//! arg  := expr | INT | GROUP | "alpha" "=" ("id" | "frobenius") | "s" "=" INT
//! NAME := Prod | M | T | Tskew | PolyMod | SkewPolyMod | TrivExt | DT | Ks
//!       | FM | MoritaTriv | GroupRing
//! ```
//!
//! | form | ring |
//! |---|---|
//! | `Z6` or `Z 6` | integers mod 6 |
//! | `GF(9)`, `GF(3, 2)` | the field with 9 elements |
//! | `Prod(R, S, ..)` | direct product |
//! | `M(n, R)` / `T(n, R)` | full / upper triangular matrices |
//! | `Tskew(n, R, alpha=..)` | skew triangular ring `T_n(R, α)` |
//! | `PolyMod(R, n)` | `R[x]/(x^n)` |
//! | `SkewPolyMod(R, n, alpha=..)` | `R[x; α]/(x^n)` |
//! | `TrivExt(R)`, `TrivExt(R, k)` | trivial extension by `R`, or by `R^k` |
//! | `DT(R)` | `DT(R, R)` |
//! | `Ks(R, s=..)` | generalized matrix ring `K_s(R)` |
//! | `FM(n, R, s=..)` | formal matrix ring `M_n(R; s)` |
//! | `MoritaTriv(A)` | Morita context with `A = B = M = N` and zero context products |
//! | `MoritaTriv(A, B)` | the same with zero bimodules, i.e. `A × B` |
//! | `GroupRing(R, G)` | group ring over a catalog group |
//!
//! `alpha` defaults to `id`. Element literals such as `s=2` are element
//! indices of the child ring.

mod catalog;
mod eval;
mod lexer;
mod parser;

use std::fmt;

pub use catalog::{parse_catalog, CatalogEntry};
pub use eval::{Config, EvalError, Evaluator, CACHE_LIMIT};
pub use lexer::Pos;
pub use parser::parse;

/// Named endomorphisms usable in skew constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EndoName {
    Id,
    Frobenius,
}

impl EndoName {
    pub fn as_str(self) -> &'static str {
        match self {
            EndoName::Id => "id",
            EndoName::Frobenius => "frobenius",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    ZMod(u64),
    /// `p^k` elements; `p` is checked for primality at evaluation.
    GF { p: u64, k: u32 },
    Prod(Vec<RingExpr>),
    M { n: usize, base: Box<RingExpr> },
    T { n: usize, base: Box<RingExpr> },
    Tskew { n: usize, base: Box<RingExpr>, alpha: EndoName },
    PolyMod { base: Box<RingExpr>, n: usize },
    SkewPolyMod { base: Box<RingExpr>, n: usize, alpha: EndoName },
    /// Trivial extension by the regular bimodule `R^k`.
    TrivExt { base: Box<RingExpr>, k: usize },
    DT { base: Box<RingExpr> },
    Ks { base: Box<RingExpr>, s: usize },
    FM { n: usize, base: Box<RingExpr>, s: usize },
    MoritaTriv { a: Box<RingExpr>, b: Option<Box<RingExpr>> },
    GroupRing { base: Box<RingExpr>, group: String },
}

/// Names of every node kind, matching [`RingExpr::kind`].
pub const NODE_KINDS: &[&str] = &[
    "ZMod",
    "GF",
    "Prod",
    "M",
    "T",
    "Tskew",
    "PolyMod",
    "SkewPolyMod",
    "TrivExt",
    "DT",
    "Ks",
    "FM",
    "MoritaTriv",
    "GroupRing",
];

impl RingExpr {
    pub fn kind(&self) -> &'static str {
        match self {
            RingExpr::ZMod(_) => "ZMod",
            RingExpr::GF { .. } => "GF",
            RingExpr::Prod(_) => "Prod",
            RingExpr::M { .. } => "M",
            RingExpr::T { .. } => "T",
            RingExpr::Tskew { .. } => "Tskew",
            RingExpr::PolyMod { .. } => "PolyMod",
            RingExpr::SkewPolyMod { .. } => "SkewPolyMod",
            RingExpr::TrivExt { .. } => "TrivExt",
            RingExpr::DT { .. } => "DT",
            RingExpr::Ks { .. } => "Ks",
            RingExpr::FM { .. } => "FM",
            RingExpr::MoritaTriv { .. } => "MoritaTriv",
            RingExpr::GroupRing { .. } => "GroupRing",
        }
    }

    /// Immediate ring-valued children.
    pub fn children(&self) -> Vec<&RingExpr> {
        match self {
            RingExpr::ZMod(_) | RingExpr::GF { .. } => vec![],
            RingExpr::Prod(fs) => fs.iter().collect(),
            RingExpr::MoritaTriv { a, b } => {
                let mut v = vec![a.as_ref()];
                v.extend(b.as_deref());
                v
            }
            RingExpr::M { base, .. }
            | RingExpr::T { base, .. }
            | RingExpr::Tskew { base, .. }
            | RingExpr::PolyMod { base, .. }
            | RingExpr::SkewPolyMod { base, .. }
            | RingExpr::TrivExt { base, .. }
            | RingExpr::DT { base }
            | RingExpr::Ks { base, .. }
            | RingExpr::FM { base, .. }
            | RingExpr::GroupRing { base, .. } => vec![base.as_ref()],
        }
    }

    /// Every node kind occurring in the expression.
    pub fn kinds(&self) -> Vec<&'static str> {
        let mut out = vec![self.kind()];
        for c in self.children() {
            out.extend(c.kinds());
        }
        out
    }
}

/// True when `p` is prime.
pub(crate) fn prime(p: u64) -> bool {
    crate::groups::is_prime(p)
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::ZMod(n) => write!(f, "Z{n}"),
            RingExpr::GF { p, k } => {
                if prime(*p) {
                    write!(f, "GF({})", p.pow(*k))
                } else {
                    write!(f, "GF({p}, {k})")
                }
            }
            RingExpr::Prod(fs) => {
                f.write_str("Prod(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
            RingExpr::M { n, base } => write!(f, "M({n}, {base})"),
            RingExpr::T { n, base } => write!(f, "T({n}, {base})"),
            RingExpr::Tskew { n, base, alpha } => {
                write!(f, "Tskew({n}, {base}, alpha={})", alpha.as_str())
            }
            RingExpr::PolyMod { base, n } => write!(f, "PolyMod({base}, {n})"),
            RingExpr::SkewPolyMod { base, n, alpha } => {
                write!(f, "SkewPolyMod({base}, {n}, alpha={})", alpha.as_str())
            }
            RingExpr::TrivExt { base, k: 1 } => write!(f, "TrivExt({base})"),
            RingExpr::TrivExt { base, k } => write!(f, "TrivExt({base}, {k})"),
            RingExpr::DT { base } => write!(f, "DT({base})"),
            RingExpr::Ks { base, s } => write!(f, "Ks({base}, s={s})"),
            RingExpr::FM { n, base, s } => write!(f, "FM({n}, {base}, s={s})"),
            RingExpr::MoritaTriv { a, b: None } => write!(f, "MoritaTriv({a})"),
            RingExpr::MoritaTriv { a, b: Some(b) } => write!(f, "MoritaTriv({a}, {b})"),
            RingExpr::GroupRing { base, group } => write!(f, "GroupRing({base}, {group})"),
        }
    }
}

/// Canonical text of an expression.
pub fn format(expr: &RingExpr) -> String {
    expr.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("parse error at line {}, column {}: expected {}; found {found}", pos.line, pos.column, expected_list(.expected))]
    Parse {
        pos: Pos,
        found: String,
        expected: Vec<String>,
    },
    #[error("arity error at line {}, column {}: {message}", pos.line, pos.column)]
    Arity { pos: Pos, message: String },
    #[error("range error at line {}, column {}: {message}", pos.line, pos.column)]
    Range { pos: Pos, message: String },
}

fn expected_list(items: &[String]) -> String {
    match items {
        [one] => one.clone(),
        _ => format!("one of {}", items.join(", ")),
    }
}

impl DslError {
    pub fn pos(&self) -> Pos {
        match self {
            DslError::Parse { pos, .. } | DslError::Arity { pos, .. } | DslError::Range { pos, .. } => *pos,
        }
    }

    pub(crate) fn at_line(mut self, line: usize) -> Self {
        match &mut self {
            DslError::Parse { pos, .. } | DslError::Arity { pos, .. } | DslError::Range { pos, .. } => {
                pos.line = line
            }
        }
        self
    }
}
