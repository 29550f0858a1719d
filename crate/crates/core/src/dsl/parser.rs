use super::lexer::{lex, Pos, Tok, Token};
use super::{DslError, EndoName, RingExpr};

const NAMES: &[&str] = &[
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

/// Sizes beyond this can never fit the order budget.
const MAX_SIZE: u64 = 64;

#[derive(Debug)]
enum Arg {
    Ring(RingExpr, Pos),
    Int(u64, Pos),
    Ident(String, Pos),
    Alpha(EndoName, Pos),
    S(u64, Pos),
}

impl Arg {
    fn pos(&self) -> Pos {
        match self {
            Arg::Ring(_, p) | Arg::Int(_, p) | Arg::Ident(_, p) | Arg::Alpha(_, p) | Arg::S(_, p) => *p,
        }
    }
}

struct Parser {
    toks: Vec<Token>,
    i: usize,
}

/// Parses one ring expression; surrounding whitespace is ignored.
pub fn parse(text: &str) -> Result<RingExpr, DslError> {
    let mut p = Parser { toks: lex(text)?, i: 0 };
    let e = p.expr()?;
    p.expect(Tok::End, &["end of input"])?;
    Ok(e)
}

fn zmod_literal(s: &str) -> Option<&str> {
    let digits = s.strip_prefix('Z')?;
    (!digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())).then_some(digits)
}

fn range(pos: Pos, message: impl Into<String>) -> DslError {
    DslError::Range {
        pos,
        message: message.into(),
    }
}

fn arity(pos: Pos, message: impl Into<String>) -> DslError {
    DslError::Arity {
        pos,
        message: message.into(),
    }
}

/// Splits `q` as `p^k` with `p` its least prime factor, when `q` is a prime
/// power.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|d| d * d <= q).find(|d| q % d == 0).unwrap_or(q);
    let (mut m, mut k) = (q, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.i]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> DslError {
        let t = self.peek();
        DslError::Parse {
            pos: t.pos,
            found: t.tok.describe(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &[&str]) -> Result<Pos, DslError> {
        if self.peek().tok == tok {
            Ok(self.next().pos)
        } else {
            Err(self.error(expected))
        }
    }

    fn int(&mut self) -> Result<(u64, Pos), DslError> {
        match self.peek().tok {
            Tok::Int(n) => Ok((n, self.next().pos)),
            _ => Err(self.error(&["integer"])),
        }
    }

    fn starts_expr(name: &str) -> bool {
        name == "Z" || name == "GF" || zmod_literal(name).is_some() || NAMES.contains(&name)
    }

    fn expr(&mut self) -> Result<RingExpr, DslError> {
        let start = self.peek().clone();
        let Tok::Ident(name) = &start.tok else {
            return Err(self.error(&["ring expression"]));
        };
        if name == "Z" {
            self.next();
            let (n, pos) = self.int()?;
            return zmod(n, pos);
        }
        if let Some(digits) = zmod_literal(name) {
            self.next();
            let n = digits
                .parse::<u64>()
                .map_err(|_| range(start.pos, format!("modulus {digits} is too large")))?;
            return zmod(n, start.pos);
        }
        if name == "GF" {
            self.next();
            return self.gf(start.pos);
        }
        if !NAMES.contains(&name.as_str()) {
            return Err(self.error(&["ring expression"]));
        }
        let name = name.clone();
        self.next();
        self.expect(Tok::LParen, &["`(`"])?;
        let mut args = vec![self.arg()?];
        loop {
            match self.peek().tok {
                Tok::Comma => {
                    self.next();
                    args.push(self.arg()?);
                }
                Tok::RParen => {
                    self.next();
                    break;
                }
                _ => return Err(self.error(&["`,`", "`)`"])),
            }
        }
        build(&name, start.pos, args)
    }

    fn gf(&mut self, pos: Pos) -> Result<RingExpr, DslError> {
        self.expect(Tok::LParen, &["`(`"])?;
        let (first, _) = self.int()?;
        let expr = match self.peek().tok {
            Tok::Comma => {
                self.next();
                let (k, k_pos) = self.int()?;
                if k == 0 || k > 64 {
                    return Err(range(k_pos, format!("GF degree {k} out of range 1..=64")));
                }
                let k = k as u32;
                if prime_power(first) == Some((first, 1)) && first.checked_pow(k).is_none() {
                    return Err(range(pos, format!("GF({first}, {k}) is too large")));
                }
                RingExpr::GF { p: first, k }
            }
            Tok::RParen => match prime_power(first) {
                Some((p, k)) => RingExpr::GF { p, k },
                None => RingExpr::GF { p: first, k: 1 },
            },
            _ => return Err(self.error(&["`,`", "`)`"])),
        };
        self.expect(Tok::RParen, &["`)`"])?;
        Ok(expr)
    }

    fn arg(&mut self) -> Result<Arg, DslError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(n) => {
                self.next();
                Ok(Arg::Int(*n, t.pos))
            }
            Tok::Ident(name) if self.toks[self.i + 1].tok == Tok::Eq => {
                let name = name.clone();
                self.next();
                self.next();
                match name.as_str() {
                    "alpha" => {
                        let v = self.peek().clone();
                        let alpha = match &v.tok {
                            Tok::Ident(s) if s == "id" => EndoName::Id,
                            Tok::Ident(s) if s == "frobenius" => EndoName::Frobenius,
                            _ => return Err(self.error(&["`id`", "`frobenius`"])),
                        };
                        self.next();
                        Ok(Arg::Alpha(alpha, t.pos))
                    }
                    "s" => {
                        let (n, _) = self.int()?;
                        Ok(Arg::S(n, t.pos))
                    }
                    _ => Err(DslError::Parse {
                        pos: t.pos,
                        found: format!("`{name}`"),
                        expected: vec!["`alpha`".into(), "`s`".into()],
                    }),
                }
            }
            Tok::Ident(name) if Self::starts_expr(name) => Ok(Arg::Ring(self.expr()?, t.pos)),
            Tok::Ident(name) => {
                if self.toks[self.i + 1].tok == Tok::LParen {
                    return Err(self.error(&["ring expression"]));
                }
                let name = name.clone();
                self.next();
                Ok(Arg::Ident(name, t.pos))
            }
            _ => Err(self.error(&["ring expression", "integer", "group name", "keyword argument"])),
        }
    }
}

fn zmod(n: u64, pos: Pos) -> Result<RingExpr, DslError> {
    if n < 2 {
        return Err(range(pos, format!("Z{n} is not a ring with 1 != 0; modulus must be at least 2")));
    }
    Ok(RingExpr::ZMod(n))
}

fn size(n: u64, min: u64, pos: Pos, what: &str) -> Result<usize, DslError> {
    if n < min || n > MAX_SIZE {
        return Err(range(pos, format!("{what} {n} out of range {min}..={MAX_SIZE}")));
    }
    Ok(n as usize)
}

fn element(n: u64, pos: Pos) -> Result<usize, DslError> {
    usize::try_from(n)
        .ok()
        .filter(|&v| v < u16::MAX as usize + 1)
        .ok_or_else(|| range(pos, format!("element literal {n} is out of range")))
}

/// Assembles a node from its parsed arguments, checking arity and argument
/// kinds.
fn build(name: &str, pos: Pos, args: Vec<Arg>) -> Result<RingExpr, DslError> {
    let count = args.len();
    let wrong = |expected: &str| arity(pos, format!("{name} takes {expected}; got {count} argument(s)"));
    let ring = |a: Arg, what: &str| match a {
        Arg::Ring(e, _) => Ok(Box::new(e)),
        other => Err(arity(other.pos(), format!("{name}: expected {what} to be a ring expression"))),
    };
    let int = |a: Arg, what: &str| match a {
        Arg::Int(n, p) => Ok((n, p)),
        other => Err(arity(other.pos(), format!("{name}: expected {what} to be an integer"))),
    };
    let mut it = args.into_iter();
    let expr = match name {
        "Prod" => {
            let fs = it
                .enumerate()
                .map(|(i, a)| ring(a, &format!("factor {}", i + 1)).map(|b| *b))
                .collect::<Result<Vec<_>, _>>()?;
            RingExpr::Prod(fs)
        }
        "M" | "T" => {
            if count != 2 {
                return Err(wrong("(n, ring)"));
            }
            let (n, p) = int(it.next().unwrap(), "the size")?;
            let n = size(n, 1, p, "matrix size")?;
            let base = ring(it.next().unwrap(), "the base")?;
            if name == "M" {
                RingExpr::M { n, base }
            } else {
                RingExpr::T { n, base }
            }
        }
        "Tskew" => {
            if !(2..=3).contains(&count) {
                return Err(wrong("(n, ring[, alpha=..])"));
            }
            let (n, p) = int(it.next().unwrap(), "the size")?;
            let n = size(n, 1, p, "size")?;
            let base = ring(it.next().unwrap(), "the base")?;
            let alpha = alpha_arg(name, it.next())?;
            RingExpr::Tskew { n, base, alpha }
        }
        "PolyMod" | "SkewPolyMod" => {
            let max = if name == "PolyMod" { 2 } else { 3 };
            if count < 2 || count > max {
                return Err(wrong(if name == "PolyMod" { "(ring, n)" } else { "(ring, n[, alpha=..])" }));
            }
            let base = ring(it.next().unwrap(), "the base")?;
            let (n, p) = int(it.next().unwrap(), "the degree")?;
            let n = size(n, 2, p, "truncation degree")?;
            if name == "PolyMod" {
                RingExpr::PolyMod { base, n }
            } else {
                let alpha = alpha_arg(name, it.next())?;
                RingExpr::SkewPolyMod { base, n, alpha }
            }
        }
        "TrivExt" => {
            if !(1..=2).contains(&count) {
                return Err(wrong("(ring[, k])"));
            }
            let base = ring(it.next().unwrap(), "the base")?;
            let k = match it.next() {
                None => 1,
                Some(a) => {
                    let (k, p) = int(a, "the rank")?;
                    size(k, 1, p, "rank")?
                }
            };
            RingExpr::TrivExt { base, k }
        }
        "DT" => {
            if count != 1 {
                return Err(wrong("(ring)"));
            }
            RingExpr::DT {
                base: ring(it.next().unwrap(), "the base")?,
            }
        }
        "Ks" => {
            if count != 2 {
                return Err(wrong("(ring, s=..)"));
            }
            let base = ring(it.next().unwrap(), "the base")?;
            let s = s_arg(name, it.next().unwrap())?;
            RingExpr::Ks { base, s }
        }
        "FM" => {
            if count != 3 {
                return Err(wrong("(n, ring, s=..)"));
            }
            let (n, p) = int(it.next().unwrap(), "the size")?;
            let n = size(n, 2, p, "matrix size")?;
            let base = ring(it.next().unwrap(), "the base")?;
            let s = s_arg(name, it.next().unwrap())?;
            RingExpr::FM { n, base, s }
        }
        "MoritaTriv" => {
            if !(1..=2).contains(&count) {
                return Err(wrong("(A[, B])"));
            }
            let a = ring(it.next().unwrap(), "A")?;
            let b = it.next().map(|x| ring(x, "B")).transpose()?;
            RingExpr::MoritaTriv { a, b }
        }
        "GroupRing" => {
            if count != 2 {
                return Err(wrong("(ring, group)"));
            }
            let base = ring(it.next().unwrap(), "the base")?;
            let group = match it.next().unwrap() {
                Arg::Ident(g, _) => g,
                other => return Err(arity(other.pos(), "GroupRing: expected a group name")),
            };
            RingExpr::GroupRing { base, group }
        }
        _ => unreachable!("constructor names are checked by the caller"),
    };
    Ok(expr)
}

fn alpha_arg(name: &str, a: Option<Arg>) -> Result<EndoName, DslError> {
    match a {
        None => Ok(EndoName::Id),
        Some(Arg::Alpha(al, _)) => Ok(al),
        Some(other) => Err(arity(other.pos(), format!("{name}: expected alpha=.."))),
    }
}

fn s_arg(name: &str, a: Arg) -> Result<usize, DslError> {
    match a {
        Arg::S(s, p) => element(s, p),
        other => Err(arity(other.pos(), format!("{name}: expected s=.."))),
    }
}
