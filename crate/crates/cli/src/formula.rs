//! Boolean formulas over predicate ids for `search --where`.
//!
//! `not` binds tightest, then `and`, then `or`; parentheses group.

use std::fmt;

use ringlab_core::predicates::Predicate;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Atom(Predicate),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for FormulaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "formula error at column {}: {}", self.column, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, FormulaError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' || c == ')' {
            out.push((if c == '(' { Tok::LParen } else { Tok::RParen }, i + 1));
            i += 1;
        } else if c.is_ascii_alphanumeric() || c == '-' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '-') {
                i += 1;
            }
            out.push((Tok::Word(chars[start..i].iter().collect()), start + 1));
        } else {
            return Err(FormulaError {
                column: i + 1,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn column(&self) -> usize {
        self.toks[self.i].1
    }

    fn error(&self, message: impl Into<String>) -> FormulaError {
        FormulaError {
            column: self.column(),
            message: message.into(),
        }
    }

    fn keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Word(w) if w == kw)
    }

    fn or(&mut self) -> Result<Formula, FormulaError> {
        let mut left = self.and()?;
        while self.keyword("or") {
            self.i += 1;
            left = Formula::Or(Box::new(left), Box::new(self.and()?));
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Formula, FormulaError> {
        let mut left = self.not()?;
        while self.keyword("and") {
            self.i += 1;
            left = Formula::And(Box::new(left), Box::new(self.not()?));
        }
        Ok(left)
    }

    fn not(&mut self) -> Result<Formula, FormulaError> {
        if self.keyword("not") {
            self.i += 1;
            return Ok(Formula::Not(Box::new(self.not()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, FormulaError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.i += 1;
                let inner = self.or()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("expected `)`"));
                }
                self.i += 1;
                Ok(inner)
            }
            Tok::Word(w) if w == "and" || w == "or" => Err(self.error(format!("expected a predicate id, found `{w}`"))),
            Tok::Word(w) => {
                let p = w
                    .parse::<Predicate>()
                    .map_err(|e| self.error(e.to_string()))?;
                self.i += 1;
                Ok(Formula::Atom(p))
            }
            Tok::RParen => Err(self.error("expected a predicate id, found `)`")),
            Tok::End => Err(self.error("expected a predicate id, found end of input")),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, FormulaError> {
    let mut p = Parser { toks: lex(text)?, i: 0 };
    let f = p.or()?;
    if *p.peek() != Tok::End {
        return Err(p.error("expected `and`, `or` or end of input"));
    }
    Ok(f)
}

impl Formula {
    /// Evaluates with `truth` queried only for atoms that decide the result.
    pub fn eval(&self, truth: &mut impl FnMut(Predicate) -> bool) -> bool {
        match self {
            Formula::Atom(p) => truth(*p),
            Formula::Not(f) => !f.eval(truth),
            Formula::And(a, b) => a.eval(truth) && b.eval(truth),
            Formula::Or(a, b) => a.eval(truth) || b.eval(truth),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(p) => write!(f, "{p}"),
            Formula::Not(x) => write!(f, "not {x}"),
            Formula::And(a, b) => write!(f, "({a} and {b})"),
            Formula::Or(a, b) => write!(f, "({a} or {b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(text: &str, true_ids: &[&str]) -> bool {
        parse_formula(text)
            .unwrap()
            .eval(&mut |p| true_ids.contains(&p.id()))
    }

    #[test]
    fn precedence() {
        assert_eq!(
            parse_formula("2UNJ and not UJ or tripotent").unwrap().to_string(),
            "((2UNJ and not UJ) or tripotent)"
        );
        assert!(eval("not UJ and 2UNJ", &["2UNJ"]));
        assert!(!eval("not (UJ or 2UNJ)", &["2UNJ"]));
        assert!(eval("strongly-2-nil-clean", &["strongly-2-nil-clean"]));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_formula("2UNJ and").unwrap_err().column, 9);
        assert_eq!(parse_formula("(UJ").unwrap_err().column, 4);
        assert!(parse_formula("3UNJ").unwrap_err().message.contains("3UNJ"));
        assert!(parse_formula("UJ UU").is_err());
        assert!(parse_formula("UJ & UU").is_err());
    }
}
