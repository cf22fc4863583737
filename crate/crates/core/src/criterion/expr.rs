//! Declarative recurrence files.
//!
//! ```text
//! # Whitney numbers with m = 2
//! name = whitney-2
//! f = 1 + 2*k
//! g = 1
//! support_start = 1
//! base = 1
//! ```
//!
//! `f` and `g` are expressions over integer literals, `n`, `k`, `+`, `-`,
//! `*`, `/` and parentheses. `name`, `support_start` (default 0) and `base`
//! (value of the single degree-0 entry, default 1) are optional.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{CoefficientRow, Rational};

use super::TriangularRecurrence;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(BigInt),
    N,
    K,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Exact value at `(n, k)`; `None` on division by zero.
    pub fn eval(&self, n: u64, k: u64) -> Option<Rational> {
        Some(match self {
            Expr::Const(c) => Rational::from_integer(c.clone()),
            Expr::N => Rational::from_integer(n.into()),
            Expr::K => Rational::from_integer(k.into()),
            Expr::Neg(a) => -a.eval(n, k)?,
            Expr::Add(a, b) => a.eval(n, k)? + b.eval(n, k)?,
            Expr::Sub(a, b) => a.eval(n, k)? - b.eval(n, k)?,
            Expr::Mul(a, b) => a.eval(n, k)? * b.eval(n, k)?,
            Expr::Div(a, b) => {
                let d = b.eval(n, k)?;
                if d.is_zero() {
                    return None;
                }
                a.eval(n, k)? / d
            }
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::N => f.write_str("n"),
            Expr::K => f.write_str("k"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    source: &'a str,
}

impl<'a> Parser<'a> {
    fn new(source: &'a str) -> Self {
        Self {
            chars: source.chars().collect(),
            pos: 0,
            source,
        }
    }

    fn error(&self, message: impl fmt::Display) -> String {
        format!("{message} at column {} in `{}`", self.pos + 1, self.source)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn is_minus(c: char) -> bool {
        c == '-' || c == '\u{2212}'
    }

    fn expr(&mut self) -> std::result::Result<Expr, String> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(c) if Self::is_minus(c) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> std::result::Result<Expr, String> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some('/') => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> std::result::Result<Expr, String> {
        match self.peek() {
            Some(c) if Self::is_minus(c) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> std::result::Result<Expr, String> {
        match self.peek() {
            Some('n') => {
                self.pos += 1;
                Ok(Expr::N)
            }
            Some('k') => {
                self.pos += 1;
                Ok(Expr::K)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                Ok(Expr::Const(digits.parse().expect("ascii digits")))
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

/// Parses a complete expression.
pub fn parse_expr(source: &str) -> std::result::Result<Expr, String> {
    let mut parser = Parser::new(source);
    let expr = parser.expr()?;
    if let Some(c) = parser.peek() {
        return Err(parser.error(format!("unexpected `{c}`")));
    }
    Ok(expr)
}

fn parse_rational(source: &str) -> std::result::Result<Rational, String> {
    let expr = parse_expr(source)?;
    match expr.eval(0, 0) {
        Some(v) if !contains_variable(&expr) => Ok(v),
        Some(_) => Err(format!("`{source}` must be a constant")),
        None => Err(format!("`{source}` divides by zero")),
    }
}

fn contains_variable(expr: &Expr) -> bool {
    match expr {
        Expr::Const(_) => false,
        Expr::N | Expr::K => true,
        Expr::Neg(a) => contains_variable(a),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            contains_variable(a) || contains_variable(b)
        }
    }
}

/// Parses the text of a recurrence file.
pub fn parse_recurrence(text: &str) -> Result<TriangularRecurrence> {
    let mut name = None;
    let mut f = None;
    let mut g = None;
    let mut support_start = 0usize;
    let mut base = Rational::from_integer(1.into());

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| Error::Parse { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| err(format!("expected `key = value`, got `{content}`")))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "name" => name = Some(value.to_string()),
            "f" => f = Some(parse_expr(value).map_err(|m| err(format!("f: {m}")))?),
            "g" => g = Some(parse_expr(value).map_err(|m| err(format!("g: {m}")))?),
            "support_start" => {
                support_start = value.parse().map_err(|_| {
                    err(format!(
                        "support_start: `{value}` is not a non-negative integer"
                    ))
                })?
            }
            "base" => base = parse_rational(value).map_err(|m| err(format!("base: {m}")))?,
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }

    let last = text.lines().count().max(1);
    let f = f.ok_or(Error::Parse {
        line: last,
        message: "missing `f`".into(),
    })?;
    let g = g.ok_or(Error::Parse {
        line: last,
        message: "missing `g`".into(),
    })?;
    let name = name.unwrap_or_else(|| format!("f = {f}; g = {g}"));
    let (f, g) = (Arc::new(f), Arc::new(g));
    let base = CoefficientRow::new(0, vec![base])?;
    Ok(
        TriangularRecurrence::new(name, move |n, k| f.eval(n, k), move |n, k| g.eval(n, k))
            .with_support_start(support_start)
            .with_base(base),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn precedence_and_unary_minus() {
        let e = parse_expr("1 + 2*k - -n/3").unwrap();
        assert_eq!(e.eval(6, 4), Some(int(11)));
        let e = parse_expr("(n - k) * (k + 1) / (n + 1)").unwrap();
        assert_eq!(e.eval(3, 1), Some(ratio(1, 1)));
        assert_eq!(parse_expr("1/(n-k)").unwrap().eval(2, 2), None);
        assert_eq!(parse_expr("n \u{2212} 1").unwrap().eval(4, 0), Some(int(3)));
    }

    #[test]
    fn parse_errors_have_positions() {
        let err = parse_expr("1 + * k").unwrap_err();
        assert!(err.contains("column 5"), "{err}");
        assert!(parse_expr("(n + 1").is_err());
        assert!(parse_expr("n k").is_err());
        assert!(parse_expr("x").is_err());
        assert!(parse_expr("").is_err());
    }

    #[test]
    fn recurrence_file() {
        let rec = parse_recurrence("# whitney\nname = w2\nf = 1 + 2*k\ng = 1\nsupport_start = 1\n")
            .unwrap();
        assert_eq!(rec.name(), "w2");
        assert_eq!(rec.support_start(), 1);
        assert_eq!(rec.f(3, 2), Some(int(5)));
        assert_eq!(rec.g(3, 2), Some(int(1)));
    }

    #[test]
    fn recurrence_file_errors() {
        let err = parse_recurrence("f = 1 +\ng = 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_recurrence("f = 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { ref message, .. } if message.contains("missing `g`")));
        assert!(parse_recurrence("f = 1\ng = 1\nbogus = 2\n").is_err());
        assert!(parse_recurrence("f = 1\ng = 1\nbase = n\n").is_err());
        assert!(parse_recurrence("f = 1\ng = 1\nsupport_start = -1\n").is_err());
    }
}
