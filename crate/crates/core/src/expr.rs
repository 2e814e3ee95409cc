//! Generating-function expressions: a small recursive-descent parser and an
//! exact evaluator into [`PowerSeries`].
//!
//! Grammar (whitespace is ignored, `*` is never implicit):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' unsigned-integer)?
//! atom   := integer | 'x' | '(' expr ')' | 'sqrt' '(' expr ')' | 'c' '(' expr ')'
//! ```
//!
//! `c(u)` is the Catalan generating function composed with `u`, which must
//! have zero constant term.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::series::{catalan_gf, PowerSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesExpr {
    Int(BigInt),
    X,
    Neg(Box<SeriesExpr>),
    Add(Box<SeriesExpr>, Box<SeriesExpr>),
    Sub(Box<SeriesExpr>, Box<SeriesExpr>),
    Mul(Box<SeriesExpr>, Box<SeriesExpr>),
    Div(Box<SeriesExpr>, Box<SeriesExpr>),
    Pow(Box<SeriesExpr>, u32),
    Sqrt(Box<SeriesExpr>),
    Catalan(Box<SeriesExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer { src, pos: 0 };
        let mut out = Vec::new();
        loop {
            let t = lx.next()?;
            let done = t.0 == Tok::End;
            out.push(t);
            if done {
                return Ok(out);
            }
        }
    }

    fn next(&mut self) -> Result<(Tok, usize)> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&b) = bytes.get(self.pos) else {
            return Ok((Tok::End, start));
        };
        if b.is_ascii_digit() {
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let n: BigInt = self.src[start..self.pos].parse().expect("digits");
            return Ok((Tok::Int(n), start));
        }
        if b.is_ascii_alphabetic() || b == b'_' {
            while self.pos < bytes.len()
                && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
            {
                self.pos += 1;
            }
            return Ok((Tok::Ident(self.src[start..self.pos].to_string()), start));
        }
        if b"+-*/^()".contains(&b) {
            self.pos += 1;
            return Ok((Tok::Op(b as char), start));
        }
        let ch = self.src[start..].chars().next().unwrap_or('?');
        Err(Error::Syntax {
            position: start,
            message: format!("unexpected character `{ch}`"),
        })
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos(),
            message: message.into(),
        })
    }

    fn expect(&mut self, op: char) -> Result<()> {
        if *self.peek() == Tok::Op(op) {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected `{op}`"))
        }
    }

    fn expr(&mut self) -> Result<SeriesExpr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    lhs = SeriesExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Op('-') => {
                    self.bump();
                    lhs = SeriesExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<SeriesExpr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    lhs = SeriesExpr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Op('/') => {
                    self.bump();
                    lhs = SeriesExpr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<SeriesExpr> {
        if *self.peek() == Tok::Op('-') {
            self.bump();
            return Ok(SeriesExpr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if *self.peek() == Tok::Op('^') {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Tok::Int(n) => {
                    let e = u32::try_from(&n).map_err(|_| Error::Syntax {
                        position: pos,
                        message: "exponent too large".into(),
                    })?;
                    return Ok(SeriesExpr::Pow(Box::new(base), e));
                }
                _ => {
                    return Err(Error::Syntax {
                        position: pos,
                        message: "expected an unsigned integer exponent".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<SeriesExpr> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(SeriesExpr::Int(n)),
            Tok::Op('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "x" => Ok(SeriesExpr::X),
                "sqrt" | "c" => {
                    self.expect('(')?;
                    let inner = self.expr()?;
                    self.expect(')')?;
                    Ok(if name == "sqrt" {
                        SeriesExpr::Sqrt(Box::new(inner))
                    } else {
                        SeriesExpr::Catalan(Box::new(inner))
                    })
                }
                _ => Err(Error::UnknownIdentifier {
                    name,
                    position: pos,
                }),
            },
            Tok::End => Err(Error::Syntax {
                position: pos,
                message: "unexpected end of input".into(),
            }),
            Tok::Op(c) => Err(Error::Syntax {
                position: pos,
                message: format!("unexpected `{c}`"),
            }),
        }
    }
}

/// Parses a generating-function expression.
pub fn parse_gf(text: &str) -> Result<SeriesExpr> {
    let mut p = Parser {
        toks: Lexer::tokens(text)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail("trailing input");
    }
    Ok(e)
}

/// Expands an expression to order `order`.
///
/// Removable divisions (divisor starting at `x^v`) cost `v` orders, so the
/// tree is evaluated at a padded working order until the result reaches the
/// requested one.
pub fn expand(expr: &SeriesExpr, order: usize) -> Result<PowerSeries> {
    const MAX_PAD: usize = 256;
    let mut pad = 0;
    loop {
        match eval(expr, order + pad) {
            Ok(s) if s.order() >= order => return Ok(s.truncate(order)),
            Ok(s) => pad += order - s.order(),
            Err(Error::NonRemovableDivision { .. }) if pad < MAX_PAD => pad = (pad * 2).max(1),
            Err(e) => return Err(e),
        }
        if pad > MAX_PAD {
            return Err(Error::NonRemovableDivision {
                valuation: pad,
                order,
            });
        }
    }
}

/// Parses and expands in one step.
pub fn expand_str(text: &str, order: usize) -> Result<PowerSeries> {
    expand(&parse_gf(text)?, order)
}

fn eval(e: &SeriesExpr, n: usize) -> Result<PowerSeries> {
    use SeriesExpr::*;
    Ok(match e {
        Int(v) => PowerSeries::constant(Rational::from_integer(v.clone()), n),
        X => PowerSeries::x(n),
        Neg(a) => -&eval(a, n)?,
        Add(a, b) => &eval(a, n)? + &eval(b, n)?,
        Sub(a, b) => &eval(a, n)? - &eval(b, n)?,
        Mul(a, b) => eval(a, n)?.mul(&eval(b, n)?),
        Div(a, b) => eval(a, n)?.div_removable(&eval(b, n)?)?,
        Pow(a, k) => eval(a, n)?.pow(*k),
        Sqrt(a) => eval(a, n)?.sqrt()?,
        Catalan(a) => {
            let u = eval(a, n)?;
            catalan_gf(u.order()).compose(&u)?
        }
    })
}

impl SeriesExpr {
    fn precedence(&self) -> u8 {
        use SeriesExpr::*;
        match self {
            Add(..) | Sub(..) => 1,
            Mul(..) | Div(..) => 2,
            Neg(..) => 3,
            Pow(..) => 4,
            Int(v) if v.is_negative() => 3,
            Int(_) | X | Sqrt(_) | Catalan(_) => 5,
        }
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &SeriesExpr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for SeriesExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SeriesExpr::*;
        match self {
            Int(v) => write!(f, "{v}"),
            X => f.write_str("x"),
            Neg(a) => {
                f.write_str("-")?;
                wrap(f, a, 3)
            }
            Add(a, b) | Sub(a, b) => {
                wrap(f, a, 1)?;
                f.write_str(if matches!(self, Add(..)) {
                    " + "
                } else {
                    " - "
                })?;
                wrap(f, b, 2)
            }
            Mul(a, b) | Div(a, b) => {
                wrap(f, a, 2)?;
                f.write_str(if matches!(self, Mul(..)) { "*" } else { "/" })?;
                wrap(f, b, 3)
            }
            Pow(a, k) => {
                wrap(f, a, 5)?;
                write!(f, "^{k}")
            }
            Sqrt(a) => write!(f, "sqrt({a})"),
            Catalan(a) => write!(f, "c({a})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SeriesExpr::*;

    fn ints(v: &[i64]) -> PowerSeries {
        PowerSeries::from_ints(v.iter().copied())
    }

    #[test]
    fn parses_geometric() {
        let e = parse_gf("1/(1-x)").unwrap();
        assert_eq!(
            e,
            Div(
                Box::new(Int(1.into())),
                Box::new(Sub(Box::new(Int(1.into())), Box::new(X)))
            )
        );
    }

    #[test]
    fn parses_printed_forms() {
        assert!(parse_gf("(1-sqrt(1-4*x))/(2*x)").is_ok());
        assert!(parse_gf("1/(1-3*x*c(x))").is_ok());
        assert!(parse_gf(" ( 1 + x ) ^ 2 - -x ").is_ok());
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(
            parse_gf("1+*x"),
            Err(Error::Syntax {
                position: 2,
                message: "unexpected `*`".into()
            })
        );
        assert!(matches!(
            parse_gf("(1-x"),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_gf("2x"),
            Err(Error::Syntax { position: 1, .. })
        ));
        assert!(matches!(parse_gf("x^-1"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_gf("1 % x"),
            Err(Error::Syntax { position: 2, .. })
        ));
    }

    #[test]
    fn unknown_identifier() {
        assert_eq!(
            parse_gf("1/(1-y)"),
            Err(Error::UnknownIdentifier {
                name: "y".into(),
                position: 5
            })
        );
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand_str("1/(1-x)", 5).unwrap(), ints(&[1; 6]));
        assert_eq!(
            expand_str("(1-sqrt(1-4*x))/(2*x)", 4).unwrap(),
            ints(&[1, 1, 2, 5, 14])
        );
    }

    #[test]
    fn expand_fibonacci_matches_recurrence() {
        // oracle: long division seeds a_0 = 1, a_1 = 2, then a_n = a_{n-1} + a_{n-2}
        let mut oracle = vec![1i64, 2];
        while oracle.len() < 12 {
            let n = oracle.len();
            oracle.push(oracle[n - 1] + oracle[n - 2]);
        }
        assert_eq!(expand_str("(1+x)/(1-x-x^2)", 11).unwrap(), ints(&oracle));
        assert_eq!(
            expand_str("(1+x)/(1-x-x^2)", 4).unwrap(),
            ints(&[1, 2, 3, 5, 8])
        );
    }

    #[test]
    fn double_removable_division() {
        // (c(x) - 1) / x = C_{n+1}
        assert_eq!(
            expand_str("(c(x)-1)/x", 4).unwrap(),
            ints(&[1, 2, 5, 14, 42])
        );
        // (1 - 2x - sqrt(1-4x)) / (2x^2) = c(x)^2 - ... ; 1 + x c^3 check via (1-x)c^2
        let lhs = expand_str("(1-x)*(1-2*x-sqrt(1-4*x))/(2*x^2)", 10).unwrap();
        let rhs = expand_str("1+x*c(x)^3", 10).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_errors() {
        assert!(matches!(expand_str("1/x", 4), Err(Error::ZeroConstantTerm)));
        assert!(matches!(
            expand_str("sqrt(2+x)", 4),
            Err(Error::NonSquareConstant { .. })
        ));
        assert!(matches!(
            expand_str("c(1+x)", 4),
            Err(Error::NonZeroConstant { .. })
        ));
        assert!(matches!(
            expand_str("1/(x-x)", 4),
            Err(Error::NonRemovableDivision { .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "(1-sqrt(1-4*x))/(2*x)",
            "1/(1-3*x*c(x))",
            "-(1+x)^3/(1-x-x^2)",
            "1-(2-x)*(3+x)",
            "2-x^2/(1-x)",
            "(1-x)/(1+4*x^2)",
            "x/(x*(1-x))",
        ] {
            let e = parse_gf(text).unwrap();
            let again = parse_gf(&e.to_string()).unwrap();
            assert_eq!(e, again, "{text} -> {e}");
        }
    }
}
