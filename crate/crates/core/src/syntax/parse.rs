use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::Expr;
use crate::scalar::{parse_rational, Rational};

/// A syntax error with a 1-based position and the set of tokens that would
/// have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at line {}, column {}: expected {}, found {}",
            self.line,
            self.column,
            self.expected.join(" | "),
            self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Bad(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Number(n) => write!(f, "number `{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Bad(c) => write!(f, "`{c}`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Vec<Spanned> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut idx = 0;
    while idx < chars.len() {
        let c = chars[idx];
        if c == '\n' {
            line += 1;
            column = 1;
            idx += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            idx += 1;
            continue;
        }
        let start = idx;
        let tok = if c.is_ascii_digit()
            || (c == '.' && chars.get(idx + 1).is_some_and(char::is_ascii_digit))
        {
            while idx < chars.len() && chars[idx].is_ascii_digit() {
                idx += 1;
            }
            if idx < chars.len() && chars[idx] == '.' {
                idx += 1;
                while idx < chars.len() && chars[idx].is_ascii_digit() {
                    idx += 1;
                }
            }
            Tok::Number(chars[start..idx].iter().collect())
        } else if c.is_ascii_alphabetic() {
            while idx < chars.len() && (chars[idx].is_ascii_alphanumeric() || chars[idx] == '_') {
                idx += 1;
            }
            Tok::Ident(chars[start..idx].iter().collect())
        } else {
            idx += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => Tok::Bad(other),
            }
        };
        out.push(Spanned { tok, line, column });
        column += idx - start;
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    out
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let here = &self.toks[self.pos];
        ParseError {
            line: here.line,
            column: here.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: here.tok.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut items = vec![(false, self.term()?)];
        loop {
            let neg = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
            items.push((neg, self.term()?));
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap().1
        } else {
            Expr::Sum(items)
        })
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut items = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.bump();
            items.push(self.factor()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Expr::Product(items)
        })
    }

    fn factor(&mut self) -> PResult<Expr> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let n = self.uint()?;
            let n = u32::try_from(&n).map_err(|_| self.error(&["exponent below 2^32"]))?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn uint(&mut self) -> PResult<BigInt> {
        match self.peek().clone() {
            Tok::Number(n) if !n.contains('.') => {
                self.bump();
                Ok(n.parse().expect("digits"))
            }
            _ => Err(self.error(&["unsigned integer"])),
        }
    }

    fn atom(&mut self) -> PResult<Expr> {
        const ATOM: [&str; 7] = ["number", "`i`", "`t`", "generator", "`exp`", "`(`", "`-`"];
        match self.peek().clone() {
            Tok::Number(n) => {
                self.bump();
                if n.contains('.') {
                    let q = parse_rational(&n).ok_or_else(|| self.error(&["decimal"]))?;
                    return Ok(Expr::Num(q));
                }
                let num: BigInt = n.parse().expect("digits");
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let at = self.pos;
                    let den = self.uint()?;
                    if den.is_zero() {
                        self.pos = at;
                        return Err(self.error(&["nonzero denominator"]));
                    }
                    return Ok(Expr::Num(Rational::new(num, den)));
                }
                Ok(Expr::Num(Rational::from_integer(num)))
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "i" => Ok(Expr::I),
                    "t" => Ok(Expr::T),
                    "exp" => {
                        self.expect(Tok::LParen, "`(`")?;
                        let arg = self.expr()?;
                        self.expect(Tok::RParen, "`)`")?;
                        Ok(Expr::Exp(Box::new(arg)))
                    }
                    _ => Ok(Expr::Gen(name)),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.atom()?)))
            }
            _ => Err(self.error(&ATOM)),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(text),
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["`+`", "`-`", "`*`", "`^`", "end of input"]));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational};

    #[test]
    fn parses_term_with_exponential() {
        let e = parse("3*t^2*exp((1+2*i)*t)").unwrap();
        let expect = Expr::Product(vec![
            Expr::Num(int(3)),
            Expr::Pow(Box::new(Expr::T), 2),
            Expr::Exp(Box::new(Expr::Product(vec![
                Expr::Sum(vec![
                    (false, Expr::Num(int(1))),
                    (false, Expr::Product(vec![Expr::Num(int(2)), Expr::I])),
                ]),
                Expr::T,
            ]))),
        ]);
        assert_eq!(e, expect);
    }

    #[test]
    fn parses_generators_and_rationals() {
        let e = parse("exp(i*w1*t) + exp(i*w2*t) - 1").unwrap();
        match e {
            Expr::Sum(items) => {
                assert_eq!(items.len(), 3);
                assert!(items[2].0);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(parse(" 3 / 6 ").unwrap(), Expr::Num(rational(1, 2)));
        assert_eq!(parse("0.25").unwrap(), Expr::Num(rational(1, 4)));
        assert_eq!(
            parse("-1/2").unwrap(),
            Expr::Neg(Box::new(Expr::Num(rational(1, 2))))
        );
    }

    #[test]
    fn unary_minus_binds_to_atom() {
        // `-t^2` is `(-t)^2` under the grammar
        assert_eq!(
            parse("-t^2").unwrap(),
            Expr::Pow(Box::new(Expr::Neg(Box::new(Expr::T))), 2)
        );
    }

    #[test]
    fn non_linear_exponent_still_parses() {
        assert!(parse("exp(t^2)").is_ok());
        assert!(parse("exp(exp(t))").is_ok());
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        let err = parse("1 + * t").unwrap_err();
        assert_eq!((err.line, err.column), (1, 5));
        assert!(err.expected.iter().any(|e| e == "`exp`"));
        assert_eq!(err.found, "`*`");

        let err = parse("exp t").unwrap_err();
        assert_eq!(err.expected, vec!["`(`".to_string()]);

        let err = parse("1 +\n  (t").unwrap_err();
        assert_eq!((err.line, err.column), (2, 5));
        assert_eq!(err.found, "end of input");

        let err = parse("2t").unwrap_err();
        assert_eq!(err.column, 2);

        assert!(parse("t^1.5").is_err());
        assert!(parse("t^-1").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("").is_err());
        assert!(parse("t $ 1").is_err());
    }
}
