use num_traits::ToPrimitive;

use super::ast::{Expr, ExprKind};
use super::lexer::{lex, Span, Tok, Token};
use crate::error::{Error, Result};

pub struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

/// Parse a complete expression.
pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(e)
}

impl Parser {
    pub fn new(src: &str) -> Result<Parser> {
        Ok(Parser {
            toks: lex(src)?,
            pos: 0,
        })
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub fn span(&self) -> Span {
        self.toks[self.pos].span
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        let s = self.span();
        Error::Syntax {
            line: s.line,
            column: s.column,
            msg: msg.into(),
        }
    }

    pub fn expect(&mut self, t: Tok) -> Result<Span> {
        if *self.peek() == t {
            Ok(self.bump().span)
        } else {
            Err(self.error(format!(
                "expected {}, found {}",
                t.describe(),
                self.peek().describe()
            )))
        }
    }

    pub fn expect_eof(&mut self) -> Result<()> {
        self.expect(Tok::Eof).map(|_| ())
    }

    pub fn ident(&mut self) -> Result<(String, Span)> {
        match self.peek().clone() {
            Tok::Ident(s) => Ok((s, self.bump().span)),
            t => Err(self.error(format!("expected identifier, found {}", t.describe()))),
        }
    }

    pub fn signed_int(&mut self) -> Result<i64> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Tok::Int(n) => {
                let v = n.to_i64().ok_or_else(|| self.error("integer too large"))?;
                self.bump();
                Ok(if neg { -v } else { v })
            }
            t => Err(self.error(format!("expected integer, found {}", t.describe()))),
        }
    }

    pub fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let span = self.span();
            let kind = match self.peek() {
                Tok::Plus => ExprKind::Add as fn(Box<Expr>, Box<Expr>) -> ExprKind,
                Tok::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::new(kind(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let span = self.span();
            let kind = match self.peek() {
                Tok::Star => ExprKind::Mul as fn(Box<Expr>, Box<Expr>) -> ExprKind,
                Tok::Slash => ExprKind::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::new(kind(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            let span = self.bump().span;
            let e = self.unary()?;
            return Ok(Expr::new(ExprKind::Neg(Box::new(e)), span));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.postfix()?;
        if *self.peek() == Tok::Caret {
            let span = self.bump().span;
            let e = self.signed_int()?;
            return Ok(Expr::new(ExprKind::Pow(Box::new(base), e), span));
        }
        Ok(base)
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.primary()?;
        while *self.peek() == Tok::Prime {
            let span = self.bump().span;
            e = Expr::new(ExprKind::Conj(Box::new(e)), span);
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::new(ExprKind::Int(n), span))
            }
            Tok::Ident(name) => {
                self.bump();
                if *self.peek() != Tok::LParen {
                    return Ok(Expr::new(ExprKind::Ident(name), span));
                }
                self.bump();
                let mut args = Vec::new();
                if *self.peek() != Tok::RParen {
                    loop {
                        args.push(self.expr()?);
                        if *self.peek() == Tok::Comma {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                }
                self.expect(Tok::RParen)?;
                Ok(Expr::new(ExprKind::Call(name, args), span))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::LBracket => {
                self.bump();
                let mut v = Vec::new();
                if *self.peek() != Tok::RBracket {
                    loop {
                        v.push(self.signed_int()?);
                        if *self.peek() == Tok::Comma {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                }
                self.expect(Tok::RBracket)?;
                Ok(Expr::new(ExprKind::Vector(v), span))
            }
            t => Err(self.error(format!("expected an expression, found {}", t.describe()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_round_trip() {
        for src in [
            "a1*a2+a1*conj(a2)-tr(a2)*a1",
            "CubicEl(a2, 2, 1)",
            "-a1^2*t1'",
            "a1 - (a2 - a3)",
            "(-t1)^-1",
            "LieRootHom([-2,0,0,0], 1) * x",
            "1/2*t1 - --t2",
        ] {
            let e = parse(src).unwrap();
            let again = parse(&e.to_string()).unwrap();
            assert_eq!(e, again, "{src} -> {e}");
        }
    }

    #[test]
    fn unclosed_call_reports_column() {
        match parse("tr(") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trailing_garbage_rejected() {
        assert!(parse("a1 a2").is_err());
    }
}
