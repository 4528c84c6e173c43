use std::fmt;

use num_bigint::BigInt;

use super::lexer::Span;

#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Conj(Box<Expr>),
    Call(String, Vec<Expr>),
    Vector(Vec<i64>),
}

/// Structural equality; source positions are ignored.
impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Expr {}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Expr {
        Expr { kind, span }
    }

    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Add(..) | ExprKind::Sub(..) => 1,
            ExprKind::Mul(..) | ExprKind::Div(..) => 2,
            ExprKind::Neg(..) => 3,
            ExprKind::Pow(..) => 4,
            ExprKind::Conj(..) => 5,
            _ => 6,
        }
    }

    fn child(&self, e: &Expr, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if e.precedence() < min {
            write!(f, "({e})")
        } else {
            write!(f, "{e}")
        }
    }

    fn binary(&self, l: &Expr, op: &str, r: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        self.child(l, p, f)?;
        write!(f, " {op} ")?;
        self.child(r, p + 1, f)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Int(n) => write!(f, "{n}"),
            ExprKind::Ident(s) => f.write_str(s),
            ExprKind::Neg(e) => {
                f.write_str("-")?;
                self.child(e, 3, f)
            }
            ExprKind::Add(l, r) => self.binary(l, "+", r, f),
            ExprKind::Sub(l, r) => self.binary(l, "-", r, f),
            ExprKind::Mul(l, r) => self.binary(l, "*", r, f),
            ExprKind::Div(l, r) => self.binary(l, "/", r, f),
            ExprKind::Pow(b, e) => {
                self.child(b, 5, f)?;
                write!(f, "^{e}")
            }
            ExprKind::Conj(e) => {
                self.child(e, 5, f)?;
                f.write_str("'")
            }
            ExprKind::Call(name, args) => {
                write!(f, "{name}(")?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            ExprKind::Vector(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}
