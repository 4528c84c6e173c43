use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Prime,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Eq,
    Colon,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::Eof => "end of input".into(),
            t => format!("'{}'", t.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::Prime => "'",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Eq => "=",
            Tok::Colon => ":",
            _ => "",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

/// Tokenize; `#` starts a comment running to the end of the line.
pub fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut column) = (1usize, 1usize);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let span = Span { line, column };
        if c == '\n' {
            line += 1;
            column = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            k += 1;
            continue;
        }
        if c == '#' {
            while k < chars.len() && chars[k] != '\n' {
                k += 1;
            }
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let text: String = chars[start..k].iter().collect();
            column += k - start;
            let n: BigInt = text.parse().expect("digits parse");
            out.push(Token {
                tok: Tok::Int(n),
                span,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            column += k - start;
            out.push(Token {
                tok: Tok::Ident(chars[start..k].iter().collect()),
                span,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '\'' => Tok::Prime,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '=' => Tok::Eq,
            ':' => Tok::Colon,
            other => {
                return Err(Error::Syntax {
                    line,
                    column,
                    msg: format!("unexpected character '{other}'"),
                });
            }
        };
        out.push(Token { tok, span });
        column += 1;
        k += 1;
    }
    out.push(Token {
        tok: Tok::Eof,
        span: Span { line, column },
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_one_based() {
        let toks = lex("tr(\n a1)").unwrap();
        assert_eq!(toks[0].span, Span { line: 1, column: 1 });
        assert_eq!(toks[1].span, Span { line: 1, column: 3 });
        assert_eq!(toks[2].span, Span { line: 2, column: 2 });
        assert_eq!(toks.last().unwrap().tok, Tok::Eof);
    }

    #[test]
    fn comments_are_skipped() {
        let toks = lex("x # a comment\n+ y").unwrap();
        assert_eq!(toks.len(), 4);
    }

    #[test]
    fn bad_character() {
        assert!(matches!(lex("a1 $"), Err(Error::Syntax { column: 4, .. })));
    }
}
