use std::fmt;

use super::parser::ParseError;
use super::Pos;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    /// Letters, underscores and inner hyphens.
    Name(String),
    /// A name immediately followed by digits, e.g. `x12`.
    Var(String, u32),
    Int(u32),
    /// `--name`
    Flag(String),
    Comma,
    Semi,
    Assign,
    Plus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Name(n) => write!(f, "name `{n}`"),
            TokenKind::Var(n, i) => write!(f, "variable `{n}{i}`"),
            TokenKind::Int(v) => write!(f, "integer `{v}`"),
            TokenKind::Flag(n) => write!(f, "flag `--{n}`"),
            TokenKind::Comma => f.write_str("`,`"),
            TokenKind::Semi => f.write_str("`;`"),
            TokenKind::Assign => f.write_str("`:=`"),
            TokenKind::Plus => f.write_str("`+`"),
            TokenKind::Star => f.write_str("`*`"),
            TokenKind::Caret => f.write_str("`^`"),
            TokenKind::LParen => f.write_str("`(`"),
            TokenKind::RParen => f.write_str("`)`"),
            TokenKind::LBracket => f.write_str("`[`"),
            TokenKind::RBracket => f.write_str("`]`"),
            TokenKind::LBrace => f.write_str("`{`"),
            TokenKind::RBrace => f.write_str("`}`"),
            TokenKind::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut k, mut line, mut col) = (0usize, 1usize, 1usize);
    let lex_error = |pos: Pos, msg: String| ParseError {
        pos,
        message: msg,
        expected: Vec::new(),
    };

    while k < chars.len() {
        let c = chars[k];
        let pos = Pos { line, column: col };
        if c == '\n' {
            k += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            k += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while k < chars.len() && chars[k] != '\n' {
                k += 1;
            }
            continue;
        }
        let start = k;
        let kind = if is_name_start(c) {
            while k < chars.len()
                && (is_name_start(chars[k])
                    || (chars[k] == '-' && chars.get(k + 1).is_some_and(|&n| is_name_start(n))))
            {
                k += 1;
            }
            let name: String = chars[start..k].iter().collect();
            let digits = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            if k > digits {
                let text: String = chars[digits..k].iter().collect();
                let index = text
                    .parse()
                    .map_err(|_| lex_error(pos, format!("index `{text}` is too large")))?;
                TokenKind::Var(name, index)
            } else {
                TokenKind::Name(name)
            }
        } else if c.is_ascii_digit() {
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let text: String = chars[start..k].iter().collect();
            TokenKind::Int(
                text.parse()
                    .map_err(|_| lex_error(pos, format!("integer `{text}` is too large")))?,
            )
        } else {
            k += 1;
            match c {
                ',' => TokenKind::Comma,
                ';' => TokenKind::Semi,
                '+' => TokenKind::Plus,
                '*' => TokenKind::Star,
                '^' => TokenKind::Caret,
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                '[' => TokenKind::LBracket,
                ']' => TokenKind::RBracket,
                '{' => TokenKind::LBrace,
                '}' => TokenKind::RBrace,
                ':' if chars.get(k) == Some(&'=') => {
                    k += 1;
                    TokenKind::Assign
                }
                '-' if chars.get(k) == Some(&'-') && chars.get(k + 1).is_some_and(|&n| is_name_start(n)) => {
                    k += 1;
                    let s = k;
                    while k < chars.len()
                        && (is_name_start(chars[k])
                            || (chars[k] == '-' && chars.get(k + 1).is_some_and(|&n| is_name_start(n))))
                    {
                        k += 1;
                    }
                    TokenKind::Flag(chars[s..k].iter().collect())
                }
                other => return Err(lex_error(pos, format!("unexpected character `{other}`"))),
            }
        };
        col += k - start;
        out.push(Token { kind, pos });
    }
    out.push(Token {
        kind: TokenKind::Eof,
        pos: Pos { line, column: col },
    });
    Ok(out)
}
