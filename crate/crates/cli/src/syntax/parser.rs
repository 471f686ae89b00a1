use std::fmt;

use super::lexer::{tokenize, Token, TokenKind};
use super::{Binding, BlockDecl, Command, Expr, ExprKind, Flag, FlagValue, MonomialLit, Pos, Program, VarPower};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
    /// What the parser would have accepted, empty for lexical errors.
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)?;
        if !self.expected.is_empty() {
            write!(f, "; expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

const IDEAL_START: &[&str] = &["sqV(", "V(", "staircase(", "pathideal(", "gens{", "(", "NAME"];

impl Parser {
    fn peek(&self) -> &TokenKind {
        &self.toks[self.at].kind
    }

    fn peek2(&self) -> &TokenKind {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].kind
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            message: format!("unexpected {}", self.peek()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn expect(&mut self, kind: TokenKind, label: &str) -> Result<Token, ParseError> {
        if *self.peek() == kind {
            Ok(self.bump())
        } else {
            self.fail(&[label])
        }
    }

    fn name(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            TokenKind::Name(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.fail(&["NAME"]),
        }
    }

    fn int(&mut self) -> Result<u32, ParseError> {
        match *self.peek() {
            TokenKind::Int(v) => {
                self.bump();
                Ok(v)
            }
            _ => self.fail(&["INT"]),
        }
    }

    fn program(&mut self) -> Result<Program, ParseError> {
        let ring = self.ring_decl()?;
        let mut bindings = Vec::new();
        while matches!(self.peek(), TokenKind::Name(_)) && *self.peek2() == TokenKind::Assign {
            let pos = self.pos();
            let name = self.name()?;
            self.bump();
            let expr = self.ideal()?;
            self.expect(TokenKind::Semi, "`;`")?;
            bindings.push(Binding { name, expr, pos });
        }
        let command = self.command()?;
        self.expect(TokenKind::Eof, "end of input")?;
        Ok(Program {
            ring,
            bindings,
            command,
        })
    }

    fn ring_decl(&mut self) -> Result<Vec<BlockDecl>, ParseError> {
        match self.peek() {
            TokenKind::Name(n) if n == "ring" => {
                self.bump();
            }
            _ => return self.fail(&["`ring`"]),
        }
        let mut ring = vec![self.block()?];
        loop {
            match self.peek() {
                TokenKind::Comma => {
                    self.bump();
                    ring.push(self.block()?);
                }
                TokenKind::Semi => {
                    self.bump();
                    return Ok(ring);
                }
                _ => return self.fail(&["`,`", "`;`"]),
            }
        }
    }

    fn block(&mut self) -> Result<BlockDecl, ParseError> {
        let pos = self.pos();
        let name = self.name()?;
        self.expect(TokenKind::LBracket, "`[`")?;
        let size = self.int()?;
        self.expect(TokenKind::RBracket, "`]`")?;
        Ok(BlockDecl { name, size, pos })
    }

    fn command(&mut self) -> Result<Command, ParseError> {
        let pos = self.pos();
        let name = match self.peek().clone() {
            TokenKind::Name(n) => {
                self.bump();
                n
            }
            _ => return self.fail(&["NAME", "command"]),
        };
        let mut args = Vec::new();
        while matches!(self.peek(), TokenKind::Name(_) | TokenKind::LParen) {
            args.push(self.ideal()?);
        }
        let mut flags = Vec::new();
        while let TokenKind::Flag(f) = self.peek().clone() {
            let fpos = self.pos();
            self.bump();
            let value = match self.peek().clone() {
                TokenKind::Name(v) => {
                    self.bump();
                    Some(FlagValue::Name(v))
                }
                TokenKind::Int(v) => {
                    self.bump();
                    Some(FlagValue::Int(v))
                }
                _ => None,
            };
            flags.push(Flag {
                name: f,
                value,
                pos: fpos,
            });
        }
        if *self.peek() != TokenKind::Semi {
            let mut exp: Vec<&str> = Vec::new();
            if flags.is_empty() {
                exp.extend_from_slice(IDEAL_START);
                if !args.is_empty() {
                    exp.extend_from_slice(&["`+`", "`*`", "`^`"]);
                }
            }
            exp.extend_from_slice(&["`--flag`", "`;`"]);
            return self.fail(&exp);
        }
        self.bump();
        Ok(Command {
            name,
            args,
            flags,
            pos,
        })
    }

    fn ideal(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        let mut items = vec![self.term()?];
        while *self.peek() == TokenKind::Plus {
            self.bump();
            items.push(self.term()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Expr {
                kind: ExprKind::Sum(items),
                pos,
            }
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        let mut items = vec![self.factor()?];
        while *self.peek() == TokenKind::Star {
            self.bump();
            items.push(self.factor()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Expr {
                kind: ExprKind::Product(items),
                pos,
            }
        })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        let base = self.atom()?;
        if *self.peek() != TokenKind::Caret {
            return Ok(base);
        }
        self.bump();
        let kind = match self.peek() {
            TokenKind::LBracket => {
                self.bump();
                let k = self.int()?;
                self.expect(TokenKind::RBracket, "`]`")?;
                ExprKind::BracketPower(Box::new(base), k)
            }
            TokenKind::Int(_) => ExprKind::Power(Box::new(base), self.int()?),
            _ => return self.fail(&["INT", "`[`"]),
        };
        Ok(Expr { kind, pos })
    }

    fn call_args(&mut self, with_block: bool) -> Result<(Option<String>, u32), ParseError> {
        self.expect(TokenKind::LParen, "`(`")?;
        let block = if with_block {
            let b = self.name()?;
            self.expect(TokenKind::Comma, "`,`")?;
            Some(b)
        } else {
            None
        };
        let v = self.int()?;
        self.expect(TokenKind::RParen, "`)`")?;
        Ok((block, v))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        let kind = match self.peek().clone() {
            TokenKind::LParen => {
                self.bump();
                let inner = self.ideal()?;
                if *self.peek() != TokenKind::RParen {
                    return self.fail(&["`+`", "`*`", "`^`", "`)`"]);
                }
                self.bump();
                return Ok(inner);
            }
            TokenKind::Name(n) => {
                let next = self.peek2().clone();
                self.bump();
                match (n.as_str(), next) {
                    ("sqV", TokenKind::LParen) => {
                        let (b, r) = self.call_args(true)?;
                        ExprKind::SqV(b.unwrap(), r)
                    }
                    ("V", TokenKind::LParen) => {
                        let (b, r) = self.call_args(true)?;
                        ExprKind::V(b.unwrap(), r)
                    }
                    ("staircase", TokenKind::LParen) => ExprKind::Staircase(self.call_args(false)?.1),
                    ("pathideal", TokenKind::LParen) => ExprKind::PathIdeal(self.call_args(false)?.1),
                    ("gens", TokenKind::LBrace) => {
                        self.bump();
                        ExprKind::Gens(self.monomial_list()?)
                    }
                    _ => ExprKind::Ref(n),
                }
            }
            _ => return self.fail(IDEAL_START),
        };
        Ok(Expr { kind, pos })
    }

    /// Monomials up to and including the closing brace. An empty list is
    /// accepted so that the zero ideal has a printable form.
    fn monomial_list(&mut self) -> Result<Vec<MonomialLit>, ParseError> {
        let mut out = Vec::new();
        if *self.peek() == TokenKind::RBrace {
            self.bump();
            return Ok(out);
        }
        loop {
            out.push(self.monomial()?);
            match self.peek() {
                TokenKind::Comma => {
                    self.bump();
                }
                TokenKind::RBrace => {
                    self.bump();
                    return Ok(out);
                }
                _ => return self.fail(&["`*`", "`^`", "`,`", "`}`"]),
            }
        }
    }

    /// Generators after the opening parenthesis of the text form, through
    /// the closing one.
    fn text_ideal_tail(&mut self) -> Result<Vec<MonomialLit>, ParseError> {
        let mut out = Vec::new();
        if *self.peek() == TokenKind::Int(0) {
            self.bump();
            self.expect(TokenKind::RParen, "`)`")?;
            return Ok(out);
        }
        loop {
            out.push(self.monomial()?);
            match self.peek() {
                TokenKind::Comma => {
                    self.bump();
                }
                TokenKind::RParen => {
                    self.bump();
                    return Ok(out);
                }
                _ => return self.fail(&["`*`", "`^`", "`,`", "`)`"]),
            }
        }
    }

    fn monomial(&mut self) -> Result<MonomialLit, ParseError> {
        let pos = self.pos();
        if *self.peek() == TokenKind::Int(1) {
            self.bump();
            return Ok(MonomialLit {
                factors: Vec::new(),
                pos,
            });
        }
        let mut factors = vec![self.var()?];
        while *self.peek() == TokenKind::Star {
            self.bump();
            factors.push(self.var()?);
        }
        Ok(MonomialLit { factors, pos })
    }

    fn var(&mut self) -> Result<VarPower, ParseError> {
        let pos = self.pos();
        let (block, index) = match self.peek().clone() {
            TokenKind::Var(b, i) => {
                self.bump();
                (b, i)
            }
            _ => return self.fail(&["variable", "`1`"]),
        };
        let exponent = if *self.peek() == TokenKind::Caret {
            self.bump();
            self.int()?
        } else {
            1
        };
        Ok(VarPower {
            block,
            index,
            exponent,
            pos,
        })
    }
}

pub fn parse_program(src: &str) -> Result<Program, ParseError> {
    let toks = tokenize(src)?;
    Parser { toks, at: 0 }.program()
}

/// Parses the plain ideal text form `(x1^2*x2, x2^3)`, or `(0)`, into its
/// generator literals.
pub fn parse_ideal_text(src: &str) -> Result<Vec<MonomialLit>, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, at: 0 };
    p.expect(TokenKind::LParen, "`(`")?;
    let gens = p.text_ideal_tail()?;
    p.expect(TokenKind::Eof, "end of input")?;
    Ok(gens)
}

/// Right-hand side of a base-ideal file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSource {
    Expr(Expr),
    Text(Vec<MonomialLit>),
}

/// `ring_decl (ideal | text-ideal) ";"?`, as used by base-ideal files.
pub fn parse_base(src: &str) -> Result<(Vec<BlockDecl>, BaseSource), ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, at: 0 };
    let ring = p.ring_decl()?;
    let text_form = *p.peek() == TokenKind::LParen
        && matches!(p.peek2(), TokenKind::Var(..) | TokenKind::Int(_));
    let body = if text_form {
        p.bump();
        let gens = p.text_ideal_tail()?;
        BaseSource::Text(gens)
    } else {
        BaseSource::Expr(p.ideal()?)
    };
    if *p.peek() == TokenKind::Semi {
        p.bump();
    }
    p.expect(TokenKind::Eof, "end of input")?;
    Ok((ring, body))
}

/// A lone ideal expression, e.g. the right-hand side of a family entry.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, at: 0 };
    let e = p.ideal()?;
    if *p.peek() != TokenKind::Eof {
        return p.fail(&["`+`", "`*`", "`^`", "end of input"]);
    }
    Ok(e)
}
