//! The ideal-expression language: syntax tree, lexer, parser and printer.
//!
//! ```text
//! program   := ring_decl binding* command ;
//! ring_decl := "ring" block ("," block)* ";" ;  block := NAME "[" INT "]" ;
//! binding   := NAME ":=" ideal ";" ;
//! ideal     := term ("+" term)* ;  term := factor ("*" factor)* ;
//! factor    := atom ("^" INT | "^[" INT "]")? ;
//! atom      := "sqV(" NAME "," INT ")" | "V(" NAME "," INT ")"
//!            | "staircase(" INT ")" | "pathideal(" INT ")"
//!            | "gens{" monomial ("," monomial)* "}" | "(" ideal ")" | NAME ;
//! monomial  := var ("*" var)* | "1" ;  var := NAME INT ("^" INT)? ;
//! command   := NAME ideal* ("--" NAME (NAME | INT)?)* ";" ;
//! ```

mod lexer;
mod parser;

use std::fmt;

pub use lexer::{Token, TokenKind};
pub use parser::{parse_base, parse_expr, parse_ideal_text, parse_program, BaseSource, ParseError};

/// Source position, 1-based. Positions never take part in equality so that
/// reparsed trees compare equal to the originals.
#[derive(Debug, Clone, Copy, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Pos {}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    pub ring: Vec<BlockDecl>,
    pub bindings: Vec<Binding>,
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecl {
    pub name: String,
    pub size: u32,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binding {
    pub name: String,
    pub expr: Expr,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Command {
    pub name: String,
    pub args: Vec<Expr>,
    pub flags: Vec<Flag>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub name: String,
    pub value: Option<FlagValue>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlagValue {
    Name(String),
    Int(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
    BracketPower(Box<Expr>, u32),
    SqV(String, u32),
    V(String, u32),
    Staircase(u32),
    PathIdeal(u32),
    Gens(Vec<MonomialLit>),
    Ref(String),
}

/// A literal monomial: `1` is the empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialLit {
    pub factors: Vec<VarPower>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarPower {
    pub block: String,
    pub index: u32,
    pub exponent: u32,
    pub pos: Pos,
}

impl Expr {
    pub fn new(kind: ExprKind) -> Self {
        Expr {
            kind,
            pos: Pos::default(),
        }
    }

    fn is_atom(&self) -> bool {
        !matches!(
            self.kind,
            ExprKind::Sum(_) | ExprKind::Product(_) | ExprKind::Power(..) | ExprKind::BracketPower(..)
        )
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ring ")?;
        for (k, b) in self.ring.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}[{}]", b.name, b.size)?;
        }
        f.write_str(";\n")?;
        for b in &self.bindings {
            writeln!(f, "{} := {};", b.name, b.expr)?;
        }
        writeln!(f, "{};", self.command)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        for fl in &self.flags {
            write!(f, " --{}", fl.name)?;
            match &fl.value {
                Some(FlagValue::Name(v)) => write!(f, " {v}")?,
                Some(FlagValue::Int(v)) => write!(f, " {v}")?,
                None => {}
            }
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Sum(items) => {
                for (k, e) in items.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    if matches!(e.kind, ExprKind::Sum(_)) {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
            ExprKind::Product(items) => {
                for (k, e) in items.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" * ")?;
                    }
                    if matches!(e.kind, ExprKind::Sum(_) | ExprKind::Product(_)) {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
            ExprKind::Power(base, k) | ExprKind::BracketPower(base, k) => {
                if base.is_atom() {
                    write!(f, "{base}")?;
                } else {
                    write!(f, "({base})")?;
                }
                if matches!(self.kind, ExprKind::Power(..)) {
                    write!(f, "^{k}")
                } else {
                    write!(f, "^[{k}]")
                }
            }
            ExprKind::SqV(b, r) => write!(f, "sqV({b}, {r})"),
            ExprKind::V(b, r) => write!(f, "V({b}, {r})"),
            ExprKind::Staircase(z) => write!(f, "staircase({z})"),
            ExprKind::PathIdeal(t) => write!(f, "pathideal({t})"),
            ExprKind::Gens(ms) => {
                f.write_str("gens{")?;
                for (k, m) in ms.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{m}")?;
                }
                f.write_str("}")
            }
            ExprKind::Ref(name) => f.write_str(name),
        }
    }
}

impl fmt::Display for MonomialLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, v) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}{}", v.block, v.index)?;
            if v.exponent != 1 {
                write!(f, "^{}", v.exponent)?;
            }
        }
        Ok(())
    }
}
