//! Variable contexts and monomials.
//!
//! A [`VariableContext`] is an ordered list of named blocks. Block `x` of
//! size 3 owns the variables `x1, x2, x3`; the global variable order is
//! block-major, index-minor, and it is the order every lex comparison uses.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    pub name: String,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    blocks: Vec<Block>,
    offsets: Vec<usize>,
    total: usize,
}

impl VariableContext {
    pub fn new<S: Into<String>>(blocks: impl IntoIterator<Item = (S, usize)>) -> Result<Arc<Self>> {
        let blocks: Vec<Block> = blocks
            .into_iter()
            .map(|(name, size)| Block {
                name: name.into(),
                size,
            })
            .collect();
        if blocks.is_empty() {
            return Err(Error::InvalidContext("at least one block is required".into()));
        }
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut total = 0;
        for (k, b) in blocks.iter().enumerate() {
            if b.size == 0 {
                return Err(Error::InvalidContext(format!("block `{}` has size 0", b.name)));
            }
            if b.name.is_empty() || !b.name.chars().all(|c| c.is_ascii_alphabetic() || c == '_') {
                return Err(Error::InvalidContext(format!(
                    "block name `{}` must be alphabetic",
                    b.name
                )));
            }
            if blocks[..k].iter().any(|o| o.name == b.name) {
                return Err(Error::InvalidContext(format!("duplicate block `{}`", b.name)));
            }
            offsets.push(total);
            total += b.size;
        }
        Ok(Arc::new(Self {
            blocks,
            offsets,
            total,
        }))
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn total_vars(&self) -> usize {
        self.total
    }

    pub fn block_index(&self, name: &str) -> Result<usize> {
        self.blocks
            .iter()
            .position(|b| b.name == name)
            .ok_or_else(|| Error::UnknownBlock(name.to_string()))
    }

    /// Global variable range occupied by block `b`.
    pub fn block_range(&self, b: usize) -> std::ops::Range<usize> {
        self.offsets[b]..self.offsets[b] + self.blocks[b].size
    }

    /// Global index of variable `name{index}` (1-based index).
    pub fn var_index(&self, block: &str, index: usize) -> Result<usize> {
        let b = self.block_index(block)?;
        if index == 0 || index > self.blocks[b].size {
            return Err(Error::UnknownVariable(format!("{block}{index}")));
        }
        Ok(self.offsets[b] + index - 1)
    }

    pub fn block_of(&self, var: usize) -> usize {
        match self.offsets.binary_search(&var) {
            Ok(b) => b,
            Err(b) => b - 1,
        }
    }

    pub fn var_name(&self, var: usize) -> String {
        let b = self.block_of(var);
        format!("{}{}", self.blocks[b].name, var - self.offsets[b] + 1)
    }

    pub fn unit(self: &Arc<Self>) -> Monomial {
        Monomial {
            ctx: Arc::clone(self),
            exps: vec![0; self.total].into_boxed_slice(),
        }
    }

    pub fn variable(self: &Arc<Self>, var: usize) -> Monomial {
        let mut exps = vec![0; self.total];
        exps[var] = 1;
        Monomial {
            ctx: Arc::clone(self),
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn monomial(self: &Arc<Self>, exps: Vec<u32>) -> Result<Monomial> {
        if exps.len() != self.total {
            return Err(Error::LengthMismatch {
                expected: self.total,
                found: exps.len(),
            });
        }
        Ok(Monomial {
            ctx: Arc::clone(self),
            exps: exps.into_boxed_slice(),
        })
    }

    /// Renders the declaration `ring x[3], y[2];`.
    pub fn declaration(&self) -> String {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{}[{}]", b.name, b.size))
            .collect();
        format!("ring {};", parts.join(", "))
    }
}

pub(crate) fn same_ctx(a: &Arc<VariableContext>, b: &Arc<VariableContext>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A monomial `x^a` as an exponent vector over a fixed context.
#[derive(Clone)]
pub struct Monomial {
    ctx: Arc<VariableContext>,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    fn check(&self, other: &Monomial) -> Result<()> {
        if same_ctx(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub(crate) fn from_raw(ctx: &Arc<VariableContext>, exps: Box<[u32]>) -> Self {
        debug_assert_eq!(exps.len(), ctx.total_vars());
        Monomial {
            ctx: Arc::clone(ctx),
            exps,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        let exps = mul_exps(&self.exps, &other.exps)?;
        Ok(Monomial::from_raw(&self.ctx, exps))
    }

    /// `self / other` when `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Result<Option<Monomial>> {
        self.check(other)?;
        if !divides(&other.exps, &self.exps) {
            return Ok(None);
        }
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        Ok(Some(Monomial::from_raw(&self.ctx, exps)))
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check(other)?;
        Ok(divides(&self.exps, &other.exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(Monomial::from_raw(&self.ctx, lcm_exps(&self.exps, &other.exps)))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect();
        Ok(Monomial::from_raw(&self.ctx, exps))
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|e| e.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Box<[u32]>>>()?;
        Ok(Monomial::from_raw(&self.ctx, exps))
    }

    pub fn total_degree(&self) -> u64 {
        degree(&self.exps)
    }

    pub fn block_degree(&self, block: usize) -> u64 {
        self.exps[self.ctx.block_range(block)].iter().map(|&e| e as u64).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn lex_compare(&self, other: &Monomial) -> Result<Ordering> {
        self.check(other)?;
        Ok(lex_cmp(&self.exps, &other.exps))
    }

    /// Support as a list of global variable indices.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl std::hash::Hash for Monomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (var, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.ctx.var_name(var))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

// Raw exponent-vector helpers shared by the engines.

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

pub(crate) fn mul_exps(a: &[u32], b: &[u32]) -> Result<Box<[u32]>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(Error::ExponentOverflow))
        .collect()
}

pub(crate) fn lcm_exps(a: &[u32], b: &[u32]) -> Box<[u32]> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Lex order: the first differing exponent decides, larger is greater.
pub(crate) fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}
