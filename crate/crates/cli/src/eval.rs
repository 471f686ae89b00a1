//! Turns syntax trees into ideals over the declared ring.

use std::collections::HashMap;
use std::sync::Arc;

use mixprod::constructors::{path_ideal_bipartite, squarefree_veronese, staircase, veronese};
use mixprod::{MonomialIdeal, VariableContext};

use crate::error::CliError;
use crate::syntax::{parse_ideal_text, BlockDecl, Expr, ExprKind, MonomialLit, Pos, Program};

pub struct Env {
    ctx: Arc<VariableContext>,
    bindings: HashMap<String, MonomialIdeal>,
}

pub fn context_of(ring: &[BlockDecl]) -> Result<Arc<VariableContext>, CliError> {
    for (k, b) in ring.iter().enumerate() {
        if !b.name.chars().all(|c| c.is_ascii_alphabetic() || c == '_') {
            return Err(CliError::semantic(b.pos, format!("block name `{}` must be alphabetic", b.name)));
        }
        if b.size == 0 {
            return Err(CliError::semantic(b.pos, format!("block `{}` has size 0", b.name)));
        }
        if ring[..k].iter().any(|o| o.name == b.name) {
            return Err(CliError::semantic(b.pos, format!("block `{}` declared twice", b.name)));
        }
    }
    Ok(VariableContext::new(ring.iter().map(|b| (b.name.clone(), b.size as usize)))?)
}

impl Env {
    pub fn new(ctx: Arc<VariableContext>) -> Self {
        Env {
            ctx,
            bindings: HashMap::new(),
        }
    }

    /// Evaluates every binding in order; later bindings see earlier ones only.
    pub fn from_program(p: &Program) -> Result<Self, CliError> {
        let mut env = Env::new(context_of(&p.ring)?);
        for b in &p.bindings {
            if env.bindings.contains_key(&b.name) {
                return Err(CliError::semantic(b.pos, format!("`{}` is already bound", b.name)));
            }
            let value = env.eval(&b.expr)?;
            env.bindings.insert(b.name.clone(), value);
        }
        Ok(env)
    }

    pub fn bind(&mut self, name: &str, ideal: MonomialIdeal) {
        self.bindings.insert(name.to_string(), ideal);
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    fn at<T>(pos: Pos, r: mixprod::Result<T>) -> Result<T, CliError> {
        r.map_err(|e| match e {
            mixprod::Error::ResourceBound { .. } => CliError::Engine(e),
            other => CliError::semantic(pos, other.to_string()),
        })
    }

    pub fn eval(&self, e: &Expr) -> Result<MonomialIdeal, CliError> {
        let pos = e.pos;
        match &e.kind {
            ExprKind::Sum(items) => {
                let mut acc = self.eval(&items[0])?;
                for it in &items[1..] {
                    acc = Self::at(pos, acc.sum(&self.eval(it)?))?;
                }
                Ok(acc)
            }
            ExprKind::Product(items) => {
                let mut acc = self.eval(&items[0])?;
                for it in &items[1..] {
                    acc = Self::at(pos, acc.product(&self.eval(it)?))?;
                }
                Ok(acc)
            }
            ExprKind::Power(base, k) => Self::at(pos, self.eval(base)?.power(*k)),
            ExprKind::BracketPower(base, k) => Self::at(pos, self.eval(base)?.bracket_power(*k)),
            ExprKind::SqV(b, r) => Self::at(pos, squarefree_veronese(&self.ctx, b, *r)),
            ExprKind::V(b, r) => Self::at(pos, veronese(&self.ctx, b, *r)),
            ExprKind::Staircase(z) => Self::at(pos, staircase(&self.ctx, *z, true)),
            ExprKind::PathIdeal(t) => Self::at(pos, path_ideal_bipartite(&self.ctx, *t)),
            ExprKind::Gens(ms) => self.literal_ideal(ms),
            ExprKind::Ref(name) => self
                .bindings
                .get(name)
                .cloned()
                .ok_or_else(|| CliError::semantic(pos, format!("`{name}` is not bound"))),
        }
    }

    pub fn literal_ideal(&self, ms: &[MonomialLit]) -> Result<MonomialIdeal, CliError> {
        let n = self.ctx.total_vars();
        let mut gens = Vec::with_capacity(ms.len());
        for m in ms {
            let mut exps = vec![0u32; n];
            for v in &m.factors {
                let var = Self::at(v.pos, self.ctx.var_index(&v.block, v.index as usize))?;
                exps[var] = exps[var]
                    .checked_add(v.exponent)
                    .ok_or_else(|| CliError::semantic(v.pos, "exponent overflow"))?;
            }
            gens.push(exps);
        }
        Ok(MonomialIdeal::from_exponents(&self.ctx, gens)?)
    }

    /// Reads the text form `(x1^2*x2, x2^3)` in this ring.
    pub fn parse_text(&self, src: &str) -> Result<MonomialIdeal, CliError> {
        self.literal_ideal(&parse_ideal_text(src)?)
    }
}
