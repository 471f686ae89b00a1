//! Monomial ideals kept in canonical form: the minimal generators, sorted
//! lex-descending in the context's variable order.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{self, Monomial, VariableContext};

#[derive(Clone)]
pub struct MonomialIdeal {
    ctx: Arc<VariableContext>,
    gens: Vec<Monomial>,
}

/// Reduces raw exponent vectors to the minimal generating set, lex-descending.
pub(crate) fn minimalize(mut raw: Vec<Box<[u32]>>) -> Vec<Box<[u32]>> {
    raw.sort_unstable_by(|a, b| {
        ring::degree(a)
            .cmp(&ring::degree(b))
            .then_with(|| ring::lex_cmp(b, a))
    });
    raw.dedup();
    let mut kept: Vec<Box<[u32]>> = Vec::with_capacity(raw.len());
    // `lower` marks the end of the kept entries of strictly smaller degree;
    // distinct monomials of equal degree never divide each other.
    let mut lower = 0;
    let mut current_degree = None;
    for cand in raw {
        let d = ring::degree(&cand);
        if current_degree != Some(d) {
            current_degree = Some(d);
            lower = kept.len();
        }
        if !kept[..lower].iter().any(|g| ring::divides(g, &cand)) {
            kept.push(cand);
        }
    }
    kept.sort_unstable_by(|a, b| ring::lex_cmp(b, a));
    kept
}

impl MonomialIdeal {
    pub fn from_generators(ctx: &Arc<VariableContext>, raw: Vec<Monomial>) -> Result<Self> {
        if raw.iter().any(|m| !ring::same_ctx(ctx, m.context())) {
            return Err(Error::ContextMismatch);
        }
        let exps = raw.iter().map(|m| Box::from(m.exponents())).collect();
        Ok(Self::from_exps(ctx, exps))
    }

    pub(crate) fn from_exps(ctx: &Arc<VariableContext>, raw: Vec<Box<[u32]>>) -> Self {
        let gens = minimalize(raw)
            .into_iter()
            .map(|e| Monomial::from_raw(ctx, e))
            .collect();
        MonomialIdeal {
            ctx: Arc::clone(ctx),
            gens,
        }
    }

    /// Builds from exponent vectors, validating their lengths.
    pub fn from_exponents(ctx: &Arc<VariableContext>, raw: Vec<Vec<u32>>) -> Result<Self> {
        let mut exps = Vec::with_capacity(raw.len());
        for e in raw {
            if e.len() != ctx.total_vars() {
                return Err(Error::LengthMismatch {
                    expected: ctx.total_vars(),
                    found: e.len(),
                });
            }
            exps.push(e.into_boxed_slice());
        }
        Ok(Self::from_exps(ctx, exps))
    }

    pub fn zero(ctx: &Arc<VariableContext>) -> Self {
        MonomialIdeal {
            ctx: Arc::clone(ctx),
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: &Arc<VariableContext>) -> Self {
        MonomialIdeal {
            ctx: Arc::clone(ctx),
            gens: vec![ctx.unit()],
        }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            ctx: Arc::clone(m.context()),
            gens: vec![m],
        }
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub(crate) fn exps(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.gens.iter().map(|g| g.exponents())
    }

    fn check(&self, other_ctx: &Arc<VariableContext>) -> Result<()> {
        if ring::same_ctx(&self.ctx, other_ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn contains_monomial(&self, u: &Monomial) -> Result<bool> {
        self.check(u.context())?;
        Ok(self.contains_exps(u.exponents()))
    }

    pub(crate) fn contains_exps(&self, a: &[u32]) -> bool {
        self.exps().any(|g| ring::divides(g, a))
    }

    /// `self ⊆ other`, checked on generators.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        other.check(&self.ctx)?;
        Ok(self.exps().all(|g| other.contains_exps(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(&other.ctx)?;
        let raw = self.exps().chain(other.exps()).map(Box::from).collect();
        Ok(Self::from_exps(&self.ctx, raw))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(&other.ctx)?;
        let mut raw = Vec::with_capacity(self.len() * other.len());
        let mut seen = HashSet::new();
        for a in self.exps() {
            for b in other.exps() {
                let p = ring::mul_exps(a, b)?;
                if seen.insert(p.clone()) {
                    raw.push(p);
                }
            }
        }
        Ok(Self::from_exps(&self.ctx, raw))
    }

    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroPower(0));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn bracket_power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroPower(0));
        }
        let raw = self
            .gens
            .iter()
            .map(|g| g.pow(k).map(|m| Box::from(m.exponents())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_exps(&self.ctx, raw))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(&other.ctx)?;
        let mut raw = Vec::with_capacity(self.len() * other.len());
        for a in self.exps() {
            for b in other.exps() {
                raw.push(ring::lcm_exps(a, b));
            }
        }
        Ok(Self::from_exps(&self.ctx, raw))
    }

    pub fn colon_by_monomial(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check(u.context())?;
        let ue = u.exponents();
        let raw = self
            .exps()
            .map(|g| g.iter().zip(ue).map(|(a, b)| a.saturating_sub(*b)).collect())
            .collect();
        Ok(Self::from_exps(&self.ctx, raw))
    }

    /// Common total degree of the generators, if there is one.
    pub fn is_equigenerated(&self) -> Option<u64> {
        let d = self.gens.first()?.total_degree();
        self.gens.iter().all(|g| g.total_degree() == d).then_some(d)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.ctx.total_vars()];
        for g in self.exps() {
            for (a, b) in m.iter_mut().zip(g) {
                *a = (*a).max(*b);
            }
        }
        m
    }

    /// Histogram of generator degrees.
    pub fn degree_histogram(&self) -> std::collections::BTreeMap<u64, usize> {
        let mut h = std::collections::BTreeMap::new();
        for g in &self.gens {
            *h.entry(g.total_degree()).or_insert(0) += 1;
        }
        h
    }

    /// DSL form, `gens{x1^2*x2, x2^3}`.
    pub fn to_dsl(&self) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        format!("gens{{{}}}", parts.join(", "))
    }
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        ring::same_ctx(&self.ctx, &other.ctx) && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{self}")
    }
}

/// Text form `(x1^2*x2, x2^3)`; the zero ideal prints as `(0)`.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Arc<VariableContext> {
        VariableContext::new([("x", 1), ("y", 1)]).unwrap()
    }

    fn ideal(c: &Arc<VariableContext>, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(c, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn canonical_form() {
        let c = VariableContext::new([("x", 2)]).unwrap();
        // {x, x², xy} → {x}
        assert_eq!(ideal(&c, &[&[1, 0], &[2, 0], &[1, 1]]), ideal(&c, &[&[1, 0]]));
        assert!(ideal(&c, &[]).is_zero());
        let i = ideal(&c, &[&[2, 1], &[1, 2], &[2, 2]]);
        assert_eq!(i.to_string(), "(x1^2*x2, x1*x2^2)");
    }

    #[test]
    fn membership() {
        let c = ctx();
        let i = ideal(&c, &[&[2, 1], &[1, 2]]);
        assert!(i.contains_monomial(&c.monomial(vec![3, 1]).unwrap()).unwrap());
        assert!(!i.contains_monomial(&c.monomial(vec![1, 1]).unwrap()).unwrap());
        assert!(!MonomialIdeal::zero(&c).contains_monomial(&c.unit()).unwrap());
    }

    #[test]
    fn arithmetic() {
        let c = ctx();
        let x = ideal(&c, &[&[1, 0]]);
        let y = ideal(&c, &[&[0, 1]]);
        let m = x.sum(&y).unwrap();
        assert_eq!(m, ideal(&c, &[&[1, 0], &[0, 1]]));
        assert_eq!(m.power(2).unwrap(), ideal(&c, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(m.power(1).unwrap(), m);
        assert_eq!(m.power(0), Err(Error::ZeroPower(0)));
        assert_eq!(m.bracket_power(2).unwrap(), ideal(&c, &[&[2, 0], &[0, 2]]));
        assert_eq!(m.bracket_power(1).unwrap(), m);
        let p = ideal(&c, &[&[2, 1]]);
        assert_eq!(p.bracket_power(3).unwrap(), ideal(&c, &[&[6, 3]]));
    }

    #[test]
    fn zero_and_unit_propagate() {
        let c = ctx();
        let x = ideal(&c, &[&[1, 0]]);
        let zero = MonomialIdeal::zero(&c);
        let unit = MonomialIdeal::unit(&c);
        assert!(x.product(&zero).unwrap().is_zero());
        assert!(x.sum(&unit).unwrap().is_unit());
        assert_eq!(x.product(&unit).unwrap(), x);
        assert_eq!(x.sum(&zero).unwrap(), x);
    }

    #[test]
    fn product_of_variable_sets() {
        let c = VariableContext::new([("x", 2), ("y", 2)]).unwrap();
        let xs = ideal(&c, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let ys = ideal(&c, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let p = xs.product(&ys).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.to_string(), "(x1*y1, x1*y2, x2*y1, x2*y2)");
    }

    #[test]
    fn intersections() {
        let c = ctx();
        let x = ideal(&c, &[&[1, 0]]);
        let y = ideal(&c, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(&c, &[&[1, 1]]));
        let x2 = ideal(&c, &[&[2, 0]]);
        let x3 = ideal(&c, &[&[3, 0]]);
        assert_eq!(x2.intersect(&x3).unwrap(), x3);
        let a = ideal(&c, &[&[2, 0]]);
        let b = ideal(&c, &[&[0, 3]]);
        assert_eq!(a.intersect(&b).unwrap(), a.product(&b).unwrap());
    }

    #[test]
    fn colons() {
        let c = ctx();
        let i = ideal(&c, &[&[2, 1]]);
        let xy = c.monomial(vec![1, 1]).unwrap();
        assert_eq!(i.colon_by_monomial(&xy).unwrap(), ideal(&c, &[&[1, 0]]));
        let m = ideal(&c, &[&[1, 0], &[0, 1]]);
        assert!(m.colon_by_monomial(&c.variable(0)).unwrap().is_unit());
        let j = ideal(&c, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(
            j.colon_by_monomial(&c.variable(1)).unwrap(),
            ideal(&c, &[&[1, 0], &[0, 2]])
        );
    }

    #[test]
    fn predicates() {
        let c = ctx();
        assert_eq!(ideal(&c, &[&[1, 0], &[2, 0]]), ideal(&c, &[&[1, 0]]));
        assert_eq!(ideal(&c, &[&[2, 1], &[1, 2]]).is_equigenerated(), Some(3));
        assert_eq!(ideal(&c, &[&[1, 0], &[1, 1], &[0, 2]]).is_equigenerated(), None);
        assert!(ideal(&c, &[&[1, 1]]).is_squarefree());
        assert!(!ideal(&c, &[&[2, 0]]).is_squarefree());
    }

    #[test]
    fn context_mismatch() {
        let c = ctx();
        let d = VariableContext::new([("z", 2)]).unwrap();
        let a = ideal(&c, &[&[1, 0]]);
        let b = ideal(&d, &[&[1, 0]]);
        assert_eq!(a.sum(&b), Err(Error::ContextMismatch));
        assert!(a.product(&b).is_err());
        assert!(a.intersect(&b).is_err());
        assert!(MonomialIdeal::from_generators(&c, vec![d.variable(0)]).is_err());
    }
}
