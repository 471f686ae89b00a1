//! Generalized mixed product ideals.
//!
//! Given a base ideal `I` in single-variable blocks `x_1, …, x_n` and, for
//! each block `i` and exponent `d`, an ideal `L(i,d)` in a fresh block of
//! `m_i` variables, the construction replaces every pure power `x_i^d` in a
//! minimal generator of `I` by `L(i,d)`:
//!
//! ```text
//! L = Σ_j Π_i L(i, a_j(i))
//! ```
//!
//! The family must satisfy `L(i,d) ⊆ L(i,e)` whenever `d ≥ e`; [`build`]
//! refuses families that violate it.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructors;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{self, Monomial, VariableContext};

/// A monomial ideal whose context consists of single-variable blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseIdeal(MonomialIdeal);

impl BaseIdeal {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if let Some(b) = ideal.context().blocks().iter().find(|b| b.size != 1) {
            return Err(Error::InvalidContext(format!(
                "base ideal blocks must have size 1, `{}` has size {}",
                b.name, b.size
            )));
        }
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(BaseIdeal(ideal))
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.context().total_vars()
    }

    /// Distinct positive exponents occurring in column `i`, ascending.
    pub fn column_exponents(&self, i: usize) -> BTreeSet<u32> {
        self.0
            .gens()
            .iter()
            .map(|g| g.exponent(i))
            .filter(|&d| d > 0)
            .collect()
    }

    pub fn power(&self, k: u32) -> Result<BaseIdeal> {
        Ok(BaseIdeal(self.0.power(k)?))
    }
}

/// Target context with the base's block names and sizes `m_1, …, m_n`.
pub fn target_context(base: &BaseIdeal, sizes: &[usize]) -> Result<Arc<VariableContext>> {
    let blocks = base.0.context().blocks();
    if sizes.len() != blocks.len() {
        return Err(Error::InvalidFamily(format!(
            "{} block sizes given for a base ring with {} variables",
            sizes.len(),
            blocks.len()
        )));
    }
    VariableContext::new(blocks.iter().zip(sizes).map(|(b, &m)| (b.name.clone(), m)))
}

#[derive(Debug, Clone)]
pub struct SubstitutionFamily {
    target: Arc<VariableContext>,
    table: BTreeMap<(usize, u32), MonomialIdeal>,
}

impl SubstitutionFamily {
    pub fn new(target: Arc<VariableContext>) -> Self {
        SubstitutionFamily {
            target,
            table: BTreeMap::new(),
        }
    }

    pub fn target(&self) -> &Arc<VariableContext> {
        &self.target
    }

    /// Sets `L(block, exponent)`. The ideal must be nonzero and live in the
    /// variables of `block` only.
    pub fn insert(&mut self, block: usize, exponent: u32, ideal: MonomialIdeal) -> Result<()> {
        if !ring::same_ctx(&self.target, ideal.context()) {
            return Err(Error::ContextMismatch);
        }
        if block >= self.target.num_blocks() {
            return Err(Error::InvalidFamily(format!("block index {block} out of range")));
        }
        if exponent == 0 {
            return Err(Error::InvalidFamily(
                "exponent 0 always maps to the unit ideal".into(),
            ));
        }
        if ideal.is_zero() {
            return Err(Error::InvalidFamily(format!(
                "L({block},{exponent}) is the zero ideal"
            )));
        }
        let range = self.target.block_range(block);
        let foreign = ideal.gens().iter().any(|g| {
            g.exponents()
                .iter()
                .enumerate()
                .any(|(v, &e)| e > 0 && !range.contains(&v))
        });
        if foreign {
            return Err(Error::InvalidFamily(format!(
                "L({block},{exponent}) uses variables outside block `{}`",
                self.target.blocks()[block].name
            )));
        }
        self.table.insert((block, exponent), ideal);
        Ok(())
    }

    /// `L(block, d)`; `d = 0` is the unit ideal.
    pub fn get(&self, block: usize, d: u32) -> Option<MonomialIdeal> {
        if d == 0 {
            return Some(MonomialIdeal::unit(&self.target));
        }
        self.table.get(&(block, d)).cloned()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, u32), &MonomialIdeal)> {
        self.table.iter()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    SquarefreeVeronese,
    Veronese,
    PrincipalPower,
}

/// Fills a family with squarefree Veronese, Veronese or `(x_{i1}^d)` ideals
/// for every exponent occurring in the base.
pub fn builtin_family(
    kind: FamilyKind,
    base: &BaseIdeal,
    sizes: &[usize],
) -> Result<SubstitutionFamily> {
    let target = target_context(base, sizes)?;
    let mut fam = SubstitutionFamily::new(Arc::clone(&target));
    for i in 0..base.num_vars() {
        for d in base.column_exponents(i) {
            let ideal = match kind {
                FamilyKind::SquarefreeVeronese => {
                    if d as usize > sizes[i] {
                        return Err(Error::OutOfRange(format!(
                            "squarefree substitution of degree {d} into block `{}` of size {}",
                            target.blocks()[i].name,
                            sizes[i]
                        )));
                    }
                    constructors::squarefree_veronese_at(&target, i, d)
                }
                FamilyKind::Veronese => constructors::veronese_at(&target, i, d),
                FamilyKind::PrincipalPower => {
                    let first = target.block_range(i).start;
                    MonomialIdeal::principal(target.variable(first).pow(d)?)
                }
            };
            fam.insert(i, d, ideal)?;
        }
    }
    Ok(fam)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InclusionCheck {
    pub block: usize,
    pub larger: u32,
    pub smaller: u32,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquigenerationCheck {
    pub block: usize,
    pub exponent: u32,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub inclusions: Vec<InclusionCheck>,
    pub equigeneration: Vec<EquigenerationCheck>,
}

impl ValidationReport {
    pub fn inclusions_hold(&self) -> bool {
        self.inclusions.iter().all(|c| c.holds)
    }

    pub fn first_violation(&self) -> Option<&InclusionCheck> {
        self.inclusions.iter().find(|c| !c.holds)
    }

    /// Entries not generated in the degree of their exponent.
    pub fn warnings(&self) -> Vec<String> {
        self.equigeneration
            .iter()
            .filter(|c| !c.holds)
            .map(|c| {
                format!(
                    "L({},{}) is not generated in degree {}",
                    c.block, c.exponent, c.exponent
                )
            })
            .collect()
    }
}

fn check_complete(base: &BaseIdeal, fam: &SubstitutionFamily) -> Result<()> {
    if fam.target.num_blocks() != base.num_vars() {
        return Err(Error::InvalidFamily(format!(
            "family has {} blocks, base ring has {} variables",
            fam.target.num_blocks(),
            base.num_vars()
        )));
    }
    for i in 0..base.num_vars() {
        for d in base.column_exponents(i) {
            if !fam.table.contains_key(&(i, d)) {
                return Err(Error::IncompleteFamily {
                    block: i,
                    exponent: d,
                });
            }
        }
    }
    Ok(())
}

/// Checks `L(i,d) ⊆ L(i,e)` for every pair `d > e` of exponents occurring in
/// column `i` of the base, and optionally that `L(i,d)` is generated in
/// degree `d`.
pub fn validate_family(
    base: &BaseIdeal,
    fam: &SubstitutionFamily,
    check_equigeneration: bool,
) -> Result<ValidationReport> {
    check_complete(base, fam)?;
    let mut inclusions = Vec::new();
    let mut equigeneration = Vec::new();
    for i in 0..base.num_vars() {
        let exps: Vec<u32> = base.column_exponents(i).into_iter().collect();
        for (k, &d) in exps.iter().enumerate().rev() {
            for &e in exps[..k].iter().rev() {
                let holds = fam.table[&(i, d)].is_subset_of(&fam.table[&(i, e)])?;
                inclusions.push(InclusionCheck {
                    block: i,
                    larger: d,
                    smaller: e,
                    holds,
                });
            }
        }
        if check_equigeneration {
            for &d in &exps {
                let holds = fam.table[&(i, d)].is_equigenerated() == Some(d as u64);
                equigeneration.push(EquigenerationCheck {
                    block: i,
                    exponent: d,
                    holds,
                });
            }
        }
    }
    Ok(ValidationReport {
        inclusions,
        equigeneration,
    })
}

fn term(fam: &SubstitutionFamily, g: &Monomial) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(&fam.target);
    for (i, &d) in g.exponents().iter().enumerate() {
        if d == 0 {
            continue;
        }
        acc = acc.product(&fam.table[&(i, d)])?;
    }
    Ok(acc)
}

/// Builds `L(I; {L_ij})`, refusing families that break the inclusion
/// condition.
pub fn build(base: &BaseIdeal, fam: &SubstitutionFamily) -> Result<MonomialIdeal> {
    let report = validate_family(base, fam, false)?;
    if let Some(bad) = report.first_violation() {
        return Err(Error::InclusionViolated {
            block: bad.block,
            larger: bad.larger,
            smaller: bad.smaller,
        });
    }
    let terms = base
        .ideal()
        .gens()
        .par_iter()
        .map(|g| term(fam, g))
        .collect::<Result<Vec<_>>>()?;
    let raw = terms
        .iter()
        .flat_map(|t| t.gens().iter().map(|m| Box::from(m.exponents())))
        .collect();
    Ok(MonomialIdeal::from_exps(&fam.target, raw))
}
