//! Linear quotients: an ordering `g_1, …, g_q` of `G(I)` such that every
//! colon `(g_1, …, g_k) : g_{k+1}` is generated by variables.

use std::cmp::Ordering;

use serde::Serialize;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{self, Monomial};

pub const DEFAULT_EXHAUSTIVE_THRESHOLD: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotientCertificate {
    order: Vec<Monomial>,
    colon_vars: Vec<Vec<usize>>,
}

impl LinearQuotientCertificate {
    pub fn order(&self) -> &[Monomial] {
        &self.order
    }

    /// Variables generating `(g_1..g_k) : g_{k+1}` for `k = 1..q-1`.
    pub fn colon_vars(&self) -> &[Vec<usize>] {
        &self.colon_vars
    }

    pub fn r_values(&self) -> Vec<usize> {
        self.colon_vars.iter().map(Vec::len).collect()
    }

    /// `r(I)`, the largest colon; 0 for a principal ideal.
    pub fn r_value(&self) -> usize {
        self.colon_vars.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Projective dimension of `S/I`, which is `r(I) + 1`.
    pub fn pd_of_quotient(&self) -> usize {
        self.r_value() + 1
    }

    /// Graded Betti numbers of `I` when `I` is generated in one degree `d`:
    /// `β_{i,d+i} = Σ_k binom(r_k, i)`, the first generator contributing
    /// `binom(0, i)`.
    pub fn betti_table(&self) -> Result<BettiTable> {
        let d = self.order[0].total_degree();
        if self.order.iter().any(|g| g.total_degree() != d) {
            return Err(Error::NotEquigenerated);
        }
        let mut table = BettiTable::default();
        table.add(0, d, 1);
        for r in self.r_values() {
            for i in 0..=r {
                table.add(i, d + i as u64, binom(r as u64, i as u64));
            }
        }
        Ok(table)
    }

    pub fn view(&self) -> CertificateView {
        let ctx = self.order[0].context();
        CertificateView {
            order: self.order.iter().map(|g| g.to_string()).collect(),
            colon_vars: self
                .colon_vars
                .iter()
                .map(|vs| vs.iter().map(|&v| ctx.var_name(v)).collect())
                .collect(),
            r_values: self.r_values(),
            r: self.r_value(),
            pd: self.pd_of_quotient(),
        }
    }
}

/// Serializable form: ordered generators, per-step variables, `r_values`,
/// `r` and the projective dimension of the quotient.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateView {
    pub order: Vec<String>,
    pub colon_vars: Vec<Vec<String>>,
    pub r_values: Vec<usize>,
    pub r: usize,
    pub pd: usize,
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderCheck {
    Certificate(LinearQuotientCertificate),
    /// Step `k` (1-based: the colon of the first `k` generators by the next)
    /// is not generated by variables; `offending` lists its non-linear
    /// minimal generators.
    Failure { step: usize, offending: Vec<Monomial> },
}

/// Variables of `(prefix) : g` when that colon is linear.
fn linear_colon(prefix: &[&[u32]], g: &[u32]) -> Option<Vec<usize>> {
    let mut vars = Vec::new();
    for p in prefix {
        let mut single = None;
        let mut count = 0;
        for (j, (a, b)) in p.iter().zip(g).enumerate() {
            if a > b {
                count += a - b;
                single = Some(j);
                if count > 1 {
                    break;
                }
            }
        }
        if count == 1 {
            vars.push(single.unwrap());
        }
    }
    vars.sort_unstable();
    vars.dedup();
    let covered = prefix
        .iter()
        .all(|p| vars.iter().any(|&j| p[j] > g[j]));
    covered.then_some(vars)
}

fn is_permutation(ideal: &MonomialIdeal, order: &[Monomial]) -> bool {
    if order.len() != ideal.len() {
        return false;
    }
    let mut sorted: Vec<&Monomial> = order.iter().collect();
    sorted.sort_by(|a, b| ring::lex_cmp(b.exponents(), a.exponents()));
    sorted.into_iter().eq(ideal.gens().iter())
}

pub fn check_order(ideal: &MonomialIdeal, order: &[Monomial]) -> Result<OrderCheck> {
    if !is_permutation(ideal, order) {
        return Err(Error::NotAPermutation);
    }
    let exps: Vec<&[u32]> = order.iter().map(|g| g.exponents()).collect();
    let mut colon_vars = Vec::with_capacity(order.len().saturating_sub(1));
    for k in 1..order.len() {
        match linear_colon(&exps[..k], exps[k]) {
            Some(vars) => colon_vars.push(vars),
            None => {
                let prefix = MonomialIdeal::from_generators(ideal.context(), order[..k].to_vec())?;
                let colon = prefix.colon_by_monomial(&order[k])?;
                let offending = colon
                    .gens()
                    .iter()
                    .filter(|m| m.total_degree() != 1)
                    .cloned()
                    .collect();
                return Ok(OrderCheck::Failure { step: k, offending });
            }
        }
    }
    Ok(OrderCheck::Certificate(LinearQuotientCertificate {
        order: order.to_vec(),
        colon_vars,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Lex,
    Revlex,
    Exhaustive,
    Auto,
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lex" => Ok(Strategy::Lex),
            "revlex" => Ok(Strategy::Revlex),
            "exhaustive" => Ok(Strategy::Exhaustive),
            "auto" => Ok(Strategy::Auto),
            other => Err(format!("unknown strategy `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub certificate: Option<LinearQuotientCertificate>,
    /// Which ordering produced the certificate.
    pub found_by: Option<Strategy>,
    /// False when no certificate was found and the exhaustive search was
    /// skipped for size, so absence proves nothing.
    pub complete: bool,
}

/// Lex-descending: the canonical generator order.
pub fn lex_order(ideal: &MonomialIdeal) -> Vec<Monomial> {
    ideal.gens().to_vec()
}

/// Degree-ascending, then reverse-lex descending: among equal degrees the
/// monomial with the smaller exponent on the last differing variable comes
/// first.
pub fn revlex_order(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut gens = ideal.gens().to_vec();
    gens.sort_by(|a, b| {
        a.total_degree().cmp(&b.total_degree()).then_with(|| {
            for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    });
    gens
}

fn exhaustive(ideal: &MonomialIdeal) -> Option<LinearQuotientCertificate> {
    let gens = ideal.gens();
    let exps: Vec<&[u32]> = gens.iter().map(|g| g.exponents()).collect();
    let q = gens.len();
    let mut used = vec![false; q];
    let mut chosen: Vec<usize> = Vec::with_capacity(q);
    let mut vars: Vec<Vec<usize>> = Vec::with_capacity(q);

    fn dfs(
        exps: &[&[u32]],
        used: &mut [bool],
        chosen: &mut Vec<usize>,
        vars: &mut Vec<Vec<usize>>,
    ) -> bool {
        if chosen.len() == exps.len() {
            return true;
        }
        for c in 0..exps.len() {
            if used[c] {
                continue;
            }
            let step = if chosen.is_empty() {
                None
            } else {
                let prefix: Vec<&[u32]> = chosen.iter().map(|&k| exps[k]).collect();
                match linear_colon(&prefix, exps[c]) {
                    Some(v) => Some(v),
                    None => continue,
                }
            };
            used[c] = true;
            chosen.push(c);
            if let Some(v) = step {
                vars.push(v);
            }
            if dfs(exps, used, chosen, vars) {
                return true;
            }
            if chosen.len() > 1 {
                vars.pop();
            }
            chosen.pop();
            used[c] = false;
        }
        false
    }

    if dfs(&exps, &mut used, &mut chosen, &mut vars) {
        Some(LinearQuotientCertificate {
            order: chosen.iter().map(|&k| gens[k].clone()).collect(),
            colon_vars: vars,
        })
    } else {
        None
    }
}

fn try_order(ideal: &MonomialIdeal, order: Vec<Monomial>) -> Result<Option<LinearQuotientCertificate>> {
    Ok(match check_order(ideal, &order)? {
        OrderCheck::Certificate(c) => Some(c),
        OrderCheck::Failure { .. } => None,
    })
}

pub fn find_linear_quotients(
    ideal: &MonomialIdeal,
    strategy: Strategy,
    threshold: usize,
) -> Result<SearchOutcome> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let q = ideal.len();
    let found = |c: Option<LinearQuotientCertificate>, s: Strategy| SearchOutcome {
        found_by: c.as_ref().map(|_| s),
        certificate: c,
        complete: true,
    };
    match strategy {
        Strategy::Lex => Ok(found(try_order(ideal, lex_order(ideal))?, Strategy::Lex)),
        Strategy::Revlex => Ok(found(try_order(ideal, revlex_order(ideal))?, Strategy::Revlex)),
        Strategy::Exhaustive => {
            if q > threshold {
                return Err(Error::ResourceBound {
                    what: "exhaustive linear-quotient search (generators)",
                    needed: q,
                    bound: threshold,
                });
            }
            Ok(found(exhaustive(ideal), Strategy::Exhaustive))
        }
        Strategy::Auto => {
            if let Some(c) = try_order(ideal, lex_order(ideal))? {
                return Ok(found(Some(c), Strategy::Lex));
            }
            if let Some(c) = try_order(ideal, revlex_order(ideal))? {
                return Ok(found(Some(c), Strategy::Revlex));
            }
            if q <= threshold {
                return Ok(found(exhaustive(ideal), Strategy::Exhaustive));
            }
            Ok(SearchOutcome {
                certificate: None,
                found_by: None,
                complete: false,
            })
        }
    }
}
