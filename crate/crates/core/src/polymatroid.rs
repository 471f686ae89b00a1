//! The exchange test for polymatroidal and matroidal ideals.
//!
//! An equigenerated ideal is polymatroidal when for all `u, v ∈ G(I)` and
//! every `i` with `deg_i(u) > deg_i(v)` there is a `j` with
//! `deg_j(u) < deg_j(v)` and `x_j·u/x_i ∈ I`.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `deg_i(u) > deg_i(v)` and no exchange index works.
    Exchange { u: Monomial, v: Monomial, i: usize },
    /// Two generators of different total degree.
    Degree { u: Monomial, v: Monomial },
    /// A generator that is not squarefree.
    NotSquarefree { u: Monomial },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeReport {
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl ExchangeReport {
    fn pass() -> Self {
        ExchangeReport {
            verdict: true,
            witness: None,
        }
    }

    fn fail(w: Witness) -> Self {
        ExchangeReport {
            verdict: false,
            witness: Some(w),
        }
    }
}

/// JSON-friendly rendering of a witness.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessView {
    pub kind: &'static str,
    pub u: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variable: Option<String>,
}

impl Witness {
    pub fn view(&self) -> WitnessView {
        match self {
            Witness::Exchange { u, v, i } => WitnessView {
                kind: "exchange",
                u: u.to_string(),
                v: Some(v.to_string()),
                variable: Some(u.context().var_name(*i)),
            },
            Witness::Degree { u, v } => WitnessView {
                kind: "degree",
                u: u.to_string(),
                v: Some(v.to_string()),
                variable: None,
            },
            Witness::NotSquarefree { u } => WitnessView {
                kind: "not_squarefree",
                u: u.to_string(),
                v: None,
                variable: None,
            },
        }
    }
}

pub fn is_polymatroidal(ideal: &MonomialIdeal) -> Result<ExchangeReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens = ideal.gens();
    let d0 = gens[0].total_degree();
    if let Some(v) = gens.iter().find(|g| g.total_degree() != d0) {
        return Ok(ExchangeReport::fail(Witness::Degree {
            u: gens[0].clone(),
            v: v.clone(),
        }));
    }
    // equigenerated: a degree-d monomial lies in I iff it is a generator
    let members: HashSet<&[u32]> = gens.iter().map(|g| g.exponents()).collect();
    let n = ideal.context().total_vars();

    let failure = gens.par_iter().enumerate().find_map_first(|(a, u)| {
        let ue = u.exponents();
        let mut probe = ue.to_vec();
        for (b, v) in gens.iter().enumerate() {
            if a == b {
                continue;
            }
            let ve = v.exponents();
            for i in 0..n {
                if ue[i] <= ve[i] {
                    continue;
                }
                probe[i] -= 1;
                let ok = (0..n).any(|j| {
                    if ue[j] >= ve[j] {
                        return false;
                    }
                    probe[j] += 1;
                    let hit = members.contains(probe.as_slice());
                    probe[j] -= 1;
                    hit
                });
                probe[i] += 1;
                if !ok {
                    return Some(Witness::Exchange {
                        u: u.clone(),
                        v: v.clone(),
                        i,
                    });
                }
            }
        }
        None
    });
    Ok(match failure {
        Some(w) => ExchangeReport::fail(w),
        None => ExchangeReport::pass(),
    })
}

/// Squarefree and polymatroidal.
pub fn is_matroidal(ideal: &MonomialIdeal) -> Result<ExchangeReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if let Some(u) = ideal.gens().iter().find(|g| !g.is_squarefree()) {
        return Ok(ExchangeReport::fail(Witness::NotSquarefree { u: u.clone() }));
    }
    is_polymatroidal(ideal)
}

/// Replays a witness against plain ideal membership. True when the witness
/// really shows the property fails.
pub fn witness_is_valid(ideal: &MonomialIdeal, w: &Witness) -> Result<bool> {
    let gens = ideal.gens();
    Ok(match w {
        Witness::Exchange { u, v, i } => {
            if !gens.contains(u) || !gens.contains(v) || u.exponent(*i) <= v.exponent(*i) {
                return Ok(false);
            }
            let ctx = ideal.context();
            let xi = ctx.variable(*i);
            let quotient = u.try_div(&xi)?.expect("deg_i(u) > 0");
            for j in 0..ctx.total_vars() {
                if u.exponent(j) < v.exponent(j)
                    && ideal.contains_monomial(&quotient.mul(&ctx.variable(j))?)?
                {
                    return Ok(false);
                }
            }
            true
        }
        Witness::Degree { u, v } => {
            gens.contains(u) && gens.contains(v) && u.total_degree() != v.total_degree()
        }
        Witness::NotSquarefree { u } => gens.contains(u) && !u.is_squarefree(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{mixed_sum, staircase, veronese};
    use crate::ring::VariableContext;

    #[test]
    fn veronese_is_polymatroidal() {
        let c = VariableContext::new([("x", 3)]).unwrap();
        for r in 1..=3 {
            assert!(is_polymatroidal(&veronese(&c, "x", r).unwrap()).unwrap().verdict);
        }
    }

    #[test]
    fn staircase_is_matroidal() {
        let c = VariableContext::new([("x", 3), ("y", 3)]).unwrap();
        let s = staircase(&c, 3, true).unwrap();
        assert!(is_matroidal(&s).unwrap().verdict);
    }

    #[test]
    fn disjoint_sum_fails_with_witness() {
        let c = VariableContext::new([("x", 2), ("y", 2)]).unwrap();
        let l = mixed_sum(&c, &[(2, 0), (0, 2)], true).unwrap();
        let rep = is_polymatroidal(&l).unwrap();
        assert!(!rep.verdict);
        let w = rep.witness.unwrap();
        assert!(matches!(w, Witness::Exchange { .. }));
        assert!(witness_is_valid(&l, &w).unwrap());
    }

    #[test]
    fn matroidal_requires_squarefree() {
        let c = VariableContext::new([("x", 2)]).unwrap();
        let sq = veronese(&c, "x", 2).unwrap();
        let rep = is_matroidal(&sq).unwrap();
        assert!(!rep.verdict);
        assert!(matches!(rep.witness, Some(Witness::NotSquarefree { .. })));
        assert!(is_polymatroidal(&sq).unwrap().verdict);
    }

    #[test]
    fn mixed_degrees_fail() {
        let c = VariableContext::new([("x", 2)]).unwrap();
        let i = MonomialIdeal::from_exponents(&c, vec![vec![1, 0], vec![0, 2]]).unwrap();
        let rep = is_polymatroidal(&i).unwrap();
        assert!(!rep.verdict);
        let w = rep.witness.unwrap();
        assert!(matches!(w, Witness::Degree { .. }));
        assert!(witness_is_valid(&i, &w).unwrap());
    }

    #[test]
    fn zero_ideal_rejected() {
        let c = VariableContext::new([("x", 2)]).unwrap();
        assert_eq!(is_polymatroidal(&MonomialIdeal::zero(&c)), Err(Error::ZeroIdeal));
        assert_eq!(is_matroidal(&MonomialIdeal::zero(&c)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn maximal_ideal_is_matroidal() {
        let c = VariableContext::new([("x", 3), ("y", 2)]).unwrap();
        let m = mixed_sum(&c, &[(1, 0), (0, 1)], true).unwrap();
        assert!(is_matroidal(&m).unwrap().verdict);
    }
}
