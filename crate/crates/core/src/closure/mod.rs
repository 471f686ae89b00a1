//! Integral closure of monomial ideals.
//!
//! `x^a` is integral over `I` exactly when `a` lies in the Newton
//! polyhedron `conv(G(I)) + ℝ^n_{≥0}`. Minimal generators of the closure
//! lie in the box `[0, M]`, `M` the componentwise maximum of `G(I)`: if
//! `a` is in the polyhedron then so is `min(a, M)`, which divides `x^a`.
//! The box is swept in index order with a membership bitmap so that only
//! points with no integral predecessor reach the exact feasibility test.

mod feasibility;

use num_rational::BigRational;
use serde::Serialize;

pub use feasibility::{Lambda, RationalPoint};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;

pub const DEFAULT_BOX_BOUND: usize = 4_000_000;
pub const DEFAULT_NORMALITY_POWER: u32 = 3;

/// Certificate for a positive Newton-polyhedron answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonCertificate {
    pub lambda: Vec<(Monomial, BigRational)>,
    pub point: RationalPoint,
}

impl NewtonCertificate {
    fn from_lambda(ideal: &MonomialIdeal, lam: &Lambda) -> Self {
        let gens: Vec<&[u32]> = ideal.exps().collect();
        NewtonCertificate {
            lambda: lam
                .weights
                .iter()
                .map(|(k, w)| (ideal.gens()[*k].clone(), w.clone()))
                .collect(),
            point: lam.point(&gens, ideal.context().total_vars()),
        }
    }

    /// Re-checks `λ ≥ 0`, `Σλ = 1` and `Σ λ_g·g ≤ a` exactly.
    pub fn verify(&self, a: &[u32]) -> bool {
        let gens: Vec<&[u32]> = self.lambda.iter().map(|(g, _)| g.exponents()).collect();
        let lam = Lambda {
            weights: self
                .lambda
                .iter()
                .enumerate()
                .map(|(k, (_, w))| (k, w.clone()))
                .collect(),
        };
        lam.verify(&gens, a)
    }

    pub fn view(&self) -> CertificateView {
        CertificateView {
            lambda: self
                .lambda
                .iter()
                .map(|(g, w)| (g.to_string(), w.to_string()))
                .collect(),
            point: self.point.render(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateView {
    pub lambda: Vec<(String, String)>,
    pub point: Vec<String>,
}

/// Whether `a` lies in the Newton polyhedron of `I`, with weights when it does.
pub fn in_newton_polyhedron(a: &[u32], ideal: &MonomialIdeal) -> Result<Option<NewtonCertificate>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if a.len() != ideal.context().total_vars() {
        return Err(Error::LengthMismatch {
            expected: ideal.context().total_vars(),
            found: a.len(),
        });
    }
    let gens: Vec<&[u32]> = ideal.exps().collect();
    Ok(feasibility::solve(&gens, a).map(|lam| NewtonCertificate::from_lambda(ideal, &lam)))
}

/// Cheap necessary conditions: `Σ_{i∈S} a_i ≥ min_g Σ_{i∈S} g_i` for every
/// subset `S` of the variables (up to 12 variables; singletons and the full
/// set beyond that).
struct SubsetFilter {
    subsets: Vec<u64>,
    bounds: Vec<u64>,
}

impl SubsetFilter {
    fn new(ideal: &MonomialIdeal) -> Self {
        let n = ideal.context().total_vars();
        let subsets: Vec<u64> = if n <= 12 {
            (1..(1u64 << n)).collect()
        } else {
            let mut s: Vec<u64> = (0..n.min(64)).map(|i| 1u64 << i).collect();
            if n <= 64 {
                s.push(if n == 64 { u64::MAX } else { (1u64 << n) - 1 });
            }
            s
        };
        let bounds = subsets
            .iter()
            .map(|&s| {
                ideal
                    .exps()
                    .map(|g| masked_sum(g, s))
                    .min()
                    .unwrap_or(0)
            })
            .collect();
        SubsetFilter { subsets, bounds }
    }

    fn passes(&self, a: &[u32]) -> bool {
        self.subsets
            .iter()
            .zip(&self.bounds)
            .all(|(&s, &b)| masked_sum(a, s) >= b)
    }
}

fn masked_sum(a: &[u32], mask: u64) -> u64 {
    let mut rest = mask;
    let mut sum = 0u64;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        sum += a[i] as u64;
        rest &= rest - 1;
    }
    sum
}

struct BoxSweep {
    dims: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
}

impl BoxSweep {
    fn new(max: &[u32], bound: usize) -> Result<Self> {
        let dims: Vec<usize> = max.iter().map(|&m| m as usize + 1).collect();
        let mut strides = vec![0; dims.len()];
        let mut size: usize = 1;
        for i in (0..dims.len()).rev() {
            strides[i] = size;
            size = size.checked_mul(dims[i]).filter(|&s| s <= bound).ok_or(
                Error::ResourceBound {
                    what: "integral-closure box (lattice points)",
                    needed: usize::MAX.min(
                        dims.iter().try_fold(1usize, |a, &d| a.checked_mul(d)).unwrap_or(usize::MAX),
                    ),
                    bound,
                },
            )?;
        }
        Ok(BoxSweep {
            dims,
            strides,
            size,
        })
    }

    fn index(&self, a: &[u32]) -> usize {
        a.iter().zip(&self.strides).map(|(&x, &s)| x as usize * s).sum()
    }
}

enum SweepResult {
    /// Minimal generators of the closure.
    Closure(Vec<Box<[u32]>>),
    /// First point of `closure(I) \ I` found.
    Witness(Box<[u32]>, Lambda),
}

fn sweep(ideal: &MonomialIdeal, box_bound: usize, stop_at_first: bool) -> Result<SweepResult> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let max = ideal.max_exponents();
    let bx = BoxSweep::new(&max, box_bound)?;
    let n = max.len();
    let gens: Vec<&[u32]> = ideal.exps().collect();
    let filter = SubsetFilter::new(ideal);

    let mut in_ideal = vec![false; bx.size];
    for g in &gens {
        in_ideal[bx.index(g)] = true;
    }
    let mut in_closure = vec![false; bx.size];
    let mut minimal = Vec::new();
    let mut a = vec![0u32; n];
    for idx in 0..bx.size {
        let mut pred_ideal = false;
        let mut pred_closure = false;
        for i in 0..n {
            if a[i] > 0 {
                let p = idx - bx.strides[i];
                pred_ideal |= in_ideal[p];
                pred_closure |= in_closure[p];
            }
        }
        if pred_ideal {
            in_ideal[idx] = true;
        }
        if in_ideal[idx] || pred_closure {
            in_closure[idx] = true;
            if !pred_closure {
                minimal.push(Box::from(a.as_slice()));
            }
        } else if filter.passes(&a) {
            if let Some(lam) = feasibility::solve(&gens, &a) {
                if stop_at_first {
                    return Ok(SweepResult::Witness(Box::from(a.as_slice()), lam));
                }
                in_closure[idx] = true;
                minimal.push(Box::from(a.as_slice()));
            }
        }
        // advance the mixed-radix counter, last coordinate fastest
        for i in (0..n).rev() {
            a[i] += 1;
            if (a[i] as usize) < bx.dims[i] {
                break;
            }
            a[i] = 0;
        }
    }
    Ok(SweepResult::Closure(minimal))
}

pub fn integral_closure(ideal: &MonomialIdeal, box_bound: usize) -> Result<MonomialIdeal> {
    match sweep(ideal, box_bound, false)? {
        SweepResult::Closure(gens) => Ok(MonomialIdeal::from_exps(ideal.context(), gens)),
        SweepResult::Witness(..) => unreachable!(),
    }
}

/// A monomial of `closure(I) \ I` together with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureWitness {
    pub monomial: Monomial,
    pub certificate: NewtonCertificate,
}

/// `None` when `I` is integrally closed, else a witness.
pub fn closure_witness(ideal: &MonomialIdeal, box_bound: usize) -> Result<Option<ClosureWitness>> {
    match sweep(ideal, box_bound, true)? {
        SweepResult::Closure(_) => Ok(None),
        SweepResult::Witness(a, lam) => Ok(Some(ClosureWitness {
            monomial: ideal.context().monomial(a.into_vec())?,
            certificate: NewtonCertificate::from_lambda(ideal, &lam),
        })),
    }
}

pub fn is_integrally_closed(ideal: &MonomialIdeal, box_bound: usize) -> Result<bool> {
    Ok(closure_witness(ideal, box_bound)?.is_none())
}

/// Outcome of checking `I, I^2, …, I^k` for integral closedness. Passing
/// says nothing about powers above `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityReport {
    pub bound: u32,
    pub failure: Option<(u32, ClosureWitness)>,
}

impl NormalityReport {
    pub fn normal_up_to_bound(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn is_normal_up_to(ideal: &MonomialIdeal, k: u32, box_bound: usize) -> Result<NormalityReport> {
    if k == 0 {
        return Err(Error::ZeroPower(0));
    }
    let mut power = ideal.clone();
    for j in 1..=k {
        if j > 1 {
            power = power.product(ideal)?;
        }
        if let Some(w) = closure_witness(&power, box_bound)? {
            return Ok(NormalityReport {
                bound: k,
                failure: Some((j, w)),
            });
        }
    }
    Ok(NormalityReport {
        bound: k,
        failure: None,
    })
}
