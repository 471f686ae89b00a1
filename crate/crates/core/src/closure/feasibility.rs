//! Exact membership in the Newton polyhedron `conv(G(I)) + ℝ^n_{≥0}`.
//!
//! Decides whether some `λ ≥ 0` with `Σ λ_g = 1` satisfies `Σ λ_g·g ≤ a`
//! by a phase-one simplex over `BigRational` with Bland's rule, which
//! terminates and is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational vector, one entry per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint(pub Vec<BigRational>);

impl RationalPoint {
    pub fn render(&self) -> Vec<String> {
        self.0.iter().map(|q| q.to_string()).collect()
    }
}

/// Convex weights on generators (by index into `G(I)`) whose combination
/// lies below the target exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lambda {
    pub weights: Vec<(usize, BigRational)>,
}

impl Lambda {
    pub fn point(&self, gens: &[&[u32]], n: usize) -> RationalPoint {
        let mut p = vec![BigRational::zero(); n];
        for (g, w) in &self.weights {
            for (v, &e) in gens[*g].iter().enumerate() {
                if e > 0 {
                    p[v] += w * BigRational::from_integer(BigInt::from(e));
                }
            }
        }
        RationalPoint(p)
    }

    /// `λ ≥ 0`, `Σ λ = 1` and `Σ λ_g g ≤ a`, all checked exactly.
    pub fn verify(&self, gens: &[&[u32]], a: &[u32]) -> bool {
        let sum: BigRational = self.weights.iter().map(|(_, w)| w.clone()).sum();
        if !sum.is_one() || self.weights.iter().any(|(_, w)| w.is_negative()) {
            return false;
        }
        if self.weights.iter().any(|(g, _)| *g >= gens.len()) {
            return false;
        }
        let p = self.point(gens, a.len());
        p.0.iter()
            .zip(a)
            .all(|(x, &b)| *x <= BigRational::from_integer(BigInt::from(b)))
    }
}

pub(crate) fn solve(gens: &[&[u32]], a: &[u32]) -> Option<Lambda> {
    if gens.is_empty() {
        return None;
    }
    if let Some(k) = gens.iter().position(|g| crate::ring::divides(g, a)) {
        return Some(Lambda {
            weights: vec![(k, BigRational::one())],
        });
    }
    let n = a.len();
    let ng = gens.len();
    // columns: λ_0..λ_{ng-1}, s_0..s_{n-1}, t
    let ncols = ng + n + 1;
    let t_col = ng + n;
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));

    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n + 1);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(n + 1);
    for r in 0..n {
        let mut row = vec![BigRational::zero(); ncols];
        for (k, g) in gens.iter().enumerate() {
            if g[r] > 0 {
                row[k] = q(g[r] as i64);
            }
        }
        row[ng + r] = BigRational::one();
        rows.push(row);
        rhs.push(q(a[r] as i64));
    }
    let mut last = vec![BigRational::zero(); ncols];
    for c in last.iter_mut().take(ng) {
        *c = BigRational::one();
    }
    last[t_col] = BigRational::one();
    rows.push(last);
    rhs.push(BigRational::one());
    let mut basis: Vec<usize> = (ng..ng + n).chain([t_col]).collect();

    // reduced costs for minimizing t, with t basic in the last row
    let mut cost = vec![BigRational::zero(); ncols];
    for v in cost.iter_mut().take(ng) {
        *v = -BigRational::one();
    }
    let mut objective = BigRational::one();

    loop {
        let Some(enter) = (0..ncols).find(|&c| cost[c].is_negative()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for r in 0..rows.len() {
            if !rows[r][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[r] / &rows[r][enter];
            let better = match &best {
                None => true,
                Some(b) => ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()]),
            };
            if better {
                best = Some(ratio);
                leave = Some(r);
            }
        }
        let Some(pr) = leave else {
            // unbounded cannot happen: t ≥ 0 bounds the objective
            unreachable!("phase-one objective is bounded below");
        };
        let pv = rows[pr][enter].clone();
        for v in rows[pr].iter_mut() {
            *v /= &pv;
        }
        rhs[pr] /= &pv;
        let pivot_row = rows[pr].clone();
        let pivot_rhs = rhs[pr].clone();
        for r in 0..rows.len() {
            if r == pr || rows[r][enter].is_zero() {
                continue;
            }
            let f = rows[r][enter].clone();
            for (c, pc) in pivot_row.iter().enumerate() {
                if !pc.is_zero() {
                    let d = &f * pc;
                    rows[r][c] -= d;
                }
            }
            rhs[r] -= &f * &pivot_rhs;
        }
        let f = cost[enter].clone();
        for (c, pc) in pivot_row.iter().enumerate() {
            if !pc.is_zero() {
                let d = &f * pc;
                cost[c] -= d;
            }
        }
        objective += &f * &pivot_rhs;
        basis[pr] = enter;
    }

    if !objective.is_zero() {
        return None;
    }
    let mut weights: Vec<(usize, BigRational)> = basis
        .iter()
        .zip(&rhs)
        .filter(|(&b, v)| b < ng && !v.is_zero())
        .map(|(&b, v)| (b, v.clone()))
        .collect();
    weights.sort_by_key(|w| w.0);
    Some(Lambda { weights })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(2))
    }

    #[test]
    fn midpoint_of_squares() {
        let gens: Vec<&[u32]> = vec![&[2, 0], &[0, 2]];
        let lam = solve(&gens, &[1, 1]).unwrap();
        assert_eq!(lam.weights, vec![(0, half()), (1, half())]);
        assert!(lam.verify(&gens, &[1, 1]));
    }

    #[test]
    fn generator_itself() {
        let gens: Vec<&[u32]> = vec![&[2, 0], &[0, 2]];
        let lam = solve(&gens, &[0, 2]).unwrap();
        assert_eq!(lam.weights, vec![(1, BigRational::one())]);
    }

    #[test]
    fn outside_polyhedron() {
        let gens: Vec<&[u32]> = vec![&[2, 0], &[0, 2]];
        assert!(solve(&gens, &[1, 0]).is_none());
        assert!(solve(&gens, &[0, 1]).is_none());
        assert!(solve(&[], &[5, 5]).is_none());
    }

    #[test]
    fn three_dimensional() {
        // (1,1,1) = (1/3)(3,0,0) + (1/3)(0,3,0) + (1/3)(0,0,3)
        let gens: Vec<&[u32]> = vec![&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]];
        let lam = solve(&gens, &[1, 1, 1]).unwrap();
        assert!(lam.verify(&gens, &[1, 1, 1]));
        assert_eq!(lam.weights.len(), 3);
        assert!(solve(&gens, &[1, 1, 0]).is_none());
    }

    #[test]
    fn verify_rejects_bad_certificates() {
        let gens: Vec<&[u32]> = vec![&[2, 0], &[0, 2]];
        let bad = Lambda {
            weights: vec![(0, half())],
        };
        assert!(!bad.verify(&gens, &[1, 1]));
        let above = Lambda {
            weights: vec![(0, BigRational::one())],
        };
        assert!(!above.verify(&gens, &[1, 1]));
    }
}
