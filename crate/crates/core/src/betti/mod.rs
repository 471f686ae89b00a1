//! Graded Betti numbers of monomial ideals.
//!
//! For a multidegree `a`, `β_{i,a}(I)` is the rank of `H̃_{i-1}` of the upper
//! Koszul complex `K^a(I) = {F ⊆ supp(a) : x^{a-F} ∈ I}`. Nonzero values only
//! occur at joins of generator exponents, so only the lcm lattice is
//! scanned.

mod homology;

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

pub use homology::SimplicialComplex;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring;

pub const DEFAULT_LATTICE_BOUND: usize = 5000;

/// Graded Betti numbers `β_{i,j}` of an ideal `I` (not of `S/I`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BettiOf {
    Ideal,
    Quotient,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u64,
    pub rank: u64,
}

impl BettiTable {
    pub fn add(&mut self, i: usize, j: u64, rank: u64) {
        if rank > 0 {
            *self.entries.entry((i, j)).or_insert(0) += rank;
        }
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &r)| (i, j, r))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Total rank in homological degree `i`.
    pub fn betti(&self, i: usize) -> u64 {
        self.entries().filter(|e| e.0 == i).map(|e| e.2).sum()
    }

    pub fn pd_of_ideal(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    pub fn reg_of_ideal(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// `pd(S/I) = pd(I) + 1`.
    pub fn pd_of_quotient(&self) -> Option<usize> {
        self.pd_of_ideal().map(|p| p + 1)
    }

    /// `reg(S/I) = reg(I) − 1`.
    pub fn reg_of_quotient(&self) -> Option<i64> {
        self.reg_of_ideal().map(|r| r - 1)
    }

    /// Entries for the requested module, shifting by one homological degree
    /// and adding `β_{0,0} = 1` for the quotient.
    pub fn entries_of(&self, of: BettiOf) -> Vec<BettiEntry> {
        let mut out = Vec::new();
        if of == BettiOf::Quotient {
            out.push(BettiEntry { i: 0, j: 0, rank: 1 });
        }
        let shift = usize::from(of == BettiOf::Quotient);
        out.extend(self.entries().map(|(i, j, rank)| BettiEntry {
            i: i + shift,
            j,
            rank,
        }));
        out
    }

    /// Triangular text layout: columns are homological degrees, rows are
    /// `j − i`, zeros print as `.`.
    pub fn render(&self, of: BettiOf) -> String {
        let entries = self.entries_of(of);
        if entries.is_empty() {
            return "0\n".into();
        }
        let max_i = entries.iter().map(|e| e.i).max().unwrap();
        let rows: std::collections::BTreeSet<i64> =
            entries.iter().map(|e| e.j as i64 - e.i as i64).collect();
        let mut grid: BTreeMap<(i64, usize), u64> = BTreeMap::new();
        let mut totals = vec![0u64; max_i + 1];
        for e in &entries {
            grid.insert((e.j as i64 - e.i as i64, e.i), e.rank);
            totals[e.i] += e.rank;
        }
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=max_i).map(|i| i.to_string()));
        cells.push(header);
        let mut total_row = vec!["total:".to_string()];
        total_row.extend(totals.iter().map(u64::to_string));
        cells.push(total_row);
        for &r in &rows {
            let mut row = vec![format!("{r}:")];
            row.extend((0..=max_i).map(|i| {
                grid.get(&(r, i)).map_or_else(|| ".".to_string(), u64::to_string)
            }));
            cells.push(row);
        }
        let ncols = max_i + 2;
        let widths: Vec<usize> = (0..ncols)
            .map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:>w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join(" ").trim_end());
        }
        out
    }
}

/// Joins of all nonempty subsets of the generator exponents, ascending by
/// degree then lex. Refuses once more than `bound` distinct joins appear.
pub fn lcm_lattice_degrees(ideal: &MonomialIdeal, bound: usize) -> Result<Vec<Vec<u32>>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens: Vec<&[u32]> = ideal.exps().collect();
    let mut seen: HashSet<Box<[u32]>> = HashSet::new();
    let mut frontier: Vec<Box<[u32]>> = Vec::new();
    for g in &gens {
        if seen.insert(Box::from(*g)) {
            frontier.push(Box::from(*g));
        }
    }
    while let Some(a) = frontier.pop() {
        for g in &gens {
            let j = ring::lcm_exps(&a, g);
            if !seen.contains(&j) {
                seen.insert(j.clone());
                if seen.len() > bound {
                    return Err(Error::ResourceBound {
                        what: "lcm lattice (multidegrees)",
                        needed: seen.len(),
                        bound,
                    });
                }
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<Vec<u32>> = seen.into_iter().map(Vec::from).collect();
    out.sort_by(|a, b| {
        ring::degree(a)
            .cmp(&ring::degree(b))
            .then_with(|| ring::lex_cmp(b, a))
    });
    Ok(out)
}

/// `K^a(I)`: faces are subsets `F` of the support of `a` with `x^{a−F} ∈ I`.
pub fn upper_koszul(ideal: &MonomialIdeal, a: &[u32]) -> SimplicialComplex {
    let support: Vec<usize> = (0..a.len()).filter(|&v| a[v] > 0).collect();
    assert!(support.len() <= 64, "upper Koszul complex limited to 64 vertices");
    let gens: Vec<&[u32]> = ideal.exps().collect();
    let mut faces = Vec::new();
    let mut probe = a.to_vec();
    // Subsets of faces are faces, so walk masks in increasing popcount and
    // skip any mask with a non-face facet.
    let n = support.len();
    let mut face_set: HashSet<u64> = HashSet::new();
    let mut masks: Vec<u64> = (0..(1u64 << n)).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let mut rest = mask;
        let mut closed = true;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if !face_set.contains(&(mask & !bit)) {
                closed = false;
                break;
            }
            rest &= !bit;
        }
        if !closed {
            continue;
        }
        for (k, &v) in support.iter().enumerate() {
            probe[v] = a[v] - ((mask >> k) & 1) as u32;
        }
        if gens.iter().any(|g| ring::divides(g, &probe)) {
            face_set.insert(mask);
            faces.push(mask);
        }
    }
    faces.sort_unstable();
    SimplicialComplex::from_closed(support, faces)
}

/// Multigraded Betti numbers `β_{i,a}` for one multidegree, indexed by `i`.
pub fn multigraded_betti(ideal: &MonomialIdeal, a: &[u32]) -> Vec<usize> {
    // H̃_{i−1} sits at index i
    upper_koszul(ideal, a).reduced_homology_ranks()
}

pub fn betti_table(ideal: &MonomialIdeal, lattice_bound: usize) -> Result<BettiTable> {
    let lattice = lcm_lattice_degrees(ideal, lattice_bound)?;
    let per_degree: Vec<(u64, Vec<usize>)> = lattice
        .par_iter()
        .map(|a| (ring::degree(a), multigraded_betti(ideal, a)))
        .collect();
    let mut table = BettiTable::default();
    for (j, ranks) in per_degree {
        for (i, &r) in ranks.iter().enumerate() {
            table.add(i, j, r as u64);
        }
    }
    Ok(table)
}

pub fn pd_of_quotient(ideal: &MonomialIdeal, lattice_bound: usize) -> Result<usize> {
    Ok(betti_table(ideal, lattice_bound)?
        .pd_of_quotient()
        .expect("nonzero ideal has β_0 > 0"))
}

pub fn reg_of_quotient(ideal: &MonomialIdeal, lattice_bound: usize) -> Result<i64> {
    Ok(betti_table(ideal, lattice_bound)?
        .reg_of_quotient()
        .expect("nonzero ideal has β_0 > 0"))
}

/// Equigenerated in degree `d` with every `β_{i,j}(I)` on `j = i + d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, lattice_bound: usize) -> Result<bool> {
    let Some(d) = ideal.is_equigenerated() else {
        return Ok(false);
    };
    let table = betti_table(ideal, lattice_bound)?;
    let linear = table.entries().all(|(i, j, _)| j == d + i as u64);
    Ok(linear)
}
