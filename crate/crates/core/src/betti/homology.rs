//! Simplicial complexes on at most 64 vertices and their reduced homology
//! over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A downward-closed family of vertex subsets, faces stored as bitmasks
/// over `vertices`. No faces at all is the void complex; `{∅}` alone is the
/// empty complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    faces: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds from an arbitrary face list, closing it under subsets.
    pub fn from_faces(vertices: Vec<usize>, faces: impl IntoIterator<Item = u64>) -> Self {
        assert!(vertices.len() <= 64);
        let mut all = std::collections::BTreeSet::new();
        let mut stack: Vec<u64> = faces.into_iter().collect();
        while let Some(f) = stack.pop() {
            if all.insert(f) {
                let mut rest = f;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    stack.push(f & !bit);
                    rest &= !bit;
                }
            }
        }
        SimplicialComplex {
            vertices,
            faces: all.into_iter().collect(),
        }
    }

    /// Trusts the caller that `faces` is already closed under subsets.
    pub(crate) fn from_closed(vertices: Vec<usize>, faces: Vec<u64>) -> Self {
        SimplicialComplex { vertices, faces }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn faces(&self) -> &[u64] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_face(&self, f: u64) -> bool {
        self.faces.binary_search(&f).is_ok()
    }

    /// Number of faces of each dimension, starting at dimension −1.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for &face in &self.faces {
            let k = face.count_ones() as usize;
            if f.len() <= k {
                f.resize(k + 1, 0);
            }
            f[k] += 1;
        }
        f
    }

    /// `Σ_k (−1)^k f_k`, summed from dimension −1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 1 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Ranks of `H̃_k` for `k = −1, 0, …, dim`; entry `k + 1` holds `H̃_k`.
    pub fn reduced_homology_ranks(&self) -> Vec<usize> {
        if self.faces.is_empty() {
            return Vec::new();
        }
        let mut by_size: Vec<Vec<u64>> = Vec::new();
        for &face in &self.faces {
            let k = face.count_ones() as usize;
            if by_size.len() <= k {
                by_size.resize(k + 1, Vec::new());
            }
            by_size[k].push(face);
        }
        let top = by_size.len();
        // rank of ∂ from faces of size k to faces of size k−1, for k = 1..top
        let mut ranks = vec![0usize; top + 1];
        for k in 1..top {
            ranks[k] = boundary_rank(&by_size[k], &by_size[k - 1]);
        }
        (0..top)
            .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
            .collect()
    }
}

fn boundary_rank(faces: &[u64], facets_below: &[u64]) -> usize {
    if faces.is_empty() || facets_below.is_empty() {
        return 0;
    }
    let index: std::collections::HashMap<u64, usize> =
        facets_below.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let rows: Vec<Vec<i64>> = faces
        .iter()
        .map(|&f| {
            let mut row = vec![0i64; facets_below.len()];
            let mut sign = 1;
            let mut rest = f;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                row[index[&(f & !bit)]] = sign;
                sign = -sign;
                rest &= !bit;
            }
            row
        })
        .collect();
    match rank_i64(rows.clone()) {
        Some(r) => r,
        None => rank_big(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        ),
    }
}

/// Fraction-free row reduction with gcd normalization; `None` on overflow.
fn rank_i64(mut rows: Vec<Vec<i64>>) -> Option<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[col];
        for r in rank + 1..rows.len() {
            let f = rows[r][col];
            if f == 0 {
                continue;
            }
            let g = pv.gcd(&f);
            let (a, b) = (pv / g, f / g);
            let mut content = 0i64;
            for c in col..ncols {
                let v = rows[r][c].checked_mul(a)?.checked_sub(pivot_row[c].checked_mul(b)?)?;
                rows[r][c] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for v in &mut rows[r][col..] {
                    *v /= content;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_big(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let g = pv.gcd(&rows[r][col]);
            let a = &pv / &g;
            let b = &rows[r][col] / &g;
            let mut content = BigInt::zero();
            for c in col..ncols {
                let v = &rows[r][c] * &a - &pivot_row[c] * &b;
                content = content.gcd(&v);
                rows[r][c] = v;
            }
            if content.abs() > BigInt::from(1) {
                for v in &mut rows[r][col..] {
                    *v = &*v / &content;
                }
            }
        }
        rank += 1;
    }
    rank
}
