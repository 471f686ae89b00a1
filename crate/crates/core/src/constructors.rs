//! Named ideal families: Veronese and squarefree Veronese ideals in one
//! block, mixed sums `Σ I_a J_b` over two blocks, staircase sums and path
//! ideals of complete bipartite graphs.

use std::sync::Arc;

use log::warn;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::VariableContext;

/// All exponent vectors of total degree `r` supported on `block`.
fn block_monomials(
    ctx: &Arc<VariableContext>,
    block: usize,
    r: u32,
    squarefree: bool,
) -> Vec<Box<[u32]>> {
    let range = ctx.block_range(block);
    let n = range.len();
    let mut out = Vec::new();
    let mut local = vec![0u32; n];
    fn rec(
        pos: usize,
        left: u32,
        squarefree: bool,
        local: &mut Vec<u32>,
        emit: &mut dyn FnMut(&[u32]),
    ) {
        let n = local.len();
        if pos + 1 == n {
            if squarefree && left > 1 {
                return;
            }
            local[pos] = left;
            emit(local);
            local[pos] = 0;
            return;
        }
        let cap = if squarefree { left.min(1) } else { left };
        for e in (0..=cap).rev() {
            local[pos] = e;
            rec(pos + 1, left - e, squarefree, local, emit);
        }
        local[pos] = 0;
    }
    let total = ctx.total_vars();
    let start = range.start;
    rec(0, r, squarefree, &mut local, &mut |loc| {
        let mut e = vec![0u32; total];
        e[start..start + n].copy_from_slice(loc);
        out.push(e.into_boxed_slice());
    });
    out
}

/// `(x_1, …, x_n)^r` in the variables of `block`; `r = 0` gives the unit ideal.
pub fn veronese(ctx: &Arc<VariableContext>, block: &str, r: u32) -> Result<MonomialIdeal> {
    let b = ctx.block_index(block)?;
    Ok(veronese_at(ctx, b, r))
}

pub(crate) fn veronese_at(ctx: &Arc<VariableContext>, b: usize, r: u32) -> MonomialIdeal {
    MonomialIdeal::from_exps(ctx, block_monomials(ctx, b, r, false))
}

/// All squarefree monomials of degree `r` in `block`. Degrees above the
/// block size give the zero ideal and log a warning.
pub fn squarefree_veronese(
    ctx: &Arc<VariableContext>,
    block: &str,
    r: u32,
) -> Result<MonomialIdeal> {
    let b = ctx.block_index(block)?;
    Ok(squarefree_veronese_at(ctx, b, r))
}

pub(crate) fn squarefree_veronese_at(ctx: &Arc<VariableContext>, b: usize, r: u32) -> MonomialIdeal {
    let size = ctx.blocks()[b].size;
    if r as usize > size {
        warn!(
            "squarefree Veronese of degree {r} in block `{}` of size {size} is the zero ideal",
            ctx.blocks()[b].name
        );
        return MonomialIdeal::zero(ctx);
    }
    MonomialIdeal::from_exps(ctx, block_monomials(ctx, b, r, true))
}

fn block_factor(ctx: &Arc<VariableContext>, b: usize, r: u32, squarefree: bool) -> MonomialIdeal {
    if squarefree {
        squarefree_veronese_at(ctx, b, r)
    } else {
        veronese_at(ctx, b, r)
    }
}

fn require_two_blocks(ctx: &Arc<VariableContext>) -> Result<()> {
    if ctx.num_blocks() != 2 {
        return Err(Error::InvalidContext(format!(
            "expected exactly two blocks, found {}",
            ctx.num_blocks()
        )));
    }
    Ok(())
}

/// `Σ I_a · J_b` over `terms`, with `I`, `J` (squarefree) Veronese ideals in
/// the first and second block.
pub fn mixed_sum(
    ctx: &Arc<VariableContext>,
    terms: &[(u32, u32)],
    squarefree: bool,
) -> Result<MonomialIdeal> {
    require_two_blocks(ctx)?;
    let mut acc = MonomialIdeal::zero(ctx);
    for &(a, b) in terms {
        let term = block_factor(ctx, 0, a, squarefree).product(&block_factor(ctx, 1, b, squarefree))?;
        acc = acc.sum(&term)?;
    }
    Ok(acc)
}

/// `Σ_{j=1}^{z-1} I_j · J_{z-j}`.
pub fn staircase(ctx: &Arc<VariableContext>, z: u32, squarefree: bool) -> Result<MonomialIdeal> {
    require_two_blocks(ctx)?;
    let m1 = ctx.blocks()[0].size as u32;
    let m2 = ctx.blocks()[1].size as u32;
    if z < 2 || (squarefree && z > m1 + m2 - 1) {
        return Err(Error::OutOfRange(format!(
            "staircase degree z={z} outside [2, {}] for block sizes ({m1}, {m2})",
            if squarefree { (m1 + m2 - 1).to_string() } else { "∞".into() }
        )));
    }
    let terms: Vec<(u32, u32)> = (1..z)
        .map(|j| (j, z - j))
        .filter(|&(a, b)| !squarefree || (a <= m1 && b <= m2))
        .collect();
    mixed_sum(ctx, &terms, squarefree)
}

/// Path ideal `I_t(K_{n,m})`, where a path of length `t` has `t` vertices.
pub fn path_ideal_bipartite(ctx: &Arc<VariableContext>, t: u32) -> Result<MonomialIdeal> {
    require_two_blocks(ctx)?;
    if t == 0 {
        return Err(Error::OutOfRange("path length must be at least 1".into()));
    }
    let q = t / 2;
    if t % 2 == 0 {
        mixed_sum(ctx, &[(q, q)], true)
    } else {
        mixed_sum(ctx, &[(q, q + 1), (q + 1, q)], true)
    }
}
