//! Brute-force recovery of the squared block unknowns directly from the
//! commutation relations, independent of the closed-form families.
//!
//! Each admissible block gets one unknown constant `c`. Inside the diagonal
//! T-spin blocks, `[U⁺,U⁻]`, `[V⁻,U⁺]` and `[V⁺,V⁻]` only involve products
//! of a block with itself, so those entries are linear in the squares `c²`.
//! Splitting each entry by square-free radical gives a rational linear system,
//! solved exactly by Gauss-Jordan elimination.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::error::{Result, Su3Error};
use crate::generators::{admissible_blocks, block_profile, build_t_matrices, build_u3, AdmissibleBlock};
use crate::matrix::Matrix;
use crate::scalar::{int, RadicalSum, Rational};
use crate::structure::{tspin_list, BlockLayout, IrrepLabel};
use crate::unknowns::{Region, Upc2Map};

/// Largest dimension the oracle accepts.
pub const ORACLE_MAX_DIMENSION: u64 = 64;

struct UnitBlocks {
    blocks: Vec<AdmissibleBlock>,
    u: Vec<Matrix>,
    v: Vec<Matrix>,
}

fn unit_blocks(p: u32, q: u32, layout: &BlockLayout) -> Result<UnitBlocks> {
    let spins = tspin_list(p, q)?;
    let blocks = admissible_blocks(p, q)?;
    let dim = layout.dimension();
    let (mut u, mut v) = (Vec::new(), Vec::new());
    for b in &blocks {
        let profile = block_profile(spins.doubled(b.i), spins.doubled(b.j))?;
        let (r0, c0) = (layout.offset(b.i), layout.offset(b.j));
        let mut um = Matrix::zeros(dim);
        for (r, c, x) in &profile.u_plus {
            um.set(r0 + r, c0 + c, x.clone().into());
        }
        let mut vm = Matrix::zeros(dim);
        for (r, c, x) in &profile.v_plus {
            vm.set(r0 + r, c0 + c, x.clone().into());
        }
        u.push(um);
        v.push(vm);
    }
    Ok(UnitBlocks { blocks, u, v })
}

/// Rows `Σₖ coeff[k]·xₖ = rhs`, one per (diagonal-block entry, radical).
fn equations<F>(
    units: &UnitBlocks,
    layout: &BlockLayout,
    rhs: &Matrix,
    contribution: F,
) -> Vec<(Vec<Rational>, Rational)>
where
    F: Fn(&Matrix, &Matrix) -> Matrix,
{
    let n = units.blocks.len();
    // (row, col, radical) -> coefficients
    let mut table: BTreeMap<(usize, usize, u64), (Vec<Rational>, Rational)> = BTreeMap::new();
    let same_block = |r: usize, c: usize| layout.block_of(r) == layout.block_of(c);
    for k in 0..n {
        let e = contribution(&units.u[k], &units.v[k]);
        for (r, c, val) in e.entries().filter(|(r, c, _)| same_block(*r, *c)) {
            for (sf, coeff) in val.terms() {
                let row = table.entry((r, c, sf)).or_insert_with(|| (vec![Rational::zero(); n], Rational::zero()));
                row.0[k] += coeff;
            }
        }
    }
    for (r, c, val) in rhs.entries().filter(|(r, c, _)| same_block(*r, *c)) {
        for (sf, coeff) in val.terms() {
            let row = table.entry((r, c, sf)).or_insert_with(|| (vec![Rational::zero(); n], Rational::zero()));
            row.1 += coeff;
        }
    }
    table.into_values().collect()
}

enum Solution {
    Unique(Vec<Rational>),
    Free(Vec<usize>),
    Inconsistent(String),
}

fn gauss_jordan(system: &[(Vec<Rational>, Rational)], n: usize) -> Solution {
    let mut rows: Vec<Vec<Rational>> = system
        .iter()
        .map(|(coeffs, rhs)| {
            let mut row = coeffs.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = Rational::one() / &rows[rank][col];
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if let Some(row) = rows[rank..].iter().find(|row| !row[n].is_zero()) {
        return Solution::Inconsistent(format!("0 = {}", row[n]));
    }
    if rank < n {
        let free = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
        return Solution::Free(free);
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = rows[r][n].clone();
    }
    Solution::Unique(x)
}

/// Squared block unknowns for every admissible block of `(p, q)`, `p >= q`,
/// solved from the algebra alone.
pub fn oracle_solve(p: u32, q: u32) -> Result<Upc2Map> {
    let label = IrrepLabel::new(p, q);
    label.require_standard()?;
    if label.dimension() > ORACLE_MAX_DIMENSION {
        return Err(Su3Error::OracleTooLarge { p, q, d: label.dimension(), limit: ORACLE_MAX_DIMENSION });
    }
    let layout = BlockLayout::from_spins(&tspin_list(p, q)?);
    let units = unit_blocks(p, q, &layout)?;
    let n = units.blocks.len();
    let (_, t_minus, t_three) = build_t_matrices(p, q)?;
    let u_three = build_u3(p, q)?;

    // [U⁺,U⁻] = 2U³ and [V⁻,U⁺] = −T⁻ first; [V⁺,V⁻] = 2U³ + 2T³ only if needed.
    let mut system = equations(&units, &layout, &u_three.scale(&int(2)), |u, _| {
        let ut = u.transpose();
        u.mul(&ut).sub(&ut.mul(u))
    });
    system.extend(equations(&units, &layout, &t_minus.neg(), |u, v| {
        let vt = v.transpose();
        vt.mul(u).sub(&u.mul(&vt))
    }));

    let mut solution = gauss_jordan(&system, n);
    if let Solution::Free(_) = solution {
        system.extend(equations(&units, &layout, &u_three.add(&t_three).scale(&int(2)), |_, v| {
            let vt = v.transpose();
            v.mul(&vt).sub(&vt.mul(v))
        }));
        solution = gauss_jordan(&system, n);
    }
    let squares = match solution {
        Solution::Unique(x) => x,
        Solution::Free(free) => {
            return Err(Su3Error::OracleUnderdetermined {
                p,
                q,
                free: free.into_iter().map(|k| (units.blocks[k].i, units.blocks[k].j)).collect(),
            })
        }
        Solution::Inconsistent(detail) => return Err(Su3Error::OracleInconsistent { p, q, detail }),
    };
    if let Some(k) = squares.iter().position(|x| x.is_negative()) {
        let b = units.blocks[k];
        return Err(Su3Error::OracleInconsistent {
            p,
            q,
            detail: format!("negative square {} for block ({},{})", squares[k], b.i, b.j),
        });
    }
    let values: BTreeMap<(usize, usize), Rational> =
        units.blocks.iter().zip(squares).map(|(b, x)| ((b.i, b.j), x)).collect();
    debug_assert_eq!(values.keys().copied().collect::<BTreeSet<_>>().len(), n);
    Ok(Upc2Map::from_values(label, values, Region::Oracle))
}

/// The U⁺ that the oracle's squares produce, for diagnostics.
pub fn oracle_u_plus(p: u32, q: u32) -> Result<Matrix> {
    let squares = oracle_solve(p, q)?;
    let layout = BlockLayout::from_spins(&tspin_list(p, q)?);
    let units = unit_blocks(p, q, &layout)?;
    let mut out = Matrix::zeros(layout.dimension());
    for (b, u) in units.blocks.iter().zip(&units.u) {
        let c = RadicalSum::sqrt(squares.get(b.i, b.j).expect("solved block"))?;
        out = out.add(&u.scale_by(&c));
    }
    Ok(out)
}
