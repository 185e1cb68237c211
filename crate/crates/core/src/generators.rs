//! Assembly of the eight ladder/diagonal matrices `{T±, T³, U±, U³, V±}` and
//! their conversion to the hermitian basis `F¹..F⁸`.
//!
//! Irreps with `q > p` are built as the negative transpose of `(q, p)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, Su3Error};
use crate::matrix::{ComplexMatrix, Matrix};
use crate::scalar::{int, ratio, sqrt_of_rational, RadicalSum, RadicalTerm};
use crate::structure::{tspin_list, u3_lead_list, BlockLayout, IrrepLabel, TSpinList};
use crate::su2::{spin_block, SpinKind};
use crate::unknowns::{upc2_map, Upc2Map};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorName {
    TPlus,
    TMinus,
    TThree,
    UPlus,
    UMinus,
    UThree,
    VPlus,
    VMinus,
}

impl GeneratorName {
    pub const ALL: [GeneratorName; 8] = [
        GeneratorName::TPlus,
        GeneratorName::TMinus,
        GeneratorName::TThree,
        GeneratorName::UPlus,
        GeneratorName::UMinus,
        GeneratorName::UThree,
        GeneratorName::VPlus,
        GeneratorName::VMinus,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            GeneratorName::TPlus => "Tp",
            GeneratorName::TMinus => "Tm",
            GeneratorName::TThree => "T3",
            GeneratorName::UPlus => "Up",
            GeneratorName::UMinus => "Um",
            GeneratorName::UThree => "U3",
            GeneratorName::VPlus => "Vp",
            GeneratorName::VMinus => "Vm",
        }
    }
}

impl fmt::Display for GeneratorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GeneratorName {
    type Err = Su3Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneratorName::ALL.into_iter().find(|g| g.as_str() == s).ok_or_else(|| Su3Error::UnknownMatrix(s.to_string()))
    }
}

/// The eight real generator matrices of one irrep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub label: IrrepLabel,
    /// Block layout of the standard-orientation construction.
    pub layout: BlockLayout,
    pub t_plus: Matrix,
    pub t_minus: Matrix,
    pub t_three: Matrix,
    pub u_plus: Matrix,
    pub u_minus: Matrix,
    pub u_three: Matrix,
    pub v_plus: Matrix,
    pub v_minus: Matrix,
}

impl GeneratorSet {
    pub fn dim(&self) -> usize {
        self.t_three.dim()
    }

    pub fn matrix(&self, name: GeneratorName) -> &Matrix {
        match name {
            GeneratorName::TPlus => &self.t_plus,
            GeneratorName::TMinus => &self.t_minus,
            GeneratorName::TThree => &self.t_three,
            GeneratorName::UPlus => &self.u_plus,
            GeneratorName::UMinus => &self.u_minus,
            GeneratorName::UThree => &self.u_three,
            GeneratorName::VPlus => &self.v_plus,
            GeneratorName::VMinus => &self.v_minus,
        }
    }

    pub fn matrix_mut(&mut self, name: GeneratorName) -> &mut Matrix {
        match name {
            GeneratorName::TPlus => &mut self.t_plus,
            GeneratorName::TMinus => &mut self.t_minus,
            GeneratorName::TThree => &mut self.t_three,
            GeneratorName::UPlus => &mut self.u_plus,
            GeneratorName::UMinus => &mut self.u_minus,
            GeneratorName::UThree => &mut self.u_three,
            GeneratorName::VPlus => &mut self.v_plus,
            GeneratorName::VMinus => &mut self.v_minus,
        }
    }

    /// `M ↦ −Mᵀ` on all eight matrices; relabels `(p,q)` as `(q,p)`.
    pub fn negative_transpose(&self) -> Self {
        Self {
            label: self.label.conjugate(),
            layout: self.layout.clone(),
            t_plus: self.t_plus.negative_transpose(),
            t_minus: self.t_minus.negative_transpose(),
            t_three: self.t_three.negative_transpose(),
            u_plus: self.u_plus.negative_transpose(),
            u_minus: self.u_minus.negative_transpose(),
            u_three: self.u_three.negative_transpose(),
            v_plus: self.v_plus.negative_transpose(),
            v_minus: self.v_minus.negative_transpose(),
        }
    }

    pub fn to_gell_mann(&self) -> GellMannSet {
        to_gell_mann(self)
    }
}

pub fn build_t_matrices(p: u32, q: u32) -> Result<(Matrix, Matrix, Matrix)> {
    let spins = tspin_list(p, q)?;
    let layout = BlockLayout::from_spins(&spins);
    let place = |kind| {
        let mut m = Matrix::zeros(layout.dimension());
        for (idx, &ds) in spins.doubled_spins().iter().enumerate() {
            let offset = layout.offset(idx + 1);
            for (r, c, v) in spin_block(kind, ds).entries() {
                m.set(offset + r, offset + c, v.clone());
            }
        }
        m
    };
    Ok((place(SpinKind::Plus), place(SpinKind::Minus), place(SpinKind::Three)))
}

pub fn build_u3(p: u32, q: u32) -> Result<Matrix> {
    let spins = tspin_list(p, q)?;
    let leads = u3_lead_list(p, q)?;
    let layout = BlockLayout::from_spins(&spins);
    let mut m = Matrix::zeros(layout.dimension());
    for (idx, (&ds, &lead)) in spins.doubled_spins().iter().zip(&leads).enumerate() {
        let offset = layout.offset(idx + 1);
        for a in 0..=ds as i64 {
            // doubled: 2u³ = lead + a
            m.set(offset + a as usize, offset + a as usize, ratio(lead + a, 2).into());
        }
    }
    Ok(m)
}

/// How the column block's spin relates to the row block's.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockRelation {
    /// `tⱼ = sᵢ + ½`
    SpinUp,
    /// `tⱼ = sᵢ − ½`
    SpinDown,
}

/// A block `(i, j)` (1-based) that U⁺ and V⁺ may occupy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleBlock {
    pub i: usize,
    pub j: usize,
    pub relation: BlockRelation,
}

/// Blocks allowed by the T³ and U³ eigenvalue shifts of U⁺: the column spin
/// differs by ½ and the lead U³ values differ by 1 (spin up) or ½ (spin down).
pub fn admissible_blocks(p: u32, q: u32) -> Result<Vec<AdmissibleBlock>> {
    let spins = tspin_list(p, q)?;
    let leads = u3_lead_list(p, q)?;
    Ok(admissible_from(&spins, &leads))
}

fn admissible_from(spins: &TSpinList, leads: &[i64]) -> Vec<AdmissibleBlock> {
    let ds = spins.doubled_spins();
    let mut out = Vec::new();
    for i in 0..ds.len() {
        for j in 0..ds.len() {
            let (s, t) = (ds[i] as i64, ds[j] as i64);
            let lead_gap = leads[i] - leads[j];
            let relation = if t == s + 1 && lead_gap == 2 {
                Some(BlockRelation::SpinUp)
            } else if t == s - 1 && lead_gap == 1 {
                Some(BlockRelation::SpinDown)
            } else {
                None
            };
            if let Some(relation) = relation {
                out.push(AdmissibleBlock { i: i + 1, j: j + 1, relation });
            }
        }
    }
    out
}

/// Entries of one U⁺ block and the matching V⁺ block for unit block
/// constant, as `(row, col, value)` offsets inside the block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockProfile {
    pub u_plus: Vec<(usize, usize, RadicalTerm)>,
    pub v_plus: Vec<(usize, usize, RadicalTerm)>,
}

/// In-block diagonals of U⁺ (σ = τ − ½) and V⁺ (σ = τ + ½) for row spin
/// `row_doubled = 2s` and column spin `col_doubled = 2t`, `t = s ± ½`.
pub fn block_profile(row_doubled: u32, col_doubled: u32) -> Result<BlockProfile> {
    let (ds, dt) = (row_doubled as i64, col_doubled as i64);
    let relation = match dt - ds {
        1 => BlockRelation::SpinUp,
        -1 => BlockRelation::SpinDown,
        _ => return Err(Su3Error::Consistency(format!("block spins 2s = {ds}, 2t = {dt} do not differ by one half"))),
    };
    let mut profile = BlockProfile { u_plus: Vec::new(), v_plus: Vec::new() };
    for a in 0..=ds {
        let sigma = ds - 2 * a;
        // U⁺: τ = σ + ½
        let tau = sigma + 1;
        if tau.abs() <= dt {
            let radicand = match relation {
                BlockRelation::SpinDown => ratio(ds - sigma, 2),
                BlockRelation::SpinUp => ratio(ds + sigma + 2, 2 * (ds + 1)),
            };
            let v = sqrt_of_rational(&radicand)?;
            if !v.is_zero() {
                profile.u_plus.push((a as usize, ((dt - tau) / 2) as usize, v));
            }
        }
        // V⁺: τ = σ − ½
        let tau = sigma - 1;
        if tau.abs() <= dt {
            let (radicand, sign) = match relation {
                BlockRelation::SpinDown => (ratio(ds + sigma, 2), 1),
                BlockRelation::SpinUp => (ratio(ds - sigma + 2, 2 * (ds + 1)), -1),
            };
            let root = sqrt_of_rational(&radicand)?;
            if !root.is_zero() {
                let v = RadicalTerm::new(root.coefficient() * int(sign), root.squarefree());
                profile.v_plus.push((a as usize, ((dt - tau) / 2) as usize, v));
            }
        }
    }
    Ok(profile)
}

/// U⁺ and V⁺ from the squared block unknowns, taking positive roots.
pub fn build_uplus_vplus(p: u32, q: u32, unknowns: &Upc2Map) -> Result<(Matrix, Matrix)> {
    let spins = tspin_list(p, q)?;
    let leads = u3_lead_list(p, q)?;
    let layout = BlockLayout::from_spins(&spins);
    let dim = layout.dimension();
    let (mut u_plus, mut v_plus) = (Matrix::zeros(dim), Matrix::zeros(dim));
    let admissible = admissible_from(&spins, &leads);
    for block in &admissible {
        let square = unknowns.get(block.i, block.j).ok_or_else(|| {
            Su3Error::Consistency(format!("no block unknown for admissible block ({},{})", block.i, block.j))
        })?;
        let constant = RadicalSum::sqrt(square)?;
        if constant.is_zero() {
            continue;
        }
        let profile = block_profile(spins.doubled(block.i), spins.doubled(block.j))?;
        let (row0, col0) = (layout.offset(block.i), layout.offset(block.j));
        for (r, c, v) in &profile.u_plus {
            u_plus.set(row0 + r, col0 + c, &RadicalSum::from(v.clone()) * &constant);
        }
        for (r, c, v) in &profile.v_plus {
            v_plus.set(row0 + r, col0 + c, &RadicalSum::from(v.clone()) * &constant);
        }
    }
    let stray: Vec<_> = unknowns
        .nonzero()
        .filter(|((i, j), _)| !admissible.iter().any(|b| b.i == *i && b.j == *j))
        .map(|(k, _)| k)
        .collect();
    if !stray.is_empty() {
        return Err(Su3Error::Consistency(format!("nonzero unknowns at inadmissible blocks {stray:?}")));
    }
    Ok((u_plus, v_plus))
}

/// All eight matrices for any `(p, q)`.
pub fn build_generator_set(p: u32, q: u32) -> Result<GeneratorSet> {
    if q > p {
        return Ok(build_generator_set(q, p)?.negative_transpose());
    }
    let (t_plus, t_minus, t_three) = build_t_matrices(p, q)?;
    let u_three = build_u3(p, q)?;
    let unknowns = upc2_map(p, q)?;
    let (u_plus, v_plus) = build_uplus_vplus(p, q, &unknowns)?;
    Ok(GeneratorSet {
        label: IrrepLabel::new(p, q),
        layout: BlockLayout::from_spins(&tspin_list(p, q)?),
        u_minus: u_plus.transpose(),
        v_minus: v_plus.transpose(),
        t_plus,
        t_minus,
        t_three,
        u_plus,
        u_three,
        v_plus,
    })
}

/// The hermitian basis `F¹..F⁸`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GellMannSet {
    pub label: IrrepLabel,
    pub f: [ComplexMatrix; 8],
}

impl GellMannSet {
    /// `Fⁱ` for `i` in `1..=8`.
    pub fn get(&self, i: usize) -> &ComplexMatrix {
        &self.f[i - 1]
    }
}

pub fn to_gell_mann(gs: &GeneratorSet) -> GellMannSet {
    let half = ratio(1, 2);
    let minus_half = ratio(-1, 2);
    let sym = |a: &Matrix, b: &Matrix| ComplexMatrix::real(a.add(b).scale(&half));
    // −i(A − B)/2
    let antisym = |a: &Matrix, b: &Matrix| ComplexMatrix::imaginary(a.sub(b).scale(&minus_half));
    // (2/√3)·U³ + (1/√3)·T³ = (√3/3)(2U³ + T³)
    let root3_over_3 = RadicalSum::from(RadicalTerm::new(ratio(1, 3), 3));
    let f8 = gs.u_three.scale(&int(2)).add(&gs.t_three).scale_by(&root3_over_3);
    GellMannSet {
        label: gs.label,
        f: [
            sym(&gs.t_plus, &gs.t_minus),
            antisym(&gs.t_plus, &gs.t_minus),
            ComplexMatrix::real(gs.t_three.clone()),
            sym(&gs.v_plus, &gs.v_minus),
            antisym(&gs.v_plus, &gs.v_minus),
            sym(&gs.u_plus, &gs.u_minus),
            antisym(&gs.u_plus, &gs.u_minus),
            ComplexMatrix::real(f8),
        ],
    }
}

/// Name of `Fⁱ` as accepted on the command line.
pub fn gell_mann_index(name: &str) -> Option<usize> {
    let i: usize = name.strip_prefix('F')?.parse().ok()?;
    (1..=8).contains(&i).then_some(i)
}
