//! Quantities fixed by the irrep label alone: dimension, the ordered list of
//! T-spins with its top-cap / middle / bottom-cap regions, block offsets, the
//! lead U³ value of each block, state labels and weight multiplicities.
//!
//! Spins and 3-components are stored doubled so every label is an integer.
//! Block indices exposed here are 1-based.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Result, Su3Error};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    pub p: u32,
    pub q: u32,
}

impl IrrepLabel {
    pub fn new(p: u32, q: u32) -> Self {
        Self { p, q }
    }

    pub fn dimension(&self) -> u64 {
        dimension(self.p, self.q)
    }

    /// `p >= q`, the orientation the closed-form construction covers directly.
    pub fn is_standard(&self) -> bool {
        self.p >= self.q
    }

    pub fn conjugate(&self) -> Self {
        Self { p: self.q, q: self.p }
    }

    /// `((p² + pq + q²)/3 + p + q)` as `(numerator, 3)`.
    pub fn casimir_times_three(&self) -> u64 {
        let (p, q) = (self.p as u64, self.q as u64);
        p * p + p * q + q * q + 3 * (p + q)
    }

    pub(crate) fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(Su3Error::RequiresPGeQ { p: self.p, q: self.q })
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

pub fn dimension(p: u32, q: u32) -> u64 {
    let (p, q) = (p as u64, q as u64);
    (p + 1) * (q + 1) * (p + q + 2) / 2
}

/// `q(q−1)/2 + 1`: the 1-based index where the last top-cap run starts.
pub fn n0(q: u32) -> u64 {
    let q = q as u64;
    q * q.saturating_sub(1) / 2 + 1
}

/// Ordered doubled T-spins for `p >= q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSpinList {
    doubled: Vec<u32>,
    top_cap: usize,
    middle: usize,
    bottom_cap: usize,
}

impl TSpinList {
    pub fn doubled_spins(&self) -> &[u32] {
        &self.doubled
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    /// Doubled spin of 1-based block `i`.
    pub fn doubled(&self, i: usize) -> u32 {
        self.doubled[i - 1]
    }

    /// Sizes of the (top cap, middle, bottom cap) regions.
    pub fn regions(&self) -> (usize, usize, usize) {
        (self.top_cap, self.middle, self.bottom_cap)
    }

    pub fn top_cap(&self) -> &[u32] {
        &self.doubled[..self.top_cap]
    }

    pub fn middle(&self) -> &[u32] {
        &self.doubled[self.top_cap..self.top_cap + self.middle]
    }

    pub fn bottom_cap(&self) -> &[u32] {
        &self.doubled[self.top_cap + self.middle..]
    }

    /// Number of states, `Σ(2sᵢ + 1)`.
    pub fn total_states(&self) -> u64 {
        self.doubled.iter().map(|&s| s as u64 + 1).sum()
    }
}

pub fn tspin_list(p: u32, q: u32) -> Result<TSpinList> {
    IrrepLabel::new(p, q).require_standard()?;
    let mut doubled = Vec::with_capacity(((p + 1) * (q + 1)) as usize);
    for k in 0..q {
        doubled.extend(std::iter::repeat_n(k, (k + 1) as usize));
    }
    let top_cap = doubled.len();
    for k in q..=p {
        doubled.extend(std::iter::repeat_n(k, (q + 1) as usize));
    }
    let middle = doubled.len() - top_cap;
    for j in 1..=q {
        doubled.extend(std::iter::repeat_n(p + j, (q - j + 1) as usize));
    }
    let bottom_cap = doubled.len() - top_cap - middle;
    Ok(TSpinList { doubled, top_cap, middle, bottom_cap })
}

/// Doubled lead values `2u³(k, sₖ)` of the diagonal U³ blocks for `p >= q`.
///
/// The three regions are generated separately and concatenated. Within a run
/// of equal T-spins the leads come out strictly increasing.
pub fn u3_lead_list(p: u32, q: u32) -> Result<Vec<i64>> {
    IrrepLabel::new(p, q).require_standard()?;
    let (p, q) = (p as i64, q as i64);
    let mut leads = Vec::with_capacity(((p + 1) * (q + 1)) as usize);
    // top cap: run i has 2s = i - 1 and i members
    for i in 1..=q {
        for j in 1..=i {
            leads.push(-(p - q) - 2 * (i - 1) + 3 * (j - 1));
        }
    }
    for i in 0..=(p - q) {
        for j in 0..=q {
            leads.push(-p - q + i + 3 * j);
        }
    }
    // bottom cap: run i has 2s = p + i and q - i + 1 members
    for i in 1..=q {
        for j in 1..=(q - i + 1) {
            leads.push(1 - 2 * q + (i - 1) + 3 * (j - 1));
        }
    }
    Ok(leads)
}

/// Row offsets and sizes of the diagonal blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLayout {
    offsets: Vec<usize>,
    sizes: Vec<usize>,
}

impl BlockLayout {
    pub fn from_spins(spins: &TSpinList) -> Self {
        let sizes: Vec<usize> = spins.doubled_spins().iter().map(|&s| s as usize + 1).collect();
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut acc = 0;
        for &s in &sizes {
            offsets.push(acc);
            acc += s;
        }
        Self { offsets, sizes }
    }

    pub fn block_count(&self) -> usize {
        self.sizes.len()
    }

    /// 0-based first row of 1-based block `i`.
    pub fn offset(&self, i: usize) -> usize {
        self.offsets[i - 1]
    }

    pub fn size(&self, i: usize) -> usize {
        self.sizes[i - 1]
    }

    pub fn dimension(&self) -> usize {
        self.offsets.last().zip(self.sizes.last()).map_or(0, |(o, s)| o + s)
    }

    /// 1-based block containing 0-based state `row`.
    pub fn block_of(&self, row: usize) -> usize {
        match self.offsets.binary_search(&row) {
            Ok(pos) => pos + 1,
            Err(pos) => pos,
        }
    }
}

/// One basis state: `{p, q, s, σ, u³}` (doubled) and its 1-based position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StateLabel {
    pub p: u32,
    pub q: u32,
    pub doubled_spin: u32,
    pub doubled_sigma: i64,
    pub doubled_u3: i64,
    pub index: usize,
}

impl StateLabel {
    /// `(2T³, 3Y)` with `Y = (4/3)u³ + (2/3)T³`.
    pub fn weight(&self) -> (i64, i64) {
        (self.doubled_sigma, 2 * self.doubled_u3 + self.doubled_sigma)
    }
}

/// Labels in matrix order. For `q > p` the order is that of the
/// negative-transpose construction: the `(q,p)` labels with σ and u³ negated.
pub fn state_labels(p: u32, q: u32) -> Vec<StateLabel> {
    let label = IrrepLabel::new(p, q);
    if !label.is_standard() {
        return state_labels(q, p)
            .into_iter()
            .map(|s| StateLabel { p, q, doubled_sigma: -s.doubled_sigma, doubled_u3: -s.doubled_u3, ..s })
            .collect();
    }
    let spins = tspin_list(p, q).expect("standard orientation");
    let leads = u3_lead_list(p, q).expect("standard orientation");
    let mut labels = Vec::with_capacity(label.dimension() as usize);
    for (&ds, &lead) in spins.doubled_spins().iter().zip(&leads) {
        for a in 0..=ds as i64 {
            // σ = s - a; u³ = lead + (s - σ)/2
            labels.push(StateLabel {
                p,
                q,
                doubled_spin: ds,
                doubled_sigma: ds as i64 - 2 * a,
                doubled_u3: lead + a,
                index: labels.len() + 1,
            });
        }
    }
    labels
}

/// Number of states at each weight point, keyed by `(2T³, 3Y)`.
pub fn weight_multiplicities(p: u32, q: u32) -> BTreeMap<(i64, i64), usize> {
    let mut counts = BTreeMap::new();
    for s in state_labels(p, q) {
        *counts.entry(s.weight()).or_insert(0) += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(1, 0), 3);
        assert_eq!(dimension(5, 3), 120);
        assert_eq!(dimension(0, 0), 1);
        assert_eq!(dimension(3, 2), 42);
    }

    #[test]
    fn n0_examples() {
        assert_eq!(n0(0), 1);
        assert_eq!(n0(1), 1);
        assert_eq!(n0(3), 4);
    }

    #[test]
    fn tspin_examples() {
        let big = tspin_list(5, 3).unwrap();
        assert_eq!(big.top_cap(), &[0, 1, 1, 2, 2, 2]);
        assert_eq!(big.middle(), &[3, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5]);
        assert_eq!(big.bottom_cap(), &[6, 6, 6, 7, 7, 8]);
        assert_eq!(big.len(), 24);
        assert_eq!(big.total_states(), 120);
        assert_eq!(tspin_list(1, 0).unwrap().doubled_spins(), &[0, 1]);
        assert_eq!(tspin_list(1, 1).unwrap().doubled_spins(), &[0, 1, 1, 2]);
    }

    #[test]
    fn tspin_rejects_q_greater_than_p() {
        let err = tspin_list(1, 2).unwrap_err();
        assert!(err.to_string().contains("negative-transpose"));
        assert!(u3_lead_list(0, 1).is_err());
    }

    #[test]
    fn lead_examples() {
        assert_eq!(u3_lead_list(1, 0).unwrap(), vec![-1, 0]);
        // Table expressions for (3,2), evaluated by hand.
        assert_eq!(u3_lead_list(3, 2).unwrap(), vec![-1, -3, 0, -5, -2, 1, -4, -1, 2, -3, 0, -2]);
    }

    #[test]
    fn layout_offsets() {
        let layout = BlockLayout::from_spins(&tspin_list(1, 1).unwrap());
        assert_eq!(layout.block_count(), 4);
        assert_eq!((layout.offset(1), layout.offset(2), layout.offset(4)), (0, 1, 5));
        assert_eq!(layout.dimension(), 8);
        assert_eq!(layout.block_of(0), 1);
        assert_eq!(layout.block_of(2), 2);
        assert_eq!(layout.block_of(5), 4);
        assert_eq!(layout.block_of(7), 4);
    }

    #[test]
    fn label_examples() {
        let s = state_labels(1, 0);
        assert_eq!((s[0].doubled_spin, s[0].doubled_sigma, s[0].doubled_u3), (0, 0, -1));
        let big = state_labels(5, 3);
        let lead = big.iter().find(|l| l.doubled_spin == 8).unwrap();
        assert_eq!((lead.doubled_sigma, lead.doubled_u3), (8, -3));
        let conj = state_labels(0, 1);
        for (a, b) in s.iter().zip(&conj) {
            assert_eq!(b.doubled_sigma, -a.doubled_sigma);
            assert_eq!(b.doubled_u3, -a.doubled_u3);
            assert_eq!((b.p, b.q), (0, 1));
        }
    }

    #[test]
    fn weight_examples() {
        let w = weight_multiplicities(1, 0);
        let expected: BTreeMap<_, _> = [((1, 1), 1), ((-1, 1), 1), ((0, -2), 1)].into();
        assert_eq!(w, expected);
        let w = weight_multiplicities(0, 0);
        assert_eq!(w, [((0, 0), 1)].into());
    }

    #[test]
    fn five_three_row() {
        let w = weight_multiplicities(5, 3);
        let row: Vec<(i64, usize)> = w.iter().filter(|((_, y3), _)| *y3 == -4).map(|((t2, _), c)| (*t2, *c)).collect();
        assert_eq!(row, vec![(-6, 1), (-4, 2), (-2, 3), (0, 4), (2, 3), (4, 2), (6, 1)]);
        assert_eq!(row.iter().map(|(_, c)| c).sum::<usize>(), 16);
    }
}
