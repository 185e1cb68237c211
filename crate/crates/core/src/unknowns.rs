//! Squared block unknowns `u⁺₍ᵢⱼ₎²`, one per nonzero block of U⁺.
//!
//! Six closed-form families cover the upper and lower off-diagonals of the
//! top cap, middle and bottom cap; the lower diagonal of the middle is a
//! recursion over entries of the other families. When two families address
//! the same block the earlier one wins, in the order
//! utc, ltc, udm, ldm, row-zeros, ubc, lbc, special.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Result, Su3Error};
use crate::scalar::{int, ratio, Rational};
use crate::structure::{n0, tspin_list, IrrepLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// Upper off-diagonals of the top cap.
    Utc,
    /// Lower off-diagonals of the top cap.
    Ltc,
    /// Upper diagonal of the middle region.
    Udm,
    /// Lower diagonal of the middle region.
    Ldm,
    /// Upper off-diagonals of the bottom cap.
    Ubc,
    /// Lower off-diagonals of the bottom cap.
    Lbc,
    /// Rows fixed to zero at the start of each top-cap run.
    MiscZero,
    /// Not addressed by any family; structurally zero.
    Outside,
    /// Solved from the commutation relations rather than a formula family.
    Oracle,
}

impl Region {
    pub fn as_str(&self) -> &'static str {
        match self {
            Region::Utc => "utc",
            Region::Ltc => "ltc",
            Region::Udm => "udm",
            Region::Ldm => "ldm",
            Region::Ubc => "ubc",
            Region::Lbc => "lbc",
            Region::MiscZero => "misc-zero",
            Region::Outside => "outside",
            Region::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sparse map from 1-based block position `(i, j)` to `u⁺₍ᵢⱼ₎²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Upc2Map {
    label: IrrepLabel,
    entries: BTreeMap<(usize, usize), (Rational, Region)>,
}

impl Upc2Map {
    pub(crate) fn from_values(label: IrrepLabel, values: BTreeMap<(usize, usize), Rational>, region: Region) -> Self {
        Self { label, entries: values.into_iter().map(|(k, v)| (k, (v, region))).collect() }
    }

    pub fn label(&self) -> IrrepLabel {
        self.label
    }

    /// Value at `(i, j)` if some family addresses it.
    pub fn get(&self, i: usize, j: usize) -> Option<&Rational> {
        self.entries.get(&(i, j)).map(|(v, _)| v)
    }

    pub fn region(&self, i: usize, j: usize) -> Region {
        self.entries.get(&(i, j)).map_or(Region::Outside, |(_, r)| *r)
    }

    /// All addressed positions, including those whose value is zero.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.entries.iter().map(|(k, (v, _))| (*k, v))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.iter().filter(|(_, v)| !v.is_zero())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

type Key = (usize, usize);

struct Families {
    label: IrrepLabel,
    doubled: Vec<u32>,
    early: Vec<(Key, Rational, Region)>,
    late: Vec<(Key, Rational, Region)>,
}

fn key(i: i64, j: i64) -> Key {
    (i as usize, j as usize)
}

impl Families {
    fn new(p: u32, q: u32) -> Result<Self> {
        let label = IrrepLabel::new(p, q);
        let doubled = tspin_list(p, q)?.doubled_spins().to_vec();
        let n = doubled.len() as i64;
        let n0 = |x: i64| n0(x as u32) as i64;
        let (p, q) = (p as i64, q as i64);
        let mut early = Vec::new();
        let mut late = Vec::new();

        for q1 in 1..q {
            for i in n0(q1)..=n0(q1 + 1) {
                let a = n0(q1 + 1) - i;
                let v = ratio(a, q1 + 1) * int((p + a + 1) * (q - a + 1));
                early.push((key(i, i + q1), v, Region::Utc));
            }
        }
        for q1 in 1..q {
            for j in n0(q1)..n0(q1 + 1) {
                let b = j - n0(q1);
                let v = ratio(b + 1, q1 * (q1 + 1)) * int((p - b) * (q + b + 2));
                early.push((key(j + q1 + 1, j), v, Region::Ltc));
            }
        }
        if q >= 1 {
            for i in n0(q)..=(n - q * (q + 1) / 2) {
                let m = (i - n0(q)).rem_euclid(q + 1);
                let f = (i - n0(q)).div_euclid(q + 1);
                let v = ratio(q - m, q + 1 + f) * int((p + q + 1 - m) * (1 + m));
                early.push((key(i, i + q), v, Region::Udm));
            }
        }

        for q1 in 1..=(q + 1) {
            for m in 1..n0(q1) {
                late.push((key(n0(q1), m), Rational::zero(), Region::MiscZero));
            }
        }
        for q1 in 1..q {
            let lo = n - n0(q1 + 1) - q1 + 1;
            let hi = n - n0(q1) - q1 + 1;
            for i in lo..=hi {
                let v = ratio(
                    (n0(q1 + 1) + i - n + q1 - 1)
                        * (q - q1 - n0(q1 + 1) + n + 2 - i)
                        * (p + q - q1 - n0(q1 + 1) + n + 3 - i),
                    p + q - q1 + 2,
                );
                late.push((key(i, i + q1), v, Region::Ubc));
            }
        }
        for q1 in 1..q {
            let lo = n - n0(q1 + 1) + 1 - q1;
            let hi = n - n0(q1) - q1;
            for j in lo..=hi {
                let v = ratio(
                    (n - q1 - n0(q1) + 1 - j) * (p - n + q1 + n0(q1) + j) * (p + q + j - n + q1 + n0(q1) + 1),
                    (p + q - q1 + 1) * (p + q - q1 + 2),
                );
                late.push((key(j + q1 + 1, j), v, Region::Lbc));
            }
        }
        if q == 1 {
            // The ltc family is empty for q = 1, and the ldm recursion would
            // divide by the spin-0 block.
            late.push((key(3, 1), ratio(p * (q + 2), 2), Region::Ltc));
        }
        Ok(Self { label, doubled, early, late })
    }

    /// Lower diagonal of the middle region, in increasing `j`.
    fn lower_diagonal(&self, known: &mut BTreeMap<Key, (Rational, Region)>) -> Result<()> {
        let (p, q) = (self.label.p as i64, self.label.q as i64);
        if q == 0 {
            for j in 1..=p {
                known.entry(key(j + 1, j)).or_insert((int(p - j + 1), Region::Ldm));
            }
            return Ok(());
        }
        let late: BTreeMap<Key, Rational> = {
            let mut m = BTreeMap::new();
            for (k, v, _) in &self.late {
                m.entry(*k).or_insert_with(|| v.clone());
            }
            m
        };
        let n0 = |x: i64| n0(x as u32) as i64;
        let start = n0(q) + if q == 1 { 1 } else { 0 };
        let end = n0(q) + (p - q + 2) * (q + 1) - 3;
        for j in start..=end {
            let k = key(j + q + 1, j);
            if known.contains_key(&k) {
                continue;
            }
            let shift = if j < n0(q + 1) { 0 } else { -1 };
            let ds = self.doubled[(j - 1) as usize] as i64;
            if ds == 0 {
                return Err(Su3Error::Consistency(format!("ldm recursion at j = {j} divides by a spin-0 block")));
            }
            let lookup = |i: i64, c: i64| -> Result<Rational> {
                if i < 1 || c < 1 {
                    return Ok(Rational::zero());
                }
                let k = key(i, c);
                if let Some((v, _)) = known.get(&k) {
                    return Ok(v.clone());
                }
                late.get(&k).cloned().ok_or_else(|| {
                    Su3Error::Consistency(format!(
                        "ldm recursion for ({},{}) references undefined block ({i},{c})",
                        j + q + 1,
                        j
                    ))
                })
            };
            let v = ldm_step(&lookup(j, j - q + shift)?, &lookup(j - q + 1 + shift, j)?, &lookup(j, j + q)?, ds);
            known.insert(k, (v, Region::Ldm));
        }
        Ok(())
    }
}

/// One step of the lower-diagonal recursion:
/// `−1 + lower + upper_near/(2s) − upper_far/(2s+1)`, with `doubled_spin = 2s`.
pub fn ldm_step(lower: &Rational, upper_near: &Rational, upper_far: &Rational, doubled_spin: i64) -> Rational {
    int(-1) + lower + upper_near / int(doubled_spin) - upper_far / int(doubled_spin + 1)
}

/// All squared block unknowns for `p >= q`.
pub fn upc2_map(p: u32, q: u32) -> Result<Upc2Map> {
    let families = Families::new(p, q)?;
    let mut entries: BTreeMap<Key, (Rational, Region)> = BTreeMap::new();
    for (k, v, r) in &families.early {
        entries.entry(*k).or_insert_with(|| (v.clone(), *r));
    }
    families.lower_diagonal(&mut entries)?;
    for (k, v, r) in &families.late {
        entries.entry(*k).or_insert_with(|| (v.clone(), *r));
    }
    let n = families.doubled.len();
    if let Some(((i, j), _)) = entries.iter().find(|((i, j), _)| *i > n || *j > n) {
        return Err(Su3Error::Consistency(format!("block ({i},{j}) lies outside the {n}×{n} block grid")));
    }
    if let Some(((i, j), (v, r))) = entries.iter().find(|(_, (v, _))| v.is_negative()) {
        return Err(Su3Error::Consistency(format!("negative square {v} at ({i},{j}) in region {r}")));
    }
    Ok(Upc2Map { label: families.label, entries })
}

/// Which family covers block `(i, j)`.
pub fn region_of(i: usize, j: usize, p: u32, q: u32) -> Result<Region> {
    Ok(upc2_map(p, q)?.region(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(m: &Upc2Map) -> BTreeMap<Key, Rational> {
        m.iter().map(|(k, v)| (k, v.clone())).collect()
    }

    #[test]
    fn two_zero() {
        let m = upc2_map(2, 0).unwrap();
        let expected: BTreeMap<_, _> = [((2, 1), int(2)), ((3, 2), int(1))].into();
        assert_eq!(values(&m), expected);
    }

    #[test]
    fn one_one() {
        let m = upc2_map(1, 1).unwrap();
        let nonzero_or_listed: BTreeMap<_, _> =
            m.iter().filter(|(k, _)| m.region(k.0, k.1) != Region::MiscZero).map(|(k, v)| (k, v.clone())).collect();
        let expected: BTreeMap<_, _> =
            [((1, 2), ratio(3, 2)), ((2, 3), int(0)), ((3, 4), int(1)), ((3, 1), ratio(3, 2)), ((4, 2), ratio(1, 2))]
                .into();
        assert_eq!(nonzero_or_listed, expected);
    }

    #[test]
    fn special_entry() {
        assert_eq!(upc2_map(3, 2).unwrap().get(3, 1), Some(&int(6)));
        assert_eq!(upc2_map(5, 1).unwrap().get(3, 1), Some(&ratio(15, 2)));
    }

    #[test]
    fn regions() {
        assert_eq!(region_of(2, 1, 2, 0).unwrap(), Region::Ldm);
        assert_eq!(region_of(1, 1, 4, 2).unwrap(), Region::Outside);
        assert_eq!(region_of(2, 1, 4, 2).unwrap(), Region::MiscZero);
        assert_eq!(region_of(3, 3, 4, 2).unwrap(), Region::Outside);
        assert_eq!(region_of(3, 1, 3, 2).unwrap(), Region::Ltc);
        for (p, q) in [(0, 0), (3, 0), (2, 1), (3, 3)] {
            for i in 2..=((p + 1) * (q + 1)) as usize {
                assert_ne!(region_of(i, i, p, q).unwrap(), Region::Ldm);
            }
        }
    }

    #[test]
    fn q_zero_recursion_matches_closed_form() {
        for p in 1..=10u32 {
            let m = upc2_map(p, 0).unwrap();
            for j in 2..=p as usize {
                let prev = m.get(j, j - 1).unwrap();
                // the two upper terms vanish for q = 0
                let stepped = ldm_step(prev, &int(0), &int(0), j as i64 - 1);
                assert_eq!(m.get(j + 1, j).unwrap(), &stepped, "p={p}, j={j}");
            }
        }
    }

    #[test]
    fn rejects_q_greater_than_p() {
        assert!(matches!(upc2_map(1, 2), Err(Su3Error::RequiresPGeQ { .. })));
    }
}
