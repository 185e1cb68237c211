//! Exact scalars: rationals and finite sums of rational multiples of square
//! roots of square-free integers.
//!
//! Every entry of a generator matrix lives in this ring. Square roots of
//! distinct square-free integers are linearly independent over the rationals,
//! so a [`RadicalSum`] in canonical form is zero exactly when it has no terms.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Su3Error;

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for `n/d` as a [`Rational`].
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `coefficient · √squarefree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadicalTerm {
    coefficient: Rational,
    squarefree: u64,
}

impl RadicalTerm {
    /// Builds a term, extracting square factors from `radicand` so the stored
    /// key is square-free.
    pub fn new(coefficient: Rational, radicand: u64) -> Self {
        if coefficient.is_zero() || radicand == 0 {
            return Self::zero();
        }
        let (outside, squarefree) = split_square(radicand as u128);
        Self { coefficient: coefficient * Rational::from_integer(BigInt::from(outside)), squarefree: squarefree as u64 }
    }

    pub fn zero() -> Self {
        Self { coefficient: Rational::zero(), squarefree: 1 }
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn squarefree(&self) -> u64 {
        self.squarefree
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.coefficient) * (self.squarefree as f64).sqrt()
    }
}

impl fmt::Display for RadicalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", RadicalSum::from(self.clone()))
    }
}

/// Returns the canonical term whose value is `√r`.
///
/// With `r = a/b` reduced, `√r = √(ab)/b`; the largest square `k²` dividing
/// `ab` is pulled out so the result is `(k/b)·√m` with `m` square-free.
pub fn sqrt_of_rational(r: &Rational) -> Result<RadicalTerm, Su3Error> {
    if r.is_negative() {
        return Err(Su3Error::NegativeRadicand(r.to_string()));
    }
    if r.is_zero() {
        return Ok(RadicalTerm::zero());
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let product: BigUint = num * den;
    let radicand = product.to_u128().ok_or_else(|| Su3Error::RadicandTooLarge(product.to_string()))?;
    let (outside, squarefree) = split_square(radicand);
    let squarefree = u64::try_from(squarefree).map_err(|_| Su3Error::RadicandTooLarge(squarefree.to_string()))?;
    Ok(RadicalTerm { coefficient: Rational::new(BigInt::from(outside), BigInt::from(den.clone())), squarefree })
}

/// Splits `n = k² · m` with `m` square-free, by trial division.
fn split_square(mut n: u128) -> (u128, u128) {
    let mut outside = 1u128;
    let mut squarefree = 1u128;
    let mut prime = 2u128;
    while prime * prime <= n {
        let mut count = 0u32;
        while n.is_multiple_of(prime) {
            n /= prime;
            count += 1;
        }
        outside *= prime.pow(count / 2);
        if count % 2 == 1 {
            squarefree *= prime;
        }
        prime += if prime == 2 { 1 } else { 2 };
    }
    (outside, squarefree * n)
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    // Ratio::to_f64 handles large numerators and denominators without overflow.
    r.to_f64().unwrap_or(f64::NAN)
}

/// A finite sum `Σ cₘ·√m` over distinct square-free keys `m`, kept sorted by
/// key with no zero coefficients. Structural equality is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    terms: Vec<(u64, Rational)>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from(Rational::one())
    }

    /// Builds a sum from arbitrary `(coefficient, radicand)` pairs. Radicands
    /// need not be square-free or distinct.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, u64)>,
    {
        terms.into_iter().map(|(c, m)| RadicalSum::from(RadicalTerm::new(c, m))).sum()
    }

    /// `√r` as a sum.
    pub fn sqrt(r: &Rational) -> Result<Self, Su3Error> {
        sqrt_of_rational(r).map(Self::from)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending order of square-free key.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational part when the value is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(1, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Floating-point evaluation, for display and diagnostics only.
    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(m, c)| rational_to_f64(c) * (*m as f64).sqrt()).sum()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, c)| (*m, c * factor)).collect() }
    }

    fn add_term(&mut self, key: u64, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.binary_search_by_key(&key, |(m, _)| *m) {
            Ok(pos) => {
                let merged = &self.terms[pos].1 + coefficient;
                if merged.is_zero() {
                    self.terms.remove(pos);
                } else {
                    self.terms[pos].1 = merged;
                }
            }
            Err(pos) => self.terms.insert(pos, (key, coefficient)),
        }
    }

    fn add_sorted(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ka, ca)), Some((kb, cb))) => {
                    if ka < kb {
                        out.push((*ka, ca.clone()));
                        a.next();
                    } else if kb < ka {
                        out.push((*kb, if negate { -cb } else { cb.clone() }));
                        b.next();
                    } else {
                        let c = if negate { ca - cb } else { ca + cb };
                        if !c.is_zero() {
                            out.push((*ka, c));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ka, ca)), None) => {
                    out.push((*ka, ca.clone()));
                    a.next();
                }
                (None, Some((kb, cb))) => {
                    out.push((*kb, if negate { -cb } else { cb.clone() }));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { terms: out }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                // √m·√n = g·√((m/g)(n/g)) with g = gcd(m, n); both quotients are
                // square-free and coprime, so their product is square-free.
                let g = m.gcd(n);
                let key = (m / g).checked_mul(n / g).expect("square-free key overflowed u64");
                let c = a * b * Rational::from_integer(BigInt::from(g));
                out.add_term(key, c);
            }
        }
        out
    }
}

impl From<Rational> for RadicalSum {
    fn from(r: Rational) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(1, r)] }
        }
    }
}

impl From<i64> for RadicalSum {
    fn from(n: i64) -> Self {
        Self::from(int(n))
    }
}

impl From<RadicalTerm> for RadicalSum {
    fn from(t: RadicalTerm) -> Self {
        if t.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(t.squarefree, t.coefficient)] }
        }
    }
}

impl Add<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        self.add_sorted(rhs, false)
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: RadicalSum) -> RadicalSum {
        &self + &rhs
    }
}

impl AddAssign<&RadicalSum> for RadicalSum {
    fn add_assign(&mut self, rhs: &RadicalSum) {
        if rhs.terms.len() == 1 {
            let (k, c) = &rhs.terms[0];
            self.add_term(*k, c.clone());
        } else {
            *self = self.add_sorted(rhs, false);
        }
    }
}

impl Sub<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        self.add_sorted(rhs, true)
    }
}

impl Sub for RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: RadicalSum) -> RadicalSum {
        &self - &rhs
    }
}

impl SubAssign<&RadicalSum> for RadicalSum {
    fn sub_assign(&mut self, rhs: &RadicalSum) {
        *self = self.add_sorted(rhs, true);
    }
}

impl Neg for &RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        RadicalSum { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        -&self
    }
}

impl Mul<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: &RadicalSum) -> RadicalSum {
        self.mul_ref(rhs)
    }
}

impl Mul for RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: RadicalSum) -> RadicalSum {
        self.mul_ref(&rhs)
    }
}

impl Sum for RadicalSum {
    fn sum<I: Iterator<Item = RadicalSum>>(iter: I) -> Self {
        let mut acc = RadicalSum::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            match (*m, magnitude.is_one()) {
                (1, _) => write!(f, "{magnitude}")?,
                (m, true) => write!(f, "√{m}")?,
                (m, false) => write!(f, "{magnitude}√{m}")?,
            }
        }
        Ok(())
    }
}
