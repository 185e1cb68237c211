//! Standard spin-`s` ladder coefficients and the matrices that fill the
//! diagonal blocks of T⁺, T⁻ and T³. Rows and columns run from σ = s down to
//! σ = −s.

use crate::error::{Result, Su3Error};
use crate::matrix::Matrix;
use crate::scalar::{ratio, sqrt_of_rational, RadicalSum, RadicalTerm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpinKind {
    Plus,
    Minus,
    Three,
}

/// `r⁺(s,σ) = √((s−σ)(s+σ+1))` or `r⁻(s,σ) = √((s+σ)(s−σ+1))`.
/// `kind` must be `Plus` or `Minus`.
pub fn ladder_coefficient(kind: SpinKind, doubled_spin: u32, doubled_sigma: i64) -> Result<RadicalTerm> {
    let ds = doubled_spin as i64;
    if doubled_sigma.abs() > ds || (ds - doubled_sigma) % 2 != 0 {
        return Err(Su3Error::InvalidSpin { doubled_spin, doubled_sigma });
    }
    // (2s ∓ 2σ)(2s ± 2σ + 2) / 4
    let product = match kind {
        SpinKind::Plus => (ds - doubled_sigma) * (ds + doubled_sigma + 2),
        SpinKind::Minus => (ds + doubled_sigma) * (ds - doubled_sigma + 2),
        SpinKind::Three => return Err(Su3Error::Consistency("ladder coefficient requested for T³".into())),
    };
    sqrt_of_rational(&ratio(product, 4))
}

/// The `(2s+1)×(2s+1)` spin matrix of the given kind.
pub fn spin_block(kind: SpinKind, doubled_spin: u32) -> Matrix {
    let size = doubled_spin as usize + 1;
    let ds = doubled_spin as i64;
    let sigma = |a: usize| ds - 2 * a as i64;
    let mut m = Matrix::zeros(size);
    for a in 0..size {
        match kind {
            // row σ+1, column σ
            SpinKind::Plus if a + 1 < size => {
                let coeff = ladder_coefficient(kind, doubled_spin, sigma(a + 1)).expect("valid σ");
                m.set(a, a + 1, coeff.into());
            }
            SpinKind::Minus if a + 1 < size => {
                let coeff = ladder_coefficient(kind, doubled_spin, sigma(a)).expect("valid σ");
                m.set(a + 1, a, coeff.into());
            }
            SpinKind::Three => m.set(a, a, RadicalSum::from(ratio(sigma(a), 2))),
            _ => {}
        }
    }
    m
}
