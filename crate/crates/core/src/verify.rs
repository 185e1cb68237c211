//! Exact verification of generator sets: the 28 commutation relations, the
//! quadratic Casimir, hermiticity/reality of the `Fⁱ`, plus a sweep driver.
//!
//! Every check is an exact zero test on [`RadicalSum`] residuals; the float
//! residual recorded alongside is diagnostic only.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::Result;
use crate::generators::{build_generator_set, GellMannSet, GeneratorSet};
use crate::matrix::Matrix;
use crate::oracle::oracle_solve;
use crate::scalar::{int, ratio, RadicalSum, Rational};
use crate::structure::{dimension, IrrepLabel};
use crate::unknowns::{upc2_map, Upc2Map};

/// Outcome of one relation.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationCheck {
    pub name: String,
    pub exact_zero: bool,
    pub float_residual: f64,
    pub detail: Option<String>,
}

impl RelationCheck {
    fn from_residual(name: impl Into<String>, residual: &Matrix) -> Self {
        Self { name: name.into(), exact_zero: residual.is_zero(), float_residual: residual.max_abs_f64(), detail: None }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub label: IrrepLabel,
    pub relations: Vec<RelationCheck>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        !self.relations.is_empty() && self.relations.iter().all(|r| r.exact_zero)
    }

    pub fn pass_count(&self) -> usize {
        self.relations.iter().filter(|r| r.exact_zero).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.relations.iter().filter(|r| !r.exact_zero)
    }
}

/// The 28 commutators `[A, B]` with their expected values, in the order the
/// generators are listed as `T³,T±,U±,U³,V±`.
pub fn check_commutators(gs: &GeneratorSet) -> CheckReport {
    let (tp, tm, t3) = (&gs.t_plus, &gs.t_minus, &gs.t_three);
    let (up, um, u3) = (&gs.u_plus, &gs.u_minus, &gs.u_three);
    let (vp, vm) = (&gs.v_plus, &gs.v_minus);
    let zero = Matrix::zeros(gs.dim());
    let half = ratio(1, 2);
    let s = |m: &Matrix, k: Rational| m.scale(&k);

    let relations: Vec<(&str, &Matrix, &Matrix, Matrix)> = vec![
        ("[T3,Tp] = Tp", t3, tp, tp.clone()),
        ("[T3,Tm] = -Tm", t3, tm, tm.neg()),
        ("[T3,Up] = -1/2 Up", t3, up, s(up, -&half)),
        ("[T3,Um] = 1/2 Um", t3, um, s(um, half.clone())),
        ("[T3,U3] = 0", t3, u3, zero.clone()),
        ("[T3,Vp] = 1/2 Vp", t3, vp, s(vp, half.clone())),
        ("[T3,Vm] = -1/2 Vm", t3, vm, s(vm, -&half)),
        ("[Tp,Tm] = 2 T3", tp, tm, s(t3, int(2))),
        ("[Tp,Up] = Vp", tp, up, vp.clone()),
        ("[Tp,Um] = 0", tp, um, zero.clone()),
        ("[Tp,U3] = 1/2 Tp", tp, u3, s(tp, half.clone())),
        ("[Tp,Vp] = 0", tp, vp, zero.clone()),
        ("[Tp,Vm] = -Um", tp, vm, um.neg()),
        ("[Tm,Up] = 0", tm, up, zero.clone()),
        ("[Tm,Um] = -Vm", tm, um, vm.neg()),
        ("[Tm,U3] = -1/2 Tm", tm, u3, s(tm, -&half)),
        ("[Tm,Vp] = Up", tm, vp, up.clone()),
        ("[Tm,Vm] = 0", tm, vm, zero.clone()),
        ("[U3,Up] = Up", u3, up, up.clone()),
        ("[U3,Um] = -Um", u3, um, um.neg()),
        ("[U3,Vp] = 1/2 Vp", u3, vp, s(vp, half.clone())),
        ("[U3,Vm] = -1/2 Vm", u3, vm, s(vm, -&half)),
        ("[Up,Um] = 2 U3", up, um, s(u3, int(2))),
        ("[Up,Vp] = 0", up, vp, zero.clone()),
        ("[Up,Vm] = Tm", up, vm, tm.clone()),
        ("[Um,Vp] = -Tp", um, vp, tp.neg()),
        ("[Um,Vm] = 0", um, vm, zero.clone()),
        ("[Vp,Vm] = 2 U3 + 2 T3", vp, vm, s(&u3.add(t3), int(2))),
    ];
    CheckReport {
        label: gs.label,
        relations: relations
            .into_iter()
            .map(|(name, a, b, expected)| RelationCheck::from_residual(name, &a.commutator(b).sub(&expected)))
            .collect(),
    }
}

/// `(p² + pq + q²)/3 + p + q`.
pub fn casimir_eigenvalue(label: IrrepLabel) -> Rational {
    ratio(label.casimir_times_three() as i64, 3)
}

/// The quadratic Casimir in ladder form must equal the eigenvalue times the
/// identity, as a full matrix identity.
pub fn check_casimir(gs: &GeneratorSet, p: u32, q: u32) -> RelationCheck {
    let half = ratio(1, 2);
    let anti = |a: &Matrix, b: &Matrix| a.mul(b).add(&b.mul(a)).scale(&half);
    let y_like = gs.u_three.scale(&int(2)).add(&gs.t_three);
    let casimir = anti(&gs.t_plus, &gs.t_minus)
        .add(&gs.t_three.mul(&gs.t_three))
        .add(&anti(&gs.v_plus, &gs.v_minus))
        .add(&anti(&gs.u_plus, &gs.u_minus))
        .add(&y_like.mul(&y_like).scale(&ratio(1, 3)));
    let eigenvalue = casimir_eigenvalue(IrrepLabel::new(p, q));
    let residual = casimir.sub(&Matrix::scalar(gs.dim(), &RadicalSum::from(eigenvalue.clone())));
    let mut check = RelationCheck::from_residual("casimir", &residual);
    check.detail = Some(format!("eigenvalue {eigenvalue}"));
    check
}

/// Each `Fⁱ` hermitian and traceless; `F¹,F³,F⁴,F⁶,F⁸` real and `F²,F⁵,F⁷`
/// pure imaginary.
pub fn check_structure(fs: &GellMannSet) -> RelationCheck {
    let mut problems = Vec::new();
    for (idx, f) in fs.f.iter().enumerate() {
        let n = idx + 1;
        if !f.is_hermitian() {
            problems.push(format!("F{n} not hermitian"));
        }
        let (tr_re, tr_im) = f.trace();
        if !tr_re.is_zero() || !tr_im.is_zero() {
            problems.push(format!("F{n} not traceless"));
        }
        let imaginary = matches!(n, 2 | 5 | 7);
        if imaginary && !f.re.is_zero() {
            problems.push(format!("F{n} has a real part"));
        }
        if !imaginary && !f.im.is_zero() {
            problems.push(format!("F{n} has an imaginary part"));
        }
    }
    RelationCheck {
        name: "structure".into(),
        exact_zero: problems.is_empty(),
        float_residual: 0.0,
        detail: (!problems.is_empty()).then(|| problems.join("; ")),
    }
}

/// Compares oracle squares with the closed-form squares on the admissible
/// blocks. Every block the oracle solves must agree, and the closed form may
/// carry no nonzero value the oracle does not know about.
pub fn compare_with_oracle(formula: &Upc2Map, oracle: &Upc2Map) -> std::result::Result<usize, String> {
    let mut mismatches = Vec::new();
    for ((i, j), v) in oracle.iter() {
        let f = formula.get(i, j).cloned().unwrap_or_default();
        if &f != v {
            mismatches.push(format!("({i},{j}): formula {f}, oracle {v}"));
        }
    }
    for ((i, j), v) in formula.nonzero() {
        if oracle.get(i, j).is_none() {
            mismatches.push(format!("({i},{j}): formula {v} outside oracle support"));
        }
    }
    if mismatches.is_empty() {
        Ok(oracle.len())
    } else {
        Err(mismatches.join("; "))
    }
}

/// Commutators, Casimir and structure for one irrep, optionally with the
/// oracle comparison appended as an extra relation.
pub fn verify_irrep(p: u32, q: u32, with_oracle: bool) -> Result<CheckReport> {
    let gs = build_generator_set(p, q)?;
    let mut report = check_commutators(&gs);
    report.relations.push(check_casimir(&gs, p, q));
    report.relations.push(check_structure(&gs.to_gell_mann()));
    if with_oracle {
        let (sp, sq) = if p >= q { (p, q) } else { (q, p) };
        let check = match oracle_solve(sp, sq) {
            Ok(solved) => match compare_with_oracle(&upc2_map(sp, sq)?, &solved) {
                Ok(n) => RelationCheck {
                    name: "oracle".into(),
                    exact_zero: true,
                    float_residual: 0.0,
                    detail: Some(format!("{n} blocks agree")),
                },
                Err(detail) => RelationCheck {
                    name: "oracle".into(),
                    exact_zero: false,
                    float_residual: f64::NAN,
                    detail: Some(detail),
                },
            },
            Err(e) => RelationCheck {
                name: "oracle".into(),
                exact_zero: false,
                float_residual: f64::NAN,
                detail: Some(e.to_string()),
            },
        };
        report.relations.push(check);
    }
    Ok(report)
}

/// One row of a sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub label: IrrepLabel,
    pub d: u64,
    pub commutators: bool,
    pub casimir: bool,
    pub structure: bool,
    pub oracle: Option<bool>,
    pub millis: u128,
    pub error: Option<String>,
}

impl SweepRow {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.commutators && self.casimir && self.structure && self.oracle.unwrap_or(true)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSummary {
    pub rows: Vec<SweepRow>,
}

impl SweepSummary {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(SweepRow::passed)
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p,q,d,commutators,casimir,structure,ms")?;
        for r in &self.rows {
            writeln!(
                f,
                "{},{},{},{},{},{},{}",
                r.label.p,
                r.label.q,
                r.d,
                pass_word(r.commutators),
                pass_word(r.casimir),
                pass_word(r.structure),
                r.millis
            )?;
        }
        Ok(())
    }
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

/// Irreps with `p >= q` and `d < max_d`, ordered by `(p, q)`.
pub fn standard_irreps_below(max_d: u64) -> Vec<IrrepLabel> {
    let mut out = Vec::new();
    for p in 0u32.. {
        if dimension(p, 0) >= max_d {
            break;
        }
        for q in 0..=p {
            if dimension(p, q) < max_d {
                out.push(IrrepLabel::new(p, q));
            }
        }
    }
    out
}

fn sweep_one(label: IrrepLabel, with_oracle: bool) -> SweepRow {
    let start = Instant::now();
    let report = verify_irrep(label.p, label.q, with_oracle);
    let millis = start.elapsed().as_millis();
    let d = label.dimension();
    match report {
        Ok(report) => {
            let find = |name: &str| report.relations.iter().find(|r| r.name == name).map(|r| r.exact_zero);
            SweepRow {
                label,
                d,
                commutators: report.relations.iter().take(28).all(|r| r.exact_zero),
                casimir: find("casimir").unwrap_or(false),
                structure: find("structure").unwrap_or(false),
                oracle: find("oracle"),
                millis,
                error: None,
            }
        }
        Err(e) => SweepRow {
            label,
            d,
            commutators: false,
            casimir: false,
            structure: false,
            oracle: None,
            millis,
            error: Some(e.to_string()),
        },
    }
}

/// Checks every `p >= q` irrep with `d < max_d`, then the conjugates `(q, p)`
/// of those with `p > q` and `d < 64` as negative-transpose spot checks.
/// Rows come back in deterministic order regardless of `jobs`.
pub fn sweep(max_d: u64, jobs: usize, with_oracle: bool) -> SweepSummary {
    let mut labels = standard_irreps_below(max_d);
    let conjugates: Vec<_> =
        labels.iter().filter(|l| l.p > l.q && l.dimension() < 64).map(IrrepLabel::conjugate).collect();
    labels.extend(conjugates);
    let oracle_for =
        |l: &IrrepLabel| with_oracle && l.is_standard() && l.dimension() <= crate::oracle::ORACLE_MAX_DIMENSION;
    let rows = match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(|| labels.par_iter().map(|l| sweep_one(*l, oracle_for(l))).collect()),
        Err(_) => labels.iter().map(|l| sweep_one(*l, oracle_for(l))).collect(),
    };
    SweepSummary { rows }
}
