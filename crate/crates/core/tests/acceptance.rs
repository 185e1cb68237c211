//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance` (add `--release` for
//! representative timings).

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use su3_irrep::matrix::{ComplexMatrix, Matrix};
use su3_irrep::scalar::{int, ratio};
use su3_irrep::verify::{casimir_eigenvalue, compare_with_oracle, standard_irreps_below};
use su3_irrep::{
    build_generator_set, check_casimir, check_commutators, oracle_solve, state_labels, sweep, tspin_list, u3_lead_list,
    upc2_map, verify_irrep, GeneratorName, IrrepLabel, RadicalSum, RadicalTerm, Rational,
};

type Outcome = Result<String, String>;
type Corruption = (&'static str, fn(&RadicalSum) -> RadicalSum);
type Criterion = (u32, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn surd(coeff: Rational, radicand: u64) -> RadicalSum {
    RadicalSum::from(RadicalTerm::new(coeff, radicand))
}

/// The textbook fundamental generators, half the Gell-Mann matrices.
fn textbook_fundamental() -> Vec<ComplexMatrix> {
    let half = || RadicalSum::from(ratio(1, 2));
    let real = |cells: &[(usize, usize, RadicalSum)]| {
        let mut m = Matrix::zeros(3);
        for (r, c, v) in cells {
            m.set(*r, *c, v.clone());
        }
        m
    };
    let sym = |a: usize, b: usize| ComplexMatrix::real(real(&[(a, b, half()), (b, a, half())]));
    let antisym = |a: usize, b: usize| ComplexMatrix::imaginary(real(&[(a, b, -half()), (b, a, half())]));
    let f3 = ComplexMatrix::real(real(&[(0, 0, half()), (1, 1, -half())]));
    // 1/(2√3) = √3/6
    let f8 = ComplexMatrix::real(real(&[
        (0, 0, surd(ratio(1, 6), 3)),
        (1, 1, surd(ratio(1, 6), 3)),
        (2, 2, surd(ratio(-1, 3), 3)),
    ]));
    vec![sym(0, 1), antisym(0, 1), f3, sym(0, 2), antisym(0, 2), sym(1, 2), antisym(1, 2), f8]
}

fn permutations3() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn fundamental_golden() -> Outcome {
    let start = Instant::now();
    let f = build_generator_set(1, 0).map_err(|e| e.to_string())?.to_gell_mann();
    let golden = textbook_fundamental();
    let matches: Vec<[usize; 3]> =
        permutations3().into_iter().filter(|perm| (1..=8).all(|i| f.get(i).permuted(perm) == golden[i - 1])).collect();
    within(start.elapsed(), Duration::from_secs(1))?;
    ensure(matches.len() == 1, || format!("{} permutations match", matches.len()))?;
    let perm = matches[0].map(|k| k + 1);
    Ok(format!("all 8 matrices equal under state map 1,2,3 -> {},{},{}", perm[0], perm[1], perm[2]))
}

fn three_two_case() -> Outcome {
    let start = Instant::now();
    let report = verify_irrep(3, 2, false).map_err(|e| e.to_string())?;
    let label = IrrepLabel::new(3, 2);
    ensure(label.dimension() == 42, || format!("d = {}", label.dimension()))?;
    let exact = report.relations[..28].iter().filter(|r| r.exact_zero).count();
    ensure(exact == 28, || format!("{exact}/28 commutators exact"))?;
    let casimir = report.relations.iter().find(|r| r.name == "casimir").ok_or("no casimir check")?;
    ensure(casimir.exact_zero, || "casimir not proportional to identity".into())?;
    let eigen = casimir_eigenvalue(label);
    ensure(eigen == ratio(34, 3), || format!("eigenvalue {eigen}"))?;
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("d = 42, 28/28 commutators exact, Casimir = {eigen} · I"))
}

fn full_sweep() -> Outcome {
    let start = Instant::now();
    let jobs = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let summary = sweep(300, jobs, false);
    let standard: Vec<_> = summary.rows.iter().filter(|r| r.label.is_standard()).collect();
    let expected = standard_irreps_below(300).len();
    ensure(standard.len() == expected, || format!("{} of {expected} irreps checked", standard.len()))?;
    let failed: Vec<String> = summary.rows.iter().filter(|r| !r.passed()).map(|r| r.label.to_string()).collect();
    ensure(failed.is_empty(), || format!("failures: {}", failed.join(" ")))?;
    within(start.elapsed(), Duration::from_secs(600))?;
    Ok(format!(
        "{} irreps with p >= q and d < 300 (+{} conjugates) exact, {:.1?}",
        standard.len(),
        summary.rows.len() - standard.len(),
        start.elapsed()
    ))
}

fn structure_fixtures() -> Outcome {
    let spins = tspin_list(5, 3).map_err(|e| e.to_string())?;
    ensure(spins.top_cap() == [0, 1, 1, 2, 2, 2], || format!("top cap {:?}", spins.top_cap()))?;
    ensure(spins.middle() == [3, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5], || format!("middle {:?}", spins.middle()))?;
    ensure(spins.bottom_cap() == [6, 6, 6, 7, 7, 8], || format!("bottom cap {:?}", spins.bottom_cap()))?;
    // The printed combined list repeats 4 five times, giving 25 entries
    // against the stated count of 24; dropping one 4 gives ours.
    let mut combined = vec![0, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 5, 6, 6, 6, 7, 7, 8];
    combined.remove(10);
    ensure(spins.doubled_spins() == combined.as_slice(), || "combined list differs".into())?;

    let leads = u3_lead_list(5, 3).map_err(|e| e.to_string())?;
    let expected: Vec<i64> =
        [&[-2, -4, -1, -6, -3, 0][..], &[-8, -5, -2, 1, -7, -4, -1, 2, -6, -3, 0, 3], &[-5, -2, 1, -4, -1, -3]]
            .concat();
    ensure(leads == expected, || format!("leads {leads:?}"))?;

    // Row Y = −4/3, i.e. 3Y = −4, counted along increasing T³.
    let mut row: Vec<(i64, usize)> = Vec::new();
    for s in state_labels(5, 3) {
        let (two_t3, three_y) = s.weight();
        if three_y == -4 {
            match row.iter_mut().find(|(t, _)| *t == two_t3) {
                Some(e) => e.1 += 1,
                None => row.push((two_t3, 1)),
            }
        }
    }
    row.sort();
    let profile: Vec<usize> = row.iter().map(|(_, n)| *n).collect();
    let total: usize = profile.iter().sum();
    ensure(total == 16 && profile == [1, 2, 3, 4, 3, 2, 1], || format!("row profile {profile:?}, {total} states"))?;
    Ok("T-spin regions 6+12+6, 24 lead components, Y = -4/3 row 1,2,3,4,3,2,1 (16 states)".into())
}

fn appendix_table() -> Outcome {
    let table: [((u32, u32), Rational); 15] = [
        ((1, 1), ratio(3, 2)),
        ((2, 1), int(3)),
        ((3, 1), ratio(9, 2)),
        ((4, 1), int(6)),
        ((5, 1), ratio(15, 2)),
        ((2, 2), int(4)),
        ((3, 2), int(6)),
        ((4, 2), int(8)),
        ((5, 2), int(10)),
        ((6, 2), int(12)),
        ((3, 3), ratio(15, 2)),
        ((4, 3), int(10)),
        ((5, 3), ratio(25, 2)),
        ((4, 4), int(12)),
        ((5, 4), int(15)),
    ];
    for ((p, q), want) in &table {
        let map = upc2_map(*p, *q).map_err(|e| e.to_string())?;
        let got = map.get(3, 1).cloned().unwrap_or_else(Rational::zero);
        ensure(&got == want, || format!("({p},{q}): u²(3,1) = {got}, table {want}"))?;
        let closed = ratio(i64::from(*p) * (i64::from(*q) + 2), 2);
        ensure(got == closed, || format!("({p},{q}): u²(3,1) = {got}, p(q+2)/2 = {closed}"))?;
    }
    Ok(format!("u²(3,1) matches all {} table entries and p(q+2)/2", table.len()))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let labels: Vec<IrrepLabel> = standard_irreps_below(65);
    let mut blocks = 0;
    for l in &labels {
        let solved = oracle_solve(l.p, l.q).map_err(|e| format!("{l}: {e}"))?;
        let formula = upc2_map(l.p, l.q).map_err(|e| format!("{l}: {e}"))?;
        blocks += compare_with_oracle(&formula, &solved).map_err(|e| format!("{l}: {e}"))?;
    }
    within(start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("{} irreps with d <= 64, {blocks} blocks agree exactly, {:.1?}", labels.len(), start.elapsed()))
}

fn conjugate_irreps() -> Outcome {
    let mut notes = Vec::new();
    for (p, q) in [(0, 1), (1, 2), (2, 3), (3, 5)] {
        let gs = build_generator_set(p, q).map_err(|e| e.to_string())?;
        let report = check_commutators(&gs);
        ensure(report.relations.len() == 28 && report.passed(), || {
            format!("({p},{q}): {}/28 commutators exact", report.pass_count())
        })?;
        ensure(check_casimir(&gs, p, q).exact_zero, || format!("({p},{q}): Casimir"))?;
        ensure(gs.negative_transpose().negative_transpose() == gs, || format!("({p},{q}): not an involution"))?;
        let standard = build_generator_set(q, p).map_err(|e| e.to_string())?;
        ensure(standard.negative_transpose() == gs, || format!("({p},{q}) != -({q},{p})ᵀ"))?;
        notes.push(format!("({p},{q})"));
    }
    Ok(format!("{}: 28/28 commutators, double negative transpose is identity", notes.join(" ")))
}

fn negative_controls() -> Outcome {
    let clean = build_generator_set(2, 1).map_err(|e| e.to_string())?;
    ensure(check_commutators(&clean).passed(), || "uncorrupted (2,1) fails".into())?;
    let entries: Vec<(usize, usize, RadicalSum)> = clean.u_plus.entries().map(|(r, c, v)| (r, c, v.clone())).collect();
    ensure(!entries.is_empty(), || "U+ has no entries".into())?;
    let corruptions: [Corruption; 4] = [
        ("zeroed", |_| RadicalSum::zero()),
        ("doubled", |v| v.scale(&int(2))),
        ("negated", |v| -v.clone()),
        ("shifted", |v| v.clone() + RadicalSum::from(ratio(1, 7))),
    ];
    let mut cases = 0;
    for (r, c, v) in &entries {
        for (kind, corrupt) in &corruptions {
            // Once with U⁻ left alone, once with U⁻ kept as the transpose.
            for keep_transpose in [false, true] {
                let mut gs = clean.clone();
                gs.matrix_mut(GeneratorName::UPlus).set(*r, *c, corrupt(v));
                if keep_transpose {
                    gs.u_minus = gs.u_plus.transpose();
                }
                let report = check_commutators(&gs);
                ensure(!report.passed() && report.pass_count() < 28, || {
                    format!("{kind} U+({},{}) passes", r + 1, c + 1)
                })?;
                cases += 1;
            }
        }
    }
    let mut empty = check_commutators(&clean);
    empty.relations.clear();
    ensure(!empty.passed(), || "an empty report counts as success".into())?;
    Ok(format!("{} nonzero U+ entries, {cases} corrupted sets all rejected, empty report rejected", entries.len()))
}

fn radical_sum() -> impl Strategy<Value = RadicalSum> {
    let term = (-12i64..=12, 1i64..=6, prop::sample::select(vec![1u64, 2, 3, 5, 6, 7, 8, 10, 12, 15, 18, 30]));
    prop::collection::vec(term, 0..4).prop_map(|terms| terms.into_iter().map(|(n, d, m)| surd(ratio(n, d), m)).sum())
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * (1.0 + a.abs().max(b.abs()))
}

#[allow(clippy::eq_op)]
fn ring_laws() -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 10_000, failure_persistence: None, ..Config::default() });
    let result = runner.run(&(radical_sum(), radical_sum(), radical_sum()), |(a, b, c)| {
        let zero = RadicalSum::zero();
        let one = RadicalSum::one();
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert!((&a * &zero).is_zero());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-a.clone())).is_zero());
        prop_assert!(close((&a * &b).to_f64(), a.to_f64() * b.to_f64()));
        prop_assert!(close((&a + &b).to_f64(), a.to_f64() + b.to_f64()));
        Ok(())
    });
    result.map_err(|e| e.to_string())?;

    // Constructed cancellations: a·√m − a·√m in several spellings.
    let mut runner = TestRunner::new(Config { cases: 2_000, failure_persistence: None, ..Config::default() });
    let cancel = runner.run(&(-50i64..=50, 1i64..=20, 1u64..=2000, 1u64..=40), |(n, d, m, k)| {
        let a = ratio(n, d);
        let x = surd(a.clone(), m);
        prop_assert!((&x - &x).is_zero());
        // √(k²m) = k√m
        let scaled = surd(a.clone(), k * k * m) - surd(&a * int(k as i64), m);
        prop_assert!(scaled.is_zero(), "√(k²m) vs k√m: {}", scaled);
        // (√m)² = m
        let root = surd(int(1), m);
        prop_assert_eq!(&root * &root, RadicalSum::from(int(m as i64)));
        if n != 0 {
            prop_assert!(!x.is_zero());
        }
        Ok::<(), TestCaseError>(())
    });
    cancel.map_err(|e| e.to_string())?;
    let mixed = surd(int(1), 2) * surd(int(1), 6) - surd(int(2), 3);
    ensure(mixed.is_zero(), || format!("√2·√6 − 2√3 = {mixed}"))?;
    Ok("10000 ring-law cases, 2000 cancellation cases, no false nonzeros".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "fundamental rep golden test", fundamental_golden),
        (2, "(3,2) reproduction", three_two_case),
        (3, "full sweep d < 300", full_sweep),
        (4, "(5,3) structural fixtures", structure_fixtures),
        (5, "u²(3,1) table", appendix_table),
        (6, "oracle equivalence d <= 64", oracle_equivalence),
        (7, "q > p irreps", conjugate_irreps),
        (8, "negative controls", negative_controls),
        (9, "exact scalar properties", ring_laws),
    ];
    let mut failures = 0;
    for (n, name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {n} {name}: {detail} [{elapsed:.2?}]"),
            Err(detail) => {
                failures += 1;
                println!("FAIL {n} {name}: {detail} [{elapsed:.2?}]");
            }
        }
    }
    println!("{}/9 criteria pass", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
