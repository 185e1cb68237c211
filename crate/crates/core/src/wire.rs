//! Machine-readable output: JSON and CSV for matrices, weights and block
//! unknowns.
//!
//! A [`RadicalSum`] serializes as an array of `{num, den, sf}` integer
//! triples meaning `Σ (num/den)·√sf`, ascending by `sf`. Integers are written
//! at full precision.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Map, Number, Value};

use crate::error::{Result, Su3Error};
use crate::matrix::{ComplexMatrix, Matrix};
use crate::scalar::{RadicalSum, RadicalTerm, Rational};
use crate::unknowns::Upc2Map;

fn big_number(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

fn wire_err(msg: impl Into<String>) -> Su3Error {
    Su3Error::Wire(msg.into())
}

fn parse_big(v: &Value, field: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() || !n.to_string().contains(['.', 'e', 'E']) => {
            BigInt::from_str(&n.to_string()).map_err(|_| wire_err(format!("{field} is not an integer")))
        }
        _ => Err(wire_err(format!("{field} is not an integer"))),
    }
}

pub fn radsum_to_json(x: &RadicalSum) -> Value {
    Value::Array(
        x.terms()
            .map(|(sf, c)| {
                let mut m = Map::new();
                m.insert("num".into(), big_number(c.numer()));
                m.insert("den".into(), big_number(c.denom()));
                m.insert("sf".into(), json!(sf));
                Value::Object(m)
            })
            .collect(),
    )
}

/// Inverse of [`radsum_to_json`]. Only canonical input is accepted: reduced
/// fractions with positive denominators, square-free keys in strictly
/// ascending order, no zero coefficients.
pub fn radsum_from_json(v: &Value) -> Result<RadicalSum> {
    let items = v.as_array().ok_or_else(|| wire_err("expected an array of terms"))?;
    let mut out = RadicalSum::zero();
    let mut last_sf = 0u64;
    for item in items {
        let num = parse_big(item.get("num").ok_or_else(|| wire_err("missing num"))?, "num")?;
        let den = parse_big(item.get("den").ok_or_else(|| wire_err("missing den"))?, "den")?;
        let sf = item.get("sf").and_then(Value::as_u64).ok_or_else(|| wire_err("sf must be a positive integer"))?;
        if !den.is_positive() {
            return Err(wire_err("den must be positive"));
        }
        let c = Rational::new(num.clone(), den.clone());
        if c.numer() != &num || c.denom() != &den {
            return Err(wire_err(format!("{num}/{den} is not reduced")));
        }
        let canonical = RadicalTerm::new(Rational::one(), sf);
        if sf == 0 || canonical.squarefree() != sf {
            return Err(wire_err(format!("{sf} is not square-free")));
        }
        if sf <= last_sf {
            return Err(wire_err("terms must be in strictly ascending sf order"));
        }
        if c == Rational::from_integer(BigInt::from(0)) {
            return Err(wire_err("zero coefficient"));
        }
        last_sf = sf;
        out += &RadicalSum::from(RadicalTerm::new(c, sf));
    }
    Ok(out)
}

/// Header fields of a serialized matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixHeader {
    pub p: u32,
    pub q: u32,
    pub d: usize,
    pub name: String,
}

pub fn matrix_to_json(header: &MatrixHeader, m: &Matrix, approx: bool) -> Value {
    let entries: Vec<Value> = m
        .entries()
        .map(|(r, c, v)| {
            let mut e = Map::new();
            e.insert("row".into(), json!(r + 1));
            e.insert("col".into(), json!(c + 1));
            e.insert("value".into(), radsum_to_json(v));
            if approx {
                e.insert("approx".into(), json!(v.to_f64()));
            }
            Value::Object(e)
        })
        .collect();
    json!({"p": header.p, "q": header.q, "d": header.d, "matrix": header.name, "entries": entries})
}

pub fn complex_matrix_to_json(header: &MatrixHeader, m: &ComplexMatrix, approx: bool) -> Value {
    let mut cells: BTreeMap<(usize, usize), (RadicalSum, RadicalSum)> = BTreeMap::new();
    for (r, c, v) in m.re.entries() {
        cells.entry((r, c)).or_default().0 = v.clone();
    }
    for (r, c, v) in m.im.entries() {
        cells.entry((r, c)).or_default().1 = v.clone();
    }
    let entries: Vec<Value> = cells
        .into_iter()
        .map(|((r, c), (re, im))| {
            let mut e = Map::new();
            e.insert("row".into(), json!(r + 1));
            e.insert("col".into(), json!(c + 1));
            e.insert("value".into(), json!({"re": radsum_to_json(&re), "im": radsum_to_json(&im)}));
            if approx {
                e.insert("approx".into(), json!({"re": re.to_f64(), "im": im.to_f64()}));
            }
            Value::Object(e)
        })
        .collect();
    json!({"p": header.p, "q": header.q, "d": header.d, "matrix": header.name, "entries": entries})
}

fn header_from_json(v: &Value) -> Result<MatrixHeader> {
    let field = |k: &str| v.get(k).and_then(Value::as_u64).ok_or_else(|| wire_err(format!("missing {k}")));
    Ok(MatrixHeader {
        p: field("p")? as u32,
        q: field("q")? as u32,
        d: field("d")? as usize,
        name: v.get("matrix").and_then(Value::as_str).ok_or_else(|| wire_err("missing matrix"))?.to_string(),
    })
}

fn entry_position(e: &Value, d: usize) -> Result<(usize, usize)> {
    let idx = |k: &str| -> Result<usize> {
        let i = e.get(k).and_then(Value::as_u64).ok_or_else(|| wire_err(format!("missing {k}")))? as usize;
        if i == 0 || i > d {
            return Err(wire_err(format!("{k} {i} out of range 1..={d}")));
        }
        Ok(i - 1)
    };
    Ok((idx("row")?, idx("col")?))
}

/// Parses the output of [`matrix_to_json`].
pub fn matrix_from_json(v: &Value) -> Result<(MatrixHeader, Matrix)> {
    let header = header_from_json(v)?;
    let mut m = Matrix::zeros(header.d);
    for e in v.get("entries").and_then(Value::as_array).ok_or_else(|| wire_err("missing entries"))? {
        let (r, c) = entry_position(e, header.d)?;
        m.set(r, c, radsum_from_json(e.get("value").ok_or_else(|| wire_err("missing value"))?)?);
    }
    Ok((header, m))
}

/// Parses the output of [`complex_matrix_to_json`].
pub fn complex_matrix_from_json(v: &Value) -> Result<(MatrixHeader, ComplexMatrix)> {
    let header = header_from_json(v)?;
    let (mut re, mut im) = (Matrix::zeros(header.d), Matrix::zeros(header.d));
    for e in v.get("entries").and_then(Value::as_array).ok_or_else(|| wire_err("missing entries"))? {
        let (r, c) = entry_position(e, header.d)?;
        let value = e.get("value").ok_or_else(|| wire_err("missing value"))?;
        re.set(r, c, radsum_from_json(value.get("re").ok_or_else(|| wire_err("missing re"))?)?);
        im.set(r, c, radsum_from_json(value.get("im").ok_or_else(|| wire_err("missing im"))?)?);
    }
    Ok((header, ComplexMatrix { re, im }))
}

fn push_terms(out: &mut String, prefix: &str, v: &RadicalSum, approx: bool) {
    for (sf, c) in v.terms() {
        let _ = write!(out, "{prefix},{},{},{sf}", c.numer(), c.denom());
        if approx {
            let _ = write!(out, ",{}", v.to_f64());
        }
        out.push('\n');
    }
}

/// `row,col,num,den,sf`, one line per radical term.
pub fn matrix_to_csv(m: &Matrix, approx: bool) -> String {
    let mut out = String::from(if approx { "row,col,num,den,sf,approx\n" } else { "row,col,num,den,sf\n" });
    for (r, c, v) in m.entries() {
        push_terms(&mut out, &format!("{},{}", r + 1, c + 1), v, approx);
    }
    out
}

/// `row,col,part,num,den,sf` with `part` one of `re`/`im`.
pub fn complex_matrix_to_csv(m: &ComplexMatrix, approx: bool) -> String {
    let mut out = String::from(if approx { "row,col,part,num,den,sf,approx\n" } else { "row,col,part,num,den,sf\n" });
    let mut rows: Vec<(usize, usize, u8, &RadicalSum)> =
        m.re.entries().map(|(r, c, v)| (r, c, 0u8, v)).chain(m.im.entries().map(|(r, c, v)| (r, c, 1u8, v))).collect();
    rows.sort_by_key(|(r, c, part, _)| (*r, *c, *part));
    for (r, c, part, v) in rows {
        let label = if part == 0 { "re" } else { "im" };
        push_terms(&mut out, &format!("{},{},{label}", r + 1, c + 1), v, approx);
    }
    out
}

pub fn weights_to_csv(weights: &BTreeMap<(i64, i64), usize>) -> String {
    let mut out = String::from("two_t3,three_y,count\n");
    for ((t, y), n) in weights {
        let _ = writeln!(out, "{t},{y},{n}");
    }
    out
}

/// `i,j,num,den` for every addressed block, in `(i, j)` order.
pub fn unknowns_to_csv(map: &Upc2Map) -> String {
    let mut out = String::from("i,j,num,den\n");
    for ((i, j), v) in map.iter() {
        let _ = writeln!(out, "{i},{j},{},{}", v.numer(), v.denom());
    }
    out
}
