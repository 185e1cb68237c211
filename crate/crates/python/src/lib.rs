//! Python bindings. Exact values cross the boundary as Python integers and
//! `fractions.Fraction`; a radical sum is a list of `(num, den, sf)` triples.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use su3_irrep::generators::gell_mann_index;
use su3_irrep::{self as core, ComplexMatrix, GeneratorName, Matrix, RadicalSum, Rational, Su3Error};

type Terms = Vec<(BigInt, BigInt, u64)>;

fn value_error(e: Su3Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn terms(x: &RadicalSum) -> Terms {
    x.terms().map(|(sf, c)| (c.numer().clone(), c.denom().clone(), sf)).collect()
}

fn upc2_dict(map: &core::Upc2Map) -> BTreeMap<(usize, usize), Rational> {
    map.iter().map(|(k, v)| (k, v.clone())).collect()
}

#[pyfunction]
fn dimension(p: u32, q: u32) -> u64 {
    core::dimension(p, q)
}

/// Doubled T-spins `2s` in block order (requires p >= q).
#[pyfunction]
fn tspin_list(p: u32, q: u32) -> PyResult<Vec<u32>> {
    Ok(core::tspin_list(p, q).map_err(value_error)?.doubled_spins().to_vec())
}

/// Doubled lead U³ components `2u³(i, sᵢ)` (requires p >= q).
#[pyfunction]
fn u3_lead_list(p: u32, q: u32) -> PyResult<Vec<i64>> {
    core::u3_lead_list(p, q).map_err(value_error)
}

/// `(2s, 2σ, 2u³)` for every state, in matrix order.
#[pyfunction]
fn state_labels(p: u32, q: u32) -> Vec<(u32, i64, i64)> {
    core::state_labels(p, q).into_iter().map(|s| (s.doubled_spin, s.doubled_sigma, s.doubled_u3)).collect()
}

/// `{(2T³, 3Y): count}`.
#[pyfunction]
fn weight_multiplicities(p: u32, q: u32) -> BTreeMap<(i64, i64), usize> {
    core::weight_multiplicities(p, q)
}

/// Squared block unknowns `{(i, j): Fraction}` from the closed forms.
#[pyfunction]
fn upc2_map(p: u32, q: u32) -> PyResult<BTreeMap<(usize, usize), Rational>> {
    Ok(upc2_dict(&core::upc2_map(p, q).map_err(value_error)?))
}

/// Squared block unknowns solved from the commutators alone (d <= 64).
#[pyfunction]
fn oracle_solve(p: u32, q: u32) -> PyResult<BTreeMap<(usize, usize), Rational>> {
    Ok(upc2_dict(&core::oracle_solve(p, q).map_err(value_error)?))
}

/// Runs every check and returns `{"passed": bool, "relations": [(name, exact, residual)]}`.
#[pyfunction]
#[pyo3(signature = (p, q, oracle = false))]
fn verify<'py>(py: Python<'py>, p: u32, q: u32, oracle: bool) -> PyResult<Bound<'py, PyDict>> {
    let report = core::verify_irrep(p, q, oracle).map_err(value_error)?;
    let out = PyDict::new(py);
    out.set_item("passed", report.passed())?;
    let relations: Vec<(String, bool, f64)> =
        report.relations.iter().map(|r| (r.name.clone(), r.exact_zero, r.float_residual)).collect();
    out.set_item("relations", relations)?;
    Ok(out)
}

enum Named<'a> {
    Real(&'a Matrix),
    Complex(ComplexMatrix),
}

/// The eight matrices of one irrep.
#[pyclass(name = "GeneratorSet", frozen)]
struct PyGeneratorSet {
    inner: core::GeneratorSet,
}

impl PyGeneratorSet {
    fn lookup(&self, name: &str) -> PyResult<Named<'_>> {
        if let Some(i) = gell_mann_index(name) {
            return Ok(Named::Complex(self.inner.to_gell_mann().get(i).clone()));
        }
        let g: GeneratorName = name.parse().map_err(value_error)?;
        Ok(Named::Real(self.inner.matrix(g)))
    }
}

#[pymethods]
impl PyGeneratorSet {
    #[new]
    fn new(p: u32, q: u32) -> PyResult<Self> {
        Ok(Self { inner: core::build_generator_set(p, q).map_err(value_error)? })
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.label.p
    }

    #[getter]
    fn q(&self) -> u32 {
        self.inner.label.q
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Nonzero entries as `(row, col, terms)`, 1-based. For `F1..F8` each
    /// entry is `(row, col, re_terms, im_terms)`.
    fn entries<'py>(&self, py: Python<'py>, name: &str) -> PyResult<Vec<Bound<'py, PyAny>>> {
        match self.lookup(name)? {
            Named::Real(m) => {
                m.entries().map(|(r, c, v)| (r + 1, c + 1, terms(v)).into_pyobject(py).map(|t| t.into_any())).collect()
            }
            Named::Complex(m) => {
                let mut cells: BTreeMap<(usize, usize), (Terms, Terms)> = BTreeMap::new();
                for (r, c, v) in m.re.entries() {
                    cells.entry((r + 1, c + 1)).or_default().0 = terms(v);
                }
                for (r, c, v) in m.im.entries() {
                    cells.entry((r + 1, c + 1)).or_default().1 = terms(v);
                }
                cells
                    .into_iter()
                    .map(|((r, c), (re, im))| (r, c, re, im).into_pyobject(py).map(|t| t.into_any()))
                    .collect()
            }
        }
    }

    /// Dense floating-point rows; complex for `F1..F8`.
    fn to_dense<'py>(&self, py: Python<'py>, name: &str) -> PyResult<Bound<'py, PyAny>> {
        let d = self.inner.dim();
        let dense = |m: &Matrix| {
            let mut rows = vec![vec![0.0f64; d]; d];
            for (r, c, v) in m.entries() {
                rows[r][c] = v.to_f64();
            }
            rows
        };
        match self.lookup(name)? {
            Named::Real(m) => Ok(dense(m).into_pyobject(py)?.into_any()),
            Named::Complex(m) => {
                let (re, im) = (dense(&m.re), dense(&m.im));
                let rows: Vec<Vec<num_complex_pair::C>> = re
                    .iter()
                    .zip(&im)
                    .map(|(a, b)| a.iter().zip(b).map(|(x, y)| num_complex_pair::C(*x, *y)).collect())
                    .collect();
                Ok(rows.into_pyobject(py)?.into_any())
            }
        }
    }

    /// The JSON document `su3mat generate` writes.
    #[pyo3(signature = (name, approx = false))]
    fn to_json(&self, name: &str, approx: bool) -> PyResult<String> {
        let header = core::wire::MatrixHeader {
            p: self.inner.label.p,
            q: self.inner.label.q,
            d: self.inner.dim(),
            name: name.to_string(),
        };
        Ok(match self.lookup(name)? {
            Named::Real(m) => core::wire::matrix_to_json(&header, m, approx),
            Named::Complex(m) => core::wire::complex_matrix_to_json(&header, &m, approx),
        }
        .to_string())
    }

    /// The `(q, p)` set, as `-Mᵀ` of every matrix.
    fn negative_transpose(&self) -> Self {
        Self { inner: self.inner.negative_transpose() }
    }

    /// Number of the 28 commutation relations that hold exactly.
    fn commutators_exact(&self) -> usize {
        core::check_commutators(&self.inner).pass_count()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("GeneratorSet{} (d = {})", self.inner.label, self.inner.dim())
    }
}

/// Python `complex` without pulling in num-complex.
mod num_complex_pair {
    use pyo3::prelude::*;
    use pyo3::types::PyComplex;

    pub struct C(pub f64, pub f64);

    impl<'py> IntoPyObject<'py> for C {
        type Target = PyComplex;
        type Output = Bound<'py, PyComplex>;
        type Error = std::convert::Infallible;

        fn into_pyobject(self, py: Python<'py>) -> Result<Self::Output, Self::Error> {
            Ok(PyComplex::from_doubles(py, self.0, self.1))
        }
    }
}

#[pymodule]
fn su3py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(dimension, m)?)?;
    m.add_function(wrap_pyfunction!(tspin_list, m)?)?;
    m.add_function(wrap_pyfunction!(u3_lead_list, m)?)?;
    m.add_function(wrap_pyfunction!(state_labels, m)?)?;
    m.add_function(wrap_pyfunction!(weight_multiplicities, m)?)?;
    m.add_function(wrap_pyfunction!(upc2_map, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_solve, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_class::<PyGeneratorSet>()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with_module<F: FnOnce(&Bound<'_, PyModule>)>(f: F) {
        Python::initialize();
        Python::attach(|py| {
            let m = PyModule::new(py, "su3py").unwrap();
            su3py(&m).unwrap();
            f(&m);
        });
    }

    #[test]
    fn functions_round_trip() {
        with_module(|m| {
            let d: u64 = m.getattr("dimension").unwrap().call1((3, 2)).unwrap().extract().unwrap();
            assert_eq!(d, 42);
            let leads: Vec<i64> = m.getattr("u3_lead_list").unwrap().call1((2, 0)).unwrap().extract().unwrap();
            assert_eq!(leads.len(), 3);
            let map = m.getattr("upc2_map").unwrap().call1((1, 1)).unwrap();
            assert_eq!(map.get_item((3, 1)).unwrap().str().unwrap().to_string(), "3/2");
            let err = m.getattr("upc2_map").unwrap().call1((1, 2)).unwrap_err();
            assert!(err.to_string().contains("negative-transpose"));
        });
    }

    #[test]
    fn generator_set_class() {
        with_module(|m| {
            let gs = m.getattr("GeneratorSet").unwrap().call1((1, 0)).unwrap();
            assert_eq!(gs.getattr("dim").unwrap().extract::<usize>().unwrap(), 3);
            assert_eq!(gs.call_method0("commutators_exact").unwrap().extract::<usize>().unwrap(), 28);
            let t3: Vec<(usize, usize, Terms)> = gs.call_method1("entries", ("T3",)).unwrap().extract().unwrap();
            assert_eq!(t3.len(), 2);
            assert_eq!(t3[0].2, vec![(BigInt::from(1), BigInt::from(2), 1)]);
            let json: String = gs.call_method1("to_json", ("F2",)).unwrap().extract().unwrap();
            assert!(json.contains("\"im\""));
            assert!(gs.call_method1("entries", ("X",)).is_err());
            let conj = gs.call_method0("negative_transpose").unwrap();
            assert_eq!(conj.getattr("q").unwrap().extract::<u32>().unwrap(), 1);
        });
    }
}
