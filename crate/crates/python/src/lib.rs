//! Python bindings: admissible pairs and weights, fusion, Zhu bimodules,
//! projection and singular-vector checks, and the CLI report documents.

use std::collections::BTreeMap;

use ospzhu_cli::{cmd_fuse, cmd_table, cmd_verify, cmd_weights, render, CliError, Format, Outcome, Suite};
use ospzhu_core::admissible::{enumerate_weights, AdmissiblePair, AdmissibleWeight};
use ospzhu_core::exactmath::{BiPoly, Rational};
use ospzhu_core::fusion::{fuse_closed, fuse_oracle, fusion_cells, integrable_fuse, ring_checks, FusionResult};
use ospzhu_core::pbw::{mff_word, verify_projection, xy_power_factorization, MffKind, Projection, ProjectionStatus};
use ospzhu_core::verma::check_singular;
use ospzhu_core::zhu::{bimodule_build, BimodElement, BimodulePresentation};
use ospzhu_core::Error;
use pyo3::exceptions::{PyRuntimeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyModule};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        Error::OracleMismatch(_) | Error::IdentityFailed(_) | Error::ClosureViolation { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn cli_err(e: CliError) -> PyErr {
    match e {
        CliError::Core(e) => py_err(e),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    obj.str()?.to_str()?.trim().parse().map_err(py_err)
}

fn parse_kind(kind: &str) -> PyResult<MffKind> {
    match kind {
        "F1" | "f1" => Ok(MffKind::F1),
        "F2" | "f2" => Ok(MffKind::F2),
        _ => Err(PyValueError::new_err(format!("kind must be F1 or F2, got {kind:?}"))),
    }
}

fn parse_target(target: &str) -> PyResult<Projection> {
    match target {
        "pi" => Ok(Projection::Pi),
        "pi1" => Ok(Projection::Pi1),
        _ => Err(PyValueError::new_err(format!("target must be pi or pi1, got {target:?}"))),
    }
}

fn status_name(s: &ProjectionStatus) -> &'static str {
    match s {
        ProjectionStatus::Pass => "pass",
        ProjectionStatus::Fail => "fail",
        ProjectionStatus::Skipped => "skipped",
    }
}

fn format_name(format: &str) -> PyResult<Format> {
    match format {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        "tex" => Ok(Format::Tex),
        _ => Err(PyValueError::new_err(format!("format must be json, csv or tex, got {format:?}"))),
    }
}

fn rendered(outcome: Result<Outcome, CliError>, format: &str) -> PyResult<(String, u8)> {
    let outcome = outcome.map_err(cli_err)?;
    Ok((render(&outcome.doc, format_name(format)?).map_err(cli_err)?, outcome.exit))
}

/// An admissible weight `j = (m−1)/2 − l·s`.
#[pyclass(name = "Weight", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyWeight(AdmissibleWeight);

#[pymethods]
impl PyWeight {
    #[getter]
    fn m(&self) -> i64 {
        self.0.m
    }

    #[getter]
    fn s(&self) -> i64 {
        self.0.s
    }

    #[getter]
    fn j<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.j)
    }

    fn __repr__(&self) -> String {
        format!("Weight(m={}, s={}, j={})", self.0.m, self.0.s, self.0.j)
    }
}

fn weights(ws: &FusionResult) -> Vec<PyWeight> {
    ws.summands.iter().cloned().map(PyWeight).collect()
}

/// A validated admissible pair `(p, q)` with level `(p − 3q)/(2q)`.
#[pyclass(name = "Pair", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyPair(AdmissiblePair);

#[pymethods]
impl PyPair {
    #[new]
    fn new(p: i64, q: i64) -> PyResult<Self> {
        AdmissiblePair::new(p, q).map(PyPair).map_err(py_err)
    }

    #[getter]
    fn p(&self) -> i64 {
        self.0.p
    }

    #[getter]
    fn q(&self) -> i64 {
        self.0.q
    }

    #[getter]
    fn level<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.level())
    }

    fn weight(&self, m: i64, s: i64) -> PyResult<PyWeight> {
        self.0.weight(m, s).map(PyWeight).map_err(py_err)
    }

    /// All admissible weights, sorted by `(s, m)`.
    fn weights(&self) -> Vec<PyWeight> {
        enumerate_weights(&self.0).into_iter().map(PyWeight).collect()
    }

    fn vacuum_polynomial(&self) -> String {
        ospzhu_core::admissible::vacuum_polynomial(&self.0).to_string()
    }

    /// `w1 ⊠ w2` by the closed rule, or by the bimodule oracle.
    #[pyo3(signature = (w1, w2, oracle = false))]
    fn fuse(&self, w1: &PyWeight, w2: &PyWeight, oracle: bool) -> PyResult<Vec<PyWeight>> {
        let r = if oracle { fuse_oracle(&self.0, &w1.0, &w2.0) } else { fuse_closed(&self.0, &w1.0, &w2.0) };
        r.map(|r| weights(&r)).map_err(py_err)
    }

    /// `table[a][b]` is `weights()[a] ⊠ weights()[b]`; raises if the closed
    /// rule and the oracle disagree anywhere.
    fn fusion_table(&self) -> PyResult<Vec<Vec<Vec<PyWeight>>>> {
        let t = fusion_cells(&self.0).map_err(py_err)?;
        let mut out = Vec::with_capacity(t.cells.len());
        for (a, row) in t.cells.iter().enumerate() {
            let mut cells = Vec::with_capacity(row.len());
            for (b, c) in row.iter().enumerate() {
                if !c.agree {
                    return Err(py_err(Error::OracleMismatch(format!("{} x {}", t.weights[a], t.weights[b]))));
                }
                cells.push(weights(&c.closed));
            }
            out.push(cells);
        }
        Ok(out)
    }

    fn ring_checks<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = ring_checks(&self.0).map_err(py_err)?;
        let d = PyDict::new(py);
        d.set_item("commutative", r.commutative)?;
        d.set_item("vacuum_unit", r.vacuum_unit)?;
        d.set_item("closure", r.closure)?;
        d.set_item("multiplicity_free", r.multiplicity_free)?;
        d.set_item("associative", r.associative)?;
        d.set_item("associativity_asserted", r.associativity_asserted)?;
        d.set_item("passed", r.passed())?;
        Ok(d)
    }

    fn bimodule(&self, w: &PyWeight) -> PyResult<PyBimodule> {
        bimodule_build(&self.0, &w.0).map(PyBimodule).map_err(py_err)
    }

    /// The MFF word `F1(m,s)` or `F2(m,s)` and whether its exponents are integers.
    fn mff_word(&self, m: i64, s: i64, kind: &str) -> PyResult<(String, bool)> {
        let w = mff_word(&self.0, m, s, parse_kind(kind)?).map_err(py_err)?;
        Ok((w.to_string(), w.integer_instance()))
    }

    /// `(status, detail)` with status `pass`, `fail` or `skipped`.
    #[pyo3(signature = (m, s, kind, target = "pi"))]
    fn verify_projection(&self, m: i64, s: i64, kind: &str, target: &str) -> PyResult<(&'static str, Option<String>)> {
        let c = verify_projection(&self.0, m, s, parse_kind(kind)?, parse_target(target)?).map_err(py_err)?;
        Ok((status_name(&c.status), c.detail))
    }

    /// `(status, detail)` for `F(m,s)·v` in `M(𝓁, j(m,s))` up to t-degree `depth`.
    #[pyo3(signature = (m, s, kind, depth = 6))]
    fn check_singular(&self, m: i64, s: i64, kind: &str, depth: u32) -> PyResult<(&'static str, Option<String>)> {
        let c = check_singular(&self.0, m, s, parse_kind(kind)?, depth).map_err(py_err)?;
        Ok((status_name(&c.status), c.detail))
    }

    fn __repr__(&self) -> String {
        format!("Pair(p={}, q={})", self.0.p, self.0.q)
    }
}

/// The Zhu bimodule of one weight, presented on `ℚ[t1, t2]`. Elements are
/// dicts `{(d1, d2): coefficient}` with coefficients as `Fraction`, int or str.
#[pyclass(name = "Bimodule", frozen)]
struct PyBimodule(BimodulePresentation);

impl PyBimodule {
    fn element(&self, terms: &Bound<'_, PyDict>) -> PyResult<BimodElement> {
        let mut v = BiPoly::zero();
        for (k, c) in terms.iter() {
            let (d1, d2): (u32, u32) = k.extract()?;
            v.add_term(d1, d2, rational(&c)?);
        }
        Ok(self.0.nf(&v))
    }

    fn to_dict<'py>(py: Python<'py>, v: &BimodElement) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        let terms: BTreeMap<_, _> = v.value().terms().collect();
        for ((d1, d2), c) in terms {
            d.set_item((d1, d2), fraction(py, c)?)?;
        }
        Ok(d)
    }
}

#[pymethods]
impl PyBimodule {
    #[getter]
    fn dim(&self) -> Option<usize> {
        self.0.dim()
    }

    fn reducers(&self) -> Vec<String> {
        self.0.reducers().iter().map(ToString::to_string).collect()
    }

    fn basis(&self) -> Vec<(u32, u32)> {
        self.0.basis()
    }

    fn nf<'py>(&self, py: Python<'py>, terms: &Bound<'py, PyDict>) -> PyResult<Bound<'py, PyDict>> {
        Self::to_dict(py, &self.element(terms)?)
    }

    fn left<'py>(&self, py: Python<'py>, terms: &Bound<'py, PyDict>) -> PyResult<Bound<'py, PyDict>> {
        Self::to_dict(py, &self.0.left(&self.element(terms)?))
    }

    fn right<'py>(&self, py: Python<'py>, terms: &Bound<'py, PyDict>) -> PyResult<Bound<'py, PyDict>> {
        Self::to_dict(py, &self.0.right(&self.element(terms)?))
    }
}

/// Affine sl(2) fusion at positive integer level on integer spins.
#[pyfunction(name = "integrable_fuse")]
fn py_integrable_fuse(level: i64, j1: i64, j2: i64) -> PyResult<Vec<i64>> {
    integrable_fuse(level, j1, j2).map_err(py_err)
}

/// Whether `x^a y^a` equals its P/Q factorization in normal form.
#[pyfunction(name = "xy_power_factorization")]
fn py_xy_power_factorization(a: u32) -> bool {
    xy_power_factorization(a).holds
}

/// The `weights` report as `(text, exit_code)`.
#[pyfunction(name = "weights_report", signature = (p, q, format = "json"))]
fn py_weights_report(p: i64, q: i64, format: &str) -> PyResult<(String, u8)> {
    rendered(cmd_weights(p, q), format)
}

/// The `fuse` report as `(text, exit_code)`.
#[pyfunction(name = "fuse_report", signature = (p, q, m1, s1, m2, s2, format = "json"))]
#[allow(clippy::too_many_arguments)]
fn py_fuse_report(p: i64, q: i64, m1: i64, s1: i64, m2: i64, s2: i64, format: &str) -> PyResult<(String, u8)> {
    rendered(cmd_fuse(p, q, m1, s1, m2, s2), format)
}

/// The `table` report as `(text, exit_code)`.
#[pyfunction(name = "table_report", signature = (p, q, format = "json"))]
fn py_table_report(p: i64, q: i64, format: &str) -> PyResult<(String, u8)> {
    rendered(cmd_table(p, q), format)
}

/// A verification suite report as `(text, exit_code)`.
#[pyfunction(name = "verify", signature = (suite = "all", max_pq = None, depth = 6, format = "json"))]
fn py_verify(py: Python<'_>, suite: &str, max_pq: Option<i64>, depth: u32, format: &str) -> PyResult<(String, u8)> {
    let suite = match suite {
        "pq" => Suite::Pq,
        "factorization" => Suite::Factorization,
        "projection" => Suite::Projection,
        "singular" => Suite::Singular,
        "oracle" => Suite::Oracle,
        "all" => Suite::All,
        _ => return Err(PyValueError::new_err(format!("unknown suite {suite:?}"))),
    };
    let outcome = py.detach(|| cmd_verify(suite, max_pq, depth));
    rendered(outcome, format)
}

#[pymodule]
fn ospzhu(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPair>()?;
    m.add_class::<PyWeight>()?;
    m.add_class::<PyBimodule>()?;
    m.add_function(wrap_pyfunction!(py_integrable_fuse, m)?)?;
    m.add_function(wrap_pyfunction!(py_xy_power_factorization, m)?)?;
    m.add_function(wrap_pyfunction!(py_weights_report, m)?)?;
    m.add_function(wrap_pyfunction!(py_fuse_report, m)?)?;
    m.add_function(wrap_pyfunction!(py_table_report, m)?)?;
    m.add_function(wrap_pyfunction!(py_verify, m)?)?;
    Ok(())
}
