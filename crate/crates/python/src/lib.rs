//! Python bindings: polynomial rings and their quotients, module invariants of
//! cyclic modules `S/(gens)`, and batch sessions.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyModule;
use serde_json::{json, Value};

use cmreg::tor::tor_multi;
use cmreg::invariants::{a_invariants_of, betti_regularity};
use cmreg::{a_invariants, AlgebraError, CoefficientField, GradedModule, Ideal, PolyRing, Polynomial, QuotientRing};
use cmreg_cli::{parse_session, run_session as run, RunOptions};

fn err(e: AlgebraError) -> PyErr {
    match e {
        AlgebraError::Parse(_)
        | AlgebraError::NotPrime(_)
        | AlgebraError::Inhomogeneous { .. }
        | AlgebraError::InvalidArgument(_)
        | AlgebraError::RingMismatch(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

/// Hand a JSON value to Python through the `json` module.
fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    PyModule::import(py, "json")?.call_method1("loads", (v.to_string(),))
}

fn field(spec: &str) -> PyResult<CoefficientField> {
    let s = spec.trim();
    if s == "QQ" {
        return Ok(CoefficientField::Rationals);
    }
    let p = s
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|p| p.trim().parse::<u64>().ok())
        .ok_or_else(|| PyValueError::new_err(format!("unknown field `{s}` (expected QQ or GF(p))")))?;
    CoefficientField::prime(p).map_err(err)
}

/// `field[x0, …, x{n−1}] / (relations)`.
#[pyclass(frozen, module = "cmreg")]
struct Ring {
    ring: QuotientRing,
}

impl Ring {
    fn polys(&self, gens: &[String]) -> PyResult<Vec<Polynomial>> {
        gens.iter().map(|g| self.ring.parse(g).map_err(err)).collect()
    }

    fn module(&self, gens: &[String]) -> PyResult<GradedModule> {
        GradedModule::cyclic(&self.ring, &self.polys(gens)?).map_err(err)
    }

    fn ideal(&self, gens: &[String]) -> PyResult<Ideal> {
        Ideal::new(&self.ring, self.polys(gens)?).map_err(err)
    }
}

#[pymethods]
impl Ring {
    #[new]
    #[pyo3(signature = (field_spec, nvars, relations = Vec::new()))]
    fn new(field_spec: &str, nvars: usize, relations: Vec<String>) -> PyResult<Self> {
        if nvars == 0 {
            return Err(PyValueError::new_err("a ring needs at least one variable"));
        }
        let amb = PolyRing::new(field(field_spec)?, nvars);
        let rels = relations
            .iter()
            .map(|r| amb.parse(r).map_err(err))
            .collect::<PyResult<Vec<_>>>()?;
        let ring = if rels.is_empty() {
            QuotientRing::polynomial(amb)
        } else {
            QuotientRing::new(amb, rels).map_err(err)?
        };
        Ok(Ring { ring })
    }

    fn __repr__(&self) -> String {
        format!("Ring({})", self.ring)
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    #[getter]
    fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }

    /// Betti table of `S/(gens)` as `{"betti": [[i, j, rank], ...], "reg": r}`.
    #[pyo3(signature = (gens, cap = None))]
    fn betti<'py>(&self, py: Python<'py>, gens: Vec<String>, cap: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
        let m = self.module(&gens)?;
        let res = m.resolution(cap.unwrap_or_else(|| m.default_cap()));
        let mut v = serde_json::to_value(res.betti()).unwrap_or(Value::Null);
        if let Value::Object(o) = &mut v {
            o.insert("truncated".into(), json!(res.truncated));
        }
        to_py(py, &v)
    }

    /// `a_i(S/(gens))` with `reg`, `cd` and `depth`; `-inf` is the string "-inf".
    fn a_invariants<'py>(&self, py: Python<'py>, gens: Vec<String>) -> PyResult<Bound<'py, PyAny>> {
        let a = a_invariants(&self.module(&gens)?);
        to_py(py, &json!({"a": a.a, "reg": a.reg, "cd": a.cd, "depth": a.depth()}))
    }

    /// `reg(S/(gens))` from local duality, cross-checked against Betti numbers
    /// when the resolution is finite.
    fn regularity<'py>(&self, py: Python<'py>, gens: Vec<String>) -> PyResult<Bound<'py, PyAny>> {
        let m = self.module(&gens)?;
        let reg = a_invariants(&m).reg;
        if let Ok(b) = betti_regularity(&m) {
            if b != reg {
                return Err(PyRuntimeError::new_err(format!("duality gives {reg}, Betti numbers give {b}")));
            }
        }
        to_py(py, &json!(reg))
    }

    /// Hilbert function of `S/(gens)` in degrees `lo..=hi`.
    fn hilbert(&self, gens: Vec<String>, lo: i64, hi: i64) -> PyResult<Vec<i64>> {
        Ok(self.module(&gens)?.hilbert_data(lo, hi).values)
    }

    /// Minimal generators of the saturation of `(gens)`.
    fn saturation(&self, gens: Vec<String>) -> PyResult<Vec<String>> {
        Ok(self.ideal(&gens)?.saturation().minimalized().to_strings())
    }

    /// `Tor_i(S/I_1, …, S/I_s)` summary for each generator list.
    fn tor<'py>(&self, py: Python<'py>, ideals: Vec<Vec<String>>, i: i64, lo: i64, hi: i64) -> PyResult<Bound<'py, PyAny>> {
        let mods = ideals.iter().map(|g| self.module(g)).collect::<PyResult<Vec<_>>>()?;
        let t = tor_multi(&mods, i).map_err(err)?;
        let a = a_invariants_of(&t);
        to_py(py, &json!({"zero": t.is_zero(), "reg": a.reg, "hilbert": t.hilbert_data(lo, hi).values}))
    }
}

/// Run a session. Returns `(exit_code, records, summary)`; parse errors raise
/// `ValueError` listing every located error.
#[pyfunction]
#[pyo3(signature = (text, seed = None, parallel = false))]
fn run_session<'py>(
    py: Python<'py>,
    text: &str,
    seed: Option<u64>,
    parallel: bool,
) -> PyResult<(i32, Vec<Bound<'py, PyAny>>, String)> {
    let spec = parse_session(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let out = run(&spec, &RunOptions { parallel, seed });
    let records = out
        .records
        .iter()
        .map(|r| PyModule::import(py, "json")?.call_method1("loads", (r.as_str(),)))
        .collect::<PyResult<Vec<_>>>()?;
    Ok((out.exit_code, records, out.summary))
}

#[pymodule(name = "cmreg")]
fn cmreg_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_function(wrap_pyfunction!(run_session, m)?)?;
    Ok(())
}
