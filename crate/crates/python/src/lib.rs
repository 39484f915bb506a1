//! Python bindings: settings, classification with witnesses, orbit counts and
//! radical-square-zero algebras.

use std::collections::HashMap;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use quiverfin::algebra::{algebra_to_setting, check_or_conditions, finitely_many_orbits, is_distributive};
use quiverfin::format::{
    parse_algebra, parse_euclidean, parse_setting, render_euclidean, render_witness, serialize_algebra,
    serialize_setting,
};
use quiverfin::{
    classify, count_orbits, find_euclidean_witness, find_subroot, is_minimal_infinite, AlgebraSpec, Arrow, Budget,
    DimVector, Error, EuclideanWitness, Mode, Quiver, QuiverSetting, Verdict,
};

create_exception!(quiverfin_py, QuiverfinError, PyException);

fn py_err(e: Error) -> PyErr {
    QuiverfinError::new_err(e.to_string())
}

fn budget() -> PyResult<Budget> {
    Budget::from_env().map_err(py_err)
}

fn mode(checked: bool) -> Mode {
    if checked {
        Mode::Checked
    } else {
        Mode::Fast
    }
}

/// A quiver with a dimension vector.
#[pyclass(name = "Setting", module = "quiverfin_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PySetting {
    inner: QuiverSetting,
}

#[pymethods]
impl PySetting {
    #[new]
    fn new(vertices: Vec<String>, arrows: Vec<(String, String)>, dim: Vec<u64>) -> PyResult<Self> {
        let index = |name: &str| {
            vertices.iter().position(|v| v == name).ok_or_else(|| py_err(Error::UnknownVertex(name.to_string())))
        };
        let arrows = arrows.iter().map(|(s, t)| Ok(Arrow::new(index(s)?, index(t)?))).collect::<PyResult<Vec<_>>>()?;
        let quiver = Quiver::new(vertices.clone(), arrows).map_err(py_err)?;
        let inner = QuiverSetting::new(quiver, DimVector::new(dim)).map_err(py_err)?;
        Ok(PySetting { inner })
    }

    /// Reads the text format (`vertices:`, `arrow:`, `dim:` lines).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PySetting { inner: parse_setting(text).map_err(py_err)? })
    }

    fn serialize(&self) -> String {
        serialize_setting(&self.inner)
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.quiver().vertices().to_vec()
    }

    #[getter]
    fn arrows(&self) -> Vec<(String, String)> {
        let q = self.inner.quiver();
        q.arrows().iter().map(|a| (q.name(a.source).to_string(), q.name(a.target).to_string())).collect()
    }

    #[getter]
    fn dim(&self) -> Vec<u64> {
        self.inner.dim().entries().to_vec()
    }

    fn tits_form(&self) -> PyResult<i64> {
        self.inner.tits_form().map_err(py_err)
    }

    #[pyo3(signature = (checked = false))]
    fn classify(&self, checked: bool) -> PyResult<PyVerdict> {
        let v = classify(&self.inner, mode(checked), &budget()?).map_err(py_err)?;
        Ok(PyVerdict::from_verdict(&self.inner, &v))
    }

    /// Euclidean subquiver whose radical vector fits under `dim`, if any.
    fn witness(&self) -> PyResult<Option<PyWitness>> {
        let w = find_euclidean_witness(&self.inner, &budget()?).map_err(py_err)?;
        Ok(w.map(|w| PyWitness::from_witness(&self.inner, &w)))
    }

    /// Nonzero `d' <= dim` with `q(d') <= 0`, if any.
    fn subroot(&self) -> PyResult<Option<Vec<u64>>> {
        let v = find_subroot(&self.inner, &budget()?).map_err(py_err)?;
        Ok(v.map(DimVector::into_inner))
    }

    #[pyo3(signature = (checked = false))]
    fn is_minimal_infinite(&self, checked: bool) -> PyResult<bool> {
        is_minimal_infinite(&self.inner, mode(checked), &budget()?).map_err(py_err)
    }

    /// Number of `GL(d)`-orbits over `F_q` for a prime `q` in {2, 3, 5, 7}.
    #[pyo3(signature = (q, budget = None))]
    fn count_orbits(&self, q: u64, budget: Option<u64>) -> PyResult<u64> {
        let base = self::budget()?;
        let b = Budget { orbit_points: budget.unwrap_or(base.orbit_points), ..base };
        count_orbits(&self.inner, q, &b).map_err(py_err)
    }

    /// Re-checks a witness report against this setting.
    fn verify_witness(&self, report: &str) -> PyResult<bool> {
        match parse_euclidean(&self.inner, report).and_then(|w| w.validate(&self.inner)) {
            Ok(()) => Ok(true),
            Err(Error::Parse { line, message }) => Err(py_err(Error::Parse { line, message })),
            Err(_) => Ok(false),
        }
    }

    fn __eq__(&self, other: &PySetting) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Setting({} dim={:?})", self.inner.quiver(), self.inner.dim().entries())
    }
}

#[pyclass(name = "Verdict", module = "quiverfin_py", frozen)]
pub struct PyVerdict {
    infinite: bool,
    report: String,
    witness: Option<PyWitness>,
}

impl PyVerdict {
    fn from_verdict(setting: &QuiverSetting, v: &Verdict) -> Self {
        match v {
            Verdict::Finite => PyVerdict { infinite: false, report: "FINITE\n".into(), witness: None },
            Verdict::Infinite(w) => PyVerdict {
                infinite: true,
                report: format!("INFINITE\n{}", render_witness(setting, w)),
                witness: match w {
                    quiverfin::Witness::Euclidean(e) => Some(PyWitness::from_witness(setting, e)),
                    quiverfin::Witness::Subroot(_) => None,
                },
            },
        }
    }
}

#[pymethods]
impl PyVerdict {
    #[getter]
    fn is_infinite(&self) -> bool {
        self.infinite
    }

    #[getter]
    fn witness(&self) -> Option<PyWitness> {
        self.witness.clone()
    }

    /// Same text as `quiverfin classify`.
    #[getter]
    fn report(&self) -> String {
        self.report.clone()
    }

    fn __repr__(&self) -> String {
        let head = if self.infinite { "INFINITE" } else { "FINITE" };
        match &self.witness {
            Some(w) => format!("Verdict({head}, {})", w.kind),
            None => format!("Verdict({head})"),
        }
    }
}

#[pyclass(name = "EuclideanWitness", module = "quiverfin_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyWitness {
    kind: String,
    multiplier: u64,
    /// `(ambient vertex, pattern position, radical entry)`
    vertices: Vec<(String, String, u64)>,
    arrows: Vec<usize>,
    report: String,
}

impl PyWitness {
    fn from_witness(setting: &QuiverSetting, w: &EuclideanWitness) -> Self {
        let q = setting.quiver();
        let vertices = w
            .ambient_vertices()
            .iter()
            .enumerate()
            .map(|(i, &x)| (q.name(x).to_string(), w.subquiver().name(i).to_string(), w.radical().get(i)))
            .collect();
        PyWitness {
            kind: w.kind().to_string(),
            multiplier: w.multiplier(),
            vertices,
            arrows: w.embedding().arrow_map().to_vec(),
            report: render_euclidean(setting, w),
        }
    }
}

#[pymethods]
impl PyWitness {
    /// Euclidean type such as `A~1` or `E~8`.
    #[getter]
    fn kind(&self) -> String {
        self.kind.clone()
    }

    #[getter]
    fn multiplier(&self) -> u64 {
        self.multiplier
    }

    #[getter]
    fn vertices(&self) -> Vec<(String, String, u64)> {
        self.vertices.clone()
    }

    /// Indices of the ambient arrows used.
    #[getter]
    fn arrows(&self) -> Vec<usize> {
        self.arrows.clone()
    }

    #[getter]
    fn report(&self) -> String {
        self.report.clone()
    }

    fn __repr__(&self) -> String {
        format!("EuclideanWitness({} m={})", self.kind, self.multiplier)
    }
}

/// Radical-square-zero algebra given by block sizes and bimodule ranks.
#[pyclass(name = "Algebra", module = "quiverfin_py", frozen)]
pub struct PyAlgebra {
    inner: AlgebraSpec,
}

#[pymethods]
impl PyAlgebra {
    #[new]
    fn new(block_sizes: Vec<u64>, ranks: Vec<Vec<u64>>) -> PyResult<Self> {
        Ok(PyAlgebra { inner: AlgebraSpec::new(block_sizes, ranks).map_err(py_err)? })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyAlgebra { inner: parse_algebra(text).map_err(py_err)? })
    }

    fn serialize(&self) -> String {
        serialize_algebra(&self.inner)
    }

    #[getter]
    fn block_sizes(&self) -> Vec<u64> {
        self.inner.block_sizes().to_vec()
    }

    #[getter]
    fn ranks(&self) -> Vec<Vec<u64>> {
        self.inner.ranks().to_vec()
    }

    /// The bipartite setting with vertices `0_i` and `1_i`.
    fn setting(&self) -> PySetting {
        PySetting { inner: algebra_to_setting(&self.inner).setting().clone() }
    }

    #[pyo3(signature = (checked = false))]
    fn finitely_many_orbits(&self, checked: bool) -> PyResult<PyVerdict> {
        let v = finitely_many_orbits(&self.inner, mode(checked), &budget()?).map_err(py_err)?;
        Ok(PyVerdict::from_verdict(algebra_to_setting(&self.inner).setting(), &v))
    }

    fn is_distributive(&self) -> bool {
        is_distributive(&self.inner)
    }

    /// `{"c1": (passed, violations), "c2": ..., "c3": ...}`
    fn or_conditions(&self) -> HashMap<String, (bool, Vec<String>)> {
        let r = check_or_conditions(&algebra_to_setting(&self.inner));
        [("c1", r.c1), ("c2", r.c2), ("c3", r.c3)]
            .into_iter()
            .map(|(k, c)| (k.to_string(), (c.passed, c.violations)))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("Algebra({})", self.inner)
    }
}

/// Registers the module contents; used by the extension entry point and by
/// embedded interpreters in tests.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySetting>()?;
    m.add_class::<PyVerdict>()?;
    m.add_class::<PyWitness>()?;
    m.add_class::<PyAlgebra>()?;
    m.add("QuiverfinError", m.py().get_type::<QuiverfinError>())?;
    Ok(())
}

#[pymodule]
fn quiverfin_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
