//! Python bindings: a `MassFunction` class plus the voting demo.
//!
//! Sets are given either as a label list (`["c", "d"]`) or as a literal
//! (`"c,d"`, `"{c,d}"`, `""` for the empty set).

use belief_core::cli::{demo_voting, to_json, to_tsv, TableSelector};
use belief_core::io::{parse_bba, parse_matrix, serialize_bba};
use belief_core::{self as core, Frame, SubsetKey, World};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyString;

create_exception!(belief, BeliefError, PyValueError);

fn err(e: core::BeliefError) -> PyErr {
    BeliefError::new_err(e.to_string())
}

fn subset(frame: &Frame, set: &Bound<'_, PyAny>) -> PyResult<SubsetKey> {
    if let Ok(s) = set.cast::<PyString>() {
        return frame.parse_subset(s.to_str()?).map_err(err);
    }
    let labels: Vec<String> = set.extract()?;
    frame.subset(&labels).map_err(err)
}

fn world(name: &str) -> PyResult<World> {
    match name {
        "open" => Ok(World::Open),
        "closed" => Ok(World::Closed),
        other => Err(PyValueError::new_err(format!(
            "world must be \"open\" or \"closed\", got {other:?}"
        ))),
    }
}

#[pyclass(name = "MassFunction", module = "belief", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMass {
    inner: core::MassFunction,
}

fn wrap(inner: core::MassFunction) -> PyMass {
    PyMass { inner }
}

#[pymethods]
impl PyMass {
    /// `MassFunction(["a", "b"], [(["a"], 0.4), ("a,b", 0.6)], world="closed")`
    #[new]
    #[pyo3(signature = (frame, masses, world = "closed"))]
    fn new(frame: Vec<String>, masses: Vec<(Bound<'_, PyAny>, f64)>, world: &str) -> PyResult<Self> {
        let frame = Frame::new(frame).map_err(err)?;
        let entries = masses
            .iter()
            .map(|(set, m)| Ok((subset(&frame, set)?, *m)))
            .collect::<PyResult<Vec<_>>>()?;
        core::MassFunction::new(frame, self::world(world)?, entries)
            .map(wrap)
            .map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_bba(text).map(wrap).map_err(err)
    }

    /// The voting data used by the demo tables.
    #[staticmethod]
    fn voting() -> Self {
        wrap(core::fixtures::voting_masses())
    }

    fn to_json(&self) -> String {
        serialize_bba(&self.inner)
    }

    #[getter]
    fn frame(&self) -> Vec<String> {
        self.inner.frame().labels().to_vec()
    }

    #[getter]
    fn world(&self) -> String {
        self.inner.world().to_string()
    }

    /// Focal sets and their masses, smallest sets first.
    fn focal(&self) -> Vec<(Vec<String>, f64)> {
        let frame = self.inner.frame();
        let mut out: Vec<_> = self.inner.focal().collect();
        out.sort_by_key(|(k, _)| k.display_order());
        out.into_iter()
            .map(|(k, m)| (frame.subset_labels(k), m))
            .collect()
    }

    fn mass(&self, set: &Bound<'_, PyAny>) -> PyResult<f64> {
        Ok(self.inner.mass(subset(self.inner.frame(), set)?))
    }

    fn bel(&self, set: &Bound<'_, PyAny>) -> PyResult<f64> {
        Ok(core::belief(&self.inner).bel(subset(self.inner.frame(), set)?))
    }

    fn pl(&self, set: &Bound<'_, PyAny>) -> PyResult<f64> {
        Ok(core::belief(&self.inner).pl(subset(self.inner.frame(), set)?))
    }

    /// Returns `(result, conflict, normalization)`. `rule` is one of
    /// `"c1"` (open Dempster), `"c2"` (normalized Dempster), `"c3"`
    /// (Yager–Kohlas) or `"geometric"`.
    #[pyo3(signature = (retain, rule = "c2", world = "closed"))]
    fn condition(
        &self,
        retain: &Bound<'_, PyAny>,
        rule: &str,
        world: &str,
    ) -> PyResult<(PyMass, f64, f64)> {
        let a = subset(self.inner.frame(), retain)?;
        let m = &self.inner;
        let out = match rule {
            "c1" => core::condition_open(m, a),
            "c2" => core::condition_closed(m, a),
            "c3" => core::condition_yager_kohlas(m, a),
            "geometric" | "c4" => core::condition_geometric(m, a, self::world(world)?),
            other => return Err(PyValueError::new_err(format!("unknown rule {other:?}"))),
        }
        .map_err(err)?;
        Ok((wrap(out.result), out.conflict, out.normalization))
    }

    /// Applies a specialization or transfer matrix document.
    fn transform(&self, matrix_json: &str) -> PyResult<Self> {
        let t = parse_matrix(matrix_json).map_err(err)?.into_transfer();
        core::image_general(&self.inner, &t).map(wrap).map_err(err)
    }

    #[pyo3(signature = (other, normalize = false))]
    fn combine(&self, other: &PyMass, normalize: bool) -> PyResult<Self> {
        if normalize {
            core::dempster_combine(&self.inner, &other.inner).map(|o| wrap(o.result))
        } else {
            core::conjunctive(&self.inner, &other.inner).map(wrap)
        }
        .map_err(err)
    }

    fn normalize(&self) -> PyResult<Self> {
        core::normalize(&self.inner).map(wrap).map_err(err)
    }

    /// Pignistic probabilities, one per frame element.
    fn pignistic(&self) -> PyResult<Vec<f64>> {
        core::pignistic(&self.inner)
            .map(|p| p.probabilities().to_vec())
            .map_err(err)
    }

    fn bounds(&self, set: &Bound<'_, PyAny>) -> PyResult<(f64, f64)> {
        let b = core::bounds(&self.inner, subset(self.inner.frame(), set)?).map_err(err)?;
        Ok((b.lower, b.upper))
    }

    /// Lower and upper probability of `event` given `given`. `method` is
    /// `"fh"` (closed form) or `"oracle"` (vertex enumeration).
    #[pyo3(signature = (given, event, method = "fh"))]
    fn conditional_bounds(
        &self,
        given: &Bound<'_, PyAny>,
        event: &Bound<'_, PyAny>,
        method: &str,
    ) -> PyResult<(f64, f64)> {
        let frame = self.inner.frame();
        let (a, b) = (subset(frame, given)?, subset(frame, event)?);
        let out = match method {
            "fh" => core::fh_conditional(&self.inner, a, b),
            "oracle" => core::oracle_conditional(&self.inner, a, b),
            other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
        }
        .map_err(err)?;
        Ok((out.lower, out.upper))
    }

    fn __repr__(&self) -> String {
        let body: Vec<String> = self
            .focal()
            .into_iter()
            .map(|(set, m)| format!("{{{}}}: {m}", set.join(",")))
            .collect();
        format!("MassFunction({}, {{{}}})", self.inner.world(), body.join(", "))
    }
}

/// Renders the voting demo tables as TSV or JSON.
#[pyfunction]
#[pyo3(signature = (table = "all", format = "tsv"))]
fn demo(table: &str, format: &str) -> PyResult<String> {
    let selector: TableSelector = table.parse().map_err(PyValueError::new_err)?;
    let tables = demo_voting(selector).map_err(err)?;
    match format {
        "tsv" => Ok(to_tsv(&tables)),
        "json" => Ok(to_json(&tables)),
        other => Err(PyValueError::new_err(format!("unknown format {other:?}"))),
    }
}

#[pymodule]
fn belief(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMass>()?;
    m.add_function(wrap_pyfunction!(demo, m)?)?;
    m.add("BeliefError", m.py().get_type::<BeliefError>())?;
    Ok(())
}
