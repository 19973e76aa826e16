//! Python module `charval`.
//!
//! ```python
//! import charval
//! g = charval.Group.from_spec("family:sym(4)")
//! t = g.character_table()
//! t.value_profile()["cv_size"]   # 5
//! ```

use std::path::PathBuf;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyAny;
use serde::Serialize;

use charval_core::analysis::{analyze, parse_predicates, value_profile};
use charval_core::chartab::{
    closed_form_dihedral_table, dixon_schneider_with_seed, tables_equivalent, verify_orthogonality,
    CharacterTable as CoreTable, TableRecord, DEFAULT_SEED,
};
use charval_core::cyclotomic::Cyclotomic;
use charval_core::family::GroupSpec;
use charval_core::fleet::{catalog_sources, default_families, scan as core_scan, GroupSource, RunConfig};
use charval_core::group::{close_permutations, FiniteGroup, DEFAULT_ORDER_CAP};
use charval_core::Error;

create_exception!(charval, CharvalError, PyException);
create_exception!(charval, CapExceededError, CharvalError);
create_exception!(charval, LiftInconsistentError, CharvalError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::ClosureExceedsCap { .. } | Error::OrderCapExceeded { .. } => {
            CapExceededError::new_err(e.to_string())
        }
        Error::LiftInconsistent(_) => LiftInconsistentError::new_err(e.to_string()),
        _ => CharvalError::new_err(e.to_string()),
    }
}

/// Serializes through JSON into plain Python objects.
fn to_object<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| CharvalError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// A finite group held as a Cayley table.
#[pyclass(module = "charval", frozen)]
struct Group {
    inner: FiniteGroup,
}

#[pymethods]
impl Group {
    /// `family:<spec>`, a bare family spec, or `file:<path>#<name>`.
    #[staticmethod]
    #[pyo3(signature = (spec, cap = DEFAULT_ORDER_CAP))]
    fn from_spec(spec: &str, cap: usize) -> PyResult<Self> {
        let parsed: GroupSpec = spec.parse().map_err(to_py)?;
        let g = parsed.load(cap).map_err(to_py)?;
        let inner = match parsed {
            GroupSpec::Family(f) => g.with_name(f.to_string()),
            GroupSpec::File { .. } => g,
        };
        Ok(Group { inner })
    }

    /// Group generated by permutations of `0..degree`, given as image lists.
    #[staticmethod]
    #[pyo3(signature = (degree, generators, name = "G", cap = DEFAULT_ORDER_CAP))]
    fn from_permutations(
        degree: usize,
        generators: Vec<Vec<usize>>,
        name: &str,
        cap: usize,
    ) -> PyResult<Self> {
        let g = close_permutations(degree, &generators, cap).map_err(to_py)?;
        Ok(Group {
            inner: g.with_name(name),
        })
    }

    #[getter]
    fn name(&self) -> &str {
        self.inner.name()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn exponent(&self) -> usize {
        self.inner.exponent()
    }

    fn is_abelian(&self) -> bool {
        self.inner.is_abelian()
    }

    fn is_solvable(&self) -> bool {
        self.inner.is_solvable()
    }

    /// Element labels in index order; index 0 is the identity.
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn mul(&self, x: usize, y: usize) -> PyResult<usize> {
        let n = self.inner.order();
        if x >= n || y >= n {
            return Err(CharvalError::new_err(format!("index out of range 0..{n}")));
        }
        Ok(self.inner.mul(x, y))
    }

    #[pyo3(signature = (seed = DEFAULT_SEED))]
    fn character_table(&self, py: Python<'_>, seed: u64) -> PyResult<CharacterTable> {
        let t = py
            .detach(|| dixon_schneider_with_seed(&self.inner, seed))
            .map_err(to_py)?;
        Ok(CharacterTable { inner: t })
    }

    /// Table of `Dih A` from the closed form, for this group as `A`.
    fn dihedral_table(&self) -> PyResult<CharacterTable> {
        let t = closed_form_dihedral_table(&self.inner).map_err(to_py)?;
        Ok(CharacterTable { inner: t })
    }

    /// Classification report: value profile, structure flags, involution
    /// data and the orthogonality certificate.
    #[pyo3(signature = (seed = DEFAULT_SEED))]
    fn analyze(&self, py: Python<'_>, seed: u64) -> PyResult<Py<PyAny>> {
        let report = py
            .detach(|| {
                let t = dixon_schneider_with_seed(&self.inner, seed)?;
                analyze(&self.inner, &t)
            })
            .map_err(to_py)?;
        to_object(py, &report)
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Group({:?}, order={})", self.inner.name(), self.inner.order())
    }
}

/// An exact character table. Rows are irreducible characters, columns are
/// conjugacy classes.
#[pyclass(module = "charval", frozen)]
struct CharacterTable {
    inner: CoreTable,
}

fn complex(v: &Cyclotomic) -> (f64, f64) {
    v.to_complex()
}

#[pymethods]
impl CharacterTable {
    #[getter]
    fn group_name(&self) -> &str {
        self.inner.group_name()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.group_order()
    }

    #[getter]
    fn num_classes(&self) -> usize {
        self.inner.num_classes()
    }

    #[getter]
    fn degrees(&self) -> Vec<u64> {
        self.inner.degrees().to_vec()
    }

    #[getter]
    fn class_labels(&self) -> Vec<String> {
        self.inner.class_labels().to_vec()
    }

    #[getter]
    fn class_sizes(&self) -> Vec<usize> {
        self.inner.classes().class_sizes().to_vec()
    }

    /// Values in `ζ` notation, e.g. `"ζ9 + ζ9^8"`.
    fn values(&self) -> Vec<Vec<String>> {
        self.inner
            .values()
            .iter()
            .map(|row| row.iter().map(Cyclotomic::pretty).collect())
            .collect()
    }

    /// Floating point approximations; for display only.
    fn complex_values(&self) -> Vec<Vec<(f64, f64)>> {
        self.inner
            .values()
            .iter()
            .map(|row| row.iter().map(complex).collect())
            .collect()
    }

    /// `cv`, `cd`, `b` and related data as a dict.
    fn value_profile(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let p = value_profile(&self.inner);
        #[derive(Serialize)]
        struct Profile {
            cv_size: usize,
            cv: Vec<String>,
            cd: Vec<u64>,
            b: u64,
            has_zero: bool,
            conductor: usize,
        }
        to_object(
            py,
            &Profile {
                cv_size: p.cv_size,
                cv: p.cv_pretty(),
                cd: p.cd.iter().copied().collect(),
                b: p.b,
                has_zero: p.has_zero,
                conductor: p.conductor,
            },
        )
    }

    fn verify_orthogonality(&self) -> bool {
        verify_orthogonality(&self.inner).is_ok()
    }

    /// Same table up to reordering of rows and columns.
    fn equivalent(&self, other: &CharacterTable) -> bool {
        tables_equivalent(&self.inner, &other.inner)
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.inner.to_record()).expect("table serializes")
    }

    fn __repr__(&self) -> String {
        format!(
            "CharacterTable({:?}, order={}, classes={})",
            self.inner.group_name(),
            self.inner.group_order(),
            self.inner.num_classes()
        )
    }
}

/// Exact orthogonality check of a table in the JSON form written by
/// `CharacterTable.to_json`.
#[pyfunction]
fn verify_table_json(text: &str) -> PyResult<bool> {
    let record: TableRecord =
        serde_json::from_str(text).map_err(|e| CharvalError::new_err(e.to_string()))?;
    Ok(record.verify().is_ok())
}

/// Runs predicates over catalog files or directories and returns the fleet
/// report as a dict.
#[pyfunction]
#[pyo3(signature = (paths, predicates = "all", cap = DEFAULT_ORDER_CAP, seed = DEFAULT_SEED, jobs = 1, with_families = false))]
fn scan(
    py: Python<'_>,
    paths: Vec<PathBuf>,
    predicates: &str,
    cap: usize,
    seed: u64,
    jobs: usize,
    with_families: bool,
) -> PyResult<Py<PyAny>> {
    let predicates = parse_predicates(predicates).map_err(to_py)?;
    let config = RunConfig::new(cap, seed, jobs).map_err(to_py)?;
    let mut sources = catalog_sources(&paths).map_err(to_py)?;
    if with_families {
        sources.extend(default_families().into_iter().map(GroupSource::Family));
    }
    let report = py.detach(|| core_scan(&sources, &predicates, &config));
    to_object(py, &report)
}

#[pymodule]
fn charval(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<CharacterTable>()?;
    m.add_function(wrap_pyfunction!(verify_table_json, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    let py = m.py();
    m.add("CharvalError", py.get_type::<CharvalError>())?;
    m.add("CapExceededError", py.get_type::<CapExceededError>())?;
    m.add("LiftInconsistentError", py.get_type::<LiftInconsistentError>())?;
    Ok(())
}
