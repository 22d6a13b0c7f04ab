//! Python bindings. Rationals cross the boundary as strings such as `"3/10"`;
//! inputs may be `int`, `str` or `fractions.Fraction`.

use cobg_core::interchange::{compressed_to_json, matrix_from_json, matrix_to_json};
use cobg_core::{BasisId, Family, Rational};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: cobg_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn basis(name: &str) -> PyResult<BasisId> {
    name.parse().map_err(err)
}

fn family(name: &str) -> PyResult<Family> {
    name.parse().map_err(err)
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    obj.str()?.to_string().trim().parse().map_err(err)
}

fn text(v: &[Rational]) -> Vec<String> {
    v.iter().map(Rational::to_string).collect()
}

fn spec(
    m: usize,
    k1: Option<usize>,
    k2: Option<usize>,
    case3: bool,
    case4: bool,
) -> PyResult<cobg_core::CompressionSpec> {
    cobg_core::CompressionSpec::new(m, k1, k2, case3, case4).map_err(err)
}

/// A typed upper-triangular change-of-basis matrix.
#[pyclass(name = "Matrix", module = "pycobg", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Matrix {
    inner: cobg_core::CobMatrix,
}

#[pymethods]
impl Matrix {
    /// Matrix taking coordinates in `source` to coordinates in `target`.
    #[new]
    fn new(source: &str, target: &str, dim: usize) -> PyResult<Self> {
        let inner = cobg_core::build_cob(basis(source)?, basis(target)?, dim).map_err(err)?;
        Ok(Matrix { inner })
    }

    #[staticmethod]
    fn identity(basis_name: &str, dim: usize) -> PyResult<Self> {
        let inner = cobg_core::CobMatrix::identity(basis(basis_name)?, dim).map_err(err)?;
        Ok(Matrix { inner })
    }

    #[staticmethod]
    fn from_json(doc: &str) -> PyResult<Self> {
        Ok(Matrix {
            inner: matrix_from_json(doc).map_err(err)?,
        })
    }

    #[getter]
    fn range(&self) -> String {
        self.inner.range().to_string()
    }

    #[getter]
    fn domain(&self) -> String {
        self.inner.domain().to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.inner.rows().iter().map(|r| text(r)).collect()
    }

    fn entry(&self, row: usize, col: usize) -> PyResult<String> {
        let n = self.inner.dim();
        if row >= n || col >= n {
            return Err(PyValueError::new_err(format!(
                "index ({row}, {col}) outside a {n}x{n} matrix"
            )));
        }
        Ok(self.inner.entry(row, col).to_string())
    }

    fn column(&self, col: usize) -> PyResult<Vec<String>> {
        if col >= self.inner.dim() {
            return Err(PyValueError::new_err(format!("column {col} out of range")));
        }
        Ok(text(&self.inner.column(col)))
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    fn inverse(&self) -> PyResult<Matrix> {
        Ok(Matrix {
            inner: cobg_core::inverse(&self.inner).map_err(err)?,
        })
    }

    /// `self @ other`, defined when `other.range == self.domain`.
    fn compose(&self, other: &Matrix) -> PyResult<Matrix> {
        Ok(Matrix {
            inner: cobg_core::compose(&self.inner, &other.inner).map_err(err)?,
        })
    }

    fn __matmul__(&self, other: &Matrix) -> PyResult<Matrix> {
        self.compose(other)
    }

    /// Coordinates in the range basis of the vector with `coords` in the domain basis.
    fn apply(&self, coords: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<String>> {
        let values = coords.iter().map(rational).collect::<PyResult<Vec<_>>>()?;
        let v = cobg_core::CoordVec::new(self.inner.domain(), values);
        Ok(text(
            &cobg_core::apply(&self.inner, &v).map_err(err)?.coords,
        ))
    }

    /// Retained submatrix after the requested exclusions, as a JSON document.
    #[pyo3(signature = (k1=None, k2=None, case3=false, case4=false))]
    fn compress(
        &self,
        k1: Option<usize>,
        k2: Option<usize>,
        case3: bool,
        case4: bool,
    ) -> PyResult<String> {
        let s = spec(self.inner.dim(), k1, k2, case3, case4)?;
        Ok(compressed_to_json(
            &cobg_core::compress(&self.inner, &s).map_err(err)?,
        ))
    }

    fn to_json(&self) -> String {
        matrix_to_json(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Matrix('{}' -> '{}', dim={})",
            self.domain(),
            self.range(),
            self.dim()
        )
    }
}

/// Expansion of basis polynomial `n` of `source` in `target`, highest index first.
#[pyfunction]
fn expand(source: &str, n: usize, target: &str) -> PyResult<Vec<(usize, String)>> {
    let terms = cobg_core::expand(family(source)?, n, family(target)?).map_err(err)?;
    Ok(terms.into_iter().map(|(i, c)| (i, c.to_string())).collect())
}

/// Monomial coefficients of basis polynomial `n`, constant term first.
#[pyfunction]
fn polynomial(name: &str, n: usize) -> PyResult<Vec<String>> {
    let p = cobg_core::basis_polynomial(family(name)?, n);
    Ok((0..=n).map(|i| p.coeff(i).to_string()).collect())
}

/// Number of groupoid elements and whether every axiom held.
#[pyfunction]
fn verify(bases: Vec<String>, dim: usize) -> PyResult<(usize, bool)> {
    let ids = bases
        .iter()
        .map(|b| basis(b))
        .collect::<PyResult<Vec<_>>>()?;
    let report = cobg_core::verify_groupoid(&ids, dim).map_err(err)?;
    Ok((report.elements, report.all_passed()))
}

/// Stored entry count of an `m x m` matrix under the given exclusions.
#[pyfunction]
#[pyo3(signature = (m, k1=None, k2=None, case3=false, case4=false))]
fn count(
    m: usize,
    k1: Option<usize>,
    k2: Option<usize>,
    case3: bool,
    case4: bool,
) -> PyResult<usize> {
    Ok(cobg_core::included_count(&spec(m, k1, k2, case3, case4)?))
}

#[pymodule]
fn pycobg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Matrix>()?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
    m.add("FAMILIES", names)?;
    Ok(())
}
