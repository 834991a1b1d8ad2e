use num_bigint::BigInt;
use pyo3::exceptions::{PyTypeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::pyclass::CompareOp;

use quadisc::closedform::{self, TrParams};
use quadisc::resultant as res;
use quadisc::{Error, Family, QuadrinomialSpec};

fn err(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// An exact element of Q(i). Built from canonical text such as `"3/4-2i"`
/// or from a Python int.
#[pyclass(name = "GaussianRational", module = "quadisc_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGaussian(pub quadisc::GaussianRational);

/// Accept a GaussianRational, an int, or canonical text.
fn coeff(obj: &Bound<'_, PyAny>) -> PyResult<quadisc::GaussianRational> {
    if let Ok(g) = obj.cast::<PyGaussian>() {
        return Ok(g.get().0.clone());
    }
    if let Ok(i) = obj.extract::<BigInt>() {
        return Ok(i.into());
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.trim().parse().map_err(err);
    }
    Err(PyTypeError::new_err("expected GaussianRational, int or str"))
}

#[pymethods]
impl PyGaussian {
    #[new]
    fn new(value: &Bound<'_, PyAny>) -> PyResult<Self> {
        coeff(value).map(Self)
    }

    /// Real part as `(numerator, denominator)`.
    #[getter]
    fn real(&self) -> (BigInt, BigInt) {
        self.0.re_ratio()
    }

    /// Imaginary part as `(numerator, denominator)`.
    #[getter]
    fn imag(&self) -> (BigInt, BigInt) {
        self.0.im_ratio()
    }

    fn conj(&self) -> Self {
        Self(self.0.conj())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(&self.0 + &coeff(other)?))
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(&self.0 - &coeff(other)?))
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(&coeff(other)? - &self.0))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(&self.0 * &coeff(other)?))
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__mul__(other)
    }

    fn __truediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.0.checked_div(&coeff(other)?).map(Self).map_err(err)
    }

    fn __rtruediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        coeff(other)?.checked_div(&self.0).map(Self).map_err(err)
    }

    fn __pow__(&self, e: i64, _modulo: Option<i64>) -> PyResult<Self> {
        self.0.powi(e).map(Self).map_err(err)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __richcmp__(&self, other: &Bound<'_, PyAny>, op: CompareOp) -> PyResult<bool> {
        let Ok(other) = coeff(other) else {
            return Ok(matches!(op, CompareOp::Ne));
        };
        match op {
            CompareOp::Eq => Ok(self.0 == other),
            CompareOp::Ne => Ok(self.0 != other),
            _ => Err(PyTypeError::new_err("Gaussian rationals are not ordered")),
        }
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GaussianRational('{}')", self.0)
    }
}

/// A dense polynomial over Q(i), from text like `"x^8 - i*x^3 + i*x + 1"`
/// or from ascending coefficients.
#[pyclass(name = "Polynomial", module = "quadisc_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyPolynomial(pub quadisc::Polynomial);

fn polynomial(obj: &Bound<'_, PyAny>) -> PyResult<quadisc::Polynomial> {
    if let Ok(p) = obj.cast::<PyPolynomial>() {
        return Ok(p.get().0.clone());
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(err);
    }
    let items: Vec<Bound<'_, PyAny>> = obj
        .try_iter()
        .map_err(|_| PyTypeError::new_err("expected Polynomial, str or a sequence of coefficients"))?
        .collect::<PyResult<_>>()?;
    let coeffs = items.iter().map(coeff).collect::<PyResult<Vec<_>>>()?;
    Ok(quadisc::Polynomial::new(coeffs))
}

#[pymethods]
impl PyPolynomial {
    #[new]
    fn new(value: &Bound<'_, PyAny>) -> PyResult<Self> {
        polynomial(value).map(Self)
    }

    /// `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    /// Ascending coefficients.
    #[getter]
    fn coeffs(&self) -> Vec<PyGaussian> {
        self.0.coeffs().iter().cloned().map(PyGaussian).collect()
    }

    fn derivative(&self) -> Self {
        Self(self.0.derivative())
    }

    fn reciprocal(&self) -> Self {
        Self(self.0.reciprocal())
    }

    fn eval(&self, x: &Bound<'_, PyAny>) -> PyResult<PyGaussian> {
        Ok(PyGaussian(self.0.eval(&coeff(x)?)))
    }

    fn divmod(&self, g: &Bound<'_, PyAny>) -> PyResult<(Self, Self)> {
        let (q, r) = self.0.divmod(&polynomial(g)?).map_err(err)?;
        Ok((Self(q), Self(r)))
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(&self.0 + &polynomial(other)?))
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(&self.0 - &polynomial(other)?))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(&self.0 * &polynomial(other)?))
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        polynomial(other).is_ok_and(|p| p == self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.0)
    }
}

#[pyclass(name = "DiscriminantResult", module = "quadisc_py", frozen, get_all)]
pub struct PyResult_ {
    value: PyGaussian,
    method: String,
    sign_exponent_audit: BigInt,
}

#[pymethods]
impl PyResult_ {
    fn __repr__(&self) -> String {
        format!(
            "DiscriminantResult(value='{}', method='{}', sign_exponent_audit={})",
            self.value.0, self.method, self.sign_exponent_audit
        )
    }
}

impl From<quadisc::DiscriminantResult> for PyResult_ {
    fn from(r: quadisc::DiscriminantResult) -> Self {
        Self {
            value: PyGaussian(r.value),
            method: r.method.as_str().to_owned(),
            sign_exponent_audit: r.sign_exponent_audit,
        }
    }
}

/// Closed form when the shape has one, the Sylvester oracle otherwise.
#[pyfunction]
fn discriminant(f: &Bound<'_, PyAny>) -> PyResult<PyResult_> {
    quadisc::dispatch(&polynomial(f)?).map(Into::into).map_err(err)
}

#[pyfunction]
fn discriminant_oracle(f: &Bound<'_, PyAny>) -> PyResult<PyResult_> {
    res::discriminant_oracle(&polynomial(f)?).map(Into::into).map_err(err)
}

#[pyfunction]
fn resultant(f: &Bound<'_, PyAny>, g: &Bound<'_, PyAny>) -> PyResult<PyGaussian> {
    res::resultant_sylvester(&polynomial(f)?, &polynomial(g)?).map(PyGaussian).map_err(err)
}

fn quad(
    family: Family,
    n: i64,
    l: i64,
    a: &Bound<'_, PyAny>,
    b: &Bound<'_, PyAny>,
    c: &Bound<'_, PyAny>,
    f: fn(&QuadrinomialSpec) -> quadisc::Result<quadisc::DiscriminantResult>,
) -> PyResult<PyResult_> {
    let spec = QuadrinomialSpec::new(family, n, l, coeff(a)?, coeff(b)?, coeff(c)?).map_err(err)?;
    f(&spec).map(Into::into).map_err(err)
}

/// `x^n + a x² + b x + c`
#[pyfunction]
fn disc_quad_k2(n: i64, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<PyResult_> {
    quad(Family::K2, n, 0, a, b, c, closedform::disc_quad_k2)
}

/// `x^n + a x³ + b x + c`
#[pyfunction]
fn disc_quad_k3(n: i64, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<PyResult_> {
    quad(Family::K3, n, 0, a, b, c, closedform::disc_quad_k3)
}

/// `x^n + a x^(n-1) + b x + c`
#[pyfunction]
fn disc_quad_k_nm1(n: i64, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<PyResult_> {
    quad(Family::KNMinus1, n, 0, a, b, c, closedform::disc_quad_k_nm1)
}

/// `x^n + a x^(n-1) + b x^(n-2) + c`
#[pyfunction]
fn disc_recip_n2(n: i64, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<PyResult_> {
    quad(Family::RecipN2, n, 0, a, b, c, closedform::disc_recip_n2)
}

/// `x^n + a x^(n-1) + b x^(n-3) + c`
#[pyfunction]
fn disc_recip_n3(n: i64, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<PyResult_> {
    quad(Family::RecipN3, n, 0, a, b, c, closedform::disc_recip_n3)
}

/// `x^(2n) + a x^n + b x^l + c`
#[pyfunction]
fn disc_2n_pipeline(
    n: i64,
    l: i64,
    a: &Bound<'_, PyAny>,
    b: &Bound<'_, PyAny>,
    c: &Bound<'_, PyAny>,
) -> PyResult<PyResult_> {
    quad(Family::TwoN, n, l, a, b, c, closedform::disc_2n_pipeline)
}

#[pyfunction]
fn disc_binomial(n: i64, a: &Bound<'_, PyAny>) -> PyResult<PyGaussian> {
    closedform::disc_binomial(n, &coeff(a)?).map(PyGaussian).map_err(err)
}

#[pyfunction]
fn disc_trinomial(n: i64, k: i64, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<PyGaussian> {
    closedform::disc_trinomial(n, k, &coeff(a)?, &coeff(b)?).map(PyGaussian).map_err(err)
}

#[pyfunction]
fn disc_cubic(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<PyGaussian> {
    Ok(PyGaussian(closedform::disc_cubic(&coeff(a)?, &coeff(b)?, &coeff(c)?)))
}

#[pyfunction]
fn disc_quartic_k3(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<PyGaussian> {
    Ok(PyGaussian(closedform::disc_quartic_k3(&coeff(a)?, &coeff(b)?, &coeff(c)?)))
}

/// `x^n + t(x² + a x + b)`
#[pyfunction]
fn disc_otake_shaska(n: i64, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, t: &Bound<'_, PyAny>) -> PyResult<PyGaussian> {
    closedform::disc_otake_shaska(n, &coeff(a)?, &coeff(b)?, &coeff(t)?)
        .map(PyGaussian)
        .map_err(err)
}

fn tr_params(b3: &Bound<'_, PyAny>, b1: &Bound<'_, PyAny>, b0: &Bound<'_, PyAny>) -> PyResult<TrParams> {
    TrParams::new(coeff(b3)?, coeff(b1)?, coeff(b0)?).map_err(err)
}

#[pyfunction]
fn tr_closed(b3: &Bound<'_, PyAny>, b1: &Bound<'_, PyAny>, b0: &Bound<'_, PyAny>, r: u64) -> PyResult<PyGaussian> {
    closedform::tr_closed(&tr_params(b3, b1, b0)?, r).map(PyGaussian).map_err(err)
}

#[pyfunction]
fn tr_recurrence(b3: &Bound<'_, PyAny>, b1: &Bound<'_, PyAny>, b0: &Bound<'_, PyAny>, r: u64) -> PyResult<PyGaussian> {
    closedform::tr_recurrence(&tr_params(b3, b1, b0)?, r).map(PyGaussian).map_err(err)
}

#[pymodule]
fn quadisc_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGaussian>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyResult_>()?;
    m.add_function(wrap_pyfunction!(discriminant, m)?)?;
    m.add_function(wrap_pyfunction!(discriminant_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(resultant, m)?)?;
    m.add_function(wrap_pyfunction!(disc_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(disc_trinomial, m)?)?;
    m.add_function(wrap_pyfunction!(disc_cubic, m)?)?;
    m.add_function(wrap_pyfunction!(disc_quartic_k3, m)?)?;
    m.add_function(wrap_pyfunction!(disc_quad_k2, m)?)?;
    m.add_function(wrap_pyfunction!(disc_quad_k3, m)?)?;
    m.add_function(wrap_pyfunction!(disc_quad_k_nm1, m)?)?;
    m.add_function(wrap_pyfunction!(disc_recip_n2, m)?)?;
    m.add_function(wrap_pyfunction!(disc_recip_n3, m)?)?;
    m.add_function(wrap_pyfunction!(disc_2n_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(disc_otake_shaska, m)?)?;
    m.add_function(wrap_pyfunction!(tr_closed, m)?)?;
    m.add_function(wrap_pyfunction!(tr_recurrence, m)?)?;
    Ok(())
}
