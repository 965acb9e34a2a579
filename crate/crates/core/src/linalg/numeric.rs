//! Double-precision complex matrices backing the spectral routines.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::mat::Mat;
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

/// Complex double matrix whose entries are all finite.
#[derive(Clone, Debug, PartialEq)]
pub struct NumMat(DMatrix<Complex64>);

impl NumMat {
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if m.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            Ok(Self(m))
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        Self::new(DMatrix::from_fn(rows, cols, f))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    pub fn inner(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_inner(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn n_rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn n_cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Entrywise nearest-double conversion.
pub fn to_numeric(a: &Mat) -> Result<NumMat> {
    let mut out = DMatrix::zeros(a.n_rows(), a.n_cols());
    for i in 0..a.n_rows() {
        for j in 0..a.n_cols() {
            out[(i, j)] = a[(i, j)].to_complex()?;
        }
    }
    NumMat::new(out)
}

/// Entrywise continued-fraction rationalization; `None` if some entry has no convergent within `tol`.
pub fn rationalize_mat(a: &DMatrix<Complex64>, tol: f64) -> Option<Mat> {
    let rows = (0..a.nrows())
        .map(|i| {
            (0..a.ncols())
                .map(|j| GaussianRational::approximate(a[(i, j)], tol))
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    if rows.is_empty() {
        return Some(Mat::zeros(0, a.ncols()));
    }
    Mat::from_rows(rows).ok()
}
