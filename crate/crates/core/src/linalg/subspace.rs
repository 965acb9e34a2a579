//! Canonical linear subspaces of coordinate spaces.
//!
//! A [`Subspace`] stores the reduced row echelon basis of its span, so two subspaces
//! are equal exactly when their stored bases are identical.

use num_traits::{One, Zero};

use super::mat::Mat;
use super::scalar::GaussianRational as Q;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![Q::zero(); ambient_dim];
                v[i] = Q::one();
                v
            })
            .collect();
        Self {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// RREF span of `vectors`; the empty list gives the zero subspace.
    pub fn from_vectors(ambient_dim: usize, vectors: &[Vec<Q>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        let nonzero: Vec<Vec<Q>> = vectors
            .iter()
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .cloned()
            .collect();
        if nonzero.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let (r, pivots) = Mat::from_rows(nonzero)?.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Self {
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn from_mats(n: usize, mats: &[Mat]) -> Result<Self> {
        for m in mats {
            if m.n_rows() != n || m.n_cols() != n {
                return Err(Error::Shape(format!(
                    "expected {n}x{n} matrix, found {}x{}",
                    m.n_rows(),
                    m.n_cols()
                )));
            }
        }
        let flat: Vec<Vec<Q>> = mats.iter().map(Mat::flatten).collect();
        Self::from_vectors(n * n, &flat)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> Mat {
        if self.basis.is_empty() {
            return Mat::zeros(0, self.ambient_dim);
        }
        Mat::from_rows(self.basis.clone()).expect("uniform rows")
    }

    /// Basis vectors reinterpreted as `n x n` matrices (requires `ambient_dim == n^2`).
    pub fn basis_mats(&self) -> Result<Vec<Mat>> {
        let n = matrix_side(self.ambient_dim)?;
        self.basis.iter().map(|v| Mat::unflatten(v, n)).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after elimination against the basis; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Q]) -> Result<Vec<Q>> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &(&f * b);
                }
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Q]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    pub fn contains_mat(&self, m: &Mat) -> Result<bool> {
        self.contains(m.entries())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for v in &other.basis {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` with respect to the RREF basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Q]) -> Result<Option<Vec<Q>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.ambient_dim, &all)
    }

    /// Intersection through the kernel of the stacked-basis relation
    /// `sum x_i a_i - sum y_j b_j = 0`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let (da, db) = (self.dim(), other.dim());
        // Columns are the basis vectors of A followed by those of B.
        let mut rel = Mat::zeros(self.ambient_dim, da + db);
        for (j, v) in self.basis.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                rel[(i, j)] = x.clone();
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                rel[(i, da + j)] = x.clone();
            }
        }
        let vectors: Vec<Vec<Q>> = rel
            .kernel()
            .basis()
            .iter()
            .map(|coef| {
                let mut w = vec![Q::zero(); self.ambient_dim];
                for (c, a) in coef[..da].iter().zip(&self.basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, y) in w.iter_mut().zip(a) {
                        *x += &(c * y);
                    }
                }
                w
            })
            .collect();
        Subspace::from_vectors(self.ambient_dim, &vectors)
    }

    /// Adds `v` to the span in place, keeping the basis in RREF. Returns whether the
    /// dimension grew.
    pub fn insert(&mut self, v: &[Q]) -> Result<bool> {
        let mut r = self.reduce(v)?;
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[p].inv().expect("nonzero pivot");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.basis.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        Ok(true)
    }

    pub fn insert_mat(&mut self, m: &Mat) -> Result<bool> {
        self.insert(m.entries())
    }

    /// Some vector of `self` not lying in `other`, if any.
    pub fn vector_outside(&self, other: &Subspace) -> Result<Option<Vec<Q>>> {
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(Some(v.clone()));
            }
        }
        Ok(None)
    }
}

/// Side length `n` with `n * n == len`.
pub fn matrix_side(len: usize) -> Result<usize> {
    let n = (len as f64).sqrt().round() as usize;
    if n * n == len {
        Ok(n)
    } else {
        Err(Error::Shape(format!("{len} is not a perfect square")))
    }
}

pub fn canonicalize(ambient_dim: usize, vectors: &[Vec<Q>]) -> Result<Subspace> {
    Subspace::from_vectors(ambient_dim, vectors)
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersect(b)
}

pub fn subspace_contains(a: &Subspace, v: &[Q]) -> Result<bool> {
    a.contains(v)
}
