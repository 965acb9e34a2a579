//! Dense exact matrices over Q(i).

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::scalar::GaussianRational as Q;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Row-major dense matrix of Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Q::one();
        }
        m
    }

    /// Elementary matrix `E_ij` (0-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Q::one();
        m
    }

    pub fn diag(entries: &[Q]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (k, x) in entries.iter().enumerate() {
            m[(k, k)] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Q::from_int(x)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn require_same_shape(&self, other: &Mat) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.require_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.require_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Mat, f: impl Fn(&Q, &Q) -> Q) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        self.scale(&-Q::one())
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Q]) -> Result<Vec<Q>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Result<Q> {
        let n = self.require_square()?;
        let mut t = Q::zero();
        for k in 0..n {
            t += &self[(k, k)];
        }
        Ok(t)
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &Mat) -> Result<Q> {
        if self.cols != other.rows || self.rows != other.cols {
            return Err(Error::Shape("trace of non-conformable product".into()));
        }
        let mut t = Q::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                let b = &other[(k, i)];
                if !a.is_zero() && !b.is_zero() {
                    t += &(a * b);
                }
            }
        }
        Ok(t)
    }

    pub fn pow(&self, e: u32) -> Result<Mat> {
        let n = self.require_square()?;
        let mut acc = Mat::identity(n);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Mat::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut out = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        out
    }

    /// Row-major flattening into a coordinate vector of length `rows * cols`.
    pub fn flatten(&self) -> Vec<Q> {
        self.data.clone()
    }

    pub fn unflatten(v: &[Q], n: usize) -> Result<Mat> {
        if v.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: v.len(),
            });
        }
        Ok(Mat {
            rows: n,
            cols: n,
            data: v.to_vec(),
        })
    }

    /// Exact nilpotency: `a^n == 0` where `n` is the size.
    pub fn is_nilpotent(&self) -> Result<bool> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(true);
        }
        if !self.trace()?.is_zero() {
            return Ok(false);
        }
        if n <= 3 {
            let mut p = self.clone();
            for _ in 1..n {
                p = p.mul(self)?;
            }
            return Ok(p.is_zero());
        }
        if let Some(nil) = super::modular::is_nilpotent_multimodular(self) {
            return Ok(nil);
        }
        let c = self.char_poly_hessenberg()?;
        Ok(c[..n].iter().all(Q::is_zero))
    }

    /// Characteristic polynomial via reduction to upper Hessenberg form by exact
    /// similarity transforms, then the Hessenberg recurrence. Lowest degree first.
    pub fn char_poly_hessenberg(&self) -> Result<Vec<Q>> {
        let n = self.require_square()?;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let inv = h[(m, m - 1)].inv().expect("nonzero pivot");
            for j in m + 1..n {
                if h[(j, m - 1)].is_zero() {
                    continue;
                }
                let u = &h[(j, m - 1)] * &inv;
                for c in 0..n {
                    let d = &u * &h[(m, c)];
                    h[(j, c)] -= &d;
                }
                for r in 0..n {
                    let d = &u * &h[(r, j)];
                    h[(r, m)] += &d;
                }
            }
        }
        // p[k] is the characteristic polynomial of the leading k x k block.
        let mut p: Vec<Vec<Q>> = vec![vec![Q::one()]];
        for m in 1..=n {
            let prev = &p[m - 1];
            let mut pm = vec![Q::zero(); m + 1];
            for (k, c) in prev.iter().enumerate() {
                pm[k + 1] += c;
                pm[k] -= &(&h[(m - 1, m - 1)] * c);
            }
            let mut t = Q::one();
            for i in 1..m {
                t = &t * &h[(m - i, m - i - 1)];
                if t.is_zero() {
                    break;
                }
                let f = &t * &h[(m - i - 1, m - 1)];
                if f.is_zero() {
                    continue;
                }
                for (k, c) in p[m - i - 1].iter().enumerate() {
                    pm[k] -= &(&f * c);
                }
            }
            p.push(pm);
        }
        Ok(p.pop().expect("n + 1 entries"))
    }

    pub fn is_scalar(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let d = self.data.first().cloned().unwrap_or_else(Q::zero);
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let x = &self[(i, j)];
                if i == j { *x == d } else { x.is_zero() }
            })
        })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                let x = &m[(r, j)] * &inv;
                m[(r, j)] = x;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let delta = &f * &m[(r, j)];
                    m[(i, j)] -= &delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right kernel `{x : self * x = 0}` as a canonical subspace.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors = free
            .iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                v
            })
            .collect::<Vec<_>>();
        Subspace::from_vectors(self.cols, &vectors).expect("kernel vectors share length")
    }

    pub fn inverse(&self) -> Result<Option<Mat>> {
        let n = self.require_square()?;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Q::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        Ok(Some(r.block(0, n, n, n)))
    }

    pub fn det(&self) -> Result<Q> {
        let n = self.require_square()?;
        let mut m = self.clone();
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Q::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    let delta = &f * &m[(c, j)];
                    m[(i, j)] -= &delta;
                }
            }
        }
        Ok(det)
    }

    /// Characteristic polynomial `det(tI - A)` by Faddeev-LeVerrier.
    /// Coefficients are returned lowest degree first; the leading coefficient is 1.
    pub fn char_poly(&self) -> Result<Vec<Q>> {
        let n = self.require_square()?;
        let mut coeffs = vec![Q::zero(); n + 1];
        coeffs[n] = Q::one();
        let mut m = Mat::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&m)?;
            for d in 0..n {
                next[(d, d)] += &coeffs[n - k + 1];
            }
            m = next;
            let am = self.mul(&m)?;
            let c = -(&am.trace()? / &Q::from_int(k as i64));
            coeffs[n - k] = c;
        }
        Ok(coeffs)
    }

    pub fn bracket(&self, other: &Mat) -> Result<Mat> {
        self.require_square()?;
        self.require_same_shape(other)?;
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Jordan product `ab + ba`.
    pub fn jordan(&self, other: &Mat) -> Result<Mat> {
        self.require_square()?;
        self.require_same_shape(other)?;
        self.mul(other)?.add(&other.mul(self)?)
    }

    /// Lie triple product `[a, [b, c]]`.
    pub fn triple(&self, b: &Mat, c: &Mat) -> Result<Mat> {
        self.bracket(&b.bracket(c)?)
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

/// `[a, b] = ab - ba`.
pub fn bracket(a: &Mat, b: &Mat) -> Result<Mat> {
    a.bracket(b)
}

/// `a ∘ b = ab + ba`.
pub fn jordan_product(a: &Mat, b: &Mat) -> Result<Mat> {
    a.jordan(b)
}

/// `[a, [b, c]]`.
pub fn triple_product(a: &Mat, b: &Mat, c: &Mat) -> Result<Mat> {
    a.triple(b, c)
}

pub fn is_nilpotent_exact(a: &Mat) -> Result<bool> {
    a.is_nilpotent()
}
