//! Complex Schur decomposition, eigenvalues, numeric kernels and generalized eigenspaces.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{to_numeric, GaussianRational, Mat, NumMat};

/// Default relative tolerance for numeric routines.
pub const DEFAULT_TOL: f64 = 1e-9;

type CMat = DMatrix<Complex64>;

fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Unitary `Q` and upper triangular `T` with `A = Q T Q*`.
#[derive(Clone, Debug)]
pub struct Schur {
    pub q: CMat,
    pub t: CMat,
}

fn frobenius(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Householder reduction to upper Hessenberg form, accumulating the unitary factor.
fn hessenberg(a: &CMat) -> (CMat, CMat) {
    let n = a.nrows();
    let mut h = a.clone();
    let mut q = CMat::identity(n, n);
    for k in 0..n.saturating_sub(2) {
        let x: Vec<Complex64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        let xnorm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let phase = if x[0].norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x[0] / x[0].norm()
        };
        let mut v = x.clone();
        v[0] += phase * xnorm;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vnorm;
        }
        // H <- (I - 2vv*) H on rows k+1..n
        for j in 0..n {
            let mut s = czero();
            for (t, vi) in v.iter().enumerate() {
                s += vi.conj() * h[(k + 1 + t, j)];
            }
            for (t, vi) in v.iter().enumerate() {
                h[(k + 1 + t, j)] -= 2.0 * vi * s;
            }
        }
        // H <- H (I - 2vv*) and Q <- Q (I - 2vv*) on columns k+1..n
        for m in [&mut h, &mut q] {
            for i in 0..n {
                let mut s = czero();
                for (t, vi) in v.iter().enumerate() {
                    s += m[(i, k + 1 + t)] * vi;
                }
                for (t, vi) in v.iter().enumerate() {
                    m[(i, k + 1 + t)] -= 2.0 * s * vi.conj();
                }
            }
        }
        for i in k + 2..n {
            h[(i, k)] = czero();
        }
    }
    (q, h)
}

fn givens(x: Complex64, y: Complex64) -> (f64, Complex64) {
    // Returns (c, s) with [c s; -s* c] [x; y] = [r; 0].
    let ny = y.norm();
    if ny == 0.0 {
        return (1.0, czero());
    }
    let nx = x.norm();
    if nx == 0.0 {
        return (0.0, (y / ny).conj());
    }
    let r = (nx * nx + ny * ny).sqrt();
    let c = nx / r;
    let s = (x / nx) * y.conj() / r;
    (c, s)
}

/// Complex Schur form by Hessenberg reduction and Wilkinson-shifted QR sweeps,
/// with a budget of `100 n` sweeps.
pub fn schur(a: &NumMat) -> Result<Schur> {
    let n = a.n_rows();
    if n != a.n_cols() {
        return Err(Error::NotSquare {
            rows: n,
            cols: a.n_cols(),
        });
    }
    let (mut q, mut h) = hessenberg(a.inner());
    if n <= 1 {
        return Ok(Schur { q, t: h });
    }
    let budget = 100 * n;
    let eps = f64::EPSILON;
    let mut sweeps = 0;
    let mut since_deflation = 0;
    let mut hi = n - 1;
    while hi > 0 {
        let mut l = hi;
        while l > 0 {
            let s = h[(l - 1, l - 1)].norm() + h[(l, l)].norm();
            let s = if s == 0.0 { frobenius(&h).max(f64::MIN_POSITIVE) } else { s };
            if h[(l, l - 1)].norm() <= eps * s {
                h[(l, l - 1)] = czero();
                break;
            }
            l -= 1;
        }
        if l == hi {
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        sweeps += 1;
        since_deflation += 1;
        if sweeps > budget {
            return Err(Error::NoConvergence(budget));
        }
        let (a11, a12, a21, a22) = (h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)]);
        let mu = if since_deflation % 11 == 10 {
            // Exceptional shift to break cycles.
            a22 + Complex64::new(h[(hi, hi - 1)].norm(), 0.0)
        } else {
            let half = (a11 - a22) * 0.5;
            let disc = (half * half + a12 * a21).sqrt();
            let m1 = (a11 + a22) * 0.5 + disc;
            let m2 = (a11 + a22) * 0.5 - disc;
            if (m1 - a22).norm() <= (m2 - a22).norm() { m1 } else { m2 }
        };
        for k in l..=hi {
            h[(k, k)] -= mu;
        }
        let mut rots = Vec::with_capacity(hi - l);
        for k in l..hi {
            let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
            for j in k..n {
                let (x, y) = (h[(k, j)], h[(k + 1, j)]);
                h[(k, j)] = c * x + s * y;
                h[(k + 1, j)] = -s.conj() * x + c * y;
            }
            h[(k + 1, k)] = czero();
            rots.push((k, c, s));
        }
        for &(k, c, s) in &rots {
            let rows = (k + 2).min(hi + 1);
            for i in 0..rows {
                let (x, y) = (h[(i, k)], h[(i, k + 1)]);
                h[(i, k)] = c * x + s.conj() * y;
                h[(i, k + 1)] = -s * x + c * y;
            }
            for i in 0..n {
                let (x, y) = (q[(i, k)], q[(i, k + 1)]);
                q[(i, k)] = c * x + s.conj() * y;
                q[(i, k + 1)] = -s * x + c * y;
            }
        }
        for k in l..=hi {
            h[(k, k)] += mu;
        }
    }
    for j in 0..n {
        for i in j + 1..n {
            h[(i, j)] = czero();
        }
    }
    Ok(Schur { q, t: h })
}

/// Eigenvalues with multiplicity. The Schur residual `‖Q T Q* − A‖` is checked against
/// `1e-9 ‖A‖`.
pub fn eig_numeric(a: &NumMat) -> Result<Vec<Complex64>> {
    let s = schur(a)?;
    let recon = &s.q * &s.t * s.q.adjoint();
    let residual = frobenius(&(recon - a.inner()));
    let scale = a.norm().max(f64::MIN_POSITIVE);
    if residual > DEFAULT_TOL * scale.max(1.0) {
        return Err(Error::Verification {
            residual,
            tol: DEFAULT_TOL * scale,
        });
    }
    Ok((0..a.n_rows()).map(|i| s.t[(i, i)]).collect())
}

pub fn spectral_radius(a: &NumMat) -> Result<f64> {
    Ok(eig_numeric(a)?.iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Numeric subspace given by orthonormal columns.
#[derive(Clone, Debug)]
pub struct NumSubspace {
    pub basis: CMat,
}

impl NumSubspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            basis: CMat::zeros(ambient, 0),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    /// Distance from `v` to the subspace.
    pub fn residual(&self, v: &nalgebra::DVector<Complex64>) -> f64 {
        let proj = &self.basis * (self.basis.adjoint() * v);
        (v - proj).norm()
    }

    /// Orthonormal basis of the column span of `m`, keeping directions whose singular
    /// value exceeds `tol * max(1, σ_max)`.
    pub fn column_span(m: &CMat, tol: f64) -> Self {
        let rows = m.nrows();
        if m.ncols() == 0 || rows == 0 {
            return Self::zero(rows);
        }
        let svd = m.clone().svd(true, false);
        let u = svd.u.expect("u requested");
        let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
        let keep: Vec<usize> = (0..svd.singular_values.len())
            .filter(|&i| svd.singular_values[i] > tol * smax.max(1.0))
            .collect();
        let basis = CMat::from_fn(rows, keep.len(), |i, j| u[(i, keep[j])]);
        Self { basis }
    }
}

/// Right singular vectors of `m` for the `k` smallest singular values (`m` padded to
/// at least square so the full right space is available).
fn smallest_right_vectors(m: &CMat, k: usize) -> CMat {
    let cols = m.ncols();
    let rows = m.nrows().max(cols);
    let padded = CMat::from_fn(rows, cols, |i, j| if i < m.nrows() { m[(i, j)] } else { czero() });
    let svd = padded.svd(false, true);
    let vt = svd.v_t.expect("v requested");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[a].total_cmp(&svd.singular_values[b]));
    CMat::from_fn(cols, k, |i, j| vt[(order[j], i)].conj())
}

/// Numeric kernel of `m`: right singular vectors whose singular value is at most
/// `tol * max(1, σ_max)`.
pub fn numeric_kernel(m: &CMat, tol: f64) -> NumSubspace {
    let cols = m.ncols();
    if cols == 0 {
        return NumSubspace::zero(0);
    }
    let rows = m.nrows().max(cols);
    let padded = CMat::from_fn(rows, cols, |i, j| if i < m.nrows() { m[(i, j)] } else { czero() });
    let svd = padded.svd(false, true);
    let vt = svd.v_t.expect("v requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let thresh = tol * smax.max(1.0);
    let small: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] <= thresh)
        .collect();
    NumSubspace {
        basis: CMat::from_fn(cols, small.len(), |i, j| vt[(small[j], i)].conj()),
    }
}

/// Radius used to decide which computed eigenvalues belong to the same exact eigenvalue.
/// Defective eigenvalues only resolve to about `eps^(1/m)`, so this is deliberately loose.
pub fn cluster_radius(a: &NumMat) -> f64 {
    1e-4 * a.norm().max(1.0)
}

/// Groups eigenvalues into clusters `(mean, multiplicity)`, in order of first appearance.
pub fn eigen_clusters(eigs: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    let mut clusters: Vec<(Complex64, Vec<Complex64>)> = Vec::new();
    for &z in eigs {
        match clusters.iter_mut().find(|(c, _)| (c - z).norm() <= radius) {
            Some((c, members)) => {
                members.push(z);
                *c = members.iter().sum::<Complex64>() / members.len() as f64;
            }
            None => clusters.push((z, vec![z])),
        }
    }
    clusters.into_iter().map(|(c, m)| (c, m.len())).collect()
}

/// Orthonormal basis of `ker (a − λ)^m`, where `m` is the algebraic multiplicity of `λ`.
/// A `λ` farther than `tol` (and the clustering radius) from every eigenvalue gives zero.
pub fn generalized_eigenspace_numeric(a: &NumMat, lambda: Complex64, tol: f64) -> Result<NumSubspace> {
    let n = a.n_rows();
    let eigs = eig_numeric(a)?;
    let radius = cluster_radius(a).max(tol);
    let clusters = eigen_clusters(&eigs, radius);
    let Some(&(center, mult)) = clusters.iter().find(|(c, _)| (c - lambda).norm() <= radius) else {
        return Ok(NumSubspace::zero(n));
    };
    let shifted = a.inner() - CMat::identity(n, n) * center;
    let mut power = CMat::identity(n, n);
    for _ in 0..mult {
        power = &power * &shifted;
    }
    Ok(NumSubspace {
        basis: smallest_right_vectors(&power, mult),
    })
}

/// Distinct eigenvalues of `a` lying in Q(i), each confirmed exactly by `det(a − λ) = 0`.
/// Candidates are cluster means of the numeric spectrum, which stay accurate even for
/// defective eigenvalues.
pub fn rational_eigenvalues(a: &Mat) -> Result<Vec<GaussianRational>> {
    let n = a.n_rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let na = to_numeric(a)?;
    let eigs = eig_numeric(&na)?;
    let mut out: Vec<GaussianRational> = Vec::new();
    for (center, _) in eigen_clusters(&eigs, cluster_radius(&na)) {
        let Some(lambda) = GaussianRational::approximate(center, 1e-6 * center.norm().max(1.0)) else {
            continue;
        };
        if out.contains(&lambda) {
            continue;
        }
        let shifted = a.sub(&Mat::identity(n).scale(&lambda))?;
        if shifted.det()?.is_zero() {
            out.push(lambda);
        }
    }
    Ok(out)
}
