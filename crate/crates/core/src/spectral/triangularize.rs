//! Simultaneous triangularization of solvable Lie algebras, with flag certificates.
//!
//! A common eigenvector is found inside `W`, the common kernel of `[L, L]`. `W` is
//! `L`-invariant and `L` acts on it by commuting operators, so intersecting eigenspaces of
//! the basis elements one at a time leaves a nonzero common eigenspace. Passing to the
//! quotient by that line and recursing produces the flag. Eigenvalues are taken exactly
//! when they lie in Q(i); otherwise the whole construction is redone in floating point with
//! unitary changes of basis.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::eigen::{eig_numeric, numeric_kernel, rational_eigenvalues};
use crate::error::{Error, Result};
use crate::lie::{is_solvable, LieAlgebra};
use crate::linalg::{to_numeric, GaussianRational as Q, Mat, NumMat, Subspace};

type CMat = DMatrix<Complex64>;

/// Columns of an invertible matrix; the span of the first `k` columns is the `k`-th flag member.
#[derive(Clone, Debug)]
pub enum FlagBasis {
    Exact(Mat),
    Numeric(NumMat),
}

#[derive(Clone, Debug)]
pub struct Flag {
    pub basis_change: FlagBasis,
}

impl Flag {
    pub fn exact(basis_change: Mat) -> Self {
        Self {
            basis_change: FlagBasis::Exact(basis_change),
        }
    }

    pub fn n(&self) -> usize {
        match &self.basis_change {
            FlagBasis::Exact(m) => m.n_rows(),
            FlagBasis::Numeric(m) => m.n_rows(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.basis_change, FlagBasis::Exact(_))
    }

    /// Flag whose `k`-th member is spanned by `e_{perm[0]}, …, e_{perm[k-1]}`.
    pub fn coordinate(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut p = Mat::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            p[(i, j)] = Q::one();
        }
        Self::exact(p)
    }

    /// Chain members of dimensions `1..n-1`, for exact flags.
    pub fn chain(&self) -> Result<Option<Vec<Subspace>>> {
        let FlagBasis::Exact(p) = &self.basis_change else {
            return Ok(None);
        };
        let n = p.n_rows();
        let cols: Vec<Vec<Q>> = (0..n).map(|j| p.col(j)).collect();
        (1..n)
            .map(|k| Subspace::from_vectors(n, &cols[..k]))
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }
}

#[derive(Clone, Debug)]
pub struct FlagReport {
    pub pass: bool,
    /// Per matrix: largest strictly-lower entry of the conjugated matrix, relative to
    /// `max(1, ‖a‖)` for numeric flags.
    pub residuals: Vec<f64>,
    pub passes: Vec<bool>,
}

/// Checks that every matrix is upper triangular in the flag's basis.
pub fn verify_flag(mats: &[Mat], flag: &Flag, tol: f64) -> Result<FlagReport> {
    let n = flag.n();
    let mut residuals = Vec::with_capacity(mats.len());
    let mut passes = Vec::with_capacity(mats.len());
    match &flag.basis_change {
        FlagBasis::Exact(p) => {
            let pinv = p
                .inverse()?
                .ok_or_else(|| Error::Precondition("flag basis is singular".into()))?;
            for a in mats {
                let c = pinv.mul(a)?.mul(p)?;
                let mut worst: f64 = 0.0;
                for i in 0..n {
                    for j in 0..i {
                        worst = worst.max(c[(i, j)].to_complex()?.norm());
                    }
                }
                residuals.push(worst);
                passes.push(worst == 0.0 || worst <= tol && !exact_lower_nonzero(&c));
            }
        }
        FlagBasis::Numeric(p) => {
            let pinv = p
                .inner()
                .clone()
                .try_inverse()
                .ok_or_else(|| Error::Precondition("flag basis is singular".into()))?;
            for a in mats {
                let na = to_numeric(a)?;
                let c = &pinv * na.inner() * p.inner();
                let mut worst: f64 = 0.0;
                for i in 0..n {
                    for j in 0..i {
                        worst = worst.max(c[(i, j)].norm());
                    }
                }
                let rel = worst / na.norm().max(1.0);
                residuals.push(rel);
                passes.push(rel <= tol);
            }
        }
    }
    Ok(FlagReport {
        pass: passes.iter().all(|&b| b),
        residuals,
        passes,
    })
}

fn exact_lower_nonzero(c: &Mat) -> bool {
    (0..c.n_rows()).any(|i| (0..i).any(|j| !c[(i, j)].is_zero()))
}

/// Invariant flag for a solvable Lie algebra, verified before it is returned.
pub fn triangularize_solvable(l: &LieAlgebra) -> Result<Flag> {
    if !is_solvable(l)? {
        return Err(Error::Precondition("algebra is not solvable".into()));
    }
    let n = l.n();
    if let Some(p) = exact_flag(l.basis(), n)? {
        let flag = Flag::exact(p);
        let report = verify_flag(l.basis(), &flag, 0.0)?;
        if !report.pass {
            return Err(Error::IdentityFailure("exact flag is not invariant".into()));
        }
        return Ok(flag);
    }
    let num: Vec<CMat> = l
        .basis()
        .iter()
        .map(|a| to_numeric(a).map(NumMat::into_inner))
        .collect::<Result<_>>()?;
    let flag = Flag {
        basis_change: FlagBasis::Numeric(NumMat::new(numeric_flag(&num, n)?)?),
    };
    let report = verify_flag(l.basis(), &flag, super::eigen::DEFAULT_TOL)?;
    if !report.pass {
        let residual = report.residuals.iter().cloned().fold(0.0, f64::max);
        return Err(Error::Verification {
            residual,
            tol: super::eigen::DEFAULT_TOL,
        });
    }
    Ok(flag)
}

fn pairwise_brackets(mats: &[Mat]) -> Result<Vec<Mat>> {
    let mut out = Vec::new();
    for i in 0..mats.len() {
        for j in 0..i {
            let b = mats[i].bracket(&mats[j])?;
            if !b.is_zero() {
                out.push(b);
            }
        }
    }
    Ok(out)
}

/// Matrix of `a` restricted to the invariant subspace `u`, in `u`'s RREF basis.
fn restrict(a: &Mat, u: &Subspace) -> Result<Mat> {
    let k = u.dim();
    let mut r = Mat::zeros(k, k);
    for (j, v) in u.basis().iter().enumerate() {
        let coords = u
            .coordinates(&a.mul_vec(v)?)?
            .ok_or_else(|| Error::IdentityFailure("subspace is not invariant".into()))?;
        for (i, c) in coords.into_iter().enumerate() {
            r[(i, j)] = c;
        }
    }
    Ok(r)
}

fn common_kernel(m: usize, mats: &[Mat]) -> Result<Subspace> {
    if mats.is_empty() {
        return Ok(Subspace::full(m));
    }
    let rows: Vec<Vec<Q>> = mats.iter().flat_map(|d| d.rows_vec()).collect();
    Ok(Mat::from_rows(rows)?.kernel())
}

/// Common eigenvector with Q(i) coordinates, or `None` when some required eigenvalue
/// is not in Q(i).
fn common_eigenvector_exact(mats: &[Mat], m: usize) -> Result<Option<Vec<Q>>> {
    let mut u = common_kernel(m, &pairwise_brackets(mats)?)?;
    if u.is_zero() {
        return Err(Error::IdentityFailure("derived algebra has no common null vector".into()));
    }
    for a in mats {
        if u.dim() == 1 {
            break;
        }
        let r = restrict(a, &u)?;
        let Some(lambda) = rational_eigenvalues(&r)?.into_iter().next() else {
            return Ok(None);
        };
        let k = u.dim();
        let eig = r.sub(&Mat::identity(k).scale(&lambda))?.kernel();
        let vectors: Vec<Vec<Q>> = eig
            .basis()
            .iter()
            .map(|c| {
                let mut w = vec![Q::zero(); m];
                for (ci, ui) in c.iter().zip(u.basis()) {
                    for (x, y) in w.iter_mut().zip(ui) {
                        *x += &(ci * y);
                    }
                }
                w
            })
            .collect();
        u = Subspace::from_vectors(m, &vectors)?;
    }
    Ok(u.basis().first().cloned())
}

fn exact_flag(mats: &[Mat], m: usize) -> Result<Option<Mat>> {
    if m <= 1 {
        return Ok(Some(Mat::identity(m)));
    }
    let Some(v) = common_eigenvector_exact(mats, m)? else {
        return Ok(None);
    };
    let p_idx = v.iter().position(|x| !x.is_zero()).expect("nonzero eigenvector");
    let mut p = Mat::zeros(m, m);
    for (i, x) in v.iter().enumerate() {
        p[(i, 0)] = x.clone();
    }
    let mut col = 1;
    for k in (0..m).filter(|&k| k != p_idx) {
        p[(k, col)] = Q::one();
        col += 1;
    }
    let pinv = p.inverse()?.expect("completion is invertible");
    let reduced: Vec<Mat> = mats
        .iter()
        .map(|a| Ok(pinv.mul(a)?.mul(&p)?.block(1, 1, m - 1, m - 1)))
        .collect::<Result<_>>()?;
    let Some(sub) = exact_flag(&reduced, m - 1)? else {
        return Ok(None);
    };
    let mut lift = Mat::identity(m);
    for i in 0..m - 1 {
        for j in 0..m - 1 {
            lift[(i + 1, j + 1)] = sub[(i, j)].clone();
        }
    }
    Ok(Some(p.mul(&lift)?))
}

const NUM_KERNEL_TOL: f64 = 1e-8;

fn kernel_or_smallest(m: &CMat) -> CMat {
    let k = numeric_kernel(m, NUM_KERNEL_TOL);
    if k.dim() > 0 {
        return k.basis;
    }
    let cols = m.ncols();
    let rows = m.nrows().max(cols);
    let padded = CMat::from_fn(rows, cols, |i, j| {
        if i < m.nrows() {
            m[(i, j)]
        } else {
            Complex64::zero()
        }
    });
    let svd = padded.svd(false, true);
    let vt = svd.v_t.expect("v requested");
    let idx = (0..svd.singular_values.len())
        .min_by(|&a, &b| svd.singular_values[a].total_cmp(&svd.singular_values[b]))
        .expect("nonempty");
    CMat::from_fn(cols, 1, |i, _| vt[(idx, i)].conj())
}

fn common_eigenvector_numeric(mats: &[CMat], m: usize) -> Result<DVector<Complex64>> {
    let mut derived = Vec::new();
    for i in 0..mats.len() {
        for j in 0..i {
            derived.push(&mats[i] * &mats[j] - &mats[j] * &mats[i]);
        }
    }
    let mut u = if derived.is_empty() {
        CMat::identity(m, m)
    } else {
        let stacked = CMat::from_fn(m * derived.len(), m, |i, j| derived[i / m][(i % m, j)]);
        kernel_or_smallest(&stacked)
    };
    for a in mats {
        if u.ncols() == 1 {
            break;
        }
        let r = u.adjoint() * a * &u;
        let eigs = eig_numeric(&NumMat::new(r.clone())?)?;
        let k = r.nrows();
        let shifted = r - CMat::identity(k, k) * eigs[0];
        u = &u * kernel_or_smallest(&shifted);
        // Re-orthonormalize.
        u = u.qr().q();
    }
    Ok(u.column(0).into_owned())
}

/// Unitary matrix whose first column is the unit vector `v`.
fn unitary_completion(v: &DVector<Complex64>) -> CMat {
    let m = v.len();
    let mut cols: Vec<DVector<Complex64>> = vec![v.normalize()];
    for k in 0..m {
        if cols.len() == m {
            break;
        }
        let mut e = DVector::<Complex64>::zeros(m);
        e[k] = Complex64::new(1.0, 0.0);
        for _ in 0..2 {
            for c in &cols {
                let proj = c.dotc(&e);
                e -= c * proj;
            }
        }
        let nrm = e.norm();
        if nrm > 1e-6 {
            cols.push(e / Complex64::new(nrm, 0.0));
        }
    }
    CMat::from_columns(&cols)
}

fn numeric_flag(mats: &[CMat], m: usize) -> Result<CMat> {
    if m <= 1 {
        return Ok(CMat::identity(m, m));
    }
    let v = common_eigenvector_numeric(mats, m)?;
    let p = unitary_completion(&v);
    let reduced: Vec<CMat> = mats
        .iter()
        .map(|a| (p.adjoint() * a * &p).view((1, 1), (m - 1, m - 1)).into_owned())
        .collect();
    let sub = numeric_flag(&reduced, m - 1)?;
    let mut lift = CMat::identity(m, m);
    lift.view_mut((1, 1), (m - 1, m - 1)).copy_from(&sub);
    Ok(p * lift)
}
