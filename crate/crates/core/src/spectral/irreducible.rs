//! Irreducibility of matrix sets: Burnside's dimension test plus an invariant-subspace
//! witness search.
//!
//! A set of `n x n` matrices has no proper nonzero invariant subspace over C iff the unital
//! associative algebra it generates is all of `M_n`. The dimension of that algebra is the
//! same over Q(i) and over C, so the verdict is exact. The witness search only exhibits a
//! subspace once reducibility is known.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::eigen::{eig_numeric, numeric_kernel, rational_eigenvalues, NumSubspace};
use crate::error::{Error, Result};
use crate::linalg::{to_numeric, GaussianRational as Q, Mat, Subspace};

const SINGULAR_CANDIDATES: usize = 25;
const RANDOM_PROBES: usize = 100;
const PROBE_SEED: u64 = 0x6a09_e667;

/// Proper nonzero invariant subspace, exact when it has a Q(i) basis.
#[derive(Clone, Debug)]
pub enum Witness {
    Exact(Subspace),
    Numeric(NumSubspace),
}

impl Witness {
    pub fn dim(&self) -> usize {
        match self {
            Witness::Exact(s) => s.dim(),
            Witness::Numeric(s) => s.dim(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct IrreducibilityVerdict {
    pub irreducible: bool,
    pub assoc_dim: usize,
    pub witness: Option<Witness>,
}

fn check_square(n: usize, mats: &[Mat]) -> Result<()> {
    for m in mats {
        if m.n_rows() != n || m.n_cols() != n {
            return Err(Error::Shape(format!(
                "expected {n}x{n} matrix, found {}x{}",
                m.n_rows(),
                m.n_cols()
            )));
        }
    }
    Ok(())
}

/// Basis of the unital associative algebra generated by `mats`, in construction order:
/// the identity first, then left multiples by generators as they first appear.
pub fn assoc_closure(n: usize, mats: &[Mat]) -> Result<Vec<Mat>> {
    check_square(n, mats)?;
    let mut span = Subspace::zero(n * n);
    let mut basis = Vec::new();
    let id = Mat::identity(n);
    if n > 0 {
        span.insert_mat(&id)?;
        basis.push(id);
    }
    let mut i = 0;
    while i < basis.len() {
        for g in mats {
            let w = g.mul(&basis[i])?;
            if span.insert_mat(&w)? {
                basis.push(w);
            }
        }
        i += 1;
    }
    Ok(basis)
}

pub fn assoc_closure_dim(n: usize, mats: &[Mat]) -> Result<usize> {
    Ok(assoc_closure(n, mats)?.len())
}

/// Smallest subspace containing `v` and invariant under every matrix in `mats`.
pub fn orbit_span(mats: &[Mat], v: &[Q]) -> Result<Subspace> {
    let n = v.len();
    let mut span = Subspace::zero(n);
    let mut frontier = vec![v.to_vec()];
    span.insert(v)?;
    while let Some(w) = frontier.pop() {
        for g in mats {
            let gw = g.mul_vec(&w)?;
            if span.insert(&gw)? {
                frontier.push(gw);
            }
        }
    }
    Ok(span)
}

/// Exact invariance: `a v ∈ sub` for every matrix `a` and basis vector `v`.
pub fn is_invariant(mats: &[Mat], sub: &Subspace) -> Result<bool> {
    for a in mats {
        for v in sub.basis() {
            if !sub.contains(&a.mul_vec(v)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Largest residual `‖a w − P a w‖ / max(1, ‖a‖)` over matrices and basis columns.
pub fn invariance_residual(mats: &[Mat], sub: &NumSubspace) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for a in mats {
        let na = to_numeric(a)?;
        let scale = na.norm().max(1.0);
        for j in 0..sub.dim() {
            let w: DVector<Complex64> = sub.basis.column(j).into_owned();
            let aw = na.inner() * w;
            worst = worst.max(sub.residual(&aw) / scale);
        }
    }
    Ok(worst)
}

fn proper(sub: &Subspace) -> bool {
    sub.dim() > 0 && sub.dim() < sub.ambient_dim()
}

/// Closure elements with a nontrivial kernel, in construction order: singular basis
/// elements and shifts `b − λ` by eigenvalues of `b` lying in Q(i).
fn singular_candidates(closure: &[Mat], limit: usize) -> Result<Vec<Mat>> {
    let mut out = Vec::new();
    for b in closure {
        if out.len() >= limit {
            break;
        }
        if b.det()?.is_zero() {
            out.push(b.clone());
            continue;
        }
        let n = b.n_rows();
        for lambda in rational_eigenvalues(b).unwrap_or_default() {
            if out.len() >= limit {
                break;
            }
            out.push(b.sub(&Mat::identity(n).scale(&lambda))?);
        }
    }
    Ok(out)
}

fn exact_witness(n: usize, mats: &[Mat], closure: &[Mat]) -> Result<Option<Subspace>> {
    let mut probes: Vec<Vec<Q>> = Vec::new();
    for c in singular_candidates(closure, SINGULAR_CANDIDATES)? {
        probes.extend(c.kernel().basis().iter().cloned());
    }
    for i in 0..n {
        let mut e = vec![Q::zero(); n];
        e[i] = Q::from_int(1);
        probes.push(e);
    }
    for v in probes {
        let orbit = orbit_span(mats, &v)?;
        if proper(&orbit) {
            return Ok(Some(orbit));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    for _ in 0..RANDOM_PROBES {
        let v: Vec<Q> = (0..n)
            .map(|_| Q::from_parts(rng.random_range(-5..=5), rng.random_range(-5..=5)))
            .collect();
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        let orbit = orbit_span(mats, &v)?;
        if proper(&orbit) {
            return Ok(Some(orbit));
        }
    }
    Ok(None)
}

/// Orbit spans of eigenvectors of a generic closure element, computed in floating point.
/// Needed when every invariant subspace requires irrational coordinates.
fn numeric_witness(n: usize, mats: &[Mat], closure: &[Mat], tol: f64) -> Result<Option<NumSubspace>> {
    let num_closure = closure.iter().map(to_numeric).collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    for _ in 0..3 {
        let mut x = DMatrix::<Complex64>::zeros(n, n);
        for c in &num_closure {
            let w = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            x += c.inner() * w;
        }
        let nx = crate::linalg::NumMat::new(x.clone())?;
        for lambda in eig_numeric(&nx)? {
            let shifted = &x - DMatrix::identity(n, n) * lambda;
            let ker = numeric_kernel(&shifted, 1e-8);
            if ker.dim() == 0 {
                continue;
            }
            let v: DVector<Complex64> = ker.basis.column(0).into_owned();
            let images: Vec<DVector<Complex64>> = num_closure.iter().map(|c| c.inner() * &v).collect();
            let stacked = DMatrix::from_columns(&images);
            let orbit = NumSubspace::column_span(&stacked, 1e-8);
            if orbit.dim() > 0 && orbit.dim() < n && invariance_residual(mats, &orbit)? <= tol {
                return Ok(Some(orbit));
            }
        }
    }
    Ok(None)
}

/// Exact verdict by the Burnside dimension test; for reducible sets, a verified witness.
pub fn decide_irreducible(n: usize, mats: &[Mat]) -> Result<IrreducibilityVerdict> {
    if n == 0 {
        return Err(Error::Precondition("ambient dimension must be positive".into()));
    }
    let closure = assoc_closure(n, mats)?;
    let assoc_dim = closure.len();
    if assoc_dim == n * n {
        return Ok(IrreducibilityVerdict {
            irreducible: true,
            assoc_dim,
            witness: None,
        });
    }
    if let Some(w) = exact_witness(n, mats, &closure)? {
        if !is_invariant(mats, &w)? {
            return Err(Error::IdentityFailure("orbit span is not invariant".into()));
        }
        return Ok(IrreducibilityVerdict {
            irreducible: false,
            assoc_dim,
            witness: Some(Witness::Exact(w)),
        });
    }
    if let Some(w) = numeric_witness(n, mats, &closure, 1e-9)? {
        return Ok(IrreducibilityVerdict {
            irreducible: false,
            assoc_dim,
            witness: Some(Witness::Numeric(w)),
        });
    }
    Err(Error::WitnessSearchExhausted {
        assoc_dim,
        full: n * n,
    })
}
