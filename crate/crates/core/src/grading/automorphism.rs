//! Gradings from finite-order automorphisms and the eigenspace product rule for
//! endomorphisms. Maps act on coordinates in the algebra's basis: `φ(b_j) = Σ_i φ_ij b_i`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::group::FinAbGroup;
use super::subgraded::{verify_subgrading, SubgradedAlgebra};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{to_numeric, GaussianRational as Q, Mat, Subspace};
use crate::spectral::eigen::{
    cluster_radius, eig_numeric, eigen_clusters, generalized_eigenspace_numeric, numeric_kernel, NumSubspace,
};

const RATIONALIZE_TOL: f64 = 1e-9;

fn check_map_shape(l: &LieAlgebra, phi: &Mat) -> Result<()> {
    let d = l.dim();
    if phi.n_rows() != d || phi.n_cols() != d {
        return Err(Error::Shape(format!(
            "map must be {d}x{d} on the algebra's basis, found {}x{}",
            phi.n_rows(),
            phi.n_cols()
        )));
    }
    Ok(())
}

/// `φ([b_i, b_j]) = [φ(b_i), φ(b_j)]` on all basis pairs.
pub fn preserves_brackets(l: &LieAlgebra, phi: &Mat) -> Result<bool> {
    check_map_shape(l, phi)?;
    let images: Vec<Mat> = (0..l.dim()).map(|j| l.element(&phi.col(j))).collect();
    for i in 0..l.dim() {
        for j in 0..i {
            let br = l.basis()[i].bracket(&l.basis()[j])?;
            let c = l.coordinates(&br)?.ok_or(Error::NotNormalizing)?;
            let lhs = l.element(&phi.mul_vec(&c)?);
            if lhs != images[i].bracket(&images[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn coords_to_subspace(l: &LieAlgebra, coords: &[Vec<Q>]) -> Result<Subspace> {
    let mats: Vec<Mat> = coords.iter().map(|c| l.element(c)).collect();
    Subspace::from_mats(l.n(), &mats)
}

/// Root of unity `θ^k` with `θ = e^{2πi/n}`, when it lies in Q(i).
fn exact_root(n: usize, k: usize) -> Option<Q> {
    match (4 * k) % (4 * n) {
        _ if !(4 * k).is_multiple_of(n) => None,
        _ => Some(match ((4 * k) / n) % 4 {
            0 => Q::one(),
            1 => Q::i(),
            2 => -Q::one(),
            _ => -Q::i(),
        }),
    }
}

/// Gauss-Jordan with partial pivoting on the rows of `m`; rows with no pivot above `tol`
/// are dropped. Pivots are scaled to 1, so a subspace has a unique result.
fn rref_numeric(mut m: DMatrix<Complex64>, tol: f64) -> DMatrix<Complex64> {
    let (rows, cols) = m.shape();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let (best, val) = (r..rows)
            .map(|i| (i, m[(i, c)].norm()))
            .fold((r, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if val <= tol {
            for i in r..rows {
                m[(i, c)] = Complex64::zero();
            }
            continue;
        }
        m.swap_rows(r, best);
        let p = m[(r, c)];
        for j in 0..cols {
            m[(r, j)] /= p;
        }
        for i in 0..rows {
            if i != r {
                let f = m[(i, c)];
                if f != Complex64::zero() {
                    for j in 0..cols {
                        let v = m[(r, j)];
                        m[(i, j)] -= f * v;
                    }
                }
            }
        }
        r += 1;
    }
    m.rows(0, r).into_owned()
}

fn rationalized_eigenspace(phi: &Mat, num_phi: &DMatrix<Complex64>, theta: Complex64) -> Result<Vec<Vec<Q>>> {
    let d = phi.n_rows();
    let shifted = num_phi - DMatrix::identity(d, d) * theta;
    let ker = numeric_kernel(&shifted, RATIONALIZE_TOL);
    if ker.dim() == 0 {
        return Ok(Vec::new());
    }
    let rows = rref_numeric(ker.basis.transpose(), 1e-6);
    let exact = (0..rows.nrows())
        .map(|i| {
            (0..d)
                .map(|j| Q::approximate(rows[(i, j)], RATIONALIZE_TOL))
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::Rationalization)?;
    let Some(lambda) = Q::approximate(theta, 1e-12) else {
        return Err(Error::Rationalization);
    };
    for v in &exact {
        let pv = phi.mul_vec(v)?;
        if pv.iter().zip(v).any(|(a, b)| *a != &lambda * b) {
            return Err(Error::Rationalization);
        }
    }
    Ok(exact)
}

/// `Z_n`-grading with `L_k = {x : φ(x) = θ^k x}`, `θ = e^{2πi/n}`. Eigenspaces are exact
/// kernels when every `θ^k` lies in Q(i) (n ∈ {1, 2, 4}); otherwise they are computed
/// numerically, rationalized and re-verified exactly.
pub fn grading_from_automorphism(l: &LieAlgebra, phi: &Mat, n: usize) -> Result<SubgradedAlgebra> {
    check_map_shape(l, phi)?;
    if n == 0 {
        return Err(Error::Precondition("order must be positive".into()));
    }
    let d = l.dim();
    if d > 0 && phi.det()?.is_zero() {
        return Err(Error::NotAutomorphism("map is singular".into()));
    }
    if !preserves_brackets(l, phi)? {
        return Err(Error::NotAutomorphism("map does not preserve brackets".into()));
    }
    if phi.pow(n as u32)? != Mat::identity(d) {
        return Err(Error::OrderMismatch(n));
    }
    let group = FinAbGroup::cyclic(n as u64)?;
    let exact_mode = matches!(n, 1 | 2 | 4);
    let num_phi = to_numeric(phi)?.into_inner();
    let mut comps = BTreeMap::new();
    for k in 0..n {
        let coords: Vec<Vec<Q>> = if exact_mode {
            let t = exact_root(n, k).expect("root lies in Q(i)");
            phi.sub(&Mat::identity(d).scale(&t))?.kernel().basis().to_vec()
        } else {
            let angle = 2.0 * PI * k as f64 / n as f64;
            rationalized_eigenspace(phi, &num_phi, Complex64::new(angle.cos(), angle.sin()))?
        };
        comps.insert(group.elem(&[k as u64])?, coords_to_subspace(l, &coords)?);
    }
    verify_subgrading(l, &group, &comps)
}

#[derive(Clone, Debug)]
pub struct EndoViolation {
    pub lambda: Complex64,
    pub mu: Complex64,
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct EndoReport {
    pub eigenvalues: Vec<(Complex64, usize)>,
    pub pairs_checked: usize,
    pub violations: Vec<EndoViolation>,
}

impl EndoReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `[E_λ(φ), E_μ(φ)] ⊆ E_{λμ}(φ)` on generalized eigenspaces, numerically.
pub fn endo_eigenspace_product_check(l: &LieAlgebra, phi: &Mat, tol: f64) -> Result<EndoReport> {
    check_map_shape(l, phi)?;
    if !preserves_brackets(l, phi)? {
        return Err(Error::NotEndomorphism);
    }
    let d = l.dim();
    if d == 0 {
        return Ok(EndoReport {
            eigenvalues: Vec::new(),
            pairs_checked: 0,
            violations: Vec::new(),
        });
    }
    let nphi = to_numeric(phi)?;
    let radius = cluster_radius(&nphi);
    let clusters = eigen_clusters(&eig_numeric(&nphi)?, radius);
    let spaces: Vec<NumSubspace> = clusters
        .iter()
        .map(|(c, _)| generalized_eigenspace_numeric(&nphi, *c, tol))
        .collect::<Result<_>>()?;
    // Structure constants: coordinates of [b_i, b_j].
    let mut consts = vec![vec![DVector::<Complex64>::zeros(d); d]; d];
    let mut scale: f64 = 1.0;
    for i in 0..d {
        for j in 0..d {
            let br = l.basis()[i].bracket(&l.basis()[j])?;
            let c = l.coordinates(&br)?.ok_or(Error::NotNormalizing)?;
            let v = DVector::from_iterator(d, c.iter().map(|x| x.to_complex().unwrap_or_default()));
            scale = scale.max(v.norm());
            consts[i][j] = v;
        }
    }
    let mut pairs_checked = 0;
    let mut violations = Vec::new();
    for (a, (lambda, _)) in clusters.iter().enumerate() {
        for (b, (mu, _)) in clusters.iter().enumerate() {
            pairs_checked += 1;
            let prod = lambda * mu;
            let target = clusters
                .iter()
                .position(|(c, _)| (c - prod).norm() <= radius.max(tol))
                .map(|t| spaces[t].clone())
                .unwrap_or_else(|| NumSubspace::zero(d));
            let mut worst: f64 = 0.0;
            for x in spaces[a].basis.column_iter() {
                for y in spaces[b].basis.column_iter() {
                    let mut z = DVector::<Complex64>::zeros(d);
                    for i in 0..d {
                        for j in 0..d {
                            let w = x[i] * y[j];
                            if w != Complex64::zero() {
                                z += &consts[i][j] * w;
                            }
                        }
                    }
                    worst = worst.max(target.residual(&z) / scale);
                }
            }
            if worst > tol {
                violations.push(EndoViolation {
                    lambda: *lambda,
                    mu: *mu,
                    residual: worst,
                });
            }
        }
    }
    Ok(EndoReport {
        eigenvalues: clusters,
        pairs_checked,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;

    fn e1_algebra() -> LieAlgebra {
        let (e, f, g) = e1();
        LieAlgebra::from_basis(2, vec![e, f, g]).unwrap()
    }

    #[test]
    fn identity_gives_degree_zero() {
        let l = e1_algebra();
        let s = grading_from_automorphism(&l, &Mat::identity(3), 1).unwrap();
        assert_eq!(s.zero_component(), l.span());
    }

    #[test]
    fn order_two_on_e1() {
        let l = e1_algebra();
        let phi = Mat::diag(&[q(-1), q(-1), q(1)]);
        let s = grading_from_automorphism(&l, &phi, 2).unwrap();
        let (e, f, g) = e1();
        assert_eq!(s.zero_component(), &Subspace::from_mats(2, std::slice::from_ref(&g)).unwrap());
        let one = s.group().elem(&[1]).unwrap();
        assert_eq!(s.component(&one), &Subspace::from_mats(2, &[e.clone(), f.clone()]).unwrap());

        // Same involution viewed with n = 6 goes through the numeric path.
        let s6 = grading_from_automorphism(&l, &phi, 6).unwrap();
        assert_eq!(s6.zero_component(), &Subspace::from_mats(2, &[g]).unwrap());
        let three = s6.group().elem(&[3]).unwrap();
        assert_eq!(s6.component(&three), &Subspace::from_mats(2, &[e, f]).unwrap());
    }

    #[test]
    fn rotation_of_order_four() {
        let l = LieAlgebra::from_basis(2, vec![Mat::identity(2), Mat::diag(&[q(1), q(-1)])]).unwrap();
        let rot = Mat::from_i64(&[&[0, -1], &[1, 0]]);
        let s = grading_from_automorphism(&l, &rot, 4).unwrap();
        let dims: Vec<usize> = s.dims().iter().map(|(_, d)| *d).collect();
        assert_eq!(dims, vec![0, 1, 0, 1]);
    }

    #[test]
    fn cyclic_permutation_has_irrational_eigenspaces() {
        let l = LieAlgebra::from_basis(3, vec![Mat::unit(3, 0, 0), Mat::unit(3, 1, 1), Mat::unit(3, 2, 2)]).unwrap();
        let perm = Mat::from_i64(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        assert!(matches!(grading_from_automorphism(&l, &perm, 3), Err(Error::Rationalization)));
    }

    #[test]
    fn automorphism_errors() {
        let l = e1_algebra();
        assert!(matches!(
            grading_from_automorphism(&l, &Mat::diag(&[q(-1), q(1), q(1)]), 2),
            Err(Error::NotAutomorphism(_))
        ));
        let phi = Mat::diag(&[q(-1), q(-1), q(1)]);
        assert!(matches!(grading_from_automorphism(&l, &phi, 3), Err(Error::OrderMismatch(3))));
    }

    #[test]
    fn endo_products() {
        let l = e1_algebra();
        let r = endo_eigenspace_product_check(&l, &Mat::identity(3), 1e-6).unwrap();
        assert!(r.pass());
        assert_eq!(r.eigenvalues.len(), 1);
        let r = endo_eigenspace_product_check(&l, &Mat::diag(&[q(-1), q(-1), q(1)]), 1e-6).unwrap();
        assert!(r.pass());
        assert_eq!(r.pairs_checked, 4);
        assert!(matches!(
            endo_eigenspace_product_check(&l, &Mat::diag(&[q(2), q(1), q(1)]), 1e-6),
            Err(Error::NotEndomorphism)
        ));
    }

    #[test]
    fn exact_roots() {
        assert_eq!(exact_root(4, 1), Some(Q::i()));
        assert_eq!(exact_root(6, 3), Some(-Q::one()));
        assert_eq!(exact_root(8, 2), Some(Q::i()));
        assert_eq!(exact_root(3, 1), None);
    }
}
