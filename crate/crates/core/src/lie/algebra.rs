use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{GaussianRational as Q, Mat, Subspace};

/// A bracket-closed subspace of `gl(n)` with a distinguished basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    n: usize,
    basis: Vec<Mat>,
    span: Subspace,
    // Maps RREF coordinates (entries at pivot positions) to coordinates in `basis`.
    to_basis: Mat,
}

impl LieAlgebra {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            basis: Vec::new(),
            span: Subspace::zero(n * n),
            to_basis: Mat::zeros(0, 0),
        }
    }

    /// Builds from an independent, bracket-closed basis. Both properties are checked.
    pub fn from_basis(n: usize, basis: Vec<Mat>) -> Result<Self> {
        let alg = Self::with_basis(n, basis)?;
        if let Some((i, j)) = alg.closure_violation()? {
            return Err(Error::Precondition(format!(
                "basis is not bracket-closed: [b{i}, b{j}] escapes the span"
            )));
        }
        Ok(alg)
    }

    /// The Lie algebra whose basis is the RREF basis of `span`.
    pub fn from_subspace(span: &Subspace) -> Result<Self> {
        let n = crate::linalg::subspace::matrix_side(span.ambient_dim())?;
        Self::from_basis(n, span.basis_mats()?)
    }

    fn with_basis(n: usize, basis: Vec<Mat>) -> Result<Self> {
        let span = Subspace::from_mats(n, &basis)?;
        if span.dim() != basis.len() {
            return Err(Error::Precondition("basis matrices are linearly dependent".into()));
        }
        let d = basis.len();
        let mut c = Mat::zeros(d, d);
        for (k, b) in basis.iter().enumerate() {
            for (j, &p) in span.pivots().iter().enumerate() {
                c[(k, j)] = b.entries()[p].clone();
            }
        }
        let to_basis = if d == 0 {
            Mat::zeros(0, 0)
        } else {
            c.inverse()?.expect("independent basis gives invertible change of basis")
        };
        Ok(Self {
            n,
            basis,
            span,
            to_basis,
        })
    }

    fn closure_violation(&self) -> Result<Option<(usize, usize)>> {
        for i in 0..self.basis.len() {
            for j in 0..i {
                let br = self.basis[i].bracket(&self.basis[j])?;
                if !self.span.contains_mat(&br)? {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// Smallest Lie algebra containing `generators`: bracket basis pairs and
    /// re-canonicalize until nothing new appears.
    pub fn closure(n: usize, generators: &[Mat], cap: usize) -> Result<Self> {
        let mut span = Subspace::zero(n * n);
        let mut basis: Vec<Mat> = Vec::new();
        let push = |m: Mat, basis: &mut Vec<Mat>, span: &mut Subspace| -> Result<()> {
            if m.n_rows() != n || m.n_cols() != n {
                return Err(Error::Shape(format!("expected {n}x{n} generators")));
            }
            if span.contains_mat(&m)? {
                return Ok(());
            }
            if basis.len() + 1 > cap {
                return Err(Error::CapExceeded(cap));
            }
            span.insert_mat(&m)?;
            basis.push(m);
            Ok(())
        };
        for g in generators {
            push(g.clone(), &mut basis, &mut span)?;
        }
        let mut i = 0;
        while i < basis.len() {
            for j in 0..i {
                let br = basis[i].bracket(&basis[j])?;
                push(br, &mut basis, &mut span)?;
            }
            i += 1;
        }
        Self::with_basis(n, basis)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn contains(&self, m: &Mat) -> Result<bool> {
        self.span.contains_mat(m)
    }

    /// Coordinates of `m` in the distinguished basis, or `None` when `m` is outside.
    pub fn coordinates(&self, m: &Mat) -> Result<Option<Vec<Q>>> {
        let Some(rref_coords) = self.span.coordinates(m.entries())? else {
            return Ok(None);
        };
        if rref_coords.is_empty() {
            return Ok(Some(Vec::new()));
        }
        let row = Mat::from_rows(vec![rref_coords])?;
        Ok(Some(row.mul(&self.to_basis)?.row(0).to_vec()))
    }

    /// `sum c_k b_k`.
    pub fn element(&self, coords: &[Q]) -> Mat {
        let mut out = Mat::zeros(self.n, self.n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = out.add(&b.scale(c)).expect("same shape");
            }
        }
        out
    }

    pub fn normalizes(&self, a: &Mat) -> Result<bool> {
        for b in &self.basis {
            if !self.contains(&a.bracket(b)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Matrix of `ad a` restricted to this algebra: column `j` holds the coordinates of `[a, b_j]`.
    pub fn ad_matrix(&self, a: &Mat) -> Result<Mat> {
        let d = self.dim();
        let mut ad = Mat::zeros(d, d);
        for (j, b) in self.basis.iter().enumerate() {
            let coords = self.coordinates(&a.bracket(b)?)?.ok_or(Error::NotNormalizing)?;
            for (i, c) in coords.into_iter().enumerate() {
                ad[(i, j)] = c;
            }
        }
        Ok(ad)
    }

    /// `I` is an ideal iff it sits inside the algebra and `[b, x] ∈ I` for basis `b`, `x`.
    pub fn is_ideal(&self, ideal: &Subspace) -> Result<bool> {
        if !self.span.contains_subspace(ideal)? {
            return Err(Error::NotContained);
        }
        let xs = ideal.basis_mats()?;
        for b in &self.basis {
            for x in &xs {
                if !ideal.contains_mat(&b.bracket(x)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `{x ∈ L : [x, L] = 0}`, the common kernel of all ad maps.
    pub fn center(&self) -> Result<Subspace> {
        let d = self.dim();
        // Stack ad(b_j) acting on coordinates: x = sum c_k b_k is central iff
        // sum_k c_k [b_k, b_j] = 0 for all j, i.e. sum_k c_k (-ad b_j)[:, k] = 0.
        let mut rows = Vec::new();
        for b in &self.basis {
            let ad = self.ad_matrix(b)?;
            rows.extend(ad.rows_vec());
        }
        if d == 0 {
            return Ok(Subspace::zero(self.n * self.n));
        }
        let kernel = Mat::from_rows(rows)?.kernel();
        let mats: Vec<Mat> = kernel.basis().iter().map(|c| self.element(c)).collect();
        Subspace::from_mats(self.n, &mats)
    }

    /// The subalgebra spanned by `sub`, which must be inside this algebra and bracket-closed.
    pub fn subalgebra(&self, sub: &Subspace) -> Result<LieAlgebra> {
        if !self.span.contains_subspace(sub)? {
            return Err(Error::NotContained);
        }
        LieAlgebra::from_subspace(sub)
    }

    /// Jacobi identity on every basis triple, exactly.
    pub fn jacobi_holds(&self) -> Result<bool> {
        let b = &self.basis;
        for x in b {
            for y in b {
                for z in b {
                    let s = x
                        .bracket(&y.bracket(z)?)?
                        .add(&y.bracket(&z.bracket(x)?)?)?
                        .add(&z.bracket(&x.bracket(y)?)?)?;
                    if !s.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// `span{[a, b] : a ∈ A, b ∈ B}` for subspaces of flattened `gl(n)`.
pub fn bracket_span(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    let n = crate::linalg::subspace::matrix_side(a.ambient_dim())?;
    let am = a.basis_mats()?;
    let bm = b.basis_mats()?;
    let mut brackets = Vec::with_capacity(am.len() * bm.len());
    for x in &am {
        for y in &bm {
            brackets.push(x.bracket(y)?);
        }
    }
    Subspace::from_mats(n, &brackets)
}

/// Lie closure with the default cap `n^2`.
pub fn lie_closure(n: usize, generators: &[Mat]) -> Result<LieAlgebra> {
    LieAlgebra::closure(n, generators, n * n)
}

pub fn ad_matrix(l: &LieAlgebra, a: &Mat) -> Result<Mat> {
    l.ad_matrix(a)
}

pub fn is_ideal(l: &LieAlgebra, ideal: &Subspace) -> Result<bool> {
    l.is_ideal(ideal)
}

pub fn center(l: &LieAlgebra) -> Result<Subspace> {
    l.center()
}

/// `V ⊆ span{I}`.
pub fn is_scalar_set(v: &Subspace) -> Result<bool> {
    let n = crate::linalg::subspace::matrix_side(v.ambient_dim())?;
    Ok(v.basis_mats()?.iter().all(Mat::is_scalar) || n == 0)
}
