//! Trace forms: the Killing form, the Cartan solvability test and trace-orthogonal ideals.

use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::series::derived_subspace;
use crate::error::Result;
use crate::linalg::{Mat, Subspace};

/// Gram matrix of `<x, y> = tr(ad x ad y)` in the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingGram {
    pub gram: Mat,
}

impl KillingGram {
    pub fn is_nondegenerate(&self) -> Result<bool> {
        Ok(self.gram.n_rows() == 0 || !self.gram.det()?.is_zero())
    }
}

pub fn killing_form(l: &LieAlgebra) -> Result<KillingGram> {
    let ads: Vec<Mat> = l.basis().iter().map(|b| l.ad_matrix(b)).collect::<Result<_>>()?;
    let d = l.dim();
    let mut gram = Mat::zeros(d, d);
    for i in 0..d {
        for j in 0..=i {
            let v = ads[i].trace_of_product(&ads[j])?;
            gram[(i, j)] = v.clone();
            gram[(j, i)] = v;
        }
    }
    Ok(KillingGram { gram })
}

/// Radical of the Killing form `{x ∈ L : <x, L> = 0}` as a subspace of `gl(n)`.
pub fn killing_radical(l: &LieAlgebra) -> Result<Subspace> {
    if l.dim() == 0 {
        return Ok(Subspace::zero(l.n() * l.n()));
    }
    let k = killing_form(l)?;
    let kernel = k.gram.kernel();
    let mats: Vec<Mat> = kernel.basis().iter().map(|c| l.element(c)).collect();
    Subspace::from_mats(l.n(), &mats)
}

/// Cartan's criterion for a linear Lie algebra: `tr(ab) = 0` for `a ∈ [L, L]`, `b ∈ L`.
/// Bilinearity makes it enough to check basis pairs.
pub fn cartan_test(l: &LieAlgebra) -> Result<bool> {
    let derived = derived_subspace(l)?.basis_mats()?;
    for a in &derived {
        for b in l.basis() {
            if !a.trace_of_product(b)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `{x ∈ L : tr(x b) = 0 for all b ∈ L}` for the trace form of the defining representation.
pub fn trace_orthogonal_ideal(l: &LieAlgebra) -> Result<Subspace> {
    let d = l.dim();
    if d == 0 {
        return Ok(Subspace::zero(l.n() * l.n()));
    }
    let mut gram = Mat::zeros(d, d);
    for (i, x) in l.basis().iter().enumerate() {
        for (j, y) in l.basis().iter().enumerate() {
            gram[(i, j)] = x.trace_of_product(y)?;
        }
    }
    let mats: Vec<Mat> = gram.kernel().basis().iter().map(|c| l.element(c)).collect();
    Subspace::from_mats(l.n(), &mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::is_solvable;
    use crate::test_support::*;

    #[test]
    fn killing_examples() {
        let (e, f, g) = e1();
        let l = LieAlgebra::from_basis(2, vec![e, f, g]).unwrap();
        let k = killing_form(&l).unwrap();
        assert_eq!(k.gram[(0, 1)], q(2));
        assert_eq!(k.gram[(2, 2)], q(2));
        assert_eq!(k.gram[(0, 0)], q(0));
        assert_eq!(k.gram, k.gram.transpose());
        assert!(k.is_nondegenerate().unwrap());

        let abelian = LieAlgebra::from_basis(2, vec![Mat::identity(2)]).unwrap();
        assert!(killing_form(&abelian).unwrap().gram.is_zero());
        assert!(killing_form(&sl2_algebra()).unwrap().is_nondegenerate().unwrap());
    }

    #[test]
    fn cartan_examples() {
        let abelian = LieAlgebra::from_basis(2, vec![Mat::identity(2)]).unwrap();
        assert!(cartan_test(&abelian).unwrap());
        assert!(cartan_test(&heisenberg()).unwrap());
        let (e, f, _) = sl2();
        assert_eq!(e.trace_of_product(&f).unwrap(), q(1));
        assert!(!cartan_test(&sl2_algebra()).unwrap());
        assert!(!is_solvable(&sl2_algebra()).unwrap());
    }

    #[test]
    fn trace_orthogonal_examples() {
        let nil = LieAlgebra::from_basis(3, vec![Mat::unit(3, 0, 2), Mat::unit(3, 0, 1)]).unwrap();
        assert_eq!(&trace_orthogonal_ideal(&nil).unwrap(), nil.span());
        assert!(trace_orthogonal_ideal(&sl2_algebra()).unwrap().is_zero());
        let h = heisenberg();
        let i = trace_orthogonal_ideal(&h).unwrap();
        assert_eq!(&i, h.span());
        assert!(h.is_ideal(&i).unwrap());
    }

    #[test]
    fn killing_radical_of_solvable() {
        let h = heisenberg();
        assert_eq!(&killing_radical(&h).unwrap(), h.span());
        assert!(killing_radical(&sl2_algebra()).unwrap().is_zero());
    }
}
