//! Lie triple systems, Lie n-product systems and Jordan algebras of matrices, with their
//! Lie envelopes and Z₂-subgraded embeddings.

pub mod jordan;
pub mod triple;

pub use jordan::{is_jordan_algebra, is_jordan_ideal, jordan_ideal_chain, jordan_to_z2, JordanIdealChain};
pub use triple::{is_lie_n_product_system, is_lie_triple_system, m_bracket_powers, triple_envelope, triple_to_z2};

use crate::error::Result;
use crate::linalg::{Mat, Subspace};

/// A subspace of `gl(n)` with no closure assumed. The basis is the maximal independent
/// prefix-greedy subset of the matrices it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatSubspace {
    n: usize,
    basis: Vec<Mat>,
    span: Subspace,
}

impl MatSubspace {
    pub fn from_mats(n: usize, mats: &[Mat]) -> Result<Self> {
        let mut span = Subspace::zero(n * n);
        let mut basis = Vec::new();
        for m in mats {
            if span.insert_mat(m)? {
                basis.push(m.clone());
            }
        }
        Ok(Self { n, basis, span })
    }

    pub fn from_subspace(span: &Subspace) -> Result<Self> {
        let n = crate::linalg::subspace::matrix_side(span.ambient_dim())?;
        Ok(Self {
            n,
            basis: span.basis_mats()?,
            span: span.clone(),
        })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            basis: Vec::new(),
            span: Subspace::zero(n * n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_mats(&self) -> &[Mat] {
        &self.basis
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn contains(&self, m: &Mat) -> Result<bool> {
        self.span.contains_mat(m)
    }
}
