use super::triple::{is_lie_triple_system, z2_from_odd_part};
use super::MatSubspace;
use crate::error::{Error, Result};
use crate::grading::SubgradedAlgebra;
use crate::lie::{bracket_span, LieAlgebra};
use crate::linalg::Subspace;

/// Closed under `a∘b = ab + ba`, checked on basis pairs.
pub fn is_jordan_algebra(j: &MatSubspace) -> Result<bool> {
    let b = j.basis_mats();
    for (i, x) in b.iter().enumerate() {
        for y in &b[i..] {
            if !j.contains(&x.jordan(y)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `J∘I ⊆ I`, for `I ⊆ J`.
pub fn is_jordan_ideal(j: &MatSubspace, i: &MatSubspace) -> Result<bool> {
    if !j.span().contains_subspace(i.span())? {
        return Err(Error::NotContained);
    }
    for x in j.basis_mats() {
        for y in i.basis_mats() {
            if !i.contains(&x.jordan(y)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Z₂-subgraded algebra `L₀ = [J, J]`, `L₁ = J`. A Jordan algebra is a triple system since
/// `(a∘b)∘c − (a∘c)∘b = [a, [b, c]]`; that is re-checked rather than assumed.
pub fn jordan_to_z2(j: &MatSubspace) -> Result<SubgradedAlgebra> {
    require_jordan(j)?;
    if !is_lie_triple_system(j)? {
        return Err(Error::IdentityFailure("Jordan algebra is not a Lie triple system".into()));
    }
    z2_from_odd_part(j)
}

/// `L(I) ◁ L(J, I) ◁ L(J)` with `L(J, I) = I + [J, I]`.
#[derive(Clone, Debug)]
pub struct JordanIdealChain {
    pub li: LieAlgebra,
    pub lji: LieAlgebra,
    pub lj: LieAlgebra,
}

pub fn jordan_ideal_chain(j: &MatSubspace, i: &MatSubspace) -> Result<JordanIdealChain> {
    require_jordan(j)?;
    if !is_jordan_ideal(j, i)? {
        return Err(Error::Precondition("subspace is not a Jordan ideal".into()));
    }
    let envelope = |a: &Subspace, b: &Subspace| -> Result<LieAlgebra> {
        let span = a.sum(&bracket_span(a, b)?)?;
        LieAlgebra::from_subspace(&span)
            .map_err(|_| Error::IdentityFailure("envelope is not bracket-closed".into()))
    };
    let li = envelope(i.span(), i.span())?;
    let lji = envelope(i.span(), j.span())?;
    let lj = envelope(j.span(), j.span())?;
    let nested = lji.span().contains_subspace(li.span())? && lj.span().contains_subspace(lji.span())?;
    if !nested || !lji.is_ideal(li.span())? || !lj.is_ideal(lji.span())? {
        return Err(Error::IdentityFailure("Jordan ideal chain is not a series of Lie ideals".into()));
    }
    Ok(JordanIdealChain { li, lji, lj })
}

fn require_jordan(j: &MatSubspace) -> Result<()> {
    if !is_jordan_algebra(j)? {
        return Err(Error::Precondition("subspace is not a Jordan algebra".into()));
    }
    Ok(())
}
