use std::collections::BTreeMap;

use super::MatSubspace;
use crate::error::{Error, Result};
use crate::grading::{subgraded_from_components, FinAbGroup, SubgradedAlgebra};
use crate::lie::{bracket_span, LieAlgebra};
use crate::linalg::{Mat, Subspace};

/// Closed under `[a, [b, c]]`, checked on all basis triples.
pub fn is_lie_triple_system(m: &MatSubspace) -> Result<bool> {
    let b = m.basis_mats();
    for y in b {
        for z in b {
            let inner = y.bracket(z)?;
            if inner.is_zero() {
                continue;
            }
            for x in b {
                if !m.contains(&x.bracket(&inner)?)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Spanning sets of `M^[1] = M`, `M^[k+1] = [M, M^[k]]`; returns level `k`. Each level is
/// reduced to a basis before the next bracket.
pub fn m_bracket_powers(m: &MatSubspace, k: usize) -> Result<Vec<Mat>> {
    if k == 0 {
        return Err(Error::Precondition("bracket power must be at least 1".into()));
    }
    let mut level: Vec<Mat> = m.basis_mats().to_vec();
    for _ in 1..k {
        let mut next = Vec::with_capacity(level.len() * m.dim());
        for a in m.basis_mats() {
            for b in &level {
                next.push(a.bracket(b)?);
            }
        }
        level = Subspace::from_mats(m.n(), &next)?.basis_mats()?;
    }
    Ok(level)
}

/// `M^[p] ⊆ M`.
pub fn is_lie_n_product_system(m: &MatSubspace, p: usize) -> Result<bool> {
    if p < 2 {
        return Err(Error::Precondition("product order must be at least 2".into()));
    }
    for x in m_bracket_powers(m, p)? {
        if !m.contains(&x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `L(M) = M + [M, M]` for a triple system `M`.
pub fn triple_envelope(m: &MatSubspace) -> Result<LieAlgebra> {
    require_triple(m)?;
    let span = m.span().sum(&bracket_span(m.span(), m.span())?)?;
    LieAlgebra::from_subspace(&span)
}

/// Z₂-subgraded algebra with `L₀ = [M, M]` and `L₁ = M`; the components may intersect.
pub fn triple_to_z2(m: &MatSubspace) -> Result<SubgradedAlgebra> {
    require_triple(m)?;
    z2_from_odd_part(m)
}

pub(crate) fn z2_from_odd_part(m: &MatSubspace) -> Result<SubgradedAlgebra> {
    let g = FinAbGroup::cyclic(2)?;
    let comps = BTreeMap::from([
        (g.zero(), bracket_span(m.span(), m.span())?),
        (g.elem(&[1])?, m.span().clone()),
    ]);
    subgraded_from_components(m.n(), &g, &comps)
}

fn require_triple(m: &MatSubspace) -> Result<()> {
    if !is_lie_triple_system(m)? {
        return Err(Error::Precondition("subspace is not a Lie triple system".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;

    fn ms(n: usize, mats: &[Mat]) -> MatSubspace {
        MatSubspace::from_mats(n, mats).unwrap()
    }

    #[test]
    fn triple_system_examples() {
        let l = sl2_algebra();
        assert!(is_lie_triple_system(&ms(2, l.basis())).unwrap());
        assert!(is_lie_triple_system(&ms(2, &[Mat::unit(2, 0, 1)])).unwrap());
        let (a, b) = e2();
        assert!(!is_lie_triple_system(&ms(3, &[a, b])).unwrap());
    }

    #[test]
    fn bracket_powers() {
        let d = ms(2, &[Mat::identity(2), Mat::diag(&[q(1), q(0)])]);
        assert!(m_bracket_powers(&d, 2).unwrap().is_empty());

        let (e, f, g) = e1();
        let ef = ms(2, &[e, f]);
        let p2 = Subspace::from_mats(2, &m_bracket_powers(&ef, 2).unwrap()).unwrap();
        assert!(p2.contains_mat(&g).unwrap());

        let (a, b) = e2();
        let m = ms(3, &[a, b]);
        assert!(is_lie_n_product_system(&m, 5).unwrap());
        assert!(!is_lie_n_product_system(&m, 2).unwrap());
        assert!(!m.contains(&Mat::diag(&[q(1), q(-2), q(1)])).unwrap());
        assert!(is_lie_n_product_system(&ms(2, sl2_algebra().basis()), 3).unwrap());
    }

    #[test]
    fn envelopes() {
        let l = sl2_algebra();
        assert_eq!(triple_envelope(&ms(2, l.basis())).unwrap().span(), l.span());
        let sym = ms(2, &[Mat::diag(&[q(1), q(-1)]), Mat::from_i64(&[&[0, 1], &[1, 0]])]);
        assert_eq!(triple_envelope(&sym).unwrap().span(), l.span());
        let (e, f, _) = sl2();
        assert_eq!(triple_envelope(&ms(2, &[e, f])).unwrap().span(), l.span());
        let (a, b) = e2();
        assert!(matches!(triple_envelope(&ms(3, &[a, b])), Err(Error::Precondition(_))));
    }

    #[test]
    fn z2_embeddings() {
        let abelian = ms(2, &[Mat::identity(2), Mat::diag(&[q(1), q(0)])]);
        assert!(triple_to_z2(&abelian).unwrap().zero_component().is_zero());

        let (e, f, h) = sl2();
        let s = triple_to_z2(&ms(2, &[e.clone(), f.clone()])).unwrap();
        assert_eq!(s.zero_component(), &Subspace::from_mats(2, &[h]).unwrap());
        assert_eq!(s.component(&s.group().elem(&[1]).unwrap()), &Subspace::from_mats(2, &[e, f]).unwrap());
        assert!(s.is_direct());

        let l = sl2_algebra();
        let s = triple_to_z2(&ms(2, l.basis())).unwrap();
        assert_eq!(s.zero_component(), l.span());
        assert!(!s.is_direct());
    }
}
