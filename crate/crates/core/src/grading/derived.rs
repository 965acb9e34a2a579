//! Subgraded algebras built from a given one: the ideals `L′`, `L″` and coarsenings by
//! subgroups.

use std::collections::BTreeMap;

use super::group::{GroupElem, Quotient};
use super::subgraded::{subgraded_from_components, verify_subgrading, SubgradedAlgebra};
use crate::error::{Error, Result};
use crate::lie::bracket_span;
use crate::linalg::Subspace;

fn replace_zero_component(s: &SubgradedAlgebra, include_zero: bool) -> Result<SubgradedAlgebra> {
    let g = s.group();
    let n = s.n();
    let mut zero = Subspace::zero(n * n);
    for gamma in g.elements() {
        if !include_zero && gamma == g.zero() {
            continue;
        }
        let minus = g.neg(&gamma);
        zero = zero.sum(&bracket_span(s.component(&gamma), s.component(&minus))?)?;
    }
    let mut comps: BTreeMap<GroupElem, Subspace> = s.components().clone();
    comps.insert(g.zero(), zero);
    let out = subgraded_from_components(n, g, &comps)?;
    if !s.algebra().is_ideal(out.algebra().span())? {
        return Err(Error::IdentityFailure("derived subgraded algebra is not an ideal".into()));
    }
    Ok(out)
}

/// `L′` with zero component `Σ_γ [L_γ, L_{−γ}]`; checked to be an ideal of `L`.
pub fn l_prime(s: &SubgradedAlgebra) -> Result<SubgradedAlgebra> {
    replace_zero_component(s, true)
}

/// `L″` with zero component `Σ_{γ≠0} [L_γ, L_{−γ}]`; checked to be an ideal of `L`.
pub fn l_double_prime(s: &SubgradedAlgebra) -> Result<SubgradedAlgebra> {
    replace_zero_component(s, false)
}

/// `(G/H)`-subgraded algebra with `M_α = Σ_{γ ∈ α} L_γ`, together with the projection.
pub fn coarsen_by_subgroup(s: &SubgradedAlgebra, h: &[GroupElem]) -> Result<(SubgradedAlgebra, Quotient)> {
    let q = s.group().quotient(h)?;
    let n = s.n();
    let mut comps: BTreeMap<GroupElem, Subspace> = BTreeMap::new();
    for (gamma, c) in s.components() {
        let alpha = q.project(gamma);
        let entry = comps.entry(alpha).or_insert_with(|| Subspace::zero(n * n));
        *entry = entry.sum(c)?;
    }
    let out = verify_subgrading(s.algebra(), &q.group, &comps)?;
    Ok((out, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::FinAbGroup;
    use crate::lie::LieAlgebra;
    use crate::linalg::Mat;
    use crate::test_support::*;

    fn pauli_graded() -> SubgradedAlgebra {
        let (a, b, c) = pauli();
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let l = LieAlgebra::from_basis(2, vec![a.clone(), b.clone(), c.clone()]).unwrap();
        let comps = BTreeMap::from([
            (g.elem(&[0, 1]).unwrap(), Subspace::from_mats(2, &[a]).unwrap()),
            (g.elem(&[1, 0]).unwrap(), Subspace::from_mats(2, &[b]).unwrap()),
            (g.elem(&[1, 1]).unwrap(), Subspace::from_mats(2, &[c]).unwrap()),
        ]);
        verify_subgrading(&l, &g, &comps).unwrap()
    }

    #[test]
    fn pauli_primes_have_zero_degree_zero() {
        let s = pauli_graded();
        let lp = l_prime(&s).unwrap();
        assert!(lp.zero_component().is_zero());
        assert_eq!(lp.algebra().span(), s.algebra().span());
        assert!(l_double_prime(&s).unwrap().zero_component().is_zero());
    }

    #[test]
    fn abelian_double_prime() {
        let g = FinAbGroup::cyclic(2).unwrap();
        let d = Subspace::from_mats(2, &[Mat::identity(2)]).unwrap();
        let e = Subspace::from_mats(2, &[Mat::unit(2, 0, 1)]).unwrap();
        let l = LieAlgebra::from_subspace(&d.sum(&e).unwrap()).unwrap();
        let s = verify_subgrading(&l, &g, &BTreeMap::from([(g.zero(), d), (g.elem(&[1]).unwrap(), e)])).unwrap();
        assert!(l_double_prime(&s).unwrap().zero_component().is_zero());
    }

    #[test]
    fn pauli_coarsening() {
        let s = pauli_graded();
        let g = s.group().clone();
        let (m, q) = coarsen_by_subgroup(&s, &[g.elem(&[0, 1]).unwrap()]).unwrap();
        let (a, b, c) = pauli();
        assert_eq!(q.group.order(), 2);
        assert_eq!(m.zero_component(), &Subspace::from_mats(2, &[a]).unwrap());
        let one = q.project(&g.elem(&[1, 0]).unwrap());
        assert_eq!(m.component(&one), &Subspace::from_mats(2, &[b, c]).unwrap());

        let (all, q) = coarsen_by_subgroup(&s, &[g.elem(&[0, 1]).unwrap(), g.elem(&[1, 0]).unwrap()]).unwrap();
        assert_eq!(q.group.order(), 1);
        assert_eq!(all.zero_component(), s.algebra().span());

        let (same, _) = coarsen_by_subgroup(&s, &[]).unwrap();
        assert_eq!(same.dims().iter().map(|(_, d)| *d).sum::<usize>(), 3);
    }
}
