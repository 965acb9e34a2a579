use std::collections::BTreeMap;

use super::group::{FinAbGroup, GroupElem};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Mat, Subspace};

/// A Lie algebra written as a sum of components `L_γ` with `[L_γ, L_δ] ⊆ L_{γ+δ}`.
/// Every group element has a component; absent ones are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgradedAlgebra {
    algebra: LieAlgebra,
    group: FinAbGroup,
    components: BTreeMap<GroupElem, Subspace>,
    is_direct: bool,
}

impl SubgradedAlgebra {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.algebra.n()
    }

    pub fn is_direct(&self) -> bool {
        self.is_direct
    }

    pub fn component(&self, g: &GroupElem) -> &Subspace {
        &self.components[g]
    }

    /// Components in group-element order, zero element first.
    pub fn components(&self) -> &BTreeMap<GroupElem, Subspace> {
        &self.components
    }

    pub fn zero_component(&self) -> &Subspace {
        self.component(&self.group.zero())
    }

    pub fn component_basis(&self, g: &GroupElem) -> Result<Vec<Mat>> {
        self.component(g).basis_mats()
    }

    pub fn dims(&self) -> Vec<(GroupElem, usize)> {
        self.components.iter().map(|(g, s)| (g.clone(), s.dim())).collect()
    }
}

/// Checks containment, the sum condition and the grading law on component bases, and
/// builds the subgraded algebra. Missing group elements get the zero component.
pub fn verify_subgrading(
    algebra: &LieAlgebra,
    group: &FinAbGroup,
    components: &BTreeMap<GroupElem, Subspace>,
) -> Result<SubgradedAlgebra> {
    let n = algebra.n();
    let mut full = BTreeMap::new();
    for g in group.elements() {
        full.insert(g, Subspace::zero(n * n));
    }
    for (g, s) in components {
        group.check(g)?;
        if s.ambient_dim() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: s.ambient_dim(),
            });
        }
        if !algebra.span().contains_subspace(s)? {
            return Err(Error::NotContained);
        }
        full.insert(g.clone(), s.clone());
    }
    let mut sum = Subspace::zero(n * n);
    let mut total = 0;
    for s in full.values() {
        sum = sum.sum(s)?;
        total += s.dim();
    }
    if &sum != algebra.span() {
        return Err(Error::ComponentSum {
            sum_dim: sum.dim(),
            algebra_dim: algebra.dim(),
        });
    }
    let bases: BTreeMap<&GroupElem, Vec<Mat>> = full
        .iter()
        .map(|(g, s)| Ok((g, s.basis_mats()?)))
        .collect::<Result<_>>()?;
    for (g, bg) in &bases {
        for (h, bh) in &bases {
            if h < g {
                continue;
            }
            let target_key = group.add(g, h);
            let target = &full[&target_key];
            for x in bg {
                for y in bh {
                    let br = x.bracket(y)?;
                    if !target.contains_mat(&br)? {
                        return Err(Error::GradingLaw {
                            gamma: g.to_string(),
                            delta: h.to_string(),
                            target: target_key.to_string(),
                            witness: format!("{br:?}"),
                        });
                    }
                }
            }
        }
    }
    Ok(SubgradedAlgebra {
        algebra: algebra.clone(),
        group: group.clone(),
        is_direct: total == algebra.dim(),
        components: full,
    })
}

/// Builds the algebra as the span of the components, then verifies.
pub fn subgraded_from_components(
    n: usize,
    group: &FinAbGroup,
    components: &BTreeMap<GroupElem, Subspace>,
) -> Result<SubgradedAlgebra> {
    let mut sum = Subspace::zero(n * n);
    for s in components.values() {
        sum = sum.sum(s)?;
    }
    let algebra = LieAlgebra::from_subspace(&sum)?;
    verify_subgrading(&algebra, group, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;

    fn span(n: usize, mats: &[Mat]) -> Subspace {
        Subspace::from_mats(n, mats).unwrap()
    }

    #[test]
    fn trivial_grading() {
        let l = sl2_algebra();
        let g = FinAbGroup::trivial();
        let comps = BTreeMap::from([(g.zero(), l.span().clone())]);
        let s = verify_subgrading(&l, &g, &comps).unwrap();
        assert!(s.is_direct());
    }

    #[test]
    fn pauli_grading() {
        let (a, b, c) = pauli();
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let l = LieAlgebra::from_basis(2, vec![a.clone(), b.clone(), c.clone()]).unwrap();
        let comps = BTreeMap::from([
            (g.elem(&[0, 1]).unwrap(), span(2, &[a])),
            (g.elem(&[1, 0]).unwrap(), span(2, &[b])),
            (g.elem(&[1, 1]).unwrap(), span(2, &[c])),
        ]);
        let s = verify_subgrading(&l, &g, &comps).unwrap();
        assert!(s.is_direct());
        assert!(s.zero_component().is_zero());
    }

    #[test]
    fn e1_grading_and_violation() {
        let (e, f, gg) = e1();
        let g = FinAbGroup::cyclic(3).unwrap();
        let l = LieAlgebra::from_basis(2, vec![e.clone(), f.clone(), gg.clone()]).unwrap();
        let comps = BTreeMap::from([
            (g.elem(&[0]).unwrap(), span(2, std::slice::from_ref(&gg))),
            (g.elem(&[1]).unwrap(), span(2, std::slice::from_ref(&e))),
            (g.elem(&[2]).unwrap(), span(2, std::slice::from_ref(&f))),
        ]);
        assert!(verify_subgrading(&l, &g, &comps).unwrap().is_direct());

        let bad = BTreeMap::from([
            (g.elem(&[0]).unwrap(), span(2, &[gg])),
            (g.elem(&[1]).unwrap(), span(2, &[e, f])),
        ]);
        assert!(matches!(verify_subgrading(&l, &g, &bad), Err(Error::GradingLaw { .. })));
    }

    #[test]
    fn missing_component_is_reported() {
        let (e, f, gg) = e1();
        let g = FinAbGroup::cyclic(3).unwrap();
        let l = LieAlgebra::from_basis(2, vec![e.clone(), f, gg]).unwrap();
        let comps = BTreeMap::from([(g.elem(&[1]).unwrap(), span(2, &[e]))]);
        assert!(matches!(verify_subgrading(&l, &g, &comps), Err(Error::ComponentSum { .. })));
    }
}
