//! Graded ampliation `L^π` with components `L_γ ⊗ π(γ)`, for `π` the regular representation.
//!
//! `a ⊗ π(γ)` is realized as `kron(π(γ), a)`, a block matrix whose `(i, j)` block is
//! `π(γ)_{ij} a`. Exactly one block in each block column is nonzero, so summing the first
//! block column recovers `a`; that sum is `f_π`.

use std::collections::BTreeMap;

use num_traits::One;

use super::group::{FinAbGroup, GroupElem};
use super::subgraded::{verify_subgrading, SubgradedAlgebra};
use crate::error::{Error, Result};
use crate::lie::{is_nilpotent_lie, is_solvable, LieAlgebra};
use crate::linalg::{GaussianRational as Q, Mat, Subspace};

/// Regular representation: `π(γ)` sends basis vector `e_δ` to `e_{γ+δ}`.
pub fn regular_rep(g: &FinAbGroup) -> BTreeMap<GroupElem, Mat> {
    let elems = g.elements();
    let size = elems.len();
    elems
        .iter()
        .map(|gamma| {
            let mut p = Mat::zeros(size, size);
            for delta in &elems {
                p[(g.index_of(&g.add(gamma, delta)), g.index_of(delta))] = Q::one();
            }
            (gamma.clone(), p)
        })
        .collect()
}

/// `f_π`: sum of the first block column of an `(n·m) x (n·m)` matrix.
pub fn f_pi(n: usize, x: &Mat) -> Result<Mat> {
    if n == 0 || !x.n_rows().is_multiple_of(n) || !x.is_square() {
        return Err(Error::Shape("ampliated matrix has wrong size".into()));
    }
    let blocks = x.n_rows() / n;
    let mut out = Mat::zeros(n, n);
    for i in 0..blocks {
        out = out.add(&x.block(i * n, 0, n, n))?;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct BackMapEntry {
    pub degree: GroupElem,
    pub ampliated: Mat,
    pub original: Mat,
}

#[derive(Clone, Debug)]
pub struct AmpliationResult {
    pub ampliated: SubgradedAlgebra,
    /// `f_π` on each ampliated component basis element.
    pub back_map_table: Vec<BackMapEntry>,
}

/// Builds `L^π`, verifies it is graded and direct, and that `f_π` is a surjective
/// homomorphism mapping each component into the matching original component.
pub fn ampliate(s: &SubgradedAlgebra) -> Result<AmpliationResult> {
    let n = s.n();
    let group = s.group();
    let pi = regular_rep(group);
    let big = n * group.order();
    let mut components = BTreeMap::new();
    let mut table = Vec::new();
    let mut basis = Vec::new();
    for (gamma, comp) in s.components() {
        let mut mats = Vec::new();
        for a in comp.basis_mats()? {
            let x = pi[gamma].kron(&a);
            table.push(BackMapEntry {
                degree: gamma.clone(),
                ampliated: x.clone(),
                original: a,
            });
            mats.push(x);
        }
        components.insert(gamma.clone(), Subspace::from_mats(big, &mats)?);
        basis.extend(mats);
    }
    let algebra = LieAlgebra::from_basis(big, basis)?;
    let ampliated = verify_subgrading(&algebra, group, &components)?;
    if !ampliated.is_direct() {
        return Err(Error::IdentityFailure("ampliation is not direct".into()));
    }
    for e in &table {
        let back = f_pi(n, &e.ampliated)?;
        if back != e.original || !s.component(&e.degree).contains_mat(&back)? {
            return Err(Error::IdentityFailure(format!("f_pi misplaces a degree {} element", e.degree)));
        }
    }
    for u in &table {
        for v in &table {
            let lhs = f_pi(n, &u.ampliated.bracket(&v.ampliated)?)?;
            if lhs != u.original.bracket(&v.original)? {
                return Err(Error::IdentityFailure("f_pi is not a homomorphism".into()));
            }
        }
    }
    let images: Vec<Mat> = table.iter().map(|e| e.original.clone()).collect();
    if &Subspace::from_mats(n, &images)? != s.algebra().span() {
        return Err(Error::IdentityFailure("f_pi is not surjective".into()));
    }
    Ok(AmpliationResult {
        ampliated,
        back_map_table: table,
    })
}

/// Truth values for "if `L^π` is Engel (solvable), so is `L`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaptriReport {
    pub ampliated_engel: bool,
    pub original_engel: bool,
    pub ampliated_solvable: bool,
    pub original_solvable: bool,
}

impl MaptriReport {
    pub fn consistent(&self) -> bool {
        (!self.ampliated_engel || self.original_engel) && (!self.ampliated_solvable || self.original_solvable)
    }
}

/// An Engel Lie algebra of matrices is, at finite dimension, a nilpotent one.
pub fn check_maptri(s: &SubgradedAlgebra) -> Result<MaptriReport> {
    maptri_report(s, &ampliate(s)?)
}

/// [`check_maptri`] for an ampliation already built. Nilpotent algebras are solvable, so
/// the lower central series is only computed for solvable ones.
pub fn maptri_report(s: &SubgradedAlgebra, amp: &AmpliationResult) -> Result<MaptriReport> {
    let big = amp.ampliated.algebra();
    let ampliated_solvable = is_solvable(big)?;
    let original_solvable = is_solvable(s.algebra())?;
    Ok(MaptriReport {
        ampliated_engel: ampliated_solvable && is_nilpotent_lie(big)?,
        original_engel: original_solvable && is_nilpotent_lie(s.algebra())?,
        ampliated_solvable,
        original_solvable,
    })
}

/// A bracket of component basis elements, tagged with its degree `γ + δ`.
#[derive(Clone, Debug)]
pub struct HomogeneousCommutator {
    pub left: GroupElem,
    pub right: GroupElem,
    pub degree: GroupElem,
    pub value: Mat,
}

/// Brackets of all component-basis pairs; they span the span of all homogeneous commutators.
pub fn homogeneous_commutators(s: &SubgradedAlgebra) -> Result<Vec<HomogeneousCommutator>> {
    let g = s.group();
    let bases: Vec<(GroupElem, Vec<Mat>)> = s
        .components()
        .iter()
        .map(|(k, c)| Ok((k.clone(), c.basis_mats()?)))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (i, (ga, ba)) in bases.iter().enumerate() {
        for (gb, bb) in &bases[i..] {
            for (p, x) in ba.iter().enumerate() {
                let start = if ga == gb { p + 1 } else { 0 };
                for y in &bb[start..] {
                    out.push(HomogeneousCommutator {
                        left: ga.clone(),
                        right: gb.clone(),
                        degree: g.add(ga, gb),
                        value: x.bracket(y)?,
                    });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;

    #[test]
    fn regular_rep_examples() {
        let t = regular_rep(&FinAbGroup::trivial());
        assert_eq!(t.values().next().unwrap(), &Mat::identity(1));
        let z2 = FinAbGroup::cyclic(2).unwrap();
        let p = regular_rep(&z2);
        assert_eq!(p[&z2.elem(&[0]).unwrap()], Mat::identity(2));
        assert_eq!(p[&z2.elem(&[1]).unwrap()], Mat::from_i64(&[&[0, 1], &[1, 0]]));
        let z3 = FinAbGroup::cyclic(3).unwrap();
        let p = regular_rep(&z3);
        let one = &p[&z3.elem(&[1]).unwrap()];
        assert_eq!(one.pow(3).unwrap(), Mat::identity(3));
        assert_ne!(one, &Mat::identity(3));
    }

    #[test]
    fn regular_rep_is_homomorphism() {
        let g = FinAbGroup::new(vec![2, 3]).unwrap();
        let p = regular_rep(&g);
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(p[&a].mul(&p[&b]).unwrap(), p[&g.add(&a, &b)]);
            }
        }
    }

    #[test]
    fn non_direct_input_becomes_direct() {
        let z2 = FinAbGroup::cyclic(2).unwrap();
        let line = Subspace::from_mats(2, &[Mat::unit(2, 0, 1)]).unwrap();
        let l = LieAlgebra::from_subspace(&line).unwrap();
        let comps = BTreeMap::from([(z2.elem(&[0]).unwrap(), line.clone()), (z2.elem(&[1]).unwrap(), line)]);
        let s = verify_subgrading(&l, &z2, &comps).unwrap();
        assert!(!s.is_direct());
        let amp = ampliate(&s).unwrap();
        assert!(amp.ampliated.is_direct());
        assert_eq!(amp.ampliated.algebra().dim(), 2);
        assert_eq!(l.dim(), 1);
    }

    #[test]
    fn pauli_ampliation() {
        let (a, b, c) = pauli();
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let l = LieAlgebra::from_basis(2, vec![a.clone(), b.clone(), c.clone()]).unwrap();
        let comps = BTreeMap::from([
            (g.elem(&[0, 1]).unwrap(), Subspace::from_mats(2, &[a]).unwrap()),
            (g.elem(&[1, 0]).unwrap(), Subspace::from_mats(2, &[b]).unwrap()),
            (g.elem(&[1, 1]).unwrap(), Subspace::from_mats(2, std::slice::from_ref(&c)).unwrap()),
        ]);
        let s = verify_subgrading(&l, &g, &comps).unwrap();
        let amp = ampliate(&s).unwrap();
        assert_eq!(amp.ampliated.n(), 8);
        assert_eq!(amp.ampliated.algebra().dim(), 3);
        let r = check_maptri(&s).unwrap();
        assert!(r.consistent());
        assert!(!r.ampliated_solvable && !r.original_solvable);

        let hc = homogeneous_commutators(&s).unwrap();
        let c_line = Subspace::from_mats(2, &[c]).unwrap();
        let deg = g.elem(&[1, 1]).unwrap();
        assert_eq!(hc.len(), 3);
        assert!(hc
            .iter()
            .any(|h| h.degree == deg && !h.value.is_zero() && c_line.contains_mat(&h.value).unwrap()));
    }

    #[test]
    fn nilpotent_maptri() {
        let h = heisenberg();
        let g = FinAbGroup::trivial();
        let s = verify_subgrading(&h, &g, &BTreeMap::from([(g.zero(), h.span().clone())])).unwrap();
        let r = check_maptri(&s).unwrap();
        assert!(r.ampliated_engel && r.original_engel && r.consistent());
    }
}
