//! Exact decisions about nilpotency over whole subspaces of matrices.
//!
//! A subspace `V = span{b_1..b_d}` of `n x n` matrices consists of nilpotents iff
//! `tr((sum t_i b_i)^k)` vanishes identically in `t` for `k = 1..n` (Newton's identities).
//! The coefficient of `t^α` in that trace is the symmetrized sum of `tr` over all
//! orderings of the corresponding multiset of basis elements, so the polynomial
//! identity reduces to finitely many exact trace evaluations.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::series::is_solvable;
use crate::error::{Error, Result};
use crate::linalg::{subspace::matrix_side, Mat, Subspace};

/// Polarized trace test on the span of `basis`: every symmetrized trace of degree
/// `k ≤ n` must vanish. Expands `X^k` for the generic element `X = sum t_i b_i`
/// as a matrix-valued polynomial, one homogeneous degree at a time.
pub fn polarization_test(basis: &[Mat]) -> Result<bool> {
    let d = basis.len();
    let terms: Vec<(Mat, Vec<u8>)> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let mut e = vec![0u8; d];
            e[i] = 1;
            (b.clone(), e)
        })
        .collect();
    polarization_test_tagged(&terms)
}

/// Same test for a generic element `X = sum_m c_m(t) M_m` whose coefficients are
/// monomials `t^{e_m}`. Monomials may repeat and need not be linear, so this covers
/// polynomially parametrized families such as `[sum s_i a_i, sum t_j b_j]`.
pub fn polarization_test_tagged(terms: &[(Mat, Vec<u8>)]) -> Result<bool> {
    let Some((first, _)) = terms.first() else {
        return Ok(true);
    };
    let n = first.n_rows();
    let mut base: BTreeMap<Vec<u8>, Mat> = BTreeMap::new();
    for (m, e) in terms {
        accumulate(&mut base, e.clone(), m.clone())?;
    }
    let mut level = base.clone();
    for k in 1..=n {
        if level.values().all(Mat::is_zero) {
            return Ok(true);
        }
        if level.values().any(|m| !m.trace().map(|t| t.is_zero()).unwrap_or(false)) {
            return Ok(false);
        }
        if k == n {
            break;
        }
        let mut next: BTreeMap<Vec<u8>, Mat> = BTreeMap::new();
        for (mono, m) in &level {
            if m.is_zero() {
                continue;
            }
            for (e, b) in &base {
                let key: Vec<u8> = mono.iter().zip(e).map(|(x, y)| x + y).collect();
                accumulate(&mut next, key, m.mul(b)?)?;
            }
        }
        level = next;
    }
    Ok(true)
}

fn accumulate(map: &mut BTreeMap<Vec<u8>, Mat>, key: Vec<u8>, term: Mat) -> Result<()> {
    match map.get_mut(&key) {
        Some(acc) => *acc = acc.add(&term)?,
        None => {
            map.insert(key, term);
        }
    }
    Ok(())
}

/// Span of all products of `k` elements of `V`; zero for some `k ≤ n` iff the associative
/// algebra generated by `V` is nilpotent (then `V` is simultaneously strictly triangularizable).
fn associative_powers_vanish(basis: &[Mat]) -> Result<bool> {
    let n = basis[0].n_rows();
    let mut current: Vec<Mat> = basis.to_vec();
    for _ in 0..n {
        let span = Subspace::from_mats(n, &current)?;
        if span.is_zero() {
            return Ok(true);
        }
        let reps = span.basis_mats()?;
        current = Vec::with_capacity(reps.len() * basis.len());
        for w in &reps {
            for b in basis {
                current.push(b.mul(w)?);
            }
        }
    }
    Ok(Subspace::from_mats(n, &current)?.is_zero())
}

/// Exact decision: is every element of `V` (a subspace of flattened `gl(n)`) nilpotent?
/// Cheap exact certificates are tried first (a non-nilpotent basis element
/// or pairwise combination refutes; associative nilpotency confirms); the polarized
/// trace test decides everything else.
pub fn is_nil_subspace(v: &Subspace) -> Result<bool> {
    let n = matrix_side(v.ambient_dim())?;
    if v.is_zero() || n == 0 {
        return Ok(true);
    }
    let basis = v.basis_mats()?;
    if nil_refutation(&basis)?.is_some() {
        return Ok(false);
    }
    if associative_powers_vanish(&basis)? {
        return Ok(true);
    }
    polarization_test(&basis)
}

/// A non-nilpotent element among basis elements and pairwise sums/differences, if any.
pub fn nil_refutation(basis: &[Mat]) -> Result<Option<Mat>> {
    for b in basis {
        if !b.is_nilpotent()? {
            return Ok(Some(b.clone()));
        }
    }
    for i in 0..basis.len() {
        for j in 0..i {
            for m in [basis[i].add(&basis[j])?, basis[i].sub(&basis[j])?] {
                if !m.is_nilpotent()? {
                    return Ok(Some(m));
                }
            }
        }
    }
    Ok(None)
}

/// `a` is an Engel element of `L`: `ad a` restricted to `L` is nilpotent.
pub fn is_engel_element(l: &LieAlgebra, a: &Mat) -> Result<bool> {
    l.ad_matrix(a)?.is_nilpotent()
}

/// `{ad x |_L : x ∈ V}` as a subspace of flattened `gl(dim L)`.
pub fn ad_image(l: &LieAlgebra, v: &Subspace) -> Result<Subspace> {
    let d = l.dim();
    let ads: Vec<Mat> = v
        .basis_mats()?
        .iter()
        .map(|x| l.ad_matrix(x))
        .collect::<Result<_>>()?;
    Subspace::from_mats(d, &ads)
}

/// Every element of `V` is an Engel element of `L` (decided exactly).
pub fn consists_of_engel(l: &LieAlgebra, v: &Subspace) -> Result<bool> {
    if l.dim() == 0 || v.is_zero() {
        return Ok(true);
    }
    is_nil_subspace(&ad_image(l, v)?)
}

/// Every commutator `[a, b]` with `a ∈ span A`, `b ∈ span B` is an Engel element of `L`.
/// The generic commutator `sum s_i t_j [a_i, b_j]` is bilinear in `(s, t)`, so the tiered
/// nil test applies with the polarized trace test run on tagged terms.
pub fn commutators_are_engel(l: &LieAlgebra, a_basis: &[Mat], b_basis: &[Mat]) -> Result<bool> {
    let da = a_basis.len();
    let db = b_basis.len();
    if l.dim() == 0 || da == 0 || db == 0 {
        return Ok(true);
    }
    let mut grid: Vec<Vec<Mat>> = Vec::with_capacity(da);
    for a in a_basis {
        let row = b_basis
            .iter()
            .map(|b| l.ad_matrix(&a.bracket(b)?))
            .collect::<Result<Vec<_>>>()?;
        grid.push(row);
    }
    let flat: Vec<&Mat> = grid.iter().flatten().collect();
    if flat.iter().all(|m| m.is_zero()) {
        return Ok(true);
    }
    for m in &flat {
        if !m.is_nilpotent()? {
            return Ok(false);
        }
    }
    // Pairs sharing an index are commutators too: [a_i, b_j ± b_k] and [a_i ± a_k, b_j].
    for i in 0..da {
        for j in 0..db {
            for k in 0..j {
                for m in [grid[i][j].add(&grid[i][k])?, grid[i][j].sub(&grid[i][k])?] {
                    if !m.is_nilpotent()? {
                        return Ok(false);
                    }
                }
            }
            for k in 0..i {
                for m in [grid[i][j].add(&grid[k][j])?, grid[i][j].sub(&grid[k][j])?] {
                    if !m.is_nilpotent()? {
                        return Ok(false);
                    }
                }
            }
        }
    }
    let owned: Vec<Mat> = flat.into_iter().cloned().collect();
    if associative_powers_vanish(&owned)? {
        return Ok(true);
    }
    let mut terms = Vec::with_capacity(da * db);
    for (i, row) in grid.into_iter().enumerate() {
        for (j, m) in row.into_iter().enumerate() {
            let mut e = vec![0u8; da + db];
            e[i] = 1;
            e[da + j] = 1;
            terms.push((m, e));
        }
    }
    polarization_test_tagged(&terms)
}

/// In a solvable `L`, the sum of two Engel elements is Engel. Returns whether `a + b` is Engel.
pub fn engel_sum_check(l: &LieAlgebra, a: &Mat, b: &Mat) -> Result<bool> {
    if !is_solvable(l)? {
        return Err(Error::Precondition("algebra is not solvable".into()));
    }
    if !l.contains(a)? || !l.contains(b)? {
        return Err(Error::Precondition("summands must lie in the algebra".into()));
    }
    if !is_engel_element(l, a)? || !is_engel_element(l, b)? {
        return Err(Error::Precondition("summands must be Engel elements".into()));
    }
    is_engel_element(l, &a.add(b)?)
}
