use super::algebra::{bracket_span, LieAlgebra};
use crate::error::Result;
use crate::linalg::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// Terms of a lower central or derived series, computed until two consecutive terms agree.
/// The repeated terminal term is kept, so `stabilized` means the last two terms are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    pub stabilized: bool,
    pub terminal_dim: usize,
}

impl SeriesReport {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

fn series(l: &LieAlgebra, kind: SeriesKind) -> Result<SeriesReport> {
    let mut terms = vec![l.span().clone()];
    loop {
        let last = terms.last().expect("nonempty");
        let next = match kind {
            SeriesKind::Derived => bracket_span(last, last)?,
            SeriesKind::LowerCentral => bracket_span(l.span(), last)?,
        };
        let done = &next == last;
        terms.push(next);
        // Dimensions strictly drop until the series stabilizes, so this terminates.
        if done {
            break;
        }
    }
    let terminal_dim = terms.last().map_or(0, Subspace::dim);
    Ok(SeriesReport {
        kind,
        terms,
        stabilized: true,
        terminal_dim,
    })
}

/// `L^(0) = L`, `L^(k+1) = [L^(k), L^(k)]`.
pub fn derived_series(l: &LieAlgebra) -> Result<SeriesReport> {
    series(l, SeriesKind::Derived)
}

/// `L^[1] = L`, `L^[k+1] = [L, L^[k]]`.
pub fn lower_central_series(l: &LieAlgebra) -> Result<SeriesReport> {
    series(l, SeriesKind::LowerCentral)
}

pub fn is_solvable(l: &LieAlgebra) -> Result<bool> {
    Ok(derived_series(l)?.terminal_dim == 0)
}

pub fn is_nilpotent_lie(l: &LieAlgebra) -> Result<bool> {
    Ok(lower_central_series(l)?.terminal_dim == 0)
}

/// `[L, L]` as a subspace of flattened `gl(n)`.
pub fn derived_subspace(l: &LieAlgebra) -> Result<Subspace> {
    bracket_span(l.span(), l.span())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Mat;
    use crate::test_support::*;

    #[test]
    fn abelian_series() {
        let l = LieAlgebra::from_basis(2, vec![Mat::identity(2), Mat::unit(2, 0, 1)]).unwrap();
        let d = derived_series(&l).unwrap();
        assert_eq!(d.dims(), vec![2, 0, 0]);
        assert!(d.stabilized);
        assert!(is_solvable(&l).unwrap() && is_nilpotent_lie(&l).unwrap());
    }

    #[test]
    fn heisenberg_series() {
        let h = heisenberg();
        assert_eq!(lower_central_series(&h).unwrap().dims(), vec![3, 1, 0, 0]);
        assert!(is_solvable(&h).unwrap());
        assert!(is_nilpotent_lie(&h).unwrap());
    }

    #[test]
    fn sl2_is_perfect() {
        let l = sl2_algebra();
        let d = derived_series(&l).unwrap();
        assert_eq!(d.dims(), vec![3, 3]);
        assert_eq!(d.terminal_dim, 3);
        assert!(!is_solvable(&l).unwrap());
        assert!(!is_nilpotent_lie(&l).unwrap());
    }

    #[test]
    fn zero_algebra_conventions() {
        let z = LieAlgebra::zero(3);
        assert!(is_solvable(&z).unwrap());
        assert!(is_nilpotent_lie(&z).unwrap());
    }

    #[test]
    fn solvable_but_not_nilpotent() {
        // Upper triangular 2x2: derived series hits 0, lower central stalls at span{E12}.
        let l = LieAlgebra::from_basis(
            2,
            vec![Mat::unit(2, 0, 0), Mat::unit(2, 1, 1), Mat::unit(2, 0, 1)],
        )
        .unwrap();
        assert!(is_solvable(&l).unwrap());
        assert!(!is_nilpotent_lie(&l).unwrap());
        assert_eq!(lower_central_series(&l).unwrap().terminal_dim, 1);
    }
}
