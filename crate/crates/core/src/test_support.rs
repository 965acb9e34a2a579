//! Small fixed algebras shared by the unit tests.

use crate::lie::LieAlgebra;
use crate::linalg::{GaussianRational as Q, Mat};

pub fn q(n: i64) -> Q {
    Q::from_int(n)
}

pub fn frac(p: i64, r: i64) -> Q {
    Q::from_frac(p, r)
}

/// Basis a, b, c of sl(2) with [a,b]=2c, [b,c]=2a, [c,a]=2b.
pub fn pauli() -> (Mat, Mat, Mat) {
    let i = Q::i();
    let a = Mat::from_i64(&[&[0, 1], &[-1, 0]]);
    let b = Mat::from_rows(vec![vec![q(0), -i.clone()], vec![-i.clone(), q(0)]]).unwrap();
    let c = Mat::diag(&[-i.clone(), i]);
    (a, b, c)
}

/// e, f, g with [e,f]=g, [g,e]=e, [g,f]=-f.
pub fn e1() -> (Mat, Mat, Mat) {
    let e = Mat::unit(2, 0, 1);
    let f = Mat::unit(2, 1, 0).scale(&frac(1, 2));
    let g = Mat::diag(&[frac(1, 2), frac(-1, 2)]);
    (e, f, g)
}

/// Standard sl(2) triple: E12, E21, diag(1,-1).
pub fn sl2() -> (Mat, Mat, Mat) {
    (Mat::unit(2, 0, 1), Mat::unit(2, 1, 0), Mat::diag(&[q(1), q(-1)]))
}

pub fn sl2_algebra() -> LieAlgebra {
    let (e, f, h) = sl2();
    LieAlgebra::from_basis(2, vec![e, f, h]).unwrap()
}

pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_basis(3, vec![Mat::unit(3, 0, 1), Mat::unit(3, 0, 2), Mat::unit(3, 1, 2)]).unwrap()
}

/// The 3x3 pair a (strictly upper) and b (strictly lower) spanning a nilpotent 5-product system.
pub fn e2() -> (Mat, Mat) {
    (
        Mat::from_i64(&[&[0, 1, 0], &[0, 0, -1], &[0, 0, 0]]),
        Mat::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]),
    )
}
