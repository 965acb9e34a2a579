use std::collections::BTreeMap;

use gradelie_core::grading::{gamma_sharp, verify_subgrading, FinAbGroup};
use gradelie_core::lie::{bracket_span, is_nil_subspace, lie_closure};
use gradelie_core::linalg::{canonicalize, to_numeric, GaussianRational as Q, Mat, Subspace};
use gradelie_core::spectral::{assoc_closure_dim, spectral_radius, triangularize_solvable, verify_flag};
use gradelie_core::structures::{is_jordan_algebra, is_lie_triple_system, MatSubspace};
use num_traits::Zero;
use proptest::prelude::*;

fn mat_from(n: usize, entries: &[(i64, i64)]) -> Mat {
    let rows = (0..n)
        .map(|i| (0..n).map(|j| Q::from_parts(entries[i * n + j].0, entries[i * n + j].1)).collect())
        .collect();
    Mat::from_rows(rows).unwrap()
}

fn small_mat(n: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec((-2i64..=2, -1i64..=1), n * n).prop_map(move |e| mat_from(n, &e))
}

fn real_mat(n: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec((-2i64..=2, Just(0i64)), n * n).prop_map(move |e| mat_from(n, &e))
}

/// Unit lower triangular times unit upper triangular: always invertible.
fn invertible(n: usize) -> impl Strategy<Value = Mat> {
    (real_mat(n), real_mat(n)).prop_map(move |(a, b)| {
        let mut l = Mat::identity(n);
        let mut u = Mat::identity(n);
        for i in 0..n {
            for j in 0..i {
                l[(i, j)] = a[(i, j)].clone();
                u[(j, i)] = b[(j, i)].clone();
            }
        }
        l.mul(&u).unwrap()
    })
}

fn upper_part(m: &Mat, strict: bool) -> Mat {
    let n = m.n_rows();
    let mut out = Mat::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if j > i || !strict {
                out[(i, j)] = m[(i, j)].clone();
            }
        }
    }
    out
}

fn conjugate(g: &Mat, m: &Mat) -> Mat {
    g.mul(m).unwrap().mul(&g.inverse().unwrap().unwrap()).unwrap()
}

fn vectors(len: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Q>>> {
    prop::collection::vec(
        prop::collection::vec((-2i64..=2, -1i64..=1).prop_map(|(a, b)| Q::from_parts(a, b)), len),
        0..=count,
    )
}

fn jordan_closure(n: usize, gens: &[Mat]) -> MatSubspace {
    let mut span = Subspace::from_mats(n, gens).unwrap();
    loop {
        let basis = span.basis_mats().unwrap();
        let before = span.dim();
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i..] {
                span.insert_mat(&x.jordan(y).unwrap()).unwrap();
            }
        }
        if span.dim() == before {
            return MatSubspace::from_subspace(&span).unwrap();
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonicalize_is_idempotent(vs in vectors(4, 5)) {
        let s = canonicalize(4, &vs).unwrap();
        prop_assert_eq!(&canonicalize(4, s.basis()).unwrap(), &s);
    }

    #[test]
    fn insert_agrees_with_batch(vs in vectors(4, 6)) {
        let mut s = Subspace::zero(4);
        for v in &vs {
            s.insert(v).unwrap();
        }
        prop_assert_eq!(s, Subspace::from_vectors(4, &vs).unwrap());
    }

    #[test]
    fn sum_intersection_dimension(a in vectors(5, 4), b in vectors(5, 4)) {
        let u = Subspace::from_vectors(5, &a).unwrap();
        let w = Subspace::from_vectors(5, &b).unwrap();
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains_subspace(&u).unwrap() && u.contains_subspace(&i).unwrap());
    }

    #[test]
    fn hessenberg_char_poly_matches_faddeev(m in small_mat(5), mask in proptest::collection::vec(any::<bool>(), 25)) {
        let mut a = m;
        for (k, keep) in mask.iter().enumerate() {
            if !keep {
                a[(k / 5, k % 5)] = Q::zero();
            }
        }
        prop_assert_eq!(a.char_poly_hessenberg().unwrap(), a.char_poly().unwrap());
    }

    #[test]
    fn commutators_are_traceless(a in small_mat(3), b in small_mat(3)) {
        prop_assert!(a.bracket(&b).unwrap().trace().unwrap().is_zero());
    }

    #[test]
    fn nilpotency_matches_char_poly(m in small_mat(4), g in invertible(4), strict in any::<bool>()) {
        let a = if strict { conjugate(&g, &upper_part(&m, true)) } else { m };
        let cp = a.char_poly().unwrap();
        let monomial = cp[..4].iter().all(Q::is_zero);
        prop_assert_eq!(a.is_nilpotent().unwrap(), monomial);
        if strict {
            prop_assert!(monomial);
        }
    }

    #[test]
    fn nil_subspace_matches_grid(ms in prop::collection::vec(small_mat(3), 1..=3), g in invertible(3), strict in any::<bool>()) {
        let mats: Vec<Mat> = if strict {
            ms.iter().map(|m| conjugate(&g, &upper_part(m, true))).collect()
        } else {
            ms.clone()
        };
        let v = Subspace::from_mats(3, &mats).unwrap();
        let nil = is_nil_subspace(&v).unwrap();
        if strict {
            prop_assert!(nil);
        }
        let basis = v.basis_mats().unwrap();
        let d = basis.len();
        let mut grid_nil = true;
        for code in 0..5usize.pow(d as u32) {
            let mut x = Mat::zeros(3, 3);
            let mut c = code;
            for b in &basis {
                x = x.add(&b.scale(&Q::from_int((c % 5) as i64 - 2))).unwrap();
                c /= 5;
            }
            if !x.is_nilpotent().unwrap() {
                grid_nil = false;
                break;
            }
        }
        if nil {
            prop_assert!(grid_nil);
        } else {
            // Each tr(X^k), k ≤ 3, has degree < 5 in every variable, so a nonzero one
            // cannot vanish on the whole 5-point grid.
            prop_assert!(!grid_nil);
        }
    }

    #[test]
    fn kleinecke_shirokov(a in small_mat(3), coeffs in prop::collection::vec(-2i64..=2, 9)) {
        // b ranges over the kernel of x ↦ [a, [a, x]]; then [a, b] must be nilpotent.
        let n = 3;
        let mut cols = Vec::new();
        for k in 0..n * n {
            let e = Mat::unit(n, k / n, k % n);
            cols.push(a.bracket(&a.bracket(&e).unwrap()).unwrap().flatten());
        }
        let op = Mat::from_rows((0..n * n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()).unwrap();
        let ker = op.kernel();
        let mut b = Mat::zeros(n, n);
        for (v, c) in ker.basis_mats().unwrap().iter().zip(&coeffs) {
            b = b.add(&v.scale(&Q::from_int(*c))).unwrap();
        }
        prop_assert!(a.bracket(&a.bracket(&b).unwrap()).unwrap().is_zero());
        prop_assert!(a.bracket(&b).unwrap().is_nilpotent().unwrap());
    }

    #[test]
    fn spectral_radius_below_norm(a in small_mat(4)) {
        let na = to_numeric(&a).unwrap();
        prop_assert!(spectral_radius(&na).unwrap() <= na.norm() * (1.0 + 1e-9) + 1e-9);
    }

    #[test]
    fn assoc_closure_is_monotone(ms in prop::collection::vec(real_mat(3), 1..=2), extra in real_mat(3)) {
        let small = assoc_closure_dim(3, &ms).unwrap();
        let mut more = ms.clone();
        more.push(extra);
        prop_assert!(small <= assoc_closure_dim(3, &more).unwrap());
        prop_assert!(assoc_closure_dim(3, &more).unwrap() <= 9);
    }

    #[test]
    fn triangularization_flags_verify(ms in prop::collection::vec(real_mat(3), 1..=3), g in invertible(3)) {
        let gens: Vec<Mat> = ms.iter().map(|m| conjugate(&g, &upper_part(m, false))).collect();
        let l = lie_closure(3, &gens).unwrap();
        let flag = triangularize_solvable(&l).unwrap();
        prop_assert!(verify_flag(l.basis(), &flag, 1e-9).unwrap().pass);
    }

    #[test]
    fn weight_gradings_verify(weights in prop::collection::vec(0u64..5, 3), m in 2u64..=5, pick in prop::collection::vec(any::<bool>(), 9)) {
        let n = 3;
        let g = FinAbGroup::cyclic(m).unwrap();
        let deg = |i: usize, j: usize| (weights[i] + m - weights[j] % m) % m;
        let gens: Vec<Mat> = (0..n * n).filter(|k| pick[*k]).map(|k| Mat::unit(n, k / n, k % n)).collect();
        let l = lie_closure(n, &gens).unwrap();
        let mut comps = BTreeMap::new();
        for d in 0..m {
            let units: Vec<Mat> = (0..n * n).filter(|k| deg(k / n, k % n) == d).map(|k| Mat::unit(n, k / n, k % n)).collect();
            let c = l.span().intersect(&Subspace::from_mats(n, &units).unwrap()).unwrap();
            comps.insert(g.elem(&[d]).unwrap(), c);
        }
        let s = verify_subgrading(&l, &g, &comps).unwrap();
        prop_assert!(s.is_direct());
        prop_assert!(bracket_span(s.zero_component(), s.zero_component()).unwrap().dim() <= s.zero_component().dim());
    }

    #[test]
    fn gamma_sharp_empty_iff_cyclic(moduli in prop::collection::vec(1u64..=6, 1..=3)) {
        let g = FinAbGroup::new(moduli).unwrap();
        prop_assert_eq!(gamma_sharp(&g).is_empty(), g.is_cyclic());
    }

    #[test]
    fn jordan_algebras_are_triple_systems(ms in prop::collection::vec(real_mat(3), 1..=2), g in invertible(3), strict in any::<bool>()) {
        let gens: Vec<Mat> = ms.iter().map(|m| conjugate(&g, &upper_part(m, strict))).collect();
        let j = jordan_closure(3, &gens);
        prop_assert!(is_jordan_algebra(&j).unwrap());
        prop_assert!(is_lie_triple_system(&j).unwrap());
    }
}
