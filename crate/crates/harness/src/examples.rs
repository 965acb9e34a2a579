//! The worked examples, as exact documents.

use std::collections::BTreeMap;

use gradelie_core::structures::{m_bracket_powers, MatSubspace};
use gradelie_core::{GaussianRational as Q, Mat};

use crate::document::{AlgebraDocument, Payload, ScalarMode, Structure};

pub const EXAMPLE_NAMES: [&str; 6] = ["pauli", "e1", "e2", "heisenberg", "sl2", "jordan_upper"];

fn q(n: i64) -> Q {
    Q::from_int(n)
}

/// a, b, c with [a,b] = 2c, [b,c] = 2a, [c,a] = 2b.
pub fn pauli_mats() -> (Mat, Mat, Mat) {
    let i = Q::i();
    let a = Mat::from_i64(&[&[0, 1], &[-1, 0]]);
    let b = Mat::from_rows(vec![vec![q(0), -i.clone()], vec![-i.clone(), q(0)]]).expect("2x2");
    let c = Mat::diag(&[-i.clone(), i]);
    (a, b, c)
}

/// e, f, g with g = diag(1/2, -1/2), so that [g,e] = e, [g,f] = -f, [e,f] = g.
pub fn e1_mats() -> (Mat, Mat, Mat) {
    let half = Q::from_frac(1, 2);
    let e = Mat::unit(2, 0, 1);
    let f = Mat::unit(2, 1, 0).scale(&half);
    let g = Mat::diag(&[half.clone(), -half]);
    (e, f, g)
}

pub fn e2_mats() -> (Mat, Mat) {
    (
        Mat::from_i64(&[&[0, 1, 0], &[0, 0, -1], &[0, 0, 0]]),
        Mat::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]),
    )
}

/// The Z₄-subgrading of L(M) for e2: `L_k = span M^[k]` for k = 1, 2, 3 and `L_0 = span M^[4]`.
pub fn e2_components() -> BTreeMap<String, Vec<Mat>> {
    let (a, b) = e2_mats();
    let m = MatSubspace::from_mats(3, &[a, b]).expect("3x3");
    (1..=4)
        .map(|k| {
            let key = (k % 4).to_string();
            (key, m_bracket_powers(&m, k).expect("k >= 1"))
        })
        .collect()
}

fn components_doc(n: usize, moduli: Vec<u64>, components: BTreeMap<String, Vec<Mat>>) -> AlgebraDocument {
    AlgebraDocument {
        ambient_dim: n,
        structure: Structure::Subgraded,
        mode: ScalarMode::Exact,
        group: Some(moduli),
        payload: Payload::Components(components),
    }
}

pub fn build_example(name: &str) -> Option<AlgebraDocument> {
    Some(match name {
        "pauli" => {
            let (a, b, c) = pauli_mats();
            components_doc(
                2,
                vec![2, 2],
                BTreeMap::from([("0,1".into(), vec![a]), ("1,0".into(), vec![b]), ("1,1".into(), vec![c])]),
            )
        }
        "e1" => {
            let (e, f, g) = e1_mats();
            components_doc(
                2,
                vec![3],
                BTreeMap::from([("0".into(), vec![g]), ("1".into(), vec![e]), ("2".into(), vec![f])]),
            )
        }
        "e2" => components_doc(3, vec![4], e2_components()),
        "heisenberg" => AlgebraDocument::lie(3, vec![Mat::unit(3, 0, 1), Mat::unit(3, 0, 2), Mat::unit(3, 1, 2)]),
        "sl2" => AlgebraDocument::lie(
            2,
            vec![Mat::unit(2, 0, 1), Mat::unit(2, 1, 0), Mat::diag(&[q(1), q(-1)])],
        ),
        "jordan_upper" => AlgebraDocument {
            ambient_dim: 2,
            structure: Structure::Jordan,
            mode: ScalarMode::Exact,
            group: None,
            payload: Payload::Generators(vec![Mat::unit(2, 0, 0), Mat::unit(2, 0, 1), Mat::unit(2, 1, 1)]),
        },
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::Instance;

    #[test]
    fn pauli_relations() {
        let (a, b, c) = pauli_mats();
        assert_eq!(a.bracket(&b).unwrap(), c.scale(&q(2)));
        assert_eq!(b.bracket(&c).unwrap(), a.scale(&q(2)));
        assert_eq!(c.bracket(&a).unwrap(), b.scale(&q(2)));
    }

    #[test]
    fn e1_relations() {
        let (e, f, g) = e1_mats();
        assert_eq!(g.bracket(&e).unwrap(), e);
        assert_eq!(g.bracket(&f).unwrap(), f.neg());
        assert_eq!(e.bracket(&f).unwrap(), g);
    }

    #[test]
    fn e2_pattern() {
        let (a, b) = e2_mats();
        assert_eq!(a[(0, 1)], q(1));
        assert_eq!(a[(1, 2)], q(-1));
        assert_eq!(b[(1, 0)], q(1));
        assert_eq!(b[(2, 1)], q(1));
        let dims: Vec<usize> = e2_components().values().map(Vec::len).collect();
        assert_eq!(dims, vec![3, 2, 1, 2]);
    }

    #[test]
    fn all_examples_build() {
        for name in EXAMPLE_NAMES {
            let doc = build_example(name).unwrap();
            doc.instance().unwrap();
            assert_eq!(AlgebraDocument::parse(&doc.to_json_pretty()).unwrap(), doc);
            if name == "heisenberg" {
                assert!(matches!(doc.instance().unwrap(), Instance::Lie(l) if l.dim() == 3));
            }
        }
        assert!(build_example("nope").is_none());
    }
}
