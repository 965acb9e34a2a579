//! Jordan and Lie triple products on single matrices live in `linalg::mat`; this module
//! holds the identity linking them.

use crate::error::Result;
use crate::linalg::Mat;

/// `[a,[b,c]] == (a∘b)∘c - (a∘c)∘b`, checked exactly.
pub fn jordan_triple_identity_holds(a: &Mat, b: &Mat, c: &Mat) -> Result<bool> {
    let lhs = a.triple(b, c)?;
    let rhs = a.jordan(b)?.jordan(c)?.sub(&a.jordan(c)?.jordan(b)?)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{jordan_product, GaussianRational as Q};
    use crate::test_support::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn jordan_examples() {
        let a = Mat::from_i64(&[&[1, 2], &[3, 4]]);
        assert!(jordan_product(&a, &Mat::zeros(2, 2)).unwrap().is_zero());
        let (e, f, _) = e1();
        // With [e,f]=g and [g,e]=e realized in 2x2, e∘f = I/2.
        assert_eq!(jordan_product(&e, &f).unwrap(), Mat::identity(2).scale(&frac(1, 2)));
    }

    #[test]
    fn identity_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let rand_mat = |rng: &mut ChaCha8Rng| {
            let rows = (0..3)
                .map(|_| {
                    (0..3)
                        .map(|_| Q::from_parts(rng.random_range(-2..=2), rng.random_range(-2..=2)))
                        .collect()
                })
                .collect();
            Mat::from_rows(rows).unwrap()
        };
        for _ in 0..100 {
            let (a, b, c) = (rand_mat(&mut rng), rand_mat(&mut rng), rand_mat(&mut rng));
            assert!(jordan_triple_identity_holds(&a, &b, &c).unwrap());
        }
    }
}
