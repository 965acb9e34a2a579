//! Seeded instance generators. Entries are small integers so that exact arithmetic stays
//! fast and instances stay readable.

use std::collections::BTreeMap;

use gradelie_core::grading::{subgraded_from_components, FinAbGroup, GroupElem, SubgradedAlgebra};
use gradelie_core::lie::lie_closure;
use gradelie_core::structures::MatSubspace;
use gradelie_core::{GaussianRational as Q, LieAlgebra, Mat, Result, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TrialRng = ChaCha8Rng;

/// Independent substream `trial` of the campaign seeded by `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn small_int(rng: &mut TrialRng) -> i64 {
    rng.random_range(-2..=2)
}

pub fn small_int_mat(rng: &mut TrialRng, n: usize) -> Mat {
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = Q::from_int(small_int(rng));
        }
    }
    m
}

/// `L·U` with unit-diagonal triangular factors, together with its exact inverse.
pub fn random_invertible(rng: &mut TrialRng, n: usize) -> (Mat, Mat) {
    let mut l = Mat::identity(n);
    let mut u = Mat::identity(n);
    for i in 0..n {
        for j in 0..i {
            l[(i, j)] = Q::from_int(small_int(rng));
            u[(j, i)] = Q::from_int(small_int(rng));
        }
    }
    let g = l.mul(&u).expect("square");
    let inv = g.inverse().expect("square").expect("unit triangular factors");
    (g, inv)
}

fn conjugate(g: &(Mat, Mat), m: &Mat) -> Mat {
    g.0.mul(m).and_then(|x| x.mul(&g.1)).expect("square")
}

fn upper(rng: &mut TrialRng, n: usize, strict: bool) -> Mat {
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if j > i || !strict {
                m[(i, j)] = Q::from_int(small_int(rng));
            }
        }
    }
    m
}

/// Lie closure of up to `max_gens` random small-integer matrices.
pub fn gen_lie_closure(rng: &mut TrialRng, n: usize, max_gens: usize) -> Result<LieAlgebra> {
    let k = rng.random_range(1..=max_gens);
    let gens: Vec<Mat> = (0..k).map(|_| small_int_mat(rng, n)).collect();
    lie_closure(n, &gens)
}

/// Lie closure of up to `max_gens` conjugated upper-triangular matrices: solvable.
pub fn gen_conjugated_upper(rng: &mut TrialRng, n: usize, max_gens: usize) -> Result<LieAlgebra> {
    let g = random_invertible(rng, n);
    let k = rng.random_range(1..=max_gens);
    let gens: Vec<Mat> = (0..k).map(|_| conjugate(&g, &upper(rng, n, false))).collect();
    lie_closure(n, &gens)
}

#[derive(Clone, Debug, Default)]
pub struct WeightOptions {
    /// Generators use only strictly upper matrix units.
    pub upper_only: bool,
    /// Conjugate the finished grading by a random invertible matrix.
    pub conjugate: bool,
    /// Replace each `L_γ` by `Σ_{h ∈ H} L_{γ+h}` for the subgroup `H` generated by this
    /// element. The grading law survives and the sum is no longer direct.
    pub smear: Option<GroupElem>,
    /// Add the identity to the zero component.
    pub add_identity: bool,
    pub max_gens: usize,
    /// Draw every generator from this degree only.
    pub generator_degree: Option<GroupElem>,
}

/// Weight grading: integer weights `d_1..d_n` per cyclic factor, `E_ij` of degree
/// `d_i − d_j`; the closure of random homogeneous elements is graded by intersecting
/// with the degree spaces.
pub fn gen_weight_graded(
    rng: &mut TrialRng,
    n: usize,
    group: &FinAbGroup,
    opts: &WeightOptions,
) -> Result<SubgradedAlgebra> {
    let moduli = group.moduli().to_vec();
    let weights: Vec<Vec<i64>> = (0..n)
        .map(|_| moduli.iter().map(|&m| rng.random_range(0..m as i64)).collect())
        .collect();
    let degree = |i: usize, j: usize| -> GroupElem {
        let diff: Vec<i64> = weights[i].iter().zip(&weights[j]).map(|(a, b)| a - b).collect();
        group.reduce(&diff).expect("same rank")
    };
    let mut units: BTreeMap<GroupElem, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            units.entry(degree(i, j)).or_default().push((i, j));
        }
    }
    let allowed: Vec<(GroupElem, Vec<(usize, usize)>)> = units
        .iter()
        .map(|(g, us)| {
            let keep: Vec<(usize, usize)> = us.iter().copied().filter(|(i, j)| !opts.upper_only || i < j).collect();
            (g.clone(), keep)
        })
        .filter(|(g, us)| !us.is_empty() && opts.generator_degree.as_ref().is_none_or(|d| d == g))
        .collect();
    let mut gens = Vec::new();
    if !allowed.is_empty() {
        let k = rng.random_range(1..=opts.max_gens.max(1));
        for _ in 0..k {
            let (_, us) = &allowed[rng.random_range(0..allowed.len())];
            let mut m = Mat::zeros(n, n);
            for &(i, j) in us {
                m[(i, j)] = Q::from_int(small_int(rng));
            }
            if m.is_zero() {
                let (i, j) = us[rng.random_range(0..us.len())];
                m[(i, j)] = Q::from_int(1);
            }
            gens.push(m);
        }
    }
    if opts.add_identity {
        gens.push(Mat::identity(n));
    }
    let l = lie_closure(n, &gens)?;
    let mut comps: BTreeMap<GroupElem, Subspace> = BTreeMap::new();
    for g in group.elements() {
        let span_units: Vec<Mat> = units
            .get(&g)
            .map(|us| us.iter().map(|&(i, j)| Mat::unit(n, i, j)).collect())
            .unwrap_or_default();
        comps.insert(g, l.span().intersect(&Subspace::from_mats(n, &span_units)?)?);
    }
    if let Some(h) = &opts.smear {
        let sub = group.subgroup(std::slice::from_ref(h))?;
        let mut smeared = BTreeMap::new();
        for g in group.elements() {
            let mut acc = Subspace::zero(n * n);
            for x in &sub {
                acc = acc.sum(&comps[&group.add(&g, x)])?;
            }
            smeared.insert(g, acc);
        }
        comps = smeared;
    }
    if opts.conjugate {
        let g = random_invertible(rng, n);
        for c in comps.values_mut() {
            let mats: Vec<Mat> = c.basis_mats()?.iter().map(|m| conjugate(&g, m)).collect();
            *c = Subspace::from_mats(n, &mats)?;
        }
    }
    subgraded_from_components(n, group, &comps)
}

fn close_under(n: usize, gens: &[Mat], product: impl Fn(&[Mat], &mut Subspace) -> Result<()>) -> Result<MatSubspace> {
    let mut span = Subspace::from_mats(n, gens)?;
    loop {
        let before = span.dim();
        let basis = span.basis_mats()?;
        product(&basis, &mut span)?;
        if span.dim() == before {
            return MatSubspace::from_subspace(&span);
        }
    }
}

fn nilpotent_generators(rng: &mut TrialRng, n: usize, max_gens: usize) -> Vec<Mat> {
    let g = random_invertible(rng, n);
    let k = rng.random_range(1..=max_gens);
    (0..k).map(|_| conjugate(&g, &upper(rng, n, true))).collect()
}

/// Triple-product closure of conjugated strictly upper-triangular matrices.
pub fn gen_nilpotent_triple(rng: &mut TrialRng, n: usize) -> Result<MatSubspace> {
    let gens = nilpotent_generators(rng, n, 2);
    close_under(n, &gens, |b, span| {
        for x in b {
            for y in b {
                let inner = x.bracket(y)?;
                if inner.is_zero() {
                    continue;
                }
                for z in b {
                    span.insert_mat(&z.bracket(&inner)?)?;
                }
            }
        }
        Ok(())
    })
}

pub fn jordan_closure(n: usize, gens: &[Mat]) -> Result<MatSubspace> {
    close_under(n, gens, |b, span| {
        for (i, x) in b.iter().enumerate() {
            for y in &b[i..] {
                span.insert_mat(&x.jordan(y)?)?;
            }
        }
        Ok(())
    })
}

/// Jordan closure of conjugated strictly upper-triangular matrices.
pub fn gen_nilpotent_jordan(rng: &mut TrialRng, n: usize) -> Result<MatSubspace> {
    let gens = nilpotent_generators(rng, n, 2);
    jordan_closure(n, &gens)
}

/// A Jordan algebra `J` of conjugated upper-triangular matrices and the Jordan ideal
/// generated by a random element of `J`.
pub fn gen_jordan_ideal_pair(rng: &mut TrialRng, n: usize) -> Result<(MatSubspace, MatSubspace)> {
    let g = random_invertible(rng, n);
    let k = rng.random_range(1..=2);
    let strict = rng.random_bool(0.5);
    let gens: Vec<Mat> = (0..k).map(|_| conjugate(&g, &upper(rng, n, strict))).collect();
    let j = jordan_closure(n, &gens)?;
    let mut seed = Mat::zeros(n, n);
    for b in j.basis_mats() {
        seed = seed.add(&b.scale(&Q::from_int(small_int(rng))))?;
    }
    let mut ideal = Subspace::from_mats(n, &[seed])?;
    loop {
        let before = ideal.dim();
        for y in ideal.basis_mats()? {
            for x in j.basis_mats() {
                ideal.insert_mat(&x.jordan(&y)?)?;
            }
        }
        if ideal.dim() == before {
            break;
        }
    }
    Ok((j, MatSubspace::from_subspace(&ideal)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gradelie_core::lie::{is_nil_subspace, is_solvable};
    use gradelie_core::structures::{is_jordan_algebra, is_jordan_ideal, is_lie_triple_system};

    #[test]
    fn substreams_are_deterministic_and_distinct() {
        let a: Vec<i64> = (0..8).map(|_| small_int(&mut trial_rng(7, 3))).collect();
        let b: Vec<i64> = (0..8).map(|_| small_int(&mut trial_rng(7, 3))).collect();
        assert_eq!(a, b);
        let mut r1 = trial_rng(7, 3);
        let mut r2 = trial_rng(7, 4);
        let s1: Vec<i64> = (0..16).map(|_| small_int(&mut r1)).collect();
        let s2: Vec<i64> = (0..16).map(|_| small_int(&mut r2)).collect();
        assert_ne!(s1, s2);
    }

    #[test]
    fn equal_weights_put_everything_in_degree_zero() {
        let g = FinAbGroup::cyclic(3).unwrap();
        // With n = 1 every weight difference is zero.
        let mut rng = trial_rng(1, 0);
        let opts = WeightOptions {
            max_gens: 2,
            ..Default::default()
        };
        let s = gen_weight_graded(&mut rng, 1, &g, &opts).unwrap();
        assert_eq!(s.zero_component(), s.algebra().span());
    }

    #[test]
    fn weight_graded_instances_verify() {
        let groups = [vec![2], vec![3], vec![2, 2], vec![4]];
        for t in 0..20 {
            let mut rng = trial_rng(11, t);
            let g = FinAbGroup::new(groups[t as usize % 4].clone()).unwrap();
            let opts = WeightOptions {
                upper_only: t % 2 == 0,
                conjugate: t % 3 == 0,
                smear: (t % 5 == 0).then(|| g.elements()[1].clone()),
                add_identity: t % 7 == 0,
                max_gens: 3,
                ..Default::default()
            };
            let s = gen_weight_graded(&mut rng, 3, &g, &opts).unwrap();
            if opts.smear.is_none() {
                assert!(s.is_direct());
            }
        }
    }

    #[test]
    fn nilpotent_families() {
        for t in 0..5 {
            let mut rng = trial_rng(3, t);
            let m = gen_nilpotent_triple(&mut rng, 3).unwrap();
            assert!(is_lie_triple_system(&m).unwrap());
            assert!(is_nil_subspace(m.span()).unwrap());
            let j = gen_nilpotent_jordan(&mut rng, 3).unwrap();
            assert!(is_jordan_algebra(&j).unwrap());
            let (j, i) = gen_jordan_ideal_pair(&mut rng, 3).unwrap();
            assert!(is_jordan_ideal(&j, &i).unwrap());
            assert!(is_solvable(&gen_conjugated_upper(&mut rng, 3, 3).unwrap()).unwrap());
        }
    }
}
