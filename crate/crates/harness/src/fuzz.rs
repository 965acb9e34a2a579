//! Seeded campaigns: each trial draws an instance from its own substream and runs one check.

use clap::ValueEnum;
use gradelie_core::grading::{FinAbGroup, SubgradedAlgebra};
use gradelie_core::lie::lie_closure;
use gradelie_core::structures::{jordan_to_z2, triple_to_z2, MatSubspace};
use gradelie_core::{GaussianRational as Q, LieAlgebra, Mat};
use rand::Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::checks::{self, CheckReport, Outcome};
use crate::generate::{
    gen_conjugated_upper, gen_jordan_ideal_pair, gen_nilpotent_jordan, gen_nilpotent_triple, gen_weight_graded,
    small_int, small_int_mat, trial_rng, TrialRng, WeightOptions,
};
use crate::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    Prime,
    Cart,
    Finsubgraded,
    L0Triang,
    Findim2,
    Lieset,
    Multiset,
    Crit12,
    Cartan,
    Tripvolt,
    Jordvolt,
    Jorideals,
    Maptri,
    EngelSum,
    Triangularize,
    /// Search only: irreducible Z3 gradings with nil generating `L_1`.
    Z3Search,
}

impl Lemma {
    pub fn name(&self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

pub const PRIME_MODULI: [u64; 4] = [2, 3, 4, 5];
pub const GROUPS: [&[u64]; 8] = [&[2], &[3], &[4], &[5], &[2, 2], &[2, 3], &[2, 4], &[3, 3]];
pub const SMALL_GROUPS: [&[u64]; 4] = [&[2], &[3], &[4], &[2, 2]];

#[derive(Clone, Debug, Serialize)]
pub struct TrialError {
    pub trial: u64,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub lemma: String,
    pub seed: u64,
    pub trials: u64,
    pub dim_max: usize,
    pub hypothesis_met: usize,
    pub passed: usize,
    pub failed: usize,
    /// SHA-256 over the per-trial digests and outcomes, in trial order.
    pub digest: String,
    pub failures: Vec<CheckReport>,
    pub errors: Vec<TrialError>,
    /// Search hits: reports whose `irreducible` fact came out true.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub found: Vec<CheckReport>,
}

impl CampaignReport {
    pub fn clean(&self) -> bool {
        self.failed == 0 && self.errors.is_empty()
    }
}

fn pick_n(rng: &mut TrialRng, dim_max: usize) -> usize {
    if dim_max <= 2 {
        dim_max.max(1)
    } else {
        rng.random_range(2..=dim_max)
    }
}

fn pick_group(rng: &mut TrialRng, choices: &[&[u64]]) -> FinAbGroup {
    let m = choices[rng.random_range(0..choices.len())];
    FinAbGroup::new(m.to_vec()).expect("positive moduli")
}

fn weight_opts(rng: &mut TrialRng, group: &FinAbGroup, smear_p: f64) -> WeightOptions {
    let smear = if group.order() > 1 && rng.random_bool(smear_p) {
        let elems = group.elements();
        Some(elems[rng.random_range(1..elems.len())].clone())
    } else {
        None
    };
    WeightOptions {
        upper_only: rng.random_bool(0.5),
        conjugate: rng.random_bool(0.3),
        smear,
        add_identity: rng.random_bool(0.2),
        max_gens: 3,
        generator_degree: None,
    }
}

/// Lie closure of up to three small-integer matrices; half the time they are upper
/// triangular, and entries are zeroed at a random density.
pub fn gen_small_closure(rng: &mut TrialRng, n: usize) -> Result<LieAlgebra, HarnessError> {
    let upper = rng.random_bool(0.5);
    let density: f64 = rng.random_range(0.3..=1.0);
    let k = rng.random_range(1..=3);
    let mut gens = Vec::with_capacity(k);
    for _ in 0..k {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if (!upper || j >= i) && rng.random_bool(density) {
                    m[(i, j)] = Q::from_int(small_int(rng));
                }
            }
        }
        gens.push(m);
    }
    Ok(lie_closure(n, &gens)?)
}

/// One generated instance, shaped by the lemma it was drawn for.
#[derive(Clone, Debug)]
pub enum TrialInstance {
    Graded(SubgradedAlgebra),
    Lie(LieAlgebra),
    /// An algebra and a subalgebra.
    Pair(LieAlgebra, LieAlgebra),
    Triple(MatSubspace),
    Jordan(MatSubspace),
    /// A Jordan algebra and an ideal.
    JordanPair(MatSubspace, MatSubspace),
}

pub fn gen_instance(lemma: Lemma, seed: u64, trial: u64, dim_max: usize) -> Result<TrialInstance, HarnessError> {
    let mut rng = trial_rng(seed, trial);
    let rng = &mut rng;
    let n = pick_n(rng, dim_max);
    Ok(match lemma {
        Lemma::Prime => {
            let m = PRIME_MODULI[rng.random_range(0..PRIME_MODULI.len())];
            let g = FinAbGroup::cyclic(m)?;
            let opts = weight_opts(rng, &g, 0.0);
            TrialInstance::Graded(gen_weight_graded(rng, n, &g, &opts)?)
        }
        Lemma::Cart | Lemma::L0Triang => {
            let g = pick_group(rng, &GROUPS);
            let opts = weight_opts(rng, &g, 0.0);
            TrialInstance::Graded(gen_weight_graded(rng, n, &g, &opts)?)
        }
        Lemma::Finsubgraded | Lemma::Lieset | Lemma::Multiset => {
            let g = pick_group(rng, &GROUPS);
            let opts = weight_opts(rng, &g, 0.3);
            TrialInstance::Graded(gen_weight_graded(rng, n, &g, &opts)?)
        }
        Lemma::Findim2 => TrialInstance::Graded(match rng.random_range(0..3) {
            0 => triple_to_z2(&gen_nilpotent_triple(rng, n)?)?,
            1 => jordan_to_z2(&gen_nilpotent_jordan(rng, n)?)?,
            _ => {
                let g = FinAbGroup::cyclic(2)?;
                let opts = weight_opts(rng, &g, 0.3);
                gen_weight_graded(rng, n, &g, &opts)?
            }
        }),
        Lemma::Crit12 | Lemma::Cartan => TrialInstance::Lie(gen_small_closure(rng, n)?),
        Lemma::Tripvolt => TrialInstance::Triple(gen_nilpotent_triple(rng, n)?),
        Lemma::Jordvolt => TrialInstance::Jordan(gen_nilpotent_jordan(rng, n)?),
        Lemma::Jorideals => {
            let (j, i) = gen_jordan_ideal_pair(rng, n)?;
            TrialInstance::JordanPair(j, i)
        }
        Lemma::Maptri => {
            let n = n.min(3);
            let g = pick_group(rng, &SMALL_GROUPS);
            let opts = weight_opts(rng, &g, 0.3);
            TrialInstance::Graded(gen_weight_graded(rng, n, &g, &opts)?)
        }
        Lemma::EngelSum => {
            let l0 = gen_conjugated_upper(rng, n, 3)?;
            let l = if rng.random_bool(0.5) {
                l0.clone()
            } else {
                let mut gens = l0.basis().to_vec();
                gens.push(small_int_mat(rng, n));
                lie_closure(n, &gens)?
            };
            TrialInstance::Pair(l, l0)
        }
        Lemma::Triangularize => TrialInstance::Lie(gen_conjugated_upper(rng, n, 3)?),
        Lemma::Z3Search => {
            let g = FinAbGroup::cyclic(3)?;
            let opts = WeightOptions {
                conjugate: rng.random_bool(0.3),
                max_gens: 3,
                generator_degree: Some(g.elem(&[1])?),
                ..Default::default()
            };
            TrialInstance::Graded(gen_weight_graded(rng, n, &g, &opts)?)
        }
    })
}

pub fn check_instance(lemma: Lemma, inst: &TrialInstance) -> Result<CheckReport, HarnessError> {
    use TrialInstance as T;
    match (lemma, inst) {
        (Lemma::Prime, T::Graded(s)) => checks::check_lemma_prime(s),
        (Lemma::Cart, T::Graded(s)) => checks::check_cart(s),
        (Lemma::L0Triang, T::Graded(s)) => checks::check_l0_triang(s),
        (Lemma::Finsubgraded, T::Graded(s)) => checks::check_finsubgraded(s),
        (Lemma::Lieset, T::Graded(s)) => checks::check_lieset(s),
        (Lemma::Multiset, T::Graded(s)) => checks::check_multiset(s),
        (Lemma::Findim2, T::Graded(s)) => checks::check_findim2(s),
        (Lemma::Maptri, T::Graded(s)) => checks::check_ampliation(s),
        (Lemma::Crit12, T::Lie(l)) => checks::check_crit12(l),
        (Lemma::Cartan, T::Lie(l)) => checks::check_cartan(l),
        (Lemma::Triangularize, T::Lie(l)) => checks::check_triangularization(l),
        (Lemma::EngelSum, T::Pair(l, l0)) => checks::check_engel_sum(l, l0),
        (Lemma::Tripvolt, T::Triple(m)) => checks::check_tripvolt(m),
        (Lemma::Jordvolt, T::Jordan(j)) => checks::check_jordvolt(j),
        (Lemma::Jorideals, T::JordanPair(j, i)) => checks::check_jorideals(j, i),
        (Lemma::Z3Search, T::Graded(s)) => checks::check_z3_search(s),
        _ => Err(HarnessError::Structure(format!("{} does not apply to this instance", lemma.name()))),
    }
}

pub fn run_trial(lemma: Lemma, seed: u64, trial: u64, dim_max: usize) -> Result<CheckReport, HarnessError> {
    check_instance(lemma, &gen_instance(lemma, seed, trial, dim_max)?)
}

pub fn run_campaign(lemma: Lemma, seed: u64, trials: u64, dim_max: usize) -> CampaignReport {
    let mut hasher = Sha256::new();
    let mut report = CampaignReport {
        lemma: lemma.name(),
        seed,
        trials,
        dim_max,
        hypothesis_met: 0,
        passed: 0,
        failed: 0,
        digest: String::new(),
        failures: Vec::new(),
        errors: Vec::new(),
        found: Vec::new(),
    };
    for t in 0..trials {
        match run_trial(lemma, seed, t, dim_max) {
            Ok(r) => {
                hasher.update(format!("{t}:{}:{:?}\n", r.digest, r.outcome).as_bytes());
                if r.hypothesis_met() {
                    report.hypothesis_met += 1;
                }
                if r.hypothesis_met() && r.fact("irreducible") == Some(true) && lemma == Lemma::Z3Search {
                    report.found.push(r.clone());
                }
                if r.outcome == Outcome::Fail {
                    report.failed += 1;
                    report.failures.push(r);
                } else {
                    report.passed += 1;
                }
            }
            Err(e) => {
                hasher.update(format!("{t}:error:{e}\n").as_bytes());
                report.errors.push(TrialError {
                    trial: t,
                    message: e.to_string(),
                });
            }
        }
    }
    report.digest = hex::encode(hasher.finalize());
    report
}
