//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gradelie_core::grading::SubgradedAlgebra;
use gradelie_core::lie::{bracket_span, lie_closure, is_engel_element, is_nil_subspace, polarization_test};
use gradelie_core::linalg::to_numeric;
use gradelie_core::spectral::{decide_irreducible, spectral_radius, verify_flag, Flag, DEFAULT_TOL};
use gradelie_core::structures::{is_lie_n_product_system, MatSubspace};
use gradelie_core::{GaussianRational as Q, LieAlgebra, Mat, Subspace};
use gradelie_harness::checks::{
    check_ampliation, check_finsubgraded, check_lemma_prime, check_lieset, check_multiset, CheckReport, Outcome,
};
use gradelie_harness::document::Instance;
use gradelie_harness::examples::{build_example, e1_mats, e2_mats, pauli_mats};
use gradelie_harness::fuzz::{gen_instance, run_campaign, CampaignReport, Lemma, TrialInstance};

type CriterionResult = Result<String, String>;

const DIM_MAX: usize = 4;

fn ensure(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn subgraded(name: &str) -> Result<SubgradedAlgebra, String> {
    match build_example(name).ok_or("unknown example")?.instance().map_err(e)? {
        Instance::Subgraded(s) => Ok(s),
        _ => Err(format!("{name} is not subgraded")),
    }
}

fn lie(name: &str) -> Result<LieAlgebra, String> {
    match build_example(name).ok_or("unknown example")?.instance().map_err(e)? {
        Instance::Lie(l) => Ok(l),
        _ => Err(format!("{name} is not a plain algebra")),
    }
}

/// Seeds per suite, so suites sharing a generator still see different instances.
fn suite_seed(lemma: Lemma) -> u64 {
    0x5eed_0000 + lemma as u64
}

fn campaign(lemma: Lemma, trials: u64) -> Result<CampaignReport, String> {
    let c = run_campaign(lemma, suite_seed(lemma), trials, DIM_MAX);
    if let Some(err) = c.errors.first() {
        return Err(format!("{}: trial {} errored: {}", c.lemma, err.trial, err.message));
    }
    if let Some(f) = c.failures.first() {
        return Err(format!(
            "{}: {} violation(s); first {}",
            c.lemma,
            c.failed,
            f.counterexample.first().map(|d| d.to_json_compact()).unwrap_or_default()
        ));
    }
    Ok(c)
}

fn unmet(r: CheckReport, what: &str) -> Result<(), String> {
    ensure(r.outcome == Outcome::HypothesisUnmet, &format!("{what}: expected hypothesis unmet, got {:?}", r.outcome))
}

fn grid_values() -> Vec<Q> {
    vec![Q::from_int(1), Q::from_int(-1), Q::i(), -Q::i(), Q::from_parts(1, 1)]
}

fn lin(l: &Q, x: &Mat, m: &Q, y: &Mat) -> Result<Mat, String> {
    x.scale(l).add(&y.scale(m)).map_err(e)
}

fn criterion_1() -> CriterionResult {
    let s = subgraded("pauli")?;
    ensure(s.group().moduli() == [2, 2], "group is Z2 x Z2")?;
    ensure(s.is_direct(), "grading is direct")?;
    ensure(s.zero_component().is_zero(), "L_0 = 0")?;
    let (a, b, c) = pauli_mats();
    let two = Q::from_int(2);
    ensure(a.bracket(&b).map_err(e)? == c.scale(&two), "[a,b] = 2c")?;
    ensure(b.bracket(&c).map_err(e)? == a.scale(&two), "[b,c] = 2a")?;
    ensure(c.bracket(&a).map_err(e)? == b.scale(&two), "[c,a] = 2b")?;
    let v = decide_irreducible(2, s.algebra().basis()).map_err(e)?;
    ensure(v.irreducible && v.assoc_dim == 4, "irreducible with associative closure of dim 4")?;
    for m in [&a, &b, &c] {
        let r = spectral_radius(&to_numeric(m).map_err(e)?).map_err(e)?;
        ensure((r - 1.0).abs() <= 1e-9, &format!("spectral radius 1, got {r}"))?;
    }
    let mut worst: f64 = 0.0;
    for (x, y) in [(&a, &b), (&b, &c), (&c, &a)] {
        for l in grid_values() {
            for m in grid_values() {
                let r = spectral_radius(&to_numeric(&lin(&l, x, &m, y)?).map_err(e)?).map_err(e)?;
                let s2 = (&l * &l + &m * &m).to_complex().map_err(e)?;
                let expected = s2.norm().sqrt();
                worst = worst.max((r - expected).abs());
            }
        }
    }
    ensure(worst <= 1e-9, &format!("rho(la x + mu y) = |la^2 + mu^2|^(1/2), worst error {worst:e}"))?;
    Ok(format!("direct Z2xZ2 grading, assoc dim 4, 75 grid radii within {worst:.1e}"))
}

fn criterion_2() -> CriterionResult {
    let s = subgraded("e1")?;
    ensure(s.group().moduli() == [3] && s.is_direct(), "Z3 grading verified")?;
    let (e_, f, g) = e1_mats();
    ensure(e_.is_nilpotent().map_err(e)? && f.is_nilpotent().map_err(e)?, "e, f nilpotent")?;
    let l = s.algebra();
    ensure(!is_engel_element(l, &g).map_err(e)?, "g is not an Engel element")?;
    let one = s.group().elem(&[1]).map_err(e)?;
    let two = s.group().elem(&[2]).map_err(e)?;
    let comm = bracket_span(s.component(&one), s.component(&two)).map_err(e)?;
    ensure(comm.contains_mat(&g).map_err(e)? && !g.is_nilpotent().map_err(e)?, "[L_1, L_2] contains non-nilpotent g")?;
    ensure(decide_irreducible(2, l.basis()).map_err(e)?.irreducible, "irreducible")?;
    unmet(check_lemma_prime(&s).map_err(e)?, "prime on e1")?;
    unmet(check_finsubgraded(&s).map_err(e)?, "finsubgraded on e1")?;
    unmet(check_multiset(&s).map_err(e)?, "multiset on e1")?;
    Ok("Z3 grading, e and f nilpotent, g not Engel, irreducible, hypotheses unmet".into())
}

fn sum3(x: Mat, y: Mat, z: Mat) -> Result<Mat, String> {
    x.add(&y).and_then(|m| m.add(&z)).map_err(e)
}

fn criterion_3() -> CriterionResult {
    let (a, b) = e2_mats();
    let ab = |x: &Mat, y: &Mat, z: &Mat| x.mul(y).and_then(|p| p.mul(z)).map_err(e);
    // (la a + mu b)^3 expanded by monomials la^k mu^(3-k).
    let coeffs = [
        ab(&a, &a, &a)?,
        sum3(ab(&a, &a, &b)?, ab(&a, &b, &a)?, ab(&b, &a, &a)?)?,
        sum3(ab(&a, &b, &b)?, ab(&b, &a, &b)?, ab(&b, &b, &a)?)?,
        ab(&b, &b, &b)?,
    ];
    ensure(coeffs.iter().all(Mat::is_zero), "symbolic expansion of (la a + mu b)^3 vanishes")?;
    ensure(polarization_test(&[a.clone(), b.clone()]).map_err(e)?, "polarization test")?;
    let m_span = Subspace::from_mats(3, &[a.clone(), b.clone()]).map_err(e)?;
    ensure(is_nil_subspace(&m_span).map_err(e)?, "span{a,b} is nil")?;
    for l in grid_values() {
        for m in grid_values() {
            let x = lin(&l, &a, &m, &b)?;
            ensure(ab(&x, &x, &x)?.is_zero(), "grid point cube vanishes")?;
        }
    }
    let ms = MatSubspace::from_mats(3, &[a.clone(), b.clone()]).map_err(e)?;
    ensure(is_lie_n_product_system(&ms, 5).map_err(e)?, "Lie 5-product system")?;
    ensure(!is_lie_n_product_system(&ms, 2).map_err(e)?, "not a Lie 2-product system")?;
    let env = lie_closure(3, &[a, b]).map_err(e)?;
    ensure(decide_irreducible(3, env.basis()).map_err(e)?.irreducible, "L(M) irreducible")?;
    let s = subgraded("e2")?;
    ensure(s.group().moduli() == [4] && s.algebra().span() == env.span(), "Z4 subgrading of L(M) verified")?;
    Ok(format!("cube vanishes symbolically and on 25 points, 5-product, L(M) dim {} irreducible", env.dim()))
}

fn criterion_4() -> CriterionResult {
    let c = campaign(Lemma::Cartan, 500)?;
    Ok(format!("500 closures, cartan test = solvability on all, digest {}", &c.digest[..12]))
}

fn criterion_5() -> CriterionResult {
    let c = campaign(Lemma::Prime, 500)?;
    ensure(c.hypothesis_met >= 30, &format!("only {} instances with scalar L_0", c.hypothesis_met))?;
    Ok(format!("{} of 500 with scalar L_0, all solvable", c.hypothesis_met))
}

fn criterion_6() -> CriterionResult {
    let mut parts = Vec::new();
    for lemma in [Lemma::Finsubgraded, Lemma::Multiset, Lemma::Lieset] {
        let start = Instant::now();
        let c = campaign(lemma, 300)?;
        let t = start.elapsed();
        ensure(t < Duration::from_secs(120), &format!("{} took {t:?}", c.lemma))?;
        ensure(c.hypothesis_met > 0, &format!("{}: no instance met the hypothesis", c.lemma))?;
        parts.push(format!("{} {}/300 met", c.lemma, c.hypothesis_met));
    }
    for name in ["pauli", "e1"] {
        let s = subgraded(name)?;
        unmet(check_finsubgraded(&s).map_err(e)?, &format!("finsubgraded on {name}"))?;
        unmet(check_multiset(&s).map_err(e)?, &format!("multiset on {name}"))?;
        unmet(check_lieset(&s).map_err(e)?, &format!("lieset on {name}"))?;
    }
    Ok(format!("{}; pauli and e1 unmet", parts.join(", ")))
}

fn criterion_7() -> CriterionResult {
    let mut parts = Vec::new();
    for lemma in [Lemma::Tripvolt, Lemma::Jordvolt, Lemma::Jorideals] {
        let c = campaign(lemma, 200)?;
        ensure(c.hypothesis_met == 200, &format!("{}: only {} instances met the hypothesis", c.lemma, c.hypothesis_met))?;
        parts.push(c.lemma);
    }
    Ok(format!("200 each of {}, all conclusions hold", parts.join(", ")))
}

fn criterion_8() -> CriterionResult {
    let c = campaign(Lemma::Triangularize, 100)?;
    ensure(c.hypothesis_met == 100, "every conjugated upper algebra is solvable")?;
    let sl2 = lie("sl2")?;
    for perm in [[0, 1], [1, 0]] {
        let r = verify_flag(sl2.basis(), &Flag::coordinate(&perm), DEFAULT_TOL).map_err(e)?;
        ensure(!r.pass, "coordinate flag rejected for sl2")?;
    }
    Ok("100 flags verified at 1e-9, both sl2 coordinate flags rejected".into())
}

fn criterion_9() -> CriterionResult {
    let mut instances: Vec<SubgradedAlgebra> = vec![subgraded("pauli")?, subgraded("e1")?, subgraded("e2")?];
    for (lemma, trials) in [(Lemma::Prime, 500), (Lemma::Finsubgraded, 300), (Lemma::Multiset, 300), (Lemma::Lieset, 300)] {
        for t in 0..trials {
            match gen_instance(lemma, suite_seed(lemma), t, DIM_MAX).map_err(e)? {
                TrialInstance::Graded(s) => instances.push(s),
                _ => return Err("expected a graded instance".into()),
            }
        }
    }
    for s in &instances {
        let r = check_ampliation(s).map_err(e)?;
        if r.outcome != Outcome::Pass {
            return Err(format!("ampliation check failed on {}", s_digest(&r)));
        }
    }
    Ok(format!("{} instances: direct ampliations, f_pi verified, implications hold", instances.len()))
}

fn s_digest(r: &CheckReport) -> String {
    r.counterexample.first().map(|d| d.to_json_compact()).unwrap_or_else(|| r.digest.clone())
}

fn criterion_10() -> CriterionResult {
    let c = campaign(Lemma::EngelSum, 200)?;
    ensure(c.hypothesis_met == 200, "every L_0 is a solvable subalgebra")?;
    let sl2 = lie("sl2")?;
    let (e_, f) = (Mat::unit(2, 0, 1), Mat::unit(2, 1, 0));
    ensure(is_engel_element(&sl2, &e_).map_err(e)? && is_engel_element(&sl2, &f).map_err(e)?, "e, f Engel in sl2")?;
    ensure(!is_engel_element(&sl2, &e_.add(&f).map_err(e)?).map_err(e)?, "e + f not Engel in sl2")?;
    Ok("200 solvable algebras closed on the sample, sl2 control fails as expected".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> CriterionResult); 10] = [
        ("pauli example", 1, criterion_1),
        ("e1 example", 1, criterion_2),
        ("e2 example", 1, criterion_3),
        ("cartan equivalence", 60, criterion_4),
        ("scalar L_0 on cyclic gradings", 120, criterion_5),
        ("Engel component suites", 360, criterion_6),
        ("triple systems and Jordan algebras", 120, criterion_7),
        ("triangularization certificates", 60, criterion_8),
        ("ampliation", 60, criterion_9),
        ("Engel sums", 60, criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let t = start.elapsed();
        let result = result.and_then(|msg| {
            if t > Duration::from_secs(*budget) {
                Err(format!("{msg}; took {:.2}s, budget {budget}s", t.as_secs_f64()))
            } else {
                Ok(msg)
            }
        });
        match result {
            Ok(msg) => println!("PASS criterion {} ({name}): {msg} [{:.2}s]", k + 1, t.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {msg} [{:.2}s]", k + 1, t.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
