//! The `analyze` report: structural facts about one document plus every applicable check.

use gradelie_core::grading::SubgradedAlgebra;
use gradelie_core::lie::{
    cartan_test, consists_of_engel, derived_series, is_nil_subspace, is_nilpotent_lie, is_solvable, killing_form,
    lower_central_series,
};
use gradelie_core::spectral::{decide_irreducible, triangularize_solvable, verify_flag};
use gradelie_core::structures::{
    is_jordan_algebra, is_lie_n_product_system, is_lie_triple_system, jordan_to_z2, triple_envelope, triple_to_z2,
    MatSubspace,
};
use gradelie_core::LieAlgebra;
use serde_json::Value;

use crate::checks;
use crate::document::{AlgebraDocument, Instance};
use crate::report::Analysis;
use crate::HarnessError;

type Result<T> = std::result::Result<T, HarnessError>;

pub fn group_label(moduli: &[u64]) -> String {
    moduli.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join(" x ")
}

fn dims(v: Vec<usize>) -> Value {
    Value::from(v)
}

/// Dimension, series, Cartan and Killing data, irreducibility and a flag when solvable.
/// Keys are prefixed with `prefix` so envelopes can be reported next to their generators.
pub fn lie_facts(a: &mut Analysis, prefix: &str, l: &LieAlgebra, tol: f64) -> Result<()> {
    let k = |s: &str| format!("{prefix}{s}");
    a.put(k("dim"), l.dim());
    a.put(k("derived series dims"), dims(derived_series(l)?.dims()));
    a.put(k("lower central series dims"), dims(lower_central_series(l)?.dims()));
    let solvable = is_solvable(l)?;
    a.put(k("solvable"), solvable);
    a.put(k("nilpotent"), is_nilpotent_lie(l)?);
    a.put(k("cartan test"), cartan_test(l)?);
    a.put(k("Killing form nondegenerate"), killing_form(l)?.is_nondegenerate()?);
    let v = decide_irreducible(l.n(), l.basis())?;
    a.put(k("irreducible"), v.irreducible);
    a.put(k("associative closure dim"), v.assoc_dim);
    if let Some(w) = &v.witness {
        a.put(k("invariant subspace dim"), w.dim());
    }
    if solvable {
        let flag = triangularize_solvable(l)?;
        a.put(k("flag"), if flag.is_exact() { "exact" } else { "numeric" });
        a.put(k("flag verified"), verify_flag(l.basis(), &flag, tol)?.pass);
    }
    Ok(())
}

fn subgraded_facts(a: &mut Analysis, s: &SubgradedAlgebra, tol: f64) -> Result<()> {
    let g = s.group();
    a.put("group", group_label(g.moduli()));
    a.put("grading law verified", true);
    a.put("direct", s.is_direct());
    for (e, c) in s.components() {
        let key = e.key();
        a.put(format!("L_{key} dim"), c.dim());
        a.put(format!("L_{key} nil"), is_nil_subspace(c)?);
        a.put(format!("L_{key} Engel"), consists_of_engel(s.algebra(), c)?);
    }
    if let [n] = g.moduli() {
        let one = g.elem(&[1 % n])?;
        let l1 = s.component(&one);
        if *n >= 2 && !l1.is_zero() {
            let m = MatSubspace::from_subspace(l1)?;
            a.put(format!("L_1 is a Lie {}-product system", n + 1), is_lie_n_product_system(&m, (*n as usize) + 1)?);
        }
    }
    lie_facts(a, "", s.algebra(), tol)?;
    a.checks.push(checks::check_finsubgraded(s)?);
    a.checks.push(checks::check_multiset(s)?);
    a.checks.push(checks::check_lieset(s)?);
    if s.is_direct() {
        a.checks.push(checks::check_cart(s)?);
        a.checks.push(checks::check_l0_triang(s)?);
        if g.is_cyclic() {
            a.checks.push(checks::check_lemma_prime(s)?);
        }
    }
    if g.moduli() == [2] {
        a.checks.push(checks::check_findim2(s)?);
    }
    a.checks.push(checks::check_ampliation(s)?);
    Ok(())
}

fn product_systems(a: &mut Analysis, m: &MatSubspace) -> Result<()> {
    a.put("dim", m.dim());
    a.put("nil", is_nil_subspace(m.span())?);
    let triple = is_lie_triple_system(m)?;
    a.put("triple system", triple);
    let products: Vec<usize> = (2..=6).filter_map(|p| is_lie_n_product_system(m, p).ok()?.then_some(p)).collect();
    a.put("n-product system for n in 2..6", dims(products));
    Ok(())
}

pub fn analyze(doc: &AlgebraDocument, inst: &Instance, tol: f64) -> Result<Analysis> {
    let mut a = Analysis::default();
    a.put("structure", doc.structure.as_str());
    a.put("ambient dim", doc.ambient_dim);
    a.put("digest", doc.digest());
    match inst {
        Instance::Lie(l) => {
            lie_facts(&mut a, "", l, tol)?;
            a.checks.push(checks::check_cartan(l)?);
            a.checks.push(checks::check_crit12(l)?);
            a.checks.push(checks::check_triangularization(l)?);
            a.checks.push(checks::check_engel_sum(l, l)?);
        }
        Instance::Subgraded(s) => subgraded_facts(&mut a, s, tol)?,
        Instance::Triple(m) => {
            product_systems(&mut a, m)?;
            lie_facts(&mut a, "L(M) ", &triple_envelope(m)?, tol)?;
            a.checks.push(checks::check_tripvolt(m)?);
            if is_lie_triple_system(m)? {
                a.checks.push(checks::check_findim2(&triple_to_z2(m)?)?);
            }
        }
        Instance::Jordan(j) => {
            product_systems(&mut a, j)?;
            a.put("Jordan algebra", is_jordan_algebra(j)?);
            lie_facts(&mut a, "L(J) ", &triple_envelope(j)?, tol)?;
            a.checks.push(checks::check_jordvolt(j)?);
            if let Ok(s) = jordan_to_z2(j) {
                a.checks.push(checks::check_findim2(&s)?);
            }
        }
    }
    Ok(a)
}
