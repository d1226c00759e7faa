use std::collections::BTreeMap;

use qpbw_core::presentations::{Flavor, PresentationSpec};
use qpbw_core::structmaps::*;
use qpbw_core::{FreeElement, Generator, LaurentScalar, RatScalar};

type R = FreeElement<Generator, RatScalar>;

fn b(i: usize, j: usize) -> R {
    FreeElement::letter(Generator::beta(i, j))
}

fn g(j: usize, i: usize) -> R {
    FreeElement::letter(Generator::gamma(j, i))
}

fn c(l: LaurentScalar) -> RatScalar {
    l.into()
}

fn qq_inv() -> RatScalar {
    c(LaurentScalar::q_minus_q_inv()).inverse().unwrap()
}

fn assert_clean(r: &qpbw_core::report::Report) {
    let fails: Vec<_> = r.failures().collect();
    assert!(fails.is_empty(), "{fails:?}");
    assert!(r.pass_count() > 0);
}

#[test]
fn derived_generators_n2() {
    let t = derived_generators(2).unwrap();
    let jg = JimboGenerators::new(2).unwrap();
    let e1 = jg.nf(&(&b(1, 2) * &g(2, 2)).scale(&-qq_inv())).unwrap();
    let f1 = jg.nf(&(&b(2, 2) * &g(2, 1)).scale(&qq_inv())).unwrap();
    assert_eq!(t.get("E_1"), Some(&e1));
    assert_eq!(t.get("F_1"), Some(&f1));
    assert_eq!(t.get("G_1"), Some(&b(1, 1)));
    assert_eq!(t.get("G_1^-1"), Some(&g(1, 1)));
    assert_eq!(t.get("K_1"), Some(&(&b(1, 1) * &g(2, 2))));
    assert!(matches!(derived_generators(1), Err(StructError::InvalidRank(1))));
}

#[test]
fn jimbo_examples_n2() {
    let jg = JimboGenerators::new(2).unwrap();
    let toral = &(&b(1, 1) * &g(2, 2)) - &(&g(1, 1) * &b(2, 2));
    let r = &(&(jg.e(1) * jg.f(1)) - &(jg.f(1) * jg.e(1))) - &toral.scale(&qq_inv());
    assert!(jg.nf(&r).unwrap().is_zero());
    let conj = &(&b(1, 1) * jg.e(1)) * &g(1, 1);
    let r = &conj - &jg.e(1).scale(&c(LaurentScalar::q()));
    assert!(jg.nf(&r).unwrap().is_zero());
}

#[test]
fn jimbo_serre_n3() {
    let jg = JimboGenerators::new(3).unwrap();
    let (e1, e2) = (jg.e(1), jg.e(2));
    let two = c(LaurentScalar::quantum_integer(2));
    let r = &(&(&(e1 * e1) * e2) - &(&(e1 * e2) * e1).scale(&two)) + &(&(e2 * e1) * e1);
    assert!(jg.nf(&r).unwrap().is_zero());
}

#[test]
fn jimbo_presentation_holds() {
    for n in 2..=3 {
        assert_clean(&verify_jimbo_presentation(n).unwrap());
    }
}

#[test]
fn root_vector_examples() {
    let t = quantum_root_vectors(3).unwrap();
    let jg = JimboGenerators::new(3).unwrap();
    let (e1, e2) = (jg.e(1), jg.e(2));
    let qi = c(LaurentScalar::q_pow(-1));
    let em13 = jg.nf(&(&(e1 * e2) - &(e2 * e1).scale(&qi))).unwrap();
    assert_eq!(t.get("E-_1,3"), Some(&em13));
    assert_eq!(t.get("E+_1,2"), Some(e1));
    assert_eq!(t.get("E-_2,3"), Some(e2));
    assert_eq!(t.get("Edot-_1,3"), Some(&em13.scale(&c(LaurentScalar::q_minus_q_inv()))));

    let sym = root_e_symbolic(RootSign::Minus, 1, 3);
    assert_eq!(jg.realize(&sym).unwrap(), em13);
}

#[test]
fn rootvector_identity_examples() {
    let jg = JimboGenerators::new(3).unwrap();
    let rv = RootVectors::new(&jg).unwrap();
    let q2 = c(LaurentScalar::q_pow(2));
    let r = &b(1, 3) - &(jg.g(3) * &rv.e_dot(RootSign::Minus, 1, 3)).scale(&q2);
    assert!(jg.nf(&r).unwrap().is_zero());
    let mq = c(-LaurentScalar::q());
    let r = &b(1, 2) - &(jg.g(2) * &rv.e_dot(RootSign::Minus, 1, 2)).scale(&mq);
    assert!(jg.nf(&r).unwrap().is_zero());
    // γ_21 = −(−q)^{-1} Ḟ⁻_21 G_2⁻¹
    let r = &g(2, 1) - &(&rv.f_dot(RootSign::Minus, 2, 1) * jg.g_inv(2)).scale(&c(LaurentScalar::q_pow(-1)));
    assert!(jg.nf(&r).unwrap().is_zero());
}

#[test]
fn rootvector_identities_hold() {
    for n in 2..=3 {
        assert_clean(&check_rootvector_identities(n).unwrap());
    }
}

#[test]
fn splitting_independence_rank_four() {
    let jg = JimboGenerators::new(4).unwrap();
    let rv = RootVectors::new(&jg).unwrap();
    let r = check_splitting_independence(&jg, &rv).unwrap();
    assert_clean(&r);
    assert_eq!(r.checks.len(), 2 * 2 * 4);
}

#[test]
fn psi_examples() {
    let jg = JimboGenerators::new(3).unwrap();
    let rv = RootVectors::new(&jg).unwrap();
    let map = psi(3).unwrap();
    assert_eq!(map.direction(), MapDirection::Antihomomorphism);
    assert_eq!(map.apply(&b(1, 1)).unwrap(), g(1, 1));
    assert_eq!(map.apply(jg.e(1)).unwrap(), *jg.e(1));
    assert_eq!(map.apply(jg.f(2)).unwrap(), *jg.f(2));
    let want = rv.e(RootSign::Minus, 1, 3).scale(&c(-LaurentScalar::q()));
    assert_eq!(map.apply(rv.e(RootSign::Plus, 1, 3)).unwrap(), want);
    assert!(map.report().passed());
}

#[test]
fn psi_identities_hold() {
    for n in 2..=3 {
        assert_clean(&check_psi_identities(n).unwrap());
    }
}

#[test]
fn antimap_rejects_a_wrong_table() {
    let jg = JimboGenerators::new(2).unwrap();
    let images: BTreeMap<_, _> = jg.symbols().clone();
    let p = jg.presentation().clone();
    let err = build_algebra_antimap(&images, p.clone()).unwrap_err();
    assert!(matches!(err, StructError::ValidationFailed { .. }), "{err}");

    let mut partial = images;
    partial.remove(&JimboSymbol::F(1));
    let err = build_algebra_antimap(&partial, p).unwrap_err();
    assert!(matches!(err, StructError::MissingImage(_)));
}

#[test]
fn frt_expressions_round_trip() {
    let jg = JimboGenerators::new(3).unwrap();
    for (x, expr) in frt_in_jimbo(3) {
        assert_eq!(jg.realize(&expr).unwrap(), FreeElement::letter(x));
    }
}

#[test]
fn gamma_recursion_needs_inverse_diagonal() {
    let p = PresentationSpec::cached(3, Flavor::GL).unwrap();
    let sys = p.rat_system();
    let comm = g(2, 1).commutator(&g(3, 2)).scale(&qq_inv());
    let with_inverse = &(&comm * &b(2, 2)) - &g(3, 1);
    assert!(sys.normal_form(&with_inverse).unwrap().is_zero());
    let with_plus = &(&comm * &g(2, 2)) - &g(3, 1);
    assert!(!sys.normal_form(&with_plus).unwrap().is_zero());
}

#[test]
fn l_operator_examples() {
    let (lp, lm, report) = l_operator_matrices(2).unwrap();
    let jg = JimboGenerators::new(2).unwrap();
    assert_eq!(jg.nf(&(lp.get(1, 1) * lm.get(1, 1))).unwrap(), R::one());
    assert!(lp.get(2, 1).is_zero() && lm.get(1, 2).is_zero());
    let rll_mixed = report
        .checks
        .iter()
        .filter(|c| c.name.starts_with("RLL+-"))
        .count();
    assert_eq!(rll_mixed, 16);
    let map = psi(2).unwrap();
    let arg = &(&b(2, 2) * &g(2, 1)) * &g(1, 1);
    assert_eq!(&map.apply(&arg).unwrap() - lp.get(1, 2), R::zero());
    assert_clean(&report);
}

#[test]
fn l_operator_chain_holds() {
    for n in 2..=3 {
        let (_, _, report) = l_operator_matrices(n).unwrap();
        assert_clean(&report);
        for tag in ["rll", "l-diagonal-inverse", "l-operator-psi", "l-operator-inversion"] {
            assert!(report.checks.iter().any(|c| c.tag == tag), "{tag}");
        }
    }
}

#[test]
fn integer_form_membership() {
    for n in 2..=3 {
        assert_clean(&check_integer_form(n).unwrap());
    }
    let jg = JimboGenerators::new(2).unwrap();
    assert!(jg.e(1).to_integer_form().is_err());
    assert!(b(1, 2).to_integer_form().is_ok());
}

#[test]
fn projections_validate() {
    for n in 1..=3 {
        for upper in [true, false] {
            let m = projection_map(n, upper).unwrap();
            assert!(m.report().passed());
            assert_eq!(m.direction(), MapDirection::Homomorphism);
        }
    }
}

#[test]
fn tables_serialize() {
    let t = quantum_root_vectors(2).unwrap();
    let js = serde_json::to_value(&t).unwrap();
    assert_eq!(js["n"], 2);
    assert!(js["generators"][0]["definition"].is_string());
}
