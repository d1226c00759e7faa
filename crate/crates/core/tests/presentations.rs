use qpbw_core::presentations::{
    build_presentation, cross_check_short_presentation, expand_rtt, full_qmatrix_relations,
    full_quantum_determinant, mixed_relation, qmatrix_relations, quantum_determinant,
    GeneratorMatrix, PresentationSpec, RVariant, RttForm, Triangle, build_r_matrix, Flavor,
};
use qpbw_core::rewrite::{orient_relations, Lattice};
use qpbw_core::{FreeElement, Generator, LaurentElement, LaurentScalar, MatrixEntry};

fn b(i: usize, j: usize) -> LaurentElement {
    FreeElement::letter(Generator::beta(i, j))
}

fn g(j: usize, i: usize) -> LaurentElement {
    FreeElement::letter(Generator::gamma(j, i))
}

fn q() -> LaurentElement {
    FreeElement::scalar(LaurentScalar::q())
}

#[test]
fn gl2_mixed_normal_form() {
    let p = PresentationSpec::cached(2, Flavor::GL).unwrap();
    assert_eq!(p.generators().len(), 6);
    let nf = p.normal_form(&(&b(1, 2) * &g(2, 1))).unwrap();
    assert_eq!(
        nf.to_string(),
        "g[2,1]*b[1,2] + (q - q^-1)*g[1,1]*b[2,2] - (q - q^-1)*b[1,1]*g[2,2]"
    );
}

#[test]
fn sl2_diagonal_quotient() {
    let p = PresentationSpec::cached(2, Flavor::SL).unwrap();
    assert_eq!(p.normal_form(&b(2, 2)).unwrap(), g(1, 1));
    let det = &b(1, 1) * &b(2, 2);
    assert_eq!(p.normal_form(&det).unwrap(), LaurentElement::one());
}

#[test]
fn basic_normal_forms() {
    let p = PresentationSpec::cached(2, Flavor::GL).unwrap();
    let nf = p.normal_form(&(&b(1, 2) * &b(1, 1))).unwrap();
    let expect = FreeElement::scalar(LaurentScalar::q_pow(-1)) * (&b(1, 1) * &b(1, 2));
    assert_eq!(nf, expect);
    assert_eq!(p.normal_form(&(&b(1, 1) * &g(1, 1))).unwrap(), LaurentElement::one());
    let nf = p.normal_form(&(&g(1, 1) * &g(2, 1))).unwrap();
    assert_eq!(nf, &q() * &(&g(2, 1) * &g(1, 1)));
}

#[test]
fn orient_row_relation() {
    let r = &(&b(1, 1) * &b(1, 2)) - &(&q() * &(&b(1, 2) * &b(1, 1)));
    let sys = orient_relations(&[r, LaurentElement::zero()], Lattice::new(1, false)).unwrap();
    assert_eq!(sys.warnings().len(), 1);
    let nf = sys.normal_form(&(&b(1, 2) * &b(1, 1))).unwrap();
    assert_eq!(nf.to_string(), "q^-1*b[1,1]*b[1,2]");
}

#[test]
fn orient_mixed_instance() {
    let r = mixed_relation(2, 1, 1, 2);
    assert_eq!(
        r.to_string(),
        "-b[1,2]*g[2,1] + g[2,1]*b[1,2] + (q - q^-1)*g[1,1]*b[2,2] - (q - q^-1)*b[1,1]*g[2,2]"
    );
}

#[test]
fn confluence_small_ranks() {
    for n in 1..=3 {
        for flavor in [Flavor::GL, Flavor::SL] {
            let p = build_presentation(n, flavor);
            assert!(p.is_ok(), "n={n} {flavor}: {:?}", p.err());
        }
    }
}

#[test]
fn deleting_mixed_rule_breaks_confluence() {
    let p = PresentationSpec::cached(2, Flavor::GL).unwrap();
    let sys = p
        .system()
        .clone()
        .without_rule(&Generator::beta(1, 2), &Generator::gamma(2, 1));
    let amb = sys.confluence_check().unwrap();
    assert!(!amb.is_empty());
}

#[test]
fn rtt_matches_qmatrix_families() {
    for n in 2..=3 {
        let p = PresentationSpec::cached(n, Flavor::GL).unwrap();
        let r = build_r_matrix(n, RVariant::Standard);
        let bb = GeneratorMatrix::upper_b(n);
        let gg = GeneratorMatrix::lower_gamma(n);
        let rel_b = expand_rtt(&r, &bb, &bb, RttForm::TwoOne, &()).unwrap();
        let rel_g = expand_rtt(&r, &gg, &gg, RttForm::TwoOne, &()).unwrap();
        assert_eq!(rel_b.len(), n.pow(4));
        for e in rel_b.iter().chain(&rel_g) {
            assert!(p.normal_form(e).unwrap().is_zero(), "{e}");
        }
        for t in [Triangle::Upper, Triangle::Lower] {
            for e in qmatrix_relations(n, t) {
                assert!(p.normal_form(&e).unwrap().is_zero(), "{e}");
            }
        }
    }
}

#[test]
fn mixed_rtt_holds() {
    for n in 2..=3 {
        let p = PresentationSpec::cached(n, Flavor::GL).unwrap();
        let r = build_r_matrix(n, RVariant::Op);
        let gd = GeneratorMatrix::conjugated(n, false);
        let bd = GeneratorMatrix::conjugated(n, true);
        let rels = expand_rtt(&r, &gd, &bd, RttForm::OneTwo, &()).unwrap();
        let nontrivial = rels.iter().filter(|e| !e.is_zero()).count();
        assert!(nontrivial > 0);
        for e in &rels {
            assert!(p.normal_form(e).unwrap().is_zero(), "{e}");
        }
    }
}

#[test]
fn qmatrix_counts_and_determinants() {
    assert_eq!(full_qmatrix_relations(2).len(), 6);
    assert_eq!(qmatrix_relations(2, Triangle::Upper).len(), 3);
    assert!(qmatrix_relations(1, Triangle::Lower).is_empty());
    assert_eq!(quantum_determinant(2, Triangle::Upper), &b(1, 1) * &b(2, 2));
    let d: FreeElement<MatrixEntry, LaurentScalar> = full_quantum_determinant(2);
    assert_eq!(d.len(), 2);
}

#[test]
fn short_presentation_holds() {
    for n in 2..=4 {
        let report = cross_check_short_presentation(n).unwrap();
        let fails: Vec<_> = report.failures().collect();
        assert!(fails.is_empty(), "n={n}: {fails:?}");
    }
}

#[test]
fn shifted_mixed_variant_fails_at_rank_three() {
    use qpbw_core::presentations::shifted_mixed_relation;
    let p = PresentationSpec::cached(3, Flavor::GL).unwrap();
    for (i, k, j, s) in [(2, 1, 1, 3), (3, 1, 1, 2), (3, 1, 2, 3), (3, 2, 1, 3)] {
        let e = shifted_mixed_relation(i, k, j, s);
        assert!(!p.normal_form(&e).unwrap().is_zero());
    }
    let p2 = PresentationSpec::cached(2, Flavor::GL).unwrap();
    assert!(p2.normal_form(&shifted_mixed_relation(2, 1, 1, 2)).unwrap().is_zero());
}

#[test]
fn rtt_and_qmatrix_families_agree_both_ways() {
    use qpbw_core::presentations::cross_check_rtt;
    for n in 2..=3 {
        let r = cross_check_rtt(n).unwrap();
        let fails: Vec<_> = r.failures().collect();
        assert!(fails.is_empty(), "n={n}: {fails:?}");
        assert!(r.checks.iter().any(|c| c.tag == "rtt-to-qmatrix"));
        assert!(r.checks.iter().any(|c| c.tag == "qmatrix-to-rtt"));
    }
}
