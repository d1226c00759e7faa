use qpbw_core::presentations::{quantum_determinant, Flavor, PresentationSpec, Triangle};
use qpbw_core::specialize::*;
use qpbw_core::structmaps::JimboGenerators;
use qpbw_core::{CycloScalar, FreeElement, Generator, LaurentElement, LaurentScalar, TensorElement};

fn b(i: usize, j: usize) -> LaurentElement {
    FreeElement::letter(Generator::beta(i, j))
}

fn g(j: usize, i: usize) -> LaurentElement {
    FreeElement::letter(Generator::gamma(j, i))
}

fn gl(n: usize) -> std::sync::Arc<PresentationSpec> {
    PresentationSpec::cached(n, Flavor::GL).unwrap()
}

#[test]
fn limit_of_row_commutator_vanishes() {
    let p = gl(2);
    let c = b(1, 1).commutator(&b(1, 2));
    let nf = p.normal_form(&c).unwrap();
    let coeff = LaurentScalar::from_int_terms(&[(0, 1), (-1, -1)]);
    assert_eq!(nf, (&b(1, 1) * &b(1, 2)).scale(&coeff));
    assert!(classical_limit(&p, &c).unwrap().is_zero());
}

#[test]
fn jimbo_generator_has_no_limit() {
    let jg = JimboGenerators::new(2).unwrap();
    let err = classical_limit(&gl(2), jg.e(1)).unwrap_err();
    assert!(matches!(err, SpecializeError::NotInIntegerForm { .. }));
}

#[test]
fn determinant_limit() {
    let p = gl(2);
    let d = classical_limit(&p, &quantum_determinant(2, Triangle::Upper)).unwrap();
    assert_eq!(d.to_string(), "b[1,1]*b[2,2]");
}

#[test]
fn bracket_examples() {
    let p = gl(2);
    let lat = p.system().lattice();
    let bar = |x| CommutativeElement::generator(lat, x);
    let (b11, b12, b22) = (bar(Generator::beta(1, 1)), bar(Generator::beta(1, 2)), bar(Generator::beta(2, 2)));
    let (g11, g21, g22) = (bar(Generator::gamma(1, 1)), bar(Generator::gamma(2, 1)), bar(Generator::gamma(2, 2)));

    assert_eq!(poisson_bracket(&p, &b(1, 1), &b(1, 2)).unwrap(), &b11 * &b12);
    let want = (&(&g11 * &b22) - &(&b11 * &g22)).scale_int(2);
    assert_eq!(poisson_bracket(&p, &b(1, 2), &g(2, 1)).unwrap(), want);
    assert_eq!(poisson_bracket(&p, &b(1, 1), &g(2, 1)).unwrap(), -&(&b11 * &g21));
}

#[test]
fn poisson_tables_match() {
    for n in 2..=3 {
        for flavor in [Flavor::GL, Flavor::SL] {
            let r = verify_poisson_tables(n, flavor).unwrap();
            let fails: Vec<_> = r.failures().collect();
            assert!(fails.is_empty(), "n={n} {flavor}: {fails:?}");
        }
    }
    let r = verify_poisson_tables(2, Flavor::GL).unwrap();
    assert_eq!(r.checks.iter().filter(|c| c.tag == "poisson-table").count(), 15);
}

#[test]
fn limit_is_multiplicative() {
    let p = gl(3);
    let gens = Generator::all(3);
    for &x in &gens {
        for &y in &gens {
            let (x, y): (LaurentElement, LaurentElement) = (FreeElement::letter(x), FreeElement::letter(y));
            let lhs = classical_limit(&p, &(&x * &y)).unwrap();
            let rhs = &classical_limit(&p, &x).unwrap() * &classical_limit(&p, &y).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn root_of_unity_rules() {
    let sp = specialize_root_of_unity(gl(2), 3, false).unwrap();
    let x: FreeElement<Generator, CycloScalar> = FreeElement::word(vec![Generator::beta(1, 2), Generator::beta(1, 1)]);
    let nf = sp.normal_form(&x).unwrap();
    let eps_inv = CycloScalar::from_laurent(&LaurentScalar::q_pow(-1), 3);
    let eps_sq = CycloScalar::from_laurent(&LaurentScalar::q_pow(2), 3);
    assert_eq!(eps_inv, eps_sq);
    assert_eq!(nf, FreeElement::monomial(vec![Generator::beta(1, 1), Generator::beta(1, 2)], eps_inv));

    let qq = CycloScalar::from_laurent(&LaurentScalar::q_minus_q_inv(), 3);
    assert_eq!(qq.residue(), LaurentScalar::from_int_terms(&[(1, 2), (0, 1)]));
}

#[test]
fn unsupported_levels() {
    for (level, flag) in [(0, false), (1, false), (1, true), (4, false)] {
        let r = specialize_root_of_unity(gl(2), level, flag);
        assert!(matches!(r, Err(SpecializeError::UnsupportedLevel { .. })), "{level}");
    }
    let r = frobenius_check(2, 4, Flavor::GL, true).unwrap();
    assert!(r.passed());
}

#[test]
fn frobenius_examples() {
    let sp = specialize_root_of_unity(gl(2), 3, false).unwrap();
    let l = |x| FreeElement::<Generator, CycloScalar>::letter(x);
    let b12 = sp.power(&l(Generator::beta(1, 2))).unwrap();
    let g21 = sp.power(&l(Generator::gamma(2, 1))).unwrap();
    assert!(sp.normal_form(&b12.commutator(&g21)).unwrap().is_zero());
    let b11 = sp.power(&l(Generator::beta(1, 1))).unwrap();
    let g11 = sp.power(&l(Generator::gamma(1, 1))).unwrap();
    assert_eq!(sp.normal_form(&(&b11 * &g11)).unwrap(), FreeElement::one());

    let hopf = qpbw_core::hopf::HopfContext::with_system(gl(2), sp.system().clone());
    let b22 = sp.power(&l(Generator::beta(2, 2))).unwrap();
    let want = TensorElement::from_elements(&[&b11, &b12])
        .add(&TensorElement::from_elements(&[&b12, &b22]))
        .unwrap();
    assert_eq!(hopf.coproduct(&b12).unwrap(), want);
}

#[test]
fn frobenius_suites_pass() {
    for (n, level) in [(2, 3), (2, 5), (3, 3)] {
        for flavor in [Flavor::GL, Flavor::SL] {
            let r = frobenius_check(n, level, flavor, false).unwrap();
            let fails: Vec<_> = r.failures().collect();
            assert!(fails.is_empty(), "n={n} l={level} {flavor}: {fails:?}");
            for tag in ["frobenius-commute", "frobenius-relations", "frobenius-coproduct"] {
                assert!(r.checks.iter().any(|c| c.tag == tag));
            }
        }
    }
}
