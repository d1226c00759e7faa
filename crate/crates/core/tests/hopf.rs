use num_traits::{One, Zero};
use qpbw_core::hopf::HopfContext;
use qpbw_core::presentations::{Flavor, PresentationSpec};
use qpbw_core::{FreeElement, Generator, LaurentElement, LaurentScalar, TensorElement};

fn b(i: usize, j: usize) -> LaurentElement {
    FreeElement::letter(Generator::beta(i, j))
}

fn g(j: usize, i: usize) -> LaurentElement {
    FreeElement::letter(Generator::gamma(j, i))
}

fn ctx(n: usize, flavor: Flavor) -> HopfContext<LaurentScalar> {
    HopfContext::laurent(PresentationSpec::cached(n, flavor).unwrap())
}

fn t2(a: &LaurentElement, c: &LaurentElement) -> TensorElement<Generator, LaurentScalar> {
    TensorElement::from_elements(&[a, c])
}

#[test]
fn coproduct_examples() {
    let h = ctx(3, Flavor::GL);
    assert_eq!(h.coproduct(&b(1, 1)).unwrap(), t2(&b(1, 1), &b(1, 1)));
    let d12 = t2(&b(1, 1), &b(1, 2)).add(&t2(&b(1, 2), &b(2, 2))).unwrap();
    assert_eq!(h.coproduct(&b(1, 2)).unwrap(), d12);
    let d13 = h.coproduct(&b(1, 3)).unwrap();
    assert_eq!(d13.len(), 3);
    let dg = h.coproduct(&g(3, 1)).unwrap();
    assert_eq!(dg.len(), 3);
}

#[test]
fn grouplike_square() {
    let h = ctx(2, Flavor::GL);
    let sq = &b(1, 1) * &b(1, 1);
    assert_eq!(h.coproduct(&sq).unwrap(), t2(&sq, &sq));
    let d = &b(1, 1) * &b(2, 2);
    assert_eq!(h.coproduct(&d).unwrap(), t2(&d, &d));
}

#[test]
fn tensor_product_of_coproducts() {
    let h = ctx(2, Flavor::GL);
    let d = h.coproduct(&b(1, 1)).unwrap();
    let sq = d.mul(&d).unwrap();
    let w = &b(1, 1) * &b(1, 1);
    assert_eq!(sq, t2(&w, &w));
}

#[test]
fn counit_examples() {
    let h = ctx(2, Flavor::GL);
    assert!(h.counit(&b(1, 2)).is_zero());
    assert!(h.counit(&(&b(1, 1) * &b(2, 2))).is_one());
    let e = &FreeElement::scalar(LaurentScalar::q()) + &b(1, 2);
    assert_eq!(h.counit(&e), LaurentScalar::q());
}

#[test]
fn antipode_examples() {
    let h = ctx(2, Flavor::GL);
    assert_eq!(h.antipode(&b(1, 1)).unwrap(), g(1, 1));
    let s12 = h.antipode(&b(1, 2)).unwrap();
    let expect = -(&(&g(1, 1) * &b(1, 2)) * &g(2, 2));
    assert_eq!(s12, h.system().normal_form(&expect).unwrap());
    assert_eq!(h.antipode(&g(1, 1)).and_then(|s| h.antipode(&s)).unwrap(), g(1, 1));
}

#[test]
fn antipode_is_antimultiplicative() {
    let h = ctx(3, Flavor::GL);
    let gens: Vec<_> = Generator::all(3).into_iter().map(FreeElement::letter).collect();
    for x in &gens {
        for y in &gens {
            let lhs = h.antipode(&(x * y)).unwrap();
            let rhs = h
                .system()
                .normal_form(&(&h.antipode(y).unwrap() * &h.antipode(x).unwrap()))
                .unwrap();
            assert_eq!(lhs, rhs, "{x} {y}");
        }
    }
}

#[test]
fn coproduct_is_multiplicative_on_normal_forms() {
    let h = ctx(2, Flavor::GL);
    let x = &b(1, 2) * &g(2, 1);
    let nf = h.system().normal_form(&x).unwrap();
    assert_eq!(h.coproduct(&x).unwrap(), h.coproduct(&nf).unwrap());
}

#[test]
fn hopf_axioms_hold() {
    for n in 1..=3 {
        for flavor in [Flavor::GL, Flavor::SL] {
            let report = ctx(n, flavor).verify_hopf_axioms();
            let fails: Vec<_> = report.failures().collect();
            assert!(fails.is_empty(), "n={n} {flavor}: {fails:?}");
            assert!(report.pass_count() > 0);
        }
    }
}

#[test]
fn sl_diagonal_product_is_one() {
    let h = ctx(3, Flavor::SL);
    let d = &(&b(1, 1) * &b(2, 2)) * &b(3, 3);
    assert_eq!(h.system().normal_form(&d).unwrap(), LaurentElement::one());
}

#[test]
fn centrality_and_quantum_determinant() {
    use qpbw_core::hopf::{qmatrix_system, verify_centrality};
    for n in 2..=3 {
        for flavor in [Flavor::GL, Flavor::SL] {
            let r = verify_centrality(n, flavor).unwrap();
            let fails: Vec<_> = r.failures().collect();
            assert!(fails.is_empty(), "n={n} {flavor}: {fails:?}");
        }
    }
    let sys = qmatrix_system(3).unwrap();
    assert!(sys.confluence_check().unwrap().is_empty());
}
