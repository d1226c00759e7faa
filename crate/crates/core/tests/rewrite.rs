use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qpbw_core::freealg::{off_degree, word_cmp, FreeAlgError};
use qpbw_core::hopf::HopfContext;
use qpbw_core::presentations::{
    diagonal_inverse_relations, mixed_relation, qmatrix_relations, Flavor, PresentationSpec, Triangle,
};
use qpbw_core::rewrite::{orient_relations, Lattice, RewriteError, Strategy};
use qpbw_core::{FreeElement, Generator, LaurentElement, LaurentScalar, TensorElement};

fn b(i: usize, j: usize) -> LaurentElement {
    FreeElement::letter(Generator::beta(i, j))
}

fn g(j: usize, i: usize) -> LaurentElement {
    FreeElement::letter(Generator::gamma(j, i))
}

fn qq() -> LaurentElement {
    FreeElement::scalar(LaurentScalar::q_minus_q_inv())
}

fn q(e: i32) -> LaurentScalar {
    LaurentScalar::q_pow(e)
}

fn gl(n: usize) -> std::sync::Arc<PresentationSpec> {
    PresentationSpec::cached(n, Flavor::GL).unwrap()
}

#[test]
fn free_products_and_scaling() {
    let p = &b(1, 1) * &b(1, 2);
    assert_eq!(p, FreeElement::word(vec![Generator::beta(1, 1), Generator::beta(1, 2)]));
    let two = LaurentScalar::from_int(2);
    let three = LaurentScalar::from_int(3);
    assert_eq!(&b(1, 1).scale(&two) * &b(1, 2).scale(&three), p.scale(&LaurentScalar::from_int(6)));
    assert!((&b(2, 2) + &(-&b(2, 2))).is_zero());
    assert!(Generator::new(qpbw_core::GeneratorKind::Beta, 2, 1).is_err());
}

#[test]
fn tensor_products() {
    let x = TensorElement::from_elements(&[&b(1, 1), &b(1, 2)]);
    let y = TensorElement::from_elements(&[&b(1, 2), &b(2, 2)]);
    let want = TensorElement::from_elements(&[&(&b(1, 1) * &b(1, 2)), &(&b(1, 2) * &b(2, 2))]);
    assert_eq!(x.mul(&y).unwrap(), want);
    assert_eq!(TensorElement::one(2).mul(&x).unwrap(), x);
    let z = TensorElement::from_elements(&[&b(1, 1)]);
    assert!(matches!(x.mul(&z), Err(FreeAlgError::DegreeMismatch { .. })));

    let h = HopfContext::laurent(gl(2));
    let d = h.coproduct(&b(1, 1)).unwrap();
    let sq = h.system().normal_form_tensor(&d.mul(&d).unwrap()).unwrap();
    let b11sq = b(1, 1).pow(2);
    assert_eq!(sq, TensorElement::from_elements(&[&b11sq, &b11sq]));
}

#[test]
fn orientation_examples() {
    // Row relation b11 b12 - q b12 b11, plus the column relation fixing the
    // weight of b12 at the second index.
    let row = &(&b(1, 1) * &b(1, 2)) - &(&b(1, 2) * &b(1, 1)).scale(&q(1));
    let col = &(&b(1, 2) * &b(2, 2)) - &(&b(2, 2) * &b(1, 2)).scale(&q(1));
    let mut rels = diagonal_inverse_relations(2);
    rels.extend([row, col]);
    let sys = orient_relations(&rels, Lattice::new(2, false)).unwrap();
    let nf = sys.normal_form(&(&b(1, 2) * &b(1, 1))).unwrap();
    assert_eq!(nf, (&b(1, 1) * &b(1, 2)).scale(&q(-1)));

    // Mixed relation instance (i,k,j,s) = (2,1,1,2).
    let mut rels = diagonal_inverse_relations(2);
    rels.extend(qmatrix_relations(2, Triangle::Upper));
    rels.extend(qmatrix_relations(2, Triangle::Lower));
    rels.push(mixed_relation(2, 1, 1, 2));
    let sys = orient_relations(&rels, Lattice::new(2, false)).unwrap();
    let rule = sys
        .rules()
        .into_iter()
        .find(|r| r.lhs == vec![Generator::beta(1, 2), Generator::gamma(2, 1)])
        .expect("b12 g21 is a leading word");
    let want = &(&(&g(2, 1) * &b(1, 2)) + &(&qq() * &(&g(1, 1) * &b(2, 2)))) - &(&qq() * &(&b(1, 1) * &g(2, 2)));
    assert_eq!(rule.rhs, want);

    // The diagonal inverse relations already vanish in the lattice.
    let mut rels = diagonal_inverse_relations(2);
    let base = orient_relations(&rels, Lattice::new(2, false)).unwrap().warnings().len();
    rels.push(LaurentElement::zero());
    let sys = orient_relations(&rels, Lattice::new(2, false)).unwrap();
    assert_eq!(sys.warnings().len(), base + 1);
    assert_eq!(sys.rule_count(), 0);
}

#[test]
fn normal_form_examples() {
    let p = gl(2);
    assert_eq!(p.normal_form(&(&b(1, 2) * &b(1, 1))).unwrap(), (&b(1, 1) * &b(1, 2)).scale(&q(-1)));
    assert_eq!(p.normal_form(&(&b(1, 1) * &g(1, 1))).unwrap(), LaurentElement::one());
    assert_eq!(p.normal_form(&(&g(1, 1) * &g(2, 1))).unwrap(), (&g(2, 1) * &g(1, 1)).scale(&q(1)));
}

#[test]
fn confluence_examples() {
    let p = gl(2);
    assert!(p.system().confluence_check().unwrap().is_empty());
    let broken = p
        .system()
        .clone()
        .without_rule(&Generator::beta(1, 2), &Generator::gamma(2, 1));
    let amb = broken.confluence_check().unwrap();
    assert!(!amb.is_empty());
    assert!(amb.iter().all(|a| !a.difference.is_zero()));

    let sys = orient_relations(&diagonal_inverse_relations(1), Lattice::new(1, false)).unwrap();
    assert!(sys.confluence_check().unwrap().is_empty());
    assert_eq!(sys.normal_form(&(&g(1, 1) * &b(1, 1))).unwrap(), LaurentElement::one());
}

#[test]
fn step_budget_guard() {
    let sys = gl(3).system().clone().with_step_budget(2);
    let e = &(&b(1, 3) * &g(3, 1)) * &(&b(2, 3) * &g(3, 2));
    assert!(matches!(sys.normal_form(&e), Err(RewriteError::NonTermination { .. })));
}

fn random_element(rng: &mut ChaCha8Rng, gens: &[Generator], max_len: usize) -> LaurentElement {
    let mut e = LaurentElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let w: Vec<Generator> = (0..rng.gen_range(0..=max_len)).map(|_| *gens.choose(rng).unwrap()).collect();
        let c = LaurentScalar::from_int_terms(&[(rng.gen_range(-2..=2), rng.gen_range(-3..=3))]);
        e = &e + &FreeElement::monomial(w, c);
    }
    e
}

#[test]
fn normal_form_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (n, flavor) in [(2, Flavor::GL), (3, Flavor::GL), (3, Flavor::SL)] {
        let p = PresentationSpec::cached(n, flavor).unwrap();
        let sys = p.system();
        let gens = Generator::all(n);
        for _ in 0..60 {
            let x = random_element(&mut rng, &gens, 4);
            let y = random_element(&mut rng, &gens, 4);
            let nx = sys.normal_form(&x).unwrap();
            assert_eq!(sys.normal_form(&nx).unwrap(), nx, "idempotent");
            let (a, c) = (q(2), LaurentScalar::from_int(-3));
            let lin = sys.normal_form(&(&x.scale(&a) + &y.scale(&c))).unwrap();
            let ny = sys.normal_form(&y).unwrap();
            assert_eq!(lin, &nx.scale(&a) + &ny.scale(&c), "linear");
            let xy = &x * &y;
            let left = sys.normal_form_with(&xy, Strategy::Leftmost).unwrap();
            let right = sys.normal_form_with(&xy, Strategy::Rightmost).unwrap();
            assert_eq!(left, right, "strategy independence");
            for (w, _) in left.terms() {
                assert!(sys.is_irreducible(w));
            }
        }
    }
}

/// Root-lattice weight: sum of e_row - e_col over the letters.
fn root_weight(w: &[Generator], n: usize) -> Vec<i32> {
    let mut v = vec![0; n];
    for x in w {
        v[x.row() - 1] += 1;
        v[x.col() - 1] -= 1;
    }
    v
}

#[test]
fn rules_are_graded_and_decreasing() {
    for flavor in [Flavor::GL, Flavor::SL] {
        let p = PresentationSpec::cached(3, flavor).unwrap();
        for r in p.system().rules() {
            let d = off_degree(&r.lhs);
            for (w, _) in r.rhs.terms() {
                assert_eq!(root_weight(w, 3), root_weight(&r.lhs, 3), "{:?}", r.lhs);
                assert!(off_degree(w) <= d);
                assert_eq!(word_cmp(w, &r.lhs), std::cmp::Ordering::Less);
            }
        }
    }
}

#[test]
fn step_count_grows_with_input() {
    let p = gl(3);
    let sys = p.system();
    let mut prev = 0;
    let mut e = LaurentElement::one();
    for x in [Generator::beta(2, 3), Generator::gamma(3, 1), Generator::beta(1, 2), Generator::gamma(2, 1)] {
        e = &FreeElement::letter(x) * &e;
        let (_, stats) = sys.normal_form_stats(&e, Strategy::Leftmost).unwrap();
        assert!(stats.steps >= prev);
        prev = stats.steps;
    }
    assert!(prev > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn free_multiplication_is_associative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = Generator::all(3);
        let x = random_element(&mut rng, &gens, 3);
        let y = random_element(&mut rng, &gens, 3);
        let z = random_element(&mut rng, &gens, 3);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        if !x.is_zero() && !y.is_zero() {
            prop_assert_eq!((&x * &y).degree(), x.degree() + y.degree());
        }
    }

    #[test]
    fn normal_form_respects_products(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = gl(2);
        let sys = p.system();
        let gens = Generator::all(2);
        let x = random_element(&mut rng, &gens, 3);
        let y = random_element(&mut rng, &gens, 3);
        let nx = sys.normal_form(&x).unwrap();
        let ny = sys.normal_form(&y).unwrap();
        prop_assert_eq!(sys.normal_form(&(&x * &y)).unwrap(), sys.normal_form(&(&nx * &ny)).unwrap());
    }
}
