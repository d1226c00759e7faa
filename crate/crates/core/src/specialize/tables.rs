use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{classical_limit, poisson_bracket, poisson_bracket_classical, CommutativeElement, SpecializeError};
use crate::freealg::{FreeElement, Generator, GeneratorKind};
use crate::presentations::{Flavor, PresentationSpec};
use crate::report::{Check, Report};
use crate::rewrite::Lattice;
use crate::scalars::LaurentScalar;

const JACOBI_SEED: u64 = 0x5eed_2017;
const RANDOM_TRIPLES: usize = 100;

/// Entry (p, q) of B (upper) or Γ (lower) as a commutative element, zero
/// outside the triangle.
fn entry(lattice: Lattice, upper: bool, p: usize, q: usize) -> CommutativeElement {
    match (upper, p <= q, p >= q) {
        (true, true, _) => CommutativeElement::generator(lattice, Generator::beta(p, q)),
        (false, _, true) => CommutativeElement::generator(lattice, Generator::gamma(p, q)),
        _ => CommutativeElement::zero(lattice),
    }
}

/// {x̄_ij, x̄_hk} inside one triangular matrix: row and column pairs give
/// the product, crossing pairs 2 x̄_ik x̄_hj, nested pairs 0.
fn same_matrix(lattice: Lattice, upper: bool, a: (usize, usize), b: (usize, usize)) -> CommutativeElement {
    let x = |p, q| entry(lattice, upper, p, q);
    let ((i, j), (h, k)) = (a, b);
    if a == b {
        return CommutativeElement::zero(lattice);
    }
    if i > h || (i == h && j > k) {
        return -&same_matrix(lattice, upper, b, a);
    }
    if i == h || j == k {
        return &x(i, j) * &x(h, k);
    }
    if j > k {
        return CommutativeElement::zero(lattice);
    }
    (&x(i, k) * &x(h, j)).scale_int(2)
}

/// {β̄_js, γ̄_ik} = (δ_ij − δ_ks) β̄_js γ̄_ik + 2[i>j] γ̄_jk β̄_is
///   − 2[s>k] β̄_jk γ̄_is.
fn mixed(lattice: Lattice, (j, s): (usize, usize), (i, k): (usize, usize)) -> CommutativeElement {
    let b = |p, q| entry(lattice, true, p, q);
    let g = |p, q| entry(lattice, false, p, q);
    let d = i32::from(i == j) - i32::from(k == s);
    let mut out = (&b(j, s) * &g(i, k)).scale_int(d.into());
    if i > j {
        out = &out + &(&g(j, k) * &b(i, s)).scale_int(2);
    }
    if s > k {
        out = &out - &(&b(j, k) * &g(i, s)).scale_int(2);
    }
    out
}

/// The closed-form value of {x̄, ȳ} on generators.
pub fn closed_form_bracket(lattice: Lattice, x: Generator, y: Generator) -> CommutativeElement {
    let pos = |g: Generator| (g.row(), g.col());
    match (x.kind(), y.kind()) {
        (GeneratorKind::Beta, GeneratorKind::Beta) => same_matrix(lattice, true, pos(x), pos(y)),
        (GeneratorKind::Gamma, GeneratorKind::Gamma) => same_matrix(lattice, false, pos(x), pos(y)),
        (GeneratorKind::Beta, GeneratorKind::Gamma) => mixed(lattice, pos(x), pos(y)),
        (GeneratorKind::Gamma, GeneratorKind::Beta) => -&mixed(lattice, pos(y), pos(x)),
    }
}

fn check_eq(
    name: String,
    tag: &str,
    got: Result<CommutativeElement, SpecializeError>,
    want: impl FnOnce() -> Result<CommutativeElement, SpecializeError>,
) -> Check {
    match (got, want()) {
        (Ok(g), Ok(w)) if g == w => Check::pass(name, tag),
        (Ok(g), Ok(w)) => Check::fail(name, tag, format!("got {g}, expected {w}")),
        (Err(e), _) | (_, Err(e)) => Check::fail(name, tag, format!("error: {e}")),
    }
}

fn random_element(rng: &mut ChaCha8Rng, gens: &[Generator]) -> FreeElement<Generator, LaurentScalar> {
    let mut e = FreeElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let len = rng.gen_range(1..=2);
        let w: Vec<Generator> = (0..len).map(|_| *gens.choose(rng).unwrap()).collect();
        let c = rng.gen_range(-2i64..=2);
        if c != 0 {
            e.add_term(w, LaurentScalar::from_int(c));
        }
    }
    e
}

/// Compares every generator bracket with the closed forms, and spot-checks
/// antisymmetry, Jacobi and Leibniz on seeded random triples.
pub fn verify_poisson_tables(n: usize, flavor: Flavor) -> Result<Report, SpecializeError> {
    let p = PresentationSpec::cached(n, flavor)?;
    let lattice = p.system().lattice();
    let gens = Generator::all(n);
    let letter = |g: Generator| FreeElement::<Generator, LaurentScalar>::letter(g);

    let pairs: Vec<(Generator, Generator)> = gens
        .iter()
        .enumerate()
        .flat_map(|(a, &x)| gens[a + 1..].iter().map(move |&y| (x, y)))
        .collect();
    let mut report: Report = pairs
        .par_iter()
        .flat_map_iter(|&(x, y)| {
            let xy = poisson_bracket(&p, &letter(x), &letter(y));
            let yx = poisson_bracket(&p, &letter(y), &letter(x));
            let anti = match (&xy, &yx) {
                (Ok(a), Ok(b)) => Check::from_bool(format!("{{{x},{y}}} + {{{y},{x}}}"), "poisson-antisymmetry", (a + b).is_zero(), || (a + b).to_string()),
                (Err(e), _) | (_, Err(e)) => Check::fail(format!("{{{x},{y}}}"), "poisson-antisymmetry", e.to_string()),
            };
            let table = check_eq(format!("{{{x},{y}}}"), "poisson-table", xy, || Ok(closed_form_bracket(lattice, x, y)));
            [table, anti]
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(JACOBI_SEED ^ (n as u64) << 8 ^ flavor as u64);
    let triples: Vec<[FreeElement<Generator, LaurentScalar>; 3]> = (0..RANDOM_TRIPLES)
        .map(|_| {
            [
                random_element(&mut rng, &gens),
                random_element(&mut rng, &gens),
                random_element(&mut rng, &gens),
            ]
        })
        .collect();
    let checks: Vec<Check> = triples
        .par_iter()
        .enumerate()
        .flat_map_iter(|(idx, [x, y, z])| {
            let br = |a: &CommutativeElement, b: &CommutativeElement| poisson_bracket_classical(&p, a, b);
            let jacobi = (|| {
                let (xb, yb, zb) = (classical_limit(&p, x)?, classical_limit(&p, y)?, classical_limit(&p, z)?);
                let t1 = br(&xb, &br(&yb, &zb)?)?;
                let t2 = br(&yb, &br(&zb, &xb)?)?;
                let t3 = br(&zb, &br(&xb, &yb)?)?;
                Ok(&(&t1 + &t2) + &t3)
            })();
            let leibniz = (|| {
                let lhs = poisson_bracket(&p, x, &(y * z))?;
                let yb = classical_limit(&p, y)?;
                let zb = classical_limit(&p, z)?;
                let rhs = &(&poisson_bracket(&p, x, y)? * &zb) + &(&yb * &poisson_bracket(&p, x, z)?);
                Ok(&lhs - &rhs)
            })();
            [
                check_eq(format!("jacobi #{idx}"), "poisson-jacobi", jacobi, || Ok(CommutativeElement::zero(lattice))),
                check_eq(format!("leibniz #{idx}"), "poisson-leibniz", leibniz, || Ok(CommutativeElement::zero(lattice))),
            ]
        })
        .collect();
    report.extend(checks.into_iter().collect());
    Ok(report)
}
