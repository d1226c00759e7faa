#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Deserialize;

use qpbw_core::presentations::PresentationSpec;
use qpbw_core::{FreeElement, Generator, LaurentElement, LaurentScalar};

pub fn qpbw(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qpbw"));
    cmd.args(args).env_remove("QPBW_STEP_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("spawn qpbw")
}

#[derive(Deserialize)]
pub struct ExitFixture {
    pub args: Vec<String>,
    #[serde(default)]
    pub env: std::collections::BTreeMap<String, String>,
    pub code: i32,
}

pub fn exit_fixtures() -> Vec<ExitFixture> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/exit_codes.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Runs every fixture and returns the mismatches.
pub fn exit_code_mismatches() -> Vec<String> {
    exit_fixtures()
        .iter()
        .filter_map(|f| {
            let args: Vec<&str> = f.args.iter().map(String::as_str).collect();
            let env: Vec<(&str, &str)> = f.env.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
            let code = qpbw(&args, &env).status.code();
            (code != Some(f.code)).then(|| format!("{:?}: expected {}, got {code:?}", f.args, f.code))
        })
        .collect()
}

fn random_scalar(rng: &mut impl Rng) -> LaurentScalar {
    let terms: Vec<(i32, BigRational)> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let num = rng.gen_range(-5i64..=5);
            let den = rng.gen_range(1i64..=4);
            (rng.gen_range(-3..=3), BigRational::new(BigInt::from(num), BigInt::from(den)))
        })
        .collect();
    LaurentScalar::from_terms(terms)
}

/// A random element in normal form.
pub fn random_normal_form(rng: &mut impl Rng, p: &PresentationSpec) -> LaurentElement {
    let gens = Generator::all(p.n());
    let mut e = LaurentElement::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let w: Vec<Generator> = (0..rng.gen_range(0..=3)).map(|_| *gens.choose(rng).unwrap()).collect();
        e = &e + &FreeElement::monomial(w, random_scalar(rng));
    }
    p.normal_form(&e).unwrap()
}
