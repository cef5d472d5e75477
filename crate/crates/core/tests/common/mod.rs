#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use repalg::linalg::{rat, Matrix};
use repalg::quiver::{sl2_o0, truncate, Family};
use repalg::rep::{Algebra, ProjSum, Representation};

/// Small algebras the randomised suites run over.
pub fn algebras() -> Vec<Algebra> {
    vec![
        Arc::new(sl2_o0()),
        Arc::new(truncate(Family::Typical, 1).unwrap().algebra),
        Arc::new(truncate(Family::HalfIntegerAtypical, 3).unwrap().algebra),
        Arc::new(truncate(Family::Principal, 3).unwrap().algebra),
    ]
}

/// A quotient of a sum of one or two projectives by the submodule generated
/// by a random element.
pub fn random_module(alg: &Algebra, rng: &mut ChaCha8Rng) -> Representation {
    let n = alg.vertex_count();
    let count = rng.gen_range(1..=2);
    let sum = ProjSum::new((0..count).map(|_| rng.gen_range(0..n)).collect());
    let p = sum.representation(alg);
    let v = rng.gen_range(0..n);
    let mut gens: Vec<Matrix> = (0..n).map(|u| Matrix::zeros(p.dim_at(u), 0)).collect();
    if p.dim_at(v) > 0 && rng.gen_bool(0.8) {
        let col: Vec<_> = (0..p.dim_at(v)).map(|_| rat(rng.gen_range(-2..=2))).collect();
        gens[v] = Matrix::from_columns(p.dim_at(v), &[col]);
    }
    let sub = p.generated_submodule(&gens);
    p.quotient(&sub).unwrap().0
}
