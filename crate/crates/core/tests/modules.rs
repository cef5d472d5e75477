mod common;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use repalg::homological::{
    ext_from_resolution, hom_cohomology_dim, hom_euler_characteristic, padded_cover, projective_resolution,
    random_perfect_complex, resolve_with, ChainComplex,
};
use repalg::linalg::{rat, Matrix};
use repalg::rep::{
    hom_dim, is_isomorphic, parse_representation, representation_to_text, Representation,
};

const INSTANCES: u64 = 100;

fn instances() -> impl Iterator<Item = (u64, repalg::rep::Algebra, ChaCha8Rng)> {
    let algs = common::algebras();
    (0..INSTANCES).map(move |seed| {
        let alg = algs[seed as usize % algs.len()].clone();
        (seed, alg, ChaCha8Rng::seed_from_u64(seed))
    })
}

#[test]
fn ext_does_not_depend_on_the_resolution() {
    for (seed, alg, mut rng) in instances() {
        let m = common::random_module(&alg, &mut rng);
        let n = common::random_module(&alg, &mut rng);
        let minimal = projective_resolution(&m, 3);
        let mut pad_rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcd);
        let padded = resolve_with(&m, 3, |k, _| padded_cover(k, &mut pad_rng));
        for degree in 0..=2 {
            assert_eq!(
                ext_from_resolution(&minimal, &n, degree),
                ext_from_resolution(&padded, &n, degree),
                "seed {seed}, degree {degree}"
            );
        }
    }
}

#[test]
fn resolutions_are_exact() {
    for (seed, alg, mut rng) in instances() {
        let m = common::random_module(&alg, &mut rng);
        let res = projective_resolution(&m, 4);
        let c = res.complex.to_complex(&alg);
        // A truncated resolution keeps a kernel at its last term.
        let first = if res.truncated { c.lowest + 1 } else { c.lowest };
        for k in first..c.highest() {
            assert_eq!(c.cohomology_dim(k), 0, "seed {seed}, degree {k}");
        }
        if !res.truncated {
            assert_eq!(c.cohomology_dim(0), m.total_dim(), "seed {seed}");
        }
    }
}

#[test]
fn yoneda_lemma() {
    for (seed, alg, mut rng) in instances() {
        let m = common::random_module(&alg, &mut rng);
        for i in 0..alg.vertex_count() {
            let p = Representation::projective(&alg, i);
            assert_eq!(hom_dim(&p, &m).unwrap(), m.dim_at(i), "seed {seed}, vertex {i}");
        }
    }
}

#[test]
fn duality_reverses_hom() {
    for (seed, alg, mut rng) in instances() {
        let op = Arc::new(alg.opposite().unwrap());
        let m = common::random_module(&alg, &mut rng);
        let n = common::random_module(&alg, &mut rng);
        let (dm, dn) = (m.dual(&op).unwrap(), n.dual(&op).unwrap());
        assert_eq!(hom_dim(&m, &n).unwrap(), hom_dim(&dn, &dm).unwrap(), "seed {seed}");
        assert_eq!(dm.dual(&alg).unwrap().dims(), m.dims());
    }
}

#[test]
fn projectives_and_injectives_are_dual() {
    for alg in common::algebras() {
        let op = Arc::new(alg.opposite().unwrap());
        for i in 0..alg.vertex_count() {
            let dp = Representation::projective(&op, i).dual(&alg).unwrap();
            let inj = Representation::injective(&alg, i);
            assert!(is_isomorphic(&dp, &inj, i as u64).unwrap().is_isomorphic());
        }
    }
}

#[test]
fn euler_characteristic_of_hom_complexes() {
    for (seed, alg, mut rng) in instances() {
        let vertices: Vec<usize> = (0..alg.vertex_count()).collect();
        let x = random_perfect_complex(&alg, &vertices, &mut rng);
        let m = common::random_module(&alg, &mut rng);
        let z = ChainComplex::concentrated(&m, rng.gen_range(-1..=1));
        let lo = z.lowest - x.highest() - 1;
        let hi = z.highest() - x.lowest + 1;
        let alternating: i64 = (lo..=hi)
            .map(|n| {
                let d = hom_cohomology_dim(&x, &z, n) as i64;
                if n.rem_euclid(2) == 0 {
                    d
                } else {
                    -d
                }
            })
            .sum();
        assert_eq!(alternating, hom_euler_characteristic(&x, &z), "seed {seed}");
    }
}

#[test]
fn representation_text_round_trip() {
    for (seed, alg, mut rng) in instances() {
        let m = common::random_module(&alg, &mut rng);
        let back = parse_representation(&alg, &representation_to_text(&m)).unwrap();
        assert_eq!(back.dims(), m.dims(), "seed {seed}");
        assert_eq!(back.maps(), m.maps(), "seed {seed}");
    }
}

#[test]
fn base_change_gives_isomorphic_modules() {
    for (seed, alg, mut rng) in instances().take(40) {
        let m = common::random_module(&alg, &mut rng);
        // Random unitriangular change of basis at every vertex.
        let g: Vec<Matrix> = m
            .dims()
            .iter()
            .map(|&d| {
                let mut t = Matrix::identity(d);
                for r in 0..d {
                    for c in r + 1..d {
                        t[(r, c)] = rat(rng.gen_range(-3..=3));
                    }
                }
                t
            })
            .collect();
        let q = alg.quiver();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| &(&g[arr.target] * m.arrow_map(a)) * &g[arr.source].inverse().unwrap())
            .collect();
        let m2 = Representation::new(alg.clone(), m.dims().to_vec(), maps).unwrap();
        let res = is_isomorphic(&m, &m2, seed).unwrap();
        assert!(res.witness().unwrap().is_isomorphism(), "seed {seed}");
    }
}
