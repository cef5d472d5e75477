//! Randomised isomorphism testing with an exhaustive fallback.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};

use super::{combine, hom_space, same_algebra, ModuleMap, Representation};

const RANDOM_TRIES: usize = 8;
const COEFF_BOUND: i64 = 1000;
const FALLBACK_MAX_HOM: usize = 3;

#[derive(Clone, Debug)]
pub enum Isomorphism {
    Isomorphic(ModuleMap),
    NotIsomorphic(String),
}

impl Isomorphism {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, Isomorphism::Isomorphic(_))
    }

    pub fn witness(&self) -> Option<&ModuleMap> {
        match self {
            Isomorphism::Isomorphic(f) => Some(f),
            Isomorphism::NotIsomorphic(_) => None,
        }
    }
}

/// Decides `M ≅ N`.
///
/// Invertible intertwiners form a Zariski-open subset of `Hom(M, N)`, so a
/// random combination of a Hom basis is invertible with high probability
/// when one exists. After [`RANDOM_TRIES`] misses, Hom spaces of dimension
/// at most three are searched exhaustively on a grid large enough that a
/// nonzero determinant polynomial cannot vanish on all of it; larger ones
/// give [`Error::Undetermined`].
pub fn is_isomorphic(m: &Representation, n: &Representation, seed: u64) -> Result<Isomorphism> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(Isomorphism::NotIsomorphic(format!(
            "dimension vectors differ: {:?} vs {:?}",
            m.dims(),
            n.dims()
        )));
    }
    if m.is_zero() {
        return Ok(Isomorphism::Isomorphic(m.identity()));
    }
    if m.loewy_layers() != n.loewy_layers() {
        return Ok(Isomorphism::NotIsomorphic("radical layers differ".into()));
    }
    if m.socle_layers() != n.socle_layers() {
        return Ok(Isomorphism::NotIsomorphic("socle layers differ".into()));
    }
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok(Isomorphism::NotIsomorphic("Hom(M, N) = 0".into()));
    }
    let end_m = hom_space(m, m)?.len();
    let end_n = hom_space(n, n)?.len();
    if end_m != basis.len() || end_n != basis.len() {
        return Ok(Isomorphism::NotIsomorphic(format!(
            "dim Hom(M,N) = {}, dim End(M) = {end_m}, dim End(N) = {end_n}",
            basis.len()
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIES {
        let coeffs: Vec<Rational> = (0..basis.len())
            .map(|_| rat(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)))
            .collect();
        let f = combine(&basis, &coeffs).expect("nonempty basis");
        if f.is_isomorphism() {
            return Ok(Isomorphism::Isomorphic(f));
        }
    }

    if basis.len() > FALLBACK_MAX_HOM {
        return Err(Error::Undetermined(format!(
            "no invertible map among {RANDOM_TRIES} random elements of a {}-dimensional Hom space",
            basis.len()
        )));
    }
    // det(Σ x_k f_k) has degree at most dim M in each variable.
    let points = m.total_dim() as i64 + 1;
    let h = basis.len();
    let mut index = vec![0i64; h];
    loop {
        let coeffs: Vec<Rational> = index.iter().map(|&x| rat(x)).collect();
        let f = combine(&basis, &coeffs).expect("nonempty basis");
        if f.is_isomorphism() {
            return Ok(Isomorphism::Isomorphic(f));
        }
        let mut k = 0;
        while k < h {
            index[k] += 1;
            if index[k] < points {
                break;
            }
            index[k] = 0;
            k += 1;
        }
        if k == h {
            return Ok(Isomorphism::NotIsomorphic(
                "every element of Hom(M, N) is singular".into(),
            ));
        }
    }
}
