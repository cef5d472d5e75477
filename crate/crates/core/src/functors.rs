//! The Nakayama functor, symmetrizing forms and partial coapproximation.
//!
//! Both functors are right exact and are evaluated through a minimal
//! projective presentation `P1 -> P0 -> M -> 0`: on projectives `N` sends
//! `P(i)` to `I(i)` and `C` sends a projective to the trace of the chosen
//! projective-injectives in it; on `M` the value is the cokernel of the image
//! of `P1 -> P0`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{rat, zero_vec, Matrix, Rational};
use crate::rep::{
    is_isomorphic, lift_projective, projective_presentation, Algebra, Isomorphism, ModuleMap,
    ProjMap, ProjPresentation, ProjSum, Representation,
};

/// `⊕ I(t)` over the tops of a projective sum.
pub fn injective_sum(alg: &Algebra, sum: &ProjSum) -> Representation {
    let parts: Vec<Representation> = sum
        .tops
        .iter()
        .map(|&t| Representation::injective(alg, t))
        .collect();
    Representation::direct_sum_all(alg, &parts).expect("same algebra")
}

/// Offset of summand `c` of `⊕ I(t_c)` at vertex `v`.
fn injective_offset(alg: &Algebra, sum: &ProjSum, c: usize, v: usize) -> usize {
    sum.tops[..c].iter().map(|&t| alg.block_dim(v, t)).sum()
}

/// `N(f)` for a map of projective sums: `x ∈ e_t A e_s` becomes
/// `I(s) -> I(t)`, `φ ↦ φ(- · x)`.
pub fn nakayama_projmap(alg: &Algebra, f: &ProjMap) -> ModuleMap {
    let src = injective_sum(alg, &f.source);
    let tgt = injective_sum(alg, &f.target);
    let comps = (0..alg.vertex_count())
        .map(|v| {
            let mut m = Matrix::zeros(tgt.dim_at(v), src.dim_at(v));
            for (d, &t) in f.target.tops.iter().enumerate() {
                let row0 = injective_offset(alg, &f.target, d, v);
                for r in 0..alg.block_dim(v, t) {
                    let mut e = zero_vec(alg.block_dim(v, t));
                    e[r] = Rational::one();
                    for (c, &s) in f.source.tops.iter().enumerate() {
                        let x = &f.entries[d][c];
                        if x.iter().all(Zero::is_zero) {
                            continue;
                        }
                        let qx = alg.multiply(v, t, s, &e, x);
                        let col0 = injective_offset(alg, &f.source, c, v);
                        for (k, val) in qx.into_iter().enumerate() {
                            m[(row0 + r, col0 + k)] = val;
                        }
                    }
                }
            }
            m
        })
        .collect();
    ModuleMap::new(src, tgt, comps).expect("Nakayama image of a module map is a module map")
}

/// A functor value together with the data used to compute it.
#[derive(Clone, Debug)]
pub struct FunctorValue {
    pub module: Representation,
    pub presentation: ProjPresentation,
    /// Inclusion of `F(P0)` into the representation it is computed inside
    /// (identity for the Nakayama functor, the trace inclusion for `C`).
    pub ambient: ModuleMap,
    /// Surjection `F(P0) -> F(M)`.
    pub projection: ModuleMap,
}

pub fn nakayama(m: &Representation) -> FunctorValue {
    let alg = m.algebra().clone();
    let pres = projective_presentation(m);
    let nd = nakayama_projmap(&alg, &pres.d);
    let (module, projection) = nd.cokernel();
    let ambient = nd.target().identity();
    FunctorValue {
        module,
        presentation: pres,
        ambient,
        projection,
    }
}

/// Lift of `f: M -> M'` to `P0 -> P0'` along the covers.
fn lift_to_covers(alg: &Algebra, f: &ModuleMap, src: &FunctorValue, tgt: &FunctorValue) -> Result<ProjMap> {
    let along = f.after(&src.presentation.cover)?;
    let lifted = lift_projective(alg, &src.presentation.p0, &along, &tgt.presentation.cover)?;
    Ok(ProjMap::from_module_map(
        alg,
        &lifted,
        &src.presentation.p0,
        &tgt.presentation.p0,
    ))
}

/// `N(f): N(M) -> N(M')`, given the values at source and target.
pub fn nakayama_map(f: &ModuleMap, src: &FunctorValue, tgt: &FunctorValue) -> Result<ModuleMap> {
    let alg = f.source().algebra().clone();
    let f0 = lift_to_covers(&alg, f, src, tgt)?;
    nakayama_projmap(&alg, &f0).induced_on_quotients(&src.projection, &tgt.projection)
}

/// Vertices whose indecomposable projective is also injective.
pub fn projective_injective_vertices(alg: &Algebra, seed: u64) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..alg.vertex_count() {
        if injective_partner(alg, i, seed)?.is_some() {
            out.push(i);
        }
    }
    Ok(out)
}

/// `Some((j, witness))` when `P(i) ≅ I(j)`. An indecomposable injective has
/// simple socle, which pins down the only candidate `j`.
fn injective_partner(alg: &Algebra, i: usize, seed: u64) -> Result<Option<(usize, ModuleMap)>> {
    let p = Representation::projective(alg, i);
    let soc: Vec<usize> = p.socle().iter().map(Matrix::cols).collect();
    if soc.iter().sum::<usize>() != 1 {
        return Ok(None);
    }
    let j = soc.iter().position(|&d| d == 1).expect("one-dimensional socle");
    match is_isomorphic(&p, &Representation::injective(alg, j), seed)? {
        Isomorphism::Isomorphic(w) => Ok(Some((j, w))),
        Isomorphism::NotIsomorphic(_) => Ok(None),
    }
}

/// The permutation `i ↦ j` with `P(i) ≅ I(j)`; errors unless self-injective.
pub fn nakayama_permutation(alg: &Algebra, seed: u64) -> Result<Vec<usize>> {
    (0..alg.vertex_count())
        .map(|i| {
            injective_partner(alg, i, seed)?
                .map(|(j, _)| j)
                .ok_or_else(|| Error::NotSelfInjective(alg.quiver().label(i).to_string()))
        })
        .collect()
}

/// A linear functional on `A`, by its values on the path basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BimoduleForm {
    pub values: Vec<Rational>,
}

impl BimoduleForm {
    pub fn apply(&self, x: &[(usize, Rational)]) -> Rational {
        x.iter().map(|(b, c)| c * &self.values[*b]).sum()
    }

    /// `f(b_i b_j) = f(b_j b_i)` on every pair of basis elements.
    pub fn is_trace(&self, alg: &Algebra) -> bool {
        let n = alg.dim();
        (0..n).all(|i| {
            (0..n).all(|j| self.apply(alg.basis_product(i, j)) == self.apply(alg.basis_product(j, i)))
        })
    }

    /// Gram matrix `f(b_i b_j)` over the whole basis.
    pub fn gram(&self, alg: &Algebra) -> Matrix {
        let n = alg.dim();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = self.apply(alg.basis_product(i, j));
            }
        }
        g
    }

    pub fn is_nondegenerate(&self, alg: &Algebra) -> bool {
        pairing_blocks_invertible(alg, &self.values)
    }
}

/// The Gram matrix is block-permutation shaped: `e_s A e_t` only pairs with
/// `e_t A e_s`. Nondegeneracy is invertibility of each such block.
fn pairing_blocks_invertible(alg: &Algebra, values: &[Rational]) -> bool {
    let n = alg.vertex_count();
    for s in 0..n {
        for t in s..n {
            let (left, right) = (alg.block(s, t), alg.block(t, s));
            if left.len() != right.len() {
                return false;
            }
            let mut m = Matrix::zeros(left.len(), right.len());
            for (r, &i) in left.iter().enumerate() {
                for (c, &j) in right.iter().enumerate() {
                    m[(r, c)] = alg
                        .basis_product(i, j)
                        .iter()
                        .map(|(b, x)| x * &values[*b])
                        .sum();
                }
            }
            if !m.is_invertible() {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug)]
pub enum Symmetry {
    Symmetric(BimoduleForm),
    NotSymmetric(String),
}

impl Symmetry {
    pub fn holds(&self) -> bool {
        matches!(self, Symmetry::Symmetric(_))
    }
}

/// Basis of the trace forms `f(ab) = f(ba)`; each is given on the full basis.
pub fn trace_forms(alg: &Algebra) -> Vec<Vec<Rational>> {
    let dim = alg.dim();
    // f vanishes on e_s A e_t for s != t, so only loop-basis values are unknown.
    let loops: Vec<usize> = (0..dim)
        .filter(|&b| alg.basis()[b].source() == alg.basis()[b].target())
        .collect();
    let mut var = vec![None; dim];
    for (k, &b) in loops.iter().enumerate() {
        var[b] = Some(k);
    }
    let mut rows = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let mut row = zero_vec(loops.len());
            for (b, c) in alg.basis_product(i, j) {
                if let Some(k) = var[*b] {
                    row[k] += c;
                }
            }
            for (b, c) in alg.basis_product(j, i) {
                if let Some(k) = var[*b] {
                    row[k] -= c;
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..loops.len())
            .map(|k| {
                let mut e = zero_vec(loops.len());
                e[k] = Rational::one();
                e
            })
            .collect()
    } else {
        crate::linalg::kernel_basis(&Matrix::from_rows(rows))
    };
    kernel
        .into_iter()
        .map(|x| {
            let mut f = zero_vec(dim);
            for (k, &b) in loops.iter().enumerate() {
                f[b] = x[k].clone();
            }
            f
        })
        .collect()
}

const FORM_TRIES: usize = 8;
const FORM_FALLBACK_MAX: usize = 3;

/// Searches for a nondegenerate trace form (a symmetrizing form).
pub fn find_symmetrizing_form(alg: &Algebra, seed: u64) -> Result<Symmetry> {
    let cartan = alg.cartan_matrix();
    let n = alg.vertex_count();
    if (0..n).any(|i| (0..n).any(|j| cartan[i][j] != cartan[j][i])) {
        return Ok(Symmetry::NotSymmetric("Cartan matrix is not symmetric".into()));
    }
    let forms = trace_forms(alg);
    if forms.is_empty() {
        return Ok(Symmetry::NotSymmetric("no nonzero trace form".into()));
    }
    let combine = |coeffs: &[Rational]| -> Vec<Rational> {
        let mut f = zero_vec(alg.dim());
        for (g, c) in forms.iter().zip(coeffs) {
            for (a, b) in f.iter_mut().zip(g) {
                *a += c * b;
            }
        }
        f
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..FORM_TRIES {
        let coeffs: Vec<Rational> = (0..forms.len()).map(|_| rat(rng.gen_range(-1000..=1000))).collect();
        let values = combine(&coeffs);
        if pairing_blocks_invertible(alg, &values) {
            return Ok(Symmetry::Symmetric(BimoduleForm { values }));
        }
    }
    if forms.len() > FORM_FALLBACK_MAX {
        return Err(Error::Undetermined(format!(
            "no nondegenerate form among {FORM_TRIES} random trace forms ({}-dimensional space)",
            forms.len()
        )));
    }
    // The Gram determinant has degree at most dim A in each coefficient.
    let points = alg.dim() as i64 + 1;
    let h = forms.len();
    let mut index = vec![0i64; h];
    loop {
        let coeffs: Vec<Rational> = index.iter().map(|&x| rat(x)).collect();
        let values = combine(&coeffs);
        if pairing_blocks_invertible(alg, &values) {
            return Ok(Symmetry::Symmetric(BimoduleForm { values }));
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
            return Ok(Symmetry::NotSymmetric("every trace form is degenerate".into()));
        }
    }
}

pub fn is_symmetric(alg: &Algebra, seed: u64) -> Result<bool> {
    Ok(find_symmetrizing_form(alg, seed)?.holds())
}

/// Partial coapproximation with respect to the projectives at `projinj`.
pub fn coapprox(m: &Representation, projinj: &[usize]) -> Result<FunctorValue> {
    let alg = m.algebra().clone();
    let pres = projective_presentation(m);
    let gens: Vec<Representation> = projinj
        .iter()
        .map(|&v| Representation::projective(&alg, v))
        .collect();
    let p0 = pres.p0.representation(&alg);
    let p1 = pres.p1.representation(&alg);
    let (_, t0) = p0.subrepresentation(&p0.trace(&gens)?)?;
    let (_, t1) = p1.subrepresentation(&p1.trace(&gens)?)?;
    let d = pres.d.to_module_map(&alg);
    let restricted = d.restrict(&t1, &t0)?;
    let (module, projection) = restricted.cokernel();
    Ok(FunctorValue {
        module,
        presentation: pres,
        ambient: t0,
        projection,
    })
}

/// `C(f): C(M) -> C(M')` for values computed with the same `projinj`.
pub fn coapprox_map(f: &ModuleMap, src: &FunctorValue, tgt: &FunctorValue) -> Result<ModuleMap> {
    let alg = f.source().algebra().clone();
    let f0 = lift_to_covers(&alg, f, src, tgt)?.to_module_map(&alg);
    f0.restrict(&src.ambient, &tgt.ambient)?
        .induced_on_quotients(&src.projection, &tgt.projection)
}

#[derive(Clone, Debug)]
pub struct CSquaredVerdict {
    pub vertex: usize,
    pub c_squared_dims: Vec<usize>,
    pub nakayama_dims: Vec<usize>,
    pub witness: Option<ModuleMap>,
    pub reason: Option<String>,
}

impl CSquaredVerdict {
    pub fn holds(&self) -> bool {
        self.witness.is_some()
    }
}

/// Compares `C(C(P(i)))` with `N(P(i))` at every vertex.
pub fn verify_c_squared_is_nakayama(
    alg: &Algebra,
    projinj: &[usize],
    seed: u64,
) -> Result<Vec<CSquaredVerdict>> {
    let mut out = Vec::new();
    for i in 0..alg.vertex_count() {
        let p = Representation::projective(alg, i);
        let c1 = coapprox(&p, projinj)?.module;
        let c2 = coapprox(&c1, projinj)?.module;
        let np = nakayama(&p).module;
        let iso = is_isomorphic(&c2, &np, seed)?;
        let (witness, reason) = match iso {
            Isomorphism::Isomorphic(w) => (Some(w), None),
            Isomorphism::NotIsomorphic(r) => (None, Some(r)),
        };
        out.push(CSquaredVerdict {
            vertex: i,
            c_squared_dims: c2.dims().to_vec(),
            nakayama_dims: np.dims().to_vec(),
            witness,
            reason,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::{a2, sl2_o0, truncate, Family};

    fn dual_numbers() -> Algebra {
        Arc::new(truncate(Family::Typical, 1).unwrap().algebra)
    }

    #[test]
    fn nakayama_on_projectives_gives_injectives() {
        let alg = Arc::new(sl2_o0());
        for i in 0..2 {
            let p = Representation::projective(&alg, i);
            let n = nakayama(&p).module;
            let inj = Representation::injective(&alg, i);
            assert!(is_isomorphic(&n, &inj, 5).unwrap().is_isomorphic());
        }
    }

    #[test]
    fn nakayama_of_zero_is_zero() {
        let alg = dual_numbers();
        assert!(nakayama(&Representation::zero(&alg)).module.is_zero());
    }

    #[test]
    fn dual_numbers_form() {
        let alg = dual_numbers();
        match find_symmetrizing_form(&alg, 0).unwrap() {
            Symmetry::Symmetric(f) => {
                assert!(!f.values[1].is_zero());
                assert!(f.is_trace(&alg));
                assert!(f.gram(&alg).is_invertible());
            }
            Symmetry::NotSymmetric(r) => panic!("{r}"),
        }
        let socle_form = BimoduleForm {
            values: vec![rat(0), rat(1)],
        };
        assert!(socle_form.is_trace(&alg) && socle_form.is_nondegenerate(&alg));
        let unit_form = BimoduleForm {
            values: vec![rat(1), rat(0)],
        };
        assert!(!unit_form.is_nondegenerate(&alg));
    }

    #[test]
    fn ground_field_is_symmetric() {
        let alg = Arc::new(truncate(Family::StronglyTypical, 1).unwrap().algebra);
        assert!(is_symmetric(&alg, 0).unwrap());
    }

    #[test]
    fn a2_is_not_symmetric() {
        let alg = Arc::new(a2());
        assert!(!is_symmetric(&alg, 0).unwrap());
        assert!(matches!(nakayama_permutation(&alg, 0), Err(Error::NotSelfInjective(_))));
    }

    #[test]
    fn sl2_coapproximation() {
        let alg = Arc::new(sl2_o0());
        let pi = projective_injective_vertices(&alg, 0).unwrap();
        assert_eq!(pi, vec![1]);
        let p1 = Representation::projective(&alg, 0);
        let c = coapprox(&p1, &pi).unwrap().module;
        assert_eq!(c.dims(), &[0, 1]);
        let p2 = Representation::projective(&alg, 1);
        assert!(is_isomorphic(&coapprox(&p2, &pi).unwrap().module, &p2, 0).unwrap().is_isomorphic());
        assert!(coapprox(&p1, &[]).unwrap().module.is_zero());
    }

    #[test]
    fn sl2_c_squared() {
        let alg = Arc::new(sl2_o0());
        let verdicts = verify_c_squared_is_nakayama(&alg, &[1], 3).unwrap();
        assert!(verdicts.iter().all(CSquaredVerdict::holds));
        assert_eq!(verdicts[0].nakayama_dims, vec![1, 1]);
    }

    #[test]
    fn empty_projinj_breaks_c_squared() {
        let alg = dual_numbers();
        let verdicts = verify_c_squared_is_nakayama(&alg, &[], 0).unwrap();
        assert!(!verdicts[0].holds());
    }

    #[test]
    fn nakayama_preserves_composition() {
        let alg = Arc::new(sl2_o0());
        let p1 = Representation::projective(&alg, 0);
        let p2 = Representation::projective(&alg, 1);
        let f = crate::rep::hom_space(&p1, &p2).unwrap()[0].clone();
        let g = crate::rep::hom_space(&p2, &p2).unwrap();
        let (v1, v2) = (nakayama(&p1), nakayama(&p2));
        for g in g {
            let gf = g.after(&f).unwrap();
            let lhs = nakayama_map(&gf, &v1, &v2).unwrap();
            let rhs = nakayama_map(&g, &v2, &v2)
                .unwrap()
                .after(&nakayama_map(&f, &v1, &v2).unwrap())
                .unwrap();
            assert_eq!(lhs.components(), rhs.components());
        }
        let id = nakayama_map(&p2.identity(), &v2, &v2).unwrap();
        assert!(id.components().iter().enumerate().all(|(v, m)| *m == Matrix::identity(v2.module.dim_at(v))));
    }
}
