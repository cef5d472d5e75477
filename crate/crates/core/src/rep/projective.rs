//! Direct sums of indecomposable projectives and the maps between them.
//!
//! A map `⊕_c P(s_c) -> ⊕_d P(t_d)` is determined by where it sends the
//! generators `e_{s_c}`; the image of generator `c` in summand `d` is an
//! element `x[d][c]` of `e_{t_d} A e_{s_c}`, and the map acts on summand `c`
//! by left multiplication `p ↦ x[d][c]·p`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{solve, zero_vec, Matrix, Rational};

use super::{Algebra, ModuleMap, Representation};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProjSum {
    pub tops: Vec<usize>,
}

impl ProjSum {
    pub fn new(tops: Vec<usize>) -> Self {
        ProjSum { tops }
    }

    pub fn len(&self) -> usize {
        self.tops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tops.is_empty()
    }

    pub fn representation(&self, alg: &Algebra) -> Representation {
        let parts: Vec<Representation> = self
            .tops
            .iter()
            .map(|&t| Representation::projective(alg, t))
            .collect();
        Representation::direct_sum_all(alg, &parts).expect("same algebra")
    }

    /// Offset of summand `c` inside the space at vertex `v`.
    pub fn offset(&self, alg: &Algebra, c: usize, v: usize) -> usize {
        self.tops[..c].iter().map(|&t| alg.block_dim(t, v)).sum()
    }

    /// The generator `e_{t_c}` of summand `c`, as a vector at vertex `t_c`.
    pub fn generator(&self, alg: &Algebra, c: usize) -> Vec<Rational> {
        let t = self.tops[c];
        let dim: usize = self.tops.iter().map(|&u| alg.block_dim(u, t)).sum();
        let mut v = zero_vec(dim);
        v[self.offset(alg, c, t)] = Rational::one();
        v
    }

    pub fn concat(&self, other: &ProjSum) -> ProjSum {
        let mut tops = self.tops.clone();
        tops.extend_from_slice(&other.tops);
        ProjSum { tops }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProjMap {
    pub source: ProjSum,
    pub target: ProjSum,
    /// `entries[d][c]` in block coordinates of `e_{t_d} A e_{s_c}`.
    pub entries: Vec<Vec<Vec<Rational>>>,
}

impl ProjMap {
    pub fn zero(alg: &Algebra, source: &ProjSum, target: &ProjSum) -> Self {
        let entries = target
            .tops
            .iter()
            .map(|&t| source.tops.iter().map(|&s| zero_vec(alg.block_dim(t, s))).collect())
            .collect();
        ProjMap {
            source: source.clone(),
            target: target.clone(),
            entries,
        }
    }

    pub fn identity(alg: &Algebra, sum: &ProjSum) -> Self {
        let mut m = ProjMap::zero(alg, sum, sum);
        for (c, &t) in sum.tops.iter().enumerate() {
            m.entries[c][c] = alg.idempotent(t);
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().flatten().all(Zero::is_zero)
    }

    /// Module map between the underlying representations.
    pub fn to_module_map(&self, alg: &Algebra) -> ModuleMap {
        let src = self.source.representation(alg);
        let tgt = self.target.representation(alg);
        let n = alg.vertex_count();
        let comps = (0..n)
            .map(|v| {
                let mut m = Matrix::zeros(tgt.dim_at(v), src.dim_at(v));
                for (c, &s) in self.source.tops.iter().enumerate() {
                    let col0 = self.source.offset(alg, c, v);
                    for k in 0..alg.block_dim(s, v) {
                        let mut e = zero_vec(alg.block_dim(s, v));
                        e[k] = Rational::one();
                        for (d, &t) in self.target.tops.iter().enumerate() {
                            let x = &self.entries[d][c];
                            if x.iter().all(Zero::is_zero) {
                                continue;
                            }
                            let y = alg.multiply(t, s, v, x, &e);
                            let row0 = self.target.offset(alg, d, v);
                            for (r, val) in y.into_iter().enumerate() {
                                m[(row0 + r, col0 + k)] = val;
                            }
                        }
                    }
                }
                m
            })
            .collect();
        ModuleMap::new_unchecked(src, tgt, comps)
    }

    /// Reads off generator images of a module map between projective sums.
    pub fn from_module_map(alg: &Algebra, f: &ModuleMap, source: &ProjSum, target: &ProjSum) -> Self {
        let mut out = ProjMap::zero(alg, source, target);
        for (c, &s) in source.tops.iter().enumerate() {
            let image = f.component(s).mul_vec(&source.generator(alg, c));
            for (d, &t) in target.tops.iter().enumerate() {
                let off = target.offset(alg, d, s);
                out.entries[d][c] = image[off..off + alg.block_dim(t, s)].to_vec();
            }
        }
        out
    }

    /// `self ∘ first`.
    pub fn after(&self, alg: &Algebra, first: &ProjMap) -> ProjMap {
        let mut out = ProjMap::zero(alg, &first.source, &self.target);
        for (e, &u) in self.target.tops.iter().enumerate() {
            for (c, &s) in first.source.tops.iter().enumerate() {
                let mut acc = zero_vec(alg.block_dim(u, s));
                for (d, &t) in first.target.tops.iter().enumerate() {
                    let y = alg.multiply(u, t, s, &self.entries[e][d], &first.entries[d][c]);
                    for (a, b) in acc.iter_mut().zip(y) {
                        *a += b;
                    }
                }
                out.entries[e][c] = acc;
            }
        }
        out
    }

    pub fn add(&self, other: &ProjMap) -> ProjMap {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r1, r2)| {
                r1.iter()
                    .zip(r2)
                    .map(|(x, y)| x.iter().zip(y).map(|(a, b)| a + b).collect())
                    .collect()
            })
            .collect();
        ProjMap {
            source: self.source.clone(),
            target: self.target.clone(),
            entries,
        }
    }

    pub fn scale(&self, k: &Rational) -> ProjMap {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|x| x.iter().map(|a| a * k).collect()).collect())
            .collect();
        ProjMap {
            source: self.source.clone(),
            target: self.target.clone(),
            entries,
        }
    }
}

/// The map `⊕_c P(s_c) -> M` sending generator `c` to `images[c] ∈ M_{s_c}`.
pub fn map_from_generators(
    alg: &Algebra,
    source: &ProjSum,
    target: &Representation,
    images: &[Vec<Rational>],
) -> ModuleMap {
    let src = source.representation(alg);
    let n = alg.vertex_count();
    let mut comps: Vec<Matrix> = (0..n)
        .map(|v| Matrix::zeros(target.dim_at(v), src.dim_at(v)))
        .collect();
    for (c, &s) in source.tops.iter().enumerate() {
        for v in 0..n {
            let off = source.offset(alg, c, v);
            for (k, &b) in alg.block(s, v).iter().enumerate() {
                let y = target.path_matrix(&alg.basis()[b]).mul_vec(&images[c]);
                for (r, val) in y.into_iter().enumerate() {
                    comps[v][(r, off + k)] = val;
                }
            }
        }
    }
    ModuleMap::new_unchecked(src, target.clone(), comps)
}

/// Minimal projective cover `P -> M`, generated by a complement of `rad M`.
pub fn projective_cover(m: &Representation) -> (ProjSum, ModuleMap) {
    let alg = m.algebra().clone();
    let rad = m.radical();
    let mut tops = Vec::new();
    let mut images = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        for i in crate::linalg::complement_indices(r) {
            let mut e = zero_vec(m.dim_at(v));
            e[i] = Rational::one();
            tops.push(v);
            images.push(e);
        }
    }
    let sum = ProjSum::new(tops);
    let map = map_from_generators(&alg, &sum, m, &images);
    (sum, map)
}

/// `P1 --d--> P0 --cover--> M -> 0`, exact, built from minimal covers.
#[derive(Clone, Debug)]
pub struct ProjPresentation {
    pub p1: ProjSum,
    pub p0: ProjSum,
    pub d: ProjMap,
    pub cover: ModuleMap,
}

pub fn projective_presentation(m: &Representation) -> ProjPresentation {
    let alg = m.algebra().clone();
    let (p0, cover) = projective_cover(m);
    let (k, incl) = cover.kernel();
    let (p1, kcover) = projective_cover(&k);
    let composite = incl.after(&kcover).expect("composable");
    let d = ProjMap::from_module_map(&alg, &composite, &p1, &p0);
    ProjPresentation { p1, p0, d, cover }
}

/// Some `h: P -> Y` with `g ∘ h = f`, for `f: P -> N` out of a projective
/// sum and `g: Y -> N`; `None` when `f` does not factor through `g`.
pub fn lift_projective(
    alg: &Algebra,
    source: &ProjSum,
    f: &ModuleMap,
    g: &ModuleMap,
) -> Result<ModuleMap> {
    let mut images = Vec::with_capacity(source.len());
    for (c, &s) in source.tops.iter().enumerate() {
        let want = f.component(s).mul_vec(&source.generator(alg, c));
        let y = solve(g.component(s), &want)
            .ok_or_else(|| Error::Invalid("map does not factor through the given map".into()))?;
        images.push(y);
    }
    Ok(map_from_generators(alg, source, g.source(), &images))
}
