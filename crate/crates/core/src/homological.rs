//! Complexes, projective resolutions, Ext and the derived Nakayama functor.
//!
//! Indexing is cohomological: `d^n: C^n -> C^{n+1}`. A projective
//! resolution of `M` sits in degrees `-k..=0`. The Hom complex uses
//! `Hom^n(X, Z) = Π_p Hom(X^p, Z^{p+n})` with differential
//! `D(f) = d_Z ∘ f - (-1)^n f ∘ d_X`. For a perfect source `X` every
//! `Hom(X^p, Z^q)` is computed by Yoneda as `⊕_c Z^q_{s_c}`, so maps are
//! stored as images of generators.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::functors::nakayama_projmap;
use crate::linalg::{kernel_basis, rat, Matrix, Rational};
use crate::rep::{projective_cover, Algebra, ModuleMap, ProjMap, ProjSum, Representation};

/// A bounded complex of representations.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub lowest: i64,
    pub terms: Vec<Representation>,
    /// `diffs[k]: terms[k] -> terms[k + 1]`.
    pub diffs: Vec<ModuleMap>,
}

impl ChainComplex {
    pub fn new(lowest: i64, terms: Vec<Representation>, diffs: Vec<ModuleMap>) -> Result<Self> {
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(Error::ShapeMismatch("need one differential between consecutive terms".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.source().dims() != terms[k].dims() || d.target().dims() != terms[k + 1].dims() {
                return Err(Error::ShapeMismatch(format!("differential at degree {}", lowest + k as i64)));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k].after(&diffs[k - 1])?.is_zero() {
                return Err(Error::NotAComplex(lowest + k as i64 - 1));
            }
        }
        Ok(ChainComplex { lowest, terms, diffs })
    }

    pub fn concentrated(m: &Representation, degree: i64) -> Self {
        ChainComplex {
            lowest: degree,
            terms: vec![m.clone()],
            diffs: Vec::new(),
        }
    }

    pub fn highest(&self) -> i64 {
        self.lowest + self.terms.len() as i64 - 1
    }

    pub fn term(&self, n: i64) -> Option<&Representation> {
        if n < self.lowest {
            return None;
        }
        self.terms.get((n - self.lowest) as usize)
    }

    /// `d^n`, or `None` outside the stored range.
    pub fn diff(&self, n: i64) -> Option<&ModuleMap> {
        if n < self.lowest {
            return None;
        }
        self.diffs.get((n - self.lowest) as usize)
    }

    /// Dimension of `H^n`.
    pub fn cohomology_dim(&self, n: i64) -> usize {
        let Some(term) = self.term(n) else { return 0 };
        let out = self.diff(n).map_or(0, ModuleMap::rank);
        let inc = self.diff(n - 1).map_or(0, ModuleMap::rank);
        term.total_dim() - out - inc
    }

    pub fn is_acyclic(&self) -> bool {
        (self.lowest..=self.highest()).all(|n| self.cohomology_dim(n) == 0)
    }
}

/// A bounded complex of projective sums.
#[derive(Clone, Debug, PartialEq)]
pub struct PerfectComplex {
    pub lowest: i64,
    pub terms: Vec<ProjSum>,
    /// `diffs[k]: terms[k] -> terms[k + 1]`.
    pub diffs: Vec<ProjMap>,
}

impl PerfectComplex {
    pub fn zero() -> Self {
        PerfectComplex {
            lowest: 0,
            terms: vec![ProjSum::default()],
            diffs: Vec::new(),
        }
    }

    pub fn stalk(sum: ProjSum, degree: i64) -> Self {
        PerfectComplex {
            lowest: degree,
            terms: vec![sum],
            diffs: Vec::new(),
        }
    }

    pub fn highest(&self) -> i64 {
        self.lowest + self.terms.len() as i64 - 1
    }

    pub fn term(&self, n: i64) -> Option<&ProjSum> {
        if n < self.lowest {
            return None;
        }
        self.terms.get((n - self.lowest) as usize)
    }

    pub fn diff(&self, n: i64) -> Option<&ProjMap> {
        if n < self.lowest {
            return None;
        }
        self.diffs.get((n - self.lowest) as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(ProjSum::is_empty)
    }

    /// `X[k]`: degrees move down by `k` and differentials pick up `(-1)^k`.
    pub fn shift(&self, k: i64) -> PerfectComplex {
        let sign = if k.rem_euclid(2) == 0 { rat(1) } else { rat(-1) };
        PerfectComplex {
            lowest: self.lowest - k,
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    pub fn to_complex(&self, alg: &Algebra) -> ChainComplex {
        ChainComplex {
            lowest: self.lowest,
            terms: self.terms.iter().map(|t| t.representation(alg)).collect(),
            diffs: self.diffs.iter().map(|d| d.to_module_map(alg)).collect(),
        }
    }

    pub fn check(&self, alg: &Algebra) -> Result<()> {
        for k in 1..self.diffs.len() {
            if !self.diffs[k].after(alg, &self.diffs[k - 1]).is_zero() {
                return Err(Error::NotAComplex(self.lowest + k as i64 - 1));
            }
        }
        Ok(())
    }

    /// Alternating sum of top multiplicities, the class in the Grothendieck
    /// group of projectives.
    pub fn class(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        for (k, t) in self.terms.iter().enumerate() {
            let sign = if (self.lowest + k as i64).rem_euclid(2) == 0 { 1 } else { -1 };
            for &top in &t.tops {
                v[top] += sign;
            }
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct Resolution {
    /// `P_k` in degree `-k`.
    pub complex: PerfectComplex,
    pub augmentation: ModuleMap,
    /// True when the cap was reached before the kernel vanished.
    pub truncated: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.complex.terms.len() - 1
    }

    /// `P_k`.
    pub fn term(&self, k: usize) -> Option<&ProjSum> {
        self.complex.term(-(k as i64))
    }

    /// `d_k: P_k -> P_{k-1}` for `k >= 1`.
    pub fn diff(&self, k: usize) -> Option<&ProjMap> {
        self.complex.diff(-(k as i64))
    }
}

/// Minimal projective resolution by iterated projective covers, stopped
/// after `P_cap`.
pub fn projective_resolution(m: &Representation, cap: usize) -> Resolution {
    resolve_with(m, cap, |k, _| projective_cover(k))
}

/// Resolution with an arbitrary cover at each step; the cover must be onto.
pub fn resolve_with<F>(m: &Representation, cap: usize, mut cover: F) -> Resolution
where
    F: FnMut(&Representation, usize) -> (ProjSum, ModuleMap),
{
    let alg = m.algebra().clone();
    let mut terms: Vec<ProjSum> = Vec::new();
    let mut maps: Vec<ProjMap> = Vec::new();
    let (p0, aug) = cover(m, 0);
    let (mut kernel, mut incl) = aug.kernel();
    terms.push(p0);
    let mut truncated = false;
    let mut step = 1;
    while !kernel.is_zero() {
        if step > cap {
            truncated = true;
            break;
        }
        let (p, pi) = cover(&kernel, step);
        let composite = incl.after(&pi).expect("composable");
        maps.push(ProjMap::from_module_map(&alg, &composite, &p, terms.last().expect("nonempty")));
        let (k, i) = pi.kernel();
        kernel = k;
        incl = i;
        terms.push(p);
        step += 1;
    }
    terms.reverse();
    maps.reverse();
    let lowest = -(terms.len() as i64 - 1);
    Resolution {
        complex: PerfectComplex {
            lowest,
            terms,
            diffs: maps,
        },
        augmentation: aug,
        truncated,
    }
}

/// A cover with an extra random summand `P(v)` mapped by a random element;
/// used to produce non-minimal resolutions.
pub fn padded_cover(k: &Representation, rng: &mut ChaCha8Rng) -> (ProjSum, ModuleMap) {
    let alg = k.algebra().clone();
    let (sum, min_map) = projective_cover(k);
    let v = rng.gen_range(0..alg.vertex_count());
    let mut tops = sum.tops.clone();
    tops.push(v);
    let padded = ProjSum::new(tops);
    let mut images: Vec<Vec<Rational>> = Vec::new();
    for (c, &t) in sum.tops.iter().enumerate() {
        images.push(min_map.component(t).mul_vec(&sum.generator(&alg, c)));
    }
    images.push((0..k.dim_at(v)).map(|_| rat(rng.gen_range(-3..=3))).collect());
    let map = crate::rep::map_from_generators(&alg, &padded, k, &images);
    (padded, map)
}

/// Matrix of the action of `x ∈ e_t A e_s` on `Z`, as a map `Z_t -> Z_s`.
fn element_action(z: &Representation, t: usize, s: usize, x: &[Rational]) -> Matrix {
    let alg = z.algebra();
    let mut m = Matrix::zeros(z.dim_at(s), z.dim_at(t));
    for (k, &b) in alg.block(t, s).iter().enumerate() {
        if x[k].is_zero() {
            continue;
        }
        m = &m + &z.path_matrix(&alg.basis()[b]).scale(&x[k]);
    }
    m
}

/// Coordinates of `Hom^n(X, Z)`: one block per summand of each `X^p`.
struct HomLayout {
    blocks: Vec<(i64, usize, usize)>,
    offsets: Vec<usize>,
    dim: usize,
}

impl HomLayout {
    fn new(x: &PerfectComplex, z: &ChainComplex, n: i64) -> Self {
        let mut blocks = Vec::new();
        let mut offsets = Vec::new();
        let mut dim = 0;
        for p in x.lowest..=x.highest() {
            let Some(target) = z.term(p + n) else { continue };
            for (c, &s) in x.term(p).expect("in range").tops.iter().enumerate() {
                blocks.push((p, c, s));
                offsets.push(dim);
                dim += target.dim_at(s);
            }
        }
        HomLayout { blocks, offsets, dim }
    }

    fn offset(&self, p: i64, c: usize) -> Option<usize> {
        self.blocks
            .iter()
            .position(|&(q, d, _)| q == p && d == c)
            .map(|i| self.offsets[i])
    }
}

/// `D^n: Hom^n(X, Z) -> Hom^{n+1}(X, Z)` as a matrix.
fn hom_differential(x: &PerfectComplex, z: &ChainComplex, n: i64) -> Matrix {
    let src = HomLayout::new(x, z, n);
    let tgt = HomLayout::new(x, z, n + 1);
    let mut m = Matrix::zeros(tgt.dim, src.dim);
    let sign = if n.rem_euclid(2) == 0 { rat(-1) } else { rat(1) };
    for (i, &(p, c, s)) in src.blocks.iter().enumerate() {
        let col0 = src.offsets[i];
        let width = z.term(p + n).expect("in layout").dim_at(s);
        // d_Z ∘ f_p
        if let (Some(dz), Some(row0)) = (z.diff(p + n), tgt.offset(p, c)) {
            m.set_block(row0, col0, dz.component(s));
        }
        // -(-1)^n f_p ∘ d_X^{p-1}
        if let Some(dx) = x.diff(p - 1) {
            let prev = x.term(p - 1).expect("source of a differential");
            for (c2, &s2) in prev.tops.iter().enumerate() {
                let Some(row0) = tgt.offset(p - 1, c2) else { continue };
                let entry = &dx.entries[c][c2];
                if entry.iter().all(Zero::is_zero) {
                    continue;
                }
                let act = element_action(z.term(p + n).expect("in layout"), s, s2, entry).scale(&sign);
                for r in 0..act.rows() {
                    for k in 0..width {
                        if !act[(r, k)].is_zero() {
                            m[(row0 + r, col0 + k)] += &act[(r, k)];
                        }
                    }
                }
            }
        }
    }
    m
}

/// `dim H^n Hom(X, Z)` for perfect `X`.
pub fn hom_cohomology_dim(x: &PerfectComplex, z: &ChainComplex, n: i64) -> usize {
    let dim = HomLayout::new(x, z, n).dim;
    if dim == 0 {
        return 0;
    }
    let out = hom_differential(x, z, n).rank();
    let inc = hom_differential(x, z, n - 1).rank();
    dim - out - inc
}

/// `dim Hom^n(X, Z)`.
pub fn hom_term_dim(x: &PerfectComplex, z: &ChainComplex, n: i64) -> usize {
    HomLayout::new(x, z, n).dim
}

/// `dim Ext^n(M, N)` from a minimal resolution of `M`.
pub fn ext(m: &Representation, n_mod: &Representation, n: usize) -> usize {
    let res = projective_resolution(m, n + 1);
    ext_from_resolution(&res, n_mod, n)
}

pub fn ext_from_resolution(res: &Resolution, n_mod: &Representation, n: usize) -> usize {
    let z = ChainComplex::concentrated(n_mod, 0);
    hom_cohomology_dim(&res.complex, &z, n as i64)
}

/// Perfect complex quasi-isomorphic to a bounded complex `Z`, built from the
/// top down: at each degree the cycles of the partial cone are covered.
pub fn perfect_resolution(z: &ChainComplex, cap: usize) -> Result<PerfectComplex> {
    let alg = z.terms[0].algebra().clone();
    let zero = Representation::zero(&alg);
    let mut q_terms: Vec<ProjSum> = Vec::new(); // Q^{k+1}, Q^{k+2}, ... built downward
    let mut q_diffs: Vec<ProjMap> = Vec::new();
    let mut f_next: Option<ModuleMap> = None; // f^{k+1}: Q^{k+1} -> Z^{k+1}
    let mut prev_q: Option<ProjSum> = None;
    let mut prev_dq: Option<ProjMap> = None; // d_Q^{k+1}: Q^{k+1} -> Q^{k+2}
    let mut k = z.highest();
    let mut below = 0usize;
    loop {
        let zk = z.term(k).unwrap_or(&zero);
        let q_next = prev_q.clone().unwrap_or_default();
        let q_next_rep = q_next.representation(&alg);
        let q_next2_rep = prev_dq
            .as_ref()
            .map(|d| d.target.representation(&alg))
            .unwrap_or_else(|| zero.clone());
        let zk1 = z.term(k + 1).unwrap_or(&zero);
        // W = Q^{k+1} ⊕ Z^k  ->  Q^{k+2} ⊕ Z^{k+1}, (q, z) ↦ (d q, f q - d z).
        let w = q_next_rep.direct_sum(zk)?;
        let w_target = q_next2_rep.direct_sum(zk1)?;
        let dq_module = prev_dq.as_ref().map(|d| d.to_module_map(&alg));
        let comps: Vec<Matrix> = (0..alg.vertex_count())
            .map(|v| {
                let (a, b) = (q_next_rep.dim_at(v), zk.dim_at(v));
                let (c, e) = (q_next2_rep.dim_at(v), zk1.dim_at(v));
                let mut m = Matrix::zeros(c + e, a + b);
                if let Some(dq) = &dq_module {
                    m.set_block(0, 0, dq.component(v));
                }
                if let Some(f) = &f_next {
                    m.set_block(c, 0, f.component(v));
                }
                if let Some(dz) = z.diff(k) {
                    m.set_block(c, a, &-dz.component(v));
                }
                m
            })
            .collect();
        let map = ModuleMap::new(w.clone(), w_target, comps)?;
        let (e_rep, incl) = map.kernel();
        if e_rep.is_zero() && k < z.lowest {
            break;
        }
        if k < z.lowest {
            below += 1;
            if below > cap {
                return Err(Error::ResolutionCap(cap));
            }
        }
        let (p, pi) = projective_cover(&e_rep);
        let into_w = incl.after(&pi)?;
        let p_rep = p.representation(&alg);
        let mut dq_comps = Vec::with_capacity(alg.vertex_count());
        let mut f_comps = Vec::with_capacity(alg.vertex_count());
        for v in 0..alg.vertex_count() {
            let m = into_w.component(v);
            let a = q_next_rep.dim_at(v);
            dq_comps.push(m.block(0, 0, a, m.cols()));
            f_comps.push(m.block(a, 0, zk.dim_at(v), m.cols()));
        }
        let dq_map = ModuleMap::new(p_rep.clone(), q_next_rep.clone(), dq_comps)?;
        let f_map = ModuleMap::new(p_rep, zk.clone(), f_comps)?;
        let dq = ProjMap::from_module_map(&alg, &dq_map, &p, &q_next);
        if prev_q.is_some() {
            q_diffs.push(dq.clone());
        }
        q_terms.push(p.clone());
        prev_q = Some(p);
        prev_dq = Some(dq);
        f_next = Some(f_map);
        k -= 1;
    }
    q_terms.reverse();
    q_diffs.reverse();
    let lowest = k + 1;
    let out = PerfectComplex {
        lowest,
        terms: q_terms,
        diffs: q_diffs,
    };
    // Trim zero terms at the top so degrees stay meaningful.
    Ok(trim(out))
}

fn trim(mut x: PerfectComplex) -> PerfectComplex {
    while x.terms.len() > 1 && x.terms.last().is_some_and(ProjSum::is_empty) {
        x.terms.pop();
        x.diffs.pop();
    }
    while x.terms.len() > 1 && x.terms[0].is_empty() {
        x.terms.remove(0);
        x.diffs.remove(0);
        x.lowest += 1;
    }
    x
}

/// Cap used when checking that injectives have finite projective dimension.
pub const INJECTIVE_RESOLUTION_CAP: usize = 16;

/// Resolves every `I(i)`; errors on the first that does not terminate.
pub fn check_injectives_finite_projective_dimension(alg: &Algebra) -> Result<Vec<usize>> {
    (0..alg.vertex_count())
        .map(|i| {
            let res = projective_resolution(&Representation::injective(alg, i), INJECTIVE_RESOLUTION_CAP);
            if res.truncated {
                Err(Error::InfiniteProjectiveDimension {
                    vertex: alg.quiver().label(i).to_string(),
                    cap: INJECTIVE_RESOLUTION_CAP,
                })
            } else {
                Ok(res.length())
            }
        })
        .collect()
}

/// `N` applied termwise: a complex of injective sums.
pub fn nakayama_termwise(alg: &Algebra, x: &PerfectComplex) -> ChainComplex {
    let terms = x.terms.iter().map(|t| crate::functors::injective_sum(alg, t)).collect();
    let diffs = x.diffs.iter().map(|d| nakayama_projmap(alg, d)).collect();
    ChainComplex {
        lowest: x.lowest,
        terms,
        diffs,
    }
}

/// Left-derived Nakayama functor on a perfect complex, returned as a
/// perfect complex.
pub fn derived_nakayama(alg: &Algebra, x: &PerfectComplex) -> Result<PerfectComplex> {
    check_injectives_finite_projective_dimension(alg)?;
    x.check(alg)?;
    if x.is_zero() {
        return Ok(PerfectComplex::zero());
    }
    perfect_resolution(&nakayama_termwise(alg, x), 4 * INJECTIVE_RESOLUTION_CAP)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreReport {
    /// `(k, dim Hom(X[k], LN Y), dim Hom(Y, X[k]))` for `k = -2..=2`.
    pub shifts: Vec<(i64, usize, usize)>,
}

impl SerreReport {
    pub fn holds(&self) -> bool {
        self.shifts.iter().all(|(_, a, b)| a == b)
    }

    pub fn unshifted(&self) -> (usize, usize) {
        let (_, a, b) = self.shifts.iter().find(|(k, _, _)| *k == 0).expect("k = 0 present");
        (*a, *b)
    }
}

/// Compares `Hom(X[k], LN(Y))` with `Hom(Y, X[k])` in the homotopy category.
pub fn serre_duality_check(alg: &Algebra, x: &PerfectComplex, y: &PerfectComplex) -> Result<SerreReport> {
    x.check(alg)?;
    let ny = derived_nakayama(alg, y)?.to_complex(alg);
    let xc = x.to_complex(alg);
    let shifts = (-2..=2)
        .map(|k| {
            let d1 = hom_cohomology_dim(x, &ny, -k);
            let d2 = hom_cohomology_dim(y, &xc, k);
            (k, d1, d2)
        })
        .collect();
    Ok(SerreReport { shifts })
}

/// Runs [`serre_duality_check`] on `trials` random pairs of perfect
/// complexes over all vertices, reproducibly from `seed`.
pub fn random_serre_trials(alg: &Algebra, seed: u64, trials: usize) -> Result<Vec<(PerfectComplex, PerfectComplex, SerreReport)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices: Vec<usize> = (0..alg.vertex_count()).collect();
    (0..trials)
        .map(|_| {
            let x = random_perfect_complex(alg, &vertices, &mut rng);
            let y = random_perfect_complex(alg, &vertices, &mut rng);
            let report = serre_duality_check(alg, &x, &y)?;
            Ok((x, y, report))
        })
        .collect()
}

/// Random perfect complex with 1–3 terms built from projectives at `vertices`.
pub fn random_perfect_complex(alg: &Algebra, vertices: &[usize], rng: &mut ChaCha8Rng) -> PerfectComplex {
    let len = rng.gen_range(1..=3);
    let lowest = rng.gen_range(-1..=1);
    let terms: Vec<ProjSum> = (0..len)
        .map(|_| {
            let count = rng.gen_range(1..=2);
            ProjSum::new((0..count).map(|_| vertices[rng.gen_range(0..vertices.len())]).collect())
        })
        .collect();
    let mut diffs: Vec<ProjMap> = Vec::new();
    for k in 0..len - 1 {
        let (s, t) = (&terms[k], &terms[k + 1]);
        let basis = projmap_basis(alg, s, t);
        // Differentials after the first must kill the previous one.
        let admissible: Vec<ProjMap> = match diffs.last() {
            None => basis,
            Some(prev) => {
                let images: Vec<Vec<Rational>> = basis.iter().map(|g| flatten(&g.after(alg, prev))).collect();
                let rows = images.first().map_or(0, Vec::len);
                if rows == 0 {
                    basis
                } else {
                    let m = Matrix::from_columns(rows, &images);
                    kernel_basis(&m)
                        .into_iter()
                        .map(|c| combine_projmaps(alg, s, t, &basis, &c))
                        .collect()
                }
            }
        };
        let coeffs: Vec<Rational> = admissible.iter().map(|_| rat(rng.gen_range(-2..=2))).collect();
        diffs.push(combine_projmaps(alg, s, t, &admissible, &coeffs));
    }
    PerfectComplex { lowest, terms, diffs }
}

fn flatten(f: &ProjMap) -> Vec<Rational> {
    f.entries.iter().flatten().flatten().cloned().collect()
}

/// Unit basis of all maps `s -> t` between projective sums.
pub fn projmap_basis(alg: &Algebra, s: &ProjSum, t: &ProjSum) -> Vec<ProjMap> {
    let zero = ProjMap::zero(alg, s, t);
    let mut out = Vec::new();
    for d in 0..t.len() {
        for c in 0..s.len() {
            for k in 0..zero.entries[d][c].len() {
                let mut m = zero.clone();
                m.entries[d][c][k] = Rational::one();
                out.push(m);
            }
        }
    }
    out
}

fn combine_projmaps(alg: &Algebra, s: &ProjSum, t: &ProjSum, maps: &[ProjMap], coeffs: &[Rational]) -> ProjMap {
    let mut acc = ProjMap::zero(alg, s, t);
    for (m, c) in maps.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&m.scale(c));
        }
    }
    acc
}

/// Euler characteristic `Σ (-1)^n dim Hom^n(X, Y)` of the Hom complex.
pub fn hom_euler_characteristic(x: &PerfectComplex, z: &ChainComplex) -> i64 {
    let lo = z.lowest - x.highest();
    let hi = z.highest() - x.lowest;
    (lo..=hi)
        .map(|n| {
            let d = hom_term_dim(x, z, n) as i64;
            if n.rem_euclid(2) == 0 {
                d
            } else {
                -d
            }
        })
        .sum()
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
    fn projective_resolves_in_one_step() {
        let alg = Arc::new(sl2_o0());
        let res = projective_resolution(&Representation::projective(&alg, 1), 5);
        assert_eq!(res.length(), 0);
        assert!(!res.truncated);
    }

    #[test]
    fn dual_numbers_simple_has_periodic_resolution() {
        let alg = dual_numbers();
        let res = projective_resolution(&Representation::simple(&alg, 0), 5);
        assert!(res.truncated);
        assert_eq!(res.complex.terms.len(), 6);
        for t in &res.complex.terms {
            assert_eq!(t.representation(&alg).total_dim(), 2);
        }
    }

    #[test]
    fn a2_simple_resolution() {
        let alg = Arc::new(a2());
        let res = projective_resolution(&Representation::simple(&alg, 0), 5);
        assert!(!res.truncated);
        assert_eq!(res.length(), 1);
        assert!(res.complex.to_complex(&alg).cohomology_dim(-1) == 0);
    }

    #[test]
    fn ext_examples() {
        let alg = dual_numbers();
        let s = Representation::simple(&alg, 0);
        assert_eq!(ext(&s, &s, 0), 1);
        assert_eq!(ext(&s, &s, 1), 1);
        assert_eq!(ext(&s, &s, 4), 1);
        let alg = Arc::new(a2());
        let s1 = Representation::simple(&alg, 0);
        let s2 = Representation::simple(&alg, 1);
        assert_eq!(ext(&s1, &s2, 1), 1);
        assert_eq!(ext(&s2, &s1, 1), 0);
        assert_eq!(ext(&s1, &s2, 2), 0);
    }

    #[test]
    fn sl2_injective_resolution() {
        let alg = Arc::new(sl2_o0());
        let lengths = check_injectives_finite_projective_dimension(&alg).unwrap();
        assert_eq!(lengths, vec![2, 0]);
        let res = projective_resolution(&Representation::injective(&alg, 0), 5);
        let tops: Vec<Vec<usize>> = res.complex.terms.iter().map(|t| t.tops.clone()).collect();
        assert_eq!(tops, vec![vec![0], vec![1], vec![1]]);
    }

    #[test]
    fn derived_nakayama_of_projective() {
        let alg = Arc::new(sl2_o0());
        let x = PerfectComplex::stalk(ProjSum::new(vec![0]), 0);
        let nx = derived_nakayama(&alg, &x).unwrap();
        let c = nx.to_complex(&alg);
        let h: Vec<usize> = (nx.lowest..=nx.highest()).map(|n| c.cohomology_dim(n)).collect();
        assert_eq!(h.iter().sum::<usize>(), 2);
        assert_eq!(c.cohomology_dim(0), 2);
        assert!(derived_nakayama(&alg, &PerfectComplex::zero()).unwrap().is_zero());
    }

    #[test]
    fn serre_on_dual_numbers() {
        let alg = dual_numbers();
        let p = PerfectComplex::stalk(ProjSum::new(vec![0]), 0);
        let report = serre_duality_check(&alg, &p, &p).unwrap();
        assert_eq!(report.unshifted(), (2, 2));
        assert!(report.holds());
        let z = serre_duality_check(&alg, &PerfectComplex::zero(), &p).unwrap();
        assert_eq!(z.unshifted(), (0, 0));
    }

    #[test]
    fn serre_on_random_sl2_pairs() {
        let alg = Arc::new(sl2_o0());
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..5 {
            let x = random_perfect_complex(&alg, &[0, 1], &mut rng);
            let y = random_perfect_complex(&alg, &[0, 1], &mut rng);
            let report = serre_duality_check(&alg, &x, &y).unwrap();
            assert!(report.holds(), "{report:?}");
        }
    }
}
