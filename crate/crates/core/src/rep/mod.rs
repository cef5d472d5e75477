//! Finite-dimensional representations and their maps.
//!
//! A representation assigns a space to each vertex and a matrix to each
//! arrow; for `a: s -> t` the matrix has shape `dim(t) x dim(s)`. Paths act
//! by composing matrices in path order, so these are right modules: the path
//! `a*b` acts as `M_b M_a`.

mod iso;
mod projective;
mod text;

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{complement_indices, kernel_basis, solve_matrix, zero_vec, Matrix, Rational};
use crate::quiver::{Path, PresentedAlgebra};

pub use iso::{is_isomorphic, Isomorphism};
pub use projective::{
    lift_projective, map_from_generators, projective_cover, projective_presentation, ProjMap,
    ProjPresentation, ProjSum,
};
pub use text::{parse_representation, representation_to_text};

/// Shared handle to a validated algebra.
pub type Algebra = Arc<PresentedAlgebra>;

/// Multiplicity of each simple in one Loewy layer, indexed by vertex.
pub type Layer = Vec<usize>;

#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

pub fn same_algebra(a: &Algebra, b: &Algebra) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    out.push(0);
    for d in dims {
        acc += d;
        out.push(acc);
    }
    out
}

impl Representation {
    /// Checks matrix shapes and that every relation acts as zero.
    pub fn new(algebra: Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrow_count() {
            return Err(Error::ShapeMismatch(
                "one dimension per vertex and one matrix per arrow".into(),
            ));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::ShapeMismatch(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let rep = Representation { algebra, dims, maps };
        for (r, rel) in rep.algebra.relations().iter().enumerate() {
            let (s, t) = (rel.source(), rel.target());
            let mut sum = Matrix::zeros(rep.dims[t], rep.dims[s]);
            for (c, p) in &rel.terms {
                sum = &sum + &rep.path_matrix(p).scale(c);
            }
            if !sum.is_zero() {
                return Err(Error::RelationViolated(r));
            }
        }
        Ok(rep)
    }

    fn new_unchecked(algebra: Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        Representation { algebra, dims, maps }
    }

    pub fn zero(algebra: &Algebra) -> Self {
        let q = algebra.quiver();
        let maps = vec![Matrix::zeros(0, 0); q.arrow_count()];
        Representation::new_unchecked(algebra.clone(), vec![0; q.vertex_count()], maps)
    }

    pub fn simple(algebra: &Algebra, i: usize) -> Self {
        let q = algebra.quiver();
        let mut dims = vec![0; q.vertex_count()];
        dims[i] = 1;
        let maps = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Representation::new_unchecked(algebra.clone(), dims, maps)
    }

    /// `P(i) = e_i A`, with basis the paths starting at `i`.
    pub fn projective(algebra: &Algebra, i: usize) -> Self {
        let alg = &**algebra;
        let q = alg.quiver();
        let n = q.vertex_count();
        let dims: Vec<usize> = (0..n).map(|j| alg.block_dim(i, j)).collect();
        let maps = (0..q.arrow_count())
            .map(|a| {
                let (s, t, x) = arrow_element(alg, a);
                let mut m = Matrix::zeros(dims[t], dims[s]);
                for c in 0..dims[s] {
                    let mut e = zero_vec(dims[s]);
                    e[c] = Rational::one();
                    let image = alg.multiply(i, s, t, &e, &x);
                    for (r, v) in image.into_iter().enumerate() {
                        m[(r, c)] = v;
                    }
                }
                m
            })
            .collect();
        Representation::new_unchecked(algebra.clone(), dims, maps)
    }

    /// `I(i) = D(A e_i)`, with basis dual to the paths ending at `i`.
    pub fn injective(algebra: &Algebra, i: usize) -> Self {
        let alg = &**algebra;
        let q = alg.quiver();
        let n = q.vertex_count();
        let dims: Vec<usize> = (0..n).map(|j| alg.block_dim(j, i)).collect();
        let maps = (0..q.arrow_count())
            .map(|a| {
                let (s, t, x) = arrow_element(alg, a);
                // (phi . a)(q) = phi(a q) for q in e_t A e_i.
                let mut m = Matrix::zeros(dims[t], dims[s]);
                for r in 0..dims[t] {
                    let mut e = zero_vec(dims[t]);
                    e[r] = Rational::one();
                    let aq = alg.multiply(s, t, i, &x, &e);
                    for (c, v) in aq.into_iter().enumerate() {
                        m[(r, c)] = v;
                    }
                }
                m
            })
            .collect();
        Representation::new_unchecked(algebra.clone(), dims, maps)
    }

    /// The contravariant dual, a representation of the opposite algebra.
    pub fn dual(&self, opposite: &Algebra) -> Result<Representation> {
        if opposite.vertex_count() != self.dims.len()
            || opposite.quiver().arrow_count() != self.maps.len()
        {
            return Err(Error::AlgebraMismatch);
        }
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        Ok(Representation::new_unchecked(opposite.clone(), self.dims.clone(), maps))
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Ok(Representation::new_unchecked(self.algebra.clone(), dims, maps))
    }

    pub fn direct_sum_all(algebra: &Algebra, parts: &[Representation]) -> Result<Representation> {
        parts
            .iter()
            .try_fold(Representation::zero(algebra), |acc, p| acc.direct_sum(p))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.len()
    }

    /// Matrix by which a path acts, `dim(target) x dim(source)`.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.dims[p.source()]);
        for &a in p.arrow_ids() {
            m = &self.maps[a] * &m;
        }
        m
    }

    /// Per-vertex bases of `rad M = M J`.
    pub fn radical(&self) -> Vec<Matrix> {
        let full: Vec<Matrix> = self.dims.iter().map(|&d| Matrix::identity(d)).collect();
        self.radical_step(&full)
    }

    fn radical_step(&self, sub: &[Matrix]) -> Vec<Matrix> {
        let q = self.algebra.quiver();
        (0..self.dims.len())
            .map(|v| {
                let mut gens = Matrix::zeros(self.dims[v], 0);
                for a in q.arrows_to(v) {
                    let s = q.arrows()[a].source;
                    gens = gens.hstack(&(&self.maps[a] * &sub[s]));
                }
                gens.column_space()
            })
            .collect()
    }

    /// Radical series `M ⊇ rad M ⊇ rad² M ⊇ ... ⊇ 0` as per-vertex bases.
    pub fn radical_series(&self) -> Vec<Vec<Matrix>> {
        let mut series = vec![self.dims.iter().map(|&d| Matrix::identity(d)).collect::<Vec<_>>()];
        loop {
            let last = series.last().expect("nonempty");
            if last.iter().all(|m| m.cols() == 0) {
                return series;
            }
            let next = self.radical_step(last);
            series.push(next);
        }
    }

    /// Per-vertex bases of `soc M`, the vectors killed by every arrow.
    pub fn socle(&self) -> Vec<Matrix> {
        let zero: Vec<Matrix> = self.dims.iter().map(|&d| Matrix::zeros(d, 0)).collect();
        self.socle_step(&zero)
    }

    fn socle_step(&self, sub: &[Matrix]) -> Vec<Matrix> {
        let q = self.algebra.quiver();
        let annihilators: Vec<Matrix> = sub
            .iter()
            .zip(&self.dims)
            .map(|(s, &d)| annihilator(s, d))
            .collect();
        (0..self.dims.len())
            .map(|v| {
                let mut cond = Matrix::zeros(0, self.dims[v]);
                for a in q.arrows_from(v) {
                    let t = q.arrows()[a].target;
                    cond = cond.vstack(&(&annihilators[t] * &self.maps[a]));
                }
                Matrix::from_columns(self.dims[v], &kernel_basis(&cond))
            })
            .collect()
    }

    /// Socle series `0 ⊆ soc M ⊆ soc² M ⊆ ... ⊆ M`.
    pub fn socle_series(&self) -> Vec<Vec<Matrix>> {
        let mut series = vec![self.dims.iter().map(|&d| Matrix::zeros(d, 0)).collect::<Vec<_>>()];
        loop {
            let last = series.last().expect("nonempty");
            if last.iter().zip(&self.dims).all(|(m, &d)| m.cols() == d) {
                return series;
            }
            let next = self.socle_step(last);
            series.push(next);
        }
    }

    /// Radical layers from the top: entry `k` counts the simples in
    /// `rad^k M / rad^{k+1} M`.
    pub fn loewy_layers(&self) -> Vec<Layer> {
        let series = self.radical_series();
        series
            .windows(2)
            .map(|w| w[0].iter().zip(&w[1]).map(|(a, b)| a.cols() - b.cols()).collect())
            .collect()
    }

    /// Socle layers from the bottom: entry `k` counts `soc^{k+1} M / soc^k M`.
    pub fn socle_layers(&self) -> Vec<Layer> {
        let series = self.socle_series();
        series
            .windows(2)
            .map(|w| w[1].iter().zip(&w[0]).map(|(a, b)| a.cols() - b.cols()).collect())
            .collect()
    }

    pub fn loewy_length(&self) -> usize {
        self.radical_series().len() - 1
    }

    /// Top `M / rad M` as multiplicities per vertex.
    pub fn top(&self) -> Layer {
        self.loewy_layers().into_iter().next().unwrap_or_else(|| vec![0; self.dims.len()])
    }

    /// Per-vertex bases of the smallest subrepresentation containing `gens`.
    pub fn generated_submodule(&self, gens: &[Matrix]) -> Vec<Matrix> {
        let q = self.algebra.quiver();
        let mut sub: Vec<Matrix> = gens.iter().map(Matrix::column_space).collect();
        loop {
            let mut changed = false;
            for a in 0..q.arrow_count() {
                let arrow = &q.arrows()[a];
                let image = &self.maps[a] * &sub[arrow.source];
                let joined = sub[arrow.target].hstack(&image);
                let span = joined.column_space();
                if span.cols() > sub[arrow.target].cols() {
                    sub[arrow.target] = span;
                    changed = true;
                }
            }
            if !changed {
                return sub;
            }
        }
    }

    /// The subrepresentation spanned by `basis` (closed under arrows) and its inclusion.
    pub fn subrepresentation(&self, basis: &[Matrix]) -> Result<(Representation, ModuleMap)> {
        let q = self.algebra.quiver();
        let dims: Vec<usize> = basis.iter().map(Matrix::cols).collect();
        let mut maps = Vec::with_capacity(q.arrow_count());
        for (a, arrow) in q.arrows().iter().enumerate() {
            let image = &self.maps[a] * &basis[arrow.source];
            let m = solve_matrix(&basis[arrow.target], &image).ok_or_else(|| {
                Error::Invalid(format!("subspace is not closed under arrow `{}`", arrow.name))
            })?;
            maps.push(m);
        }
        let sub = Representation::new_unchecked(self.algebra.clone(), dims, maps);
        let incl = ModuleMap::new_unchecked(sub.clone(), self.clone(), basis.to_vec());
        Ok((sub, incl))
    }

    /// `M / N` for a subrepresentation given by per-vertex bases, and the projection.
    pub fn quotient(&self, basis: &[Matrix]) -> Result<(Representation, ModuleMap)> {
        let q = self.algebra.quiver();
        let mut projections = Vec::with_capacity(self.dims.len());
        let mut sections = Vec::with_capacity(self.dims.len());
        for (v, b) in basis.iter().enumerate() {
            let d = self.dims[v];
            let comp = complement_indices(b);
            let mut e = Matrix::zeros(d, comp.len());
            for (k, &i) in comp.iter().enumerate() {
                e[(i, k)] = Rational::one();
            }
            let change = b.hstack(&e);
            let inv = change
                .inverse()
                .ok_or_else(|| Error::Invalid("subspace basis is not independent".into()))?;
            projections.push(inv.block(b.cols(), 0, comp.len(), d));
            sections.push(e);
        }
        let mut maps = Vec::with_capacity(q.arrow_count());
        for (a, arrow) in q.arrows().iter().enumerate() {
            let image = &self.maps[a] * &basis[arrow.source];
            if !(&projections[arrow.target] * &image).is_zero() {
                return Err(Error::Invalid(format!(
                    "subspace is not closed under arrow `{}`",
                    arrow.name
                )));
            }
            maps.push(&(&projections[arrow.target] * &self.maps[a]) * &sections[arrow.source]);
        }
        let dims = projections.iter().map(Matrix::rows).collect();
        let quot = Representation::new_unchecked(self.algebra.clone(), dims, maps);
        let proj = ModuleMap::new_unchecked(self.clone(), quot.clone(), projections);
        Ok((quot, proj))
    }

    /// Sum of the images of all maps from each generator into `self`.
    pub fn trace(&self, generators: &[Representation]) -> Result<Vec<Matrix>> {
        let mut sum: Vec<Matrix> = self.dims.iter().map(|&d| Matrix::zeros(d, 0)).collect();
        for g in generators {
            for f in hom_space(g, self)? {
                for (v, c) in f.components.iter().enumerate() {
                    sum[v] = sum[v].hstack(c);
                }
            }
        }
        Ok(sum.iter().map(Matrix::column_space).collect())
    }

    pub fn identity(&self) -> ModuleMap {
        let comps = self.dims.iter().map(|&d| Matrix::identity(d)).collect();
        ModuleMap::new_unchecked(self.clone(), self.clone(), comps)
    }
}

/// Rows whose common kernel is the column span of `sub` (inside a `d`-dim space).
fn annihilator(sub: &Matrix, d: usize) -> Matrix {
    if sub.cols() == 0 {
        return Matrix::identity(d);
    }
    let rows = kernel_basis(&sub.transpose());
    Matrix::from_columns(d, &rows).transpose()
}

/// Endpoints of an arrow and its coordinates in `e_s A e_t`.
pub(crate) fn arrow_element(alg: &PresentedAlgebra, a: usize) -> (usize, usize, Vec<Rational>) {
    let p = Path::arrow(alg.quiver(), a);
    let (s, t) = (p.source(), p.target());
    let mut x = zero_vec(alg.block_dim(s, t));
    for (b, c) in alg.reduce(&p) {
        x[alg.position_in_block(b)] = c;
    }
    (s, t, x)
}

/// A family of linear maps commuting with all arrows.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap {
    source: Representation,
    target: Representation,
    components: Vec<Matrix>,
}

impl ModuleMap {
    pub fn new(source: Representation, target: Representation, components: Vec<Matrix>) -> Result<Self> {
        if !same_algebra(&source.algebra, &target.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if components.len() != source.dims.len()
            || components
                .iter()
                .enumerate()
                .any(|(v, c)| c.shape() != (target.dims[v], source.dims[v]))
        {
            return Err(Error::ShapeMismatch("module map component shapes".into()));
        }
        let q = source.algebra.quiver();
        for (a, arrow) in q.arrows().iter().enumerate() {
            let lhs = &target.maps[a] * &components[arrow.source];
            let rhs = &components[arrow.target] * &source.maps[a];
            if lhs != rhs {
                return Err(Error::NotIntertwiner(arrow.name.clone()));
            }
        }
        Ok(ModuleMap {
            source,
            target,
            components,
        })
    }

    pub(crate) fn new_unchecked(source: Representation, target: Representation, components: Vec<Matrix>) -> Self {
        ModuleMap {
            source,
            target,
            components,
        }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let comps = source
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&s, &t)| Matrix::zeros(t, s))
            .collect();
        ModuleMap::new_unchecked(source.clone(), target.clone(), comps)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn component(&self, v: usize) -> &Matrix {
        &self.components[v]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ModuleMap) -> Result<ModuleMap> {
        if first.target.dims != self.source.dims {
            return Err(Error::ShapeMismatch("composition of incompatible maps".into()));
        }
        let comps = self
            .components
            .iter()
            .zip(&first.components)
            .map(|(g, f)| g * f)
            .collect();
        Ok(ModuleMap::new_unchecked(first.source.clone(), self.target.clone(), comps))
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a + b)
            .collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn scale(&self, c: &Rational) -> ModuleMap {
        let comps = self.components.iter().map(|m| m.scale(c)).collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dims == self.target.dims && self.components.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let comps = self
            .components
            .iter()
            .map(Matrix::inverse)
            .collect::<Option<Vec<_>>>()?;
        Some(ModuleMap::new_unchecked(self.target.clone(), self.source.clone(), comps))
    }

    /// Per-vertex bases of the kernel inside the source.
    pub fn kernel_basis(&self) -> Vec<Matrix> {
        self.components
            .iter()
            .zip(&self.source.dims)
            .map(|(c, &d)| Matrix::from_columns(d, &kernel_basis(c)))
            .collect()
    }

    /// Per-vertex bases of the image inside the target.
    pub fn image_basis(&self) -> Vec<Matrix> {
        self.components.iter().map(Matrix::column_space).collect()
    }

    pub fn kernel(&self) -> (Representation, ModuleMap) {
        self.source
            .subrepresentation(&self.kernel_basis())
            .expect("kernels are subrepresentations")
    }

    pub fn image(&self) -> (Representation, ModuleMap) {
        self.target
            .subrepresentation(&self.image_basis())
            .expect("images are subrepresentations")
    }

    pub fn cokernel(&self) -> (Representation, ModuleMap) {
        self.target
            .quotient(&self.image_basis())
            .expect("images are subrepresentations")
    }

    /// The map induced on quotients: `self` must send `ker(from)` into `ker(to)`,
    /// where `from: source -> Q1` and `to: target -> Q2` are surjections.
    pub fn induced_on_quotients(&self, from: &ModuleMap, to: &ModuleMap) -> Result<ModuleMap> {
        let mut comps = Vec::with_capacity(self.components.len());
        for v in 0..self.components.len() {
            // Lift quotient basis vectors through `from` via a right inverse.
            let p = &from.components[v];
            let section = solve_matrix(p, &Matrix::identity(p.rows()))
                .ok_or_else(|| Error::Invalid("quotient map is not surjective".into()))?;
            let m = &(&to.components[v] * &self.components[v]) * &section;
            comps.push(m);
        }
        let map = ModuleMap::new_unchecked(from.target.clone(), to.target.clone(), comps);
        // Well defined iff it does not depend on the lift: kernels must map to kernels.
        let ker = from.kernel_basis();
        for v in 0..ker.len() {
            let image = &(&to.components[v] * &self.components[v]) * &ker[v];
            if !image.is_zero() {
                return Err(Error::Invalid("map does not descend to the quotients".into()));
            }
        }
        Ok(map)
    }

    /// Restriction to subrepresentations given by inclusions `sub_src -> source`
    /// and `sub_tgt -> target`; the image must land in `sub_tgt`.
    pub fn restrict(&self, sub_src: &ModuleMap, sub_tgt: &ModuleMap) -> Result<ModuleMap> {
        let mut comps = Vec::with_capacity(self.components.len());
        for v in 0..self.components.len() {
            let image = &self.components[v] * &sub_src.components[v];
            let m = solve_matrix(&sub_tgt.components[v], &image)
                .ok_or_else(|| Error::Invalid("image leaves the target submodule".into()))?;
            comps.push(m);
        }
        Ok(ModuleMap::new_unchecked(
            sub_src.source.clone(),
            sub_tgt.source.clone(),
            comps,
        ))
    }
}

/// Basis of `Hom(M, N)`, from the kernel of the commutation constraints.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<ModuleMap>> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let dm = &m.dims;
    let dn = &n.dims;
    let mut offs = Vec::with_capacity(dm.len() + 1);
    let mut acc = 0;
    for v in 0..dm.len() {
        offs.push(acc);
        acc += dm[v] * dn[v];
    }
    let unknowns = acc;
    let var = |v: usize, r: usize, c: usize| offs[v] + r * dm[v] + c;
    let q = m.algebra.quiver();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let (na, ma) = (&n.maps[a], &m.maps[a]);
        // (N_a f_s - f_t M_a)[r][c] = 0
        for r in 0..dn[t] {
            for c in 0..dm[s] {
                let mut row = zero_vec(unknowns);
                for k in 0..dn[s] {
                    if !na[(r, k)].is_zero() {
                        row[var(s, k, c)] += &na[(r, k)];
                    }
                }
                for k in 0..dm[t] {
                    if !ma[(k, c)].is_zero() {
                        row[var(t, r, k)] -= &ma[(k, c)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut e = zero_vec(unknowns);
                e[i] = Rational::one();
                e
            })
            .collect()
    } else {
        kernel_basis(&Matrix::from_rows(rows))
    };
    Ok(kernel
        .into_iter()
        .map(|x| {
            let comps = (0..dm.len())
                .map(|v| {
                    let mut f = Matrix::zeros(dn[v], dm[v]);
                    for r in 0..dn[v] {
                        for c in 0..dm[v] {
                            f[(r, c)] = x[var(v, r, c)].clone();
                        }
                    }
                    f
                })
                .collect();
            ModuleMap::new_unchecked(m.clone(), n.clone(), comps)
        })
        .collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

/// Linear combination `Σ c_k f_k` of maps with a common source and target.
pub fn combine(maps: &[ModuleMap], coeffs: &[Rational]) -> Option<ModuleMap> {
    let first = maps.first()?;
    let mut acc = ModuleMap::zero(&first.source, &first.target);
    for (f, c) in maps.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&f.scale(c));
        }
    }
    Some(acc)
}

/// Block offsets for stacking per-vertex spaces; exposed for callers that
/// flatten representations.
pub fn vertex_offsets(rep: &Representation) -> Vec<usize> {
    offsets(&rep.dims)
}
