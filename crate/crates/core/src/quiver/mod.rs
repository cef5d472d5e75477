//! Quivers with relations and their finite-dimensional path algebras.
//!
//! Paths compose left to right: for `a: i -> j` and `b: j -> k` the word
//! `a*b` is a path `i -> k`. With this convention the indecomposable
//! projective `P(i)` is spanned by the basis paths starting at `i`, and an
//! arrow `i -> j` records a copy of the simple `S(j)` in the second radical
//! layer of `P(i)`.

mod families;
mod text;

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat, rref, Matrix, Rational};

pub use families::{a2, half_integer_label, sl2_o0, truncate, Family, TruncatedFamily};
pub use text::{parse_dot, parse_presentation, to_dot, to_text};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Self {
        Quiver::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<usize> {
        if self.vertex(label).is_some() {
            return Err(Error::DuplicateVertex(label.to_string()));
        }
        if label.is_empty() || label.chars().any(char::is_whitespace) || label.starts_with('#') {
            return Err(Error::Invalid(format!("bad vertex label `{label}`")));
        }
        self.vertices.push(label.to_string());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, name: &str, source: usize, target: usize) -> Result<usize> {
        if self.arrow(name).is_some() {
            return Err(Error::DuplicateArrow(name.to_string()));
        }
        if name.is_empty() || name.contains(['*', ':', '#']) || name.chars().any(char::is_whitespace)
        {
            return Err(Error::Invalid(format!("bad arrow name `{name}`")));
        }
        if source >= self.vertices.len() || target >= self.vertices.len() {
            return Err(Error::Invalid(format!("arrow `{name}` has undeclared endpoint")));
        }
        self.arrows.push(Arrow {
            name: name.to_string(),
            source,
            target,
        });
        Ok(self.arrows.len() - 1)
    }

    /// Adds an arrow between vertices given by label.
    pub fn connect(&mut self, name: &str, source: &str, target: &str) -> Result<usize> {
        let s = self
            .vertex(source)
            .ok_or_else(|| Error::UnknownVertex(source.to_string()))?;
        let t = self
            .vertex(target)
            .ok_or_else(|| Error::UnknownVertex(target.to_string()))?;
        self.add_arrow(name, s, t)
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn arrows_between(&self, s: usize, t: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.source == s && a.target == t)
            .count()
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A composable arrow sequence; trivial paths are the idempotents `e_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Path {
        let arr = &q.arrows[a];
        Path {
            source: arr.source,
            target: arr.target,
            arrows: vec![a],
        }
    }

    /// `None` when some consecutive pair does not compose.
    pub fn from_arrows(q: &Quiver, arrows: &[usize]) -> Option<Path> {
        let (&first, rest) = arrows.split_first()?;
        let mut target = q.arrows.get(first)?.target;
        for &a in rest {
            let arr = q.arrows.get(a)?;
            if arr.source != target {
                return None;
            }
            target = arr.target;
        }
        Some(Path {
            source: q.arrows[first].source,
            target,
            arrows: arrows.to_vec(),
        })
    }

    /// Parses `a*b*c`, or `e_<label>` for a trivial path.
    pub fn parse(q: &Quiver, word: &str) -> Result<Path> {
        if let Some(label) = word.strip_prefix("e_") {
            if let Some(v) = q.vertex(label) {
                return Ok(Path::trivial(v));
            }
        }
        let ids = word
            .split('*')
            .map(|name| q.arrow(name).ok_or_else(|| Error::UnknownArrow(name.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Path::from_arrows(q, &ids).ok_or_else(|| Error::Invalid(format!("`{word}` is not composable")))
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrow_ids(&self) -> &[usize] {
        &self.arrows
    }

    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    pub fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.label(self.source))
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// `Σ c_k p_k = 0`, all paths sharing source and target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Rational, Path)>,
}

impl Relation {
    /// Combines like terms and drops zero coefficients.
    pub fn new(terms: Vec<(Rational, Path)>) -> Relation {
        let mut out: Vec<(Rational, Path)> = Vec::new();
        for (c, p) in terms {
            match out.iter_mut().find(|(_, q)| *q == p) {
                Some((d, _)) => *d += c,
                None => out.push((c, p)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Relation { terms: out }
    }

    /// Builds a relation from `(coefficient, word)` pairs, words as in [`Path::parse`].
    pub fn from_words(q: &Quiver, terms: &[(i64, &str)]) -> Result<Relation> {
        let terms = terms
            .iter()
            .map(|&(c, w)| Ok((rat(c), Path::parse(q, w)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Relation::new(terms))
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).max().unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn reversed(&self) -> Relation {
        Relation {
            terms: self.terms.iter().map(|(c, p)| (c.clone(), p.reversed())).collect(),
        }
    }
}

/// Quiver plus relations, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Self {
        Presentation { quiver, relations }
    }
}

#[derive(Clone, Debug)]
pub struct ValidateOptions {
    /// Paths longer than this must all vanish.
    pub length_cap: usize,
    /// Upper bound on enumerated paths before giving up.
    pub path_budget: usize,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions {
            length_cap: 64,
            path_budget: 200_000,
        }
    }
}

/// Outcome of the strongly-locally-finite audit performed by validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlfReport {
    /// (I) distinct vertices give non-isomorphic idempotents.
    pub basic: bool,
    /// (II) every `e_i A e_j` is finite dimensional.
    pub finite_hom_spaces: bool,
    /// (III), (IV) finitely many nonzero `e_i A e_j` per row and column.
    pub locally_finite_support: bool,
    /// (V) every `e_i A e_i` is local with nilpotent radical of codimension one.
    pub local_endomorphisms: bool,
    /// `A = ⊕ e_i A e_j`, i.e. the block dimensions add up to the total.
    pub direct_sum: bool,
    /// Paths of this length and longer vanish.
    pub nilpotency_index: usize,
}

impl SlfReport {
    pub fn all_hold(&self) -> bool {
        self.basic
            && self.finite_hom_spaces
            && self.locally_finite_support
            && self.local_endomorphisms
            && self.direct_sum
    }
}

type Sparse = Vec<(usize, Rational)>;

/// A validated finite-dimensional quotient of a path algebra, with a path
/// basis for every `e_i A e_j` and a multiplication table.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    blocks: Vec<Vec<Vec<usize>>>,
    position: Vec<usize>,
    normal_forms: HashMap<Path, Sparse>,
    nilpotency_index: usize,
    products: HashMap<(usize, usize), Sparse>,
    slf: SlfReport,
}

impl PartialEq for PresentedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations
    }
}

impl PresentedAlgebra {
    pub fn validate(quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        Self::validate_with(quiver, relations, &ValidateOptions::default())
    }

    pub fn from_presentation(p: &Presentation) -> Result<Self> {
        Self::validate(p.quiver.clone(), p.relations.clone())
    }

    pub fn validate_with(
        quiver: Quiver,
        relations: Vec<Relation>,
        opts: &ValidateOptions,
    ) -> Result<Self> {
        if quiver.vertex_count() == 0 {
            return Err(Error::EmptyQuiver);
        }
        check_relations(&quiver, &relations)?;
        let reduction = reduce_paths(&quiver, &relations, opts)?;
        let n = quiver.vertex_count();

        let mut basis: Vec<Path> = reduction.basis;
        basis.sort_by(|p, q| {
            (p.source, p.target, p.len(), &p.arrows).cmp(&(q.source, q.target, q.len(), &q.arrows))
        });
        let index: HashMap<&Path, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut blocks = vec![vec![Vec::new(); n]; n];
        let mut position = vec![0; basis.len()];
        for (i, p) in basis.iter().enumerate() {
            let block: &mut Vec<usize> = &mut blocks[p.source][p.target];
            position[i] = block.len();
            block.push(i);
        }
        let normal_forms: HashMap<Path, Sparse> = reduction
            .normal_forms
            .into_iter()
            .map(|(p, nf)| {
                let nf = nf.into_iter().map(|(b, c)| (index[&b], c)).collect();
                (p, nf)
            })
            .collect();

        let mut alg = PresentedAlgebra {
            quiver,
            relations,
            basis,
            blocks,
            position,
            normal_forms,
            nilpotency_index: reduction.nilpotency_index,
            products: HashMap::new(),
            slf: SlfReport {
                basic: false,
                finite_hom_spaces: false,
                locally_finite_support: false,
                local_endomorphisms: false,
                direct_sum: false,
                nilpotency_index: 0,
            },
        };
        let mut products = HashMap::new();
        for (i, p) in alg.basis.iter().enumerate() {
            for (j, q) in alg.basis.iter().enumerate() {
                if let Some(pq) = p.concat(q) {
                    let nf = alg.reduce(&pq);
                    if !nf.is_empty() {
                        products.insert((i, j), nf);
                    }
                }
            }
        }
        alg.products = products;
        alg.slf = alg.audit_slf();
        if !alg.slf.all_hold() {
            return Err(Error::SlfViolation(format!("{:?}", alg.slf)));
        }
        Ok(alg)
    }

    fn audit_slf(&self) -> SlfReport {
        let n = self.vertex_count();
        let labels_distinct = (0..n).all(|i| (0..i).all(|j| self.quiver.label(i) != self.quiver.label(j)));
        let idempotents_in_basis = (0..n).all(|i| {
            self.blocks[i][i]
                .first()
                .is_some_and(|&b| self.basis[b].is_trivial())
        });
        let local = (0..n).all(|i| {
            let block = &self.blocks[i][i];
            let trivial = block.iter().filter(|&&b| self.basis[b].is_trivial()).count();
            let radical_nilpotent = block
                .iter()
                .all(|&b| self.basis[b].is_trivial() || self.basis[b].len() < self.nilpotency_index);
            trivial == 1 && radical_nilpotent
        });
        let total: usize = self
            .blocks
            .iter()
            .flat_map(|row| row.iter().map(Vec::len))
            .sum();
        SlfReport {
            basic: labels_distinct && idempotents_in_basis,
            finite_hom_spaces: true,
            locally_finite_support: self.blocks.len() == n,
            local_endomorphisms: local,
            direct_sum: total == self.basis.len(),
            nilpotency_index: self.nilpotency_index,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn presentation(&self) -> Presentation {
        Presentation::new(self.quiver.clone(), self.relations.clone())
    }

    pub fn slf_report(&self) -> &SlfReport {
        &self.slf
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Global basis indices spanning `e_i A e_j` (paths `i -> j`).
    pub fn block(&self, i: usize, j: usize) -> &[usize] {
        &self.blocks[i][j]
    }

    pub fn block_dim(&self, i: usize, j: usize) -> usize {
        self.blocks[i][j].len()
    }

    /// Position of a global basis element inside its block.
    pub fn position_in_block(&self, b: usize) -> usize {
        self.position[b]
    }

    /// Paths longer than `nilpotency_index - 1` vanish.
    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency_index
    }

    /// Normal form of any path as a sparse combination of basis elements.
    pub fn reduce(&self, p: &Path) -> Vec<(usize, Rational)> {
        if p.len() >= self.nilpotency_index.max(1) && !p.is_trivial() {
            return Vec::new();
        }
        self.normal_forms.get(p).cloned().unwrap_or_default()
    }

    /// Product of two basis elements.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        self.products.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn dim_p(&self, i: usize) -> usize {
        (0..self.vertex_count()).map(|j| self.block_dim(i, j)).sum()
    }

    /// Multiplies `x ∈ e_i A e_j` by `y ∈ e_j A e_k`, both in block coordinates.
    pub fn multiply(&self, i: usize, j: usize, k: usize, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.block_dim(i, k)];
        for (a, xa) in self.blocks[i][j].iter().zip(x) {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in self.blocks[j][k].iter().zip(y) {
                if yb.is_zero() {
                    continue;
                }
                for (c, coef) in self.basis_product(*a, *b) {
                    out[self.position[*c]] += xa * yb * coef;
                }
            }
        }
        out
    }

    /// Block coordinates of the idempotent `e_i` in `e_i A e_i`.
    pub fn idempotent(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.block_dim(i, i)];
        v[0] = Rational::one();
        v
    }

    /// Entry `(i, j)` is the multiplicity of `S(j)` in `P(i)`, i.e. `dim e_i A e_j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        (0..n)
            .map(|i| (0..n).map(|j| self.block_dim(i, j)).collect())
            .collect()
    }

    /// Whether the path `a*b` of two arrows is nonzero in the algebra.
    pub fn arrow_product_nonzero(&self, a: usize, b: usize) -> bool {
        Path::from_arrows(&self.quiver, &[a, b]).is_some_and(|p| !self.reduce(&p).is_empty())
    }

    pub fn is_special_biserial(&self) -> SpecialBiserial {
        let q = &self.quiver;
        let mut violations = Vec::new();
        for v in 0..q.vertex_count() {
            let out = q.arrows_from(v).count();
            let inc = q.arrows_to(v).count();
            if out > 2 {
                violations.push(format!("vertex {} has {out} outgoing arrows", q.label(v)));
            }
            if inc > 2 {
                violations.push(format!("vertex {} has {inc} incoming arrows", q.label(v)));
            }
        }
        for a in 0..q.arrow_count() {
            let after = (0..q.arrow_count())
                .filter(|&b| self.arrow_product_nonzero(a, b))
                .count();
            let before = (0..q.arrow_count())
                .filter(|&c| self.arrow_product_nonzero(c, a))
                .count();
            let name = &q.arrows[a].name;
            if after > 1 {
                violations.push(format!("arrow {name} has {after} nonzero continuations"));
            }
            if before > 1 {
                violations.push(format!("arrow {name} has {before} nonzero predecessors"));
            }
        }
        SpecialBiserial {
            holds: violations.is_empty(),
            violations,
        }
    }

    /// The opposite algebra: arrows and relation paths reversed.
    pub fn opposite(&self) -> Result<PresentedAlgebra> {
        PresentedAlgebra::validate(
            self.quiver.opposite(),
            self.relations.iter().map(Relation::reversed).collect(),
        )
    }

    /// Checks associativity on every basis triple (or `sample` random triples).
    pub fn check_associativity(&self, sample: Option<(usize, u64)>) -> bool {
        use rand::{Rng, SeedableRng};
        let n = self.dim();
        let check = |i: usize, j: usize, k: usize| {
            let left = self.sparse_mul(&self.sparse_mul(&[(i, Rational::one())], &[(j, Rational::one())]), &[(k, Rational::one())]);
            let right = self.sparse_mul(&[(i, Rational::one())], &self.sparse_mul(&[(j, Rational::one())], &[(k, Rational::one())]));
            left == right
        };
        match sample {
            None => (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| check(i, j, k)))),
            Some((count, seed)) => {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                (0..count).all(|_| check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
            }
        }
    }

    /// Product of sparse elements; the result is sorted with no zeros.
    pub fn sparse_mul(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> Vec<(usize, Rational)> {
        let mut acc: HashMap<usize, Rational> = HashMap::new();
        for (a, xa) in x {
            for (b, yb) in y {
                for (c, coef) in self.basis_product(*a, *b) {
                    *acc.entry(*c).or_insert_with(Rational::zero) += xa * yb * coef;
                }
            }
        }
        let mut out: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }
}

impl fmt::Display for PresentedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", to_text(&self.presentation()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialBiserial {
    pub holds: bool,
    pub violations: Vec<String>,
}

fn check_relations(q: &Quiver, rels: &[Relation]) -> Result<()> {
    for (r, rel) in rels.iter().enumerate() {
        if rel.terms.is_empty() {
            return Err(Error::EmptyRelation { relation: r });
        }
        for (_, p) in &rel.terms {
            if Path::from_arrows(q, &p.arrows).as_ref() != Some(p) && !p.is_trivial() {
                return Err(Error::NonComposable {
                    relation: r,
                    term: p.display(q),
                });
            }
            if p.len() < 2 {
                return Err(Error::ShortRelation {
                    relation: r,
                    term: p.display(q),
                    len: p.len(),
                });
            }
        }
        let (s, t) = (rel.source(), rel.target());
        if rel.terms.iter().any(|(_, p)| p.source != s || p.target != t) {
            return Err(Error::MixedEndpoints { relation: r });
        }
    }
    Ok(())
}

struct Reduction {
    basis: Vec<Path>,
    normal_forms: HashMap<Path, Vec<(Path, Rational)>>,
    nilpotency_index: usize,
}

/// All paths, indexed by source then by length.
struct PathTable {
    by_source: Vec<Vec<Vec<Path>>>,
    count: usize,
}

impl PathTable {
    fn new(q: &Quiver) -> Self {
        PathTable {
            by_source: (0..q.vertex_count()).map(|v| vec![vec![Path::trivial(v)]]).collect(),
            count: q.vertex_count(),
        }
    }

    fn extend_to(&mut self, q: &Quiver, len: usize, budget: usize) -> bool {
        for v in 0..q.vertex_count() {
            while self.by_source[v].len() <= len {
                let last = self.by_source[v].last().expect("length zero present");
                let next: Vec<Path> = last
                    .iter()
                    .flat_map(|p| {
                        q.arrows_from(p.target)
                            .map(|a| p.concat(&Path::arrow(q, a)).expect("composable"))
                            .collect::<Vec<_>>()
                    })
                    .collect();
                self.count += next.len();
                self.by_source[v].push(next);
                if self.count > budget {
                    return false;
                }
            }
        }
        true
    }

    /// Paths `s -> t` of length at most `len`.
    fn between(&self, s: usize, t: usize, len: usize) -> Vec<&Path> {
        self.by_source[s]
            .iter()
            .take(len + 1)
            .flatten()
            .filter(|p| p.target == t)
            .collect()
    }
}

/// Column order within a block: longer paths first, so pivots (eliminated
/// paths) are as long as possible and the surviving basis is short.
fn column_order(paths: &mut [&Path]) {
    paths.sort_by(|p, q| q.len().cmp(&p.len()).then_with(|| q.arrows.cmp(&p.arrows)));
}

/// Rows spanning the consequences `p·r·q` of the relations inside block
/// `(s, t)`. With `truncate`, terms longer than `len` are dropped (working
/// modulo paths of length > `len`); otherwise only products whose every term
/// has length <= `len` are taken.
fn consequence_rows(
    q: &Quiver,
    rels: &[Relation],
    table: &PathTable,
    s: usize,
    t: usize,
    len: usize,
    truncate: bool,
    column: &HashMap<&Path, usize>,
) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for rel in rels {
        let bound = if truncate { rel.min_len() } else { rel.max_len() };
        if bound > len {
            continue;
        }
        for left in table.between(s, rel.source(), len - bound) {
            let rest = len - bound - left.len();
            for right in table.between(rel.target(), t, rest) {
                let mut row = vec![Rational::zero(); column.len()];
                let mut any = false;
                for (c, p) in &rel.terms {
                    let full = left.concat(p).and_then(|lp| lp.concat(right)).expect("composable");
                    if full.len() > len {
                        continue;
                    }
                    let col = column[&full];
                    row[col] += c;
                    any = true;
                }
                if any && row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let _ = q;
    rows
}

fn reduce_paths(q: &Quiver, rels: &[Relation], opts: &ValidateOptions) -> Result<Reduction> {
    let n = q.vertex_count();
    let mut table = PathTable::new(q);
    for len in 1..=opts.length_cap {
        if !table.extend_to(q, len, opts.path_budget) {
            return Err(Error::NotFiniteDimensional { cap: len });
        }
        let mut basis = Vec::new();
        let mut normal_forms = HashMap::new();
        let mut top_length_vanishes = true;
        for s in 0..n {
            for t in 0..n {
                let mut cols = table.between(s, t, len);
                if cols.is_empty() {
                    continue;
                }
                column_order(&mut cols);
                let column: HashMap<&Path, usize> =
                    cols.iter().enumerate().map(|(i, p)| (*p, i)).collect();
                let rows = consequence_rows(q, rels, &table, s, t, len, true, &column);
                let (echelon, pivots) = if rows.is_empty() {
                    (Matrix::zeros(0, cols.len()), Vec::new())
                } else {
                    rref(&Matrix::from_rows(rows))
                };
                let mut pivot_row = vec![None; cols.len()];
                for (r, &p) in pivots.iter().enumerate() {
                    pivot_row[p] = Some(r);
                }
                for (c, p) in cols.iter().enumerate() {
                    let nf: Vec<(Path, Rational)> = match pivot_row[c] {
                        None => {
                            basis.push((*p).clone());
                            vec![((*p).clone(), Rational::one())]
                        }
                        Some(r) => (0..cols.len())
                            .filter(|&k| k != c && !echelon[(r, k)].is_zero())
                            .map(|k| (cols[k].clone(), -echelon[(r, k)].clone()))
                            .collect(),
                    };
                    if p.len() == len && !nf.is_empty() {
                        top_length_vanishes = false;
                    }
                    normal_forms.insert((*p).clone(), nf);
                }
            }
        }
        if !top_length_vanishes {
            continue;
        }
        // Paths of length `len` lie in I + J^{len+1}; certify they lie in I.
        certify_vanishing(q, rels, &mut table, len, opts)?;
        normal_forms.retain(|p: &Path, _| p.len() < len);
        return Ok(Reduction {
            basis,
            normal_forms,
            nilpotency_index: len,
        });
    }
    Err(Error::NotFiniteDimensional {
        cap: opts.length_cap,
    })
}

/// Exact check that every path of length `len` lies in the relation ideal,
/// using untruncated consequences of increasing length.
fn certify_vanishing(
    q: &Quiver,
    rels: &[Relation],
    table: &mut PathTable,
    len: usize,
    opts: &ValidateOptions,
) -> Result<()> {
    let n = q.vertex_count();
    for s in 0..n {
        for t in 0..n {
            if table.by_source[s][len].iter().all(|p| p.target != t) {
                continue;
            }
            let mut certified = false;
            for bound in len..=opts.length_cap {
                if !table.extend_to(q, bound, opts.path_budget) {
                    return Err(Error::NotFiniteDimensional { cap: bound });
                }
                let mut cols = table.between(s, t, bound);
                column_order(&mut cols);
                let column: HashMap<&Path, usize> =
                    cols.iter().enumerate().map(|(i, p)| (*p, i)).collect();
                let rows = consequence_rows(q, rels, table, s, t, bound, false, &column);
                if rows.is_empty() {
                    continue;
                }
                let (echelon, pivots) = rref(&Matrix::from_rows(rows));
                let targets: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| p.len() == len)
                    .map(|(i, _)| i)
                    .collect();
                // e_c is in the row space iff c is a pivot whose row is exactly e_c.
                let in_span = |c: usize| {
                    pivots.iter().position(|&p| p == c).is_some_and(|r| {
                        (0..cols.len()).all(|k| k == c || echelon[(r, k)].is_zero())
                    })
                };
                if targets.iter().all(|&c| in_span(c)) {
                    certified = true;
                    break;
                }
            }
            if !certified {
                return Err(Error::NotFiniteDimensional {
                    cap: opts.length_cap,
                });
            }
        }
    }
    Ok(())
}
