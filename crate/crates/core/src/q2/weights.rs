//! Highest weights of `q(2)`, block routing, and `gl(2)` character
//! bookkeeping for induced modules.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{fmt_rational, rat, ratio, Rational};
use crate::quiver::Family;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub l1: Rational,
    pub l2: Rational,
}

impl Weight {
    pub fn new(l1: Rational, l2: Rational) -> Self {
        Weight { l1, l2 }
    }

    pub fn zero() -> Self {
        Weight::new(rat(0), rat(0))
    }

    /// `λ^k = (k, -k)`.
    pub fn atypical(k: &Rational) -> Self {
        Weight::new(k.clone(), -k.clone())
    }

    pub fn difference(&self) -> Rational {
        &self.l1 - &self.l2
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(&self.l1 + &other.l1, &self.l2 + &other.l2)
    }

    /// Highest weight of a finite-dimensional simple `q(2)`-module:
    /// `λ = 0` or `λ1 - λ2` a positive integer.
    pub fn is_dominant(&self) -> bool {
        let d = self.difference();
        (self.l1.is_zero() && self.l2.is_zero()) || (d.is_integer() && d.is_positive())
    }

    /// Highest weight of a finite-dimensional simple `gl(2)`-module.
    pub fn is_gl2_dominant(&self) -> bool {
        let d = self.difference();
        d.is_integer() && !d.is_negative()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_rational(&self.l1), fmt_rational(&self.l2))
    }
}

/// How a dominant weight is routed to a block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightClass {
    pub typical: bool,
    /// `L(λ) ≅ ΠL(λ)`: exactly one coordinate is zero.
    pub parity_self_dual: bool,
    pub block: Family,
    /// `k` with `λ = (k, -k)` for atypical weights.
    pub atypical_k: Option<Rational>,
    /// The strong-typicality split uses a heuristic criterion.
    pub heuristic: bool,
}

/// Atypical iff `λ1 + λ2 = 0`. Atypical weights go to the half-integer or
/// principal block according to `k`. Among typical weights, `λ1 λ2 ≠ 0` is
/// taken to mean strongly typical; this criterion is a heuristic and is
/// flagged as such in the result.
pub fn classify_weight(w: &Weight) -> Result<WeightClass> {
    if !w.is_dominant() {
        return Err(Error::NonDominantWeight(fmt_rational(&w.l1), fmt_rational(&w.l2)));
    }
    let parity_self_dual = w.l1.is_zero() != w.l2.is_zero();
    if (&w.l1 + &w.l2).is_zero() {
        let k = w.l1.clone();
        let block = if k.is_integer() {
            Family::Principal
        } else {
            Family::HalfIntegerAtypical
        };
        return Ok(WeightClass {
            typical: false,
            parity_self_dual,
            block,
            atypical_k: Some(k),
            heuristic: false,
        });
    }
    let block = if (&w.l1 * &w.l2).is_zero() {
        Family::Typical
    } else {
        Family::StronglyTypical
    };
    Ok(WeightClass {
        typical: true,
        parity_self_dual,
        block,
        atypical_k: None,
        heuristic: true,
    })
}

/// A `gl(2)`-character: weights with integer multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GlCharacter {
    pub weights: BTreeMap<Weight, i64>,
}

impl GlCharacter {
    pub fn zero() -> Self {
        GlCharacter::default()
    }

    pub fn from_weights<I: IntoIterator<Item = (Weight, i64)>>(items: I) -> Self {
        let mut c = GlCharacter::zero();
        for (w, m) in items {
            c.add_weight(w, m);
        }
        c
    }

    pub fn add_weight(&mut self, w: Weight, m: i64) {
        let e = self.weights.entry(w.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.weights.remove(&w);
        }
    }

    /// Character of the simple module `N(μ)`: weights `(μ1 - j, μ2 + j)`
    /// for `j = 0..=μ1-μ2`.
    pub fn irreducible(mu: &Weight) -> Result<Self> {
        if !mu.is_gl2_dominant() {
            return Err(Error::NonDominantWeight(fmt_rational(&mu.l1), fmt_rational(&mu.l2)));
        }
        let steps = mu.difference().to_integer().to_i64().expect("small weight");
        Ok(GlCharacter::from_weights((0..=steps).map(|j| {
            (Weight::new(&mu.l1 - rat(j), &mu.l2 + rat(j)), 1)
        })))
    }

    pub fn dim(&self) -> i64 {
        self.weights.values().sum()
    }

    pub fn plus(&self, other: &GlCharacter) -> GlCharacter {
        let mut out = self.clone();
        for (w, &m) in &other.weights {
            out.add_weight(w.clone(), m);
        }
        out
    }

    pub fn times(&self, k: i64) -> GlCharacter {
        GlCharacter::from_weights(self.weights.iter().map(|(w, &m)| (w.clone(), m * k)))
    }

    /// Character of the tensor product: convolution of weight multisets.
    pub fn tensor(&self, other: &GlCharacter) -> GlCharacter {
        let mut out = GlCharacter::zero();
        for (w1, &m1) in &self.weights {
            for (w2, &m2) in &other.weights {
                out.add_weight(w1.add(w2), m1 * m2);
            }
        }
        out
    }

    /// Halves every multiplicity, or `None` if one is odd.
    pub fn halve(&self) -> Option<GlCharacter> {
        if self.weights.values().any(|m| m % 2 != 0) {
            return None;
        }
        Some(GlCharacter::from_weights(
            self.weights.iter().map(|(w, &m)| (w.clone(), m / 2)),
        ))
    }

    /// Splits into simple characters by repeatedly removing `N(μ)` for a
    /// remaining weight `μ` with the largest `μ1 - μ2`.
    pub fn decompose(&self) -> Result<Vec<(Weight, i64)>> {
        let mut rest = self.clone();
        let mut out: Vec<(Weight, i64)> = Vec::new();
        while let Some((mu, &m)) = rest.weights.iter().max_by(|a, b| {
            a.0.difference()
                .cmp(&b.0.difference())
                .then_with(|| b.0.cmp(a.0))
        }) {
            let mu = mu.clone();
            if m < 0 {
                return Err(Error::NegativeMultiplicity(format!("weight {mu} has multiplicity {m}")));
            }
            if !mu.is_gl2_dominant() {
                return Err(Error::NonDominantWeight(fmt_rational(&mu.l1), fmt_rational(&mu.l2)));
            }
            rest = rest.plus(&GlCharacter::irreducible(&mu)?.times(-m));
            out.push((mu, m));
        }
        out.sort();
        Ok(out)
    }
}

/// Decomposition of `c1 ⊗ c2` into simple `gl(2)`-characters.
pub fn tensor_decompose(c1: &GlCharacter, c2: &GlCharacter) -> Result<Vec<(Weight, i64)>> {
    c1.tensor(c2).decompose()
}

/// A `gl(2)`-character of a super vector space, split by parity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterVector {
    pub even: GlCharacter,
    pub odd: GlCharacter,
}

impl CharacterVector {
    pub fn dim(&self) -> i64 {
        self.even.dim() + self.odd.dim()
    }

    /// Tensor with a purely even character.
    pub fn tensor_even(&self, c: &GlCharacter) -> CharacterVector {
        CharacterVector {
            even: self.even.tensor(c),
            odd: self.odd.tensor(c),
        }
    }

    pub fn halve(&self) -> Option<CharacterVector> {
        Some(CharacterVector {
            even: self.even.halve()?,
            odd: self.odd.halve()?,
        })
    }
}

/// Weights of the odd basis `ē11, ē12, ē21, ē22` under the adjoint action of
/// the diagonal torus: `ē_ij` has weight `ε_i - ε_j`.
pub fn odd_part_weights() -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let mut w = [rat(0), rat(0)];
            w[i] += rat(1);
            w[j] -= rat(1);
            let [a, b] = w;
            out.push(Weight::new(a, b));
        }
    }
    out
}

/// Character of `∧g₁` under the adjoint action of `g₀ = gl(2)`; `∧^j` sits
/// in parity `j mod 2`.
pub fn wedge_g1_character() -> CharacterVector {
    let ws = odd_part_weights();
    let mut out = CharacterVector::default();
    for subset in 0u32..(1 << ws.len()) {
        let mut w = Weight::zero();
        for (b, x) in ws.iter().enumerate() {
            if subset & (1 << b) != 0 {
                w = w.add(x);
            }
        }
        if subset.count_ones() % 2 == 0 {
            out.even.add_weight(w, 1);
        } else {
            out.odd.add_weight(w, 1);
        }
    }
    out
}

/// What the character of `Ind N(λ^k) = ∧g₁ ⊗ N(λ^k)` says about `P(λ^k)`.
#[derive(Clone, Debug)]
pub struct InducedData {
    pub k: Rational,
    pub induced: CharacterVector,
    /// `Ind N(λ^k)` for `k = 0`, and half of it when `Ind ≅ P ⊕ ΠP`.
    pub projective: CharacterVector,
    pub even_decomposition: Vec<(Weight, i64)>,
    pub odd_decomposition: Vec<(Weight, i64)>,
    /// Composition length of `P(λ^k)`.
    pub length: i64,
}

impl InducedData {
    pub fn dim(&self) -> i64 {
        self.induced.dim()
    }
}

/// Character data for `P(λ^k)`, `k ∈ {0, 1/2, 1, ...}`.
///
/// Each simple `L(λ^j)` with `j > 0` has even and odd parts both equal to
/// `N(λ^j)` as `gl(2)`-modules, while `L(0)` and `ΠL(0)` are one-dimensional
/// of a single parity. So a summand `N(λ^j)`, `j > 0`, of the even part
/// accounts for one composition factor, and every `N(0)` in either part
/// accounts for one more.
pub fn induced_character(k: &Rational) -> Result<InducedData> {
    let two_k = k * rat(2);
    if k.is_negative() || !two_k.is_integer() {
        return Err(Error::Invalid(format!(
            "k must be a non-negative half-integer, got {}",
            fmt_rational(k)
        )));
    }
    let n = GlCharacter::irreducible(&Weight::atypical(k))?;
    let induced = wedge_g1_character().tensor_even(&n);
    let projective = if k.is_zero() {
        induced.clone()
    } else {
        induced
            .halve()
            .ok_or_else(|| Error::Invalid("induced character is not divisible by two".into()))?
    };
    let even_decomposition = projective.even.decompose()?;
    let odd_decomposition = projective.odd.decompose()?;
    let zero = Weight::zero();
    let count_zero = |d: &[(Weight, i64)]| d.iter().filter(|(w, _)| *w == zero).map(|(_, m)| m).sum::<i64>();
    let length = even_decomposition
        .iter()
        .filter(|(w, _)| *w != zero)
        .map(|(_, m)| m)
        .sum::<i64>()
        + count_zero(&even_decomposition)
        + count_zero(&odd_decomposition);
    Ok(InducedData {
        k: k.clone(),
        induced,
        projective,
        even_decomposition,
        odd_decomposition,
        length,
    })
}

/// `k` as a rational from its double: `half(3) = 3/2`.
pub fn half(two_k: i64) -> Rational {
    ratio(two_k, 2)
}

/// Expected composition length of `P(λ^k)`, read from the block diagrams.
pub fn expected_projective_length(k: &Rational) -> i64 {
    if k.is_zero() {
        6
    } else if *k == Rational::one() {
        5
    } else if *k == half(1) {
        3
    } else {
        4
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64) -> Weight {
        Weight::new(rat(a), rat(b))
    }

    #[test]
    fn classification_examples() {
        let c = classify_weight(&w(1, -1)).unwrap();
        assert!(!c.typical && !c.parity_self_dual);
        assert_eq!(c.block, Family::Principal);

        let c = classify_weight(&Weight::atypical(&half(1))).unwrap();
        assert!(!c.typical);
        assert_eq!(c.block, Family::HalfIntegerAtypical);

        let c = classify_weight(&w(3, 0)).unwrap();
        assert!(c.typical && c.parity_self_dual);
        assert_eq!(c.block, Family::Typical);

        let c = classify_weight(&w(3, 1)).unwrap();
        assert!(c.typical && c.heuristic);
        assert_eq!(c.block, Family::StronglyTypical);

        let c = classify_weight(&Weight::zero()).unwrap();
        assert!(!c.parity_self_dual);
        assert_eq!(c.block, Family::Principal);
    }

    #[test]
    fn non_dominant_weights_are_rejected() {
        assert!(classify_weight(&w(0, 1)).is_err());
        assert!(classify_weight(&w(2, 2)).is_err());
        assert!(classify_weight(&Weight::new(half(1), rat(0))).is_err());
    }

    #[test]
    fn irreducible_dimensions() {
        for two_k in 0..10 {
            let n = GlCharacter::irreducible(&Weight::atypical(&half(two_k))).unwrap();
            assert_eq!(n.dim(), two_k + 1);
        }
        assert!(GlCharacter::irreducible(&w(0, 1)).is_err());
    }

    #[test]
    fn clebsch_gordan() {
        let n1 = GlCharacter::irreducible(&w(1, -1)).unwrap();
        let d = tensor_decompose(&n1, &n1).unwrap();
        assert_eq!(d, vec![(w(0, 0), 1), (w(1, -1), 1), (w(2, -2), 1)]);
        let unit = GlCharacter::irreducible(&Weight::zero()).unwrap();
        assert_eq!(unit.tensor(&n1), n1);
    }

    #[test]
    fn negative_multiplicity_is_reported() {
        let bad = GlCharacter::from_weights([(w(1, -1), 1)]);
        assert!(matches!(bad.decompose(), Err(Error::NegativeMultiplicity(_))));
    }

    #[test]
    fn wedge_character() {
        let c = wedge_g1_character();
        assert_eq!(c.dim(), 16);
        assert_eq!(c.even.dim(), 8);
        assert_eq!(c.even, c.odd);
        assert_eq!(c.even.decompose().unwrap(), vec![(Weight::zero(), 2), (w(1, -1), 2)]);
    }

    #[test]
    fn projective_lengths() {
        for (two_k, len) in [(0, 6), (1, 3), (2, 5), (3, 4), (4, 4), (5, 4), (6, 4)] {
            let k = half(two_k);
            let d = induced_character(&k).unwrap();
            assert_eq!(d.dim(), 16 * (two_k + 1), "k = {two_k}/2");
            assert_eq!(d.induced.even.dim(), d.induced.odd.dim());
            assert_eq!(d.length, len, "k = {two_k}/2");
            assert_eq!(d.length, expected_projective_length(&k));
        }
    }

    #[test]
    fn half_integer_even_part() {
        let d = induced_character(&half(1)).unwrap();
        let a = Weight::atypical(&half(1));
        let b = Weight::atypical(&half(3));
        assert_eq!(d.even_decomposition, vec![(a, 2), (b, 1)]);
    }

    #[test]
    fn invalid_k() {
        assert!(induced_character(&ratio(1, 3)).is_err());
        assert!(induced_character(&rat(-1)).is_err());
    }
}
