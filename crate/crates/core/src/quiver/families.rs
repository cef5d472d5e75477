//! The four block presentations of finite-dimensional q(2)-modules, with
//! finite truncations of the two infinite ones, plus two small test algebras.
//!
//! Family (c) has vertices `L1/2, L3/2, ...` joined by `a_k: k -> k+1` and
//! `b_k: k+1 -> k`. Family (d) has two rows `L0, L1, ...` and
//! `PiL0, PiL1, ...`; primed arrows live in the `Pi` row, and `h`, `c`, `d`
//! connect the first two columns. Relations are written left to right, so
//! the diagram relation `chd = ba` (read right to left) becomes
//! `d*h'*c = a1*b1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{PresentedAlgebra, Quiver, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// (a) a single vertex, semisimple.
    StronglyTypical,
    /// (b) one loop with `a^2 = 0`.
    Typical,
    /// (c) the infinite zigzag of a half-integer atypical block.
    HalfIntegerAtypical,
    /// (d) the two-row quiver of the principal block.
    Principal,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::StronglyTypical,
        Family::Typical,
        Family::HalfIntegerAtypical,
        Family::Principal,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::StronglyTypical => 'a',
            Family::Typical => 'b',
            Family::HalfIntegerAtypical => 'c',
            Family::Principal => 'd',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::StronglyTypical => "strongly-typical",
            Family::Typical => "typical",
            Family::HalfIntegerAtypical => "half-integer-atypical",
            Family::Principal => "principal",
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Family::HalfIntegerAtypical | Family::Principal)
    }

    /// Smallest truncation level accepted by [`truncate`].
    pub fn min_truncation(self) -> usize {
        match self {
            Family::StronglyTypical | Family::Typical => 1,
            Family::HalfIntegerAtypical => 2,
            Family::Principal => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "a" | "strongly-typical" => Ok(Family::StronglyTypical),
            "b" | "typical" => Ok(Family::Typical),
            "c" | "half-integer" | "half-integer-atypical" => Ok(Family::HalfIntegerAtypical),
            "d" | "principal" => Ok(Family::Principal),
            _ => Err(Error::Invalid(format!(
                "unknown block `{s}` (expected a, b, c, d or a block name)"
            ))),
        }
    }
}

/// A finite piece of one of the block quivers.
#[derive(Clone, Debug)]
pub struct TruncatedFamily {
    pub family: Family,
    pub n: usize,
    pub algebra: PresentedAlgebra,
    /// Vertices far enough from the cut that their projectives agree with
    /// those of the untruncated algebra.
    pub stable: Vec<usize>,
}

impl TruncatedFamily {
    /// Column of a vertex in the diagram; the first column is 0.
    pub fn column(&self, v: usize) -> usize {
        match self.family {
            Family::Principal => v / 2,
            Family::HalfIntegerAtypical => v,
            _ => 0,
        }
    }

    pub fn is_stable(&self, v: usize) -> bool {
        self.stable.contains(&v)
    }
}

/// Label of the `k`-th vertex (0-based) in family (c): `L{2k+1}/2`.
pub fn half_integer_label(k: usize) -> String {
    format!("L{}/2", 2 * k + 1)
}

/// Builds the presentation for `family`, keeping `n` columns of the infinite
/// ones. The finite families ignore `n`.
pub fn truncate(family: Family, n: usize) -> Result<TruncatedFamily> {
    if family.is_infinite() && n < family.min_truncation() {
        return Err(Error::TruncationTooSmall {
            family: family.letter().to_string(),
            n,
            min: family.min_truncation(),
        });
    }
    let (quiver, relations) = match family {
        Family::StronglyTypical => {
            let mut q = Quiver::new();
            q.add_vertex("L")?;
            (q, Vec::new())
        }
        Family::Typical => {
            let mut q = Quiver::new();
            q.add_vertex("L")?;
            q.connect("a", "L", "L")?;
            let r = Relation::from_words(&q, &[(1, "a*a")])?;
            (q, vec![r])
        }
        Family::HalfIntegerAtypical => half_integer(n)?,
        Family::Principal => principal(n)?,
    };
    let algebra = PresentedAlgebra::validate(quiver, relations)?;
    let count = algebra.vertex_count();
    let mut t = TruncatedFamily {
        family,
        n,
        algebra,
        stable: Vec::new(),
    };
    t.stable = if family.is_infinite() {
        (0..count).filter(|&v| t.column(v) + 3 <= n).collect()
    } else {
        (0..count).collect()
    };
    Ok(t)
}

fn half_integer(n: usize) -> Result<(Quiver, Vec<Relation>)> {
    let mut q = Quiver::new();
    for k in 0..n {
        q.add_vertex(&half_integer_label(k))?;
    }
    for k in 1..n {
        q.add_arrow(&format!("a{k}"), k - 1, k)?;
        q.add_arrow(&format!("b{k}"), k, k - 1)?;
    }
    let mut rels = Vec::new();
    let word = |parts: &[String]| parts.join("*");
    for k in 1..n - 1 {
        let (a, a1) = (format!("a{k}"), format!("a{}", k + 1));
        let (b, b1) = (format!("b{k}"), format!("b{}", k + 1));
        rels.push(Relation::from_words(&q, &[(1, &word(&[a.clone(), a1]))])?);
        rels.push(Relation::from_words(&q, &[(1, &word(&[b1, b.clone()]))])?);
        // At vertex k+1 (1-based): a_{k+1} b_{k+1} = b_k a_k.
        let next_a = format!("a{}", k + 1);
        let next_b = format!("b{}", k + 1);
        rels.push(Relation::from_words(
            &q,
            &[(1, &word(&[next_a, next_b])), (-1, &word(&[b, a]))],
        )?);
    }
    if n == 2 {
        // With no right neighbour the square a1*b1 would otherwise survive
        // multiplication on both sides; in the infinite algebra it lies in
        // the socle of P(L1/2).
        rels.push(Relation::from_words(&q, &[(1, "a1*b1*a1")])?);
        rels.push(Relation::from_words(&q, &[(1, "b1*a1*b1")])?);
    }
    Ok((q, rels))
}

fn principal(n: usize) -> Result<(Quiver, Vec<Relation>)> {
    let mut q = Quiver::new();
    for k in 0..n {
        q.add_vertex(&format!("L{k}"))?;
        q.add_vertex(&format!("PiL{k}"))?;
    }
    q.connect("h", "L0", "PiL0")?;
    q.connect("h'", "PiL0", "L0")?;
    q.connect("c", "L0", "L1")?;
    q.connect("c'", "PiL0", "PiL1")?;
    q.connect("d", "L1", "PiL0")?;
    q.connect("d'", "PiL1", "L0")?;
    for row in ["", "Pi"] {
        let p = if row.is_empty() { "" } else { "'" };
        for k in 1..n - 1 {
            q.connect(&format!("a{k}{p}"), &format!("{row}L{k}"), &format!("{row}L{}", k + 1))?;
            q.connect(&format!("b{k}{p}"), &format!("{row}L{}", k + 1), &format!("{row}L{k}"))?;
        }
    }
    let rel = |terms: &[(i64, &str)]| Relation::from_words(&q, terms);
    let mut rels = vec![
        rel(&[(1, "h*h'")])?,
        rel(&[(1, "h'*h")])?,
        rel(&[(1, "d*c'")])?,
        rel(&[(1, "d'*c")])?,
        rel(&[(1, "h*c'*d'"), (-1, "c*d*h'")])?,
        rel(&[(1, "h'*c*d"), (-1, "c'*d'*h")])?,
    ];
    rels.extend([
        rel(&[(1, "c*a1")])?,
        rel(&[(1, "c'*a1'")])?,
        rel(&[(1, "b1*d")])?,
        rel(&[(1, "b1'*d'")])?,
        rel(&[(1, "d*h'*c"), (-1, "a1*b1")])?,
        rel(&[(1, "d'*h*c'"), (-1, "a1'*b1'")])?,
    ]);
    for p in ["", "'"] {
        for k in 1..n.saturating_sub(2) {
            let (a, a1) = (format!("a{k}{p}"), format!("a{}{p}", k + 1));
            let (b, b1) = (format!("b{k}{p}"), format!("b{}{p}", k + 1));
            rels.push(rel(&[(1, &format!("{a}*{a1}"))])?);
            rels.push(rel(&[(1, &format!("{b1}*{b}"))])?);
            rels.push(rel(&[(1, &format!("{a1}*{b1}")), (-1, &format!("{b}*{a}"))])?);
        }
    }
    Ok((q, rels))
}

/// Desk-scale stand-in for the principal block of category O for sl2:
/// `a: 1 -> 2`, `b: 2 -> 1`, `a*b = 0`. Only `P(2)` is projective-injective.
pub fn sl2_o0() -> PresentedAlgebra {
    let mut q = Quiver::new();
    q.add_vertex("1").expect("fresh");
    q.add_vertex("2").expect("fresh");
    q.connect("a", "1", "2").expect("declared");
    q.connect("b", "2", "1").expect("declared");
    let r = Relation::from_words(&q, &[(1, "a*b")]).expect("composable");
    PresentedAlgebra::validate(q, vec![r]).expect("finite dimensional")
}

/// Path algebra of `1 -> 2`.
pub fn a2() -> PresentedAlgebra {
    let mut q = Quiver::new();
    q.add_vertex("1").expect("fresh");
    q.add_vertex("2").expect("fresh");
    q.connect("a", "1", "2").expect("declared");
    PresentedAlgebra::validate(q, Vec::new()).expect("finite dimensional")
}
