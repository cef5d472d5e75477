//! Block algebras of `q(2)` and checks of their projectives against the
//! structure read off the characters.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::functors::find_symmetrizing_form;
use crate::homological::ext;
use crate::quiver::{truncate, Family, PresentedAlgebra, TruncatedFamily};
use crate::rep::Representation;

use super::superalg::{build_q2, ext1_super, SuperModule};

/// The presented algebra of a block, keeping `n` columns of infinite ones.
pub fn synthesize_block(block: Family, n: usize) -> Result<PresentedAlgebra> {
    Ok(truncate(block, n)?.algebra)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCheck {
    pub name: String,
    pub vertex: Option<String>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct BlockReport {
    pub block: Family,
    pub n: usize,
    pub dim: usize,
    pub checks: Vec<BlockCheck>,
}

impl BlockReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BlockCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for BlockReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "block: {} ({})", self.block.letter(), self.block.name())?;
        writeln!(f, "truncation: {}", self.n)?;
        writeln!(f, "dimension: {}", self.dim)?;
        for c in &self.checks {
            let at = c.vertex.as_deref().map(|v| format!(" at {v}")).unwrap_or_default();
            let verdict = if c.passed { "ok" } else { "FAIL" };
            writeln!(f, "{}{at}: {verdict} ({})", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Radical layers of `P(v)` for a stable vertex, as lists of vertex labels.
pub fn expected_layers(t: &TruncatedFamily, v: usize) -> Vec<Vec<String>> {
    let q = t.algebra.quiver();
    let l = |u: usize| q.label(u).to_string();
    match t.family {
        Family::StronglyTypical => vec![vec![l(v)]],
        Family::Typical => vec![vec![l(v)], vec![l(v)]],
        Family::HalfIntegerAtypical => {
            if v == 0 {
                vec![vec![l(0)], vec![l(1)], vec![l(0)]]
            } else {
                vec![vec![l(v)], vec![l(v - 1), l(v + 1)], vec![l(v)]]
            }
        }
        Family::Principal => {
            // Vertices alternate L_k, PiL_k; `twin` swaps the two rows.
            let twin = |u: usize| u ^ 1;
            let col = v / 2;
            match col {
                0 => vec![
                    vec![l(v)],
                    vec![l(twin(v)), l(v + 2)],
                    vec![l(twin(v) + 2), l(twin(v))],
                    vec![l(v)],
                ],
                1 => vec![
                    vec![l(v)],
                    vec![l(twin(v - 2)), l(v + 2)],
                    vec![l(v - 2)],
                    vec![l(v)],
                ],
                _ => vec![vec![l(v)], vec![l(v - 2), l(v + 2)], vec![l(v)]],
            }
        }
    }
}

fn labelled_layers(t: &TruncatedFamily, layers: &[Vec<usize>]) -> Vec<Vec<String>> {
    let q = t.algebra.quiver();
    layers
        .iter()
        .map(|layer| {
            let mut out = Vec::new();
            for (u, &m) in layer.iter().enumerate() {
                out.extend(std::iter::repeat_n(q.label(u).to_string(), m));
            }
            out.sort();
            out
        })
        .collect()
}

fn sorted(mut layers: Vec<Vec<String>>) -> Vec<Vec<String>> {
    for l in &mut layers {
        l.sort();
    }
    layers
}

/// Synthesises the block and checks, for every stable vertex, the length
/// and radical layers of its projective; then symmetry and special
/// biseriality of the whole presentation; that arrow counts equal
/// `dim Ext¹` between simples; and, for the principal block, that the arrow
/// count from `L0` to `PiL0` agrees with the Lie superalgebra computation of
/// `Ext¹(L(0), ΠL(0))`.
pub fn verify_block(block: Family, n: usize, seed: u64) -> Result<BlockReport> {
    let t = truncate(block, n)?;
    let alg = Arc::new(t.algebra.clone());
    let q = alg.quiver();
    let mut checks = Vec::new();
    let mut push = |name: &str, vertex: Option<usize>, passed: bool, detail: String| {
        checks.push(BlockCheck {
            name: name.to_string(),
            vertex: vertex.map(|v| q.label(v).to_string()),
            passed,
            detail,
        });
    };

    for &v in &t.stable {
        let p = Representation::projective(&alg, v);
        let expected = sorted(expected_layers(&t, v));
        let want_len: usize = expected.iter().map(Vec::len).sum();
        push(
            "projective length",
            Some(v),
            p.total_dim() == want_len,
            format!("{} (expected {want_len})", p.total_dim()),
        );
        let got = labelled_layers(&t, &p.loewy_layers());
        push(
            "loewy layers",
            Some(v),
            got == expected,
            format!("{got:?} (expected {expected:?})"),
        );
    }

    if block == Family::StronglyTypical {
        let semisimple = alg.dim() == alg.vertex_count();
        push("semisimple", None, semisimple, format!("dim {}", alg.dim()));
    }

    let sym = find_symmetrizing_form(&alg, seed)?;
    push(
        "symmetric",
        None,
        sym.holds(),
        if sym.holds() {
            "nondegenerate trace form found".into()
        } else {
            format!("{sym:?}")
        },
    );

    let sb = alg.is_special_biserial();
    push(
        "special biserial",
        None,
        sb.holds,
        if sb.holds {
            "holds".into()
        } else {
            sb.violations.join("; ")
        },
    );

    let simples: Vec<Representation> = (0..alg.vertex_count())
        .map(|v| Representation::simple(&alg, v))
        .collect();
    let mut mismatches = Vec::new();
    for (i, si) in simples.iter().enumerate() {
        let res = crate::homological::projective_resolution(si, 2);
        for (j, sj) in simples.iter().enumerate() {
            let e = crate::homological::ext_from_resolution(&res, sj, 1);
            let arrows = q.arrows_between(i, j);
            if e != arrows {
                mismatches.push(format!("{} -> {}: ext {e}, arrows {arrows}", q.label(i), q.label(j)));
            }
        }
    }
    push(
        "ext quiver",
        None,
        mismatches.is_empty(),
        if mismatches.is_empty() {
            "arrow counts equal dim Ext^1 between simples".into()
        } else {
            mismatches.join("; ")
        },
    );

    if block == Family::Principal {
        let g = build_q2();
        let lie = ext1_super(&g, &SuperModule::trivial(&g, false), &SuperModule::trivial(&g, true));
        let (l0, pl0) = (q.vertex("L0").expect("L0"), q.vertex("PiL0").expect("PiL0"));
        let quiver_ext = ext(&simples[l0], &simples[pl0], 1);
        push(
            "ext1 L(0), PiL(0)",
            Some(l0),
            lie == quiver_ext,
            format!("superalgebra {lie}, block algebra {quiver_ext}"),
        );
    }

    Ok(BlockReport {
        block,
        n,
        dim: alg.dim(),
        checks,
    })
}

/// Composition multiplicities of `P(v)`, keyed by vertex label.
pub fn composition_factors(alg: &Arc<PresentedAlgebra>, v: usize) -> BTreeMap<String, usize> {
    let q = alg.quiver();
    (0..alg.vertex_count())
        .filter(|&u| alg.block_dim(v, u) > 0)
        .map(|u| (q.label(u).to_string(), alg.block_dim(v, u)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_blocks() {
        let a = synthesize_block(Family::StronglyTypical, 1).unwrap();
        assert_eq!((a.vertex_count(), a.quiver().arrow_count(), a.dim()), (1, 0, 1));
        let b = synthesize_block(Family::Typical, 1).unwrap();
        assert_eq!(b.dim(), 2);
        for f in [Family::StronglyTypical, Family::Typical] {
            let r = verify_block(f, 1, 0).unwrap();
            assert!(r.all_pass(), "{r}");
        }
    }

    #[test]
    fn half_integer_block() {
        let r = verify_block(Family::HalfIntegerAtypical, 6, 1).unwrap();
        assert!(r.all_pass(), "{r}");
        let t = truncate(Family::HalfIntegerAtypical, 6).unwrap();
        assert_eq!(
            expected_layers(&t, 0),
            vec![vec!["L1/2".to_string()], vec!["L3/2".into()], vec!["L1/2".into()]]
        );
    }

    #[test]
    fn principal_block() {
        let r = verify_block(Family::Principal, 4, 2).unwrap();
        assert!(r.all_pass(), "{r}");
        assert!(r.checks.iter().any(|c| c.name.starts_with("ext1")));
        let alg = Arc::new(synthesize_block(Family::Principal, 4).unwrap());
        let f = composition_factors(&alg, alg.quiver().vertex("L1").unwrap());
        assert_eq!(f.values().sum::<usize>(), 5);
        assert_eq!(f["L1"], 2);
    }
}
