//! Plain-text representation format.
//!
//! ```text
//! dims 1 2
//! arrow a
//! 1
//! 0
//! arrow b
//! 0 1/2
//! ```
//!
//! `dims` lists one dimension per vertex in declaration order; each
//! `arrow <name>` line is followed by the rows of its matrix (as many rows as
//! the target dimension). Arrows that act between zero spaces may be omitted.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::linalg::{fmt_rational, parse_rational, Matrix};

use super::{Algebra, Representation};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_representation(alg: &Algebra, input: &str) -> Result<Representation> {
    let q = alg.quiver();
    let lines: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut it = lines.into_iter().peekable();
    let (line, first) = it.next().ok_or_else(|| err(0, "empty representation"))?;
    let dims: Vec<usize> = first
        .strip_prefix("dims")
        .ok_or_else(|| err(line, "expected `dims ...`"))?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| err(line, format!("bad dimension `{t}`"))))
        .collect::<Result<_>>()?;
    if dims.len() != q.vertex_count() {
        return Err(err(line, format!("expected {} dimensions", q.vertex_count())));
    }
    let mut maps: Vec<Option<Matrix>> = vec![None; q.arrow_count()];
    while let Some((line, header)) = it.next() {
        let name = header
            .strip_prefix("arrow")
            .map(str::trim)
            .ok_or_else(|| err(line, "expected `arrow <name>`"))?;
        let a = q.arrow(name).ok_or_else(|| Error::UnknownArrow(name.to_string()))?;
        let arrow = &q.arrows()[a];
        let (rows, cols) = (dims[arrow.target], dims[arrow.source]);
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            let (line, text) = it
                .next()
                .ok_or_else(|| err(line, format!("arrow `{name}` needs {rows} rows")))?;
            let entries: Vec<&str> = text.split_whitespace().collect();
            if entries.len() != cols {
                return Err(err(line, format!("expected {cols} entries")));
            }
            for (c, e) in entries.iter().enumerate() {
                m[(r, c)] = parse_rational(e).ok_or_else(|| err(line, format!("bad entry `{e}`")))?;
            }
        }
        if maps[a].replace(m).is_some() {
            return Err(err(line, format!("arrow `{name}` given twice")));
        }
    }
    let maps = maps
        .into_iter()
        .zip(q.arrows())
        .map(|(m, arrow)| match m {
            Some(m) => Ok(m),
            None if dims[arrow.target] == 0 || dims[arrow.source] == 0 => {
                Ok(Matrix::zeros(dims[arrow.target], dims[arrow.source]))
            }
            None => Err(err(0, format!("missing matrix for arrow `{}`", arrow.name))),
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(alg.clone(), dims, maps)
}

pub fn representation_to_text(rep: &Representation) -> String {
    let q = rep.algebra().quiver();
    let mut out = String::from("dims");
    for d in rep.dims() {
        write!(out, " {d}").unwrap();
    }
    out.push('\n');
    for (a, arrow) in q.arrows().iter().enumerate() {
        let m = rep.arrow_map(a);
        if m.rows() == 0 || m.cols() == 0 {
            continue;
        }
        writeln!(out, "arrow {}", arrow.name).unwrap();
        for r in 0..m.rows() {
            let row: Vec<String> = m.row(r).iter().map(fmt_rational).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::sl2_o0;

    #[test]
    fn round_trip_projective() {
        let alg = Arc::new(sl2_o0());
        for v in 0..2 {
            for rep in [Representation::projective(&alg, v), Representation::injective(&alg, v)] {
                let text = representation_to_text(&rep);
                assert_eq!(parse_representation(&alg, &text).unwrap(), rep);
            }
        }
    }

    #[test]
    fn rejects_relation_violation() {
        let alg = Arc::new(sl2_o0());
        let text = "dims 1 1\narrow a\n1\narrow b\n1\n";
        assert!(matches!(
            parse_representation(&alg, text),
            Err(Error::RelationViolated(0))
        ));
        let ok = "dims 1 1\narrow a\n1\narrow b\n0\n";
        assert!(parse_representation(&alg, ok).is_ok());
        assert!(parse_representation(&alg, "dims 1\n").is_err());
        assert!(parse_representation(&alg, "dims 1 1\narrow a\n1/0\n").is_err());
    }
}
