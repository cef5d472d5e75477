//! Line-oriented presentation format and DOT output.
//!
//! ```text
//! # comment
//! vertex 1
//! vertex 2
//! arrow a: 1 -> 2
//! arrow b: 2 -> 1
//! relation +1 a*b = 0
//! relation +1 a*b*a -1/2 a*b*a = 0
//! ```
//!
//! A relation lists signed rational coefficients each followed by a path;
//! paths are arrow names joined by `*` and read left to right.

use std::fmt::Write;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::linalg::{fmt_rational, parse_rational};

use super::{Path, Presentation, Quiver, Relation};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_presentation(input: &str) -> Result<Presentation> {
    let mut quiver = Quiver::new();
    let mut relations = Vec::new();
    let mut statements = 0;
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        statements += 1;
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "vertex" => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(parse_err(line_no, "expected `vertex <label>`"));
                }
                quiver.add_vertex(rest)?;
            }
            "arrow" => {
                let (name, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| parse_err(line_no, "expected `arrow <name>: <src> -> <tgt>`"))?;
                let (src, tgt) = ends
                    .split_once("->")
                    .ok_or_else(|| parse_err(line_no, "missing `->`"))?;
                quiver.connect(name.trim(), src.trim(), tgt.trim())?;
            }
            "relation" => relations.push(parse_relation(&quiver, rest, line_no)?),
            other => return Err(parse_err(line_no, format!("unknown statement `{other}`"))),
        }
    }
    if statements == 0 {
        return Err(parse_err(0, "empty presentation"));
    }
    Ok(Presentation::new(quiver, relations))
}

fn parse_relation(q: &Quiver, text: &str, line: usize) -> Result<Relation> {
    let lhs = text
        .strip_suffix("= 0")
        .or_else(|| text.strip_suffix("=0"))
        .ok_or_else(|| parse_err(line, "relation must end with `= 0`"))?;
    let tokens: Vec<&str> = lhs.split_whitespace().collect();
    if tokens.is_empty() || !tokens.len().is_multiple_of(2) {
        return Err(parse_err(line, "expected coefficient/path pairs"));
    }
    let mut terms = Vec::new();
    for pair in tokens.chunks(2) {
        if !pair[0].starts_with(['+', '-']) {
            return Err(parse_err(line, format!("coefficient `{}` needs a sign", pair[0])));
        }
        let coef = parse_rational(pair[0])
            .ok_or_else(|| parse_err(line, format!("bad coefficient `{}`", pair[0])))?;
        let ids = pair[1]
            .split('*')
            .map(|name| q.arrow(name).ok_or_else(|| Error::UnknownArrow(name.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let path = Path::from_arrows(q, &ids).ok_or_else(|| Error::NonComposable {
            relation: line,
            term: pair[1].to_string(),
        })?;
        terms.push((coef, path));
    }
    let rel = Relation::new(terms);
    if rel.terms.is_empty() {
        return Err(Error::EmptyRelation { relation: line });
    }
    Ok(rel)
}

pub fn to_text(p: &Presentation) -> String {
    let q = &p.quiver;
    let mut out = String::new();
    for v in q.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for a in q.arrows() {
        writeln!(out, "arrow {}: {} -> {}", a.name, q.label(a.source), q.label(a.target)).unwrap();
    }
    for r in &p.relations {
        out.push_str("relation");
        for (c, path) in &r.terms {
            let sign = if c.is_negative() { "" } else { "+" };
            write!(out, " {sign}{} {}", fmt_rational(c), path.display(q)).unwrap();
        }
        out.push_str(" = 0\n");
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering; relations are kept as `//` comments.
pub fn to_dot(p: &Presentation) -> String {
    let q = &p.quiver;
    let mut out = String::from("digraph quiver {\n");
    for v in q.vertices() {
        writeln!(out, "  {};", quote(v)).unwrap();
    }
    for a in q.arrows() {
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(q.label(a.source)),
            quote(q.label(a.target)),
            quote(&a.name)
        )
        .unwrap();
    }
    for line in to_text(&Presentation::new(q.clone(), p.relations.clone())).lines() {
        if line.starts_with("relation") {
            writeln!(out, "  // {line}").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Reads back the vertices and arrows of a graph written by [`to_dot`].
pub fn parse_dot(input: &str) -> Result<Quiver> {
    let mut q = Quiver::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with("//") || line.starts_with("digraph") || line == "}" {
            continue;
        }
        let mut rest = line;
        let mut ids = Vec::new();
        while let Some(start) = rest.find('"') {
            let (id, after) = read_quoted(&rest[start + 1..])
                .ok_or_else(|| parse_err(line_no, "unterminated string"))?;
            ids.push(id);
            rest = after;
        }
        match (ids.len(), line.contains("->")) {
            (1, false) => {
                q.add_vertex(&ids[0])?;
            }
            (3, true) => {
                q.connect(&ids[2], &ids[0], &ids[1])?;
            }
            _ => return Err(parse_err(line_no, format!("unrecognised DOT line `{line}`"))),
        }
    }
    Ok(q)
}

fn read_quoted(s: &str) -> Option<(String, &str)> {
    let mut out = String::new();
    let mut chars = s.char_indices();
    while let Some((i, c)) = chars.next() {
        match c {
            '\\' => out.push(chars.next()?.1),
            '"' => return Some((out, &s[i + 1..])),
            _ => out.push(c),
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# two-cycle
vertex 1
vertex 2
arrow a: 1 -> 2
arrow b: 2 -> 1   # back
relation +1 a*b = 0
relation +2/3 b*a*b -1 b*a*b*a*b = 0
";

    #[test]
    fn parse_and_print_round_trip() {
        let p = parse_presentation(SAMPLE).unwrap();
        assert_eq!(p.quiver.vertex_count(), 2);
        assert_eq!(p.relations.len(), 2);
        let printed = to_text(&p);
        assert!(printed.contains("relation +2/3 b*a*b -1 b*a*b*a*b = 0"));
        assert_eq!(parse_presentation(&printed).unwrap(), p);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(parse_presentation(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_presentation("# only\n\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn bad_lines() {
        assert!(parse_presentation("vertex 1\narrow a 1 -> 1\n").is_err());
        assert!(parse_presentation("vertex 1\nfoo\n").is_err());
        assert!(matches!(
            parse_presentation("vertex 1\narrow a: 1 -> 2\n"),
            Err(Error::UnknownVertex(_))
        ));
        assert!(parse_presentation("vertex 1\narrow a: 1 -> 1\nrelation 1 a*a = 0\n").is_err());
        assert!(matches!(
            parse_presentation("vertex 1\narrow a: 1 -> 1\nrelation +1 a*z = 0\n"),
            Err(Error::UnknownArrow(_))
        ));
    }

    #[test]
    fn dot_round_trip() {
        let p = parse_presentation(SAMPLE).unwrap();
        let dot = to_dot(&p);
        assert!(dot.contains("\"1\" -> \"2\" [label=\"a\"];"));
        assert_eq!(parse_dot(&dot).unwrap(), p.quiver);
    }
}
