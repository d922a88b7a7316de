//! Facet-list text format and matrix rendering.
//!
//! A facet file holds one facet per line as space-separated positive vertex
//! labels. Lines starting with `#` and blank lines are skipped. A line may
//! start with a `+` or `-` token giving the facet's orientation explicitly;
//! without any such token the orientation is computed.

use crate::complex::{OrientedComplex, TriangulatedManifold};
use crate::error::{Error, Result};
use crate::exchange::ExchangeMatrix;
use crate::simplex::{OrientedSimplex, Simplex, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetList {
    pub dim: usize,
    pub facets: Vec<Simplex>,
    /// Present when at least one line carries an explicit sign.
    pub signs: Option<Vec<i32>>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_facets(text: &str) -> Result<FacetList> {
    let mut dim = None;
    let mut facets = Vec::new();
    let mut signs = Vec::new();
    let mut any_sign = false;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace().peekable();
        let mut sign = 1;
        match tokens.peek() {
            Some(&"+") => {
                tokens.next();
                any_sign = true;
            }
            Some(&"-") => {
                tokens.next();
                sign = -1;
                any_sign = true;
            }
            _ => {}
        }
        let mut verts: Vec<Vertex> = Vec::new();
        for t in tokens {
            let v: Vertex = t.parse().map_err(|_| parse_err(lineno, format!("invalid vertex label '{t}'")))?;
            verts.push(v);
        }
        if verts.is_empty() {
            return Err(parse_err(lineno, "facet without vertices"));
        }
        let s = Simplex::new(verts.iter().copied()).map_err(|e| parse_err(lineno, e.to_string()))?;
        let d = *dim.get_or_insert(s.len() - 1);
        if s.len() != d + 1 {
            return Err(parse_err(lineno, format!("facet has {} vertices, expected {}", s.len(), d + 1)));
        }
        facets.push(s);
        signs.push(sign);
    }
    let dim = dim.ok_or_else(|| parse_err(0, "no facets"))?;
    Ok(FacetList { dim, facets, signs: any_sign.then_some(signs) })
}

/// Parses and validates a closed manifold.
pub fn parse_manifold(text: &str) -> Result<TriangulatedManifold> {
    let list = parse_facets(text)?;
    match list.signs {
        Some(signs) => {
            let oc = OrientedComplex::new(
                list.dim,
                list.facets.into_iter().zip(signs).map(|(s, c)| OrientedSimplex::new(s, c)),
            )?;
            TriangulatedManifold::from_oriented(oc)
        }
        None => TriangulatedManifold::from_facets(&list.facets, list.dim),
    }
}

/// Parses an oriented pure complex that may have boundary.
pub fn parse_oriented_complex(text: &str) -> Result<OrientedComplex> {
    let list = parse_facets(text)?;
    match list.signs {
        Some(signs) => OrientedComplex::new(
            list.dim,
            list.facets.into_iter().zip(signs).map(|(s, c)| OrientedSimplex::new(s, c)),
        ),
        None => OrientedComplex::orient(list.dim, &list.facets),
    }
}

fn vertex_line(s: &Simplex) -> String {
    s.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Unsigned facet lines, sorted, vertices ascending.
pub fn emit_facets(k: &TriangulatedManifold) -> String {
    let mut out = String::new();
    for f in k.facets() {
        out.push_str(&vertex_line(f));
        out.push('\n');
    }
    out
}

/// Facet lines with explicit orientation tokens.
pub fn emit_oriented(k: &OrientedComplex) -> String {
    let mut out = String::new();
    for f in k.oriented_facets() {
        out.push_str(if f.sign > 0 { "+ " } else { "- " });
        out.push_str(&vertex_line(&f.simplex));
        out.push('\n');
    }
    out
}

fn signed_entry(e: i32) -> String {
    if e > 0 {
        format!("+{e}")
    } else {
        e.to_string()
    }
}

/// Header of face labels followed by rows rendered as `+1`, `-1`, `0`.
pub fn matrix_text(b: &ExchangeMatrix) -> String {
    let mut out = String::new();
    let labels: Vec<String> = b.index().iter().map(|s| s.label()).collect();
    out.push_str(&labels.join(" "));
    out.push('\n');
    for row in b.rows() {
        let cells: Vec<String> = row.iter().map(|e| signed_entry(*e)).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Reads the output of [`matrix_text`] back.
pub fn parse_matrix_text(text: &str) -> Result<ExchangeMatrix> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| parse_err(0, "empty matrix"))?;
    let mut index = Vec::new();
    for tok in header.split_whitespace() {
        let inner = tok
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| parse_err(1, format!("bad face label '{tok}'")))?;
        let verts = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|v| v.parse::<Vertex>().map_err(|_| parse_err(1, format!("bad face label '{tok}'"))))
                .collect::<Result<Vec<_>>>()?
        };
        index.push(Simplex::new(verts).map_err(|e| parse_err(1, e.to_string()))?);
    }
    let mut rows = Vec::new();
    for (i, l) in lines {
        let row = l
            .split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|_| parse_err(i + 1, format!("bad entry '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    ExchangeMatrix::from_rows(index, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_facets("# c\n1 2 3\n1 x 4\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, message: "invalid vertex label 'x'".into() });
        let err = parse_facets("1 2 3\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_facets("1 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!(parse_facets("# nothing\n").is_err());
    }

    #[test]
    fn signed_lines() {
        let l = parse_facets("+ 1 2 3\n- 1 2 4\n").unwrap();
        assert_eq!(l.signs, Some(vec![1, -1]));
        let oc = parse_oriented_complex("+ 1 2 3\n- 1 2 4\n").unwrap();
        assert_eq!(parse_oriented_complex(&emit_oriented(&oc)).unwrap(), oc);
    }

    #[test]
    fn matrix_round_trip() {
        let oc = parse_oriented_complex("1 2 3\n1 2 4\n").unwrap();
        let b = crate::exchange::exchange_matrix_of(&oc);
        let text = matrix_text(&b);
        assert!(text.starts_with("(1,2) (1,3) (1,4) (2,3) (2,4)\n0 +1 -1 -1 +1\n"));
        assert_eq!(parse_matrix_text(&text).unwrap(), b);
    }
}
