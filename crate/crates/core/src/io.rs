//! Plain-text formats.
//!
//! * `facets v1`: a `facets <n>` line, then one facet per line as
//!   space-separated labels.
//! * `geom v1`: a `geom <k>` line, `v <label> <x1> ... <xk>` lines, then a
//!   `facets` section as above.
//! * `morse v1`: `pair <σ> ; <Σ>` and `critical <τ>` lines.
//!
//! Blank lines are skipped and `#` starts a comment everywhere.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex, Vertex};
use crate::geometry::{GeometricRealization, GeometryError};
use crate::morse::{MorseError, MorseMatching};
use crate::rational::{format_scalar, parse_scalar, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("header announces {expected} facets but {got} were given")]
    FacetCount { expected: usize, got: usize },
    #[error("critical faces listed in the file do not match the pairs")]
    CriticalMismatch,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Morse(#[from] MorseError),
}

fn parse_err(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse { line, message: message.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_labels(line: usize, s: &str) -> Result<Vec<Vertex>, IoError> {
    s.split_whitespace()
        .map(|t| t.parse::<Vertex>().map_err(|_| parse_err(line, format!("bad vertex {t:?}"))))
        .collect()
}

fn parse_face(line: usize, s: &str) -> Result<Face, IoError> {
    let labels = parse_labels(line, s)?;
    if labels.is_empty() {
        return Err(parse_err(line, "empty face"));
    }
    Face::new(labels).map_err(|e| parse_err(line, e.to_string()))
}

fn parse_header(line: usize, s: &str, keyword: &str) -> Result<usize, IoError> {
    let mut parts = s.split_whitespace();
    match (parts.next(), parts.next().map(str::parse::<usize>), parts.next()) {
        (Some(k), Some(Ok(n)), None) if k == keyword => Ok(n),
        _ => Err(parse_err(line, format!("expected `{keyword} <n>`"))),
    }
}

fn parse_facet_section<'a>(
    header: (usize, &str),
    rest: impl Iterator<Item = (usize, &'a str)>,
) -> Result<SimplicialComplex, IoError> {
    let expected = parse_header(header.0, header.1, "facets")?;
    let facets: Vec<Face> = rest.map(|(i, l)| parse_face(i, l)).collect::<Result<_, _>>()?;
    if facets.len() != expected {
        return Err(IoError::FacetCount { expected, got: facets.len() });
    }
    Ok(SimplicialComplex::closure_of(facets))
}

pub fn parse_facets(text: &str) -> Result<SimplicialComplex, IoError> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| parse_err(1, "missing `facets <n>` header"))?;
    parse_facet_section(header, lines)
}

pub fn write_facets(c: &SimplicialComplex) -> String {
    let facets = c.facets();
    let mut out = format!("facets {}\n", facets.len());
    for f in facets {
        out.push_str(&face_text(&f));
        out.push('\n');
    }
    out
}

fn face_text(f: &Face) -> String {
    f.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn parse_geom(text: &str) -> Result<GeometricRealization, IoError> {
    let mut lines = content_lines(text).peekable();
    let (hl, h) = lines.next().ok_or_else(|| parse_err(1, "missing `geom <k>` header"))?;
    let k = parse_header(hl, h, "geom")?;
    let mut coords: BTreeMap<Vertex, Vec<Scalar>> = BTreeMap::new();
    while let Some(&(i, l)) = lines.peek() {
        let Some(rest) = l.strip_prefix("v ") else { break };
        lines.next();
        let mut parts = rest.split_whitespace();
        let label: Vertex =
            parts.next().and_then(|t| t.parse().ok()).ok_or_else(|| parse_err(i, "expected `v <label> <coords>`"))?;
        let p: Vec<Scalar> =
            parts.map(|t| parse_scalar(t).map_err(|e| parse_err(i, e.to_string()))).collect::<Result<_, _>>()?;
        if p.len() != k {
            return Err(parse_err(i, format!("expected {k} coordinates, got {}", p.len())));
        }
        if coords.insert(label, p).is_some() {
            return Err(parse_err(i, format!("vertex {label} given twice")));
        }
    }
    let header = lines.next().ok_or_else(|| parse_err(0, "missing `facets <n>` section"))?;
    let complex = parse_facet_section(header, lines)?;
    Ok(GeometricRealization::new(complex, coords, k)?)
}

pub fn write_geom(g: &GeometricRealization) -> String {
    let mut out = format!("geom {}\n", g.ambient_dim());
    for (v, p) in g.coords() {
        let coords: Vec<String> = p.iter().map(format_scalar).collect();
        let _ = writeln!(out, "v {v} {}", coords.join(" "));
    }
    out.push_str(&write_facets(g.complex()));
    out
}

/// Reads a matching on `complex`. Listed critical faces, if any, must be
/// exactly the unmatched faces.
pub fn parse_morse(text: &str, complex: SimplicialComplex) -> Result<MorseMatching, IoError> {
    let mut pairs = Vec::new();
    let mut critical = BTreeSet::new();
    for (i, l) in content_lines(text) {
        if let Some(rest) = l.strip_prefix("pair ") {
            let (a, b) = rest.split_once(';').ok_or_else(|| parse_err(i, "expected `pair <face> ; <face>`"))?;
            pairs.push((parse_face(i, a)?, parse_face(i, b)?));
        } else if let Some(rest) = l.strip_prefix("critical ") {
            critical.insert(parse_face(i, rest)?);
        } else if l != "morse v1" {
            return Err(parse_err(i, "expected `pair` or `critical`"));
        }
    }
    let m = MorseMatching::new(complex, pairs)?;
    if !critical.is_empty() && critical != m.critical_faces().into_iter().collect() {
        return Err(IoError::CriticalMismatch);
    }
    Ok(m)
}

pub fn write_morse(m: &MorseMatching) -> String {
    let mut out = String::from("morse v1\n");
    for (a, b) in m.pairs() {
        let _ = writeln!(out, "pair {} ; {}", face_text(&a), face_text(&b));
    }
    for f in m.critical_faces() {
        let _ = writeln!(out, "critical {}", face_text(&f));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn facets_round_trip() {
        let c = SimplicialComplex::from_facets([vec![1u32, 2, 3], vec![3, 4], vec![7]]).unwrap();
        let text = write_facets(&c);
        assert_eq!(parse_facets(&text).unwrap(), c);
        let commented = "# E\nfacets 2\n1 2 3 # first\n\n3 4\n";
        assert_eq!(parse_facets(commented).unwrap().facets().len(), 2);
    }

    #[test]
    fn facets_errors() {
        assert!(matches!(parse_facets("facets 2\n1 2\n"), Err(IoError::FacetCount { expected: 2, got: 1 })));
        assert!(matches!(parse_facets("facets 1\n1 x\n"), Err(IoError::Parse { line: 2, .. })));
        assert!(matches!(parse_facets("facets 1\n1 1\n"), Err(IoError::Parse { line: 2, .. })));
        assert!(matches!(parse_facets(""), Err(IoError::Parse { .. })));
    }

    #[test]
    fn geom_round_trip() {
        let text = "geom 2\nv 1 0 0\nv 2 1/2 0\nv 3 0 0.25\nfacets 1\n1 2 3\n";
        let g = parse_geom(text).unwrap();
        assert_eq!(format_scalar(&g.point(3)[1]), "1/4");
        assert_eq!(parse_geom(&write_geom(&g)).unwrap(), g);
        assert!(matches!(parse_geom("geom 2\nv 1 0\nfacets 1\n1\n"), Err(IoError::Parse { line: 2, .. })));
        assert!(matches!(parse_geom("geom 2\nv 1 0 0\nfacets 1\n1 2\n"), Err(IoError::Geometry(_))));
    }

    #[test]
    fn morse_round_trip() {
        let c = SimplicialComplex::from_facets([[1u32, 2], [2, 3]]).unwrap();
        let m = MorseMatching::new(
            c.clone(),
            [
                (Face::new([2]).unwrap(), Face::new([1, 2]).unwrap()),
                (Face::new([3]).unwrap(), Face::new([2, 3]).unwrap()),
            ],
        )
        .unwrap();
        let text = write_morse(&m);
        assert_eq!(parse_morse(&text, c.clone()).unwrap().pairs(), m.pairs());
        let wrong = "pair 2 ; 1 2\ncritical 3\n";
        assert_eq!(parse_morse(wrong, c).unwrap_err(), IoError::CriticalMismatch);
    }
}
