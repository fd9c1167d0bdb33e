//! Edge-list and drawing text formats, plus the built-in named graphs.
//!
//! Edge list: one edge per line, `u v [length]`, tokens separated by spaces
//! or tabs. `#` starts a comment; blank lines are ignored.
//!
//! Drawing: one `id x y` line per vertex, same token and comment rules.

use crate::geometry::Point;
use crate::graph::{Drawing, Graph};
use crate::{Error, Result};
use std::fmt::Write;

fn tokens(line: &str) -> Vec<&str> {
    let line = line.split('#').next().unwrap_or("");
    line.split([' ', '\t', '\r']).filter(|t| !t.is_empty()).collect()
}

fn parse_f64(tok: &str, line: usize, what: &str) -> Result<f64> {
    tok.parse::<f64>().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what} {tok:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks = tokens(raw);
        let length = match toks.len() {
            0 => continue,
            2 => None,
            3 => {
                let l = parse_f64(toks[2], line, "edge length")?;
                if !(l > 0.0 && l.is_finite()) {
                    return Err(Error::Parse {
                        line,
                        message: format!("edge length must be positive, got {}", toks[2]),
                    });
                }
                Some(l)
            }
            n => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v [length]`, found {n} fields"),
                })
            }
        };
        if toks[0] == toks[1] {
            return Err(Error::Parse {
                line,
                message: format!("self-loop on vertex {:?}", toks[0]),
            });
        }
        g.add_edge(toks[0], toks[1], length)?;
    }
    Ok(g)
}

/// Writes the edges of `g` in edge-list format. Isolated vertices are lost.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        let (u, v) = (g.vertex_id(e.u), g.vertex_id(e.v));
        match e.length {
            Some(l) => writeln!(out, "{u} {v} {l}"),
            None => writeln!(out, "{u} {v}"),
        }
        .unwrap();
    }
    out
}

fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut g = Graph::new();
    for (a, b) in pairs {
        g.add_edge(&a.to_string(), &b.to_string(), None)
            .expect("generator edges are valid");
    }
    g
}

fn sized(name: &str, arg: &str, min: usize) -> Result<usize> {
    match arg.parse::<usize>() {
        Ok(n) if n >= min => Ok(n),
        _ => Err(Error::UnknownGraph(format!("{name}:{arg} (need an integer >= {min})"))),
    }
}

/// Built-in graphs: `petersen`, `heawood`, `herschel`, `cycle:n`, `path:n`,
/// `complete:n`. Vertex ids are `0..n`.
pub fn named_graph(name: &str) -> Result<Graph> {
    let name = name.trim();
    let (kind, arg) = match name.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (name, None),
    };
    match (kind, arg) {
        ("petersen", None) => Ok(from_pairs((0..5).flat_map(|i| {
            [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]
        }))),
        ("heawood", None) => Ok(from_pairs((0..14).flat_map(|i| {
            let chord = if i % 2 == 0 { Some((i, (i + 5) % 14)) } else { None };
            std::iter::once((i, (i + 1) % 14)).chain(chord)
        }))),
        ("herschel", None) => Ok(from_pairs([
            (0, 2), (0, 3), (0, 4), (0, 5),
            (1, 2), (1, 3), (1, 6), (1, 7),
            (2, 10), (3, 9),
            (4, 8), (4, 9), (5, 8), (5, 10),
            (6, 8), (6, 9), (7, 8), (7, 10),
        ])),
        ("cycle", Some(a)) => {
            let n = sized(kind, a, 3)?;
            Ok(from_pairs((0..n).map(|i| (i, (i + 1) % n))))
        }
        ("path", Some(a)) => {
            let n = sized(kind, a, 1)?;
            let mut g = from_pairs((1..n).map(|i| (i - 1, i)));
            if n == 1 {
                g.add_vertex("0");
            }
            Ok(g)
        }
        ("complete", Some(a)) => {
            let n = sized(kind, a, 1)?;
            let mut g = from_pairs((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))));
            if n == 1 {
                g.add_vertex("0");
            }
            Ok(g)
        }
        _ => Err(Error::UnknownGraph(name.to_string())),
    }
}

/// Writes `id x y` lines in the drawing's order, with 17 significant digits
/// so that positions round-trip exactly.
pub fn format_drawing(d: &Drawing) -> String {
    let mut out = String::new();
    for (id, p) in d.iter() {
        writeln!(out, "{id} {:.16e} {:.16e}", p.x, p.y).unwrap();
    }
    out
}

pub fn parse_drawing(text: &str) -> Result<Drawing> {
    let mut d = Drawing::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks = tokens(raw);
        match toks.len() {
            0 => continue,
            3 => {
                let x = parse_f64(toks[1], line, "x coordinate")?;
                let y = parse_f64(toks[2], line, "y coordinate")?;
                let p = Point::new(x, y);
                if !p.is_finite() {
                    return Err(Error::Parse {
                        line,
                        message: "non-finite coordinate".into(),
                    });
                }
                if d.get(toks[0]).is_some() {
                    return Err(Error::Parse {
                        line,
                        message: format!("duplicate vertex {:?}", toks[0]),
                    });
                }
                d.insert(toks[0], p);
            }
            n => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `id x y`, found {n} fields"),
                })
            }
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &Graph) -> Vec<usize> {
        (0..g.vertex_count()).map(|i| g.degree(i)).collect()
    }

    #[test]
    fn path_and_lengths() {
        let g = parse_edge_list("a b\nb c").unwrap();
        assert_eq!(g.vertex_ids().collect::<Vec<_>>(), ["a", "b", "c"]);
        assert_eq!(degrees(&g), [1, 2, 1]);
        let g = parse_edge_list("a b 2.5").unwrap();
        assert_eq!(g.edges()[0].length, Some(2.5));
    }

    #[test]
    fn comments_tabs_and_blank_lines() {
        let g = parse_edge_list("# header\n\n a\tb   # trailing\n\tc d 1e-1\r\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges()[1].length, Some(0.1));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("a b\na a", 2),
            ("a b\n\nc d 0", 3),
            ("a b -1", 1),
            ("x\n", 1),
            ("a b c d", 1),
            ("a b\nb c nope", 2),
        ];
        for (text, want) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn petersen_shape() {
        let g = named_graph("petersen").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
        assert!(degrees(&g).iter().all(|&d| d == 3));
    }

    #[test]
    fn cycle_shape() {
        let g = named_graph("cycle:6").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        assert!(degrees(&g).iter().all(|&d| d == 2));
    }

    #[test]
    fn herschel_shape() {
        let g = named_graph("herschel").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (11, 18));
        let mut d = degrees(&g);
        d.sort();
        assert_eq!(d, [3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4]);
    }

    #[test]
    fn generators_and_unknown_names() {
        assert_eq!(named_graph("path:5").unwrap().edge_count(), 4);
        assert_eq!(named_graph("path:1").unwrap().vertex_count(), 1);
        assert_eq!(named_graph("complete:5").unwrap().edge_count(), 10);
        for bad in ["cycle:2", "cycle", "path:x", "petersen:3", "grid:4", ""] {
            assert!(matches!(named_graph(bad), Err(Error::UnknownGraph(_))), "{bad}");
        }
    }

    #[test]
    fn drawing_round_trip_is_exact() {
        let mut d = Drawing::new();
        d.insert("a", Point::new(0.1, -1.0 / 3.0));
        d.insert("b", Point::new(1e-300, 12345.678901234567));
        let text = format_drawing(&d);
        assert_eq!(parse_drawing(&text).unwrap(), d);
    }

    #[test]
    fn drawing_errors() {
        assert!(matches!(parse_drawing("a 1 2\nb 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_drawing("a 1 2\na 3 4"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_drawing("a nan 2"), Err(Error::Parse { line: 1, .. })));
    }
}
