//! DIMACS edge format and the line-oriented result format.
//!
//! External vertex labels are 1-based; internal ids are 0-based.

use std::fmt::Write as _;

use p2pack_core::crown::CrownKind;
use p2pack_core::{Answer, Graph, Packing, SolveResult, TraceEvent, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing `p edge <n> <m>` line")]
    MissingProblemLine,
}

fn at(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        msg: msg.into(),
    }
}

/// A parsed graph plus non-fatal remarks (duplicate edges, edge count
/// mismatch).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn parse_dimacs(text: &str) -> Result<Parsed, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut warnings = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(at(line, "second `p` line"));
                }
                if fields.next() != Some("edge") {
                    return Err(at(line, "expected `p edge <n> <m>`"));
                }
                let n = number(fields.next(), line, "vertex count")?;
                let m = number(fields.next(), line, "edge count")?;
                trailing(fields, line)?;
                header = Some((n, m, line));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(at(line, "edge before the `p` line"));
                };
                let u = number(fields.next(), line, "endpoint")?;
                let v = number(fields.next(), line, "endpoint")?;
                trailing(fields, line)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(at(line, format!("label {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(at(line, format!("self-loop on {u}")));
                }
                let e = if u < v {
                    (u - 1, v - 1)
                } else {
                    (v - 1, u - 1)
                };
                edges.push(e);
            }
            Some(other) => return Err(at(line, format!("unknown line type `{other}`"))),
        }
    }

    let (n, declared, p_line) = header.ok_or(ParseError::MissingProblemLine)?;
    let listed = edges.len();
    edges.sort_unstable();
    edges.dedup();
    if edges.len() != listed {
        warnings.push(format!(
            "{} duplicate edge line(s) ignored",
            listed - edges.len()
        ));
    }
    if edges.len() != declared {
        warnings.push(format!(
            "line {p_line}: declared {declared} edges, found {}",
            edges.len()
        ));
    }
    let graph = Graph::from_edges(n, edges).map_err(|e| at(p_line, e.to_string()))?;
    Ok(Parsed { graph, warnings })
}

fn number(field: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let f = field.ok_or_else(|| at(line, format!("missing {what}")))?;
    f.parse().map_err(|_| at(line, format!("bad {what} `{f}`")))
}

fn trailing<'a>(mut fields: impl Iterator<Item = &'a str>, line: usize) -> Result<(), ParseError> {
    match fields.next() {
        Some(extra) => Err(at(line, format!("unexpected `{extra}`"))),
        None => Ok(()),
    }
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// `p2 <e1> <mid> <e2>` lines, 1-based.
pub fn write_packing(p: &Packing) -> String {
    let mut out = String::new();
    for path in p {
        writeln!(
            out,
            "p2 {} {} {}",
            path.e1() + 1,
            path.mid() + 1,
            path.e2() + 1
        )
        .unwrap();
    }
    out
}

pub fn kind_name(kind: CrownKind) -> &'static str {
    match kind {
        CrownKind::Double => "double",
        CrownKind::Fat => "fat",
    }
}

/// One `trace ...` line per event.
pub fn write_trace(trace: &[TraceEvent]) -> String {
    let mut out = String::new();
    for event in trace {
        match event {
            TraceEvent::Cleaned { removed } => {
                writeln!(out, "trace cleaned removed={}", removed.len())
            }
            TraceEvent::Reduced {
                packing_size,
                rule1,
                rule2,
            } => writeln!(
                out,
                "trace reduced packing={packing_size} rule1={rule1} rule2={rule2}"
            ),
            TraceEvent::Crown {
                kind,
                head,
                crown,
                k_before,
            } => writeln!(
                out,
                "trace crown kind={} head={} crown={} k_before={k_before}",
                kind_name(*kind),
                head.len(),
                crown.len()
            ),
            TraceEvent::Augmented { from } => writeln!(out, "trace augmented from={from}"),
        }
        .unwrap();
    }
    out
}

pub fn write_result(r: &SolveResult) -> String {
    let answer = match r.answer {
        Answer::Yes => "YES",
        Answer::No => "NO",
    };
    let mut out = format!("answer {answer}\n");
    let s = &r.stats;
    writeln!(out, "rule1_applications {}", s.rule1_applications).unwrap();
    writeln!(out, "rule2_applications {}", s.rule2_applications).unwrap();
    writeln!(out, "crowns {}", s.crowns).unwrap();
    writeln!(out, "augmentation_rounds {}", s.augmentation_rounds).unwrap();
    out.push_str(&write_trace(&r.kernel_trace));
    if let Some(cert) = &r.certificate {
        writeln!(out, "certificate_size {}", cert.len()).unwrap();
        out.push_str(&write_packing(cert));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use p2pack_core::{P2Path, SolveStats};

    #[test]
    fn parses_simple_path() {
        let p = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3").unwrap();
        assert_eq!(p.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(p.warnings.is_empty());
    }

    #[test]
    fn duplicates_are_merged_with_a_warning() {
        let p = parse_dimacs("c comment\np edge 3 3\ne 1 2\ne 2 1\ne 2 3\n").unwrap();
        assert_eq!(p.graph.m(), 2);
        assert_eq!(p.warnings.len(), 2);
        assert!(p.warnings[0].contains("duplicate"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_dimacs("e 1 2"),
            Err(at(1, "edge before the `p` line"))
        );
        assert_eq!(parse_dimacs("c x\n"), Err(ParseError::MissingProblemLine));
        assert_eq!(
            parse_dimacs("p edge 3 1\n\ne 2 2"),
            Err(at(3, "self-loop on 2"))
        );
        assert_eq!(
            parse_dimacs("p edge 3 1\ne 1 4"),
            Err(at(2, "label 4 outside 1..=3"))
        );
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 0 1"),
            Err(ParseError::Line { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge x 1"),
            Err(ParseError::Line { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\nq"),
            Err(ParseError::Line { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 1 2 3"),
            Err(ParseError::Line { line: 2, .. })
        ));
    }

    #[test]
    fn dimacs_round_trip() {
        let g = Graph::from_edges(4, [(0, 1), (1, 3), (2, 3)]).unwrap();
        let text = write_dimacs(&g);
        assert_eq!(text, "p edge 4 3\ne 1 2\ne 2 4\ne 3 4\n");
        assert_eq!(parse_dimacs(&text).unwrap().graph, g);
    }

    fn result(answer: Answer, paths: &[P2Path]) -> SolveResult {
        SolveResult {
            answer,
            certificate: answer
                .is_yes()
                .then(|| Packing::from_paths(paths.iter().copied()).unwrap()),
            kernel_trace: Vec::new(),
            stats: SolveStats::default(),
        }
    }

    #[test]
    fn result_lines() {
        let yes = write_result(&result(Answer::Yes, &[P2Path::new(0, 1, 2)]));
        assert!(yes.starts_with("answer YES\n"));
        assert!(yes.lines().any(|l| l == "p2 1 2 3"));

        let no = write_result(&result(Answer::No, &[]));
        assert!(no.starts_with("answer NO\n"));
        assert!(!no.lines().any(|l| l.starts_with("p2 ")));

        let two = write_result(&result(
            Answer::Yes,
            &[P2Path::new(0, 1, 2), P2Path::new(3, 4, 5)],
        ));
        assert_eq!(two.lines().filter(|l| l.starts_with("p2 ")).count(), 2);
    }
}
