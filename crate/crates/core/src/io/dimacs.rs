//! DIMACS graphs (`p edge n m`, `e u v`) and CNF formulas (`p cnf v c`),
//! both with 1-based vertex/variable numbers.

use std::fmt::Write as _;

use super::{number, tokenize, Cursor, ParseError};
use crate::graph::Graph;
use crate::instances::Cnf;

fn problem_line<'a>(text: &'a str, kind: &str) -> Result<(Cursor<'a>, usize, usize), ParseError> {
    let lines = tokenize(text, '\u{0}');
    let lines: Vec<_> = lines.into_iter().filter(|l| l.tokens[0].text != "c").collect();
    let mut cur = Cursor::new(lines, text.lines().count());
    let line = cur.next_line(&format!("`p {kind} …`"))?;
    if line.tokens.len() != 4 || line.tokens[0].text != "p" || line.tokens[1].text != kind {
        return Err(ParseError::at(line.number, line.tokens[0].column, format!("expected `p {kind} <count> <count>`")));
    }
    let a = number(&line, line.tokens[2], "a count")?;
    let b = number(&line, line.tokens[3], "a count")?;
    Ok((cur, a, b))
}

/// Undirected graph; vertices are shifted to 0-based.
pub fn parse_dimacs_graph(text: &str) -> Result<Graph, ParseError> {
    let (mut cur, n, m) = problem_line(text, "edge")?;
    let mut edges = Vec::with_capacity(m);
    let mut lines = Vec::with_capacity(m);
    while cur.peek().is_some() {
        let line = cur.next_line("an edge line")?;
        if line.tokens.len() != 3 || line.tokens[0].text != "e" {
            return Err(ParseError::at(line.number, line.tokens[0].column, "expected `e u v`"));
        }
        let mut ends = [0usize; 2];
        for (slot, &tok) in ends.iter_mut().zip(&line.tokens[1..]) {
            let v: usize = number(&line, tok, "a vertex number")?;
            if v == 0 || v > n {
                return Err(ParseError::at(line.number, tok.column, format!("vertex {v} outside 1..={n}")));
            }
            *slot = v - 1;
        }
        edges.push((ends[0], ends[1]));
        lines.push(line.number);
    }
    if edges.len() != m {
        return Err(ParseError::at(1, 1, format!("header declares {m} edges but {} were given", edges.len())));
    }
    Graph::undirected(n, edges).map_err(|err| {
        ParseError(
            err.0
                .iter()
                .map(|v| {
                    let edge = match *v {
                        crate::Violation::SelfLoop { edge, .. } | crate::Violation::DuplicateEdge { edge, .. } => edge,
                        _ => 0,
                    };
                    super::Diagnostic { line: lines.get(edge).copied().unwrap_or(0), column: 1, message: v.to_string() }
                })
                .collect(),
        )
    })
}

pub fn write_dimacs_graph(graph: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", graph.vertex_count(), graph.edge_count());
    for &(u, v) in graph.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

/// Clauses are zero-terminated and may span lines.
pub fn parse_dimacs_cnf(text: &str) -> Result<Cnf, ParseError> {
    let (mut cur, variables, count) = problem_line(text, "cnf")?;
    let mut clauses = Vec::with_capacity(count);
    let mut current = Vec::new();
    while cur.peek().is_some() {
        let line = cur.next_line("clause literals")?;
        for &tok in &line.tokens {
            let lit: i64 = number(&line, tok, "a literal")?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > variables {
                return Err(ParseError::at(
                    line.number,
                    tok.column,
                    format!("variable {} outside 1..={variables}", lit.abs()),
                ));
            } else {
                current.push(lit as i32);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != count {
        return Err(ParseError::at(1, 1, format!("header declares {count} clauses but {} were given", clauses.len())));
    }
    Ok(Cnf { variables, clauses })
}

pub fn write_dimacs_cnf(cnf: &Cnf) -> String {
    let mut s = format!("p cnf {} {}\n", cnf.variables, cnf.clauses.len());
    for clause in &cnf.clauses {
        for lit in clause {
            let _ = write!(s, "{lit} ");
        }
        s.push_str("0\n");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let text = "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
        let g = parse_dimacs_graph(text).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(parse_dimacs_graph(&write_dimacs_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        let err = parse_dimacs_graph("p edge 2 1\ne 1 3\n").unwrap_err();
        assert_eq!((err.0[0].line, err.0[0].column), (2, 5));
        assert!(parse_dimacs_graph("p edge 2 2\ne 1 2\n").is_err());
    }

    #[test]
    fn cnf_spanning_lines() {
        let cnf = parse_dimacs_cnf("c x\np cnf 3 2\n1 -2\n 3 0 -1 2 -3 0\n").unwrap();
        assert_eq!(cnf.clauses, vec![vec![1, -2, 3], vec![-1, 2, -3]]);
        assert_eq!(parse_dimacs_cnf(&write_dimacs_cnf(&cnf)).unwrap(), cnf);
    }
}
