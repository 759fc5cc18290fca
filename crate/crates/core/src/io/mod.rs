//! Text formats for instances and orderings, plus DIMACS sources for the
//! reductions.
//!
//! Instance documents are line oriented; `#` starts a comment:
//!
//! ```text
//! TEMPORD 1
//! directed 0
//! semantics strict
//! objective minmax
//! vertices 3
//! edges 2
//! 0 1
//! 1 2
//! classes 2
//! 1 0
//! 1 1
//! lists 0
//! k 3
//! ```

mod dimacs;

use std::fmt;
use std::fmt::Write as _;

use crate::error::Violation;
use crate::model::{Instance, InstanceCandidate, Objective, Ordering, Semantics};

pub use dimacs::{parse_dimacs_cnf, parse_dimacs_graph, write_dimacs_cnf, write_dimacs_graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// 1-based; 0 when the problem is not tied to a line (e.g. early end of input).
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError(pub Vec<Diagnostic>);

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self(vec![Diagnostic { line, column, message: message.into() }])
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub column: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<Token<'a>>,
}

/// Non-empty lines with comments removed, tokens tagged with 1-based columns.
pub(crate) fn tokenize(text: &str, comment: char) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = match raw.find(comment) {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (true, Some(s)) => {
                    tokens.push(Token { text: &content[s..i], column: s + 1 });
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(Line { number: idx + 1, tokens });
        }
    }
    out
}

pub(crate) struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(lines: Vec<Line<'a>>, total_lines: usize) -> Self {
        Self { lines, pos: 0, last_line: total_lines }
    }

    pub(crate) fn next_line(&mut self, expecting: &str) -> Result<Line<'a>, ParseError> {
        match self.lines.get(self.pos) {
            Some(line) => {
                self.pos += 1;
                Ok(line.clone())
            }
            None => {
                Err(ParseError::at(self.last_line + 1, 1, format!("unexpected end of input, expected {expecting}")))
            }
        }
    }

    pub(crate) fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    pub(crate) fn finish(&self) -> Result<(), ParseError> {
        match self.lines.get(self.pos) {
            None => Ok(()),
            Some(line) => {
                Err(ParseError::at(line.number, line.tokens[0].column, "unexpected content after the last field"))
            }
        }
    }
}

pub(crate) fn number<T: std::str::FromStr>(line: &Line<'_>, tok: Token<'_>, what: &str) -> Result<T, ParseError> {
    tok.text
        .parse()
        .map_err(|_| ParseError::at(line.number, tok.column, format!("expected {what}, found `{}`", tok.text)))
}

fn end_column(line: &Line<'_>) -> usize {
    let last = line.tokens.last().unwrap();
    last.column + last.text.len()
}

/// A `key value` line; returns the value token.
fn keyed<'a>(cur: &mut Cursor<'a>, key: &str) -> Result<(Line<'a>, Token<'a>), ParseError> {
    let line = cur.next_line(&format!("`{key}`"))?;
    let first = line.tokens[0];
    if first.text != key {
        return Err(ParseError::at(line.number, first.column, format!("expected `{key}`, found `{}`", first.text)));
    }
    match line.tokens.len() {
        1 => Err(ParseError::at(line.number, end_column(&line), format!("missing value after `{key}`"))),
        2 => {
            let value = line.tokens[1];
            Ok((line, value))
        }
        _ => Err(ParseError::at(line.number, line.tokens[2].column, format!("unexpected token after `{key}` value"))),
    }
}

fn choice<T: Copy>(line: &Line<'_>, tok: Token<'_>, options: &[(&str, T)]) -> Result<T, ParseError> {
    options.iter().find(|(name, _)| *name == tok.text).map(|&(_, v)| v).ok_or_else(|| {
        let names: Vec<&str> = options.iter().map(|(n, _)| *n).collect();
        ParseError::at(line.number, tok.column, format!("expected one of {}, found `{}`", names.join("|"), tok.text))
    })
}

/// Line listing `count` followed by exactly `count` values.
fn counted_list<T: std::str::FromStr>(line: &Line<'_>, what: &str) -> Result<Vec<T>, ParseError> {
    let declared: usize = number(line, line.tokens[0], &format!("{what} length"))?;
    let found = line.tokens.len() - 1;
    if found != declared {
        let column = if found > declared { line.tokens[declared + 1].column } else { end_column(line) };
        return Err(ParseError::at(line.number, column, format!("{what} declares {declared} entries but has {found}")));
    }
    line.tokens[1..].iter().map(|&t| number(line, t, "a non-negative integer")).collect()
}

struct Positions {
    edges: Vec<(usize, usize)>,
    classes: Vec<(usize, usize)>,
    lists: Vec<(usize, usize)>,
    classes_header: (usize, usize),
    k: (usize, usize),
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let lines = tokenize(text, '#');
    let mut cur = Cursor::new(lines, text.lines().count());

    let header = cur.next_line("`TEMPORD 1`")?;
    if header.tokens.len() != 2 || header.tokens[0].text != "TEMPORD" {
        return Err(ParseError::at(header.number, header.tokens[0].column, "expected header `TEMPORD 1`"));
    }
    if header.tokens[1].text != "1" {
        return Err(ParseError::at(
            header.number,
            header.tokens[1].column,
            format!("unsupported version `{}`", header.tokens[1].text),
        ));
    }
    let (line, tok) = keyed(&mut cur, "directed")?;
    let directed = choice(&line, tok, &[("0", false), ("1", true)])?;
    let (line, tok) = keyed(&mut cur, "semantics")?;
    let semantics = choice(&line, tok, &[("strict", Semantics::Strict), ("weak", Semantics::Weak)])?;
    let (line, tok) = keyed(&mut cur, "objective")?;
    let objective = choice(&line, tok, &[("minmax", Objective::MinMax), ("maxmin", Objective::MaxMin)])?;
    let (line, tok) = keyed(&mut cur, "vertices")?;
    let vertex_count: usize = number(&line, tok, "a vertex count")?;

    let (line, tok) = keyed(&mut cur, "edges")?;
    let m: usize = number(&line, tok, "an edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut pos =
        Positions { edges: Vec::new(), classes: Vec::new(), lists: Vec::new(), classes_header: (0, 0), k: (0, 0) };
    for _ in 0..m {
        let line = cur.next_line("an edge line `u v`")?;
        if line.tokens.len() != 2 {
            let column = line.tokens.get(2).map_or(end_column(&line), |t| t.column);
            return Err(ParseError::at(line.number, column, "edge lines have exactly two endpoints"));
        }
        let u = number(&line, line.tokens[0], "a vertex index")?;
        let v = number(&line, line.tokens[1], "a vertex index")?;
        edges.push((u, v));
        pos.edges.push((line.number, line.tokens[0].column));
    }

    let (line, tok) = keyed(&mut cur, "classes")?;
    pos.classes_header = (line.number, tok.column);
    let h: usize = number(&line, tok, "a class count")?;
    let mut classes = Vec::with_capacity(h);
    for _ in 0..h {
        let line = cur.next_line("a class line `c i1 … ic`")?;
        classes.push(counted_list::<usize>(&line, "class")?);
        pos.classes.push((line.number, line.tokens[0].column));
    }

    let (line, tok) = keyed(&mut cur, "lists")?;
    let has_lists = choice(&line, tok, &[("0", false), ("1", true)])?;
    let time_lists = if has_lists {
        let mut lists = Vec::with_capacity(h);
        for _ in 0..h {
            let line = cur.next_line("a time list line `L t1 … tL`")?;
            lists.push(counted_list::<u32>(&line, "time list")?);
            pos.lists.push((line.number, line.tokens[0].column));
        }
        Some(lists)
    } else {
        None
    };

    let (line, tok) = keyed(&mut cur, "k")?;
    pos.k = (line.number, tok.column);
    let k: u32 = number(&line, tok, "a threshold")?;
    cur.finish()?;

    Instance::validate(InstanceCandidate {
        directed,
        vertex_count,
        edges,
        classes,
        objective,
        semantics,
        time_lists,
        k,
    })
    .map_err(|err| ParseError(err.0.iter().map(|v| locate(v, &pos)).collect()))
}

fn locate(v: &Violation, pos: &Positions) -> Diagnostic {
    let (line, column) = match *v {
        Violation::VertexOutOfRange { edge, .. }
        | Violation::SelfLoop { edge, .. }
        | Violation::DuplicateEdge { edge, .. } => pos.edges[edge],
        Violation::EmptyClassList { .. } => pos.classes_header,
        Violation::BadClassEdgeIndex { class, .. } => pos.classes[class],
        Violation::UncoveredEdge { edge } => pos.edges[edge],
        Violation::EmptyTimeList { class } | Violation::ZeroTime { class } => pos.lists[class],
        Violation::TimeListCount { .. } => pos.classes_header,
        Violation::ZeroThreshold => pos.k,
    };
    Diagnostic { line, column, message: v.to_string() }
}

/// Canonical document: fixed field order, single spaces, trailing newline.
pub fn write_instance(instance: &Instance) -> String {
    let g = instance.graph();
    let mut s = String::new();
    let _ = writeln!(s, "TEMPORD 1");
    let _ = writeln!(s, "directed {}", u8::from(g.is_directed()));
    let _ = writeln!(s, "semantics {}", instance.semantics());
    let _ = writeln!(s, "objective {}", instance.objective());
    let _ = writeln!(s, "vertices {}", g.vertex_count());
    let _ = writeln!(s, "edges {}", g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    let _ = writeln!(s, "classes {}", instance.classes().len());
    for class in instance.classes().classes() {
        write_counted(&mut s, class);
    }
    match instance.time_lists() {
        None => {
            let _ = writeln!(s, "lists 0");
        }
        Some(lists) => {
            let _ = writeln!(s, "lists 1");
            for list in lists.lists() {
                write_counted(&mut s, list);
            }
        }
    }
    let _ = writeln!(s, "k {}", instance.k());
    s
}

fn write_counted<T: fmt::Display>(s: &mut String, items: &[T]) {
    let _ = write!(s, "{}", items.len());
    for x in items {
        let _ = write!(s, " {x}");
    }
    s.push('\n');
}

/// Parses `ORDERING 1` followed by one `class time` line per class. Every
/// class index in `0..h` must appear once and times must be distinct;
/// list and range checks happen against an instance via
/// [`Ordering::validate_for`].
pub fn parse_ordering(text: &str) -> Result<Ordering, ParseError> {
    let lines = tokenize(text, '#');
    let mut cur = Cursor::new(lines, text.lines().count());
    let header = cur.next_line("`ORDERING 1`")?;
    if header.tokens.len() != 2 || header.tokens[0].text != "ORDERING" || header.tokens[1].text != "1" {
        return Err(ParseError::at(header.number, header.tokens[0].column, "expected header `ORDERING 1`"));
    }
    let mut entries: Vec<(usize, u32, usize, usize)> = Vec::new();
    while cur.peek().is_some() {
        let line = cur.next_line("`class time`")?;
        if line.tokens.len() != 2 {
            let column = line.tokens.get(2).map_or(end_column(&line), |t| t.column);
            return Err(ParseError::at(line.number, column, "ordering lines are `class time`"));
        }
        let class: usize = number(&line, line.tokens[0], "a class index")?;
        let time: u32 = number(&line, line.tokens[1], "a timestep")?;
        if time == 0 {
            return Err(ParseError::at(line.number, line.tokens[1].column, "timesteps are positive"));
        }
        entries.push((class, time, line.number, line.tokens[0].column));
    }
    let h = entries.len();
    let mut times = vec![0u32; h];
    let mut time_owner = std::collections::HashMap::new();
    let mut diags = Vec::new();
    for &(class, time, line, column) in &entries {
        if class >= h {
            diags.push(Diagnostic { line, column, message: format!("class {class} out of range for {h} classes") });
        } else if times[class] != 0 {
            diags.push(Diagnostic { line, column, message: format!("duplicate class {class}") });
        } else {
            times[class] = time;
        }
        if let Some(first) = time_owner.insert(time, class) {
            diags.push(Diagnostic {
                line,
                column: column + 1,
                message: format!("injectivity: timestep {time} assigned to classes {first} and {class}"),
            });
        }
    }
    if !diags.is_empty() {
        return Err(ParseError(diags));
    }
    Ok(Ordering::new(times))
}

pub fn write_ordering(ordering: &Ordering) -> String {
    let mut s = String::from("ORDERING 1\n");
    for (class, t) in ordering.times().iter().enumerate() {
        let _ = writeln!(s, "{class} {t}");
    }
    s
}
