//! The plain-text semiring file format.
//!
//! ```text
//! # the two-element Boolean semiring
//! order 2
//! elements 0 1
//! zero 0
//! one 1
//! add
//! 0 1
//! 1 1
//! mul
//! 0 0
//! 0 1
//! ```
//!
//! Row `i`, column `j` of `add` holds the label of `labels[i] + labels[j]`.

use std::collections::HashMap;
use std::fmt;

use semiring_core::{Error, FiniteSemiring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based; 0 when the document ended early
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
}

fn at(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

impl<'a> Parser<'a> {
    fn next_line(&mut self, expecting: &str) -> Result<&Line<'a>, ParseError> {
        let line = self
            .lines
            .get(self.pos)
            .ok_or_else(|| at(0, 0, format!("unexpected end of document, expected {expecting}")))?;
        self.pos += 1;
        Ok(line)
    }

    fn directive(&mut self, keyword: &str) -> Result<(&Line<'a>, usize), ParseError> {
        let line = self.next_line(&format!("`{keyword}`"))?;
        let first = &line.tokens[0];
        if first.text != keyword {
            return Err(at(
                line.number,
                first.column,
                format!("expected `{keyword}`, found `{}`", first.text),
            ));
        }
        Ok((line, line.number))
    }
}

fn single_argument<'a>(line: &'a Line<'_>, keyword: &str) -> Result<&'a Token<'a>, ParseError> {
    match line.tokens.as_slice() {
        [_, arg] => Ok(arg),
        [kw] => Err(at(line.number, kw.column + kw.text.len(), format!("`{keyword}` needs a value"))),
        [_, _, extra, ..] => Err(at(line.number, extra.column, "unexpected extra token")),
        [] => unreachable!("blank lines are skipped"),
    }
}

pub fn parse_semiring_file(text: &str) -> Result<FiniteSemiring, ParseError> {
    let lines: Vec<Line> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .map(|(i, l)| Line {
            number: i + 1,
            tokens: tokenize(l),
        })
        .filter(|l| !l.tokens.is_empty())
        .collect();
    let mut p = Parser { lines, pos: 0 };

    let (line, _) = p.directive("order")?;
    let arg = single_argument(line, "order")?;
    let order: usize = arg
        .text
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| at(line.number, arg.column, format!("`{}` is not a positive integer", arg.text)))?;

    let (line, _) = p.directive("elements")?;
    let labels: Vec<String> = line.tokens[1..].iter().map(|t| t.text.to_string()).collect();
    if labels.len() != order {
        let column = line.tokens.get(order + 1).map_or(line.tokens[0].column, |t| t.column);
        return Err(at(
            line.number,
            column,
            format!("expected {order} labels, found {}", labels.len()),
        ));
    }
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, t) in line.tokens[1..].iter().enumerate() {
        if index.insert(t.text, i).is_some() {
            return Err(at(line.number, t.column, format!("duplicate label `{}`", t.text)));
        }
    }
    let lookup = |line: usize, t: &Token| {
        index
            .get(t.text)
            .copied()
            .ok_or_else(|| at(line, t.column, format!("unknown label `{}`", t.text)))
    };

    let (line, n) = p.directive("zero")?;
    let zero = lookup(n, single_argument(line, "zero")?)?;
    let (line, n) = p.directive("one")?;
    let one = lookup(n, single_argument(line, "one")?)?;

    let mut tables = Vec::new();
    let mut table_lines = Vec::new();
    for keyword in ["add", "mul"] {
        let (line, n) = p.directive(keyword)?;
        if let Some(extra) = line.tokens.get(1) {
            return Err(at(n, extra.column, format!("`{keyword}` takes no value")));
        }
        table_lines.push(n);
        let mut rows = Vec::with_capacity(order);
        for r in 0..order {
            let line = p.next_line(&format!("row {} of `{keyword}`", r + 1))?;
            if let Some(t) = line.tokens.first().filter(|t| t.text == "mul" || t.text == "add") {
                return Err(at(
                    line.number,
                    t.column,
                    format!("`{keyword}` has {r} rows, expected {order}"),
                ));
            }
            if line.tokens.len() != order {
                let column = line.tokens.get(order).map_or(1, |t| t.column);
                return Err(at(
                    line.number,
                    column,
                    format!("expected {order} entries, found {}", line.tokens.len()),
                ));
            }
            let row = line
                .tokens
                .iter()
                .map(|t| lookup(line.number, t))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        tables.push(rows);
    }
    if let Some(line) = p.lines.get(p.pos) {
        return Err(at(line.number, line.tokens[0].column, "unexpected content after `mul` table"));
    }
    let mul = tables.pop().expect("two tables");
    let add = tables.pop().expect("two tables");
    FiniteSemiring::new(add, mul, zero, one, labels.clone()).map_err(|e| match e {
        Error::Axioms(report) => {
            let v = &report.violations[0];
            let additive = v.axiom.name().starts_with("additive");
            let witness: Vec<&str> = v.witness.iter().map(|&a| labels[a].as_str()).collect();
            at(
                table_lines[usize::from(!additive)],
                1,
                format!(
                    "{} fails at ({}); {} violation(s) in total",
                    v.axiom,
                    witness.join(", "),
                    report.violations.len()
                ),
            )
        }
        other => at(0, 0, other.to_string()),
    })
}

pub fn serialize_semiring(s: &FiniteSemiring) -> String {
    let mut out = String::new();
    let labels = s.labels();
    out.push_str(&format!("order {}\n", s.order()));
    out.push_str(&format!("elements {}\n", labels.join(" ")));
    out.push_str(&format!("zero {}\n", s.label(s.zero())));
    out.push_str(&format!("one {}\n", s.label(s.one())));
    for (keyword, rows) in [("add", s.add_rows()), ("mul", s.mul_rows())] {
        out.push_str(keyword);
        out.push('\n');
        for row in rows {
            let cells: Vec<&str> = row.iter().map(|&a| labels[a].as_str()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}
