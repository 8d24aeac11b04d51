//! Text format for structures and corpora.
//!
//! ```text
//! # semilattice on two elements
//! order 2
//! elements e f
//! mult e f
//! mult f f
//! leq f e
//! ```
//!
//! `mult` row `i` lists `i·j` for every column `j`; entries are element names
//! or indices. `leq x y` states `x ≤ y`; reflexive pairs are implied. A corpus
//! is a sequence of such records separated by lines containing only `---`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{OrderedSemigroup, MAX_CARRIER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `order <n>` header")]
    MissingHeader,
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("order {0} exceeds the supported maximum of {MAX_CARRIER}")]
    OrderTooLarge(usize),
    #[error("expected {expected} element names, found {found}")]
    ElementCount { expected: usize, found: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("`elements` must directly follow the header")]
    MisplacedElements,
    #[error("mult row has {found} entries, expected {expected}")]
    RowLength { expected: usize, found: usize },
    #[error("expected {expected} mult rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("`leq` lines must follow all mult rows")]
    MisplacedLeq,
    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("leq expects exactly two elements")]
    MalformedLeq,
    #[error("duplicate order pair ({0}, {1})")]
    DuplicateOrderPair(String, String),
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
}

/// A parsed structure together with the element names from its file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDocument {
    pub names: Vec<String>,
    pub structure: OrderedSemigroup,
}

impl StructureDocument {
    pub fn with_default_names(structure: OrderedSemigroup) -> Self {
        StructureDocument { names: default_names(structure.order()), structure }
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// Parses a structure file. Only syntax is checked; the axioms are left to
/// [`OrderedSemigroup::validate`].
pub fn parse_structure(text: &str) -> Result<OrderedSemigroup, ParseError> {
    parse_document(text).map(|d| d.structure)
}

pub fn parse_document(text: &str) -> Result<StructureDocument, ParseError> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    parse_record(&lines)
}

/// Parses a `---`-separated corpus. Records holding only comments are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<StructureDocument>, ParseError> {
    let mut records = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim() == "---" {
            records.push(std::mem::take(&mut current));
        } else {
            current.push((i + 1, line));
        }
    }
    records.push(current);
    records
        .iter()
        .filter(|r| r.iter().any(|(_, l)| !strip_comment(l).trim().is_empty()))
        .map(|r| parse_record(r))
        .collect()
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(before, _)| before)
}

fn parse_record(lines: &[(usize, &str)]) -> Result<StructureDocument, ParseError> {
    let mut content = lines.iter().filter_map(|&(no, l)| {
        let toks: Vec<&str> = strip_comment(l).split_whitespace().collect();
        (!toks.is_empty()).then_some((no, toks))
    });

    let last_line = lines.last().map_or(1, |l| l.0);
    let err = |line: usize, kind: ParseErrorKind| ParseError { line, kind };

    let (hline, header) = content.next().ok_or(err(last_line, ParseErrorKind::MissingHeader))?;
    if header[0] != "order" {
        return Err(err(hline, ParseErrorKind::MissingHeader));
    }
    if header.len() != 2 {
        return Err(err(hline, ParseErrorKind::MalformedHeader(header.join(" "))));
    }
    let n: usize = header[1].parse().map_err(|_| err(hline, ParseErrorKind::MalformedHeader(header.join(" "))))?;
    if n == 0 {
        return Err(err(hline, ParseErrorKind::ZeroOrder));
    }
    if n > MAX_CARRIER {
        return Err(err(hline, ParseErrorKind::OrderTooLarge(n)));
    }

    let mut names: Option<Vec<String>> = None;
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut leq = crate::model::discrete_order(n);
    let mut explicit: Vec<(usize, usize)> = Vec::new();

    for (no, toks) in content {
        match toks[0] {
            "elements" => {
                if names.is_some() || !rows.is_empty() || !explicit.is_empty() {
                    return Err(err(no, ParseErrorKind::MisplacedElements));
                }
                let given: Vec<String> = toks[1..].iter().map(|s| s.to_string()).collect();
                if given.len() != n {
                    return Err(err(no, ParseErrorKind::ElementCount { expected: n, found: given.len() }));
                }
                for (i, name) in given.iter().enumerate() {
                    if given[..i].contains(name) {
                        return Err(err(no, ParseErrorKind::DuplicateName(name.clone())));
                    }
                }
                names = Some(given);
            }
            "mult" => {
                if !explicit.is_empty() {
                    return Err(err(no, ParseErrorKind::MisplacedLeq));
                }
                if rows.len() == n {
                    return Err(err(no, ParseErrorKind::RowCount { expected: n, found: n + 1 }));
                }
                let entries = &toks[1..];
                if entries.len() != n {
                    return Err(err(no, ParseErrorKind::RowLength { expected: n, found: entries.len() }));
                }
                let names = names.get_or_insert_with(|| default_names(n));
                let row =
                    entries.iter().map(|t| resolve(t, names).map_err(|k| err(no, k))).collect::<Result<Vec<_>, _>>()?;
                rows.push(row);
            }
            "leq" => {
                if rows.len() != n {
                    return Err(err(no, ParseErrorKind::RowCount { expected: n, found: rows.len() }));
                }
                if toks.len() != 3 {
                    return Err(err(no, ParseErrorKind::MalformedLeq));
                }
                let names = names.get_or_insert_with(|| default_names(n));
                let x = resolve(toks[1], names).map_err(|k| err(no, k))?;
                let y = resolve(toks[2], names).map_err(|k| err(no, k))?;
                if explicit.contains(&(x, y)) {
                    return Err(err(no, ParseErrorKind::DuplicateOrderPair(toks[1].to_string(), toks[2].to_string())));
                }
                explicit.push((x, y));
                leq[x * n + y] = true;
            }
            other => return Err(err(no, ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }
    if rows.len() != n {
        return Err(err(last_line, ParseErrorKind::RowCount { expected: n, found: rows.len() }));
    }

    let mult: Vec<usize> = rows.into_iter().flatten().collect();
    let structure = OrderedSemigroup::new(n, mult, leq).expect("entries were range checked");
    Ok(StructureDocument { names: names.unwrap_or_else(|| default_names(n)), structure })
}

fn resolve(token: &str, names: &[String]) -> Result<usize, ParseErrorKind> {
    if let Some(i) = names.iter().position(|nm| nm == token) {
        return Ok(i);
    }
    match token.parse::<usize>() {
        Ok(index) if index < names.len() => Ok(index),
        Ok(index) => Err(ParseErrorKind::IndexOutOfRange { index, order: names.len() }),
        Err(_) => Err(ParseErrorKind::UnknownElement(token.to_string())),
    }
}

/// Writes a structure in the file format. Reflexive pairs are omitted.
pub fn write_structure(s: &OrderedSemigroup, names: &[String]) -> String {
    let n = s.order();
    assert_eq!(names.len(), n);
    let mut out = String::new();
    writeln!(out, "order {n}").unwrap();
    writeln!(out, "elements {}", names.join(" ")).unwrap();
    for i in 0..n {
        let row: Vec<&str> = (0..n).map(|j| names[s.mul(i, j)].as_str()).collect();
        writeln!(out, "mult {}", row.join(" ")).unwrap();
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && s.leq(i, j) {
                writeln!(out, "leq {} {}", names[i], names[j]).unwrap();
            }
        }
    }
    out
}

/// Writes a corpus: the header lines become `#` comments, then one record
/// per structure separated by `---`.
pub fn write_corpus(header: &[String], records: &[StructureDocument]) -> String {
    let mut out = String::new();
    for h in header {
        writeln!(out, "# {h}").unwrap();
    }
    for (k, doc) in records.iter().enumerate() {
        if k > 0 {
            out.push_str("---\n");
        }
        out.push_str(&write_structure(&doc.structure, &doc.names));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL2: &str = "# semilattice\norder 2\nelements e f\nmult e f\nmult f f\nleq f e\n";

    #[test]
    fn parses_sl2() {
        let doc = parse_document(SL2).unwrap();
        assert_eq!(doc.names, vec!["e", "f"]);
        let expected = OrderedSemigroup::new(2, vec![0, 1, 1, 1], vec![true, false, true, true]).unwrap();
        assert_eq!(doc.structure, expected);
    }

    #[test]
    fn trivial_and_index_entries() {
        let t1 = parse_structure("order 1\nmult 0\n").unwrap();
        assert_eq!(t1.order(), 1);
        assert!(t1.leq(0, 0));
        let doc = parse_document("order 2\nmult 0 e0\nmult e1 1\nleq 0 1").unwrap();
        assert_eq!(doc.names, vec!["e0", "e1"]);
        assert!(doc.structure.leq(0, 1));
    }

    #[test]
    fn reports_errors_with_lines() {
        let e = parse_structure("order 3\nmult 0 1 2\nmult 0 5 2\nmult 0 0 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::IndexOutOfRange { index: 5, order: 3 });

        assert_eq!(parse_structure("order 0\n").unwrap_err().kind, ParseErrorKind::ZeroOrder);
        assert_eq!(parse_structure("\n# nothing\n").unwrap_err().kind, ParseErrorKind::MissingHeader);
        assert!(matches!(parse_structure("order two\n").unwrap_err().kind, ParseErrorKind::MalformedHeader(_)));

        let dup = parse_structure("order 2\nmult 0 0\nmult 0 0\nleq 0 1\nleq 0 1\n").unwrap_err();
        assert_eq!(dup.line, 5);
        assert!(matches!(dup.kind, ParseErrorKind::DuplicateOrderPair(..)));

        let short = parse_structure("order 2\nmult 0 0\n").unwrap_err();
        assert_eq!(short.kind, ParseErrorKind::RowCount { expected: 2, found: 1 });

        let row = parse_structure("order 2\nmult 0\n").unwrap_err();
        assert_eq!(row.kind, ParseErrorKind::RowLength { expected: 2, found: 1 });

        let unknown = parse_structure("order 2\nelements a b\nmult a c\nmult a a\n").unwrap_err();
        assert_eq!(unknown.kind, ParseErrorKind::UnknownElement("c".into()));
    }

    #[test]
    fn does_not_check_axioms() {
        // order relation that is not antisymmetric still parses
        let s = parse_structure("order 2\nmult 0 0\nmult 0 0\nleq 0 1\nleq 1 0\n").unwrap();
        assert!(!s.is_valid());
    }

    #[test]
    fn write_then_parse() {
        let doc = parse_document(SL2).unwrap();
        let text = write_structure(&doc.structure, &doc.names);
        assert_eq!(parse_document(&text).unwrap(), doc);
    }

    #[test]
    fn corpus_round_trip() {
        let sl2 = parse_document(SL2).unwrap();
        let t1 = parse_document("order 1\nmult 0\n").unwrap();
        let text = write_corpus(&["count=2".to_string()], &[sl2.clone(), t1.clone()]);
        assert!(text.starts_with("# count=2\n"));
        assert_eq!(parse_corpus(&text).unwrap(), vec![sl2, t1]);
        assert!(parse_corpus("# empty corpus\n").unwrap().is_empty());
        let bad = parse_corpus("order 1\nmult 0\n---\norder 1\nmult 4\n").unwrap_err();
        assert_eq!(bad.line, 5);
    }
}
