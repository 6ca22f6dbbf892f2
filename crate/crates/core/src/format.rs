//! Line-oriented algebra file format.
//!
//! ```text
//! # comments run to end of line
//! algebra D3
//! elements 0 a 1
//! covers   0 < a ; a < 1          # Hasse covers, chains `x < y < z` allowed
//! kleene   0:1 a:a 1:0
//! brouwer  0:1 a:0 1:0
//! bounds   0 1
//! ```
//!
//! A file may hold several documents, each opened by an `algebra` line.
//! Directives other than `algebra` may repeat; their contents accumulate.

use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{FiniteAlgebra, RawAlgebra};
use crate::error::AlgebraError;
use crate::order;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("algebra `{name}` (line {line}): {source}")]
    Invalid {
        name: String,
        line: usize,
        #[source]
        source: AlgebraError,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

#[derive(Default)]
struct Doc {
    start: usize,
    name: String,
    labels: Option<(usize, Vec<String>)>,
    covers: Vec<(usize, String, String)>,
    kleene: Vec<(usize, String, String)>,
    brouwer: Vec<(usize, String, String)>,
    bounds: Option<(usize, String, String)>,
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.contains([':', ';', '<', '#']) && !s.chars().any(char::is_whitespace)
}

impl Doc {
    fn index(&self, line: usize, label: &str) -> Result<usize, FormatError> {
        let (_, labels) = self.labels.as_ref().ok_or_else(|| syntax(line, "`elements` must precede its use"))?;
        labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| syntax(line, format!("unknown element `{label}`")))
    }

    fn map(&self, what: &str, entries: &[(usize, String, String)], n: usize) -> Result<Vec<usize>, FormatError> {
        let mut map = vec![usize::MAX; n];
        for (line, a, b) in entries {
            let (i, j) = (self.index(*line, a)?, self.index(*line, b)?);
            if map[i] != usize::MAX && map[i] != j {
                return Err(syntax(*line, format!("{what} assigns `{a}` twice")));
            }
            map[i] = j;
        }
        if let Some(i) = map.iter().position(|&j| j == usize::MAX) {
            let (_, labels) = self.labels.as_ref().unwrap();
            return Err(syntax(self.start, format!("{what} map is missing `{}`", labels[i])));
        }
        Ok(map)
    }

    fn finish(self) -> Result<FiniteAlgebra, FormatError> {
        let (_, labels) = self.labels.clone().ok_or_else(|| syntax(self.start, "missing `elements` line"))?;
        let n = labels.len();
        let mut pairs = Vec::new();
        for (line, a, b) in &self.covers {
            pairs.push((self.index(*line, a)?, self.index(*line, b)?));
        }
        let kleene = self.map("kleene", &self.kleene, n)?;
        let brouwer = self.map("brouwer", &self.brouwer, n)?;
        let (bline, z, o) = self.bounds.clone().ok_or_else(|| syntax(self.start, "missing `bounds` line"))?;
        let zero = self.index(bline, &z)?;
        let one = self.index(bline, &o)?;
        let leq = order::closure(n, &pairs);
        let raw = RawAlgebra {
            name: self.name.clone(),
            labels,
            leq: leq.chunks(n).map(<[bool]>::to_vec).collect(),
            kleene,
            brouwer,
            zero,
            one,
        };
        FiniteAlgebra::new(raw).map_err(|source| FormatError::Invalid { name: self.name, line: self.start, source })
    }
}

fn parse_pairs(line: usize, rest: &str, out: &mut Vec<(usize, String, String)>) -> Result<(), FormatError> {
    for tok in rest.split_whitespace() {
        let (a, b) = tok.split_once(':').ok_or_else(|| syntax(line, format!("expected `a:b`, found `{tok}`")))?;
        if !valid_label(a) || !valid_label(b) {
            return Err(syntax(line, format!("bad map entry `{tok}`")));
        }
        out.push((line, a.to_string(), b.to_string()));
    }
    Ok(())
}

fn parse_covers(line: usize, rest: &str, out: &mut Vec<(usize, String, String)>) -> Result<(), FormatError> {
    for part in rest.split(';') {
        let toks: Vec<&str> = part.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks.len() < 3 || toks.len().is_multiple_of(2) {
            return Err(syntax(line, format!("expected `a < b`, found `{}`", part.trim())));
        }
        for w in toks.windows(3).step_by(2) {
            if w[1] != "<" || !valid_label(w[0]) || !valid_label(w[2]) {
                return Err(syntax(line, format!("expected `a < b`, found `{}`", part.trim())));
            }
            out.push((line, w[0].to_string(), w[2].to_string()));
        }
    }
    Ok(())
}

/// Parses every algebra document in `text`.
pub fn parse_algebras(text: &str) -> Result<Vec<FiniteAlgebra>, FormatError> {
    let mut docs: Vec<Doc> = Vec::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw_line.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        if key == "algebra" {
            if rest.is_empty() {
                return Err(syntax(line, "algebra needs a name"));
            }
            docs.push(Doc { start: line, name: rest.to_string(), ..Doc::default() });
            continue;
        }
        let doc = docs.last_mut().ok_or_else(|| syntax(line, "expected `algebra <name>` first"))?;
        match key {
            "elements" => {
                if doc.labels.is_some() {
                    return Err(syntax(line, "duplicate `elements` line"));
                }
                let labels: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if labels.is_empty() {
                    return Err(syntax(line, "no elements"));
                }
                if let Some(bad) = labels.iter().find(|l| !valid_label(l)) {
                    return Err(syntax(line, format!("bad element label `{bad}`")));
                }
                for (j, l) in labels.iter().enumerate() {
                    if labels[..j].contains(l) {
                        return Err(syntax(line, format!("duplicate element `{l}`")));
                    }
                }
                doc.labels = Some((line, labels));
            }
            "covers" => parse_covers(line, rest, &mut doc.covers)?,
            "kleene" => parse_pairs(line, rest, &mut doc.kleene)?,
            "brouwer" => parse_pairs(line, rest, &mut doc.brouwer)?,
            "bounds" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(syntax(line, "expected `bounds <zero> <one>`"));
                }
                doc.bounds = Some((line, toks[0].to_string(), toks[1].to_string()));
            }
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    if docs.is_empty() {
        return Err(syntax(1, "no `algebra` document found"));
    }
    docs.into_iter().map(Doc::finish).collect()
}

/// Parses a document holding exactly one algebra.
pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra, FormatError> {
    let mut v = parse_algebras(text)?;
    if v.len() != 1 {
        return Err(syntax(1, format!("expected one algebra, found {}", v.len())));
    }
    Ok(v.pop().unwrap())
}

pub fn print_algebra(a: &FiniteAlgebra) -> String {
    let mut s = String::new();
    let l = |x| a.label(x);
    writeln!(s, "algebra {}", a.name()).unwrap();
    writeln!(s, "elements {}", a.labels().join(" ")).unwrap();
    let covers: Vec<String> = a.covers().into_iter().map(|(x, y)| format!("{} < {}", l(x), l(y))).collect();
    writeln!(s, "covers {}", covers.join(" ; ")).unwrap();
    let kleene: Vec<String> = a.elements().map(|x| format!("{}:{}", l(x), l(a.kleene(x)))).collect();
    writeln!(s, "kleene {}", kleene.join(" ")).unwrap();
    let brouwer: Vec<String> = a.elements().map(|x| format!("{}:{}", l(x), l(a.brouwer(x)))).collect();
    writeln!(s, "brouwer {}", brouwer.join(" ")).unwrap();
    writeln!(s, "bounds {} {}", l(a.zero()), l(a.one())).unwrap();
    s
}

pub fn print_algebras<'a>(algebras: impl IntoIterator<Item = &'a FiniteAlgebra>) -> String {
    algebras.into_iter().map(print_algebra).collect::<Vec<_>>().join("\n")
}

/// Hasse diagram in DOT: covers as solid edges drawn bottom-up, the Kleene
/// involution as dashed undirected edges, Brouwer images as node annotations.
pub fn export_dot(a: &FiniteAlgebra) -> String {
    let mut s = String::new();
    let quote = |t: &str| t.replace('\\', "\\\\").replace('"', "\\\"");
    writeln!(s, "digraph \"{}\" {{", quote(a.name())).unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    writeln!(s, "  node [shape=circle];").unwrap();
    for x in a.elements() {
        writeln!(
            s,
            "  n{} [label=\"{}\", xlabel=\"~{}\"];",
            x.index(),
            quote(a.label(x)),
            quote(a.label(a.brouwer(x)))
        )
        .unwrap();
    }
    for (x, y) in a.covers() {
        writeln!(s, "  n{} -> n{};", x.index(), y.index()).unwrap();
    }
    for x in a.elements() {
        let k = a.kleene(x);
        if x.index() < k.index() {
            writeln!(s, "  n{} -> n{} [dir=none, style=dashed, constraint=false];", x.index(), k.index()).unwrap();
        } else if x == k {
            writeln!(s, "  n{} [peripheries=2];", x.index()).unwrap();
        }
    }
    writeln!(s, "}}").unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const D3: &str = "# the 3-element Kleene chain\nalgebra D3\nelements 0 a 1\ncovers 0 < a < 1\nkleene 0:1 a:a 1:0\nbrouwer 0:1 a:0 1:0\nbounds 0 1\n";

    #[test]
    fn parses_chained_covers_and_comments() {
        let a = parse_algebra(D3).unwrap();
        assert_eq!(a.size(), 3);
        assert!(a.leq(a.zero(), a.one()));
        assert_eq!(parse_algebra(&print_algebra(&a)).unwrap(), a);
    }

    #[test]
    fn unknown_label_reports_line() {
        let bad = D3.replace("brouwer 0:1 a:0 1:0", "brouwer 0:1 z:0 1:0");
        match parse_algebra(&bad) {
            Err(FormatError::Syntax { line, message }) => {
                assert_eq!(line, 6);
                assert!(message.contains("unknown element `z`"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn semantic_violation_is_not_a_syntax_error() {
        let bad = D3.replace("kleene 0:1 a:a 1:0", "kleene 0:0 a:a 1:1");
        assert!(matches!(parse_algebra(&bad), Err(FormatError::Invalid { line: 2, .. })));
    }

    #[test]
    fn missing_map_entry() {
        let bad = D3.replace("kleene 0:1 a:a 1:0", "kleene 0:1 1:0");
        let err = parse_algebra(&bad).unwrap_err();
        assert!(err.to_string().contains("missing `a`"), "{err}");
    }

    #[test]
    fn dot_marks_fixpoints_and_involution() {
        let a = parse_algebra(D3).unwrap();
        let dot = export_dot(&a);
        assert!(dot.contains("n1 [peripheries=2];"));
        assert!(dot.contains("n0 -> n2 [dir=none, style=dashed, constraint=false];"));
        assert!(dot.contains("n0 -> n1;"));
        assert_eq!(dot, export_dot(&a));
    }
}
