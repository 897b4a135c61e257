//! Text formats.
//!
//! * APX: logic-programming style facts, `arg(<id>).` and
//!   `att(<attacker>,<target>).`, whitespace tolerant, any number of
//!   facts per line.
//! * TGF: node identifiers one per line, a `#` separator line, then
//!   `<attacker> <target>` edge lines.
//! * DOT: serialization only, for rendering.
//! * Partition files: `BlockName: member member ...` lines; blank lines
//!   and `#` comments are skipped.
//!
//! Parsing is strict by default: an attack naming an undeclared
//! argument is an error. Lenient mode auto-declares such arguments.
//! Serialization is canonical — sorted arguments, then sorted attacks —
//! so equal frameworks always produce byte-identical documents.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::abstraction::{Partition, PartitionError};
use crate::af::{is_valid_identifier, ArgumentId, ArgumentationFramework};

/// Input formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Apx,
    Tgf,
}

/// Output formats: the two parseable formats plus DOT.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Apx,
    Tgf,
    Dot,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Apx => OutputFormat::Apx,
            Format::Tgf => OutputFormat::Tgf,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    #[default]
    Strict,
    /// Auto-declare arguments first seen inside an attack.
    Lenient,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed fact `{text}`")]
    MalformedFact { line: usize, text: String },
    #[error("line {line}: malformed node line `{text}`")]
    MalformedNode { line: usize, text: String },
    #[error("line {line}: malformed edge `{text}` (expected `<attacker> <target>`)")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: invalid identifier `{id}`")]
    InvalidIdentifier { line: usize, id: String },
    #[error("line {line}: attack references undeclared argument `{id}`")]
    UndeclaredArgument { line: usize, id: ArgumentId },
}

/// Parses `text` in the given format, strict mode.
pub fn parse(text: &str, format: Format) -> Result<ArgumentationFramework, ParseError> {
    parse_with(text, format, ParseMode::Strict)
}

pub fn parse_with(
    text: &str,
    format: Format,
    mode: ParseMode,
) -> Result<ArgumentationFramework, ParseError> {
    match format {
        Format::Apx => parse_apx(text, mode),
        Format::Tgf => parse_tgf(text, mode),
    }
}

/// Serializes canonically in the requested output format.
pub fn serialize(af: &ArgumentationFramework, format: OutputFormat) -> String {
    match format {
        OutputFormat::Apx => to_apx(af),
        OutputFormat::Tgf => to_tgf(af),
        OutputFormat::Dot => to_dot(af),
    }
}

fn parse_apx(text: &str, mode: ParseMode) -> Result<ArgumentationFramework, ParseError> {
    let mut declared: Vec<ArgumentId> = Vec::new();
    let mut attacks: Vec<(ArgumentId, ArgumentId)> = Vec::new();

    for (fact, line) in split_facts(text)? {
        if let Some(inner) = fact.strip_prefix("arg(").and_then(|r| r.strip_suffix(')')) {
            let id = inner.trim();
            check_identifier(id, line)?;
            declared.push(id.to_owned());
        } else if let Some(inner) = fact.strip_prefix("att(").and_then(|r| r.strip_suffix(')')) {
            let mut parts = inner.splitn(2, ',');
            let a = parts.next().unwrap_or("").trim();
            let b = parts.next().map(str::trim);
            let b = match b {
                Some(b) if !a.is_empty() && !b.is_empty() => b,
                _ => {
                    return Err(ParseError::MalformedFact {
                        line,
                        text: fact.clone(),
                    })
                }
            };
            check_identifier(a, line)?;
            check_identifier(b, line)?;
            attacks.push((a.to_owned(), b.to_owned()));
        } else {
            return Err(ParseError::MalformedFact { line, text: fact });
        }
    }

    assemble(declared, attacks, mode, text)
}

/// Splits an APX document into `.`-terminated facts, tracking the line
/// on which each fact starts.
fn split_facts(text: &str) -> Result<Vec<(String, usize)>, ParseError> {
    let mut facts = Vec::new();
    let mut current = String::new();
    let mut line = 1usize;
    let mut fact_line = 1usize;
    for ch in text.chars() {
        match ch {
            '.' => {
                let fact = current.trim().to_owned();
                if !fact.is_empty() {
                    facts.push((fact, fact_line));
                }
                current.clear();
            }
            '\n' => {
                line += 1;
                if current.trim().is_empty() {
                    current.clear();
                }
                current.push(' ');
            }
            _ => {
                if current.trim().is_empty() && !ch.is_whitespace() {
                    fact_line = line;
                }
                current.push(ch);
            }
        }
    }
    let rest = current.trim();
    if !rest.is_empty() {
        return Err(ParseError::MalformedFact {
            line: fact_line,
            text: rest.to_owned(),
        });
    }
    Ok(facts)
}

fn parse_tgf(text: &str, mode: ParseMode) -> Result<ArgumentationFramework, ParseError> {
    let mut declared: Vec<ArgumentId> = Vec::new();
    let mut attacks: Vec<(ArgumentId, ArgumentId)> = Vec::new();
    let mut in_edges = false;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "#" && !in_edges {
            in_edges = true;
            continue;
        }
        if in_edges {
            let mut parts = trimmed.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) => {
                    check_identifier(a, line)?;
                    check_identifier(b, line)?;
                    attacks.push((a.to_owned(), b.to_owned()));
                }
                _ => {
                    return Err(ParseError::MalformedEdge {
                        line,
                        text: trimmed.to_owned(),
                    })
                }
            }
        } else {
            if trimmed.split_whitespace().count() != 1 {
                return Err(ParseError::MalformedNode {
                    line,
                    text: trimmed.to_owned(),
                });
            }
            check_identifier(trimmed, line)?;
            declared.push(trimmed.to_owned());
        }
    }

    assemble(declared, attacks, mode, text)
}

fn check_identifier(id: &str, line: usize) -> Result<(), ParseError> {
    if is_valid_identifier(id) {
        Ok(())
    } else {
        Err(ParseError::InvalidIdentifier {
            line,
            id: id.to_owned(),
        })
    }
}

/// Builds the framework, enforcing (or relaxing) declaredness of attack
/// endpoints. `text` is re-scanned only to attribute line numbers to
/// strict-mode violations.
fn assemble(
    declared: Vec<ArgumentId>,
    attacks: Vec<(ArgumentId, ArgumentId)>,
    mode: ParseMode,
    text: &str,
) -> Result<ArgumentationFramework, ParseError> {
    let known: BTreeSet<&str> = declared.iter().map(String::as_str).collect();
    let mut args = declared.clone();
    for (a, b) in &attacks {
        for id in [a, b] {
            if !known.contains(id.as_str()) {
                match mode {
                    ParseMode::Strict => {
                        return Err(ParseError::UndeclaredArgument {
                            line: line_mentioning(text, id),
                            id: id.clone(),
                        })
                    }
                    ParseMode::Lenient => args.push(id.clone()),
                }
            }
        }
    }
    Ok(ArgumentationFramework::new(args, attacks).expect("identifiers were validated"))
}

fn line_mentioning(text: &str, id: &str) -> usize {
    for (i, line) in text.lines().enumerate() {
        if line.contains(id) {
            return i + 1;
        }
    }
    1
}

pub fn to_apx(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for arg in af.args() {
        out.push_str(&format!("arg({arg}).\n"));
    }
    for (a, b) in af.attacks() {
        out.push_str(&format!("att({a},{b}).\n"));
    }
    out
}

pub fn to_tgf(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for arg in af.args() {
        out.push_str(arg);
        out.push('\n');
    }
    out.push_str("#\n");
    for (a, b) in af.attacks() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

pub fn to_dot(af: &ArgumentationFramework) -> String {
    let mut out = String::from("digraph af {\n");
    for arg in af.args() {
        match af.label(arg) {
            Some(text) => out.push_str(&format!(
                "  \"{arg}\" [label=\"{}\"];\n",
                escape_dot(&format!("{arg}: {text}"))
            )),
            None => out.push_str(&format!("  \"{arg}\";\n")),
        }
    }
    for (a, b) in af.attacks() {
        out.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
    }
    out.push_str("}\n");
    out
}

fn escape_dot(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionParseError {
    #[error("line {line}: expected `BlockName: member member ...`")]
    MalformedBlock { line: usize },
    #[error("line {line}: invalid block name `{name}`")]
    InvalidName { line: usize, name: String },
    #[error("line {line}: unknown argument `{id}` in block `{block}`")]
    UnknownArgument {
        line: usize,
        block: String,
        id: String,
    },
    #[error(transparent)]
    Invalid(#[from] PartitionError),
}

/// Parses a partition file against `af`.
pub fn parse_partition(
    text: &str,
    af: &ArgumentationFramework,
) -> Result<Partition, PartitionParseError> {
    let mut blocks: Vec<(String, crate::af::ArgumentSet)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (name, members) = trimmed
            .split_once(':')
            .ok_or(PartitionParseError::MalformedBlock { line })?;
        let name = name.trim();
        if !is_valid_identifier(name) {
            return Err(PartitionParseError::InvalidName {
                line,
                name: name.to_owned(),
            });
        }
        let mut set = crate::af::ArgumentSet::new();
        for id in members.split_whitespace() {
            if !af.contains(id) {
                return Err(PartitionParseError::UnknownArgument {
                    line,
                    block: name.to_owned(),
                    id: id.to_owned(),
                });
            }
            set.insert(id);
        }
        blocks.push((name.to_owned(), set));
    }
    Ok(Partition::new(af, blocks)?)
}

/// Serializes a partition in canonical block order.
pub fn serialize_partition(p: &Partition) -> String {
    let mut out = String::new();
    for block in p.blocks() {
        out.push_str(&block.name);
        out.push(':');
        for id in block.members.iter() {
            out.push(' ');
            out.push_str(id);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::ArgumentSet;
    use crate::fixtures;

    #[test]
    fn apx_single_line_document() {
        let af = parse(
            "arg(a1). arg(a2). arg(a3). arg(a4). arg(a5). att(a5,a3). att(a3,a5). att(a4,a5).",
            Format::Apx,
        )
        .unwrap();
        assert_eq!(af, fixtures::jack_joe_unlabelled());
    }

    #[test]
    fn apx_empty_document_is_the_empty_framework() {
        let af = parse("", Format::Apx).unwrap();
        assert_eq!(af.arg_count(), 0);
        assert_eq!(af.attack_count(), 0);
    }

    #[test]
    fn apx_strict_rejects_undeclared_arguments() {
        let err = parse("att(x,y).", Format::Apx).unwrap_err();
        assert_eq!(
            err,
            ParseError::UndeclaredArgument {
                line: 1,
                id: "x".into()
            }
        );
    }

    #[test]
    fn apx_lenient_autodeclares() {
        let af = parse_with("att(x,y).", Format::Apx, ParseMode::Lenient).unwrap();
        assert_eq!(af.args(), &["x", "y"]);
        assert!(af.attacks_pair("x", "y"));
    }

    #[test]
    fn apx_malformed_fact_reports_its_line() {
        let err = parse("arg(a).\narg(b).\nbogus fact.", Format::Apx).unwrap_err();
        assert_eq!(
            err,
            ParseError::MalformedFact {
                line: 3,
                text: "bogus fact".into()
            }
        );
        let err = parse("arg(a).\natt(a).", Format::Apx).unwrap_err();
        assert_eq!(
            err,
            ParseError::MalformedFact {
                line: 2,
                text: "att(a)".into()
            }
        );
        // A fact missing its terminating period is malformed.
        assert!(parse("arg(a)", Format::Apx).is_err());
    }

    #[test]
    fn tgf_round_trip_and_sections() {
        let af = parse("b\na\n#\nb a\n", Format::Tgf).unwrap();
        assert_eq!(af.args(), &["a", "b"]);
        assert!(af.attacks_pair("b", "a"));
        assert_eq!(to_tgf(&af), "a\nb\n#\nb a\n");
        // Nodes only, no separator.
        let nodes = parse("a\nb\n", Format::Tgf).unwrap();
        assert_eq!(nodes.attack_count(), 0);
        // Empty document.
        assert_eq!(parse("", Format::Tgf).unwrap().arg_count(), 0);
    }

    #[test]
    fn tgf_strict_rejects_undeclared_edges() {
        let err = parse("a\n#\na z\n", Format::Tgf).unwrap_err();
        assert_eq!(
            err,
            ParseError::UndeclaredArgument {
                line: 3,
                id: "z".into()
            }
        );
        let ok = parse_with("a\n#\na z\n", Format::Tgf, ParseMode::Lenient).unwrap();
        assert_eq!(ok.args(), &["a", "z"]);
    }

    #[test]
    fn tgf_malformed_lines() {
        let err = parse("a b c\n#\n", Format::Tgf).unwrap_err();
        assert!(matches!(err, ParseError::MalformedNode { line: 1, .. }));
        let err = parse("a\n#\na\n", Format::Tgf).unwrap_err();
        assert!(matches!(err, ParseError::MalformedEdge { line: 3, .. }));
    }

    #[test]
    fn canonical_apx_serialization() {
        let af = fixtures::jack_joe_unlabelled();
        assert_eq!(
            to_apx(&af),
            "arg(a1).\narg(a2).\narg(a3).\narg(a4).\narg(a5).\n\
             att(a3,a5).\natt(a4,a5).\natt(a5,a3).\n"
        );
        assert_eq!(to_apx(&ArgumentationFramework::empty()), "");
    }

    #[test]
    fn round_trips_preserve_structure() {
        for af in [
            fixtures::jack_joe_unlabelled(),
            fixtures::three_cycle(),
            ArgumentationFramework::empty(),
        ] {
            assert_eq!(parse(&to_apx(&af), Format::Apx).unwrap(), af);
            assert_eq!(parse(&to_tgf(&af), Format::Tgf).unwrap(), af);
        }
    }

    #[test]
    fn dot_output_contains_nodes_edges_and_self_loops() {
        let af = ArgumentationFramework::new(["a"], [("a", "a")]).unwrap();
        let dot = to_dot(&af);
        assert!(dot.starts_with("digraph af {"));
        assert!(dot.contains("\"a\";"));
        assert!(dot.contains("\"a\" -> \"a\";"));
    }

    #[test]
    fn partition_file_round_trip() {
        let af = fixtures::jack_joe_unlabelled();
        let text = "# clusters\nAX: a1 a2 a4\nB3: a3\nB5: a5\n";
        let p = parse_partition(text, &af).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(
            p.block_of("a2").unwrap().members,
            ArgumentSet::from_ids(["a1", "a2", "a4"])
        );
        assert_eq!(serialize_partition(&p), "AX: a1 a2 a4\nB3: a3\nB5: a5\n");
    }

    #[test]
    fn partition_file_errors() {
        let af = fixtures::jack_joe_unlabelled();
        let err = parse_partition("AX a1 a2\n", &af).unwrap_err();
        assert!(matches!(
            err,
            PartitionParseError::MalformedBlock { line: 1 }
        ));
        let err = parse_partition("AX: a1 a9\n", &af).unwrap_err();
        assert_eq!(
            err,
            PartitionParseError::UnknownArgument {
                line: 1,
                block: "AX".into(),
                id: "a9".into()
            }
        );
    }
}
