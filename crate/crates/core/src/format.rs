//! The line-oriented algebra file format.
//!
//! ```text
//! # comment
//! algebra F8
//! signature BZ
//! elements 0 c a b b' a' c' 1
//! covers 0: c
//! covers c: a b
//! invol 0:1 c:c' a:a' b:b'
//! brouwer 0:1 *:0
//! ```
//!
//! `elements` lists labels bottom first and top last for bounded signatures;
//! `covers x: y z` gives x's upper covers and the order is the
//! reflexive-transitive closure; `invol` pairs imply both directions and must
//! cover every element; `brouwer` and `diamond` take explicit `x:y` entries
//! with an optional `*:y` default. There are no other defaults.

use crate::algebra::{AlgebraBuilder, FiniteAlgebra, Signature, UnaryOp};
use crate::error::{Error, Result};
use std::path::Path;

/// Entries plus an optional `*:` default, as read from a unary-table line.
type UnarySlot = (Vec<(String, String)>, Option<String>);

fn fail(line: usize, message: impl Into<String>) -> Error {
    Error::FormatError {
        line,
        message: message.into(),
    }
}

/// Parse the file format from a string.
pub fn from_text(text: &str) -> Result<FiniteAlgebra> {
    let mut name: Option<String> = None;
    let mut signature: Option<Signature> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut covers: Vec<(String, Vec<String>)> = Vec::new();
    let mut invol: Vec<(String, String)> = Vec::new();
    let mut brouwer: Option<UnarySlot> = None;
    let mut diamond: Option<UnarySlot> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match keyword {
            "algebra" => {
                if rest.is_empty() {
                    return Err(fail(lineno, "algebra needs a name"));
                }
                name = Some(rest.to_string());
            }
            "signature" => {
                signature = Some(
                    Signature::from_tag(rest)
                        .map_err(|_| fail(lineno, format!("unknown signature {rest:?}")))?,
                );
            }
            "elements" => {
                labels = rest.split_whitespace().map(str::to_string).collect();
                if labels.is_empty() {
                    return Err(fail(lineno, "elements line is empty"));
                }
            }
            "covers" => {
                let (lower, uppers) = rest
                    .split_once(':')
                    .ok_or_else(|| fail(lineno, "covers needs `x: y z ...`"))?;
                covers.push((
                    lower.trim().to_string(),
                    uppers.split_whitespace().map(str::to_string).collect(),
                ));
            }
            "invol" => {
                for pair in rest.split_whitespace() {
                    let (a, b) = pair
                        .split_once(':')
                        .ok_or_else(|| fail(lineno, format!("bad invol pair {pair:?}")))?;
                    invol.push((a.to_string(), b.to_string()));
                }
            }
            "brouwer" | "diamond" => {
                let mut entries = Vec::new();
                let mut default = None;
                for pair in rest.split_whitespace() {
                    let (a, b) = pair
                        .split_once(':')
                        .ok_or_else(|| fail(lineno, format!("bad {keyword} entry {pair:?}")))?;
                    if a == "*" {
                        default = Some(b.to_string());
                    } else {
                        entries.push((a.to_string(), b.to_string()));
                    }
                }
                let slot = (entries, default);
                if keyword == "brouwer" {
                    brouwer = Some(match brouwer {
                        None => slot,
                        Some((mut e, d)) => {
                            e.extend(slot.0);
                            (e, slot.1.or(d))
                        }
                    });
                } else {
                    diamond = Some(match diamond {
                        None => slot,
                        Some((mut e, d)) => {
                            e.extend(slot.0);
                            (e, slot.1.or(d))
                        }
                    });
                }
            }
            other => return Err(fail(lineno, format!("unknown keyword {other:?}"))),
        }
    }

    let name = name.ok_or_else(|| fail(0, "missing algebra line"))?;
    let signature = signature.ok_or_else(|| fail(0, "missing signature line"))?;
    if labels.is_empty() {
        return Err(fail(0, "missing elements line"));
    }
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut builder = AlgebraBuilder::new(&name, signature, &label_refs);
    for (lower, uppers) in &covers {
        let ups: Vec<&str> = uppers.iter().map(String::as_str).collect();
        builder = builder.covers(lower, &ups);
    }
    if !invol.is_empty() {
        let pairs: Vec<(&str, &str)> = invol
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        builder = builder.involution_pairs(&pairs);
    }
    let expand = |slot: &Option<UnarySlot>| -> Option<Vec<(String, String)>> {
        slot.as_ref().map(|(entries, default)| {
            let mut full = entries.clone();
            if let Some(d) = default {
                for l in &labels {
                    if !entries.iter().any(|(a, _)| a == l) {
                        full.push((l.clone(), d.clone()));
                    }
                }
            }
            full
        })
    };
    if let Some(entries) = expand(&brouwer) {
        let pairs: Vec<(&str, &str)> = entries
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        builder = builder.brouwer_map(&pairs);
    }
    if let Some(entries) = expand(&diamond) {
        let pairs: Vec<(&str, &str)> = entries
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        builder = builder.diamond_map(&pairs);
    }
    builder.build()
}

/// Render the file format. Every unary table is written out in full.
pub fn to_text(algebra: &FiniteAlgebra) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra {}\n", algebra.name()));
    out.push_str(&format!("signature {}\n", algebra.signature().tag()));
    out.push_str(&format!("elements {}\n", algebra.labels().join(" ")));
    for x in algebra.elements() {
        let ups = algebra.upper_covers(x);
        if !ups.is_empty() {
            let names: Vec<&str> = ups.iter().map(|&u| algebra.label(u)).collect();
            out.push_str(&format!(
                "covers {}: {}\n",
                algebra.label(x),
                names.join(" ")
            ));
        }
    }
    if let Some(table) = algebra.unary(UnaryOp::Kleene) {
        let mut pairs = Vec::new();
        for x in algebra.elements() {
            if table[x] >= x {
                pairs.push(format!("{}:{}", algebra.label(x), algebra.label(table[x])));
            }
        }
        out.push_str(&format!("invol {}\n", pairs.join(" ")));
    }
    for (op, key) in [(UnaryOp::Brouwer, "brouwer"), (UnaryOp::Diamond, "diamond")] {
        if let Some(table) = algebra.unary(op) {
            let entries: Vec<String> = algebra
                .elements()
                .map(|x| format!("{}:{}", algebra.label(x), algebra.label(table[x])))
                .collect();
            out.push_str(&format!("{key} {}\n", entries.join(" ")));
        }
    }
    out
}

pub fn load_algebra(path: &Path) -> Result<FiniteAlgebra> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::FormatError {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    from_text(&text)
}

pub fn save_algebra(algebra: &FiniteAlgebra, path: &Path) -> Result<()> {
    std::fs::write(path, to_text(algebra)).map_err(|e| Error::FormatError {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, catalog_entries};

    #[test]
    fn full_catalog_round_trips() {
        for entry in catalog_entries() {
            let text = to_text(&entry.algebra);
            let back = from_text(&text).unwrap_or_else(|e| panic!("{}: {e}", entry.name));
            assert_eq!(
                back, entry.algebra,
                "{} drifted across save/load",
                entry.name
            );
        }
    }

    #[test]
    fn default_star_entry_applies() {
        let text = "algebra T\nsignature BZ\nelements 0 a 1\ncovers 0: a\ncovers a: 1\ninvol 0:1 a:a\nbrouwer 0:1 *:0\n";
        let a = from_text(text).unwrap();
        assert_eq!(a, catalog("D3").unwrap().with_name("T"));
    }

    #[test]
    fn non_lattice_file_is_malformed() {
        let text = "algebra bad\nsignature LATTICE\nelements 0 a b c d 1\ncovers 0: a b\ncovers a: c d\ncovers b: c d\ncovers c: 1\ncovers d: 1\n";
        assert!(matches!(from_text(text), Err(Error::MalformedAlgebra(_))));
    }

    #[test]
    fn format_errors_carry_line_numbers() {
        let text = "algebra x\nsignature BZ\nelements 0 1\nbogus line\n";
        match from_text(text) {
            Err(Error::FormatError { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let text =
            "# a comment\nalgebra T # trailing\nsignature LATTICE\n\nelements 0 1\ncovers 0: 1\n";
        let a = from_text(text).unwrap();
        assert_eq!(a.size(), 2);
    }
}
