//! Batch files of diagram codes, and the bundled corpus.

use crate::diagram::{parse_pd, PlanarDiagram};
use crate::error::Result;

/// Standard diagrams shipped with the crate: both trefoils, the figure-eight,
/// `8_16`, `9_42`, `9_48`, the two-component link obtained by resolving a
/// crossing of `9_48`, the `(2,q)` torus knots and links for `q ≤ 13` and
/// connected sums of up to four figure-eights.
pub const BUNDLED: &str = include_str!("../data/corpus.pd");

/// One code line of a batch file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry<'a> {
    /// 1-based line number in the file.
    pub line: usize,
    /// The trailing comment, or `line <n>` when there is none.
    pub name: String,
    /// The line with its comment removed.
    pub code: &'a str,
}

/// Lines carrying a code. Blank lines and lines holding only a comment are
/// skipped.
pub fn entries(text: &str) -> Vec<Entry<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let (code, comment) = match raw.split_once('#') {
                Some((c, n)) => (c, Some(n.trim())),
                None => (raw, None),
            };
            let code = code.trim();
            if code.is_empty() {
                return None;
            }
            let name = match comment {
                Some(n) if !n.is_empty() => n.to_string(),
                _ => format!("line {}", i + 1),
            };
            Some(Entry {
                line: i + 1,
                name,
                code,
            })
        })
        .collect()
}

/// The bundled diagrams with their names.
pub fn bundled() -> Vec<(String, PlanarDiagram)> {
    entries(BUNDLED)
        .into_iter()
        .map(|e| (e.name, parse_pd(e.code).expect("bundled diagrams parse")))
        .collect()
}

/// A bundled diagram by name.
pub fn get(name: &str) -> Result<PlanarDiagram> {
    let e = entries(BUNDLED)
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| crate::Error::Invalid(format!("no bundled diagram named '{name}'")))?;
    parse_pd(e.code)
}
