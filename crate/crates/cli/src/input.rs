use std::io::Read;
use std::path::PathBuf;

use altfloer::corpus;
use altfloer::{parse_gauss, parse_pd, Error, PlanarDiagram, Result};
use clap::{Args, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pd,
    Gauss,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Out {
    Text,
    Json,
    Csv,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Input file with one diagram per line; `-` or nothing reads stdin.
    pub file: Option<PathBuf>,
    /// Read the bundled corpus instead of a file.
    #[arg(long, conflicts_with = "file")]
    pub bundled: bool,
    #[arg(long, value_enum, default_value = "pd")]
    pub format: Format,
    #[arg(long, value_enum, default_value = "text")]
    pub out: Out,
    /// Distinguished edge, by its 1-based label.
    #[arg(long, value_name = "K")]
    pub marked_edge: Option<usize>,
    /// Outer face, by its index in the diagram JSON.
    #[arg(long, value_name = "K")]
    pub outer_face: Option<usize>,
    /// Exit with status 1 when any record fails.
    #[arg(long)]
    pub strict: bool,
}

/// One input line: its name and the parsed diagram, or why it failed.
pub struct Record {
    pub line: usize,
    pub name: String,
    pub diagram: Result<PlanarDiagram>,
}

pub fn read_text(c: &Common) -> std::io::Result<String> {
    if c.bundled {
        return Ok(corpus::BUNDLED.to_string());
    }
    match &c.file {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

pub fn records(text: &str, c: &Common) -> Vec<Record> {
    corpus::entries(text)
        .into_iter()
        .map(|e| {
            let parsed = match c.format {
                Format::Pd => parse_pd(e.code),
                Format::Gauss => parse_gauss(e.code),
            };
            let diagram = parsed.and_then(|d| redecorate(d, c.marked_edge, c.outer_face));
            Record {
                line: e.line,
                name: e.name,
                diagram,
            }
        })
        .collect()
}

fn redecorate(
    d: PlanarDiagram,
    marked: Option<usize>,
    face: Option<usize>,
) -> Result<PlanarDiagram> {
    let edge = match marked {
        None => None,
        Some(0) => return Err(Error::Decoration("edge labels start at 1".into())),
        Some(k) => Some(k - 1),
    };
    match (edge, face) {
        (None, None) => Ok(d),
        (Some(e), None) => d.with_marked_edge(e),
        (e, Some(f)) => {
            let boundary = d
                .faces()
                .get(f)
                .ok_or_else(|| Error::Decoration(format!("no face {f}")))?
                .boundary();
            let e = match e {
                Some(e) => e,
                None if boundary.iter().any(|&(x, _)| x == d.marked_edge()) => d.marked_edge(),
                None => boundary
                    .iter()
                    .map(|&(x, _)| x)
                    .min()
                    .expect("faces have edges"),
            };
            d.with_decoration(e, f)
        }
    }
}
