use std::collections::BTreeMap;

use super::PlanarDiagram;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Visit {
    label: u64,
    over: bool,
    positive: bool,
}

/// Parses a signed oriented Gauss code and converts it to a diagram.
///
/// Each visit is written `O<k><s>` or `U<k><s>` (over or under at crossing
/// `k`, crossing sign `s` in `+`/`-`), e.g. `O1+ U2+ O3+ U1+ O2+ U3+`.
/// Components are separated by `|`. A code that does not describe a planar
/// diagram is rejected.
pub fn parse_gauss(text: &str) -> Result<PlanarDiagram> {
    let body = match text.find('#') {
        Some(i) => &text[..i],
        None => text,
    };
    let components = body
        .split('|')
        .map(parse_component)
        .collect::<Result<Vec<_>>>()?;
    if components.iter().all(|c| c.is_empty()) {
        return Err(Error::Gauss("empty code".into()));
    }
    if components.iter().any(|c| c.is_empty()) {
        return Err(Error::Disconnected);
    }

    let mut by_label: BTreeMap<u64, Vec<(usize, usize)>> = BTreeMap::new();
    for (ci, comp) in components.iter().enumerate() {
        for (p, v) in comp.iter().enumerate() {
            by_label.entry(v.label).or_default().push((ci, p));
        }
    }
    for (label, visits) in &by_label {
        if visits.len() != 2 {
            return Err(Error::Gauss(format!(
                "crossing {label} is visited {} times",
                visits.len()
            )));
        }
        let [a, b] = [visits[0], visits[1]].map(|(c, p)| components[c][p]);
        if a.over == b.over {
            return Err(Error::Gauss(format!(
                "crossing {label} needs one over and one under visit"
            )));
        }
        if a.positive != b.positive {
            return Err(Error::Gauss(format!(
                "crossing {label} has conflicting signs"
            )));
        }
    }

    // edge entering visit p of a component is base + p; leaving it is base + p + 1
    let mut bases = Vec::with_capacity(components.len());
    let mut next = 1u64;
    for comp in &components {
        bases.push(next);
        next += comp.len() as u64;
    }
    let edge_in = |c: usize, p: usize| bases[c] + p as u64;
    let edge_out = |c: usize, p: usize| bases[c] + ((p + 1) % components[c].len()) as u64;

    let mut codes = Vec::with_capacity(by_label.len());
    for visits in by_label.values() {
        let mut code = [0u64; 4];
        for &(c, p) in visits {
            let v = components[c][p];
            let (i, o) = (edge_in(c, p), edge_out(c, p));
            if !v.over {
                code[0] = i;
                code[2] = o;
            } else if v.positive {
                code[1] = i;
                code[3] = o;
            } else {
                code[3] = i;
                code[1] = o;
            }
        }
        codes.push(code);
    }

    PlanarDiagram::from_codes(&codes).map_err(|e| match e {
        Error::NonPlanar { faces, expected } => Error::Gauss(format!(
            "traces {faces} faces instead of {expected}, so no planar realization"
        )),
        Error::Orientation(m) => Error::Gauss(m),
        other => other,
    })
}

fn parse_component(text: &str) -> Result<Vec<Visit>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(parse_visit)
        .collect()
}

fn parse_visit(token: &str) -> Result<Visit> {
    let bad = || Error::Gauss(format!("malformed visit '{token}'"));
    let mut chars = token.chars();
    let over = match chars.next() {
        Some('O') | Some('o') => true,
        Some('U') | Some('u') => false,
        _ => return Err(bad()),
    };
    let rest = chars.as_str();
    let (digits, sign) = rest.split_at(rest.len().checked_sub(1).ok_or_else(bad)?);
    let positive = match sign {
        "+" => true,
        "-" => false,
        _ => return Err(bad()),
    };
    let label = digits.parse::<u64>().map_err(|_| bad())?;
    Ok(Visit {
        label,
        over,
        positive,
    })
}
