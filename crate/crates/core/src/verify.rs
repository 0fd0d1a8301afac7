//! The cross-check suite run by `altfloer verify` and by the tests: every
//! oracle comparison and structural property that applies to a diagram.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::PlanarDiagram;
use crate::error::Error;
use crate::invariants::{
    d_one_surgery, hf_plus_zero_surgery, hfk_table, obstruction, signature_alternating, Verdict,
};
use crate::oracle::{brute_force_states, kirchhoff_count, signature_goeritz, GoeritzData};
use crate::polynomial::{determinant, normalized_state_sum, state_sum};
use crate::states::{
    canonical_state, contains_penultimate_edges, enumerate_states, traversals, ClockGraph,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => f.write_str("pass"),
            Outcome::Fail(m) => write!(f, "FAIL: {m}"),
            Outcome::Skipped(m) => write!(f, "skipped: {m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest crossing number for the `4^n` brute force.
    pub brute_force: usize,
    /// Largest crossing number for checks over all decorations and the
    /// clock graph.
    pub exhaustive: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            brute_force: crate::oracle::BRUTE_FORCE_LIMIT,
            exhaustive: 9,
        }
    }
}

fn check(name: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Check {
    Check {
        name,
        outcome: if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        },
    }
}

fn skipped(name: &'static str, why: impl Into<String>) -> Check {
    Check {
        name,
        outcome: Outcome::Skipped(why.into()),
    }
}

fn errored(name: &'static str, e: Error) -> Check {
    Check {
        name,
        outcome: Outcome::Fail(e.to_string()),
    }
}

/// Runs every applicable check on `d`.
pub fn verify(d: &PlanarDiagram, limits: Limits) -> Vec<Check> {
    let mut out = Vec::new();
    let n = d.crossing_count();
    let states = enumerate_states(d);
    let count = BigInt::from(states.len());
    let alternating = d.is_alternating() && d.is_reduced();

    let brute = (n <= limits.brute_force).then(|| brute_force_states(d));
    out.push(
        match brute.unwrap_or(Err(Error::GuardExceeded {
            crossings: n,
            limit: limits.brute_force,
        })) {
            Err(Error::GuardExceeded { .. }) => skipped("brute force states", "guard exceeded"),
            Ok(b) => check("brute force states", b == states, || {
                format!(
                    "{} brute-force states, {} enumerated",
                    b.len(),
                    states.len()
                )
            }),
            Err(e) => errored("brute force states", e),
        },
    );

    let coloring = d.checkerboard();
    out.push(match kirchhoff_count(&d.black_graph(&coloring)) {
        Ok(k) => check("spanning trees", k == count, || {
            format!("{k} trees, {count} states")
        }),
        Err(e) => errored("spanning trees", e),
    });

    let gamma = match state_sum(d) {
        Ok(p) => p,
        Err(e) => {
            out.push(errored("state sum", e));
            return out;
        }
    };
    out.push(check("state sum normalization", true, String::new));

    let det = determinant(&gamma);
    let goeritz = GoeritzData::new(d);
    out.push(match &det {
        Ok(det) => check("determinant", *det == goeritz.determinant(), || {
            format!(
                "|Δ(-1)| = {det}, Goeritz determinant {}",
                goeritz.determinant()
            )
        }),
        Err(e) => check("determinant", false, || e.to_string()),
    });

    let l1 = gamma.l1_norm();
    out.push(if alternating {
        check(
            "triple count",
            l1 == count && det.as_ref().is_ok_and(|x| *x == count),
            || format!("{count} states, Σ|a| = {l1}, det {det:?}"),
        )
    } else {
        check("state count bound", count >= l1, || {
            format!("{count} states < Σ|a| = {l1}")
        })
    });

    out.push(canonical_check(d, &states));

    if n <= limits.exhaustive {
        out.push(decoration_check(d, &gamma, states.len()));
        out.push(clock_check(d));
    } else {
        out.push(skipped("decoration invariance", format!("{n} crossings")));
        out.push(skipped("clock graph", format!("{n} crossings")));
    }

    let sigma_g = signature_goeritz(d);
    out.push(check(
        "mirror negates signature",
        signature_goeritz(&d.mirror()) == -sigma_g,
        || format!("σ = {sigma_g}, mirror {}", signature_goeritz(&d.mirror())),
    ));

    let json = d.to_json_string();
    out.push(check(
        "json round trip",
        PlanarDiagram::from_json_str(&json).is_ok_and(|e| e == *d),
        || "diagram json does not rebuild the diagram".into(),
    ));

    if alternating {
        out.extend(alternating_checks(d, &states, &gamma, sigma_g));
    } else if d.is_knot() && sigma_g % 2 == 0 {
        out.push(match obstruction(&gamma, sigma_g) {
            Ok(r) => Check {
                name: "obstruction",
                outcome: Outcome::Skipped(format!(
                    "non-alternating diagram, verdict {:?}",
                    r.verdict
                )),
            },
            Err(e) => errored("obstruction", e),
        });
    }
    out
}

fn canonical_check(d: &PlanarDiagram, states: &[crate::states::KauffmanState]) -> Check {
    match canonical_state(d) {
        Err(e) => errored("canonical state", e),
        Ok(x0) => {
            let unique = traversals(d).into_iter().any(|t| {
                let with: Vec<_> = states
                    .iter()
                    .filter(|s| contains_penultimate_edges(d, s, &t))
                    .collect();
                with.len() == 1 && *with[0] == x0
            });
            check(
                "canonical state",
                x0.grading2() == 0 && states.contains(&x0) && unique,
                || {
                    format!(
                        "canonical state {:?} has 2M = {}",
                        x0.assignment(),
                        x0.grading2()
                    )
                },
            )
        }
    }
}

fn decoration_check(d: &PlanarDiagram, gamma: &crate::LaurentPolynomial, count: usize) -> Check {
    for (e, a) in d.decorations() {
        let dd = match d.with_decoration(e, a) {
            Ok(dd) => dd,
            Err(err) => return errored("decoration invariance", err),
        };
        let states = enumerate_states(&dd);
        let g = match state_sum(&dd) {
            Ok(g) => g,
            Err(err) => return errored("decoration invariance", err),
        };
        if g != *gamma || states.len() != count {
            return check("decoration invariance", false, || {
                format!(
                    "marked edge {} face {a}: {g} with {} states",
                    e + 1,
                    states.len()
                )
            });
        }
        match canonical_state(&dd) {
            Ok(x) if x.grading2() == 0 => {}
            Ok(_) => {
                return check("decoration invariance", false, || {
                    "canonical state has M ≠ 0".into()
                })
            }
            Err(err) => return errored("decoration invariance", err),
        }
    }
    check("decoration invariance", true, String::new)
}

fn clock_check(d: &PlanarDiagram) -> Check {
    let g = ClockGraph::build(d);
    if !g.is_connected() {
        return check("clock graph", false, || {
            "transposition graph is disconnected".into()
        });
    }
    let bad = g.edges.iter().find(|&&(i, j)| {
        let (x, y) = (&g.states[i], &g.states[j]);
        (x.grading2() - y.grading2()).abs() != 2 || (x.filtration2() - y.filtration2()).abs() > 2
    });
    check("clock graph", bad.is_none(), || {
        format!("transposition {bad:?} violates |ΔM| = 1")
    })
}

fn alternating_checks(
    d: &PlanarDiagram,
    states: &[crate::states::KauffmanState],
    gamma: &crate::LaurentPolynomial,
    sigma_g: i64,
) -> Vec<Check> {
    let mut out = Vec::new();
    let sigma = match signature_alternating(d) {
        Ok(s) => s,
        Err(e) => return vec![errored("alternating signature", e)],
    };
    out.push(check("goeritz signature", sigma == sigma_g, || {
        format!("black-region formula {sigma}, Goeritz {sigma_g}")
    }));
    let off = states
        .iter()
        .find(|x| x.grading2() - x.filtration2() != sigma);
    out.push(check("grading line", off.is_none(), || {
        format!(
            "state {:?} has 2(M - S) ≠ σ = {sigma}",
            off.map(|x| x.assignment())
        )
    }));

    out.push(match (hfk_table(d), normalized_state_sum(d)) {
        (Ok(h), Ok(p)) => {
            let factor = BigInt::one() << (d.component_count() - 1);
            let total_ok = h.total_rank() == factor * BigInt::from(states.len());
            let euler_ok = h.euler_characteristic().is_none_or(|e| e == p);
            let line_ok = h.entries().all(|e| e.m2 == e.s2 + sigma);
            check(
                "knot floer homology",
                total_ok && euler_ok && line_ok,
                || {
                    format!(
                        "total rank {}, Euler characteristic ok {euler_ok}",
                        h.total_rank()
                    )
                },
            )
        }
        (Err(e), _) | (_, Err(e)) => errored("knot floer homology", e),
    });

    if d.is_knot() {
        out.push(match obstruction(gamma, sigma) {
            Ok(r) => check("obstruction", r.verdict == Verdict::Pass, || {
                format!("alternating knot fails: {:?}", r.violations)
            }),
            Err(e) => errored("obstruction", e),
        });
        out.push(match hf_plus_zero_surgery(d) {
            Ok(h) => check(
                "zero-surgery HF+",
                h.sigma <= 0
                    && h.b0 >= BigInt::zero()
                    && h.levels.iter().all(|l| l.b >= BigInt::zero()),
                || "negative rank".into(),
            ),
            Err(e) => errored("zero-surgery HF+", e),
        });
        out.push(match (d_one_surgery(d), d_one_surgery(&d.mirror())) {
            (Ok(a), Ok(b)) => check(
                "+1-surgery d",
                a <= 0 && b <= 0 && (a == 0 || b == 0),
                || format!("d = {a}, mirror {b}"),
            ),
            (Err(e), _) | (_, Err(e)) => errored("+1-surgery d", e),
        });
    }
    out
}
