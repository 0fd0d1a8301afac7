//! The nine acceptance criteria, each reported on one line.

use altfloer::corpus;
use altfloer::invariants::{
    d_one_surgery, delta, hf_plus_zero_surgery, hfk_table, hopf_invariant, obstruction,
    signature_alternating, Verdict,
};
use altfloer::oracle::{brute_force_states, kirchhoff_count, signature_goeritz};
use altfloer::polynomial::{determinant, normalized_state_sum, torsion_coefficients};
use altfloer::states::{canonical_state, contains_penultimate_edges, traversals, ClockGraph};
use altfloer::{enumerate_states, state_sum, LaurentPolynomial, PlanarDiagram};
use num_bigint::BigInt;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn poly(s: &str) -> LaurentPolynomial {
    s.parse().unwrap()
}

fn bundled(name: &str) -> PlanarDiagram {
    corpus::get(name).unwrap()
}

fn err(e: altfloer::Error) -> String {
    e.to_string()
}

fn nine_42_certificate() -> Outcome {
    let p = poly("-T^-2 + 2*T^-1 - 1 + 2*T - T^2");
    let r = obstruction(&p, 2).map_err(err)?;
    ensure!(r.verdict == Verdict::Fail, "verdict {:?}", r.verdict);
    let w = r.violations.first().ok_or("no violation")?;
    ensure!(
        w.s == 0 && w.value == BigInt::from(1),
        "first witness {w:?}"
    );
    let t0 = torsion_coefficients(&p).map_err(err)?.get(0);
    // (-1)^(σ/2) (t_0 - δ(2,0)) with σ = 2
    let value = -(t0 - delta(2, 0));
    ensure!(
        value == BigInt::from(1),
        "(-1)^(σ/2) (t_0 - δ(2,0)) = {value}"
    );
    Ok(())
}

fn right_trefoil() -> Outcome {
    let d = bundled("3_1 right-handed");
    let gamma = state_sum(&d).map_err(err)?;
    ensure!(gamma == poly("T^-1 - 1 + T"), "Γ = {gamma}");
    ensure!(signature_alternating(&d).map_err(err)? == -2, "σ ≠ -2");
    let h = hfk_table(&d).map_err(err)?;
    let rows: Vec<_> = h
        .entries()
        .map(|e| (e.s2 / 2, e.m2 / 2, e.rank.clone()))
        .collect();
    let want: Vec<_> = [(-1, -2), (0, -1), (1, 0)]
        .map(|(s, m)| (s, m, BigInt::from(1)))
        .into();
    ensure!(rows == want, "ĤFK {rows:?}");
    let d1 = d_one_surgery(&d).map_err(err)?;
    ensure!(d1 == -2, "d = {d1}");
    Ok(())
}

fn section_four_link() -> Outcome {
    let d = bundled("L6a1{0}, resolution of 9_48");
    ensure!(d.component_count() == 2, "not a two-component link");
    let p = normalized_state_sum(&d).map_err(err)?;
    ensure!(p == poly("T^-2 - 6*T^-1 + 10 - 6*T + T^2"), "Γ_L = {p}");
    ensure!(signature_goeritz(&d) == -1, "σ = {}", signature_goeritz(&d));
    let h = hfk_table(&d).map_err(err)?;
    ensure!(h.sigma == -1, "alternating σ = {}", h.sigma);
    let rows: Vec<_> = h.entries().map(|e| (e.s2, e.m2, e.rank.clone())).collect();
    let want: Vec<_> = [(-4, 1), (-2, 6), (0, 10), (2, 6), (4, 1)]
        .map(|(s2, r)| (s2, s2 - 1, BigInt::from(r)))
        .into();
    ensure!(rows == want, "ĤFK {rows:?}");
    Ok(())
}

fn figure_eight() -> Outcome {
    let d = bundled("4_1");
    let states = brute_force_states(&d).map_err(err)?;
    ensure!(
        states.len() == 5 && states == enumerate_states(&d),
        "{} states",
        states.len()
    );
    let gamma = state_sum(&d).map_err(err)?;
    ensure!(gamma == poly("-T + 3 - T^-1"), "Γ = {gamma}");
    let hf = hf_plus_zero_surgery(&d).map_err(err)?;
    ensure!(
        hf.b0 == BigInt::from(1) && hf.b0_degree2 == -1,
        "b0 = {} in degree {}/2",
        hf.b0,
        hf.b0_degree2
    );
    ensure!(
        hf.tower_bottoms2 == [-1, 1],
        "towers {:?}",
        hf.tower_bottoms2
    );
    ensure!(
        (1..=5).all(|s| hf.level(s).b == BigInt::from(0)),
        "b_s ≠ 0 for some s ≥ 1"
    );
    let h = hopf_invariant(&d, false).map_err(err)?;
    ensure!(h.h == -1 && !h.tight, "h = {}, tight {}", h.h, h.tight);
    Ok(())
}

fn delta_torsion_identity() -> Outcome {
    for sigma in (-12i64..=12).step_by(2) {
        let q = sigma.abs() + 1;
        // the (2,1) torus knot is the unknot
        let p = match q {
            1 => LaurentPolynomial::one(),
            _ => state_sum(&bundled(&format!("T(2,{q})"))).map_err(err)?,
        };
        let t = torsion_coefficients(&p).map_err(err)?;
        for s in -10..=10 {
            ensure!(
                t.get(s) == BigInt::from(delta(sigma, s)),
                "σ = {sigma}, s = {s}: t_s = {}, δ = {}",
                t.get(s),
                delta(sigma, s)
            );
        }
    }
    Ok(())
}

fn triple_count() -> Outcome {
    let mut seen = 0;
    for (name, d) in corpus::bundled() {
        if !(d.is_alternating() && d.is_reduced()) || d.crossing_count() > 12 {
            continue;
        }
        seen += 1;
        let n = BigInt::from(enumerate_states(&d).len());
        let trees = kirchhoff_count(&d.black_graph(&d.checkerboard())).map_err(err)?;
        let gamma = state_sum(&d).map_err(err)?;
        let det = determinant(&gamma).map_err(err)?;
        ensure!(
            n == trees && n == gamma.l1_norm() && n == det,
            "{name}: {n} states, {trees} trees, Σ|a| = {}, |Γ(-1)| = {det}",
            gamma.l1_norm()
        );
    }
    ensure!(seen >= 15, "only {seen} diagrams checked");
    Ok(())
}

fn decoration_invariance() -> Outcome {
    for (name, d) in corpus::bundled()
        .into_iter()
        .filter(|(_, d)| d.crossing_count() <= 9)
    {
        let gamma = state_sum(&d).map_err(err)?;
        let n = enumerate_states(&d).len();
        for (e, a) in d.decorations() {
            let dd = d.with_decoration(e, a).map_err(err)?;
            let g = state_sum(&dd).map_err(err)?;
            let m = enumerate_states(&dd).len();
            ensure!(
                g == gamma && m == n,
                "{name}, edge {} face {a}: {g}, {m} states",
                e + 1
            );
        }
    }
    Ok(())
}

fn structural_suite() -> Outcome {
    for (name, d) in corpus::bundled() {
        let states = enumerate_states(&d);
        let x0 = canonical_state(&d).map_err(err)?;
        ensure!(
            x0.grading2() == 0 && states.contains(&x0),
            "{name}: canonical state {x0:?}"
        );
        let unique = traversals(&d).iter().any(|t| {
            let with: Vec<_> = states
                .iter()
                .filter(|x| contains_penultimate_edges(&d, x, t))
                .collect();
            with == [&x0]
        });
        ensure!(
            unique,
            "{name}: x0 is not the unique state through the penultimate edges"
        );
        if d.crossing_count() <= 9 {
            let g = ClockGraph::build(&d);
            ensure!(g.is_connected(), "{name}: clock graph disconnected");
            for &(i, j) in &g.edges {
                let dm = (g.states[i].grading2() - g.states[j].grading2()).abs();
                ensure!(dm == 2, "{name}: transposition with |ΔM| = {}/2", dm);
            }
        }
        if let Ok(sigma) = signature_alternating(&d) {
            let off = states
                .iter()
                .find(|x| x.grading2() - x.filtration2() != sigma);
            ensure!(off.is_none(), "{name}: 2(M - S) ≠ σ at {off:?}");
        }
    }
    let d = bundled("8_16");
    let x0 = canonical_state(&d).map_err(err)?;
    let hits = enumerate_states(&d)
        .into_iter()
        .filter(|x| contains_penultimate_edges(&d, x, &[d.marked_edge()]))
        .collect::<Vec<_>>();
    ensure!(
        hits == [x0],
        "8_16: {} states contain every penultimate edge",
        hits.len()
    );
    Ok(())
}

fn oracle_concordance() -> Outcome {
    for (name, d) in corpus::bundled() {
        let g = signature_goeritz(&d);
        if let Ok(s) = signature_alternating(&d) {
            ensure!(s == g, "{name}: alternating {s}, Goeritz {g}");
        }
        let m = signature_goeritz(&d.mirror());
        ensure!(m == -g, "{name}: σ = {g}, mirror {m}");
    }
    let s = signature_goeritz(&bundled("9_42"));
    ensure!(s == 2, "9_42: σ = {s}");
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("9_42 non-alternating certificate", nine_42_certificate),
        ("right trefoil", right_trefoil),
        ("two-component link", section_four_link),
        ("figure-eight", figure_eight),
        ("delta-torsion identity", delta_torsion_identity),
        ("triple-count identity", triple_count),
        ("decoration invariance", decoration_invariance),
        ("structural suite", structural_suite),
        ("oracle concordance", oracle_concordance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("criterion {}: {name}: PASS", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
