use std::fmt::Write as _;

use altfloer::invariants::{
    d_one_surgery, hf_plus_zero_surgery, hfk_table, hopf_invariant, obstruction,
    signature_alternating, HfPlusSummary, HfkTable, HopfReport, ObstructionReport,
};
use altfloer::oracle::signature_goeritz;
use altfloer::polynomial::{coefficients, normalized_state_sum, torsion_coefficients};
use altfloer::{enumerate_states, state_sum, Error, LaurentPolynomial, PlanarDiagram, Result};
use clap::Args;
use serde_json::{json, Map, Value};

#[derive(Args, Debug, Clone, Default)]
pub struct Selection {
    /// Everything below; the default when nothing is selected.
    #[arg(long)]
    pub all: bool,
    /// Number of Kauffman states.
    #[arg(long)]
    pub count: bool,
    /// The state sum Γ.
    #[arg(long)]
    pub alexander: bool,
    /// The signature.
    #[arg(long)]
    pub signature: bool,
    /// Knot Floer homology ranks.
    #[arg(long)]
    pub hfk: bool,
    /// HF⁺ of zero-surgery.
    #[arg(long)]
    pub hfplus: bool,
    /// Correction term of +1-surgery.
    #[arg(long)]
    pub d1: bool,
    /// Alternating-knot obstruction.
    #[arg(long)]
    pub obstruct: bool,
    /// Hopf invariant of the induced contact structure.
    #[arg(long)]
    pub hopf: bool,
    /// Signature to screen with instead of the computed one.
    #[arg(long, value_name = "N", allow_hyphen_values = true)]
    pub sigma: Option<i64>,
    /// Treat every knot as fibered for the Hopf invariant.
    #[arg(long)]
    pub assume_fibered: bool,
}

impl Selection {
    fn normalized(&self) -> Selection {
        let any = self.count
            || self.alexander
            || self.signature
            || self.hfk
            || self.hfplus
            || self.d1
            || self.obstruct
            || self.hopf;
        if self.all || !any {
            Selection {
                all: true,
                count: true,
                alexander: true,
                signature: true,
                hfk: true,
                hfplus: true,
                d1: true,
                obstruct: true,
                hopf: true,
                ..self.clone()
            }
        } else {
            self.clone()
        }
    }
}

/// A computed value, or the reason it does not apply to this diagram.
pub type Item<T> = std::result::Result<T, String>;

/// The selected invariants of one diagram.
#[derive(Default)]
pub struct Bundle {
    pub states: Option<usize>,
    pub gamma: Option<LaurentPolynomial>,
    /// `(T^(-1/2) - T^(1/2))^(c-1) Γ`, present for links.
    pub gamma_normalized: Option<LaurentPolynomial>,
    pub sigma: Option<i64>,
    pub hfk: Option<Item<HfkTable>>,
    pub hfplus: Option<Item<HfPlusSummary>>,
    pub d1: Option<Item<i64>>,
    pub obstruction: Option<Item<ObstructionReport>>,
    pub hopf: Option<Item<HopfReport>>,
}

/// Inapplicability is reported in the record; any other error fails it.
fn applicable<T>(r: Result<T>) -> Result<Item<T>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(
            e @ (Error::NotAlternating
            | Error::NotReduced(_)
            | Error::NotAKnot(_)
            | Error::NotFibered(_)
            | Error::GuardExceeded { .. }),
        ) => Ok(Err(format!("not applicable: {e}"))),
        Err(e) => Err(e),
    }
}

pub fn compute(d: &PlanarDiagram, sel: &Selection) -> Result<Bundle> {
    let sel = sel.normalized();
    let mut b = Bundle::default();
    let gamma = state_sum(d)?;
    if sel.count {
        b.states = Some(enumerate_states(d).len());
    }
    if sel.alexander {
        if !d.is_knot() {
            b.gamma_normalized = Some(normalized_state_sum(d)?);
        }
        b.gamma = Some(gamma.clone());
    }
    // diagrams outside the alternating formula get the Goeritz signature
    let sigma = applicable(signature_alternating(d))?.unwrap_or_else(|_| signature_goeritz(d));
    if sel.signature {
        b.sigma = Some(sigma);
    }
    if sel.hfk {
        b.hfk = Some(applicable(hfk_table(d))?);
    }
    if sel.hfplus {
        b.hfplus = Some(applicable(hf_plus_zero_surgery(d))?);
    }
    if sel.d1 {
        b.d1 = Some(applicable(d_one_surgery(d))?);
    }
    if sel.obstruct {
        b.obstruction = Some(if !d.is_knot() {
            Err(format!(
                "not applicable: {}",
                Error::NotAKnot(d.component_count())
            ))
        } else {
            Ok(obstruction(&gamma, sel.sigma.unwrap_or(sigma))?)
        });
    }
    if sel.hopf {
        b.hopf = Some(applicable(hopf_invariant(d, sel.assume_fibered))?);
    }
    Ok(b)
}

/// A doubled grading as an integer or a half-integer.
pub fn half(x2: i64) -> String {
    if x2 % 2 == 0 {
        (x2 / 2).to_string()
    } else {
        format!("{x2}/2")
    }
}

fn item_json<T>(v: &Item<T>, f: impl FnOnce(&T) -> Value) -> Value {
    match v {
        Ok(x) => f(x),
        Err(reason) => json!({ "not_applicable": reason }),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

pub fn to_json(name: &str, b: &Bundle) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), name.into());
    if let Some(n) = b.states {
        m.insert("states".into(), n.into());
    }
    if let Some(g) = &b.gamma {
        m.insert("gamma".into(), to_value(g));
    }
    if let Some(g) = &b.gamma_normalized {
        m.insert("gamma_normalized".into(), to_value(g));
    }
    if let Some(s) = b.sigma {
        m.insert("sigma".into(), s.into());
    }
    if let Some(h) = &b.hfk {
        m.insert("hfk".into(), item_json(h, HfkTable::to_json));
    }
    if let Some(h) = &b.hfplus {
        m.insert("hfplus".into(), item_json(h, to_value));
    }
    if let Some(d) = &b.d1 {
        m.insert("d1".into(), item_json(d, |&d| d.into()));
    }
    if let Some(o) = &b.obstruction {
        m.insert("obstruction".into(), item_json(o, to_value));
    }
    if let Some(h) = &b.hopf {
        m.insert("hopf".into(), item_json(h, to_value));
    }
    Value::Object(m)
}

pub fn to_text(name: &str, b: &Bundle) -> String {
    let mut s = format!("{name}\n");
    let mut line = |k: &str, v: String| writeln!(s, "  {k:<12}{v}").unwrap();
    let show = |v: &Item<String>| match v {
        Ok(x) => x.clone(),
        Err(r) => r.clone(),
    };
    if let Some(n) = b.states {
        line("states", n.to_string());
    }
    if let Some(g) = &b.gamma {
        line("gamma", g.to_string());
    }
    if let Some(g) = &b.gamma_normalized {
        line("normalized", g.to_string());
    }
    if let Some(v) = b.sigma {
        line("sigma", v.to_string());
    }
    if let Some(v) = &b.hfk {
        let text = v.as_ref().map_err(Clone::clone).map(|h| {
            h.entries()
                .map(|e| format!("({}, {}): {}", half(e.s2), half(e.m2), e.rank))
                .collect::<Vec<_>>()
                .join("  ")
        });
        line("hfk (s, m)", show(&text));
    }
    if let Some(v) = &b.hfplus {
        let text = v.as_ref().map_err(Clone::clone).map(|h| {
            let mut t = format!(
                "b0 = {} in degree {}, towers from {} and {}",
                h.b0,
                half(h.b0_degree2),
                half(h.tower_bottoms2[0]),
                half(h.tower_bottoms2[1])
            );
            for l in &h.levels {
                write!(t, "; s = ±{}: b = {}, δ = {}", l.s, l.b, l.delta).unwrap();
            }
            if h.mirrored {
                t.push_str(" (mirror)");
            }
            t
        });
        line("hf+ (0)", show(&text));
    }
    if let Some(v) = &b.d1 {
        line(
            "d (+1)",
            show(&v.as_ref().map(i64::to_string).map_err(Clone::clone)),
        );
    }
    if let Some(v) = &b.obstruction {
        let text = v.as_ref().map_err(Clone::clone).map(|o| {
            let mut t = format!(
                "{} (sigma {})",
                to_value(&o.verdict).as_str().unwrap(),
                o.sigma
            );
            for w in &o.violations {
                write!(t, "; violated at s = {} by {}", w.s, w.value).unwrap();
            }
            if let Some(l) = o.leading_bound.as_ref().filter(|l| !l.holds) {
                write!(t, "; |a_{}| = {} < {}", l.genus - 1, l.lhs, l.rhs).unwrap();
            }
            t
        });
        line("obstruction", show(&text));
    }
    if let Some(v) = &b.hopf {
        let text = v.as_ref().map_err(Clone::clone).map(|h| {
            let kind = if h.tight { "tight" } else { "overtwisted" };
            format!("{} ({kind})", h.h)
        });
        line("hopf", show(&text));
    }
    s
}

/// Header of the CSV table.
pub const CSV_HEADER: [&str; 9] = [
    "name", "two_s", "a", "two_m", "rank", "t", "delta", "b", "error",
];

/// Rows of the CSV table, one per Alexander grading between the extreme
/// exponents of the (normalized) state sum.
pub fn to_csv_rows(name: &str, d: &PlanarDiagram, b: &Bundle) -> Vec<[String; 9]> {
    let Ok(p) = normalized_state_sum(d) else {
        return vec![];
    };
    let (lo, hi) = (p.min_exp2().unwrap_or(0), p.max_exp2().unwrap_or(0));
    let integral = coefficients(&p).is_ok();
    let torsion = torsion_coefficients(&p).ok().filter(|_| d.is_knot());
    let sigma = b.sigma;
    let hfk = b.hfk.as_ref().and_then(|h| h.as_ref().ok());
    let hfplus = b.hfplus.as_ref().and_then(|h| h.as_ref().ok());
    (lo..=hi)
        .step_by(2)
        .map(|s2| {
            let mut row: [String; 9] = Default::default();
            row[0] = name.to_string();
            row[1] = s2.to_string();
            row[2] = p.coeff(s2).to_string();
            if let Some(h) = hfk {
                row[3] = (s2 + h.sigma).to_string();
                row[4] = h.rank(s2).to_string();
            }
            if let (true, Some(t)) = (integral, &torsion) {
                row[5] = t.get(s2 / 2).to_string();
                if let Some(sig) = sigma.filter(|s| s % 2 == 0) {
                    row[6] = altfloer::invariants::delta(sig, s2 / 2).to_string();
                }
            }
            if let Some(h) = hfplus {
                row[7] = if s2 == 0 {
                    h.b0.to_string()
                } else {
                    h.level(s2 / 2).b.to_string()
                };
            }
            row
        })
        .collect()
}
