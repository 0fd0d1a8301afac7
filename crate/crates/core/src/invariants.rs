//! Closed-form invariants of alternating knots and links: signature, knot
//! Floer homology, `HF⁺` of zero-surgery, the correction term of
//! `+1`-surgery, the alternating-ness obstruction and the Hopf invariant of
//! the contact structure of a fibered alternating knot.
//!
//! Half-integral gradings are stored doubled, as elsewhere in the crate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::diagram::{Color, PlanarDiagram};
use crate::error::{Error, Result};
use crate::json_int;
use crate::polynomial::{
    coefficients, genus_bound, normalized_state_sum, state_sum, torsion_coefficients,
    LaurentPolynomial,
};

fn require_alternating(d: &PlanarDiagram) -> Result<()> {
    if let Some(c) = d.nugatory_crossing() {
        return Err(Error::NotReduced(c));
    }
    if !d.is_alternating() {
        return Err(Error::NotAlternating);
    }
    Ok(())
}

fn require_knot(d: &PlanarDiagram) -> Result<()> {
    if d.is_knot() {
        Ok(())
    } else {
        Err(Error::NotAKnot(d.component_count()))
    }
}

/// `#black faces - #positive crossings - 1` for a reduced alternating
/// diagram colored with every under-first quadrant white.
pub fn signature_alternating(d: &PlanarDiagram) -> Result<i64> {
    require_alternating(d)?;
    let coloring = d.checkerboard();
    debug_assert!(coloring.follows_convention());
    Ok(coloring.count(Color::Black) as i64 - d.positive_crossings() as i64 - 1)
}

/// `δ(σ, s) = max(0, ⌈(|σ| - 2|s|) / 4⌉)`.
pub fn delta(sigma: i64, s: i64) -> i64 {
    Integer::div_ceil(&(sigma.abs() - 2 * s.abs()), &4).max(0)
}

/// `(-1)^k` for an integer `k`.
fn parity_sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// One nonzero group of knot Floer homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HfkEntry {
    /// Doubled Alexander grading.
    pub s2: i64,
    /// Doubled Maslov grading.
    pub m2: i64,
    #[serde(serialize_with = "json_int::big")]
    pub rank: BigInt,
}

/// Knot Floer homology of an alternating knot or non-split link, which is
/// supported on the line `m = s + σ/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HfkTable {
    pub sigma: i64,
    entries: BTreeMap<i64, HfkEntry>,
}

impl HfkTable {
    /// Entries in increasing Alexander grading.
    pub fn entries(&self) -> impl Iterator<Item = &HfkEntry> {
        self.entries.values()
    }

    pub fn rank(&self, s2: i64) -> BigInt {
        self.entries
            .get(&s2)
            .map(|e| e.rank.clone())
            .unwrap_or_default()
    }

    pub fn total_rank(&self) -> BigInt {
        self.entries.values().map(|e| &e.rank).sum()
    }

    /// `Σ (-1)^m rank T^s`, defined when every Maslov grading is integral.
    pub fn euler_characteristic(&self) -> Option<LaurentPolynomial> {
        let mut terms = Vec::new();
        for e in self.entries.values() {
            if e.m2 % 2 != 0 {
                return None;
            }
            terms.push((e.s2, BigInt::from(parity_sign(e.m2 / 2)) * &e.rank));
        }
        Some(LaurentPolynomial::from_terms(terms))
    }

    /// Rows `[2s, 2m, rank]`.
    pub fn to_json(&self) -> serde_json::Value {
        self.entries
            .values()
            .map(|e| serde_json::json!([e.s2, e.m2, json_int::to_value(&e.rank)]))
            .collect()
    }
}

/// `ĤFK` of a reduced alternating diagram: rank `|a_s|` in Maslov grading
/// `s + σ/2`, where `a_s` are the coefficients of
/// `(T^(-1/2) - T^(1/2))^(c-1) Δ`.
pub fn hfk_table(d: &PlanarDiagram) -> Result<HfkTable> {
    let sigma = signature_alternating(d)?;
    let p = normalized_state_sum(d)?;
    let entries = p
        .terms()
        .map(|(s2, a)| {
            (
                s2,
                HfkEntry {
                    s2,
                    m2: s2 + sigma,
                    rank: a.abs(),
                },
            )
        })
        .collect();
    Ok(HfkTable { sigma, entries })
}

/// The `HF⁺` group of zero-surgery in one `Spin^c` structure `s > 0`:
/// `Z^b ⊕ Z[U]/U^δ`, the torsion summand having odd parity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HfPlusLevel {
    pub s: i64,
    #[serde(serialize_with = "json_int::big")]
    pub b: BigInt,
    /// Parity `s + σ/2 mod 2` of the free summand.
    pub parity: i64,
    pub delta: i64,
}

/// `HF⁺(S³₀(K))` for an alternating knot with `σ ≤ 0`. Levels `-s` agree
/// with levels `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HfPlusSummary {
    /// True when the input had `σ > 0` and the summary describes its mirror.
    pub mirrored: bool,
    pub sigma: i64,
    #[serde(serialize_with = "json_int::big")]
    pub b0: BigInt,
    /// Doubled degree of `Z^b0`, which is `σ - 1`.
    pub b0_degree2: i64,
    /// Doubled bottom degrees of the two towers at `s = 0`.
    pub tower_bottoms2: [i64; 2],
    pub levels: Vec<HfPlusLevel>,
}

impl HfPlusSummary {
    /// Level `s` for any integer `s`; zero beyond the stored range.
    pub fn level(&self, s: i64) -> HfPlusLevel {
        let s = s.abs();
        self.levels
            .iter()
            .find(|l| l.s == s)
            .cloned()
            .unwrap_or(HfPlusLevel {
                s,
                b: BigInt::zero(),
                parity: (s + self.sigma / 2).rem_euclid(2),
                delta: 0,
            })
    }
}

/// `b_s` from `(-1)^(s+σ/2) b_s = δ(σ,s) - t_s`.
fn free_rank(sigma: i64, s: i64, t: &BigInt) -> BigInt {
    BigInt::from(parity_sign(s + sigma / 2)) * (BigInt::from(delta(sigma, s)) - t)
}

pub fn hf_plus_zero_surgery(d: &PlanarDiagram) -> Result<HfPlusSummary> {
    require_knot(d)?;
    let mut sigma = signature_alternating(d)?;
    let mirrored = sigma > 0;
    if mirrored {
        sigma = signature_alternating(&d.mirror())?;
    }
    let t = torsion_coefficients(&state_sum(d)?)?;
    let top = genus_bound(&state_sum(d)?)?.max(sigma.abs() / 2);
    let b0 = free_rank(sigma, 0, &t.get(0));
    let mut levels = Vec::new();
    for s in 1..=top {
        levels.push(HfPlusLevel {
            s,
            b: free_rank(sigma, s, &t.get(s)),
            parity: (s + sigma / 2).rem_euclid(2),
            delta: delta(sigma, s),
        });
    }
    if b0.is_negative() || levels.iter().any(|l| l.b.is_negative()) {
        return Err(Error::Internal(
            "negative rank in HF+ of zero-surgery".into(),
        ));
    }
    Ok(HfPlusSummary {
        mirrored,
        sigma,
        b0,
        b0_degree2: sigma - 1,
        tower_bottoms2: [-1, -4 * delta(sigma, 0) + 1],
        levels,
    })
}

/// `d(S³₁(K)) = 2 min(0, -⌈-σ/4⌉)`.
pub fn d_one_surgery_from_sigma(sigma: i64) -> i64 {
    2 * 0.min(-Integer::div_ceil(&-sigma, &4))
}

pub fn d_one_surgery(d: &PlanarDiagram) -> Result<i64> {
    require_knot(d)?;
    Ok(d_one_surgery_from_sigma(signature_alternating(d)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// An `s` where `(-1)^(s+σ/2) (t_s - δ(σ,s))` is positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub s: i64,
    #[serde(serialize_with = "json_int::big")]
    pub value: BigInt,
}

/// The bound `|a_(g-1)| ≥ 2|a_g| + c(σ, g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeadingBound {
    pub genus: i64,
    #[serde(serialize_with = "json_int::big")]
    pub lhs: BigInt,
    #[serde(serialize_with = "json_int::big")]
    pub rhs: BigInt,
    pub holds: bool,
}

/// Outcome of screening `(Δ, σ)` against the constraints satisfied by
/// every alternating knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub sigma: i64,
    pub violations: Vec<Violation>,
    /// Absent when `Δ = 1`.
    pub leading_bound: Option<LeadingBound>,
}

pub fn obstruction(p: &LaurentPolynomial, sigma: i64) -> Result<ObstructionReport> {
    if sigma % 2 != 0 {
        return Err(Error::Invalid(format!("knot signature {sigma} is odd")));
    }
    let t = torsion_coefficients(p)?;
    let a = coefficients(p)?;
    let g = genus_bound(p)?;
    let mut violations = Vec::new();
    for s in 0..=g.max(sigma.abs() / 2) {
        let value = BigInt::from(parity_sign(s + sigma / 2)) * (t.get(s) - delta(sigma, s));
        if value.is_positive() {
            violations.push(Violation { s, value });
        }
    }
    let leading_bound = (g >= 1).then(|| {
        let coef = |s: i64| a.get(&s).cloned().unwrap_or_default().abs();
        let correction = if sigma.abs() == 2 * g {
            -1
        } else if sigma.abs() == 2 * g - 2 {
            1
        } else {
            0
        };
        let lhs = coef(g - 1);
        let rhs = BigInt::from(2) * coef(g) + correction;
        LeadingBound {
            genus: g,
            holds: lhs >= rhs,
            lhs,
            rhs,
        }
    });
    let ok = violations.is_empty() && leading_bound.as_ref().is_none_or(|b| b.holds);
    Ok(ObstructionReport {
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        sigma,
        violations,
        leading_bound,
    })
}

/// Hopf invariant `h = -σ/2 - g` of the contact structure induced by a
/// fibered alternating knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfReport {
    pub h: i64,
    pub sigma: i64,
    pub genus: i64,
    pub tight: bool,
    /// False when fiberedness was assumed rather than read off a monic
    /// Alexander polynomial.
    pub monic: bool,
}

pub fn hopf_invariant(d: &PlanarDiagram, assume_fibered: bool) -> Result<HopfReport> {
    require_knot(d)?;
    let sigma = signature_alternating(d)?;
    let p = state_sum(d)?;
    let genus = genus_bound(&p)?;
    let lead = p.coeff(2 * genus).abs();
    let monic = lead.is_one();
    if !monic && !assume_fibered {
        return Err(Error::NotFibered(lead.to_string()));
    }
    let h = -sigma / 2 - genus;
    Ok(HopfReport {
        h,
        sigma,
        genus,
        tight: h == 0,
        monic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

    fn poly(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(-4, 1), 1);
        assert_eq!(delta(-4, 0), 1);
        assert_eq!(delta(-2, 0), 1);
        assert_eq!(delta(-2, 1), 0);
        assert_eq!(delta(6, 0), 2);
        assert_eq!(delta(0, 3), 0);
    }

    #[test]
    fn trefoil_invariants() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(signature_alternating(&d).unwrap(), -2);
        assert_eq!(signature_alternating(&d.mirror()).unwrap(), 2);
        let h = hfk_table(&d).unwrap();
        let rows: Vec<(i64, i64, i64)> = h
            .entries()
            .map(|e| (e.s2, e.m2, e.rank.clone().try_into().unwrap()))
            .collect();
        assert_eq!(rows, vec![(-2, -4, 1), (0, -2, 1), (2, 0, 1)]);
        assert_eq!(h.euler_characteristic().unwrap(), state_sum(&d).unwrap());
        assert_eq!(d_one_surgery(&d).unwrap(), -2);
        assert_eq!(d_one_surgery(&d.mirror()).unwrap(), 0);
        let hp = hf_plus_zero_surgery(&d).unwrap();
        assert_eq!(
            (hp.b0.clone(), hp.tower_bottoms2),
            (BigInt::zero(), [-1, -3])
        );
        assert_eq!(hp.level(1).b, BigInt::zero());
        assert!(hf_plus_zero_surgery(&d.mirror()).unwrap().mirrored);
        let hopf = hopf_invariant(&d, false).unwrap();
        assert_eq!((hopf.h, hopf.tight), (0, true));
    }

    #[test]
    fn figure_eight_invariants() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let hp = hf_plus_zero_surgery(&d).unwrap();
        assert_eq!(hp.sigma, 0);
        assert_eq!(hp.b0, BigInt::one());
        assert_eq!(hp.b0_degree2, -1);
        assert_eq!(hp.tower_bottoms2, [-1, 1]);
        assert!(hp.levels.iter().all(|l| l.b.is_zero() && l.delta == 0));
        let hopf = hopf_invariant(&d, false).unwrap();
        assert_eq!((hopf.h, hopf.tight), (-1, false));
    }

    #[test]
    fn obstruction_examples() {
        let r = obstruction(&poly("-T^-2 + 2*T^-1 - 1 + 2*T - T^2"), 2).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(
            r.violations,
            vec![Violation {
                s: 0,
                value: BigInt::one()
            }]
        );
        assert_eq!(
            obstruction(&poly("T^-1 - 1 + T"), -2).unwrap().verdict,
            Verdict::Pass
        );
        let unknot = obstruction(&LaurentPolynomial::one(), 0).unwrap();
        assert_eq!(unknot.verdict, Verdict::Pass);
        assert!(unknot.leading_bound.is_none());
        assert!(obstruction(&poly("T^-1 - 1 + T"), 1).is_err());
        assert!(obstruction(&poly("T^-1 + T"), 0).is_err());
    }

    #[test]
    fn guards() {
        let kink = parse_pd("X[1,4,2,5] X[3,8,4,1] X[5,2,6,3] X[6,7,7,8]").unwrap();
        assert!(matches!(
            signature_alternating(&kink),
            Err(Error::NotReduced(_))
        ));
        let hopf_link = parse_pd("X[4,1,3,2] X[2,3,1,4]").unwrap();
        assert!(matches!(
            hf_plus_zero_surgery(&hopf_link),
            Err(Error::NotAKnot(2))
        ));
        assert!(hfk_table(&hopf_link).is_ok());
    }
}
