//! Laurent polynomials in `T^(1/2)` with arbitrary-precision coefficients,
//! and the Alexander polynomial as a signed sum over Kauffman states.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::states::{enumerate_states, KauffmanState};

/// A finite sum `Σ c_k T^(k/2)`, keyed by the doubled exponent `k`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c · T^(exp2/2)`.
    pub fn monomial(exp2: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp2, c.into());
        p
    }

    /// Builds a polynomial from `(doubled exponent, coefficient)` pairs,
    /// summing repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// A polynomial in integral powers of `T`, given as `coeffs[i]` at
    /// `T^(lowest + i)`.
    pub fn from_integral(lowest: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (2 * (lowest + i as i64), c)),
        )
    }

    fn add_term(&mut self, exp2: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp2).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp2);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp2: i64) -> BigInt {
        self.terms.get(&exp2).cloned().unwrap_or_default()
    }

    pub fn min_exp2(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp2(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when every exponent is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Substitutes `T → T^-1`.
    pub fn reflect(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reflect()
    }

    /// Value at `T = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at `T^(1/2) = i`, as (real, imaginary) parts.
    pub fn eval_sqrt_minus_one(&self) -> (BigInt, BigInt) {
        let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
        for (&e, c) in &self.terms {
            match e.mod_floor(&4) {
                0 => re += c,
                1 => im += c,
                2 => re -= c,
                _ => im -= c,
            }
        }
        (re, im)
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `T^(-1/2) - T^(1/2)`.
    pub fn conway_factor() -> Self {
        Self::from_terms([(-1, 1), (1, -1)])
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $f(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

fn fmt_power(exp2: i64) -> String {
    match exp2 {
        0 => String::new(),
        2 => "T".into(),
        e if e % 2 == 0 => format!("T^{}", e / 2),
        e => format!("T^({e}/2)"),
    }
}

/// Renders terms in increasing exponent order, e.g. `T^-1 - 1 + T` or
/// `T^(-3/2) - 5*T^(-1/2) + 5*T^(1/2) - T^(3/2)`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let power = fmt_power(e);
            match (power.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&power)?,
                (false, false) => write!(f, "{mag}*{power}")?,
            }
        }
        Ok(())
    }
}

/// Parses the rendering produced by `Display`. Whitespace is optional and
/// `t` is accepted for `T`.
impl FromStr for LaurentPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |m: &str| Error::Invalid(format!("polynomial '{s}': {m}"));
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        // split into signed terms at top-level + and -
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut depth = 0;
        let mut current = String::new();
        let mut negative = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let is_sep = (ch == '+' || ch == '-') && depth == 0 && prev != Some('^');
            if is_sep {
                if !current.is_empty() {
                    terms.push((negative, std::mem::take(&mut current)));
                } else if prev.is_some() {
                    return Err(bad("dangling sign"));
                }
                negative = ch == '-';
            } else {
                match ch {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    _ => {}
                }
                current.push(ch);
            }
            prev = Some(ch);
        }
        if current.is_empty() {
            return Err(bad("dangling sign"));
        }
        terms.push((negative, current));

        let mut p = LaurentPolynomial::zero();
        for (negative, term) in terms {
            let (coeff, power) = match term.find(['T', 't']) {
                None => (term.as_str(), None),
                Some(i) => {
                    let c = term[..i].trim_end_matches('*');
                    (c, Some(&term[i + 1..]))
                }
            };
            let mut c: BigInt = if coeff.is_empty() {
                BigInt::one()
            } else {
                coeff.parse().map_err(|_| bad("bad coefficient"))?
            };
            if negative {
                c = -c;
            }
            let exp2 = match power {
                None => 0,
                Some("") => 2,
                Some(pw) => parse_exponent(pw).ok_or_else(|| bad("bad exponent"))?,
            };
            p.add_term(exp2, c);
        }
        Ok(p)
    }
}

fn parse_exponent(pw: &str) -> Option<i64> {
    let body = pw.strip_prefix('^')?;
    let body = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .unwrap_or(body);
    match body.split_once('/') {
        Some((num, "2")) => num.parse().ok(),
        Some(_) => None,
        None => body.parse::<i64>().ok().map(|e| 2 * e),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Small(i64),
    Big(String),
}

/// JSON form: `[[2s, coeff], ...]` sorted by exponent, with coefficients
/// outside the 64-bit range written as decimal strings.
impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(&e, c)| {
            let c = match c.to_i64() {
                Some(v) => Coefficient::Small(v),
                None => Coefficient::Big(c.to_string()),
            };
            (e, c)
        }))
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, Coefficient)> = Vec::deserialize(d)?;
        let mut p = LaurentPolynomial::zero();
        for (e, c) in pairs {
            let c = match c {
                Coefficient::Small(v) => BigInt::from(v),
                Coefficient::Big(s) => s.parse().map_err(serde::de::Error::custom)?,
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// `Σ (-1)^M(x) T^S(x)` over the given states.
pub fn signed_sum(states: &[KauffmanState]) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero();
    for x in states {
        let sign = if (x.grading2() / 2) % 2 == 0 { 1 } else { -1 };
        p.add_term(x.filtration2(), BigInt::from(sign));
    }
    p
}

/// The Kauffman state sum of a diagram: the Alexander polynomial in the
/// Conway normalization `Δ(T) = ∇(T^(-1/2) - T^(1/2))`. For knots the sign
/// of the variable does not matter; for links it fixes the overall sign.
pub fn state_sum(d: &PlanarDiagram) -> Result<LaurentPolynomial> {
    let p = signed_sum(&enumerate_states(d));
    check_state_sum(d, &p)?;
    Ok(p)
}

fn check_state_sum(d: &PlanarDiagram, p: &LaurentPolynomial) -> Result<()> {
    // the conway factor is antisymmetric, so even link counts flip the sign
    let mirror = if d.component_count().is_multiple_of(2) {
        -p.reflect()
    } else {
        p.reflect()
    };
    if mirror != *p {
        return Err(Error::Internal(format!("state sum {p} is not symmetric")));
    }
    if d.is_knot() && !p.eval_one().is_one() {
        return Err(Error::Internal(format!(
            "knot state sum {p} does not take the value 1 at T = 1"
        )));
    }
    Ok(())
}

/// `(T^(-1/2) - T^(1/2))^(c-1) · Δ` for a diagram of `c` components. Its
/// coefficients are the knot Floer ranks of an alternating diagram up to sign.
pub fn normalized_state_sum(d: &PlanarDiagram) -> Result<LaurentPolynomial> {
    let p = state_sum(d)?;
    let c = d.component_count().max(1) as u32;
    Ok(&LaurentPolynomial::conway_factor().pow(c - 1) * &p)
}

/// `a_s` for `s ≥ 0` of a symmetric polynomial in integral powers of `T`.
pub fn coefficients(p: &LaurentPolynomial) -> Result<BTreeMap<i64, BigInt>> {
    if !p.is_symmetric() {
        return Err(Error::Asymmetric);
    }
    if !p.is_integral() {
        return Err(Error::Invalid(format!("{p} has half-integral exponents")));
    }
    Ok(p.terms()
        .filter(|&(e, _)| e >= 0)
        .map(|(e, c)| (e / 2, c.clone()))
        .collect())
}

/// Torsion coefficients `t_s = Σ_{j≥1} j·a_{|s|+j}` of a knot polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionSequence {
    values: BTreeMap<i64, BigInt>,
}

impl TorsionSequence {
    /// `t_s` for any integer `s`; zero at or above the top degree.
    pub fn get(&self, s: i64) -> BigInt {
        self.values.get(&s.abs()).cloned().unwrap_or_default()
    }

    /// `(s, t_s)` for `0 ≤ s ≤ deg`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.values.iter().map(|(&s, t)| (s, t))
    }
}

pub fn torsion_coefficients(p: &LaurentPolynomial) -> Result<TorsionSequence> {
    let a = coefficients(p)?;
    if !p.eval_one().is_one() {
        return Err(Error::NotNormalized);
    }
    let g = a.keys().next_back().copied().unwrap_or(0);
    let values = (0..=g)
        .map(|s| {
            let t: BigInt = a
                .range(s + 1..)
                .map(|(&k, c)| BigInt::from(k - s) * c)
                .sum();
            (s, t)
        })
        .collect();
    Ok(TorsionSequence { values })
}

/// `|p(-1)|`, evaluated as `|p|` at `T^(1/2) = i` so link polynomials with
/// half-integral exponents are handled too.
pub fn determinant(p: &LaurentPolynomial) -> Result<BigInt> {
    match p.eval_sqrt_minus_one() {
        (re, im) if im.is_zero() => Ok(re.abs()),
        (re, im) if re.is_zero() => Ok(im.abs()),
        _ => Err(Error::Asymmetric),
    }
}

/// Top degree of a symmetric knot polynomial. This is the Seifert genus
/// when the polynomial comes from an alternating diagram.
pub fn genus_bound(p: &LaurentPolynomial) -> Result<i64> {
    Ok(coefficients(p)?.keys().next_back().copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use proptest::prelude::*;

    fn poly(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn rendering() {
        assert_eq!(poly("T^-1 - 1 + T").to_string(), "T^-1 - 1 + T");
        assert_eq!(
            LaurentPolynomial::from_integral(-1, &[-1, 3, -1]).to_string(),
            "-T^-1 + 3 - T"
        );
        assert_eq!(
            LaurentPolynomial::from_terms([(-3, 1), (-1, -5), (1, 5), (3, -1)]).to_string(),
            "T^(-3/2) - 5*T^(-1/2) + 5*T^(1/2) - T^(3/2)"
        );
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(
            poly("-6*T^-1 + 10"),
            LaurentPolynomial::from_integral(-1, &[-6, 10])
        );
        assert_eq!(poly("T^(3/2)"), LaurentPolynomial::monomial(3, 1));
        assert!("T^x".parse::<LaurentPolynomial>().is_err());
        assert!("1 +".parse::<LaurentPolynomial>().is_err());
    }

    #[test]
    fn json_pairs() {
        let p = poly("T^-1 - 1 + T");
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[-2,1],[0,-1],[2,1]]");
        let big = LaurentPolynomial::monomial(0, BigInt::from(u64::MAX) * 4);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(s, "[[0,\"73786976294838206460\"]]");
        assert_eq!(serde_json::from_str::<LaurentPolynomial>(&s).unwrap(), big);
    }

    #[test]
    fn trefoil_and_figure_eight() {
        let t = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert_eq!(state_sum(&t).unwrap(), poly("T^-1 - 1 + T"));
        let f = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]").unwrap();
        let p = state_sum(&f).unwrap();
        assert_eq!(p, poly("-T^-1 + 3 - T"));
        assert_eq!(determinant(&p).unwrap(), BigInt::from(5));
        assert_eq!(genus_bound(&p).unwrap(), 1);
    }

    #[test]
    fn coefficients_and_torsion() {
        let d942 = poly("-T^-2 + 2*T^-1 - 1 + 2*T - T^2");
        let a = coefficients(&d942).unwrap();
        assert_eq!(
            a.values().cloned().collect::<Vec<_>>(),
            [-1, 2, -1].map(BigInt::from)
        );
        let t = torsion_coefficients(&d942).unwrap();
        assert_eq!(
            (t.get(0), t.get(1), t.get(2), t.get(-1)),
            (0.into(), (-1).into(), 0.into(), (-1).into())
        );

        let t25 = torsion_coefficients(&LaurentPolynomial::from_integral(-2, &[1, -1, 1, -1, 1]))
            .unwrap();
        assert_eq!(
            (t25.get(0), t25.get(1), t25.get(2)),
            (1.into(), 1.into(), 0.into())
        );

        let unknot = torsion_coefficients(&LaurentPolynomial::one()).unwrap();
        assert!(unknot.iter().all(|(_, t)| t.is_zero()));
        assert_eq!(genus_bound(&LaurentPolynomial::one()).unwrap(), 0);

        assert!(coefficients(&poly("1 + T")).is_err());
        assert!(torsion_coefficients(&poly("T^-1 + T")).is_err());
    }

    #[test]
    fn determinant_of_link_polynomial() {
        let p = LaurentPolynomial::from_terms([(-3, 1), (-1, -5), (1, 5), (3, -1)]);
        assert_eq!(determinant(&p).unwrap(), BigInt::from(12));
        let q = &LaurentPolynomial::conway_factor() * &p;
        assert_eq!(q, poly("T^-2 - 6*T^-1 + 10 - 6*T + T^2"));
        assert_eq!(determinant(&q).unwrap(), BigInt::from(24));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-8i64..8, -5i64..5), 0..6).prop_map(LaurentPolynomial::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            for p in [&a + &b, &a * &b, &a - &c] {
                prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
            }
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPolynomial>().unwrap(), a);
        }
    }
}
