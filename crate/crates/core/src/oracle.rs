//! Independent cross-checks: literal state enumeration, spanning-tree
//! counts and a Goeritz-matrix signature valid for any diagram.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diagram::{BlackGraph, Color, Crossing, PlanarDiagram};
use crate::error::{Error, Result};
use crate::states::KauffmanState;

/// Largest crossing number accepted by [`brute_force_states`].
pub const BRUTE_FORCE_LIMIT: usize = 14;

/// All states, found by testing every one of the `4^n` quadrant assignments
/// against the state axioms. Output is in lexicographic order.
pub fn brute_force_states(d: &PlanarDiagram) -> Result<Vec<KauffmanState>> {
    let n = d.crossing_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::GuardExceeded {
            crossings: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let faces: Vec<[u32; 4]> = d
        .crossings()
        .iter()
        .map(|x| x.faces().map(|f| 1u32 << f))
        .collect();
    let forbidden = (1u32 << d.face_a()) | (1u32 << d.face_b());
    let mut out = Vec::new();
    let mut digits = vec![0u8; n];
    loop {
        let mut used = forbidden;
        let ok = digits.iter().zip(&faces).all(|(&q, fs)| {
            let bit = fs[q as usize];
            let fresh = used & bit == 0;
            used |= bit;
            fresh
        });
        if ok {
            out.push(KauffmanState::new(d, digits.clone())?);
        }
        // odometer with the last crossing varying fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if digits[i] < 3 {
                digits[i] += 1;
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Number of spanning trees by the matrix-tree theorem. Loops are ignored.
pub fn kirchhoff_count(g: &BlackGraph) -> Result<BigInt> {
    if !g.is_connected() {
        return Err(Error::Invalid("black graph is disconnected".into()));
    }
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(BigInt::one());
    }
    let mut lap = vec![vec![BigInt::zero(); n]; n];
    for &(a, b) in g.edges() {
        if a != b {
            lap[a][a] += 1;
            lap[b][b] += 1;
            lap[a][b] -= 1;
            lap[b][a] -= 1;
        }
    }
    let reduced: Vec<Vec<BigInt>> = lap[1..].iter().map(|r| r[1..].to_vec()).collect();
    Ok(bareiss_determinant(reduced))
}

/// Exact determinant by fraction-free elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Goeritz form of a diagram with respect to its chessboard coloring, and
/// the correction term relating its signature to the knot signature.
///
/// At each crossing the white quadrants are either the two under-first
/// quadrants (incidence `η = -1`) or the two over-first ones (`η = +1`).
/// The crossing has type II when its white quadrants are not the two
/// quadrants the over-strand points toward and away from. Then
/// `σ = sign(G) - μ` with `μ` the sum of `η` over type II crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzData {
    /// The form on all white faces but the first, which is dropped.
    pub matrix: Vec<Vec<BigInt>>,
    pub mu: i64,
}

impl GoeritzData {
    pub fn new(d: &PlanarDiagram) -> Self {
        let coloring = d.checkerboard();
        let white = coloring.faces_of(Color::White);
        let mut index = vec![usize::MAX; d.faces().len()];
        for (i, &f) in white.iter().enumerate() {
            index[f] = i;
        }
        let w = white.len();
        let mut full = vec![vec![BigInt::zero(); w]; w];
        let mut mu = 0;
        for x in d.crossings() {
            let q = if coloring.color(x.face(0)) == Color::White {
                0
            } else {
                1
            };
            let eta: i64 = if Crossing::is_under_first(q) { -1 } else { 1 };
            let (a, b) = (index[x.face(q)], index[x.face(q + 2)]);
            if a != b {
                full[a][b] -= eta;
                full[b][a] -= eta;
                full[a][a] += eta;
                full[b][b] += eta;
            }
            let toward_away = [x.pointed_toward(), x.pointed_away()];
            if !toward_away.contains(&q) {
                mu += eta;
            }
        }
        let matrix = full.iter().skip(1).map(|r| r[1..].to_vec()).collect();
        GoeritzData { matrix, mu }
    }

    pub fn signature(&self) -> i64 {
        rational_signature(&self.matrix)
    }

    /// `|det G|`, the determinant of the link.
    pub fn determinant(&self) -> BigInt {
        bareiss_determinant(self.matrix.clone()).abs()
    }
}

/// Signature of a symmetric integer matrix by congruence diagonalization
/// over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn rational_signature(m: &[Vec<BigInt>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect()
        })
        .collect();
    let mut sig = 0;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                a.swap(i, k);
                for row in a.iter_mut() {
                    row.swap(i, k);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // diagonal is zero here, so adding row/column j makes a pivot 2·a[k][j]
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            } else {
                continue;
            }
        }
        let pivot = a[k][k].clone();
        sig += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
            for r in 0..n {
                let v = &f * &a[r][k];
                a[r][i] -= v;
            }
        }
    }
    sig
}

/// Knot or link signature from the Goeritz form; defined for any diagram.
pub fn signature_goeritz(d: &PlanarDiagram) -> i64 {
    let g = GoeritzData::new(d);
    g.signature() - g.mu
}
