//! Exact arithmetic on cyclotomic products `∏ (1−t^i)^{e(i)}`.
//!
//! Everything in the monodromy story lives in this shape: the Poincaré
//! series of the graded coordinate ring, the characteristic function
//! `φ_{G_f}`, its Saito dual, and the characteristic polynomial of the
//! Milnor monodromy.  A [`CycloProduct`] stores the exponent map exactly;
//! [`EigMult`] holds the root-of-unity multiplicities that make two
//! products comparable as characteristic polynomials.  Two brute-force
//! oracles — power-series expansion and the Milnor-algebra eigenvalue
//! count — are implemented independently of the closed forms they check.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::invariants::Triple;
use crate::invertible::{TypeTag, TypedForm, WeightSystem};

/// A finite product `∏ (1−t^i)^{e(i)}` with positive indices `i` and
/// nonzero integer exponents `e(i)`, kept merged and zero-free.
///
/// The canonical text form lists the positive-exponent indices ascending
/// (with multiplicity), then `/`, then the negative-exponent indices; an
/// empty side prints as `[]`.  So `(1−t³)(1−t³⁰)/((1−t)(1−t⁵))` is
/// `"3*30/1*5"`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycloProduct {
    factors: BTreeMap<u64, i64>,
}

impl CycloProduct {
    /// The empty product, i.e. the constant 1.
    pub fn one() -> CycloProduct {
        CycloProduct::default()
    }

    /// Build from `(index, exponent)` pairs, merging repeated indices and
    /// dropping exponent totals of zero.  Panics on a zero index.
    pub fn from_factors(pairs: impl IntoIterator<Item = (u64, i64)>) -> CycloProduct {
        let mut p = CycloProduct::one();
        for (i, e) in pairs {
            p.mul_factor(i, e);
        }
        p
    }

    /// Multiply by `(1−t^i)^e` in place.
    pub fn mul_factor(&mut self, i: u64, e: i64) {
        assert!(i > 0, "cyclotomic factor index must be positive");
        if e == 0 {
            return;
        }
        let slot = self.factors.entry(i).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&i);
        }
    }

    /// The product of `self` and `other`.
    pub fn mul(&self, other: &CycloProduct) -> CycloProduct {
        let mut p = self.clone();
        for (&i, &e) in &other.factors {
            p.mul_factor(i, e);
        }
        p
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Iterate `(index, exponent)` pairs in ascending index order.
    pub fn factors(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.factors.iter().map(|(&i, &e)| (i, e))
    }

    pub fn exponent(&self, i: u64) -> i64 {
        self.factors.get(&i).copied().unwrap_or(0)
    }

    /// `Σ i·e(i)` — the degree as a rational function.  For an actual
    /// polynomial this is its polynomial degree.
    pub fn degree(&self) -> i64 {
        self.factors
            .iter()
            .map(|(&i, &e)| i64::try_from(i).expect("index fits i64") * e)
            .sum()
    }
}

impl fmt::Display for CycloProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |f: &mut fmt::Formatter<'_>, positive: bool| -> fmt::Result {
            let mut first = true;
            for (&i, &e) in &self.factors {
                let reps = if positive { e.max(0) } else { (-e).max(0) };
                for _ in 0..reps {
                    if !first {
                        write!(f, "*")?;
                    }
                    write!(f, "{i}")?;
                    first = false;
                }
            }
            if first {
                write!(f, "[]")?;
            }
            Ok(())
        };
        side(f, true)?;
        write!(f, "/")?;
        side(f, false)
    }
}

/// Errors from parsing the canonical text form of a [`CycloProduct`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CycloParseError {
    #[error("expected exactly one '/' separator")]
    MissingSlash,
    #[error("bad factor index {found:?}")]
    BadIndex { found: char },
    #[error("factor index must be positive")]
    ZeroIndex,
}

impl FromStr for CycloProduct {
    type Err = CycloParseError;

    fn from_str(s: &str) -> Result<CycloProduct, CycloParseError> {
        let (num, den) = s.split_once('/').ok_or(CycloParseError::MissingSlash)?;
        if den.contains('/') {
            return Err(CycloParseError::MissingSlash);
        }
        let mut p = CycloProduct::one();
        for (side, sign) in [(num, 1i64), (den, -1i64)] {
            let side = side.trim();
            if side == "[]" {
                continue;
            }
            for token in side.split('*') {
                let token = token.trim();
                let i: u64 = token.parse().map_err(|_| CycloParseError::BadIndex {
                    found: token.chars().next().unwrap_or(' '),
                })?;
                if i == 0 {
                    return Err(CycloParseError::ZeroIndex);
                }
                p.mul_factor(i, sign);
            }
        }
        Ok(p)
    }
}

impl Serialize for CycloProduct {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CycloProduct {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<CycloProduct, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Multiplicities of the `level`-th roots of unity as roots of a
/// cyclotomic product: `mult[j]` counts `ζ^j` for `ζ = e^{2πi/level}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigMult {
    pub level: u64,
    pub mult: Vec<i64>,
}

impl EigMult {
    /// The zero multiplicity vector at the given level.
    pub fn zero(level: u64) -> EigMult {
        assert!(level > 0, "level must be positive");
        EigMult {
            level,
            mult: vec![0; usize::try_from(level).expect("level fits usize")],
        }
    }

    /// `Σⱼ mult(j)` — equals the degree of the originating product.
    pub fn total(&self) -> i64 {
        self.mult.iter().sum()
    }

    /// Re-express the same eigenvalue multiset at a finer level `d`
    /// (a multiple of the current level): `ζ_{d'}^j = ζ_d^{j·d/d'}`.
    pub fn lift(&self, d: u64) -> EigMult {
        assert!(
            d % self.level == 0,
            "lift target {d} is not a multiple of level {}",
            self.level
        );
        let step = usize::try_from(d / self.level).unwrap();
        let mut out = EigMult::zero(d);
        for (j, &m) in self.mult.iter().enumerate() {
            out.mult[j * step] = m;
        }
        out
    }

    /// The sorted multiset of residues `j` repeated `mult(j)` times.
    /// Panics on negative multiplicities (only meaningful for actual
    /// polynomials).
    pub fn multiset(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (j, &m) in self.mult.iter().enumerate() {
            assert!(m >= 0, "negative multiplicity at residue {j}");
            for _ in 0..m {
                out.push(j as u64);
            }
        }
        out
    }
}

/// Errors from series-level computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("factor index {index} does not divide the level {level}")]
    IndexNotDividing { index: u64, level: u64 },
    #[error("weight system {0} is not reduced")]
    NotReduced(WeightSystem),
    #[error("the product does not expand to a polynomial with non-negative coefficients")]
    NotPolynomial,
}

/// The Poincaré series `p_f(t) = (1−t^d)/∏(1−t^{wᵢ})` of the graded
/// coordinate ring of `f` with respect to its canonical weights.
///
/// This orientation — degree factor up, weight factors down — is the one
/// with non-negative power-series coefficients (graded dimensions), and
/// the one consistent with the per-type closed forms for the
/// characteristic function; see [`characteristic_function`].
pub fn poincare_series(ws: &WeightSystem) -> CycloProduct {
    CycloProduct::from_factors([
        (ws.d, 1),
        (ws.w[0], -1),
        (ws.w[1], -1),
        (ws.w[2], -1),
    ])
}

/// The characteristic function
/// `φ_{G_f}(t) = p_f(t)·(1−t)²·∏ᵢ(1−t^{αᵢ})/(1−t)`
/// of a form with canonical weights `ws` and Dolgachev numbers `alpha`.
pub fn characteristic_function(ws: &WeightSystem, alpha: &Triple) -> CycloProduct {
    let mut phi = poincare_series(ws);
    for &a in &alpha.0 {
        phi.mul_factor(a, 1);
    }
    phi.mul_factor(1, -1);
    phi
}

/// The Saito dual `φ*(t) = ∏_{i|d} (1−t^{d/i})^{−e(i)}`.
///
/// Fails with [`SeriesError::IndexNotDividing`] if some index does not
/// divide `d`.  Applying it twice at the same level is the identity.
pub fn saito_dual(phi: &CycloProduct, d: u64) -> Result<CycloProduct, SeriesError> {
    let mut out = CycloProduct::one();
    for (i, e) in phi.factors() {
        if d % i != 0 {
            return Err(SeriesError::IndexNotDividing { index: i, level: d });
        }
        out.mul_factor(d / i, -e);
    }
    Ok(out)
}

/// The exact power-series coefficients of degrees `0..=n`.
///
/// Positive exponents multiply by the polynomial `1−t^i`; negative ones
/// divide, i.e. multiply by the geometric series `Σ_k t^{ik}`.
pub fn expand(c: &CycloProduct, n: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = BigInt::one();
    for (i, e) in c.factors() {
        let i = match usize::try_from(i) {
            Ok(i) if i <= n => i,
            // A factor of degree beyond the window only contributes 1.
            _ if e >= 0 => continue,
            Ok(i) => i,
            Err(_) => continue,
        };
        if e > 0 {
            for _ in 0..e {
                for k in (i..=n).rev() {
                    let sub = coeffs[k - i].clone();
                    coeffs[k] -= sub;
                }
            }
        } else {
            for _ in 0..-e {
                for k in i..=n {
                    let add = coeffs[k - i].clone();
                    coeffs[k] += add;
                }
            }
        }
    }
    coeffs
}

/// Expand one side of a product (all exponents taken positive) as an
/// exact polynomial.
fn expand_side(factors: &[(u64, i64)]) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for &(i, e) in factors {
        let i = usize::try_from(i).expect("factor degree fits usize");
        for _ in 0..e {
            let mut next = vec![BigInt::zero(); poly.len() + i];
            for (k, c) in poly.iter().enumerate() {
                next[k] += c;
                next[k + i] -= c;
            }
            poly = next;
        }
    }
    poly
}

/// `Some(coefficients)` iff the product is a polynomial: the expanded
/// numerator is exactly divisible by the expanded denominator.
pub fn as_polynomial(c: &CycloProduct) -> Option<Vec<BigInt>> {
    let num: Vec<(u64, i64)> = c.factors().filter(|&(_, e)| e > 0).collect();
    let den: Vec<(u64, i64)> = c.factors().filter(|&(_, e)| e < 0).map(|(i, e)| (i, -e)).collect();
    let num = expand_side(&num);
    let den = expand_side(&den);
    if den.len() == 1 {
        return Some(num);
    }
    if num.len() < den.len() {
        return None;
    }
    // Ascending long division; exact because den starts with 1.
    let mut rem = num;
    let q_len = rem.len() - den.len() + 1;
    let mut quotient = vec![BigInt::zero(); q_len];
    for k in 0..q_len {
        let q = rem[k].clone();
        if q.is_zero() {
            continue;
        }
        for (idx, dc) in den.iter().enumerate() {
            let delta = &q * dc;
            rem[k + idx] -= delta;
        }
        quotient[k] = q;
    }
    if rem.iter().all(BigInt::is_zero) {
        Some(quotient)
    } else {
        None
    }
}

/// The characteristic polynomial `Φ_{fᵗ}(t) = det(1−τ⁻¹t)` of the Milnor
/// monodromy of the transpose, by the per-type closed forms.
///
/// Writing `c = c_{fᵗ}` (the content of the transpose's canonical
/// weights) and `(k)^m` for the factor `(1−t^k)^m`:
///
/// * I: `p₁·p₂·p₃·(p₁p₂p₃/c)^c / 1·(p₂p₃/c₁)^{c₁}·(p₃p₁/c₂)^{c₂}·(p₁p₂/c₃)^{c₃}`
///   with `c₁ = gcd(p₂,p₃)`, `c₂ = gcd(p₁,p₃)`, `c₃ = gcd(p₁,p₂)`;
/// * II: `p₁·(p₃/p₂)·(p₁p₃/c)^c / 1·(p₃/c₁)^{c₁}·(p₁p₃/p₂c₂)^{c₂}` with
///   `c₁ = gcd(p₂, p₃/p₂−1)`, `c₂ = gcd(p₁, p₃/p₂)`;
/// * III: `p₁·(p₁p₂/c)^c / 1·(p₂/c₁)^{c₁}` with `c₁ = gcd(q₂,q₃)`;
/// * IV: `(p₃/p₂)·(p₃/c)^c / 1·(p₃/p₁c₁)^{c₁}` with
///   `c₁ = gcd(p₂/p₁, p₃/p₂−1)`;
/// * V: `((q₁q₂q₃+1)/c)^c / 1`.
///
/// Equivalently: the image of `φ_{G_f}` under `τ ↦ τ^c`, which the
/// property tests check against the Milnor-algebra oracle.
pub fn monodromy_charpoly(tf: &TypedForm) -> CycloProduct {
    let [p1, p2, p3] = tf.params;
    let c = tf.dual_weights().content();
    let ce = i64::try_from(c).expect("content fits i64");
    let g = |a: u64, b: u64| a.gcd(&b);
    let factors: Vec<(u64, i64)> = match tf.type_tag {
        TypeTag::I => {
            let (c1, c2, c3) = (g(p2, p3), g(p1, p3), g(p1, p2));
            vec![
                (p1, 1),
                (p2, 1),
                (p3, 1),
                (p1 * p2 * p3 / c, ce),
                (1, -1),
                (p2 * p3 / c1, -i64::try_from(c1).unwrap()),
                (p3 * p1 / c2, -i64::try_from(c2).unwrap()),
                (p1 * p2 / c3, -i64::try_from(c3).unwrap()),
            ]
        }
        TypeTag::II => {
            let m = p3 / p2;
            let (c1, c2) = (g(p2, m - 1), g(p1, m));
            vec![
                (p1, 1),
                (m, 1),
                (p1 * p3 / c, ce),
                (1, -1),
                (p3 / c1, -i64::try_from(c1).unwrap()),
                (p1 * p3 / (p2 * c2), -i64::try_from(c2).unwrap()),
            ]
        }
        TypeTag::III => {
            let (q2, q3) = (p2, p3);
            let pp2 = (q2 + 1) * (q3 + 1) - 1;
            let c1 = g(q2, q3);
            vec![
                (p1, 1),
                (p1 * pp2 / c, ce),
                (1, -1),
                (pp2 / c1, -i64::try_from(c1).unwrap()),
            ]
        }
        TypeTag::IV => {
            let m = p3 / p2;
            let c1 = g(p2 / p1, m - 1);
            vec![
                (m, 1),
                (p3 / c, ce),
                (1, -1),
                (p3 / (p1 * c1), -i64::try_from(c1).unwrap()),
            ]
        }
        TypeTag::V => {
            let d = p1 * p2 * p3 + 1;
            vec![(d / c, ce), (1, -1)]
        }
    };
    CycloProduct::from_factors(factors)
}

/// The root-of-unity multiplicities of a product whose indices all divide
/// `d`: `(1−t^i)` contributes one root at every residue divisible by
/// `d/i`.
pub fn eig_mult(c: &CycloProduct, d: u64) -> Result<EigMult, SeriesError> {
    let mut out = EigMult::zero(d);
    for (i, e) in c.factors() {
        if d % i != 0 {
            return Err(SeriesError::IndexNotDividing { index: i, level: d });
        }
        let step = usize::try_from(d / i).unwrap();
        let mut j = 0usize;
        while j < out.mult.len() {
            out.mult[j] += e;
            j += step;
        }
    }
    Ok(out)
}

/// Monodromy eigenvalues of the isolated quasihomogeneous singularity
/// with reduced weights `W`, via the Milnor algebra.
///
/// Expands `∏(1−t^{d−wᵢ})/(1−t^{wᵢ})` — the Poincaré series of the
/// Milnor algebra — as an exact polynomial `Σ n_k t^k` and places `n_k`
/// at residue `(k + w₁+w₂+w₃) mod d`.  This is a computation path fully
/// independent of the closed forms it is used to check.
pub fn milnor_algebra_oracle(ws: &WeightSystem) -> Result<EigMult, SeriesError> {
    if ws.content() != 1 {
        return Err(SeriesError::NotReduced(*ws));
    }
    if ws.w.iter().any(|&w| w >= ws.d) {
        return Err(SeriesError::NotPolynomial);
    }
    let product = CycloProduct::from_factors(
        ws.w.iter()
            .flat_map(|&w| [(ws.d - w, 1), (w, -1)]),
    );
    let coeffs = as_polynomial(&product).ok_or(SeriesError::NotPolynomial)?;
    if coeffs.iter().any(BigInt::is_negative) {
        return Err(SeriesError::NotPolynomial);
    }
    let shift: u64 = ws.w.iter().sum();
    let mut out = EigMult::zero(ws.d);
    for (k, n) in coeffs.iter().enumerate() {
        let j = usize::try_from((k as u64 + shift) % ws.d).unwrap();
        out.mult[j] += i64::try_from(n).expect("multiplicity fits i64");
    }
    Ok(out)
}

/// The eigenvalue map `λ ↦ λ^c` at a fixed level: residue `j` moves to
/// `c·j mod d`.  Realizes the passage from an operator `τ` to `τ^c`.
pub fn power_transform(m: &EigMult, c: u64) -> EigMult {
    let mut out = EigMult::zero(m.level);
    for (j, &v) in m.mult.iter().enumerate() {
        let target = usize::try_from((j as u64 * c) % m.level).unwrap();
        out.mult[target] += v;
    }
    out
}
