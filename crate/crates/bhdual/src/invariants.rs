//! Numerical invariants attached to an invertible polynomial and its
//! canonical weight system.
//!
//! The two central objects are the *Dolgachev numbers* `A = (α₁,α₂,α₃)` —
//! the orders of the exceptional orbits of the C*-action on the Milnor
//! fibre quotient — and the *Gabrielov numbers* `Γ = (γ₁,γ₂,γ₃)` — the arm
//! lengths of a triangle singularity `x^{γ₁}+y^{γ₂}+z^{γ₃}+xyz` to which
//! the polynomial deforms after adding `xyz` and shearing coordinates (the
//! [`cusp_transform`]).  Both are given by closed forms in the normal-form
//! parameters.  Strange duality says the transpose polynomial swaps them:
//! `A_f = Γ_{fᵗ}` and `Γ_f = A_{fᵗ}` as multisets.
//!
//! The remaining invariants are elementary functions of a weight system or
//! of a triple: the Milnor number, the Gorenstein parameter, the orbifold
//! Euler characteristic, the discriminant-style product `Δ`, and the orbit
//! invariants `(αᵢ, βᵢ)` that pin down a C*-orbifold together with its
//! degree data.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::invertible::{reduce_weights, TypeTag, TypedForm, WeightSystem};
use crate::poly::{Coeff, Monomial, Polynomial, Substitution, Var};

/// A triple of positive integers in *table order*: the order in which the
/// defining closed form lists the entries, before any sorting.
///
/// Duality statements compare triples as multisets, so [`Triple::sorted`]
/// gives the canonical order-insensitive view; the table order is kept
/// because the orbit data of a quotient curve pairs each entry with a
/// specific exceptional point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triple(pub [u64; 3]);

impl Triple {
    /// Panics if an entry is zero; the triples occurring here are orders
    /// and arm lengths, which are positive by definition.
    pub fn new(t: [u64; 3]) -> Triple {
        assert!(
            t.iter().all(|&x| x > 0),
            "triple entries must be positive: ({},{},{})",
            t[0],
            t[1],
            t[2]
        );
        Triple(t)
    }

    /// The entries in ascending order, for multiset comparison.
    pub fn sorted(&self) -> [u64; 3] {
        let mut s = self.0;
        s.sort_unstable();
        s
    }

    /// The product of the entries.
    pub fn product(&self) -> u64 {
        self.0
            .iter()
            .try_fold(1u64, |p, &x| p.checked_mul(x))
            .expect("triple product overflows u64")
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl Serialize for Triple {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Triple", 2)?;
        s.serialize_field("table", &self.0)?;
        s.serialize_field("sorted", &self.sorted())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Triple {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Triple, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            table: [u64; 3],
            #[serde(default)]
            sorted: Option<[u64; 3]>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.table.iter().any(|&x| x == 0) {
            return Err(D::Error::custom("triple entries must be positive"));
        }
        let t = Triple(repr.table);
        if let Some(s) = repr.sorted {
            if s != t.sorted() {
                return Err(D::Error::custom("sorted view disagrees with table order"));
            }
        }
        Ok(t)
    }
}

/// Errors from invariant computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum InvariantError {
    /// The weighted-homogeneous Milnor number formula did not produce a
    /// positive integer, so the weight system is not that of an isolated
    /// quasihomogeneous singularity.
    #[error("Milnor number {0} is not a positive integer")]
    NonIntegral(BigRational),
    /// An orbit order shares a factor with the degree parameter, so no
    /// modular inverse exists.
    #[error("{a} is not invertible modulo the orbit order {alpha}")]
    NotCoprime { a: u64, alpha: u64 },
}

/// The Dolgachev numbers of a classified form, in table order.
///
/// These depend only on the type and parameters: they are the isotropy
/// orders of the three exceptional orbits of the C*-action defined by the
/// canonical weights.  Closed forms per type (writing `m = p₃/p₂`,
/// parameters as stored):
///
/// * I `(p₁,p₂,p₃)`: `(p₁, p₂, p₃)`
/// * II `(p₁,p₂,p₃)`: `(p₁, m, (p₂−1)p₁)`
/// * III `(p₁,q₂,q₃)`: `(p₁, p₁q₂, p₁q₃)`
/// * IV `(p₁,p₂,p₃)`: `(m, (p₁−1)m, p₂−p₁+1)`
/// * V `(q₁,q₂,q₃)`: `(q₂q₃−q₃+1, q₃q₁−q₁+1, q₁q₂−q₂+1)`
pub fn dolgachev(tf: &TypedForm) -> Triple {
    let [a, b, c] = tf.params;
    Triple::new(match tf.type_tag {
        TypeTag::I => [a, b, c],
        TypeTag::II => {
            let m = c / b;
            [a, m, (b - 1) * a]
        }
        TypeTag::III => [a, a * b, a * c],
        TypeTag::IV => {
            let m = c / b;
            [m, (a - 1) * m, b - a + 1]
        }
        TypeTag::V => [b * c - c + 1, c * a - a + 1, a * b - b + 1],
    })
}

/// The Gabrielov numbers of a classified form, in table order.
///
/// These are the arm lengths of the triangle singularity obtained from the
/// form by the [`cusp_transform`]; like the Dolgachev numbers they depend
/// only on the type and parameters.  Closed forms per type (again with
/// `m = p₃/p₂`):
///
/// * I `(p₁,p₂,p₃)`: `(p₁, p₂, p₃)`
/// * II `(p₁,p₂,p₃)`: `(p₁, p₂, (m−1)p₁)`
/// * III `(p₁,q₂,q₃)`: `(p₁, p₁q₂, p₁q₃)`
/// * IV `(p₁,p₂,p₃)`: `(p₁, (m−1)p₁, p₃/p₁−m+1)`
/// * V `(q₁,q₂,q₃)`: `(q₂q₃−q₂+1, q₃q₁−q₃+1, q₁q₂−q₁+1)`
pub fn gabrielov(tf: &TypedForm) -> Triple {
    let [a, b, c] = tf.params;
    Triple::new(match tf.type_tag {
        TypeTag::I => [a, b, c],
        TypeTag::II => {
            let m = c / b;
            [a, b, (m - 1) * a]
        }
        TypeTag::III => [a, a * b, a * c],
        TypeTag::IV => {
            let m = c / b;
            [a, (m - 1) * a, c / a - m + 1]
        }
        TypeTag::V => [b * c - b + 1, c * a - c + 1, a * b - a + 1],
    })
}

/// `Δ(a,b,c) = abc − ab − bc − ca`.
///
/// The sign of `Δ` on the Dolgachev or Gabrielov numbers separates the
/// spherical (`Δ < 0`), euclidean (`Δ = 0`) and hyperbolic (`Δ > 0`) orbit
/// geometries.
pub fn delta(t: &Triple) -> i64 {
    let [a, b, c] = t.0.map(i128::from);
    i64::try_from(a * b * c - a * b - b * c - c * a).expect("delta overflows i64")
}

/// The Gorenstein parameter `a_W = d − w₁ − w₂ − w₃` of a weight system.
///
/// Negative exactly for the simple singularities, zero for the simply
/// elliptic ones, positive beyond.
pub fn gorenstein_parameter(ws: &WeightSystem) -> i64 {
    let w = ws.w.map(i128::from);
    i64::try_from(i128::from(ws.d) - w[0] - w[1] - w[2]).expect("gorenstein parameter overflows")
}

/// The Milnor number `μ = ∏ᵢ (d−wᵢ)/wᵢ` of the reduced weight system.
///
/// The weight system is reduced first, so `μ(cW) = μ(W)`.  Returns
/// [`InvariantError::NonIntegral`] when the product is not a positive
/// integer — such weights do not carry an isolated quasihomogeneous
/// singularity.
pub fn milnor_number(ws: &WeightSystem) -> Result<u64, InvariantError> {
    let (r, _) = reduce_weights(*ws);
    let d = BigInt::from(r.d);
    let mut mu = BigRational::one();
    for &wi in &r.w {
        let wi = BigInt::from(wi);
        mu *= BigRational::new(&d - &wi, wi);
    }
    if mu.is_integer() && mu.is_positive() {
        Ok(u64::try_from(mu.to_integer()).expect("Milnor number overflows u64"))
    } else {
        Err(InvariantError::NonIntegral(mu))
    }
}

/// The orbifold Euler characteristic `χ = 1/α₁ + 1/α₂ + 1/α₃ − 1` of the
/// quotient curve with three orbit points of the given orders.
///
/// Satisfies `Δ(A) = −α₁α₂α₃·χ` exactly.
pub fn orbifold_euler(t: &Triple) -> BigRational {
    let mut chi = -BigRational::one();
    for &a in &t.0 {
        chi += BigRational::new(BigInt::one(), BigInt::from(a));
    }
    chi
}

/// The orbit invariants of a C*-orbifold: one pair `(αᵢ, βᵢ)` per orbit
/// point of order `αᵢ ≥ 2`, where `βᵢ` is the inverse of the degree
/// parameter `a` modulo `αᵢ`, normalised to `0 < βᵢ < αᵢ`.
///
/// Orbit points of order 1 are unramified and carry no pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OrbitInvariants {
    pub pairs: Vec<(u64, u64)>,
}

impl fmt::Display for OrbitInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "-");
        }
        for (i, (alpha, beta)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({alpha},{beta})")?;
        }
        Ok(())
    }
}

impl Serialize for OrbitInvariants {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.pairs.iter().map(|&(a, b)| [a, b]))
    }
}

impl<'de> Deserialize<'de> for OrbitInvariants {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<OrbitInvariants, D::Error> {
        let pairs: Vec<[u64; 2]> = Vec::deserialize(deserializer)?;
        Ok(OrbitInvariants {
            pairs: pairs.into_iter().map(|[a, b]| (a, b)).collect(),
        })
    }
}

/// The inverse of `a` modulo `n ≥ 2`, in `1..n`, or `None` when
/// `gcd(a,n) > 1`.
fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let n_i = i128::from(n);
    let (mut r0, mut r1) = (n_i, i128::from(a % n));
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(u64::try_from(s0.rem_euclid(n_i)).expect("inverse fits u64"))
}

/// The orbit invariants `(αᵢ, βᵢ)` for orders `alpha` and degree parameter
/// `a ≥ 1`: `βᵢ·a ≡ 1 (mod αᵢ)` with `0 < βᵢ < αᵢ`, entries with `αᵢ = 1`
/// omitted.
///
/// Only meaningful for `a ≥ 1` (panics on `a = 0`); forms with
/// non-positive Gorenstein parameter have no orbit invariants in this
/// sense.  Fails with [`InvariantError::NotCoprime`] when some `αᵢ` shares
/// a factor with `a`.
pub fn orbit_invariants(alpha: &Triple, a: u64) -> Result<OrbitInvariants, InvariantError> {
    assert!(a >= 1, "orbit invariants require a positive degree parameter");
    let mut pairs = Vec::new();
    for &al in &alpha.0 {
        if al == 1 {
            continue;
        }
        match mod_inverse(a, al) {
            Some(beta) => pairs.push((al, beta)),
            None => return Err(InvariantError::NotCoprime { a, alpha: al }),
        }
    }
    Ok(OrbitInvariants { pairs })
}

/// The coordinate shear that turns the normal form plus `xyz` into a
/// deformation of the triangle singularity with the form's Gabrielov
/// numbers, written in slot coordinates.
fn cusp_substitution(tf: &TypedForm) -> Substitution {
    let [a, b, c] = tf.params;
    let var = |v: Var| Polynomial::variable(v);
    let shear = |v: Var, w: Var, e: u64| {
        let e = u32::try_from(e).expect("shear exponent too large");
        &var(v) - &var(w).pow(e)
    };
    match tf.type_tag {
        TypeTag::I => Substitution::identity(),
        TypeTag::II => {
            let m = c / b;
            Substitution::identity().with(Var::X, shear(Var::X, Var::Z, m - 1))
        }
        TypeTag::III => {
            let qy = u32::try_from(b).expect("shear exponent too large");
            let qz = u32::try_from(c).expect("shear exponent too large");
            let image = &(&var(Var::X) - &var(Var::Y).pow(qy)) - &var(Var::Z).pow(qz);
            Substitution::identity().with(Var::X, image)
        }
        TypeTag::IV => {
            let (q, m) = (b / a, c / b);
            Substitution::identity()
                .with(Var::X, shear(Var::X, Var::Z, m - 1))
                .with(Var::Z, shear(Var::Z, Var::Y, q - 1))
        }
        TypeTag::V => Substitution::identity()
            .with(Var::X, shear(Var::X, Var::Y, b - 1))
            .with(Var::Y, shear(Var::Y, Var::Z, c - 1))
            .with(Var::Z, shear(Var::Z, Var::X, a - 1)),
    }
}

/// Add `xyz` to the unit-coefficient normal form and apply the type's
/// cusp shear, then rename variables through the recorded permutation.
///
/// The result is a polynomial whose support contains `xyz` and the three
/// axis powers prescribed by the Gabrielov numbers (see
/// [`cusp_support_holds`] for the exact pairing); scaling coefficients
/// does not change the support pattern, so the transform always acts on
/// the unit-coefficient representative.
pub fn cusp_transform(tf: &TypedForm) -> Polynomial {
    let f = Polynomial::from_terms(
        tf.pattern_support()
            .into_iter()
            .chain([Monomial::new(1, 1, 1)])
            .map(|m| (m, Coeff::one())),
    );
    tf.perm.apply_to_polynomial(&f.substitute(&cusp_substitution(tf)))
}

/// How the cusp transform distributes the Gabrielov numbers over the slot
/// variables: each returned pair `(v, γ)` promises the monomial `v^γ` in
/// the transform's support (before renaming by the permutation).
pub fn gabrielov_support_pairing(tf: &TypedForm) -> [(Var, u64); 3] {
    let [g1, g2, g3] = gabrielov(tf).0;
    match tf.type_tag {
        TypeTag::I | TypeTag::II | TypeTag::III => [(Var::X, g1), (Var::Y, g2), (Var::Z, g3)],
        TypeTag::IV => [(Var::X, g1), (Var::Z, g2), (Var::Y, g3)],
        TypeTag::V => [(Var::X, g2), (Var::Y, g3), (Var::Z, g1)],
    }
}

/// Check that the support of [`cusp_transform`] contains the three axis
/// powers `v^γ` from [`gabrielov_support_pairing`] and the monomial
/// `xyz`, all renamed through the recorded permutation.
pub fn cusp_support_holds(tf: &TypedForm) -> bool {
    let g = cusp_transform(tf);
    let mut required = vec![Monomial::new(1, 1, 1)];
    for (v, gamma) in gabrielov_support_pairing(tf) {
        let e = u32::try_from(gamma).expect("arm length too large");
        let mut m = Monomial::ONE;
        match v {
            Var::X => m.ex = e,
            Var::Y => m.ey = e,
            Var::Z => m.ez = e,
        }
        required.push(tf.perm.apply_to_monomial(m));
    }
    required.into_iter().all(|m| g.coeff(m).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invertible::Perm;
    use crate::poly::parse_polynomial;

    fn form(tag: TypeTag, params: [u64; 3]) -> TypedForm {
        TypedForm::normal(tag, params).unwrap()
    }

    fn p(src: &str) -> Polynomial {
        parse_polynomial(src).unwrap()
    }

    #[test]
    fn dolgachev_closed_forms() {
        // E₁₄ = x³ + y² + yz⁴.
        let e14 = form(TypeTag::II, [3, 2, 8]);
        assert_eq!(dolgachev(&e14), Triple([3, 4, 3]));
        assert_eq!(dolgachev(&e14).sorted(), [3, 3, 4]);
        // U₁₂ = x⁴ + y²z + yz².
        assert_eq!(dolgachev(&form(TypeTag::III, [4, 1, 1])), Triple([4, 4, 4]));
        // xy + y²z + z³x: the hyperbolic A-series member with k=2, l=3.
        let a23 = form(TypeTag::V, [1, 2, 3]);
        assert_eq!(dolgachev(&a23), Triple([4, 3, 1]));
        assert_eq!(dolgachev(&a23).sorted(), [1, 3, 4]);
        // E₁₃ = x² + y³ + yz⁵.
        assert_eq!(dolgachev(&form(TypeTag::II, [2, 3, 15])), Triple([2, 5, 4]));
        // W₁₇ = x² + xy² + yz⁵.
        assert_eq!(dolgachev(&form(TypeTag::IV, [2, 4, 20])), Triple([5, 5, 3]));
        // S₁₆ = x²y + y²z + z⁴x.
        assert_eq!(
            dolgachev(&form(TypeTag::V, [2, 2, 4])).sorted(),
            [3, 5, 7]
        );
    }

    #[test]
    fn gabrielov_closed_forms() {
        let e14 = form(TypeTag::II, [3, 2, 8]);
        assert_eq!(gabrielov(&e14), Triple([3, 2, 9]));
        assert_eq!(gabrielov(&e14).sorted(), [2, 3, 9]);
        // Q₁₈ = x³ + y⁸ + yz².
        let q18 = form(TypeTag::II, [3, 8, 16]);
        assert_eq!(gabrielov(&q18), Triple([3, 8, 3]));
        assert_eq!(gabrielov(&q18).sorted(), [3, 3, 8]);
        // x²y + y³z + z⁴x.
        assert_eq!(gabrielov(&form(TypeTag::V, [2, 3, 4])), Triple([10, 5, 5]));
        // W₁₇ and S₁₇, exercising type IV with p₂/p₁ ≠ p₃/p₂.
        assert_eq!(
            gabrielov(&form(TypeTag::IV, [2, 4, 20])).sorted(),
            [2, 6, 8]
        );
        assert_eq!(
            gabrielov(&form(TypeTag::IV, [6, 12, 24])).sorted(),
            [3, 6, 6]
        );
    }

    #[test]
    fn invariants_ignore_permutation_and_coefficients() {
        let plain = form(TypeTag::II, [2, 3, 15]);
        let decorated = TypedForm::try_new(
            TypeTag::II,
            [2, 3, 15],
            Perm::parse("xyz→zxy").unwrap(),
            [
                Coeff::from_integer(3.into()),
                Coeff::from_integer((-2).into()),
                Coeff::from_integer(7.into()),
            ],
        )
        .unwrap();
        assert_eq!(dolgachev(&plain), dolgachev(&decorated));
        assert_eq!(gabrielov(&plain), gabrielov(&decorated));
    }

    #[test]
    fn delta_signs() {
        assert_eq!(delta(&Triple([2, 3, 7])), 1);
        assert_eq!(delta(&Triple([3, 3, 3])), 0);
        assert_eq!(delta(&Triple([2, 3, 5])), -1);
    }

    #[test]
    fn gorenstein_parameter_examples() {
        assert_eq!(gorenstein_parameter(&WeightSystem::new([21, 14, 6], 42)), 1);
        assert_eq!(gorenstein_parameter(&WeightSystem::new([10, 15, 3], 30)), 2);
        assert_eq!(gorenstein_parameter(&WeightSystem::new([9, 9, 9], 27)), 0);
        // Simple singularities sit strictly below zero: E₈.
        assert_eq!(gorenstein_parameter(&WeightSystem::new([15, 10, 6], 30)), -1);
    }

    #[test]
    fn milnor_number_examples() {
        assert_eq!(milnor_number(&WeightSystem::new([10, 12, 6], 30)), Ok(12));
        assert_eq!(milnor_number(&WeightSystem::new([21, 14, 6], 42)), Ok(12));
        // Reduces to (2,1,1;5) first.
        assert_eq!(milnor_number(&WeightSystem::new([10, 5, 5], 25)), Ok(24));
    }

    #[test]
    fn milnor_number_rejects_non_integral_products() {
        match milnor_number(&WeightSystem::new([3, 1, 1], 5)) {
            Err(InvariantError::NonIntegral(v)) => {
                assert_eq!(v, BigRational::new(32.into(), 3.into()));
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn orbifold_euler_examples() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(orbifold_euler(&Triple([2, 3, 7])), q(-1, 42));
        assert_eq!(orbifold_euler(&Triple([3, 3, 3])), q(0, 1));
        assert_eq!(orbifold_euler(&Triple([1, 2, 5])), q(7, 10));
    }

    #[test]
    fn orbit_invariants_examples() {
        let oi = |alpha: [u64; 3], a: u64| orbit_invariants(&Triple(alpha), a);
        assert_eq!(
            oi([3, 3, 5], 2).unwrap().pairs,
            vec![(3, 2), (3, 2), (5, 3)]
        );
        assert_eq!(
            oi([2, 3, 11], 5).unwrap().pairs,
            vec![(2, 1), (3, 2), (11, 9)]
        );
        // Orders equal to 1 are omitted.
        assert_eq!(oi([1, 2, 5], 3).unwrap().pairs, vec![(2, 1), (5, 2)]);
        assert_eq!(
            oi([2, 2, 2], 2),
            Err(InvariantError::NotCoprime { a: 2, alpha: 2 })
        );
    }

    #[test]
    fn orbit_invariants_display() {
        let oi = orbit_invariants(&Triple([3, 3, 5]), 2).unwrap();
        assert_eq!(oi.to_string(), "(3,2),(3,2),(5,3)");
        let empty = orbit_invariants(&Triple([1, 1, 1]), 1).unwrap();
        assert_eq!(empty.to_string(), "-");
    }

    #[test]
    fn triple_serialization() {
        let t = Triple([3, 4, 3]);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"table":[3,4,3],"sorted":[3,3,4]}"#);
        assert_eq!(serde_json::from_str::<Triple>(&json).unwrap(), t);
        // The sorted view is optional on input but checked when present.
        assert_eq!(
            serde_json::from_str::<Triple>(r#"{"table":[2,3,7]}"#).unwrap(),
            Triple([2, 3, 7])
        );
        assert!(serde_json::from_str::<Triple>(r#"{"table":[2,3,7],"sorted":[2,3,5]}"#).is_err());
        assert!(serde_json::from_str::<Triple>(r#"{"table":[0,3,7]}"#).is_err());
    }

    #[test]
    fn orbit_invariants_serialization() {
        let oi = orbit_invariants(&Triple([2, 3, 11]), 5).unwrap();
        let json = serde_json::to_string(&oi).unwrap();
        assert_eq!(json, "[[2,1],[3,2],[11,9]]");
        assert_eq!(serde_json::from_str::<OrbitInvariants>(&json).unwrap(), oi);
    }

    #[test]
    fn cusp_transform_type_ii() {
        // x² + y³ + yz⁵ picks up xyz and sheds yz⁵ through x ↦ x − z⁴.
        let e13 = form(TypeTag::II, [2, 3, 15]);
        assert_eq!(cusp_transform(&e13), p("x^2+y^3+z^8+xyz-2xz^4"));
        assert!(cusp_support_holds(&e13));
    }

    #[test]
    fn cusp_transform_type_i_only_adds_xyz() {
        let f = form(TypeTag::I, [2, 3, 5]);
        assert_eq!(cusp_transform(&f), p("x^2+y^3+z^5+xyz"));
        assert!(cusp_support_holds(&f));
    }

    #[test]
    fn cusp_transform_type_iv() {
        // x² + xy² + yz²: x ↦ x − z, z ↦ z − y, expanded by hand.
        let f = form(TypeTag::IV, [2, 4, 8]);
        assert_eq!(cusp_transform(&f), p("x^2+y^3+z^2+xyz-2xz-2y^2z"));
        assert!(cusp_support_holds(&f));
    }

    #[test]
    fn cusp_transform_type_v_loop() {
        // x²y + y²z + z²x with x ↦ x−y, y ↦ y−z, z ↦ z−x.
        let f = form(TypeTag::V, [2, 2, 2]);
        let g = cusp_transform(&f);
        for m in ["x^3", "y^3", "z^3", "xyz"] {
            let mono = p(m).support()[0];
            assert!(g.coeff(mono).is_some(), "support misses {m}");
        }
        assert!(cusp_support_holds(&f));
    }

    #[test]
    fn cusp_transform_handles_constant_shears() {
        // q₁ = q₂ = q₃ = 1 degenerates the shears to x−1, y−1, z−1.
        assert!(cusp_support_holds(&form(TypeTag::V, [1, 1, 1])));
        assert!(cusp_support_holds(&form(TypeTag::V, [1, 1, 4])));
        assert!(cusp_support_holds(&form(TypeTag::V, [1, 2, 3])));
    }

    #[test]
    fn cusp_support_follows_the_permutation() {
        let tf = TypedForm::try_new(
            TypeTag::II,
            [2, 3, 15],
            Perm::parse("xyz→zxy").unwrap(),
            [Coeff::one(), Coeff::one(), Coeff::one()],
        )
        .unwrap();
        assert!(cusp_support_holds(&tf));
        // The renamed transform is the renaming of the plain transform.
        let plain = cusp_transform(&form(TypeTag::II, [2, 3, 15]));
        assert_eq!(cusp_transform(&tf), tf.perm.apply_to_polynomial(&plain));
    }

    mod properties {
        use super::*;
        use crate::test_util::{arb_form, arb_normal_form};
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn dolgachev_and_gabrielov_swap_under_transpose(tf in arb_form()) {
                let dual = tf.transpose_form();
                prop_assert_eq!(dolgachev(&tf).sorted(), gabrielov(&dual).sorted());
                prop_assert_eq!(gabrielov(&tf).sorted(), dolgachev(&dual).sorted());
            }

            #[test]
            fn delta_matches_euler_characteristic(
                t in (1u64..=30, 1u64..=30, 1u64..=30).prop_map(|(a, b, c)| Triple([a, b, c]))
            ) {
                let chi = orbifold_euler(&t);
                let product = BigRational::from_integer(t.product().into());
                let lhs = BigRational::from_integer(delta(&t).into());
                prop_assert_eq!(lhs, -product * chi);
            }

            #[test]
            fn milnor_number_is_scale_invariant(tf in arb_normal_form(), c in 1u64..=5) {
                let ws = tf.canonical_weights();
                let scaled = WeightSystem::new(ws.w.map(|w| w * c), ws.d * c);
                prop_assert_eq!(milnor_number(&ws).unwrap(), milnor_number(&scaled).unwrap());
            }

            #[test]
            fn canonical_weights_have_integral_milnor_numbers(tf in arb_normal_form()) {
                prop_assert!(milnor_number(&tf.canonical_weights()).is_ok());
            }

            #[test]
            fn cusp_support_always_holds(tf in arb_form()) {
                prop_assert!(cusp_support_holds(&tf));
            }

            #[test]
            fn orbit_invariants_invert_the_degree_parameter(
                t in (2u64..=40, 2u64..=40, 2u64..=40).prop_map(|(a, b, c)| Triple([a, b, c])),
                a in 1u64..=20,
            ) {
                match orbit_invariants(&t, a) {
                    Ok(oi) => {
                        prop_assert_eq!(oi.pairs.len(), 3);
                        for (alpha, beta) in oi.pairs {
                            prop_assert!(0 < beta && beta < alpha);
                            prop_assert_eq!((beta * a) % alpha, 1);
                        }
                    }
                    Err(InvariantError::NotCoprime { a: ea, alpha }) => {
                        use num_integer::Integer;
                        prop_assert_eq!(ea, a);
                        prop_assert!(alpha.gcd(&a) > 1);
                    }
                    Err(other) => return Err(TestCaseError::fail(format!("{other}"))),
                }
            }
        }
    }
}
