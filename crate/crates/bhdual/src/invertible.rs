//! Classification of invertible polynomials into the five normal-form
//! types, the Berglund–Hübsch transpose, and weight systems.
//!
//! An invertible polynomial in three variables is a sum of exactly three
//! monomials with nonzero coefficients whose exponent matrix `E` is
//! nonsingular and which defines an isolated singularity. Up to a
//! permutation of the variables, every such polynomial is one of five
//! support patterns (writing the normal-form slot variables as `x, y, z`):
//!
//! | type | normal form                     | parameters                    |
//! |------|---------------------------------|-------------------------------|
//! | I    | `x^p1 + y^p2 + z^p3`            | `p1,p2,p3 ≥ 2`                |
//! | II   | `x^p1 + y^p2 + y z^m`           | `p1,p2,m ≥ 2`, `p3 = p2·m`    |
//! | III  | `x^p1 + y^(q2+1) z + y z^(q3+1)`| `p1 ≥ 2`, `q2,q3 ≥ 1`         |
//! | IV   | `x^p1 + x y^a + y z^b`          | `p1,a,b ≥ 2`, `p2=p1a, p3=p2b`|
//! | V    | `x^q1 y + y^q2 z + z^q3 x`      | `q1,q2,q3 ≥ 1`                |
//!
//! The five patterns have disjoint supports (count the pure powers), so the
//! type is determined by the support alone; the classifier nevertheless
//! searches all six permutations and all five types and returns the
//! lexicographically smallest `(type, params, perm)` match, which fixes a
//! canonical representative for patterns with symmetries (Fermat
//! permutations, the `y ↔ z` swap of type III, the cyclic rotations of
//! type V).
//!
//! The Berglund–Hübsch transpose is computed *through* the classification:
//! the normal-form exponent matrix is transposed in its own slot order and
//! the recorded permutation is re-applied. This makes the transpose an
//! exact involution, including coefficients.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::poly::{Coeff, Monomial, PolyError, Polynomial, Var};

/// The five normal-form types, in classification precedence order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeTag {
    I,
    II,
    III,
    IV,
    V,
}

impl TypeTag {
    pub const ALL: [TypeTag; 5] = [TypeTag::I, TypeTag::II, TypeTag::III, TypeTag::IV, TypeTag::V];

    /// Position in the precedence order I < II < III < IV < V.
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeTag::I => "I",
            TypeTag::II => "II",
            TypeTag::III => "III",
            TypeTag::IV => "IV",
            TypeTag::V => "V",
        })
    }
}

impl FromStr for TypeTag {
    type Err = String;
    fn from_str(s: &str) -> Result<TypeTag, String> {
        match s {
            "I" => Ok(TypeTag::I),
            "II" => Ok(TypeTag::II),
            "III" => Ok(TypeTag::III),
            "IV" => Ok(TypeTag::IV),
            "V" => Ok(TypeTag::V),
            _ => Err(format!("unknown type tag {s:?}")),
        }
    }
}

/// A permutation of the variables, stored as the images of the normal-form
/// slot variables: `perm[i]` is the index of the *input* variable that
/// normal-form slot `i` maps to. Rendered as `xyz→xzy`, listing the images
/// of slots x, y, z in order (so `xyz→xzy` sends slot y to input z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm([usize; 3]);

impl Perm {
    /// All six permutations in lexicographic order of their image arrays;
    /// this order is the classification tie-break.
    pub const ALL: [Perm; 6] = [
        Perm([0, 1, 2]),
        Perm([0, 2, 1]),
        Perm([1, 0, 2]),
        Perm([1, 2, 0]),
        Perm([2, 0, 1]),
        Perm([2, 1, 0]),
    ];

    pub fn identity() -> Perm {
        Perm([0, 1, 2])
    }

    /// The input variable that normal-form slot `slot` maps to.
    pub fn image(self, slot: Var) -> Var {
        Var::from_index(self.0[slot.index()])
    }

    /// Push a monomial written in slot coordinates forward to input
    /// variables.
    pub fn apply_to_monomial(self, slot_mono: Monomial) -> Monomial {
        let e = slot_mono.exponents();
        let mut out = [0u32; 3];
        for i in 0..3 {
            out[self.0[i]] = e[i];
        }
        Monomial::new(out[0], out[1], out[2])
    }

    /// Pull an input-variable monomial back to slot coordinates.
    pub fn pullback(self, input_mono: Monomial) -> Monomial {
        let e = input_mono.exponents();
        Monomial::new(e[self.0[0]], e[self.0[1]], e[self.0[2]])
    }

    /// Rename the variables of a polynomial written in slot coordinates.
    pub fn apply_to_polynomial(self, p: &Polynomial) -> Polynomial {
        Polynomial::from_terms(
            p.terms_desc()
                .map(|(m, c)| (self.apply_to_monomial(m), c.clone())),
        )
    }

    pub fn parse(s: &str) -> Option<Perm> {
        let rest = s.strip_prefix("xyz→")?;
        let mut imgs = [usize::MAX; 3];
        let mut chars = rest.chars();
        for img in &mut imgs {
            *img = match chars.next()? {
                'x' => 0,
                'y' => 1,
                'z' => 2,
                _ => return None,
            };
        }
        if chars.next().is_some() || imgs[0] == imgs[1] || imgs[1] == imgs[2] || imgs[0] == imgs[2]
        {
            return None;
        }
        Some(Perm(imgs))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "xyz→{}{}{}",
            Var::from_index(self.0[0]),
            Var::from_index(self.0[1]),
            Var::from_index(self.0[2])
        )
    }
}

/// A system of weights `(w1, w2, w3; d)`, all entries positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightSystem {
    pub w: [u64; 3],
    pub d: u64,
}

impl WeightSystem {
    /// Panics if any entry is zero; weight systems are positive by
    /// definition.
    pub fn new(w: [u64; 3], d: u64) -> WeightSystem {
        assert!(
            w.iter().all(|&x| x > 0) && d > 0,
            "weight system entries must be positive: ({},{},{};{})",
            w[0],
            w[1],
            w[2],
            d
        );
        WeightSystem { w, d }
    }

    /// gcd of all four entries.
    pub fn content(&self) -> u64 {
        use num_integer::Integer;
        self.w.iter().fold(self.d, |g, &x| g.gcd(&x))
    }

    pub fn is_reduced(&self) -> bool {
        self.content() == 1
    }

    /// Weights sorted ascending (used for order-insensitive comparisons).
    pub fn sorted_weights(&self) -> [u64; 3] {
        let mut w = self.w;
        w.sort_unstable();
        w
    }

    /// The weighted degree of a monomial under this system.
    pub fn degree_of(&self, m: Monomial) -> u64 {
        m.exponents()
            .iter()
            .zip(self.w)
            .map(|(&e, w)| e as u64 * w)
            .sum()
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{};{})", self.w[0], self.w[1], self.w[2], self.d)
    }
}

impl Serialize for WeightSystem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.w[0], self.w[1], self.w[2], self.d).serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightSystem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<WeightSystem, D::Error> {
        let [w1, w2, w3, deg] = <[u64; 4]>::deserialize(d)?;
        if w1 == 0 || w2 == 0 || w3 == 0 || deg == 0 {
            return Err(serde::de::Error::custom("weight system entries must be positive"));
        }
        Ok(WeightSystem::new([w1, w2, w3], deg))
    }
}

/// Reduce a weight system by the gcd of its entries; returns the reduced
/// system and the factor `c = gcd(w1, w2, w3, d)` that was divided out.
pub fn reduce_weights(ws: WeightSystem) -> (WeightSystem, u64) {
    let c = ws.content();
    (
        WeightSystem::new(
            [ws.w[0] / c, ws.w[1] / c, ws.w[2] / c],
            ws.d / c,
        ),
        c,
    )
}

/// A classified invertible polynomial: normal-form type, parameters, the
/// permutation sending normal-form slots to input variables, and the three
/// coefficients in slot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedForm {
    pub type_tag: TypeTag,
    pub params: [u64; 3],
    pub perm: Perm,
    pub coeffs: [Coeff; 3],
}

/// Errors raised by classification and weight computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("zero coefficient on a monomial")]
    ZeroCoefficient,
    #[error("parameters out of range for type {0}: ({1}, {2}, {3})")]
    InvalidParameters(TypeTag, u64, u64, u64),
    #[error("exponent matrix is singular (det E = 0)")]
    SingularMatrix,
    #[error("no normal-form type matches under any variable permutation")]
    NotInvertible,
    #[error("Cramer weights are not all positive after sign normalization")]
    NonPositiveWeight,
}

impl TypedForm {
    /// Build a form from raw parts, validating parameter ranges,
    /// divisibility, and nonzero coefficients.
    pub fn try_new(
        type_tag: TypeTag,
        params: [u64; 3],
        perm: Perm,
        coeffs: [Coeff; 3],
    ) -> Result<TypedForm, ClassifyError> {
        let [a, b, c] = params;
        let ok = match type_tag {
            TypeTag::I => a >= 2 && b >= 2 && c >= 2,
            TypeTag::II => a >= 2 && b >= 2 && c % b == 0 && c / b >= 2,
            TypeTag::III => a >= 2 && b >= 1 && c >= 1,
            TypeTag::IV => {
                a >= 2 && b % a == 0 && b / a >= 2 && c % b == 0 && c / b >= 2
            }
            TypeTag::V => a >= 1 && b >= 1 && c >= 1,
        };
        if !ok {
            return Err(ClassifyError::InvalidParameters(type_tag, a, b, c));
        }
        if coeffs.iter().any(|c| c.is_zero()) {
            return Err(ClassifyError::ZeroCoefficient);
        }
        Ok(TypedForm {
            type_tag,
            params,
            perm,
            coeffs,
        })
    }

    /// The normal form with unit coefficients and identity permutation.
    pub fn normal(type_tag: TypeTag, params: [u64; 3]) -> Result<TypedForm, ClassifyError> {
        TypedForm::try_new(
            type_tag,
            params,
            Perm::identity(),
            [Coeff::one(), Coeff::one(), Coeff::one()],
        )
    }

    /// The support of the normal-form pattern in slot coordinates, in slot
    /// order.
    pub fn pattern_support(&self) -> [Monomial; 3] {
        let [a, b, c] = self.params;
        let m = |ex: u64, ey: u64, ez: u64| {
            Monomial::new(ex as u32, ey as u32, ez as u32)
        };
        match self.type_tag {
            TypeTag::I => [m(a, 0, 0), m(0, b, 0), m(0, 0, c)],
            TypeTag::II => [m(a, 0, 0), m(0, b, 0), m(0, 1, c / b)],
            TypeTag::III => [m(a, 0, 0), m(0, b + 1, 1), m(0, 1, c + 1)],
            TypeTag::IV => [m(a, 0, 0), m(1, b / a, 0), m(0, 1, c / b)],
            TypeTag::V => [m(a, 1, 0), m(0, b, 1), m(1, 0, c)],
        }
    }

    /// The support of the transposed pattern (columns of the normal-form
    /// exponent matrix), in the same slot order.
    ///
    /// One support needs care: the unit loop `xy + yz + zx` is fixed by
    /// *every* variable permutation, including orientation-reversing ones,
    /// and the raw column transpose walks its coefficients one step around
    /// the loop (an order-3 operation). The slot labeling on that support
    /// is arbitrary to begin with, so we compose with the loop's own y↔z
    /// mirror, which fixes the support and makes the transpose an exact
    /// involution on coefficients as well.
    pub fn transpose_pattern_support(&self) -> [Monomial; 3] {
        if (self.type_tag, self.params) == (TypeTag::V, [1, 1, 1]) {
            return [
                Monomial::new(1, 1, 0),
                Monomial::new(1, 0, 1),
                Monomial::new(0, 1, 1),
            ];
        }
        let rows = self.pattern_support();
        let e = |i: usize, j: usize| rows[j].exponents()[i];
        [
            Monomial::new(e(0, 0), e(0, 1), e(0, 2)),
            Monomial::new(e(1, 0), e(1, 1), e(1, 2)),
            Monomial::new(e(2, 0), e(2, 1), e(2, 2)),
        ]
    }

    /// Reconstruct the input polynomial: coefficients on the pattern,
    /// renamed through the recorded permutation.
    pub fn to_polynomial(&self) -> Polynomial {
        let pat = self.pattern_support();
        self.perm.apply_to_polynomial(&Polynomial::from_terms(
            pat.into_iter().zip(self.coeffs.iter().cloned()),
        ))
    }

    /// The Berglund–Hübsch transpose as a polynomial: the transposed
    /// pattern with the same coefficients, renamed through the same
    /// permutation.
    pub fn transpose_polynomial(&self) -> Polynomial {
        let pat = self.transpose_pattern_support();
        self.perm.apply_to_polynomial(&Polynomial::from_terms(
            pat.into_iter().zip(self.coeffs.iter().cloned()),
        ))
    }

    /// Classification of the transpose.
    pub fn transpose_form(&self) -> TypedForm {
        classify(&self.transpose_polynomial())
            .expect("the transpose of a classified polynomial is classifiable")
    }

    /// The canonical system of weights attached to the normal form,
    /// slot-indexed. Every slot monomial has weighted degree `d`
    /// (asserted).
    pub fn canonical_weights(&self) -> WeightSystem {
        let [a, b, c] = self.params.map(u128::from);
        let (w, d): ([u128; 3], u128) = match self.type_tag {
            TypeTag::I => ([b * c, a * c, a * b], a * b * c),
            TypeTag::II => ([c, a * c / b, (b - 1) * a], a * c),
            TypeTag::III => {
                // p2 is determined by p2 + 1 = (q2 + 1)(q3 + 1).
                let p2 = (b + 1) * (c + 1) - 1;
                ([p2, a * c, a * b], a * p2)
            }
            TypeTag::IV => ([c / a, (a - 1) * c / b, b - a + 1], c),
            TypeTag::V => (
                [b * c - c + 1, c * a - a + 1, a * b - b + 1],
                a * b * c + 1,
            ),
        };
        let ws = WeightSystem::new(
            w.map(|x| u64::try_from(x).expect("weight overflow")),
            u64::try_from(d).expect("degree overflow"),
        );
        for m in self.pattern_support() {
            assert_eq!(
                ws.degree_of(m),
                ws.d,
                "normal-form monomial {m} is not weighted-homogeneous under {ws}"
            );
        }
        ws
    }

    /// The canonical weights of the transpose `W_{f^t}`, slot-indexed by
    /// the transposed pattern. Closed per-type forms; agrees with
    /// [`weights_by_cramer`] on the exponent matrix of `f` up to the term
    /// order of the rows (exactly, for types whose slot order is the
    /// canonical term order).
    pub fn dual_weights(&self) -> WeightSystem {
        let [a, b, c] = self.params.map(u128::from);
        let (w, d): ([u128; 3], u128) = match self.type_tag {
            TypeTag::I => ([b * c, a * c, a * b], a * b * c),
            TypeTag::II => {
                let m = c / b;
                ([c, (m - 1) * a, a * b], a * c)
            }
            TypeTag::III => {
                let p2 = (b + 1) * (c + 1) - 1;
                ([p2, a * c, a * b], a * p2)
            }
            TypeTag::IV => {
                let m = c / b;
                ([c / a - c / b + 1, (m - 1) * a, b], c)
            }
            TypeTag::V => (
                [b * c - b + 1, c * a - c + 1, a * b - a + 1],
                a * b * c + 1,
            ),
        };
        WeightSystem::new(
            w.map(|x| u64::try_from(x).expect("weight overflow")),
            u64::try_from(d).expect("degree overflow"),
        )
    }

    /// Canonical weights re-indexed by *input* variables (pushed through
    /// the recorded permutation), so that every monomial of the original
    /// polynomial has weighted degree `d`.
    pub fn weights_on_input_vars(&self) -> WeightSystem {
        let ws = self.canonical_weights();
        let mut w = [0u64; 3];
        for slot in 0..3 {
            w[self.perm.image(Var::from_index(slot)).index()] = ws.w[slot];
        }
        WeightSystem::new(w, ws.d)
    }
}

impl fmt::Display for TypedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "type {}, params ({},{},{}), perm {}",
            self.type_tag, self.params[0], self.params[1], self.params[2], self.perm
        )
    }
}

/// JSON shape: `{"type":"II","params":[3,2,10],"perm":"xyz→xzy","coeffs":["1","1","1"]}`.
#[derive(Serialize, Deserialize)]
struct TypedFormRepr {
    #[serde(rename = "type")]
    type_tag: String,
    params: [u64; 3],
    perm: String,
    coeffs: [String; 3],
}

impl Serialize for TypedForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TypedFormRepr {
            type_tag: self.type_tag.to_string(),
            params: self.params,
            perm: self.perm.to_string(),
            coeffs: [
                self.coeffs[0].to_string(),
                self.coeffs[1].to_string(),
                self.coeffs[2].to_string(),
            ],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TypedForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<TypedForm, D::Error> {
        use serde::de::Error;
        let repr = TypedFormRepr::deserialize(d)?;
        let type_tag = repr.type_tag.parse::<TypeTag>().map_err(Error::custom)?;
        let perm = Perm::parse(&repr.perm)
            .ok_or_else(|| Error::custom(format!("bad permutation {:?}", repr.perm)))?;
        let mut coeffs = [Coeff::zero(), Coeff::zero(), Coeff::zero()];
        for (c, s) in coeffs.iter_mut().zip(&repr.coeffs) {
            *c = s
                .parse::<Coeff>()
                .map_err(|e| Error::custom(format!("bad coefficient {s:?}: {e}")))?;
        }
        TypedForm::try_new(type_tag, repr.params, perm, coeffs).map_err(Error::custom)
    }
}

/// 3×3 determinant, exactly, in `i128`.
fn det3(m: &[[u64; 3]; 3]) -> i128 {
    let a = m.map(|row| row.map(|x| x as i128));
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Solve for the weight system of a nonsingular exponent matrix by
/// Cramer's rule: the `j`-th weight is the determinant of `E` with row `j`
/// replaced by ones, the degree is `det E`, and the whole quadruple is
/// negated if `det E < 0`. Applied to `E(f)` this yields the weights of
/// the transpose (indexed by the terms of `f`); applied to `E(f)ᵀ` it
/// yields the weights of `f` itself (indexed by the variables).
pub fn weights_by_cramer(e: &[[u64; 3]; 3]) -> Result<WeightSystem, ClassifyError> {
    let d = det3(e);
    if d == 0 {
        return Err(ClassifyError::SingularMatrix);
    }
    let mut vals = [0i128; 4];
    for j in 0..3 {
        let mut m = *e;
        m[j] = [1, 1, 1];
        vals[j] = det3(&m);
    }
    vals[3] = d;
    if d < 0 {
        for v in &mut vals {
            *v = -*v;
        }
    }
    if vals.iter().any(|&v| v <= 0) {
        return Err(ClassifyError::NonPositiveWeight);
    }
    Ok(WeightSystem::new(
        [vals[0] as u64, vals[1] as u64, vals[2] as u64],
        vals[3] as u64,
    ))
}

/// The transpose of a 3×3 matrix.
pub fn transpose_matrix(e: &[[u64; 3]; 3]) -> [[u64; 3]; 3] {
    let mut t = [[0u64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            t[i][j] = e[j][i];
        }
    }
    t
}

/// Classify a polynomial into a normal-form type.
///
/// All six variable permutations are searched; among the matches, the
/// lexicographically smallest `(type, params, perm)` wins, where types are
/// ordered I < II < III < IV < V and permutations by their image arrays.
/// A polynomial with no match is reported as `SingularMatrix` when its
/// exponent matrix is singular and `NotInvertible` otherwise.
pub fn classify(p: &Polynomial) -> Result<TypedForm, ClassifyError> {
    let matrix = p.exponent_matrix()?;
    let terms: Vec<(Monomial, Coeff)> = p
        .terms_desc()
        .map(|(m, c)| (m, c.clone()))
        .collect();

    type Matcher = fn(&[[u32; 3]; 3]) -> Option<([u64; 3], [usize; 3])>;
    const MATCHERS: [(TypeTag, Matcher); 5] = [
        (TypeTag::I, match_type_i),
        (TypeTag::II, match_type_ii),
        (TypeTag::III, match_type_iii),
        (TypeTag::IV, match_type_iv),
        (TypeTag::V, match_type_v),
    ];

    let mut best: Option<((usize, [u64; 3], usize), TypedForm)> = None;
    for (perm_idx, perm) in Perm::ALL.into_iter().enumerate() {
        let mut s = [[0u32; 3]; 3];
        for (row, (m, _)) in s.iter_mut().zip(&terms) {
            *row = perm.pullback(*m).exponents();
        }
        for (tag, matcher) in MATCHERS {
            if let Some((params, term_for_slot)) = matcher(&s) {
                let key = (tag.index(), params, perm_idx);
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    let coeffs = term_for_slot.map(|t| terms[t].1.clone());
                    let tf = TypedForm::try_new(tag, params, perm, coeffs)
                        .expect("matched pattern satisfies the parameter ranges");
                    best = Some((key, tf));
                }
            }
        }
    }
    match best {
        Some((_, tf)) => Ok(tf),
        None if det3(&matrix) == 0 => Err(ClassifyError::SingularMatrix),
        None => Err(ClassifyError::NotInvertible),
    }
}

/// Classify, transpose, and return the transpose polynomial.
pub fn transpose(p: &Polynomial) -> Result<Polynomial, ClassifyError> {
    Ok(classify(p)?.transpose_polynomial())
}

/// Find the unique monomial satisfying a slot predicate. The slot shapes
/// within each type are mutually exclusive, so three successful finds form
/// a bijection automatically.
fn find_slot(s: &[[u32; 3]; 3], pred: impl Fn(&[u32; 3]) -> bool) -> Option<usize> {
    let mut found = None;
    for (i, m) in s.iter().enumerate() {
        if pred(m) {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

fn match_type_i(s: &[[u32; 3]; 3]) -> Option<([u64; 3], [usize; 3])> {
    let a = find_slot(s, |m| m[1] == 0 && m[2] == 0 && m[0] >= 2)?;
    let b = find_slot(s, |m| m[0] == 0 && m[2] == 0 && m[1] >= 2)?;
    let c = find_slot(s, |m| m[0] == 0 && m[1] == 0 && m[2] >= 2)?;
    Some((
        [s[a][0] as u64, s[b][1] as u64, s[c][2] as u64],
        [a, b, c],
    ))
}

fn match_type_ii(s: &[[u32; 3]; 3]) -> Option<([u64; 3], [usize; 3])> {
    let a = find_slot(s, |m| m[1] == 0 && m[2] == 0 && m[0] >= 2)?;
    let b = find_slot(s, |m| m[0] == 0 && m[2] == 0 && m[1] >= 2)?;
    let c = find_slot(s, |m| m[0] == 0 && m[1] == 1 && m[2] >= 2)?;
    let (p1, p2, m) = (s[a][0] as u64, s[b][1] as u64, s[c][2] as u64);
    Some(([p1, p2, p2 * m], [a, b, c]))
}

fn match_type_iii(s: &[[u32; 3]; 3]) -> Option<([u64; 3], [usize; 3])> {
    let a = find_slot(s, |m| m[1] == 0 && m[2] == 0 && m[0] >= 2)?;
    let b = find_slot(s, |m| m[0] == 0 && m[2] == 1 && m[1] >= 2)?;
    let c = find_slot(s, |m| m[0] == 0 && m[1] == 1 && m[2] >= 2)?;
    Some((
        [s[a][0] as u64, s[b][1] as u64 - 1, s[c][2] as u64 - 1],
        [a, b, c],
    ))
}

fn match_type_iv(s: &[[u32; 3]; 3]) -> Option<([u64; 3], [usize; 3])> {
    let a = find_slot(s, |m| m[1] == 0 && m[2] == 0 && m[0] >= 2)?;
    let b = find_slot(s, |m| m[0] == 1 && m[2] == 0 && m[1] >= 2)?;
    let c = find_slot(s, |m| m[0] == 0 && m[1] == 1 && m[2] >= 2)?;
    let (p1, ea, eb) = (s[a][0] as u64, s[b][1] as u64, s[c][2] as u64);
    Some(([p1, p1 * ea, p1 * ea * eb], [a, b, c]))
}

fn match_type_v(s: &[[u32; 3]; 3]) -> Option<([u64; 3], [usize; 3])> {
    let a = find_slot(s, |m| m[1] == 1 && m[2] == 0 && m[0] >= 1)?;
    let b = find_slot(s, |m| m[0] == 0 && m[2] == 1 && m[1] >= 1)?;
    let c = find_slot(s, |m| m[0] == 1 && m[1] == 0 && m[2] >= 1)?;
    Some((
        [s[a][0] as u64, s[b][1] as u64, s[c][2] as u64],
        [a, b, c],
    ))
}
