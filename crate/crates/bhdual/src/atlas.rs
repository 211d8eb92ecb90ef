//! A golden table of named weighted-homogeneous singularities: simple,
//! simply elliptic, exceptional unimodal and bimodal, and the heads of the
//! weighted-homogeneous bimodal series, each given by an invertible
//! polynomial together with its stored duality invariants.
//!
//! The table lives in `data/atlas.txt` (embedded at compile time) and is
//! deliberately *redundant*: every stored invariant can be recomputed from
//! the defining polynomial alone, and [`check_entry`] does exactly that, so
//! a single mistyped cell shows up as a named mismatch.  The two infinite
//! families `A(k,l)` and `D(k)` of simple singularities are generated from
//! closed forms on demand instead of being stored.
//!
//! Besides name lookup the atlas answers the *dual name* question: given a
//! polynomial, which named class does its Berglund–Hübsch transpose belong
//! to?  This is resolved through the classification, so any polynomial in
//! the right-equivalence class of a table row (or of a family member)
//! finds its dual.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::invariants::{
    dolgachev, gabrielov, gorenstein_parameter, milnor_number, orbit_invariants, Triple,
};
use crate::invertible::{classify, reduce_weights, ClassifyError, TypeTag};
use crate::poly::parse_polynomial;
use crate::series::{characteristic_function, CycloProduct};

/// Largest parameter accepted for the generated `A(k,l)` / `D(k)` families;
/// keeps every derived quantity comfortably inside `u64`.
const FAMILY_PARAM_MAX: u64 = 1_000_000;

/// The five modality families occurring in the atlas, in the order of the
/// Gorenstein parameter `a_W` (< 0, = 0, = 1, then `a_W ∈ {2,3,5}` split
/// into the exceptional bimodal forms and the bimodal series heads plus
/// the duals that fall outside the unimodal and bimodal lists).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Simple,
    SimplyElliptic,
    UnimodalExceptional,
    BimodalExceptional,
    BimodalSeries,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Simple,
        Family::SimplyElliptic,
        Family::UnimodalExceptional,
        Family::BimodalExceptional,
        Family::BimodalSeries,
    ];

    /// The kebab-case name used in the data file and in JSON output.
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Simple => "simple",
            Family::SimplyElliptic => "simply-elliptic",
            Family::UnimodalExceptional => "unimodal-exceptional",
            Family::BimodalExceptional => "bimodal-exceptional",
            Family::BimodalSeries => "bimodal-series",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Family, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// One named singularity with its stored invariants.
///
/// `alpha` and `gamma` are kept sorted ascending; the orbit pairs in
/// `beta_pairs` follow the sorted `alpha`, and the extension pairs in
/// `delta_pairs` follow the sorted `gamma` (their first components repeat
/// it, which [`check_entry`] verifies).  The extension offsets `δᵢ` are
/// genuine table data — they are not determined by the other columns.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AtlasEntry {
    pub name: String,
    pub family: Family,
    /// The defining invertible polynomial.
    #[serde(rename = "f")]
    pub f_text: String,
    /// Its Berglund–Hübsch transpose.
    #[serde(rename = "ft")]
    pub ft_text: String,
    /// Dolgachev numbers, sorted ascending.
    pub alpha: Triple,
    /// Gabrielov numbers, sorted ascending.
    pub gamma: Triple,
    /// Name of the singularity class of the transpose.
    pub dual: String,
    /// Gorenstein parameter `d − w₁ − w₂ − w₃` of the canonical weights.
    pub a_w: i64,
    /// Content (gcd) of the canonical weight system of `f`.
    pub c_f: u64,
    /// Content of the dual weight system.
    pub c_ft: u64,
    /// Milnor number of the dual weight system.
    pub mu_ft: u64,
    /// Orbit invariant pairs `(αᵢ, βᵢ)` with `βᵢ·a_W ≡ 1 (mod αᵢ)`,
    /// stored for the exceptional bimodal rows.
    #[serde(rename = "betas")]
    pub beta_pairs: Option<Vec<(u64, u64)>>,
    /// Graph extension pairs `(γᵢ, δᵢ)` for the exceptional bimodal rows.
    #[serde(rename = "deltas")]
    pub delta_pairs: Option<Vec<(u64, u64)>>,
    /// Characteristic function `φ_{G_f}` as a cyclotomic product.
    pub phi_f: CycloProduct,
    /// Characteristic function `φ_{G_{f^t}}` of the transpose.
    pub phi_ft: CycloProduct,
    /// Free-form remarks from the data file.
    pub notes: String,
}

/// Errors from atlas lookups and data-file parsing.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AtlasError {
    #[error("no atlas entry or family named {0:?}")]
    UnknownName(String),
    #[error("bad family parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("bad atlas data: {0}")]
    BadData(String),
}

/// The atlas: stored entries plus indexes mapping classified forms to
/// names.  `class_to_name` keys the classification `(type, params)` of
/// each entry's polynomial; `class_to_dual_owner` keys the classification
/// of each entry's *transpose* and yields the entry whose dual it is.
#[derive(Debug, Clone)]
pub struct Atlas {
    entries: Vec<AtlasEntry>,
    by_name: BTreeMap<String, usize>,
    class_to_name: BTreeMap<(TypeTag, [u64; 3]), String>,
    class_to_dual_owner: BTreeMap<(TypeTag, [u64; 3]), String>,
}

impl Atlas {
    /// The embedded table, parsed once.
    pub fn builtin() -> &'static Atlas {
        static ATLAS: OnceLock<Atlas> = OnceLock::new();
        ATLAS.get_or_init(|| {
            include_str!("../data/atlas.txt")
                .parse()
                .expect("embedded atlas data parses")
        })
    }

    /// All stored entries, in file order.
    pub fn entries(&self) -> &[AtlasEntry] {
        &self.entries
    }

    /// A stored entry by exact name, if present.
    pub fn get(&self, name: &str) -> Option<&AtlasEntry> {
        self.by_name.get(name).map(|&i| &self.entries[i])
    }

    /// Look up a name: stored entries first, then the generated families
    /// `A(k,l)` (`k,l ≥ 1`) and `D(k)` (`k ≥ 4`).
    pub fn lookup(&self, name: &str) -> Result<AtlasEntry, AtlasError> {
        if let Some(e) = self.get(name) {
            return Ok(e.clone());
        }
        if let Some(inner) = name.strip_prefix("A(").and_then(|r| r.strip_suffix(')')) {
            let (k, l) = inner
                .split_once(',')
                .ok_or_else(|| AtlasError::BadParameter(format!("A takes two indices, got {name:?}")))?;
            let k = parse_family_param(k, 1, name)?;
            let l = parse_family_param(l, 1, name)?;
            return Ok(a_family(k, l));
        }
        if let Some(inner) = name.strip_prefix("D(").and_then(|r| r.strip_suffix(')')) {
            let k = parse_family_param(inner, 4, name)?;
            return Ok(d_family(k));
        }
        Err(AtlasError::UnknownName(name.to_string()))
    }

    /// The name of the dual (transpose) class of `input`, which may be an
    /// entry or family name or a polynomial.
    ///
    /// Polynomials are classified and matched against the stored forms,
    /// then against the stored transposes, then against the family
    /// patterns; polynomials outside all of these are [`AtlasError::UnknownName`].
    pub fn dual_name(&self, input: &str) -> Result<String, AtlasError> {
        match self.lookup(input) {
            Ok(e) => return Ok(e.dual),
            Err(AtlasError::UnknownName(_)) => {}
            Err(e) => return Err(e),
        }
        let Ok(p) = parse_polynomial(input) else {
            return Err(AtlasError::UnknownName(input.to_string()));
        };
        let tf = classify(&p)?;
        let key = (tf.type_tag, tf.params);
        if let Some(name) = self.class_to_name.get(&key) {
            return Ok(self.get(name).expect("index points at an entry").dual.clone());
        }
        if let Some(owner) = self.class_to_dual_owner.get(&key) {
            return Ok(owner.clone());
        }
        if let Some(name) = family_name_of(tf.type_tag, tf.params) {
            return Ok(self.lookup(&name).expect("family names resolve").dual);
        }
        Err(AtlasError::UnknownName(input.to_string()))
    }

    /// The name under which the class of `input` is stored, where `input`
    /// is an entry or family name (echoed in its stored spelling) or a
    /// polynomial.  Classes appearing only as some row's transpose have
    /// no name of their own and are [`AtlasError::UnknownName`].
    pub fn name_of(&self, input: &str) -> Result<String, AtlasError> {
        match self.lookup(input) {
            Ok(e) => return Ok(e.name),
            Err(AtlasError::UnknownName(_)) => {}
            Err(e) => return Err(e),
        }
        let Ok(p) = parse_polynomial(input) else {
            return Err(AtlasError::UnknownName(input.to_string()));
        };
        let tf = classify(&p)?;
        let key = (tf.type_tag, tf.params);
        if let Some(name) = self.class_to_name.get(&key) {
            return Ok(name.clone());
        }
        if let Some(name) = family_name_of(tf.type_tag, tf.params) {
            return Ok(name);
        }
        Err(AtlasError::UnknownName(input.to_string()))
    }

    /// Run [`check_entry`] on every stored entry and then verify the
    /// table-level links: each `dual` column names a stored entry whose
    /// reduced canonical weight system is the entry's reduced *dual*
    /// weight system (the class identification behind the name), the
    /// Milnor numbers across the link agree, and each family carries the
    /// right Gorenstein parameter.
    ///
    /// Duality is an involution on names whenever the dual row stores the
    /// same realization as the entry's transpose.  Two rows are one-way
    /// class pointers instead: the transposes of J3,0 and E18 land in the
    /// classes of Z13 and Q12, but those rows realize their classes by
    /// different polynomials (pairing with Q11 and with Q12 itself), so
    /// following `dual` twice does not return.  [`Atlas::one_way`] is the
    /// mechanical test for this.
    pub fn check(&self) -> Vec<String> {
        let mut problems = Vec::new();
        for e in &self.entries {
            problems.extend(
                check_entry(e)
                    .into_iter()
                    .map(|m| format!("{}: {m}", e.name)),
            );
            let Some(dual) = self.get(&e.dual) else {
                problems.push(format!("{}: dual {:?} is not a stored entry", e.name, e.dual));
                continue;
            };
            let class_of = |text: &str| reduce_weights(classify_text(text).canonical_weights()).0;
            let here = reduce_weights(classify_text(&e.f_text).dual_weights()).0;
            let there = class_of(&dual.f_text);
            if (here.sorted_weights(), here.d) != (there.sorted_weights(), there.d) {
                problems.push(format!(
                    "{}: transpose has reduced weights {here} but the dual class {} has {there}",
                    e.name, dual.name
                ));
            }
            if e.mu_ft != mu_of(&dual.f_text) {
                problems.push(format!(
                    "{}: stores mu_ft {} but the dual class {} has Milnor number {}",
                    e.name,
                    e.mu_ft,
                    dual.name,
                    mu_of(&dual.f_text)
                ));
            }
            if dual.dual != e.name && !self.one_way(e) {
                problems.push(format!(
                    "{}: dual of dual is {:?}, not the entry itself",
                    e.name, dual.dual
                ));
            }
            let a_w_ok = match e.family {
                Family::Simple => e.a_w < 0,
                Family::SimplyElliptic => e.a_w == 0,
                Family::UnimodalExceptional => e.a_w == 1,
                Family::BimodalExceptional => matches!(e.a_w, 2 | 3 | 5),
                Family::BimodalSeries => e.a_w >= 2,
            };
            if !a_w_ok {
                problems.push(format!(
                    "{}: Gorenstein parameter {} does not fit family {}",
                    e.name, e.a_w, e.family
                ));
            }
        }
        problems
    }

    /// Whether a stored entry's `dual` column is a one-way class pointer:
    /// the dual row realizes the transpose's class by a *different*
    /// polynomial, so name-level duality does not return to the entry.
    pub fn one_way(&self, e: &AtlasEntry) -> bool {
        let Some(dual) = self.get(&e.dual) else {
            return false;
        };
        let ft = classify_text(&e.ft_text);
        let df = classify_text(&dual.f_text);
        (ft.type_tag, ft.params) != (df.type_tag, df.params)
    }
}

/// Classify a stored polynomial (table data is pre-validated, so failures
/// here are panics, not errors).
fn classify_text(text: &str) -> crate::invertible::TypedForm {
    classify(&parse_polynomial(text).expect("stored polynomial parses"))
        .expect("stored polynomial classifies")
}

/// Milnor number of the canonical weight system of a stored polynomial.
fn mu_of(f_text: &str) -> u64 {
    milnor_number(&classify_text(f_text).canonical_weights())
        .expect("stored form has integral Milnor number")
}

fn parse_family_param(s: &str, min: u64, name: &str) -> Result<u64, AtlasError> {
    let v: u64 = s
        .trim()
        .parse()
        .map_err(|_| AtlasError::BadParameter(format!("bad index in {name:?}")))?;
    if v < min || v > FAMILY_PARAM_MAX {
        return Err(AtlasError::BadParameter(format!(
            "index {v} out of range [{min}, {FAMILY_PARAM_MAX}] in {name:?}"
        )));
    }
    Ok(v)
}

/// The family name, if any, of a classified form: the chains
/// `A(k,l) = xy + y^k z + z^l x` and the two shapes of `D(k)`.
fn family_name_of(tag: TypeTag, params: [u64; 3]) -> Option<String> {
    match tag {
        TypeTag::V if params[0] == 1 => Some(format!("A({},{})", params[1], params[2])),
        TypeTag::III if params[0] == 2 && params[1] == 1 => Some(format!("D({})", 2 * params[2] + 2)),
        TypeTag::IV if params[0] == 2 && params[2] == 2 * params[1] => {
            Some(format!("D({})", params[1] + 1))
        }
        _ => None,
    }
}

/// `A(k,l) = xy + y^k z + z^l x`: the Milnor-number-`kl` chain with
/// Dolgachev numbers `{1, l, kl−l+1}` and Gabrielov numbers
/// `{1, k, kl−k+1}`; its dual is `A(l,k)`.
fn a_family(k: u64, l: u64) -> AtlasEntry {
    let pow = |v: char, e: u64| {
        if e == 1 {
            v.to_string()
        } else {
            format!("{v}^{e}")
        }
    };
    let f_text = format!("xy+{}z+{}x", pow('y', k), pow('z', l));
    let ft_text = format!("zx+x{}+y{}", pow('y', k), pow('z', l));
    let d = k * l + 1;
    AtlasEntry {
        name: format!("A({k},{l})"),
        family: Family::Simple,
        f_text,
        ft_text,
        alpha: sorted_triple([1, l, k * l - l + 1]),
        gamma: sorted_triple([1, k, k * l - k + 1]),
        dual: format!("A({l},{k})"),
        a_w: -1,
        c_f: 1,
        c_ft: 1,
        mu_ft: k * l,
        beta_pairs: None,
        delta_pairs: None,
        phi_f: CycloProduct::from_factors([(d, 1), (1, -1)]),
        phi_ft: CycloProduct::from_factors([(d, 1), (1, -1)]),
        notes: String::new(),
    }
}

/// `D(k)`: self-dual, Dolgachev = Gabrielov = `{2, 2, k−2}`, Milnor
/// number `k`, realised as `x² + y²z + yz^m` for `k = 2m` and as
/// `x² + xy^m + yz²` for `k = 2m+1`.
fn d_family(k: u64) -> AtlasEntry {
    let m = k / 2;
    let (f_text, ft_text) = if k % 2 == 0 {
        let f = format!("x^2+zy^2+yz^{m}");
        (f.clone(), f)
    } else {
        (format!("x^2+xy^{m}+yz^2"), format!("x^2y+y^{m}z+z^2"))
    };
    let phi = CycloProduct::from_factors([(2, 1), (2 * k - 2, 1), (1, -1), (k - 1, -1)]);
    AtlasEntry {
        name: format!("D({k})"),
        family: Family::Simple,
        f_text,
        ft_text,
        alpha: sorted_triple([2, 2, k - 2]),
        gamma: sorted_triple([2, 2, k - 2]),
        dual: format!("D({k})"),
        a_w: -1,
        c_f: 1,
        c_ft: 1,
        mu_ft: k,
        beta_pairs: None,
        delta_pairs: None,
        phi_f: phi.clone(),
        phi_ft: phi,
        notes: String::new(),
    }
}

fn sorted_triple(mut t: [u64; 3]) -> Triple {
    t.sort_unstable();
    Triple::new(t)
}

/// Recompute every stored invariant of one entry from its polynomial and
/// report the mismatches (empty means the row is internally consistent).
pub fn check_entry(entry: &AtlasEntry) -> Vec<String> {
    fn note(problems: &mut Vec<String>, what: &str, ok: bool) {
        if !ok {
            problems.push(format!("{what} disagrees with the stored value"));
        }
    }
    let mut problems = Vec::new();
    let check = note;

    let tf = match parse_polynomial(&entry.f_text).map_err(|e| e.to_string()).and_then(|p| {
        classify(&p).map_err(|e| e.to_string())
    }) {
        Ok(tf) => tf,
        Err(e) => return vec![format!("defining polynomial: {e}")],
    };
    match parse_polynomial(&entry.ft_text) {
        Ok(ft) => check(
            &mut problems,
            "transpose polynomial",
            ft == tf.transpose_polynomial(),
        ),
        Err(e) => problems.push(format!("stored transpose does not parse: {e}")),
    }

    let p = &mut problems;
    check(p, "alpha is sorted", entry.alpha.0 == entry.alpha.sorted());
    check(p, "gamma is sorted", entry.gamma.0 == entry.gamma.sorted());
    check(p, "alpha", dolgachev(&tf).sorted() == entry.alpha.sorted());
    check(p, "gamma", gabrielov(&tf).sorted() == entry.gamma.sorted());

    let ws = tf.canonical_weights();
    let dual_ws = tf.dual_weights();
    check(p, "a_w", gorenstein_parameter(&ws) == entry.a_w);
    check(p, "c_f", ws.content() == entry.c_f);
    check(p, "c_ft", dual_ws.content() == entry.c_ft);
    check(p, "mu_ft", milnor_number(&dual_ws) == Ok(entry.mu_ft));

    if let Some(pairs) = &entry.beta_pairs {
        if entry.a_w <= 0 {
            p.push("orbit pairs stored but a_w is not positive".to_string());
        } else {
            let computed = orbit_invariants(&entry.alpha, entry.a_w as u64);
            check(p, "betas", computed.map(|o| o.pairs).as_ref() == Ok(pairs));
        }
    }
    if let Some(pairs) = &entry.delta_pairs {
        check(p, "delta pair count", pairs.len() == 3);
        for (&(g, d), &gs) in pairs.iter().zip(&entry.gamma.sorted()) {
            check(p, "delta pair gamma component", g == gs);
            check(p, "delta offset range", (1..g).contains(&d));
        }
    }

    check(p, "phi_f", characteristic_function(&ws, &dolgachev(&tf)) == entry.phi_f);
    check(
        p,
        "phi_ft",
        characteristic_function(&dual_ws, &gabrielov(&tf)) == entry.phi_ft,
    );
    problems
}

impl FromStr for Atlas {
    type Err = AtlasError;

    fn from_str(text: &str) -> Result<Atlas, AtlasError> {
        let bad = |line: usize, msg: String| AtlasError::BadData(format!("line {line}: {msg}"));
        let mut entries = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('|').collect();
            let [name, family, f, ft, alpha, gamma, dual, a_w, c_f, c_ft, mu_ft, betas, deltas, phi_f, phi_ft, notes] =
                cols[..]
            else {
                return Err(bad(line_no, format!("expected 16 columns, got {}", cols.len())));
            };
            entries.push(AtlasEntry {
                name: name.to_string(),
                family: family.parse().map_err(|e| bad(line_no, e))?,
                f_text: f.to_string(),
                ft_text: ft.to_string(),
                alpha: parse_triple(alpha).map_err(|e| bad(line_no, e))?,
                gamma: parse_triple(gamma).map_err(|e| bad(line_no, e))?,
                dual: dual.to_string(),
                a_w: a_w
                    .parse()
                    .map_err(|_| bad(line_no, format!("bad a_w {a_w:?}")))?,
                c_f: c_f
                    .parse()
                    .map_err(|_| bad(line_no, format!("bad c_f {c_f:?}")))?,
                c_ft: c_ft
                    .parse()
                    .map_err(|_| bad(line_no, format!("bad c_ft {c_ft:?}")))?,
                mu_ft: mu_ft
                    .parse()
                    .map_err(|_| bad(line_no, format!("bad mu_ft {mu_ft:?}")))?,
                beta_pairs: parse_pairs(betas).map_err(|e| bad(line_no, e))?,
                delta_pairs: parse_pairs(deltas).map_err(|e| bad(line_no, e))?,
                phi_f: phi_f
                    .parse()
                    .map_err(|e| bad(line_no, format!("bad phi_f: {e}")))?,
                phi_ft: phi_ft
                    .parse()
                    .map_err(|e| bad(line_no, format!("bad phi_ft: {e}")))?,
                notes: if notes == "-" { String::new() } else { notes.to_string() },
            });
        }

        let mut atlas = Atlas {
            entries,
            by_name: BTreeMap::new(),
            class_to_name: BTreeMap::new(),
            class_to_dual_owner: BTreeMap::new(),
        };
        for (i, e) in atlas.entries.iter().enumerate() {
            if atlas.by_name.insert(e.name.clone(), i).is_some() {
                return Err(AtlasError::BadData(format!("duplicate entry {:?}", e.name)));
            }
            for (text, index) in [
                (&e.f_text, &mut atlas.class_to_name),
                (&e.ft_text, &mut atlas.class_to_dual_owner),
            ] {
                let p = parse_polynomial(text)
                    .map_err(|err| AtlasError::BadData(format!("{}: {err}", e.name)))?;
                let tf = classify(&p)
                    .map_err(|err| AtlasError::BadData(format!("{}: {err}", e.name)))?;
                let prev = index.insert((tf.type_tag, tf.params), e.name.clone());
                if prev.is_some_and(|p| p != e.name) {
                    return Err(AtlasError::BadData(format!(
                        "{}: classification collides with another entry",
                        e.name
                    )));
                }
            }
        }
        Ok(atlas)
    }
}

/// Parse `"a,b,c"` into a triple.
fn parse_triple(s: &str) -> Result<Triple, String> {
    let nums: Vec<u64> = s
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("bad triple {s:?}")))
        .collect::<Result<_, _>>()?;
    let [a, b, c] = nums[..] else {
        return Err(format!("triple {s:?} needs three entries"));
    };
    if a == 0 || b == 0 || c == 0 {
        return Err(format!("triple {s:?} has a zero entry"));
    }
    Ok(Triple::new([a, b, c]))
}

/// Parse `"-"` or `"a1,b1;a2,b2;…"` into optional pairs.
fn parse_pairs(s: &str) -> Result<Option<Vec<(u64, u64)>>, String> {
    if s == "-" {
        return Ok(None);
    }
    let mut pairs = Vec::new();
    for part in s.split(';') {
        let (a, b) = part
            .split_once(',')
            .ok_or_else(|| format!("bad pair {part:?} in {s:?}"))?;
        let a = a.trim().parse().map_err(|_| format!("bad pair {part:?}"))?;
        let b = b.trim().parse().map_err(|_| format!("bad pair {part:?}"))?;
        pairs.push((a, b));
    }
    Ok(Some(pairs))
}
