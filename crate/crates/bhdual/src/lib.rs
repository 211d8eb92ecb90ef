//! Exact classification and strange duality of invertible polynomials in
//! three variables.
//!
//! An *invertible polynomial* is a weighted-homogeneous sum of exactly three
//! monomials in `x, y, z` whose exponent matrix is nonsingular and which has
//! an isolated critical point at the origin. Every such polynomial reduces,
//! after permuting variables, to one of five normal-form types (Fermat,
//! chain, and loop combinations). This crate classifies them exactly,
//! computes the invariants on both sides of Arnold's strange duality —
//! Dolgachev and Gabrielov numbers, canonical weight systems, Poincaré
//! series, characteristic functions and their Saito duals, monodromy
//! eigenvalues, Coxeter–Dynkin graphs — and mechanically verifies that the
//! Berglund–Hübsch transpose `f ↦ f^t` interchanges the two sides.
//!
//! All arithmetic is exact: rational coefficients, big-integer determinants,
//! and formal cyclotomic products. No floating point appears anywhere.

pub mod atlas;
pub mod cli;
pub mod dynkin;
pub mod invariants;
pub mod invertible;
pub mod poly;
pub mod series;
pub mod tables;
pub mod verify;
#[cfg(test)]
pub(crate) mod test_util;

pub use atlas::{check_entry, Atlas, AtlasEntry, AtlasError, Family};
pub use dynkin::{t_graph, DynkinError, DynkinGraph};
pub use invariants::{
    cusp_transform, delta, dolgachev, gabrielov, gorenstein_parameter, milnor_number,
    orbifold_euler, orbit_invariants, InvariantError, OrbitInvariants, Triple,
};
pub use invertible::{classify, transpose, ClassifyError, Perm, TypeTag, TypedForm, WeightSystem};
pub use poly::{parse_polynomial, Monomial, Polynomial, Substitution, Var};
pub use series::{
    as_polynomial, characteristic_function, eig_mult, expand, milnor_algebra_oracle,
    monodromy_charpoly, poincare_series, power_transform, saito_dual, CycloProduct, EigMult,
    SeriesError,
};
pub use tables::{Table, TableKind};
pub use verify::{
    check_form, enumerate_forms, verify_all, CheckConfig, FormRecord, VerifyReport,
};
