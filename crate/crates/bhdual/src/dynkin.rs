//! Coxeter–Dynkin graphs `T(γ₁,γ₂,γ₃)` and their bimodal extensions.
//!
//! The graph has three arms of lengths `γᵢ−1` meeting a central vertex,
//! plus a top vertex joined to the center by a double edge and to each
//! innermost arm vertex by a solid edge.  Vertices are numbered arm by
//! arm (outermost first), then center, then top, so `n = γ₁+γ₂+γ₃−1`.
//! The associated symmetric Gram matrix has `−2` on the diagonal, `+1`
//! on solid edges, and `−2` on the double edge (configurable to `+2`).
//!
//! Under the default convention the center and top rows of the Gram
//! matrix coincide, so its full determinant is 0; the meaningful
//! discriminant is that of the top-deleted principal minor, which equals
//! `(−1)^{γ₁+γ₂+γ₃−1}·Δ(γ₁,γ₂,γ₃)`.  Both quantities are exposed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::invariants::Triple;

/// An undirected graph with `−2` self-intersections, solid (`w = 1`) and
/// double (`w = −2` or `+2`) edges, and the arm-major vertex numbering
/// described at [`t_graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinGraph {
    /// Vertex count; vertices are numbered `1..=n`.
    pub n: usize,
    /// Edges `(i, j, w)` with `i < j`, sorted, no duplicates.
    pub edges: Vec<(usize, usize, i64)>,
    /// The top vertex (the double-edge endpoint that is not the center).
    pub top: usize,
    /// Arm vertices only: vertex → (arm 1..=3, 1-based position from the
    /// outside).  Center, top, and extension vertices are absent.
    pub arm_index: BTreeMap<usize, (u8, u64)>,
}

/// Errors from graph surgery.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DynkinError {
    #[error("no vertex at position {position} from the outside of arm {arm} (γ = {gamma}, δ = {delta})")]
    BadArmTarget {
        arm: u8,
        gamma: u64,
        delta: u64,
        position: u64,
    },
}

/// Build the graph `T(γ₁,γ₂,γ₃)`.
///
/// Numbering: arm 1 is `1..=γ₁−1` outermost first, arm 2 continues at
/// `γ₁`, arm 3 at `γ₁+γ₂−1`; the center is `γ₁+γ₂+γ₃−2` and the top is
/// `γ₁+γ₂+γ₃−1`.  Arms with `γᵢ = 1` are empty.  Each arm is a solid
/// chain, its innermost vertex joined to the center; the top is joined
/// to the center by the double edge and to each innermost arm vertex by
/// a solid edge.
pub fn t_graph(gamma: &Triple) -> DynkinGraph {
    let [g1, g2, g3] = gamma.0;
    let n = usize::try_from(g1 + g2 + g3 - 1).expect("vertex count fits usize");
    let center = n - 1;
    let top = n;
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    let mut arm_index = BTreeMap::new();
    let mut next = 1usize;
    for (arm, &g) in [g1, g2, g3].iter().enumerate() {
        let len = usize::try_from(g - 1).unwrap();
        if len == 0 {
            continue;
        }
        let first = next;
        for pos in 0..len {
            arm_index.insert(first + pos, (arm as u8 + 1, pos as u64 + 1));
            if pos + 1 < len {
                edges.push((first + pos, first + pos + 1, 1));
            }
        }
        let innermost = first + len - 1;
        edges.push((innermost, center, 1));
        edges.push((innermost, top, 1));
        next = first + len;
    }
    edges.push((center, top, -2));
    edges.sort_unstable();
    DynkinGraph {
        n,
        edges,
        top,
        arm_index,
    }
}

impl DynkinGraph {
    /// Replace the double-edge weight (every non-solid edge) by `w`,
    /// which must be `−2` (the default convention) or `+2`.
    pub fn with_double_weight(mut self, w: i64) -> DynkinGraph {
        assert!(w == -2 || w == 2, "double-edge weight must be ±2");
        for edge in &mut self.edges {
            if edge.2 != 1 {
                edge.2 = w;
            }
        }
        self
    }

    /// The symmetric Gram matrix: `−2` diagonal, edge weights off it.
    pub fn gram_matrix(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; self.n]; self.n];
        for i in 0..self.n {
            a[i][i] = -2;
        }
        for &(i, j, w) in &self.edges {
            a[i - 1][j - 1] = w;
            a[j - 1][i - 1] = w;
        }
        a
    }

    /// Exact determinant of the full Gram matrix.  Zero for every pure
    /// T-graph under the default convention (the center and top rows
    /// coincide).
    pub fn gram_determinant(&self) -> i64 {
        det_exact(to_bigint(&self.gram_matrix()))
    }

    /// Exact determinant of the principal minor that deletes the top
    /// vertex.  For `T(γ)` with all `γᵢ ≥ 2` this is the discriminant
    /// `(−1)^{γ₁+γ₂+γ₃−1}·Δ(γ)` of the bilinear form.
    pub fn reduced_discriminant(&self) -> i64 {
        let a = self.gram_matrix();
        let keep: Vec<usize> = (0..self.n).filter(|&i| i + 1 != self.top).collect();
        let minor: Vec<Vec<i64>> = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| a[i][j]).collect())
            .collect();
        det_exact(to_bigint(&minor))
    }

    /// `n − rank(A)` over the rationals: the dimension of the radical.
    pub fn corank(&self) -> usize {
        self.n - rank_rational(&self.gram_matrix())
    }

    /// Append the bimodal chain: `a ∈ {2,3,5}` new solid-chain vertices
    /// `n+1..n+a` with `n+1` joined to the top vertex, and the designated
    /// chain vertex (`n+2` if `a = 2`, else `n+3`) joined, on every arm
    /// with `δᵢ ≠ γᵢ−1`, to the vertex `γᵢ−δᵢ−1` positions from the
    /// outside.  `pairs[i] = (γᵢ, δᵢ)` must satisfy `δᵢ < γᵢ`.
    pub fn extend_bimodal(
        &self,
        a: u64,
        pairs: &[(u64, u64); 3],
    ) -> Result<DynkinGraph, DynkinError> {
        assert!(a == 2 || a == 3 || a == 5, "chain length must be 2, 3, or 5");
        let a = usize::try_from(a).unwrap();
        let mut out = self.clone();
        out.n += a;
        out.edges.push((self.top, self.n + 1, 1));
        for k in 1..a {
            out.edges.push((self.n + k, self.n + k + 1, 1));
        }
        let designated = if a == 2 { self.n + 2 } else { self.n + 3 };
        for (idx, &(gamma, delta)) in pairs.iter().enumerate() {
            let arm = idx as u8 + 1;
            if delta + 1 == gamma {
                continue;
            }
            let err = DynkinError::BadArmTarget {
                arm,
                gamma,
                delta,
                position: gamma.saturating_sub(delta + 1),
            };
            if delta >= gamma {
                return Err(err);
            }
            let position = gamma - delta - 1;
            let target = self
                .arm_index
                .iter()
                .find(|&(_, &(ai, pos))| ai == arm && pos == position)
                .map(|(&v, _)| v)
                .ok_or(err)?;
            out.edges.push((target.min(designated), target.max(designated), 1));
        }
        out.edges.sort_unstable();
        Ok(out)
    }

    /// Deterministic DOT rendering: nodes in numeric order, sorted
    /// edges, double edges drawn with `penwidth=3`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in 1..=self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for &(i, j, w) in &self.edges {
            if w == 1 {
                out.push_str(&format!("  {i} -- {j};\n"));
            } else {
                out.push_str(&format!("  {i} -- {j} [penwidth=3];\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for DynkinGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DynkinGraph", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges)?;
        s.end()
    }
}

fn to_bigint(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Fraction-free Bareiss determinant with row pivoting; exact.
fn det_exact(mut m: Vec<Vec<BigInt>>) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = if sign < 0 { -m[n - 1][n - 1].clone() } else { m[n - 1][n - 1].clone() };
    i64::try_from(det).expect("determinant fits i64")
}

/// Rank over ℚ by rational Gaussian elimination; exact.
fn rank_rational(m: &[Vec<i64>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|&v| BigRational::from(BigInt::from(v))).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].clone();
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &inv;
            for c in col..cols {
                let delta = &factor * &a[rank][c];
                a[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
