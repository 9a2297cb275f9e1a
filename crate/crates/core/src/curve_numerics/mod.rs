//! Genus, dimension and eigenspace bookkeeping for the curves and abelian
//! varieties attached to the conic bundle. Everything is derived from degree
//! inputs; nothing is a stored constant.

mod crosscheck;

pub use crosscheck::{
    evaluation_rank_deficiency, jacobian_ring_dimension, points_on_curve_z, points_on_surface,
};

use serde::{Deserialize, Serialize};

use crate::exactfield::Scalar;
use crate::forms::monomial::binomial;
use crate::forms::{Form, Matrix};
use crate::tau_geometry::{apply_tau, sym2_eigensplit, TauInstance};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumericsError {
    #[error("an unramified double cover of a rational curve is disconnected")]
    Disconnected,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Genus of a connected double cover of a genus-`g` curve with `r` branch points:
/// `2g' − 2 = 2(2g − 2) + r`.
pub fn hurwitz_double_cover(g: u32, r: u32) -> Result<u32, NumericsError> {
    if r % 2 == 1 {
        return Err(NumericsError::InvalidInput(format!("branch point count {r} must be even")));
    }
    if g == 0 && r == 0 {
        return Err(NumericsError::Disconnected);
    }
    let two_g_minus_2 = 2 * (2 * g as i64 - 2) + r as i64;
    if two_g_minus_2 < -2 {
        return Err(NumericsError::InvalidInput(format!("negative genus for g = {g}, r = {r}")));
    }
    Ok(((two_g_minus_2 + 2) / 2) as u32)
}

/// Genus `(d − 1)(d − 2) / 2` of a smooth plane curve of degree `d`.
pub fn plane_curve_genus(d: u32) -> Result<u32, NumericsError> {
    if d == 0 {
        return Err(NumericsError::InvalidInput("degree must be positive".into()));
    }
    let d = d as i64;
    Ok(((d - 1) * (d - 2) / 2) as u32)
}

/// Genus of a smooth complete-intersection curve in P^n:
/// `2g − 2 = (Π d_i)(Σ d_i − n − 1)`.
pub fn ci_curve_genus(degrees: &[u32], n: u32) -> Result<u32, NumericsError> {
    if n < 2 || degrees.len() != n as usize - 1 || degrees.contains(&0) {
        return Err(NumericsError::InvalidInput(format!(
            "a curve in P^{n} needs {} positive degrees, got {degrees:?}",
            n.saturating_sub(1)
        )));
    }
    let prod: i64 = degrees.iter().map(|&d| d as i64).product();
    let sum: i64 = degrees.iter().map(|&d| d as i64).sum();
    let two_g_minus_2 = prod * (sum - n as i64 - 1);
    if two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2 {
        return Err(NumericsError::InvalidInput(format!("2g - 2 = {two_g_minus_2} is not admissible")));
    }
    Ok(((two_g_minus_2 + 2) / 2) as u32)
}

/// `h^0(O_{P^n}(d))`, zero for negative twists.
pub fn h0_projective(n: u32, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    binomial(n as u64 + d as u64, n as u64)
}

/// `h^0(I(d))` for the complete intersection of the given degrees in P^n,
/// by the alternating sum over the Koszul resolution.
pub fn ideal_section_dimension(ci_degrees: &[u32], d: u32, n: u32) -> Result<u64, NumericsError> {
    if ci_degrees.is_empty() || ci_degrees.len() > n as usize || ci_degrees.contains(&0) {
        return Err(NumericsError::InvalidInput(format!("{ci_degrees:?} is not a complete intersection in P^{n}")));
    }
    let k = ci_degrees.len();
    let mut total: i64 = 0;
    for mask in 1u32..(1 << k) {
        let shift: i64 = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| ci_degrees[i] as i64).sum();
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        total += sign * h0_projective(n, d as i64 - shift) as i64;
    }
    Ok(total as u64)
}

/// The dimension count for `H^{0,1}` of the curve `Z = {Φ = F0 = F1 = 0}`:
/// quadrics on P^4, quadrics through `Z`, and the genus they leave over
/// (`ω_Z = O_Z(2)`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulLedger {
    pub h0_quadrics: u64,
    pub h0_ideal_quadrics: u64,
    pub h01: u64,
    /// `h01` equals the complete-intersection genus formula.
    pub consistent: bool,
}

pub fn koszul_h01_ledger() -> KoszulLedger {
    let h0_quadrics = h0_projective(4, 2);
    let h0_ideal_quadrics = ideal_section_dimension(&[3, 2, 2], 2, 4).expect("valid degrees");
    let h01 = h0_quadrics - h0_ideal_quadrics;
    let g = ci_curve_genus(&[3, 2, 2], 4).expect("valid degrees") as u64;
    KoszulLedger { h0_quadrics, h0_ideal_quadrics, h01, consistent: h01 == g }
}

/// τ-eigenspaces of `H^{0,1}(Z) ≅ H^0(O_Z(2))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobianSplit {
    pub plus: usize,
    pub minus: usize,
}

impl JacobianSplit {
    pub fn total(&self) -> usize {
        self.plus + self.minus
    }
}

/// Splits `H^0(O_Z(2))` for the curve cut by an invariant cubic and two
/// invariant quadrics: each eigenspace of quadrics loses the quadrics of the
/// ideal lying in it.
pub fn jacobian_tau_split_for(quadrics: &[Form]) -> JacobianSplit {
    let sym2 = sym2_eigensplit();
    let coords = |f: &Form| f.coeffs().to_vec();
    let mut plus_rows = Vec::new();
    let mut minus_rows = Vec::new();
    for f in quadrics {
        let t = apply_tau(f);
        let half = Scalar::rational(1, 2).expect("nonzero");
        plus_rows.push(coords(&f.add(&t).scale(&half)));
        minus_rows.push(coords(&f.sub(&t).scale(&half)));
    }
    let rank = |rows: Vec<Vec<Scalar>>| if rows.is_empty() { 0 } else { Matrix::from_rows(rows).rank() };
    JacobianSplit {
        plus: sym2.invariant_total - rank(plus_rows),
        minus: sym2.anti_invariant_total - rank(minus_rows),
    }
}

/// The split for the pencil `x0^2 + x2^2 + x3^2 − x4^2`, `x1^2 + x2^2 − x3^2 + x4^2`.
pub fn jacobian_tau_split() -> JacobianSplit {
    let f0 = Form::parse(5, "x0^2 + x2^2 + x3^2 - x4^2").expect("literal");
    let f1 = Form::parse(5, "x1^2 + x2^2 - x3^2 + x4^2").expect("literal");
    jacobian_tau_split_for(&[f0, f1])
}

/// Genera of the discriminant components and their double covers, the Prym
/// dimensions and the related Hodge numbers.
///
/// `dim_P2` is the dimension of the Prym of the conic's double cover; the Prym
/// of the whole discriminant has dimension `dim_P = dim_P2 + dim_P3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusLedger {
    #[serde(rename = "g_C2")]
    pub g_c2: u32,
    #[serde(rename = "g_C3")]
    pub g_c3: u32,
    pub r: u32,
    #[serde(rename = "g_C2cover")]
    pub g_c2_cover: u32,
    #[serde(rename = "g_C3cover")]
    pub g_c3_cover: u32,
    #[serde(rename = "dim_P2")]
    pub dim_p2: u32,
    #[serde(rename = "dim_P3")]
    pub dim_p3: u32,
    #[serde(rename = "dim_P")]
    pub dim_p: u32,
    pub h21_cubic: u32,
    pub isogeny_degree_log_bound: u32,
    pub isogeny_degree_bound: u64,
    #[serde(rename = "g_Z")]
    pub g_z: u32,
    #[serde(rename = "h01_Z_plus")]
    pub h01_z_plus: u32,
    #[serde(rename = "h01_Z_minus")]
    pub h01_z_minus: u32,
}

impl GenusLedger {
    /// Named invariants and whether each holds.
    pub fn invariants(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("g_C2cover = 2", self.g_c2_cover == 2),
            ("g_C3cover = 4", self.g_c3_cover == 4),
            ("dim_P2 + dim_P3 = h21_cubic", self.dim_p2 + self.dim_p3 == self.h21_cubic),
            ("dim_P = dim_P2 + dim_P3", self.dim_p == self.dim_p2 + self.dim_p3),
            ("g_Z = h01_Z_plus + h01_Z_minus", self.g_z == self.h01_z_plus + self.h01_z_minus),
            ("isogeny bound = 2^log", self.isogeny_degree_bound == 1u64 << self.isogeny_degree_log_bound),
        ]
    }

    pub fn holds(&self) -> bool {
        self.invariants().iter().all(|(_, ok)| *ok)
    }
}

/// Builds the ledger from degrees: a conic and a cubic meeting in `2 · 3`
/// branch points, Hurwitz for both covers, `h^{2,1}` of a smooth cubic
/// threefold from its Jacobian ring, and the curve `Z` of type `(3, 2, 2)`.
pub fn prym_dimension_ledger() -> GenusLedger {
    let g_c2 = plane_curve_genus(2).expect("positive degree");
    let g_c3 = plane_curve_genus(3).expect("positive degree");
    let r = 2 * 3;
    let g_c2_cover = hurwitz_double_cover(g_c2, r).expect("ramified");
    let g_c3_cover = hurwitz_double_cover(g_c3, r).expect("ramified");
    let dim_p2 = g_c2_cover - g_c2;
    let dim_p3 = g_c3_cover - g_c3;
    let h21_cubic = jacobian_ring_dimension(&TauInstance::canonical().cubic(), 1) as u32;
    let split = jacobian_tau_split();
    GenusLedger {
        g_c2,
        g_c3,
        r,
        g_c2_cover,
        g_c3_cover,
        dim_p2,
        dim_p3,
        dim_p: dim_p2 + dim_p3,
        h21_cubic,
        isogeny_degree_log_bound: r,
        isogeny_degree_bound: 1u64 << r,
        g_z: ci_curve_genus(&[3, 2, 2], 4).expect("valid degrees"),
        h01_z_plus: split.plus as u32,
        h01_z_minus: split.minus as u32,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hurwitz_edges() {
        assert_eq!(hurwitz_double_cover(0, 0), Err(NumericsError::Disconnected));
        assert!(hurwitz_double_cover(1, 3).is_err());
        assert_eq!(hurwitz_double_cover(0, 2), Ok(0));
        assert_eq!(hurwitz_double_cover(2, 0), Ok(3));
    }

    #[test]
    fn koszul_terms() {
        assert_eq!(h0_projective(4, -1), 0);
        assert_eq!(h0_projective(4, 0), 1);
        assert_eq!(h0_projective(2, 3), 10);
        // a single hypersurface: only the form's own multiples
        assert_eq!(ideal_section_dimension(&[3], 4, 2).unwrap(), 3);
        assert!(ideal_section_dimension(&[], 2, 4).is_err());
    }
}
