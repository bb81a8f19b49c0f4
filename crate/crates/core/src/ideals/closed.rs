//! Closed-form graded dimensions of edge and vertex ideals.

use crate::error::{Error, Result};
use crate::ratlinalg::c2;

fn check_orders(r: u32, s: u32) -> Result<()> {
    if r > s {
        return Err(Error::InvalidArgument(format!("r = {r} exceeds s = {s}")));
    }
    Ok(())
}

/// `dim J(τ)_d` for an interior edge whose endpoints both carry order `s`.
pub fn dim_edge_ideal_closed(r: u32, s: u32, d: u32) -> Result<i64> {
    check_orders(r, s)?;
    if d <= s {
        return Ok(0);
    }
    let (r, s, d) = (r as i64, s as i64, d as i64);
    Ok((d - s) * (d - s) - c2(d - 2 * s + r))
}

/// `dim J(τ)_d` when only one endpoint carries order `s` and the other `r`.
pub fn dim_edge_ideal_boundary_closed(r: u32, s: u32, d: u32) -> Result<i64> {
    check_orders(r, s)?;
    let (r, s, d) = (r as i64, s as i64, d as i64);
    Ok((s - r + 1) * c2(d - s + 1) - (s - r) * c2(d - s))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SocleParams {
    pub omega: i64,
    pub a: i64,
    pub b: i64,
}

/// `Ω = ⌊tr/(t−1)⌋ + 1`, `a = t(r+1) + (1−t)Ω`, `b = t − a − 1`.
pub fn vertex_socle_params(t: u32, r: u32) -> Result<SocleParams> {
    if t < 2 {
        return Err(Error::InvalidArgument(format!("need at least two slopes, got {t}")));
    }
    let (t, r) = (t as i64, r as i64);
    let omega = t * r / (t - 1) + 1;
    let a = t * (r + 1) + (1 - t) * omega;
    Ok(SocleParams { omega, a, b: t - a - 1 })
}

/// `dim J(γ)_d` for `J(γ) = Σ ⟨ℓ_τ^{r+1}⟩ ∩ m̂_γ^{s+1}` over `t` distinct slopes.
pub fn dim_vertex_star_ideal_closed(t: u32, r: u32, s: u32, d: u32) -> Result<i64> {
    check_orders(r, s)?;
    let SocleParams { omega, a, b } = vertex_socle_params(t, r)?;
    if d <= s {
        return Ok(0);
    }
    let (t, r, s, d) = (t as i64, r as i64, s as i64, d as i64);
    let total = c2(d + 2);
    let quotient = if s < omega - 1 {
        total - t * c2(d - r + 1) + b * c2(d + 2 - omega) + a * c2(d + 1 - omega) + t * c2(s - r + 1)
    } else {
        c2(s + 2)
    };
    Ok(total - quotient)
}
