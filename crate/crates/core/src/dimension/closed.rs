//! Closed-form dimensions for vertex stars, the Argyris setting and Powell–Sabin splits.

use crate::error::{Error, Result};
use crate::ideals::{dim_vertex_star_ideal_closed, vertex_socle_params};
use crate::mesh::Mesh;
#[cfg(test)]
use crate::mesh::Point;
use crate::ratlinalg::{binom0, c2};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarProfile {
    pub center: usize,
    pub t: u32,
    pub f1_interior: usize,
    pub omega: i64,
    pub a: i64,
    pub b: i64,
}

/// Profile of a star: one interior vertex contained in every triangle.
pub fn star_profile(star: &Mesh, r: u32) -> Result<StarProfile> {
    let interior: Vec<usize> = star.interior_vertices().collect();
    let &[center] = interior.as_slice() else {
        return Err(Error::NotAStar(format!("{} interior vertices", interior.len())));
    };
    if star.triangles().iter().any(|t| !t.contains(&center)) {
        return Err(Error::NotAStar(format!("a triangle misses vertex {center}")));
    }
    let t = star.distinct_slopes_at(center) as u32;
    let p = vertex_socle_params(t, r)?;
    Ok(StarProfile {
        center,
        t,
        f1_interior: star.face_counts().f1_interior,
        omega: p.omega,
        a: p.a,
        b: p.b,
    })
}

/// `dim S_d^{r,s}` on a star with supersmoothness `s` at the center only.
pub fn vertex_star_dim(star: &Mesh, r: u32, s: u32, d: u32) -> Result<i64> {
    let p = star_profile(star, r)?;
    let f1 = p.f1_interior as i64;
    let (ri, si, di) = (r as i64, s as i64, d as i64);
    let vertex = dim_vertex_star_ideal_closed(p.t, r, s, d)?;
    Ok(c2(di + 2) + f1 * (si - ri + 1) * c2(di - si + 1) - f1 * (si - ri) * c2(di - si) - vertex)
}

/// Dimension of `C^r` splines of degree `d` on a star.
pub fn schumaker_dim(star: &Mesh, r: u32, d: u32) -> Result<i64> {
    let p = star_profile(star, r)?;
    let d = d as i64;
    Ok(c2(d + 2)
        + (p.f1_interior as i64 - p.t as i64) * c2(d - r as i64 + 1)
        + p.b * c2(d + 2 - p.omega)
        + p.a * c2(d - p.omega + 1))
}

/// `dim S_{4r+1}^{r,2r}` on any triangulated disk.
pub fn argyris_dim(m: &Mesh, r: u32) -> i64 {
    let c = m.face_counts();
    let r = r as i64;
    c2(2 * r + 2) * c.f0 as i64 + c2(r + 1) * c.f1 as i64 + c2(r) * c.f2 as i64
}

/// Supersmoothness order that `C^r` splines on a star have automatically at
/// the center, with whether the star is generic (one edge per slope).
pub fn intrinsic_supersmoothness_order(star: &Mesh, r: u32) -> Result<(u32, bool)> {
    let p = star_profile(star, r)?;
    let generic = p.f1_interior == p.t as usize;
    Ok(((r + 1) / (p.t - 1) + r, generic))
}

/// Whether imposing order `s` at the center leaves the `C^r` space unchanged.
pub fn is_degenerate(star: &Mesh, r: u32, s: u32) -> Result<bool> {
    Ok(schumaker_dim(star, r, s)? == c2(s as i64 + 2))
}

/// `dim J(B_τ)_d` at a split point on an interior edge of a Powell–Sabin split,
/// for `d ≥ 2s − r`.
pub fn ps_edge_point_ideal_dim(r: u32, s: u32, d: u32) -> i64 {
    let (r, s, d) = (r as i64, s as i64, d as i64);
    2 * (s - r + 1) * c2(d - s + 1) - (2 * (s - r) + 1) * c2(d - s) - c2(d - s - r) + c2(d - 2 * s + r)
}

/// Dimension on the Powell–Sabin split of `m` with its standard smoothness,
/// valid for `s ≥ max(r, 2r−1)` and `d ≥ 2s − r + 1`.
pub fn ps_dim_general(m: &Mesh, r: u32, s: u32, d: u32) -> Result<i64> {
    if s < r || s + 1 < 2 * r {
        return Err(Error::OutOfRange(format!("need s ≥ max(r, 2r−1), got r={r} s={s}")));
    }
    if d + r < 2 * s + 1 {
        return Err(Error::OutOfRange(format!("need d ≥ 2s−r+1 = {}, got {d}", 2 * s + 1 - r)));
    }
    let c = m.face_counts();
    let (f0i, f1i, f2) = (c.f0_interior as i64, c.f1_interior as i64, c.f2 as i64);
    let (ri, si, di) = (r as i64, s as i64, d as i64);
    let full = c2(di + 2);
    Ok(full
        + 3 * f2 * c2(di - si + 1)
        + 3 * f2 * ((di - si) * (di - si) - c2(di - 2 * si + ri))
        + 2 * f1i * ((si - ri + 1) * c2(di - si + 1) - (si - ri) * c2(di - si))
        - (f0i + f2) * (full - c2(si + 2))
        - f1i * ps_edge_point_ideal_dim(r, s, d))
}

/// `dim S_{3r−1}^{r,2r−1}` on a Powell–Sabin split of `m`.
pub fn speleers_dim(m: &Mesh, r: u32) -> i64 {
    let c = m.face_counts();
    let r = r as i64;
    r * (r - 1) / 2 * c.f2 as i64 + r * (2 * r + 1) * c.f0 as i64
}

pub(crate) fn full_space(d: u32) -> i64 {
    binom0(d as i64 + 2, 2)
}
