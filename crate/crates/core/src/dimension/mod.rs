//! Dimensions of superspline spaces: the exact kernel computation, the
//! homological assembly, lower and upper bounds, and closed forms.

mod closed;
mod complex;

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

pub use closed::{
    argyris_dim, intrinsic_supersmoothness_order, is_degenerate, ps_dim_general, ps_edge_point_ideal_dim,
    schumaker_dim, speleers_dim, star_profile, vertex_star_dim, StarProfile,
};
pub use complex::IdealComplex;

use crate::error::{Error, Result};
use crate::ideals::{dim_edge_ideal_closed, dim_vertex_star_ideal_closed};
use crate::mesh::{Mesh, SmoothnessSpec};
use closed::full_space;
use complex::require_disk;

/// How the `exact` column was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExactMethod {
    Oracle,
    Formula,
}

impl fmt::Display for ExactMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExactMethod::Oracle => "oracle",
            ExactMethod::Formula => "formula",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub d: u32,
    pub term_polys: i64,
    pub term_edges: i64,
    pub term_vertices_full: i64,
    pub term_vertices_bar: i64,
    pub term_vertices_tilde: i64,
    pub h0: i64,
    pub lb52: i64,
    pub lb51: i64,
    pub ub53: i64,
    pub exact: i64,
    pub method: ExactMethod,
}

impl DimensionReport {
    /// Violated report invariants, described; empty when all hold.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !(self.lb52 <= self.lb51 && self.lb51 <= self.exact && self.exact <= self.ub53) {
            out.push(format!(
                "d={}: expected lb52 ≤ lb51 ≤ exact ≤ ub53, got {} {} {} {}",
                self.d, self.lb52, self.lb51, self.exact, self.ub53
            ));
        }
        let assembled = full_space(self.d) + self.term_edges - self.term_vertices_full + self.h0;
        if assembled != self.exact {
            out.push(format!(
                "d={}: Euler assembly gives {assembled}, kernel gives {}",
                self.d, self.exact
            ));
        }
        if self.h0 < 0 {
            out.push(format!("d={}: negative homology dimension", self.d));
        }
        out
    }

    pub fn check(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Inconsistency(v.join("; ")))
        }
    }
}

pub fn exact_dimension(m: &Mesh, spec: &SmoothnessSpec, d: u32) -> Result<i64> {
    require_disk(m)?;
    IdealComplex::new(m, spec)?.spline_dimension(d)
}

pub fn h0_dimension(m: &Mesh, spec: &SmoothnessSpec, d: u32) -> Result<i64> {
    require_disk(m)?;
    Ok(IdealComplex::new(m, spec)?.h0_dimension(d))
}

/// `C(d+2,2) + Σ dim J(τ)_d − Σ dim J(γ)_d`, floored at `C(d+2,2)`.
pub fn lower_bound_51(m: &Mesh, spec: &SmoothnessSpec, d: u32) -> Result<i64> {
    require_disk(m)?;
    let cx = IdealComplex::new(m, spec)?;
    Ok(floored(d, cx.edge_term(d) - cx.full_vertex_term(d)))
}

/// Bound with the vertex ideals that ignore the far endpoints' supersmoothness.
/// Uses the closed forms when smoothness is uniform. Like the other lower
/// bound it never drops below the global polynomials.
pub fn lower_bound_52(m: &Mesh, spec: &SmoothnessSpec, d: u32) -> Result<i64> {
    require_disk(m)?;
    if let Some((r, s)) = spec.uniform_values() {
        let edges = m.face_counts().f1_interior as i64 * dim_edge_ideal_closed(r, s, d)?;
        let mut vertices = 0;
        for v in m.interior_vertices() {
            vertices += dim_vertex_star_ideal_closed(m.distinct_slopes_at(v) as u32, r, s, d)?;
        }
        return Ok(floored(d, edges - vertices));
    }
    let cx = IdealComplex::new(m, spec)?;
    Ok(floored(d, cx.edge_term(d) - cx.bar_vertex_term(d)))
}

pub fn upper_bound_53(m: &Mesh, spec: &SmoothnessSpec, d: u32) -> Result<i64> {
    require_disk(m)?;
    let mut cx = IdealComplex::new(m, spec)?;
    Ok(full_space(d) + cx.edge_term(d) - cx.tilde_vertex_term(d)?)
}

/// Every column of the report for one degree, computed along independent paths.
pub fn euler_assembly(m: &Mesh, spec: &SmoothnessSpec, d: u32) -> Result<DimensionReport> {
    require_disk(m)?;
    let mut cx = IdealComplex::new(m, spec)?;
    assemble(&mut cx, d)
}

fn assemble(cx: &mut IdealComplex<'_>, d: u32) -> Result<DimensionReport> {
    let full = full_space(d);
    let term_edges = cx.edge_term(d);
    let term_vertices_full = cx.full_vertex_term(d);
    let term_vertices_bar = cx.bar_vertex_term(d);
    let term_vertices_tilde = cx.tilde_vertex_term(d)?;
    Ok(DimensionReport {
        d,
        term_polys: cx.mesh.num_triangles() as i64 * full,
        term_edges,
        term_vertices_full,
        term_vertices_bar,
        term_vertices_tilde,
        h0: cx.h0_dimension(d),
        lb52: floored(d, term_edges - term_vertices_bar),
        lb51: floored(d, term_edges - term_vertices_full),
        ub53: full + term_edges - term_vertices_tilde,
        exact: cx.spline_dimension(d)?,
        method: ExactMethod::Oracle,
    })
}

/// `C(d+2,2) + excess`, but never below `C(d+2,2)`.
fn floored(d: u32, excess: i64) -> i64 {
    full_space(d) + excess.max(0)
}

/// Reports for a degree range, sharing one set of ideals.
pub fn report_range(m: &Mesh, spec: &SmoothnessSpec, degrees: impl IntoIterator<Item = u32>) -> Result<Vec<DimensionReport>> {
    require_disk(m)?;
    let cache = report_cache();
    let key = (m.fingerprint(), spec.fingerprint());
    let mut cx: Option<IdealComplex<'_>> = None;
    let mut out = Vec::new();
    for d in degrees {
        if let Some(hit) = cache.read().expect("report cache").get(&(key.0, key.1, d)) {
            out.push(hit.clone());
            continue;
        }
        if cx.is_none() {
            cx = Some(IdealComplex::new(m, spec)?);
        }
        let report = assemble(cx.as_mut().expect("complex built"), d)?;
        cache.write().expect("report cache").insert((key.0, key.1, d), report.clone());
        out.push(report);
    }
    Ok(out)
}

type ReportKey = (u64, u64, u32);

fn report_cache() -> &'static RwLock<HashMap<ReportKey, DimensionReport>> {
    static CACHE: OnceLock<RwLock<HashMap<ReportKey, DimensionReport>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}
