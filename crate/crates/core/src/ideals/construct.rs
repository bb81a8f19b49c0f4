use super::GradedIdeal;
use crate::error::{Error, Result};
use crate::mesh::{Mesh, SmoothnessSpec};
use crate::polyring::{
    determinant3, edge_linear_form, vertex_complement_form, HomogeneousPolynomial, LinearForm3, Point,
};
use crate::ratlinalg::Rational;

/// Data for `J(τ) = ⟨ℓ_τ^{r+1}⟩ ∩ m̂_γ^{s_γ+1} ∩ m̂_{γ'}^{s_γ'+1}` in an adapted frame:
/// `ell_gamma` vanishes at `γ`, `ell_gamma_prime` at `γ'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIdealSpec {
    pub ell_tau: LinearForm3,
    pub ell_gamma: LinearForm3,
    pub ell_gamma_prime: LinearForm3,
    pub r: u32,
    pub s_gamma: u32,
    pub s_gamma_prime: u32,
}

impl EdgeIdealSpec {
    /// Frame for interior edge `e` of `mesh` seen from its endpoint `near`.
    pub fn for_edge(mesh: &Mesh, spec: &SmoothnessSpec, e: usize, near: usize) -> Result<Self> {
        let (a, b) = mesh.edges()[e];
        if near != a && near != b {
            return Err(Error::InvalidArgument(format!("vertex {near} is not on edge [{a},{b}]")));
        }
        if !mesh.is_interior_edge(e) {
            return Err(Error::InvalidArgument(format!("edge [{a},{b}] is on the boundary")));
        }
        let far = if near == a { b } else { a };
        let (p, q) = (mesh.vertex(near), mesh.vertex(far));
        let ell_tau = edge_linear_form(p, q)?;
        Ok(EdgeIdealSpec {
            ell_gamma: vertex_complement_form(&ell_tau, p)?,
            ell_gamma_prime: vertex_complement_form(&ell_tau, q)?,
            ell_tau,
            r: spec.edge_r(mesh, e),
            s_gamma: spec.vertex_order_on_edge(mesh, e, near),
            s_gamma_prime: spec.vertex_order_on_edge(mesh, e, far),
        })
    }

    /// Exponents `(m, i, j)` of the minimal monomial generators `ℓ_τ^m ℓ_{τ,γ}^i ℓ_{τ,γ'}^j`.
    pub fn frame_exponents(&self) -> Vec<[u32; 3]> {
        let (r, s1, s2) = (self.r, self.s_gamma, self.s_gamma_prime);
        let mut all = Vec::new();
        for i in 0..=s1.saturating_sub(r) {
            for j in 0..=s2.saturating_sub(r) {
                let m = (r + 1).max(s1 + 1 - i).max(s2 + 1 - j);
                all.push([m, i, j]);
            }
        }
        let divides = |a: &[u32; 3], b: &[u32; 3]| a.iter().zip(b).all(|(x, y)| x <= y);
        let mut minimal: Vec<[u32; 3]> = all
            .iter()
            .filter(|g| !all.iter().any(|h| h != *g && divides(h, g)))
            .copied()
            .collect();
        minimal.sort_unstable_by(|a, b| b.cmp(a));
        minimal.dedup();
        minimal
    }
}

pub fn edge_ideal(spec: &EdgeIdealSpec) -> Result<GradedIdeal> {
    if determinant3([&spec.ell_tau, &spec.ell_gamma, &spec.ell_gamma_prime]).is_zero() {
        return Err(Error::InvalidArgument("edge frame forms are dependent".into()));
    }
    if spec.r > spec.s_gamma || spec.r > spec.s_gamma_prime {
        return Err(Error::InvalidArgument(format!(
            "r = {} exceeds a vertex order ({}, {})",
            spec.r, spec.s_gamma, spec.s_gamma_prime
        )));
    }
    let u = spec.ell_tau.to_polynomial();
    let v = spec.ell_gamma.to_polynomial();
    let w = spec.ell_gamma_prime.to_polynomial();
    let gens = spec
        .frame_exponents()
        .into_iter()
        .map(|[m, i, j]| u.pow(m).mul(&v.pow(i)).mul(&w.pow(j)))
        .collect();
    GradedIdeal::new(gens)
}

/// `m̂_p^k`, generated by `ℓ₁^i ℓ₂^{k−i}` with `ℓ₁ = x − p.x·z`, `ℓ₂ = y − p.y·z`.
pub fn point_power_ideal(p: &Point, k: u32) -> GradedIdeal {
    let l1 = LinearForm3::new(Rational::one(), Rational::zero(), -&p.x)
        .expect("nonzero form")
        .to_polynomial();
    let l2 = LinearForm3::new(Rational::zero(), Rational::one(), -&p.y)
        .expect("nonzero form")
        .to_polynomial();
    let gens: Vec<HomogeneousPolynomial> = (0..=k).map(|i| l1.pow(i).mul(&l2.pow(k - i))).collect();
    GradedIdeal::new(gens).expect("nonzero generators")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexIdealKind {
    /// Sum of `J(τ)` over all edges at the vertex.
    Full,
    /// Sum of `⟨ℓ_τ^{r_τ+1}⟩ ∩ m̂_γ^{s_γ+1}`: far endpoints impose nothing.
    Bar,
    /// Sum of `J(τ)` over edges whose far endpoint is on the boundary or earlier in an ordering.
    Tilde,
}

/// Vertex ideal at interior vertex `v`. `ordering` is required for [`VertexIdealKind::Tilde`].
pub fn vertex_ideal(
    mesh: &Mesh,
    spec: &SmoothnessSpec,
    v: usize,
    kind: VertexIdealKind,
    ordering: Option<&[usize]>,
) -> Result<GradedIdeal> {
    if v >= mesh.num_vertices() {
        return Err(Error::VertexOutOfRange {
            index: v,
            count: mesh.num_vertices(),
        });
    }
    if !mesh.is_interior_vertex(v) {
        return Err(Error::NotInterior(v));
    }
    let position = match (kind, ordering) {
        (VertexIdealKind::Tilde, None) => {
            return Err(Error::InvalidArgument("tilde vertex ideal needs an ordering".into()))
        }
        (VertexIdealKind::Tilde, Some(order)) => {
            let mut pos = vec![usize::MAX; mesh.num_vertices()];
            for (i, &w) in order.iter().enumerate() {
                pos[w] = i;
            }
            Some(pos)
        }
        _ => None,
    };
    let mut ideal = GradedIdeal::zero();
    for (far, e) in mesh.neighbors(v) {
        if let Some(pos) = &position {
            if !(mesh.is_boundary_vertex(far) || pos[far] < pos[v]) {
                continue;
            }
        }
        let mut es = EdgeIdealSpec::for_edge(mesh, spec, e, v)?;
        if kind == VertexIdealKind::Bar {
            es.s_gamma_prime = es.r;
        }
        ideal = ideal.sum(&edge_ideal(&es)?);
    }
    Ok(ideal)
}
