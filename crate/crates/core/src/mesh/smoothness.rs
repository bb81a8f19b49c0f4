use std::collections::BTreeMap;
use std::hash::{DefaultHasher, Hash, Hasher};

use super::{edge_key, Edge, Mesh};
use crate::error::{Error, Result};

/// Smoothness `r_τ` on interior edges and supersmoothness `s_γ` on vertices.
///
/// A vertex value below the smoothness of an incident edge is accepted; on
/// that edge the vertex order is read as `max(s_γ, r_τ)` (see
/// [`SmoothnessSpec::vertex_order_on_edge`]), so supersmoothness is never
/// below edge smoothness wherever it is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessSpec {
    r: BTreeMap<Edge, u32>,
    s: Vec<u32>,
}

impl SmoothnessSpec {
    pub fn uniform(mesh: &Mesh, r: u32, s: u32) -> Self {
        let r = mesh.interior_edges().map(|e| (mesh.edges()[e], r)).collect();
        SmoothnessSpec {
            r,
            s: vec![s; mesh.num_vertices()],
        }
    }

    /// Defaults overridden by explicit edge and vertex entries.
    pub fn with_overrides(
        mesh: &Mesh,
        default_r: u32,
        default_s: u32,
        edge_r: &[(usize, usize, u32)],
        vertex_s: &[(usize, u32)],
    ) -> Result<Self> {
        let mut spec = Self::uniform(mesh, default_r, default_s);
        for &(a, b, r) in edge_r {
            let e = mesh
                .edge_id(a, b)
                .ok_or_else(|| Error::InvalidArgument(format!("no edge [{a},{b}]")))?;
            if !mesh.is_interior_edge(e) {
                return Err(Error::InvalidArgument(format!("edge [{a},{b}] is on the boundary")));
            }
            spec.r.insert(edge_key(a, b), r);
        }
        for &(v, s) in vertex_s {
            if v >= mesh.num_vertices() {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    count: mesh.num_vertices(),
                });
            }
            spec.s[v] = s;
        }
        Ok(spec)
    }

    /// Build from explicit maps, which must cover exactly the interior edges and all vertices.
    pub fn from_maps(mesh: &Mesh, r: BTreeMap<Edge, u32>, s: Vec<u32>) -> Result<Self> {
        if s.len() != mesh.num_vertices() {
            return Err(Error::InvalidArgument(format!(
                "{} vertex orders for {} vertices",
                s.len(),
                mesh.num_vertices()
            )));
        }
        let interior: Vec<Edge> = mesh.interior_edges().map(|e| mesh.edges()[e]).collect();
        if r.len() != interior.len() || interior.iter().any(|e| !r.contains_key(e)) {
            return Err(Error::InvalidArgument(
                "edge smoothness must be given on exactly the interior edges".into(),
            ));
        }
        Ok(SmoothnessSpec { r, s })
    }

    /// `r_τ` for an interior edge id.
    pub fn edge_r(&self, mesh: &Mesh, e: usize) -> u32 {
        self.r[&mesh.edges()[e]]
    }

    pub fn vertex_s(&self, v: usize) -> u32 {
        self.s[v]
    }

    /// Supersmoothness order of `v` as seen from interior edge `e`.
    pub fn vertex_order_on_edge(&self, mesh: &Mesh, e: usize, v: usize) -> u32 {
        self.s[v].max(self.edge_r(mesh, e))
    }

    pub fn edge_values(&self) -> &BTreeMap<Edge, u32> {
        &self.r
    }

    pub fn vertex_values(&self) -> &[u32] {
        &self.s
    }

    /// `Some((r, s))` when every edge and vertex carries the same pair.
    pub fn uniform_values(&self) -> Option<(u32, u32)> {
        let s = *self.s.first()?;
        if self.s.iter().any(|&x| x != s) {
            return None;
        }
        let mut rs = self.r.values();
        let r = rs.next().copied().unwrap_or(0);
        rs.all(|&x| x == r).then_some((r, s))
    }

    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.r.hash(&mut h);
        self.s.hash(&mut h);
        h.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_meshes::*;
    use super::*;

    #[test]
    fn uniform_covers_interior_edges() {
        let m = crossed_square();
        let spec = SmoothnessSpec::uniform(&m, 1, 2);
        assert_eq!(spec.edge_values().len(), 4);
        assert_eq!(spec.uniform_values(), Some((1, 2)));
    }

    #[test]
    fn overrides_apply() {
        let m = crossed_square();
        let spec = SmoothnessSpec::with_overrides(&m, 1, 1, &[(0, 1, 2)], &[(0, 3)]).unwrap();
        assert_eq!(spec.edge_r(&m, m.edge_id(1, 0).unwrap()), 2);
        assert_eq!(spec.vertex_s(0), 3);
        assert_eq!(spec.uniform_values(), None);
        assert!(SmoothnessSpec::with_overrides(&m, 1, 1, &[(1, 2, 2)], &[]).is_err());
    }

    #[test]
    fn vertex_order_never_below_edge() {
        let m = two_triangles();
        let spec = SmoothnessSpec::with_overrides(&m, 3, 1, &[], &[]).unwrap();
        let e = m.interior_edges().next().unwrap();
        assert_eq!(spec.vertex_order_on_edge(&m, e, 0), 3);
    }

    #[test]
    fn maps_must_match_mesh() {
        let m = two_triangles();
        assert!(SmoothnessSpec::from_maps(&m, BTreeMap::new(), vec![0; 4]).is_err());
        let r = [((0, 2), 1)].into_iter().collect();
        assert!(SmoothnessSpec::from_maps(&m, r, vec![1; 4]).is_ok());
    }
}
