use serde::{Deserialize, Serialize};

use super::{Mesh, Point, SmoothnessSpec};
use crate::error::{Error, Result};
use crate::ratlinalg::Rational;

/// On-disk mesh document. Coordinates are `"p/q"` strings or integers.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshDocument {
    pub vertices: Vec<[Rational; 2]>,
    pub triangles: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smoothness: Option<SmoothnessBlock>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SmoothnessBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub default_r: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub default_s: Option<u32>,
    #[serde(default)]
    pub edge_r: Vec<[u32; 3]>,
    #[serde(default)]
    pub vertex_s: Vec<[u32; 2]>,
}

impl SmoothnessBlock {
    /// Resolve against `mesh`; defaults missing from the block fall back to
    /// `r` and `s`.
    pub fn to_spec(&self, mesh: &Mesh, r: u32, s: u32) -> Result<SmoothnessSpec> {
        let edges: Vec<_> = self
            .edge_r
            .iter()
            .map(|&[a, b, r]| (a as usize, b as usize, r))
            .collect();
        let verts: Vec<_> = self.vertex_s.iter().map(|&[v, s]| (v as usize, s)).collect();
        SmoothnessSpec::with_overrides(
            mesh,
            self.default_r.unwrap_or(r),
            self.default_s.unwrap_or(s),
            &edges,
            &verts,
        )
    }
}

impl MeshDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_mesh(&self) -> Result<Mesh> {
        let vertices = self
            .vertices
            .iter()
            .map(|[x, y]| Point::new(x.clone(), y.clone()))
            .collect();
        Mesh::new(vertices, self.triangles.clone())
    }

    pub fn from_mesh(mesh: &Mesh, spec: Option<&SmoothnessSpec>) -> Self {
        let smoothness = spec.map(|spec| SmoothnessBlock {
            default_r: None,
            default_s: None,
            edge_r: spec
                .edge_values()
                .iter()
                .map(|(&(a, b), &r)| [a as u32, b as u32, r])
                .collect(),
            vertex_s: spec
                .vertex_values()
                .iter()
                .enumerate()
                .map(|(v, &s)| [v as u32, s])
                .collect(),
        });
        MeshDocument {
            vertices: mesh.vertices().iter().map(|p| [p.x.clone(), p.y.clone()]).collect(),
            triangles: mesh.triangles().to_vec(),
            smoothness,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("mesh document serializes")
    }
}

pub fn load_mesh(text: &str) -> Result<Mesh> {
    MeshDocument::parse(text)?.to_mesh()
}

/// Parse a document into its mesh and optional smoothness block.
pub fn load_document(text: &str) -> Result<(Mesh, Option<SmoothnessBlock>)> {
    let doc = MeshDocument::parse(text)?;
    Ok((doc.to_mesh()?, doc.smoothness))
}
