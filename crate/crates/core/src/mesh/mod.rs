//! Planar triangulations with exact rational coordinates.

mod io;
mod ordering;
mod smoothness;
mod topology;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::hash::{DefaultHasher, Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub use io::{load_document, load_mesh, MeshDocument, SmoothnessBlock};
pub use ordering::{check_vertex_ordering, vertex_ordering};
pub use smoothness::SmoothnessSpec;
pub use topology::{validate_disk, DiskCheck, DiskFailure};

pub use crate::polyring::Point;
use crate::error::{Error, Result};
use crate::ratlinalg::Rational;

/// Edge as a sorted vertex pair.
pub type Edge = (usize, usize);

pub fn edge_key(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct FaceCounts {
    pub f0: usize,
    pub f1: usize,
    pub f2: usize,
    pub f0_interior: usize,
    pub f1_interior: usize,
}

/// A validated triangulation with derived edge adjacency.
///
/// Triangles are stored counterclockwise. An edge is a boundary edge iff it
/// lies in exactly one triangle; a vertex is a boundary vertex iff it lies on
/// a boundary edge.
#[derive(Clone, Debug)]
pub struct Mesh {
    vertices: Vec<Point>,
    triangles: Vec<[usize; 3]>,
    edges: Vec<Edge>,
    edge_index: HashMap<Edge, usize>,
    edge_triangles: Vec<Vec<usize>>,
    vertex_boundary: Vec<bool>,
    vertex_edges: Vec<Vec<usize>>,
}

/// Twice the signed area of the triangle `abc`.
pub fn orient2d(a: &Point, b: &Point, c: &Point) -> Rational {
    let abx = &b.x - &a.x;
    let aby = &b.y - &a.y;
    let acx = &c.x - &a.x;
    let acy = &c.y - &a.y;
    &(&abx * &acy) - &(&aby * &acx)
}

impl Mesh {
    pub fn new(vertices: Vec<Point>, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let n = vertices.len();
        let mut seen_points = HashSet::new();
        for p in &vertices {
            if !seen_points.insert(p.clone()) {
                return Err(Error::Duplicate(format!("vertex {p}")));
            }
        }
        let mut oriented = Vec::with_capacity(triangles.len());
        let mut seen_tris = HashSet::new();
        for (t, tri) in triangles.iter().enumerate() {
            for &v in tri {
                if v >= n {
                    return Err(Error::VertexOutOfRange { index: v, count: n });
                }
            }
            let area = orient2d(&vertices[tri[0]], &vertices[tri[1]], &vertices[tri[2]]);
            if area.is_zero() {
                return Err(Error::DegenerateTriangle {
                    index: t,
                    vertices: *tri,
                });
            }
            let mut sorted = *tri;
            sorted.sort_unstable();
            if !seen_tris.insert(sorted) {
                return Err(Error::Duplicate(format!("triangle {tri:?}")));
            }
            oriented.push(if area.is_negative() {
                [tri[0], tri[2], tri[1]]
            } else {
                *tri
            });
        }

        let mut adjacency: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (t, tri) in oriented.iter().enumerate() {
            for k in 0..3 {
                adjacency
                    .entry(edge_key(tri[k], tri[(k + 1) % 3]))
                    .or_default()
                    .push(t);
            }
        }
        let mut edges = Vec::with_capacity(adjacency.len());
        let mut edge_triangles = Vec::with_capacity(adjacency.len());
        for (e, ts) in adjacency {
            if ts.len() > 2 {
                return Err(Error::NonManifoldEdge(e.0, e.1));
            }
            edges.push(e);
            edge_triangles.push(ts);
        }
        let edge_index: HashMap<Edge, usize> = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();

        let mut vertex_edges = vec![Vec::new(); n];
        let mut vertex_boundary = vec![false; n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            vertex_edges[a].push(i);
            vertex_edges[b].push(i);
            if edge_triangles[i].len() == 1 {
                vertex_boundary[a] = true;
                vertex_boundary[b] = true;
            }
        }
        if let Some(v) = vertex_edges.iter().position(|es| es.is_empty()) {
            return Err(Error::DanglingVertex(v));
        }
        Ok(Mesh {
            vertices,
            triangles: oriented,
            edges,
            edge_index,
            edge_triangles,
            vertex_boundary,
            vertex_edges,
        })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Point {
        &self.vertices[v]
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&edge_key(a, b)).copied()
    }

    /// Triangles containing edge `e` (one for boundary edges, two otherwise).
    pub fn edge_triangles(&self, e: usize) -> &[usize] {
        &self.edge_triangles[e]
    }

    pub fn is_interior_edge(&self, e: usize) -> bool {
        self.edge_triangles[e].len() == 2
    }

    pub fn is_boundary_vertex(&self, v: usize) -> bool {
        self.vertex_boundary[v]
    }

    pub fn is_interior_vertex(&self, v: usize) -> bool {
        !self.vertex_boundary[v]
    }

    pub fn interior_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&e| self.is_interior_edge(e))
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertices.len()).filter(|&v| self.is_interior_vertex(v))
    }

    /// Edge ids incident to `v`.
    pub fn vertex_edges(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    /// Neighbours of `v` paired with the connecting edge id.
    pub fn neighbors(&self, v: usize) -> Vec<(usize, usize)> {
        self.vertex_edges[v]
            .iter()
            .map(|&e| {
                let (a, b) = self.edges[e];
                (if a == v { b } else { a }, e)
            })
            .collect()
    }

    pub fn triangles_at(&self, v: usize) -> Vec<usize> {
        (0..self.triangles.len())
            .filter(|&t| self.triangles[t].contains(&v))
            .collect()
    }

    pub fn face_counts(&self) -> FaceCounts {
        FaceCounts {
            f0: self.vertices.len(),
            f1: self.edges.len(),
            f2: self.triangles.len(),
            f0_interior: self.interior_vertices().count(),
            f1_interior: self.interior_edges().count(),
        }
    }

    /// Canonical direction of edge `e`: coprime integers, first nonzero positive.
    pub fn edge_slope(&self, e: usize) -> (BigInt, BigInt) {
        let (a, b) = self.edges[e];
        slope_key(&self.vertices[a], &self.vertices[b])
    }

    /// Number of distinct slopes among the edges containing `v`.
    pub fn distinct_slopes_at(&self, v: usize) -> usize {
        self.vertex_edges[v]
            .iter()
            .map(|&e| self.edge_slope(e))
            .collect::<HashSet<_>>()
            .len()
    }

    /// The sub-mesh of triangles containing `v`, re-indexed, with the map
    /// from new vertex indices to original ones.
    pub fn star(&self, v: usize) -> Result<(Mesh, Vec<usize>)> {
        if v >= self.vertices.len() {
            return Err(Error::VertexOutOfRange {
                index: v,
                count: self.vertices.len(),
            });
        }
        let tris = self.triangles_at(v);
        let mut old_of_new: Vec<usize> = tris.iter().flat_map(|&t| self.triangles[t]).collect();
        old_of_new.sort_unstable();
        old_of_new.dedup();
        let new_of_old: HashMap<usize, usize> = old_of_new.iter().enumerate().map(|(i, &o)| (o, i)).collect();
        let vertices = old_of_new.iter().map(|&o| self.vertices[o].clone()).collect();
        let triangles = tris
            .iter()
            .map(|&t| self.triangles[t].map(|o| new_of_old[&o]))
            .collect();
        Ok((Mesh::new(vertices, triangles)?, old_of_new))
    }

    /// Apply `f` to every vertex; fails if the image is degenerate.
    pub fn map_vertices(&self, f: impl Fn(&Point) -> Point) -> Result<Mesh> {
        Mesh::new(self.vertices.iter().map(f).collect(), self.triangles.clone())
    }

    /// Stable content hash over coordinates and triangles.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.vertices.hash(&mut h);
        self.triangles.hash(&mut h);
        h.finish()
    }

    /// Whether the star of `v` has every interior edge on its own slope.
    pub fn is_generic_vertex(&self, v: usize) -> bool {
        self.distinct_slopes_at(v) == self.vertex_edges[v].len()
    }
}

pub(crate) fn slope_key(a: &Point, b: &Point) -> (BigInt, BigInt) {
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    let den = dx.denom().lcm(dy.denom());
    let ix = dx.numer() * (&den / dx.denom());
    let iy = dy.numer() * (&den / dy.denom());
    let g = ix.gcd(&iy);
    let (mut ix, mut iy) = (ix / &g, iy / &g);
    if ix.is_negative() || (ix.is_zero() && iy.is_negative()) {
        ix = -ix;
        iy = -iy;
    }
    (ix, iy)
}
