//! Edge and vertex ideals of a mesh, and the two linear-algebra computations
//! built on them: the spline kernel and the cokernel of ∂₁.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideals::{edge_ideal, vertex_ideal, EdgeIdealSpec, GradedIdeal, VertexIdealKind};
use crate::mesh::{vertex_ordering, Mesh, SmoothnessSpec};
use crate::polyring::monomial_count;
use crate::ratlinalg::{integer_row, EchelonBasis, IntRow, Rational};

/// Ideals attached to the faces of one (mesh, smoothness) pair.
pub struct IdealComplex<'a> {
    pub mesh: &'a Mesh,
    pub spec: &'a SmoothnessSpec,
    edges: HashMap<usize, GradedIdeal>,
    full: HashMap<usize, GradedIdeal>,
    bar: HashMap<usize, GradedIdeal>,
    tilde: Option<HashMap<usize, GradedIdeal>>,
}

impl<'a> IdealComplex<'a> {
    pub fn new(mesh: &'a Mesh, spec: &'a SmoothnessSpec) -> Result<Self> {
        let mut edges = HashMap::new();
        for e in mesh.interior_edges() {
            let near = mesh.edges()[e].0;
            edges.insert(e, edge_ideal(&EdgeIdealSpec::for_edge(mesh, spec, e, near)?)?);
        }
        let mut full = HashMap::new();
        let mut bar = HashMap::new();
        for v in mesh.interior_vertices() {
            full.insert(v, vertex_ideal(mesh, spec, v, VertexIdealKind::Full, None)?);
            bar.insert(v, vertex_ideal(mesh, spec, v, VertexIdealKind::Bar, None)?);
        }
        Ok(IdealComplex {
            mesh,
            spec,
            edges,
            full,
            bar,
            tilde: None,
        })
    }

    pub fn edge(&self, e: usize) -> &GradedIdeal {
        &self.edges[&e]
    }

    pub fn edge_term(&self, d: u32) -> i64 {
        self.edges.values().map(|j| j.graded_dim(d) as i64).sum()
    }

    pub fn full_vertex_term(&self, d: u32) -> i64 {
        self.full.values().map(|j| j.graded_dim(d) as i64).sum()
    }

    pub fn bar_vertex_term(&self, d: u32) -> i64 {
        self.bar.values().map(|j| j.graded_dim(d) as i64).sum()
    }

    /// Sum over interior vertices of the ordering-restricted vertex ideals.
    pub fn tilde_vertex_term(&mut self, d: u32) -> Result<i64> {
        if self.tilde.is_none() {
            let order = vertex_ordering(self.mesh)?;
            let mut tilde = HashMap::new();
            for v in self.mesh.interior_vertices() {
                tilde.insert(
                    v,
                    vertex_ideal(self.mesh, self.spec, v, VertexIdealKind::Tilde, Some(&order))?,
                );
            }
            self.tilde = Some(tilde);
        }
        let tilde = self.tilde.as_ref().expect("tilde ideals built");
        Ok(tilde.values().map(|j| j.graded_dim(d) as i64).sum())
    }

    /// Dimension of the degree-`d` supersplines, from the smoothness criterion:
    /// neighbouring pieces differ by an element of the edge ideal.
    ///
    /// Pieces are parametrised along a spanning forest of the triangle
    /// adjacency graph: each root carries a free polynomial, each forest edge
    /// an element of its ideal, and every remaining interior edge asks that
    /// the signed sum along its cycle vanish modulo its own ideal.
    pub fn spline_dimension(&self, d: u32) -> Result<i64> {
        let m = self.mesh;
        let n = monomial_count(d);
        let f2 = m.num_triangles();
        let mut adj = vec![Vec::new(); f2];
        for e in m.interior_edges() {
            let ts = m.edge_triangles(e);
            adj[ts[0]].push((ts[1], e));
            adj[ts[1]].push((ts[0], e));
        }
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; f2];
        let mut depth = vec![usize::MAX; f2];
        let mut roots = 0;
        let mut tree_order = Vec::new();
        // Rooting at central triangles keeps the fundamental cycles short.
        let mut starts: Vec<usize> = (0..f2).collect();
        starts.sort_by_cached_key(|&t| eccentricity(&adj, t));
        for start in starts {
            if depth[start] != usize::MAX {
                continue;
            }
            roots += 1;
            depth[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(t) = queue.pop_front() {
                for &(u, e) in &adj[t] {
                    if depth[u] == usize::MAX {
                        depth[u] = depth[t] + 1;
                        parent[u] = Some((t, e));
                        tree_order.push(e);
                        queue.push_back(u);
                    }
                }
            }
        }

        let mut offset = HashMap::new();
        let mut bases: HashMap<usize, Vec<IntRow>> = HashMap::new();
        let mut ncols = 0;
        for &e in &tree_order {
            let rows: Vec<IntRow> = self.edges[&e].piece(d).rows().cloned().collect();
            offset.insert(e, ncols);
            ncols += rows.len();
            bases.insert(e, rows);
        }

        let path_to_root = |mut t: usize| {
            let mut path = Vec::new();
            while let Some((p, e)) = parent[t] {
                path.push((t, e));
                t = p;
            }
            path
        };
        // Each cycle's constraints are first reduced among themselves, which
        // drops most dependent rows while the numbers are still small.
        let mut pending: Vec<IntRow> = Vec::new();
        for e in m.interior_edges() {
            let ts = m.edge_triangles(e);
            if parent[ts[0]].map(|p| p.1) == Some(e) || parent[ts[1]].map(|p| p.1) == Some(e) {
                continue;
            }
            let (mut pa, mut pb) = (path_to_root(ts[0]), path_to_root(ts[1]));
            while let (Some(a), Some(b)) = (pa.last(), pb.last()) {
                if a != b {
                    break;
                }
                pa.pop();
                pb.pop();
            }
            let signed: Vec<(usize, bool)> = pa
                .iter()
                .map(|&(_, e)| (e, true))
                .chain(pb.iter().map(|&(_, e)| (e, false)))
                .collect();
            let mut local = EchelonBasis::new(ncols);
            for lambda in annihilator(&self.edges[&e], d, n) {
                let mut row: IntRow = Vec::new();
                for &(te, positive) in &signed {
                    for (i, b) in bases[&te].iter().enumerate() {
                        let mut dot = BigInt::zero();
                        for (c, v) in b {
                            dot += &lambda[*c] * v;
                        }
                        if !dot.is_zero() {
                            row.push((offset[&te] + i, if positive { dot } else { -dot }));
                        }
                    }
                }
                row.sort_by_key(|(c, _)| *c);
                local.insert(row);
            }
            pending.extend(local.rows().cloned());
        }
        pending.sort_by_key(|row| std::cmp::Reverse(row[0].0));
        let mut system = EchelonBasis::new(ncols);
        for row in pending {
            system.insert(row);
        }
        Ok((roots * n + ncols - system.rank()) as i64)
    }

    /// `dim H₀(𝒥)_d`: the cokernel of `∂₁ : ⊕ J(τ)_d → ⊕ J(γ)_d`, with
    /// `∂₁[γ, γ'] = [γ'] − [γ]` for `γ < γ'` and boundary endpoints dropped.
    pub fn h0_dimension(&self, d: u32) -> i64 {
        let m = self.mesh;
        let n = monomial_count(d);
        let block: HashMap<usize, usize> = m.interior_vertices().enumerate().map(|(i, v)| (v, i * n)).collect();
        let mut image = EchelonBasis::new(block.len() * n);
        // The image lies in ⊕ J(γ)_d, so reaching that dimension ends the search.
        let target = self.full_vertex_term(d) as usize;
        let mut edges: Vec<usize> = m.interior_edges().collect();
        // Rows landing in a single block go first, then coupled edges from the
        // last block backwards; this order keeps the integers small.
        edges.sort_by_key(|&e| {
            let (a, b) = m.edges()[e];
            let (ba, bb) = (block.get(&a), block.get(&b));
            let last = ba.copied().unwrap_or(0).max(bb.copied().unwrap_or(0));
            (ba.is_some() && bb.is_some(), std::cmp::Reverse(last), a, b)
        });
        for e in edges {
            let (a, b) = m.edges()[e];
            let (ba, bb) = (block.get(&a).copied(), block.get(&b).copied());
            if ba.is_none() && bb.is_none() {
                continue;
            }
            for g in self.edges[&e].piece(d).rows() {
                let mut row: IntRow = Vec::with_capacity(2 * g.len());
                if let Some(off) = ba {
                    row.extend(g.iter().map(|(c, v)| (off + c, -v.clone())));
                }
                if let Some(off) = bb {
                    row.extend(g.iter().map(|(c, v)| (off + c, v.clone())));
                }
                row.sort_by_key(|(c, _)| *c);
                image.insert(row);
                if image.rank() == target {
                    return 0;
                }
            }
        }
        self.full_vertex_term(d) - image.rank() as i64
    }
}

fn eccentricity(adj: &[Vec<(usize, usize)>], start: usize) -> usize {
    let mut depth = vec![usize::MAX; adj.len()];
    depth[start] = 0;
    let mut queue = VecDeque::from([start]);
    let mut far = 0;
    while let Some(t) = queue.pop_front() {
        far = far.max(depth[t]);
        for &(u, _) in &adj[t] {
            if depth[u] == usize::MAX {
                depth[u] = depth[t] + 1;
                queue.push_back(u);
            }
        }
    }
    far
}

/// Integer basis of the functionals on degree-`d` forms that vanish on `ideal_d`.
fn annihilator(ideal: &GradedIdeal, d: u32, n: usize) -> Vec<Vec<BigInt>> {
    let piece = ideal.piece_matrix(d);
    piece
        .nullspace()
        .into_iter()
        .map(|v| {
            let sparse: Vec<(usize, Rational)> = v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            let mut dense = vec![BigInt::zero(); n];
            for (c, x) in integer_row(&sparse) {
                dense[c] = x;
            }
            dense
        })
        .collect()
}

pub(crate) fn require_disk(m: &Mesh) -> Result<()> {
    let check = crate::mesh::validate_disk(m);
    match check.failure {
        None => Ok(()),
        Some(why) => Err(Error::NotADisk(why.to_string())),
    }
}
