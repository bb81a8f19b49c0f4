use std::fmt;

use super::Mesh;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiskFailure {
    /// The triangles around this vertex do not form a single edge-connected fan.
    NotHereditary { vertex: usize },
    NotConnected,
    EulerCharacteristic { value: i64 },
    BoundaryNotSimpleCycle,
}

impl fmt::Display for DiskFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiskFailure::NotHereditary { vertex } => write!(f, "hereditary violated at vertex {vertex}"),
            DiskFailure::NotConnected => write!(f, "not connected"),
            DiskFailure::EulerCharacteristic { value } => write!(f, "Euler characteristic {value} (expected 1)"),
            DiskFailure::BoundaryNotSimpleCycle => write!(f, "boundary edges do not form a single simple cycle"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskCheck {
    pub failure: Option<DiskFailure>,
}

impl DiskCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for DiskCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "pass"),
            Some(why) => write!(f, "fail: {why}"),
        }
    }
}

/// Check that the mesh is a triangulated disk. Properties are tested in the
/// order hereditary, connected, Euler characteristic, boundary cycle, and the
/// first failure is reported.
pub fn validate_disk(m: &Mesh) -> DiskCheck {
    let failure = first_failure(m);
    DiskCheck { failure }
}

fn first_failure(m: &Mesh) -> Option<DiskFailure> {
    for v in 0..m.num_vertices() {
        if !fan_connected(m, v) {
            return Some(DiskFailure::NotHereditary { vertex: v });
        }
    }
    if !triangles_connected(m) {
        return Some(DiskFailure::NotConnected);
    }
    let c = m.face_counts();
    let euler = c.f0 as i64 - c.f1 as i64 + c.f2 as i64;
    if euler != 1 {
        return Some(DiskFailure::EulerCharacteristic { value: euler });
    }
    if !boundary_is_cycle(m) {
        return Some(DiskFailure::BoundaryNotSimpleCycle);
    }
    None
}

fn fan_connected(m: &Mesh, v: usize) -> bool {
    let tris = m.triangles_at(v);
    let mut reached = vec![false; tris.len()];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(i) = stack.pop() {
        for &e in m.vertex_edges(v) {
            let ts = m.edge_triangles(e);
            if ts.len() == 2 && ts.contains(&tris[i]) {
                let other = if ts[0] == tris[i] { ts[1] } else { ts[0] };
                let j = tris.iter().position(|&t| t == other).expect("fan triangle");
                if !reached[j] {
                    reached[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    reached.into_iter().all(|x| x)
}

fn triangles_connected(m: &Mesh) -> bool {
    let n = m.num_triangles();
    let mut adj = vec![Vec::new(); n];
    for e in m.interior_edges() {
        let ts = m.edge_triangles(e);
        adj[ts[0]].push(ts[1]);
        adj[ts[1]].push(ts[0]);
    }
    let mut reached = vec![false; n];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(t) = stack.pop() {
        for &u in &adj[t] {
            if !reached[u] {
                reached[u] = true;
                stack.push(u);
            }
        }
    }
    reached.into_iter().all(|x| x)
}

fn boundary_is_cycle(m: &Mesh) -> bool {
    let boundary: Vec<usize> = (0..m.edges().len()).filter(|&e| !m.is_interior_edge(e)).collect();
    if boundary.len() < 3 {
        return false;
    }
    let mut incident = vec![Vec::new(); m.num_vertices()];
    for &e in &boundary {
        let (a, b) = m.edges()[e];
        incident[a].push(e);
        incident[b].push(e);
    }
    if incident.iter().any(|es| !es.is_empty() && es.len() != 2) {
        return false;
    }
    let start = boundary[0];
    let (first, mut at) = m.edges()[start];
    let mut prev = start;
    let mut walked = 1;
    while at != first {
        let next = if incident[at][0] == prev { incident[at][1] } else { incident[at][0] };
        let (a, b) = m.edges()[next];
        at = if a == at { b } else { a };
        prev = next;
        walked += 1;
    }
    walked == boundary.len()
}
