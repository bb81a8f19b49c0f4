use std::collections::HashSet;

use super::Mesh;
use crate::error::{Error, Result};

/// Whether `v` has two already-placed neighbours joined to it along edges of
/// different slopes. Boundary vertices always count as placed.
fn supported(m: &Mesh, v: usize, placed: &[bool]) -> bool {
    let slopes: HashSet<_> = m
        .neighbors(v)
        .into_iter()
        .filter(|&(w, _)| placed[w] || m.is_boundary_vertex(w))
        .map(|(_, e)| m.edge_slope(e))
        .collect();
    slopes.len() >= 2
}

/// Boundary vertices first, then interior vertices each preceded by two
/// neighbours along edges of different slopes.
///
/// Interior vertices are appended greedily. Support only grows as vertices are
/// placed, so if any valid order exists the greedy pass never stalls: the
/// first vertex of that order missing from a stalled prefix would be supported.
pub fn vertex_ordering(m: &Mesh) -> Result<Vec<usize>> {
    let n = m.num_vertices();
    let mut order: Vec<usize> = (0..n).filter(|&v| m.is_boundary_vertex(v)).collect();
    let mut placed = vec![false; n];
    for &v in &order {
        placed[v] = true;
    }
    let mut pending: Vec<usize> = m.interior_vertices().collect();
    while !pending.is_empty() {
        let Some(k) = pending.iter().position(|&v| supported(m, v, &placed)) else {
            return Err(Error::OrderingNotFound(format!(
                "no admissible next vertex among {pending:?}"
            )));
        };
        let v = pending.remove(k);
        placed[v] = true;
        order.push(v);
    }
    check_vertex_ordering(m, &order)?;
    Ok(order)
}

/// Independent check of the ordering postcondition.
pub fn check_vertex_ordering(m: &Mesh, order: &[usize]) -> Result<()> {
    let n = m.num_vertices();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return Err(Error::OrderingNotFound(format!("{order:?} is not a permutation")));
        }
        position[v] = i;
    }
    if order.len() != n {
        return Err(Error::OrderingNotFound(format!("{order:?} is not a permutation")));
    }
    for v in m.interior_vertices() {
        let earlier: HashSet<_> = m
            .neighbors(v)
            .into_iter()
            .filter(|&(w, _)| m.is_boundary_vertex(w) || position[w] < position[v])
            .map(|(_, e)| m.edge_slope(e))
            .collect();
        if earlier.len() < 2 {
            return Err(Error::OrderingNotFound(format!(
                "vertex {v} lacks two earlier neighbours with distinct slopes"
            )));
        }
    }
    Ok(())
}
