//! Shared helpers for the integration tests.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use superspline::mesh::{orient2d, validate_disk, Mesh, Point, SmoothnessSpec};

pub fn mesh(coords: &[(i64, i64)], triangles: &[[usize; 3]]) -> Mesh {
    Mesh::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(), triangles.to_vec()).unwrap()
}

pub fn single_triangle() -> Mesh {
    mesh(&[(0, 0), (1, 0), (0, 1)], &[[0, 1, 2]])
}

/// Two triangles in general position.
pub fn skew_pair() -> Mesh {
    mesh(&[(0, 0), (3, 0), (2, 2), (0, 1)], &[[0, 1, 2], [0, 2, 3]])
}

/// Counter-clockwise templates: (coordinates, triangles), at most eight triangles each.
fn templates() -> Vec<(Vec<(i64, i64)>, Vec<[usize; 3]>)> {
    let mut out = Vec::new();
    for t in 3..=7usize {
        let mut coords = vec![(0, 0)];
        for k in 0..t {
            let theta = std::f64::consts::TAU * k as f64 / t as f64;
            coords.push(((40.0 * theta.cos()).round() as i64, (40.0 * theta.sin()).round() as i64));
        }
        let tris = (0..t).map(|k| [0, k + 1, (k + 1) % t + 1]).collect();
        out.push((coords, tris));
    }
    out.push((vec![(0, 0), (30, 0), (30, 30), (0, 30)], vec![[0, 1, 2], [0, 2, 3]]));
    out.push((
        vec![(0, 0), (30, 0), (60, 0), (45, 30), (15, 30)],
        vec![[0, 1, 4], [1, 3, 4], [1, 2, 3]],
    ));
    out.push((
        vec![(0, 0), (80, 0), (40, 60), (45, 10), (50, 30), (25, 20)],
        vec![[3, 4, 5], [0, 1, 3], [1, 2, 4], [2, 0, 5], [0, 3, 5], [1, 4, 3], [2, 5, 4]],
    ));
    let grid: Vec<(i64, i64)> = (0..3).flat_map(|j| (0..3).map(move |i| (30 * i, 30 * j))).collect();
    let mut tris = Vec::new();
    for j in 0..2 {
        for i in 0..2 {
            let v = j * 3 + i;
            tris.push([v, v + 1, v + 4]);
            tris.push([v, v + 4, v + 3]);
        }
    }
    out.push((grid, tris));
    out
}

/// A small triangulated disk with jittered integer coordinates.
pub fn random_disk(rng: &mut StdRng) -> Mesh {
    let all = templates();
    loop {
        let (coords, tris) = &all[rng.gen_range(0..all.len())];
        let pts: Vec<Point> = coords
            .iter()
            .map(|&(x, y)| Point::from_ints(x + rng.gen_range(-6..=6), y + rng.gen_range(-6..=6)))
            .collect();
        let ccw = tris
            .iter()
            .all(|&[a, b, c]| orient2d(&pts[a], &pts[b], &pts[c]) > superspline::ratlinalg::Rational::from(0));
        if !ccw {
            continue;
        }
        if let Ok(m) = Mesh::new(pts, tris.clone()) {
            if validate_disk(&m).passed() {
                return m;
            }
        }
    }
}

/// Smoothness with base orders `(r, s)` and a few random raised entries.
pub fn random_spec(rng: &mut StdRng, m: &Mesh, r: u32, s: u32) -> SmoothnessSpec {
    let edges: Vec<(usize, usize, u32)> = m
        .interior_edges()
        .filter(|_| rng.gen_bool(0.25))
        .map(|e| {
            let (a, b) = m.edges()[e];
            (a, b, r + 1)
        })
        .collect();
    let mut verts = Vec::new();
    for v in 0..m.num_vertices() {
        if rng.gen_bool(0.3) {
            verts.push((v, s + rng.gen_range(0..=1)));
        }
    }
    SmoothnessSpec::with_overrides(m, r, s, &edges, &verts).unwrap()
}
