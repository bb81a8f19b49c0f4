//! Mesh generators: Powell–Sabin 6-split, the symmetric Morgan–Scott mesh, vertex stars.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::mesh::{orient2d, Mesh, Point, SmoothnessSpec};
use crate::ratlinalg::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    Original(usize),
    /// Split point inside the given original triangle.
    Interior(usize),
    /// Split point on the given original edge.
    EdgePoint(usize),
}

#[derive(Clone, Debug)]
pub struct PSSplitResult {
    pub refined: Mesh,
    pub spec: SmoothnessSpec,
    pub roles: Vec<VertexRole>,
}

fn barycenter(a: &Point, b: &Point, c: &Point) -> Point {
    let three = Rational::from(3);
    Point::new(&(&(&a.x + &b.x) + &c.x) / &three, &(&(&a.y + &b.y) + &c.y) / &three)
}

fn midpoint(a: &Point, b: &Point) -> Point {
    let two = Rational::from(2);
    Point::new(&(&a.x + &b.x) / &two, &(&a.y + &b.y) / &two)
}

/// Parameter `t` with `p + t(q − p)` on the line through `z1, z2`.
fn line_crossing(p: &Point, q: &Point, z1: &Point, z2: &Point) -> Option<Rational> {
    let denom = orient2d(z1, z2, q) - orient2d(z1, z2, p);
    if denom.is_zero() {
        return None;
    }
    Some(-(&orient2d(z1, z2, p) / &denom))
}

/// Powell–Sabin 6-split with barycentric split points; edge points on
/// interior edges lie on the segment joining neighbouring barycenters, on
/// boundary edges at the midpoint.
///
/// Smoothness: `s` across edges `[Z, B]`, `r` across all others; order `s`
/// at original vertices and barycenters, `r` at edge points.
pub fn powell_sabin_6split(m: &Mesh, r: u32, s: u32) -> Result<PSSplitResult> {
    let centers: Vec<Point> = m
        .triangles()
        .iter()
        .map(|&[a, b, c]| barycenter(m.vertex(a), m.vertex(b), m.vertex(c)))
        .collect();
    powell_sabin_6split_at(m, r, s, &centers)
}

/// Powell–Sabin 6-split with caller-chosen split points, one strictly inside
/// each triangle.
pub fn powell_sabin_6split_at(m: &Mesh, r: u32, s: u32, centers: &[Point]) -> Result<PSSplitResult> {
    if r > s {
        return Err(Error::InvalidArgument(format!("r = {r} exceeds s = {s}")));
    }
    if centers.len() != m.num_triangles() {
        return Err(Error::InvalidArgument(format!(
            "{} split points for {} triangles",
            centers.len(),
            m.num_triangles()
        )));
    }
    let f0 = m.num_vertices();
    let f2 = m.num_triangles();
    let mut points: Vec<Point> = m.vertices().to_vec();
    let mut roles: Vec<VertexRole> = (0..f0).map(VertexRole::Original).collect();
    for (t, &[a, b, c]) in m.triangles().iter().enumerate() {
        let z = &centers[t];
        let inside = [(a, b), (b, c), (c, a)]
            .iter()
            .all(|&(u, v)| orient2d(m.vertex(u), m.vertex(v), z) > Rational::zero());
        if !inside {
            return Err(Error::ConstructionFailure(a, b, format!("split point {z} is not inside triangle {t}")));
        }
        points.push(z.clone());
        roles.push(VertexRole::Interior(t));
    }
    for (e, &(a, b)) in m.edges().iter().enumerate() {
        let (p, q) = (m.vertex(a), m.vertex(b));
        let point = match m.edge_triangles(e) {
            &[s1, s2] => {
                let (z1, z2) = (&points[f0 + s1], &points[f0 + s2]);
                let t = line_crossing(p, q, z1, z2)
                    .filter(|t| !t.is_negative() && !t.is_zero() && *t < Rational::one())
                    .ok_or_else(|| {
                        Error::ConstructionFailure(a, b, "barycenter segment misses the edge interior".into())
                    })?;
                Point::new(&p.x + &(&t * &(&q.x - &p.x)), &p.y + &(&t * &(&q.y - &p.y)))
            }
            _ => midpoint(p, q),
        };
        points.push(point);
        roles.push(VertexRole::EdgePoint(e));
    }
    let z = |t: usize| f0 + t;
    let bp = |a: usize, b: usize| f0 + f2 + m.edge_id(a, b).expect("triangle edge");
    let mut triangles = Vec::with_capacity(6 * f2);
    for (t, &[a, b, c]) in m.triangles().iter().enumerate() {
        for (u, v) in [(a, b), (b, c), (c, a)] {
            triangles.push([u, bp(u, v), z(t)]);
            triangles.push([bp(u, v), v, z(t)]);
        }
    }
    let refined = Mesh::new(points, triangles)?;

    let is_split_pair = |u: usize, v: usize| {
        matches!(
            (roles[u], roles[v]),
            (VertexRole::Interior(_), VertexRole::EdgePoint(_)) | (VertexRole::EdgePoint(_), VertexRole::Interior(_))
        )
    };
    let edge_r: BTreeMap<_, _> = refined
        .interior_edges()
        .map(|e| {
            let (u, v) = refined.edges()[e];
            ((u, v), if is_split_pair(u, v) { s } else { r })
        })
        .collect();
    let vertex_s = roles
        .iter()
        .map(|role| match role {
            VertexRole::EdgePoint(_) => r,
            _ => s,
        })
        .collect();
    let spec = SmoothnessSpec::from_maps(&refined, edge_r, vertex_s)?;
    Ok(PSSplitResult { refined, spec, roles })
}

/// Symmetric Morgan–Scott triangulation: outer triangle `(0,0), (8,0), (4,6)`
/// and the inner triangle obtained from it by the homothety of ratio −1/4
/// about its centroid, so inner edges are parallel to outer ones.
///
/// Vertices 0–2 are outer, vertex `3 + k` is the inner vertex facing outer edge
/// `[k, k+1]`.
pub fn morgan_scott_mesh() -> Mesh {
    let q = |x: i64, y: i64, den: i64| Point::new(Rational::new(x, den), Rational::new(y, den));
    let vertices = vec![
        q(0, 0, 1),
        q(8, 0, 1),
        q(4, 6, 1),
        q(9, 2, 2),
        q(5, 3, 1),
        q(5, 2, 2),
    ];
    let triangles = vec![
        [3, 4, 5],
        [0, 1, 3],
        [1, 2, 4],
        [2, 0, 5],
        [0, 3, 5],
        [1, 4, 3],
        [2, 5, 4],
    ];
    Mesh::new(vertices, triangles).expect("Morgan–Scott mesh is valid")
}

fn half(d: &(Rational, Rational)) -> u8 {
    let pos = |v: &Rational| !v.is_negative() && !v.is_zero();
    if pos(&d.1) || (d.1.is_zero() && pos(&d.0)) {
        0
    } else {
        1
    }
}

fn cross(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    &(&a.0 * &b.1) - &(&a.1 * &b.0)
}

fn angle_cmp(a: &(Rational, Rational), b: &(Rational, Rational)) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let c = cross(a, b);
        if c.is_zero() {
            Ordering::Equal
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    })
}

/// Star around the origin with one boundary vertex per direction, fanned in
/// angular order. With `perturb` the k-th boundary vertex sits at radius
/// `1 + k/(2n)` instead of 1.
pub fn make_vertex_star(directions: &[(Rational, Rational)], perturb: bool) -> Result<Mesh> {
    let n = directions.len();
    if n < 3 {
        return Err(Error::InvalidArgument(format!("need at least 3 directions, got {n}")));
    }
    if directions.iter().any(|d| d.0.is_zero() && d.1.is_zero()) {
        return Err(Error::InvalidArgument("zero direction".into()));
    }
    let mut dirs = directions.to_vec();
    dirs.sort_by(angle_cmp);
    for k in 0..n {
        let (a, b) = (&dirs[k], &dirs[(k + 1) % n]);
        let c = cross(a, b);
        if c.is_zero() || c.is_negative() {
            return Err(Error::InvalidArgument(format!(
                "directions ({}, {}) and ({}, {}) do not bound a fan sector",
                a.0, a.1, b.0, b.1
            )));
        }
    }
    let mut vertices = vec![Point::new(Rational::zero(), Rational::zero())];
    for (k, (dx, dy)) in dirs.iter().enumerate() {
        let radius = if perturb {
            Rational::one() + Rational::new(k as i64, 2 * n as i64)
        } else {
            Rational::one()
        };
        vertices.push(Point::new(dx * &radius, dy * &radius));
    }
    let triangles = (0..n).map(|k| [0, k + 1, (k + 1) % n + 1]).collect();
    Mesh::new(vertices, triangles)
}

/// `t` integer directions on pairwise distinct slopes, roughly evenly spread.
pub fn generic_directions(t: usize) -> Vec<(Rational, Rational)> {
    let mut scale = 100.0;
    loop {
        let dirs: Vec<(i64, i64)> = (0..t)
            .map(|k| {
                let theta = std::f64::consts::TAU * k as f64 / t as f64 + 0.2 + 0.07 * k as f64;
                ((scale * theta.cos()).round() as i64, (scale * theta.sin()).round() as i64)
            })
            .collect();
        let as_rat: Vec<_> = dirs.iter().map(|&(x, y)| (Rational::from(x), Rational::from(y))).collect();
        let distinct = (0..t).all(|i| (0..i).all(|j| !cross(&as_rat[i], &as_rat[j]).is_zero()));
        if distinct {
            return as_rat;
        }
        scale *= 3.0;
    }
}

/// Generic star with `t` edges on `t` distinct slopes.
pub fn generic_star(t: usize) -> Result<Mesh> {
    make_vertex_star(&generic_directions(t), false)
}

/// Crossed square: four edges on two slopes.
pub fn crossed_star() -> Mesh {
    let d = |x: i64, y: i64| (Rational::from(x), Rational::from(y));
    make_vertex_star(&[d(1, 0), d(0, 1), d(-1, 0), d(0, -1)], false).expect("crossed square")
}
