//! Ruppert-style Delaunay refinement with a spatially varying size target.
//!
//! The driver alternates between splitting encroached boundary segments and
//! inserting circumcenters of triangles that violate the size or minimum
//! angle criterion. A vertex-spacing floor (`min_edge`) guarantees
//! termination: any split that would create edges shorter than the floor is
//! skipped and recorded as an exception instead.

use super::delaunay::{Location, Triangulation, NONE};
use crate::geom::{angles, circumcenter, Point};

#[derive(Debug, Clone, PartialEq)]
pub enum MeshException {
    /// A boundary segment stayed encroached because splitting it would
    /// violate the vertex-spacing floor.
    EncroachedSegment { a: Point, b: Point },
    /// A triangle kept an angle below the minimum. `touches_constraint`
    /// distinguishes boundary-adjacent leftovers from interior failures.
    SmallAngle {
        centroid: Point,
        angle_deg: f64,
        touches_constraint: bool,
    },
    /// A triangle kept an edge longer than its local size target.
    OversizedEdge { centroid: Point, edge_len: f64 },
}

pub struct RefineParams<'a> {
    pub min_edge: f64,
    pub min_angle_deg: f64,
    /// Local target edge length at a point (domain vs. exterior band).
    pub size_at: &'a dyn Fn(Point) -> f64,
    /// Predicate marking triangles (by centroid) that belong to the meshed
    /// region; triangles outside it are never refined.
    pub keep_at: &'a dyn Fn(Point) -> bool,
}

fn centroid(t: &Triangulation, tri: usize) -> Point {
    let v = t.tris[tri].v;
    Point::new(
        (t.verts[v[0]].x + t.verts[v[1]].x + t.verts[v[2]].x) / 3.0,
        (t.verts[v[0]].y + t.verts[v[1]].y + t.verts[v[2]].y) / 3.0,
    )
}

fn longest_edge(t: &Triangulation, tri: usize) -> f64 {
    let v = t.tris[tri].v;
    let mut best = 0.0f64;
    for k in 0..3 {
        let d = t.verts[v[k]].dist(t.verts[v[(k + 1) % 3]]);
        best = best.max(d);
    }
    best
}

fn min_angle_deg(t: &Triangulation, tri: usize) -> f64 {
    let v = t.tris[tri].v;
    let a = angles(t.verts[v[0]], t.verts[v[1]], t.verts[v[2]]);
    a.iter().copied().fold(f64::INFINITY, f64::min).to_degrees()
}

/// Strict diametral-disk encroachment test.
fn encroaches(a: Point, b: Point, p: Point) -> bool {
    (a.x - p.x) * (b.x - p.x) + (a.y - p.y) * (b.y - p.y) < 0.0
}

/// Apex vertices of the (up to two) triangles adjacent to edge (a, b).
fn edge_apexes(t: &Triangulation, a: usize, b: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(2);
    if let Some((t0, t1)) = t.edge_triangles(a, b) {
        for ti in std::iter::once(t0).chain(t1) {
            for &v in &t.tris[ti].v {
                if v != a && v != b {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// `true` if the constrained segment (a, b) exists as an edge and is
/// encroached by a neighboring apex vertex.
fn segment_encroached(t: &Triangulation, a: usize, b: usize) -> bool {
    let pa = t.verts[a];
    let pb = t.verts[b];
    edge_apexes(t, a, b)
        .into_iter()
        .any(|v| encroaches(pa, pb, t.verts[v]))
}

/// Splits constrained segment (a, b), assuming it is a live edge.
/// Returns the new vertex, or `None` when the spacing floor forbids it.
fn split_segment(t: &mut Triangulation, a: usize, b: usize, min_edge: f64) -> Option<usize> {
    let pa = t.verts[a];
    let pb = t.verts[b];
    if pa.dist(pb) < 2.0 * min_edge {
        return None;
    }
    let mid = pa.mid(pb);
    // locate via the edge itself so constraint bookkeeping stays exact
    let (tri, _) = t.edge_triangles(a, b)?;
    let mut slot = NONE;
    for k in 0..3 {
        let u = t.tris[tri].v[(k + 1) % 3];
        let w = t.tris[tri].v[(k + 2) % 3];
        if (u == a && w == b) || (u == b && w == a) {
            slot = k;
            break;
        }
    }
    if slot == NONE {
        return None;
    }
    let vi = t.verts.len();
    t.verts.push(mid);
    t.split_edge_at(tri, slot, vi);
    Some(vi)
}

/// Ensures every constrained segment is an edge of the triangulation by
/// repeated midpoint splitting (a missing segment is always encroached).
pub fn recover_segments(t: &mut Triangulation, min_edge: f64) -> Result<(), String> {
    for _ in 0..10_000 {
        let missing: Vec<(usize, usize)> = t
            .constraints
            .iter()
            .copied()
            .filter(|&(a, b)| !t.has_edge(a, b))
            .collect();
        if missing.is_empty() {
            return Ok(());
        }
        for (a, b) in missing {
            if t.has_edge(a, b) {
                continue;
            }
            let pa = t.verts[a];
            let pb = t.verts[b];
            if pa.dist(pb) < 2.0 * min_edge {
                return Err(format!(
                    "cannot recover boundary segment ({:.6},{:.6})-({:.6},{:.6}) above the vertex-spacing floor",
                    pa.x, pa.y, pb.x, pb.y
                ));
            }
            let mid = pa.mid(pb);
            t.unconstrain(a, b);
            let vi = t.insert(mid, t.tris.len() - 1);
            t.constrain(a, vi);
            t.constrain(vi, b);
        }
    }
    Err("segment recovery did not converge".into())
}

pub struct RefineOutcome {
    pub exceptions: Vec<MeshException>,
}

pub fn refine(t: &mut Triangulation, params: &RefineParams) -> Result<RefineOutcome, String> {
    let max_rounds = 500;
    let max_vertices = 200_000;
    let size_slack = 1.0 + 1e-9;

    for _round in 0..max_rounds {
        if t.verts.len() > max_vertices {
            return Err("refinement exceeded the vertex budget".into());
        }
        let mut did_work = false;

        // 1. split encroached constrained segments, longest first
        loop {
            let mut worst: Option<(f64, usize, usize)> = None;
            for &(a, b) in t.constraints.iter() {
                if segment_encroached(t, a, b) {
                    let len = t.verts[a].dist(t.verts[b]);
                    if len >= 2.0 * params.min_edge {
                        let key = (len, a, b);
                        if worst.map_or(true, |(l, wa, wb)| key > (l, wa, wb)) {
                            worst = Some(key);
                        }
                    }
                }
            }
            match worst {
                Some((_, a, b)) => {
                    split_segment(t, a, b, params.min_edge);
                    did_work = true;
                }
                None => break,
            }
        }

        // 2. gather violating triangles (deterministic order), prefer the
        //    worst size violations, then the worst angles
        let mut bad: Vec<(u8, f64, usize)> = Vec::new();
        for (i, _) in t.real_triangles() {
            let c = centroid(t, i);
            if !(params.keep_at)(c) {
                continue;
            }
            let target = (params.size_at)(c);
            let le = longest_edge(t, i);
            if le > target * size_slack {
                bad.push((0, -le, i));
                continue;
            }
            let ang = min_angle_deg(t, i);
            if ang < params.min_angle_deg - 1e-9 {
                bad.push((1, ang, i));
            }
        }
        bad.sort_by(|x, y| {
            x.0.cmp(&y.0)
                .then(x.1.partial_cmp(&y.1).unwrap())
                .then(x.2.cmp(&y.2))
        });

        for (kind, score, tri) in bad {
            if !t.tris[tri].alive {
                continue;
            }
            // revalidate: the triangle may have been fixed this round
            let c = centroid(t, tri);
            if !(params.keep_at)(c) {
                continue;
            }
            let target = (params.size_at)(c);
            let le = longest_edge(t, tri);
            let ang = min_angle_deg(t, tri);
            let still_bad = match kind {
                0 => le > target * size_slack && -score == le,
                _ => ang < params.min_angle_deg - 1e-9,
            };
            if !still_bad {
                continue;
            }
            let v = t.tris[tri].v;
            let cc = match circumcenter(t.verts[v[0]], t.verts[v[1]], t.verts[v[2]]) {
                Some(p) => p,
                None => continue,
            };
            // spacing floor: skip circumcenters crowding existing vertices
            let circumradius = cc.dist(t.verts[v[0]]);
            if circumradius < params.min_edge {
                continue;
            }
            // if the circumcenter encroaches constrained segments, split
            // those segments instead (standard Ruppert rule)
            let enc: Vec<(usize, usize)> = t
                .constraints
                .iter()
                .copied()
                .filter(|&(a, b)| {
                    t.has_edge(a, b) && encroaches(t.verts[a], t.verts[b], cc)
                })
                .collect();
            if !enc.is_empty() {
                let mut split_any = false;
                for (a, b) in enc {
                    if t.has_edge(a, b) && split_segment(t, a, b, params.min_edge).is_some() {
                        split_any = true;
                    }
                }
                did_work |= split_any;
                continue;
            }
            match t.locate(cc, tri) {
                Location::OnVertex(_) => continue,
                loc => {
                    // never insert outside the meshed region
                    let host = match loc {
                        Location::Inside(h) | Location::OnEdge(h, _) => h,
                        Location::OnVertex(_) => unreachable!(),
                    };
                    if !(params.keep_at)(centroid(t, host)) {
                        continue;
                    }
                    // spacing floor against the host triangle corners
                    let near = t.tris[host]
                        .v
                        .iter()
                        .map(|&u| cc.dist(t.verts[u]))
                        .fold(f64::INFINITY, f64::min);
                    if near < params.min_edge {
                        continue;
                    }
                    t.insert(cc, host);
                    did_work = true;
                }
            }
        }

        if !did_work {
            break;
        }
    }

    // collect remaining violations as exceptions
    let mut constrained_verts = std::collections::BTreeSet::new();
    for &(a, b) in t.constraints.iter() {
        constrained_verts.insert(a);
        constrained_verts.insert(b);
    }
    let mut exceptions = Vec::new();
    for &(a, b) in t.constraints.iter() {
        if t.has_edge(a, b) && segment_encroached(t, a, b) {
            exceptions.push(MeshException::EncroachedSegment {
                a: t.verts[a],
                b: t.verts[b],
            });
        }
    }
    for (i, tri) in t.real_triangles() {
        let c = centroid(t, i);
        if !(params.keep_at)(c) {
            continue;
        }
        let target = (params.size_at)(c);
        let le = longest_edge(t, i);
        if le > target * (1.0 + 1e-6) {
            exceptions.push(MeshException::OversizedEdge {
                centroid: c,
                edge_len: le,
            });
        }
        let ang = min_angle_deg(t, i);
        if ang < params.min_angle_deg - 1e-9 {
            exceptions.push(MeshException::SmallAngle {
                centroid: c,
                angle_deg: ang,
                touches_constraint: tri.v.iter().any(|v| constrained_verts.contains(v)),
            });
        }
    }
    Ok(RefineOutcome { exceptions })
}
