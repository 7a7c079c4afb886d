//! Triangulation of the study domain and interpolation onto it.
//!
//! `build_mesh` produces a conforming constrained Delaunay mesh of a polygon
//! (optionally with holes and a coarse exterior band that damps boundary
//! effects of the SPDE approximation). `Mesh::projector` returns the sparse
//! barycentric interpolation matrix used everywhere a field value is needed
//! away from mesh vertices.

mod delaunay;
mod refine;

pub use refine::MeshException;

use sprs::{CsMat, TriMat};
use thiserror::Error;

use crate::geom::{orient, signed_area2, Point, Ring};
use delaunay::Triangulation;
use refine::{recover_segments, refine, RefineParams};

/// Edge-length factor applied in the exterior band relative to `max_edge`.
const BAND_EDGE_FACTOR: f64 = 2.0;
/// Width of the exterior band in units of `max_edge`.
const BAND_WIDTH_FACTOR: f64 = 4.0;

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("invalid mesh parameters: {0}")]
    InvalidParams(String),
    #[error("invalid domain polygon: {0}")]
    InvalidPolygon(String),
    #[error("refinement failed near ({x:.4}, {y:.4}): {detail}")]
    RefinementFailure { x: f64, y: f64, detail: String },
}

/// The study region: an outer boundary ring plus optional interior holes.
#[derive(Debug, Clone)]
pub struct DomainPolygon {
    pub boundary: Ring,
    pub holes: Vec<Ring>,
}

impl DomainPolygon {
    pub fn new(boundary: Vec<Point>, holes: Vec<Vec<Point>>) -> Self {
        DomainPolygon {
            boundary: Ring::new(boundary),
            holes: holes.into_iter().map(Ring::new).collect(),
        }
    }

    pub fn rectangle(lo: Point, hi: Point) -> Self {
        DomainPolygon::new(
            vec![
                lo,
                Point::new(hi.x, lo.y),
                hi,
                Point::new(lo.x, hi.y),
            ],
            vec![],
        )
    }

    pub fn validate(&self) -> Result<(), MeshError> {
        self.boundary
            .validate()
            .map_err(|e| MeshError::InvalidPolygon(format!("boundary: {e}")))?;
        for (h, hole) in self.holes.iter().enumerate() {
            hole.validate()
                .map_err(|e| MeshError::InvalidPolygon(format!("hole {h}: {e}")))?;
            for v in &hole.vertices {
                if !self.boundary.contains(*v) {
                    return Err(MeshError::InvalidPolygon(format!(
                        "hole {h} vertex ({}, {}) lies outside the boundary",
                        v.x, v.y
                    )));
                }
            }
            for (a, b) in hole.edges() {
                for (c, d) in self.boundary.edges() {
                    if crate::geom::segments_intersect(a, b, c, d) {
                        return Err(MeshError::InvalidPolygon(format!(
                            "hole {h} crosses the boundary"
                        )));
                    }
                }
            }
        }
        for i in 0..self.holes.len() {
            for j in (i + 1)..self.holes.len() {
                for (a, b) in self.holes[i].edges() {
                    for (c, d) in self.holes[j].edges() {
                        if crate::geom::segments_intersect(a, b, c, d) {
                            return Err(MeshError::InvalidPolygon(format!(
                                "holes {i} and {j} intersect"
                            )));
                        }
                    }
                }
                if self.holes[j].contains(self.holes[i].vertices[0]) {
                    return Err(MeshError::InvalidPolygon(format!(
                        "hole {i} lies inside hole {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn contains(&self, p: Point) -> bool {
        self.boundary.contains(p) && !self.holes.iter().any(|h| h.contains(p))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MeshParams {
    /// Vertex-spacing floor; refinement never creates shorter edges.
    pub min_edge: f64,
    /// Target upper edge length inside the domain.
    pub max_edge: f64,
    /// Minimum interior angle in degrees; must be below 30 for termination.
    pub min_angle_deg: f64,
    /// Mesh a coarse band outside the domain boundary.
    pub exterior_band: bool,
}

impl Default for MeshParams {
    fn default() -> Self {
        MeshParams {
            min_edge: 0.5,
            max_edge: 0.7,
            min_angle_deg: 25.0,
            exterior_band: true,
        }
    }
}

/// Where a projected point landed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointStatus {
    InDomain,
    /// Inside the meshed exterior band: interpolation weights exist but the
    /// point is outside the study domain.
    InBand,
    /// Not covered by any triangle; the row is zero and must not be used.
    Outside,
}

/// Sparse interpolation from mesh vertices to a point set.
pub struct Projector {
    pub matrix: CsMat<f64>,
    pub status: Vec<PointStatus>,
}

impl Projector {
    pub fn all_in_domain(&self) -> bool {
        self.status.iter().all(|s| *s == PointStatus::InDomain)
    }
}

#[derive(Debug, Clone)]
pub struct Mesh {
    vertices: Vec<Point>,
    triangles: Vec<[usize; 3]>,
    boundary_flags: Vec<bool>,
    vertex_in_domain: Vec<bool>,
    triangle_in_domain: Vec<bool>,
    exceptions: Vec<MeshException>,
    // uniform-grid point locator
    grid_origin: Point,
    grid_cell: f64,
    grid_dims: (usize, usize),
    grid_cells: Vec<Vec<usize>>,
}

impl Mesh {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn boundary_flags(&self) -> &[bool] {
        &self.boundary_flags
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Vertices inside the study domain; the default pseudo-site set.
    pub fn domain_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| self.vertex_in_domain[i])
            .collect()
    }

    pub fn vertex_in_domain(&self) -> &[bool] {
        &self.vertex_in_domain
    }

    pub fn exceptions(&self) -> &[MeshException] {
        &self.exceptions
    }

    pub fn total_area(&self) -> f64 {
        self.triangles
            .iter()
            .map(|t| {
                0.5 * signed_area2(
                    self.vertices[t[0]],
                    self.vertices[t[1]],
                    self.vertices[t[2]],
                )
            })
            .sum()
    }

    fn grid_index(&self, p: Point) -> Option<(usize, usize)> {
        let ix = ((p.x - self.grid_origin.x) / self.grid_cell).floor();
        let iy = ((p.y - self.grid_origin.y) / self.grid_cell).floor();
        if ix < 0.0 || iy < 0.0 {
            return None;
        }
        let (nx, ny) = self.grid_dims;
        let (ix, iy) = (ix as usize, iy as usize);
        if ix >= nx || iy >= ny {
            return None;
        }
        Some((ix, iy))
    }

    /// Containing triangle index for a point, if any.
    pub fn locate(&self, p: Point) -> Option<usize> {
        let (ix, iy) = self.grid_index(p)?;
        let cell = &self.grid_cells[iy * self.grid_dims.0 + ix];
        for &t in cell {
            let [a, b, c] = self.triangles[t];
            let (pa, pb, pc) = (self.vertices[a], self.vertices[b], self.vertices[c]);
            if orient(pa, pb, p) >= 0.0 && orient(pb, pc, p) >= 0.0 && orient(pc, pa, p) >= 0.0 {
                return Some(t);
            }
        }
        None
    }

    /// Barycentric weights of `p` in its containing triangle.
    pub fn barycentric(&self, p: Point) -> Option<([usize; 3], [f64; 3], PointStatus)> {
        let t = self.locate(p)?;
        let [a, b, c] = self.triangles[t];
        let (pa, pb, pc) = (self.vertices[a], self.vertices[b], self.vertices[c]);
        let total = signed_area2(pa, pb, pc);
        let mut w = [
            signed_area2(p, pb, pc) / total,
            signed_area2(pa, p, pc) / total,
            signed_area2(pa, pb, p) / total,
        ];
        for wi in w.iter_mut() {
            if *wi < 0.0 {
                *wi = 0.0;
            }
        }
        let s: f64 = w.iter().sum();
        for wi in w.iter_mut() {
            *wi /= s;
        }
        let status = if self.triangle_in_domain[t] {
            PointStatus::InDomain
        } else {
            PointStatus::InBand
        };
        Some(([a, b, c], w, status))
    }

    /// Builds the (n_points x n_vertices) barycentric interpolation matrix.
    /// Out-of-domain points get a zero row and an `Outside` flag rather than
    /// being silently dropped.
    pub fn projector(&self, points: &[Point]) -> Projector {
        let mut tri = TriMat::new((points.len(), self.vertices.len()));
        let mut status = Vec::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            match self.barycentric(*p) {
                Some((idx, w, st)) => {
                    for k in 0..3 {
                        if w[k] != 0.0 {
                            tri.add_triplet(i, idx[k], w[k]);
                        }
                    }
                    status.push(st);
                }
                None => status.push(PointStatus::Outside),
            }
        }
        Projector {
            matrix: tri.to_csr(),
            status,
        }
    }

    /// Plain-text dump: vertex lines then triangle index lines.
    pub fn export_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# mesh v1 vertices {} triangles {}\n",
            self.vertices.len(),
            self.triangles.len()
        ));
        for (v, p) in self.vertices.iter().enumerate() {
            out.push_str(&format!(
                "v {} {} {} {}\n",
                p.x, p.y, self.boundary_flags[v] as u8, self.vertex_in_domain[v] as u8
            ));
        }
        for t in &self.triangles {
            out.push_str(&format!("t {} {} {}\n", t[0], t[1], t[2]));
        }
        out
    }
}

/// Subdivides ring edges so no piece exceeds `spacing`, returning the closed
/// point sequence.
fn presplit_ring(ring: &Ring, spacing: f64) -> Vec<Point> {
    let mut pts = Vec::new();
    for (a, b) in ring.edges() {
        let len = a.dist(b);
        let n = (len / spacing).ceil().max(1.0) as usize;
        for k in 0..n {
            let t = k as f64 / n as f64;
            pts.push(Point::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)));
        }
    }
    pts
}

pub fn build_mesh(domain: &DomainPolygon, params: &MeshParams) -> Result<Mesh, MeshError> {
    if !(params.min_edge > 0.0 && params.min_edge < params.max_edge) {
        return Err(MeshError::InvalidParams(format!(
            "need 0 < min_edge < max_edge, got {} and {}",
            params.min_edge, params.max_edge
        )));
    }
    if !(params.min_angle_deg > 0.0 && params.min_angle_deg < 30.0) {
        return Err(MeshError::InvalidParams(format!(
            "min_angle {} degrees outside (0, 30)",
            params.min_angle_deg
        )));
    }
    domain.validate()?;

    let (lo, hi) = domain.boundary.bbox();
    let band_width = BAND_WIDTH_FACTOR * params.max_edge;
    let (outer_lo, outer_hi) = if params.exterior_band {
        (
            Point::new(lo.x - band_width, lo.y - band_width),
            Point::new(hi.x + band_width, hi.y + band_width),
        )
    } else {
        (lo, hi)
    };

    let mut t = Triangulation::new(outer_lo, outer_hi);

    let mut insert_ring = |t: &mut Triangulation, ring: &Ring, spacing: f64| {
        let pts = presplit_ring(ring, spacing);
        let ids: Vec<usize> = pts.iter().map(|p| t.insert(*p, 0)).collect();
        for i in 0..ids.len() {
            let a = ids[i];
            let b = ids[(i + 1) % ids.len()];
            if a != b {
                t.constrain(a, b);
            }
        }
    };

    insert_ring(&mut t, &domain.boundary, params.max_edge);
    for hole in &domain.holes {
        insert_ring(&mut t, hole, params.max_edge);
    }
    if params.exterior_band {
        let rect = Ring::new(vec![
            outer_lo,
            Point::new(outer_hi.x, outer_lo.y),
            outer_hi,
            Point::new(outer_lo.x, outer_hi.y),
        ]);
        insert_ring(&mut t, &rect, BAND_EDGE_FACTOR * params.max_edge);
    }

    recover_segments(&mut t, params.min_edge).map_err(|e| MeshError::RefinementFailure {
        x: 0.5 * (lo.x + hi.x),
        y: 0.5 * (lo.y + hi.y),
        detail: e,
    })?;

    let in_rect = |p: Point| {
        p.x >= outer_lo.x && p.x <= outer_hi.x && p.y >= outer_lo.y && p.y <= outer_hi.y
    };
    let keep_at = |p: Point| {
        if domain.holes.iter().any(|h| h.contains(p)) {
            return false;
        }
        if params.exterior_band {
            in_rect(p)
        } else {
            domain.boundary.contains(p)
        }
    };
    let size_at = |p: Point| {
        if domain.contains(p) {
            params.max_edge
        } else {
            BAND_EDGE_FACTOR * params.max_edge
        }
    };

    let outcome = refine(
        &mut t,
        &RefineParams {
            min_edge: params.min_edge,
            min_angle_deg: params.min_angle_deg,
            size_at: &size_at,
            keep_at: &keep_at,
        },
    )
    .map_err(|e| MeshError::RefinementFailure {
        x: 0.5 * (lo.x + hi.x),
        y: 0.5 * (lo.y + hi.y),
        detail: e,
    })?;

    // an interior triangle (no constrained vertex) violating the angle bound
    // means refinement could not satisfy the requested quality
    for ex in &outcome.exceptions {
        if let MeshException::SmallAngle {
            centroid,
            angle_deg,
            touches_constraint: false,
        } = ex
        {
            return Err(MeshError::RefinementFailure {
                x: centroid.x,
                y: centroid.y,
                detail: format!(
                    "interior triangle keeps minimum angle {angle_deg:.2} below the requested bound"
                ),
            });
        }
    }

    // extract kept triangles and remap vertices
    let mut kept: Vec<([usize; 3], bool)> = Vec::new();
    for (i, tri) in t.real_triangles() {
        let c = Point::new(
            (t.verts[tri.v[0]].x + t.verts[tri.v[1]].x + t.verts[tri.v[2]].x) / 3.0,
            (t.verts[tri.v[0]].y + t.verts[tri.v[1]].y + t.verts[tri.v[2]].y) / 3.0,
        );
        if keep_at(c) {
            kept.push((tri.v, domain.contains(c)));
        }
        let _ = i;
    }
    if kept.is_empty() {
        return Err(MeshError::InvalidPolygon(
            "no triangles inside the domain".into(),
        ));
    }

    let mut remap = vec![usize::MAX; t.verts.len()];
    let mut vertices = Vec::new();
    let mut triangles = Vec::new();
    let mut triangle_in_domain = Vec::new();
    for (v, in_dom) in &kept {
        let mut tv = [0usize; 3];
        for k in 0..3 {
            let old = v[k];
            if remap[old] == usize::MAX {
                remap[old] = vertices.len();
                vertices.push(t.verts[old]);
            }
            tv[k] = remap[old];
        }
        triangles.push(tv);
        triangle_in_domain.push(*in_dom);
    }

    // boundary vertices: endpoints of edges with exactly one kept triangle
    let mut edge_count = std::collections::BTreeMap::new();
    for tv in &triangles {
        for k in 0..3 {
            let a = tv[(k + 1) % 3];
            let b = tv[(k + 2) % 3];
            let key = if a < b { (a, b) } else { (b, a) };
            *edge_count.entry(key).or_insert(0usize) += 1;
        }
    }
    let mut boundary_flags = vec![false; vertices.len()];
    for (&(a, b), &n) in &edge_count {
        if n == 1 {
            boundary_flags[a] = true;
            boundary_flags[b] = true;
        }
    }

    let mut vertex_in_domain = vec![false; vertices.len()];
    for (tv, &in_dom) in triangles.iter().zip(&triangle_in_domain) {
        if in_dom {
            for &v in tv {
                vertex_in_domain[v] = true;
            }
        }
    }

    // build the locator grid
    let cell = params.max_edge.max(1e-12);
    let pad = 1e-9 * (1.0 + cell);
    let g_lo = Point::new(outer_lo.x - pad, outer_lo.y - pad);
    let nx = (((outer_hi.x - g_lo.x) / cell).ceil() as usize + 1).max(1);
    let ny = (((outer_hi.y - g_lo.y) / cell).ceil() as usize + 1).max(1);
    let mut grid_cells = vec![Vec::new(); nx * ny];
    for (ti, tv) in triangles.iter().enumerate() {
        let xs = tv.map(|v| vertices[v].x);
        let ys = tv.map(|v| vertices[v].y);
        let x0 = (((xs.iter().copied().fold(f64::INFINITY, f64::min) - g_lo.x) / cell).floor()
            as usize)
            .min(nx - 1);
        let x1 = (((xs.iter().copied().fold(f64::NEG_INFINITY, f64::max) - g_lo.x) / cell)
            .floor() as usize)
            .min(nx - 1);
        let y0 = (((ys.iter().copied().fold(f64::INFINITY, f64::min) - g_lo.y) / cell).floor()
            as usize)
            .min(ny - 1);
        let y1 = (((ys.iter().copied().fold(f64::NEG_INFINITY, f64::max) - g_lo.y) / cell)
            .floor() as usize)
            .min(ny - 1);
        for iy in y0..=y1 {
            for ix in x0..=x1 {
                grid_cells[iy * nx + ix].push(ti);
            }
        }
    }

    Ok(Mesh {
        vertices,
        triangles,
        boundary_flags,
        vertex_in_domain,
        triangle_in_domain,
        exceptions: outcome.exceptions,
        grid_origin: g_lo,
        grid_cell: cell,
        grid_dims: (nx, ny),
        grid_cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::angles;

    fn unit_square() -> DomainPolygon {
        DomainPolygon::rectangle(Point::new(0.0, 0.0), Point::new(1.0, 1.0))
    }

    fn no_band(min_edge: f64, max_edge: f64) -> MeshParams {
        MeshParams {
            min_edge,
            max_edge,
            min_angle_deg: 25.0,
            exterior_band: false,
        }
    }

    #[test]
    fn unit_square_quality() {
        let mesh = build_mesh(&unit_square(), &no_band(0.3, 0.5)).unwrap();
        assert!(mesh.exceptions().is_empty(), "{:?}", mesh.exceptions());
        for t in mesh.triangles() {
            let [a, b, c] = t.map(|v| mesh.vertices()[v]);
            assert!(signed_area2(a, b, c) > 0.0, "triangle not CCW");
            let min_ang = angles(a, b, c)
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min)
                .to_degrees();
            assert!(min_ang >= 25.0 - 1e-9, "angle {min_ang}");
            for k in 0..3 {
                let e = [a, b, c][k].dist([a, b, c][(k + 1) % 3]);
                assert!(e <= 0.5 + 1e-9, "edge {e}");
                assert!(e >= 0.3 - 1e-9, "edge {e} below floor");
            }
        }
        assert!((mesh.total_area() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn degenerate_polygon_rejected() {
        let flat = DomainPolygon::new(
            vec![
                Point::new(0.0, 0.0),
                Point::new(0.5, 0.0),
                Point::new(1.0, 0.0),
            ],
            vec![],
        );
        assert!(matches!(
            build_mesh(&flat, &no_band(0.1, 0.3)),
            Err(MeshError::InvalidPolygon(_))
        ));
    }

    #[test]
    fn refinement_monotone_in_min_edge() {
        // derived oracle: run the generator at three resolutions and check
        // the vertex counts increase strictly
        let counts: Vec<usize> = [0.4, 0.2, 0.1]
            .iter()
            .map(|&me| {
                build_mesh(&unit_square(), &no_band(me, 0.5))
                    .unwrap()
                    .n_vertices()
            })
            .collect();
        assert!(counts[0] <= counts[1] && counts[1] <= counts[2], "{counts:?}");
        assert!(counts[0] < counts[2], "{counts:?}");
    }

    #[test]
    fn projector_reproduces_linear_functions() {
        let mesh = build_mesh(&unit_square(), &no_band(0.15, 0.25)).unwrap();
        let f = |p: Point| 2.0 * p.x + 3.0 * p.y - 1.0;
        let fv: Vec<f64> = mesh.vertices().iter().map(|p| f(*p)).collect();
        let pts = vec![
            Point::new(0.371, 0.642),
            Point::new(0.05, 0.95),
            Point::new(0.5, 0.5),
        ];
        let proj = mesh.projector(&pts);
        assert!(proj.all_in_domain());
        for (i, p) in pts.iter().enumerate() {
            let mut acc = 0.0;
            let mut row_sum = 0.0;
            for (v, &w) in proj.matrix.outer_view(i).unwrap().iter() {
                acc += w * fv[v];
                row_sum += w;
            }
            assert!((acc - f(*p)).abs() < 1e-12, "linear reproduction failed");
            assert!((row_sum - 1.0).abs() < 1e-12, "partition of unity failed");
        }
    }

    #[test]
    fn projector_vertex_and_centroid_identities() {
        let mesh = build_mesh(&unit_square(), &no_band(0.2, 0.35)).unwrap();
        // exactly at a vertex: single unit weight
        let v3 = mesh.vertices()[3];
        let proj = mesh.projector(&[v3]);
        let row: Vec<(usize, f64)> = proj
            .matrix
            .outer_view(0)
            .unwrap()
            .iter()
            .map(|(c, &v)| (c, v))
            .collect();
        let w3 = row.iter().find(|(c, _)| *c == 3).map(|(_, w)| *w).unwrap();
        assert!((w3 - 1.0).abs() < 1e-12);
        assert!(row.iter().all(|(c, w)| *c == 3 || w.abs() < 1e-12));
        // at a triangle centroid: weights 1/3 each
        let t0 = mesh.triangles()[0];
        let c = Point::new(
            t0.iter().map(|&v| mesh.vertices()[v].x).sum::<f64>() / 3.0,
            t0.iter().map(|&v| mesh.vertices()[v].y).sum::<f64>() / 3.0,
        );
        let proj = mesh.projector(&[c]);
        for (_, &w) in proj.matrix.outer_view(0).unwrap().iter() {
            assert!((w - 1.0 / 3.0).abs() < 1e-9);
        }
    }

    #[test]
    fn out_of_domain_points_flagged() {
        let mesh = build_mesh(&unit_square(), &no_band(0.2, 0.35)).unwrap();
        let proj = mesh.projector(&[Point::new(5.0, 5.0), Point::new(0.5, 0.5)]);
        assert_eq!(proj.status[0], PointStatus::Outside);
        assert_eq!(proj.status[1], PointStatus::InDomain);
    }

    #[test]
    fn exterior_band_classification() {
        let mesh = build_mesh(
            &unit_square(),
            &MeshParams {
                min_edge: 0.2,
                max_edge: 0.35,
                min_angle_deg: 25.0,
                exterior_band: true,
            },
        )
        .unwrap();
        // band grows the mesh beyond the domain
        assert!(mesh.total_area() > 1.5);
        let proj = mesh.projector(&[Point::new(-0.5, 0.5), Point::new(0.5, 0.5)]);
        assert_eq!(proj.status[0], PointStatus::InBand);
        assert_eq!(proj.status[1], PointStatus::InDomain);
        // pseudo-site candidates stay inside the domain
        for &v in &mesh.domain_vertices() {
            let p = mesh.vertices()[v];
            assert!(p.x > -1e-9 && p.x < 1.0 + 1e-9 && p.y > -1e-9 && p.y < 1.0 + 1e-9);
        }
    }

    #[test]
    fn hole_is_excluded() {
        let domain = DomainPolygon::new(
            vec![
                Point::new(0.0, 0.0),
                Point::new(2.0, 0.0),
                Point::new(2.0, 2.0),
                Point::new(0.0, 2.0),
            ],
            vec![vec![
                Point::new(0.8, 0.8),
                Point::new(1.2, 0.8),
                Point::new(1.2, 1.2),
                Point::new(0.8, 1.2),
            ]],
        );
        let mesh = build_mesh(&domain, &no_band(0.1, 0.2)).unwrap();
        let proj = mesh.projector(&[Point::new(1.0, 1.0)]);
        assert_eq!(proj.status[0], PointStatus::Outside);
        assert!((mesh.total_area() - (4.0 - 0.16)).abs() < 1e-8);
    }

    #[test]
    fn mesh_is_deterministic() {
        let a = build_mesh(&unit_square(), &no_band(0.2, 0.3)).unwrap();
        let b = build_mesh(&unit_square(), &no_band(0.2, 0.3)).unwrap();
        assert_eq!(a.export_text(), b.export_text());
    }
}
