//! Planar geometry primitives shared by the mesh and io modules.

/// A point in the scaled planar coordinate frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(&self, other: Point) -> f64 {
        self.dist2(other).sqrt()
    }

    pub fn dist2(&self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn mid(&self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }
}

fn coord(p: Point) -> robust::Coord<f64> {
    robust::Coord { x: p.x, y: p.y }
}

/// Exact sign of the orientation of (a, b, c): positive for counter-clockwise.
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    robust::orient2d(coord(a), coord(b), coord(c))
}

/// Exact in-circumcircle test: positive when `d` lies strictly inside the
/// circumcircle of the counter-clockwise triangle (a, b, c).
pub fn in_circle(a: Point, b: Point, c: Point, d: Point) -> f64 {
    robust::incircle(coord(a), coord(b), coord(c), coord(d))
}

/// Twice the signed area of triangle (a, b, c).
pub fn signed_area2(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Circumcenter of triangle (a, b, c); `None` for (near-)degenerate triangles.
pub fn circumcenter(a: Point, b: Point, c: Point) -> Option<Point> {
    let d = 2.0 * signed_area2(a, b, c);
    if d.abs() < 1e-300 {
        return None;
    }
    let a2 = a.x * a.x + a.y * a.y;
    let b2 = b.x * b.x + b.y * b.y;
    let c2 = c.x * c.x + c.y * c.y;
    let ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
    let uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
    Some(Point::new(ux, uy))
}

/// Interior angles of the triangle, in radians, one per vertex.
pub fn angles(a: Point, b: Point, c: Point) -> [f64; 3] {
    let la = b.dist2(c);
    let lb = a.dist2(c);
    let lc = a.dist2(b);
    let ang = |opp2: f64, l1: f64, l2: f64| -> f64 {
        // law of cosines, clamped against rounding
        let cos = ((l1 + l2 - opp2) / (2.0 * (l1 * l2).sqrt())).clamp(-1.0, 1.0);
        cos.acos()
    };
    [ang(la, lb, lc), ang(lb, la, lc), ang(lc, la, lb)]
}

/// Does the closed segment (a, b) properly intersect (c, d)?
/// Shared endpoints do not count as intersections.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let shares = |p: Point, q: Point| p == q;
    if shares(a, c) || shares(a, d) || shares(b, c) || shares(b, d) {
        return false;
    }
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    let on_segment = |p: Point, q: Point, r: Point| -> bool {
        orient(p, q, r) == 0.0
            && r.x >= p.x.min(q.x)
            && r.x <= p.x.max(q.x)
            && r.y >= p.y.min(q.y)
            && r.y <= p.y.max(q.y)
    };
    on_segment(c, d, a) || on_segment(c, d, b) || on_segment(a, b, c) || on_segment(a, b, d)
}

/// A closed polygonal ring. Vertices are listed without repeating the first.
#[derive(Debug, Clone)]
pub struct Ring {
    pub vertices: Vec<Point>,
}

impl Ring {
    pub fn new(vertices: Vec<Point>) -> Self {
        Ring { vertices }
    }

    pub fn signed_area(&self) -> f64 {
        let n = self.vertices.len();
        let mut acc = 0.0;
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            acc += p.x * q.y - q.x * p.y;
        }
        0.5 * acc
    }

    /// Even-odd point-in-ring test. Points on the boundary may land on
    /// either side; callers needing exact boundary semantics should test
    /// separately.
    pub fn contains(&self, p: Point) -> bool {
        let n = self.vertices.len();
        let mut inside = false;
        let mut j = n - 1;
        for i in 0..n {
            let vi = self.vertices[i];
            let vj = self.vertices[j];
            if ((vi.y > p.y) != (vj.y > p.y))
                && (p.x < (vj.x - vi.x) * (p.y - vi.y) / (vj.y - vi.y) + vi.x)
            {
                inside = !inside;
            }
            j = i;
        }
        inside
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Checks the ring is usable as a constraint boundary: at least 3
    /// distinct vertices, no zero-length or duplicated edges, nonzero area,
    /// and no self-intersections.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.vertices.len();
        if n < 3 {
            return Err(format!("ring has {n} vertices, need at least 3"));
        }
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            if p == q {
                return Err(format!("zero-length edge at ring vertex {i}"));
            }
        }
        if self.signed_area().abs() < 1e-300 {
            return Err("ring encloses zero area (collinear vertices)".into());
        }
        let edges: Vec<(Point, Point)> = self.edges().collect();
        for i in 0..n {
            for j in (i + 1)..n {
                // adjacent edges share an endpoint and are allowed to touch
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                if segments_intersect(edges[i].0, edges[i].1, edges[j].0, edges[j].1) {
                    return Err(format!("ring edges {i} and {j} intersect"));
                }
            }
        }
        Ok(())
    }

    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in &self.vertices {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }
}
