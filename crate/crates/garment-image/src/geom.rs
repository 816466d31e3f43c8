//! Small 2D geometry helpers shared across the crate.
//!
//! All coordinates are `f64` centimetres unless a caller says otherwise
//! (the solver works in grid-lattice units with the same types).

use std::ops::{Add, Mul, Neg, Sub};

/// A 2D point / vector in pattern or canvas coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ZERO: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product, positive when `o` is CCW from `self`.
    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm2().sqrt()
    }

    pub fn dist(self, o: Point2) -> f64 {
        (self - o).norm()
    }

    /// Rotate 90 degrees counterclockwise.
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    pub fn lerp(self, o: Point2, t: f64) -> Point2 {
        Point2::new(self.x + (o.x - self.x) * t, self.y + (o.y - self.y) * t)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// Evaluate a quadratic Bezier at parameter `t`.
pub fn quad_bezier(s: Point2, c: Point2, e: Point2, t: f64) -> Point2 {
    let u = 1.0 - t;
    s * (u * u) + c * (2.0 * u * t) + e * (t * t)
}

/// Arc length of a quadratic Bezier by recursive subdivision down to the
/// given flatness (max deviation of the control point from the chord).
pub fn quad_bezier_length_adaptive(s: Point2, c: Point2, e: Point2, flatness: f64) -> f64 {
    let chord = s.dist(e);
    let hull = s.dist(c) + c.dist(e);
    if hull - chord <= flatness {
        return (hull + chord) * 0.5;
    }
    // de Casteljau split at t = 0.5
    let sc = s.lerp(c, 0.5);
    let ce = c.lerp(e, 0.5);
    let m = sc.lerp(ce, 0.5);
    quad_bezier_length_adaptive(s, sc, m, flatness) + quad_bezier_length_adaptive(m, ce, e, flatness)
}

/// Squared distance from `p` to the segment `a`-`b`.
pub fn point_segment_dist2(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = b - a;
    let len2 = ab.norm2();
    if len2 <= 0.0 {
        return (p - a).norm2();
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm2()
}

/// Signed area of a closed polygon (positive for CCW).
pub fn polygon_signed_area(pts: &[Point2]) -> f64 {
    let n = pts.len();
    if n < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        acc += a.cross(b);
    }
    acc * 0.5
}

/// Area centroid of a closed polygon. Falls back to the vertex mean for
/// degenerate (near zero area) inputs.
pub fn polygon_centroid(pts: &[Point2]) -> Point2 {
    let n = pts.len();
    let area = polygon_signed_area(pts);
    if n == 0 {
        return Point2::ZERO;
    }
    if area.abs() < 1e-12 {
        let mut m = Point2::ZERO;
        for p in pts {
            m = m + *p;
        }
        return m * (1.0 / n as f64);
    }
    let mut cx = 0.0;
    let mut cy = 0.0;
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        let w = a.cross(b);
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    Point2::new(cx / (6.0 * area), cy / (6.0 * area))
}

/// Even-odd test of `p` against one closed polygon ring.
/// Points within `boundary_eps` of the ring count as inside.
pub fn point_in_ring(p: Point2, ring: &[Point2], boundary_eps: f64) -> bool {
    if ring.len() < 3 {
        return false;
    }
    if boundary_eps > 0.0 {
        let eps2 = boundary_eps * boundary_eps;
        for i in 0..ring.len() {
            let a = ring[i];
            let b = ring[(i + 1) % ring.len()];
            if point_segment_dist2(p, a, b) <= eps2 {
                return true;
            }
        }
    }
    ray_crossings(p, ring) % 2 == 1
}

/// Even-odd test over several rings (outer boundary plus holes).
/// Boundary points count as inside, including hole boundaries.
pub fn point_in_rings(p: Point2, rings: &[Vec<Point2>], boundary_eps: f64) -> bool {
    if boundary_eps > 0.0 {
        let eps2 = boundary_eps * boundary_eps;
        for ring in rings {
            for i in 0..ring.len() {
                let a = ring[i];
                let b = ring[(i + 1) % ring.len()];
                if point_segment_dist2(p, a, b) <= eps2 {
                    return true;
                }
            }
        }
    }
    let mut crossings = 0usize;
    for ring in rings {
        crossings += ray_crossings(p, ring);
    }
    crossings % 2 == 1
}

fn ray_crossings(p: Point2, ring: &[Point2]) -> usize {
    // Horizontal ray to +x. Half-open rule on y avoids double counting at
    // vertices.
    let mut count = 0usize;
    let n = ring.len();
    for i in 0..n {
        let a = ring[i];
        let b = ring[(i + 1) % n];
        let (lo, hi) = if a.y <= b.y { (a, b) } else { (b, a) };
        if p.y >= lo.y && p.y < hi.y {
            let t = (p.y - lo.y) / (hi.y - lo.y);
            let x = lo.x + (hi.x - lo.x) * t;
            if x > p.x {
                count += 1;
            }
        }
    }
    count
}

/// True if segments a-b and c-d properly intersect (interior crossing).
pub fn segments_properly_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let d1 = (b - a).cross(c - a);
    let d2 = (b - a).cross(d - a);
    let d3 = (d - c).cross(a - c);
    let d4 = (d - c).cross(b - c);
    (d1 * d2 < 0.0) && (d3 * d4 < 0.0)
}

/// Self-intersection test for a closed polyline, skipping adjacent segments.
pub fn ring_self_intersects(ring: &[Point2]) -> bool {
    let n = ring.len();
    if n < 4 {
        return false;
    }
    for i in 0..n {
        let a = ring[i];
        let b = ring[(i + 1) % n];
        for j in (i + 2)..n {
            // Skip the segment sharing a vertex with i (wrap case).
            if i == 0 && j == n - 1 {
                continue;
            }
            let c = ring[j];
            let d = ring[(j + 1) % n];
            if segments_properly_intersect(a, b, c, d) {
                return true;
            }
        }
    }
    false
}

/// Axis-aligned bounding box of a point set. Returns (min, max).
pub fn bbox(pts: &[Point2]) -> (Point2, Point2) {
    let mut min = Point2::new(f64::INFINITY, f64::INFINITY);
    let mut max = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in pts {
        min.x = min.x.min(p.x);
        min.y = min.y.min(p.y);
        max.x = max.x.max(p.x);
        max.y = max.y.max(p.y);
    }
    (min, max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_area_orientation() {
        let ccw = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        assert!((polygon_signed_area(&ccw) - 1.0).abs() < 1e-12);
        let cw: Vec<_> = ccw.iter().rev().cloned().collect();
        assert!((polygon_signed_area(&cw) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn ring_containment() {
        let sq = vec![
            Point2::new(0.0, 0.0),
            Point2::new(10.0, 0.0),
            Point2::new(10.0, 10.0),
            Point2::new(0.0, 10.0),
        ];
        assert!(point_in_ring(Point2::new(5.0, 5.0), &sq, 1e-9));
        assert!(!point_in_ring(Point2::new(15.0, 5.0), &sq, 1e-9));
        // exactly on the boundary counts as inside
        assert!(point_in_ring(Point2::new(10.0, 5.0), &sq, 1e-9));
    }

    #[test]
    fn bezier_length_matches_line_case() {
        let s = Point2::new(0.0, 0.0);
        let e = Point2::new(4.0, 0.0);
        let c = Point2::new(2.0, 0.0);
        let len = quad_bezier_length_adaptive(s, c, e, 1e-9);
        assert!((len - 4.0).abs() < 1e-6);
    }

    #[test]
    fn self_intersection_detects_bowtie() {
        let bowtie = vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 2.0),
            Point2::new(2.0, 0.0),
            Point2::new(0.0, 2.0),
        ];
        assert!(ring_self_intersects(&bowtie));
        let square = vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 2.0),
            Point2::new(0.0, 2.0),
        ];
        assert!(!ring_self_intersects(&square));
    }
}
