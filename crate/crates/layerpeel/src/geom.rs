//! 2D geometry primitives: points, affine transforms, cubic Bézier
//! segments, adaptive flattening, and polygon predicates.

use std::ops::{Add, Mul, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn dist_sq(self, other: Point) -> f64 {
        let d = self - other;
        d.dot(d)
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

/// Row-major 2x3 affine transform: `(x, y) -> (a x + c y + e, b x + d y + f)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Affine {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

impl Affine {
    pub const IDENTITY: Affine = Affine {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
        e: 0.0,
        f: 0.0,
    };

    pub fn translate(tx: f64, ty: f64) -> Affine {
        Affine {
            e: tx,
            f: ty,
            ..Affine::IDENTITY
        }
    }

    pub fn scale(sx: f64, sy: f64) -> Affine {
        Affine {
            a: sx,
            d: sy,
            ..Affine::IDENTITY
        }
    }

    pub fn rotate_deg(deg: f64) -> Affine {
        let r = deg.to_radians();
        let (s, c) = r.sin_cos();
        Affine {
            a: c,
            b: s,
            c: -s,
            d: c,
            e: 0.0,
            f: 0.0,
        }
    }

    pub fn skew_x_deg(deg: f64) -> Affine {
        Affine {
            c: deg.to_radians().tan(),
            ..Affine::IDENTITY
        }
    }

    pub fn skew_y_deg(deg: f64) -> Affine {
        Affine {
            b: deg.to_radians().tan(),
            ..Affine::IDENTITY
        }
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn mul(self, o: Affine) -> Affine {
        Affine {
            a: self.a * o.a + self.c * o.b,
            b: self.b * o.a + self.d * o.b,
            c: self.a * o.c + self.c * o.d,
            d: self.b * o.c + self.d * o.d,
            e: self.a * o.e + self.c * o.f + self.e,
            f: self.b * o.e + self.d * o.f + self.f,
        }
    }

    pub fn apply(self, p: Point) -> Point {
        Point::new(
            self.a * p.x + self.c * p.y + self.e,
            self.b * p.x + self.d * p.y + self.f,
        )
    }

    /// Uniform length-scale approximation, `sqrt(|det|)`.
    pub fn uniform_scale(self) -> f64 {
        (self.a * self.d - self.b * self.c).abs().sqrt()
    }
}

/// Cubic Bézier segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicSeg {
    pub p0: Point,
    pub p1: Point,
    pub p2: Point,
    pub p3: Point,
}

impl CubicSeg {
    pub fn new(p0: Point, p1: Point, p2: Point, p3: Point) -> Self {
        CubicSeg { p0, p1, p2, p3 }
    }

    /// Straight line as a degenerate cubic with collinear control points.
    pub fn line(p0: Point, p3: Point) -> Self {
        CubicSeg {
            p0,
            p1: p0.lerp(p3, 1.0 / 3.0),
            p2: p0.lerp(p3, 2.0 / 3.0),
            p3,
        }
    }

    pub fn eval(&self, t: f64) -> Point {
        let u = 1.0 - t;
        self.p0 * (u * u * u)
            + self.p1 * (3.0 * u * u * t)
            + self.p2 * (3.0 * u * t * t)
            + self.p3 * (t * t * t)
    }

    pub fn transform(&self, m: Affine) -> CubicSeg {
        CubicSeg {
            p0: m.apply(self.p0),
            p1: m.apply(self.p1),
            p2: m.apply(self.p2),
            p3: m.apply(self.p3),
        }
    }

    fn split(&self) -> (CubicSeg, CubicSeg) {
        let ab = self.p0.lerp(self.p1, 0.5);
        let bc = self.p1.lerp(self.p2, 0.5);
        let cd = self.p2.lerp(self.p3, 0.5);
        let abc = ab.lerp(bc, 0.5);
        let bcd = bc.lerp(cd, 0.5);
        let mid = abc.lerp(bcd, 0.5);
        (
            CubicSeg::new(self.p0, ab, abc, mid),
            CubicSeg::new(mid, bcd, cd, self.p3),
        )
    }

    /// Max distance of the interior control points from the chord. The
    /// curve lies in the control hull, so this bounds its deviation.
    fn flatness(&self) -> f64 {
        let chord = self.p3 - self.p0;
        let len = chord.norm();
        if len < 1e-12 {
            return self
                .p1
                .dist(self.p0)
                .max(self.p2.dist(self.p0));
        }
        let d1 = cross(chord, self.p1 - self.p0).abs() / len;
        let d2 = cross(chord, self.p2 - self.p0).abs() / len;
        // Control points may also overshoot past the chord ends.
        let t1 = (self.p1 - self.p0).dot(chord) / (len * len);
        let t2 = (self.p2 - self.p0).dot(chord) / (len * len);
        let overshoot = |t: f64, p: Point| -> f64 {
            if t < 0.0 {
                p.dist(self.p0)
            } else if t > 1.0 {
                p.dist(self.p3)
            } else {
                0.0
            }
        };
        d1.max(d2)
            .max(overshoot(t1, self.p1))
            .max(overshoot(t2, self.p2))
    }

    /// Append the polyline approximation of this segment to `out`,
    /// excluding `p0` (the caller owns the running start point).
    pub fn flatten_into(&self, tolerance: f64, out: &mut Vec<Point>) {
        // Depth cap keeps degenerate inputs from recursing forever.
        fn rec(seg: &CubicSeg, tol: f64, depth: u32, out: &mut Vec<Point>) {
            if depth >= 24 || seg.flatness() <= tol {
                out.push(seg.p3);
                return;
            }
            let (l, r) = seg.split();
            rec(&l, tol, depth + 1, out);
            rec(&r, tol, depth + 1, out);
        }
        rec(self, tolerance.max(1e-9), 0, out);
    }
}

pub fn cross(a: Point, b: Point) -> f64 {
    a.x * b.y - a.y * b.x
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl BBox {
    pub fn empty() -> BBox {
        BBox {
            min_x: f64::INFINITY,
            min_y: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.min_x > self.max_x || self.min_y > self.max_y
    }

    pub fn expand(&mut self, p: Point) {
        self.min_x = self.min_x.min(p.x);
        self.min_y = self.min_y.min(p.y);
        self.max_x = self.max_x.max(p.x);
        self.max_y = self.max_y.max(p.y);
    }

    pub fn union(mut self, other: BBox) -> BBox {
        self.min_x = self.min_x.min(other.min_x);
        self.min_y = self.min_y.min(other.min_y);
        self.max_x = self.max_x.max(other.max_x);
        self.max_y = self.max_y.max(other.max_y);
        self
    }

    pub fn of_points(points: &[Point]) -> BBox {
        let mut b = BBox::empty();
        for &p in points {
            b.expand(p);
        }
        b
    }

    pub fn width(&self) -> f64 {
        (self.max_x - self.min_x).max(0.0)
    }

    pub fn height(&self) -> f64 {
        (self.max_y - self.min_y).max(0.0)
    }

    pub fn center(&self) -> Point {
        Point::new(
            (self.min_x + self.max_x) * 0.5,
            (self.min_y + self.max_y) * 0.5,
        )
    }
}

/// Shoelace signed area. Positive for counter-clockwise rings in
/// y-up coordinates (equivalently clockwise on screen with y down).
pub fn signed_area(ring: &[Point]) -> f64 {
    let n = ring.len();
    if n < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..n {
        let p = ring[i];
        let q = ring[(i + 1) % n];
        acc += p.x * q.y - q.x * p.y;
    }
    acc * 0.5
}

/// Even-odd point-in-polygon test over a set of rings.
pub fn point_in_rings_evenodd(pt: Point, rings: &[Vec<Point>]) -> bool {
    crossings(pt, rings) % 2 != 0
}

/// Nonzero-winding point-in-polygon test over a set of rings.
pub fn point_in_rings_nonzero(pt: Point, rings: &[Vec<Point>]) -> bool {
    winding(pt, rings) != 0
}

fn crossings(pt: Point, rings: &[Vec<Point>]) -> i64 {
    let mut count = 0;
    for ring in rings {
        let n = ring.len();
        for i in 0..n {
            let a = ring[i];
            let b = ring[(i + 1) % n];
            if (a.y <= pt.y) != (b.y <= pt.y) {
                let x = a.x + (pt.y - a.y) * (b.x - a.x) / (b.y - a.y);
                if x > pt.x {
                    count += 1;
                }
            }
        }
    }
    count
}

fn winding(pt: Point, rings: &[Vec<Point>]) -> i64 {
    let mut w = 0;
    for ring in rings {
        let n = ring.len();
        for i in 0..n {
            let a = ring[i];
            let b = ring[(i + 1) % n];
            if (a.y <= pt.y) != (b.y <= pt.y) {
                let x = a.x + (pt.y - a.y) * (b.x - a.x) / (b.y - a.y);
                if x > pt.x {
                    w += if b.y > a.y { 1 } else { -1 };
                }
            }
        }
    }
    w
}

/// Distance from `p` to segment `ab`.
pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len_sq = ab.dot(ab);
    if len_sq < 1e-24 {
        return p.dist(a);
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    p.dist(a + ab * t)
}

/// Total perimeter of a closed ring.
pub fn ring_perimeter(ring: &[Point]) -> f64 {
    let n = ring.len();
    if n < 2 {
        return 0.0;
    }
    (0..n).map(|i| ring[i].dist(ring[(i + 1) % n])).sum()
}

/// Resample a closed ring into `count` points uniformly spaced by arc
/// length, starting at the ring's first vertex.
pub fn resample_ring(ring: &[Point], count: usize) -> Vec<Point> {
    assert!(count > 0);
    let n = ring.len();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![ring[0]; count];
    }
    let total = ring_perimeter(ring);
    if total < 1e-12 {
        return vec![ring[0]; count];
    }
    let step = total / count as f64;
    let mut out = Vec::with_capacity(count);
    let mut seg = 0usize;
    let mut seg_start = 0.0f64;
    let mut seg_len = ring[0].dist(ring[1 % n]);
    for k in 0..count {
        let target = k as f64 * step;
        while target > seg_start + seg_len && seg + 1 < n {
            seg_start += seg_len;
            seg += 1;
            seg_len = ring[seg].dist(ring[(seg + 1) % n]);
        }
        let t = if seg_len < 1e-12 {
            0.0
        } else {
            ((target - seg_start) / seg_len).clamp(0.0, 1.0)
        };
        out.push(ring[seg].lerp(ring[(seg + 1) % n], t));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_composition_order() {
        let m = Affine::translate(5.0, 0.0).mul(Affine::scale(2.0, 2.0));
        // scale first, then translate
        assert_eq!(m.apply(Point::new(1.0, 1.0)), Point::new(7.0, 2.0));
    }

    #[test]
    fn line_flattens_to_endpoint() {
        let seg = CubicSeg::line(Point::new(0.0, 0.0), Point::new(10.0, 0.0));
        let mut out = vec![seg.p0];
        seg.flatten_into(0.1, &mut out);
        assert_eq!(out, vec![Point::new(0.0, 0.0), Point::new(10.0, 0.0)]);
    }

    #[test]
    fn flatten_error_bound_quarter_circle() {
        // Quarter circle of radius 1 via the standard cubic approximation.
        let k = 0.5522847498307936;
        let seg = CubicSeg::new(
            Point::new(1.0, 0.0),
            Point::new(1.0, k),
            Point::new(k, 1.0),
            Point::new(0.0, 1.0),
        );
        for &tol in &[0.25, 0.05, 0.01] {
            let mut pts = vec![seg.p0];
            seg.flatten_into(tol, &mut pts);
            // Dense sampling of the true curve against the polyline.
            for i in 0..=1000 {
                let p = seg.eval(i as f64 / 1000.0);
                let d = pts
                    .windows(2)
                    .map(|w| point_segment_distance(p, w[0], w[1]))
                    .fold(f64::INFINITY, f64::min);
                assert!(d <= tol + 1e-9, "tol {tol}: deviation {d}");
            }
        }
    }

    #[test]
    fn flatten_vertex_count_monotone_in_tolerance() {
        let seg = CubicSeg::new(
            Point::new(0.0, 0.0),
            Point::new(3.0, 8.0),
            Point::new(7.0, -4.0),
            Point::new(10.0, 2.0),
        );
        let mut prev = 0;
        for &tol in &[2.0, 1.0, 0.5, 0.25, 0.125] {
            let mut pts = vec![seg.p0];
            seg.flatten_into(tol, &mut pts);
            assert!(pts.len() >= prev, "count dropped at tol {tol}");
            prev = pts.len();
        }
    }

    #[test]
    fn evenodd_annulus() {
        let outer = vec![
            Point::new(0.0, 0.0),
            Point::new(10.0, 0.0),
            Point::new(10.0, 10.0),
            Point::new(0.0, 10.0),
        ];
        let inner = vec![
            Point::new(3.0, 3.0),
            Point::new(7.0, 3.0),
            Point::new(7.0, 7.0),
            Point::new(3.0, 7.0),
        ];
        let rings = vec![outer, inner];
        assert!(point_in_rings_evenodd(Point::new(1.0, 5.0), &rings));
        assert!(!point_in_rings_evenodd(Point::new(5.0, 5.0), &rings));
        assert!(!point_in_rings_evenodd(Point::new(11.0, 5.0), &rings));
    }

    #[test]
    fn resample_square_uniform() {
        let square = vec![
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(4.0, 4.0),
            Point::new(0.0, 4.0),
        ];
        let pts = resample_ring(&square, 16);
        assert_eq!(pts.len(), 16);
        // 16 samples on a 16-unit perimeter: unit spacing.
        assert_eq!(pts[0], Point::new(0.0, 0.0));
        assert_eq!(pts[4], Point::new(4.0, 0.0));
        assert_eq!(pts[8], Point::new(4.0, 4.0));
    }
}
