use serde::{Deserialize, Serialize};

use super::point::{collinear, dominant_axis, orient2d, Point3};
use super::scalar::Scalar;

/// Ordered corner list of a planar polygon, segment or point.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon3<S> {
    pub corners: Vec<Point3<S>>,
    pub claimed_convex: bool,
}

impl<S: Scalar> Polygon3<S> {
    pub fn new(corners: Vec<Point3<S>>) -> Self {
        Self { corners, claimed_convex: true }
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    /// Newell normal; zero for segments and collinear corner lists.
    pub fn newell_normal(&self) -> Point3<S> {
        let n = self.corners.len();
        let mut acc = Point3::origin();
        if n < 3 {
            return acc;
        }
        for i in 0..n {
            acc = acc.add(&self.corners[i].cross(&self.corners[(i + 1) % n]));
        }
        acc
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self.corners.len() {
            0 | 1 => Vec::new(),
            2 => vec![(0, 1)],
            n => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        }
    }
}

/// Shape flags of a corner list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonProperties {
    pub planar: bool,
    pub simple: bool,
    pub convex: bool,
    pub strictly_convex: bool,
    pub degenerate: bool,
}

/// Is `p` on the closed segment `ab`? Assumes nothing about collinearity.
pub fn on_segment<S: Scalar>(a: &Point3<S>, b: &Point3<S>, p: &Point3<S>, eps: f64) -> bool {
    if !collinear(a, b, p, eps) {
        return false;
    }
    let d = b.sub(a);
    let t = p.sub(a).dot(&d);
    t.sign(eps) >= 0 && (t - d.norm2()).sign(eps) <= 0
}

/// Two closed 3D segments intersect (including touching and overlap).
fn segments_meet<S: Scalar>(a: &Point3<S>, b: &Point3<S>, c: &Point3<S>, d: &Point3<S>, eps: f64) -> bool {
    !super::classify::segment_intersection(a, b, c, d, eps).is_empty()
}

pub fn polygon_properties<S: Scalar>(p: &Polygon3<S>, eps: f64) -> PolygonProperties {
    let c = &p.corners;
    let n = c.len();
    let distinct = (0..n).all(|i| (i + 1..n).all(|j| !c[i].same(&c[j], eps)));
    if n <= 2 {
        return PolygonProperties {
            planar: true,
            simple: distinct && n >= 1,
            convex: distinct && n >= 1,
            strictly_convex: false,
            degenerate: true,
        };
    }
    let all_collinear =
        (2..n).all(|i| collinear(&c[0], &c[1], &c[i], eps)) && (0..n).all(|i| collinear(&c[0], &c[i], &c[(i + 1) % n], eps));
    let normal = p.newell_normal();
    if all_collinear || normal.is_zero(eps) {
        return PolygonProperties { planar: true, simple: false, convex: false, strictly_convex: false, degenerate: true };
    }
    let planar = c.iter().all(|q| normal.dot(&q.sub(&c[0])).sign(eps) == 0);
    if !planar {
        return PolygonProperties { planar: false, simple: false, convex: false, strictly_convex: false, degenerate: false };
    }
    let simple = distinct && is_simple(c, eps);
    let axis = dominant_axis(&normal);
    let flip = normal.coord(axis).sign(eps) < 0;
    let pts: Vec<(S, S)> = c.iter().map(|q| q.project(axis)).collect();
    let mut any_zero = false;
    let mut any_wrong = false;
    for i in 0..n {
        let mut o = orient2d(&pts[i], &pts[(i + 1) % n], &pts[(i + 2) % n], eps);
        if flip {
            o = -o;
        }
        if o == 0 {
            any_zero = true;
        } else if o < 0 {
            any_wrong = true;
        }
    }
    let convex = simple && !any_wrong;
    PolygonProperties { planar: true, simple, convex, strictly_convex: convex && !any_zero, degenerate: false }
}

fn is_simple<S: Scalar>(c: &[Point3<S>], eps: f64) -> bool {
    let n = c.len();
    for i in 0..n {
        let (a, b) = (&c[i], &c[(i + 1) % n]);
        // Consecutive edges may only share their common corner.
        let nx = &c[(i + 2) % n];
        if on_segment(a, b, nx, eps) || on_segment(b, nx, a, eps) {
            return false;
        }
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (d, e) = (&c[j], &c[(j + 1) % n]);
            if segments_meet(a, b, d, e, eps) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::scalar::{q, qi, Q};

    fn pt(x: Q, y: Q, z: Q) -> Point3<Q> {
        Point3::new(x, y, z)
    }

    fn sq() -> Vec<Point3<Q>> {
        vec![pt(qi(0), qi(0), qi(0)), pt(qi(1), qi(0), qi(0)), pt(qi(1), qi(1), qi(0)), pt(qi(0), qi(1), qi(0))]
    }

    #[test]
    fn unit_square_is_strictly_convex() {
        let p = polygon_properties(&Polygon3::new(sq()), 0.0);
        assert!(p.planar && p.simple && p.convex && p.strictly_convex && !p.degenerate);
    }

    #[test]
    fn midpoint_corner_is_not_strict() {
        let mut c = sq();
        c.insert(1, pt(q(1, 2), qi(0), qi(0)));
        let p = polygon_properties(&Polygon3::new(c), 0.0);
        assert!(p.convex);
        assert!(!p.strictly_convex);
    }

    #[test]
    fn bowtie_is_not_simple() {
        let mut c = sq();
        c.swap(2, 3);
        let p = polygon_properties(&Polygon3::new(c), 0.0);
        assert!(p.planar);
        assert!(!p.simple);
        assert!(!p.convex);
    }

    #[test]
    fn clockwise_square_is_convex() {
        let mut c = sq();
        c.reverse();
        assert!(polygon_properties(&Polygon3::new(c), 0.0).strictly_convex);
    }

    #[test]
    fn non_planar_quad() {
        let mut c = sq();
        c[2].z = qi(1);
        assert!(!polygon_properties(&Polygon3::new(c), 0.0).planar);
    }

    #[test]
    fn reflex_quad_is_simple_not_convex() {
        let c = vec![pt(qi(0), qi(0), qi(0)), pt(qi(4), qi(0), qi(0)), pt(qi(1), qi(1), qi(0)), pt(qi(0), qi(4), qi(0))];
        let p = polygon_properties(&Polygon3::new(c), 0.0);
        assert!(p.simple);
        assert!(!p.convex);
    }

    #[test]
    fn segment_is_degenerate() {
        let c = vec![pt(qi(0), qi(0), qi(0)), pt(qi(1), qi(2), qi(3))];
        let p = polygon_properties(&Polygon3::new(c), 0.0);
        assert!(p.degenerate && p.simple && !p.strictly_convex);
    }

    #[test]
    fn collinear_triple_is_degenerate() {
        let c = vec![pt(qi(0), qi(0), qi(0)), pt(qi(1), qi(0), qi(0)), pt(qi(2), qi(0), qi(0))];
        let p = polygon_properties(&Polygon3::new(c), 0.0);
        assert!(p.degenerate && !p.simple);
    }
}
