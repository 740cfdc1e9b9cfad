use std::cmp::Ordering;

use super::point::{dominant_axis, orient2d, Point3};
use super::polygon::{on_segment, Polygon3};
use super::scalar::Scalar;
use crate::error::{precondition, Result};

/// Normal of the plane spanned by `pts`, with its first nonzero coordinate positive.
/// Zero when the points are collinear.
pub fn canonical_normal<S: Scalar>(pts: &[Point3<S>], eps: f64) -> Point3<S> {
    let Some(a) = pts.first() else {
        return Point3::origin();
    };
    let Some(b) = pts.iter().find(|p| !p.same(a, eps)) else {
        return Point3::origin();
    };
    let ab = b.sub(a);
    for c in pts {
        let n = ab.cross(&c.sub(a));
        if !n.is_zero(eps) {
            let first = n.coords().into_iter().find(|v| v.sign(eps) != 0).map(|v| v.sign(eps));
            return if first == Some(-1) { n.scale(&-S::one()) } else { n };
        }
    }
    Point3::origin()
}

fn cmp2<S: Scalar>(p: &(S, S), q: &(S, S), eps: f64) -> Ordering {
    let c = (p.0.clone() - q.0.clone()).sign(eps);
    let c = if c == 0 { (p.1.clone() - q.1.clone()).sign(eps) } else { c };
    c.cmp(&0)
}

/// Convex hull of coplanar points, counterclockwise about [`canonical_normal`].
///
/// Collinear input yields the extreme segment, a single repeated point yields a point.
pub fn convex_hull_planar<S: Scalar>(points: &[Point3<S>], keep_collinear: bool, eps: f64) -> Result<Polygon3<S>> {
    let mut pts: Vec<Point3<S>> = Vec::new();
    for p in points {
        if !pts.iter().any(|q| q.same(p, eps)) {
            pts.push(p.clone());
        }
    }
    if pts.is_empty() {
        return precondition("convex hull of an empty point set");
    }
    let normal = canonical_normal(&pts, eps);
    if normal.is_zero(eps) {
        if pts.len() == 1 {
            return Ok(Polygon3::new(pts));
        }
        let d = pts[1].sub(&pts[0]);
        let key = |p: &Point3<S>| p.sub(&pts[0]).dot(&d);
        let lo = pts.iter().min_by(|a, b| (key(a) - key(b)).sign(eps).cmp(&0)).unwrap().clone();
        let hi = pts.iter().max_by(|a, b| (key(a) - key(b)).sign(eps).cmp(&0)).unwrap().clone();
        return Ok(Polygon3::new(vec![lo, hi]));
    }
    if pts.iter().any(|p| normal.dot(&p.sub(&pts[0])).sign(eps) != 0) {
        return precondition("convex hull input is not coplanar");
    }
    let axis = dominant_axis(&normal);
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    let proj: Vec<(S, S)> = pts.iter().map(|p| p.project(axis)).collect();
    idx.sort_by(|&i, &j| cmp2(&proj[i], &proj[j], eps));

    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2 && orient2d(&proj[lower[lower.len() - 2]], &proj[lower[lower.len() - 1]], &proj[i], eps) <= 0 {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2 && orient2d(&proj[upper[upper.len() - 2]], &proj[upper[upper.len() - 1]], &proj[i], eps) <= 0 {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let mut hull = lower;
    // Projection along a negative normal component reverses orientation.
    if normal.coord(axis).sign(eps) < 0 {
        hull.reverse();
    }
    let strict: Vec<Point3<S>> = hull.iter().map(|&i| pts[i].clone()).collect();
    if !keep_collinear {
        return Ok(Polygon3::new(strict));
    }
    let mut out = Vec::new();
    let k = strict.len();
    for e in 0..k {
        let (a, b) = (&strict[e], &strict[(e + 1) % k]);
        out.push(a.clone());
        let d = b.sub(a);
        let mut mids: Vec<(S, &Point3<S>)> =
            pts.iter().filter(|p| !p.same(a, eps) && !p.same(b, eps) && on_segment(a, b, p, eps)).map(|p| (p.sub(a).dot(&d), p)).collect();
        mids.sort_by(|x, y| (x.0.clone() - y.0.clone()).sign(eps).cmp(&0));
        out.extend(mids.into_iter().map(|(_, p)| p.clone()));
    }
    Ok(Polygon3::new(out))
}
