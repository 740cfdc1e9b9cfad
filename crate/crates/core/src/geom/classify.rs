//! Pairwise classification of closed planar polygons, segments and points in 3D.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::point::{dominant_axis, Point3};
use super::polygon::{on_segment, Polygon3};
use super::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PairKind {
    Disjoint,
    CornerContact,
    BoundaryTouch,
    Violation,
}

/// Why a pair is a violation, ordered by severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ViolationReason {
    /// Relative interiors intersect.
    InteriorOverlap,
    /// A non-corner boundary point of one lies in the relative interior of the other.
    BoundaryInInterior,
    /// A corner lies in the relative interior of the other.
    CornerInsideOther,
    /// A corner lies on the other's boundary without being one of its corners.
    CornerOnEdge,
}

impl ViolationReason {
    pub fn describe(self) -> &'static str {
        match self {
            Self::InteriorOverlap => "interior overlap",
            Self::BoundaryInInterior => "boundary through interior",
            Self::CornerInsideOther => "corner inside other",
            Self::CornerOnEdge => "corner on non-corner boundary",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairClassification<S> {
    pub kind: PairKind,
    /// Common corners for contacts, touch points for boundary touches, offending points for violations.
    pub witnesses: Vec<Point3<S>>,
    /// All reasons found, most severe first. Empty unless `kind` is `Violation`.
    pub reasons: Vec<ViolationReason>,
}

impl<S> PairClassification<S> {
    pub fn reason(&self) -> Option<ViolationReason> {
        self.reasons.first().copied()
    }
}

/// Location of a point relative to a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Loc {
    Outside,
    Corner(usize),
    /// Relative interior of the boundary edge starting at this corner.
    Edge(usize),
    /// Relative interior (open region, open segment).
    Interior,
}

/// Precomputed geometry of one polygon.
#[derive(Debug, Clone)]
pub struct PolyGeom<S> {
    pub corners: Vec<Point3<S>>,
    pub dim: u8,
    pub normal: Point3<S>,
    axis: usize,
    proj: Vec<(S, S)>,
    /// Extreme corners for one-dimensional corner lists.
    span: (usize, usize),
}

impl<S: Scalar> PolyGeom<S> {
    pub fn new(p: &Polygon3<S>, eps: f64) -> Self {
        let corners = p.corners.clone();
        let n = corners.len();
        let normal = p.newell_normal();
        let dim = if n <= 1 {
            0
        } else if n == 2 || normal.is_zero(eps) {
            1
        } else {
            2
        };
        let axis = if dim == 2 { dominant_axis(&normal) } else { 2 };
        let proj = corners.iter().map(|c| c.project(axis)).collect();
        let mut span = (0, n.saturating_sub(1));
        if dim == 1 && n > 2 {
            let d = corners[1].sub(&corners[0]);
            let key = |i: usize| corners[i].sub(&corners[0]).dot(&d);
            let mut lo = 0;
            let mut hi = 0;
            for i in 1..n {
                if (key(i) - key(lo)).sign(eps) < 0 {
                    lo = i;
                }
                if (key(i) - key(hi)).sign(eps) > 0 {
                    hi = i;
                }
            }
            span = (lo, hi);
        }
        Self { corners, dim, normal, axis, proj, span }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.corners.len();
        match self.dim {
            0 => Vec::new(),
            1 if n == 2 => vec![(0, 1)],
            _ => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        }
    }

    pub fn on_plane(&self, x: &Point3<S>, eps: f64) -> bool {
        self.normal.dot(&x.sub(&self.corners[0])).sign(eps) == 0
    }

    pub fn locate(&self, x: &Point3<S>, eps: f64) -> Loc {
        if let Some(i) = self.corners.iter().position(|c| c.same(x, eps)) {
            return Loc::Corner(i);
        }
        match self.dim {
            0 => Loc::Outside,
            1 => {
                let (a, b) = (&self.corners[self.span.0], &self.corners[self.span.1]);
                if on_segment(a, b, x, eps) {
                    Loc::Interior
                } else {
                    Loc::Outside
                }
            }
            _ => {
                if !self.on_plane(x, eps) {
                    return Loc::Outside;
                }
                let n = self.corners.len();
                for i in 0..n {
                    if on_segment(&self.corners[i], &self.corners[(i + 1) % n], x, eps) {
                        return Loc::Edge(i);
                    }
                }
                if self.inside_2d(&x.project(self.axis), eps) {
                    Loc::Interior
                } else {
                    Loc::Outside
                }
            }
        }
    }

    /// Even-odd test for a projected point known not to lie on the boundary.
    fn inside_2d(&self, p: &(S, S), eps: f64) -> bool {
        let n = self.proj.len();
        let mut inside = false;
        for i in 0..n {
            let (a, b) = (&self.proj[i], &self.proj[(i + 1) % n]);
            let above_a = (a.1.clone() - p.1.clone()).sign(eps) > 0;
            let above_b = (b.1.clone() - p.1.clone()).sign(eps) > 0;
            if above_a != above_b {
                // x-coordinate of the edge at height p.1.
                let t = (p.1.clone() - a.1.clone()) / (b.1.clone() - a.1.clone());
                let xi = a.0.clone() + t * (b.0.clone() - a.0.clone());
                if (p.0.clone() - xi).sign(eps) < 0 {
                    inside = !inside;
                }
            }
        }
        inside
    }
}

/// Intersection of two closed segments: empty, one point, or the two ends of a collinear overlap.
pub fn segment_intersection<S: Scalar>(a: &Point3<S>, b: &Point3<S>, c: &Point3<S>, d: &Point3<S>, eps: f64) -> Vec<Point3<S>> {
    let u = b.sub(a);
    let v = d.sub(c);
    let w = c.sub(a);
    let uxv = u.cross(&v);
    if uxv.is_zero(eps) {
        if u.is_zero(eps) {
            return if on_segment(c, d, a, eps) { vec![a.clone()] } else { Vec::new() };
        }
        if !w.cross(&u).is_zero(eps) {
            return Vec::new();
        }
        let uu = u.norm2();
        let tc = w.dot(&u) / uu.clone();
        let td = d.sub(a).dot(&u) / uu;
        let (lo, hi) = if (tc.clone() - td.clone()).sign(eps) <= 0 { (tc, td) } else { (td, tc) };
        let lo = if lo.sign(eps) < 0 { S::zero() } else { lo };
        let hi = if (hi.clone() - S::one()).sign(eps) > 0 { S::one() } else { hi };
        let gap = (hi.clone() - lo.clone()).sign(eps);
        if gap < 0 {
            return Vec::new();
        }
        let p = a.add(&u.scale(&lo));
        if gap == 0 {
            return vec![p];
        }
        return vec![p, a.add(&u.scale(&hi))];
    }
    if w.dot(&uxv).sign(eps) != 0 {
        return Vec::new();
    }
    let den = uxv.norm2();
    let s = w.cross(&v).dot(&uxv) / den.clone();
    let t = w.cross(&u).dot(&uxv) / den;
    let inside = |r: &S| r.sign(eps) >= 0 && (r.clone() - S::one()).sign(eps) <= 0;
    if inside(&s) && inside(&t) {
        vec![a.add(&u.scale(&s))]
    } else {
        Vec::new()
    }
}

/// Proper crossing of segment `ab` with the plane `n·(x - p0) = 0`.
fn segment_plane<S: Scalar>(a: &Point3<S>, b: &Point3<S>, n: &Point3<S>, p0: &Point3<S>, eps: f64) -> Option<Point3<S>> {
    let da = n.dot(&a.sub(p0));
    let db = n.dot(&b.sub(p0));
    let (sa, sb) = (da.sign(eps), db.sign(eps));
    if sa * sb < 0 {
        let t = da.clone() / (da - db);
        Some(a.lerp(b, &t))
    } else {
        None
    }
}

fn push_unique<S: Scalar>(v: &mut Vec<Point3<S>>, p: Point3<S>, eps: f64) {
    if !v.iter().any(|q| q.same(&p, eps)) {
        v.push(p);
    }
}

/// Adds midpoints between consecutive candidates lying on the line through `a` with direction `dir`.
fn refine_along<S: Scalar>(
    cands: &[Point3<S>],
    on_line: impl Fn(&Point3<S>) -> bool,
    a: &Point3<S>,
    dir: &Point3<S>,
    eps: f64,
    out: &mut Vec<Point3<S>>,
) {
    let mut pts: Vec<(S, &Point3<S>)> = cands.iter().filter(|p| on_line(p)).map(|p| (p.sub(a).dot(dir), p)).collect();
    pts.sort_by(|x, y| match (x.0.clone() - y.0.clone()).sign(eps) {
        -1 => std::cmp::Ordering::Less,
        0 => std::cmp::Ordering::Equal,
        _ => std::cmp::Ordering::Greater,
    });
    for w in pts.windows(2) {
        if !w[0].1.same(w[1].1, eps) {
            out.push(w[0].1.midpoint(w[1].1));
        }
    }
}

/// Sample points hitting every cell of the arrangement of `P ∩ Q`.
fn candidates<S: Scalar>(p: &PolyGeom<S>, q: &PolyGeom<S>, eps: f64) -> Vec<Point3<S>> {
    if p.dim == 2 && q.dim == 2 {
        let dir = p.normal.cross(&q.normal);
        if !dir.is_zero(eps) {
            return transversal_candidates(p, q, &dir, eps);
        }
        if !q.on_plane(&p.corners[0], eps) {
            return Vec::new();
        }
    }
    let mut c: Vec<Point3<S>> = Vec::new();
    for x in p.corners.iter().chain(q.corners.iter()) {
        push_unique(&mut c, x.clone(), eps);
    }
    let ep = p.edges();
    let eq = q.edges();
    for &(i, j) in &ep {
        for &(k, l) in &eq {
            for x in segment_intersection(&p.corners[i], &p.corners[j], &q.corners[k], &q.corners[l], eps) {
                push_unique(&mut c, x, eps);
            }
        }
    }
    let cross_edges = |from: &PolyGeom<S>, edges: &[(usize, usize)], to: &PolyGeom<S>, c: &mut Vec<Point3<S>>| {
        if to.dim != 2 {
            return;
        }
        for &(i, j) in edges {
            if let Some(x) = segment_plane(&from.corners[i], &from.corners[j], &to.normal, &to.corners[0], eps) {
                push_unique(c, x, eps);
            }
        }
    };
    cross_edges(p, &ep, q, &mut c);
    cross_edges(q, &eq, p, &mut c);
    if p.dim == 0 || q.dim == 0 {
        return c;
    }
    let mut extra = Vec::new();
    for (g, edges) in [(p, &ep), (q, &eq)] {
        for &(i, j) in edges {
            let (a, b) = (&g.corners[i], &g.corners[j]);
            let dir = b.sub(a);
            refine_along(&c, |x| on_segment(a, b, x, eps), a, &dir, eps, &mut extra);
        }
    }
    if p.dim == 2 && q.dim == 2 {
        let dir = p.normal.cross(&q.normal);
        if !dir.is_zero(eps) {
            let a = c.iter().find(|x| p.on_plane(x, eps) && q.on_plane(x, eps)).cloned();
            if let Some(a) = a {
                refine_along(&c, |x| p.on_plane(x, eps) && q.on_plane(x, eps), &a, &dir, eps, &mut extra);
            }
        }
    }
    for x in extra {
        push_unique(&mut c, x, eps);
    }
    c
}

/// Two polygons in crossing planes can only meet on the common line `L`, so sampling
/// boundary hits on `L` and the gaps between them is enough.
fn transversal_candidates<S: Scalar>(p: &PolyGeom<S>, q: &PolyGeom<S>, dir: &Point3<S>, eps: f64) -> Vec<Point3<S>> {
    let mut c: Vec<Point3<S>> = Vec::new();
    for (a, b) in [(p, q), (q, p)] {
        let n = a.corners.len();
        for i in 0..n {
            let x = &a.corners[i];
            if b.on_plane(x, eps) {
                push_unique(&mut c, x.clone(), eps);
            } else if let Some(y) = segment_plane(x, &a.corners[(i + 1) % n], &b.normal, &b.corners[0], eps) {
                push_unique(&mut c, y, eps);
            }
        }
    }
    if let Some(anchor) = c.first().cloned() {
        let mut extra = Vec::new();
        refine_along(&c, |_| true, &anchor, dir, eps, &mut extra);
        for x in extra {
            push_unique(&mut c, x, eps);
        }
    }
    c
}

/// Classifies two closed polygons (or segments, or points) by how they meet.
pub fn classify_geoms<S: Scalar>(p: &PolyGeom<S>, q: &PolyGeom<S>, eps: f64) -> PairClassification<S> {
    let mut contacts = Vec::new();
    let mut touches = Vec::new();
    let mut bad = Vec::new();
    let mut reasons = BTreeSet::new();
    let coplanar = p.dim == 2 && q.dim == 2 && p.normal.cross(&q.normal).is_zero(eps) && q.on_plane(&p.corners[0], eps);
    let mut sampled = false;
    for x in candidates(p, q, eps) {
        let lp = p.locate(&x, eps);
        let lq = q.locate(&x, eps);
        if lp == Loc::Outside || lq == Loc::Outside {
            continue;
        }
        sampled = true;
        let reason = match (lp, lq) {
            (Loc::Corner(_), Loc::Corner(_)) => {
                push_unique(&mut contacts, x, eps);
                continue;
            }
            (Loc::Edge(_), Loc::Edge(_)) => {
                push_unique(&mut touches, x, eps);
                continue;
            }
            (Loc::Interior, Loc::Interior) => ViolationReason::InteriorOverlap,
            (Loc::Interior, Loc::Edge(_)) | (Loc::Edge(_), Loc::Interior) => {
                if coplanar {
                    ViolationReason::BoundaryInInterior
                } else if p.dim == 2 && q.dim == 2 {
                    // An edge lying across a transversal polygon: the open regions stay apart.
                    continue;
                } else {
                    push_unique(&mut touches, x, eps);
                    continue;
                }
            }
            (Loc::Interior, Loc::Corner(_)) | (Loc::Corner(_), Loc::Interior) => ViolationReason::CornerInsideOther,
            _ => ViolationReason::CornerOnEdge,
        };
        reasons.insert(reason);
        // Within one plane, boundary inside the other's interior drags interior along with it.
        if coplanar && reason != ViolationReason::CornerOnEdge {
            reasons.insert(ViolationReason::InteriorOverlap);
        }
        push_unique(&mut bad, x, eps);
    }
    // Identical coplanar regions meet only along boundaries yet overlap.
    if reasons.is_empty() && sampled && coplanar && same_region(p, q, eps) {
        reasons.insert(ViolationReason::InteriorOverlap);
        bad.push(p.corners[0].clone());
    }
    if !reasons.is_empty() {
        return PairClassification { kind: PairKind::Violation, witnesses: bad, reasons: reasons.into_iter().collect() };
    }
    if !touches.is_empty() {
        let mut w = contacts;
        w.extend(touches);
        return PairClassification { kind: PairKind::BoundaryTouch, witnesses: w, reasons: Vec::new() };
    }
    if !contacts.is_empty() {
        return PairClassification { kind: PairKind::CornerContact, witnesses: contacts, reasons: Vec::new() };
    }
    PairClassification { kind: PairKind::Disjoint, witnesses: Vec::new(), reasons: Vec::new() }
}

fn same_region<S: Scalar>(p: &PolyGeom<S>, q: &PolyGeom<S>, eps: f64) -> bool {
    if !p.normal.cross(&q.normal).is_zero(eps) || !q.on_plane(&p.corners[0], eps) {
        return false;
    }
    let covered = |a: &PolyGeom<S>, b: &PolyGeom<S>| {
        a.edges().iter().all(|&(i, j)| {
            let m = a.corners[i].midpoint(&a.corners[j]);
            matches!(b.locate(&m, eps), Loc::Edge(_) | Loc::Corner(_)) && a.corners.iter().all(|c| b.locate(c, eps) != Loc::Outside)
        })
    };
    covered(p, q) && covered(q, p)
}

/// Classifies two polygons; see [`classify_geoms`].
pub fn classify_pair<S: Scalar>(p: &Polygon3<S>, q: &Polygon3<S>, eps: f64) -> PairClassification<S> {
    classify_geoms(&PolyGeom::new(p, eps), &PolyGeom::new(q, eps), eps)
}
