//! Bipartite graphs: toroidal-grid and integer-grid representations, and `K_{3,3}` by unit
//! equilateral triangles.
//!
//! In both grid constructions the `A`-polygons are horizontal and stacked, one layer per `A`
//! vertex, while every `B`-polygon is a congruent copy of a vertical *lead* polygon. The lead is
//! uni-monotone in z: a single base edge on the far side and a convex mountain chain facing the
//! `A`-polygons, so it meets each layer in exactly one corner.

use std::f64::consts::PI;

use crate::error::{precondition, Error, Result};
use crate::geom::{convex_hull_planar, Point3, Polygon3, Scalar, Q};
use crate::graph::{families, Graph};
use crate::scene::{Scene, Structure};

/// The uni-monotone lead polygon, described in its own (x, z) frame.
///
/// The base edge joins the first and last mountain corners. `offsets[k]` is the horizontal
/// distance of mountain corner `k` from the base line, `heights[k]` its height.
#[derive(Debug, Clone, PartialEq)]
pub struct LeadPolygonSpec<S> {
    pub offsets: Vec<S>,
    pub heights: Vec<S>,
}

impl<S: Scalar> LeadPolygonSpec<S> {
    pub fn corner_count(&self) -> usize {
        self.offsets.len()
    }

    /// True when the mountain chain is strictly convex and the base edge is its only other edge.
    pub fn is_uni_monotone(&self, eps: f64) -> bool {
        let k = self.offsets.len();
        if k < 3 {
            return true;
        }
        if (self.offsets[0].clone() - self.offsets[k - 1].clone()).sign(eps) != 0 {
            return false;
        }
        if self.heights.windows(2).any(|w| (w[1].clone() - w[0].clone()).sign(eps) <= 0) {
            return false;
        }
        // Offsets grow toward the middle with strictly decreasing slopes.
        (1..k - 1).all(|i| {
            let (a, b, c) = (i - 1, i, i + 1);
            let s1 = (self.offsets[b].clone() - self.offsets[a].clone()) * (self.heights[c].clone() - self.heights[b].clone());
            let s2 = (self.offsets[c].clone() - self.offsets[b].clone()) * (self.heights[b].clone() - self.heights[a].clone());
            (s1 - s2).sign(eps) > 0
        }) && self.offsets[1..k - 1].iter().all(|o| (o.clone() - self.offsets[0].clone()).sign(eps) > 0)
    }
}

fn parts(g: &Graph) -> Result<(Vec<usize>, Vec<usize>)> {
    let Some((a, b)) = g.bipartition() else {
        return precondition("graph is not bipartite");
    };
    if a.len() < 2 || b.len() < 2 {
        return precondition(format!("both parts need at least two vertices, got {} and {}", a.len(), b.len()));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return precondition(format!("vertex {} has no neighbours", g.label(v)));
    }
    Ok((a, b))
}

/// Builds the scene from a point table `pt(i, j)` for `A` vertex `i` and `B` vertex `j`,
/// keeping only the points of actual edges.
fn assemble<S: Scalar>(g: &Graph, a: &[usize], b: &[usize], name: &str, pt: impl Fn(usize, usize) -> Point3<S>) -> Result<Scene<S>> {
    let mut scene: Scene<S> = Scene::new(Structure::Graph(g.clone()), name);
    let eps = scene.meta.epsilon;
    let mut add = |v: usize, pts: Vec<Point3<S>>| -> Result<()> {
        let hull = convex_hull_planar(&pts, false, eps)?;
        if hull.len() != pts.len() {
            return Err(Error::Construction(format!("polygon {} lost a contact point", g.label(v))));
        }
        scene.push_polygon(g.label(v), hull);
        Ok(())
    };
    for (i, &u) in a.iter().enumerate() {
        let pts = b.iter().enumerate().filter(|&(_, &w)| g.has_edge(u, w)).map(|(j, _)| pt(i, j)).collect();
        add(u, pts)?;
    }
    for (j, &w) in b.iter().enumerate() {
        let pts = a.iter().enumerate().filter(|&(_, &u)| g.has_edge(u, w)).map(|(i, _)| pt(i, j)).collect();
        add(w, pts)?;
    }
    // Restore vertex order so labels read naturally.
    let order: Vec<&str> = g.labels().iter().map(String::as_str).collect();
    scene.polygons.sort_by_key(|p| order.iter().position(|l| *l == p.label));
    scene.declare_graph_contacts()?;
    Ok(scene)
}

/// Distance of the base line from the z-axis in the toroidal construction.
pub const TOROIDAL_MAJOR: f64 = 2.0;
/// Radius of the half circle carrying the lead's corners.
pub const TOROIDAL_MINOR: f64 = 1.0;

/// Lead for the toroidal construction: `na` evenly spaced points on a half circle.
pub fn toroidal_lead(na: usize) -> LeadPolygonSpec<f64> {
    let steps = (na.max(2) - 1) as f64;
    let (offsets, heights) = (0..na)
        .map(|k| {
            let t = k as f64 * PI / steps;
            (TOROIDAL_MINOR * t.sin(), -TOROIDAL_MINOR * t.cos())
        })
        .unzip();
    LeadPolygonSpec { offsets, heights }
}

/// Grid cell of a toroidal-scene point: rotation step in `0..nb` and circle step in `0..2na-2`.
///
/// `None` if the point is off the grid by more than `tol` (in grid steps).
pub fn toroidal_indices(p: [f64; 3], na: usize, nb: usize, tol: f64) -> Option<(usize, usize)> {
    let snap = |v: f64, m: usize| {
        let r = v.rem_euclid(m as f64);
        let k = r.round();
        ((r - k).abs() <= tol).then_some(k as usize % m)
    };
    let rot = snap(p[1].atan2(p[0]) * nb as f64 / (2.0 * PI), nb)?;
    let rho = p[0].hypot(p[1]);
    let (dx, dz) = (TOROIDAL_MAJOR - rho, p[2]);
    if ((dx.hypot(dz)) - TOROIDAL_MINOR).abs() > tol {
        return None;
    }
    let m = 2 * na - 2;
    // Angle measured from the bottom of the circle, toward the z-axis.
    let circ = snap((dx.atan2(-dz)) * m as f64 / (2.0 * PI), m)?;
    Some((rot, circ))
}

/// Float representation on a `|B| × (2|A|-2)` toroidal grid.
///
/// `A`-polygons are horizontal `|B|`-gons at distinct heights; `B`-polygons are copies of the
/// half-circle lead rotated about the z-axis. `A` is the side of the first vertex.
pub fn represent_bipartite_toroidal(g: &Graph) -> Result<Scene<f64>> {
    let (a, b) = parts(g)?;
    let lead = toroidal_lead(a.len());
    let nb = b.len() as f64;
    assemble(g, &a, &b, "bipartite-toroidal", |i, j| {
        let phi = 2.0 * PI * j as f64 / nb;
        let rho = TOROIDAL_MAJOR - lead.offsets[i];
        Point3::new(rho * phi.cos(), rho * phi.sin(), lead.heights[i])
    })
}

fn tri(k: i64) -> i64 {
    k * (k + 1) / 2
}

/// Offsets of an `r`-vertex lattice chain on consecutive rows with increments
/// `k, k-1, ..., ` around zero, so the slopes strictly decrease.
fn chain_offsets(r: usize) -> Vec<i64> {
    if r == 0 {
        return Vec::new();
    }
    let e = r as i64 - 1;
    let k = e / 2;
    let mut out = vec![0];
    let mut x = 0;
    for s in 0..e {
        x += k - s;
        out.push(x);
    }
    out
}

/// The core `A`-polygon: a strictly convex lattice `nb`-gon split into two y-monotone chains.
///
/// Returns `(x, y, right_chain)` per corner in the order `B` vertices are assigned: right chain
/// bottom to top, then left chain bottom to top. Right-chain corners are the maximal x of their
/// row, left-chain corners the minimal x.
pub fn core_polygon(nb: usize) -> Vec<(i64, i64, bool)> {
    let r = nb.div_ceil(2);
    let l = nb / 2;
    let mut out: Vec<(i64, i64, bool)> = chain_offsets(r).into_iter().enumerate().map(|(y, o)| (1 + o, y as i64, true)).collect();
    out.extend(chain_offsets(l).into_iter().enumerate().map(|(y, o)| (-o, y as i64, false)));
    out
}

/// Lead for the integer construction: unit z-steps, x-increments `1, 2, ..., ⌈|A|/2⌉-1` toward
/// the base, symmetric about a horizontal axis.
pub fn integer_lead(na: usize) -> LeadPolygonSpec<Q> {
    let half = na.div_ceil(2) as i64;
    let offsets = (0..na as i64)
        .map(|i| {
            // Distance in layers from the middle: for even `na` the two middle layers both get 0.
            let d = if i < half { half - 1 - i } else { i - (na as i64 - half) };
            Q::from_i64(tri(half - 1) - tri(d))
        })
        .collect();
    let heights = (0..na as i64).map(Q::from_i64).collect();
    LeadPolygonSpec { offsets, heights }
}

/// Grid-line counts `[x, y, z]` used by the integer construction for `K_{na,nb}`.
pub fn proof_grid_extent(na: usize, nb: usize) -> [usize; 3] {
    let a2 = na.div_ceil(2);
    let b4 = nb.div_ceil(4);
    let x = a2 * (a2 - 1) + (nb.div_ceil(2) / 2) * (b4 - 1) + 2;
    [x, 2 * b4, na]
}

/// The stated bound `|A| × 2⌈|B|/4⌉ × (⌈|A|/2⌉² + ⌈|B|/4⌉²)`, as `[x, y, z]` for this layout.
pub fn theorem_grid_bound(na: usize, nb: usize) -> [usize; 3] {
    let a2 = na.div_ceil(2);
    let b4 = nb.div_ceil(4);
    [a2 * a2 + b4 * b4, 2 * b4, na]
}

/// Exact representation with integer corners.
///
/// `A` vertex `i` becomes the layer `z = i`, the core polygon widened by the lead's offset at
/// that height. `B` vertex `j` is the lead translated to core corner `j`, in the vertical plane
/// `y = y_j`, mirrored for left-chain corners. The scene carries the stated grid bound.
pub fn represent_bipartite_grid(g: &Graph) -> Result<Scene<Q>> {
    let (a, b) = parts(g)?;
    let core = core_polygon(b.len());
    let lead = integer_lead(a.len());
    let reach = tri(a.len().div_ceil(2) as i64 - 1);
    let mut scene = assemble(g, &a, &b, "bipartite-grid", |i, j| {
        let (x, y, right) = core[j];
        // The lead's offset is measured from the base; the widening is measured from the core.
        let w = Q::from_i64(reach) - lead.offsets[i].clone();
        let x = if right { Q::from_i64(x) + w } else { Q::from_i64(x) - w };
        Point3::new(x, Q::from_i64(y), lead.heights[i].clone())
    })?;
    scene.meta.grid_bounds = Some(theorem_grid_bound(a.len(), b.len()));
    Ok(scene)
}

/// Middle-triangle rotation `120° - arccos(-1/8)` in radians (about 22.82°).
pub fn k33_beta() -> f64 {
    2.0 * PI / 3.0 - (-1.0f64 / 8.0).acos()
}

/// `K_{3,3}` by six unit equilateral triangles.
///
/// `a1, a2, a3` are horizontal at heights `0, 1/2, 1`, centered on the z-axis, the middle one
/// rotated by [`k33_beta`]. Each `b` triangle is vertical: a vertical unit edge from `a1` to `a3`
/// and its apex on `a2`.
pub fn represent_k33_unit_triangles() -> Result<Scene<f64>> {
    let g = families::complete_bipartite(3, 3);
    let rho = (PI / 6.0).tan();
    let beta = k33_beta();
    let at = |theta: f64, z: f64| Point3::new(rho * theta.cos(), rho * theta.sin(), z);
    let theta = |k: usize| PI / 2.0 + 2.0 * PI * k as f64 / 3.0;
    let mut scene: Scene<f64> = Scene::new(Structure::Graph(g.clone()), "k33");
    for (name, z, rot) in [("a1", 0.0, 0.0), ("a2", 0.5, beta), ("a3", 1.0, 0.0)] {
        scene.push_polygon(name, Polygon3::new((0..3).map(|k| at(theta(k) + rot, z)).collect()));
    }
    // The apex `θ_k + β` sits at angle arccos(-1/8) from `θ_{k+1}`, which puts it exactly
    // sin 60° away from the vertical edge there.
    for k in 0..3 {
        let t = theta((k + 1) % 3);
        let corners = vec![at(t, 0.0), at(t, 1.0), at(theta(k) + beta, 0.5)];
        scene.push_polygon(format!("b{}", k + 1), Polygon3::new(corners));
    }
    scene.declare_graph_contacts()?;
    Ok(scene)
}
