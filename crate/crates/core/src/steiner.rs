//! Steiner systems: triangle drawings of the Fano plane and `S(2,3,9)`, the quadruple-system
//! obstructions, and coplanarity scans over scenes.

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::geom::{convex_hull_planar, polygon_properties, Point3, Scalar};
use crate::hypergraph::{builtin_system, validate_steiner, Hypergraph, SteinerDescriptor};
use crate::scene::{Scene, Structure};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FanoParams {
    /// Rotation of the top triangle in degrees.
    pub alpha: f64,
}

impl Default for FanoParams {
    fn default() -> Self {
        Self { alpha: 85.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct S239Params {
    /// Rotation of the top triangle in degrees.
    pub beta: f64,
    /// Scale of the top triangle about its center.
    pub scale: f64,
    /// Height added to the plane-intersection point `P` to place vertex 7.
    pub lift: f64,
}

impl Default for S239Params {
    fn default() -> Self {
        Self { beta: 45.0, scale: 0.2, lift: 0.1 }
    }
}

/// Corner of the unit equilateral triangle centered on the z-axis at polar angle `deg`.
fn unit_tri_corner(deg: f64, z: f64) -> Point3<f64> {
    let r = 1.0 / 3f64.sqrt();
    let t = deg.to_radians();
    Point3::new(r * t.cos(), r * t.sin(), z)
}

/// One triangle per block through the given vertex positions, one contact per vertex.
fn drawing(h: Hypergraph, pos: &[Point3<f64>], name: &str) -> Result<Scene<f64>> {
    let mut scene: Scene<f64> = Scene::new(Structure::Hypergraph(h.clone()), name);
    for (b, block) in h.blocks().iter().enumerate() {
        let pts: Vec<Point3<f64>> = block.iter().map(|&v| pos[v].clone()).collect();
        let poly = convex_hull_planar(&pts, false, scene.meta.epsilon)?;
        if poly.len() != block.len() {
            return Err(Error::Construction(format!("block {} is degenerate", h.block_label(b))));
        }
        scene.push_polygon(h.block_label(b), poly);
    }
    for v in 0..h.n() {
        scene.push_contact(pos[v].clone(), vec![h.label(v).to_string()]);
    }
    Ok(scene)
}

fn positions(h: &Hypergraph, placed: &[(&str, Point3<f64>)]) -> Vec<Point3<f64>> {
    let mut pos = vec![Point3::origin(); h.n()];
    for (l, p) in placed {
        pos[h.index_of(l).expect("label of the built-in table")] = p.clone();
    }
    pos
}

/// The Fano plane by seven triangles.
///
/// Block `642` is the unit triangle at `z = 0` (counterclockwise); its copy lifted by one and
/// rotated by `alpha` carries `3, 5, 7` in place of `6, 4, 2`. Vertex 1 sits at `(0, 0, 1/2)`.
pub fn represent_fano(p: FanoParams) -> Result<Scene<f64>> {
    if !(p.alpha > 0.0 && p.alpha < 120.0) || (p.alpha - 60.0).abs() < 1e-9 {
        return precondition(format!("alpha must lie in (0°, 120°) and differ from 60°, got {}", p.alpha));
    }
    let h = builtin_system("S237")?;
    let bottom = [("2", 210.0), ("6", 330.0), ("4", 90.0)];
    let top = [("7", 210.0), ("3", 330.0), ("5", 90.0)];
    let mut placed: Vec<(&str, Point3<f64>)> = bottom.iter().map(|&(l, a)| (l, unit_tri_corner(a, 0.0))).collect();
    placed.extend(top.iter().map(|&(l, a)| (l, unit_tri_corner(a + p.alpha, 1.0))));
    placed.push(("1", Point3::new(0.0, 0.0, 0.5)));
    drawing(h.clone(), &positions(&h, &placed), "fano")
}

fn plane_of(a: &Point3<f64>, b: &Point3<f64>, c: &Point3<f64>) -> (Point3<f64>, f64) {
    let n = b.sub(a).cross(&c.sub(a));
    let d = n.dot(a);
    (n, d)
}

/// Common point of three planes `n·x = d`, if they meet in a single point.
fn meet3(p: [(Point3<f64>, f64); 3]) -> Option<Point3<f64>> {
    let [(n1, d1), (n2, d2), (n3, d3)] = p;
    let det = n1.dot(&n2.cross(&n3));
    if det.abs() < 1e-12 {
        return None;
    }
    let x = n2.cross(&n3).scale(&d1).add(&n3.cross(&n1).scale(&d2)).add(&n1.cross(&n2).scale(&d3));
    Some(x.scale(&(1.0 / det)))
}

/// `S(2,3,9)` by twelve triangles.
///
/// Block `852` is the unit triangle at `z = 0`; its copy lifted by one, rotated by `beta` and
/// scaled by `scale` gives block `369`. Vertices 1 and 4 sit on the z-axis at heights 3/4 and 1/4.
/// Vertex 7 is the point `P` where the vertical plane through 8 and 9 meets the line common to
/// planes `358` and `269`, lifted by `lift` while staying below plane `123`.
pub fn represent_s239(p: S239Params) -> Result<Scene<f64>> {
    if !(p.beta > 0.0 && p.beta < 60.0) {
        return precondition(format!("beta must lie in (0°, 60°), got {}", p.beta));
    }
    if !(p.scale > 0.0 && p.scale < 1.0) {
        return precondition(format!("scale must lie in (0, 1), got {}", p.scale));
    }
    if p.lift <= 0.0 {
        return precondition(format!("lift must be positive, got {}", p.lift));
    }
    let h = builtin_system("S239")?;
    let bottom = [("8", 210.0), ("5", 330.0), ("2", 90.0)];
    let top = [("3", 210.0), ("6", 330.0), ("9", 90.0)];
    let mut placed: Vec<(&str, Point3<f64>)> = bottom.iter().map(|&(l, a)| (l, unit_tri_corner(a, 0.0))).collect();
    for (l, a) in top {
        let c = unit_tri_corner(a + p.beta, 1.0);
        placed.push((l, Point3::new(c.x * p.scale, c.y * p.scale, 1.0)));
    }
    placed.push(("1", Point3::new(0.0, 0.0, 0.75)));
    placed.push(("4", Point3::new(0.0, 0.0, 0.25)));
    let at = |l: &str| placed.iter().find(|(k, _)| *k == l).expect("placed").1.clone();
    let (p8, p9) = (at("8"), at("9"));
    let up = Point3::new(0.0, 0.0, 1.0);
    let hn = p9.sub(&p8).cross(&up);
    let vertical = (hn.clone(), hn.dot(&p8));
    let pt = meet3([plane_of(&at("3"), &at("5"), &p8), plane_of(&at("2"), &at("6"), &p9), vertical])
        .ok_or_else(|| Error::Construction("planes 358, 269 and the plane through 89 do not meet in a point".into()))?;
    let seven = pt.add(&up.scale(&p.lift));
    let (n123, d123) = plane_of(&at("1"), &at("2"), &at("3"));
    let side = |q: &Point3<f64>| (n123.dot(q) - d123).signum();
    if side(&seven) != side(&pt) {
        return precondition(format!("lift {} puts vertex 7 on or above plane 123", p.lift));
    }
    placed.push(("7", seven));
    drawing(h.clone(), &positions(&h, &placed), "s239")
}

/// Letters of the obstruction pattern, in assignment order.
pub const F_LETTERS: [char; 10] = ['a', 'b', 'c', 'd', 'u', 'v', 'w', 'x', 'y', 'z'];

/// The seven blocks `abcd, abuv, cduv, acwx, bdwx, adyz, bcyz` as letter indices.
pub const F_BLOCKS: [[usize; 4]; 7] = [[0, 1, 2, 3], [0, 1, 4, 5], [2, 3, 4, 5], [0, 2, 6, 7], [1, 3, 6, 7], [0, 3, 8, 9], [1, 2, 8, 9]];

/// Vertex labels assigned to `a, b, c, d, u, v, w, x, y, z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FAssignment(pub [String; 10]);

impl FAssignment {
    pub fn from_labels(labels: [&str; 10]) -> Self {
        Self(labels.map(String::from))
    }

    pub fn get(&self, letter: char) -> &str {
        let i = F_LETTERS.iter().position(|&c| c == letter).expect("pattern letter");
        &self.0[i]
    }

    /// The seven pattern blocks under this assignment.
    pub fn blocks(&self) -> Vec<Vec<String>> {
        F_BLOCKS.iter().map(|b| b.iter().map(|&i| self.0[i].clone()).collect()).collect()
    }

    pub fn describe(&self) -> String {
        F_LETTERS.iter().zip(&self.0).map(|(c, l)| format!("{c}={l}")).collect::<Vec<_>>().join(", ")
    }
}

fn block_set(h: &Hypergraph) -> std::collections::BTreeSet<Vec<usize>> {
    h.blocks()
        .iter()
        .map(|b| {
            let mut s = b.clone();
            s.sort_unstable();
            s
        })
        .collect()
}

fn has_block(set: &std::collections::BTreeSet<Vec<usize>>, vs: [usize; 4]) -> bool {
    let mut s = vs.to_vec();
    s.sort_unstable();
    set.contains(&s)
}

/// True when the assignment names ten distinct vertices of `h` and all seven blocks exist.
pub fn check_f_assignment(h: &Hypergraph, a: &FAssignment) -> bool {
    let Some(idx) = a.0.iter().map(|l| h.index_of(l)).collect::<Option<Vec<usize>>>() else {
        return false;
    };
    let distinct: std::collections::BTreeSet<usize> = idx.iter().copied().collect();
    let set = block_set(h);
    distinct.len() == 10 && F_BLOCKS.iter().all(|b| has_block(&set, b.map(|i| idx[i])))
}

/// First assignment of the obstruction pattern in `h`, searching blocks for `abcd` in order and
/// all orderings of each.
pub fn find_obstruction_pattern(h: &Hypergraph) -> Result<Option<FAssignment>> {
    if !h.is_uniform(4) {
        return precondition("the obstruction pattern needs a 4-uniform hypergraph");
    }
    let set = block_set(h);
    // The two vertices completing a block with `p`, `q`, excluding `avoid`.
    let pairs = |p: usize, q: usize| -> Vec<(usize, usize)> {
        h.blocks()
            .iter()
            .filter(|b| b.contains(&p) && b.contains(&q))
            .map(|b| {
                let mut r: Vec<usize> = b.iter().copied().filter(|&v| v != p && v != q).collect();
                r.sort_unstable();
                (r[0], r[1])
            })
            .collect()
    };
    for b0 in h.blocks() {
        for perm in itertools::Itertools::permutations(b0.iter().copied(), 4) {
            let [a, b, c, d] = [perm[0], perm[1], perm[2], perm[3]];
            let core = [a, b, c, d];
            let fresh = |u: usize, v: usize, used: &[usize]| !used.contains(&u) && !used.contains(&v);
            for (u, v) in pairs(a, b) {
                if !fresh(u, v, &core) || !has_block(&set, [c, d, u, v]) {
                    continue;
                }
                let used1 = [a, b, c, d, u, v];
                for (w, x) in pairs(a, c) {
                    if !fresh(w, x, &used1) || !has_block(&set, [b, d, w, x]) {
                        continue;
                    }
                    let used2 = [a, b, c, d, u, v, w, x];
                    for (y, z) in pairs(a, d) {
                        if fresh(y, z, &used2) && has_block(&set, [b, c, y, z]) {
                            let labels = [a, b, c, d, u, v, w, x, y, z].map(|i| h.label(i).to_string());
                            return Ok(Some(FAssignment(labels)));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateKind {
    /// Drawing by convex quadrilaterals is impossible.
    ConvexQuadObstruction,
    /// Drawing by any quadrilaterals is impossible.
    AnyQuadObstruction,
    /// The eight-vertex system, excluded by a separate argument about supporting planes.
    #[serde(rename = "KnownCase_S348")]
    KnownCaseS348,
    Inconclusive,
}

/// Counting evidence at one vertex `v` of a Steiner quadruple system on `n` vertices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub kind: CertificateKind,
    pub n: usize,
    /// Quadrilaterals through `v`: `(n-1)(n-2)/6`.
    pub vertex_degree: usize,
    /// Link-graph edges when every quadrilateral at `v` is convex and split into two triangles.
    pub convex_link_edges: usize,
    /// Link-graph edges guaranteed for arbitrary quadrilaterals.
    pub any_link_edges: usize,
    /// Maximum edges of a planar graph on the `n-1` link vertices.
    pub planar_bound: usize,
}

/// Decides what the link-graph count rules out for `S(3,4,n)`.
pub fn counting_certificate(h: &Hypergraph, d: SteinerDescriptor) -> Result<ObstructionCertificate> {
    if d.t != 3 || d.k != 4 {
        return precondition(format!("counting certificate needs S(3,4,n), got S({},{},{})", d.t, d.k, d.n));
    }
    let v = validate_steiner(h, d);
    if !v.valid {
        return precondition(format!("not a Steiner quadruple system: {}", v.reason.unwrap_or_default()));
    }
    let n = d.n;
    let vertex_degree = (n - 1) * (n - 2) / 6;
    let convex_link_edges = 2 * vertex_degree;
    let any_link_edges = vertex_degree;
    let planar_bound = (3 * (n - 1)).saturating_sub(6);
    let kind = if any_link_edges > planar_bound {
        CertificateKind::AnyQuadObstruction
    } else if convex_link_edges > planar_bound {
        CertificateKind::ConvexQuadObstruction
    } else if n == 8 {
        CertificateKind::KnownCaseS348
    } else {
        CertificateKind::Inconclusive
    };
    Ok(ObstructionCertificate { kind, n, vertex_degree, convex_link_edges, any_link_edges, planar_bound })
}

/// `S(3,4,2n)` from `S(3,4,n)` by doubling: the old blocks on both copies, plus
/// `{x, y, z', w'}` for edges `xy`, `zw` of the same class of a round-robin 1-factorization.
pub fn double_quadruple_system(h: &Hypergraph) -> Result<Hypergraph> {
    let n = h.n();
    if n % 2 == 1 || !h.is_uniform(4) {
        return precondition("doubling needs a 4-uniform system on an even number of vertices");
    }
    let lab = |v: usize, copy: usize| format!("{}{}", h.label(v), if copy == 0 { "a" } else { "b" });
    let vertices: Vec<String> = (0..2).flat_map(|c| (0..n).map(move |v| (v, c))).map(|(v, c)| lab(v, c)).collect();
    let mut blocks: Vec<Vec<String>> = Vec::new();
    for c in 0..2 {
        for b in h.blocks() {
            blocks.push(b.iter().map(|&v| lab(v, c)).collect());
        }
    }
    // Round-robin: vertex n-1 fixed, the rest rotate.
    let m = n - 1;
    let classes: Vec<Vec<(usize, usize)>> = (0..m)
        .map(|r| {
            let mut f = vec![(r, m)];
            for k in 1..n / 2 {
                f.push(((r + k) % m, (r + m - k) % m));
            }
            f
        })
        .collect();
    for f in &classes {
        for &(x, y) in f {
            for &(z, w) in f {
                blocks.push(vec![lab(x, 0), lab(y, 0), lab(z, 1), lab(w, 1)]);
            }
        }
    }
    Hypergraph::new(&vertices, &blocks)
}

/// A plane `normal · p = offset` holding `count` contact points.
#[derive(Debug, Clone, PartialEq)]
pub struct CoplanarWitness<S> {
    pub count: usize,
    pub normal: Point3<S>,
    pub offset: S,
    /// Element labels of the contacts on the plane.
    pub elements: Vec<String>,
}

/// Largest number of contact points of `s` on a common plane, by scanning planes through triples.
pub fn max_coplanar_vertices<S: Scalar>(s: &Scene<S>, eps: f64) -> Result<CoplanarWitness<S>> {
    let mut pts: Vec<(Point3<S>, String)> = Vec::new();
    for c in &s.contacts {
        if !pts.iter().any(|(p, _)| p.same(&c.point, eps)) {
            pts.push((c.point.clone(), c.elements.join(",")));
        }
    }
    let k = pts.len();
    if k < 3 {
        return precondition(format!("need at least 3 distinct contact points, got {k}"));
    }
    let mut best: Option<CoplanarWitness<S>> = None;
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let n = pts[j].0.sub(&pts[i].0).cross(&pts[l].0.sub(&pts[i].0));
                if n.is_zero(eps) {
                    continue;
                }
                let d = n.dot(&pts[i].0);
                let on: Vec<usize> = (0..k).filter(|&q| (n.dot(&pts[q].0) - d.clone()).sign(eps) == 0).collect();
                if best.as_ref().is_none_or(|b| on.len() > b.count) {
                    let elements = on.iter().map(|&q| pts[q].1.clone()).collect();
                    best = Some(CoplanarWitness { count: on.len(), normal: n, offset: d, elements });
                }
            }
        }
    }
    match best {
        Some(b) => Ok(b),
        None => {
            // All points on one line: any plane through it holds them all.
            let dir = pts[1].0.sub(&pts[0].0);
            let axis = [Point3::from_i64(1, 0, 0), Point3::from_i64(0, 1, 0), Point3::from_i64(0, 0, 1)]
                .into_iter()
                .map(|a| dir.cross(&a))
                .find(|n| !n.is_zero(eps))
                .expect("distinct points span a direction");
            let d = axis.dot(&pts[0].0);
            Ok(CoplanarWitness { count: k, normal: axis, offset: d, elements: pts.into_iter().map(|p| p.1).collect() })
        }
    }
}

/// Pairs of 2D polygons with the same supporting plane.
pub fn coplanar_polygon_pairs<S: Scalar>(s: &Scene<S>, eps: f64) -> Vec<(String, String)> {
    let planes: Vec<Option<(Point3<S>, S)>> = s
        .polygons
        .iter()
        .map(|p| {
            let props = polygon_properties(&p.polygon, eps);
            if !props.planar || p.polygon.len() < 3 {
                return None;
            }
            let n = p.polygon.newell_normal();
            (!n.is_zero(eps)).then(|| {
                let d = n.dot(&p.polygon.corners[0]);
                (n, d)
            })
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..s.polygons.len() {
        let Some((n, d)) = &planes[i] else { continue };
        for j in i + 1..s.polygons.len() {
            if planes[j].is_none() {
                continue;
            }
            let on = s.polygons[j].polygon.corners.iter().all(|c| (n.dot(c) - d.clone()).sign(eps) == 0);
            if on {
                out.push((s.polygons[i].label.clone(), s.polygons[j].label.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Polygon3, Q};
    use crate::hypergraph::builtin_descriptor;
    use crate::verify::verify_scene;

    #[test]
    fn fano_default_verifies() {
        let s = represent_fano(FanoParams::default()).unwrap();
        let r = verify_scene(&s, 1e-6);
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(s.polygons.len(), 7);
        assert_eq!(s.contacts.len(), 7);
        let one = &s.contacts.iter().find(|c| c.elements == ["1"]).unwrap().point;
        assert_eq!((one.x, one.y, one.z), (0.0, 0.0, 0.5));
        let bottom = s.polygon("246").unwrap();
        assert!(bottom.corners.iter().all(|c| c.z == 0.0));
    }

    #[test]
    fn fano_alpha_range() {
        assert!(represent_fano(FanoParams { alpha: 60.0 }).is_err());
        assert!(represent_fano(FanoParams { alpha: 0.0 }).is_err());
        assert!(represent_fano(FanoParams { alpha: 120.0 }).is_err());
        for alpha in [10.0, 30.0, 59.0, 61.0, 100.0, 119.0] {
            let s = represent_fano(FanoParams { alpha }).unwrap();
            assert!(verify_scene(&s, 1e-6).pass, "alpha={alpha}");
        }
    }

    #[test]
    fn s239_default_matches_figure() {
        let s = represent_s239(S239Params::default()).unwrap();
        let r = verify_scene(&s, 1e-6);
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(s.polygons.len(), 12);
        assert_eq!(s.contacts.len(), 9);
        let at = |l: &str| s.contacts.iter().find(|c| c.elements == [l]).unwrap().point.clone();
        let seven = at("7");
        assert!((seven.x + 0.23259).abs() < 1e-4 && (seven.y + 0.05196).abs() < 1e-4);
        assert!((seven.z - 1.43629).abs() < 1e-4);
        let three = at("3");
        assert!((three.x + 0.03).abs() < 0.005 && (three.y + 0.11).abs() < 0.005);
        let pts: Vec<Point3<f64>> = s.contacts.iter().map(|c| c.point.clone()).collect();
        let ext = |f: fn(&Point3<f64>) -> f64| {
            let v: Vec<f64> = pts.iter().map(f).collect();
            v.iter().cloned().fold(f64::MIN, f64::max) - v.iter().cloned().fold(f64::MAX, f64::min)
        };
        assert!(ext(|p| p.x) <= 1.0 + 1e-9 && ext(|p| p.y) <= 1.0 + 1e-9 && ext(|p| p.z) <= 1.5 + 1e-9);
        let mut min = f64::MAX;
        for i in 0..9 {
            for j in 0..i {
                let d = pts[i].sub(&pts[j]);
                min = min.min(d.dot(&d).sqrt());
            }
        }
        assert!((min - 0.2).abs() < 1e-9, "{min}");
    }

    #[test]
    fn s239_parameter_errors() {
        assert!(represent_s239(S239Params { beta: 60.0, ..Default::default() }).is_err());
        assert!(represent_s239(S239Params { lift: 5.0, ..Default::default() }).is_err());
    }

    #[test]
    fn f_pattern_in_s3410() {
        let h = builtin_system("S3410").unwrap();
        let found = find_obstruction_pattern(&h).unwrap().expect("pattern exists");
        assert!(check_f_assignment(&h, &found));
        let paper = FAssignment::from_labels(["1", "4", "2", "5", "7", "9", "6", "0", "3", "8"]);
        assert!(check_f_assignment(&h, &paper));
    }

    #[test]
    fn f_pattern_identity_and_absent() {
        let letters: Vec<String> = F_LETTERS.iter().map(|c| c.to_string()).collect();
        let blocks: Vec<Vec<String>> = F_BLOCKS.iter().map(|b| b.iter().map(|&i| letters[i].clone()).collect()).collect();
        let h = Hypergraph::new(&letters, &blocks).unwrap();
        let found = find_obstruction_pattern(&h).unwrap().unwrap();
        assert_eq!(found.0.to_vec(), letters);
        let one = Hypergraph::new(&["1", "2", "3", "4"], &[vec!["1", "2", "3", "4"]]).unwrap();
        assert_eq!(find_obstruction_pattern(&one).unwrap(), None);
        assert!(find_obstruction_pattern(&builtin_system("S237").unwrap()).is_err());
    }

    #[test]
    fn counting_certificates() {
        let c = counting_certificate(&builtin_system("S3410").unwrap(), builtin_descriptor("S3410").unwrap()).unwrap();
        assert_eq!(c.kind, CertificateKind::ConvexQuadObstruction);
        assert_eq!((c.convex_link_edges, c.planar_bound), (24, 21));
        let c = counting_certificate(&builtin_system("S348").unwrap(), builtin_descriptor("S348").unwrap()).unwrap();
        assert_eq!(c.kind, CertificateKind::KnownCaseS348);
        assert_eq!((c.convex_link_edges, c.planar_bound), (14, 15));
        let h20 = double_quadruple_system(&builtin_system("S3410").unwrap()).unwrap();
        let d20 = SteinerDescriptor::new(3, 4, 20).unwrap();
        assert!(validate_steiner(&h20, d20).valid);
        let c = counting_certificate(&h20, d20).unwrap();
        assert_eq!(c.kind, CertificateKind::AnyQuadObstruction);
        assert_eq!((c.any_link_edges, c.planar_bound), (57, 51));
        assert!(c.convex_link_edges > c.planar_bound);
        assert!(counting_certificate(&builtin_system("S237").unwrap(), builtin_descriptor("S237").unwrap()).is_err());
    }

    #[test]
    fn coplanar_scans() {
        let h = Hypergraph::new(&["p", "q", "r", "s"], &[vec!["p", "q", "r", "s"]]).unwrap();
        let mut s: Scene<Q> = Scene::new(Structure::Hypergraph(h), "test");
        let sq = [(0, 0), (1, 0), (1, 1), (0, 1)];
        for (l, (x, y)) in ["p", "q", "r", "s"].iter().zip(sq) {
            s.push_contact(Point3::from_i64(x, y, 0), vec![l.to_string()]);
        }
        assert_eq!(max_coplanar_vertices(&s, 0.0).unwrap().count, 4);

        let tet = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)];
        let mut t = s.clone();
        for (c, p) in t.contacts.iter_mut().zip(tet) {
            c.point = Point3::from_i64(p.0, p.1, p.2);
        }
        assert_eq!(max_coplanar_vertices(&t, 0.0).unwrap().count, 3);

        let fano = represent_fano(FanoParams::default()).unwrap();
        let w = max_coplanar_vertices(&fano, 1e-9).unwrap();
        assert!(w.count >= 3);
        let bottom = fano.contacts.iter().filter(|c| ["2", "4", "6"].contains(&c.elements[0].as_str()));
        assert_eq!(bottom.count(), 3);
        assert!(coplanar_polygon_pairs(&fano, 1e-9).is_empty());

        let h2 = Hypergraph::new(&["1", "2", "3", "4"], &[vec!["1", "2", "3"], vec!["2", "3", "4"]]).unwrap();
        let mut two: Scene<Q> = Scene::new(Structure::Hypergraph(h2), "test");
        two.push_polygon("123", Polygon3::new(vec![Point3::from_i64(0, 0, 0), Point3::from_i64(1, 0, 0), Point3::from_i64(0, 1, 0)]));
        two.push_polygon("234", Polygon3::new(vec![Point3::from_i64(3, 0, 0), Point3::from_i64(4, 0, 0), Point3::from_i64(3, 1, 0)]));
        assert_eq!(coplanar_polygon_pairs(&two, 0.0), vec![("123".to_string(), "234".to_string())]);
        let empty: Scene<Q> = Scene::new(Structure::Hypergraph(Hypergraph::new::<&str>(&[], &[]).unwrap()), "empty");
        assert!(coplanar_polygon_pairs(&empty, 0.0).is_empty());
    }
}
