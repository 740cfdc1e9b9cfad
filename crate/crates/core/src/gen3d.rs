//! Contact representations of complete graphs and graphs of minimum degree 3.
//!
//! Lines `ℓ_1..ℓ_n` in the xy-plane are placed so that along each line the intersection points
//! appear in index order with gaps that at least halve each step. Lifting `p_{i,j}` to height
//! `min(i,j)` and taking the hull of the points on `ℓ_i` gives the polygon of vertex `i`.

use crate::error::{precondition, Error, Result};
use crate::geom::{convex_hull_planar, polygon_properties, Point3, Scalar, Q};
use crate::graph::{families, Graph};
use crate::scene::{Scene, Structure};
use crate::verify::verify_scene;

type P2 = (Q, Q);

fn sub2(a: &P2, b: &P2) -> P2 {
    (a.0.clone() - b.0.clone(), a.1.clone() - b.1.clone())
}

fn dot2(a: &P2, b: &P2) -> Q {
    a.0.clone() * b.0.clone() + a.1.clone() * b.1.clone()
}

fn cross2(a: &P2, b: &P2) -> Q {
    a.0.clone() * b.1.clone() - a.1.clone() * b.0.clone()
}

/// A line `anchor + s·dir` in the xy-plane.
#[derive(Debug, Clone, PartialEq)]
pub struct Line {
    pub anchor: P2,
    pub dir: P2,
}

impl Line {
    pub fn intersect(&self, o: &Line) -> Option<P2> {
        let den = cross2(&self.dir, &o.dir);
        if den.sign(0.0) == 0 {
            return None;
        }
        let s = cross2(&sub2(&o.anchor, &self.anchor), &o.dir) / den;
        Some((self.anchor.0.clone() + s.clone() * self.dir.0.clone(), self.anchor.1.clone() + s * self.dir.1.clone()))
    }

    /// Position along the line, proportional to signed distance from the anchor.
    pub fn param(&self, p: &P2) -> Q {
        dot2(&sub2(p, &self.anchor), &self.dir)
    }
}

/// Lines with pairwise intersection points `points[i][j] = p_{i+1,j+1}` (0-based storage).
#[derive(Debug, Clone, PartialEq)]
pub struct Arrangement {
    pub lines: Vec<Line>,
    pub points: Vec<Vec<Option<P2>>>,
}

impl Arrangement {
    fn from_lines(lines: Vec<Line>) -> Result<Self> {
        let n = lines.len();
        let mut points = vec![vec![None; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let p = lines[i]
                    .intersect(&lines[j])
                    .ok_or_else(|| Error::Construction(format!("lines {} and {} are parallel", i + 1, j + 1)))?;
                points[i][j] = Some(p.clone());
                points[j][i] = Some(p);
            }
        }
        Ok(Self { lines, points })
    }

    pub fn n(&self) -> usize {
        self.lines.len()
    }

    /// `p_{i,j}` with 0-based indices.
    pub fn point(&self, i: usize, j: usize) -> &P2 {
        self.points[i][j].as_ref().expect("distinct indices")
    }

    /// Indices met along line `i`, in the required order.
    pub fn sequence(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&j| j != i).collect()
    }

    /// Failed (A1) ordering or (A2) halving conditions, as readable messages.
    pub fn audit(&self) -> Vec<String> {
        let mut bad = Vec::new();
        for i in 0..self.n() {
            let seq = self.sequence(i);
            let t: Vec<Q> = seq.iter().map(|&j| self.lines[i].param(self.point(i, j))).collect();
            let gaps: Vec<Q> = t.windows(2).map(|w| w[1].clone() - w[0].clone()).collect();
            let dir = gaps.first().map_or(0, |g| g.sign(0.0));
            if dir == 0 || gaps.iter().any(|g| g.sign(0.0) != dir) {
                bad.push(format!("line {}: intersection order", i + 1));
                continue;
            }
            for (r, w) in gaps.windows(2).enumerate() {
                let (a, b) = (w[0].abs(), w[1].abs());
                if b * Q::from_i64(2) > a {
                    bad.push(format!("line {}: gap after p_{{{},{}}} does not halve", i + 1, i + 1, seq[r + 1] + 1));
                }
            }
        }
        bad
    }
}

/// Builds `n` lines satisfying the ordering and halving conditions exactly.
pub fn build_line_arrangement(n: usize) -> Result<Arrangement> {
    if n < 3 {
        return precondition(format!("line arrangement needs n >= 3, got {n}"));
    }
    let q = |v: i64| Q::from_i64(v);
    let mut lines = vec![
        Line { anchor: (q(0), q(0)), dir: (q(1), q(0)) },
        Line { anchor: (q(0), q(0)), dir: (q(0), q(-1)) },
        Line { anchor: (q(1), q(0)), dir: (q(-1), q(-1)) },
    ];
    for k in 3..n {
        let prev = &lines[k - 1];
        let a = prev.intersect(&lines[k - 3]).expect("non-parallel");
        let b = prev.intersect(&lines[k - 2]).expect("non-parallel");
        // Pivot continues past the last point by half the last gap.
        let half = Q::from_ratio(1, 2);
        let pivot = (b.0.clone() + (b.0.clone() - a.0.clone()) * half.clone(), b.1.clone() + (b.1.clone() - a.1.clone()) * half);
        let d = prev.dir.clone();
        let cw = (d.1.clone(), -d.0.clone());
        let mut chosen = None;
        'search: for sense in [1i64, -1] {
            let mut t = Q::from_ratio(1, 2);
            for _ in 0..96 {
                let s = t.clone() * Q::from_i64(sense);
                let dir = (d.0.clone() + s.clone() * cw.0.clone(), d.1.clone() + s * cw.1.clone());
                let mut trial = lines.clone();
                trial.push(Line { anchor: pivot.clone(), dir });
                if let Ok(arr) = Arrangement::from_lines(trial) {
                    if arr.audit().is_empty() {
                        chosen = Some(arr);
                        break 'search;
                    }
                }
                t *= Q::from_ratio(1, 2);
            }
        }
        let arr = chosen.ok_or_else(|| Error::Construction(format!("no rotation found for line {}", k + 1)))?;
        lines = arr.lines;
    }
    Arrangement::from_lines(lines)
}

/// `p_{i,j}` at height `min(i,j)` (1-based), minus `delta` if it is a lowered point.
fn lift(arr: &Arrangement, i: usize, j: usize, lowered: &[(usize, usize)], delta: &Q) -> Point3<Q> {
    let (x, y) = arr.point(i, j).clone();
    let mut z = Q::from_i64(i.min(j) as i64 + 1);
    let key = (i.min(j), i.max(j));
    if lowered.contains(&key) {
        z -= delta.clone();
    }
    Point3::new(x, y, z)
}

fn build_scene(g: &Graph, arr: &Arrangement, name: &str, delta: &Q) -> Result<Scene<Q>> {
    let n = g.n();
    // Vertices whose neighbours all come later would get a collinear top edge only.
    let mut lowered = Vec::new();
    for i in 0..n {
        let k = *g.neighbors(i).iter().min().expect("min degree checked");
        if k > i {
            lowered.push((i, k));
        }
    }
    let mut scene = Scene::new(Structure::Graph(g.clone()), name);
    for i in 0..n {
        let mut nb: Vec<usize> = g.neighbors(i).to_vec();
        nb.sort_unstable();
        let pts: Vec<Point3<Q>> = nb.iter().map(|&j| lift(arr, i, j, &lowered, delta)).collect();
        let hull = convex_hull_planar(&pts, true, 0.0)?;
        if hull.len() != pts.len() {
            return Err(Error::Construction(format!("polygon {} lost a contact point", g.label(i))));
        }
        scene.push_polygon(g.label(i), hull);
    }
    scene.declare_graph_contacts()?;
    Ok(scene)
}

fn represent_on_arrangement(g: &Graph, name: &str) -> Result<Scene<Q>> {
    let arr = build_line_arrangement(g.n())?;
    let mut delta = Q::from_ratio(1, 2);
    for _ in 0..48 {
        let scene = build_scene(g, &arr, name, &delta)?;
        if verify_scene(&scene, 0.0).pass {
            return Ok(scene);
        }
        delta *= Q::from_ratio(1, 2);
    }
    Err(Error::Construction("no lowering amount passes verification".into()))
}

/// `K_n` with polygons of at most `n-1` corners; vertex labels are `1..n`.
pub fn represent_complete(n: usize) -> Result<Scene<Q>> {
    if n < 3 {
        return precondition(format!("complete graph construction needs n >= 3, got {n}"));
    }
    represent_on_arrangement(&families::complete(n), "complete")
}

/// Any graph of minimum degree 3: the `K_n` construction with non-edge points removed.
/// Vertex `i` of the arrangement is the `i`-th vertex of `g`.
pub fn represent_min_degree3(g: &Graph) -> Result<Scene<Q>> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) < 3) {
        return precondition(format!("vertex {} has degree {} < 3", g.label(v), g.degree(v)));
    }
    represent_on_arrangement(g, "mindeg3")
}

/// Perturbs contact heights so every polygon becomes strictly convex.
///
/// A contact shared by polygons `i < j` (structure order) drops by `δ / t`, where `t` is its
/// offset along `ℓ_i` from the first contact of polygon `i`. Contacts at offset zero are the
/// already lowered ones and stay put.
pub fn strictify(s: &Scene<Q>) -> Result<Scene<Q>> {
    let Structure::Graph(g) = &s.structure else {
        return precondition("strictify needs a graph scene");
    };
    let idx = |label: &str| g.index_of(label).expect("polygon label is a vertex");
    let mut drops: Vec<(Point3<Q>, Q)> = Vec::new();
    for c in &s.contacts {
        let (a, b) = (idx(&c.elements[0]), idx(&c.elements[1]));
        let m = a.min(b);
        let poly = s.polygon(g.label(m)).ok_or_else(|| Error::Construction("missing polygon".into()))?;
        let first = s
            .contacts
            .iter()
            .filter(|d| d.elements.iter().any(|e| idx(e) == m))
            .min_by_key(|d| d.elements.iter().map(|e| idx(e)).find(|&x| x != m).unwrap())
            .map(|d| d.point.clone())
            .expect("contact exists");
        let far = poly
            .corners
            .iter()
            .find(|p| p.x != first.x || p.y != first.y)
            .ok_or_else(|| Error::Construction("polygon has a single xy position".into()))?;
        let u = ((far.x.clone() - first.x.clone()), (far.y.clone() - first.y.clone()));
        let t = ((c.point.x.clone() - first.x.clone()) * u.0 + (c.point.y.clone() - first.y.clone()) * u.1).abs();
        if t.sign(0.0) != 0 {
            drops.push((c.point.clone(), Q::from_i64(1) / t));
        }
    }
    let mut delta = Q::from_ratio(1, 2);
    for _ in 0..64 {
        let out = s.map_points(|p| match drops.iter().find(|(q, _)| q == p) {
            Some((_, w)) => Point3::new(p.x.clone(), p.y.clone(), p.z.clone() - delta.clone() * w.clone()),
            None => p.clone(),
        });
        let strict = out.polygons.iter().all(|p| p.polygon.len() < 3 || polygon_properties(&p.polygon, 0.0).strictly_convex);
        if strict && verify_scene(&out, 0.0).pass {
            let mut out = out;
            out.meta.construction = format!("{}+strict", s.meta.construction.trim_end_matches("+strict"));
            return Ok(out);
        }
        delta *= Q::from_ratio(1, 2);
    }
    Err(Error::Construction("strictification failed at every perturbation size".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::qi;
    use crate::graph::families;

    #[test]
    fn base_lines() {
        let a = build_line_arrangement(3).unwrap();
        assert_eq!(a.point(0, 2), &(qi(1), qi(0)));
        assert_eq!(a.point(1, 2), &(qi(0), qi(-1)));
        assert_eq!(a.point(0, 1), &(qi(0), qi(0)));
        assert!(a.audit().is_empty());
    }

    #[test]
    fn arrangement_audits_clean() {
        for n in 3..=8 {
            assert!(build_line_arrangement(n).unwrap().audit().is_empty(), "n={n}");
        }
        assert!(build_line_arrangement(2).is_err());
    }

    #[test]
    fn k4_and_k5() {
        let s = represent_complete(4).unwrap();
        let r = verify_scene(&s, 0.0);
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(r.contact_count(), 6);
        let s5 = represent_complete(5).unwrap();
        assert!(s5.polygons.iter().all(|p| p.polygon.len() == 4));
    }

    #[test]
    fn k3_is_degenerate() {
        let s = represent_complete(3).unwrap();
        assert!(s.meta.degenerate);
        assert!(s.polygons.iter().all(|p| p.polygon.len() == 2));
    }

    #[test]
    fn petersen_min_degree3() {
        let s = represent_min_degree3(&families::petersen()).unwrap();
        let r = verify_scene(&s, 0.0);
        assert!(r.pass);
        assert_eq!(r.contact_count(), 15);
        assert!(represent_min_degree3(&families::cycle(5)).is_err());
    }

    #[test]
    fn k4_min_degree3_matches_complete() {
        assert_eq!(represent_min_degree3(&families::complete(4)).unwrap().polygons, represent_complete(4).unwrap().polygons);
    }

    #[test]
    fn strictify_k5() {
        let s = strictify(&represent_complete(5).unwrap()).unwrap();
        assert!(s.polygons.iter().all(|p| polygon_properties(&p.polygon, 0.0).strictly_convex));
        let again = strictify(&s).unwrap();
        assert_eq!(verify_scene(&again, 0.0).contacts.len(), 10);
    }
}
