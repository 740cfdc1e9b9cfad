//! 1-plane cubic graphs as contact graphs of triangles on a `(3n/2 - 1) × (3n/2 - 1) × 3` grid.
//!
//! The modified medial graph has one vertex per uncrossed edge and one merged vertex per crossing
//! pair. Each vertex of `G` becomes the triangle on the medial vertices of its three edges, drawn
//! in the plane with Schnyder's algorithm. At every crossing the two triangles of one of the
//! crossing edges move their shared corner one unit up, or one unit down when the crossing bounds
//! the outer face (the B-configuration).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::geom::{convex_hull_planar, Point3, Q};
use crate::graph::Graph;
use crate::planar::{schnyder_draw, PlaneGraph, SchnyderDrawing};
use crate::scene::{Scene, Structure};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingVertex {
    pub id: String,
    /// Incident edge ids in counterclockwise order.
    pub rotation: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingEdge {
    pub id: String,
    pub endpoints: [String; 2],
}

/// A drawing of a graph in which every edge is crossed at most once, given combinatorially.
///
/// A crossing `[e, f]` with `e = (e0, e1)` and `f = (f0, f1)` meets its four half-edges in the
/// counterclockwise order `e0, f0, e1, f1`; if that reading is not planar the other one is tried.
/// `outer_face = [v, e]` picks the face to the left of the first piece of edge `e` leaving `v`;
/// by default the longest face is outer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OnePlaneEmbedding {
    pub vertices: Vec<EmbeddingVertex>,
    pub edges: Vec<EmbeddingEdge>,
    #[serde(default)]
    pub crossings: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_face: Option<[String; 2]>,
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    (b.0 - a.0) as i128 * (c.1 - a.1) as i128 - (b.1 - a.1) as i128 * (c.0 - a.0) as i128
}

impl OnePlaneEmbedding {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(format!("embedding JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("embedding serializes")
    }

    /// Embedding of a straight-line drawing; edges are named `u-v` by endpoint labels.
    pub fn from_drawing(g: &Graph, coords: &[(i64, i64)]) -> Result<Self> {
        if coords.len() != g.n() {
            return precondition("one coordinate per vertex");
        }
        let name = |e: usize| {
            let (u, v) = g.edges()[e];
            format!("{}-{}", g.label(u), g.label(v))
        };
        let mut vertices = Vec::new();
        for v in 0..g.n() {
            let c = coords[v];
            let mut inc: Vec<(usize, usize)> = g.neighbors(v).iter().map(|&w| (w, g.edge_index(v, w).unwrap())).collect();
            let half = |p: (i64, i64)| if p.1 > c.1 || (p.1 == c.1 && p.0 > c.0) { 0 } else { 1 };
            inc.sort_by(|a, b| {
                let (pa, pb) = (coords[a.0], coords[b.0]);
                half(pa).cmp(&half(pb)).then_with(|| 0.cmp(&orient(c, pa, pb)))
            });
            vertices.push(EmbeddingVertex { id: g.label(v).to_string(), rotation: inc.iter().map(|&(_, e)| name(e)).collect() });
        }
        let edges: Vec<EmbeddingEdge> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| EmbeddingEdge { id: name(i), endpoints: [g.label(u).to_string(), g.label(v).to_string()] })
            .collect();
        let mut crossings = Vec::new();
        let mut crossed = vec![false; g.m()];
        let es = g.edges();
        for i in 0..es.len() {
            for j in i + 1..es.len() {
                let ((a, b), (c, d)) = (es[i], es[j]);
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let (p, q, r, s) = (coords[a], coords[b], coords[c], coords[d]);
                let (o1, o2, o3, o4) = (orient(p, q, r), orient(p, q, s), orient(r, s, p), orient(r, s, q));
                if o1 == 0 && o2 == 0 {
                    let key = |x: (i64, i64)| if p.0 != q.0 { x.0 } else { x.1 };
                    let (lo1, hi1) = (key(p).min(key(q)), key(p).max(key(q)));
                    let (lo2, hi2) = (key(r).min(key(s)), key(r).max(key(s)));
                    if lo1 <= hi2 && lo2 <= hi1 {
                        return precondition(format!("edges {} and {} overlap", name(i), name(j)));
                    }
                    continue;
                }
                if o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0 {
                    if o1.signum() * o2.signum() <= 0 && o3.signum() * o4.signum() <= 0 {
                        return precondition(format!("edges {} and {} touch", name(i), name(j)));
                    }
                    continue;
                }
                if o1.signum() * o2.signum() < 0 && o3.signum() * o4.signum() < 0 {
                    if crossed[i] || crossed[j] {
                        return precondition("the drawing crosses an edge twice");
                    }
                    crossed[i] = true;
                    crossed[j] = true;
                    // Order so that the half-edges meet as e0, f0, e1, f1 counterclockwise.
                    let de = (q.0 - p.0, q.1 - p.1);
                    let df = (s.0 - r.0, s.1 - r.1);
                    let cr = de.0 as i128 * df.1 as i128 - de.1 as i128 * df.0 as i128;
                    crossings.push(if cr > 0 { [name(i), name(j)] } else { [name(j), name(i)] });
                }
            }
        }
        Ok(Self { vertices, edges, crossings, outer_face: None })
    }

    pub fn graph(&self) -> Result<Graph> {
        let mut g = Graph::new();
        for v in &self.vertices {
            if g.index_of(&v.id).is_some() {
                return Err(Error::Embedding(format!("duplicate vertex {}", v.id)));
            }
            g.add_vertex(&v.id);
        }
        for e in &self.edges {
            let idx = |l: &str| g.index_of(l).ok_or_else(|| Error::Embedding(format!("edge {} has unknown endpoint {l}", e.id)));
            let (u, v) = (idx(&e.endpoints[0])?, idx(&e.endpoints[1])?);
            g.add_edge(u, v).map_err(|_| Error::Embedding(format!("edge {} is a loop or repeats another edge", e.id)))?;
        }
        Ok(g)
    }
}

/// The embedding with ids resolved to indices.
struct Resolved {
    g: Graph,
    /// Endpoints per edge index, in the order given by the embedding.
    ends: Vec<(usize, usize)>,
    /// Incident edge indices per vertex, counterclockwise.
    rot: Vec<Vec<usize>>,
    /// Crossing pairs of edge indices.
    crossings: Vec<(usize, usize)>,
    cross_of: Vec<Option<usize>>,
    outer: Option<(usize, usize)>,
}

fn resolve(e: &OnePlaneEmbedding) -> Result<Resolved> {
    let g = e.graph()?;
    let mut edge_idx: HashMap<&str, usize> = HashMap::new();
    let mut ends = Vec::new();
    for (i, ed) in e.edges.iter().enumerate() {
        if edge_idx.insert(&ed.id, i).is_some() {
            return Err(Error::Embedding(format!("duplicate edge id {}", ed.id)));
        }
        ends.push((g.index_of(&ed.endpoints[0]).unwrap(), g.index_of(&ed.endpoints[1]).unwrap()));
    }
    let eid = |s: &str| edge_idx.get(s).copied().ok_or_else(|| Error::Embedding(format!("unknown edge id {s}")));
    let mut rot = Vec::new();
    for (v, ev) in e.vertices.iter().enumerate() {
        let r: Vec<usize> = ev.rotation.iter().map(|s| eid(s)).collect::<Result<_>>()?;
        let mut got: Vec<usize> = r.clone();
        got.sort_unstable();
        let mut want: Vec<usize> = (0..ends.len()).filter(|&i| ends[i].0 == v || ends[i].1 == v).collect();
        want.sort_unstable();
        if got != want {
            return Err(Error::Embedding(format!("rotation at {} does not list exactly its incident edges", ev.id)));
        }
        rot.push(r);
    }
    let mut cross_of = vec![None; ends.len()];
    let mut crossings = Vec::new();
    for (k, [a, b]) in e.crossings.iter().enumerate() {
        let (x, y) = (eid(a)?, eid(b)?);
        for z in [x, y] {
            if cross_of[z].is_some() {
                return Err(Error::Embedding(format!("edge {} is crossed more than once", e.edges[z].id)));
            }
            cross_of[z] = Some(k);
        }
        let (p, q) = (ends[x], ends[y]);
        if x == y || p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
            return Err(Error::Embedding(format!("crossing edges {a} and {b} must be distinct and share no endpoint")));
        }
        crossings.push((x, y));
    }
    let outer = match &e.outer_face {
        None => None,
        Some([v, ed]) => {
            let vi = g.index_of(v).ok_or_else(|| Error::Embedding(format!("unknown outer-face vertex {v}")))?;
            let ei = eid(ed)?;
            if ends[ei].0 != vi && ends[ei].1 != vi {
                return Err(Error::Embedding(format!("outer-face edge {ed} does not leave {v}")));
            }
            Some((vi, ei))
        }
    };
    Ok(Resolved { g, ends, rot, crossings, cross_of, outer })
}

/// Where a vertex of the modified medial graph comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MedialOrigin {
    /// An uncrossed edge of `G`, by edge index.
    Edge(usize),
    /// A crossing pair, by crossing index.
    Crossing(usize),
    /// Subdivision vertex on one copy of a repeated edge.
    Subdivision,
}

#[derive(Debug, Clone)]
pub struct ModifiedMedialGraph {
    pub plane: PlaneGraph,
    pub origin: Vec<MedialOrigin>,
    /// Medial vertices of the three edges at each vertex of `G`.
    pub triangles: Vec<[usize; 3]>,
    /// Dart whose left face is the outer face.
    pub outer_dart: (usize, usize),
    /// Vertex of `G` whose triangle is the outer face, when a crossing lies on the outer face.
    pub b_configuration: Option<usize>,
    /// Copies of a repeated medial edge that bounded an empty 2-gon and were dropped.
    pub dropped_parallel: usize,
}

impl ModifiedMedialGraph {
    pub fn plain_vertex_count(&self) -> usize {
        self.origin.iter().filter(|o| !matches!(o, MedialOrigin::Subdivision)).count()
    }
}

struct Planarization {
    p: PlaneGraph,
    n: usize,
}

fn planarize(r: &Resolved, flips: u64) -> Result<Planarization> {
    let n = r.g.n();
    let c = r.crossings.len();
    let piece_end = |v: usize, e: usize| -> usize {
        match r.cross_of[e] {
            Some(k) => n + k,
            None => {
                let (a, b) = r.ends[e];
                if a == v {
                    b
                } else {
                    a
                }
            }
        }
    };
    let mut rot: Vec<Vec<usize>> = (0..n).map(|v| r.rot[v].iter().map(|&e| piece_end(v, e)).collect()).collect();
    for (k, &(e, f)) in r.crossings.iter().enumerate() {
        let (e0, e1) = r.ends[e];
        let (f0, f1) = r.ends[f];
        rot.push(if flips >> k & 1 == 0 { vec![e0, f0, e1, f1] } else { vec![e0, f1, e1, f0] });
    }
    debug_assert_eq!(rot.len(), n + c);
    Ok(Planarization { p: PlaneGraph::from_rotation(rot)?, n })
}

/// Builds the modified medial graph of a cubic 1-plane embedding.
pub fn build_modified_medial(e: &OnePlaneEmbedding) -> Result<ModifiedMedialGraph> {
    let r = resolve(e)?;
    let g = &r.g;
    if !g.is_regular(3) {
        return precondition("the 1-plane construction needs a cubic graph");
    }
    if !g.is_connected() {
        return precondition("the 1-plane construction needs a connected graph");
    }
    let c = r.crossings.len();
    if c > 16 {
        return precondition("at most 16 crossings are supported");
    }
    let plan = (0..1u64 << c)
        .map(|flips| planarize(&r, flips))
        .find(|p| p.as_ref().map(|p| p.p.is_plane()).unwrap_or(false))
        .ok_or_else(|| Error::Embedding("rotation system and crossings do not describe a plane drawing".into()))??;
    let (p, n) = (&plan.p, plan.n);

    // Medial vertex of the piece from `w` to its neighbour `t` in the planarization.
    let medial_of = |w: usize, t: usize| -> usize {
        if t >= n {
            r.ends.len() + (t - n)
        } else if w >= n {
            r.ends.len() + (w - n)
        } else {
            // Graph edges were added in embedding order, so the indices agree.
            r.g.edge_index(w, t).expect("piece of an edge")
        }
    };
    // Medial edges are the corners at vertices of G: corner (w, i) joins the pieces towards
    // rot[w][i] and rot[w][i+1].
    let corner_id = |w: usize, i: usize| w * 3 + i % 3;
    let corner_ends = |cid: usize| -> (usize, usize) {
        let (w, i) = (cid / 3, cid % 3);
        let rw = p.rotation(w);
        (medial_of(w, rw[i]), medial_of(w, rw[(i + 1) % 3]))
    };
    let nm = r.ends.len() + c;
    let mut mrot: Vec<Vec<usize>> = vec![Vec::new(); nm];
    let pos = |w: usize, t: usize| p.rotation(w).iter().position(|&x| x == t).unwrap();
    for (ei, &(w1, w2)) in r.ends.iter().enumerate() {
        if r.cross_of[ei].is_some() {
            continue;
        }
        let (i1, i2) = (pos(w1, w2), pos(w2, w1));
        mrot[ei] = vec![corner_id(w2, i2 + 2), corner_id(w1, i1), corner_id(w1, i1 + 2), corner_id(w2, i2)];
    }
    for k in 0..c {
        let x = n + k;
        let mut list = Vec::new();
        for &t in p.rotation(x) {
            let j = pos(t, x);
            list.push(corner_id(t, j));
            list.push(corner_id(t, j + 2));
        }
        mrot[r.ends.len() + k] = list;
    }
    // Corner endpoints; loops cannot occur because crossing edges share no endpoint.
    let mut cend: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for w in 0..n {
        for i in 0..3 {
            cend.insert(corner_id(w, i), corner_ends(corner_id(w, i)));
        }
    }
    let other = |cend: &BTreeMap<usize, (usize, usize)>, v: usize, cid: usize| {
        let (a, b) = cend[&cid];
        if a == v {
            b
        } else {
            a
        }
    };
    // Drop one copy of every repeated edge that bounds an empty 2-gon.
    let mut dropped = 0;
    loop {
        let mut found = None;
        'scan: for u in 0..nm {
            for (i, &c1) in mrot[u].iter().enumerate() {
                let v = other(&cend, u, c1);
                let j = mrot[v].iter().position(|&x| x == c1).unwrap();
                let c2 = mrot[v][(j + mrot[v].len() - 1) % mrot[v].len()];
                let _ = i;
                if c2 != c1 && other(&cend, v, c2) == u {
                    // The face left of (u, c1) continues with (v, c2) back to u; it is a 2-gon
                    // if the next step returns to c1.
                    let k = mrot[u].iter().position(|&x| x == c2).unwrap();
                    if mrot[u][(k + mrot[u].len() - 1) % mrot[u].len()] == c1 {
                        found = Some(c2);
                        break 'scan;
                    }
                }
            }
        }
        let Some(cid) = found else { break };
        let (a, b) = cend[&cid];
        mrot[a].retain(|&x| x != cid);
        mrot[b].retain(|&x| x != cid);
        cend.remove(&cid);
        dropped += 1;
    }
    // Subdivide remaining repeated edges.
    let mut origin: Vec<MedialOrigin> =
        (0..nm).map(|v| if v < r.ends.len() { MedialOrigin::Edge(v) } else { MedialOrigin::Crossing(v - r.ends.len()) }).collect();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut next_corner = 3 * n;
    let ids: Vec<usize> = cend.keys().copied().collect();
    for cid in ids {
        let (a, b) = cend[&cid];
        if seen.insert((a.min(b), a.max(b))) {
            continue;
        }
        let d = mrot.len();
        origin.push(MedialOrigin::Subdivision);
        let (ca, cb) = (next_corner, next_corner + 1);
        next_corner += 2;
        cend.remove(&cid);
        cend.insert(ca, (a, d));
        cend.insert(cb, (d, b));
        for x in mrot[a].iter_mut().filter(|x| **x == cid) {
            *x = ca;
        }
        for x in mrot[b].iter_mut().filter(|x| **x == cid) {
            *x = cb;
        }
        mrot.push(vec![ca, cb]);
    }
    // Crossed edges have no medial vertex of their own; compact the ids.
    let keep: Vec<usize> = (0..mrot.len()).filter(|&v| !mrot[v].is_empty()).collect();
    let mut new_id = vec![usize::MAX; mrot.len()];
    for (i, &v) in keep.iter().enumerate() {
        new_id[v] = i;
    }
    let origin: Vec<MedialOrigin> = keep.iter().map(|&v| origin[v]).collect();
    let rot: Vec<Vec<usize>> = keep.iter().map(|&v| mrot[v].iter().map(|&cid| new_id[other(&cend, v, cid)]).collect()).collect();
    let plane = PlaneGraph::from_rotation(rot)?;
    if !plane.is_plane() {
        return Err(Error::Construction("modified medial graph is not plane".into()));
    }

    let triangles: Vec<[usize; 3]> = (0..n)
        .map(|w| {
            let rw = p.rotation(w);
            [new_id[medial_of(w, rw[0])], new_id[medial_of(w, rw[1])], new_id[medial_of(w, rw[2])]]
        })
        .collect();

    // Outer face of the planarization and its image in the medial graph.
    let (pfaces, pdart) = p.faces_with_darts();
    let pf = match r.outer {
        Some((v, e)) => {
            let t = match r.cross_of[e] {
                Some(k) => n + k,
                None => {
                    let (a, b) = r.ends[e];
                    if a == v {
                        b
                    } else {
                        a
                    }
                }
            };
            pdart[&(v, t)]
        }
        None => (0..pfaces.len()).max_by_key(|&f| (pfaces[f].len(), std::cmp::Reverse(f))).unwrap(),
    };
    let walk = &pfaces[pf];
    let k = walk.len();
    let mut image: Vec<usize> = Vec::new();
    for j in 0..k {
        let m = new_id[medial_of(walk[j], walk[(j + 1) % k])];
        if image.last() != Some(&m) {
            image.push(m);
        }
    }
    while image.len() > 1 && image.first() == image.last() {
        image.pop();
    }
    let distinct: BTreeSet<usize> = image.iter().copied().collect();
    let (target, b_configuration): (BTreeSet<usize>, Option<usize>) = if distinct.len() >= 3 {
        (distinct, None)
    } else {
        let j = (0..k)
            .find(|&j| walk[(j + 1) % k] >= n && walk[j] < n)
            .ok_or_else(|| Error::Construction("degenerate outer face without a crossing".into()))?;
        let a = walk[j];
        (triangles[a].iter().copied().collect(), Some(a))
    };
    let (mfaces, _) = plane.faces_with_darts();
    let fo = mfaces
        .iter()
        .position(|f| {
            let s: BTreeSet<usize> = f.iter().copied().filter(|&v| !matches!(origin[v], MedialOrigin::Subdivision)).collect();
            s == target && f.iter().filter(|&&v| !matches!(origin[v], MedialOrigin::Subdivision)).count() == target.len()
        })
        .ok_or_else(|| Error::Construction("outer face not found in the medial graph".into()))?;
    let outer_dart = (mfaces[fo][0], mfaces[fo][1]);
    Ok(ModifiedMedialGraph { plane, origin, triangles, outer_dart, b_configuration, dropped_parallel: dropped })
}

/// Details of a 1-plane construction besides the scene.
#[derive(Debug, Clone)]
pub struct OnePlaneLayout {
    pub medial: ModifiedMedialGraph,
    pub drawing: SchnyderDrawing,
    /// Per crossing: the selected edge index and the height of its lifted copy.
    pub lifts: Vec<(usize, i64)>,
}

/// Exact scene for a cubic graph from a 1-plane embedding.
pub fn represent_oneplanar_cubic(e: &OnePlaneEmbedding) -> Result<Scene<Q>> {
    Ok(oneplanar_layout(e)?.0)
}

pub fn oneplanar_layout(e: &OnePlaneEmbedding) -> Result<(Scene<Q>, OnePlaneLayout)> {
    let r = resolve(e)?;
    let med = build_modified_medial(e)?;
    let drawing = schnyder_draw(&med.plane, Some(med.outer_dart))?;
    let g = &r.g;
    let label_pair = |ei: usize| {
        let (a, b) = r.ends[ei];
        let (x, y) = (g.label(a).to_string(), g.label(b).to_string());
        if x <= y {
            (x, y)
        } else {
            (y, x)
        }
    };
    let mut lifts = Vec::new();
    for (k, &(x, y)) in r.crossings.iter().enumerate() {
        let mut sel = if label_pair(x) <= label_pair(y) { x } else { y };
        let mut z = 1;
        if let Some(a) = med.b_configuration {
            if med.triangles[a].iter().any(|&m| med.origin[m] == MedialOrigin::Crossing(k)) {
                sel = if r.ends[x].0 == a || r.ends[x].1 == a { x } else { y };
                z = -1;
            }
        }
        lifts.push((sel, z));
    }
    let mut scene: Scene<Q> = Scene::new(Structure::Graph(g.clone()), "oneplanar-cubic");
    for w in 0..g.n() {
        let corners: Vec<Point3<Q>> = med.triangles[w]
            .iter()
            .map(|&m| {
                let (x, y) = drawing.coords[m];
                let z = match med.origin[m] {
                    MedialOrigin::Crossing(k) => {
                        let (a, b) = r.ends[lifts[k].0];
                        if a == w || b == w {
                            lifts[k].1
                        } else {
                            0
                        }
                    }
                    _ => 0,
                };
                Point3::from_i64(x, y, z)
            })
            .collect();
        let tri = convex_hull_planar(&corners, false, 0.0)?;
        if tri.len() != 3 {
            return Err(Error::Construction(format!("triangle of {} is degenerate", g.label(w))));
        }
        scene.push_polygon(g.label(w).to_string(), tri);
    }
    scene.declare_graph_contacts()?;
    let side = (3 * g.n() / 2).saturating_sub(1);
    scene.meta.grid_bounds = Some([side, side, 3]);
    Ok((scene, OnePlaneLayout { medial: med, drawing, lifts }))
}

/// Handcrafted 1-plane drawings used by tests, benches and the command line.
pub mod samples {
    use super::OnePlaneEmbedding;
    use crate::graph::{families, Graph};

    fn build(g: &Graph, coords: &[(i64, i64)]) -> OnePlaneEmbedding {
        OnePlaneEmbedding::from_drawing(g, coords).expect("sample drawing is 1-plane")
    }

    /// `K_4` as a triangle around its centre; no crossings.
    pub fn k4_planar() -> OnePlaneEmbedding {
        build(&families::complete(4), &[(0, 0), (6, 0), (3, 6), (3, 2)])
    }

    /// `K_4` as a square with crossing diagonals.
    pub fn k4_crossed() -> OnePlaneEmbedding {
        build(&families::complete(4), &[(0, 0), (4, 0), (4, 4), (0, 4)])
    }

    /// The crossed square with the triangle between vertices 1 and 2 as outer face, so that the
    /// crossing lies on the outer face.
    pub fn k4_crossed_outer() -> OnePlaneEmbedding {
        let mut e = k4_crossed();
        let edge = e.vertices[0].rotation.iter().find(|id| id.as_str() == "1-2").cloned().expect("edge 1-2");
        // Walking from 1 to 2 along the bottom side, the triangle 1, X, 2 is on the left.
        e.outer_face = Some(["1".into(), edge]);
        e
    }

    /// Triangular prism, planar.
    pub fn prism_planar() -> OnePlaneEmbedding {
        build(&families::prism(3), &[(0, 0), (12, 0), (6, 10), (4, 2), (8, 2), (6, 6)])
    }

    /// Triangular prism with the inner triangle flipped so that two spokes cross.
    pub fn prism_crossed() -> OnePlaneEmbedding {
        build(&families::prism(3), &[(0, 0), (12, 0), (6, 10), (8, 2), (4, 2), (6, 6)])
    }

    /// `K_{3,3}` with a single crossing.
    pub fn k33_one_crossing() -> OnePlaneEmbedding {
        build(&families::complete_bipartite(3, 3), &[(0, 0), (10, 0), (5, 3), (5, 9), (3, 2), (7, 2)])
    }

    /// All samples by name.
    pub fn all() -> Vec<(&'static str, OnePlaneEmbedding)> {
        vec![
            ("k4-planar", k4_planar()),
            ("k4-crossed", k4_crossed()),
            ("k4-crossed-outer", k4_crossed_outer()),
            ("prism-planar", prism_planar()),
            ("prism-crossed", prism_crossed()),
            ("k33", k33_one_crossing()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{grid_extent, verify_scene};

    #[test]
    fn medial_of_planar_k4_is_octahedron() {
        let m = build_modified_medial(&samples::k4_planar()).unwrap();
        assert_eq!(m.plane.n(), 6);
        assert!((0..6).all(|v| m.plane.rotation(v).len() == 4));
        assert_eq!(m.b_configuration, None);
    }

    #[test]
    fn crossing_merges_to_one_vertex() {
        let e = samples::k4_crossed();
        assert_eq!(e.crossings.len(), 1);
        let m = build_modified_medial(&e).unwrap();
        assert_eq!(m.plain_vertex_count(), 6 - 1);
        let x = m.origin.iter().position(|o| matches!(o, MedialOrigin::Crossing(_))).unwrap();
        assert!(m.plane.rotation(x).len() <= 8);
    }

    #[test]
    fn disconnected_and_non_cubic_rejected() {
        let two = Graph::from_edges(&[("a", "b"), ("b", "c"), ("c", "a")]);
        let e = OnePlaneEmbedding::from_drawing(&two, &[(0, 0), (2, 0), (1, 2)]).unwrap();
        assert!(matches!(build_modified_medial(&e), Err(Error::Precondition(_))));
        let g = crate::graph::families::complete(4);
        let mut both = Graph::new();
        for i in 0..8 {
            both.add_vertex(&i.to_string());
        }
        for &(u, v) in g.edges() {
            both.add_edge(u, v).unwrap();
            both.add_edge(u + 4, v + 4).unwrap();
        }
        let c = [(0, 0), (6, 0), (3, 6), (3, 2), (10, 0), (16, 0), (13, 6), (13, 2)];
        let e = OnePlaneEmbedding::from_drawing(&both, &c).unwrap();
        assert!(matches!(build_modified_medial(&e), Err(Error::Precondition(_))));
    }

    #[test]
    fn samples_verify_within_bounds() {
        for (name, e) in samples::all() {
            let (s, lay) = oneplanar_layout(&e).unwrap_or_else(|err| panic!("{name}: {err}"));
            let r = verify_scene(&s, 0.0);
            assert!(r.pass, "{name}: {}", r.to_text());
            let n = s.polygons.len();
            let ext = grid_extent(&s);
            let side = 3 * n / 2 - 1;
            assert!(ext.fits([side, side, 3]), "{name}: {:?}", ext.counts);
            let zs: BTreeSet<i64> = s.contacts.iter().map(|c| c.point.z.to_integer().try_into().unwrap()).collect();
            assert!(zs.iter().all(|z| (-1..=1).contains(z)), "{name}");
            let lifted = s.contacts.iter().filter(|c| c.point.z != Q::from_integer(0.into())).count();
            assert_eq!(lifted, e.crossings.len(), "{name}");
            if e.crossings.is_empty() {
                assert!(zs == BTreeSet::from([0]), "{name}");
            }
            assert_eq!(lay.lifts.len(), e.crossings.len());
        }
    }

    #[test]
    fn outer_crossing_uses_b_configuration() {
        let (s, lay) = oneplanar_layout(&samples::k4_crossed_outer()).unwrap();
        assert!(lay.medial.b_configuration.is_some());
        assert!(s.contacts.iter().any(|c| c.point.z == Q::from_integer((-1).into())));
        assert!(verify_scene(&s, 0.0).pass);
    }

    #[test]
    fn embedding_json_round_trip() {
        let e = samples::k33_one_crossing();
        let back = OnePlaneEmbedding::from_json(&e.to_json()).unwrap();
        assert_eq!(e, back);
        let mut bad = e.clone();
        bad.vertices[0].rotation.pop();
        assert!(matches!(build_modified_medial(&bad), Err(Error::Embedding(_))));
    }
}
