//! Cubic graphs, and graphs of maximum degree 3, as contact graphs of triangles.
//!
//! A perfect matching splits a bridgeless cubic graph into the matching and vertex-disjoint cycles.
//! The floorplan is a wheel whose rim lists the contact points of consecutive cycle vertices, so
//! every cycle vertex is the triangle on a rim edge with apex above the hub. Matched triangles
//! share their apex and each matching edge owns one apex level; the last vertex of a cycle is
//! drawn as a horizontal triangle on the chord of its arc, above the rest of the cycle.
//!
//! With bridges, each 2-edge-connected component gets its own floorplan, bridge endpoints become
//! feet, and the floorplans are glued at the bridge points and drawn with Schnyder's algorithm.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};

use crate::error::{precondition, Error, Result};
use crate::geom::{convex_hull_planar, Point3, Q};
use crate::graph::Graph;
use crate::planar::{schnyder_draw, PlaneGraph};
use crate::scene::{Scene, Structure};

/// A perfect matching and the cycles left after removing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PetersenDecomposition {
    pub matching: Vec<(usize, usize)>,
    /// Vertex-disjoint cycles covering all vertices, each in traversal order.
    pub cycles: Vec<Vec<usize>>,
}

impl PetersenDecomposition {
    pub fn mate(&self, v: usize) -> usize {
        self.matching
            .iter()
            .find_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .expect("matched vertex")
    }
}

/// Maximum matching by the blossom algorithm, if it is perfect.
pub fn perfect_matching(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let mut pg: UnGraph<(), ()> = UnGraph::with_capacity(g.n(), g.m());
    for _ in 0..g.n() {
        pg.add_node(());
    }
    for &(u, v) in g.edges() {
        pg.add_edge(NodeIndex::new(u), NodeIndex::new(v), ());
    }
    let m = maximum_matching(&pg);
    if !m.is_perfect() {
        return None;
    }
    let mut out: Vec<(usize, usize)> = m.edges().map(|(a, b)| (a.index().min(b.index()), a.index().max(b.index()))).collect();
    out.sort_unstable();
    Some(out)
}

fn complement_cycles(g: &Graph, matching: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut mate = vec![usize::MAX; g.n()];
    for &(a, b) in matching {
        mate[a] = b;
        mate[b] = a;
    }
    let mut seen = vec![false; g.n()];
    let mut cycles = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let (mut prev, mut cur) = (usize::MAX, s);
        loop {
            let next = g.neighbors(cur).iter().copied().find(|&w| w != mate[cur] && w != prev && (!seen[w] || (w == s && cyc.len() > 2)));
            match next {
                Some(w) if w == s => break,
                Some(w) => {
                    seen[w] = true;
                    cyc.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        cycles.push(cyc);
    }
    cycles
}

/// Bridges of `g` as `(min, max)` vertex pairs.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // Iterative DFS: (vertex, parent, next neighbour index).
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
            if *i < g.degree(v) {
                let w = g.neighbors(v)[*i];
                *i += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push((p.min(v), p.max(v)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn petersen_decompose(g: &Graph) -> Result<PetersenDecomposition> {
    if !g.is_regular(3) {
        return precondition("Petersen decomposition needs a cubic graph");
    }
    if let Some(&(u, v)) = bridges(g).first() {
        return Err(Error::Bridge { u: g.label(u).to_string(), v: g.label(v).to_string() });
    }
    let matching = perfect_matching(g).ok_or_else(|| Error::Construction("no perfect matching found".into()))?;
    let cycles = complement_cycles(g, &matching);
    Ok(PetersenDecomposition { matching, cycles })
}

/// 2-edge-connected components joined by bridges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeBlockTree {
    pub components: Vec<Vec<usize>>,
    pub component_of: Vec<usize>,
    pub bridges: Vec<(usize, usize)>,
    /// Component pair per bridge, in the order of `bridges`.
    pub tree_edges: Vec<(usize, usize)>,
}

pub fn bridge_block_tree(g: &Graph) -> Result<BridgeBlockTree> {
    if !g.is_connected() {
        return precondition("bridge-block tree of a disconnected graph");
    }
    let br = bridges(g);
    let is_bridge: BTreeSet<(usize, usize)> = br.iter().copied().collect();
    let mut component_of = vec![usize::MAX; g.n()];
    let mut components = Vec::new();
    for s in 0..g.n() {
        if component_of[s] != usize::MAX {
            continue;
        }
        let c = components.len();
        let mut comp = vec![s];
        component_of[s] = c;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if component_of[w] == usize::MAX && !is_bridge.contains(&(v.min(w), v.max(w))) {
                    component_of[w] = c;
                    comp.push(w);
                }
            }
        }
        components.push(comp);
    }
    let tree_edges = br.iter().map(|&(u, v)| (component_of[u], component_of[v])).collect();
    Ok(BridgeBlockTree { components, component_of, bridges: br, tree_edges })
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

type Corner = ((i64, i64), i64);

fn scene_from_triangles(g: &Graph, construction: &str, tris: &[(usize, [Corner; 3])]) -> Result<Scene<Q>> {
    let mut scene: Scene<Q> = Scene::new(Structure::Graph(g.clone()), construction);
    for (v, corners) in tris {
        let pts: Vec<Point3<Q>> = corners.iter().map(|&((x, y), z)| Point3::from_i64(x, y, z)).collect();
        let tri = convex_hull_planar(&pts, false, 0.0)?;
        if tri.len() != 3 {
            return Err(Error::Construction(format!("triangle of {} is degenerate", g.label(*v))));
        }
        scene.push_polygon(g.label(*v).to_string(), tri);
    }
    scene.polygons.sort_by_key(|p| g.index_of(&p.label));
    scene.declare_graph_contacts()?;
    Ok(scene)
}

/// Apex levels, chord choice and drawing of the wheel floorplan for a bridgeless cubic graph.
#[derive(Debug, Clone, PartialEq)]
pub struct WheelFloorplan {
    pub decomposition: PetersenDecomposition,
    /// Matching edges in processing order.
    pub order: Vec<(usize, usize)>,
    /// Final apex level per vertex.
    pub apex: Vec<i64>,
    /// Vertex drawn on the chord, per cycle.
    pub chord_vertex: Vec<usize>,
    /// Cycle whose chord triangle moved to `z = -1`, with its level before the move.
    pub i_star: Option<(usize, i64)>,
    pub hub: (i64, i64),
    /// Rim points per cycle, first to last; the chord joins the two ends.
    pub arcs: Vec<Vec<(i64, i64)>>,
}

/// Points of the boundary of the `3 × rows` rectangle, counterclockwise from the origin.
fn rectangle_boundary(rows: i64) -> Vec<(i64, i64)> {
    let mut b = vec![(0, 0), (1, 0), (2, 0)];
    b.extend((1..rows).map(|y| (2, y)));
    b.extend([(1, rows - 1), (0, rows - 1)]);
    b.extend((1..rows - 1).rev().map(|y| (0, y)));
    b
}

fn label_key(g: &Graph, a: usize, b: usize) -> (String, String) {
    let (x, y) = (g.label(a).to_string(), g.label(b).to_string());
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

/// `K_4` on a `2 × 2 × 2` grid: a `3 × 2` rectangle has no interior point for the hub.
fn k4_layout(g: &Graph) -> Result<Scene<Q>> {
    // Contacts of the six edges, chosen so the four triangles meet only at shared corners.
    let pts: BTreeMap<(usize, usize), Corner> = [
        ((0, 1), ((0, 0), 0)),
        ((0, 2), ((1, 0), 0)),
        ((0, 3), ((0, 1), 0)),
        ((1, 2), ((1, 1), 0)),
        ((1, 3), ((0, 0), 1)),
        ((2, 3), ((1, 0), 1)),
    ]
    .into_iter()
    .collect();
    let tris: Vec<(usize, [Corner; 3])> = (0..4)
        .map(|v| {
            let c: Vec<Corner> = pts.iter().filter(|(k, _)| k.0 == v || k.1 == v).map(|(_, p)| *p).collect();
            (v, [c[0], c[1], c[2]])
        })
        .collect();
    let mut s = scene_from_triangles(g, "cubic-2ec", &tris)?;
    s.meta.grid_bounds = Some([3, 2, 2]);
    Ok(s)
}

/// Exact scene for a bridgeless cubic graph on a `3 × n/2 × n/2` grid (`3 × 2 × 2` for `K_4`).
pub fn represent_2ec_cubic(g: &Graph) -> Result<Scene<Q>> {
    Ok(represent_2ec_cubic_with_plan(g)?.0)
}

pub fn represent_2ec_cubic_with_plan(g: &Graph) -> Result<(Scene<Q>, Option<WheelFloorplan>)> {
    if !g.is_regular(3) || g.n() < 4 {
        return precondition("the wheel construction needs a cubic graph");
    }
    if !g.is_connected() {
        return precondition("the wheel construction needs a connected graph");
    }
    let dec = petersen_decompose(g)?;
    if g.n() == 4 {
        return Ok((k4_layout(g)?, None));
    }
    let n = g.n();
    let rows = (n / 2) as i64;
    let mut order = dec.matching.clone();
    order.sort_by_key(|&(a, b)| label_key(g, a, b));
    let mut raw = vec![0i64; n];
    for (i, &(a, b)) in order.iter().enumerate() {
        raw[a] = i as i64;
        raw[b] = i as i64;
    }
    let k = dec.cycles.len();
    let chord_vertex: Vec<usize> = dec.cycles.iter().map(|c| *c.iter().max_by_key(|&&v| raw[v]).unwrap()).collect();
    let is_chord: BTreeSet<usize> = chord_vertex.iter().copied().collect();
    // Each cycle listed from the successor of its chord vertex round to the chord vertex.
    let base_cycles: Vec<Vec<usize>> = dec
        .cycles
        .iter()
        .zip(&chord_vertex)
        .map(|(c, &cv)| {
            let p = c.iter().position(|&v| v == cv).unwrap();
            (1..=c.len()).map(|i| c[(p + i) % c.len()]).collect()
        })
        .collect();
    let boundary = rectangle_boundary(rows);
    let nb = boundary.len();
    let mut hubs: Vec<i64> = (1..rows - 1).collect();
    hubs.sort_by_key(|&y| ((2 * y - (rows - 1)).abs(), y));
    let perms: Vec<Vec<usize>> = if k <= 4 {
        use itertools::Itertools;
        (0..k).permutations(k).collect()
    } else {
        (0..k).map(|r| (0..k).map(|i| (i + r) % k).collect()).collect()
    };
    let flips = 1usize << k.min(4);
    let mut attempts = 0;
    for &yh in &hubs {
        let h = (1, yh);
        for s1 in 0..nb {
            for s2 in s1 + 1..nb {
                let rim: Vec<(i64, i64)> = (0..nb).filter(|&i| i != s1 && i != s2).map(|i| boundary[i]).collect();
                for perm in &perms {
                    for flip in 0..flips {
                        for off in 0..n {
                            let mut arcs = Vec::with_capacity(k);
                            let mut cycles = Vec::with_capacity(k);
                            let mut pos = off;
                            for (slot, &ci) in perm.iter().enumerate() {
                                let mut cyc = base_cycles[ci].clone();
                                if slot < 4 && flip >> slot & 1 == 1 {
                                    // Reverse the path but keep the chord vertex last.
                                    let last = cyc.pop().unwrap();
                                    cyc.reverse();
                                    cyc.push(last);
                                }
                                let arc: Vec<(i64, i64)> = (0..cyc.len()).map(|i| rim[(pos + i) % n]).collect();
                                pos += cyc.len();
                                arcs.push(arc);
                                cycles.push((ci, cyc));
                            }
                            let Some(layout) = lemma_candidate(&arcs, &cycles, h, &raw, &dec, &is_chord) else { continue };
                            attempts += 1;
                            if attempts > 4000 {
                                return Err(Error::Construction("no valid wheel layout found".into()));
                            }
                            let (tris, apex, i_star) = layout;
                            let Ok(mut scene) = scene_from_triangles(g, "cubic-2ec", &tris) else { continue };
                            scene.meta.grid_bounds = Some([3, n / 2, n / 2]);
                            if !crate::verify::verify_scene(&scene, 0.0).pass {
                                continue;
                            }
                            let chord_vertex = cycles.iter().map(|(_, c)| *c.last().unwrap()).collect();
                            let decomposition = PetersenDecomposition {
                                matching: dec.matching.clone(),
                                cycles: cycles.iter().map(|(_, c)| c.clone()).collect(),
                            };
                            let plan = WheelFloorplan { decomposition, order: order.clone(), apex, chord_vertex, i_star, hub: h, arcs };
                            return Ok((scene, Some(plan)));
                        }
                    }
                }
            }
        }
    }
    Err(Error::Construction("no valid wheel layout found".into()))
}

type LemmaTriangles = (Vec<(usize, [Corner; 3])>, Vec<i64>, Option<(usize, i64)>);

/// Heights and triangles for one rim assignment, or `None` if it is degenerate.
fn lemma_candidate(
    arcs: &[Vec<(i64, i64)>],
    cycles: &[(usize, Vec<usize>)],
    h: (i64, i64),
    raw: &[i64],
    dec: &PetersenDecomposition,
    is_chord: &BTreeSet<usize>,
) -> Option<LemmaTriangles> {
    let mut i_star = None;
    for (slot, arc) in arcs.iter().enumerate() {
        if arc.windows(2).any(|w| orient(h, w[0], w[1]) == 0) {
            return None;
        }
        let o = orient(h, arc[0], *arc.last().unwrap());
        if o == 0 {
            return None;
        }
        // The arc turns more than half-way round the hub: its chord triangle covers the others.
        if o < 0 {
            if i_star.is_some() {
                return None;
            }
            i_star = Some(slot);
        }
    }
    let mut apex = raw.to_vec();
    let mut star = None;
    if let Some(slot) = i_star {
        let cv = *cycles[slot].1.last().unwrap();
        if is_chord.contains(&dec.mate(cv)) {
            return None;
        }
        let zs = raw[cv];
        for z in apex.iter_mut() {
            if *z == zs {
                *z = -1;
            } else if *z > zs {
                *z -= 1;
            }
        }
        star = Some((cycles[slot].0, zs));
    }
    let mut tris = Vec::new();
    for ((_, cyc), arc) in cycles.iter().zip(arcs) {
        let m = cyc.len();
        let cv = cyc[m - 1];
        let zc = apex[cv];
        let corner = |i: usize| (arc[i], if i == 0 || i == m - 1 { zc } else { 0 });
        for (s, &v) in cyc[..m - 1].iter().enumerate() {
            tris.push((v, [corner(s), corner(s + 1), (h, apex[v])]));
        }
        tris.push((cv, [(arc[0], zc), (arc[m - 1], zc), (h, zc)]));
    }
    Some((tris, apex, star))
}

/// An edge of a component with its feet suppressed: the path `a, feet.., b` in `G`.
#[derive(Debug, Clone)]
struct FootEdge {
    a: usize,
    b: usize,
    feet: Vec<usize>,
}

impl FootEdge {
    /// Feet listed from `from` towards the other end.
    fn feet_from(&self, from: usize) -> Vec<usize> {
        if from == self.a {
            self.feet.clone()
        } else {
            self.feet.iter().rev().copied().collect()
        }
    }
    fn other(&self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }
}

/// All perfect matchings of a simple graph on `verts`, by edge index, until `visit` returns true.
fn search_perfect_matchings(verts: &[usize], edges: &[FootEdge], budget: &mut usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        free: &mut BTreeSet<usize>,
        edges: &[FootEdge],
        chosen: &mut Vec<usize>,
        budget: &mut usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let Some(&v) = free.iter().next() else { return visit(chosen) };
        for (i, e) in edges.iter().enumerate() {
            if e.a != v && e.b != v {
                continue;
            }
            let w = e.other(v);
            if !free.contains(&w) {
                continue;
            }
            free.remove(&v);
            free.remove(&w);
            chosen.push(i);
            if rec(free, edges, chosen, budget, visit) {
                return true;
            }
            chosen.pop();
            free.insert(v);
            free.insert(w);
        }
        false
    }
    let mut free: BTreeSet<usize> = verts.iter().copied().collect();
    rec(&mut free, edges, &mut Vec::new(), budget, visit)
}

/// Floorplan under construction: rotation system of `H` plus triangles over it.
#[derive(Default)]
struct Floorplan {
    rot: Vec<Vec<usize>>,
    tris: Vec<(usize, [(usize, i64); 3])>,
    /// Darts whose left face is covered by a triangle, a chord region or a hub fan.
    reserved_darts: Vec<(usize, usize)>,
    hubs: Vec<usize>,
    levels: i64,
}

impl Floorplan {
    fn vertex(&mut self) -> usize {
        self.rot.push(Vec::new());
        self.rot.len() - 1
    }
}

/// How a wheel component is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WheelKind {
    /// One cycle, no matching edge with feet: all cycle triangles on the rim, no chord.
    FullFan,
    /// Feet only on matching edges: chords are edges of `H` enclosing their arcs.
    Chords,
}

struct WheelChoice {
    kind: WheelKind,
    matching: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

fn cycles_of(verts: &[usize], edges: &[FootEdge], matching: &[usize]) -> Vec<Vec<usize>> {
    let in_m: BTreeSet<usize> = matching.iter().copied().collect();
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        if !in_m.contains(&i) {
            adj.entry(e.a).or_default().push(e.b);
            adj.entry(e.b).or_default().push(e.a);
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &s in verts {
        if !seen.insert(s) {
            continue;
        }
        let mut cyc = vec![s];
        let (mut prev, mut cur) = (usize::MAX, s);
        loop {
            let next = adj[&cur].iter().copied().find(|&w| w != prev && (w == s || !seen.contains(&w)));
            match next {
                Some(w) if w == s => break,
                Some(w) => {
                    seen.insert(w);
                    cyc.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        out.push(cyc);
    }
    out
}

fn choose_wheel(g: &Graph, verts: &[usize], edges: &[FootEdge]) -> Result<WheelChoice> {
    let judge = |m: &[usize]| -> Option<WheelChoice> {
        let cycles = cycles_of(verts, edges, m);
        let in_m: BTreeSet<usize> = m.iter().copied().collect();
        let matched_feet = edges.iter().enumerate().any(|(i, e)| in_m.contains(&i) && !e.feet.is_empty());
        let cycle_feet = edges.iter().enumerate().any(|(i, e)| !in_m.contains(&i) && !e.feet.is_empty());
        let kind = if !cycle_feet {
            WheelKind::Chords
        } else if cycles.len() == 1 && !matched_feet {
            WheelKind::FullFan
        } else {
            return None;
        };
        Some(WheelChoice { kind, matching: m.to_vec(), cycles })
    };
    // Blossom first, then an exhaustive search over perfect matchings.
    let sub = {
        let mut s = Graph::new();
        for &v in verts {
            s.add_vertex(g.label(v));
        }
        for e in edges {
            let (a, b) = (s.index_of(g.label(e.a)).unwrap(), s.index_of(g.label(e.b)).unwrap());
            s.add_edge(a, b)?;
        }
        s
    };
    if let Some(pm) = perfect_matching(&sub) {
        let m: Vec<usize> = pm
            .iter()
            .map(|&(x, y)| {
                let (a, b) = (verts[x], verts[y]);
                edges.iter().position(|e| (e.a == a && e.b == b) || (e.a == b && e.b == a)).unwrap()
            })
            .collect();
        if let Some(c) = judge(&m) {
            return Ok(c);
        }
    }
    let mut found = None;
    let mut budget = 200_000;
    search_perfect_matchings(verts, edges, &mut budget, &mut |m| {
        found = judge(m);
        found.is_some()
    });
    found.ok_or_else(|| {
        Error::Construction(format!(
            "component of {} has no perfect matching that keeps every bridge foot on matching edges or on a single cycle",
            g.label(verts[0])
        ))
    })
}

/// Exact scene for a cubic graph on a `3n/2 × 3n/2 × n/2` grid.
pub fn represent_cubic(g: &Graph) -> Result<Scene<Q>> {
    if !g.is_regular(3) {
        return precondition("represent_cubic needs a cubic graph");
    }
    let comps = g.components();
    if comps.len() > 1 {
        let parts: Vec<(Vec<usize>, Scene<Q>)> = comps
            .iter()
            .map(|c| {
                let sub = g.induced(c);
                represent_cubic(&sub).map(|s| (c.clone(), s))
            })
            .collect::<Result<_>>()?;
        return Ok(side_by_side(g, "cubic", parts, [3 * g.n() / 2, 3 * g.n() / 2, g.n() / 2]));
    }
    if bridges(g).is_empty() {
        let mut s = represent_2ec_cubic(g)?;
        s.meta.construction = "cubic".into();
        return Ok(s);
    }
    let mut s = represent_with_bridges(g)?;
    s.meta.grid_bounds = Some([3 * g.n() / 2, 3 * g.n() / 2, g.n() / 2]);
    Ok(s)
}

/// Places component scenes next to each other along `x`, one unit apart.
fn side_by_side(g: &Graph, construction: &str, parts: Vec<(Vec<usize>, Scene<Q>)>, bounds: [usize; 3]) -> Scene<Q> {
    let mut scene: Scene<Q> = Scene::new(Structure::Graph(g.clone()), construction);
    let mut offset = Q::from_integer(0.into());
    for (_, part) in parts {
        let xs: Vec<Q> = part.all_corners().map(|p| p.x.clone()).collect();
        let lo = xs.iter().min().cloned().unwrap_or_else(|| Q::from_integer(0.into()));
        let hi = xs.iter().max().cloned().unwrap_or_else(|| Q::from_integer(0.into()));
        let shift = Point3::new(offset.clone() - lo.clone(), Q::from_integer(0.into()), Q::from_integer(0.into()));
        for p in part.polygons {
            let mut poly = p.polygon;
            for c in &mut poly.corners {
                *c = c.add(&shift);
            }
            scene.push_polygon(p.label, poly);
        }
        for c in part.contacts {
            scene.push_contact(c.point.add(&shift), c.elements);
        }
        scene.meta.degenerate |= part.meta.degenerate;
        offset = offset + (hi - lo) + Q::from_integer(1.into());
    }
    scene.polygons.sort_by_key(|p| g.index_of(&p.label));
    scene.meta.grid_bounds = Some(bounds);
    scene
}

fn represent_with_bridges(g: &Graph) -> Result<Scene<Q>> {
    let tree = bridge_block_tree(g)?;
    let is_bridge: BTreeSet<(usize, usize)> = tree.bridges.iter().copied().collect();
    let bridge_at =
        |v: usize| -> Vec<usize> { g.neighbors(v).iter().copied().filter(|&w| is_bridge.contains(&(v.min(w), v.max(w)))).collect() };
    let mut fp = Floorplan::default();
    let mut vb: HashMap<(usize, usize), usize> = HashMap::new();
    for &b in &tree.bridges {
        let x = fp.vertex();
        vb.insert(b, x);
    }
    let vb_of = |u: usize, w: usize| vb[&(u.min(w), u.max(w))];
    for comp in &tree.components {
        if comp.len() == 1 {
            // Single vertex with three bridges: a triangle on the three bridge points.
            let w = comp[0];
            let p: Vec<usize> = bridge_at(w).iter().map(|&x| vb_of(w, x)).collect();
            for i in 0..3 {
                let part = [p[(i + 1) % 3], p[(i + 2) % 3]];
                fp.rot[p[i]].extend(part);
            }
            fp.reserved_darts.push((p[0], p[1]));
            fp.tris.push((w, [(p[0], 0), (p[1], 0), (p[2], 0)]));
            continue;
        }
        let feet: BTreeSet<usize> = comp.iter().copied().filter(|&v| !bridge_at(v).is_empty()).collect();
        if feet.len() == comp.len() {
            all_bridge_cycle(g, comp, &mut fp, &|v| vb_of(v, bridge_at(v)[0]))?;
            continue;
        }
        wheel_component(g, comp, &feet, &mut fp, &|v| vb_of(v, bridge_at(v)[0]))?;
    }
    draw_floorplan(g, fp)
}

/// A component whose every vertex ends a bridge: flat triangles on the edges of a cycle.
fn all_bridge_cycle(g: &Graph, comp: &[usize], fp: &mut Floorplan, vb: &dyn Fn(usize) -> usize) -> Result<()> {
    let inside: BTreeSet<usize> = comp.iter().copied().collect();
    let mut cyc = vec![comp[0]];
    let mut prev = usize::MAX;
    loop {
        let cur = *cyc.last().unwrap();
        let next = g.neighbors(cur).iter().copied().find(|&w| inside.contains(&w) && w != prev && !cyc[1..].contains(&w));
        match next {
            Some(w) if w == cyc[0] => break,
            Some(w) => {
                prev = cur;
                cyc.push(w);
            }
            None => return Err(Error::Construction("bridge-end component is not a cycle".into())),
        }
    }
    let m = cyc.len();
    // u[j] is the contact of cyc[j] and cyc[j+1].
    let u: Vec<usize> = (0..m).map(|_| fp.vertex()).collect();
    for j in 0..m {
        let (prev_u, next_u) = (u[(j + m - 1) % m], u[(j + 1) % m]);
        let (b_here, b_next) = (vb(cyc[j]), vb(cyc[(j + 1) % m]));
        fp.rot[u[j]].extend([next_u, prev_u, b_here, b_next]);
        fp.rot[b_here].extend([u[j], prev_u]);
        fp.tris.push((cyc[j], [(prev_u, 0), (u[j], 0), (b_here, 0)]));
        fp.reserved_darts.push((u[j], prev_u));
    }
    fp.reserved_darts.push((u[0], u[1]));
    Ok(())
}

fn wheel_component(g: &Graph, comp: &[usize], feet: &BTreeSet<usize>, fp: &mut Floorplan, vb: &dyn Fn(usize) -> usize) -> Result<()> {
    let inside: BTreeSet<usize> = comp.iter().copied().collect();
    let verts: Vec<usize> = comp.iter().copied().filter(|v| !feet.contains(v)).collect();
    // Suppress the feet: follow each edge from a plain vertex through feet to the next plain one.
    let mut edges: Vec<FootEdge> = Vec::new();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &a in &verts {
        for &w in g.neighbors(a) {
            if !inside.contains(&w) || seen.contains(&(a.min(w), a.max(w))) {
                continue;
            }
            let mut path = vec![a, w];
            while feet.contains(path.last().unwrap()) {
                let cur = *path.last().unwrap();
                let prev = path[path.len() - 2];
                let next = g.neighbors(cur).iter().copied().find(|&x| x != prev && inside.contains(&x)).unwrap();
                path.push(next);
            }
            for p in path.windows(2) {
                seen.insert((p[0].min(p[1]), p[0].max(p[1])));
            }
            let b = *path.last().unwrap();
            if b == a || edges.iter().any(|e| (e.a == a && e.b == b) || (e.a == b && e.b == a)) {
                return Err(Error::Construction(format!(
                    "suppressing the bridge ends next to {} leaves a loop or parallel edges",
                    g.label(a)
                )));
            }
            edges.push(FootEdge { a, b, feet: path[1..path.len() - 1].to_vec() });
        }
    }
    let choice = choose_wheel(g, &verts, &edges)?;
    let mut order = choice.matching.clone();
    order.sort_by_key(|&i| label_key(g, edges[i].a, edges[i].b));
    // Apex levels; a matching edge with k feet takes k + 1 consecutive levels.
    let mut level: BTreeMap<usize, i64> = BTreeMap::new();
    let mut chains: Vec<(Vec<usize>, i64)> = Vec::new();
    let mut next = 0i64;
    for &i in &order {
        let e = &edges[i];
        level.insert(e.a, next);
        level.insert(e.b, next + e.feet.len() as i64);
        if !e.feet.is_empty() {
            chains.push((e.feet.clone(), next));
        }
        next += e.feet.len() as i64 + 1;
    }
    fp.levels = fp.levels.max(next);
    let edge_between = |x: usize, y: usize| edges.iter().find(|e| (e.a == x && e.b == y) || (e.a == y && e.b == x)).unwrap();
    let h = fp.vertex();
    fp.hubs.push(h);
    // Rim in counterclockwise order, with outside neighbours per rim vertex.
    let mut rim: Vec<usize> = Vec::new();
    let mut extra_before: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut extra_after: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    match choice.kind {
        WheelKind::FullFan => {
            let cyc = &choice.cycles[0];
            let m = cyc.len();
            // copies[j]: rim vertices standing for the contact of cyc[j] and cyc[j+1].
            let mut copies: Vec<Vec<usize>> = Vec::new();
            for j in 0..m {
                let (x, y) = (cyc[j], cyc[(j + 1) % m]);
                let fs = edge_between(x, y).feet_from(x);
                let cs: Vec<usize> = (0..=fs.len()).map(|_| fp.vertex()).collect();
                for (t, &f) in fs.iter().enumerate() {
                    let b = vb(f);
                    extra_after.entry(cs[t]).or_default().push(b);
                    extra_before.entry(cs[t + 1]).or_default().push(b);
                    fp.rot[b].extend([cs[t + 1], cs[t]]);
                    fp.tris.push((f, [(cs[t], 0), (cs[t + 1], 0), (b, 0)]));
                    fp.reserved_darts.push((cs[t + 1], cs[t]));
                }
                rim.extend(&cs);
                copies.push(cs);
            }
            for j in 0..m {
                let before = *copies[(j + m - 1) % m].last().unwrap();
                fp.tris.push((cyc[j], [(before, 0), (copies[j][0], 0), (h, level[&cyc[j]])]));
            }
        }
        WheelKind::Chords => {
            for cyc in &choice.cycles {
                let m = cyc.len();
                let cp = (0..m).max_by_key(|&i| level[&cyc[i]]).unwrap();
                let cv = cyc[cp];
                // Arc from the successor of the chord vertex round to the chord vertex.
                let path: Vec<usize> = (1..=m).map(|i| cyc[(cp + i) % m]).collect();
                let arc: Vec<usize> = (0..m).map(|_| fp.vertex()).collect();
                let zc = level[&cv];
                let z_at = |i: usize| if i == 0 || i == m - 1 { zc } else { 0 };
                for s in 0..m - 1 {
                    fp.tris.push((path[s], [(arc[s], z_at(s)), (arc[s + 1], z_at(s + 1)), (h, level[&path[s]])]));
                }
                fp.tris.push((cv, [(arc[0], zc), (arc[m - 1], zc), (h, zc)]));
                // The chord hugs the arc from outside.
                extra_after.entry(arc[0]).or_default().push(arc[m - 1]);
                extra_before.entry(arc[m - 1]).or_default().insert(0, arc[0]);
                fp.reserved_darts.push((arc[m - 1], arc[m - 2]));
                rim.extend(&arc);
            }
            // Bridge points of feet on matching edges sit in the gap after the last arc.
            for (fs, base) in &chains {
                for (t, &f) in fs.iter().enumerate() {
                    let b = vb(f);
                    rim.push(b);
                    let z = base + t as i64;
                    fp.tris.push((f, [(h, z), (h, z + 1), (b, 0)]));
                }
            }
        }
    }
    let r = rim.len();
    fp.rot[h] = rim.clone();
    for i in 0..r {
        let (o, nx, pv) = (rim[i], rim[(i + 1) % r], rim[(i + r - 1) % r]);
        let mut list = vec![nx, h, pv];
        // Chord at the last arc vertex comes right after its predecessor; other outside
        // neighbours follow counterclockwise, the chord at the first arc vertex last.
        if let Some(x) = extra_before.get(&o) {
            list.extend(x);
        }
        if let Some(x) = extra_after.get(&o) {
            list.extend(x);
        }
        let mut full = list;
        full.extend(std::mem::take(&mut fp.rot[o]));
        fp.rot[o] = full;
    }
    Ok(())
}

fn draw_floorplan(g: &Graph, fp: Floorplan) -> Result<Scene<Q>> {
    let plane = PlaneGraph::from_rotation(fp.rot.clone())?;
    if !plane.is_plane() {
        return Err(Error::Construction("floorplan rotation system is not plane".into()));
    }
    let (faces, dart_face) = plane.faces_with_darts();
    let hubs: BTreeSet<usize> = fp.hubs.iter().copied().collect();
    let reserved: BTreeSet<usize> = fp.reserved_darts.iter().map(|d| dart_face[d]).collect();
    let outer = (0..faces.len())
        .filter(|&f| !reserved.contains(&f) && !faces[f].iter().any(|v| hubs.contains(v)))
        .max_by_key(|&f| (faces[f].len(), std::cmp::Reverse(f)))
        .ok_or_else(|| Error::Construction("floorplan has no free face for the outside".into()))?;
    let dart = (faces[outer][0], faces[outer][1]);
    let drawing = schnyder_draw(&plane, Some(dart))?;
    let tris: Vec<(usize, [Corner; 3])> = fp
        .tris
        .iter()
        .map(|(v, c)| (*v, [(drawing.coords[c[0].0], c[0].1), (drawing.coords[c[1].0], c[1].1), (drawing.coords[c[2].0], c[2].1)]))
        .collect();
    scene_from_triangles(g, "cubic", &tris)
}

/// Scene for a graph of maximum degree 3: triangles, segments and points.
///
/// The graph is completed to a cubic one with dummy vertices and edges, represented, and the
/// dummy parts are removed; each remaining polygon is the hull of its real contacts. A triangle
/// edge may run through another triangle's interior, which is harmless until the edge is all that
/// remains, so each completion is kept only if the reduced scene verifies.
pub fn represent_max_degree3(g: &Graph) -> Result<Scene<Q>> {
    if g.max_degree() > 3 {
        return precondition("represent_max_degree3 needs maximum degree 3");
    }
    if g.is_regular(3) {
        return represent_cubic(g);
    }
    let mut last = None;
    for pairing in [true, false] {
        let aug = complete_to_cubic(g, pairing)?;
        match represent_cubic(&aug).and_then(|full| reduce_to(g, &full)) {
            Ok(scene) if crate::verify::verify_scene(&scene, 0.0).pass => return Ok(scene),
            Ok(_) => last = Some(Error::Construction("reduced scene does not verify".into())),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("two attempts"))
}

/// Keeps the real vertices of `full`, each as the hull of its real contacts.
fn reduce_to(g: &Graph, full: &Scene<Q>) -> Result<Scene<Q>> {
    let mut scene: Scene<Q> = Scene::new(Structure::Graph(g.clone()), "max-degree-3");
    let real_edges: BTreeSet<(String, String)> = g.edge_label_set();
    let mut used: Vec<Point3<Q>> = Vec::new();
    let mut off_grid = false;
    for v in 0..g.n() {
        let label = g.label(v);
        let poly = full.polygon(label).expect("polygon of a real vertex");
        let mine: Vec<Point3<Q>> = full
            .contacts
            .iter()
            .filter(|c| c.elements.iter().any(|e| e == label))
            .filter(|c| {
                let (a, b) = (c.elements[0].clone(), c.elements[1].clone());
                real_edges.contains(&(a.clone(), b.clone())) || real_edges.contains(&(b, a))
            })
            .map(|c| c.point.clone())
            .collect();
        // Corners of an isolated vertex meet only dummy edges; two isolated neighbours must not
        // pick their common corner.
        let pts = if mine.is_empty() {
            match poly.corners.iter().find(|c| !used.contains(*c)) {
                Some(c) => vec![c.clone()],
                None => {
                    let sum = poly.corners.iter().fold(Point3::from_i64(0, 0, 0), |a, c| a.add(c));
                    off_grid = true;
                    vec![sum.scale(&Q::new(1.into(), (poly.corners.len() as i64).into()))]
                }
            }
        } else {
            mine
        };
        if pts.len() == 1 {
            used.push(pts[0].clone());
        }
        scene.push_polygon(label.to_string(), convex_hull_planar(&pts, false, 0.0)?);
    }
    scene.declare_graph_contacts()?;
    scene.meta.degenerate = (0..g.n()).any(|v| g.degree(v) < 3);
    // Corners are a subset of the completed scene's, so its bound carries over.
    scene.meta.grid_bounds = if off_grid { None } else { full.meta.grid_bounds };
    Ok(scene)
}

/// Cubic supergraph of `g`; returns it with the number of real vertices, which come first.
///
/// Missing degree is paired up between non-adjacent vertices where possible; leftover pairs are
/// joined through a `K_4` minus an edge.
pub fn cubic_completion(g: &Graph) -> Result<(Graph, usize)> {
    Ok((complete_to_cubic(g, true)?, g.n()))
}

fn complete_to_cubic(g: &Graph, pairing: bool) -> Result<Graph> {
    let mut aug = g.clone();
    let mut dummy = 0;
    let mut fresh = |aug: &mut Graph| {
        let mut name = format!("_d{dummy}");
        while aug.index_of(&name).is_some() {
            dummy += 1;
            name = format!("_d{dummy}");
        }
        dummy += 1;
        aug.add_vertex(&name)
    };
    if g.n() % 2 == 1 {
        fresh(&mut aug);
    }
    let mut stubs: Vec<usize> = (0..aug.n()).flat_map(|v| std::iter::repeat_n(v, 3 - aug.degree(v))).collect();
    // Backtracking pairing of stubs into new simple edges.
    fn pair(aug: &Graph, stubs: &mut Vec<usize>, added: &mut Vec<(usize, usize)>, budget: &mut usize) -> bool {
        if stubs.is_empty() {
            return true;
        }
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let a = stubs.remove(0);
        let mut tried = BTreeSet::new();
        for i in 0..stubs.len() {
            let b = stubs[i];
            if b == a || !tried.insert(b) || aug.has_edge(a, b) || added.contains(&(a.min(b), a.max(b))) {
                continue;
            }
            stubs.remove(i);
            added.push((a.min(b), a.max(b)));
            if pair(aug, stubs, added, budget) {
                return true;
            }
            added.pop();
            stubs.insert(i, b);
        }
        stubs.insert(0, a);
        false
    }
    let mut added = Vec::new();
    let mut budget = 100_000;
    if pairing && pair(&aug, &mut stubs.clone(), &mut added, &mut budget) {
        for (a, b) in added {
            aug.add_edge(a, b)?;
        }
    } else {
        // Two stubs at a time through a fresh K_4 minus an edge.
        while stubs.len() >= 2 {
            let (s, t) = (stubs.remove(0), stubs.remove(0));
            let q: Vec<usize> = (0..4).map(|_| fresh(&mut aug)).collect();
            for (x, y) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
                aug.add_edge(q[x], q[y])?;
            }
            aug.add_edge(s, q[2])?;
            aug.add_edge(t, q[3])?;
        }
    }
    debug_assert!(aug.is_regular(3));
    Ok(aug)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::verify::{grid_extent, verify_scene};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn random_cubic(n: usize, seed: u64) -> Graph {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
            stubs.shuffle(&mut rng);
            let mut g = Graph::new();
            for i in 0..n {
                g.add_vertex(&format!("v{i}"));
            }
            if stubs.chunks(2).all(|p| g.add_edge(p[0], p[1]).is_ok()) && g.is_connected() {
                return g;
            }
        }
    }

    fn check(s: &Scene<Q>) {
        let r = verify_scene(s, 0.0);
        assert!(r.pass, "{}", r.to_text());
    }

    #[test]
    fn decompose_k4_and_petersen() {
        let d = petersen_decompose(&families::complete(4)).unwrap();
        assert_eq!(d.matching.len(), 2);
        assert_eq!(d.cycles.len(), 1);
        assert_eq!(d.cycles[0].len(), 4);
        let p = families::petersen();
        let d = petersen_decompose(&p).unwrap();
        assert_eq!(d.matching.len(), 5);
        let mut covered: Vec<usize> = d.cycles.concat();
        covered.sort_unstable();
        assert_eq!(covered, (0..10).collect::<Vec<_>>());
        for c in &d.cycles {
            for i in 0..c.len() {
                assert!(p.has_edge(c[i], c[(i + 1) % c.len()]));
            }
        }
    }

    #[test]
    fn decompose_rejects_bridge() {
        let g = Graph::from_edges(&[("a", "b"), ("b", "c"), ("c", "a"), ("a", "x"), ("x", "y"), ("y", "z"), ("z", "x")]);
        assert!(matches!(petersen_decompose(&g), Err(Error::Precondition(_))));
        let chain = families::bridge_chain(2);
        assert!(matches!(petersen_decompose(&chain), Err(Error::Bridge { .. })));
    }

    #[test]
    fn bridges_match_removal_oracle() {
        for k in 2..=4 {
            let g = families::bridge_chain(k);
            let found: BTreeSet<(usize, usize)> = bridges(&g).into_iter().collect();
            for &(u, v) in g.edges() {
                let mut h = Graph::new();
                for l in g.labels() {
                    h.add_vertex(l);
                }
                for &(a, b) in g.edges() {
                    if (a, b) != (u, v) {
                        h.add_edge(a, b).unwrap();
                    }
                }
                assert_eq!(found.contains(&(u, v)), !h.is_connected());
            }
            let t = bridge_block_tree(&g).unwrap();
            assert_eq!(t.components.len(), k);
            assert_eq!(t.tree_edges.len(), k - 1);
        }
        let t = bridge_block_tree(&families::petersen()).unwrap();
        assert_eq!(t.components.len(), 1);
        assert!(t.bridges.is_empty());
    }

    #[test]
    fn k4_small_grid() {
        let s = represent_2ec_cubic(&families::complete(4)).unwrap();
        check(&s);
        assert!(grid_extent(&s).fits([3, 2, 2]));
    }

    #[test]
    fn petersen_and_prism() {
        let (s, plan) = represent_2ec_cubic_with_plan(&families::petersen()).unwrap();
        check(&s);
        assert!(grid_extent(&s).fits([3, 5, 5]));
        let plan = plan.unwrap();
        assert_eq!(plan.order.len(), 5);
        let s = represent_2ec_cubic(&families::prism(3)).unwrap();
        check(&s);
        assert_eq!(s.contacts.len(), 9);
        assert!(grid_extent(&s).fits([3, 3, 3]));
    }

    #[test]
    fn random_bridgeless_cubic() {
        let mut done = 0;
        for seed in 0..40 {
            let n = 6 + 2 * (seed as usize % 5);
            let g = random_cubic(n, seed);
            if !bridges(&g).is_empty() {
                continue;
            }
            let s = represent_2ec_cubic(&g).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            check(&s);
            assert!(grid_extent(&s).fits([3, n / 2, n / 2]), "seed {seed}: {:?}", grid_extent(&s).counts);
            done += 1;
        }
        assert!(done >= 15);
    }

    #[test]
    fn bridge_chains() {
        for k in 2..=4 {
            let g = families::bridge_chain(k);
            let s = represent_cubic(&g).unwrap_or_else(|e| panic!("k={k}: {e}"));
            check(&s);
            let n = g.n();
            assert!(grid_extent(&s).fits([3 * n / 2, 3 * n / 2, n / 2]), "k={k}: {:?}", grid_extent(&s).counts);
        }
    }

    /// A centre with three bridges to `K_4`s with one subdivided edge, optionally with the
    /// centre blown up into a triangle.
    fn claw_of_gadgets(triangle: bool) -> Graph {
        let mut g = Graph::new();
        let centres: Vec<usize> = if triangle {
            let c: Vec<usize> = (0..3).map(|i| g.add_vertex(&format!("c{i}"))).collect();
            for i in 0..3 {
                g.add_edge(c[i], c[(i + 1) % 3]).unwrap();
            }
            c
        } else {
            vec![g.add_vertex("c")]
        };
        for i in 0..3 {
            let q: Vec<usize> = (0..4).map(|j| g.add_vertex(&format!("k{i}_{j}"))).collect();
            let s = g.add_vertex(&format!("k{i}_s"));
            for (a, b) in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
                g.add_edge(q[a], q[b]).unwrap();
            }
            g.add_edge(q[0], s).unwrap();
            g.add_edge(s, q[1]).unwrap();
            g.add_edge(s, centres[i % centres.len()]).unwrap();
        }
        g
    }

    #[test]
    fn single_vertex_and_cycle_components() {
        for tri in [false, true] {
            let g = claw_of_gadgets(tri);
            assert!(g.is_regular(3));
            let s = represent_cubic(&g).unwrap();
            check(&s);
            let n = g.n();
            assert!(grid_extent(&s).fits([3 * n / 2, 3 * n / 2, n / 2]));
        }
    }

    #[test]
    fn matching_feet_use_vertical_triangles() {
        // Two prisms whose rungs are subdivided and joined by a bridge; the feet must lie on
        // matching edges, since the complement of the rungs is two triangles.
        let mut g = Graph::new();
        let mut ports = Vec::new();
        for p in 0..2 {
            let u: Vec<usize> = (0..6).map(|j| g.add_vertex(&format!("p{p}_{j}"))).collect();
            for (a, b) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (1, 4), (2, 5)] {
                g.add_edge(u[a], u[b]).unwrap();
            }
            let s = g.add_vertex(&format!("p{p}_s"));
            g.add_edge(u[0], s).unwrap();
            g.add_edge(s, u[3]).unwrap();
            ports.push(s);
        }
        g.add_edge(ports[0], ports[1]).unwrap();
        let s = represent_cubic(&g).unwrap();
        check(&s);
        let vertical = s.polygons.iter().filter(|p| {
            let c = &p.polygon.corners;
            c.iter().filter(|x| x.x == c[0].x && x.y == c[0].y).count() >= 2
                || c.iter().filter(|x| x.x == c[1].x && x.y == c[1].y).count() >= 2
        });
        assert!(vertical.count() >= 1);
    }

    #[test]
    fn random_cubic_with_bridges() {
        let mut done = 0;
        for seed in 0..400 {
            let n = 10 + 2 * (seed as usize % 6);
            let g = random_cubic(n, 1000 + seed);
            if bridges(&g).is_empty() {
                continue;
            }
            match represent_cubic(&g) {
                Ok(s) => {
                    check(&s);
                    done += 1;
                }
                Err(Error::Construction(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert!(done >= 3, "{done}");
    }

    #[test]
    fn disconnected_side_by_side() {
        let mut g = Graph::new();
        for i in 0..8 {
            g.add_vertex(&i.to_string());
        }
        for &(u, v) in families::complete(4).edges() {
            g.add_edge(u, v).unwrap();
            g.add_edge(u + 4, v + 4).unwrap();
        }
        let s = represent_cubic(&g).unwrap();
        check(&s);
    }

    #[test]
    fn max_degree_three() {
        let s = represent_max_degree3(&families::cycle(5)).unwrap();
        check(&s);
        assert!(s.polygons.iter().all(|p| p.polygon.len() == 2));
        let s = represent_max_degree3(&families::star3()).unwrap();
        check(&s);
        let sizes: Vec<usize> = s.polygons.iter().map(|p| p.polygon.len()).collect();
        assert_eq!(sizes.iter().filter(|&&k| k == 3).count(), 1);
        assert_eq!(sizes.iter().filter(|&&k| k == 1).count(), 3);
        let k4 = families::complete(4);
        assert_eq!(represent_max_degree3(&k4).unwrap(), represent_cubic(&k4).unwrap());
        assert!(represent_max_degree3(&families::complete(5)).is_err());
    }

    #[test]
    fn completion_is_cubic() {
        for g in [families::cycle(5), families::star3(), families::cycle(4), Graph::from_edges(&[("a", "b")])] {
            let (aug, real) = cubic_completion(&g).unwrap();
            assert!(aug.is_regular(3));
            assert_eq!(real, g.n());
            for &(u, v) in g.edges() {
                assert!(aug.has_edge(u, v));
            }
        }
    }
}
