//! Plane graphs given by rotation systems, triangulation, and Schnyder's straight-line grid drawing.

use std::collections::{BTreeSet, HashMap};

use crate::error::{precondition, Error, Result};

/// Simple graph with a counterclockwise cyclic order of neighbours at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rot: Vec<Vec<usize>>,
}

impl PlaneGraph {
    /// Checks symmetry and simplicity; planarity is a separate question, see [`PlaneGraph::is_plane`].
    pub fn from_rotation(rot: Vec<Vec<usize>>) -> Result<Self> {
        let n = rot.len();
        for (u, nb) in rot.iter().enumerate() {
            let set: BTreeSet<usize> = nb.iter().copied().collect();
            if set.len() != nb.len() {
                return Err(Error::Embedding(format!("vertex {u} lists a neighbour twice")));
            }
            for &v in nb {
                if v >= n || v == u {
                    return Err(Error::Embedding(format!("vertex {u} has invalid neighbour {v}")));
                }
                if !rot[v].contains(&u) {
                    return Err(Error::Embedding(format!("edge {u}-{v} is listed only at {u}")));
                }
            }
        }
        Ok(Self { rot })
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn m(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rot[u].contains(&v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nb) in self.rot.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    fn pos(&self, u: usize, v: usize) -> usize {
        self.rot[u].iter().position(|&w| w == v).expect("dart of the graph")
    }

    /// The dart after `(u, v)` along the face on its left.
    pub fn next_dart(&self, u: usize, v: usize) -> (usize, usize) {
        let r = &self.rot[v];
        let i = self.pos(v, u);
        (v, r[(i + r.len() - 1) % r.len()])
    }

    /// Faces as closed vertex walks, each traversed with the face on the left. Isolated vertices
    /// contribute no face.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.faces_with_darts().0
    }

    /// Faces plus the face index of every dart.
    pub fn faces_with_darts(&self) -> (Vec<Vec<usize>>, HashMap<(usize, usize), usize>) {
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        let mut faces = Vec::new();
        for u in 0..self.n() {
            for &v in &self.rot[u] {
                if seen.contains_key(&(u, v)) {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let mut d = (u, v);
                while seen.insert(d, id).is_none() {
                    walk.push(d.0);
                    d = self.next_dart(d.0, d.1);
                }
                faces.push(walk);
            }
        }
        (faces, seen)
    }

    pub fn components(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for &v in &self.rot[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    /// Euler's formula per component: the rotation system describes a sphere embedding.
    pub fn is_plane(&self) -> bool {
        let isolated = self.rot.iter().filter(|r| r.is_empty()).count();
        let c = self.components() - isolated;
        let v = self.n() - isolated;
        let f = self.faces().len();
        // Faces are traced per component, so each one satisfies V - E + F = 2 on its own.
        v + f == self.m() + 2 * c
    }

    /// Adds edge `face[i] - face[i+2]` inside the face with walk `face`.
    fn split_face(&mut self, face: &[usize], i: usize) {
        let k = face.len();
        let (a, b, c) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
        let pa = self.pos(a, b);
        self.rot[a].insert(pa + 1, c);
        let pc = self.pos(c, b);
        self.rot[c].insert(pc, a);
    }

    /// Adds edges until every face is a triangle, fanning each face from its least vertex and
    /// skipping chords that already exist. Returns the added edges.
    pub fn triangulate(&mut self) -> Result<Vec<(usize, usize)>> {
        if self.n() < 3 {
            return precondition("triangulation needs at least 3 vertices");
        }
        if self.components() != 1 || self.rot.iter().any(Vec::is_empty) {
            return precondition("triangulation needs a connected graph");
        }
        let mut added = Vec::new();
        loop {
            let faces = self.faces();
            let Some(face) = faces.into_iter().find(|f| f.len() > 3) else {
                return Ok(added);
            };
            let k = face.len();
            let start = (0..k).min_by_key(|&i| face[i]).expect("nonempty face");
            let pick = (0..k).map(|j| (start + j) % k).find(|&i| {
                let (a, c) = (face[i], face[(i + 2) % k]);
                a != c && !self.has_edge(a, c)
            });
            let Some(i) = pick else {
                return Err(Error::Embedding(format!("face {face:?} admits no chord")));
            };
            added.push((face[i].min(face[(i + 2) % k]), face[i].max(face[(i + 2) % k])));
            self.split_face(&face, i);
        }
    }
}

/// Integer straight-line drawing of a plane graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchnyderDrawing {
    pub coords: Vec<(i64, i64)>,
    /// Outer triangle used by the drawing.
    pub outer: [usize; 3],
    /// Edges added to triangulate and removed again.
    pub dummy_edges: Vec<(usize, usize)>,
}

impl SchnyderDrawing {
    /// Grid lines in x and y spanned by the drawing.
    pub fn grid_lines(&self) -> (i64, i64) {
        let span = |f: fn(&(i64, i64)) -> i64| {
            let lo = self.coords.iter().map(f).min().unwrap_or(0);
            let hi = self.coords.iter().map(f).max().unwrap_or(0);
            hi - lo + 1
        };
        (span(|c| c.0), span(|c| c.1))
    }
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    let (ax, ay, bx, by, cx, cy) = (a.0 as i128, a.1 as i128, b.0 as i128, b.1 as i128, c.0 as i128, c.1 as i128);
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

fn on_closed_segment(a: (i64, i64), b: (i64, i64), p: (i64, i64)) -> bool {
    orient(a, b, p) == 0 && p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Exact check that the straight-line drawing of `edges` has distinct vertices, no vertex on a
/// non-incident edge, and no two edges meeting outside common endpoints.
pub fn is_straight_line_plane(coords: &[(i64, i64)], edges: &[(usize, usize)]) -> bool {
    let pts: BTreeSet<(i64, i64)> = coords.iter().copied().collect();
    if pts.len() != coords.len() {
        return false;
    }
    for &(u, v) in edges {
        for (w, &p) in coords.iter().enumerate() {
            if w != u && w != v && on_closed_segment(coords[u], coords[v], p) {
                return false;
            }
        }
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            let shared = [a, b].iter().filter(|x| **x == c || **x == d).count();
            if shared > 0 {
                // Sharing an endpoint: only collinear overlap can go wrong, and that puts a
                // vertex on the other edge, caught above.
                continue;
            }
            let (p, q, r, s) = (coords[a], coords[b], coords[c], coords[d]);
            let (o1, o2, o3, o4) = (orient(p, q, r), orient(p, q, s), orient(r, s, p), orient(r, s, q));
            if o1.signum() * o2.signum() < 0 && o3.signum() * o4.signum() < 0 {
                return false;
            }
        }
    }
    true
}

/// Canonical ordering of a triangulation with outer face `(v1, v2, vn)`; also returns, for each
/// vertex `v_k` with `k ≥ 3`, its left and right contour neighbours and the contour vertices it
/// covers when added.
struct Canonical {
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
    cover_parent: Vec<Option<usize>>,
}

fn canonical_ordering(g: &PlaneGraph, v1: usize, v2: usize, vn: usize) -> Result<Canonical> {
    let n = g.n();
    let mut removed = vec![false; n];
    let mut contour = vec![v1, vn, v2];
    let mut left = vec![None; n];
    let mut right = vec![None; n];
    let mut cover_parent = vec![None; n];
    // Direction (in rotation order) from the left to the right contour neighbour through the
    // interior; fixed by the first step.
    let arc = |v: usize, l: usize, r: usize, step: isize| -> Vec<usize> {
        let rot = g.rotation(v);
        let k = rot.len() as isize;
        let mut i = g.pos(v, l) as isize;
        let mut out = Vec::new();
        loop {
            i = (i + step).rem_euclid(k);
            let w = rot[i as usize];
            if w == r {
                return out;
            }
            out.push(w);
        }
    };
    let step = if arc(vn, v1, v2, 1).is_empty() { -1 } else { 1 };
    for _ in 3..=n {
        let on_contour: BTreeSet<usize> = contour.iter().copied().collect();
        let j = (1..contour.len() - 1)
            .find(|&j| {
                let v = contour[j];
                g.rotation(v).iter().filter(|w| on_contour.contains(w)).count() == 2
            })
            .ok_or_else(|| Error::Embedding("no contour vertex without a chord; not a triangulation".into()))?;
        let (l, v, r) = (contour[j - 1], contour[j], contour[j + 1]);
        let inner = arc(v, l, r, step);
        if inner.iter().any(|&w| removed[w]) {
            return Err(Error::Embedding("inconsistent rotation system".into()));
        }
        removed[v] = true;
        left[v] = Some(l);
        right[v] = Some(r);
        for &w in &inner {
            cover_parent[w] = Some(v);
        }
        contour.splice(j..=j, inner);
    }
    if contour != [v1, v2] {
        return Err(Error::Embedding("canonical ordering did not reach the base edge".into()));
    }
    Ok(Canonical { left, right, cover_parent })
}

/// Schnyder's drawing of a triangulation by vertex counts in the three regions of each vertex.
fn schnyder_coords(g: &PlaneGraph, outer: [usize; 3]) -> Result<Vec<(i64, i64)>> {
    let n = g.n();
    let [a1, a2, a3] = outer;
    let can = canonical_ordering(g, a1, a2, a3)?;
    // parent[c][v]: outgoing edge of colour c (0 → a1, 1 → a2, 2 → a3).
    let mut parent = [vec![None; n], vec![None; n], vec![None; n]];
    for v in 0..n {
        if outer.contains(&v) {
            continue;
        }
        parent[0][v] = can.left[v];
        parent[1][v] = can.right[v];
        parent[2][v] = can.cover_parent[v];
    }
    let path = |c: usize, v: usize| -> Result<Vec<usize>> {
        let mut out = vec![v];
        let mut x = v;
        while let Some(p) = parent[c][x] {
            out.push(p);
            x = p;
            if out.len() > n {
                return Err(Error::Embedding("cyclic Schnyder tree".into()));
            }
        }
        if x != outer[c] {
            return Err(Error::Embedding(format!("colour-{c} path from {v} ends at {x}")));
        }
        Ok(out)
    };
    let (faces, dart_face) = g.faces_with_darts();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut coords = vec![(0i64, 0i64); n];
    let nn = n as i64;
    coords[a1] = (nn - 2, 1);
    coords[a2] = (0, nn - 2);
    coords[a3] = (1, 0);
    for v in 0..n {
        if outer.contains(&v) {
            continue;
        }
        let paths = [path(0, v)?, path(1, v)?, path(2, v)?];
        let mut region_size = [0i64; 3];
        for i in 0..3 {
            let (p, q) = ((i + 1) % 3, (i + 2) % 3);
            let mut wall: BTreeSet<(usize, usize)> = BTreeSet::new();
            for pth in [&paths[p], &paths[q]] {
                for w in pth.windows(2) {
                    wall.insert(key(w[0], w[1]));
                }
            }
            wall.insert(key(outer[p], outer[q]));
            // The inner face on the edge between the two far outer vertices.
            let f0 = [dart_face[&(outer[p], outer[q])], dart_face[&(outer[q], outer[p])]]
                .into_iter()
                .find(|&f| {
                    let mut s: Vec<usize> = faces[f].clone();
                    s.sort_unstable();
                    let mut o = outer.to_vec();
                    o.sort_unstable();
                    s != o
                })
                .ok_or_else(|| Error::Embedding("outer edge without inner face".into()))?;
            let mut seen = vec![false; faces.len()];
            seen[f0] = true;
            let mut stack = vec![f0];
            let mut verts: BTreeSet<usize> = BTreeSet::new();
            while let Some(f) = stack.pop() {
                let walk = &faces[f];
                for k in 0..walk.len() {
                    let (a, b) = (walk[k], walk[(k + 1) % walk.len()]);
                    verts.insert(a);
                    if wall.contains(&key(a, b)) {
                        continue;
                    }
                    let h = dart_face[&(b, a)];
                    if !seen[h] {
                        seen[h] = true;
                        stack.push(h);
                    }
                }
            }
            region_size[i] = verts.len() as i64;
        }
        let x0 = region_size[0] - paths[2].len() as i64;
        let x1 = region_size[1] - paths[0].len() as i64;
        coords[v] = (x0, x1);
    }
    Ok(coords)
}

/// Straight-line drawing of a connected plane graph on an `(k-2) × (k-2)` integer grid, `k` the
/// number of vertices. The graph is triangulated first; `outer`, if given, is a dart whose left
/// face (after triangulation) becomes the outer triangle.
pub fn schnyder_draw(g: &PlaneGraph, outer: Option<(usize, usize)>) -> Result<SchnyderDrawing> {
    if g.n() < 3 {
        return precondition(format!("drawing needs at least 3 vertices, got {}", g.n()));
    }
    if !g.is_plane() {
        return Err(Error::NonPlanar("rotation system has positive genus".into()));
    }
    let mut t = g.clone();
    let dummy_edges = t.triangulate()?;
    let (faces, dart_face) = t.faces_with_darts();
    let f = match outer {
        Some(d) => *dart_face.get(&d).ok_or_else(|| Error::Embedding(format!("{d:?} is not a dart")))?,
        None => 0,
    };
    let w = &faces[f];
    let outer = [w[0], w[1], w[2]];
    let coords = schnyder_coords(&t, outer)?;
    if !is_straight_line_plane(&coords, &t.edges()) {
        return Err(Error::Construction("Schnyder drawing is not plane".into()));
    }
    Ok(SchnyderDrawing { coords, outer, dummy_edges })
}

/// Rotation system from vertex coordinates: neighbours sorted counterclockwise by angle.
pub fn rotation_from_coords(coords: &[(i64, i64)], edges: &[(usize, usize)]) -> Result<PlaneGraph> {
    let mut rot = vec![Vec::new(); coords.len()];
    for &(u, v) in edges {
        rot[u].push(v);
        rot[v].push(u);
    }
    for (u, nb) in rot.iter_mut().enumerate() {
        let c = coords[u];
        let half = |p: (i64, i64)| {
            let (dx, dy) = (p.0 - c.0, p.1 - c.1);
            if dy > 0 || (dy == 0 && dx > 0) {
                0
            } else {
                1
            }
        };
        nb.sort_by(|&a, &b| {
            let (pa, pb) = (coords[a], coords[b]);
            half(pa).cmp(&half(pb)).then_with(|| 0.cmp(&orient(c, pa, pb)))
        });
    }
    PlaneGraph::from_rotation(rot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn k4() -> PlaneGraph {
        rotation_from_coords(&[(0, 0), (4, 0), (0, 4), (1, 1)], &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn octahedron() -> PlaneGraph {
        let c = [(0, 0), (10, 0), (5, 9), (5, 1), (3, 4), (7, 4)];
        let e = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 3), (1, 5), (2, 5), (2, 4), (0, 4)];
        rotation_from_coords(&c, &e).unwrap()
    }

    #[test]
    fn faces_and_euler() {
        let g = k4();
        assert_eq!(g.faces().len(), 4);
        assert!(g.is_plane());
        let o = octahedron();
        assert_eq!(o.faces().len(), 8);
        assert!(o.is_plane());
    }

    #[test]
    fn k5_has_no_plane_rotation() {
        let rot: Vec<Vec<usize>> = (0..5).map(|u| (0..5).filter(|&v| v != u).collect()).collect();
        let g = PlaneGraph::from_rotation(rot).unwrap();
        assert!(!g.is_plane());
        assert!(matches!(schnyder_draw(&g, None), Err(Error::NonPlanar(_))));
    }

    #[test]
    fn draws_k4_and_octahedron() {
        for g in [k4(), octahedron()] {
            let d = schnyder_draw(&g, None).unwrap();
            assert!(is_straight_line_plane(&d.coords, &g.edges()));
            let k = g.n() as i64;
            let (w, h) = d.grid_lines();
            assert!(w < k && h < k, "{w}x{h} for {k} vertices");
        }
    }

    #[test]
    fn path_and_cycle_are_triangulated() {
        let path = rotation_from_coords(&[(0, 0), (1, 0), (2, 1), (3, 0)], &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = schnyder_draw(&path, None).unwrap();
        assert!(is_straight_line_plane(&d.coords, &path.edges()));
        let c: Vec<(i64, i64)> = [(0, 0), (2, 0), (3, 2), (1, 3), (-1, 2)].to_vec();
        let cyc = rotation_from_coords(&c, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let d = schnyder_draw(&cyc, Some((0, 1))).unwrap();
        assert_eq!(d.dummy_edges.len(), 3 * 5 - 6 - 5);
        assert!(is_straight_line_plane(&d.coords, &cyc.edges()));
    }

    /// Random plane graphs from Delaunay-free point sets: insert points into a triangulation by
    /// splitting the containing triangle, then delete random edges keeping connectivity.
    fn random_plane(seed: u64, n: usize) -> (Vec<(i64, i64)>, Vec<(usize, usize)>) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut pts = vec![(0i64, 0i64), (1000, 0), (0, 1000)];
        let mut tris = vec![[0usize, 1, 2]];
        let inside = |t: &[usize; 3], p: (i64, i64), pts: &[(i64, i64)]| {
            let o = [orient(pts[t[0]], pts[t[1]], p), orient(pts[t[1]], pts[t[2]], p), orient(pts[t[2]], pts[t[0]], p)];
            o.iter().all(|&x| x > 0) || o.iter().all(|&x| x < 0)
        };
        while pts.len() < n {
            let p = (rng.gen_range(1..999), rng.gen_range(1..999));
            if p.0 + p.1 >= 1000 {
                continue;
            }
            let Some(k) = tris.iter().position(|t| inside(t, p, &pts)) else { continue };
            let t = tris.swap_remove(k);
            let i = pts.len();
            pts.push(p);
            tris.extend([[t[0], t[1], i], [t[1], t[2], i], [t[2], t[0], i]]);
        }
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for t in &tris {
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                edges.insert((a.min(b), a.max(b)));
            }
        }
        let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
        for _ in 0..n {
            let k = rng.gen_range(0..edges.len());
            let trial: Vec<(usize, usize)> = edges.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, e)| *e).collect();
            let g = rotation_from_coords(&pts, &trial).unwrap();
            if g.components() == 1 && !g.rotation(0).is_empty() && (0..n).all(|v| !g.rotation(v).is_empty()) {
                edges = trial;
            }
        }
        (pts, edges)
    }

    #[test]
    fn random_plane_graphs_draw_on_small_grid() {
        for seed in 0..40 {
            let n = 4 + (seed as usize % 20);
            let (pts, edges) = random_plane(seed, n);
            let g = rotation_from_coords(&pts, &edges).unwrap();
            assert!(g.is_plane());
            let d = schnyder_draw(&g, None).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            assert!(is_straight_line_plane(&d.coords, &edges), "seed {seed}");
            let (w, h) = d.grid_lines();
            assert!(w < n as i64 && h < n as i64, "seed {seed}: {w}x{h}");
        }
    }
}
