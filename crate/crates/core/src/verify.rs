//! Certification of scenes as contact representations or non-crossing hypergraph drawings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::geom::classify::classify_geoms;
use crate::geom::{polygon_properties, PairKind, Point3, PolyGeom, PolygonProperties, Scalar, ViolationReason};
use crate::scene::{AnyScene, Arithmetic, Scene, Structure};

/// Finding categories. Everything except the last two is a violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    MissingPolygon,
    UnknownPolygon,
    DuplicatePolygon,
    EmptyPolygon,
    NotPlanar,
    NotSimple,
    NotConvex,
    InteriorOverlap,
    BoundaryInInterior,
    CornerInsideOther,
    CornerOnEdge,
    /// An edge whose polygons share no corner.
    MissingContact,
    /// An edge whose polygons share more than one corner.
    ExtraContacts,
    SharedCornerWithoutEdge,
    /// A graph contact point shared by more than two polygons.
    MergedContacts,
    /// A shared point whose polygon set matches no hypergraph vertex.
    WrongVertexPoint,
    MissingVertexPoint,
    DeclaredContactMismatch,
    GridBoundExceeded,
    BoundaryTouch,
    DegeneratePolygon,
}

impl Category {
    pub fn is_warning(self) -> bool {
        matches!(self, Category::BoundaryTouch | Category::DegeneratePolygon)
    }

    fn from_reason(r: ViolationReason) -> Self {
        match r {
            ViolationReason::InteriorOverlap => Category::InteriorOverlap,
            ViolationReason::BoundaryInInterior => Category::BoundaryInInterior,
            ViolationReason::CornerInsideOther => Category::CornerInsideOther,
            ViolationReason::CornerOnEdge => Category::CornerOnEdge,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub category: Category,
    pub elements: Vec<String>,
    pub detail: String,
    pub points: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonReport {
    pub label: String,
    pub corners: usize,
    pub claimed_convex: bool,
    pub properties: PolygonProperties,
}

/// A polygon pair that is not disjoint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairReport {
    pub a: String,
    pub b: String,
    pub kind: PairKind,
    pub reasons: Vec<ViolationReason>,
    pub witnesses: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReconstructedContact {
    pub point: [String; 3],
    /// Edge endpoints (graph) or the vertex (hypergraph).
    pub elements: Vec<String>,
    pub polygons: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCounts {
    pub disjoint: usize,
    pub corner_contact: usize,
    pub boundary_touch: usize,
    pub violation: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridExtent {
    pub counts: [usize; 3],
    /// Float coordinates were snapped with the scene epsilon.
    pub approximate: bool,
}

impl GridExtent {
    pub fn fits(&self, bound: [usize; 3]) -> bool {
        (0..3).all(|i| self.counts[i] <= bound[i])
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub construction: String,
    pub kind: String,
    pub arithmetic: Arithmetic,
    pub epsilon: f64,
    pub polygons: Vec<PolygonReport>,
    pub pair_counts: PairCounts,
    pub pairs: Vec<PairReport>,
    pub contacts: Vec<ReconstructedContact>,
    pub violations: Vec<Finding>,
    pub warnings: Vec<Finding>,
    pub grid_extent: GridExtent,
    pub claimed_grid_bounds: Option<[usize; 3]>,
}

impl VerificationReport {
    pub fn has(&self, c: Category) -> bool {
        self.violations.iter().chain(&self.warnings).any(|f| f.category == c)
    }

    pub fn violation_categories(&self) -> BTreeSet<Category> {
        self.violations.iter().map(|f| f.category).collect()
    }

    pub fn contact_count(&self) -> usize {
        self.contacts.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let status = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{status}: {} ({} scene, {:?} arithmetic)", self.construction, self.kind, self.arithmetic);
        let _ = writeln!(
            s,
            "polygons: {}  contacts: {}  pairs: {} disjoint, {} contact, {} touch, {} violating",
            self.polygons.len(),
            self.contacts.len(),
            self.pair_counts.disjoint,
            self.pair_counts.corner_contact,
            self.pair_counts.boundary_touch,
            self.pair_counts.violation
        );
        let g = self.grid_extent.counts;
        let approx = if self.grid_extent.approximate { " (approximate)" } else { "" };
        let _ = write!(s, "grid extent: {} x {} x {}{approx}", g[0], g[1], g[2]);
        if let Some(b) = self.claimed_grid_bounds {
            let _ = write!(s, "  claimed: {} x {} x {}", b[0], b[1], b[2]);
        }
        s.push('\n');
        for (tag, list) in [("violation", &self.violations), ("warning", &self.warnings)] {
            for f in list {
                let _ = writeln!(s, "{tag}: {:?} [{}] {}", f.category, f.elements.join(", "), f.detail);
            }
        }
        s
    }
}

fn pstr<S: Scalar>(p: &Point3<S>) -> [String; 3] {
    [p.x.to_repr(), p.y.to_repr(), p.z.to_repr()]
}

fn finding(category: Category, elements: Vec<String>, detail: impl Into<String>, points: Vec<[String; 3]>) -> Finding {
    Finding { category, elements, detail: detail.into(), points }
}

/// Number of distinct values per axis among all corners; floats are clustered within `eps`.
pub fn grid_extent<S: Scalar>(s: &Scene<S>) -> GridExtent {
    let eps = if S::EXACT { 0.0 } else { s.meta.epsilon };
    let mut counts = [0; 3];
    for (axis, count) in counts.iter_mut().enumerate() {
        let mut vals: Vec<S> = s.all_corners().map(|p| p.coord(axis).clone()).collect();
        vals.sort_by(|a, b| (a.clone() - b.clone()).sign(0.0).cmp(&0));
        let mut last: Option<S> = None;
        for v in vals {
            if last.as_ref().is_none_or(|l| (v.clone() - l.clone()).sign(eps) != 0) {
                *count += 1;
                last = Some(v);
            }
        }
    }
    GridExtent { counts, approximate: !S::EXACT }
}

struct BBox<S> {
    lo: [S; 3],
    hi: [S; 3],
}

fn bbox<S: Scalar>(pts: &[Point3<S>]) -> Option<BBox<S>> {
    let first = pts.first()?;
    let mut lo = [first.x.clone(), first.y.clone(), first.z.clone()];
    let mut hi = lo.clone();
    for p in pts {
        for a in 0..3 {
            let v = p.coord(a);
            if (v.clone() - lo[a].clone()).sign(0.0) < 0 {
                lo[a] = v.clone();
            }
            if (v.clone() - hi[a].clone()).sign(0.0) > 0 {
                hi[a] = v.clone();
            }
        }
    }
    Some(BBox { lo, hi })
}

fn boxes_apart<S: Scalar>(a: &BBox<S>, b: &BBox<S>, eps: f64) -> bool {
    (0..3).any(|i| (a.hi[i].clone() - b.lo[i].clone()).sign(eps) < 0 || (b.hi[i].clone() - a.lo[i].clone()).sign(eps) < 0)
}

/// Verifies a scene. `eps` is ignored for exact scenes.
pub fn verify_scene<S: Scalar>(s: &Scene<S>, eps: f64) -> VerificationReport {
    let eps = if S::EXACT { 0.0 } else { eps };
    let mut violations = Vec::new();
    let mut warnings = Vec::new();

    let expected = s.structure.element_labels();
    let expected_set: BTreeSet<&str> = expected.iter().map(String::as_str).collect();
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    for p in &s.polygons {
        if !expected_set.contains(p.label.as_str()) {
            violations.push(finding(Category::UnknownPolygon, vec![p.label.clone()], "label not in structure", vec![]));
        } else if !seen.insert(p.label.as_str()) {
            violations.push(finding(Category::DuplicatePolygon, vec![p.label.clone()], "label used twice", vec![]));
        }
    }
    for e in &expected {
        if !seen.contains(e.as_str()) {
            violations.push(finding(Category::MissingPolygon, vec![e.clone()], "no polygon", vec![]));
        }
    }

    // Polygon checks.
    let mut polygons = Vec::new();
    let mut usable = Vec::new();
    for p in &s.polygons {
        let poly = &p.polygon;
        let props = if poly.is_empty() {
            PolygonProperties { planar: false, simple: false, convex: false, strictly_convex: false, degenerate: true }
        } else {
            polygon_properties(poly, eps)
        };
        let el = vec![p.label.clone()];
        let mut ok = true;
        if poly.is_empty() {
            violations.push(finding(Category::EmptyPolygon, el.clone(), "no corners", vec![]));
            ok = false;
        } else if !props.planar {
            violations.push(finding(Category::NotPlanar, el.clone(), "corners not coplanar", vec![]));
            ok = false;
        } else if !props.simple && poly.len() >= 2 {
            violations.push(finding(Category::NotSimple, el.clone(), "boundary self-intersects or repeats corners", vec![]));
            ok = false;
        } else if poly.claimed_convex && poly.len() >= 3 && !props.convex {
            violations.push(finding(Category::NotConvex, el.clone(), "claimed convex but is not", vec![]));
        }
        if props.degenerate && ok {
            let what = if poly.len() == 1 { "point" } else { "segment" };
            warnings.push(finding(Category::DegeneratePolygon, el, what, vec![]));
        }
        usable.push(ok);
        polygons.push(PolygonReport {
            label: p.label.clone(),
            corners: poly.len(),
            claimed_convex: poly.claimed_convex,
            properties: props,
        });
    }

    // Pairwise classification.
    let geoms: Vec<PolyGeom<S>> = s.polygons.iter().map(|p| PolyGeom::new(&p.polygon, eps)).collect();
    let boxes: Vec<Option<BBox<S>>> = s.polygons.iter().map(|p| bbox(&p.polygon.corners)).collect();
    let mut pair_counts = PairCounts::default();
    let mut pairs = Vec::new();
    for i in 0..s.polygons.len() {
        for j in i + 1..s.polygons.len() {
            if !usable[i] || !usable[j] {
                continue;
            }
            if let (Some(a), Some(b)) = (&boxes[i], &boxes[j]) {
                if boxes_apart(a, b, eps) {
                    pair_counts.disjoint += 1;
                    continue;
                }
            }
            let r = classify_geoms(&geoms[i], &geoms[j], eps);
            let (la, lb) = (s.polygons[i].label.clone(), s.polygons[j].label.clone());
            let wit: Vec<[String; 3]> = r.witnesses.iter().map(pstr).collect();
            match r.kind {
                PairKind::Disjoint => {
                    pair_counts.disjoint += 1;
                    continue;
                }
                PairKind::CornerContact => pair_counts.corner_contact += 1,
                PairKind::BoundaryTouch => {
                    pair_counts.boundary_touch += 1;
                    warnings.push(finding(
                        Category::BoundaryTouch,
                        vec![la.clone(), lb.clone()],
                        "boundaries meet at a non-corner point",
                        wit.clone(),
                    ));
                }
                PairKind::Violation => {
                    pair_counts.violation += 1;
                    let reason = r.reasons[0];
                    let all: Vec<&str> = r.reasons.iter().map(|x| x.describe()).collect();
                    violations.push(finding(Category::from_reason(reason), vec![la.clone(), lb.clone()], all.join("; "), wit.clone()));
                }
            }
            pairs.push(PairReport { a: la, b: lb, kind: r.kind, reasons: r.reasons, witnesses: wit });
        }
    }

    // Shared corner points and the polygons owning them.
    let mut clusters: Vec<(Point3<S>, BTreeSet<usize>)> = Vec::new();
    for (i, p) in s.polygons.iter().enumerate() {
        for c in &p.polygon.corners {
            match clusters.iter_mut().find(|(q, _)| q.same(c, eps)) {
                Some((_, owners)) => {
                    owners.insert(i);
                }
                None => clusters.push((c.clone(), BTreeSet::from([i]))),
            }
        }
    }
    let shared: Vec<&(Point3<S>, BTreeSet<usize>)> = clusters.iter().filter(|(_, o)| o.len() >= 2).collect();
    let label_of = |i: usize| s.polygons[i].label.clone();
    let mut contacts = Vec::new();

    match &s.structure {
        Structure::Graph(g) => {
            let mut per_edge: BTreeMap<usize, Vec<[String; 3]>> = BTreeMap::new();
            for (pt, owners) in &shared {
                let labels: Vec<String> = owners.iter().map(|&i| label_of(i)).collect();
                if owners.len() > 2 {
                    violations.push(finding(
                        Category::MergedContacts,
                        labels.clone(),
                        format!("one point is a corner of {} polygons", owners.len()),
                        vec![pstr(pt)],
                    ));
                    continue;
                }
                let (a, b) = (&labels[0], &labels[1]);
                let edge = match (g.index_of(a), g.index_of(b)) {
                    (Some(u), Some(v)) => g.edge_index(u, v),
                    _ => None,
                };
                let Some(e) = edge else {
                    violations.push(finding(
                        Category::SharedCornerWithoutEdge,
                        labels.clone(),
                        "shared corner without edge",
                        vec![pstr(pt)],
                    ));
                    continue;
                };
                per_edge.entry(e).or_default().push(pstr(pt));
                let (u, v) = g.edges()[e];
                contacts.push(ReconstructedContact {
                    point: pstr(pt),
                    elements: vec![g.label(u).to_string(), g.label(v).to_string()],
                    polygons: labels,
                });
            }
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                let el = vec![g.label(u).to_string(), g.label(v).to_string()];
                match per_edge.get(&e).map_or(0, Vec::len) {
                    0 => violations.push(finding(Category::MissingContact, el, "edge polygons share no corner", vec![])),
                    1 => {}
                    k => violations.push(finding(
                        Category::ExtraContacts,
                        el,
                        format!("edge polygons share {k} corners"),
                        per_edge[&e].clone(),
                    )),
                }
            }
        }
        Structure::Hypergraph(h) => {
            let block_of_poly: Vec<Option<usize>> = s.polygons.iter().map(|p| h.block_index(&p.label)).collect();
            let mut assigned = vec![0usize; h.n()];
            for (pt, owners) in &shared {
                let labels: Vec<String> = owners.iter().map(|&i| label_of(i)).collect();
                let blocks: Option<BTreeSet<usize>> = owners.iter().map(|&i| block_of_poly[i]).collect();
                // Prefer a vertex with this exact block set that has no point yet.
                let candidates: Vec<usize> = match &blocks {
                    Some(bs) => {
                        (0..h.n()).filter(|&v| h.degree(v) >= 2 && h.blocks_of(v).into_iter().collect::<BTreeSet<_>>() == *bs).collect()
                    }
                    None => Vec::new(),
                };
                let Some(&v) = candidates.iter().find(|&&v| assigned[v] == 0).or(candidates.first()) else {
                    violations.push(finding(
                        Category::WrongVertexPoint,
                        labels,
                        "polygons share a corner but their blocks match no vertex",
                        vec![pstr(pt)],
                    ));
                    continue;
                };
                assigned[v] += 1;
                if assigned[v] > 1 {
                    violations.push(finding(
                        Category::ExtraContacts,
                        vec![h.label(v).to_string()],
                        "vertex realized by more than one point",
                        vec![pstr(pt)],
                    ));
                }
                contacts.push(ReconstructedContact { point: pstr(pt), elements: vec![h.label(v).to_string()], polygons: labels });
            }
            for v in 0..h.n() {
                if h.degree(v) >= 2 && assigned[v] == 0 {
                    violations.push(finding(
                        Category::MissingVertexPoint,
                        vec![h.label(v).to_string()],
                        "no point shared by exactly the blocks of this vertex",
                        vec![],
                    ));
                }
            }
        }
    }

    check_declared(s, eps, &contacts, &mut violations);

    let extent = grid_extent(s);
    if let Some(b) = s.meta.grid_bounds {
        if !extent.fits(b) {
            violations.push(finding(
                Category::GridBoundExceeded,
                vec![],
                format!("extent {:?} exceeds claimed {:?}", extent.counts, b),
                vec![],
            ));
        }
    }

    contacts.sort_by(|a, b| a.elements.cmp(&b.elements));
    VerificationReport {
        pass: violations.is_empty(),
        construction: s.meta.construction.clone(),
        kind: s.structure.kind().to_string(),
        arithmetic: s.meta.arithmetic,
        epsilon: eps,
        polygons,
        pair_counts,
        pairs,
        contacts,
        violations,
        warnings,
        grid_extent: extent,
        claimed_grid_bounds: s.meta.grid_bounds,
    }
}

/// Declared contacts must equal the reconstruction, up to element order.
fn check_declared<S: Scalar>(s: &Scene<S>, eps: f64, reconstructed: &[ReconstructedContact], violations: &mut Vec<Finding>) {
    let key = |els: &[String]| -> Vec<String> {
        let mut k = els.to_vec();
        k.sort();
        k
    };
    let mut declared: BTreeMap<Vec<String>, Vec<&Point3<S>>> = BTreeMap::new();
    for c in &s.contacts {
        declared.entry(key(&c.elements)).or_default().push(&c.point);
    }
    let mut matched: BTreeSet<Vec<String>> = BTreeSet::new();
    for r in reconstructed {
        let k = key(&r.elements);
        let ok = declared.get(&k).is_some_and(|pts| {
            pts.len() == 1 && {
                let p = S::parse_repr(&r.point[0])
                    .zip(S::parse_repr(&r.point[1]))
                    .zip(S::parse_repr(&r.point[2]))
                    .map(|((x, y), z)| Point3::new(x, y, z));
                p.is_some_and(|p| p.same(pts[0], eps))
            }
        });
        if ok {
            matched.insert(k);
        } else {
            violations.push(finding(
                Category::DeclaredContactMismatch,
                r.elements.clone(),
                "reconstructed contact not declared at this point",
                vec![r.point.clone()],
            ));
        }
    }
    for (k, pts) in &declared {
        if matched.contains(k) {
            continue;
        }
        // Degree-one hypergraph vertices have no shared point; their declared point must be a corner.
        if let Structure::Hypergraph(h) = &s.structure {
            if let [v] = k.as_slice() {
                if let Some(vi) = h.index_of(v) {
                    if h.degree(vi) == 1 && pts.len() == 1 {
                        let b = h.block_label(h.blocks_of(vi)[0]);
                        if s.polygon(&b).is_some_and(|p| p.corners.iter().any(|c| c.same(pts[0], eps))) {
                            continue;
                        }
                    }
                }
            }
        }
        violations.push(finding(
            Category::DeclaredContactMismatch,
            k.clone(),
            "declared contact not realized",
            pts.iter().map(|p| pstr(p)).collect(),
        ));
    }
}

/// Verifies a scene of either arithmetic; `eps` defaults to the scene's own epsilon.
pub fn verify_any(s: &AnyScene, eps: Option<f64>) -> VerificationReport {
    match s {
        AnyScene::Exact(s) => verify_scene(s, 0.0),
        AnyScene::Float(s) => verify_scene(s, eps.unwrap_or(s.meta.epsilon)),
    }
}

pub fn grid_extent_any(s: &AnyScene) -> GridExtent {
    match s {
        AnyScene::Exact(s) => grid_extent(s),
        AnyScene::Float(s) => grid_extent(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{qi, Polygon3, Q};
    use crate::graph::Graph;
    use crate::hypergraph::Hypergraph;

    fn p(x: i64, y: i64, z: i64) -> Point3<Q> {
        Point3::new(qi(x), qi(y), qi(z))
    }

    fn two_triangles() -> Scene<Q> {
        let g = Graph::from_edges(&[("a", "b")]);
        let mut s = Scene::new(Structure::Graph(g), "test");
        s.push_polygon("a", Polygon3::new(vec![p(0, 0, 0), p(2, 0, 0), p(0, 2, 0)]));
        s.push_polygon("b", Polygon3::new(vec![p(0, 0, 0), p(-2, 0, 1), p(0, -2, 1)]));
        s.declare_graph_contacts().unwrap();
        s
    }

    #[test]
    fn simple_contact_passes() {
        let r = verify_scene(&two_triangles(), 0.0);
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(r.contact_count(), 1);
        assert_eq!(r.grid_extent.counts, [3, 3, 2]);
    }

    #[test]
    fn missing_contact_detected() {
        let mut s = two_triangles();
        let shift = p(0, 0, 10);
        s.polygons[1].polygon.corners.iter_mut().for_each(|c| *c = c.add(&shift));
        let r = verify_scene(&s, 0.0);
        assert!(r.has(Category::MissingContact));
        assert!(r.has(Category::DeclaredContactMismatch));
    }

    #[test]
    fn non_edge_contact_detected() {
        let mut s = two_triangles();
        s.structure = Structure::Graph(Graph::from_edges(&[("a", "c"), ("b", "c")]));
        s.push_polygon("c", Polygon3::new(vec![p(5, 5, 5), p(6, 5, 5), p(5, 6, 5)]));
        s.contacts.clear();
        let r = verify_scene(&s, 0.0);
        assert!(r.has(Category::SharedCornerWithoutEdge));
    }

    #[test]
    fn hypergraph_scene() {
        let h = Hypergraph::new(&["1", "2", "3"], &[vec!["1", "2"], vec!["2", "3"]]).unwrap();
        let mut s = Scene::new(Structure::Hypergraph(h), "test");
        s.push_polygon("12", Polygon3::new(vec![p(0, 0, 0), p(1, 0, 0)]));
        s.push_polygon("23", Polygon3::new(vec![p(1, 0, 0), p(1, 1, 0)]));
        s.push_contact(p(0, 0, 0), vec!["1".into()]);
        s.push_contact(p(1, 0, 0), vec!["2".into()]);
        s.push_contact(p(1, 1, 0), vec!["3".into()]);
        let r = verify_scene(&s, 0.0);
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(r.contacts.len(), 1);
        assert!(r.has(Category::DegeneratePolygon));
    }

    #[test]
    fn grid_bound_checked() {
        let mut s = two_triangles();
        s.meta.grid_bounds = Some([3, 3, 1]);
        assert!(verify_scene(&s, 0.0).has(Category::GridBoundExceeded));
    }
}
