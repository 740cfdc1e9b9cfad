//! Scenes: polygons realizing a graph or hypergraph, plus their JSON file form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Point3, Polygon3, Scalar, Q};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// The combinatorial object a scene realizes.
#[derive(Debug, Clone, PartialEq)]
pub enum Structure {
    /// Polygons are vertices; contacts are edges.
    Graph(Graph),
    /// Polygons are blocks; contacts are vertices.
    Hypergraph(Hypergraph),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Graph(_) => "graph",
            Structure::Hypergraph(_) => "hypergraph",
        }
    }

    /// Polygon labels in canonical order: vertex labels, or block labels.
    pub fn element_labels(&self) -> Vec<String> {
        match self {
            Structure::Graph(g) => g.labels().to_vec(),
            Structure::Hypergraph(h) => (0..h.blocks().len()).map(|b| h.block_label(b)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    Exact,
    Float,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneMeta {
    pub construction: String,
    pub arithmetic: Arithmetic,
    /// Claimed grid-line counts per axis, checked by the verifier when present.
    pub grid_bounds: Option<[usize; 3]>,
    pub epsilon: f64,
    /// Some polygons are segments or points.
    #[serde(default)]
    pub degenerate: bool,
}

/// A declared contact: one point and the structure elements meeting there.
///
/// For graphs `elements` are the two endpoints of the edge; for hypergraphs it is the single vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Contact<S> {
    pub point: Point3<S>,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledPolygon<S> {
    pub label: String,
    pub polygon: Polygon3<S>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scene<S> {
    pub structure: Structure,
    pub polygons: Vec<LabeledPolygon<S>>,
    pub contacts: Vec<Contact<S>>,
    pub meta: SceneMeta,
}

impl<S: Scalar> Scene<S> {
    pub fn new(structure: Structure, construction: &str) -> Self {
        let arithmetic = if S::EXACT { Arithmetic::Exact } else { Arithmetic::Float };
        Self {
            structure,
            polygons: Vec::new(),
            contacts: Vec::new(),
            meta: SceneMeta {
                construction: construction.to_string(),
                arithmetic,
                grid_bounds: None,
                epsilon: if S::EXACT { 0.0 } else { 1e-9 },
                degenerate: false,
            },
        }
    }

    pub fn polygon(&self, label: &str) -> Option<&Polygon3<S>> {
        self.polygons.iter().find(|p| p.label == label).map(|p| &p.polygon)
    }

    pub fn polygon_mut(&mut self, label: &str) -> Option<&mut Polygon3<S>> {
        self.polygons.iter_mut().find(|p| p.label == label).map(|p| &mut p.polygon)
    }

    pub fn push_polygon(&mut self, label: impl Into<String>, polygon: Polygon3<S>) {
        if polygon.len() < 3 {
            self.meta.degenerate = true;
        }
        self.polygons.push(LabeledPolygon { label: label.into(), polygon });
    }

    pub fn push_contact(&mut self, point: Point3<S>, elements: Vec<String>) {
        self.contacts.push(Contact { point, elements });
    }

    /// Declares graph contacts for every edge: the common corner of the two endpoint polygons.
    pub fn declare_graph_contacts(&mut self) -> Result<()> {
        let Structure::Graph(g) = &self.structure else {
            return Err(Error::Construction("graph contacts on a hypergraph scene".into()));
        };
        let eps = self.meta.epsilon;
        let mut contacts = Vec::new();
        for &(u, v) in g.edges() {
            let (lu, lv) = (g.label(u), g.label(v));
            let pu = self.polygon(lu).ok_or_else(|| Error::Construction(format!("no polygon for {lu}")))?;
            let pv = self.polygon(lv).ok_or_else(|| Error::Construction(format!("no polygon for {lv}")))?;
            let common = pu.corners.iter().find(|c| pv.corners.iter().any(|d| d.same(c, eps)));
            let Some(p) = common else {
                return Err(Error::Construction(format!("polygons {lu} and {lv} share no corner")));
            };
            contacts.push(Contact { point: p.clone(), elements: vec![lu.to_string(), lv.to_string()] });
        }
        self.contacts = contacts;
        Ok(())
    }

    pub fn all_corners(&self) -> impl Iterator<Item = &Point3<S>> {
        self.polygons.iter().flat_map(|p| p.polygon.corners.iter())
    }

    pub fn map_points(&self, f: impl Fn(&Point3<S>) -> Point3<S>) -> Self {
        let mut out = self.clone();
        for p in &mut out.polygons {
            for c in &mut p.polygon.corners {
                *c = f(c);
            }
        }
        for c in &mut out.contacts {
            c.point = f(&c.point);
        }
        out
    }
}

impl Scene<Q> {
    pub fn to_float(&self) -> Scene<f64> {
        Scene {
            structure: self.structure.clone(),
            polygons: self
                .polygons
                .iter()
                .map(|p| LabeledPolygon {
                    label: p.label.clone(),
                    polygon: Polygon3 {
                        corners: p.polygon.corners.iter().map(|c| c.to_float()).collect(),
                        claimed_convex: p.polygon.claimed_convex,
                    },
                })
                .collect(),
            contacts: self.contacts.iter().map(|c| Contact { point: c.point.to_float(), elements: c.elements.clone() }).collect(),
            meta: SceneMeta { arithmetic: Arithmetic::Float, epsilon: 1e-9, ..self.meta.clone() },
        }
    }
}

/// A scene in either arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyScene {
    Exact(Scene<Q>),
    Float(Scene<f64>),
}

impl From<Scene<Q>> for AnyScene {
    fn from(s: Scene<Q>) -> Self {
        AnyScene::Exact(s)
    }
}

impl From<Scene<f64>> for AnyScene {
    fn from(s: Scene<f64>) -> Self {
        AnyScene::Float(s)
    }
}

impl AnyScene {
    pub fn meta(&self) -> &SceneMeta {
        match self {
            AnyScene::Exact(s) => &s.meta,
            AnyScene::Float(s) => &s.meta,
        }
    }

    pub fn structure(&self) -> &Structure {
        match self {
            AnyScene::Exact(s) => &s.structure,
            AnyScene::Float(s) => &s.structure,
        }
    }

    pub fn to_file(&self) -> SceneFile {
        match self {
            AnyScene::Exact(s) => SceneFile::from_scene(s),
            AnyScene::Float(s) => SceneFile::from_scene(s),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("scene serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SceneFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        file.into_scene()
    }

    /// Corners as floats, for export.
    pub fn float_polygons(&self) -> Vec<(String, Vec<[f64; 3]>)> {
        fn go<S: Scalar>(s: &Scene<S>) -> Vec<(String, Vec<[f64; 3]>)> {
            s.polygons.iter().map(|p| (p.label.clone(), p.polygon.corners.iter().map(|c| c.to_f64()).collect())).collect()
        }
        match self {
            AnyScene::Exact(s) => go(s),
            AnyScene::Float(s) => go(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureFile {
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointEntry {
    pub id: usize,
    pub x: String,
    pub y: String,
    pub z: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonEntry {
    pub label: String,
    pub corners: Vec<usize>,
    pub convex: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContactEntry {
    pub point: usize,
    pub elements: Vec<String>,
}

/// JSON document form of a scene. Coordinates are strings so rationals stay exact.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneFile {
    pub kind: String,
    pub structure: StructureFile,
    pub points: Vec<PointEntry>,
    pub polygons: Vec<PolygonEntry>,
    pub contacts: Vec<ContactEntry>,
    pub meta: SceneMeta,
}

impl SceneFile {
    pub fn from_scene<S: Scalar>(s: &Scene<S>) -> Self {
        let mut points: Vec<Point3<S>> = Vec::new();
        // Bitwise-identical coordinates share an id; near-equal floats stay distinct on purpose.
        let mut id_of = |p: &Point3<S>| -> usize {
            if let Some(i) = points.iter().position(|q| q == p) {
                i
            } else {
                points.push(p.clone());
                points.len() - 1
            }
        };
        let polygons = s
            .polygons
            .iter()
            .map(|p| PolygonEntry {
                label: p.label.clone(),
                corners: p.polygon.corners.iter().map(&mut id_of).collect(),
                convex: p.polygon.claimed_convex,
            })
            .collect();
        let contacts = s.contacts.iter().map(|c| ContactEntry { point: id_of(&c.point), elements: c.elements.clone() }).collect();
        let structure = match &s.structure {
            Structure::Graph(g) => StructureFile {
                vertices: g.labels().to_vec(),
                edges: Some(g.edges().iter().map(|&(u, v)| [g.label(u).into(), g.label(v).into()]).collect()),
                blocks: None,
            },
            Structure::Hypergraph(h) => StructureFile {
                vertices: h.labels().to_vec(),
                edges: None,
                blocks: Some(h.blocks().iter().map(|b| b.iter().map(|&v| h.label(v).to_string()).collect()).collect()),
            },
        };
        SceneFile {
            kind: s.structure.kind().to_string(),
            structure,
            points: points
                .iter()
                .enumerate()
                .map(|(id, p)| PointEntry { id, x: p.x.to_repr(), y: p.y.to_repr(), z: p.z.to_repr() })
                .collect(),
            polygons,
            contacts,
            meta: s.meta.clone(),
        }
    }

    fn structure(&self) -> Result<Structure> {
        match self.kind.as_str() {
            "graph" => {
                let mut g = Graph::new();
                for v in &self.structure.vertices {
                    if g.index_of(v).is_some() {
                        return Err(Error::Format(format!("duplicate vertex {v}")));
                    }
                    g.add_vertex(v);
                }
                for [u, v] in self.structure.edges.as_deref().unwrap_or_default() {
                    let iu = g.index_of(u).ok_or_else(|| Error::Format(format!("unknown vertex {u}")))?;
                    let iv = g.index_of(v).ok_or_else(|| Error::Format(format!("unknown vertex {v}")))?;
                    g.add_edge(iu, iv)?;
                }
                Ok(Structure::Graph(g))
            }
            "hypergraph" => {
                let blocks = self.structure.blocks.clone().unwrap_or_default();
                Ok(Structure::Hypergraph(Hypergraph::new(&self.structure.vertices, &blocks)?))
            }
            other => Err(Error::Format(format!("unknown scene kind {other:?}"))),
        }
    }

    fn build<S: Scalar>(&self) -> Result<Scene<S>> {
        let structure = self.structure()?;
        let mut pts = std::collections::HashMap::new();
        for p in &self.points {
            let parse = |s: &str| S::parse_repr(s).ok_or_else(|| Error::Format(format!("point {}: bad coordinate {s:?}", p.id)));
            let pt = Point3::new(parse(&p.x)?, parse(&p.y)?, parse(&p.z)?);
            if pts.insert(p.id, pt).is_some() {
                return Err(Error::Format(format!("duplicate point id {}", p.id)));
            }
        }
        let get = |id: &usize| pts.get(id).cloned().ok_or_else(|| Error::Format(format!("unknown point id {id}")));
        let mut scene = Scene::<S>::new(structure, &self.meta.construction);
        for poly in &self.polygons {
            let corners = poly.corners.iter().map(get).collect::<Result<Vec<_>>>()?;
            scene.polygons.push(LabeledPolygon { label: poly.label.clone(), polygon: Polygon3 { corners, claimed_convex: poly.convex } });
        }
        for c in &self.contacts {
            scene.contacts.push(Contact { point: get(&c.point)?, elements: c.elements.clone() });
        }
        scene.meta = self.meta.clone();
        Ok(scene)
    }

    pub fn into_scene(self) -> Result<AnyScene> {
        match self.meta.arithmetic {
            Arithmetic::Exact => Ok(AnyScene::Exact(self.build()?)),
            Arithmetic::Float => Ok(AnyScene::Float(self.build()?)),
        }
    }
}
