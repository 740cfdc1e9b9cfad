//! Contact representations of graphs and non-crossing drawings of hypergraphs by polygons in 3D.
//!
//! Every construction returns a [`Scene`] that can be certified with [`verify::verify_scene`].

pub mod error;
pub mod geom;
pub mod graph;
pub mod hypergraph;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub mod scene;
pub mod verify;

pub use scene::{AnyScene, Scene, SceneFile, Structure};
pub use verify::{verify_any, verify_scene, VerificationReport};
pub mod bip3d;
pub mod cubic3d;
pub mod cyclesq3d;
pub mod gen3d;
pub mod oneplanar3d;
pub mod planar;
pub mod steiner;
