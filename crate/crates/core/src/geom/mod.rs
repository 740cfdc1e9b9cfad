//! Exact rational (or epsilon float) geometry: predicates, hulls, polygon checks and pair classification.

pub mod classify;
pub mod hull;
pub mod point;
pub mod polygon;
pub mod scalar;

pub use classify::{classify_pair, segment_intersection, Loc, PairClassification, PairKind, PolyGeom, ViolationReason};
pub use hull::{canonical_normal, convex_hull_planar};
pub use point::{collinear, dominant_axis, orient2d, orient3d, Point3};
pub use polygon::{on_segment, polygon_properties, Polygon3, PolygonProperties};
pub use scalar::{q, q_from_str, q_to_string, qi, Scalar, Q};
