//! Maximal cliques in intersection graphs of convex polygons whose edges
//! use a fixed finite set of directions, computed in exact rational
//! arithmetic.

pub mod bound;
pub mod clique;
pub mod constructions;
pub mod error;
pub mod geom;
pub mod graph;

pub use error::{Error, Result};
pub use geom::{ConvexPolygon, Direction, DirectionSet, Point, Rational, Segment};
pub use graph::{build_graph, build_segment_graph, CliqueSet, Graph, Scene, SegmentScene};
