//! Generators for example complexes: cube-grid balls and drilled balls,
//! cone spheres, wedge thickenings, suspensions, convex fixtures and a
//! catalog of small named complexes.

pub mod catalog;
pub mod fixtures;
pub mod grid;
pub mod spheres;

use thiserror::Error;

use crate::complex::{ComplexError, Face, Vertex};
use crate::geometry::GeometryError;

pub use fixtures::{convex_fixture, convex_spheres, FixtureName};
pub use grid::{furch_ball, grid_ball, trefoil_path, FurchBall, GridDims, LatticePath, TREFOIL_BOX};
pub use spheres::{cone_sphere, remove_facet, suspension_realization, wedge_thicken, ConeSphere, WedgeThickening};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("box dimensions must be positive, got {0:?}")]
    InvalidDimensions(Vec<usize>),
    #[error("path point {index} is outside the box or touches a side wall")]
    PathTouchesWall { index: usize },
    #[error("path must start in the top layer, end in the bottom layer and avoid both in between")]
    PathNotTopToBottom,
    #[error("path steps {} -> {index} is not a unit step", .index - 1)]
    PathNotConnected { index: usize },
    #[error("path points {first} and {second} collide or their cubes touch")]
    PathSelfIntersects { first: usize, second: usize },
    #[error("cannot parse path line {line}")]
    BadPathLine { line: usize },
    #[error("not a 3-ball: {0}")]
    NotABall(String),
    #[error("{0} is not a facet")]
    FacetNotFound(Face),
    #[error("{0} is not a boundary triangle")]
    NotBoundaryTriangle(Face),
    #[error("the two complexes share vertex labels {0:?}")]
    LabelClash(Vec<Vertex>),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
