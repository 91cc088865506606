//! Exact rational convex geometry and integer lattice algebra.

mod dd;
pub mod intlin;
mod measure;
mod polytope;

pub use measure::{lattice_distance, LatticeDistance};
pub use polytope::{
    content, convex_hull, convex_hull_int, point, Cone, Equation, Face, FaceId, Facet, Polytope, Rational, MAX_DIM,
};
