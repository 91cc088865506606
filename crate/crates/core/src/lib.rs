//! Combinatorial invariants of the monodromy at infinity of a polynomial map
//! `f: Cⁿ → C`, read off its Newton polyhedron at infinity: atypical and
//! admissible faces, the zeta function at infinity, eigenvalue
//! multiplicities, the two largest Jordan block sizes, and the local data at
//! a bifurcation point.
//!
//! All geometry is exact. Non-degeneracy is decided exactly on edges and by
//! a seeded modular search on higher-dimensional faces.

pub mod error;
pub mod fixtures;
pub mod jordan;
pub mod latgeo;
pub mod localmono;
pub mod newton;
pub mod nondeg;
pub mod poly;
pub mod report;
pub mod roots;
pub mod zeta;

pub use error::{Error, Result};
pub use jordan::{jordan_table, JordanReport, JordanRow};
pub use latgeo::{Cone, Face, FaceId, Polytope};
pub use localmono::{atypical_eigenvalues_local, LocalScene};
pub use newton::{gamma_infinity, FaceInfo, NewtonAtInfinity};
pub use nondeg::{NondegConfig, NondegStatus, Verdict};
pub use poly::{ExponentVector, Polynomial};
pub use report::{analyze, analyze_local, AnalysisReport, AnalyzeOptions, LocalReport};
pub use roots::{EigenvalueSet, RootOfUnity};
pub use zeta::{multiplicity, zeta_at_infinity, zeta_torus_at_infinity, FactoredZeta};
