//! Jordan blocks of the two largest sizes in the monodromy at infinity.
//!
//! With `Cone∞(f)` the cone over `Γ∞(f)`:
//!
//! * vertices `q_i` at infinity in the open cone, `d_i` their lattice
//!   distance, give blocks of size `n`: `#{i : λ^{d_i} = 1}`;
//! * edges `γ_i` at infinity whose relative interior lies in the open cone,
//!   `e_i` their lattice distance and `Δ_i = conv({0} ∪ γ_i)`, give blocks
//!   of size `n - 1`: `Σ_{i : λ^{e_i} = 1} n(λ)_i`, where `n(λ)_i` counts
//!   lattice points in `rel.int Δ_i` at height `k` and at height `e_i - k`
//!   for `λ = ζ_{e_i}^k`.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::latgeo::{content, convex_hull_int, lattice_distance, point, Cone, FaceId, Rational};
use crate::newton::NewtonAtInfinity;
use crate::roots::{divisors, EigenvalueSet, RootOfUnity};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InteriorVertex {
    pub face: FaceId,
    pub point: Vec<i64>,
    pub d: i64,
}

/// An edge at infinity with relative interior inside the open cone.
#[derive(Clone, Debug, Serialize)]
pub struct InteriorEdge {
    pub face: FaceId,
    pub vertices: Vec<Vec<i64>>,
    pub e: i64,
    /// Lattice points of `rel.int Δ_i` with their heights over the edge.
    pub heights: Vec<(Vec<i64>, i64)>,
}

impl InteriorEdge {
    /// Builds the data for the segment `[p, q]` with `0 ∉ aff [p, q]`.
    pub fn from_segment(face: FaceId, p: &[i64], q: &[i64]) -> Result<InteriorEdge> {
        let n = p.len();
        let ld = lattice_distance(&[p.to_vec(), q.to_vec()])?;
        let delta = convex_hull_int(&[vec![0; n], p.to_vec(), q.to_vec()], &[])?;
        let mut heights = Vec::new();
        for v in delta.lattice_points(true)? {
            let h = ld.height(&v)?;
            heights.push((v, h));
        }
        Ok(InteriorEdge { face, vertices: vec![p.to_vec(), q.to_vec()], e: ld.d, heights })
    }

    /// `n(λ)_i`; requires `λ ≠ 1` and `λ^{e_i} = 1`.
    pub fn n_lambda(&self, lambda: &RootOfUnity) -> Result<u64> {
        if lambda.is_one() {
            return Err(Error::InvalidEigenvalue("1".into()));
        }
        let k = lambda
            .exponent_in(self.e as u64)
            .ok_or_else(|| Error::InvalidEigenvalue(format!("{lambda} is not an e-th root of unity for e = {}", self.e)))?
            as i64;
        let count = |h: i64| self.heights.iter().filter(|(_, x)| *x == h).count() as u64;
        Ok(count(k) + count(self.e - k))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanRow {
    pub eigenvalue: RootOfUnity,
    pub size_n: u64,
    pub size_n_minus_1: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct JordanReport {
    pub n: usize,
    pub interior_vertices: Vec<InteriorVertex>,
    pub interior_edges: Vec<InteriorEdge>,
    pub rows: Vec<JordanRow>,
    pub excluded: EigenvalueSet,
    /// Eigenvalues where `k = e_i - k` for a contributing edge, so the two
    /// height counts of `n(λ)_i` coincide and are both added.
    pub coincident: Vec<RootOfUnity>,
}

impl JordanReport {
    pub fn row(&self, lambda: &RootOfUnity) -> Option<&JordanRow> {
        self.rows.iter().find(|r| r.eigenvalue == *lambda)
    }
}

/// `Cone∞(f)`.
pub fn cone_infinity(nw: &NewtonAtInfinity) -> Result<Cone> {
    nw.cone_infinity()
}

fn midpoint(a: &[i64], b: &[i64]) -> Vec<Rational> {
    a.iter().zip(b).map(|(&x, &y)| Ratio::new((x + y) as i128, 2)).collect()
}

pub fn interior_vertices(nw: &NewtonAtInfinity) -> Result<Vec<InteriorVertex>> {
    let cone = nw.cone_infinity()?;
    Ok(nw
        .faces_at_infinity()
        .filter(|f| f.dim == 0 && cone.contains_in_interior(&point(&f.vertices[0])))
        .map(|f| InteriorVertex { face: f.id, point: f.vertices[0].clone(), d: content(&f.vertices[0]) })
        .collect())
}

pub fn interior_edges(nw: &NewtonAtInfinity) -> Result<Vec<InteriorEdge>> {
    let cone = nw.cone_infinity()?;
    nw.faces_at_infinity()
        .filter(|f| f.dim == 1 && cone.contains_in_interior(&midpoint(&f.vertices[0], &f.vertices[1])))
        .map(|f| InteriorEdge::from_segment(f.id, &f.vertices[0], &f.vertices[1]))
        .collect()
}

/// `n(λ)_i` for an edge given by its endpoints.
pub fn n_lambda(edge: &[Vec<i64>; 2], lambda: &RootOfUnity) -> Result<u64> {
    InteriorEdge::from_segment(0, &edge[0], &edge[1])?.n_lambda(lambda)
}

pub fn jordan_table(nw: &NewtonAtInfinity) -> Result<JordanReport> {
    let excluded = nw.atypical_eigenvalues()?;
    let verts = interior_vertices(nw)?;
    let edges = interior_edges(nw)?;

    let mut orders = BTreeSet::new();
    for m in verts.iter().map(|v| v.d).chain(edges.iter().map(|e| e.e)) {
        orders.extend(divisors(m as u64).into_iter().filter(|&d| d > 1));
    }
    let mut rows = Vec::new();
    let mut coincident = Vec::new();
    for &d in &orders {
        for lambda in RootOfUnity::primitive(d) {
            if excluded.contains(&lambda) {
                continue;
            }
            let size_n = verts.iter().filter(|v| lambda.is_root_of(v.d as u64)).count() as u64;
            let mut size_n_minus_1 = 0;
            for e in edges.iter().filter(|e| lambda.is_root_of(e.e as u64)) {
                size_n_minus_1 += e.n_lambda(&lambda)?;
                if d == 2 && !coincident.contains(&lambda) {
                    coincident.push(lambda);
                }
            }
            rows.push(JordanRow { eigenvalue: lambda, size_n, size_n_minus_1 });
        }
    }
    Ok(JordanReport { n: nw.ambient_dim(), interior_vertices: verts, interior_edges: edges, rows, excluded, coincident })
}
