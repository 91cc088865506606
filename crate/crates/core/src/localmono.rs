//! Local Newton polyhedra at the points of a fiber `f⁻¹(b)`, their slices by
//! the divisor `D = {y_n = 0}`, and the atypical set `A°_{f,b}`.
//!
//! The points and local equations are supplied by the caller as a
//! [`LocalScene`]; nothing here searches for singular points.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::latgeo::{convex_hull_int, lattice_distance, FaceId, Polytope};
use crate::nondeg::{check_faces, NondegConfig, NondegStatus};
use crate::poly::Polynomial;
use crate::roots::EigenvalueSet;

/// Local equations at interior points and at points on `D`.
#[derive(Clone, Debug)]
pub struct LocalScene {
    pub n: usize,
    pub interior: Vec<Polynomial>,
    pub boundary: Vec<Polynomial>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    n: usize,
    #[serde(default)]
    interior: Vec<String>,
    #[serde(default)]
    boundary: Vec<String>,
}

impl LocalScene {
    pub fn new(n: usize, interior: Vec<Polynomial>, boundary: Vec<Polynomial>) -> Result<LocalScene> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        for p in interior.iter().chain(&boundary) {
            if p.ambient_dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.ambient_dim() });
            }
            if p.is_laurent() || p.support().iter().flatten().any(|&e| e < 0) {
                return Err(Error::LaurentNotAllowed);
            }
            if p.is_zero() {
                return Err(Error::EmptyPolynomial);
            }
            if p.constant_term().is_some() {
                return Err(Error::ConstantTerm);
            }
        }
        Ok(LocalScene { n, interior, boundary })
    }

    /// Reads `{"n": int, "interior": [poly], "boundary": [poly]}`.
    pub fn from_json(text: &str) -> Result<LocalScene> {
        let raw: RawScene = serde_json::from_str(text).map_err(|e| Error::Scene(e.to_string()))?;
        let parse = |role: &str, list: &[String]| -> Result<Vec<Polynomial>> {
            list.iter()
                .enumerate()
                .map(|(i, s)| Polynomial::parse(s, raw.n, false).map_err(|e| Error::Scene(format!("{role}[{i}]: {e}"))))
                .collect()
        };
        let interior = parse("interior", &raw.interior)?;
        let boundary = parse("boundary", &raw.boundary)?;
        LocalScene::new(raw.n, interior, boundary)
    }
}

fn unit_rays(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect()
}

/// `Γ₊(f) = conv(supp f) + ℝⁿ₊`.
pub fn gamma_plus(poly: &Polynomial) -> Result<Polytope> {
    if poly.is_zero() {
        return Err(Error::EmptyPolynomial);
    }
    if poly.constant_term().is_some() {
        return Err(Error::ConstantTerm);
    }
    if poly.is_laurent() || poly.support().iter().flatten().any(|&e| e < 0) {
        return Err(Error::LaurentNotAllowed);
    }
    convex_hull_int(&poly.support(), &unit_rays(poly.ambient_dim()))
}

/// `Γ₊°(f) = Γ₊(f) ∩ {v_n = 0}` as a polyhedron in `ℝ^{n-1}`; `None` when
/// the slice is empty.
pub fn gamma_plus_circ(gp: &Polytope) -> Result<Option<Polytope>> {
    let n = gp.ambient_dim();
    if n < 2 {
        return Ok(None);
    }
    let mut en = vec![0; n];
    en[n - 1] = 1;
    let id = gp.supporting_face(&en)?;
    let pts = gp.face_points(id)?;
    if pts[0][n - 1] > 0 {
        return Ok(None);
    }
    let sliced: Vec<Vec<i64>> = pts.iter().map(|p| p[..n - 1].to_vec()).collect();
    Ok(Some(convex_hull_int(&sliced, &unit_rays(n - 1))?))
}

/// Bounded faces of a polyhedron, read off the face lattice.
pub fn compact_faces(p: &Polytope) -> Vec<FaceId> {
    (0..p.faces().len()).filter(|&i| p.face(i).is_bounded()).collect()
}

/// Bounded faces, found instead through normal cones: the faces supported by
/// a strictly positive functional. Requires a full-dimensional polyhedron
/// with recession cone `ℝⁿ₊`.
pub fn compact_faces_by_functional(p: &Polytope) -> Result<Vec<FaceId>> {
    let mut out = Vec::new();
    for i in 0..p.faces().len() {
        let cone = p.normal_cone(i)?;
        let n = p.ambient_dim();
        let sum: Vec<i64> = (0..n).map(|j| cone.generators.iter().map(|g| g[j]).sum()).collect();
        if sum.iter().all(|&x| x > 0) {
            out.push(i);
        }
    }
    Ok(out)
}

/// Lattice distances `d_γ` of the compact faces of `Γ₊°(f)`.
pub fn slice_orders(poly: &Polynomial) -> Result<Vec<u64>> {
    let Some(slice) = gamma_plus_circ(&gamma_plus(poly)?)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for id in compact_faces(&slice) {
        out.push(lattice_distance(&slice.face_points(id)?)?.d as u64);
    }
    Ok(out)
}

/// `A°_{f,b}`: `{1}` and every `λ` with `λ^{d_γ} = 1` for a compact face `γ`
/// of a boundary slice.
pub fn atypical_eigenvalues_local(scene: &LocalScene) -> Result<EigenvalueSet> {
    let mut a = EigenvalueSet::with_one();
    for p in &scene.boundary {
        for d in slice_orders(p)? {
            a.insert_order(d);
        }
    }
    Ok(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Interior,
    Boundary,
}

impl std::fmt::Display for Role {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Role::Interior => "interior",
            Role::Boundary => "boundary",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalDiagnostic {
    pub role: Role,
    pub index: usize,
    pub poly: String,
    pub convenient: bool,
    pub nondegeneracy: NondegStatus,
}

/// A monomial `y_i^k` for every axis.
pub fn is_locally_convenient(poly: &Polynomial) -> bool {
    let n = poly.ambient_dim();
    (0..n).all(|i| poly.support().iter().any(|v| v[i] > 0 && (0..n).all(|j| j == i || v[j] == 0)))
}

/// Convenience and non-degeneracy on the compact faces of `Γ₊`, for every
/// polynomial of the scene. Advisory only.
pub fn check_local_hypotheses(scene: &LocalScene, cfg: &NondegConfig) -> Result<Vec<LocalDiagnostic>> {
    let tagged = scene
        .interior
        .iter()
        .enumerate()
        .map(|(i, p)| (Role::Interior, i, p))
        .chain(scene.boundary.iter().enumerate().map(|(i, p)| (Role::Boundary, i, p)));
    let mut out = Vec::new();
    for (role, index, p) in tagged {
        let gp = gamma_plus(p)?;
        out.push(LocalDiagnostic {
            role,
            index,
            poly: p.to_string(),
            convenient: is_locally_convenient(p),
            nondegeneracy: check_faces(p, &gp, &compact_faces(&gp), cfg)?,
        });
    }
    Ok(out)
}
