//! The Newton polyhedron at infinity `Γ∞(f) = conv({0} ∪ supp f)` and the
//! classification of its faces.
//!
//! A face is *at infinity* when it misses the origin. A face through the
//! origin is *atypical* when its normal cone leaves the closed positive
//! orthant, and a face at infinity is *admissible* when no atypical face
//! contains it. Everything is computed once, at construction.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::latgeo::{content, convex_hull_int, Cone, FaceId, Polytope};
use crate::poly::Polynomial;
use crate::roots::EigenvalueSet;

/// Classification data attached to one face of `Γ∞(f)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceInfo {
    pub id: FaceId,
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
    pub at_infinity: bool,
    pub atypical: bool,
    pub admissible: bool,
    /// `s_γ`: number of coordinates not identically zero on the face.
    pub s: usize,
    /// `m_γ = s_γ - dim γ - 1`; only meaningful at infinity.
    pub m: i64,
    /// Lattice distance from the origin, for faces at infinity.
    pub d: Option<i64>,
    /// Normalized volume.
    pub vol: u64,
}

#[derive(Clone, Debug)]
pub struct NewtonAtInfinity {
    poly: Polynomial,
    polytope: Polytope,
    convenient: bool,
    faces: Vec<FaceInfo>,
    fan: Option<Vec<Cone>>,
}

/// Outcome of the coordinate-slice check on one non-atypical face through 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceCheck {
    pub face: FaceId,
    pub vertices: Vec<Vec<i64>>,
    pub support: Vec<usize>,
    pub dim: usize,
    pub facet_normals: Vec<Vec<i64>>,
    pub passed: bool,
}

/// Builds `Γ∞(f)` for an ordinary polynomial.
pub fn gamma_infinity(poly: &Polynomial) -> Result<NewtonAtInfinity> {
    NewtonAtInfinity::new(poly)
}

/// `s_γ` of a point set: coordinates that are nonzero at some point.
pub fn coordinate_support(points: &[Vec<i64>]) -> Vec<usize> {
    let n = points.first().map_or(0, |p| p.len());
    (0..n).filter(|&i| points.iter().any(|p| p[i] != 0)).collect()
}

impl NewtonAtInfinity {
    pub fn new(poly: &Polynomial) -> Result<NewtonAtInfinity> {
        if poly.is_zero() {
            return Err(Error::EmptyPolynomial);
        }
        let support = poly.support();
        if support.iter().flatten().any(|&x| x < 0) {
            return Err(Error::LaurentNotAllowed);
        }
        let n = poly.ambient_dim();
        let mut points = vec![vec![0i64; n]];
        points.extend(support.iter().cloned());
        let polytope = convex_hull_int(&points, &[])?;
        let convenient = (0..n).all(|i| {
            support.iter().any(|v| v[i] > 0 && v.iter().enumerate().all(|(j, &x)| j == i || x == 0))
        });

        let fan = if polytope.is_full_dimensional() { Some(polytope.normal_fan()?) } else { None };
        let mut faces = Vec::with_capacity(polytope.faces().len());
        for (id, face) in polytope.faces().iter().enumerate() {
            let vertices = polytope.face_points(id)?;
            let at_infinity = !face.contains_origin;
            let s = coordinate_support(&vertices).len();
            let atypical = match &fan {
                Some(cones) => face.contains_origin && !cones[id].in_positive_orthant(),
                None => false,
            };
            let d = if at_infinity { Some(polytope.lattice_distance(id)?.d) } else { None };
            faces.push(FaceInfo {
                id,
                dim: face.dim,
                vertices,
                at_infinity,
                atypical,
                admissible: false,
                s,
                m: s as i64 - face.dim as i64 - 1,
                d,
                vol: polytope.normalized_volume(id)?,
            });
        }
        if fan.is_some() {
            let atypical: Vec<FaceId> = faces.iter().filter(|f| f.atypical).map(|f| f.id).collect();
            for f in faces.iter_mut() {
                f.admissible = f.at_infinity && !atypical.iter().any(|&a| polytope.face_contains(a, f.id));
            }
        }
        Ok(NewtonAtInfinity { poly: poly.clone(), polytope, convenient, faces, fan })
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn ambient_dim(&self) -> usize {
        self.polytope.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.fan.is_some()
    }

    /// `Γ∞(f)` meets the open positive part of every coordinate axis.
    pub fn is_convenient(&self) -> bool {
        self.convenient
    }

    pub fn faces(&self) -> &[FaceInfo] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &FaceInfo {
        &self.faces[id]
    }

    pub fn find_face(&self, vertices: &[Vec<i64>]) -> Option<&FaceInfo> {
        self.polytope.find_face_by_points(vertices).map(|id| &self.faces[id])
    }

    fn require_full(&self) -> Result<&[Cone]> {
        self.fan.as_deref().ok_or(Error::NotFullDimensional {
            dim: self.polytope.dim(),
            ambient: self.polytope.ambient_dim(),
        })
    }

    /// The dual fan, indexed like the faces.
    pub fn normal_fan(&self) -> Result<&[Cone]> {
        self.require_full()
    }

    pub fn faces_at_infinity(&self) -> impl Iterator<Item = &FaceInfo> {
        self.faces.iter().filter(|f| f.at_infinity)
    }

    pub fn atypical_faces(&self) -> Result<Vec<&FaceInfo>> {
        self.require_full()?;
        Ok(self.faces.iter().filter(|f| f.atypical).collect())
    }

    pub fn admissible_faces(&self) -> Result<Vec<&FaceInfo>> {
        self.require_full()?;
        Ok(self.faces.iter().filter(|f| f.admissible).collect())
    }

    /// Atypicality read off the facets through the face: some facet
    /// containing it has an inner normal outside the positive orthant.
    pub fn atypical_by_facets(&self, id: FaceId) -> Result<bool> {
        self.require_full()?;
        let face = self.polytope.face(id);
        Ok(face.contains_origin
            && face
                .facet_ids
                .iter()
                .any(|&j| self.polytope.facets()[j].normal.iter().any(|&x| x < 0)))
    }

    /// `(s_γ, m_γ)` for a face at infinity.
    pub fn s_and_m(&self, id: FaceId) -> Result<(usize, i64)> {
        let f = &self.faces[id];
        if !f.at_infinity {
            return Err(Error::OriginInFace);
        }
        Ok((f.s, f.m))
    }

    /// `A_f`: `1` together with the lattice distances of non-admissible
    /// faces at infinity.
    pub fn atypical_eigenvalues(&self) -> Result<EigenvalueSet> {
        self.require_full()?;
        let mut set = EigenvalueSet::with_one();
        for f in self.faces_at_infinity().filter(|f| !f.admissible) {
            set.insert_order(f.d.expect("faces at infinity carry d") as u64);
        }
        Ok(set)
    }

    /// For every non-atypical face `γ ∋ 0` with minimal coordinate subspace
    /// `R^S`: `dim γ = |S|`, and the facets through `γ` are exactly the
    /// coordinate slices `{v_i = 0}`, `i ∉ S`.
    pub fn verify_coordinate_slices(&self) -> Result<Vec<SliceCheck>> {
        self.require_full()?;
        let n = self.ambient_dim();
        let mut out = Vec::new();
        for f in self.faces.iter().filter(|f| !f.at_infinity && !f.atypical) {
            let support = coordinate_support(&f.vertices);
            let mut normals: Vec<Vec<i64>> = self
                .polytope
                .face(f.id)
                .facet_ids
                .iter()
                .map(|&j| self.polytope.facets()[j].normal.clone())
                .collect();
            normals.sort();
            let mut expected: Vec<Vec<i64>> = (0..n)
                .filter(|i| !support.contains(i))
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect();
            expected.sort();
            let passed = f.dim == support.len() && normals == expected;
            out.push(SliceCheck {
                face: f.id,
                vertices: f.vertices.clone(),
                support,
                dim: f.dim,
                facet_normals: normals,
                passed,
            });
        }
        Ok(out)
    }

    /// Shape of the normal cone of a face at infinity: every extreme ray is
    /// either `e_i` with `i ∉ S`, or lies outside the positive orthant and
    /// is negative somewhere on `Γ∞`; and every such `e_i` belongs to the
    /// cone. Holds exactly for admissible faces.
    pub fn normal_cone_has_admissible_shape(&self, id: FaceId) -> Result<bool> {
        let fan = self.require_full()?;
        let f = &self.faces[id];
        if !f.at_infinity {
            return Err(Error::OriginInFace);
        }
        let n = self.ambient_dim();
        let support = coordinate_support(&f.vertices);
        let unit = |i: usize| -> Vec<i64> { (0..n).map(|j| i64::from(i == j)).collect() };
        let cone = &fan[id];
        let lattice = self.polytope.lattice_vertices().expect("Γ∞ has integral vertices");
        let rays_ok = cone.generators.iter().all(|g| {
            if let Some(i) = (0..n).find(|&i| *g == unit(i)) {
                return !support.contains(&i);
            }
            let outside = g.iter().any(|&x| x < 0);
            let min = lattice.iter().map(|v| v.iter().zip(g).map(|(a, b)| a * b).sum::<i64>()).min().unwrap_or(0);
            outside && min < 0
        });
        let units_in = (0..n)
            .filter(|i| !support.contains(i))
            .all(|i| cone.contains(&crate::latgeo::point(&unit(i))));
        Ok(rays_ok && units_in)
    }

    /// `Cone∞(f)`: the cone over `Γ∞(f)`.
    pub fn cone_infinity(&self) -> Result<Cone> {
        self.require_full()?;
        let gens: Vec<Vec<i64>> = self.polytope.lattice_vertices().expect("integral").to_vec();
        Ok(Cone::from_generators(&gens, self.ambient_dim()))
    }

    /// Largest `m` with `Γ∞(f) = m·P` for a lattice polytope `P`: the gcd of
    /// all vertex coordinates.
    pub fn dilation_factor(&self) -> i64 {
        let lv = self.polytope.lattice_vertices().expect("integral");
        let all: Vec<i64> = lv.iter().flatten().copied().collect();
        content(&all)
    }
}
