//! Lattice invariants of faces: lattice distance from the origin, lattice
//! heights and normalized volumes.

use super::intlin::{det, int_coords, integer_kernel, saturated_basis, to_i128, to_i64};
use super::polytope::{FaceId, Polytope};
use crate::error::{Error, Result};

/// Lattice distance of a face `γ` from the origin, with the data needed to
/// evaluate heights inside `Δ_γ = conv({0} ∪ γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeDistance {
    /// `d_γ > 0`.
    pub d: i64,
    /// HNF basis of `M_γ = Z^n ∩ span(Δ_γ)`.
    pub basis: Vec<Vec<i64>>,
    /// The primitive functional `u_γ`, in coordinates of `basis`.
    pub functional: Vec<i64>,
}

impl LatticeDistance {
    /// Value of `u_γ` at a point of `M_γ`.
    pub fn evaluate(&self, v: &[i64]) -> Result<i64> {
        let basis: Vec<Vec<i128>> = self.basis.iter().map(|b| to_i128(b)).collect();
        let c = int_coords(&basis, &to_i128(v)).ok_or(Error::NotInLattice)?;
        Ok(c.iter().zip(&self.functional).map(|(x, &u)| x * u as i128).sum::<i128>() as i64)
    }

    /// `ht(v, γ) = d_γ - ⟨u_γ, v⟩`; zero on the affine span of `γ`, `d_γ` at 0.
    pub fn height(&self, v: &[i64]) -> Result<i64> {
        Ok(self.d - self.evaluate(v)?)
    }
}

/// Lattice distance of the face spanned by `points` (its vertices).
pub fn lattice_distance(points: &[Vec<i64>]) -> Result<LatticeDistance> {
    if points.is_empty() {
        return Err(Error::EmptyFace);
    }
    if points.iter().any(|p| p.iter().all(|&x| x == 0)) {
        return Err(Error::OriginInFace);
    }
    let n = points[0].len();
    let pts: Vec<Vec<i128>> = points.iter().map(|p| to_i128(p)).collect();
    let basis = saturated_basis(&pts, n);
    let k = basis.len();
    let coords: Vec<Vec<i128>> = pts
        .iter()
        .map(|p| int_coords(&basis, p).expect("points lie in their own saturated span"))
        .collect();
    let diffs: Vec<Vec<i128>> = coords[1..]
        .iter()
        .map(|c| c.iter().zip(&coords[0]).map(|(a, b)| a - b).collect())
        .collect();
    let kernel = integer_kernel(&diffs, k);
    // One-dimensional exactly when 0 is off the affine span of γ.
    let functional = match kernel.as_slice() {
        [u] => u.clone(),
        _ => return Err(Error::OriginInFace),
    };
    let value: i128 = functional.iter().zip(&coords[0]).map(|(a, b)| a * b).sum();
    let (functional, d) = match value {
        0 => return Err(Error::OriginInFace),
        v if v < 0 => (functional.iter().map(|x| -x).collect::<Vec<_>>(), -v),
        v => (functional, v),
    };
    Ok(LatticeDistance {
        d: d as i64,
        basis: basis.iter().map(|b| to_i64(b)).collect(),
        functional: to_i64(&functional),
    })
}

impl Polytope {
    /// `d_γ` for a bounded lattice face not containing the origin.
    pub fn lattice_distance(&self, id: FaceId) -> Result<LatticeDistance> {
        let face = self.face(id);
        if !face.is_bounded() {
            return Err(Error::Unbounded);
        }
        if face.contains_origin {
            return Err(Error::OriginInFace);
        }
        lattice_distance(&self.face_points(id)?)
    }

    /// `Vol_Z(γ)`: `dim γ!` times the Euclidean volume measured in the
    /// lattice `L(γ) ∩ Z^n`; 1 for vertices.
    pub fn normalized_volume(&self, id: FaceId) -> Result<u64> {
        let face = self.face(id);
        if !face.is_bounded() {
            return Err(Error::Unbounded);
        }
        let lv = self.lattice_vertices().ok_or(Error::NotLattice)?;
        if face.dim == 0 {
            return Ok(1);
        }
        let mut total: u64 = 0;
        for simplex in self.triangulate(id) {
            let base = &lv[simplex[0]];
            let m: Vec<Vec<i128>> = simplex[1..]
                .iter()
                .map(|&v| self.face_coords(id, base, &lv[v]).expect("simplex vertices lie on the face"))
                .collect();
            total += det(&m).unsigned_abs() as u64;
        }
        Ok(total)
    }

    /// Pulling triangulation of a bounded face: cone from its first vertex
    /// over the triangulated subfaces that miss it.
    pub fn triangulate(&self, id: FaceId) -> Vec<Vec<usize>> {
        let face = self.face(id);
        if face.dim == 0 {
            return vec![face.vertex_ids.clone()];
        }
        let apex = face.vertex_ids[0];
        let mut out = Vec::new();
        for &sub in &face.subfaces {
            if self.face(sub).vertex_ids.contains(&apex) {
                continue;
            }
            for mut s in self.triangulate(sub) {
                s.insert(0, apex);
                out.push(s);
            }
        }
        out
    }
}
