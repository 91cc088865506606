//! Exact convex polyhedra: V- and H-representations, the face lattice,
//! normal cones and lattice-point enumeration.
//!
//! A polyhedron is `conv(vertices) + cone(rays)`. Every instance is pointed
//! and carries its full face lattice, computed once at construction.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::dd;
use super::intlin::{
    clear_denominators, dot, gcd_all, int_coords, primitive, project_out, rank, rat_vec, rref_primitive,
    saturated_basis, to_i128, to_i64, Rat,
};
use crate::error::{Error, Result};

pub type Rational = Rat;

/// Largest ambient dimension accepted by [`convex_hull`].
pub const MAX_DIM: usize = 8;

/// Index of a face inside [`Polytope::faces`].
pub type FaceId = usize;

/// `normal · x >= offset`, with `normal` a primitive integer vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: Rational,
}

/// `normal · x == offset`; together the equations cut out the affine hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub normal: Vec<i64>,
    pub offset: Rational,
}

/// A nonempty face of a [`Polytope`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    /// Indices into [`Polytope::vertices`], ascending.
    pub vertex_ids: Vec<usize>,
    /// Indices into [`Polytope::rays`]; nonempty exactly for unbounded faces.
    pub ray_ids: Vec<usize>,
    /// Facets of the polytope containing this face.
    pub facet_ids: Vec<usize>,
    /// HNF lattice basis of the direction space of the face intersected with `Z^n`.
    pub span_basis: Vec<Vec<i64>>,
    pub contains_origin: bool,
    /// Faces of dimension `dim - 1` contained in this one.
    pub subfaces: Vec<FaceId>,
}

impl Face {
    pub fn is_bounded(&self) -> bool {
        self.ray_ids.is_empty()
    }
}

/// A pointed rational polyhedron together with its face lattice.
#[derive(Clone, Debug)]
pub struct Polytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<Vec<Rational>>,
    int_vertices: Option<Vec<Vec<i64>>>,
    rays: Vec<Vec<i64>>,
    facets: Vec<Facet>,
    equations: Vec<Equation>,
    faces: Vec<Face>,
}

/// A rational polyhedral cone given by primitive generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub generators: Vec<Vec<i64>>,
    pub dim: usize,
    /// Inner normals `a` with `a · x >= 0` on the cone, projected into its span.
    pub facets: Vec<Vec<i64>>,
    /// Equations `e · x = 0` cutting out the linear span.
    pub equations: Vec<Vec<i64>>,
}

impl Cone {
    /// The cone generated by `gens` in `R^n`, assumed pointed.
    pub fn from_generators(gens: &[Vec<i64>], n: usize) -> Cone {
        let rows: Vec<Vec<i128>> = gens
            .iter()
            .map(|g| to_i128(g))
            .filter(|g| g.iter().any(|&x| x != 0))
            .collect();
        if rows.is_empty() {
            return Cone {
                generators: Vec::new(),
                dim: 0,
                facets: Vec::new(),
                equations: (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect(),
            };
        }
        let dual = dd::generators(&rows, n);
        let eqs: Vec<Vec<i128>> = rref_primitive(&dual.lineality.iter().map(|l| rat_vec(l)).collect::<Vec<_>>());
        let mut facets: Vec<Vec<i128>> = dual
            .rays
            .iter()
            .map(|a| clear_denominators(&project_out(&rat_vec(a), &eqs)))
            .filter(|a| a.iter().any(|&x| x != 0))
            .collect();
        facets.sort();
        facets.dedup();
        let mut extreme: Vec<Vec<i128>> = Vec::new();
        for g in &rows {
            let mut g = g.clone();
            primitive(&mut g);
            if extreme.contains(&g) {
                continue;
            }
            let mut tight: Vec<Vec<i128>> = eqs.clone();
            tight.extend(facets.iter().filter(|a| dot(a, &g) == 0).cloned());
            if rank(&tight) + 1 == n {
                extreme.push(g);
            }
        }
        extreme.sort();
        Cone {
            generators: extreme.iter().map(|g| to_i64(g)).collect(),
            dim: n - eqs.len(),
            facets: facets.iter().map(|a| to_i64(a)).collect(),
            equations: eqs.iter().map(|e| to_i64(e)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.equations
            .first()
            .or(self.facets.first())
            .or(self.generators.first())
            .map_or(0, |v| v.len())
    }

    /// Every generator lies in the closed positive orthant.
    pub fn in_positive_orthant(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|&x| x >= 0))
    }

    /// Strict membership in the interior; false for lower-dimensional cones.
    pub fn contains_in_interior(&self, x: &[Rational]) -> bool {
        if !self.equations.is_empty() {
            return false;
        }
        self.facets.iter().all(|a| {
            let s: Rational = a.iter().zip(x).map(|(&ai, xi)| Rat::from_integer(ai as i128) * xi).sum();
            s.is_positive()
        })
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        let eval = |a: &Vec<i64>| -> Rational { a.iter().zip(x).map(|(&ai, xi)| Rat::from_integer(ai as i128) * xi).sum() };
        self.equations.iter().all(|e| eval(e).is_zero()) && self.facets.iter().all(|a| !eval(a).is_negative())
    }
}

fn rat_point(p: &[i64]) -> Vec<Rational> {
    p.iter().map(|&x| Rat::from_integer(x as i128)).collect()
}

fn eval(normal: &[i64], x: &[Rational]) -> Rational {
    normal.iter().zip(x).map(|(&a, b)| Rat::from_integer(a as i128) * b).sum()
}

fn eval_int(normal: &[i64], x: &[i64]) -> i128 {
    normal.iter().zip(x).map(|(&a, &b)| a as i128 * b as i128).sum()
}

/// Convex hull of integer points plus the cone over `rays`.
pub fn convex_hull_int(points: &[Vec<i64>], rays: &[Vec<i64>]) -> Result<Polytope> {
    let pts: Vec<Vec<Rational>> = points.iter().map(|p| rat_point(p)).collect();
    convex_hull(&pts, rays)
}

/// Convex hull of rational points plus the cone over `rays`.
///
/// Vertices come out sorted lexicographically, facets by `(normal, offset)`.
pub fn convex_hull(points: &[Vec<Rational>], rays: &[Vec<i64>]) -> Result<Polytope> {
    let Some(first) = points.first() else {
        return Err(Error::EmptyInput);
    };
    let n = first.len();
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if n > MAX_DIM {
        return Err(Error::DimensionCap { dim: n, cap: MAX_DIM });
    }
    for v in points.iter().map(|p| p.len()).chain(rays.iter().map(|r| r.len())) {
        if v != n {
            return Err(Error::DimensionMismatch { expected: n, found: v });
        }
    }

    let mut pts: Vec<Vec<Rational>> = points.to_vec();
    pts.sort();
    pts.dedup();
    let mut dirs: Vec<Vec<i64>> = rays
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| {
            let mut v = to_i128(r);
            primitive(&mut v);
            to_i64(&v)
        })
        .collect();
    dirs.sort();
    dirs.dedup();

    // Homogenize: (1, p) for points, (0, r) for rays.
    let mut rows: Vec<Vec<i128>> = Vec::with_capacity(pts.len() + dirs.len());
    for p in &pts {
        let mut h = vec![Rat::from_integer(1)];
        h.extend(p.iter().cloned());
        rows.push(clear_denominators(&h));
    }
    for r in &dirs {
        let mut h = vec![0i128];
        h.extend(to_i128(r));
        rows.push(h);
    }
    let dual = dd::generators(&rows, n + 1);

    // Equations a'·x = -a0 from the lineality of the dual cone.
    let eq_rows: Vec<Vec<Rational>> = dual
        .lineality
        .iter()
        .map(|l| {
            let mut row: Vec<Rational> = l[1..].iter().map(|&x| Rat::from_integer(x)).collect();
            row.push(Rat::from_integer(-l[0]));
            row
        })
        .collect();
    let eqs_full = rref_primitive(&eq_rows);
    let eq_normals: Vec<Vec<i128>> = eqs_full.iter().map(|e| e[..n].to_vec()).collect();
    let equations: Vec<Equation> = eqs_full
        .iter()
        .map(|e| {
            // Re-derive the offset from a point so the row stays exact after scaling.
            let normal = to_i64(&e[..n]);
            let offset = eval(&normal, &pts[0]);
            Equation { normal, offset }
        })
        .collect();

    let mut facets: Vec<Facet> = Vec::new();
    for a in &dual.rays {
        let proj = clear_denominators(&project_out(&rat_vec(&a[1..]), &eq_normals));
        if proj.iter().all(|&x| x == 0) {
            continue;
        }
        let normal = to_i64(&proj);
        let offset = pts.iter().map(|p| eval(&normal, p)).min().expect("nonempty");
        facets.push(Facet { normal, offset });
    }
    facets.sort();
    facets.dedup();

    let mut all_normals: Vec<Vec<i128>> = eq_normals.clone();
    all_normals.extend(facets.iter().map(|f| to_i128(&f.normal)));
    if rank(&all_normals) < n {
        return Err(Error::NotPointed);
    }

    let vertices: Vec<Vec<Rational>> = pts
        .into_iter()
        .filter(|p| {
            let mut tight = eq_normals.clone();
            tight.extend(facets.iter().filter(|f| eval(&f.normal, p) == f.offset).map(|f| to_i128(&f.normal)));
            rank(&tight) == n
        })
        .collect();
    let extreme_rays: Vec<Vec<i64>> = dirs
        .into_iter()
        .filter(|r| {
            let mut tight = eq_normals.clone();
            tight.extend(facets.iter().filter(|f| eval_int(&f.normal, r) == 0).map(|f| to_i128(&f.normal)));
            rank(&tight) + 1 == n
        })
        .collect();

    let int_vertices = vertices
        .iter()
        .map(|v| v.iter().map(|x| x.is_integer().then(|| x.to_integer() as i64)).collect::<Option<Vec<i64>>>())
        .collect::<Option<Vec<_>>>();

    let mut poly = Polytope {
        ambient_dim: n,
        dim: n - eq_normals.len(),
        vertices,
        int_vertices,
        rays: extreme_rays,
        facets,
        equations,
        faces: Vec::new(),
    };
    poly.faces = poly.enumerate_faces();
    Ok(poly)
}

impl Polytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    /// Integer vertices, if every vertex is a lattice point.
    pub fn lattice_vertices(&self) -> Option<&[Vec<i64>]> {
        self.int_vertices.as_deref()
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    /// Every nonempty face including the polytope itself, sorted by
    /// `(dim, vertex_ids, ray_ids)`.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id]
    }

    /// Id of the improper face (the polytope itself).
    pub fn top_face(&self) -> FaceId {
        self.faces.len() - 1
    }

    pub fn faces_of_dim(&self, d: usize) -> impl Iterator<Item = FaceId> + '_ {
        self.faces.iter().enumerate().filter(move |(_, f)| f.dim == d).map(|(i, _)| i)
    }

    /// Finds the face with exactly these vertices and rays.
    pub fn find_face(&self, vertex_ids: &[usize], ray_ids: &[usize]) -> Option<FaceId> {
        self.faces
            .iter()
            .position(|f| f.vertex_ids == vertex_ids && f.ray_ids == ray_ids)
    }

    /// Finds a bounded face by its vertex coordinates.
    pub fn find_face_by_points(&self, points: &[Vec<i64>]) -> Option<FaceId> {
        let mut ids = Vec::new();
        for p in points {
            let rp = rat_point(p);
            ids.push(self.vertices.iter().position(|v| *v == rp)?);
        }
        ids.sort();
        ids.dedup();
        self.find_face(&ids, &[])
    }

    /// True when `a` is a subset of `b` in the face lattice.
    pub fn face_contains(&self, outer: FaceId, inner: FaceId) -> bool {
        let (o, i) = (&self.faces[outer], &self.faces[inner]);
        i.vertex_ids.iter().all(|v| o.vertex_ids.contains(v)) && i.ray_ids.iter().all(|r| o.ray_ids.contains(r))
    }

    /// Integer vertex coordinates of a face; `NotLattice` otherwise.
    pub fn face_points(&self, id: FaceId) -> Result<Vec<Vec<i64>>> {
        let lv = self.int_vertices.as_ref().ok_or(Error::NotLattice)?;
        Ok(self.faces[id].vertex_ids.iter().map(|&v| lv[v].clone()).collect())
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        self.equations.iter().all(|e| eval(&e.normal, x) == e.offset)
            && self.facets.iter().all(|f| eval(&f.normal, x) >= f.offset)
    }

    /// Membership in the relative interior.
    pub fn contains_in_relative_interior(&self, x: &[Rational]) -> bool {
        self.equations.iter().all(|e| eval(&e.normal, x) == e.offset)
            && self.facets.iter().all(|f| eval(&f.normal, x) > f.offset)
    }

    /// Whether `x` lies in the face (on every facet containing it).
    pub fn face_contains_point(&self, id: FaceId, x: &[Rational]) -> bool {
        self.contains_point(x)
            && self.faces[id]
                .facet_ids
                .iter()
                .all(|&j| eval(&self.facets[j].normal, x) == self.facets[j].offset)
    }

    fn tight_facets(&self, vids: &[usize], rids: &[usize]) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&j| {
                let f = &self.facets[j];
                vids.iter().all(|&v| eval(&f.normal, &self.vertices[v]) == f.offset)
                    && rids.iter().all(|&r| eval_int(&f.normal, &self.rays[r]) == 0)
            })
            .collect()
    }

    fn dim_from_facets(&self, facet_ids: &[usize]) -> usize {
        let mut rows: Vec<Vec<i128>> = self.equations.iter().map(|e| to_i128(&e.normal)).collect();
        rows.extend(facet_ids.iter().map(|&j| to_i128(&self.facets[j].normal)));
        self.ambient_dim - rank(&rows)
    }

    fn direction_vectors(&self, vids: &[usize], rids: &[usize]) -> Vec<Vec<i128>> {
        let mut out = Vec::new();
        if let Some((&v0, rest)) = vids.split_first() {
            for &v in rest {
                let diff: Vec<Rational> = self.vertices[v].iter().zip(&self.vertices[v0]).map(|(a, b)| a - b).collect();
                out.push(clear_denominators(&diff));
            }
        }
        out.extend(rids.iter().map(|&r| to_i128(&self.rays[r])));
        out
    }

    fn make_face(&self, vids: Vec<usize>, rids: Vec<usize>, facet_ids: Vec<usize>, dim: usize) -> Face {
        let span = saturated_basis(&self.direction_vectors(&vids, &rids), self.ambient_dim);
        let origin = vec![Rat::zero(); self.ambient_dim];
        let contains_origin = self.contains_point(&origin)
            && facet_ids.iter().all(|&j| self.facets[j].offset.is_zero());
        Face {
            dim,
            vertex_ids: vids,
            ray_ids: rids,
            facet_ids,
            span_basis: span.iter().map(|b| to_i64(b)).collect(),
            contains_origin,
            subfaces: Vec::new(),
        }
    }

    fn enumerate_faces(&self) -> Vec<Face> {
        type Key = (Vec<usize>, Vec<usize>);
        let top_key: Key = ((0..self.vertices.len()).collect(), (0..self.rays.len()).collect());
        let mut found: BTreeMap<Key, (Vec<usize>, usize)> = BTreeMap::new();
        let mut children: BTreeMap<Key, Vec<Key>> = BTreeMap::new();
        found.insert(top_key.clone(), (Vec::new(), self.dim));
        let mut level = vec![top_key];
        let mut d = self.dim;
        while d > 0 && !level.is_empty() {
            let mut next: Vec<Key> = Vec::new();
            for key in &level {
                let facet_ids = found[key].0.clone();
                let mut kids = Vec::new();
                for j in 0..self.facets.len() {
                    if facet_ids.contains(&j) {
                        continue;
                    }
                    let f = &self.facets[j];
                    let vids: Vec<usize> =
                        key.0.iter().copied().filter(|&v| eval(&f.normal, &self.vertices[v]) == f.offset).collect();
                    if vids.is_empty() {
                        continue;
                    }
                    let rids: Vec<usize> =
                        key.1.iter().copied().filter(|&r| eval_int(&f.normal, &self.rays[r]) == 0).collect();
                    let sub: Key = (vids, rids);
                    if kids.contains(&sub) {
                        continue;
                    }
                    if let Some((_, sd)) = found.get(&sub) {
                        if *sd == d - 1 {
                            kids.push(sub);
                        }
                        continue;
                    }
                    let tight = self.tight_facets(&sub.0, &sub.1);
                    let sd = self.dim_from_facets(&tight);
                    if sd == d - 1 {
                        found.insert(sub.clone(), (tight, sd));
                        next.push(sub.clone());
                        kids.push(sub);
                    }
                }
                children.insert(key.clone(), kids);
            }
            level = next;
            d -= 1;
        }

        let mut order: Vec<(usize, Key)> = found.iter().map(|(k, (_, d))| (*d, k.clone())).collect();
        order.sort();
        let index: BTreeMap<Key, usize> = order.iter().enumerate().map(|(i, (_, k))| (k.clone(), i)).collect();
        order
            .into_iter()
            .map(|(dim, key)| {
                let facet_ids = found[&key].0.clone();
                let mut subfaces: Vec<usize> = children
                    .get(&key)
                    .map(|ks| ks.iter().map(|k| index[k]).collect())
                    .unwrap_or_default();
                subfaces.sort();
                let mut face = self.make_face(key.0, key.1, facet_ids, dim);
                face.subfaces = subfaces;
                face
            })
            .collect()
    }

    /// The face on which `⟨u, ·⟩` attains its minimum.
    pub fn supporting_face(&self, u: &[i64]) -> Result<FaceId> {
        if u.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: u.len() });
        }
        if self.rays.iter().any(|r| eval_int(u, r) < 0) {
            return Err(Error::UnboundedDirection);
        }
        let vals: Vec<Rational> = self.vertices.iter().map(|v| eval(u, v)).collect();
        let min = vals.iter().min().cloned().expect("polytope has a vertex");
        let vids: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] == min).collect();
        let rids: Vec<usize> = (0..self.rays.len()).filter(|&r| eval_int(u, &self.rays[r]) == 0).collect();
        self.find_face(&vids, &rids)
            .ok_or_else(|| unreachable_face())
    }

    /// Normal cone `σ(γ)`: the closure of `{u : γ_u = γ}`.
    ///
    /// Computed from the inequalities `⟨u, w - v⟩ >= 0` over all vertices
    /// `w` and rays, with equality along the face.
    pub fn normal_cone(&self, id: FaceId) -> Result<Cone> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional { dim: self.dim, ambient: self.ambient_dim });
        }
        let face = &self.faces[id];
        let v0 = face.vertex_ids[0];
        let diff = |w: usize| -> Vec<i128> {
            let d: Vec<Rational> = self.vertices[w].iter().zip(&self.vertices[v0]).map(|(a, b)| a - b).collect();
            clear_denominators(&d)
        };
        let mut rows: Vec<Vec<i128>> = Vec::new();
        for w in 0..self.vertices.len() {
            if w != v0 {
                rows.push(diff(w));
            }
        }
        rows.extend(self.rays.iter().map(|r| to_i128(r)));
        for &w in &face.vertex_ids[1..] {
            let d = diff(w);
            rows.push(d.iter().map(|x| -x).collect());
        }
        for &r in &face.ray_ids {
            rows.push(self.rays[r].iter().map(|&x| -(x as i128)).collect());
        }
        rows.retain(|r| r.iter().any(|&x| x != 0));
        let gens = dd::generators(&rows, self.ambient_dim);
        debug_assert!(gens.lineality.is_empty(), "normal cones of a full-dimensional polytope are pointed");
        let g: Vec<Vec<i64>> = gens.rays.iter().map(|r| to_i64(r)).collect();
        Ok(Cone::from_generators(&g, self.ambient_dim))
    }

    /// The dual fan: one cone per face, indexed like [`Polytope::faces`].
    pub fn normal_fan(&self) -> Result<Vec<Cone>> {
        (0..self.faces.len()).map(|i| self.normal_cone(i)).collect()
    }

    /// All lattice points of a bounded polytope (or of its relative
    /// interior), in lexicographic order.
    pub fn lattice_points(&self, relative_interior_only: bool) -> Result<Vec<Vec<i64>>> {
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        let keep = |x: &[Rational]| {
            if relative_interior_only {
                self.contains_in_relative_interior(x)
            } else {
                self.contains_point(x)
            }
        };
        let mut out = Vec::new();
        match &self.int_vertices {
            Some(lv) => {
                // Walk the affine lattice p0 + span_basis in its own coordinates.
                let p0 = &lv[0];
                let basis: Vec<Vec<i128>> = self.faces[self.top_face()].span_basis.iter().map(|b| to_i128(b)).collect();
                let coords: Vec<Vec<i128>> = lv
                    .iter()
                    .map(|v| {
                        let d: Vec<i128> = v.iter().zip(p0).map(|(a, b)| (*a - *b) as i128).collect();
                        int_coords(&basis, &d).expect("vertex differences lie in the span lattice")
                    })
                    .collect();
                let k = basis.len();
                let lo: Vec<i128> = (0..k).map(|j| coords.iter().map(|c| c[j]).min().unwrap()).collect();
                let hi: Vec<i128> = (0..k).map(|j| coords.iter().map(|c| c[j]).max().unwrap()).collect();
                let mut c = lo.clone();
                loop {
                    let x: Vec<i64> = (0..self.ambient_dim)
                        .map(|i| p0[i] + (0..k).map(|j| c[j] * basis[j][i] as i128).sum::<i128>() as i64)
                        .collect();
                    if keep(&rat_point(&x)) {
                        out.push(x);
                    }
                    if !odometer(&mut c, &lo, &hi) {
                        break;
                    }
                }
            }
            None => {
                let n = self.ambient_dim;
                let lo: Vec<i128> = (0..n).map(|i| self.vertices.iter().map(|v| v[i].ceil().to_integer()).min().unwrap()).collect();
                let hi: Vec<i128> = (0..n).map(|i| self.vertices.iter().map(|v| v[i].floor().to_integer()).max().unwrap()).collect();
                if lo.iter().zip(&hi).all(|(a, b)| a <= b) {
                    let mut c = lo.clone();
                    loop {
                        let x = to_i64(&c);
                        if keep(&rat_point(&x)) {
                            out.push(x);
                        }
                        if !odometer(&mut c, &lo, &hi) {
                            break;
                        }
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Coordinates of `v - base` in the lattice basis of a face.
    pub(crate) fn face_coords(&self, id: FaceId, base: &[i64], v: &[i64]) -> Option<Vec<i128>> {
        let basis: Vec<Vec<i128>> = self.faces[id].span_basis.iter().map(|b| to_i128(b)).collect();
        let d: Vec<i128> = v.iter().zip(base).map(|(a, b)| (*a - *b) as i128).collect();
        int_coords(&basis, &d)
    }
}

fn unreachable_face() -> Error {
    // A minimizing set of a pointed polyhedron is always one of its faces.
    Error::ForeignFace
}

fn odometer(c: &mut [i128], lo: &[i128], hi: &[i128]) -> bool {
    for j in (0..c.len()).rev() {
        if c[j] < hi[j] {
            c[j] += 1;
            return true;
        }
        c[j] = lo[j];
    }
    false
}

/// Rational point from integers.
pub fn point(p: &[i64]) -> Vec<Rational> {
    rat_point(p)
}


/// Content (gcd of coordinates) of an integer vector.
pub fn content(v: &[i64]) -> i64 {
    gcd_all(&to_i128(v)) as i64
}
