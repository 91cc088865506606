//! Monodromy zeta functions at infinity in factored form, and eigenvalue
//! multiplicities read off them.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::latgeo::convex_hull_int;
use crate::newton::NewtonAtInfinity;
use crate::poly::Polynomial;
use crate::roots::RootOfUnity;

/// `∏_d (1 - t^d)^{e_d}` with every stored `e_d` nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactoredZeta {
    factors: BTreeMap<u64, i64>,
}

impl FactoredZeta {
    pub fn new() -> FactoredZeta {
        FactoredZeta::default()
    }

    /// Multiplies by `(1 - t^d)^e`.
    pub fn push(&mut self, d: u64, e: i64) {
        assert!(d > 0, "factor order must be positive");
        let slot = self.factors.entry(d).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&d);
        }
    }

    pub fn merge(&mut self, other: &FactoredZeta) {
        for (&d, &e) in &other.factors {
            self.push(d, e);
        }
    }

    pub fn factors(&self) -> &BTreeMap<u64, i64> {
        &self.factors
    }

    pub fn exponent(&self, d: u64) -> i64 {
        self.factors.get(&d).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Order of `(1 - λt)` in the product: `Σ_{ord λ | d} e_d`.
    pub fn multiplicity_of(&self, lambda: &RootOfUnity) -> i64 {
        self.factors.iter().filter(|(&d, _)| lambda.is_root_of(d)).map(|(_, &e)| e).sum()
    }

    /// Degree of the rational function: `Σ d·e_d`.
    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|(&d, &e)| d as i64 * e).sum()
    }
}

impl fmt::Display for FactoredZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (&d, &e) in &self.factors {
            match d {
                1 => write!(f, "(1-t)")?,
                _ => write!(f, "(1-t^{d})")?,
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Factor {
    d: u64,
    e: i64,
}

impl Serialize for FactoredZeta {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let factors: Vec<Factor> = self.factors.iter().map(|(&d, &e)| Factor { d, e }).collect();
        let mut st = s.serialize_struct("FactoredZeta", 2)?;
        st.serialize_field("factors", &factors)?;
        st.serialize_field("pretty", &self.to_string())?;
        st.end()
    }
}

/// `ζ_f^∞(t) = ∏_γ (1 - t^{d_γ})^{(-1)^{s_γ-1} Vol_Z(γ)}` over every face at
/// infinity with `m_γ = 0`, admissible or not.
pub fn zeta_at_infinity(nw: &NewtonAtInfinity) -> Result<FactoredZeta> {
    nw.normal_fan()?;
    let mut z = FactoredZeta::new();
    for f in nw.faces_at_infinity().filter(|f| f.m == 0) {
        let sign = if (f.s - 1) % 2 == 0 { 1 } else { -1 };
        z.push(f.d.expect("faces at infinity carry d") as u64, sign * f.vol as i64);
    }
    Ok(z)
}

/// Zeta function at infinity of a Laurent polynomial on the torus: the
/// product of `(1 - t^{d_γ})^{(-1)^{n-1} Vol_Z(γ)}` over the facets of
/// `conv({0} ∪ supp f)` missing the origin.
pub fn zeta_torus_at_infinity(poly: &Polynomial) -> Result<FactoredZeta> {
    if poly.is_zero() {
        return Err(Error::EmptyPolynomial);
    }
    let n = poly.ambient_dim();
    let mut points = vec![vec![0i64; n]];
    points.extend(poly.support());
    let hull = convex_hull_int(&points, &[])?;
    if !hull.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim: hull.dim(), ambient: n });
    }
    let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
    let mut z = FactoredZeta::new();
    for id in hull.faces_of_dim(n - 1) {
        if hull.face(id).contains_origin {
            continue;
        }
        let d = hull.lattice_distance(id)?.d;
        z.push(d as u64, sign * hull.normalized_volume(id)? as i64);
    }
    Ok(z)
}

/// The signed sum `Σ (-1)^{n-s_γ} Vol_Z(γ)` over admissible faces at
/// infinity with `m_γ = 0` and `ord λ | d_γ`, for `λ ∉ A_f`.
pub fn signed_multiplicity(nw: &NewtonAtInfinity, lambda: &RootOfUnity) -> Result<i64> {
    let a = nw.atypical_eigenvalues()?;
    if a.contains(lambda) {
        return Err(Error::AtypicalEigenvalue(lambda.to_string()));
    }
    Ok(multiplicity_product(nw).multiplicity_of(lambda))
}

/// Multiplicity of `λ ∉ A_f` as an eigenvalue of the monodromy at infinity
/// on the middle cohomology.
pub fn multiplicity(nw: &NewtonAtInfinity, lambda: &RootOfUnity) -> Result<u64> {
    let m = signed_multiplicity(nw, lambda)?;
    assert!(m >= 0, "negative multiplicity {m} for {lambda}");
    Ok(m as u64)
}

/// `∏ (1 - t^{d_γ})^{(-1)^{n-s_γ} Vol_Z(γ)}` over admissible faces at
/// infinity with `m_γ = 0`.
pub fn multiplicity_product(nw: &NewtonAtInfinity) -> FactoredZeta {
    let n = nw.ambient_dim();
    let mut z = FactoredZeta::new();
    for f in nw.faces_at_infinity().filter(|f| f.admissible && f.m == 0) {
        let sign = if (n - f.s) % 2 == 0 { 1 } else { -1 };
        z.push(f.d.expect("faces at infinity carry d") as u64, sign * f.vol as i64);
    }
    z
}
