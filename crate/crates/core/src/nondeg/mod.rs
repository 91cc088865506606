//! Non-degeneracy of face parts: `{f_γ = 0}` must be smooth and reduced in
//! the torus for every face `γ` at infinity.
//!
//! Each face is first rewritten in lattice coordinates of its affine span,
//! `f_γ = x^a · G(y)` with `G` a polynomial in `dim γ` variables.
//!
//! * `dim γ = 0`: `G` is a nonzero constant, always fine.
//! * `dim γ = 1`: `G` is univariate and the hypersurface is smooth and
//!   reduced iff `gcd(G, G')` is constant. Decided exactly over `Q`.
//! * `dim γ >= 2`: modular search. Each trial picks a prime `p` near `2^31`
//!   and a random affine plane `y = a + b s + c t` over `F_p`, then looks
//!   for common zeros of `G, ∂_1 G, ..., ∂_k G` on that plane and in the
//!   torus by eliminating `t` with resultants. A hit is re-checked with a
//!   second prime and plane before it is reported.
//!
//! For `dim γ = 2` the plane is the whole face torus, so any singular point
//! is found with high probability. For `dim γ >= 3` a random plane meets
//! only the singular strata of codimension 2; smaller strata go unseen.

mod modp;
mod qpoly;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::latgeo::{FaceId, Polytope};
use crate::newton::NewtonAtInfinity;
use crate::poly::Polynomial;

pub use modp::{prev_prime, random_primes, Field};
pub use qpoly::QPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NondegConfig {
    /// Number of modular trials `T` per face of dimension at least 2.
    pub trials: u32,
    pub seed: u64,
    /// How many distinct primes the trials cycle through.
    pub primes: usize,
}

impl Default for NondegConfig {
    fn default() -> Self {
        NondegConfig { trials: 64, seed: 0, primes: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// The restricted system shares a curve: a non-reduced component.
    SingularCurve,
    /// Finitely many singular points on the plane, the `s`-coordinates of
    /// which are the roots of a polynomial of this degree.
    SingularPoints { degree: usize },
}

/// A reproducible modular witness: rerunning the trial with the same seed
/// finds the same data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularWitness {
    pub prime: u64,
    pub confirmed_with: u64,
    pub seed: u64,
    pub trial: u32,
    pub kind: WitnessKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum Verdict {
    NonDegenerateCertified,
    DegenerateCertified { certificate: String },
    ProbablyNonDegenerate { trials: u32 },
    LikelyDegenerate { witness: ModularWitness },
}

impl Verdict {
    /// Lower is weaker; the overall verdict is the weakest one.
    fn rank(&self) -> (u8, u32) {
        match self {
            Verdict::DegenerateCertified { .. } => (0, 0),
            Verdict::LikelyDegenerate { .. } => (1, 0),
            Verdict::ProbablyNonDegenerate { trials } => (2, *trials),
            Verdict::NonDegenerateCertified => (3, 0),
        }
    }

    pub fn is_degenerate_certified(&self) -> bool {
        matches!(self, Verdict::DegenerateCertified { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::NonDegenerateCertified => "NonDegenerateCertified",
            Verdict::DegenerateCertified { .. } => "DegenerateCertified",
            Verdict::ProbablyNonDegenerate { .. } => "ProbablyNonDegenerate",
            Verdict::LikelyDegenerate { .. } => "LikelyDegenerate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceVerdict {
    pub face: FaceId,
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NondegStatus {
    pub overall: Verdict,
    pub faces: Vec<FaceVerdict>,
}

impl NondegStatus {
    pub fn from_faces(faces: Vec<FaceVerdict>) -> NondegStatus {
        let overall = faces
            .iter()
            .map(|f| &f.verdict)
            .min_by_key(|v| v.rank())
            .cloned()
            .unwrap_or(Verdict::NonDegenerateCertified);
        NondegStatus { overall, faces }
    }
}

/// `f_γ` in lattice coordinates of the affine span of `γ`, shifted so all
/// exponents are nonnegative and each variable appears with exponent 0.
struct LatticeForm {
    k: usize,
    terms: Vec<(Vec<u64>, BigRational)>,
}

fn lattice_form(poly: &Polynomial, polytope: &Polytope, id: FaceId) -> Result<LatticeForm> {
    let face = polytope.face(id);
    let part = poly.face_part(polytope, id)?;
    let base = polytope.face_points(id)?[0].clone();
    let k = face.dim;
    let mut coords: Vec<(Vec<i128>, BigRational)> = Vec::new();
    for (v, c) in part.terms() {
        let x = polytope.face_coords(id, &base, v.coords()).ok_or(Error::NotInLattice)?;
        coords.push((x, c.clone()));
    }
    let mins: Vec<i128> = (0..k).map(|j| coords.iter().map(|(x, _)| x[j]).min().unwrap_or(0)).collect();
    let terms = coords
        .into_iter()
        .map(|(x, c)| (x.iter().zip(&mins).map(|(a, m)| (a - m) as u64).collect(), c))
        .collect();
    Ok(LatticeForm { k, terms })
}

/// Verdict for one bounded face not containing the origin.
pub fn check_face(poly: &Polynomial, polytope: &Polytope, id: FaceId, cfg: &NondegConfig) -> Result<Verdict> {
    let face = polytope.face(id);
    if !face.is_bounded() {
        return Err(Error::Unbounded);
    }
    if face.contains_origin {
        return Err(Error::OriginInFace);
    }
    let form = lattice_form(poly, polytope, id)?;
    Ok(match form.k {
        0 => Verdict::NonDegenerateCertified,
        1 => {
            let sparse: Vec<(u64, BigRational)> = form.terms.iter().map(|(e, c)| (e[0], c.clone())).collect();
            let g = QPoly::from_sparse(&sparse);
            let h = g.gcd(&g.derivative());
            if h.degree().unwrap_or(0) == 0 {
                Verdict::NonDegenerateCertified
            } else {
                Verdict::DegenerateCertified { certificate: format!("g(t) = {g}, gcd(g, g') = {h}") }
            }
        }
        _ => search(&form, cfg, id as u64),
    })
}

/// Checks every listed face; faces are processed independently and
/// reported in the given order.
pub fn check_faces(poly: &Polynomial, polytope: &Polytope, ids: &[FaceId], cfg: &NondegConfig) -> Result<NondegStatus> {
    let mut faces = Vec::with_capacity(ids.len());
    for &id in ids {
        faces.push(FaceVerdict {
            face: id,
            dim: polytope.face(id).dim,
            vertices: polytope.face_points(id)?,
            verdict: check_face(poly, polytope, id, cfg)?,
        });
    }
    Ok(NondegStatus::from_faces(faces))
}

/// Non-degeneracy at infinity: every face of `Γ∞(f)` missing the origin.
pub fn check_all(nw: &NewtonAtInfinity, cfg: &NondegConfig) -> Result<NondegStatus> {
    let ids: Vec<FaceId> = nw.faces_at_infinity().map(|f| f.id).collect();
    check_faces(nw.poly(), nw.polytope(), &ids, cfg)
}

/// `G` and its partial derivatives reduced modulo `p`.
struct ModSystem {
    field: Field,
    k: usize,
    g: Vec<(Vec<u64>, u64)>,
    partials: Vec<Vec<(Vec<u64>, u64)>>,
    degree: u64,
}

impl ModSystem {
    fn new(form: &LatticeForm, field: Field) -> Option<ModSystem> {
        let mut g = Vec::with_capacity(form.terms.len());
        for (e, c) in &form.terms {
            g.push((e.clone(), field.from_rational(c)?));
        }
        let k = form.k;
        let partials = (0..k)
            .map(|i| {
                g.iter()
                    .filter(|(e, _)| e[i] > 0)
                    .map(|(e, c)| {
                        let mut e2 = e.clone();
                        e2[i] -= 1;
                        (e2, field.mul(*c, e[i] % field.modulus()))
                    })
                    .filter(|(_, c)| *c != 0)
                    .collect()
            })
            .collect();
        let degree = g.iter().map(|(e, _)| e.iter().sum::<u64>()).max().unwrap_or(0);
        Some(ModSystem { field, k, g, partials, degree })
    }

    /// `Σ c y^e` restricted to the line `y = base + dir·t`.
    fn restrict(&self, terms: &[(Vec<u64>, u64)], base: &[u64], dir: &[u64]) -> Vec<u64> {
        let f = &self.field;
        let maxe: Vec<u64> = (0..self.k).map(|j| terms.iter().map(|(e, _)| e[j]).max().unwrap_or(0)).collect();
        let powers: Vec<Vec<Vec<u64>>> = (0..self.k)
            .map(|j| {
                let lin = f.trim(vec![base[j], dir[j]]);
                let mut out = vec![vec![1u64]];
                for _ in 0..maxe[j] {
                    let next = f.poly_mul(out.last().unwrap(), &lin);
                    out.push(next);
                }
                out
            })
            .collect();
        let mut acc: Vec<u64> = Vec::new();
        for (e, c) in terms {
            let mut m = vec![*c];
            for j in 0..self.k {
                if e[j] > 0 {
                    m = f.poly_mul(&m, &powers[j][e[j] as usize]);
                }
            }
            acc = f.poly_add(&acc, &m);
        }
        acc
    }

    fn combo(&self, weights: &[u64], base: &[u64], dir: &[u64]) -> Vec<u64> {
        let mut acc = Vec::new();
        for (i, w) in weights.iter().enumerate() {
            let r = self.restrict(&self.partials[i], base, dir);
            acc = self.field.poly_add(&acc, &self.field.poly_scale(&r, *w));
        }
        acc
    }

    /// One trial on a random plane; `None` when nothing singular is seen.
    fn trial(&self, rng: &mut ChaCha8Rng) -> Option<WitnessKind> {
        let f = &self.field;
        if self.degree <= 1 {
            return None;
        }
        let d = self.degree as usize;
        for _attempt in 0..8 {
            let a: Vec<u64> = (0..self.k).map(|_| f.random(rng)).collect();
            let b: Vec<u64> = (0..self.k).map(|_| f.random(rng)).collect();
            let c: Vec<u64> = (0..self.k).map(|_| f.random_nonzero(rng)).collect();
            let weights: Vec<Vec<u64>> = (0..3).map(|_| (0..self.k).map(|_| f.random_nonzero(rng)).collect()).collect();

            let samples = d * (d - 1) + 1;
            let xs: Vec<u64> = (0..samples as u64).collect();
            let mut ys: Vec<Vec<u64>> = vec![Vec::with_capacity(samples); 3];
            let mut degs: Option<Vec<usize>> = None;
            let mut consistent = true;
            for &s0 in &xs {
                let base: Vec<u64> = (0..self.k).map(|j| f.add(a[j], f.mul(b[j], s0))).collect();
                let h0 = self.restrict(&self.g, &base, &c);
                let hs: Vec<Vec<u64>> = weights.iter().map(|w| self.combo(w, &base, &c)).collect();
                let these: Vec<usize> = std::iter::once(&h0).chain(&hs).map(|p| p.len()).collect();
                match &degs {
                    None => degs = Some(these),
                    Some(prev) if *prev != these => {
                        consistent = false;
                        break;
                    }
                    _ => {}
                }
                for (m, h) in hs.iter().enumerate() {
                    ys[m].push(f.resultant(&h0, h));
                }
            }
            if !consistent || degs.as_ref().is_some_and(|v| v[0] != d + 1) {
                continue;
            }
            let mut g: Vec<u64> = Vec::new();
            for y in &ys {
                g = f.gcd(&g, &f.interpolate(&xs, y));
            }
            if g.is_empty() {
                return Some(WitnessKind::SingularCurve);
            }
            if g.len() == 1 {
                return None;
            }
            // Drop the s-values of common zeros lying on a coordinate hyperplane.
            for j in 0..self.k {
                let ratio = |v: u64| f.mul(v, f.inv(c[j]));
                let base: Vec<u64> = (0..self.k).map(|i| f.sub(a[i], f.mul(c[i], ratio(a[j])))).collect();
                let dir: Vec<u64> = (0..self.k).map(|i| f.sub(b[i], f.mul(c[i], ratio(b[j])))).collect();
                let mut e = self.restrict(&self.g, &base, &dir);
                for p in &self.partials {
                    e = f.gcd(&e, &self.restrict(p, &base, &dir));
                }
                if e.is_empty() {
                    continue;
                }
                loop {
                    let h = f.gcd(&g, &e);
                    if h.len() <= 1 {
                        break;
                    }
                    g = f.divrem(&g, &h).0;
                }
            }
            return (g.len() > 1).then(|| WitnessKind::SingularPoints { degree: g.len() - 1 });
        }
        None
    }
}

fn search(form: &LatticeForm, cfg: &NondegConfig, face_key: u64) -> Verdict {
    let primes = random_primes(&mut ChaCha8Rng::seed_from_u64(cfg.seed), cfg.primes.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ face_key.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let system = |i: usize| -> Option<ModSystem> {
        (0..primes.len()).find_map(|off| ModSystem::new(form, Field::new(primes[(i + off) % primes.len()])))
    };
    for t in 0..cfg.trials {
        let Some(sys) = system(t as usize) else {
            continue;
        };
        let Some(kind) = sys.trial(&mut rng) else {
            continue;
        };
        let Some(confirm) = system(t as usize + 1) else {
            continue;
        };
        if confirm.trial(&mut rng).is_some() {
            return Verdict::LikelyDegenerate {
                witness: ModularWitness {
                    prime: sys.field.modulus(),
                    confirmed_with: confirm.field.modulus(),
                    seed: cfg.seed,
                    trial: t,
                    kind,
                },
            };
        }
    }
    Verdict::ProbablyNonDegenerate { trials: cfg.trials }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::gamma_infinity;

    fn plane_form(text: &str) -> LatticeForm {
        let p = Polynomial::parse(text, 2, false).unwrap();
        LatticeForm {
            k: 2,
            terms: p.terms().iter().map(|(e, c)| (e.coords().iter().map(|&x| x as u64).collect(), c.clone())).collect(),
        }
    }

    fn verdict_of(text: &str, n: usize, face: &[Vec<i64>]) -> Verdict {
        let p = Polynomial::parse(text, n, false).unwrap();
        let nw = gamma_infinity(&p).unwrap();
        let id = nw.polytope().find_face_by_points(face).expect("face");
        check_face(&p, nw.polytope(), id, &NondegConfig { trials: 4, ..Default::default() }).unwrap()
    }

    #[test]
    fn cusp_edge_is_certified() {
        let v = verdict_of("x^2 + y^3", 2, &[vec![2, 0], vec![0, 3]]);
        assert_eq!(v, Verdict::NonDegenerateCertified);
    }

    #[test]
    fn squared_edge_is_certified_degenerate() {
        let v = verdict_of("x^2 + 2*x*y + y^2", 2, &[vec![2, 0], vec![0, 2]]);
        assert!(v.is_degenerate_certified());
        let v = verdict_of("3*x^2 + 6*x*y + 3*y^2", 2, &[vec![2, 0], vec![0, 2]]);
        assert!(v.is_degenerate_certified());
    }

    #[test]
    fn vertex_is_certified() {
        assert_eq!(verdict_of("x^2 + y^3 + 1", 2, &[vec![2, 0]]), Verdict::NonDegenerateCertified);
    }

    #[test]
    fn origin_face_is_rejected() {
        let p = Polynomial::parse("x^2 + y^3", 2, false).unwrap();
        let nw = gamma_infinity(&p).unwrap();
        let id = nw.polytope().find_face_by_points(&[vec![0, 0]]).unwrap();
        assert_eq!(check_face(&p, nw.polytope(), id, &NondegConfig::default()).unwrap_err(), Error::OriginInFace);
    }

    #[test]
    fn generic_triangle_is_probably_fine() {
        let v = verdict_of("x^2 + 3*y^2 + 5*x*y*z", 3, &[vec![2, 0, 0], vec![0, 2, 0], vec![1, 1, 1]]);
        assert_eq!(v, Verdict::ProbablyNonDegenerate { trials: 4 });
    }

    #[test]
    fn squared_triangle_is_caught() {
        // (x + y + z)^2 on the face conv{(2,0,0),(0,2,0),(0,0,2)}.
        let text = "x^2 + y^2 + z^2 + 2*x*y + 2*x*z + 2*y*z";
        let v = verdict_of(text, 3, &[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]);
        assert!(matches!(v, Verdict::LikelyDegenerate { witness: ModularWitness { kind: WitnessKind::SingularCurve, .. } }));
    }

    #[test]
    fn nodal_face_curve_is_caught() {
        // (y - 1)^2 - (x - 1)^2 (x + 1): a node at (1, 1).
        let v = search(&plane_form("y^2 - 2*y - x^3 + x^2 + x"), &NondegConfig { trials: 4, ..Default::default() }, 7);
        assert!(matches!(
            v,
            Verdict::LikelyDegenerate { witness: ModularWitness { kind: WitnessKind::SingularPoints { .. }, .. } }
        ));
    }

    #[test]
    fn smooth_curve_in_torus_passes() {
        let v = search(&plane_form("y^2 - x^3 - x - 1"), &NondegConfig { trials: 4, ..Default::default() }, 7);
        assert_eq!(v, Verdict::ProbablyNonDegenerate { trials: 4 });
    }

    #[test]
    fn node_off_the_torus_is_ignored() {
        // y^2 - x^2 (x + 1) has its only singular point at the origin.
        let v = search(&plane_form("y^2 - x^3 - x^2"), &NondegConfig { trials: 4, ..Default::default() }, 7);
        assert_eq!(v, Verdict::ProbablyNonDegenerate { trials: 4 });
    }
}
