//! Named example polynomials, a random generator of full-dimensional
//! supports, and the built-in self-test suite.

use num_integer::Integer;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::jordan::{jordan_table, n_lambda};
use crate::latgeo::{convex_hull_int, lattice_distance};
use crate::localmono::{atypical_eigenvalues_local, LocalScene};
use crate::newton::{gamma_infinity, NewtonAtInfinity};
use crate::nondeg::{check_all, NondegConfig};
use crate::poly::Polynomial;
use crate::roots::RootOfUnity;
use crate::zeta::{multiplicity, multiplicity_product, zeta_at_infinity};

/// A polynomial given by text, with its ambient dimension.
#[derive(Clone, Copy, Debug)]
pub struct Example {
    pub name: &'static str,
    pub text: &'static str,
    pub n: usize,
}

impl Example {
    pub fn poly(&self) -> Polynomial {
        Polynomial::parse(self.text, self.n, false).expect("example parses")
    }

    pub fn newton(&self) -> NewtonAtInfinity {
        gamma_infinity(&self.poly()).expect("example builds")
    }
}

pub const EXAMPLES: &[Example] = &[
    Example { name: "cusp", text: "x^2 + y^3", n: 2 },
    Example { name: "plane-af", text: "x*y^3 + x^3 + 2*x^3*y^2", n: 2 },
    Example { name: "interior-vertex", text: "x^5 + y^5 + 3*x^3*y^3", n: 2 },
    Example { name: "space-staircase", text: "x^2 + 2*x^2*y^2 + 3*x^2*y^2*z^3", n: 3 },
    Example { name: "space-skew", text: "x^2 + 2*y^2 + 3*x*y*z^2", n: 3 },
    Example { name: "space-nonadmissible", text: "x^2 + 2*y^2 + 3*x*y*z", n: 3 },
    Example { name: "convenient-3", text: "x^3 + y^4 + z^5 + x*y*z", n: 3 },
    Example { name: "broughton", text: "x + x^2*y", n: 2 },
    Example { name: "long-edge", text: "x^6 + y^4 + 5*x^2*y^3", n: 2 },
    Example { name: "quartic-4", text: "x1^4 + x2^4 + x3^4 + x4^4 + x1*x2*x3*x4", n: 4 },
];

pub fn example(name: &str) -> Option<Example> {
    EXAMPLES.iter().copied().find(|e| e.name == name)
}

/// A polynomial with the given support and coefficients `1, 2, 3, ...`.
pub fn poly_with_support(support: &[Vec<i64>]) -> Polynomial {
    let n = support[0].len();
    let terms = support.iter().enumerate().map(|(i, v)| (v.clone(), BigRational::from_integer((i as i64 + 1).into())));
    Polynomial::from_terms(n, false, terms).expect("valid support")
}

/// Between `n` and `max_points` distinct nonzero points of `[0, max_coord]^n`
/// with `conv({0} ∪ points)` full-dimensional.
pub fn random_full_dim_support(rng: &mut impl Rng, n: usize, max_points: usize, max_coord: i64) -> Vec<Vec<i64>> {
    loop {
        let count = rng.random_range(n..=max_points.max(n));
        let mut pts: Vec<Vec<i64>> = Vec::new();
        while pts.len() < count {
            let p: Vec<i64> = (0..n).map(|_| rng.random_range(0..=max_coord)).collect();
            if p.iter().any(|&x| x != 0) && !pts.contains(&p) {
                pts.push(p);
            }
        }
        let mut all = vec![vec![0; n]];
        all.extend(pts.iter().cloned());
        if convex_hull_int(&all, &[]).is_ok_and(|h| h.is_full_dimensional()) {
            pts.sort();
            return pts;
        }
    }
}

/// Self-test context. With `fault` set, every checked value is corrupted
/// before comparison; the suite must then fail.
#[derive(Clone, Copy, Debug, Default)]
pub struct Ctx {
    pub fault: bool,
}

impl Ctx {
    fn int(&self, x: i64) -> i64 {
        x + self.fault as i64
    }

    fn flag(&self, b: bool) -> bool {
        b ^ self.fault
    }

    fn text(&self, s: String) -> String {
        if self.fault {
            s + "?"
        } else {
            s
        }
    }
}

type Check = std::result::Result<(), String>;

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

pub struct Case {
    pub name: &'static str,
    pub tags: &'static [&'static str],
    run: fn(&Ctx) -> Check,
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn support_nw(support: &[Vec<i64>]) -> NewtonAtInfinity {
    gamma_infinity(&poly_with_support(support)).expect("fixture builds")
}

fn atypical_segment(c: &Ctx) -> Check {
    let nw = support_nw(&[vec![2, 0, 0], vec![2, 2, 0], vec![2, 2, 3]]);
    let seg = nw.find_face(&[vec![0, 0, 0], vec![2, 2, 0]]).ok_or("segment missing")?;
    expect("segment [0,(2,2,0)] atypical", c.flag(seg.atypical), true)?;
    let tri = nw.find_face(&[vec![0, 0, 0], vec![2, 0, 0], vec![2, 2, 0]]).ok_or("triangle missing")?;
    expect("triangle atypical", c.flag(tri.atypical), false)
}

fn atypical_skew(c: &Ctx) -> Check {
    let nw = support_nw(&[vec![2, 0, 0], vec![0, 2, 0], vec![1, 1, 2]]);
    let seg = nw.find_face(&[vec![0, 0, 0], vec![2, 0, 0]]).ok_or("segment missing")?;
    expect("segment [0,(2,0,0)] atypical", c.flag(seg.atypical), true)
}

fn af_plane(c: &Ctx) -> Check {
    let nw = support_nw(&[vec![1, 3], vec![3, 0], vec![3, 2]]);
    let a = nw.atypical_eigenvalues().map_err(|e| e.to_string())?;
    expect("A_f", c.text(a.to_string()), "{0/1}".to_string())?;
    let seg = nw.find_face(&[vec![0, 0], vec![1, 3]]).ok_or("segment missing")?;
    expect("segment [0,(1,3)] atypical", seg.atypical, true)
}

fn nonadmissible(c: &Ctx) -> Check {
    let nw = support_nw(&[vec![2, 0, 0], vec![0, 2, 0], vec![1, 1, 1]]);
    let v = nw.find_face(&[vec![2, 0, 0]]).ok_or("vertex missing")?;
    expect("admissible", c.flag(v.admissible), false)?;
    expect("m", v.m, 0)?;
    expect("d", v.d, Some(2))?;
    // Both axis vertices feed (1-t^2) into ζ; the admissible faces alone cancel out.
    let z = zeta_at_infinity(&nw).map_err(|e| e.to_string())?;
    expect("zeta", c.text(z.to_string()), "(1-t^2)^2".into())?;
    expect("multiplicity product", multiplicity_product(&nw).to_string(), "1".into())
}

fn cusp_zeta(c: &Ctx) -> Check {
    let nw = example("cusp").unwrap().newton();
    let z = zeta_at_infinity(&nw).map_err(|e| e.to_string())?;
    expect("zeta", c.text(z.to_string()), "(1-t^2)(1-t^3)(1-t^6)^-1".into())?;
    for (k, d, want) in [(1, 6, 1), (5, 6, 1), (1, 2, 0), (1, 3, 0), (2, 3, 0)] {
        let m = multiplicity(&nw, &RootOfUnity::new(k, d)).map_err(|e| e.to_string())? as i64;
        expect(&format!("multiplicity {k}/{d}"), c.int(m), want)?;
    }
    Ok(())
}

fn cusp_jordan(c: &Ctx) -> Check {
    let t = jordan_table(&example("cusp").unwrap().newton()).map_err(|e| e.to_string())?;
    for k in [1, 5] {
        let r = t.row(&RootOfUnity::new(k, 6)).ok_or("row missing")?;
        expect(&format!("blocks for {k}/6"), (r.size_n as i64, c.int(r.size_n_minus_1 as i64)), (0, 1))?;
    }
    Ok(())
}

fn interior_vertex(c: &Ctx) -> Check {
    let t = jordan_table(&example("interior-vertex").unwrap().newton()).map_err(|e| e.to_string())?;
    for k in [1, 2] {
        let r = t.row(&RootOfUnity::new(k, 3)).ok_or("row missing")?;
        expect(&format!("size-2 blocks for {k}/3"), c.int(r.size_n as i64), 1)?;
    }
    Ok(())
}

fn local_slice(c: &Ctx) -> Check {
    let s = LocalScene::from_json(r#"{"n": 2, "boundary": ["x1^2 + x2"]}"#).map_err(|e| e.to_string())?;
    let a = atypical_eigenvalues_local(&s).map_err(|e| e.to_string())?;
    expect("A°", c.text(a.to_string()), "{0/1, 1/2}".into())?;
    let s = LocalScene::from_json(r#"{"n": 2, "boundary": ["x1*x2"]}"#).map_err(|e| e.to_string())?;
    let a = atypical_eigenvalues_local(&s).map_err(|e| e.to_string())?;
    expect("A° of empty slice", a.to_string(), "{0/1}".into())
}

fn lattice_gcd(c: &Ctx) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let v: Vec<i64> = (0..3).map(|_| rng.random_range(-40..=40)).collect();
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        let g = v.iter().fold(0i64, |a, &b| a.gcd(&b));
        let d = lattice_distance(std::slice::from_ref(&v)).map_err(|e| e.to_string())?.d;
        expect(&format!("lattice distance of {v:?}"), c.int(d), g)?;
    }
    Ok(())
}

fn pick(c: &Ctx) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let pts: Vec<Vec<i64>> = (0..5).map(|_| vec![rng.random_range(0..8), rng.random_range(0..8)]).collect();
        let Ok(p) = convex_hull_int(&pts, &[]) else { continue };
        if !p.is_full_dimensional() {
            continue;
        }
        let all = p.lattice_points(false).map_err(|e| e.to_string())? .len() as i64;
        let inner = p.lattice_points(true).map_err(|e| e.to_string())?.len() as i64;
        let area2 = p.normalized_volume(p.top_face()).map_err(|e| e.to_string())? as i64;
        let boundary = all - inner;
        expect("2·area = 2i + b - 2", c.int(area2), 2 * inner + boundary - 2)?;
    }
    Ok(())
}

fn atypical_criteria(c: &Ctx) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 2..=3 {
        for _ in 0..10 {
            let nw = support_nw(&random_full_dim_support(&mut rng, n, 6, 4));
            for f in nw.faces().iter().filter(|f| !f.at_infinity) {
                let other = nw.atypical_by_facets(f.id).map_err(|e| e.to_string())?;
                expect(&format!("criteria on {:?}", f.vertices), c.flag(f.atypical), other)?;
            }
        }
    }
    Ok(())
}

/// Independent count: every lattice point of the bounding box, tested
/// against the triangle `0, p, q` by barycentric signs in the plane.
fn brute_n_lambda(p: &[i64], q: &[i64], e: i64, k: i64) -> u64 {
    let hi: Vec<i64> = p.iter().zip(q).map(|(a, b)| (*a).max(*b).max(0)).collect();
    let lo: Vec<i64> = p.iter().zip(q).map(|(a, b)| (*a).min(*b).min(0)).collect();
    let mut count = 0;
    let mut v = lo.clone();
    loop {
        // v = s p + t q with s, t > 0 and s + t < 1; heights are e (1 - s - t).
        if let Some((s, t)) = solve_plane(p, q, &v) {
            let one = BigRational::from_integer(1.into());
            let zero = BigRational::from_integer(0.into());
            if s > zero && t > zero && &s + &t < one {
                let h = (one - &s - &t) * BigRational::from_integer(e.into());
                if h.is_integer() {
                    let h = h.to_integer();
                    if h == k.into() || h == (e - k).into() {
                        count += if k == e - k { 2 } else { 1 };
                    }
                }
            }
        }
        let mut i = 0;
        loop {
            if i == v.len() {
                return count;
            }
            v[i] += 1;
            if v[i] <= hi[i] {
                break;
            }
            v[i] = lo[i];
            i += 1;
        }
    }
}

/// `(s, t)` with `v = s p + t q`, if any.
fn solve_plane(p: &[i64], q: &[i64], v: &[i64]) -> Option<(BigRational, BigRational)> {
    let n = p.len();
    for i in 0..n {
        for j in i + 1..n {
            let det = p[i] * q[j] - p[j] * q[i];
            if det == 0 {
                continue;
            }
            let s = BigRational::new((v[i] * q[j] - v[j] * q[i]).into(), det.into());
            let t = BigRational::new((p[i] * v[j] - p[j] * v[i]).into(), det.into());
            let ok = (0..n).all(|r| {
                &s * BigRational::from_integer(p[r].into()) + &t * BigRational::from_integer(q[r].into())
                    == BigRational::from_integer(v[r].into())
            });
            return ok.then_some((s, t));
        }
    }
    None
}

fn n_lambda_oracle(c: &Ctx) -> Check {
    for ex in EXAMPLES {
        let t = jordan_table(&ex.newton()).map_err(|e| e.to_string())?;
        for edge in &t.interior_edges {
            let (p, q) = (&edge.vertices[0], &edge.vertices[1]);
            // the ht = e - k count is already doubled inside the oracle when k = e - k
            for k in 1..edge.e {
                let lambda = RootOfUnity::new(k, edge.e as u64);
                let got = n_lambda(&[p.clone(), q.clone()], &lambda).map_err(|e| e.to_string())? as i64;
                let want = brute_n_lambda(p, q, edge.e, k) as i64;
                expect(&format!("{} n({lambda}) on {p:?}-{q:?}", ex.name), c.int(got), want)?;
            }
        }
    }
    Ok(())
}

fn dimension_bound(c: &Ctx) -> Check {
    for ex in EXAMPLES {
        let nw = ex.newton();
        let t = jordan_table(&nw).map_err(|e| e.to_string())?;
        let n = t.n as i64;
        for r in &t.rows {
            let m = multiplicity(&nw, &r.eigenvalue).map_err(|e| e.to_string())? as i64;
            let used = n * r.size_n as i64 + (n - 1) * r.size_n_minus_1 as i64;
            if c.int(used) > m {
                return Err(format!("{} {}: blocks need {used} > multiplicity {m}", ex.name, r.eigenvalue));
            }
        }
    }
    Ok(())
}

fn nondeg_cases(c: &Ctx) -> Check {
    let cfg = NondegConfig::default();
    let good = check_all(&example("cusp").unwrap().newton(), &cfg).map_err(|e| e.to_string())?;
    expect("cusp degenerate", c.flag(good.overall.is_degenerate_certified()), false)?;
    let bad = gamma_infinity(&Polynomial::parse("x^2 + 2*x*y + y^2", 2, false).unwrap()).unwrap();
    let bad = check_all(&bad, &cfg).map_err(|e| e.to_string())?;
    expect("squared edge degenerate", bad.overall.is_degenerate_certified(), true)
}

pub const CASES: &[Case] = &[
    Case { name: "atypical-segment", tags: &["atypical", "worked-example"], run: atypical_segment },
    Case { name: "atypical-skew", tags: &["atypical", "worked-example"], run: atypical_skew },
    Case { name: "atypical-eigenvalues-plane", tags: &["atypical", "worked-example"], run: af_plane },
    Case { name: "nonadmissible-contribution", tags: &["zeta", "worked-example"], run: nonadmissible },
    Case { name: "cusp-zeta", tags: &["zeta"], run: cusp_zeta },
    Case { name: "cusp-jordan", tags: &["jordan"], run: cusp_jordan },
    Case { name: "interior-vertex-jordan", tags: &["jordan"], run: interior_vertex },
    Case { name: "local-slices", tags: &["local"], run: local_slice },
    Case { name: "lattice-distance-gcd", tags: &["lattice", "oracle"], run: lattice_gcd },
    Case { name: "pick", tags: &["lattice", "oracle"], run: pick },
    Case { name: "atypical-criteria", tags: &["atypical", "oracle"], run: atypical_criteria },
    Case { name: "n-lambda-brute-force", tags: &["jordan", "oracle"], run: n_lambda_oracle },
    Case { name: "dimension-bound", tags: &["jordan", "zeta"], run: dimension_bound },
    Case { name: "nondeg", tags: &["nondeg"], run: nondeg_cases },
];

/// Runs every case whose name or tags contain `filter`.
pub fn selftest(filter: Option<&str>, ctx: &Ctx) -> Vec<Outcome> {
    CASES
        .iter()
        .filter(|c| filter.is_none_or(|f| c.name.contains(f) || c.tags.iter().any(|t| t.contains(f))))
        .map(|c| {
            let r = (c.run)(ctx);
            Outcome { name: c.name, passed: r.is_ok(), detail: r.err().unwrap_or_default() }
        })
        .collect()
}
