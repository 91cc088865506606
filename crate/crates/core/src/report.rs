//! Assembles the per-module results into one serializable report. Every
//! number here comes from a call into another module; this file only
//! gathers and formats.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::Result;
use crate::jordan::{jordan_table, JordanReport};
use crate::latgeo::{convex_hull_int, Polytope};
use crate::localmono::{atypical_eigenvalues_local, check_local_hypotheses, LocalDiagnostic, LocalScene};
use crate::newton::{gamma_infinity, FaceInfo, NewtonAtInfinity};
use crate::nondeg::{check_all, NondegConfig, NondegStatus, Verdict};
use crate::poly::Polynomial;
use crate::roots::{divisors, EigenvalueSet, RootOfUnity};
use crate::zeta::{multiplicity, multiplicity_product, zeta_at_infinity, zeta_torus_at_infinity, FactoredZeta};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    /// Treat the input as a Laurent polynomial on the torus.
    pub laurent: bool,
    pub skip_nondeg: bool,
    pub nondeg: NondegConfig,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputEcho {
    pub poly: String,
    pub n: usize,
    pub laurent: bool,
    pub seed: u64,
    pub nondeg_trials: u32,
    pub skip_nondeg: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FacetSummary {
    pub normal: Vec<i64>,
    pub offset: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PolytopeSummary {
    pub vertices: Vec<Vec<i64>>,
    pub facets: Vec<FacetSummary>,
    pub dim: usize,
    pub full_dim: bool,
    pub convenient: Option<bool>,
}

impl PolytopeSummary {
    fn new(p: &Polytope, convenient: Option<bool>) -> PolytopeSummary {
        let mut vertices = p.lattice_vertices().expect("lattice polytope").to_vec();
        vertices.sort();
        PolytopeSummary {
            vertices,
            facets: p
                .facets()
                .iter()
                .map(|f| FacetSummary { normal: f.normal.clone(), offset: f.offset.to_string() })
                .collect(),
            dim: p.dim(),
            full_dim: p.is_full_dimensional(),
            convenient,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceSummary {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdmissibleFace {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
    pub s: usize,
    pub m: i64,
    pub d: i64,
    pub vol: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityRow {
    pub eigenvalue: RootOfUnity,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub input: InputEcho,
    pub gamma_infinity: PolytopeSummary,
    pub atypical_faces: Option<Vec<FaceSummary>>,
    pub admissible_faces: Option<Vec<AdmissibleFace>>,
    #[serde(rename = "A_f")]
    pub a_f: Option<EigenvalueSet>,
    pub nondegeneracy: Option<NondegStatus>,
    pub zeta: Option<FactoredZeta>,
    pub multiplicities: Option<Vec<MultiplicityRow>>,
    pub jordan: Option<JordanReport>,
    pub warnings: Vec<String>,
}

impl AnalysisReport {
    /// A hypothesis is known to fail: a certified degenerate face, or a
    /// lower-dimensional `Γ∞(f)`.
    pub fn hypotheses_failed(&self) -> bool {
        !self.gamma_infinity.full_dim
            || self.nondegeneracy.as_ref().is_some_and(|s| s.overall.is_degenerate_certified())
    }
}

fn sorted_vertices(f: &FaceInfo) -> Vec<Vec<i64>> {
    let mut v = f.vertices.clone();
    v.sort();
    v
}

fn nondeg_warnings(status: &NondegStatus, out: &mut Vec<String>) {
    for f in &status.faces {
        let where_ = format!("face {:?}", f.vertices);
        match &f.verdict {
            Verdict::NonDegenerateCertified | Verdict::ProbablyNonDegenerate { .. } => {}
            Verdict::DegenerateCertified { certificate } => {
                out.push(format!("hypothesis failed: degenerate on {where_} ({certificate})"))
            }
            Verdict::LikelyDegenerate { witness } => out.push(format!(
                "hypothesis doubtful: likely degenerate on {where_} (modular witness mod {} and {}, trial {})",
                witness.prime, witness.confirmed_with, witness.trial
            )),
        }
    }
    if let Verdict::ProbablyNonDegenerate { trials } = status.overall {
        out.push(format!("non-degeneracy holds with high probability only ({trials} modular trials per face)"));
    }
}

/// Every `λ ∉ A_f` whose order divides the lattice distance of some
/// admissible face at infinity with `m_γ = 0`.
fn multiplicity_candidates(nw: &NewtonAtInfinity, a_f: &EigenvalueSet) -> Vec<RootOfUnity> {
    let mut orders = BTreeSet::new();
    for &d in multiplicity_product(nw).factors().keys() {
        orders.extend(divisors(d));
    }
    orders
        .into_iter()
        .flat_map(RootOfUnity::primitive)
        .filter(|l| !a_f.contains(l))
        .collect()
}

fn echo(poly: &Polynomial, opts: &AnalyzeOptions) -> InputEcho {
    InputEcho {
        poly: poly.to_string(),
        n: poly.ambient_dim(),
        laurent: opts.laurent,
        seed: opts.nondeg.seed,
        nondeg_trials: opts.nondeg.trials,
        skip_nondeg: opts.skip_nondeg,
    }
}

fn analyze_torus(poly: &Polynomial, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let n = poly.ambient_dim();
    let mut points = vec![vec![0i64; n]];
    points.extend(poly.support());
    let hull = convex_hull_int(&points, &[])?;
    let mut warnings = vec!["torus mode: only the zeta function at infinity is computed".to_string()];
    let zeta = if hull.is_full_dimensional() {
        Some(zeta_torus_at_infinity(poly)?)
    } else {
        warnings.push(format!("conv({{0}} ∪ supp f) has dimension {} < {n}; nothing computed", hull.dim()));
        None
    };
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        input: echo(poly, opts),
        gamma_infinity: PolytopeSummary::new(&hull, None),
        atypical_faces: None,
        admissible_faces: None,
        a_f: None,
        nondegeneracy: None,
        zeta,
        multiplicities: None,
        jordan: None,
        warnings,
    })
}

/// The full pipeline: `Γ∞(f)`, face classification, non-degeneracy, zeta
/// function, multiplicities and Jordan blocks.
pub fn analyze(poly: &Polynomial, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    if opts.laurent {
        return analyze_torus(poly, opts);
    }
    let nw = gamma_infinity(poly)?;
    let n = nw.ambient_dim();
    let mut warnings = Vec::new();
    let mut report = AnalysisReport {
        schema_version: SCHEMA_VERSION,
        input: echo(poly, opts),
        gamma_infinity: PolytopeSummary::new(nw.polytope(), Some(nw.is_convenient())),
        atypical_faces: None,
        admissible_faces: None,
        a_f: None,
        nondegeneracy: None,
        zeta: None,
        multiplicities: None,
        jordan: None,
        warnings: Vec::new(),
    };
    if !nw.is_full_dimensional() {
        report.warnings.push(format!(
            "hypothesis failed: Γ∞(f) has dimension {} < {n}; nothing beyond the polytope is computed",
            nw.dim()
        ));
        return Ok(report);
    }

    report.atypical_faces = Some(
        nw.atypical_faces()?.into_iter().map(|f| FaceSummary { dim: f.dim, vertices: sorted_vertices(f) }).collect(),
    );
    report.admissible_faces = Some(
        nw.admissible_faces()?
            .into_iter()
            .map(|f| AdmissibleFace {
                dim: f.dim,
                vertices: sorted_vertices(f),
                s: f.s,
                m: f.m,
                d: f.d.expect("faces at infinity carry d"),
                vol: f.vol,
            })
            .collect(),
    );
    let a_f = nw.atypical_eigenvalues()?;

    if opts.skip_nondeg {
        warnings.push("non-degeneracy not checked; results assume it".to_string());
    } else {
        let status = check_all(&nw, &opts.nondeg)?;
        nondeg_warnings(&status, &mut warnings);
        report.nondegeneracy = Some(status);
    }
    if !nw.is_convenient() {
        warnings.push("Γ∞(f) is not convenient".to_string());
    }
    if n == 2 && nw.dilation_factor() >= 2 {
        warnings.push(format!(
            "Γ∞(f) = {}·P for a lattice polygon P: the connectedness argument for generic fibers via non-degeneracy does not apply as stated",
            nw.dilation_factor()
        ));
    }

    report.zeta = Some(zeta_at_infinity(&nw)?);
    let mut rows = Vec::new();
    for lambda in multiplicity_candidates(&nw, &a_f) {
        rows.push(MultiplicityRow { eigenvalue: lambda, multiplicity: multiplicity(&nw, &lambda)? });
    }
    report.multiplicities = Some(rows);

    let jordan = jordan_table(&nw)?;
    for lambda in &jordan.coincident {
        warnings.push(format!(
            "λ = {lambda}: k = e - k on an interior edge, both height counts of n(λ) are added"
        ));
    }
    report.jordan = Some(jordan);
    report.a_f = Some(a_f);
    report.warnings = warnings;
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalInputEcho {
    pub n: usize,
    pub interior: Vec<String>,
    pub boundary: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalReport {
    pub schema_version: u32,
    pub input: LocalInputEcho,
    #[serde(rename = "A_circ")]
    pub a_circ: EigenvalueSet,
    pub diagnostics: Vec<LocalDiagnostic>,
    pub warnings: Vec<String>,
}

pub fn analyze_local(scene: &LocalScene, cfg: &NondegConfig) -> Result<LocalReport> {
    let a_circ = atypical_eigenvalues_local(scene)?;
    let diagnostics = check_local_hypotheses(scene, cfg)?;
    let mut warnings = Vec::new();
    for d in &diagnostics {
        let tag = format!("{}[{}] = {}", d.role, d.index, d.poly);
        if !d.convenient {
            warnings.push(format!("{tag}: not convenient at 0"));
        }
        if d.nondegeneracy.overall.is_degenerate_certified() {
            warnings.push(format!("{tag}: degenerate at 0"));
        }
    }
    warnings.push("A° bounds the atypical set at b from above; the set itself is not computed".to_string());
    Ok(LocalReport {
        schema_version: SCHEMA_VERSION,
        input: LocalInputEcho {
            n: scene.n,
            interior: scene.interior.iter().map(|p| p.to_string()).collect(),
            boundary: scene.boundary.iter().map(|p| p.to_string()).collect(),
        },
        a_circ,
        diagnostics,
        warnings,
    })
}

fn join_points(v: &[Vec<i64>]) -> String {
    let items: Vec<String> = v.iter().map(|p| format!("({})", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
    items.join(" ")
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        let g = &self.gamma_infinity;
        writeln!(s, "f = {}   (n = {}{})", self.input.poly, self.input.n, if self.input.laurent { ", torus" } else { "" })?;
        writeln!(s, "Γ∞(f): vertices {}", join_points(&g.vertices))?;
        write!(s, "       dim {}{}", g.dim, if g.full_dim { ", full-dimensional" } else { "" })?;
        if let Some(c) = g.convenient {
            write!(s, ", {}", if c { "convenient" } else { "not convenient" })?;
        }
        writeln!(s)?;
        if let Some(at) = &self.atypical_faces {
            writeln!(s, "atypical faces: {}", at.len())?;
            for face in at {
                writeln!(s, "  dim {}: {}", face.dim, join_points(&face.vertices))?;
            }
        }
        if let Some(ad) = &self.admissible_faces {
            writeln!(s, "admissible faces: {}", ad.len())?;
            for face in ad {
                writeln!(
                    s,
                    "  dim {}: {}   s={} m={} d={} vol={}",
                    face.dim,
                    join_points(&face.vertices),
                    face.s,
                    face.m,
                    face.d,
                    face.vol
                )?;
            }
        }
        if let Some(a) = &self.a_f {
            writeln!(s, "A_f = {a}")?;
        }
        if let Some(nd) = &self.nondegeneracy {
            writeln!(s, "non-degeneracy: {} ({} faces checked)", nd.overall.label(), nd.faces.len())?;
        }
        if let Some(z) = &self.zeta {
            writeln!(s, "zeta at infinity: {z}")?;
        }
        if let Some(rows) = &self.multiplicities {
            writeln!(s, "multiplicities:")?;
            for r in rows {
                writeln!(s, "  {:>8}  {}", r.eigenvalue.to_string(), r.multiplicity)?;
            }
        }
        if let Some(j) = &self.jordan {
            writeln!(s, "Jordan blocks (size {}, size {}):", j.n, j.n - 1)?;
            for r in &j.rows {
                writeln!(s, "  {:>8}  {}  {}", r.eigenvalue.to_string(), r.size_n, r.size_n_minus_1)?;
            }
        }
        for w in &self.warnings {
            writeln!(s, "warning: {w}")?;
        }
        f.write_str(&s)
    }
}

impl fmt::Display for LocalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "A° = {}", self.a_circ)?;
        for d in &self.diagnostics {
            writeln!(
                f,
                "{}[{}] {}: {}, {}",
                d.role,
                d.index,
                d.poly,
                if d.convenient { "convenient" } else { "not convenient" },
                d.nondegeneracy.overall.label()
            )?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}
