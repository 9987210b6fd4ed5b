//! Dispatch from a parsed spec to library operations, and the report format.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use llvkit::clifford::{equivariance_check, CliffordAlgebra};
use llvkit::exact::dual_apply;
use llvkit::graded::invariants;
use llvkit::groupalg::{central_idempotents, group_involution, invariant_dimension, isotypic_components, RepMat};
use llvkit::involution::{adjoint_involution, group_algebra_factor, skew_and_derived};
use llvkit::lie::{closure, invariants_report, killing_semisimple, minimal_ideals, MatrixLieAlgebra};
use llvkit::llv::{is_jordan_lefschetz, llv_algebra, llv_pre_g, restrict};
use llvkit::quadform::{is_similitude, witt_cancel_equivariant, QuadraticSpace};
use llvkit::spinor::{
    contraction, harmonic_kernel, highest_weight_check, power_weight_setup, sh_embedding_check, spinor_rep, sym_dim, weight_of_vector,
    wedge_power, SpinorContext, SymContext,
};
use llvkit::{Error, Mat, Rational};

use crate::spec::*;
use crate::suite;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Warning,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorInfo {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub input_sha256: String,
    pub kind: Option<&'static str>,
    pub seed: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    /// 0 ok, 1 warning, 2 input error, 3 internal invariant failure.
    pub fn exit_code(&self) -> i32 {
        match (&self.status, &self.error) {
            (Status::Ok, _) => 0,
            (Status::Warning, _) => 1,
            (Status::Error, Some(e)) if e.code == "internal" => 3,
            (Status::Error, _) => 2,
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Outcome of one computation: a result value and warnings, or an error.
pub struct Outcome {
    pub result: Value,
    pub warnings: Vec<String>,
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Parses and runs a spec given as raw bytes. `seed` overrides the spec's
/// seed.
pub fn run_bytes(bytes: &[u8], seed: Option<u64>) -> Report {
    let hash = sha256_hex(bytes);
    let mut report = Report {
        tool: "llvkit",
        version: VERSION,
        input_sha256: hash,
        kind: None,
        seed: seed.unwrap_or(0),
        status: Status::Ok,
        result: None,
        warnings: Vec::new(),
        error: None,
        timing_ms: None,
    };
    let spec: ProblemSpec = match serde_json::from_slice(bytes) {
        Ok(s) => s,
        Err(e) => {
            report.status = Status::Error;
            report.error = Some(ErrorInfo { code: "schema".into(), message: e.to_string() });
            return report;
        }
    };
    report.kind = Some(spec.kind.name());
    report.seed = seed.or(spec.seed).unwrap_or(0);
    match run(&spec, report.seed) {
        Ok(out) => {
            report.status = if out.warnings.is_empty() { Status::Ok } else { Status::Warning };
            report.result = Some(out.result);
            report.warnings = out.warnings;
        }
        Err(f) => {
            report.status = Status::Error;
            report.error = Some(match f {
                Failure::Input(m) => ErrorInfo { code: "schema".into(), message: m },
                Failure::Library(e) => ErrorInfo { code: e.code().into(), message: e.to_string() },
            });
        }
    }
    report
}

fn payload<T: serde::de::DeserializeOwned>(v: &Value) -> Result<T, Failure> {
    let v = if v.is_null() { json!({}) } else { v.clone() };
    serde_json::from_value(v).map_err(|e| Failure::Input(format!("payload: {e}")))
}

pub fn run(spec: &ProblemSpec, seed: u64) -> Result<Outcome, Failure> {
    match spec.kind {
        Kind::Llv => run_llv(&payload(&spec.payload)?, &spec.budget, seed),
        Kind::Decompose => run_decompose(&payload(&spec.payload)?, &spec.budget, seed),
        Kind::Involution => run_involution(&payload(&spec.payload)?),
        Kind::Spinor => run_spinor(&payload(&spec.payload)?, seed),
        Kind::Clifford => run_clifford(&payload(&spec.payload)?),
        Kind::Witt => run_witt(&payload(&spec.payload)?),
        Kind::Groupalg => run_groupalg(&payload(&spec.payload)?),
        Kind::Selftest => run_selftest(&payload(&spec.payload)?, seed),
    }
}

fn value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report values serialize")
}

#[derive(Serialize)]
struct IdealReport {
    dim: usize,
    invariants: Option<llvkit::lie::LieInvariants>,
}

fn ideal_reports(g: &MatrixLieAlgebra, seed: u64) -> Result<Vec<IdealReport>, Failure> {
    let d = minimal_ideals(g)?;
    if !d.verify(g) {
        return Err(Error::Internal("ideal decomposition does not verify".into()).into());
    }
    d.ideals
        .iter()
        .map(|i| Ok(IdealReport { dim: i.dim(), invariants: Some(invariants_report(i, seed)?) }))
        .collect()
}

fn run_llv(p: &LlvPayload, budget: &Budget, seed: u64) -> Result<Outcome, Failure> {
    let r = p.algebra.build()?;
    let sampler = budget.sampler(seed);
    let (res, action) = match &p.action {
        None => (llv_algebra(&r, &sampler)?, None),
        Some(a) => {
            let act = a.on_algebra(&r)?;
            (llv_pre_g(&r, &act, &sampler)?, Some(act))
        }
    };
    let g = &res.algebra;
    let mut out = BTreeMap::new();
    out.insert("algebra_dim", json!(r.dim()));
    out.insert("llv_dim", json!(g.dim()));
    out.insert("graded_dims", value(&g.graded_dims()));
    out.insert("jordan_lefschetz", json!(is_jordan_lefschetz(g)?));
    out.insert("lefschetz_elements", value(&res.lefschetz_elements));
    if p.invariants {
        out.insert("semisimple", json!(killing_semisimple(g).1));
        if g.dim() > 0 {
            out.insert("invariants", value(&invariants_report(g, seed).ok()));
        }
    }
    if let Some(act) = action {
        let (rg, inc) = invariants(&r, &act)?;
        let restricted = restrict(g, &inc)?;
        out.insert("invariant_ring_dim", json!(rg.dim()));
        out.insert("restricted_dim", json!(restricted.dim()));
        if p.invariants {
            out.insert("restricted_ideals", value(&ideal_reports(&restricted, seed)?));
        }
    }
    Ok(Outcome { result: value(&out), warnings: res.warnings })
}

fn run_decompose(p: &DecomposePayload, budget: &Budget, seed: u64) -> Result<Outcome, Failure> {
    let (g, warnings) = match (&p.generators, &p.algebra) {
        (Some(gens), None) => {
            let n = gens.first().map_or(0, Mat::rows);
            if gens.iter().any(|x| x.shape() != (n, n)) {
                return Err(Failure::Input("generators must be square of equal size".into()));
            }
            (closure(gens, n), Vec::new())
        }
        (None, Some(a)) => {
            let r = a.build()?;
            let sampler = budget.sampler(seed);
            match &p.action {
                None => {
                    let res = llv_algebra(&r, &sampler)?;
                    (res.algebra, res.warnings)
                }
                Some(act) => {
                    let act = act.on_algebra(&r)?;
                    let res = llv_pre_g(&r, &act, &sampler)?;
                    let (_, inc) = invariants(&r, &act)?;
                    (restrict(&res.algebra, &inc)?, res.warnings)
                }
            }
        }
        _ => return Err(Failure::Input("give exactly one of `generators` or `algebra`".into())),
    };
    let ideals = ideal_reports(&g, seed)?;
    Ok(Outcome {
        result: json!({
            "dim": g.dim(),
            "ideal_dims": ideals.iter().map(|i| i.dim).collect::<Vec<_>>(),
            "ideals": value(&ideals),
        }),
        warnings,
    })
}

fn run_involution(p: &InvolutionPayload) -> Result<Outcome, Failure> {
    let a = match p {
        InvolutionPayload::Adjoint(b) => adjoint_involution(b)?,
        InvolutionPayload::Transpose(n) => adjoint_involution(&Mat::identity(*n))?,
        InvolutionPayload::GroupAlgebra { group, factor } => {
            let g = group.build()?;
            let set = central_idempotents(&g);
            if *factor >= set.len() {
                return Err(Failure::Input(format!("factor {factor} out of range ({} factors)", set.len())));
            }
            group_algebra_factor(&g, &set, *factor)?
        }
    };
    let (skew, derived) = skew_and_derived(&a)?;
    Ok(Outcome {
        result: json!({
            "dim": a.dim(),
            "center_dim": a.center().len(),
            "kind": value(&a.kind()?),
            "type": value(&a.classify_type()?),
            "degree": a.degree()?,
            "skew_dim": skew.dim(),
            "derived_skew_dim": derived.dim(),
        }),
        warnings: Vec::new(),
    })
}

fn run_spinor(p: &SpinorPayload, seed: u64) -> Result<Outcome, Failure> {
    if p.n == 0 || p.n > 5 {
        return Err(Failure::Input("n must be between 1 and 5".into()));
    }
    let ctx = SpinorContext::new(p.n);
    let basis = ctx.so_basis();
    let reps = basis.iter().map(|x| spinor_rep(x, &ctx)).collect::<llvkit::Result<Vec<_>>>()?;
    let mut mismatches = 0;
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if spinor_rep(&basis[i].bracket(&basis[j]), &ctx)? != reps[i].bracket(&reps[j]) {
                mismatches += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deriv_bad = 0;
    for _ in 0..p.derivative_samples {
        let n = p.n;
        let mut a = Mat::from_fn(n, n, |_, _| Rational::from_int(rng.random_range(-3..=3)));
        let t = a.trace();
        a[(n - 1, n - 1)] -= &t;
        if dual_apply(|x| wedge_power(x, &ctx), &a) != spinor_rep(&ctx.gl_embed(&a), &ctx)? {
            deriv_bad += 1;
        }
    }
    let mut out = BTreeMap::new();
    out.insert("so_dim", json!(basis.len()));
    out.insert("module_dim", json!(ctx.module_dim()));
    out.insert("homomorphism", json!({ "pairs": basis.len() * basis.len(), "mismatches": mismatches }));
    out.insert("derivative", json!({ "samples": p.derivative_samples, "mismatches": deriv_bad }));
    let mut warnings = Vec::new();
    if mismatches + deriv_bad > 0 {
        warnings.push("spinor identities failed".to_string());
    }
    if let Some(w) = &p.weight {
        let g = w.group.build()?;
        let gens = g.generators().to_vec();
        let rho = RepMat::from_generator_images(g, &gens, &w.generator_images)?;
        let s = power_weight_setup(&rho, w.copies)?;
        let top = weight_of_vector(&s.top, &s.cartan)?;
        let bottom = weight_of_vector(&s.bottom, &s.cartan)?;
        let highest = highest_weight_check(&s.positive, &s.top);
        if !highest {
            warnings.push("top form is not annihilated by the positive part".into());
        }
        out.insert(
            "weight",
            json!({
                "invariant_so_dim": s.invariant_so.dim(),
                "positive_dim": s.positive.dim(),
                "top_weight": value(&top),
                "bottom_weight": value(&bottom),
                "top_is_highest": highest,
            }),
        );
    }
    if let Some(c) = &p.contraction {
        if c.diag.iter().any(Rational::is_zero) {
            return Err(Failure::Input("contraction form must be nondegenerate".into()));
        }
        let m = c.diag.len();
        let ctx = SymContext::new(QuadraticSpace::diagonal(&c.diag), c.degree);
        let k = harmonic_kernel(c.degree, &ctx)?;
        let rank = if c.degree >= 2 { Some(llvkit::linalg::rank(&contraction(c.degree, &ctx)?)) } else { None };
        out.insert(
            "contraction",
            json!({
                "sym_dim": sym_dim(m, c.degree),
                "kernel_dim": k.dim(),
                "contraction_rank": rank,
            }),
        );
    }
    if let Some(sh) = &p.sh_embedding {
        let r = sh_embedding_check(&sh.form, sh.degree)?;
        if !r.passed() {
            warnings.push("SH embedding check failed".into());
        }
        out.insert("sh_embedding", value(&r));
    }
    Ok(Outcome { result: value(&out), warnings })
}

fn run_clifford(p: &CliffordPayload) -> Result<Outcome, Failure> {
    let c = CliffordAlgebra::new(QuadraticSpace::new(p.form.clone())?)?;
    let mut samples = Vec::new();
    for e in &p.elements {
        samples.push(c.element(e.clone())?);
    }
    for prod in &p.vector_products {
        let mut x = c.one();
        for v in prod {
            if v.len() != c.n() {
                return Err(Failure::Input(format!("vectors must have length {}", c.n())));
            }
            x = c.cmul(&x, &c.vector(v))?;
        }
        samples.push(x);
    }
    let mut rows = Vec::new();
    for x in &samples {
        let gspin = c.is_gspin(x);
        let (rep, lambda) = if gspin {
            let m = c.vector_rep(x)?;
            let l = is_similitude(&m, c.space());
            (Some(m), l)
        } else {
            (None, None)
        };
        rows.push(json!({
            "coefficients": value(&x.coeffs()),
            "even": x.is_even(),
            "gspin": gspin,
            "norm": value(&c.norm(x)?.as_scalar()),
            "vector_rep": value(&rep),
            "similitude": value(&lambda),
        }));
    }
    let eq = if p.action.is_empty() { None } else { Some(equivariance_check(&c, &p.action, &samples)?) };
    let warnings = match &eq {
        Some(r) if !r.passed() => vec!["equivariance identities failed".to_string()],
        _ => Vec::new(),
    };
    Ok(Outcome {
        result: json!({
            "n": c.n(),
            "dim": c.dim(),
            "diagonal": value(&c.diag()),
            "change_of_basis": value(c.change_of_basis()),
            "elements": rows,
            "equivariance": value(&eq),
        }),
        warnings,
    })
}

fn run_witt(p: &WittPayload) -> Result<Outcome, Failure> {
    let q = QuadraticSpace::new(p.form.clone())?;
    let w = witt_cancel_equivariant(&q, &p.e, &p.f, p.m, &p.action)?;
    let replay_ok = w.replay(&q)? == w.map;
    Ok(Outcome {
        result: json!({
            "map": value(&w.map),
            "reflections": value(&w.reflections),
            "matched": w.matched,
            "isometry": q.is_isometry(&w.map),
            "equivariant": p.action.iter().all(|g| g.mul(&w.map) == w.map.mul(g)),
            "replay_matches": replay_ok,
        }),
        warnings: Vec::new(),
    })
}

fn run_groupalg(p: &GroupalgPayload) -> Result<Outcome, Failure> {
    let g = p.group.build()?;
    let set = central_idempotents(&g);
    let sigma_fixed: Vec<bool> = set.idempotents.iter().map(|e| group_involution(&g, e) == *e).collect();
    let mut out = BTreeMap::new();
    out.insert("order", json!(g.order()));
    out.insert("conjugacy_classes", json!(g.conjugacy_classes().len()));
    out.insert("idempotent_count", json!(set.len()));
    out.insert("idempotents", value(&set.idempotents));
    out.insert("verified", json!(set.verify(&g)));
    out.insert("sigma_fixed", json!(sigma_fixed));
    if let Some(images) = &p.rep {
        let gens = g.generators().to_vec();
        let rep = RepMat::from_generator_images(g.clone(), &gens, images)?;
        let iso: Vec<usize> = isotypic_components(&rep, &set).iter().map(|(_, s)| s.dim()).collect();
        out.insert("rep_dim", json!(rep.dim()));
        out.insert("isotypic_dims", json!(iso));
        out.insert("invariant_dim", json!(invariant_dimension(&rep)));
    }
    Ok(Outcome { result: value(&out), warnings: Vec::new() })
}

fn run_selftest(p: &SelftestPayload, seed: u64) -> Result<Outcome, Failure> {
    let outcomes = suite::run_all(seed, p.filter.as_deref());
    if outcomes.is_empty() {
        return Err(Failure::Input("filter matches no suite".into()));
    }
    Ok(selftest_outcome(&outcomes))
}

pub fn selftest_outcome(outcomes: &[suite::CriterionOutcome]) -> Outcome {
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let warnings = outcomes.iter().filter(|o| !o.passed).map(|o| o.line()).collect();
    Outcome {
        result: json!({
            "criteria": outcomes.len(),
            "passed": passed,
            "failed": outcomes.len() - passed,
            "outcomes": value(&outcomes),
        }),
        warnings,
    }
}
