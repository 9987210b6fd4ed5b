//! The acceptance suite: twelve exact checks, each compared against an
//! independent reference computation from [`crate::oracle`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use llvkit::clifford::{equivariance_check, CliffordAlgebra, CliffordElement};
use llvkit::exact::{dual_apply, factor_rational};
use llvkit::graded::{exterior_algebra, invariants, surface_ring, truncated_polynomial, GroupActionOnAlgebra};
use llvkit::groupalg::{central_idempotents, fixed_dimension, group_involution, lefschetz_identity, FiniteGroup, RepMat};
use llvkit::involution::{adjoint_involution, InvolutionType};
use llvkit::lie::{minimal_ideals, orthogonal_algebra};
use llvkit::linalg::{det, inverse, Subspace};
use llvkit::llv::{is_jordan_lefschetz, llv_algebra, llv_pre_g, restrict, verify_tensor_llv, LefschetzSampler};
use llvkit::quadform::{mukai, witt_cancel_equivariant, QuadraticSpace};
use llvkit::spinor::{
    harmonic_kernel, highest_weight_check, power_weight_setup, spinor_rep, sym_dim, sym_rep, contraction, weight_of_vector,
    wedge_power, SpinorContext, SymContext,
};
use llvkit::{qi, Mat, Poly, Rational};

use crate::oracle;

/// One named check inside a criterion.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub suite: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl CriterionOutcome {
    /// A single summary line.
    pub fn line(&self) -> String {
        let failed: Vec<&str> = self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("criterion {:>2} [{}] {status}: {} ({}/{} checks)", self.id, self.suite, self.title, self.checks.len() - failed.len(), self.checks.len());
        if !failed.is_empty() {
            s.push_str(&format!("; failed: {}", failed.join(", ")));
        }
        s
    }
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    fn error(&mut self, name: impl Into<String>, e: impl std::fmt::Display) {
        self.check(name, false, format!("error: {e}"));
    }
}

pub struct Criterion {
    pub id: usize,
    pub suite: &'static str,
    pub title: &'static str,
    run: fn(u64, &mut Recorder),
}

pub const CRITERIA: [Criterion; 12] = [
    Criterion { id: 1, suite: "llv", title: "LLV of exterior algebras is so(V ⊕ V*)", run: c1_exterior },
    Criterion { id: 2, suite: "llv", title: "LLV of surface-model rings is so of the Mukai lattice", run: c2_surface },
    Criterion { id: 3, suite: "llv", title: "LLV of a tensor product is the block sum", run: c3_tensor },
    Criterion { id: 4, suite: "llv", title: "quotient by a swap decomposes with sl2 ideals", run: c4_quotient },
    Criterion { id: 5, suite: "involution", title: "adjoint involutions classified by skew dimension", run: c5_involution },
    Criterion { id: 6, suite: "spinor", title: "spinor homomorphism and derivative of wedge powers", run: c6_spinor },
    Criterion { id: 7, suite: "spinor", title: "contraction kernel dimension and equivariance", run: c7_contraction },
    Criterion { id: 8, suite: "spinor", title: "top exterior form is a highest weight vector", run: c8_weight },
    Criterion { id: 9, suite: "clifford", title: "Clifford star, GSpin vector representation, equivariance", run: c9_clifford },
    Criterion { id: 10, suite: "witt", title: "equivariant Witt cancellation", run: c10_witt },
    Criterion { id: 11, suite: "groupalg", title: "central idempotents of group algebras", run: c11_groupalg },
    Criterion { id: 12, suite: "groupalg", title: "Lefschetz trace identity", run: c12_lefschetz },
];

pub fn run_criterion(c: &Criterion, seed: u64) -> CriterionOutcome {
    let mut rec = Recorder::new();
    (c.run)(seed, &mut rec);
    let passed = !rec.checks.is_empty() && rec.checks.iter().all(|c| c.passed);
    CriterionOutcome { id: c.id, suite: c.suite, title: c.title, passed, checks: rec.checks }
}

/// Criteria whose suite name or number matches `filter`.
pub fn select(filter: Option<&str>) -> Vec<&'static Criterion> {
    CRITERIA
        .iter()
        .filter(|c| filter.is_none_or(|f| f == c.suite || f == c.id.to_string() || f == "all"))
        .collect()
}

pub fn run_all(seed: u64, filter: Option<&str>) -> Vec<CriterionOutcome> {
    select(filter).into_iter().map(|c| run_criterion(c, seed)).collect()
}

fn rng(seed: u64, id: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (id.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

fn rand_mat(rng: &mut ChaCha8Rng, n: usize, r: i64) -> Mat {
    Mat::from_fn(n, n, |_, _| qi(rng.random_range(-r..=r)))
}

fn c1_exterior(seed: u64, rec: &mut Recorder) {
    for g in [1usize, 2] {
        let n = 2 * g;
        let res = match llv_algebra(&exterior_algebra(n), &LefschetzSampler::with_seed(seed)) {
            Ok(r) => r,
            Err(e) => return rec.error(format!("g={g} llv"), e),
        };
        let so = oracle::spinor_image(n);
        let expected = (2 * n) * (2 * n - 1) / 2;
        let dim = res.algebra.dim();
        rec.check(format!("g={g} dim"), dim == expected, format!("dim llv = {dim}, dim so({}) = {expected}", 2 * n));
        let equal = res.algebra.subspace() == &so;
        let contained = res.algebra.subspace().is_subspace_of(&so);
        rec.check(format!("g={g} equals so(V~)"), equal, format!("llv ⊆ so(V~): {contained}, equal: {equal}"));
        match is_jordan_lefschetz(&res.algebra) {
            Ok(j) => rec.check(format!("g={g} Jordan-Lefschetz"), j, format!("graded dims {:?}", res.algebra.graded_dims())),
            Err(e) => rec.error(format!("g={g} Jordan-Lefschetz"), e),
        }
    }
}

fn c2_surface(seed: u64, rec: &mut Recorder) {
    let forms: [(usize, usize); 3] = [(3, 1), (5, 3), (22, 3)];
    for (m, pos) in forms {
        let d: Vec<Rational> = (0..m).map(|i| qi(if i < pos { 1 } else { -1 })).collect();
        let b = Mat::diag(&d);
        let r = match surface_ring(&b) {
            Ok(r) => r,
            Err(e) => return rec.error(format!("m={m} ring"), e),
        };
        let res = match llv_algebra(&r, &LefschetzSampler::with_seed(seed)) {
            Ok(r) => r,
            Err(e) => return rec.error(format!("m={m} llv"), e),
        };
        let expected = (m + 2) * (m + 1) / 2;
        rec.check(format!("m={m} dim"), res.algebra.dim() == expected, format!("dim llv = {}, expected {expected}", res.algebra.dim()));
        let lat = match mukai(&b) {
            Ok(l) => l,
            Err(e) => return rec.error(format!("m={m} mukai"), e),
        };
        let gram = lat.space.gram();
        let skew = res.algebra.basis().iter().all(|x| x.transpose().mul(gram).add(&gram.mul(x)).is_zero());
        rec.check(format!("m={m} skew for Mukai form"), skew, "Xᵀ·G + G·X = 0 on a basis");
        let sig = lat.space.signature();
        let oracle_sig = oracle::signature(gram);
        rec.check(
            format!("m={m} Mukai signature"),
            (sig.positive, sig.negative, sig.zero) == oracle_sig && oracle_sig == (pos + 1, m - pos + 1, 0),
            format!("library {sig:?}, characteristic-polynomial oracle {oracle_sig:?}"),
        );
    }
}

fn c3_tensor(seed: u64, rec: &mut Recorder) {
    let x3 = truncated_polynomial(2);
    let s3 = match surface_ring(&Mat::identity(3)) {
        Ok(s) => s,
        Err(e) => return rec.error("surface ring", e),
    };
    let sampler = LefschetzSampler::with_seed(seed);
    for (name, r, s, expected) in [("x3⊗x3", &x3, &x3, (3, 3)), ("surface⊗x3", &s3, &x3, (10, 3))] {
        match verify_tensor_llv(r, s, &sampler) {
            Ok(rep) => {
                rec.check(
                    format!("{name} dims"),
                    (rep.dim_r, rep.dim_s) == expected && rep.dim_tensor == rep.dim_r + rep.dim_s,
                    format!("{} + {} vs {}", rep.dim_r, rep.dim_s, rep.dim_tensor),
                );
                rec.check(format!("{name} block embedding"), rep.block_equal, "llv(R)⊗1 + 1⊗llv(S) = llv(R⊗S)");
            }
            Err(e) => rec.error(name, e),
        }
    }
}

fn c4_quotient(seed: u64, rec: &mut Recorder) {
    let r = exterior_algebra(4);
    let swap = Mat::from_i64(4, 4, &[0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0]);
    let act = match GroupActionOnAlgebra::on_exterior(FiniteGroup::cyclic(2), &[Mat::identity(4), swap], &r) {
        Ok(a) => a,
        Err(e) => return rec.error("action", e),
    };
    let res = match llv_pre_g(&r, &act, &LefschetzSampler::with_seed(seed)) {
        Ok(x) => x,
        Err(e) => return rec.error("llv_pre_G", e),
    };
    let (rg, inc) = match invariants(&r, &act) {
        Ok(x) => x,
        Err(e) => return rec.error("invariant ring", e),
    };
    let restricted = match restrict(&res.algebra, &inc) {
        Ok(g) => g,
        Err(e) => return rec.error("restriction", e),
    };
    let dims = match minimal_ideals(&restricted) {
        Ok(d) => {
            rec.check("decomposition verifies", d.verify(&restricted), "independent commuting ideals summing to g");
            d.dims()
        }
        Err(e) => return rec.error("minimal ideals", e),
    };
    let brute = oracle::ideal_dims_brute_force(restricted.basis(), rg.dim());
    rec.check("ideal dims match oracle", dims == brute, format!("library {dims:?}, brute force {brute:?}"));
    rec.check("an sl2 ideal of dim 3", dims.contains(&3), format!("dim llv_G = {}, dim R^G = {}", restricted.dim(), rg.dim()));
}

fn random_nondegenerate(rng: &mut ChaCha8Rng, n: usize, alternating: bool) -> Mat {
    loop {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = qi(rng.random_range(-3..=3));
                if i == j {
                    if !alternating {
                        m[(i, i)] = v;
                    }
                } else {
                    m[(i, j)] = v.clone();
                    m[(j, i)] = if alternating { -v } else { v };
                }
            }
        }
        if !oracle::det_leibniz(&m).is_zero() {
            return m;
        }
    }
}

fn c5_involution(seed: u64, rec: &mut Recorder) {
    let mut rng = rng(seed, 5);
    let (mut ok_sym, mut ok_alt) = (0, 0);
    let mut failures = Vec::new();
    for case in 0..50 {
        let alternating = case % 2 == 1;
        let n = if alternating { 2 * rng.random_range(1..=2) } else { rng.random_range(1..=4) };
        let b = random_nondegenerate(&mut rng, n, alternating);
        let a = match adjoint_involution(&b) {
            Ok(a) => a,
            Err(e) => {
                failures.push(format!("case {case}: {e}"));
                continue;
            }
        };
        // skew elements solve Xᵀb + bX = 0 inside M_n; counted by the oracle's own elimination
        let binv = inverse(&b).expect("nondegenerate");
        let rows: Vec<Vec<Rational>> = (0..n * n)
            .map(|k| {
                let e = Mat::unit(n, n, k / n, k % n);
                binv.mul(&e.transpose()).mul(&b).add(&e).flatten()
            })
            .collect();
        let oracle_skew = n * n - oracle::rank(&rows);
        let formula = if alternating { n * (n + 1) / 2 } else { n * (n - 1) / 2 };
        let skew = a.skew().len();
        let ty = a.classify_type();
        let want = if alternating { InvolutionType::Symplectic } else { InvolutionType::Orthogonal };
        if skew == formula && oracle_skew == formula && ty.as_ref().ok() == Some(&want) {
            if alternating {
                ok_alt += 1;
            } else {
                ok_sym += 1;
            }
        } else {
            failures.push(format!("case {case}: n={n} skew {skew} oracle {oracle_skew} formula {formula} type {ty:?}"));
        }
    }
    rec.check("symmetric forms", ok_sym == 25, format!("{ok_sym}/25 orthogonal with skew dim n(n−1)/2"));
    rec.check("alternating forms", ok_alt == 25, format!("{ok_alt}/25 symplectic with skew dim n(n+1)/2"));
    if !failures.is_empty() {
        rec.check("failures", false, failures.join("; "));
    }
}

fn c6_spinor(seed: u64, rec: &mut Recorder) {
    for n in 1..=3 {
        let ctx = SpinorContext::new(n);
        let basis = ctx.so_basis();
        let flat: Vec<Vec<Rational>> = basis.iter().map(Mat::flatten).collect();
        let spans = Subspace::from_vectors(4 * n * n, &flat) == *orthogonal_algebra(&ctx.standard_form()).subspace();
        rec.check(format!("n={n} basis spans so(V~)"), spans && basis.len() == n * (2 * n - 1), format!("{} elements", basis.len()));
        let reps: Result<Vec<Mat>, _> = basis.iter().map(|x| spinor_rep(x, &ctx)).collect();
        let reps = match reps {
            Ok(r) => r,
            Err(e) => return rec.error(format!("n={n} spinor"), e),
        };
        let mut bad = 0;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                match spinor_rep(&basis[i].bracket(&basis[j]), &ctx) {
                    Ok(r) if r == reps[i].bracket(&reps[j]) => {}
                    _ => bad += 1,
                }
            }
        }
        rec.check(format!("n={n} homomorphism"), bad == 0, format!("{} pairs, {bad} mismatches", basis.len() * basis.len()));
    }
    let mut rng = rng(seed, 6);
    let mut bad = 0;
    for _ in 0..20 {
        let n = rng.random_range(2..=3);
        let ctx = SpinorContext::new(n);
        let mut a = rand_mat(&mut rng, n, 4);
        let t = a.trace();
        a[(n - 1, n - 1)] -= &t;
        let d = dual_apply(|x| wedge_power(x, &ctx), &a);
        if spinor_rep(&ctx.gl_embed(&a), &ctx).ok() != Some(d) {
            bad += 1;
        }
    }
    rec.check("derivative of wedge powers", bad == 0, format!("20 trace-zero samples, {bad} mismatches"));
}

fn c7_contraction(seed: u64, rec: &mut Recorder) {
    let mut rng = rng(seed, 7);
    let (mut dim_ok, mut dim_total, mut eq_ok, mut eq_total) = (0, 0, 0, 0);
    let mut failures = Vec::new();
    for m in 1..=6usize {
        let d: Vec<Rational> = (0..m)
            .map(|_| {
                let v = rng.random_range(1..=3);
                qi(if rng.random_bool(0.5) { v } else { -v })
            })
            .collect();
        let qs = QuadraticSpace::diagonal(&d);
        for deg in 0..=4usize {
            let ctx = SymContext::new(qs.clone(), deg);
            dim_total += 1;
            let expected = oracle::binomial(deg + m - 1, m - 1) - if deg >= 2 { oracle::binomial(deg - 2 + m - 1, m - 1) } else { 0 };
            match harmonic_kernel(deg, &ctx) {
                Ok(k) if k.dim() == expected && sym_dim(m, deg) == oracle::binomial(deg + m - 1, m - 1) => dim_ok += 1,
                Ok(k) => failures.push(format!("m={m} D={deg}: kernel {} expected {expected}", k.dim())),
                Err(e) => failures.push(format!("m={m} D={deg}: {e}")),
            }
            if deg < 2 || m < 2 {
                continue;
            }
            let delta = match contraction(deg, &ctx) {
                Ok(x) => x,
                Err(e) => {
                    failures.push(format!("m={m} D={deg}: {e}"));
                    continue;
                }
            };
            for _ in 0..3 {
                let i = rng.random_range(0..m);
                let j = (i + rng.random_range(1..m)) % m;
                // q⁻¹(E_ij − E_ji) is skew for diagonal q
                let x = Mat::unit(m, m, i, j).scale(&d[i].recip()).sub(&Mat::unit(m, m, j, i).scale(&d[j].recip()));
                eq_total += 1;
                if delta.mul(&sym_rep(&x, deg)) == sym_rep(&x, deg - 2).mul(&delta) {
                    eq_ok += 1;
                } else {
                    failures.push(format!("m={m} D={deg}: not equivariant for ({i},{j})"));
                }
            }
        }
    }
    rec.check("kernel dimensions", dim_ok == dim_total, format!("{dim_ok}/{dim_total} (m ≤ 6, D ≤ 4)"));
    rec.check("so-equivariance", eq_ok == eq_total, format!("{eq_ok}/{eq_total} sampled elements"));
    if !failures.is_empty() {
        rec.check("failures", false, failures.join("; "));
    }
}

/// The standard two-dimensional representation of S₃ on `{x : Σxᵢ = 0}`.
pub fn s3_standard() -> llvkit::Result<RepMat> {
    let perm = RepMat::permutation(FiniteGroup::symmetric(3))?;
    let sub = Subspace::from_vectors(3, &[vec![qi(1), qi(-1), qi(0)], vec![qi(0), qi(1), qi(-1)]]);
    let mats = perm
        .mats()
        .iter()
        .map(|g| sub.restrict(g).ok_or_else(|| llvkit::Error::Internal("sum-zero plane not invariant".into())))
        .collect::<llvkit::Result<Vec<_>>>()?;
    RepMat::new(perm.group().clone(), mats)
}

fn c8_weight(_seed: u64, rec: &mut Recorder) {
    let cases: Vec<(usize, llvkit::Result<RepMat>)> = vec![(1, Ok(RepMat::trivial(FiniteGroup::trivial(), 1))), (2, s3_standard())];
    for (k, rho) in cases {
        let n = 2;
        let rho = match rho {
            Ok(r) => r,
            Err(e) => return rec.error(format!("k={k} representation"), e),
        };
        let s = match power_weight_setup(&rho, n) {
            Ok(s) => s,
            Err(e) => return rec.error(format!("k={k} setup"), e),
        };
        // on the top form the gl-part acts by its trace, shifted by −½ trace
        let expected: Vec<Rational> = s.cartan_tilde.iter().map(|h| h.submatrix(0, k * n, 0, k * n).trace() / qi(2)).collect();
        let all_half = expected.iter().all(|w| *w == Rational::new(k as i64, 2));
        match weight_of_vector(&s.top, &s.cartan) {
            Ok(w) => rec.check(format!("k={k} top weight"), w == expected && all_half, format!("{w:?}, oracle {expected:?}")),
            Err(e) => rec.error(format!("k={k} top weight"), e),
        }
        let annihilated = highest_weight_check(&s.positive, &s.top);
        let nontrivial = s.positive.dim() > 0 && !highest_weight_check(&s.positive, &s.bottom);
        rec.check(
            format!("k={k} annihilated by positive part"),
            annihilated && nontrivial,
            format!("dim so(V~)^G = {}, positive part dim {}", s.invariant_so.dim(), s.positive.dim()),
        );
    }
}

fn random_element(rng: &mut ChaCha8Rng, c: &CliffordAlgebra) -> CliffordElement {
    c.element((0..c.dim()).map(|_| qi(rng.random_range(-2..=2))).collect()).expect("sized")
}

fn random_anisotropic(rng: &mut ChaCha8Rng, c: &CliffordAlgebra) -> CliffordElement {
    loop {
        let v: Vec<Rational> = (0..c.n()).map(|_| qi(rng.random_range(-2..=2))).collect();
        if !c.space().q(&v).is_zero() {
            return c.vector(&v);
        }
    }
}

fn c9_clifford(seed: u64, rec: &mut Recorder) {
    let mut rng = rng(seed, 9);
    for (name, q3) in [("diag(1,1,1)", 1), ("diag(1,1,-1)", -1)] {
        let c = CliffordAlgebra::diagonal(&[qi(1), qi(1), qi(q3)]);
        let mut bad = 0;
        for _ in 0..200 {
            let (a, b) = (random_element(&mut rng, &c), random_element(&mut rng, &c));
            let lhs = c.star(&c.cmul(&a, &b).expect("same algebra"));
            let rhs = c.cmul(&c.star(&b), &c.star(&a)).expect("same algebra");
            if lhs != rhs || c.star(&c.star(&a)) != a {
                bad += 1;
            }
        }
        rec.check(format!("{name} star anti-involution"), bad == 0, format!("200 pairs, {bad} failures"));

        // products of an even number of anisotropic vectors lie in GSpin
        let mut samples = vec![c.one(), c.monomial(0b011), c.one().add(&c.monomial(0b011)).expect("same algebra")];
        for k in 0..20 {
            let len = if k % 2 == 0 { 2 } else { 4 };
            let mut x = c.one();
            for _ in 0..len {
                x = c.cmul(&x, &random_anisotropic(&mut rng, &c)).expect("same algebra");
            }
            samples.push(x);
        }
        let mut bad = Vec::new();
        for (i, x) in samples.iter().enumerate() {
            if !c.is_gspin(x) {
                bad.push(format!("sample {i} not in GSpin"));
                continue;
            }
            let lambda = c.similitude_factor(x);
            let norm = c.norm(x).ok().and_then(|n| n.as_scalar());
            match (lambda, norm) {
                (Ok(Some(l)), Some(n)) if !n.is_zero() && l == (&n * &n).recip() => {}
                (l, n) => bad.push(format!("sample {i}: λ {l:?}, x·x* {n:?}")),
            }
        }
        rec.check(format!("{name} GSpin similitudes"), bad.is_empty(), if bad.is_empty() { format!("{} samples, λ = (x·x*)⁻²", samples.len()) } else { bad.join("; ") });

        let flip = Mat::diag(&[qi(-1), qi(1), qi(1)]);
        let swap = Mat::from_i64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
        let mut all = samples.clone();
        all.extend((0..8u32).map(|m| c.monomial(m)));
        all.extend((0..10).map(|_| random_element(&mut rng, &c)));
        match equivariance_check(&c, &[Mat::identity(3), flip, swap], &all) {
            Ok(r) => rec.check(format!("{name} equivariance"), r.passed() && r.pi_checks > 0, format!("{r:?}")),
            Err(e) => rec.error(format!("{name} equivariance"), e),
        }
    }
}

struct WittCase {
    q: QuadraticSpace,
    e: Mat,
    f: Mat,
    m: usize,
    action: Vec<Mat>,
}

fn random_witt_case(rng: &mut ChaCha8Rng) -> WittCase {
    let n = rng.random_range(1..=6usize);
    let m = rng.random_range(0..=n);
    let d: Vec<Rational> = (0..n)
        .map(|_| {
            let v = rng.random_range(1..=2);
            qi(if rng.random_bool(0.5) { v } else { -v })
        })
        .collect();
    let q = QuadraticSpace::diagonal(&d);
    // sign patterns trivial on the first m coordinates, optionally a swap of
    // two later coordinates with equal q-values
    let mut gens: Vec<Mat> = Vec::new();
    for _ in 0..rng.random_range(0..=2) {
        let s: Vec<Rational> = (0..n).map(|i| qi(if i >= m && rng.random_bool(0.5) { -1 } else { 1 })).collect();
        gens.push(Mat::diag(&s));
    }
    let pairs: Vec<(usize, usize)> = (m..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| d[i] == d[j]).collect();
    if !pairs.is_empty() && rng.random_bool(0.5) {
        let (i, j) = pairs[rng.random_range(0..pairs.len())];
        let mut p = Mat::identity(n);
        p.swap_cols(i, j);
        gens.truncate(1);
        if let Some(s) = gens.first_mut() {
            let v = s[(i, i)].clone();
            s[(j, j)] = v;
        }
        gens.push(p);
    }
    let mut action = vec![Mat::identity(n)];
    for g in &gens {
        let new: Vec<Mat> = action.iter().map(|a| a.mul(g)).collect();
        for x in new {
            if !action.contains(&x) {
                action.push(x);
            }
        }
    }
    // f = T·e for a product of reflections in G-fixed vectors, then the
    // complement rescaled
    let fixed: Vec<usize> = (0..n).filter(|&i| action.iter().all(|g| g[(i, i)] == qi(1) && (0..n).all(|j| j == i || g[(j, i)].is_zero()))).collect();
    let mut t = Mat::identity(n);
    for _ in 0..rng.random_range(0..=3) {
        let mut u = vec![qi(0); n];
        for &i in &fixed {
            u[i] = qi(rng.random_range(-2..=2));
        }
        if q.q(&u).is_zero() {
            continue;
        }
        if let Ok(r) = llvkit::quadform::reflection_matrix(&u, &q) {
            t = r.mul(&t);
        }
    }
    let mut f = t.clone();
    for j in m..n {
        let s = qi(rng.random_range(1..=3) * if rng.random_bool(0.5) { 1 } else { -1 });
        for i in 0..n {
            let v = &f[(i, j)] * &s;
            f[(i, j)] = v;
        }
    }
    WittCase { q, e: Mat::identity(n), f, m, action }
}

fn c10_witt(seed: u64, rec: &mut Recorder) {
    let mut rng = rng(seed, 10);
    let (mut iso, mut equiv, mut carries, mut errors) = (0, 0, 0, Vec::new());
    let mut fallback = 0;
    let mut max_group = 0;
    for case in 0..100 {
        let w = random_witt_case(&mut rng);
        max_group = max_group.max(w.action.len());
        let res = match witt_cancel_equivariant(&w.q, &w.e, &w.f, w.m, &w.action) {
            Ok(r) => r,
            Err(e) => {
                errors.push(format!("case {case}: {e}"));
                continue;
            }
        };
        let n = w.q.dim();
        let phi = &res.map;
        if phi.transpose().mul(w.q.gram()).mul(phi) == *w.q.gram() && oracle::det_leibniz(phi) != qi(0) {
            iso += 1;
        }
        if w.action.iter().all(|g| g.mul(phi) == phi.mul(g)) {
            equiv += 1;
        }
        let ec: Vec<Vec<Rational>> = (w.m..n).map(|j| w.e.column(j)).collect();
        let fc: Vec<Vec<Rational>> = (w.m..n).map(|j| w.f.column(j)).collect();
        let img: Vec<Vec<Rational>> = ec.iter().map(|v| phi.mul_vec(v)).collect();
        let prefix_ok = (0..w.m).all(|i| phi.mul_vec(&w.e.column(i)) == w.f.column(i));
        if Subspace::from_vectors(n, &img) == Subspace::from_vectors(n, &fc) && prefix_ok {
            carries += 1;
        }
        if res.reflections.windows(2).any(|p| p[1].iter().zip(&p[0]).any(|(a, b)| a != b)) && res.replay(&w.q).ok().as_ref() == Some(phi) {
            fallback += 1;
        }
    }
    rec.check("isometry", iso == 100, format!("{iso}/100 with φᵀGφ = G"));
    rec.check("G-equivariant", equiv == 100, format!("{equiv}/100 commuting with every action matrix (|G| ≤ {max_group})"));
    rec.check("complements", carries == 100, format!("{carries}/100 with φ(eᵢ) = fᵢ on the prefix and φ(e-complement) = f-complement"));
    if !errors.is_empty() {
        rec.check("errors", false, errors.join("; "));
    }
    let _ = fallback;
}

fn c11_groupalg(_seed: u64, rec: &mut Recorder) {
    let mut counts = Vec::new();
    let mut verified = true;
    for n in 1..=8usize {
        let g = FiniteGroup::cyclic(n);
        let set = central_idempotents(&g);
        verified &= set.verify(&g);
        let mut coeffs = vec![qi(0); n + 1];
        coeffs[0] = qi(-1);
        coeffs[n] = qi(1);
        let factors = factor_rational(&Poly::new(coeffs)).map(|f| f.len()).unwrap_or(0);
        counts.push((n, set.len(), factors, oracle::divisor_count(n)));
        if n == 3 || n == 4 {
            let fixed = set.idempotents.iter().all(|e| group_involution(&g, e) == *e);
            rec.check(format!("σ fixes idempotents of Z/{n}"), fixed, "group involution g ↦ g⁻¹");
        }
    }
    let ok = counts.iter().all(|&(_, a, b, c)| a == b && b == c);
    let two = counts.iter().filter(|c| c.0 == 2 || c.0 == 3).all(|c| c.1 == 2);
    rec.check("Z/n idempotent counts", ok && two, format!("(n, idempotents, factors of xⁿ−1, divisors) {counts:?}"));
    let s3 = FiniteGroup::symmetric(3);
    let set = central_idempotents(&s3);
    verified &= set.verify(&s3);
    rec.check("S3 idempotent count", set.len() == 3 && s3.conjugacy_classes().len() == 3, format!("{}", set.len()));
    rec.check("idempotent identities", verified, "eᵢ² = eᵢ, eᵢeⱼ = 0, Σeᵢ = 1, central");
}

fn c12_lefschetz(seed: u64, rec: &mut Recorder) {
    let mut rng = rng(seed, 12);
    let (mut ok, mut zero_sum, mut zero_ok) = (0, 0, 0);
    for _ in 0..200 {
        let n = rng.random_range(1..=5);
        let g = loop {
            let g = rand_mat(&mut rng, n, 3);
            if !det(&g).is_zero() {
                break g;
            }
        };
        let (lhs, rhs) = lefschetz_identity(&g);
        let oracle = oracle::det_leibniz(&Mat::identity(n).sub(&g));
        if lhs == rhs && rhs == oracle {
            ok += 1;
        }
        if lhs.is_zero() {
            zero_sum += 1;
            if fixed_dimension(&g) > 0 {
                zero_ok += 1;
            }
        }
    }
    rec.check("identity", ok == 200, format!("{ok}/200 with Σ(−1)ⁱ tr ⋀ⁱg = det(I − g) = Leibniz oracle"));
    // conjugates of block matrices with an eigenvalue 1
    let mut forced = 0;
    for _ in 0..20 {
        let n = rng.random_range(1..=5);
        let p = loop {
            let p = rand_mat(&mut rng, n, 2);
            if !det(&p).is_zero() {
                break p;
            }
        };
        let mut d = rand_mat(&mut rng, n, 2);
        for j in 0..n {
            d[(j, 0)] = qi(0);
        }
        d[(0, 0)] = qi(1);
        if det(&d).is_zero() {
            d = Mat::identity(n);
        }
        let g = p.mul(&d).mul(&inverse(&p).expect("invertible"));
        let (lhs, _) = lefschetz_identity(&g);
        zero_sum += 1;
        if lhs.is_zero() && fixed_dimension(&g) > 0 {
            zero_ok += 1;
        }
        forced += 1;
    }
    rec.check(
        "zero alternating sum forces eigenvalue 1",
        zero_ok == zero_sum,
        format!("{zero_ok}/{zero_sum} zero-sum cases ({forced} constructed) have ker(g − I) ≠ 0"),
    );
}
