//! Problem descriptions read from JSON. Rationals are strings `"p"` or
//! `"p/q"`; matrices are arrays of rows.

use schemars::JsonSchema;
use serde::{Deserialize, Serialize};

use llvkit::graded::{exterior_algebra, surface_ring, tensor, truncated_polynomial, unit_algebra, GradedAlgebra, GradedAlgebraData, GroupActionOnAlgebra};
use llvkit::groupalg::{FiniteGroup, RepMat};
use llvkit::llv::LefschetzSampler;
use llvkit::{Mat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Llv,
    Decompose,
    Involution,
    Spinor,
    Clifford,
    Witt,
    Groupalg,
    Selftest,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Llv => "llv",
            Kind::Decompose => "decompose",
            Kind::Involution => "involution",
            Kind::Spinor => "spinor",
            Kind::Clifford => "clifford",
            Kind::Witt => "witt",
            Kind::Groupalg => "groupalg",
            Kind::Selftest => "selftest",
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct Budget {
    /// Random hard-Lefschetz candidates tried after the basis.
    pub max_attempts: Option<usize>,
    /// Candidate coefficients are drawn from `[-r, r]`.
    pub coefficient_range: Option<i64>,
}

impl Budget {
    pub fn sampler(&self, seed: u64) -> LefschetzSampler {
        let d = LefschetzSampler::with_seed(seed);
        LefschetzSampler {
            seed,
            max_attempts: self.max_attempts.unwrap_or(d.max_attempts),
            coefficient_range: self.coefficient_range.unwrap_or(d.coefficient_range).max(1),
        }
    }
}

/// The envelope: `payload` is checked against the schema of `kind`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub kind: Kind,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub budget: Budget,
    #[serde(default)]
    pub payload: serde_json::Value,
}

/// Schema view of the envelope for one payload type.
#[derive(JsonSchema)]
#[allow(dead_code)]
pub struct SpecFor<P> {
    kind: Kind,
    seed: Option<u64>,
    budget: Option<Budget>,
    payload: P,
}

type MatJson = Vec<Vec<String>>;

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraInput {
    /// `⋀•ℚⁿ`.
    Exterior(usize),
    /// `1, x₁..x_m, vol` with `xᵢxⱼ = bᵢⱼ·vol`.
    Surface(#[schemars(with = "MatJson")] Mat),
    /// `ℚ[x]/(x^{k+1})`, `x` in degree 2.
    Truncated(usize),
    Unit,
    /// Structure constants.
    Graded(#[schemars(with = "GradedJson")] GradedAlgebraData),
    Tensor(Box<AlgebraInput>, Box<AlgebraInput>),
}

#[derive(JsonSchema)]
#[allow(dead_code)]
struct GradedJson {
    degrees: Vec<i64>,
    unit: usize,
    /// `[i, j, k, "c"]`: `bᵢ·bⱼ` has coefficient `c` on `bₖ`.
    triples: Vec<(usize, usize, usize, String)>,
}

impl AlgebraInput {
    pub fn build(&self) -> llvkit::Result<GradedAlgebra> {
        Ok(match self {
            AlgebraInput::Exterior(n) => {
                if *n > 10 {
                    return Err(llvkit::Error::InvalidInput("exterior algebras above ⋀•ℚ¹⁰ are not supported".into()));
                }
                exterior_algebra(*n)
            }
            AlgebraInput::Surface(b) => surface_ring(b)?,
            AlgebraInput::Truncated(k) => truncated_polynomial(*k),
            AlgebraInput::Unit => unit_algebra(),
            AlgebraInput::Graded(d) => GradedAlgebra::from_data(d)?,
            AlgebraInput::Tensor(a, b) => tensor(&a.build()?, &b.build()?),
        })
    }
}

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupInput {
    Trivial,
    Cyclic(usize),
    Symmetric(usize),
    /// Generating permutations of `{0..n}`.
    Permutations(Vec<Vec<usize>>),
    /// Full multiplication table.
    Table(Vec<Vec<usize>>),
}

impl GroupInput {
    pub fn build(&self) -> llvkit::Result<FiniteGroup> {
        let too_big = |n: usize| if n > 720 { Err(llvkit::Error::InvalidInput("group too large".into())) } else { Ok(()) };
        match self {
            GroupInput::Trivial => Ok(FiniteGroup::trivial()),
            GroupInput::Cyclic(n) if *n >= 1 => too_big(*n).map(|_| FiniteGroup::cyclic(*n)),
            GroupInput::Cyclic(_) => Err(llvkit::Error::InvalidInput("cyclic group order must be positive".into())),
            GroupInput::Symmetric(n) if *n <= 6 => Ok(FiniteGroup::symmetric(*n)),
            GroupInput::Symmetric(_) => Err(llvkit::Error::InvalidInput("symmetric groups above S6 are not supported".into())),
            GroupInput::Permutations(p) => FiniteGroup::from_permutations(p),
            GroupInput::Table(t) => FiniteGroup::from_table(t.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, JsonSchema)]
#[serde(rename_all = "snake_case")]
pub enum ActionTarget {
    /// Matrices act on `V` and are extended to `⋀•V`.
    ExteriorV,
    /// Matrices act on the algebra directly.
    #[default]
    Algebra,
}

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct ActionInput {
    pub group: GroupInput,
    /// One matrix per group generator, in generator order.
    #[schemars(with = "Vec<MatJson>")]
    pub generator_images: Vec<Mat>,
    #[serde(default)]
    pub on: ActionTarget,
}

impl ActionInput {
    pub fn representation(&self) -> llvkit::Result<RepMat> {
        let g = self.group.build()?;
        let gens = g.generators().to_vec();
        RepMat::from_generator_images(g, &gens, &self.generator_images)
    }

    pub fn on_algebra(&self, r: &GradedAlgebra) -> llvkit::Result<GroupActionOnAlgebra> {
        let rep = self.representation()?;
        let group = rep.group().clone();
        match self.on {
            ActionTarget::ExteriorV => GroupActionOnAlgebra::on_exterior(group, rep.mats(), r),
            ActionTarget::Algebra => GroupActionOnAlgebra::new(group, rep.mats().to_vec(), r),
        }
    }
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct LlvPayload {
    pub algebra: AlgebraInput,
    /// With an action, `llv_pre_G` is computed and restricted to `R^G`.
    pub action: Option<ActionInput>,
    /// Killing form, centroid and rank (skip for very large algebras).
    #[serde(default = "yes")]
    pub invariants: bool,
}

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct DecomposePayload {
    /// Lie algebra generated by these matrices.
    #[schemars(with = "Option<Vec<MatJson>>")]
    pub generators: Option<Vec<Mat>>,
    /// Alternatively an LLV algebra (restricted to invariants under `action`).
    pub algebra: Option<AlgebraInput>,
    pub action: Option<ActionInput>,
}

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum InvolutionPayload {
    /// `M_n` with the adjoint involution of a nondegenerate form.
    Adjoint(#[schemars(with = "MatJson")] Mat),
    /// `M_n` with the transpose.
    Transpose(usize),
    /// A simple factor `eᵢℚ[G]` with `g ↦ g⁻¹`.
    GroupAlgebra { group: GroupInput, factor: usize },
}

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct WeightInput {
    pub group: GroupInput,
    #[schemars(with = "Vec<MatJson>")]
    pub generator_images: Vec<Mat>,
    /// `V = ρⁿ`.
    pub copies: usize,
}

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct ContractionInput {
    #[schemars(with = "Vec<String>")]
    pub diag: Vec<Rational>,
    pub degree: usize,
}

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct ShInput {
    #[schemars(with = "MatJson")]
    pub form: Mat,
    pub degree: usize,
}

fn ten() -> usize {
    10
}

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct SpinorPayload {
    /// `dim V`; the homomorphism is checked on a full basis of `so(V ⊕ V*)`.
    pub n: usize,
    #[serde(default = "ten")]
    pub derivative_samples: usize,
    pub weight: Option<WeightInput>,
    pub contraction: Option<ContractionInput>,
    pub sh_embedding: Option<ShInput>,
}

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct CliffordPayload {
    #[schemars(with = "MatJson")]
    pub form: Mat,
    /// Coefficients on the monomials `e_A` of the orthogonal basis, indexed
    /// by the bitmask `A`.
    #[serde(default)]
    #[schemars(with = "Vec<Vec<String>>")]
    pub elements: Vec<Vec<Rational>>,
    /// Each entry is a list of vectors (original coordinates) multiplied in order.
    #[serde(default)]
    #[schemars(with = "Vec<Vec<Vec<String>>>")]
    pub vector_products: Vec<Vec<Vec<Rational>>>,
    /// Isometries of the form for the equivariance check.
    #[serde(default)]
    #[schemars(with = "Vec<MatJson>")]
    pub action: Vec<Mat>,
}

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct WittPayload {
    #[schemars(with = "MatJson")]
    pub form: Mat,
    /// Basis vectors as columns.
    #[schemars(with = "MatJson")]
    pub e: Mat,
    #[schemars(with = "MatJson")]
    pub f: Mat,
    pub m: usize,
    /// One isometry per group element.
    #[serde(default)]
    #[schemars(with = "Vec<MatJson>")]
    pub action: Vec<Mat>,
}

#[derive(Clone, Debug, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct GroupalgPayload {
    pub group: GroupInput,
    /// Generator images of a representation to split into isotypic parts.
    #[schemars(with = "Option<Vec<MatJson>>")]
    pub rep: Option<Vec<Mat>>,
}

#[derive(Clone, Debug, Default, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct SelftestPayload {
    /// A suite name (`llv`, `involution`, `spinor`, `clifford`, `witt`,
    /// `groupalg`) or a criterion number.
    pub filter: Option<String>,
}

/// JSON schema for a kind's spec file.
pub fn schema(kind: Kind) -> serde_json::Value {
    let s = match kind {
        Kind::Llv => schemars::schema_for!(SpecFor<LlvPayload>),
        Kind::Decompose => schemars::schema_for!(SpecFor<DecomposePayload>),
        Kind::Involution => schemars::schema_for!(SpecFor<InvolutionPayload>),
        Kind::Spinor => schemars::schema_for!(SpecFor<SpinorPayload>),
        Kind::Clifford => schemars::schema_for!(SpecFor<CliffordPayload>),
        Kind::Witt => schemars::schema_for!(SpecFor<WittPayload>),
        Kind::Groupalg => schemars::schema_for!(SpecFor<GroupalgPayload>),
        Kind::Selftest => schemars::schema_for!(SpecFor<SelftestPayload>),
    };
    serde_json::to_value(s).expect("schemas serialize")
}
