//! sl₂-triples, LLV algebras and their equivariant variant.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::Rational;
use crate::graded::{grading_operator, has_hard_lefschetz, invariants, tensor, GradedAlgebra, GradedSpace, GroupActionOnAlgebra};
use crate::lie::{grade_by, MatrixLieAlgebra};
use crate::linalg::{rank, solve, to_sparse, Echelon, Mat, Subspace};
use crate::{Error, Result};

/// `(e, h, f)` with `[e, f] = h`, `[h, e] = 2e`, `[h, f] = −2f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: Mat,
    pub h: Mat,
    pub f: Mat,
}

impl Sl2Triple {
    pub fn is_valid(&self) -> bool {
        let two = Rational::from_int(2);
        self.e.bracket(&self.f) == self.h
            && self.h.bracket(&self.e) == self.e.scale(&two)
            && self.h.bracket(&self.f) == self.f.scale(&-two)
    }
}

/// Deterministic search for hard-Lefschetz elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LefschetzSampler {
    pub seed: u64,
    pub max_attempts: usize,
    pub coefficient_range: i64,
}

impl Default for LefschetzSampler {
    fn default() -> Self {
        LefschetzSampler { seed: 0, max_attempts: 64, coefficient_range: 3 }
    }
}

impl LefschetzSampler {
    pub fn with_seed(seed: u64) -> Self {
        LefschetzSampler { seed, ..Default::default() }
    }

    /// The given basis vectors first, then seeded random combinations.
    fn candidates<'a>(&self, basis: &'a [Vec<Rational>]) -> impl Iterator<Item = Vec<Rational>> + 'a {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let r = self.coefficient_range;
        let len = basis.first().map_or(0, Vec::len);
        let random = (0..self.max_attempts).map(move |_| {
            let mut v = vec![Rational::zero(); len];
            for b in basis {
                let c = Rational::from_int(rng.random_range(-r..=r));
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(b) {
                    *x += &c * y;
                }
            }
            v
        });
        basis.iter().cloned().chain(random)
    }
}

/// The unique `f` of degree −2 completing `e` to an sl₂-triple with the
/// grading operator of `m`.
pub fn jacobson_morozov(e: &Mat, m: &GradedSpace) -> Result<Sl2Triple> {
    if !has_hard_lefschetz(e, m)? {
        return Err(Error::NoHardLefschetz("operator does not have hard Lefschetz".into()));
    }
    let n = m.total_dim();
    let h = grading_operator(m);
    // unknowns: f_{ij} with deg i = deg j − 2
    let unknowns: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| m.degree(i) == m.degree(j) - 2)
        .collect();
    let index: std::collections::HashMap<(usize, usize), usize> =
        unknowns.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    // [e, f]_{rc} = Σ_k e_{rk} f_{kc} − f_{rk} e_{kc}; only degree-0 entries can be nonzero
    let rows: Vec<(usize, usize)> = (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .filter(|&(r, c)| m.degree(r) == m.degree(c))
        .collect();
    let mut a = Mat::zeros(rows.len(), unknowns.len());
    let mut b = vec![Rational::zero(); rows.len()];
    for (ri, &(r, c)) in rows.iter().enumerate() {
        for k in 0..n {
            if let Some(&u) = index.get(&(k, c)) {
                if !e[(r, k)].is_zero() {
                    a[(ri, u)] += &e[(r, k)];
                }
            }
            if let Some(&u) = index.get(&(r, k)) {
                if !e[(k, c)].is_zero() {
                    a[(ri, u)] -= &e[(k, c)];
                }
            }
        }
        b[ri] = h[(r, c)].clone();
    }
    if rank(&a) < unknowns.len() {
        return Err(Error::Internal("Jacobson–Morozov solution is not unique".into()));
    }
    let x = solve(&a, &b).ok_or_else(|| Error::Internal("Jacobson–Morozov system is inconsistent".into()))?;
    let mut f = Mat::zeros(n, n);
    for (k, &(i, j)) in unknowns.iter().enumerate() {
        f[(i, j)] = x[k].clone();
    }
    let t = Sl2Triple { e: e.clone(), h, f };
    if !t.is_valid() {
        return Err(Error::Internal("constructed triple fails the sl₂ relations".into()));
    }
    Ok(t)
}

/// An LLV computation together with the triples that generated it.
#[derive(Clone, Debug)]
pub struct LlvResult {
    /// Graded by the grading operator of the Lefschetz module.
    pub algebra: MatrixLieAlgebra,
    /// Degree-2 elements (coordinates in the algebra's degree-2 basis) whose
    /// triples were used.
    pub lefschetz_elements: Vec<Vec<Rational>>,
    pub triples: Vec<Sl2Triple>,
    pub warnings: Vec<String>,
}

/// Shared driver: `basis` spans the candidate space inside `R₂`
/// (coordinates relative to `r.degree_two()`), `accept` decides which
/// hard-Lefschetz candidates may be used.
fn llv_from_candidates(
    r: &GradedAlgebra,
    basis: &[Vec<Rational>],
    sampler: &LefschetzSampler,
    accept: &dyn Fn(&[Rational]) -> Result<bool>,
) -> Result<LlvResult> {
    let m = r.lefschetz_space()?;
    let n = r.dim();
    let deg2 = r.degree_two();
    let mut warnings = Vec::new();
    if basis.is_empty() {
        warnings.push("degree-2 part is zero; LLV algebra is zero".to_string());
        let algebra = grade_by(&grading_operator(&m), &MatrixLieAlgebra::zero(n))?;
        return Ok(LlvResult { algebra, lefschetz_elements: Vec::new(), triples: Vec::new(), warnings });
    }
    let target = Subspace::from_vectors(deg2.len(), basis).dim();
    let embed = |a: &[Rational]| {
        let mut v = vec![Rational::zero(); n];
        for (k, &i) in deg2.iter().enumerate() {
            v[i] = a[k].clone();
        }
        v
    };
    let mut found = Echelon::new(deg2.len());
    let mut elements = Vec::new();
    let mut triples = Vec::new();
    let mut attempts = 0;
    for a in sampler.candidates(basis) {
        attempts += 1;
        if found.len() == target {
            break;
        }
        let sa = to_sparse(&a);
        if sa.is_empty() || found.contains(&sa) {
            continue;
        }
        let e = r.left_mul_by(&embed(&a));
        if !has_hard_lefschetz(&e, &m)? || !accept(&a)? {
            continue;
        }
        found.insert(&sa);
        triples.push(jacobson_morozov(&e, &m)?);
        elements.push(a);
    }
    if triples.is_empty() {
        return Err(Error::NoLefschetzElement { attempts });
    }
    if found.len() < target {
        warnings.push(format!(
            "hard-Lefschetz elements found span {} of {} degree-2 dimensions",
            found.len(),
            target
        ));
    }
    let gens: Vec<Mat> = triples.iter().flat_map(|t| [t.e.clone(), t.f.clone()]).collect();
    let algebra = grade_by(&grading_operator(&m), &MatrixLieAlgebra::closure(&gens, n))?;
    Ok(LlvResult { algebra, lefschetz_elements: elements, triples, warnings })
}

fn unit_basis(k: usize) -> Vec<Vec<Rational>> {
    (0..k).map(|i| crate::graded::unit_vec(k, i)).collect()
}

/// `llv(R) ⊆ gl(R)`, generated by the triples of hard-Lefschetz elements
/// spanning `R₂`.
pub fn llv_algebra(r: &GradedAlgebra, sampler: &LefschetzSampler) -> Result<LlvResult> {
    if r.space().dim_of(0) != 1 {
        return Err(Error::Precondition("dim R₀ must be 1".into()));
    }
    let basis = unit_basis(r.degree_two().len());
    llv_from_candidates(r, &basis, sampler, &|_| Ok(true))
}

/// `llv^pre_G(R)`: triples of invariant degree-2 elements that have hard
/// Lefschetz on both `R` and `R^G`.
pub fn llv_pre_g(r: &GradedAlgebra, act: &GroupActionOnAlgebra, sampler: &LefschetzSampler) -> Result<LlvResult> {
    if r.space().dim_of(0) != 1 {
        return Err(Error::Precondition("dim R₀ must be 1".into()));
    }
    let (rg, inc) = invariants(r, act)?;
    let mg = rg.lefschetz_space().map_err(|_| Error::Precondition("R^G has odd top degree".into()))?;
    if mg.degrees().iter().min() != r.lefschetz_space()?.degrees().iter().min() {
        return Err(Error::Precondition("R^G does not have the depth of R".into()));
    }
    let deg2 = r.degree_two();
    // invariant part of R₂ in R₂-coordinates
    let rey = act.reynolds().select(&deg2, &deg2);
    let basis = crate::linalg::image(&rey).vectors();
    let rg_deg2 = rg.degree_two();
    let inc2 = inc.select(&deg2, &rg_deg2);
    let accept = |a: &[Rational]| -> Result<bool> {
        let c = solve(&inc2, a).ok_or_else(|| Error::Internal("invariant element outside R^G".into()))?;
        let mut v = vec![Rational::zero(); rg.dim()];
        for (k, &i) in rg_deg2.iter().enumerate() {
            v[i] = c[k].clone();
        }
        has_hard_lefschetz(&rg.left_mul_by(&v), &mg)
    };
    let res = llv_from_candidates(r, &basis, sampler, &accept).map_err(|e| match e {
        Error::NoLefschetzElement { attempts } => Error::Precondition(format!(
            "no invariant degree-2 element with hard Lefschetz on both R and R^G after {attempts} attempts"
        )),
        e => e,
    })?;
    for x in res.algebra.generators() {
        if act.mats().iter().any(|g| g.mul(x) != x.mul(g)) {
            return Err(Error::Internal("llv_pre_G is not G-invariant".into()));
        }
    }
    Ok(res)
}

/// Restriction of every basis element of `g` to the subspace spanned by the
/// columns of `inc`, expressed in that basis.
pub fn restrict(g: &MatrixLieAlgebra, inc: &Mat) -> Result<MatrixLieAlgebra> {
    let k = inc.cols();
    let cols: Vec<Vec<Rational>> = (0..k).map(|j| inc.column(j)).collect();
    let mut mats = Vec::with_capacity(g.dim());
    for (idx, x) in g.basis().iter().enumerate() {
        let mut images = Vec::with_capacity(k);
        for c in &cols {
            let y = x.mul_vec(c);
            images.push(solve(inc, &y).ok_or(Error::NotInvariant(format!("basis element {idx}")))?);
        }
        mats.push(Mat::from_columns(&images, k));
    }
    Ok(MatrixLieAlgebra::closure(&mats, k))
}

/// Graded pieces only in degrees −2, 0, 2.
pub fn is_jordan_lefschetz(g: &MatrixLieAlgebra) -> Result<bool> {
    let dims = g
        .graded_dims()
        .ok_or_else(|| Error::Precondition("algebra carries no grading".into()))?;
    Ok(dims.iter().all(|(k, d)| *d == 0 || [-2, 0, 2].contains(k)))
}

/// Smallest `g`-invariant subspace containing `seed`.
pub fn invariant_closure(g: &MatrixLieAlgebra, seed: &Subspace) -> Subspace {
    let n = seed.ambient_dim();
    let mut ech = Echelon::new(n);
    let mut frontier = Vec::new();
    for v in seed.vectors() {
        if ech.insert(&to_sparse(&v)).is_some() {
            frontier.push(v);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for x in g.generators() {
                let w = x.mul_vec(v);
                if ech.insert(&to_sparse(&w)).is_some() {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    ech.into_subspace()
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TensorLlvReport {
    pub dim_r: usize,
    pub dim_s: usize,
    pub dim_tensor: usize,
    /// `llv(R)⊗1 + 1⊗llv(S)` equals `llv(R⊗S)` as subspaces.
    pub block_equal: bool,
}

/// Compares `llv(R⊗S)` with the block embedding of `llv(R) × llv(S)`.
pub fn verify_tensor_llv(r: &GradedAlgebra, s: &GradedAlgebra, sampler: &LefschetzSampler) -> Result<TensorLlvReport> {
    if r.space().dim_of(1) != 0 && s.space().dim_of(1) != 0 {
        return Err(Error::Precondition("both factors have odd degree-1 parts".into()));
    }
    let gr = llv_algebra(r, sampler)?.algebra;
    let gs = llv_algebra(s, sampler)?.algebra;
    let rs = tensor(r, s);
    let gt = llv_algebra(&rs, sampler)?.algebra;
    let (ir, is) = (Mat::identity(r.dim()), Mat::identity(s.dim()));
    let mut block: Vec<Mat> = gr.basis().iter().map(|x| x.kron(&is)).collect();
    block.extend(gs.basis().iter().map(|y| ir.kron(y)));
    let b = MatrixLieAlgebra::closure(&block, rs.dim());
    Ok(TensorLlvReport { dim_r: gr.dim(), dim_s: gs.dim(), dim_tensor: gt.dim(), block_equal: b == gt })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;
    use crate::graded::{exterior_algebra, surface_ring, truncated_polynomial, unit_algebra};
    use crate::groupalg::FiniteGroup;

    #[test]
    fn jm_examples() {
        let m = GradedSpace::new(vec![-1, 1]);
        let t = jacobson_morozov(&Mat::unit(2, 2, 1, 0), &m).unwrap();
        assert_eq!(t.f, Mat::unit(2, 2, 0, 1));
        // chain 1 → 2 → 3 in degrees −2, 0, 2
        let m = GradedSpace::new(vec![-2, 0, 2]);
        let e = Mat::from_i64(3, 3, &[0, 0, 0, 1, 0, 0, 0, 1, 0]);
        let t = jacobson_morozov(&e, &m).unwrap();
        assert_eq!(t.f, Mat::from_i64(3, 3, &[0, 2, 0, 0, 0, 2, 0, 0, 0]));
        let r = exterior_algebra(2);
        let t = jacobson_morozov(r.left_mul(3), &r.lefschetz_space().unwrap()).unwrap();
        assert!(t.is_valid());
        assert_eq!(t.f, Mat::unit(4, 4, 0, 3));
        assert!(matches!(
            jacobson_morozov(&Mat::zeros(3, 3), &GradedSpace::new(vec![-2, 0, 2])),
            Err(Error::NoHardLefschetz(_))
        ));
    }

    #[test]
    fn llv_examples() {
        let s = LefschetzSampler::default();
        let g = llv_algebra(&truncated_polynomial(2), &s).unwrap().algebra;
        assert_eq!(g.dim(), 3);
        // R₂ is a line, so one triple generates: sl₂ on the even part, zero on V.
        let res = llv_algebra(&exterior_algebra(2), &s).unwrap();
        assert_eq!(res.algebra.dim(), 3);
        assert!(res.algebra.basis().iter().all(|x| x.column(1).iter().chain(x.column(2).iter()).all(Rational::is_zero)));
        assert!(is_jordan_lefschetz(&res.algebra).unwrap());
        assert!(res.algebra.contains(&grading_operator(&exterior_algebra(2).lefschetz_space().unwrap())));
        let b = Mat::diag(&[qi(1), qi(1), qi(-1)]);
        assert_eq!(llv_algebra(&surface_ring(&b).unwrap(), &s).unwrap().algebra.dim(), 10);
        let zero = llv_algebra(&unit_algebra(), &s).unwrap();
        assert_eq!(zero.algebra.dim(), 0);
        assert_eq!(zero.warnings.len(), 1);
    }

    #[test]
    fn pre_g_examples() {
        let s = LefschetzSampler::default();
        let r = exterior_algebra(2);
        let triv = GroupActionOnAlgebra::trivial(FiniteGroup::cyclic(2), &r);
        assert_eq!(llv_pre_g(&r, &triv, &s).unwrap().algebra, llv_algebra(&r, &s).unwrap().algebra);
        let r4 = exterior_algebra(4);
        let neg = GroupActionOnAlgebra::on_exterior(FiniteGroup::cyclic(2), &[Mat::identity(4), Mat::identity(4).neg()], &r4).unwrap();
        assert_eq!(llv_pre_g(&r4, &neg, &s).unwrap().algebra.dim(), 28);
    }

    #[test]
    fn restrict_examples() {
        let s = LefschetzSampler::default();
        let g = llv_algebra(&truncated_polynomial(2), &s).unwrap().algebra;
        assert_eq!(restrict(&g, &Mat::identity(3)).unwrap(), MatrixLieAlgebra::closure(g.basis(), 3));
        assert_eq!(restrict(&MatrixLieAlgebra::zero(3), &Mat::identity(3)).unwrap().dim(), 0);
        assert!(matches!(restrict(&g, &Mat::from_i64(3, 1, &[1, 0, 0])), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn invariant_closure_examples() {
        let s = LefschetzSampler::default();
        let r = exterior_algebra(4);
        let g = llv_algebra(&r, &s).unwrap().algebra;
        assert_eq!(g.dim(), 28);
        let seed = Subspace::from_vectors(16, &[crate::graded::unit_vec(16, 0)]);
        assert_eq!(invariant_closure(&g, &seed).dim(), 8);
        assert_eq!(invariant_closure(&g, &Subspace::zero(16)).dim(), 0);
    }

    #[test]
    fn tensor_examples() {
        let s = LefschetzSampler::default();
        let x3 = truncated_polynomial(2);
        let rep = verify_tensor_llv(&x3, &x3, &s).unwrap();
        assert_eq!((rep.dim_r, rep.dim_s, rep.dim_tensor, rep.block_equal), (3, 3, 6, true));
        let rep = verify_tensor_llv(&exterior_algebra(2), &unit_algebra(), &s).unwrap();
        assert_eq!((rep.dim_tensor, rep.block_equal), (3, true));
    }

    #[test]
    fn jordan_lefschetz_counterexample() {
        let m = GradedSpace::new(vec![-2, 0, 2]);
        let g = MatrixLieAlgebra::closure(&[Mat::unit(3, 3, 2, 0), Mat::unit(3, 3, 0, 2)], 3);
        let g = grade_by(&grading_operator(&m), &g).unwrap();
        assert!(!is_jordan_lefschetz(&g).unwrap());
        let sl2 = grade_by(&grading_operator(&GradedSpace::new(vec![-1, 1])), &MatrixLieAlgebra::closure(&[Mat::unit(2, 2, 0, 1), Mat::unit(2, 2, 1, 0)], 2)).unwrap();
        assert!(is_jordan_lefschetz(&sl2).unwrap());
    }
}
