//! The spinor representation of `so(V ⊕ V*)` on `⋀•V`, wedge powers,
//! symmetric powers with the contraction operator, and weight checks.

use std::collections::HashMap;

use crate::exact::{Rational, Scalar};
use crate::graded::{exterior_action, exterior_basis, surface_ring, wedge_sign};
use crate::groupalg::RepMat;
use crate::lie::{grade_by, orthogonal_algebra, MatrixLieAlgebra};
use crate::linalg::{commutant, kernel, rank, to_sparse, Echelon, Mat, Matrix, Subspace};
use crate::quadform::{mukai, QuadraticSpace};
use crate::{Error, Result};

/// `⋀•V` for `V = ℚⁿ` together with the block structure of `so(V ⊕ V*)`.
///
/// `Ṽ = V ⊕ V*` carries the form `[[0, I], [I, 0]]`; its skew elements are
/// exactly `[[A, B], [C, −Aᵀ]]` with `B`, `C` antisymmetric.
#[derive(Clone, Debug)]
pub struct SpinorContext {
    n: usize,
    basis: Vec<u32>,
    index: HashMap<u32, usize>,
}

impl SpinorContext {
    pub fn new(n: usize) -> Self {
        assert!(n <= 16, "exterior algebra too large");
        let basis = exterior_basis(n);
        let index = basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        SpinorContext { n, basis, index }
    }

    pub fn v_dim(&self) -> usize {
        self.n
    }

    pub fn module_dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis of `⋀•V` as bitmasks.
    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn index_of(&self, mask: u32) -> usize {
        self.index[&mask]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.basis.iter().map(|m| m.count_ones() as usize).collect()
    }

    pub fn standard_form(&self) -> Mat {
        let n = self.n;
        let mut b = Mat::zeros(2 * n, 2 * n);
        for i in 0..n {
            b[(i, n + i)] = Rational::one();
            b[(n + i, i)] = Rational::one();
        }
        b
    }

    /// `(A, B, C)`, or an error if `x` is not skew for the standard form.
    pub fn split(&self, x: &Mat) -> Result<(Mat, Mat, Mat)> {
        let n = self.n;
        if x.shape() != (2 * n, 2 * n) {
            return Err(Error::InvalidInput(format!("expected a {0}×{0} matrix", 2 * n)));
        }
        let a = x.submatrix(0, n, 0, n);
        let b = x.submatrix(0, n, n, 2 * n);
        let c = x.submatrix(n, 2 * n, 0, n);
        let d = x.submatrix(n, 2 * n, n, 2 * n);
        if d != a.transpose().neg() || !b.is_antisymmetric() || !c.is_antisymmetric() {
            return Err(Error::InvalidInput("element is not skew for the standard form".into()));
        }
        Ok((a, b, c))
    }

    pub fn assemble(&self, a: &Mat, b: &Mat, c: &Mat) -> Mat {
        let n = self.n;
        let mut x = Mat::zeros(2 * n, 2 * n);
        x.set_block(0, 0, a);
        x.set_block(0, n, b);
        x.set_block(n, 0, c);
        x.set_block(n, n, &a.transpose().neg());
        x
    }

    /// `A ↦ [[A, 0], [0, −Aᵀ]]`.
    pub fn gl_embed(&self, a: &Mat) -> Mat {
        let z = Mat::zeros(self.n, self.n);
        self.assemble(a, &z, &z)
    }

    /// `E_ij` in the gl-block, then `E_ij − E_ji` (`i < j`) in the wedge and
    /// contraction blocks.
    pub fn so_basis(&self) -> Vec<Mat> {
        let n = self.n;
        let z = Mat::zeros(n, n);
        let mut out = Vec::with_capacity(n * (2 * n - 1));
        for i in 0..n {
            for j in 0..n {
                out.push(self.assemble(&Mat::unit(n, n, i, j), &z, &z));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let s = Mat::unit(n, n, i, j).sub(&Mat::unit(n, n, j, i));
                out.push(self.assemble(&z, &s, &z));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let s = Mat::unit(n, n, i, j).sub(&Mat::unit(n, n, j, i));
                out.push(self.assemble(&z, &z, &s));
            }
        }
        out
    }

    fn sign_below(mask: u32, i: usize) -> i64 {
        if (mask & ((1u32 << i) - 1)).count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `e_i ∧ −` on a basis monomial.
    fn wedge(mask: u32, i: usize) -> Option<(u32, i64)> {
        (mask & (1 << i) == 0).then(|| (mask | (1 << i), Self::sign_below(mask, i)))
    }

    /// Interior contraction with `e_i*`.
    fn contract(mask: u32, i: usize) -> Option<(u32, i64)> {
        (mask & (1 << i) != 0).then(|| (mask & !(1 << i), Self::sign_below(mask, i)))
    }
}

/// The spinor representation of an element of `so(Ṽ)` on `⋀•V`.
///
/// The gl-block acts as its derivation extension minus `½Tr(A)`, the wedge
/// block by left wedge with `Σ_{i<j} B_ij e_i∧e_j`, and the contraction block
/// by `Σ_{i<j} C_ij ι_i ι_j`.
pub fn spinor_rep(x: &Mat, ctx: &SpinorContext) -> Result<Mat> {
    let (a, b, c) = ctx.split(x)?;
    let n = ctx.n;
    let dim = ctx.module_dim();
    let mut out = Mat::zeros(dim, dim);
    let half_tr = a.trace() / Rational::from_int(2);
    for (col, &mask) in ctx.basis.iter().enumerate() {
        out[(col, col)] -= &half_tr;
        for i in 0..n {
            for j in 0..n {
                if a[(i, j)].is_zero() {
                    continue;
                }
                let Some((m1, s1)) = SpinorContext::contract(mask, j) else { continue };
                let Some((m2, s2)) = SpinorContext::wedge(m1, i) else { continue };
                out[(ctx.index[&m2], col)] += &(&a[(i, j)] * &Rational::from_int(s1 * s2));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if !b[(i, j)].is_zero() {
                    let form = (1u32 << i) | (1u32 << j);
                    if mask & form == 0 {
                        let s = wedge_sign(form, mask);
                        out[(ctx.index[&(mask | form)], col)] += &(&b[(i, j)] * &Rational::from_int(s));
                    }
                }
                if !c[(i, j)].is_zero() {
                    let Some((m1, s1)) = SpinorContext::contract(mask, j) else { continue };
                    let Some((m2, s2)) = SpinorContext::contract(m1, i) else { continue };
                    out[(ctx.index[&m2], col)] += &(&c[(i, j)] * &Rational::from_int(s1 * s2));
                }
            }
        }
    }
    Ok(out)
}

/// `⋀A`, acting on `⋀^k` by `k × k` minors.
pub fn wedge_power<T: Scalar>(a: &Matrix<T>, ctx: &SpinorContext) -> Matrix<T> {
    assert_eq!(a.shape(), (ctx.n, ctx.n));
    exterior_action(a)
}

/// Multiplication by `λᵏ` on `⋀ᵏ`.
pub fn scalar_action(lambda: &Rational, ctx: &SpinorContext) -> Result<Mat> {
    if lambda.is_zero() {
        return Err(Error::InvalidInput("scalar must be nonzero".into()));
    }
    let mut powers = vec![Rational::one()];
    for k in 0..ctx.n {
        powers.push(&powers[k] * lambda);
    }
    let d: Vec<Rational> = ctx.degrees().iter().map(|&k| powers[k].clone()).collect();
    Ok(Mat::diag(&d))
}

/// `Sym^D` of a quadratic space on the degree-lex monomial basis.
#[derive(Clone, Debug)]
pub struct SymContext {
    space: QuadraticSpace,
    degree: usize,
    basis: Vec<Vec<u32>>,
}

impl SymContext {
    pub fn new(space: QuadraticSpace, degree: usize) -> Self {
        let basis = monomials(space.dim(), degree);
        SymContext { space, degree, basis }
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vars(&self) -> usize {
        self.space.dim()
    }
}

/// Exponent vectors of total degree `d` in `m` variables, lexicographically
/// descending (`x₁^d` first).
pub fn monomials(m: usize, d: usize) -> Vec<Vec<u32>> {
    fn go(m: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == m {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            go(m, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(m, d as u32, &mut Vec::new(), &mut out);
    out
}

fn monomial_index(m: usize, d: usize) -> HashMap<Vec<u32>, usize> {
    monomials(m, d).into_iter().enumerate().map(|(i, a)| (a, i)).collect()
}

pub fn sym_dim(m: usize, d: usize) -> usize {
    if m == 0 {
        return usize::from(d == 0);
    }
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..(m as u128 - 1) {
        num *= d as u128 + 1 + i;
        den *= i + 1;
    }
    (num / den) as usize
}

/// `Δ: Sym^d → Sym^{d−2}`, `x₁⋯x_d ↦ Σ_{k<l} b(x_k, x_l) Π_{i≠k,l} x_i`.
pub fn contraction(d: usize, ctx: &SymContext) -> Result<Mat> {
    if d < 2 {
        return Err(Error::InvalidInput("contraction needs degree at least 2".into()));
    }
    let m = ctx.vars();
    let g = ctx.space.gram();
    let src = monomials(m, d);
    let dst = monomial_index(m, d - 2);
    let mut out = Mat::zeros(dst.len(), src.len());
    for (col, a) in src.iter().enumerate() {
        for i in 0..m {
            if a[i] >= 2 && !g[(i, i)].is_zero() {
                let mut t = a.clone();
                t[i] -= 2;
                let c = Rational::from_int((a[i] as i64) * (a[i] as i64 - 1) / 2);
                out[(dst[&t], col)] += &(&c * &g[(i, i)]);
            }
            for j in i + 1..m {
                if a[i] >= 1 && a[j] >= 1 && !g[(i, j)].is_zero() {
                    let mut t = a.clone();
                    t[i] -= 1;
                    t[j] -= 1;
                    let c = Rational::from_int(a[i] as i64 * a[j] as i64);
                    out[(dst[&t], col)] += &(&c * &g[(i, j)]);
                }
            }
        }
    }
    Ok(out)
}

/// `ker Δ ⊆ Sym^d`, all of `Sym^d` when `d < 2`.
pub fn harmonic_kernel(d: usize, ctx: &SymContext) -> Result<Subspace> {
    let m = ctx.vars();
    if !ctx.space.is_nondegenerate() {
        return Err(Error::Precondition("form is degenerate".into()));
    }
    if d < 2 {
        return Ok(Subspace::full(sym_dim(m, d)));
    }
    let k = kernel(&contraction(d, ctx)?);
    if k.dim() + sym_dim(m, d - 2) != sym_dim(m, d) {
        return Err(Error::Internal(format!("contraction on Sym^{d} is not surjective")));
    }
    Ok(k)
}

/// Action of `x ∈ gl(m)` on `Sym^d` as a derivation.
pub fn sym_rep(x: &Mat, d: usize) -> Mat {
    let m = x.rows();
    let basis = monomials(m, d);
    let index = monomial_index(m, d);
    let mut out = Mat::zeros(basis.len(), basis.len());
    for (col, a) in basis.iter().enumerate() {
        for i in 0..m {
            if a[i] == 0 {
                continue;
            }
            let ai = Rational::from_int(a[i] as i64);
            for k in 0..m {
                if x[(k, i)].is_zero() {
                    continue;
                }
                let mut t = a.clone();
                t[i] -= 1;
                t[k] += 1;
                out[(index[&t], col)] += &(&ai * &x[(k, i)]);
            }
        }
    }
    out
}

/// Outcome of comparing the Verbitsky component of a symmetric product of
/// surface rings with `Sym^D` of the Mukai space.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ShEmbeddingReport {
    pub degree: usize,
    pub sh_dim: usize,
    pub sym_dim: usize,
    pub harmonic_dim: usize,
    /// `dim Sym^D − dim Sym^{D−2}`.
    pub expected_dim: usize,
    pub injective: bool,
    pub image_in_harmonic: bool,
    /// A word in the degree-two operators on which the map fails to be
    /// well defined.
    pub witness: Option<Vec<usize>>,
}

impl ShEmbeddingReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none() && self.injective && self.image_in_harmonic && self.sh_dim == self.expected_dim
    }
}

/// Builds the equivariant map from the subspace of `S^{⊗D}` generated from
/// `1` by the diagonal operators `e_x = Σ 1⊗…⊗L_x⊗…⊗1` (`S` the surface
/// ring of `b`) into `Sym^D` of the Mukai space, sending `1 ↦ α^D` and `e_x`
/// to the derivation extending `α ↦ x, y ↦ b(x, y)β, β ↦ 0`.
pub fn sh_embedding_check(b: &Mat, d: usize) -> Result<ShEmbeddingReport> {
    let s = surface_ring(b)?;
    let lat = mukai(b)?;
    let m = b.rows();
    let sd = m + 2;
    let big = sd.checked_pow(d as u32).filter(|&x| x <= 4096).ok_or_else(|| Error::InvalidInput("tensor power too large".into()))?;
    let ops: Vec<Mat> = (0..m)
        .map(|i| {
            let l = s.left_mul(i + 1);
            let id = Mat::identity(sd);
            let mut tot = Mat::zeros(big, big);
            for c in 0..d {
                let t = (0..d).fold(Mat::identity(1), |t, k| t.kron(if k == c { l } else { &id }));
                tot = tot.add(&t);
            }
            tot
        })
        .collect();
    let tilde: Vec<Mat> = (0..m)
        .map(|i| {
            let mut e = Mat::zeros(sd, sd);
            e[(1 + i, 0)] = Rational::one();
            for j in 0..m {
                e[(sd - 1, 1 + j)] = b[(i, j)].clone();
            }
            sym_rep(&e, d)
        })
        .collect();
    let sym = SymContext::new(lat.space.clone(), d);
    let mut one = vec![Rational::zero(); big];
    one[0] = Rational::one();
    let mut alpha_d = vec![Rational::zero(); sym.dim()];
    alpha_d[0] = Rational::one();

    let mut src = Echelon::new(big);
    let mut pairs = Echelon::new(big + sym.dim());
    let mut images: Vec<Vec<Rational>> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    let mut witness = None;
    let mut push = |v: Vec<Rational>, w: Vec<Rational>, word: Vec<usize>, queue: &mut std::collections::VecDeque<_>| {
        let mut vw = v.clone();
        vw.extend(w.iter().cloned());
        let grew_src = src.insert(&to_sparse(&v)).is_some();
        let grew_pair = pairs.insert(&to_sparse(&vw)).is_some();
        if grew_pair && !grew_src && witness.is_none() {
            witness = Some(word.clone());
        }
        if grew_src {
            images.push(w.clone());
            queue.push_back((v, w, word));
        }
    };
    push(one, alpha_d, Vec::new(), &mut queue);
    while let Some((v, w, word)) = queue.pop_front() {
        for i in 0..m {
            let mut nw = word.clone();
            nw.push(i);
            push(ops[i].mul_vec(&v), tilde[i].mul_vec(&w), nw, &mut queue);
        }
    }
    let sh_dim = src.len();
    let injective = rank(&Mat::from_rows(&images).reshape_empty(sym.dim())) == sh_dim;
    let (harmonic_dim, image_in_harmonic) = if d >= 2 {
        let delta = contraction(d, &sym)?;
        let h = harmonic_kernel(d, &sym)?;
        (h.dim(), images.iter().all(|w| delta.mul_vec(w).iter().all(Rational::is_zero)))
    } else {
        (sym.dim(), true)
    };
    let below = if d >= 2 { sym_dim(sd, d - 2) } else { 0 };
    Ok(ShEmbeddingReport {
        degree: d,
        sh_dim,
        sym_dim: sym.dim(),
        harmonic_dim,
        expected_dim: sym.dim() - below,
        injective,
        image_in_harmonic,
        witness,
    })
}

/// Simultaneous eigenvalues of `v` under `cartan`.
pub fn weight_of_vector(v: &[Rational], cartan: &[Mat]) -> Result<Vec<Rational>> {
    let Some(p) = v.iter().position(|x| !x.is_zero()) else {
        return Err(Error::InvalidInput("zero vector has no weight".into()));
    };
    cartan
        .iter()
        .enumerate()
        .map(|(k, h)| {
            let hv = h.mul_vec(v);
            let lambda = &hv[p] / &v[p];
            if hv.iter().zip(v).all(|(a, b)| *a == &lambda * b) {
                Ok(lambda)
            } else {
                Err(Error::NotAnEigenvector(k))
            }
        })
        .collect()
}

/// Whether every basis element of `positive` kills `v`.
pub fn highest_weight_check(positive: &MatrixLieAlgebra, v: &[Rational]) -> bool {
    positive.basis().iter().all(|x| x.mul_vec(v).iter().all(Rational::is_zero))
}

/// The data attached to `V = ρⁿ` for checking the highest weight of `⋀•V`
/// under the `G`-invariant part of `so(V ⊕ V*)`.
#[derive(Clone, Debug)]
pub struct PowerWeightSetup {
    pub ctx: SpinorContext,
    /// `dim ρ`.
    pub k: usize,
    /// `so(Ṽ)^G` on `Ṽ`.
    pub invariant_so: MatrixLieAlgebra,
    /// Block sums `H′_j ∈ so(Ṽ)`.
    pub cartan_tilde: Vec<Mat>,
    /// `spinor_rep(H′_j)`.
    pub cartan: Vec<Mat>,
    /// Spinor images of the positive-degree part of `so(Ṽ)^G` for
    /// `h = Σ (n − j + 1) H′_j`.
    pub positive: MatrixLieAlgebra,
    pub top: Vec<Rational>,
    pub bottom: Vec<Rational>,
}

pub fn power_weight_setup(rho: &RepMat, n: usize) -> Result<PowerWeightSetup> {
    let k = rho.dim();
    let vd = k * n;
    if vd == 0 || vd > 10 {
        return Err(Error::InvalidInput("need 1 ≤ dim V ≤ 10".into()));
    }
    let ctx = SpinorContext::new(vd);
    let group = rho.group();
    let action: Vec<Mat> = (0..group.order())
        .map(|g| {
            let blocks: Vec<&Mat> = std::iter::repeat_n(rho.matrix(g), n).collect();
            let v = Mat::block_diag(&blocks);
            let inv = rho.matrix(group.inv(g)).transpose();
            let dual_blocks: Vec<&Mat> = std::iter::repeat_n(&inv, n).collect();
            Mat::block_diag(&[&v, &Mat::block_diag(&dual_blocks)])
        })
        .collect();
    let so = orthogonal_algebra(&ctx.standard_form());
    let comm = commutant(&action, 2 * vd);
    let mut ech = Echelon::new(4 * vd * vd);
    for c in &comm {
        ech.insert(&to_sparse(&c.flatten()));
    }
    let inter = so.subspace().intersection(&ech.into_subspace());
    let mats: Vec<Mat> = inter.vectors().into_iter().map(|v| Mat::from_vec(2 * vd, 2 * vd, v)).collect();
    let invariant_so = MatrixLieAlgebra::from_basis(&mats, 2 * vd)?;
    let cartan_tilde: Vec<Mat> = (0..n)
        .map(|j| {
            let d: Vec<Rational> = (0..vd).map(|i| if i / k == j { Rational::one() } else { Rational::zero() }).collect();
            ctx.gl_embed(&Mat::diag(&d))
        })
        .collect();
    let mut h = Mat::zeros(2 * vd, 2 * vd);
    for (j, c) in cartan_tilde.iter().enumerate() {
        h = h.add(&c.scale(&Rational::from_int((n - j) as i64)));
    }
    let graded = grade_by(&h, &invariant_so)?;
    let mut pos = Vec::new();
    for (&deg, piece) in graded.grading().into_iter().flatten() {
        if deg > 0 {
            for x in piece {
                pos.push(spinor_rep(x, &ctx)?);
            }
        }
    }
    let positive = MatrixLieAlgebra::closure(&pos, ctx.module_dim());
    let cartan = cartan_tilde.iter().map(|c| spinor_rep(c, &ctx)).collect::<Result<_>>()?;
    let mut top = vec![Rational::zero(); ctx.module_dim()];
    *top.last_mut().expect("nonempty") = Rational::one();
    let mut bottom = vec![Rational::zero(); ctx.module_dim()];
    bottom[0] = Rational::one();
    Ok(PowerWeightSetup { ctx, k, invariant_so, cartan_tilde, cartan, positive, top, bottom })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{dual_apply, q, qi};
    use crate::groupalg::FiniteGroup;
    use proptest::prelude::*;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| qi(a)).collect()
    }

    #[test]
    fn gl_identity_acts_by_shifted_degree() {
        for n in 0..4 {
            let ctx = SpinorContext::new(n);
            let r = spinor_rep(&ctx.gl_embed(&Mat::identity(n)), &ctx).unwrap();
            let d: Vec<Rational> = ctx.degrees().iter().map(|&k| qi(k as i64) - q(n as i64, 2)).collect();
            assert_eq!(r, Mat::diag(&d));
        }
    }

    #[test]
    fn wedge_block_example() {
        let ctx = SpinorContext::new(2);
        let z = Mat::zeros(2, 2);
        let b = Mat::from_i64(2, 2, &[0, 1, -1, 0]);
        let r = spinor_rep(&ctx.assemble(&z, &b, &z), &ctx).unwrap();
        assert_eq!(r.mul_vec(&v(&[1, 0, 0, 0])), v(&[0, 0, 0, 1]));
        assert_eq!(r.mul_vec(&v(&[0, 0, 0, 1])), v(&[0, 0, 0, 0]));
        assert!(spinor_rep(&Mat::identity(4), &ctx).is_err());
    }

    #[test]
    fn nilpotent_gl_block_and_derivation_rule() {
        let ctx = SpinorContext::new(3);
        let a = Mat::from_i64(3, 3, &[0, 1, 2, 0, 0, 3, 0, 0, 0]);
        let r = spinor_rep(&ctx.gl_embed(&a), &ctx).unwrap();
        assert!(r.pow(4).is_zero());
        // A(e₂∧e₃) = Ae₂∧e₃ + e₂∧Ae₃ = e₁∧e₃ + 2 e₂∧e₁... computed via wedges
        let idx = |m: u32| ctx.index_of(m);
        let mut x = vec![qi(0); 8];
        x[idx(0b110)] = qi(1);
        let y = r.mul_vec(&x);
        let mut expect = vec![qi(0); 8];
        expect[idx(0b101)] = qi(1);
        expect[idx(0b011)] = qi(-2);
        assert_eq!(y, expect);
    }

    #[test]
    fn homomorphism_on_full_basis() {
        for n in 1..=3 {
            let ctx = SpinorContext::new(n);
            let basis = ctx.so_basis();
            let reps: Vec<Mat> = basis.iter().map(|x| spinor_rep(x, &ctx).unwrap()).collect();
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    let lhs = reps[i].bracket(&reps[j]);
                    let rhs = spinor_rep(&basis[i].bracket(&basis[j]), &ctx).unwrap();
                    assert_eq!(lhs, rhs, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn wedge_power_examples() {
        let ctx = SpinorContext::new(2);
        assert_eq!(wedge_power(&Mat::identity(2), &ctx), Mat::identity(4));
        let w = wedge_power(&Mat::diag(&[qi(2), qi(3)]), &ctx);
        assert_eq!(w[(3, 3)], qi(6));
        let w = wedge_power(&Mat::from_i64(2, 2, &[1, 1, 0, 1]), &ctx);
        assert_eq!(w.mul_vec(&v(&[0, 0, 1, 0])), v(&[0, 1, 1, 0]));
        assert_eq!(w.mul_vec(&v(&[0, 0, 0, 1])), v(&[0, 0, 0, 1]));
    }

    #[test]
    fn scalar_action_examples() {
        let ctx = SpinorContext::new(2);
        assert_eq!(scalar_action(&qi(1), &ctx).unwrap(), Mat::identity(4));
        assert_eq!(scalar_action(&qi(-1), &ctx).unwrap(), Mat::diag(&v(&[1, -1, -1, 1])));
        let s = scalar_action(&qi(2), &SpinorContext::new(3)).unwrap();
        assert_eq!(s[(7, 7)], qi(8));
        assert!(scalar_action(&qi(0), &ctx).is_err());
    }

    #[test]
    fn contraction_examples() {
        let hyp = mukai(&Mat::zeros(0, 0)).unwrap().space;
        let ctx = SymContext::new(hyp, 2);
        // basis α², αβ, β²
        assert_eq!(contraction(2, &ctx).unwrap(), Mat::from_i64(1, 3, &[0, -1, 0]));
        let one = SymContext::new(QuadraticSpace::diagonal(&[qi(1)]), 2);
        assert_eq!(contraction(2, &one).unwrap(), Mat::identity(1));
        let three = SymContext::new(QuadraticSpace::diagonal(&[qi(1), qi(1), qi(1)]), 3);
        let x123 = three.basis().iter().position(|a| a == &[1, 1, 1]).unwrap();
        assert!(contraction(3, &three).unwrap().column(x123).iter().all(Rational::is_zero));
        assert!(contraction(1, &three).is_err());
    }

    #[test]
    fn harmonic_kernel_examples() {
        let two = SymContext::new(QuadraticSpace::diagonal(&[qi(1), qi(1)]), 2);
        assert_eq!(harmonic_kernel(2, &two).unwrap().dim(), 2);
        let five = SymContext::new(QuadraticSpace::diagonal(&vec![qi(1); 5]), 2);
        assert_eq!(harmonic_kernel(2, &five).unwrap().dim(), 14);
        assert_eq!(harmonic_kernel(1, &five).unwrap().dim(), 5);
    }

    #[test]
    fn sh_embedding_examples() {
        let b = Mat::identity(3);
        let r = sh_embedding_check(&b, 1).unwrap();
        assert_eq!((r.sh_dim, r.expected_dim), (5, 5));
        assert!(r.passed());
        let r = sh_embedding_check(&b, 2).unwrap();
        assert_eq!((r.sh_dim, r.expected_dim), (14, 14));
        assert!(r.passed(), "{r:?}");
        let r = sh_embedding_check(&b, 0).unwrap();
        assert_eq!((r.sh_dim, r.sym_dim), (1, 1));
        assert!(r.passed());
    }

    #[test]
    fn weight_examples() {
        let rho = RepMat::trivial(FiniteGroup::trivial(), 1);
        let s = power_weight_setup(&rho, 2).unwrap();
        assert_eq!(weight_of_vector(&s.top, &s.cartan).unwrap(), vec![q(1, 2); 2]);
        assert_eq!(weight_of_vector(&s.bottom, &s.cartan).unwrap(), vec![q(-1, 2); 2]);
        assert!(highest_weight_check(&s.positive, &s.top));
        assert!(!highest_weight_check(&s.positive, &s.bottom));
        assert_eq!(weight_of_vector(&s.top, &[Mat::zeros(4, 4)]).unwrap(), vec![qi(0)]);
        assert!(highest_weight_check(&MatrixLieAlgebra::zero(4), &s.bottom));
        let mut generic = vec![qi(1); 4];
        generic[3] = qi(0);
        assert_eq!(weight_of_vector(&generic, &s.cartan), Err(Error::NotAnEigenvector(0)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]
        #[test]
        fn derivative_of_wedge_power(entries in proptest::collection::vec(-3i64..=3, 9)) {
            let ctx = SpinorContext::new(3);
            let mut a = Mat::from_i64(3, 3, &entries);
            let t = a.trace();
            a[(2, 2)] -= &t;
            let d = dual_apply(|x| wedge_power(x, &ctx), &a);
            prop_assert_eq!(d, spinor_rep(&ctx.gl_embed(&a), &ctx).unwrap());
        }

        #[test]
        fn contraction_is_equivariant(i in 0usize..4, j in 0usize..4, d in 2usize..=4) {
            prop_assume!(i != j);
            let g = Mat::diag(&[qi(1), qi(2), qi(-1), qi(3)]);
            let qs = QuadraticSpace::new(g.clone()).unwrap();
            // X = E_ij g⁻¹-twisted: X = E_ij·g − E_ji·g is skew for g? use g⁻¹(E_ij − E_ji)
            let e = Mat::unit(4, 4, i, j).sub(&Mat::unit(4, 4, j, i));
            let x = crate::linalg::inverse(&g).unwrap().mul(&e);
            prop_assert!(x.transpose().mul(&g).add(&g.mul(&x)).is_zero());
            let ctx = SymContext::new(qs, d);
            let delta = contraction(d, &ctx).unwrap();
            prop_assert_eq!(delta.mul(&sym_rep(&x, d)), sym_rep(&x, d - 2).mul(&delta));
        }
    }
}
