//! Matrix Lie algebras over ℚ.

use std::collections::{BTreeMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{factor_rational, Rational};
use crate::linalg::{
    commutant, det, kernel, minimal_polynomial, signature, to_dense, to_sparse, Echelon, Mat, Signature, Subspace,
};
use crate::semisimple::primitive_idempotents;
use crate::{Error, Result};

/// A Lie subalgebra of `gl(n)` held as a canonical (RREF) basis of
/// flattened matrices.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    n: usize,
    basis: Vec<Mat>,
    span: Subspace,
    generators: Vec<Mat>,
    grading: Option<BTreeMap<i64, Vec<Mat>>>,
}

impl PartialEq for MatrixLieAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.span == o.span
    }
}

impl Eq for MatrixLieAlgebra {}

impl MatrixLieAlgebra {
    pub fn zero(n: usize) -> Self {
        MatrixLieAlgebra {
            n,
            basis: Vec::new(),
            span: Subspace::zero(n * n),
            generators: Vec::new(),
            grading: None,
        }
    }

    fn from_echelon(n: usize, ech: Echelon, generators: Vec<Mat>) -> Self {
        let span = ech.into_subspace();
        let basis = span.vectors().into_iter().map(|v| Mat::from_vec(n, n, v)).collect();
        MatrixLieAlgebra { n, basis, span, generators, grading: None }
    }

    /// The Lie algebra generated by `generators`.
    ///
    /// Each new element is bracketed only with the generators: the span of
    /// iterated brackets `[g₁, [g₂, … gₖ]]` is already bracket-closed.
    pub fn closure(generators: &[Mat], n: usize) -> Self {
        let mut ech = Echelon::new(n * n);
        let mut gens = Vec::new();
        let mut queue = VecDeque::new();
        for g in generators {
            assert_eq!(g.shape(), (n, n), "generator has wrong size");
            if ech.insert(&to_sparse(g.data())).is_some() {
                gens.push(g.clone());
                queue.push_back(g.clone());
            }
        }
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let b = g.bracket(&x);
                if !b.is_zero() && ech.insert(&to_sparse(b.data())).is_some() {
                    queue.push_back(b);
                }
            }
        }
        MatrixLieAlgebra::from_echelon(n, ech, gens)
    }

    /// Span of `mats`, which must already be closed under brackets.
    pub fn from_basis(mats: &[Mat], n: usize) -> Result<Self> {
        let mut ech = Echelon::new(n * n);
        let mut gens = Vec::new();
        for m in mats {
            if m.shape() != (n, n) {
                return Err(Error::InvalidInput("matrix has wrong size".into()));
            }
            if ech.insert(&to_sparse(m.data())).is_some() {
                gens.push(m.clone());
            }
        }
        let g = MatrixLieAlgebra::from_echelon(n, ech, gens);
        for (i, a) in g.basis.iter().enumerate() {
            for b in &g.basis[i + 1..] {
                if !g.contains(&a.bracket(b)) {
                    return Err(Error::InvalidInput("span is not closed under brackets".into()));
                }
            }
        }
        Ok(g)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    /// A generating set (linearly independent).
    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    /// The span as a subspace of flattened `n × n` matrices.
    pub fn subspace(&self) -> &Subspace {
        &self.span
    }

    pub fn contains(&self, x: &Mat) -> bool {
        self.span.contains(x.data())
    }

    pub fn coordinates(&self, x: &Mat) -> Option<Vec<Rational>> {
        self.span.coordinates(x.data())
    }

    pub fn element(&self, coords: &[Rational]) -> Mat {
        Mat::from_vec(self.n, self.n, self.span.combine(coords))
    }

    pub fn is_subalgebra_of(&self, o: &MatrixLieAlgebra) -> bool {
        self.n == o.n && self.span.is_subspace_of(&o.span)
    }

    /// `[g, self] ⊆ self`.
    pub fn is_ideal_of(&self, g: &MatrixLieAlgebra) -> bool {
        self.is_subalgebra_of(g) && g.generators.iter().all(|x| self.basis.iter().all(|y| self.contains(&x.bracket(y))))
    }

    /// Matrix of `ad x` on the basis. `x` must normalize the algebra.
    ///
    /// Coordinates in an RREF basis are the entries at the pivot columns,
    /// so only those entries of each bracket are computed.
    pub fn ad(&self, x: &Mat) -> Mat {
        let d = self.dim();
        let n = self.n;
        let pivots: Vec<(usize, usize)> = self.span.pivots().iter().map(|&p| (p / n, p % n)).collect();
        let mut out = Mat::zeros(d, d);
        for (j, b) in self.basis.iter().enumerate() {
            for (i, &(r, c)) in pivots.iter().enumerate() {
                let mut acc = Rational::zero();
                for k in 0..n {
                    let (xr, bc) = (&x[(r, k)], &b[(k, c)]);
                    if !xr.is_zero() && !bc.is_zero() {
                        acc += xr * bc;
                    }
                    let (br, xc) = (&b[(r, k)], &x[(k, c)]);
                    if !br.is_zero() && !xc.is_zero() {
                        acc -= br * xc;
                    }
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    /// Degree pieces, when a grading has been computed by [`grade_by`].
    pub fn grading(&self) -> Option<&BTreeMap<i64, Vec<Mat>>> {
        self.grading.as_ref()
    }

    pub fn graded_dims(&self) -> Option<BTreeMap<i64, usize>> {
        self.grading.as_ref().map(|g| g.iter().map(|(k, v)| (*k, v.len())).collect())
    }

    pub fn degree_piece(&self, k: i64) -> Vec<Mat> {
        self.grading.as_ref().and_then(|g| g.get(&k).cloned()).unwrap_or_default()
    }
}

/// Alias for [`MatrixLieAlgebra::closure`].
pub fn closure(generators: &[Mat], n: usize) -> MatrixLieAlgebra {
    MatrixLieAlgebra::closure(generators, n)
}

/// `[g, g]`.
pub fn derived(g: &MatrixLieAlgebra) -> MatrixLieAlgebra {
    let n = g.n;
    let mut ech = Echelon::new(n * n);
    let mut gens = Vec::new();
    for (i, a) in g.basis.iter().enumerate() {
        for b in &g.basis[i + 1..] {
            let c = a.bracket(b);
            if !c.is_zero() && ech.insert(&to_sparse(c.data())).is_some() {
                gens.push(c);
            }
        }
    }
    MatrixLieAlgebra::from_echelon(n, ech, gens)
}

/// Killing form `κ(X, Y) = tr(ad X ∘ ad Y)` on the basis, and whether it is
/// nondegenerate. The zero algebra counts as semisimple.
pub fn killing_semisimple(g: &MatrixLieAlgebra) -> (Mat, bool) {
    let d = g.dim();
    let dense: Vec<Mat> = g.basis.iter().map(|b| g.ad(b)).collect();
    let ads: Vec<Vec<(usize, usize, &Rational)>> = dense
        .iter()
        .map(|a| {
            let mut v = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    if !a[(i, j)].is_zero() {
                        v.push((i, j, &a[(i, j)]));
                    }
                }
            }
            v
        })
        .collect();
    let mut k = Mat::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            // tr(AB) = Σ A_{kl} B_{lk}
            let mut acc = Rational::zero();
            for (r, c, x) in &ads[i] {
                let y = &dense[j][(*c, *r)];
                if !y.is_zero() {
                    acc += *x * y;
                }
            }
            k[(i, j)] = acc.clone();
            k[(j, i)] = acc;
        }
    }
    let ss = d == 0 || !det(&k).is_zero();
    (k, ss)
}

/// Basis of the centroid, the commutant of `ad g` in `End(g)`.
pub fn centroid(g: &MatrixLieAlgebra) -> Vec<Mat> {
    let ads: Vec<Mat> = g.generators.iter().map(|x| g.ad(x)).collect();
    commutant(&ads, g.dim())
}

/// Simple (over ℚ) ideals whose direct sum is the algebra.
#[derive(Clone, Debug)]
pub struct IdealDecomposition {
    pub ideals: Vec<MatrixLieAlgebra>,
}

impl IdealDecomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.ideals.iter().map(MatrixLieAlgebra::dim).collect()
    }

    /// Pairwise commuting, independent, summing to `g`.
    pub fn verify(&self, g: &MatrixLieAlgebra) -> bool {
        let total: usize = self.dims().iter().sum();
        let all: Vec<Vec<Rational>> = self.ideals.iter().flat_map(|i| i.span.vectors()).collect();
        let sum = Subspace::from_vectors(g.n * g.n, &all);
        if total != g.dim() || sum != g.span {
            return false;
        }
        for (a, ia) in self.ideals.iter().enumerate() {
            if !ia.is_ideal_of(g) {
                return false;
            }
            for ib in &self.ideals[a + 1..] {
                if ia.basis.iter().any(|x| ib.basis.iter().any(|y| !x.bracket(y).is_zero())) {
                    return false;
                }
            }
        }
        true
    }
}

/// Decomposes a semisimple algebra into ℚ-simple ideals via the primitive
/// idempotents of the centroid.
pub fn minimal_ideals(g: &MatrixLieAlgebra) -> Result<IdealDecomposition> {
    if g.dim() == 0 {
        return Ok(IdealDecomposition { ideals: Vec::new() });
    }
    if !killing_semisimple(g).1 {
        return Err(Error::NotSemisimple);
    }
    let c = centroid(g);
    let es = primitive_idempotents(&c, 0x1DEA1)?;
    let mut ideals = Vec::with_capacity(es.len());
    for e in &es {
        let n = g.n;
        let mut ech = Echelon::new(n * n);
        let mut gens = Vec::new();
        for j in 0..g.dim() {
            let col = e.column(j);
            if col.iter().all(Rational::is_zero) {
                continue;
            }
            let m = g.element(&col);
            if ech.insert(&to_sparse(m.data())).is_some() {
                gens.push(m);
            }
        }
        ideals.push(MatrixLieAlgebra::from_echelon(n, ech, gens));
    }
    ideals.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.span.basis().data().cmp(b.span.basis().data())));
    Ok(IdealDecomposition { ideals })
}

/// Eigenvalues of `h` when it is diagonalizable over ℚ.
fn rational_eigenvalues(h: &Mat) -> Option<Vec<Rational>> {
    let mu = minimal_polynomial(h);
    let f = factor_rational(&mu).ok()?;
    if f.iter().any(|(p, m)| *m > 1 || p.degree() != Some(1)) {
        return None;
    }
    Some(f.iter().map(|(p, _)| -&p.coeff(0) / &p.coeff(1)).collect())
}

/// Eigenspace decomposition of `g` under `ad h`, stored as a grading.
pub fn grade_by(h: &Mat, g: &MatrixLieAlgebra) -> Result<MatrixLieAlgebra> {
    let n = g.n;
    for b in &g.basis {
        if !g.contains(&h.bracket(b)) {
            return Err(Error::Precondition("h does not normalize the algebra".into()));
        }
    }
    let mut pieces: BTreeMap<i64, Vec<Mat>> = BTreeMap::new();
    if let Some(eig) = rational_eigenvalues(h) {
        // Ambient projectors P_λ; the degree-c part of X is Σ_{λ−μ=c} P_λ X P_μ.
        let proj: Vec<Mat> = eig
            .iter()
            .map(|l| {
                let mut p = Mat::identity(n);
                for m in eig.iter().filter(|m| *m != l) {
                    let f = h.sub(&Mat::identity(n).scale(m)).scale(&(l - m).recip());
                    p = p.mul(&f);
                }
                p
            })
            .collect();
        let mut parts: BTreeMap<Rational, Echelon> = BTreeMap::new();
        for b in &g.basis {
            let mut by_deg: BTreeMap<Rational, Mat> = BTreeMap::new();
            for (i, l) in eig.iter().enumerate() {
                let left = proj[i].mul(b);
                if left.is_zero() {
                    continue;
                }
                for (j, m) in eig.iter().enumerate() {
                    let x = left.mul(&proj[j]);
                    if x.is_zero() {
                        continue;
                    }
                    let c = l - m;
                    let e = by_deg.entry(c).or_insert_with(|| Mat::zeros(n, n));
                    *e = e.add(&x);
                }
            }
            for (c, x) in by_deg {
                if !x.is_zero() {
                    parts.entry(c).or_insert_with(|| Echelon::new(n * n)).insert(&to_sparse(x.data()));
                }
            }
        }
        for (c, ech) in parts {
            let k = c.to_i64().filter(|_| c.is_integer()).ok_or_else(|| {
                Error::NonIntegralGrading(format!("ad h has eigenvalue {c} on the algebra"))
            })?;
            let mats: Vec<Mat> = ech.into_rref_rows().iter().map(|r| Mat::from_vec(n, n, to_dense(r, n * n))).collect();
            pieces.insert(k, mats);
        }
    } else {
        let ad = g.ad(h);
        let d = g.dim();
        let mu = minimal_polynomial(&ad);
        let f = factor_rational(&mu)?;
        for (p, m) in &f {
            if *m > 1 || p.degree() != Some(1) {
                return Err(Error::NonIntegralGrading("ad h is not diagonalizable over ℚ".into()));
            }
            let c = -&p.coeff(0) / &p.coeff(1);
            let k = c.to_i64().filter(|_| c.is_integer()).ok_or_else(|| {
                Error::NonIntegralGrading(format!("ad h has eigenvalue {c} on the algebra"))
            })?;
            let ker = kernel(&ad.sub(&Mat::identity(d).scale(&c)));
            pieces.insert(k, ker.vectors().iter().map(|v| g.element(v)).collect());
        }
    }
    let total: usize = pieces.values().map(Vec::len).sum();
    if total != g.dim() {
        return Err(Error::NonIntegralGrading("ad h is not diagonalizable over ℚ".into()));
    }
    verify_grading(h, &pieces)?;
    let mut out = g.clone();
    out.grading = Some(pieces);
    Ok(out)
}

/// `[g_a, g_b] ⊆ g_{a+b}`, tested as `[h, [x, y]] = (a+b)[x, y]`. All pairs
/// up to 64 basis elements; a seeded sample beyond.
fn verify_grading(h: &Mat, pieces: &BTreeMap<i64, Vec<Mat>>) -> Result<()> {
    let flat: Vec<(i64, &Mat)> = pieces.iter().flat_map(|(k, v)| v.iter().map(move |m| (*k, m))).collect();
    let check = |i: usize, j: usize| {
        let (a, x) = flat[i];
        let (b, y) = flat[j];
        let z = x.bracket(y);
        h.bracket(&z) == z.scale(&Rational::from_int(a + b))
    };
    let d = flat.len();
    let bad = || Err(Error::Internal("grading is not compatible with the bracket".into()));
    if d <= 64 {
        for i in 0..d {
            for j in i + 1..d {
                if !check(i, j) {
                    return bad();
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(d as u64);
        for _ in 0..512 {
            if !check(rng.random_range(0..d), rng.random_range(0..d)) {
                return bad();
            }
        }
    }
    Ok(())
}

/// Structure invariants of a semisimple algebra.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct LieInvariants {
    pub dim: usize,
    pub centroid_dim: usize,
    pub dim_over_centroid: usize,
    pub rank_over_centroid: usize,
    pub killing_signature: Signature,
    /// Simple types over the algebraic closure matching `(rank, dim)`;
    /// B and C of equal rank are both listed.
    pub candidate_types: Vec<String>,
}

pub const RANK_RETRIES: usize = 32;

/// Dimension, centroid, rank and Killing signature; rank comes from the
/// centralizer of a sampled regular semisimple element.
pub fn invariants_report(g: &MatrixLieAlgebra, seed: u64) -> Result<LieInvariants> {
    let (kappa, ss) = killing_semisimple(g);
    if !ss {
        return Err(Error::NotSemisimple);
    }
    let c = centroid(g).len();
    let d = g.dim();
    let rank = sample_rank(g, seed)?;
    if c == 0 || !d.is_multiple_of(c) || rank % c != 0 {
        return Err(Error::Internal("centroid dimension does not divide".into()));
    }
    let (dc, rc) = (d / c, rank / c);
    Ok(LieInvariants {
        dim: d,
        centroid_dim: c,
        dim_over_centroid: dc,
        rank_over_centroid: rc,
        killing_signature: signature(&kappa)?,
        candidate_types: candidate_types(rc, dc),
    })
}

fn sample_rank(g: &MatrixLieAlgebra, seed: u64) -> Result<usize> {
    if g.dim() == 0 {
        return Ok(0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANK_RETRIES {
        let coords: Vec<Rational> = (0..g.dim()).map(|_| Rational::from_int(rng.random_range(-3..=3))).collect();
        let x = g.element(&coords);
        // semisimple in a faithful representation ⇔ ad-semisimple
        let mu = minimal_polynomial(&x);
        if factor_rational(&mu)?.iter().any(|(_, m)| *m > 1) {
            continue;
        }
        let cent = kernel(&g.ad(&x));
        let elems: Vec<Mat> = cent.vectors().iter().map(|v| g.element(v)).collect();
        let abelian = elems.iter().enumerate().all(|(i, a)| elems[i + 1..].iter().all(|b| a.bracket(b).is_zero()));
        if abelian {
            return Ok(cent.dim());
        }
    }
    Err(Error::RankUndetermined(RANK_RETRIES))
}

/// Simple types `X_r` over the algebraic closure with the given rank and dimension.
pub fn candidate_types(rank: usize, dim: usize) -> Vec<String> {
    let r = rank;
    let mut out = Vec::new();
    if r >= 1 && dim == r * (r + 2) {
        out.push(format!("A{r}"));
    }
    if r >= 2 && dim == r * (2 * r + 1) {
        out.push(format!("B{r}"));
        out.push(format!("C{r}"));
    }
    if r >= 4 && dim == r * (2 * r - 1) {
        out.push(format!("D{r}"));
    }
    for (name, rr, dd) in [("G2", 2, 14), ("F4", 4, 52), ("E6", 6, 78), ("E7", 7, 133), ("E8", 8, 248)] {
        if r == rr && dim == dd {
            out.push(name.to_string());
        }
    }
    out
}

/// Sub-algebra of `gl(n)` of matrices skew for the form `b`: `Xᵀb + bX = 0`.
pub fn orthogonal_algebra(b: &Mat) -> MatrixLieAlgebra {
    let n = b.rows();
    let mut ech = Echelon::new(n * n);
    for i in 0..n {
        for j in 0..n {
            // (Xᵀb + bX)_{ij} = Σ_k X_{ki} b_{kj} + b_{ik} X_{kj}
            let mut row = Vec::new();
            for k in 0..n {
                if !b[(k, j)].is_zero() {
                    row.push((k * n + i, b[(k, j)].clone()));
                }
                if !b[(i, k)].is_zero() {
                    row.push((k * n + j, b[(i, k)].clone()));
                }
            }
            let row = crate::linalg::merge(row);
            if !row.is_empty() {
                ech.insert(&row);
            }
        }
    }
    let mats: Vec<Mat> = ech.null_space().into_iter().map(|v| Mat::from_vec(n, n, v)).collect();
    let mut e = Echelon::new(n * n);
    for m in &mats {
        e.insert(&to_sparse(m.data()));
    }
    MatrixLieAlgebra::from_echelon(n, e, mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;

    fn e(n: usize, i: usize, j: usize) -> Mat {
        Mat::unit(n, n, i, j)
    }

    fn sl2() -> MatrixLieAlgebra {
        closure(&[e(2, 0, 1), e(2, 1, 0)], 2)
    }

    #[test]
    fn closure_examples() {
        assert_eq!(closure(&[Mat::zeros(2, 2)], 2).dim(), 0);
        assert_eq!(sl2().dim(), 3);
        let g = closure(&[e(2, 0, 1), e(2, 1, 0), Mat::identity(2)], 2);
        assert_eq!(g.dim(), 4);
        assert_eq!(closure(g.basis(), 2), g);
    }

    #[test]
    fn derived_examples() {
        assert_eq!(derived(&closure(&[Mat::diag(&[qi(1), qi(2)])], 2)).dim(), 0);
        assert_eq!(derived(&sl2()), sl2());
        let gl2 = closure(&[e(2, 0, 1), e(2, 1, 0), Mat::identity(2)], 2);
        assert_eq!(derived(&gl2), sl2());
    }

    #[test]
    fn killing_examples() {
        let (k, ss) = killing_semisimple(&MatrixLieAlgebra::zero(2));
        assert!(ss && k.rows() == 0);
        let (k, ss) = killing_semisimple(&sl2());
        assert!(ss);
        assert_eq!(signature(&k).unwrap(), Signature::new(2, 1, 0));
        assert!(!killing_semisimple(&closure(&[Mat::identity(2)], 2)).1);
    }

    #[test]
    fn centroid_examples() {
        assert_eq!(centroid(&sl2()).len(), 1);
        let ab = closure(&[Mat::diag(&[qi(1), qi(0)]), Mat::diag(&[qi(0), qi(1)])], 2);
        assert_eq!(centroid(&ab).len(), 4);
        // sl₂(ℚ(i)) realized in gl(4) via a + bi ↦ [[a, −b], [b, a]]
        let j = Mat::from_i64(2, 2, &[0, -1, 1, 0]);
        let gens: Vec<Mat> = [e(2, 0, 1), e(2, 1, 0)]
            .iter()
            .flat_map(|x| [x.kron(&Mat::identity(2)), x.kron(&j)])
            .collect();
        let g = closure(&gens, 4);
        assert_eq!(g.dim(), 6);
        assert_eq!(centroid(&g).len(), 2);
        assert_eq!(minimal_ideals(&g).unwrap().dims(), vec![6]);
    }

    #[test]
    fn minimal_ideal_examples() {
        assert_eq!(minimal_ideals(&sl2()).unwrap().dims(), vec![3]);
        let gens: Vec<Mat> = [e(4, 0, 1), e(4, 1, 0), e(4, 2, 3), e(4, 3, 2)].to_vec();
        let g = closure(&gens, 4);
        let dec = minimal_ideals(&g).unwrap();
        assert_eq!(dec.dims(), vec![3, 3]);
        assert!(dec.verify(&g));
        let so4 = orthogonal_algebra(&Mat::identity(4));
        assert_eq!(so4.dim(), 6);
        let dec = minimal_ideals(&so4).unwrap();
        assert_eq!(dec.dims(), vec![3, 3]);
        assert!(dec.verify(&so4));
        assert!(minimal_ideals(&closure(&[Mat::identity(2)], 2)).is_err());
    }

    #[test]
    fn grade_by_examples() {
        let g = grade_by(&Mat::zeros(2, 2), &sl2()).unwrap();
        assert_eq!(g.graded_dims().unwrap(), BTreeMap::from([(0, 3)]));
        let g = grade_by(&Mat::diag(&[qi(1), qi(-1)]), &sl2()).unwrap();
        assert_eq!(g.graded_dims().unwrap(), BTreeMap::from([(-2, 1), (0, 1), (2, 1)]));
        let half = Mat::diag(&[crate::q(1, 4), crate::q(-1, 4)]);
        assert!(matches!(grade_by(&half, &sl2()), Err(Error::NonIntegralGrading(_))));
    }

    #[test]
    fn invariants_examples() {
        let r = invariants_report(&sl2(), 7).unwrap();
        assert_eq!((r.dim, r.centroid_dim, r.dim_over_centroid, r.rank_over_centroid), (3, 1, 3, 1));
        assert_eq!(r.candidate_types, vec!["A1"]);
        let so5 = orthogonal_algebra(&Mat::identity(5));
        let r = invariants_report(&so5, 7).unwrap();
        assert_eq!((r.dim, r.rank_over_centroid), (10, 2));
        assert_eq!(r.candidate_types, vec!["B2", "C2"]);
        assert_eq!(r.killing_signature, Signature::new(0, 10, 0));
    }

    #[test]
    fn so8_rank() {
        let so8 = orthogonal_algebra(&Mat::identity(8));
        let r = invariants_report(&so8, 3).unwrap();
        assert_eq!((r.dim, r.rank_over_centroid), (28, 4));
        assert_eq!(r.candidate_types, vec!["D4"]);
    }
}
