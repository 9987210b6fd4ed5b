//! Matrix algebras with involution.

use crate::exact::Rational;
use crate::groupalg::{CentralIdempotentSet, FiniteGroup};
use crate::lie::{derived, orthogonal_algebra, MatrixLieAlgebra};
use crate::linalg::{commutant, inverse, kernel, rank, to_sparse, Echelon, Mat, Subspace};
use crate::semisimple::primitive_idempotents_with_unit;
use crate::{Error, Result};

/// A unital subalgebra `A ⊆ End(U)` with a linear anti-automorphism `σ` of
/// order 2. `sigma` acts on coordinates relative to `basis`.
#[derive(Clone, Debug)]
pub struct AlgebraWithInvolution {
    n: usize,
    basis: Vec<Mat>,
    span: Subspace,
    unit: Mat,
    sigma: Mat,
    /// RREF coordinates → coordinates in `basis`.
    to_basis: Mat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Kind {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum InvolutionType {
    Orthogonal,
    Symplectic,
    Unitary,
}

impl AlgebraWithInvolution {
    /// Builds `(A, σ)` from a spanning set of `A` and `σ` as a function on
    /// matrices, verifying closure, the unit, `σ² = id` and `σ(xy) = σ(y)σ(x)`.
    pub fn from_map(n: usize, spanning: &[Mat], sigma: impl Fn(&Mat) -> Mat) -> Result<Self> {
        AlgebraWithInvolution::with_unit(n, spanning, &Mat::identity(n), sigma)
    }

    /// As [`AlgebraWithInvolution::from_map`] for an algebra whose unit is
    /// the idempotent `unit` (a corner `eAe` of a larger matrix algebra).
    pub fn with_unit(n: usize, spanning: &[Mat], unit: &Mat, sigma: impl Fn(&Mat) -> Mat) -> Result<Self> {
        let mut ech = Echelon::new(n * n);
        let mut basis = Vec::new();
        for m in spanning {
            if m.shape() != (n, n) {
                return Err(Error::InvalidInput("matrix has wrong size".into()));
            }
            if ech.insert(&to_sparse(m.data())).is_some() {
                basis.push(m.clone());
            }
        }
        let span = Subspace::from_vectors(n * n, &basis.iter().map(Mat::flatten).collect::<Vec<_>>());
        let change = Mat::from_columns(
            &basis.iter().map(|b| span.coordinates(b.data()).expect("in span")).collect::<Vec<_>>(),
            basis.len(),
        );
        let to_basis = inverse(&change).expect("basis is independent");
        let a = AlgebraWithInvolution { n, span, unit: unit.clone(), sigma: Mat::zeros(0, 0), to_basis, basis };
        if !a.contains(unit) || a.basis.iter().any(|x| unit.mul(x) != *x || x.mul(unit) != *x) {
            return Err(Error::InvalidInput("algebra does not contain its unit".into()));
        }
        let mut cols = Vec::with_capacity(a.dim());
        for x in &a.basis {
            let s = sigma(x);
            cols.push(a.coords(&s).ok_or_else(|| Error::InvalidInput("σ does not preserve A".into()))?);
        }
        let sigma = Mat::from_columns(&cols, a.dim());
        let a = AlgebraWithInvolution { sigma, ..a };
        a.verify()?;
        Ok(a)
    }

    fn verify(&self) -> Result<()> {
        let d = self.dim();
        if self.sigma.mul(&self.sigma) != Mat::identity(d) {
            return Err(Error::InvalidInput("σ² ≠ id".into()));
        }
        for x in &self.basis {
            for y in &self.basis {
                let xy = x.mul(y);
                if !self.contains(&xy) {
                    return Err(Error::InvalidInput("A is not closed under multiplication".into()));
                }
                if self.apply(&xy) != self.apply(y).mul(&self.apply(x)) {
                    return Err(Error::InvalidInput("σ is not an anti-automorphism".into()));
                }
            }
        }
        Ok(())
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

    pub fn unit(&self) -> Mat {
        self.unit.clone()
    }

    /// Matrix of `σ` on the coordinates of [`AlgebraWithInvolution::basis`].
    pub fn sigma_matrix(&self) -> &Mat {
        &self.sigma
    }

    pub fn contains(&self, x: &Mat) -> bool {
        self.span.contains(x.data())
    }

    /// Coordinates of `x` relative to `basis`.
    pub fn coords(&self, x: &Mat) -> Option<Vec<Rational>> {
        let c = self.span.coordinates(x.data())?;
        Some(self.to_basis.mul_vec(&c))
    }

    pub fn element(&self, coords: &[Rational]) -> Mat {
        self.basis
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .fold(Mat::zeros(self.n, self.n), |acc, (b, c)| acc.add(&b.scale(c)))
    }

    /// `σ(x)` for `x ∈ A`.
    pub fn apply(&self, x: &Mat) -> Mat {
        let c = self.coords(x).expect("element of A");
        self.element(&self.sigma.mul_vec(&c))
    }

    /// Basis of `Z(A)`.
    pub fn center(&self) -> Vec<Mat> {
        let d = self.dim();
        let n = self.n;
        // Σ cᵢ[bᵢ, bⱼ] = 0 for all j
        let mut rows = Vec::new();
        for bj in &self.basis {
            let brs: Vec<Mat> = self.basis.iter().map(|bi| bi.bracket(bj)).collect();
            for e in 0..n * n {
                rows.push((0..d).map(|i| brs[i].data()[e].clone()).collect::<Vec<_>>());
            }
        }
        if rows.is_empty() {
            return Vec::new();
        }
        kernel(&Mat::from_rows(&rows)).vectors().iter().map(|c| self.element(c)).collect()
    }

    /// Central primitive idempotents of `A`, grouped into σ-orbits.
    fn central_orbits(&self) -> Result<(Vec<Mat>, Vec<Vec<usize>>)> {
        let z = self.center();
        let es = primitive_idempotents_with_unit(&z, &self.unit, 0x51A)?;
        let mut seen = vec![false; es.len()];
        let mut orbits = Vec::new();
        for i in 0..es.len() {
            if seen[i] {
                continue;
            }
            let s = self.apply(&es[i]);
            let j = es.iter().position(|e| *e == s).ok_or_else(|| Error::Internal("σ does not permute central idempotents".into()))?;
            seen[i] = true;
            seen[j] = true;
            orbits.push(if i == j { vec![i] } else { vec![i, j] });
        }
        Ok((es, orbits))
    }

    /// Errors unless `A` has no proper σ-stable two-sided ideal.
    pub fn check_simple(&self) -> Result<()> {
        let (es, orbits) = self.central_orbits()?;
        if orbits.len() > 1 {
            let ideal: usize = orbits[0].iter().map(|&i| rank_of_ideal(self, &es[i])).sum();
            return Err(Error::NotSimpleWithInvolution(format!(
                "σ-stable ideal of dimension {ideal} (one of {} σ-orbits of central idempotents)",
                orbits.len()
            )));
        }
        Ok(())
    }

    /// First kind iff `σ` fixes the center pointwise.
    pub fn kind(&self) -> Result<Kind> {
        self.check_simple()?;
        let first = self.center().iter().all(|z| self.apply(z) == *z);
        Ok(if first { Kind::First } else { Kind::Second })
    }

    /// Skew elements `{x : σ(x) = −x}`.
    pub fn skew(&self) -> Vec<Mat> {
        let d = self.dim();
        kernel(&self.sigma.add(&Mat::identity(d))).vectors().iter().map(|c| self.element(c)).collect()
    }

    /// Degree `n` with `dim_ℚ A = n²·dim_ℚ Z(A)`; for second kind this is the
    /// degree of one simple factor over the fixed field of the center.
    pub fn degree(&self) -> Result<usize> {
        let z = self.center().len().max(1);
        let n = ((self.dim() / z) as f64).sqrt().round() as usize;
        if n * n * z != self.dim() {
            return Err(Error::Unclassifiable(format!("dimension {} is not n²·{z}", self.dim())));
        }
        Ok(n)
    }

    /// Orthogonal / symplectic by the skew dimension over the center; unitary for second kind.
    pub fn classify_type(&self) -> Result<InvolutionType> {
        if self.kind()? == Kind::Second {
            return Ok(InvolutionType::Unitary);
        }
        let f = self.center().len();
        let n = self.degree()?;
        let skew = self.skew().len();
        if !skew.is_multiple_of(f) {
            return Err(Error::Unclassifiable(format!("skew dimension {skew} not divisible by {f}")));
        }
        let s = skew / f;
        if s == n * (n - 1) / 2 {
            Ok(InvolutionType::Orthogonal)
        } else if s == n * (n + 1) / 2 {
            Ok(InvolutionType::Symplectic)
        } else {
            Err(Error::Unclassifiable(format!("skew dimension {s} over the center for degree {n}")))
        }
    }

    /// `a` invertible with `a·σ(a) = 1`.
    pub fn iso_membership(&self, a: &Mat) -> bool {
        // a·σ(a) = 1 already forces invertibility in a finite-dimensional algebra
        self.contains(a) && a.mul(&self.apply(a)) == self.unit
    }
}

fn rank_of_ideal(a: &AlgebraWithInvolution, e: &Mat) -> usize {
    let vs: Vec<Vec<Rational>> = a.basis.iter().map(|b| e.mul(b).flatten()).collect();
    Subspace::from_vectors(a.n * a.n, &vs).dim()
}

/// `Skew(A, σ)` and `s(A, σ) = [Skew, Skew]`.
pub fn skew_and_derived(a: &AlgebraWithInvolution) -> Result<(MatrixLieAlgebra, MatrixLieAlgebra)> {
    let skew = MatrixLieAlgebra::from_basis(&a.skew(), a.n)?;
    let s = derived(&skew);
    Ok((skew, s))
}

/// `σ_b(a) = b⁻¹aᵀb` on all of `End(U)`.
pub fn adjoint_involution(b: &Mat) -> Result<AlgebraWithInvolution> {
    if !(b.is_symmetric() || b.is_antisymmetric()) {
        return Err(Error::InvalidInput("form is neither symmetric nor alternating".into()));
    }
    let bi = inverse(b).ok_or_else(|| Error::InvalidInput("form is degenerate".into()))?;
    let n = b.rows();
    let units: Vec<Mat> = (0..n).flat_map(|i| (0..n).map(move |j| Mat::unit(n, n, i, j))).collect();
    AlgebraWithInvolution::from_map(n, &units, |a| bi.mul(&a.transpose()).mul(b))
}

/// The factor `eᵢ·ℚ[G]` in the left regular representation, with the
/// involution induced by `g ↦ g⁻¹` (transpose of permutation matrices).
/// Requires `σ(eᵢ) = eᵢ`.
pub fn group_algebra_factor(group: &FiniteGroup, set: &CentralIdempotentSet, i: usize) -> Result<AlgebraWithInvolution> {
    let e = group.left_regular(&set.idempotents[i]);
    let spanning: Vec<Mat> = (0..group.order()).map(|g| e.mul(&group.left_regular(&group.element(g)))).collect();
    let n = group.order();
    AlgebraWithInvolution::with_unit(n, &spanning, &e, |x| x.transpose())
}

/// `Ṽ = V ⊕ V*` with the induced `A`-action and the form
/// `b((v, η), (v′, η′)) = η(v′) + η′(v)`.
#[derive(Clone, Debug)]
pub struct ModuleWithForm {
    pub v_dim: usize,
    /// Action on `Ṽ` of each basis element of `A`.
    pub action: Vec<Mat>,
    pub form: Mat,
}

impl ModuleWithForm {
    /// Degrees of the basis of `Ṽ`: `+1` on `V`, `−1` on `V*`.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d = vec![1; self.v_dim];
        d.extend(std::iter::repeat_n(-1, self.v_dim));
        d
    }
}

/// The standard hyperbolic form on `V ⊕ V*`.
pub fn hyperbolic_form(v: usize) -> Mat {
    let mut b = Mat::zeros(2 * v, 2 * v);
    for i in 0..v {
        b[(i, v + i)] = Rational::one();
        b[(v + i, i)] = Rational::one();
    }
    b
}

/// `a` acts on `V*` by `(aη)(v) = η(σ(a)v)`, i.e. by `ρ(σ(a))ᵀ`.
pub fn build_v_tilde(a: &AlgebraWithInvolution, v_action: &[Mat]) -> Result<ModuleWithForm> {
    if v_action.len() != a.dim() {
        return Err(Error::InvalidInput("one V-matrix per basis element of A required".into()));
    }
    let v = v_action.first().map_or(0, Mat::rows);
    let rho = |c: &[Rational]| {
        c.iter()
            .zip(v_action)
            .filter(|(x, _)| !x.is_zero())
            .fold(Mat::zeros(v, v), |acc, (x, m)| acc.add(&m.scale(x)))
    };
    let unit = a.unit();
    let unit_c = a.coords(&unit).expect("unit in A");
    if rho(&unit_c) != Mat::identity(v) {
        return Err(Error::InvalidInput("the unit of A does not act as the identity".into()));
    }
    for (i, x) in a.basis.iter().enumerate() {
        for (j, y) in a.basis.iter().enumerate() {
            let c = a.coords(&x.mul(y)).expect("closed");
            if rho(&c) != v_action[i].mul(&v_action[j]) {
                return Err(Error::InvalidInput(format!("V-action is not multiplicative on ({i}, {j})")));
            }
        }
    }
    let action: Vec<Mat> = (0..a.dim())
        .map(|i| {
            let s = a.sigma.column(i);
            Mat::block_diag(&[&v_action[i], &rho(&s).transpose()])
        })
        .collect();
    let form = hyperbolic_form(v);
    for i in 0..a.dim() {
        let si = rho_tilde(&action, &a.sigma.column(i), 2 * v);
        if action[i].transpose().mul(&form) != form.mul(&si) {
            return Err(Error::Internal("form on Ṽ is not equivariant".into()));
        }
    }
    Ok(ModuleWithForm { v_dim: v, action, form })
}

fn rho_tilde(action: &[Mat], c: &[Rational], n: usize) -> Mat {
    c.iter()
        .zip(action)
        .filter(|(x, _)| !x.is_zero())
        .fold(Mat::zeros(n, n), |acc, (x, m)| acc.add(&m.scale(x)))
}

/// `(End_A(Ṽ), σ̃)` with `σ̃` the adjoint involution of the form.
pub fn endo_with_involution(mv: &ModuleWithForm) -> Result<AlgebraWithInvolution> {
    let n = 2 * mv.v_dim;
    let c = commutant(&mv.action, n);
    let bi = inverse(&mv.form).ok_or_else(|| Error::InvalidInput("form is degenerate".into()))?;
    AlgebraWithInvolution::from_map(n, &c, |x| bi.mul(&x.transpose()).mul(&mv.form))
}

/// `Skew(End_A(Ṽ), σ̃)` against `so(Ṽ, b) ∩ End_A(Ṽ)`; returns equality and
/// the common dimension when equal.
pub fn verify_skew_equals_so(mv: &ModuleWithForm) -> Result<(bool, usize)> {
    if !mv.form.is_symmetric() {
        return Err(Error::Precondition("form must be symmetric".into()));
    }
    let n = 2 * mv.v_dim;
    let a = endo_with_involution(mv)?;
    let skew = Subspace::from_vectors(n * n, &a.skew().iter().map(Mat::flatten).collect::<Vec<_>>());
    let so = orthogonal_algebra(&mv.form).subspace().clone();
    let end = Subspace::from_vectors(n * n, &commutant(&mv.action, n).iter().map(Mat::flatten).collect::<Vec<_>>());
    let other = so.intersection(&end);
    Ok((skew == other, skew.dim()))
}

/// True when `g` preserves the form: `gᵀbg = b`.
pub fn is_isometry(g: &Mat, b: &Mat) -> bool {
    g.transpose().mul(b).mul(g) == *b && rank(g) == g.rows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};
    use crate::groupalg::central_idempotents;

    #[test]
    fn adjoint_examples() {
        let t = adjoint_involution(&Mat::identity(2)).unwrap();
        let a = Mat::from_i64(2, 2, &[1, 2, 3, 4]);
        assert_eq!(t.apply(&a), a.transpose());
        let h = adjoint_involution(&Mat::from_i64(2, 2, &[0, 1, 1, 0])).unwrap();
        assert_eq!(h.apply(&a), Mat::from_i64(2, 2, &[4, 2, 3, 1]));
        let s = adjoint_involution(&Mat::from_i64(2, 2, &[0, 1, -1, 0])).unwrap();
        assert_eq!(s.apply(&a), Mat::from_i64(2, 2, &[4, -2, -3, 1]));
        assert!(adjoint_involution(&Mat::from_i64(2, 2, &[1, 1, 1, 1])).is_err());
        assert!(adjoint_involution(&Mat::from_i64(2, 2, &[1, 2, 0, 1])).is_err());
    }

    #[test]
    fn kind_and_type() {
        let t = adjoint_involution(&Mat::identity(2)).unwrap();
        assert_eq!(t.kind().unwrap(), Kind::First);
        assert_eq!(t.classify_type().unwrap(), InvolutionType::Orthogonal);
        assert_eq!(t.skew().len(), 1);
        let s = adjoint_involution(&Mat::from_i64(2, 2, &[0, 1, -1, 0])).unwrap();
        assert_eq!(s.classify_type().unwrap(), InvolutionType::Symplectic);
        assert_eq!(s.skew().len(), 3);
        // ℚ × ℚ with swap
        let diag = [Mat::diag(&[qi(1), qi(0)]), Mat::diag(&[qi(0), qi(1)])];
        let sw = AlgebraWithInvolution::from_map(2, &diag, |x| Mat::diag(&[x[(1, 1)].clone(), x[(0, 0)].clone()])).unwrap();
        assert_eq!(sw.kind().unwrap(), Kind::Second);
        assert_eq!(sw.classify_type().unwrap(), InvolutionType::Unitary);
        // ℚ × ℚ with identity: two σ-stable ideals
        let id = AlgebraWithInvolution::from_map(2, &diag, Mat::clone).unwrap();
        assert!(matches!(id.kind(), Err(Error::NotSimpleWithInvolution(_))));
    }

    #[test]
    fn group_algebra_factors() {
        let z4 = FiniteGroup::cyclic(4);
        let set = central_idempotents(&z4);
        // the ℚ(i) factor: support of size 2 (e = (1 − g²)/2)
        let i = set.idempotents.iter().position(|e| e.iter().filter(|x| !x.is_zero()).count() == 2).unwrap();
        let f = group_algebra_factor(&z4, &set, i).unwrap();
        assert_eq!(f.dim(), 2);
        assert_eq!(f.kind().unwrap(), Kind::Second);
        let z3 = FiniteGroup::cyclic(3);
        let set = central_idempotents(&z3);
        let f = group_algebra_factor(&z3, &set, 1).unwrap();
        assert_eq!(f.classify_type().unwrap(), InvolutionType::Unitary);
        let f = group_algebra_factor(&z3, &set, 0).unwrap();
        assert_eq!(f.classify_type().unwrap(), InvolutionType::Orthogonal);
    }

    #[test]
    fn skew_examples() {
        let t = adjoint_involution(&Mat::identity(3)).unwrap();
        let (skew, s) = skew_and_derived(&t).unwrap();
        assert_eq!((skew.dim(), s.dim()), (3, 3));
        // M₂ × M₂^op with swap, realized block-diagonally
        let n = 2;
        let blocks: Vec<Mat> = (0..2 * n)
            .flat_map(|i| (0..2 * n).map(move |j| (i, j)))
            .filter(|&(i, j)| (i < n) == (j < n))
            .map(|(i, j)| Mat::unit(2 * n, 2 * n, i, j))
            .collect();
        let b = hyperbolic_form(n);
        let sw = AlgebraWithInvolution::from_map(2 * n, &blocks, |x| b.mul(&x.transpose()).mul(&b)).unwrap();
        assert_eq!(sw.kind().unwrap(), Kind::Second);
        let (skew, s) = skew_and_derived(&sw).unwrap();
        assert_eq!((skew.dim(), s.dim()), (4, 3));
        let ab = AlgebraWithInvolution::from_map(2, &[Mat::identity(2)], Mat::clone).unwrap();
        assert_eq!(skew_and_derived(&ab).unwrap().0.dim(), 0);
    }

    #[test]
    fn v_tilde_examples() {
        let k = AlgebraWithInvolution::from_map(1, &[Mat::identity(1)], Mat::clone).unwrap();
        let mv = build_v_tilde(&k, &[Mat::identity(1)]).unwrap();
        assert_eq!(mv.form, Mat::from_i64(2, 2, &[0, 1, 1, 0]));
        assert_eq!(verify_skew_equals_so(&mv).unwrap(), (true, 1));
        let k2 = AlgebraWithInvolution::from_map(2, &[Mat::identity(2)], Mat::clone).unwrap();
        let mv = build_v_tilde(&k2, &[Mat::identity(2)]).unwrap();
        assert_eq!(endo_with_involution(&mv).unwrap().dim(), 16);
        assert_eq!(verify_skew_equals_so(&mv).unwrap(), (true, 6));
        let m2 = adjoint_involution(&Mat::identity(2)).unwrap();
        let mv = build_v_tilde(&m2, m2.basis()).unwrap();
        assert_eq!(mv.form.rows(), 4);
        let e = endo_with_involution(&mv).unwrap();
        assert_eq!(e.dim(), 4);
        assert_eq!(e.classify_type().unwrap(), InvolutionType::Orthogonal);
    }

    #[test]
    fn iso_examples() {
        let b = Mat::from_i64(2, 2, &[0, 1, 1, 0]);
        let h = adjoint_involution(&b).unwrap();
        assert!(h.iso_membership(&Mat::identity(2)));
        assert!(h.iso_membership(&Mat::identity(2).neg()));
        let g = Mat::diag(&[qi(2), q(1, 2)]);
        assert!(h.iso_membership(&g));
        assert!(is_isometry(&g, &b));
        assert!(!h.iso_membership(&Mat::diag(&[qi(2), qi(1)])));
    }
}
