//! Clifford algebras of rational quadratic forms, the `*` anti-involution,
//! GSpin membership and the vector representation.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::exact::Rational;
use crate::graded::wedge_sign;
use crate::linalg::{diagonalize_congruence, inverse, solve, Mat};
use crate::quadform::{is_similitude, QuadraticSpace};
use crate::{Error, Result};

static NEXT_ID: AtomicU64 = AtomicU64::new(0);

/// `C(V, q)` on the monomial basis `e_A` (`A` a bitmask) of an orthogonal
/// basis of `V`, obtained by exact congruence diagonalization.
#[derive(Clone, Debug)]
pub struct CliffordAlgebra {
    id: u64,
    space: QuadraticSpace,
    /// Columns are the orthogonal basis in original coordinates.
    change: Mat,
    change_inv: Mat,
    diag: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordElement {
    algebra: u64,
    coeffs: Vec<Rational>,
}

impl CliffordElement {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: u32) -> &Rational {
        &self.coeffs[mask as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m as u32, c))
    }

    pub fn is_even(&self) -> bool {
        self.support().all(|(m, _)| m.count_ones() % 2 == 0)
    }

    /// The scalar part, if the element is a scalar.
    pub fn as_scalar(&self) -> Option<Rational> {
        self.support().all(|(m, _)| m == 0).then(|| self.coeffs[0].clone())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        same(self, o)?;
        Ok(CliffordElement { algebra: self.algebra, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        CliffordElement { algebra: self.algebra, coeffs: self.coeffs.iter().map(|a| a * s).collect() }
    }
}

fn same(a: &CliffordElement, b: &CliffordElement) -> Result<()> {
    if a.algebra != b.algebra {
        return Err(Error::InvalidInput("elements belong to different Clifford algebras".into()));
    }
    Ok(())
}

impl CliffordAlgebra {
    pub fn new(space: QuadraticSpace) -> Result<Self> {
        let n = space.dim();
        if n > 12 {
            return Err(Error::InvalidInput("dimension too large for a dense Clifford algebra".into()));
        }
        let (change, diag) = diagonalize_congruence(space.gram())?;
        let change_inv = inverse(&change).ok_or_else(|| Error::Internal("singular change of basis".into()))?;
        Ok(CliffordAlgebra { id: NEXT_ID.fetch_add(1, Ordering::Relaxed), space, change, change_inv, diag })
    }

    pub fn diagonal(q: &[Rational]) -> Self {
        CliffordAlgebra::new(QuadraticSpace::diagonal(q)).expect("diagonal forms are symmetric")
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.n()
    }

    /// `qᵢ` for the orthogonal basis.
    pub fn diag(&self) -> &[Rational] {
        &self.diag
    }

    pub fn change_of_basis(&self) -> &Mat {
        &self.change
    }

    /// Coordinates in the orthogonal basis.
    pub fn to_orthogonal(&self, v: &[Rational]) -> Vec<Rational> {
        self.change_inv.mul_vec(v)
    }

    pub fn from_orthogonal(&self, v: &[Rational]) -> Vec<Rational> {
        self.change.mul_vec(v)
    }

    pub fn element(&self, coeffs: Vec<Rational>) -> Result<CliffordElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::InvalidInput(format!("expected {} coefficients", self.dim())));
        }
        Ok(CliffordElement { algebra: self.id, coeffs })
    }

    pub fn zero(&self) -> CliffordElement {
        CliffordElement { algebra: self.id, coeffs: vec![Rational::zero(); self.dim()] }
    }

    pub fn scalar(&self, r: Rational) -> CliffordElement {
        let mut x = self.zero();
        x.coeffs[0] = r;
        x
    }

    pub fn one(&self) -> CliffordElement {
        self.scalar(Rational::one())
    }

    /// `e_A` for the orthogonal basis.
    pub fn monomial(&self, mask: u32) -> CliffordElement {
        let mut x = self.zero();
        x.coeffs[mask as usize] = Rational::one();
        x
    }

    /// `eᵢ` for the orthogonal basis.
    pub fn gen(&self, i: usize) -> CliffordElement {
        self.monomial(1 << i)
    }

    /// A vector of `V` given in original coordinates.
    pub fn vector(&self, v: &[Rational]) -> CliffordElement {
        let w = self.to_orthogonal(v);
        let mut x = self.zero();
        for (i, c) in w.into_iter().enumerate() {
            x.coeffs[1 << i] = c;
        }
        x
    }

    /// Original coordinates, if `x` lies in `V`.
    pub fn as_vector(&self, x: &CliffordElement) -> Option<Vec<Rational>> {
        if x.support().any(|(m, _)| m.count_ones() != 1) {
            return None;
        }
        let w: Vec<Rational> = (0..self.n()).map(|i| x.coeffs[1 << i].clone()).collect();
        Some(self.from_orthogonal(&w))
    }

    fn monomial_product(&self, a: u32, b: u32) -> (u32, Rational) {
        let mut c = Rational::from_int(wedge_sign(a, b));
        let mut both = a & b;
        while both != 0 {
            c *= &self.diag[both.trailing_zeros() as usize];
            both &= both - 1;
        }
        (a ^ b, c)
    }

    pub fn cmul(&self, a: &CliffordElement, b: &CliffordElement) -> Result<CliffordElement> {
        same(a, b)?;
        if a.algebra != self.id {
            return Err(Error::InvalidInput("element belongs to a different Clifford algebra".into()));
        }
        let mut out = self.zero();
        for (ma, ca) in a.support() {
            for (mb, cb) in b.support() {
                let (m, s) = self.monomial_product(ma, mb);
                if !s.is_zero() {
                    out.coeffs[m as usize] += &(&(ca * cb) * &s);
                }
            }
        }
        Ok(out)
    }

    /// `(v₁⋯v_r)* = (−1)^r v_r⋯v₁`.
    pub fn star(&self, x: &CliffordElement) -> CliffordElement {
        let mut out = self.zero();
        for (m, c) in x.support() {
            let r = m.count_ones() as i64;
            let flip = (r + r * (r - 1) / 2) % 2 == 1;
            out.coeffs[m as usize] = if flip { -c.clone() } else { c.clone() };
        }
        out
    }

    /// Matrix of `y ↦ x·y` on the monomial basis.
    pub fn left_mult_matrix(&self, x: &CliffordElement) -> Mat {
        let d = self.dim();
        let mut out = Mat::zeros(d, d);
        for (ma, ca) in x.support() {
            for mb in 0..d as u32 {
                let (m, s) = self.monomial_product(ma, mb);
                if !s.is_zero() {
                    out[(m as usize, mb as usize)] += &(ca * &s);
                }
            }
        }
        out
    }

    /// Two-sided inverse, found by solving `x·y = 1`.
    pub fn inverse(&self, x: &CliffordElement) -> Option<CliffordElement> {
        let y = solve(&self.left_mult_matrix(x), self.one().coeffs())?;
        let y = CliffordElement { algebra: self.id, coeffs: y };
        (self.cmul(&y, x).ok()? == self.one()).then_some(y)
    }

    /// `x` even, invertible, and `x·eᵢ·x* ∈ V` for every basis vector.
    pub fn is_gspin(&self, x: &CliffordElement) -> bool {
        if x.algebra != self.id || !x.is_even() || self.inverse(x).is_none() {
            return false;
        }
        let xs = self.star(x);
        (0..self.n()).all(|i| {
            let y = self.cmul(&self.cmul(x, &self.gen(i)).expect("same algebra"), &xs).expect("same algebra");
            self.as_vector(&y).is_some()
        })
    }

    /// `x·star(x)`.
    pub fn norm(&self, x: &CliffordElement) -> Result<CliffordElement> {
        self.cmul(x, &self.star(x))
    }

    /// Matrix of `v ↦ x·v·x*` in original coordinates.
    pub fn vector_rep(&self, x: &CliffordElement) -> Result<Mat> {
        if !self.is_gspin(x) {
            return Err(Error::Precondition("element is not in GSpin".into()));
        }
        let xs = self.star(x);
        let n = self.n();
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let v = self.vector(&crate::graded::unit_vec(n, j));
                let y = self.cmul(&self.cmul(x, &v)?, &xs)?;
                self.as_vector(&y).ok_or_else(|| Error::Internal("x·v·x* left V".into()))
            })
            .collect::<Result<_>>()?;
        Ok(Mat::from_columns(&cols, n))
    }

    /// The algebra automorphism induced by an isometry `g` (original
    /// coordinates), as a matrix on the monomial basis.
    pub fn induced_action(&self, g: &Mat) -> Result<Mat> {
        let n = self.n();
        if g.shape() != (n, n) || !self.space.is_isometry(g) {
            return Err(Error::Precondition("matrix is not an isometry of q".into()));
        }
        let go = self.change_inv.mul(g).mul(&self.change);
        let images: Vec<CliffordElement> = (0..n)
            .map(|i| {
                let mut x = self.zero();
                for k in 0..n {
                    x.coeffs[1 << k] = go[(k, i)].clone();
                }
                x
            })
            .collect();
        let d = self.dim();
        let mut cols = Vec::with_capacity(d);
        for m in 0..d as u32 {
            let mut y = self.one();
            for i in 0..n {
                if m & (1 << i) != 0 {
                    y = self.cmul(&y, &images[i])?;
                }
            }
            cols.push(y.coeffs);
        }
        Ok(Mat::from_columns(&cols, d))
    }

    /// Similitude factor `λ` of `vector_rep(x)`, with `fᵀGf = (1/λ)G`.
    pub fn similitude_factor(&self, x: &CliffordElement) -> Result<Option<Rational>> {
        Ok(is_similitude(&self.vector_rep(x)?, &self.space))
    }
}

/// Outcome of [`equivariance_check`]. Witnesses are `(action index, sample
/// index)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct EquivarianceReport {
    pub star_checks: usize,
    pub pi_checks: usize,
    pub star_witness: Option<(usize, usize)>,
    pub pi_witness: Option<(usize, usize)>,
}

impl EquivarianceReport {
    pub fn passed(&self) -> bool {
        self.star_witness.is_none() && self.pi_witness.is_none()
    }
}

/// Checks `g(x*) = g(x)*` on every sample and `π(g·x) = g∘π(x)∘g⁻¹` on the
/// GSpin samples, for every isometry `g` in `action`.
pub fn equivariance_check(alg: &CliffordAlgebra, action: &[Mat], samples: &[CliffordElement]) -> Result<EquivarianceReport> {
    let mut rep = EquivarianceReport::default();
    for (gi, g) in action.iter().enumerate() {
        let ind = alg.induced_action(g)?;
        let ginv = inverse(g).ok_or_else(|| Error::Precondition("action matrix is singular".into()))?;
        for (si, x) in samples.iter().enumerate() {
            let gx = alg.element(ind.mul_vec(x.coeffs()))?;
            let gxs = alg.element(ind.mul_vec(alg.star(x).coeffs()))?;
            rep.star_checks += 1;
            if alg.star(&gx) != gxs && rep.star_witness.is_none() {
                rep.star_witness = Some((gi, si));
            }
            if alg.is_gspin(x) {
                rep.pi_checks += 1;
                let lhs = alg.vector_rep(&gx)?;
                let rhs = g.mul(&alg.vector_rep(x)?).mul(&ginv);
                if lhs != rhs && rep.pi_witness.is_none() {
                    rep.pi_witness = Some((gi, si));
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;
    use proptest::prelude::*;

    fn alg(q: &[i64]) -> CliffordAlgebra {
        CliffordAlgebra::diagonal(&q.iter().map(|&x| qi(x)).collect::<Vec<_>>())
    }

    #[test]
    fn products() {
        let c = alg(&[2, 3]);
        let (e1, e2) = (c.gen(0), c.gen(1));
        assert_eq!(c.cmul(&e1, &e1).unwrap(), c.scalar(qi(2)));
        assert_eq!(c.cmul(&e1, &e2).unwrap(), c.cmul(&e2, &e1).unwrap().scale(&qi(-1)));
        let e12 = c.cmul(&e1, &e2).unwrap();
        assert_eq!(c.cmul(&e12, &e12).unwrap(), c.scalar(qi(-6)));
        assert!(c.cmul(&e1, &alg(&[2, 3]).gen(0)).is_err());
    }

    #[test]
    fn star_examples() {
        let c = alg(&[1, 1]);
        assert_eq!(c.star(&c.one()), c.one());
        assert_eq!(c.star(&c.gen(0)), c.gen(0).scale(&qi(-1)));
        assert_eq!(c.star(&c.monomial(0b11)), c.monomial(0b11).scale(&qi(-1)));
    }

    #[test]
    fn gspin_examples() {
        let c = alg(&[1, 1, 1]);
        assert!(c.is_gspin(&c.one()));
        assert!(!c.is_gspin(&c.gen(0)));
        let x = c.monomial(0b011);
        assert!(c.is_gspin(&x));
        assert_eq!(c.vector_rep(&c.one()).unwrap(), Mat::identity(3));
        assert_eq!(c.vector_rep(&x).unwrap(), Mat::diag(&[qi(-1), qi(-1), qi(1)]));
        let y = c.one().add(&x).unwrap();
        let r = c.vector_rep(&y).unwrap();
        assert_eq!(r, Mat::from_i64(3, 3, &[0, 2, 0, -2, 0, 0, 0, 0, 2]));
        assert_eq!(c.similitude_factor(&y).unwrap(), Some(crate::exact::q(1, 4)));
        assert_eq!(c.norm(&y).unwrap(), c.scalar(qi(2)));
        assert!(c.vector_rep(&c.gen(1)).is_err());
    }

    #[test]
    fn non_diagonal_form_round_trips() {
        let q = QuadraticSpace::new(Mat::from_i64(2, 2, &[0, 1, 1, 0])).unwrap();
        let c = CliffordAlgebra::new(q).unwrap();
        let v = vec![qi(3), qi(-2)];
        assert_eq!(c.as_vector(&c.vector(&v)).unwrap(), v);
        let w = c.vector(&v);
        assert_eq!(c.cmul(&w, &w).unwrap(), c.scalar(qi(-12)));
    }

    #[test]
    fn equivariance_examples() {
        let c = alg(&[1, 1, 1]);
        let x = c.monomial(0b011);
        let flip = Mat::diag(&[qi(-1), qi(1), qi(1)]);
        let swap = Mat::from_i64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
        let samples: Vec<_> = (0..8u32).filter(|m| m.count_ones() <= 2).map(|m| c.monomial(m)).chain([x]).collect();
        let r = equivariance_check(&c, &[Mat::identity(3), flip, swap], &samples).unwrap();
        assert!(r.passed());
        assert!(r.pi_checks > 0);
        assert!(equivariance_check(&c, &[Mat::identity(3).scale(&qi(2))], &samples).is_err());
    }

    fn small() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-2i64..=2, 8)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn star_is_anti_involution(a in small(), b in small(), neg in any::<bool>()) {
            let c = alg(&[1, 1, if neg { -1 } else { 1 }]);
            let x = c.element(a.iter().map(|&v| qi(v)).collect()).unwrap();
            let y = c.element(b.iter().map(|&v| qi(v)).collect()).unwrap();
            prop_assert_eq!(c.star(&c.cmul(&x, &y).unwrap()), c.cmul(&c.star(&y), &c.star(&x)).unwrap());
            prop_assert_eq!(c.star(&c.star(&x)), x);
        }

        #[test]
        fn vector_products_are_similitudes(u in proptest::collection::vec(-2i64..=2, 3), w in proptest::collection::vec(-2i64..=2, 3)) {
            let c = alg(&[1, 1, -1]);
            let (u, w): (Vec<Rational>, Vec<Rational>) = (u.into_iter().map(qi).collect(), w.into_iter().map(qi).collect());
            prop_assume!(!c.space().q(&u).is_zero() && !c.space().q(&w).is_zero());
            let x = c.cmul(&c.vector(&u), &c.vector(&w)).unwrap();
            prop_assert!(c.is_gspin(&x));
            let n = c.norm(&x).unwrap().as_scalar().unwrap();
            let lambda = c.similitude_factor(&x).unwrap().unwrap();
            prop_assert_eq!(lambda, (&n * &n).recip());
        }
    }
}
