//! Rational quadratic spaces, Mukai lattices, reflections and equivariant
//! Witt cancellation.

use crate::exact::Rational;
use crate::linalg::{inverse, rank, signature, Mat, Signature};
use crate::{Error, Result};

/// A symmetric bilinear form `b` on `ℚⁿ`, with `q(v) = b(v, v)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct QuadraticSpace {
    gram: Mat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tags: Option<Vec<i64>>,
}

impl QuadraticSpace {
    pub fn new(gram: Mat) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::InvalidInput("Gram matrix is not symmetric".into()));
        }
        Ok(QuadraticSpace { gram, tags: None })
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        QuadraticSpace { gram: Mat::diag(d), tags: None }
    }

    pub fn with_tags(mut self, tags: Vec<i64>) -> Self {
        assert_eq!(tags.len(), self.dim());
        self.tags = Some(tags);
        self
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn tags(&self) -> Option<&[i64]> {
        self.tags.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_nondegenerate(&self) -> bool {
        rank(&self.gram) == self.dim()
    }

    pub fn b(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let gv = self.gram.mul_vec(v);
        u.iter().zip(&gv).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn q(&self, v: &[Rational]) -> Rational {
        self.b(v, v)
    }

    pub fn signature(&self) -> Signature {
        signature(&self.gram).expect("symmetric by construction")
    }

    /// `fᵀ·G·f = G`.
    pub fn is_isometry(&self, f: &Mat) -> bool {
        f.transpose().mul(&self.gram).mul(f) == self.gram
    }
}

/// `Kα ⊕ (H², b) ⊕ Kβ` with `b(α, β) = −1`, ordered `(α, middle, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MukaiLattice {
    pub space: QuadraticSpace,
    pub alpha: usize,
    pub beta: usize,
}

impl MukaiLattice {
    pub fn middle_range(&self) -> std::ops::Range<usize> {
        self.alpha + 1..self.beta
    }

    /// The input form, recovered by deleting the α and β rows and columns.
    pub fn middle(&self) -> Mat {
        let r = self.middle_range();
        self.space.gram().submatrix(r.start, r.end, r.start, r.end)
    }
}

pub fn mukai(b: &Mat) -> Result<MukaiLattice> {
    if !b.is_symmetric() {
        return Err(Error::InvalidInput("form is not symmetric".into()));
    }
    let m = b.rows();
    if rank(b) < m {
        return Err(Error::InvalidInput("form is degenerate".into()));
    }
    let mut g = Mat::zeros(m + 2, m + 2);
    g[(0, m + 1)] = Rational::from_int(-1);
    g[(m + 1, 0)] = Rational::from_int(-1);
    g.set_block(1, 1, b);
    let mut tags = vec![-2];
    tags.extend(std::iter::repeat_n(0, m));
    tags.push(2);
    Ok(MukaiLattice { space: QuadraticSpace::new(g)?.with_tags(tags), alpha: 0, beta: m + 1 })
}

/// `τ_u(z) = z − 2b(u, z)/q(u)·u`.
pub fn reflection(u: &[Rational], z: &[Rational], q: &QuadraticSpace) -> Result<Vec<Rational>> {
    let qu = q.q(u);
    if qu.is_zero() {
        return Err(Error::InvalidInput("cannot reflect in an isotropic vector".into()));
    }
    let c = Rational::from_int(2) * q.b(u, z) / qu;
    Ok(z.iter().zip(u).map(|(a, b)| a - &(&c * b)).collect())
}

/// Matrix of `τ_u`.
pub fn reflection_matrix(u: &[Rational], q: &QuadraticSpace) -> Result<Mat> {
    let n = q.dim();
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|i| reflection(u, &crate::graded::unit_vec(n, i), q))
        .collect::<Result<_>>()?;
    Ok(Mat::from_columns(&cols, n))
}

/// `λ` with `fᵀ·G·f = (1/λ)·G`, if `f` is a similitude.
pub fn is_similitude(f: &Mat, q: &QuadraticSpace) -> Option<Rational> {
    let g = q.gram();
    let t = f.transpose().mul(g).mul(f);
    let (i, j) = (0..g.rows())
        .flat_map(|i| (0..g.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !g[(i, j)].is_zero())?;
    let mu = &t[(i, j)] / &g[(i, j)];
    if mu.is_zero() || t != g.scale(&mu) {
        return None;
    }
    Some(mu.recip())
}

/// An equivariant isometry together with the reflections composed to build it.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct WittResult {
    pub map: Mat,
    /// Applied in order: `map = τ_{r_k} ∘ … ∘ τ_{r_1}`.
    pub reflections: Vec<Vec<Rational>>,
    /// Number of basis pairs matched (at least `m`).
    pub matched: usize,
}

impl WittResult {
    /// Recomposes the recorded reflections.
    pub fn replay(&self, q: &QuadraticSpace) -> Result<Mat> {
        let mut m = Mat::identity(q.dim());
        for r in &self.reflections {
            m = reflection_matrix(r, q)?.mul(&m);
        }
        Ok(m)
    }
}

/// Builds a `G`-equivariant isometry `φ` with `φ(eᵢ) = fᵢ` for `i < m`, so
/// that `φ` carries `span(e_m, …)` onto `span(f_m, …)`.
///
/// Bases are columns of `e` and `f`. Each step reflects in `φ(eᵢ) − fᵢ`, or
/// when that is isotropic in `φ(eᵢ) + fᵢ` and then `fᵢ`; all these vectors
/// are `G`-fixed, so the reflections commute with the action. After `m`,
/// further pairs are matched greedily while `q(eᵢ) = q(fᵢ)` and the
/// reflection vectors stay fixed.
pub fn witt_cancel_equivariant(q: &QuadraticSpace, e: &Mat, f: &Mat, m: usize, action: &[Mat]) -> Result<WittResult> {
    let n = q.dim();
    if !q.is_nondegenerate() {
        return Err(Error::Precondition("form is degenerate".into()));
    }
    if e.shape() != (n, n) || f.shape() != (n, n) || m > n {
        return Err(Error::InvalidInput("bases must be n × n and m ≤ n".into()));
    }
    for (name, basis) in [("e", e), ("f", f)] {
        if inverse(basis).is_none() {
            return Err(Error::Precondition(format!("{name} is not a basis")));
        }
        let gram = basis.transpose().mul(q.gram()).mul(basis);
        if (0..n).any(|i| (0..n).any(|j| i != j && !gram[(i, j)].is_zero())) {
            return Err(Error::Precondition(format!("{name} is not q-orthogonal")));
        }
    }
    for (k, g) in action.iter().enumerate() {
        if g.shape() != (n, n) || !q.is_isometry(g) {
            return Err(Error::Precondition(format!("action matrix {k} is not an isometry")));
        }
    }
    let ecols: Vec<Vec<Rational>> = (0..n).map(|i| e.column(i)).collect();
    let fcols: Vec<Vec<Rational>> = (0..n).map(|i| f.column(i)).collect();
    let fixed = |v: &[Rational]| action.iter().all(|g| g.mul_vec(v) == v);
    for i in 0..m {
        if q.q(&ecols[i]) != q.q(&fcols[i]) {
            return Err(Error::Precondition(format!("q(e{i}) ≠ q(f{i})")));
        }
        if !fixed(&ecols[i]) || !fixed(&fcols[i]) {
            return Err(Error::Precondition(format!("e{i} or f{i} is not G-fixed")));
        }
    }
    let mut phi = Mat::identity(n);
    let mut reflections = Vec::new();
    let mut matched = 0;
    for i in 0..n {
        let strict = i < m;
        if !strict && (q.q(&ecols[i]) != q.q(&fcols[i]) || matched < i) {
            break;
        }
        let x = phi.mul_vec(&ecols[i]);
        let y = &fcols[i];
        let steps: Vec<Vec<Rational>> = if x == *y {
            Vec::new()
        } else {
            let diff: Vec<Rational> = x.iter().zip(y).map(|(a, b)| a - b).collect();
            if !q.q(&diff).is_zero() {
                vec![diff]
            } else {
                let sum: Vec<Rational> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                vec![sum, y.clone()]
            }
        };
        if !strict && !steps.iter().all(|v| fixed(v)) {
            break;
        }
        for u in steps {
            phi = reflection_matrix(&u, q)?.mul(&phi);
            reflections.push(u);
        }
        debug_assert_eq!(phi.mul_vec(&ecols[i]), *y);
        matched += 1;
    }
    let res = WittResult { map: phi, reflections, matched };
    if !q.is_isometry(&res.map) || action.iter().any(|g| g.mul(&res.map) != res.map.mul(g)) {
        return Err(Error::Internal("constructed map is not an equivariant isometry".into()));
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q as r, qi};
    use crate::linalg::Subspace;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| qi(a)).collect()
    }

    #[test]
    fn mukai_examples() {
        let l = mukai(&Mat::identity(1)).unwrap();
        assert_eq!(l.space.signature(), Signature::new(2, 1, 0));
        assert_eq!(l.middle(), Mat::identity(1));
        let l0 = mukai(&Mat::zeros(0, 0)).unwrap();
        assert_eq!(l0.space.gram(), &Mat::from_i64(2, 2, &[0, -1, -1, 0]));
        let mut d = vec![qi(1); 3];
        d.extend(vec![qi(-1); 19]);
        let l = mukai(&Mat::diag(&d)).unwrap();
        assert_eq!(l.space.signature(), Signature::new(4, 20, 0));
        assert!(mukai(&Mat::zeros(1, 1)).is_err());
    }

    #[test]
    fn reflection_examples() {
        let q = QuadraticSpace::diagonal(&[qi(1), qi(1)]);
        let u = v(&[1, -1]);
        assert_eq!(reflection(&u, &v(&[1, 1]), &q).unwrap(), v(&[1, 1]));
        assert_eq!(reflection(&u, &u, &q).unwrap(), v(&[-1, 1]));
        assert_eq!(reflection(&u, &v(&[1, 0]), &q).unwrap(), v(&[0, 1]));
        let h = QuadraticSpace::new(Mat::from_i64(2, 2, &[0, 1, 1, 0])).unwrap();
        assert!(reflection(&v(&[1, 0]), &v(&[1, 0]), &h).is_err());
    }

    #[test]
    fn similitude_examples() {
        let q = QuadraticSpace::diagonal(&[qi(1), qi(1)]);
        assert_eq!(is_similitude(&Mat::identity(2), &q), Some(qi(1)));
        assert_eq!(is_similitude(&Mat::identity(2).scale(&qi(2)), &q), Some(r(1, 4)));
        let t = reflection_matrix(&v(&[1, 2]), &q).unwrap();
        assert_eq!(is_similitude(&t, &q), Some(qi(1)));
        assert_eq!(is_similitude(&Mat::diag(&[qi(1), qi(2)]), &q), None);
    }

    #[test]
    fn witt_examples() {
        let q = QuadraticSpace::diagonal(&[qi(1), qi(1), qi(2)]);
        let id = Mat::identity(3);
        let w = witt_cancel_equivariant(&q, &id, &id, 3, &[]).unwrap();
        assert_eq!(w.map, id);
        let f = Mat::diag(&[qi(-1), qi(1), qi(1)]);
        let w = witt_cancel_equivariant(&q, &id, &f, 0, &[]).unwrap();
        assert!(w.reflections.iter().any(|u| Subspace::from_vectors(3, std::slice::from_ref(u)) == Subspace::from_vectors(3, &[v(&[1, 0, 0])])));
        assert!(q.is_isometry(&w.map));
        assert_eq!(w.replay(&q).unwrap(), w.map);
        // ℤ/2 negating the last coordinate; e₁ = f₁ fixed
        let g = Mat::diag(&[qi(1), qi(1), qi(-1)]);
        let f = Mat::from_i64(3, 3, &[1, 0, 0, 0, 0, 1, 0, 1, 0]);
        let q2 = QuadraticSpace::diagonal(&[qi(1), qi(2), qi(2)]);
        let g2 = Mat::diag(&[qi(1), qi(-1), qi(-1)]);
        let w = witt_cancel_equivariant(&q2, &id, &f, 1, &[Mat::identity(3), g2.clone()]).unwrap();
        assert!(g2.mul(&w.map) == w.map.mul(&g2));
        assert!(witt_cancel_equivariant(&q, &id, &id, 1, std::slice::from_ref(&g)).is_ok());
    }

    #[test]
    fn isotropic_difference_fallback() {
        // q(e − f) = 0 with q(e) = q(f) = 1: e = (1, 0, 0), f = (1, 1, 1) under diag(1, 1, −1)
        let q = QuadraticSpace::diagonal(&[qi(1), qi(1), qi(-1)]);
        let e = Mat::identity(3);
        // orthogonal basis starting with (1,1,1): (1,1,1), (1,-1,0), (1,1,2)
        let f = Mat::from_i64(3, 3, &[1, 1, 1, 1, -1, 1, 1, 0, 2]);
        let gram = f.transpose().mul(q.gram()).mul(&f);
        assert!(gram[(0, 1)].is_zero() && gram[(0, 2)].is_zero() && gram[(1, 2)].is_zero());
        let w = witt_cancel_equivariant(&q, &e, &f, 1, &[]).unwrap();
        assert_eq!(w.reflections.len(), 2);
        assert_eq!(w.map.column(0), f.column(0));
    }
}
