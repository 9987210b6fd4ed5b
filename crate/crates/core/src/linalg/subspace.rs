use crate::exact::Rational;

use super::elim::{kernel, rref_with_pivots};
use super::Mat;

/// A subspace of ℚⁿ held as its reduced row echelon basis.
///
/// The representation is canonical, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_matrix_rows(m: &Mat) -> Self {
        let (r, pivots) = rref_with_pivots(m);
        let basis = r.submatrix(0, pivots.len(), 0, m.cols());
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn from_vectors(ambient: usize, vs: &[Vec<Rational>]) -> Self {
        if vs.is_empty() {
            return Subspace::zero(ambient);
        }
        Subspace::from_matrix_rows(&Mat::from_rows(vs))
    }

    /// Wraps rows already in reduced row echelon form.
    pub(crate) fn from_rref_unchecked(ambient: usize, basis: Mat) -> Self {
        let pivots = (0..basis.rows())
            .map(|i| basis.row(i).iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Basis rows in reduced row echelon form.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    /// Coordinates in the RREF basis, or `None` if `v` is not in the span.
    ///
    /// Because the basis is reduced, the coordinates are the entries of `v`
    /// at the pivot columns.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient);
        let c: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    r[j] -= ci * b;
                }
            }
        }
        r.iter().all(Rational::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec![Rational::zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    v[j] += c * b;
                }
            }
        }
        v
    }

    pub fn is_subspace_of(&self, o: &Subspace) -> bool {
        (0..self.dim()).all(|i| o.contains(self.basis.row(i)))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient, o.ambient);
        Subspace::from_matrix_rows(&self.basis.vstack(&o.basis))
    }

    pub fn intersection(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient, o.ambient);
        if self.is_zero() || o.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // a·U = b·W  ⇔  (a, −b) ∈ ker [Uᵀ | Wᵀ]
        let m = self.basis.transpose().hstack(&o.basis.transpose());
        let k = kernel(&m);
        let d = self.dim();
        let vs: Vec<Vec<Rational>> = k
            .vectors()
            .iter()
            .map(|v| self.combine(&v[..d]))
            .collect();
        Subspace::from_vectors(self.ambient, &vs)
    }

    /// Image under a linear map `v ↦ m·v`.
    pub fn map(&self, m: &Mat) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let vs: Vec<Vec<Rational>> = self.vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_vectors(m.rows(), &vs)
    }

    /// True when `m` maps the subspace into itself.
    pub fn is_invariant_under(&self, m: &Mat) -> bool {
        self.vectors().iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Matrix of `m` restricted to this (invariant) subspace, in the RREF
    /// basis: column `j` holds the coordinates of `m·bⱼ`.
    pub fn restrict(&self, m: &Mat) -> Option<Mat> {
        let cols: Option<Vec<Vec<Rational>>> = self
            .vectors()
            .iter()
            .map(|v| self.coordinates(&m.mul_vec(v)))
            .collect();
        Some(Mat::from_columns(&cols?, self.dim()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;
    use proptest::prelude::*;

    fn arb_subspace(n: usize) -> impl Strategy<Value = Subspace> {
        prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=n).prop_map(move |rows| {
            let vs: Vec<Vec<Rational>> =
                rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
            Subspace::from_vectors(n, &vs)
        })
    }

    #[test]
    fn coordinates_round_trip() {
        let s = Subspace::from_vectors(3, &[vec![qi(1), qi(2), qi(3)], vec![qi(0), qi(1), qi(1)]]);
        let v = vec![qi(2), qi(5), qi(7)];
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.combine(&c), v);
        assert!(!s.contains(&[qi(0), qi(0), qi(1)]));
    }

    proptest! {
        #[test]
        fn dimension_formula(u in arb_subspace(5), w in arb_subspace(5)) {
            let s = u.sum(&w);
            let i = u.intersection(&w);
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&w));
            prop_assert!(u.is_subspace_of(&s) && w.is_subspace_of(&s));
        }
    }
}
