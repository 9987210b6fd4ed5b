//! Graded vector spaces and finite-dimensional graded commutative algebras.
//!
//! Algebras are stored in cohomological degrees `0..=2n`; the Lefschetz
//! module `M = R[n]` (so `M_k = R_{n+k}`) is produced on demand by
//! [`GradedAlgebra::lefschetz_space`].

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{Rational, Scalar};
use crate::groupalg::FiniteGroup;
use crate::linalg::{det, determinant, image, rank, to_sparse, Echelon, Mat, Matrix, Subspace};
use crate::{Error, Result};

/// A graded vector space: one degree per basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    degrees: Vec<i64>,
    labels: Vec<String>,
}

impl GradedSpace {
    pub fn new(degrees: Vec<i64>) -> Self {
        let labels = (0..degrees.len()).map(|i| format!("b{i}")).collect();
        GradedSpace { degrees, labels }
    }

    pub fn with_labels(degrees: Vec<i64>, labels: Vec<String>) -> Self {
        assert_eq!(degrees.len(), labels.len());
        GradedSpace { degrees, labels }
    }

    pub fn total_dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Dimension of each nonzero graded piece.
    pub fn dims(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for &d in &self.degrees {
            *m.entry(d).or_insert(0) += 1;
        }
        m
    }

    pub fn dim_of(&self, k: i64) -> usize {
        self.degrees.iter().filter(|&&d| d == k).count()
    }

    pub fn indices_of(&self, k: i64) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i] == k).collect()
    }

    /// `M[n]`: the basis vector of degree `d` moves to degree `d − n`.
    pub fn shift(&self, n: i64) -> GradedSpace {
        GradedSpace {
            degrees: self.degrees.iter().map(|d| d - n).collect(),
            labels: self.labels.clone(),
        }
    }

    /// Degree of a homogeneous operator; `Some(None)` for the zero
    /// operator, `None` for a mixed one.
    pub fn operator_degree(&self, e: &Mat) -> Option<Option<i64>> {
        let mut deg = None;
        for i in 0..e.rows() {
            for j in 0..e.cols() {
                if e[(i, j)].is_zero() {
                    continue;
                }
                let d = self.degrees[i] - self.degrees[j];
                match deg {
                    None => deg = Some(d),
                    Some(d0) if d0 != d => return None,
                    _ => {}
                }
            }
        }
        Some(deg)
    }

    pub fn is_of_degree(&self, e: &Mat, d: i64) -> bool {
        matches!(self.operator_degree(e), Some(None)) || self.operator_degree(e) == Some(Some(d))
    }

    /// Projection of an operator onto its component of degree `d`.
    pub fn degree_part(&self, e: &Mat, d: i64) -> Mat {
        Mat::from_fn(e.rows(), e.cols(), |i, j| {
            if self.degrees[i] - self.degrees[j] == d {
                e[(i, j)].clone()
            } else {
                Rational::zero()
            }
        })
    }
}

/// Diagonal operator acting as `k` on the degree-`k` piece.
pub fn grading_operator(m: &GradedSpace) -> Mat {
    Mat::diag(&m.degrees.iter().map(|&d| Rational::from_int(d)).collect::<Vec<_>>())
}

/// Hard Lefschetz test for a degree-2 operator on `M`.
///
/// True iff for every `k ≥ 1` with `M₋ₖ ≠ 0` the map `eᵏ: M₋ₖ → Mₖ` is
/// bijective.
pub fn has_hard_lefschetz(e: &Mat, m: &GradedSpace) -> Result<bool> {
    if e.shape() != (m.total_dim(), m.total_dim()) {
        return Err(Error::InvalidInput("operator size does not match the graded space".into()));
    }
    if !m.is_of_degree(e, 2) {
        return Err(Error::InvalidInput("operator is not of pure degree 2".into()));
    }
    let dims = m.dims();
    let mut power = Mat::identity(e.rows());
    let kmax = dims.keys().map(|k| k.abs()).max().unwrap_or(0);
    for k in 1..=kmax {
        power = power.mul(e);
        let src = m.indices_of(-k);
        let dst = m.indices_of(k);
        if src.len() != dst.len() {
            return Ok(false);
        }
        if src.is_empty() {
            continue;
        }
        if det(&power.select(&dst, &src)).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Structure-constant data as exchanged on the wire.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GradedAlgebraData {
    pub degrees: Vec<i64>,
    pub unit: usize,
    /// `(i, j, k, c)`: `bᵢ·bⱼ` has coefficient `c` on `bₖ`. Absent means zero.
    pub triples: Vec<(usize, usize, usize, Rational)>,
}

/// A finite-dimensional graded commutative algebra over ℚ.
///
/// `mult[i]` is the matrix of left multiplication by the basis vector `bᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    space: GradedSpace,
    unit: usize,
    mult: Vec<Mat>,
}

impl GradedAlgebra {
    /// Builds and verifies an algebra from left-multiplication matrices.
    pub fn from_left_mult(space: GradedSpace, unit: usize, mult: Vec<Mat>) -> Result<Self> {
        let a = GradedAlgebra { space, unit, mult };
        a.verify()?;
        Ok(a)
    }

    pub fn from_data(d: &GradedAlgebraData) -> Result<Self> {
        let n = d.degrees.len();
        if d.unit >= n {
            return Err(Error::InvalidInput("unit index out of range".into()));
        }
        let mut mult = vec![Mat::zeros(n, n); n];
        for (i, j, k, c) in &d.triples {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::InvalidInput(format!("triple ({i},{j},{k}) out of range")));
            }
            mult[*i][(*k, *j)] += c;
        }
        GradedAlgebra::from_left_mult(GradedSpace::new(d.degrees.clone()), d.unit, mult)
    }

    pub fn to_data(&self) -> GradedAlgebraData {
        let n = self.dim();
        let mut triples = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = &self.mult[i][(k, j)];
                    if !c.is_zero() {
                        triples.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        GradedAlgebraData { degrees: self.space.degrees.clone(), unit: self.unit, triples }
    }

    /// Degree additivity, unit law, graded commutativity and associativity.
    /// Associativity is checked on all triples up to dimension 64 and on a
    /// seeded sample beyond.
    fn verify(&self) -> Result<()> {
        let n = self.dim();
        if self.mult.len() != n || self.mult.iter().any(|m| m.shape() != (n, n)) {
            return Err(Error::InvalidInput("structure constants have wrong shape".into()));
        }
        if self.space.degrees.iter().any(|&d| d < 0) {
            return Err(Error::InvalidInput("algebra degrees must be nonnegative".into()));
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !self.mult[i][(k, j)].is_zero()
                        && self.space.degree(k) != self.space.degree(i) + self.space.degree(j)
                    {
                        return Err(Error::InvalidInput(format!("b{i}·b{j} has a term off degree")));
                    }
                }
            }
        }
        if self.mult[self.unit] != Mat::identity(n) {
            return Err(Error::InvalidInput("unit does not act as the identity".into()));
        }
        for i in 0..n {
            if self.mult[i].column(self.unit) != unit_vec(n, i) {
                return Err(Error::InvalidInput(format!("b{i}·1 ≠ b{i}")));
            }
            for j in 0..n {
                let sign = if self.space.degree(i) * self.space.degree(j) % 2 == 0 { 1 } else { -1 };
                let ij = self.mult[i].column(j);
                let ji: Vec<Rational> = self.mult[j].column(i).iter().map(|x| x * &Rational::from_int(sign)).collect();
                if ij != ji {
                    return Err(Error::InvalidInput(format!("b{i}, b{j} violate graded commutativity")));
                }
            }
        }
        let assoc = |i: usize, j: usize, k: usize| {
            // (bᵢbⱼ)bₖ = bᵢ(bⱼbₖ)
            let ij = self.mult[i].column(j);
            let lhs = self.left_mul_by(&ij).column(k);
            let rhs = self.mult[i].mul_vec(&self.mult[j].column(k));
            lhs == rhs
        };
        let fail = |i, j, k| Err(Error::InvalidInput(format!("not associative on (b{i}, b{j}, b{k})")));
        if n <= 64 {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !assoc(i, j, k) {
                            return fail(i, j, k);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..4096 {
                let (i, j, k) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                if !assoc(i, j, k) {
                    return fail(i, j, k);
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.space.total_dim()
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn unit_vector(&self) -> Vec<Rational> {
        unit_vec(self.dim(), self.unit)
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.space.degree(i)
    }

    pub fn left_mul(&self, i: usize) -> &Mat {
        &self.mult[i]
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_mul_by(&self, a: &[Rational]) -> Mat {
        let n = self.dim();
        a.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Mat::zeros(n, n), |acc, (i, c)| acc.add(&self.mult[i].scale(c)))
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        self.left_mul_by(a).mul_vec(b)
    }

    pub fn top_degree(&self) -> i64 {
        self.space.degrees.iter().copied().max().unwrap_or(0)
    }

    /// `n` with the algebra living in degrees `0..=2n`; `None` for odd top degree.
    pub fn depth(&self) -> Option<i64> {
        let t = self.top_degree();
        (t % 2 == 0).then_some(t / 2)
    }

    /// The Lefschetz module `R[n]` as a graded space.
    pub fn lefschetz_space(&self) -> Result<GradedSpace> {
        let n = self
            .depth()
            .ok_or_else(|| Error::InvalidInput("top degree is odd; no Lefschetz shift".into()))?;
        Ok(self.space.shift(n))
    }

    /// Indices of the degree-2 basis vectors.
    pub fn degree_two(&self) -> Vec<usize> {
        self.space.indices_of(2)
    }

    /// Subalgebra structure on a graded subspace closed under products.
    ///
    /// Returns the algebra together with the inclusion matrix (columns are
    /// the chosen homogeneous basis, expressed in the ambient basis). The
    /// unit must lie in `s`.
    pub fn subalgebra(&self, s: &Subspace) -> Result<(GradedAlgebra, Mat)> {
        let n = self.dim();
        let mut cols: Vec<Vec<Rational>> = Vec::new();
        let mut degrees = Vec::new();
        let mut labels = Vec::new();
        let mut unit = None;
        for &k in self.space.dims().keys() {
            let coord = Subspace::from_vectors(
                n,
                &self.space.indices_of(k).iter().map(|&i| unit_vec(n, i)).collect::<Vec<_>>(),
            );
            let piece = s.intersection(&coord);
            for v in piece.vectors() {
                if v == self.unit_vector() {
                    unit = Some(cols.len());
                }
                labels.push(format!("s{}", cols.len()));
                cols.push(v);
                degrees.push(k);
            }
        }
        if cols.len() != s.dim() {
            return Err(Error::InvalidInput("subspace is not graded".into()));
        }
        let unit = unit.ok_or_else(|| Error::InvalidInput("subspace does not contain the unit".into()))?;
        let inc = Mat::from_columns(&cols, n);
        let sub = Subspace::from_vectors(n, &cols);
        let d = cols.len();
        let mut mult = Vec::with_capacity(d);
        for a in &cols {
            let la = self.left_mul_by(a);
            let mut images = Vec::with_capacity(d);
            for b in &cols {
                let p = la.mul_vec(b);
                let c = sub
                    .coordinates(&p)
                    .ok_or_else(|| Error::InvalidInput("subspace is not closed under products".into()))?;
                images.push(coords_in(&cols, &sub, &c));
            }
            mult.push(Mat::from_columns(&images, d));
        }
        let alg = GradedAlgebra::from_left_mult(GradedSpace::with_labels(degrees, labels), unit, mult)?;
        Ok((alg, inc))
    }
}

/// Converts RREF coordinates in `sub` to coordinates in the basis `cols`.
fn coords_in(cols: &[Vec<Rational>], sub: &Subspace, rref_coords: &[Rational]) -> Vec<Rational> {
    // Express each column in RREF coordinates, then solve.
    let d = cols.len();
    let change = Mat::from_columns(
        &cols.iter().map(|c| sub.coordinates(c).expect("in span")).collect::<Vec<_>>(),
        d,
    );
    crate::linalg::solve(&change, rref_coords).expect("basis change is invertible")
}

pub(crate) fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// The Verbitsky component: the unital subalgebra generated by `R₂`.
pub fn verbitsky(r: &GradedAlgebra) -> Result<Subspace> {
    let n = r.dim();
    if r.space().dim_of(0) != 1 {
        return Err(Error::Precondition("dim R₀ must be 1".into()));
    }
    let gens: Vec<&Mat> = r.degree_two().iter().map(|&i| r.left_mul(i)).collect();
    let mut ech = Echelon::new(n);
    let mut frontier = vec![r.unit_vector()];
    ech.insert(&to_sparse(&frontier[0]));
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for g in &gens {
                let w = g.mul_vec(v);
                if ech.insert(&to_sparse(&w)).is_some() {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    Ok(ech.into_subspace())
}

/// A finite group acting on a graded algebra by graded automorphisms.
#[derive(Clone, Debug)]
pub struct GroupActionOnAlgebra {
    group: FiniteGroup,
    mats: Vec<Mat>,
}

impl GroupActionOnAlgebra {
    /// Verifies that every matrix is a degree-preserving algebra
    /// automorphism and that the assignment is a homomorphism.
    pub fn new(group: FiniteGroup, mats: Vec<Mat>, algebra: &GradedAlgebra) -> Result<Self> {
        let n = algebra.dim();
        if mats.len() != group.order() {
            return Err(Error::InvalidInput("one matrix per group element required".into()));
        }
        for (g, m) in mats.iter().enumerate() {
            if m.shape() != (n, n) || !algebra.space().is_of_degree(m, 0) {
                return Err(Error::InvalidInput(format!("action of element {g} is not degree-preserving")));
            }
            if crate::linalg::inverse(m).is_none() {
                return Err(Error::InvalidInput(format!("action of element {g} is not invertible")));
            }
            if m.mul_vec(&algebra.unit_vector()) != algebra.unit_vector() {
                return Err(Error::InvalidInput(format!("element {g} does not fix the unit")));
            }
            for i in 0..n {
                // g(bᵢ·x) = g(bᵢ)·g(x)
                let lhs = m.mul(algebra.left_mul(i));
                let rhs = algebra.left_mul_by(&m.column(i)).mul(m);
                if lhs != rhs {
                    return Err(Error::InvalidInput(format!("element {g} is not multiplicative")));
                }
            }
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if mats[a].mul(&mats[b]) != mats[group.mul(a, b)] {
                    return Err(Error::InvalidInput(format!("action is not a homomorphism at ({a},{b})")));
                }
            }
        }
        Ok(GroupActionOnAlgebra { group, mats })
    }

    /// Extends an automorphism of `V` to `⋀•V` (subset basis order of
    /// [`exterior_algebra`]).
    pub fn on_exterior(group: FiniteGroup, v_action: &[Mat], algebra: &GradedAlgebra) -> Result<Self> {
        let mats = v_action.iter().map(exterior_action::<Rational>).collect();
        GroupActionOnAlgebra::new(group, mats, algebra)
    }

    pub fn trivial(group: FiniteGroup, algebra: &GradedAlgebra) -> Self {
        let mats = vec![Mat::identity(algebra.dim()); group.order()];
        GroupActionOnAlgebra { group, mats }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn mats(&self) -> &[Mat] {
        &self.mats
    }

    pub fn reynolds(&self) -> Mat {
        let n = self.mats[0].rows();
        let s = self.mats.iter().fold(Mat::zeros(n, n), |acc, m| acc.add(m));
        s.scale(&Rational::new(1, self.group.order() as i64))
    }

    pub fn fixed_subspace(&self) -> Subspace {
        image(&self.reynolds())
    }
}

/// The invariant subalgebra `R^G` and its inclusion into `R`.
pub fn invariants(r: &GradedAlgebra, act: &GroupActionOnAlgebra) -> Result<(GradedAlgebra, Mat)> {
    r.subalgebra(&act.fixed_subspace())
}

/// Graded tensor product with Koszul signs,
/// `(a⊗b)(a′⊗b′) = (−1)^{|b||a′|} aa′⊗bb′`. Basis `(i, j)` has index `i·dim S + j`.
pub fn tensor(r: &GradedAlgebra, s: &GradedAlgebra) -> GradedAlgebra {
    let (nr, ns) = (r.dim(), s.dim());
    let parity = Mat::diag(
        &(0..nr)
            .map(|i| Rational::from_int(if r.degree(i) % 2 == 0 { 1 } else { -1 }))
            .collect::<Vec<_>>(),
    );
    let mut degrees = Vec::with_capacity(nr * ns);
    let mut labels = Vec::with_capacity(nr * ns);
    let mut mult = Vec::with_capacity(nr * ns);
    for i in 0..nr {
        for j in 0..ns {
            degrees.push(r.degree(i) + s.degree(j));
            labels.push(format!("{}⊗{}", r.space().labels()[i], s.space().labels()[j]));
            let left = if s.degree(j) % 2 == 0 {
                r.left_mul(i).clone()
            } else {
                r.left_mul(i).mul(&parity)
            };
            mult.push(left.kron(s.left_mul(j)));
        }
    }
    GradedAlgebra {
        space: GradedSpace::with_labels(degrees, labels),
        unit: r.unit() * ns + s.unit(),
        mult,
    }
}

/// Basis of `⋀•ℚⁿ`: subsets as bitmasks, ordered by size then
/// lexicographically on their sorted elements.
pub fn exterior_basis(n: usize) -> Vec<u32> {
    assert!(n < 32);
    let mut v: Vec<u32> = (0..(1u32 << n)).collect();
    v.sort_by_key(|&m| {
        let idx: Vec<u32> = (0..n as u32).filter(|i| m & (1 << i) != 0).collect();
        (m.count_ones(), idx)
    });
    v
}

/// Sign of `e_A ∧ e_B` relative to `e_{A∪B}` (inversions between `A` and `B`).
pub fn wedge_sign(a: u32, b: u32) -> i64 {
    let mut inv = 0;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        inv += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Induced map on `⋀•V` (basis of [`exterior_basis`]): the entry at
/// `(A, B)` is the minor of `g` on rows `A` and columns `B`. Generic so that
/// it can be differentiated with dual numbers.
pub fn exterior_action<T: Scalar>(g: &Matrix<T>) -> Matrix<T> {
    let n = g.rows();
    let basis = exterior_basis(n);
    let sets: Vec<Vec<usize>> = basis.iter().map(|&m| (0..n).filter(|i| m & (1 << i) != 0).collect()).collect();
    let dim = basis.len();
    let mut out = Matrix::zeros(dim, dim);
    for (a, ra) in sets.iter().enumerate() {
        for (b, cb) in sets.iter().enumerate() {
            if ra.len() == cb.len() {
                out[(a, b)] = determinant(&g.select(ra, cb));
            }
        }
    }
    out
}

/// `⋀•ℚⁿ` with `V` in degree 1.
pub fn exterior_algebra(dim_v: usize) -> GradedAlgebra {
    let basis = exterior_basis(dim_v);
    let pos: BTreeMap<u32, usize> = basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let n = basis.len();
    let degrees = basis.iter().map(|m| m.count_ones() as i64).collect();
    let labels = basis
        .iter()
        .map(|&m| {
            if m == 0 {
                "1".to_string()
            } else {
                (0..dim_v)
                    .filter(|i| m & (1 << i) != 0)
                    .map(|i| format!("e{}", i + 1))
                    .collect::<Vec<_>>()
                    .join("∧")
            }
        })
        .collect();
    let mut mult = vec![Mat::zeros(n, n); n];
    for (i, &a) in basis.iter().enumerate() {
        for (j, &b) in basis.iter().enumerate() {
            if a & b == 0 {
                mult[i][(pos[&(a | b)], j)] = Rational::from_int(wedge_sign(a, b));
            }
        }
    }
    GradedAlgebra { space: GradedSpace::with_labels(degrees, labels), unit: 0, mult }
}

/// `K·1 ⊕ H² ⊕ K·vol` with `x·y = b(x, y)·vol`, degrees 0, 2, 4.
pub fn surface_ring(b: &Mat) -> Result<GradedAlgebra> {
    if !b.is_symmetric() {
        return Err(Error::InvalidInput("form is not symmetric".into()));
    }
    let m = b.rows();
    if rank(b) < m {
        return Err(Error::InvalidInput("form is degenerate".into()));
    }
    let n = m + 2;
    let mut degrees = vec![0];
    degrees.extend(std::iter::repeat_n(2, m));
    degrees.push(4);
    let mut labels = vec!["1".to_string()];
    labels.extend((1..=m).map(|i| format!("x{i}")));
    labels.push("vol".into());
    let mut mult = vec![Mat::zeros(n, n); n];
    mult[0] = Mat::identity(n);
    for i in 0..m {
        mult[i + 1][(i + 1, 0)] = Rational::one();
        for j in 0..m {
            mult[i + 1][(n - 1, j + 1)] = b[(i, j)].clone();
        }
    }
    mult[n - 1][(n - 1, 0)] = Rational::one();
    Ok(GradedAlgebra { space: GradedSpace::with_labels(degrees, labels), unit: 0, mult })
}

/// `ℚ[x]/(x^{k+1})` with `x` in degree 2.
pub fn truncated_polynomial(k: usize) -> GradedAlgebra {
    let n = k + 1;
    let degrees = (0..n).map(|i| 2 * i as i64).collect();
    let labels = (0..n).map(|i| format!("x^{i}")).collect();
    let mut mult = vec![Mat::zeros(n, n); n];
    for (i, m) in mult.iter_mut().enumerate() {
        for j in 0..n {
            if i + j < n {
                m[(i + j, j)] = Rational::one();
            }
        }
    }
    GradedAlgebra { space: GradedSpace::with_labels(degrees, labels), unit: 0, mult }
}

/// The one-dimensional algebra `K` in degree 0.
pub fn unit_algebra() -> GradedAlgebra {
    truncated_polynomial(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;

    #[test]
    fn grading_operator_examples() {
        assert_eq!(grading_operator(&GradedSpace::new(vec![0])), Mat::zeros(1, 1));
        assert_eq!(grading_operator(&GradedSpace::new(vec![-1, 1])), Mat::diag(&[qi(-1), qi(1)]));
        let m = exterior_algebra(2).lefschetz_space().unwrap();
        assert_eq!(grading_operator(&m), Mat::diag(&[qi(-1), qi(0), qi(0), qi(1)]));
    }

    #[test]
    fn hard_lefschetz_examples() {
        let r = exterior_algebra(2);
        let m = r.lefschetz_space().unwrap();
        assert!(has_hard_lefschetz(r.left_mul(3), &m).unwrap());
        assert!(!has_hard_lefschetz(&Mat::zeros(4, 4), &m).unwrap());
        assert!(has_hard_lefschetz(r.left_mul(1), &m).is_err());

        let s = surface_ring(&Mat::diag(&[qi(1), qi(1), qi(-1)])).unwrap();
        let m = s.lefschetz_space().unwrap();
        assert!(has_hard_lefschetz(s.left_mul(1), &m).unwrap());
        // ω = x1 + x3 is isotropic
        let w = s.left_mul(1).add(s.left_mul(3));
        assert!(!has_hard_lefschetz(&w, &m).unwrap());
    }

    #[test]
    fn verbitsky_examples() {
        assert_eq!(verbitsky(&exterior_algebra(1)).unwrap().dim(), 1);
        let v = verbitsky(&exterior_algebra(2)).unwrap();
        assert_eq!(v.dim(), 2);
        assert!(v.contains(&unit_vec(4, 3)));
        let s = surface_ring(&Mat::diag(&[qi(1), qi(2), qi(-1), qi(3)])).unwrap();
        assert_eq!(verbitsky(&s).unwrap().dim(), 6);
    }

    #[test]
    fn exterior_dims() {
        assert_eq!(exterior_algebra(0).dim(), 1);
        let e2 = exterior_algebra(2);
        assert_eq!(e2.space().dims().values().copied().collect::<Vec<_>>(), vec![1, 2, 1]);
        assert_eq!(e2.mul(&unit_vec(4, 1), &unit_vec(4, 2)), unit_vec(4, 3));
        assert_eq!(e2.mul(&unit_vec(4, 2), &unit_vec(4, 1)), unit_vec(4, 3).iter().map(|x| -x).collect::<Vec<_>>());
        let e4 = exterior_algebra(4);
        assert_eq!(e4.space().dims().values().copied().collect::<Vec<_>>(), vec![1, 4, 6, 4, 1]);
        GradedAlgebra::from_data(&e4.to_data()).unwrap();
    }

    #[test]
    fn tensor_examples() {
        let r = exterior_algebra(2);
        assert_eq!(tensor(&r, &unit_algebra()), GradedAlgebra { space: GradedSpace::with_labels(r.space().degrees().to_vec(), r.space().labels().iter().map(|l| format!("{l}⊗x^0")).collect()), ..r.clone() });
        let t = tensor(&exterior_algebra(1), &exterior_algebra(1));
        t.verify().unwrap();
        // v⊗1 · 1⊗w = v⊗w, 1⊗w · v⊗1 = −v⊗w
        let (v, w, vw) = (unit_vec(4, 2), unit_vec(4, 1), unit_vec(4, 3));
        assert_eq!(t.mul(&v, &w), vw);
        assert_eq!(t.mul(&w, &v), vw.iter().map(|x| -x).collect::<Vec<_>>());
        let ss = tensor(&surface_ring(&Mat::identity(1)).unwrap(), &surface_ring(&Mat::identity(2)).unwrap());
        assert_eq!(ss.depth(), Some(4));
    }

    #[test]
    fn invariants_examples() {
        let r = exterior_algebra(2);
        let z2 = FiniteGroup::cyclic(2);
        let act = GroupActionOnAlgebra::on_exterior(z2.clone(), &[Mat::identity(2), Mat::identity(2).neg()], &r).unwrap();
        let (rg, _) = invariants(&r, &act).unwrap();
        assert_eq!(rg.space().dims(), BTreeMap::from([(0, 1), (2, 1)]));
        let triv = GroupActionOnAlgebra::trivial(z2, &r);
        assert_eq!(invariants(&r, &triv).unwrap().0.dim(), 4);
    }

    #[test]
    fn surface_rejects_degenerate() {
        assert!(surface_ring(&Mat::from_i64(2, 2, &[1, 1, 1, 1])).is_err());
        let s = surface_ring(&Mat::from_i64(2, 2, &[0, 1, 1, 0])).unwrap();
        let (e, f, vol) = (unit_vec(4, 1), unit_vec(4, 2), unit_vec(4, 3));
        assert_eq!(s.mul(&e, &f), vol);
        assert!(s.mul(&e, &e).iter().all(Rational::is_zero));
    }
}
