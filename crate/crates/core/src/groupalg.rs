//! Finite groups, their rational representations and group algebras.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::Rational;
use crate::linalg::{det, kernel, rank, Mat, Subspace};
use crate::semisimple::primitive_idempotents;
use crate::{Error, Result};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    perms: Option<Vec<Vec<usize>>>,
}

impl FiniteGroup {
    /// Validates and wraps a Cayley table (`table[a][b] = a·b`).
    ///
    /// Associativity is checked on all triples up to order 64 and on a
    /// seeded sample of triples beyond.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty group".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::InvalidInput("malformed multiplication table".into()));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidInput("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::InvalidInput(format!("element {a} has no inverse")))?;
        }
        let assoc = |a: usize, b: usize, c: usize| table[table[a][b]][c] == table[a][table[b][c]];
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::InvalidInput(format!("not associative at ({a},{b},{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..20_000 {
                let (a, b, c) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::InvalidInput(format!("not associative at ({a},{b},{c})")));
                }
            }
        }
        Ok(FiniteGroup {
            table,
            identity,
            inverse,
            generators: (0..n).collect(),
            perms: None,
        })
    }

    /// Group generated by permutations of `{0..d-1}` (images lists), with
    /// the identity as element 0 and the generators as elements `1..`.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<Self> {
        let d = gens.first().map_or(0, Vec::len);
        for g in gens {
            let mut seen = vec![false; d];
            if g.len() != d || g.iter().any(|&x| x >= d || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::InvalidInput("generator is not a permutation".into()));
            }
        }
        let id: Vec<usize> = (0..d).collect();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { (0..d).map(|i| p[q[i]]).collect() };
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut generators = Vec::new();
        for g in gens {
            let k = *index.entry(g.clone()).or_insert_with(|| {
                elems.push(g.clone());
                elems.len() - 1
            });
            generators.push(k);
        }
        let mut queue: VecDeque<usize> = (0..elems.len()).collect();
        while let Some(a) = queue.pop_front() {
            for g in gens {
                let p = compose(&elems[a], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                    queue.push_back(elems.len() - 1);
                }
            }
        }
        let n = elems.len();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| index[&compose(&elems[a], &elems[b])]).collect())
            .collect();
        let mut g = FiniteGroup::from_table(table)?;
        g.generators = generators;
        g.perms = Some(elems);
        Ok(g)
    }

    pub fn trivial() -> Self {
        FiniteGroup::from_table(vec![vec![0]]).expect("trivial group")
    }

    /// ℤ/n with element `k` the `k`-th power of the generator 1.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mut g = FiniteGroup::from_table(table).expect("cyclic group");
        g.generators = if n > 1 { vec![1] } else { Vec::new() };
        g
    }

    /// Sₙ generated by a transposition and an n-cycle.
    pub fn symmetric(n: usize) -> Self {
        if n <= 1 {
            return FiniteGroup::from_permutations(&[vec![0; n.min(1)]]).expect("S1");
        }
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        let c: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let gens = if n == 2 { vec![t] } else { vec![t, c] };
        FiniteGroup::from_permutations(&gens).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// The permutation realizing each element, when built from permutations.
    pub fn permutations(&self) -> Option<&[Vec<usize>]> {
        self.perms.as_deref()
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| self.mul(self.mul(g, a), self.inv(g))).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            out.push(class);
        }
        out
    }

    /// Matrix of left multiplication by `x ∈ ℚ[G]` on the regular module.
    pub fn left_regular(&self, x: &[Rational]) -> Mat {
        let n = self.order();
        let mut m = Mat::zeros(n, n);
        for (g, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for h in 0..n {
                m[(self.mul(g, h), h)] += c;
            }
        }
        m
    }

    /// Product in the group algebra.
    pub fn algebra_mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        for (g, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (h, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out[self.mul(g, h)] += a * b;
            }
        }
        out
    }

    /// Basis vector of a group element in ℚ[G].
    pub fn element(&self, g: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.order()];
        v[g] = Rational::one();
        v
    }
}

/// The canonical involution `g ↦ g⁻¹`, extended linearly.
pub fn group_involution(group: &FiniteGroup, x: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); group.order()];
    for (g, c) in x.iter().enumerate() {
        out[group.inv(g)] = c.clone();
    }
    out
}

/// A representation `G → GL_n(ℚ)` given on every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMat {
    group: FiniteGroup,
    mats: Vec<Mat>,
}

impl RepMat {
    /// Checks `ρ(g)ρ(h) = ρ(gh)` on all pairs and `ρ(1) = I`.
    pub fn new(group: FiniteGroup, mats: Vec<Mat>) -> Result<Self> {
        if mats.len() != group.order() {
            return Err(Error::InvalidInput("one matrix per group element required".into()));
        }
        let d = mats[0].rows();
        if mats.iter().any(|m| m.shape() != (d, d)) {
            return Err(Error::InvalidInput("representation matrices must be square of equal size".into()));
        }
        if mats[group.identity()] != Mat::identity(d) {
            return Err(Error::InvalidInput("identity must act trivially".into()));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if mats[a].mul(&mats[b]) != mats[group.mul(a, b)] {
                    return Err(Error::InvalidInput(format!(
                        "not a homomorphism: ρ({a})ρ({b}) ≠ ρ({a}·{b})"
                    )));
                }
            }
        }
        Ok(RepMat { group, mats })
    }

    /// Extends images of `generators` to the whole group by breadth-first
    /// search, then validates.
    pub fn from_generator_images(group: FiniteGroup, generators: &[usize], images: &[Mat]) -> Result<Self> {
        if generators.len() != images.len() {
            return Err(Error::InvalidInput("generator/image count mismatch".into()));
        }
        let d = images.first().map_or(1, Mat::rows);
        let mut mats: Vec<Option<Mat>> = vec![None; group.order()];
        mats[group.identity()] = Some(Mat::identity(d));
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(a) = queue.pop_front() {
            for (g, m) in generators.iter().zip(images) {
                let b = group.mul(a, *g);
                if mats[b].is_none() {
                    mats[b] = Some(mats[a].as_ref().unwrap().mul(m));
                    queue.push_back(b);
                }
            }
        }
        let mats: Option<Vec<Mat>> = mats.into_iter().collect();
        let mats = mats.ok_or_else(|| Error::InvalidInput("generators do not generate the group".into()))?;
        RepMat::new(group, mats)
    }

    pub fn trivial(group: FiniteGroup, dim: usize) -> Self {
        let mats = vec![Mat::identity(dim); group.order()];
        RepMat { group, mats }
    }

    pub fn regular(group: FiniteGroup) -> Self {
        let mats = (0..group.order()).map(|g| group.left_regular(&group.element(g))).collect();
        RepMat { group, mats }
    }

    /// Permutation representation for groups built from permutations.
    pub fn permutation(group: FiniteGroup) -> Result<Self> {
        let perms = group
            .permutations()
            .ok_or_else(|| Error::InvalidInput("group has no permutation realization".into()))?;
        let d = perms[0].len();
        let mats = perms
            .iter()
            .map(|p| {
                let mut m = Mat::zeros(d, d);
                for (i, &j) in p.iter().enumerate() {
                    m[(j, i)] = Rational::one();
                }
                m
            })
            .collect();
        Ok(RepMat { group, mats })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn mats(&self) -> &[Mat] {
        &self.mats
    }

    pub fn matrix(&self, g: usize) -> &Mat {
        &self.mats[g]
    }

    pub fn dim(&self) -> usize {
        self.mats[0].rows()
    }

    pub fn direct_sum(&self, o: &RepMat) -> RepMat {
        assert_eq!(self.group, o.group);
        let mats = self.mats.iter().zip(&o.mats).map(|(a, b)| Mat::block_diag(&[a, b])).collect();
        RepMat { group: self.group.clone(), mats }
    }

    pub fn tensor(&self, o: &RepMat) -> RepMat {
        assert_eq!(self.group, o.group);
        let mats = self.mats.iter().zip(&o.mats).map(|(a, b)| a.kron(b)).collect();
        RepMat { group: self.group.clone(), mats }
    }

    /// Contragredient `g ↦ ρ(g⁻¹)ᵀ`.
    pub fn dual(&self) -> RepMat {
        let mats = (0..self.group.order())
            .map(|g| self.mats[self.group.inv(g)].transpose())
            .collect();
        RepMat { group: self.group.clone(), mats }
    }

    /// `ρ(x) = Σ x_g ρ(g)` for `x ∈ ℚ[G]`.
    pub fn of_element(&self, x: &[Rational]) -> Mat {
        let d = self.dim();
        x.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Mat::zeros(d, d), |acc, (g, c)| acc.add(&self.mats[g].scale(c)))
    }

    /// Reynolds projector `(1/|G|) Σ ρ(g)`.
    pub fn reynolds(&self) -> Mat {
        let d = self.dim();
        let s = self.mats.iter().fold(Mat::zeros(d, d), |acc, m| acc.add(m));
        s.scale(&Rational::new(1, self.group.order() as i64))
    }

    /// The subspace of invariant vectors.
    pub fn fixed_subspace(&self) -> Subspace {
        crate::linalg::image(&self.reynolds())
    }
}

/// Central primitive orthogonal idempotents of ℚ[G].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralIdempotentSet {
    pub idempotents: Vec<Vec<Rational>>,
}

impl CentralIdempotentSet {
    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    /// Checks `eᵢ² = eᵢ`, `eᵢeⱼ = 0`, `Σeᵢ = 1` and centrality.
    pub fn verify(&self, group: &FiniteGroup) -> bool {
        let n = group.order();
        let mut sum = vec![Rational::zero(); n];
        for (i, e) in self.idempotents.iter().enumerate() {
            if group.algebra_mul(e, e) != *e {
                return false;
            }
            for f in &self.idempotents[i + 1..] {
                if group.algebra_mul(e, f).iter().any(|x| !x.is_zero()) {
                    return false;
                }
            }
            for g in 0..n {
                let x = group.element(g);
                if group.algebra_mul(&x, e) != group.algebra_mul(e, &x) {
                    return false;
                }
            }
            for (s, x) in sum.iter_mut().zip(e) {
                *s += x;
            }
        }
        sum == group.element(group.identity())
    }
}

/// Class sums span the center; splitting the center (through the left
/// regular representation) into fields gives the primitive idempotents. The
/// trivial idempotent `(1/|G|)Σg` comes first.
pub fn central_idempotents(group: &FiniteGroup) -> CentralIdempotentSet {
    let n = group.order();
    let class_mats: Vec<Mat> = group
        .conjugacy_classes()
        .iter()
        .map(|c| {
            let mut x = vec![Rational::zero(); n];
            for &g in c {
                x[g] = Rational::one();
            }
            group.left_regular(&x)
        })
        .collect();
    let mats = primitive_idempotents(&class_mats, 0xC1A55).expect("group algebras are semisimple");
    let id = group.identity();
    let mut idempotents: Vec<Vec<Rational>> = mats.iter().map(|m| m.column(id)).collect();
    let trivial = vec![Rational::new(1, n as i64); n];
    idempotents.sort_by_key(|e| (*e != trivial, e.iter().filter(|x| !x.is_zero()).count()));
    CentralIdempotentSet { idempotents }
}

/// Isotypic components: images of `ρ(eᵢ)`, indexed by idempotent, zero
/// components included.
pub fn isotypic_components(rep: &RepMat, set: &CentralIdempotentSet) -> Vec<(usize, Subspace)> {
    set.idempotents
        .iter()
        .enumerate()
        .map(|(i, e)| (i, crate::linalg::image(&rep.of_element(e))))
        .collect()
}

/// `dim V^G` as the rank of the Reynolds projector.
pub fn invariant_dimension(rep: &RepMat) -> usize {
    rank(&rep.reynolds())
}

/// Average of traces, `(1/|G|) Σ tr ρ(g)`.
pub fn average_trace(rep: &RepMat) -> Rational {
    let s: Rational = rep.mats().iter().map(Mat::trace).sum();
    s / Rational::from(rep.group().order())
}

/// Matrix of `⋀²A` on the basis `eᵢ∧eⱼ`, `i < j`, lexicographic.
pub fn wedge2_matrix(a: &Mat) -> Mat {
    let n = a.rows();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Mat::from_fn(pairs.len(), pairs.len(), |r, c| {
        let (i, j) = pairs[r];
        let (k, l) = pairs[c];
        &(&a[(i, k)] * &a[(j, l)]) - &(&a[(i, l)] * &a[(j, k)])
    })
}

/// `dim (⋀²V)^G`, computed from the induced action and from the character
/// formula `(1/|G|) Σ ½(χ(g)² − χ(g²))`; the two must agree.
pub fn wedge2_invariant_dimension(rep: &RepMat) -> Result<usize> {
    let g = rep.group();
    let mats: Vec<Mat> = rep.mats().iter().map(wedge2_matrix).collect();
    let w = RepMat { group: g.clone(), mats };
    let direct = invariant_dimension(&w);
    let half = Rational::new(1, 2);
    let s: Rational = (0..g.order())
        .map(|x| {
            let chi = rep.matrix(x).trace();
            let chi2 = rep.matrix(g.mul(x, x)).trace();
            &half * &(&(&chi * &chi) - &chi2)
        })
        .sum();
    let formula = s / Rational::from(g.order());
    if formula != Rational::from(direct) {
        return Err(Error::Internal(format!(
            "⋀² invariant dimension mismatch: action gives {direct}, characters give {formula}"
        )));
    }
    Ok(direct)
}

/// Trace of `⋀ⁱA` for every `i`: sums of principal `i×i` minors.
pub fn wedge_traces(a: &Mat) -> Vec<Rational> {
    let n = a.rows();
    let mut out = vec![Rational::zero(); n + 1];
    for mask in 0u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        out[idx.len()] += det(&a.select(&idx, &idx));
    }
    out
}

/// Both sides of the Lefschetz trace identity:
/// `Σ(−1)ⁱ tr ⋀ⁱg` and `det(I − g)`.
pub fn lefschetz_identity(g: &Mat) -> (Rational, Rational) {
    let lhs = wedge_traces(g)
        .iter()
        .enumerate()
        .map(|(i, t)| if i % 2 == 0 { t.clone() } else { -t })
        .sum();
    let rhs = det(&Mat::identity(g.rows()).sub(g));
    (lhs, rhs)
}

/// `dim ker(ρ(g) − I)`: the multiplicity of eigenvalue 1 counted geometrically.
pub fn fixed_dimension(m: &Mat) -> usize {
    kernel(&m.sub(&Mat::identity(m.rows()))).dim()
}

/// Group elements grouped by order, for reporting.
pub fn element_orders(group: &FiniteGroup) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for a in 0..group.order() {
        let mut k = 1;
        let mut x = a;
        while x != group.identity() {
            x = group.mul(x, a);
            k += 1;
        }
        *out.entry(k).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};

    /// The 2-dimensional standard representation of S₃ on `{x : Σx = 0}`.
    pub(crate) fn s3_standard() -> RepMat {
        let g = FiniteGroup::symmetric(3);
        let perm = RepMat::permutation(g.clone()).unwrap();
        // basis (e0 − e1, e1 − e2)
        let b = Mat::from_i64(3, 2, &[1, 0, -1, 1, 0, -1]);
        let mats = perm
            .mats()
            .iter()
            .map(|m| {
                let img = m.mul(&b);
                let cols: Vec<Vec<Rational>> = (0..2)
                    .map(|j| {
                        let v = img.column(j);
                        vec![v[0].clone(), &v[0] + &v[1]]
                    })
                    .collect();
                Mat::from_columns(&cols, 2)
            })
            .collect();
        RepMat::new(g, mats).unwrap()
    }

    #[test]
    fn group_constructors() {
        assert_eq!(FiniteGroup::symmetric(3).order(), 6);
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
        assert_eq!(FiniteGroup::cyclic(5).order(), 5);
        assert_eq!(FiniteGroup::symmetric(3).conjugacy_classes().len(), 3);
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![0, 1]]).is_err());
    }

    #[test]
    fn idempotents_small_groups() {
        let z2 = FiniteGroup::cyclic(2);
        let e = central_idempotents(&z2);
        assert_eq!(e.idempotents, vec![vec![q(1, 2), q(1, 2)], vec![q(1, 2), q(-1, 2)]]);
        assert!(e.verify(&z2));

        let z3 = FiniteGroup::cyclic(3);
        let e = central_idempotents(&z3);
        assert_eq!(e.len(), 2);
        assert!(e.verify(&z3));
        for x in &e.idempotents {
            assert_eq!(&group_involution(&z3, x), x);
        }

        let s3 = FiniteGroup::symmetric(3);
        let e = central_idempotents(&s3);
        assert_eq!(e.len(), 3);
        assert!(e.verify(&s3));
    }

    #[test]
    fn involution_examples() {
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(group_involution(&z3, &z3.element(0)), z3.element(0));
        assert_eq!(group_involution(&z3, &z3.element(1)), z3.element(2));
    }

    #[test]
    fn isotypic_examples() {
        let s3 = FiniteGroup::symmetric(3);
        let reg = RepMat::regular(s3.clone());
        let set = central_idempotents(&s3);
        let mut dims: Vec<usize> = isotypic_components(&reg, &set).iter().map(|(_, s)| s.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 4]);

        let z2 = FiniteGroup::cyclic(2);
        let neg = RepMat::new(z2.clone(), vec![Mat::identity(2), Mat::identity(2).neg()]).unwrap();
        let comps = isotypic_components(&neg, &central_idempotents(&z2));
        assert_eq!(comps[0].1.dim(), 0);
        assert_eq!(comps[1].1.dim(), 2);
    }

    #[test]
    fn invariant_dimension_examples() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(invariant_dimension(&RepMat::regular(s3.clone())), 1);
        assert_eq!(invariant_dimension(&RepMat::trivial(s3, 4)), 4);
        let z2 = FiniteGroup::cyclic(2);
        let swap = RepMat::new(z2, vec![Mat::identity(2), Mat::from_i64(2, 2, &[0, 1, 1, 0])]).unwrap();
        assert_eq!(invariant_dimension(&swap), 1);
        assert_eq!(average_trace(&swap), qi(1));
    }

    #[test]
    fn wedge2_examples() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(wedge2_invariant_dimension(&RepMat::trivial(s3, 1)).unwrap(), 0);
        assert_eq!(wedge2_invariant_dimension(&s3_standard()).unwrap(), 0);
        let z2 = FiniteGroup::cyclic(2);
        let neg = RepMat::new(z2, vec![Mat::identity(2), Mat::identity(2).neg()]).unwrap();
        assert_eq!(wedge2_invariant_dimension(&neg).unwrap(), 1);
    }

    #[test]
    fn lefschetz_examples() {
        assert_eq!(lefschetz_identity(&Mat::identity(2)), (qi(0), qi(0)));
        assert_eq!(lefschetz_identity(&Mat::identity(2).neg()), (qi(4), qi(4)));
        let rot = Mat::from_i64(2, 2, &[0, -1, 1, 0]);
        assert_eq!(lefschetz_identity(&rot), (qi(2), qi(2)));
    }

    #[test]
    fn generator_extension() {
        let s3 = FiniteGroup::symmetric(3);
        let std = s3_standard();
        let gens = s3.generators().to_vec();
        let images: Vec<Mat> = gens.iter().map(|&g| std.matrix(g).clone()).collect();
        let rebuilt = RepMat::from_generator_images(s3, &gens, &images).unwrap();
        assert_eq!(rebuilt, std);
    }
}
