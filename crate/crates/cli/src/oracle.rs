//! Independent reference computations used by the acceptance suite. These
//! deliberately avoid the library routines they are checked against.

use llvkit::linalg::Subspace;
use llvkit::{Mat, Rational};

/// Rank by plain Gaussian elimination on row vectors.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                for k in c..cols {
                    let t = &f * &m[r][k];
                    m[i][k] -= &t;
                }
            }
        }
        r += 1;
    }
    r
}

/// `det` by the Leibniz expansion (small sizes only).
pub fn det_leibniz(a: &Mat) -> Rational {
    let n = a.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut t = Rational::one();
        for (i, &j) in p.iter().enumerate() {
            t *= &a[(i, j)];
        }
        if inversions % 2 == 1 {
            t = -t;
        }
        total += &t;
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier, constant
/// term first.
pub fn charpoly(a: &Mat) -> Vec<Rational> {
    let n = a.rows();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut m = Mat::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&Mat::identity(n).scale(&c[n - k + 1]));
        let t = a.mul(&m).trace();
        c[n - k] = -(t / Rational::from_int(k as i64));
    }
    c
}

fn sign_changes(coeffs: &[Rational]) -> usize {
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(|c| *c > Rational::zero()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(positive, negative, zero)` of a symmetric matrix. All roots of its
/// characteristic polynomial are real, so Descartes' rule is exact.
pub fn signature(s: &Mat) -> (usize, usize, usize) {
    let p = charpoly(s);
    let zero = p.iter().take_while(|c| c.is_zero()).count();
    let pos = sign_changes(&p);
    let neg_coeffs: Vec<Rational> = p.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() }).collect();
    (pos, sign_changes(&neg_coeffs), zero)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub fn divisor_count(n: usize) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count()
}

/// Subsets of `{0..n}` as sorted index lists ordered by size, then
/// lexicographically.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..1usize << n).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Parity of the permutation sorting `v` (distinct entries), by bubble sort.
fn sort_sign(v: &mut [usize]) -> i64 {
    let mut s = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                s = -s;
            }
        }
    }
    s
}

/// Matrices of `e_i ∧ −` and of the contraction `ι_i` on `⋀•ℚⁿ`.
pub fn exterior_ops(n: usize) -> (Vec<Mat>, Vec<Mat>) {
    let basis = subsets(n);
    let find = |s: &[usize]| basis.iter().position(|b| b == s).expect("subset");
    let d = basis.len();
    let mut eps = vec![Mat::zeros(d, d); n];
    let mut iota = vec![Mat::zeros(d, d); n];
    for (col, s) in basis.iter().enumerate() {
        for i in 0..n {
            if !s.contains(&i) {
                let mut t = vec![i];
                t.extend(s);
                let sign = sort_sign(&mut t);
                eps[i][(find(&t), col)] = Rational::from_int(sign);
            } else {
                let pos = s.iter().position(|&x| x == i).expect("member");
                let t: Vec<usize> = s.iter().copied().filter(|&x| x != i).collect();
                iota[i][(find(&t), col)] = Rational::from_int(if pos % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    (eps, iota)
}

/// The image of `so(V ⊕ V*)` in `gl(⋀•V)`, spanned by `ε_iε_j`, `ι_iι_j`
/// and `ε_iι_j − ½δ_ij`.
pub fn spinor_image(n: usize) -> Subspace {
    let (eps, iota) = exterior_ops(n);
    let d = 1usize << n;
    let half = Rational::new(1, 2);
    let mut vs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut x = eps[i].mul(&iota[j]);
            if i == j {
                x = x.sub(&Mat::identity(d).scale(&half));
            }
            vs.push(x.flatten());
            if i < j {
                vs.push(eps[i].mul(&eps[j]).flatten());
                vs.push(iota[i].mul(&iota[j]).flatten());
            }
        }
    }
    Subspace::from_vectors(d * d, &vs)
}

fn span_flat(mats: &[Mat]) -> Vec<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> = mats.iter().map(Mat::flatten).collect();
    independent(&rows)
}

fn independent(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut kept: Vec<Vec<Rational>> = Vec::new();
    for r in rows {
        let mut trial = kept.clone();
        trial.push(r.clone());
        if rank(&trial) > kept.len() {
            kept = trial;
        }
    }
    kept
}

fn unflatten(v: &[Rational], n: usize) -> Mat {
    Mat::from_vec(n, n, v.to_vec())
}

/// Smallest ideal of the algebra spanned by `g` containing `x`.
fn ideal_of(g: &[Mat], x: &Mat, n: usize) -> Vec<Mat> {
    let mut basis = vec![x.flatten()];
    let mut frontier = vec![x.clone()];
    while let Some(y) = frontier.pop() {
        for b in g {
            let z = b.bracket(&y).flatten();
            let mut trial = basis.clone();
            trial.push(z.clone());
            if rank(&trial) > basis.len() {
                basis = trial;
                frontier.push(unflatten(&z, n));
            }
        }
    }
    basis.iter().map(|v| unflatten(v, n)).collect()
}

/// `{y ∈ g : [y, I] = 0}`.
fn centralizer_in(g: &[Mat], ideal: &[Mat], n: usize) -> Vec<Mat> {
    // unknown coefficients c of y = Σ c_k g_k; equations [y, i] = 0
    let k = g.len();
    let mut rows = Vec::new();
    for i in ideal {
        let brs: Vec<Vec<Rational>> = g.iter().map(|b| b.bracket(i).flatten()).collect();
        for e in 0..n * n {
            rows.push((0..k).map(|c| brs[c][e].clone()).collect::<Vec<_>>());
        }
    }
    null_space(&rows, k)
        .into_iter()
        .map(|c| {
            c.iter().zip(g).fold(Mat::zeros(n, n), |acc, (a, b)| acc.add(&b.scale(a)))
        })
        .collect()
}

fn null_space(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &pv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..cols {
                    let t = &f * &m[r][k];
                    m[i][k] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            v
        })
        .collect()
}

/// Dimensions of the simple ideals of a semisimple matrix Lie algebra,
/// found by searching small integer combinations for an element whose
/// generated ideal is proper, splitting off its centralizer, and recursing.
pub fn ideal_dims_brute_force(g: &[Mat], n: usize) -> Vec<usize> {
    let basis: Vec<Mat> = span_flat(g).iter().map(|v| unflatten(v, n)).collect();
    let mut out = split(&basis, n);
    out.sort_unstable();
    out
}

fn split(g: &[Mat], n: usize) -> Vec<usize> {
    let k = g.len();
    if k <= 1 {
        return vec![k];
    }
    let mut coeffs = vec![0i64; k];
    // combinations with entries in {−1, 0, 1}, fewest nonzeros first
    let mut candidates: Vec<Vec<i64>> = Vec::new();
    loop {
        candidates.push(coeffs.clone());
        let mut i = 0;
        while i < k {
            coeffs[i] += 1;
            if coeffs[i] <= 1 {
                break;
            }
            coeffs[i] = -1;
            i += 1;
        }
        if i == k {
            break;
        }
        if candidates.len() > 20_000 {
            break;
        }
    }
    candidates.sort_by_key(|c| c.iter().filter(|&&x| x != 0).count());
    for c in candidates.iter().filter(|c| c.iter().any(|&x| x != 0)) {
        let x = c.iter().zip(g).fold(Mat::zeros(n, n), |acc, (&a, b)| acc.add(&b.scale(&Rational::from_int(a))));
        let ideal = ideal_of(g, &x, n);
        if ideal.len() < k {
            let comp = centralizer_in(g, &ideal, n);
            if ideal.len() + comp.len() != k {
                continue;
            }
            let mut dims = split(&ideal, n);
            dims.extend(split(&comp, n));
            return dims;
        }
    }
    vec![k]
}

#[cfg(test)]
mod tests {
    use super::*;
    use llvkit::{q, qi};

    #[test]
    fn det_and_charpoly() {
        let a = Mat::from_i64(3, 3, &[2, 1, 0, 1, 3, 1, 0, 1, 4]);
        assert_eq!(det_leibniz(&a), llvkit::linalg::det(&a));
        let p = charpoly(&Mat::diag(&[qi(1), qi(2)]));
        assert_eq!(p, vec![qi(2), qi(-3), qi(1)]);
        assert_eq!(signature(&Mat::diag(&[qi(1), qi(-2), qi(0), q(1, 3)])), (2, 1, 1));
    }

    #[test]
    fn brute_force_split_of_so4() {
        let g: Vec<Mat> = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| Mat::unit(4, 4, i, j).sub(&Mat::unit(4, 4, j, i))))
            .collect();
        assert_eq!(ideal_dims_brute_force(&g, 4), vec![3, 3]);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(divisor_count(8), 4);
    }
}
