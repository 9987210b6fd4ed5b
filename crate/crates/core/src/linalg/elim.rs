use crate::exact::{Poly, Rational, Scalar};

use super::{Mat, Matrix, Subspace};

/// Reduced row echelon form with the list of pivot columns.
///
/// Among candidate pivots in a column the entry with the smallest bit size is
/// chosen to limit coefficient growth.
pub fn rref_with_pivots(m: &Mat) -> (Mat, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(best) = (r..rows)
            .filter(|&i| !a[(i, c)].is_zero())
            .min_by_key(|&i| a[(i, c)].bit_size())
        else {
            continue;
        };
        a.swap_rows(r, best);
        let inv = a[(r, c)].recip();
        for j in c..cols {
            if !a[(r, j)].is_zero() {
                a[(r, j)] = &a[(r, j)] * &inv;
            }
        }
        let pivot_row: Vec<(usize, Rational)> = (c..cols)
            .filter(|&j| !a[(r, j)].is_zero())
            .map(|j| (j, a[(r, j)].clone()))
            .collect();
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for (j, v) in &pivot_row {
                a[(i, *j)] = &a[(i, *j)] - &(&f * v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Reduced row echelon form and rank.
pub fn rref(m: &Mat) -> (Mat, usize) {
    let (a, p) = rref_with_pivots(m);
    (a, p.len())
}

pub fn rank(m: &Mat) -> usize {
    rref_with_pivots(m).1.len()
}

/// Null space `{v : m·v = 0}`.
pub fn kernel(m: &Mat) -> Subspace {
    let cols = m.cols();
    let (a, pivots) = rref_with_pivots(m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vecs: Vec<Vec<Rational>> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&a[(r, f)];
            }
            v
        })
        .collect();
    Subspace::from_vectors(cols, &vecs)
}

/// Column space of `m` as a subspace of the target.
pub fn image(m: &Mat) -> Subspace {
    Subspace::from_matrix_rows(&m.transpose())
}

/// Some solution of `a·x = b`, or `None` when inconsistent.
pub fn solve(a: &Mat, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len());
    let n = a.cols();
    let aug = a.hstack(&Mat::from_columns(&[b.to_vec()], b.len()));
    let (r, pivots) = rref_with_pivots(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[(i, n)].clone();
    }
    Some(x)
}

pub fn inverse(m: &Mat) -> Option<Mat> {
    assert!(m.is_square());
    let n = m.rows();
    let (r, pivots) = rref_with_pivots(&m.hstack(&Mat::identity(n)));
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.submatrix(0, n, n, 2 * n))
}

/// Determinant over ℚ by elimination.
pub fn det(m: &Mat) -> Rational {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).filter(|&i| !a[(i, c)].is_zero()).min_by_key(|&i| a[(i, c)].bit_size())
        else {
            return Rational::zero();
        };
        if p != c {
            a.swap_rows(p, c);
            d = -d;
        }
        let piv = a[(c, c)].clone();
        d *= &piv;
        let inv = piv.recip();
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = &a[(i, c)] * &inv;
            for j in c..n {
                if !a[(c, j)].is_zero() {
                    a[(i, j)] = &a[(i, j)] - &(&f * &a[(c, j)]);
                }
            }
        }
    }
    d
}

/// Determinant over any commutative ring by expansion along rows with
/// memoized column subsets, `O(2ⁿ·n)`.
pub fn determinant<T: Scalar>(m: &Matrix<T>) -> T {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return T::one();
    }
    assert!(n <= 20, "subset expansion limited to n ≤ 20");
    let mut dp = vec![T::zero(); 1 << n];
    dp[0] = T::one();
    for mask in 1usize..(1 << n) {
        let r = mask.count_ones() as usize - 1;
        let mut acc = T::zero();
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let rest = mask & !(1 << j);
            if dp[rest].is_zero() || m[(r, j)].is_zero() {
                continue;
            }
            let above = (mask >> (j + 1)).count_ones();
            let term = m[(r, j)].times(&dp[rest]);
            acc = if above % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
        }
        dp[mask] = acc;
    }
    dp[(1 << n) - 1].clone()
}

/// Minimal polynomial of a square matrix, found as the first linear
/// dependency among its powers.
pub fn minimal_polynomial(m: &Mat) -> Poly {
    assert!(m.is_square());
    let n = m.rows();
    let mut powers: Vec<Vec<Rational>> = vec![Mat::identity(n).flatten()];
    let mut cur = Mat::identity(n);
    loop {
        cur = cur.mul(m);
        let target = cur.flatten();
        let a = Mat::from_columns(&powers, n * n);
        if let Some(x) = solve(&a, &target) {
            let mut c: Vec<Rational> = x.into_iter().map(|v| -v).collect();
            c.push(Rational::one());
            return Poly::new(c);
        }
        powers.push(target);
    }
}
