//! Exact dense linear algebra over ℚ.

mod elim;
mod forms;
mod matrix;
mod sparse;
mod subspace;

pub use elim::{det, determinant, image, inverse, kernel, minimal_polynomial, rank, rref, rref_with_pivots, solve};
pub use forms::{diagonalize_congruence, signature, Signature};
pub use matrix::{Mat, Matrix};
pub use sparse::{to_dense, to_sparse, Echelon, SparseVec};
pub use subspace::Subspace;

use crate::exact::Rational;

/// Basis of `{X : X·A = A·X for every generator A}` inside `gl(n)`.
///
/// The commutation equations are accumulated sparsely, one generator at a
/// time, and the kernel is read off the echelon form.
pub fn commutant(generators: &[Mat], n: usize) -> Vec<Mat> {
    let mut e = Echelon::new(n * n);
    for a in generators {
        assert_eq!(a.shape(), (n, n), "generator has wrong size");
        for i in 0..n {
            for j in 0..n {
                // (XA − AX)_{ij} = Σ_k X_{ik} A_{kj} − A_{ik} X_{kj}
                let mut row: Vec<(usize, Rational)> = Vec::new();
                for k in 0..n {
                    if !a[(k, j)].is_zero() {
                        row.push((i * n + k, a[(k, j)].clone()));
                    }
                    if !a[(i, k)].is_zero() {
                        row.push((k * n + j, -&a[(i, k)]));
                    }
                }
                let row = merge(row);
                if !row.is_empty() {
                    e.insert(&row);
                }
            }
        }
        if e.len() == n * n {
            break;
        }
    }
    e.null_space()
        .into_iter()
        .map(|v| Mat::from_vec(n, n, v))
        .collect()
}

/// Sorts by index and combines duplicates, dropping zeros.
pub(crate) fn merge(mut v: Vec<(usize, Rational)>) -> SparseVec {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => out.push((i, x)),
        }
        if out.last().is_some_and(|(_, y)| y.is_zero()) {
            out.pop();
        }
    }
    out
}

/// True when the span of `basis` is closed under matrix multiplication.
pub fn is_closed_under_mul(basis: &[Mat]) -> bool {
    let Some(first) = basis.first() else {
        return true;
    };
    let n = first.rows();
    let span = Subspace::from_vectors(n * n, &basis.iter().map(Mat::flatten).collect::<Vec<_>>());
    basis
        .iter()
        .all(|a| basis.iter().all(|b| span.contains(&a.mul(b).flatten())))
}

/// Span of a list of matrices as a subspace of the flattened `n²`-space.
pub fn span_of(mats: &[Mat], rows: usize, cols: usize) -> Subspace {
    let mut e = Echelon::new(rows * cols);
    for m in mats {
        e.insert(&to_sparse(m.data()));
    }
    e.into_subspace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;

    #[test]
    fn commutant_examples() {
        assert_eq!(commutant(&[], 3).len(), 9);
        let d = commutant(&[Mat::diag(&[qi(1), qi(2)])], 2);
        assert_eq!(span_of(&d, 2, 2), span_of(&[Mat::unit(2, 2, 0, 0), Mat::unit(2, 2, 1, 1)], 2, 2));
        let swap = Mat::from_i64(2, 2, &[0, 1, 1, 0]);
        let c = commutant(&[Mat::identity(2), swap.clone()], 2);
        assert_eq!(c.len(), 2);
        assert!(is_closed_under_mul(&c));
        assert!(span_of(&c, 2, 2).contains(&Mat::identity(2).flatten()));
        assert!(span_of(&c, 2, 2).contains(&swap.flatten()));
    }
}
