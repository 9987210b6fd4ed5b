use crate::exact::Rational;
use crate::{Error, Result};

use super::Mat;

/// Sylvester signature of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Signature { positive, negative, zero }
    }
}

/// Exact congruence diagonalization: returns `(P, d)` with `Pᵀ·S·P = diag(d)`.
///
/// A zero diagonal pivot with a nonzero off-diagonal entry is handled by first
/// adding row/column `j` to row/column `i`.
pub fn diagonalize_congruence(s: &Mat) -> Result<(Mat, Vec<Rational>)> {
    if !s.is_symmetric() {
        return Err(Error::InvalidInput("form is not symmetric".into()));
    }
    let n = s.rows();
    let mut m = s.clone();
    let mut p = Mat::identity(n);
    let add_col = |m: &mut Mat, dst: usize, src: usize, c: &Rational| {
        for r in 0..m.rows() {
            let v = &m[(r, src)] * c;
            if !v.is_zero() {
                m[(r, dst)] += v;
            }
        }
    };
    let add_row = |m: &mut Mat, dst: usize, src: usize, c: &Rational| {
        for k in 0..m.cols() {
            let v = &m[(src, k)] * c;
            if !v.is_zero() {
                m[(dst, k)] += v;
            }
        }
    };
    let swap = |m: &mut Mat, p: &mut Mat, a: usize, b: usize| {
        m.swap_rows(a, b);
        m.swap_cols(a, b);
        p.swap_cols(a, b);
    };
    for k in 0..n {
        if m[(k, k)].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !m[(i, i)].is_zero()) {
                swap(&mut m, &mut p, k, i);
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .find(|&(i, j)| i != j && !m[(i, j)].is_zero())
            {
                let one = Rational::one();
                add_row(&mut m, i, j, &one);
                add_col(&mut m, i, j, &one);
                add_col(&mut p, i, j, &one);
                swap(&mut m, &mut p, k, i);
            } else {
                break;
            }
        }
        let inv = m[(k, k)].recip();
        for j in k + 1..n {
            if m[(j, k)].is_zero() {
                continue;
            }
            let c = -(&m[(j, k)] * &inv);
            add_row(&mut m, j, k, &c);
            add_col(&mut m, j, k, &c);
            add_col(&mut p, j, k, &c);
        }
    }
    let d = (0..n).map(|i| m[(i, i)].clone()).collect();
    Ok((p, d))
}

/// Signature `(positive, negative, zero)` of a symmetric matrix.
pub fn signature(sym: &Mat) -> Result<Signature> {
    let (_, d) = diagonalize_congruence(sym)?;
    Ok(Signature {
        positive: d.iter().filter(|x| x.is_positive()).count(),
        negative: d.iter().filter(|x| x.is_negative()).count(),
        zero: d.iter().filter(|x| x.is_zero()).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;
    use crate::linalg::{det, Matrix};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let s = Mat::diag(&[qi(1), qi(1), qi(-1)]);
        assert_eq!(signature(&s).unwrap(), Signature::new(2, 1, 0));
        let h = Mat::from_i64(2, 2, &[0, 1, 1, 0]);
        assert_eq!(signature(&h).unwrap(), Signature::new(1, 1, 0));
        assert!(signature(&Mat::from_i64(2, 2, &[0, 1, 0, 0])).is_err());
        let z = Mat::from_i64(3, 3, &[0, 0, 0, 0, 0, 2, 0, 2, 0]);
        assert_eq!(signature(&z).unwrap(), Signature::new(1, 1, 1));
    }

    fn arb_sym(n: usize) -> impl Strategy<Value = Mat> {
        prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
            let a = Mat::from_i64(n, n, &v);
            a.add(&a.transpose())
        })
    }

    fn arb_invertible(n: usize) -> impl Strategy<Value = Mat> {
        prop::collection::vec(-3i64..=3, n * n)
            .prop_map(move |v| Mat::from_i64(n, n, &v))
            .prop_filter("invertible", |m| !det(m).is_zero())
    }

    proptest! {
        #[test]
        fn congruence_invariance(s in arb_sym(5), p in arb_invertible(5)) {
            let t = p.transpose().mul(&s).mul(&p);
            prop_assert_eq!(signature(&s).unwrap(), signature(&t).unwrap());
        }

        #[test]
        fn diagonalization_is_exact(s in arb_sym(6)) {
            let (p, d) = diagonalize_congruence(&s).unwrap();
            prop_assert_eq!(p.transpose().mul(&s).mul(&p), Matrix::diag(&d));
            prop_assert!(!det(&p).is_zero());
        }
    }
}
