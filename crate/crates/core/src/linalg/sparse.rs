use std::collections::BTreeMap;

use crate::exact::Rational;

use super::{Mat, Subspace};

/// Sparse vector: strictly increasing indices, nonzero values.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, n: usize) -> Vec<Rational> {
    let mut d = vec![Rational::zero(); n];
    for (i, x) in v {
        d[*i] = x.clone();
    }
    d
}

/// Incrementally built row echelon basis with sparse rows.
///
/// Rows are keyed by their pivot (leading index) and scaled so the pivot
/// entry is 1. Rows are never modified after insertion, so a row handed back
/// by [`Echelon::insert`] stays a valid basis element.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    rows: BTreeMap<usize, SparseVec>,
    scratch: Vec<Rational>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon {
            ambient,
            rows: BTreeMap::new(),
            scratch: vec![Rational::zero(); ambient],
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` against the stored rows. Returns the normalized residual
    /// if it is nonzero; nothing is stored.
    fn reduce_dense(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let acc = &mut self.scratch;
        let Some(&(start, _)) = v.first() else {
            return None;
        };
        for (i, x) in v {
            acc[*i] = x.clone();
        }
        let mut lead = None;
        for i in start..self.ambient {
            if acc[i].is_zero() {
                continue;
            }
            match self.rows.get(&i) {
                Some(row) => {
                    let c = std::mem::take(&mut acc[i]);
                    for (j, x) in &row[1..] {
                        acc[*j] -= &c * x;
                    }
                }
                None => {
                    if lead.is_none() {
                        lead = Some(i);
                    }
                }
            }
        }
        let lead = lead?;
        let inv = acc[lead].recip();
        let mut out = Vec::new();
        for (i, x) in acc.iter_mut().enumerate().skip(lead) {
            if !x.is_zero() {
                out.push((i, &*x * &inv));
                *x = Rational::zero();
            }
        }
        Some(out)
    }

    /// Fully reduces `v` modulo the span; zero means `v` is in the span.
    pub fn residual(&mut self, v: &SparseVec) -> SparseVec {
        let acc = &mut self.scratch;
        for (i, x) in v {
            acc[*i] = x.clone();
        }
        let Some(&(start, _)) = v.first() else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for i in start..self.ambient {
            if acc[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut acc[i]);
            match self.rows.get(&i) {
                Some(row) => {
                    for (j, x) in &row[1..] {
                        acc[*j] -= &c * x;
                    }
                }
                None => out.push((i, c)),
            }
        }
        out
    }

    pub fn contains(&mut self, v: &SparseVec) -> bool {
        self.residual(v).is_empty()
    }

    /// Adds `v` to the span. Returns the new basis row when `v` was independent.
    pub fn insert(&mut self, v: &SparseVec) -> Option<&SparseVec> {
        let r = self.reduce_dense(v)?;
        let p = r[0].0;
        self.rows.insert(p, r);
        self.rows.get(&p)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    /// Back-substitutes to reduced row echelon form (rows keyed by pivot).
    pub fn into_rref_rows(self) -> Vec<SparseVec> {
        let ambient = self.ambient;
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut rows: Vec<SparseVec> = self.rows.into_values().collect();
        let mut acc = vec![Rational::zero(); ambient];
        for k in (0..rows.len()).rev() {
            // Rows below k are already reduced; clear their pivots from row k.
            let row = std::mem::take(&mut rows[k]);
            for (i, x) in &row {
                acc[*i] = x.clone();
            }
            for (kk, &p) in pivots.iter().enumerate().skip(k + 1) {
                if acc[p].is_zero() {
                    continue;
                }
                let c = std::mem::take(&mut acc[p]);
                for (j, x) in &rows[kk][1..] {
                    acc[*j] -= &c * x;
                }
            }
            let mut out = Vec::new();
            for (i, x) in acc.iter_mut().enumerate().skip(pivots[k]) {
                if !x.is_zero() {
                    out.push((i, std::mem::take(x)));
                }
            }
            rows[k] = out;
        }
        rows
    }

    pub fn into_subspace(self) -> Subspace {
        let n = self.ambient;
        let rows = self.into_rref_rows();
        let dense: Vec<Vec<Rational>> = rows.iter().map(|r| to_dense(r, n)).collect();
        Subspace::from_rref_unchecked(n, Mat::from_rows(&dense).reshape_empty(n))
    }

    /// Basis of the solution space of `row · x = 0` for all stored rows.
    pub fn null_space(self) -> Vec<Vec<Rational>> {
        let n = self.ambient;
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let rows = self.into_rref_rows();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..n).filter(|&f| !is_pivot[f]) {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (k, row) in rows.iter().enumerate() {
                if let Ok(pos) = row.binary_search_by_key(&f, |e| e.0) {
                    v[pivots[k]] = -&row[pos].1;
                }
            }
            out.push(v);
        }
        out
    }
}

impl Mat {
    /// A 0-row matrix keeps its column count for empty bases.
    pub(crate) fn reshape_empty(self, cols: usize) -> Mat {
        if self.rows() == 0 {
            Mat::zeros(0, cols)
        } else {
            self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;
    use crate::linalg::{kernel, Subspace};
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn matches_dense_rref(v in prop::collection::vec(-3i64..=3, 1..40), cols in 1usize..8) {
            let rows = v.len() / cols;
            prop_assume!(rows > 0);
            let m = Mat::from_i64(rows, cols, &v[..rows * cols]);
            let mut e = Echelon::new(cols);
            for i in 0..rows {
                e.insert(&to_sparse(m.row(i)));
            }
            let k: Vec<Vec<Rational>> = e.clone().null_space();
            prop_assert_eq!(Subspace::from_vectors(cols, &k), kernel(&m));
            prop_assert_eq!(e.into_subspace(), Subspace::from_matrix_rows(&m));
        }
    }

    #[test]
    fn residual_detects_membership() {
        let mut e = Echelon::new(3);
        e.insert(&to_sparse(&[qi(1), qi(2), qi(0)]));
        e.insert(&to_sparse(&[qi(0), qi(1), qi(1)]));
        assert!(e.contains(&to_sparse(&[qi(1), qi(3), qi(1)])));
        assert!(!e.contains(&to_sparse(&[qi(0), qi(0), qi(1)])));
        assert!(e.insert(&to_sparse(&[qi(2), qi(4), qi(0)])).is_none());
    }
}
