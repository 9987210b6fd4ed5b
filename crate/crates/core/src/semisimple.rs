//! Primitive idempotents of commutative semisimple matrix algebras.
//!
//! Used for central idempotents of group algebras, minimal ideals of Lie
//! algebras (via the commutant of the adjoint action) and associative
//! minimal ideals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{factor_rational, Poly, Rational};
use crate::linalg::{solve, to_sparse, Echelon, Mat};
use crate::{Error, Result};

/// Minimal polynomial of `x` inside the unital algebra whose unit is `e`.
pub(crate) fn minimal_polynomial_with_unit(x: &Mat, e: &Mat) -> Poly {
    let n = x.rows();
    let mut powers = vec![e.flatten()];
    let mut cur = e.clone();
    loop {
        cur = cur.mul(x);
        let target = cur.flatten();
        let a = Mat::from_columns(&powers, n * n);
        if let Some(c) = solve(&a, &target) {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|v| -v).collect();
            coeffs.push(Rational::one());
            return Poly::new(coeffs);
        }
        powers.push(target);
    }
}

/// `p(x)` with `x⁰ = e`.
fn eval_with_unit(p: &Poly, x: &Mat, e: &Mat) -> Mat {
    let mut acc = Mat::zeros(x.rows(), x.cols());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&e.scale(c));
    }
    acc
}

/// Splits the block with unit `e` along the factorization of the minimal
/// polynomial of `x`; returns `None` when that polynomial is irreducible.
fn split_by(x: &Mat, e: &Mat) -> Result<Option<Vec<Mat>>> {
    let mu = minimal_polynomial_with_unit(x, e);
    let factors = factor_rational(&mu)?;
    if factors.iter().any(|(_, m)| *m > 1) {
        return Err(Error::Precondition(
            "algebra is not semisimple: an element has a repeated minimal-polynomial factor".into(),
        ));
    }
    if factors.len() == 1 {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(factors.len());
    for (p, _) in &factors {
        let cofactor = mu.exact_div(p).expect("factor divides");
        // u·cofactor ≡ 1 (mod p)
        let (g, u, _) = cofactor.xgcd(p);
        debug_assert!(g.degree() == Some(0));
        let poly = (&u * &cofactor).rem(&mu);
        out.push(eval_with_unit(&poly, x, e));
    }
    Ok(Some(out))
}

fn block_dim(e: &Mat, basis: &[Mat]) -> usize {
    let n = e.rows();
    let mut ech = Echelon::new(n * n);
    for c in basis {
        ech.insert(&to_sparse(e.mul(c).data()));
    }
    ech.len()
}

/// Primitive idempotents of the commutative semisimple algebra spanned by
/// `basis` (which must contain the identity in its span).
///
/// Each block is first split using the basis elements, then by seeded random
/// combinations until an element with minimal polynomial of degree equal to
/// the block dimension certifies that the block is a field.
pub fn primitive_idempotents(basis: &[Mat], seed: u64) -> Result<Vec<Mat>> {
    let Some(first) = basis.first() else {
        return Ok(Vec::new());
    };
    primitive_idempotents_with_unit(basis, &Mat::identity(first.rows()), seed)
}

/// As [`primitive_idempotents`] for an algebra whose unit is the idempotent `unit`.
pub fn primitive_idempotents_with_unit(basis: &[Mat], unit: &Mat, seed: u64) -> Result<Vec<Mat>> {
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let n = unit.rows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pending = vec![unit.clone()];
    let mut done = Vec::new();
    'blocks: while let Some(e) = pending.pop() {
        let dim = block_dim(&e, basis);
        if dim == 1 {
            done.push(e);
            continue;
        }
        for c in basis {
            let x = e.mul(c);
            if let Some(parts) = split_by(&x, &e)? {
                pending.extend(parts);
                continue 'blocks;
            }
        }
        for _ in 0..256 {
            let mut x = Mat::zeros(n, n);
            for c in basis {
                let r = Rational::from_int(rng.random_range(-3..=3));
                if !r.is_zero() {
                    x = x.add(&c.scale(&r));
                }
            }
            let x = e.mul(&x);
            let mu = minimal_polynomial_with_unit(&x, &e);
            if mu.degree() == Some(dim) && factor_rational(&mu)?.len() == 1 {
                done.push(e);
                continue 'blocks;
            }
            if let Some(parts) = split_by(&x, &e)? {
                pending.extend(parts);
                continue 'blocks;
            }
        }
        return Err(Error::Internal("idempotent splitting did not converge".into()));
    }
    done.sort_by(|a, b| b.data().cmp(a.data()));
    Ok(done)
}
