//! Factorization over ℚ: squarefree decomposition, factorization modulo a
//! small prime (distinct-degree then Cantor–Zassenhaus), Hensel lifting past a
//! Mignotte bound, and Zassenhaus subset recombination.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{poly_gcd, Poly, Rational};
use crate::{Error, Result};

/// Monic irreducible factors with multiplicities, sorted by degree then
/// coefficients. The product of `factor^mult` times the leading coefficient
/// of `f` is `f`.
pub fn factor_rational(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (g, mult) in squarefree_decomposition(&f.monic()) {
        for h in factor_squarefree(&g) {
            out.push((h, mult));
        }
    }
    out.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs(), a.1).cmp(&(b.0.degree(), b.0.coeffs(), b.1))
    });
    Ok(out)
}

/// Yun's algorithm on a monic polynomial.
fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let a = poly_gcd(f, &df);
    let mut b = f.exact_div(&a).expect("gcd divides");
    let c = df.exact_div(&a).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let ai = poly_gcd(&b, &d);
        b = b.exact_div(&ai).expect("gcd divides");
        let c = d.exact_div(&ai).expect("gcd divides");
        d = &c - &b.derivative();
        if ai.degree().unwrap_or(0) > 0 {
            out.push((ai, i));
        }
        i += 1;
    }
    out
}

fn factor_squarefree(g: &Poly) -> Vec<Poly> {
    match g.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![g.monic()],
        _ => {}
    }
    let big = to_primitive_integer(g);
    let mut factors: Vec<Poly> = zassenhaus(&big).iter().map(|h| from_integer(h).monic()).collect();
    factors.sort_by(|a, b| (a.degree(), a.coeffs()).cmp(&(b.degree(), b.coeffs())));
    factors
}

type ZPoly = Vec<BigInt>;

fn to_primitive_integer(g: &Poly) -> ZPoly {
    let l = g
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
    let mut v: ZPoly = g
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_one() {
        for c in v.iter_mut() {
            *c /= &content;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

fn from_integer(v: &[BigInt]) -> Poly {
    Poly::new(v.iter().map(|c| Rational::from_bigint(c.clone())).collect())
}

fn primitive_part(v: &[BigInt]) -> ZPoly {
    to_primitive_integer(&from_integer(v))
}

const PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

/// Full factorization of a primitive squarefree integer polynomial of degree ≥ 2.
fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    let lc = f[n].clone();
    let (p, fp) = PRIMES
        .iter()
        .find_map(|&p| {
            if (&lc % p).is_zero() {
                return None;
            }
            let fp = fp::monic(&fp::reduce(f, p), p);
            let g = fp::gcd(&fp, &fp::derivative(&fp, p), p);
            (g.len() == 1).then_some((p, fp))
        })
        .expect("some small prime keeps the polynomial squarefree");

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d ^ p);
    let mut modular = Vec::new();
    for (g, d) in fp::distinct_degree(&fp, p) {
        fp::equal_degree(&g, d, p, &mut rng, &mut modular);
    }
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let bound = lc.abs() * (BigInt::one() << n) * (norm_sq.sqrt() + 1u32);
    let limit = bound * 2u32 + 1u32;
    let mut k = 1u32;
    let mut modulus = BigInt::from(p);
    while modulus < limit {
        modulus *= p;
        k += 1;
    }
    let lifted = hensel_lift(f, &modular, p, k);
    recombine(f, lifted, &modulus)
}

fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2u32 > *m {
        r - m
    } else {
        r
    }
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    v
}

fn zreduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut v: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn to_z(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn zero_padded_sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()
        })
        .collect()
}

/// Lifts a factorization `f ≡ lc·∏ gᵢ (mod p)` with monic coprime `gᵢ` to
/// monic factors modulo `p^k`, one factor at a time.
fn hensel_lift(f: &ZPoly, factors: &[Vec<u64>], p: u64, k: u32) -> Vec<ZPoly> {
    let pk = BigInt::from(p).pow(k);
    let mut cur = zreduce(f, &pk);
    let mut out = Vec::new();
    for i in 0..factors.len() - 1 {
        let g0 = &factors[i];
        let lcp = (cur.last().unwrap() % p).to_u64().unwrap();
        let rest = factors[i + 1..]
            .iter()
            .fold(vec![lcp], |acc, h| fp::mul(&acc, h, p));
        let (g, h) = lift_pair(&cur, g0, &rest, p, k);
        out.push(g);
        cur = h;
    }
    let inv = cur.last().unwrap().modinv(&pk).expect("leading coefficient is a unit");
    out.push(zreduce(&cur.iter().map(|c| c * &inv).collect::<Vec<_>>(), &pk));
    out
}

/// Linear Hensel lifting of `f ≡ g·h (mod p)`, `g` monic, to `p^k`.
fn lift_pair(f: &ZPoly, g0: &[u64], h0: &[u64], p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (gcd, s, t) = fp::xgcd(g0, h0, p);
    debug_assert_eq!(gcd, vec![1]);
    let mut g = to_z(g0);
    let mut h = to_z(h0);
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    for _ in 1..k {
        let diff = zero_padded_sub(f, &zmul(&g, &h));
        let e: Vec<u64> = diff
            .iter()
            .map(|c| {
                debug_assert!((c % &m).is_zero());
                (c / &m).mod_floor(&pb).to_u64().unwrap()
            })
            .collect();
        let e = fp::trim(e);
        let te = fp::mul(&t, &e, p);
        let (quo, tau) = fp::div_rem(&te, g0, p);
        let sigma = fp::add(&fp::mul(&s, &e, p), &fp::mul(h0, &quo, p), p);
        for (i, c) in tau.iter().enumerate() {
            g[i] += &m * c;
        }
        if h.len() < sigma.len() {
            h.resize(sigma.len(), BigInt::zero());
        }
        for (i, c) in sigma.iter().enumerate() {
            h[i] += &m * c;
        }
        m *= p;
    }
    (zreduce(&g, &m), zreduce(&h, &m))
}

fn recombine(f: &ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let lc = rest.last().unwrap().clone();
            let prod = idx
                .iter()
                .fold(vec![lc], |acc, &i| zreduce(&zmul(&acc, &lifted[i]), modulus));
            let cand: ZPoly = prod.iter().map(|c| sym_mod(c, modulus)).collect();
            let cand = primitive_part(&cand);
            if let Some(q) = from_integer(&rest).exact_div(&from_integer(&cand)) {
                out.push(cand);
                rest = to_primitive_integer(&q);
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
            if !next_combination(&mut idx, lifted.len()) {
                break;
            }
        }
        size += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Dense polynomials over 𝔽_p, lowest degree first, no trailing zeros.
mod fp {
    use super::*;

    pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn reduce(f: &[BigInt], p: u64) -> Vec<u64> {
        let pb = BigInt::from(p);
        trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
    }

    fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % p;
            }
            a = a * a % p;
            e >>= 1;
        }
        r
    }

    pub fn monic(f: &[u64], p: u64) -> Vec<u64> {
        match f.last() {
            None => Vec::new(),
            Some(&lc) => {
                let i = inv(lc, p);
                f.iter().map(|c| c * i % p).collect()
            }
        }
    }

    pub fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        )
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        )
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = (v[i + j] + x * y) % p;
            }
        }
        trim(v)
    }

    pub fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let db = b.len() - 1;
        if a.len() <= db {
            return (Vec::new(), a.to_vec());
        }
        let il = inv(b[db], p);
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db] * il % p;
            if c == 0 {
                continue;
            }
            for (j, &bc) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * bc % p) % p;
            }
            q[k] = c;
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        div_rem(a, b, p).1
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = std::mem::replace(&mut b, r);
        }
        monic(&a, p)
    }

    /// Monic gcd with Bézout coefficients.
    pub fn xgcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = div_rem(&r0, &r1, p);
            r0 = std::mem::replace(&mut r1, r);
            let s = sub(&s0, &mul(&q, &s1, p), p);
            s0 = std::mem::replace(&mut s1, s);
            let t = sub(&t0, &mul(&q, &t1, p), p);
            t0 = std::mem::replace(&mut t1, t);
        }
        let i = inv(*r0.last().unwrap(), p);
        let sc = |v: &[u64]| trim(v.iter().map(|c| c * i % p).collect());
        (sc(&r0), sc(&s0), sc(&t0))
    }

    pub fn derivative(f: &[u64], p: u64) -> Vec<u64> {
        trim(
            f.iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| (k as u64 % p) * c % p)
                .collect(),
        )
    }

    fn powmod(base: &[u64], exp: &BigUint, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let base = rem(base, m, p);
        for i in (0..exp.bits()).rev() {
            acc = rem(&mul(&acc, &acc, p), m, p);
            if exp.bit(i) {
                acc = rem(&mul(&acc, &base, p), m, p);
            }
        }
        acc
    }

    /// Splits a monic squarefree `f` into products of irreducibles of equal degree.
    pub fn distinct_degree(f: &[u64], p: u64) -> Vec<(Vec<u64>, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x = vec![0u64, 1];
        let mut h = rem(&x, &f, p);
        let pe = BigUint::from(p);
        let mut d = 1;
        while f.len() > 1 {
            if f.len() - 1 < 2 * d {
                let deg = f.len() - 1;
                out.push((f, deg));
                break;
            }
            h = powmod(&h, &pe, &f, p);
            let g = gcd(&sub(&h, &x, p), &f, p);
            if g.len() > 1 {
                f = div_rem(&f, &g, p).0;
                h = rem(&h, &f, p);
                out.push((g, d));
            }
            d += 1;
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a product of degree-`d` irreducibles.
    pub fn equal_degree(f: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Vec<u64>>) {
        let n = f.len() - 1;
        if n == d {
            out.push(f.to_vec());
            return;
        }
        let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a = trim((0..n).map(|_| rng.random_range(0..p)).collect());
            if a.len() < 2 {
                continue;
            }
            let mut g = gcd(&a, f, p);
            if g.len() == 1 {
                let b = sub(&powmod(&a, &exp, f, p), &[1], p);
                g = gcd(&b, f, p);
            }
            if g.len() > 1 && g.len() < f.len() {
                let other = div_rem(f, &g, p).0;
                equal_degree(&g, d, p, rng, out);
                equal_degree(&monic(&other, p), d, p, rng, out);
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};
    use proptest::prelude::*;

    fn expand(lc: Rational, fs: &[(Poly, usize)]) -> Poly {
        fs.iter()
            .fold(Poly::constant(lc), |acc, (f, m)| &acc * &f.pow(*m as u32))
    }

    /// No rational root, by the rational root test on the primitive form.
    fn no_rational_root(f: &Poly) -> bool {
        let z = to_primitive_integer(f);
        let a0 = z[0].abs();
        let an = z.last().unwrap().abs();
        if a0.is_zero() {
            return false;
        }
        let divisors = |n: &BigInt| -> Vec<i64> {
            let n = n.to_i64().unwrap();
            (1..=n).filter(|d| n % d == 0).collect()
        };
        for num in divisors(&a0) {
            for den in divisors(&an) {
                for s in [1, -1] {
                    if f.eval(&q(s * num, den)).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn cube_minus_one() {
        let f = Poly::from_i64(&[-1, 0, 0, 1]);
        let fs = factor_rational(&f).unwrap();
        assert_eq!(
            fs,
            vec![(Poly::from_i64(&[-1, 1]), 1), (Poly::from_i64(&[1, 1, 1]), 1)]
        );
        assert_eq!(expand(qi(1), &fs), f);
    }

    #[test]
    fn monomial_square() {
        let fs = factor_rational(&Poly::from_i64(&[0, 0, 1])).unwrap();
        assert_eq!(fs, vec![(Poly::x(), 2)]);
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(factor_rational(&Poly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn x_pow_n_minus_one_counts_divisors() {
        for n in 1..=24usize {
            let mut c = vec![0i64; n + 1];
            c[0] = -1;
            c[n] = 1;
            let f = Poly::from_i64(&c);
            let fs = factor_rational(&f).unwrap();
            let divisors = (1..=n).filter(|d| n % d == 0).count();
            assert_eq!(fs.len(), divisors, "n = {n}");
            assert_eq!(expand(qi(1), &fs), f);
        }
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // x⁴ − 10x² + 1 is irreducible over ℚ but splits modulo every prime.
        let f = Poly::from_i64(&[1, 0, -10, 0, 1]);
        let fs = factor_rational(&f).unwrap();
        assert_eq!(fs, vec![(f, 1)]);
    }

    #[test]
    fn non_monic_with_multiplicities() {
        // 6 (x − 1/2)^2 (x² + 2)^3 (x + 3)
        let a = Poly::new(vec![q(-1, 2), qi(1)]);
        let b = Poly::from_i64(&[2, 0, 1]);
        let c = Poly::from_i64(&[3, 1]);
        let f = &(&(&a.pow(2) * &b.pow(3)) * &c) * &Poly::constant(qi(6));
        let fs = factor_rational(&f).unwrap();
        assert_eq!(fs, vec![(a, 2), (c, 1), (b, 3)]);
        assert_eq!(expand(qi(6), &fs), f);
    }

    #[test]
    fn cyclotomic_twelve_irreducible() {
        let f = Poly::from_i64(&[1, 0, -1, 0, 1]);
        assert_eq!(factor_rational(&f).unwrap(), vec![(f, 1)]);
    }

    fn arb_small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-5i64..=5, 1..5).prop_map(|v| Poly::from_i64(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn products_reassemble(parts in prop::collection::vec(arb_small_poly(), 1..4)) {
            let f = parts.iter().fold(Poly::one(), |acc, p| &acc * p);
            prop_assume!(!f.is_zero() && f.degree().unwrap() > 0);
            let fs = factor_rational(&f).unwrap();
            prop_assert_eq!(expand(f.leading(), &fs), f);
            for (g, _) in &fs {
                prop_assert!(g.is_monic());
                let d = g.degree().unwrap();
                if (2..=3).contains(&d) {
                    prop_assert!(no_rational_root(g));
                }
            }
        }
    }
}
