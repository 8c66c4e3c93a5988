//! Factorization over the integers: modular factorization (Cantor–Zassenhaus),
//! Hensel lifting, and subset recombination.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::IntPoly;

/// Dense polynomial over `Z/p`, ascending, no trailing zeros.
type Fp = Vec<u64>;

#[derive(Clone, Copy, Debug)]
struct Field {
    p: u64,
}

impl Field {
    fn trim(mut a: Fp) -> Fp {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn reduce(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    fn from_int(&self, f: &IntPoly) -> Fp {
        Self::trim(f.coeffs_ascending().iter().map(|c| self.reduce(c)).collect())
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: u64) -> u64 {
        let mut r = 1u64;
        let mut b = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mulm(r, b);
            }
            b = self.mulm(b, b);
            e >>= 1;
        }
        r
    }

    fn add(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        Self::trim(
            (0..n)
                .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % self.p)
                .collect(),
        )
    }

    fn sub(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        Self::trim(
            (0..n)
                .map(|i| (a.get(i).unwrap_or(&0) + self.p - b.get(i).unwrap_or(&0)) % self.p)
                .collect(),
        )
    }

    fn mul(&self, a: &Fp, b: &Fp) -> Fp {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(out)
    }

    fn scale(&self, a: &Fp, c: u64) -> Fp {
        Self::trim(a.iter().map(|x| self.mulm(*x, c)).collect())
    }

    fn monic(&self, a: &Fp) -> Fp {
        match a.last() {
            Some(&lc) => self.scale(a, self.inv(lc)),
            None => Vec::new(),
        }
    }

    fn divrem(&self, a: &Fp, b: &Fp) -> (Fp, Fp) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(*b.last().unwrap());
        let mut r = a.clone();
        let db = b.len() - 1;
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mulm(r[k + db], inv);
            q[k] = c;
            if c != 0 {
                for (j, bj) in b.iter().enumerate() {
                    r[k + j] = (r[k + j] + self.p - self.mulm(c, *bj)) % self.p;
                }
            }
        }
        r.truncate(db);
        (Self::trim(q), Self::trim(r))
    }

    fn rem(&self, a: &Fp, b: &Fp) -> Fp {
        self.divrem(a, b).1
    }

    fn gcd(&self, a: &Fp, b: &Fp) -> Fp {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(s, t)` with `s a + t b = 1`, assuming `gcd(a, b) = 1`.
    fn xgcd(&self, a: &Fp, b: &Fp) -> (Fp, Fp) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        debug_assert_eq!(r0.len(), 1, "xgcd of non-coprime polynomials");
        let inv = self.inv(r0[0]);
        (self.scale(&s0, inv), self.scale(&t0, inv))
    }

    fn powmod(&self, a: &Fp, e: &BigUint, m: &Fp) -> Fp {
        let mut result = vec![1u64];
        let base = self.rem(a, m);
        for i in (0..e.bits()).rev() {
            result = self.rem(&self.mul(&result, &result), m);
            if e.bit(i) {
                result = self.rem(&self.mul(&result, &base), m);
            }
        }
        result
    }

    fn derivative(&self, a: &Fp) -> Fp {
        Self::trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.mulm(*c, i as u64 % self.p))
                .collect(),
        )
    }

    /// Irreducible monic factors of a monic squarefree polynomial.
    fn factor_squarefree(&self, f: &Fp, rng: &mut ChaCha8Rng) -> Vec<Fp> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let p_big = BigUint::from(self.p);
        let mut d = 1;
        while f.len() - 1 >= 2 * d {
            h = self.powmod(&h, &p_big, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if g.len() > 1 {
                self.equal_degree(&g, d, rng, &mut out);
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
            }
            d += 1;
        }
        if f.len() > 1 {
            out.push(self.monic(&f));
        }
        out
    }

    fn equal_degree(&self, g: &Fp, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Fp>) {
        let n = g.len() - 1;
        if n == d {
            out.push(g.clone());
            return;
        }
        let e = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: Fp = Self::trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.powmod(&a, &e, g), &vec![1u64]);
            let u = self.gcd(&b, g);
            if u.len() > 1 && u.len() < g.len() {
                let v = self.divrem(g, &u).0;
                self.equal_degree(&u, d, rng, out);
                self.equal_degree(&self.monic(&v), d, rng, out);
                return;
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial over `Z/m` with `m = p^a`, nonnegative representatives.
fn mod_big(f: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = f.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn mul_big(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    mod_big(&out, m)
}

fn to_big(a: &Fp) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn add_big(a: &[BigInt], b: &[BigInt], scale: &BigInt, m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let v: Vec<BigInt> = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_default() + scale * b.get(i).cloned().unwrap_or_default()
        })
        .collect();
    mod_big(&v, m)
}

/// Lift `f = g h (mod p)` with `g` monic to a factorization modulo `p^a`.
/// `f` is given modulo `p^a`.
fn hensel_two(
    field: &Field,
    f: &[BigInt],
    g: &Fp,
    h: &Fp,
    a: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let p = BigInt::from(field.p);
    let (s, t) = field.xgcd(g, h);
    let mut big_g = to_big(g);
    let mut big_h = to_big(h);
    let mut pk = p.clone();
    for _ in 1..a {
        let next = &pk * &p;
        let prod = mul_big(&big_g, &big_h, &next);
        let diff = add_big(f, &prod, &BigInt::from(-1), &next);
        // diff is divisible by pk
        let e: Fp = Field::trim(diff.iter().map(|c| field.reduce(&(c / &pk))).collect());
        let (q, r) = field.divrem(&field.mul(&e, &t), g);
        let dh = field.add(&field.mul(&e, &s), &field.mul(&q, h));
        big_g = add_big(&big_g, &to_big(&r), &pk, &next);
        big_h = add_big(&big_h, &to_big(&dh), &pk, &next);
        pk = next;
    }
    (big_g, big_h)
}

/// Lift monic modular factors of `f` (with `f = lc * prod factors mod p`)
/// to monic factors modulo `p^a`.
fn hensel_multi(field: &Field, f: &[BigInt], factors: &[Fp], a: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        let m = BigInt::from(field.p).pow(a);
        let lc = f.last().cloned().unwrap();
        let inv = lc.modinv(&m).expect("leading coefficient invertible");
        return vec![mod_big(&f.iter().map(|c| c * &inv).collect::<Vec<_>>(), &m)];
    }
    let mid = factors.len() / 2;
    let lc = field.reduce(f.last().unwrap());
    let g = factors[..mid]
        .iter()
        .fold(vec![1u64], |acc, x| field.mul(&acc, x));
    let h = factors[mid..]
        .iter()
        .fold(vec![lc], |acc, x| field.mul(&acc, x));
    let (big_g, big_h) = hensel_two(field, f, &g, &h, a);
    let mut out = hensel_multi(field, &big_g, &factors[..mid], a);
    out.extend(hensel_multi(field, &big_h, &factors[mid..], a));
    out
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Irreducible factors of a primitive squarefree polynomial of positive
/// degree with nonzero constant term.
fn zassenhaus(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.primitive_part()];
    }
    let lc = f.leading_coeff();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    // choose a good prime: fewest modular factors among a few candidates
    let mut best: Option<(Field, Vec<Fp>)> = None;
    let mut candidate = (1u64 << 31) - 1;
    let mut tried = 0;
    while tried < 5 {
        if is_prime(candidate) && !(&lc % candidate).is_zero() {
            let field = Field { p: candidate };
            let fp = field.from_int(f);
            let g = field.gcd(&fp, &field.derivative(&fp));
            if g.len() == 1 {
                tried += 1;
                let factors = field.factor_squarefree(&field.monic(&fp), &mut rng);
                if factors.len() == 1 {
                    return vec![f.primitive_part()];
                }
                if best.as_ref().map_or(true, |b| factors.len() < b.1.len()) {
                    best = Some((field, factors));
                }
            }
        }
        candidate -= 2;
    }
    let (field, modular) = best.unwrap();

    let norm2: BigInt = f.coeffs_ascending().iter().map(|c| c * c).sum();
    let norm = BigInt::from(norm2.to_biguint().unwrap().sqrt()) + 1;
    let bound = lc.abs() * (BigInt::one() << n) * norm * 2;
    let p = BigInt::from(field.p);
    let mut a = 1u32;
    let mut modulus = p.clone();
    while modulus <= bound {
        modulus *= &p;
        a += 1;
    }
    let fcoeffs: Vec<BigInt> = mod_big(f.coeffs_ascending(), &modulus);
    let mut lifted = hensel_multi(&field, &fcoeffs, &modular, a);

    let mut result = Vec::new();
    let mut rest = f.clone();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        for subset in combinations(lifted.len(), size) {
            let rest_lc = rest.leading_coeff();
            let mut prod = vec![rest_lc.mod_floor(&modulus)];
            for &i in &subset {
                prod = mul_big(&prod, &lifted[i], &modulus);
            }
            let cand = IntPoly::from_ascending(prod.iter().map(|c| symmetric(c, &modulus)).collect())
                .primitive_part();
            if let Ok(Some(q)) = rest.checked_div(&cand) {
                result.push(cand);
                rest = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, x)| x)
                    .collect();
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    result.push(rest.primitive_part());
    result
}

/// Irreducible factorization over `Q` of the primitive part of `p`:
/// primitive factors with positive leading coefficient and multiplicities,
/// sorted by (degree, coefficients).
pub fn factor(p: &IntPoly) -> Vec<(IntPoly, usize)> {
    let mut out = Vec::new();
    for (sq, mult) in p.squarefree_decomposition() {
        let mut q = sq;
        if q.constant_term().is_zero() {
            out.push((IntPoly::x(), mult));
            q = q.exact_div(&IntPoly::x()).primitive_part();
        }
        if q.is_constant() {
            continue;
        }
        for g in zassenhaus(&q) {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.deg()
            .cmp(&b.0.deg())
            .then_with(|| a.0.coeffs_descending().cmp(&b.0.coeffs_descending()))
    });
    out
}

/// Distinct irreducible factors (multiplicities dropped).
pub fn irreducible_factors(p: &IntPoly) -> Vec<IntPoly> {
    factor(p).into_iter().map(|(g, _)| g).collect()
}

/// Irreducibility over `Q` (degree at least one).
pub fn is_irreducible(p: &IntPoly) -> bool {
    if p.is_constant() {
        return false;
    }
    let f = factor(p);
    f.len() == 1 && f[0].1 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;

    fn product(fs: &[(IntPoly, usize)]) -> IntPoly {
        fs.iter()
            .fold(IntPoly::one(), |acc, (g, m)| &acc * &g.pow(*m))
    }

    #[test]
    fn factors_small_products() {
        let p = &poly(&[1, -1, -1]) * &poly(&[1, 1, -1]);
        assert_eq!(p, poly(&[1, 0, -3, 0, 1]));
        let f = factor(&p);
        assert_eq!(f, vec![(poly(&[1, -1, -1]), 1), (poly(&[1, 1, -1]), 1)]);
    }

    #[test]
    fn irreducible_examples() {
        assert!(is_irreducible(&poly(&[1, -1, -1])));
        assert!(is_irreducible(&poly(&[1, 0, -1, -1])));
        assert!(is_irreducible(&poly(&[1, -4, -2, 4, -1])));
        assert!(is_irreducible(&poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])));
        assert!(!is_irreducible(&poly(&[1, 0, -1])));
        assert!(!is_irreducible(&poly(&[1, 0, 0, 0, 4]))); // (t^2+2t+2)(t^2-2t+2)
        assert!(is_irreducible(&poly(&[3, 0, -2])));
    }

    #[test]
    fn swinnerton_dyer_like() {
        // t^4 - 10 t^2 + 1 is irreducible but splits modulo every prime
        assert!(is_irreducible(&poly(&[1, 0, -10, 0, 1])));
    }

    #[test]
    fn non_monic_and_repeated() {
        let a = poly(&[2, 1]);
        let b = poly(&[3, 0, -5]);
        let c = poly(&[1, 1, 1]);
        let p = &(&a.pow(2) * &b) * &(&c * &IntPoly::x());
        let f = factor(&p);
        assert_eq!(product(&f).primitive_part(), p.primitive_part());
        assert_eq!(f.len(), 4);
        assert!(f.contains(&(a, 2)));
    }

    #[test]
    fn combinations_enumerates() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(3, 1), vec![vec![0], vec![1], vec![2]]);
    }
}
