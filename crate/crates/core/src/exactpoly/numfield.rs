//! Real number fields `Q(mu) = Q[x]/(g)` with a fixed real embedding.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::to_text;
use super::resultant::BivariatePoly;
use super::{is_irreducible, resultant_eliminate, AlgebraicReal, IntPoly};
use crate::error::{Error, Result};

/// Element of a number field: a rational polynomial in the generator of
/// degree below the field degree, ascending coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    coeffs: Vec<BigRational>,
}

impl FieldElem {
    fn trimmed(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FieldElem { coeffs }
    }

    pub fn zero() -> Self {
        FieldElem { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// `(H, d)` with `self = H / d`, `H` integral and `d > 0`.
    pub fn integral_numerator(&self) -> (IntPoly, BigInt) {
        let d = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let h = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(d.clone())).to_integer())
            .collect();
        (IntPoly::from_ascending(h), d)
    }

    /// Text in the generator `name`, e.g. `1 - 2*r^2`.
    pub fn to_text(&self, name: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => name.to_string(),
                _ => format!("{name}^{i}"),
            };
            if i == 0 {
                out.push_str(&to_text(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{mono}", to_text(&a)));
            }
        }
        out
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

/// `Q(mu)` for a real root `mu` of an irreducible polynomial.
#[derive(Clone, Debug)]
pub struct NumberField {
    modulus: IntPoly,
    root: AlgebraicReal,
}

fn rat_poly(p: &IntPoly) -> Vec<BigRational> {
    p.coeffs_ascending().iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn sub_poly(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    let mut out: Vec<BigRational> =
        (0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn mul_poly(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Division with remainder over `Q`; `b` must be nonzero.
fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / lb;
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        q[k] = c;
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    (q, r)
}

impl NumberField {
    /// Field generated by the algebraic real `mu`.
    pub fn new(mu: &AlgebraicReal) -> Self {
        let root = mu.minimal();
        NumberField {
            modulus: root.poly().clone(),
            root,
        }
    }

    /// Field generated by the root of `g` isolated by `root`'s interval.
    pub fn from_poly(g: &IntPoly, root: AlgebraicReal) -> Result<Self> {
        let g = g.primitive_part();
        if !is_irreducible(&g) {
            return Err(Error::Reducible(g.to_text()));
        }
        if root.minpoly() != g {
            return Err(Error::InvalidArgument("root is not a zero of the field polynomial".into()));
        }
        Ok(Self::new(&root))
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn root(&self) -> &AlgebraicReal {
        &self.root
    }

    fn reduce(&self, p: Vec<BigRational>) -> FieldElem {
        let (_, r) = divrem(&p, &rat_poly(&self.modulus));
        FieldElem::trimmed(r)
    }

    pub fn from_rational(&self, q: BigRational) -> FieldElem {
        FieldElem::trimmed(vec![q])
    }

    pub fn from_int(&self, n: i64) -> FieldElem {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    /// The generator `mu`.
    pub fn gen(&self) -> FieldElem {
        self.reduce(vec![BigRational::zero(), BigRational::one()])
    }

    /// Element given by a rational polynomial in the generator.
    pub fn from_coeffs(&self, coeffs: Vec<BigRational>) -> FieldElem {
        self.reduce(coeffs)
    }

    /// Image of `a`, an element of another field, under the embedding that
    /// sends that field's generator to `image`.
    pub fn embed(&self, a: &FieldElem, image: &FieldElem) -> FieldElem {
        a.coeffs.iter().rev().fold(FieldElem::zero(), |acc, c| {
            self.add(&self.mul(&acc, image), &self.from_rational(c.clone()))
        })
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem::trimmed(sub_poly(&a.coeffs, &self.neg(b).coeffs))
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem::trimmed(sub_poly(&a.coeffs, &b.coeffs))
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: a.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.reduce(mul_poly(&a.coeffs, &b.coeffs))
    }

    pub fn scale(&self, a: &FieldElem, q: &BigRational) -> FieldElem {
        FieldElem::trimmed(a.coeffs.iter().map(|c| c * q).collect())
    }

    /// Inverse by the extended Euclidean algorithm modulo the field polynomial.
    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::Singular("inverse of zero in a number field".into()));
        }
        // invariant: s_i * a = r_i (mod g)
        let (mut r0, mut r1) = (rat_poly(&self.modulus), a.coeffs.clone());
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = divrem(&r0, &r1);
            let s = sub_poly(&s0, &mul_poly(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r1.is_empty() {
            return Err(Error::Invariant("field polynomial is not irreducible".into()));
        }
        let c = r1[0].recip();
        Ok(self.reduce(s1.into_iter().map(|x| x * &c).collect()))
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Sign of the element under the real embedding. Exact: a nonzero
    /// element cannot vanish at the generator, so refinement terminates.
    pub fn sign(&self, a: &FieldElem) -> i32 {
        if a.is_zero() {
            return 0;
        }
        let (h, _) = a.integral_numerator();
        let mut bits = 32;
        loop {
            let v = self.root.enclosure(bits).eval_poly(&h);
            if v.lo.is_positive() {
                return 1;
            }
            if v.hi.is_negative() {
                return -1;
            }
            bits *= 2;
        }
    }

    pub fn cmp(&self, a: &FieldElem, b: &FieldElem) -> Ordering {
        self.sign(&self.sub(a, b)).cmp(&0)
    }

    /// Closed rational enclosure of the embedded value.
    pub fn enclosure(&self, a: &FieldElem, bits: u32) -> super::RatInterval {
        let (h, d) = a.integral_numerator();
        let dr = BigRational::from_integer(d).recip();
        let mut root_bits = bits + 8;
        loop {
            let v = self.root.enclosure(root_bits).eval_poly(&h).scale(&dr);
            let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
            if v.width() < target {
                return v;
            }
            root_bits *= 2;
        }
    }

    pub fn to_f64(&self, a: &FieldElem) -> f64 {
        super::rational::to_f64(&self.enclosure(a, 64).midpoint())
    }

    /// The embedded value as an exact algebraic real.
    pub fn to_real(&self, a: &FieldElem) -> Result<AlgebraicReal> {
        if let Some(q) = a.as_rational() {
            return Ok(AlgebraicReal::from_rational(&q));
        }
        let (h, d) = a.integral_numerator();
        // Res_z(g(z), d s - h(z))
        let mut z_coeffs: Vec<IntPoly> =
            h.coeffs_ascending().iter().map(|c| IntPoly::constant(-c)).collect();
        z_coeffs[0] = &z_coeffs[0] + &IntPoly::monomial(d, 1);
        let res = resultant_eliminate(&self.modulus, &BivariatePoly::from_z_coeffs(z_coeffs))?;
        let real = AlgebraicReal::from_enclosure(&res.squarefree_part(), |bits| Ok(self.enclosure(a, bits)))?;
        Ok(real.minimal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;
    use crate::exactpoly::rational::rat;

    fn golden() -> NumberField {
        NumberField::new(&AlgebraicReal::largest_real_root(&poly(&[1, -1, -1])).unwrap())
    }

    #[test]
    fn arithmetic_in_golden_field() {
        let k = golden();
        let phi = k.gen();
        // phi^2 = phi + 1
        assert_eq!(k.mul(&phi, &phi), k.add(&phi, &k.one()));
        let inv = k.inv(&phi).unwrap();
        assert_eq!(inv, k.sub(&phi, &k.one()));
        assert_eq!(k.mul(&inv, &phi), k.one());
        assert_eq!(k.sign(&k.sub(&phi, &k.from_rational(rat(8, 5)))), 1);
        assert_eq!(k.sign(&k.sub(&phi, &k.from_rational(rat(13, 8)))), -1);
        assert_eq!(k.to_real(&k.mul(&phi, &phi)).unwrap().minpoly(), poly(&[1, -3, 1]));
        assert_eq!(k.mul(&phi, &phi).to_text("r"), "1 + r");
    }

    #[test]
    fn cubic_field_inverse() {
        let k = NumberField::new(&AlgebraicReal::largest_real_root(&poly(&[1, 0, -1, -1])).unwrap());
        let a = k.from_coeffs(vec![rat(2, 1), rat(-1, 3), rat(5, 7)]);
        assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), k.one());
        assert!(k.inv(&FieldElem::zero()).is_err());
    }
}
