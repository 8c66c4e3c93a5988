use num_traits::Zero;

use super::poly::IntPoly;
use super::resultant::{resultant_eliminate, BivariatePoly};
use crate::error::{Error, Result};

/// Polynomial whose roots are `z + 1/z` over the roots `z` of `p`, with
/// multiplicity: `Res_z(p(z), z^2 - s z + 1)`, primitive with positive leading
/// coefficient. Degree equals `deg p`.
pub fn trace_transform(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() || p.constant_term().is_zero() {
        return Err(Error::InvalidArgument(
            "trace transform needs a nonzero constant term".into(),
        ));
    }
    if p.is_constant() {
        return Ok(IntPoly::one());
    }
    let q = BivariatePoly::from_terms(&[(2, 0, 1), (1, 1, -1), (0, 0, 1)]);
    Ok(resultant_eliminate(p, &q)?.primitive_part())
}

/// Squarefree part of [`trace_transform`].
pub fn trace_transform_squarefree(p: &IntPoly) -> Result<IntPoly> {
    Ok(trace_transform(p)?.squarefree_part())
}

/// `t^deg(f) f(t + 1/t)`, a reciprocal polynomial of degree `2 deg f`.
pub fn untrace_transform(f: &IntPoly) -> IntPoly {
    let n = match f.degree() {
        Some(n) => n,
        None => return IntPoly::zero(),
    };
    let t2p1 = IntPoly::from_descending([1, 0, 1]);
    let mut acc = IntPoly::zero();
    let mut pow = IntPoly::one();
    for i in 0..=n {
        let term = &pow * &IntPoly::monomial(f.coeff(i), n - i);
        acc = &acc + &term;
        pow = &pow * &t2p1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;

    #[test]
    fn trace_examples() {
        assert_eq!(trace_transform(&poly(&[1, -1, -1])).unwrap(), poly(&[1, 0, -5]));
        let t = trace_transform(&poly(&[1, -3, 1])).unwrap();
        assert_eq!(t, poly(&[1, -6, 9]));
        assert_eq!(t.squarefree_part(), poly(&[1, -3]));
        let salem = trace_transform_squarefree(&poly(&[1, -1, -1, -1, 1])).unwrap();
        assert_eq!(salem, poly(&[1, -1, -3]));
        assert!(trace_transform(&poly(&[1, 1, 0])).is_err());
    }

    #[test]
    fn untrace_examples() {
        assert_eq!(untrace_transform(&poly(&[1, -3])), poly(&[1, -3, 1]));
        assert_eq!(untrace_transform(&poly(&[1, -2, -1])), poly(&[1, -2, 1, -2, 1]));
        assert_eq!(untrace_transform(&poly(&[1, 0, -5])), poly(&[1, 0, -3, 0, 1]));
        assert_eq!(untrace_transform(&poly(&[1, -1, -3])), poly(&[1, -1, -1, -1, 1]));
    }
}
