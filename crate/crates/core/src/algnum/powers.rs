use std::collections::BTreeMap;

use super::classify::{has_minus_inverse_symmetry, leading_root_above_one};
use crate::error::{Error, Result};
use crate::exactpoly::{is_irreducible, AlgebraicReal, IntPoly};

/// Minimal polynomial of `lambda^k` for the leading root `lambda` of `p`.
/// The degree must be preserved; a drop means `lambda` is not Perron.
pub fn minimal_poly_power(p: &IntPoly, k: u32) -> Result<IntPoly> {
    Ok(leading_power(p, k)?.minpoly())
}

/// `lambda^k` as an exact real algebraic number with irreducible minimal
/// polynomial, checking degree preservation.
pub fn leading_power(p: &IntPoly, k: u32) -> Result<AlgebraicReal> {
    if k == 0 {
        return Err(Error::InvalidArgument("power must be positive".into()));
    }
    let p = p.primitive_part();
    if !is_irreducible(&p) {
        return Err(Error::Reducible(p.to_text()));
    }
    let lambda = leading_root_above_one(&p)?;
    let power = lambda.pow(k)?.minimal();
    if power.poly().deg() != p.deg() {
        return Err(Error::Precondition(format!(
            "degree of lambda^{k} dropped from {} to {}: leading root is not Perron",
            p.deg(),
            power.poly().deg()
        )));
    }
    Ok(power)
}

/// `lambda^k + lambda^-k` with its minimal polynomial.
pub fn power_trace(p: &IntPoly, k: u32) -> Result<AlgebraicReal> {
    Ok(leading_power(p, k)?.plus_inverse()?.minimal())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityCase {
    OddDegree,
    EvenNoMinusInverse,
    EvenWithMinusInverse,
}

impl ParityCase {
    pub fn name(self) -> &'static str {
        match self {
            ParityCase::OddDegree => "odd-degree",
            ParityCase::EvenNoMinusInverse => "even-no-minus-inverse",
            ParityCase::EvenWithMinusInverse => "even-with-minus-inverse",
        }
    }
}

/// Degrees of the fields generated by `lambda^k + lambda^-k`.
#[derive(Clone, Debug)]
pub struct TraceFieldReport {
    pub k_range: u32,
    pub degree: usize,
    pub degrees: BTreeMap<u32, usize>,
    pub parity_case: ParityCase,
    /// Named degree identities and whether each holds.
    pub identities: Vec<(String, bool)>,
}

impl TraceFieldReport {
    pub fn all_identities_hold(&self) -> bool {
        self.identities.iter().all(|(_, ok)| *ok)
    }
}

pub fn trace_field_report(p: &IntPoly, k_max: u32) -> Result<TraceFieldReport> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("k_max must be positive".into()));
    }
    let p = p.primitive_part();
    let n = p.deg();
    let mut degrees = BTreeMap::new();
    for k in 1..=k_max {
        degrees.insert(k, power_trace(&p, k)?.poly().deg());
    }
    let parity_case = if n % 2 == 1 {
        ParityCase::OddDegree
    } else if has_minus_inverse_symmetry(&p) {
        ParityCase::EvenWithMinusInverse
    } else {
        ParityCase::EvenNoMinusInverse
    };
    let d1 = degrees[&1];
    let mut identities = Vec::new();
    match parity_case {
        ParityCase::OddDegree => {
            for (&k, &d) in &degrees {
                identities.push((format!("deg(k={k}) = deg(lambda) = {n}"), d == n));
            }
        }
        _ => {
            for (&k, &d) in degrees.iter().filter(|(k, _)| *k % 2 == 1) {
                identities.push((format!("deg(k={k}) = deg(k=1)"), d == d1));
            }
            if let Some(&d2) = degrees.get(&2) {
                for (&k, &d) in degrees.iter().filter(|(k, _)| *k % 2 == 0) {
                    identities.push((format!("deg(k={k}) = deg(k=2)"), d == d2));
                }
                let linked = if parity_case == ParityCase::EvenWithMinusInverse {
                    ("deg(k=1) = 2 deg(k=2)".to_string(), d1 == 2 * d2)
                } else {
                    ("deg(k=1) = deg(k=2)".to_string(), d1 == d2)
                };
                identities.push(linked);
            }
        }
    }
    Ok(TraceFieldReport {
        k_range: k_max,
        degree: n,
        degrees,
        parity_case,
        identities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;

    #[test]
    fn golden_powers() {
        assert_eq!(minimal_poly_power(&poly(&[1, -1, -1]), 1).unwrap(), poly(&[1, -1, -1]));
        assert_eq!(minimal_poly_power(&poly(&[1, -1, -1]), 2).unwrap(), poly(&[1, -3, 1]));
    }

    #[test]
    fn salem_cube() {
        let l3 = leading_power(&poly(&[1, -1, -1, -1, 1]), 3).unwrap();
        assert_eq!(l3.poly().deg(), 4);
        assert_eq!(l3.decimal(3), "5.107");
    }

    #[test]
    fn degree_drop_is_reported() {
        // sqrt(2) is not Perron: its square is rational
        assert!(matches!(
            minimal_poly_power(&poly(&[1, 0, -2]), 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn golden_trace_fields() {
        let r = trace_field_report(&poly(&[1, -1, -1]), 4).unwrap();
        let want: BTreeMap<u32, usize> = [(1, 2), (2, 1), (3, 2), (4, 1)].into_iter().collect();
        assert_eq!(r.degrees, want);
        assert_eq!(r.parity_case, ParityCase::EvenWithMinusInverse);
        assert!(r.all_identities_hold());
    }

    #[test]
    fn plastic_and_kenyon_trace_fields() {
        let r = trace_field_report(&poly(&[1, 0, -1, -1]), 3).unwrap();
        assert!(r.degrees.values().all(|&d| d == 3));
        assert!(r.all_identities_hold());
        let r = trace_field_report(&poly(&[1, -4, -2, 4, -1]), 3).unwrap();
        assert!(r.degrees.values().all(|&d| d == 4));
        assert_eq!(r.parity_case, ParityCase::EvenNoMinusInverse);
    }
}
