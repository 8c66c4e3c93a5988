//! Pairing between adjacency and Coxeter spectra: `alpha^2 - 2 = lambda + 1/lambda`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::transform::coxeter_transform;
use crate::error::Result;
use crate::exactpoly::rational::{sqrt_lower, to_f64};
use crate::exactpoly::resultant::BivariatePoly;
use crate::exactpoly::{isolate_roots, resultant_eliminate, AlgebraicReal, IntPoly, RatInterval, RootRegion};
use crate::linalg::BipartiteGraph;

const BITS: u32 = 96;

/// Outcome of checking the spectra relation on one graph.
#[derive(Clone, Debug)]
pub struct SpectraRelation {
    /// `prod_i (x^2 - (alpha_i^2 - 2) x + 1) = charpoly(coxeter)^2`, exactly.
    pub exact_identity: bool,
    /// Certified upper bound on the worst mismatch after pairing sorted values.
    pub max_residual: f64,
    /// `(alpha^2 - 2, lambda + 1/lambda)` midpoints, paired in sorted order.
    pub pairs: Vec<(f64, f64)>,
    pub verified: bool,
}

pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

/// `prod over roots alpha of chi` of `x^2 - (alpha^2 - 2) x + 1`.
pub fn paired_product(adjacency_charpoly: &IntPoly) -> Result<IntPoly> {
    let s = |c: &[i64]| IntPoly::from_descending(c.iter().copied());
    // coefficients in alpha: (x + 1)^2, 0, -x
    let h = BivariatePoly::from_z_coeffs(vec![s(&[1, 2, 1]), IntPoly::zero(), s(&[-1, 0])]);
    resultant_eliminate(adjacency_charpoly, &h)
}

/// Enclosures of `alpha^2 - 2` over the adjacency eigenvalues, with
/// multiplicity.
fn adjacency_values(chi: &IntPoly) -> Vec<RatInterval> {
    let two = BigRational::from_integer(2.into());
    let mut out = Vec::new();
    for (factor, mult) in chi.squarefree_decomposition() {
        for a in AlgebraicReal::real_roots(&factor) {
            let v = a.enclosure(BITS).pow(2).add_scalar(&-two.clone());
            out.extend(std::iter::repeat_n(v, mult));
        }
    }
    out
}

/// Enclosures of `z + 1/z` over the Coxeter eigenvalues, with the bound on
/// the discarded imaginary part.
fn coxeter_values(c: &IntPoly) -> Result<Vec<(RatInterval, BigRational)>> {
    let mut out = Vec::new();
    for region in isolate_roots(c, BITS)? {
        let m = region.multiplicity();
        let v = match &region {
            RootRegion::Real { root, .. } => {
                let x = root.enclosure(BITS);
                let inv = x.recip().expect("Coxeter eigenvalues are units");
                (x.add(&inv), BigRational::zero())
            }
            RootRegion::Complex { disk, .. } => {
                let c = &disk.center;
                let r = &disk.radius;
                let n2 = c.norm_sq();
                let modulus = sqrt_lower(&n2, BITS);
                // |1/z - 1/c| <= r / (|c| (|c| - r))
                let err = r + r / (&modulus * (&modulus - r));
                let re = &c.re + &c.re / &n2;
                let im = (&c.im - &c.im / &n2).abs() + &err;
                (RatInterval::new(&re - &err, &re + &err), im)
            }
        };
        out.extend(std::iter::repeat_n(v, m));
    }
    Ok(out)
}

/// Check the relation numerically with certified enclosures, and the exact
/// polynomial identity.
pub fn verify_spectra_relation(g: &BipartiteGraph) -> Result<SpectraRelation> {
    let chi = g.graph().charpoly();
    let cox = coxeter_transform(g).charpoly();
    let exact_identity = paired_product(&chi)?.eq_up_to_sign(&cox.pow(2));

    let mut a = adjacency_values(&chi);
    let mut c = coxeter_values(&cox)?;
    a.sort_by_key(|x| x.midpoint());
    c.sort_by_key(|x| x.0.midpoint());
    let mut worst = BigRational::zero();
    let mut pairs = Vec::with_capacity(a.len());
    let counts_match = a.len() == c.len();
    for (x, (y, im)) in a.iter().zip(&c) {
        let gap = (&x.hi - &y.lo).abs().max((&y.hi - &x.lo).abs()) + im;
        worst = worst.max(gap);
        pairs.push((to_f64(&x.midpoint()), to_f64(&y.midpoint())));
    }
    let max_residual = to_f64(&worst);
    let verified = counts_match && exact_identity && max_residual < RESIDUAL_TOLERANCE;
    Ok(SpectraRelation {
        exact_identity,
        max_residual: if counts_match { max_residual } else { f64::INFINITY },
        pairs,
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Graph;

    #[test]
    fn examples() {
        for g in [Graph::path(1), Graph::path(2), Graph::complete_bipartite(3, 3), Graph::star(5)] {
            let r = verify_spectra_relation(&g.bipartition().unwrap()).unwrap();
            assert!(r.verified, "{g:?}: {r:?}");
        }
    }

    #[test]
    fn identity_holds_on_paths() {
        for n in 1..=9 {
            let g = Graph::path(n).bipartition().unwrap();
            let cox = coxeter_transform(&g).charpoly();
            assert!(paired_product(&g.graph().charpoly()).unwrap().eq_up_to_sign(&cox.pow(2)), "A{n}");
        }
    }
}
