//! Signed root count `β(f)` from the factorization of the top-degree part.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mixedpoly::MixedPolynomial;
use crate::scalar::Scalar;
use crate::unipoly::{cluster, complex_roots};
use crate::winding::{winding_number, Enclosure, SampleCheck};

pub const DEFAULT_BAND: f64 = 1e-6;
pub const CLUSTER_TOL: f64 = 1e-8;

/// `f_d = c z^p z̄^q Π (z + γ_j z̄)^{ν_j}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TopFactorization<T> {
    pub c: Complex<T>,
    pub p: u32,
    pub q: u32,
    pub factors: Vec<(Complex<T>, u32)>,
    pub d: u32,
}

impl<T: Scalar> TopFactorization<T> {
    /// Expands the product back into a mixed polynomial.
    pub fn expand(&self) -> MixedPolynomial<T> {
        let one = Complex::new(T::one(), T::zero());
        let mut out = MixedPolynomial::monomial(self.p, self.q, self.c);
        for &(gamma, nu) in &self.factors {
            let lin = MixedPolynomial::from_terms([((1, 0), one), ((0, 1), gamma)]);
            out = &out * &lin.powu(nu);
        }
        out
    }

    /// Smallest distance `||γ_j| − 1|` over all factors.
    pub fn unit_distance(&self) -> Option<T> {
        self.factors
            .iter()
            .map(|(g, _)| (g.norm() - T::one()).abs())
            .reduce(T::min)
    }

    pub fn is_admissible(&self, band: T) -> bool {
        self.unit_distance().is_none_or(|d| d > band)
    }

    /// `β = p − q + Σ ε(γ_j) ν_j`, with `ε = +1` inside the unit disk.
    pub fn beta(&self, band: T) -> Result<i64> {
        if let Some(g) = self
            .factors
            .iter()
            .find(|(g, _)| (g.norm() - T::one()).abs() <= band)
        {
            return Err(Error::NotAdmissible {
                modulus: g.0.norm().to_f64_lossy(),
                band: band.to_f64_lossy(),
            });
        }
        let sum: i64 = self
            .factors
            .iter()
            .map(|&(g, nu)| if g.norm() < T::one() { nu as i64 } else { -(nu as i64) })
            .sum();
        Ok(self.p as i64 - self.q as i64 + sum)
    }
}

pub fn top_part_factor<T: Scalar>(f: &MixedPolynomial<T>) -> Result<TopFactorization<T>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let top = f.top_part();
    let d = top.terms().map(|((a, b), _)| a + b).next().unwrap_or(0);
    let p = top.terms().map(|((a, _), _)| a).min().unwrap_or(0);
    let hi = top.terms().map(|((a, _), _)| a).max().unwrap_or(0);
    let q = d - hi;
    let g: Vec<Complex<T>> = (p..=hi).map(|nu| top.coeff(nu, d - nu)).collect();
    let c = top.coeff(hi, d - hi);
    let roots = complex_roots(&g);
    let factors = cluster(&roots, T::lit(CLUSTER_TOL))
        .into_iter()
        .map(|(t, k)| (-t, k))
        .collect();
    Ok(TopFactorization { c, p, q, factors, d })
}

pub fn is_admissible<T: Scalar>(f: &MixedPolynomial<T>, band: T) -> Result<bool> {
    Ok(top_part_factor(f)?.is_admissible(band))
}

pub fn beta<T: Scalar>(f: &MixedPolynomial<T>) -> Result<i64> {
    top_part_factor(f)?.beta(T::lit(DEFAULT_BAND))
}

/// Degree of `f/|f|` on the circle `|z| = r`.
pub fn winding_beta<T: Scalar>(f: &MixedPolynomial<T>, r: T) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let enc = Enclosure::new(f);
    winding_number(f, &enc, Complex::new(T::zero(), T::zero()), r, SampleCheck::Strict)
}

/// Local rotation number of `f/|f|` on the circle `|z − α| = r`.
pub fn local_multiplicity<T: Scalar>(f: &MixedPolynomial<T>, alpha: Complex<T>, r: T) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let enc = Enclosure::new(f);
    winding_number(f, &enc, alpha, r, SampleCheck::IntervalOnly)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MixedPolynomial<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn f2() -> P {
        "(1,0) z^2 zb^1 + (-0.5,0) zb - z + (0.0333333333333333,0)".parse().unwrap()
    }

    #[test]
    fn factorization_examples() {
        let t = top_part_factor(&f2()).unwrap();
        assert_eq!((t.p, t.q, t.d), (2, 1, 3));
        assert!(t.factors.is_empty());
        let g: P = "z^2 - (4,0) zb^2 + z".parse().unwrap();
        let t = top_part_factor(&g).unwrap();
        assert_eq!((t.p, t.q), (0, 0));
        let mut gammas: Vec<f64> = t.factors.iter().map(|f| f.0.re).collect();
        gammas.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((gammas[0] + 2.0).abs() < 1e-12 && (gammas[1] - 2.0).abs() < 1e-12);
        assert!(t.factors.iter().all(|f| f.1 == 1));
        let back = t.expand();
        for ((e, a), (e2, b)) in back.terms().zip(g.top_part().terms()) {
            assert_eq!(e, e2);
            assert!((a - b).norm() < 1e-8);
        }
        let t = top_part_factor(&"z zb + z".parse::<P>().unwrap()).unwrap();
        assert_eq!((t.p, t.q, t.factors.len()), (1, 1, 0));
        assert_eq!(top_part_factor(&P::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn admissibility_examples() {
        let band = DEFAULT_BAND;
        assert!(is_admissible(&"z^2 - (4,0) zb^2".parse::<P>().unwrap(), band).unwrap());
        assert!(!is_admissible(&"z^2 - zb^2".parse::<P>().unwrap(), band).unwrap());
        assert!(is_admissible(&"z zb - 1".parse::<P>().unwrap(), band).unwrap());
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&"z^3 zb - 1".parse::<P>().unwrap()), Ok(2));
        assert_eq!(beta(&"z^2 - (4,0) zb^2".parse::<P>().unwrap()), Ok(-2));
        assert_eq!(beta(&f2()), Ok(1));
        assert!(matches!(
            beta(&"z^2 - zb^2".parse::<P>().unwrap()),
            Err(Error::NotAdmissible { .. })
        ));
    }

    #[test]
    fn winding_examples() {
        assert_eq!(winding_beta(&"z^3 zb - 1".parse::<P>().unwrap(), 2.0), Ok(2));
        assert_eq!(winding_beta(&P::zbar(), 1.0), Ok(-1));
        assert_eq!(winding_beta(&"z^2 - (4,0) zb^2".parse::<P>().unwrap(), 1.0), Ok(-2));
        assert_eq!(local_multiplicity(&P::z(), c(0.0, 0.0), 1e-3), Ok(1));
        assert_eq!(local_multiplicity(&P::z_pow(0, 2), c(0.0, 0.0), 1e-3), Ok(-2));
        assert_eq!(local_multiplicity(&P::z_pow(2, 1), c(0.0, 0.0), 1e-3), Ok(1));
    }

    #[test]
    fn beta_is_rotation_and_scale_invariant() {
        let g: P = "z^3 zb - (0.25,0.5) zb^4 + (2,0) z^4 - z + 1".parse().unwrap();
        let b = beta(&g).unwrap();
        assert_eq!(beta(&g.scale(c(0.3, -2.0))).unwrap(), b);
        assert_eq!(beta(&g.rotate(Complex::from_polar(1.0, 0.7))).unwrap(), b);
    }
}
