//! Weighted homogenization `f ↔ F` and the Milnor fibration invariants.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mixedpoly::MixedPolynomial;
use crate::scalar::Scalar;
use crate::solver::{solve, SolverConfig};

/// Exponents of `z₁, z̄₁, z₂, z̄₂`.
pub type Exponent4 = (u32, u32, u32, u32);

/// Strongly mixed weighted homogeneous polynomial in two variables.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedHomogPoly<T> {
    terms: BTreeMap<Exponent4, Complex<T>>,
    pub p: u32,
    pub q: u32,
    pub polar_degree: i64,
    pub radial_degree: i64,
}

fn check_weight(p: u32, q: u32) -> Result<()> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        return Err(Error::BadWeight { p, q });
    }
    Ok(())
}

impl<T: Scalar> WeightedHomogPoly<T> {
    /// Builds `F` from its terms, checking weighted homogeneity.
    pub fn from_terms<I>(terms: I, p: u32, q: u32) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent4, Complex<T>)>,
    {
        check_weight(p, q)?;
        let mut map: BTreeMap<Exponent4, Complex<T>> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(|| Complex::new(T::zero(), T::zero())) += c;
        }
        map.retain(|_, c| c.norm() != T::zero());
        let mut degs = map.keys().map(|&e| weighted_degrees(e, p, q));
        let (dp, dr) = degs.next().ok_or(Error::ZeroPolynomial)?;
        if degs.any(|d| d != (dp, dr)) {
            return Err(Error::NotInClass("terms are not weighted homogeneous".into()));
        }
        Ok(Self {
            terms: map,
            p,
            q,
            polar_degree: dp,
            radial_degree: dr,
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent4, Complex<T>)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn evaluate(&self, z1: Complex<T>, z2: Complex<T>) -> Complex<T> {
        let (w1, w2) = (z1.conj(), z2.conj());
        self.terms
            .iter()
            .fold(Complex::new(T::zero(), T::zero()), |acc, (&(a, b, c, d), &k)| {
                acc + k * z1.powu(a) * w1.powu(b) * z2.powu(c) * w2.powu(d)
            })
    }

    /// `|F(ρ ∘_P z) − r^{d_r} e^{i d_p θ} F(z)|` relative to the scale of the
    /// right-hand side, with `ρ = r e^{iθ}` and `ρ ∘_P z = (ρ^p z₁, ρ^q z₂)`.
    pub fn euler_defect(&self, r: T, theta: T, z1: Complex<T>, z2: Complex<T>) -> T {
        let rho = Complex::from_polar(r, theta);
        let lhs = self.evaluate(z1 * rho.powu(self.p), z2 * rho.powu(self.q));
        let factor = Complex::from_polar(
            r.powi(self.radial_degree as i32),
            theta * T::from_i64(self.polar_degree).unwrap(),
        );
        let rhs = factor * self.evaluate(z1, z2);
        let scale = self
            .terms
            .iter()
            .map(|(&(a, b, c, d), k)| {
                k.norm() * z1.norm().powi((a + b) as i32) * z2.norm().powi((c + d) as i32)
            })
            .fold(T::zero(), |x, y| x + y)
            * factor.norm();
        (lhs - rhs).norm() / scale.max(T::min_positive_value())
    }
}

fn weighted_degrees((a, b, c, d): Exponent4, p: u32, q: u32) -> (i64, i64) {
    let (a, b, c, d, p, q) = (a as i64, b as i64, c as i64, d as i64, p as i64, q as i64);
    ((a - b) * p + (c - d) * q, (a + b) * p + (c + d) * q)
}

/// `z^i z̄^j ↦ z₁^{qi} z̄₁^{qj} z₂^{p(n−i)} z̄₂^{p(m−j)}` with
/// `n = deg_z f`, `m = deg_z̄ f`.
pub fn homogenize<T: Scalar>(f: &MixedPolynomial<T>, p: u32, q: u32) -> Result<WeightedHomogPoly<T>> {
    check_weight(p, q)?;
    let deg = f.degrees()?;
    if !deg.in_m {
        return Err(Error::NotInClass(format!(
            "mixed degree {} differs from {} + {}",
            deg.deg_mixed, deg.deg_z, deg.deg_zbar
        )));
    }
    let (n, m) = (deg.deg_z, deg.deg_zbar);
    WeightedHomogPoly::from_terms(
        f.terms()
            .map(|((i, j), c)| ((q * i, q * j, p * (n - i), p * (m - j)), c)),
        p,
        q,
    )
}

/// Inverse of [`homogenize`]; needs the pure `z₂` term `z₂^{pn} z̄₂^{pm}`.
pub fn dehomogenize<T: Scalar>(big_f: &WeightedHomogPoly<T>) -> Result<MixedPolynomial<T>> {
    let (p, q) = (big_f.p, big_f.q);
    let &(_, _, pn, pm) = big_f
        .terms
        .keys()
        .find(|&&(a, b, _, _)| a == 0 && b == 0)
        .ok_or_else(|| Error::NotConvenient("no pure z2 term".into()))?;
    if pn % p != 0 || pm % p != 0 {
        return Err(Error::NotConvenient("z2 exponents are not multiples of p".into()));
    }
    let (n, m) = (pn / p, pm / p);
    let mut out = Vec::new();
    for (&(a, b, c, d), &k) in &big_f.terms {
        if a % q != 0 || b % q != 0 {
            return Err(Error::NotConvenient("z1 exponents are not multiples of q".into()));
        }
        let (i, j) = (a / q, b / q);
        if i > n || j > m || c != p * (n - i) || d != p * (m - j) {
            return Err(Error::NotConvenient(format!("term ({a},{b},{c},{d}) has no affine preimage")));
        }
        out.push(((i, j), k));
    }
    Ok(MixedPolynomial::from_terms(out))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MilnorReport {
    pub p: u32,
    pub q: u32,
    pub polar_degree: i64,
    pub radial_degree: i64,
    pub rho: usize,
    /// `f(0) ≠ 0`; the Euler characteristics are only reported in this case.
    pub convenient: bool,
    pub chi_m: Option<i64>,
    pub chi_mg: Option<i64>,
    pub link_components: usize,
}

/// Invariants of the fibration of `F = homogenize(f, P)` from a known `ρ(f)`.
pub fn invariants_with_rho<T: Scalar>(f: &MixedPolynomial<T>, p: u32, q: u32, rho: usize) -> Result<MilnorReport> {
    let big_f = homogenize(f, p, q)?;
    let n_pol = f.degrees()?.polar();
    if n_pol <= 0 {
        return Err(Error::NonPositivePolarDegree(n_pol));
    }
    let convenient = f.coeff(0, 0).norm() != T::zero();
    let (pi, qi, r) = (p as i64, q as i64, rho as i64);
    Ok(MilnorReport {
        p,
        q,
        polar_degree: big_f.polar_degree,
        radial_degree: big_f.radial_degree,
        rho,
        convenient,
        chi_m: convenient.then(|| -n_pol * pi * qi * r + n_pol * (pi + qi)),
        chi_mg: convenient.then(|| n_pol * (2 - r)),
        link_components: rho,
    })
}

/// Like [`invariants_with_rho`], computing a certified `ρ(f)` first.
pub fn invariants<T: Scalar>(f: &MixedPolynomial<T>, p: u32, q: u32) -> Result<MilnorReport> {
    homogenize(f, p, q)?;
    let n_pol = f.degrees()?.polar();
    if n_pol <= 0 {
        return Err(Error::NonPositivePolarDegree(n_pol));
    }
    let rho = solve(f, &SolverConfig::default())?.certified_rho()?;
    invariants_with_rho(f, p, q, rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MixedPolynomial<f64>;
    type C = Complex<f64>;

    fn f2() -> P {
        "zb z^2 - (0.5,0) zb - z + (0.03333333333333333,0)".parse().unwrap()
    }

    #[test]
    fn homogenize_examples() {
        let f: P = "z^2 zb - 1".parse().unwrap();
        let big = homogenize(&f, 1, 1).unwrap();
        let terms: Vec<_> = big.terms().collect();
        assert_eq!(terms, vec![((0, 0, 2, 1), C::new(-1.0, 0.0)), ((2, 1, 0, 0), C::new(1.0, 0.0))]);
        assert_eq!((big.polar_degree, big.radial_degree), (1, 3));
        let big = homogenize(&f, 2, 1).unwrap();
        let terms: Vec<_> = big.terms().map(|(e, _)| e).collect();
        assert_eq!(terms, vec![(0, 0, 4, 2), (2, 1, 0, 0)]);
        assert_eq!((big.polar_degree, big.radial_degree), (2, 6));
        assert_eq!(dehomogenize(&big).unwrap(), f);
    }

    #[test]
    fn bad_inputs() {
        let f: P = "z^2 zb - 1".parse().unwrap();
        assert_eq!(homogenize(&f, 2, 2).unwrap_err(), Error::BadWeight { p: 2, q: 2 });
        let g: P = "z^2 zb^2 + z^3".parse().unwrap();
        assert!(matches!(homogenize(&g, 1, 1), Err(Error::NotInClass(_))));
        let h: P = "z^2 zb - z".parse().unwrap();
        let big = homogenize(&h, 1, 1).unwrap();
        assert!(matches!(dehomogenize(&big), Err(Error::NotConvenient(_))));
        let inhom = WeightedHomogPoly::<f64>::from_terms([((1, 0, 0, 0), C::new(1.0, 0.0)), ((0, 0, 2, 0), C::new(1.0, 0.0))], 1, 1);
        assert!(matches!(inhom, Err(Error::NotInClass(_))));
    }

    #[test]
    fn euler_identity() {
        let big = homogenize(&f2(), 3, 2).unwrap();
        let d = big.euler_defect(1.7, 0.4, C::new(0.3, -0.8), C::new(-1.1, 0.2));
        assert!(d < 1e-12, "{d}");
    }

    #[test]
    fn report_from_rho() {
        let r = invariants_with_rho(&f2(), 1, 1, 5).unwrap();
        assert_eq!((r.polar_degree, r.radial_degree, r.link_components), (1, 3, 5));
        assert_eq!((r.chi_m, r.chi_mg), (Some(-3), Some(-3)));
        let r = invariants_with_rho(&f2(), 2, 1, 5).unwrap();
        assert_eq!(r.chi_m, Some(-7));
        let g: P = "z zb^2 - 1".parse().unwrap();
        assert_eq!(invariants_with_rho(&g, 1, 1, 1).unwrap_err(), Error::NonPositivePolarDegree(-1));
    }
}
