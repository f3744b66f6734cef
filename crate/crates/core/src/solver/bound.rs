//! Radius outside of which an admissible polynomial has no roots.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::mixedpoly::MixedPolynomial;
use crate::scalar::{from_usize, Scalar};
use crate::signed_index::{top_part_factor, DEFAULT_BAND};

const MAX_ARC_DEPTH: u32 = 30;

/// Certified lower bound for `|f_d(e^{iθ})|` over the whole unit circle.
pub fn top_part_floor<T: Scalar>(f: &MixedPolynomial<T>) -> Option<T> {
    let top = f.top_part();
    let terms: Vec<(i64, Complex<T>)> = top
        .terms()
        .map(|((nu, mu), c)| (nu as i64 - mu as i64, c))
        .collect();
    let lipschitz = terms
        .iter()
        .map(|(k, c)| c.norm() * from_usize::<T>(k.unsigned_abs() as usize))
        .fold(T::zero(), |a, b| a + b);
    let l1 = top.l1_norm();
    let slack = T::epsilon() * T::lit(32.0) * from_usize::<T>(terms.len() + 1) * l1;
    let eval = |theta: T| {
        terms.iter().fold(Complex::new(T::zero(), T::zero()), |acc, &(k, c)| {
            acc + c * Complex::from_polar(T::one(), theta * T::from_i64(k).unwrap())
        })
    };
    let max_freq = terms.iter().map(|(k, _)| k.unsigned_abs()).max().unwrap_or(0) as usize;
    let pieces = (16 * max_freq).max(64);
    let two_pi = T::PI() + T::PI();
    let width = two_pi / from_usize::<T>(pieces);
    let mut floor = T::infinity();
    let mut stack: Vec<(T, T, u32)> = (0..pieces)
        .map(|k| (width * from_usize::<T>(k), width, 0))
        .collect();
    while let Some((start, w, depth)) = stack.pop() {
        let half = w / (T::one() + T::one());
        let value = eval(start + half).norm();
        let lower = value - lipschitz * half * (T::one() + T::lit(1e-9)) - slack;
        if lower > T::zero() {
            floor = floor.min(lower);
        } else if depth >= MAX_ARC_DEPTH {
            return None;
        } else {
            stack.push((start, half, depth + 1));
            stack.push((start + half, half, depth + 1));
        }
    }
    Some(floor)
}

/// A power of two `R ≥ 1` with `f(z) ≠ 0` for every `|z| ≥ R`.
///
/// With `κ ≤ min_{|z|=1} |f_d|` and `A_k = Σ_{ν+μ=k} |a_{ν,μ}|`, every `|z| ≥ R`
/// satisfies `|f(z)| ≥ |z|^d (κ − Σ_{k<d} A_k R^{k−d}) > 0`.
pub fn root_bound<T: Scalar>(f: &MixedPolynomial<T>) -> Result<T> {
    let fac = top_part_factor(f)?;
    let band = T::lit(DEFAULT_BAND);
    if let Some(g) = fac
        .factors
        .iter()
        .find(|(g, _)| (g.norm() - T::one()).abs() <= band)
    {
        return Err(Error::NotAdmissible {
            modulus: g.0.norm().to_f64_lossy(),
            band: DEFAULT_BAND,
        });
    }
    let kappa = top_part_floor(f).ok_or(Error::NotAdmissible {
        modulus: 1.0,
        band: DEFAULT_BAND,
    })?;
    let d = fac.d as usize;
    let mut lower = vec![T::zero(); d];
    for ((nu, mu), c) in f.terms() {
        let k = (nu + mu) as usize;
        if k < d {
            lower[k] = lower[k] + c.norm();
        }
    }
    let mut r = T::one();
    for _ in 0..200 {
        let tail = lower
            .iter()
            .enumerate()
            .map(|(k, &a)| a * r.powi(k as i32 - d as i32))
            .fold(T::zero(), |a, b| a + b);
        if kappa > tail * (T::one() + T::lit(1e-6)) {
            return Ok(r);
        }
        r = r + r;
    }
    Err(Error::BadParameters("root bound overflow".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MixedPolynomial<f64>;

    #[test]
    fn bound_examples() {
        let f: P = "z^3 zb - 1".parse().unwrap();
        assert_eq!(root_bound(&f), Ok(2.0));
        let g: P = "z - 5".parse().unwrap();
        assert!(root_bound(&g).unwrap() > 5.0);
        let h: P = "z^2 - zb^2".parse().unwrap();
        assert!(matches!(root_bound(&h), Err(Error::NotAdmissible { .. })));
    }

    #[test]
    fn floor_of_separated_factors() {
        // |z^2 - 4 z̄^2| >= 3 on the unit circle
        let f: P = "z^2 - (4,0) zb^2".parse().unwrap();
        let k = top_part_floor(&f).unwrap();
        assert!(k > 2.0 && k <= 3.0);
    }
}
