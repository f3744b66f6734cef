//! Certified winding numbers of `f / |f|` along circles.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::mixedpoly::MixedPolynomial;
use crate::realpair::{BivariatePoly, TaylorForm};
use crate::scalar::{from_usize, Scalar};

const MAX_ARC_DEPTH: u32 = 40;

/// Interval realification of a polynomial, reusable across many circles.
#[derive(Clone, Debug)]
pub struct Enclosure<T> {
    pub g: BivariatePoly<Interval<T>>,
    pub h: BivariatePoly<Interval<T>>,
}

impl<T: Scalar> Enclosure<T> {
    pub fn new(f: &MixedPolynomial<T>) -> Self {
        let (g, h) = f.realify_enclosure();
        Self { g, h }
    }

    /// Enclosures of `(g, h)` over the square of half-width `r` around `c`.
    pub fn range(&self, c: Complex<T>, r: T) -> (Interval<T>, Interval<T>) {
        let g = TaylorForm::at(&self.g, c.re, c.im).range(r, r);
        let h = TaylorForm::at(&self.h, c.re, c.im).range(r, r);
        (g, h)
    }
}

/// Behaviour when `f` is tiny at a sample point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleCheck {
    /// Refuse when `|f| < 1e-12 · Σ|a||z|^k` at a sample.
    Strict,
    /// Rely on the interval certificate alone.
    IntervalOnly,
}

/// Winding number of `θ ↦ f(center + r e^{iθ})` around the origin.
///
/// The circle is cut into arcs until each arc's bounding square provably keeps
/// `Re f` or `Im f` away from zero and the sampled argument moves by less than
/// a quarter turn, so each increment is exact.
pub fn winding_number<T: Scalar>(
    f: &MixedPolynomial<T>,
    enc: &Enclosure<T>,
    center: Complex<T>,
    radius: T,
    check: SampleCheck,
) -> Result<i64> {
    if !(radius > T::zero()) {
        return Err(Error::BadParameters("winding radius must be positive".into()));
    }
    let d = f.terms().map(|((a, b), _)| a + b).max().unwrap_or(0) as usize;
    let pieces = (8 * d).max(64);
    let two_pi = T::PI() + T::PI();
    let point = |theta: T| center + Complex::from_polar(radius, theta);
    let sample = |theta: T| -> Result<Complex<T>> {
        let z = point(theta);
        let v = f.evaluate(z);
        let tiny = match check {
            SampleCheck::Strict => v.norm() < T::lit(1e-12) * f.magnitude_at(z),
            SampleCheck::IntervalOnly => v.norm_sqr() == T::zero(),
        };
        if tiny {
            return Err(Error::CircleThroughZero {
                re: z.re.to_f64_lossy(),
                im: z.im.to_f64_lossy(),
            });
        }
        Ok(v)
    };
    let mut total = T::zero();
    let mut stack: Vec<(T, T, Complex<T>, Complex<T>, u32)> = Vec::new();
    let step = two_pi / from_usize::<T>(pieces);
    let mut prev = sample(T::zero())?;
    let first = prev;
    for k in 0..pieces {
        let t0 = step * from_usize::<T>(k);
        let t1 = if k + 1 == pieces { two_pi } else { step * from_usize::<T>(k + 1) };
        let v1 = if k + 1 == pieces { first } else { sample(t1)? };
        stack.push((t0, t1, prev, v1, 0));
        while let Some((a, b, fa, fb, depth)) = stack.pop() {
            let delta = (fb / fa).arg();
            if delta.abs() < T::FRAC_PI_2() && arc_certified(enc, &point, a, b, radius) {
                total = total + delta;
                continue;
            }
            if depth >= MAX_ARC_DEPTH {
                let z = point(a);
                return Err(Error::CircleThroughZero {
                    re: z.re.to_f64_lossy(),
                    im: z.im.to_f64_lossy(),
                });
            }
            let m = (a + b) / (T::one() + T::one());
            let fm = sample(m)?;
            stack.push((m, b, fm, fb, depth + 1));
            stack.push((a, m, fa, fm, depth + 1));
        }
        prev = v1;
    }
    let turns = total / two_pi;
    Ok(turns.round().to_i64().expect("finite winding"))
}

fn arc_certified<T: Scalar>(
    enc: &Enclosure<T>,
    point: &impl Fn(T) -> Complex<T>,
    a: T,
    b: T,
    radius: T,
) -> bool {
    let two = T::one() + T::one();
    let m = point((a + b) / two);
    let half = (b - a) / two;
    let slack = T::epsilon() * T::lit(16.0) * (m.norm() + radius);
    let r = radius * half * (T::one() + T::lit(1e-9)) + slack;
    let (g, h) = enc.range(m, r);
    !g.contains_zero() || !h.contains_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MixedPolynomial<f64>;

    fn wind(f: &P, c: Complex<f64>, r: f64) -> Result<i64> {
        winding_number(f, &Enclosure::new(f), c, r, SampleCheck::Strict)
    }

    #[test]
    fn elementary_windings() {
        let o = Complex::new(0.0, 0.0);
        assert_eq!(wind(&P::z(), o, 0.5), Ok(1));
        assert_eq!(wind(&P::zbar(), o, 1.0), Ok(-1));
        assert_eq!(wind(&P::z_pow(0, 2), o, 1e-3), Ok(-2));
        assert_eq!(wind(&P::z_pow(2, 1), o, 1e-3), Ok(1));
        let shifted = &P::z() - &P::real_constant(3.0);
        assert_eq!(wind(&shifted, o, 1.0), Ok(0));
        assert_eq!(wind(&shifted, Complex::new(3.0, 0.1), 0.5), Ok(1));
    }

    #[test]
    fn circle_through_root_is_refused() {
        let f = &P::z() - &P::real_constant(1.0);
        let e = wind(&f, Complex::new(0.0, 0.0), 1.0);
        assert!(matches!(e, Err(Error::CircleThroughZero { .. })));
    }
}
