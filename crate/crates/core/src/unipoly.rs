//! Complex univariate root finding used for the top-part factorization.

use num_complex::Complex;

use crate::scalar::{from_usize, Scalar};

/// All complex roots of `Σ c_k t^k` (ascending coefficients, nonzero leading
/// coefficient) by Aberth–Ehrlich iteration followed by Newton polishing.
pub fn complex_roots<T: Scalar>(coeffs: &[Complex<T>]) -> Vec<Complex<T>> {
    let mut c: Vec<Complex<T>> = coeffs.to_vec();
    while c.len() > 1 && c.last().is_some_and(|x| x.norm_sqr() == T::zero()) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = c[n];
    let monic: Vec<Complex<T>> = c.iter().map(|&x| x / lead).collect();
    let bound = T::one()
        + monic[..n]
            .iter()
            .map(|x| x.norm())
            .fold(T::zero(), T::max);
    let radius = cauchy_radius(&monic).min(bound);
    let two_pi = T::PI() + T::PI();
    let mut z: Vec<Complex<T>> = (0..n)
        .map(|k| {
            let theta = two_pi * from_usize::<T>(k) / from_usize::<T>(n) + T::lit(0.4);
            Complex::from_polar(radius, theta)
        })
        .collect();
    let eps = T::epsilon();
    for _ in 0..500 {
        let mut converged = true;
        for i in 0..n {
            let (p, dp) = eval_with_derivative(&monic, z[i]);
            if p.norm_sqr() == T::zero() {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex::new(T::zero(), T::zero());
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    let diff = z[i] - zj;
                    if diff.norm_sqr() > T::zero() {
                        s = s + Complex::new(T::one(), T::zero()) / diff;
                    }
                }
            }
            let denom = Complex::new(T::one(), T::zero()) - ratio * s;
            let step = if denom.norm_sqr() > T::zero() {
                ratio / denom
            } else {
                ratio
            };
            if !(step.re.is_finite() && step.im.is_finite()) {
                continue;
            }
            z[i] = z[i] - step;
            if step.norm() > eps * T::lit(4.0) * z[i].norm().max(T::one()) {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval_with_derivative(&monic, *zi);
            if dp.norm_sqr() == T::zero() {
                break;
            }
            let next = *zi - p / dp;
            let (q, _) = eval_with_derivative(&monic, next);
            if q.norm() < p.norm() {
                *zi = next;
            } else {
                break;
            }
        }
    }
    z
}

/// Positive root of `|c_n| r^n = Σ_{k<n} |c_k| r^k`, an upper bound on root moduli.
fn cauchy_radius<T: Scalar>(monic: &[Complex<T>]) -> T {
    let n = monic.len() - 1;
    let abs: Vec<T> = monic.iter().map(|x| x.norm()).collect();
    let h = |r: T| {
        let mut lower = T::zero();
        for k in (0..n).rev() {
            lower = lower * r + abs[k];
        }
        r.powi(n as i32) - lower
    };
    let mut hi = T::one();
    while h(hi) < T::zero() {
        hi = hi + hi;
    }
    let mut lo = T::zero();
    for _ in 0..60 {
        let mid = (lo + hi) / (T::one() + T::one());
        if h(mid) < T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi.max(T::epsilon())
}

pub(crate) fn eval_with_derivative<T: Scalar>(
    c: &[Complex<T>],
    z: Complex<T>,
) -> (Complex<T>, Complex<T>) {
    let zero = Complex::new(T::zero(), T::zero());
    let mut p = zero;
    let mut dp = zero;
    for &ck in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + ck;
    }
    (p, dp)
}

/// Single-linkage clustering of points closer than `tol · max(1, |z|)`;
/// returns centroids with cluster sizes.
pub fn cluster<T: Scalar>(points: &[Complex<T>], tol: T) -> Vec<(Complex<T>, u32)> {
    let n = points.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while label[r] != r {
            r = label[r];
        }
        label[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let scale = T::one().max(points[i].norm()).max(points[j].norm());
            if (points[i] - points[j]).norm() < tol * scale {
                let a = find(&mut label, i);
                let b = find(&mut label, j);
                label[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<(usize, Complex<T>, u32)> = Vec::new();
    for i in 0..n {
        let r = find(&mut label, i);
        match groups.iter_mut().find(|g| g.0 == r) {
            Some(g) => {
                g.1 = g.1 + points[i];
                g.2 += 1;
            }
            None => groups.push((r, points[i], 1)),
        }
    }
    groups
        .into_iter()
        .map(|(_, s, k)| (s / from_usize::<T>(k as usize), k))
        .collect()
}
