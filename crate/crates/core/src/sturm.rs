//! Exact real-root counting with Sturm sequences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial over an ordered field, ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Clone + Num + Signed + PartialOrd> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let mut k = R::zero();
        let out = self
            .coeffs
            .iter()
            .skip(1)
            .map(|c| {
                k = k.clone() + R::one();
                c.clone() * k.clone()
            })
            .collect();
        Self::new(out)
    }

    /// Remainder of division by a nonzero polynomial.
    pub fn rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let factor = r[top].clone() / lead.clone();
            for (k, c) in d.coeffs.iter().enumerate() {
                let idx = top - dd + k;
                r[idx] = r[idx].clone() - factor.clone() * c.clone();
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    /// `p, p', −rem(p, p'), …`.
    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]).neg();
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        seq.retain(|p| !p.is_zero());
        seq
    }

    /// Number of distinct real roots in `(lo, hi]`; `None` stands for an
    /// infinite bound.
    pub fn count_roots(&self, lo: Option<&R>, hi: Option<&R>) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) > 0 && g.distinct_roots(lo, hi) > 0 {
            return Err(Error::NotSquarefree);
        }
        Ok(self.distinct_roots(lo, hi))
    }

    fn distinct_roots(&self, lo: Option<&R>, hi: Option<&R>) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let seq = self.sturm_sequence();
        let at = |x: Option<&R>, infinite_sign: i8| -> usize {
            let signs: Vec<i8> = seq
                .iter()
                .map(|p| match x {
                    Some(x) => sign_of(&p.eval(x)),
                    None => {
                        let s = sign_of(&p.leading());
                        if infinite_sign < 0 && p.degree().unwrap_or(0) % 2 == 1 {
                            -s
                        } else {
                            s
                        }
                    }
                })
                .collect();
            sign_changes(&signs)
        };
        let v_lo = at(lo, -1);
        let v_hi = at(hi, 1);
        v_lo.saturating_sub(v_hi)
    }
}

fn sign_of<R: Signed>(x: &R) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(signs: &[i8]) -> usize {
    let nonzero: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Exact rational value of a finite double.
pub fn rational(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or_else(|| Error::BadParameters(format!("non-finite value {x}")))
}

impl UniPoly<BigRational> {
    /// Rationalizes double coefficients exactly.
    pub fn from_f64(coeffs: &[f64]) -> Result<Self> {
        Ok(Self::new(coeffs.iter().map(|&c| rational(c)).collect::<Result<_>>()?))
    }

    /// Rounded coefficients.
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(ratio_to_f64).collect()
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    let num: &BigInt = r.numer();
    let den: &BigInt = r.denom();
    let shift = num.bits().max(den.bits()) as i64 - 60;
    if shift <= 0 {
        return num.to_string().parse::<f64>().unwrap() / den.to_string().parse::<f64>().unwrap();
    }
    // scale both to about 60 bits before converting
    let n: f64 = (num >> shift as usize).to_string().parse().unwrap();
    let d: f64 = (den >> shift as usize).to_string().parse().unwrap();
    n / d
}

/// Number of distinct real roots of `Σ c_k x^k` in `(lo, hi]`, computed exactly
/// on the rationalized coefficients. Infinite bounds are allowed.
pub fn sturm_count(coeffs: &[f64], lo: f64, hi: f64) -> Result<usize> {
    let p = UniPoly::from_f64(coeffs)?;
    let lo = if lo == f64::NEG_INFINITY { None } else { Some(rational(lo)?) };
    let hi = if hi == f64::INFINITY { None } else { Some(rational(hi)?) };
    p.count_roots(lo.as_ref(), hi.as_ref())
}

impl<R: Clone + Num + Signed + PartialOrd> One for UniPoly<R> {
    fn one() -> Self {
        Self::new(vec![R::one()])
    }
}

impl<R: Clone + Num + Signed + PartialOrd> std::ops::Mul for UniPoly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}
