//! Outward-rounded interval arithmetic.
//!
//! Every operation computes the floating result with round-to-nearest and then
//! widens each bound by one ulp, so the exact real result is always enclosed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq)]
pub struct Interval<T> {
    lo: T,
    hi: T,
}

impl<T: Scalar> Interval<T> {
    /// Interval `[lo, hi]`. Panics if `lo > hi` or either bound is NaN.
    pub fn new(lo: T, hi: T) -> Self {
        assert!(lo <= hi, "interval bounds out of order: {lo} > {hi}");
        Self { lo, hi }
    }

    pub fn point(x: T) -> Self {
        Self { lo: x, hi: x }
    }

    /// `[-r, r]` for `r >= 0`.
    pub fn symmetric(r: T) -> Self {
        let r = r.abs();
        Self { lo: -r, hi: r }
    }

    pub fn zero() -> Self {
        Self::point(T::zero())
    }

    pub fn lo(&self) -> T {
        self.lo
    }

    pub fn hi(&self) -> T {
        self.hi
    }

    pub fn mid(&self) -> T {
        let two = T::one() + T::one();
        if self.lo.is_infinite() || self.hi.is_infinite() {
            return (self.lo / two) + (self.hi / two);
        }
        self.lo + (self.hi - self.lo) / two
    }

    pub fn width(&self) -> T {
        (self.hi - self.lo).next_up()
    }

    /// Upper bound on half the width.
    pub fn rad(&self) -> T {
        let m = self.mid();
        (m - self.lo).max(self.hi - m).next_up()
    }

    /// Largest absolute value in the interval.
    pub fn mag(&self) -> T {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest absolute value in the interval.
    pub fn mig(&self) -> T {
        if self.contains_zero() {
            T::zero()
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn contains(&self, x: T) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(T::zero())
    }

    /// True when `self` lies strictly inside `other`.
    pub fn interior_of(&self, other: &Self) -> bool {
        other.lo < self.lo && self.hi < other.hi
    }

    pub fn subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Self { lo, hi })
    }

    pub fn hull(&self, other: &Self) -> Self {
        Self {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Sign of every element, or `None` when the interval straddles zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo > T::zero() {
            Some(1)
        } else if self.hi < T::zero() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn sqr(self) -> Self {
        let a = self.lo.abs();
        let b = self.hi.abs();
        let (small, big) = if a < b { (a, b) } else { (b, a) };
        let hi = (big * big).next_up();
        let lo = if self.contains_zero() {
            T::zero()
        } else {
            (small * small).next_down().max(T::zero())
        };
        Self { lo, hi }
    }

    pub fn powi(self, k: u32) -> Self {
        match k {
            0 => Self::point(T::one()),
            1 => self,
            _ if k % 2 == 0 => self.powi(k / 2).sqr(),
            _ => self.powi(k - 1) * self,
        }
    }

    pub fn scale(self, s: T) -> Self {
        self * Self::point(s)
    }

    fn rounded(lo: T, hi: T) -> Self {
        Self {
            lo: lo.next_down(),
            hi: hi.next_up(),
        }
    }
}

impl<T: Scalar> Add for Interval<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::rounded(self.lo + rhs.lo, self.hi + rhs.hi)
    }
}

impl<T: Scalar> Sub for Interval<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::rounded(self.lo - rhs.hi, self.hi - rhs.lo)
    }
}

impl<T: Scalar> Neg for Interval<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl<T: Scalar> Mul for Interval<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let p = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        let mut lo = p[0];
        let mut hi = p[0];
        for &v in &p[1..] {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Self::rounded(lo, hi)
    }
}

impl<T: fmt::Debug> fmt::Debug for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn tenth_times_three_encloses_exact() {
        let t = Interval::point(0.1_f64);
        let s = t + t + t;
        // 0.3 is not representable; the enclosure must contain the true sum of
        // the three stored values, which lies within an ulp of 0.3.
        assert!(s.lo() < 0.3 + 1e-16 && s.hi() > 0.3 - 1e-16);
        assert!(s.width() < 1e-15);
    }

    #[test]
    fn square_of_straddling_interval_starts_at_zero() {
        let x = Interval::new(-2.0_f64, 1.0);
        let s = x.sqr();
        assert_eq!(s.lo(), 0.0);
        assert!(s.hi() >= 4.0);
        let c = x.powi(3);
        assert!(c.lo() <= -8.0 && c.hi() >= 1.0);
    }

    #[test]
    fn sign_and_intersection() {
        let a = Interval::new(1.0_f64, 2.0);
        let b = Interval::new(1.5, 3.0);
        assert_eq!(a.sign(), Some(1));
        assert_eq!((-a).sign(), Some(-1));
        let c = a.intersect(&b).unwrap();
        assert_eq!((c.lo(), c.hi()), (1.5, 2.0));
        assert!(a.intersect(&Interval::new(5.0, 6.0)).is_none());
        assert!(Interval::new(1.2, 1.8).interior_of(&a));
        assert!(!a.interior_of(&a));
    }

    proptest! {
        #[test]
        fn products_enclose_float_products(a in -1e3f64..1e3, b in -1e3f64..1e3,
                                           da in 0.0f64..1.0, db in 0.0f64..1.0) {
            let x = Interval::new(a, a + da);
            let y = Interval::new(b, b + db);
            let z = x * y;
            for s in [a, a + da, a + da / 2.0] {
                for t in [b, b + db, b + db / 3.0] {
                    prop_assert!(z.contains(s * t));
                }
            }
            let w = x - y + x;
            prop_assert!(w.contains(a - b + a));
        }
    }
}
