//! Real bivariate polynomials, the realified pair `(g, h)` and interval Taylor forms.

use crate::interval::Interval;
use crate::scalar::{from_usize, Scalar};

/// Dense bivariate polynomial `Σ_{i+j≤d} c_{ij} x^i y^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariatePoly<C> {
    degree: usize,
    coeffs: Vec<C>,
}

impl<C: Copy> BivariatePoly<C> {
    pub fn filled(degree: usize, value: C) -> Self {
        Self {
            degree,
            coeffs: vec![value; (degree + 1) * (degree + 1)],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient of `x^i y^j`.
    pub fn get(&self, i: usize, j: usize) -> C {
        self.coeffs[i * (self.degree + 1) + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut C {
        &mut self.coeffs[i * (self.degree + 1) + j]
    }

    pub fn coefficients(&self) -> impl Iterator<Item = C> + '_ {
        let d = self.degree;
        (0..=d).flat_map(move |i| (0..=d - i).map(move |j| self.get(i, j)))
    }

    pub fn map<D: Copy>(&self, f: impl Fn(C) -> D) -> BivariatePoly<D> {
        BivariatePoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|&c| f(c)).collect(),
        }
    }
}

impl<T: Scalar> BivariatePoly<T> {
    pub fn eval(&self, x: T, y: T) -> T {
        let d = self.degree;
        let mut acc = T::zero();
        for i in (0..=d).rev() {
            let mut row = T::zero();
            for j in (0..=d - i).rev() {
                row = row * y + self.get(i, j);
            }
            acc = acc * x + row;
        }
        acc
    }
}

/// `f(x+iy, x−iy) = g(x,y) + i h(x,y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPair<T> {
    pub g: BivariatePoly<T>,
    pub h: BivariatePoly<T>,
}

impl<T: Scalar> RealPair<T> {
    pub fn eval(&self, x: T, y: T) -> (T, T) {
        (self.g.eval(x, y), self.h.eval(x, y))
    }
}

/// Coefficients of a polynomial re-expanded around a point `(cx, cy)`:
/// `p(cx+u, cy+v) ⊆ Σ b_{ij} u^i v^j`.
#[derive(Clone, Debug)]
pub struct TaylorForm<T> {
    b: BivariatePoly<Interval<T>>,
}

impl<T: Scalar> TaylorForm<T> {
    pub fn at(p: &BivariatePoly<Interval<T>>, cx: T, cy: T) -> Self {
        let d = p.degree();
        let mut b = p.clone();
        let cx = Interval::point(cx);
        let cy = Interval::point(cy);
        // Shift in x for every power of y, then in y for every power of x.
        for j in 0..=d {
            let top = d - j;
            for k in 0..top {
                for i in (k..top).rev() {
                    let next = b.get(i + 1, j);
                    let cur = b.get_mut(i, j);
                    *cur = *cur + cx * next;
                }
            }
        }
        for i in 0..=d {
            let top = d - i;
            for k in 0..top {
                for j in (k..top).rev() {
                    let next = b.get(i, j + 1);
                    let cur = b.get_mut(i, j);
                    *cur = *cur + cy * next;
                }
            }
        }
        Self { b }
    }

    /// Enclosure of the value at the expansion point.
    pub fn center_value(&self) -> Interval<T> {
        self.b.get(0, 0)
    }

    /// Enclosure of `∂/∂x` and `∂/∂y` at the expansion point.
    pub fn center_gradient(&self) -> (Interval<T>, Interval<T>) {
        let d = self.b.degree();
        if d == 0 {
            return (Interval::zero(), Interval::zero());
        }
        (self.b.get(1, 0), self.b.get(0, 1))
    }

    /// Range enclosure over `|u| ≤ rx`, `|v| ≤ ry`.
    pub fn range(&self, rx: T, ry: T) -> Interval<T> {
        let d = self.b.degree();
        let xs = symmetric_powers(rx, d);
        let ys = symmetric_powers(ry, d);
        let mut acc = Interval::zero();
        for i in 0..=d {
            for j in 0..=d - i {
                let c = self.b.get(i, j);
                if i + j == 0 {
                    acc = acc + c;
                    continue;
                }
                acc = acc + c * monomial_range(&xs, &ys, i, j);
            }
        }
        acc
    }

    /// Range enclosures of `(∂/∂x, ∂/∂y)` over `|u| ≤ rx`, `|v| ≤ ry`.
    pub fn gradient_range(&self, rx: T, ry: T) -> (Interval<T>, Interval<T>) {
        let d = self.b.degree();
        let xs = symmetric_powers(rx, d);
        let ys = symmetric_powers(ry, d);
        let mut dx = Interval::zero();
        let mut dy = Interval::zero();
        for i in 0..=d {
            for j in 0..=d - i {
                let c = self.b.get(i, j);
                if i > 0 {
                    let k = Interval::point(from_usize::<T>(i));
                    dx = dx + c * k * monomial_range(&xs, &ys, i - 1, j);
                }
                if j > 0 {
                    let k = Interval::point(from_usize::<T>(j));
                    dy = dy + c * k * monomial_range(&xs, &ys, i, j - 1);
                }
            }
        }
        (dx, dy)
    }
}

/// Upper bounds on `r^k`, `k = 0..=d`.
fn symmetric_powers<T: Scalar>(r: T, d: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(d + 1);
    let mut p = T::one();
    for _ in 0..=d {
        out.push(p);
        p = (p * r).next_up();
    }
    out
}

fn monomial_range<T: Scalar>(xs: &[T], ys: &[T], i: usize, j: usize) -> Interval<T> {
    if i + j == 0 {
        return Interval::point(T::one());
    }
    let m = (xs[i] * ys[j]).next_up();
    if i % 2 == 0 && j % 2 == 0 {
        Interval::new(T::zero(), m)
    } else {
        Interval::symmetric(m)
    }
}
