//! Krawczyk operator on the realified system `g = h = 0`.

use crate::interval::Interval;
use crate::realpair::TaylorForm;
use crate::scalar::Scalar;
use crate::winding::Enclosure;

/// Axis-aligned box given by two intervals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IBox<T> {
    pub x: Interval<T>,
    pub y: Interval<T>,
}

impl<T: Scalar> IBox<T> {
    pub fn around(cx: T, cy: T, rx: T, ry: T) -> Self {
        Self {
            x: Interval::new((cx - rx).next_down(), (cx + rx).next_up()),
            y: Interval::new((cy - ry).next_down(), (cy + ry).next_up()),
        }
    }

    pub fn center(&self) -> (T, T) {
        (self.x.mid(), self.y.mid())
    }

    pub fn radii(&self) -> (T, T) {
        (self.x.rad(), self.y.rad())
    }

    pub fn max_rad(&self) -> T {
        self.x.rad().max(self.y.rad())
    }

    pub fn interior_of(&self, other: &Self) -> bool {
        self.x.interior_of(&other.x) && self.y.interior_of(&other.y)
    }

    pub fn subset_of(&self, other: &Self) -> bool {
        self.x.subset_of(&other.x) && self.y.subset_of(&other.y)
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        Some(Self {
            x: self.x.intersect(&other.x)?,
            y: self.y.intersect(&other.y)?,
        })
    }

    pub fn hull(&self, other: &Self) -> Self {
        Self {
            x: self.x.hull(&other.x),
            y: self.y.hull(&other.y),
        }
    }

    pub fn inflate(&self, factor: T) -> Self {
        let (cx, cy) = self.center();
        let (rx, ry) = self.radii();
        Self::around(cx, cy, rx * factor, ry * factor)
    }
}

/// Taylor forms of `g` and `h` at a common expansion point.
pub struct LocalForms<T> {
    pub cx: T,
    pub cy: T,
    pub g: TaylorForm<T>,
    pub h: TaylorForm<T>,
}

impl<T: Scalar> LocalForms<T> {
    pub fn at(enc: &Enclosure<T>, cx: T, cy: T) -> Self {
        Self {
            cx,
            cy,
            g: TaylorForm::at(&enc.g, cx, cy),
            h: TaylorForm::at(&enc.h, cx, cy),
        }
    }

    /// Range of `(g, h)` over the box of half-widths `(rx, ry)` around the center.
    pub fn range(&self, rx: T, ry: T) -> (Interval<T>, Interval<T>) {
        (self.g.range(rx, ry), self.h.range(rx, ry))
    }

    /// Interval Jacobian determinant over the box of half-widths `(rx, ry)`.
    pub fn jacobian(&self, rx: T, ry: T) -> Interval<T> {
        let (gx, gy) = self.g.gradient_range(rx, ry);
        let (hx, hy) = self.h.gradient_range(rx, ry);
        gx * hy - gy * hx
    }

    /// Krawczyk image of the box of half-widths `(sx, sy)` around the center.
    /// `None` when the midpoint Jacobian is numerically singular.
    pub fn krawczyk(&self, sx: T, sy: T) -> Option<IBox<T>> {
        let (gx0, gy0) = self.g.center_gradient();
        let (hx0, hy0) = self.h.center_gradient();
        let (a, b, c, d) = (gx0.mid(), gy0.mid(), hx0.mid(), hy0.mid());
        let det = a * d - b * c;
        if det == T::zero() || !det.is_finite() {
            return None;
        }
        let y11 = Interval::point(d / det);
        let y12 = Interval::point(-b / det);
        let y21 = Interval::point(-c / det);
        let y22 = Interval::point(a / det);
        if [y11, y12, y21, y22].iter().any(|v| !v.lo().is_finite()) {
            return None;
        }
        let (gx, gy) = self.g.gradient_range(sx, sy);
        let (hx, hy) = self.h.gradient_range(sx, sy);
        let one = Interval::point(T::one());
        let m11 = one - (y11 * gx + y12 * hx);
        let m12 = -(y11 * gy + y12 * hy);
        let m21 = -(y21 * gx + y22 * hx);
        let m22 = one - (y21 * gy + y22 * hy);
        let fg = self.g.center_value();
        let fh = self.h.center_value();
        let dx = Interval::symmetric(sx);
        let dy = Interval::symmetric(sy);
        let kx = Interval::point(self.cx) - (y11 * fg + y12 * fh) + m11 * dx + m12 * dy;
        let ky = Interval::point(self.cy) - (y21 * fg + y22 * fh) + m21 * dx + m22 * dy;
        if !(kx.lo().is_finite() && kx.hi().is_finite() && ky.lo().is_finite() && ky.hi().is_finite()) {
            return None;
        }
        Some(IBox { x: kx, y: ky })
    }
}

/// Outcome of the Krawczyk test on a region.
pub enum Krawczyk<T> {
    /// Exactly one root in `unique`; it lies in `tight`.
    Unique { tight: IBox<T>, unique: IBox<T> },
    /// No root in the region.
    Empty,
    Inconclusive,
}

/// Krawczyk test on `region`, followed by contraction of the enclosure down to
/// relative radius `tol` when it succeeds.
pub fn certify<T: Scalar>(enc: &Enclosure<T>, region: IBox<T>, tol: T) -> Krawczyk<T> {
    let (cx, cy) = region.center();
    let (sx, sy) = region.radii();
    let forms = LocalForms::at(enc, cx, cy);
    certify_with(enc, &forms, region, sx, sy, tol)
}

pub(crate) fn certify_with<T: Scalar>(
    enc: &Enclosure<T>,
    forms: &LocalForms<T>,
    region: IBox<T>,
    sx: T,
    sy: T,
    tol: T,
) -> Krawczyk<T> {
    let Some(k) = forms.krawczyk(sx, sy) else {
        return Krawczyk::Inconclusive;
    };
    if k.intersect(&region).is_none() {
        return Krawczyk::Empty;
    }
    if !k.interior_of(&region) {
        return Krawczyk::Inconclusive;
    }
    let mut tight = k;
    for _ in 0..60 {
        let (cx, cy) = tight.center();
        let scale = (cx.abs() + cy.abs()).max(T::min_positive_value());
        if tight.max_rad() <= tol * scale {
            break;
        }
        let (rx, ry) = tight.radii();
        let local = LocalForms::at(enc, cx, cy);
        let Some(next) = local.krawczyk(rx, ry).and_then(|k| k.intersect(&tight)) else {
            break;
        };
        let shrink = next.max_rad() < tight.max_rad() * T::lit(0.9);
        tight = next;
        if !shrink {
            break;
        }
    }
    Krawczyk::Unique {
        tight,
        unique: region,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mixedpoly::MixedPolynomial;

    #[test]
    fn certifies_simple_root_of_cubic_mixed_equation() {
        // z^2 z̄ - 1 has the single root z = 1
        let f: MixedPolynomial<f64> = "z^2 zb - 1".parse().unwrap();
        let enc = Enclosure::new(&f);
        match certify(&enc, IBox::around(1.01, 0.01, 0.03, 0.03), 1e-12) {
            Krawczyk::Unique { tight, .. } => {
                assert!(tight.x.contains(1.0) && tight.y.contains(0.0));
                assert!(tight.max_rad() < 1e-11);
            }
            _ => panic!("expected certification"),
        }
        assert!(matches!(
            certify(&enc, IBox::around(-1.0, 0.0, 0.1, 0.1), 1e-12),
            Krawczyk::Empty | Krawczyk::Inconclusive
        ));
    }
}
