//! SVG plots of the curves `Re f = 0` and `Im f = 0` with root markers.

use std::fmt::Write;

use num_complex::Complex;

use crate::mixedpoly::MixedPolynomial;
use crate::solver::{CertifiedRoot, Rect};

pub const DEFAULT_RESOLUTION: usize = 800;

/// Renders `Re f = 0` in green, `Im f = 0` in red and the roots as black
/// dots over `rect`, contouring on a `resolution × resolution` grid.
pub fn render(
    f: &MixedPolynomial<f64>,
    rect: &Rect<f64>,
    roots: &[CertifiedRoot<f64>],
    resolution: usize,
) -> String {
    let res = resolution.max(2);
    let (w, h) = (rect.x1 - rect.x0, rect.y1 - rect.y0);
    let size = res as f64;
    let values: Vec<Complex<f64>> = (0..=res)
        .flat_map(|j| {
            (0..=res).map(move |i| {
                Complex::new(
                    rect.x0 + w * i as f64 / size,
                    rect.y0 + h * j as f64 / size,
                )
            })
        })
        .map(|z| f.evaluate(z))
        .collect();
    let re: Vec<f64> = values.iter().map(|v| v.re).collect();
    let im: Vec<f64> = values.iter().map(|v| v.im).collect();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{res}" height="{res}" viewBox="0 0 {res} {res}">"#
    );
    let _ = writeln!(out, r#"<rect width="{res}" height="{res}" fill="white"/>"#);
    for (field, color) in [(&re, "green"), (&im, "red")] {
        let path = contour(field, res);
        if !path.is_empty() {
            let _ = writeln!(out, r#"<path d="{path}" stroke="{color}" stroke-width="1" fill="none"/>"#);
        }
    }
    for root in roots {
        let px = (root.center.re - rect.x0) / w * size;
        let py = size - (root.center.im - rect.y0) / h * size;
        let _ = writeln!(out, r#"<circle cx="{px:.2}" cy="{py:.2}" r="3" fill="black"/>"#);
    }
    out.push_str("</svg>\n");
    out
}

/// Marching squares on grid values indexed `j * (res + 1) + i`; pixel rows
/// run downward so `y` is flipped.
fn contour(v: &[f64], res: usize) -> String {
    let stride = res + 1;
    let size = res as f64;
    let at = |i: usize, j: usize| v[j * stride + i];
    let mut d = String::new();
    let mut emit = |a: (f64, f64), b: (f64, f64)| {
        let _ = write!(d, "M{:.2} {:.2}L{:.2} {:.2}", a.0, size - a.1, b.0, size - b.1);
    };
    for j in 0..res {
        for i in 0..res {
            // corners counterclockwise from bottom left
            let c = [at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)];
            let pos = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            let mut cuts = Vec::with_capacity(4);
            for e in 0..4 {
                let (a, b) = (c[e], c[(e + 1) % 4]);
                if (a >= 0.0) != (b >= 0.0) {
                    let s = a / (a - b);
                    let (pa, pb) = (pos[e], pos[(e + 1) % 4]);
                    cuts.push((
                        pa.0 as f64 + s * (pb.0 as f64 - pa.0 as f64),
                        pa.1 as f64 + s * (pb.1 as f64 - pa.1 as f64),
                    ));
                }
            }
            match cuts.len() {
                2 => emit(cuts[0], cuts[1]),
                4 => {
                    let mid = c.iter().sum::<f64>() / 4.0;
                    if (mid >= 0.0) == (c[0] >= 0.0) {
                        emit(cuts[0], cuts[3]);
                        emit(cuts[1], cuts[2]);
                    } else {
                        emit(cuts[0], cuts[1]);
                        emit(cuts[2], cuts[3]);
                    }
                }
                _ => {}
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_through_the_origin() {
        let f: MixedPolynomial<f64> = "z".parse().unwrap();
        let svg = render(&f, &Rect::square(1.0), &[], 4);
        assert!(svg.contains(r#"stroke="green""#));
        assert!(svg.contains(r#"stroke="red""#));
        // Re z = 0 is the vertical line x = 2
        assert!(svg.contains("M2.00 4.00L2.00 3.00"));
        assert_eq!(svg, render(&f, &Rect::square(1.0), &[], 4));
    }
}
