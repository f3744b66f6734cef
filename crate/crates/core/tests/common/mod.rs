#![allow(dead_code)]

use mixlens::families::{
    chebyshev_example, default_eps, ell, ell_eps, phi_t, product_family, rhie_preset, symmetric_power,
};
use mixlens::{Complex, MixedPoly};

pub struct Case {
    pub name: String,
    pub f: MixedPoly,
    pub rho: usize,
    /// The root at the origin is not counted.
    pub skip_origin: bool,
}

fn case(name: String, f: MixedPoly, rho: usize) -> Case {
    Case { name, f, rho, skip_origin: false }
}

/// Every polynomial of the acceptance families with its expected root count.
pub fn corpus() -> Vec<Case> {
    let mut out = Vec::new();
    for (k, rho) in [(2, 5), (3, 10), (4, 15)] {
        out.push(case(format!("rhie_preset({k})"), rhie_preset(k).unwrap(), rho));
    }
    for (n, m) in [(5, 1), (4, 1), (5, 2), (7, 3)] {
        for a in [0.3, 0.5, 0.7] {
            let mut c = case(format!("ell({n},{m},{a})"), ell(n, m, a).unwrap(), 3 * n as usize);
            c.skip_origin = true;
            out.push(c);
        }
    }
    for (n, m) in [(5, 4), (6, 4), (4, 2)] {
        for a in [0.3, 0.5] {
            let mut c = case(format!("ell({n},{m},{a})"), ell(n, m, a).unwrap(), 2 * n as usize);
            c.skip_origin = true;
            out.push(c);
        }
    }
    for (n, m, factor) in [(5, 1, 5), (5, 2, 5), (7, 3, 5), (5, 4, 3), (6, 4, 3), (4, 2, 3)] {
        let d = default_eps(n, m, 0.7);
        for eps in [d, d / 10.0] {
            out.push(case(
                format!("ell_eps({n},{m},0.7,{eps:e})"),
                ell_eps(n, m, 0.7, eps).unwrap(),
                factor * n as usize,
            ));
        }
    }
    for m in 1..=3 {
        out.push(case(format!("symmetric_power({m})"), symmetric_power(m).unwrap(), 5 * m as usize));
    }
    for (k, rho) in [(2, 5), (3, 10)] {
        for m in [2, 3] {
            for t in [1e-2, 1e-3] {
                let f = phi_t(&rhie_preset(k).unwrap(), m, t).unwrap();
                out.push(case(format!("phi_t(f{k},{m},{t})"), f, rho + m as usize - 1));
            }
        }
    }
    for a in 0..=2 {
        out.push(case(format!("product(3,2,{a})"), product_family(3, 2, a).unwrap(), 1 + 2 * a as usize));
    }
    for n in [2, 3, 5] {
        out.push(case(format!("chebyshev({n})"), chebyshev_example(n, 10.0, 10.0).unwrap(), (n * n) as usize));
    }
    out
}

pub fn origin() -> Complex<f64> {
    Complex::new(0.0, 0.0)
}
