mod common;

use common::{corpus, origin};
use mixlens::{solve, Complex, MixedPoly, SolverConfig};

type C = Complex<f64>;

fn eval(terms: &[((u32, u32), C)], z: C) -> C {
    let zb = z.conj();
    terms.iter().fold(C::new(0.0, 0.0), |acc, &((nu, mu), c)| {
        let mut t = c;
        for _ in 0..nu {
            t *= z;
        }
        for _ in 0..mu {
            t *= zb;
        }
        acc + t
    })
}

fn scale(terms: &[((u32, u32), C)], z: C) -> f64 {
    terms
        .iter()
        .map(|&((nu, mu), c)| c.norm() * z.norm().powi((nu + mu) as i32))
        .sum()
}

/// Real Jacobian of `(Re f, Im f)` by central differences.
fn jacobian(terms: &[((u32, u32), C)], z: C) -> [[f64; 2]; 2] {
    let h = 1e-7 * z.norm().max(1e-3);
    let dx = (eval(terms, z + h) - eval(terms, z - h)) / (2.0 * h);
    let dy = (eval(terms, z + C::new(0.0, h)) - eval(terms, z - C::new(0.0, h))) / (2.0 * h);
    [[dx.re, dy.re], [dx.im, dy.im]]
}

fn newton_step(terms: &[((u32, u32), C)], z: C, fz: C) -> Option<C> {
    let j = jacobian(terms, z);
    let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
    if det == 0.0 || !det.is_finite() {
        return None;
    }
    let sx = (j[1][1] * fz.re - j[0][1] * fz.im) / det;
    let sy = (-j[1][0] * fz.re + j[0][0] * fz.im) / det;
    Some(C::new(sx, sy))
}

/// Converged point and the length of the next Newton step as its error estimate.
fn damped_newton(terms: &[((u32, u32), C)], mut z: C) -> Option<(C, f64)> {
    let mut fz = eval(terms, z);
    for _ in 0..80 {
        let step = newton_step(terms, z, fz)?;
        if fz.norm() <= 1e-13 * scale(terms, z).max(1e-300) {
            return Some((z, step.norm()));
        }
        let mut lambda = 1.0;
        loop {
            let w = z - step * lambda;
            let fw = eval(terms, w);
            if fw.norm() < fz.norm() {
                z = w;
                fz = fw;
                break;
            }
            lambda *= 0.5;
            if lambda < 1e-6 {
                return None;
            }
        }
    }
    None
}

/// Roots found by Newton from square grids on the search box and the unit
/// square plus log-polar seeds near the origin.
fn sweep(f: &MixedPoly, r: f64) -> Vec<(C, f64)> {
    let terms: Vec<_> = f.terms().collect();
    let mut seeds = Vec::new();
    let k = 90;
    for i in 0..k {
        for j in 0..k {
            let x = -r + 2.0 * r * (i as f64 + 0.5) / k as f64;
            let y = -r + 2.0 * r * (j as f64 + 0.5) / k as f64;
            seeds.push(C::new(x, y));
        }
    }
    let k = 150;
    for i in 0..k {
        for j in 0..k {
            let x = -1.0 + 2.0 * (i as f64 + 0.5) / k as f64;
            let y = -1.0 + 2.0 * (j as f64 + 0.5) / k as f64;
            seeds.push(C::new(x, y));
        }
    }
    for i in 0..40 {
        let rad = r * 10f64.powf(-6.0 * i as f64 / 40.0);
        for j in 0..28 {
            seeds.push(C::from_polar(rad, (j as f64 + 0.25) * std::f64::consts::TAU / 28.0));
        }
    }
    let mut roots: Vec<(C, f64)> = Vec::new();
    for s in seeds {
        if let Some((z, err)) = damped_newton(&terms, s) {
            let fresh = roots
                .iter()
                .all(|(w, e)| (w - z).norm() > 1e-7 * z.norm().max(1e-3) + 4.0 * (e + err));
            if z.re.abs() <= r && z.im.abs() <= r && fresh {
                roots.push((z, err));
            }
        }
    }
    roots
}

#[test]
fn newton_sweep_reproduces_certified_roots() {
    let cfg = SolverConfig::default();
    for case in corpus() {
        let mut inv = solve(&case.f, &cfg).unwrap();
        let r = inv.search_box.x1;
        let mut found = sweep(&case.f, r);
        if case.skip_origin {
            inv = inv.without_point(origin());
            found.retain(|(z, _)| z.norm() > 1e-9);
        }
        for (z, err) in &found {
            let hits = inv
                .roots
                .iter()
                .filter(|c| (c.center - z).norm() <= c.radius + 4.0 * err + 1e-12 * z.norm().max(1e-3))
                .count();
            let near = inv.roots.iter().map(|c| (c.center - z).norm()).fold(f64::INFINITY, f64::min);
            assert_eq!(hits, 1, "{}: Newton root {z} not matched (nearest {near:e})", case.name);
        }
        assert_eq!(found.len(), inv.rho, "{}: Newton found {} roots", case.name, found.len());
        for root in &inv.roots {
            let terms: Vec<_> = case.f.terms().collect();
            assert!(root.residual <= cfg.tol * scale(&terms, root.center).max(1.0), "{}", case.name);
        }
    }
}

#[test]
fn jacobian_matches_finite_differences() {
    let f: MixedPoly = "z^2 zb".parse().unwrap();
    assert!((f.wirtinger_jacobian(C::new(1.0, 0.0)) - 3.0).abs() < 1e-12);
    for case in corpus().into_iter().take(12) {
        let terms: Vec<_> = case.f.terms().collect();
        for k in 0..10 {
            let z = C::from_polar(0.2 + 0.15 * k as f64, 0.7 * k as f64 + 0.3);
            let j = jacobian(&terms, z);
            let fd = j[0][0] * j[1][1] - j[0][1] * j[1][0];
            let w = case.f.wirtinger_jacobian(z);
            assert!((fd - w).abs() <= 1e-6 * w.abs().max(1.0), "{}: {fd} vs {w}", case.name);
        }
    }
}
