//! Acceptance suite: one line per criterion, `cargo test --test acceptance -- --nocapture`.

mod common;

use std::time::{Duration, Instant};

use common::{corpus, origin};
use mixlens::census::{lens_range, point_mass_census, sweep_values};
use mixlens::families::{
    chebyshev_example, default_eps, ell, ell_eps, phi_t, product_family, rhie_preset, symmetric_power,
};
use mixlens::milnor::invariants;
use mixlens::symmetry::radial_prediction;
use mixlens::{
    beta, dehomogenize, homogenize, orbit_decompose, root_bound, solve, verify_ray_constraint,
    winding_beta, Complex, MixedPoly, RootInventory, SolverConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RHIE_LIMIT: Duration = Duration::from_secs(30);
const CHEBYSHEV_LIMIT: Duration = Duration::from_secs(120);
const RAY_TOL: f64 = 1e-8;
const EULER_TOL: f64 = 1e-9;
const ROUND_TRIPS: usize = 100;
const EULER_SAMPLES: usize = 50;
const CENSUS_SAMPLES: usize = 200;
const CENSUS_SEED: u64 = 20_241;

type Outcome = Result<String, String>;

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn count(f: &MixedPoly, skip_origin: bool) -> Result<(usize, RootInventory<f64>), String> {
    let mut inv = solve(f, &cfg()).map_err(|e| e.to_string())?;
    if skip_origin {
        inv = inv.without_point(origin());
    }
    let rho = inv.certified_rho().map_err(|e| e.to_string())?;
    Ok((rho, inv))
}

fn expect(name: &str, f: &MixedPoly, skip_origin: bool, want: usize) -> Result<(), String> {
    let (rho, _) = count(f, skip_origin).map_err(|e| format!("{name}: {e}"))?;
    if rho == want {
        Ok(())
    } else {
        Err(format!("{name}: rho = {rho}, expected {want}"))
    }
}

fn c1() -> Outcome {
    let mut times = Vec::new();
    for (k, want) in [(2, 5), (3, 10), (4, 15)] {
        let start = Instant::now();
        let f = rhie_preset(k).unwrap();
        let (rho, inv) = count(&f, false)?;
        let t = start.elapsed();
        if rho != want || !inv.unresolved_boxes.is_empty() || t > RHIE_LIMIT {
            return Err(format!("f{k}: rho = {rho}, {} unresolved, {t:?}", inv.unresolved_boxes.len()));
        }
        times.push(format!("f{k}={rho} ({:.2}s)", t.as_secs_f64()));
    }
    Ok(times.join(", "))
}

fn c2() -> Outcome {
    let mut runs = 0;
    for (n, m) in [(5, 1), (4, 1), (5, 2), (7, 3)] {
        for a in [0.3, 0.5, 0.7] {
            expect(&format!("ell({n},{m},{a})"), &ell(n, m, a).unwrap(), true, 3 * n as usize)?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs, rho = 3n"))
}

fn c3() -> Outcome {
    let mut runs = 0;
    for (n, m) in [(5, 4), (6, 4), (4, 2)] {
        for a in [0.3, 0.5] {
            expect(&format!("ell({n},{m},{a})"), &ell(n, m, a).unwrap(), true, 2 * n as usize)?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs, rho = 2n"))
}

fn eps_decade(pairs: &[(u32, u32)], factor: usize) -> Outcome {
    let mut runs = 0;
    for &(n, m) in pairs {
        let d = default_eps(n, m, 0.7);
        for eps in sweep_values(d / 10.0, d, 3, true).unwrap() {
            let name = format!("ell_eps({n},{m},0.7,{eps:.3e})");
            expect(&name, &ell_eps(n, m, 0.7, eps).unwrap(), false, factor * n as usize)?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs over eps in [d/10, d], rho = {factor}n"))
}

fn c4() -> Outcome {
    eps_decade(&[(5, 1), (5, 2), (7, 3)], 5)
}

fn c5() -> Outcome {
    eps_decade(&[(5, 4), (6, 4), (4, 2)], 3)
}

fn c6() -> Outcome {
    for m in 1..=3 {
        expect(&format!("f2(z^{m})"), &symmetric_power(m).unwrap(), false, 5 * m as usize)?;
    }
    Ok("rho = 5, 10, 15".into())
}

fn c7() -> Outcome {
    let mut runs = 0;
    for (k, base) in [(2, 5), (3, 10)] {
        for m in [2, 3] {
            for t in [1e-2, 1e-3] {
                let f = phi_t(&rhie_preset(k).unwrap(), m, t).unwrap();
                expect(&format!("phi_t(f{k},{m},{t})"), &f, false, base + m as usize - 1)?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} runs, rho = k+m-1"))
}

fn c8() -> Outcome {
    for a in 0..=2 {
        expect(&format!("f_{a}"), &product_family(3, 2, a).unwrap(), false, 1 + 2 * a as usize)?;
    }
    Ok("rho = 1, 3, 5".into())
}

fn c9() -> Outcome {
    let mut out = Vec::new();
    for n in [2u32, 3, 5] {
        let start = Instant::now();
        let (rho, inv) = count(&chebyshev_example(n, 10.0, 10.0).unwrap(), false)?;
        let t = start.elapsed();
        let inside = inv.roots.iter().all(|r| {
            r.center.re.abs() + r.radius < 1.0 && r.center.im.abs() + r.radius < 1.0
        });
        if rho != (n * n) as usize || !inside || (n == 5 && t > CHEBYSHEV_LIMIT) {
            return Err(format!("n = {n}: rho = {rho}, inside = {inside}, {t:?}"));
        }
        out.push(format!("n={n}: {rho} ({:.2}s)", t.as_secs_f64()));
    }
    Ok(out.join(", "))
}

fn c10() -> Outcome {
    let full = SolverConfig {
        count_multiplicity: true,
        ..cfg()
    };
    let mut checked = 0;
    for case in corpus() {
        let f = &case.f;
        let Ok(b) = beta(f) else { continue };
        let r = root_bound(f).map_err(|e| format!("{}: {e}", case.name))?;
        let w = winding_beta(f, r).map_err(|e| format!("{}: {e}", case.name))?;
        let inv = solve(f, &full).map_err(|e| format!("{}: {e}", case.name))?;
        if w != b || inv.signed_sum != b || !inv.certified {
            return Err(format!("{}: beta {b}, winding {w}, signed sum {}", case.name, inv.signed_sum));
        }
        let d = f.degrees().unwrap();
        if d.in_m && b != d.polar() {
            return Err(format!("{}: beta {b} != deg_z - deg_zbar = {}", case.name, d.polar()));
        }
        checked += 1;
    }
    Ok(format!("{checked} admissible polynomials"))
}

fn c11() -> Outcome {
    let mut runs = 0;
    let mut check = |name: String, n: u32, m: u32, a: f64, eps: f64, f: MixedPoly| -> Result<(), String> {
        let (rho, inv) = count(&f, eps == 0.0)?;
        let predicted = radial_prediction(n, m, a, eps).map_err(|e| format!("{name}: {e}"))?;
        if predicted != rho {
            return Err(format!("{name}: radial {predicted} vs solver {rho}"));
        }
        verify_ray_constraint(&inv, n, RAY_TOL).map_err(|e| format!("{name}: {e}"))?;
        orbit_decompose(&inv, n, RAY_TOL).map_err(|e| format!("{name}: {e}"))?;
        runs += 1;
        Ok(())
    };
    for (n, m, alist) in [
        (5, 1, &[0.3, 0.5, 0.7][..]),
        (4, 1, &[0.3, 0.5, 0.7]),
        (5, 2, &[0.3, 0.5, 0.7]),
        (7, 3, &[0.3, 0.5, 0.7]),
        (5, 4, &[0.3, 0.5]),
        (6, 4, &[0.3, 0.5]),
        (4, 2, &[0.3, 0.5]),
    ] {
        for &a in alist {
            check(format!("ell({n},{m},{a})"), n, m, a, 0.0, ell(n, m, a).unwrap())?;
        }
    }
    for (n, m) in [(5, 1), (5, 2), (7, 3), (5, 4), (6, 4), (4, 2)] {
        let d = default_eps(n, m, 0.7);
        for eps in sweep_values(d / 10.0, d, 3, true).unwrap() {
            check(format!("ell_eps({n},{m},{eps:.3e})"), n, m, 0.7, eps, ell_eps(n, m, 0.7, eps).unwrap())?;
        }
    }
    Ok(format!("{runs} runs, radial counts match, rays within {RAY_TOL:e}"))
}

fn c12() -> Outcome {
    let f2 = rhie_preset(2).unwrap();
    let r = invariants(&f2, 1, 1).map_err(|e| e.to_string())?;
    if (r.polar_degree, r.radial_degree, r.link_components, r.chi_m) != (1, 3, 5, Some(-3)) {
        return Err(format!("f2 report {r:?}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(CENSUS_SEED);
    let mut worst = 0.0f64;
    for _ in 0..ROUND_TRIPS {
        let n = rng.gen_range(1..=5u32);
        let m = rng.gen_range(0..n);
        let mut terms = vec![
            ((n, m), Complex::new(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0))),
            ((0, 0), Complex::new(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0))),
        ];
        for _ in 0..rng.gen_range(0..6) {
            let e = (rng.gen_range(0..=n), rng.gen_range(0..=m));
            terms.push((e, Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))));
        }
        let f = MixedPoly::from_terms(terms);
        for (p, q) in [(1, 1), (2, 1), (3, 2)] {
            let big = homogenize(&f, p, q).map_err(|e| e.to_string())?;
            if dehomogenize(&big).map_err(|e| e.to_string())? != f {
                return Err(format!("round trip failed for {f}"));
            }
            for _ in 0..EULER_SAMPLES {
                let z1 = Complex::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
                let z2 = Complex::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
                let d = big.euler_defect(rng.gen_range(0.2..2.0), rng.gen_range(0.0..6.3), z1, z2);
                worst = worst.max(d);
            }
        }
    }
    if worst > EULER_TOL {
        return Err(format!("Euler defect {worst:e}"));
    }
    Ok(format!("f2 (1,1): chi(M) = -3, links 5; {ROUND_TRIPS} round trips; Euler defect {worst:.1e}"))
}

fn c13() -> Outcome {
    let mut out = Vec::new();
    for n in [2usize, 3] {
        let samples = point_mass_census(n, CENSUS_SAMPLES, CENSUS_SEED + n as u64, &cfg())
            .map_err(|e| e.to_string())?;
        let allowed = lens_range(n);
        let mut hist = std::collections::BTreeMap::new();
        for s in &samples {
            if let Some(rho) = s.rho {
                if !allowed.contains(&rho) || (rho + n) % 2 != 1 {
                    return Err(format!("n = {n}: rho = {rho} for {:?}", s.config));
                }
                *hist.entry(rho).or_insert(0) += 1;
            }
        }
        let certified: usize = hist.values().sum();
        out.push(format!("n={n}: {certified}/{CENSUS_SAMPLES} certified {hist:?}"));
    }
    Ok(out.join("; "))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("rhie presets", c1),
        ("ell, n > 2m", c2),
        ("ell, 2m >= n", c3),
        ("ell_eps, n > 2m", c4),
        ("ell_eps, 2m >= n", c5),
        ("symmetric powers", c6),
        ("phi_t", c7),
        ("product family", c8),
        ("chebyshev example", c9),
        ("beta consistency", c10),
        ("symmetry oracle", c11),
        ("milnor invariants", c12),
        ("lens range census", c13),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:6.2}s] {name}: {detail}", i + 1),
            Err(detail) => {
                println!("criterion {:>2} FAIL [{secs:6.2}s] {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
