mod common;

use common::corpus;
use mixlens::families::rhie_preset;
use mixlens::milnor::invariants_with_rho;
use mixlens::{dehomogenize, homogenize, invariants, Complex, MixedPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type C = Complex<f64>;

const WEIGHTS: [(u32, u32); 3] = [(1, 1), (2, 1), (3, 2)];

/// Random member of `M(n+m; n, m)` with nonzero constant term.
fn random_member(rng: &mut ChaCha8Rng) -> MixedPoly {
    let n = rng.gen_range(1..=5u32);
    let m = rng.gen_range(0..n);
    let mut terms = vec![
        ((n, m), C::new(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0))),
        ((0, 0), C::new(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0))),
    ];
    for _ in 0..rng.gen_range(0..6) {
        let e = (rng.gen_range(0..=n), rng.gen_range(0..=m));
        terms.push((e, C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))));
    }
    MixedPoly::from_terms(terms)
}

#[test]
fn homogenize_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let f = random_member(&mut rng);
        for (p, q) in WEIGHTS {
            let big = homogenize(&f, p, q).unwrap();
            let d = f.degrees().unwrap();
            let (n, m) = (d.deg_z as i64, d.deg_zbar as i64);
            assert_eq!(big.polar_degree, (n - m) * (p * q) as i64);
            assert_eq!(big.radial_degree, (n + m) * (p * q) as i64);
            assert_eq!(dehomogenize(&big).unwrap(), f);
            let again = homogenize(&dehomogenize(&big).unwrap(), p, q).unwrap();
            assert_eq!(again, big);
        }
    }
}

#[test]
fn euler_identity_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut polys: Vec<MixedPoly> = (0..10).map(|_| random_member(&mut rng)).collect();
    polys.extend(corpus().into_iter().map(|c| c.f).filter(|f| f.degrees().unwrap().in_m).take(10));
    for f in polys {
        for (p, q) in WEIGHTS {
            let big = homogenize(&f, p, q).unwrap();
            for _ in 0..50 {
                let r = rng.gen_range(0.2..2.0);
                let theta = rng.gen_range(0.0..std::f64::consts::TAU);
                let z1 = C::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
                let z2 = C::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
                let defect = big.euler_defect(r, theta, z1, z2);
                assert!(defect < 1e-9, "defect {defect}");
            }
        }
    }
}

#[test]
fn f2_reports() {
    let f2 = rhie_preset(2).unwrap();
    let r = invariants(&f2, 1, 1).unwrap();
    assert_eq!((r.polar_degree, r.radial_degree, r.rho, r.link_components), (1, 3, 5, 5));
    assert_eq!((r.chi_m, r.chi_mg), (Some(-3), Some(-3)));
    assert_eq!(invariants(&f2, 2, 1).unwrap().chi_m, Some(-7));
    let g: MixedPoly = "z^3 zb^2 - 1".parse().unwrap();
    let r = invariants(&g, 1, 1).unwrap();
    assert_eq!((r.chi_m, r.link_components), (Some(1), 1));
    let big = homogenize(&f2, 1, 1).unwrap();
    let expected = [
        ((0, 0, 2, 1), C::new(1.0 / 30.0, 0.0)),
        ((0, 1, 2, 0), C::new(-0.5, 0.0)),
        ((1, 0, 1, 1), C::new(-1.0, 0.0)),
        ((2, 1, 0, 0), C::new(1.0, 0.0)),
    ];
    assert_eq!(big.terms().collect::<Vec<_>>(), expected);
}

#[test]
fn unit_weight_formulas_coincide_and_separate() {
    let mut seen = std::collections::BTreeMap::new();
    for case in corpus() {
        let d = case.f.degrees().unwrap();
        if !d.in_m || d.polar() <= 0 {
            continue;
        }
        let r = invariants_with_rho(&case.f, 1, 1, case.rho).unwrap();
        if r.convenient {
            assert_eq!(r.chi_m, r.chi_mg, "{}", case.name);
        } else {
            assert_eq!((r.chi_m, r.chi_mg), (None, None));
        }
        seen.insert(case.rho, r.link_components);
    }
    for (rho, links) in &seen {
        assert_eq!(rho, links);
    }
    assert!(seen.len() > 5);
}
