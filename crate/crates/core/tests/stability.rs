mod common;

use common::{corpus, origin};
use mixlens::families::rhie_preset;
use mixlens::{solve, Complex, MixedPoly32, SolverConfig};

#[test]
fn deeper_and_tighter_runs_agree() {
    let base = SolverConfig::default();
    let deep = SolverConfig {
        max_depth: 2 * base.max_depth,
        ..base
    };
    let tight = SolverConfig {
        tol: base.tol / 2.0,
        ..base
    };
    for case in corpus().into_iter().step_by(3) {
        let counts: Vec<_> = [base, deep, tight]
            .iter()
            .map(|cfg| {
                let mut inv = solve(&case.f, cfg).unwrap();
                if case.skip_origin {
                    inv = inv.without_point(origin());
                }
                inv.certified_rho()
            })
            .collect();
        assert!(counts.iter().all(|c| *c == Ok(case.rho)), "{}: {counts:?}", case.name);
    }
}

#[test]
fn single_precision_solver() {
    let f: MixedPoly32 = rhie_preset(2).unwrap().cast();
    let cfg = SolverConfig {
        tol: 1e-5,
        ..SolverConfig::default()
    };
    let inv = solve(&f, &cfg).unwrap();
    assert_eq!(inv.certified_rho(), Ok(5));
    assert_eq!(inv.signed_sum, 1);
    assert!(inv.roots.iter().all(|r| f.evaluate(r.center).norm() < 1e-4));
    let z: Complex<f32> = inv.roots[0].center;
    assert!(z.norm() < 2.0);
}
