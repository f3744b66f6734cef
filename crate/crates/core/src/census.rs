//! Parameter sweeps and random point-mass censuses.

use std::time::Instant;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{from_point_masses, FamilyKind, LensFamilySpec};
use crate::mixedpoly::MixedPolynomial;
use crate::signed_index::beta;
use crate::solver::{solve, RootInventory, SolverConfig};

/// Solves `f` and, for the `ell` family, drops the root at the origin.
pub fn family_inventory(
    kind: FamilyKind,
    f: &MixedPolynomial<f64>,
    cfg: &SolverConfig,
) -> Result<RootInventory<f64>> {
    let inv = solve(f, cfg)?;
    Ok(match kind {
        FamilyKind::Ell => inv.without_point(Complex::new(0.0, 0.0)),
        _ => inv,
    })
}

/// Sets a numeric parameter of a family by name.
pub fn set_param(spec: &mut LensFamilySpec, name: &str, value: f64) -> Result<()> {
    let as_int = || -> Result<u32> {
        if value >= 0.0 && value.fract() == 0.0 {
            Ok(value as u32)
        } else {
            Err(Error::BadParameters(format!("`{name}` must be a nonnegative integer, got {value}")))
        }
    };
    match name {
        "a" => spec.a = Some(value),
        "b" => spec.b = Some(value),
        "eps" => spec.eps = Some(value),
        "t" => spec.t = Some(value),
        "n" => spec.n = Some(as_int()?),
        "m" => spec.m = Some(as_int()?),
        "preset" => spec.preset = Some(as_int()?),
        _ => return Err(Error::BadParameters(format!("unknown sweep parameter `{name}`"))),
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub param: f64,
    pub rho: Option<usize>,
    pub beta: Option<i64>,
    pub certified: bool,
    pub seconds: f64,
}

impl CensusRow {
    pub const CSV_HEADER: &'static str = "param,rho,beta,certified,seconds";

    pub fn to_csv(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_default();
        format!(
            "{},{},{},{},{:.6}",
            self.param,
            opt(self.rho.map(|r| r.to_string())),
            opt(self.beta.map(|b| b.to_string())),
            self.certified,
            self.seconds
        )
    }
}

/// Evenly spaced values from `lo` to `hi`; geometric spacing when `log`.
pub fn sweep_values(lo: f64, hi: f64, steps: usize, log: bool) -> Result<Vec<f64>> {
    if steps == 0 || !lo.is_finite() || !hi.is_finite() || (log && (lo <= 0.0 || hi <= 0.0)) {
        return Err(Error::BadParameters("invalid sweep range".into()));
    }
    if steps == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..steps)
        .map(|k| {
            let s = k as f64 / (steps - 1) as f64;
            if log {
                let v = (lo.ln() + s * (hi.ln() - lo.ln())).exp();
                format!("{v:.12e}").parse().unwrap_or(v)
            } else {
                lo + s * (hi - lo)
            }
        })
        .collect())
}

/// One row per parameter value. Solver failures yield uncertified rows.
pub fn sweep(
    spec: &LensFamilySpec,
    param: &str,
    values: &[f64],
    cfg: &SolverConfig,
) -> Result<Vec<CensusRow>> {
    values
        .iter()
        .map(|&v| {
            let mut s = spec.clone();
            set_param(&mut s, param, v)?;
            let start = Instant::now();
            let f = s.elaborate()?;
            let inv = family_inventory(s.kind, &f, cfg);
            let rho = inv.as_ref().ok().and_then(|i| i.certified_rho().ok());
            Ok(CensusRow {
                param: v,
                rho,
                beta: beta(&f).ok(),
                certified: rho.is_some(),
                seconds: start.elapsed().as_secs_f64(),
            })
        })
        .collect()
}

/// Masses and positions of a point-mass lens.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointMassConfig {
    pub sigmas: Vec<f64>,
    pub alphas: Vec<[f64; 2]>,
}

impl PointMassConfig {
    /// Masses in `[0.1, 1]`, positions in the unit disk at mutual distance at
    /// least `0.05`.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut alphas: Vec<[f64; 2]> = Vec::with_capacity(n);
        while alphas.len() < n {
            let (x, y) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            if x * x + y * y >= 1.0 {
                continue;
            }
            if alphas.iter().all(|&[u, v]| (u - x).hypot(v - y) >= 0.05) {
                alphas.push([x, y]);
            }
        }
        let sigmas = (0..n).map(|_| rng.gen_range(0.1..1.0)).collect();
        Self { sigmas, alphas }
    }

    pub fn polynomial(&self) -> Result<MixedPolynomial<f64>> {
        let s: Vec<_> = self.sigmas.iter().map(|&x| Complex::new(x, 0.0)).collect();
        let a: Vec<_> = self.alphas.iter().map(|&[x, y]| Complex::new(x, y)).collect();
        from_point_masses(&s, &a)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointMassSample {
    pub config: PointMassConfig,
    pub rho: Option<usize>,
    pub certified: bool,
    pub seconds: f64,
}

/// `samples` random `n`-point lenses drawn from a seeded generator.
pub fn point_mass_census(n: usize, samples: usize, seed: u64, cfg: &SolverConfig) -> Result<Vec<PointMassSample>> {
    if n == 0 {
        return Err(Error::BadParameters("need at least one point mass".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let configs: Vec<_> = (0..samples).map(|_| PointMassConfig::random(n, &mut rng)).collect();
    configs
        .into_iter()
        .map(|config| {
            let start = Instant::now();
            let f = config.polynomial()?;
            let rho = solve(&f, cfg).ok().and_then(|i| i.certified_rho().ok());
            Ok(PointMassSample {
                config,
                rho,
                certified: rho.is_some(),
                seconds: start.elapsed().as_secs_f64(),
            })
        })
        .collect()
}

/// Possible root counts `n−1, n+1, …, 5n−5` of an `n`-point lens.
pub fn lens_range(n: usize) -> Vec<usize> {
    (n.saturating_sub(1)..=(5 * n).saturating_sub(5)).step_by(2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_values() {
        assert_eq!(lens_range(2), vec![1, 3, 5]);
        assert_eq!(lens_range(3), vec![2, 4, 6, 8, 10]);
        assert_eq!(sweep_values(1.0, 3.0, 3, false).unwrap(), vec![1.0, 2.0, 3.0]);
        let v = sweep_values(1e-4, 1e-2, 3, true).unwrap();
        assert!((v[1] - 1e-3).abs() < 1e-15);
        assert!(sweep_values(0.0, 1.0, 2, true).is_err());
    }

    #[test]
    fn seeded_configs_repeat() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(PointMassConfig::random(3, &mut a), PointMassConfig::random(3, &mut b));
    }

    #[test]
    fn product_sweep_over_a() {
        let mut spec = LensFamilySpec::new(FamilyKind::Product);
        spec.n = Some(3);
        spec.m = Some(2);
        let rows = sweep(&spec, "a", &[0.0, 1.0, 2.0], &SolverConfig::default()).unwrap();
        let rhos: Vec<_> = rows.iter().map(|r| r.rho).collect();
        assert_eq!(rhos, vec![Some(1), Some(3), Some(5)]);
        assert!(rows[0].to_csv().starts_with("0,1,1,true,"));
    }
}
