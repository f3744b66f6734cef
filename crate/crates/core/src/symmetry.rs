//! Ray confinement, ℤ/nℤ orbits and radial equations of the ℓ families.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::solver::RootInventory;
use crate::sturm::sturm_count;

/// The two unions of rays making up `ℒ(2n)`: `L(n) = {z^n ≥ 0}` and
/// `L(n)′ = {z^n ≤ 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "L")]
    L,
    #[serde(rename = "L'")]
    LPrime,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::L => "L",
            Branch::LPrime => "L'",
        })
    }
}

impl FromStr for Branch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" => Ok(Branch::L),
            "L'" | "l'" | "Lprime" | "lprime" | "L_prime" => Ok(Branch::LPrime),
            _ => Err(Error::Parse(format!("unknown branch `{s}`"))),
        }
    }
}

/// Number of rays of `branch` covered by one real line through the origin,
/// that is, the weight of each real root of the radial equation.
pub fn branch_multiplicity(n: u32, branch: Branch) -> usize {
    match (n % 2, branch) {
        (1, Branch::L) => n as usize,
        (1, Branch::LPrime) => 0,
        (_, _) => n as usize / 2,
    }
}

/// Real polynomial whose nonzero real roots `t` give the roots `ζ t` of the
/// family on the rays of a branch, with `ζ = 1` on `L(n)` and `ζ = e^{iπ/n}`
/// on `L(n)′`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadialEquation {
    pub n: u32,
    pub m: u32,
    pub a: f64,
    pub eps: f64,
    pub branch: Branch,
    /// Ascending coefficients.
    pub coeffs: Vec<f64>,
    /// Interval of the real line searched; the origin is never a root.
    pub range: (f64, f64),
}

impl RadialEquation {
    pub fn multiplicity(&self) -> usize {
        branch_multiplicity(self.n, self.branch)
    }

    /// Exact number of real roots.
    pub fn real_roots(&self) -> Result<usize> {
        sturm_count(&self.coeffs, self.range.0, self.range.1)
    }

    /// Number of family roots accounted for by this branch.
    pub fn family_roots(&self) -> Result<usize> {
        Ok(self.real_roots()? * self.multiplicity())
    }

    /// Unit direction of the ray carrying the positive real roots.
    pub fn direction(&self) -> Complex<f64> {
        match self.branch {
            Branch::L => Complex::new(1.0, 0.0),
            Branch::LPrime => Complex::from_polar(1.0, std::f64::consts::PI / self.n as f64),
        }
    }
}

impl fmt::Display for RadialEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let power = match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            };
            match (k, mag == 1.0) {
                (0, _) => write!(f, "{mag:e}")?,
                (_, true) => f.write_str(&power)?,
                _ => write!(f, "{mag:e} {power}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn add(coeffs: &mut Vec<f64>, k: usize, c: f64) {
    if coeffs.len() <= k {
        coeffs.resize(k + 1, 0.0);
    }
    coeffs[k] += c;
}

/// Radial equation of `ell(n, m, a)` (`eps = 0`) or `ell_eps(n, m, a, eps)`.
pub fn radial_equation(n: u32, m: u32, a: f64, eps: f64, branch: Branch) -> Result<RadialEquation> {
    if !(n > m && m > 0) {
        return Err(Error::BadParameters(format!("need n > m > 0, got n={n}, m={m}")));
    }
    if !(a > 0.0 && a.is_finite()) || !(eps >= 0.0 && eps.is_finite()) {
        return Err(Error::BadParameters(format!("need a > 0 and eps >= 0, got a={a}, eps={eps}")));
    }
    let an = a.powi(n as i32);
    let (nn, mm) = (n as usize, m as usize);
    let mut c = Vec::new();
    match (eps > 0.0, nn > 2 * mm, branch) {
        (false, true, Branch::L) => {
            add(&mut c, nn, 1.0);
            add(&mut c, nn - 2 * mm, -1.0);
            add(&mut c, 0, -an);
        }
        (false, true, Branch::LPrime) => {
            add(&mut c, nn, 1.0);
            add(&mut c, nn - 2 * mm, -1.0);
            add(&mut c, 0, an);
        }
        (false, false, Branch::L) => {
            add(&mut c, 2 * mm, 1.0);
            add(&mut c, 2 * mm - nn, -an);
            add(&mut c, 0, -1.0);
        }
        (false, false, Branch::LPrime) => {
            add(&mut c, 2 * mm, 1.0);
            add(&mut c, 2 * mm - nn, an);
            add(&mut c, 0, -1.0);
        }
        (true, _, Branch::L) => {
            add(&mut c, nn + 2 * mm, 1.0);
            add(&mut c, 2 * mm, -an);
            add(&mut c, nn, -(1.0 + eps));
            add(&mut c, 0, eps * an);
        }
        (true, _, Branch::LPrime) => {
            add(&mut c, nn + 2 * mm, 1.0);
            add(&mut c, 2 * mm, an);
            add(&mut c, nn, -(1.0 + eps));
            add(&mut c, 0, -eps * an);
        }
    }
    Ok(RadialEquation {
        n,
        m,
        a,
        eps,
        branch,
        coeffs: c,
        range: (f64::NEG_INFINITY, f64::INFINITY),
    })
}

/// Root count of the ℓ family predicted by the radial equations of both
/// branches, origin excluded.
pub fn radial_prediction(n: u32, m: u32, a: f64, eps: f64) -> Result<usize> {
    let mut total = 0;
    for branch in [Branch::L, Branch::LPrime] {
        let eq = radial_equation(n, m, a, eps, branch)?;
        if eq.multiplicity() > 0 {
            total += eq.family_roots()?;
        }
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayAssignment {
    /// Index into the inventory's root list.
    pub root: usize,
    /// Ray `ℝ₊(kπ/n)`, `0 ≤ k < 2n`.
    pub ray: u32,
    pub branch: Branch,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Orbit {
    pub members: Vec<usize>,
    pub orientation: i8,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayConfiguration {
    pub n: u32,
    pub assignments: Vec<RayAssignment>,
    /// Roots whose enclosure contains the origin; these lie on every ray.
    pub at_origin: Vec<usize>,
}

impl RayConfiguration {
    pub fn on_branch(&self, branch: Branch) -> usize {
        self.assignments.iter().filter(|a| a.branch == branch).count()
    }

    pub fn ray_direction(&self, k: u32) -> Complex<f64> {
        Complex::from_polar(1.0, k as f64 * std::f64::consts::PI / self.n as f64)
    }
}

fn to_c64<T: Scalar>(z: Complex<T>) -> Complex<f64> {
    Complex::new(z.re.to_f64_lossy(), z.im.to_f64_lossy())
}

/// Assigns every root to one of the `2n` rays of `ℒ(2n)`, checking
/// `|Im z^{2n}| ≤ tol |z|^{2n}` and `Re z^{2n} > 0`.
pub fn verify_ray_constraint<T: Scalar>(inv: &RootInventory<T>, n: u32, tol: f64) -> Result<RayConfiguration> {
    if n == 0 {
        return Err(Error::BadParameters("n must be positive".into()));
    }
    let mut assignments = Vec::new();
    let mut at_origin = Vec::new();
    let mut bad = 0;
    for (i, root) in inv.roots.iter().enumerate() {
        let z = to_c64(root.center);
        if z.norm() <= root.radius.to_f64_lossy() {
            at_origin.push(i);
            continue;
        }
        let w = z.powu(2 * n);
        let scale = z.norm().powi(2 * n as i32);
        if w.im.abs() > tol * scale || w.re <= 0.0 {
            bad += 1;
            continue;
        }
        let two_n = 2 * n as i64;
        let k = ((z.arg() * n as f64 / std::f64::consts::PI).round() as i64).rem_euclid(two_n) as u32;
        let branch = if k % 2 == 0 { Branch::L } else { Branch::LPrime };
        assignments.push(RayAssignment { root: i, ray: k, branch });
    }
    if bad > 0 {
        return Err(Error::RayViolation { count: bad });
    }
    Ok(RayConfiguration { n, assignments, at_origin })
}

/// Partitions the roots into orbits under multiplication by `e^{2πi/n}`.
/// Two roots match when the rotated center lies within the sum of both
/// radii plus `tol·|z|`.
pub fn orbit_decompose<T: Scalar>(inv: &RootInventory<T>, n: u32, tol: f64) -> Result<Vec<Orbit>> {
    if n == 0 {
        return Err(Error::BadParameters("n must be positive".into()));
    }
    let pts: Vec<(Complex<f64>, f64, i8)> = inv
        .roots
        .iter()
        .map(|r| (to_c64(r.center), r.radius.to_f64_lossy(), r.orientation))
        .collect();
    let omega = Complex::from_polar(1.0, 2.0 * std::f64::consts::PI / n as f64);
    let find = |z: Complex<f64>, r: f64| -> Option<usize> {
        pts.iter()
            .enumerate()
            .filter(|(_, (w, rw, _))| (z - w).norm() <= r + rw + tol * z.norm().max(w.norm()))
            .min_by(|a, b| (z - a.1 .0).norm().total_cmp(&(z - b.1 .0).norm()))
            .map(|(j, _)| j)
    };
    let mut seen = vec![false; pts.len()];
    let mut orbits = Vec::new();
    for i in 0..pts.len() {
        if seen[i] {
            continue;
        }
        let (z, r, o) = pts[i];
        let mut members = vec![i];
        let mut w = z;
        for _ in 1..n {
            w *= omega;
            let j = find(w, r).ok_or(Error::NotInvariant { n })?;
            if pts[j].2 != o {
                return Err(Error::NotInvariant { n });
            }
            if !members.contains(&j) {
                members.push(j);
            }
        }
        for &j in &members {
            if seen[j] && j != i {
                return Err(Error::NotInvariant { n });
            }
            seen[j] = true;
        }
        members.sort_unstable();
        orbits.push(Orbit { members, orientation: o });
    }
    Ok(orbits)
}
