//! Constructors for the lens-equation families and the other polynomial
//! examples, returning numerator polynomials.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mixedpoly::MixedPolynomial;

type C = Complex<f64>;
type Poly = MixedPolynomial<f64>;

fn re(x: f64) -> C {
    Complex::new(x, 0.0)
}

fn ratio(num: i64, den: i64) -> f64 {
    num as f64 / den as f64
}

fn trimmed(c: &[C]) -> &[C] {
    let len = c.iter().rposition(|x| x.norm_sqr() > 0.0).map_or(0, |k| k + 1);
    &c[..len]
}

fn degree_of(c: &[C]) -> Option<usize> {
    trimmed(c).len().checked_sub(1)
}

/// `z̄^m q(z) − p(z)` with ascending coefficient lists.
pub fn generalized_lens(p: &[C], q: &[C], m: u32) -> Result<Poly> {
    let n = degree_of(q).filter(|&n| n >= 1).ok_or_else(|| {
        Error::DegreeViolation("q must have degree at least 1".into())
    })?;
    if m == 0 {
        return Err(Error::DegreeViolation("m must be at least 1".into()));
    }
    if let Some(dp) = degree_of(p) {
        if dp > n {
            return Err(Error::DegreeViolation(format!("deg p = {dp} exceeds deg q = {n}")));
        }
    }
    let qz = Poly::holomorphic(trimmed(q));
    let pz = Poly::holomorphic(trimmed(p));
    Ok(&(&Poly::z_pow(0, m) * &qz) - &pz)
}

/// `r(z̄) q(z) − p(z)`.
pub fn hs_lens(r: &[C], q: &[C], p: &[C]) -> Result<Poly> {
    let k = degree_of(r).filter(|&k| k >= 1).ok_or_else(|| {
        Error::DegreeViolation("r must have degree at least 1".into())
    })?;
    let n = degree_of(q).filter(|&n| n >= 1).ok_or_else(|| {
        Error::DegreeViolation("q must have degree at least 1".into())
    })?;
    if let Some(dp) = degree_of(p) {
        if dp > n {
            return Err(Error::DegreeViolation(format!("deg p = {dp} exceeds deg q = {n}")));
        }
    }
    debug_assert!(k >= 1);
    let rz = Poly::antiholomorphic(trimmed(r));
    Ok(&(&rz * &Poly::holomorphic(trimmed(q))) - &Poly::holomorphic(trimmed(p)))
}

/// Numerator of `z̄ − Σ σ_i / (z − α_i)`.
pub fn from_point_masses(sigmas: &[C], alphas: &[C]) -> Result<Poly> {
    if sigmas.len() != alphas.len() || sigmas.is_empty() {
        return Err(Error::BadParameters("need matching non-empty masses and positions".into()));
    }
    if sigmas.iter().any(|s| s.norm_sqr() == 0.0) {
        return Err(Error::BadParameters("masses must be nonzero".into()));
    }
    for i in 0..alphas.len() {
        for j in i + 1..alphas.len() {
            if alphas[i] == alphas[j] {
                return Err(Error::DuplicatePoles);
            }
        }
    }
    let linear = |a: C| Poly::holomorphic(&[-a, re(1.0)]);
    let q = alphas
        .iter()
        .fold(Poly::real_constant(1.0), |acc, &a| &acc * &linear(a));
    let mut p = Poly::zero();
    for (i, &s) in sigmas.iter().enumerate() {
        let others = alphas
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .fold(Poly::constant(s), |acc, (_, &a)| &acc * &linear(a));
        p = &p + &others;
    }
    Ok(&(&Poly::zbar() * &q) - &p)
}

fn check_ell(n: u32, m: u32, a: f64) -> Result<()> {
    if !(n > m && m > 0) {
        return Err(Error::BadParameters(format!("need n > m > 0, got n = {n}, m = {m}")));
    }
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::BadParameters(format!("need a > 0, got {a}")));
    }
    Ok(())
}

/// `z̄^m (z^n − a^n) − z^{n−m}`.
pub fn ell(n: u32, m: u32, a: f64) -> Result<Poly> {
    check_ell(n, m, a)?;
    let q = &Poly::z_pow(n, 0) - &Poly::real_constant(a.powi(n as i32));
    Ok(&(&Poly::z_pow(0, m) * &q) - &Poly::z_pow(n - m, 0))
}

/// `z^m z̄^m (z^n − a^n) − z^n − ε (z^n − a^n)`, a member of `L(n+2m; n+m, m)`.
pub fn ell_eps(n: u32, m: u32, a: f64, eps: f64) -> Result<Poly> {
    check_ell(n, m, a)?;
    if !(eps >= 0.0 && eps.is_finite()) {
        return Err(Error::BadParameters(format!("need eps >= 0, got {eps}")));
    }
    let q = &Poly::z_pow(n, 0) - &Poly::real_constant(a.powi(n as i32));
    let top = &Poly::z_pow(m, m) * &q;
    Ok(&(&top - &Poly::z_pow(n, 0)) - &q.scale_real(eps))
}

/// Default `ε` for [`ell_eps`].
///
/// For `n > 2m` the small roots of `ℓ_{n,m}` have modulus of order
/// `a^{n/(n−2m)}` and the roots created near the origin have modulus
/// `ε^{1/(2m)}`, so `ε` is taken two decades below `a^{2mn/(n−2m)}`.
/// For `2m ≥ n` the scale is `a^{2n}`.
pub fn default_eps(n: u32, m: u32, a: f64) -> f64 {
    if n > 2 * m {
        let e = 2.0 * (m * n) as f64 / (n - 2 * m) as f64;
        0.01 * a.powf(e)
    } else {
        a.powi(2 * n as i32)
    }
}

/// Parts `(q, p)` of a lens numerator `z̄ q(z) − p(z)`.
fn split_lens(lens: &Poly) -> Result<(Vec<C>, Vec<C>)> {
    let d = lens.degrees()?;
    if !(d.in_l && d.deg_zbar == 1) {
        return Err(Error::NotInClass("expected z̄ q(z) − p(z)".into()));
    }
    let n = d.deg_z as usize;
    let mut q = vec![re(0.0); n + 1];
    let mut p = vec![re(0.0); n + 1];
    for ((nu, mu), c) in lens.terms() {
        if mu == 1 {
            q[nu as usize] = c;
        } else {
            p[nu as usize] = -c;
        }
    }
    Ok((q, p))
}

/// `φ_t = ℓ − t z̄^m q(z)` for a lens numerator `ℓ = z̄ q(z) − p(z)`.
pub fn phi_t(lens: &Poly, m: u32, t: f64) -> Result<Poly> {
    let (q, p) = split_lens(lens)?;
    if p[0].norm_sqr() == 0.0 {
        return Err(Error::ZeroIsRoot);
    }
    if !(t >= 0.0 && t.is_finite()) || m == 0 {
        return Err(Error::BadParameters(format!("need t >= 0 and m >= 1, got t = {t}, m = {m}")));
    }
    if t == 0.0 {
        return Ok(lens.clone());
    }
    let extra = &Poly::z_pow(0, m) * &Poly::holomorphic(&q);
    Ok(lens - &extra.scale_real(t))
}

/// Numerators of the three printed perturbed point-lens examples, `k ∈ {2, 3, 4}`.
pub fn rhie_preset(k: u32) -> Result<Poly> {
    match k {
        2 => generalized_lens(
            &[re(-ratio(1, 30)), re(1.0)],
            &[re(-ratio(1, 2)), re(0.0), re(1.0)],
            1,
        ),
        3 => generalized_lens(
            &[re(-ratio(1, 1000)), re(0.0), re(1.0)],
            &[re(-ratio(1, 8)), re(0.0), re(0.0), re(1.0)],
            1,
        ),
        4 => {
            let q = &Poly::z_pow(3, 0) - &Poly::real_constant(ratio(1, 5));
            let top = &Poly::z_pow(1, 1) * &q;
            Ok(&(&top - &Poly::z_pow(3, 0)) - &q.scale_real(ratio(1, 800)))
        }
        _ => Err(Error::BadParameters(format!("no preset {k}; presets are 2, 3, 4"))),
    }
}

/// Numerator of `z̄ − z^{n−2}/(z^{n−1} − a^{n−1}) − ε/z` for `n ≥ 2`.
pub fn rhie(n: u32, a: f64, eps: f64) -> Result<Poly> {
    if n < 2 {
        return Err(Error::BadParameters("rhie needs n >= 2".into()));
    }
    ell_eps(n - 1, 1, a, eps)
}

/// `(z^{n−a} z̄^{m−a} − 1)(z^a − 2)(z̄^a − 3)`, and `z^n z̄^m − 1` for `a = 0`.
pub fn product_family(n: u32, m: u32, a: u32) -> Result<Poly> {
    if !(a <= m && m < n) {
        return Err(Error::BadParameters(format!("need 0 <= a <= m < n, got ({n}, {m}, {a})")));
    }
    let base = &Poly::z_pow(n - a, m - a) - &Poly::real_constant(1.0);
    if a == 0 {
        return Ok(base);
    }
    let u = &Poly::z_pow(a, 0) - &Poly::real_constant(2.0);
    let v = &Poly::z_pow(0, a) - &Poly::real_constant(3.0);
    Ok(&(&base * &u) * &v)
}

/// Chebyshev polynomial `T_n` evaluated on a mixed polynomial.
fn chebyshev_t(n: u32, x: &Poly) -> Poly {
    let mut prev = Poly::real_constant(1.0);
    if n == 0 {
        return prev;
    }
    let mut cur = x.clone();
    let two_x = x.scale_real(2.0);
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `(y − T_n(x)) + i (x − a T_n(b y))` with `x = (z + z̄)/2`, `y = −i (z − z̄)/2`.
pub fn chebyshev_example(n: u32, a: f64, b: f64) -> Result<Poly> {
    if n == 0 {
        return Err(Error::BadParameters("chebyshev example needs n >= 1".into()));
    }
    let x = (&Poly::z() + &Poly::zbar()).scale_real(0.5);
    let y = (&Poly::z() - &Poly::zbar()).scale(Complex::new(0.0, -0.5));
    let real = &y - &chebyshev_t(n, &x);
    let imag = &x - &chebyshev_t(n, &y.scale_real(b)).scale_real(a);
    Ok(&real + &imag.scale(Complex::new(0.0, 1.0)))
}

/// `f₂(z^m, z̄^m)`.
pub fn symmetric_power(m: u32) -> Result<Poly> {
    rhie_preset(2)?.substitute_power(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Generalized,
    Hs,
    PointMasses,
    Ell,
    EllEps,
    PhiT,
    RhiePreset,
    Rhie,
    Product,
    Chebyshev,
    SymmetricPower,
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.replace('-', "_")))
            .map_err(|_| Error::Parse(format!("unknown family kind `{s}`")))
    }
}

/// Symbolic description of a family member.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LensFamilySpec {
    pub kind: FamilyKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<u32>,
    /// Coefficients as `[re, im]`, ascending powers.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub p: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub q: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub r: Vec<[f64; 2]>,
    /// Point-mass positions, paired with the masses in `p`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub alphas: Vec<[f64; 2]>,
}

impl LensFamilySpec {
    pub fn new(kind: FamilyKind) -> Self {
        Self {
            kind,
            n: None,
            m: None,
            a: None,
            b: None,
            eps: None,
            t: None,
            preset: None,
            p: Vec::new(),
            q: Vec::new(),
            r: Vec::new(),
            alphas: Vec::new(),
        }
    }

    fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
        v.ok_or_else(|| Error::BadParameters(format!("missing parameter `{name}`")))
    }

    fn complex(v: &[[f64; 2]]) -> Vec<C> {
        v.iter().map(|&[x, y]| Complex::new(x, y)).collect()
    }

    /// Fills in defaults for omitted parameters.
    pub fn resolved(&self) -> Self {
        let mut s = self.clone();
        match s.kind {
            FamilyKind::Ell => {
                s.a.get_or_insert(0.7);
            }
            FamilyKind::EllEps => {
                let a = *s.a.get_or_insert(0.7);
                if let (Some(n), Some(m), None) = (s.n, s.m, s.eps) {
                    s.eps = Some(default_eps(n, m, a));
                }
            }
            FamilyKind::PhiT => {
                s.t.get_or_insert(1e-3);
                if s.q.is_empty() {
                    s.preset.get_or_insert(2);
                }
            }
            FamilyKind::Chebyshev => {
                s.a.get_or_insert(10.0);
                s.b.get_or_insert(10.0);
            }
            _ => {}
        }
        s
    }

    pub fn elaborate(&self) -> Result<Poly> {
        let s = self.resolved();
        match s.kind {
            FamilyKind::Generalized => {
                generalized_lens(&Self::complex(&s.p), &Self::complex(&s.q), s.m.unwrap_or(1))
            }
            FamilyKind::Hs => hs_lens(
                &Self::complex(&s.r),
                &Self::complex(&s.q),
                &Self::complex(&s.p),
            ),
            FamilyKind::PointMasses => {
                from_point_masses(&Self::complex(&s.p), &Self::complex(&s.alphas))
            }
            FamilyKind::Ell => ell(Self::need(s.n, "n")?, Self::need(s.m, "m")?, Self::need(s.a, "a")?),
            FamilyKind::EllEps => ell_eps(
                Self::need(s.n, "n")?,
                Self::need(s.m, "m")?,
                Self::need(s.a, "a")?,
                Self::need(s.eps, "eps")?,
            ),
            FamilyKind::PhiT => {
                let lens = match s.preset {
                    Some(k) if s.q.is_empty() => rhie_preset(k)?,
                    _ => generalized_lens(&Self::complex(&s.p), &Self::complex(&s.q), 1)?,
                };
                phi_t(&lens, Self::need(s.m, "m")?, Self::need(s.t, "t")?)
            }
            FamilyKind::RhiePreset => rhie_preset(Self::need(s.preset, "preset")?),
            FamilyKind::Rhie => rhie(
                Self::need(s.n, "n")?,
                Self::need(s.a, "a")?,
                Self::need(s.eps, "eps")?,
            ),
            FamilyKind::Product => product_family(
                Self::need(s.n, "n")?,
                Self::need(s.m, "m")?,
                Self::need(s.a, "a")? as u32,
            ),
            FamilyKind::Chebyshev => {
                chebyshev_example(Self::need(s.n, "n")?, Self::need(s.a, "a")?, Self::need(s.b, "b")?)
            }
            FamilyKind::SymmetricPower => symmetric_power(Self::need(s.m, "m")?),
        }
    }
}
