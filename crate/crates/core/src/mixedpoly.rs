//! Sparse mixed polynomials `f(z, z̄) = Σ a_{ν,μ} z^ν z̄^μ` with complex coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::realpair::{BivariatePoly, RealPair};
use crate::scalar::{from_usize, Scalar};

/// Exponent pair `(ν, μ)`: power of `z` and power of `z̄`.
pub type Exponent = (u32, u32);

/// Relative threshold under which freshly produced coefficients are dropped.
pub(crate) fn prune_tolerance<T: Scalar>() -> T {
    T::lit(1e-14).max(T::epsilon() * T::lit(8.0))
}

#[derive(Clone, PartialEq)]
pub struct MixedPolynomial<T> {
    terms: BTreeMap<Exponent, Complex<T>>,
}

/// Holomorphic, anti-holomorphic and mixed degree together with class tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degrees {
    pub deg_z: u32,
    pub deg_zbar: u32,
    pub deg_mixed: u32,
    /// `f ∈ M(deg_z + deg_zbar; deg_z, deg_zbar)`.
    pub in_m: bool,
    /// `f = z̄^m q(z) − p(z)` with `deg q = deg_z`, `m = deg_zbar ≥ 1`.
    pub in_l: bool,
    /// `f = r(z̄) q(z) − p(z)` with `deg r = deg_zbar ≥ 1`, `deg q = deg_z`.
    pub in_lhs: bool,
}

impl Degrees {
    pub fn polar(&self) -> i64 {
        self.deg_z as i64 - self.deg_zbar as i64
    }
}

impl<T: Scalar> Default for MixedPolynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> MixedPolynomial<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn real_constant(c: T) -> Self {
        Self::constant(Complex::new(c, T::zero()))
    }

    pub fn monomial(nu: u32, mu: u32, c: Complex<T>) -> Self {
        let mut terms = BTreeMap::new();
        if c.norm_sqr() > T::zero() {
            terms.insert((nu, mu), c);
        }
        Self { terms }
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(1, 0, Complex::new(T::one(), T::zero()))
    }

    /// The polynomial `z̄`.
    pub fn zbar() -> Self {
        Self::monomial(0, 1, Complex::new(T::one(), T::zero()))
    }

    /// `z^ν z̄^μ` with unit coefficient.
    pub fn z_pow(nu: u32, mu: u32) -> Self {
        Self::monomial(nu, mu, Complex::new(T::one(), T::zero()))
    }

    /// Builds from raw terms, summing duplicates and dropping exact zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, Complex<T>)>>(terms: I) -> Self {
        let mut map: BTreeMap<Exponent, Complex<T>> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(|| Complex::new(T::zero(), T::zero())) += c;
        }
        map.retain(|_, c| c.norm_sqr() > T::zero());
        Self { terms: map }
    }

    /// Holomorphic polynomial `Σ c_k z^k` from ascending coefficients.
    pub fn holomorphic(coeffs: &[Complex<T>]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| ((k as u32, 0), c)))
    }

    /// Anti-holomorphic polynomial `Σ c_k z̄^k` from ascending coefficients.
    pub fn antiholomorphic(coeffs: &[Complex<T>]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| ((0, k as u32), c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, Complex<T>)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, nu: u32, mu: u32) -> Complex<T> {
        self.terms
            .get(&(nu, mu))
            .copied()
            .unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    pub fn max_coeff_modulus(&self) -> T {
        self.terms
            .values()
            .map(|c| c.norm())
            .fold(T::zero(), T::max)
    }

    /// Sum of coefficient moduli, `Σ |a_{ν,μ}|`.
    pub fn l1_norm(&self) -> T {
        self.terms.values().map(|c| c.norm()).fold(T::zero(), |a, b| a + b)
    }

    fn pruned(mut terms: BTreeMap<Exponent, Complex<T>>, scale: T) -> Self {
        let cut = prune_tolerance::<T>() * scale;
        terms.retain(|_, c| c.norm() >= cut && c.norm_sqr() > T::zero());
        Self { terms }
    }

    pub fn evaluate(&self, z: Complex<T>) -> Complex<T> {
        let (dz, dw) = self.max_exponents();
        let zp = powers(z, dz);
        let wp = powers(z.conj(), dw);
        self.terms
            .iter()
            .fold(Complex::new(T::zero(), T::zero()), |acc, (&(nu, mu), &c)| {
                acc + c * zp[nu as usize] * wp[mu as usize]
            })
    }

    /// `Σ |a_{ν,μ}| |z|^{ν+μ}`: the natural scale for residuals at `z`.
    pub fn magnitude_at(&self, z: Complex<T>) -> T {
        let r = z.norm();
        self.terms
            .iter()
            .map(|(&(nu, mu), c)| c.norm() * r.powi((nu + mu) as i32))
            .fold(T::zero(), |a, b| a + b)
    }

    /// Wirtinger derivatives `(∂f/∂z, ∂f/∂z̄)` at `z`.
    pub fn wirtinger(&self, z: Complex<T>) -> (Complex<T>, Complex<T>) {
        let (dz, dw) = self.max_exponents();
        let zp = powers(z, dz);
        let wp = powers(z.conj(), dw);
        let zero = Complex::new(T::zero(), T::zero());
        let mut fz = zero;
        let mut fw = zero;
        for (&(nu, mu), &c) in &self.terms {
            if nu > 0 {
                fz = fz + c * zp[nu as usize - 1] * wp[mu as usize] * from_usize::<T>(nu as usize);
            }
            if mu > 0 {
                fw = fw + c * zp[nu as usize] * wp[mu as usize - 1] * from_usize::<T>(mu as usize);
            }
        }
        (fz, fw)
    }

    /// Real Jacobian `J(g, h)` at `z`, via `|∂f/∂z|² − |∂f/∂z̄|²`.
    pub fn wirtinger_jacobian(&self, z: Complex<T>) -> T {
        let (fz, fw) = self.wirtinger(z);
        fz.norm_sqr() - fw.norm_sqr()
    }

    fn max_exponents(&self) -> (u32, u32) {
        self.terms
            .keys()
            .fold((0, 0), |(a, b), &(nu, mu)| (a.max(nu), b.max(mu)))
    }

    pub fn degrees(&self) -> Result<Degrees> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (deg_z, deg_zbar) = self.max_exponents();
        let deg_mixed = self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0);
        Ok(Degrees {
            deg_z,
            deg_zbar,
            deg_mixed,
            in_m: deg_mixed == deg_z + deg_zbar,
            in_l: self.is_generalized_lens_shape(deg_z, deg_zbar),
            in_lhs: self.is_split_shape(deg_z, deg_zbar),
        })
    }

    /// Membership in `M(n+m; n, m)`.
    pub fn is_in_m(&self, n: u32, m: u32) -> bool {
        matches!(self.degrees(), Ok(d) if d.deg_z == n && d.deg_zbar == m && d.deg_mixed == n + m)
    }

    fn is_generalized_lens_shape(&self, n: u32, m: u32) -> bool {
        if m == 0 {
            return false;
        }
        let mut top_q = 0;
        for &(nu, mu) in self.terms.keys() {
            if mu != 0 && mu != m {
                return false;
            }
            if mu == m {
                top_q = top_q.max(nu);
            }
        }
        top_q == n
    }

    fn is_split_shape(&self, n: u32, m: u32) -> bool {
        if m == 0 {
            return false;
        }
        // Rows mu >= 1 of the coefficient matrix must be proportional to q.
        let row = |mu: u32| -> Vec<Complex<T>> { (0..=n).map(|nu| self.coeff(nu, mu)).collect() };
        let norm = |v: &[Complex<T>]| v.iter().map(|c| c.norm_sqr()).fold(T::zero(), |a, b| a + b);
        let pivot = (1..=m)
            .map(|mu| (mu, norm(&row(mu))))
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        let q = row(pivot.0);
        let qq = pivot.1;
        if qq == T::zero() {
            return false;
        }
        let deg_q = (0..=n as usize).rev().find(|&k| q[k].norm_sqr() > T::zero());
        if deg_q != Some(n as usize) {
            return false;
        }
        let tol = T::lit(1e-10).max(T::epsilon() * T::lit(64.0));
        (1..=m).all(|mu| {
            let r = row(mu);
            let dot = r
                .iter()
                .zip(&q)
                .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a * b.conj());
            let lambda = dot / qq;
            let resid = r
                .iter()
                .zip(&q)
                .map(|(a, b)| (a - b * lambda).norm_sqr())
                .fold(T::zero(), |a, b| a + b);
            resid <= tol * tol * qq.max(norm(&r))
        })
    }

    pub fn conjugate(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(nu, mu), c)| ((mu, nu), c.conj()))
                .collect(),
        }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        let out = self.terms.iter().map(|(&e, &c)| (e, c * s)).collect();
        Self::pruned(out, self.max_coeff_modulus() * s.norm())
    }

    pub fn scale_real(&self, s: T) -> Self {
        self.scale(Complex::new(s, T::zero()))
    }

    /// `f(z^m, z̄^m)`.
    pub fn substitute_power(&self, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::BadParameters("power substitution needs m >= 1".into()));
        }
        Ok(Self {
            terms: self
                .terms
                .iter()
                .map(|(&(nu, mu), &c)| ((nu * m, mu * m), c))
                .collect(),
        })
    }

    /// `f(λz, conj(λz))`.
    pub fn rotate(&self, lambda: Complex<T>) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(nu, mu), &c)| {
                    ((nu, mu), c * lambda.powu(nu) * lambda.conj().powu(mu))
                })
                .filter(|(_, c)| c.norm_sqr() > T::zero())
                .collect(),
        }
    }

    /// Terms of maximal mixed degree.
    pub fn top_part(&self) -> Self {
        let d = self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0);
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(&(a, b), _)| a + b == d)
                .map(|(&e, &c)| (e, c))
                .collect(),
        }
    }

    pub fn powu(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(Complex::new(T::one(), T::zero())), |acc, _| &acc * self)
    }

    /// Realification `f(x+iy, x−iy) = g(x,y) + i h(x,y)` with float coefficients.
    pub fn realify(&self) -> RealPair<T> {
        let (g, h) = self.realify_enclosure();
        RealPair {
            g: g.map(|c| c.mid()),
            h: h.map(|c| c.mid()),
        }
    }

    /// Realification with interval coefficients enclosing the exact expansion of
    /// the stored (floating) coefficients.
    pub fn realify_enclosure(&self) -> (BivariatePoly<Interval<T>>, BivariatePoly<Interval<T>>) {
        let d = self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0) as usize;
        let mut g = BivariatePoly::filled(d, Interval::zero());
        let mut h = BivariatePoly::filled(d, Interval::zero());
        for (&(nu, mu), c) in &self.terms {
            let deg = (nu + mu) as usize;
            let ar = Interval::point(c.re);
            let ai = Interval::point(c.im);
            for s in 0..=deg {
                // coefficient of x^{deg-s} y^s in (x+iy)^nu (x-iy)^mu is i^s * k
                let k = binomial_convolution(nu as usize, mu as usize, s);
                if k == 0 {
                    continue;
                }
                let k = Interval::point(T::from_i128(k).expect("binomial fits scalar"));
                // (ar + i ai) * i^s * k
                let (re, im) = match s % 4 {
                    0 => (ar * k, ai * k),
                    1 => (-(ai * k), ar * k),
                    2 => (-(ar * k), -(ai * k)),
                    _ => (ai * k, -(ar * k)),
                };
                let gi = g.get_mut(deg - s, s);
                *gi = *gi + re;
                let hi = h.get_mut(deg - s, s);
                *hi = *hi + im;
            }
        }
        (g, h)
    }

    /// Converts the coefficient type, e.g. `f64` to `f32`.
    pub fn cast<U: Scalar>(&self) -> MixedPolynomial<U> {
        MixedPolynomial::from_terms(self.terms.iter().map(|(&e, c)| {
            (
                e,
                Complex::new(
                    U::from_f64(c.re.to_f64_lossy()).unwrap(),
                    U::from_f64(c.im.to_f64_lossy()).unwrap(),
                ),
            )
        }))
    }

    /// JSON interchange form `{"terms":[{"nu","mu","re","im"}, ...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// `Σ_{k+l=s} C(ν,k) C(μ,l) (−1)^l`.
fn binomial_convolution(nu: usize, mu: usize, s: usize) -> i128 {
    let mut total = 0i128;
    for k in 0..=s.min(nu) {
        let l = s - k;
        if l > mu {
            continue;
        }
        let term = binomial(nu, k) * binomial(mu, l);
        total += if l % 2 == 0 { term } else { -term };
    }
    total
}

fn binomial(n: usize, k: usize) -> i128 {
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn powers<T: Scalar>(z: Complex<T>, d: u32) -> Vec<Complex<T>> {
    let mut out = Vec::with_capacity(d as usize + 1);
    let mut p = Complex::new(T::one(), T::zero());
    for _ in 0..=d {
        out.push(p);
        p = p * z;
    }
    out
}

impl<T: Scalar> Add for &MixedPolynomial<T> {
    type Output = MixedPolynomial<T>;
    fn add(self, rhs: Self) -> MixedPolynomial<T> {
        let mut terms = self.terms.clone();
        for (&e, &c) in &rhs.terms {
            *terms.entry(e).or_insert_with(|| Complex::new(T::zero(), T::zero())) += c;
        }
        MixedPolynomial::pruned(terms, self.max_coeff_modulus().max(rhs.max_coeff_modulus()))
    }
}

impl<T: Scalar> Sub for &MixedPolynomial<T> {
    type Output = MixedPolynomial<T>;
    fn sub(self, rhs: Self) -> MixedPolynomial<T> {
        let mut terms = self.terms.clone();
        for (&e, &c) in &rhs.terms {
            *terms.entry(e).or_insert_with(|| Complex::new(T::zero(), T::zero())) -= c;
        }
        MixedPolynomial::pruned(terms, self.max_coeff_modulus().max(rhs.max_coeff_modulus()))
    }
}

impl<T: Scalar> Mul for &MixedPolynomial<T> {
    type Output = MixedPolynomial<T>;
    fn mul(self, rhs: Self) -> MixedPolynomial<T> {
        let mut terms: BTreeMap<Exponent, Complex<T>> = BTreeMap::new();
        for (&(a, b), &c) in &self.terms {
            for (&(d, e), &k) in &rhs.terms {
                *terms
                    .entry((a + d, b + e))
                    .or_insert_with(|| Complex::new(T::zero(), T::zero())) += c * k;
            }
        }
        MixedPolynomial::pruned(terms, self.max_coeff_modulus() * rhs.max_coeff_modulus())
    }
}

impl<T: Scalar> Neg for &MixedPolynomial<T> {
    type Output = MixedPolynomial<T>;
    fn neg(self) -> MixedPolynomial<T> {
        MixedPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for MixedPolynomial<T> {
            type Output = MixedPolynomial<T>;
            fn $m(self, rhs: Self) -> MixedPolynomial<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&MixedPolynomial<T>> for MixedPolynomial<T> {
            type Output = MixedPolynomial<T>;
            fn $m(self, rhs: &Self) -> MixedPolynomial<T> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for MixedPolynomial<T> {
    type Output = MixedPolynomial<T>;
    fn neg(self) -> MixedPolynomial<T> {
        -&self
    }
}

impl<T: Scalar> fmt::Debug for MixedPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedPolynomial({self})")
    }
}

/// Canonical text form: `(re,im) z^nu zb^mu + ...`, highest mixed degree first.
impl<T: Scalar> fmt::Display for MixedPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "(0,0) z^0 zb^0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        for (i, (nu, mu)) in keys.into_iter().enumerate() {
            let c = self.terms[&(nu, mu)];
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({},{}) z^{} zb^{}", c.re, c.im, nu, mu)?;
        }
        Ok(())
    }
}

impl<T: Scalar> FromStr for MixedPolynomial<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TextParser::new(s).parse()
    }
}

struct TextParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> TextParser<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at byte {}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn parse<T: Scalar>(mut self) -> Result<MixedPolynomial<T>> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut sign = 1.0;
        if let Some(b @ (b'+' | b'-')) = self.peek() {
            sign = if b == b'-' { -1.0 } else { 1.0 };
            self.pos += 1;
        }
        loop {
            let ((nu, mu), c) = self.term::<T>()?;
            let s = T::lit(sign);
            terms.push(((nu, mu), Complex::new(c.0 * s, c.1 * s)));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1.0,
                Some(b'-') => sign = -1.0,
                Some(_) => return self.err("expected '+' or '-' between terms"),
            }
            self.pos += 1;
        }
        Ok(MixedPolynomial::from_terms(terms))
    }

    fn term<T: Scalar>(&mut self) -> Result<(Exponent, (T, T))> {
        self.skip_ws();
        let mut coeff = (T::one(), T::zero());
        let mut seen = false;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let re = self.number()?;
                self.skip_ws();
                if self.peek() != Some(b',') {
                    return self.err("expected ',' in coefficient");
                }
                self.pos += 1;
                let im = self.number()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                coeff = (T::lit(re), T::lit(im));
                seen = true;
            }
            Some(b) if b.is_ascii_digit() || b == b'.' => {
                coeff = (T::lit(self.number()?), T::zero());
                seen = true;
            }
            _ => {}
        }
        let (mut nu, mut mu) = (0u32, 0u32);
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            }
            if self.peek() != Some(b'z') {
                break;
            }
            self.pos += 1;
            let bar = self.peek() == Some(b'b');
            if bar {
                self.pos += 1;
            }
            let mut k = 1;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                k = self.integer()?;
            }
            if bar {
                mu += k;
            } else {
                nu += k;
            }
            seen = true;
        }
        if !seen {
            return self.err("empty term");
        }
        Ok(((nu, mu), coeff))
    }

    fn integer(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .map_or_else(|| self.err("expected exponent"), Ok)
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        while let Some(b) = self.peek() {
            let exp_sign = (b == b'+' || b == b'-')
                && self.pos > start
                && matches!(self.src[self.pos - 1], b'e' | b'E');
            let lead_sign = (b == b'+' || b == b'-') && self.pos == start;
            if b.is_ascii_digit() || b == b'.' || b == b'e' || b == b'E' || exp_sign || lead_sign {
                self.pos += 1;
            } else {
                break;
            }
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .map_or_else(|| self.err("expected number"), Ok)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    nu: u32,
    mu: u32,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl<T: Scalar> Serialize for MixedPolynomial<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            terms: self
                .terms
                .iter()
                .map(|(&(nu, mu), c)| TermJson {
                    nu,
                    mu,
                    re: c.re.to_f64_lossy(),
                    im: c.im.to_f64_lossy(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for MixedPolynomial<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            if !(t.re.is_finite() && t.im.is_finite()) {
                return Err(serde::de::Error::custom("non-finite coefficient"));
            }
            terms.push(((t.nu, t.mu), Complex::new(T::lit(t.re), T::lit(t.im))));
        }
        Ok(MixedPolynomial::from_terms(terms))
    }
}
