//! Certified isolation of the roots of `f(z, z̄) = 0` in a rectangle.
//!
//! The search rectangle is subdivided level by level. A box is discarded when
//! the interval range of `g` or `h` excludes zero, and a root is certified when
//! the Krawczyk operator maps a slightly inflated box into its interior. Boxes
//! that reach the depth limit are grouped into clusters whose multiplicity is
//! read off a certified winding number.

mod bound;
mod krawczyk;

use std::collections::{HashMap, HashSet, VecDeque};

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::mixedpoly::MixedPolynomial;
use crate::scalar::Scalar;
use crate::winding::{winding_number, Enclosure, SampleCheck};

pub use bound::{root_bound, top_part_floor};
pub use krawczyk::{certify, IBox, Krawczyk, LocalForms};

const INFLATE: f64 = 1.5;
const GROWTH_RATIO: f64 = 1.8;
const GROWTH_LEVELS: usize = 3;
const GROWTH_START: u32 = 8;
const CHAIN_LIMIT: usize = 100;
const MAX_LIVE_BOXES: usize = 1 << 21;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Target relative radius of certified enclosures and relative residual bound.
    pub tol: f64,
    pub max_depth: u32,
    /// Count non-simple roots by their absolute multiplicity instead of
    /// flagging the count as uncertified.
    pub count_multiplicity: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_depth: 60,
            count_multiplicity: false,
        }
    }
}

/// Rectangle `[x0, x1) × [y0, y1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rect<T> {
    pub x0: T,
    pub x1: T,
    pub y0: T,
    pub y1: T,
}

impl<T: Scalar> Rect<T> {
    pub fn new(x0: T, x1: T, y0: T, y1: T) -> Result<Self> {
        if !(x0 < x1 && y0 < y1) || ![x0, x1, y0, y1].iter().all(|v| v.is_finite()) {
            return Err(Error::BadParameters("empty or non-finite box".into()));
        }
        Ok(Self { x0, x1, y0, y1 })
    }

    pub fn square(r: T) -> Self {
        Self {
            x0: -r,
            x1: r,
            y0: -r,
            y1: r,
        }
    }

    /// Half-open membership.
    pub fn contains(&self, z: Complex<T>) -> bool {
        self.x0 <= z.re && z.re < self.x1 && self.y0 <= z.im && z.im < self.y1
    }

    pub fn center(&self) -> Complex<T> {
        let two = T::one() + T::one();
        Complex::new((self.x0 + self.x1) / two, (self.y0 + self.y1) / two)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertifiedRoot<T> {
    pub center: Complex<T>,
    pub radius: T,
    /// Sign of the Jacobian; for non-simple roots the sign of the multiplicity.
    pub orientation: i8,
    /// `|f(center)|`.
    pub residual: T,
    /// Local winding number: `±1` for simple roots.
    pub multiplicity: i64,
    /// Uniqueness and the Jacobian sign were proved by the Krawczyk test.
    pub simple: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootInventory<T> {
    pub roots: Vec<CertifiedRoot<T>>,
    pub rho: usize,
    pub signed_sum: i64,
    pub unresolved_boxes: Vec<Rect<T>>,
    pub certified: bool,
    pub search_box: Rect<T>,
    pub count_multiplicity: bool,
}

impl<T: Scalar> RootInventory<T> {
    fn assemble(
        mut roots: Vec<CertifiedRoot<T>>,
        unresolved_boxes: Vec<Rect<T>>,
        search_box: Rect<T>,
        count_multiplicity: bool,
    ) -> Self {
        roots.sort_by(|a, b| {
            (a.center.re, a.center.im)
                .partial_cmp(&(b.center.re, b.center.im))
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let non_simple = roots.iter().filter(|r| !r.simple).count();
        let rho = roots
            .iter()
            .map(|r| {
                if !r.simple && count_multiplicity {
                    r.multiplicity.unsigned_abs() as usize
                } else {
                    1
                }
            })
            .sum();
        let signed_sum = roots.iter().map(|r| r.multiplicity).sum();
        let certified = unresolved_boxes.is_empty() && (non_simple == 0 || count_multiplicity);
        Self {
            roots,
            rho,
            signed_sum,
            unresolved_boxes,
            certified,
            search_box,
            count_multiplicity,
        }
    }

    pub fn positive(&self) -> usize {
        self.roots.iter().filter(|r| r.simple && r.orientation > 0).count()
    }

    pub fn negative(&self) -> usize {
        self.roots.iter().filter(|r| r.simple && r.orientation < 0).count()
    }

    pub fn non_simple(&self) -> usize {
        self.roots.iter().filter(|r| !r.simple).count()
    }

    /// The inventory with every root whose disk contains `z` removed.
    pub fn without_point(&self, z: Complex<T>) -> Self {
        let roots = self
            .roots
            .iter()
            .filter(|r| (r.center - z).norm() > r.radius)
            .cloned()
            .collect();
        Self::assemble(
            roots,
            self.unresolved_boxes.clone(),
            self.search_box,
            self.count_multiplicity,
        )
    }

    /// Fails with [`Error::Uncertified`] unless the count is certified.
    pub fn certified_rho(&self) -> Result<usize> {
        if self.certified {
            Ok(self.rho)
        } else {
            Err(Error::Uncertified {
                unresolved: self.unresolved_boxes.len(),
                non_simple: self.non_simple(),
            })
        }
    }
}

/// Box on the dyadic grid of the search rectangle at a given level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Cell {
    level: u32,
    i: u64,
    j: u64,
}

struct Grid<T> {
    rect: Rect<T>,
}

impl<T: Scalar> Grid<T> {
    /// Largest coordinate magnitude, which fixes the grid's absolute resolution.
    fn reach(&self) -> T {
        let r = self.rect;
        r.x0.abs().max(r.x1.abs()).max(r.y0.abs()).max(r.y1.abs())
    }

    fn span(&self, level: u32) -> (T, T) {
        let k = T::from_u64(1u64 << level).unwrap();
        ((self.rect.x1 - self.rect.x0) / k, (self.rect.y1 - self.rect.y0) / k)
    }

    /// Center and half-widths, widened so the closed boxes cover the rectangle.
    fn geometry(&self, c: Cell) -> (T, T, T, T) {
        let (wx, wy) = self.span(c.level);
        let half = T::lit(0.5);
        let cx = self.rect.x0 + wx * (T::from_u64(c.i).unwrap() + half);
        let cy = self.rect.y0 + wy * (T::from_u64(c.j).unwrap() + half);
        let slack = T::epsilon() * T::lit(4.0);
        let reach = self.reach();
        let rx = wx * half * (T::one() + slack) + reach * slack;
        let ry = wy * half * (T::one() + slack) + reach * slack;
        (cx, cy, rx, ry)
    }

    fn closed(&self, c: Cell) -> IBox<T> {
        let (cx, cy, rx, ry) = self.geometry(c);
        IBox::around(cx, cy, rx, ry)
    }

    fn rect(&self, c: Cell) -> Rect<T> {
        let (wx, wy) = self.span(c.level);
        let x0 = self.rect.x0 + wx * T::from_u64(c.i).unwrap();
        let y0 = self.rect.y0 + wy * T::from_u64(c.j).unwrap();
        Rect {
            x0,
            x1: x0 + wx,
            y0,
            y1: y0 + wy,
        }
    }
}

enum Outcome<T> {
    Excluded,
    Root(Found<T>),
    Split,
    Unresolved,
}

#[derive(Clone, Copy, Debug)]
struct Found<T> {
    tight: IBox<T>,
    unique: IBox<T>,
}

/// Isolates every root of `f` in `rect`.
pub fn isolate_roots<T: Scalar>(
    f: &MixedPolynomial<T>,
    rect: Rect<T>,
    cfg: &SolverConfig,
) -> Result<RootInventory<T>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let tol = T::lit(cfg.tol).max(T::epsilon() * T::lit(64.0));
    let enc = Enclosure::new(f);
    let grid = Grid { rect };
    let mut live = vec![Cell { level: 0, i: 0, j: 0 }];
    let mut found: Vec<Found<T>> = Vec::new();
    let mut leaves: Vec<Cell> = Vec::new();
    let mut history: Vec<usize> = Vec::new();
    while !live.is_empty() {
        let level = live[0].level;
        history.push(live.len());
        if level >= GROWTH_START && growing(&history) {
            let chain = largest_component(&live);
            if chain > CHAIN_LIMIT {
                return Err(Error::NonIsolatedZeroSet { boxes: chain });
            }
        }
        if live.len() > MAX_LIVE_BOXES {
            return Err(Error::NonIsolatedZeroSet {
                boxes: largest_component(&live),
            });
        }
        let outcomes: Vec<Outcome<T>> = live
            .par_iter()
            .map(|&c| examine(&enc, &grid, c, cfg.max_depth, tol))
            .collect();
        let mut next = Vec::new();
        for (c, o) in live.iter().zip(outcomes) {
            match o {
                Outcome::Excluded => {}
                Outcome::Root(r) => found.push(r),
                Outcome::Unresolved => leaves.push(*c),
                Outcome::Split => {
                    for (di, dj) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                        next.push(Cell {
                            level: c.level + 1,
                            i: 2 * c.i + di,
                            j: 2 * c.j + dj,
                        });
                    }
                }
            }
        }
        live = next;
    }
    let roots = dedupe(found);
    let mut certified: Vec<CertifiedRoot<T>> = roots
        .into_iter()
        .filter(|r| rect.contains(Complex::new(r.tight.x.mid(), r.tight.y.mid())))
        .map(|r| simple_root(f, &enc, r))
        .collect();
    let clusters = cluster_cells(&grid, &leaves);
    if clusters.iter().any(|c| c.len() > CHAIN_LIMIT) {
        let boxes = clusters.iter().map(Vec::len).max().unwrap_or(0);
        return Err(Error::NonIsolatedZeroSet { boxes });
    }
    let mut unresolved = Vec::new();
    for cluster in clusters {
        match cluster_root(f, &enc, &grid, &cluster, &certified) {
            Some(root) if rect.contains(root.center) => certified.push(root),
            Some(_) => {}
            None => unresolved.extend(cluster.iter().map(|&c| grid.rect(c))),
        }
    }
    Ok(RootInventory::assemble(
        certified,
        unresolved,
        rect,
        cfg.count_multiplicity,
    ))
}

fn examine<T: Scalar>(
    enc: &Enclosure<T>,
    grid: &Grid<T>,
    cell: Cell,
    max_depth: u32,
    tol: T,
) -> Outcome<T> {
    let (cx, cy, rx, ry) = grid.geometry(cell);
    let forms = LocalForms::at(enc, cx, cy);
    let (g, h) = forms.range(rx, ry);
    if !g.contains_zero() || !h.contains_zero() {
        return Outcome::Excluded;
    }
    let inflate = T::lit(INFLATE);
    let (sx, sy) = (rx * inflate, ry * inflate);
    let region = IBox::around(cx, cy, sx, sy);
    let closed = grid.closed(cell);
    match krawczyk::certify_with(enc, &forms, region, sx, sy, tol) {
        Krawczyk::Empty => return Outcome::Excluded,
        Krawczyk::Unique { tight, unique } => {
            if tight.intersect(&closed).is_none() {
                return Outcome::Excluded;
            }
            return Outcome::Root(Found { tight, unique });
        }
        Krawczyk::Inconclusive => {}
    }
    let tiny = T::epsilon() * T::lit(64.0) * grid.reach();
    if cell.level >= max_depth || rx.min(ry) <= tiny {
        Outcome::Unresolved
    } else {
        Outcome::Split
    }
}

fn growing(history: &[usize]) -> bool {
    if history.len() <= GROWTH_LEVELS {
        return false;
    }
    let tail = &history[history.len() - GROWTH_LEVELS - 1..];
    tail.windows(2)
        .all(|w| w[1] as f64 >= GROWTH_RATIO * w[0] as f64)
}

/// Size of the largest 8-connected component among same-level cells.
fn largest_component(cells: &[Cell]) -> usize {
    let set: HashSet<(u64, u64)> = cells.iter().map(|c| (c.i, c.j)).collect();
    let mut seen: HashSet<(u64, u64)> = HashSet::new();
    let mut best = 0;
    for &start in &set {
        if !seen.insert(start) {
            continue;
        }
        let mut size = 0;
        let mut queue = VecDeque::from([start]);
        while let Some((i, j)) = queue.pop_front() {
            size += 1;
            for di in -1i64..=1 {
                for dj in -1i64..=1 {
                    let n = ((i as i64 + di) as u64, (j as i64 + dj) as u64);
                    if set.contains(&n) && seen.insert(n) {
                        queue.push_back(n);
                    }
                }
            }
        }
        best = best.max(size);
    }
    best
}

/// Merges enclosures that provably contain the same root.
fn dedupe<T: Scalar>(found: Vec<Found<T>>) -> Vec<Found<T>> {
    let mut out: Vec<Found<T>> = Vec::new();
    'next: for r in found {
        for kept in out.iter_mut() {
            if same_root(kept, &r) {
                if r.tight.max_rad() < kept.tight.max_rad() {
                    kept.tight = r.tight;
                }
                continue 'next;
            }
        }
        out.push(r);
    }
    out
}

fn same_root<T: Scalar>(a: &Found<T>, b: &Found<T>) -> bool {
    if a.tight.subset_of(&b.unique) || b.tight.subset_of(&a.unique) {
        return true;
    }
    // Enclosures this tight that still overlap cannot hold two certified roots.
    a.tight.intersect(&b.tight).is_some()
}

fn simple_root<T: Scalar>(f: &MixedPolynomial<T>, enc: &Enclosure<T>, r: Found<T>) -> CertifiedRoot<T> {
    let (cx, cy) = r.tight.center();
    let (rx, ry) = r.tight.radii();
    let center = Complex::new(cx, cy);
    let det: Interval<T> = LocalForms::at(enc, cx, cy).jacobian(rx, ry);
    // The Krawczyk test proves every Jacobian in the region nonsingular, so a
    // point evaluation decides the sign when the enclosure straddles zero.
    let orientation = det
        .sign()
        .unwrap_or_else(|| if f.wirtinger_jacobian(center) >= T::zero() { 1 } else { -1 });
    CertifiedRoot {
        center,
        radius: rx.hypot(ry),
        orientation,
        residual: f.evaluate(center).norm(),
        multiplicity: orientation as i64,
        simple: true,
    }
}

fn cluster_cells<T: Scalar>(grid: &Grid<T>, leaves: &[Cell]) -> Vec<Vec<Cell>> {
    let boxes: Vec<IBox<T>> = leaves.iter().map(|&c| grid.closed(c).inflate(T::lit(1.01))).collect();
    let n = leaves.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if boxes[i].intersect(&boxes[j]).is_some() {
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<Cell>> = HashMap::new();
    for i in 0..n {
        let r = root(&mut parent, i);
        groups.entry(r).or_default().push(leaves[i]);
    }
    let mut out: Vec<Vec<Cell>> = groups.into_values().collect();
    for g in out.iter_mut() {
        g.sort();
    }
    out.sort();
    out
}

/// Winding-number certificate for a cluster of unresolved boxes.
fn cluster_root<T: Scalar>(
    f: &MixedPolynomial<T>,
    enc: &Enclosure<T>,
    grid: &Grid<T>,
    cluster: &[Cell],
    simple: &[CertifiedRoot<T>],
) -> Option<CertifiedRoot<T>> {
    let hull = cluster
        .iter()
        .map(|&c| grid.closed(c))
        .reduce(|a, b| a.hull(&b))?;
    let (cx, cy) = hull.center();
    let (rx, ry) = hull.radii();
    let center = Complex::new(cx, cy);
    let mut radius = rx.hypot(ry) * T::lit(2.0);
    for _ in 0..4 {
        if let Ok(w) = winding_number(f, enc, center, radius, SampleCheck::IntervalOnly) {
            let inside: i64 = simple
                .iter()
                .filter(|r| (r.center - center).norm() < radius)
                .map(|r| r.multiplicity)
                .sum();
            let m = w - inside;
            if m == 0 {
                return None;
            }
            return Some(CertifiedRoot {
                center,
                radius,
                orientation: if m > 0 { 1 } else { -1 },
                residual: f.evaluate(center).norm(),
                multiplicity: m,
                simple: false,
            });
        }
        radius = radius * T::lit(2.0);
    }
    None
}

/// Roots in the box `[−R, R]²` given by [`root_bound`].
pub fn solve<T: Scalar>(f: &MixedPolynomial<T>, cfg: &SolverConfig) -> Result<RootInventory<T>> {
    let r = root_bound(f)?;
    isolate_roots(f, Rect::square(r), cfg)
}

/// Certified number of roots of an admissible polynomial.
pub fn rho<T: Scalar>(f: &MixedPolynomial<T>) -> Result<usize> {
    solve(f, &SolverConfig::default())?.certified_rho()
}
