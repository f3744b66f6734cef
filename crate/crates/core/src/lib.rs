//! Certified root counting for mixed polynomials `f(z, z̄)`.
//!
//! The crate isolates and certifies the zeros of mixed polynomials, computes
//! the signed count from the top-degree factorization, builds the lens-equation
//! families and evaluates the Milnor-fibration invariants of the associated
//! weighted homogeneous polynomials.

pub mod census;
pub mod error;
pub mod families;
pub mod interval;
pub mod milnor;
pub mod mixedpoly;
pub mod realpair;
pub mod scalar;
pub mod signed_index;
pub mod solver;
pub mod sturm;
pub mod svg;
pub mod symmetry;
pub mod unipoly;
pub mod winding;

pub use error::{Error, Result};
pub use families::{FamilyKind, LensFamilySpec};
pub use interval::Interval;
pub use milnor::{dehomogenize, homogenize, invariants, MilnorReport, WeightedHomogPoly};
pub use mixedpoly::{Degrees, Exponent, MixedPolynomial};
pub use realpair::{BivariatePoly, RealPair, TaylorForm};
pub use scalar::Scalar;
pub use solver::{
    isolate_roots, rho, root_bound, solve, CertifiedRoot, Rect, RootInventory, SolverConfig,
};
pub use signed_index::{
    beta, is_admissible, local_multiplicity, top_part_factor, winding_beta, TopFactorization,
};

pub use sturm::{sturm_count, UniPoly};
pub use symmetry::{
    orbit_decompose, radial_equation, verify_ray_constraint, Branch, Orbit, RadialEquation,
    RayConfiguration,
};

pub use num_complex::Complex;

pub type C64 = Complex<f64>;
pub type MixedPoly = MixedPolynomial<f64>;
pub type MixedPoly32 = MixedPolynomial<f32>;
pub type WeightedHomogPoly64 = WeightedHomogPoly<f64>;
