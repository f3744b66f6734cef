use mixlens::{Error, LensFamilySpec, MilnorReport, MixedPoly, Rect, RootInventory, TopFactorization};
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NOT_ADMISSIBLE: i32 = 3;
pub const EXIT_UNCERTIFIED: i32 = 4;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotAdmissible { .. } => EXIT_NOT_ADMISSIBLE,
        Error::Uncertified { .. }
        | Error::NonIsolatedZeroSet { .. }
        | Error::CircleThroughZero { .. }
        | Error::RayViolation { .. }
        | Error::NotInvariant { .. } => EXIT_UNCERTIFIED,
        _ => EXIT_INPUT,
    }
}

/// Variant name of an error, e.g. `NotAdmissible`.
pub fn error_kind(e: &Error) -> String {
    let debug = format!("{e:?}");
    debug
        .split(|c: char| !c.is_alphanumeric())
        .next()
        .unwrap_or_default()
        .to_string()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootEntry {
    pub re: f64,
    pub im: f64,
    pub radius: f64,
    pub orientation: i8,
    pub multiplicity: i64,
    pub simple: bool,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Factor {
    pub gamma: [f64; 2],
    pub nu: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Factorization {
    pub c: [f64; 2],
    pub p: u32,
    pub q: u32,
    pub factors: Vec<Factor>,
    pub d: u32,
}

impl From<&TopFactorization<f64>> for Factorization {
    fn from(t: &TopFactorization<f64>) -> Self {
        Self {
            c: [t.c.re, t.c.im],
            p: t.p,
            q: t.q,
            factors: t
                .factors
                .iter()
                .map(|(g, nu)| Factor { gamma: [g.re, g.im], nu: *nu })
                .collect(),
            d: t.d,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RaySummary {
    pub n: u32,
    pub on_l: usize,
    pub on_l_prime: usize,
    pub at_origin: usize,
    pub orbit_sizes: Vec<usize>,
    pub radial_prediction: Option<usize>,
    pub problems: Vec<String>,
}

/// Machine-readable outcome of every subcommand, written even on failure.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub status: String,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<LensFamilySpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<MixedPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search_box: Option<Rect<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signed_sum: Option<i64>,
    pub certified: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub roots: Vec<RootEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unresolved_boxes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub admissible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<Factorization>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rays: Option<RaySummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub milnor: Option<MilnorReport>,
    pub seconds: f64,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            status: "ok".into(),
            ..Self::default()
        }
    }

    pub fn fail(&mut self, e: &Error) {
        self.status = "error".into();
        self.exit_code = exit_code(e);
        self.error = Some(ErrorInfo {
            kind: error_kind(e),
            message: e.to_string(),
        });
    }

    pub fn set_inventory(&mut self, inv: &RootInventory<f64>) {
        self.search_box = Some(inv.search_box);
        self.rho = Some(inv.rho);
        self.signed_sum = Some(inv.signed_sum);
        self.certified = inv.certified;
        self.unresolved_boxes = Some(inv.unresolved_boxes.len());
        self.roots = inv
            .roots
            .iter()
            .map(|r| RootEntry {
                re: r.center.re,
                im: r.center.im,
                radius: r.radius,
                orientation: r.orientation,
                multiplicity: r.multiplicity,
                simple: r.simple,
                residual: r.residual,
            })
            .collect();
    }
}
