mod input;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use mixlens::census::{lens_range, point_mass_census, sweep, sweep_values, CensusRow};
use mixlens::milnor::invariants_with_rho;
use mixlens::symmetry::radial_prediction;
use mixlens::{
    beta, is_admissible, isolate_roots, orbit_decompose, radial_equation, solve, svg,
    top_part_factor, verify_ray_constraint, Branch, Complex, Error, FamilyKind, LensFamilySpec,
    MixedPoly, Rect, RootInventory, SolverConfig,
};
use serde::Serialize;

use input::{read_input, Input};
use report::{Factorization, RaySummary, RunReport, EXIT_OK};

const RAY_TOL: f64 = 1e-8;

#[derive(Parser)]
#[command(name = "mixlens", version, about = "Certified root counts of mixed polynomials and lens equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Isolate and certify all roots; prints a JSON report.
    Solve {
        /// Polynomial file (JSON or text form); standard input when omitted.
        input: Option<PathBuf>,
        /// Search box `x0 x1 y0 y1`; defaults to the certified root bound.
        #[arg(long = "box", num_args = 4, value_names = ["X0", "X1", "Y0", "Y1"], allow_negative_numbers = true)]
        search_box: Option<Vec<f64>>,
        /// Also write the report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write a plot of the zero curves and roots.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Signed root count from the top-degree factorization.
    Beta { input: Option<PathBuf> },
    /// Emit the polynomial JSON of a family member.
    Family(FamilyArgs),
    /// Sweep a family parameter (CSV), or sample random point-mass lenses.
    Census {
        #[command(flatten)]
        family: FamilyArgs,
        /// `PARAM LO HI STEPS`.
        #[arg(long, num_args = 4, value_names = ["PARAM", "LO", "HI", "STEPS"], allow_negative_numbers = true)]
        sweep: Option<Vec<String>>,
        /// Geometric spacing of the sweep values.
        #[arg(long)]
        log: bool,
        /// Number of random configurations for `point_masses`.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Radial equation of an ell family on one branch and its Sturm count.
    Radial {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        a: f64,
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
        /// `L` or `L'`.
        #[arg(long, default_value = "L")]
        branch: Branch,
    },
    /// Milnor fibration invariants of the weighted homogenization.
    Milnor {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        q: u32,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// SVG of the curves Re f = 0 (green), Im f = 0 (red) and the roots.
    Plot {
        input: Option<PathBuf>,
        #[arg(long = "box", num_args = 4, value_names = ["X0", "X1", "Y0", "Y1"], allow_negative_numbers = true)]
        search_box: Option<Vec<f64>>,
        #[arg(long, default_value_t = svg::DEFAULT_RESOLUTION)]
        resolution: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

#[derive(Args, Clone, Copy)]
struct SolverArgs {
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 60)]
    max_depth: u32,
    /// Count non-simple roots by |multiplicity| instead of refusing.
    #[arg(long)]
    count_multiplicity: bool,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            tol: self.tol,
            max_depth: self.max_depth,
            count_multiplicity: self.count_multiplicity,
        }
    }
}

/// Coefficient lists are `;`-separated entries `re` or `re,im`, ascending
/// powers, or a JSON array of `[re, im]` pairs.
#[derive(Args, Clone)]
struct FamilyArgs {
    kind: FamilyKind,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    t: Option<f64>,
    #[arg(long)]
    preset: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alphas: Option<String>,
}

fn parse_coeffs(s: &str) -> Result<Vec<[f64; 2]>, Error> {
    let s = s.trim();
    if s.starts_with('[') {
        return serde_json::from_str(s).map_err(|e| Error::Parse(format!("coefficient list: {e}")));
    }
    s.split(';')
        .map(|part| {
            let nums: Vec<f64> = part
                .split(',')
                .map(|x| x.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|e| Error::Parse(format!("coefficient `{part}`: {e}")))?;
            match nums[..] {
                [re] => Ok([re, 0.0]),
                [re, im] => Ok([re, im]),
                _ => Err(Error::Parse(format!("coefficient `{part}`"))),
            }
        })
        .collect()
}

impl FamilyArgs {
    fn spec(&self) -> Result<LensFamilySpec, Error> {
        let mut s = LensFamilySpec::new(self.kind);
        s.n = self.n;
        s.m = self.m;
        s.a = self.a;
        s.b = self.b;
        s.eps = self.eps;
        s.t = self.t;
        s.preset = self.preset;
        let list = |v: &Option<String>| v.as_deref().map(parse_coeffs).transpose().map(Option::unwrap_or_default);
        s.p = list(&self.p)?;
        s.q = list(&self.q)?;
        s.r = list(&self.r)?;
        s.alphas = list(&self.alphas)?;
        Ok(s.resolved())
    }
}

/// Writes to standard output, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn print_json<T: Serialize>(value: &T) {
    emit(&(serde_json::to_string_pretty(value).expect("report serializes") + "\n"));
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    std::fs::write(path, contents).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn search_rect(v: &Option<Vec<f64>>) -> Result<Option<Rect<f64>>, Error> {
    v.as_ref().map(|b| Rect::new(b[0], b[1], b[2], b[3])).transpose()
}

fn inventory(f: &MixedPoly, rect: Option<Rect<f64>>, family: Option<&LensFamilySpec>, cfg: &SolverConfig) -> Result<RootInventory<f64>, Error> {
    let inv = match rect {
        Some(r) => isolate_roots(f, r, cfg)?,
        None => solve(f, cfg)?,
    };
    Ok(match family.map(|s| s.kind) {
        Some(FamilyKind::Ell) => inv.without_point(Complex::new(0.0, 0.0)),
        _ => inv,
    })
}

fn ray_summary(inv: &RootInventory<f64>, spec: &LensFamilySpec) -> Option<RaySummary> {
    if !matches!(spec.kind, FamilyKind::Ell | FamilyKind::EllEps) {
        return None;
    }
    let n = spec.n?;
    let mut out = RaySummary { n, ..RaySummary::default() };
    match verify_ray_constraint(inv, n, RAY_TOL) {
        Ok(rays) => {
            out.on_l = rays.on_branch(Branch::L);
            out.on_l_prime = rays.on_branch(Branch::LPrime);
            out.at_origin = rays.at_origin.len();
        }
        Err(e) => out.problems.push(e.to_string()),
    }
    match orbit_decompose(inv, n, RAY_TOL) {
        Ok(orbits) => out.orbit_sizes = orbits.iter().map(|o| o.members.len()).collect(),
        Err(e) => out.problems.push(e.to_string()),
    }
    if let (Some(m), Some(a)) = (spec.m, spec.a) {
        let eps = if spec.kind == FamilyKind::Ell { 0.0 } else { spec.eps.unwrap_or(0.0) };
        match radial_prediction(n, m, a, eps) {
            Ok(k) => out.radial_prediction = Some(k),
            Err(e) => out.problems.push(e.to_string()),
        }
    }
    Some(out)
}

/// Runs `body` on a fresh report and prints the report.
fn with_report(command: &str, body: impl FnOnce(&mut RunReport) -> Result<(), Error>) -> i32 {
    let start = Instant::now();
    let mut report = RunReport::new(command);
    if let Err(e) = body(&mut report) {
        report.fail(&e);
    }
    report.seconds = start.elapsed().as_secs_f64();
    print_json(&report);
    report.exit_code
}

fn attach_input(report: &mut RunReport, input: &Input) {
    report.input = Some(input.source.clone());
    report.family = input.family.clone();
    report.polynomial = Some(input.poly.clone());
    report.text = Some(input.poly.to_string());
}

fn run_solve(
    path: Option<&Path>,
    search_box: &Option<Vec<f64>>,
    json: Option<&Path>,
    svg_out: Option<&Path>,
    cfg: SolverConfig,
) -> i32 {
    let start = Instant::now();
    let mut report = RunReport::new("solve");
    let outcome = (|| -> Result<(), Error> {
        let input = read_input(path)?;
        attach_input(&mut report, &input);
        let rect = search_rect(search_box)?;
        report.beta = beta(&input.poly).ok();
        let inv = inventory(&input.poly, rect, input.family.as_ref(), &cfg)?;
        report.set_inventory(&inv);
        if let Some(spec) = &input.family {
            report.rays = ray_summary(&inv, spec);
        }
        if let Some(p) = svg_out {
            write_file(p, &svg::render(&input.poly, &inv.search_box, &inv.roots, svg::DEFAULT_RESOLUTION))?;
        }
        inv.certified_rho().map(|_| ())
    })();
    if let Err(e) = outcome {
        report.fail(&e);
    }
    report.seconds = start.elapsed().as_secs_f64();
    if let Some(p) = json {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        if let Err(e) = write_file(p, &text) {
            report.fail(&e);
        }
    }
    print_json(&report);
    report.exit_code
}

fn run_beta(path: Option<&Path>) -> i32 {
    with_report("beta", |report| {
        let input = read_input(path)?;
        attach_input(report, &input);
        let fac = top_part_factor(&input.poly)?;
        report.factorization = Some(Factorization::from(&fac));
        report.admissible = Some(is_admissible(&input.poly, mixlens::signed_index::DEFAULT_BAND)?);
        report.beta = Some(beta(&input.poly)?);
        Ok(())
    })
}

fn run_family(args: &FamilyArgs) -> i32 {
    let result = (|| -> Result<serde_json::Value, Error> {
        let spec = args.spec()?;
        let f = spec.elaborate()?;
        let mut value = serde_json::to_value(&f).expect("polynomial serializes");
        value["family"] = serde_json::to_value(&spec).expect("spec serializes");
        Ok(value)
    })();
    match result {
        Ok(v) => {
            print_json(&v);
            EXIT_OK
        }
        Err(e) => with_report("family", |_| Err(e)),
    }
}

fn run_census(
    family: &FamilyArgs,
    sweep_args: &Option<Vec<String>>,
    log: bool,
    samples: usize,
    seed: u64,
    cfg: SolverConfig,
) -> i32 {
    let result = (|| -> Result<Vec<String>, Error> {
        let spec = family.spec()?;
        match sweep_args {
            Some(v) => {
                let num = |s: &str| s.parse::<f64>().map_err(|e| Error::Parse(format!("`{s}`: {e}")));
                let steps = v[3].parse::<usize>().map_err(|e| Error::Parse(format!("steps: {e}")))?;
                let values = sweep_values(num(&v[1])?, num(&v[2])?, steps, log)?;
                let mut lines = vec![CensusRow::CSV_HEADER.to_string()];
                lines.extend(sweep(&spec, &v[0], &values, &cfg)?.iter().map(CensusRow::to_csv));
                Ok(lines)
            }
            None if spec.kind == FamilyKind::PointMasses => {
                let n = spec.n.ok_or_else(|| Error::BadParameters("point_masses census needs --n".into()))? as usize;
                let allowed = lens_range(n);
                let mut lines = vec!["sample,rho,certified,in_range,seconds".to_string()];
                for (i, s) in point_mass_census(n, samples, seed, &cfg)?.iter().enumerate() {
                    let rho = s.rho.map(|r| r.to_string()).unwrap_or_default();
                    let in_range = s.rho.map(|r| allowed.contains(&r).to_string()).unwrap_or_default();
                    lines.push(format!("{i},{rho},{},{in_range},{:.6}", s.certified, s.seconds));
                }
                Ok(lines)
            }
            None => Err(Error::BadParameters("census needs --sweep PARAM LO HI STEPS".into())),
        }
    })();
    match result {
        Ok(lines) => {
            emit(&(lines.join("\n") + "\n"));
            EXIT_OK
        }
        Err(e) => with_report("census", |_| Err(e)),
    }
}

#[derive(Serialize)]
struct RadialOutput {
    n: u32,
    m: u32,
    a: f64,
    eps: f64,
    branch: Branch,
    equation: String,
    coeffs: Vec<f64>,
    real_roots: usize,
    multiplicity: usize,
    family_roots: usize,
}

fn run_radial(n: u32, m: u32, a: f64, eps: f64, branch: Branch) -> i32 {
    let result = (|| -> Result<RadialOutput, Error> {
        let eq = radial_equation(n, m, a, eps, branch)?;
        let real_roots = eq.real_roots()?;
        Ok(RadialOutput {
            n,
            m,
            a,
            eps,
            branch,
            equation: eq.to_string(),
            coeffs: eq.coeffs.clone(),
            real_roots,
            multiplicity: eq.multiplicity(),
            family_roots: real_roots * eq.multiplicity(),
        })
    })();
    match result {
        Ok(out) => {
            print_json(&out);
            EXIT_OK
        }
        Err(e) => with_report("radial", |_| Err(e)),
    }
}

fn run_milnor(path: Option<&Path>, p: u32, q: u32, cfg: SolverConfig) -> i32 {
    with_report("milnor", |report| {
        let input = read_input(path)?;
        attach_input(report, &input);
        mixlens::homogenize(&input.poly, p, q)?;
        let inv = inventory(&input.poly, None, input.family.as_ref(), &cfg)?;
        report.set_inventory(&inv);
        report.beta = beta(&input.poly).ok();
        let rho = inv.certified_rho()?;
        report.milnor = Some(invariants_with_rho(&input.poly, p, q, rho)?);
        Ok(())
    })
}

fn run_plot(
    path: Option<&Path>,
    search_box: &Option<Vec<f64>>,
    resolution: usize,
    out: Option<&Path>,
    cfg: SolverConfig,
) -> i32 {
    let result = (|| -> Result<(String, RunReport), Error> {
        let input = read_input(path)?;
        let mut report = RunReport::new("plot");
        attach_input(&mut report, &input);
        let rect = search_rect(search_box)?;
        let inv = match rect {
            Some(r) => isolate_roots(&input.poly, r, &cfg)?,
            None => solve(&input.poly, &cfg)?,
        };
        report.set_inventory(&inv);
        Ok((svg::render(&input.poly, &inv.search_box, &inv.roots, resolution), report))
    })();
    match result {
        Ok((svg_text, report)) => match out {
            Some(p) => match write_file(p, &svg_text) {
                Ok(()) => {
                    print_json(&report);
                    EXIT_OK
                }
                Err(e) => with_report("plot", |_| Err(e)),
            },
            None => {
                emit(&svg_text);
                EXIT_OK
            }
        },
        Err(e) => with_report("plot", |_| Err(e)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let code = match &cli.command {
        Command::Solve { input, search_box, json, svg, solver } => {
            run_solve(input.as_deref(), search_box, json.as_deref(), svg.as_deref(), solver.config())
        }
        Command::Beta { input } => run_beta(input.as_deref()),
        Command::Family(args) => run_family(args),
        Command::Census { family, sweep, log, samples, seed, solver } => {
            run_census(family, sweep, *log, *samples, *seed, solver.config())
        }
        Command::Radial { n, m, a, eps, branch } => run_radial(*n, *m, *a, *eps, *branch),
        Command::Milnor { input, p, q, solver } => run_milnor(input.as_deref(), *p, *q, solver.config()),
        Command::Plot { input, search_box, resolution, out, solver } => {
            run_plot(input.as_deref(), search_box, *resolution, out.as_deref(), solver.config())
        }
    };
    ExitCode::from(code as u8)
}
