use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use sl2c::contraction::{contraction_trace, eta_range};
use sl2c::littlegroup::standard_momentum;
use sl2c::minkowski::lorentz_transform;
use sl2c::spinorstates::{gauge_transform_potential, weinberg_condition, FourPotential};
use sl2c::suites::{self, Suite, DEFAULT_SEED};
use sl2c::{FourMomentum, FourVector, GroupElement, MassClass, Mat2, MultiSpinorState, Report, Transform};

/// Numerical checks for the 2×2 representation of the Lorentz group.
#[derive(Debug, Parser)]
#[command(name = "sl2c", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Tolerance for `classify` (mass shell) and `weinberg` (residual).
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Algebra,
    Littlegroup,
    Contraction,
    Spinors,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Algebra => Suite::Algebra,
            SuiteArg::Littlegroup => Suite::Littlegroup,
            SuiteArg::Contraction => Suite::Contraction,
            SuiteArg::Spinors => Suite::Spinors,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Classify a four-momentum as massive, massless or imaginary-mass.
    Classify {
        #[arg(allow_negative_numbers = true)]
        p0: f64,
        #[arg(allow_negative_numbers = true)]
        pz: f64,
        #[arg(allow_negative_numbers = true)]
        px: f64,
        #[arg(allow_negative_numbers = true)]
        py: f64,
    },
    /// Apply a group element to a four-vector or a four-potential.
    ///
    /// Without --vector or --potential, reads a JSON document
    /// `{"element": ..., "vector" | "potential": ...}` from stdin.
    Transform {
        /// One factor `{"kind": ..., "param": ...}` or a list applied right to left.
        #[arg(long)]
        element: Option<String>,
        /// `{"t": .., "z": .., "x": .., "y": ..}`.
        #[arg(long, conflicts_with = "potential")]
        vector: Option<String>,
        /// `{"a0": .., "az": .., "ax": .., "ay": ..}`.
        #[arg(long)]
        potential: Option<String>,
    },
    /// Tabulate the approach of boosted rotations to the gauge matrix.
    Contract {
        #[arg(long, allow_negative_numbers = true)]
        gamma: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        phi: f64,
        #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
        eta_min: f64,
        #[arg(long, default_value_t = 8.0, allow_negative_numbers = true)]
        eta_max: f64,
        #[arg(long, default_value_t = 11)]
        steps: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Test whether a spinor product is annihilated by N1 and N2.
    Weinberg {
        /// A product such as "uu", "u v dot" or "vdvd vd vd".
        state: String,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TransformDoc {
    element: serde_json::Value,
    vector: Option<FourVector>,
    potential: Option<FourPotential>,
}

/// A single factor or a list of factors.
fn parse_element(value: serde_json::Value) -> Result<Vec<Transform>> {
    let factors = if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|t| vec![t])
    };
    factors.context("invalid element JSON")
}

/// `{"re": [[..]], "im": [[..]]}`.
fn matrix_json(m: &Mat2) -> serde_json::Value {
    let part = |f: fn(sl2c::C64) -> f64| {
        json!([[f(m.get(0, 0)), f(m.get(0, 1))], [f(m.get(1, 0)), f(m.get(1, 1))]])
    };
    json!({ "re": part(|z| z.re), "im": part(|z| z.im) })
}

enum Target {
    Vector(FourVector),
    Potential(FourPotential),
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).with_context(|| format!("invalid {what} JSON"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(passed)` or an input error.
fn run(cli: &Cli) -> Result<bool> {
    if let Some(tol) = cli.tol {
        if !(tol.is_finite() && tol >= 0.0) {
            bail!("--tol must be a finite non-negative number, got {tol}");
        }
    }
    let mut out = io::stdout().lock();
    match &cli.command {
        Command::Verify { suite } => {
            let report = suites::run((*suite).into(), cli.seed);
            if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                print_report(&mut out, &report)?;
            }
            Ok(report.all_passed())
        }
        Command::Classify { p0, pz, px, py } => {
            classify(&mut out, cli, FourMomentum::new(*p0, *pz, *px, *py))?;
            Ok(true)
        }
        Command::Transform {
            element,
            vector,
            potential,
        } => {
            let (factors, target) = transform_inputs(element, vector, potential)?;
            transform(&mut out, cli, factors, target)?;
            Ok(true)
        }
        Command::Contract {
            gamma,
            phi,
            eta_min,
            eta_max,
            steps,
            format,
        } => {
            let format = format.unwrap_or(if cli.json { Format::Json } else { Format::Text });
            contract(&mut out, format, *gamma, *phi, *eta_min, *eta_max, *steps)?;
            Ok(true)
        }
        Command::Weinberg { state } => weinberg(&mut out, cli, state),
    }
}

fn print_report(out: &mut impl Write, report: &Report) -> Result<()> {
    for c in &report.checks {
        let mark = if c.passed() { "PASS" } else { "FAIL" };
        let rel = match c.bound {
            sl2c::report::Bound::AtMost => "<=",
            sl2c::report::Bound::AtLeast => ">=",
        };
        writeln!(
            out,
            "{mark}  {}  [{:e} {rel} {:e}]  ({})",
            c.name, c.deviation, c.tolerance, c.anchor
        )?;
    }
    writeln!(
        out,
        "{}: {} passed, {} failed",
        report.suite, report.summary.passed, report.summary.failed
    )?;
    Ok(())
}

fn matrix_rows(m: &Mat2) -> String {
    let e = |r: usize, c: usize| {
        let z = m.get(r, c);
        if z.im == 0.0 {
            format!("{}", z.re)
        } else {
            format!("{}{:+}i", z.re, z.im)
        }
    };
    format!("[[{}, {}], [{}, {}]]", e(0, 0), e(0, 1), e(1, 0), e(1, 1))
}

fn class_name(class: MassClass) -> &'static str {
    match class {
        MassClass::Massive => "Massive",
        MassClass::Massless => "Massless",
        MassClass::ImaginaryMass => "ImaginaryMass",
    }
}

fn classify(out: &mut impl Write, cli: &Cli, p: FourMomentum) -> Result<()> {
    if !p.as_vector().is_finite() {
        bail!("momentum components must be finite");
    }
    let tol = cli.tol.unwrap_or_else(|| MassClass::default_tolerance(&p));
    let class = p.classify(tol);
    let det = p.mass_squared();
    let standard = standard_momentum(class);
    if cli.json {
        let doc = json!({
            "momentum": p,
            "class": class_name(class),
            "det": det,
            "tolerance": tol,
            "matrix": matrix_json(&p.to_matrix()),
            "standard_momentum": matrix_json(&standard),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        writeln!(out, "{}, det={}", class_name(class), det)?;
        writeln!(out, "matrix: {}", matrix_rows(&p.to_matrix()))?;
        writeln!(out, "standard momentum: {}", matrix_rows(&standard))?;
    }
    Ok(())
}

fn transform_inputs(
    element: &Option<String>,
    vector: &Option<String>,
    potential: &Option<String>,
) -> Result<(Vec<Transform>, Target)> {
    let (factors, vector, potential) = if vector.is_some() || potential.is_some() {
        let element = element
            .as_deref()
            .context("--element is required with --vector or --potential")?;
        (
            parse_element(parse_json("element", element)?)?,
            vector.as_deref().map(|v| parse_json("vector", v)).transpose()?,
            potential.as_deref().map(|a| parse_json("potential", a)).transpose()?,
        )
    } else {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        let mut doc: TransformDoc = parse_json("transform document", &text)?;
        if let Some(e) = element {
            doc.element = parse_json("element", e)?;
        }
        (parse_element(doc.element)?, doc.vector, doc.potential)
    };
    let target = match (vector, potential) {
        (Some(v), None) => Target::Vector(v),
        (None, Some(a)) => Target::Potential(a),
        (Some(_), Some(_)) => bail!("give either a vector or a potential, not both"),
        (None, None) => bail!("a vector or a potential is required"),
    };
    if factors.is_empty() {
        bail!("element list is empty");
    }
    if let Some(t) = factors.iter().find(|t| !t.is_finite()) {
        bail!("non-finite parameter in {t:?}");
    }
    Ok((factors, target))
}

#[derive(Serialize)]
struct VectorOutput {
    element: Vec<Transform>,
    input: FourVector,
    output: FourVector,
    interval_before: f64,
    interval_after: f64,
}

#[derive(Serialize)]
struct PotentialOutput {
    element: Vec<Transform>,
    method: &'static str,
    input: FourPotential,
    output: FourPotential,
    delta_ax: f64,
    delta_ay: f64,
    /// Change in `A0 + Az`.
    shift: f64,
}

fn transform(out: &mut impl Write, cli: &Cli, factors: Vec<Transform>, target: Target) -> Result<()> {
    let g = factors
        .iter()
        .map(Transform::element)
        .fold(GroupElement::identity(), |acc, e| acc * e);
    let doc = match target {
        Target::Vector(v) => {
            if !v.is_finite() {
                bail!("vector components must be finite");
            }
            let w = lorentz_transform(&g, &v);
            serde_json::to_value(VectorOutput {
                element: factors,
                input: v,
                output: w,
                interval_before: v.interval(),
                interval_after: w.interval(),
            })?
        }
        Target::Potential(a) => {
            if !a.is_finite() {
                bail!("potential components must be finite");
            }
            let (method, b) = match factors.as_slice() {
                [Transform::Gauge { gamma, phi }] => {
                    ("gauge", gauge_transform_potential(&a, *gamma, *phi))
                }
                _ => ("congruence", FourPotential::from(lorentz_transform(&g, &a.as_vector()))),
            };
            serde_json::to_value(PotentialOutput {
                element: factors,
                method,
                input: a,
                output: b,
                delta_ax: b.ax - a.ax,
                delta_ay: b.ay - a.ay,
                shift: (b.a0 + b.az) - (a.a0 + a.az),
            })?
        }
    };
    if cli.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        let obj = doc.as_object().expect("object output");
        for (k, v) in obj {
            writeln!(out, "{k}: {v}")?;
        }
    }
    Ok(())
}

fn contract(
    out: &mut impl Write,
    format: Format,
    gamma: f64,
    phi: f64,
    eta_min: f64,
    eta_max: f64,
    steps: usize,
) -> Result<()> {
    if ![gamma, phi, eta_min, eta_max].iter().all(|x| x.is_finite()) {
        bail!("contract parameters must be finite");
    }
    if eta_min > eta_max {
        bail!("--eta-min {eta_min} exceeds --eta-max {eta_max}");
    }
    if steps == 0 {
        bail!("--steps must be positive");
    }
    let trace = contraction_trace(gamma, phi, &eta_range(eta_min, eta_max, steps))?;
    let exponent = trace.fitted_exponent();
    match format {
        Format::Json => {
            let doc = json!({
                "gamma": trace.gamma,
                "phi": trace.phi,
                "samples": trace.samples,
                "fitted_exponent": exponent,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        Format::Csv => {
            writeln!(out, "eta,theta,deviation")?;
            for s in &trace.samples {
                writeln!(out, "{},{},{}", s.eta, s.theta, s.deviation)?;
            }
        }
        Format::Text => {
            writeln!(out, "{:>12} {:>24} {:>24}", "eta", "theta", "deviation")?;
            for s in &trace.samples {
                writeln!(out, "{:>12.6} {:>24.17e} {:>24.17e}", s.eta, s.theta, s.deviation)?;
            }
            match exponent {
                Some(k) => writeln!(out, "fitted exponent: {k}")?,
                None => writeln!(out, "fitted exponent: undefined (no positive deviations)")?,
            }
        }
    }
    Ok(())
}

fn weinberg(out: &mut impl Write, cli: &Cli, product: &str) -> Result<bool> {
    let state: MultiSpinorState = product.parse()?;
    let tol = cli.tol.unwrap_or(sl2c::mat2::EXACT_TOL);
    let r = weinberg_condition(&state, tol);
    if cli.json {
        let doc = json!({
            "state": state.to_string(),
            "rank": state.rank(),
            "tolerance": tol,
            "residual_n1": r.residual_n1,
            "residual_n2": r.residual_n2,
            "passes": r.passes,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        writeln!(
            out,
            "{}: {} (|N1 s| = {:e}, |N2 s| = {:e}, tol {:e})",
            state,
            if r.passes { "pass" } else { "fail" },
            r.residual_n1,
            r.residual_n2,
            tol
        )?;
    }
    Ok(r.passes)
}
