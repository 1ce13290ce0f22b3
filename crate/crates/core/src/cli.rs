//! Command pipelines behind the `lagrange-biortho` binary.
//!
//! Each command reads a [`ProblemFile`] (or parameters), runs one module
//! pipeline and returns a [`Report`]: outputs plus a list of named checks,
//! each with a verdict and a residual. Exit status 0 means every check
//! passed.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::biortho::{
    biorthogonality_matrix, build_system, expand_in_interpolants, leading_nu, pairing,
    reconstruct, unweighted_expansion, BiorthogonalSystem,
};
use crate::contour::{
    contour_biortho_check, exp_samples_f64, hermite_divided_difference, Circle, ComplexSample,
};
use crate::divided::{newton_interpolant, Samples};
use crate::error::{Error, Result};
use crate::exponential::{
    exp_alpha_closed, exp_interpolant_closed, exp_nu_closed, exp_t_closed, exp_v_alt_eval,
    exp_v_eval, ExpGridProblem,
};
use crate::interpolation::{family_from_recurrence, lagrange_interpolant, monic_family, recurrence_step};
use crate::numerics::{Rational, Scalar, Tolerance};
use crate::polynomial::{nodal_polynomial, Polynomial};

/// Quadrature checks use this absolute threshold.
pub const CONTOUR_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Exact,
    Float,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

/// `{"nodes": [...], "values": [...], "mode": "exact" | "float"}` with
/// scalars written as strings ("3", "-1/2", "0.25").
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub nodes: Vec<String>,
    pub values: Vec<String>,
    #[serde(default)]
    pub mode: Mode,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let problem: ProblemFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if problem.nodes.len() != problem.values.len() {
            return Err(Error::Parse(format!(
                "{} nodes but {} values",
                problem.nodes.len(),
                problem.values.len()
            )));
        }
        Ok(problem)
    }

    pub fn samples<S: Scalar>(&self) -> Result<Samples<S>> {
        let parse = |v: &[String]| v.iter().map(|s| S::parse_scalar(s)).collect::<Result<Vec<S>>>();
        Samples::from_pairs(parse(&self.nodes)?, parse(&self.values)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs_digest: String,
    pub outputs: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(command: impl Into<String>, inputs: &Value) -> Self {
        let canonical = serde_json::to_string(inputs).expect("json value serializes");
        Report {
            command: command.into(),
            inputs_digest: hex::encode(Sha256::digest(canonical.as_bytes())),
            outputs: Map::new(),
            checks: Vec::new(),
        }
    }

    fn output(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("output serializes");
        self.outputs.insert(key.to_string(), value);
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, residual: f64) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            residual,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check_named(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Process exit code for an error: 2 bad input, 3 index out of range,
/// 4 degenerate construction, 5 numerical failure.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_)
        | Error::LengthMismatch { .. }
        | Error::DuplicateNode { .. }
        | Error::InvalidParameter(_)
        | Error::InvalidCircle(_)
        | Error::ZeroDenominator => 2,
        Error::IndexOutOfRange { .. } | Error::InsufficientNodes { .. } => 3,
        Error::DegenerateInterpolant(_)
        | Error::DegenerateInput(_)
        | Error::NuVanishes(_)
        | Error::ZeroSampleValue(_)
        | Error::InconsistentSamples(_) => 4,
        _ => 5,
    }
}

/// JSON error body written to stderr by the binary.
pub fn error_json(err: &Error) -> Value {
    json!({
        "error": format!("{err:?}").split(['(', ' ', '{']).next().unwrap_or_default(),
        "message": err.to_string(),
        "index": err.index(),
    })
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    /// Overrides the problem file's mode when set.
    pub mode: Option<Mode>,
    pub tolerance: Tolerance,
}


fn strings<S: Scalar>(xs: &[S]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn matrix_strings<S: Scalar>(m: &[Vec<S>]) -> Vec<Vec<String>> {
    m.iter().map(|row| strings(row)).collect()
}

fn scalar_residual<S: Scalar>(a: &S, b: &S) -> f64 {
    (a.clone() - b.clone()).to_f64().abs()
}

fn poly_residual<S: Scalar>(a: &Polynomial<S>, b: &Polynomial<S>) -> f64 {
    (a - b).coeffs().iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
}

fn mode_of(problem: &ProblemFile, opts: &Options) -> Mode {
    opts.mode.unwrap_or(problem.mode)
}

fn problem_inputs(problem: &ProblemFile, mode: Mode, extra: Value) -> Value {
    json!({ "nodes": problem.nodes, "values": problem.values, "mode": mode, "args": extra })
}

macro_rules! dispatch {
    ($problem:expr, $opts:expr, $f:ident ( $($arg:expr),* )) => {
        match mode_of($problem, $opts) {
            Mode::Exact => $f::<Rational>($($arg),*),
            Mode::Float => $f::<f64>($($arg),*),
        }
    };
}

/// Newton and Lagrange interpolants of degree `degree` and their agreement.
pub fn cmd_interpolate(problem: &ProblemFile, degree: usize, opts: &Options) -> Result<Report> {
    dispatch!(problem, opts, interpolate(problem, degree, opts))
}

fn interpolate<S: Scalar>(problem: &ProblemFile, degree: usize, opts: &Options) -> Result<Report> {
    let mode = mode_of(problem, opts);
    let samples = problem.samples::<S>()?;
    let tol = &opts.tolerance;
    let newton = newton_interpolant(&samples, degree)?;
    let lagrange = lagrange_interpolant(&samples, degree)?;
    let mut report = Report::new(
        format!("interpolate --degree {degree}"),
        &problem_inputs(problem, mode, json!({ "degree": degree })),
    );
    report.output("newton", &newton);
    report.output("lagrange", &lagrange);
    report.check(
        "newton_equals_lagrange",
        newton.approx_eq(&lagrange, tol),
        poly_residual(&newton, &lagrange),
    );
    let mut worst = 0.0f64;
    let mut ok = true;
    for (a, v) in samples.nodes().iter().zip(samples.values()).take(degree + 1) {
        let got = newton.eval(a);
        ok &= got.approx_eq(v, tol);
        worst = worst.max(scalar_residual(&got, v));
    }
    report.check("interpolation_condition", ok, worst);
    Ok(report)
}

/// Monic family from data, then regenerated from its `alpha`s by the
/// recurrence; checks that both agree and that the data is recovered.
pub fn cmd_recurrence(problem: &ProblemFile, n_max: usize, opts: &Options) -> Result<Report> {
    dispatch!(problem, opts, recurrence(problem, n_max, opts))
}

fn recurrence<S: Scalar>(problem: &ProblemFile, n_max: usize, opts: &Options) -> Result<Report> {
    let mode = mode_of(problem, opts);
    let tol = &opts.tolerance;
    let samples = problem.samples::<S>()?;
    let family = monic_family(&samples, n_max)?;
    let rebuilt = family_from_recurrence(family.grid(), family.alphas(), n_max)?;

    let mut report = Report::new(
        format!("recurrence --n-max {n_max}"),
        &problem_inputs(problem, mode, json!({ "n_max": n_max })),
    );
    report.output("alphas", strings(family.alphas()));
    report.output("phats", family.phats());
    report.output("recovered_values", strings(rebuilt.values()));

    let values_ok = family
        .values()
        .iter()
        .zip(rebuilt.values())
        .all(|(a, b)| a.approx_eq(b, tol));
    let values_res = family
        .values()
        .iter()
        .zip(rebuilt.values())
        .map(|(a, b)| scalar_residual(a, b))
        .fold(0.0, f64::max);
    report.check("values_recovered", values_ok, values_res);

    for n in 0..=n_max {
        let (a, b) = (&family.phats()[n], &rebuilt.phats()[n]);
        report.check(format!("phat_{n}_matches"), a.approx_eq(b, tol), poly_residual(a, b));
    }
    for n in 0..n_max {
        let phats = family.phats();
        let prev = if n == 0 { Polynomial::zero() } else { phats[n - 1].clone() };
        let step = recurrence_step(
            &phats[n],
            &prev,
            &family.grid().nodes()[n],
            &family.ratio(n)?,
            &family.ratio_prev(n)?,
        );
        report.check(
            format!("recurrence_{n}"),
            step.approx_eq(&phats[n + 1], tol),
            poly_residual(&step, &phats[n + 1]),
        );
        let lhs = &phats[n + 1] - &phats[n].scale(&family.ratio(n)?);
        let omega = nodal_polynomial(family.grid(), n + 1)?;
        report.check(
            format!("omega_relation_{n}"),
            lhs.approx_eq(&omega, tol),
            poly_residual(&lhs, &omega),
        );
    }
    Ok(report)
}

/// Pairing matrix `<P̂_n, V_m>` for `n, m <= n_max`, checked against
/// `-delta_{nm} / (nu_n alpha_n)`.
pub fn cmd_check_biortho(problem: &ProblemFile, n_max: usize, opts: &Options) -> Result<Report> {
    dispatch!(problem, opts, check_biortho(problem, n_max, opts))
}

fn system_for<S: Scalar>(samples: &Samples<S>, n_max: usize) -> Result<BiorthogonalSystem<S>> {
    if samples.len() < n_max + 2 {
        return Err(Error::InsufficientNodes {
            needed: n_max + 2,
            available: samples.len(),
        });
    }
    let family = monic_family(samples, n_max + 1)?;
    build_system(&family, n_max)
}

fn check_biortho<S: Scalar>(problem: &ProblemFile, n_max: usize, opts: &Options) -> Result<Report> {
    let mode = mode_of(problem, opts);
    let tol = &opts.tolerance;
    let samples = problem.samples::<S>()?;
    let system = system_for(&samples, n_max)?;
    let matrix = biorthogonality_matrix(&system, &samples, n_max)?;
    let family = system.family();

    let mut report = Report::new(
        format!("check-biortho --n-max {n_max}"),
        &problem_inputs(problem, mode, json!({ "n_max": n_max })),
    );
    report.output("alphas", strings(&family.alphas()[..=n_max]));
    report.output("nus", strings(system.nus()));
    report.output("t_hats", system.ts());
    report.output("matrix", matrix_strings(&matrix));

    let mut formula = Vec::with_capacity(n_max + 1);
    let mut alpha_inverse = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        formula.push(system.diagonal_formula(n)?);
        alpha_inverse.push(family.alpha(n)?.recip()?);
    }
    report.output(
        "normalization",
        json!({
            "residue_diagonal": strings(&matrix.iter().enumerate().map(|(n, row)| row[n].clone()).collect::<Vec<_>>()),
            "minus_inverse_nu_alpha": strings(&formula),
            "inverse_alpha": strings(&alpha_inverse),
            "note": "The diagonal of the residue-sum pairing is -1/(nu_n alpha_n). \
                     The frequently stated value 1/alpha_n does not match exact arithmetic \
                     (nodes 0,1,2 with values 1,2,5 give diag(-1/2, -1) against 1/alpha = (1, 1)).",
        }),
    );

    for (n, row) in matrix.iter().enumerate() {
        for (m, entry) in row.iter().enumerate() {
            if n == m {
                let expected = &formula[n];
                report.check(
                    format!("diagonal_{n}"),
                    entry.approx_eq(expected, tol),
                    scalar_residual(entry, expected),
                );
            } else {
                report.check(
                    format!("off_diagonal_{n}_{m}"),
                    entry.approx_eq(&S::zero(), tol),
                    entry.to_f64().abs(),
                );
            }
        }
    }
    Ok(report)
}

/// Expands `poly` in the monic interpolants of the problem data.
pub fn cmd_expand(problem: &ProblemFile, poly: &[String], opts: &Options) -> Result<Report> {
    dispatch!(problem, opts, expand(problem, poly, opts))
}

fn expand<S: Scalar>(problem: &ProblemFile, poly: &[String], opts: &Options) -> Result<Report> {
    let mode = mode_of(problem, opts);
    let tol = &opts.tolerance;
    let samples = problem.samples::<S>()?;
    let q = Polynomial::new(poly.iter().map(|s| S::parse_scalar(s)).collect::<Result<Vec<S>>>()?);
    let n = q.degree().unwrap_or(0);
    let system = system_for(&samples, n)?;
    let family = system.family();
    let xi = expand_in_interpolants(&q, &system, &samples)?;
    let rebuilt = reconstruct(&xi, family)?;

    let mut report = Report::new(
        "expand",
        &problem_inputs(problem, mode, json!({ "poly": poly })),
    );
    report.output("poly", &q);
    report.output("coefficients", strings(&xi));
    report.output("reconstruction", &rebuilt);
    report.check("reconstructs_input", rebuilt.approx_eq(&q, tol), poly_residual(&rebuilt, &q));

    let unweighted = unweighted_expansion(&q, &system)?;
    let unweighted_rebuilt = reconstruct(&unweighted, family)?;
    report.output(
        "unweighted_formula",
        json!({
            "coefficients": strings(&unweighted),
            "reconstructs_input": unweighted_rebuilt.approx_eq(&q, tol),
            "note": "alpha_k times the residue sum of q V_k without the 1/F weight; \
                     it generally fails to reconstruct q, the weighted pairing divided \
                     by the diagonal does.",
        }),
    );
    Ok(report)
}

/// Quadrature circle overrides from the command line.
#[derive(Debug, Clone, Copy, Default)]
pub struct ContourOptions {
    pub radius: Option<f64>,
    pub samples: Option<usize>,
}

impl ContourOptions {
    fn circle(&self, top: usize) -> Result<Circle> {
        let base = Circle::enclosing(0.0, top as f64, self.samples.unwrap_or(Circle::DEFAULT_SAMPLES))?;
        match self.radius {
            Some(r) => base.with_radius(r),
            None => Ok(base),
        }
    }
}

fn complex_json(c: &ComplexSample) -> Value {
    json!({ "re": c.re, "im": c.im })
}

/// Closed forms for `F = e^{hz}` on `0, 1, 2, ...` versus the generic
/// machinery, exactly in `q = e^h`; optionally the contour checks with
/// `h = ln q` (or the given `h`).
pub fn cmd_exp_example(
    q: &str,
    n_max: usize,
    with_contour: bool,
    h: Option<f64>,
    contour: &ContourOptions,
) -> Result<Report> {
    let q_exact: Rational = q.parse()?;
    let problem = ExpGridProblem::new(q_exact.clone(), n_max)?;
    let samples = problem.samples();
    let family = monic_family(samples, n_max + 1)?;
    let system = build_system(&family, n_max)?;
    let table = family.alphas();

    let mut report = Report::new(
        format!("exp-example --q {q} --n-max {n_max}"),
        &json!({ "q": q_exact.to_string(), "n_max": n_max, "with_contour": with_contour, "h": h }),
    );
    report.output("q", q_exact.to_string());
    report.output("alphas", strings(&table[..=n_max]));
    report.output("nus", strings(system.nus()));
    report.output("t_hats", system.ts());

    let nu = exp_nu_closed(&problem)?;
    for n in 0..=n_max {
        let closed = exp_interpolant_closed(&problem, n)?;
        let generic = newton_interpolant(samples, n)?;
        report.check(format!("interpolant_{n}"), closed == generic, poly_residual(&closed, &generic));

        let alpha = exp_alpha_closed(&problem, n)?;
        report.check(format!("alpha_{n}"), alpha == table[n], scalar_residual(&alpha, &table[n]));

        let nu_generic = leading_nu(&family, n)?;
        report.check(format!("nu_{n}"), nu_generic == nu, scalar_residual(&nu_generic, &nu));

        let t = exp_t_closed(&problem, n)?;
        report.check(format!("t_hat_{n}"), t == system.ts()[n], poly_residual(&t, &system.ts()[n]));

        for z in ["1/2", "7/3", "-3/2", "10"] {
            let z: Rational = z.parse()?;
            let direct = system.vs()[n].eval(&z);
            let Ok(direct) = direct else { continue };
            let alt = exp_v_alt_eval(&problem, n, &z)?;
            let hyper = exp_v_eval(&problem, n, &z)?;
            report.check(
                format!("v_{n}_at_{z}"),
                alt == direct && hyper == direct,
                scalar_residual(&alt, &direct).max(scalar_residual(&hyper, &direct)),
            );
        }
    }

    if with_contour {
        let h = match h {
            Some(h) => h,
            None if q_exact.to_f64() > 0.0 => q_exact.to_f64().ln(),
            None => {
                return Err(Error::InvalidParameter(
                    "contour checks need q > 0 or an explicit --h".into(),
                ))
            }
        };
        let mut hermite = Vec::new();
        for k in 0..=n_max {
            let circle = contour.circle(k)?;
            let est = hermite_divided_difference(h, k, &circle)?;
            let exact = (h.exp() - 1.0).powi(k as i32) / (1..=k).map(|i| i as f64).product::<f64>();
            let res = est.distance_to(exact);
            report.check(format!("hermite_{k}"), res < CONTOUR_TOLERANCE, res);
            hermite.push(complex_json(&est));
        }
        report.output("hermite", hermite);

        let top = n_max.min(3);
        let float_samples = exp_samples_f64(h, top + 2)?;
        let float_system = system_for(&float_samples, top)?;
        let mut rows = Vec::new();
        for n in 0..=top {
            let mut row = Vec::new();
            for m in 0..=top {
                let circle = contour.circle(n.max(m + 1))?;
                let est = contour_biortho_check(h, n, m, &circle)?;
                let residue = pairing(&float_system.family().phats()[n], &float_system.vs()[m], &float_samples)?;
                let res = est.distance_to(residue);
                report.check(format!("contour_pairing_{n}_{m}"), res < CONTOUR_TOLERANCE, res);
                row.push(complex_json(&est));
            }
            rows.push(row);
        }
        report.output("contour_pairing", rows);
        report.output("h", h);
    }
    Ok(report)
}

/// Hermite contour integral for `F = e^{hz}` on `0..=k` against
/// `(e^h - 1)^k / k!`.
pub fn cmd_hermite(h: f64, k: usize, contour: &ContourOptions) -> Result<Report> {
    if !h.is_finite() {
        return Err(Error::InvalidParameter(format!("h = {h}")));
    }
    let circle = contour.circle(k)?;
    let est = hermite_divided_difference(h, k, &circle)?;
    let exact = (h.exp() - 1.0).powi(k as i32) / (1..=k).map(|i| i as f64).product::<f64>();
    let mut report = Report::new(
        format!("hermite --h {h} --k {k}"),
        &json!({ "h": h, "k": k, "radius": circle.radius(), "samples": circle.sample_count() }),
    );
    report.output("circle", circle);
    report.output("estimate", complex_json(&est));
    report.output("closed_form", exact);
    report.check("divided_difference", (est.re - exact).abs() < CONTOUR_TOLERANCE, (est.re - exact).abs());
    report.check("imaginary_part", est.im.abs() < CONTOUR_TOLERANCE, est.im.abs());
    Ok(report)
}
