//! Command execution: parameter checking, evaluation dispatch, and the
//! table and verification output formats.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use gammazeta::special::{gamma, lerch_phi, riemann_zeta_result, LerchParams};
use gammazeta::{
    anyon_integral, bose_einstein_integral, default_grid, fermi_dirac_integral, phi, psi,
    run_identity_suite, summarize, AnyonWeights, ComplexScalar, Error, EvalConfig, EvalResult,
    GammaZetaPoint, IdentityCase, IdentityId, Method, MethodPolicy,
};

use crate::scalar::{format_complex, parse_complex};

/// A command failure carrying the process exit code.
///
/// Codes: 1 malformed input, 2 domain error, 3 non-convergence,
/// 4 unexpected verification failure.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: msg.into(),
        }
    }

    pub fn eval(err: Error) -> Self {
        let code = match err {
            Error::Domain(_) | Error::Pole(_) | Error::Unsupported(_) => 2,
            Error::NotConverged { .. } | Error::NonFinite(_) => 3,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

/// Functions the CLI can evaluate.
#[derive(Copy, Clone, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum FunctionName {
    /// Gamma function of a complex argument.
    Gamma,
    /// Riemann zeta function.
    Zeta,
    /// Hurwitz-Lerch transcendent Phi(z, s, v).
    Lerch,
    /// Exponentially shifted zeta series, one-signed family.
    Phi,
    /// Alternating counterpart of phi.
    Psi,
    /// Bose-Einstein integral B_q(x).
    Be,
    /// Fermi-Dirac integral F_q(x).
    Fd,
    /// Interpolation between be and fd with parameter nu in [0, 1].
    Anyon,
}

impl FunctionName {
    pub fn name(self) -> &'static str {
        match self {
            FunctionName::Gamma => "gamma",
            FunctionName::Zeta => "zeta",
            FunctionName::Lerch => "lerch",
            FunctionName::Phi => "phi",
            FunctionName::Psi => "psi",
            FunctionName::Be => "be",
            FunctionName::Fd => "fd",
            FunctionName::Anyon => "anyon",
        }
    }

    /// Parameter flags the function accepts. All of them are required.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            FunctionName::Gamma | FunctionName::Zeta => &["alpha"],
            FunctionName::Lerch => &["z", "s", "v"],
            FunctionName::Phi | FunctionName::Psi | FunctionName::Anyon => &["nu", "alpha", "x"],
            FunctionName::Be | FunctionName::Fd => &["q", "x"],
        }
    }
}

/// Evaluation route override.
#[derive(Copy, Clone, Debug, clap::ValueEnum)]
pub enum MethodArg {
    Auto,
    Series,
    Quadrature,
}

impl From<MethodArg> for MethodPolicy {
    fn from(m: MethodArg) -> MethodPolicy {
        match m {
            MethodArg::Auto => MethodPolicy::Auto,
            MethodArg::Series => MethodPolicy::SeriesOnly,
            MethodArg::Quadrature => MethodPolicy::QuadratureOnly,
        }
    }
}

/// Table output format.
#[derive(Copy, Clone, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Raw parameter flags shared by `eval` and `table`.
#[derive(clap::Args, Default)]
pub struct RawParams {
    /// Order parameter, real (phi, psi, anyon).
    #[arg(long, value_name = "REAL")]
    pub nu: Option<String>,
    /// Exponent parameter, complex a+bi (gamma, zeta, phi, psi, anyon).
    #[arg(long, value_name = "COMPLEX")]
    pub alpha: Option<String>,
    /// Argument: complex shift for phi/psi/anyon, real for be/fd.
    #[arg(long, value_name = "VALUE")]
    pub x: Option<String>,
    /// Integral index, real (be, fd).
    #[arg(long, value_name = "REAL")]
    pub q: Option<String>,
    /// Lerch argument z, complex.
    #[arg(long, value_name = "COMPLEX")]
    pub z: Option<String>,
    /// Lerch exponent s, complex.
    #[arg(long, value_name = "COMPLEX")]
    pub s: Option<String>,
    /// Lerch offset v, complex.
    #[arg(long, value_name = "COMPLEX")]
    pub v: Option<String>,
}

impl RawParams {
    pub fn parse(&self) -> Result<Params, Failure> {
        let mut p = Params::default();
        let fields = [
            ("nu", &self.nu),
            ("alpha", &self.alpha),
            ("x", &self.x),
            ("q", &self.q),
            ("z", &self.z),
            ("s", &self.s),
            ("v", &self.v),
        ];
        for (name, raw) in fields {
            if let Some(text) = raw {
                let value =
                    parse_complex(text).map_err(|e| Failure::usage(format!("--{name}: {e}")))?;
                p.set(name, value);
            }
        }
        Ok(p)
    }
}

/// Parsed parameter values keyed by flag name.
#[derive(Default, Clone)]
pub struct Params {
    values: Vec<(&'static str, ComplexScalar)>,
}

impl Params {
    pub fn set(&mut self, name: &'static str, value: ComplexScalar) {
        if let Some(slot) = self.values.iter_mut().find(|(n, _)| *n == name) {
            slot.1 = value;
        } else {
            self.values.push((name, value));
        }
    }

    pub fn get(&self, name: &str) -> Option<ComplexScalar> {
        self.values.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }

    fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.values.iter().map(|&(n, _)| n)
    }

    fn need(&self, name: &str) -> Result<ComplexScalar, Failure> {
        self.get(name)
            .ok_or_else(|| Failure::usage(format!("missing --{name}")))
    }

    fn need_real(&self, name: &str) -> Result<f64, Failure> {
        let v = self.need(name)?;
        if v.im != 0.0 {
            return Err(Failure::usage(format!("--{name} must be real")));
        }
        Ok(v.re)
    }
}

/// Reject parameters the function does not take and require the rest,
/// treating swept names as provided.
fn check_params(f: FunctionName, fixed: &Params, swept: &[&str]) -> Result<(), Failure> {
    let allowed = f.parameters();
    for name in fixed.names() {
        if !allowed.contains(&name) {
            return Err(Failure::usage(format!(
                "function {} does not take --{name} (parameters: {})",
                f.name(),
                allowed.join(", ")
            )));
        }
    }
    for name in allowed {
        if fixed.get(name).is_none() && !swept.contains(name) {
            return Err(Failure::usage(format!(
                "function {} requires --{name}",
                f.name()
            )));
        }
    }
    Ok(())
}

/// Evaluate one function at one parameter point.
pub fn evaluate_function(
    f: FunctionName,
    p: &Params,
    cfg: &EvalConfig,
) -> Result<EvalResult, Failure> {
    match f {
        FunctionName::Gamma => {
            let value = gamma(p.need("alpha")?).map_err(Failure::eval)?;
            // The Lanczos form is evaluated in closed form; its relative
            // error is a fixed small multiple of machine epsilon.
            Ok(EvalResult {
                value,
                error_estimate: 1e-13 * value.norm() + 1e-300,
                effort: 1,
                method: Method::ClosedForm,
            })
        }
        FunctionName::Zeta => riemann_zeta_result(p.need("alpha")?).map_err(Failure::eval),
        FunctionName::Lerch => {
            let params = LerchParams::new(p.need("z")?, p.need("s")?, p.need("v")?)
                .map_err(Failure::eval)?;
            lerch_phi(&params, cfg).map_err(Failure::eval)
        }
        FunctionName::Phi | FunctionName::Psi => {
            let point = GammaZetaPoint::new(p.need_real("nu")?, p.need("alpha")?, p.need("x")?)
                .map_err(Failure::eval)?;
            let result = if matches!(f, FunctionName::Phi) {
                phi(&point, cfg)
            } else {
                psi(&point, cfg)
            };
            result.map_err(Failure::eval)
        }
        FunctionName::Be => bose_einstein_integral(p.need_real("q")?, p.need_real("x")?, cfg)
            .map_err(Failure::eval),
        FunctionName::Fd => fermi_dirac_integral(p.need_real("q")?, p.need_real("x")?, cfg)
            .map_err(Failure::eval),
        FunctionName::Anyon => anyon_integral(
            p.need_real("nu")?,
            p.need("alpha")?,
            p.need("x")?,
            &AnyonWeights::default(),
            cfg,
        )
        .map_err(Failure::eval),
    }
}

/// Resolve the evaluation config: defaults, then the GAMMAZETA_TOL
/// environment variable, then explicit flags.
pub fn build_config(rel_tol: Option<f64>, method: Option<MethodArg>) -> Result<EvalConfig, Failure> {
    let mut cfg = EvalConfig::default();
    if let Some(text) = std::env::var_os("GAMMAZETA_TOL") {
        let text = text.to_string_lossy();
        let v: f64 = text
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("GAMMAZETA_TOL={text:?} is not a number")))?;
        cfg.rel_tol = v;
    }
    if let Some(v) = rel_tol {
        cfg.rel_tol = v;
    }
    if let Some(m) = method {
        cfg.method_policy = m.into();
    }
    cfg.validate()
        .map_err(|e| Failure::usage(format!("tolerance settings rejected: {e}")))?;
    Ok(cfg)
}

pub fn eval_command(
    function: FunctionName,
    raw: &RawParams,
    method: Option<MethodArg>,
    rel_tol: Option<f64>,
) -> Result<i32, Failure> {
    let cfg = build_config(rel_tol, method)?;
    let params = raw.parse()?;
    check_params(function, &params, &[])?;
    let r = evaluate_function(function, &params, &cfg)?;
    emit(&format!(
        "{} error_estimate={:e} method={}\n",
        format_complex(r.value),
        r.error_estimate,
        r.method
    ))?;
    Ok(0)
}

/// One sweep axis with its evaluation points. Endpoints are exact.
pub struct Sweep {
    pub name: &'static str,
    pub values: Vec<f64>,
}

pub fn parse_sweep(
    spec: &str,
    function: FunctionName,
    fixed: &Params,
    taken: &[&str],
) -> Result<Sweep, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 4 {
        return Err(Failure::usage(format!(
            "sweep {spec:?} must look like name:start:stop:steps"
        )));
    }
    let name = function
        .parameters()
        .iter()
        .copied()
        .find(|p| *p == parts[0])
        .ok_or_else(|| {
            Failure::usage(format!(
                "function {} has no parameter {:?} to sweep (parameters: {})",
                function.name(),
                parts[0],
                function.parameters().join(", ")
            ))
        })?;
    if fixed.get(name).is_some() {
        return Err(Failure::usage(format!("--{name} is both fixed and swept")));
    }
    if taken.contains(&name) {
        return Err(Failure::usage(format!("parameter {name} is swept twice")));
    }
    let start: f64 = parts[1]
        .parse()
        .map_err(|_| Failure::usage(format!("sweep start {:?} is not a real number", parts[1])))?;
    let stop: f64 = parts[2]
        .parse()
        .map_err(|_| Failure::usage(format!("sweep stop {:?} is not a real number", parts[2])))?;
    if !start.is_finite() || !stop.is_finite() {
        return Err(Failure::usage("sweep endpoints must be finite"));
    }
    if start == stop {
        return Err(Failure::usage("sweep start and stop must differ"));
    }
    let steps: usize = parts[3]
        .parse()
        .map_err(|_| Failure::usage(format!("sweep steps {:?} is not a count", parts[3])))?;
    if steps < 2 {
        return Err(Failure::usage("a sweep needs at least 2 steps"));
    }
    let h = (stop - start) / (steps - 1) as f64;
    let values = (0..steps)
        .map(|i| if i + 1 == steps { stop } else { start + i as f64 * h })
        .collect();
    Ok(Sweep { name, values })
}

struct TableRow {
    coords: Vec<f64>,
    outcome: Result<EvalResult, String>,
}

#[allow(clippy::too_many_arguments)]
pub fn table_command(
    function: FunctionName,
    raw: &RawParams,
    sweep_specs: &[String],
    format: OutputFormat,
    output: Option<&Path>,
    method: Option<MethodArg>,
    rel_tol: Option<f64>,
) -> Result<i32, Failure> {
    let cfg = build_config(rel_tol, method)?;
    let fixed = raw.parse()?;
    if sweep_specs.is_empty() {
        return Err(Failure::usage(
            "table requires at least one --sweep name:start:stop:steps",
        ));
    }
    if sweep_specs.len() > 2 {
        return Err(Failure::usage("at most two parameters can be swept"));
    }
    let mut sweeps: Vec<Sweep> = Vec::new();
    for spec in sweep_specs {
        let taken: Vec<&str> = sweeps.iter().map(|s| s.name).collect();
        sweeps.push(parse_sweep(spec, function, &fixed, &taken)?);
    }
    let names: Vec<&str> = sweeps.iter().map(|s| s.name).collect();
    check_params(function, &fixed, &names)?;

    // Row-major: the first sweep is the outer loop.
    let mut points: Vec<Vec<f64>> = Vec::new();
    match sweeps.as_slice() {
        [a] => points.extend(a.values.iter().map(|&v| vec![v])),
        [a, b] => {
            for &va in &a.values {
                for &vb in &b.values {
                    points.push(vec![va, vb]);
                }
            }
        }
        _ => unreachable!("sweep count checked above"),
    }

    let mut rows = Vec::with_capacity(points.len());
    let mut succeeded = 0usize;
    for coords in points {
        let mut p = fixed.clone();
        for (sweep, &value) in sweeps.iter().zip(&coords) {
            p.set(sweep.name, ComplexScalar::new(value, 0.0));
        }
        let outcome = match evaluate_function(function, &p, &cfg) {
            Ok(r) => {
                succeeded += 1;
                Ok(r)
            }
            // Shape problems (missing parameter) are the same at every
            // point; abort instead of emitting a table of failures.
            Err(f) if f.code == 1 => return Err(f),
            Err(f) => Err(f.message),
        };
        rows.push(TableRow { coords, outcome });
    }

    let text = match format {
        OutputFormat::Csv => render_csv(&names, &rows)?,
        OutputFormat::Json => render_json(&names, &rows),
    };
    write_output(output, &text)?;
    Ok(if succeeded > 0 { 0 } else { 3 })
}

fn render_csv(names: &[&str], rows: &[TableRow]) -> Result<String, Failure> {
    let broke = |e: csv::Error| Failure {
        code: 1,
        message: format!("csv write failed: {e}"),
    };
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    let mut header: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    header.extend(
        ["value_re", "value_im", "error_estimate", "method", "error"].map(String::from),
    );
    w.write_record(&header).map_err(broke)?;
    for row in rows {
        let mut rec: Vec<String> = row.coords.iter().map(|v| format!("{v}")).collect();
        match &row.outcome {
            Ok(r) => rec.extend([
                format!("{}", r.value.re),
                format!("{}", r.value.im),
                format!("{:e}", r.error_estimate),
                r.method.to_string(),
                String::new(),
            ]),
            Err(msg) => rec.extend([
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                msg.clone(),
            ]),
        }
        w.write_record(&rec).map_err(broke)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure {
        code: 1,
        message: format!("csv write failed: {e}"),
    })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json_number(v: f64) -> String {
    serde_json::Number::from_f64(v)
        .map(|n| n.to_string())
        .unwrap_or_else(|| "null".into())
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn render_json(names: &[&str], rows: &[TableRow]) -> String {
    let mut out = String::from("[\n");
    for (i, row) in rows.iter().enumerate() {
        let mut fields: Vec<String> = names
            .iter()
            .zip(&row.coords)
            .map(|(name, v)| format!("{}:{}", json_string(name), json_number(*v)))
            .collect();
        match &row.outcome {
            Ok(r) => {
                fields.push(format!("\"value_re\":{}", json_number(r.value.re)));
                fields.push(format!("\"value_im\":{}", json_number(r.value.im)));
                fields.push(format!(
                    "\"error_estimate\":{}",
                    json_number(r.error_estimate)
                ));
                fields.push(format!("\"method\":{}", json_string(&r.method.to_string())));
            }
            Err(msg) => fields.push(format!("\"error\":{}", json_string(msg))),
        }
        out.push_str("  {");
        out.push_str(&fields.join(","));
        out.push('}');
        if i + 1 != rows.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("]\n");
    out
}

/// Write to stdout, exiting quietly when the reading end has gone away.
fn emit(text: &str) -> Result<(), Failure> {
    use std::io::Write as _;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(Failure {
            code: 1,
            message: format!("cannot write to stdout: {e}"),
        }),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        None => emit(text),
        Some(p) => fs::write(p, text).map_err(|e| Failure {
            code: 1,
            message: format!("cannot write {}: {e}", p.display()),
        }),
    }
}

pub fn verify_command(
    grid_path: Option<&Path>,
    only: Option<&str>,
    output: Option<&Path>,
    rel_tol: Option<f64>,
) -> Result<i32, Failure> {
    let cfg = build_config(rel_tol, None)?;
    let mut grid = match grid_path {
        None => default_grid(),
        Some(p) => load_grid(p)?,
    };
    if let Some(filter) = only {
        let mut wanted: Vec<IdentityId> = Vec::new();
        for token in filter.split(',') {
            let token = token.trim();
            let id = IdentityId::from_str(token).map_err(|_| {
                let known: Vec<&str> = IdentityId::ALL.iter().map(|i| i.name()).collect();
                Failure::usage(format!(
                    "unknown identity {token:?} (known: {})",
                    known.join(", ")
                ))
            })?;
            wanted.push(id);
        }
        grid.retain(|case| wanted.contains(&case.id()));
        if grid.is_empty() {
            return Err(Failure::usage("identity filter matches no cases"));
        }
    }
    let reports = run_identity_suite(&grid, &cfg)
        .map_err(|e| Failure::usage(format!("verification grid rejected: {e}")))?;
    let summary = summarize(&reports);
    let mut json = serde_json::to_string_pretty(&reports).expect("reports serialize");
    json.push('\n');
    write_output(output, &json)?;
    eprintln!("{summary}");
    Ok(if summary.all_green() { 0 } else { 4 })
}

fn load_grid(path: &Path) -> Result<Vec<IdentityCase>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        message: format!("cannot read grid file {}: {e}", path.display()),
    })?;
    let root: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("grid file {}: invalid JSON: {e}", path.display())))?;
    let arr = root
        .as_array()
        .ok_or_else(|| Failure::usage("grid file must be a JSON array of cases"))?;
    let mut cases = Vec::new();
    for (i, item) in arr.iter().enumerate() {
        let case =
            parse_case(item).map_err(|f| Failure::usage(format!("grid case {i}: {}", f.message)))?;
        cases.push(case);
    }
    if cases.is_empty() {
        return Err(Failure::usage("grid file contains no cases"));
    }
    Ok(cases)
}

/// A grid case is `{"identity_id": "Theorem1", "params": {"nu": 0.5,
/// "alpha": "1.5+0.5i", ...}, "tolerance": 1e-9, "expected_fail": false}`.
/// Parameter values are JSON numbers or a+bi strings.
fn parse_case(item: &serde_json::Value) -> Result<IdentityCase, Failure> {
    let obj = item
        .as_object()
        .ok_or_else(|| Failure::usage("case must be a JSON object"))?;
    let id_text = obj
        .get("identity_id")
        .and_then(|v| v.as_str())
        .ok_or_else(|| Failure::usage("missing string field identity_id"))?;
    let id = IdentityId::from_str(id_text)
        .map_err(|_| Failure::usage(format!("unknown identity {id_text:?}")))?;
    let mut params: Vec<(String, ComplexScalar)> = Vec::new();
    if let Some(pv) = obj.get("params") {
        let pobj = pv
            .as_object()
            .ok_or_else(|| Failure::usage("params must be a JSON object"))?;
        for (name, val) in pobj {
            let scalar = match val {
                serde_json::Value::Number(n) => {
                    let re = n
                        .as_f64()
                        .ok_or_else(|| Failure::usage(format!("parameter {name} out of range")))?;
                    ComplexScalar::new(re, 0.0)
                }
                serde_json::Value::String(s) => parse_complex(s)
                    .map_err(|e| Failure::usage(format!("parameter {name}: {e}")))?,
                _ => {
                    return Err(Failure::usage(format!(
                        "parameter {name} must be a number or an a+bi string"
                    )))
                }
            };
            params.push((name.clone(), scalar));
        }
    }
    let tolerance = obj
        .get("tolerance")
        .and_then(|v| v.as_f64())
        .ok_or_else(|| Failure::usage("missing numeric field tolerance"))?;
    let expected_fail = match obj.get("expected_fail") {
        None => false,
        Some(v) => v
            .as_bool()
            .ok_or_else(|| Failure::usage("expected_fail must be a boolean"))?,
    };
    IdentityCase::new(id, params, tolerance, expected_fail)
        .map_err(|e| Failure::usage(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(pairs: &[(&str, &str)]) -> RawParams {
        let mut r = RawParams::default();
        for &(name, value) in pairs {
            let slot = match name {
                "nu" => &mut r.nu,
                "alpha" => &mut r.alpha,
                "x" => &mut r.x,
                "q" => &mut r.q,
                "z" => &mut r.z,
                "s" => &mut r.s,
                "v" => &mut r.v,
                _ => panic!("unknown flag {name}"),
            };
            *slot = Some(value.to_string());
        }
        r
    }

    #[test]
    fn sweep_endpoints_are_exact() {
        let fixed = Params::default();
        let s = parse_sweep("nu:0:1:11", FunctionName::Anyon, &fixed, &[]).unwrap();
        assert_eq!(s.values.len(), 11);
        assert_eq!(s.values[0].to_bits(), 0.0f64.to_bits());
        assert_eq!(s.values[10].to_bits(), 1.0f64.to_bits());
        let t = parse_sweep("x:-3:3:13", FunctionName::Fd, &fixed, &[]).unwrap();
        assert_eq!(t.values[12], 3.0);
        assert_eq!(t.values[6], 0.0);
    }

    #[test]
    fn sweep_rejections() {
        let mut fixed = Params::default();
        fixed.set("alpha", ComplexScalar::new(2.0, 0.0));
        let f = FunctionName::Phi;
        for spec in [
            "nu:0:1",
            "nu:0:1:1",
            "nu:0:0:5",
            "nu:a:1:5",
            "nu:0:inf:5",
            "beta:0:1:5",
            "alpha:0:1:5",
        ] {
            let r = parse_sweep(spec, f, &fixed, &[]);
            assert!(r.is_err(), "accepted {spec:?}");
            assert_eq!(r.err().unwrap().code, 1);
        }
        assert!(parse_sweep("nu:0:1:5", f, &fixed, &["nu"]).is_err());
    }

    #[test]
    fn param_checking() {
        let p = raw(&[("alpha", "2"), ("x", "1")]).parse().unwrap();
        assert!(check_params(FunctionName::Phi, &p, &["nu"]).is_ok());
        assert!(check_params(FunctionName::Phi, &p, &[]).is_err());
        assert!(check_params(FunctionName::Zeta, &p, &[]).is_err());
        let q = raw(&[("alpha", "bogus")]).parse();
        assert!(q.is_err());
    }

    #[test]
    fn exit_codes_follow_error_kind() {
        let cfg = EvalConfig::default();
        let p = raw(&[("q", "1"), ("x", "1")]).parse().unwrap();
        let err = evaluate_function(FunctionName::Be, &p, &cfg).err().unwrap();
        assert_eq!(err.code, 2);
        let p = raw(&[("q", "1")]).parse().unwrap();
        let err = evaluate_function(FunctionName::Fd, &p, &cfg).err().unwrap();
        assert_eq!(err.code, 1);
        let p = raw(&[("nu", "0"), ("alpha", "2"), ("x", "1+2i")])
            .parse()
            .unwrap();
        assert!(evaluate_function(FunctionName::Phi, &p, &cfg).is_ok());
    }

    #[test]
    fn grid_cases_parse_from_json() {
        let item: serde_json::Value = serde_json::from_str(
            r#"{"identity_id": "Theorem2", "params": {"nu": 0.25, "alpha": "1.5+0.5i", "x": 0.5},
                "tolerance": 1e-9}"#,
        )
        .unwrap();
        let case = parse_case(&item).unwrap();
        assert_eq!(case.id(), IdentityId::Theorem2);
        assert!(!case.expected_fail());

        for bad in [
            r#"{"params": {}, "tolerance": 1e-9}"#,
            r#"{"identity_id": "NoSuch", "tolerance": 1e-9}"#,
            r#"{"identity_id": "Theorem1", "tolerance": -1}"#,
            r#"{"identity_id": "Theorem1", "params": {"nu": true}, "tolerance": 1e-9}"#,
        ] {
            let item: serde_json::Value = serde_json::from_str(bad).unwrap();
            assert!(parse_case(&item).is_err(), "accepted {bad}");
        }
    }

    #[test]
    fn config_resolution_validates() {
        let cfg = build_config(Some(1e-8), Some(MethodArg::Series)).unwrap();
        assert_eq!(cfg.rel_tol, 1e-8);
        assert!(matches!(cfg.method_policy, MethodPolicy::SeriesOnly));
        assert!(build_config(Some(1e-30), None).is_err());
    }
}
