//! Machine-readable reports behind the CLI subcommands.
//!
//! Every command produces a [`ReportEnvelope`] that serializes deterministically:
//! params and JSON object keys are sorted, floats are printed as 6-significant-digit
//! scientific notation, and repeated invocations yield byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::bounds::{self, best_bounds, gaussian_bounds, DOMINANCE_SLACK};
use crate::densities::DensityModel;
use crate::digits::{digit_report, DigitPrefix};
use crate::error::{Error, Result};
use crate::quad;
use crate::total_variation::tv_gumbel_deriv_upto;
use crate::wrapping::WrappedDist;

pub const FORMAT_VERSION: &str = "1";

/// Maximum derivative order accepted by the table command.
pub const TABLE_K_MAX_LIMIT: u32 = 20;

/// Output syntax for rendered reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// One typed value in a report row.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    UInt(u64),
    Float(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    /// 6-significant-digit scientific form shared by CSV and JSON.
    fn float_repr(v: f64) -> String {
        if !v.is_finite() {
            return "null".into();
        }
        let v = if v == 0.0 { 0.0 } else { v }; // normalize -0.0
        format!("{v:.5e}")
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::UInt(v) => v.to_string(),
            Cell::Float(v) => Self::float_repr(*v),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(v) => v.clone(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::UInt(v) => v.to_string(),
            Cell::Float(v) => Self::float_repr(*v),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(v) => json_string(v),
        }
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// A command result: named parameters plus a fixed-column row table.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportEnvelope {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl ReportEnvelope {
    fn new(command: &str, columns: Vec<String>) -> Self {
        ReportEnvelope {
            command: command.to_string(),
            params: BTreeMap::new(),
            columns,
            rows: Vec::new(),
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    /// CSV with `#`-prefixed envelope metadata, consumable by ordinary plotters.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# format_version={FORMAT_VERSION}");
        let _ = writeln!(out, "# command={}", self.command);
        for (k, v) in &self.params {
            let _ = writeln!(out, "# {k}={v}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    /// Single-line JSON with alphabetically sorted object keys.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{");
        let _ = write!(out, "\"command\":{},", json_string(&self.command));
        let _ = write!(out, "\"format_version\":{},", json_string(FORMAT_VERSION));
        out.push_str("\"params\":{");
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}:{}", json_string(k), json_string(v));
        }
        out.push_str("},\"rows\":[");
        let mut order: Vec<usize> = (0..self.columns.len()).collect();
        order.sort_by(|a, b| self.columns[*a].cmp(&self.columns[*b]));
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('{');
            for (j, &col) in order.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                let _ = write!(
                    out,
                    "{}:{}",
                    json_string(&self.columns[col]),
                    row[col].json()
                );
            }
            out.push('}');
        }
        out.push_str("]}");
        out.push('\n');
        out
    }
}

/// Shortest decimal form of a float for parameter echoes and column labels.
fn display_f64(v: f64) -> String {
    format!("{v}")
}

/// The Weibull/Gumbel bound table: `TV(f_o^(k))` and the decimal digit-error bound
/// `B_tau(k)` per requested `tau`, with the column minima marked.
pub fn cmd_table1(k_max: u32, taus: &[f64]) -> Result<ReportEnvelope> {
    if k_max > TABLE_K_MAX_LIMIT {
        return Err(Error::InvalidParameter {
            name: "kmax",
            reason: format!("table command supports kmax <= {TABLE_K_MAX_LIMIT}, got {k_max}"),
        });
    }
    if taus.is_empty() {
        return Err(Error::InvalidParameter {
            name: "taus",
            reason: "need at least one tau".into(),
        });
    }
    if let Some(t) = taus.iter().find(|t| !t.is_finite() || **t <= 0.0) {
        return Err(Error::InvalidParameter {
            name: "taus",
            reason: format!("tau must be positive and finite, got {t}"),
        });
    }

    let mut columns = vec!["k".to_string(), "tv".to_string()];
    for t in taus {
        columns.push(format!("b({})", display_f64(*t)));
        columns.push(format!("min({})", display_f64(*t)));
    }
    let mut env = ReportEnvelope::new("table1", columns);
    env.param("kmax", k_max);
    env.param("base", 10);
    env.param(
        "taus",
        taus.iter()
            .map(|t| display_f64(*t))
            .collect::<Vec<_>>()
            .join(","),
    );

    let tvs: Vec<f64> = tv_gumbel_deriv_upto(k_max)?;
    let bounds_per_tau: Vec<Vec<f64>> = taus
        .iter()
        .map(|tau| {
            (0..=k_max)
                .map(|k| {
                    3.0 * tvs[k as usize] * (tau * std::f64::consts::LN_10 / 6.0).powi(k as i32 + 1)
                })
                .collect()
        })
        .collect();
    let argmin: Vec<usize> = bounds_per_tau
        .iter()
        .map(|col| {
            col.iter()
                .enumerate()
                .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
                .map(|(i, _)| i)
                .unwrap()
        })
        .collect();

    for k in 0..=k_max as usize {
        let mut row = vec![Cell::UInt(k as u64), Cell::Float(tvs[k])];
        for (t, col) in bounds_per_tau.iter().enumerate() {
            row.push(Cell::Float(col[k]));
            row.push(Cell::Bool(argmin[t] == k));
        }
        env.push_row(row);
    }
    Ok(env)
}

/// Closed-form Gaussian bounds per sigma, optionally checked against measurement.
///
/// Returns the envelope and whether every verified row stayed within its bounds.
pub fn cmd_gauss(sigmas: &[f64], verify: bool, grid: usize) -> Result<(ReportEnvelope, bool)> {
    if sigmas.is_empty() {
        return Err(Error::InvalidParameter {
            name: "sigma",
            reason: "need at least one sigma".into(),
        });
    }
    let mut columns: Vec<String> = ["sigma", "m", "range_bound", "kuiper_bound", "mrae_bound"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    if verify {
        for c in ["meas_range", "meas_kuiper", "meas_mrae", "ok"] {
            columns.push(c.to_string());
        }
    }
    let mut env = ReportEnvelope::new("gauss", columns);
    env.param(
        "sigmas",
        sigmas
            .iter()
            .map(|s| display_f64(*s))
            .collect::<Vec<_>>()
            .join(","),
    );
    env.param("verify", verify);
    if verify {
        env.param("grid", grid);
    }

    let mut all_ok = true;
    for &sigma in sigmas {
        let b = gaussian_bounds(sigma)?;
        let mut row = vec![
            Cell::Float(sigma),
            Cell::UInt(b.m),
            Cell::Float(b.range),
            Cell::Float(b.kuiper),
            Cell::Float(b.mrae),
        ];
        if verify {
            let w = WrappedDist::new(DensityModel::gaussian(0.0, sigma)?)?;
            let meas = w.measure(grid)?;
            let ok = meas.range_g <= b.range + DOMINANCE_SLACK
                && meas.kuiper <= b.kuiper + DOMINANCE_SLACK
                && meas.mrae <= b.mrae + DOMINANCE_SLACK;
            all_ok &= ok;
            row.push(Cell::Float(meas.range_g));
            row.push(Cell::Float(meas.kuiper));
            row.push(Cell::Float(meas.mrae));
            row.push(Cell::Bool(ok));
        }
        env.push_row(row);
    }
    Ok((env, all_ok))
}

/// Parse a model specification `family:key=value,...`.
///
/// Grammar: `gauss:sigma=<r>[,mu=<r>]`, `weibull:tau=<r>[,gamma=<r>]`,
/// `uniform:width=<r>`, `pwl:file=<path>`. The `base` applies to the Weibull
/// log-scale conversion. Returns the model plus echo parameters (for Weibull both
/// the `(tau, gamma)` and the `(mu, sigma)` forms, to keep the units unambiguous).
pub fn parse_model_spec(spec: &str, base: u32) -> Result<(DensityModel, BTreeMap<String, String>)> {
    let (family, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let mut kv = BTreeMap::new();
    if !rest.is_empty() {
        for part in rest.split(',') {
            let (k, v) = part.split_once('=').ok_or_else(|| {
                Error::Parse(format!("expected key=value in model spec, got `{part}`"))
            })?;
            if kv
                .insert(k.trim().to_string(), v.trim().to_string())
                .is_some()
            {
                return Err(Error::Parse(format!("duplicate key `{k}` in model spec")));
            }
        }
    }
    let num = |kv: &BTreeMap<String, String>, key: &str| -> Result<Option<f64>> {
        kv.get(key)
            .map(|v| {
                v.parse::<f64>()
                    .map_err(|e| Error::Parse(format!("bad value for `{key}`: {e}")))
            })
            .transpose()
    };
    let require = |v: Option<f64>, key: &'static str| {
        v.ok_or_else(|| Error::Parse(format!("model spec needs `{key}=<value>`")))
    };
    let reject_unknown = |kv: &BTreeMap<String, String>, allowed: &[&str]| -> Result<()> {
        for k in kv.keys() {
            if !allowed.contains(&k.as_str()) {
                return Err(Error::Parse(format!("unknown model key `{k}`")));
            }
        }
        Ok(())
    };

    let mut echo = BTreeMap::new();
    echo.insert("model".to_string(), spec.to_string());
    let model = match family {
        "gauss" | "gaussian" => {
            reject_unknown(&kv, &["sigma", "mu"])?;
            let sigma = require(num(&kv, "sigma")?, "sigma")?;
            let mu = num(&kv, "mu")?.unwrap_or(0.0);
            echo.insert("mu".into(), display_f64(mu));
            echo.insert("sigma".into(), display_f64(sigma));
            DensityModel::gaussian(mu, sigma)?
        }
        "weibull" => {
            reject_unknown(&kv, &["tau", "gamma"])?;
            let tau = require(num(&kv, "tau")?, "tau")?;
            let gamma = num(&kv, "gamma")?.unwrap_or(1.0);
            let model = DensityModel::weibull(tau, gamma, base)?;
            echo.insert("tau".into(), display_f64(tau));
            echo.insert("gamma".into(), display_f64(gamma));
            echo.insert("mu".into(), display_f64(model.mu()));
            echo.insert("sigma".into(), display_f64(model.sigma()));
            echo.insert("base".into(), base.to_string());
            model
        }
        "gumbel" => {
            reject_unknown(&kv, &["sigma", "mu"])?;
            let sigma = require(num(&kv, "sigma")?, "sigma")?;
            let mu = num(&kv, "mu")?.unwrap_or(0.0);
            echo.insert("mu".into(), display_f64(mu));
            echo.insert("sigma".into(), display_f64(sigma));
            DensityModel::gumbel(mu, sigma)?
        }
        "uniform" => {
            reject_unknown(&kv, &["width"])?;
            let width = require(num(&kv, "width")?, "width")?;
            echo.insert("width".into(), display_f64(width));
            DensityModel::uniform_width(width)?
        }
        "pwl" => {
            reject_unknown(&kv, &["file"])?;
            let path = kv
                .get("file")
                .ok_or_else(|| Error::Parse("model spec needs `file=<path>`".into()))?;
            let text = std::fs::read_to_string(path)?;
            echo.insert("file".into(), path.clone());
            DensityModel::piecewise_linear_from_csv(&text)?
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown model family `{other}` (expected gauss, gumbel, weibull, uniform or pwl)"
            )))
        }
    };
    Ok((model, echo))
}

/// Digit reports for a model over a list of prefix strings.
///
/// Returns the envelope and whether every |relative error| stayed within its
/// certificate.
pub fn cmd_digits(
    model_spec: &str,
    prefixes: &[String],
    base: u32,
    k_max: Option<u32>,
) -> Result<(ReportEnvelope, bool)> {
    if prefixes.is_empty() {
        return Err(Error::InvalidParameter {
            name: "prefixes",
            reason: "need at least one digit prefix".into(),
        });
    }
    let (model, echo) = parse_model_spec(model_spec, base)?;
    // Weibull models are already tied to `base` through the log-scale conversion.
    let base_is_bound = echo.contains_key("tau");
    let columns = [
        "prefix",
        "benford_p",
        "exact_p",
        "rel_err",
        "certified_bound",
        "note",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let mut env = ReportEnvelope::new("digits", columns);
    for (k, v) in echo {
        env.param(&k, v);
    }
    if let Some(k) = k_max {
        env.param("kmax", k);
    }

    let mut all_ok = true;
    for p in prefixes {
        let prefix = DigitPrefix::parse_with_default(p, base)?;
        if base_is_bound && prefix.base() != base {
            return Err(Error::InvalidPrefix(format!(
                "prefix `{p}` is base {} but the weibull model was converted with base {base}",
                prefix.base()
            )));
        }
        let r = digit_report(&model, &prefix, k_max)?;
        all_ok &= r.rel_err.abs() <= r.certified_bound + DOMINANCE_SLACK;
        env.push_row(vec![
            Cell::Text(r.prefix.to_string()),
            Cell::Float(r.benford_p),
            Cell::Float(r.exact_p),
            Cell::Float(r.rel_err),
            Cell::Float(r.certified_bound),
            Cell::Text(r.note.unwrap_or_default()),
        ]);
    }
    Ok((env, all_ok))
}

/// Standard model battery used by `verify` when no explicit model is given.
pub fn standard_battery() -> Vec<String> {
    let mut specs = Vec::new();
    for sigma in ["0.3333333333333333", "0.5", "1", "2"] {
        specs.push(format!("gauss:sigma={sigma}"));
    }
    for tau in ["1", "0.5", "0.3"] {
        specs.push(format!("weibull:tau={tau}"));
    }
    for width in ["0.7", "1.5", "2.3"] {
        specs.push(format!("uniform:width={width}"));
    }
    specs
}

/// Measure each model's wrapped discrepancies and check them against the best
/// certified bounds; also checks that the wrapped density integrates to one
/// within `tol`.
pub fn cmd_verify(
    specs: &[String],
    k_max: Option<u32>,
    grid: usize,
    tol: f64,
    base: u32,
) -> Result<(ReportEnvelope, bool)> {
    let columns = [
        "model",
        "best_k",
        "range_bound",
        "kuiper_bound",
        "mrae_bound",
        "meas_range",
        "meas_kuiper",
        "meas_mrae",
        "integral_dev",
        "ok",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let mut env = ReportEnvelope::new("verify", columns);
    env.param("grid", grid);
    env.param("tol", display_f64(tol));
    env.param("base", base);
    if let Some(k) = k_max {
        env.param("kmax", k);
    }

    let mut all_ok = true;
    for spec in specs {
        let (model, _) = parse_model_spec(spec, base)?;
        let k_cap = k_max.unwrap_or(match model.family() {
            crate::densities::Family::Gaussian => 40,
            crate::densities::Family::Gumbel => 14,
            _ => 0,
        });
        let report = best_bounds(&model, k_cap, false)?;
        let w = WrappedDist::new(model)?;
        let meas = w.measure(grid)?;
        let integral = quad::integrate(|x| w.pdf(x), 0.0, 1.0, tol * 0.1, 4096).value;
        let integral_dev = (integral - 1.0).abs();
        let ok = meas.range_g <= report.best.range_bound + DOMINANCE_SLACK
            && meas.kuiper <= report.best.kuiper_bound + DOMINANCE_SLACK
            && meas.mrae <= report.best.mrae_bound + DOMINANCE_SLACK
            && integral_dev <= tol;
        all_ok &= ok;
        env.push_row(vec![
            Cell::Text(spec.clone()),
            Cell::UInt(u64::from(report.best_k)),
            Cell::Float(report.best.range_bound),
            Cell::Float(report.best.kuiper_bound),
            Cell::Float(report.best.mrae_bound),
            Cell::Float(meas.range_g),
            Cell::Float(meas.kuiper),
            Cell::Float(meas.mrae),
            Cell::Float(integral_dev),
            Cell::Bool(ok),
        ]);
    }
    Ok((env, all_ok))
}

/// Summary of the per-order bound table for one model (used by tests and bindings).
pub fn bound_table(model: &DensityModel, k_max: u32) -> Result<Vec<bounds::PerKBound>> {
    Ok(best_bounds(model, k_max, false)?.per_k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_reference_rows() {
        let env = cmd_table1(14, &[1.0, 0.5, 0.3]).unwrap();
        assert_eq!(env.rows.len(), 15);
        assert_eq!(env.columns[0], "k");
        // row 0: tv = 7.3576e-1, b(1) = 8.4707e-1
        let row0 = &env.rows[0];
        match (&row0[1], &row0[2]) {
            (Cell::Float(tv), Cell::Float(b1)) => {
                assert!((tv / 7.3576e-1 - 1.0).abs() < 1e-4);
                assert!((b1 / 8.4707e-1 - 1.0).abs() < 1e-4);
            }
            other => panic!("unexpected cells {other:?}"),
        }
        // min markers at k = 3, 7, 12
        let marker = |k: usize, col: usize| match env.rows[k][col] {
            Cell::Bool(b) => b,
            _ => panic!("marker column expected"),
        };
        assert!(marker(3, 3));
        assert!(marker(7, 5));
        assert!(marker(12, 7));
        assert!(!marker(3, 5));
    }

    #[test]
    fn table1_rejects_large_kmax() {
        assert!(cmd_table1(21, &[1.0]).is_err());
        assert!(cmd_table1(14, &[]).is_err());
        assert!(cmd_table1(14, &[-0.5]).is_err());
    }

    #[test]
    fn gauss_reference_row() {
        let (env, ok) = cmd_gauss(&[1.0], false, 8192).unwrap();
        assert!(ok);
        let row = &env.rows[0];
        match (&row[2], &row[3], &row[4]) {
            (Cell::Float(r), Cell::Float(k), Cell::Float(m)) => {
                assert!((r / 2.661e-7 - 1.0).abs() < 1e-3);
                assert!((k / 4.435e-8 - 1.0).abs() < 1e-3);
                assert!((m / 1.774e-7 - 1.0).abs() < 1e-3);
            }
            other => panic!("unexpected cells {other:?}"),
        }
        assert!(matches!(
            cmd_gauss(&[0.1], false, 512),
            Err(Error::SigmaTooSmall { .. })
        ));
    }

    #[test]
    fn digits_uniform_is_exact() {
        let (env, ok) = cmd_digits("uniform:width=1", &["7@10".to_string()], 10, None).unwrap();
        assert!(ok);
        match (&env.rows[0][2], &env.rows[0][3]) {
            (Cell::Float(exact), Cell::Float(rel)) => {
                assert!((exact - (8f64 / 7.0).log10()).abs() < 1e-12);
                assert!(rel.abs() < 1e-9);
            }
            other => panic!("unexpected cells {other:?}"),
        }
    }

    #[test]
    fn digits_weibull_base_mismatch_rejected() {
        let r = cmd_digits("weibull:tau=1", &["1a@16".to_string()], 10, None);
        assert!(matches!(r, Err(Error::InvalidPrefix(_))));
    }

    #[test]
    fn model_spec_parsing() {
        let (m, echo) = parse_model_spec("gauss:sigma=1,mu=0.25", 10).unwrap();
        assert_eq!(m.sigma(), 1.0);
        assert_eq!(m.mu(), 0.25);
        assert_eq!(echo["sigma"], "1");

        let (m, echo) = parse_model_spec("weibull:tau=0.5", 10).unwrap();
        assert!((m.sigma() - 1.0 / (0.5 * std::f64::consts::LN_10)).abs() < 1e-15);
        assert_eq!(echo["gamma"], "1");
        assert!(echo.contains_key("sigma"));

        assert!(parse_model_spec("gauss:mu=1", 10).is_err());
        assert!(parse_model_spec("pareto:alpha=2", 10).is_err());
        assert!(parse_model_spec("gauss:sigma=1,sigma=2", 10).is_err());
        assert!(parse_model_spec("uniform:width=1,weird=2", 10).is_err());
    }

    #[test]
    fn rendering_is_deterministic() {
        let env1 = cmd_table1(6, &[1.0, 0.5]).unwrap();
        let env2 = cmd_table1(6, &[1.0, 0.5]).unwrap();
        assert_eq!(
            env1.render(OutputFormat::Csv),
            env2.render(OutputFormat::Csv)
        );
        assert_eq!(
            env1.render(OutputFormat::Json),
            env2.render(OutputFormat::Json)
        );
    }

    #[test]
    fn csv_and_json_shape() {
        let (env, _) = cmd_gauss(&[1.0], false, 8192).unwrap();
        let csv = env.to_csv();
        assert!(csv.starts_with("# format_version=1\n# command=gauss\n"));
        assert!(csv.contains("sigma,m,range_bound,kuiper_bound,mrae_bound"));
        let json = env.to_json();
        assert!(json.starts_with("{\"command\":\"gauss\",\"format_version\":\"1\""));
        // row keys sorted alphabetically
        let kuiper_pos = json.find("\"kuiper_bound\"").unwrap();
        let m_pos = json.find("\"m\"").unwrap();
        let sigma_pos = json.find("\"sigma\"").unwrap();
        assert!(kuiper_pos < m_pos && m_pos < sigma_pos);
    }

    #[test]
    fn float_formatting_six_significant_digits() {
        assert_eq!(Cell::float_repr(0.7357588823428847), "7.35759e-1");
        assert_eq!(Cell::float_repr(36801e-9), "3.68010e-5");
        assert_eq!(Cell::float_repr(0.0), "0.00000e0");
        assert_eq!(Cell::float_repr(-0.0), "0.00000e0");
        assert_eq!(Cell::float_repr(2889.0), "2.88900e3");
    }

    #[test]
    fn verify_battery_passes() {
        // small grid keeps this test quick; the acceptance suite runs the full one
        let (env, ok) = cmd_verify(&standard_battery(), Some(6), 512, 1e-8, 10).unwrap();
        assert!(ok, "{}", env.to_csv());
        assert_eq!(env.rows.len(), 10);
    }

    #[test]
    fn json_string_escaping() {
        assert_eq!(json_string("a\"b\\c\nd"), "\"a\\\"b\\\\c\\nd\"");
        assert_eq!(json_string("plain"), "\"plain\"");
    }

    mod properties {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn model_spec_parser_never_panics(s in "\\PC{0,40}") {
                let _ = parse_model_spec(&s, 10);
            }

            #[test]
            fn prefix_parser_never_panics(s in "\\PC{0,20}") {
                let _ = crate::digits::DigitPrefix::parse(&s);
            }

            #[test]
            fn well_formed_gauss_specs_round_trip(
                sigma in 0.05f64..8.0,
                mu in -4.0f64..4.0,
            ) {
                let spec = format!("gauss:sigma={sigma},mu={mu}");
                let (model, echo) = parse_model_spec(&spec, 10).unwrap();
                prop_assert_eq!(model.sigma(), sigma);
                prop_assert_eq!(model.mu(), mu);
                prop_assert_eq!(echo.get("model").unwrap(), &spec);
            }
        }
    }
}
