use std::fs;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use scalar_ac::field::FieldConfig;
use scalar_ac::formfactor::{
    ir_scan, reduction_check_with_mass, reduction_pointwise_deviation, susy_form_factor_mc, susy_form_factor_with,
    yukawa_form_factor_mc, yukawa_form_factor_with, FormFactorResult, SusyParams, YukawaParams,
};
use scalar_ac::phase::{ac_phase, fringe_shift, Conventions, PolylinePath, Species};
use scalar_ac::quadrature::AdaptiveOptions;

use crate::args::{
    CheckReductionArgs, FringeArgs, Integration, IrScanArgs, MdmArgs, Method, OutFormat, PhaseArgs, SpeciesArg, Sweep,
    YukawaArgs,
};
use crate::error::{CliError, EXIT_CHECK_FAILED, EXIT_OK};
use crate::table::{float_text, write_csv, write_json, Cell, Record};

type CmdResult = Result<i32, CliError>;

fn io_err(e: std::io::Error) -> CliError {
    CliError { code: 2, kind: "io", message: format!("cannot write output: {e}") }
}

fn positive_tol(tol: f64) -> Result<(), CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(CliError::usage(format!("--tol must be positive and finite, got {tol}")))
    }
}

fn parse_parts(spec: &str, n: usize, flag: &str) -> Result<Vec<String>, CliError> {
    let parts: Vec<String> = spec.split(':').map(|s| s.trim().to_string()).collect();
    if parts.len() != n {
        return Err(CliError::usage(format!("{flag} expects {n} ':'-separated fields, got '{spec}'")));
    }
    Ok(parts)
}

fn parse_num<T: std::str::FromStr>(s: &str, flag: &str) -> Result<T, CliError> {
    s.parse().map_err(|_| CliError::usage(format!("{flag}: cannot parse '{s}'")))
}

/// The explicit list, or `lo:hi:n` expanded linearly; never empty.
fn sweep_points(sweep: &Sweep) -> Result<Vec<f64>, CliError> {
    let mut qs = sweep.q_hat2.clone();
    if let Some(spec) = &sweep.q_range {
        let p = parse_parts(spec, 3, "--q-range")?;
        let lo: f64 = parse_num(&p[0], "--q-range")?;
        let hi: f64 = parse_num(&p[1], "--q-range")?;
        let n: usize = parse_num(&p[2], "--q-range")?;
        match n {
            0 => {}
            1 => qs.push(lo),
            _ => qs.extend((0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)),
        }
    }
    if qs.is_empty() {
        return Err(CliError::usage("empty sweep: give --q-hat2 or --q-range"));
    }
    if let Some(q) = qs.iter().find(|q| !q.is_finite()) {
        return Err(CliError::usage(format!("q_hat2 must be finite, got {q}")));
    }
    Ok(qs)
}

fn options(i: &Integration) -> AdaptiveOptions {
    let mut opts = AdaptiveOptions::default();
    if let Some(m) = i.max_evals {
        opts.max_evaluations = m;
    }
    opts
}

/// Evaluates every point in parallel; rows and the reported error follow input order.
fn sweep_rows<F>(qs: &[f64], eval: F) -> Result<Vec<Record>, CliError>
where
    F: Fn(f64) -> Result<Record, CliError> + Sync,
{
    let results: Vec<Result<Record, CliError>> = qs.par_iter().map(|&q| eval(q)).collect();
    results.into_iter().collect()
}

fn emit_rows(out: &mut dyn Write, format: OutFormat, rows: &[Record]) -> CmdResult {
    match format {
        OutFormat::Csv => write_csv(out, rows),
        OutFormat::Json => write_json(out, rows),
    }
    .map_err(io_err)?;
    Ok(EXIT_OK)
}

pub fn mdm(a: &MdmArgs, out: &mut dyn Write) -> CmdResult {
    let qs = sweep_points(&a.sweep)?;
    let i = &a.integration;
    positive_tol(i.tol)?;
    let opts = options(i);
    let rows = sweep_rows(&qs, |q| {
        let p = SusyParams::new(q, a.mcs_hat2)?;
        let r: FormFactorResult<f64> = match i.method {
            Method::Adaptive => susy_form_factor_with(&p, i.tol, &opts)?,
            Method::Mc => susy_form_factor_mc(&p, i.samples, i.seed)?,
        };
        Ok(Record::default()
            .with("q_hat2", Cell::Float(q))
            .with("mcs_hat2", Cell::Float(a.mcs_hat2))
            .with("integral", Cell::Float(r.integral))
            .with("error_estimate", Cell::Float(r.error_estimate))
            .with("evaluations", Cell::Count(r.evaluations)))
    })?;
    emit_rows(out, i.out, &rows)
}

pub fn yukawa(a: &YukawaArgs, out: &mut dyn Write) -> CmdResult {
    let qs = sweep_points(&a.sweep)?;
    let i = &a.integration;
    positive_tol(i.tol)?;
    let opts = options(i);
    let rows = sweep_rows(&qs, |q| {
        let p = YukawaParams::new(q, a.m1_hat, a.m2_hat, a.e1, a.e2, a.a_abs2)?;
        let r = match i.method {
            Method::Adaptive => yukawa_form_factor_with(&p, i.tol, &opts)?,
            Method::Mc => yukawa_form_factor_mc(&p, i.samples, i.seed)?,
        };
        Ok(Record::default()
            .with("q_hat2", Cell::Float(q))
            .with("m1_hat", Cell::Float(a.m1_hat))
            .with("m2_hat", Cell::Float(a.m2_hat))
            .with("e1", Cell::Float(a.e1))
            .with("e2", Cell::Float(a.e2))
            .with("integral", Cell::Float(r.integral))
            .with("error_estimate", Cell::Float(r.error_estimate)))
    })?;
    emit_rows(out, i.out, &rows)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))
}

fn species(s: SpeciesArg) -> Species {
    match s {
        SpeciesArg::Spinor => Species::Spinor,
        SpeciesArg::Scalar => Species::Scalar,
    }
}

fn emit_record(out: &mut dyn Write, format: OutFormat, record: Record) -> CmdResult {
    match format {
        OutFormat::Csv => write_csv(out, &[record]),
        OutFormat::Json => write_json(out, &record),
    }
    .map_err(io_err)?;
    Ok(EXIT_OK)
}

pub fn phase(a: &PhaseArgs, out: &mut dyn Write) -> CmdResult {
    positive_tol(a.tol)?;
    let cfg = FieldConfig::<f64>::from_json(&read(&a.charges)?)?;
    let path = PolylinePath::<f64>::from_json(&read(&a.path)?)?;
    let r = ac_phase(&path, &cfg, a.g, species(a.species), a.tol)?;
    let record = Record::default()
        .with("phase", Cell::Float(r.phase))
        .with("error_estimate", Cell::Float(r.error_estimate))
        .with("species", Cell::Text(r.species.to_string()))
        .with("s", Cell::Int(r.conventions.s.into()))
        .with("windings", Cell::Ints(r.windings));
    emit_record(out, a.out, record)
}

pub fn fringe(a: &FringeArgs, out: &mut dyn Write) -> CmdResult {
    positive_tol(a.tol)?;
    if a.path.len() != 2 {
        return Err(CliError::usage(format!("fringe needs exactly two --path arms, got {}", a.path.len())));
    }
    let cfg = FieldConfig::<f64>::from_json(&read(&a.charges)?)?;
    let arm_a = PolylinePath::<f64>::from_json(&read(&a.path[0])?)?;
    let arm_b = PolylinePath::<f64>::from_json(&read(&a.path[1])?)?;
    let r = fringe_shift(&arm_a, &arm_b, &cfg, a.g, species(a.species), a.tol)?;
    let record = Record::default()
        .with("delta_phase", Cell::Float(r.delta_phase))
        .with("contrast", Cell::Float(r.contrast))
        .with("error_estimate", Cell::Float(r.error_estimate))
        .with("species", Cell::Text(species(a.species).to_string()))
        .with("s", Cell::Int(Conventions::default().s.into()));
    emit_record(out, a.out, record)
}

fn decade_points(spec: &str, per_decade: usize) -> Result<Vec<f64>, CliError> {
    let p = parse_parts(spec, 2, "--decades")?;
    let lo: i32 = parse_num(&p[0], "--decades")?;
    let hi: i32 = parse_num(&p[1], "--decades")?;
    if hi < lo || per_decade == 0 {
        return Err(CliError::usage("--decades needs lo <= hi and --per-decade >= 1"));
    }
    let n = (hi - lo) as usize * per_decade;
    Ok((0..=n)
        .map(|j| {
            if j % per_decade == 0 {
                // Whole decades by exact division, equal to the parsed literal.
                let k = lo + (j / per_decade) as i32;
                if k >= 0 { -1.0 / 10f64.powi(k) } else { -10f64.powi(-k) }
            } else {
                -(10f64).powf(-(lo as f64 + j as f64 / per_decade as f64))
            }
        })
        .collect())
}

pub fn ir_scan_cmd(a: &IrScanArgs, out: &mut dyn Write) -> CmdResult {
    positive_tol(a.tol)?;
    let mut qs = match (&a.decades, a.sweep.q_hat2.is_empty() && a.sweep.q_range.is_none()) {
        (Some(d), true) => decade_points(d, a.per_decade)?,
        (Some(_), false) => return Err(CliError::usage("give either --decades or an explicit sweep, not both")),
        (None, true) => decade_points("2:6", a.per_decade)?,
        (None, false) => sweep_points(&a.sweep)?,
    };
    // Explicit lists are accepted in any order; the scan runs toward q = 0.
    if qs.iter().any(|q| q.is_nan()) {
        return Err(CliError::usage("q_hat2 must be finite"));
    }
    qs.sort_by(|x, y| x.total_cmp(y));
    let scan = ir_scan(&qs, a.mcs_hat2, a.tol)?;
    let rows: Vec<Record> = scan
        .rows
        .iter()
        .map(|r| {
            Record::default()
                .with("q_hat2", Cell::Float(r.q_hat2))
                .with("integral", Cell::Float(r.integral))
                .with("error_estimate", Cell::Float(r.error_estimate))
                .with("evaluations", Cell::Count(r.evaluations))
        })
        .collect();
    let fit = scan.fit.map(|f| {
        Record::default()
            .with("slope", Cell::Float(f.slope))
            .with("intercept", Cell::Float(f.intercept))
            .with("r_squared", Cell::Float(f.r_squared))
    });
    let limit = scan.limit().map(|l| {
        Record::default()
            .with("q_hat2", Cell::Float(l.q_hat2))
            .with("integral", Cell::Float(l.integral))
    });
    match a.out {
        OutFormat::Csv => {
            write_csv(out, &rows).map_err(io_err)?;
            let footer = match &scan.fit {
                Some(f) => format!(
                    "# fit integral = slope*ln(1/|q_hat2|) + intercept: slope={},intercept={},r_squared={}",
                    float_text(f.slope),
                    float_text(f.intercept),
                    float_text(f.r_squared)
                ),
                None => "# fit undefined (fewer than two points or flat response)".to_string(),
            };
            writeln!(out, "{footer}").map_err(io_err)?;
            if let Some(l) = scan.limit() {
                writeln!(out, "# limit q_hat2={},integral={}", float_text(l.q_hat2), float_text(l.integral))
                    .map_err(io_err)?;
            }
        }
        OutFormat::Json => {
            let doc = Record::default()
                .with("mcs_hat2", Cell::Float(scan.mcs_hat2));
            #[derive(serde::Serialize)]
            struct Doc<'a> {
                #[serde(flatten)]
                head: &'a Record,
                rows: &'a [Record],
                fit: Option<Record>,
                limit: Option<Record>,
            }
            write_json(out, &Doc { head: &doc, rows: &rows, fit, limit }).map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn check_reduction(a: &CheckReductionArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    positive_tol(a.tol)?;
    if a.q_hat2.is_empty() {
        return Err(CliError::usage("empty --q-hat2 grid"));
    }
    let bound = 2.0 * a.tol;
    let (mode, deviation) = if a.pointwise_only {
        let mut worst = 0.0f64;
        for (k, &q) in a.q_hat2.iter().enumerate() {
            let d = reduction_pointwise_deviation(q, a.m1_hat, a.samples, a.seed.wrapping_add(k as u64))?;
            worst = worst.max(d);
        }
        ("pointwise", worst)
    } else {
        ("integral", reduction_check_with_mass(&a.q_hat2, a.tol, a.m1_hat)?)
    };
    let passed = deviation <= bound;
    let record = Record::default()
        .with("mode", Cell::Text(mode.into()))
        .with("max_deviation", Cell::Float(deviation))
        .with("bound", Cell::Float(bound))
        .with("passed", Cell::Bool(passed));
    emit_record(out, a.out, record)?;
    if passed {
        Ok(EXIT_OK)
    } else {
        writeln!(
            err,
            "error[check-failed]: reduction deviation {} exceeds 2*tol = {}",
            float_text(deviation),
            float_text(bound)
        )
        .map_err(io_err)?;
        Ok(EXIT_CHECK_FAILED)
    }
}
