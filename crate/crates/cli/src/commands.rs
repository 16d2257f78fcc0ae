use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Serialize;
use twospinor::bitensor::{lorentz_of, ETA};
use twospinor::bundle::fiber_projector;
use twospinor::clifford::gammas;
use twospinor::field::{planewave_residual, sample_field, solve, Derivative, FieldSample, Grid};
use twospinor::verify::{run, GammaCorruption, VerifyOptions, VerifyReport};
use twospinor::{Execution, Mat2, SL2Element};

use crate::args::{Format, LorentzArgs, PlanewaveArgs, SampleArgs, SolveArgs, VerifyArgs};
use crate::error::CliError;
use crate::output::{self, conventions, conventions_text, fmt_complex, fmt_matrix, pair, Conventions, Pair};

pub type Outcome = Result<u8, CliError>;

/// Global settings shared by every subcommand.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub format: Format,
    pub seed: u64,
    pub tol: f64,
}

fn stdout_err(source: io::Error) -> CliError {
    CliError::Io { path: PathBuf::from("<stdout>"), source }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| stdout_err(e.into()))?;
    writeln!(out).map_err(stdout_err)
}

fn emit_text(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    writeln!(out, "{text}").map_err(stdout_err)
}

fn exec(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

#[derive(Serialize)]
struct GammaOut {
    conventions: Conventions,
    eta: [f64; 4],
    gamma0: [[Pair; 4]; 4],
    gamma1: [[Pair; 4]; 4],
    gamma2: [[Pair; 4]; 4],
    gamma3: [[Pair; 4]; 4],
    relation_residuals: [[f64; 4]; 4],
    max_relation_residual: f64,
}

pub fn gamma(ctx: Ctx, out: &mut dyn Write) -> Outcome {
    let table = gammas();
    let residuals = table.relation_residuals();
    let max = residuals.iter().flatten().copied().fold(0.0, f64::max);
    match ctx.format {
        Format::Json => {
            let g = |mu: usize| output::mat4(table.get(mu));
            emit_json(
                out,
                &GammaOut {
                    conventions: conventions(),
                    eta: ETA,
                    gamma0: g(0),
                    gamma1: g(1),
                    gamma2: g(2),
                    gamma3: g(3),
                    relation_residuals: residuals,
                    max_relation_residual: max,
                },
            )?;
        }
        Format::Text => {
            let mut text = conventions_text();
            for mu in 0..4 {
                text += &format!("\ngamma{mu} =\n{}", fmt_matrix(&table.get(mu).0, "  "));
            }
            text += "\nrelation residuals |g_mu g_nu + g_nu g_mu - 2 eta_mu_nu Id|_max:";
            for row in residuals {
                let cells: Vec<String> = row.iter().map(|r| format!("{r:.1e}")).collect();
                text += &format!("\n  {}", cells.join("  "));
            }
            emit_text(out, &text)?;
        }
    }
    Ok(0)
}

fn parse_corruption(spec: &str) -> Result<GammaCorruption, CliError> {
    let bad = || CliError::Usage(format!("--corrupt-gamma expects MU,ROW,COL,DELTA, got {spec:?}"));
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let [mu, row, col, delta] = parts.as_slice() else { return Err(bad()) };
    let index = |s: &str| s.parse::<usize>().ok().filter(|&i| i < 4).ok_or_else(bad);
    Ok(GammaCorruption {
        mu: index(mu)?,
        row: index(row)?,
        col: index(col)?,
        delta: Complex64::new(delta.parse().map_err(|_| bad())?, 0.0),
    })
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    conventions: Conventions,
    #[serde(flatten)]
    report: &'a VerifyReport,
}

pub fn verify(ctx: Ctx, args: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let corrupt_gamma = args.corrupt_gamma.as_deref().map(parse_corruption).transpose()?;
    let samples = usize::try_from(args.samples).map_err(|_| CliError::Usage("--samples is too large".into()))?;
    let report = run(&VerifyOptions { seed: ctx.seed, samples, exec: exec(args.sequential), corrupt_gamma });
    match ctx.format {
        Format::Json => emit_json(out, &VerifyOut { conventions: conventions(), report: &report })?,
        Format::Text => {
            let mut text = format!(
                "{}\nverify: seed {}, {} samples per sweep\n",
                conventions_text(),
                report.seed,
                report.samples
            );
            for c in &report.checks {
                text += &format!(
                    "{} {:<28} n={:<7} max_defect={:.3e}  tol={:.0e}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.samples,
                    c.max_defect,
                    c.tol
                );
                if let Some(d) = &c.detail {
                    text += &format!("  [{d}]");
                }
                text.push('\n');
            }
            let failed = report.failures().count();
            text += &if failed == 0 {
                format!("verify: all {} checks pass", report.checks.len())
            } else {
                format!("verify: {failed} of {} checks FAILED", report.checks.len())
            };
            emit_text(out, &text)?;
        }
    }
    Ok(if report.pass { 0 } else { 1 })
}

#[derive(Serialize)]
struct SolutionOut {
    psi: [Pair; 4],
    residual: f64,
    within_tol: bool,
    projector_defect: f64,
}

#[derive(Serialize)]
struct SolveOut {
    conventions: Conventions,
    m: f64,
    p: [f64; 4],
    boost: [[Pair; 2]; 2],
    tol: f64,
    solutions: Vec<SolutionOut>,
}

pub fn solve_cmd(ctx: Ctx, args: &SolveArgs, out: &mut dyn Write) -> Outcome {
    let sol = solve(args.m, args.p1, args.p2, args.p3)?;
    let proj = fiber_projector(&sol.point)?;
    let solutions: Vec<SolutionOut> = sol
        .basis
        .iter()
        .zip(sol.residuals)
        .map(|(psi, residual)| SolutionOut {
            psi: output::spinor4(psi),
            residual,
            within_tol: residual <= ctx.tol,
            projector_defect: (proj * *psi - *psi).norm(),
        })
        .collect();
    let ok = solutions.iter().all(|s| s.within_tol);
    let report = SolveOut {
        conventions: conventions(),
        m: args.m,
        p: sol.point.momentum().0,
        boost: output::mat2(sol.boost.matrix()),
        tol: ctx.tol,
        solutions,
    };
    match ctx.format {
        Format::Json => emit_json(out, &report)?,
        Format::Text => {
            let mut text = format!(
                "{}\nm = {}\np = ({})\nA_p =\n{}",
                conventions_text(),
                report.m,
                report.p.map(|x| x.to_string()).join(", "),
                fmt_matrix(&sol.boost.matrix().0, "  ")
            );
            for (k, (s, psi)) in report.solutions.iter().zip(sol.basis).enumerate() {
                let coords: Vec<String> = psi.to_array().iter().map(|&z| fmt_complex(z)).collect();
                text += &format!(
                    "\nPsi{k} = ({})\n  residual {:e}  projector defect {:e}{}",
                    coords.join(", "),
                    s.residual,
                    s.projector_defect,
                    if s.within_tol { "" } else { "  EXCEEDS TOL" }
                );
            }
            emit_text(out, &text)?;
        }
    }
    Ok(if ok { 0 } else { 1 })
}

#[derive(Serialize)]
struct PlanewaveResult {
    basis: usize,
    residual: f64,
}

#[derive(Serialize)]
struct PlanewaveOut {
    conventions: Conventions,
    m: f64,
    p: [f64; 4],
    x: [f64; 4],
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    step: Option<f64>,
    results: Vec<PlanewaveResult>,
}

pub fn planewave(ctx: Ctx, args: &PlanewaveArgs, out: &mut dyn Write) -> Outcome {
    let sol = solve(args.m, args.p1, args.p2, args.p3)?;
    let x = [args.x0, args.x1, args.x2, args.x3];
    let mode = if args.analytic { Derivative::Analytic } else { Derivative::Central(args.step) };
    let which: Vec<usize> = match args.basis {
        Some(k) => vec![k as usize],
        None => vec![0, 1],
    };
    let mut results = Vec::new();
    for k in which {
        let residual = planewave_residual(&sol.point, &sol.basis[k], &x, mode)?;
        results.push(PlanewaveResult { basis: k, residual });
    }
    let report = PlanewaveOut {
        conventions: conventions(),
        m: args.m,
        p: sol.point.momentum().0,
        x,
        mode: if args.analytic { "analytic" } else { "central" },
        step: (!args.analytic).then_some(args.step),
        results,
    };
    match ctx.format {
        Format::Json => emit_json(out, &report)?,
        Format::Text => {
            let mut text = format!(
                "{}\nplane wave at x = ({}), p = ({}), {} derivative{}",
                conventions_text(),
                x.map(|v| v.to_string()).join(", "),
                report.p.map(|v| v.to_string()).join(", "),
                report.mode,
                report.step.map(|h| format!(" with step {h}")).unwrap_or_default()
            );
            for r in &report.results {
                text += &format!("\n  basis {}: residual {:e}", r.basis, r.residual);
            }
            emit_text(out, &text)?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum GridSpec {
    Cartesian { extent: f64, nodes: usize },
    Rapidity { max_rapidity: f64, nodes: usize },
    Random { extent: f64, count: usize, seed: u64 },
}

impl From<Grid> for GridSpec {
    fn from(g: Grid) -> Self {
        match g {
            Grid::Cartesian { extent, nodes } => GridSpec::Cartesian { extent, nodes },
            Grid::Rapidity { max_rapidity, nodes } => GridSpec::Rapidity { max_rapidity, nodes },
            Grid::Random { extent, count, seed } => GridSpec::Random { extent, count, seed },
        }
    }
}

#[derive(Serialize)]
struct Header {
    record: &'static str,
    schema_version: u32,
    conventions: Conventions,
    m: f64,
    grid: GridSpec,
    seed: u64,
    tol: f64,
    nodes: usize,
    records: usize,
}

#[derive(Serialize)]
struct Record {
    node: usize,
    basis: usize,
    p: [f64; 4],
    psi: [Pair; 4],
    s: [Pair; 2],
    sbar: [Pair; 2],
    residual: f64,
    flagged: bool,
}

impl From<&FieldSample> for Record {
    fn from(r: &FieldSample) -> Self {
        Record {
            node: r.node,
            basis: r.basis,
            p: r.momentum.0,
            psi: output::spinor4(&r.psi),
            s: [pair(r.pair.s.c1), pair(r.pair.s.c2)],
            sbar: [pair(r.pair.sbar.c1), pair(r.pair.sbar.c2)],
            residual: r.residual,
            flagged: r.flagged,
        }
    }
}

#[derive(Serialize)]
struct SampleSummary<'a> {
    out: &'a Path,
    nodes: usize,
    records: usize,
    flagged: usize,
    max_residual: f64,
}

fn write_records(w: &mut dyn Write, header: &Header, records: &[FieldSample]) -> io::Result<()> {
    serde_json::to_writer(&mut *w, header)?;
    w.write_all(b"\n")?;
    for r in records {
        serde_json::to_writer(&mut *w, &Record::from(r))?;
        w.write_all(b"\n")?;
    }
    w.flush()
}

pub fn sample(ctx: Ctx, args: &SampleArgs, out: &mut dyn Write) -> Outcome {
    if !(args.extent.is_finite() && args.extent >= 0.0) {
        return Err(CliError::Usage(format!("--extent must be finite and non-negative, got {}", args.extent)));
    }
    let grid = match (args.rapidity, args.random) {
        (Some(max_rapidity), _) => {
            if !(max_rapidity.is_finite() && max_rapidity >= 0.0) {
                return Err(CliError::Usage(format!("--rapidity must be finite and non-negative, got {max_rapidity}")));
            }
            Grid::Rapidity { max_rapidity, nodes: args.nodes }
        }
        (None, Some(count)) => Grid::Random { extent: args.extent, count, seed: ctx.seed },
        (None, None) => Grid::Cartesian { extent: args.extent, nodes: args.nodes },
    };
    let count = grid.momenta(1.0).len();
    if count == 0 {
        return Err(CliError::Usage("the momentum grid is empty".into()));
    }
    let records = sample_field(args.m, &grid, ctx.tol, exec(args.sequential))?;
    let header = Header {
        record: "header",
        schema_version: output::SCHEMA_VERSION,
        conventions: conventions(),
        m: args.m,
        grid: grid.into(),
        seed: ctx.seed,
        tol: ctx.tol,
        nodes: count,
        records: records.len(),
    };
    match &args.out {
        None => write_records(out, &header, &records).map_err(stdout_err)?,
        Some(path) => {
            let io_err = |source| CliError::Io { path: path.clone(), source };
            let file = File::create(path).map_err(io_err)?;
            write_records(&mut BufWriter::new(file), &header, &records).map_err(io_err)?;
            let summary = SampleSummary {
                out: path,
                nodes: count,
                records: records.len(),
                flagged: records.iter().filter(|r| r.flagged).count(),
                max_residual: records.iter().map(|r| r.residual).fold(0.0, f64::max),
            };
            match ctx.format {
                Format::Json => emit_json(out, &summary)?,
                Format::Text => emit_text(
                    out,
                    &format!(
                        "wrote {} records ({} nodes) to {}; {} flagged, max residual {:e}",
                        summary.records,
                        summary.nodes,
                        path.display(),
                        summary.flagged,
                        summary.max_residual
                    ),
                )?,
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct LorentzOut {
    conventions: Conventions,
    a: [[Pair; 2]; 2],
    lambda: [[f64; 4]; 4],
    orthogonality_residual: f64,
    det: f64,
}

pub fn lorentz(ctx: Ctx, args: &LorentzArgs, out: &mut dyn Write) -> Outcome {
    let m = Mat2::new(
        Complex64::new(args.a11_re, args.a11_im),
        Complex64::new(args.a12_re, args.a12_im),
        Complex64::new(args.a21_re, args.a21_im),
        Complex64::new(args.a22_re, args.a22_im),
    );
    let a = if args.normalize { SL2Element::normalized(m)? } else { SL2Element::new(m)? };
    let l = lorentz_of(&a)?;
    let report = LorentzOut {
        conventions: conventions(),
        a: output::mat2(a.matrix()),
        lambda: l.0,
        orthogonality_residual: l.orthogonality_residual(),
        det: l.det(),
    };
    match ctx.format {
        Format::Json => emit_json(out, &report)?,
        Format::Text => {
            let rows: Vec<String> = l
                .0
                .iter()
                .map(|r| format!("  [ {} ]", r.map(|x| format!("{x:>24}")).join(" ")))
                .collect();
            emit_text(
                out,
                &format!(
                    "{}\nA =\n{}\nLambda(A) =\n{}\northogonality residual {:e}, det {}",
                    conventions_text(),
                    fmt_matrix(&a.matrix().0, "  "),
                    rows.join("\n"),
                    report.orthogonality_residual,
                    report.det
                ),
            )?;
        }
    }
    Ok(0)
}
