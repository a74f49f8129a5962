//! The `disct` command-line tool.
//!
//! Every flag can also be given as a key in a TOML file passed with `--config`,
//! using the flag name with dashes replaced by underscores (`rel_tol = 1e-6`).
//! Flags on the command line win over the file.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use crate::kernels::{finite_w_kernel, hmatrix, ConstantMatrix, KernelKind};
use crate::lattice::{LatticePoint, Sequence};
use crate::mc::{estimate_projection, exit_chi_square, exit_probability, simulate_exit, SdeConfig};
use crate::multipliers::{
    convolution_factorization_check, hdis_multiplier, multiplier_mtilde, pkernel_coefficients, pkernel_multiplier,
    pkernel_multiplier_at_half_with_error,
};
use crate::numerics::{QuadConfig, QuadResult};
use crate::transforms::{cot_bound, norm_lower_bound_search, norm_ratio, KernelTable, SearchOptions};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "disct", version, about = "Kernels, multipliers and norm estimates for discrete Riesz transforms")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// TOML file of key = value defaults.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kernel values on a box as CSV `n1,...,nd,value,abs_err`.
    Kernel(KernelArgs),
    /// The d = 2 tables: 1 = the three kernels, 2 = K_H/K_CZ, 3 = K_rot/K_CZ.
    Table(TableArgs),
    /// Multipliers on [0, 1/2] as CSV `xi,hilbert,hdis,mtilde,mtilde_err[,pmult,pmult_err]`.
    Multiplier(MultiplierArgs),
    /// The probability kernel P and the factorization check, as JSON.
    Pkernel(PkernelArgs),
    /// ℓ^p norm lower bounds and random ratios, as JSON.
    Norms(NormsArgs),
    /// Monte Carlo exit law and projection estimate, as JSON.
    Mc(McArgs),
}

#[derive(Debug, Args, Default)]
pub struct TolArgs {
    #[arg(long)]
    pub rel_tol: Option<f64>,
    #[arg(long)]
    pub abs_tol: Option<f64>,
    #[arg(long)]
    pub max_subdivisions: Option<usize>,
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    /// cz, prob or rot.
    #[arg(long)]
    pub kind: Option<String>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Emit 0 ≤ n_i ≤ radius (or the whole cube with --full).
    #[arg(long)]
    pub radius: Option<i64>,
    #[arg(long)]
    pub full: bool,
    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub which: Option<u8>,
    #[arg(long)]
    pub radius: Option<i64>,
    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(Debug, Args)]
pub struct MultiplierArgs {
    /// Grid ξ_i = i/(2·points), i = 0..=points.
    #[arg(long)]
    pub points: Option<usize>,
    /// Add the F(P) column.
    #[arg(long)]
    pub pmult: bool,
}

#[derive(Debug, Args)]
pub struct PkernelArgs {
    #[arg(long)]
    pub grid: Option<usize>,
    /// Coefficients listed for |n| ≤ radius.
    #[arg(long)]
    pub radius: Option<i64>,
    /// Truncation radius of the factorization check.
    #[arg(long)]
    pub factor_radius: Option<usize>,
}

#[derive(Debug, Args)]
pub struct NormsArgs {
    /// prob-hilbert, hilbert-dis, cz, prob or rot.
    #[arg(long)]
    pub kernel: Option<String>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Exponents, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub p: Option<Vec<f64>>,
    /// Side of the box for the search.
    #[arg(long = "box")]
    pub box_side: Option<usize>,
    #[arg(long)]
    pub budget: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of random test sequences per exponent.
    #[arg(long)]
    pub random: Option<usize>,
    /// Longest random sequence.
    #[arg(long)]
    pub support: Option<usize>,
    /// Truncation radius for the random ratios.
    #[arg(long)]
    pub radius: Option<i64>,
    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(Debug, Args)]
pub struct McArgs {
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub w: Option<f64>,
    #[arg(long)]
    pub paths: Option<usize>,
    #[arg(long)]
    pub dt: Option<f64>,
    #[arg(long)]
    pub y_floor: Option<f64>,
    #[arg(long)]
    pub boundary_factor: Option<f64>,
    #[arg(long)]
    pub max_steps: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Also estimate T^w_A δ_0(n) for A = h (H^(1)), identity or zero.
    #[arg(long)]
    pub matrix: Option<String>,
    /// Exit point n for the projection, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub n: Option<Vec<i64>>,
    /// Compare the projection with quadrature of K^w_A.
    #[arg(long)]
    pub quad: bool,
}

/// Echo of the resolved inputs, written into every JSON report.
#[derive(Debug, Clone, Serialize, Default)]
pub struct JobSpec {
    pub command: String,
    pub d: Option<usize>,
    pub k: Option<usize>,
    pub radius: Option<i64>,
    pub p: Vec<f64>,
    pub rel_tol: Option<f64>,
    pub abs_tol: Option<f64>,
    pub output: Option<String>,
    pub seed: Option<u64>,
}

/// Key-value defaults read from the `--config` file.
#[derive(Debug, Default)]
pub struct Config(toml::Table);

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let table: toml::Table =
            text.parse().map_err(|e| Error::Usage(format!("config {}: {e}", path.display())))?;
        Ok(Config(table))
    }

    fn get<T: DeserializeOwned>(&self, key: &str) -> Result<Option<T>> {
        match self.0.get(key) {
            None => Ok(None),
            Some(v) => v.clone().try_into().map(Some).map_err(|e| Error::Usage(format!("config key '{key}': {e}"))),
        }
    }

    /// Flag, then config key, then default.
    fn pick<T: DeserializeOwned>(&self, flag: Option<T>, key: &str, default: T) -> Result<T> {
        match flag {
            Some(v) => Ok(v),
            None => Ok(self.get(key)?.unwrap_or(default)),
        }
    }

    fn quad(&self, t: &TolArgs, default: QuadConfig) -> Result<QuadConfig> {
        Ok(QuadConfig::new(
            self.pick(t.rel_tol, "rel_tol", default.rel_tol)?,
            self.pick(t.abs_tol, "abs_tol", default.abs_tol)?,
            self.pick(t.max_subdivisions, "max_subdivisions", default.max_subdivisions)?,
        ))
    }
}

/// Parses `args`, runs the command and returns the process exit code:
/// 0 success, 1 numerical failure, 2 usage error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            let msg = json!({ "error": e.reason(), "message": e.to_string() });
            eprintln!("{msg}");
            e.exit_code()
        }
    }
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<()> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let jobs: Option<usize> = match cli.jobs {
        Some(j) => Some(j),
        None => cfg.get("jobs")?,
    };
    if let Some(j) = jobs {
        if j == 0 {
            return Err(Error::Usage("--jobs must be at least 1".into()));
        }
        // a second build in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    let output: Option<PathBuf> = match &cli.output {
        Some(p) => Some(p.clone()),
        None => cfg.get::<String>("output")?.map(PathBuf::from),
    };
    let mut buf = Vec::new();
    let res = match &cli.command {
        Command::Kernel(a) => cmd_kernel(a, &cfg, &mut buf),
        Command::Table(a) => cmd_table(a, &cfg, &mut buf),
        Command::Multiplier(a) => cmd_multiplier(a, &cfg, &mut buf),
        Command::Pkernel(a) => cmd_pkernel(a, &cfg, output.as_deref(), &mut buf),
        Command::Norms(a) => cmd_norms(a, &cfg, output.as_deref(), &mut buf),
        Command::Mc(a) => cmd_mc(a, &cfg, output.as_deref(), &mut buf),
    };
    // partial CSV output is still written before reporting a failure
    match &output {
        Some(p) => std::fs::write(p, &buf)?,
        None => io::stdout().write_all(&buf)?,
    }
    res
}

fn csv_writer(out: &mut Vec<u8>) -> csv::Writer<&mut Vec<u8>> {
    csv::WriterBuilder::new().from_writer(out)
}

fn num(v: f64) -> String {
    format!("{v:e}")
}

fn kernel_kind(name: &str, k: usize) -> Result<KernelKind> {
    match name {
        "cz" | "prob" | "rot" => KernelKind::parse(name, k),
        _ => Err(Error::Usage(format!("--kind must be cz, prob or rot, got '{name}'"))),
    }
}

// values for every point, keeping those that succeeded
fn eval_points(table: &KernelTable, pts: &[LatticePoint]) -> Result<(Vec<Option<QuadResult>>, Option<Error>)> {
    let failed = table.ensure_partial(pts.iter())?;
    let vals = pts.iter().map(|n| table.get(n)).collect();
    Ok((vals, failed.into_iter().next().map(|(_, e)| e)))
}

fn orthant(d: usize, r: i64) -> Vec<LatticePoint> {
    LatticePoint::cube(d, r).into_iter().filter(|n| n.coords().iter().all(|&c| c >= 0)).collect()
}

fn cmd_kernel(a: &KernelArgs, cfg: &Config, out: &mut Vec<u8>) -> Result<()> {
    let name: String = cfg.pick(a.kind.clone(), "kind", "cz".into())?;
    let d: usize = cfg.pick(a.d, "d", 2)?;
    let k: usize = cfg.pick(a.k, "k", 1)?;
    let r: i64 = cfg.pick(a.radius, "radius", 5)?;
    let full = a.full || cfg.get("full")?.unwrap_or(false);
    if !(1..=3).contains(&d) {
        return Err(Error::Usage(format!("--d must be 1, 2 or 3, got {d}")));
    }
    if k == 0 || k > d {
        return Err(Error::Usage(format!("--k must lie in 1..={d}, got {k}")));
    }
    if r < 0 {
        return Err(Error::Usage("--radius must be non-negative".into()));
    }
    let kind = kernel_kind(&name, k)?;
    let q = cfg.quad(&a.tol, QuadConfig::relaxed())?;
    let table = KernelTable::from_env(kind, d, q)?;
    let pts = if full { LatticePoint::cube(d, r) } else { orthant(d, r) };
    let (vals, err) = eval_points(&table, &pts)?;
    let mut w = csv_writer(out);
    let mut header: Vec<String> = (1..=d).map(|i| format!("n{i}")).collect();
    header.extend(["value".into(), "abs_err".into()]);
    w.write_record(&header)?;
    for (n, v) in pts.iter().zip(vals) {
        if let Some(v) = v {
            let mut rec: Vec<String> = n.coords().iter().map(|c| c.to_string()).collect();
            rec.push(num(v.value));
            rec.push(num(v.abs_error));
            w.write_record(&rec)?;
        }
    }
    w.flush()?;
    drop(w);
    err.map_or(Ok(()), Err)
}

/// The 0/0 → 1 convention on the n_1 = 0 column.
fn ratio(num_v: QuadResult, den: QuadResult, n1: i64) -> (f64, f64) {
    if n1 == 0 {
        return (1.0, 0.0);
    }
    let r = num_v.value / den.value;
    (r, (num_v.abs_error + r.abs() * den.abs_error) / den.value.abs())
}

fn cmd_table(a: &TableArgs, cfg: &Config, out: &mut Vec<u8>) -> Result<()> {
    let which: u8 = cfg.pick(a.which, "which", 1)?;
    let r: i64 = cfg.pick(a.radius, "radius", 5)?;
    if !(1..=3).contains(&which) {
        return Err(Error::Usage(format!("--which must be 1, 2 or 3, got {which}")));
    }
    if r < 0 {
        return Err(Error::Usage("--radius must be non-negative".into()));
    }
    let q = cfg.quad(&a.tol, QuadConfig::relaxed())?;
    let pts = orthant(2, r);
    let cz = KernelTable::from_env(KernelKind::CzRiesz(1), 2, q)?;
    let (czv, _) = eval_points(&cz, &pts)?;
    let other = match which {
        1 | 2 => Some(KernelTable::from_env(KernelKind::ProbRiesz(1), 2, q)?),
        _ => None,
    };
    let rot = KernelTable::from_env(KernelKind::Rotation(1), 2, q)?;
    let (rotv, _) = eval_points(&rot, &pts)?;
    let (probv, err) = match &other {
        Some(t) => eval_points(t, &pts)?,
        None => (vec![None; pts.len()], None),
    };
    let mut w = csv_writer(out);
    match which {
        1 => w.write_record(["n1", "n2", "prob", "prob_err", "rot", "rot_err", "cz", "cz_err"])?,
        _ => w.write_record(["n1", "n2", "ratio", "abs_err"])?,
    }
    for (i, n) in pts.iter().enumerate() {
        let (n1, n2) = (n.coords()[0], n.coords()[1]);
        let c = czv[i].expect("closed form");
        let ro = rotv[i].expect("closed form");
        let row: Option<Vec<String>> = match which {
            1 => probv[i].map(|p| {
                vec![n1.to_string(), n2.to_string(), num(p.value), num(p.abs_error), num(ro.value), num(ro.abs_error), num(c.value), num(c.abs_error)]
            }),
            2 => probv[i].map(|p| {
                let (v, e) = ratio(p, c, n1);
                vec![n1.to_string(), n2.to_string(), num(v), num(e)]
            }),
            _ => {
                let (v, e) = ratio(ro, c, n1);
                Some(vec![n1.to_string(), n2.to_string(), num(v), num(e)])
            }
        };
        if let Some(row) = row {
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    drop(w);
    err.map_or(Ok(()), Err)
}

fn cmd_multiplier(a: &MultiplierArgs, cfg: &Config, out: &mut Vec<u8>) -> Result<()> {
    let points: usize = cfg.pick(a.points, "points", 100)?;
    let pmult = a.pmult || cfg.get("pmult")?.unwrap_or(false);
    if points == 0 {
        return Err(Error::Usage("--points must be positive".into()));
    }
    let (half, half_err) = pkernel_multiplier_at_half_with_error();
    let mut w = csv_writer(out);
    let mut header = vec!["xi", "hilbert", "hdis", "mtilde", "mtilde_err"];
    if pmult {
        header.extend(["pmult", "pmult_err"]);
    }
    w.write_record(&header)?;
    let rows: Vec<Vec<String>> = (0..=points)
        .into_par_iter()
        .map(|i| {
            let xi = i as f64 / (2.0 * points as f64);
            let m = multiplier_mtilde(xi);
            // closed forms: a few ulps per term
            let merr = 16.0 * f64::EPSILON;
            let mut rec = vec![num(xi), num(1.0), num(hdis_multiplier(xi)), num(m), num(merr)];
            if pmult {
                let (p, e) = if xi == 0.5 { (half, half_err) } else { (pkernel_multiplier(xi), merr / m.abs().max(1e-300)) };
                rec.push(num(p));
                rec.push(num(e));
            }
            rec
        })
        .collect();
    for r in rows {
        w.write_record(&r)?;
    }
    w.flush()?;
    Ok(())
}

fn write_json(out: &mut Vec<u8>, v: &serde_json::Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    out.push(b'\n');
    Ok(())
}

fn cmd_pkernel(a: &PkernelArgs, cfg: &Config, output: Option<&Path>, out: &mut Vec<u8>) -> Result<()> {
    let grid: usize = cfg.pick(a.grid, "grid", 1 << 16)?;
    let r: i64 = cfg.pick(a.radius, "radius", 10)?;
    let fr: usize = cfg.pick(a.factor_radius, "factor_radius", 500)?;
    if !grid.is_power_of_two() || grid < 1024 {
        return Err(Error::Usage(format!("--grid must be a power of two ≥ 1024, got {grid}")));
    }
    let p = pkernel_coefficients(grid)?;
    let f = convolution_factorization_check(fr, grid)?;
    let coeffs: Vec<_> = (-r..=r).map(|n| json!({ "n": n, "value": p.get(n), "abs_err": p.imag_residue })).collect();
    let job = JobSpec { command: "pkernel".into(), d: Some(1), radius: Some(r), output: output.map(|p| p.display().to_string()), ..Default::default() };
    let rows: Vec<_> = f.rows.iter().map(|(n, v, want)| json!({ "n": n, "value": v, "target": want, "abs_err": (v - want).abs() })).collect();
    write_json(
        out,
        &json!({
            "job": job,
            "grid": grid,
            "sum": p.sum(),
            "min_coeff": p.min(),
            "tail_mass": p.tail_mass,
            "imag_residue": p.imag_residue,
            "coefficients": coeffs,
            "factorization": {
                "radius": fr,
                "max_deviation": f.max_deviation,
                "rows": rows,
            },
        }),
    )
}

fn norms_kernel(name: &str, d: usize, k: usize) -> Result<KernelKind> {
    match name.replace('-', "_").as_str() {
        "prob_hilbert" | "ph" => Ok(KernelKind::ProbHilbert),
        "hilbert_dis" | "hdis" => Ok(KernelKind::HilbertDis),
        "cz" | "prob" | "rot" => {
            if k == 0 || k > d {
                return Err(Error::Usage(format!("--k must lie in 1..={d}")));
            }
            KernelKind::parse(name, k)
        }
        other => Err(Error::Usage(format!("unknown kernel '{other}'"))),
    }
}

fn cmd_norms(a: &NormsArgs, cfg: &Config, output: Option<&Path>, out: &mut Vec<u8>) -> Result<()> {
    let name: String = cfg.pick(a.kernel.clone(), "kernel", "prob-hilbert".into())?;
    let kind = norms_kernel(&name, cfg.pick(a.d, "d", 1)?, cfg.pick(a.k, "k", 1)?)?;
    let d = match kind {
        KernelKind::ProbHilbert | KernelKind::HilbertDis => 1,
        _ => cfg.pick(a.d, "d", 1)?,
    };
    if d > 2 {
        return Err(Error::Usage("norms supports d ≤ 2".into()));
    }
    let ps: Vec<f64> = cfg.pick(a.p.clone(), "p", vec![2.0])?;
    for &p in &ps {
        if !(p > 1.0) || !p.is_finite() {
            return Err(Error::Usage(format!("exponents must satisfy 1 < p < ∞, got {p}")));
        }
    }
    let seed: u64 = cfg.pick(a.seed, "seed", 0)?;
    let opts = SearchOptions {
        box_side: cfg.pick(a.box_side, "box", if d == 1 { 256 } else { 16 })?,
        budget: cfg.pick(a.budget, "budget", 400)?,
        seed,
        restarts: 4,
    };
    let n_random: usize = cfg.pick(a.random, "random", 200)?;
    let support: usize = cfg.pick(a.support, "support", 32)?;
    let radius: i64 = cfg.pick(a.radius, "radius", crate::transforms::default_radius(d))?;
    let q = cfg.quad(&a.tol, QuadConfig::relaxed())?;
    let table = KernelTable::from_env(kind.clone(), d, q)?;
    let mut results = Vec::new();
    for &p in &ps {
        let search = norm_lower_bound_search(&table, p, &opts)?;
        let mut ratios = Vec::with_capacity(n_random);
        if d == 1 && n_random > 0 {
            for i in 0..n_random {
                let len = 1 + (i % support.max(1));
                let f = crate::transforms::random_sequence(len, seed.wrapping_add(i as u64 + 1));
                ratios.push(norm_ratio(&f, &table, p, radius)?);
            }
        }
        let max = ratios.iter().cloned().fold(0.0, f64::max);
        let mean = if ratios.is_empty() { 0.0 } else { ratios.iter().sum::<f64>() / ratios.len() as f64 };
        results.push(json!({
            "p": p,
            "cot_bound": cot_bound(p)?,
            "search": {
                "best_ratio": search.best_ratio,
                "method": search.method,
                "iterations": search.iterations,
                "box": search.box_side,
            },
            "random": { "count": ratios.len(), "max_ratio": max, "mean_ratio": mean, "radius": radius },
        }));
    }
    let job = JobSpec {
        command: "norms".into(),
        d: Some(d),
        k: Some(kind.axis()),
        radius: Some(radius),
        p: ps,
        rel_tol: Some(q.rel_tol),
        abs_tol: Some(q.abs_tol),
        output: output.map(|p| p.display().to_string()),
        seed: Some(seed),
    };
    write_json(out, &json!({ "job": job, "kernel": kind.to_string(), "results": results }))
}

fn cmd_mc(a: &McArgs, cfg: &Config, output: Option<&Path>, out: &mut Vec<u8>) -> Result<()> {
    let def = SdeConfig::default();
    let d: usize = cfg.pick(a.d, "d", 1)?;
    if !(1..=2).contains(&d) {
        return Err(Error::Usage(format!("--d must be 1 or 2, got {d}")));
    }
    let sde = SdeConfig {
        dt_base: cfg.pick(a.dt, "dt", def.dt_base)?,
        y_floor: cfg.pick(a.y_floor, "y_floor", def.y_floor)?,
        w_start: cfg.pick(a.w, "w", def.w_start)?,
        boundary_factor: cfg.pick(a.boundary_factor, "boundary_factor", def.boundary_factor)?,
        paths: cfg.pick(a.paths, "paths", def.paths)?,
        seed: cfg.pick(a.seed, "seed", def.seed)?,
        max_steps: cfg.pick(a.max_steps, "max_steps", def.max_steps)?,
    };
    sde.validate().map_err(|e| Error::Usage(e.to_string()))?;
    let dist = simulate_exit(&sde, d)?;
    let counts: Vec<_> = dist
        .counts
        .iter()
        .map(|(n, &c)| {
            let p = exit_probability(n, sde.w_start);
            let se = (p * (1.0 - p) / sde.paths as f64).sqrt();
            json!({ "n": n.coords(), "count": c, "frequency": c as f64 / sde.paths as f64, "expected": p, "abs_err": se })
        })
        .collect();
    let chi = if d == 1 { Some(exit_chi_square(&dist, 20.0)?) } else { None };
    let matrix: Option<String> = match &a.matrix {
        Some(m) => Some(m.clone()),
        None => cfg.get("matrix")?,
    };
    let projection = match matrix {
        None => None,
        Some(m) => {
            let am = match m.as_str() {
                "h" | "H" => hmatrix(1, d)?,
                "identity" | "id" => ConstantMatrix::identity(d + 1),
                "zero" => ConstantMatrix::zero(d + 1),
                other => return Err(Error::Usage(format!("--matrix must be h, identity or zero, got '{other}'"))),
            };
            let nv: Vec<i64> = cfg.pick(a.n.clone(), "n", LatticePoint::unit(1, d).0)?;
            if nv.len() != d {
                return Err(Error::Usage(format!("--n needs {d} coordinates")));
            }
            let n = LatticePoint::new(nv);
            let f = Sequence::delta(LatticePoint::zero(d));
            let est = estimate_projection(&f, &am, &sde, &n)?;
            let quad = if a.quad || cfg.get("quad")?.unwrap_or(false) {
                let q = finite_w_kernel(&n, &LatticePoint::zero(d), &am, sde.w_start, d, &QuadConfig::new(1e-6, 1e-9, 500_000))?;
                Some(json!({ "value": q.value, "abs_err": q.abs_error }))
            } else {
                None
            };
            Some(json!({ "matrix": m, "estimate": est, "quadrature": quad }))
        }
    };
    let job = JobSpec {
        command: "mc".into(),
        d: Some(d),
        output: output.map(|p| p.display().to_string()),
        seed: Some(sde.seed),
        ..Default::default()
    };
    write_json(
        out,
        &json!({
            "job": job,
            "config": sde,
            "exited": dist.exited(),
            "capped": dist.capped,
            "total_steps": dist.total_steps,
            "counts": counts,
            "chi_square": chi,
            "projection": projection,
        }),
    )
}
