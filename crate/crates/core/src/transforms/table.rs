use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use rayon::prelude::*;

use crate::kernels::KernelKind;
use crate::lattice::LatticePoint;
use crate::numerics::{QuadConfig, QuadResult};
use crate::{Error, Result};

/// Environment variable naming the directory for persisted kernel tables.
pub const CACHE_ENV: &str = "DISCT_CACHE";

/// Lazily filled table of K(n) for one kernel family and dimension.
///
/// Only one representative of each symmetry class is computed and stored. When a
/// cache directory is set, new entries are written back after every fill.
#[derive(Debug)]
pub struct KernelTable {
    kind: KernelKind,
    d: usize,
    cfg: QuadConfig,
    values: RwLock<BTreeMap<LatticePoint, QuadResult>>,
    path: Option<PathBuf>,
    save_lock: Mutex<()>,
}

impl KernelTable {
    /// In-memory table.
    pub fn new(kind: KernelKind, d: usize, cfg: QuadConfig) -> Result<Self> {
        if d == 0 || d > crate::poisson::MAX_D {
            return Err(Error::Domain(format!("dimension {d} out of range")));
        }
        if matches!(kind, KernelKind::HilbertDis | KernelKind::ProbHilbert) && d != 1 {
            return Err(Error::Domain(format!("{kind} is only defined for d = 1")));
        }
        if let KernelKind::CzRiesz(k) | KernelKind::ProbRiesz(k) | KernelKind::Rotation(k) = kind {
            if k == 0 || k > d {
                return Err(Error::Domain(format!("axis {k} out of range 1..={d}")));
            }
        }
        if let KernelKind::FiniteW(a, _) = &kind {
            if a.d() != d {
                return Err(Error::Domain(format!("matrix does not match d = {d}")));
            }
        }
        Ok(KernelTable { kind, d, cfg, values: RwLock::new(BTreeMap::new()), path: None, save_lock: Mutex::new(()) })
    }

    /// Table persisted as CSV inside `dir`. Existing entries are loaded.
    pub fn with_cache_dir(kind: KernelKind, d: usize, cfg: QuadConfig, dir: &Path) -> Result<Self> {
        let mut t = Self::new(kind, d, cfg)?;
        fs::create_dir_all(dir)?;
        let path = dir.join(t.file_name());
        if path.exists() {
            let loaded = read_csv(&path, &t.kind, d)?;
            *t.values.get_mut().expect("fresh lock") = loaded;
        }
        t.path = Some(path);
        Ok(t)
    }

    /// Persisted under `$DISCT_CACHE` when it is set, in memory otherwise.
    pub fn from_env(kind: KernelKind, d: usize, cfg: QuadConfig) -> Result<Self> {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => Self::with_cache_dir(kind, d, cfg, Path::new(&dir)),
            _ => Self::new(kind, d, cfg),
        }
    }

    pub fn kind(&self) -> &KernelKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn config(&self) -> &QuadConfig {
        &self.cfg
    }

    pub fn cache_path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    /// Cache file name; the key covers the family, axis, dimension and tolerance.
    pub fn file_name(&self) -> String {
        let tol = format!("r{:e}_a{:e}", self.cfg.rel_tol, self.cfg.abs_tol);
        match &self.kind {
            KernelKind::FiniteW(a, w) => {
                let ent: Vec<String> = a.entries().iter().map(|v| format!("{v}")).collect();
                format!("finite_w_d{}_w{}_A{}_{}.csv", self.d, w, ent.join("_"), tol)
            }
            k => format!("{}_k{}_d{}_{}.csv", k.tag(), k.axis(), self.d, tol),
        }
    }

    /// Number of stored representatives.
    pub fn len(&self) -> usize {
        self.values.read().expect("table lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Computes every missing value among `pts` (in parallel) and persists them.
    pub fn ensure<'a>(&self, pts: impl IntoIterator<Item = &'a LatticePoint>) -> Result<()> {
        match self.ensure_partial(pts)?.into_iter().next() {
            None => Ok(()),
            Some((_, e)) => Err(e),
        }
    }

    /// As [`ensure`](Self::ensure), but keeps every value that succeeded and returns
    /// the points whose quadrature failed.
    pub fn ensure_partial<'a>(&self, pts: impl IntoIterator<Item = &'a LatticePoint>) -> Result<Vec<(LatticePoint, Error)>> {
        let mut missing: Vec<LatticePoint> = {
            let map = self.values.read().expect("table lock");
            pts.into_iter()
                .filter_map(|n| canonical(&self.kind, n))
                .map(|(c, _)| c)
                .filter(|c| !map.contains_key(c))
                .collect()
        };
        missing.sort();
        missing.dedup();
        if missing.is_empty() {
            return Ok(vec![]);
        }
        for n in &missing {
            if n.dim() != self.d {
                return Err(Error::Domain(format!("point {n} is not in Z^{}", self.d)));
            }
        }
        let fresh: Vec<(LatticePoint, Result<QuadResult>)> =
            missing.into_par_iter().map(|n| {
                let v = self.kind.eval(&n, &self.cfg);
                (n, v)
            }).collect();
        let mut failed = Vec::new();
        {
            let mut map = self.values.write().expect("table lock");
            for (n, v) in fresh {
                match v {
                    Ok(v) => {
                        map.insert(n, v);
                    }
                    Err(e) => failed.push((n, e)),
                }
            }
        }
        self.save()?;
        Ok(failed)
    }

    /// Fills the cube |n|∞ ≤ r.
    pub fn ensure_cube(&self, r: i64) -> Result<()> {
        let pts = LatticePoint::cube(self.d, r);
        self.ensure(pts.iter())
    }

    /// K(n) if its representative is stored.
    pub fn get(&self, n: &LatticePoint) -> Option<QuadResult> {
        match canonical(&self.kind, n) {
            None => Some(QuadResult::new(0.0, 0.0, 1)),
            Some((c, sign)) => self.values.read().expect("table lock").get(&c).map(|v| v.scale(sign)),
        }
    }

    /// K(n), computing it if needed.
    pub fn value(&self, n: &LatticePoint) -> Result<QuadResult> {
        if let Some(v) = self.get(n) {
            return Ok(v);
        }
        self.ensure([n])?;
        Ok(self.get(n).expect("just computed"))
    }

    /// max |K(n)|·|n|^d over the stored points, the constant in |K(n)| ≤ C/|n|^d.
    pub fn decay_constant(&self) -> f64 {
        let d = self.d as i32;
        self.values
            .read()
            .expect("table lock")
            .iter()
            .filter(|(n, _)| !n.is_zero())
            .map(|(n, v)| v.value.abs() * n.norm().powi(d))
            .fold(0.0, f64::max)
    }

    /// All values on the cube |n|∞ ≤ r in lexicographic order.
    pub fn cube_values(&self, r: i64) -> Result<Vec<(LatticePoint, QuadResult)>> {
        self.ensure_cube(r)?;
        Ok(LatticePoint::cube(self.d, r)
            .into_iter()
            .map(|n| {
                let v = self.get(&n).expect("cube filled");
                (n, v)
            })
            .collect())
    }

    /// Writes the stored representatives to the cache file, if any.
    pub fn save(&self) -> Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        let _guard = self.save_lock.lock().expect("save lock");
        let tmp = path.with_extension("csv.tmp");
        {
            let map = self.values.read().expect("table lock");
            let mut w = csv::Writer::from_path(&tmp)?;
            let mut header = vec!["d".to_string(), "kind".into(), "k".into()];
            header.extend((1..=self.d).map(|i| format!("n{i}")));
            header.extend(["value".into(), "abs_err".into()]);
            w.write_record(&header)?;
            for (n, v) in map.iter() {
                let mut rec = vec![self.d.to_string(), self.kind.tag().to_string(), self.kind.axis().to_string()];
                rec.extend(n.coords().iter().map(|c| c.to_string()));
                rec.push(format!("{:e}", v.value));
                rec.push(format!("{:e}", v.abs_error));
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

fn read_csv(path: &Path, kind: &KernelKind, d: usize) -> Result<BTreeMap<LatticePoint, QuadResult>> {
    let mut r = csv::Reader::from_path(path)?;
    let mut out = BTreeMap::new();
    let bad = |msg: String| Error::Domain(format!("cache file {}: {msg}", path.display()));
    for rec in r.records() {
        let rec = rec?;
        if rec.len() != d + 5 {
            return Err(bad(format!("expected {} columns, found {}", d + 5, rec.len())));
        }
        let num = |i: usize| -> Result<f64> { rec[i].parse::<f64>().map_err(|e| bad(format!("{e}: '{}'", &rec[i]))) };
        if rec[1] != *kind.tag() || rec[0] != d.to_string() {
            return Err(bad(format!("row for {} d={} in a {} d={d} table", &rec[1], &rec[0], kind.tag())));
        }
        let n: Vec<i64> = (3..3 + d)
            .map(|i| rec[i].parse::<i64>().map_err(|e| bad(format!("{e}: '{}'", &rec[i]))))
            .collect::<Result<_>>()?;
        out.insert(LatticePoint(n), QuadResult::new(num(3 + d)?, num(4 + d)?, 1));
    }
    Ok(out)
}

/// Representative of the symmetry class of n and the sign relating the two values.
/// None means K(n) = 0 by symmetry.
pub fn canonical(kind: &KernelKind, n: &LatticePoint) -> Option<(LatticePoint, f64)> {
    match kind {
        KernelKind::CzRiesz(k) | KernelKind::ProbRiesz(k) | KernelKind::Rotation(k) => {
            let k = k - 1;
            let c = n.coords();
            if k >= c.len() || c[k] == 0 {
                return if k >= c.len() { Some((n.clone(), 1.0)) } else { None };
            }
            // odd in n_k, even in and permutable among the other coordinates
            let sign = c[k].signum() as f64;
            let mut others: Vec<i64> = c.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, v)| v.abs()).collect();
            others.sort_unstable();
            let mut v = Vec::with_capacity(c.len());
            let mut it = others.into_iter();
            for i in 0..c.len() {
                v.push(if i == k { c[k].abs() } else { it.next().expect("d − 1 others") });
            }
            Some((LatticePoint(v), sign))
        }
        KernelKind::HilbertDis | KernelKind::ProbHilbert => {
            let c = n.coords();
            if c.len() != 1 {
                return Some((n.clone(), 1.0));
            }
            if c[0] == 0 {
                None
            } else {
                Some((LatticePoint(vec![c[0].abs()]), c[0].signum() as f64))
            }
        }
        KernelKind::FiniteW(..) => Some((n.clone(), 1.0)),
    }
}
