//! Short-vector enumeration and the on-disk shell cache.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use num_traits::One;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::{format_vector, norm, sort_vectors, Lattice, LatticeError, Result, Vector};
use crate::numerics::{int, parse_rational, Rational};

pub const CACHE_ENV: &str = "GRIESS_LAB_CACHE";
const SHELL_MAGIC: &str = "griess-lab-shell";

#[derive(Debug, Clone, PartialEq)]
pub struct Shell {
    pub label: String,
    pub norm: i64,
    /// Sorted lexicographically in ambient coordinates.
    pub vectors: Vec<Vector>,
}

impl Shell {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{SHELL_MAGIC} v1 {} {} {}\n", self.label, self.norm, self.vectors.len());
        for v in &self.vectors {
            out.push_str(&format_vector(v));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str, path: &str) -> Result<Self> {
        let bad = |reason: &str| LatticeError::CacheFormat { path: path.to_string(), reason: reason.to_string() };
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().ok_or_else(|| bad("empty file"))?.split_whitespace().collect();
        if header.len() != 5 || header[0] != SHELL_MAGIC || header[1] != "v1" {
            return Err(bad("bad header"));
        }
        let norm: i64 = header[3].parse().map_err(|_| bad("bad norm"))?;
        let count: usize = header[4].parse().map_err(|_| bad("bad count"))?;
        let vectors = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().map(parse_rational).collect::<std::result::Result<Vector, _>>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("bad vector entry"))?;
        if vectors.len() != count {
            return Err(bad("count mismatch"));
        }
        Ok(Shell { label: header[2].to_string(), norm, vectors })
    }
}

/// Exact Fincke–Pohst data: norm(x) = Σᵢ qᵢᵢ (xᵢ + Σ_{j>i} qᵢⱼ xⱼ)².
fn quadratic_completion(l: &Lattice) -> Vec<Vec<Rational>> {
    let n = l.rank();
    let mut q: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| l.gram()[(i, j)].clone()).collect()).collect();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..n {
            for m in k..n {
                let t = &q[k][i] * &q[i][m];
                q[k][m] -= t;
            }
        }
    }
    q
}

struct Search<'a> {
    n: usize,
    diag: Vec<f64>,
    upper: Vec<Vec<f64>>,
    gram: &'a [Vec<i64>],
    target: i64,
}

impl Search<'_> {
    // Bounds are carried in f64 and widened; membership is decided exactly
    // on the integer Gram form, so the float only has to be conservative.
    fn range(&self, i: usize, x: &[i64], budget: f64) -> Option<(i64, i64)> {
        let centre: f64 = -(i + 1..self.n).map(|j| self.upper[i][j] * x[j] as f64).sum::<f64>();
        let radius = (budget.max(0.0) / self.diag[i]).sqrt() + 1e-6;
        let lo = (centre - radius).ceil() as i64;
        let hi = (centre + radius).floor() as i64;
        (lo <= hi).then_some((lo, hi))
    }

    fn spent(&self, i: usize, x: &[i64]) -> f64 {
        let t: f64 = x[i] as f64 + (i + 1..self.n).map(|j| self.upper[i][j] * x[j] as f64).sum::<f64>();
        self.diag[i] * t * t
    }

    fn exact_norm(&self, x: &[i64]) -> i64 {
        let mut s = 0i64;
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            let row: i64 = (0..self.n).map(|j| self.gram[i][j] * x[j]).sum();
            s += x[i] * row;
        }
        s
    }

    fn recurse(&self, i: usize, x: &mut Vec<i64>, budget: f64, out: &mut Vec<Vec<i64>>) {
        let Some((lo, hi)) = self.range(i, x, budget) else { return };
        for v in lo..=hi {
            x[i] = v;
            let rest = budget - self.spent(i, x);
            if i == 0 {
                if self.exact_norm(x) == self.target {
                    out.push(x.clone());
                }
            } else {
                self.recurse(i - 1, x, rest, out);
            }
        }
        x[i] = 0;
    }
}

/// All lattice vectors of norm `m`, in integer coordinates w.r.t. the basis.
pub fn enumerate_coordinates(l: &Lattice, m: &Rational) -> Vec<Vec<i64>> {
    let n = l.rank();
    let (gram, den) = l.scaled_int_gram();
    let scaled = m * int(den);
    if !scaled.denom().is_one() || scaled < int(0) {
        return Vec::new();
    }
    let target: i64 = scaled.to_integer().try_into().expect("norm target fits in i64");
    if n == 0 {
        return if target == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let q = quadratic_completion(l);
    let f = |r: &Rational| -> f64 { num_traits::ToPrimitive::to_f64(r).expect("finite") };
    let search = Search {
        n,
        diag: (0..n).map(|i| f(&q[i][i])).collect(),
        upper: (0..n).map(|i| (0..n).map(|j| if j > i { f(&q[i][j]) } else { 0.0 }).collect()).collect(),
        gram: &gram,
        target,
    };
    let budget = f(m) + 1e-9;
    let top = n - 1;
    let Some((lo, hi)) = search.range(top, &vec![0; n], budget) else { return Vec::new() };
    // split the outermost coordinate across workers; collect keeps order
    (lo..=hi)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut x = vec![0i64; n];
            x[top] = v;
            let mut out = Vec::new();
            let rest = budget - search.spent(top, &x);
            if top == 0 {
                if search.exact_norm(&x) == target {
                    out.push(x.clone());
                }
            } else {
                search.recurse(top - 1, &mut x, rest, &mut out);
            }
            out
        })
        .collect()
}

/// Shell of norm `m` in ambient coordinates, sorted.
pub fn enumerate_shell(l: &Lattice, m: i64) -> Shell {
    let mut vectors: Vec<Vector> = enumerate_coordinates(l, &int(m)).iter().map(|c| l.combine_int(c)).collect();
    sort_vectors(&mut vectors);
    Shell { label: l.label().to_string(), norm: m, vectors }
}

fn fingerprint(l: &Lattice) -> String {
    let mut h = Sha256::new();
    for r in l.basis_vectors() {
        h.update(format_vector(&r).as_bytes());
        h.update(b"\n");
    }
    h.finalize()[..6].iter().map(|b| format!("{b:02x}")).collect()
}

fn file_safe(label: &str) -> String {
    label.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect()
}

/// Memory plus optional disk cache for shells and coset systems.
///
/// Entries are keyed by label, norm and a fingerprint of the basis, so two
/// lattices that share a label never collide on disk.
#[derive(Debug, Default)]
pub struct ShellStore {
    dir: Option<PathBuf>,
    memory: Mutex<HashMap<(String, String, i64), Arc<Shell>>>,
}

impl ShellStore {
    pub fn in_memory() -> Self {
        Self::default()
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        ShellStore { dir: Some(dir.into()), memory: Mutex::default() }
    }

    /// Uses `GRIESS_LAB_CACHE` when set, memory only otherwise.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Self::with_dir(PathBuf::from(d)),
            _ => Self::in_memory(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn shell_path(&self, l: &Lattice, m: i64) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.{}.{}.shell", file_safe(l.label()), m, fingerprint(l))))
    }

    pub fn shell(&self, l: &Lattice, m: i64) -> Result<Arc<Shell>> {
        let key = (l.label().to_string(), fingerprint(l), m);
        if let Some(s) = self.memory.lock().expect("cache lock").get(&key) {
            return Ok(s.clone());
        }
        let path = self.shell_path(l, m);
        let loaded = match &path {
            Some(p) if p.exists() => Some(self.load_checked(p, l, m)?),
            _ => None,
        };
        let shell = match loaded {
            Some(s) => s,
            None => {
                let s = enumerate_shell(l, m);
                if let Some(p) = &path {
                    write_atomic(p, &s.to_text())?;
                }
                s
            }
        };
        let shell = Arc::new(shell);
        self.memory.lock().expect("cache lock").insert(key, shell.clone());
        Ok(shell)
    }

    fn load_checked(&self, p: &Path, l: &Lattice, m: i64) -> Result<Shell> {
        let name = p.display().to_string();
        let s = Shell::from_text(&fs::read_to_string(p)?, &name)?;
        let bad = |reason: &str| LatticeError::CacheFormat { path: name.clone(), reason: reason.to_string() };
        if s.norm != m || s.label != l.label() {
            return Err(bad("header does not match request"));
        }
        let target = int(m);
        if s.vectors.iter().any(|v| v.len() != l.ambient_dim() || norm(v) != target || !l.contains(v)) {
            return Err(bad("vector of wrong norm or outside the lattice"));
        }
        Ok(s)
    }

    /// Stores an arbitrary text artifact (coset tables) next to the shells.
    pub fn put_artifact(&self, name: &str, text: &str) -> Result<()> {
        if let Some(d) = &self.dir {
            write_atomic(&d.join(format!("{}.cosets", file_safe(name))), text)?;
        }
        Ok(())
    }

    pub fn get_artifact(&self, name: &str) -> Result<Option<String>> {
        match &self.dir {
            Some(d) => {
                let p = d.join(format!("{}.cosets", file_safe(name)));
                if p.exists() {
                    Ok(Some(fs::read_to_string(p)?))
                } else {
                    Ok(None)
                }
            }
            None => Ok(None),
        }
    }

    /// `(file name, header line)` for every cache file, sorted by name.
    pub fn status(&self) -> Result<Vec<(String, String)>> {
        let Some(d) = &self.dir else { return Ok(Vec::new()) };
        if !d.exists() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for entry in fs::read_dir(d)? {
            let entry = entry?;
            let name = entry.file_name().to_string_lossy().into_owned();
            if !(name.ends_with(".shell") || name.ends_with(".cosets")) {
                continue;
            }
            let text = fs::read_to_string(entry.path())?;
            out.push((name, text.lines().next().unwrap_or("").to_string()));
        }
        out.sort();
        Ok(out)
    }

    /// Removes cache files and forgets memory entries. Only files written by
    /// the store are touched.
    pub fn clear(&self) -> Result<usize> {
        self.memory.lock().expect("cache lock").clear();
        let mut removed = 0;
        if let Some(d) = &self.dir {
            if d.exists() {
                for entry in fs::read_dir(d)? {
                    let p = entry?.path();
                    let ext = p.extension().and_then(|e| e.to_str());
                    if matches!(ext, Some("shell") | Some("cosets")) {
                        fs::remove_file(p)?;
                        removed += 1;
                    }
                }
            }
        }
        Ok(removed)
    }
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_shells() {
        let z2 = Lattice::z_n(2).unwrap();
        assert_eq!(enumerate_shell(&z2, 0).len(), 1);
        assert_eq!(enumerate_shell(&z2, 1).len(), 4);
        assert_eq!(enumerate_shell(&z2, 2).len(), 4);
        assert_eq!(enumerate_shell(&z2, 3).len(), 0);
        assert_eq!(enumerate_shell(&z2, 25).len(), 12);
    }

    #[test]
    fn text_roundtrip() {
        let s = enumerate_shell(&Lattice::a_n(2).unwrap(), 2);
        let back = Shell::from_text(&s.to_text(), "mem").unwrap();
        assert_eq!(back, s);
        assert!(Shell::from_text("griess-lab-shell v1 A2 2 7\n1 -1 0\n", "mem").is_err());
    }

    #[test]
    fn disk_cache_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let e8 = Lattice::e8();
        let cold = ShellStore::with_dir(dir.path());
        let a = cold.shell(&e8, 2).unwrap();
        let warm = ShellStore::with_dir(dir.path());
        let b = warm.shell(&e8, 2).unwrap();
        assert_eq!(a, b);
        let status = warm.status().unwrap();
        assert_eq!(status.len(), 1);
        assert!(status[0].1.starts_with("griess-lab-shell v1 E8 2 240"));
        assert_eq!(warm.clear().unwrap(), 1);
        assert!(warm.status().unwrap().is_empty());
    }

    #[test]
    fn corrupted_cache_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let a2 = Lattice::a_n(2).unwrap();
        let store = ShellStore::with_dir(dir.path());
        store.shell(&a2, 2).unwrap();
        let path = store.shell_path(&a2, 2).unwrap();
        fs::write(&path, "griess-lab-shell v1 A2 2 1\n1 1 0\n").unwrap();
        assert!(ShellStore::with_dir(dir.path()).shell(&a2, 2).is_err());
    }
}
