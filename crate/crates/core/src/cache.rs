//! Optional on-disk cache of the Weyl table and the basis B' of f4, in a
//! versioned text format. Files are written once and then only read; a
//! file that disagrees with a fresh computation is reported as stale.

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::exactmath::{IntMatrix, QMatrix, Q};
use crate::f4lie::f4;
use crate::weyl::{generate_weyl, WeylGroup, WEYL_ORDER};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "GRADINGS_CACHE_DIR";

pub const CACHE_VERSION: u32 = 1;

pub const WEYL_FILE: &str = "weyl-v1.txt";

pub const F4_BASIS_FILE: &str = "f4-basis-v1.txt";

const WEYL_HEADER: &str = "albert-f4 weyl";
const F4_HEADER: &str = "albert-f4 f4-basis";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache io: {0}")]
    Io(#[from] std::io::Error),
    #[error("{file}, line {line}: {reason}")]
    Format { file: &'static str, line: usize, reason: String },
    #[error("{0} does not match the computed data")]
    Stale(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Written,
    Verified,
}

/// The directory named by the environment, if set and nonempty.
pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

fn bad(file: &'static str, line: usize, reason: impl Into<String>) -> CacheError {
    CacheError::Format { file, line, reason: reason.into() }
}

fn check_header(file: &'static str, first: Option<&str>, header: &str) -> Result<(), CacheError> {
    let want = format!("{header} v{CACHE_VERSION}");
    match first {
        Some(h) if h == want => Ok(()),
        Some(h) => Err(bad(file, 1, format!("header {h:?}, expected {want:?}"))),
        None => Err(bad(file, 1, "empty file")),
    }
}

/// One line per element, 16 entries in row-major order.
pub fn weyl_text(elements: &[IntMatrix]) -> String {
    let mut out = format!("{WEYL_HEADER} v{CACHE_VERSION}\n{}\n", elements.len());
    for m in elements {
        let e: Vec<String> = m.entries().iter().map(i64::to_string).collect();
        out.push_str(&e.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_weyl(text: &str) -> Result<Vec<IntMatrix>, CacheError> {
    let f = WEYL_FILE;
    let mut lines = text.lines();
    check_header(f, lines.next(), WEYL_HEADER)?;
    let n: usize = lines.next().and_then(|l| l.trim().parse().ok()).ok_or_else(|| bad(f, 2, "missing count"))?;
    let mut out = Vec::with_capacity(n);
    for (k, line) in lines.enumerate() {
        let e: Vec<i64> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|e| bad(f, k + 3, format!("{e}")))?;
        if e.len() != 16 {
            return Err(bad(f, k + 3, format!("{} entries, expected 16", e.len())));
        }
        out.push(IntMatrix::from_rows(&e.chunks(4).map(<[i64]>::to_vec).collect::<Vec<_>>()));
    }
    if out.len() != n {
        return Err(bad(f, 2, format!("count {n}, found {} rows", out.len())));
    }
    Ok(out)
}

/// One line per basis element: sparse entries `row,col,value`.
pub fn f4_basis_text(basis: &[QMatrix]) -> String {
    let mut out = format!("{F4_HEADER} v{CACHE_VERSION}\n{}\n", basis.len());
    for m in basis {
        let mut entries = Vec::new();
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let x = m[(r, c)];
                if !x.is_zero() {
                    entries.push(format!("{r},{c},{x}"));
                }
            }
        }
        out.push_str(&format!("{} {}\n", m.rows(), entries.join(" ")));
    }
    out
}

fn parse_q(s: &str) -> Option<Q> {
    match s.split_once('/') {
        Some((n, d)) => {
            let (n, d): (i64, i64) = (n.parse().ok()?, d.parse().ok()?);
            (d > 0).then(|| Q::new(n, d))
        }
        None => s.parse().ok().map(Q::int),
    }
}

pub fn parse_f4_basis(text: &str) -> Result<Vec<QMatrix>, CacheError> {
    let f = F4_BASIS_FILE;
    let mut lines = text.lines();
    check_header(f, lines.next(), F4_HEADER)?;
    let n: usize = lines.next().and_then(|l| l.trim().parse().ok()).ok_or_else(|| bad(f, 2, "missing count"))?;
    let mut out = Vec::with_capacity(n);
    for (k, line) in lines.enumerate() {
        let mut parts = line.split_whitespace();
        let dim: usize = parts.next().and_then(|d| d.parse().ok()).ok_or_else(|| bad(f, k + 3, "missing size"))?;
        let mut m = QMatrix::zeros(dim, dim);
        for p in parts {
            let mut it = p.splitn(3, ',');
            let (r, c, x) = (it.next(), it.next(), it.next());
            let entry = (|| Some((r?.parse::<usize>().ok()?, c?.parse::<usize>().ok()?, parse_q(x?)?)))();
            match entry {
                Some((r, c, x)) if r < dim && c < dim => m[(r, c)] = x,
                _ => return Err(bad(f, k + 3, format!("bad entry {p:?}"))),
            }
        }
        out.push(m);
    }
    if out.len() != n {
        return Err(bad(f, 2, format!("count {n}, found {} rows", out.len())));
    }
    Ok(out)
}

/// The Weyl group read from the cache directory, if the file is present
/// and describes W exactly.
pub fn cached_weyl(dir: &Path) -> Option<WeylGroup> {
    let text = fs::read_to_string(dir.join(WEYL_FILE)).ok()?;
    WeylGroup::from_elements(parse_weyl(&text).ok()?)
}

fn write_once(path: &Path, text: &str) -> Result<(), CacheError> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Writes missing cache files and checks existing ones against fresh
/// computations.
pub fn sync(dir: &Path) -> Result<Vec<(&'static str, CacheStatus)>, CacheError> {
    fs::create_dir_all(dir)?;
    let mut out = Vec::new();

    let path = dir.join(WEYL_FILE);
    if path.exists() {
        let elements = parse_weyl(&fs::read_to_string(&path)?)?;
        if elements.len() != WEYL_ORDER || WeylGroup::from_elements(elements).is_none() {
            return Err(CacheError::Stale(WEYL_FILE));
        }
        out.push((WEYL_FILE, CacheStatus::Verified));
    } else {
        write_once(&path, &weyl_text(&generate_weyl()))?;
        out.push((WEYL_FILE, CacheStatus::Written));
    }

    let path = dir.join(F4_BASIS_FILE);
    let basis = &f4().lie.basis;
    if path.exists() {
        if parse_f4_basis(&fs::read_to_string(&path)?)? != *basis {
            return Err(CacheError::Stale(F4_BASIS_FILE));
        }
        out.push((F4_BASIS_FILE, CacheStatus::Verified));
    } else {
        write_once(&path, &f4_basis_text(basis))?;
        out.push((F4_BASIS_FILE, CacheStatus::Written));
    }
    Ok(out)
}
