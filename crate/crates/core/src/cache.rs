//! On-disk group cache: one file per catalog group holding the sorted
//! canonical element serializations and derivation words, keyed by a
//! generator fingerprint. A stale fingerprint means "rebuild"; a malformed
//! file is reported as corruption.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group::FinMatGroup;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

pub const CACHE_FORMAT_VERSION: &str = "1";

pub fn group_file(dir: &Path, name: &str) -> PathBuf {
    dir.join(format!("{name}.group"))
}

/// Fingerprint of the construction inputs: format version, domain,
/// dimension, generator names and canonical keys, and the order cap.
pub fn generator_fingerprint<S: Scalar>(
    gens: &[(String, Matrix<S>)],
    max_order: usize,
) -> String {
    let mut h = Sha256::new();
    h.update(CACHE_FORMAT_VERSION.as_bytes());
    h.update(S::DOMAIN.tag().as_bytes());
    h.update(max_order.to_le_bytes());
    for (name, m) in gens {
        h.update(name.as_bytes());
        h.update(m.key().as_bytes());
    }
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn save_group<S: Scalar>(dir: &Path, g: &FinMatGroup<S>, fingerprint: &str) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = group_file(dir, g.name());
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp)?;
    writeln!(f, "hessian-group-cache {CACHE_FORMAT_VERSION}")?;
    writeln!(f, "name {}", g.name())?;
    writeln!(f, "domain {}", S::DOMAIN.tag())?;
    writeln!(f, "dim {}", g.dim())?;
    writeln!(f, "fingerprint {fingerprint}")?;
    writeln!(f, "order {}", g.order())?;
    let names = g.generator_names().join(" ");
    writeln!(f, "gen-names {names}")?;
    let gens: Vec<String> = g.generator_indices().iter().map(|i| i.to_string()).collect();
    writeln!(f, "gen-indices {}", gens.join(" "))?;
    for e in 0..g.order() {
        match g.word(e) {
            None => writeln!(f, "{}|", g.matrix(e).key())?,
            Some((p, gi)) => writeln!(f, "{}|{p},{gi}", g.matrix(e).key())?,
        }
    }
    f.flush()?;
    fs::rename(tmp, path)?;
    Ok(())
}

/// Ok(None): no usable cache (missing file or stale fingerprint).
/// Err: the file exists with a matching header but cannot be decoded.
pub fn load_group<S: Scalar>(
    dir: &Path,
    name: &str,
    fingerprint: &str,
) -> Result<Option<FinMatGroup<S>>> {
    let path = group_file(dir, name);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let mut lines = text.lines();
    let corrupt = |msg: &str| Error::CacheCorrupt(format!("{}: {msg}", path.display()));
    let header = lines.next().ok_or_else(|| corrupt("empty file"))?;
    if header != format!("hessian-group-cache {CACHE_FORMAT_VERSION}") {
        return Ok(None); // old format: rebuild
    }
    let mut field = |key: &str| -> Result<String> {
        let line = lines
            .next()
            .ok_or_else(|| corrupt(&format!("missing `{key}`")))?;
        line.strip_prefix(key)
            .and_then(|s| s.strip_prefix(' '))
            .map(str::to_string)
            .ok_or_else(|| corrupt(&format!("expected `{key}`, found `{line}`")))
    };
    let file_name = field("name")?;
    let domain = field("domain")?;
    let dim: usize = field("dim")?
        .parse()
        .map_err(|_| corrupt("bad dimension"))?;
    let file_fp = field("fingerprint")?;
    if file_name != name || domain != S::DOMAIN.tag() {
        return Err(corrupt("header does not describe this group"));
    }
    if file_fp != fingerprint {
        return Ok(None); // stale: generators changed
    }
    let order: usize = field("order")?.parse().map_err(|_| corrupt("bad order"))?;
    let gen_names: Vec<String> = field("gen-names")?
        .split_whitespace()
        .map(str::to_string)
        .collect();
    let gen_indices: Vec<usize> = field("gen-indices")?
        .split_whitespace()
        .map(|s| s.parse().map_err(|_| corrupt("bad generator index")))
        .collect::<Result<_>>()?;
    let mut elements = Vec::with_capacity(order);
    let mut words = Vec::with_capacity(order);
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let (key, word) = line
            .split_once('|')
            .ok_or_else(|| corrupt("missing word separator"))?;
        let m = Matrix::<S>::from_key(key).map_err(|e| corrupt(&format!("{e}")))?;
        elements.push(m);
        if word.is_empty() {
            words.push(None);
        } else {
            let (p, gi) = word
                .split_once(',')
                .ok_or_else(|| corrupt("malformed word"))?;
            let p: usize = p.parse().map_err(|_| corrupt("bad parent index"))?;
            let gi: usize = gi.parse().map_err(|_| corrupt("bad generator slot"))?;
            words.push(Some((p, gi)));
        }
    }
    if elements.len() != order {
        return Err(corrupt("element count does not match header"));
    }
    if !elements[0].is_identity() {
        return Err(corrupt("element 0 is not the identity"));
    }
    let g = FinMatGroup::from_parts(
        name.to_string(),
        dim,
        elements,
        words,
        gen_names,
        gen_indices,
    );
    Ok(Some(g))
}

#[derive(Debug, Clone)]
pub struct CacheStatus {
    pub dir: PathBuf,
    pub entries: Vec<(String, u64)>,
}

pub fn cache_status(dir: &Path) -> Result<CacheStatus> {
    let mut entries = Vec::new();
    if dir.exists() {
        for entry in fs::read_dir(dir)? {
            let entry = entry?;
            let path = entry.path();
            if path.extension().map(|e| e == "group").unwrap_or(false) {
                let name = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().to_string())
                    .unwrap_or_default();
                entries.push((name, entry.metadata()?.len()));
            }
        }
    }
    entries.sort();
    Ok(CacheStatus {
        dir: dir.to_path_buf(),
        entries,
    })
}

pub fn cache_clear(dir: &Path) -> Result<usize> {
    let status = cache_status(dir)?;
    for (name, _) in &status.entries {
        fs::remove_file(group_file(dir, name))?;
    }
    Ok(status.entries.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::group::AbstractGroup;
    use crate::scalar::CycNum;

    #[test]
    fn round_trip_preserves_everything() {
        let dir = tempfile::tempdir().unwrap();
        let cat = catalog();
        let spec = cat.group_spec("btg").unwrap();
        let gens = cat.cyc_generators(spec).unwrap();
        let fp = generator_fingerprint(&gens, 100);
        let g = FinMatGroup::closure("btg", gens, 100).unwrap();
        save_group(dir.path(), &g, &fp).unwrap();
        let loaded: FinMatGroup<CycNum> = load_group(dir.path(), "btg", &fp).unwrap().unwrap();
        assert_eq!(loaded.order(), g.order());
        assert_eq!(loaded.elements(), g.elements());
        assert_eq!(loaded.generator_indices(), g.generator_indices());
        for e in 0..g.order() {
            assert_eq!(loaded.word(e), g.word(e));
        }
        // loaded group multiplies identically
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(loaded.mul(a, b), g.mul(a, b));
            }
        }
    }

    #[test]
    fn stale_fingerprint_misses() {
        let dir = tempfile::tempdir().unwrap();
        let cat = catalog();
        let spec = cat.group_spec("q8").unwrap();
        let gens = cat.cyc_generators(spec).unwrap();
        let fp = generator_fingerprint(&gens, 100);
        let g = FinMatGroup::closure("q8", gens, 100).unwrap();
        save_group(dir.path(), &g, &fp).unwrap();
        let miss: Option<FinMatGroup<CycNum>> =
            load_group(dir.path(), "q8", "0000").unwrap();
        assert!(miss.is_none());
    }

    #[test]
    fn corruption_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let cat = catalog();
        let spec = cat.group_spec("q8").unwrap();
        let gens = cat.cyc_generators(spec).unwrap();
        let fp = generator_fingerprint(&gens, 100);
        let g = FinMatGroup::closure("q8", gens, 100).unwrap();
        save_group(dir.path(), &g, &fp).unwrap();
        let path = group_file(dir.path(), "q8");
        let mut text = std::fs::read_to_string(&path).unwrap();
        text.push_str("not a matrix line\n");
        std::fs::write(&path, text).unwrap();
        let res: Result<Option<FinMatGroup<CycNum>>> = load_group(dir.path(), "q8", &fp);
        assert!(matches!(res, Err(Error::CacheCorrupt(_))));
    }
}
