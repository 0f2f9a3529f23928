//! Element files: one map per line in image-list form, `#` comments.

use std::fs;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};

use crate::algebra::ElementSet;
use crate::error::{Error, Result};
use crate::length::{enumerate_with_workers, SemigroupSpec};
use crate::transform::Transformation;

const SAMPLE: usize = 64;

/// Reads maps of degree `n`, skipping blank lines and `#` comments.
pub fn read_elements<R: Read>(reader: R, n: usize) -> Result<ElementSet> {
    let mut elements = Vec::new();
    for line in BufReader::new(reader).lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        elements.push(Transformation::parse_with_degree(line, n)?);
    }
    ElementSet::new(n, elements)
}

pub fn read_elements_file(path: &Path, n: usize) -> Result<ElementSet> {
    let file = fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    read_elements(file, n)
}

/// Writes `set` one map per line after a `# size N` header.
pub fn write_elements<W: Write>(
    mut writer: W,
    label: Option<&str>,
    set: &ElementSet,
) -> Result<()> {
    if let Some(label) = label {
        writeln!(writer, "# {label}")?;
    }
    writeln!(writer, "# size {}", set.len())?;
    for t in set {
        writeln!(writer, "{t}")?;
    }
    writer.flush()?;
    Ok(())
}

fn header_size(text: &str) -> Option<usize> {
    text.lines()
        .take_while(|l| l.starts_with('#'))
        .find_map(|l| l.strip_prefix("# size ")?.trim().parse().ok())
}

fn load_cached(path: &Path, spec: &SemigroupSpec) -> Option<ElementSet> {
    let text = fs::read_to_string(path).ok()?;
    let size = header_size(&text)?;
    let set = read_elements(text.as_bytes(), spec.n).ok()?;
    if set.len() != size || set.is_empty() {
        return None;
    }
    let stride = set.len().div_ceil(SAMPLE);
    let sampled_ok = set.iter().step_by(stride).all(|t| spec.contains(t))
        && set.as_slice().last().is_some_and(|t| spec.contains(t));
    sampled_ok.then_some(set)
}

/// Path of the cache file for `spec` inside `dir`.
pub fn cache_path(dir: &Path, spec: &SemigroupSpec) -> PathBuf {
    dir.join(spec.cache_file_name())
}

/// Enumerates `spec`, reusing `cache_dir` when given. A cached file is
/// trusted only if its `# size` header matches its contents and a sample
/// of its elements passes the membership test; otherwise it is rebuilt.
pub fn load_or_enumerate(
    spec: &SemigroupSpec,
    cache_dir: Option<&Path>,
    workers: usize,
) -> Result<ElementSet> {
    let Some(dir) = cache_dir else {
        return enumerate_with_workers(spec, workers);
    };
    let path = cache_path(dir, spec);
    if let Some(set) = load_cached(&path, spec) {
        return Ok(set);
    }
    let set = enumerate_with_workers(spec, workers)?;
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension("tmp");
    write_elements(fs::File::create(&tmp)?, Some(&spec.label()), &set)?;
    fs::rename(&tmp, &path)?;
    Ok(set)
}
