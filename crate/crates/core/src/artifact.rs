//! Counterexample dumps.
//!
//! Verifiers in this crate check structural facts that must hold for every
//! valid input. If such a check ever fails, the offending matroid is written
//! out (in the `matroid v1` format, plus a small info file with the
//! parameters) so the instance is preserved for inspection.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::matroid::Matroid;
use crate::text::render_matroid;

/// Environment variable overriding the dump directory (default: the current
/// working directory).
pub const DUMP_DIR_ENV: &str = "SPIKES_COUNTEREXAMPLE_DIR";

pub fn dump_counterexample_in(
    dir: &Path,
    label: &str,
    m: &Matroid,
    params: &str,
) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let mtx = dir.join(format!("counterexample-{label}.mtx"));
    fs::write(&mtx, render_matroid(m))?;
    let info = dir.join(format!("counterexample-{label}.info"));
    fs::write(&info, format!("check {label}\n{params}\n"))?;
    Ok(mtx)
}

/// Best-effort dump into `SPIKES_COUNTEREXAMPLE_DIR` or the current
/// directory. Returns the path of the matroid file if the write succeeded.
pub fn dump_counterexample(label: &str, m: &Matroid, params: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(DUMP_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("."));
    dump_counterexample_in(&dir, label, m, params).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dump_writes_both_files() {
        let dir = std::env::temp_dir().join(format!(
            "spikes-artifact-test-{}-{:?}",
            std::process::id(),
            std::thread::current().id()
        ));
        let m = Matroid::uniform(1, 2).unwrap();
        let path = dump_counterexample_in(&dir, "unit-test", &m, "s=1 t=1").unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("matroid v1\n"));
        let info = fs::read_to_string(dir.join("counterexample-unit-test.info")).unwrap();
        assert!(info.contains("s=1 t=1"));
        fs::remove_dir_all(&dir).unwrap();
    }
}
