//! Artifact writers. Reals are printed with 17 significant digits so CSV
//! output is reproducible bit-for-bit; counts stay plain integers.

use anyhow::{Context, Result};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// 17 significant digits: enough to round-trip an f64 exactly.
pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

pub struct OutDir {
    dir: PathBuf,
}

impl OutDir {
    pub fn create(dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir)
            .with_context(|| format!("creating output directory {}", dir.display()))?;
        Ok(OutDir {
            dir: dir.to_path_buf(),
        })
    }

    pub fn write_json<T: Serialize>(&self, name: &str, value: &T) -> Result<PathBuf> {
        let path = self.dir.join(format!("{name}.json"));
        let text = serde_json::to_string_pretty(value)?;
        std::fs::write(&path, text + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
        Ok(path)
    }

    pub fn write_csv(&self, name: &str, header: &[&str], rows: &[Vec<String>]) -> Result<PathBuf> {
        let path = self.dir.join(format!("{name}.csv"));
        let mut text = String::new();
        writeln!(text, "{}", header.join(",")).unwrap();
        for row in rows {
            debug_assert_eq!(row.len(), header.len());
            writeln!(text, "{}", row.join(",")).unwrap();
        }
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        Ok(path)
    }
}
