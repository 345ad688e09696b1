//! Class atlases on disk: one JSON Lines file per (type, rank, strategy, seed), plus the
//! sample count for sampled atlases.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use weylspin::{Budget, ClassRecord, RootSystemType, Strategy};

use crate::CliError;

pub fn file_name(ty: RootSystemType, strategy: Strategy, seed: u64, budget: &Budget) -> String {
    let family = ty.family().letter();
    let rank = ty.rank();
    match strategy {
        Strategy::Sampling => format!(
            "{family}-{rank}-sampling-{}-seed{seed}.jsonl",
            budget.samples
        ),
        _ => format!("{family}-{rank}-{strategy}-seed{seed}.jsonl"),
    }
}

fn io(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

pub fn load(dir: &Path, name: &str) -> Result<Option<Vec<ClassRecord>>, CliError> {
    let path = dir.join(name);
    let file = match fs::File::open(&path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(io(&path, e)),
    };
    let mut records = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| io(&path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        records.push(serde_json::from_str(&line).map_err(|e| io(&path, e))?);
    }
    Ok(Some(records))
}

/// Writes through a temporary file so readers never see a partial atlas.
pub fn store(dir: &Path, name: &str, records: &[ClassRecord]) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    let path = dir.join(name);
    let tmp = dir.join(format!(".{name}.tmp"));
    {
        let mut f = fs::File::create(&tmp).map_err(|e| io(&tmp, e))?;
        for r in records {
            let line = serde_json::to_string(r).map_err(|e| io(&tmp, e))?;
            writeln!(f, "{line}").map_err(|e| io(&tmp, e))?;
        }
        f.sync_all().map_err(|e| io(&tmp, e))?;
    }
    fs::rename(&tmp, &path).map_err(|e| io(&path, e))?;
    Ok(path)
}
