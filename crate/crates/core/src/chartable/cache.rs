//! On-disk cache for character tables: one JSON document per `n`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::CharacterTable;
use crate::partitions::{enumerate_partitions, factorial, Partition};

pub const TABLE_FORMAT: &str = "symchar-table-v1";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("corrupt cache file {path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },

    #[error("cache format {found:?} does not match {TABLE_FORMAT:?}")]
    VersionMismatch { found: String },

    #[error("cache file holds the table for n = {found}, expected {expected}")]
    WrongDegree { expected: usize, found: usize },

    #[error("checksum mismatch in {path}")]
    ChecksumMismatch { path: PathBuf },

    #[error("rows {0} and {1} of the cached table are not orthogonal")]
    Orthogonality(usize, usize),
}

#[derive(Serialize, Deserialize)]
struct TableDocument {
    format: String,
    n: usize,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    values: Vec<Vec<String>>,
    checksum: String,
}

pub fn table_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("table-{n}.json"))
}

fn checksum(n: usize, labels: &[String], values: &[Vec<String>]) -> String {
    let mut h = Sha256::new();
    h.update(format!("{TABLE_FORMAT}\n{n}\n"));
    h.update(labels.join(" "));
    for row in values {
        h.update("\n");
        h.update(row.join(" "));
    }
    hex::encode(h.finalize())
}

/// Writes the table atomically (temp file, then rename) and returns its path.
pub fn save_table(table: &CharacterTable, dir: &Path) -> Result<PathBuf, CacheError> {
    fs::create_dir_all(dir)?;
    let labels: Vec<String> = table.labels().iter().map(|p| p.to_string()).collect();
    let values: Vec<Vec<String>> = table
        .rows()
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect())
        .collect();
    let doc = TableDocument {
        format: TABLE_FORMAT.to_string(),
        n: table.n(),
        checksum: checksum(table.n(), &labels, &values),
        row_labels: labels.clone(),
        col_labels: labels,
        values,
    };
    let path = table_path(dir, table.n());
    let tmp = dir.join(format!(".table-{}.json.tmp.{}", table.n(), std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        serde_json::to_writer(&mut f, &doc).map_err(std::io::Error::from)?;
        f.write_all(b"\n")?;
        f.sync_all()?;
    }
    fs::rename(&tmp, &path)?;
    Ok(path)
}

/// Loads and validates a cached table.
///
/// Checks the format tag, `n`, the label lists, the checksum, and the row
/// orthogonality of one pair of rows picked from the checksum bytes.
pub fn load_table(n: usize, dir: &Path) -> Result<CharacterTable, CacheError> {
    let path = table_path(dir, n);
    let raw = fs::read_to_string(&path)?;
    let corrupt = |reason: String| CacheError::Corrupt {
        path: path.clone(),
        reason,
    };
    let value: serde_json::Value =
        serde_json::from_str(&raw).map_err(|e| corrupt(e.to_string()))?;
    match value.get("format").and_then(|f| f.as_str()) {
        Some(TABLE_FORMAT) => {}
        Some(other) => {
            return Err(CacheError::VersionMismatch {
                found: other.to_string(),
            })
        }
        None => return Err(corrupt("missing format tag".into())),
    }
    let doc: TableDocument = serde_json::from_value(value).map_err(|e| corrupt(e.to_string()))?;
    if doc.n != n {
        return Err(CacheError::WrongDegree {
            expected: n,
            found: doc.n,
        });
    }
    let expected: Vec<String> = enumerate_partitions(n).iter().map(|p| p.to_string()).collect();
    if doc.row_labels != expected || doc.col_labels != expected {
        return Err(corrupt("labels are not the partitions of n in canonical order".into()));
    }
    if doc.values.len() != expected.len() || doc.values.iter().any(|r| r.len() != expected.len()) {
        return Err(corrupt("value matrix has the wrong shape".into()));
    }
    let sum = checksum(n, &doc.row_labels, &doc.values);
    if sum != doc.checksum {
        return Err(CacheError::ChecksumMismatch { path });
    }
    let values: Vec<Vec<BigInt>> = doc
        .values
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| s.parse::<BigInt>().map_err(|e| corrupt(format!("{s:?}: {e}"))))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let labels: Vec<Partition> = enumerate_partitions(n);
    let table = CharacterTable::from_parts(n, labels, values);

    let bytes = hex::decode(&sum).expect("hex we just produced");
    let pick = |b: &[u8]| {
        (u64::from_le_bytes(b.try_into().expect("8 bytes")) % table.len() as u64) as usize
    };
    let (a, b) = (pick(&bytes[0..8]), pick(&bytes[8..16]));
    let inner = table.row_inner(a, b, &table.class_sizes());
    let expect = if a == b {
        BigInt::from(factorial(n))
    } else {
        BigInt::zero()
    };
    if inner != expect {
        return Err(CacheError::Orthogonality(a, b));
    }
    Ok(table)
}
