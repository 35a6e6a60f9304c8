//! Numeric CSV reading and writing. Input files are plain numeric tables
//! with an optional single header line (auto-detected); diagnostics name
//! the file and line. Floats are written in Rust's shortest round-trip
//! form, so written files re-parse to bitwise-equal values.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use ndarray::Array2;

/// Parsed numeric table: rows of equal width. A detected header line is
/// skipped.
pub struct NumericTable {
    pub rows: Vec<Vec<f64>>,
}

impl NumericTable {
    pub fn n_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn to_array(&self) -> Result<Array2<f64>> {
        let n = self.rows.len();
        let d = self.n_cols();
        let flat: Vec<f64> = self.rows.iter().flatten().copied().collect();
        Array2::from_shape_vec((n, d), flat).context("table is ragged")
    }
}

pub fn read_numeric_csv(path: &Path, delimiter: char) -> Result<NumericTable> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut saw_header = false;
    let mut width = None;

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(delimiter).map(str::trim).collect();
        let parsed: std::result::Result<Vec<f64>, (usize, &str)> = fields
            .iter()
            .enumerate()
            .map(|(col, tok)| tok.parse::<f64>().map_err(|_| (col + 1, *tok)))
            .collect();
        match parsed {
            Ok(nums) => {
                if nums.iter().any(|v| !v.is_finite()) {
                    bail!(
                        "{}:{}: non-finite entry; NaN and infinity are rejected at ingestion",
                        path.display(),
                        line_no
                    );
                }
                match width {
                    None => width = Some(nums.len()),
                    Some(w) if w != nums.len() => bail!(
                        "{}:{}: row has {} fields, expected {}",
                        path.display(),
                        line_no,
                        nums.len(),
                        w
                    ),
                    _ => {}
                }
                rows.push(nums);
            }
            Err((col, tok)) => {
                // a single leading non-numeric line is a header
                if rows.is_empty() && !saw_header {
                    saw_header = true;
                } else {
                    bail!(
                        "{}:{}: field {} is not a number: '{}'",
                        path.display(),
                        line_no,
                        col,
                        tok
                    );
                }
            }
        }
    }
    if rows.is_empty() {
        bail!("{}: no data rows", path.display());
    }
    Ok(NumericTable { rows })
}

pub fn read_matrix(path: &Path, delimiter: char) -> Result<Array2<f64>> {
    read_numeric_csv(path, delimiter)?.to_array()
}

/// Write a curve as a two-column CSV with a `t,omega` header.
pub fn write_curve_csv(path: &Path, scales: &[f64], omega: &[f64]) -> Result<()> {
    let mut out = String::from("t,omega\n");
    for (t, w) in scales.iter().zip(omega) {
        writeln!(out, "{t},{w}").unwrap();
    }
    fs::write(path, out).with_context(|| format!("writing {}", path.display()))
}

/// Read a curve CSV back into (scales, omega).
pub fn read_curve_csv(path: &Path, delimiter: char) -> Result<(Vec<f64>, Vec<f64>)> {
    let table = read_numeric_csv(path, delimiter)?;
    if table.n_cols() != 2 {
        bail!(
            "{}: expected 2 columns (t, omega), found {}",
            path.display(),
            table.n_cols()
        );
    }
    Ok(table
        .rows
        .iter()
        .map(|row| (row[0], row[1]))
        .unzip())
}

/// Write a headerless numeric matrix CSV.
pub fn write_matrix_csv(path: &Path, m: ndarray::ArrayView2<'_, f64>) -> Result<()> {
    let mut out = String::new();
    for row in m.rows() {
        let mut first = true;
        for v in row {
            if !first {
                out.push(',');
            }
            write!(out, "{v}").unwrap();
            first = false;
        }
        out.push('\n');
    }
    fs::write(path, out).with_context(|| format!("writing {}", path.display()))
}
