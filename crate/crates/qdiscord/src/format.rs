//! CSV and JSON writers for sweep rows.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(CliError::Invalid(format!(
                "unknown format `{other}` (expected csv or json)"
            ))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Cell {
    Num(f64),
    Bool(bool),
}

/// A row type with a fixed column set. `COLUMNS` is the CSV header and the
/// JSON key order.
pub trait Record: Serialize {
    const COLUMNS: &'static [&'static str];

    fn cells(&self) -> Vec<Cell>;
}

/// C's `%.15g`.
pub fn fmt_g15(v: f64) -> String {
    const PRECISION: i32 = 15;
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return if v.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    // the exponent after rounding to 15 significant digits decides the style
    let sci = format!("{:.*e}", (PRECISION - 1) as usize, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..PRECISION).contains(&exp) {
        let mantissa = trim_fraction(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (PRECISION - 1 - exp) as usize;
        trim_fraction(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Fails on the first NaN or infinite cell.
pub fn check_finite<R: Record>(rows: &[R]) -> Result<(), CliError> {
    for (row, r) in rows.iter().enumerate() {
        for (cell, &column) in r.cells().iter().zip(R::COLUMNS) {
            if let Cell::Num(v) = cell {
                if !v.is_finite() {
                    return Err(CliError::NonFinite { row, column });
                }
            }
        }
    }
    Ok(())
}

pub fn write_csv<R: Record>(out: &mut impl Write, rows: &[R]) -> std::io::Result<()> {
    writeln!(out, "{}", R::COLUMNS.join(","))?;
    let mut line = String::new();
    for r in rows {
        line.clear();
        for (i, cell) in r.cells().into_iter().enumerate() {
            if i > 0 {
                line.push(',');
            }
            match cell {
                Cell::Num(v) => line.push_str(&fmt_g15(v)),
                Cell::Bool(b) => line.push_str(if b { "true" } else { "false" }),
            }
        }
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    Ok(())
}

pub fn write_json<R: Record>(out: &mut impl Write, rows: &[R]) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, rows)?;
    out.write_all(b"\n")
}

/// Serializes `rows` into a buffer in the requested format.
pub fn render<R: Record>(rows: &[R], format: Format) -> Result<Vec<u8>, CliError> {
    check_finite(rows)?;
    let mut buf = Vec::new();
    let written = match format {
        Format::Csv => write_csv(&mut buf, rows),
        Format::Json => write_json(&mut buf, rows),
    };
    written.expect("writing to a Vec cannot fail");
    Ok(buf)
}
