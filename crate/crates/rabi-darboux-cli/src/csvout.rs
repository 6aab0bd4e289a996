//! Deterministic CSV emission: header row, comma separators, `\n` line
//! endings, and every float printed as `{:.16e}` (17 significant digits),
//! so identical runs produce byte-identical files.

use std::io::Write;
use std::path::Path;

use crate::error::CliError;

pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Opens the output target: a freshly created file, or stdout when `None`.
pub fn sink(out: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    match out {
        Some(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(Box::new(std::io::BufWriter::new(file)))
        }
        None => Ok(Box::new(std::io::BufWriter::new(std::io::stdout()))),
    }
}

pub fn write_table<W: Write>(
    writer: &mut W,
    header: &[&str],
    rows: impl Iterator<Item = Vec<f64>>,
) -> Result<(), CliError> {
    write_str_table(writer, header, rows.map(|row| row.iter().map(|&x| format_float(x)).collect()))
}

pub fn write_str_table<W: Write>(
    writer: &mut W,
    header: &[&str],
    rows: impl Iterator<Item = Vec<String>>,
) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    writeln!(writer, "{}", header.join(",")).map_err(io)?;
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        writeln!(writer, "{}", row.join(",")).map_err(io)?;
    }
    writer.flush().map_err(io)
}
