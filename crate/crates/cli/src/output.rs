use std::io::Write;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// A rendered command result. The JSON form is deterministic for a given command line.
pub struct Report {
    pub pass: bool,
    pub json: serde_json::Value,
    pub text: String,
    pub csv: Option<Table>,
}

impl Report {
    pub fn emit(&self, format: Format) -> Result<(), CliError> {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        let io = |e: std::io::Error| CliError::Io(e.to_string());
        match format {
            Format::Json => {
                let s = serde_json::to_string_pretty(&self.json)
                    .map_err(|e| CliError::Io(e.to_string()))?;
                writeln!(out, "{s}").map_err(io)?;
            }
            Format::Text => write!(out, "{}", self.text).map_err(io)?,
            Format::Csv => {
                let table = self.csv.as_ref().ok_or_else(|| {
                    weylspin::Error::Config("this command has no CSV form; use json or text".into())
                })?;
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&table.header)
                    .map_err(|e| CliError::Io(e.to_string()))?;
                for row in &table.rows {
                    w.write_record(row)
                        .map_err(|e| CliError::Io(e.to_string()))?;
                }
                w.flush().map_err(io)?;
            }
        }
        Ok(())
    }
}
