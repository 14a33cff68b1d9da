use serde_json::Value;

use crate::{CliError, Format};

/// One command result, renderable in every output format.
pub struct Document {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
}

impl Document {
    pub fn new(json: Value, header: &[&str], rows: Vec<Vec<String>>, text: String) -> Self {
        Self {
            json,
            header: header.iter().map(|h| h.to_string()).collect(),
            rows,
            text,
        }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut out =
                    serde_json::to_string_pretty(&self.json).map_err(CliError::internal)?;
                out.push('\n');
                Ok(out)
            }
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                writer
                    .write_record(&self.header)
                    .map_err(CliError::internal)?;
                for row in &self.rows {
                    writer.write_record(row).map_err(CliError::internal)?;
                }
                let bytes = writer.into_inner().map_err(CliError::internal)?;
                String::from_utf8(bytes).map_err(CliError::internal)
            }
            Format::Text => Ok(self.text.clone()),
        }
    }
}
