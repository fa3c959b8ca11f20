//! Streaming report writer. A report is a sequence of named tables followed
//! by a run manifest.
//!
//! CSV: each table is introduced by a `# table: NAME` line, then a header
//! row and data rows, then a blank line; the manifest closes the report as
//! a single `# manifest: {...}` line. JSON: one object per line, each row
//! tagged with `"table"`, the manifest last with `"table": "manifest"`.
//! Floats are written in shortest round-trip form.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::{Map, Value as Json};
use sha2::{Digest, Sha256};

use crate::cli::Format;

/// One output cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Uint(u64),
    Float(f64),
    Text(String),
    Bool(bool),
    Null,
}

impl Value {
    fn to_field(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Uint(v) => v.to_string(),
            Value::Float(v) => format_float(*v),
            Value::Text(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::Null => String::new(),
        }
    }

    fn to_json(&self) -> Json {
        match self {
            Value::Int(v) => Json::from(*v),
            Value::Uint(v) => Json::from(*v),
            Value::Float(v) => Json::from(*v),
            Value::Text(s) => Json::from(s.as_str()),
            Value::Bool(b) => Json::from(*b),
            Value::Null => Json::Null,
        }
    }
}

/// Shortest round-trip text, switching to exponent form outside
/// `[1e-5, 1e16)` so extreme magnitudes stay short.
pub fn format_float(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 || !a.is_finite() || (1e-5..1e16).contains(&a) {
        v.to_string()
    } else {
        format!("{v:e}")
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Uint(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Uint(v as u64)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_owned())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::Null, Into::into)
    }
}

/// Provenance record written at the end of every report.
#[derive(Debug, Clone, PartialEq)]
pub struct Manifest {
    pub command: String,
    pub parameters: Vec<(String, Value)>,
    /// SHA-256 over the input bytes, for commands that read input.
    pub input_sha256: Option<String>,
}

impl Manifest {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            parameters: Vec::new(),
            input_sha256: None,
        }
    }

    pub fn param(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.parameters.push((name.to_owned(), value.into()));
        self
    }

    pub fn to_json(&self, format: Format) -> Map<String, Json> {
        let mut params = Map::new();
        for (k, v) in &self.parameters {
            params.insert(k.clone(), v.to_json());
        }
        let mut m = Map::new();
        m.insert("tool".into(), Json::from(env!("CARGO_PKG_NAME")));
        m.insert("version".into(), Json::from(env!("CARGO_PKG_VERSION")));
        m.insert("command".into(), Json::from(self.command.as_str()));
        m.insert(
            "format".into(),
            Json::from(match format {
                Format::Csv => "csv",
                Format::Json => "json",
            }),
        );
        m.insert("parameters".into(), Json::Object(params));
        m.insert(
            "input_sha256".into(),
            self.input_sha256.as_deref().map_or(Json::Null, Json::from),
        );
        m
    }
}

/// Incremental SHA-256 over one or more inputs.
#[derive(Debug, Default, Clone)]
pub struct InputDigest(Sha256);

impl InputDigest {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn update(&mut self, bytes: &[u8]) {
        self.0.update(bytes);
    }

    pub fn finish(self) -> String {
        hex::encode(self.0.finalize())
    }
}

/// Writes tables in the chosen format.
pub struct Emitter {
    format: Format,
    out: Box<dyn Write>,
    table: Option<(String, Vec<String>)>,
}

impl Emitter {
    pub fn new(format: Format, out: Box<dyn Write>) -> Self {
        Self {
            format,
            out,
            table: None,
        }
    }

    /// Emitter for `--output PATH`, or buffered standard output.
    pub fn open(format: Format, path: Option<&Path>) -> io::Result<Self> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Self::new(format, out))
    }

    /// Starts a new table.
    pub fn table(&mut self, name: &str, columns: &[&str]) -> io::Result<()> {
        self.close_table()?;
        if self.format == Format::Csv {
            writeln!(self.out, "# table: {name}")?;
            self.write_csv_record(columns.iter().map(|c| (*c).to_owned()))?;
        }
        self.table = Some((
            name.to_owned(),
            columns.iter().map(|c| (*c).to_owned()).collect(),
        ));
        Ok(())
    }

    pub fn row(&mut self, values: &[Value]) -> io::Result<()> {
        let Some((name, columns)) = &self.table else {
            return Err(io::Error::other("row written before any table"));
        };
        if values.len() != columns.len() {
            return Err(io::Error::other(format!(
                "table {name} has {} columns, row has {}",
                columns.len(),
                values.len()
            )));
        }
        match self.format {
            Format::Csv => self.write_csv_record(values.iter().map(Value::to_field)),
            Format::Json => {
                let mut obj = Map::new();
                obj.insert("table".into(), Json::from(name.as_str()));
                for (c, v) in columns.iter().zip(values) {
                    obj.insert(c.clone(), v.to_json());
                }
                serde_json::to_writer(&mut self.out, &obj)?;
                self.out.write_all(b"\n")
            }
        }
    }

    /// Writes the manifest and flushes.
    pub fn finish(mut self, manifest: &Manifest) -> io::Result<()> {
        self.close_table()?;
        let json = manifest.to_json(self.format);
        match self.format {
            Format::Csv => {
                self.out.write_all(b"# manifest: ")?;
                serde_json::to_writer(&mut self.out, &json)?;
                self.out.write_all(b"\n")?;
            }
            Format::Json => {
                let mut obj = Map::new();
                obj.insert("table".into(), Json::from("manifest"));
                obj.extend(json);
                serde_json::to_writer(&mut self.out, &obj)?;
                self.out.write_all(b"\n")?;
            }
        }
        self.out.flush()
    }

    fn close_table(&mut self) -> io::Result<()> {
        if self.table.take().is_some() && self.format == Format::Csv {
            self.out.write_all(b"\n")?;
        }
        Ok(())
    }

    fn write_csv_record<I: IntoIterator<Item = String>>(&mut self, fields: I) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .flexible(true)
            .from_writer(&mut self.out);
        w.write_record(fields)?;
        w.flush()
    }
}
