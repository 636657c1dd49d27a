//! Minimal CSV writer for the toolkit's datasets.
//!
//! Output is deterministic and diff-friendly: LF line endings, no trailing
//! separators, numbers rendered with Rust's shortest round-trip `Display`
//! so every value re-parses to exactly the bits that were computed. Fields
//! are quoted only when the RFC requires it.

use std::io::{self, Write};

use bfpower_core::dataset::{Dataset, Value};
use bfpower_core::scalar::Scalar;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CsvError {
    #[error("duplicate column name `{0}`")]
    DuplicateColumn(String),
    #[error("empty column name")]
    EmptyColumnName,
    #[error("write failed: {0}")]
    Io(#[from] io::Error),
}

fn write_field(out: &mut dyn Write, field: &str) -> io::Result<()> {
    if field.contains([',', '"', '\n', '\r']) {
        out.write_all(b"\"")?;
        out.write_all(field.replace('"', "\"\"").as_bytes())?;
        out.write_all(b"\"")
    } else {
        out.write_all(field.as_bytes())
    }
}

/// Writes a dataset as CSV with a header row.
pub fn emit_csv<T: Scalar>(dataset: &Dataset<T>, out: &mut dyn Write) -> Result<(), CsvError> {
    for (index, column) in dataset.columns().iter().enumerate() {
        if column.is_empty() {
            return Err(CsvError::EmptyColumnName);
        }
        if dataset.columns()[..index].contains(column) {
            return Err(CsvError::DuplicateColumn(column.clone()));
        }
    }
    for (index, column) in dataset.columns().iter().enumerate() {
        if index > 0 {
            out.write_all(b",")?;
        }
        write_field(out, column)?;
    }
    out.write_all(b"\n")?;
    for row in dataset.rows() {
        for (index, value) in row.iter().enumerate() {
            if index > 0 {
                out.write_all(b",")?;
            }
            match value {
                Value::Int(i) => write!(out, "{i}")?,
                Value::Num(n) => write!(out, "{n}")?,
                Value::Text(s) => write_field(out, s)?,
                Value::Empty => {}
            }
        }
        out.write_all(b"\n")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(dataset: &Dataset<f64>) -> String {
        let mut buffer = Vec::new();
        emit_csv(dataset, &mut buffer).unwrap();
        String::from_utf8(buffer).unwrap()
    }

    #[test]
    fn plain_values_render_unquoted() {
        let mut ds = Dataset::new(&["name", "count", "level"]);
        ds.push_row(vec![
            Value::Text("DBF".into()),
            Value::Int(16),
            Value::Num(1.529728),
        ]);
        ds.push_row(vec![Value::Text("ABF".into()), Value::Int(-3), Value::Empty]);
        assert_eq!(render(&ds), "name,count,level\nDBF,16,1.529728\nABF,-3,\n");
    }

    #[test]
    fn special_characters_force_quoting() {
        let mut ds = Dataset::new(&["note"]);
        ds.push_row(vec![Value::Text("a,b".into())]);
        ds.push_row(vec![Value::Text("say \"hi\"".into())]);
        ds.push_row(vec![Value::Text("two\nlines".into())]);
        assert_eq!(
            render(&ds),
            "note\n\"a,b\"\n\"say \"\"hi\"\"\"\n\"two\nlines\"\n"
        );
    }

    #[test]
    fn numbers_round_trip_through_their_text() {
        let mut ds = Dataset::new(&["x"]);
        for v in [0.040799999999999996f64, 127506642.20647775, 1e-12] {
            ds.push_row(vec![Value::Num(v)]);
        }
        let text = render(&ds);
        for (line, expected) in text.lines().skip(1).zip([
            0.040799999999999996f64,
            127506642.20647775,
            1e-12,
        ]) {
            assert_eq!(line.parse::<f64>().unwrap(), expected);
        }
    }

    #[test]
    fn bad_headers_are_rejected() {
        let ds: Dataset<f64> = Dataset::new(&["a", "a"]);
        assert!(matches!(
            emit_csv(&ds, &mut Vec::new()),
            Err(CsvError::DuplicateColumn(name)) if name == "a"
        ));
        let ds: Dataset<f64> = Dataset::new(&["a", ""]);
        assert!(matches!(
            emit_csv(&ds, &mut Vec::new()),
            Err(CsvError::EmptyColumnName)
        ));
    }
}
