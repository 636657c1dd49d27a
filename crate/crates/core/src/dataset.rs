//! Minimal in-memory table: ordered columns of typed cells, no I/O.
//!
//! Sweeps and figure generators produce these; serialization (CSV) lives
//! with the command-line crate, which is the artifact's only I/O boundary.

use crate::scalar::Scalar;

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Value<T: Scalar> {
    /// Exact integer (counts, resolutions).
    Int(i64),
    /// Scalar quantity (watts, hertz, dB).
    Num(T),
    /// Free text (labels).
    Text(String),
    /// Deliberately empty cell, e.g. a break-even that does not exist.
    Empty,
}

/// A rectangular dataset: named columns plus rows of [`Value`] cells.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset<T: Scalar> {
    columns: Vec<String>,
    rows: Vec<Vec<Value<T>>>,
}

impl<T: Scalar> Dataset<T> {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|&c| c.to_owned()).collect(),
            rows: Vec::new(),
        }
    }

    /// Appends a row. Panics on arity mismatch — that is a programming error
    /// in the generator, not a data condition.
    pub fn push_row(&mut self, row: Vec<Value<T>>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row arity must match the column count"
        );
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Value<T>>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Index of a named column, if present.
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }
}
