//! CSV and JSON emission. Floats are written as `{:.16e}` (17 significant
//! digits) in both formats so a value round-trips and the two outputs agree
//! character for character.

use std::io::{self, Write};

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Count(usize),
    Text(String),
    Bool(bool),
    Ints(Vec<i64>),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Float(x) => float_text(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Count(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            // ';' keeps the list inside one CSV field.
            Cell::Ints(v) => v.iter().map(i64::to_string).collect::<Vec<_>>().join(";"),
        }
    }
}

pub fn float_text(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Float(x) if x.is_finite() => {
                let raw = RawValue::from_string(float_text(*x)).map_err(serde::ser::Error::custom)?;
                raw.serialize(s)
            }
            // JSON has no inf/nan.
            Cell::Float(_) => s.serialize_none(),
            Cell::Int(i) => s.serialize_i64(*i),
            Cell::Count(n) => s.serialize_u64(*n as u64),
            Cell::Text(t) => s.serialize_str(t),
            Cell::Bool(b) => s.serialize_bool(*b),
            Cell::Ints(v) => {
                let mut seq = s.serialize_seq(Some(v.len()))?;
                for i in v {
                    seq.serialize_element(i)?;
                }
                seq.end()
            }
        }
    }
}

/// One output record: named cells in fixed column order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Record(pub Vec<(&'static str, Cell)>);

impl Record {
    pub fn with(mut self, name: &'static str, cell: Cell) -> Self {
        self.0.push((name, cell));
        self
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

pub fn write_csv(out: &mut dyn Write, rows: &[Record]) -> io::Result<()> {
    if let Some(first) = rows.first() {
        let header: Vec<&str> = first.0.iter().map(|(k, _)| *k).collect();
        writeln!(out, "{}", header.join(","))?;
    }
    for r in rows {
        let line: Vec<String> = r.0.iter().map(|(_, c)| c.csv()).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    Ok(())
}

pub fn write_json<V: Serialize + ?Sized>(out: &mut dyn Write, value: &V) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::other)?;
    writeln!(out)
}
