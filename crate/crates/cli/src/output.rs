//! Deterministic JSON emission: floating-point numbers are written with a
//! fixed 17-significant-digit scientific format, and `serde_json`'s default
//! map keeps keys sorted, so identical runs produce byte-identical bytes.

use serde_json::ser::Formatter;
use serde_json::Value;
use std::io::{self, Write};

pub struct FixedFloatFormatter;

impl Formatter for FixedFloatFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        debug_assert!(value.is_finite(), "reports never contain non-finite values");
        write!(writer, "{:.16e}", value)
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{:.16e}", value)
    }
}

/// Serialize a JSON value with the fixed float format, trailing newline
/// included.
pub fn to_bytes(value: &Value) -> Vec<u8> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloatFormatter);
    serde::Serialize::serialize(value, &mut ser).expect("in-memory serialization");
    out.push(b'\n');
    out
}

/// Write the value to a file path, or to stdout when `path` is `None`.
pub fn emit(value: &Value, path: Option<&std::path::Path>) -> io::Result<()> {
    let bytes = to_bytes(value);
    match path {
        Some(p) => std::fs::write(p, bytes),
        None => io::stdout().write_all(&bytes),
    }
}
