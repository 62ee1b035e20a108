//! Byte-deterministic point encodings: JSON, CSV and an aligned text table.

use crate::error::{Error, Result};
use crate::model::{IntegralPoint, PointSet};

/// Output format selector shared by the CLI commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Encodes a point set. JSON is `[{"x":..,"y":..}, ...]`, CSV carries an
/// `x,y` header, the table right-aligns both columns. Canonical point order
/// in all three; identical input gives identical bytes.
pub fn encode_points(ps: &PointSet, format: Format) -> Vec<u8> {
    match format {
        Format::Json => serde_json::to_vec(ps.points()).expect("integral points always serialize"),
        Format::Csv => {
            let mut out = String::from("x,y\n");
            for p in ps {
                out.push_str(&format!("{},{}\n", p.x, p.y));
            }
            out.into_bytes()
        }
        Format::Table => {
            let xs: Vec<String> = ps.iter().map(|p| p.x.to_string()).collect();
            let ys: Vec<String> = ps.iter().map(|p| p.y.to_string()).collect();
            let wx = xs.iter().map(String::len).max().unwrap_or(0).max(1);
            let wy = ys.iter().map(String::len).max().unwrap_or(0).max(1);
            let mut out = format!("{:>wx$}  {:>wy$}\n", "x", "y");
            for (x, y) in xs.iter().zip(&ys) {
                out.push_str(&format!("{x:>wx$}  {y:>wy$}\n"));
            }
            out.into_bytes()
        }
    }
}

/// Inverse of the JSON encoding.
pub fn decode_points_json(bytes: &[u8]) -> Result<PointSet> {
    let points: Vec<IntegralPoint> = serde_json::from_slice(bytes)
        .map_err(|e| Error::parse(format!("invalid point JSON: {e}")))?;
    Ok(PointSet::from_points(points))
}
