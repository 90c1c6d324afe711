use std::io::Write;

use hypertangent::combinatorics::ScanRow;
use serde::Serialize;
use serde_json::Value;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Envelope for every structured result.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub version: &'static str,
    pub seed: Option<u64>,
}

impl OutputRecord {
    pub fn new(command: &'static str, inputs: Value, result: impl Serialize) -> Self {
        Self {
            command,
            inputs,
            result: serde_json::to_value(result).expect("results serialize"),
            version: VERSION,
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("records serialize");
        s.push('\n');
        s
    }
}

pub const CSV_HEADER: [&str; 12] = [
    "degrees",
    "k",
    "M",
    "|d|",
    "d",
    "δ",
    "case",
    "ratio",
    "deltaOk",
    "sizeOk",
    "numericPass",
    "overallPass",
];

fn opt_bool(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

pub fn write_csv<W: Write>(rows: &[ScanRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        let degrees: Vec<String> = r.vector.degrees.iter().map(u32::to_string).collect();
        w.write_record([
            degrees.join(" "),
            r.vector.k.to_string(),
            r.vector.dimension.to_string(),
            r.vector.size.to_string(),
            r.vector.product.to_string(),
            r.vector.delta.to_string(),
            r.case.to_string(),
            r.ratio.clone().unwrap_or_default(),
            r.delta_ok.to_string(),
            r.size_ok.to_string(),
            opt_bool(r.numeric_pass),
            r.overall_pass.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
