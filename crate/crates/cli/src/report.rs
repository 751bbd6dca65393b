//! Deterministic report emission: 9-significant-digit numbers, CSV with
//! LF terminators, or a JSON array of row objects with the same columns.

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Empty,
}

#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

/// Nine significant digits. Plain decimal notation while the decimal
/// exponent sits in [-4, 8]; scientific `d.dddddddde±x` outside. Zero
/// prints as `0.00000000`. The format is documented in the CLI help text
/// and chosen so identical invocations emit identical bytes.
pub fn fmt_sig9(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0.00000000".to_string();
    }
    let exp = decimal_exponent(x);
    if (-4..=8).contains(&exp) {
        format!("{:.*}", (8 - exp).max(0) as usize, x)
    } else {
        format!("{x:.8e}")
    }
}

fn decimal_exponent(x: f64) -> i32 {
    let formatted = format!("{:e}", x.abs());
    formatted
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0)
}

fn csv_cell(cell: &Cell) -> String {
    match cell {
        Cell::Num(x) => fmt_sig9(*x),
        Cell::Text(s) => s.clone(),
        Cell::Empty => String::new(),
    }
}

fn json_cell(cell: &Cell) -> String {
    match cell {
        Cell::Num(x) => {
            if x.is_finite() {
                fmt_sig9(*x)
            } else {
                "null".to_string()
            }
        }
        Cell::Text(s) => format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\"")),
        Cell::Empty => "null".to_string(),
    }
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(csv_cell).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("[\n");
        for (i, row) in self.rows.iter().enumerate() {
            let fields: Vec<String> = self
                .columns
                .iter()
                .zip(row.iter())
                .map(|(name, cell)| format!("\"{name}\":{}", json_cell(cell)))
                .collect();
            out.push('{');
            out.push_str(&fields.join(","));
            out.push('}');
            if i + 1 < self.rows.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("]\n");
        out
    }

    pub fn emit(&self, format: OutputFormat) {
        match format {
            OutputFormat::Csv => print!("{}", self.to_csv()),
            OutputFormat::Json => print!("{}", self.to_json()),
        }
    }
}
