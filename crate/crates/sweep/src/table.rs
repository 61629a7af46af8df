use std::fmt::Write as _;

/// One output row: numeric columns plus a free-text flag (empty when the
/// point is regular).
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub values: Vec<f64>,
    pub flag: String,
}

impl Row {
    pub fn new(values: Vec<f64>) -> Self {
        Self { values, flag: String::new() }
    }

    pub fn flagged(values: Vec<f64>, flag: impl Into<String>) -> Self {
        Self { values, flag: flag.into() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Values of one column, in row order.
    pub fn series(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.column(name)?;
        Some(self.rows.iter().map(|r| r.values[k]).collect())
    }

    /// CSV text: `#` metadata lines, a header, then one line per row.
    pub fn to_csv(&self, metadata: &[String]) -> String {
        let mut out = String::new();
        for line in metadata {
            let _ = writeln!(out, "# {line}");
        }
        let _ = writeln!(out, "{},flag", self.columns.join(","));
        for row in &self.rows {
            for v in &row.values {
                out.push_str(&format_value(*v));
                out.push(',');
            }
            out.push_str(&sanitize_flag(&row.flag));
            out.push('\n');
        }
        out
    }
}

/// Twelve significant digits in scientific notation; `nan`, `inf`, `-inf`
/// for non-finite values.
pub fn format_value(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v:.11e}")
    }
}

fn sanitize_flag(flag: &str) -> String {
    flag.chars().map(|c| if matches!(c, ',' | '\n' | '\r' | '"') { ';' } else { c }).collect()
}
