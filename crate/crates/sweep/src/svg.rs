//! Minimal static line plots.

use std::fmt::Write as _;

use crate::table::Table;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 60.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// What to draw: `ys` against `x`, with one polyline per distinct value of
/// the `group_by` columns.
#[derive(Debug, Clone)]
pub struct PlotSpec {
    pub title: String,
    pub x: String,
    pub ys: Vec<String>,
    pub group_by: Vec<String>,
}

fn bounds(values: impl Iterator<Item = f64>) -> Option<(f64, f64)> {
    let (lo, hi) = values
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !lo.is_finite() {
        return None;
    }
    if hi > lo {
        Some((lo, hi))
    } else {
        let pad = if lo == 0.0 { 1.0 } else { lo.abs() * 0.1 };
        Some((lo - pad, hi + pad))
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders the plot; columns missing from the table are an error.
pub fn line_plot(table: &Table, spec: &PlotSpec) -> Result<String, String> {
    let col = |name: &str| table.column(name).ok_or_else(|| format!("no column '{name}'"));
    let xk = col(&spec.x)?;
    let yks = spec.ys.iter().map(|y| col(y)).collect::<Result<Vec<_>, _>>()?;
    let gks = spec.group_by.iter().map(|g| col(g)).collect::<Result<Vec<_>, _>>()?;

    let (x0, x1) = bounds(table.rows.iter().map(|r| r.values[xk])).unwrap_or((0.0, 1.0));
    let (y0, y1) =
        bounds(table.rows.iter().flat_map(|r| yks.iter().map(|&k| r.values[k]))).unwrap_or((0.0, 1.0));
    let px = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let py = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

    // groups in order of first appearance
    let mut groups: Vec<(Vec<u64>, Vec<usize>)> = Vec::new();
    for (i, r) in table.rows.iter().enumerate() {
        let key: Vec<u64> = gks.iter().map(|&k| r.values[k].to_bits()).collect();
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, rows)) => rows.push(i),
            None => groups.push((key, vec![i])),
        }
    }

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r#"<text x="{}" y="24" text-anchor="middle" font-size="14">{}</text>"#, WIDTH / 2.0, escape(&spec.title));
    let (left, right, top, bottom) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(
        s,
        r#"<polyline points="{left},{top} {left},{bottom} {right},{bottom}" fill="none" stroke="black"/>"#
    );
    for i in 0..=4 {
        let f = i as f64 / 4.0;
        let (xv, yv) = (x0 + f * (x1 - x0), y0 + f * (y1 - y0));
        let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{:.3e}</text>"#, px(xv), bottom + 18.0, xv);
        let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{:.3e}</text>"#, left - 6.0, py(yv) + 4.0, yv);
    }
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#, WIDTH / 2.0, HEIGHT - 16.0, escape(&spec.x));

    for (n, (yk, name)) in yks.iter().zip(&spec.ys).enumerate() {
        let color = PALETTE[n % PALETTE.len()];
        for (_, rows) in &groups {
            let pts: Vec<String> = rows
                .iter()
                .map(|&i| (table.rows[i].values[xk], table.rows[i].values[*yk]))
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .map(|(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
                .collect();
            if pts.len() > 1 {
                let _ = writeln!(
                    s,
                    r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.2"/>"#,
                    pts.join(" ")
                );
            }
        }
        let ly = top + 14.0 * n as f64;
        let _ = writeln!(s, r#"<line x1="{}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/>"#, right - 110.0, right - 90.0);
        let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, right - 85.0, ly + 4.0, escape(name));
    }
    s.push_str("</svg>\n");
    Ok(s)
}
