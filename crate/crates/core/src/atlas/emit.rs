//! CSV, JSON and SVG renderings of a [`RootSet`].

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use super::complex::format_decimal;
use super::roots::RootSet;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootFormat {
    Csv,
    Json,
    Svg,
}

impl FromStr for RootFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(RootFormat::Csv),
            "json" => Ok(RootFormat::Json),
            "svg" => Ok(RootFormat::Svg),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// Fractional digits carried by the requested precision, with a guard of
/// eight bits.
pub fn significant_digits(precision_bits: usize) -> u32 {
    ((precision_bits.saturating_sub(8)) as f64 * std::f64::consts::LOG10_2).floor() as u32
}

fn decimal_pairs(rs: &RootSet) -> Vec<(String, String)> {
    let d = significant_digits(rs.precision_bits);
    rs.roots.iter().map(|z| (format_decimal(&z.re, d), format_decimal(&z.im, d))).collect()
}

pub fn to_csv(rs: &RootSet) -> String {
    let mut out = String::from("re,im\n");
    for (re, im) in decimal_pairs(rs) {
        writeln!(out, "{re},{im}").unwrap();
    }
    out
}

pub fn to_json(rs: &RootSet) -> String {
    let rows: Vec<String> = decimal_pairs(rs).iter().map(|(re, im)| format!("[{re},{im}]")).collect();
    format!("[{}]\n", rows.join(","))
}

/// Scatter plot in a square viewBox centred on the origin, 5% wider than
/// the largest coordinate.
pub fn to_svg(rs: &RootSet) -> String {
    let pts: Vec<(f64, f64)> = rs.roots.iter().map(|z| z.to_f64()).collect();
    let extent = pts.iter().fold(0f64, |m, &(x, y)| m.max(x.abs()).max(y.abs()));
    let half = if extent > 0.0 { extent * 1.05 } else { 1.0 };
    let r = half / 100.0;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.6} {:.6} {:.6} {:.6}" width="600" height="600">"#,
        -half,
        -half,
        2.0 * half,
        2.0 * half
    )
    .unwrap();
    let w = half / 500.0;
    writeln!(
        out,
        r##"<line x1="{:.6}" y1="0" x2="{:.6}" y2="0" stroke="#bbb" stroke-width="{w:.6}"/>"##,
        -half, half
    )
    .unwrap();
    writeln!(
        out,
        r##"<line x1="0" y1="{:.6}" x2="0" y2="{:.6}" stroke="#bbb" stroke-width="{w:.6}"/>"##,
        -half, half
    )
    .unwrap();
    for (x, y) in pts {
        writeln!(out, r#"<circle cx="{x:.6}" cy="{:.6}" r="{r:.6}"/>"#, -y).unwrap();
    }
    out.push_str("</svg>\n");
    out
}

pub fn render(rs: &RootSet, format: RootFormat) -> String {
    match format {
        RootFormat::Csv => to_csv(rs),
        RootFormat::Json => to_json(rs),
        RootFormat::Svg => to_svg(rs),
    }
}

pub fn emit(rs: &RootSet, format: RootFormat, path: &Path) -> Result<()> {
    std::fs::write(path, render(rs, format))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::find_roots;
    use crate::exact::Poly;

    #[test]
    fn empty_set_has_header_only() {
        assert_eq!(to_csv(&RootSet::empty(128)), "re,im\n");
        assert_eq!(to_json(&RootSet::empty(128)), "[]\n");
        assert!(to_svg(&RootSet::empty(128)).contains(r#"viewBox="-1.000000 -1.000000 2.000000 2.000000""#));
    }

    #[test]
    fn quadratic_rows() {
        let rs = find_roots(&Poly::from_ints(&[4, 0, 8]), 128).unwrap();
        let csv = to_csv(&rs);
        let mut rows: Vec<&str> = csv.lines().skip(1).collect();
        rows.sort();
        assert_eq!(rows.len(), 2);
        assert!(rows[0].starts_with("0,-0.70710678118654752440084436"), "{}", rows[0]);
        assert!(rows[1].starts_with("0,0.70710678118654752440084436"), "{}", rows[1]);
        let parsed: Vec<[f64; 2]> = serde_json::from_str(&to_json(&rs)).unwrap();
        assert_eq!(parsed.len(), 2);
    }
}
