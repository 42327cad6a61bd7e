//! Output rendering for the three supported formats and the parsers that
//! read the CLI's own CSV/JSON histogram output back.
//!
//! Numeric output in `csv` and `json` is exact: integers print in full and
//! ratios print as reduced fractions `a/b`. Decimals (12 places) appear
//! only in the human `table` format.

use std::fmt::Write as _;

use clap::ValueEnum;
use symsens_core::counting::{decimal_string, CountSeries};
use symsens_core::{
    BigUint, CompactTruthTable, NotSymmetricWitness, SensitivityHistogram, SensitivityProfile,
    TableRow, TruthTable,
};

pub const RATIO_DECIMAL_PLACES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    /// Human-readable aligned text
    #[default]
    Table,
    /// Comma-separated values
    Csv,
    /// Single-line JSON
    Json,
}

/// Everything `analyze` reports about one symmetric function.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub table: CompactTruthTable,
    pub composition: String,
    pub profile: SensitivityProfile,
    pub max_sensitivity: bool,
    pub trivial: bool,
}

impl Analysis {
    pub fn of(table: CompactTruthTable) -> Analysis {
        let composition = table.to_composition().to_string();
        let profile = table.sensitivity_profile();
        let max_sensitivity = table.has_max_sensitivity();
        let trivial = table.is_trivial();
        Analysis {
            table,
            composition,
            profile,
            max_sensitivity,
            trivial,
        }
    }
}

/// A rejected `analyze` run: the full table is not symmetric, with the
/// offending pair of equal-weight inputs.
#[derive(Debug, Clone)]
pub struct SymmetryFailure {
    pub n: usize,
    pub weight: usize,
    pub first_index: u64,
    pub first_value: bool,
    pub second_index: u64,
    pub second_value: bool,
}

impl SymmetryFailure {
    pub fn of(table: &TruthTable, witness: NotSymmetricWitness) -> SymmetryFailure {
        SymmetryFailure {
            n: table.n(),
            weight: witness.weight,
            first_index: witness.first,
            first_value: table.get(witness.first),
            second_index: witness.second,
            second_value: table.get(witness.second),
        }
    }
}

/// Input vector `x_1 .. x_n` as a bit string, `x_1` first (the least
/// significant bit of the index).
pub fn input_bits(x: u64, n: usize) -> String {
    (0..n)
        .map(|i| if (x >> i) & 1 == 1 { '1' } else { '0' })
        .collect()
}

fn bit(v: bool) -> &'static str {
    if v {
        "1"
    } else {
        "0"
    }
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn join_spaced(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Left-aligns rows into columns separated by two spaces; the last column
/// is not padded.
fn aligned(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            if i + 1 == row.len() {
                out.push_str(cell);
            } else {
                let _ = write!(out, "{cell:<width$}  ", width = widths[i]);
            }
        }
        out.push('\n');
    }
    out
}

fn json_escaped(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

pub fn render_analysis(a: &Analysis, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => aligned(&[
            vec!["n".into(), a.profile.n().to_string()],
            vec!["compact_truth_table".into(), a.table.to_string()],
            vec!["composition".into(), a.composition.clone()],
            vec!["per_weight".into(), join_spaced(a.profile.per_weight())],
            vec!["sensitivity".into(), a.profile.max().to_string()],
            vec!["max_sensitivity".into(), yes_no(a.max_sensitivity).into()],
            vec!["trivial".into(), yes_no(a.trivial).into()],
        ]),
        OutputFormat::Csv => format!(
            "n,compact_truth_table,composition,per_weight,sensitivity,max_sensitivity,trivial\n\
             {},{},{},{},{},{},{}\n",
            a.profile.n(),
            a.table,
            a.composition,
            join_spaced(a.profile.per_weight()),
            a.profile.max(),
            a.max_sensitivity,
            a.trivial,
        ),
        OutputFormat::Json => {
            let per_weight = a
                .profile
                .per_weight()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!(
                "{{\"symmetric\":true,\"n\":{},\"compact_truth_table\":\"{}\",\
                 \"composition\":\"{}\",\"per_weight\":[{}],\"sensitivity\":{},\
                 \"max_sensitivity\":{},\"trivial\":{}}}\n",
                a.profile.n(),
                a.table,
                json_escaped(&a.composition),
                per_weight,
                a.profile.max(),
                a.max_sensitivity,
                a.trivial,
            )
        }
    }
}

pub fn render_symmetry_failure(f: &SymmetryFailure, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => format!(
            "not symmetric: two weight-{} inputs disagree\n\
             f({}) = {} (index {})\nf({}) = {} (index {})\n",
            f.weight,
            input_bits(f.first_index, f.n),
            bit(f.first_value),
            f.first_index,
            input_bits(f.second_index, f.n),
            bit(f.second_value),
            f.second_index,
        ),
        OutputFormat::Csv => format!(
            "symmetric,n,weight,first_index,first_input,first_value,second_index,second_input,second_value\n\
             false,{},{},{},{},{},{},{},{}\n",
            f.n,
            f.weight,
            f.first_index,
            input_bits(f.first_index, f.n),
            bit(f.first_value),
            f.second_index,
            input_bits(f.second_index, f.n),
            bit(f.second_value),
        ),
        OutputFormat::Json => format!(
            "{{\"symmetric\":false,\"n\":{},\"weight\":{},\"witness\":[\
             {{\"index\":{},\"input\":\"{}\",\"value\":{}}},\
             {{\"index\":{},\"input\":\"{}\",\"value\":{}}}]}}\n",
            f.n,
            f.weight,
            f.first_index,
            input_bits(f.first_index, f.n),
            bit(f.first_value),
            f.second_index,
            input_bits(f.second_index, f.n),
            bit(f.second_value),
        ),
    }
}

pub fn render_listing(rows: &[TableRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let mut grid = vec![vec![
                "compact_truth_table".to_string(),
                "composition".to_string(),
                "sensitivity".to_string(),
            ]];
            for row in rows {
                grid.push(vec![
                    row.table.to_string(),
                    row.composition.to_string(),
                    row.sensitivity.to_string(),
                ]);
            }
            aligned(&grid)
        }
        OutputFormat::Csv => {
            let mut out = String::from("compact_truth_table,composition,sensitivity\n");
            for row in rows {
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    row.table, row.composition, row.sensitivity
                );
            }
            out
        }
        OutputFormat::Json => {
            let n = rows.first().map(|r| r.table.n()).unwrap_or(0);
            let mut out = format!("{{\"n\":{n},\"rows\":[");
            for (i, row) in rows.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(
                    out,
                    "{{\"compact_truth_table\":\"{}\",\"composition\":\"{}\",\"sensitivity\":{}}}",
                    row.table, row.composition, row.sensitivity
                );
            }
            out.push_str("]}\n");
            out
        }
    }
}

pub fn render_histogram(h: &SensitivityHistogram, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let mut grid = vec![vec!["s".to_string(), "count".to_string()]];
            for (s, count) in h.nonzero() {
                grid.push(vec![s.to_string(), count.to_string()]);
            }
            format!("n = {}, total = {}\n{}", h.n(), h.total(), aligned(&grid))
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,s,count\n");
            for (s, count) in h.nonzero() {
                let _ = writeln!(out, "{},{},{}", h.n(), s, count);
            }
            out
        }
        OutputFormat::Json => {
            let mut out = format!("{{\"n\":{},\"counts\":{{", h.n());
            for (i, (s, count)) in h.nonzero().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "\"{s}\":{count}");
            }
            let _ = write!(out, "}},\"total\":{}}}", h.total());
            out.push('\n');
            out
        }
    }
}

pub fn render_count_series(series: &CountSeries, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let mut grid = vec![vec![
                "n".to_string(),
                "total".to_string(),
                "no_ones".to_string(),
                "max_sens".to_string(),
                "ratio".to_string(),
                "decimal".to_string(),
            ]];
            for row in series.rows() {
                grid.push(vec![
                    row.n.to_string(),
                    row.total.to_string(),
                    row.no_ones.to_string(),
                    row.max_sens.to_string(),
                    format!("{}/{}", row.ratio.numer(), row.ratio.denom()),
                    decimal_string(&row.ratio, RATIO_DECIMAL_PLACES),
                ]);
            }
            aligned(&grid)
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,total,no_ones,max_sens,ratio\n");
            for row in series.rows() {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}/{}",
                    row.n,
                    row.total,
                    row.no_ones,
                    row.max_sens,
                    row.ratio.numer(),
                    row.ratio.denom()
                );
            }
            out
        }
        OutputFormat::Json => {
            let mut out = format!("{{\"max_n\":{},\"rows\":[", series.max_n());
            for (i, row) in series.rows().iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(
                    out,
                    "{{\"n\":{},\"total\":{},\"no_ones\":{},\"max_sens\":{},\"ratio\":\"{}/{}\"}}",
                    row.n,
                    row.total,
                    row.no_ones,
                    row.max_sens,
                    row.ratio.numer(),
                    row.ratio.denom()
                );
            }
            out.push_str("]}\n");
            out
        }
    }
}

/// Reads back the CSV produced by [`render_histogram`].
pub fn parse_histogram_csv(text: &str) -> Result<SensitivityHistogram, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some("n,s,count") => {}
        other => return Err(format!("bad histogram CSV header: {other:?}")),
    }
    let mut n: Option<usize> = None;
    let mut pairs: Vec<(usize, BigUint)> = Vec::new();
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let [row_n, s, count] = fields.as_slice() else {
            return Err(format!("bad histogram CSV row: {line:?}"));
        };
        let row_n: usize = row_n.parse().map_err(|e| format!("bad n: {e}"))?;
        if *n.get_or_insert(row_n) != row_n {
            return Err("inconsistent n across rows".to_string());
        }
        let s: usize = s.parse().map_err(|e| format!("bad s: {e}"))?;
        let count: BigUint = count.parse().map_err(|e| format!("bad count: {e}"))?;
        pairs.push((s, count));
    }
    let n = n.ok_or("empty histogram")?;
    build_histogram(n, pairs)
}

/// Reads back the JSON produced by [`render_histogram`].
pub fn parse_histogram_json(text: &str) -> Result<SensitivityHistogram, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("bad JSON: {e}"))?;
    let object = value.as_object().ok_or("histogram JSON must be an object")?;
    let n = object
        .get("n")
        .and_then(|v| v.as_u64())
        .ok_or("missing n")? as usize;
    let counts = object
        .get("counts")
        .and_then(|v| v.as_object())
        .ok_or("missing counts")?;
    let mut pairs: Vec<(usize, BigUint)> = Vec::new();
    for (key, value) in counts {
        let s: usize = key.parse().map_err(|e| format!("bad s key: {e}"))?;
        let count: BigUint = json_number(value)?;
        pairs.push((s, count));
    }
    let total_field: BigUint = json_number(object.get("total").ok_or("missing total")?)?;
    let histogram = build_histogram(n, pairs)?;
    if histogram.total() != &total_field {
        return Err(format!(
            "total {} does not match the sum of counts {}",
            total_field,
            histogram.total()
        ));
    }
    Ok(histogram)
}

fn json_number(value: &serde_json::Value) -> Result<BigUint, String> {
    match value {
        serde_json::Value::Number(num) => num
            .to_string()
            .parse()
            .map_err(|e| format!("bad count {num}: {e}")),
        other => Err(format!("expected a number, got {other}")),
    }
}

fn build_histogram(n: usize, pairs: Vec<(usize, BigUint)>) -> Result<SensitivityHistogram, String> {
    let mut counts = vec![BigUint::from(0u32); n + 1];
    for (s, count) in pairs {
        if s > n {
            return Err(format!("sensitivity {s} exceeds n = {n}"));
        }
        counts[s] = count;
    }
    SensitivityHistogram::from_counts(n, counts).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use symsens_core::distribution;

    #[test]
    fn histogram_formats_round_trip() {
        for n in 1..=8 {
            let h = distribution::census(n).unwrap();
            let csv = render_histogram(&h, OutputFormat::Csv);
            assert_eq!(parse_histogram_csv(&csv).unwrap(), h, "csv n = {n}");
            let json = render_histogram(&h, OutputFormat::Json);
            assert_eq!(parse_histogram_json(&json).unwrap(), h, "json n = {n}");
        }
    }

    #[test]
    fn census_json_is_bit_exact() {
        let h = distribution::census(2).unwrap();
        assert_eq!(
            render_histogram(&h, OutputFormat::Json),
            "{\"n\":2,\"counts\":{\"0\":2,\"2\":6},\"total\":8}\n"
        );
    }

    #[test]
    fn census_csv_matches_expected_rows() {
        let h = distribution::census(3).unwrap();
        assert_eq!(
            render_histogram(&h, OutputFormat::Csv),
            "n,s,count\n3,0,2\n3,2,2\n3,3,12\n"
        );
    }

    #[test]
    fn count_csv_exact_fractions() {
        let series = CountSeries::compute(3).unwrap();
        assert_eq!(
            render_count_series(&series, OutputFormat::Csv),
            "n,total,no_ones,max_sens,ratio\n1,4,2,2,1/2\n2,8,2,6,3/4\n3,16,4,12,3/4\n"
        );
    }

    #[test]
    fn analysis_of_known_row() {
        let a = Analysis::of("1110".parse().unwrap());
        let text = render_analysis(&a, OutputFormat::Table);
        assert!(text.contains("composition          3+1"));
        assert!(text.contains("sensitivity          3"));
        assert!(text.contains("max_sensitivity      yes"));
        let json = render_analysis(&a, OutputFormat::Json);
        assert_eq!(
            json,
            "{\"symmetric\":true,\"n\":3,\"compact_truth_table\":\"1110\",\
             \"composition\":\"3+1\",\"per_weight\":[0,0,1,3],\"sensitivity\":3,\
             \"max_sensitivity\":true,\"trivial\":false}\n"
        );
    }

    #[test]
    fn input_bit_convention() {
        // x_1 is the least significant index bit and prints first
        assert_eq!(input_bits(0b011, 3), "110");
        assert_eq!(input_bits(0b101, 3), "101");
        assert_eq!(input_bits(0, 2), "00");
    }

    #[test]
    fn parse_rejects_tampered_totals() {
        let good = "{\"n\":2,\"counts\":{\"0\":2,\"2\":6},\"total\":8}";
        assert!(parse_histogram_json(good).is_ok());
        let bad = "{\"n\":2,\"counts\":{\"0\":2,\"2\":6},\"total\":9}";
        assert!(parse_histogram_json(bad).is_err());
        let bad_s = "{\"n\":2,\"counts\":{\"7\":2},\"total\":2}";
        assert!(parse_histogram_json(bad_s).is_err());
    }
}
