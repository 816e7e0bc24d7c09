//! Text renderings. JSON and CSV output is byte-stable for identical input.

use std::fmt::Write as _;

use clap::ValueEnum;
use rankmoments::durfee::MarkedDurfeeSymbol;
use rankmoments::identities::{Status, VerificationReport};
use rankmoments::moments::MomentTable;
use rankmoments::partitions::RankDistribution;
use rankmoments::Series;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

/// Right-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for r in rows {
        line(r.iter().map(String::as_str).collect());
    }
    out
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

fn tabular(format: Format, header: &[&str], rows: &[Vec<String>], as_json: impl FnOnce() -> Value) -> String {
    match format {
        Format::Json => json_text(&as_json()),
        Format::Csv => csv(header, rows),
        Format::Table => table(header, rows),
    }
}

pub fn rank_distribution(d: &RankDistribution, format: Format) -> String {
    let rows: Vec<Vec<String>> = d.iter().map(|(m, c)| vec![m.to_string(), c.to_string()]).collect();
    tabular(format, &["m", "count"], &rows, || {
        let counts: Vec<Value> = d
            .iter()
            .map(|(m, c)| json!({"m": m, "count": c.to_string()}))
            .collect();
        json!({"n": d.n(), "counts": counts})
    })
}

pub fn moment_table(t: &MomentTable, format: Format) -> String {
    let rows: Vec<Vec<String>> = t
        .values
        .iter()
        .map(|(n, v)| vec![n.to_string(), v.to_string()])
        .collect();
    tabular(format, &["n", "value"], &rows, || t.to_json())
}

pub fn count(fields: &[(&str, Value)], format: Format) -> String {
    let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
    let row: Vec<String> = fields
        .iter()
        .map(|(_, v)| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
        .collect();
    tabular(format, &header, &[row], || {
        Value::Object(fields.iter().map(|(k, v)| (k.to_string(), v.clone())).collect())
    })
}

pub fn symbols(symbols: &[MarkedDurfeeSymbol], format: Format) -> String {
    match format {
        Format::Json => {
            // one symbol per line inside a JSON array
            let mut out = String::from("[");
            for (i, s) in symbols.iter().enumerate() {
                out.push_str(if i == 0 { "\n" } else { ",\n" });
                out.push_str(&s.to_json().to_string());
            }
            out.push_str("\n]\n");
            out
        }
        Format::Csv | Format::Table => {
            let join_parts = |p: &[u32]| p.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
            let rows: Vec<Vec<String>> = symbols
                .iter()
                .map(|s| {
                    let rev = s.vectors().iter().rev();
                    let alpha: Vec<String> = rev.clone().map(|v| join_parts(v.alpha.parts())).collect();
                    let beta: Vec<String> = rev.map(|v| join_parts(v.beta.parts())).collect();
                    let ranks: Vec<String> = s.ranks().0.iter().rev().map(i64::to_string).collect();
                    vec![s.durfee().to_string(), ranks.join(" "), alpha.join(" / "), beta.join(" / ")]
                })
                .collect();
            let header = ["D", "ranks", "alpha", "beta"];
            if format == Format::Csv {
                csv(&header, &rows)
            } else {
                let mut out = String::new();
                for r in &rows {
                    let _ = writeln!(out, "D={}  ranks=[{}]  alpha: {}  beta: {}", r[0], r[1], r[2], r[3]);
                }
                out
            }
        }
    }
}

pub fn series(s: &Series, format: Format) -> String {
    if format == Format::Json {
        return json_text(&s.to_json());
    }
    let v = s.num_vars();
    let mut header: Vec<String> = vec!["q".into()];
    header.extend((1..=v).map(|j| format!("x{j}")));
    header.push("c".into());
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut rows = Vec::new();
    for (q, p) in s.coeffs().iter().enumerate() {
        if v == 0 {
            // univariate: every coefficient, zeros included
            rows.push(vec![q.to_string(), p.constant_term().to_string()]);
            continue;
        }
        for (e, c) in p.terms() {
            let mut row = vec![q.to_string()];
            row.extend(e.iter().map(i32::to_string));
            row.push(c.to_string());
            rows.push(row);
        }
    }
    if format == Format::Csv {
        csv(&header, &rows)
    } else {
        table(&header, &rows)
    }
}

pub fn reports(reports: &[VerificationReport], single: bool, format: Format) -> String {
    match format {
        Format::Json => {
            if single && reports.len() == 1 {
                json_text(&reports[0].to_json())
            } else {
                json_text(&Value::Array(reports.iter().map(VerificationReport::to_json).collect()))
            }
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.identity.clone(),
                        params_text(r, ";"),
                        r.cases_checked.to_string(),
                        status_name(r.status).to_string(),
                        r.counterexamples.len().to_string(),
                    ]
                })
                .collect();
            csv(&["identity", "params", "cases_checked", "status", "counterexamples"], &rows)
        }
        Format::Table => {
            let mut out = String::new();
            for r in reports {
                let _ = write!(
                    out,
                    "{:<7} {:<19} {:<28} {} cases",
                    status_name(r.status).to_uppercase(),
                    r.identity,
                    params_text(r, " "),
                    r.cases_checked
                );
                if let Some(why) = &r.reason {
                    let _ = write!(out, "  ({why})");
                }
                out.push('\n');
                for c in r.counterexamples.iter().take(5) {
                    let inputs = serde_json::to_string(&c.inputs).expect("json");
                    let _ = writeln!(out, "        {inputs}: {} != {}", c.lhs, c.rhs);
                }
            }
            out
        }
    }
}

fn params_text(r: &VerificationReport, sep: &str) -> String {
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(sep)
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Refused => "refused",
    }
}
