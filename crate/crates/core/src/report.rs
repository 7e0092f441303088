//! CSV and Markdown rendering of report parts.
//!
//! Output is byte-stable for a fixed report: fixed column order, LF line
//! endings, `.` decimal separator, numbers printed with at most six
//! decimals and trailing zeros removed.

use std::str::FromStr;

use crate::catalog::Catalog;
use crate::energy::MetricsRecord;
use crate::error::{Error, Result};
use crate::path::DelayArithmetic;
use crate::ranking::{OcmcaRank, RankTable, UserClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub const MATRIX_HEADER: [&str; 8] = [
    "application",
    "architecture",
    "cost_low",
    "cost_high",
    "delay_ms",
    "power",
    "disqualified",
    "deviation",
];

#[derive(Debug, Clone, Copy)]
pub enum ReportPart<'a> {
    Matrix {
        records: &'a [MetricsRecord],
        catalog: &'a Catalog,
        arithmetic: DelayArithmetic,
    },
    Ranks(&'a RankTable),
    OcmcaRanks(&'a [OcmcaRank]),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EmitOptions {
    /// Append a column naming the engine operation behind each value.
    pub provenance: bool,
}

pub fn format_number(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

pub fn emit_table(part: ReportPart<'_>, format: Format, opts: EmitOptions) -> String {
    let table = match part {
        ReportPart::Matrix {
            records,
            catalog,
            arithmetic,
        } => matrix_table(records, catalog, arithmetic, format, opts),
        ReportPart::Ranks(t) => rank_table(t, format, opts),
        ReportPart::OcmcaRanks(r) => ocmca_table(r, opts),
    };
    match format {
        Format::Csv => table.csv(),
        Format::Markdown => table.markdown(),
    }
}

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }

    fn markdown(&self) -> String {
        let mut out = format!("| {} |\n", self.header.join(" | "));
        out.push_str(&format!("|{}\n", "---|".repeat(self.header.len())));
        for r in &self.rows {
            out.push_str(&format!("| {} |\n", r.join(" | ")));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn delay_op(a: DelayArithmetic) -> &'static str {
    match a {
        DelayArithmetic::Exact => "path::offload_delay_with(exact)",
        DelayArithmetic::WrappingInt32 => "path::offload_delay_with(int32)",
    }
}

fn matrix_table(
    records: &[MetricsRecord],
    catalog: &Catalog,
    arithmetic: DelayArithmetic,
    format: Format,
    opts: EmitOptions,
) -> Table {
    let mut header: Vec<String> = match format {
        Format::Csv => MATRIX_HEADER.iter().map(|s| s.to_string()).collect(),
        Format::Markdown => [
            "Appl.",
            "Architecture",
            "Cost (10^6)",
            "Delay (ms)",
            "Power (10^6)",
            "Privacy",
            "Mobility",
            "Scalability",
            "Multicast",
            "Deviation",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect(),
    };
    if opts.provenance {
        header.push("provenance".into());
    }
    let mut rows = Vec::with_capacity(records.len());
    for r in records {
        let mut row = Vec::new();
        let prov = if r.disqualified {
            "energy::is_disqualified".to_string()
        } else {
            format!(
                "cost=energy::monetary_cost; delay={}; power=energy::offload_energy",
                delay_op(arithmetic)
            )
        };
        match format {
            Format::Csv => {
                let (cl, ch, d, p) = match &r.metrics {
                    Some(m) => (
                        format_number(m.cost.low),
                        format_number(m.cost.high),
                        m.delay_ms.to_string(),
                        format_number(m.energy),
                    ),
                    None => Default::default(),
                };
                row.extend([
                    r.application.clone(),
                    r.architecture.slug().to_string(),
                    cl,
                    ch,
                    d,
                    p,
                    r.disqualified.to_string(),
                    r.deviation.clone().unwrap_or_default(),
                ]);
            }
            Format::Markdown => {
                row.push(r.application.clone());
                row.push(r.architecture.title().to_string());
                match &r.metrics {
                    Some(m) => {
                        let cost = if m.cost.is_point() {
                            format_number(m.cost.low / 1e6)
                        } else {
                            format!(
                                "{} .. {}",
                                format_number(m.cost.low / 1e6),
                                format_number(m.cost.high / 1e6)
                            )
                        };
                        row.push(cost);
                        row.push(m.delay_ms.to_string());
                        row.push(format_number(m.energy / 1e6));
                        let labels = catalog
                            .architecture(r.architecture)
                            .map(|a| a.qualitative.labels())
                            .unwrap_or_default();
                        row.extend(labels);
                    }
                    None => {
                        row.push("Disqualified".into());
                        row.extend(std::iter::repeat_n(String::new(), 6));
                    }
                }
                row.push(r.deviation.clone().unwrap_or_default());
            }
        }
        if opts.provenance {
            row.push(prov);
        }
        rows.push(row);
    }
    Table { header, rows }
}

fn rank_table(t: &RankTable, format: Format, opts: EmitOptions) -> Table {
    let mut header = vec![match format {
        Format::Csv => "application".to_string(),
        Format::Markdown => "Appl.".to_string(),
    }];
    for c in &t.columns {
        header.push(match format {
            Format::Csv => c.label(),
            Format::Markdown => match c.user_class {
                None => c.architecture.title().to_string(),
                Some(UserClass::Local) => format!("{} (local user)", c.architecture.title()),
                Some(UserClass::Roaming) => format!("{} (roaming user)", c.architecture.title()),
            },
        });
    }
    if opts.provenance {
        header.push("provenance".into());
    }
    let rows = t
        .rows
        .iter()
        .map(|r| {
            let mut row = vec![r.application.clone()];
            row.extend(r.cells.iter().map(|c| c.to_string()));
            if opts.provenance {
                row.push(format!("ranking::rank(scheme={})", t.scheme.number()));
            }
            row
        })
        .collect();
    Table { header, rows }
}

fn ocmca_table(ranks: &[OcmcaRank], opts: EmitOptions) -> Table {
    let mut header: Vec<String> = ["application", "cost", "delay", "power", "qualitative"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    if opts.provenance {
        header.push("provenance".into());
    }
    let rows = ranks
        .iter()
        .map(|r| {
            let mut row = vec![
                r.application.clone(),
                r.cost.to_string(),
                r.delay.to_string(),
                r.power.to_string(),
                r.qualitative.to_string(),
            ];
            if opts.provenance {
                row.push("ranking::ocmca_overall_rank".into());
            }
            row
        })
        .collect();
    Table { header, rows }
}
