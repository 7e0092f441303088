//! Published reference values and the comparison harness behind
//! `verify-paper`.
//!
//! Every numeric cell carries a tolerance class. Cells tagged `ledgered`
//! are known not to be reproducible by the model; they are always listed in
//! the deviation ledger and never fail verification. Any other cell outside
//! its tolerance is an unexpected mismatch.

use std::fmt;
use std::str::FromStr;

use crate::catalog::{ArchitectureKind, Catalog};
use crate::energy::{EvalOptions, MetricsRecord};
use crate::error::{Error, Result};
use crate::ranking::{evaluate_matrix, ocmca_overall_rank, rank, RankOptions, Scheme};
use crate::report::format_number;

const TABLES_CSV: &str = include_str!("../data/paper_tables.csv");
const RANKS_CSV: &str = include_str!("../data/paper_ranks.csv");

/// Architectures of the published result tables, in column order.
pub const PUBLISHED_ARCHITECTURES: [ArchitectureKind; 5] = [
    ArchitectureKind::InHouse,
    ArchitectureKind::RemoteCloud,
    ArchitectureKind::VirtualCloud,
    ArchitectureKind::Cloudlet,
    ArchitectureKind::OcmcaUnicast,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    Cost,
    Delay,
    Power,
    Status,
    Privacy,
    Mobility,
    Scalability,
    Multicast,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Cost => "cost",
            Metric::Delay => "delay",
            Metric::Power => "power",
            Metric::Status => "status",
            Metric::Privacy => "privacy",
            Metric::Mobility => "mobility",
            Metric::Scalability => "scalability",
            Metric::Multicast => "multicast",
        }
    }

    pub fn is_numeric(self) -> bool {
        matches!(self, Metric::Cost | Metric::Delay | Metric::Power)
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Metric::Cost,
            Metric::Delay,
            Metric::Power,
            Metric::Status,
            Metric::Privacy,
            Metric::Mobility,
            Metric::Scalability,
            Metric::Multicast,
        ]
        .into_iter()
        .find(|m| m.name() == s)
        .ok_or_else(|| Error::ConfigParse(format!("unknown metric `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tolerance {
    /// Equal at the printed precision.
    Exact,
    /// Within two milliseconds.
    Ms2,
    /// Within ten percent.
    Pct10,
    Ledgered,
}

impl Tolerance {
    pub fn name(self) -> &'static str {
        match self {
            Tolerance::Exact => "exact",
            Tolerance::Ms2 => "ms2",
            Tolerance::Pct10 => "pct10",
            Tolerance::Ledgered => "ledgered",
        }
    }
}

impl FromStr for Tolerance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Tolerance::Exact),
            "ms2" => Ok(Tolerance::Ms2),
            "pct10" => Ok(Tolerance::Pct10),
            "ledgered" => Ok(Tolerance::Ledgered),
            other => Err(Error::ConfigParse(format!(
                "unknown tolerance class `{other}`"
            ))),
        }
    }
}

/// A printed number with the count of digits after the decimal point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Printed {
    pub value: f64,
    pub decimals: u32,
}

impl Printed {
    fn parse(s: &str) -> Result<Printed> {
        let value = s
            .parse::<f64>()
            .map_err(|_| Error::ConfigParse(format!("bad number `{s}`")))?;
        let decimals = s.split_once('.').map_or(0, |(_, d)| d.len() as u32);
        Ok(Printed { value, decimals })
    }

    fn half_ulp(&self) -> f64 {
        0.5 * 10f64.powi(-(self.decimals as i32))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Published {
    Number(Printed),
    Range(Printed, Printed),
    Text(String),
}

/// One cell of a published result table. Cost and power are in millions.
#[derive(Debug, Clone, PartialEq)]
pub struct TableCell {
    pub architecture: ArchitectureKind,
    pub application: String,
    pub metric: Metric,
    pub raw: String,
    pub published: Published,
    pub tolerance: Tolerance,
}

fn rows(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .skip(1)
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.split(',').collect()))
}

pub fn parse_tables(text: &str) -> Result<Vec<TableCell>> {
    let mut out = Vec::new();
    for (line, f) in rows(text) {
        let [arch, app, metric, value, class] = f[..] else {
            return Err(Error::ConfigParse(format!(
                "line {line}: expected 5 fields"
            )));
        };
        let metric: Metric = metric.parse()?;
        let published = if !metric.is_numeric() {
            Published::Text(value.to_string())
        } else if let Some((lo, hi)) = value.split_once("..") {
            Published::Range(Printed::parse(lo)?, Printed::parse(hi)?)
        } else {
            Published::Number(Printed::parse(value)?)
        };
        out.push(TableCell {
            architecture: arch.parse()?,
            application: app.to_string(),
            metric,
            raw: value.to_string(),
            published,
            tolerance: class.parse()?,
        });
    }
    Ok(out)
}

/// The embedded result tables.
pub fn paper_tables() -> Vec<TableCell> {
    parse_tables(TABLES_CSV).expect("embedded table data is well-formed")
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellCheck {
    pub cell: TableCell,
    pub engine: String,
    /// Engine minus published, in the published unit.
    pub residual: Option<f64>,
    pub relative: Option<f64>,
    /// Within the cell's tolerance; ledgered cells are held to `Exact`.
    pub within: bool,
}

impl CellCheck {
    pub fn is_unexpected(&self) -> bool {
        self.cell.tolerance != Tolerance::Ledgered && !self.within
    }
}

impl fmt::Display for CellCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<14} {:<8} {:<6} published {:<18} engine {:<22}",
            self.cell.architecture.slug(),
            self.cell.application,
            self.cell.metric.name(),
            self.cell.raw,
            self.engine
        )?;
        if let Some(r) = self.residual {
            write!(f, " residual {r:+.4}")?;
        }
        if let Some(p) = self.relative {
            write!(f, " ({:+.2}%)", p * 100.0)?;
        }
        if self.cell.tolerance == Tolerance::Ledgered && self.within {
            write!(f, " [reproduced]")?;
        }
        Ok(())
    }
}

fn check_number(engine: f64, printed: &Printed, tol: Tolerance) -> (f64, Option<f64>, bool) {
    let residual = engine - printed.value;
    let relative = (printed.value != 0.0).then(|| residual / printed.value);
    let within = match tol {
        Tolerance::Exact | Tolerance::Ledgered => {
            residual.abs() <= printed.half_ulp() * (1.0 + 1e-9)
        }
        Tolerance::Ms2 => residual.abs() <= 2.0,
        Tolerance::Pct10 => relative.map_or(residual == 0.0, |r| r.abs() <= 0.10),
    };
    (residual, relative, within)
}

fn check_cell(cell: &TableCell, matrix: &[MetricsRecord], catalog: &Catalog) -> CellCheck {
    let mut check = CellCheck {
        cell: cell.clone(),
        engine: "missing".into(),
        residual: None,
        relative: None,
        within: false,
    };
    let Some(record) = matrix
        .iter()
        .find(|r| r.architecture == cell.architecture && r.application == cell.application)
    else {
        return check;
    };
    if cell.metric == Metric::Status {
        check.engine = if record.disqualified {
            "Disqualified"
        } else {
            "qualified"
        }
        .into();
        check.within = matches!(&cell.published, Published::Text(t) if *t == check.engine);
        return check;
    }
    if !cell.metric.is_numeric() {
        let Ok(spec) = catalog.architecture(cell.architecture) else {
            return check;
        };
        let labels = spec.qualitative.labels();
        let idx = match cell.metric {
            Metric::Privacy => 0,
            Metric::Mobility => 1,
            Metric::Scalability => 2,
            _ => 3,
        };
        check.engine = labels[idx].clone();
        check.within = matches!(&cell.published, Published::Text(t) if *t == check.engine);
        return check;
    }
    let Some(m) = record.metrics.as_ref() else {
        check.engine = "Disqualified".into();
        return check;
    };
    match (&cell.metric, &cell.published) {
        (Metric::Cost, Published::Range(lo, hi)) => {
            let (l, h) = (m.cost.low / 1e6, m.cost.high / 1e6);
            check.engine = format!("{}..{}", format_number(l), format_number(h));
            let a = check_number(l, lo, cell.tolerance);
            let b = check_number(h, hi, cell.tolerance);
            let worst = if a.0.abs() >= b.0.abs() { a } else { b };
            check.residual = Some(worst.0);
            check.relative = worst.1;
            check.within = a.2 && b.2;
        }
        (Metric::Cost, Published::Number(p)) => {
            let (l, h) = (m.cost.low / 1e6, m.cost.high / 1e6);
            check.engine = if l == h {
                format_number(l)
            } else {
                format!("{}..{}", format_number(l), format_number(h))
            };
            let a = check_number(l, p, cell.tolerance);
            let b = check_number(h, p, cell.tolerance);
            check.residual = Some(a.0);
            check.relative = a.1;
            check.within = a.2 && b.2;
        }
        (Metric::Delay, Published::Number(p)) => {
            check.engine = m.delay_ms.to_string();
            let (r, rel, ok) = check_number(m.delay_ms as f64, p, cell.tolerance);
            check.residual = Some(r);
            check.relative = rel;
            check.within = ok && (cell.tolerance != Tolerance::Exact || r == 0.0);
        }
        (Metric::Power, Published::Number(p)) => {
            let v = m.energy / 1e6;
            check.engine = format_number(v);
            let (r, rel, ok) = check_number(v, p, cell.tolerance);
            check.residual = Some(r);
            check.relative = rel;
            check.within = ok;
        }
        _ => {}
    }
    check
}

pub fn check_tables(
    cells: &[TableCell],
    matrix: &[MetricsRecord],
    catalog: &Catalog,
) -> Vec<CellCheck> {
    cells
        .iter()
        .map(|c| check_cell(c, matrix, catalog))
        .collect()
}

/// One cell of a published ranking table. `scheme` is a grading scheme
/// name or `ocmca-overall`; `column` is an architecture column label or,
/// for `ocmca-overall`, one of `cost`, `delay`, `power`, `qualitative`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankGolden {
    pub scheme: String,
    pub application: String,
    pub column: String,
    pub published: String,
    pub tolerance: Tolerance,
}

pub fn parse_ranks(text: &str) -> Result<Vec<RankGolden>> {
    let mut out = Vec::new();
    for (line, f) in rows(text) {
        let [scheme, app, column, value, class] = f[..] else {
            return Err(Error::ConfigParse(format!(
                "line {line}: expected 5 fields"
            )));
        };
        out.push(RankGolden {
            scheme: scheme.into(),
            application: app.into(),
            column: column.into(),
            published: value.into(),
            tolerance: class.parse()?,
        });
    }
    Ok(out)
}

pub fn paper_ranks() -> Vec<RankGolden> {
    parse_ranks(RANKS_CSV).expect("embedded rank data is well-formed")
}

pub fn scheme_slug(s: Scheme) -> &'static str {
    match s {
        Scheme::Delay => "delay",
        Scheme::Power => "power",
        Scheme::Cost => "cost",
        Scheme::PrivacyMobility => "privacy-mobility",
        Scheme::Scalability => "scalability",
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCheck {
    pub cell: RankGolden,
    pub engine: String,
    pub within: bool,
}

impl RankCheck {
    pub fn is_unexpected(&self) -> bool {
        self.cell.tolerance != Tolerance::Ledgered && !self.within
    }
}

impl fmt::Display for RankCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank {:<16} {:<8} {:<20} published {:<2} engine {}",
            self.cell.scheme,
            self.cell.application,
            self.cell.column,
            self.cell.published,
            self.engine
        )?;
        if self.cell.tolerance == Tolerance::Ledgered && self.within {
            write!(f, " [reproduced]")?;
        }
        Ok(())
    }
}

/// Compares published ranks with ranks recomputed from `matrix`. The five
/// schemes are taken over the non-OCMCA architectures only.
pub fn check_ranks(
    golden: &[RankGolden],
    matrix: &[MetricsRecord],
    catalog: &Catalog,
) -> Result<Vec<RankCheck>> {
    let literature: Vec<MetricsRecord> = matrix
        .iter()
        .filter(|r| !r.architecture.is_ocmca())
        .cloned()
        .collect();
    let mut tables = Vec::new();
    for s in Scheme::ALL {
        tables.push((
            scheme_slug(s),
            rank(&literature, catalog, s, &RankOptions::default())?,
        ));
    }
    let overall = ocmca_overall_rank(matrix, catalog)?;

    let mut out = Vec::with_capacity(golden.len());
    for g in golden {
        let engine = if g.scheme == "ocmca-overall" {
            overall
                .iter()
                .find(|r| r.application == g.application)
                .and_then(|r| match g.column.as_str() {
                    "cost" => Some(r.cost),
                    "delay" => Some(r.delay),
                    "power" => Some(r.power),
                    "qualitative" => Some(r.qualitative),
                    _ => None,
                })
                .map(|v| v.to_string())
        } else {
            tables
                .iter()
                .find(|(s, _)| *s == g.scheme)
                .and_then(|(_, t)| {
                    let col = t.columns.iter().find(|c| c.label() == g.column)?;
                    t.cell(&g.application, col).map(|c| c.to_string())
                })
        }
        .unwrap_or_else(|| "missing".into());
        out.push(RankCheck {
            within: engine == g.published,
            engine,
            cell: g.clone(),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub cells: Vec<CellCheck>,
    pub ranks: Vec<RankCheck>,
}

impl Verification {
    /// Cells tagged ledgered, whether or not they happen to match.
    pub fn ledger(&self) -> Vec<&CellCheck> {
        self.cells
            .iter()
            .filter(|c| c.cell.tolerance == Tolerance::Ledgered)
            .collect()
    }

    pub fn rank_ledger(&self) -> Vec<&RankCheck> {
        self.ranks
            .iter()
            .filter(|c| c.cell.tolerance == Tolerance::Ledgered)
            .collect()
    }

    pub fn unexpected(&self) -> Vec<&CellCheck> {
        self.cells.iter().filter(|c| c.is_unexpected()).collect()
    }

    pub fn unexpected_ranks(&self) -> Vec<&RankCheck> {
        self.ranks.iter().filter(|c| c.is_unexpected()).collect()
    }

    pub fn is_clean(&self) -> bool {
        self.unexpected().is_empty() && self.unexpected_ranks().is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let ledger = self.ledger();
        out.push_str(&format!("deviation ledger ({} cells)\n", ledger.len()));
        for c in ledger {
            out.push_str(&format!("  {c}\n"));
        }
        let rl = self.rank_ledger();
        out.push_str(&format!("rank fidelity exceptions ({} cells)\n", rl.len()));
        for c in rl {
            out.push_str(&format!("  {c}\n"));
        }
        let bad = self.unexpected();
        let bad_r = self.unexpected_ranks();
        if bad.is_empty() && bad_r.is_empty() {
            out.push_str(&format!(
                "{} table cells and {} rank cells checked, no unexpected mismatches\n",
                self.cells.len(),
                self.ranks.len()
            ));
        } else {
            out.push_str(&format!(
                "unexpected mismatches ({})\n",
                bad.len() + bad_r.len()
            ));
            for c in bad {
                out.push_str(&format!("  {c}\n"));
            }
            for c in bad_r {
                out.push_str(&format!("  {c}\n"));
            }
        }
        out
    }
}

/// Evaluates the published grid with `catalog` and compares it, and the
/// rankings derived from it, against the embedded reference values.
pub fn verify(catalog: &Catalog, options: &EvalOptions) -> Result<Verification> {
    let matrix = evaluate_matrix(
        catalog,
        &PUBLISHED_ARCHITECTURES,
        &catalog.applications,
        options,
    )?;
    Ok(Verification {
        cells: check_tables(&paper_tables(), &matrix, catalog),
        ranks: check_ranks(&paper_ranks(), &matrix, catalog)?,
    })
}
