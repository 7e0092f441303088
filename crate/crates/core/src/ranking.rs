//! Evaluation matrix and ordinal grading schemes.
//!
//! Ranks use standard competition ranking (1, 2, 2, 4): equal values share
//! the smaller rank and the next distinct value is ranked one past the
//! number of strictly better entries. In-house execution is a baseline for
//! the quantifiable schemes: it is ranked against the offloading
//! architectures but never pushes them down.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::catalog::{ApplicationProfile, ArchitectureKind, Catalog, Qualitative};
use crate::energy::{evaluate_cell, EvalOptions, MetricsRecord};
use crate::error::{Error, Result};

/// One record per (architecture, application) pair. In-house records exist
/// only for applications that can run standalone.
pub fn evaluate_matrix(
    catalog: &Catalog,
    architectures: &[ArchitectureKind],
    applications: &[ApplicationProfile],
    options: &EvalOptions,
) -> Result<Vec<MetricsRecord>> {
    let mut out = Vec::with_capacity(architectures.len() * applications.len());
    for app in applications {
        for &kind in architectures {
            if kind == ArchitectureKind::InHouse && !app.runs_in_house {
                continue;
            }
            out.push(evaluate_cell(kind, app, catalog, options)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    Delay,
    Power,
    Cost,
    PrivacyMobility,
    Scalability,
}

impl Scheme {
    pub const ALL: [Scheme; 5] = [
        Scheme::Delay,
        Scheme::Power,
        Scheme::Cost,
        Scheme::PrivacyMobility,
        Scheme::Scalability,
    ];

    /// 1-based scheme number as used on the command line.
    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_number(n: u8) -> Result<Scheme> {
        Scheme::ALL
            .get((n as usize).wrapping_sub(1))
            .copied()
            .ok_or_else(|| Error::UnknownScheme(n.to_string()))
    }

    fn is_quantifiable(self) -> bool {
        matches!(self, Scheme::Delay | Scheme::Power | Scheme::Cost)
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(n) = s.parse::<u8>() {
            return Scheme::from_number(n);
        }
        match s.to_ascii_lowercase().as_str() {
            "delay" => Ok(Scheme::Delay),
            "power" | "energy" => Ok(Scheme::Power),
            "cost" => Ok(Scheme::Cost),
            "privacy-mobility" | "privacy" => Ok(Scheme::PrivacyMobility),
            "scalability" => Ok(Scheme::Scalability),
            _ => Err(Error::UnknownScheme(s.to_string())),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Delay => "delay",
            Scheme::Power => "power",
            Scheme::Cost => "cost",
            Scheme::PrivacyMobility => "privacy-mobility",
            Scheme::Scalability => "scalability",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UserClass {
    Local,
    Roaming,
}

impl FromStr for UserClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "local" => Ok(UserClass::Local),
            "roaming" => Ok(UserClass::Roaming),
            other => Err(Error::ConfigParse(format!(
                "unknown cost_user_class `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CostColumns {
    /// Remote cloud appears twice, priced for local and roaming users.
    #[default]
    Split,
    Single(UserClass),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RankOptions {
    pub cost_columns: CostColumns,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RankColumn {
    pub architecture: ArchitectureKind,
    /// Set only for the remote cloud under the cost scheme.
    pub user_class: Option<UserClass>,
}

impl RankColumn {
    pub fn label(&self) -> String {
        match self.user_class {
            None => self.architecture.slug().to_string(),
            Some(UserClass::Local) => format!("{}-local", self.architecture.slug()),
            Some(UserClass::Roaming) => format!("{}-roaming", self.architecture.slug()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankCell {
    Rank(u32),
    Disqualified,
    NotApplicable,
}

impl fmt::Display for RankCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankCell::Rank(r) => write!(f, "{r}"),
            RankCell::Disqualified => f.write_str("X"),
            RankCell::NotApplicable => f.write_str("-"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankRow {
    pub application: String,
    pub cells: Vec<RankCell>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankTable {
    pub scheme: Scheme,
    pub columns: Vec<RankColumn>,
    pub rows: Vec<RankRow>,
}

impl RankTable {
    pub fn cell(&self, application: &str, column: &RankColumn) -> Option<RankCell> {
        let c = self.columns.iter().position(|x| x == column)?;
        let row = self.rows.iter().find(|r| r.application == application)?;
        Some(row.cells[c])
    }
}

/// Lower is better, compared lexicographically.
type Key = [f64; 3];

fn cmp_key(a: &Key, b: &Key) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.partial_cmp(y).unwrap_or(Ordering::Equal))
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal)
}

fn qualitative_key(scheme: Scheme, q: &Qualitative) -> Option<Key> {
    match scheme {
        Scheme::PrivacyMobility => Some([
            -(q.privacy as u8 as f64),
            -(q.mobility as u8 as f64),
            -(q.on_device as u8 as f64),
        ]),
        Scheme::Scalability => q.scalability.map(|s| [-(s as u8 as f64), 0.0, 0.0]),
        _ => None,
    }
}

fn metric_key(scheme: Scheme, record: &MetricsRecord, class: Option<UserClass>) -> Option<Key> {
    let m = record.metrics.as_ref()?;
    let v = match scheme {
        Scheme::Delay => m.delay_ms as f64,
        Scheme::Power => m.energy,
        Scheme::Cost => match class {
            Some(UserClass::Roaming) => m.cost.high,
            _ => m.cost.low,
        },
        _ => return None,
    };
    Some([v, 0.0, 0.0])
}

/// Competition ranks for `pool`; `baseline` entries are ranked against the
/// pool without displacing it.
fn competition_ranks(entries: &[(Key, bool)]) -> Vec<u32> {
    entries
        .iter()
        .map(|(key, is_baseline)| {
            let better = entries
                .iter()
                .filter(|(other, other_baseline)| {
                    (*is_baseline || !*other_baseline) && cmp_key(other, key) == Ordering::Less
                })
                .count();
            1 + better as u32
        })
        .collect()
}

fn columns_for(
    scheme: Scheme,
    architectures: &[ArchitectureKind],
    options: &RankOptions,
) -> Vec<RankColumn> {
    let mut cols = Vec::new();
    for &a in architectures {
        if scheme == Scheme::Cost && a == ArchitectureKind::RemoteCloud {
            match options.cost_columns {
                CostColumns::Split => {
                    for uc in [UserClass::Local, UserClass::Roaming] {
                        cols.push(RankColumn {
                            architecture: a,
                            user_class: Some(uc),
                        });
                    }
                }
                CostColumns::Single(uc) => cols.push(RankColumn {
                    architecture: a,
                    user_class: Some(uc),
                }),
            }
        } else {
            cols.push(RankColumn {
                architecture: a,
                user_class: None,
            });
        }
    }
    cols
}

/// Ranks every architecture present in `matrix`, row by row.
pub fn rank(
    matrix: &[MetricsRecord],
    catalog: &Catalog,
    scheme: Scheme,
    options: &RankOptions,
) -> Result<RankTable> {
    let mut architectures: Vec<ArchitectureKind> = Vec::new();
    let mut applications: Vec<String> = Vec::new();
    for r in matrix {
        if !architectures.contains(&r.architecture) {
            architectures.push(r.architecture);
        }
        if !applications.contains(&r.application) {
            applications.push(r.application.clone());
        }
    }
    architectures.sort();
    let columns = columns_for(scheme, &architectures, options);

    let mut rows = Vec::with_capacity(applications.len());
    for app in applications {
        let mut cells = vec![RankCell::NotApplicable; columns.len()];
        let mut ranked: Vec<(usize, Key, bool)> = Vec::new();
        for (i, col) in columns.iter().enumerate() {
            let Some(record) = matrix
                .iter()
                .find(|r| r.application == app && r.architecture == col.architecture)
            else {
                continue;
            };
            if record.disqualified {
                cells[i] = RankCell::Disqualified;
                continue;
            }
            let key = if scheme.is_quantifiable() {
                metric_key(scheme, record, col.user_class)
            } else {
                qualitative_key(scheme, &catalog.architecture(col.architecture)?.qualitative)
            };
            if let Some(key) = key {
                let baseline =
                    scheme.is_quantifiable() && col.architecture == ArchitectureKind::InHouse;
                ranked.push((i, key, baseline));
            }
        }
        let entries: Vec<(Key, bool)> = ranked.iter().map(|(_, k, b)| (*k, *b)).collect();
        for ((i, _, _), r) in ranked.iter().zip(competition_ranks(&entries)) {
            cells[*i] = RankCell::Rank(r);
        }
        rows.push(RankRow {
            application: app,
            cells,
        });
    }
    Ok(RankTable {
        scheme,
        columns,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OcmcaRank {
    pub application: String,
    pub cost: u32,
    pub delay: u32,
    pub power: u32,
    /// Scalability, mobility and privacy together.
    pub qualitative: u32,
}

/// Where the operator cloud would land among all other architectures, per
/// application, on cost, delay, power and the qualitative attributes.
pub fn ocmca_overall_rank(matrix: &[MetricsRecord], catalog: &Catalog) -> Result<Vec<OcmcaRank>> {
    let mut out = Vec::new();
    for ocmca in matrix.iter().filter(|r| r.architecture.is_ocmca()) {
        let Some(own) = ocmca.metrics.as_ref() else {
            continue;
        };
        let others: Vec<&MetricsRecord> = matrix
            .iter()
            .filter(|r| {
                r.application == ocmca.application && !r.architecture.is_ocmca() && !r.disqualified
            })
            .collect();
        let place = |value: f64, get: &dyn Fn(&MetricsRecord) -> Option<f64>| -> u32 {
            1 + others
                .iter()
                .filter_map(|r| get(r))
                .filter(|v| *v < value)
                .count() as u32
        };
        let own_q = catalog.architecture(ocmca.architecture)?.qualitative;
        let q_key = |q: &Qualitative| {
            (
                q.privacy,
                q.mobility,
                q.scalability.unwrap_or(crate::catalog::Scalability::Low),
            )
        };
        let mut qualitative = 1;
        for r in &others {
            if r.architecture == ArchitectureKind::InHouse {
                continue;
            }
            if q_key(&catalog.architecture(r.architecture)?.qualitative) > q_key(&own_q) {
                qualitative += 1;
            }
        }
        out.push(OcmcaRank {
            application: ocmca.application.clone(),
            cost: place(own.cost.low, &|r| r.cost_low()),
            delay: place(own.delay_ms as f64, &|r| r.delay_ms().map(|d| d as f64)),
            power: place(own.energy, &|r| r.energy()),
            qualitative,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_catalog;
    use crate::path::DelayArithmetic;
    use ArchitectureKind::*;

    const LITERATURE: [ArchitectureKind; 4] = [InHouse, RemoteCloud, VirtualCloud, Cloudlet];

    fn matrix(archs: &[ArchitectureKind]) -> (Catalog, Vec<MetricsRecord>) {
        let c = builtin_catalog();
        let opts = EvalOptions {
            arithmetic: DelayArithmetic::WrappingInt32,
            ..Default::default()
        };
        let m = evaluate_matrix(&c, archs, &c.applications, &opts).unwrap();
        (c, m)
    }

    fn col(a: ArchitectureKind) -> RankColumn {
        RankColumn {
            architecture: a,
            user_class: None,
        }
    }

    #[test]
    fn grid_shape() {
        let (c, m) = matrix(&[InHouse, RemoteCloud, VirtualCloud, Cloudlet, OcmcaUnicast]);
        assert_eq!(m.len(), 11 * 4 + 2);
        assert!(
            evaluate_matrix(&c, &[RemoteCloud], &[], &EvalOptions::default())
                .unwrap()
                .is_empty()
        );
        let one = evaluate_matrix(
            &c,
            &[Cloudlet],
            &c.applications[..1],
            &EvalOptions::default(),
        )
        .unwrap();
        assert_eq!(one.len(), 1);
    }

    #[test]
    fn delay_scheme_row_one() {
        let (c, m) = matrix(&LITERATURE);
        let t = rank(&m, &c, Scheme::Delay, &RankOptions::default()).unwrap();
        let got: Vec<_> = LITERATURE
            .iter()
            .map(|a| t.cell("1", &col(*a)).unwrap())
            .collect();
        assert_eq!(
            got,
            [
                RankCell::Rank(4),
                RankCell::Rank(1),
                RankCell::Rank(2),
                RankCell::Rank(3)
            ]
        );
        assert_eq!(
            t.cell("3 & 4", &col(InHouse)),
            Some(RankCell::NotApplicable)
        );
        assert_eq!(
            t.cell("3 & 4", &col(VirtualCloud)),
            Some(RankCell::Disqualified)
        );
    }

    #[test]
    fn cost_scheme_splits_remote() {
        let (c, m) = matrix(&LITERATURE);
        let t = rank(&m, &c, Scheme::Cost, &RankOptions::default()).unwrap();
        let row = &t.rows.iter().find(|r| r.application == "1").unwrap().cells;
        let want = [1, 2, 4, 1, 2].map(RankCell::Rank);
        assert_eq!(row.as_slice(), want.as_slice());
    }

    #[test]
    fn single_cost_column() {
        let (c, m) = matrix(&LITERATURE);
        let opts = RankOptions {
            cost_columns: CostColumns::Single(UserClass::Roaming),
        };
        let t = rank(&m, &c, Scheme::Cost, &opts).unwrap();
        assert_eq!(t.columns.len(), 4);
    }

    #[test]
    fn scalability_and_privacy() {
        let (c, m) = matrix(&LITERATURE);
        let s = rank(&m, &c, Scheme::Scalability, &RankOptions::default()).unwrap();
        assert_eq!(s.cell("5", &col(RemoteCloud)), Some(RankCell::Rank(1)));
        assert_eq!(s.cell("5", &col(VirtualCloud)), Some(RankCell::Rank(1)));
        assert_eq!(s.cell("5", &col(Cloudlet)), Some(RankCell::Rank(3)));
        assert_eq!(s.cell("1", &col(InHouse)), Some(RankCell::NotApplicable));
        let p = rank(&m, &c, Scheme::PrivacyMobility, &RankOptions::default()).unwrap();
        let got: Vec<_> = LITERATURE
            .iter()
            .map(|a| p.cell("2", &col(*a)).unwrap())
            .collect();
        assert_eq!(got, [1, 2, 3, 4].map(RankCell::Rank));
    }

    #[test]
    fn ocmca_rows() {
        let (c, m) = matrix(&[InHouse, RemoteCloud, VirtualCloud, Cloudlet, OcmcaUnicast]);
        let o = ocmca_overall_rank(&m, &c).unwrap();
        let five = o.iter().find(|r| r.application == "5").unwrap();
        assert_eq!((five.cost, five.delay, five.power), (1, 3, 3));
        assert!(o.iter().all(|r| r.qualitative == 1));
    }

    #[test]
    fn scheme_parsing() {
        assert_eq!(Scheme::from_number(1).unwrap(), Scheme::Delay);
        assert_eq!(Scheme::from_number(5).unwrap(), Scheme::Scalability);
        assert!(Scheme::from_number(0).is_err());
        assert!(Scheme::from_number(6).is_err());
        assert!("bogus".parse::<Scheme>().is_err());
    }

    #[test]
    fn competition_ties() {
        let e = |v: f64| ([v, 0.0, 0.0], false);
        assert_eq!(
            competition_ranks(&[e(1.0), e(2.0), e(2.0), e(3.0)]),
            [1, 2, 2, 4]
        );
        let base = ([0.0, 0.0, 0.0], true);
        assert_eq!(competition_ranks(&[base, e(0.0), e(1.0)]), [1, 1, 2]);
    }
}
