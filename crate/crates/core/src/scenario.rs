//! Scenario configuration and the end-to-end run that produces a report.
//!
//! A scenario is a TOML document:
//!
//! ```toml
//! version = 1
//! architectures = ["remote-cloud", "cloudlet"]
//!
//! [applications]
//! ids = [1, 7]
//!
//! [[applications.custom]]
//! ids = [16]
//! name = "Photo backup"
//! upload = 5000
//! download = 1
//! processing = 200
//!
//! [network.segments.air]
//! latency_ms = 10
//! up_mbps = 0.5
//!
//! [network.nodes]
//! cloudlet = 8000
//!
//! [device]
//! idle_power = 25000000
//!
//! [tariff]
//! roaming = 50
//!
//! [options]
//! unit_mode = "kilobit"
//! delay_arithmetic = "int32"
//! ```
//!
//! Every section is optional; omitted values keep the built-in catalog.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::catalog::{
    builtin_catalog_with_units, ApplicationProfile, ArchitectureKind, Bandwidth, Catalog,
    PrivacyLevel, SizeUnit, Validate, Violation,
};
use crate::energy::{EvalOptions, MetricsRecord, OcmcaCostRule};
use crate::error::{Error, Result};
use crate::golden::{self, CellCheck, RankCheck, Tolerance, PUBLISHED_ARCHITECTURES};
use crate::path::DelayArithmetic;
use crate::ranking::{
    evaluate_matrix, ocmca_overall_rank, rank, CostColumns, OcmcaRank, RankOptions, RankTable,
    Scheme, UserClass,
};

pub const CONFIG_VERSION: u32 = 1;

/// Environment variable holding the default config path.
pub const CONFIG_ENV: &str = "MCC_BENCH_CONFIG";

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub version: u32,
    #[serde(default)]
    pub architectures: Option<Vec<String>>,
    #[serde(default)]
    pub applications: ApplicationsSection,
    #[serde(default)]
    pub network: NetworkSection,
    #[serde(default)]
    pub device: DeviceSection,
    #[serde(default)]
    pub tariff: TariffSection,
    #[serde(default)]
    pub options: OptionsSection,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ApplicationsSection {
    pub ids: Option<Vec<u32>>,
    #[serde(default)]
    pub custom: Vec<CustomApplication>,
}

/// Sizes are in the configured unit (kilobits unless `unit_mode` says
/// otherwise).
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomApplication {
    pub ids: Vec<u32>,
    pub name: String,
    pub upload: i64,
    pub download: i64,
    pub processing: i64,
    #[serde(default)]
    pub resource_sharing: bool,
    #[serde(default = "default_privacy")]
    pub privacy: String,
    #[serde(default)]
    pub runs_in_house: bool,
}

fn default_privacy() -> String {
    "low".into()
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkSection {
    #[serde(default)]
    pub segments: BTreeMap<String, SegmentOverride>,
    #[serde(default)]
    pub nodes: NodeSpeeds,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentOverride {
    pub latency_ms: Option<i64>,
    pub up_mbps: Option<f64>,
    pub down_mbps: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeSpeeds {
    pub cloudlet: Option<i64>,
    pub operator_cloud: Option<i64>,
    pub remote_cloud: Option<i64>,
    pub virtual_participant: Option<i64>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeviceSection {
    pub speed: Option<i64>,
    pub wifi_bit_energy: Option<f64>,
    pub lte_bit_energy: Option<f64>,
    pub idle_power: Option<f64>,
    pub compute_power: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TariffSection {
    pub local: Option<f64>,
    pub roaming: Option<f64>,
    pub wifi: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSection {
    pub unit_mode: Option<String>,
    /// `split` (default), `local` or `roaming`.
    pub cost_user_class: Option<String>,
    pub virtual_n: Option<u32>,
    pub multicast_m: Option<f64>,
    pub strict_table_mode: Option<bool>,
    /// `int32` (default) or `exact`.
    pub delay_arithmetic: Option<String>,
    /// `total-divided` (default) or `downlink-only`.
    pub ocmca_cost_rule: Option<String>,
}

impl ScenarioConfig {
    /// The published grid with default options.
    pub fn published() -> ScenarioConfig {
        ScenarioConfig {
            version: CONFIG_VERSION,
            ..Default::default()
        }
    }

    pub fn from_toml(text: &str) -> Result<ScenarioConfig> {
        toml::from_str(text).map_err(|e| Error::ConfigParse(e.to_string()))
    }

    pub fn load(path: &std::path::Path) -> Result<ScenarioConfig> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    /// Applies the overrides to the built-in catalog and checks the result.
    /// All problems are reported together, each under its field path.
    pub fn resolve(&self) -> Result<Scenario> {
        let mut bad: Vec<Violation> = Vec::new();
        let mut err = |field: &str, rule: String| bad.push(Violation::new(field, &rule));

        if self.version != CONFIG_VERSION {
            err(
                "version",
                format!(
                    "unsupported version {}, expected {CONFIG_VERSION}",
                    self.version
                ),
            );
        }

        let o = &self.options;
        let unit = parse_or(
            &o.unit_mode,
            SizeUnit::Kilobit,
            "options.unit_mode",
            &mut err,
        );
        let arithmetic = parse_or(
            &o.delay_arithmetic,
            DelayArithmetic::WrappingInt32,
            "options.delay_arithmetic",
            &mut err,
        );
        let ocmca_cost_rule = parse_or(
            &o.ocmca_cost_rule,
            OcmcaCostRule::TotalDivided,
            "options.ocmca_cost_rule",
            &mut err,
        );
        let cost_columns = match o.cost_user_class.as_deref() {
            None | Some("split") => CostColumns::Split,
            Some(s) => match s.parse::<UserClass>() {
                Ok(c) => CostColumns::Single(c),
                Err(_) => {
                    err(
                        "options.cost_user_class",
                        format!("expected split, local or roaming, got `{s}`"),
                    );
                    CostColumns::Split
                }
            },
        };

        let mut catalog = builtin_catalog_with_units(unit);
        if let Some(n) = o.virtual_n {
            if n == 0 {
                err("options.virtual_n", "must be ≥ 1".into());
            } else if let Some(vc) = catalog.architecture_mut(ArchitectureKind::VirtualCloud) {
                vc.participants = n;
            }
        }
        if let Some(m) = o.multicast_m {
            catalog.tariff.multicast_factor = m;
        }

        for (name, ov) in &self.network.segments {
            let field = format!("network.segments.{name}");
            let Some(seg) = catalog.segments.get_mut(name) else {
                err(&field, "unknown segment".into());
                continue;
            };
            if let Some(l) = ov.latency_ms {
                seg.one_way_latency_ms = l;
            }
            for (dir, val, slot) in [
                ("up_mbps", ov.up_mbps, &mut seg.up),
                ("down_mbps", ov.down_mbps, &mut seg.down),
            ] {
                if let Some(v) = val {
                    if v.is_finite() && v > 0.0 {
                        *slot = Bandwidth::mbps(v);
                    } else {
                        err(
                            &format!("{field}.{dir}"),
                            format!("must be a positive number, got {v}"),
                        );
                    }
                }
            }
        }
        let nodes = &self.network.nodes;
        for (value, slot) in [
            (nodes.cloudlet, &mut catalog.nodes.cloudlet.speed),
            (
                nodes.operator_cloud,
                &mut catalog.nodes.operator_cloud.speed,
            ),
            (nodes.remote_cloud, &mut catalog.nodes.remote_cloud.speed),
            (
                nodes.virtual_participant,
                &mut catalog.nodes.virtual_participant.speed,
            ),
            (self.device.speed, &mut catalog.nodes.mobile.speed),
        ] {
            if let Some(v) = value {
                *slot = v;
            }
        }
        let d = &self.device;
        for (value, slot) in [
            (d.wifi_bit_energy, &mut catalog.energy.wifi_bit_energy),
            (d.lte_bit_energy, &mut catalog.energy.lte_bit_energy),
            (d.idle_power, &mut catalog.energy.idle_power),
            (d.compute_power, &mut catalog.energy.compute_power),
            (self.tariff.local, &mut catalog.tariff.lte_local_bit_cost),
            (
                self.tariff.roaming,
                &mut catalog.tariff.lte_roaming_bit_cost,
            ),
            (self.tariff.wifi, &mut catalog.tariff.wifi_bit_cost),
        ] {
            if let Some(v) = value {
                *slot = v;
            }
        }

        for (i, c) in self.applications.custom.iter().enumerate() {
            let field = format!("applications.custom[{i}]");
            let privacy = match c.privacy.parse::<PrivacyLevel>() {
                Ok(p) => p,
                Err(_) => {
                    err(
                        &format!("{field}.privacy"),
                        format!("expected low, medium or high, got `{}`", c.privacy),
                    );
                    PrivacyLevel::Low
                }
            };
            if c.ids.is_empty() {
                err(&format!("{field}.ids"), "must list at least one id".into());
            }
            let k = unit.bits_per_unit();
            catalog.applications.push(ApplicationProfile {
                members: c.ids.clone(),
                name: c.name.clone(),
                upload_bits: c.upload.saturating_mul(k),
                download_bits: c.download.saturating_mul(k),
                processing: c.processing,
                resource_sharing: c.resource_sharing,
                privacy_requirement: privacy,
                runs_in_house: c.runs_in_house,
            });
        }

        let architectures = match &self.architectures {
            None => PUBLISHED_ARCHITECTURES.to_vec(),
            Some(names) => {
                let mut out = Vec::new();
                for (i, n) in names.iter().enumerate() {
                    match n.parse::<ArchitectureKind>() {
                        Ok(k) if !out.contains(&k) => out.push(k),
                        Ok(_) => err(&format!("architectures[{i}]"), format!("duplicate `{n}`")),
                        Err(_) => err(
                            &format!("architectures[{i}]"),
                            format!("unknown architecture `{n}`"),
                        ),
                    }
                }
                out
            }
        };

        let mut applications: Vec<ApplicationProfile> = Vec::new();
        match &self.applications.ids {
            None => applications = catalog.applications.clone(),
            Some(ids) => {
                for (i, id) in ids.iter().enumerate() {
                    match catalog.application(*id) {
                        Ok(p) if !applications.contains(p) => applications.push(p.clone()),
                        Ok(_) => {}
                        Err(_) => err(
                            &format!("applications.ids[{i}]"),
                            format!("unknown application {id}"),
                        ),
                    }
                }
                // Custom profiles are always part of the run.
                for p in &catalog.applications
                    [catalog.applications.len() - self.applications.custom.len()..]
                {
                    if !applications.contains(p) {
                        applications.push(p.clone());
                    }
                }
            }
        }

        for v in catalog.violations() {
            bad.push(Violation::new(catalog_field(&v.subject), &v.rule));
        }

        if !bad.is_empty() {
            return Err(Error::Invalid(bad));
        }
        Ok(Scenario {
            catalog,
            architectures,
            applications,
            eval: EvalOptions {
                arithmetic,
                ocmca_cost_rule,
            },
            rank: RankOptions { cost_columns },
            strict_table: o.strict_table_mode.unwrap_or(false),
        })
    }
}

fn parse_or<T: std::str::FromStr>(
    value: &Option<String>,
    default: T,
    field: &str,
    err: &mut impl FnMut(&str, String),
) -> T {
    match value {
        None => default,
        Some(s) => s.parse().unwrap_or_else(|_| {
            err(field, format!("unrecognised value `{s}`"));
            default
        }),
    }
}

/// Maps a catalog violation subject back to the config section it came from.
fn catalog_field(subject: &str) -> String {
    let section = if subject.starts_with("application") {
        "applications"
    } else if subject.starts_with("segment") {
        "network.segments"
    } else if subject.starts_with("node") {
        "network.nodes"
    } else if subject.starts_with("energy") {
        "device"
    } else if subject.starts_with("tariff") {
        "tariff"
    } else {
        "options"
    };
    if subject == section {
        section.to_string()
    } else {
        format!("{section} ({subject})")
    }
}

/// A validated, ready-to-run scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub catalog: Catalog,
    pub architectures: Vec<ArchitectureKind>,
    pub applications: Vec<ApplicationProfile>,
    pub eval: EvalOptions,
    pub rank: RankOptions,
    pub strict_table: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub matrix: Vec<MetricsRecord>,
    /// One table per grading scheme, over the non-OCMCA architectures.
    pub rank_tables: Vec<RankTable>,
    pub ocmca_ranks: Vec<OcmcaRank>,
    /// Comparison with the published tables. Empty when the catalog has
    /// been overridden, since the published values no longer apply.
    pub table_checks: Vec<CellCheck>,
    pub rank_checks: Vec<RankCheck>,
}

impl Report {
    /// Ledgered cells present in this report.
    pub fn ledger(&self) -> Vec<&CellCheck> {
        self.table_checks
            .iter()
            .filter(|c| c.cell.tolerance == Tolerance::Ledgered)
            .collect()
    }

    pub fn rank_table(&self, scheme: Scheme) -> Option<&RankTable> {
        self.rank_tables.iter().find(|t| t.scheme == scheme)
    }
}

pub fn run_scenario(config: &ScenarioConfig) -> Result<Report> {
    run(&config.resolve()?)
}

pub fn run(s: &Scenario) -> Result<Report> {
    let mut matrix = evaluate_matrix(&s.catalog, &s.architectures, &s.applications, &s.eval)?;

    let literature: Vec<MetricsRecord> = matrix
        .iter()
        .filter(|r| !r.architecture.is_ocmca())
        .cloned()
        .collect();
    let rank_tables = if literature.is_empty() {
        Vec::new()
    } else {
        Scheme::ALL
            .into_iter()
            .map(|sc| rank(&literature, &s.catalog, sc, &s.rank))
            .collect::<Result<_>>()?
    };
    let ocmca_ranks = ocmca_overall_rank(&matrix, &s.catalog)?;

    let comparable = s.catalog == builtin_catalog_with_units(SizeUnit::Kilobit);
    let (table_checks, rank_checks) = if comparable {
        let present = |arch: ArchitectureKind, app: &str| {
            matrix
                .iter()
                .any(|r| r.architecture == arch && r.application == app)
        };
        let cells: Vec<_> = golden::paper_tables()
            .into_iter()
            .filter(|c| present(c.architecture, &c.application))
            .collect();
        let checks = golden::check_tables(&cells, &matrix, &s.catalog);
        let full_grid = PUBLISHED_ARCHITECTURES
            .iter()
            .all(|a| s.architectures.contains(a))
            && s.applications.len() == s.catalog.applications.len()
            && s.rank == RankOptions::default();
        let ranks = if full_grid {
            golden::check_ranks(&golden::paper_ranks(), &matrix, &s.catalog)?
        } else {
            Vec::new()
        };
        (checks, ranks)
    } else {
        (Vec::new(), Vec::new())
    };

    for record in &mut matrix {
        let mut ledgered = Vec::new();
        let mut mismatched = Vec::new();
        for c in table_checks.iter().filter(|c| {
            c.cell.architecture == record.architecture && c.cell.application == record.application
        }) {
            if c.cell.tolerance == Tolerance::Ledgered {
                ledgered.push(c.cell.metric.name());
            } else if !c.within {
                mismatched.push(c.cell.metric.name());
            }
        }
        let mut notes = Vec::new();
        if !ledgered.is_empty() {
            notes.push(format!("ledgered:{}", ledgered.join("+")));
        }
        if !mismatched.is_empty() {
            notes.push(format!("mismatch:{}", mismatched.join("+")));
        }
        if !notes.is_empty() {
            record.deviation = Some(notes.join(" "));
        }
    }

    Ok(Report {
        matrix,
        rank_tables,
        ocmca_ranks,
        table_checks,
        rank_checks,
    })
}
