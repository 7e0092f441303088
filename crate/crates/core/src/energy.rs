//! Device energy, monetary cost, and per-cell evaluation.

use crate::catalog::{
    ApplicationProfile, ArchitectureKind, ArchitectureSpec, Catalog, DeviceEnergyModel,
    IdleAccounting, TariffModel,
};
use crate::error::{Error, Result};
use crate::path::{build_path, millis_f64, offload_delay_with, DataPath, DelayArithmetic, Millis};

/// Device energy in power units for one offloaded job.
///
/// `delay_ms` is the offload window the radio stays active for; only the
/// full-window convention reads it.
pub fn offload_energy(
    spec: &ArchitectureSpec,
    path: &DataPath,
    app: &ApplicationProfile,
    delay_ms: &Millis,
    model: &DeviceEnergyModel,
) -> Result<f64> {
    if app.upload_bits < 0 || app.download_bits < 0 {
        return Err(Error::NegativeInput("data size"));
    }
    if app.processing < 0 {
        return Err(Error::NegativeInput("processing"));
    }
    if *delay_ms < Millis::from_integer(0) {
        return Err(Error::NegativeInput("delay"));
    }
    let bits = app.total_bits() as f64;
    let processing_s =
        |speed: i64, share: u32| app.processing as f64 / share.max(1) as f64 / speed as f64;
    let energy = match spec.idle_accounting {
        IdleAccounting::LocalCompute => model.compute_power * processing_s(path.processor.speed, 1),
        IdleAccounting::FullWindow => {
            model.lte_bit_energy * bits + model.idle_power * millis_f64(delay_ms) / 1000.0
        }
        IdleAccounting::ProcessingOnly => {
            model.wifi_bit_energy * bits + model.idle_power * processing_s(path.processor.speed, 1)
        }
        IdleAccounting::OwnShareCompute => {
            model.wifi_bit_energy * bits
                + model.compute_power * processing_s(path.processor.speed, path.participants)
        }
    };
    Ok(energy)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostRange {
    pub low: f64,
    pub high: f64,
}

impl CostRange {
    pub fn point(v: f64) -> Self {
        CostRange { low: v, high: v }
    }

    pub fn is_point(&self) -> bool {
        self.low == self.high
    }
}

/// What the multicast discount applies to for the operator cloud.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OcmcaCostRule {
    /// Whole payload priced at `1/m` for the lower bound.
    #[default]
    TotalDivided,
    /// Only the downlink is multicast; the uplink stays unicast-priced.
    DownlinkOnly,
}

impl std::str::FromStr for OcmcaCostRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "total" | "total-divided" => Ok(OcmcaCostRule::TotalDivided),
            "downlink" | "downlink-only" => Ok(OcmcaCostRule::DownlinkOnly),
            other => Err(Error::ConfigParse(format!(
                "unknown ocmca_cost_rule `{other}`"
            ))),
        }
    }
}

/// Money spent by the user on the network for one job.
///
/// The remote cloud range spans local to roaming subscribers; the operator
/// cloud range spans multicast to unicast delivery. The virtual cloud only
/// costs anything when the job fetches shared resources, in which case all
/// participants' Wi-Fi traffic is billed.
pub fn monetary_cost(
    spec: &ArchitectureSpec,
    app: &ApplicationProfile,
    tariff: &TariffModel,
    rule: OcmcaCostRule,
) -> CostRange {
    let total = app.total_bits() as f64;
    match spec.kind {
        ArchitectureKind::InHouse => CostRange::point(0.0),
        ArchitectureKind::RemoteCloud => CostRange {
            low: total * tariff.lte_local_bit_cost,
            high: total * tariff.lte_roaming_bit_cost,
        },
        ArchitectureKind::Cloudlet => CostRange::point(total * tariff.wifi_bit_cost),
        ArchitectureKind::VirtualCloud => {
            if app.resource_sharing {
                CostRange::point(spec.participants as f64 * total * tariff.wifi_bit_cost)
            } else {
                CostRange::point(0.0)
            }
        }
        ArchitectureKind::OcmcaUnicast | ArchitectureKind::OcmcaMulticast => {
            let local = tariff.lte_local_bit_cost;
            let m = tariff.multicast_factor;
            let low = match rule {
                OcmcaCostRule::TotalDivided => total * local / m,
                OcmcaCostRule::DownlinkOnly => {
                    app.upload_bits as f64 * local + app.download_bits as f64 * local / m
                }
            };
            CostRange {
                low,
                high: total * local,
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EvalOptions {
    pub arithmetic: DelayArithmetic,
    pub ocmca_cost_rule: OcmcaCostRule,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Metrics {
    pub delay_exact: Millis,
    pub delay_ms: i64,
    pub energy: f64,
    pub cost: CostRange,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricsRecord {
    pub architecture: ArchitectureKind,
    /// Row label, e.g. `"6 & 10"`.
    pub application: String,
    /// `None` exactly when disqualified.
    pub metrics: Option<Metrics>,
    pub disqualified: bool,
    pub deviation: Option<String>,
}

impl MetricsRecord {
    pub fn cost_low(&self) -> Option<f64> {
        self.metrics.as_ref().map(|m| m.cost.low)
    }

    pub fn cost_high(&self) -> Option<f64> {
        self.metrics.as_ref().map(|m| m.cost.high)
    }

    pub fn delay_ms(&self) -> Option<i64> {
        self.metrics.as_ref().map(|m| m.delay_ms)
    }

    pub fn energy(&self) -> Option<f64> {
        self.metrics.as_ref().map(|m| m.energy)
    }
}

/// Architecture privacy below the application's requirement.
pub fn is_disqualified(spec: &ArchitectureSpec, app: &ApplicationProfile) -> bool {
    spec.qualitative.privacy < app.privacy_requirement
}

/// Delay, energy and cost of one (architecture, application) pair.
///
/// Energy is charged over the reported (integer) delay, the window the
/// published power columns were computed on.
pub fn evaluate_cell(
    kind: ArchitectureKind,
    app: &ApplicationProfile,
    catalog: &Catalog,
    options: &EvalOptions,
) -> Result<MetricsRecord> {
    let spec = catalog.architecture(kind)?;
    let mut record = MetricsRecord {
        architecture: kind,
        application: app.label(),
        metrics: None,
        disqualified: false,
        deviation: None,
    };
    if is_disqualified(spec, app) {
        record.disqualified = true;
        return Ok(record);
    }
    let path = build_path(kind, catalog)?;
    let delay = offload_delay_with(&path, app, options.arithmetic)?;
    let window = Millis::from_integer(delay.reported.max(0) as i128);
    let energy = offload_energy(spec, &path, app, &window, &catalog.energy)?;
    let cost = monetary_cost(spec, app, &catalog.tariff, options.ocmca_cost_rule);
    record.metrics = Some(Metrics {
        delay_exact: delay.exact,
        delay_ms: delay.reported,
        energy,
        cost,
    });
    Ok(record)
}
