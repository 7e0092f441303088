//! Domain types and the built-in parameter catalog.
//!
//! Every number here is one of the published profiling constants: the
//! application profiles, the LTE transport figures, the end-device speeds,
//! the per-bit radio energy and tariffs, and the qualitative attributes of
//! each architecture. Application sizes are stored in bits; the catalog
//! interprets the published size column as kilobits unless asked otherwise.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::error::{Error, Result};

/// How the published size column is converted into bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SizeUnit {
    /// 1 table unit = 1000 bits. Reproduces the published delay figures.
    #[default]
    Kilobit,
    /// 1 table unit = 8000 bits.
    Kilobyte,
}

impl SizeUnit {
    pub fn bits_per_unit(self) -> i64 {
        match self {
            SizeUnit::Kilobit => 1_000,
            SizeUnit::Kilobyte => 8_000,
        }
    }
}

impl FromStr for SizeUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kilobit" | "kbit" => Ok(SizeUnit::Kilobit),
            "kilobyte" | "kbyte" => Ok(SizeUnit::Kilobyte),
            other => Err(Error::ConfigParse(format!("unknown unit_mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrivacyLevel {
    Low,
    Medium,
    High,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mobility {
    VeryLow,
    Medium,
    High,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalability {
    Low,
    High,
}

impl FromStr for PrivacyLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "high" => Ok(PrivacyLevel::High),
            "medium" => Ok(PrivacyLevel::Medium),
            "low" => Ok(PrivacyLevel::Low),
            other => Err(Error::ConfigParse(format!(
                "unknown privacy level `{other}`"
            ))),
        }
    }
}

impl fmt::Display for PrivacyLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrivacyLevel::High => "High",
            PrivacyLevel::Medium => "Medium",
            PrivacyLevel::Low => "Low",
        })
    }
}

impl fmt::Display for Mobility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // The published tables print very-low mobility as "Low".
        f.write_str(match self {
            Mobility::High => "High",
            Mobility::Medium => "Medium",
            Mobility::VeryLow => "Low",
        })
    }
}

impl fmt::Display for Scalability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scalability::High => "High",
            Scalability::Low => "Low",
        })
    }
}

/// One row of the application profiling table.
///
/// Several application ids share a row ("3 & 4"); `members` lists them.
#[derive(Debug, Clone, PartialEq)]
pub struct ApplicationProfile {
    pub members: Vec<u32>,
    pub name: String,
    pub upload_bits: i64,
    pub download_bits: i64,
    pub processing: i64,
    pub resource_sharing: bool,
    /// Minimum privacy an architecture must offer to be admitted.
    pub privacy_requirement: PrivacyLevel,
    /// Whether the device can run the job standalone at all.
    pub runs_in_house: bool,
}

impl ApplicationProfile {
    /// Row label as printed in the tables, e.g. `"3 & 4"`.
    pub fn label(&self) -> String {
        self.members
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" & ")
    }

    pub fn total_bits(&self) -> i64 {
        self.upload_bits + self.download_bits
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bandwidth {
    /// Bits per second.
    Finite(i64),
    /// Pure-latency hop: serialization takes no time.
    Infinite,
}

impl Bandwidth {
    pub fn mbps(m: f64) -> Bandwidth {
        Bandwidth::Finite((m * 1e6).round() as i64)
    }

    pub fn scaled(self, k: i64) -> Bandwidth {
        match self {
            Bandwidth::Finite(b) => Bandwidth::Finite(b * k),
            Bandwidth::Infinite => Bandwidth::Infinite,
        }
    }
}

impl fmt::Display for Bandwidth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bandwidth::Finite(b) => write!(f, "{} Mbps", *b as f64 / 1e6),
            Bandwidth::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NetworkSegment {
    pub name: String,
    pub one_way_latency_ms: i64,
    pub up: Bandwidth,
    pub down: Bandwidth,
}

impl NetworkSegment {
    pub fn new(name: &str, one_way_latency_ms: i64, up: Bandwidth, down: Bandwidth) -> Self {
        NetworkSegment {
            name: name.to_string(),
            one_way_latency_ms,
            up,
            down,
        }
    }

    pub fn latency_only(name: &str, one_way_latency_ms: i64) -> Self {
        Self::new(
            name,
            one_way_latency_ms,
            Bandwidth::Infinite,
            Bandwidth::Infinite,
        )
    }
}

/// Named segments, in catalog order.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentSet(Vec<NetworkSegment>);

impl SegmentSet {
    pub fn new(segments: Vec<NetworkSegment>) -> Self {
        SegmentSet(segments)
    }

    pub fn get(&self, name: &str) -> Option<&NetworkSegment> {
        self.0.iter().find(|s| s.name == name)
    }

    pub fn get_mut(&mut self, name: &str) -> Option<&mut NetworkSegment> {
        self.0.iter_mut().find(|s| s.name == name)
    }

    pub fn require(&self, name: &str) -> Result<&NetworkSegment> {
        self.get(name)
            .ok_or_else(|| Error::MissingSegment(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &NetworkSegment> {
        self.0.iter()
    }
}

impl Index<&str> for SegmentSet {
    type Output = NetworkSegment;

    fn index(&self, name: &str) -> &NetworkSegment {
        self.get(name)
            .unwrap_or_else(|| panic!("no segment named `{name}`"))
    }
}

pub mod segment_names {
    pub const AIR: &str = "air";
    pub const ENB: &str = "enb";
    pub const BACKHAUL_CORE: &str = "backhaul_core";
    pub const GATEWAYS: &str = "gateways";
    pub const INTERNET: &str = "internet";
    pub const WIFI: &str = "wifi";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    MobileDevice,
    CloudletServer,
    OperatorCloud,
    RemoteCloud,
    VirtualCloudParticipant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProcessingNode {
    pub kind: NodeKind,
    /// Processing units per second.
    pub speed: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Nodes {
    pub mobile: ProcessingNode,
    pub cloudlet: ProcessingNode,
    pub operator_cloud: ProcessingNode,
    pub remote_cloud: ProcessingNode,
    pub virtual_participant: ProcessingNode,
}

impl Nodes {
    pub fn iter(&self) -> impl Iterator<Item = &ProcessingNode> {
        [
            &self.mobile,
            &self.cloudlet,
            &self.operator_cloud,
            &self.remote_cloud,
            &self.virtual_participant,
        ]
        .into_iter()
    }
}

/// Power units are abstract; only their ratios matter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviceEnergyModel {
    pub wifi_bit_energy: f64,
    pub lte_bit_energy: f64,
    pub idle_power: f64,
    pub compute_power: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TariffModel {
    pub lte_local_bit_cost: f64,
    pub lte_roaming_bit_cost: f64,
    pub wifi_bit_cost: f64,
    /// Multicast price discount `m`: a multicast bit costs `1/m` of a unicast bit.
    pub multicast_factor: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArchitectureKind {
    InHouse,
    RemoteCloud,
    VirtualCloud,
    Cloudlet,
    OcmcaUnicast,
    OcmcaMulticast,
}

impl ArchitectureKind {
    pub const ALL: [ArchitectureKind; 6] = [
        ArchitectureKind::InHouse,
        ArchitectureKind::RemoteCloud,
        ArchitectureKind::VirtualCloud,
        ArchitectureKind::Cloudlet,
        ArchitectureKind::OcmcaUnicast,
        ArchitectureKind::OcmcaMulticast,
    ];

    pub fn is_ocmca(self) -> bool {
        matches!(
            self,
            ArchitectureKind::OcmcaUnicast | ArchitectureKind::OcmcaMulticast
        )
    }

    pub fn slug(self) -> &'static str {
        match self {
            ArchitectureKind::InHouse => "in-house",
            ArchitectureKind::RemoteCloud => "remote-cloud",
            ArchitectureKind::VirtualCloud => "virtual-cloud",
            ArchitectureKind::Cloudlet => "cloudlet",
            ArchitectureKind::OcmcaUnicast => "ocmca-unicast",
            ArchitectureKind::OcmcaMulticast => "ocmca-multicast",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            ArchitectureKind::InHouse => "Executing in-house",
            ArchitectureKind::RemoteCloud => "Cloud computing with mobile terminals",
            ArchitectureKind::VirtualCloud => "Virtual cloud computing provider",
            ArchitectureKind::Cloudlet => "Cloudlet",
            ArchitectureKind::OcmcaUnicast => "OCMCA (unicast)",
            ArchitectureKind::OcmcaMulticast => "OCMCA (multicast)",
        }
    }
}

impl fmt::Display for ArchitectureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for ArchitectureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        ArchitectureKind::ALL
            .into_iter()
            .find(|k| k.slug() == norm)
            .or(match norm.as_str() {
                "inhouse" => Some(ArchitectureKind::InHouse),
                "remote" | "remotecloud" => Some(ArchitectureKind::RemoteCloud),
                "virtual" | "virtualcloud" => Some(ArchitectureKind::VirtualCloud),
                "ocmca" => Some(ArchitectureKind::OcmcaUnicast),
                _ => None,
            })
            .ok_or_else(|| Error::UnknownArchitecture(s.to_string()))
    }
}

/// Non-quantifiable attributes. `scalability` is `None` where it does not
/// apply (standalone execution).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Qualitative {
    pub privacy: PrivacyLevel,
    pub mobility: Mobility,
    pub scalability: Option<Scalability>,
    pub multicast_capable: bool,
    /// Data never leaves the handset. Breaks the privacy tie with a trusted
    /// operator or cloud provider.
    pub on_device: bool,
}

impl Qualitative {
    /// Privacy, mobility, scalability and multicast as printed in a results
    /// table; `-` where an attribute does not apply.
    pub fn labels(&self) -> [String; 4] {
        let multicast = if self.on_device {
            "-"
        } else if self.multicast_capable {
            "Yes"
        } else {
            "No"
        };
        [
            self.privacy.to_string(),
            self.mobility.to_string(),
            self.scalability
                .map_or_else(|| "-".to_string(), |s| s.to_string()),
            multicast.to_string(),
        ]
    }
}

/// Idle-power accounting used for the device energy of an architecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdleAccounting {
    /// Computing locally for the whole job at `compute_power`.
    LocalCompute,
    /// LTE radio held in short-DRX for the whole offload window.
    FullWindow,
    /// Idle only while the remote server processes.
    ProcessingOnly,
    /// Device computes its own share at `compute_power`, no idle term.
    OwnShareCompute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArchitectureSpec {
    pub kind: ArchitectureKind,
    pub qualitative: Qualitative,
    /// Participants sharing the job; only meaningful for the virtual cloud.
    pub participants: u32,
    pub idle_accounting: IdleAccounting,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    pub applications: Vec<ApplicationProfile>,
    pub segments: SegmentSet,
    pub nodes: Nodes,
    pub energy: DeviceEnergyModel,
    pub tariff: TariffModel,
    pub architectures: Vec<ArchitectureSpec>,
}

impl Catalog {
    /// Resolves an application id (1–15) to its profile row.
    pub fn application(&self, id: u32) -> Result<&ApplicationProfile> {
        self.applications
            .iter()
            .find(|p| p.members.contains(&id))
            .ok_or(Error::UnknownApplication(id))
    }

    pub fn architecture(&self, kind: ArchitectureKind) -> Result<&ArchitectureSpec> {
        self.architectures
            .iter()
            .find(|a| a.kind == kind)
            .ok_or_else(|| Error::UnknownArchitecture(kind.slug().to_string()))
    }

    pub fn architecture_mut(&mut self, kind: ArchitectureKind) -> Option<&mut ArchitectureSpec> {
        self.architectures.iter_mut().find(|a| a.kind == kind)
    }
}

/// The published catalog with sizes read as kilobits.
pub fn builtin_catalog() -> Catalog {
    builtin_catalog_with_units(SizeUnit::Kilobit)
}

pub fn builtin_catalog_with_units(unit: SizeUnit) -> Catalog {
    Catalog {
        applications: builtin_applications(unit),
        segments: builtin_segments(),
        nodes: builtin_nodes(),
        energy: DeviceEnergyModel {
            wifi_bit_energy: 1.0,
            lte_bit_energy: 23.0,
            idle_power: 30_000_000.0,
            compute_power: 80_000_000.0,
        },
        tariff: TariffModel {
            lte_local_bit_cost: 1.0,
            lte_roaming_bit_cost: 100.0,
            wifi_bit_cost: 1.0,
            multicast_factor: 10.0,
        },
        architectures: builtin_architectures(),
    }
}

fn builtin_applications(unit: SizeUnit) -> Vec<ApplicationProfile> {
    use PrivacyLevel::{High, Low};
    // (members, name, upload, download, processing, sharing, privacy, in-house)
    let rows: [(&[u32], &str, i64, i64, i64, bool, PrivacyLevel, bool); 11] = [
        (
            &[1],
            "OCR street-sign translation",
            1_000,
            1,
            100_000,
            false,
            Low,
            true,
        ),
        (&[2], "Text-to-speech", 1, 1_000, 1_000, false, Low, true),
        (
            &[3, 4],
            "Crowd video: lost child / disaster relief",
            1,
            100_000,
            10_000,
            false,
            High,
            false,
        ),
        (&[5], "Co-located GPS reading", 1, 1, 100, true, Low, false),
        (
            &[6, 10],
            "P2P file retrieval / multimedia search",
            1,
            10_000,
            1_000,
            true,
            Low,
            false,
        ),
        (
            &[7],
            "Live race ranking feed",
            1,
            1_000,
            1_000,
            true,
            Low,
            false,
        ),
        (
            &[8, 9],
            "Crowdsensing queries",
            1,
            1,
            100_000,
            true,
            Low,
            false,
        ),
        (
            &[11],
            "Social network file sharing",
            1_000,
            1_000,
            1_000,
            true,
            High,
            false,
        ),
        (
            &[12, 13],
            "Social search / crowdsourced LBS",
            1,
            1,
            1_000,
            false,
            High,
            false,
        ),
        (
            &[14],
            "Wearable augmented reality",
            1_000,
            1,
            100_000,
            true,
            Low,
            false,
        ),
        (
            &[15],
            "Vital-signs monitor",
            10,
            1,
            10_000,
            false,
            Low,
            false,
        ),
    ];
    let k = unit.bits_per_unit();
    rows.iter()
        .map(
            |&(members, name, up, down, processing, sharing, privacy, in_house)| {
                ApplicationProfile {
                    members: members.to_vec(),
                    name: name.to_string(),
                    upload_bits: up * k,
                    download_bits: down * k,
                    processing,
                    resource_sharing: sharing,
                    privacy_requirement: privacy,
                    runs_in_house: in_house,
                }
            },
        )
        .collect()
}

fn builtin_segments() -> SegmentSet {
    use segment_names::*;
    SegmentSet::new(vec![
        NetworkSegment::new(
            AIR,
            8,
            Bandwidth::Finite(350_000),
            Bandwidth::Finite(36_000_000),
        ),
        NetworkSegment::latency_only(ENB, 3),
        NetworkSegment::new(
            BACKHAUL_CORE,
            5,
            Bandwidth::Finite(100_000_000),
            Bandwidth::Finite(100_000_000),
        ),
        NetworkSegment::latency_only(GATEWAYS, 2),
        NetworkSegment::new(
            INTERNET,
            25,
            Bandwidth::Finite(100_000_000),
            Bandwidth::Finite(100_000_000),
        ),
        NetworkSegment::new(
            WIFI,
            0,
            Bandwidth::Finite(100_000_000),
            Bandwidth::Finite(100_000_000),
        ),
    ])
}

fn builtin_nodes() -> Nodes {
    Nodes {
        mobile: ProcessingNode {
            kind: NodeKind::MobileDevice,
            speed: 1_000,
        },
        cloudlet: ProcessingNode {
            kind: NodeKind::CloudletServer,
            speed: 5_000,
        },
        operator_cloud: ProcessingNode {
            kind: NodeKind::OperatorCloud,
            speed: 100_000,
        },
        remote_cloud: ProcessingNode {
            kind: NodeKind::RemoteCloud,
            speed: 100_000,
        },
        virtual_participant: ProcessingNode {
            kind: NodeKind::VirtualCloudParticipant,
            speed: 1_000,
        },
    }
}

/// Participants in the ad-hoc virtual cloud.
pub const VIRTUAL_CLOUD_PARTICIPANTS: u32 = 10;

fn builtin_architectures() -> Vec<ArchitectureSpec> {
    use ArchitectureKind::*;
    let q = |privacy, mobility, scalability, multicast_capable, on_device| Qualitative {
        privacy,
        mobility,
        scalability,
        multicast_capable,
        on_device,
    };
    let spec = |kind, qualitative, participants, idle_accounting| ArchitectureSpec {
        kind,
        qualitative,
        participants,
        idle_accounting,
    };
    let ocmca = q(
        PrivacyLevel::High,
        Mobility::High,
        Some(Scalability::High),
        true,
        false,
    );
    vec![
        spec(
            InHouse,
            q(PrivacyLevel::High, Mobility::High, None, false, true),
            1,
            IdleAccounting::LocalCompute,
        ),
        spec(
            RemoteCloud,
            q(
                PrivacyLevel::High,
                Mobility::High,
                Some(Scalability::High),
                false,
                false,
            ),
            1,
            IdleAccounting::FullWindow,
        ),
        spec(
            VirtualCloud,
            q(
                PrivacyLevel::Medium,
                Mobility::Medium,
                Some(Scalability::High),
                false,
                false,
            ),
            VIRTUAL_CLOUD_PARTICIPANTS,
            IdleAccounting::OwnShareCompute,
        ),
        spec(
            Cloudlet,
            q(
                PrivacyLevel::Low,
                Mobility::VeryLow,
                Some(Scalability::Low),
                false,
                false,
            ),
            1,
            IdleAccounting::ProcessingOnly,
        ),
        spec(OcmcaUnicast, ocmca, 1, IdleAccounting::FullWindow),
        spec(OcmcaMulticast, ocmca, 1, IdleAccounting::FullWindow),
    ]
}

/// A violated invariant, reported as data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub subject: String,
    pub rule: String,
}

impl Violation {
    pub fn new(subject: impl Into<String>, rule: &str) -> Self {
        Violation {
            subject: subject.into(),
            rule: rule.to_string(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.subject, self.rule)
    }
}

/// Collects every violated invariant instead of stopping at the first.
pub trait Validate {
    fn violations(&self) -> Vec<Violation>;

    fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }
}

impl Validate for ApplicationProfile {
    fn violations(&self) -> Vec<Violation> {
        let who = format!("application {}", self.label());
        let mut out = Vec::new();
        if self.upload_bits < 0 {
            out.push(Violation::new(&who, "upload_size ≥ 0"));
        }
        if self.download_bits < 0 {
            out.push(Violation::new(&who, "download_size ≥ 0"));
        }
        if self.processing < 0 {
            out.push(Violation::new(&who, "processing ≥ 0"));
        }
        if self.members.is_empty() {
            out.push(Violation::new(&who, "at least one application id"));
        }
        out
    }
}

impl Validate for NetworkSegment {
    fn violations(&self) -> Vec<Violation> {
        let who = format!("segment {}", self.name);
        let mut out = Vec::new();
        if self.one_way_latency_ms < 0 {
            out.push(Violation::new(&who, "latency ≥ 0"));
        }
        for (dir, bw) in [("up", self.up), ("down", self.down)] {
            if let Bandwidth::Finite(b) = bw {
                if b <= 0 {
                    out.push(Violation::new(&who, &format!("{dir} bandwidth > 0")));
                }
            }
        }
        out
    }
}

impl Validate for ProcessingNode {
    fn violations(&self) -> Vec<Violation> {
        if self.speed > 0 {
            Vec::new()
        } else {
            vec![Violation::new(format!("node {:?}", self.kind), "speed > 0")]
        }
    }
}

impl Validate for DeviceEnergyModel {
    fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (name, v) in [
            ("wifi_bit_energy", self.wifi_bit_energy),
            ("lte_bit_energy", self.lte_bit_energy),
            ("idle_power", self.idle_power),
            ("compute_power", self.compute_power),
        ] {
            if !(v >= 0.0) {
                out.push(Violation::new("energy", &format!("{name} ≥ 0")));
            }
        }
        if self.compute_power < self.idle_power {
            out.push(Violation::new("energy", "compute_power ≥ idle_power"));
        }
        out
    }
}

impl Validate for TariffModel {
    fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if !(self.lte_local_bit_cost >= 0.0) {
            out.push(Violation::new("tariff", "local ≥ 0"));
        }
        if !(self.lte_roaming_bit_cost >= self.lte_local_bit_cost) {
            out.push(Violation::new("tariff", "roaming ≥ local"));
        }
        if !(self.wifi_bit_cost >= 0.0) {
            out.push(Violation::new("tariff", "wifi ≥ 0"));
        }
        if !(self.multicast_factor >= 1.0) {
            out.push(Violation::new("tariff", "m ≥ 1"));
        }
        out
    }
}

impl Validate for Catalog {
    fn violations(&self) -> Vec<Violation> {
        let mut out: Vec<Violation> = self
            .applications
            .iter()
            .flat_map(Validate::violations)
            .collect();
        out.extend(self.segments.iter().flat_map(Validate::violations));
        out.extend(self.nodes.iter().flat_map(Validate::violations));
        out.extend(self.energy.violations());
        out.extend(self.tariff.violations());
        for a in &self.architectures {
            if a.participants == 0 {
                out.push(Violation::new(
                    format!("architecture {}", a.kind),
                    "participants ≥ 1",
                ));
            }
        }
        let mut ids: Vec<u32> = self
            .applications
            .iter()
            .flat_map(|a| a.members.iter().copied())
            .collect();
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            out.push(Violation::new(
                "applications",
                "each id maps to one profile",
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_constants() {
        let c = builtin_catalog();
        assert_eq!(c.application(1).unwrap().processing, 100_000);
        let air = &c.segments["air"];
        assert_eq!(air.one_way_latency_ms, 8);
        assert_eq!(air.up, Bandwidth::Finite(350_000));
        assert_eq!(air.down, Bandwidth::Finite(36_000_000));
        assert_eq!(c.energy.idle_power, 30_000_000.0);
        assert_eq!(c.energy.compute_power, 80_000_000.0);
        assert_eq!(c.nodes.mobile.speed, 1_000);
        assert_eq!(c.nodes.cloudlet.speed, 5_000);
        assert_eq!(c.nodes.remote_cloud.speed, 100_000);
    }

    #[test]
    fn stable_and_valid() {
        assert_eq!(builtin_catalog(), builtin_catalog());
        assert!(builtin_catalog().validate().is_ok());
    }

    #[test]
    fn every_id_resolves_and_groups_share() {
        let c = builtin_catalog();
        for id in 1..=15 {
            assert!(c.application(id).is_ok(), "id {id}");
        }
        for (a, b) in [(3, 4), (6, 10), (8, 9), (12, 13)] {
            assert_eq!(c.application(a).unwrap(), c.application(b).unwrap());
        }
        assert!(c.application(16).is_err());
        assert_eq!(c.applications.len(), 11);
    }

    #[test]
    fn high_privacy_profiles() {
        let c = builtin_catalog();
        let high: Vec<String> = c
            .applications
            .iter()
            .filter(|a| a.privacy_requirement == PrivacyLevel::High)
            .map(ApplicationProfile::label)
            .collect();
        assert_eq!(high, ["3 & 4", "11", "12 & 13"]);
    }

    #[test]
    fn qualitative_attributes() {
        use ArchitectureKind::*;
        let c = builtin_catalog();
        let table = [
            (
                RemoteCloud,
                PrivacyLevel::High,
                Mobility::High,
                Some(Scalability::High),
                false,
            ),
            (
                VirtualCloud,
                PrivacyLevel::Medium,
                Mobility::Medium,
                Some(Scalability::High),
                false,
            ),
            (
                Cloudlet,
                PrivacyLevel::Low,
                Mobility::VeryLow,
                Some(Scalability::Low),
                false,
            ),
            (
                OcmcaUnicast,
                PrivacyLevel::High,
                Mobility::High,
                Some(Scalability::High),
                true,
            ),
            (
                OcmcaMulticast,
                PrivacyLevel::High,
                Mobility::High,
                Some(Scalability::High),
                true,
            ),
            (InHouse, PrivacyLevel::High, Mobility::High, None, false),
        ];
        for (kind, p, m, s, mc) in table {
            let q = c.architecture(kind).unwrap().qualitative;
            assert_eq!(
                (q.privacy, q.mobility, q.scalability, q.multicast_capable),
                (p, m, s, mc)
            );
        }
    }

    #[test]
    fn violations_are_reported() {
        let mut app = builtin_catalog().application(1).unwrap().clone();
        app.processing = -1;
        let v = app.violations();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, "processing ≥ 0");

        let mut t = builtin_catalog().tariff;
        t.multicast_factor = 0.5;
        assert_eq!(t.violations()[0].rule, "m ≥ 1");

        t.multicast_factor = 1.0;
        t.lte_roaming_bit_cost = 0.5;
        assert_eq!(t.violations()[0].rule, "roaming ≥ local");

        let seg = NetworkSegment::new("x", 1, Bandwidth::Finite(0), Bandwidth::Finite(-3));
        assert_eq!(seg.violations().len(), 2);
    }

    #[test]
    fn kilobyte_mode_scales_sizes() {
        let kb = builtin_catalog_with_units(SizeUnit::Kilobyte);
        let kbit = builtin_catalog();
        for (a, b) in kb.applications.iter().zip(&kbit.applications) {
            assert_eq!(a.upload_bits, 8 * b.upload_bits);
            assert_eq!(a.download_bits, 8 * b.download_bits);
            assert_eq!(a.processing, b.processing);
        }
    }

    #[test]
    fn parse_architecture_names() {
        assert_eq!(
            "remote-cloud".parse::<ArchitectureKind>().unwrap(),
            ArchitectureKind::RemoteCloud
        );
        assert_eq!(
            "OCMCA".parse::<ArchitectureKind>().unwrap(),
            ArchitectureKind::OcmcaUnicast
        );
        assert!("fog".parse::<ArchitectureKind>().is_err());
    }
}
