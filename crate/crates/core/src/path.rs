//! Data paths and end-to-end offloading delay.
//!
//! Every hop serializes the whole payload before forwarding it (no
//! pipelining), the path is traversed once up and once down, and the
//! processor works on the job in between. Delays are exact rationals in
//! milliseconds; the integer figure reported in tables is derived from them.

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::catalog::{
    segment_names as seg, ApplicationProfile, ArchitectureKind, Bandwidth, Catalog, NetworkSegment,
    NodeKind, ProcessingNode,
};
use crate::error::{Error, Result};

/// Milliseconds as an exact rational.
pub type Millis = Ratio<i128>;

pub fn millis_f64(m: &Millis) -> f64 {
    m.to_f64().unwrap_or(f64::NAN)
}

/// Arithmetic used to turn a path into an integer delay.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DelayArithmetic {
    /// Exact rational sum, reported as its floor.
    #[default]
    Exact,
    /// Per-hop `bits * 1000 / bps` evaluated in 32-bit signed integers with
    /// wraparound and truncating division, as the reference tables were
    /// produced. Large payloads (10^7 bits and up) wrap.
    WrappingInt32,
}

impl std::str::FromStr for DelayArithmetic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(DelayArithmetic::Exact),
            "int32" | "wrapping-int32" => Ok(DelayArithmetic::WrappingInt32),
            other => Err(Error::ConfigParse(format!(
                "unknown delay_arithmetic `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DataPath {
    pub kind: ArchitectureKind,
    /// Ordered device → processor.
    pub segments: Vec<NetworkSegment>,
    pub processor: ProcessingNode,
    /// Nodes sharing the job evenly and computing in parallel.
    pub participants: u32,
    pub topology_note: &'static str,
}

impl DataPath {
    pub fn one_way_latency_ms(&self) -> i64 {
        self.segments.iter().map(|s| s.one_way_latency_ms).sum()
    }
}

/// Builds the hop list and processing node of an architecture.
pub fn build_path(kind: ArchitectureKind, catalog: &Catalog) -> Result<DataPath> {
    let s = |name: &str| catalog.segments.require(name).cloned();
    let participants = catalog
        .architecture(kind)
        .map(|a| a.participants)
        .unwrap_or(1);
    let path = match kind {
        ArchitectureKind::InHouse => DataPath {
            kind,
            segments: Vec::new(),
            processor: catalog.nodes.mobile,
            participants: 1,
            topology_note: "standalone device",
        },
        ArchitectureKind::RemoteCloud => DataPath {
            kind,
            segments: vec![
                s(seg::AIR)?,
                s(seg::ENB)?,
                s(seg::BACKHAUL_CORE)?,
                s(seg::GATEWAYS)?,
                s(seg::INTERNET)?,
            ],
            processor: catalog.nodes.remote_cloud,
            participants: 1,
            topology_note: "UE - eNB - backhaul/core - S/P-GW - internet - cloud provider",
        },
        ArchitectureKind::OcmcaUnicast | ArchitectureKind::OcmcaMulticast => DataPath {
            kind,
            segments: vec![
                s(seg::AIR)?,
                s(seg::ENB)?,
                s(seg::BACKHAUL_CORE)?,
                s(seg::GATEWAYS)?,
            ],
            processor: catalog.nodes.operator_cloud,
            participants: 1,
            topology_note: "UE - eNB - backhaul/core - S-GW - operator cloud on SGi",
        },
        ArchitectureKind::Cloudlet => DataPath {
            kind,
            segments: vec![s(seg::WIFI)?],
            processor: catalog.nodes.cloudlet,
            participants: 1,
            topology_note: "UE - Wi-Fi AP - collocated cloudlet server",
        },
        ArchitectureKind::VirtualCloud => DataPath {
            kind,
            segments: vec![s(seg::WIFI)?],
            processor: catalog.nodes.virtual_participant,
            participants: participants.max(1),
            topology_note: "UE broadcasts over shared Wi-Fi to nearby peers",
        },
    };
    Ok(path)
}

/// Time to serialize `bits` onto a link.
pub fn transmission_time(bits: i64, bandwidth: Bandwidth) -> Result<Millis> {
    if bits < 0 {
        return Err(Error::NegativeInput("size"));
    }
    match bandwidth {
        Bandwidth::Infinite => Ok(Millis::from_integer(0)),
        Bandwidth::Finite(bps) if bps <= 0 => Err(Error::NonPositiveBandwidth(bps)),
        Bandwidth::Finite(bps) => Ok(Ratio::new(bits as i128 * 1000, bps as i128)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffloadDelay {
    pub exact: Millis,
    pub reported: i64,
}

pub fn offload_delay(path: &DataPath, app: &ApplicationProfile) -> Result<OffloadDelay> {
    offload_delay_with(path, app, DelayArithmetic::Exact)
}

/// Upload serialization on every hop, download serialization on every hop,
/// round-trip latency, and the processor's share of the job.
pub fn offload_delay_with(
    path: &DataPath,
    app: &ApplicationProfile,
    arithmetic: DelayArithmetic,
) -> Result<OffloadDelay> {
    if app.processing < 0 {
        return Err(Error::NegativeInput("processing"));
    }
    if path.processor.speed <= 0 {
        return Err(Error::NonPositiveBandwidth(path.processor.speed));
    }
    let mut exact = Millis::from_integer(0);
    for s in &path.segments {
        exact += transmission_time(app.upload_bits, s.up)?;
        exact += transmission_time(app.download_bits, s.down)?;
        exact += Millis::from_integer(2 * s.one_way_latency_ms as i128);
    }
    exact += processing_time(path, app.processing);

    let reported = match arithmetic {
        DelayArithmetic::Exact => exact.floor().to_integer() as i64,
        DelayArithmetic::WrappingInt32 => wrapping_int32_delay(path, app) as i64,
    };
    Ok(OffloadDelay { exact, reported })
}

fn processing_time(path: &DataPath, processing: i64) -> Millis {
    Ratio::new(
        processing as i128 * 1000,
        path.processor.speed as i128 * path.participants.max(1) as i128,
    )
}

fn wrapping_int32_delay(path: &DataPath, app: &ApplicationProfile) -> i32 {
    let tx = |bits: i64, bw: Bandwidth| -> i32 {
        match bw {
            Bandwidth::Infinite => 0,
            Bandwidth::Finite(bps) => (bits.wrapping_mul(1000) as i32) / (bps as i32).max(1),
        }
    };
    let mut total: i32 = 0;
    for s in &path.segments {
        total = total
            .wrapping_add(tx(app.upload_bits, s.up))
            .wrapping_add(tx(app.download_bits, s.down))
            .wrapping_add((s.one_way_latency_ms as i32).wrapping_mul(2));
    }
    let share = app.processing / path.participants.max(1) as i64;
    let proc_ms = (share.wrapping_mul(1000) as i32) / (path.processor.speed as i32).max(1);
    total.wrapping_add(proc_ms)
}

/// Standalone execution time on the handset.
pub fn in_house_delay(app: &ApplicationProfile, device: &ProcessingNode) -> Result<Millis> {
    if device.kind != NodeKind::MobileDevice {
        return Err(Error::NotAMobileDevice(device.kind));
    }
    if app.processing < 0 {
        return Err(Error::NegativeInput("processing"));
    }
    if device.speed <= 0 {
        return Err(Error::NonPositiveBandwidth(device.speed));
    }
    Ok(Ratio::new(
        app.processing as i128 * 1000,
        device.speed as i128,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_catalog;

    fn ms(n: i128, d: i128) -> Millis {
        Ratio::new(n, d)
    }

    #[test]
    fn path_latencies() {
        let c = builtin_catalog();
        let lat = |k| build_path(k, &c).unwrap().one_way_latency_ms();
        assert_eq!(lat(ArchitectureKind::RemoteCloud), 43);
        assert_eq!(lat(ArchitectureKind::OcmcaUnicast), 18);
        assert_eq!(lat(ArchitectureKind::OcmcaMulticast), 18);
        let cl = build_path(ArchitectureKind::Cloudlet, &c).unwrap();
        assert_eq!(cl.segments.len(), 1);
        assert_eq!(cl.segments[0].one_way_latency_ms, 0);
        let ih = build_path(ArchitectureKind::InHouse, &c).unwrap();
        assert!(ih.segments.is_empty());
        assert_eq!(ih.processor.kind, NodeKind::MobileDevice);
        assert_eq!(
            build_path(ArchitectureKind::VirtualCloud, &c)
                .unwrap()
                .participants,
            10
        );
    }

    #[test]
    fn missing_segment_is_an_error() {
        let mut c = builtin_catalog();
        c.segments = crate::catalog::SegmentSet::new(vec![]);
        assert!(matches!(
            build_path(ArchitectureKind::Cloudlet, &c),
            Err(Error::MissingSegment(_))
        ));
    }

    #[test]
    fn transmission_examples() {
        assert_eq!(
            transmission_time(0, Bandwidth::Finite(36_000_000)).unwrap(),
            ms(0, 1)
        );
        assert_eq!(
            transmission_time(1_000_000, Bandwidth::Finite(350_000)).unwrap(),
            ms(20_000, 7)
        );
        assert_eq!(
            transmission_time(1_000_000, Bandwidth::Finite(36_000_000)).unwrap(),
            ms(250, 9)
        );
        assert_eq!(transmission_time(5, Bandwidth::Infinite).unwrap(), ms(0, 1));
        assert!(transmission_time(5, Bandwidth::Finite(0)).is_err());
        assert!(transmission_time(5, Bandwidth::Finite(-1)).is_err());
        assert!(transmission_time(-5, Bandwidth::Finite(1)).is_err());
    }

    #[test]
    fn synthetic_remote_against_hand_sum() {
        // Up 2000 bits, down 2000 bits, 500 units. Hop by hop:
        // air up 2000/350000 s = 40/7 ms, core up 0.02, internet up 0.02,
        // air down 2000/36e6 s = 1/18 ms, core down 0.02, internet down 0.02,
        // latency 2 * 43 = 86, processing 500/100000 s = 5 ms.
        let oracle = ms(40, 7) + ms(1, 50) * 4 + ms(1, 18) + ms(86, 1) + ms(5, 1);
        let c = builtin_catalog();
        let app = ApplicationProfile {
            members: vec![99],
            name: "synthetic".into(),
            upload_bits: 2_000,
            download_bits: 2_000,
            processing: 500,
            resource_sharing: false,
            privacy_requirement: crate::catalog::PrivacyLevel::Low,
            runs_in_house: false,
        };
        let d = offload_delay(
            &build_path(ArchitectureKind::RemoteCloud, &c).unwrap(),
            &app,
        )
        .unwrap();
        assert_eq!(d.exact, oracle);
        assert_eq!(d.reported, 96);
    }

    #[test]
    fn published_delays() {
        let c = builtin_catalog();
        let delay = |k, id| {
            offload_delay(&build_path(k, &c).unwrap(), c.application(id).unwrap())
                .unwrap()
                .reported
        };
        assert_eq!(delay(ArchitectureKind::RemoteCloud, 1), 3963);
        assert_eq!(delay(ArchitectureKind::Cloudlet, 1), 20010);
        assert_eq!(delay(ArchitectureKind::VirtualCloud, 8), 10000);
        assert!((delay(ArchitectureKind::OcmcaUnicast, 2) - 85).abs() <= 2);
    }

    #[test]
    fn wrapping_arithmetic_matches_reference_rows() {
        let c = builtin_catalog();
        let delay = |k, id| {
            offload_delay_with(
                &build_path(k, &c).unwrap(),
                c.application(id).unwrap(),
                DelayArithmetic::WrappingInt32,
            )
            .unwrap()
            .reported
        };
        assert_eq!(delay(ArchitectureKind::RemoteCloud, 3), 245);
        assert_eq!(delay(ArchitectureKind::OcmcaUnicast, 3), 183);
        assert_eq!(delay(ArchitectureKind::RemoteCloud, 6), 165);
        assert_eq!(delay(ArchitectureKind::VirtualCloud, 6), 114);
        assert_eq!(delay(ArchitectureKind::OcmcaUnicast, 2), 85);
    }

    #[test]
    fn in_house() {
        let c = builtin_catalog();
        let d = |id| in_house_delay(c.application(id).unwrap(), &c.nodes.mobile).unwrap();
        assert_eq!(d(1), ms(100_000, 1));
        assert_eq!(d(2), ms(1_000, 1));
        let mut zero = c.application(1).unwrap().clone();
        zero.processing = 0;
        assert_eq!(in_house_delay(&zero, &c.nodes.mobile).unwrap(), ms(0, 1));
        assert!(in_house_delay(&zero, &c.nodes.cloudlet).is_err());
    }
}
