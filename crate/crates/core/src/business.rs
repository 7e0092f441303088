//! Multicast business model: per-user hourly cost of a periodic
//! subscription feed and the operator's revenue per channel.

use std::str::FromStr;

use crate::catalog::Violation;
use crate::error::{Error, Result};

/// Bandwidth of delivering one message to `n` recipients over unicast
/// bundling: every recipient costs a full copy.
pub fn unicast_bundle_bandwidth(n: u64, bw_one: f64) -> f64 {
    n as f64 * bw_one
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BusinessParams {
    /// Price of an uplink bit to the serving gateway.
    pub a: f64,
    /// Price of a unicast downlink bit.
    pub b: f64,
    /// Price of a Wi-Fi peer bit.
    pub c: f64,
    /// Multicast discount: a multicast bit costs `b / m`.
    pub m: f64,
    /// Peers within Wi-Fi range.
    pub n: u32,
    /// Subscribers per cell.
    pub big_m: u32,
    /// Request size in bits.
    pub rq: f64,
    /// Response size in bits.
    pub rp: f64,
    pub updates_per_hour: u32,
    /// Reproduce the printed formulas verbatim, including the request size
    /// inside the unicast and multicast update terms.
    pub strict_table: bool,
}

impl Default for BusinessParams {
    fn default() -> Self {
        BusinessParams {
            a: 1.0,
            b: 1.0,
            c: 0.0,
            m: 10.0,
            n: 100,
            big_m: 100,
            rq: 1.0,
            rp: 1.0,
            updates_per_hour: 60,
            strict_table: false,
        }
    }
}

impl BusinessParams {
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut check = |ok: bool, rule: &str| {
            if !ok {
                out.push(Violation {
                    subject: "business".into(),
                    rule: rule.into(),
                });
            }
        };
        check(
            self.a >= 0.0 && self.b >= 0.0 && self.c >= 0.0,
            "A, B, C ≥ 0",
        );
        check(self.rq >= 0.0 && self.rp >= 0.0, "rq, rp ≥ 0");
        check(self.m >= 1.0, "m ≥ 1");
        check(self.n >= 1, "N ≥ 1");
        check(self.big_m >= 1, "M ≥ 1");
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CostRole {
    Ocmca,
    RemoteCloud,
    VirtualSharer,
    VirtualDownloader,
    /// One downloader and `N - 1` sharers, averaged.
    VirtualAverage,
    Cloudlet,
}

impl CostRole {
    pub const ALL: [CostRole; 6] = [
        CostRole::Ocmca,
        CostRole::RemoteCloud,
        CostRole::VirtualSharer,
        CostRole::VirtualDownloader,
        CostRole::VirtualAverage,
        CostRole::Cloudlet,
    ];

    pub fn slug(self) -> &'static str {
        match self {
            CostRole::Ocmca => "ocmca",
            CostRole::RemoteCloud => "remote-cloud",
            CostRole::VirtualSharer => "virtual-sharer",
            CostRole::VirtualDownloader => "virtual-downloader",
            CostRole::VirtualAverage => "virtual-average",
            CostRole::Cloudlet => "cloudlet",
        }
    }
}

impl FromStr for CostRole {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CostRole::ALL
            .into_iter()
            .find(|r| r.slug() == s)
            .ok_or_else(|| Error::UnknownRole(s.to_string()))
    }
}

/// Cost to one user over an hour of updates.
pub fn hourly_cost(role: CostRole, p: &BusinessParams) -> f64 {
    let u = p.updates_per_hour as f64;
    // The printed table uses rq in the downlink update terms of the two
    // operator-billed rows; the prose prices the updates with rp.
    let update = if p.strict_table { p.rq } else { p.rp };
    match role {
        CostRole::Ocmca => p.rq * p.a + u * update * (p.b / p.m),
        CostRole::RemoteCloud => p.rq * p.a + u * update * p.b,
        CostRole::VirtualSharer => p.rq * p.c + u * p.rp * p.c + p.n as f64 * u * p.rp * p.c,
        CostRole::VirtualDownloader => p.rq * p.a + u * p.rp * p.b + u * p.rp * p.c,
        CostRole::VirtualAverage => {
            let n = p.n.max(1) as f64;
            (hourly_cost(CostRole::VirtualDownloader, p)
                + (n - 1.0) * hourly_cost(CostRole::VirtualSharer, p))
                / n
        }
        CostRole::Cloudlet => p.rq * p.c + u * p.rp * p.c,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplifiedRow {
    pub architecture: &'static str,
    pub user_cost: f64,
    pub operator_revenue_per_channel: f64,
    pub note: &'static str,
}

/// User cost and operator revenue per channel in units of the unicast
/// downlink price, with free Wi-Fi and the common join cost dropped.
///
/// `c` is ignored: the comparison assumes Wi-Fi is free.
pub fn simplified_comparison(p: &BusinessParams) -> Vec<SimplifiedRow> {
    let b = p.b;
    let n = p.n.max(1) as f64;
    vec![
        SimplifiedRow {
            architecture: "remote-cloud",
            user_cost: b,
            operator_revenue_per_channel: b,
            note: "one dedicated channel per user",
        },
        SimplifiedRow {
            architecture: "virtual-cloud",
            user_cost: b / n,
            operator_revenue_per_channel: b,
            note: "average; downloader pays B and sharers pay 0",
        },
        SimplifiedRow {
            architecture: "cloudlet",
            user_cost: 0.0,
            operator_revenue_per_channel: 0.0,
            note: "free Wi-Fi; operator bypassed",
        },
        SimplifiedRow {
            architecture: "ocmca",
            user_cost: b / p.m,
            operator_revenue_per_channel: p.big_m as f64 * b / p.m,
            note: "one multicast channel serves M users",
        },
    ]
}
