// Independent recomputation of every grid cell from raw constants. Nothing
// here calls into the path or energy code; only the results are compared.

use mcc_core::catalog::builtin_catalog;
use mcc_core::energy::EvalOptions;
use mcc_core::path::millis_f64;
use mcc_core::{evaluate_matrix, ArchitectureKind, DelayArithmetic, MetricsRecord};

struct App {
    label: &'static str,
    up_kbit: i64,
    down_kbit: i64,
    processing: i64,
    sharing: bool,
    high_privacy: bool,
    in_house: bool,
}

const APPS: [App; 11] = [
    App {
        label: "1",
        up_kbit: 1000,
        down_kbit: 1,
        processing: 100_000,
        sharing: false,
        high_privacy: false,
        in_house: true,
    },
    App {
        label: "2",
        up_kbit: 1,
        down_kbit: 1000,
        processing: 1000,
        sharing: false,
        high_privacy: false,
        in_house: true,
    },
    App {
        label: "3 & 4",
        up_kbit: 1,
        down_kbit: 100_000,
        processing: 10_000,
        sharing: false,
        high_privacy: true,
        in_house: false,
    },
    App {
        label: "5",
        up_kbit: 1,
        down_kbit: 1,
        processing: 100,
        sharing: true,
        high_privacy: false,
        in_house: false,
    },
    App {
        label: "6 & 10",
        up_kbit: 1,
        down_kbit: 10_000,
        processing: 1000,
        sharing: true,
        high_privacy: false,
        in_house: false,
    },
    App {
        label: "7",
        up_kbit: 1,
        down_kbit: 1000,
        processing: 1000,
        sharing: true,
        high_privacy: false,
        in_house: false,
    },
    App {
        label: "8 & 9",
        up_kbit: 1,
        down_kbit: 1,
        processing: 100_000,
        sharing: true,
        high_privacy: false,
        in_house: false,
    },
    App {
        label: "11",
        up_kbit: 1000,
        down_kbit: 1000,
        processing: 1000,
        sharing: true,
        high_privacy: true,
        in_house: false,
    },
    App {
        label: "12 & 13",
        up_kbit: 1,
        down_kbit: 1,
        processing: 1000,
        sharing: false,
        high_privacy: true,
        in_house: false,
    },
    App {
        label: "14",
        up_kbit: 1000,
        down_kbit: 1,
        processing: 100_000,
        sharing: true,
        high_privacy: false,
        in_house: false,
    },
    App {
        label: "15",
        up_kbit: 10,
        down_kbit: 1,
        processing: 10_000,
        sharing: false,
        high_privacy: false,
        in_house: false,
    },
];

// (one-way latency ms, up bit/s, down bit/s); 0 bandwidth = latency only.
const AIR: (i64, i64, i64) = (8, 350_000, 36_000_000);
const ENB: (i64, i64, i64) = (3, 0, 0);
const CORE: (i64, i64, i64) = (5, 100_000_000, 100_000_000);
const GW: (i64, i64, i64) = (2, 0, 0);
const NET: (i64, i64, i64) = (25, 100_000_000, 100_000_000);
const WIFI: (i64, i64, i64) = (0, 100_000_000, 100_000_000);

fn hops(kind: ArchitectureKind) -> (Vec<(i64, i64, i64)>, i64, i64) {
    // (hops, processor speed, participants)
    match kind {
        ArchitectureKind::RemoteCloud => (vec![AIR, ENB, CORE, GW, NET], 100_000, 1),
        ArchitectureKind::OcmcaUnicast | ArchitectureKind::OcmcaMulticast => {
            (vec![AIR, ENB, CORE, GW], 100_000, 1)
        }
        ArchitectureKind::Cloudlet => (vec![WIFI], 5_000, 1),
        ArchitectureKind::VirtualCloud => (vec![WIFI], 1_000, 10),
        ArchitectureKind::InHouse => (vec![], 1_000, 1),
    }
}

fn oracle_exact_ms(app: &App, kind: ArchitectureKind) -> f64 {
    let (hs, speed, n) = hops(kind);
    let up = (app.up_kbit * 1000) as f64;
    let down = (app.down_kbit * 1000) as f64;
    let mut t = 0.0;
    for (lat, bu, bd) in hs {
        if bu > 0 {
            t += up * 1000.0 / bu as f64;
        }
        if bd > 0 {
            t += down * 1000.0 / bd as f64;
        }
        t += 2.0 * lat as f64;
    }
    t + app.processing as f64 * 1000.0 / (speed * n) as f64
}

fn wrap32(x: i64) -> i64 {
    (x + (1 << 31)).rem_euclid(1 << 32) - (1 << 31)
}

fn trunc_div(a: i64, b: i64) -> i64 {
    let q = a.abs() / b.abs();
    if (a < 0) != (b < 0) {
        -q
    } else {
        q
    }
}

fn oracle_int32_ms(app: &App, kind: ArchitectureKind) -> i64 {
    let (hs, speed, n) = hops(kind);
    let up = app.up_kbit * 1000;
    let down = app.down_kbit * 1000;
    let mut t = 0i64;
    for (lat, bu, bd) in hs {
        if bu > 0 {
            t = wrap32(t + trunc_div(wrap32(up * 1000), bu));
        }
        if bd > 0 {
            t = wrap32(t + trunc_div(wrap32(down * 1000), bd));
        }
        t = wrap32(t + 2 * lat);
    }
    wrap32(t + trunc_div(wrap32(app.processing / n * 1000), speed))
}

fn oracle_energy(app: &App, kind: ArchitectureKind, delay_ms: i64) -> f64 {
    let bits = ((app.up_kbit + app.down_kbit) * 1000) as f64;
    let p = app.processing as f64;
    match kind {
        ArchitectureKind::InHouse => 80e6 * p / 1000.0,
        ArchitectureKind::RemoteCloud
        | ArchitectureKind::OcmcaUnicast
        | ArchitectureKind::OcmcaMulticast => 23.0 * bits + 30e6 * delay_ms as f64 / 1000.0,
        ArchitectureKind::Cloudlet => bits + 30e6 * p / 5000.0,
        ArchitectureKind::VirtualCloud => bits + 80e6 * p / 10.0 / 1000.0,
    }
}

fn oracle_cost(app: &App, kind: ArchitectureKind) -> (f64, f64) {
    let bits = ((app.up_kbit + app.down_kbit) * 1000) as f64;
    match kind {
        ArchitectureKind::InHouse => (0.0, 0.0),
        ArchitectureKind::RemoteCloud => (bits, 100.0 * bits),
        ArchitectureKind::OcmcaUnicast | ArchitectureKind::OcmcaMulticast => (bits / 10.0, bits),
        ArchitectureKind::Cloudlet => (bits, bits),
        ArchitectureKind::VirtualCloud if app.sharing => (10.0 * bits, 10.0 * bits),
        ArchitectureKind::VirtualCloud => (0.0, 0.0),
    }
}

fn oracle_disqualified(app: &App, kind: ArchitectureKind) -> bool {
    app.high_privacy
        && matches!(
            kind,
            ArchitectureKind::VirtualCloud | ArchitectureKind::Cloudlet
        )
}

fn grid(arith: DelayArithmetic) -> Vec<MetricsRecord> {
    let c = builtin_catalog();
    let opts = EvalOptions {
        arithmetic: arith,
        ..Default::default()
    };
    evaluate_matrix(&c, &ArchitectureKind::ALL, &c.applications, &opts).unwrap()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

#[test]
fn grid_shape_matches_oracle() {
    let m = grid(DelayArithmetic::Exact);
    let expected: usize = APPS.iter().map(|a| if a.in_house { 6 } else { 5 }).sum();
    assert_eq!(m.len(), expected);
    for app in &APPS {
        for kind in ArchitectureKind::ALL {
            let present = m
                .iter()
                .any(|r| r.application == app.label && r.architecture == kind);
            assert_eq!(
                present,
                kind != ArchitectureKind::InHouse || app.in_house,
                "{} {kind}",
                app.label
            );
        }
    }
}

#[test]
fn exact_delays_match_oracle() {
    let m = grid(DelayArithmetic::Exact);
    for r in &m {
        let app = APPS.iter().find(|a| a.label == r.application).unwrap();
        assert_eq!(r.disqualified, oracle_disqualified(app, r.architecture));
        let Some(metrics) = &r.metrics else { continue };
        let want = oracle_exact_ms(app, r.architecture);
        assert!(
            close(millis_f64(&metrics.delay_exact), want),
            "{} {}: {want}",
            r.application,
            r.architecture
        );
        assert_eq!(
            metrics.delay_ms,
            want.floor() as i64,
            "{} {}",
            r.application,
            r.architecture
        );
    }
}

#[test]
fn int32_delays_match_oracle() {
    let m = grid(DelayArithmetic::WrappingInt32);
    for r in m
        .iter()
        .filter(|r| r.architecture != ArchitectureKind::InHouse)
    {
        let app = APPS.iter().find(|a| a.label == r.application).unwrap();
        let Some(metrics) = &r.metrics else { continue };
        assert_eq!(
            metrics.delay_ms,
            oracle_int32_ms(app, r.architecture),
            "{} {}",
            r.application,
            r.architecture
        );
    }
}

#[test]
fn int32_agrees_with_exact_floor_when_nothing_wraps() {
    for app in &APPS {
        for kind in ArchitectureKind::ALL
            .into_iter()
            .filter(|k| *k != ArchitectureKind::InHouse)
        {
            let largest = (app.up_kbit.max(app.down_kbit)) * 1000 * 1000;
            if largest < i32::MAX as i64 {
                let exact = oracle_exact_ms(app, kind);
                let int = oracle_int32_ms(app, kind);
                // Per-term truncation loses under 1 ms per term.
                assert!(
                    int as f64 <= exact && exact - (int as f64) < 12.0,
                    "{} {kind}",
                    app.label
                );
            }
        }
    }
}

#[test]
fn energy_and_cost_match_oracle() {
    for arith in [DelayArithmetic::Exact, DelayArithmetic::WrappingInt32] {
        for r in grid(arith) {
            let app = APPS.iter().find(|a| a.label == r.application).unwrap();
            let Some(metrics) = &r.metrics else { continue };
            let want_e = oracle_energy(app, r.architecture, metrics.delay_ms);
            assert!(
                close(metrics.energy, want_e),
                "{} {}: {} vs {want_e}",
                r.application,
                r.architecture,
                metrics.energy
            );
            let (lo, hi) = oracle_cost(app, r.architecture);
            assert!(
                close(metrics.cost.low, lo) && close(metrics.cost.high, hi),
                "{} {}",
                r.application,
                r.architecture
            );
        }
    }
}
