//! Multicast economics: how the discount m moves user cost and operator
//! revenue, and what bundling unicast copies would cost instead.
//!
//!     cargo run --example business_model

use mcc_core::business::{
    hourly_cost, simplified_comparison, unicast_bundle_bandwidth, BusinessParams, CostRole,
};

fn main() {
    let base = BusinessParams {
        rq: 40.0,
        rp: 900.0,
        ..Default::default()
    };

    println!(
        "{:>5} {:>14} {:>14} {:>18}",
        "m", "ocmca user", "remote user", "ocmca rev/channel"
    );
    for m in [1.0, 2.0, 5.0, 10.0, 20.0] {
        let p = BusinessParams { m, ..base };
        let ocmca = simplified_comparison(&p)
            .into_iter()
            .find(|r| r.architecture == "ocmca")
            .unwrap();
        println!(
            "{m:>5} {:>14.1} {:>14.1} {:>18.2}",
            hourly_cost(CostRole::Ocmca, &p),
            hourly_cost(CostRole::RemoteCloud, &p),
            ocmca.operator_revenue_per_channel
        );
    }

    println!("\nper-role hourly cost with the default parameters:");
    for role in CostRole::ALL {
        println!("  {:<20} {:>10.2}", role.slug(), hourly_cost(role, &base));
    }

    println!("\nunicast bundling of a 2 Mbit/s stream:");
    for n in [1, 10, 100, 1000] {
        println!(
            "  {n:>5} users -> {:>8.0} Mbit/s",
            unicast_bundle_bandwidth(n, 2.0)
        );
    }
}
