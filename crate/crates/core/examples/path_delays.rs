//! Hop-by-hop view of each architecture's data path and the delay it
//! yields under both arithmetic modes.
//!
//!     cargo run --example path_delays -- 6

use mcc_core::catalog::{builtin_catalog, ArchitectureKind};
use mcc_core::energy::offload_energy;
use mcc_core::path::{
    build_path, in_house_delay, millis_f64, offload_delay_with, transmission_time, Millis,
};
use mcc_core::DelayArithmetic;

fn main() -> mcc_core::Result<()> {
    let id: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let catalog = builtin_catalog();
    let app = catalog.application(id)?;
    println!(
        "application {} ({}): up {} bit, down {} bit, {} processing units\n",
        app.label(),
        app.name,
        app.upload_bits,
        app.download_bits,
        app.processing
    );

    if app.runs_in_house {
        let d = in_house_delay(app, &catalog.nodes.mobile)?;
        println!("in-house: {} ms\n", millis_f64(&d));
    }

    for kind in ArchitectureKind::ALL
        .into_iter()
        .filter(|k| *k != ArchitectureKind::InHouse)
    {
        let path = build_path(kind, &catalog)?;
        println!("{} [{}]", kind.title(), path.topology_note);
        for seg in &path.segments {
            let up = transmission_time(app.upload_bits, seg.up)?;
            let down = transmission_time(app.download_bits, seg.down)?;
            println!(
                "  {:<14} {:>3} ms one-way  up {:>10.3} ms  down {:>10.3} ms",
                seg.name,
                seg.one_way_latency_ms,
                millis_f64(&up),
                millis_f64(&down)
            );
        }
        let exact = offload_delay_with(&path, app, DelayArithmetic::Exact)?;
        let int32 = offload_delay_with(&path, app, DelayArithmetic::WrappingInt32)?;
        let spec = catalog.architecture(kind)?;
        let energy = offload_energy(
            spec,
            &path,
            app,
            &Millis::from_integer(int32.reported as i128),
            &catalog.energy,
        )?;
        println!(
            "  delay exact {:.3} ms, int32 {} ms; energy {:.3}e6\n",
            millis_f64(&exact.exact),
            int32.reported,
            energy / 1e6
        );
    }
    Ok(())
}
