//! A scenario file with a slower uplink, a home-grown application and a
//! pricier roaming tariff, written out as CSV.
//!
//!     cargo run --example custom_scenario

use mcc_core::report::{emit_table, EmitOptions, Format, ReportPart};
use mcc_core::scenario::{run, ScenarioConfig};

const CONFIG: &str = r#"
version = 1
architectures = ["in-house", "remote-cloud", "cloudlet", "ocmca-unicast"]

[applications]
ids = [1, 7]

[[applications.custom]]
ids = [16]
name = "Photo backup"
upload = 5000
download = 1
processing = 200
runs_in_house = true

[network.segments.air]
up_mbps = 0.2

[tariff]
roaming = 250

[options]
delay_arithmetic = "exact"
"#;

fn main() -> mcc_core::Result<()> {
    let scenario = ScenarioConfig::from_toml(CONFIG)?.resolve()?;
    let report = run(&scenario)?;
    let part = ReportPart::Matrix {
        records: &report.matrix,
        catalog: &scenario.catalog,
        arithmetic: scenario.eval.arithmetic,
    };
    print!(
        "{}",
        emit_table(part, Format::Csv, EmitOptions { provenance: true })
    );

    match ScenarioConfig::from_toml("version = 1\n[options]\nvirtual_n = 0\n")?.resolve() {
        Err(e) => println!("\nrejected as expected:\n{e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
