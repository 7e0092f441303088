//! All five grading schemes plus the operator cloud's overall placement.
//!
//!     cargo run --example rank_architectures

use mcc_core::report::{emit_table, EmitOptions, Format, ReportPart};
use mcc_core::scenario::{run_scenario, ScenarioConfig};
use mcc_core::Scheme;

fn main() -> mcc_core::Result<()> {
    let report = run_scenario(&ScenarioConfig::published())?;
    for scheme in Scheme::ALL {
        println!("## scheme {}: {scheme}\n", scheme.number());
        let t = report
            .rank_table(scheme)
            .expect("published grid ranks every scheme");
        println!(
            "{}",
            emit_table(
                ReportPart::Ranks(t),
                Format::Markdown,
                EmitOptions::default()
            )
        );
    }
    println!("## operator cloud against the rest\n");
    println!(
        "{}",
        emit_table(
            ReportPart::OcmcaRanks(&report.ocmca_ranks),
            Format::Markdown,
            EmitOptions::default()
        )
    );
    for c in report.rank_checks.iter().filter(|c| !c.within) {
        println!("differs from print: {c}");
    }
    Ok(())
}
