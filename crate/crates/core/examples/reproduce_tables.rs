//! Evaluates the published grid and prints it next to the deviation ledger.
//!
//!     cargo run --example reproduce_tables

use mcc_core::report::{emit_table, EmitOptions, Format, ReportPart};
use mcc_core::scenario::{run, ScenarioConfig};

fn main() -> mcc_core::Result<()> {
    let scenario = ScenarioConfig::published().resolve()?;
    let report = run(&scenario)?;

    let part = ReportPart::Matrix {
        records: &report.matrix,
        catalog: &scenario.catalog,
        arithmetic: scenario.eval.arithmetic,
    };
    print!(
        "{}",
        emit_table(part, Format::Markdown, EmitOptions::default())
    );

    println!("\nledgered cells:");
    for c in report.ledger() {
        println!("  {c}");
    }
    let bad = report
        .table_checks
        .iter()
        .filter(|c| c.is_unexpected())
        .count();
    println!(
        "\n{} cells compared, {bad} outside tolerance",
        report.table_checks.len()
    );
    Ok(())
}
