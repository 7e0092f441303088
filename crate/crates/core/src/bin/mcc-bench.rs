use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mcc_core::aka::{run_aka, seeded_world, AkaOptions, IdentityMode, Tamper};
use mcc_core::business::{hourly_cost, simplified_comparison, BusinessParams, CostRole};
use mcc_core::golden::verify;
use mcc_core::report::{emit_table, format_number, EmitOptions, Format, ReportPart};
use mcc_core::scenario::{Scenario, ScenarioConfig, CONFIG_ENV};
use mcc_core::{DelayArithmetic, Error, Scheme};

const EXIT_INVALID: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

#[derive(Parser)]
#[command(
    name = "mcc-bench",
    version,
    about = "Mobile cloud offloading benchmark"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Delay, power and cost for every architecture and application.
    Evaluate {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        provenance: bool,
    },
    /// Rank architectures under one grading scheme.
    Rank {
        /// 1 delay, 2 power, 3 cost, 4 privacy and mobility, 5 scalability.
        #[arg(long)]
        scheme: Option<String>,
        /// Place the operator cloud among all other architectures instead.
        #[arg(long, conflicts_with = "scheme")]
        ocmca: bool,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value = "markdown")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        provenance: bool,
    },
    /// Multicast business model: per-user cost and operator revenue.
    Business {
        #[arg(long, default_value_t = 10.0)]
        m: f64,
        #[arg(long = "big-m", default_value_t = 100)]
        big_m: u32,
        #[arg(long, default_value_t = 100)]
        n: u32,
        #[arg(long, default_value_t = 1.0)]
        rq: f64,
        #[arg(long, default_value_t = 1.0)]
        rp: f64,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
        #[arg(long, default_value_t = 0.0)]
        c: f64,
        #[arg(long, default_value_t = 60)]
        updates_per_hour: u32,
        #[arg(long)]
        strict_table: bool,
    },
    /// Run one authentication exchange and print its transcript.
    AkaTrace {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        tamper: Option<TamperArg>,
        #[arg(long, default_value = "imsi")]
        identity: IdentityArg,
    },
    /// Compare the published grid with the embedded reference tables.
    VerifyPaper {
        #[arg(long, default_value = "int32")]
        delay_arithmetic: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TamperArg {
    Mac,
    Res,
    Snid,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityArg {
    Imsi,
    Guti,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INVALID)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn load_scenario(path: Option<PathBuf>) -> Result<Scenario, Error> {
    let path = path.or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    let config = match path {
        Some(p) => ScenarioConfig::load(&p)?,
        None => ScenarioConfig::published(),
    };
    config.resolve()
}

fn write_out(text: &str, out: Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Evaluate {
            config,
            format,
            out,
            provenance,
        } => {
            let format: Format = format.parse()?;
            let scenario = load_scenario(config)?;
            let report = mcc_core::scenario::run(&scenario)?;
            let text = emit_table(
                ReportPart::Matrix {
                    records: &report.matrix,
                    catalog: &scenario.catalog,
                    arithmetic: scenario.eval.arithmetic,
                },
                format,
                EmitOptions { provenance },
            );
            write_out(&text, out)?;
        }
        Command::Rank {
            scheme,
            ocmca,
            config,
            format,
            out,
            provenance,
        } => {
            let format: Format = format.parse()?;
            let scenario = load_scenario(config)?;
            let report = mcc_core::scenario::run(&scenario)?;
            let opts = EmitOptions { provenance };
            let text = if ocmca {
                emit_table(ReportPart::OcmcaRanks(&report.ocmca_ranks), format, opts)
            } else {
                let scheme: Scheme = scheme.as_deref().unwrap_or("1").parse()?;
                let table = report.rank_table(scheme).ok_or_else(|| {
                    Error::UnknownScheme(format!("{scheme} (no architectures to rank)"))
                })?;
                emit_table(ReportPart::Ranks(table), format, opts)
            };
            write_out(&text, out)?;
        }
        Command::Business {
            m,
            big_m,
            n,
            rq,
            rp,
            a,
            b,
            c,
            updates_per_hour,
            strict_table,
        } => {
            let p = BusinessParams {
                a,
                b,
                c,
                m,
                n,
                big_m,
                rq,
                rp,
                updates_per_hour,
                strict_table,
            };
            let v = p.violations();
            if !v.is_empty() {
                return Err(Error::Invalid(v));
            }
            println!("architecture,user_cost_per_b,operator_revenue_per_channel_per_b,note");
            for row in simplified_comparison(&p) {
                println!(
                    "{},{},{},{}",
                    row.architecture,
                    format_number(row.user_cost / p.b),
                    format_number(row.operator_revenue_per_channel / p.b),
                    row.note
                );
            }
            println!();
            println!("role,hourly_cost");
            for role in CostRole::ALL {
                println!("{},{}", role.slug(), format_number(hourly_cost(role, &p)));
            }
        }
        Command::AkaTrace {
            seed,
            tamper,
            identity,
        } => {
            let (mut ue, mut mme, hss) = seeded_world(seed);
            let options = AkaOptions {
                tamper: match tamper {
                    None => Tamper::None,
                    Some(TamperArg::Mac) => Tamper::Mac,
                    Some(TamperArg::Res) => Tamper::Res,
                    Some(TamperArg::Snid) => Tamper::Snid,
                },
                identity: match identity {
                    IdentityArg::Imsi => IdentityMode::Imsi,
                    IdentityArg::Guti => IdentityMode::Guti,
                },
            };
            print!("{}", run_aka(&mut ue, &mut mme, &hss, &options).dump());
        }
        Command::VerifyPaper { delay_arithmetic } => {
            let arithmetic: DelayArithmetic = delay_arithmetic.parse()?;
            let mut config = ScenarioConfig::published();
            config.options.delay_arithmetic = Some(delay_arithmetic);
            let scenario = config.resolve()?;
            debug_assert_eq!(scenario.eval.arithmetic, arithmetic);
            let v = verify(&scenario.catalog, &scenario.eval)?;
            print!("{}", v.render());
            if !v.is_clean() {
                return Ok(ExitCode::from(EXIT_MISMATCH));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
