//! `toricslip`: JSON front end for the toricslip library.
//!
//! Every command prints one JSON document. Exit status is 0 when the
//! computation finished, 1 when a requested gate failed (`--gate` on the
//! tangent commands, or a failing example), and 2 on bad input.

mod commands;
mod input;
mod registry;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use commands::{CustomArgs, Report};
use input::{InputError, Result};

#[derive(Parser)]
#[command(name = "toricslip", version, about = "Ideals of points in Cox rings of toric varieties")]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    json_out: Option<std::path::PathBuf>,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Target {
    /// Ring: JSON descriptor, file holding one, or a shorthand like P2, P1xP1, H1.
    #[arg(long)]
    ring: String,
    /// Ideal generators: a file or inline text such as "a0^2, a0*a1".
    #[arg(long, allow_hyphen_values = true)]
    ideal: String,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of S/I on a window.
    Hf {
        #[command(flatten)]
        target: Target,
        #[arg(long, alias = "degree")]
        window: String,
        /// Also compare with the Hilbert function of r general points.
        #[arg(long)]
        r: Option<u64>,
    },
    /// Saturation by the irrelevant ideal.
    Saturate {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        order: Option<String>,
    },
    /// Intersection with the Cox ring of some factors (1-based list).
    Restrict {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        factors: String,
        #[arg(long)]
        order: Option<String>,
    },
    /// Preimage of an ideal of the target ring under a graded map.
    Preimage {
        /// Map file, inline JSON, or `h1-blowdown`.
        #[arg(long)]
        map: String,
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
        #[arg(long)]
        saturate: bool,
    },
    /// Map to P^k given by the monomials of one degree, with its hypotheses.
    SegreCheck {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        window: Option<i64>,
    },
    /// dim Hom(I, S/I) in degree zero.
    HomDim {
        #[command(flatten)]
        target: Target,
    },
    /// dim Ext^1(J/I, S/J) in degree zero; J defaults to the saturation of I.
    Ext1Dim {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        over: Option<String>,
    },
    /// Factor criterion on a product of projective spaces.
    Tangent {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        r: u64,
        /// 1-based factors; all factors when omitted.
        #[arg(long)]
        factor: Option<String>,
        /// Exit 1 unless some report is excluded.
        #[arg(long)]
        gate: bool,
    },
    /// Criterion with custom degree sets A inside B.
    TangentCustom {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        r: u64,
        /// `all`, `none`, or minimal degrees like `0,2` or `3,0;0,3`.
        #[arg(long)]
        a: String,
        #[arg(long, default_value = "all")]
        b: String,
        /// `builtin:I`, `witness`, or `user-asserted`.
        #[arg(long, default_value = "witness")]
        sufficiency: String,
        /// Witness family: `projective-shift:E`, `hirzebruch-fiber`, `factor-square:I`, or JSON.
        #[arg(long)]
        witness: Option<String>,
        #[arg(long)]
        window: Option<String>,
        #[arg(long, default_value_t = 10)]
        l_bound: u32,
        #[arg(long)]
        gate: bool,
    },
    /// Lift an ideal of r points on X to X x Y.
    Lift3 {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        y: String,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        order: Option<String>,
    },
    /// Apolarity lift of a saturated ideal of r points in P^n.
    Lift4 {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        r: u64,
    },
    /// The non-saturated ideal on P1 x P1 and its preimage in P^(2r+1).
    P1p1 {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        window: Option<String>,
    },
    /// Lift conditions of a graded map.
    MapCheck {
        #[arg(long)]
        map: String,
        /// Also report surjectivity on this window of source degrees.
        #[arg(long)]
        degrees: Option<String>,
    },
    /// Irreducibility of the Hilbert scheme of r points on a product.
    Classify {
        #[arg(long)]
        r: u64,
        /// Dimensions of the factors, e.g. `2` or `1,1`.
        #[arg(long)]
        ns: String,
    },
    /// Run worked examples against their frozen expectations.
    Example {
        id: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

fn run(command: Command) -> Result<Report> {
    match command {
        Command::Hf { target, window, r } => commands::hf(&target.ring, &target.ideal, &window, r),
        Command::Saturate { target, order } => commands::saturate(&target.ring, &target.ideal, order.as_deref()),
        Command::Restrict { target, factors, order } => {
            commands::restrict(&target.ring, &target.ideal, &factors, order.as_deref())
        }
        Command::Preimage { map, ideal, saturate } => commands::preimage_cmd(&map, &ideal, saturate),
        Command::SegreCheck { ring, u, r, window } => commands::segre_check(&ring, &u, r, window),
        Command::HomDim { target } => commands::hom_dim(&target.ring, &target.ideal),
        Command::Ext1Dim { target, over } => commands::ext1_dim(&target.ring, &target.ideal, over.as_deref()),
        Command::Tangent { target, r, factor, gate } => {
            commands::tangent(&target.ring, &target.ideal, r, factor.as_deref(), gate)
        }
        Command::TangentCustom { target, r, a, b, sufficiency, witness, window, l_bound, gate } => {
            commands::tangent_custom(&CustomArgs {
                ring: target.ring,
                ideal: target.ideal,
                r,
                a,
                b,
                sufficiency,
                witness,
                window,
                l_bound,
                gate,
            })
        }
        Command::Lift3 { target, y, r, window, order } => {
            commands::lift3(&target.ring, &target.ideal, &y, r, window.as_deref(), order.as_deref())
        }
        Command::Lift4 { target, r } => commands::lift4(&target.ring, &target.ideal, r),
        Command::P1p1 { r, window } => commands::p1p1(r, window.as_deref()),
        Command::MapCheck { map, degrees } => commands::map_check(&map, degrees.as_deref()),
        Command::Classify { r, ns } => commands::classify(r, &ns),
        Command::Example { id, all } => example(id, all),
    }
}

fn example(id: Option<String>, all: bool) -> Result<Report> {
    let reports = match (id, all) {
        (None, true) => registry::run_all(),
        (Some(id), false) => match registry::find(&id) {
            Some(case) => vec![case.run()],
            None => {
                let known: Vec<&str> = registry::registry().iter().map(|c| c.id).collect();
                return input::fail(format!("unknown example `{id}`; known: {}", known.join(", ")));
            }
        },
        _ => return input::fail("give either an example id or --all"),
    };
    let pass = reports.iter().all(|r| r.pass);
    Ok(Report { body: json!({ "command": "example", "pass": pass, "cases": reports }), gate_failed: !pass })
}

fn emit(cli_out: Option<&std::path::Path>, pretty: bool, report: &Report) -> std::result::Result<(), InputError> {
    let text = if pretty { serde_json::to_string_pretty(&report.body)? } else { serde_json::to_string(&report.body)? };
    match cli_out {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => {
            if let Err(e) = writeln!(std::io::stdout().lock(), "{text}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(e.into());
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let report = match run(cli.command) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(cli.json_out.as_deref(), cli.pretty, &report) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(if report.gate_failed { 1 } else { 0 })
}
