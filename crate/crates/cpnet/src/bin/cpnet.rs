//! Command-line front end: validate and serialize models, run seeded
//! simulations, build and analyze state spaces.
//!
//! Exit codes: 0 success, 1 parse/validation/usage errors, 2 analysis
//! refused (e.g. truncated state space), 3 internal error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cpnet::compiled::CompiledNet;
use cpnet::dsl;
use cpnet::engine::{self, SimulationConfig};
use cpnet::gscm::{build_gscm_net, GscmParameters};
use cpnet::statespace::{self, Limits};

const EXIT_OK: u8 = 0;
const EXIT_INVALID: u8 = 1;
const EXIT_REFUSED: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "cpnet", version, about = "Colored Petri net toolkit", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a model file and report diagnostics.
    Validate { file: PathBuf },
    /// Run the seeded random-firing simulator.
    Simulate(SimulateArgs),
    /// Build the reachability graph and run every analysis.
    Explore(ExploreArgs),
    /// Write a parameterized green supply chain model file.
    Gscm(GscmArgs),
}

#[derive(Args)]
struct SimulateArgs {
    file: PathBuf,
    /// Maximum number of firings.
    #[arg(long, default_value_t = 50_000)]
    steps: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Record the firing trace and include it in the JSON report.
    #[arg(long)]
    trace: bool,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct ExploreArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 5_000_000)]
    max_states: usize,
    #[arg(long, default_value_t = 50_000_000)]
    max_arcs: usize,
    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 300)]
    timeout: u64,
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write a DOT rendering (graphs up to 2000 nodes).
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Args)]
struct GscmArgs {
    #[arg(long, default_value_t = 1000)]
    raw_stock: u64,
    /// Initial cash override, e.g. --cash manufacturer=5000. Actors:
    /// manufacturer, wholesaler, retailer, customer, collecting, recycling,
    /// disassembly, secondary, agency.
    #[arg(long, value_name = "ACTOR=N")]
    cash: Vec<String>,
    #[arg(long)]
    emit: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                return ExitCode::from(EXIT_OK);
            }
            eprint!("{err}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let code = match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Simulate(args) => cmd_simulate(&args),
        Command::Explore(args) => cmd_explore(&args),
        Command::Gscm(args) => cmd_gscm(&args),
    };
    ExitCode::from(code)
}

fn load_net(file: &PathBuf) -> Result<CompiledNet, u8> {
    let source = match fs::read_to_string(file) {
        Ok(s) => s,
        Err(err) => {
            eprintln!("error: cannot read {}: {err}", file.display());
            return Err(EXIT_INVALID);
        }
    };
    let net = match dsl::parse_net(&source) {
        Ok(net) => net,
        Err(errors) => {
            for e in &errors {
                eprintln!("{}:{e}", file.display());
            }
            return Err(EXIT_INVALID);
        }
    };
    CompiledNet::compile(net).map_err(|diags| {
        for d in &diags {
            eprintln!("{}: {d}", file.display());
        }
        EXIT_INVALID
    })
}

fn cmd_validate(file: &PathBuf) -> u8 {
    match load_net(file) {
        Ok(net) => {
            println!(
                "ok: {} ({} color sets, {} places, {} transitions)",
                net.net().name,
                net.net().color_sets.len(),
                net.place_count(),
                net.transition_count()
            );
            EXIT_OK
        }
        Err(code) => code,
    }
}

fn write_output(path: &PathBuf, contents: &str) -> Result<(), u8> {
    fs::write(path, contents).map_err(|err| {
        eprintln!("error: cannot write {}: {err}", path.display());
        EXIT_INTERNAL
    })
}

fn cmd_simulate(args: &SimulateArgs) -> u8 {
    let net = match load_net(&args.file) {
        Ok(net) => net,
        Err(code) => return code,
    };
    let config = SimulationConfig {
        max_steps: args.steps,
        seed: args.seed,
        record_trace: args.trace,
    };
    let report = engine::simulate(&net, &config);

    println!("steps: {}", report.steps_executed);
    println!(
        "terminated: {}",
        match report.terminated {
            engine::Termination::Dead => "dead",
            engine::Termination::StepLimit => "step-limit",
        }
    );
    println!("seed: {}", report.seed);
    println!("rng: {}", report.rng_algorithm);
    println!("transition   fires");
    for (t, count) in net.net().transitions.iter().zip(&report.firing_counts) {
        println!("{:<12} {count}", t.name);
    }

    if let Some(path) = &args.json {
        let mut json = report.to_json(&net);
        if args.trace {
            let events: Vec<serde_json::Value> = report
                .trace
                .as_ref()
                .unwrap()
                .iter()
                .map(|e| {
                    let binding: serde_json::Map<String, serde_json::Value> = e
                        .binding
                        .assignments
                        .iter()
                        .map(|(v, c)| (v.clone(), serde_json::json!(c)))
                        .collect();
                    serde_json::json!({
                        "step": e.step,
                        "transition": e.transition,
                        "binding": binding,
                    })
                })
                .collect();
            json.as_object_mut()
                .unwrap()
                .insert("trace".into(), serde_json::json!(events));
        }
        let text = format!("{}\n", serde_json::to_string_pretty(&json).unwrap());
        if let Err(code) = write_output(path, &text) {
            return code;
        }
    }
    EXIT_OK
}

fn cmd_explore(args: &ExploreArgs) -> u8 {
    let net = match load_net(&args.file) {
        Ok(net) => net,
        Err(code) => return code,
    };
    if args.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return EXIT_INVALID;
    }
    let limits = Limits {
        max_states: args.max_states,
        max_arcs: args.max_arcs,
        max_seconds: args.timeout,
    };
    let graph = statespace::explore_with_threads(&net, &limits, args.threads);
    let report = statespace::analyze(&net, &graph);

    println!("stateCount: {}", report.state_count);
    println!("arcCount: {}", report.arc_count);
    if let Some(v) = &report.verdicts {
        println!("deadMarkings: {}", v.dead_marking_count);
        println!("sccCount: {}", v.scc_count);
        println!(
            "homeMarkings: {}",
            if v.home_marking_count == 0 {
                "none".to_string()
            } else {
                v.home_marking_count.to_string()
            }
        );
        println!("acyclic: {}", v.acyclic);
        println!(
            "infiniteOccurrenceSequences: {}",
            v.infinite_occurrence_sequences_exist
        );
        if !v.dead_transitions.is_empty() {
            println!("deadTransitions: {}", v.dead_transitions.join(", "));
        }
        println!("bounds:");
        println!("  place        lower  upper");
        for (pi, place) in net.net().places.iter().enumerate() {
            let b = &v.bounds[pi];
            println!("  {:<12} {:<6} {}", place.name, b.lower_total, b.upper_total);
        }
    } else {
        println!("complete: false");
    }

    if let Some(path) = &args.json {
        let text = format!(
            "{}\n",
            serde_json::to_string_pretty(&report.to_json(&net)).unwrap()
        );
        if let Err(code) = write_output(path, &text) {
            return code;
        }
    }
    if let Some(path) = &args.dot {
        match statespace::to_dot(&net, &graph) {
            Ok(dot) => {
                if let Err(code) = write_output(path, &dot) {
                    return code;
                }
            }
            Err(err) => {
                eprintln!("error: {err}");
                return EXIT_REFUSED;
            }
        }
    }
    if !report.complete {
        eprintln!("error: exploration truncated by limits; verdict analyses refused");
        return EXIT_REFUSED;
    }
    EXIT_OK
}

fn cmd_gscm(args: &GscmArgs) -> u8 {
    let mut params = GscmParameters {
        raw_material_stock: args.raw_stock,
        ..GscmParameters::default()
    };
    for spec in &args.cash {
        let Some((actor, amount)) = spec.split_once('=') else {
            eprintln!("error: --cash expects ACTOR=N, got {spec}");
            return EXIT_INVALID;
        };
        let Ok(amount) = amount.parse::<u64>() else {
            eprintln!("error: --cash amount must be a non-negative integer, got {amount}");
            return EXIT_INVALID;
        };
        let slot = match actor {
            "manufacturer" => &mut params.manufacturer_cash,
            "wholesaler" => &mut params.wholesaler_cash,
            "retailer" => &mut params.retailer_cash,
            "customer" => &mut params.customer_cash,
            "collecting" => &mut params.collecting_cash,
            "recycling" => &mut params.recycling_cash,
            "disassembly" => &mut params.disassembly_cash,
            "secondary" => &mut params.secondary_market_cash,
            "agency" => &mut params.agency_cash,
            other => {
                eprintln!("error: unknown actor {other}");
                return EXIT_INVALID;
            }
        };
        *slot = amount;
    }
    let net = match build_gscm_net(&params) {
        Ok(net) => net,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_INVALID;
        }
    };
    match write_output(&args.emit, &dsl::serialize_net(&net)) {
        Ok(()) => EXIT_OK,
        Err(code) => code,
    }
}
