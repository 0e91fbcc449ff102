//! Command line front end: enumeration, classification, realization, poset
//! emission, and the verification sweeps.
//!
//! Exit codes: 0 success, 1 validation or property failure, 2 usage or input
//! error, 3 certificate failure.

use clap::{Args, Parser, Subcommand};
use lrembed::engine::{height_sequence_of, tableau_of_embedding, EmbeddingInstance};
use lrembed::partition::Partition;
use lrembed::pmap::{enumerate_partial_maps, equivalence_classes};
use lrembed::pole::{count_endo_submodules, tableau_of_cyclic, CyclicType, HeightSequence};
use lrembed::poset::{build_boundary_poset, emit_hasse_dot, PosetError};
use lrembed::tableau::{enumerate_lr, LRTableau};
use lrembed::verify;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lrembed",
    version,
    about = "Tableaux, poles, and invariant subspaces of nilpotent operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ShapeArgs {
    /// Content partition, comma separated, empty string for the empty one
    #[arg(long, default_value = "")]
    alpha: String,
    /// Ambient partition
    #[arg(long, default_value = "")]
    beta: String,
    /// Quotient partition
    #[arg(long, default_value = "")]
    gamma: String,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate or validate tableaux of a given shape and content
    Tableaux {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Print only the number of tableaux
        #[arg(long, conflicts_with_all = ["list", "check"])]
        count: bool,
        /// Print the tableaux as JSON
        #[arg(long, conflicts_with = "check")]
        list: bool,
        /// Validate a tableau file ({"chain": ...} or {"grid": ...})
        #[arg(long, value_name = "FILE")]
        check: Option<PathBuf>,
    },
    /// Partial maps on a tableau: list, classes, or classes with the empty
    /// box property and their pole decompositions
    Pmaps {
        /// Tableau file ({"chain": ...} or {"grid": ...})
        #[arg(long, value_name = "FILE")]
        file: PathBuf,
        /// List every partial map
        #[arg(long, conflicts_with_all = ["classes", "ebp_only"])]
        list: bool,
        /// Group maps into equivalence classes
        #[arg(long, conflicts_with = "ebp_only")]
        classes: bool,
        /// Only classes with the empty box property, with decompositions
        #[arg(long)]
        ebp_only: bool,
    },
    /// Height sequences and poles
    Poles {
        /// Strictly increasing height sequence, comma separated
        #[arg(long, default_value = "")]
        sequence: String,
        /// Extra empty blocks
        #[arg(long, default_value = "")]
        padding: String,
        /// Split the extended pole at this non-gap index
        #[arg(long)]
        split: Option<usize>,
        /// Also realize the embedding over F_p
        #[arg(long)]
        realize: bool,
        /// Count endomorphism submodules of this module type instead
        #[arg(long, value_name = "BETA")]
        endo_count: Option<String>,
        #[arg(long, default_value_t = 5)]
        prime: u32,
    },
    /// Recompute data of an explicit embedding from a file
    Embed {
        /// Embedding file ({"p": ..., "beta": [...], "generators": [[...]]})
        #[arg(long, value_name = "FILE")]
        file: PathBuf,
        /// Print the tableau recomputed from ranks
        #[arg(long)]
        tableau: bool,
        /// Print the height sequence of each generator
        #[arg(long)]
        heights: bool,
    },
    /// Build the boundary poset of a shape
    Poset {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Write the Hasse diagram in DOT format ("-" for stdout)
        #[arg(long, value_name = "OUT")]
        dot: Option<String>,
        /// Write the poset as JSON ("-" for stdout)
        #[arg(long, value_name = "OUT")]
        json: Option<String>,
        /// Certify every box-move edge by a parameter sweep
        #[arg(long)]
        certify: bool,
        #[arg(long, default_value_t = 5)]
        prime: u32,
    },
    /// Run a verification suite and print one JSON line per property
    Verify {
        /// One of: intro-family, pole-roundtrip, endo-count, classification,
        /// equivalence, rook-strip, box-family, field-stability, all
        suite: String,
        #[arg(long, default_value_t = 5)]
        prime: u32,
        /// Weight bound for the swept shapes (suite-specific default)
        #[arg(long)]
        max_size: Option<usize>,
    },
}

fn parse_partition(s: &str, what: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<usize>, _> = s.split(',').map(|x| x.trim().parse::<usize>()).collect();
    let parts = parts.map_err(|e| format!("{what}: {e}"))?;
    Partition::new(parts).map_err(|e| format!("{what}: {e}"))
}

fn load_tableau(path: &PathBuf) -> Result<LRTableau, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if let Some(grid) = value.get("grid") {
        let grid: Vec<Vec<usize>> =
            serde_json::from_value(grid.clone()).map_err(|e| e.to_string())?;
        return LRTableau::from_grid(&grid).map_err(|e| e.to_string());
    }
    let t: LRTableau = serde_json::from_value(value).map_err(|e| e.to_string())?;
    t.check_lattice().map_err(|e| e.to_string())?;
    Ok(t)
}

fn tableau_json(t: &LRTableau) -> serde_json::Value {
    json!({ "chain": t.chain(), "grid": t.grid(), "content": t.content() })
}

fn write_out(target: &str, content: &str) -> Result<(), String> {
    if target == "-" {
        print!("{content}");
        Ok(())
    } else {
        std::fs::write(target, content).map_err(|e| format!("{target}: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Tableaux {
            shape,
            count,
            list,
            check,
        } => {
            if let Some(path) = check {
                return match load_tableau(&path) {
                    Ok(t) => {
                        println!(
                            "{}",
                            json!({"status": "valid", "tableau": tableau_json(&t)})
                        );
                        Ok(ExitCode::SUCCESS)
                    }
                    Err(e) => {
                        println!("{}", json!({"status": "invalid", "violation": e}));
                        Ok(ExitCode::from(1))
                    }
                };
            }
            let alpha = parse_partition(&shape.alpha, "--alpha")?;
            let beta = parse_partition(&shape.beta, "--beta")?;
            let gamma = parse_partition(&shape.gamma, "--gamma")?;
            let tabs = enumerate_lr(&alpha, &beta, &gamma).map_err(|e| e.to_string())?;
            if count {
                println!("{}", tabs.len());
            } else if list {
                let arr: Vec<serde_json::Value> = tabs.iter().map(tableau_json).collect();
                println!("{}", serde_json::to_string_pretty(&arr).unwrap());
            } else {
                println!("{}", tabs.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pmaps {
            file,
            list,
            classes,
            ebp_only,
        } => {
            let t = load_tableau(&file)?;
            let maps = enumerate_partial_maps(&t);
            let map_json = |m: &lrembed::pmap::PartialMap| -> serde_json::Value {
                let assignment: Vec<serde_json::Value> = m
                    .pairs()
                    .iter()
                    .map(|(s, t)| {
                        json!({"from": [s.pos.row, s.pos.col], "to": [t.pos.row, t.pos.col]})
                    })
                    .collect();
                json!({"assignment": assignment, "ebp": m.satisfies_ebp()})
            };
            if list {
                for m in &maps {
                    println!("{}", map_json(m));
                }
                return Ok(ExitCode::SUCCESS);
            }
            let groups = equivalence_classes(&maps);
            let mut shown = 0;
            for members in &groups {
                let rep = &maps[members[0]];
                let ebp = rep.satisfies_ebp();
                if ebp_only && !ebp {
                    continue;
                }
                shown += 1;
                let mut obj = json!({
                    "representative": map_json(rep),
                    "size": members.len(),
                    "ebp": ebp,
                });
                if ebp {
                    let d = rep.decomposition().map_err(|e| e.to_string())?;
                    obj["decomposition"] = serde_json::to_value(&d).unwrap();
                }
                println!("{obj}");
            }
            if !classes && !ebp_only {
                println!(
                    "{}",
                    json!({"maps": maps.len(), "classes": groups.len(), "shown": shown})
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Poles {
            sequence,
            padding,
            split,
            realize,
            endo_count,
            prime,
        } => {
            if let Some(beta) = endo_count {
                let beta = parse_partition(&beta, "--endo-count")?;
                println!("{}", count_endo_submodules(&beta));
                return Ok(ExitCode::SUCCESS);
            }
            let seq = parse_sequence(&sequence)?;
            let padding = parse_partition(&padding, "--padding")?;
            if let Some(u) = split {
                let c = seq.extended_split(u).map_err(|e| e.to_string())?;
                println!(
                    "{}",
                    json!({"pole": c.pole, "padding": c.padding, "ambient": c.ambient()})
                );
                return Ok(ExitCode::SUCCESS);
            }
            let cyclic = CyclicType {
                pole: seq.clone(),
                padding,
            };
            let tab = tableau_of_cyclic(&cyclic);
            let mut obj = json!({
                "sequence": seq,
                "gaps": seq.gaps(),
                "ambient": cyclic.ambient(),
                "tableau": tableau_json(&tab),
            });
            if let Ok(data) = seq.pole_data() {
                obj["blocks"] = json!(data.parts);
                obj["shifts"] = json!(data.shifts);
            }
            if realize {
                check_prime(prime)?;
                let inst =
                    lrembed::engine::realize_pole(&cyclic, prime).map_err(|e| e.to_string())?;
                obj["embedding"] = serde_json::to_value(&inst).unwrap();
            }
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Embed {
            file,
            tableau,
            heights,
        } => {
            let text =
                std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let inst: EmbeddingInstance = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let mut obj = json!({
                "p": inst.space().prime(),
                "beta": inst.space().beta(),
                "submodule_dim": inst.submodule().dim(),
            });
            if tableau || !heights {
                obj["tableau"] = tableau_json(&tableau_of_embedding(&inst));
            }
            if heights {
                let hs: Vec<HeightSequence> = inst
                    .generators()
                    .iter()
                    .map(|g| height_sequence_of(inst.space(), g))
                    .collect();
                obj["heights"] = serde_json::to_value(&hs).unwrap();
            }
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Poset {
            shape,
            dot,
            json: json_out,
            certify,
            prime,
        } => {
            check_prime(prime)?;
            let alpha = parse_partition(&shape.alpha, "--alpha")?;
            let beta = parse_partition(&shape.beta, "--beta")?;
            let gamma = parse_partition(&shape.gamma, "--gamma")?;
            let poset = match build_boundary_poset(&alpha, &beta, &gamma, certify, prime) {
                Ok(p) => p,
                Err(PosetError::CertificateFailure { from, to, detail }) => {
                    eprintln!("certificate failure on edge {from} -> {to}: {detail}");
                    return Ok(ExitCode::from(3));
                }
                Err(e) => return Err(e.to_string()),
            };
            if let Some(target) = &dot {
                write_out(target, &emit_hasse_dot(&poset))?;
            }
            if let Some(target) = &json_out {
                write_out(target, &serde_json::to_string_pretty(&poset).unwrap())?;
            }
            if dot.is_none() && json_out.is_none() {
                println!(
                    "{}",
                    json!({
                        "nodes": poset.nodes.len(),
                        "box_edges": poset.box_edges().count(),
                        "hasse_edges": poset.hasse_edges().len(),
                        "certified": certify,
                    })
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            prime,
            max_size,
        } => {
            check_prime(prime)?;
            let reports = run_suite(&suite, prime, max_size)?;
            let mut ok = true;
            for report in &reports {
                for prop in &report.properties {
                    ok &= prop.passed();
                    println!("{}", serde_json::to_string(prop).unwrap());
                }
            }
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn parse_sequence(s: &str) -> Result<HeightSequence, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(HeightSequence::empty());
    }
    let heights: Result<Vec<usize>, _> = s.split(',').map(|x| x.trim().parse()).collect();
    HeightSequence::new(heights.map_err(|e| format!("--sequence: {e}"))?).map_err(|e| e.to_string())
}

fn check_prime(p: u32) -> Result<(), String> {
    if ![2, 3, 5, 7].contains(&p) {
        return Err(format!("--prime must be one of 2, 3, 5, 7 (got {p})"));
    }
    Ok(())
}

fn run_suite(
    suite: &str,
    prime: u32,
    max_size: Option<usize>,
) -> Result<Vec<verify::SuiteReport>, String> {
    let size = |default: usize| max_size.unwrap_or(default);
    Ok(match suite {
        "intro-family" => vec![verify::verify_intro_family(prime, true)],
        "pole-roundtrip" => vec![verify::verify_pole_roundtrip(size(8), prime)],
        "endo-count" => vec![verify::verify_endo_count(size(8), prime)],
        "classification" => vec![verify::verify_classification(size(8))],
        "equivalence" => vec![verify::verify_equivalence(size(7), 6)],
        "rook-strip" => vec![verify::verify_rook_strip(size(12), 8)],
        "box-family" => vec![verify::verify_box_family(size(12), &[prime])],
        "field-stability" => vec![verify::verify_box_family(size(12), &[2, 3, 5])],
        "all" => verify::verify_all(prime),
        other => return Err(format!("unknown suite `{other}`")),
    })
}
