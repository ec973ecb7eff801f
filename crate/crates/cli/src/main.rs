use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use rcc_core::disk2d::{classify_scene, Scene};
use rcc_core::dyadic::{self, BwRegion};
use rcc_core::interval1d::{self, IntervalRegion};
use rcc_core::netcsp::{closure, scenario_search, Closure, Network};
use rcc_core::relalg::{
    derive_table, reduced_generators, reduction_stats, validate_table, BaseRel, Calculus, CompTable,
};
use rcc_core::verify::{run_suite, Suite, SuiteOptions};

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const INCONSISTENT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rcc11",
    version,
    about = "Qualitative spatial reasoning with the RCC11 relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derive the composition table from its fifteen generator cells and
    /// validate it.
    Tables {
        /// Write the derived table here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compare against this table file instead of the built-in one.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Calculus whose reduction statistics are reported.
        #[arg(long, default_value = "rcc11")]
        calculus: Calculus,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        depth: Option<u8>,
        #[arg(long, value_parser = positive)]
        trials: Option<usize>,
        #[arg(long, value_parser = positive)]
        budget: Option<usize>,
        /// Chain length for the chain and hole suites.
        #[arg(long, value_parser = positive)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every ordered pair of regions in a scene file as CSV.
    Classify {
        scene: PathBuf,
        /// Append the nine-intersection matrix (disk scenes only).
        #[arg(long)]
        matrices: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Close a constraint network, or search it for an atomic scenario.
    Solve {
        network: PathBuf,
        #[arg(long)]
        scenario: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// A failure carrying its exit code.
struct Fail(u8, String);

fn usage(msg: impl std::fmt::Display) -> Fail {
    Fail(USAGE, msg.to_string())
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Fail> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(usage),
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_tables(out: Option<&Path>, golden: Option<&Path>, calculus: Calculus) -> Result<u8, Fail> {
    let gens = reduced_generators();
    let derived = derive_table(&gens).map_err(|e| Fail(FAILED, e.to_string()))?;
    let reference = match golden {
        Some(p) => {
            CompTable::from_text(&read(p)?).map_err(|e| usage(format!("{}: {e}", p.display())))?
        }
        None => rcc_core::relalg::golden_table(),
    };
    let validation = validate_table(&derived);
    let diff: Vec<Value> = derived
        .diff(&reference)
        .into_iter()
        .map(|(r, s, d, g)| {
            let mut t = CompTable::empty();
            t.set(r, s, d);
            let line = |t: &CompTable| {
                t.to_text()
                    .lines()
                    .nth(r.index() * 11 + s.index())
                    .unwrap_or("")
                    .to_string()
            };
            let derived_line = line(&t);
            t.set(r, s, g);
            json!({ "pair": format!("{r},{s}"), "derived": derived_line, "golden": line(&t) })
        })
        .collect();
    let equals_golden = diff.is_empty();
    let reduction = match reduction_stats(calculus) {
        Ok(st) => json!({
            "calculus": st.calculus,
            "relations": st.r,
            "generating_set": st.s,
            "T": st.t,
            "ratio": format!("{}/{}", st.ratio_num, st.ratio_den),
            "below_one_eighth": st.below_one_eighth(),
        }),
        Err(e) => json!({ "calculus": calculus, "error": e.to_string() }),
    };
    if let Some(p) = out {
        fs::write(p, derived.to_text()).map_err(|e| usage(format!("{}: {e}", p.display())))?;
    }
    let report = json!({
        "identities_checked": validation.identities_checked,
        "violations": validation.violations,
        "equals_golden": equals_golden,
        "generator_count": gens.len(),
        "entries": derived.entry_count(),
        "diff": diff,
        "reduction": reduction,
    });
    emit(None, &pretty(&report))?;
    Ok(if validation.is_valid() && equals_golden {
        OK
    } else {
        FAILED
    })
}

fn cmd_verify(suite: Suite, opts: SuiteOptions, out: Option<&Path>) -> Result<u8, Fail> {
    let report = run_suite(suite, &opts).map_err(usage)?;
    emit(out, &pretty(&report))?;
    Ok(if report.passed { OK } else { FAILED })
}

fn scene_error(path: &Path, e: serde_json::Error) -> Fail {
    usage(format!(
        "{}:{}:{}: {e}",
        path.display(),
        e.line(),
        e.column()
    ))
}

type Row = (String, String, BaseRel);

/// Ordered-pair rows for a scene file, with matrix bits for disk scenes.
fn scene_rows(path: &Path, text: &str) -> Result<(Vec<Row>, Option<Vec<String>>), Fail> {
    let v: Value = serde_json::from_str(text).map_err(|e| scene_error(path, e))?;
    let model = v.get("model").and_then(Value::as_str).unwrap_or("disk");
    match model {
        "disk" => {
            let scene: Scene = serde_json::from_str(text).map_err(|e| scene_error(path, e))?;
            let regions = scene
                .regions()
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let rows = classify_scene(&regions);
            let bits = rows.iter().map(|r| r.3.to_bits()).collect();
            Ok((
                rows.into_iter().map(|(a, b, r, _)| (a, b, r)).collect(),
                Some(bits),
            ))
        }
        "dyadic" | "interval" => {
            let entries = v
                .get("regions")
                .and_then(Value::as_array)
                .ok_or_else(|| usage(format!("{}: missing `regions` array", path.display())))?;
            let mut named = Vec::new();
            for (i, e) in entries.iter().enumerate() {
                let id = e.get("id").and_then(Value::as_str);
                let lit = e.get("region").and_then(Value::as_str);
                let (Some(id), Some(lit)) = (id, lit) else {
                    return Err(usage(format!(
                        "{}: region {i} needs string `id` and `region`",
                        path.display()
                    )));
                };
                named.push((id.to_string(), lit.to_string()));
            }
            let bad = |id: &str, e: &dyn std::fmt::Display| {
                usage(format!("{}: region `{id}`: {e}", path.display()))
            };
            let mut rows = Vec::new();
            if model == "dyadic" {
                let depth = v
                    .get("depth")
                    .and_then(Value::as_u64)
                    .unwrap_or(dyadic::MAX_DEPTH as u64) as u8;
                let mut regions = Vec::new();
                for (id, lit) in &named {
                    regions.push((id, BwRegion::parse(lit, depth).map_err(|e| bad(id, &e))?));
                }
                for (ia, a) in &regions {
                    for (ib, b) in &regions {
                        if ia != ib {
                            let r = dyadic::classify11(a, b).map_err(|e| bad(ia, &e))?;
                            rows.push((ia.to_string(), ib.to_string(), r));
                        }
                    }
                }
            } else {
                let mut regions = Vec::new();
                for (id, lit) in &named {
                    regions.push((id, lit.parse::<IntervalRegion>().map_err(|e| bad(id, &e))?));
                }
                for (ia, a) in &regions {
                    for (ib, b) in &regions {
                        if ia != ib {
                            rows.push((
                                ia.to_string(),
                                ib.to_string(),
                                interval1d::classify11(a, b),
                            ));
                        }
                    }
                }
            }
            rows.sort();
            Ok((rows, None))
        }
        other => Err(usage(format!(
            "{}: unknown model `{other}`",
            path.display()
        ))),
    }
}

fn cmd_classify(path: &Path, matrices: bool, out: Option<&Path>) -> Result<u8, Fail> {
    let text = read(path)?;
    let (rows, bits) = scene_rows(path, &text)?;
    let mut csv = String::from("id1,id2,relation");
    let bits = match (matrices, bits) {
        (false, _) => None,
        (true, Some(b)) => {
            csv.push_str(",ii,ib,ie,bi,bb,be,ei,eb,ee");
            Some(b)
        }
        (true, None) => return Err(usage("--matrices needs a disk scene")),
    };
    csv.push('\n');
    for (i, (a, b, r)) in rows.iter().enumerate() {
        csv.push_str(&format!("{a},{b},{r}"));
        if let Some(bits) = &bits {
            for ch in bits[i].chars() {
                csv.push(',');
                csv.push(ch);
            }
        }
        csv.push('\n');
    }
    emit(out, &csv)?;
    Ok(OK)
}

fn cmd_solve(path: &Path, scenario: bool, out: Option<&Path>) -> Result<u8, Fail> {
    let net =
        Network::from_json(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let (status, result) = if scenario {
        match scenario_search(&net) {
            Some(s) => ("scenario", Some(s)),
            None => ("none", None),
        }
    } else {
        match closure(&net) {
            Closure::Closed(c) => ("consistent", Some(c)),
            Closure::Inconsistent => ("inconsistent", None),
        }
    };
    let mut report = json!({ "status": status });
    if let Some(n) = &result {
        report["network"] = serde_json::to_value(n.to_file()).expect("serializable");
    }
    emit(out, &pretty(&report))?;
    Ok(if result.is_some() { OK } else { INCONSISTENT })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Tables {
            out,
            golden,
            calculus,
        } => cmd_tables(out.as_deref(), golden.as_deref(), calculus),
        Command::Verify {
            suite,
            seed,
            depth,
            trials,
            budget,
            k,
            out,
        } => cmd_verify(
            suite,
            SuiteOptions {
                seed,
                depth,
                trials,
                budget,
                k,
            },
            out.as_deref(),
        ),
        Command::Classify {
            scene,
            matrices,
            out,
        } => cmd_classify(&scene, matrices, out.as_deref()),
        Command::Solve {
            network,
            scenario,
            out,
        } => cmd_solve(&network, scenario, out.as_deref()),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("rcc11: {msg}");
            ExitCode::from(code)
        }
    }
}
