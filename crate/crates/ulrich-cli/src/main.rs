use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ulrich_core::dualgraph::{
    cycle_from_json, cycle_to_json, enumerate_ulrich_chains, graph_catalog, Cycle, DualGraph, GraphFile, GraphTag,
    DEFAULT_MAX_STEPS,
};
use ulrich_core::presentations::FamilyTag;
use ulrich_core::report::{
    classification_record, classify, cross_check, quotient_sweep, rdp_grid, residue_table, rtp_grid, socle_experiment,
    Classification, CrossCheck, Fields, ReportRecord, Status,
};
use ulrich_core::ulrich::{ReductionSearchPolicy, UlrichCertificate};
use ulrich_core::Error;

#[derive(Parser)]
#[command(name = "ulrich", version, about = "Ulrich ideals of rational triple points and quotient surface singularities")]
struct Cli {
    /// Print machine-readable JSON instead of a table
    #[arg(long, global = true)]
    json: bool,
    /// Try the known family reductions before the generic search
    #[arg(long, global = true, value_enum, default_value_t = Switch::On)]
    seed_reductions: Switch,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Subcommand)]
enum Cmd {
    /// Trace ideal, residue and certified Ulrich ideals of one ring, or of the whole grid
    Classify {
        #[arg(long)]
        tag: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_param: u32,
    },
    /// Computed residue against the closed form for every family up to N
    ResidueTable {
        #[arg(long, default_value_t = 4)]
        max_param: u32,
    },
    /// Ulrich cycles on the quotient singularity catalog; N is the largest weight
    QuotientSweep {
        #[arg(long, default_value_t = 4)]
        max_param: u32,
    },
    /// Algebra-side numbers against the resolution graph
    CrossCheck {
        #[arg(long)]
        tag: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_param: u32,
    },
    /// Cycle computations on a catalog graph or a JSON graph file
    Graph {
        #[arg(long, required_unless_present = "file", conflicts_with = "file")]
        tag: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Cycle as a JSON object `{"E1":1,...}` or a list `(1,2,1)` in vertex order
        #[arg(long)]
        cycle: Option<String>,
        #[arg(value_enum)]
        what: GraphCmd,
    },
    /// Listed Ulrich ideals of the rational double points
    RdpVerify {
        #[arg(long)]
        tag: Option<String>,
    },
    /// Whether A/tr has a one-dimensional socle
    SocleExperiment {
        #[arg(long)]
        tag: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_param: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphCmd {
    Z0,
    Pa,
    Filter,
    Chains,
    Stats,
}

/// Exit status of a finished command.
enum Outcome {
    Pass,
    Mismatch,
    Invariant,
}

impl Outcome {
    fn of_rows(rows: &[ReportRecord]) -> Self {
        if rows.iter().any(|r| r.invariant) {
            Outcome::Invariant
        } else if rows.iter().all(|r| r.status != Status::Fail) {
            Outcome::Pass
        } else {
            Outcome::Mismatch
        }
    }

    fn of_status(s: Status) -> Self {
        if s == Status::Fail {
            Outcome::Mismatch
        } else {
            Outcome::Pass
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::OutOfRange(_) | Error::Unsupported(_) | Error::Graph(_) | Error::Precondition(_) => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut policy = ReductionSearchPolicy::default();
    if cli.seed_reductions == Switch::Off {
        policy = policy.without_seeds();
    }
    match run(&cli, &policy) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Ok(Outcome::Invariant) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli, policy: &ReductionSearchPolicy) -> Result<Outcome, Error> {
    match &cli.cmd {
        Cmd::Classify { tag: Some(t), .. } => classify_one(cli, t.parse()?, policy),
        Cmd::Classify { tag: None, max_param } => {
            check_param(*max_param)?;
            let mut tags = rtp_grid(*max_param);
            tags.extend(rdp_grid());
            tags.push(FamilyTag::Ex52);
            let rows: Vec<ReportRecord> = tags.into_iter().map(|t| ulrich_core::report::classify_row(t, policy)).collect();
            print_rows(cli, &rows, &[Col::Residue, Col::Count, Col::Ng]);
            Ok(Outcome::of_rows(&rows))
        }
        Cmd::ResidueTable { max_param } => {
            let rows = residue_table(*max_param)?;
            print_rows(cli, &rows, &[Col::Residue]);
            Ok(Outcome::of_rows(&rows))
        }
        Cmd::QuotientSweep { max_param } => {
            let rows = quotient_sweep(*max_param)?;
            print_rows(cli, &rows, &[Col::Mult, Col::Chains]);
            Ok(Outcome::of_rows(&rows))
        }
        Cmd::CrossCheck { tag, max_param } => {
            let tags = match tag {
                Some(t) => vec![t.parse()?],
                None => {
                    check_param(*max_param)?;
                    let mut v = rtp_grid(*max_param);
                    v.extend(rdp_grid());
                    v
                }
            };
            let checks = tags.into_iter().map(|t| cross_check(t, policy)).collect::<Result<Vec<_>, _>>()?;
            print_cross(cli, &checks);
            Ok(if checks.iter().all(|c| c.status == Status::Pass) { Outcome::Pass } else { Outcome::Mismatch })
        }
        Cmd::Graph { tag, file, cycle, what } => {
            let g = load_graph(tag.as_deref(), file.as_ref())?;
            let z = match cycle {
                Some(c) => parse_cycle(&g, c)?,
                None => g.fundamental_cycle(),
            };
            println!("{}", graph_output(&g, &z, *what)?);
            Ok(Outcome::Pass)
        }
        Cmd::RdpVerify { tag: Some(t) } => {
            let t: FamilyTag = t.parse()?;
            if !t.is_rdp() {
                return Err(Error::OutOfRange(format!("{t} is not a rational double point")));
            }
            classify_one(cli, t, policy)
        }
        Cmd::RdpVerify { tag: None } => {
            let rows: Vec<ReportRecord> =
                rdp_grid().into_iter().map(|t| ulrich_core::report::classify_row(t, policy)).collect();
            print_rows(cli, &rows, &[Col::Count]);
            Ok(Outcome::of_rows(&rows))
        }
        Cmd::SocleExperiment { tag, max_param } => {
            let tags = match tag {
                Some(t) => vec![t.parse()?],
                None => {
                    check_param(*max_param)?;
                    rtp_grid(*max_param)
                }
            };
            let rows = socle_experiment(&tags)?;
            if cli.json {
                println!("{}", json!({ "rows": rows }));
            } else {
                let body = rows.iter().map(|r| vec![r.tag.clone(), r.residue.to_string(), r.gorenstein.to_string()]).collect();
                print!("{}", table(&["tag", "res", "gorenstein"], body));
            }
            Ok(Outcome::Pass)
        }
    }
}

fn check_param(p: u32) -> Result<(), Error> {
    if p > 6 {
        return Err(Error::OutOfRange(format!("max-param {p} > 6")));
    }
    Ok(())
}

fn load_graph(tag: Option<&str>, file: Option<&PathBuf>) -> Result<DualGraph, Error> {
    match (tag, file) {
        (Some(t), _) => graph_catalog(&t.parse::<GraphTag>()?),
        (None, Some(f)) => {
            let src = std::fs::read_to_string(f)
                .map_err(|e| Error::Parse { pos: 0, msg: format!("cannot read {}: {e}", f.display()) })?;
            GraphFile::parse(&src)?.to_graph()
        }
        (None, None) => Err(Error::Parse { pos: 0, msg: "need --tag or --file".into() }),
    }
}

fn parse_cycle(g: &DualGraph, src: &str) -> Result<Cycle, Error> {
    let s = src.trim();
    if s.starts_with('{') {
        return cycle_from_json(g, s);
    }
    let inner = s.trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    let v = inner
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse { pos: 0, msg: format!("bad coefficient '{p}'") }))
        .collect::<Result<Vec<_>, _>>()?;
    g.cycle_from_vec(v)
}

fn graph_output(g: &DualGraph, z: &Cycle, what: GraphCmd) -> Result<Value, Error> {
    Ok(match what {
        GraphCmd::Z0 => cycle_to_json(g, &g.fundamental_cycle()),
        GraphCmd::Pa => json!(g.arithmetic_genus(z)?),
        GraphCmd::Filter => json!(g.unique_ulrich_filter()),
        GraphCmd::Stats => json!({ "len": g.cycle_length(z)?, "e0": g.cycle_e0(z)?, "mu": g.cycle_mu(z)? }),
        GraphCmd::Chains => {
            let rep = enumerate_ulrich_chains(g, DEFAULT_MAX_STEPS)?;
            let chains: Vec<Value> = rep
                .chains
                .iter()
                .map(|c| {
                    c.steps
                        .iter()
                        .map(|(z, y)| json!({ "z": cycle_to_json(g, z), "y": cycle_to_json(g, y) }))
                        .collect()
                })
                .collect();
            json!({
                "z0": cycle_to_json(g, &rep.z0),
                "count": rep.count(),
                "cycles": rep.cycles().iter().map(|c| cycle_to_json(g, c)).collect::<Vec<_>>(),
                "chains": chains,
                "antinefPruned": rep.antinef_pruned,
                "truncated": rep.truncated,
            })
        }
    })
}

fn classify_one(cli: &Cli, tag: FamilyTag, policy: &ReductionSearchPolicy) -> Result<Outcome, Error> {
    let c = classify(tag, policy)?;
    let rec = classification_record(&c);
    if cli.json {
        println!("{}", classification_json(&c, &rec));
    } else {
        print!("{}", classification_text(&c, &rec));
    }
    Ok(Outcome::of_status(rec.status))
}

fn classification_json(c: &Classification, rec: &ReportRecord) -> Value {
    let tag = c.tag.to_string();
    json!({
        "tag": tag,
        "trace": c.trace,
        "residue": c.residue,
        "nearlyGorenstein": c.nearly_gorenstein,
        "ulrich": c.certificates.iter().map(|x| x.record(&tag)).collect::<Vec<_>>(),
        "rejected": c.rejected.iter().map(|x| x.record(&tag)).collect::<Vec<_>>(),
        "note": c.note,
        "expected": rec.expected,
        "status": rec.status,
    })
}

fn classification_text(c: &Classification, rec: &ReportRecord) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<18} {v}\n"));
    line("tag", c.tag.to_string());
    if let Some(tr) = &c.trace {
        line("trace", tr.join(", "));
    }
    line("residue", pair(&c.residue, &rec.expected.residue));
    line("nearly gorenstein", pair(&c.nearly_gorenstein, &rec.expected.nearly_gorenstein));
    let n = c.certificates.iter().filter(|x| x.is_ulrich()).count();
    line("ulrich ideals", pair(&Some(n), &rec.expected.ulrich_count));
    if let Some(note) = &c.note {
        line("note", note.clone());
    }
    out.push('\n');
    out.push_str(&cert_table(&c.certificates));
    if !c.rejected.is_empty() {
        out.push_str("\nrejected\n");
        out.push_str(&cert_table(&c.rejected));
    }
    out.push_str(&format!("\nstatus {}\n", status_str(rec.status)));
    out
}

fn cert_table(certs: &[UlrichCertificate]) -> String {
    let rows = certs
        .iter()
        .map(|x| {
            vec![
                x.ideal.render_gens().join(", "),
                x.reduction.as_ref().map(|q| q.render_gens().join(", ")).unwrap_or_else(|| "-".into()),
                opt(&x.e0),
                x.mu.to_string(),
                x.len.to_string(),
                x.stable.to_string(),
                x.good.to_string(),
                x.free_test.to_string(),
                opt(&x.contains_trace),
                serde_json::to_value(x.verdict).unwrap().as_str().unwrap_or_default().to_string(),
            ]
        })
        .collect();
    table(&["ideal", "reduction", "e0", "mu", "len", "stable", "good", "free", "trace", "verdict"], rows)
}

#[derive(Clone, Copy)]
enum Col {
    Residue,
    Count,
    Ng,
    Mult,
    Chains,
}

fn print_rows(cli: &Cli, rows: &[ReportRecord], cols: &[Col]) {
    if cli.json {
        let pass = rows.iter().filter(|r| r.status == Status::Pass).count();
        println!("{}", json!({ "rows": rows, "pass": pass, "fail": rows.len() - pass }));
        return;
    }
    let mut header = vec!["tag"];
    for c in cols {
        header.push(match c {
            Col::Residue => "res",
            Col::Count => "ulrich",
            Col::Ng => "nearly-gor",
            Col::Mult => "e0",
            Col::Chains => "chains",
        });
    }
    header.extend(["status", "note"]);
    let body = rows
        .iter()
        .map(|r| {
            let (c, e): (&Fields, &Fields) = (&r.computed, &r.expected);
            let mut v = vec![r.tag.clone()];
            for col in cols {
                v.push(match col {
                    Col::Residue => pair(&c.residue, &e.residue),
                    Col::Count => pair(&c.ulrich_count, &e.ulrich_count),
                    Col::Ng => pair(&c.nearly_gorenstein, &e.nearly_gorenstein),
                    Col::Mult => opt(&c.multiplicity),
                    Col::Chains => match r.chain_count_max {
                        Some(m) => format!("{} (<= {m})", opt(&c.chain_count)),
                        None => pair(&c.chain_count, &e.chain_count),
                    },
                });
            }
            v.push(status_str(r.status).into());
            v.push(r.error.clone().or_else(|| r.note.clone()).unwrap_or_default());
            v
        })
        .collect();
    print!("{}", table(&header, body));
    let pass = rows.iter().filter(|r| r.status == Status::Pass).count();
    println!("{pass}/{} pass", rows.len());
}

fn print_cross(cli: &Cli, checks: &[CrossCheck]) {
    if cli.json {
        println!("{}", json!({ "rows": checks }));
        return;
    }
    let body = checks
        .iter()
        .map(|c| {
            let (a, g) = (&c.algebra, &c.graph_side);
            vec![
                c.tag.clone(),
                c.graph.clone(),
                format!("{} / {}", opt(&a.e0), opt(&g.e0)),
                format!("{} / {}", opt(&a.mu_m), opt(&g.mu_m)),
                format!("{} / {}", opt(&a.residue), opt(&g.residue)),
                format!("{} / {}", opt(&a.ulrich_count), opt(&g.ulrich_count)),
                status_str(c.status).into(),
            ]
        })
        .collect();
    print!("{}", table(&["tag", "graph", "e0", "mu(m)", "res", "ulrich", "status"], body));
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skip => "skip",
    }
}

fn opt<T: Display>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

/// `computed/expected`, or just `computed` when nothing is expected.
fn pair<T: Display>(c: &Option<T>, e: &Option<T>) -> String {
    match e {
        Some(e) => format!("{}/{e}", opt(c)),
        None => opt(c),
    }
}

fn table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in &rows {
        for (i, cell) in r.iter().enumerate() {
            w[i] = w[i].max(cell.chars().count());
        }
    }
    let fmt_row = |cells: Vec<&str>| {
        let line: Vec<String> = cells.iter().zip(&w).map(|(c, &n)| format!("{c:<n$}")).collect();
        line.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = fmt_row(header.to_vec());
    out.push_str(&fmt_row(w.iter().map(|&n| "-".repeat(n)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    for r in &rows {
        out.push_str(&fmt_row(r.iter().map(String::as_str).collect()));
    }
    out
}
