//! One handler per subcommand. Reports are single-line JSON; graphs follow
//! `--format`.

use anyhow::{bail, Result};
use kernelkit::antiholes::{
    c7_counterexample, gen_antihole, prop3_semi_kernel_check, search::run_search, SearchMode,
    SearchOptions, SymmetryGroup, Verdict,
};
use kernelkit::chords::{
    check_duchet_condition, check_gsnl_condition, check_thm2_condition, find_kernel_thm2, CycleScan,
    DEFAULT_CYCLE_BUDGET,
};
use kernelkit::cliques::DEFAULT_CLIQUE_BUDGET;
use kernelkit::io::{to_dot, to_json, to_text, GraphDoc};
use kernelkit::oracle::{enumerate_kernels, find_kernel_bruteforce, is_clique_acyclic, is_m_clique_acyclic};
use kernelkit::redblue::generators::{
    generate_comparability_instance, generate_ssw_instance, generate_thm1_instance,
};
use kernelkit::redblue::{
    check_prop2_conditions, check_thm1_conditions, compare_antichains, max_chain_of_antichains, solve_prop2,
    solve_thm1, Poset, SolveTrace,
};
use kernelkit::{Digraph, Error, OracleConfig, Orientation, VertexSet};
use serde_json::{json, Value};

use crate::input::{parse_vertex_list, read_base_graph, read_colored, read_digraph, read_doc, read_source};
use crate::{
    AntiholeCmd, ChordsCmd, Cli, Command, Conditions, ConvertTo, Format, GenCmd, GraphCmd, OracleCmd,
    Outcome, PosetCmd, RedblueCmd, ScanArgs, SearchArgs, WitnessMode,
};

/// Default attempts for the repairing instance generator.
const GEN_THM1_BUDGET: u64 = 100_000;

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Oracle(cmd) => oracle(cmd),
        Command::Redblue(cmd) => redblue(cli.format, cmd),
        Command::Chords(cmd) => chords(cmd),
        Command::Antihole(cmd) => antihole(cli.format, cmd),
        Command::Poset(cmd) => poset(cmd),
        Command::Graph(GraphCmd::Convert { graph, to }) => {
            let doc = read_doc(&graph.input)?;
            let to = to.unwrap_or(match cli.format {
                Format::Text => ConvertTo::Text,
                Format::Json => ConvertTo::Json,
            });
            Ok(Outcome::new(
                match to {
                    ConvertTo::Text => to_text(&doc),
                    ConvertTo::Json => to_json(&doc),
                    ConvertTo::Dot => to_dot(&doc),
                },
                0,
            ))
        }
    }
}

/// Exit code and printed report for a failed command.
pub fn from_error(err: anyhow::Error) -> Outcome {
    eprintln!("kernelkit: {err:#}");
    let Some(e) = err.downcast_ref::<Error>() else {
        return Outcome::new("", 2);
    };
    match e {
        Error::VertexOutOfRange { .. }
        | Error::InvalidGraph(_)
        | Error::Parse { .. }
        | Error::Json(_)
        | Error::Contract(_)
        | Error::Checkpoint(_)
        | Error::Io(_) => Outcome::new("", 2),
        Error::SizeCap { what, size, cap } => Outcome::new(
            json!({ "error": "size_cap", "what": what, "size": size, "cap": cap }).to_string(),
            3,
        ),
        Error::BudgetExceeded { what, budget } => Outcome::new(
            json!({ "error": "budget_exceeded", "what": what, "budget": budget }).to_string(),
            3,
        ),
        Error::SolverBudget { budget, trace } => {
            let mut v = trace.to_json();
            v["error"] = json!("budget_exceeded");
            v["budget"] = json!(budget);
            Outcome::new(v.to_string(), 3)
        }
        Error::ConditionsViolated(report) => {
            let mut v = serde_json::to_value(report).unwrap_or(Value::Null);
            v["error"] = json!("conditions_violated");
            Outcome::new(v.to_string(), 1)
        }
        Error::ChordConditionFails { cycle } => Outcome::new(
            json!({ "error": "chord_condition_fails", "satisfied": false, "first_failing": cycle }).to_string(),
            1,
        ),
        Error::StrategyFailed { subdigraph, reason } => Outcome::new(
            json!({ "error": "strategy_failed", "subdigraph": subdigraph, "reason": reason }).to_string(),
            1,
        ),
        Error::Invariant(_) => Outcome::new("", 4),
    }
}

fn oracle(cmd: &OracleCmd) -> Result<Outcome> {
    let cfg = OracleConfig::default();
    match cmd {
        OracleCmd::Find(g) => {
            let d = read_digraph(&g.input)?;
            let report = find_kernel_bruteforce(&d, &cfg)?;
            Ok(Outcome::json(&serde_json::to_value(&report)?, report.exists))
        }
        OracleCmd::Enumerate(g) => {
            let d = read_digraph(&g.input)?;
            let kernels: Vec<Vec<usize>> = enumerate_kernels(&d, &cfg)?.iter().map(VertexSet::to_vec).collect();
            let v = json!({ "count": kernels.len(), "kernels": kernels });
            Ok(Outcome::json(&v, !kernels.is_empty()))
        }
        OracleCmd::Check { graph, kernel, set } => {
            let members = match (kernel, set) {
                (Some(src), _) => {
                    if src == "-" && graph.input == "-" {
                        bail!("the graph and the kernel cannot both come from stdin");
                    }
                    parse_vertex_list(&read_source(src)?)?
                }
                (None, Some(set)) => set.clone(),
                (None, None) => bail!("give the set with --kernel or --set"),
            };
            let d = read_digraph(&graph.input)?;
            check_set(&d, &members)
        }
        OracleCmd::CliqueAcyclic { graph, budget } => {
            let d = read_digraph(&graph.input)?;
            let r = is_clique_acyclic(&d, budget.budget.unwrap_or(DEFAULT_CLIQUE_BUDGET))?;
            Ok(Outcome::json(&serde_json::to_value(&r)?, r.clique_acyclic))
        }
        OracleCmd::MCliqueAcyclic(g) => {
            let r = is_m_clique_acyclic(&read_digraph(&g.input)?);
            Ok(Outcome::json(&serde_json::to_value(&r)?, r.m_clique_acyclic))
        }
    }
}

/// Independence and absorption of `members`, with a witness for whichever fails.
fn check_set(d: &Digraph, members: &[usize]) -> Result<Outcome> {
    let s = d.set(members.iter().copied())?;
    let inner_arc = d.arcs().find(|&(u, v)| s.contains(u) && s.contains(v));
    let unabsorbed = (0..d.vertex_count()).find(|&v| !s.contains(v) && !d.out(v).intersects(&s));
    let is_kernel = inner_arc.is_none() && unabsorbed.is_none();
    let mut v = json!({
        "set": s.to_vec(),
        "independent": inner_arc.is_none(),
        "absorbing": unabsorbed.is_none(),
        "is_kernel": is_kernel,
    });
    if let Some((a, b)) = inner_arc {
        v["arc"] = json!([a, b]);
    }
    if let Some(u) = unabsorbed {
        v["unabsorbed"] = json!(u);
    }
    Ok(Outcome::json(&v, is_kernel))
}

fn solve_report(trace: &SolveTrace) -> Value {
    let mut v = trace.to_json();
    v["kernel"] = json!(trace.result.to_vec());
    v["improve_steps"] = json!(trace.improve_steps());
    v
}

/// A generated graph, carrying the seed that reproduces it.
fn seeded_graph(format: Format, doc: &GraphDoc, generator: &str, seed: u64, n: usize) -> Result<Outcome> {
    let text = match format {
        Format::Text => format!("# generator {generator} seed {seed} n {n}\n{}", to_text(doc)),
        Format::Json => {
            let mut v: Value = serde_json::from_str(&to_json(doc))?;
            v["generator"] = json!(generator);
            v["seed"] = json!(seed);
            v.to_string()
        }
    };
    Ok(Outcome::new(text, 0))
}

fn graph_out(format: Format, doc: &GraphDoc) -> Outcome {
    Outcome::new(
        match format {
            Format::Text => to_text(doc),
            Format::Json => to_json(doc),
        },
        0,
    )
}

fn redblue(format: Format, cmd: &RedblueCmd) -> Result<Outcome> {
    match cmd {
        RedblueCmd::Check { graph, conditions } => {
            let cd = read_colored(&graph.input)?;
            let (name, report) = match conditions {
                Conditions::Thm1 => ("thm1", check_thm1_conditions(&cd)),
                Conditions::Prop2 => ("prop2", check_prop2_conditions(&cd)),
            };
            let mut v = serde_json::to_value(&report)?;
            v["conditions"] = json!(name);
            Ok(Outcome::json(&v, report.satisfied))
        }
        RedblueCmd::Solve(g) => {
            let trace = solve_thm1(&read_colored(&g.input)?)?;
            Ok(Outcome::json(&solve_report(&trace), true))
        }
        RedblueCmd::SolveP2 { graph, budget } => {
            let trace = solve_prop2(&read_colored(&graph.input)?, budget.budget)?;
            Ok(Outcome::json(&solve_report(&trace), true))
        }
        RedblueCmd::Gen(gen) => {
            let (name, args, cd) = match gen {
                GenCmd::Ssw { args, density } => {
                    if !(0.0..=1.0).contains(density) {
                        bail!("--density must lie in [0, 1]");
                    }
                    ("ssw", args, generate_ssw_instance(args.seed, args.n, *density)?)
                }
                GenCmd::Comparability(args) => {
                    ("comparability", args, generate_comparability_instance(args.seed, args.n)?)
                }
                GenCmd::Thm1 { args, budget } => {
                    let budget = budget.budget.unwrap_or(GEN_THM1_BUDGET);
                    let Some(cd) = generate_thm1_instance(args.seed, args.n, budget) else {
                        return Err(Error::BudgetExceeded { what: "thm1 generator", budget }.into());
                    };
                    ("thm1", args, cd)
                }
            };
            seeded_graph(format, &GraphDoc::Colored(cd), name, args.seed, args.n)
        }
    }
}

fn cycle_scan(a: &ScanArgs) -> CycleScan {
    CycleScan {
        max_len: a.max_len,
        budget: Some(a.budget.budget.unwrap_or(DEFAULT_CYCLE_BUDGET)),
        jobs: 1,
    }
}

fn chords(cmd: &ChordsCmd) -> Result<Outcome> {
    let (args, check): (_, fn(&Digraph, &CycleScan) -> kernelkit::Result<_>) = match cmd {
        ChordsCmd::Check(a) => (a, check_thm2_condition),
        ChordsCmd::CheckGsnl(a) => (a, check_gsnl_condition),
        ChordsCmd::CheckDuchet(a) => (a, check_duchet_condition),
        ChordsCmd::Solve(a) => {
            let d = read_digraph(&a.graph.input)?;
            let k = find_kernel_thm2(&d, &cycle_scan(a))?;
            return Ok(Outcome::json(&json!({ "kernel": k.to_vec() }), true));
        }
    };
    let d = read_digraph(&args.graph.input)?;
    let report = check(&d, &cycle_scan(args))?;
    Ok(Outcome::json(&serde_json::to_value(&report)?, report.satisfied))
}

fn search(args: &SearchArgs, mode: SearchMode) -> Result<Outcome> {
    let g = match (&args.input, args.n) {
        (_, Some(n)) => gen_antihole(n)?.0,
        (Some(src), None) => read_base_graph(src)?,
        (None, None) => bail!("give a graph or --n"),
    };
    let opts = SearchOptions {
        symmetry: args.symmetry.then(|| SymmetryGroup::automorphisms(&g)),
        budget: args.budget.budget,
        jobs: args.jobs.unwrap_or(0),
        checkpoint: args.checkpoint.clone(),
        prefix_depth: None,
    };
    let verdict = run_search(&g, mode, &opts)?;
    let mut v = verdict.to_json();
    v["nodes"] = json!(verdict.nodes);
    let code = match verdict.verdict {
        Verdict::Solvable => 0,
        Verdict::Counterexample(_) => 1,
        Verdict::ExhaustedBudget => 3,
    };
    Ok(Outcome::new(v.to_string(), code))
}

fn antihole(format: Format, cmd: &AntiholeCmd) -> Result<Outcome> {
    match cmd {
        AntiholeCmd::Gen { n } => Ok(graph_out(format, &GraphDoc::Graph(gen_antihole(*n)?.0))),
        AntiholeCmd::C7 => Ok(graph_out(format, &GraphDoc::Digraph(c7_counterexample()))),
        AntiholeCmd::VerifySimple(args) => search(args, SearchMode::Simple),
        AntiholeCmd::SearchWitness { search: args, mode } => search(
            args,
            match mode {
                WitnessMode::General => SearchMode::General,
                WitnessMode::MClique => SearchMode::MClique,
            },
        ),
        AntiholeCmd::FindIstar(g) => {
            let o = match read_doc(&g.input)? {
                GraphDoc::Orientation(o) => o,
                GraphDoc::Graph(_) => bail!("find-istar needs an orientation, not an undirected graph"),
                other => {
                    let d = other.to_digraph();
                    Orientation::from_digraph(&gen_antihole(d.vertex_count())?.0, &d)?
                }
            };
            let check = prop3_semi_kernel_check(&o)?;
            Ok(Outcome::json(&serde_json::to_value(&check)?, true))
        }
    }
}

fn poset(cmd: &PosetCmd) -> Result<Outcome> {
    match cmd {
        PosetCmd::MaxChain(g) => {
            let p = Poset::from_dag(&read_digraph(&g.input)?)?;
            let chain: Vec<Vec<usize>> = max_chain_of_antichains(&p).iter().map(VertexSet::to_vec).collect();
            let v = json!({ "size": p.size(), "length": chain.len(), "chain": chain });
            Ok(Outcome::json(&v, true))
        }
        PosetCmd::Compare { graph, a, b } => {
            let p = Poset::from_dag(&read_digraph(&graph.input)?)?;
            let sa = VertexSet::from_indices(p.size(), a.iter().copied())?;
            let sb = VertexSet::from_indices(p.size(), b.iter().copied())?;
            let order = compare_antichains(&p, &sa, &sb)?;
            let v = json!({ "a": sa.to_vec(), "b": sb.to_vec(), "order": order });
            Ok(Outcome::json(&v, true))
        }
    }
}
