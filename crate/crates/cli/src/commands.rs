use std::collections::HashMap;
use std::path::Path;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use gamma3::closure::{eligible_vertices, is_feasible, local_completion, ryjacek_closure};
use gamma3::conditions::check_all;
use gamma3::format::{parse_records, Record};
use gamma3::hamilton::{
    certificate_defect, hamilton_connected, parse_certificates, strongly_spanning_trailable, HamiltonCertificate,
};
use gamma3::linegraph::{line_graph, preimage, PatternWitness};
use gamma3::patterns::{self, find_embedding, MatchMode, Pattern};
use gamma3::search::{run_search, Policy, SearchConfig};
use gamma3::wagner::{enumerate_decorations, enumerate_decorations_with_multiedges};
use gamma3::{GraphError, Multigraph};
use serde_json::json;

use crate::cli::{Cli, Command, ModeArg, PatternAction, PolicyArg};
use crate::report::Reporter;
use crate::Status;

pub fn run(cli: &Cli, workers: usize, out: &mut Reporter) -> Result<Status> {
    match &cli.command {
        Command::Search {
            policy,
            budget,
            out: path,
            no_cache,
        } => search(out, cli.seed, workers, *policy, *budget, path.as_deref(), !no_cache),
        Command::Check { file } => check(out, &read_records(file)?),
        Command::Hamcon { file, line, cert } => hamcon(out, &read_records(file)?, *line, cert.as_deref()),
        Command::Verify { family, certs, line } => verify(out, &read_records(family)?, certs, *line),
        Command::WagnerClaim { with_multiedges } => wagner_claim(out, *with_multiedges),
        Command::Linegraph { file } => {
            for r in read_records(file)? {
                let l = line_graph(&r.graph).with_context(|| format!("record {}", r.name))?;
                out.graph(&format!("L({})", r.name), &l.graph)?;
            }
            Ok(holds("line graphs written"))
        }
        Command::Preimage { file } => preimages(out, &read_records(file)?),
        Command::Core { file } => cores(out, &read_records(file)?),
        Command::Sst { file } => sst(out, &read_records(file)?),
        Command::Closure { file, op } => closure(out, &read_records(file)?, op),
        Command::Pattern { action } => pattern(out, action),
    }
}

fn holds(summary: impl Into<String>) -> Status {
    Status {
        holds: true,
        summary: summary.into(),
    }
}

fn tally(failed: usize, total: usize, what: &str) -> Status {
    Status {
        holds: failed == 0,
        summary: format!("{failed} of {total} {what}"),
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        return std::io::read_to_string(std::io::stdin()).context("reading stdin");
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_records(path: &Path) -> Result<Vec<Record>> {
    let text = read_text(path)?;
    let mut records = parse_records(&text).with_context(|| path.display().to_string())?;
    for (i, r) in records.iter_mut().enumerate() {
        if r.name.is_empty() {
            r.name = format!("#{}", i + 1);
        }
    }
    Ok(records)
}

fn search(
    out: &mut Reporter,
    seed: u64,
    workers: usize,
    policy: PolicyArg,
    budget: Option<u64>,
    path: Option<&Path>,
    solved_cache: bool,
) -> Result<Status> {
    let archive = run_search(SearchConfig {
        policy: match policy {
            PolicyArg::Lexmin => Policy::Lexmin,
            PolicyArg::Random => Policy::Random { seed },
        },
        budget: budget.map(Duration::from_secs),
        workers,
        solved_cache,
        out: path.map(Path::to_path_buf),
    })?;
    if path.is_none() {
        for (i, g) in archive.graphs().enumerate() {
            out.graph(&gamma3::search::FamilyArchive::name(i), g)?;
        }
    }
    let s = &archive.stats;
    out.line(
        "search",
        json!({
            "members": archive.len(),
            "complete": archive.complete,
            "opened": s.opened,
            "gate_failed": s.gate_failed,
            "recorded": s.recorded,
            "cache_hits": s.cache_hits,
            "solved_hits": s.solved_hits,
        }),
        format!("search members {} complete {} {}", archive.len(), archive.complete, s),
    )?;
    Ok(Status {
        holds: archive.complete,
        summary: format!("{} members, complete {}", archive.len(), archive.complete),
    })
}

fn check(out: &mut Reporter, records: &[Record]) -> Result<Status> {
    let mut failed = 0;
    for r in records {
        let report = check_all(&r.graph);
        if !report.all_pass() {
            failed += 1;
        }
        let verdicts = std::iter::once(("gate".to_string(), &report.gate))
            .chain(report.conditions.iter().enumerate().map(|(k, v)| ((k + 1).to_string(), v)));
        for ((cond, v), text) in verdicts.zip(report.lines()) {
            out.line(
                "cond",
                json!({
                    "graph": r.name,
                    "cond": cond,
                    "pass": v.pass,
                    "witness": v.witness.as_ref().map(|w| w.to_string()),
                }),
                format!("{} {text}", r.name),
            )?;
        }
    }
    Ok(tally(failed, records.len(), "records fail a condition"))
}

fn target(r: &Record, line: bool) -> Result<Multigraph> {
    if line {
        Ok(line_graph(&r.graph).with_context(|| format!("record {}", r.name))?.graph)
    } else {
        Ok(r.graph.clone())
    }
}

fn hamcon(out: &mut Reporter, records: &[Record], line: bool, cert: Option<&Path>) -> Result<Status> {
    let mut failed = 0;
    let mut certs = String::new();
    for r in records {
        let g = target(r, line)?;
        let res = hamilton_connected(&g).with_context(|| format!("record {}", r.name))?;
        match (&res.certificate, res.witness) {
            (Some(c), _) => {
                certs.push_str(&format!("# {}\n", r.name));
                certs.push_str(&c.to_text());
                out.line(
                    "hamcon",
                    json!({ "graph": r.name, "connected": true, "hash": c.hash }),
                    format!("hamcon {} true", r.name),
                )?;
            }
            (None, Some((a, b))) => {
                failed += 1;
                out.line(
                    "hamcon",
                    json!({ "graph": r.name, "connected": false, "witness": [a, b] }),
                    format!("hamcon {} false witness {a} {b}", r.name),
                )?;
            }
            (None, None) => unreachable!("a negative answer carries a witness"),
        }
    }
    if let Some(path) = cert {
        std::fs::write(path, certs).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(tally(failed, records.len(), "records not Hamilton-connected"))
}

fn verify(out: &mut Reporter, records: &[Record], certs: &Path, line: bool) -> Result<Status> {
    let parsed = parse_certificates(&read_text(certs)?).with_context(|| certs.display().to_string())?;
    let mut by_hash: HashMap<&str, Vec<&HamiltonCertificate>> = HashMap::new();
    for c in &parsed {
        by_hash.entry(c.hash.as_str()).or_default().push(c);
    }
    let mut failed = 0;
    for r in records {
        let g = target(r, line)?;
        let hash = g.canonical_form().hash_hex();
        let problem = match by_hash.get(hash.as_str()) {
            None => Some(format!("no certificate for {hash}")),
            Some(cs) => {
                let defects: Vec<String> = cs.iter().filter_map(|c| certificate_defect(&g, c)).collect();
                (defects.len() == cs.len()).then(|| defects[0].clone())
            }
        };
        if problem.is_some() {
            failed += 1;
        }
        out.line(
            "verify",
            json!({ "graph": r.name, "pass": problem.is_none(), "problem": problem }),
            match &problem {
                None => format!("verify {} pass", r.name),
                Some(p) => format!("verify {} fail {p}", r.name),
            },
        )?;
    }
    Ok(tally(failed, records.len(), "records without a valid certificate"))
}

fn wagner_claim(out: &mut Reporter, with_multiedges: bool) -> Result<Status> {
    let report = if with_multiedges {
        enumerate_decorations_with_multiedges()
    } else {
        enumerate_decorations()
    };
    for (base, cases) in &report.cases {
        out.line(
            "cases",
            json!({ "base": base, "cases": cases }),
            format!("cases {base} {cases}"),
        )?;
    }
    for (i, s) in report.survivors.iter().enumerate() {
        let sub: Vec<String> = s.subdivided.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        out.line(
            "survivor",
            json!({ "index": i + 1, "base": s.base, "subdivided": s.subdivided, "pendant_at": s.pendant_at }),
            format!("survivor {} base {} subdivided {}", i + 1, s.base, sub.join(",")),
        )?;
        out.graph(&format!("N{}", i + 1), &s.graph)?;
    }
    let exact = report.is_exactly_w3();
    out.line(
        "claim",
        json!({
            "processed": report.processed,
            "expected": report.expected_cases(),
            "survivors": report.survivors.len(),
            "exactly_w3": exact,
        }),
        format!(
            "processed {} of {} survivors {} exactly-W3 {exact}",
            report.processed,
            report.expected_cases(),
            report.survivors.len()
        ),
    )?;
    Ok(Status {
        holds: exact,
        summary: format!("{} survivors, exactly W3 {exact}", report.survivors.len()),
    })
}

fn preimages(out: &mut Reporter, records: &[Record]) -> Result<Status> {
    let mut failed = 0;
    for r in records {
        match preimage(&r.graph) {
            Ok(h) => out.graph(&format!("Linv({})", r.name), &h)?,
            Err(GraphError::NotLineGraph { pattern, witness }) => {
                failed += 1;
                out.line(
                    "preimage",
                    json!({ "graph": r.name, "line_graph": false, "pattern": pattern, "witness": witness }),
                    format!("preimage {} none induced {witness}", r.name),
                )?;
            }
            Err(e) => return Err(e).with_context(|| format!("record {}", r.name)),
        }
    }
    Ok(tally(failed, records.len(), "records are not line graphs"))
}

fn cores(out: &mut Reporter, records: &[Record]) -> Result<Status> {
    let mut failed = 0;
    for r in records {
        match r.graph.core() {
            Ok(c) => out.graph(&format!("co({})", r.name), &c)?,
            Err(GraphError::Core(reason)) => {
                failed += 1;
                out.line(
                    "core",
                    json!({ "graph": r.name, "defined": false, "reason": reason }),
                    format!("core {} undefined {reason}", r.name),
                )?;
            }
            Err(e) => return Err(e).with_context(|| format!("record {}", r.name)),
        }
    }
    Ok(tally(failed, records.len(), "records without a core"))
}

fn sst(out: &mut Reporter, records: &[Record]) -> Result<Status> {
    let mut failed = 0;
    for r in records {
        let ok = strongly_spanning_trailable(&r.graph).with_context(|| format!("record {}", r.name))?;
        if !ok {
            failed += 1;
        }
        out.line(
            "sst",
            json!({ "graph": r.name, "sst": ok }),
            format!("sst {} {ok}", r.name),
        )?;
    }
    Ok(tally(failed, records.len(), "records not strongly spanning trailable"))
}

enum ClosureOp {
    Closure,
    Local(usize),
    Eligible,
    Feasible(usize),
}

fn parse_op(op: &str) -> Result<ClosureOp> {
    let vertex = |s: &str| s.parse::<usize>().with_context(|| format!("bad vertex `{s}` in --op"));
    Ok(match op.split_once(':') {
        None if op == "cl" => ClosureOp::Closure,
        None if op == "eligible" => ClosureOp::Eligible,
        Some(("local", v)) => ClosureOp::Local(vertex(v)?),
        Some(("feasible", v)) => ClosureOp::Feasible(vertex(v)?),
        _ => bail!("unknown closure op `{op}`; expected cl, local:<v>, eligible or feasible:<v>"),
    })
}

fn list(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn closure(out: &mut Reporter, records: &[Record], op: &str) -> Result<Status> {
    let op = parse_op(op)?;
    let mut failed = 0;
    for r in records {
        let ctx = || format!("record {}", r.name);
        match op {
            ClosureOp::Closure => {
                let (cl, trace) = ryjacek_closure(&r.graph).with_context(ctx)?;
                out.line(
                    "trace",
                    json!({ "graph": r.name, "steps": trace.steps }),
                    format!("trace {} {}", r.name, list(&trace.steps)).trim_end().to_string(),
                )?;
                out.graph(&format!("cl({})", r.name), &cl)?;
            }
            ClosureOp::Local(x) => {
                let g = local_completion(&r.graph, x).with_context(ctx)?;
                out.graph(&format!("local({},{x})", r.name), &g)?;
            }
            ClosureOp::Eligible => {
                let el = eligible_vertices(&r.graph).with_context(ctx)?;
                out.line(
                    "eligible",
                    json!({ "graph": r.name, "vertices": el }),
                    format!("eligible {} {}", r.name, list(&el)).trim_end().to_string(),
                )?;
            }
            ClosureOp::Feasible(x) => {
                let f = is_feasible(&r.graph, x).with_context(ctx)?;
                if !f {
                    failed += 1;
                }
                out.line(
                    "feasible",
                    json!({ "graph": r.name, "vertex": x, "feasible": f }),
                    format!("feasible {} {x} {f}", r.name),
                )?;
            }
        }
    }
    Ok(tally(failed, records.len(), "records where the vertex is not feasible"))
}

fn lookup(name: &str) -> Result<Pattern> {
    patterns::catalogue()
        .into_iter()
        .find(|p| p.name == name)
        .with_context(|| format!("no pattern named `{name}`; see `gamma3 pattern list`"))
}

fn pattern(out: &mut Reporter, action: &PatternAction) -> Result<Status> {
    match action {
        PatternAction::List => {
            let all = patterns::catalogue();
            for p in &all {
                out.line(
                    "pattern",
                    json!({ "name": p.name, "n": p.graph.order(), "edges": p.graph.size(), "labels": p.labels }),
                    format!("pattern {} n {} e {}", p.name, p.graph.order(), p.graph.size()),
                )?;
            }
            Ok(holds(format!("{} patterns", all.len())))
        }
        PatternAction::Show { name } => {
            let p = lookup(name)?;
            out.graph(&p.name, &p.graph)?;
            Ok(holds(p.name))
        }
        PatternAction::Find { name, file, mode } => {
            let p = lookup(name)?;
            let mode = match mode {
                ModeArg::Subgraph => MatchMode::Subgraph,
                ModeArg::Flat => MatchMode::Flat,
                ModeArg::Induced => MatchMode::Induced,
            };
            let records = read_records(file)?;
            let mut failed = 0;
            for r in &records {
                let found = find_embedding(&r.graph, &p.graph, mode).map(|e| PatternWitness::from_embedding(&p, &e));
                if found.is_none() {
                    failed += 1;
                }
                out.line(
                    "embedding",
                    json!({
                        "graph": r.name,
                        "pattern": p.name,
                        "map": found.as_ref().map(|w| w.map.clone()),
                    }),
                    match &found {
                        Some(w) => format!("embedding {} {w}", r.name),
                        None => format!("embedding {} {} none", r.name, p.name),
                    },
                )?;
            }
            Ok(tally(failed, records.len(), "records without an embedding"))
        }
    }
}
