//! The recursive extension search that generates family `F`.
//!
//! Every node is a multigraph `M` passing the gate. If `M` satisfies
//! conditions (6)..(14) it is recorded and the search branches on every
//! gated extension; otherwise one violation is chosen and the search
//! branches only on the extensions that could repair it. Closed nodes are
//! memoised by canonical form, and a node containing an already closed
//! sibling branch of one of its ancestors is skipped.

mod archive;
mod extend;
mod seeds;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::conditions::{gate_passes, violations, violations_of, Violation};
use crate::error::{GraphError, Result};
use crate::multigraph::{CanonicalForm, Multigraph, Pair};

pub use archive::{FamilyArchive, Member, SearchStats};
pub use extend::{
    attach_vertex, extensions_add, extensions_multiply, gated_additions, gated_multiplications, Extension,
    ExtensionSet, Step,
};
pub use seeds::{seeds, seeds_of_order, SEED_COUNTS};

/// How a violation is chosen at a node that fails some condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    /// Smallest branch set, then smallest condition, then smallest attempt.
    Lexmin,
    /// Uniform among the violations with the smallest branch set (so an
    /// empty one is always taken). The generator is reseeded at every node
    /// from `seed` and the node's canonical form.
    Random { seed: u64 },
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub policy: Policy,
    pub budget: Option<Duration>,
    /// 1 runs on the calling thread.
    pub workers: usize,
    /// Skip nodes that contain, as a flat subgraph, an earlier sibling
    /// branch (of any ancestor) that has already closed.
    pub solved_cache: bool,
    /// Archive path; the trace goes next to it with a `.trace` suffix.
    pub out: Option<PathBuf>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            policy: Policy::Lexmin,
            budget: None,
            workers: 1,
            solved_cache: true,
            out: None,
        }
    }
}

/// A gated child of a node.
#[derive(Debug, Clone)]
struct Candidate {
    graph: Multigraph,
    form: CanonicalForm,
    step: Step,
    /// Index of the first candidate isomorphic to this one.
    rep: usize,
}

impl Candidate {
    fn meets(&self, v: &Violation) -> bool {
        match &self.step {
            Step::Add(s) => s.iter().any(|x| v.attempt.add_to.contains(x)),
            Step::Multiply(e) => v.attempt.multiply.contains(e),
        }
    }
}

/// Gated children of `m`, one per isomorphism class, in a fixed order.
fn candidates(m: &Multigraph) -> Vec<Candidate> {
    let adds = gated_additions(m).into_iter().map(|(s, g)| (Step::Add(s), g));
    let muls = gated_multiplications(m).into_iter().map(|(e, g)| (Step::Multiply(e), g));
    let mut first: HashMap<CanonicalForm, usize> = HashMap::new();
    adds.chain(muls)
        .enumerate()
        .map(|(i, (step, graph))| {
            let form = graph.canonical_form();
            let rep = *first.entry(form.clone()).or_insert(i);
            Candidate { graph, form, step, rep }
        })
        .collect()
}

/// Sorted representatives of the isomorphism classes with a member
/// repairing `v`.
fn branch_set(cands: &[Candidate], v: &Violation) -> Vec<usize> {
    let reps: BTreeSet<usize> = cands.iter().filter(|c| c.meets(v)).map(|c| c.rep).collect();
    reps.into_iter().collect()
}

fn all_branches(cands: &[Candidate]) -> Vec<usize> {
    (0..cands.len()).filter(|&i| cands[i].rep == i).collect()
}

fn to_set(cands: &[Candidate], idx: &[usize]) -> ExtensionSet {
    ExtensionSet {
        members: idx
            .iter()
            .map(|&i| Extension {
                graph: cands[i].graph.clone(),
                step: cands[i].step.clone(),
            })
            .collect(),
    }
}

fn node_rng(seed: u64, form: &CanonicalForm) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update((form.order() as u64).to_le_bytes());
    h.update(form.as_bytes());
    let d = h.finalize();
    ChaCha8Rng::seed_from_u64(u64::from_le_bytes(d[..8].try_into().unwrap()))
}

/// Picks one of `options` (violation, branch indices) under `policy`.
fn choose<'a>(
    options: &'a [(Violation, Vec<usize>)],
    policy: Policy,
    form: &CanonicalForm,
) -> &'a (Violation, Vec<usize>) {
    let lexmin = || {
        options
            .iter()
            .min_by(|a, b| {
                (a.1.len(), a.0.condition, &a.0.attempt).cmp(&(b.1.len(), b.0.condition, &b.0.attempt))
            })
            .unwrap()
    };
    match policy {
        Policy::Lexmin => lexmin(),
        Policy::Random { seed } => {
            let least = options.iter().map(|o| o.1.len()).min().unwrap();
            let tied: Vec<&(Violation, Vec<usize>)> = options.iter().filter(|o| o.1.len() == least).collect();
            tied.choose(&mut node_rng(seed, form)).unwrap()
        }
    }
}

/// Branch set for violated condition `p`, using the witness with the
/// smallest branch set (ties broken by the attempt).
pub fn solution_attempts(m: &Multigraph, p: u8) -> Result<ExtensionSet> {
    if !(6..=14).contains(&p) {
        return Err(GraphError::Precondition(format!("condition {p} has no repair attempts")));
    }
    let vs = violations_of(m, p);
    if vs.is_empty() {
        return Err(GraphError::Precondition(format!("condition {p} is not violated")));
    }
    let cands = candidates(m);
    let options: Vec<(Violation, Vec<usize>)> = vs
        .into_iter()
        .map(|v| {
            let b = branch_set(&cands, &v);
            (v, b)
        })
        .collect();
    let (_, idx) = choose(&options, Policy::Lexmin, &m.canonical_form());
    Ok(to_set(&cands, idx))
}

/// Branch set of one particular violation.
pub fn branches_for(m: &Multigraph, v: &Violation) -> ExtensionSet {
    let cands = candidates(m);
    to_set(&cands, &branch_set(&cands, v))
}

/// `A(M) ∪ M(M)` restricted to gate-passing children.
pub fn all_extensions(m: &Multigraph) -> ExtensionSet {
    let cands = candidates(m);
    to_set(&cands, &all_branches(&cands))
}

/// One line of the branch-event trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    /// A node was opened; `condition` is the chosen violation, if any.
    Open {
        hash: String,
        condition: Option<u8>,
        branches: usize,
    },
    GateFail { hash: String },
    Record { hash: String },
    CacheHit { hash: String },
    Close { hash: String },
}

impl std::fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TraceEvent::Open {
                hash,
                condition: Some(c),
                branches,
            } => write!(f, "open {hash} cond {c} branches {branches}"),
            TraceEvent::Open {
                hash,
                condition: None,
                branches,
            } => write!(f, "open {hash} all-pass branches {branches}"),
            TraceEvent::GateFail { hash } => write!(f, "gate-fail {hash}"),
            TraceEvent::Record { hash } => write!(f, "record {hash}"),
            TraceEvent::CacheHit { hash } => write!(f, "cache-hit {hash}"),
            TraceEvent::Close { hash } => write!(f, "close {hash}"),
        }
    }
}

/// A closed branch `A + step`, recognised in a descendant `D` of `A` through
/// the labels `D` inherits from `A`.
#[derive(Debug, Clone)]
enum Solved {
    /// Some vertex outside `0..base` has exactly `attach` as its
    /// neighbours inside `0..base`.
    Add { base: usize, attach: Vec<usize> },
    /// The edge has multiplicity 2.
    Multiply(Pair),
}

impl Solved {
    fn new(base: usize, step: &Step) -> Self {
        match step {
            Step::Add(s) => Solved::Add {
                base,
                attach: s.clone(),
            },
            Step::Multiply(e) => Solved::Multiply(*e),
        }
    }

    /// Whether `A + step` embeds in `d` as a flat subgraph, identically on
    /// the vertices of `A`.
    fn contained_in(&self, d: &Multigraph) -> bool {
        match self {
            Solved::Add { base, attach } => (*base..d.order()).any(|w| {
                (0..*base).filter(|&s| d.adjacent(w, s)).eq(attach.iter().copied())
            }),
            Solved::Multiply((u, v)) => d.mult(*u, *v) >= 2,
        }
    }
}

#[derive(Debug)]
enum Origin {
    Seed(usize),
    Input,
    Step(Step),
}

#[derive(Debug)]
struct Path {
    parent: Option<Arc<Path>>,
    origin: Origin,
}

impl Path {
    fn steps(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut cur = Some(self);
        while let Some(p) = cur {
            out.push(match &p.origin {
                Origin::Seed(i) => format!("seed {i}"),
                Origin::Input => "input".to_string(),
                Origin::Step(s) => s.to_string(),
            });
            cur = p.parent.as_deref();
        }
        out.reverse();
        out
    }
}

#[derive(Default)]
struct Counters {
    opened: AtomicU64,
    gate_failed: AtomicU64,
    recorded: AtomicU64,
    cache_hits: AtomicU64,
    solved_hits: AtomicU64,
}

type TraceSink = Mutex<Box<dyn Write + Send>>;

/// Shared state of one search run.
pub struct Search {
    config: SearchConfig,
    /// Canonical forms seen so far; `true` once the node has closed.
    visited: Mutex<HashMap<CanonicalForm, bool>>,
    members: Mutex<BTreeMap<CanonicalForm, Member>>,
    counters: Counters,
    deadline: Option<Instant>,
    incomplete: AtomicBool,
    trace: Option<TraceSink>,
}

impl Search {
    pub fn new(config: SearchConfig) -> Self {
        let deadline = config.budget.map(|b| Instant::now() + b);
        Search {
            config,
            visited: Mutex::new(HashMap::new()),
            members: Mutex::new(BTreeMap::new()),
            counters: Counters::default(),
            deadline,
            incomplete: AtomicBool::new(false),
            trace: None,
        }
    }

    pub fn with_trace(mut self, sink: impl Write + Send + 'static) -> Self {
        self.trace = Some(Mutex::new(Box::new(sink)));
        self
    }

    fn emit(&self, ev: TraceEvent) {
        if let Some(t) = &self.trace {
            let mut w = t.lock().unwrap();
            let _ = writeln!(w, "{ev}");
        }
    }

    /// Investigates `m` and everything reachable from it.
    pub fn investigate(&self, m: &Multigraph) {
        let path = Arc::new(Path {
            parent: None,
            origin: Origin::Input,
        });
        self.visit(m.clone(), m.canonical_form(), path, false, &[]);
    }

    fn investigate_seed(&self, i: usize, m: &Multigraph) {
        let path = Arc::new(Path {
            parent: None,
            origin: Origin::Seed(i),
        });
        self.visit(m.clone(), m.canonical_form(), path, false, &[]);
    }

    fn out_of_time(&self) -> bool {
        match self.deadline {
            Some(d) if Instant::now() >= d => {
                self.incomplete.store(true, Ordering::Relaxed);
                true
            }
            _ => false,
        }
    }

    fn visit(&self, m: Multigraph, form: CanonicalForm, path: Arc<Path>, gated: bool, solved: &[Solved]) {
        if self.out_of_time() {
            return;
        }
        let hash = form.hash_hex();
        {
            let mut visited = self.visited.lock().unwrap();
            match visited.get(&form) {
                Some(true) => {
                    drop(visited);
                    self.counters.cache_hits.fetch_add(1, Ordering::Relaxed);
                    self.emit(TraceEvent::CacheHit { hash });
                    return;
                }
                Some(false) => {}
                None => {
                    visited.insert(form.clone(), false);
                }
            }
        }
        let close = || {
            self.visited.lock().unwrap().insert(form.clone(), true);
        };
        if !gated && !gate_passes(&m) {
            close();
            self.counters.gate_failed.fetch_add(1, Ordering::Relaxed);
            self.emit(TraceEvent::GateFail { hash });
            return;
        }
        if solved.iter().any(|s| s.contained_in(&m)) {
            close();
            self.counters.solved_hits.fetch_add(1, Ordering::Relaxed);
            self.emit(TraceEvent::CacheHit { hash });
            return;
        }
        self.counters.opened.fetch_add(1, Ordering::Relaxed);
        let cands = candidates(&m);
        let vs = violations(&m);
        let (condition, branches) = if vs.is_empty() {
            self.counters.recorded.fetch_add(1, Ordering::Relaxed);
            self.emit(TraceEvent::Record { hash: hash.clone() });
            self.members.lock().unwrap().insert(
                form.clone(),
                Member {
                    graph: form.to_graph(),
                    provenance: path.steps(),
                },
            );
            (None, all_branches(&cands))
        } else {
            let options: Vec<(Violation, Vec<usize>)> = vs
                .into_iter()
                .map(|v| {
                    let b = branch_set(&cands, &v);
                    (v, b)
                })
                .collect();
            let (v, b) = choose(&options, self.config.policy, &form);
            (Some(v.condition), b.clone())
        };
        self.emit(TraceEvent::Open {
            hash: hash.clone(),
            condition,
            branches: branches.len(),
        });
        let mut known = solved.to_vec();
        for &i in &branches {
            let c = &cands[i];
            let p = Arc::new(Path {
                parent: Some(path.clone()),
                origin: Origin::Step(c.step.clone()),
            });
            self.visit(c.graph.clone(), c.form.clone(), p, true, &known);
            if self.config.solved_cache {
                known.push(Solved::new(m.order(), &c.step));
            }
        }
        close();
        self.emit(TraceEvent::Close { hash });
    }

    pub fn finish(self) -> FamilyArchive {
        if let Some(t) = &self.trace {
            let _ = t.lock().unwrap().flush();
        }
        let c = &self.counters;
        FamilyArchive {
            members: self.members.into_inner().unwrap(),
            complete: !self.incomplete.load(Ordering::Relaxed),
            stats: SearchStats {
                opened: c.opened.load(Ordering::Relaxed),
                gate_failed: c.gate_failed.load(Ordering::Relaxed),
                recorded: c.recorded.load(Ordering::Relaxed),
                cache_hits: c.cache_hits.load(Ordering::Relaxed),
                solved_hits: c.solved_hits.load(Ordering::Relaxed),
            },
        }
    }
}

/// Runs the search from every seed and returns the archive; writes the
/// archive and its trace when `config.out` is set.
pub fn run_search(config: SearchConfig) -> Result<FamilyArchive> {
    run_from(config, &seeds())
}

/// Like [`run_search`] with explicit starting graphs.
pub fn run_from(config: SearchConfig, starts: &[Multigraph]) -> Result<FamilyArchive> {
    let out = config.out.clone();
    let workers = config.workers.max(1);
    let mut search = Search::new(config);
    if let Some(path) = &out {
        let trace = std::fs::File::create(trace_path(path)).map_err(io_err)?;
        search = search.with_trace(std::io::BufWriter::new(trace));
    }
    if workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .stack_size(64 << 20)
            .build()
            .map_err(|e| GraphError::Precondition(e.to_string()))?;
        pool.install(|| {
            starts
                .par_iter()
                .enumerate()
                .for_each(|(i, g)| search.investigate_seed(i, g))
        });
    } else {
        for (i, g) in starts.iter().enumerate() {
            search.investigate_seed(i, g);
        }
    }
    let archive = search.finish();
    if let Some(path) = &out {
        std::fs::write(path, archive.to_records()).map_err(io_err)?;
    }
    Ok(archive)
}

pub fn trace_path(out: &std::path::Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".trace");
    PathBuf::from(s)
}

fn io_err(e: std::io::Error) -> GraphError {
    GraphError::Precondition(format!("i/o: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;

    #[test]
    fn wagner_chooses_condition_six() {
        let w = patterns::wagner().graph;
        assert!(solution_attempts(&w, 6).unwrap().is_empty());
        assert!(solution_attempts(&w, 7).is_err());
        let c8 = patterns::cycle(8).graph;
        let set = solution_attempts(&c8, 6).unwrap();
        assert_eq!(set.forms(), all_extensions(&c8).forms());
    }

    #[test]
    fn gate_failure_closes_the_branch() {
        let s = Search::new(SearchConfig::default());
        s.investigate(&patterns::k4().graph);
        let a = s.finish();
        assert!(a.members.is_empty());
        assert_eq!(a.stats.gate_failed, 1);
        assert_eq!(a.stats.opened, 0);
    }

    #[test]
    fn random_policy_prefers_empty_branch_sets() {
        let form = patterns::k3().graph.canonical_form();
        let v = violations(&patterns::k24().graph);
        let options: Vec<(Violation, Vec<usize>)> = v
            .into_iter()
            .enumerate()
            .map(|(i, v)| (v, if i == 1 { vec![] } else { vec![0; 3] }))
            .collect();
        for seed in 0..20 {
            let (_, b) = choose(&options, Policy::Random { seed }, &form);
            assert!(b.is_empty());
        }
    }
}
