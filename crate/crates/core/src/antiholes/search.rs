//! Backtracking over edge orientations with clique pruning, symmetry
//! pruning, prefix-partitioned parallel work and resumable checkpoints.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::antiholes::symmetry::{EdgeAction, SymmetryGroup};
use crate::cliques::{for_each_clique, DEFAULT_CLIQUE_BUDGET};
use crate::error::{Error, Result};
use crate::io::{to_text, GraphDoc};
use crate::oracle::MaskGraph;
use crate::parallel;
use crate::undirected::{EdgeDirection, Orientation, UndirectedGraph};

pub const MAX_EDGES: usize = 32;
/// Leaves between checkpoint writes.
pub const CHECKPOINT_INTERVAL: u64 = 1 << 20;
const WAVE: usize = 64;

/// Which orientations are searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SearchMode {
    /// One arc per edge, every clique has a dominated vertex.
    #[serde(rename = "simple")]
    Simple,
    /// Reversible edges allowed, every clique has a dominated vertex.
    #[serde(rename = "general")]
    General,
    /// Reversible edges allowed, every directed triangle has two
    /// reversible arcs.
    #[serde(rename = "m-clique")]
    MClique,
}

impl SearchMode {
    fn values(self) -> &'static [u8] {
        match self {
            SearchMode::Simple => &[0, 1],
            _ => &[0, 1, 2],
        }
    }

    fn default_prefix_depth(self, m: usize) -> usize {
        match self {
            SearchMode::Simple => m.min(8),
            _ => m.min(5),
        }
    }
}

/// A clique of the base graph, checked once its last edge is assigned.
#[derive(Clone, Debug)]
struct CliqueCheck {
    mask: u64,
    members: Vec<usize>,
}

/// Immutable search description shared by all workers.
pub(crate) struct Engine {
    n: usize,
    edges: Vec<(usize, usize)>,
    mode: SearchMode,
    /// `checks[e]`: cliques whose largest edge index is `e`.
    checks: Vec<Vec<CliqueCheck>>,
    actions: Vec<EdgeAction>,
}

/// Mutable DFS state: the partial assignment and the arcs it induces.
struct State {
    assign: Vec<u8>,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl State {
    fn set(&mut self, (a, b): (usize, usize), value: u8, on: bool) {
        let mut arc = |x: usize, y: usize| {
            if on {
                self.out[x] |= 1 << y;
                self.inn[y] |= 1 << x;
            } else {
                self.out[x] &= !(1 << y);
                self.inn[y] &= !(1 << x);
            }
        };
        if value != 1 {
            arc(a, b);
        }
        if value != 0 {
            arc(b, a);
        }
    }
}

/// Per-task counters and the first kernel-free leaf met, if any.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub(crate) struct TaskOutcome {
    pub(crate) leaves: u64,
    pub(crate) nodes: u64,
    /// Assignment codes and 1-based leaf ordinal within the task.
    pub(crate) counterexample: Option<(Vec<u8>, u64)>,
    /// The leaf cap stopped the task before it was done.
    pub(crate) truncated: bool,
}

impl Engine {
    pub(crate) fn new(g: &UndirectedGraph, mode: SearchMode, group: Option<&SymmetryGroup>) -> Result<Self> {
        let n = g.vertex_count();
        let m = g.edge_count();
        if m > MAX_EDGES || n > 64 {
            return Err(Error::SizeCap {
                what: "orientation search (edges)",
                size: m,
                cap: MAX_EDGES,
            });
        }
        let actions = match group {
            Some(grp) => {
                grp.validate_on(g)?;
                grp.edge_actions(g)
            }
            None => Vec::new(),
        };
        let mut checks = vec![Vec::new(); m];
        for_each_clique(g, 3, DEFAULT_CLIQUE_BUDGET, |c| {
            if mode == SearchMode::MClique && c.len() > 3 {
                return true;
            }
            let mut last = 0;
            for (i, &a) in c.iter().enumerate() {
                for &b in &c[i + 1..] {
                    last = last.max(g.edge_index(a, b).expect("clique edges exist"));
                }
            }
            checks[last].push(CliqueCheck {
                mask: c.iter().fold(0u64, |acc, &v| acc | 1 << v),
                members: c.to_vec(),
            });
            true
        })?;
        Ok(Engine {
            n,
            edges: g.edges().to_vec(),
            mode,
            checks,
            actions,
        })
    }

    pub(crate) fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn fresh_state(&self) -> State {
        State {
            assign: vec![0; self.edges.len()],
            out: vec![0; self.n],
            inn: vec![0; self.n],
        }
    }

    fn clique_ok(&self, st: &State, c: &CliqueCheck) -> bool {
        match self.mode {
            SearchMode::MClique => {
                let [a, b, x] = [c.members[0], c.members[1], c.members[2]];
                let arc = |u: usize, v: usize| st.out[u] & (1 << v) != 0;
                for (p, q, r) in [(a, b, x), (a, x, b)] {
                    if arc(p, q) && arc(q, r) && arc(r, p) {
                        let reversible = [(p, q), (q, r), (r, p)]
                            .iter()
                            .filter(|&&(u, v)| arc(v, u))
                            .count();
                        if reversible < 2 {
                            return false;
                        }
                    }
                }
                true
            }
            _ => c
                .members
                .iter()
                .any(|&v| st.inn[v] & c.mask == c.mask & !(1 << v)),
        }
    }

    /// False when some group element maps every completion of the first
    /// `k` slots to something lexicographically smaller.
    fn symmetry_ok(&self, st: &State, k: usize) -> bool {
        self.actions.iter().all(|a| {
            for t in 0..k {
                if a.source[t] >= k {
                    return true;
                }
                let moved = a.value(&st.assign, t);
                match moved.cmp(&st.assign[t]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => return true,
                    std::cmp::Ordering::Equal => {}
                }
            }
            true
        })
    }

    /// Number of prefixes of length `depth`.
    pub(crate) fn prefix_count(&self, depth: usize) -> usize {
        self.mode.values().len().pow(depth as u32)
    }

    fn prefix_values(&self, depth: usize, index: usize) -> Vec<u8> {
        let vals = self.mode.values();
        let base = vals.len();
        let mut out = vec![0; depth];
        let mut rest = index;
        for slot in out.iter_mut().rev() {
            *slot = vals[rest % base];
            rest /= base;
        }
        out
    }

    /// Depth-first walk over the subtree fixed by `prefix`, calling `leaf`
    /// on every surviving full assignment, in lexicographic order.
    fn walk(
        &self,
        prefix: &[u8],
        leaf: &mut dyn FnMut(&State) -> ControlFlow<()>,
        nodes: &mut u64,
    ) {
        let mut st = self.fresh_state();
        let _ = self.descend(&mut st, 0, prefix, leaf, nodes);
    }

    fn descend(
        &self,
        st: &mut State,
        k: usize,
        prefix: &[u8],
        leaf: &mut dyn FnMut(&State) -> ControlFlow<()>,
        nodes: &mut u64,
    ) -> ControlFlow<()> {
        *nodes += 1;
        if k == self.edges.len() {
            return leaf(st);
        }
        let forced = prefix.get(k).copied();
        for &v in self.mode.values() {
            if forced.is_some_and(|f| f != v) {
                continue;
            }
            st.assign[k] = v;
            st.set(self.edges[k], v, true);
            let ok = self.checks[k].iter().all(|c| self.clique_ok(st, c))
                && self.symmetry_ok(st, k + 1);
            let flow = if ok {
                self.descend(st, k + 1, prefix, leaf, nodes)
            } else {
                ControlFlow::Continue(())
            };
            st.set(self.edges[k], v, false);
            flow?;
        }
        st.assign[k] = 0;
        ControlFlow::Continue(())
    }

    fn has_kernel(&self, st: &State) -> bool {
        MaskGraph::new(st.out.clone(), &st.inn).has_kernel()
    }

    /// Runs one prefix task, stopping at the first kernel-free leaf or
    /// after `cap` leaves.
    pub(crate) fn run_task(&self, prefix: &[u8], cap: u64) -> TaskOutcome {
        let mut out = TaskOutcome::default();
        let mut nodes = 0;
        self.walk(
            prefix,
            &mut |st| {
                if out.leaves == cap {
                    out.truncated = true;
                    return ControlFlow::Break(());
                }
                out.leaves += 1;
                if !self.has_kernel(st) {
                    out.counterexample = Some((st.assign.clone(), out.leaves));
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            },
            &mut nodes,
        );
        out.nodes = nodes;
        out
    }

    /// Fingerprint of everything that determines task outcomes.
    fn fingerprint(&self, depth: usize, budget: Option<u64>) -> String {
        let mut h = Sha256::new();
        h.update(format!("n={};mode={:?};depth={depth};budget={budget:?};", self.n, self.mode));
        for (a, b) in &self.edges {
            h.update(format!("{a}-{b},"));
        }
        for a in &self.actions {
            h.update(format!("{:?}{:?};", a.source, a.flip));
        }
        hex::encode(h.finalize())
    }
}

fn to_orientation(g: &UndirectedGraph, codes: &[u8]) -> Result<Orientation> {
    Orientation::new(
        g.clone(),
        codes.iter().map(|&c| EdgeDirection::from_code(c)).collect(),
    )
}

/// One slice of the search space: the assignments whose first `depth`
/// edges match the `index`-th prefix in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Partition {
    pub depth: usize,
    pub index: usize,
}

#[derive(Clone, Debug, Default)]
pub struct EnumOptions {
    pub symmetry: Option<SymmetryGroup>,
    pub partition: Option<Partition>,
}

/// Visits every simple clique-acyclic orientation of `g` (one per orbit
/// when a symmetry group is given) in lexicographic order of edge
/// directions. Returns the number visited.
pub fn enumerate_simple_clique_acyclic_orientations(
    g: &UndirectedGraph,
    opts: &EnumOptions,
    mut visit: impl FnMut(&[EdgeDirection]) -> ControlFlow<()>,
) -> Result<u64> {
    let engine = Engine::new(g, SearchMode::Simple, opts.symmetry.as_ref())?;
    let prefix = match opts.partition {
        Some(p) => {
            if p.depth > engine.edge_count() || p.index >= engine.prefix_count(p.depth) {
                return Err(Error::Contract(format!("no partition {p:?} for {} edges", engine.edge_count())));
            }
            engine.prefix_values(p.depth, p.index)
        }
        None => Vec::new(),
    };
    let mut count = 0;
    let mut nodes = 0;
    let mut dirs = Vec::with_capacity(engine.edge_count());
    engine.walk(
        &prefix,
        &mut |st| {
            count += 1;
            dirs.clear();
            dirs.extend(st.assign.iter().map(|&c| EdgeDirection::from_code(c)));
            visit(&dirs)
        },
        &mut nodes,
    );
    Ok(count)
}

pub fn collect_simple_clique_acyclic_orientations(
    g: &UndirectedGraph,
    opts: &EnumOptions,
) -> Result<Vec<Orientation>> {
    let mut all = Vec::new();
    enumerate_simple_clique_acyclic_orientations(g, opts, |d| {
        all.push(d.to_vec());
        ControlFlow::Continue(())
    })?;
    all.into_iter().map(|d| Orientation::new(g.clone(), d)).collect()
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    pub symmetry: Option<SymmetryGroup>,
    /// Cap on orientations examined.
    pub budget: Option<u64>,
    /// Worker count; `0` uses every core.
    pub jobs: usize,
    pub checkpoint: Option<PathBuf>,
    /// Length of the edge prefixes that split the work; the default
    /// depends on the mode only, never on `jobs`.
    pub prefix_depth: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every orientation examined has a kernel.
    Solvable,
    Counterexample(Orientation),
    ExhaustedBudget,
}

#[derive(Clone, Debug)]
pub struct SolvabilityVerdict {
    pub graph: String,
    pub mode: SearchMode,
    pub verdict: Verdict,
    pub orientations_examined: u64,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl SolvabilityVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        let verdict = match &self.verdict {
            Verdict::Solvable => "solvable",
            Verdict::Counterexample(_) => "counterexample",
            Verdict::ExhaustedBudget => "exhausted_budget",
        };
        let mut v = json!({
            "graph": self.graph,
            "mode": self.mode,
            "verdict": verdict,
            "orientations_examined": self.orientations_examined,
            "elapsed_ms": self.elapsed.as_millis() as u64,
        });
        if let Verdict::Counterexample(o) = &self.verdict {
            v["counterexample"] = json!(to_text(&GraphDoc::Orientation(o.clone())));
            v["arcs"] = json!(o.to_digraph().arcs().collect::<Vec<_>>());
        }
        v
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Checkpoint {
    fingerprint: String,
    completed: BTreeMap<usize, TaskOutcome>,
}

fn load_checkpoint(path: &Path, fingerprint: &str) -> Result<BTreeMap<usize, TaskOutcome>> {
    if !path.exists() {
        return Ok(BTreeMap::new());
    }
    let text = std::fs::read_to_string(path)?;
    let cp: Checkpoint = serde_json::from_str(&text)
        .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
    if cp.fingerprint != fingerprint {
        return Err(Error::Checkpoint(format!(
            "{} belongs to a different search (fingerprint mismatch)",
            path.display()
        )));
    }
    Ok(cp.completed)
}

fn save_checkpoint(path: &Path, fingerprint: &str, completed: &BTreeMap<usize, TaskOutcome>) -> Result<()> {
    let cp = Checkpoint {
        fingerprint: fingerprint.to_string(),
        completed: completed.clone(),
    };
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, serde_json::to_vec(&cp)?)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

struct Progress {
    completed: BTreeMap<usize, TaskOutcome>,
    since_save: u64,
}

/// Names anti-holes in their standard labeling, anything else by size.
pub fn graph_id(g: &UndirectedGraph) -> String {
    let n = g.vertex_count();
    let is_antihole = n >= 4
        && crate::antiholes::gen_antihole(n).is_ok_and(|(h, _)| h.edges() == g.edges());
    if is_antihole {
        format!("antihole-{n}")
    } else {
        format!("graph-n{n}-m{}", g.edge_count())
    }
}

/// Searches the orientations allowed by `mode` for one without a kernel.
/// The reported counterexample is the lexicographically least one, and
/// the outcome does not depend on `jobs`.
pub fn run_search(g: &UndirectedGraph, mode: SearchMode, opts: &SearchOptions) -> Result<SolvabilityVerdict> {
    let start = Instant::now();
    let engine = Engine::new(g, mode, opts.symmetry.as_ref())?;
    let depth = opts
        .prefix_depth
        .unwrap_or_else(|| mode.default_prefix_depth(engine.edge_count()))
        .min(engine.edge_count());
    let fingerprint = engine.fingerprint(depth, opts.budget);
    let resumed = match &opts.checkpoint {
        Some(p) => load_checkpoint(p, &fingerprint)?,
        None => BTreeMap::new(),
    };
    let cap = opts.budget.unwrap_or(u64::MAX);
    let tasks: Vec<usize> = (0..engine.prefix_count(depth)).collect();
    let best = AtomicUsize::new(usize::MAX);
    let progress = Mutex::new(Progress {
        completed: resumed,
        since_save: 0,
    });
    let save_error: Mutex<Option<Error>> = Mutex::new(None);

    // Tasks run in waves so that a budget stops the search after about
    // one wave of excess work. Every task in a wave may use the whole
    // remaining budget; the in-order merge below decides what counts.
    let mut examined = 0u64;
    let mut nodes = 0u64;
    let mut verdict = None;
    for wave in tasks.chunks(WAVE) {
        let remaining = cap - examined;
        let outcomes: Vec<Option<TaskOutcome>> = parallel::map(wave, opts.jobs, |&i| {
            if let Some(done) = progress.lock().expect("progress lock").completed.get(&i) {
                return Some(done.clone());
            }
            if i > best.load(Ordering::Relaxed) {
                return None;
            }
            let outcome = engine.run_task(&engine.prefix_values(depth, i), remaining);
            if outcome.counterexample.is_some() {
                best.fetch_min(i, Ordering::Relaxed);
            }
            if let Some(path) = &opts.checkpoint {
                let mut p = progress.lock().expect("progress lock");
                p.completed.insert(i, outcome.clone());
                p.since_save += outcome.leaves;
                if p.since_save >= CHECKPOINT_INTERVAL {
                    p.since_save = 0;
                    if let Err(e) = save_checkpoint(path, &fingerprint, &p.completed) {
                        *save_error.lock().expect("error lock") = Some(e);
                    }
                }
            }
            Some(outcome)
        });
        for outcome in &outcomes {
            let Some(t) = outcome else {
                return Err(Error::Invariant("a task below the first counterexample was skipped".into()));
            };
            nodes += t.nodes;
            if let Some((codes, ordinal)) = &t.counterexample {
                if *ordinal <= cap - examined {
                    examined += ordinal;
                    verdict = Some(Verdict::Counterexample(to_orientation(g, codes)?));
                } else {
                    examined = cap;
                    verdict = Some(Verdict::ExhaustedBudget);
                }
                break;
            }
            if t.truncated || t.leaves > cap - examined {
                examined = cap;
                verdict = Some(Verdict::ExhaustedBudget);
                break;
            }
            examined += t.leaves;
        }
        if verdict.is_some() {
            break;
        }
    }
    if let Some(e) = save_error.into_inner().expect("error lock") {
        return Err(e);
    }
    if let Some(path) = &opts.checkpoint {
        save_checkpoint(path, &fingerprint, &progress.into_inner().expect("progress lock").completed)?;
    }
    let verdict = verdict.unwrap_or(Verdict::Solvable);
    if let Verdict::Counterexample(o) = &verdict {
        reverify_counterexample(o, mode)?;
    }
    Ok(SolvabilityVerdict {
        graph: graph_id(g),
        mode,
        verdict,
        orientations_examined: examined,
        nodes,
        elapsed: start.elapsed(),
    })
}

fn reverify_counterexample(o: &Orientation, mode: SearchMode) -> Result<()> {
    let d = o.to_digraph();
    let acyclic = match mode {
        SearchMode::MClique => crate::oracle::is_m_clique_acyclic(&d).m_clique_acyclic,
        _ => crate::oracle::is_clique_acyclic(&d, DEFAULT_CLIQUE_BUDGET)?.clique_acyclic,
    };
    let simple_ok = mode != SearchMode::Simple || o.is_simple();
    let kernel = MaskGraph::from_digraph(&d).first_kernel().is_some();
    if !acyclic || !simple_ok || kernel {
        return Err(Error::Invariant(format!(
            "counterexample fails re-verification (acyclic {acyclic}, simple {simple_ok}, kernel {kernel})"
        )));
    }
    Ok(())
}

/// Whether every simple clique-acyclic orientation of `g` has a kernel.
pub fn verify_simple_kernel_solvable(g: &UndirectedGraph, opts: &SearchOptions) -> Result<SolvabilityVerdict> {
    run_search(g, SearchMode::Simple, opts)
}

/// Hunts for a clique-acyclic orientation, reversible edges allowed, with
/// no kernel. Directions are tried forward, backward, then both.
pub fn search_clique_acyclic_no_kernel(g: &UndirectedGraph, opts: &SearchOptions) -> Result<SolvabilityVerdict> {
    run_search(g, SearchMode::General, opts)
}

/// Same hunt among orientations whose directed triangles all have two
/// reversible arcs.
pub fn search_m_clique_acyclic_no_kernel(g: &UndirectedGraph, opts: &SearchOptions) -> Result<SolvabilityVerdict> {
    run_search(g, SearchMode::MClique, opts)
}
