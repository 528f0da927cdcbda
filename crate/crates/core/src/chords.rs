//! Chords of odd directed cycles, the three chord conditions that force a
//! kernel, and the kernel construction that goes with the strongest one.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::cycles::{enumerate_directed_cycles, Parity};
use crate::digraph::{lift, Digraph};
use crate::error::{Error, Result};
use crate::oracle::{kernel_via_semikernel_recursion, SemiKernelSource};
use crate::parallel;
use crate::vertex_set::VertexSet;

/// An arc joining two vertices of a cycle without being one of its arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Chord {
    pub tail: usize,
    pub head: usize,
    pub tail_pos: usize,
    pub head_pos: usize,
    /// Length of the cycle part from tail to head, in cycle direction.
    pub span: usize,
}

impl Chord {
    pub fn is_odd(&self) -> bool {
        self.span % 2 == 1
    }

    pub fn is_short(&self) -> bool {
        self.span == 2
    }
}

fn position(cycle: &[usize], v: usize) -> Option<usize> {
    cycle.iter().position(|&x| x == v)
}

/// Classifies `(tail, head)` as a chord of `cycle`. Does not look at any
/// digraph; callers make sure the arc exists.
pub fn classify_chord(cycle: &[usize], tail: usize, head: usize) -> Result<Chord> {
    let len = cycle.len();
    let (Some(tail_pos), Some(head_pos)) = (position(cycle, tail), position(cycle, head)) else {
        return Err(Error::Contract(format!(
            "({tail}, {head}) has an endpoint off the cycle {cycle:?}"
        )));
    };
    let span = (head_pos + len - tail_pos) % len;
    if span == 0 || span == 1 {
        return Err(Error::Contract(format!(
            "({tail}, {head}) is not a chord of {cycle:?}"
        )));
    }
    Ok(Chord {
        tail,
        head,
        tail_pos,
        head_pos,
        span,
    })
}

/// All chords of `cycle` in `d`, ordered by tail position then head position.
pub fn chords_of(d: &Digraph, cycle: &[usize]) -> Vec<Chord> {
    let len = cycle.len();
    let mut pos = HashMap::with_capacity(len);
    for (i, &v) in cycle.iter().enumerate() {
        pos.insert(v, i);
    }
    let mut chords = Vec::new();
    for (tail_pos, &tail) in cycle.iter().enumerate() {
        for head in d.out(tail) {
            if let Some(&head_pos) = pos.get(&head) {
                let span = (head_pos + len - tail_pos) % len;
                if span >= 2 {
                    chords.push(Chord {
                        tail,
                        head,
                        tail_pos,
                        head_pos,
                        span,
                    });
                }
            }
        }
    }
    chords.sort_by_key(|c| (c.tail_pos, c.head_pos));
    chords
}

/// Whether positions `a, b, c, d` are distinct and met in this cyclic order.
fn in_cyclic_order(len: usize, a: usize, b: usize, c: usize, d: usize) -> bool {
    let rel = |x: usize| (x + len - a) % len;
    let (b, c, d) = (rel(b), rel(c), rel(d));
    0 < b && b < c && c < d
}

fn four_in_order(len: usize, p: [usize; 4]) -> bool {
    in_cyclic_order(len, p[0], p[1], p[2], p[3]) || in_cyclic_order(len, p[0], p[3], p[2], p[1])
}

/// Chords `(u, v)` and `(w, t)` with `u, w, v, t` distinct and in this
/// order around the cycle, or in the opposite order.
pub fn are_crossing(c1: &Chord, c2: &Chord, cycle_len: usize) -> bool {
    four_in_order(cycle_len, [c1.tail_pos, c2.tail_pos, c1.head_pos, c2.head_pos])
}

/// Chords `(u, v)` and `(w, t)` with `u, w, t, v` distinct and in this
/// order around the cycle, or in the opposite order.
pub fn are_nested(c1: &Chord, c2: &Chord, cycle_len: usize) -> bool {
    four_in_order(cycle_len, [c1.tail_pos, c2.tail_pos, c2.head_pos, c1.head_pos])
}

/// Distinct heads at adjacent cycle positions.
pub fn have_consecutive_heads(c1: &Chord, c2: &Chord, cycle_len: usize) -> bool {
    let diff = (c1.head_pos + cycle_len - c2.head_pos) % cycle_len;
    diff == 1 || diff == cycle_len - 1
}

/// Two odd chords that neither cross nor nest. Both relations need four
/// distinct endpoints, so odd chords sharing an endpoint qualify.
pub fn are_separated_odd(c1: &Chord, c2: &Chord, cycle_len: usize) -> bool {
    c1.is_odd()
        && c2.is_odd()
        && !are_crossing(c1, c2, cycle_len)
        && !are_nested(c1, c2, cycle_len)
}

pub fn is_crossing_short_odd(c1: &Chord, c2: &Chord, cycle_len: usize) -> bool {
    are_crossing(c1, c2, cycle_len)
        && ((c1.is_short() && c2.is_odd()) || (c2.is_short() && c1.is_odd()))
}

/// Which chord rule an odd cycle meets, first match wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CycleRule {
    #[serde(rename = "consecutive-heads")]
    ConsecutiveHeads,
    #[serde(rename = "two-odd-noncrossing-nonnested")]
    SeparatedOddChords,
    #[serde(rename = "crossing-short-odd")]
    CrossingShortOdd,
    #[serde(rename = "two-reversible-arcs")]
    TwoReversibleArcs,
    #[serde(rename = "none")]
    None,
}

fn any_pair(chords: &[Chord], pred: impl Fn(&Chord, &Chord) -> bool) -> bool {
    chords
        .iter()
        .enumerate()
        .any(|(i, a)| chords[i + 1..].iter().any(|b| pred(a, b)))
}

/// Rule tag for one cycle under the full three-bullet condition.
pub fn classify_cycle(d: &Digraph, cycle: &[usize]) -> CycleRule {
    let len = cycle.len();
    let chords = chords_of(d, cycle);
    if any_pair(&chords, |a, b| have_consecutive_heads(a, b, len)) {
        CycleRule::ConsecutiveHeads
    } else if any_pair(&chords, |a, b| are_separated_odd(a, b, len)) {
        CycleRule::SeparatedOddChords
    } else if any_pair(&chords, |a, b| is_crossing_short_odd(a, b, len)) {
        CycleRule::CrossingShortOdd
    } else {
        CycleRule::None
    }
}

fn classify_gsnl(d: &Digraph, cycle: &[usize]) -> CycleRule {
    let len = cycle.len();
    if any_pair(&chords_of(d, cycle), |a, b| have_consecutive_heads(a, b, len)) {
        CycleRule::ConsecutiveHeads
    } else {
        CycleRule::None
    }
}

fn classify_duchet(d: &Digraph, cycle: &[usize]) -> CycleRule {
    let reversible = crate::cycles::cycle_arcs(cycle)
        .filter(|&(a, b)| d.has_arc(b, a))
        .count();
    if reversible >= 2 {
        CycleRule::TwoReversibleArcs
    } else {
        CycleRule::None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleVerdict {
    pub cycle: Vec<usize>,
    pub rule: CycleRule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordReport {
    pub satisfied: bool,
    pub cycles: Vec<CycleVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failing: Option<Vec<usize>>,
}

/// Which odd cycles to examine and how hard to try.
#[derive(Clone, Copy, Debug)]
pub struct CycleScan {
    /// Longest cycle examined; `None` means all of them.
    pub max_len: Option<usize>,
    /// Cap on the number of odd cycles enumerated.
    pub budget: Option<u64>,
    pub jobs: usize,
}

pub const DEFAULT_CYCLE_BUDGET: u64 = 5_000_000;

impl Default for CycleScan {
    fn default() -> Self {
        CycleScan {
            max_len: None,
            budget: Some(DEFAULT_CYCLE_BUDGET),
            jobs: 1,
        }
    }
}

fn scan(d: &Digraph, cfg: &CycleScan, classify: fn(&Digraph, &[usize]) -> CycleRule) -> Result<ChordReport> {
    let max_len = cfg.max_len.unwrap_or(d.vertex_count()).min(d.vertex_count());
    let cycles = enumerate_directed_cycles(d, Parity::Odd, max_len, cfg.budget)?;
    let rules = parallel::map(&cycles, cfg.jobs, |c| classify(d, c));
    let cycles: Vec<CycleVerdict> = cycles
        .into_iter()
        .zip(rules)
        .map(|(cycle, rule)| CycleVerdict { cycle, rule })
        .collect();
    let first_failing = cycles
        .iter()
        .find(|v| v.rule == CycleRule::None)
        .map(|v| v.cycle.clone());
    Ok(ChordReport {
        satisfied: first_failing.is_none(),
        cycles,
        first_failing,
    })
}

/// Every odd directed cycle meets one of the three chord rules.
pub fn check_thm2_condition(d: &Digraph, cfg: &CycleScan) -> Result<ChordReport> {
    scan(d, cfg, classify_cycle)
}

/// Every odd directed cycle has two chords with consecutive heads.
pub fn check_gsnl_condition(d: &Digraph, cfg: &CycleScan) -> Result<ChordReport> {
    scan(d, cfg, classify_gsnl)
}

/// Every odd directed cycle has two arcs whose reverses are arcs too.
pub fn check_duchet_condition(d: &Digraph, cfg: &CycleScan) -> Result<ChordReport> {
    scan(d, cfg, classify_duchet)
}

/// The semi-kernel of the inductive step. `K` is a kernel of `D - N-[u]`
/// meeting `N+(u)`; the result is every vertex of `K + u` reachable from
/// `I = K ∩ N+(u)` along a path that alternates between `K + u` and the
/// rest, and whose non-final vertices send no arc back to an earlier
/// vertex of `K + u`.
pub fn semi_kernel_thm2(d: &Digraph, u: usize, kernel: &VertexSet) -> Result<VertexSet> {
    let n = d.vertex_count();
    d.check_vertex(u)?;
    if kernel.universe() != n {
        return Err(Error::Contract("kernel over the wrong universe".into()));
    }
    let removed = d.closed_in_neighbors(u)?;
    if kernel.intersects(&removed) {
        return Err(Error::Contract(format!("{kernel:?} meets N-[{u}]")));
    }
    let (rest, old_of) = d.without(&removed);
    let local: Vec<usize> = old_of
        .iter()
        .enumerate()
        .filter(|&(_, &v)| kernel.contains(v))
        .map(|(i, _)| i)
        .collect();
    if !rest.is_kernel(&VertexSet::from_indices(rest.vertex_count(), local)?) {
        return Err(Error::Contract(format!("{kernel:?} is not a kernel of D - N-[{u}]")));
    }
    let start = kernel.intersection(d.out(u));
    if start.is_empty() {
        return Err(Error::Contract(format!("{kernel:?} misses N+({u})")));
    }

    let mut kp = kernel.clone();
    kp.insert(u);
    // Search states: (current end, K'-vertices on the path so far).
    let mut seen: HashSet<(usize, VertexSet)> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut reached = VertexSet::new(n);
    for v in &start {
        let state = (v, VertexSet::singleton(n, v)?);
        seen.insert(state.clone());
        queue.push_back(state);
    }
    while let Some((c, on_path)) = queue.pop_front() {
        let c_in = kp.contains(c);
        if c_in {
            reached.insert(c);
        }
        // Extending makes `c` a non-final vertex: it must not point back
        // to an earlier member of K'.
        let mut earlier = on_path.clone();
        earlier.remove(c);
        if d.out(c).intersects(&earlier) {
            continue;
        }
        for x in d.out(c) {
            if kp.contains(x) == c_in || on_path.contains(x) {
                continue;
            }
            let mut next = on_path.clone();
            if kp.contains(x) {
                next.insert(x);
            }
            let state = (x, next);
            if seen.insert(state.clone()) {
                queue.push_back(state);
            }
        }
    }
    if reached.contains(u) {
        return Err(Error::Invariant(format!(
            "vertex {u} is reachable by an admissible path from {start:?}"
        )));
    }
    if !d.is_semi_kernel(&reached) {
        return Err(Error::Invariant(format!("{reached:?} is not a semi-kernel")));
    }
    Ok(reached)
}

/// Semi-kernels from the inductive step, with `u` the least vertex.
/// Kernels of the smaller digraphs come from the same construction and are
/// memoized by arc set.
#[derive(Debug, Default)]
pub struct Thm2SemiKernels {
    memo: RefCell<HashMap<(usize, Vec<(usize, usize)>), VertexSet>>,
}

impl Thm2SemiKernels {
    pub fn new() -> Self {
        Self::default()
    }

    fn kernel(&self, d: &Digraph) -> Result<VertexSet> {
        let key = (d.vertex_count(), d.arcs().collect::<Vec<_>>());
        if let Some(k) = self.memo.borrow().get(&key) {
            return Ok(k.clone());
        }
        let k = kernel_via_semikernel_recursion(d, self)?;
        self.memo.borrow_mut().insert(key, k.clone());
        Ok(k)
    }
}

impl SemiKernelSource for Thm2SemiKernels {
    fn semi_kernel(&self, d: &Digraph) -> Result<Option<VertexSet>> {
        let n = d.vertex_count();
        if n == 0 {
            return Ok(None);
        }
        let u = 0;
        let removed = d.closed_in_neighbors(u)?;
        let (rest, old_of) = d.without(&removed);
        let k = lift(&self.kernel(&rest)?, &old_of, n);
        if !k.intersects(d.out(u)) {
            let mut kp = k;
            kp.insert(u);
            return Ok(Some(kp));
        }
        semi_kernel_thm2(d, u, &k).map(Some)
    }
}

/// A kernel of a digraph meeting the three-rule chord condition, built by
/// the inductive construction. Refuses digraphs failing the condition.
pub fn find_kernel_thm2(d: &Digraph, cfg: &CycleScan) -> Result<VertexSet> {
    let report = check_thm2_condition(d, cfg)?;
    if let Some(cycle) = report.first_failing {
        return Err(Error::ChordConditionFails { cycle });
    }
    kernel_via_semikernel_recursion(d, &Thm2SemiKernels::new())
}
