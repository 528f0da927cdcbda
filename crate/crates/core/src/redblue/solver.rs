//! The two constructive solvers. Both grow an independent set `I` with the
//! property "`I r-> w` implies `w -> I`" until it absorbs everything.
//!
//! The polynomial solver tracks the antichain of blue strongly connected
//! components met by `I`; each improvement strictly raises it in the
//! extended antichain order, which bounds the number of steps by the vertex
//! count.

use serde::Serialize;
use serde_json::json;

use crate::colored::ColoredDigraph;
use crate::error::{Error, Result};
use crate::redblue::conditions::{check_prop2_conditions, check_thm1_conditions};
use crate::redblue::poset::{compare_antichains, AntichainOrder, Poset};
use crate::scc::{strongly_connected_components, topological_order, Condensation};
use crate::vertex_set::VertexSet;
use crate::Digraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepAction {
    Init,
    Add,
    Swap,
}

/// Blue strongly connected components ordered by blue reachability.
#[derive(Clone, Debug)]
pub struct BlueComponentPoset {
    condensation: Condensation,
    order: Poset,
}

impl BlueComponentPoset {
    pub fn new(cd: &ColoredDigraph) -> Self {
        let condensation = strongly_connected_components(cd.blue());
        let order = Poset::from_dag(condensation.dag()).expect("a condensation is acyclic");
        BlueComponentPoset {
            condensation,
            order,
        }
    }

    pub fn condensation(&self) -> &Condensation {
        &self.condensation
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    /// The set of components met by `set`.
    pub fn potential(&self, set: &VertexSet) -> VertexSet {
        let mut comps = VertexSet::new(self.condensation.len());
        for v in set {
            comps.insert(self.condensation.component_of(v));
        }
        comps
    }

    pub fn representatives(&self, potential: &VertexSet) -> Vec<usize> {
        potential
            .iter()
            .map(|c| self.condensation.representative(c))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct TraceStep {
    pub set: VertexSet,
    /// Components met by `set`; only tracked by the polynomial solver.
    pub potential: Option<VertexSet>,
    pub action: StepAction,
}

#[derive(Clone, Debug)]
pub struct SolveTrace {
    pub components: Option<BlueComponentPoset>,
    pub steps: Vec<TraceStep>,
    pub result: VertexSet,
}

impl SolveTrace {
    /// Number of add/swap steps after the initial set.
    pub fn improve_steps(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    /// Whether consecutive potentials strictly increase.
    pub fn potentials_increase(&self) -> bool {
        let Some(poset) = &self.components else {
            return false;
        };
        self.steps.windows(2).all(|w| match (&w[0].potential, &w[1].potential) {
            (Some(a), Some(b)) => {
                compare_antichains(poset.order(), a, b).ok() == Some(AntichainOrder::Less)
            }
            _ => false,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let iterations: Vec<_> = self
            .steps
            .iter()
            .map(|s| {
                let potential = match (&s.potential, &self.components) {
                    (Some(p), Some(poset)) => json!(poset.representatives(p)),
                    _ => serde_json::Value::Null,
                };
                json!({ "set": s.set.to_vec(), "potential": potential, "action": s.action })
            })
            .collect();
        json!({ "iterations": iterations, "result": self.result.to_vec() })
    }
}

fn conditions_or_invariant(report: crate::redblue::ConditionReport, what: &str) -> Error {
    if report.satisfied {
        Error::Invariant(what.to_string())
    } else {
        Error::ConditionsViolated(Box::new(report))
    }
}

/// A `w` in `within` with `v r-> w` but no arc `w -> v`, if any.
fn init_implication_breaker(cd: &ColoredDigraph, v: usize, within: &VertexSet) -> Option<usize> {
    cd.red()
        .out(v)
        .iter()
        .find(|&w| within.contains(w) && !cd.has_arc(w, v))
}

/// Some `w` with `I r-> w` and no arc from `w` into `I`, if any.
pub fn family_violation(cd: &ColoredDigraph, set: &VertexSet) -> Option<usize> {
    let d = cd.underlying();
    let mut red_out = VertexSet::new(cd.vertex_count());
    for x in set {
        red_out.union_with(cd.red().out(x));
    }
    red_out.iter().find(|&w| !d.out(w).intersects(set))
}

/// A singleton `{v}` in the solver family: `v` is the least sink of the
/// digraph of red arcs `(v, w)` with no arc back.
pub fn find_initial_independent(cd: &ColoredDigraph) -> Result<VertexSet> {
    let n = cd.vertex_count();
    if n == 0 {
        return Ok(VertexSet::new(0));
    }
    let mut witnesses = Digraph::empty(n);
    for (v, w) in cd.red().arcs() {
        if !cd.has_arc(w, v) {
            witnesses.add_arc(v, w)?;
        }
    }
    if topological_order(&witnesses).is_none() {
        return Err(conditions_or_invariant(
            check_thm1_conditions(cd),
            "red witness digraph is cyclic although the conditions hold",
        ));
    }
    let v = (0..n)
        .find(|&v| witnesses.out(v).is_empty())
        .expect("a non-empty acyclic digraph has a sink");
    debug_assert!(init_implication_breaker(cd, v, &VertexSet::full(n)).is_none());
    VertexSet::singleton(n, v)
}

/// One improvement of a non-kernel family member `I`. Let `U` be the
/// vertices neither in `I` nor absorbed by it and `v` the least vertex of
/// `U` with "`v r-> w` implies `w -> v`" inside `U`. If `I` has no arc to
/// `v` the result is `I + v`; otherwise `v` replaces its in-neighbors in `I`.
pub fn improve_step(cd: &ColoredDigraph, set: &VertexSet) -> Result<(VertexSet, StepAction)> {
    let d = cd.underlying();
    if set.universe() != d.vertex_count() {
        return Err(Error::Contract("vertex set over the wrong universe".into()));
    }
    if !d.is_independent(set) {
        return Err(Error::Contract(format!("{set:?} is not independent")));
    }
    if let Some(w) = family_violation(cd, set) {
        return Err(Error::Contract(format!(
            "{set:?} has a red arc to {w}, which sends no arc back into it"
        )));
    }
    if d.is_kernel(set) {
        return Err(Error::Contract(format!("{set:?} is already a kernel")));
    }
    let (next, action) = improve_unchecked(cd, set)?;
    verify_member(cd, &next)?;
    Ok((next, action))
}

fn verify_member(cd: &ColoredDigraph, set: &VertexSet) -> Result<()> {
    if !cd.underlying().is_independent(set) {
        return Err(Error::Invariant(format!("improved set {set:?} is not independent")));
    }
    if let Some(w) = family_violation(cd, set) {
        return Err(Error::Invariant(format!(
            "improved set {set:?} leaves {w} unanswered"
        )));
    }
    Ok(())
}

fn unabsorbed(d: &Digraph, set: &VertexSet) -> VertexSet {
    d.closed_in_neighbors_of_set(set).complement()
}

fn improve_unchecked(cd: &ColoredDigraph, set: &VertexSet) -> Result<(VertexSet, StepAction)> {
    let d = cd.underlying();
    let u = unabsorbed(d, set);
    let Some(v) = u.iter().find(|&v| init_implication_breaker(cd, v, &u).is_none()) else {
        return Err(conditions_or_invariant(
            check_thm1_conditions(cd),
            "no unabsorbed vertex satisfies the red implication",
        ));
    };
    Ok(replace_or_add(d, set, v))
}

fn replace_or_add(d: &Digraph, set: &VertexSet, v: usize) -> (VertexSet, StepAction) {
    if d.inn(v).intersects(set) {
        let mut next = set.difference(d.inn(v));
        next.insert(v);
        (next, StepAction::Swap)
    } else {
        let mut next = set.clone();
        next.insert(v);
        (next, StepAction::Add)
    }
}

/// Polynomial kernel construction for digraphs meeting both red/blue
/// implications. At most `n` improvement steps are taken.
pub fn solve_thm1(cd: &ColoredDigraph) -> Result<SolveTrace> {
    let report = check_thm1_conditions(cd);
    if !report.satisfied {
        return Err(Error::ConditionsViolated(Box::new(report)));
    }
    let d = cd.underlying();
    let n = d.vertex_count();
    let poset = BlueComponentPoset::new(cd);
    let mut set = find_initial_independent(cd)?;
    let mut potential = antichain_of(&poset, &set)?;
    let mut steps = vec![TraceStep {
        set: set.clone(),
        potential: Some(potential.clone()),
        action: StepAction::Init,
    }];
    while !d.is_kernel(&set) {
        if steps.len() > n {
            return Err(Error::Invariant(format!(
                "more than {n} improvement steps on {n} vertices"
            )));
        }
        let (next, action) = improve_unchecked(cd, &set)?;
        if cfg!(debug_assertions) {
            verify_member(cd, &next)?;
        }
        let next_potential = antichain_of(&poset, &next)?;
        let cmp = compare_antichains(poset.order(), &potential, &next_potential)?;
        if cmp != AntichainOrder::Less {
            return Err(Error::Invariant(format!(
                "potential went from {potential:?} to {next_potential:?} ({cmp:?})"
            )));
        }
        set = next;
        potential = next_potential;
        steps.push(TraceStep {
            set: set.clone(),
            potential: Some(potential.clone()),
            action,
        });
    }
    Ok(SolveTrace {
        components: Some(poset),
        steps,
        result: set,
    })
}

fn antichain_of(poset: &BlueComponentPoset, set: &VertexSet) -> Result<VertexSet> {
    let p = poset.potential(set);
    if !poset.order().is_antichain(&p) {
        return Err(Error::Invariant(format!(
            "independent set {set:?} meets comparable blue components"
        )));
    }
    Ok(p)
}

/// Default iteration budget for [`solve_prop2`]: `n * 2^n`, saturating.
pub fn default_prop2_budget(n: usize) -> u64 {
    if n >= 58 {
        u64::MAX
    } else {
        (n as u64).max(1) << n
    }
}

/// Kernel construction for digraphs without monochromatic cycles whose
/// red-any-blue three-arc paths all induce an extra arc. Uses red sinks of
/// the unabsorbed part; no polynomial step bound is known, hence the budget.
pub fn solve_prop2(cd: &ColoredDigraph, budget: Option<u64>) -> Result<SolveTrace> {
    let report = check_prop2_conditions(cd);
    if !report.satisfied {
        return Err(Error::ConditionsViolated(Box::new(report)));
    }
    let d = cd.underlying();
    let n = d.vertex_count();
    let budget = budget.unwrap_or_else(|| default_prop2_budget(n));
    let red_sink_in = |within: &VertexSet| {
        within
            .iter()
            .find(|&v| !cd.red().out(v).intersects(within))
    };
    let mut set = VertexSet::new(n);
    if n > 0 {
        let v = red_sink_in(&VertexSet::full(n)).expect("red arcs are acyclic");
        set.insert(v);
    }
    let mut steps = vec![TraceStep {
        set: set.clone(),
        potential: None,
        action: StepAction::Init,
    }];
    while !d.is_kernel(&set) {
        if steps.len() as u64 > budget {
            let trace = SolveTrace {
                components: None,
                steps,
                result: set,
            };
            return Err(Error::SolverBudget {
                budget,
                trace: Box::new(trace),
            });
        }
        let u = unabsorbed(d, &set);
        let v = red_sink_in(&u).expect("red arcs are acyclic");
        let (next, action) = replace_or_add(d, &set, v);
        if cfg!(debug_assertions) {
            verify_member(cd, &next)?;
            // Every dropped vertex has a blue arc into the new set.
            for x in set.difference(&next).iter() {
                if !cd.blue().out(x).intersects(&next) {
                    return Err(Error::Invariant(format!(
                        "dropped vertex {x} has no blue arc into {next:?}"
                    )));
                }
            }
        }
        set = next;
        steps.push(TraceStep {
            set: set.clone(),
            potential: None,
            action,
        });
    }
    Ok(SolveTrace {
        components: None,
        steps,
        result: set,
    })
}
