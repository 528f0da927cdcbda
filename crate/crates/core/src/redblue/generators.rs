//! Seeded random instances satisfying the red/blue implications.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colored::{ArcColor, ColoredDigraph};
use crate::error::{Error, Result};
use crate::oracle::is_m_clique_acyclic;
use crate::redblue::conditions::{check_thm1_conditions, Rule};
use crate::scc::reachability;
use crate::Digraph;

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Transitive closure of a random DAG whose topological order is a random
/// permutation; each forward pair is an arc with probability `density`.
fn random_transitive(rng: &mut impl Rng, n: usize, density: f64) -> Digraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut dag = Digraph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                dag.add_arc(order[i], order[j]).expect("fresh arc");
            }
        }
    }
    let reach = reachability(&dag);
    let mut closure = Digraph::empty(n);
    for (u, targets) in reach.iter().enumerate() {
        for v in targets {
            closure.add_arc(u, v).expect("closure of a DAG has no loops");
        }
    }
    closure
}

/// Removes arcs until `u -> v -> w` (distinct) always implies `u -> w`.
/// The arc `(v, w)` of the first offending triple is the one dropped.
fn repair_transitivity(d: &mut Digraph) {
    loop {
        let n = d.vertex_count();
        let mut offending = None;
        'scan: for v in 0..n {
            for u in d.inn(v).iter() {
                for w in d.out(v).iter() {
                    if u != w && !d.has_arc(u, w) {
                        offending = Some((v, w));
                        break 'scan;
                    }
                }
            }
        }
        match offending {
            Some((v, w)) => {
                d.remove_arc(v, w);
            }
            None => return,
        }
    }
}

fn verified(cd: ColoredDigraph, what: &str) -> Result<ColoredDigraph> {
    let report = check_thm1_conditions(&cd);
    if report.satisfied {
        Ok(cd)
    } else {
        Err(Error::Invariant(format!(
            "{what} generator produced an instance breaking the conditions: {:?}",
            report.violations.first()
        )))
    }
}

/// Blue and red classes that are each transitive. Red pairs already used by
/// blue are dropped, after which red is pruned back to transitivity.
pub fn generate_ssw_instance(seed: u64, n: usize, density: f64) -> Result<ColoredDigraph> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Contract(format!("density {density} is not in [0, 1]")));
    }
    let mut rng = rng_for(seed);
    let blue = random_transitive(&mut rng, n, density);
    let mut red = random_transitive(&mut rng, n, density);
    for (u, v) in blue.arcs().collect::<Vec<_>>() {
        red.remove_arc(u, v);
    }
    repair_transitivity(&mut red);
    let mut cd = ColoredDigraph::empty(n);
    for (u, v) in blue.arcs() {
        cd.add_arc(u, v, ArcColor::Blue)?;
    }
    for (u, v) in red.arcs() {
        cd.add_arc(u, v, ArcColor::Red)?;
    }
    verified(cd, "ssw")
}

/// Comparability graph of a random poset `T`, oriented at random, with
/// reverse arcs added until every directed triangle has two reversible arcs.
/// An arc is red when it agrees with `T`.
pub fn generate_comparability_instance(seed: u64, n: usize) -> Result<ColoredDigraph> {
    let mut rng = rng_for(seed);
    let density = rng.gen_range(0.2..0.8);
    let order = random_transitive(&mut rng, n, density);
    comparability_coloring(&mut rng, &order)
}

/// Same construction for a given transitive orientation `order`.
pub fn comparability_instance_for(seed: u64, order: &Digraph) -> Result<ColoredDigraph> {
    let mut check = order.clone();
    repair_transitivity(&mut check);
    if check.arc_count() != order.arc_count() || !crate::scc::is_acyclic(order) {
        return Err(Error::Contract("order is not a transitive acyclic digraph".into()));
    }
    comparability_coloring(&mut rng_for(seed), order)
}

fn comparability_coloring(rng: &mut impl Rng, order: &Digraph) -> Result<ColoredDigraph> {
    let n = order.vertex_count();
    let mut d = Digraph::empty(n);
    for (u, v) in order.arcs() {
        match rng.gen_range(0..5) {
            0 => {
                d.add_arc(u, v)?;
                d.add_arc(v, u)?;
            }
            1 | 2 => d.add_arc(u, v)?,
            _ => d.add_arc(v, u)?,
        }
    }
    while let Some([a, b, c]) = is_m_clique_acyclic(&d).violating_triangle {
        let (x, y) = [(a, b), (b, c), (c, a)]
            .into_iter()
            .find(|&(x, y)| d.has_arc(x, y) && !d.has_arc(y, x))
            .ok_or_else(|| Error::Invariant("violating triangle has no one-way arc".into()))?;
        d.add_arc(y, x)?;
    }
    let cd = ColoredDigraph::from_digraph(&d, |u, v| {
        if order.has_arc(u, v) {
            ArcColor::Red
        } else {
            ArcColor::Blue
        }
    });
    verified(cd, "comparability")
}

/// Random colored digraph repaired towards the conditions; each arc change
/// costs one unit of `budget`. `None` once the budget is spent.
pub fn generate_thm1_instance(seed: u64, n: usize, budget: u64) -> Option<ColoredDigraph> {
    let mut rng = rng_for(seed);
    let mut spent = 0u64;
    let per_attempt = 4 * (n as u64).pow(2) + 8;
    while spent < budget {
        let density = rng.gen_range(0.1..0.6);
        let mut cd = ColoredDigraph::empty(n);
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(density) {
                    let color = if rng.gen_bool(0.5) { ArcColor::Blue } else { ArcColor::Red };
                    cd.add_arc(u, v, color).expect("fresh pair");
                }
            }
        }
        spent += 1;
        let mut local = 0u64;
        loop {
            let report = check_thm1_conditions(&cd);
            let Some(first) = report.violations.first() else {
                return Some(cd);
            };
            if spent >= budget || local >= per_attempt {
                break;
            }
            let w = &first.witness;
            let cost = repair(&mut rng, &mut cd, first.rule, w[0], w[1], w[2]);
            spent += cost;
            local += cost;
        }
    }
    None
}

/// One repair of a violated triple `u -> v -> w`: prefer adding the
/// shortcut in the triple's color, sometimes drop `(v, w)` instead.
fn repair(rng: &mut impl Rng, cd: &mut ColoredDigraph, rule: Rule, u: usize, v: usize, w: usize) -> u64 {
    let (same, other) = match rule {
        Rule::Thm1Blue => (ArcColor::Blue, ArcColor::Red),
        _ => (ArcColor::Red, ArcColor::Blue),
    };
    let drop = rng.gen_bool(0.25);
    if !drop && !cd.has_arc(u, w) {
        cd.add_arc(u, w, same).expect("free pair");
        return 1;
    }
    // The second alternative needs two arcs in the other color.
    let pairs = match rule {
        Rule::Thm1Blue => [(w, u), (w, v)],
        _ => [(v, u), (w, u)],
    };
    let usable = pairs
        .iter()
        .all(|&(x, y)| cd.color(x, y).is_none_or(|c| c == other));
    if !drop && usable {
        let mut cost = 0;
        for (x, y) in pairs {
            if !cd.has_arc(x, y) {
                cd.add_arc(x, y, other).expect("free pair");
                cost += 1;
            }
        }
        return cost.max(1);
    }
    cd.remove_arc(v, w);
    1
}
