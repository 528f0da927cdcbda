use serde::Serialize;

use crate::colored::ColoredDigraph;
use crate::scc::find_cycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    /// Two consecutive blue arcs `u -> v -> w` without `u b-> w` and
    /// without both `w r-> u`, `w r-> v`.
    #[serde(rename = "Thm1-i")]
    Thm1Blue,
    /// Two consecutive red arcs `u -> v -> w` without `u r-> w` and
    /// without both `v b-> u`, `w b-> u`.
    #[serde(rename = "Thm1-ii")]
    Thm1Red,
    /// A monochromatic directed cycle.
    #[serde(rename = "P2-mono")]
    Monochromatic,
    /// A red-any-blue path `v1 -> v2 -> v3 -> v4` whose vertices induce no
    /// further arc that avoids ending at `v2`.
    #[serde(rename = "P2-path")]
    RedBluePath,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub witness: Vec<usize>,
}

impl Violation {
    /// Re-checks that the witness really breaks its rule in `cd`.
    pub fn reverify(&self, cd: &ColoredDigraph) -> bool {
        let w = &self.witness;
        match self.rule {
            Rule::Thm1Blue => w.len() == 3 && blue_triple_violates(cd, w[0], w[1], w[2]),
            Rule::Thm1Red => w.len() == 3 && red_triple_violates(cd, w[0], w[1], w[2]),
            Rule::Monochromatic => {
                w.len() >= 2 && {
                    let arcs: Vec<(usize, usize)> =
                        (0..w.len()).map(|i| (w[i], w[(i + 1) % w.len()])).collect();
                    arcs.iter().all(|&(a, b)| cd.blue_arc(a, b))
                        || arcs.iter().all(|&(a, b)| cd.red_arc(a, b))
                }
            }
            Rule::RedBluePath => w.len() == 4 && path_violates(cd, w[0], w[1], w[2], w[3]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub satisfied: bool,
    pub violations: Vec<Violation>,
}

impl ConditionReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        ConditionReport {
            satisfied: violations.is_empty(),
            violations,
        }
    }
}

fn blue_triple_violates(cd: &ColoredDigraph, u: usize, v: usize, w: usize) -> bool {
    distinct3(u, v, w)
        && cd.blue_arc(u, v)
        && cd.blue_arc(v, w)
        && !(cd.blue_arc(u, w) || (cd.red_arc(w, u) && cd.red_arc(w, v)))
}

fn red_triple_violates(cd: &ColoredDigraph, u: usize, v: usize, w: usize) -> bool {
    distinct3(u, v, w)
        && cd.red_arc(u, v)
        && cd.red_arc(v, w)
        && !(cd.red_arc(u, w) || (cd.blue_arc(v, u) && cd.blue_arc(w, u)))
}

fn distinct3(u: usize, v: usize, w: usize) -> bool {
    u != v && v != w && u != w
}

/// Both implications, over ordered triples of distinct vertices.
pub fn check_thm1_conditions(cd: &ColoredDigraph) -> ConditionReport {
    let n = cd.vertex_count();
    let mut violations = Vec::new();
    for v in 0..n {
        for u in cd.blue().inn(v).iter() {
            for w in cd.blue().out(v).iter() {
                if blue_triple_violates(cd, u, v, w) {
                    violations.push(Violation {
                        rule: Rule::Thm1Blue,
                        witness: vec![u, v, w],
                    });
                }
            }
        }
        for u in cd.red().inn(v).iter() {
            for w in cd.red().out(v).iter() {
                if red_triple_violates(cd, u, v, w) {
                    violations.push(Violation {
                        rule: Rule::Thm1Red,
                        witness: vec![u, v, w],
                    });
                }
            }
        }
    }
    violations.sort_by_key(|a| (a.witness.clone(), a.rule as u8));
    ConditionReport::from_violations(violations)
}

fn path_violates(cd: &ColoredDigraph, v1: usize, v2: usize, v3: usize, v4: usize) -> bool {
    if !(distinct3(v1, v2, v3) && v4 != v2 && v4 != v3) {
        return false;
    }
    if !(cd.red_arc(v1, v2) && cd.has_arc(v2, v3) && cd.blue_arc(v3, v4)) {
        return false;
    }
    let verts = [v1, v2, v3, v4];
    let path = [(v1, v2), (v2, v3), (v3, v4)];
    let another = verts.iter().any(|&x| {
        verts
            .iter()
            .any(|&y| x != y && y != v2 && cd.has_arc(x, y) && !path.contains(&(x, y)))
    });
    !another
}

/// No monochromatic cycle, and every red-any-blue path of three arcs
/// (closed when `v4 = v1`) induces another arc not ending at `v2`.
pub fn check_prop2_conditions(cd: &ColoredDigraph) -> ConditionReport {
    let mut violations = Vec::new();
    for layer in [cd.blue(), cd.red()] {
        if let Some(cycle) = find_cycle(layer) {
            violations.push(Violation {
                rule: Rule::Monochromatic,
                witness: cycle,
            });
        }
    }
    let n = cd.vertex_count();
    for v1 in 0..n {
        for v2 in cd.red().out(v1).iter() {
            for v3 in cd.underlying().out(v2).iter() {
                if v3 == v1 {
                    continue;
                }
                for v4 in cd.blue().out(v3).iter() {
                    if path_violates(cd, v1, v2, v3, v4) {
                        violations.push(Violation {
                            rule: Rule::RedBluePath,
                            witness: vec![v1, v2, v3, v4],
                        });
                    }
                }
            }
        }
    }
    ConditionReport::from_violations(violations)
}
