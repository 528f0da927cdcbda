//! Finite posets and the extension of their order to antichains:
//! `a ⪯ b` when every element of `a` lies below some element of `b`.

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::scc::{reachability, topological_order};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `up[x]`: every `y` with `x ⪯ y`, `x` included.
    up: Vec<VertexSet>,
    down: Vec<VertexSet>,
}

impl Poset {
    /// Reflexive-transitive closure of `pairs`. Fails if the closure is not
    /// antisymmetric.
    pub fn from_relation(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut d = Digraph::empty(n);
        for (x, y) in pairs {
            if x == y {
                d.check_vertex(x)?;
                continue;
            }
            if !d.has_arc(x, y) {
                d.add_arc(x, y)?;
            }
        }
        Self::from_dag(&d)
    }

    /// Reachability order of an acyclic digraph.
    pub fn from_dag(d: &Digraph) -> Result<Self> {
        if topological_order(d).is_none() {
            return Err(Error::Contract(
                "relation has a cycle, so its closure is not a partial order".into(),
            ));
        }
        let n = d.vertex_count();
        let mut up = reachability(d);
        for (x, s) in up.iter_mut().enumerate() {
            s.insert(x);
        }
        let mut down = vec![VertexSet::new(n); n];
        for x in 0..n {
            for y in &up[x] {
                down[y].insert(x);
            }
        }
        Ok(Poset { n, up, down })
    }

    pub fn antichain_poset(n: usize) -> Self {
        Self::from_relation(n, []).expect("the empty relation is a partial order")
    }

    pub fn chain(n: usize) -> Self {
        Self::from_relation(n, (1..n).map(|i| (i - 1, i))).expect("a path is acyclic")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn is_antichain(&self, set: &VertexSet) -> bool {
        set.universe() == self.n
            && set
                .iter()
                .all(|x| self.up[x].intersection(set).len() == 1)
    }

    /// Least-index-first linear extension.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut d = Digraph::empty(self.n);
        for x in 0..self.n {
            for y in self.up[x].iter().filter(|&y| y != x) {
                d.add_arc(x, y).expect("order pairs are valid");
            }
        }
        topological_order(&d).expect("a partial order is acyclic")
    }

    /// Every antichain, the empty one included. Exponential; meant for
    /// small posets.
    pub fn antichains(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut current = VertexSet::new(self.n);
        self.collect_antichains(0, &mut current, &mut out);
        out
    }

    fn collect_antichains(&self, from: usize, current: &mut VertexSet, out: &mut Vec<VertexSet>) {
        out.push(current.clone());
        for x in from..self.n {
            if current.iter().all(|y| !self.comparable(x, y)) {
                current.insert(x);
                self.collect_antichains(x + 1, current, out);
                current.remove(x);
            }
        }
    }

    /// Down-closure of a set.
    pub fn down_set(&self, set: &VertexSet) -> VertexSet {
        let mut acc = VertexSet::new(self.n);
        for y in set {
            acc.union_with(&self.down[y]);
        }
        acc
    }

    /// The extended relation `a ⪯ b`, for arbitrary sets.
    pub fn set_leq(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.is_subset(&self.down_set(b))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AntichainOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

pub fn compare_antichains(p: &Poset, a: &VertexSet, b: &VertexSet) -> Result<AntichainOrder> {
    for (name, s) in [("first", a), ("second", b)] {
        if !p.is_antichain(s) {
            return Err(Error::Contract(format!("{name} argument {s:?} is not an antichain")));
        }
    }
    Ok(match (p.set_leq(a, b), p.set_leq(b, a)) {
        (true, true) => AntichainOrder::Equal,
        (true, false) => AntichainOrder::Less,
        (false, true) => AntichainOrder::Greater,
        (false, false) => AntichainOrder::Incomparable,
    })
}

/// A strictly increasing chain of `|P| + 1` antichains starting at the empty
/// one: walk a linear extension and, at each element `x`, add `x` and drop
/// everything below it.
pub fn max_chain_of_antichains(p: &Poset) -> Vec<VertexSet> {
    let mut chain = vec![VertexSet::new(p.size())];
    let mut current = VertexSet::new(p.size());
    for x in p.linear_extension() {
        current.difference_with(&p.down[x]);
        current.insert(x);
        chain.push(current.clone());
    }
    chain
}

/// Number of antichains in a longest strict chain, by dynamic programming
/// over all antichains. Exponential; meant for small posets.
pub fn longest_antichain_chain(p: &Poset) -> usize {
    let all = p.antichains();
    let k = all.len();
    // Order the antichains so every strict predecessor comes first: the
    // extended order is contained in inclusion of down-sets.
    let mut order: Vec<usize> = (0..k).collect();
    let downs: Vec<VertexSet> = all.iter().map(|a| p.down_set(a)).collect();
    order.sort_by_key(|&i| downs[i].len());
    let mut best = vec![1usize; k];
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[..pos] {
            if all[j] != all[i] && downs[j].is_subset(&downs[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}
