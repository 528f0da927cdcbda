//! Simple digraphs, neighborhoods, and the kernel-family predicates.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A simple directed graph on `0..vertex_count`: no loops, no parallel arcs,
/// opposite arcs allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            out: vec![VertexSet::new(n); n],
            inn: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a digraph, rejecting loops, repeated arcs and out-of-range ends.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut d = Self::empty(n);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        if !self.out[u].insert(v) {
            return Err(Error::InvalidGraph(format!("parallel arc ({u}, {v})")));
        }
        self.inn[v].insert(u);
        Ok(())
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        self.inn[v].remove(u);
        self.out[u].remove(v)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.n,
            })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(VertexSet::len).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].contains(v)
    }

    /// Arcs in lexicographic (tail, head) order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out[u].iter().map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    /// Builds a set over this digraph's vertices.
    pub fn set(&self, members: impl IntoIterator<Item = usize>) -> Result<VertexSet> {
        VertexSet::from_indices(self.n, members)
    }

    /// Borrowed out-neighborhood; panics on a bad vertex.
    pub fn out(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    /// Borrowed in-neighborhood; panics on a bad vertex.
    pub fn inn(&self, v: usize) -> &VertexSet {
        &self.inn[v]
    }

    pub fn out_neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.out[v].clone())
    }

    pub fn in_neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.inn[v].clone())
    }

    /// `N+[v]`
    pub fn closed_out_neighbors(&self, v: usize) -> Result<VertexSet> {
        let mut s = self.out_neighbors(v)?;
        s.insert(v);
        Ok(s)
    }

    /// `N-[v]`
    pub fn closed_in_neighbors(&self, v: usize) -> Result<VertexSet> {
        let mut s = self.in_neighbors(v)?;
        s.insert(v);
        Ok(s)
    }

    /// Vertices adjacent to `v` in either direction.
    pub fn adjacent(&self, v: usize) -> VertexSet {
        self.out[v].union(&self.inn[v])
    }

    pub fn adjacent_pair(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// `N+(U)`: out-neighbors of members of `U`, excluding `U` itself.
    pub fn out_neighbors_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut acc = self.empty_set();
        for v in set {
            acc.union_with(&self.out[v]);
        }
        acc.difference_with(set);
        acc
    }

    /// `N-(U)`: in-neighbors of members of `U`, excluding `U` itself.
    pub fn in_neighbors_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut acc = self.empty_set();
        for v in set {
            acc.union_with(&self.inn[v]);
        }
        acc.difference_with(set);
        acc
    }

    /// `N-[U] = U ∪ N-(U)`
    pub fn closed_in_neighbors_of_set(&self, set: &VertexSet) -> VertexSet {
        self.in_neighbors_of_set(set).union(set)
    }

    fn assert_universe(&self, set: &VertexSet) {
        assert_eq!(
            set.universe(),
            self.n,
            "vertex set over {} vertices used with a digraph on {}",
            set.universe(),
            self.n
        );
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        self.assert_universe(set);
        set.iter().all(|v| self.out[v].is_disjoint(set))
    }

    /// Every vertex outside the set has an out-neighbor inside it.
    pub fn is_absorbing(&self, set: &VertexSet) -> bool {
        self.assert_universe(set);
        (0..self.n).all(|v| set.contains(v) || self.out[v].intersects(set))
    }

    pub fn is_kernel(&self, set: &VertexSet) -> bool {
        self.is_independent(set) && self.is_absorbing(set)
    }

    /// Independent with `N+(S) ⊆ N-(S)`.
    pub fn is_semi_kernel(&self, set: &VertexSet) -> bool {
        self.is_independent(set)
            && self
                .out_neighbors_of_set(set)
                .is_subset(&self.in_neighbors_of_set(set))
    }

    /// The subdigraph induced by `keep`, relabelled densely in increasing
    /// order. Returns it with the map from new to old indices.
    pub fn induced(&self, keep: &VertexSet) -> (Digraph, Vec<usize>) {
        self.assert_universe(keep);
        let old: Vec<usize> = keep.to_vec();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut d = Digraph::empty(old.len());
        for (i, &v) in old.iter().enumerate() {
            for w in self.out[v].iter().filter(|&w| keep.contains(w)) {
                d.out[i].insert(new_of[w]);
                d.inn[new_of[w]].insert(i);
            }
        }
        (d, old)
    }

    /// `D - U`
    pub fn without(&self, removed: &VertexSet) -> (Digraph, Vec<usize>) {
        self.induced(&removed.complement())
    }

    /// Every arc `(u, v)` whose opposite `(v, u)` is also present.
    pub fn is_reversible(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Out-neighborhoods as words. Requires at most 64 vertices.
    pub(crate) fn out_masks(&self) -> Vec<u64> {
        self.out.iter().map(VertexSet::to_mask).collect()
    }

    pub(crate) fn in_masks(&self) -> Vec<u64> {
        self.inn.iter().map(VertexSet::to_mask).collect()
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph({}; ", self.n)?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}

/// Maps a set over a subdigraph back through its relabelling.
pub(crate) fn lift(set: &VertexSet, old_of: &[usize], universe: usize) -> VertexSet {
    let mut out = VertexSet::new(universe);
    for v in set {
        out.insert(old_of[v]);
    }
    out
}

/// Small named digraphs used across tests and examples.
pub mod families {
    use super::Digraph;

    pub fn directed_cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle arcs are valid")
    }

    pub fn directed_path(n: usize) -> Digraph {
        Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i))).expect("path arcs are valid")
    }

    /// Arc `i -> j` for every `i < j`; the unique kernel is `{n - 1}`.
    pub fn transitive_tournament(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            .expect("tournament arcs are valid")
    }

    pub fn complete_symmetric(n: usize) -> Digraph {
        Digraph::from_arcs(
            n,
            (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))),
        )
        .expect("complete arcs are valid")
    }
}
