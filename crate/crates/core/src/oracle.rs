//! Exact ground truth: brute-force kernels and semi-kernels, the
//! semi-kernel recursion, and clique-acyclicity checks.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::cliques::{for_each_clique, DEFAULT_CLIQUE_BUDGET};
use crate::digraph::{lift, Digraph};
use crate::error::{Error, Result};
use crate::parallel;
use crate::undirected::UndirectedGraph;
use crate::vertex_set::{bits, VertexSet};

pub const DEFAULT_VERTEX_CAP: usize = 25;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Largest vertex count the brute-force searches accept (at most 64).
    pub vertex_cap: usize,
    pub clique_budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            vertex_cap: DEFAULT_VERTEX_CAP,
            clique_budget: DEFAULT_CLIQUE_BUDGET,
        }
    }
}

impl OracleConfig {
    fn admit(&self, d: &Digraph) -> Result<()> {
        let cap = self.vertex_cap.min(64);
        if d.vertex_count() > cap {
            return Err(Error::SizeCap {
                what: "digraph",
                size: d.vertex_count(),
                cap,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
}

/// Word-packed digraph for the exponential searches.
#[derive(Clone, Debug)]
pub(crate) struct MaskGraph {
    n: usize,
    out: Vec<u64>,
    adj: Vec<u64>,
}

impl MaskGraph {
    pub(crate) fn new(out: Vec<u64>, inn: &[u64]) -> Self {
        let adj = out.iter().zip(inn).map(|(o, i)| o | i).collect();
        MaskGraph {
            n: out.len(),
            out,
            adj,
        }
    }

    pub(crate) fn from_digraph(d: &Digraph) -> Self {
        Self::new(d.out_masks(), &d.in_masks())
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub(crate) fn first_kernel(&self) -> Option<u64> {
        let mut found = None;
        let _ = self.search(0, 0, 0, &[], &mut |k| {
            found = Some(k);
            ControlFlow::Break(())
        });
        found
    }

    pub(crate) fn has_kernel(&self) -> bool {
        self.first_kernel().is_some()
    }

    /// Depth-first over vertices in index order, trying "in" before "out",
    /// so kernels come out in lexicographic order. `prefix` fixes the
    /// decisions for the first `prefix.len()` vertices.
    fn search(
        &self,
        v: usize,
        chosen: u64,
        forbidden: u64,
        prefix: &[bool],
        emit: &mut impl FnMut(u64) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let decided = if v == 64 { u64::MAX } else { (1u64 << v) - 1 };
        let avail = self.full() & !decided & !forbidden;
        for w in bits(decided & !chosen) {
            let o = self.out[w];
            if o & chosen == 0 && o & avail == 0 {
                return ControlFlow::Continue(());
            }
        }
        if v == self.n {
            return emit(chosen);
        }
        let bit = 1u64 << v;
        let want = prefix.get(v).copied();
        if forbidden & bit == 0 && want != Some(false) {
            self.search(v + 1, chosen | bit, forbidden | self.adj[v], prefix, emit)?;
        }
        if want != Some(true) {
            self.search(v + 1, chosen, forbidden, prefix, emit)?;
        }
        ControlFlow::Continue(())
    }
}

/// Brute-force kernel search over maximal independent sets. The witness is
/// the lexicographically least kernel.
pub fn find_kernel_bruteforce(d: &Digraph, cfg: &OracleConfig) -> Result<KernelReport> {
    cfg.admit(d)?;
    let witness = MaskGraph::from_digraph(d).first_kernel();
    Ok(KernelReport {
        exists: witness.is_some(),
        witness: witness.map(|k| bits(k).collect()),
        count: None,
    })
}

/// Every kernel, in lexicographic order.
pub fn enumerate_kernels(d: &Digraph, cfg: &OracleConfig) -> Result<Vec<VertexSet>> {
    cfg.admit(d)?;
    let g = MaskGraph::from_digraph(d);
    let mut out = Vec::new();
    let _ = g.search(0, 0, 0, &[], &mut |k| {
        out.push(VertexSet::from_mask(d.vertex_count(), k));
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Like [`enumerate_kernels`], but splits the backtracking tree on the
/// first `split_depth` vertex decisions and explores the subtrees on up to
/// `jobs` workers. The output is identical for every split and job count.
pub fn enumerate_kernels_split(
    d: &Digraph,
    cfg: &OracleConfig,
    split_depth: usize,
    jobs: usize,
) -> Result<Vec<VertexSet>> {
    cfg.admit(d)?;
    let n = d.vertex_count();
    let depth = split_depth.min(n).min(20);
    let g = MaskGraph::from_digraph(d);
    // Prefix i encodes decisions MSB-first with 0 = "in", matching the
    // in-before-out order of the sequential search.
    let prefixes: Vec<Vec<bool>> = (0..1u64 << depth)
        .map(|i| (0..depth).map(|b| i >> (depth - 1 - b) & 1 == 0).collect())
        .collect();
    let chunks = parallel::map(&prefixes, jobs, |prefix| {
        let mut out = Vec::new();
        let _ = g.search(0, 0, 0, prefix, &mut |k| {
            out.push(VertexSet::from_mask(n, k));
            ControlFlow::Continue(())
        });
        out
    });
    Ok(chunks.into_iter().flatten().collect())
}

pub fn count_kernels(d: &Digraph, cfg: &OracleConfig) -> Result<KernelReport> {
    let all = enumerate_kernels(d, cfg)?;
    Ok(KernelReport {
        exists: !all.is_empty(),
        witness: all.first().map(VertexSet::to_vec),
        count: Some(all.len() as u64),
    })
}

/// The lexicographically least non-empty semi-kernel, if any.
pub fn find_nonempty_semi_kernel(d: &Digraph, cfg: &OracleConfig) -> Result<Option<VertexSet>> {
    cfg.admit(d)?;
    let n = d.vertex_count();
    let out = d.out_masks();
    let inn = d.in_masks();
    let adj: Vec<u64> = out.iter().zip(&inn).map(|(o, i)| o | i).collect();

    // Pre-order over independent sets in sorted-list lexicographic order.
    fn walk(
        start: usize,
        set: u64,
        blocked: u64,
        n: usize,
        out: &[u64],
        inn: &[u64],
        adj: &[u64],
    ) -> Option<u64> {
        for v in start..n {
            if blocked & (1 << v) != 0 {
                continue;
            }
            let s = set | 1 << v;
            let (mut nout, mut nin) = (0, 0);
            for w in bits(s) {
                nout |= out[w];
                nin |= inn[w];
            }
            if (nout & !s) & !(nin & !s) == 0 {
                return Some(s);
            }
            if let Some(found) = walk(v + 1, s, blocked | adj[v] | 1 << v, n, out, inn, adj) {
                return Some(found);
            }
        }
        None
    }

    Ok(walk(0, 0, 0, n, &out, &inn, &adj).map(|m| VertexSet::from_mask(n, m)))
}

/// Supplies a non-empty semi-kernel for a digraph, or reports that it has none.
pub trait SemiKernelSource {
    fn semi_kernel(&self, d: &Digraph) -> Result<Option<VertexSet>>;
}

/// Semi-kernels from exhaustive search.
#[derive(Clone, Copy, Debug, Default)]
pub struct BruteForceSemiKernels(pub OracleConfig);

impl SemiKernelSource for BruteForceSemiKernels {
    fn semi_kernel(&self, d: &Digraph) -> Result<Option<VertexSet>> {
        find_nonempty_semi_kernel(d, &self.0)
    }
}

/// Builds a kernel by repeatedly taking a non-empty semi-kernel `S` of what
/// is left and deleting `N-[S]`. Fails with the offending induced
/// subdigraph (as original vertex indices) when the source has nothing.
pub fn kernel_via_semikernel_recursion(
    d: &Digraph,
    source: &dyn SemiKernelSource,
) -> Result<VertexSet> {
    let n = d.vertex_count();
    let mut kernel = VertexSet::new(n);
    let mut remaining = d.vertices();
    while !remaining.is_empty() {
        let (sub, old_of) = d.induced(&remaining);
        let failure = |reason: String| Error::StrategyFailed {
            subdigraph: old_of.clone(),
            reason,
        };
        let s = match source.semi_kernel(&sub) {
            Ok(Some(s)) if !s.is_empty() => s,
            Ok(_) => return Err(failure("no non-empty semi-kernel".into())),
            Err(e @ Error::Invariant(_)) => return Err(e),
            Err(e) => return Err(failure(e.to_string())),
        };
        if !sub.is_semi_kernel(&s) {
            return Err(failure(format!("{s:?} is not a semi-kernel")));
        }
        let removed = sub.closed_in_neighbors_of_set(&s);
        kernel.union_with(&lift(&s, &old_of, n));
        remaining.difference_with(&lift(&removed, &old_of, n));
    }
    if !d.is_kernel(&kernel) {
        return Err(Error::Invariant(format!(
            "semi-kernel recursion produced {kernel:?}, which is not a kernel"
        )));
    }
    Ok(kernel)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueAcyclicity {
    pub clique_acyclic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_clique: Option<Vec<usize>>,
}

/// Whether every clique of the underlying graph has a vertex receiving an
/// arc from all other members. All cliques are examined, since a clique can
/// fail while each of its proper sub-cliques passes.
pub fn is_clique_acyclic(d: &Digraph, budget: u64) -> Result<CliqueAcyclicity> {
    let g = UndirectedGraph::underlying(d);
    let mut violating = None;
    for_each_clique(&g, 3, budget, |c| {
        if has_dominated_vertex(d, c) {
            true
        } else {
            violating = Some(c.to_vec());
            false
        }
    })?;
    Ok(CliqueAcyclicity {
        clique_acyclic: violating.is_none(),
        violating_clique: violating,
    })
}

pub(crate) fn has_dominated_vertex(d: &Digraph, clique: &[usize]) -> bool {
    clique
        .iter()
        .any(|&v| clique.iter().all(|&w| w == v || d.has_arc(w, v)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MCliqueAcyclicity {
    pub m_clique_acyclic: bool,
    /// A directed triangle `a -> b -> c -> a` with fewer than two reversible arcs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_triangle: Option<[usize; 3]>,
}

/// Every directed 3-cycle has at least two reversible arcs.
pub fn is_m_clique_acyclic(d: &Digraph) -> MCliqueAcyclicity {
    let n = d.vertex_count();
    for a in 0..n {
        for b in d.out(a).iter() {
            for c in d.out(b).iter() {
                if c == a || !d.has_arc(c, a) {
                    continue;
                }
                let reversible = [(a, b), (b, c), (c, a)]
                    .iter()
                    .filter(|&&(x, y)| d.has_arc(y, x))
                    .count();
                if reversible < 2 {
                    return MCliqueAcyclicity {
                        m_clique_acyclic: false,
                        violating_triangle: Some([a, b, c]),
                    };
                }
            }
        }
    }
    MCliqueAcyclicity {
        m_clique_acyclic: true,
        violating_triangle: None,
    }
}
