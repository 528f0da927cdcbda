//! Anti-holes (complements of cycles) and their orientations: the kernel-free
//! orientation of the 7-vertex anti-hole, exhaustive searches, and the
//! inward-vertex argument used on 9 and more vertices.

pub mod search;
pub mod symmetry;

use serde::Serialize;

use crate::cliques::DEFAULT_CLIQUE_BUDGET;
use crate::digraph::{lift, Digraph};
use crate::error::{Error, Result};
use crate::oracle::{
    find_kernel_bruteforce, is_clique_acyclic, kernel_via_semikernel_recursion, BruteForceSemiKernels,
    OracleConfig, SemiKernelSource,
};
use crate::undirected::{EdgeDirection, Orientation, UndirectedGraph};
use crate::vertex_set::VertexSet;

pub use search::{
    collect_simple_clique_acyclic_orientations, enumerate_simple_clique_acyclic_orientations,
    search_clique_acyclic_no_kernel, search_m_clique_acyclic_no_kernel, verify_simple_kernel_solvable,
    EnumOptions, Partition, SearchMode, SearchOptions, SolvabilityVerdict, Verdict,
};
pub use symmetry::{canonical_form, SymmetryGroup};

/// Vertices `0..n` in cyclic order; `i` and `i + 1` are the non-adjacent
/// pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AntiholeLabeling {
    pub n: usize,
}

impl AntiholeLabeling {
    pub fn vertex(&self, i: isize) -> usize {
        i.rem_euclid(self.n as isize) as usize
    }

    pub fn symmetry(&self) -> SymmetryGroup {
        SymmetryGroup::dihedral(self.n)
    }
}

/// The complement of the `n`-cycle `0, 1, ..., n - 1`.
pub fn gen_antihole(n: usize) -> Result<(UndirectedGraph, AntiholeLabeling)> {
    if n < 4 {
        return Err(Error::Contract(format!("anti-holes need at least 4 vertices, got {n}")));
    }
    let edges = (0..n).flat_map(|i| {
        (i + 2..n)
            .filter(move |&j| !(i == 0 && j == n - 1))
            .map(move |j| (i, j))
    });
    let g = UndirectedGraph::from_edges(n, edges.collect::<Vec<_>>())?;
    Ok((g, AntiholeLabeling { n }))
}

/// The kernel-free simple orientation of the 7-vertex anti-hole with arcs
/// `i -> i + 2` and `i -> i + 4` modulo 7.
pub fn c7_counterexample() -> Digraph {
    let d = Digraph::from_arcs(7, (0..7).flat_map(|i| [(i, (i + 2) % 7), (i, (i + 4) % 7)]))
        .expect("arc list is simple");
    let o = c7_orientation_of(&d);
    assert!(o.is_simple());
    assert!(is_clique_acyclic(&d, DEFAULT_CLIQUE_BUDGET).expect("tiny graph").clique_acyclic);
    assert!(!find_kernel_bruteforce(&d, &OracleConfig::default()).expect("7 vertices").exists);
    d
}

fn c7_orientation_of(d: &Digraph) -> Orientation {
    let (g, _) = gen_antihole(7).expect("7 >= 4");
    Orientation::from_digraph(&g, d).expect("arcs lie on the anti-hole")
}

/// [`c7_counterexample`] as an orientation of the labeled anti-hole.
pub fn c7_counterexample_orientation() -> Orientation {
    c7_orientation_of(&c7_counterexample())
}

/// Whether both distance-two edges at `i` point into `i`.
pub fn is_inward(o: &Orientation, labeling: &AntiholeLabeling, i: usize) -> bool {
    let v = i as isize;
    let into = |j: usize| match o.direction(j, i) {
        Some(EdgeDirection::Forward) => j < i,
        Some(EdgeDirection::Backward) => j > i,
        _ => false,
    };
    into(labeling.vertex(v - 2)) && into(labeling.vertex(v + 2))
}

/// The least vertex whose two distance-two edges both point into it. Such a
/// vertex exists in every simple clique-acyclic orientation of an odd
/// anti-hole on at least 9 vertices.
pub fn find_istar(o: &Orientation) -> Result<usize> {
    let n = o.base().vertex_count();
    if n < 9 || n.is_multiple_of(2) {
        return Err(Error::Contract(format!(
            "the inward-vertex argument needs an odd anti-hole on at least 9 vertices, got {n}"
        )));
    }
    let (g, labeling) = gen_antihole(n)?;
    if o.base().edges() != g.edges() {
        return Err(Error::Contract("orientation is not over the labeled anti-hole".into()));
    }
    if !o.is_simple() {
        return Err(Error::Contract("orientation has reversible edges".into()));
    }
    let check = is_clique_acyclic(&o.to_digraph(), DEFAULT_CLIQUE_BUDGET)?;
    if let Some(c) = check.violating_clique {
        return Err(Error::Contract(format!("clique {c:?} has no dominated vertex")));
    }
    (0..n)
        .find(|&i| is_inward(o, &labeling, i))
        .ok_or_else(|| Error::Invariant("no vertex has both distance-two edges inward".into()))
}

/// How the kernel of an anti-hole orientation was assembled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop3Check {
    pub istar: usize,
    /// Kernel of `D - N-[istar]` found by the oracle.
    pub sub_kernel: Vec<usize>,
    /// True when the sub-kernel misses `N+(istar)` and extends directly.
    pub extends: bool,
    pub kernel: Vec<usize>,
}

/// Serves a fixed first semi-kernel, then falls back to brute force.
struct SeededSemiKernels {
    first: VertexSet,
    used: std::cell::Cell<bool>,
}

impl SemiKernelSource for SeededSemiKernels {
    fn semi_kernel(&self, d: &Digraph) -> Result<Option<VertexSet>> {
        if !self.used.replace(true) {
            return Ok(Some(self.first.clone()));
        }
        BruteForceSemiKernels::default().semi_kernel(d)
    }
}

/// Replays the inward-vertex argument on one orientation: with `v` the
/// inward vertex and `K` a kernel of `D - N-[v]`, either `K + v` is a
/// kernel or `K` (at most two vertices) is a semi-kernel of `D`. The
/// kernel is then completed through the semi-kernel recursion.
pub fn prop3_semi_kernel_check(o: &Orientation) -> Result<Prop3Check> {
    let istar = find_istar(o)?;
    let d = o.to_digraph();
    let n = d.vertex_count();
    let removed = d.closed_in_neighbors(istar)?;
    let (rest, old_of) = d.without(&removed);
    let report = find_kernel_bruteforce(&rest, &OracleConfig::default())?;
    let Some(w) = report.witness else {
        return Err(Error::Invariant(format!("D - N-[{istar}] has no kernel")));
    };
    let k = lift(&VertexSet::from_indices(rest.vertex_count(), w)?, &old_of, n);
    let extends = !k.intersects(d.out(istar));
    let first = if extends {
        let mut kp = k.clone();
        kp.insert(istar);
        kp
    } else {
        if k.len() > 2 || !d.is_semi_kernel(&k) {
            return Err(Error::Invariant(format!(
                "sub-kernel {k:?} meets N+({istar}) but is not a semi-kernel of size at most two"
            )));
        }
        k.clone()
    };
    let source = SeededSemiKernels {
        first,
        used: std::cell::Cell::new(false),
    };
    let kernel = kernel_via_semikernel_recursion(&d, &source)?;
    Ok(Prop3Check {
        istar,
        sub_kernel: k.to_vec(),
        extends,
        kernel: kernel.to_vec(),
    })
}

/// The orientation with `i -> j` (for `i < j`) exactly when `j - i` is even.
pub fn parity_orientation(n: usize) -> Result<Orientation> {
    let (g, _) = gen_antihole(n)?;
    let dirs = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            if (j - i) % 2 == 0 {
                EdgeDirection::Forward
            } else {
                EdgeDirection::Backward
            }
        })
        .collect();
    Orientation::new(g, dirs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antihole_sizes() {
        assert_eq!(gen_antihole(5).unwrap().0.edge_count(), 5);
        assert_eq!(gen_antihole(7).unwrap().0.edge_count(), 14);
        assert_eq!(gen_antihole(9).unwrap().0.edge_count(), 27);
        assert!(gen_antihole(3).is_err());
        let (g5, _) = gen_antihole(5).unwrap();
        assert!((0..5).all(|v| g5.neighbors(v).len() == 2));
    }

    #[test]
    fn counterexample_arcs() {
        let d = c7_counterexample();
        // 1-based arc (1, 3) is 0-based (0, 2).
        assert!(d.has_arc(0, 2) && !d.has_arc(2, 0));
        assert_eq!(d.arc_count(), 14);
    }

    #[test]
    fn istar_rejections() {
        let c7 = c7_counterexample_orientation();
        assert!(matches!(find_istar(&c7), Err(Error::Contract(_))));
        let parity = parity_orientation(9).unwrap();
        assert!(matches!(find_istar(&parity), Err(Error::Contract(_))));
    }
}
