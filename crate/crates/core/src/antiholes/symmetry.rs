//! Vertex permutation groups acting on orientations.

use crate::error::{Error, Result};
use crate::undirected::{EdgeDirection, Orientation, UndirectedGraph};

/// A permutation group given by its full element list, identity first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryGroup {
    n: usize,
    perms: Vec<Vec<usize>>,
}

impl SymmetryGroup {
    pub fn trivial(n: usize) -> Self {
        SymmetryGroup {
            n,
            perms: vec![(0..n).collect()],
        }
    }

    /// Rotations `i -> i + k` and reflections `i -> k - i` modulo `n`.
    pub fn dihedral(n: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = (0..n)
            .map(|k| (0..n).map(|i| (i + k) % n).collect())
            .collect();
        for k in 0..n {
            perms.push((0..n).map(|i| (k + n - i) % n).collect());
        }
        dedup_keep_first(&mut perms);
        SymmetryGroup { n, perms }
    }

    /// Every automorphism of `g`, by backtracking on vertex images.
    pub fn automorphisms(g: &UndirectedGraph) -> Self {
        let n = g.vertex_count();
        let mut perms = Vec::new();
        let mut image = Vec::with_capacity(n);
        let mut used = vec![false; n];
        extend_automorphism(g, &mut image, &mut used, &mut perms);
        let identity: Vec<usize> = (0..n).collect();
        perms.retain(|p| *p != identity);
        perms.insert(0, identity);
        SymmetryGroup { n, perms }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    /// Fails unless every element maps edges of `g` to edges.
    pub fn validate_on(&self, g: &UndirectedGraph) -> Result<()> {
        if self.n != g.vertex_count() {
            return Err(Error::Contract(format!(
                "group acts on {} vertices, graph has {}",
                self.n,
                g.vertex_count()
            )));
        }
        for p in &self.perms {
            if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| !g.has_edge(p[u], p[v])) {
                return Err(Error::Contract(format!(
                    "permutation {p:?} sends edge {{{u}, {v}}} off the graph"
                )));
            }
        }
        Ok(())
    }

    /// How each non-identity element moves edge slots of `g`.
    pub(crate) fn edge_actions(&self, g: &UndirectedGraph) -> Vec<EdgeAction> {
        self.perms[1..]
            .iter()
            .map(|p| EdgeAction::new(g, p))
            .collect()
    }
}

fn dedup_keep_first(perms: &mut Vec<Vec<usize>>) {
    let mut seen = std::collections::HashSet::new();
    perms.retain(|p| seen.insert(p.clone()));
}

fn extend_automorphism(
    g: &UndirectedGraph,
    image: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let v = image.len();
    if v == g.vertex_count() {
        out.push(image.clone());
        return;
    }
    for w in 0..g.vertex_count() {
        if used[w] || g.neighbors(v).len() != g.neighbors(w).len() {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w));
        if consistent {
            used[w] = true;
            image.push(w);
            extend_automorphism(g, image, used, out);
            image.pop();
            used[w] = false;
        }
    }
}

/// Action of one permutation on the edge slots of an orientation:
/// `(g O)[target] = flip(O[source[target]])`.
#[derive(Clone, Debug)]
pub(crate) struct EdgeAction {
    pub(crate) source: Vec<usize>,
    /// Whether the edge landing in slot `target` has its endpoints swapped.
    pub(crate) flip: Vec<bool>,
}

impl EdgeAction {
    fn new(g: &UndirectedGraph, perm: &[usize]) -> Self {
        let m = g.edge_count();
        let mut source = vec![0; m];
        let mut flip = vec![false; m];
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let (x, y) = (perm[a], perm[b]);
            let target = g.edge_index(x, y).expect("automorphism maps edges to edges");
            source[target] = e;
            flip[target] = x > y;
        }
        EdgeAction { source, flip }
    }

    pub(crate) fn value(&self, assignment: &[u8], target: usize) -> u8 {
        let v = assignment[self.source[target]];
        if self.flip[target] && v < 2 {
            1 - v
        } else {
            v
        }
    }
}

fn codes(o: &Orientation) -> Vec<u8> {
    o.assignment().iter().map(|d| d.code()).collect()
}

/// The lexicographically least image of `o` under `group`, comparing edge
/// directions slot by slot with forward < backward < both.
pub fn canonical_form(o: &Orientation, group: &SymmetryGroup) -> Result<Orientation> {
    group.validate_on(o.base())?;
    let base = codes(o);
    let best = group
        .edge_actions(o.base())
        .iter()
        .map(|a| (0..base.len()).map(|t| a.value(&base, t)).collect::<Vec<u8>>())
        .fold(base.clone(), |best, cand| best.min(cand));
    Orientation::new(
        o.base().clone(),
        best.into_iter().map(EdgeDirection::from_code).collect(),
    )
}
