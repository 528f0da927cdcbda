//! Enumeration of all cliques (not just maximal ones) of an undirected graph.

use crate::error::{Error, Result};
use crate::undirected::UndirectedGraph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_CLIQUE_BUDGET: u64 = 10_000_000;

/// Visits every clique with at least `min_size` vertices, each once, as a
/// sorted vertex list, in lexicographic order. The visitor returns `false`
/// to stop early. Fails once more than `budget` cliques have been generated.
pub fn for_each_clique(
    g: &UndirectedGraph,
    min_size: usize,
    budget: u64,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Result<()> {
    let n = g.vertex_count();
    let mut count = 0u64;
    let mut clique = Vec::new();
    for v in 0..n {
        let mut cand = g.neighbors(v).clone();
        for w in 0..=v {
            cand.remove(w);
        }
        clique.push(v);
        let go = grow(g, min_size, budget, &mut count, &mut clique, &cand, &mut visit)?;
        clique.pop();
        if !go {
            break;
        }
    }
    Ok(())
}

fn grow(
    g: &UndirectedGraph,
    min_size: usize,
    budget: u64,
    count: &mut u64,
    clique: &mut Vec<usize>,
    cand: &VertexSet,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> Result<bool> {
    *count += 1;
    if *count > budget {
        return Err(Error::BudgetExceeded {
            what: "clique enumeration",
            budget,
        });
    }
    if clique.len() >= min_size && !visit(clique) {
        return Ok(false);
    }
    for w in cand {
        let mut next = cand.intersection(g.neighbors(w));
        for x in cand.iter().take_while(|&x| x <= w) {
            next.remove(x);
        }
        clique.push(w);
        let go = grow(g, min_size, budget, count, clique, &next, visit)?;
        clique.pop();
        if !go {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn all_cliques(g: &UndirectedGraph, min_size: usize, budget: u64) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_clique(g, min_size, budget, |c| {
        out.push(c.to_vec());
        true
    })?;
    Ok(out)
}
