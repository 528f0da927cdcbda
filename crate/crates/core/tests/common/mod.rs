//! Helpers shared by the integration tests: seeded random graphs and naive
//! reference implementations that the library code is checked against.
#![allow(dead_code)]

pub mod posets;

use kernelkit::{ArcColor, ColoredDigraph, Digraph, VertexSet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each ordered pair becomes an arc with probability `p`.
pub fn random_digraph(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                d.add_arc(u, v).unwrap();
            }
        }
    }
    d
}

/// Random digraph without directed odd cycles: either arcs across a random
/// bipartition (both directions allowed) or arcs forward in a random order.
pub fn random_odd_cycle_free(rng: &mut impl Rng, n: usize) -> Digraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let bipartite = rng.gen_bool(0.5);
    let p = rng.gen_range(0.1..0.6);
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            if u == v || !rng.gen_bool(p) {
                continue;
            }
            // Mixing both families could close odd cycles, so each graph
            // uses one.
            let ok = if bipartite { side[u] != side[v] } else { rank[u] < rank[v] };
            if ok {
                d.add_arc(u, v).unwrap();
            }
        }
    }
    d
}

/// Both color classes acyclic: each is a random DAG over its own order.
pub fn random_colored_dags(rng: &mut impl Rng, n: usize, p: f64) -> ColoredDigraph {
    let mut blue_order: Vec<usize> = (0..n).collect();
    let mut red_order = blue_order.clone();
    blue_order.shuffle(rng);
    red_order.shuffle(rng);
    let mut cd = ColoredDigraph::empty(n);
    for (order, color) in [(&blue_order, ArcColor::Blue), (&red_order, ArcColor::Red)] {
        for i in 0..n {
            for j in i + 1..n {
                let (u, v) = (order[i], order[j]);
                if !cd.has_arc(u, v) && rng.gen_bool(p) {
                    cd.add_arc(u, v, color).unwrap();
                }
            }
        }
    }
    cd
}

pub fn random_colored(rng: &mut impl Rng, n: usize, p: f64) -> ColoredDigraph {
    let d = random_digraph(rng, n, p);
    ColoredDigraph::from_digraph(&d, |_, _| {
        if rng.gen_bool(0.5) {
            ArcColor::Blue
        } else {
            ArcColor::Red
        }
    })
}

/// Proptest strategy for digraphs on `min_n..=max_n` vertices.
pub fn arb_digraph(min_n: usize, max_n: usize) -> impl Strategy<Value = Digraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n * n)
                .filter(|&i| bits[i] && i / n != i % n)
                .map(|i| (i / n, i % n));
            Digraph::from_arcs(n, arcs.collect::<Vec<_>>()).unwrap()
        })
    })
}

/// Every kernel, by scanning all `2^n` subsets.
pub fn naive_kernels(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.vertex_count();
    assert!(n <= 16);
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter_map(|mask| {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let independent = set
                .iter()
                .all(|&u| set.iter().all(|&v| !d.has_arc(u, v)));
            let absorbing = (0..n)
                .filter(|v| !set.contains(v))
                .all(|v| set.iter().any(|&w| d.has_arc(v, w)));
            (independent && absorbing).then_some(set)
        })
        .collect();
    out.sort();
    out
}

pub fn naive_is_kernel(d: &Digraph, set: &VertexSet) -> bool {
    naive_kernels(d).contains(&set.to_vec())
}

/// Directed cycles by plain DFS from each start vertex, keeping only those
/// whose start is their least vertex.
pub fn naive_cycles(d: &Digraph, max_len: usize) -> Vec<Vec<usize>> {
    fn walk(d: &Digraph, path: &mut Vec<usize>, max_len: usize, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for w in 0..d.vertex_count() {
            if !d.has_arc(last, w) {
                continue;
            }
            if w == path[0] && path.len() >= 2 {
                out.push(path.clone());
            } else if w > path[0] && !path.contains(&w) && path.len() < max_len {
                path.push(w);
                walk(d, path, max_len, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..d.vertex_count() {
        walk(d, &mut vec![s], max_len, &mut out);
    }
    out.sort();
    out
}

pub fn has_odd_cycle(d: &Digraph) -> bool {
    naive_cycles(d, d.vertex_count()).iter().any(|c| c.len() % 2 == 1)
}

/// Seeded instances meeting the red-sink solver conditions (no
/// monochromatic cycle, every red-any-blue path closed by an extra arc),
/// found by rejection sampling over random per-color DAGs. Returns the
/// positives and the number of candidates drawn.
pub fn prop2_instances(seed: u64, wanted: usize, max_n: usize) -> (Vec<ColoredDigraph>, usize) {
    let mut r = rng(seed);
    let mut out = Vec::new();
    let mut drawn = 0;
    while out.len() < wanted {
        drawn += 1;
        let n = r.gen_range(1..=max_n);
        let p = r.gen_range(0.05..0.5);
        let cd = random_colored_dags(&mut r, n, p);
        if kernelkit::redblue::check_prop2_conditions(&cd).satisfied {
            out.push(cd);
        }
    }
    (out, drawn)
}

/// A directed odd cycle on `0..len` plus random extra arcs, so that chord
/// rules actually come into play.
pub fn cycle_with_extras(seed: u64, n: usize, p: f64) -> Digraph {
    let mut r = rng(seed);
    let len = [3, 5, 7, 9].into_iter().rfind(|&l| l <= n).unwrap_or(3);
    let mut d = random_digraph(&mut r, n, p);
    for i in 0..len {
        let (u, v) = (i, (i + 1) % len);
        if !d.has_arc(u, v) {
            d.add_arc(u, v).unwrap();
        }
    }
    d
}

/// A directed 5-, 7- or 9-cycle with a few random extra arcs, each arc then
/// made reversible with a random probability. Reaches chord configurations
/// that plain random digraphs almost never produce.
pub fn planted_odd_cycle(r: &mut impl Rng) -> Digraph {
    let len = [5usize, 7, 9][r.gen_range(0..3)];
    let n = r.gen_range(len..=10);
    let mut d = Digraph::empty(n);
    for i in 0..len {
        d.add_arc(i, (i + 1) % len).unwrap();
    }
    for _ in 0..r.gen_range(1..5) {
        let (a, b) = (r.gen_range(0..n), r.gen_range(0..n));
        if a != b && !d.has_arc(a, b) {
            d.add_arc(a, b).unwrap();
        }
    }
    let q = r.gen_range(0.0..0.9);
    for (u, v) in d.arcs().collect::<Vec<_>>() {
        if r.gen_bool(q) && !d.has_arc(v, u) {
            d.add_arc(v, u).unwrap();
        }
    }
    d
}
