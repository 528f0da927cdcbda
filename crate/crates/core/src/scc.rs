//! Strongly connected components and the condensation.

use crate::digraph::Digraph;

/// SCC partition of a digraph. Components are numbered by increasing least
/// vertex, and that least vertex serves as the component's representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condensation {
    component_of: Vec<usize>,
    components: Vec<Vec<usize>>,
    dag: Digraph,
}

impl Condensation {
    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.components[c][0]
    }

    /// Arc `C -> C'` whenever some arc of the digraph goes from `C` to `C'`.
    pub fn dag(&self) -> &Digraph {
        &self.dag
    }
}

/// Tarjan's algorithm, iterative so deep digraphs do not blow the stack.
pub fn strongly_connected_components(d: &Digraph) -> Condensation {
    let n = d.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut raw_comp = vec![UNSEEN; n];
    let mut raw_count = 0;
    let mut next_index = 0;
    let succ: Vec<Vec<usize>> = (0..n).map(|v| d.out(v).to_vec()).collect();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        // (vertex, position in its successor list)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < succ[v].len() {
                let w = succ[v][*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        raw_comp[w] = raw_count;
                        if w == v {
                            break;
                        }
                    }
                    raw_count += 1;
                }
            }
        }
    }

    // Renumber by least member.
    let mut renumber = vec![UNSEEN; raw_count];
    let mut next = 0;
    for v in 0..n {
        let c = raw_comp[v];
        if renumber[c] == UNSEEN {
            renumber[c] = next;
            next += 1;
        }
    }
    let component_of: Vec<usize> = raw_comp.iter().map(|&c| renumber[c]).collect();
    let mut components = vec![Vec::new(); raw_count];
    for v in 0..n {
        components[component_of[v]].push(v);
    }
    let mut dag = Digraph::empty(raw_count);
    for (u, v) in d.arcs() {
        let (cu, cv) = (component_of[u], component_of[v]);
        if cu != cv && !dag.has_arc(cu, cv) {
            dag.add_arc(cu, cv).expect("component indices are valid");
        }
    }
    Condensation {
        component_of,
        components,
        dag,
    }
}

/// A topological order of `d`, or `None` when `d` has a directed cycle.
/// Ties go to the least available vertex.
pub fn topological_order(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.vertex_count();
    let mut indeg: Vec<usize> = (0..n).map(|v| d.inn(v).len()).collect();
    let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for w in d.out(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.insert(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

pub fn is_acyclic(d: &Digraph) -> bool {
    topological_order(d).is_some()
}

/// Finds some directed cycle, as a vertex sequence, if one exists.
pub fn find_cycle(d: &Digraph) -> Option<Vec<usize>> {
    let cond = strongly_connected_components(d);
    let comp = cond.components().iter().find(|c| c.len() > 1)?;
    // Walk inside the component until a vertex repeats.
    let c = cond.component_of(comp[0]);
    let mut seen_at = vec![usize::MAX; d.vertex_count()];
    let mut walk = vec![comp[0]];
    seen_at[comp[0]] = 0;
    loop {
        let v = *walk.last().expect("walk is non-empty");
        let w = d
            .out(v)
            .iter()
            .find(|&w| cond.component_of(w) == c)
            .expect("a vertex of a non-trivial SCC has a successor inside it");
        if seen_at[w] != usize::MAX {
            return Some(walk[seen_at[w]..].to_vec());
        }
        seen_at[w] = walk.len();
        walk.push(w);
    }
}

/// Reachability closure: `reach[u]` holds every `v` with a directed path
/// of length at least one from `u`.
pub fn reachability(d: &Digraph) -> Vec<crate::VertexSet> {
    let n = d.vertex_count();
    (0..n)
        .map(|s| {
            let mut seen = crate::VertexSet::new(n);
            let mut stack: Vec<usize> = d.out(s).to_vec();
            while let Some(v) = stack.pop() {
                if seen.insert(v) {
                    stack.extend(d.out(v).iter().filter(|&w| !seen.contains(w)));
                }
            }
            seen
        })
        .collect()
}
