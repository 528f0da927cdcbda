//! Exhaustive directed-cycle enumeration.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
    All,
}

impl Parity {
    fn accepts(self, len: usize) -> bool {
        match self {
            Parity::Odd => len % 2 == 1,
            Parity::Even => len.is_multiple_of(2),
            Parity::All => true,
        }
    }
}

/// Every directed cycle of the requested parity with at most `max_len`
/// vertices, one per rotation class, each rotated to start at its least
/// vertex. Cycles are listed in lexicographic order of that canonical form.
///
/// `budget` caps the number of cycles returned.
pub fn enumerate_directed_cycles(
    d: &Digraph,
    parity: Parity,
    max_len: usize,
    budget: Option<u64>,
) -> Result<Vec<Vec<usize>>> {
    let n = d.vertex_count();
    if max_len > n {
        return Err(Error::Contract(format!(
            "max_len {max_len} exceeds the vertex count {n}"
        )));
    }
    let mut found = Vec::new();
    let mut path = Vec::with_capacity(max_len);
    let mut on_path = vec![false; n];
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        extend(d, start, parity, max_len, budget, &mut path, &mut on_path, &mut found)?;
        on_path[start] = false;
        path.pop();
    }
    found.sort();
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    d: &Digraph,
    start: usize,
    parity: Parity,
    max_len: usize,
    budget: Option<u64>,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<Vec<usize>>,
) -> Result<()> {
    let last = *path.last().expect("path starts at `start`");
    for next in d.out(last) {
        if next == start {
            if parity.accepts(path.len()) && path.len() >= 2 {
                if let Some(b) = budget {
                    if found.len() as u64 >= b {
                        return Err(Error::BudgetExceeded {
                            what: "cycle enumeration",
                            budget: b,
                        });
                    }
                }
                found.push(path.clone());
            }
        } else if next > start && !on_path[next] && path.len() < max_len {
            path.push(next);
            on_path[next] = true;
            extend(d, start, parity, max_len, budget, path, on_path, found)?;
            on_path[next] = false;
            path.pop();
        }
    }
    Ok(())
}

/// Arcs of a cycle given as a vertex sequence, closing arc included.
pub fn cycle_arcs(cycle: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..cycle.len()).map(move |i| (cycle[i], cycle[(i + 1) % cycle.len()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::families::*;

    #[test]
    fn three_cycle_has_one_odd_cycle() {
        let cycles = enumerate_directed_cycles(&directed_cycle(3), Parity::Odd, 3, None).unwrap();
        assert_eq!(cycles, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn four_cycle_has_no_odd_cycle() {
        let d = directed_cycle(4);
        assert!(enumerate_directed_cycles(&d, Parity::Odd, 4, None).unwrap().is_empty());
        assert_eq!(enumerate_directed_cycles(&d, Parity::Even, 4, None).unwrap().len(), 1);
    }

    #[test]
    fn two_cycles_are_found_in_all_mode() {
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(
            enumerate_directed_cycles(&d, Parity::All, 2, None).unwrap(),
            vec![vec![0, 1]]
        );
    }

    #[test]
    fn budget_and_length_contract() {
        let d = complete_symmetric(5);
        assert!(matches!(
            enumerate_directed_cycles(&d, Parity::All, 5, Some(3)),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(enumerate_directed_cycles(&d, Parity::All, 6, None).is_err());
    }
}
