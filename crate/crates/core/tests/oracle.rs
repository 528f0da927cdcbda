mod common;

use common::*;
use kernelkit::families::{directed_cycle, transitive_tournament};
use kernelkit::oracle::{
    count_kernels, enumerate_kernels, enumerate_kernels_split, find_kernel_bruteforce,
    find_nonempty_semi_kernel, is_clique_acyclic, is_m_clique_acyclic,
    kernel_via_semikernel_recursion, BruteForceSemiKernels,
};
use kernelkit::{Digraph, Error, OracleConfig, VertexSet};
use proptest::prelude::*;

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

fn naive_semi_kernels(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.vertex_count();
    let mut out: Vec<Vec<usize>> = (1u32..1 << n)
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|s| {
            let independent = s.iter().all(|&u| s.iter().all(|&v| !d.has_arc(u, v)));
            let outs: Vec<usize> = (0..n).filter(|w| s.iter().any(|&u| d.has_arc(u, *w))).collect();
            independent && outs.iter().all(|&w| s.iter().any(|&u| d.has_arc(w, u)))
        })
        .collect();
    out.sort();
    out
}

fn naive_clique_acyclic(d: &Digraph) -> bool {
    let n = d.vertex_count();
    (0u32..1 << n).all(|mask| {
        let c: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let is_clique = c
            .iter()
            .all(|&u| c.iter().all(|&v| u == v || d.adjacent_pair(u, v)));
        !is_clique || c.len() < 2 || c.iter().any(|&v| c.iter().all(|&w| w == v || d.has_arc(w, v)))
    })
}

fn naive_m_clique_acyclic(d: &Digraph) -> bool {
    let n = d.vertex_count();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b || b == c || a == c {
                    continue;
                }
                if d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a) {
                    let rev = [(a, b), (b, c), (c, a)]
                        .iter()
                        .filter(|&&(x, y)| d.has_arc(y, x))
                        .count();
                    if rev < 2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kernels_match_subset_scan(d in arb_digraph(1, 9)) {
        let ours: Vec<Vec<usize>> = enumerate_kernels(&d, &cfg()).unwrap().iter().map(VertexSet::to_vec).collect();
        let naive = naive_kernels(&d);
        prop_assert_eq!(&ours, &naive);
        let first = find_kernel_bruteforce(&d, &cfg()).unwrap();
        prop_assert_eq!(first.exists, !naive.is_empty());
        prop_assert_eq!(first.witness, naive.first().cloned());
        prop_assert_eq!(count_kernels(&d, &cfg()).unwrap().count, Some(naive.len() as u64));
    }

    #[test]
    fn split_enumeration_is_independent_of_depth_and_jobs(d in arb_digraph(1, 9), depth in 0usize..5, jobs in 1usize..4) {
        let plain = enumerate_kernels(&d, &cfg()).unwrap();
        prop_assert_eq!(enumerate_kernels_split(&d, &cfg(), depth, jobs).unwrap(), plain);
    }

    #[test]
    fn semi_kernel_is_least_nonempty(d in arb_digraph(1, 8)) {
        let found = find_nonempty_semi_kernel(&d, &cfg()).unwrap();
        let naive = naive_semi_kernels(&d);
        prop_assert_eq!(found.map(|s| s.to_vec()), naive.first().cloned());
    }

    #[test]
    fn semi_kernel_recursion_gives_kernels(d in arb_digraph(1, 8)) {
        match kernel_via_semikernel_recursion(&d, &BruteForceSemiKernels::default()) {
            Ok(k) => prop_assert!(naive_is_kernel(&d, &k)),
            Err(Error::StrategyFailed { subdigraph, .. }) => {
                let keep = VertexSet::from_indices(d.vertex_count(), subdigraph).unwrap();
                let (sub, _) = d.induced(&keep);
                prop_assert!(naive_semi_kernels(&sub).is_empty());
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn clique_acyclicity_matches_naive(d in arb_digraph(1, 7)) {
        let r = is_clique_acyclic(&d, 1_000_000).unwrap();
        prop_assert_eq!(r.clique_acyclic, naive_clique_acyclic(&d));
        let m = is_m_clique_acyclic(&d);
        prop_assert_eq!(m.m_clique_acyclic, naive_m_clique_acyclic(&d));
    }
}

#[test]
fn directed_cycles_by_parity() {
    for n in 2..=12 {
        let kernels = enumerate_kernels(&directed_cycle(n), &cfg()).unwrap();
        if n % 2 == 1 {
            assert!(kernels.is_empty(), "odd cycle {n} has a kernel");
        } else {
            let evens: Vec<usize> = (0..n).step_by(2).collect();
            let odds: Vec<usize> = (1..n).step_by(2).collect();
            let got: Vec<Vec<usize>> = kernels.iter().map(VertexSet::to_vec).collect();
            assert_eq!(got, vec![evens, odds]);
        }
    }
}

#[test]
fn transitive_tournaments_have_only_the_sink() {
    for n in 1..=12 {
        let kernels = enumerate_kernels(&transitive_tournament(n), &cfg()).unwrap();
        assert_eq!(kernels.len(), 1);
        assert_eq!(kernels[0].to_vec(), vec![n - 1]);
    }
}

#[test]
fn richardson_regime() {
    let mut r = rng(11);
    for i in 0..500 {
        let n = 2 + i % 11;
        let d = random_odd_cycle_free(&mut r, n);
        assert!(!has_odd_cycle(&d));
        let report = find_kernel_bruteforce(&d, &cfg()).unwrap();
        assert!(report.exists, "no kernel in {d:?}");
        let k = VertexSet::from_indices(n, report.witness.unwrap()).unwrap();
        assert!(naive_is_kernel(&d, &k));
    }
}

#[test]
fn size_cap_is_enforced() {
    let d = directed_cycle(30);
    assert!(matches!(
        find_kernel_bruteforce(&d, &cfg()),
        Err(Error::SizeCap { .. })
    ));
}
