//! Reference checks for posets and the order on their antichains.

use kernelkit::redblue::{compare_antichains, max_chain_of_antichains, AntichainOrder, Poset};
use kernelkit::VertexSet;
use rand::Rng;

/// Every labeled poset on `n` elements, each once: the strict relations
/// that are transitive and antisymmetric.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let rel: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let has = |x, y| rel.contains(&(x, y));
        let antisymmetric = rel.iter().all(|&(x, y)| !has(y, x));
        let transitive = rel
            .iter()
            .all(|&(x, y)| rel.iter().all(|&(y2, z)| y2 != y || x == z || has(x, z)));
        if antisymmetric && transitive {
            out.push(Poset::from_relation(n, rel).unwrap());
        }
    }
    out
}

pub fn random_poset(r: &mut impl Rng, n: usize) -> Poset {
    // Pairs go forward in a shuffled order, so the closure is acyclic.
    let mut order: Vec<usize> = (0..n).collect();
    rand::seq::SliceRandom::shuffle(&mut order[..], r);
    let p = r.gen_range(0.0..0.6);
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                rel.push((order[i], order[j]));
            }
        }
    }
    Poset::from_relation(n, rel).unwrap()
}

pub fn naive_antichains(p: &Poset) -> Vec<VertexSet> {
    let n = p.size();
    (0u32..1 << n)
        .map(|m| VertexSet::from_mask(n, m as u64))
        .filter(|s| s.iter().all(|x| s.iter().all(|y| x == y || !p.comparable(x, y))))
        .collect()
}

pub fn naive_leq(p: &Poset, a: &VertexSet, b: &VertexSet) -> bool {
    a.iter().all(|x| b.iter().any(|y| p.leq(x, y)))
}

pub fn check_laws(p: &Poset) {
    let all = naive_antichains(p);
    assert_eq!(p.antichains().len(), all.len());
    for a in &all {
        assert!(p.is_antichain(a));
        assert_eq!(compare_antichains(p, a, a).unwrap(), AntichainOrder::Equal, "reflexive");
        for b in &all {
            let ab = naive_leq(p, a, b);
            assert_eq!(p.set_leq(a, b), ab);
            if ab && naive_leq(p, b, a) {
                assert_eq!(a, b, "antisymmetric");
            }
            let expected = match (ab, naive_leq(p, b, a)) {
                (true, true) => AntichainOrder::Equal,
                (true, false) => AntichainOrder::Less,
                (false, true) => AntichainOrder::Greater,
                (false, false) => AntichainOrder::Incomparable,
            };
            assert_eq!(compare_antichains(p, a, b).unwrap(), expected);
        }
    }
    // Transitivity over all triples would be cubic in the antichain count;
    // at the sizes used here that is still cheap.
    for a in &all {
        for b in all.iter().filter(|b| naive_leq(p, a, b)) {
            for c in all.iter().filter(|c| naive_leq(p, b, c)) {
                assert!(naive_leq(p, a, c) && p.set_leq(a, c), "transitive");
            }
        }
    }
}

pub fn check_max_chain(p: &Poset) {
    let chain = max_chain_of_antichains(p);
    assert_eq!(chain.len(), p.size() + 1);
    assert!(chain[0].is_empty());
    for w in chain.windows(2) {
        assert!(p.is_antichain(&w[1]));
        assert_eq!(compare_antichains(p, &w[0], &w[1]).unwrap(), AntichainOrder::Less);
    }
}

/// Longest strict chain by plain recursion over antichains.
pub fn naive_longest_chain(p: &Poset) -> usize {
    let all = naive_antichains(p);
    fn from(p: &Poset, all: &[VertexSet], i: usize, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(v) = memo[i] {
            return v;
        }
        let mut best = 1;
        for j in 0..all.len() {
            if j != i && naive_leq(p, &all[i], &all[j]) {
                best = best.max(1 + from(p, all, j, memo));
            }
        }
        memo[i] = Some(best);
        best
    }
    let mut memo = vec![None; all.len()];
    (0..all.len()).map(|i| from(p, &all, i, &mut memo)).max().unwrap_or(0)
}
