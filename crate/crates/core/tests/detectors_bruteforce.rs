//! Detectors against definition-level brute force on small random graphs.

use proptest::prelude::*;
use projtri::detectors::{find_induced_c7bar, find_k4, find_loose_odd_wheel, find_odd_hole, verify};
use projtri::Graph;

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (4..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(prop::bool::weighted(0.45), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    random_graph(max_n).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Cyclic order of `s` if `G[s]` is a single cycle.
fn induced_cycle_order(g: &Graph, s: &[usize]) -> Option<Vec<usize>> {
    let inside = |v: usize| s.contains(&v);
    if s.iter().any(|&v| g.neighbors(v).iter().filter(|&&w| inside(w)).count() != 2) {
        return None;
    }
    let mut order = vec![s[0]];
    let mut prev = usize::MAX;
    let mut cur = s[0];
    loop {
        let next = *g.neighbors(cur).iter().find(|&&w| inside(w) && w != prev)?;
        if next == s[0] {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order.len() == s.len()).then_some(order)
}

fn brute_odd_holes(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|m| m.count_ones() >= 5 && m.count_ones() % 2 == 1)
        .filter(|&m| induced_cycle_order(g, &members(m)).is_some())
        .count()
}

/// Hub outside an induced odd cycle, adjacent to three cycle vertices that
/// cut the cycle into three odd paths.
fn brute_loose_odd_wheel(g: &Graph) -> bool {
    for hub in 0..g.n() {
        for m in 0u32..1 << g.n() {
            if m >> hub & 1 == 1 || m.count_ones() < 3 || m.count_ones() % 2 == 0 {
                continue;
            }
            let Some(c) = induced_cycle_order(g, &members(m)) else { continue };
            let k = c.len();
            let spokes: Vec<usize> = (0..k).filter(|&i| g.has_edge(hub, c[i])).collect();
            for a in 0..spokes.len() {
                for b in a + 1..spokes.len() {
                    for d in b + 1..spokes.len() {
                        let (i, j, l) = (spokes[a], spokes[b], spokes[d]);
                        if (j - i) % 2 == 1 && (l - j) % 2 == 1 && (k - l + i) % 2 == 1 {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

fn brute_k4(g: &Graph) -> bool {
    (0u32..1 << g.n())
        .filter(|m| m.count_ones() == 4)
        .any(|m| g.is_clique(&members(m)))
}

fn brute_c7bar(g: &Graph) -> bool {
    (0u32..1 << g.n())
        .filter(|m| m.count_ones() == 7)
        .any(|m| induced_cycle_order(&g.complement(), &members(m)).is_some())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn loose_odd_wheel_matches_definition(g in random_graph(9)) {
        let found = find_loose_odd_wheel(&g);
        prop_assert_eq!(found.is_some(), brute_loose_odd_wheel(&g), "{:?}", g.edges().collect::<Vec<_>>());
        if let Some(c) = found {
            prop_assert_eq!(verify(&g, &c), Ok(true));
        }
    }

    #[test]
    fn odd_hole_matches_definition(g in random_graph(9)) {
        let found = find_odd_hole(&g);
        prop_assert_eq!(found.is_some(), brute_odd_holes(&g) > 0);
        if let Some(c) = found {
            prop_assert_eq!(verify(&g, &c), Ok(true));
        }
    }

    #[test]
    fn k4_and_c7bar_match_definition(g in random_graph(8)) {
        prop_assert_eq!(find_k4(&g).is_some(), brute_k4(&g));
        let c = find_induced_c7bar(&g);
        prop_assert_eq!(c.is_some(), brute_c7bar(&g));
        if let Some(c) = c {
            prop_assert_eq!(verify(&g, &c), Ok(true));
        }
    }

    #[test]
    fn detectors_are_invariant_under_relabelling((g, perm) in with_permutation(9)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(find_loose_odd_wheel(&g).is_some(), find_loose_odd_wheel(&h).is_some());
        prop_assert_eq!(find_odd_hole(&g).is_some(), find_odd_hole(&h).is_some());
    }
}

#[test]
fn c7bar_itself_is_found() {
    let g = Graph::cycle(7).complement();
    let c = find_induced_c7bar(&g).expect("C7bar");
    assert_eq!(verify(&g, &c), Ok(true));
}

#[test]
fn small_wheels() {
    // W5 is a loose odd wheel; W4's rim is even, and W3 = K4 is one
    assert!(find_loose_odd_wheel(&Graph::wheel(5)).is_some());
    assert!(find_loose_odd_wheel(&Graph::wheel(4)).is_none());
    assert!(find_loose_odd_wheel(&Graph::wheel(3)).is_some());
}
