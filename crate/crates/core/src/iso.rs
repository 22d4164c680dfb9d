//! Graph canonical forms by colour refinement and individualisation.
//!
//! Plain search tree without automorphism pruning: every leaf of the
//! refinement tree is visited and the lexicographically smallest relabelled
//! edge list wins. Adequate for the few-dozen-vertex graphs handled here.

use crate::graph::Graph;

/// Canonical edge list (under the canonical labelling) plus the labelling
/// itself (`perm[v]` = canonical id of `v`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub edges: Vec<(usize, usize)>,
    pub perm: Vec<usize>,
}

fn refine(g: &Graph, colour: &mut Vec<usize>) {
    let n = g.n();
    loop {
        let cells_before = distinct(colour);
        let mut sig: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb, v)
            })
            .collect();
        sig.sort();
        let mut next = vec![0; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sig[i].0 != sig[i - 1].0 || sig[i].1 != sig[i - 1].1) {
                c += 1;
            }
            next[sig[i].2] = c;
        }
        *colour = next;
        if distinct(colour) == cells_before {
            return;
        }
    }
}

fn distinct(colour: &[usize]) -> usize {
    let mut c = colour.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn relabelled(g: &Graph, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    e.sort_unstable();
    e
}

fn search(g: &Graph, colour: Vec<usize>, best: &mut Option<CanonicalForm>) {
    let n = g.n();
    let mut colour = colour;
    refine(g, &mut colour);
    if distinct(&colour) == n {
        let edges = relabelled(g, &colour);
        if best.as_ref().is_none_or(|b| edges < b.edges) {
            *best = Some(CanonicalForm { edges, perm: colour });
        }
        return;
    }
    // smallest non-singleton cell, lowest colour on ties
    let mut size = vec![0usize; n];
    for &c in &colour {
        size[c] += 1;
    }
    let target = (0..n)
        .filter(|&c| size[c] > 1)
        .min_by_key(|&c| (size[c], c))
        .expect("non-discrete partition");
    for v in (0..n).filter(|&v| colour[v] == target) {
        let ind: Vec<usize> = (0..n)
            .map(|w| 2 * colour[w] + usize::from(w != v))
            .collect();
        search(g, ind, best);
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    if g.n() == 0 {
        return CanonicalForm {
            edges: Vec::new(),
            perm: Vec::new(),
        };
    }
    let mut best = None;
    search(g, vec![0; g.n()], &mut best);
    best.expect("at least one leaf")
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a).edges == canonical_form(b).edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5);
        assert!(isomorphic(&c5, &c5.complement()));
        assert!(!isomorphic(&Graph::cycle(6), &Graph::cycle(6).complement()));
    }

    #[test]
    fn relabelling_does_not_change_the_form() {
        let g = Graph::wheel(6);
        let perm = [3, 0, 6, 1, 5, 2, 4];
        assert_eq!(canonical_form(&g).edges, canonical_form(&g.permuted(&perm)).edges);
    }

    #[test]
    fn distinguishes_same_degree_sequences() {
        // C6 versus two triangles
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!isomorphic(&Graph::cycle(6), &two));
    }
}
