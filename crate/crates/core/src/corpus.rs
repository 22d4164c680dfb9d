//! Seeded test corpus: small family instances grown by a few random even
//! splittings and octahedron attachments, one graph per isomorphism class.

use crate::catalog::{build_family, FamilySpec};
use crate::iso::canonical_form;
use crate::surface::EmbeddedGraph;
use crate::transforms::{apply, Move};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

#[derive(Clone, Debug)]
pub struct CorpusItem {
    /// e.g. `I16[1,2]` or `I16[1,2] | split 3 0 5 | octa+ 1 2 4`
    pub name: String,
    pub base: FamilySpec,
    pub moves: Vec<Move>,
    pub graph: EmbeddedGraph,
}

#[derive(Clone, Copy, Debug)]
pub struct CorpusConfig {
    pub max_n: usize,
    pub max_moves: usize,
    pub target: usize,
    pub seed: u64,
    /// Passes over the bases before giving up on `target`.
    pub rounds: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_n: 14,
            max_moves: 3,
            target: 240,
            seed: 0x7e57,
            rounds: 200,
        }
    }
}

/// Non-degenerate family instances with at most `max_n` vertices.
pub fn family_bases(max_n: usize) -> Vec<(FamilySpec, EmbeddedGraph)> {
    let mut specs = Vec::new();
    let mut seqs: Vec<Vec<u8>> = vec![Vec::new()];
    // an I16 sequence of length k has 3k + 4 vertices
    for _ in 0..(max_n.saturating_sub(4) / 3) {
        seqs = seqs
            .iter()
            .flat_map(|s| {
                (1..=3u8).map(move |k| {
                    let mut t = s.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
        specs.extend(seqs.iter().cloned().map(FamilySpec::I16));
    }
    for m in 1..=3 {
        specs.push(FamilySpec::I18(m));
        specs.push(FamilySpec::I19(m));
    }
    specs
        .into_iter()
        .filter_map(|s| build_family(&s).ok().map(|e| (s, e.graph)))
        .filter(|(_, g)| g.n() <= max_n)
        .collect()
}

/// Every even splitting and octahedron attachment keeping at most `max_n`
/// vertices. Splittings list each unordered gate pair once.
pub fn growth_moves(g: &EmbeddedGraph, max_n: usize) -> Vec<Move> {
    let mut out = Vec::new();
    if g.n() + 2 <= max_n {
        for y in 0..g.n() {
            let link: Vec<usize> = g.rotation(y).iter().map(|d| d.to).collect();
            let k = link.len();
            for i in 0..k {
                for j in i + 2..k {
                    let inner = j - i - 1;
                    if inner % 2 == 1 && (k - 2 - inner) % 2 == 1 {
                        out.push(Move::Split { y, a: link[i], a2: link[j] });
                    }
                }
            }
        }
    }
    if g.n() + 3 <= max_n {
        if let Ok(faces) = g.face_triangles() {
            out.extend(faces.into_iter().map(Move::OctaAttach));
        }
    }
    out
}

pub fn build_corpus(cfg: &CorpusConfig) -> Vec<CorpusItem> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let bases = family_bases(cfg.max_n);
    for (spec, g) in &bases {
        if seen.insert(canonical_form(g.graph()).edges) {
            out.push(CorpusItem {
                name: spec.to_string(),
                base: spec.clone(),
                moves: Vec::new(),
                graph: g.clone(),
            });
        }
    }
    for _ in 0..cfg.rounds {
        if out.len() >= cfg.target {
            break;
        }
        for (spec, base) in &bases {
            if out.len() >= cfg.target {
                break;
            }
            let steps = rng.gen_range(1..=cfg.max_moves);
            let mut g = base.clone();
            let mut moves = Vec::new();
            for _ in 0..steps {
                let options = growth_moves(&g, cfg.max_n);
                let Some(&m) = options.choose(&mut rng) else { break };
                match apply(&g, m) {
                    Ok((next, _)) => {
                        g = next;
                        moves.push(m);
                    }
                    Err(_) => break,
                }
            }
            if moves.is_empty() || !seen.insert(canonical_form(g.graph()).edges) {
                continue;
            }
            let name = std::iter::once(spec.to_string())
                .chain(moves.iter().map(|m| m.to_string()))
                .collect::<Vec<_>>()
                .join(" | ");
            out.push(CorpusItem {
                name,
                base: spec.clone(),
                moves,
                graph: g,
            });
        }
    }
    out
}
