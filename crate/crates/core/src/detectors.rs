//! Exact searches for the forbidden structures of t-perfect projective-plane
//! triangulations: K4, odd holes, the anti-hole C̄7, loose odd wheels and
//! odd-degree vertices. Every search returns a [`Certificate`] that
//! [`verify`] can replay against the graph.

use std::collections::HashSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::surface::{self, EmbeddedGraph, Niceness, ValidateOptions, ValidationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertKind {
    K4,
    OddHole,
    C7bar,
    LooseOddWheel,
    NonEulerian,
}

/// A replayable witness.
///
/// `vertices` holds the clique, the hole in cyclic order, the seven anti-hole
/// vertices in pattern order (`i ~ j` iff `j - i ≡ 2..=5 mod 7`), the single
/// odd-degree vertex, or for a loose odd wheel the hub followed by the cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertKind,
    pub vertices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hub: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd_neighbours: Option<[usize; 3]>,
}

impl Certificate {
    fn plain(kind: CertKind, vertices: Vec<usize>) -> Self {
        Certificate {
            kind,
            vertices,
            hub: None,
            cycle: None,
            odd_neighbours: None,
        }
    }

    pub fn loose_odd_wheel(hub: usize, cycle: Vec<usize>, odd: [usize; 3]) -> Self {
        let mut vertices = vec![hub];
        vertices.extend_from_slice(&cycle);
        Certificate {
            kind: CertKind::LooseOddWheel,
            vertices,
            hub: Some(hub),
            cycle: Some(cycle),
            odd_neighbours: Some(odd),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("input is not a valid projective-plane triangulation: {}", summary(.0))]
    Invalid(ValidationReport),
}

fn summary(r: &ValidationReport) -> String {
    r.violations
        .iter()
        .map(|v| format!("{}: {}", v.rule, v.locus))
        .collect::<Vec<_>>()
        .join("; ")
}

// ---------------------------------------------------------------------------
// K4, Eulerian

pub fn find_k4(g: &Graph) -> Option<Certificate> {
    for a in 0..g.n() {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            let ab = g.neighbor_set(a).intersection(g.neighbor_set(b));
            for c in ab.iter().filter(|&c| c > b) {
                if let Some(d) = ab.intersection(g.neighbor_set(c)).iter().find(|&d| d > c) {
                    return Some(Certificate::plain(CertKind::K4, vec![a, b, c, d]));
                }
            }
        }
    }
    None
}

/// The first odd-degree vertex, if any.
pub fn eulerian_violation(g: &Graph) -> Option<Certificate> {
    (0..g.n())
        .find(|&v| g.degree(v) % 2 == 1)
        .map(|v| Certificate::plain(CertKind::NonEulerian, vec![v]))
}

pub fn is_eulerian(g: &Graph) -> bool {
    eulerian_violation(g).is_none()
}

// ---------------------------------------------------------------------------
// induced cycles

/// Visits every induced cycle of `g` exactly once, as a vertex sequence that
/// starts at its minimum vertex and whose second vertex is smaller than its
/// last. Cycles are produced in a deterministic order.
pub fn for_each_induced_cycle<F>(g: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.n();
    // blocked[w] counts interior path vertices adjacent to w
    let mut blocked = vec![0u32; n];
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(n);

    #[allow(clippy::too_many_arguments)]
    fn extend<F: FnMut(&[usize]) -> ControlFlow<()>>(
        g: &Graph,
        s: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        blocked: &mut [u32],
        visit: &mut F,
    ) -> ControlFlow<()> {
        let last = *path.last().expect("non-empty");
        for &w in g.neighbors(last) {
            if w <= s || on_path[w] || blocked[w] > 0 {
                continue;
            }
            if path.len() >= 2 && g.has_edge(w, s) {
                if path[1] < w {
                    path.push(w);
                    let r = visit(path);
                    path.pop();
                    r?;
                }
                continue;
            }
            // `last` becomes interior once w is appended
            if path.len() >= 2 {
                for &x in g.neighbors(last) {
                    blocked[x] += 1;
                }
            }
            path.push(w);
            on_path[w] = true;
            let r = extend(g, s, path, on_path, blocked, visit);
            on_path[w] = false;
            path.pop();
            if path.len() >= 2 {
                for &x in g.neighbors(last) {
                    blocked[x] -= 1;
                }
            }
            r?;
        }
        ControlFlow::Continue(())
    }

    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        let r = extend(g, s, &mut path, &mut on_path, &mut blocked, &mut visit);
        on_path[s] = false;
        r?;
    }
    ControlFlow::Continue(())
}

/// All induced odd cycles, triangles included.
pub fn induced_odd_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = for_each_induced_cycle(g, |c| {
        if c.len() % 2 == 1 {
            out.push(c.to_vec());
        }
        ControlFlow::Continue(())
    });
    out
}

/// An induced odd cycle of length at least 5.
pub fn find_odd_hole(g: &Graph) -> Option<Certificate> {
    let mut found = None;
    let _ = for_each_induced_cycle(g, |c| {
        if c.len() >= 5 && c.len() % 2 == 1 {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found.map(|c| Certificate::plain(CertKind::OddHole, c))
}

// ---------------------------------------------------------------------------
// C̄7

#[inline]
fn c7bar_adjacent(i: usize, j: usize) -> bool {
    (2..=5).contains(&((j + 7 - i) % 7))
}

/// An induced copy of the complement of C7, listed in pattern order with the
/// smallest vertex first.
pub fn find_induced_c7bar(g: &Graph) -> Option<Certificate> {
    if g.n() < 7 {
        return None;
    }
    fn place(g: &Graph, assigned: &mut Vec<usize>) -> bool {
        let i = assigned.len();
        if i == 7 {
            return true;
        }
        let s = assigned[0];
        for w in s + 1..g.n() {
            if g.degree(w) < 4 || assigned.contains(&w) {
                continue;
            }
            if assigned
                .iter()
                .enumerate()
                .all(|(j, &u)| g.has_edge(u, w) == c7bar_adjacent(j, i))
            {
                assigned.push(w);
                if place(g, assigned) {
                    return true;
                }
                assigned.pop();
            }
        }
        false
    }
    for s in 0..g.n() {
        if g.degree(s) < 4 {
            continue;
        }
        let mut assigned = vec![s];
        if place(g, &mut assigned) {
            return Some(Certificate::plain(CertKind::C7bar, assigned));
        }
    }
    None
}

// ---------------------------------------------------------------------------
// loose odd wheels

/// An odd cycle of `g[mask]`, if that subgraph is not bipartite.
fn odd_cycle_within(g: &Graph, mask: &BitSet) -> Option<Vec<usize>> {
    let n = g.n();
    let mut colour = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in mask.iter() {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !mask.contains(w) {
                    continue;
                }
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if colour[w] == colour[u] {
                    // walk both ends up to their common ancestor
                    let (mut a, mut b) = (u, w);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while depth[a] > depth[b] {
                        a = parent[a];
                        left.push(a);
                    }
                    while depth[b] > depth[a] {
                        b = parent[b];
                        right.push(b);
                    }
                    while a != b {
                        a = parent[a];
                        b = parent[b];
                        left.push(a);
                        right.push(b);
                    }
                    right.pop();
                    right.reverse();
                    left.extend(right);
                    return Some(left);
                }
            }
        }
    }
    None
}

/// Cuts an odd cycle along chords until it is induced. A chord splits an odd
/// cycle into two shorter cycles, exactly one of them odd.
fn shorten_to_induced_odd(g: &Graph, mut c: Vec<usize>) -> Vec<usize> {
    'again: loop {
        let k = c.len();
        for i in 0..k {
            for j in i + 2..k {
                if (i == 0 && j == k - 1) || !g.has_edge(c[i], c[j]) {
                    continue;
                }
                let inner: Vec<usize> = c[i..=j].to_vec();
                c = if inner.len() % 2 == 1 {
                    inner
                } else {
                    c[..=i].iter().chain(&c[j..]).copied().collect()
                };
                continue 'again;
            }
        }
        return c;
    }
}

/// Depth-first search for an induced odd cycle through `v1`, avoiding the
/// hub, on which `v1` and two later hub neighbours (the checkpoints) cut
/// the cycle into odd segments.
///
/// The path stays chordless: a vertex may only join if it has no neighbour
/// on the path other than the current end and `v1`, and a vertex adjacent to
/// `v1` must close the cycle.
struct WheelSearch<'a> {
    g: &'a Graph,
    hub: usize,
    v1: usize,
    /// neighbours of the hub above v1: eligible checkpoints
    targets: BitSet,
    visited: BitSet,
    /// number of path vertices (other than v1 and the current end) adjacent
    /// to each vertex
    blocked: Vec<u32>,
    path: Vec<usize>,
    checkpoints: Vec<usize>,
    failed: HashSet<(usize, u8, Vec<u64>)>,
    queue: Vec<usize>,
    colour: Vec<u8>,
}

impl WheelSearch<'_> {
    fn open(&self, w: usize) -> bool {
        w != self.hub && !self.visited.contains(w) && self.blocked[w] == 0
    }

    /// Can the path ending at `u` still be closed? Explores the vertices that
    /// may still join; those adjacent to v1 can only be the closing vertex.
    /// Where the explored region is bipartite the parity of the remaining
    /// route is forced and checked.
    fn feasible(&mut self, u: usize, stage: u8, parity: u8) -> bool {
        if u == self.v1 {
            return true;
        }
        let g = self.g;
        for c in self.colour.iter_mut() {
            *c = u8::MAX;
        }
        self.queue.clear();
        self.queue.push(u);
        self.colour[u] = 0;
        let mut bipartite = true;
        // colours of reachable closing vertices / checkpoints
        let mut closer_colours = [false; 2];
        let mut checkpoint_colours = [false; 2];
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for &w in g.neighbors(x) {
                if !self.open(w) {
                    continue;
                }
                if self.colour[w] == u8::MAX {
                    self.colour[w] = self.colour[x] ^ 1;
                    if self.targets.contains(w) {
                        checkpoint_colours[self.colour[w] as usize] = true;
                    }
                    if g.has_edge(w, self.v1) {
                        closer_colours[self.colour[w] as usize] = true;
                    } else {
                        self.queue.push(w);
                    }
                } else if self.colour[w] == self.colour[x] {
                    bipartite = false;
                }
            }
        }
        if !closer_colours[0] && !closer_colours[1] {
            return false;
        }
        if stage < 2 && !checkpoint_colours[0] && !checkpoint_colours[1] {
            return false;
        }
        if bipartite {
            // the route u -> closer -> v1 has parity colour(closer) ^ 1 and
            // must complete the current segment plus (2 - stage) odd ones
            let need = 1 ^ parity ^ ((2 - stage) & 1);
            if !closer_colours[(need ^ 1) as usize] {
                return false;
            }
            if stage < 2 && !checkpoint_colours[(1 ^ parity) as usize] {
                return false;
            }
        }
        true
    }

    fn push(&mut self, w: usize) {
        let u = *self.path.last().expect("path starts at v1");
        if u != self.v1 {
            for &x in self.g.neighbors(u) {
                self.blocked[x] += 1;
            }
        }
        self.visited.insert(w);
        self.path.push(w);
    }

    fn pop(&mut self) {
        let w = self.path.pop().expect("non-empty path");
        self.visited.remove(w);
        let u = *self.path.last().expect("path starts at v1");
        if u != self.v1 {
            for &x in self.g.neighbors(u) {
                self.blocked[x] -= 1;
            }
        }
    }

    fn dfs(&mut self, u: usize, stage: u8, parity: u8) -> bool {
        let key = (u, stage * 2 + parity, self.visited_words());
        if self.failed.contains(&key) {
            return false;
        }
        if !self.feasible(u, stage, parity) {
            self.failed.insert(key);
            return false;
        }
        let g = self.g;
        for &w in g.neighbors(u) {
            if !self.open(w) {
                continue;
            }
            let np = parity ^ 1;
            let checkpoint = stage < 2 && np == 1 && self.targets.contains(w);
            if g.has_edge(w, self.v1) {
                // w closes the cycle; the closing edge w-v1 adds one
                let closes = (stage == 2 && np == 0) || (stage == 1 && checkpoint);
                if closes && self.path.len() >= 2 {
                    self.push(w);
                    if stage == 1 {
                        self.checkpoints.push(w);
                    }
                    return true;
                }
                if self.path.len() >= 2 {
                    continue;
                }
            }
            self.push(w);
            if checkpoint {
                self.checkpoints.push(w);
                if self.dfs(w, stage + 1, 0) {
                    return true;
                }
                self.checkpoints.pop();
            }
            if self.dfs(w, stage, np) {
                return true;
            }
            self.pop();
        }
        self.failed.insert(key);
        false
    }

    fn visited_words(&self) -> Vec<u64> {
        let mut words = vec![0u64; self.g.n().div_ceil(64)];
        for v in self.visited.iter() {
            words[v >> 6] |= 1 << (v & 63);
        }
        words
    }
}

/// Searches for a loose odd wheel: a hub `v` and an induced odd cycle `C`
/// avoiding `v` on which three neighbours of `v` cut `C` into three odd
/// paths. The search is exhaustive.
///
/// `C` has to be chordless. Without that requirement the octahedron, which
/// is t-perfect, would contain one (hub plus a chorded 5-cycle through the
/// other five vertices).
pub fn find_loose_odd_wheel(g: &Graph) -> Option<Certificate> {
    if let Some(k4) = find_k4(g) {
        let [a, b, c, d] = [k4.vertices[0], k4.vertices[1], k4.vertices[2], k4.vertices[3]];
        return Some(Certificate::loose_odd_wheel(a, vec![b, c, d], [b, c, d]));
    }
    // an induced odd cycle among the neighbours of v: three consecutive
    // vertices of it split it into arcs of lengths 1, 1 and |C| - 2
    for v in 0..g.n() {
        if let Some(c) = odd_cycle_within(g, g.neighbor_set(v)) {
            let c = shorten_to_induced_odd(g, c);
            let odd = [c[0], c[1], c[2]];
            return Some(Certificate::loose_odd_wheel(v, c, odd));
        }
    }
    for hub in 0..g.n() {
        let nb = g.neighbors(hub);
        if nb.len() < 3 {
            continue;
        }
        for &v1 in nb {
            let targets = BitSet::from_iter(g.n(), nb.iter().copied().filter(|&w| w > v1));
            if targets.count() < 2 {
                continue;
            }
            let mut s = WheelSearch {
                g,
                hub,
                v1,
                targets,
                visited: BitSet::from_iter(g.n(), [v1]),
                blocked: vec![0; g.n()],
                path: vec![v1],
                checkpoints: Vec::new(),
                failed: HashSet::new(),
                queue: Vec::with_capacity(g.n()),
                colour: vec![u8::MAX; g.n()],
            };
            if s.dfs(v1, 0, 0) {
                let odd = [v1, s.checkpoints[0], s.checkpoints[1]];
                return Some(Certificate::loose_odd_wheel(hub, s.path, odd));
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// verification

fn distinct_in_range(g: &Graph, vs: &[usize]) -> Result<(), CertError> {
    let mut seen = BitSet::new(g.n());
    for &v in vs {
        if v >= g.n() {
            return Err(CertError::Malformed(format!("vertex {v} out of range")));
        }
        if seen.contains(v) {
            return Err(CertError::Malformed(format!("vertex {v} repeated")));
        }
        seen.insert(v);
    }
    Ok(())
}

fn is_cycle(g: &Graph, c: &[usize]) -> bool {
    c.len() >= 3 && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
}

fn is_induced_cycle(g: &Graph, c: &[usize]) -> bool {
    let k = c.len();
    is_cycle(g, c)
        && (0..k).all(|i| {
            (i + 2..k).all(|j| (i == 0 && j == k - 1) || !g.has_edge(c[i], c[j]))
        })
}

/// Replays a certificate against `g`.
pub fn verify(g: &Graph, cert: &Certificate) -> Result<bool, CertError> {
    distinct_in_range(g, &cert.vertices).or_else(|e| {
        // a loose odd wheel lists hub + cycle; distinctness is checked below
        if cert.kind == CertKind::LooseOddWheel {
            Ok(())
        } else {
            Err(e)
        }
    })?;
    let vs = &cert.vertices;
    Ok(match cert.kind {
        CertKind::K4 => {
            if vs.len() != 4 {
                return Err(CertError::Malformed("K4 needs four vertices".into()));
            }
            g.is_clique(vs)
        }
        CertKind::OddHole => vs.len() >= 5 && vs.len() % 2 == 1 && is_induced_cycle(g, vs),
        CertKind::C7bar => {
            if vs.len() != 7 {
                return Err(CertError::Malformed("C7bar needs seven vertices".into()));
            }
            (0..7).all(|i| (i + 1..7).all(|j| g.has_edge(vs[i], vs[j]) == c7bar_adjacent(i, j)))
        }
        CertKind::NonEulerian => {
            if vs.len() != 1 {
                return Err(CertError::Malformed("NON_EULERIAN needs one vertex".into()));
            }
            g.degree(vs[0]) % 2 == 1
        }
        CertKind::LooseOddWheel => {
            let (hub, cycle, odd) = match (&cert.hub, &cert.cycle, &cert.odd_neighbours) {
                (Some(h), Some(c), Some(o)) => (*h, c, *o),
                _ => return Err(CertError::Malformed("loose odd wheel needs hub, cycle, odd neighbours".into())),
            };
            distinct_in_range(g, cycle)?;
            distinct_in_range(g, &odd)?;
            if hub >= g.n() {
                return Err(CertError::Malformed(format!("hub {hub} out of range")));
            }
            if !is_induced_cycle(g, cycle) || cycle.len() % 2 == 0 || cycle.contains(&hub) {
                return Ok(false);
            }
            if !odd.iter().all(|&w| cycle.contains(&w) && g.has_edge(hub, w)) {
                return Ok(false);
            }
            (0..3).all(|i| {
                let (a, b, c) = (odd[i], odd[(i + 1) % 3], odd[(i + 2) % 3]);
                surface::segment_of(cycle, a, b, c).is_ok_and(|s| s.is_odd())
            })
        }
    })
}

// ---------------------------------------------------------------------------
// perfection and classification

/// A certificate of imperfection for a graph embeddable in the projective
/// plane: an odd hole or an induced C̄7. Larger odd anti-holes cannot embed,
/// and C̄5 is C5. Not a valid perfection test for arbitrary graphs.
pub fn imperfection_certificate_embedded(g: &Graph) -> Option<Certificate> {
    find_odd_hole(g).or_else(|| find_induced_c7bar(g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectVerdict {
    pub perfect: bool,
    pub certificate: Option<Certificate>,
}

/// Perfection of a validated projective-plane embedded graph.
pub fn is_perfect_embedded(g: &EmbeddedGraph) -> Result<PerfectVerdict, ClassifyError> {
    let report = surface::validate(g, ValidateOptions::default());
    if !report.ok {
        return Err(ClassifyError::Invalid(report));
    }
    let certificate = imperfection_certificate_embedded(g.graph());
    Ok(PerfectVerdict {
        perfect: certificate.is_none(),
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub eulerian: bool,
    pub non_eulerian: Option<Certificate>,
    pub nice: bool,
    pub non_nice_triangle: Option<[usize; 3]>,
    pub k4: Option<Certificate>,
    pub c7bar: Option<Certificate>,
    pub loose_odd_wheel: Option<Certificate>,
    pub odd_hole: Option<Certificate>,
    pub perfect: bool,
    /// No loose odd wheel and no induced C̄7.
    pub t_perfect: bool,
    /// Mirrors `t_perfect`: the properties coincide on these graphs; not
    /// certified independently.
    pub strongly_t_perfect: bool,
    /// Mirrors `t_perfect`, for the same reason.
    pub perfect_without_k4: bool,
    /// Whether the separately computed "perfect and K4-free" agrees with
    /// `t_perfect`.
    pub consistent: bool,
}

/// Classifies a validated projective-plane triangulation.
pub fn classify(g: &EmbeddedGraph) -> Result<ClassificationReport, ClassifyError> {
    classify_inner(g, None)
}

/// As [`classify`], but a loose-odd-wheel certificate that verifies against
/// `g` replaces the exhaustive search.
pub fn classify_with_witness(
    g: &EmbeddedGraph,
    witness: &Certificate,
) -> Result<ClassificationReport, ClassifyError> {
    classify_inner(g, Some(witness))
}

fn classify_inner(
    g: &EmbeddedGraph,
    witness: Option<&Certificate>,
) -> Result<ClassificationReport, ClassifyError> {
    let report = surface::validate(g, ValidateOptions { triangulation: true });
    if !report.ok {
        return Err(ClassifyError::Invalid(report));
    }
    let nice = surface::is_nice(g).expect("validated triangulation");
    let mut r = classify_graph(g.graph(), witness);
    r.nice = nice.is_nice();
    r.non_nice_triangle = match nice {
        Niceness::Nice => None,
        Niceness::NotNice { triangle, .. } => Some(triangle),
    };
    Ok(r)
}

/// The graph-level part of [`classify`]. The perfection verdict assumes the
/// graph embeds in the projective plane.
pub fn classify_graph(g: &Graph, witness: Option<&Certificate>) -> ClassificationReport {
    let non_eulerian = eulerian_violation(g);
    let k4 = find_k4(g);
    let c7bar = find_induced_c7bar(g);
    let loose_odd_wheel = match witness {
        Some(w) if w.kind == CertKind::LooseOddWheel && verify(g, w) == Ok(true) => Some(w.clone()),
        _ => find_loose_odd_wheel(g),
    };
    let odd_hole = find_odd_hole(g);
    let perfect = odd_hole.is_none() && c7bar.is_none();
    let t_perfect = loose_odd_wheel.is_none() && c7bar.is_none();
    ClassificationReport {
        eulerian: non_eulerian.is_none(),
        non_eulerian,
        nice: true,
        non_nice_triangle: None,
        consistent: (perfect && k4.is_none()) == t_perfect,
        k4,
        c7bar,
        loose_odd_wheel,
        odd_hole,
        perfect,
        t_perfect,
        strongly_t_perfect: t_perfect,
        perfect_without_k4: t_perfect,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c7bar() -> Graph {
        Graph::cycle(7).complement()
    }

    #[test]
    fn k4_found_and_absent() {
        assert_eq!(find_k4(&Graph::complete(4)).unwrap().vertices, vec![0, 1, 2, 3]);
        assert!(find_k4(&Graph::cycle(6)).is_none());
        assert!(find_k4(&Graph::wheel(3)).is_some());
        assert!(find_k4(&Graph::wheel(5)).is_none());
    }

    #[test]
    fn odd_holes_in_cycles() {
        assert_eq!(find_odd_hole(&Graph::cycle(5)).unwrap().vertices.len(), 5);
        assert_eq!(find_odd_hole(&Graph::cycle(7)).unwrap().vertices.len(), 7);
        assert!(find_odd_hole(&Graph::cycle(6)).is_none());
        assert!(find_odd_hole(&Graph::complete(6)).is_none());
        assert!(find_odd_hole(&Graph::wheel(6)).is_none());
    }

    #[test]
    fn induced_cycles_of_small_graphs() {
        // K4 has four triangles and no longer induced cycles
        assert_eq!(induced_odd_cycles(&Graph::complete(4)).len(), 4);
        // W5: five triangles plus the rim
        let w5 = induced_odd_cycles(&Graph::wheel(5));
        assert_eq!(w5.len(), 6);
        assert!(w5.iter().any(|c| c.len() == 5));
        let mut count = 0;
        let _ = for_each_induced_cycle(&Graph::cycle(8), |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn c7bar_search() {
        let cert = find_induced_c7bar(&c7bar()).unwrap();
        assert_eq!(verify(&c7bar(), &cert), Ok(true));
        assert!(find_induced_c7bar(&Graph::cycle(7)).is_none());
        assert!(find_induced_c7bar(&Graph::complete(6)).is_none());
    }

    #[test]
    fn loose_odd_wheels_in_wheels() {
        let w5 = Graph::wheel(5);
        let cert = find_loose_odd_wheel(&w5).unwrap();
        assert_eq!(cert.hub, Some(0));
        assert_eq!(verify(&w5, &cert), Ok(true));
        assert!(find_loose_odd_wheel(&Graph::wheel(4)).is_none());
        assert!(find_loose_odd_wheel(&Graph::wheel(6)).is_none());
        assert!(find_loose_odd_wheel(&Graph::cycle(7)).is_none());
        let k4 = find_loose_odd_wheel(&Graph::complete(4)).unwrap();
        assert_eq!(verify(&Graph::complete(4), &k4), Ok(true));
    }

    #[test]
    fn exhaustive_wheel_search_beyond_fast_paths() {
        // hub 0 joined to 1, 3, 5 of a 7-cycle 1..=7: the arcs 1-3, 3-5 are
        // even, so no wheel there; joined to 1, 2, 5 the arcs are 1, 3, 3.
        let rim: Vec<(usize, usize)> = (0..7).map(|i| (1 + i, 1 + (i + 1) % 7)).collect();
        let mut even = rim.clone();
        even.extend([(0, 1), (0, 3), (0, 5)]);
        let g = Graph::from_edges(8, even).unwrap();
        assert!(find_loose_odd_wheel(&g).is_none());
        let mut odd = rim;
        odd.extend([(0, 1), (0, 2), (0, 5)]);
        let g = Graph::from_edges(8, odd).unwrap();
        let cert = find_loose_odd_wheel(&g).unwrap();
        assert_eq!(verify(&g, &cert), Ok(true));
        assert_eq!(cert.hub, Some(0));
    }

    fn octahedron() -> Graph {
        let missing = [(0, 1), (2, 3), (4, 5)];
        Graph::from_edges(
            6,
            (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|e| !missing.contains(e)),
        )
        .unwrap()
    }

    #[test]
    fn octahedron_has_no_loose_odd_wheel() {
        let g = octahedron();
        assert!(find_loose_odd_wheel(&g).is_none());
        // hub 2 with the chorded 5-cycle 0-4-1-5-3: neighbours 0, 4, 5
        let chorded = Certificate::loose_odd_wheel(2, vec![0, 4, 1, 5, 3], [0, 4, 5]);
        assert_eq!(verify(&g, &chorded), Ok(false));
    }

    #[test]
    fn chords_are_cut_away() {
        // a 7-cycle 1..=7 with hub 0 on 1, 2, 5 and the chord 3-7 in the way:
        // the induced cycles left are 1-2-3-7 (even) and 3-4-5-6-7 (hub sees
        // only 5), so there is no wheel
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (1 + i, 1 + (i + 1) % 7)).collect();
        edges.extend([(0, 1), (0, 2), (0, 5), (3, 7)]);
        let g = Graph::from_edges(8, edges).unwrap();
        assert!(find_loose_odd_wheel(&g).is_none());
        assert_eq!(shorten_to_induced_odd(&g, vec![1, 2, 3, 4, 5, 6, 7]), vec![3, 4, 5, 6, 7]);
    }

    #[test]
    fn verify_rejects_bad_certificates() {
        let k4 = Certificate::plain(CertKind::K4, vec![0, 1, 2, 3]);
        assert_eq!(verify(&Graph::cycle(4), &k4), Ok(false));
        let w5 = Graph::wheel(5);
        // neighbours 1, 2, 4 of the rim: arcs 1, 2, 2
        let bad = Certificate::loose_odd_wheel(0, vec![1, 2, 3, 4, 5], [1, 2, 4]);
        assert_eq!(verify(&w5, &bad), Ok(false));
        let good = Certificate::loose_odd_wheel(0, vec![1, 2, 3, 4, 5], [1, 2, 3]);
        assert_eq!(verify(&w5, &good), Ok(true));
        let mut broken = good.clone();
        broken.cycle = None;
        assert!(verify(&w5, &broken).is_err());
    }

    #[test]
    fn certificates_round_trip_through_json() {
        let cert = Certificate::loose_odd_wheel(0, vec![1, 2, 3, 4, 5], [1, 2, 3]);
        let text = cert.to_json();
        assert!(text.contains("LOOSE_ODD_WHEEL"));
        assert!(!text.contains('\n'));
        assert_eq!(Certificate::from_json(&text).unwrap(), cert);
    }

    #[test]
    fn eulerian_checks() {
        assert!(is_eulerian(&Graph::cycle(5)));
        let c = eulerian_violation(&Graph::wheel(5)).unwrap();
        assert_eq!(c.vertices, vec![0]);
        assert_eq!(verify(&Graph::wheel(5), &c), Ok(true));
    }
}
