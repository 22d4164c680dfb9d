//! Reduction moves on Eulerian triangulations of the projective plane:
//! even-contraction and its inverse even-splitting, octahedron deletion and
//! attachment, greedy reduction to an irreducible triangulation, and two
//! graph utilities used alongside them (3-colouring, clique separators).
//!
//! All moves work on the face set and rebuild the embedding from it. Vertex
//! ids stay dense: removed ids are compacted away preserving order, new
//! vertices are appended.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::surface::{self, CycleWitness, EmbeddedGraph, SurfaceError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("not an even-contraction site: {0}")]
    BadSite(String),
    #[error("cannot split: {0}")]
    BadSplit(String),
    #[error("no deletable octahedron at {0:?}: {1}")]
    NoOctahedron([usize; 3], String),
    #[error("{0:?} is not a face")]
    NotAFace([usize; 3]),
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("line {0}: {1}")]
    LogSyntax(usize, String),
}

/// A degree-4 vertex `x` with link cycle `(a, b, a2, b2)` such that `b` and
/// `b2` are non-adjacent and have exactly `{a, a2, x}` as common neighbours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EvenContractionSite {
    pub x: usize,
    pub b: usize,
    pub b2: usize,
    pub a: usize,
    pub a2: usize,
}

/// One move, as written in a transform log.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Contract { x: usize, b: usize, b2: usize },
    Split { y: usize, a: usize, a2: usize },
    OctaDelete([usize; 3]),
    OctaAttach([usize; 3]),
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::Contract { x, b, b2 } => write!(f, "contract {x} {b} {b2}"),
            Move::Split { y, a, a2 } => write!(f, "split {y} {a} {a2}"),
            Move::OctaDelete([u, v, w]) => write!(f, "octa- {u} {v} {w}"),
            Move::OctaAttach([u, v, w]) => write!(f, "octa+ {u} {v} {w}"),
        }
    }
}

impl FromStr for Move {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        let nums = parts[1..]
            .iter()
            .map(|p| p.parse::<usize>().map_err(|_| format!("bad vertex id `{p}`")))
            .collect::<Result<Vec<_>, _>>()?;
        if nums.len() != 3 {
            return Err(format!("expected three vertex ids, got {}", nums.len()));
        }
        let t = [nums[0], nums[1], nums[2]];
        match parts[0] {
            "contract" => Ok(Move::Contract { x: t[0], b: t[1], b2: t[2] }),
            "split" => Ok(Move::Split { y: t[0], a: t[1], a2: t[2] }),
            "octa-" => Ok(Move::OctaDelete(t)),
            "octa+" => Ok(Move::OctaAttach(t)),
            other => Err(format!("unknown move `{other}`")),
        }
    }
}

/// A move together with the vertex map it induced (old id -> new id; ids of
/// vertices that disappeared map to `None`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogEntry {
    pub step: Move,
    pub map: Vec<Option<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TransformLog {
    pub entries: Vec<LogEntry>,
}

impl TransformLog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn moves(&self) -> Vec<Move> {
        self.entries.iter().map(|e| e.step).collect()
    }

    /// One move per line.
    pub fn to_text(&self) -> String {
        self.entries.iter().map(|e| format!("{}\n", e.step)).collect()
    }

    /// Composite vertex map from the source of the log to its target.
    pub fn composite_map(&self, n: usize) -> Vec<Option<usize>> {
        let mut m: Vec<Option<usize>> = (0..n).map(Some).collect();
        for e in &self.entries {
            for x in m.iter_mut() {
                *x = x.and_then(|v| e.map.get(v).copied().flatten());
            }
        }
        m
    }
}

pub fn parse_log(text: &str) -> Result<Vec<Move>, TransformError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(line.parse().map_err(|e| TransformError::LogSyntax(i + 1, e))?);
    }
    Ok(out)
}

pub fn apply(g: &EmbeddedGraph, m: Move) -> Result<(EmbeddedGraph, LogEntry), TransformError> {
    match m {
        Move::Contract { x, b, b2 } => {
            let site = site_at(g, x, b, b2)?;
            even_contract(g, &site)
        }
        Move::Split { y, a, a2 } => even_split(g, y, a, a2),
        Move::OctaDelete(t) => delete_octahedron(g, t),
        Move::OctaAttach(f) => attach_octahedron(g, f),
    }
}

/// Applies `moves` in order, recording each step.
pub fn replay(g: &EmbeddedGraph, moves: &[Move]) -> Result<(EmbeddedGraph, TransformLog), TransformError> {
    let mut cur = g.clone();
    let mut log = TransformLog::default();
    for &m in moves {
        let (next, entry) = apply(&cur, m)?;
        log.entries.push(entry);
        cur = next;
    }
    Ok((cur, log))
}

// ---------------------------------------------------------------------------
// face-level helpers

fn sorted3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

/// Removes the ids in `gone` and shifts the rest down, preserving order.
fn compaction(n: usize, gone: &[usize]) -> Vec<Option<usize>> {
    let mut map = vec![None; n];
    let mut next = 0;
    for (v, slot) in map.iter_mut().enumerate() {
        if !gone.contains(&v) {
            *slot = Some(next);
            next += 1;
        }
    }
    map
}

fn rebuild(n: usize, faces: &[[usize; 3]]) -> Result<EmbeddedGraph, TransformError> {
    Ok(EmbeddedGraph::from_triangles(n, faces)?)
}

// ---------------------------------------------------------------------------
// even-contraction / splitting

fn check_site(g: &EmbeddedGraph, x: usize, b: usize, b2: usize) -> Result<EvenContractionSite, String> {
    if x >= g.n() || b >= g.n() || b2 >= g.n() {
        return Err("vertex out of range".into());
    }
    if g.degree(x) != 4 {
        return Err(format!("{x} has degree {}", g.degree(x)));
    }
    let link: Vec<usize> = g.rotation(x).iter().map(|d| d.to).collect();
    let i = link.iter().position(|&v| v == b).ok_or(format!("{b} is not a neighbour of {x}"))?;
    if link[(i + 2) % 4] != b2 {
        return Err(format!("{b} and {b2} are not opposite on the link of {x}"));
    }
    let (a, a2) = (link[(i + 1) % 4], link[(i + 3) % 4]);
    let gr = g.graph();
    if gr.has_edge(b, b2) {
        return Err(format!("{b} and {b2} are adjacent"));
    }
    let common = gr.neighbor_set(b).intersection(gr.neighbor_set(b2));
    let expected = BitSet::from_iter(g.n(), [a, a2, x]);
    if common != expected {
        return Err(format!("common neighbours of {b} and {b2} are {common:?}"));
    }
    Ok(EvenContractionSite {
        x,
        b: b.min(b2),
        b2: b.max(b2),
        a: a.min(a2),
        a2: a.max(a2),
    })
}

fn site_at(g: &EmbeddedGraph, x: usize, b: usize, b2: usize) -> Result<EvenContractionSite, TransformError> {
    check_site(g, x, b, b2).map_err(TransformError::BadSite)
}

/// Every even-contraction site, ascending by `(x, b)`.
pub fn find_even_contractions(g: &EmbeddedGraph) -> Vec<EvenContractionSite> {
    let mut out = Vec::new();
    for x in 0..g.n() {
        if g.degree(x) != 4 {
            continue;
        }
        let link: Vec<usize> = g.rotation(x).iter().map(|d| d.to).collect();
        for i in 0..2 {
            if let Ok(s) = check_site(g, x, link[i], link[i + 2]) {
                out.push(s);
            }
        }
    }
    out.sort();
    out
}

/// Identifies `x`, `b`, `b2` into one vertex `y` carrying the smallest of
/// the three ids.
pub fn even_contract(
    g: &EmbeddedGraph,
    site: &EvenContractionSite,
) -> Result<(EmbeddedGraph, LogEntry), TransformError> {
    let s = site_at(g, site.x, site.b, site.b2)?;
    let y = s.x.min(s.b).min(s.b2);
    let gone: Vec<usize> = [s.x, s.b, s.b2].into_iter().filter(|&v| v != y).collect();
    let mut map = compaction(g.n(), &gone);
    for &v in &gone {
        map[v] = map[y];
    }
    let faces: Vec<[usize; 3]> = g
        .face_triangles()?
        .into_iter()
        .filter(|f| !f.contains(&s.x))
        .map(|f| sorted3(f.map(|v| map[v].expect("mapped"))))
        .collect();
    let out = rebuild(g.n() - 2, &faces)?;
    let entry = LogEntry {
        step: Move::Contract { x: s.x, b: s.b, b2: s.b2 },
        map,
    };
    Ok((out, entry))
}

/// Splits `y` at the gates `a`, `a2`: `y` becomes the path `b - x - b2`
/// with `x` new (id `n`), `b` keeping the id of `y` and the rotation arc from
/// `a` to `a2`, and `b2` new (id `n + 1`) taking the other arc.
///
/// The gates must be non-consecutive in the rotation of `y`, and the arcs
/// between them must have odd length, or the result would not be Eulerian.
pub fn even_split(
    g: &EmbeddedGraph,
    y: usize,
    a: usize,
    a2: usize,
) -> Result<(EmbeddedGraph, LogEntry), TransformError> {
    let bad = |m: String| TransformError::BadSplit(m);
    if y >= g.n() {
        return Err(bad(format!("vertex {y} out of range")));
    }
    let link: Vec<usize> = g.rotation(y).iter().map(|d| d.to).collect();
    let k = link.len();
    let i = link.iter().position(|&v| v == a).ok_or(bad(format!("{a} is not a neighbour of {y}")))?;
    let j = link.iter().position(|&v| v == a2).ok_or(bad(format!("{a2} is not a neighbour of {y}")))?;
    let inner = (j + k - i) % k - 1;
    if a == a2 || inner == 0 || inner == k - 2 {
        return Err(bad(format!("gates {a}, {a2} are consecutive around {y}")));
    }
    if inner.is_multiple_of(2) || (k - 2 - inner).is_multiple_of(2) {
        return Err(bad(format!("arcs between {a} and {a2} have even length")));
    }
    let n = g.n();
    let (x, b, b2) = (n, y, n + 1);
    // faces (y, link[t], link[t+1]) for t in i..j belong to b, the rest to b2
    let mut first_arc = BTreeSet::new();
    let mut t = i;
    while t != j {
        first_arc.insert(sorted3([y, link[t], link[(t + 1) % k]]));
        t = (t + 1) % k;
    }
    let mut faces = Vec::new();
    for f in g.face_triangles()? {
        if f.contains(&y) && !first_arc.contains(&f) {
            faces.push(sorted3(f.map(|v| if v == y { b2 } else { v })));
        } else {
            faces.push(f);
        }
    }
    faces.extend([[x, a, b], [x, b, a2], [x, a2, b2], [x, b2, a]].map(sorted3));
    let out = rebuild(n + 2, &faces)?;
    let entry = LogEntry {
        step: Move::Split { y, a, a2 },
        map: (0..n).map(Some).collect(),
    };
    Ok((out, entry))
}

// ---------------------------------------------------------------------------
// octahedra

/// Inserts an octahedron into the face `f = (u, v, w)`; the new vertices get
/// ids `n, n+1, n+2`.
pub fn attach_octahedron(g: &EmbeddedGraph, f: [usize; 3]) -> Result<(EmbeddedGraph, LogEntry), TransformError> {
    let faces = g.face_triangles()?;
    let key = sorted3(f);
    if !faces.contains(&key) {
        return Err(TransformError::NotAFace(f));
    }
    let n = g.n();
    let [u, v, w] = f;
    let (x, y, z) = (n, n + 1, n + 2);
    let mut out: Vec<[usize; 3]> = faces.into_iter().filter(|t| *t != key).collect();
    out.extend(
        [
            [u, v, y],
            [v, w, z],
            [w, u, x],
            [u, y, x],
            [v, z, y],
            [w, x, z],
            [x, y, z],
        ]
        .map(sorted3),
    );
    let g2 = rebuild(n + 3, &out)?;
    let entry = LogEntry {
        step: Move::OctaAttach(f),
        map: (0..n).map(Some).collect(),
    };
    Ok((g2, entry))
}

/// The three interior vertices if `t` bounds a deletable octahedron.
fn octahedron_inside(g: &EmbeddedGraph, t: [usize; 3]) -> Result<[usize; 3], String> {
    let gr = g.graph();
    if !gr.is_clique(&t) {
        return Err("not a triangle".into());
    }
    let c = CycleWitness::new(g, t.to_vec()).map_err(|e| e.to_string())?;
    if c.odd_signature {
        return Err("triangle is not contractible".into());
    }
    let inside = surface::interior_vertices(g, &c).map_err(|e| e.to_string())?;
    if inside.len() != 3 {
        return Err(format!("interior has {} vertices", inside.len()));
    }
    let ins = [inside[0], inside[1], inside[2]];
    if !gr.is_clique(&ins) {
        return Err("interior is not a triangle".into());
    }
    let mut hits = [0usize; 3];
    for &x in &ins {
        if gr.degree(x) != 4 {
            return Err(format!("interior vertex {x} has degree {}", gr.degree(x)));
        }
        for (k, &u) in t.iter().enumerate() {
            if gr.has_edge(x, u) {
                hits[k] += 1;
            }
        }
    }
    if hits != [2, 2, 2] {
        return Err("interior is not attached like an octahedron".into());
    }
    Ok(ins)
}

/// Triangles (sorted) bounding a deletable octahedron, lexicographic.
pub fn find_octahedron_deletions(g: &EmbeddedGraph) -> Vec<[usize; 3]> {
    let faces: BTreeSet<[usize; 3]> = match g.face_triangles() {
        Ok(f) => f.into_iter().collect(),
        Err(_) => return Vec::new(),
    };
    surface::triangles(g.graph())
        .into_iter()
        .filter(|t| !faces.contains(t) && octahedron_inside(g, *t).is_ok())
        .collect()
}

pub fn delete_octahedron(g: &EmbeddedGraph, t: [usize; 3]) -> Result<(EmbeddedGraph, LogEntry), TransformError> {
    let ins = octahedron_inside(g, t).map_err(|m| TransformError::NoOctahedron(t, m))?;
    let map = compaction(g.n(), &ins);
    let mut faces: Vec<[usize; 3]> = g
        .face_triangles()?
        .into_iter()
        .filter(|f| !f.iter().any(|v| ins.contains(v)))
        .map(|f| sorted3(f.map(|v| map[v].expect("kept"))))
        .collect();
    faces.push(sorted3(t.map(|v| map[v].expect("kept"))));
    let out = rebuild(g.n() - 3, &faces)?;
    Ok((out, LogEntry { step: Move::OctaDelete(t), map }))
}

// ---------------------------------------------------------------------------
// reduction

/// Applies octahedron deletions (lowest triangle first) and otherwise the
/// first even-contraction site until neither applies. The order is fixed for
/// reproducibility; different orders may reach different irreducibles.
pub fn reduce_to_irreducible(g: &EmbeddedGraph) -> Result<(EmbeddedGraph, TransformLog), TransformError> {
    let mut cur = g.clone();
    let mut log = TransformLog::default();
    loop {
        let step = if let Some(&t) = find_octahedron_deletions(&cur).first() {
            delete_octahedron(&cur, t)?
        } else if let Some(site) = find_even_contractions(&cur).first() {
            even_contract(&cur, site)?
        } else {
            return Ok((cur, log));
        };
        log.entries.push(step.1);
        cur = step.0;
    }
}

// ---------------------------------------------------------------------------
// 3-colouring

/// A proper 3-colouring by backtracking with smallest-domain-first ordering.
pub fn three_colour(g: &Graph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut colour = vec![u8::MAX; n];
    let mut domain = vec![0b111u8; n];

    fn go(g: &Graph, colour: &mut [u8], domain: &mut [u8]) -> bool {
        let next = (0..g.n())
            .filter(|&v| colour[v] == u8::MAX)
            .min_by_key(|&v| (domain[v].count_ones(), std::cmp::Reverse(g.degree(v)), v));
        let Some(v) = next else { return true };
        for c in 0..3u8 {
            if domain[v] & (1 << c) == 0 {
                continue;
            }
            colour[v] = c;
            let mut touched = Vec::new();
            let mut dead = false;
            for &w in g.neighbors(v) {
                if colour[w] == u8::MAX && domain[w] & (1 << c) != 0 {
                    domain[w] &= !(1 << c);
                    touched.push(w);
                    if domain[w] == 0 {
                        dead = true;
                    }
                }
            }
            if !dead && go(g, colour, domain) {
                return true;
            }
            for w in touched {
                domain[w] |= 1 << c;
            }
            colour[v] = u8::MAX;
        }
        false
    }

    go(g, &mut colour, &mut domain).then_some(colour)
}

pub fn is_proper_colouring(g: &Graph, colour: &[u8]) -> bool {
    colour.len() == g.n() && g.edges().all(|(u, v)| colour[u] != colour[v])
}

// ---------------------------------------------------------------------------
// clique separators

fn cliques_by_size(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn grow(g: &Graph, cur: &mut Vec<usize>, cand: BitSet, out: &mut Vec<Vec<usize>>) {
        for v in cand.iter() {
            cur.push(v);
            out.push(cur.clone());
            let mut next = cand.intersection(g.neighbor_set(v));
            for w in cand.iter().filter(|&w| w <= v) {
                next.remove(w);
            }
            grow(g, cur, next, out);
            cur.pop();
        }
    }
    grow(g, &mut Vec::new(), BitSet::full(g.n()), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Splits a connected graph at its first clique cutset `X` (smallest, then
/// lexicographically first), returning the vertex sets `C_i ∪ X` for the
/// components `C_i` of `G - X`, each sorted. Without a clique cutset the
/// whole vertex set is the only piece.
pub fn clique_separator_components(g: &Graph) -> Result<Vec<Vec<usize>>, TransformError> {
    if !g.is_connected() {
        return Err(TransformError::Disconnected);
    }
    let all: Vec<usize> = (0..g.n()).collect();
    for x in cliques_by_size(g) {
        if x.len() >= g.n() - 1 {
            continue;
        }
        let mut rest = BitSet::full(g.n());
        for &v in &x {
            rest.remove(v);
        }
        let comps = g.components_within(&rest);
        if comps.len() > 1 {
            return Ok(comps
                .into_iter()
                .map(|mut c| {
                    c.extend_from_slice(&x);
                    c.sort_unstable();
                    c
                })
                .collect());
        }
    }
    Ok(vec![all])
}
