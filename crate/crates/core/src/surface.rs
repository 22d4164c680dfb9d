//! Simple graphs embedded in the projective plane, encoded by signed rotation
//! systems.
//!
//! Every vertex carries a cyclic order of its neighbours; every edge carries a
//! signature bit (`true` = orientation-reversing) stored identically at both
//! endpoints. Faces are recovered by the usual face-tracing walk over
//! (dart, flag) states. On the projective plane a cycle is contractible exactly
//! when the number of reversing edges on it is even.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: duplicate rotation for vertex {vertex}")]
    DuplicateVertex { line: usize, vertex: usize },
    #[error("line {line}: id out of range: {id} (n = {n})")]
    OutOfRange { line: usize, id: usize, n: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("rotation system is not reciprocal at edge {0}-{1}")]
    NotReciprocal(usize, usize),
    #[error("rotation at vertex {0} is not simple")]
    NotSimple(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("vertex {0} has degree {1}, need at least 3")]
    DegreeTooSmall(usize, usize),
    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("cycle is not contractible")]
    NotContractible,
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
    #[error("face list does not describe a closed surface: {0}")]
    BadFaces(String),
    #[error("embedding is not a triangulation: {0}")]
    NotTriangulation(String),
}

/// One entry of a rotation: the neighbour and the signature of the edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Dart {
    pub to: usize,
    pub reversing: bool,
}

/// A simple graph with a signed rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rotation: Vec<Vec<Dart>>,
    graph: Graph,
}

impl EmbeddedGraph {
    /// Wraps a rotation system. Only ids are range-checked here; the surface
    /// invariants are the job of [`validate`].
    pub fn from_rotations(rotation: Vec<Vec<Dart>>) -> Result<Self, SurfaceError> {
        let n = rotation.len();
        let mut edges = Vec::new();
        for (v, rot) in rotation.iter().enumerate() {
            for d in rot {
                if d.to >= n {
                    return Err(SurfaceError::OutOfRange(d.to));
                }
                if d.to != v {
                    edges.push((v, d.to));
                }
            }
        }
        let graph = Graph::from_edges(n, edges).expect("range checked");
        Ok(EmbeddedGraph { rotation, graph })
    }

    /// Builds the embedding of a closed triangulated surface from its face
    /// triangles: each edge must lie on exactly two triangles and the link of
    /// every vertex must be a single cycle.
    ///
    /// Rotations start at the smallest neighbour and proceed towards the
    /// smaller of its two link neighbours. Signatures are then the unique
    /// choice that makes face tracing reproduce the triangles.
    pub fn from_triangles(n: usize, faces: &[[usize; 3]]) -> Result<Self, SurfaceError> {
        let mut seen = BTreeSet::new();
        let mut edge_faces: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (fi, f) in faces.iter().enumerate() {
            if f.iter().any(|&v| v >= n) {
                return Err(SurfaceError::BadFaces(format!("face {f:?} out of range")));
            }
            if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(SurfaceError::BadFaces(format!("degenerate face {f:?}")));
            }
            let mut key = *f;
            key.sort_unstable();
            if !seen.insert(key) {
                return Err(SurfaceError::BadFaces(format!("repeated face {key:?}")));
            }
            for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])] {
                edge_faces.entry((a.min(b), a.max(b))).or_default().push(fi);
            }
        }
        for (&(a, b), fs) in &edge_faces {
            if fs.len() != 2 {
                return Err(SurfaceError::BadFaces(format!(
                    "edge {a}-{b} lies on {} faces",
                    fs.len()
                )));
            }
        }

        // link[v]: neighbour -> the (up to two) link neighbours
        let mut link: Vec<BTreeMap<usize, Vec<usize>>> = vec![BTreeMap::new(); n];
        for f in faces {
            for i in 0..3 {
                let v = f[i];
                let a = f[(i + 1) % 3];
                let b = f[(i + 2) % 3];
                link[v].entry(a).or_default().push(b);
                link[v].entry(b).or_default().push(a);
            }
        }
        let mut order: Vec<Vec<usize>> = Vec::with_capacity(n);
        for (v, l) in link.iter().enumerate() {
            if l.is_empty() {
                order.push(Vec::new());
                continue;
            }
            if l.values().any(|x| x.len() != 2) {
                return Err(SurfaceError::BadFaces(format!("link of {v} is not a cycle")));
            }
            let start = *l.keys().next().expect("non-empty");
            let nb = &l[&start];
            let mut prev = start;
            let mut cur = nb[0].min(nb[1]);
            let mut cyc = vec![start];
            while cur != start {
                cyc.push(cur);
                let nx = &l[&cur];
                let next = if nx[0] != prev { nx[0] } else { nx[1] };
                prev = cur;
                cur = next;
                if cyc.len() > l.len() {
                    break;
                }
            }
            if cyc.len() != l.len() {
                return Err(SurfaceError::BadFaces(format!(
                    "link of {v} splits into several cycles"
                )));
            }
            order.push(cyc);
        }

        let succ = |v: usize, u: usize| -> usize {
            let o = &order[v];
            let i = o.iter().position(|&x| x == u).expect("neighbour");
            o[(i + 1) % o.len()]
        };
        let mut sig: HashMap<(usize, usize), bool> = HashMap::new();
        for (&(u, v), fs) in &edge_faces {
            let f = faces[fs[0]];
            let w = f.iter().copied().find(|&x| x != u && x != v).expect("third vertex");
            let a = succ(u, v) == w;
            let b = succ(v, u) == w;
            sig.insert((u, v), a == b);
        }
        let rotation = order
            .iter()
            .enumerate()
            .map(|(v, o)| {
                o.iter()
                    .map(|&u| Dart {
                        to: u,
                        reversing: sig[&(v.min(u), v.max(u))],
                    })
                    .collect()
            })
            .collect();
        EmbeddedGraph::from_rotations(rotation)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }

    /// Signature of edge `uv` as recorded at `u`.
    pub fn signature(&self, u: usize, v: usize) -> Option<bool> {
        self.rotation
            .get(u)?
            .iter()
            .find(|d| d.to == v)
            .map(|d| d.reversing)
    }

    fn check_structure(&self) -> Result<(), SurfaceError> {
        for (v, rot) in self.rotation.iter().enumerate() {
            let mut s = BTreeSet::new();
            for d in rot {
                if d.to == v || !s.insert(d.to) {
                    return Err(SurfaceError::NotSimple(v));
                }
                if self.signature(d.to, v) != Some(d.reversing) {
                    return Err(SurfaceError::NotReciprocal(v, d.to));
                }
            }
        }
        Ok(())
    }

    /// Vertex-sorted face triangles. Fails unless every face is a 3-cycle.
    pub fn face_triangles(&self) -> Result<Vec<[usize; 3]>, SurfaceError> {
        let walks = trace_faces(self)?;
        let mut out = Vec::with_capacity(walks.len());
        for w in walks {
            if w.len() != 3 {
                return Err(SurfaceError::NotTriangulation(format!("face of length {}", w.len())));
            }
            let mut t = [w[0], w[1], w[2]];
            t.sort_unstable();
            out.push(t);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Relabels vertices by `perm` (old id -> new id); `perm` must be a bijection.
    pub fn relabeled(&self, perm: &[usize]) -> EmbeddedGraph {
        let n = self.n();
        let mut rotation = vec![Vec::new(); n];
        for v in 0..n {
            rotation[perm[v]] = self.rotation[v]
                .iter()
                .map(|d| Dart {
                    to: perm[d.to],
                    reversing: d.reversing,
                })
                .collect();
        }
        EmbeddedGraph::from_rotations(rotation).expect("bijection")
    }

    /// Flips the local orientation at `v`: reverses its rotation and toggles
    /// the signature of every incident edge.
    pub fn flip_local_orientation(&self, v: usize) -> EmbeddedGraph {
        let mut rotation = self.rotation.clone();
        rotation[v].reverse();
        for d in rotation[v].iter_mut() {
            d.reversing = !d.reversing;
        }
        for i in 0..rotation.len() {
            if i == v {
                continue;
            }
            for d in rotation[i].iter_mut() {
                if d.to == v {
                    d.reversing = !d.reversing;
                }
            }
        }
        EmbeddedGraph::from_rotations(rotation).expect("same ids")
    }
}

/// Two embeddings are the same when they have the same edges and the same
/// faces (as cyclic vertex sequences up to rotation and reversal). This is
/// blind to the signature gauge.
pub fn same_embedding(a: &EmbeddedGraph, b: &EmbeddedGraph) -> bool {
    if a.n() != b.n() || a.graph() != b.graph() {
        return false;
    }
    match (trace_faces(a), trace_faces(b)) {
        (Ok(fa), Ok(fb)) => canonical_faces(&fa) == canonical_faces(&fb),
        _ => false,
    }
}

fn canonical_faces(walks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = walks
        .iter()
        .map(|w| {
            let k = w.len();
            let mut best: Option<Vec<usize>> = None;
            for rev in [false, true] {
                for s in 0..k {
                    let c: Vec<usize> = (0..k)
                        .map(|i| if rev { w[(s + k - i) % k] } else { w[(s + i) % k] })
                        .collect();
                    if best.as_ref().is_none_or(|b| c < *b) {
                        best = Some(c);
                    }
                }
            }
            best.unwrap_or_default()
        })
        .collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// .pprs text format

pub fn parse_pprs(text: &str) -> Result<EmbeddedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let syntax = |line: usize, msg: &str| ParseError::Syntax {
        line,
        msg: msg.to_string(),
    };

    let (ln, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["pprs", "1"] {
        return Err(syntax(ln, "expected `pprs 1`"));
    }
    let (ln, count) = lines.next().ok_or_else(|| syntax(ln + 1, "missing `vertices <n>`"))?;
    let parts: Vec<&str> = count.split_whitespace().collect();
    if parts.len() != 2 || parts[0] != "vertices" {
        return Err(syntax(ln, "expected `vertices <n>`"));
    }
    let n: usize = parts[1]
        .parse()
        .map_err(|_| syntax(ln, "vertex count is not a number"))?;

    let mut rotation: Vec<Option<Vec<Dart>>> = vec![None; n];
    for (ln, line) in lines {
        let rest = line
            .strip_prefix("rot")
            .ok_or_else(|| syntax(ln, "expected `rot <v>: ...`"))?;
        let (head, body) = rest
            .split_once(':')
            .ok_or_else(|| syntax(ln, "missing `:` after vertex id"))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| syntax(ln, "vertex id is not a number"))?;
        if v >= n {
            return Err(ParseError::OutOfRange { line: ln, id: v, n });
        }
        if rotation[v].is_some() {
            return Err(ParseError::DuplicateVertex { line: ln, vertex: v });
        }
        let mut darts = Vec::new();
        for tok in body.split_whitespace() {
            let (num, sign) = tok.split_at(tok.len() - 1);
            let reversing = match sign {
                "+" => false,
                "-" => true,
                _ => return Err(syntax(ln, &format!("token `{tok}` lacks a +/- signature"))),
            };
            let to: usize = num
                .parse()
                .map_err(|_| syntax(ln, &format!("bad neighbour `{tok}`")))?;
            if to >= n {
                return Err(ParseError::OutOfRange { line: ln, id: to, n });
            }
            darts.push(Dart { to, reversing });
        }
        rotation[v] = Some(darts);
    }
    let rotation = rotation.into_iter().map(Option::unwrap_or_default).collect();
    Ok(EmbeddedGraph::from_rotations(rotation).expect("ids range-checked"))
}

/// Canonical writer: vertices ascending, each rotation starting at its
/// smallest neighbour.
pub fn write_pprs(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    out.push_str("pprs 1\n");
    let _ = writeln!(out, "vertices {}", g.n());
    for v in 0..g.n() {
        let rot = g.rotation(v);
        let _ = write!(out, "rot {v}:");
        if let Some(start) = (0..rot.len()).min_by_key(|&i| rot[i].to) {
            for i in 0..rot.len() {
                let d = rot[(start + i) % rot.len()];
                let _ = write!(out, " {}{}", d.to, if d.reversing { '-' } else { '+' });
            }
        }
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// validation

#[derive(Clone, Copy, Debug, Default)]
pub struct ValidateOptions {
    /// Also require every face to be a 3-cycle.
    pub triangulation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: &'static str,
    pub locus: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub vertices: usize,
    pub edges: usize,
    pub faces: Option<usize>,
    pub euler_characteristic: Option<i64>,
}

pub fn validate(g: &EmbeddedGraph, opts: ValidateOptions) -> ValidationReport {
    let mut violations: Vec<Violation> = Vec::new();
    let push = |vs: &mut Vec<Violation>, rule: &'static str, locus: String| {
        vs.push(Violation { rule, locus })
    };

    for v in 0..g.n() {
        let mut seen = BTreeSet::new();
        for d in g.rotation(v) {
            if d.to == v {
                push(&mut violations, "simple", format!("loop at {v}"));
            } else if !seen.insert(d.to) {
                push(&mut violations, "simple", format!("{} repeated in rotation of {v}", d.to));
            }
            match g.signature(d.to, v) {
                None => push(&mut violations, "reciprocity", format!("{v} lists {} but not conversely", d.to)),
                Some(s) if s != d.reversing => {
                    push(&mut violations, "signature", format!("edge {v}-{} has unequal signatures", d.to))
                }
                _ => {}
            }
        }
    }

    let mut faces = None;
    let mut chi = None;
    if violations.is_empty() {
        if !g.graph().is_connected() {
            push(&mut violations, "connected", "graph is disconnected".to_string());
        }
        let walks = trace_faces(g).expect("structure checked");
        let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).count();
        let f = walks.len() + isolated;
        let c = g.n() as i64 - g.edge_count() as i64 + f as i64;
        faces = Some(f);
        chi = Some(c);
        if c != 1 {
            push(&mut violations, "euler", format!("χ = {c}, not projective plane"));
        }
        if orientable(g) {
            push(&mut violations, "orientable", "no cycle has odd signature sum".to_string());
        }
        if opts.triangulation {
            let mut sets = BTreeSet::new();
            for w in &walks {
                if w.len() != 3 {
                    push(&mut violations, "triangulation", format!("face {w:?} has length {}", w.len()));
                } else {
                    let mut t = [w[0], w[1], w[2]];
                    t.sort_unstable();
                    if !sets.insert(t) {
                        push(&mut violations, "triangulation", format!("face {t:?} occurs twice"));
                    }
                }
            }
            if 2 * g.edge_count() != 3 * walks.len() {
                push(
                    &mut violations,
                    "triangulation",
                    format!("2E = {} but 3F = {}", 2 * g.edge_count(), 3 * walks.len()),
                );
            }
        }
    }

    ValidationReport {
        ok: violations.is_empty(),
        violations,
        vertices: g.n(),
        edges: g.edge_count(),
        faces,
        euler_characteristic: chi,
    }
}

/// Convenience: validated projective-plane triangulation.
pub fn is_projective_triangulation(g: &EmbeddedGraph) -> bool {
    validate(g, ValidateOptions { triangulation: true }).ok
}

/// True when some local-orientation gauge makes every signature zero.
fn orientable(g: &EmbeddedGraph) -> bool {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for d in g.rotation(u) {
                let want = side[u] ^ d.reversing as u8;
                if side[d.to] == u8::MAX {
                    side[d.to] = want;
                    stack.push(d.to);
                } else if side[d.to] != want {
                    return false;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// faces

/// Traces all faces. Each face is reported once, as the cyclic sequence of
/// vertices along its boundary walk.
pub fn trace_faces(g: &EmbeddedGraph) -> Result<Vec<Vec<usize>>, SurfaceError> {
    g.check_structure()?;
    let n = g.n();
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + g.rotation(v).len();
    }
    let pos: Vec<HashMap<usize, usize>> = (0..n)
        .map(|v| g.rotation(v).iter().enumerate().map(|(i, d)| (d.to, i)).collect())
        .collect();
    // state = (offset[u] + i) * 2 + flag: dart from u to rotation(u)[i]
    let total = offset[n] * 2;
    let mut visited = vec![false; total];
    let step = |state: usize| -> usize {
        let flag = state & 1;
        let dart = state >> 1;
        let u = offset.partition_point(|&o| o <= dart) - 1;
        let i = dart - offset[u];
        let d = g.rotation(u)[i];
        let v = d.to;
        let f = flag ^ d.reversing as usize;
        let j = pos[v][&u];
        let k = g.rotation(v).len();
        let nj = if f == 0 { (j + 1) % k } else { (j + k - 1) % k };
        ((offset[v] + nj) << 1) | f
    };
    let mirror = |state: usize| -> usize {
        let flag = state & 1;
        let dart = state >> 1;
        let u = offset.partition_point(|&o| o <= dart) - 1;
        let d = g.rotation(u)[dart - offset[u]];
        let j = pos[d.to][&u];
        ((offset[d.to] + j) << 1) | (flag ^ 1 ^ d.reversing as usize)
    };
    let tail = |state: usize| -> usize { offset.partition_point(|&o| o <= state >> 1) - 1 };

    let mut faces = Vec::new();
    for s in 0..total {
        if visited[s] {
            continue;
        }
        let mut walk = Vec::new();
        let mut orbit = Vec::new();
        let mut cur = s;
        loop {
            visited[cur] = true;
            orbit.push(cur);
            walk.push(tail(cur));
            cur = step(cur);
            if cur == s {
                break;
            }
        }
        for &st in &orbit {
            let m = mirror(st);
            if !visited[m] {
                let mut c = m;
                while !visited[c] {
                    visited[c] = true;
                    c = step(c);
                }
            }
        }
        faces.push(walk);
    }
    Ok(faces)
}

// ---------------------------------------------------------------------------
// cycles

/// A cycle of an embedded graph with its cached length parity and
/// signature parity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub odd_length: bool,
    pub odd_signature: bool,
}

impl CycleWitness {
    pub fn new(g: &EmbeddedGraph, vertices: Vec<usize>) -> Result<Self, SurfaceError> {
        let k = vertices.len();
        if k < 3 {
            return Err(SurfaceError::NotACycle(format!("{vertices:?} is too short")));
        }
        let mut seen = BTreeSet::new();
        if !vertices.iter().all(|&v| v < g.n() && seen.insert(v)) {
            return Err(SurfaceError::NotACycle(format!("{vertices:?} repeats or leaves range")));
        }
        let mut odd_signature = false;
        for i in 0..k {
            let (u, v) = (vertices[i], vertices[(i + 1) % k]);
            match g.signature(u, v) {
                Some(s) => odd_signature ^= s,
                None => return Err(SurfaceError::NotACycle(format!("{u}-{v} is not an edge"))),
            }
        }
        Ok(CycleWitness {
            odd_length: k % 2 == 1,
            odd_signature,
            vertices,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// The path from `v1` to `v2` along the cycle that avoids `v3`.
    pub fn segment(&self, v1: usize, v2: usize, v3: usize) -> Result<Segment, SurfaceError> {
        segment_of(&self.vertices, v1, v2, v3)
    }
}

/// A path along a cycle, as returned by [`CycleWitness::segment`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub path: Vec<usize>,
}

impl Segment {
    pub fn edge_count(&self) -> usize {
        self.path.len() - 1
    }

    pub fn is_odd(&self) -> bool {
        self.edge_count() % 2 == 1
    }
}

/// `C[v1 v2 | v3]` on a cyclic vertex sequence.
pub fn segment_of(cycle: &[usize], v1: usize, v2: usize, v3: usize) -> Result<Segment, SurfaceError> {
    let k = cycle.len();
    let at = |v: usize| cycle.iter().position(|&x| x == v).ok_or(SurfaceError::NotOnCycle(v));
    let (i1, i2, i3) = (at(v1)?, at(v2)?, at(v3)?);
    if i1 == i2 || i2 == i3 || i1 == i3 {
        return Err(SurfaceError::NotACycle("segment endpoints must be distinct".into()));
    }
    let forward: Vec<usize> = {
        let mut p = vec![cycle[i1]];
        let mut i = i1;
        while i != i2 {
            i = (i + 1) % k;
            p.push(cycle[i]);
        }
        p
    };
    if !forward.contains(&v3) {
        return Ok(Segment { path: forward });
    }
    let mut p = vec![cycle[i1]];
    let mut i = i1;
    while i != i2 {
        i = (i + k - 1) % k;
        p.push(cycle[i]);
    }
    Ok(Segment { path: p })
}

/// The link cycle of `v`: its neighbours in rotation order.
pub fn link_cycle(g: &EmbeddedGraph, v: usize) -> Result<CycleWitness, SurfaceError> {
    if v >= g.n() {
        return Err(SurfaceError::OutOfRange(v));
    }
    let d = g.degree(v);
    if d < 3 {
        return Err(SurfaceError::DegreeTooSmall(v, d));
    }
    let verts = g.rotation(v).iter().map(|d| d.to).collect();
    CycleWitness::new(g, verts)
}

pub fn is_contractible(g: &EmbeddedGraph, c: &CycleWitness) -> Result<bool, SurfaceError> {
    // re-derive from the graph so a stale witness is caught
    let fresh = CycleWitness::new(g, c.vertices.clone())?;
    Ok(!fresh.odd_signature)
}

/// Vertices strictly inside the disk bounded by a contractible cycle.
///
/// Faces are flood-filled on both sides of the cycle; the side whose closure
/// has Euler characteristic 1 is the disk.
pub fn interior_vertices(g: &EmbeddedGraph, c: &CycleWitness) -> Result<Vec<usize>, SurfaceError> {
    if !is_contractible(g, c)? {
        return Err(SurfaceError::NotContractible);
    }
    let walks = trace_faces(g)?;
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let k = c.len();
    let cycle_edges: BTreeSet<(usize, usize)> = (0..k)
        .map(|i| key(c.vertices[i], c.vertices[(i + 1) % k]))
        .collect();

    let mut edge_faces: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (fi, w) in walks.iter().enumerate() {
        for i in 0..w.len() {
            edge_faces.entry(key(w[i], w[(i + 1) % w.len()])).or_default().push(fi);
        }
    }
    let mut region = vec![usize::MAX; walks.len()];
    let mut regions = 0;
    for s in 0..walks.len() {
        if region[s] != usize::MAX {
            continue;
        }
        region[s] = regions;
        let mut stack = vec![s];
        while let Some(f) = stack.pop() {
            let w = &walks[f];
            for i in 0..w.len() {
                let e = key(w[i], w[(i + 1) % w.len()]);
                if cycle_edges.contains(&e) {
                    continue;
                }
                for &h in &edge_faces[&e] {
                    if region[h] == usize::MAX {
                        region[h] = regions;
                        stack.push(h);
                    }
                }
            }
        }
        regions += 1;
    }

    let on_cycle: BTreeSet<usize> = c.vertices.iter().copied().collect();
    let mut disks = Vec::new();
    for r in 0..regions {
        let mut vs = BTreeSet::new();
        let mut es = BTreeSet::new();
        let mut fs = 0i64;
        for (fi, w) in walks.iter().enumerate() {
            if region[fi] != r {
                continue;
            }
            fs += 1;
            for i in 0..w.len() {
                vs.insert(w[i]);
                es.insert(key(w[i], w[(i + 1) % w.len()]));
            }
        }
        if vs.len() as i64 - es.len() as i64 + fs == 1 {
            disks.push(vs.difference(&on_cycle).copied().collect::<Vec<_>>());
        }
    }
    match disks.len() {
        1 => Ok(disks.pop().expect("one")),
        m => Err(SurfaceError::NotACycle(format!(
            "expected exactly one disk side, found {m} among {regions} regions"
        ))),
    }
}

/// Result of the niceness test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Niceness {
    Nice,
    NotNice { triangle: [usize; 3], inside: usize },
}

impl Niceness {
    pub fn is_nice(&self) -> bool {
        matches!(self, Niceness::Nice)
    }
}

/// All triangles `u < v < w` of a graph, lexicographic.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            let common = g.neighbor_set(u).intersection(g.neighbor_set(v));
            for w in common.iter().filter(|&w| w > v) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

/// A triangulation is nice when no contractible triangle has a vertex inside.
pub fn is_nice(g: &EmbeddedGraph) -> Result<Niceness, SurfaceError> {
    let faces: BTreeSet<[usize; 3]> = g.face_triangles()?.into_iter().collect();
    for t in triangles(g.graph()) {
        if faces.contains(&t) {
            continue;
        }
        let c = CycleWitness::new(g, t.to_vec())?;
        if c.odd_signature {
            continue;
        }
        let inside = interior_vertices(g, &c)?;
        if let Some(&x) = inside.first() {
            return Ok(Niceness::NotNice { triangle: t, inside: x });
        }
    }
    Ok(Niceness::Nice)
}

/// Mask helper used by callers that work with vertex subsets.
pub fn vertex_mask(n: usize, vs: &[usize]) -> BitSet {
    BitSet::from_iter(n, vs.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The six-vertex triangulation of the projective plane (K6).
    pub(crate) fn k6() -> EmbeddedGraph {
        let faces = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        EmbeddedGraph::from_triangles(6, &faces).unwrap()
    }

    fn tetrahedron_sphere() -> EmbeddedGraph {
        let rot = |v: &[usize]| v.iter().map(|&to| Dart { to, reversing: false }).collect();
        EmbeddedGraph::from_rotations(vec![
            rot(&[1, 2, 3]),
            rot(&[0, 3, 2]),
            rot(&[0, 1, 3]),
            rot(&[0, 2, 1]),
        ])
        .unwrap()
    }

    #[test]
    fn k6_validates_with_ten_triangles() {
        let g = k6();
        let r = validate(&g, ValidateOptions { triangulation: true });
        assert!(r.ok, "{:?}", r.violations);
        assert_eq!(r.faces, Some(10));
        assert_eq!(r.euler_characteristic, Some(1));
        assert_eq!(g.edge_count(), 15);
        let walks = trace_faces(&g).unwrap();
        assert_eq!(walks.len(), 10);
        assert!(walks.iter().all(|w| w.len() == 3));
        // exactly the input triangles come back
        let mut tri = g.face_triangles().unwrap();
        tri.dedup();
        assert_eq!(tri.len(), 10);
    }

    #[test]
    fn k6_has_a_reversing_edge() {
        let g = k6();
        let rev = g.graph().edges().filter(|&(u, v)| g.signature(u, v).unwrap()).count();
        assert!(rev > 0);
    }

    #[test]
    fn pprs_round_trip_on_k6() {
        let g = k6();
        let text = write_pprs(&g);
        let h = parse_pprs(&text).unwrap();
        assert_eq!(g, h);
        assert_eq!(write_pprs(&h), text);
    }

    #[test]
    fn parse_rejects_out_of_range_neighbour() {
        let text = "pprs 1\nvertices 6\nrot 0: 7+\n";
        let err = parse_pprs(text).unwrap_err();
        assert!(err.to_string().contains("id out of range"), "{err}");
    }

    #[test]
    fn parse_rejects_duplicate_vertex_and_bad_syntax() {
        let dup = "pprs 1\nvertices 2\nrot 0: 1+\nrot 0: 1+\n";
        assert!(matches!(parse_pprs(dup), Err(ParseError::DuplicateVertex { vertex: 0, .. })));
        let bad = "pprs 1\nvertices 2\nrot 0: 1*\n";
        assert!(matches!(parse_pprs(bad), Err(ParseError::Syntax { line: 3, .. })));
        assert!(matches!(parse_pprs("pprs 2\n"), Err(ParseError::Syntax { line: 1, .. })));
    }

    #[test]
    fn single_vertex_parses_then_fails_validation() {
        let g = parse_pprs("pprs 1\nvertices 1\n# nothing else\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert!(!validate(&g, ValidateOptions::default()).ok);
    }

    #[test]
    fn sphere_tetrahedron_reports_euler_two() {
        let r = validate(&tetrahedron_sphere(), ValidateOptions::default());
        assert!(!r.ok);
        assert!(r.violations.iter().any(|v| v.rule == "euler" && v.locus.contains("χ = 2")));
    }

    #[test]
    fn missing_reciprocal_entry_is_flagged() {
        let text = "pprs 1\nvertices 3\nrot 0: 1+ 2+\nrot 1: 2+\nrot 2: 0+ 1+\n";
        let g = parse_pprs(text).unwrap();
        let r = validate(&g, ValidateOptions::default());
        assert!(r.violations.iter().any(|v| v.rule == "reciprocity"));
    }

    #[test]
    fn single_edge_traces_one_face_of_length_two() {
        let g = parse_pprs("pprs 1\nvertices 2\nrot 0: 1+\nrot 1: 0+\n").unwrap();
        let walks = trace_faces(&g).unwrap();
        assert_eq!(walks.len(), 1);
        assert_eq!(walks[0].len(), 2);
    }

    #[test]
    fn k6_links_are_contractible_five_cycles() {
        let g = k6();
        for v in 0..6 {
            let c = link_cycle(&g, v).unwrap();
            assert_eq!(c.len(), 5);
            assert!(!c.contains(v));
            assert!(is_contractible(&g, &c).unwrap());
        }
    }

    #[test]
    fn faces_are_contractible_with_empty_interior() {
        let g = k6();
        for t in g.face_triangles().unwrap() {
            let c = CycleWitness::new(&g, t.to_vec()).unwrap();
            assert!(is_contractible(&g, &c).unwrap());
            assert!(interior_vertices(&g, &c).unwrap().is_empty());
        }
    }

    #[test]
    fn k6_is_nice_and_has_non_contractible_triangles() {
        let g = k6();
        assert!(is_nice(&g).unwrap().is_nice());
        let faces: BTreeSet<_> = g.face_triangles().unwrap().into_iter().collect();
        let others: Vec<_> = triangles(g.graph()).into_iter().filter(|t| !faces.contains(t)).collect();
        assert_eq!(others.len(), 10);
        for t in others {
            let c = CycleWitness::new(&g, t.to_vec()).unwrap();
            assert!(!is_contractible(&g, &c).unwrap());
            assert_eq!(interior_vertices(&g, &c), Err(SurfaceError::NotContractible));
        }
    }

    #[test]
    fn segments_follow_the_cycle() {
        let c = [1, 2, 3, 4, 5];
        let s = segment_of(&c, 1, 3, 5).unwrap();
        assert_eq!(s.path, vec![1, 2, 3]);
        assert!(!s.is_odd());
        let s = segment_of(&c, 1, 3, 2).unwrap();
        assert_eq!(s.path, vec![1, 5, 4, 3]);
        assert!(s.is_odd());
        assert_eq!(segment_of(&c, 1, 9, 2), Err(SurfaceError::NotOnCycle(9)));
    }

    #[test]
    fn gauge_flip_preserves_faces_and_validation() {
        let g = k6();
        for v in 0..6 {
            let h = g.flip_local_orientation(v);
            assert!(validate(&h, ValidateOptions { triangulation: true }).ok);
            assert!(same_embedding(&g, &h));
            for t in triangles(g.graph()) {
                let a = CycleWitness::new(&g, t.to_vec()).unwrap();
                let b = CycleWitness::new(&h, t.to_vec()).unwrap();
                assert_eq!(a.odd_signature, b.odd_signature);
            }
        }
    }
}
