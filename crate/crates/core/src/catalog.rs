//! The building blocks `D`, `E`, `h1`, `h2`, `h3` and the infinite families
//! of irreducible Eulerian triangulations assembled from them, with explicit
//! loose-odd-wheel witnesses; plus an irreducibility test and a registry of
//! externally supplied `.pprs` instances.
//!
//! A piece is a triangulated strip between two boundary paths `e1 p q e2`
//! (top and bottom). Frames are triangulated Möbius bands whose single hole
//! is a hexagon split into a top and a bottom path with `e1 = e2`. Family
//! members are quotients: boundary paths are identified position by
//! position and the result is numbered frame first, then pieces top to
//! bottom.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::detectors::{self, Certificate};
use crate::iso;
use crate::surface::{self, EmbeddedGraph, ValidateOptions};
use crate::transforms;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieceKind {
    D,
    E,
    H1,
    H2,
    H3,
}

/// A labelled fragment. Boundary paths and spines are given as indices into
/// `labels`. For the frames, `top`/`bottom` are the two halves of the hexagon
/// (their end vertices coincide).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub kind: PieceKind,
    pub labels: Vec<&'static str>,
    pub faces: Vec<[usize; 3]>,
    pub edges: Vec<(usize, usize)>,
    pub top: [usize; 4],
    pub bottom: [usize; 4],
    /// Dotted path from the top `p` to the bottom `p` (pieces only).
    pub spine: Vec<usize>,
}

impl Piece {
    pub fn index(&self, label: &str) -> usize {
        self.labels
            .iter()
            .position(|&l| l == label)
            .unwrap_or_else(|| panic!("no label {label}"))
    }
}

fn piece(
    kind: PieceKind,
    labels: &[&'static str],
    faces: &[[&str; 3]],
    extra_edges: &[(&str, &str)],
    top: [&str; 4],
    bottom: [&str; 4],
    spine: &[&str],
) -> Piece {
    let at = |l: &str| labels.iter().position(|&x| x == l).expect("known label");
    let faces: Vec<[usize; 3]> = faces.iter().map(|f| f.map(at)).collect();
    let mut edges: Vec<(usize, usize)> = faces
        .iter()
        .flat_map(|f| [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])])
        .chain(extra_edges.iter().map(|&(a, b)| (at(a), at(b))))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Piece {
        kind,
        labels: labels.to_vec(),
        faces,
        edges,
        top: top.map(at),
        bottom: bottom.map(at),
        spine: spine.iter().map(|&l| at(l)).collect(),
    }
}

pub fn build_piece(kind: PieceKind) -> Piece {
    match kind {
        // hexagon e b c e a d, with e = e1 = e2
        PieceKind::D => piece(
            kind,
            &["v", "a", "c", "b", "d", "e"],
            &[
                ["a", "v", "b"],
                ["v", "c", "b"],
                ["a", "b", "e"],
                ["e", "d", "c"],
                ["c", "v", "d"],
                ["v", "a", "d"],
            ],
            &[],
            ["e", "b", "c", "e"],
            ["e", "d", "a", "e"],
            &[],
        ),
        // hexagon a1 b c2 a2 d c1, with a = a1 = a2 and c = c1 = c2
        PieceKind::E => piece(
            kind,
            &["x", "y", "a", "c", "b", "d"],
            &[
                ["y", "x", "d"],
                ["c", "y", "d"],
                ["x", "a", "d"],
                ["x", "y", "b"],
                ["a", "x", "b"],
                ["y", "c", "b"],
            ],
            &[("a", "c")],
            ["c", "a", "b", "c"],
            ["c", "d", "a", "c"],
            &[],
        ),
        PieceKind::H1 => piece(
            kind,
            &["e1", "a2", "a3", "e2", "a5", "a6", "a7"],
            &[
                ["e1", "a2", "a5"],
                ["a2", "a7", "a5"],
                ["a2", "a3", "a7"],
                ["a3", "a6", "a7"],
                ["a5", "a7", "a6"],
                ["a3", "e2", "a6"],
            ],
            &[],
            ["e1", "a2", "a3", "e2"],
            ["e1", "a5", "a6", "e2"],
            &["a2", "a5"],
        ),
        PieceKind::H2 => piece(
            kind,
            &["e1", "y6", "y1", "e2", "y7", "y4", "y3"],
            &[
                ["e1", "y6", "y4"],
                ["e1", "y4", "y7"],
                ["y4", "y6", "y3"],
                ["y4", "y3", "y7"],
                ["y3", "y6", "y1"],
                ["y3", "y1", "y7"],
            ],
            &[("y1", "e2")],
            ["e1", "y6", "y1", "e2"],
            ["e1", "y7", "y1", "e2"],
            &["y6", "y4", "y7"],
        ),
        PieceKind::H3 => piece(
            kind,
            &["e1", "z2", "z6", "e2", "z7", "z3", "z4"],
            &[
                ["z2", "z6", "z3"],
                ["z2", "z3", "z7"],
                ["z3", "z6", "z4"],
                ["z3", "z4", "z7"],
                ["z4", "z6", "e2"],
                ["z4", "e2", "z7"],
            ],
            &[("e1", "z2")],
            ["e1", "z2", "z6", "e2"],
            ["e1", "z2", "z7", "e2"],
            &["z2"],
        ),
    }
}

fn h(kind: u8) -> PieceKind {
    match kind {
        1 => PieceKind::H1,
        2 => PieceKind::H2,
        _ => PieceKind::H3,
    }
}

// ---------------------------------------------------------------------------
// specs and entries

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    I16(Vec<u8>),
    I18(usize),
    I19(usize),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::I16(s) => {
                let parts: Vec<String> = s.iter().map(u8::to_string).collect();
                write!(f, "I16[{}]", parts.join(","))
            }
            FamilySpec::I18(n) => write!(f, "I18[{n}]"),
            FamilySpec::I19(m) => write!(f, "I19[{m}]"),
        }
    }
}

impl FamilySpec {
    /// Parses a family name and parameter list as used on the command line,
    /// e.g. `("i16", "1,2,3")` or `("i18", "2")`.
    pub fn parse(family: &str, params: &str) -> Result<Self, CatalogError> {
        let bad = || CatalogError::InvalidParams(format!("{family} {params}"));
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| usize::from_str(p.trim()).map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let spec = match family.to_ascii_lowercase().as_str() {
            "i16" => FamilySpec::I16(nums.iter().map(|&k| k.min(255) as u8).collect()),
            "i18" if nums.len() == 1 => FamilySpec::I18(nums[0]),
            "i19" if nums.len() == 1 => FamilySpec::I19(nums[0]),
            _ => return Err(bad()),
        };
        spec.check()?;
        Ok(spec)
    }

    fn check(&self) -> Result<(), CatalogError> {
        let ok = match self {
            FamilySpec::I16(s) => !s.is_empty() && s.iter().all(|k| (1..=3).contains(k)),
            FamilySpec::I18(n) => *n >= 1,
            FamilySpec::I19(m) => *m >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(CatalogError::InvalidParams(self.to_string()))
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("{0} is not a simple triangulation: {1}")]
    Degenerate(String, String),
    #[error("registry: {0}")]
    Registry(String),
    #[error("registry entry {name}: {reason}")]
    Audit { name: String, reason: String },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: Option<FamilySpec>,
    pub graph: EmbeddedGraph,
    /// Vertex names such as `v`, `h1#2.a7`.
    pub vertex_names: Vec<String>,
    pub known_certificate: Option<Certificate>,
    /// A proper 3-colouring where the construction predicts one.
    pub colouring: Option<Vec<u8>>,
    /// Edge counts of the consecutive parts of the witness path (see
    /// [`build_family`]).
    pub witness_segments: Vec<usize>,
}

// ---------------------------------------------------------------------------
// assembly

struct Assembly {
    parent: Vec<usize>,
    names: Vec<String>,
    faces: Vec<[usize; 3]>,
}

impl Assembly {
    fn new() -> Self {
        Assembly {
            parent: Vec::new(),
            names: Vec::new(),
            faces: Vec::new(),
        }
    }

    /// Adds a fresh copy of `p`; returns the slot of each of its labels.
    fn add(&mut self, p: &Piece, tag: &str) -> Vec<usize> {
        let base = self.parent.len();
        for (i, l) in p.labels.iter().enumerate() {
            self.parent.push(base + i);
            self.names
                .push(if tag.is_empty() { l.to_string() } else { format!("{tag}.{l}") });
        }
        self.faces
            .extend(p.faces.iter().map(|f| f.map(|i| base + i)));
        (base..base + p.labels.len()).collect()
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the earlier slot as representative so names stay frame-first
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    fn glue(&mut self, xs: &[usize], ys: &[usize]) {
        for (&x, &y) in xs.iter().zip(ys) {
            self.union(x, y);
        }
    }

    /// Numbers classes in slot order and builds the embedding.
    fn finish(mut self, what: &str) -> Result<(EmbeddedGraph, Vec<usize>, Vec<String>), CatalogError> {
        let slots = self.parent.len();
        let mut id = vec![usize::MAX; slots];
        let mut names = Vec::new();
        let mut slot_id = vec![0; slots];
        for s in 0..slots {
            let r = self.find(s);
            if id[r] == usize::MAX {
                id[r] = names.len();
                names.push(self.names[r].clone());
            }
            slot_id[s] = id[r];
        }
        let degenerate = |m: String| CatalogError::Degenerate(what.to_string(), m);
        let mut faces = Vec::with_capacity(self.faces.len());
        for f in &self.faces {
            let t = f.map(|s| slot_id[s]);
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(degenerate(format!("face {:?} collapses", f.map(|s| &self.names[s]))));
            }
            faces.push(t);
        }
        let g = EmbeddedGraph::from_triangles(names.len(), &faces).map_err(|e| degenerate(e.to_string()))?;
        let report = surface::validate(&g, ValidateOptions { triangulation: true });
        if !report.ok {
            return Err(degenerate(format!("{:?}", report.violations)));
        }
        Ok((g, slot_id, names))
    }
}

/// Deduplicates consecutive repeats in a vertex walk.
fn squash(walk: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for v in walk {
        if out.last() != Some(&v) {
            out.push(v);
        }
    }
    out
}

/// Builds a family member.
///
/// * `I16[s]`: pieces `h_{s_1} … h_{s_n}` stacked in the hexagon of `D`.
///   With an odd number of `h1` the spines form an odd `b`–`d` path `P`, and
///   `v + P` with hub `a` is the attached loose odd wheel; otherwise a
///   3-colouring is attached. Sequences whose gluing identifies two distinct
///   frame vertices (for instance `[2]` and `[3]`) do not give simple
///   triangulations and are rejected as degenerate.
/// * `I18[n]`: `h2, h3` repeated `n` times in the hexagon of `E`; the
///   interface edges form a `b`–`d` path of length `2n - 1`, closed by `x`,
///   with hub `y`.
/// * `I19[m]`: `m` pairs `h2, h3` placed in the hexagon of `E` with all their
///   ends on `c`; the `2m + 1` hexagons between consecutive boundaries are
///   triangulated so that every degree is even. The witness path runs from
///   `b` through the spines and across every gap to `d`; its pieces have
///   lengths `5, 4, 4, …` (first pair odd, later pairs even).
pub fn build_family(spec: &FamilySpec) -> Result<CatalogEntry, CatalogError> {
    spec.check()?;
    match spec {
        FamilySpec::I16(s) => build_i16(spec, s),
        FamilySpec::I18(n) => build_i18(spec, *n),
        FamilySpec::I19(m) => build_i19(spec, *m),
    }
}

fn entry(spec: &FamilySpec, graph: EmbeddedGraph, vertex_names: Vec<String>) -> CatalogEntry {
    CatalogEntry {
        name: spec.to_string(),
        spec: Some(spec.clone()),
        graph,
        vertex_names,
        known_certificate: None,
        colouring: None,
        witness_segments: Vec::new(),
    }
}

fn build_i16(spec: &FamilySpec, s: &[u8]) -> Result<CatalogEntry, CatalogError> {
    let frame = build_piece(PieceKind::D);
    let mut asm = Assembly::new();
    let fs = asm.add(&frame, "");
    let slot = |p: &Piece, slots: &[usize], idx: &[usize]| -> Vec<usize> {
        let _ = p;
        idx.iter().map(|&i| slots[i]).collect()
    };
    let mut upper = slot(&frame, &fs, &frame.top);
    let mut spines = Vec::new();
    for (k, &kind) in s.iter().enumerate() {
        let p = build_piece(h(kind));
        let ps = asm.add(&p, &format!("h{kind}#{}", k + 1));
        asm.glue(&upper, &slot(&p, &ps, &p.top));
        upper = slot(&p, &ps, &p.bottom);
        spines.push(slot(&p, &ps, &p.spine));
    }
    asm.glue(&upper, &slot(&frame, &fs, &frame.bottom));
    let (g, id, names) = asm.finish(&spec.to_string())?;
    let mut e = entry(spec, g, names);

    let ones = s.iter().filter(|&&k| k == 1).count();
    if ones % 2 == 1 {
        let path = squash(spines.iter().flatten().map(|&sl| id[sl]));
        let v = id[fs[frame.index("v")]];
        let a = id[fs[frame.index("a")]];
        let (b, d) = (path[0], *path.last().expect("non-empty"));
        e.witness_segments = vec![path.len() - 1];
        let mut cycle = vec![v];
        cycle.extend(path);
        e.known_certificate = Some(Certificate::loose_odd_wheel(a, cycle, [v, b, d]));
    } else {
        e.colouring = transforms::three_colour(e.graph.graph());
    }
    Ok(e)
}

fn build_i18(spec: &FamilySpec, n: usize) -> Result<CatalogEntry, CatalogError> {
    let frame = build_piece(PieceKind::E);
    let mut asm = Assembly::new();
    let fs = asm.add(&frame, "");
    let pick = |slots: &[usize], idx: &[usize]| -> Vec<usize> { idx.iter().map(|&i| slots[i]).collect() };
    let mut upper = pick(&fs, &frame.top);
    let mut interfaces = Vec::new();
    for k in 0..2 * n {
        let kind = if k % 2 == 0 { PieceKind::H2 } else { PieceKind::H3 };
        let p = build_piece(kind);
        let tag = format!("{}#{}", if k % 2 == 0 { "h2" } else { "h3" }, k / 2 + 1);
        let ps = asm.add(&p, &tag);
        asm.glue(&upper, &pick(&ps, &p.top));
        upper = pick(&ps, &p.bottom);
        if k + 1 < 2 * n {
            interfaces.push(upper.clone());
        }
    }
    asm.glue(&upper, &pick(&fs, &frame.bottom));
    let (g, id, names) = asm.finish(&spec.to_string())?;
    let mut e = entry(spec, g, names);

    // interface k (1-based) contributes its edge p-q; odd interfaces are
    // entered at q, even ones at p
    let walk = interfaces.iter().enumerate().flat_map(|(k, iface)| {
        let (p, q) = (id[iface[1]], id[iface[2]]);
        if k % 2 == 0 {
            [q, p]
        } else {
            [p, q]
        }
    });
    let path = squash(walk);
    let x = id[fs[frame.index("x")]];
    let y = id[fs[frame.index("y")]];
    let (b, d) = (path[0], *path.last().expect("non-empty"));
    e.witness_segments = vec![path.len() - 1];
    let mut cycle = vec![x];
    cycle.extend(path);
    e.known_certificate = Some(Certificate::loose_odd_wheel(y, cycle, [x, b, d]));
    Ok(e)
}

/// Faces filling the hexagon between `upper = (c, p, q, c)` and
/// `lower = (c, p', q', c)`; `cross` picks the diagonal `q p'` instead of
/// `p q'`.
fn gap_faces(c: usize, upper: &[usize], lower: &[usize], cross: bool) -> Vec<[usize; 3]> {
    let (p, q, p2, q2) = (upper[1], upper[2], lower[1], lower[2]);
    let mut f = vec![[c, p, p2], [c, q, q2]];
    if cross {
        f.extend([[p, q, p2], [q, q2, p2]]);
    } else {
        f.extend([[p, q, q2], [p, q2, p2]]);
    }
    f
}

fn build_i19(spec: &FamilySpec, m: usize) -> Result<CatalogEntry, CatalogError> {
    let frame = build_piece(PieceKind::E);
    let mut base = Assembly::new();
    let fs = base.add(&frame, "");
    let c = fs[frame.index("c")];
    let pick = |slots: &[usize], idx: &[usize]| -> Vec<usize> { idx.iter().map(|&i| slots[i]).collect() };
    let mut boundaries = vec![pick(&fs, &frame.top)];
    let mut spines = Vec::new();
    let mut starts = Vec::new();
    for k in 0..2 * m {
        let kind = if k % 2 == 0 { PieceKind::H2 } else { PieceKind::H3 };
        let p = build_piece(kind);
        let tag = format!("{}#{}", if k % 2 == 0 { "h2" } else { "h3" }, k / 2 + 1);
        let ps = base.add(&p, &tag);
        base.union(ps[p.index("e1")], c);
        base.union(ps[p.index("e2")], c);
        boundaries.push(pick(&ps, &p.top));
        boundaries.push(pick(&ps, &p.bottom));
        spines.push(pick(&ps, &p.spine));
        starts.push(ps[p.spine[0]]);
    }
    boundaries.push(pick(&fs, &frame.bottom));

    let gaps = 2 * m + 1;
    let mut found = Vec::new();
    let mut last_err = None;
    for mask in 0u32..(1 << gaps) {
        let mut asm = Assembly {
            parent: base.parent.clone(),
            names: base.names.clone(),
            faces: base.faces.clone(),
        };
        for gi in 0..gaps {
            let (upper, lower) = (&boundaries[2 * gi], &boundaries[2 * gi + 1]);
            asm.faces.extend(gap_faces(c, upper, lower, mask >> gi & 1 == 1));
        }
        match asm.finish(&spec.to_string()) {
            Ok((g, id, names)) if detectors::is_eulerian(g.graph()) => found.push((mask, g, id, names)),
            Ok(_) => {}
            Err(e) => last_err = Some(e),
        }
    }
    let (mask, g, id, names) = match found.len() {
        1 => found.pop().expect("one"),
        0 => {
            return Err(last_err.unwrap_or_else(|| {
                CatalogError::Degenerate(spec.to_string(), "no even-degree completion".into())
            }))
        }
        k => {
            return Err(CatalogError::Degenerate(
                spec.to_string(),
                format!("{k} even-degree completions; expected exactly one"),
            ))
        }
    };
    let _ = mask;
    let mut e = entry(spec, g, names);

    let b = id[fs[frame.index("b")]];
    let d = id[fs[frame.index("d")]];
    let mut walk = vec![b];
    walk.extend(spines.iter().flatten().map(|&s| id[s]));
    walk.push(d);
    let path = squash(walk);
    // pair boundaries: the start of every h2 after the first, and d
    let mut cuts: Vec<usize> = starts
        .iter()
        .step_by(2)
        .skip(1)
        .map(|&s| path.iter().position(|&v| v == id[s]).expect("on path"))
        .collect();
    cuts.push(path.len() - 1);
    let mut prev = 0;
    e.witness_segments = cuts
        .iter()
        .map(|&cut| {
            let len = cut - prev;
            prev = cut;
            len
        })
        .collect();
    let x = id[fs[frame.index("x")]];
    let y = id[fs[frame.index("y")]];
    let mut cycle = vec![x];
    cycle.extend(path);
    e.known_certificate = Some(Certificate::loose_odd_wheel(y, cycle, [x, b, d]));
    Ok(e)
}

/// No even-contraction site and no deletable octahedron.
pub fn is_irreducible(g: &EmbeddedGraph) -> bool {
    transforms::find_even_contractions(g).is_empty() && transforms::find_octahedron_deletions(g).is_empty()
}

// ---------------------------------------------------------------------------
// registry

/// Registry entries that must come out perfect and K4-free; every other name
/// must carry a loose odd wheel.
pub const PERFECT_REGISTRY_NAMES: [&str; 6] = ["I5", "I8", "I11", "I13", "I15", "I20"];

/// Loads a registry manifest: one `<name> <file.pprs>` per line (`#`
/// comments), names `I1` … `I20`, paths relative to the manifest. Every entry
/// is audited: valid Eulerian triangulation, irreducible, the expected
/// classification, and `I1` isomorphic to `I16[1]`.
pub fn registry_load(manifest: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let text = std::fs::read_to_string(manifest)
        .map_err(|e| CatalogError::Registry(format!("{}: {e}", manifest.display())))?;
    let dir = manifest.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(CatalogError::Registry(format!("line {}: expected `<name> <file>`", ln + 1)));
        }
        let name = parts[0].to_string();
        let valid_name = name
            .strip_prefix('I')
            .and_then(|k| k.parse::<usize>().ok())
            .is_some_and(|k| (1..=20).contains(&k));
        if !valid_name {
            return Err(CatalogError::Registry(format!("line {}: unknown entry name {name}", ln + 1)));
        }
        let path = dir.join(parts[1]);
        let audit = |reason: String| CatalogError::Audit {
            name: name.clone(),
            reason,
        };
        let body = std::fs::read_to_string(&path).map_err(|e| audit(format!("{}: {e}", path.display())))?;
        let g = surface::parse_pprs(&body).map_err(|e| audit(e.to_string()))?;
        out.push(audit_entry(&name, g)?);
    }
    Ok(out)
}

/// Applies the registry audit to one named graph.
pub fn audit_entry(name: &str, g: EmbeddedGraph) -> Result<CatalogEntry, CatalogError> {
    let audit = |reason: String| CatalogError::Audit {
        name: name.to_string(),
        reason,
    };
    let report = detectors::classify(&g).map_err(|e| audit(e.to_string()))?;
    if !report.eulerian {
        return Err(audit("not Eulerian".into()));
    }
    if !is_irreducible(&g) {
        return Err(audit("not irreducible".into()));
    }
    if PERFECT_REGISTRY_NAMES.contains(&name) {
        if !(report.perfect && report.k4.is_none()) {
            return Err(audit("expected perfect and K4-free".into()));
        }
    } else {
        match &report.loose_odd_wheel {
            Some(c) if detectors::verify(g.graph(), c) == Ok(true) => {}
            _ => return Err(audit("expected a loose odd wheel".into())),
        }
    }
    if name == "I1" {
        let i16 = build_family(&FamilySpec::I16(vec![1]))?;
        if !iso::isomorphic(g.graph(), i16.graph.graph()) {
            return Err(audit("not isomorphic to I16[1]".into()));
        }
    }
    Ok(CatalogEntry {
        name: name.to_string(),
        spec: None,
        vertex_names: (0..g.n()).map(|v| v.to_string()).collect(),
        known_certificate: report.loose_odd_wheel.clone(),
        colouring: None,
        witness_segments: Vec::new(),
        graph: g,
    })
}
