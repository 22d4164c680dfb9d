//! Acceptance suite. Each test prints a single `[PASS]` / `[FAIL]` line to
//! the terminal (bypassing the harness's output capture) and then asserts.

use num_traits::Zero;
use projtri::catalog::{build_family, CatalogError, FamilySpec};
use projtri::corpus::{build_corpus, CorpusConfig, CorpusItem};
use projtri::detectors::{self, classify, find_loose_odd_wheel, is_eulerian, verify, CertKind, Certificate};
use projtri::oracle::{self, Caps};
use projtri::surface::{
    is_contractible, is_nice, link_cycle, same_embedding, validate, CycleWitness, EmbeddedGraph,
    ValidateOptions,
};
use projtri::transforms::{
    attach_octahedron, delete_octahedron, even_contract, even_split, find_even_contractions,
    find_octahedron_deletions, is_proper_colouring, three_colour,
};
use projtri::Graph;
use std::io::Write;
use std::ops::ControlFlow;
use std::sync::OnceLock;
use std::time::Instant;

fn corpus() -> &'static [CorpusItem] {
    static CORPUS: OnceLock<Vec<CorpusItem>> = OnceLock::new();
    CORPUS.get_or_init(|| build_corpus(&CorpusConfig::default()))
}

fn report(id: u8, title: &str, started: Instant, detail: String, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut err = std::io::stderr().lock();
    let _ = writeln!(
        err,
        "[{status}] criterion {id}: {title} ({detail}; {:.1}s)",
        started.elapsed().as_secs_f64()
    );
    for f in failures.iter().take(12) {
        let _ = writeln!(err, "         {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {} problem(s)", failures.len());
}

/// Triangulation of the projective plane with all degrees even, and the
/// Euler and face-count identities checked explicitly.
fn surface_problems(g: &EmbeddedGraph) -> Option<String> {
    let r = validate(g, ValidateOptions { triangulation: true });
    if !r.ok {
        return Some(format!("validate: {:?}", r.violations));
    }
    if r.euler_characteristic != Some(1) {
        return Some(format!("χ = {:?}", r.euler_characteristic));
    }
    let (faces, edges) = (r.faces.unwrap_or(0), r.edges);
    if 3 * faces != 2 * edges {
        return Some(format!("3F = {} but 2E = {}", 3 * faces, 2 * edges));
    }
    if !is_eulerian(g.graph()) {
        return Some("odd degree".into());
    }
    None
}

#[test]
fn criterion_1_classification_matches_brute_force() {
    let started = Instant::now();
    let caps = Caps::default();
    let items = corpus();
    let mut failures = Vec::new();
    if items.len() < 200 {
        failures.push(format!("corpus has only {} graphs", items.len()));
    }
    let (mut t_perfect, mut imperfect) = (0, 0);
    for it in items {
        let g = it.graph.graph();
        if it.graph.n() > 14 {
            failures.push(format!("{}: {} vertices", it.name, it.graph.n()));
        }
        if let Some(p) = surface_problems(&it.graph) {
            failures.push(format!("{}: {p}", it.name));
            continue;
        }
        let r = classify(&it.graph).expect("validated");
        let o = oracle::is_t_perfect_bruteforce(g, &caps).expect("within caps");
        if r.t_perfect != o.t_perfect {
            failures.push(format!("{}: classify {} vs polytope {}", it.name, r.t_perfect, o.t_perfect));
        }
        if let Some(w) = &o.witness {
            let system = oracle::tstab_system(g, &caps).unwrap();
            if !system.contains(w).unwrap() || oracle::ssp_membership(g, w, &caps).unwrap() {
                failures.push(format!("{}: witness not in TSTAB \\ SSP", it.name));
            }
        }
        let perfect_without_k4 = r.k4.is_none() && oracle::is_perfect_bruteforce(g, &caps).unwrap();
        let no_forbidden = r.loose_odd_wheel.is_none() && r.c7bar.is_none();
        if perfect_without_k4 != no_forbidden {
            failures.push(format!(
                "{}: perfect without K4 = {perfect_without_k4}, no wheel/C̄7 = {no_forbidden}",
                it.name
            ));
        }
        if o.t_perfect {
            t_perfect += 1;
        } else {
            imperfect += 1;
        }
    }
    report(
        1,
        "classification agrees with polytope integrality and with brute-force perfection",
        started,
        format!("{} graphs, {t_perfect} t-perfect, {imperfect} t-imperfect", items.len()),
        &failures,
    );
}

fn sequences(max_len: usize) -> Vec<Vec<u8>> {
    let mut all = Vec::new();
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|s: &Vec<u8>| {
                (1..=3u8).map(move |k| {
                    let mut t = s.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn verified_wheel(g: &Graph, cert: Option<&Certificate>) -> bool {
    cert.is_some_and(|c| c.kind == CertKind::LooseOddWheel && verify(g, c) == Ok(true))
}

#[test]
fn criterion_2_family_laws() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let (mut built, mut degenerate) = (0, 0);
    for s in sequences(4) {
        let spec = FamilySpec::I16(s.clone());
        let entry = match build_family(&spec) {
            Ok(e) => e,
            Err(CatalogError::Degenerate(..)) => {
                degenerate += 1;
                continue;
            }
            Err(e) => {
                failures.push(format!("{spec}: {e}"));
                continue;
            }
        };
        built += 1;
        let ones = s.iter().filter(|&&k| k == 1).count();
        let r = classify(&entry.graph).expect("family members validate");
        if r.t_perfect != (ones % 2 == 0) {
            failures.push(format!("{spec}: t-perfect = {} with {ones} ones", r.t_perfect));
        }
        if !r.t_perfect && !verified_wheel(entry.graph.graph(), r.loose_odd_wheel.as_ref()) {
            failures.push(format!("{spec}: no verifying wheel certificate"));
        }
    }
    for m in 1..=3 {
        for spec in [FamilySpec::I18(m), FamilySpec::I19(m)] {
            let entry = match build_family(&spec) {
                Ok(e) => e,
                Err(e) => {
                    failures.push(format!("{spec}: {e}"));
                    continue;
                }
            };
            built += 1;
            let g = entry.graph.graph();
            let r = classify(&entry.graph).expect("family members validate");
            if r.t_perfect {
                failures.push(format!("{spec}: classified t-perfect"));
            }
            if !verified_wheel(g, r.loose_odd_wheel.as_ref()) {
                failures.push(format!("{spec}: detector certificate does not verify"));
            }
            if !verified_wheel(g, entry.known_certificate.as_ref()) {
                failures.push(format!("{spec}: constructed witness does not verify"));
            }
        }
    }
    report(
        2,
        "I16 parity law; I18[n], I19[m] carry verifying loose odd wheels",
        started,
        format!("{built} instances, {degenerate} I16 sequences not constructible as simple triangulations"),
        &failures,
    );
}

#[test]
fn criterion_3_known_polytope_facts() {
    let started = Instant::now();
    let caps = Caps::default();
    let mut failures = Vec::new();
    let w5 = Graph::wheel(5);
    let c7bar = Graph::cycle(7).complement();

    let v = oracle::is_t_perfect_bruteforce(&w5, &caps).unwrap();
    if v.t_perfect {
        failures.push("W5 reported t-perfect".into());
    }
    let third = oracle::uniform_point(6, 1, 3);
    if v.witness.as_ref() != Some(&third) {
        failures.push(format!("W5 witness {:?} is not the all-1/3 point", v.witness.map(|w| oracle::format_point(&w))));
    }
    let system = oracle::tstab_system(&w5, &caps).unwrap();
    if !system.contains(&third).unwrap() || oracle::ssp_membership(&w5, &third, &caps).unwrap() {
        failures.push("all-1/3 point of W5 is not in TSTAB \\ SSP".into());
    }
    if oracle::is_t_perfect_bruteforce(&c7bar, &caps).unwrap().t_perfect {
        failures.push("C̄7 reported t-perfect".into());
    }
    if !oracle::is_t_perfect_bruteforce(&Graph::cycle(5), &caps).unwrap().t_perfect {
        failures.push("C5 reported t-imperfect".into());
    }
    for (name, g) in [("W5", &w5), ("C̄7", &c7bar)] {
        for v in 0..g.n() {
            let h = g.delete_vertex(v);
            let verdict = oracle::is_t_perfect_bruteforce(&h, &caps).unwrap();
            if !verdict.t_perfect {
                failures.push(format!("{name} - {v} reported t-imperfect"));
            }
            if verdict.fractional_vertex.is_some() || verdict.witness.is_some() {
                failures.push(format!("{name} - {v} carries a fractional witness"));
            }
        }
    }
    // exactness: the all-1/3 point meets the triangle rows of W5 with equality
    let tight = system
        .rows
        .iter()
        .filter(|r| r.tag == oracle::RowTag::OddCycle && r.support.len() == 3)
        .all(|r| (r.lhs(&third) - &r.rhs).is_zero());
    if !tight {
        failures.push("triangle rows not tight at the all-1/3 point".into());
    }
    report(
        3,
        "W5 and C̄7 minimally t-imperfect, C5 t-perfect, exact witness",
        started,
        "13 single-vertex deletions".into(),
        &failures,
    );
}

#[test]
fn criterion_4_transform_round_trips() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let (mut contractions, mut attachments) = (0, 0);
    for it in corpus() {
        let g = &it.graph;
        let n = g.n();
        for site in find_even_contractions(g) {
            contractions += 1;
            let tag = format!("{} at {site:?}", it.name);
            let (g2, e1) = match even_contract(g, &site) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(format!("{tag}: contract failed: {e}"));
                    continue;
                }
            };
            if let Some(p) = surface_problems(&g2) {
                failures.push(format!("{tag}: contraction output: {p}"));
            }
            let y = site.x.min(site.b).min(site.b2);
            let ym = e1.map[y].expect("y survives");
            let (a, a2) = (e1.map[site.a].unwrap(), e1.map[site.a2].unwrap());
            let (g3, _) = match even_split(&g2, ym, a, a2) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(format!("{tag}: split failed: {e}"));
                    continue;
                }
            };
            if let Some(p) = surface_problems(&g3) {
                failures.push(format!("{tag}: split output: {p}"));
            }
            // recorded relabelling: the contraction map on the untouched
            // vertices, the new centre at n - 2, and b, b' onto y's id and
            // n - 1 in the order the gates determine
            let mut perm: Vec<usize> = e1.map.iter().map(|m| m.unwrap_or(usize::MAX)).collect();
            perm[site.x] = n - 2;
            let mut matched = false;
            for (pb, pb2) in [(ym, n - 1), (n - 1, ym)] {
                perm[site.b] = pb;
                perm[site.b2] = pb2;
                if same_embedding(&g.relabeled(&perm), &g3) {
                    matched = true;
                    break;
                }
            }
            if !matched {
                failures.push(format!("{tag}: split after contract differs from the source"));
            }
        }
        for f in g.face_triangles().expect("triangulation") {
            attachments += 1;
            let tag = format!("{} at face {f:?}", it.name);
            let (g2, _) = match attach_octahedron(g, f) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(format!("{tag}: attach failed: {e}"));
                    continue;
                }
            };
            if let Some(p) = surface_problems(&g2) {
                failures.push(format!("{tag}: attach output: {p}"));
            }
            if !find_octahedron_deletions(&g2).contains(&f) {
                failures.push(format!("{tag}: attached octahedron not detected"));
            }
            match delete_octahedron(&g2, f) {
                Ok((g3, e)) => {
                    let perm: Vec<usize> = (0..n).map(|v| e.map[v].expect("frame kept")).collect();
                    if surface_problems(&g3).is_some() || !same_embedding(&g.relabeled(&perm), &g3) {
                        failures.push(format!("{tag}: delete after attach differs from the source"));
                    }
                }
                Err(e) => failures.push(format!("{tag}: delete failed: {e}")),
            }
        }
    }
    report(
        4,
        "split∘contract and delete∘attach reproduce the source; outputs valid",
        started,
        format!("{contractions} contraction sites, {attachments} attachments"),
        &failures,
    );
}

/// Chords of the path `p`, as index pairs `(i, j)` with `j >= i + 2`.
fn path_chords(g: &Graph, p: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..p.len() {
        for j in i + 2..p.len() {
            if g.has_edge(p[i], p[j]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// The two paths from `u` to `w` along the link cycle of `v`.
fn link_paths(link: &[usize], u: usize, w: usize) -> [Vec<usize>; 2] {
    let k = link.len();
    let i = link.iter().position(|&x| x == u).expect("u in link");
    let j = link.iter().position(|&x| x == w).expect("w in link");
    let walk = |step: usize| {
        let mut p = vec![u];
        let mut t = i;
        while t != j {
            t = (t + step) % k;
            p.push(link[t]);
        }
        p
    };
    [walk(1), walk(k - 1)]
}

/// Checks four surface-layer statements over the corpus:
///
/// * link cycles are contractible Hamilton cycles of the neighbourhood;
/// * on a nice triangulation, for consecutive `u, v, w` on an induced
///   non-contractible cycle, both paths from `u` to `w` around the link of
///   `v` are induced;
/// * an odd hole through a degree-4 vertex yields a loose odd wheel;
/// * a contractible odd hole yields a loose odd wheel.
///
/// The second statement is false as worded: a chord from an end of the path
/// (`u` or `w`) to an inner path vertex closes a non-contractible triangle
/// with `v`, which niceness does not forbid. The corpus has many such
/// chords, so this criterion reports FAIL with the first counterexamples.
/// The part that does hold, no chord between two inner vertices, is counted
/// separately and must hold without exception.
#[test]
fn criterion_5_surface_layer_properties() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let (mut nice_graphs, mut link_checks, mut deg4_holes, mut contractible_holes) = (0, 0, 0, 0);
    let (mut end_chord_paths, mut end_chord_graphs, mut inner_chords) = (0, 0, 0);
    for it in corpus() {
        let eg = &it.graph;
        let g = eg.graph();
        for v in 0..eg.n() {
            match link_cycle(eg, v) {
                Ok(c) => {
                    let mut vs = c.vertices.clone();
                    vs.sort_unstable();
                    let mut nb = g.neighbors(v).to_vec();
                    nb.sort_unstable();
                    if vs != nb || is_contractible(eg, &c) != Ok(true) {
                        failures.push(format!("{}: link cycle of {v} is not a contractible Hamilton cycle of N(v)", it.name));
                    }
                }
                Err(e) => failures.push(format!("{}: link cycle of {v}: {e}", it.name)),
            }
        }
        let nice = is_nice(eg).expect("triangulation").is_nice();
        nice_graphs += usize::from(nice);
        let wheel = find_loose_odd_wheel(g);
        if let Some(c) = &wheel {
            if verify(g, c) != Ok(true) {
                failures.push(format!("{}: detector certificate does not verify", it.name));
            }
        }
        let mut hole_with_deg4 = false;
        let mut contractible_hole = false;
        let mut graph_has_end_chord = false;
        let mut end_chord_example = None;
        let _ = detectors::for_each_induced_cycle(g, |c| {
            let cw = CycleWitness::new(eg, c.to_vec()).expect("a cycle");
            let contractible = !cw.odd_signature;
            let k = c.len();
            if nice && !contractible && k >= 4 {
                for i in 0..k {
                    let (u, v, w) = (c[(i + k - 1) % k], c[i], c[(i + 1) % k]);
                    let link: Vec<usize> = eg.rotation(v).iter().map(|d| d.to).collect();
                    for p in link_paths(&link, u, w) {
                        link_checks += 1;
                        let chords = path_chords(g, &p);
                        let last = p.len() - 1;
                        if chords.iter().any(|&(a, b)| a > 0 && b < last) {
                            inner_chords += 1;
                            failures.push(format!("{}: cycle {c:?}, link of {v}: chord between inner path vertices", it.name));
                        }
                        if let Some(&(a, b)) = chords.iter().find(|&&(a, b)| a == 0 || b == last) {
                            end_chord_paths += 1;
                            graph_has_end_chord = true;
                            end_chord_example.get_or_insert_with(|| {
                                format!(
                                    "{}: cycle {c:?}, link of {v} from {u} to {w}: chord {}-{} (triangle {v}-{}-{} is non-contractible)",
                                    it.name, p[a], p[b], p[a], p[b]
                                )
                            });
                        }
                    }
                }
            }
            if k >= 5 && k % 2 == 1 {
                contractible_hole |= contractible;
                for i in 0..k {
                    let v = c[i];
                    if g.degree(v) != 4 {
                        continue;
                    }
                    hole_with_deg4 = true;
                    // the link of v is u, x, w, x': x is a hub on u, v, w
                    let (u, w) = (c[(i + k - 1) % k], c[(i + 1) % k]);
                    let x = g.neighbors(v).iter().copied().find(|&x| x != u && x != w).unwrap();
                    let cert = Certificate::loose_odd_wheel(x, c.to_vec(), [u, v, w]);
                    if verify(g, &cert) != Ok(true) {
                        failures.push(format!("{}: hub {x} on hole {c:?} does not verify", it.name));
                    }
                }
            }
            ControlFlow::Continue(())
        });
        if graph_has_end_chord {
            end_chord_graphs += 1;
            failures.extend(end_chord_example);
        }
        if hole_with_deg4 {
            deg4_holes += 1;
            if wheel.is_none() {
                failures.push(format!("{}: odd hole through a degree-4 vertex but no wheel found", it.name));
            }
        }
        if contractible_hole {
            contractible_holes += 1;
            if wheel.is_none() {
                failures.push(format!("{}: contractible odd hole but no wheel found", it.name));
            }
        }
    }
    report(
        5,
        "link cycles, induced link paths, wheels from degree-4 and contractible odd holes",
        started,
        format!(
            "{} graphs; {nice_graphs} nice: {link_checks} link paths, {end_chord_paths} with a chord at a path end in {end_chord_graphs} graphs, {inner_chords} with a chord between inner vertices; {deg4_holes} with a degree-4 vertex on an odd hole; {contractible_holes} with a contractible odd hole",
            corpus().len()
        ),
        &failures,
    );
}

#[test]
fn criterion_6_three_colourability_transport() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut pairs = 0;
    for it in corpus() {
        for site in find_even_contractions(&it.graph) {
            let Ok((g2, _)) = even_contract(&it.graph, &site) else {
                failures.push(format!("{} at {site:?}: contraction failed", it.name));
                continue;
            };
            let r = classify(&g2).expect("contraction output validates");
            if !(r.perfect && r.k4.is_none()) {
                continue;
            }
            pairs += 1;
            let g = it.graph.graph();
            if !three_colour(g).is_some_and(|c| is_proper_colouring(g, &c)) {
                failures.push(format!("{} at {site:?}: not 3-colourable", it.name));
            }
        }
    }
    report(
        6,
        "a graph whose even contraction is perfect without K4 is 3-colourable",
        started,
        format!("{pairs} qualifying pairs"),
        &failures,
    );
}

#[test]
fn criterion_7_oracle_self_consistency() {
    let started = Instant::now();
    let caps = Caps::default();
    let mut failures = Vec::new();
    let (mut points, mut sweeps) = (0, 0);
    for it in corpus() {
        let g = it.graph.graph();
        let system = oracle::tstab_system(g, &caps).unwrap();
        for s in oracle::enumerate_stable_sets(g, &caps).unwrap() {
            points += 1;
            let p = oracle::characteristic(g.n(), &s);
            let bad = system.violated(&p);
            if !bad.is_empty() {
                failures.push(format!("{}: stable set {s:?} violates rows {bad:?}", it.name));
            }
        }
        if g.n() <= 12 {
            sweeps += 1;
            let a = oracle::is_perfect_by_sweep(g, &caps).unwrap();
            let b = oracle::is_perfect_by_holes(g, &caps).unwrap();
            if a != b {
                failures.push(format!("{}: sweep says {a}, hole search says {b}", it.name));
            }
        }
    }
    report(
        7,
        "stable sets satisfy TSTAB; perfection sweep agrees with hole search",
        started,
        format!("{points} stable sets checked, {sweeps} graphs swept"),
        &failures,
    );
}
