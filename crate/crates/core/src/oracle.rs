//! Exact brute-force ground truth on small graphs: stable sets, the TSTAB
//! inequality system, vertex enumeration of TSTAB by double description,
//! membership in the stable set polytope, and perfection by exhaustive
//! search.
//!
//! All arithmetic is exact. Vertex enumeration works on integer homogeneous
//! coordinates (reduced by their gcd) and reports vertices as rationals;
//! overflow of the 128-bit intermediates panics rather than rounding.

use crate::detectors;
use crate::graph::Graph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

pub type RationalPoint = Vec<BigRational>;

/// Size limits. Exceeding one is an error, never an approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// stable-set enumeration, TSTAB construction, SSP membership
    pub enumeration: usize,
    /// TSTAB vertex enumeration
    pub vertices: usize,
    /// perfection by the induced-subgraph sweep
    pub sweep: usize,
    /// perfection by the odd hole / odd anti-hole search
    pub holes: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: 20,
            vertices: 14,
            sweep: 12,
            holes: 20,
        }
    }
}

impl Caps {
    /// Every cap set to `n`.
    pub fn uniform(n: usize) -> Self {
        Caps {
            enumeration: n,
            vertices: n,
            sweep: n,
            holes: n,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what}: {n} vertices exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("point has dimension {got}, the graph has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<(), OracleError> {
    if n > cap {
        Err(OracleError::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Formats a point as space-separated `p/q` entries (integers bare).
pub fn format_point(p: &[BigRational]) -> String {
    p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// The point with every coordinate `num/den`.
pub fn uniform_point(n: usize, num: i64, den: i64) -> RationalPoint {
    vec![BigRational::new(BigInt::from(num), BigInt::from(den)); n]
}

/// Characteristic vector of a vertex set.
pub fn characteristic(n: usize, set: &[usize]) -> RationalPoint {
    let mut p = vec![BigRational::zero(); n];
    for &v in set {
        p[v] = BigRational::one();
    }
    p
}

// ---------------------------------------------------------------------------
// stable sets

/// All stable sets, the empty set first, in lexicographic order of their
/// sorted vertex lists.
pub fn enumerate_stable_sets(g: &Graph, caps: &Caps) -> Result<Vec<Vec<usize>>, OracleError> {
    check_cap("stable-set enumeration", g.n(), caps.enumeration)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn grow(g: &Graph, from: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for v in from..g.n() {
            if current.iter().all(|&u| !g.has_edge(u, v)) {
                current.push(v);
                grow(g, v + 1, current, out);
                current.pop();
            }
        }
    }
    grow(g, 0, &mut current, &mut out);
    Ok(out)
}

// ---------------------------------------------------------------------------
// TSTAB

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RowTag {
    Nonneg,
    Edge,
    OddCycle,
}

impl fmt::Display for RowTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowTag::Nonneg => "NONNEG",
            RowTag::Edge => "EDGE",
            RowTag::OddCycle => "ODD_CYCLE",
        })
    }
}

/// One inequality `coeffs · x <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
    pub tag: RowTag,
    /// The vertices with non-zero coefficient.
    pub support: Vec<usize>,
}

impl Row {
    pub fn lhs(&self, p: &[BigRational]) -> BigRational {
        self.support.iter().map(|&v| &self.coeffs[v] * &p[v]).sum()
    }

    pub fn satisfied_by(&self, p: &[BigRational]) -> bool {
        self.lhs(p) <= self.rhs
    }
}

/// Non-negativity, edge and induced-odd-cycle inequalities, in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TstabSystem {
    pub n: usize,
    pub rows: Vec<Row>,
}

impl TstabSystem {
    pub fn count(&self, tag: RowTag) -> usize {
        self.rows.iter().filter(|r| r.tag == tag).count()
    }

    pub fn contains(&self, p: &[BigRational]) -> Result<bool, OracleError> {
        if p.len() != self.n {
            return Err(OracleError::DimensionMismatch {
                expected: self.n,
                got: p.len(),
            });
        }
        Ok(self.rows.iter().all(|r| r.satisfied_by(p)))
    }

    /// Indices of the rows that `p` violates.
    pub fn violated(&self, p: &[BigRational]) -> Vec<usize> {
        (0..self.rows.len()).filter(|&i| !self.rows[i].satisfied_by(p)).collect()
    }
}

fn unit_row(n: usize, support: Vec<usize>, coeff: i64, rhs: i64, tag: RowTag) -> Row {
    let mut coeffs = vec![BigRational::zero(); n];
    for &v in &support {
        coeffs[v] = rat(coeff);
    }
    Row {
        coeffs,
        rhs: rat(rhs),
        tag,
        support,
    }
}

pub fn tstab_system(g: &Graph, caps: &Caps) -> Result<TstabSystem, OracleError> {
    let n = g.n();
    check_cap("TSTAB construction", n, caps.enumeration)?;
    let mut rows: Vec<Row> = (0..n).map(|v| unit_row(n, vec![v], -1, 0, RowTag::Nonneg)).collect();
    rows.extend(g.edges().map(|(u, v)| unit_row(n, vec![u, v], 1, 1, RowTag::Edge)));
    let mut cycles = detectors::induced_odd_cycles(g);
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for c in cycles {
        let rhs = (c.len() / 2) as i64;
        let mut support = c;
        support.sort_unstable();
        rows.push(unit_row(n, support, 1, rhs, RowTag::OddCycle));
    }
    Ok(TstabSystem { n, rows })
}

// ---------------------------------------------------------------------------
// double description

struct Ray {
    y: Vec<i128>,
    /// constraints (processed so far) tight at this ray
    zero: Vec<u64>,
}

fn normalise(y: &mut [i128]) {
    let g = y.iter().fold(0i128, |g, &v| g.gcd(&v));
    if g > 1 {
        for v in y.iter_mut() {
            *v /= g;
        }
    }
}

fn dot(c: &[i64], y: &[i128]) -> i128 {
    c.iter()
        .zip(y)
        .filter(|(a, _)| **a != 0)
        .map(|(&a, &b)| (a as i128).checked_mul(b).expect("coordinate overflow"))
        .fold(0i128, |s, v| s.checked_add(v).expect("coordinate overflow"))
}

/// Extreme rays of the pointed cone `{y : y_i >= 0 (i < d), c · y <= 0 for c
/// in constraints}`, each as a primitive integer vector.
fn extreme_rays(d: usize, constraints: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let total = d + constraints.len();
    let words = total.div_ceil(64);
    let set_bit = |z: &mut Vec<u64>, i: usize| z[i >> 6] |= 1 << (i & 63);
    // the orthant: unit vectors, each tight at all sign constraints but its own
    let mut rays: Vec<Ray> = (0..d)
        .map(|i| {
            let mut y = vec![0i128; d];
            y[i] = 1;
            let mut zero = vec![0u64; words];
            for j in (0..d).filter(|&j| j != i) {
                set_bit(&mut zero, j);
            }
            Ray { y, zero }
        })
        .collect();
    for (k, c) in constraints.iter().enumerate() {
        let k = d + k;
        let vals: Vec<i128> = rays.iter().map(|r| dot(c, &r.y)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] > 0).collect();
        if pos.is_empty() {
            for (r, &v) in rays.iter_mut().zip(&vals) {
                if v == 0 {
                    set_bit(&mut r.zero, k);
                }
            }
            continue;
        }
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] < 0).collect();
        let mut fresh = Vec::new();
        let mut common = vec![0u64; words];
        for &p in &pos {
            for &q in &neg {
                let mut count = 0;
                for w in 0..words {
                    common[w] = rays[p].zero[w] & rays[q].zero[w];
                    count += common[w].count_ones() as usize;
                }
                if count + 2 < d {
                    continue;
                }
                let dominated = rays.iter().enumerate().any(|(r, ray)| {
                    r != p && r != q && (0..words).all(|w| common[w] & !ray.zero[w] == 0)
                });
                if dominated {
                    continue;
                }
                let (vp, vq) = (vals[p], -vals[q]);
                let mut y: Vec<i128> = (0..d)
                    .map(|i| {
                        let a = vq.checked_mul(rays[p].y[i]).expect("coordinate overflow");
                        let b = vp.checked_mul(rays[q].y[i]).expect("coordinate overflow");
                        a.checked_add(b).expect("coordinate overflow")
                    })
                    .collect();
                normalise(&mut y);
                let mut zero = common.clone();
                set_bit(&mut zero, k);
                fresh.push(Ray { y, zero });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (mut r, v) in rays.into_iter().zip(vals) {
            if v < 0 {
                kept.push(r);
            } else if v == 0 {
                set_bit(&mut r.zero, k);
                kept.push(r);
            }
        }
        kept.extend(fresh);
        rays = kept;
    }
    rays.into_iter().map(|r| r.y).collect()
}

/// Vertices of the polyhedron given by `system` (sorted), plus the number of
/// extreme recession directions (non-zero only when the graph has isolated
/// vertices, where the system leaves a coordinate unbounded).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertices {
    pub vertices: Vec<RationalPoint>,
    pub directions: usize,
}

pub fn polyhedron_vertices(system: &TstabSystem) -> Vertices {
    let n = system.n;
    // homogenise: a · x <= b  becomes  a · x - b t <= 0 over y = (x, t);
    // non-negativity of x and t is the starting orthant. Odd-cycle rows go
    // first: the triangle rows alone already cut the polytope down to
    // something close to the final one, and every edge row on a triangle is
    // then redundant. Inserting the edge rows first passes through the
    // fractional stable set polytope, with far more vertices.
    let mut order: Vec<&Row> = system
        .rows
        .iter()
        .filter(|r| !(r.tag == RowTag::Nonneg && r.support.len() == 1 && r.rhs.is_zero()))
        .collect();
    order.sort_by_key(|r| (r.tag != RowTag::OddCycle, r.support.len()));
    let constraints: Vec<Vec<i64>> = order
        .into_iter()
        .map(|r| {
            let mut c: Vec<i64> = r.coeffs.iter().map(integral).collect();
            c.push(-integral(&r.rhs));
            c
        })
        .collect();
    let rays = extreme_rays(n + 1, &constraints);
    let mut vertices = Vec::new();
    let mut directions = 0;
    for y in rays {
        let t = y[n];
        if t == 0 {
            directions += 1;
            continue;
        }
        let t = BigInt::from(t);
        vertices.push(
            y[..n]
                .iter()
                .map(|&v| BigRational::new(BigInt::from(v), t.clone()))
                .collect(),
        );
    }
    vertices.sort();
    Vertices { vertices, directions }
}

fn integral(x: &BigRational) -> i64 {
    assert!(x.is_integer(), "TSTAB coefficients are integers");
    i64::try_from(x.to_integer()).expect("small coefficient")
}

pub fn tstab_vertices(g: &Graph, caps: &Caps) -> Result<Vertices, OracleError> {
    check_cap("TSTAB vertex enumeration", g.n(), caps.vertices)?;
    Ok(polyhedron_vertices(&tstab_system(g, caps)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPerfectVerdict {
    pub t_perfect: bool,
    pub vertex_count: usize,
    /// The smallest fractional vertex of TSTAB, if any.
    pub fractional_vertex: Option<RationalPoint>,
    /// A point of TSTAB outside SSP: the uniform 1/3 point when it
    /// qualifies (the classical witness for odd wheels and C̄7), otherwise
    /// the fractional vertex.
    pub witness: Option<RationalPoint>,
}

/// Decides integrality of TSTAB by enumerating its vertices.
pub fn is_t_perfect_bruteforce(g: &Graph, caps: &Caps) -> Result<TPerfectVerdict, OracleError> {
    let system = tstab_system(g, caps)?;
    check_cap("TSTAB vertex enumeration", g.n(), caps.vertices)?;
    let vs = polyhedron_vertices(&system);
    let fractional = vs
        .vertices
        .iter()
        .find(|p| p.iter().any(|x| !x.is_integer()))
        .cloned();
    let witness = match &fractional {
        None => None,
        Some(vertex) => {
            let third = uniform_point(g.n(), 1, 3);
            if system.contains(&third)? && !ssp_membership(g, &third, caps)? {
                Some(third)
            } else {
                Some(vertex.clone())
            }
        }
    };
    Ok(TPerfectVerdict {
        t_perfect: fractional.is_none(),
        vertex_count: vs.vertices.len(),
        fractional_vertex: fractional,
        witness,
    })
}

// ---------------------------------------------------------------------------
// SSP membership

/// Whether `p` is a convex combination of characteristic vectors of stable
/// sets: phase one of the simplex method with Bland's rule, exactly.
pub fn ssp_membership(g: &Graph, p: &[BigRational], caps: &Caps) -> Result<bool, OracleError> {
    let n = g.n();
    if p.len() != n {
        return Err(OracleError::DimensionMismatch {
            expected: n,
            got: p.len(),
        });
    }
    if p.iter().any(|x| x.is_negative()) {
        return Ok(false);
    }
    let stables = enumerate_stable_sets(g, caps)?;
    // rows: one per vertex, plus sum(lambda) = 1
    let mut columns: Vec<Vec<BigRational>> = stables.iter().map(|s| {
        let mut col = characteristic(n, s);
        col.push(BigRational::one());
        col
    }).collect();
    let mut rhs: Vec<BigRational> = p.to_vec();
    rhs.push(BigRational::one());
    Ok(phase_one_feasible(&mut columns, rhs))
}

/// Is `{lambda >= 0 : sum_j lambda_j columns[j] = rhs}` non-empty? Requires
/// `rhs >= 0`.
fn phase_one_feasible(columns: &mut [Vec<BigRational>], rhs: Vec<BigRational>) -> bool {
    let m = rhs.len();
    let k = columns.len();
    // tableau rows 0..m, columns: k structural, m artificial, then rhs
    let width = k + m + 1;
    let mut t: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = Vec::with_capacity(width);
            row.extend(columns.iter().map(|c| c[i].clone()));
            row.extend((0..m).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row.push(rhs[i].clone());
            row
        })
        .collect();
    // reduced costs of minimising the sum of artificials
    let mut cost: Vec<BigRational> = (0..width)
        .map(|j| {
            if (k..k + m).contains(&j) {
                BigRational::zero()
            } else {
                -(0..m).map(|i| t[i][j].clone()).sum::<BigRational>()
            }
        })
        .collect();
    let mut basis: Vec<usize> = (k..k + m).collect();
    loop {
        let Some(enter) = (0..k + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            // unbounded below cannot happen for a sum of non-negatives
            unreachable!("phase one objective is bounded");
        };
        let pivot = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, pr) in row.iter_mut().zip(&pivot_row) {
                    if !pr.is_zero() {
                        *x -= &f * pr;
                    }
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, pr) in cost.iter_mut().zip(&pivot_row) {
                if !pr.is_zero() {
                    *x -= &f * pr;
                }
            }
        }
        basis[r] = enter;
    }
    // the objective value is -cost[rhs]
    cost[width - 1].is_zero()
}

// ---------------------------------------------------------------------------
// perfection

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn clique_number(adj: &[u32], candidates: u32) -> u32 {
    fn grow(adj: &[u32], size: u32, candidates: u32, best: &mut u32) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + candidates.count_ones() <= *best {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        grow(adj, size + 1, candidates & adj[v], best);
        grow(adj, size, candidates & !(1 << v), best);
    }
    let mut best = 0;
    grow(adj, 0, candidates, &mut best);
    best
}

fn colourable(adj: &[u32], set: u32, k: u32) -> bool {
    let order: Vec<usize> = (0..32).filter(|&v| set >> v & 1 == 1).collect();
    let mut classes = vec![0u32; k as usize];
    fn place(adj: &[u32], order: &[usize], i: usize, classes: &mut [u32]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let mut tried_empty = false;
        for c in 0..classes.len() {
            if classes[c] & adj[v] != 0 {
                continue;
            }
            if classes[c] == 0 {
                // empty classes are interchangeable
                if tried_empty {
                    continue;
                }
                tried_empty = true;
            }
            classes[c] |= 1 << v;
            if place(adj, order, i + 1, classes) {
                return true;
            }
            classes[c] &= !(1 << v);
        }
        false
    }
    place(adj, &order, 0, &mut classes)
}

/// Perfection by checking chromatic number = clique number on every induced
/// subgraph.
pub fn is_perfect_by_sweep(g: &Graph, caps: &Caps) -> Result<bool, OracleError> {
    let n = g.n();
    check_cap("perfection sweep", n, caps.sweep.min(31))?;
    let adj = masks(g);
    for set in 1u32..(1u32 << n) {
        let omega = clique_number(&adj, set);
        if !colourable(&adj, set, omega) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Perfection as the absence of odd holes and odd anti-holes.
pub fn is_perfect_by_holes(g: &Graph, caps: &Caps) -> Result<bool, OracleError> {
    check_cap("odd hole / anti-hole search", g.n(), caps.holes)?;
    Ok(detectors::find_odd_hole(g).is_none() && detectors::find_odd_hole(&g.complement()).is_none())
}

/// The sweep where its cap allows, the hole search otherwise.
pub fn is_perfect_bruteforce(g: &Graph, caps: &Caps) -> Result<bool, OracleError> {
    if g.n() <= caps.sweep {
        is_perfect_by_sweep(g, caps)
    } else {
        is_perfect_by_holes(g, caps)
    }
}
