//! The central arrangement spanned by the codimension-2 faces of 𝒫.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hull;
use crate::linalg::{nullspace, primitive, rank};
use crate::rootsys::{Family, Root, RootSystem};
use crate::triangulate::{extended_connected_without, polytope_facets};
use crate::weyl::{orbit_covector, reflection, Covector};

/// Linear hyperplane `{x : (x, normal) = 0}` with a primitive, sign-canonical normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Hyperplane {
    pub normal: Vec<i64>,
}

impl Hyperplane {
    pub fn new(normal: &[i64]) -> Self {
        let c = Covector(primitive(normal.to_vec())).sign_canonical();
        Hyperplane { normal: c.0 }
    }

    pub fn eval(&self, x: &[i64]) -> i64 {
        self.normal.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// Pairs {i, j} (0-based) whose removal keeps the extended diagram connected;
/// F_{i,j} are then representatives of the codimension-2 faces.
pub fn codim2_pairs(rs: &RootSystem) -> Vec<(usize, usize)> {
    let n = rs.rank();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if extended_connected_without(rs, &[i + 1, j + 1]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// V_I = {β ∈ Φ⁺ : cᵢ(β) = mᵢ for i ∈ I}.
pub fn face_roots(rs: &RootSystem, idx: &[usize]) -> Vec<Root> {
    rs.positive_roots()
        .iter()
        .filter(|r| idx.iter().all(|&i| r.coords()[i] == rs.marks()[i]))
        .cloned()
        .collect()
}

fn orbit_hyperplanes(rs: &RootSystem, f: &Covector) -> BTreeSet<Hyperplane> {
    orbit_covector(rs, f, true)
        .into_iter()
        .map(|c| Hyperplane::new(&c.0))
        .collect()
}

/// Union of the hyperplane orbits listed for each classical type.
pub fn expected_arrangement(rs: &RootSystem) -> BTreeSet<Hyperplane> {
    let n = rs.rank();
    let w = |i: usize| Covector::fundamental(n, i);
    let gens: Vec<Covector> = match rs.family() {
        Family::A | Family::C => vec![w(0)],
        Family::B if n >= 4 => vec![w(n - 1), w(0)],
        Family::B => vec![w(n - 1)],
        // D₃ = A₃: the fork nodes are the ends of the A₃ diagram.
        Family::D if n == 3 => vec![w(1), w(2)],
        Family::D => vec![w(n - 2), w(n - 1), w(0)],
    };
    gens.iter().flat_map(|g| orbit_hyperplanes(rs, g)).collect()
}

/// 𝓗_Φ computed from the codimension-2 faces and checked against the orbit table.
pub fn build_arrangement(rs: &RootSystem) -> Result<Vec<Hyperplane>> {
    let n = rs.rank();
    // A segment has no codimension-2 faces.
    if n < 2 {
        return Ok(Vec::new());
    }
    let mut found: BTreeSet<Hyperplane> = BTreeSet::new();
    for (i, j) in codim2_pairs(rs) {
        let rows: Vec<Vec<i64>> = face_roots(rs, &[i, j]).iter().map(|r| r.coords().to_vec()).collect();
        let ns = nullspace(&rows, n);
        if ns.len() != 1 {
            return Err(Error::Inconsistent(format!(
                "face {{{i},{j}}} does not span a hyperplane"
            )));
        }
        found.extend(orbit_hyperplanes(rs, &Covector(ns[0].clone())));
    }
    if found != expected_arrangement(rs) {
        return Err(Error::Inconsistent(format!(
            "arrangement of {} differs from the orbit table",
            rs.rstype()
        )));
    }
    Ok(found.into_iter().collect())
}

/// Flats of a central arrangement, ordered by reverse inclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionPoset {
    pub ambient_dim: usize,
    pub flats: Vec<Flat>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flat {
    /// Indices of all hyperplanes containing the flat.
    pub hyperplanes: Vec<usize>,
    /// Codimension, the rank of the annihilating normals.
    pub rank: usize,
    pub moebius: i64,
}

impl Flat {
    pub fn dim(&self, ambient: usize) -> usize {
        ambient - self.rank
    }
}

pub fn intersection_poset(hs: &[Hyperplane], ambient_dim: usize) -> IntersectionPoset {
    let normals: Vec<Vec<i64>> = hs.iter().map(|h| h.normal.clone()).collect();
    let closure = |set: &BTreeSet<usize>| -> (BTreeSet<usize>, usize) {
        let rows: Vec<Vec<i64>> = set.iter().map(|&k| normals[k].clone()).collect();
        let r = rank(&rows);
        let full: BTreeSet<usize> = (0..hs.len())
            .filter(|k| {
                if set.contains(k) {
                    return true;
                }
                let mut ext = rows.clone();
                ext.push(normals[*k].clone());
                rank(&ext) == r
            })
            .collect();
        (full, r)
    };
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
    let mut flats: Vec<(BTreeSet<usize>, usize)> = vec![(BTreeSet::new(), 0)];
    seen.insert(BTreeSet::new());
    let mut level = vec![BTreeSet::new()];
    while !level.is_empty() {
        let mut next = Vec::new();
        for x in &level {
            for h in 0..hs.len() {
                if x.contains(&h) {
                    continue;
                }
                let mut y = x.clone();
                y.insert(h);
                let (y, r) = closure(&y);
                if seen.insert(y.clone()) {
                    flats.push((y.clone(), r));
                    next.push(y);
                }
            }
        }
        level = next;
    }
    flats.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    let mut moebius: Vec<i64> = Vec::with_capacity(flats.len());
    for (k, (x, _)) in flats.iter().enumerate() {
        if k == 0 {
            moebius.push(1);
            continue;
        }
        let below: i64 = (0..k)
            .filter(|&j| flats[j].0.is_subset(x) && flats[j].0 != *x)
            .map(|j| moebius[j])
            .sum();
        moebius.push(-below);
    }
    IntersectionPoset {
        ambient_dim,
        flats: flats
            .into_iter()
            .zip(moebius)
            .map(|((x, r), m)| Flat {
                hyperplanes: x.into_iter().collect(),
                rank: r,
                moebius: m,
            })
            .collect(),
    }
}

impl IntersectionPoset {
    /// Coefficients of χ(t), index k holding the coefficient of t^k.
    pub fn characteristic_polynomial(&self) -> Vec<i64> {
        let mut c = vec![0i64; self.ambient_dim + 1];
        for f in &self.flats {
            c[f.dim(self.ambient_dim)] += f.moebius;
        }
        c
    }

    /// Zaslavsky: (−1)ⁿ χ(−1).
    pub fn region_count(&self) -> u64 {
        let chi = self.characteristic_polynomial();
        let at_minus_one: i64 = chi
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { *c } else { -c })
            .sum();
        let sign = if self.ambient_dim.is_multiple_of(2) { 1 } else { -1 };
        (sign * at_minus_one) as u64
    }

    /// Integer direction vectors of the one-dimensional flats.
    pub fn lines(&self, hs: &[Hyperplane]) -> Vec<Vec<i64>> {
        self.flats
            .iter()
            .filter(|f| f.dim(self.ambient_dim) == 1)
            .map(|f| {
                let rows: Vec<Vec<i64>> = f.hyperplanes.iter().map(|&k| hs[k].normal.clone()).collect();
                nullspace(&rows, self.ambient_dim).remove(0)
            })
            .collect()
    }
}

pub fn characteristic_polynomial(hs: &[Hyperplane], ambient_dim: usize) -> (Vec<i64>, u64) {
    let p = intersection_poset(hs, ambient_dim);
    (p.characteristic_polynomial(), p.region_count())
}

/// Sign vectors of the nonempty regions of an essential central arrangement.
///
/// For each sign vector, the rays of the one-dimensional flats that satisfy
/// it weakly are summed; the region is nonempty iff that sum is strict.
pub fn region_sign_vectors(hs: &[Hyperplane], ambient_dim: usize) -> Vec<Vec<bool>> {
    let p = intersection_poset(hs, ambient_dim);
    let mut rays: Vec<Vec<i64>> = Vec::new();
    for l in p.lines(hs) {
        rays.push(l.iter().map(|x| -x).collect());
        rays.push(l);
    }
    let m = hs.len();
    let mut out = Vec::new();
    for mask in 0u64..(1 << m) {
        let sigma: Vec<bool> = (0..m).map(|k| (mask >> k) & 1 == 1).collect();
        let signed = |h: usize, x: &[i64]| if sigma[h] { hs[h].eval(x) } else { -hs[h].eval(x) };
        let mut sum = vec![0i64; ambient_dim];
        for r in &rays {
            if (0..m).all(|h| signed(h, r) >= 0) {
                for (s, v) in sum.iter_mut().zip(r) {
                    *s += v;
                }
            }
        }
        if (0..m).all(|h| signed(h, &sum) > 0) {
            out.push(sigma);
        }
    }
    out
}

/// Face polynomial of 𝓗 for type A: index i holds the number of i-dimensional faces.
pub fn face_polynomial_a(rs: &RootSystem) -> Result<Vec<u128>> {
    if rs.family() != Family::A {
        return Err(Error::WrongType(rs.family()));
    }
    let n = rs.rank() as u128;
    let mut out = vec![1u128];
    for i in 1..=n {
        out.push(num_integer::binomial(n + 1, i + 1) * ((1u128 << (i + 1)) - 2));
    }
    Ok(out)
}

/// χ(t) of 𝓗 for type A from the closed form, index k holding the t^k coefficient.
pub fn characteristic_polynomial_a_closed(n: usize) -> Vec<i64> {
    let sign = |e: usize| if e.is_multiple_of(2) { 1i64 } else { -1 };
    let mut c = vec![0i64; n + 1];
    c[0] = sign(n) * n as i64;
    for (k, ck) in c.iter_mut().enumerate().skip(1) {
        *ck = num_integer::binomial(n as i64 + 1, k as i64 + 1) * sign(n - k);
    }
    c
}

/// A hyperplane of 𝓗 that strictly separates two vertices of one facet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub hyperplane: Vec<i64>,
    /// Normal covector of the facet.
    pub facet: Vec<i64>,
    pub facet_vertices: Vec<Vec<i64>>,
    pub positive_vertex: Vec<i64>,
    pub negative_vertex: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionsVsFacets {
    pub coincide: bool,
    pub witnesses: Vec<Witness>,
    /// Type B only: the highest short root is parallel to ω̌₁.
    pub highest_short_parallel: Option<bool>,
}

/// Facet normal together with the facet's vertices.
pub type FacetVertices = (Vec<i64>, Vec<Vec<i64>>);

/// Vertex sets (long roots) of every facet of 𝒫 from the orbit description.
pub fn facet_vertex_sets(rs: &RootSystem) -> Result<Vec<FacetVertices>> {
    let long: HashSet<Vec<i64>> = long_roots(rs).into_iter().collect();
    Ok(polytope_facets(rs)?
        .into_iter()
        .map(|f| {
            let mut v: Vec<Vec<i64>> = f
                .roots
                .iter()
                .map(|r| r.coords().to_vec())
                .filter(|c| long.contains(c))
                .collect();
            v.sort();
            (f.normal.0, v)
        })
        .collect())
}

/// All long roots of Φ, positive and negative.
pub fn long_roots(rs: &RootSystem) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for (k, r) in rs.positive_roots().iter().enumerate() {
        if rs.is_long(k) {
            out.push(r.coords().to_vec());
            out.push(r.neg().into_coords());
        }
    }
    out.sort();
    out
}

/// Facet vertex sets of conv(Φ) from the brute-force hull; small ranks only.
pub fn brute_facet_vertex_sets(rs: &RootSystem) -> Vec<Vec<Vec<i64>>> {
    let pts = long_roots(rs);
    let mut out: Vec<Vec<Vec<i64>>> = hull::facets(&pts)
        .into_iter()
        .map(|f| f.points.iter().map(|&k| pts[k].clone()).collect())
        .collect();
    out.sort();
    out
}

pub fn regions_vs_facets(rs: &RootSystem) -> Result<RegionsVsFacets> {
    let hs = build_arrangement(rs)?;
    let facets = facet_vertex_sets(rs)?;
    if rs.rank() <= 4 && matches!(rs.family(), Family::B | Family::D) {
        let mut orbit: Vec<Vec<Vec<i64>>> = facets.iter().map(|(_, v)| v.clone()).collect();
        orbit.sort();
        if orbit != brute_facet_vertex_sets(rs) {
            return Err(Error::Inconsistent(format!(
                "facets of {} disagree with the hull",
                rs.rstype()
            )));
        }
    }
    let mut witnesses = Vec::new();
    for h in &hs {
        for (normal, verts) in &facets {
            let pos = verts.iter().find(|v| h.eval(v) > 0);
            let neg = verts.iter().find(|v| h.eval(v) < 0);
            if let (Some(p), Some(q)) = (pos, neg) {
                witnesses.push(Witness {
                    hyperplane: h.normal.clone(),
                    facet: normal.clone(),
                    facet_vertices: verts.clone(),
                    positive_vertex: p.clone(),
                    negative_vertex: q.clone(),
                });
            }
        }
    }
    let highest_short_parallel = (rs.family() == Family::B).then(|| {
        let n = rs.rank();
        let theta_s = vec![1i64; n];
        (1..n).all(|j| rs.inner(&theta_s, rs.alpha(j).coords()) == 0) && rs.inner(&theta_s, rs.alpha(0).coords()) != 0
    });
    Ok(RegionsVsFacets {
        coincide: witnesses.is_empty(),
        witnesses,
        highest_short_parallel,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsystemReport {
    pub roots: Vec<Root>,
    pub simple_system: Vec<Root>,
    pub dynkin_type: String,
}

/// span(roots) ∩ Φ with its simple system and Dynkin type.
pub fn parabolic_closure(rs: &RootSystem, roots: &[Root]) -> SubsystemReport {
    let gens: Vec<Vec<i64>> = roots.iter().map(|r| r.coords().to_vec()).collect();
    let r0 = rank(&gens);
    let in_span = |c: &[i64]| {
        let mut ext = gens.clone();
        ext.push(c.to_vec());
        rank(&ext) == r0
    };
    let positive: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|r| in_span(r.coords()))
        .cloned()
        .collect();
    subsystem_report(rs, positive)
}

fn subsystem_report(rs: &RootSystem, positive: Vec<Root>) -> SubsystemReport {
    let set: HashSet<&[i64]> = positive.iter().map(|r| r.coords()).collect();
    let simple_system: Vec<Root> = positive
        .iter()
        .filter(|b| {
            !positive.iter().any(|g| {
                let d: Vec<i64> = b.coords().iter().zip(g.coords()).map(|(x, y)| x - y).collect();
                set.contains(d.as_slice())
            })
        })
        .cloned()
        .collect();
    let dynkin_type = classify_dynkin(rs, &simple_system);
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(Root::neg));
    SubsystemReport {
        roots,
        simple_system,
        dynkin_type,
    }
}

/// Φ(Γ): the closure of ±Γ under the reflections in its own elements.
pub fn generated_subsystem(rs: &RootSystem, gens: &[Root]) -> Vec<Root> {
    let mut set: BTreeSet<Root> = gens.iter().cloned().chain(gens.iter().map(Root::neg)).collect();
    loop {
        let cur: Vec<Root> = set.iter().cloned().collect();
        let before = set.len();
        for a in &cur {
            let s = reflection(rs, a);
            for b in &cur {
                set.insert(s.apply_root(rs, b));
            }
        }
        if set.len() == before {
            return set.into_iter().collect();
        }
    }
}

/// Label such as `B3` or `A2+A1`; exceptional components read `unclassified`.
#[allow(clippy::needless_range_loop)]
pub fn classify_dynkin(rs: &RootSystem, simple: &[Root]) -> String {
    let k = simple.len();
    if k == 0 {
        return "empty".into();
    }
    let ip = |a: &Root, b: &Root| rs.inner(a.coords(), b.coords());
    let norm: Vec<i64> = simple.iter().map(|a| ip(a, a)).collect();
    // Bond multiplicity a_ij a_ji.
    let bond = |i: usize, j: usize| -> i64 {
        let g = ip(&simple[i], &simple[j]);
        (4 * g * g) / (norm[i] * norm[j])
    };
    let mut comp = vec![usize::MAX; k];
    let mut labels = Vec::new();
    for s in 0..k {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut nodes = vec![s];
        comp[s] = s;
        let mut q = 0;
        while q < nodes.len() {
            let v = nodes[q];
            q += 1;
            for u in 0..k {
                if comp[u] == usize::MAX && u != v && bond(u, v) > 0 {
                    comp[u] = s;
                    nodes.push(u);
                }
            }
        }
        labels.push(classify_component(&nodes, &norm, &bond));
    }
    labels.join("+")
}

fn classify_component(nodes: &[usize], norm: &[i64], bond: &dyn Fn(usize, usize) -> i64) -> String {
    let k = nodes.len();
    if k == 1 {
        return "A1".into();
    }
    let mut edges = Vec::new();
    for (a, &u) in nodes.iter().enumerate() {
        for &v in &nodes[a + 1..] {
            let m = bond(u, v);
            if m > 0 {
                edges.push((u, v, m));
            }
        }
    }
    if edges.len() != k - 1 {
        return "unclassified".into();
    }
    let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let multiple: Vec<&(usize, usize, i64)> = edges.iter().filter(|e| e.2 > 1).collect();
    let branch: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match (multiple.len(), branch.len()) {
        (0, 0) => format!("A{k}"),
        (0, 1) => {
            let b = branch[0];
            if degree(b) != 3 {
                return "unclassified".into();
            }
            // Arm lengths from the branch node.
            let mut arms = Vec::new();
            for &(u, v, _) in edges.iter().filter(|e| e.0 == b || e.1 == b) {
                let mut prev = b;
                let mut cur = if u == b { v } else { u };
                let mut len = 1;
                loop {
                    let next = edges
                        .iter()
                        .filter(|e| (e.0 == cur || e.1 == cur) && e.0 != prev && e.1 != prev)
                        .map(|e| if e.0 == cur { e.1 } else { e.0 })
                        .next();
                    match next {
                        Some(nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort();
            if arms[0] == 1 && arms[1] == 1 {
                format!("D{k}")
            } else {
                "unclassified".into()
            }
        }
        (1, 0) if multiple[0].2 == 2 => {
            if k == 2 {
                return "B2".into();
            }
            let (u, v, _) = *multiple[0];
            let (end, other) = if degree(u) == 1 {
                (u, v)
            } else if degree(v) == 1 {
                (v, u)
            } else {
                return "unclassified".into();
            };
            if norm[end] < norm[other] {
                format!("B{k}")
            } else {
                format!("C{k}")
            }
        }
        _ => "unclassified".into(),
    }
}
