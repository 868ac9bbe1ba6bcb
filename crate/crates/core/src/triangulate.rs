//! Border-strip triangulations of the root polytope and of its positive part.

use num_integer::binomial;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{AntiStandardViolation, Error, Result};
use crate::hull::Membership;
use crate::ideals::{border, classify_ideal, members_of_i_ab, simple_filter, RootFilter};
use crate::linalg::{det, solve, Q};
use crate::rootsys::{Family, Root, RootSet, RootSystem};
use crate::weyl::{minimal_coset_reps, reflection, Covector, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    /// The n roots; when coned, the origin is the implicit extra vertex.
    pub vertices: Vec<Root>,
    pub apex: usize,
    pub coset: WeylElement,
    pub ideal: RootFilter,
}

impl Simplex {
    pub fn is_positive(&self) -> bool {
        self.vertices.iter().all(Root::is_positive)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolytopeTag {
    P,
    PPlus,
    Facet(usize),
    IdealHull(RootFilter),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pub simplices: Vec<Simplex>,
    pub tag: PolytopeTag,
}

impl Triangulation {
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Sum of normalized volumes of the (coned) simplices.
    pub fn total_volume(&self) -> u128 {
        self.simplices
            .iter()
            .map(|s| det(&coords(&s.vertices)).unsigned_abs())
            .sum()
    }
}

fn coords(roots: &[Root]) -> Vec<Vec<i64>> {
    roots.iter().map(|r| r.coords().to_vec()).collect()
}

fn require_ac(rs: &RootSystem) -> Result<()> {
    match rs.family() {
        Family::A | Family::C => Ok(()),
        f => Err(Error::WrongType(f)),
    }
}

/// |det| of the coordinate matrix of n roots; 0 for dependent sets or a wrong count.
pub fn normalized_volume(rs: &RootSystem, vertices: &[Root]) -> u128 {
    if vertices.len() != rs.rank() {
        return 0;
    }
    det(&coords(vertices)).unsigned_abs()
}

/// 𝓣′ᵢ: the simplices conv(B(I)) for I ∈ I_ab(αᵢ).
pub fn facet_triangulation(rs: &RootSystem, i: usize) -> Result<Triangulation> {
    require_ac(rs)?;
    let e = WeylElement::identity(rs.rank());
    let simplices = members_of_i_ab(rs, i)?
        .into_iter()
        .map(|ideal| {
            Ok(Simplex {
                vertices: rs.roots_of(border(rs, ideal)?),
                apex: i,
                coset: e.clone(),
                ideal,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangulation {
        simplices,
        tag: PolytopeTag::Facet(i),
    })
}

/// Transport the facet triangulations by the given coset representatives.
///
/// `reps` pairs each long simple index with the representatives to use; the
/// genuine triangulation uses W^i, see [`full_triangulation`].
pub fn assemble(rs: &RootSystem, reps: &[(usize, Vec<WeylElement>)]) -> Result<Triangulation> {
    require_ac(rs)?;
    let mut jobs = Vec::new();
    for (i, ws) in reps {
        let base = facet_triangulation(rs, *i)?;
        for w in ws {
            jobs.push((base.simplices.clone(), w.clone()));
        }
    }
    let simplices: Vec<Simplex> = jobs
        .into_par_iter()
        .flat_map_iter(|(base, w)| {
            base.into_iter().map(move |s| Simplex {
                vertices: s.vertices.iter().map(|r| w.apply_root(rs, r)).collect(),
                apex: s.apex,
                coset: w.clone(),
                ideal: s.ideal,
            })
        })
        .collect();
    Ok(Triangulation {
        simplices,
        tag: PolytopeTag::P,
    })
}

/// 𝓣 = ⋃ W^i 𝓣ᵢ over long simple i.
pub fn full_triangulation(rs: &RootSystem) -> Result<Triangulation> {
    require_ac(rs)?;
    let reps = rs
        .long_simple()
        .into_iter()
        .map(|i| Ok((i, minimal_coset_reps(rs, i)?)))
        .collect::<Result<Vec<_>>>()?;
    assemble(rs, &reps)
}

/// 𝓣⁺: the simplices whose root vertices are all positive.
pub fn positive_restriction(t: &Triangulation) -> Triangulation {
    Triangulation {
        simplices: t.simplices.iter().filter(|s| s.is_positive()).cloned().collect(),
        tag: PolytopeTag::PPlus,
    }
}

/// {conv(B(J)) : J ∈ I_ab(α), J ⊆ I}, a triangulation of conv(I).
pub fn ideal_hull_triangulation(rs: &RootSystem, ideal: RootFilter) -> Result<Triangulation> {
    let apex = classify_ideal(rs, ideal)?.ok_or(Error::NoApex)?;
    let facet = facet_triangulation(rs, apex)?;
    Ok(Triangulation {
        simplices: facet
            .simplices
            .into_iter()
            .filter(|s| s.ideal.is_subset(ideal))
            .collect(),
        tag: PolytopeTag::IdealHull(ideal),
    })
}

/// Exact test of `x ∈ conv(0, v₁, …, vₙ)` for linearly independent vᵢ.
pub fn cone_simplex_contains(vertices: &[Root], x: &[Q]) -> bool {
    let cols = coords(vertices);
    let n = x.len();
    let m: Vec<Vec<i64>> = (0..n).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
    let Some(lambda) = solve(&m, x) else {
        return false;
    };
    let zero = Q::from_integer(0);
    lambda.iter().all(|l| *l >= zero) && lambda.iter().sum::<Q>() <= Q::from_integer(1)
}

/// Long simple indices i whose extended diagram stays connected without node i.
///
/// The standard parabolic facets are F_i for exactly these i.
pub fn facet_indices(rs: &RootSystem) -> Vec<usize> {
    (0..rs.rank())
        .filter(|&i| extended_connected_without(rs, &[i + 1]))
        .collect()
}

/// Whether the extended Dynkin diagram minus the given nodes (0 = α₀) is connected.
pub fn extended_connected_without(rs: &RootSystem, removed: &[usize]) -> bool {
    let adj = rs.extended_adjacency();
    let nodes: Vec<usize> = (0..adj.len()).filter(|v| !removed.contains(v)).collect();
    let Some(&start) = nodes.first() else {
        return true;
    };
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &u in &nodes {
            if adj[v][u] && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    nodes.iter().all(|&v| seen[v])
}

/// A facet of 𝒫 as an orbit image w(F_i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeFacet {
    pub index: usize,
    pub coset: WeylElement,
    /// w(ω̌ᵢ); the facet lies on `(x, normal) = mark`.
    pub normal: Covector,
    pub mark: i64,
    /// All roots on the facet, w(V_i).
    pub roots: Vec<Root>,
}

/// Every facet of 𝒫 from the orbits of the standard parabolic facets.
pub fn polytope_facets(rs: &RootSystem) -> Result<Vec<PolytopeFacet>> {
    let n = rs.rank();
    let mut out = Vec::new();
    for i in facet_indices(rs) {
        let mark = rs.marks()[i];
        let v: Vec<Root> = rs
            .positive_roots()
            .iter()
            .filter(|r| r.coords()[i] == mark)
            .cloned()
            .collect();
        for w in minimal_coset_reps(rs, i)? {
            out.push(PolytopeFacet {
                index: i,
                normal: w.apply_covector(&Covector::fundamental(n, i)),
                mark,
                roots: v.iter().map(|r| w.apply_root(rs, r)).collect(),
                coset: w,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfspaceModel {
    /// `(g, m)` meaning `(x, g) ≤ m`.
    pub inequalities: Vec<(Covector, i64)>,
}

impl HalfspaceModel {
    pub fn contains(&self, x: &[Q]) -> Membership {
        let mut boundary = false;
        for (g, m) in &self.inequalities {
            let v: Q = g.0.iter().zip(x).map(|(a, b)| Q::from_integer(*a as i128) * b).sum();
            let m = Q::from_integer(*m as i128);
            if v > m {
                return Membership::Outside;
            }
            if v == m {
                boundary = true;
            }
        }
        if boundary {
            Membership::Boundary
        } else {
            Membership::Interior
        }
    }
}

/// Whether all simple-root coordinates are nonnegative.
pub fn in_positive_cone(x: &[Q]) -> bool {
    x.iter().all(|v| *v >= Q::from_integer(0))
}

pub fn halfspace_model(rs: &RootSystem) -> Result<HalfspaceModel> {
    require_ac(rs)?;
    let mut inequalities: Vec<(Covector, i64)> = polytope_facets(rs)?.into_iter().map(|f| (f.normal, f.mark)).collect();
    inequalities.sort();
    inequalities.dedup();
    Ok(HalfspaceModel { inequalities })
}

/// Face counts (f₀, …, f_{n−1}) of 𝒫 from the closed forms.
pub fn f_polynomial(rs: &RootSystem) -> Result<Vec<u128>> {
    let n = rs.rank() as u128;
    match rs.family() {
        Family::A => Ok((0..n)
            .map(|i| binomial(n + 1, i + 2) * ((1u128 << (i + 2)) - 2))
            .collect()),
        Family::C => Ok((0..n).map(|i| (1u128 << (i + 1)) * binomial(n, i + 1)).collect()),
        f => Err(Error::WrongType(f)),
    }
}

/// Directed graph on vertices `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AntiStandardGraph {
    pub edges: Vec<(usize, usize)>,
}

impl AntiStandardGraph {
    /// Checks both defining properties on `n + 1` vertices.
    pub fn validate(&self, n: usize) -> std::result::Result<(), AntiStandardViolation> {
        if self.edges.len() != n {
            return Err(AntiStandardViolation::EdgeCount {
                expected: n,
                found: self.edges.len(),
            });
        }
        let mut is_source = vec![false; n + 1];
        let mut is_target = vec![false; n + 1];
        for (k, &(s, t)) in self.edges.iter().enumerate() {
            if s == t || s > n || t > n || self.edges[..k].contains(&(s, t)) {
                return Err(AntiStandardViolation::BadEdge(s, t));
            }
            is_source[s] = true;
            is_target[t] = true;
        }
        for v in 0..=n {
            match (is_source[v], is_target[v]) {
                (false, false) => return Err(AntiStandardViolation::Isolated(v)),
                (true, true) => return Err(AntiStandardViolation::SourceAndTarget(v)),
                _ => {}
            }
        }
        for &(s, t) in &self.edges {
            for &(s2, t2) in &self.edges {
                if s < s2 && t > t2 {
                    return Err(AntiStandardViolation::Crossing(s, t, s2, t2));
                }
            }
        }
        Ok(())
    }

    pub fn sources(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.edges.iter().map(|e| e.0).collect();
        v.sort();
        v.dedup();
        v
    }
}

/// Arc for a type-A root: α_{a..=b−1} ↦ (a, b), its negative ↦ (b, a).
fn root_to_arc(r: &Root) -> (usize, usize) {
    let sup = r.support();
    let (a, b) = (sup[0], sup[sup.len() - 1] + 1);
    if r.is_positive() {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn simplex_to_digraph(rs: &RootSystem, vertices: &[Root]) -> Result<AntiStandardGraph> {
    if rs.family() != Family::A {
        return Err(Error::WrongType(rs.family()));
    }
    let mut edges: Vec<(usize, usize)> = vertices.iter().map(root_to_arc).collect();
    edges.sort();
    let g = AntiStandardGraph { edges };
    g.validate(rs.rank()).map_err(Error::NotAntiStandard)?;
    Ok(g)
}

pub fn digraph_to_simplex(rs: &RootSystem, g: &AntiStandardGraph) -> Result<Vec<Root>> {
    if rs.family() != Family::A {
        return Err(Error::WrongType(rs.family()));
    }
    g.validate(rs.rank()).map_err(Error::NotAntiStandard)?;
    let mut out: Vec<Root> = g
        .edges
        .iter()
        .map(|&(s, t)| {
            let r = rs.alpha_range(s.min(t), s.max(t) - 1);
            if s < t {
                r
            } else {
                r.neg()
            }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// w_i^c: product of the commuting reflections in α_{k..=i−k} (0-based, k < (i+1)/2).
pub fn standard_antipode(rs: &RootSystem, i: usize) -> Result<WeylElement> {
    if rs.family() != Family::A {
        return Err(Error::WrongType(rs.family()));
    }
    if i >= rs.rank() {
        return Err(Error::BadIndex(i));
    }
    let mut w = WeylElement::identity(rs.rank());
    for k in 0..i.div_ceil(2) {
        let beta = rs.alpha_range(k, i - 1 - k);
        w = w.mul(&reflection(rs, &beta));
    }
    Ok(w)
}

/// Cell sets of the up/left lattice paths from αᵢ to θ in the type A diagram.
pub fn standard_paths(rs: &RootSystem, i: usize) -> Result<Vec<RootSet>> {
    if rs.family() != Family::A {
        return Err(Error::WrongType(rs.family()));
    }
    let n = rs.rank();
    let mut out = Vec::new();
    fn go(rs: &RootSystem, r: usize, c: usize, cur: RootSet, out: &mut Vec<RootSet>) {
        let mut cur = cur;
        cur.insert(rs.diagram_cell(r, c).unwrap());
        if r == 0 && c == 0 {
            out.push(cur);
            return;
        }
        if r > 0 {
            go(rs, r - 1, c, cur, out);
        }
        if c > 0 {
            go(rs, r, c - 1, cur, out);
        }
    }
    go(rs, n - 1 - i, i, RootSet::EMPTY, &mut out);
    out.sort();
    Ok(out)
}

/// Checks the defining behaviour of w_i^c: involution, α_{1,i} ↦ αᵢ,
/// α_{i,n} ↦ θ, reversal of the columns of M_i, and borders ↦ standard paths.
pub fn antipode_check(rs: &RootSystem, i: usize) -> Result<bool> {
    let w = standard_antipode(rs, i)?;
    let n = rs.rank();
    let mut ok = w.mul(&w).is_identity();
    ok &= w.apply(rs.alpha_range(0, i).coords()) == rs.alpha(i).coords();
    ok &= w.apply(rs.alpha_range(i, n - 1).coords()) == rs.highest_root().coords();
    for k in simple_filter(rs, i)?.iter() {
        let (r, c) = rs.diagram_of_index(k).unwrap();
        let image = w.apply_root(rs, rs.positive_root(k));
        ok &= rs.diagram_of(&image).ok() == Some((r, i - c));
    }
    let mut images: Vec<RootSet> = members_of_i_ab(rs, i)?
        .into_iter()
        .map(|ideal| {
            let b = rs.roots_of(border(rs, ideal)?);
            let img: Vec<Root> = b.iter().map(|r| w.apply_root(rs, r)).collect();
            rs.set_of(&img)
        })
        .collect::<Result<Vec<_>>>()?;
    images.sort();
    ok &= images == standard_paths(rs, i)?;
    Ok(ok)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VolumeReport {
    /// vol 𝒫 / vol Π, the number of unimodular simplices in 𝓣.
    pub vol_p_over_vol_pi: u128,
    pub vol_pplus_over_vol_p: (i128, i128),
    /// ∏ eᵢ / |W|.
    pub exponents_ratio: (i128, i128),
    /// Closed form of the same ratio: 1/(n+1) for A, C(2n,n)/2^{2n} for C.
    pub closed_form: (i128, i128),
}

impl VolumeReport {
    pub fn consistent(&self) -> bool {
        self.vol_pplus_over_vol_p == self.exponents_ratio && self.exponents_ratio == self.closed_form
    }
}

fn pair(q: Q) -> (i128, i128) {
    (*q.numer(), *q.denom())
}

pub fn volume_report_from(rs: &RootSystem, t: &Triangulation) -> Result<VolumeReport> {
    require_ac(rs)?;
    if t.simplices.iter().any(|s| normalized_volume(rs, &s.vertices) != 1) {
        return Err(Error::Inconsistent("non-unimodular simplex".into()));
    }
    let total = t.len() as i128;
    let plus = t.simplices.iter().filter(|s| s.is_positive()).count() as i128;
    let prod: i128 = rs.exponents().iter().map(|&e| e as i128).product();
    let n = rs.rank() as i128;
    let closed = match rs.family() {
        Family::A => Q::new(1, n + 1),
        _ => Q::new(binomial(2 * n, n), 1i128 << (2 * n)),
    };
    Ok(VolumeReport {
        vol_p_over_vol_pi: total as u128,
        vol_pplus_over_vol_p: pair(Q::new(plus, total)),
        exponents_ratio: pair(Q::new(prod, rs.weyl_order() as i128)),
        closed_form: pair(closed),
    })
}

pub fn volume_report(rs: &RootSystem) -> Result<VolumeReport> {
    volume_report_from(rs, &full_triangulation(rs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    #[test]
    fn volumes() {
        let a2 = rs(Family::A, 2);
        assert_eq!(normalized_volume(&a2, &[a2.alpha(0), a2.alpha(1)]), 1);
        assert_eq!(normalized_volume(&a2, &[a2.alpha(0), a2.alpha_range(0, 1)]), 1);
        assert_eq!(normalized_volume(&a2, &[a2.alpha(0)]), 0);
        let c2 = rs(Family::C, 2);
        assert_eq!(
            normalized_volume(&c2, &[c2.root(&[1, 1]).unwrap(), c2.root(&[2, 1]).unwrap()]),
            1
        );
    }

    #[test]
    fn facet_triangulations() {
        let a3 = rs(Family::A, 3);
        let t = facet_triangulation(&a3, 1).unwrap();
        assert_eq!(t.len(), 2);
        let shared: Vec<&Root> = t.simplices[0]
            .vertices
            .iter()
            .filter(|v| t.simplices[1].vertices.contains(v))
            .collect();
        assert_eq!(shared, vec![&a3.alpha_range(0, 1), &a3.alpha_range(1, 2)]);
        assert_eq!(facet_triangulation(&rs(Family::C, 2), 1).unwrap().len(), 2);
        for n in 2..=5 {
            assert_eq!(facet_triangulation(&rs(Family::A, n), 0).unwrap().len(), 1);
        }
        assert!(matches!(
            facet_triangulation(&rs(Family::B, 3), 0),
            Err(Error::WrongType(Family::B))
        ));
        assert!(matches!(
            facet_triangulation(&rs(Family::C, 3), 0),
            Err(Error::NotLongSimple(0))
        ));
    }

    #[test]
    fn adjacency_matches_one_element_difference() {
        for (f, n) in [(Family::A, 4), (Family::A, 5), (Family::C, 3), (Family::C, 4)] {
            let r = rs(f, n);
            for i in r.long_simple() {
                let t = facet_triangulation(&r, i).unwrap();
                for a in &t.simplices {
                    for b in &t.simplices {
                        let common = a.vertices.iter().filter(|v| b.vertices.contains(v)).count();
                        let diff = a.ideal.difference(b.ideal).len() + b.ideal.difference(a.ideal).len();
                        assert_eq!(common == n - 1, diff == 1);
                    }
                }
            }
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(full_triangulation(&rs(Family::A, 2)).unwrap().len(), 6);
        assert_eq!(full_triangulation(&rs(Family::C, 2)).unwrap().len(), 8);
        let a3 = full_triangulation(&rs(Family::A, 3)).unwrap();
        assert_eq!(positive_restriction(&a3).len(), 5);
        let c3 = full_triangulation(&rs(Family::C, 3)).unwrap();
        assert_eq!(c3.len(), 32);
        assert_eq!(positive_restriction(&c3).len(), 10);
        assert_eq!(
            positive_restriction(&full_triangulation(&rs(Family::A, 2)).unwrap()).len(),
            2
        );
        assert_eq!(
            positive_restriction(&full_triangulation(&rs(Family::C, 2)).unwrap()).len(),
            3
        );
    }

    #[test]
    fn ideal_hulls() {
        let a3 = rs(Family::A, 3);
        let m2 = simple_filter(&a3, 1).unwrap();
        let hull = ideal_hull_triangulation(&a3, m2).unwrap();
        assert_eq!(hull.simplices, facet_triangulation(&a3, 1).unwrap().simplices);
        let smallest = *members_of_i_ab(&a3, 1).unwrap().iter().min_by_key(|s| s.len()).unwrap();
        assert_eq!(ideal_hull_triangulation(&a3, smallest).unwrap().len(), 1);

        let c2 = rs(Family::C, 2);
        let lam1_path = RootSet::from_indices([c2.index_of(&[1, 1]).unwrap(), c2.index_of(&[2, 1]).unwrap()]);
        assert_eq!(ideal_hull_triangulation(&c2, lam1_path).unwrap().len(), 1);
        assert_eq!(ideal_hull_triangulation(&c2, RootSet::EMPTY), Err(Error::NoApex));
    }

    #[test]
    fn halfspace_counts() {
        for n in 2..=5 {
            assert_eq!(
                halfspace_model(&rs(Family::A, n)).unwrap().inequalities.len(),
                (1 << (n + 1)) - 2
            );
            assert_eq!(halfspace_model(&rs(Family::C, n)).unwrap().inequalities.len(), 1 << n);
        }
        let a3 = rs(Family::A, 3);
        let m = halfspace_model(&a3).unwrap();
        let z = Q::from_integer(0);
        let o = Q::from_integer(1);
        assert_eq!(m.contains(&[z, z, z]), Membership::Interior);
        assert_eq!(m.contains(&[o, o, o]), Membership::Boundary);
        assert!(halfspace_model(&rs(Family::D, 4)).is_err());
    }

    #[test]
    fn facet_index_sets() {
        assert_eq!(facet_indices(&rs(Family::A, 4)), vec![0, 1, 2, 3]);
        assert_eq!(facet_indices(&rs(Family::C, 4)), vec![3]);
        assert_eq!(facet_indices(&rs(Family::B, 4)), vec![0, 3]);
        assert_eq!(facet_indices(&rs(Family::B, 3)), vec![0, 2]);
        assert_eq!(facet_indices(&rs(Family::D, 5)), vec![0, 3, 4]);
    }

    #[test]
    fn f_vectors() {
        assert_eq!(f_polynomial(&rs(Family::A, 3)).unwrap(), vec![12, 24, 14]);
        assert_eq!(f_polynomial(&rs(Family::A, 2)).unwrap(), vec![6, 6]);
        assert_eq!(f_polynomial(&rs(Family::C, 2)).unwrap(), vec![4, 4]);
        assert!(f_polynomial(&rs(Family::B, 2)).is_err());
    }

    #[test]
    fn digraphs() {
        let a2 = rs(Family::A, 2);
        let g = simplex_to_digraph(&a2, &[a2.alpha(0), a2.highest_root().clone()]).unwrap();
        assert_eq!(g.edges, vec![(0, 1), (0, 2)]);
        let back = digraph_to_simplex(
            &a2,
            &AntiStandardGraph {
                edges: vec![(2, 0), (2, 1)],
            },
        )
        .unwrap();
        assert!(back.contains(&a2.alpha_range(0, 1).neg()));
        let bad = AntiStandardGraph {
            edges: vec![(0, 1), (1, 2)],
        };
        assert_eq!(bad.validate(2), Err(AntiStandardViolation::SourceAndTarget(1)));
        let crossing = AntiStandardGraph {
            edges: vec![(0, 3), (1, 2), (1, 3)],
        };
        assert!(matches!(crossing.validate(3), Err(AntiStandardViolation::Crossing(..))));

        for n in 2..=4 {
            let r = rs(Family::A, n);
            for s in &full_triangulation(&r).unwrap().simplices {
                let g = simplex_to_digraph(&r, &s.vertices).unwrap();
                let mut v = s.vertices.clone();
                v.sort();
                assert_eq!(digraph_to_simplex(&r, &g).unwrap(), v);
                assert_eq!(g.sources().len(), s.apex + 1);
                assert_eq!(s.is_positive(), g.edges.iter().all(|&(a, b)| a < b));
            }
        }
    }

    #[test]
    fn antipodes() {
        let a3 = rs(Family::A, 3);
        assert_eq!(
            standard_antipode(&a3, 1).unwrap(),
            crate::weyl::simple_reflection(&a3, 0).unwrap()
        );
        for n in 1..=5 {
            let r = rs(Family::A, n);
            for i in 0..n {
                assert!(antipode_check(&r, i).unwrap(), "A{n} i={i}");
            }
        }
        assert!(standard_antipode(&rs(Family::C, 3), 0).is_err());
    }

    #[test]
    fn volume_ratios() {
        let c2 = volume_report(&rs(Family::C, 2)).unwrap();
        assert_eq!(c2.vol_pplus_over_vol_p, (3, 8));
        assert!(c2.consistent());
        for n in 2..=5 {
            let a = volume_report(&rs(Family::A, n)).unwrap();
            assert_eq!(a.vol_pplus_over_vol_p, (1, n as i128 + 1));
            assert_eq!(a.vol_p_over_vol_pi, binomial(2 * n as u128, n as u128));
            assert!(a.consistent());
            assert!(volume_report(&rs(Family::C, n)).unwrap().consistent());
        }
    }
}
