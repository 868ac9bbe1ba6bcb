//! Acceptance checks, each run on one root system against an independent oracle.
//!
//! Oracles never go through the border-strip machinery: polytopes are
//! rebuilt with the brute-force hull, digraphs are enumerated edge set by
//! edge set, and Weyl group statements are checked on every element.

use std::collections::{BTreeSet, HashSet};

use num_integer::binomial;
use serde::Serialize;

use crate::arrangement::{
    build_arrangement, characteristic_polynomial, characteristic_polynomial_a_closed, region_sign_vectors,
    regions_vs_facets,
};
use crate::error::Result;
use crate::hull::{self, Membership};
use crate::ideals::{
    abelian_ideals_below, enumerate_abelian_ideals, members_of_i_ab, right_set, simple_filter, up_set,
};
use crate::linalg::Q;
use crate::rootsys::{Family, RootSystem};
use crate::triangulate::{
    cone_simplex_contains, f_polynomial, full_triangulation, halfspace_model, in_positive_cone, normalized_volume,
    polytope_facets, positive_restriction, simplex_to_digraph, AntiStandardGraph, Triangulation,
};
use crate::weyl::{all_elements, from_word, minimal_coset_reps, Covector};

pub const CRITERIA: [(u8, &str); 11] = [
    (1, "facet counts"),
    (2, "triangulation counts"),
    (3, "positive triangulation counts"),
    (4, "unimodularity"),
    (5, "volume partition"),
    (6, "positive polytope equals polytope meet positive cone"),
    (7, "B3 counterexample"),
    (8, "arrangement"),
    (9, "f-vectors"),
    (10, "bijections"),
    (11, "property suites"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub system: String,
    pub outcome: Outcome,
    pub detail: String,
}

/// The (family, rank) cases each criterion covers at desk scale.
pub fn criterion_cases(k: u8) -> Vec<(Family, usize)> {
    let ac = |lo: usize, hi: usize| -> Vec<(Family, usize)> {
        (lo..=hi)
            .map(|n| (Family::A, n))
            .chain((lo..=hi).map(|n| (Family::C, n)))
            .collect()
    };
    match k {
        1 | 5 | 9 => ac(2, 5),
        2..=4 => ac(2, 6),
        6 => ac(2, 4),
        7 => vec![(Family::B, 3)],
        8 => {
            let mut v = ac(2, 5);
            v.extend([(Family::B, 4), (Family::D, 4)]);
            v
        }
        10 => ac(2, 5),
        11 => {
            let mut v: Vec<(Family, usize)> = (2..=6).map(|n| (Family::A, n)).collect();
            v.extend((2..=6).map(|n| (Family::C, n)));
            v
        }
        _ => Vec::new(),
    }
}

fn all_roots(rs: &RootSystem) -> Vec<Vec<i64>> {
    rs.positive_roots()
        .iter()
        .flat_map(|r| [r.coords().to_vec(), r.neg().into_coords()])
        .collect()
}

fn positive_with_origin(rs: &RootSystem) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> = rs.positive_roots().iter().map(|r| r.coords().to_vec()).collect();
    pts.push(vec![0; rs.rank()]);
    pts
}

fn catalan(n: u128) -> u128 {
    binomial(2 * n, n) / (n + 1)
}

fn is_ac(rs: &RootSystem) -> bool {
    matches!(rs.family(), Family::A | Family::C)
}

/// Facet count of 𝒫 from the closed form.
fn expected_facets(rs: &RootSystem) -> u128 {
    let n = rs.rank() as u32;
    match rs.family() {
        Family::A => (1u128 << (n + 1)) - 2,
        _ => 1u128 << n,
    }
}

type Verdict = Option<(bool, String)>;

/// Run criterion `k` on one root system; `None` when it does not apply.
pub fn run_criterion(k: u8, rs: &RootSystem) -> Result<Verdict> {
    let mut cache = Cache::default();
    run_cached(k, rs, &mut cache)
}

#[derive(Default)]
struct Cache {
    full: Option<Triangulation>,
    p_facets: Option<Vec<hull::Facet>>,
}

impl Cache {
    fn full(&mut self, rs: &RootSystem) -> Result<&Triangulation> {
        if self.full.is_none() {
            self.full = Some(full_triangulation(rs)?);
        }
        Ok(self.full.as_ref().unwrap())
    }

    /// Brute-force facets of conv(Φ), points indexed as in `all_roots`.
    fn p_facets(&mut self, rs: &RootSystem) -> &[hull::Facet] {
        self.p_facets.get_or_insert_with(|| hull::facets(&all_roots(rs)))
    }
}

fn run_cached(k: u8, rs: &RootSystem, cache: &mut Cache) -> Result<Verdict> {
    let n = rs.rank();
    let nn = n as u128;
    Ok(match k {
        1 if is_ac(rs) && n <= 5 => {
            let brute = cache.p_facets(rs).len() as u128;
            let orbit = polytope_facets(rs)?.len() as u128;
            let want = expected_facets(rs);
            Some((
                brute == want && orbit == want,
                format!("hull {brute}, orbits {orbit}, closed form {want}"),
            ))
        }
        2 if is_ac(rs) && n <= 6 => {
            let got = cache.full(rs)?.len() as u128;
            let want = match rs.family() {
                Family::A => (nn + 1) * catalan(nn),
                _ => 1u128 << (2 * nn - 1),
            };
            Some((got == want, format!("|T| = {got}, expected {want}")))
        }
        3 if is_ac(rs) && n <= 6 => {
            let got = positive_restriction(cache.full(rs)?).len() as u128;
            let want = match rs.family() {
                Family::A => catalan(nn),
                _ => binomial(2 * nn - 1, nn),
            };
            Some((got == want, format!("|T+| = {got}, expected {want}")))
        }
        4 if is_ac(rs) && n <= 6 => {
            let t = cache.full(rs)?;
            let bad = t
                .simplices
                .iter()
                .filter(|s| normalized_volume(rs, &s.vertices) != 1)
                .count();
            Some((bad == 0, format!("{bad} of {} simplices not unimodular", t.len())))
        }
        5 if is_ac(rs) && n <= 5 => {
            let pts = all_roots(rs);
            let faces: Vec<Vec<Vec<i64>>> = cache
                .p_facets(rs)
                .iter()
                .map(|f| f.points.iter().map(|&i| pts[i].clone()).collect())
                .collect();
            let oracle = hull::fan_volume(&faces) as u128;
            let got = cache.full(rs)?.total_volume();
            Some((got == oracle, format!("sum over T {got}, fan oracle {oracle}")))
        }
        6 if is_ac(rs) && n <= 4 => {
            let (checked, mismatches) = positive_box(rs, cache)?;
            Some((
                mismatches == 0,
                format!("{mismatches} mismatches over {checked} half-integer points"),
            ))
        }
        7 if rs.family() == Family::B && n == 3 => {
            let (ok, detail) = b3_counterexample(rs)?;
            Some((ok, detail))
        }
        8 => arrangement_check(rs)?,
        9 if is_ac(rs) && n <= 5 => {
            let pts = all_roots(rs);
            let brute: Vec<u128> = hull::face_vector_with(&pts, cache.p_facets(rs))
                .into_iter()
                .map(|x| x as u128)
                .collect();
            let closed = f_polynomial(rs)?;
            let mut ok = brute == closed;
            if rs.family() == Family::A && n == 3 {
                ok &= brute == vec![12, 24, 14];
            }
            Some((ok, format!("hull {brute:?}, closed form {closed:?}")))
        }
        10 if is_ac(rs) && n <= 5 => Some(bijections(rs, cache)?),
        11 if is_ac(rs) && n <= 6 => Some(properties(rs)?),
        _ => None,
    })
}

/// All criteria, run on one root system; inapplicable ones are skipped.
pub fn run_all(rs: &RootSystem) -> Vec<Check> {
    let all: Vec<u8> = CRITERIA.iter().map(|c| c.0).collect();
    run_some(rs, &all)
}

/// The listed criteria on one root system, sharing intermediate results.
/// An error inside a check is reported as a failure of that criterion.
pub fn run_some(rs: &RootSystem, which: &[u8]) -> Vec<Check> {
    let mut cache = Cache::default();
    let mut out = Vec::new();
    for (k, name) in CRITERIA.iter().copied().filter(|c| which.contains(&c.0)) {
        let (outcome, detail) = match run_cached(k, rs, &mut cache) {
            Ok(Some((true, d))) => (Outcome::Pass, d),
            Ok(Some((false, d))) => (Outcome::Fail, d),
            Ok(None) => (Outcome::Skip, "not applicable".to_string()),
            Err(e) => (Outcome::Fail, format!("error: {e}")),
        };
        out.push(Check {
            criterion: k,
            name: name.to_string(),
            system: rs.rstype().to_string(),
            outcome,
            detail,
        });
    }
    out
}

fn positive_box(rs: &RootSystem, cache: &mut Cache) -> Result<(usize, usize)> {
    let n = rs.rank();
    let pts = positive_with_origin(rs);
    let plus_facets = hull::facets(&pts);
    let model = halfspace_model(rs)?;
    let tplus = positive_restriction(cache.full(rs)?);
    let m = *rs.marks().iter().max().unwrap();
    let steps: Vec<Q> = (-2 * m..=2 * m).map(|j| Q::new(j as i128, 2)).collect();
    let mut idx = vec![0usize; n];
    let (mut checked, mut mismatches) = (0, 0);
    loop {
        let x: Vec<Q> = idx.iter().map(|&i| steps[i]).collect();
        let oracle = hull::membership(&plus_facets, &x) != Membership::Outside;
        let meet = model.contains(&x) != Membership::Outside && in_positive_cone(&x);
        // Simplices of T+ lie in P+ by convexity, so only covering needs a test.
        let covered = !oracle || tplus.simplices.iter().any(|s| cone_simplex_contains(&s.vertices, &x));
        if oracle != meet || !covered {
            mismatches += 1;
        }
        checked += 1;
        let mut d = 0;
        while d < n {
            idx[d] += 1;
            if idx[d] < steps.len() {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
        if d == n {
            break;
        }
    }
    Ok((checked, mismatches))
}

fn b3_counterexample(rs: &RootSystem) -> Result<(bool, String)> {
    let q = |a: i128, b: i128| Q::new(a, b);
    let x = [q(1, 2), q(0, 1), q(1, 1)];
    let v = [1i64, 0, 2];
    let roots = all_roots(rs);
    let p = hull::facets(&roots);
    let plus_pts = positive_with_origin(rs);
    let plus = hull::facets(&plus_pts);
    let on_boundary = hull::membership(&p, &x) == Membership::Boundary;
    let outside_plus = hull::membership(&plus, &x) == Membership::Outside;
    let in_cone = in_positive_cone(&x);

    // Largest t with t·v ∈ P+.
    let mut exit: Option<Q> = None;
    for f in &plus {
        let slope: i64 = f.functional[1..].iter().zip(&v).map(|(a, b)| a * b).sum();
        if slope < 0 {
            let t = q(f.functional[0] as i128, -slope as i128);
            exit = Some(exit.map_or(t, |e| e.min(t)));
        }
    }
    let exit_ok = exit == Some(q(1, 3));

    // The tight facet is s₂s₃s₂ applied to a standard parabolic facet.
    let std_facet = [[0i64, 1, 2], [1, 1, 2], [1, 2, 2]];
    let w = from_word(rs, &[1, 2, 1])?;
    let mut image: Vec<Vec<i64>> = std_facet.iter().map(|r| w.apply(r)).collect();
    image.sort();
    let mut want = vec![vec![0i64, -1, 0], vec![1, 1, 2], vec![1, 0, 0]];
    want.sort();
    let tight = p.iter().any(|f| {
        let val: Q = q(f.functional[0] as i128, 1)
            + f.functional[1..]
                .iter()
                .zip(&x)
                .map(|(a, b)| q(*a as i128, 1) * b)
                .sum::<Q>();
        val == q(0, 1) && want.iter().all(|c| f.points.iter().any(|&i| roots[i] == *c))
    });
    let ok = on_boundary && outside_plus && in_cone && exit_ok && image == want && tight;
    let exit_str = exit.map_or("none".to_string(), |e| e.to_string());
    Ok((
        ok,
        format!(
            "boundary of P {on_boundary}, outside P+ {outside_plus}, exit parameter {exit_str}, tight facet {tight}"
        ),
    ))
}

fn arrangement_check(rs: &RootSystem) -> Result<Verdict> {
    let n = rs.rank();
    match rs.family() {
        Family::A | Family::C if n <= 5 => {
            let hs = build_arrangement(rs)?;
            let (chi, regions) = characteristic_polynomial(&hs, n);
            let direct = region_sign_vectors(&hs, n);
            let want = expected_facets(rs) as u64;
            let mut ok = regions == want && direct.len() as u64 == regions;
            if rs.family() == Family::A {
                ok &= chi == characteristic_polynomial_a_closed(n);
                // n + 1 hyperplanes in general position: exactly two sign vectors are missing.
                ok &= direct.len() == (1 << hs.len()) - 2;
            }
            ok &= regions_vs_facets(rs)?.coincide;
            Ok(Some((
                ok,
                format!(
                    "chi {chi:?}, regions {regions}, sign vectors {}, facets {want}",
                    direct.len()
                ),
            )))
        }
        Family::B | Family::D if (4..=5).contains(&n) => {
            let r = regions_vs_facets(rs)?;
            let mut ok = !r.coincide;
            if rs.family() == Family::B {
                ok &= r.highest_short_parallel == Some(true);
            }
            Ok(Some((ok, format!("{} separation witnesses", r.witnesses.len()))))
        }
        _ => Ok(None),
    }
}

fn bijections(rs: &RootSystem, cache: &mut Cache) -> Result<(bool, String)> {
    let n = rs.rank();
    let nn = n as u128;
    let all_ideals = enumerate_abelian_ideals(rs);
    let mut ok = true;
    let mut notes = Vec::new();
    for i in rs.long_simple() {
        if rs.marks()[i] != 1 {
            continue;
        }
        let m = simple_filter(rs, i)?;
        let pairs = abelian_ideals_below(rs, i)?;
        let want = match rs.family() {
            Family::A => binomial(nn + 1, i as u128 + 1),
            _ => 1u128 << nn,
        };
        let ideals: BTreeSet<_> = pairs.iter().map(|p| p.0).collect();
        let brute: BTreeSet<_> = all_ideals.iter().copied().filter(|s| s.is_subset(m)).collect();
        ok &= pairs.len() as u128 == want && ideals.len() == pairs.len() && ideals == brute;
        notes.push(format!("W^{} {}", i + 1, pairs.len()));
    }
    if rs.family() == Family::A {
        let brute = brute_anti_standard(n);
        let t = cache.full(rs)?;
        let images: HashSet<AntiStandardGraph> = t
            .simplices
            .iter()
            .map(|s| simplex_to_digraph(rs, &s.vertices))
            .collect::<Result<_>>()?;
        ok &= images.len() == t.len() && images == brute;
        notes.push(format!("anti-standard {} / |T| {}", brute.len(), t.len()));
    }
    Ok((ok, notes.join(", ")))
}

/// Every n-anti-standard digraph on `0..=n`, by enumeration of n-edge sets.
fn brute_anti_standard(n: usize) -> HashSet<AntiStandardGraph> {
    let arcs: Vec<(usize, usize)> = (0..=n)
        .flat_map(|s| (0..=n).filter(move |&t| t != s).map(move |t| (s, t)))
        .collect();
    let mut out = HashSet::new();
    let mut pick = Vec::new();
    fn go(
        arcs: &[(usize, usize)],
        n: usize,
        start: usize,
        pick: &mut Vec<(usize, usize)>,
        out: &mut HashSet<AntiStandardGraph>,
    ) {
        if pick.len() == n {
            let src: HashSet<usize> = pick.iter().map(|e| e.0).collect();
            let tgt: HashSet<usize> = pick.iter().map(|e| e.1).collect();
            let covered = (0..=n).all(|v| src.contains(&v) != tgt.contains(&v));
            let ordered = pick.iter().all(|a| pick.iter().all(|b| !(a.0 < b.0 && a.1 > b.1)));
            if covered && ordered {
                let mut edges = pick.clone();
                edges.sort();
                out.insert(AntiStandardGraph { edges });
            }
            return;
        }
        for k in start..arcs.len() {
            pick.push(arcs[k]);
            go(arcs, n, k + 1, pick, out);
            pick.pop();
        }
    }
    go(&arcs, n, 0, &mut pick, &mut out);
    out
}

fn properties(rs: &RootSystem) -> Result<(bool, String)> {
    let n = rs.rank();
    let mut ok = true;
    let mut notes = Vec::new();

    let total: usize = rs
        .long_simple()
        .into_iter()
        .map(|i| members_of_i_ab(rs, i).map(|m| m.len()))
        .sum::<Result<usize>>()?;
    ok &= total == 1 << (n - 1);
    notes.push(format!("I_ab total {total}"));

    if n == 4 {
        let mut pairs = 0usize;
        for i in rs.long_simple() {
            let m: Vec<usize> = simple_filter(rs, i)?.iter().collect();
            for w in minimal_coset_reps(rs, i)? {
                for &a in &m {
                    for &b in &m {
                        let (ga, gb) = (rs.positive_root(a).coords(), rs.positive_root(b).coords());
                        if a != b && rs.le(ga, gb) {
                            pairs += 1;
                            let d: Vec<i64> = w.apply(gb).iter().zip(w.apply(ga)).map(|(x, y)| x - y).collect();
                            ok &= d.iter().all(|&c| c >= 0);
                        }
                    }
                }
            }
        }
        notes.push(format!("order preservation on {pairs} pairs"));
    }

    if rs.family() == Family::C && n == 4 {
        let (cases, good) = sign_propagation(rs)?;
        ok &= cases == good;
        notes.push(format!("sign propagation {good}/{cases}"));
    }

    if n <= 4 {
        // w ∈ W^i iff N̄(w) ⊆ M_i, over all of W.
        let elements = all_elements(rs);
        for i in rs.long_simple() {
            let m = simple_filter(rs, i)?;
            let reps: HashSet<_> = minimal_coset_reps(rs, i)?.into_iter().collect();
            ok &= elements
                .iter()
                .all(|w| reps.contains(w) == w.co_inversion_set(rs).is_subset(m));
        }
        notes.push(format!("coset criterion over {} elements", elements.len()));
    }
    Ok((ok, notes.join(", ")))
}

/// Exhaustive sign propagation over t, w ∈ W^n and long positive λ (type C).
fn sign_propagation(rs: &RootSystem) -> Result<(usize, usize)> {
    let n = rs.rank();
    let m = simple_filter(rs, n - 1)?;
    let (mut cases, mut good) = (0, 0);
    for w in minimal_coset_reps(rs, n - 1)? {
        for t in 0..n {
            let om = Covector::fundamental(n, t);
            for (k, lambda) in rs.positive_roots().iter().enumerate() {
                if !rs.is_long(k) {
                    continue;
                }
                let v = om.eval(&w.apply(lambda.coords()));
                let at = |b: usize| om.eval(&w.apply(rs.positive_root(b).coords()));
                if v < 0 {
                    cases += 1;
                    good += usize::from(up_set(rs, lambda)?.iter().all(|b| at(b) <= 0));
                } else if v > 0 {
                    cases += 1;
                    good += usize::from(right_set(rs, lambda)?.intersection(m).iter().all(|b| at(b) >= 0));
                }
            }
        }
    }
    Ok((cases, good))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::C, 2), (Family::C, 3)] {
            let rs = RootSystem::new(f, n).unwrap();
            for c in run_all(&rs) {
                assert_ne!(c.outcome, Outcome::Fail, "{c:?}");
            }
        }
    }

    #[test]
    fn anti_standard_brute_force() {
        assert_eq!(brute_anti_standard(1).len(), 2);
        assert_eq!(brute_anti_standard(2).len(), 6);
        assert_eq!(brute_anti_standard(3).len(), 20);
    }
}
